#pragma once
#include <json.hpp>
#include <string>

#include "eexact/diagrams.hpp"
#include "eexact/spectral.hpp"

namespace eexact {

using Json = nlohmann::json;

// One parsed input document (schema "1"). Modules may arrive either as an
// invariant list or as a presentation (generators + relations, one relation
// per row); presentations are canonicalized on load but kept around for `snf`.
struct Document {
  enum class Kind { Module, Morphism, Complex, Diagram };
  Kind kind = Kind::Module;

  FgModule module;
  bool from_presentation = false;
  IntMatrix relations;  // rows are relations over `generators` columns

  Morphism morphism;
  CochainComplex complex;
  Diagram diagram;
};

Document parse_document(const std::string& text);

// payload bodies (no schema/kind wrapper)
Json ring_json(const RingSpec& r);
Json module_json(const FgModule& M);
Json morphism_json(const Morphism& f);
Json complex_json(const CochainComplex& c);
Json diagram_json(const Diagram& d);

// full documents, round-trippable through parse_document
Json module_document(const FgModule& M);
Json morphism_document(const Morphism& f);
Json complex_document(const CochainComplex& c);
Json diagram_document(const Diagram& d);

// report pieces
Json matrix_json(const IntMatrix& A);
Json coords_json(const Coords& x);
Json submodule_json(const Submodule& S);
Json spectral_json(const SpectralObject& s);
Json topology_json(const GabrielTopology& F);
Json localized_module_json(const LocalizedModule& L);
Json lemma_report_json(const LemmaReport& r);
Json no_functor_json(const NoFunctorDemo& d);

// "all" | "none" | "p1,p2,..."
GabrielTopology parse_primes_flag(const std::string& text);

}  // namespace eexact
