#pragma once
#include <map>

#include "eexact/complexes.hpp"
#include "eexact/module.hpp"

namespace eexact {

// Isomorphism class of the injective envelope: a Q-multiplicity (the rank)
// plus, per prime, the number of Pruefer summands Z(p^inf) — for f.g. M the
// number of invariant factors p divides.
struct SpectralObject {
  int rank = 0;
  std::map<Int, int> local;

  bool is_zero() const { return rank == 0 && local.empty(); }
  friend bool operator==(const SpectralObject&, const SpectralObject&) = default;
};

SpectralObject spectral_sum(const SpectralObject& a, const SpectralObject& b);
SpectralObject spectral_invariant(const FgModule& M);
SpectralObject spectral_invariant(const Submodule& S);

// kernel/image/cokernel of f as seen in the spectral category, computed via
// certified complements (left exactness: kernel is honest, image is the part
// of the source that survives, cokernel is a complement of the image).
struct SpecParts {
  SpectralObject kernel, image, cokernel;
};

SpecParts spec_parts(const Morphism& f, long enumeration_order = 0);

// Exactness after applying the spectral functor: per interior position, the
// image of a complement of the incoming kernel must be essential in the
// outgoing kernel.
bool is_spec_exact_at(const CochainComplex& C, int j, long enumeration_order = 0);
bool is_spec_exact(const CochainComplex& C, long enumeration_order = 0);

}  // namespace eexact
