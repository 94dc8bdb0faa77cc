#pragma once
#include <cstdint>
#include <string>

#include "eexact/complexes.hpp"
#include "eexact/essentials.hpp"
#include "eexact/localize.hpp"
#include "eexact/rng.hpp"

namespace eexact {

// rows stacked top to bottom; verticals[r][j] maps rows[r].module_at(j) down
// into rows[r+1].module_at(j). Commutativity of every square is checked at
// construction.
struct Diagram {
  std::vector<CochainComplex> rows;
  std::vector<std::vector<Morphism>> verticals;
};

Diagram make_diagram(std::vector<CochainComplex> rows, std::vector<std::vector<Morphism>> verticals);

// --- randomized building blocks ---

FgModule random_module(const RingSpec& ring, Rng& rng);
Morphism random_morphism(const FgModule& M, const FgModule& N, Rng& rng);
Morphism random_automorphism(const FgModule& M, Rng& rng);
Morphism inverse_automorphism(const Morphism& a);
Submodule random_submodule(const FgModule& M, Rng& rng);

// injective with essential image, into a possibly larger module; when
// `support` is given, the extension only grows along primes of that topology
Morphism random_essential_extension(const FgModule& M, Rng& rng,
                                    const GabrielTopology* support = nullptr);

// --- complex generators (unpadded rows unless stated) ---

// exact at every interior position
CochainComplex gen_exact_complex(const RingSpec& ring, int maps, Rng& rng);
// e-exact at every interior position; `support` constrains the gaps between
// image and kernel to the given primes (making the rows F-exact as well);
// `free_positions` forces the named modules to be torsionfree
CochainComplex gen_e_exact_complex(const RingSpec& ring, int maps, Rng& rng,
                                   const GabrielTopology* support = nullptr,
                                   const std::vector<int>* free_positions = nullptr);
// a complex with no exactness promise (scaffold with scalar damage)
CochainComplex gen_perturbed_complex(const RingSpec& ring, int maps, Rng& rng);
// 0 -> A -> B -> C -> 0, padded, e-exact; strictness is up to the dice
CochainComplex gen_short_e_exact(const RingSpec& ring, Rng& rng);
// morphism with essential image
Morphism gen_e_epi(const RingSpec& ring, Rng& rng);

// --- homological lemma harness ---

enum class LemmaKind { Four, Five, Grid, FourF };

const char* lemma_kind_name(LemmaKind k);

// a ladder (or grid) instance shaped for one lemma part; hypothesis checks
// and conclusion checks live in check_lemma
Diagram gen_chain_diagram(LemmaKind kind, int part, Rng& rng, const GabrielTopology& F);

struct LemmaViolation {
  int part;
  std::uint64_t instance_seed;
  std::string detail;
  std::string diagram_json;
};

struct LemmaPartStats {
  int part = 0;
  int requested = 0;
  int instances = 0;         // hypothesis-satisfying diagrams actually checked
  int failed_instances = 0;  // instances whose 50 attempts all missed the hypotheses
  long attempts = 0;
  std::vector<LemmaViolation> violations;
};

struct LemmaReport {
  LemmaKind kind;
  std::uint64_t seed = 0;
  GabrielTopology topology;
  std::vector<LemmaPartStats> parts;
};

// Empirical validation: per part, `trials` independent instances are built
// (each instance gets up to 50 generation attempts, with per-instance derived
// seeds so results do not depend on scheduling), hypotheses are re-checked
// with the library's own predicates, and every conclusion failure is recorded
// as a violation. Throws GenerationExhausted when fewer than 10% of the
// requested instances could be built for some part. `parallel` switches the
// OpenMP instance loop; reports are byte-identical either way.
LemmaReport check_lemma(LemmaKind kind, int trials, std::uint64_t seed, const GabrielTopology& F,
                        bool parallel = true);

std::string lemma_report_text(const LemmaReport& r);

// fixed-seed demonstration of why no exact functor can decide e-exactness:
// a functor inverting essential monos must kill singular modules, and then
// cannot see the failure in S -> S (+) S -> 0
struct NoFunctorDemo {
  bool witness_module_singular = false;    // Z/2 over Z/4 is singular
  bool witness_complex_not_e_exact = false;  // S -> S+S -> 0 fails
  int essential_monos_localized = 0;       // all became isomorphisms
  int essential_monos_checked = 0;
  int extensions_collapsed = 0;  // essential extension pairs localizing to isos
  int extensions_checked = 0;
  bool z_witness_loc_exact = false;   // Z/2 -> Z/2+Z/2 -> 0 is Goldie-exact
  bool z_witness_not_e_exact = false; // ...but not e-exact
  bool conclusion = false;            // all of the above in place
};

NoFunctorDemo no_functor_demo();
std::string no_functor_text(const NoFunctorDemo& d);

// Exploratory search for why the nonsingularity hypothesis in the four-lemma
// cannot be dropped: instances satisfy every hypothesis of part 1 except that
// the second bottom module is NOT nonsingular. Violations here are expected
// (they demonstrate necessity) and are reported, never asserted impossible.
struct NecessityReport {
  int trials = 0;
  int instances = 0;   // hypothesis-minus-one satisfying diagrams
  int violations = 0;  // conclusion failures among them
  std::uint64_t first_seed = 0;  // seed of the first violation, if any
  std::string first_witness;     // its diagram, serialized
};

NecessityReport necessity_search(int trials, std::uint64_t seed);
std::string necessity_text(const NecessityReport& r);

}  // namespace eexact
