#pragma once
#include "eexact/module.hpp"
#include "eexact/rng.hpp"

namespace eexact {

// Socle of the torsion part: generated by (di/p) ei for each prime p | di.
Submodule socle(const FgModule& M);

// S is essential in M iff every nonzero submodule meets it. Decided by the
// two-part criterion: S has full rank, and S contains the torsion socle.
bool is_essential(const Submodule& S, const FgModule& M);

// Essentiality of S inside another submodule T (S <= T required). Computed in
// T's own coordinates via submodule_structure.
bool is_essential_in(const Submodule& S, const Submodule& T);

struct ComplementResult {
  Submodule complement;
  bool meets_trivially;  // verified: S ∩ C = 0
  bool sum_essential;    // verified: S + C essential in the ambient
};

// Greedy certified search for C with S ∩ C = 0 and S + C essential.
// enumeration_order = 0 walks candidates in a fixed lexicographic order;
// other values permute the walk deterministically (same certificate contract,
// possibly a different complement). Raises SearchExhausted when the ambient
// is too large to enumerate (torsion order or 7^rank beyond the cap).
ComplementResult complement(const Submodule& S, long enumeration_order = 0);

// A random injective endomorphism with essential image; re-verified before
// returning.
Morphism random_essential_mono(const FgModule& M, Rng& rng);

}  // namespace eexact
