#pragma once
#include "eexact/module.hpp"
#include "eexact/torsion.hpp"

namespace eexact {

// M0 --f0--> M1 --f1--> ... --f(m-1)--> Mm, consecutive composites zero.
// pad_left prepends a virtual 0 -> M0, pad_right appends Mm -> 0; padding a
// side turns the end position into one where exactness is a real condition
// (injectivity of f0, resp. surjectivity-style conditions at Mm).
struct CochainComplex {
  std::vector<Morphism> diffs;  // nonempty
  bool pad_left = false, pad_right = false;

  int maps() const { return static_cast<int>(diffs.size()); }
  const FgModule& module_at(int j) const {  // j in [0, maps()]
    return j == 0 ? diffs[0].source : diffs[j - 1].target;
  }
  const RingSpec& ring() const { return diffs[0].source.ring; }
};

CochainComplex make_complex(std::vector<Morphism> diffs, bool pad_left = false,
                            bool pad_right = false);

// Positions where an exactness condition exists: modules with both an
// incoming and an outgoing map (virtual zero maps from padding count).
std::vector<int> interior_positions(const CochainComplex& C);

// image of the incoming map at position j (zero submodule at a padded left end)
Submodule incoming_image(const CochainComplex& C, int j);
// kernel of the outgoing map at position j (everything at a padded right end)
Submodule outgoing_kernel(const CochainComplex& C, int j);

// ker/im at one interior position, as a module in canonical form
FgModule cohomology_at(const CochainComplex& C, int j);

bool is_exact(const CochainComplex& C);

// image essential in kernel at every interior position
bool is_e_exact(const CochainComplex& C);

// image of f essential in the whole target
bool is_e_epi(const Morphism& f);

// cohomology is F-torsion at every interior position (ring Z)
bool is_F_exact(const CochainComplex& C, const GabrielTopology& F);

// 0 -> Z^k --diag(di)--> Z^k --proj--> C -> 0 for finite C: a short exact
// complex exhibiting C as quotient of an essential extension pair. Errors
// with NotSingular when C has a free part.
CochainComplex essential_extension_of(const FgModule& C);

}  // namespace eexact
