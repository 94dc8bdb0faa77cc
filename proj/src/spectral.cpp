#include "eexact/spectral.hpp"

#include "eexact/essentials.hpp"

namespace eexact {

SpectralObject spectral_sum(const SpectralObject& a, const SpectralObject& b) {
  SpectralObject s = a;
  s.rank += b.rank;
  for (const auto& [p, m] : b.local) s.local[p] += m;
  return s;
}

SpectralObject spectral_invariant(const FgModule& M) {
  SpectralObject s;
  s.rank = M.rank();
  for (const Int& d : M.invariants)
    if (d != 0)
      for (const Int& p : prime_factors(d)) s.local[p] += 1;
  return s;
}

SpectralObject spectral_invariant(const Submodule& S) {
  return spectral_invariant(submodule_structure(S).abs);
}

SpecParts spec_parts(const Morphism& f, long enumeration_order) {
  Submodule ker = kernel(f);
  Submodule co_ker = complement(ker, enumeration_order).complement;
  Submodule im = image_of(f, co_ker);  // complement maps injectively onto an essential piece of im(f)
  Submodule co_im = complement(im, enumeration_order).complement;
  return {spectral_invariant(ker), spectral_invariant(im), spectral_invariant(co_im)};
}

bool is_spec_exact_at(const CochainComplex& C, int j, long enumeration_order) {
  Submodule img = j == 0 ? zero_submodule(C.module_at(0))
                         : image_of(C.diffs[j - 1],
                                    complement(kernel(C.diffs[j - 1]), enumeration_order).complement);
  return is_essential_in(img, outgoing_kernel(C, j));
}

bool is_spec_exact(const CochainComplex& C, long enumeration_order) {
  for (int j : interior_positions(C))
    if (!is_spec_exact_at(C, j, enumeration_order)) return false;
  return true;
}

}  // namespace eexact
