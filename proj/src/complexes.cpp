#include "eexact/complexes.hpp"

#include "eexact/essentials.hpp"

namespace eexact {

CochainComplex make_complex(std::vector<Morphism> diffs, bool pad_left, bool pad_right) {
  if (diffs.empty()) fail(ErrorKind::BadInput, "complex needs at least one map");
  for (std::size_t i = 0; i + 1 < diffs.size(); ++i) {
    if (diffs[i].target != diffs[i + 1].source)
      fail(ErrorKind::NotComposable, "complex maps do not chain at position " + std::to_string(i + 1));
    if (!is_zero_morphism(compose(diffs[i + 1], diffs[i])))
      fail(ErrorKind::NotAComplex, "composite nonzero at position " + std::to_string(i + 1));
  }
  return {std::move(diffs), pad_left, pad_right};
}

std::vector<int> interior_positions(const CochainComplex& C) {
  std::vector<int> out;
  for (int j = 0; j <= C.maps(); ++j) {
    bool has_in = j > 0 || C.pad_left;
    bool has_out = j < C.maps() || C.pad_right;
    if (has_in && has_out) out.push_back(j);
  }
  return out;
}

Submodule incoming_image(const CochainComplex& C, int j) {
  return j == 0 ? zero_submodule(C.module_at(0)) : image(C.diffs[j - 1]);
}

Submodule outgoing_kernel(const CochainComplex& C, int j) {
  return j == C.maps() ? full_submodule(C.module_at(j)) : kernel(C.diffs[j]);
}

FgModule cohomology_at(const CochainComplex& C, int j) {
  Submodule ker = outgoing_kernel(C, j);
  Submodule im = incoming_image(C, j);
  SubStructure st = submodule_structure(ker);
  std::vector<Coords> pulled;
  for (const Coords& g : im.generators) pulled.push_back(abs_coords(st, g));
  return quotient(st.abs, span(st.abs, std::move(pulled))).mod;
}

bool is_exact(const CochainComplex& C) {
  for (int j : interior_positions(C))
    if (!submodule_eq(incoming_image(C, j), outgoing_kernel(C, j))) return false;
  return true;
}

bool is_e_exact(const CochainComplex& C) {
  for (int j : interior_positions(C))
    if (!is_essential_in(incoming_image(C, j), outgoing_kernel(C, j))) return false;
  return true;
}

bool is_e_epi(const Morphism& f) { return is_essential(image(f), f.target); }

bool is_F_exact(const CochainComplex& C, const GabrielTopology& F) {
  if (!C.ring().is_integers()) fail(ErrorKind::RingMismatch, "F-exactness is set up over Z");
  for (int j : interior_positions(C))
    if (!is_gabriel_torsion(F, cohomology_at(C, j))) return false;
  return true;
}

CochainComplex essential_extension_of(const FgModule& C) {
  if (!C.ring.is_integers()) fail(ErrorKind::RingMismatch, "essential_extension_of is set up over Z");
  if (C.rank() > 0) fail(ErrorKind::NotSingular, "module has a free part");
  const int k = C.size();
  FgModule F1 = free_module(C.ring, k), F2 = free_module(C.ring, k);
  Morphism mono = make_morphism(F1, F2, diag(k, k, C.invariants));
  Morphism epi = make_morphism(F2, C, IntMatrix::identity(k));
  CochainComplex out = make_complex({mono, epi}, true, true);
  // contract says this is short exact with essential first map; re-verify
  if (!is_exact(out) || !is_essential(image(mono), F2) || !is_e_epi(epi))
    fail(ErrorKind::NotSingular, "essential extension failed verification");
  return out;
}

}  // namespace eexact
