#include "eexact/localize.hpp"

#include <algorithm>

namespace eexact {

namespace {

std::vector<int> surviving_indices(const FgModule& M, const GabrielTopology& F) {
  std::vector<int> idx;
  for (int i = 0; i < M.size(); ++i) {
    const Int& d = M.invariants[i];
    if (d == 0 || d != F.supported_part(d)) idx.push_back(i);
  }
  return idx;
}

Int strip(const GabrielTopology& F, const Int& d) {
  return d == 0 ? d : Int(d / F.supported_part(d));
}

// the integer model of M_F: P-parts of the invariants stripped, units dropped
FgModule stripped_module(const FgModule& M, const GabrielTopology& F) {
  std::vector<Int> inv;
  for (int i : surviving_indices(M, F)) inv.push_back(strip(F, M.invariants[i]));
  return make_module(RingSpec::integers(), std::move(inv));
}

Morphism stripped_morphism(const Morphism& f, const GabrielTopology& F) {
  IntMatrix A = submatrix_cols(submatrix_rows(f.matrix, surviving_indices(f.target, F)),
                               surviving_indices(f.source, F));
  return make_morphism(stripped_module(f.source, F), stripped_module(f.target, F), std::move(A));
}

Rat rat_mod(const Rat& v, const Int& d) {
  Int num = v.get_num(), den = v.get_den();
  Int inv;
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t()) == 0)
    fail(ErrorKind::BadInput, "denominator not invertible at this invariant");
  Int r = num * inv;
  mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), d.get_mpz_t());
  return Rat(r);
}

void require_z(const FgModule& M) {
  if (!M.ring.is_integers()) fail(ErrorKind::RingMismatch, "localization is set up over Z");
}

}  // namespace

LocalizedModule localize_module(const FgModule& M, const GabrielTopology& F) {
  require_z(M);
  return {F, stripped_module(M, F).invariants};
}

LocalizedMorphism localize_morphism(const Morphism& f, const GabrielTopology& F) {
  require_z(f.source);
  Morphism g = stripped_morphism(f, F);
  LocalizedMorphism out{{F, g.source.invariants}, {F, g.target.invariants}, {}};
  out.matrix.reserve(g.matrix.a.size());
  for (const Int& v : g.matrix.a) out.matrix.emplace_back(v);
  return out;
}

LocalizedMorphism compose(const LocalizedMorphism& g, const LocalizedMorphism& f) {
  if (f.target != g.source) fail(ErrorKind::NotComposable, "target(f) != source(g)");
  LocalizedMorphism out{f.source, g.target, std::vector<Rat>(
      static_cast<std::size_t>(g.target.size()) * f.source.size())};
  for (int i = 0; i < g.target.size(); ++i)
    for (int k = 0; k < g.source.size(); ++k) {
      if (g.at(i, k) == 0) continue;
      for (int j = 0; j < f.source.size(); ++j) out.at(i, j) += g.at(i, k) * f.at(k, j);
    }
  for (int i = 0; i < g.target.size(); ++i) {
    const Int& d = g.target.invariants[i];
    if (d == 0) continue;
    for (int j = 0; j < f.source.size(); ++j) out.at(i, j) = rat_mod(out.at(i, j), d);
  }
  return out;
}

std::vector<Rat> localize_coords(const FgModule& M, const GabrielTopology& F, const Coords& x) {
  require_z(M);
  Coords xr = reduce_coords(M, x);
  std::vector<Rat> out;
  for (int i : surviving_indices(M, F)) {
    Int d = strip(F, M.invariants[i]);
    Rat v(xr[i]);
    out.push_back(d == 0 ? v : rat_mod(v, d));
  }
  return out;
}

std::vector<Rat> apply(const LocalizedMorphism& f, const std::vector<Rat>& x) {
  if (static_cast<int>(x.size()) != f.source.size())
    fail(ErrorKind::ForeignElement, "coordinate count");
  std::vector<Rat> y(f.target.size(), Rat(0));
  for (int i = 0; i < f.target.size(); ++i) {
    for (int j = 0; j < f.source.size(); ++j) y[i] += f.at(i, j) * x[j];
    const Int& d = f.target.invariants[i];
    if (d != 0) y[i] = rat_mod(y[i], d);
  }
  return y;
}

bool localized_equal(const LocalizedModule& M, const std::vector<Rat>& x, const std::vector<Rat>& y) {
  if (static_cast<int>(x.size()) != M.size() || static_cast<int>(y.size()) != M.size())
    fail(ErrorKind::ForeignElement, "coordinate count");
  for (int i = 0; i < M.size(); ++i) {
    const Int& d = M.invariants[i];
    if (d == 0) {
      if (x[i] != y[i]) return false;
    } else if (rat_mod(x[i] - y[i], d) != 0) {
      return false;
    }
  }
  return true;
}

bool is_localized_iso(const LocalizedMorphism& f) {
  // clear denominators (they are units at the surviving invariants) to get an
  // integer model g with f iso iff g_F iso
  Int den = 1;
  for (const Rat& v : f.matrix) den = lcm(den, v.get_den());
  const GabrielTopology& F = f.source.topology;
  if (!f.matrix.empty() && den != 1 && F.supported_part(den) != den)
    fail(ErrorKind::BadInput, "denominators not supported by the topology");
  FgModule src = make_module(RingSpec::integers(), f.source.invariants);
  FgModule tgt = make_module(RingSpec::integers(), f.target.invariants);
  IntMatrix A(tgt.size(), src.size());
  for (int i = 0; i < tgt.size(); ++i)
    for (int j = 0; j < src.size(); ++j) {
      Rat v = f.at(i, j) * den;
      A.at(i, j) = v.get_num();
    }
  Morphism g = make_morphism(src, tgt, std::move(A));
  // stripped modules carry no F-torsion, so g_F injective means ker g = 0
  if (!is_injective(g)) return false;
  return is_gabriel_torsion(F, cokernel(g).mod);
}

bool is_loc_surjective(const Morphism& f, const GabrielTopology& F) {
  require_z(f.source);
  return is_gabriel_torsion(F, cokernel(f).mod);
}

bool loc_surjective_by_matrix(const Morphism& f, const GabrielTopology& F) {
  require_z(f.source);
  Morphism g = stripped_morphism(f, F);
  std::vector<Int> d = snf_diagonal(hstack(g.matrix, relation_matrix(g.target)));
  d.resize(g.target.size(), 0);  // missing diagonal entries are zeros
  return std::all_of(d.begin(), d.end(), [&](const Int& v) { return F.supports(v) || v == 1; });
}

bool is_loc_exact(const CochainComplex& C, const GabrielTopology& F) {
  require_z(C.module_at(0));
  std::vector<Morphism> stripped;
  for (const Morphism& f : C.diffs) stripped.push_back(stripped_morphism(f, F));
  CochainComplex SC = make_complex(std::move(stripped), C.pad_left, C.pad_right);
  for (int j : interior_positions(SC))
    if (!is_gabriel_torsion(F, cohomology_at(SC, j))) return false;
  return true;
}

}  // namespace eexact
