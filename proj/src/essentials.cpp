#include "eexact/essentials.hpp"

#include <algorithm>

namespace eexact {

Submodule socle(const FgModule& M) {
  std::vector<Coords> gens;
  for (int i = 0; i < M.size(); ++i) {
    const Int& d = M.invariants[i];
    if (d == 0) continue;
    for (const Int& p : prime_factors(d)) {
      Coords g(M.size(), 0);
      g[i] = d / p;
      gens.push_back(std::move(g));
    }
  }
  return span(M, std::move(gens));
}

namespace {

std::vector<int> free_indices(const FgModule& M) {
  std::vector<int> idx;
  for (int i = 0; i < M.size(); ++i)
    if (M.invariants[i] == 0) idx.push_back(i);
  return idx;
}

int free_rank_of(const Submodule& S) {
  std::vector<int> fr = free_indices(S.ambient);
  if (fr.empty() || S.generators.empty()) return 0;
  return rank_of(submatrix_rows(generator_matrix(S), fr));
}

}  // namespace

bool is_essential(const Submodule& S, const FgModule& M) {
  if (S.ambient != M) fail(ErrorKind::AmbientMismatch, "is_essential: wrong ambient");
  if (M.is_zero()) return true;  // no nonzero submodules to meet
  if (free_rank_of(S) != M.rank()) return false;
  for (const Coords& g : socle(M).generators)
    if (!contains(S, g)) return false;
  return true;
}

bool is_essential_in(const Submodule& S, const Submodule& T) {
  if (S.ambient != T.ambient) fail(ErrorKind::AmbientMismatch, "is_essential_in: different ambients");
  if (!submodule_leq(S, T)) fail(ErrorKind::ForeignElement, "is_essential_in: S not inside T");
  SubStructure st = submodule_structure(T);
  std::vector<Coords> inner;
  for (const Coords& g : S.generators) inner.push_back(abs_coords(st, g));
  return is_essential(span(st.abs, std::move(inner)), st.abs);
}

namespace {

constexpr long kCandidateCap = 4096;
constexpr long kFreeBox = 3;  // free coordinates range over [-3, 3]

// torsion elements first (lexicographic), then free-part vectors in the box
std::vector<Coords> complement_candidates(const FgModule& M) {
  std::vector<Coords> out;
  std::vector<int> tor, fre;
  for (int i = 0; i < M.size(); ++i)
    (M.invariants[i] != 0 ? tor : fre).push_back(i);

  Int torsion_order = 1;
  for (int i : tor) torsion_order *= M.invariants[i];
  if (torsion_order > kCandidateCap)
    fail(ErrorKind::SearchExhausted, "torsion part too large to enumerate (order " +
                                         torsion_order.get_str() + ")");
  Int free_count = 1;
  for (std::size_t i = 0; i < fre.size(); ++i) {
    free_count *= 2 * kFreeBox + 1;
    if (free_count > kCandidateCap)
      fail(ErrorKind::SearchExhausted, "free rank too large to enumerate");
  }

  Coords x(M.size(), 0);
  for (;;) {  // odometer over torsion coordinates
    if (!coords_zero(x)) out.push_back(x);
    int i = static_cast<int>(tor.size()) - 1;
    while (i >= 0 && x[tor[i]] + 1 == M.invariants[tor[i]]) x[tor[i--]] = 0;
    if (i < 0) break;
    x[tor[i]] += 1;
  }
  if (!fre.empty()) {
    std::fill(x.begin(), x.end(), Int(0));
    for (int i : fre) x[i] = -kFreeBox;
    for (;;) {
      if (!coords_zero(x)) out.push_back(x);
      int i = static_cast<int>(fre.size()) - 1;
      while (i >= 0 && x[fre[i]] == kFreeBox) x[fre[i--]] = -kFreeBox;
      if (i < 0) break;
      x[fre[i]] += 1;
    }
  }
  return out;
}

}  // namespace

ComplementResult complement(const Submodule& S, long enumeration_order) {
  const FgModule& M = S.ambient;
  std::vector<Coords> candidates = complement_candidates(M);
  if (enumeration_order != 0) {
    Rng rng(derive_seed(0x636f6d706c656dULL, static_cast<std::uint64_t>(enumeration_order)));
    for (std::size_t i = candidates.size(); i > 1; --i)
      std::swap(candidates[i - 1], candidates[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(i) - 1))]);
  }

  Submodule C = zero_submodule(M);
  for (const Coords& x : candidates) {
    if (is_essential(sum_submodules(S, C), M)) break;
    std::vector<Coords> gens = C.generators;
    gens.push_back(x);
    Submodule C2 = span(M, std::move(gens));
    if (is_zero_submodule(intersect(S, C2))) C = std::move(C2);
  }

  bool meets = is_zero_submodule(intersect(S, C));
  bool ess = is_essential(sum_submodules(S, C), M);
  if (!meets || !ess)
    fail(ErrorKind::SearchExhausted, "no certified complement within the candidate set");
  return {std::move(C), meets, ess};
}

namespace {

// random injective endomorphism of the torsion block, entries forced into the
// shape (di / gcd(di, dj)) * u that well-definedness demands
bool fill_torsion_block(const FgModule& M, const std::vector<int>& tor, IntMatrix& A, Rng& rng) {
  if (tor.empty()) return true;
  std::vector<Int> d;
  for (int i : tor) d.push_back(M.invariants[i]);
  FgModule T = make_module(M.ring, d);
  for (int attempt = 0; attempt < 50; ++attempt) {
    IntMatrix B(T.size(), T.size());
    for (int i = 0; i < T.size(); ++i)
      for (int j = 0; j < T.size(); ++j) {
        Int step = d[i] / gcd(d[i], d[j]);
        B.at(i, j) = step * Int(rng.uniform(-2, 2));
      }
    Morphism f = make_morphism(T, T, B);
    if (!is_injective(f)) continue;
    for (int i = 0; i < T.size(); ++i)
      for (int j = 0; j < T.size(); ++j) A.at(tor[i], tor[j]) = f.matrix.at(i, j);
    return true;
  }
  for (int i : tor) A.at(i, i) = 1;  // identity block fallback
  return true;
}

}  // namespace

Morphism random_essential_mono(const FgModule& M, Rng& rng) {
  if (M.is_zero()) return identity_morphism(M);
  std::vector<int> tor, fre;
  for (int i = 0; i < M.size(); ++i)
    (M.invariants[i] != 0 ? tor : fre).push_back(i);

  for (int attempt = 0; attempt < 50; ++attempt) {
    IntMatrix A(M.size(), M.size());
    fill_torsion_block(M, tor, A, rng);
    if (!fre.empty()) {
      IntMatrix F(static_cast<int>(fre.size()), static_cast<int>(fre.size()));
      do {
        for (auto& v : F.a) v = rng.uniform(-3, 3);
      } while (rank_of(F) < F.rows);
      for (std::size_t i = 0; i < fre.size(); ++i)
        for (std::size_t j = 0; j < fre.size(); ++j) A.at(fre[i], fre[j]) = F.at(static_cast<int>(i), static_cast<int>(j));
      for (int i : tor)  // free generators may hit torsion freely
        for (int j : fre) A.at(i, j) = rng.uniform(0, 3);
    }
    Morphism f = make_morphism(M, M, A);
    if (is_injective(f) && is_essential(image(f), M)) return f;
  }
  return identity_morphism(M);
}

}  // namespace eexact
