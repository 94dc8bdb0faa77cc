#include "eexact/module.hpp"

#include <algorithm>
#include <numeric>

namespace eexact {

RingSpec RingSpec::zmod(Int m) {
  if (m < 2) fail(ErrorKind::BadInput, "Z/n needs n >= 2");
  return {std::move(m)};
}

std::string ring_name(const RingSpec& r) {
  return r.is_integers() ? "Z" : "Z/" + r.n.get_str();
}

int FgModule::rank() const {
  return static_cast<int>(std::count(invariants.begin(), invariants.end(), 0));
}

Int FgModule::order() const {
  Int p = 1;
  for (const Int& d : invariants) p *= d;
  return p;
}

FgModule make_module(RingSpec ring, std::vector<Int> invariants) {
  bool seen_zero = false;
  Int prev = 0;
  for (const Int& d : invariants) {
    if (d < 0 || d == 1) fail(ErrorKind::BadInput, "invariant factors are 0 or >= 2");
    if (d == 0) {
      seen_zero = true;
      if (!ring.is_integers()) fail(ErrorKind::BadInput, "free summand over Z/n");
      continue;
    }
    if (seen_zero) fail(ErrorKind::BadInput, "free summands must come last");
    if (prev != 0 && d % prev != 0) fail(ErrorKind::BadInput, "invariants must form a divisibility chain");
    if (!ring.is_integers() && ring.n % d != 0) fail(ErrorKind::BadInput, "invariant does not divide n");
    prev = d;
  }
  return {std::move(ring), std::move(invariants)};
}

FgModule zero_module(RingSpec ring) { return {std::move(ring), {}}; }

FgModule free_module(RingSpec ring, int rank) {
  if (ring.is_integers()) return {std::move(ring), std::vector<Int>(rank, 0)};
  return {ring, std::vector<Int>(rank, ring.n)};  // free over Z/n means copies of Z/n
}

std::string module_name(const FgModule& M) {
  if (M.is_zero()) return "0";
  std::string s;
  int free = 0;
  for (const Int& d : M.invariants) {
    if (d == 0) { ++free; continue; }
    if (!s.empty()) s += " + ";
    s += "Z/" + d.get_str();
  }
  if (free) {
    if (!s.empty()) s += " + ";
    s += free == 1 ? "Z" : "Z^" + std::to_string(free);
  }
  return s;
}

Coords reduce_coords(const FgModule& M, Coords x) {
  if (static_cast<int>(x.size()) != M.size()) fail(ErrorKind::ForeignElement, "coordinate count");
  for (int i = 0; i < M.size(); ++i) {
    const Int& d = M.invariants[i];
    if (d != 0) mpz_fdiv_r(x[i].get_mpz_t(), x[i].get_mpz_t(), d.get_mpz_t());
  }
  return x;
}

bool coords_zero(const Coords& x) {
  return std::all_of(x.begin(), x.end(), [](const Int& v) { return v == 0; });
}

Coords coords_add(const FgModule& M, const Coords& x, const Coords& y) {
  Coords z(x);
  for (std::size_t i = 0; i < z.size(); ++i) z[i] += y[i];
  return reduce_coords(M, std::move(z));
}

Coords coords_scale(const FgModule& M, const Int& c, const Coords& x) {
  Coords z(x);
  for (auto& v : z) v *= c;
  return reduce_coords(M, std::move(z));
}

Coords unit_coords(const FgModule& M, int i) {
  Coords x(M.size(), 0);
  x[i] = 1;
  return x;
}

Int element_order(const FgModule& M, const Coords& x0) {
  Coords x = reduce_coords(M, x0);
  Int o = 1;
  for (int i = 0; i < M.size(); ++i) {
    if (x[i] == 0) continue;
    const Int& d = M.invariants[i];
    if (d == 0) return 0;
    Int g = gcd(d, x[i]);
    o = lcm(o, Int(d / g));
  }
  return o;
}

IntMatrix relation_matrix(const FgModule& M) {
  std::vector<std::vector<Int>> cols;
  for (int i = 0; i < M.size(); ++i)
    if (M.invariants[i] != 0) {
      std::vector<Int> c(M.size(), 0);
      c[i] = M.invariants[i];
      cols.push_back(std::move(c));
    }
  return from_cols(M.size(), cols);
}

namespace {

IntMatrix reduce_matrix(const FgModule& target, IntMatrix m) {
  for (int i = 0; i < m.rows; ++i) {
    const Int& d = target.invariants[i];
    if (d == 0) continue;
    for (int j = 0; j < m.cols; ++j)
      mpz_fdiv_r(m.at(i, j).get_mpz_t(), m.at(i, j).get_mpz_t(), d.get_mpz_t());
  }
  return m;
}

}  // namespace

Morphism make_morphism(FgModule source, FgModule target, IntMatrix matrix) {
  if (source.ring != target.ring) fail(ErrorKind::RingMismatch, "morphism across rings");
  if (matrix.rows != target.size() || matrix.cols != source.size())
    fail(ErrorKind::DimensionMismatch, "morphism matrix shape");
  matrix = reduce_matrix(target, std::move(matrix));
  for (int j = 0; j < source.size(); ++j) {
    const Int& dj = source.invariants[j];
    if (dj == 0) continue;
    for (int i = 0; i < target.size(); ++i) {
      const Int& ei = target.invariants[i];
      Int v = dj * matrix.at(i, j);
      if (ei == 0 ? v != 0 : v % ei != 0)
        fail(ErrorKind::IllDefined, "matrix does not respect relations (column " + std::to_string(j) + ")");
    }
  }
  return {std::move(source), std::move(target), std::move(matrix)};
}

Morphism identity_morphism(const FgModule& M) {
  return {M, M, IntMatrix::identity(M.size())};
}

Morphism zero_morphism(const FgModule& source, const FgModule& target) {
  if (source.ring != target.ring) fail(ErrorKind::RingMismatch, "morphism across rings");
  return {source, target, IntMatrix(target.size(), source.size())};
}

Morphism compose(const Morphism& g, const Morphism& f) {
  if (f.target != g.source) fail(ErrorKind::NotComposable, "target(f) != source(g)");
  return make_morphism(f.source, g.target, mul(g.matrix, f.matrix));
}

Morphism add_morphisms(const Morphism& f, const Morphism& g) {
  if (f.source != g.source || f.target != g.target)
    fail(ErrorKind::DimensionMismatch, "adding morphisms with different ends");
  IntMatrix m = f.matrix;
  for (std::size_t i = 0; i < m.a.size(); ++i) m.a[i] += g.matrix.a[i];
  return make_morphism(f.source, f.target, std::move(m));
}

Morphism scale_morphism(const Int& c, const Morphism& f) {
  IntMatrix m = f.matrix;
  for (auto& v : m.a) v *= c;
  return make_morphism(f.source, f.target, std::move(m));
}

Coords apply(const Morphism& f, const Coords& x) {
  Coords xr = reduce_coords(f.source, x);
  return reduce_coords(f.target, mul(f.matrix, xr));
}

bool is_zero_morphism(const Morphism& f) { return f.matrix.is_zero(); }

Submodule span(const FgModule& M, std::vector<Coords> generators) {
  std::vector<Coords> gens;
  for (auto& g : generators) {
    Coords r = reduce_coords(M, std::move(g));
    if (!coords_zero(r)) gens.push_back(std::move(r));
  }
  return {M, std::move(gens)};
}

Submodule zero_submodule(const FgModule& M) { return {M, {}}; }

Submodule full_submodule(const FgModule& M) {
  std::vector<Coords> gens;
  for (int i = 0; i < M.size(); ++i) gens.push_back(unit_coords(M, i));
  return span(M, std::move(gens));
}

IntMatrix generator_matrix(const Submodule& S) {
  return from_cols(S.ambient.size(), S.generators);
}

bool contains(const Submodule& S, const Coords& x) {
  Coords xr = reduce_coords(S.ambient, x);
  IntMatrix B = hstack(generator_matrix(S), relation_matrix(S.ambient));
  return solve_linear(B, xr).has_value();
}

bool submodule_leq(const Submodule& S, const Submodule& T) {
  if (S.ambient != T.ambient) fail(ErrorKind::AmbientMismatch, "submodules of different modules");
  return std::all_of(S.generators.begin(), S.generators.end(),
                     [&](const Coords& g) { return contains(T, g); });
}

bool submodule_eq(const Submodule& S, const Submodule& T) {
  return submodule_leq(S, T) && submodule_leq(T, S);
}

bool is_zero_submodule(const Submodule& S) { return S.generators.empty(); }

bool is_full_submodule(const Submodule& S) {
  return submodule_leq(full_submodule(S.ambient), S);
}

Submodule intersect(const Submodule& S, const Submodule& T) {
  if (S.ambient != T.ambient) fail(ErrorKind::AmbientMismatch, "submodules of different modules");
  const FgModule& M = S.ambient;
  IntMatrix BS = hstack(generator_matrix(S), relation_matrix(M));
  IntMatrix BT = hstack(generator_matrix(T), relation_matrix(M));
  IntMatrix K = kernel_basis(hstack(BS, negate(BT)));
  std::vector<Coords> gens;
  for (int j = 0; j < K.cols; ++j) {
    std::vector<Int> a(BS.cols);
    for (int i = 0; i < BS.cols; ++i) a[i] = K.at(i, j);
    gens.push_back(mul(BS, a));
  }
  return span(M, std::move(gens));
}

Submodule sum_submodules(const Submodule& S, const Submodule& T) {
  if (S.ambient != T.ambient) fail(ErrorKind::AmbientMismatch, "submodules of different modules");
  std::vector<Coords> gens = S.generators;
  gens.insert(gens.end(), T.generators.begin(), T.generators.end());
  return span(S.ambient, std::move(gens));
}

namespace {

// x-parts (first `head` rows) of a kernel basis, as a generator list
std::vector<Coords> solution_heads(const IntMatrix& A, int head) {
  IntMatrix K = kernel_basis(A);
  std::vector<Coords> gens;
  for (int j = 0; j < K.cols; ++j) {
    Coords x(head);
    for (int i = 0; i < head; ++i) x[i] = K.at(i, j);
    gens.push_back(std::move(x));
  }
  return gens;
}

}  // namespace

Submodule kernel(const Morphism& f) {
  IntMatrix A = hstack(f.matrix, relation_matrix(f.target));
  return span(f.source, solution_heads(A, f.source.size()));
}

Submodule image(const Morphism& f) {
  std::vector<Coords> gens;
  for (int j = 0; j < f.matrix.cols; ++j) gens.push_back(f.matrix.col(j));
  return span(f.target, std::move(gens));
}

Submodule image_of(const Morphism& f, const Submodule& S) {
  if (S.ambient != f.source) fail(ErrorKind::AmbientMismatch, "image_of: submodule not in source");
  std::vector<Coords> gens;
  for (const Coords& g : S.generators) gens.push_back(apply(f, g));
  return span(f.target, std::move(gens));
}

Submodule preimage(const Morphism& f, const Submodule& T) {
  if (T.ambient != f.target) fail(ErrorKind::AmbientMismatch, "preimage: submodule not in target");
  IntMatrix A = hstack(f.matrix, hstack(negate(generator_matrix(T)), relation_matrix(f.target)));
  return span(f.source, solution_heads(A, f.source.size()));
}

bool is_injective(const Morphism& f) { return is_zero_submodule(kernel(f)); }

bool is_surjective(const Morphism& f) { return is_full_submodule(image(f)); }

Presentation canonical_presentation(const RingSpec& ring, int generators, const IntMatrix& relations) {
  if (relations.rows != generators) fail(ErrorKind::DimensionMismatch, "relations shape");
  IntMatrix R = relations;
  if (!ring.is_integers())
    R = hstack(R, diag(generators, generators, std::vector<Int>(generators, ring.n)));
  SnfDecomposition s = snf(R);
  const int k = std::min(R.rows, R.cols);
  std::vector<int> kept;
  std::vector<Int> invariants;
  for (int i = 0; i < generators; ++i) {
    Int d = i < k ? s.D.at(i, i) : Int(0);
    if (d == 1) continue;
    kept.push_back(i);
    invariants.push_back(std::move(d));
  }
  FgModule mod = make_module(ring, std::move(invariants));
  IntMatrix to_canon = reduce_matrix(mod, submatrix_rows(s.U, kept));
  IntMatrix from_canon = submatrix_cols(unimodular_inverse(s.U), kept);
  return {std::move(mod), std::move(to_canon), std::move(from_canon)};
}

FgModule canonical_form(const RingSpec& ring, int generators, const IntMatrix& relations) {
  return canonical_presentation(ring, generators, relations).mod;
}

QuotientData quotient(const FgModule& M, const Submodule& S) {
  if (S.ambient != M) fail(ErrorKind::AmbientMismatch, "quotient by foreign submodule");
  IntMatrix rel = hstack(generator_matrix(S), relation_matrix(M));
  Presentation p = canonical_presentation(M.ring, M.size(), rel);
  Morphism proj = make_morphism(M, p.mod, p.to_canon);
  return {std::move(p.mod), std::move(proj)};
}

QuotientData cokernel(const Morphism& f) { return quotient(f.target, image(f)); }

SubStructure submodule_structure(const Submodule& S) {
  const FgModule& M = S.ambient;
  IntMatrix G = generator_matrix(S);
  const int m = G.cols;
  IntMatrix K = kernel_basis(hstack(G, relation_matrix(M)));
  IntMatrix rel(m, K.cols);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < K.cols; ++j) rel.at(i, j) = K.at(i, j);
  Presentation p = canonical_presentation(M.ring, m, rel);
  IntMatrix emb_matrix = mul(G, p.from_canon);
  Morphism emb = make_morphism(p.mod, M, emb_matrix);
  return {std::move(p.mod), std::move(emb), std::move(G), std::move(p.to_canon)};
}

Coords abs_coords(const SubStructure& st, const Coords& x_in_ambient) {
  const FgModule& M = st.emb.target;
  Coords xr = reduce_coords(M, x_in_ambient);
  IntMatrix B = hstack(st.gens, relation_matrix(M));
  auto sol = solve_linear(B, xr);
  if (!sol) fail(ErrorKind::ForeignElement, "element not in submodule");
  Coords a(st.gens.cols);
  for (int i = 0; i < st.gens.cols; ++i) a[i] = (*sol)[i];
  return reduce_coords(st.abs, mul(st.to_abs, a));
}

DirectSum direct_sum(const FgModule& M, const FgModule& N) {
  if (M.ring != N.ring) fail(ErrorKind::RingMismatch, "direct sum across rings");
  const int kM = M.size(), kN = N.size(), g = kM + kN;
  std::vector<Int> d;
  d.insert(d.end(), M.invariants.begin(), M.invariants.end());
  d.insert(d.end(), N.invariants.begin(), N.invariants.end());
  Presentation p = canonical_presentation(M.ring, g, diag(g, g, d));

  std::vector<int> left(kM), right(kN);
  std::iota(left.begin(), left.end(), 0);
  std::iota(right.begin(), right.end(), kM);
  Morphism inj1 = make_morphism(M, p.mod, submatrix_cols(p.to_canon, left));
  Morphism inj2 = make_morphism(N, p.mod, submatrix_cols(p.to_canon, right));
  Morphism proj1 = make_morphism(p.mod, M, submatrix_rows(p.from_canon, left));
  Morphism proj2 = make_morphism(p.mod, N, submatrix_rows(p.from_canon, right));
  return {std::move(p.mod), std::move(inj1), std::move(inj2), std::move(proj1), std::move(proj2)};
}

}  // namespace eexact
