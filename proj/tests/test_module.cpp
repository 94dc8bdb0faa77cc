#include <doctest.h>

#include "eexact/diagrams.hpp"
#include "eexact/module.hpp"
#include "eexact/rng.hpp"
#include "oracles.hpp"

using namespace eexact;

TEST_CASE("make_module rejects malformed invariant chains") {
  CHECK_THROWS_AS(make_module(RingSpec::integers(), {Int(1)}), Error);
  CHECK_THROWS_AS(make_module(RingSpec::integers(), {Int(-2)}), Error);
  CHECK_THROWS_AS(make_module(RingSpec::integers(), {Int(2), Int(3)}), Error);
  CHECK_THROWS_AS(make_module(RingSpec::integers(), {Int(0), Int(2)}), Error);
  CHECK_THROWS_AS(make_module(RingSpec::zmod(4), {Int(0)}), Error);
  CHECK_THROWS_AS(make_module(RingSpec::zmod(4), {Int(3)}), Error);
  CHECK(make_module(RingSpec::integers(), {Int(2), Int(6), Int(0)}).rank() == 1);
  CHECK(make_module(RingSpec::zmod(12), {Int(2), Int(6)}).order() == 12);
}

TEST_CASE("canonical_form recovers a module from its own relations") {
  Rng rng(21);
  for (int t = 0; t < 150; ++t) {
    RingSpec ring = t % 2 == 0 ? RingSpec::integers() : RingSpec::zmod(rng.uniform(2, 24));
    FgModule M = random_module(ring, rng);
    CHECK(canonical_form(ring, M.size(), relation_matrix(M)) == M);
  }
}

TEST_CASE("canonical_form is invariant under change of presentation") {
  // Z^2 / <(2,0),(0,4)> with relations given as columns
  IntMatrix rel{{2, 0}, {0, 4}};
  FgModule M = canonical_form(RingSpec::integers(), 2, rel);
  CHECK(M.invariants == std::vector<Int>{Int(2), Int(4)});

  Rng rng(22);
  for (int t = 0; t < 100; ++t) {
    FgModule N = random_module(RingSpec::integers(), rng);
    IntMatrix R = relation_matrix(N);
    // scramble generators (rows) and relations (columns) by elementary moves
    for (int s = 0; s < 8 && R.rows > 1; ++s) {
      int i = static_cast<int>(rng.uniform(0, R.rows - 1));
      int j = static_cast<int>(rng.uniform(0, R.rows - 1));
      if (i == j) continue;
      Int c = rng.uniform(-2, 2);
      for (int k = 0; k < R.cols; ++k) R.at(i, k) += c * R.at(j, k);
    }
    for (int s = 0; s < 8 && R.cols > 1; ++s) {
      int i = static_cast<int>(rng.uniform(0, R.cols - 1));
      int j = static_cast<int>(rng.uniform(0, R.cols - 1));
      if (i == j) continue;
      Int c = rng.uniform(-2, 2);
      for (int k = 0; k < R.rows; ++k) R.at(k, i) += c * R.at(k, j);
    }
    CHECK(canonical_form(RingSpec::integers(), N.size(), R) == N);
  }
}

TEST_CASE("canonical_presentation maps are mutually inverse on the module") {
  Rng rng(23);
  for (int t = 0; t < 100; ++t) {
    FgModule M = random_module(RingSpec::integers(), rng);
    IntMatrix R = relation_matrix(M);
    Presentation p = canonical_presentation(M.ring, M.size(), R);
    CHECK(p.mod == M);
    IntMatrix round = mul(p.to_canon, p.from_canon);
    Morphism id_candidate = make_morphism(p.mod, p.mod, round);
    CHECK(id_candidate == identity_morphism(p.mod));
  }
}

TEST_CASE("element_order is the least annihilating multiple") {
  Rng rng(24);
  for (int t = 0; t < 60; ++t) {
    RingSpec ring = t % 2 == 0 ? RingSpec::integers() : RingSpec::zmod(rng.uniform(2, 12));
    FgModule M = random_module(ring, rng);
    if (!M.is_finite() || M.order() > 64) continue;
    for (const Coords& x : oracle::all_elements(M)) {
      Int ord = element_order(M, x);
      CHECK(ord >= 1);
      CHECK(coords_zero(coords_scale(M, ord, x)));
      for (Int k = 1; k < ord; ++k) CHECK(!coords_zero(coords_scale(M, k, x)));
    }
  }
}

TEST_CASE("make_morphism enforces well-definedness") {
  FgModule z2 = make_module(RingSpec::integers(), {Int(2)});
  FgModule z3 = make_module(RingSpec::integers(), {Int(3)});
  FgModule z4 = make_module(RingSpec::integers(), {Int(4)});
  CHECK_THROWS_AS(make_morphism(z2, z3, IntMatrix{{1}}), Error);
  CHECK(make_morphism(z4, z2, IntMatrix{{1}}).matrix.at(0, 0) == 1);
  CHECK(make_morphism(z2, z4, IntMatrix{{2}}).matrix.at(0, 0) == 2);
  CHECK_THROWS_AS(make_morphism(z2, z4, IntMatrix{{1}}), Error);

  // scalars must also respect the ambient ring
  FgModule m2 = make_module(RingSpec::zmod(4), {Int(2)});
  CHECK(make_morphism(m2, m2, IntMatrix{{3}}).matrix.at(0, 0) == 1);
}

TEST_CASE("apply and compose agree pointwise") {
  Rng rng(25);
  for (int t = 0; t < 80; ++t) {
    FgModule A = random_module(RingSpec::integers(), rng);
    FgModule B = random_module(RingSpec::integers(), rng);
    FgModule C = random_module(RingSpec::integers(), rng);
    Morphism f = random_morphism(A, B, rng);
    Morphism g = random_morphism(B, C, rng);
    Coords x;
    for (int i = 0; i < A.size(); ++i) x.push_back(rng.uniform(-6, 6));
    x = reduce_coords(A, x);
    CHECK(eexact::apply(compose(g, f), x) == eexact::apply(g, eexact::apply(f, x)));
  }
}

TEST_CASE("kernel and image behave like kernel and image") {
  FgModule z = free_module(RingSpec::integers(), 1);
  Morphism times2 = make_morphism(z, z, IntMatrix{{2}});
  CHECK(is_zero_submodule(kernel(times2)));
  CHECK(contains(image(times2), {Int(2)}));
  CHECK(!contains(image(times2), {Int(1)}));
  CHECK(cokernel(times2).mod == make_module(RingSpec::integers(), {Int(2)}));

  Rng rng(26);
  for (int t = 0; t < 80; ++t) {
    RingSpec ring = t % 2 == 0 ? RingSpec::integers() : RingSpec::zmod(rng.uniform(2, 16));
    FgModule A = random_module(ring, rng);
    FgModule B = random_module(ring, rng);
    Morphism f = random_morphism(A, B, rng);
    Submodule K = kernel(f);
    for (const Coords& g : K.generators) CHECK(coords_zero(eexact::apply(f, g)));
    Coords x;
    for (int i = 0; i < A.size(); ++i) x.push_back(rng.uniform(-5, 5));
    x = reduce_coords(A, x);
    CHECK(contains(image(f), eexact::apply(f, x)));
    if (coords_zero(eexact::apply(f, x))) CHECK(contains(K, x));

    Submodule T = random_submodule(B, rng);
    Submodule P = preimage(f, T);
    for (const Coords& g : P.generators) CHECK(contains(T, eexact::apply(f, g)));
    if (contains(T, eexact::apply(f, x))) CHECK(contains(P, x));
  }
}

TEST_CASE("quotient projection is surjective with kernel the divisor") {
  Rng rng(27);
  for (int t = 0; t < 80; ++t) {
    RingSpec ring = t % 2 == 0 ? RingSpec::integers() : RingSpec::zmod(rng.uniform(2, 16));
    FgModule M = random_module(ring, rng);
    Submodule S = random_submodule(M, rng);
    QuotientData q = quotient(M, S);
    CHECK(is_surjective(q.proj));
    CHECK(submodule_eq(kernel(q.proj), S));
  }
}

TEST_CASE("submodule_structure embeds with the right image") {
  Rng rng(28);
  for (int t = 0; t < 80; ++t) {
    RingSpec ring = t % 2 == 0 ? RingSpec::integers() : RingSpec::zmod(rng.uniform(2, 16));
    FgModule M = random_module(ring, rng);
    Submodule S = random_submodule(M, rng);
    SubStructure st = submodule_structure(S);
    CHECK(is_injective(st.emb));
    CHECK(submodule_eq(image(st.emb), S));
    // abs_coords is a retraction of emb on elements of S
    Coords x(static_cast<std::size_t>(M.size()), 0);
    for (const Coords& g : S.generators)
      x = coords_add(M, x, coords_scale(M, rng.uniform(-4, 4), g));
    CHECK(eexact::apply(st.emb, abs_coords(st, x)) == x);
  }
}

TEST_CASE("direct_sum satisfies the biproduct identities") {
  Rng rng(29);
  for (int t = 0; t < 60; ++t) {
    RingSpec ring = t % 2 == 0 ? RingSpec::integers() : RingSpec::zmod(rng.uniform(2, 16));
    FgModule M = random_module(ring, rng);
    FgModule N = random_module(ring, rng);
    DirectSum s = direct_sum(M, N);
    CHECK(compose(s.proj1, s.inj1) == identity_morphism(M));
    CHECK(compose(s.proj2, s.inj2) == identity_morphism(N));
    CHECK(is_zero_morphism(compose(s.proj1, s.inj2)));
    CHECK(is_zero_morphism(compose(s.proj2, s.inj1)));
    Morphism sum = add_morphisms(compose(s.inj1, s.proj1), compose(s.inj2, s.proj2));
    CHECK(sum == identity_morphism(s.mod));
  }
}

TEST_CASE("submodule lattice operations") {
  Rng rng(30);
  for (int t = 0; t < 80; ++t) {
    RingSpec ring = t % 2 == 0 ? RingSpec::integers() : RingSpec::zmod(rng.uniform(2, 16));
    FgModule M = random_module(ring, rng);
    Submodule S = random_submodule(M, rng);
    Submodule T = random_submodule(M, rng);
    Submodule I = intersect(S, T);
    Submodule U = sum_submodules(S, T);
    CHECK(submodule_leq(I, S));
    CHECK(submodule_leq(I, T));
    CHECK(submodule_leq(S, U));
    CHECK(submodule_leq(T, U));
    for (const Coords& g : I.generators) {
      CHECK(contains(S, g));
      CHECK(contains(T, g));
    }
    CHECK(submodule_eq(intersect(S, full_submodule(M)), S));
    CHECK(submodule_eq(sum_submodules(S, zero_submodule(M)), S));
  }
}
