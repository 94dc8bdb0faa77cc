#include <doctest.h>

#include "eexact/diagrams.hpp"
#include "eexact/rng.hpp"
#include "eexact/spectral.hpp"

using namespace eexact;

TEST_CASE("spectral_invariant counts rank and prime multiplicities") {
  FgModule M = make_module(RingSpec::integers(), {Int(2), Int(12), Int(0)});
  SpectralObject s = spectral_invariant(M);
  CHECK(s.rank == 1);
  CHECK(s.local.at(Int(2)) == 2);
  CHECK(s.local.at(Int(3)) == 1);
  CHECK(s.local.size() == 2);

  CHECK(spectral_invariant(zero_module(RingSpec::integers())).is_zero());

  // additive over direct sums
  Rng rng(61);
  for (int t = 0; t < 60; ++t) {
    FgModule A = random_module(RingSpec::integers(), rng);
    FgModule B = random_module(RingSpec::integers(), rng);
    CHECK(spectral_invariant(direct_sum(A, B).mod) ==
          spectral_sum(spectral_invariant(A), spectral_invariant(B)));
  }
}

TEST_CASE("spec_parts decomposes source and target invariants") {
  Rng rng(62);
  int ok = 0;
  for (int t = 0; t < 150; ++t) {
    FgModule A = random_module(RingSpec::integers(), rng);
    FgModule B = random_module(RingSpec::integers(), rng);
    Morphism f = random_morphism(A, B, rng);
    try {
      SpecParts p = spec_parts(f);
      CHECK(spectral_sum(p.kernel, p.image) == spectral_invariant(A));
      CHECK(spectral_sum(p.image, p.cokernel) == spectral_invariant(B));
      ++ok;
    } catch (const Error& e) {
      if (e.kind != ErrorKind::SearchExhausted) throw;
    }
  }
  CHECK(ok >= 120);

  FgModule M = make_module(RingSpec::integers(), {Int(4), Int(0)});
  SpecParts id_parts = spec_parts(identity_morphism(M));
  CHECK(id_parts.kernel.is_zero());
  CHECK(id_parts.image == spectral_invariant(M));
  CHECK(id_parts.cokernel.is_zero());

  SpecParts zero_parts = spec_parts(zero_morphism(M, M));
  CHECK(zero_parts.kernel == spectral_invariant(M));
  CHECK(zero_parts.image.is_zero());
  CHECK(zero_parts.cokernel == spectral_invariant(M));
}

TEST_CASE("spec_parts and is_spec_exact ignore the enumeration order") {
  Rng rng(63);
  int ok = 0;
  for (int t = 0; t < 60; ++t) {
    FgModule A = random_module(RingSpec::integers(), rng);
    FgModule B = random_module(RingSpec::integers(), rng);
    Morphism f = random_morphism(A, B, rng);
    CochainComplex C = gen_perturbed_complex(RingSpec::integers(), 2, rng);
    try {
      SpecParts base = spec_parts(f, 0);
      bool base_exact = is_spec_exact(C, 0);
      for (long order : {1L, 2L, 3L, 4L}) {
        SpecParts p = spec_parts(f, order);
        CHECK(p.kernel == base.kernel);
        CHECK(p.image == base.image);
        CHECK(p.cokernel == base.cokernel);
        CHECK(is_spec_exact(C, order) == base_exact);
      }
      ++ok;
    } catch (const Error& e) {
      if (e.kind != ErrorKind::SearchExhausted) throw;
    }
  }
  CHECK(ok >= 45);
}

TEST_CASE("spec-exact implies e-exact on short complexes") {
  Rng rng(64);
  int spec_seen = 0, ok = 0;
  for (int t = 0; t < 200; ++t) {
    CochainComplex C = t % 2 == 0 ? gen_short_e_exact(RingSpec::integers(), rng)
                                  : gen_perturbed_complex(RingSpec::integers(), 2, rng);
    try {
      if (is_spec_exact(C)) {
        CHECK(is_e_exact(C));
        ++spec_seen;
      }
      ++ok;
    } catch (const Error& e) {
      if (e.kind != ErrorKind::SearchExhausted) throw;
    }
  }
  CHECK(ok >= 150);
  CHECK(spec_seen >= 30);
}

TEST_CASE("e-exact does not imply spec-exact: Z/4 onto Z/2") {
  FgModule z4 = make_module(RingSpec::integers(), {Int(4)});
  FgModule z2 = make_module(RingSpec::integers(), {Int(2)});
  Morphism proj = make_morphism(z4, z2, IntMatrix{{1}});
  CochainComplex C = make_complex({proj}, false, true);
  CHECK(is_e_exact(C));
  CHECK(is_exact(C));
  CHECK(!is_spec_exact(C));
}

TEST_CASE("exact does not imply spec-exact: Z onto Z/2") {
  FgModule z = free_module(RingSpec::integers(), 1);
  FgModule z2 = make_module(RingSpec::integers(), {Int(2)});
  Morphism proj = make_morphism(z, z2, IntMatrix{{1}});
  CochainComplex C = make_complex({proj}, false, true);
  CHECK(is_exact(C));
  CHECK(!is_spec_exact(C));
}

TEST_CASE("split short exact complexes are spec-exact") {
  Rng rng(65);
  for (int t = 0; t < 40; ++t) {
    FgModule A = random_module(RingSpec::integers(), rng);
    FgModule B = random_module(RingSpec::integers(), rng);
    DirectSum s = direct_sum(A, B);
    CochainComplex C = make_complex({s.inj1, s.proj2}, true, true);
    try {
      CHECK(is_spec_exact(C));
    } catch (const Error& e) {
      if (e.kind != ErrorKind::SearchExhausted) throw;
    }
  }
}
