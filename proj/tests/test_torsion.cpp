#include <doctest.h>

#include "eexact/diagrams.hpp"
#include "eexact/rng.hpp"
#include "eexact/torsion.hpp"
#include "oracles.hpp"

using namespace eexact;

namespace {

// definitional: the ideal (g) of Z/n is essential iff it meets every nonzero
// ideal (d), d | n, i.e. lcm(d, g) is never n
bool ideal_essential_by_divisors(const Int& n, Int g) {
  g = gcd(g, n);
  if (g == 0 || g == n) return false;  // the zero ideal, unless n itself is tiny
  for (Int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    CHECK(lcm(d, g) <= n);
    if (lcm(d, g) == n) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("is_essential_ideal over Z and Z/n") {
  CHECK(is_essential_ideal(RingSpec::integers(), Int(1)));
  CHECK(is_essential_ideal(RingSpec::integers(), Int(2)));
  CHECK(is_essential_ideal(RingSpec::integers(), Int(-7)));
  CHECK(!is_essential_ideal(RingSpec::integers(), Int(0)));

  CHECK(is_essential_ideal(RingSpec::zmod(12), Int(2)));
  CHECK(!is_essential_ideal(RingSpec::zmod(12), Int(4)));
  CHECK(!is_essential_ideal(RingSpec::zmod(12), Int(6)));
  CHECK(is_essential_ideal(RingSpec::zmod(4), Int(2)));
  CHECK(!is_essential_ideal(RingSpec::zmod(6), Int(2)));

  for (long n : {4L, 6L, 8L, 9L, 12L, 16L, 18L, 24L, 30L, 36L}) {
    for (Int g = 0; g < n; ++g)
      CHECK(is_essential_ideal(RingSpec::zmod(n), g) == ideal_essential_by_divisors(Int(n), g));
  }
}

TEST_CASE("singular submodule over Z is the torsion part") {
  Rng rng(41);
  for (int t = 0; t < 120; ++t) {
    FgModule M = random_module(RingSpec::integers(), rng);
    Submodule Z = singular_submodule(M);
    std::vector<Coords> torsion_units;
    for (int i = 0; i < M.size(); ++i)
      if (M.invariants[static_cast<std::size_t>(i)] != 0) torsion_units.push_back(unit_coords(M, i));
    CHECK(submodule_eq(Z, span(M, torsion_units)));
    CHECK(is_nonsingular(M) == (M.rank() == M.size()));
  }
}

TEST_CASE("singular membership over Z/n matches the annihilator test") {
  Rng rng(42);
  long checked = 0;
  for (long n : {4L, 8L, 9L, 12L, 16L}) {
    RingSpec ring = RingSpec::zmod(n);
    for (int t = 0; t < 25; ++t) {
      FgModule M = random_module(ring, rng);
      if (M.order() > 64) continue;
      Submodule Z = singular_submodule(M);
      for (const Coords& x : oracle::all_elements(M)) {
        Int o = element_order(M, x);
        bool singular = coords_zero(x) || is_essential_ideal(ring, o);
        CHECK(contains(Z, x) == singular);
        ++checked;
      }
    }
  }
  CHECK(checked >= 300);
}

TEST_CASE("the quotient by the singular submodule is nonsingular over Z") {
  Rng rng(43);
  for (int t = 0; t < 120; ++t) {
    FgModule M = random_module(RingSpec::integers(), rng);
    QuotientData q = quotient(M, singular_submodule(M));
    CHECK(is_zero_submodule(singular_submodule(q.mod)));
    CHECK(submodule_eq(z2(M), singular_submodule(M)));  // Z is already closed over Z
  }
}

TEST_CASE("over Z/4 the singular submodule is not a radical but z2 is") {
  FgModule M = free_module(RingSpec::zmod(4), 1);  // Z/4 over itself
  Submodule Z = singular_submodule(M);
  CHECK(contains(Z, {Int(2)}));
  CHECK(!contains(Z, {Int(1)}));
  QuotientData q = quotient(M, Z);
  CHECK(!is_zero_submodule(singular_submodule(q.mod)));  // Z(M/Z(M)) != 0
  CHECK(is_full_submodule(z2(M)));
}

TEST_CASE("z2 is a radical closure on Z/n modules") {
  Rng rng(44);
  for (int t = 0; t < 150; ++t) {
    long n = rng.uniform(2, 16);
    FgModule M = random_module(RingSpec::zmod(n), rng);
    Submodule Z = singular_submodule(M);
    Submodule Z2 = z2(M);
    CHECK(submodule_leq(Z, Z2));
    QuotientData q = quotient(M, Z2);
    CHECK(is_zero_submodule(singular_submodule(q.mod)));
    CHECK(is_zero_submodule(z2(q.mod)));
  }
}

TEST_CASE("supported_part extracts the allowed prime powers") {
  GabrielTopology f2 = GabrielTopology::of_primes({Int(2)});
  CHECK(f2.supported_part(Int(12)) == 4);
  CHECK(f2.supported_part(Int(7)) == 1);
  CHECK(f2.supports(Int(8)));
  CHECK(!f2.supports(Int(12)));
  CHECK(!f2.supports(Int(0)));

  GabrielTopology g = GabrielTopology::goldie();
  CHECK(g.supported_part(Int(12)) == 12);
  CHECK(g.supports(Int(12)));
  CHECK(!g.supports(Int(0)));

  GabrielTopology none = GabrielTopology::trivial();
  CHECK(none.supported_part(Int(12)) == 1);
  CHECK(none.supports(Int(1)));
  CHECK(!none.supports(Int(2)));

  GabrielTopology f23 = GabrielTopology::of_primes({Int(3), Int(2), Int(3)});
  CHECK(f23.primes == std::vector<Int>{Int(2), Int(3)});  // sorted, deduplicated
  CHECK(f23.supported_part(Int(60)) == 12);
}

TEST_CASE("gabriel_torsion picks out the supported part") {
  FgModule m12 = make_module(RingSpec::integers(), {Int(12)});
  GabrielTopology f2 = GabrielTopology::of_primes({Int(2)});
  Submodule t2 = gabriel_torsion(f2, m12);
  CHECK(submodule_eq(t2, span(m12, {{Int(3)}})));  // the 2-part of Z/12

  GabrielTopology f3 = GabrielTopology::of_primes({Int(3)});
  CHECK(submodule_eq(gabriel_torsion(f3, m12), span(m12, {{Int(4)}})));

  CHECK(is_zero_submodule(gabriel_torsion(GabrielTopology::trivial(), m12)));
  CHECK(is_full_submodule(gabriel_torsion(GabrielTopology::goldie(), m12)));

  Rng rng(45);
  for (int t = 0; t < 100; ++t) {
    FgModule M = random_module(RingSpec::integers(), rng);
    GabrielTopology F =
        t % 3 == 0 ? GabrielTopology::goldie()
                   : GabrielTopology::of_primes(t % 3 == 1 ? std::vector<Int>{Int(2)}
                                                           : std::vector<Int>{Int(2), Int(3)});
    Submodule T = gabriel_torsion(F, M);
    // every generator is killed by a supported number; goldie torsion is the full torsion part
    for (const Coords& g : T.generators) {
      Int o = element_order(M, g);
      CHECK(o != 0);
      CHECK(F.supports(o == 1 ? Int(1) : o));
    }
    CHECK(submodule_leq(T, singular_submodule(M)));
    if (F.all_primes) CHECK(submodule_eq(T, singular_submodule(M)));
    CHECK(is_gabriel_torsion(F, M) == is_full_submodule(T));
    CHECK(is_gabriel_torsionfree(F, M) == is_zero_submodule(T));
  }
}

TEST_CASE("gabriel torsion and torsionfree flags on knowns") {
  GabrielTopology f2 = GabrielTopology::of_primes({Int(2)});
  FgModule m8 = make_module(RingSpec::integers(), {Int(8)});
  FgModule m3 = make_module(RingSpec::integers(), {Int(3)});
  FgModule z = free_module(RingSpec::integers(), 1);
  CHECK(is_gabriel_torsion(f2, m8));
  CHECK(is_gabriel_torsionfree(f2, m3));
  CHECK(is_gabriel_torsionfree(f2, z));
  CHECK(!is_gabriel_torsion(f2, m3));
  CHECK(is_gabriel_torsion(f2, zero_module(RingSpec::integers())));
  CHECK(is_gabriel_torsionfree(f2, zero_module(RingSpec::integers())));
}
