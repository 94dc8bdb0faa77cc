#include "eexact/torsion.hpp"

#include <algorithm>
#include <map>

#include "eexact/essentials.hpp"

namespace eexact {

GabrielTopology GabrielTopology::of_primes(std::vector<Int> ps) {
  std::sort(ps.begin(), ps.end());
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  for (const Int& p : ps)
    if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 40) == 0)
      fail(ErrorKind::BadInput, "not a prime: " + p.get_str());
  return {false, std::move(ps)};
}

Int GabrielTopology::supported_part(const Int& d) const {
  Int m = abs(d);
  if (m == 0) fail(ErrorKind::BadInput, "supported_part of 0");
  if (all_primes) return m;
  Int out = 1;
  for (const Int& p : primes)
    while (m % p == 0) {
      out *= p;
      m /= p;
    }
  return out;
}

std::string topology_name(const GabrielTopology& F) {
  if (F.all_primes) return "all primes";
  if (F.primes.empty()) return "no primes";
  std::string s = "primes ";
  for (std::size_t i = 0; i < F.primes.size(); ++i) {
    if (i) s += ",";
    s += F.primes[i].get_str();
  }
  return s;
}

bool is_essential_ideal(const RingSpec& ring, const Int& g) {
  if (ring.is_integers()) return g != 0;
  FgModule R = make_module(ring, {ring.n});
  return is_essential(span(R, {{g}}), R);
}

Submodule singular_submodule(const FgModule& M) {
  std::vector<Coords> gens;
  if (M.ring.is_integers()) {
    // essential ideals of Z are exactly the nonzero ones, so Z(M) is the
    // torsion part
    for (int i = 0; i < M.size(); ++i)
      if (M.invariants[i] != 0) gens.push_back(unit_coords(M, i));
  } else {
    // singular submodule splits over the cyclic summands; walk each one
    std::map<Int, bool> essential_ann;
    for (int i = 0; i < M.size(); ++i) {
      const Int& d = M.invariants[i];
      for (Int c = 1; c < d; ++c) {
        Int o = d / gcd(c, d);
        auto it = essential_ann.find(o);
        if (it == essential_ann.end())
          it = essential_ann.emplace(o, is_essential_ideal(M.ring, o)).first;
        if (it->second) {
          Coords g(M.size(), 0);
          g[i] = c;
          gens.push_back(std::move(g));
        }
      }
    }
  }
  return span(M, std::move(gens));
}

Submodule z2(const FgModule& M) {
  Submodule Z = singular_submodule(M);
  QuotientData q = quotient(M, Z);
  return preimage(q.proj, singular_submodule(q.mod));
}

bool is_nonsingular(const FgModule& M) { return is_zero_submodule(singular_submodule(M)); }

Submodule gabriel_torsion(const GabrielTopology& F, const FgModule& M) {
  if (!M.ring.is_integers()) fail(ErrorKind::RingMismatch, "Gabriel topologies are set up over Z");
  std::vector<Coords> gens;
  for (int i = 0; i < M.size(); ++i) {
    const Int& d = M.invariants[i];
    if (d == 0) continue;
    Int s = F.supported_part(d);
    if (s == 1) continue;
    Coords g(M.size(), 0);
    g[i] = d / s;
    gens.push_back(std::move(g));
  }
  return span(M, std::move(gens));
}

bool is_gabriel_torsion(const GabrielTopology& F, const FgModule& M) {
  if (!M.ring.is_integers()) fail(ErrorKind::RingMismatch, "Gabriel topologies are set up over Z");
  return std::all_of(M.invariants.begin(), M.invariants.end(),
                     [&](const Int& d) { return F.supports(d); });
}

bool is_gabriel_torsionfree(const GabrielTopology& F, const FgModule& M) {
  if (!M.ring.is_integers()) fail(ErrorKind::RingMismatch, "Gabriel topologies are set up over Z");
  return std::all_of(M.invariants.begin(), M.invariants.end(),
                     [&](const Int& d) { return d == 0 || F.supported_part(d) == 1; });
}

}  // namespace eexact
