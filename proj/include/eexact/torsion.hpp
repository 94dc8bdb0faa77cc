#pragma once
#include "eexact/module.hpp"

namespace eexact {

// A hereditary torsion theory on Z-modules, encoded by the primes that are
// allowed to be inverted/killed: either every prime (the Goldie topology,
// where torsion = the whole torsion part) or a finite set.
struct GabrielTopology {
  bool all_primes = false;
  std::vector<Int> primes;  // sorted, distinct, each prime

  static GabrielTopology goldie() { return {true, {}}; }
  static GabrielTopology of_primes(std::vector<Int> ps);
  static GabrielTopology trivial() { return {false, {}}; }

  // largest divisor of d supported on the topology's primes (d > 0)
  Int supported_part(const Int& d) const;
  bool supports(const Int& d) const { return d != 0 && supported_part(d) == d; }

  friend bool operator==(const GabrielTopology&, const GabrielTopology&) = default;
};

std::string topology_name(const GabrielTopology& F);

// Is the ideal (g) of the ring essential as a submodule of the ring?
bool is_essential_ideal(const RingSpec& ring, const Int& g);

// Z(M): elements whose annihilator ideal is essential in the ring.
Submodule singular_submodule(const FgModule& M);

// Z2(M): preimage of Z(M / Z(M)).
Submodule z2(const FgModule& M);

bool is_nonsingular(const FgModule& M);

// t_F(M) for the induced torsion theory: elements killed by a product of
// primes of F. Ring must be Z.
Submodule gabriel_torsion(const GabrielTopology& F, const FgModule& M);

bool is_gabriel_torsion(const GabrielTopology& F, const FgModule& M);      // t_F(M) = M
bool is_gabriel_torsionfree(const GabrielTopology& F, const FgModule& M);  // t_F(M) = 0

}  // namespace eexact
