#pragma once
#include <string>
#include <vector>

#include "eexact/intmat.hpp"

namespace eexact {

// n == 0 means Z itself; n >= 2 means Z/n.
struct RingSpec {
  Int n = 0;

  static RingSpec integers() { return {}; }
  static RingSpec zmod(Int m);
  bool is_integers() const { return n == 0; }
  friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

std::string ring_name(const RingSpec& r);

// Finitely generated module in invariant-factor coordinates:
// Z/d1 + Z/d2 + ... with d1 | d2 | ..., each di >= 2, then di = 0 for the
// free summands. Every module op returns this shape, so equality of the
// invariants vector is isomorphism.
struct FgModule {
  RingSpec ring;
  std::vector<Int> invariants;

  int size() const { return static_cast<int>(invariants.size()); }
  int rank() const;
  bool is_finite() const { return rank() == 0; }
  bool is_zero() const { return invariants.empty(); }
  Int order() const;  // only meaningful when finite
  friend bool operator==(const FgModule&, const FgModule&) = default;
};

FgModule make_module(RingSpec ring, std::vector<Int> invariants);
FgModule zero_module(RingSpec ring);
FgModule free_module(RingSpec ring, int rank);
std::string module_name(const FgModule& M);

// Element coordinates; torsion coordinates live in [0, di).
using Coords = std::vector<Int>;

Coords reduce_coords(const FgModule& M, Coords x);
bool coords_zero(const Coords& x);
Coords coords_add(const FgModule& M, const Coords& x, const Coords& y);
Coords coords_scale(const FgModule& M, const Int& c, const Coords& x);
Coords unit_coords(const FgModule& M, int i);
Int element_order(const FgModule& M, const Coords& x);  // annihilator generator; 0 = infinite

// Columns di * ei for the nonzero invariants: the relation lattice of M
// inside its coordinate space (over Z/n the n*I columns are included).
IntMatrix relation_matrix(const FgModule& M);

struct Morphism {
  FgModule source, target;
  IntMatrix matrix;  // target.size() x source.size(), reduced mod target invariants

  friend bool operator==(const Morphism&, const Morphism&) = default;
};

// Validates well-definedness: dj * (column j) must vanish in the target.
Morphism make_morphism(FgModule source, FgModule target, IntMatrix matrix);
Morphism identity_morphism(const FgModule& M);
Morphism zero_morphism(const FgModule& source, const FgModule& target);
Morphism compose(const Morphism& g, const Morphism& f);  // g after f
Morphism add_morphisms(const Morphism& f, const Morphism& g);
Morphism scale_morphism(const Int& c, const Morphism& f);
Coords apply(const Morphism& f, const Coords& x);
bool is_zero_morphism(const Morphism& f);

struct Submodule {
  FgModule ambient;
  std::vector<Coords> generators;  // reduced, zero generators dropped

  friend bool operator==(const Submodule&, const Submodule&) = default;
};

Submodule span(const FgModule& M, std::vector<Coords> generators);
Submodule zero_submodule(const FgModule& M);
Submodule full_submodule(const FgModule& M);
bool contains(const Submodule& S, const Coords& x);
bool submodule_leq(const Submodule& S, const Submodule& T);
bool submodule_eq(const Submodule& S, const Submodule& T);
bool is_zero_submodule(const Submodule& S);
bool is_full_submodule(const Submodule& S);
Submodule intersect(const Submodule& S, const Submodule& T);
Submodule sum_submodules(const Submodule& S, const Submodule& T);
IntMatrix generator_matrix(const Submodule& S);  // generators as columns

Submodule kernel(const Morphism& f);
Submodule image(const Morphism& f);
Submodule image_of(const Morphism& f, const Submodule& S);    // f(S)
Submodule preimage(const Morphism& f, const Submodule& T);    // f^-1(T)
bool is_injective(const Morphism& f);
bool is_surjective(const Morphism& f);

// Canonical decomposition of generators/relations data.
struct Presentation {
  FgModule mod;
  IntMatrix to_canon;    // canonical coords of each original generator-coordinate
  IntMatrix from_canon;  // a section: to_canon * from_canon == id in mod
};

Presentation canonical_presentation(const RingSpec& ring, int generators, const IntMatrix& relations);
FgModule canonical_form(const RingSpec& ring, int generators, const IntMatrix& relations);

struct QuotientData {
  FgModule mod;
  Morphism proj;
};

QuotientData quotient(const FgModule& M, const Submodule& S);
QuotientData cokernel(const Morphism& f);

// A submodule as a module in its own right, with the embedding back into the
// ambient and a coordinate map for elements known to lie in the submodule.
struct SubStructure {
  FgModule abs;
  Morphism emb;      // abs -> ambient, injective, image = the submodule
  IntMatrix gens;    // generator matrix used
  IntMatrix to_abs;  // maps generator-combination coords to abs coords
};

SubStructure submodule_structure(const Submodule& S);
Coords abs_coords(const SubStructure& st, const Coords& x_in_ambient);

struct DirectSum {
  FgModule mod;
  Morphism inj1, inj2;
  Morphism proj1, proj2;
};

DirectSum direct_sum(const FgModule& M, const FgModule& N);

}  // namespace eexact
