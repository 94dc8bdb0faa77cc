#pragma once
#include <gmpxx.h>

#include "eexact/complexes.hpp"
#include "eexact/torsion.hpp"

namespace eexact {

using Rat = mpq_class;

// M localized at F: tensoring Z-invariants with the localized ring. Inverting
// the primes of F kills exactly their part of each invariant; inverting all
// primes (Goldie -> Q) kills the whole torsion part.
struct LocalizedModule {
  GabrielTopology topology;
  std::vector<Int> invariants;  // over the localized ring; P-parts stripped out

  int size() const { return static_cast<int>(invariants.size()); }
  bool is_zero() const { return invariants.empty(); }
  friend bool operator==(const LocalizedModule&, const LocalizedModule&) = default;
};

struct LocalizedMorphism {
  LocalizedModule source, target;
  std::vector<Rat> matrix;  // row-major, target.size() x source.size()

  Rat& at(int i, int j) { return matrix[static_cast<std::size_t>(i) * source.size() + j]; }
  const Rat& at(int i, int j) const { return matrix[static_cast<std::size_t>(i) * source.size() + j]; }
  friend bool operator==(const LocalizedMorphism&, const LocalizedMorphism&) = default;
};

LocalizedModule localize_module(const FgModule& M, const GabrielTopology& F);
LocalizedMorphism localize_morphism(const Morphism& f, const GabrielTopology& F);
LocalizedMorphism compose(const LocalizedMorphism& g, const LocalizedMorphism& f);
bool is_localized_iso(const LocalizedMorphism& f);

// the canonical map M -> M_F on elements, in the localized coordinates
std::vector<Rat> localize_coords(const FgModule& M, const GabrielTopology& F, const Coords& x);
std::vector<Rat> apply(const LocalizedMorphism& f, const std::vector<Rat>& x);
bool localized_equal(const LocalizedModule& M, const std::vector<Rat>& x, const std::vector<Rat>& y);

// f_F surjective, decided on the Z side: cokernel of f is F-torsion.
bool is_loc_surjective(const Morphism& f, const GabrielTopology& F);

// Same question by an unrelated route, kept separate on purpose: normal form
// of the localized presentation of coker. Used to cross-check the first.
bool loc_surjective_by_matrix(const Morphism& f, const GabrielTopology& F);

// Exactness of the localized complex.
bool is_loc_exact(const CochainComplex& C, const GabrielTopology& F);

}  // namespace eexact
