#pragma once
#include <gmpxx.h>

#include <initializer_list>
#include <optional>
#include <vector>

#include "eexact/error.hpp"

namespace eexact {

using Int = mpz_class;

// Dense row-major matrix over Z. Any dimension may be 0; a 0-by-n or n-by-0
// matrix is a legal (empty) linear map.
struct IntMatrix {
  int rows = 0, cols = 0;
  std::vector<Int> a;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rws);

  Int& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const Int& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

  static IntMatrix identity(int n);

  bool is_zero() const;
  bool is_identity() const;
  std::vector<Int> col(int j) const;
  std::vector<Int> row(int i) const;
  void set_col(int j, const std::vector<Int>& v);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

IntMatrix mul(const IntMatrix& A, const IntMatrix& B);
std::vector<Int> mul(const IntMatrix& A, const std::vector<Int>& x);
IntMatrix hstack(const IntMatrix& A, const IntMatrix& B);
IntMatrix vstack(const IntMatrix& A, const IntMatrix& B);
IntMatrix negate(const IntMatrix& A);
IntMatrix transpose(const IntMatrix& A);
IntMatrix from_cols(int rows, const std::vector<std::vector<Int>>& cols);
IntMatrix diag(int rows, int cols, const std::vector<Int>& d);
IntMatrix submatrix_rows(const IntMatrix& A, const std::vector<int>& keep);
IntMatrix submatrix_cols(const IntMatrix& A, const std::vector<int>& keep);

// D = U * A * V with U, V unimodular; D diagonal, d1 | d2 | ... | dk, all
// di >= 0, zeros trailing.
struct SnfDecomposition {
  IntMatrix U, D, V;
};

SnfDecomposition snf(const IntMatrix& A);
std::vector<Int> snf_diagonal(const IntMatrix& A);
int rank_of(const IntMatrix& A);

// Solves A x = b over Z, or over Z/m when modulus m > 0 is given (then a
// solution of A x = b + m t is returned, reduced). nullopt when unsolvable.
std::optional<std::vector<Int>> solve_linear(const IntMatrix& A, const std::vector<Int>& b,
                                             const Int& modulus = 0);

// Columns form a basis of the full lattice {x : A x = 0}.
IntMatrix kernel_basis(const IntMatrix& A);

// Inverse of a unimodular square matrix (error if not unimodular).
IntMatrix unimodular_inverse(const IntMatrix& U);

// Distinct prime divisors of |n|, ascending. Trial division; inputs here are
// invariant factors of desk-scale modules.
std::vector<Int> prime_factors(const Int& n);

}  // namespace eexact
