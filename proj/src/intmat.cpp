#include "eexact/intmat.hpp"

#include <algorithm>
#include <utility>

namespace eexact {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rws) {
  rows = static_cast<int>(rws.size());
  cols = rows ? static_cast<int>(rws.begin()->size()) : 0;
  a.reserve(static_cast<std::size_t>(rows) * cols);
  for (const auto& r : rws) {
    if (static_cast<int>(r.size()) != cols) fail(ErrorKind::DimensionMismatch, "ragged rows");
    for (long v : r) a.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool IntMatrix::is_zero() const {
  return std::all_of(a.begin(), a.end(), [](const Int& v) { return v == 0; });
}

bool IntMatrix::is_identity() const {
  if (rows != cols) return false;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

std::vector<Int> IntMatrix::col(int j) const {
  std::vector<Int> v(rows);
  for (int i = 0; i < rows; ++i) v[i] = at(i, j);
  return v;
}

std::vector<Int> IntMatrix::row(int i) const {
  std::vector<Int> v(cols);
  for (int j = 0; j < cols; ++j) v[j] = at(i, j);
  return v;
}

void IntMatrix::set_col(int j, const std::vector<Int>& v) {
  for (int i = 0; i < rows; ++i) at(i, j) = v[i];
}

IntMatrix mul(const IntMatrix& A, const IntMatrix& B) {
  if (A.cols != B.rows) fail(ErrorKind::DimensionMismatch, "mul shape");
  IntMatrix C(A.rows, B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int k = 0; k < A.cols; ++k) {
      const Int& aik = A.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < B.cols; ++j) C.at(i, j) += aik * B.at(k, j);
    }
  return C;
}

std::vector<Int> mul(const IntMatrix& A, const std::vector<Int>& x) {
  if (A.cols != static_cast<int>(x.size())) fail(ErrorKind::DimensionMismatch, "mul vec shape");
  std::vector<Int> y(A.rows);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) y[i] += A.at(i, j) * x[j];
  return y;
}

IntMatrix hstack(const IntMatrix& A, const IntMatrix& B) {
  if (A.rows != B.rows) fail(ErrorKind::DimensionMismatch, "hstack rows");
  IntMatrix C(A.rows, A.cols + B.cols);
  for (int i = 0; i < A.rows; ++i) {
    for (int j = 0; j < A.cols; ++j) C.at(i, j) = A.at(i, j);
    for (int j = 0; j < B.cols; ++j) C.at(i, A.cols + j) = B.at(i, j);
  }
  return C;
}

IntMatrix vstack(const IntMatrix& A, const IntMatrix& B) {
  if (A.cols != B.cols) fail(ErrorKind::DimensionMismatch, "vstack cols");
  IntMatrix C(A.rows + B.rows, A.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) C.at(i, j) = A.at(i, j);
  for (int i = 0; i < B.rows; ++i)
    for (int j = 0; j < B.cols; ++j) C.at(A.rows + i, j) = B.at(i, j);
  return C;
}

IntMatrix negate(const IntMatrix& A) {
  IntMatrix B = A;
  for (auto& v : B.a) v = -v;
  return B;
}

IntMatrix transpose(const IntMatrix& A) {
  IntMatrix B(A.cols, A.rows);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) B.at(j, i) = A.at(i, j);
  return B;
}

IntMatrix from_cols(int rows, const std::vector<std::vector<Int>>& cols) {
  IntMatrix C(rows, static_cast<int>(cols.size()));
  for (int j = 0; j < C.cols; ++j) {
    if (static_cast<int>(cols[j].size()) != rows) fail(ErrorKind::DimensionMismatch, "from_cols");
    for (int i = 0; i < rows; ++i) C.at(i, j) = cols[j][i];
  }
  return C;
}

IntMatrix diag(int rows, int cols, const std::vector<Int>& d) {
  IntMatrix C(rows, cols);
  for (int i = 0; i < static_cast<int>(d.size()); ++i) C.at(i, i) = d[i];
  return C;
}

IntMatrix submatrix_rows(const IntMatrix& A, const std::vector<int>& keep) {
  IntMatrix C(static_cast<int>(keep.size()), A.cols);
  for (int i = 0; i < C.rows; ++i)
    for (int j = 0; j < A.cols; ++j) C.at(i, j) = A.at(keep[i], j);
  return C;
}

IntMatrix submatrix_cols(const IntMatrix& A, const std::vector<int>& keep) {
  IntMatrix C(A.rows, static_cast<int>(keep.size()));
  for (int j = 0; j < C.cols; ++j)
    for (int i = 0; i < A.rows; ++i) C.at(i, j) = A.at(i, keep[j]);
  return C;
}

namespace {

void swap_rows(IntMatrix& M, int r, int s) {
  if (r == s) return;
  for (int j = 0; j < M.cols; ++j) std::swap(M.at(r, j), M.at(s, j));
}

void swap_cols(IntMatrix& M, int r, int s) {
  if (r == s) return;
  for (int i = 0; i < M.rows; ++i) std::swap(M.at(i, r), M.at(i, s));
}

// row r -= q * row s
void row_sub(IntMatrix& M, int r, int s, const Int& q) {
  if (q == 0) return;
  for (int j = 0; j < M.cols; ++j) M.at(r, j) -= q * M.at(s, j);
}

void col_sub(IntMatrix& M, int r, int s, const Int& q) {
  if (q == 0) return;
  for (int i = 0; i < M.rows; ++i) M.at(i, r) -= q * M.at(i, s);
}

void row_add(IntMatrix& M, int r, int s) {
  for (int j = 0; j < M.cols; ++j) M.at(r, j) += M.at(s, j);
}

Int floordiv(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SnfDecomposition snf(const IntMatrix& A) {
  const int m = A.rows, n = A.cols;
  SnfDecomposition s{IntMatrix::identity(m), A, IntMatrix::identity(n)};
  IntMatrix& D = s.D;
  IntMatrix& U = s.U;
  IntMatrix& V = s.V;

  const int r = std::min(m, n);
  for (int t = 0; t < r; ++t) {
    for (;;) {
      // pivot: nonzero entry of least magnitude in the trailing block
      int pi = -1, pj = -1;
      for (int i = t; i < m; ++i)
        for (int j = t; j < n; ++j) {
          const Int& v = D.at(i, j);
          if (v == 0) continue;
          if (pi < 0 || mpz_cmpabs(v.get_mpz_t(), D.at(pi, pj).get_mpz_t()) < 0) { pi = i; pj = j; }
        }
      if (pi < 0) { t = r; break; }  // trailing block all zero
      swap_rows(D, t, pi), swap_rows(U, t, pi);
      swap_cols(D, t, pj), swap_cols(V, t, pj);

      const Int p = D.at(t, t);
      bool clean = true;
      for (int i = t + 1; i < m; ++i) {
        Int q = floordiv(D.at(i, t), p);
        row_sub(D, i, t, q), row_sub(U, i, t, q);
        if (D.at(i, t) != 0) clean = false;
      }
      for (int j = t + 1; j < n; ++j) {
        Int q = floordiv(D.at(t, j), p);
        col_sub(D, j, t, q), col_sub(V, j, t, q);
        if (D.at(t, j) != 0) clean = false;
      }
      if (!clean) continue;  // remainders are smaller than |p|; re-pivot

      // pivot must divide the rest of the block for the chain to hold
      int bi = -1;
      for (int i = t + 1; i < m && bi < 0; ++i)
        for (int j = t + 1; j < n; ++j)
          if (D.at(i, j) % p != 0) { bi = i; break; }
      if (bi < 0) break;
      row_add(D, t, bi), row_add(U, t, bi);  // drags the obstruction into row t
    }
    if (t >= r) break;
  }
  for (int t = 0; t < r; ++t)
    if (D.at(t, t) < 0) {
      for (int j = 0; j < n; ++j) D.at(t, j) = -D.at(t, j);
      for (int j = 0; j < m; ++j) U.at(t, j) = -U.at(t, j);
    }
  return s;
}

std::vector<Int> snf_diagonal(const IntMatrix& A) {
  IntMatrix D = snf(A).D;
  std::vector<Int> d;
  for (int t = 0; t < std::min(D.rows, D.cols); ++t) d.push_back(D.at(t, t));
  return d;
}

int rank_of(const IntMatrix& A) {
  auto d = snf_diagonal(A);
  return static_cast<int>(std::count_if(d.begin(), d.end(), [](const Int& v) { return v != 0; }));
}

std::optional<std::vector<Int>> solve_linear(const IntMatrix& A, const std::vector<Int>& b,
                                             const Int& modulus) {
  if (static_cast<int>(b.size()) != A.rows) fail(ErrorKind::DimensionMismatch, "solve shape");
  IntMatrix M = A;
  if (modulus != 0) M = hstack(A, diag(A.rows, A.rows, std::vector<Int>(A.rows, modulus)));
  SnfDecomposition s = snf(M);
  std::vector<Int> c = mul(s.U, b);
  const int k = std::min(M.rows, M.cols);
  std::vector<Int> y(M.cols, 0);
  for (int i = 0; i < M.rows; ++i) {
    const Int d = i < k ? s.D.at(i, i) : Int(0);
    if (d == 0) {
      if (c[i] != 0) return std::nullopt;
    } else {
      if (c[i] % d != 0) return std::nullopt;
      y[i] = c[i] / d;
    }
  }
  std::vector<Int> x = mul(s.V, y);
  x.resize(A.cols);  // drop the modulus multipliers
  // substitute back; with a modulus, equality up to multiples of it
  std::vector<Int> check = mul(A, x);
  for (int i = 0; i < A.rows; ++i) {
    Int diff = check[i] - b[i];
    if (modulus != 0) diff %= modulus;
    if (diff != 0) fail(ErrorKind::DimensionMismatch, "solve verification failed");
  }
  return x;
}

IntMatrix kernel_basis(const IntMatrix& A) {
  SnfDecomposition s = snf(A);
  std::vector<int> keep;
  const int k = std::min(A.rows, A.cols);
  for (int j = 0; j < A.cols; ++j)
    if (j >= k || s.D.at(j, j) == 0) keep.push_back(j);
  return submatrix_cols(s.V, keep);
}

IntMatrix unimodular_inverse(const IntMatrix& M) {
  if (M.rows != M.cols) fail(ErrorKind::DimensionMismatch, "inverse of non-square");
  SnfDecomposition s = snf(M);
  if (!s.D.is_identity()) fail(ErrorKind::DimensionMismatch, "matrix not unimodular");
  return mul(s.V, s.U);  // D = U M V = I  =>  M^-1 = V U
}

std::vector<Int> prime_factors(const Int& n) {
  std::vector<Int> ps;
  Int m = abs(n);
  if (m <= 1) return ps;
  for (Int p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
    if (m % p != 0) continue;
    ps.push_back(p);
    while (m % p == 0) m /= p;
  }
  if (m > 1) ps.push_back(m);
  return ps;
}

}  // namespace eexact
