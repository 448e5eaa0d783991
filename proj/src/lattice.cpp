#include "hypertoric/lattice.hpp"

#include <algorithm>
#include <numeric>

namespace htx {

namespace {

// floor division for mpz
Int fdiv(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

void swap_rows(IMat& A, long i, long j) {
  if (i != j) A.row(i).swap(A.row(j));
}

}  // namespace

IMat hermite_row_form(IMat A, IMat& U) {
  const long m = A.rows();
  U = IMat::Identity(m, m);
  long r = 0;
  for (long c = 0; c < A.cols() && r < m; ++c) {
    // gcd elimination within column c on rows >= r
    while (true) {
      long piv = -1;
      Int best = 0;
      for (long i = r; i < m; ++i) {
        if (A(i, c) != 0 && (piv < 0 || abs(A(i, c)) < best)) {
          piv = i;
          best = abs(A(i, c));
        }
      }
      if (piv < 0) break;
      swap_rows(A, r, piv);
      swap_rows(U, r, piv);
      bool clean = true;
      for (long i = r + 1; i < m; ++i) {
        if (A(i, c) != 0) {
          Int q = fdiv(A(i, c), A(r, c));
          A.row(i) -= q * A.row(r);
          U.row(i) -= q * U.row(r);
          if (A(i, c) != 0) clean = false;
        }
      }
      if (clean) break;
    }
    if (A(r, c) == 0) continue;
    if (A(r, c) < 0) {
      A.row(r) = -A.row(r);
      U.row(r) = -U.row(r);
    }
    for (long i = 0; i < r; ++i) {
      Int q = fdiv(A(i, c), A(r, c));
      if (q != 0) {
        A.row(i) -= q * A.row(r);
        U.row(i) -= q * U.row(r);
      }
    }
    ++r;
  }
  return A;
}

IMat hermite_row_form(IMat A) {
  IMat U;
  return hermite_row_form(std::move(A), U);
}

IMat left_kernel_rows(const IMat& A) {
  IMat U;
  IMat H = hermite_row_form(A, U);
  long r = 0;
  for (long i = 0; i < H.rows(); ++i)
    if (!H.row(i).isZero(0)) ++r;
  IMat K(H.rows() - r, A.rows());
  for (long i = r; i < H.rows(); ++i) K.row(i - r) = U.row(i);
  return hermite_row_form(K);
}

std::vector<Int> smith_divisors(IMat A) {
  const long m = A.rows(), n = A.cols();
  std::vector<Int> div;
  long r = 0, c = 0;
  while (r < m && c < n) {
    // find smallest nonzero entry in the remaining block
    long pi = -1, pj = -1;
    Int best = 0;
    for (long i = r; i < m; ++i)
      for (long j = c; j < n; ++j)
        if (A(i, j) != 0 && (pi < 0 || abs(A(i, j)) < best)) {
          pi = i;
          pj = j;
          best = abs(A(i, j));
        }
    if (pi < 0) break;
    swap_rows(A, r, pi);
    A.col(c).swap(A.col(pj));
    bool again = false;
    for (long i = r + 1; i < m; ++i)
      if (A(i, c) != 0) {
        Int q = fdiv(A(i, c), A(r, c));
        A.row(i) -= q * A.row(r);
        if (A(i, c) != 0) again = true;
      }
    for (long j = c + 1; j < n; ++j)
      if (A(r, j) != 0) {
        Int q = fdiv(A(r, j), A(r, c));
        A.col(j) -= q * A.col(c);
        if (A(r, j) != 0) again = true;
      }
    if (again) continue;
    // ensure divisibility into the rest
    bool fixed = true;
    for (long i = r + 1; i < m && fixed; ++i)
      for (long j = c + 1; j < n && fixed; ++j)
        if (A(i, j) % A(r, c) != 0) {
          A.row(r) += A.row(i);
          fixed = false;
        }
    if (!fixed) continue;
    div.push_back(abs(A(r, c)));
    ++r;
    ++c;
  }
  return div;
}

Int det_int(IMat A) {
  const long n = A.rows();
  if (n != A.cols()) throw Error("RankDeficient", "determinant of non-square matrix");
  if (n == 0) return 1;
  Int sign = 1, prev = 1;
  for (long k = 0; k < n - 1; ++k) {
    if (A(k, k) == 0) {
      long s = -1;
      for (long i = k + 1; i < n; ++i)
        if (A(i, k) != 0) {
          s = i;
          break;
        }
      if (s < 0) return 0;
      swap_rows(A, k, s);
      sign = -sign;
    }
    for (long i = k + 1; i < n; ++i) {
      for (long j = k + 1; j < n; ++j) {
        A(i, j) = (A(i, j) * A(k, k) - A(i, k) * A(k, j)) / prev;
      }
      A(i, k) = 0;
    }
    prev = A(k, k);
  }
  return sign * A(n - 1, n - 1);
}

Int minor_det(const IMat& A, const std::vector<int>& rows, const std::vector<int>& cols) {
  IMat S(rows.size(), cols.size());
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j) S(i, j) = A(rows[i], cols[j]);
  return det_int(S);
}

int rank_int(IMat A) {
  IMat H = hermite_row_form(std::move(A));
  int r = 0;
  for (long i = 0; i < H.rows(); ++i)
    if (!H.row(i).isZero(0)) ++r;
  return r;
}

IMat adjugate(const IMat& A) {
  const long n = A.rows();
  IMat R(n, n);
  if (n == 0) return R;
  if (n == 1) {
    R(0, 0) = 1;
    return R;
  }
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      std::vector<int> rows, cols;
      for (int t : all)
        if (t != j) rows.push_back(t);
      for (int t : all)
        if (t != i) cols.push_back(t);
      Int m = minor_det(A, rows, cols);
      R(i, j) = (((i + j) % 2 == 0) ? m : -m);
    }
  return R;
}

IVec solve_unimodular(const IMat& M, const IVec& c) {
  Int d = det_int(M);
  if (d != 1 && d != -1) throw Error("NotUnimodular", "solve_unimodular needs det = +-1");
  IVec y = adjugate(M) * c;
  if (d == -1) y = -y;
  return y;
}

IMat select_cols(const IMat& A, const std::vector<int>& cols) {
  IMat S(A.rows(), cols.size());
  for (size_t j = 0; j < cols.size(); ++j) S.col(j) = A.col(cols[j]);
  return S;
}

IMat select_rows(const IMat& A, const std::vector<int>& rows) {
  IMat S(rows.size(), A.cols());
  for (size_t i = 0; i < rows.size(); ++i) S.row(i) = A.row(rows[i]);
  return S;
}

std::vector<int> complement(const std::vector<int>& s, int n) {
  std::vector<int> out;
  size_t k = 0;
  for (int i = 0; i < n; ++i) {
    if (k < s.size() && s[k] == i) {
      ++k;
    } else {
      out.push_back(i);
    }
  }
  return out;
}

}  // namespace htx
