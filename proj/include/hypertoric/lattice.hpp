#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace htx {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

using IMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;

/** Typed error carrying one of the documented failure names. */
struct Error : std::runtime_error {
  std::string code;
  Error(std::string c, const std::string& what)
      : std::runtime_error(c + ": " + what), code(std::move(c)) {}
};

/** Row-style Hermite normal form. Pivots positive, entries above a pivot
 *  reduced into [0, pivot). Zero rows sink to the bottom. */
IMat hermite_row_form(IMat A);

/** As above, also returning unimodular U with U * A_input = H. */
IMat hermite_row_form(IMat A, IMat& U);

/** Canonical basis of the left kernel {v : v^T A = 0}, one vector per row,
 *  Hermite-reduced so the first nonzero entry of each row is positive. */
IMat left_kernel_rows(const IMat& A);

/** Nonzero Smith divisors of A, in divisibility order. */
std::vector<Int> smith_divisors(IMat A);

/** Exact determinant (fraction-free Bareiss). */
Int det_int(IMat A);

/** Determinant of the submatrix on the given rows and columns. */
Int minor_det(const IMat& A, const std::vector<int>& rows, const std::vector<int>& cols);

/** Rank over the rationals. */
int rank_int(IMat A);

/** Adjugate matrix (transpose of cofactors). */
IMat adjugate(const IMat& A);

/** Solve M y = c for M with det = +-1. */
IVec solve_unimodular(const IMat& M, const IVec& c);

/** Columns of A restricted to an index list. */
IMat select_cols(const IMat& A, const std::vector<int>& cols);
IMat select_rows(const IMat& A, const std::vector<int>& rows);

/** Complement of a sorted index subset inside {0,...,n-1}. */
std::vector<int> complement(const std::vector<int>& s, int n);

}  // namespace htx
