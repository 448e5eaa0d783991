#pragma once

#include <string>
#include <vector>

#include "hypertoric/monomial.hpp"

namespace htx {

/** Lattice data of a smooth hypertoric variety:
 *      0 -> Z^k --iota--> Z^n --beta--> Z^d -> 0
 *  together with integral lifts of the stability and chamber parameters. */
struct HypertoricData {
  int n = 0, k = 0, d = 0;
  IMat iota;  // n x k
  IMat beta;  // d x n
  IVec theta_lift, sigma_lift;  // length n
  bool theta_given = false, sigma_given = false;
  std::string name;
};

/** Parse and validate from a JSON document (keys: iota, beta?, theta_lift?,
 *  sigma_lift?, name?). Throws NonExact, NotSaturated, NotUnimodular,
 *  RankDeficient, DataError. */
HypertoricData load_data(const std::string& json_text);
HypertoricData load_data_file(const std::string& path);
void validate(const HypertoricData& x);

/** Mirror data: iota' = beta^T, beta' = iota^T, lifts swapped and negated. */
HypertoricData dualize(const HypertoricData& x);

/** A fixed point p with the standard p-frame and everything localization
 *  needs: the matrix C(p), the arrangement vertex, sign splittings, and the
 *  restriction monomials of the tautological line bundles. */
struct FramedData {
  HypertoricData data;
  std::vector<int> p;  // sorted, |p| = d (0-based indices)
  std::vector<int> A;  // complement, |A| = k
  IMat C;    // d x k, rows along p, columns along A
  IMat Uk;   // (iota_A)^{-1}, the Z^k basis change
  IMat Ud;   // (beta_p)^{-1}, the Z^d basis change
  IVec vertex;  // v with <v, beta e_i> = -theta_i for i in p

  std::vector<int> pos;     // position of index i within p or A
  std::vector<int> member;  // +1: i in p, 0: i in A
  std::vector<int> sideA;   // for i in A: +1/-1 for A_p^+/-; 0 elsewhere
  std::vector<int> sideP;   // for i in p: +1/-1 for p^+/-; 0 if sigma tie
  bool sigma_ok = true;

  std::vector<int> Aplus, Aminus, pplus, pminus;

  bool in_p(int i) const { return member[i] == 1; }
  void require_sigma_generic() const;

  /** Restriction x_i|_p: 1 on A_p^+, hbar^{-1} on A_p^-, and
   *  a_i prod_j a_j^{-C_ij} hbar^{-sum_{j in A^-} C_ij} on p. */
  SignedMonomial x_rest(int i) const;
  /** alpha_i(p) = a_i prod_{j in A} a_j^{-C_ij}, for i in p. */
  Mono alpha(int i) const;
  /** zeta_j(p) = z_j prod_{i in p} z_i^{C_ij}, for j in A. */
  Mono zeta(int j) const;
  /** zeta_sharp_j(p) = zeta_j(p) (-hbar^{-1/2})^{1 + sum_{i in p} C_ij}. */
  SignedMonomial zeta_sharp(int j) const;
  /** sum_{i in p^+} C_ij. */
  int64_t hshift(int j) const;
  /** Exponent of a_i in x_m|_p. */
  int64_t a_exp(int m, int i) const;
};

/** Build the standard p-frame. Throws NotAVertex when |p| != d or the minor
 *  is singular, NonGenericTheta when the vertex lies on an extra hyperplane. */
FramedData standard_frame(const HypertoricData& x, std::vector<int> p);

/** All fixed points, ordered lexicographically by p. */
std::vector<FramedData> fixed_points(const HypertoricData& x);

/** p' = complement of p, as the fixed point of the dual data. */
std::vector<int> dual_point(const FramedData& f);

}  // namespace htx
