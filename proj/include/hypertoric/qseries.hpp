#pragma once

#include <functional>
#include <optional>

#include "hypertoric/data.hpp"
#include "hypertoric/ratfun.hpp"

namespace htx {

/** (x)_d = phi(x)/phi(q^d x): for d >= 0 the product prod_{l=0}^{d-1}(1 - q^l x),
 *  for d < 0 the inverse product 1/prod_{l=1}^{-d}(1 - q^{-l} x). */
RatFun pochhammer(const SignedMonomial& x, int64_t d);

/** {a}_d = (-q^(1/2) hbar^(-1/2))^d (hbar a)_d / (q a)_d. */
RatFun bracket(const SignedMonomial& a, int64_t d);
/** Second closed form (-q^(1/2) hbar^(-1/2))^(-d) (a^{-1})_{-d} / (q hbar^{-1} a^{-1})_{-d};
 *  equal to bracket identically. */
RatFun bracket_alt(const SignedMonomial& a, int64_t d);

/** Coefficients c_0..c_N of phi(u) = prod_{l>=0}(1 - q^l u) as a u-series,
 *  derived from phi(u) = (1-u) phi(qu). */
std::vector<RatFun> phi_u_coeffs(int N);

/** Both sides of phi(xz)/phi(z) = sum_d (x)_d/(q)_d z^d as z-series to order N. */
std::vector<RatFun> qbinom_lhs(const SignedMonomial& x, int N);
std::vector<RatFun> qbinom_rhs(const SignedMonomial& x, int N);

/** Truncated series over the degree cone of a fixed point: coordinates d_j
 *  along A_p (0 <= d_j <= D on A_p^+, -D <= d_j <= 0 on A_p^-), dense storage,
 *  with an explicit unknown state distinct from zero. */
struct KahlerSeries {
  std::vector<int> A;    // original indices, frame order
  std::vector<int> sgn;  // +1 / -1 per position
  int D = 0;
  std::vector<std::optional<RatFun>> c;

  static KahlerSeries make(const FramedData& f, int D);

  size_t size() const { return c.size(); }
  bool in_box(const std::vector<int64_t>& d) const;
  size_t idx(const std::vector<int64_t>& d) const;
  std::vector<int64_t> degree_at(size_t index) const;

  const std::optional<RatFun>& at(const std::vector<int64_t>& d) const;
  void set(const std::vector<int64_t>& d, RatFun v);

  /** c'_d = c_{d - delta}; degrees reaching outside the box become unknown. */
  KahlerSeries shift(const std::vector<int64_t>& delta) const;
  KahlerSeries map(const std::function<RatFun(const RatFun&)>& fn) const;
  KahlerSeries operator+(const KahlerSeries& o) const;
  KahlerSeries operator-(const KahlerSeries& o) const;
  /** Cone convolution; exact on the whole box because the sign constraints
   *  make every decomposition of an in-box degree stay in the box. */
  KahlerSeries operator*(const KahlerSeries& o) const;
  KahlerSeries scale(const RatFun& r) const;
};

/** Degree of L_i at box degree d: d_j on A_p, sum_j C_ij d_j on p. */
IVec full_degree(const FramedData& f, const std::vector<int64_t>& d);

/** L-hat_i: multiply the degree-d coefficient by x_i|_p q^{D_i(d)}. */
KahlerSeries line_shift(const FramedData& f, const KahlerSeries& s, int i);

/** Coefficient-wise substitution a_i -> q^m a_i. */
KahlerSeries subst_a(const KahlerSeries& s, int i, int64_t m = 1);

}  // namespace htx
