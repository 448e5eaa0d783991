#pragma once

#include "hypertoric/polynomial.hpp"

namespace htx {

/** Rational function kept in factored form:
 *      c * mono * prod_f f^e(f)
 *  where c is a nonzero rational (or the whole thing is zero), mono is a
 *  Laurent monomial, and every f is a canonical primitive polynomial with at
 *  least two terms. Multiplication and division are multiset operations;
 *  addition expands only the parts not shared by the two operands and then
 *  re-divides by the known denominator factors, so fractions stay reduced
 *  with respect to the factor pool. */
struct RatFun {
  Rat c = 0;
  Mono mono;
  std::map<Poly, int> f;

  RatFun() = default;
  explicit RatFun(const Rat& v) : c(v) {}

  static RatFun zero() { return {}; }
  static RatFun one() { return RatFun(Rat(1)); }
  static RatFun from(const Rat& v) { return RatFun(v); }
  static RatFun from(const SignedMonomial& m);
  static RatFun from_poly(const Poly& p);
  /** q^(e/2) and hbar^(e/2) as stored exponents of the half-power symbols. */
  static RatFun q_pow(int64_t e);
  static RatFun h_pow(int64_t e);

  bool is_zero() const { return c == 0; }
  bool is_one() const { return c == 1 && mono.is_one() && f.empty(); }

  RatFun operator*(const RatFun& o) const;
  RatFun operator/(const RatFun& o) const;
  RatFun pow(int64_t n) const;
  RatFun operator+(const RatFun& o) const;
  RatFun operator-(const RatFun& o) const;
  RatFun operator-() const;
  bool equals(const RatFun& o) const { return (*this - o).is_zero(); }

  RatFun subst(SymId s, const SignedMonomial& M) const;
  /** Substitute a_i -> q^m a_i. */
  RatFun shift_a(int i, int64_t m = 1) const;
  /** m-fold cover: scale all a_i and hbar^(1/2) exponents by m. */
  RatFun cover_pow(int64_t m) const;
  /** Evaluate at q = q0 (a signed monomial); every q-exponent in the
   *  expression must be an even multiple of 1/2, i.e. an integer power of q. */
  RatFun subst_q(const SignedMonomial& q0) const;

  /** Order of vanishing of the expression at Q = 0 (Q = q^(1/2)), counted in
   *  powers of Q; negative means a pole. */
  int64_t val_q() const;
  /** Degree in Q of the expression at infinity: max power of Q. */
  int64_t deg_q() const;

  /** Expand into a single fraction num/den of polynomials. */
  void to_fraction(Poly& num, Poly& den) const;

  Cplx eval(const Assignment& v) const;
  std::string str() const;
};

}  // namespace htx
