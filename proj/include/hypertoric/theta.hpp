#pragma once

#include "hypertoric/monomial.hpp"

namespace htx {

/** Options for numeric evaluation of infinite products. */
struct EvalOpts {
  int trunc = 40;
};

/** Formal product
 *      c * m * sq^(1/2) * prod_u theta(u)^e(u) * prod_v phi(v)^f(v)
 *  where theta is the odd Jacobi theta function
 *      theta(x) = (x^(1/2) - x^(-1/2)) prod_{d>=1} (1 - q^d x)(1 - q^d / x)
 *  and phi the infinite q-Pochhammer
 *      phi(x) = prod_{d>=0} (1 - q^d x).
 *  Arguments are signed Laurent monomials. Theta arguments are canonicalized
 *  with theta(q^r x) = (-1)^r q^(-r^2/2) x^(-r) theta(x) and
 *  theta(1/x) = -theta(x), so equal products get equal representations.
 *  theta(1) and phi(1) vanish; they are kept as explicit keys so that matrix
 *  assembly can count zeros of numerator and denominator exactly. */
struct ThetaExpr {
  Rat c = 1;
  Mono m;
  SignedMonomial sq;  // pending square root of this signed monomial
  std::map<SignedMonomial, int> th;
  std::map<SignedMonomial, int> ph;

  static ThetaExpr one() { return {}; }
  static ThetaExpr zero();

  bool is_zero() const { return c == 0; }
  /** Net exponent of the vanishing keys theta(1), phi(1). */
  int one_pow() const;

  ThetaExpr& mul_rat(const Rat& v);
  ThetaExpr& mul_mono(const SignedMonomial& mm, int64_t e = 1);
  /** Multiply by (arg)^(1/2). */
  ThetaExpr& mul_sqrt(const SignedMonomial& arg);
  ThetaExpr& mul_theta(const SignedMonomial& arg, int e = 1);
  ThetaExpr& mul_phi(const SignedMonomial& arg, int e = 1);

  ThetaExpr operator*(const ThetaExpr& o) const;
  ThetaExpr inv() const;
  ThetaExpr operator/(const ThetaExpr& o) const;
  bool operator==(const ThetaExpr& o) const;

  /** Rewrite every theta factor through theta(x) = x^(1/2) phi(qx) phi(1/x). */
  ThetaExpr to_phi() const;
  /** Cancel matched phi(1) factors; requires net exponent zero. */
  ThetaExpr cancel_ones() const;

  ThetaExpr subst(SymId s, const SignedMonomial& M) const;

  Cplx eval(const Assignment& v, const EvalOpts& o = {}) const;
  std::string str() const;
};

/** Truncated numeric products used by ThetaExpr::eval. */
Cplx theta_eval(Cplx q, Cplx x, int trunc);
Cplx phi_eval(Cplx q, Cplx x, int trunc);

}  // namespace htx
