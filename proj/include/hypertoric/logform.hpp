#pragma once

#include <functional>

#include "hypertoric/monomial.hpp"

namespace htx {

/** Rational linear combination of formal logarithms of the base symbols.
 *  Coefficients are of full logarithms: v[symQ()] multiplies ln q (not
 *  ln q^(1/2)), and v[symM1()] multiplies ln(-1). */
struct LogVec {
  std::map<SymId, Rat> v;

  static LogVec of(SymId s, const Rat& c = 1);
  /** Componentwise logarithm of a signed Laurent monomial. */
  static LogVec log_of(const SignedMonomial& m);

  bool is_zero() const { return v.empty(); }
  LogVec operator+(const LogVec& o) const;
  LogVec operator-(const LogVec& o) const;
  LogVec operator*(const Rat& c) const;
  bool operator==(const LogVec& o) const { return v == o.v; }

  /** Exponentiate back to a signed monomial. Throws NonMonomialShift when an
   *  exponent is not integral (halves are fine on q and hbar, which are
   *  stored through their square-root symbols). */
  SignedMonomial exp_monomial() const;

  std::string str() const;
};

/** Quadratic form in formal logarithms, implicitly divided by ln q:
 *      P = ( sum_{u<=v} B[u,v] * ln u * ln v ) / ln q.
 *  This is exactly the shape of the magnetic-frame prefactors: shifting one
 *  variable by a power of q multiplies q^P by an honest monomial, which
 *  shift_factor computes. */
struct LogForm {
  std::map<std::pair<SymId, SymId>, Rat> B;

  static LogForm zero() { return {}; }

  /** Add c * L1 * L2 (symmetrized product of two log-linear forms). */
  void add_sym(const LogVec& l1, const LogVec& l2, const Rat& c = 1);

  bool is_zero() const;
  LogForm operator+(const LogForm& o) const;
  LogForm operator-(const LogForm& o) const;
  LogForm operator*(const Rat& c) const;
  bool operator==(const LogForm& o) const;

  /** Multiplicative factor produced by ln s -> ln s + t ln q:
   *      prod_{v != s} v^(t B[s,v]) * s^(2 t B[s,s]) * q^(t^2 B[s,s]). */
  SignedMonomial shift_factor(SymId s, const Rat& t = 1) const;

  /** Push the form through a symbol-to-log-vector substitution. */
  LogForm mapped(const std::function<LogVec(SymId)>& img) const;

  std::string str() const;
};

}  // namespace htx
