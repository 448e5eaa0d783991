#pragma once

#include "hypertoric/monomial.hpp"

namespace htx {

/** Sparse multivariate Laurent polynomial with rational coefficients.
 *  Terms keyed by Mono in its lexicographic order. */
struct Poly {
  std::map<Mono, Rat> t;

  static Poly zero() { return {}; }
  static Poly one();
  static Poly from(const Rat& c);
  static Poly from(const SignedMonomial& m, const Rat& c = 1);

  bool is_zero() const { return t.empty(); }
  bool is_one() const;
  size_t n_terms() const { return t.size(); }

  void add_term(const Mono& m, const Rat& c);

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly mul_term(const Mono& m, const Rat& c) const;
  Poly pow(int64_t n) const;
  bool operator==(const Poly& o) const { return t == o.t; }
  bool operator<(const Poly& o) const;

  /** Replace symbol s by the signed monomial M in every term. */
  Poly subst(SymId s, const SignedMonomial& M) const;
  /** m-fold cover of the framing torus: every a_i and hbar^(1/2) exponent is
   *  multiplied by m, so that fractional roots of monomials become integral. */
  Poly cover_pow(int64_t m) const;

  /** Smallest / largest exponent of symbol s across terms (0 if absent). */
  int64_t min_exp(SymId s) const;
  int64_t max_exp(SymId s) const;

  /** Componentwise-minimum monomial of all terms. */
  Mono content_mono() const;

  /** Exact multivariate division; true and sets quot iff den | num. */
  static bool try_divide(const Poly& num, const Poly& den, Poly& quot);

  Cplx eval(const Assignment& v) const;
  std::string str() const;
};

/** Canonical factorization of a polynomial: f = unit * mono * prim where prim
 *  has integer coprime coefficients, positive leading coefficient, zero
 *  content monomial and at least two terms (or is exactly 1). */
struct PolyFactor {
  Rat unit;
  Mono mono;
  Poly prim;
};
PolyFactor factor_poly(const Poly& f);

}  // namespace htx
