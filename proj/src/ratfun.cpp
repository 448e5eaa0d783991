#include "hypertoric/ratfun.hpp"

#include <sstream>

namespace htx {

namespace {

Rat rat_pow(const Rat& v, int64_t n) {
  if (n == 0) return Rat(1);
  Rat base = n > 0 ? v : Rat(1) / v;
  int64_t e = n > 0 ? n : -n;
  Rat r(1);
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

/** Replace q^e (even e, in half-power units) by q0^(e/2) in every term. */
Poly poly_subst_q(const Poly& p, const SignedMonomial& q0) {
  Poly r;
  for (auto& [mo, c] : p.t) {
    Mono mm = mo;
    int64_t e = 0;
    auto it = mm.e.find(symQ());
    if (it != mm.e.end()) {
      e = it->second;
      mm.e.erase(it);
    }
    if (e % 2 != 0) throw Error("FractionalQPower", "q-exponent not integral at q-substitution");
    SignedMonomial s = q0.pow(e / 2);
    if (s.sgn < 0)
      r.add_term(mm * s.m, -c);
    else
      r.add_term(mm * s.m, c);
  }
  return r;
}

}  // namespace

RatFun RatFun::from(const SignedMonomial& m) {
  RatFun r(Rat(m.sgn));
  r.mono = m.m;
  return r;
}

RatFun RatFun::from_poly(const Poly& p) {
  if (p.is_zero()) return zero();
  PolyFactor pf = factor_poly(p);
  RatFun r(pf.unit);
  r.mono = pf.mono;
  if (!pf.prim.is_one()) r.f[pf.prim] = 1;
  return r;
}

RatFun RatFun::q_pow(int64_t e) {
  RatFun r = one();
  if (e) r.mono.e[symQ()] = e;
  return r;
}

RatFun RatFun::h_pow(int64_t e) {
  RatFun r = one();
  if (e) r.mono.e[symH()] = e;
  return r;
}

RatFun RatFun::operator*(const RatFun& o) const {
  if (is_zero() || o.is_zero()) return zero();
  RatFun r(c * o.c);
  r.mono = mono * o.mono;
  r.f = f;
  for (auto& [g, e] : o.f) {
    int& slot = r.f[g];
    slot += e;
    if (slot == 0) r.f.erase(g);
  }
  return r;
}

RatFun RatFun::operator/(const RatFun& o) const {
  if (o.is_zero()) throw Error("DivisionByZero", "rational function division by zero");
  return *this * o.pow(-1);
}

RatFun RatFun::pow(int64_t n) const {
  if (n == 0) return one();
  if (is_zero()) {
    if (n < 0) throw Error("DivisionByZero", "negative power of zero");
    return zero();
  }
  RatFun r(rat_pow(c, n));
  r.mono = mono.pow(n);
  for (auto& [g, e] : f) {
    int64_t ne = e * n;
    r.f[g] = static_cast<int>(ne);
  }
  return r;
}

RatFun RatFun::operator+(const RatFun& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;

  // Shared part: per-symbol min of monomial exponents, per-factor min of
  // multiplicities (possibly negative), gcd/lcm of the rational contents.
  Mono cm = Mono::gcd(mono, o.mono);
  std::map<Poly, int> cf;
  for (auto& [g, e] : f) {
    auto it = o.f.find(g);
    int oe = it == o.f.end() ? 0 : it->second;
    int m = std::min(e, oe);
    if (m != 0) cf[g] = m;
  }
  for (auto& [g, e] : o.f) {
    if (f.count(g)) continue;
    int m = std::min(0, e);
    if (m != 0) cf[g] = m;
  }
  Int cn = gcd(numerator(c), numerator(o.c));
  Int cd = lcm(denominator(c), denominator(o.c));
  Rat cc = Rat(cn) / Rat(cd);

  auto remainder = [&](const RatFun& x) {
    Poly r = Poly::from(x.c / cc);
    {
      Mono rm;
      for (auto& [s, e] : x.mono.e) rm.e[s] = e;
      for (auto& [s, e] : cm.e) {
        rm.e[s] -= e;
        if (rm.e[s] == 0) rm.e.erase(s);
      }
      r = r.mul_term(rm, Rat(1));
    }
    for (auto& [g, e] : x.f) {
      auto it = cf.find(g);
      int re = e - (it == cf.end() ? 0 : it->second);
      for (int i = 0; i < re; ++i) r = r * g;
    }
    for (auto& [g, e] : cf) {
      if (x.f.count(g)) continue;
      for (int i = 0; i < -e; ++i) r = r * g;
    }
    return r;
  };

  Poly s = remainder(*this) + remainder(o);
  if (s.is_zero()) return zero();

  // Cancel the expanded sum against shared denominator factors.
  for (auto& [g, e] : cf) {
    while (e < 0) {
      Poly q;
      if (!Poly::try_divide(s, g, q)) break;
      s = q;
      ++e;
    }
  }
  for (auto it = cf.begin(); it != cf.end();) {
    if (it->second == 0)
      it = cf.erase(it);
    else
      ++it;
  }

  RatFun shared(cc);
  shared.mono = cm;
  shared.f = cf;
  return shared * from_poly(s);
}

RatFun RatFun::operator-(const RatFun& o) const { return *this + (-o); }

RatFun RatFun::operator-() const {
  RatFun r = *this;
  r.c = -r.c;
  return r;
}

RatFun RatFun::subst(SymId s, const SignedMonomial& M) const {
  if (is_zero()) return zero();
  RatFun r(c);
  r.mono = mono;
  auto it = r.mono.e.find(s);
  if (it != r.mono.e.end()) {
    int64_t e = it->second;
    r.mono.e.erase(it);
    SignedMonomial p = M.pow(e);
    if (p.sgn < 0) r.c = -r.c;
    r.mono = r.mono * p.m;
  }
  for (auto& [g, e] : f) {
    Poly gs = g.subst(s, M);
    if (gs.is_zero()) throw Error("DegenerateSubstitution", "factor vanished under substitution");
    r = r * from_poly(gs).pow(e);
  }
  return r;
}

RatFun RatFun::shift_a(int i, int64_t m) const {
  SignedMonomial M = SignedMonomial::of(symA(i), 1);
  M.m.e[symQ()] = 2 * m;
  return subst(symA(i), M);
}

RatFun RatFun::cover_pow(int64_t m) const {
  if (is_zero()) return zero();
  RatFun r(c);
  for (auto& [s, e] : mono.e) {
    bool hit = sym_kind(s) == SymKind::A || sym_kind(s) == SymKind::H;
    r.mono.e[s] = hit ? e * m : e;
  }
  for (auto& [g, e] : f) r = r * from_poly(g.cover_pow(m)).pow(e);
  return r;
}

RatFun RatFun::subst_q(const SignedMonomial& q0) const {
  if (is_zero()) return zero();
  RatFun r(c);
  r.mono = mono;
  auto it = r.mono.e.find(symQ());
  if (it != r.mono.e.end()) {
    int64_t e = it->second;
    r.mono.e.erase(it);
    if (e % 2 != 0) throw Error("FractionalQPower", "q-exponent not integral at q-substitution");
    SignedMonomial p = q0.pow(e / 2);
    if (p.sgn < 0) r.c = -r.c;
    r.mono = r.mono * p.m;
  }
  for (auto& [g, e] : f) {
    Poly gs = poly_subst_q(g, q0);
    if (gs.is_zero()) {
      if (e > 0) return zero();
      throw Error("PoleAtQ", "denominator factor vanishes at the substituted q");
    }
    r = r * from_poly(gs).pow(e);
  }
  return r;
}

int64_t RatFun::val_q() const {
  if (is_zero()) throw Error("ZeroValuation", "valuation of zero");
  int64_t v = 0;
  auto it = mono.e.find(symQ());
  if (it != mono.e.end()) v = it->second;
  for (auto& [g, e] : f) v += int64_t(e) * g.min_exp(symQ());
  return v;
}

int64_t RatFun::deg_q() const {
  if (is_zero()) throw Error("ZeroValuation", "degree of zero");
  int64_t v = 0;
  auto it = mono.e.find(symQ());
  if (it != mono.e.end()) v = it->second;
  for (auto& [g, e] : f) v += int64_t(e) * g.max_exp(symQ());
  return v;
}

void RatFun::to_fraction(Poly& num, Poly& den) const {
  num = Poly::from(c);
  den = Poly::one();
  if (is_zero()) return;
  num = num.mul_term(mono, Rat(1));
  for (auto& [g, e] : f) {
    Poly& tgt = e > 0 ? num : den;
    for (int i = 0; i < std::abs(e); ++i) tgt = tgt * g;
  }
}

Cplx RatFun::eval(const Assignment& v) const {
  if (is_zero()) return 0.0;
  Cplx r(double(c.convert_to<double>()), 0.0);
  r *= mono.eval(v);
  for (auto& [g, e] : f) {
    Cplx gv = g.eval(v);
    Cplx p = 1.0;
    for (int i = 0; i < std::abs(e); ++i) p *= gv;
    r = e > 0 ? r * p : r / p;
  }
  return r;
}

std::string RatFun::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  os << c.str();
  if (!mono.is_one()) os << " * " << mono.str();
  for (auto& [g, e] : f) {
    os << " * (" << g.str() << ")";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

}  // namespace htx
