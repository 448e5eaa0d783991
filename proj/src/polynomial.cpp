#include "hypertoric/polynomial.hpp"

#include <sstream>

namespace htx {

Poly Poly::one() {
  Poly p;
  p.t[Mono{}] = 1;
  return p;
}

bool Poly::is_one() const {
  return t.size() == 1 && t.begin()->first.is_one() && t.begin()->second == 1;
}

Poly Poly::from(const Rat& c) {
  Poly p;
  if (c != 0) p.t[Mono{}] = c;
  return p;
}

Poly Poly::from(const SignedMonomial& m, const Rat& c) {
  Poly p;
  Rat v = c * m.sgn;
  if (v != 0) p.t[m.m] = v;
  return p;
}

void Poly::add_term(const Mono& m, const Rat& c) {
  if (c == 0) return;
  auto it = t.find(m);
  if (it == t.end()) {
    t[m] = c;
  } else {
    it->second += c;
    if (it->second == 0) t.erase(it);
  }
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  for (auto& [m, c] : o.t) r.add_term(m, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  for (auto& [m, c] : o.t) r.add_term(m, -c);
  return r;
}

Poly Poly::operator-() const {
  Poly r;
  for (auto& [m, c] : t) r.t[m] = -c;
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  for (auto& [m1, c1] : t)
    for (auto& [m2, c2] : o.t) r.add_term(m1 * m2, c1 * c2);
  return r;
}

Poly Poly::mul_term(const Mono& m, const Rat& c) const {
  Poly r;
  if (c == 0) return r;
  for (auto& [m1, c1] : t) r.t[m1 * m] = c1 * c;
  return r;
}

Poly Poly::pow(int64_t n) const {
  if (n < 0) throw Error("BadExponent", "negative power of a polynomial");
  Poly r = one();
  Poly b = *this;
  while (n > 0) {
    if (n & 1) r = r * b;
    b = b * b;
    n >>= 1;
  }
  return r;
}

bool Poly::operator<(const Poly& o) const {
  auto a = t.begin(), b = o.t.begin();
  while (a != t.end() && b != o.t.end()) {
    if (!(a->first == b->first)) return a->first < b->first;
    if (a->second != b->second) return a->second < b->second;
    ++a;
    ++b;
  }
  return a == t.end() && b != o.t.end();
}

Poly Poly::subst(SymId s, const SignedMonomial& M) const {
  Poly r;
  for (auto& [m, c] : t) {
    int64_t ex = m.exp(s);
    if (ex == 0) {
      r.add_term(m, c);
      continue;
    }
    Mono base = m;
    base.set(s, 0);
    SignedMonomial rep = M.pow(ex);
    r.add_term(base * rep.m, c * rep.sgn);
  }
  return r;
}

Poly Poly::cover_pow(int64_t m) const {
  Poly r;
  for (auto& [mo, c] : t) {
    Mono mm;
    for (auto& [s, ex] : mo.e) {
      bool hit = sym_kind(s) == SymKind::A || sym_kind(s) == SymKind::H;
      mm.e[s] = hit ? ex * m : ex;
    }
    r.add_term(mm, c);
  }
  return r;
}

int64_t Poly::min_exp(SymId s) const {
  bool first = true;
  int64_t v = 0;
  for (auto& [m, c] : t) {
    int64_t ex = m.exp(s);
    if (first || ex < v) v = ex;
    first = false;
  }
  return v;
}

int64_t Poly::max_exp(SymId s) const {
  bool first = true;
  int64_t v = 0;
  for (auto& [m, c] : t) {
    int64_t ex = m.exp(s);
    if (first || ex > v) v = ex;
    first = false;
  }
  return v;
}

Mono Poly::content_mono() const {
  Mono r;
  bool first = true;
  for (auto& [m, c] : t) {
    if (first) {
      r = m;
      first = false;
    } else {
      r = Mono::gcd(r, m);
      // gcd treats missing as 0; also clamp entries present in r but not m
      for (auto it = r.e.begin(); it != r.e.end();) {
        int64_t ex = m.exp(it->first);
        if (ex < it->second) it->second = ex;
        if (it->second == 0)
          it = r.e.erase(it);
        else
          ++it;
      }
    }
  }
  return r;
}

bool Poly::try_divide(const Poly& num, const Poly& den, Poly& quot) {
  if (den.is_zero()) return false;
  quot = Poly::zero();
  if (num.is_zero()) return true;
  // shift both so that all exponents are nonnegative
  Mono cn = num.content_mono(), cd = den.content_mono();
  Poly N = num.mul_term(cn.inv(), 1);
  Poly D = den.mul_term(cd.inv(), 1);
  Poly Q;
  auto lead = [](const Poly& p) { return std::prev(p.t.end()); };
  auto dl = lead(D);
  while (!N.is_zero()) {
    auto nl = lead(N);
    // monomial divisibility in the polynomial sense
    Mono q;
    bool ok = true;
    {
      Mono diff = nl->first * dl->first.inv();
      for (auto& [s, ex] : diff.e)
        if (ex < 0) {
          ok = false;
          break;
        }
      q = diff;
    }
    if (!ok) return false;
    Rat qc = nl->second / dl->second;
    Q.add_term(q, qc);
    N = N - D.mul_term(q, qc);
  }
  quot = Q.mul_term(cn * cd.inv(), 1);
  return true;
}

Cplx Poly::eval(const Assignment& v) const {
  Cplx r = 0.0;
  for (auto& [m, c] : t) r += c.convert_to<double>() * m.eval(v);
  return r;
}

std::string Poly::str() const {
  if (t.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // print highest term first for readability
  for (auto it = t.rbegin(); it != t.rend(); ++it) {
    Rat c = it->second;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    Rat ac = abs(c);
    bool unit = (ac == 1) && !it->first.is_one();
    if (!unit) {
      os << ac.str();
      if (!it->first.is_one()) os << "*";
    }
    if (!it->first.is_one()) os << it->first.str();
    first = false;
  }
  return os.str();
}

PolyFactor factor_poly(const Poly& f) {
  if (f.is_zero()) throw Error("InternalError", "factor of zero polynomial");
  PolyFactor r;
  r.mono = f.content_mono();
  Poly p = f.mul_term(r.mono.inv(), 1);
  // rational content: gcd of numerators over lcm of denominators
  Int num_gcd = 0, den_lcm = 1;
  for (auto& [m, c] : p.t) {
    Int nn = abs(numerator(c));
    Int dd = denominator(c);
    num_gcd = num_gcd == 0 ? nn : gcd(num_gcd, nn);
    den_lcm = lcm(den_lcm, dd);
  }
  Rat content(num_gcd, den_lcm);
  // sign: leading (lex-largest) coefficient positive
  if (std::prev(p.t.end())->second < 0) content = -content;
  r.unit = content;
  r.prim = p.mul_term(Mono{}, Rat(1) / content);
  return r;
}

}  // namespace htx
