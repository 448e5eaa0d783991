#include "hypertoric/theta.hpp"

#include <sstream>

namespace htx {

namespace {

int64_t fdiv2(int64_t t) { return t >= 0 ? t / 2 : -((-t + 1) / 2); }

/** Write theta(u) = c * m * theta(x) with the q-exponent of x in {0, 1/2}. */
SignedMonomial reduce_q(SignedMonomial u, Rat& c, Mono& m) {
  auto it = u.m.e.find(symQ());
  int64_t t = it == u.m.e.end() ? 0 : it->second;
  int64_t r = fdiv2(t);
  if (r == 0) return u;
  SignedMonomial x = u;
  if (t == 2 * r)
    x.m.e.erase(symQ());
  else
    x.m.e[symQ()] = t - 2 * r;
  if (r % 2 != 0) c = -c;
  m.e[symQ()] += -r * r;
  if (m.e[symQ()] == 0) m.e.erase(symQ());
  if (x.sgn < 0 && r % 2 != 0) c = -c;
  m = m * x.m.pow(-r);
  return x;
}

/** theta(u) = c * m * theta(key), key canonical under q-shifts and x -> 1/x. */
SignedMonomial reduce_theta_arg(const SignedMonomial& u, Rat& c, Mono& m) {
  Rat ca(1);
  Mono ma;
  SignedMonomial a = reduce_q(u, ca, ma);
  Rat cb = -ca;
  Mono mb = ma;
  SignedMonomial b = reduce_q(a.inv(), cb, mb);
  if (b < a) {
    c = c * cb;
    m = m * mb;
    return b;
  }
  c = c * ca;
  m = m * ma;
  return a;
}

SignedMonomial subst_sm(const SignedMonomial& u, SymId s, const SignedMonomial& M) {
  SignedMonomial r{u.sgn, Mono{}};
  for (auto& [sym, e] : u.m.e) {
    if (sym == s) {
      SignedMonomial p = M.pow(e);
      r.sgn *= p.sgn;
      r.m = r.m * p.m;
    } else {
      r.m.e[sym] += e;
      if (r.m.e[sym] == 0) r.m.e.erase(sym);
    }
  }
  return r;
}

}  // namespace

ThetaExpr ThetaExpr::zero() {
  ThetaExpr t;
  t.c = 0;
  return t;
}

int ThetaExpr::one_pow() const {
  int n = 0;
  auto i1 = th.find(SignedMonomial::one());
  if (i1 != th.end()) n += i1->second;
  auto i2 = ph.find(SignedMonomial::one());
  if (i2 != ph.end()) n += i2->second;
  return n;
}

ThetaExpr& ThetaExpr::mul_rat(const Rat& v) {
  if (v == 0) {
    *this = zero();
    return *this;
  }
  c *= v;
  return *this;
}

ThetaExpr& ThetaExpr::mul_mono(const SignedMonomial& mm, int64_t e) {
  if (is_zero()) return *this;
  SignedMonomial p = mm.pow(e);
  if (p.sgn < 0) c = -c;
  m = m * p.m;
  return *this;
}

ThetaExpr& ThetaExpr::mul_sqrt(const SignedMonomial& arg) {
  if (is_zero()) return *this;
  sq = sq * arg;
  for (auto it = sq.m.e.begin(); it != sq.m.e.end();) {
    int64_t e = it->second;
    int64_t k = fdiv2(e);
    if (k != 0) {
      m.e[it->first] += k;
      if (m.e[it->first] == 0) m.e.erase(it->first);
    }
    if (e - 2 * k == 0)
      it = sq.m.e.erase(it);
    else {
      it->second = e - 2 * k;
      ++it;
    }
  }
  return *this;
}

ThetaExpr& ThetaExpr::mul_theta(const SignedMonomial& arg, int e) {
  if (is_zero() || e == 0) return *this;
  Rat ca(1);
  Mono ma;
  SignedMonomial key = reduce_theta_arg(arg, ca, ma);
  if (ca < 0 && e % 2 != 0) c = -c;
  m = m * ma.pow(e);
  int& slot = th[key];
  slot += e;
  if (slot == 0) th.erase(key);
  return *this;
}

ThetaExpr& ThetaExpr::mul_phi(const SignedMonomial& arg, int e) {
  if (is_zero() || e == 0) return *this;
  int& slot = ph[arg];
  slot += e;
  if (slot == 0) ph.erase(arg);
  return *this;
}

ThetaExpr ThetaExpr::operator*(const ThetaExpr& o) const {
  if (is_zero() || o.is_zero()) return zero();
  ThetaExpr r = *this;
  r.mul_rat(o.c);
  r.mul_mono(SignedMonomial{1, o.m});
  r.mul_sqrt(o.sq);
  for (auto& [u, e] : o.th) {
    int& slot = r.th[u];
    slot += e;
    if (slot == 0) r.th.erase(u);
  }
  for (auto& [u, e] : o.ph) r.mul_phi(u, e);
  return r;
}

ThetaExpr ThetaExpr::inv() const {
  if (is_zero()) throw Error("DivisionByZero", "inverse of zero theta expression");
  ThetaExpr r;
  r.c = 1 / c;
  r.m = m.inv();
  r.sq = sq.inv();
  if (sq.sgn < 0) r.c = -r.c;
  for (auto& [u, e] : th) r.th[u] = -e;
  for (auto& [u, e] : ph) r.ph[u] = -e;
  return r;
}

ThetaExpr ThetaExpr::operator/(const ThetaExpr& o) const { return *this * o.inv(); }

bool ThetaExpr::operator==(const ThetaExpr& o) const {
  if (is_zero() || o.is_zero()) return is_zero() == o.is_zero();
  return c == o.c && m == o.m && sq == o.sq && th == o.th && ph == o.ph;
}

ThetaExpr ThetaExpr::to_phi() const {
  if (is_zero()) return zero();
  ThetaExpr r;
  r.c = c;
  r.m = m;
  r.sq = sq;
  r.ph = ph;
  for (auto& [u, e] : th) {
    r.mul_sqrt(u.pow(e));
    SignedMonomial qu = u;
    qu.m.e[symQ()] += 2;
    if (qu.m.e[symQ()] == 0) qu.m.e.erase(symQ());
    r.mul_phi(qu, e);
    r.mul_phi(u.inv(), e);
  }
  return r;
}

ThetaExpr ThetaExpr::cancel_ones() const {
  int n = one_pow();
  if (n > 0) return zero();
  if (n < 0) throw Error("SingularFactor", "net negative power of a vanishing factor");
  return *this;
}

ThetaExpr ThetaExpr::subst(SymId s, const SignedMonomial& M) const {
  if (is_zero()) return zero();
  ThetaExpr r;
  r.c = c;
  {
    SignedMonomial nm = subst_sm(SignedMonomial{1, m}, s, M);
    if (nm.sgn < 0) r.c = -r.c;
    r.m = nm.m;
  }
  r.sq = SignedMonomial::one();
  r.mul_sqrt(subst_sm(sq, s, M));
  for (auto& [u, e] : th) r.mul_theta(subst_sm(u, s, M), e);
  for (auto& [u, e] : ph) r.mul_phi(subst_sm(u, s, M), e);
  return r;
}

Cplx theta_eval(Cplx q, Cplx xhalf, int trunc) {
  Cplx x = xhalf * xhalf;
  Cplx r = xhalf - 1.0 / xhalf;
  Cplx qd = q;
  for (int d = 1; d <= trunc; ++d) {
    r *= (1.0 - qd * x) * (1.0 - qd / x);
    qd *= q;
  }
  return r;
}

Cplx phi_eval(Cplx q, Cplx x, int trunc) {
  Cplx r = 1.0;
  Cplx qd = 1.0;
  for (int d = 0; d <= trunc; ++d) {
    r *= (1.0 - qd * x);
    qd *= q;
  }
  return r;
}

Cplx ThetaExpr::eval(const Assignment& v, const EvalOpts& o) const {
  if (is_zero()) return 0.0;
  auto itq = v.find(symQ());
  if (itq == v.end()) throw Error("UnmappedSymbol", "no value for q");
  Cplx q = itq->second * itq->second;
  Cplx r(double(c.convert_to<double>()), 0.0);
  r *= m.eval(v);
  if (!sq.is_one()) r *= sq.eval_sqrt(v);
  auto ipow = [](Cplx b, int e) {
    Cplx p = 1.0;
    for (int i = 0; i < std::abs(e); ++i) p *= b;
    return e >= 0 ? p : 1.0 / p;
  };
  for (auto& [u, e] : th) r *= ipow(theta_eval(q, u.eval_sqrt(v), o.trunc), e);
  for (auto& [u, e] : ph) r *= ipow(phi_eval(q, u.eval(v), o.trunc), e);
  return r;
}

std::string ThetaExpr::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  os << c.str();
  if (!m.is_one()) os << " * " << m.str();
  if (!sq.is_one()) os << " * (" << sq.str() << ")^(1/2)";
  for (auto& [u, e] : th) {
    os << " * th(" << u.str() << ")";
    if (e != 1) os << "^" << e;
  }
  for (auto& [u, e] : ph) {
    os << " * ph(" << u.str() << ")";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

}  // namespace htx
