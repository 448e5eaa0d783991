#include "hypertoric/qseries.hpp"

namespace htx {

RatFun pochhammer(const SignedMonomial& x, int64_t d) {
  RatFun r = RatFun::one();
  if (d >= 0) {
    for (int64_t l = 0; l < d; ++l) {
      SignedMonomial t = x;
      t.m.e[symQ()] += 2 * l;
      if (t.m.e[symQ()] == 0) t.m.e.erase(symQ());
      Poly f = Poly::one() - Poly::from(t);
      r = r * RatFun::from_poly(f);
    }
  } else {
    for (int64_t l = 1; l <= -d; ++l) {
      SignedMonomial t = x;
      t.m.e[symQ()] -= 2 * l;
      if (t.m.e[symQ()] == 0) t.m.e.erase(symQ());
      Poly f = Poly::one() - Poly::from(t);
      r = r / RatFun::from_poly(f);
    }
  }
  return r;
}

RatFun bracket(const SignedMonomial& a, int64_t d) {
  SignedMonomial ha = a;
  ha.m.e[symH()] += 2;
  if (ha.m.e[symH()] == 0) ha.m.e.erase(symH());
  SignedMonomial qa = a;
  qa.m.e[symQ()] += 2;
  if (qa.m.e[symQ()] == 0) qa.m.e.erase(symQ());
  SignedMonomial pre{d % 2 == 0 ? 1 : -1, Mono{}};
  pre.m.e[symQ()] = d;
  pre.m.e[symH()] = -d;
  if (d == 0) pre.m.e.clear();
  return RatFun::from(pre) * pochhammer(ha, d) / pochhammer(qa, d);
}

RatFun bracket_alt(const SignedMonomial& a, int64_t d) {
  SignedMonomial ai = a.inv();
  SignedMonomial qhai = ai;
  qhai.m.e[symQ()] += 2;
  qhai.m.e[symH()] -= 2;
  if (qhai.m.e[symQ()] == 0) qhai.m.e.erase(symQ());
  if (qhai.m.e[symH()] == 0) qhai.m.e.erase(symH());
  SignedMonomial pre{d % 2 == 0 ? 1 : -1, Mono{}};
  pre.m.e[symQ()] = -d;
  pre.m.e[symH()] = d;
  if (d == 0) pre.m.e.clear();
  return RatFun::from(pre) * pochhammer(ai, -d) / pochhammer(qhai, -d);
}

std::vector<RatFun> phi_u_coeffs(int N) {
  // phi(u) = (1-u) phi(qu) gives c_m (1 - q^m) = -q^{m-1} c_{m-1}.
  std::vector<RatFun> c(N + 1);
  c[0] = RatFun::one();
  for (int m = 1; m <= N; ++m) {
    Poly den = Poly::one() - Poly::from(SignedMonomial::of(symQ(), 2 * m));
    RatFun f = RatFun::from(SignedMonomial{-1, Mono{}}) * RatFun::q_pow(2 * (m - 1)) /
               RatFun::from_poly(den);
    c[m] = c[m - 1] * f;
  }
  return c;
}

std::vector<RatFun> qbinom_lhs(const SignedMonomial& x, int N) {
  // Quotient coefficients r_m of phi(xz)/phi(z) from c_l r_{m-l} convolution,
  // tracked as numerators over (q)_m.  With c_m (q)_m = (-1)^m q^{m(m-1)/2}
  // the recurrence stays polynomial; the Gaussian binomial
  // (q)_m / ((q)_l (q)_{m-l}) divides exactly.
  std::vector<Poly> qp(N + 1);
  qp[0] = Poly::one();
  for (int m = 1; m <= N; ++m)
    qp[m] = qp[m - 1] * (Poly::one() - Poly::from(SignedMonomial::of(symQ(), 2 * m)));
  auto lead = [](int m) {
    SignedMonomial s{m % 2 == 0 ? 1 : -1, Mono{}};
    if (m > 1) s.m.e[symQ()] = int64_t(m) * (m - 1);
    return s;
  };
  std::vector<Poly> n(N + 1);
  n[0] = Poly::one();
  for (int m = 1; m <= N; ++m) {
    Poly s = Poly::from(lead(m) * x.pow(m));
    for (int l = 1; l <= m; ++l) {
      Poly g;
      if (!Poly::try_divide(qp[m], qp[l] * qp[m - l], g))
        throw Error("InternalError", "Gaussian binomial is not polynomial");
      s = s - Poly::from(lead(l)) * g * n[m - l];
    }
    n[m] = s;
  }
  SignedMonomial q1 = SignedMonomial::of(symQ(), 2);
  std::vector<RatFun> out(N + 1);
  for (int m = 0; m <= N; ++m)
    out[m] = RatFun::from_poly(n[m]) / pochhammer(q1, m);
  return out;
}

std::vector<RatFun> qbinom_rhs(const SignedMonomial& x, int N) {
  std::vector<RatFun> r(N + 1);
  SignedMonomial q1 = SignedMonomial::of(symQ(), 2);
  for (int d = 0; d <= N; ++d) r[d] = pochhammer(x, d) / pochhammer(q1, d);
  return r;
}

KahlerSeries KahlerSeries::make(const FramedData& f, int D) {
  KahlerSeries s;
  s.A = f.A;
  for (int j : f.A) s.sgn.push_back(f.sideA[j]);
  s.D = D;
  size_t total = 1;
  for (size_t t = 0; t < s.A.size(); ++t) total *= size_t(D + 1);
  s.c.assign(total, std::nullopt);
  return s;
}

bool KahlerSeries::in_box(const std::vector<int64_t>& d) const {
  if (d.size() != A.size()) return false;
  for (size_t t = 0; t < d.size(); ++t) {
    int64_t v = d[t] * sgn[t];
    if (v < 0 || v > D) return false;
  }
  return true;
}

size_t KahlerSeries::idx(const std::vector<int64_t>& d) const {
  size_t r = 0;
  for (size_t t = 0; t < d.size(); ++t) r = r * size_t(D + 1) + size_t(d[t] * sgn[t]);
  return r;
}

std::vector<int64_t> KahlerSeries::degree_at(size_t index) const {
  std::vector<int64_t> d(A.size(), 0);
  for (size_t t = A.size(); t-- > 0;) {
    d[t] = int64_t(index % size_t(D + 1)) * sgn[t];
    index /= size_t(D + 1);
  }
  return d;
}

const std::optional<RatFun>& KahlerSeries::at(const std::vector<int64_t>& d) const {
  if (!in_box(d)) throw Error("UnknownCoefficientAccess", "degree outside the box");
  return c[idx(d)];
}

void KahlerSeries::set(const std::vector<int64_t>& d, RatFun v) {
  if (!in_box(d)) throw Error("UnknownCoefficientAccess", "degree outside the box");
  c[idx(d)] = std::move(v);
}

KahlerSeries KahlerSeries::shift(const std::vector<int64_t>& delta) const {
  KahlerSeries r = *this;
  for (size_t i = 0; i < c.size(); ++i) {
    std::vector<int64_t> d = degree_at(i);
    for (size_t t = 0; t < d.size(); ++t) d[t] -= delta[t];
    r.c[i] = in_box(d) ? c[idx(d)] : std::nullopt;
  }
  return r;
}

KahlerSeries KahlerSeries::map(const std::function<RatFun(const RatFun&)>& fn) const {
  KahlerSeries r = *this;
  for (auto& v : r.c)
    if (v) v = fn(*v);
  return r;
}

static void box_match(const KahlerSeries& a, const KahlerSeries& b) {
  if (a.A != b.A || a.sgn != b.sgn || a.D != b.D)
    throw Error("BoxMismatch", "series defined over different boxes");
}

KahlerSeries KahlerSeries::operator+(const KahlerSeries& o) const {
  box_match(*this, o);
  KahlerSeries r = *this;
  for (size_t i = 0; i < c.size(); ++i)
    r.c[i] = (c[i] && o.c[i]) ? std::optional<RatFun>(*c[i] + *o.c[i]) : std::nullopt;
  return r;
}

KahlerSeries KahlerSeries::operator-(const KahlerSeries& o) const {
  box_match(*this, o);
  KahlerSeries r = *this;
  for (size_t i = 0; i < c.size(); ++i)
    r.c[i] = (c[i] && o.c[i]) ? std::optional<RatFun>(*c[i] - *o.c[i]) : std::nullopt;
  return r;
}

KahlerSeries KahlerSeries::operator*(const KahlerSeries& o) const {
  box_match(*this, o);
  KahlerSeries r = *this;
  for (size_t i = 0; i < c.size(); ++i) {
    std::vector<int64_t> d = degree_at(i);
    RatFun sum = RatFun::zero();
    bool known = true;
    std::vector<int64_t> a(d.size(), 0), b(d.size(), 0);
    std::function<void(size_t)> rec = [&](size_t t) {
      if (!known) return;
      if (t == d.size()) {
        const auto &ca = c[idx(a)], &cb = o.c[idx(b)];
        if (!ca || !cb) {
          known = false;
          return;
        }
        sum = sum + *ca * *cb;
        return;
      }
      int64_t n = d[t] * sgn[t];
      for (int64_t m = 0; m <= n; ++m) {
        a[t] = m * sgn[t];
        b[t] = (n - m) * sgn[t];
        rec(t + 1);
      }
    };
    rec(0);
    r.c[i] = known ? std::optional<RatFun>(sum) : std::nullopt;
  }
  return r;
}

KahlerSeries KahlerSeries::scale(const RatFun& v) const {
  return map([&](const RatFun& x) { return x * v; });
}

IVec full_degree(const FramedData& f, const std::vector<int64_t>& d) {
  IVec D = IVec::Zero(f.data.n);
  for (size_t t = 0; t < f.A.size(); ++t) D(f.A[t]) = Int(d[t]);
  for (size_t r = 0; r < f.p.size(); ++r) {
    Int s = 0;
    for (size_t t = 0; t < f.A.size(); ++t) s += f.C(int(r), int(t)) * Int(d[t]);
    D(f.p[r]) = s;
  }
  return D;
}

KahlerSeries line_shift(const FramedData& f, const KahlerSeries& s, int i) {
  KahlerSeries r = s;
  SignedMonomial xi = f.x_rest(i);
  for (size_t m = 0; m < r.c.size(); ++m) {
    if (!r.c[m]) continue;
    std::vector<int64_t> d = r.degree_at(m);
    IVec D = full_degree(f, d);
    SignedMonomial mult = xi;
    mult.m.e[symQ()] += 2 * D(i).convert_to<int64_t>();
    if (mult.m.e[symQ()] == 0) mult.m.e.erase(symQ());
    r.c[m] = *r.c[m] * RatFun::from(mult);
  }
  return r;
}

KahlerSeries subst_a(const KahlerSeries& s, int i, int64_t m) {
  return s.map([&](const RatFun& v) { return v.shift_a(i, m); });
}

}  // namespace htx
