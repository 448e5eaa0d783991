#include "hypertoric/vertex.hpp"

#include "hypertoric/theta.hpp"

#include <algorithm>
#include <sstream>

namespace htx {

namespace {

std::string deg_str(const std::vector<int64_t>& d) {
  std::ostringstream os;
  os << "(";
  for (size_t t = 0; t < d.size(); ++t) os << (t ? "," : "") << d[t];
  os << ")";
  return os.str();
}

SignedMonomial with_q(const SignedMonomial& x, int64_t e) {
  SignedMonomial r = x;
  r.m.set(symQ(), r.m.exp(symQ()) + e);
  return r;
}

SignedMonomial with_h(const SignedMonomial& x, int64_t e) {
  SignedMonomial r = x;
  r.m.set(symH(), r.m.exp(symH()) + e);
  return r;
}

/** Exponent scaling of a and hbar^(1/2) symbols, the monomial-level analogue
 *  of RatFun::cover_pow. */
SignedMonomial cover_sm(const SignedMonomial& x, int64_t m) {
  SignedMonomial r = x;
  for (auto& [s, e] : r.m.e)
    if (sym_kind(s) == SymKind::A || sym_kind(s) == SymKind::H) e *= m;
  return r;
}

Cplx cpow_int(Cplx base, int64_t e) {
  if (e < 0) return 1.0 / cpow_int(base, -e);
  Cplx r = 1.0;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

/** T^(1/2) + hbar^{-1} (T^(1/2))^dual = T_X as character multisets at p. */
void check_polarization(const FramedData& f) {
  std::map<SignedMonomial, int64_t> cnt;
  auto add = [&](const SignedMonomial& s, int64_t e) {
    cnt[s] += e;
    if (cnt[s] == 0) cnt.erase(s);
  };
  SignedMonomial hinv = SignedMonomial::of(symH(), -2);
  for (int i = 0; i < f.data.n; ++i) {
    SignedMonomial xi = f.x_rest(i);
    add(xi, 1);
    add(hinv * xi.inv(), 1);
  }
  add(SignedMonomial::one(), -f.data.k);
  add(hinv, -f.data.k);
  for (int i : f.p) {
    SignedMonomial xi = f.x_rest(i);
    add(xi, -1);
    add(hinv * xi.inv(), -1);
  }
  if (!cnt.empty())
    throw Error("PolarizationMismatch",
                "polarization characters do not pair up to the tangent space");
}

}  // namespace

KahlerSeries bare_vertex(const VertexSpec& spec) {
  const FramedData& f = spec.f;
  check_polarization(f);
  KahlerSeries V = KahlerSeries::make(f, spec.D);
  for (size_t idx = 0; idx < V.size(); ++idx) {
    std::vector<int64_t> d = V.degree_at(idx);
    IVec D = full_degree(f, d);
    int64_t sum = 0;
    for (int l = 0; l < f.data.n; ++l) sum += D(l).convert_to<int64_t>();
    RatFun c = RatFun::q_pow(spec.opposite ? sum : -sum);
    for (int l = 0; l < f.data.n; ++l)
      c = c * bracket(f.x_rest(l), D(l).convert_to<int64_t>());
    if (!spec.tau.is_one()) {
      Poly t = spec.tau;
      for (int l = 0; l < f.data.n; ++l)
        t = t.subst(symX(l), with_q(f.x_rest(l), 2 * D(l).convert_to<int64_t>()));
      c = c * RatFun::from_poly(t);
    }
    V.set(d, c);
  }
  return V;
}

LogForm vertex_prefactor_form(const FramedData& f) {
  LogForm P = LogForm::zero();
  for (int i = 0; i < f.data.n; ++i) {
    SignedMonomial zs{-1, Mono{}};
    zs.m.set(symZ(i), 1);
    zs.m.set(symH(), -1);
    SignedMonomial ze = zs;
    if (!f.in_p(i) && f.sideA[i] > 0) {
      ze.m.set(symQ(), ze.m.exp(symQ()) - 2);
      ze.m.set(symH(), ze.m.exp(symH()) + 2);
    }
    P.add_sym(LogVec::log_of(ze), LogVec::log_of(f.x_rest(i)), 1);
    P.add_sym(LogVec::log_of(zs), LogVec::of(symA(i)), -1);
  }
  return P;
}

ShiftOperator make_shift_operator(const FramedData& f, int i) {
  ShiftOperator op;
  op.i = i;
  SignedMonomial F = vertex_prefactor_form(f).shift_factor(symA(i), 1);

  op.delta.assign(f.A.size(), 0);
  Mono zpart;
  for (size_t t = 0; t < f.A.size(); ++t) {
    int64_t e = F.m.exp(symZ(f.A[t]));
    op.delta[t] = e;
    if (e != 0) zpart = zpart * f.zeta(f.A[t]).pow(e);
  }
  SignedMonomial scalar = F;
  for (int l = 0; l < f.data.n; ++l) {
    int64_t got = F.m.exp(symZ(l));
    if (got != zpart.exp(symZ(l)))
      throw Error("NonMonomialShift",
                  "conjugation factor is not a Kaehler-cone monomial");
    scalar.m.set(symZ(l), 0);
  }

  RatFun phir = RatFun::one();
  for (int mrow : f.p) {
    int64_t e = f.a_exp(mrow, i);
    if (e == 0) continue;
    SignedMonomial xm = f.x_rest(mrow);
    phir = phir * pochhammer(with_h(xm, 2), e) / pochhammer(with_q(xm, 2), e);
  }
  op.factor = RatFun::from(scalar) * phir;
  return op;
}

KahlerSeries ShiftOperator::apply(const KahlerSeries& s) const {
  return subst_a(s, i).shift(delta).scale(factor);
}

namespace {

Report compare_series(const std::string& title, const KahlerSeries& L,
                      const KahlerSeries& R) {
  Report rep(title);
  int verified = 0;
  for (size_t idx = 0; idx < L.size(); ++idx) {
    if (!L.c[idx] || !R.c[idx]) continue;
    RatFun diff = *L.c[idx] - *R.c[idx];
    if (!diff.is_zero()) {
      rep.fail("IdentityFailure at degree " + deg_str(L.degree_at(idx)) +
               ", residual " + diff.str());
      return rep;
    }
    ++verified;
  }
  if (verified == 0)
    rep.fail("no comparable degrees in the box");
  else
    rep.note(std::to_string(verified) + " degrees verified exactly");
  return rep;
}

}  // namespace

Report check_circuit_qde(const VertexSpec& spec, const KahlerSeries& V,
                         const Circuit& circ) {
  const FramedData& f = spec.f;
  RatFun hbar = RatFun::h_pow(2);
  KahlerSeries L = V, R = V;
  for (int i : circ.Splus) L = L - line_shift(f, L, i);
  for (int i : circ.Sminus) L = L - line_shift(f, L, i).scale(hbar);
  for (int i : circ.Splus) R = R - line_shift(f, R, i).scale(hbar);
  for (int i : circ.Sminus) R = R - line_shift(f, R, i);

  int64_t sum = 0;
  std::vector<int64_t> delta(f.A.size(), 0);
  for (int l = 0; l < f.data.n; ++l) sum += circ.vec(l).convert_to<int64_t>();
  for (size_t t = 0; t < f.A.size(); ++t)
    delta[t] = circ.vec(f.A[t]).convert_to<int64_t>();
  SignedMonomial zs{(sum % 2 == 0) ? 1 : -1, Mono{}};
  zs.m.set(symH(), -sum);
  R = R.shift(delta).scale(RatFun::from(zs));

  return compare_series("circuit qde", L, R);
}

Report check_cocircuit_qde(const VertexSpec& spec, const KahlerSeries& V,
                           const Cocircuit& coc) {
  const FramedData& f = spec.f;
  RatFun qh = RatFun::q_pow(2) * RatFun::h_pow(-2);
  std::map<int, ShiftOperator> ops;
  for (int i : coc.support) ops[i] = make_shift_operator(f, i);

  KahlerSeries L = V, R = V;
  for (int i : coc.Splus) L = L - ops[i].apply(L);
  for (int i : coc.Sminus) L = L - ops[i].apply(L).scale(qh);
  for (int i : coc.Splus) R = R - ops[i].apply(R).scale(qh);
  for (int i : coc.Sminus) R = R - ops[i].apply(R);

  SignedMonomial ha;
  for (int i : coc.support) {
    int64_t e = coc.vec(i).convert_to<int64_t>();
    ha.m.set(symA(i), e);
    ha.m.set(symH(), ha.m.exp(symH()) + 2 * e);
  }
  R = R.scale(RatFun::from(ha));

  return compare_series("cocircuit qde", L, R);
}

Report check_q_boundedness(const KahlerSeries& V) {
  Report rep("q boundedness");
  int checked = 0;
  for (size_t idx = 0; idx < V.size(); ++idx) {
    if (!V.c[idx] || V.c[idx]->is_zero()) continue;
    int64_t lo = V.c[idx]->val_q();
    int64_t hi = V.c[idx]->deg_q();
    if (lo < 0)
      rep.fail("pole at q^(1/2)=0 for degree " + deg_str(V.degree_at(idx)) +
               " (valuation " + std::to_string(lo) + ")");
    if (hi > 0)
      rep.fail("unbounded as q^(1/2)->infinity for degree " +
               deg_str(V.degree_at(idx)) + " (degree " + std::to_string(hi) + ")");
    ++checked;
  }
  rep.note(std::to_string(checked) + " coefficients bounded at both ends");
  return rep;
}

std::complex<double> eval_series(const FramedData& f, const KahlerSeries& V,
                                 const NumParams& np) {
  Assignment asg;
  asg[symQ()] = std::sqrt(np.q);
  asg[symH()] = std::sqrt(np.h);
  for (auto& [i, v] : np.a) asg[symA(i)] = v;
  Cplx total = 0.0;
  for (size_t idx = 0; idx < V.size(); ++idx) {
    if (!V.c[idx] || V.c[idx]->is_zero()) continue;
    IVec D = full_degree(f, V.degree_at(idx));
    Cplx zmon = 1.0;
    for (int l = 0; l < f.data.n; ++l)
      zmon *= cpow_int(np.z.at(l), D(l).convert_to<int64_t>());
    total += V.c[idx]->eval(asg) * zmon;
  }
  return total;
}

Cplx vertex_limit_closed(const FramedData& f, const NumParams& np, int trunc) {
  Assignment zasg;
  zasg[symQ()] = std::sqrt(np.q);
  zasg[symH()] = std::sqrt(np.h);
  for (auto& [i, v] : np.z) zasg[symZ(i)] = v;

  Cplx closed = 1.0;
  for (size_t t = 0; t < f.A.size(); ++t) {
    int j = f.A[t];
    SignedMonomial Zm = f.zeta_sharp(j);
    int64_t hs = f.hshift(j);
    Zm.m.set(symQ(), Zm.m.exp(symQ()) - 2 * hs);
    Zm.m.set(symH(), Zm.m.exp(symH()) + 2 * hs);
    Cplx Z = Zm.eval(zasg);
    if (f.sideA[j] > 0)
      closed *= phi_eval(np.q, np.h * Z, trunc) / phi_eval(np.q, Z, trunc);
    else
      closed *= phi_eval(np.q, np.q / Z, trunc) /
                phi_eval(np.q, np.q / np.h / Z, trunc);
  }
  return closed;
}

Report check_vertex_limit(const VertexSpec& spec, const KahlerSeries& V,
                          const NumParams& np, const std::vector<double>& ts,
                          double tol) {
  Report rep("vertex limit");
  const FramedData& f = spec.f;
  f.require_sigma_generic();

  Cplx closed = vertex_limit_closed(f, np, 80);

  double last = -1.0, worst = 0.0;
  for (double t : ts) {
    NumParams cur = np;
    for (int i = 0; i < f.data.n; ++i)
      if (!cur.a.count(i)) cur.a[i] = 1.0;
    for (int i : f.pplus) cur.a[i] = cur.a[i] / t;
    for (int i : f.pminus) cur.a[i] = cur.a[i] * t;
    Cplx val = eval_series(f, V, cur);
    last = std::abs(val - closed) / std::abs(closed);
    worst = std::max(worst, last);
    std::ostringstream os;
    os << "t=" << t << " relative deviation " << last;
    rep.note(os.str());
  }
  {
    std::ostringstream os;
    os << "max deviation " << worst << ", final " << last;
    rep.note(os.str());
  }

  if (last > tol) {
    double tail = 0.0;
    for (size_t idx = 0; idx < V.size(); ++idx) {
      if (!V.c[idx]) continue;
      std::vector<int64_t> d = V.degree_at(idx);
      int64_t norm = 0;
      for (int64_t v : d) norm = std::max(norm, std::abs(v));
      if (norm != V.D) continue;
      NumParams cur = np;
      for (int i = 0; i < f.data.n; ++i)
        if (!cur.a.count(i)) cur.a[i] = 1.0;
      for (int i : f.pplus) cur.a[i] = cur.a[i] / ts.back();
      for (int i : f.pminus) cur.a[i] = cur.a[i] * ts.back();
      Assignment asg;
      asg[symQ()] = std::sqrt(np.q);
      asg[symH()] = std::sqrt(np.h);
      for (auto& [i, v] : cur.a) asg[symA(i)] = v;
      IVec D = full_degree(f, d);
      Cplx zmon = 1.0;
      for (int l = 0; l < f.data.n; ++l)
        zmon *= cpow_int(np.z.at(l), D(l).convert_to<int64_t>());
      tail += std::abs(V.c[idx]->eval(asg) * zmon);
    }
    std::ostringstream os;
    if (tail / std::abs(closed) > tol)
      os << "ConvergenceFailure: truncation tail " << tail / std::abs(closed)
         << " dominates tolerance " << tol;
    else
      os << "deviation " << last << " exceeds tolerance " << tol;
    rep.fail(os.str());
  }
  return rep;
}

namespace {

/** Largest e with (q - q0)^e dividing g, plus the quotient. */
int vanish_order(const Poly& g, const Poly& binom, Poly& reduced) {
  int v = 0;
  reduced = g;
  Poly quot;
  while (Poly::try_divide(reduced, binom, quot)) {
    reduced = quot;
    ++v;
  }
  return v;
}

struct PoleSplit {
  int order = 0;   // net pole order at q0 (positive = pole)
  RatFun rest;     // the function with all (q - q0) powers stripped
};

PoleSplit split_at_q(const RatFun& r, const SignedMonomial& q0) {
  Poly binom = Poly::from(SignedMonomial::of(symQ(), 2)) - Poly::from(q0);
  PoleSplit ps;
  RatFun rest = RatFun::from(r.c);
  rest = rest * RatFun::from(SignedMonomial{1, r.mono});
  for (auto& [g, e] : r.f) {
    Poly reduced;
    int v = vanish_order(g, binom, reduced);
    if (v == 0) {
      rest = (e >= 0) ? rest * RatFun::from_poly(g).pow(e)
                      : rest / RatFun::from_poly(g).pow(-e);
    } else {
      ps.order -= v * e;
      rest = (e >= 0) ? rest * RatFun::from_poly(reduced).pow(e)
                      : rest / RatFun::from_poly(reduced).pow(-e);
    }
  }
  ps.rest = rest;
  return ps;
}

}  // namespace

Report check_jfunction_residues(const FramedData& fp, const KahlerSeries& Vp,
                                const FramedData& fq, const KahlerSeries& Vq,
                                const InvariantCurve& curve, int m) {
  Report rep("j-function residues m=" + std::to_string(m));
  if (m < 1) {
    rep.fail("cover order must be positive");
    return rep;
  }
  int s = curve.deg(curve.i) > 0 ? 1 : -1;
  SignedMonomial q0 = curve.tangent.inv();

  std::vector<int> Sp, Sm;
  for (int l : curve.S)
    (curve.deg(l) > 0 ? Sp : Sm).push_back(l);

  // 1/E on the m-fold torus cover (a -> a^m, hbar -> hbar^m, q untouched),
  // where the pole point q0 = tangent^{-1} becomes an honest monomial.
  RatFun Einv = RatFun::one();
  for (int l : Sp) {
    Einv = Einv * pochhammer(cover_sm(with_h(fp.x_rest(l), 2), m), m) /
           pochhammer(with_q(cover_sm(fp.x_rest(l), m), 2), m);
  }
  for (int l : Sm) {
    Einv = Einv * pochhammer(cover_sm(with_h(fp.x_rest(l), 2), m), -m) /
           pochhammer(with_q(cover_sm(fp.x_rest(l), m), 2), -m);
  }
  // Regularize by cancelling the single linear factor that vanishes at q0.
  SignedMonomial vmon =
      s > 0 ? with_q(cover_sm(fp.x_rest(curve.i), m), 2 * m)
            : with_q(cover_sm(with_h(fp.x_rest(curve.i), 2), m), -2 * m);
  RatFun EregInv = Einv * RatFun::from_poly(Poly::one() - Poly::from(vmon));
  PoleSplit esplit = split_at_q(EregInv, q0);
  if (esplit.order != 0) {
    rep.fail("Euler factor has residual (q - q0) order " +
             std::to_string(esplit.order) + " after regularization");
    return rep;
  }
  RatFun Ereg = esplit.rest.subst_q(q0);

  int verified = 0, trivial = 0, skipped = 0;
  for (size_t idx = 0; idx < Vp.size(); ++idx) {
    if (!Vp.c[idx]) continue;
    std::vector<int64_t> d = Vp.degree_at(idx);
    IVec D = full_degree(fp, d);
    int64_t Di = D(curve.i).convert_to<int64_t>();
    int64_t sumD = 0;
    for (int l = 0; l < fp.data.n; ++l) sumD += D(l).convert_to<int64_t>();

    // Pochhammer-ratio normalization: rational in q, so the residue is
    // well-defined. The bare coefficient differs by (-hbar^(1/2))^(-sum D).
    SignedMonomial rn{(sumD % 2 == 0) ? 1 : -1, Mono{}};
    rn.m.set(symH(), sumD);
    RatFun r = (*Vp.c[idx] * RatFun::from(rn)).cover_pow(m);

    PoleSplit psp = split_at_q(r, q0);
    bool eligible = s > 0 ? (Di >= m) : (Di <= -m);

    if (psp.order > 1) {
      rep.note("NonSimplePole of order " + std::to_string(psp.order) +
               " at degree " + deg_str(d) + ", comparison skipped");
      ++skipped;
      continue;
    }

    RatFun lhs = RatFun::zero();
    if (psp.order == 1)
      lhs = psp.rest.subst_q(q0) * RatFun::from(q0.inv());

    RatFun rhs = RatFun::zero();
    if (eligible) {
      IVec Dq = D - curve.deg * Int(m);
      std::vector<int64_t> dq(fq.A.size(), 0);
      for (size_t t = 0; t < fq.A.size(); ++t)
        dq[t] = Dq(fq.A[t]).convert_to<int64_t>();
      if (!Vq.in_box(dq) || !Vq.at(dq)) {
        rep.fail("shifted degree " + deg_str(dq) + " not available on the far side");
        continue;
      }
      int64_t sumDq = 0;
      for (int l = 0; l < fq.data.n; ++l) sumDq += Dq(l).convert_to<int64_t>();
      SignedMonomial rq{(sumDq % 2 == 0) ? 1 : -1, Mono{}};
      rq.m.set(symH(), sumDq);
      RatFun far = (*Vq.at(dq) * RatFun::from(rq)).cover_pow(m).subst_q(q0);
      rhs = RatFun::from(Rat(-1) / m) * Ereg * far;
      ++verified;
    } else {
      ++trivial;
    }

    if (!lhs.equals(rhs)) {
      rep.fail("IdentityFailure at degree " + deg_str(d) + ": residue " +
               lhs.str() + " vs " + rhs.str());
      return rep;
    }
  }
  rep.note(std::to_string(verified) + " residue relations, " +
           std::to_string(trivial) + " trivial vanishings" +
           (skipped ? ", " + std::to_string(skipped) + " skipped" : ""));
  return rep;
}

}  // namespace htx
