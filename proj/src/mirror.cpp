#include "hypertoric/mirror.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "hypertoric/arrangement.hpp"

namespace htx {

namespace {

std::string set_str(const std::vector<int>& v) {
  std::ostringstream os;
  os << '{';
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i] + 1;
  os << '}';
  return os.str();
}

std::string num_str(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

SignedMonomial prime_sym(SymId s) {
  switch (sym_kind(s)) {
    case SymKind::Q:
    case SymKind::H:
    case SymKind::M1:
      return SignedMonomial::of(s);
    case SymKind::A:
      return SignedMonomial::of(symAP(sym_index(s)));
    case SymKind::Z:
      return SignedMonomial::of(symZP(sym_index(s)));
    case SymKind::X:
      return SignedMonomial::of(symXP(sym_index(s)));
    default:
      throw Error("DataError",
                  "to_primed: symbol " + sym_base_name(s) + " is already primed");
  }
}

SignedMonomial kappa_stab_sym(SymId s) {
  int i = sym_index(s);
  switch (sym_kind(s)) {
    case SymKind::Q:
    case SymKind::X:
    case SymKind::XP:
    case SymKind::M1:
      return SignedMonomial::of(s);
    case SymKind::H:
      return SignedMonomial::of(symH(), -1);
    case SymKind::A:
      return SignedMonomial::of(symZP(i));
    case SymKind::Z:
      return SignedMonomial::of(symAP(i));
    case SymKind::AP:
      return SignedMonomial::of(symZ(i));
    case SymKind::ZP:
      return SignedMonomial::of(symA(i));
  }
  throw Error("DataError", "unknown symbol kind");
}

SignedMonomial kappa_vtx_sym(SymId s) {
  int i = sym_index(s);
  SignedMonomial r;
  switch (sym_kind(s)) {
    case SymKind::Q:
      return SignedMonomial::of(symQ());
    case SymKind::H:
      r.m.set(symQ(), 1);
      r.m.set(symH(), -1);
      return r;
    case SymKind::M1:
      return SignedMonomial::minus_one();
    case SymKind::A:
      r.sgn = -1;
      r.m.set(symH(), 1);
      r.m.set(symZP(i), 1);
      return r;
    case SymKind::Z:
      r.sgn = -1;
      r.m.set(symQ(), 1);
      r.m.set(symH(), -1);
      r.m.set(symAP(i), -1);
      return r;
    case SymKind::AP:
      r.sgn = -1;
      r.m.set(symH(), 1);
      r.m.set(symZ(i), -1);
      return r;
    case SymKind::ZP:
      r.sgn = -1;
      r.m.set(symQ(), -1);
      r.m.set(symH(), 1);
      r.m.set(symA(i), 1);
      return r;
    default:
      throw Error("UnmappedSymbol",
                  "kappa_vtx has no image for " + sym_base_name(s));
  }
}

LogVec kappa_vtx_log(SymId s) {
  int i = sym_index(s);
  LogVec v;
  auto add = [&v](SymId t, const Rat& c) { v = v + LogVec::of(t, c); };
  switch (sym_kind(s)) {
    case SymKind::Q:
      add(symQ(), 1);
      break;
    case SymKind::H:
      add(symQ(), 1);
      add(symH(), -1);
      break;
    case SymKind::M1:
      add(symM1(), 1);
      break;
    case SymKind::A:
      add(symM1(), 1);
      add(symH(), Rat(1, 2));
      add(symZP(i), 1);
      break;
    case SymKind::Z:
      add(symM1(), 1);
      add(symQ(), Rat(1, 2));
      add(symH(), Rat(-1, 2));
      add(symAP(i), -1);
      break;
    case SymKind::AP:
      add(symM1(), 1);
      add(symH(), Rat(1, 2));
      add(symZ(i), -1);
      break;
    case SymKind::ZP:
      add(symM1(), 1);
      add(symQ(), Rat(-1, 2));
      add(symH(), Rat(1, 2));
      add(symA(i), 1);
      break;
    default:
      throw Error("UnmappedSymbol",
                  "kappa_vtx has no image for " + sym_base_name(s));
  }
  return v;
}

SignedMonomial map_sm(const SignedMonomial& s, SignedMonomial (*img)(SymId)) {
  SignedMonomial out;
  out.sgn = s.sgn;
  for (auto& [sy, e] : s.m.e) out = out * img(sy).pow(e);
  return out;
}

ThetaExpr map_expr(const ThetaExpr& e, SignedMonomial (*img)(SymId)) {
  if (e.is_zero()) return ThetaExpr::zero();
  ThetaExpr out = ThetaExpr::one();
  out.mul_rat(e.c);
  out.mul_mono(map_sm(SignedMonomial(1, e.m), img));
  if (!e.sq.is_one()) out.mul_sqrt(map_sm(e.sq, img));
  for (auto& [u, x] : e.th) out.mul_theta(map_sm(u, img), x);
  for (auto& [u, x] : e.ph) out.mul_phi(map_sm(u, img), x);
  return out;
}

bool imat_eq(const IMat& a, const IMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

bool ivec_eq(const IVec& a, const IVec& b) {
  if (a.size() != b.size()) return false;
  for (int i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

/** Minimal column supports of kernel vectors of M, by exhaustion: every
 *  dependent set whose proper subsets are all independent.  Masks are
 *  scanned in order of increasing size, so a dependent set containing no
 *  previously found support is minimal. */
std::vector<std::vector<int>> brute_minimal_supports(const IMat& M) {
  int n = static_cast<int>(M.cols());
  std::vector<int> masks;
  for (int m = 1; m < (1 << n); ++m) masks.push_back(m);
  std::sort(masks.begin(), masks.end(), [](int a, int b) {
    int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  std::vector<int> found;
  std::vector<std::vector<int>> out;
  for (int m : masks) {
    bool has_sub = false;
    for (int fm : found)
      if ((m & fm) == fm) {
        has_sub = true;
        break;
      }
    if (has_sub) continue;
    std::vector<int> S;
    for (int i = 0; i < n; ++i)
      if (m & (1 << i)) S.push_back(i);
    if (rank_int(select_cols(M, S)) < static_cast<int>(S.size())) {
      found.push_back(m);
      out.push_back(S);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/** Signed monomials form a group with 2-torsion sign, so bilinear identities
 *  in their logarithms hold modulo 2 ln(-1) = ln 1 = 0: reduce every
 *  coefficient paired with the sign log into {0, 1}. */
LogForm reduce_sign_torsion(LogForm F) {
  for (auto it = F.B.begin(); it != F.B.end();) {
    if (it->first.first != symM1() && it->first.second != symM1()) {
      ++it;
      continue;
    }
    Rat c = it->second;
    if (denominator(c) == 1) {
      Int m = numerator(c) % 2;
      if (m < 0) m += 2;
      c = Rat(m);
    }
    if (c == 0) {
      it = F.B.erase(it);
    } else {
      it->second = c;
      ++it;
    }
  }
  return F;
}

void audit_family(Report& r, const std::vector<Circuit>& cs, const IMat& M,
                  const IVec& lift, const char* what) {
  for (const auto& c : cs) {
    IVec img = M * c.vec;
    bool in_kernel = true;
    for (int i = 0; i < img.size(); ++i)
      if (img[i] != 0) in_kernel = false;
    Int pairing = 0;
    for (int i = 0; i < c.vec.size(); ++i) pairing += lift[i] * c.vec[i];
    bool signs_ok = true;
    std::vector<int> plus, minus, supp;
    for (int i = 0; i < c.vec.size(); ++i) {
      if (c.vec[i] > 1 || c.vec[i] < -1) signs_ok = false;
      if (c.vec[i] > 0) plus.push_back(i);
      if (c.vec[i] < 0) minus.push_back(i);
      if (c.vec[i] != 0) supp.push_back(i);
    }
    signs_ok = signs_ok && plus == c.Splus && minus == c.Sminus && supp == c.support;
    r.check(in_kernel && pairing > 0 && signs_ok,
            std::string(what) + " " + set_str(c.support) + " definition audit");
  }
}

}  // namespace

MirrorPair MirrorPair::make(const HypertoricData& x) {
  MirrorPair mp;
  mp.x = x;
  mp.y = dualize(x);
  mp.frames = fixed_points(x);
  for (const auto& f : mp.frames)
    mp.dual.push_back(standard_frame(mp.y, dual_point(f)));
  return mp;
}

SignedMonomial to_primed(const SignedMonomial& s) { return map_sm(s, prime_sym); }
ThetaExpr to_primed(const ThetaExpr& e) { return map_expr(e, prime_sym); }

SignedMonomial kappa_stab(const SignedMonomial& s) { return map_sm(s, kappa_stab_sym); }
ThetaExpr kappa_stab(const ThetaExpr& e) { return map_expr(e, kappa_stab_sym); }

SignedMonomial kappa_vtx(const SignedMonomial& s) { return map_sm(s, kappa_vtx_sym); }
ThetaExpr kappa_vtx(const ThetaExpr& e) { return map_expr(e, kappa_vtx_sym); }
LogForm kappa_vtx(const LogForm& P) { return P.mapped(kappa_vtx_log); }

NumParams kappa_vtx_params(const NumParams& np, int n) {
  Cplx Qv = std::sqrt(np.q), Hv = std::sqrt(np.h);
  NumParams out;
  out.q = np.q;
  out.h = np.q / np.h;
  for (int i = 0; i < n; ++i) {
    Cplx ai = np.a.count(i) ? np.a.at(i) : Cplx(1.0);
    Cplx zi = np.z.count(i) ? np.z.at(i) : Cplx(1.0);
    out.a[i] = -Hv / zi;
    out.z[i] = -(Hv / Qv) * ai;
  }
  return out;
}

Report check_combinatorial_duality(const MirrorPair& mp) {
  Report r("combinatorial duality");
  const HypertoricData& x = mp.x;

  HypertoricData xx = dualize(mp.y);
  r.check(imat_eq(xx.iota, x.iota) && imat_eq(xx.beta, x.beta) &&
              ivec_eq(xx.theta_lift, x.theta_lift) &&
              ivec_eq(xx.sigma_lift, x.sigma_lift),
          "double dual returns the original datum");

  r.check(mp.dual.size() == mp.frames.size(), "dual fixed point count");

  for (size_t t = 0; t < mp.frames.size(); ++t) {
    const FramedData& f = mp.frames[t];
    const FramedData& g = mp.dual[t];
    r.check(g.p == f.A && g.A == f.p,
            "dual point of " + set_str(f.p) + " is the complement");
    r.check(g.Aplus == f.pminus && g.Aminus == f.pplus,
            "dual A-splitting at " + set_str(f.p) + " flips the p-splitting");
    r.check(g.pplus == f.Aminus && g.pminus == f.Aplus,
            "dual p-splitting at " + set_str(f.p) + " flips the A-splitting");

    for (size_t tj = 0; tj < f.A.size(); ++tj) {
      int j = f.A[tj];
      Mono want;
      want.set(symA(j), 1);
      for (size_t ti = 0; ti < f.p.size(); ++ti) {
        int i = f.p[ti];
        want.set(symA(i),
                 want.exp(symA(i)) + f.C(ti, tj).convert_to<int64_t>());
      }
      want.set(symH(), 2 * f.hshift(j));
      r.check(g.x_rest(j) == SignedMonomial(1, want),
              "dual restriction of x_" + std::to_string(j + 1) + " at " +
                  set_str(f.p));
    }
  }

  auto cx = circuits(x), dx = cocircuits(x);
  auto cy = circuits(mp.y), dy = cocircuits(mp.y);
  r.check(cy.size() == dx.size() && dy.size() == cx.size(),
          "sizes of the dual circuit families");
  for (size_t l = 0; l < cy.size() && l < dx.size(); ++l) {
    IVec neg = -dx[l].vec;
    r.check(cy[l].support == dx[l].support && cy[l].Splus == dx[l].Sminus &&
                cy[l].Sminus == dx[l].Splus && ivec_eq(cy[l].vec, neg),
            "dual circuit " + set_str(cy[l].support) +
                " is the sign-flipped cocircuit");
  }
  for (size_t l = 0; l < dy.size() && l < cx.size(); ++l) {
    IVec neg = -cx[l].vec;
    r.check(dy[l].support == cx[l].support && dy[l].Splus == cx[l].Sminus &&
                dy[l].Sminus == cx[l].Splus && ivec_eq(dy[l].vec, neg),
            "dual cocircuit " + set_str(dy[l].support) +
                " is the sign-flipped circuit");
  }

  audit_family(r, cx, x.beta, x.theta_lift, "circuit");
  IMat iotaT = x.iota.transpose();
  audit_family(r, dx, iotaT, x.sigma_lift, "cocircuit");

  if (x.n <= 12) {
    std::vector<std::vector<int>> cs, ds;
    for (const auto& c : cx) cs.push_back(c.support);
    for (const auto& c : dx) ds.push_back(c.support);
    std::sort(cs.begin(), cs.end());
    std::sort(ds.begin(), ds.end());
    r.check(cs == brute_minimal_supports(x.beta),
            "circuit supports match the brute-force enumeration");
    r.check(ds == brute_minimal_supports(iotaT),
            "cocircuit supports match the brute-force enumeration");
  } else {
    r.note("brute-force support enumeration skipped (n > 12)");
  }
  return r;
}

Report duality_interface_check(const MirrorPair& mp) {
  Report r("duality interface");
  int n = mp.x.n;
  for (size_t t = 0; t < mp.frames.size(); ++t) {
    const FramedData& f = mp.frames[t];
    const FramedData& g = mp.dual[t];

    ThetaExpr side1 = ThetaExpr::one();
    for (int i = 0; i < n; ++i)
      side1.mul_theta(SignedMonomial::of(symX(i)) * to_primed(g.x_rest(i)));
    side1 = kappa_stab(side1);
    ThetaExpr want1 = normalized_stab(f);
    if (!(side1 == want1)) {
      r.fail("MismatchAt " + set_str(f.p) + ": primed-factor restriction");
      r.note("got  " + side1.str());
      r.note("want " + want1.str());
    }

    ThetaExpr side2 = ThetaExpr::one();
    for (int i = 0; i < n; ++i)
      side2.mul_theta(f.x_rest(i) * SignedMonomial::of(symXP(i)));
    side2 = kappa_stab(side2);
    ThetaExpr want2 = to_primed(normalized_stab(g));
    if (!(side2 == want2)) {
      r.fail("MismatchAt " + set_str(f.p) + ": plain-factor restriction");
      r.note("got  " + side2.str());
      r.note("want " + want2.str());
    }

    ThetaExpr norm = stab_section(f) * kappa_stab(to_primed(stab_diagonal(g)));
    if (!(norm == want1)) {
      r.fail("MismatchAt " + set_str(f.p) + ": dual diagonal normalization");
      r.note("got  " + norm.str());
      r.note("want " + want1.str());
    }
  }
  return r;
}

Report check_cor_stab(const MirrorPair& mp, int spots, uint64_t seed) {
  Report r("envelope ratio duality");
  size_t N = mp.frames.size();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  auto rnd = [&](double lo, double hi) { return lo + (hi - lo) * uni(rng); };

  std::vector<Assignment> asgs;
  for (int s = 0; s < spots; ++s) {
    Assignment a;
    a[symQ()] = std::sqrt(Cplx(0.3, 0.0));
    a[symH()] = std::polar(rnd(0.45, 0.8), rnd(-0.5, 0.5));
    for (int i = 0; i < mp.x.n; ++i) {
      a[symA(i)] = std::polar(rnd(0.6, 1.7), rnd(-1.2, 1.2));
      a[symZ(i)] = std::polar(rnd(0.6, 1.7), rnd(-1.2, 1.2));
    }
    asgs.push_back(a);
  }

  for (size_t s = 0; s < N; ++s)
    for (size_t t = 0; t < N; ++t) {
      const FramedData& fp = mp.frames[s];
      const FramedData& fq = mp.frames[t];
      const FramedData& gp = mp.dual[s];
      const FramedData& gq = mp.dual[t];
      std::string at = "(" + set_str(fp.p) + "," + set_str(fq.p) + ")";

      ThetaExpr num = stab_restrict(stab_section(fp), fq);
      ThetaExpr den = stab_restrict(stab_section(fq), fq);
      ThetaExpr numP = stab_restrict(stab_section(gq), gp);
      ThetaExpr denP = stab_restrict(stab_section(gp), gp);

      if (den.is_zero() || denP.is_zero()) {
        r.fail("vanishing diagonal at " + at);
        continue;
      }
      if (num.is_zero() != numP.is_zero()) {
        r.fail("support asymmetry at " + at);
        continue;
      }
      if (num.is_zero()) continue;

      ThetaExpr lhs = num / den;
      ThetaExpr rhs = kappa_stab(to_primed(numP / denP));
      if (!(lhs == rhs)) {
        r.fail("MismatchAt " + at);
        r.note("lhs " + lhs.str());
        r.note("rhs " + rhs.str());
        continue;
      }

      ThetaExpr rnum = kappa_stab(to_primed(numP));
      ThetaExpr rden = kappa_stab(to_primed(denP));
      for (int sp = 0; sp < spots; ++sp) {
        Cplx v1 = num.eval(asgs[sp]) / den.eval(asgs[sp]);
        Cplx v2 = rnum.eval(asgs[sp]) / rden.eval(asgs[sp]);
        double rel = std::abs(v1 - v2) / std::max(std::abs(v1), 1e-300);
        r.check(rel < 1e-10, "numeric spot " + std::to_string(sp + 1) +
                                 " at " + at + ": rel " + num_str(rel));
      }
    }
  return r;
}

Report check_log_identities(const MirrorPair& mp) {
  Report r("bilinear log identities");
  int n = mp.x.n;
  for (size_t t = 0; t < mp.frames.size(); ++t) {
    const FramedData& f = mp.frames[t];
    const FramedData& g = mp.dual[t];

    LogForm P1 = LogForm::zero();
    for (int i = 0; i < n; ++i) {
      P1.add_sym(LogVec::of(symZ(i)), LogVec::log_of(f.x_rest(i)));
      P1.add_sym(LogVec::of(symZ(i)), LogVec::of(symA(i)), -1);
    }
    for (int j : f.Aplus)
      P1.add_sym(LogVec::log_of(SignedMonomial(1, f.zeta(j))),
                 LogVec::of(symA(j)));
    for (int j : f.Aminus)
      P1.add_sym(LogVec::log_of(SignedMonomial(1, f.zeta(j))),
                 LogVec::of(symA(j)) + LogVec::of(symH()));
    if (!P1.is_zero()) {
      r.fail("FormMismatch at " + set_str(f.p) + ": zeta collection");
      r.note("residual " + P1.str());
    }

    LogForm R2 = LogForm::zero();
    for (int i = 0; i < n; ++i) {
      SignedMonomial zeps(-1, Mono{});
      zeps.m.set(symZ(i), 1);
      zeps.m.set(symH(), 1);
      bool fam2 = (g.sideA[i] < 0) || (g.in_p(i) && g.sideP[i] > 0);
      if (fam2) {
        zeps.m.set(symQ(), 2);
        zeps.m.set(symH(), zeps.m.exp(symH()) - 2);
      }
      R2.add_sym(LogVec::log_of(kappa_vtx(to_primed(zeps))),
                 LogVec::log_of(kappa_vtx(to_primed(g.x_rest(i)))));
    }
    R2 = R2 - vertex_prefactor_form(f);
    LogVec lnQH = LogVec::of(symQ()) + LogVec::of(symH(), -1);
    LogVec lnH = LogVec::of(symH());
    for (int i : f.pplus) {
      R2.add_sym(lnQH, LogVec::log_of(f.x_rest(i)));
      R2.add_sym(lnQH, lnH);
    }
    for (int j : f.Aminus)
      for (int i : f.pplus)
        R2.add_sym(lnQH, lnH, -Rat(f.C(f.pos[i], f.pos[j])));
    R2 = reduce_sign_torsion(R2);
    if (!R2.is_zero()) {
      r.fail("FormMismatch at " + set_str(f.p) + ": magnetic prefactor match");
      r.note("residual " + R2.str());
    }
  }
  return r;
}

ThetaExpr kappa_phi_dual_polarization(const MirrorPair& mp, int qi) {
  const FramedData& g = mp.dual[qi];
  int n = mp.x.n;
  ThetaExpr out = ThetaExpr::one();
  SignedMonomial q2 = SignedMonomial::of(symQ(), 2);
  SignedMonomial h2 = SignedMonomial::of(symH(), 2);
  for (int i = 0; i < n; ++i) {
    SignedMonomial xv = kappa_vtx(to_primed(g.x_rest(i)));
    bool fam1 = (g.sideA[i] > 0) || (g.in_p(i) && g.sideP[i] < 0);
    if (fam1) {
      out.mul_phi(h2 * xv.inv(), 1);
      out.mul_phi(xv.inv(), -1);
    } else {
      out.mul_phi(q2 * xv, 1);
      out.mul_phi(q2 * h2.inv() * xv, -1);
    }
  }
  int dk = g.data.k;
  out.mul_phi(h2, -dk);
  out.mul_phi(SignedMonomial::one(), dk);
  return out;
}

ThetaExpr pmatrix_entry(const MirrorPair& mp, int qi, int pi) {
  const FramedData& fq = mp.frames[qi];
  const FramedData& fp = mp.frames[pi];
  if (!attracting_contains(fq, fp)) return ThetaExpr::zero();
  int n = mp.x.n, k = mp.x.k;

  ThetaExpr E = stab_section(fq, true);
  for (int i = 0; i < n; ++i) E = E.subst(symX(i), fp.x_rest(i));

  SignedMonomial q2 = SignedMonomial::of(symQ(), 2);
  SignedMonomial h2 = SignedMonomial::of(symH(), 2);
  for (int i = 0; i < n; ++i) {
    SignedMonomial xr = fp.x_rest(i);
    E.mul_theta(xr, -1);
    E.mul_phi(q2 * xr, 1);
    E.mul_phi(h2 * xr, -1);
  }
  E.mul_theta(SignedMonomial::one(), k);
  E.mul_phi(q2, -k);
  E.mul_phi(h2, k);

  E = E * kappa_phi_dual_polarization(mp, qi).inv();

  SignedMonomial pre(static_cast<int>(fq.pplus.size()) % 2 ? -1 : 1, Mono{});
  pre.m.set(symH(), static_cast<int64_t>(fq.pplus.size()));
  for (int i : fq.pplus) pre = pre * fq.x_rest(i);
  E.mul_mono(pre);

  return E.to_phi().cancel_ones();
}

Cplx pmatrix(const MirrorPair& mp, int qi, int pi, const NumParams& np,
             int trunc) {
  ThetaExpr e = pmatrix_entry(mp, qi, pi);
  if (e.is_zero()) return Cplx(0.0);
  Assignment asg;
  asg[symQ()] = std::sqrt(np.q);
  asg[symH()] = std::sqrt(np.h);
  for (auto& [i, v] : np.a) asg[symA(i)] = v;
  for (auto& [i, v] : np.z) asg[symZ(i)] = v;
  EvalOpts o;
  o.trunc = trunc;
  return e.eval(asg, o);
}

Report check_mirror_vertex(const MirrorPair& mp, int D, const NumParams& np) {
  Report r("mirror vertex identity");
  size_t N = mp.frames.size();
  int n = mp.x.n;
  NumParams npP = kappa_vtx_params(np, n);

  auto guard = [&r](const FramedData& f, const NumParams& pars,
                    const char* side) {
    Assignment zasg;
    for (auto& [i, v] : pars.z) zasg[symZ(i)] = v;
    for (int j : f.A) {
      double m = std::abs(f.zeta(j).eval(zasg));
      double eff = f.sideA[j] > 0 ? m : 1.0 / m;
      if (eff > 0.5)
        r.fail(std::string("ConvergenceFailure: ") + side + " frame " +
               set_str(f.p) + " effective Kaehler modulus " + num_str(eff));
      else if (eff > 0.25)
        r.note(std::string(side) + " frame " + set_str(f.p) +
               ": effective modulus " + num_str(eff) +
               " is large; tail bound may be loose");
    }
  };
  for (const auto& f : mp.frames) guard(f, np, "base");
  for (const auto& g : mp.dual) guard(g, npP, "dual");
  if (!r.ok) return r;

  std::vector<Cplx> V(N), Vp(N);
  double tail = 0.0;
  for (size_t t = 0; t < N; ++t) {
    VertexSpec s;
    s.f = mp.frames[t];
    s.D = D;
    V[t] = eval_series(s.f, bare_vertex(s), np);
    s.D = D - 2;
    Cplx lo = eval_series(s.f, bare_vertex(s), np);
    tail = std::max(tail, std::abs(V[t] - lo) / std::abs(V[t]));

    VertexSpec sp;
    sp.f = mp.dual[t];
    sp.opposite = true;
    sp.D = D;
    Vp[t] = eval_series(sp.f, bare_vertex(sp), npP);
    sp.D = D - 2;
    lo = eval_series(sp.f, bare_vertex(sp), npP);
    tail = std::max(tail, std::abs(Vp[t] - lo) / std::abs(Vp[t]));
  }
  double tol = std::max(10.0 * tail, 1e-12);
  r.note("tolerance " + num_str(tol) + " (10 x max truncation tail " +
         num_str(tail) + ")");

  Assignment zasg;
  zasg[symQ()] = std::sqrt(np.q);
  zasg[symH()] = std::sqrt(np.h);
  for (auto& [i, v] : np.z) zasg[symZ(i)] = v;
  EvalOpts o80;
  o80.trunc = 80;
  for (size_t t = 0; t < N; ++t) {
    Cplx lhs = kappa_phi_dual_polarization(mp, static_cast<int>(t)).eval(zasg, o80);
    Cplx rhs = vertex_limit_closed(mp.frames[t], np, 80);
    double rel = std::abs(lhs - rhs) / std::abs(rhs);
    r.check(rel < 1e-8, "limit block at " + set_str(mp.frames[t].p) +
                            ": rel " + num_str(rel));
  }

  for (size_t qi = 0; qi < N; ++qi) {
    Cplx rhs = 0.0;
    for (size_t pi = 0; pi < N; ++pi)
      rhs += pmatrix(mp, static_cast<int>(qi), static_cast<int>(pi), np, 60) * V[pi];
    double dev = std::abs(Vp[qi] - rhs) / std::abs(Vp[qi]);
    r.note("row " + set_str(mp.frames[qi].p) + ": |V' - P V|/|V'| = " +
           num_str(dev));
    r.check(dev < tol, "row " + set_str(mp.frames[qi].p) + " deviation " +
                           num_str(dev) + " exceeds tolerance");
  }
  return r;
}

}  // namespace htx
