#include "hypertoric/stab.hpp"

#include <sstream>

namespace htx {

namespace {

std::string set_str(const std::vector<int>& p) {
  std::ostringstream os;
  os << "{";
  for (size_t t = 0; t < p.size(); ++t) os << (t ? "," : "") << p[t] + 1;
  os << "}";
  return os.str();
}

/** zeta_j(p) hbar^{-hshift(j)}, or zeta#_j(p)^{-1} hbar^{-hshift(j)}. */
SignedMonomial attract_weight(const FramedData& f, int j, bool sharp) {
  SignedMonomial w = sharp ? f.zeta_sharp(j).inv() : SignedMonomial{1, f.zeta(j)};
  int64_t hs = f.hshift(j);
  if (hs != 0) w.m.e[symH()] -= 2 * hs;
  if (w.m.e.count(symH()) && w.m.e[symH()] == 0) w.m.e.erase(symH());
  return w;
}

SignedMonomial hbar_times(SignedMonomial u) {
  u.m.e[symH()] += 2;
  if (u.m.e[symH()] == 0) u.m.e.erase(symH());
  return u;
}

}  // namespace

ThetaExpr stab_section(const FramedData& f, bool sharp) {
  f.require_sigma_generic();
  ThetaExpr r = ThetaExpr::one();
  for (int i : f.pplus) r.mul_theta(hbar_times(SignedMonomial::of(symX(i))));
  for (int i : f.pminus) r.mul_theta(SignedMonomial::of(symX(i)));
  for (int j : f.A) {
    SignedMonomial w = attract_weight(f, j, sharp);
    r.mul_theta(SignedMonomial::of(symX(j)) * w);
    SignedMonomial den = w;
    if (f.sideA[j] < 0) {
      den.m.e[symH()] -= 2;
      if (den.m.e[symH()] == 0) den.m.e.erase(symH());
    }
    r.mul_theta(den, -1);
  }
  return r;
}

ThetaExpr normalized_stab(const FramedData& f) {
  f.require_sigma_generic();
  ThetaExpr r = ThetaExpr::one();
  for (int i : f.pplus) r.mul_theta(hbar_times(SignedMonomial::of(symX(i))));
  for (int i : f.pminus) r.mul_theta(SignedMonomial::of(symX(i)));
  for (int j : f.A) r.mul_theta(SignedMonomial::of(symX(j)) * attract_weight(f, j, false));
  return r;
}

ThetaExpr stab_restrict(const ThetaExpr& s, const FramedData& fq) {
  ThetaExpr r = s;
  for (int i = 0; i < fq.data.n; ++i) r = r.subst(symX(i), fq.x_rest(i));
  return r.cancel_ones();
}

ThetaExpr stab_diagonal(const FramedData& f) {
  ThetaExpr r = ThetaExpr::one();
  for (int i : f.pplus) r.mul_theta(hbar_times(f.x_rest(i)));
  for (int i : f.pminus) r.mul_theta(f.x_rest(i));
  return r;
}

Report check_stab_axioms(const HypertoricData& x) {
  Report r("stable envelope axioms");
  auto fr = fixed_points(x);

  int zero_checked = 0, diag_checked = 0, supported = 0;
  for (auto& fp : fr) {
    ThetaExpr sec = stab_section(fp);
    for (auto& fq : fr) {
      ThetaExpr res = stab_restrict(sec, fq);
      bool on = attracting_contains(fp, fq);
      if (!on) {
        ++zero_checked;
        if (!res.is_zero()) {
          std::ostringstream os;
          os << "nonzero restriction outside the attracting closure: p=" << set_str(fp.p)
             << " q=" << set_str(fq.p) << " value " << res.str();
          r.fail(os.str());
        }
        continue;
      }
      ++supported;
      if (fp.p == fq.p) {
        ++diag_checked;
        ThetaExpr want = stab_diagonal(fp);
        if (res.is_zero() || !(res == want)) {
          std::ostringstream os;
          os << "diagonal mismatch at p=" << set_str(fp.p) << ": got " << res.str() << ", want "
             << want.str();
          r.fail(os.str());
        }
      }
    }
  }
  {
    std::ostringstream os;
    os << diag_checked << " diagonals, " << zero_checked << " off-support zeroes, " << supported
       << " supported restrictions over " << fr.size() * fr.size() << " ordered pairs";
    r.note(os.str());
  }
  return r;
}

}  // namespace htx
