#include "hypertoric/checks.hpp"

#include "hypertoric/instances.hpp"
#include "hypertoric/mirror.hpp"
#include "hypertoric/numeric.hpp"
#include "hypertoric/qkring.hpp"
#include "hypertoric/stab.hpp"

#include <cmath>
#include <complex>
#include <random>
#include <sstream>

namespace htx {

namespace {

std::string set_str(const std::vector<int>& s) {
  std::string out = "{";
  for (size_t t = 0; t < s.size(); ++t) {
    if (t) out += ",";
    out += std::to_string(s[t] + 1);
  }
  return out + "}";
}

void merge_failures(Report& rep, const Report& sub, const std::string& where,
                    int& ok_count) {
  if (sub.ok) {
    ++ok_count;
  } else {
    rep.fail(where);
    rep.merge(sub);
  }
}

}  // namespace

std::vector<HypertoricData> instance_set(int count, uint64_t seed) {
  std::vector<HypertoricData> out;
  for (auto& name : fixture_names()) out.push_back(fixture(name));
  for (int t = 0; t < count; ++t)
    out.push_back(random_instance(seed + static_cast<uint64_t>(t)));
  return out;
}

NumParams fixture_mirror_params(const HypertoricData& x) {
  auto polar = [](double r, double ph) { return std::polar(r, ph); };
  NumParams np;
  np.q = {0.3, 0.0};
  np.h = {0.55, 0.1};
  if (x.name == "tp1") {
    np.a = {{0, {1.0, 0.0}}, {1, polar(0.08, 0.3)}};
    np.z = {{0, polar(0.3, 0.2)}, {1, polar(0.2, -0.13)}};
    return np;
  }
  if (x.name == "tp1xtp1") {
    np.a = {{0, {1.0, 0.0}},
            {1, polar(0.08, 0.3)},
            {2, {1.0, 0.0}},
            {3, polar(0.09, -0.2)}};
    np.z = {{0, polar(0.3, 0.2)},
            {1, polar(0.2, -0.13)},
            {2, polar(0.28, 0.1)},
            {3, polar(0.21, 0.15)}};
    return np;
  }
  if (x.name == "tp2") {
    np.a = {{0, {1.0, 0.0}}, {1, polar(0.15, 0.25)}, {2, polar(0.018, -0.2)}};
    np.z = {{0, polar(0.4, 0.1)}, {1, polar(0.38, -0.2)}, {2, polar(0.39, 0.12)}};
    return np;
  }
  return default_params(x);
}

Report suite_circuit_qde(const HypertoricData& x, int degree) {
  Report rep("circuit difference equations [" + x.name + "]");
  auto cs = circuits(x);
  int ok_count = 0;
  for (const FramedData& f : fixed_points(x)) {
    VertexSpec vs{f, Poly::one(), degree, false};
    KahlerSeries V = bare_vertex(vs);
    for (const Circuit& c : cs)
      merge_failures(rep, check_circuit_qde(vs, V, c),
                     "circuit " + set_str(c.support) + " at " + set_str(f.p),
                     ok_count);
  }
  rep.note(std::to_string(ok_count) + " circuit equations exact to degree " +
           std::to_string(degree));
  return rep;
}

Report suite_cocircuit_qde(const HypertoricData& x, int degree) {
  Report rep("cocircuit difference equations [" + x.name + "]");
  auto cs = cocircuits(x);
  int ok_count = 0;
  for (const FramedData& f : fixed_points(x)) {
    VertexSpec vs{f, Poly::one(), degree, false};
    KahlerSeries V = bare_vertex(vs);
    for (const Cocircuit& c : cs)
      merge_failures(rep, check_cocircuit_qde(vs, V, c),
                     "cocircuit " + set_str(c.support) + " at " + set_str(f.p),
                     ok_count);
  }
  rep.note(std::to_string(ok_count) + " cocircuit equations exact to degree " +
           std::to_string(degree));
  return rep;
}

Report suite_stab(const HypertoricData& x) { return check_stab_axioms(x); }

Report suite_duality_interface(const HypertoricData& x, int spots,
                               uint64_t seed) {
  Report rep("duality interface [" + x.name + "]");
  MirrorPair mp = MirrorPair::make(x);
  int ok_count = 0;
  merge_failures(rep, duality_interface_check(mp), "interface section",
                 ok_count);
  merge_failures(rep, check_cor_stab(mp, spots, seed), "envelope corollary",
                 ok_count);
  rep.note(std::to_string(ok_count) + " of 2 identity families pass");
  return rep;
}

Report suite_combinatorial_duality(const HypertoricData& x) {
  return check_combinatorial_duality(MirrorPair::make(x));
}

Report suite_log_identities(const HypertoricData& x) {
  return check_log_identities(MirrorPair::make(x));
}

Report suite_boundedness(const HypertoricData& x, int degree) {
  Report rep("q boundedness [" + x.name + "]");
  int ok_count = 0;
  for (const FramedData& f : fixed_points(x)) {
    VertexSpec vs{f, Poly::one(), degree, false};
    merge_failures(rep, check_q_boundedness(bare_vertex(vs)),
                   "vertex at " + set_str(f.p), ok_count);
  }
  rep.note(std::to_string(ok_count) + " vertex series bounded in q");
  return rep;
}

Report suite_ring(const HypertoricData& x, int degree, bool with_rank,
                  uint64_t seed) {
  Report rep("ring relations [" + x.name + "]");
  rep.merge(check_vanishing_at_fixed_points(x, degree));
  if (with_rank) {
    int rk = presentation_rank(x, seed);
    int nfp = static_cast<int>(fixed_points(x).size());
    rep.check(rk == nfp, "presentation rank " + std::to_string(rk) +
                             " != " + std::to_string(nfp) + " fixed points");
    if (rk == nfp)
      rep.note("presentation rank " + std::to_string(rk) +
               " matches the fixed point count");
  }
  return rep;
}

Report suite_qseries(int order) {
  Report rep("q-series identities");
  std::vector<SignedMonomial> args = {
      SignedMonomial::of(symA(0)),
      SignedMonomial::of(symH(), 2) * SignedMonomial::of(symA(1), -1),
      SignedMonomial(-1, (SignedMonomial::of(symQ(), 2) *
                          SignedMonomial::of(symA(0)))
                             .m)};
  for (auto& xarg : args) {
    auto lhs = qbinom_lhs(xarg, order);
    auto rhs = qbinom_rhs(xarg, order);
    for (int dd = 0; dd <= order; ++dd)
      rep.check(lhs[dd].equals(rhs[dd]),
                "q-binomial coefficient mismatch at order " +
                    std::to_string(dd) + " for " + xarg.str());
  }
  for (auto& aarg : args)
    for (int64_t dd = -5; dd <= 5; ++dd)
      rep.check(bracket(aarg, dd).equals(bracket_alt(aarg, dd)),
                "bracket closed forms differ at d = " + std::to_string(dd));
  rep.note("q-binomial identity exact to order " + std::to_string(order) +
           "; bracket forms agree on d in [-5, 5]");
  return rep;
}

Report suite_vertex_limit(const HypertoricData& x, int degree, double tol) {
  Report rep("vertex limit [" + x.name + "]");
  int ok_count = 0;
  for (const FramedData& f : fixed_points(x)) {
    NumParams np;
    np.q = {0.3, 0.0};
    np.h = {0.55, 0.0};
    for (int i = 0; i < x.n; ++i) {
      np.a[i] = 1.0;
      np.z[i] = 0.05;
    }
    for (int i : f.pplus) np.a[i] = 100.0;
    for (int i : f.pminus) np.a[i] = 0.01;
    VertexSpec vs{f, Poly::one(), degree, false};
    KahlerSeries V = bare_vertex(vs);
    merge_failures(rep,
                   check_vertex_limit(vs, V, np, {1e-1, 1e-2, 1e-3}, tol),
                   "limit at " + set_str(f.p), ok_count);
  }
  rep.note(std::to_string(ok_count) + " fixed points reach the closed form");
  return rep;
}

Report suite_jresidues(const HypertoricData& x, int degree, int m_max) {
  Report rep("vertex residue relations [" + x.name + "]");
  auto fps = fixed_points(x);
  std::vector<KahlerSeries> V;
  for (auto& f : fps) V.push_back(bare_vertex({f, Poly::one(), degree, false}));
  int curves = 0, ok_count = 0;
  for (size_t s = 0; s < fps.size(); ++s)
    for (size_t t = 0; t < fps.size(); ++t) {
      if (s == t) continue;
      InvariantCurve curve;
      try {
        curve = invariant_curve(fps[s], fps[t]);
      } catch (const Error&) {
        continue;
      }
      ++curves;
      for (int m = 1; m <= m_max; ++m)
        merge_failures(rep,
                       check_jfunction_residues(fps[s], V[s], fps[t], V[t],
                                                curve, m),
                       "curve " + set_str(fps[s].p) + " -> " +
                           set_str(fps[t].p) + ", cover " + std::to_string(m),
                       ok_count);
    }
  rep.note(std::to_string(ok_count) + " residue relations exact over " +
           std::to_string(curves) + " directed curves");
  return rep;
}

Report suite_mirror_numeric(const HypertoricData& x, const NumParams& np,
                            int D) {
  return check_mirror_vertex(MirrorPair::make(x), D, np);
}

Report suite_negative_controls(const HypertoricData& x, uint64_t seed) {
  Report rep("negative controls [" + x.name + "]");
  std::mt19937_64 rng(seed);
  auto fps = fixed_points(x);
  auto cs = circuits(x);
  auto cos = cocircuits(x);
  if (fps.empty() || cs.empty()) {
    rep.fail("need a circuit and a fixed point to corrupt");
    return rep;
  }

  {
    const FramedData& f = fps[rng() % fps.size()];
    Circuit c = cs[rng() % cs.size()];
    std::swap(c.Splus, c.Sminus);
    VertexSpec vs{f, Poly::one(), 4, false};
    KahlerSeries V = bare_vertex(vs);
    Report sub = check_circuit_qde(vs, V, c);
    rep.check(!sub.ok, "sign-flipped circuit equation not rejected");
    if (!sub.ok) rep.note("sign-flipped circuit equation rejected");
  }

  if (!cos.empty()) {
    const FramedData& f = fps[rng() % fps.size()];
    Cocircuit c = cos[rng() % cos.size()];
    std::swap(c.Splus, c.Sminus);
    VertexSpec vs{f, Poly::one(), 4, false};
    KahlerSeries V = bare_vertex(vs);
    Report sub = check_cocircuit_qde(vs, V, c);
    rep.check(!sub.ok, "sign-flipped cocircuit equation not rejected");
    if (!sub.ok) rep.note("sign-flipped cocircuit equation rejected");
  }

  {
    bool rejected = false, tried = false;
    for (const FramedData& f : fps) {
      if (f.pplus.empty() && f.pminus.empty()) continue;
      tried = true;
      ThetaExpr bad = ThetaExpr::one();
      for (int i : f.pplus) bad.mul_theta(f.x_rest(i));
      for (int i : f.pminus)
        bad.mul_theta(SignedMonomial::of(symH(), 2) * f.x_rest(i));
      ThetaExpr good = stab_restrict(stab_section(f), f);
      if (!(good == bad)) {
        rejected = true;
        break;
      }
    }
    rep.check(!tried || rejected,
              "diagonal with dropped hbar shift not rejected");
    if (tried && rejected) rep.note("dropped hbar shift in diagonal rejected");
  }

  {
    MirrorPair mp = MirrorPair::make(x);
    mp.frames[rng() % mp.frames.size()].C(0, 0) += 1;
    Report sub = check_log_identities(mp);
    rep.check(!sub.ok, "perturbed frame entry passes the log identities");
    if (!sub.ok) rep.note("perturbed frame entry rejected by log identities");
  }

  {
    MirrorPair mp = MirrorPair::make(x);
    mp.dual[rng() % mp.dual.size()].C(0, 0) += 1;
    Report sub = duality_interface_check(mp);
    rep.check(!sub.ok, "perturbed dual frame passes the interface identities");
    if (!sub.ok) rep.note("perturbed dual frame rejected by the interface");
  }

  {
    bool rejected = false;
    for (size_t t = 0; t < fps.size() && !rejected; ++t) {
      auto bad = fps;
      FramedData& g = bad[t];
      if (g.A.empty()) continue;
      int j = g.A[0];
      g.sideA[j] = -g.sideA[j];
      Report sub = check_vanishing_on_frames(x, bad, 2);
      rejected = !sub.ok;
    }
    rep.check(rejected, "corrupted restriction passes the vanishing check");
    if (rejected) rep.note("corrupted restriction rejected as VanishingFailure");
  }

  return rep;
}

}  // namespace htx
