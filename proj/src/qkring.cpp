#include "hypertoric/qkring.hpp"

#include "hypertoric/vertex.hpp"

#include <algorithm>
#include <random>
#include <vector>

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

Poly circuit_product(const Circuit& c, bool flip) {
  Poly out = Poly::one();
  auto factor = [&](int i, bool hbar) {
    SignedMonomial xm = SignedMonomial::of(symX(i));
    if (hbar) xm = xm * SignedMonomial::of(symH(), 2);
    out = out * (Poly::one() - Poly::from(xm));
  };
  for (int i : c.Splus) factor(i, flip);
  for (int i : c.Sminus) factor(i, !flip);
  return out;
}

SignedMonomial circuit_zcoef(const Circuit& c) {
  SignedMonomial zs;
  int64_t sum = 0;
  for (int l = 0; l < c.vec.size(); ++l) {
    int64_t v = c.vec(l).convert_to<int64_t>();
    if (v) zs.m.set(symZ(l), v);
    sum += v;
  }
  zs.m.set(symH(), -sum);
  if (sum % 2 != 0) zs.sgn = -1;
  return zs;
}

RingPresentation build_presentation(const HypertoricData& x, bool quantum) {
  validate(x);
  RingPresentation out;
  out.quantum = quantum;
  for (int j = 0; j < x.d; ++j) {
    LinearRelation lr;
    lr.e = x.beta.row(j).transpose();
    out.linear.push_back(lr);
  }
  for (const Circuit& c : circuits(x)) {
    CircuitRelation cr;
    cr.circ = c;
    cr.classical = circuit_product(c, false);
    cr.flipped = circuit_product(c, true);
    cr.quantum = quantum;
    if (quantum) cr.zcoef = circuit_zcoef(c);
    out.circuits.push_back(cr);
  }
  return out;
}

Rat rat_pow(const Rat& b, int64_t e) {
  if (e < 0) return rat_pow(Rat(denominator(b), numerator(b)), -e);
  Rat out = 1, base = b;
  for (int64_t m = e; m > 0; m >>= 1) {
    if (m & 1) out *= base;
    base *= base;
  }
  return out;
}

int rank_rat(std::vector<std::vector<Rat>>& M) {
  if (M.empty()) return 0;
  int rows = static_cast<int>(M.size());
  int cols = static_cast<int>(M[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (M[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(M[r], M[piv]);
    for (int i = r + 1; i < rows; ++i) {
      if (M[i][c] == 0) continue;
      Rat f = M[i][c] / M[r][c];
      for (int j = c; j < cols; ++j) M[i][j] -= f * M[r][j];
    }
    ++r;
  }
  return r;
}

/** Circuit relation with a, hbar specialized, as a Laurent polynomial in the
 *  k framing coordinates (internally reusing the X symbol slots). */
Poly framing_poly(const HypertoricData& x, const Circuit& c,
                  const std::vector<Rat>& aval, const Rat& hval) {
  Poly out = Poly::one();
  auto factor = [&](int i, bool hbar) {
    SignedMonomial sm;
    for (int j = 0; j < x.k; ++j) {
      int64_t e = x.iota(i, j).convert_to<int64_t>();
      if (e) sm.m.set(symX(j), e);
    }
    out = out * (Poly::one() - Poly::from(sm, hbar ? aval[i] * hval : aval[i]));
  };
  for (int i : c.Splus) factor(i, false);
  for (int i : c.Sminus) factor(i, true);
  return out;
}

Rat eval_framing(const Poly& f, const std::vector<Rat>& s) {
  Rat total = 0;
  for (auto& [m, c] : f.t) {
    Rat term = c;
    for (auto& [sy, e] : m.e) term *= rat_pow(s[sym_index(sy)], e);
    total += term;
  }
  return total;
}

}  // namespace

SignedMonomial LinearRelation::lhs() const {
  SignedMonomial m;
  for (int i = 0; i < e.size(); ++i)
    if (e(i) != 0) m.m.set(symX(i), e(i).convert_to<int64_t>());
  return m;
}

SignedMonomial LinearRelation::rhs() const {
  SignedMonomial m;
  for (int i = 0; i < e.size(); ++i)
    if (e(i) != 0) m.m.set(symA(i), e(i).convert_to<int64_t>());
  return m;
}

std::string LinearRelation::str() const { return lhs().str() + " = " + rhs().str(); }

Poly CircuitRelation::relation() const {
  if (!quantum) return classical;
  return classical - Poly::from(zcoef) * flipped;
}

std::string CircuitRelation::str() const { return relation().str(); }

std::vector<std::string> RingPresentation::relation_strings() const {
  std::vector<std::string> out;
  for (auto& lr : linear) out.push_back(lr.str());
  for (auto& cr : circuits) out.push_back(cr.str());
  return out;
}

RingPresentation classical_relations(const HypertoricData& x) {
  return build_presentation(x, false);
}

RingPresentation quantum_relations(const HypertoricData& x) {
  return build_presentation(x, true);
}

Report check_vanishing_at_fixed_points(const HypertoricData& x, int degree) {
  validate(x);
  return check_vanishing_on_frames(x, fixed_points(x), degree);
}

Report check_vanishing_on_frames(const HypertoricData& x,
                                 const std::vector<FramedData>& fps,
                                 int degree) {
  Report rep("vanishing at fixed points");
  auto cs = circuits(x);
  int pairs = 0, qde_ok = 0;
  for (const FramedData& f : fps) {
    for (const Circuit& c : cs) {
      bool witness = false;
      for (int i : c.Splus)
        if (f.sideA[i] > 0) witness = true;
      for (int i : c.Sminus)
        if (f.sideA[i] < 0) witness = true;
      rep.check(witness, "VanishingFailure(" + set_str(f.p) + ", " +
                             set_str(c.support) +
                             "): no factor vanishes at the restriction");
      Poly r = circuit_product(c, false);
      for (int i : c.support) r = r.subst(symX(i), f.x_rest(i));
      rep.check(r.is_zero(), "VanishingFailure(" + set_str(f.p) + ", " +
                                 set_str(c.support) +
                                 "): restriction evaluates to " + r.str());
      ++pairs;
    }
    if (cs.empty()) continue;
    VertexSpec vs{f, Poly::one(), degree, false};
    KahlerSeries V = bare_vertex(vs);
    for (const Circuit& c : cs) {
      Report sub = check_circuit_qde(vs, V, c);
      if (sub.ok) {
        ++qde_ok;
      } else {
        rep.fail("quantum evidence at " + set_str(f.p) + ", circuit " +
                 set_str(c.support));
        rep.merge(sub);
      }
    }
  }
  rep.note(std::to_string(pairs) + " (fixed point, circuit) pairs vanish exactly");
  if (!cs.empty())
    rep.note(std::to_string(qde_ok) + " circuit difference equations hold to degree " +
             std::to_string(degree));
  return rep;
}

int presentation_rank(const HypertoricData& x, uint64_t seed) {
  validate(x);
  if (x.k == 0) return 1;
  auto cs = circuits(x);
  auto fps = fixed_points(x);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> draw(2, 97);

  std::vector<Rat> aval(x.n);
  Rat hval;
  std::vector<std::vector<Rat>> sval;
  for (int attempt = 0;; ++attempt) {
    if (attempt >= 8)
      throw Error("DataError", "no generic specialization found for rank count");
    for (int i = 0; i < x.n; ++i) aval[i] = Rat(draw(rng), draw(rng));
    hval = Rat(draw(rng), draw(rng));
    if (hval == 1) continue;

    sval.assign(fps.size(), std::vector<Rat>(x.k, Rat(1)));
    for (size_t t = 0; t < fps.size(); ++t) {
      const FramedData& f = fps[t];
      IMat M = select_rows(x.iota, f.A);
      Int det = det_int(M);
      IMat W = adjugate(M) * det;
      for (int j = 0; j < x.k; ++j) {
        Rat s = 1;
        for (int u = 0; u < x.k; ++u) {
          int i = f.A[u];
          Rat val = Rat(1) / aval[i];
          if (f.sideA[i] < 0) val /= hval;
          s *= rat_pow(val, W(j, u).convert_to<int64_t>());
        }
        sval[t][j] = s;
      }
    }
    bool distinct = true;
    for (size_t t = 0; t + 1 < fps.size() && distinct; ++t)
      for (size_t u = t + 1; u < fps.size(); ++u)
        if (sval[t] == sval[u]) {
          distinct = false;
          break;
        }
    if (distinct) break;
  }

  std::vector<Poly> rels;
  int64_t B = 1;
  for (const Circuit& c : cs) {
    Poly f = framing_poly(x, c, aval, hval);
    for (int j = 0; j < x.k; ++j)
      B = std::max({B, -f.min_exp(symX(j)), f.max_exp(symX(j))});
    for (size_t t = 0; t < fps.size(); ++t)
      if (eval_framing(f, sval[t]) != 0)
        throw Error("DataError", "circuit relation nonzero at fixed point " +
                                     set_str(fps[t].p));
    rels.push_back(f);
  }

  int codim = -1;
  for (int64_t R = B; R <= B + 3; ++R) {
    std::vector<std::vector<int64_t>> mults;
    std::vector<int64_t> v(x.k, -R);
    for (;;) {
      mults.push_back(v);
      int j = x.k - 1;
      while (j >= 0 && v[j] == R) v[j--] = -R;
      if (j < 0) break;
      ++v[j];
    }

    auto key_of = [&](const Mono& m, const std::vector<int64_t>& vv) {
      std::vector<int64_t> u(x.k);
      for (int j = 0; j < x.k; ++j) u[j] = m.exp(symX(j)) + vv[j];
      return u;
    };
    std::map<std::vector<int64_t>, int> colix;
    for (const Poly& f : rels)
      for (auto& term : f.t)
        for (auto& vv : mults) colix.emplace(key_of(term.first, vv), 0);
    int ncols = 0;
    for (auto& kv : colix) kv.second = ncols++;

    std::vector<std::vector<Rat>> rows;
    rows.reserve(mults.size() * rels.size());
    for (auto& vv : mults)
      for (const Poly& f : rels) {
        std::vector<Rat> row(ncols, Rat(0));
        for (auto& [m, c] : f.t) row[colix.at(key_of(m, vv))] += c;
        rows.push_back(std::move(row));
      }
    codim = ncols - rank_rat(rows);

    std::vector<std::vector<Rat>> evalm(fps.size(), std::vector<Rat>(ncols));
    for (size_t t = 0; t < fps.size(); ++t)
      for (auto& [u, id] : colix) {
        Rat val = 1;
        for (int j = 0; j < x.k; ++j) val *= rat_pow(sval[t][j], u[j]);
        evalm[t][id] = val;
      }
    if (codim == rank_rat(evalm)) break;
  }
  return codim;
}

}  // namespace htx
