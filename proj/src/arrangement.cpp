#include "hypertoric/arrangement.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace htx {

namespace {

void subsets_rec(int n, int d, std::vector<int>& cur, int start,
                 const std::function<void(const std::vector<int>&)>& fn) {
  if (int(cur.size()) == d) {
    fn(cur);
    return;
  }
  for (int i = start; i <= n - (d - int(cur.size())); ++i) {
    cur.push_back(i);
    subsets_rec(n, d, cur, i + 1, fn);
    cur.pop_back();
  }
}

Circuit orient(const IVec& v, const IVec& lift, const char* what) {
  Int s = 0;
  for (int i = 0; i < v.size(); ++i) s += v(i) * lift(i);
  if (s == 0)
    throw Error("NonGenericLift", std::string("wall pairing vanishes for a ") + what);
  Circuit c;
  c.vec = s > 0 ? v : IVec(-v);
  for (int i = 0; i < c.vec.size(); ++i) {
    if (c.vec(i) == 0) continue;
    if (c.vec(i) > 1 || c.vec(i) < -1)
      throw Error("NotUnimodular", "minimal kernel vector with entry outside {-1,0,1}");
    c.support.push_back(i);
    (c.vec(i) > 0 ? c.Splus : c.Sminus).push_back(i);
  }
  return c;
}

}  // namespace

std::vector<IVec> minimal_kernel_vectors(const IMat& M) {
  int n = int(M.cols());
  std::vector<IVec> out;
  std::vector<int> cur;
  for (int size = 1; size <= n; ++size) {
    subsets_rec(n, size, cur, 0, [&](const std::vector<int>& S) {
      IMat MS = select_cols(M, S);
      IMat K = left_kernel_rows(MS.transpose());
      if (K.rows() != 1) return;
      for (int c = 0; c < K.cols(); ++c)
        if (K(0, c) == 0) return;
      IVec v = IVec::Zero(n);
      for (int c = 0; c < int(S.size()); ++c) v(S[c]) = K(0, c);
      out.push_back(v);
    });
  }
  std::sort(out.begin(), out.end(), [](const IVec& a, const IVec& b) {
    std::vector<int> sa, sb;
    for (int i = 0; i < a.size(); ++i)
      if (a(i) != 0) sa.push_back(i);
    for (int i = 0; i < b.size(); ++i)
      if (b(i) != 0) sb.push_back(i);
    return sa < sb;
  });
  return out;
}

std::vector<Circuit> circuits(const HypertoricData& x) {
  std::vector<Circuit> out;
  for (const IVec& v : minimal_kernel_vectors(x.beta)) out.push_back(orient(v, x.theta_lift, "circuit"));
  return out;
}

std::vector<Cocircuit> cocircuits(const HypertoricData& x) {
  std::vector<Cocircuit> out;
  IMat it = x.iota.transpose();
  for (const IVec& v : minimal_kernel_vectors(it)) out.push_back(orient(v, x.sigma_lift, "cocircuit"));
  return out;
}

GenericReport check_generic(const HypertoricData& x) {
  GenericReport r;
  auto scan = [&](const IMat& M, const IVec& lift, const char* what) {
    for (const IVec& v : minimal_kernel_vectors(M)) {
      Int s = 0;
      for (int i = 0; i < v.size(); ++i) s += v(i) * lift(i);
      if (s == 0) {
        r.ok = false;
        std::ostringstream os;
        os << what << " wall {";
        bool first = true;
        for (int i = 0; i < v.size(); ++i)
          if (v(i) != 0) {
            os << (first ? "" : ",") << i + 1;
            first = false;
          }
        os << "} pairs to zero";
        r.failures.push_back(os.str());
      }
    }
  };
  scan(x.beta, x.theta_lift, "circuit");
  IMat it = x.iota.transpose();
  scan(it, x.sigma_lift, "cocircuit");
  return r;
}

bool attracting_contains(const FramedData& p, const FramedData& q) {
  p.require_sigma_generic();
  for (int i : q.Aminus)
    if (p.sideP[i] > 0) return false;
  for (int i : q.Aplus)
    if (p.sideP[i] < 0) return false;
  return true;
}

InvariantCurve invariant_curve(const FramedData& fp, const FramedData& fq) {
  const HypertoricData& x = fp.data;
  std::vector<int> pOnly, qOnly;
  std::set_difference(fp.p.begin(), fp.p.end(), fq.p.begin(), fq.p.end(), std::back_inserter(pOnly));
  std::set_difference(fq.p.begin(), fq.p.end(), fp.p.begin(), fp.p.end(), std::back_inserter(qOnly));
  if (pOnly.size() != 1 || qOnly.size() != 1)
    throw Error("NotAdjacent", "fixed points do not differ in exactly one hyperplane");
  InvariantCurve c;
  c.p = fp.p;
  c.q = fq.p;
  c.i = pOnly[0];
  c.j = qOnly[0];
  c.S = fp.p;
  c.S.push_back(c.j);
  std::sort(c.S.begin(), c.S.end());

  // Another vertex on the common line strictly between p and q blocks the curve.
  std::vector<int> shared;
  std::set_intersection(fp.p.begin(), fp.p.end(), fq.p.begin(), fq.p.end(), std::back_inserter(shared));
  IVec w = fq.vertex - fp.vertex;
  for (int s = 0; s < x.n; ++s) {
    if (s == c.i || s == c.j) continue;
    if (std::binary_search(shared.begin(), shared.end(), s)) continue;
    std::vector<int> r = shared;
    r.push_back(s);
    std::sort(r.begin(), r.end());
    FramedData fr;
    try {
      fr = standard_frame(x, r);
    } catch (const Error&) {
      continue;
    }
    IVec u = fr.vertex - fp.vertex;
    // u = t*w with t in (0,1) means strictly between.
    Int num = 0, den = 0;
    for (int m = 0; m < w.size(); ++m)
      if (w(m) != 0) {
        num = u(m);
        den = w(m);
        break;
      }
    bool parallel = true;
    for (int m = 0; m < w.size(); ++m)
      if (u(m) * den != num * w(m)) parallel = false;
    if (!parallel) continue;
    Rat t = den != 0 ? Rat(num) / Rat(den) : Rat(0);
    if (t > 0 && t < 1)
      throw Error("NotAdjacent", "another fixed point separates the pair on their common line");
  }

  IMat bS = select_cols(x.beta, c.S);
  IMat K = left_kernel_rows(bS.transpose());
  if (K.rows() != 1) throw Error("NotAdjacent", "no one-dimensional curve class on p union {j}");
  IVec v = IVec::Zero(x.n);
  for (int m = 0; m < int(c.S.size()); ++m) v(c.S[m]) = K(0, m);
  int want = fq.sideA[c.i];
  int ipos = int(std::lower_bound(c.S.begin(), c.S.end(), c.i) - c.S.begin());
  if (K(0, ipos) == 0) throw Error("NotAdjacent", "curve class misses the exchanged hyperplane");
  if ((K(0, ipos) > 0 ? 1 : -1) != want) v = -v;
  c.deg = v;
  for (int m = 0; m < x.n; ++m)
    if (c.deg(m) > 1 || c.deg(m) < -1)
      throw Error("NotUnimodular", "curve degree entry outside {-1,0,1}");

  if (fq.sideA[c.i] > 0) {
    c.tangent = fp.x_rest(c.i);
  } else {
    c.tangent = fp.x_rest(c.i).inv();
    c.tangent.m.e[symH()] += -2;
    if (c.tangent.m.e[symH()] == 0) c.tangent.m.e.erase(symH());
  }
  return c;
}

}  // namespace htx
