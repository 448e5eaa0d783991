#include "hypertoric/data.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include <json.hpp>

namespace htx {

namespace {

IMat json_matrix(const nlohmann::json& j, const char* key, int& rows, int& cols) {
  if (!j.at(key).is_array()) throw Error("DataError", std::string(key) + " must be an array");
  auto& arr = j.at(key);
  rows = int(arr.size());
  cols = rows > 0 ? int(arr[0].size()) : 0;
  IMat M(rows, cols);
  for (int r = 0; r < rows; ++r) {
    if (int(arr[r].size()) != cols)
      throw Error("DataError", std::string(key) + " rows have unequal lengths");
    for (int c = 0; c < cols; ++c) M(r, c) = Int(arr[r][c].get<long long>());
  }
  return M;
}

IVec json_vector(const nlohmann::json& j, const char* key, int n) {
  auto& arr = j.at(key);
  if (!arr.is_array() || int(arr.size()) != n)
    throw Error("DataError", std::string(key) + " must be a length-" + std::to_string(n) + " array");
  IVec v(n);
  for (int i = 0; i < n; ++i) v(i) = Int(arr[i].get<long long>());
  return v;
}

void all_subsets(int n, int d, std::vector<std::vector<int>>& out) {
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (int(cur.size()) == d) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i <= n - (d - int(cur.size())); ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

}  // namespace

void validate(const HypertoricData& x) {
  if (x.n != x.k + x.d) throw Error("DataError", "n != k + d");
  if (x.iota.rows() != x.n || x.iota.cols() != x.k)
    throw Error("DataError", "iota must be n x k");
  if (x.beta.rows() != x.d || x.beta.cols() != x.n)
    throw Error("DataError", "beta must be d x n");
  IMat prod = x.beta * x.iota;
  for (int r = 0; r < prod.rows(); ++r)
    for (int c = 0; c < prod.cols(); ++c)
      if (prod(r, c) != 0) throw Error("NonExact", "beta * iota != 0");
  if (rank_int(x.iota) != x.k) throw Error("RankDeficient", "iota has rank < k");
  if (rank_int(x.beta) != x.d) throw Error("RankDeficient", "beta has rank < d");
  for (const Int& s : smith_divisors(x.iota))
    if (s != 1) throw Error("NotSaturated", "cokernel of iota has torsion");
  std::vector<std::vector<int>> subs;
  all_subsets(x.n, x.d, subs);
  std::vector<int> allrows(x.d);
  for (int i = 0; i < x.d; ++i) allrows[i] = i;
  for (auto& s : subs) {
    Int m = minor_det(x.beta, allrows, s);
    if (m > 1 || m < -1) throw Error("NotUnimodular", "a d x d minor of beta is not in {-1,0,1}");
  }
}

HypertoricData load_data(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const std::exception& e) {
    throw Error("DataError", std::string("JSON parse failure: ") + e.what());
  }
  HypertoricData x;
  try {
    int n = 0, k = 0;
    x.iota = json_matrix(j, "iota", n, k);
    x.n = n;
    x.k = k;
    x.d = n - k;
    if (x.d < 0) throw Error("DataError", "iota has more columns than rows");
    if (j.contains("beta")) {
      int d = 0, nn = 0;
      x.beta = json_matrix(j, "beta", d, nn);
      if (nn != n && d > 0) throw Error("DataError", "beta must have n columns");
      if (d != x.d) throw Error("DataError", "beta must have n - k rows");
      if (d == 0) x.beta = IMat(0, n);
    } else {
      x.beta = left_kernel_rows(x.iota);
      if (x.beta.rows() != x.d) throw Error("RankDeficient", "iota has rank < k");
    }
    x.theta_lift = IVec::Zero(n);
    x.sigma_lift = IVec::Zero(n);
    if (j.contains("theta_lift")) {
      x.theta_lift = json_vector(j, "theta_lift", n);
      x.theta_given = true;
    }
    if (j.contains("sigma_lift")) {
      x.sigma_lift = json_vector(j, "sigma_lift", n);
      x.sigma_given = true;
    }
    if (j.contains("name")) x.name = j.at("name").get<std::string>();
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw Error("DataError", std::string("bad document: ") + e.what());
  }
  validate(x);
  return x;
}

HypertoricData load_data_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("DataError", "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return load_data(ss.str());
}

HypertoricData dualize(const HypertoricData& x) {
  HypertoricData y;
  y.n = x.n;
  y.k = x.d;
  y.d = x.k;
  y.iota = x.beta.transpose();
  y.beta = x.iota.transpose();
  y.theta_lift = -x.sigma_lift;
  y.sigma_lift = -x.theta_lift;
  y.theta_given = x.sigma_given;
  y.sigma_given = x.theta_given;
  y.name = x.name.empty() ? std::string() : x.name + "'";
  validate(y);
  return y;
}

void FramedData::require_sigma_generic() const {
  if (!sigma_ok)
    throw Error("NonGenericLift", "sigma lift ties at a fixed point; choose a generic sigma_lift");
}

SignedMonomial FramedData::x_rest(int i) const {
  if (!in_p(i)) {
    if (sideA[i] > 0) return SignedMonomial::one();
    return SignedMonomial::of(symH(), -2);
  }
  SignedMonomial r = SignedMonomial::of(symA(i), 1);
  int ip = pos[i];
  int64_t hs = 0;
  for (int ja = 0; ja < int(A.size()); ++ja) {
    int j = A[ja];
    int64_t cij = C(ip, ja).convert_to<int64_t>();
    if (cij != 0) r.m.e[symA(j)] -= cij;
    if (sideA[j] < 0) hs += cij;
  }
  if (hs != 0) r.m.e[symH()] += -2 * hs;
  for (auto it = r.m.e.begin(); it != r.m.e.end();)
    it = it->second == 0 ? r.m.e.erase(it) : std::next(it);
  return r;
}

Mono FramedData::alpha(int i) const {
  Mono r;
  r.e[symA(i)] = 1;
  int ip = pos[i];
  for (int ja = 0; ja < int(A.size()); ++ja) {
    int64_t cij = C(ip, ja).convert_to<int64_t>();
    if (cij != 0) r.e[symA(A[ja])] -= cij;
  }
  for (auto it = r.e.begin(); it != r.e.end();) it = it->second == 0 ? r.e.erase(it) : std::next(it);
  return r;
}

Mono FramedData::zeta(int j) const {
  Mono r;
  r.e[symZ(j)] = 1;
  int ja = pos[j];
  for (int ip = 0; ip < int(p.size()); ++ip) {
    int64_t cij = C(ip, ja).convert_to<int64_t>();
    if (cij != 0) r.e[symZ(p[ip])] += cij;
  }
  for (auto it = r.e.begin(); it != r.e.end();) it = it->second == 0 ? r.e.erase(it) : std::next(it);
  return r;
}

SignedMonomial FramedData::zeta_sharp(int j) const {
  int64_t s = 1;
  int ja = pos[j];
  for (int ip = 0; ip < int(p.size()); ++ip) s += C(ip, ja).convert_to<int64_t>();
  SignedMonomial r{s % 2 == 0 ? 1 : -1, zeta(j)};
  if (s != 0) {
    r.m.e[symH()] -= s;
    if (r.m.e[symH()] == 0) r.m.e.erase(symH());
  }
  return r;
}

int64_t FramedData::hshift(int j) const {
  int64_t s = 0;
  int ja = pos[j];
  for (int i : pplus) s += C(pos[i], ja).convert_to<int64_t>();
  return s;
}

int64_t FramedData::a_exp(int m, int i) const {
  if (!in_p(m)) return 0;
  if (m == i) return 1;
  if (in_p(i)) return 0;
  return -C(pos[m], pos[i]).convert_to<int64_t>();
}

FramedData standard_frame(const HypertoricData& x, std::vector<int> p) {
  std::sort(p.begin(), p.end());
  if (int(p.size()) != x.d) throw Error("NotAVertex", "|p| != d");
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0 || p[i] >= x.n) throw Error("NotAVertex", "index out of range");
    if (i > 0 && p[i] == p[i - 1]) throw Error("NotAVertex", "repeated index");
  }
  FramedData f;
  f.data = x;
  f.p = p;
  f.A = complement(p, x.n);

  IMat beta_p = select_cols(x.beta, f.p);
  Int det = x.d > 0 ? det_int(beta_p) : Int(1);
  if (det != 1 && det != -1) throw Error("NotAVertex", "beta minor on p is singular");
  f.Ud = adjugate(beta_p);
  if (det == -1) f.Ud = -f.Ud;
  IMat iota_A = select_rows(x.iota, f.A);
  Int detA = x.k > 0 ? det_int(iota_A) : Int(1);
  if (detA != 1 && detA != -1) throw Error("NotAVertex", "iota minor on A_p is singular");
  f.Uk = adjugate(iota_A);
  if (detA == -1) f.Uk = -f.Uk;

  f.C = -(f.Ud * select_cols(x.beta, f.A));
  if (x.k > 0 && x.d > 0) {
    IMat C2 = select_rows(x.iota, f.p) * f.Uk;
    for (int r = 0; r < x.d; ++r)
      for (int c = 0; c < x.k; ++c)
        if (f.C(r, c) != C2(r, c))
          throw Error("DataError", "frame matrix mismatch between the two definitions");
  }
  if (x.d > 0 && x.k == 0) f.C = IMat(x.d, 0);
  if (x.d == 0) f.C = IMat(0, x.k);

  f.pos.assign(x.n, -1);
  f.member.assign(x.n, 0);
  for (int i = 0; i < int(f.p.size()); ++i) {
    f.pos[f.p[i]] = i;
    f.member[f.p[i]] = 1;
  }
  for (int j = 0; j < int(f.A.size()); ++j) f.pos[f.A[j]] = j;

  IVec rhs(x.d);
  for (int i = 0; i < x.d; ++i) rhs(i) = -x.theta_lift(f.p[i]);
  f.vertex = x.d > 0 ? solve_unimodular(beta_p.transpose(), rhs) : IVec(0);

  f.sideA.assign(x.n, 0);
  for (int j : f.A) {
    Int s = x.theta_lift(j);
    for (int r = 0; r < x.d; ++r) s += f.vertex(r) * x.beta(r, j);
    if (s == 0) throw Error("NonGenericTheta", "vertex lies on hyperplane " + std::to_string(j + 1));
    f.sideA[j] = s > 0 ? 1 : -1;
    (s > 0 ? f.Aplus : f.Aminus).push_back(j);
  }

  f.sideP.assign(x.n, 0);
  for (int i : f.p) {
    Int t = x.sigma_lift(i);
    for (int ja = 0; ja < int(f.A.size()); ++ja) t -= f.C(f.pos[i], ja) * x.sigma_lift(f.A[ja]);
    if (t == 0) {
      f.sigma_ok = false;
      continue;
    }
    f.sideP[i] = t > 0 ? 1 : -1;
    (t > 0 ? f.pplus : f.pminus).push_back(i);
  }
  return f;
}

std::vector<FramedData> fixed_points(const HypertoricData& x) {
  std::vector<std::vector<int>> subs;
  all_subsets(x.n, x.d, subs);
  std::vector<FramedData> out;
  for (auto& s : subs) {
    if (x.d > 0) {
      std::vector<int> allrows(x.d);
      for (int i = 0; i < x.d; ++i) allrows[i] = i;
      Int m = minor_det(x.beta, allrows, s);
      if (m == 0) continue;
    }
    out.push_back(standard_frame(x, s));
  }
  return out;
}

std::vector<int> dual_point(const FramedData& f) { return f.A; }

}  // namespace htx
