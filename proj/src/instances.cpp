#include "hypertoric/instances.hpp"

#include "hypertoric/arrangement.hpp"
#include "hypertoric/lattice.hpp"

#include <random>

#ifndef HTX_FIXTURE_DIR
#define HTX_FIXTURE_DIR "fixtures"
#endif

namespace htx {

std::vector<std::string> fixture_names() { return {"tp1", "tp2", "tp1xtp1"}; }

HypertoricData fixture(const std::string& name) {
  return load_data_file(std::string(HTX_FIXTURE_DIR) + "/" + name + ".json");
}

HypertoricData random_instance(uint64_t seed, int nmax, int kmax) {
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 65536; ++attempt) {
    int k = 1 + static_cast<int>(rng() % static_cast<uint64_t>(kmax));
    int n = k + 1 + static_cast<int>(rng() % static_cast<uint64_t>(nmax - k));
    HypertoricData x;
    x.n = n;
    x.k = k;
    x.d = n - k;
    x.iota = IMat::Zero(n, k);
    bool zero_row = false;
    for (int i = 0; i < n; ++i) {
      bool nz = false;
      for (int j = 0; j < k; ++j) {
        int e = static_cast<int>(rng() % 3) - 1;
        x.iota(i, j) = e;
        nz = nz || e != 0;
      }
      zero_row = zero_row || !nz;
    }
    x.theta_lift = IVec::Zero(n);
    x.sigma_lift = IVec::Zero(n);
    for (int i = 0; i < n; ++i) {
      x.theta_lift(i) = static_cast<int>(rng() % 9) - 4;
      x.sigma_lift(i) = static_cast<int>(rng() % 9) - 4;
    }
    if (zero_row) continue;
    x.theta_given = x.sigma_given = true;
    x.name = "rnd" + std::to_string(seed);
    try {
      x.beta = left_kernel_rows(x.iota);
      validate(x);
      auto fps = fixed_points(x);
      if (fps.empty()) continue;
      for (auto& f : fps) f.require_sigma_generic();
      bool loop = false;
      for (auto& c : circuits(x)) loop = loop || c.support.size() < 2;
      if (loop) continue;
      return x;
    } catch (const Error&) {
      continue;
    }
  }
  throw Error("DataError",
              "no smooth instance found for seed " + std::to_string(seed));
}

}  // namespace htx
