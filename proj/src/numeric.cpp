#include "hypertoric/numeric.hpp"

#include <json.hpp>

#include <cmath>
#include <random>

namespace htx {

NumParams default_params(const HypertoricData& x, uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto jitter = [&] {
    return (static_cast<double>(rng() % 10000) / 10000.0 - 0.5);
  };
  NumParams np;
  np.q = {0.3, 0.0};
  np.h = std::polar(0.55, 0.1 + 0.2 * jitter());
  Int smax = 0, smin = 0;
  for (int i = 0; i < x.n; ++i) {
    smax = std::max(smax, x.sigma_lift(i));
    smin = std::min(smin, x.sigma_lift(i));
  }
  double span = std::max<double>(1.0, (smax - smin).convert_to<double>());
  for (int i = 0; i < x.n; ++i) {
    double lvl = (smax - x.sigma_lift(i)).convert_to<double>();
    np.a[i] = std::polar(std::pow(0.08, lvl / span), 0.4 * jitter());
  }
  for (int i = 0; i < x.n; ++i)
    np.z[i] = std::polar(0.2 + 0.001 * static_cast<double>(rng() % 100),
                         0.5 * jitter());
  return np;
}

namespace {

Cplx parse_cplx(const nlohmann::json& v) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
    return {v[0].get<double>(), v[1].get<double>()};
  throw Error("DataError", "parameter values must be numbers or [re, im] pairs");
}

}  // namespace

NumParams parse_params(const std::string& json_text, const HypertoricData& x,
                       uint64_t seed) {
  NumParams np = default_params(x, seed);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error("DataError", std::string("bad --params JSON: ") + e.what());
  }
  if (!j.is_object()) throw Error("DataError", "--params must be a JSON object");
  for (auto& [key, val] : j.items()) {
    if (key == "q") {
      np.q = parse_cplx(val);
    } else if (key == "h") {
      np.h = parse_cplx(val);
    } else if (key == "a" || key == "z") {
      if (!val.is_array() || static_cast<int>(val.size()) != x.n)
        throw Error("DataError", "\"" + key + "\" must list all " +
                                     std::to_string(x.n) + " values");
      for (int i = 0; i < x.n; ++i)
        (key == "a" ? np.a : np.z)[i] = parse_cplx(val[i]);
    } else {
      throw Error("DataError", "unknown parameter key \"" + key + "\"");
    }
  }
  if (std::abs(np.q) >= 1.0)
    throw Error("DataError", "numeric mode needs |q| < 1");
  return np;
}

}  // namespace htx
