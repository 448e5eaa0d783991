#include "hypertoric/monomial.hpp"

#include <cmath>
#include <sstream>

namespace htx {

std::string sym_base_name(SymId s) {
  int i = sym_index(s) + 1;
  switch (sym_kind(s)) {
    case SymKind::Q:
      return "q";
    case SymKind::H:
      return "h";
    case SymKind::A:
      return "a" + std::to_string(i);
    case SymKind::Z:
      return "z" + std::to_string(i);
    case SymKind::X:
      return "x" + std::to_string(i);
    case SymKind::AP:
      return "a'" + std::to_string(i);
    case SymKind::ZP:
      return "z'" + std::to_string(i);
    case SymKind::XP:
      return "x'" + std::to_string(i);
    case SymKind::M1:
      return "(-1)";
  }
  return "?";
}

Mono Mono::operator*(const Mono& o) const {
  Mono r = *this;
  for (auto& [s, v] : o.e) {
    auto it = r.e.find(s);
    if (it == r.e.end()) {
      r.e[s] = v;
    } else {
      it->second += v;
      if (it->second == 0) r.e.erase(it);
    }
  }
  return r;
}

Mono Mono::inv() const {
  Mono r;
  for (auto& [s, v] : e) r.e[s] = -v;
  return r;
}

Mono Mono::pow(int64_t n) const {
  Mono r;
  if (n == 0) return r;
  for (auto& [s, v] : e) r.e[s] = v * n;
  return r;
}

bool Mono::operator<(const Mono& o) const {
  // lexicographic on full exponent vectors, missing entries read as 0
  auto a = e.begin(), b = o.e.begin();
  while (a != e.end() || b != o.e.end()) {
    SymId sa = (a != e.end()) ? a->first : INT32_MAX;
    SymId sb = (b != o.e.end()) ? b->first : INT32_MAX;
    if (sa == sb) {
      if (a->second != b->second) return a->second < b->second;
      ++a;
      ++b;
    } else if (sa < sb) {
      return a->second < 0;
    } else {
      return 0 < b->second;
    }
  }
  return false;
}

Mono Mono::gcd(const Mono& a, const Mono& b) {
  Mono r;
  auto consider = [&](SymId s) {
    int64_t m = std::min(a.exp(s), b.exp(s));
    if (m != 0) r.e[s] = m;
  };
  for (auto& [s, v] : a.e) consider(s);
  for (auto& [s, v] : b.e)
    if (!a.e.count(s)) consider(s);
  return r;
}

namespace {
Cplx ipow(Cplx base, int64_t n) {
  if (n < 0) return 1.0 / ipow(base, -n);
  Cplx r = 1.0;
  while (n > 0) {
    if (n & 1) r *= base;
    base *= base;
    n >>= 1;
  }
  return r;
}
}  // namespace

Cplx Mono::eval(const Assignment& v) const {
  Cplx r = 1.0;
  for (auto& [s, ex] : e) {
    auto it = v.find(s);
    if (it == v.end()) throw Error("UnmappedSymbol", "no value for " + sym_base_name(s));
    r *= ipow(it->second, ex);
  }
  return r;
}

Cplx SignedMonomial::eval_sqrt(const Assignment& v) const {
  Cplx r = (sgn < 0) ? Cplx(0.0, 1.0) : Cplx(1.0, 0.0);
  for (auto& [s, ex] : m.e) {
    auto it = v.find(s);
    if (it == v.end()) throw Error("UnmappedSymbol", "no value for " + sym_base_name(s));
    r *= std::exp(0.5 * double(ex) * std::log(it->second));
  }
  return r;
}

namespace {
// q and h carry half-power semantics: stored exponent e means q^(e/2)
void print_sym(std::ostringstream& os, SymId s, int64_t e, bool& first) {
  if (!first) os << "*";
  first = false;
  os << sym_base_name(s);
  bool half = (sym_kind(s) == SymKind::Q || sym_kind(s) == SymKind::H);
  if (half) {
    if (e == 2) return;
    if (e % 2 == 0) {
      os << "^" << (e / 2);
    } else {
      os << "^(" << e << "/2)";
    }
  } else {
    if (e == 1) return;
    os << "^" << e;
  }
}
}  // namespace

std::string Mono::str() const {
  if (e.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (auto& [s, ex] : e) print_sym(os, s, ex, first);
  return os.str();
}

std::string SignedMonomial::str() const {
  std::string body = m.str();
  if (sgn < 0) return "-" + body;
  return body;
}

}  // namespace htx
