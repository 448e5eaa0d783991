#include "hypertoric/logform.hpp"

#include <sstream>

namespace htx {

LogVec LogVec::of(SymId s, const Rat& c) {
  LogVec l;
  if (c != 0) l.v[s] = c;
  return l;
}

LogVec LogVec::log_of(const SignedMonomial& m) {
  LogVec l;
  if (m.sgn < 0) l.v[symM1()] = 1;
  for (auto& [s, e] : m.m.e) {
    Rat c(e);
    if (s == symQ() || s == symH()) c /= 2;
    if (c != 0) l.v[s] += c;
  }
  for (auto it = l.v.begin(); it != l.v.end();) {
    if (it->second == 0)
      it = l.v.erase(it);
    else
      ++it;
  }
  return l;
}

LogVec LogVec::operator+(const LogVec& o) const {
  LogVec r = *this;
  for (auto& [s, c] : o.v) {
    Rat& slot = r.v[s];
    slot += c;
    if (slot == 0) r.v.erase(s);
  }
  return r;
}

LogVec LogVec::operator-(const LogVec& o) const { return *this + o * Rat(-1); }

LogVec LogVec::operator*(const Rat& c) const {
  LogVec r;
  if (c == 0) return r;
  for (auto& [s, cc] : v) r.v[s] = cc * c;
  return r;
}

SignedMonomial LogVec::exp_monomial() const {
  SignedMonomial r = SignedMonomial::one();
  for (auto& [s, c] : v) {
    if (s == symM1()) {
      if (denominator(c) != 1)
        throw Error("NonMonomialShift", "fractional power of -1 in exponentiated shift");
      if (numerator(c) % 2 != 0) r.sgn = -r.sgn;
      continue;
    }
    Rat e = c;
    if (s == symQ() || s == symH()) e *= 2;
    if (denominator(e) != 1)
      throw Error("NonMonomialShift", "fractional exponent on " + sym_base_name(s));
    r.m.e[s] += e.convert_to<int64_t>();
    if (r.m.e[s] == 0) r.m.e.erase(s);
  }
  return r;
}

std::string LogVec::str() const {
  if (v.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [s, c] : v) {
    if (!first) os << " + ";
    first = false;
    os << c.str() << "*ln " << sym_base_name(s);
  }
  return os.str();
}

void LogForm::add_sym(const LogVec& l1, const LogVec& l2, const Rat& c) {
  if (c == 0) return;
  for (auto& [u, cu] : l1.v)
    for (auto& [w, cw] : l2.v) {
      auto key = u <= w ? std::make_pair(u, w) : std::make_pair(w, u);
      Rat& slot = B[key];
      slot += c * cu * cw;
      if (slot == 0) B.erase(key);
    }
}

bool LogForm::is_zero() const { return B.empty(); }

LogForm LogForm::operator+(const LogForm& o) const {
  LogForm r = *this;
  for (auto& [k, c] : o.B) {
    Rat& slot = r.B[k];
    slot += c;
    if (slot == 0) r.B.erase(k);
  }
  return r;
}

LogForm LogForm::operator-(const LogForm& o) const { return *this + o * Rat(-1); }

LogForm LogForm::operator*(const Rat& c) const {
  LogForm r;
  if (c == 0) return r;
  for (auto& [k, cc] : B) r.B[k] = cc * c;
  return r;
}

bool LogForm::operator==(const LogForm& o) const { return B == o.B; }

SignedMonomial LogForm::shift_factor(SymId s, const Rat& t) const {
  LogVec l;
  for (auto& [k, c] : B) {
    auto [u, w] = k;
    if (u == s && w == s) {
      l.v[s] += 2 * t * c;
      l.v[symQ()] += t * t * c;
    } else if (u == s) {
      l.v[w] += t * c;
    } else if (w == s) {
      l.v[u] += t * c;
    }
  }
  for (auto it = l.v.begin(); it != l.v.end();) {
    if (it->second == 0)
      it = l.v.erase(it);
    else
      ++it;
  }
  return l.exp_monomial();
}

LogForm LogForm::mapped(const std::function<LogVec(SymId)>& img) const {
  LogForm r;
  for (auto& [k, c] : B) r.add_sym(img(k.first), img(k.second), c);
  return r;
}

std::string LogForm::str() const {
  if (B.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [k, c] : B) {
    if (!first) os << " + ";
    first = false;
    os << c.str() << "*ln " << sym_base_name(k.first) << "*ln " << sym_base_name(k.second);
  }
  os << " all over ln q";
  return os.str();
}

}  // namespace htx
