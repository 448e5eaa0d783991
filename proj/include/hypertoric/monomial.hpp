#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>

#include "hypertoric/lattice.hpp"

namespace htx {

/** Symbol alphabet. Q and H stand for q^(1/2) and hbar^(1/2); every exponent
 *  stored anywhere is an integer, half powers live in the choice of symbol.
 *  AP/ZP/XP are the primed (mirror side) parameter families. */
enum class SymKind : int32_t { Q = 0, H = 1, A = 2, Z = 3, X = 4, AP = 5, ZP = 6, XP = 7, M1 = 8 };

using SymId = int32_t;

inline SymId sym(SymKind k, int idx = 0) { return (static_cast<int32_t>(k) << 16) | idx; }
inline SymKind sym_kind(SymId s) { return static_cast<SymKind>(s >> 16); }
inline int sym_index(SymId s) { return s & 0xffff; }

inline SymId symQ() { return sym(SymKind::Q); }
inline SymId symH() { return sym(SymKind::H); }
inline SymId symA(int i) { return sym(SymKind::A, i); }
inline SymId symZ(int i) { return sym(SymKind::Z, i); }
inline SymId symX(int i) { return sym(SymKind::X, i); }
inline SymId symAP(int i) { return sym(SymKind::AP, i); }
inline SymId symZP(int i) { return sym(SymKind::ZP, i); }
inline SymId symXP(int i) { return sym(SymKind::XP, i); }
/** Formal symbol standing for -1; only meaningful inside logarithm vectors. */
inline SymId symM1() { return sym(SymKind::M1); }

std::string sym_base_name(SymId s);

using Cplx = std::complex<double>;
using Assignment = std::map<SymId, Cplx>;

/** Exponent vector over the symbol alphabet (no sign, no coefficient). */
struct Mono {
  std::map<SymId, int64_t> e;

  bool is_one() const { return e.empty(); }
  int64_t exp(SymId s) const {
    auto it = e.find(s);
    return it == e.end() ? 0 : it->second;
  }
  void set(SymId s, int64_t v) {
    if (v == 0)
      e.erase(s);
    else
      e[s] = v;
  }

  Mono operator*(const Mono& o) const;
  Mono inv() const;
  Mono pow(int64_t n) const;
  bool operator==(const Mono& o) const { return e == o.e; }
  bool operator<(const Mono& o) const;

  /** Componentwise minimum of exponents (gcd of monomials). */
  static Mono gcd(const Mono& a, const Mono& b);

  Cplx eval(const Assignment& v) const;
  std::string str() const;
};

/** A monomial with a sign in {+1,-1}. */
struct SignedMonomial {
  int sgn = 1;
  Mono m;

  SignedMonomial() = default;
  SignedMonomial(int s, Mono mm) : sgn(s), m(std::move(mm)) {}
  static SignedMonomial one() { return {}; }
  static SignedMonomial minus_one() {
    SignedMonomial r;
    r.sgn = -1;
    return r;
  }
  static SignedMonomial of(SymId s, int64_t e = 1) {
    SignedMonomial r;
    r.m.set(s, e);
    return r;
  }

  bool is_one() const { return sgn == 1 && m.is_one(); }
  bool is_minus_one() const { return sgn == -1 && m.is_one(); }

  SignedMonomial operator*(const SignedMonomial& o) const {
    return {sgn * o.sgn, m * o.m};
  }
  SignedMonomial inv() const { return {sgn, m.inv()}; }
  SignedMonomial pow(int64_t n) const {
    return {(n % 2 == 0) ? 1 : sgn, m.pow(n)};
  }
  bool operator==(const SignedMonomial& o) const { return sgn == o.sgn && m == o.m; }
  bool operator<(const SignedMonomial& o) const {
    if (m < o.m) return true;
    if (o.m < m) return false;
    return sgn < o.sgn;
  }

  Cplx eval(const Assignment& v) const { return double(sgn) * m.eval(v); }
  /** Principal per-symbol square root; sign -1 contributes the upper branch i. */
  Cplx eval_sqrt(const Assignment& v) const;
  std::string str() const;
};

}  // namespace htx
