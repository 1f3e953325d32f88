#include "apolar/field.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace apolar {

Rat parse_rat(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw DomainError("empty rational literal");
  Rat r;
  if (r.set_str(s, 10) != 0) throw DomainError("malformed rational literal '" + s + "'");
  if (sgn(r.get_den()) == 0) throw DomainError("zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& r) { return r.get_str(); }

namespace {

// Dense univariate polynomials over Q, lowest degree first.
using UPoly = std::vector<Rat>;

void trim(UPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

UPoly sub(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

UPoly mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

void divmod(UPoly num, const UPoly& den, UPoly& quot, UPoly& rem) {
  quot.assign(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Rat(0));
  while (num.size() >= den.size() && !num.empty()) {
    std::size_t shift = num.size() - den.size();
    Rat q = num.back() / den.back();
    quot[shift] = q;
    for (std::size_t i = 0; i < den.size(); ++i) num[i + shift] -= q * den[i];
    trim(num);
  }
  trim(quot);
  rem = std::move(num);
}

const UPoly& cyclotomic12() {
  static const UPoly phi{Rat(1), Rat(0), Rat(-1), Rat(0), Rat(1)};
  return phi;
}

}  // namespace

CycElem CycElem::zeta() { return CycElem({Rat(0), Rat(1), Rat(0), Rat(0)}); }
CycElem CycElem::imag_unit() { return CycElem({Rat(0), Rat(0), Rat(0), Rat(1)}); }
CycElem CycElem::alpha() { return CycElem({Rat(-1), Rat(0), Rat(1), Rat(0)}); }
CycElem CycElem::omega() { return CycElem({Rat(0), Rat(0), Rat(1), Rat(0)}); }
CycElem CycElem::eta() { return CycElem({Rat(1, 3), Rat(0), Rat(1, 3), Rat(0)}); }
CycElem CycElem::beta() { return CycElem({Rat(1), Rat(0), Rat(0), Rat(1)}); }

bool CycElem::is_zero() const {
  for (const auto& a : c_)
    if (sgn(a) != 0) return false;
  return true;
}

bool CycElem::is_rational() const {
  return sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0;
}

CycElem CycElem::operator-() const {
  CycElem r;
  for (std::size_t k = 0; k < 4; ++k) r.c_[k] = -c_[k];
  return r;
}

CycElem& CycElem::operator+=(const CycElem& o) {
  for (std::size_t k = 0; k < 4; ++k) c_[k] += o.c_[k];
  return *this;
}

CycElem& CycElem::operator-=(const CycElem& o) {
  for (std::size_t k = 0; k < 4; ++k) c_[k] -= o.c_[k];
  return *this;
}

CycElem& CycElem::operator*=(const CycElem& o) {
  std::array<Rat, 7> p;
  for (auto& v : p) v = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    if (sgn(c_[i]) == 0) continue;
    for (std::size_t j = 0; j < 4; ++j) p[i + j] += c_[i] * o.c_[j];
  }
  // zeta^6 = -1, zeta^5 = zeta^3 - zeta, zeta^4 = zeta^2 - 1.
  p[0] -= p[6];
  p[3] += p[5];
  p[1] -= p[5];
  p[2] += p[4];
  p[0] -= p[4];
  for (std::size_t k = 0; k < 4; ++k) c_[k] = p[k];
  return *this;
}

CycElem CycElem::conj() const {
  // conj(zeta) = zeta - zeta^3, conj(zeta^2) = 1 - zeta^2, conj(zeta^3) = -zeta^3.
  CycElem r;
  r.c_[0] = c_[0] + c_[2];
  r.c_[1] = c_[1];
  r.c_[2] = -c_[2];
  r.c_[3] = -c_[1] - c_[3];
  return r;
}

CycElem CycElem::inv() const {
  if (is_zero()) throw DomainError("inverse of zero in Q(zeta12)");
  UPoly a(c_.begin(), c_.end());
  trim(a);
  UPoly r0 = cyclotomic12(), r1 = a;
  UPoly s0, s1{Rat(1)};
  while (r1.size() > 1) {
    UPoly q, rem;
    divmod(r0, r1, q, rem);
    UPoly s2 = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // Phi_12 is irreducible, so the last nonzero remainder is a unit.
  Rat c = r1.at(0);
  UPoly q, inv;
  divmod(s1, cyclotomic12(), q, inv);
  CycElem out;
  for (std::size_t k = 0; k < inv.size() && k < 4; ++k) out.c_[k] = inv[k] / c;
  return out;
}

std::string CycElem::to_string() const {
  static const char* const powers[] = {"", "z12", "z12^2", "z12^3"};
  std::string out;
  for (std::size_t k = 0; k < 4; ++k) {
    const Rat& a = c_[k];
    if (sgn(a) == 0) continue;
    std::string coef = apolar::to_string(abs(a));
    if (!out.empty() || sgn(a) < 0) out += sgn(a) < 0 ? "-" : "+";
    if (k == 0) {
      out += coef;
    } else {
      if (coef != "1") out += coef + "*";
      out += powers[k];
    }
  }
  return out.empty() ? "0" : out;
}

CycElem pow(const CycElem& a, unsigned e) {
  CycElem result(1L), base = a;
  while (e) {
    if (e & 1u) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

ComplexF embed(const CycElem& a, int k) {
  const double theta = k * std::numbers::pi / 6.0;
  ComplexF z{std::cos(theta), std::sin(theta)}, zp{1.0, 0.0}, acc{};
  for (std::size_t j = 0; j < 4; ++j) {
    acc += a[j].get_d() * zp;
    zp *= z;
  }
  return acc;
}

}  // namespace apolar
