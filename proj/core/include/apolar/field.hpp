#pragma once

#include <array>
#include <complex>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "apolar/errors.hpp"

namespace apolar {

/// Exact rational number. GMP keeps every arithmetic result in lowest terms
/// with a positive denominator.
using Rat = mpq_class;

/// Double-precision complex number; the coefficient field of the numeric side.
using ComplexF = std::complex<double>;

/// Parses `p` or `p/q` (optional leading sign) into a canonical rational.
Rat parse_rat(std::string_view text);
std::string to_string(const Rat& r);

/// Element of the cyclotomic field Q(zeta), zeta = exp(pi i / 6).
///
/// Stored as a0 + a1 zeta + a2 zeta^2 + a3 zeta^3, always reduced modulo
/// Phi_12(zeta) = zeta^4 - zeta^2 + 1, so the representation is canonical and
/// equality is componentwise.
class CycElem {
 public:
  CycElem() = default;
  CycElem(long v) : c_{Rat(v), Rat(0), Rat(0), Rat(0)} {}
  CycElem(const Rat& r) : c_{r, Rat(0), Rat(0), Rat(0)} {}
  explicit CycElem(std::array<Rat, 4> coeffs) : c_(std::move(coeffs)) {}

  static CycElem zeta();
  static CycElem imag_unit();  // zeta^3
  static CycElem alpha();      // exp(2 pi i / 3) = zeta^4
  static CycElem omega();      // exp(pi i / 3) = zeta^2
  static CycElem eta();        // exp(pi i / 6) / sqrt(3) = (zeta^2 + 1) / 3
  static CycElem beta();       // 1 + i

  const std::array<Rat, 4>& coeffs() const { return c_; }
  const Rat& operator[](std::size_t k) const { return c_[k]; }

  bool is_zero() const;
  bool is_rational() const;

  /// Complex conjugation, the automorphism zeta -> zeta^-1 = zeta - zeta^3.
  CycElem conj() const;
  /// Multiplicative inverse by the extended Euclidean algorithm in
  /// Q[t]/(Phi_12). Throws DomainError on zero.
  CycElem inv() const;

  CycElem operator-() const;
  CycElem& operator+=(const CycElem& o);
  CycElem& operator-=(const CycElem& o);
  CycElem& operator*=(const CycElem& o);
  CycElem& operator/=(const CycElem& o) { return *this *= o.inv(); }

  friend CycElem operator+(CycElem a, const CycElem& b) { return a += b; }
  friend CycElem operator-(CycElem a, const CycElem& b) { return a -= b; }
  friend CycElem operator*(CycElem a, const CycElem& b) { return a *= b; }
  friend CycElem operator/(CycElem a, const CycElem& b) { return a /= b; }
  friend bool operator==(const CycElem& a, const CycElem& b) { return a.c_ == b.c_; }
  friend bool operator!=(const CycElem& a, const CycElem& b) { return !(a == b); }

  /// Text form in the constant grammar, e.g. `1/3+1/3*z12^2`.
  std::string to_string() const;

 private:
  std::array<Rat, 4> c_{};
};

CycElem pow(const CycElem& a, unsigned e);

/// Complex value of `a` under zeta -> exp(k pi i / 6). k = 1 is the standard
/// embedding; k in {5, 7, 11} give the Galois conjugates.
ComplexF embed(const CycElem& a, int k = 1);
inline ComplexF embed(const Rat& r) { return {r.get_d(), 0.0}; }
inline ComplexF embed(const ComplexF& z) { return z; }

/// Per-field helpers shared by the generic polynomial and linear-algebra code.
template <class K>
struct field_traits;

template <>
struct field_traits<Rat> {
  static constexpr bool exact = true;
  static Rat zero() { return Rat(0); }
  static Rat one() { return Rat(1); }
  static bool is_zero(const Rat& a) { return sgn(a) == 0; }
  static Rat from_int(long v) { return Rat(v); }
  static Rat inv(const Rat& a) {
    if (is_zero(a)) throw DomainError("division by zero");
    return Rat(1) / a;
  }
  static Rat conj(const Rat& a) { return a; }
};

template <>
struct field_traits<CycElem> {
  static constexpr bool exact = true;
  static CycElem zero() { return CycElem(); }
  static CycElem one() { return CycElem(1L); }
  static bool is_zero(const CycElem& a) { return a.is_zero(); }
  static CycElem from_int(long v) { return CycElem(v); }
  static CycElem inv(const CycElem& a) { return a.inv(); }
  static CycElem conj(const CycElem& a) { return a.conj(); }
};

template <>
struct field_traits<ComplexF> {
  static constexpr bool exact = false;
  static ComplexF zero() { return {0.0, 0.0}; }
  static ComplexF one() { return {1.0, 0.0}; }
  static bool is_zero(const ComplexF& a) { return a == ComplexF{}; }
  static ComplexF from_int(long v) { return {static_cast<double>(v), 0.0}; }
  static ComplexF inv(const ComplexF& a) {
    if (is_zero(a)) throw DomainError("division by zero");
    return 1.0 / a;
  }
  static ComplexF conj(const ComplexF& a) { return std::conj(a); }
};

}  // namespace apolar
