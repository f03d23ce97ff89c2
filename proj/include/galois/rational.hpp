#pragma once

#include <gmpxx.h>

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>

namespace galois {

// Exact rational scalar. mpq_class keeps gcd(|num|, den) = 1 and den > 0
// after every arithmetic operation, provided inputs are canonical; the
// factory functions below canonicalize.
using Rat = mpq_class;
using BigInt = mpz_class;

inline Rat make_rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Parses decimal strings of arbitrary-precision integers.
inline Rat rat_from_strings(const std::string& num, const std::string& den) {
  BigInt n, d;
  if (n.set_str(num, 10) != 0) throw std::invalid_argument("bad integer literal: " + num);
  if (d.set_str(den, 10) != 0) throw std::invalid_argument("bad integer literal: " + den);
  if (d == 0) throw std::invalid_argument("rational with zero denominator");
  Rat r(n, d);
  r.canonicalize();
  return r;
}

inline double to_double(const Rat& r) { return r.get_d(); }

// Gaussian rational a + b*i. A field: division goes through the conjugate.
struct GaussRat {
  Rat re, im;

  GaussRat() : re(0), im(0) {}
  GaussRat(int v) : re(v), im(0) {}  // NOLINT: implicit by design, ring literal
  GaussRat(long v) : re(v), im(0) {}  // NOLINT
  GaussRat(Rat r) : re(std::move(r)), im(0) {}  // NOLINT
  GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  GaussRat conj() const { return {re, -im}; }
  Rat norm() const { return re * re + im * im; }

  friend GaussRat operator+(const GaussRat& a, const GaussRat& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussRat operator-(const GaussRat& a, const GaussRat& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussRat operator-(const GaussRat& a) { return {-a.re, -a.im}; }
  friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussRat operator/(const GaussRat& a, const GaussRat& b) {
    Rat n = b.norm();
    if (n == 0) throw std::domain_error("division by zero GaussRat");
    GaussRat t = a * b.conj();
    return {t.re / n, t.im / n};
  }
  GaussRat& operator+=(const GaussRat& o) { return *this = *this + o; }
  GaussRat& operator-=(const GaussRat& o) { return *this = *this - o; }
  GaussRat& operator*=(const GaussRat& o) { return *this = *this * o; }
  GaussRat& operator/=(const GaussRat& o) { return *this = *this / o; }

  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }
};

inline std::complex<double> to_complex(const GaussRat& g) {
  return {g.re.get_d(), g.im.get_d()};
}

inline std::string to_string(const Rat& r) { return r.get_str(); }

inline std::string to_string(const GaussRat& g) {
  if (g.im == 0) return g.re.get_str();
  return g.re.get_str() + (g.im > 0 ? "+" : "") + g.im.get_str() + "i";
}

}  // namespace galois
