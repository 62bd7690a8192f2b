#ifndef CLASSYM_GAUSSIAN_RATIONAL_HPP
#define CLASSYM_GAUSSIAN_RATIONAL_HPP

#include <gmpxx.h>
#include <complex>
#include <stdexcept>
#include <string>

namespace classym {

/// Complex number with rational real and imaginary parts. This is the exact
/// scalar field for all algebraic verification; arithmetic never rounds.
class GaussianRational {
public:
  GaussianRational() : re_(0), im_(0) {}
  GaussianRational(long v) : re_(v), im_(0) {}
  GaussianRational(int v) : re_(v), im_(0) {}
  GaussianRational(const mpq_class& re) : re_(re), im_(0) {}
  GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {mpq_class(0), mpq_class(1)}; }
  static GaussianRational frac(long num, long den) {
    mpq_class q(num, den);
    q.canonicalize();
    return {q, mpq_class(0)};
  }

  const mpq_class& real() const { return re_; }
  const mpq_class& imag() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  GaussianRational conj() const { return {re_, mpq_class(-im_)}; }

  /// |z|^2, an exact nonnegative rational.
  mpq_class norm2() const { return re_ * re_ + im_ * im_; }

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  GaussianRational operator-() const { return {mpq_class(-re_), mpq_class(-im_)}; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    mpq_class d = o.norm2();
    if (d == 0) throw std::domain_error("GaussianRational: division by zero");
    mpq_class r = (re_ * o.re_ + im_ * o.im_) / d;
    mpq_class i = (im_ * o.re_ - re_ * o.im_) / d;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  /// Serializes as "a/b", "c/d*i" or "a/b+c/d*i" (denominator 1 omitted).
  std::string str() const;

  /// Parses the formats produced by str(), plus "i", "-i", "2i", "1-2i".
  static GaussianRational parse(const std::string& s);

private:
  mpq_class re_, im_;
};

inline GaussianRational conj(const GaussianRational& z) { return z.conj(); }

std::string format_rational(const mpq_class& q);

inline std::string GaussianRational::str() const {
  if (im_ == 0) return format_rational(re_);
  std::string imag_part;
  if (im_ == 1) imag_part = "i";
  else if (im_ == -1) imag_part = "-i";
  else imag_part = format_rational(im_) + "*i";
  if (re_ == 0) return imag_part;
  if (im_ > 0) return format_rational(re_) + "+" + imag_part;
  return format_rational(re_) + imag_part;  // imag_part already carries '-'
}

inline std::string format_rational(const mpq_class& q) {
  return q.get_str();
}

inline GaussianRational GaussianRational::parse(const std::string& s) {
  // Grammar: [+|-]term [(+|-)term], term = rational ["*"?"i"] | "i".
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw std::invalid_argument("empty scalar");

  mpq_class re(0), im(0);
  size_t pos = 0;
  auto read_term = [&]() {
    int sign = 1;
    if (pos < t.size() && (t[pos] == '+' || t[pos] == '-')) {
      if (t[pos] == '-') sign = -1;
      ++pos;
    }
    size_t start = pos;
    while (pos < t.size() && (std::isdigit(static_cast<unsigned char>(t[pos])) || t[pos] == '/')) ++pos;
    std::string digits = t.substr(start, pos - start);
    bool imaginary = false;
    if (pos < t.size() && (t[pos] == '*' || t[pos] == 'i')) {
      if (t[pos] == '*') ++pos;
      if (pos >= t.size() || t[pos] != 'i') throw std::invalid_argument("bad scalar: " + s);
      ++pos;
      imaginary = true;
    }
    if (digits.empty() && !imaginary) throw std::invalid_argument("bad scalar: " + s);
    mpq_class v = digits.empty() ? mpq_class(1) : mpq_class(digits);
    v.canonicalize();
    if (sign < 0) v = -v;
    if (imaginary) im += v;
    else re += v;
  };
  read_term();
  if (pos < t.size()) read_term();
  if (pos != t.size()) throw std::invalid_argument("bad scalar: " + s);
  return {re, im};
}

}  // namespace classym

namespace Eigen {
template <typename T> struct NumTraits;
template <>
struct NumTraits<classym::GaussianRational> {
  using Self = classym::GaussianRational;
  using Real = Self;
  using NonInteger = Self;
  using Nested = Self;
  using Literal = Self;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 30,
    MulCost = 60
  };
  static Self epsilon() { return Self(0); }
  static Self dummy_precision() { return Self(0); }
  static int digits10() { return 0; }
};
}  // namespace Eigen

#endif
