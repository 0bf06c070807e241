#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace liepair {

/// Exact element a + b·i of the Gaussian rationals Q(i).
///
/// Both parts are GMP rationals kept canonical (lowest terms, positive
/// denominator), so equality is structural and no rounding ever happens.
class GaussScalar {
 public:
  GaussScalar() = default;
  GaussScalar(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  GaussScalar(int v) : re_(v) {}   // NOLINT(google-explicit-constructor)
  GaussScalar(mpq_class re, mpq_class im = 0);

  static GaussScalar rational(long num, long den);
  static GaussScalar i() { return {mpq_class(0), mpq_class(1)}; }

  /// Accepts "a", "a/b", "a/b+c/d*i", "c/d*i", "-i", "3+i" (whitespace ignored).
  static GaussScalar parse(std::string_view text);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  GaussScalar conj() const { return {re_, -im_}; }
  GaussScalar inverse() const;

  GaussScalar& operator+=(const GaussScalar& o);
  GaussScalar& operator-=(const GaussScalar& o);
  GaussScalar& operator*=(const GaussScalar& o);
  GaussScalar& operator/=(const GaussScalar& o);

  /// this += a * b without materialising the product.
  void add_mul(const GaussScalar& a, const GaussScalar& b);

  friend GaussScalar operator+(GaussScalar a, const GaussScalar& b) { return a += b; }
  friend GaussScalar operator-(GaussScalar a, const GaussScalar& b) { return a -= b; }
  friend GaussScalar operator*(GaussScalar a, const GaussScalar& b) { return a *= b; }
  friend GaussScalar operator/(GaussScalar a, const GaussScalar& b) { return a /= b; }
  GaussScalar operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussScalar& a, const GaussScalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Canonical serialisation: "a/b" for reals, "a/b+c/d*i" otherwise.
  std::string to_string() const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussScalar& s);

class ScalarParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact binomial coefficient; 0 when k > n.
std::uint64_t binomial(unsigned n, unsigned k);

}  // namespace liepair
