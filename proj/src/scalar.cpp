#include "liepair/scalar.hpp"

#include <cctype>
#include <ostream>

namespace liepair {

GaussScalar::GaussScalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussScalar GaussScalar::rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return {q, 0};
}

GaussScalar GaussScalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (is_real()) return {1 / re_, 0};
  mpq_class norm = re_ * re_ + im_ * im_;
  return {re_ / norm, -im_ / norm};
}

GaussScalar& GaussScalar::operator+=(const GaussScalar& o) {
  re_ += o.re_;
  if (sgn(o.im_) != 0) im_ += o.im_;
  return *this;
}

GaussScalar& GaussScalar::operator-=(const GaussScalar& o) {
  re_ -= o.re_;
  if (sgn(o.im_) != 0) im_ -= o.im_;
  return *this;
}

GaussScalar& GaussScalar::operator*=(const GaussScalar& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

GaussScalar& GaussScalar::operator/=(const GaussScalar& o) {
  if (o.is_real()) {
    if (sgn(o.re_) == 0) throw std::domain_error("division by zero");
    re_ /= o.re_;
    if (sgn(im_) != 0) im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

void GaussScalar::add_mul(const GaussScalar& a, const GaussScalar& b) {
  if (a.is_zero() || b.is_zero()) return;
  if (a.is_real() && b.is_real()) {
    mpq_class t = a.re_ * b.re_;
    re_ += t;
    return;
  }
  *this += a * b;
}

namespace {

mpq_class parse_rational(std::string_view s, std::string_view whole) {
  if (s.empty()) throw ScalarParseError("empty rational in scalar '" + std::string(whole) + "'");
  for (char c : s) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-' || c == '+')) {
      throw ScalarParseError("invalid character in scalar '" + std::string(whole) + "'");
    }
  }
  std::string buf(s);
  if (buf.front() == '+') buf.erase(0, 1);
  mpq_class q;
  if (q.set_str(buf, 10) != 0) throw ScalarParseError("invalid rational '" + buf + "'");
  if (sgn(q.get_den()) == 0) throw ScalarParseError("zero denominator in '" + buf + "'");
  q.canonicalize();
  return q;
}

// Coefficient of an imaginary term written as "", "+", "-", "q", "q*".
mpq_class parse_imag_coeff(std::string_view s, std::string_view whole) {
  if (!s.empty() && s.back() == '*') s.remove_suffix(1);
  if (s.empty() || s == "+") return 1;
  if (s == "-") return -1;
  return parse_rational(s, whole);
}

}  // namespace

GaussScalar GaussScalar::parse(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  if (compact.empty()) throw ScalarParseError("empty scalar");
  std::string_view s(compact);
  if (s.back() != 'i') return {parse_rational(s, text), 0};

  s.remove_suffix(1);
  // Split at the last sign that is not the leading one.
  std::size_t split = std::string_view::npos;
  for (std::size_t p = s.size(); p-- > 1;) {
    if (s[p] == '+' || s[p] == '-') {
      split = p;
      break;
    }
  }
  if (split == std::string_view::npos) return {0, parse_imag_coeff(s, text)};
  return {parse_rational(s.substr(0, split), text), parse_imag_coeff(s.substr(split), text)};
}

std::string GaussScalar::to_string() const {
  if (is_real()) return re_.get_str();
  std::string out;
  if (sgn(re_) != 0) out = re_.get_str();
  mpq_class abs_im = abs(im_);
  if (sgn(im_) < 0) {
    out += "-";
  } else if (!out.empty()) {
    out += "+";
  }
  out += abs_im.get_str();
  out += "*i";
  return out;
}

std::ostream& operator<<(std::ostream& os, const GaussScalar& s) { return os << s.to_string(); }

std::uint64_t binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (unsigned j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

}  // namespace liepair
