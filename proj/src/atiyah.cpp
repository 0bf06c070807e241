#include "liepair/atiyah.hpp"

#include <algorithm>

namespace liepair {

Matrix Connection::along(const Vector& x) const {
  const std::size_t d = module.dim;
  Matrix out(d, d);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].is_zero()) out += nabla[i] * x[i];
  }
  return out;
}

Connection extend_by_zero(const LiePair& pair, const GModule& module) {
  if (module.dim_g() != pair.dim_g()) throw ValidationError("module does not match the subalgebra");
  Connection c{pair, module, module.action};
  for (int beta = 0; beta < pair.dim_b(); ++beta) c.nabla.push_back(Matrix::zero(module.dim, module.dim));
  return c;
}

CheckReport check_extension(const Connection& c) {
  CheckReport r{"extension", 0, {}};
  if (static_cast<int>(c.nabla.size()) != c.pair.dim_d()) throw ValidationError("connection has wrong slot count");
  for (int i = 0; i < c.pair.dim_g(); ++i) {
    Matrix res = c.nabla[i] - c.module.action[i];
    r.record("extends_action", {i}, res.data());
  }
  return r;
}

Matrix curvature(const Connection& c, int i, int j) {
  Matrix out = commutator(c.nabla[i], c.nabla[j]);
  for (const auto& t : c.pair.d().terms(i, j)) out -= c.nabla[t.index] * t.coeff;
  return out;
}

CEComplex atiyah_complex(const LiePair& pair, const GModule& module) {
  return CEComplex(pair.g(), quotient_module(pair), 1, end_module(module));
}

Cochain atiyah_cocycle(const Connection& c) {
  const int m = c.pair.dim_g(), r = c.pair.dim_b(), d = c.module.dim;
  Cochain alpha = Cochain::zero(m, 1, r, 1, d * d);
  for (int i = 0; i < m; ++i) {
    for (int beta = 0; beta < r; ++beta) {
      Matrix R = curvature(c, i, c.pair.j(beta));
      for (int v = 0; v < d * d; ++v) alpha.at(Mask{1} << i, beta, v) = R.data()[v];
    }
  }
  if (!atiyah_complex(c.pair, c.module).is_cocycle(alpha)) {
    throw NotACocycle("Atiyah cocycle is not closed; the connection does not extend a flat action");
  }
  return alpha;
}

CheckReport check_compatible(const Connection& c) {
  CheckReport r{"compatibility", 0, {}};
  for (int i = 0; i < c.pair.dim_g(); ++i) {
    for (int j = 0; j < c.pair.dim_d(); ++j) r.record("compatible", {i, j}, curvature(c, i, j).data());
  }
  return r;
}

Connection shift_connection(const Connection& c, const Cochain& phi) {
  const int m = c.pair.dim_g(), d = c.module.dim;
  Connection out = c;
  for (int beta = 0; beta < c.pair.dim_b(); ++beta) {
    Matrix p(d, d);
    for (int v = 0; v < d * d; ++v) p.data()[v] = phi.coeffs[beta * d * d + v];
    out.nabla[m + beta] -= p;
  }
  return out;
}

AtiyahClass atiyah_class(const Connection& c) {
  AtiyahClass res;
  res.representative = atiyah_cocycle(c);
  res.primitive = atiyah_complex(c.pair, c.module).primitive(res.representative);
  res.vanishes = res.primitive.has_value();
  if (res.vanishes) res.repaired = shift_connection(c, *res.primitive);
  return res;
}

AtiyahClass atiyah_class(const LiePair& pair, const GModule& module) {
  return atiyah_class(extend_by_zero(pair, module));
}

Connection direct_sum_connection(const Connection& c1, const Connection& c2) {
  Connection out{c1.pair, direct_sum_module(c1.module, c2.module), {}};
  for (std::size_t i = 0; i < c1.nabla.size(); ++i) out.nabla.push_back(direct_sum(c1.nabla[i], c2.nabla[i]));
  return out;
}

FormAlgebraElement FormAlgebraElement::one(int dim_g, int dim_b, int dim_e) {
  FormAlgebraElement x(dim_g, dim_b, dim_e);
  x.add_term(0, 0, Matrix::identity(dim_e));
  return x;
}

FormAlgebraElement FormAlgebraElement::from_atiyah(const Cochain& alpha, int dim_e) {
  FormAlgebraElement x(alpha.dim_g, alpha.dim_b, dim_e);
  for (int i = 0; i < alpha.dim_g; ++i) {
    for (int beta = 0; beta < alpha.dim_b; ++beta) {
      Matrix m(dim_e, dim_e);
      for (int v = 0; v < dim_e * dim_e; ++v) m.data()[v] = alpha.at(Mask{1} << i, beta, v);
      x.add_term(Mask{1} << i, Mask{1} << beta, m);
    }
  }
  return x;
}

void FormAlgebraElement::add_term(Mask x, Mask y, const Matrix& m) {
  if (m.is_zero()) return;
  auto it = terms_.find({x, y});
  if (it == terms_.end()) {
    terms_.emplace(std::make_pair(x, y), m);
    return;
  }
  it->second += m;
  if (it->second.is_zero()) terms_.erase(it);
}

FormAlgebraElement& FormAlgebraElement::operator+=(const FormAlgebraElement& o) {
  for (const auto& [key, m] : o.terms_) add_term(key.first, key.second, m);
  return *this;
}

FormAlgebraElement FormAlgebraElement::operator*(const FormAlgebraElement& o) const {
  FormAlgebraElement out(dim_g_, dim_b_, dim_e_);
  for (const auto& [k1, m1] : terms_) {
    for (const auto& [k2, m2] : o.terms_) {
      int s = merge_sign(k1.first, k2.first) * merge_sign(k1.second, k2.second);
      if (s == 0) continue;
      if ((popcount(k1.second) * popcount(k2.first)) & 1) s = -s;
      Matrix p = m1 * m2;
      if (s < 0) p *= GaussScalar(-1);
      out.add_term(k1.first | k2.first, k1.second | k2.second, p);
    }
  }
  return out;
}

FormAlgebraElement FormAlgebraElement::scaled(const GaussScalar& s) const {
  FormAlgebraElement out(dim_g_, dim_b_, dim_e_);
  if (s.is_zero()) return out;
  for (const auto& [k, m] : terms_) out.terms_.emplace(k, m * s);
  return out;
}

FormAlgebraElement FormAlgebraElement::trace() const {
  FormAlgebraElement out(dim_g_, dim_b_, 1);
  for (const auto& [k, m] : terms_) out.add_term(k.first, k.second, Matrix(1, 1, {liepair::trace(m)}));
  return out;
}

FormAlgebraElement FormAlgebraElement::entry(int r, int c) const {
  FormAlgebraElement out(dim_g_, dim_b_, 1);
  for (const auto& [k, m] : terms_) out.add_term(k.first, k.second, Matrix(1, 1, {m(r, c)}));
  return out;
}

Cochain FormAlgebraElement::component(int j) const {
  if (dim_e_ != 1) throw std::invalid_argument("component needs a scalar-valued element");
  const auto& ext_b = exterior_index(dim_b_);
  Cochain out = Cochain::zero(dim_g_, j, dim_b_, 0, static_cast<int>(ext_b.size(j)));
  for (const auto& [k, m] : terms_) {
    if (popcount(k.first) != j || popcount(k.second) != j) continue;
    out.at(k.first, 0, static_cast<int>(ext_b.position(k.second))) = m(0, 0);
  }
  return out;
}

FormAlgebraElement power_series(const FormAlgebraElement& x, const std::vector<GaussScalar>& coeffs) {
  FormAlgebraElement out(x.dim_g(), x.dim_b(), x.dim_e());
  FormAlgebraElement power = FormAlgebraElement::one(x.dim_g(), x.dim_b(), x.dim_e());
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    if (n > 0) power = power * x;
    if (power.is_zero()) break;
    if (!coeffs[n].is_zero()) out += power.scaled(coeffs[n]);
  }
  return out;
}

namespace {

constexpr int kMaxSeriesOrder = 8;

const std::vector<GaussScalar>& log1p_series() {
  static const std::vector<GaussScalar> c = [] {
    std::vector<GaussScalar> v{GaussScalar(0)};
    for (int n = 1; n <= kMaxSeriesOrder; ++n) v.push_back(GaussScalar::rational(n % 2 ? 1 : -1, n));
    return v;
  }();
  return c;
}

const std::vector<GaussScalar>& exp_series() {
  static const std::vector<GaussScalar> c = [] {
    std::vector<GaussScalar> v{GaussScalar(1)};
    long fact = 1;
    for (int n = 1; n <= kMaxSeriesOrder; ++n) {
      fact *= n;
      v.push_back(GaussScalar::rational(1, fact));
    }
    return v;
  }();
  return c;
}

void check_order(const LiePair& pair) {
  if (std::min(pair.dim_g(), pair.dim_b()) > kMaxSeriesOrder) {
    throw ValidationError("characteristic classes are limited to min(dim g, dim B) <= 8");
  }
}

}  // namespace

const std::vector<GaussScalar>& todd_series() {
  static const std::vector<GaussScalar> c{
      GaussScalar(1),
      GaussScalar::rational(1, 2),
      GaussScalar::rational(1, 12),
      GaussScalar(0),
      GaussScalar::rational(-1, 720),
      GaussScalar(0),
      GaussScalar::rational(1, 30240),
      GaussScalar(0),
      GaussScalar::rational(-1, 1209600),
  };
  return c;
}

CEComplex scalar_complex(const LiePair& pair, int j) {
  GModule b = quotient_module(pair);
  return CEComplex(pair.g(), b, 0, exterior_power_module(dual_module(b), j));
}

ScalarClass scalar_class(const Connection& c, int k) {
  if (k < 1) throw std::invalid_argument("scalar class degree must be at least 1");
  check_order(c.pair);
  const int m = c.pair.dim_g(), r = c.pair.dim_b();
  ScalarClass res;
  res.k = k;
  long fact = 1;
  for (int n = 2; n <= k; ++n) fact *= n;
  res.prefactor = "1/" + std::to_string(fact) + "*(i/(2*pi))^" + std::to_string(k);
  if (k > std::min(m, r)) {
    res.trace_part = Cochain::zero(m, std::min(k, m), r, 0, static_cast<int>(exterior_index(r).size(k)));
    return res;
  }
  auto alpha = FormAlgebraElement::from_atiyah(atiyah_cocycle(c), c.module.dim);
  FormAlgebraElement power = alpha;
  for (int n = 1; n < k; ++n) power = power * alpha;
  res.trace_part = power.trace().component(k);
  if (!scalar_complex(c.pair, k).is_cocycle(res.trace_part)) throw NotACocycle("tr(alpha^k) is not closed");
  return res;
}

ScalarClass scalar_class(const LiePair& pair, const GModule& module, int k) {
  return scalar_class(extend_by_zero(pair, module), k);
}

ToddClass todd_class(const Connection& c) {
  check_order(c.pair);
  const int m = c.pair.dim_g(), r = c.pair.dim_b(), d = c.module.dim;
  auto alpha = FormAlgebraElement::from_atiyah(atiyah_cocycle(c), d);
  FormAlgebraElement f = power_series(alpha, todd_series());
  FormAlgebraElement u = f;
  u += FormAlgebraElement::one(m, r, d).scaled(GaussScalar(-1));
  FormAlgebraElement log_trace = power_series(u, log1p_series()).trace();
  ToddClass res{{}, power_series(log_trace, exp_series())};
  for (int j = 0; j <= std::min(m, r); ++j) {
    res.components.push_back(res.element.component(j));
    if (j > 0 && !scalar_complex(c.pair, j).is_cocycle(res.components.back())) {
      throw NotACocycle("Todd class component is not closed");
    }
  }
  return res;
}

ToddClass todd_class(const LiePair& pair, const GModule& module) {
  return todd_class(extend_by_zero(pair, module));
}

}  // namespace liepair
