#include "liepair/lie.hpp"

#include <string>

#include "liepair/multilinear.hpp"

namespace liepair {

LieAlgebra::LieAlgebra(int dim)
    : dim_(dim), c_(static_cast<std::size_t>(dim) * dim * dim), terms_(static_cast<std::size_t>(dim) * dim) {}

LieAlgebra::LieAlgebra(int dim, std::vector<GaussScalar> constants) : dim_(dim), c_(std::move(constants)) {
  if (c_.size() != static_cast<std::size_t>(dim) * dim * dim) {
    throw ValidationError("structure constant tensor has wrong size");
  }
  terms_.resize(static_cast<std::size_t>(dim) * dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) refresh(i, j);
}

void LieAlgebra::refresh(int i, int j) {
  auto& t = terms_[static_cast<std::size_t>(i) * dim_ + j];
  t.clear();
  for (int k = 0; k < dim_; ++k) {
    if (!c(i, j, k).is_zero()) t.push_back({k, c(i, j, k)});
  }
}

void LieAlgebra::set_bracket(int i, int j, const Vector& v) {
  if (static_cast<int>(v.size()) != dim_) throw ValidationError("bracket vector has wrong length");
  for (int k = 0; k < dim_; ++k) {
    c_[(static_cast<std::size_t>(i) * dim_ + j) * dim_ + k] = v[k];
    c_[(static_cast<std::size_t>(j) * dim_ + i) * dim_ + k] = -v[k];
  }
  refresh(i, j);
  refresh(j, i);
}

void LieAlgebra::set_constant(int i, int j, int k, const GaussScalar& value) {
  c_[(static_cast<std::size_t>(i) * dim_ + j) * dim_ + k] = value;
  refresh(i, j);
}

Vector LieAlgebra::bracket(int i, int j) const {
  Vector out(dim_);
  for (const auto& t : terms(i, j)) out[t.index] = t.coeff;
  return out;
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  Vector out(dim_);
  for (int i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      GaussScalar xy = x[i] * y[j];
      for (const auto& t : terms(i, j)) out[t.index].add_mul(xy, t.coeff);
    }
  }
  return out;
}

namespace {

// [[x_i, x_j], x_k] as a dense vector.
Vector nested(const LieAlgebra& g, int i, int j, int k) {
  Vector out(g.dim());
  for (const auto& t : g.terms(i, j)) {
    for (const auto& u : g.terms(t.index, k)) out[u.index].add_mul(t.coeff, u.coeff);
  }
  return out;
}

}  // namespace

CheckReport validate_lie_algebra(const LieAlgebra& g) {
  CheckReport r{"lie_algebra", 0, {}};
  const int n = g.dim();
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      Vector res(n);
      for (int k = 0; k < n; ++k) res[k] = g.c(i, j, k) + g.c(j, i, k);
      r.record("antisymmetry", {i, j}, std::move(res));
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        Vector res = nested(g, i, j, k);
        Vector b = nested(g, j, k, i);
        Vector c = nested(g, k, i, j);
        for (int t = 0; t < n; ++t) res[t] += b[t] + c[t];
        r.record("jacobi", {i, j, k}, std::move(res));
      }
    }
  }
  return r;
}

LieAlgebra change_basis(const LieAlgebra& g, const Matrix& p) {
  const int n = g.dim();
  auto pinv = inverse(p);
  if (!pinv) throw ValidationError("change of basis matrix is singular");
  LieAlgebra out(n);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      Vector v = g.bracket(p.column(a), p.column(b));
      out.set_bracket(a, b, *pinv * v);
    }
  }
  return out;
}

LiePair::LiePair(LieAlgebra d, int dim_g) : d_(std::move(d)), dim_g_(dim_g) {
  if (dim_g < 0 || dim_g > d_.dim()) throw ValidationError("dim_g out of range");
  g_ = LieAlgebra(dim_g);
  for (int i = 0; i < dim_g; ++i) {
    for (int j = 0; j < dim_g; ++j) {
      for (const auto& t : d_.terms(i, j)) {
        if (t.index >= dim_g) {
          throw SubalgebraNotClosed(i, j,
                                    "subalgebra not closed: [x" + std::to_string(i) + ", x" + std::to_string(j) +
                                        "] has a component along x" + std::to_string(t.index));
        }
        g_.set_constant(i, j, t.index, t.coeff);
      }
    }
  }
}

LiePair make_pair(const LieAlgebra& d, int dim_g) { return LiePair(d, dim_g); }

AdaptedBasis adapt_basis(const LieAlgebra& d, const std::vector<Vector>& span_g) {
  const int n = d.dim();
  const int m = static_cast<int>(span_g.size());
  for (const auto& v : span_g) {
    if (static_cast<int>(v.size()) != n) throw NotASubalgebra("span vector has wrong length");
  }
  std::vector<Vector> cols = span_g;
  if (rank(Matrix::from_columns(cols, n)) != static_cast<std::size_t>(m)) {
    throw NotASubalgebra("span vectors are linearly dependent");
  }
  for (int t = 0; t < n && static_cast<int>(cols.size()) < n; ++t) {
    cols.push_back(Matrix::identity(n).column(t));
    if (rank(Matrix::from_columns(cols, n)) != cols.size()) cols.pop_back();
  }
  Matrix p = Matrix::from_columns(cols, n);
  LieAlgebra adapted = change_basis(d, p);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      for (const auto& t : adapted.terms(i, j)) {
        if (t.index >= m) throw NotASubalgebra("span is not closed under the bracket");
      }
    }
  }
  return {std::move(adapted), std::move(p)};
}

CheckReport check_module(const LieAlgebra& g, const GModule& e) {
  CheckReport r{"module_flatness", 0, {}};
  if (e.dim_g() != g.dim()) throw ValidationError("module has the wrong number of action matrices");
  for (const auto& a : e.action) {
    if (a.rows() != static_cast<std::size_t>(e.dim) || a.cols() != static_cast<std::size_t>(e.dim)) {
      throw ValidationError("action matrix has the wrong shape");
    }
  }
  for (int i = 0; i < g.dim(); ++i) {
    for (int j = i + 1; j < g.dim(); ++j) {
      Matrix res = commutator(e.action[i], e.action[j]);
      for (const auto& t : g.terms(i, j)) res -= e.action[t.index] * t.coeff;
      r.record("flatness", {i, j}, res.data());
    }
  }
  return r;
}

GModule trivial_module(int dim_g, int dim) {
  return {dim, std::vector<Matrix>(dim_g, Matrix::zero(dim, dim))};
}

GModule quotient_module(const LiePair& p) {
  const int m = p.dim_g(), r = p.dim_b();
  GModule out{r, {}};
  for (int i = 0; i < m; ++i) {
    Matrix a(r, r);
    for (int beta = 0; beta < r; ++beta) {
      for (const auto& t : p.d().terms(i, p.j(beta))) {
        if (t.index >= m) a(t.index - m, beta) = t.coeff;
      }
    }
    out.action.push_back(std::move(a));
  }
  return out;
}

GModule dual_module(const GModule& e) {
  GModule out{e.dim, {}};
  for (const auto& a : e.action) out.action.push_back(a.transpose() * GaussScalar(-1));
  return out;
}

GModule tensor_module(const GModule& e, const GModule& f) {
  if (e.dim_g() != f.dim_g()) throw ValidationError("tensor of modules over different algebras");
  GModule out{e.dim * f.dim, {}};
  Matrix ie = Matrix::identity(e.dim), iff = Matrix::identity(f.dim);
  for (int i = 0; i < e.dim_g(); ++i) out.action.push_back(kron(e.action[i], iff) + kron(ie, f.action[i]));
  return out;
}

GModule end_module(const GModule& e) { return tensor_module(e, dual_module(e)); }

GModule exterior_power_module(const GModule& e, int k) {
  const auto& ext = exterior_index(e.dim);
  const auto size = ext.size(k);
  GModule out{static_cast<int>(size), {}};
  for (const auto& a : e.action) {
    Matrix m(size, size);
    for (std::size_t col = 0; col < size; ++col) {
      std::vector<int> idx = mask_to_indices(ext.mask(k, col));
      for (int slot = 0; slot < k; ++slot) {
        int s = idx[slot];
        for (int t = 0; t < e.dim; ++t) {
          if (a(t, s).is_zero()) continue;
          std::vector<int> moved = idx;
          moved[slot] = t;
          auto sorted = sort_indices(moved);
          if (sorted.sign == 0) continue;
          auto& entry = m(ext.position(sorted.mask), col);
          if (sorted.sign > 0) entry += a(t, s);
          else entry -= a(t, s);
        }
      }
    }
    out.action.push_back(std::move(m));
  }
  return out;
}

GModule direct_sum_module(const GModule& e, const GModule& f) {
  if (e.dim_g() != f.dim_g()) throw ValidationError("sum of modules over different algebras");
  GModule out{e.dim + f.dim, {}};
  for (int i = 0; i < e.dim_g(); ++i) out.action.push_back(direct_sum(e.action[i], f.action[i]));
  return out;
}

GModule conjugate_module(const GModule& e, const Matrix& q) {
  auto qinv = inverse(q);
  if (!qinv) throw ValidationError("conjugating matrix is singular");
  GModule out{e.dim, {}};
  for (const auto& a : e.action) out.action.push_back(*qinv * a * q);
  return out;
}

Vector GAlgebra::product(const Vector& x, const Vector& y) const {
  const int n = dim();
  Vector out(n);
  for (int i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      GaussScalar xy = x[i] * y[j];
      for (int k = 0; k < n; ++k) out[k].add_mul(xy, m(i, j, k));
    }
  }
  return out;
}

CheckReport check_g_algebra(const LieAlgebra& g, const GAlgebra& c) {
  CheckReport r = check_module(g, c.module);
  r.name = "g_algebra";
  const int n = c.dim();
  if (c.mult.size() != static_cast<std::size_t>(n) * n * n) throw ValidationError("product tensor has wrong size");
  Matrix id = Matrix::identity(n);
  std::vector<Vector> e;
  for (int i = 0; i < n; ++i) e.push_back(id.column(i));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Vector res(n);
      for (int k = 0; k < n; ++k) res[k] = c.m(i, j, k) - c.m(j, i, k);
      r.record("commutativity", {i, j}, std::move(res));
      for (int k = 0; k < n; ++k) {
        Vector lhs = c.product(c.product(e[i], e[j]), e[k]);
        Vector rhs = c.product(e[i], c.product(e[j], e[k]));
        for (int t = 0; t < n; ++t) lhs[t] -= rhs[t];
        r.record("associativity", {i, j, k}, std::move(lhs));
      }
      for (int a = 0; a < g.dim(); ++a) {
        const Matrix& rho = c.module.action[a];
        Vector res2 = rho * c.product(e[i], e[j]);
        Vector x = c.product(rho * e[i], e[j]);
        Vector y = c.product(e[i], rho * e[j]);
        for (int t = 0; t < n; ++t) res2[t] -= x[t] + y[t];
        r.record("derivation", {a, i, j}, std::move(res2));
      }
    }
  }
  return r;
}

GAlgebra unit_algebra(int dim_g) { return {trivial_module(dim_g, 1), {GaussScalar(1)}}; }

GAlgebra dual_numbers(int dim_g) {
  // 1·1 = 1, 1·ε = ε·1 = ε, ε·ε = 0
  std::vector<GaussScalar> mult(8);
  mult[0] = 1;
  mult[(0 * 2 + 1) * 2 + 1] = 1;
  mult[(1 * 2 + 0) * 2 + 1] = 1;
  return {trivial_module(dim_g, 2), std::move(mult)};
}

namespace {

Vector act(const std::vector<Matrix>& rep, const Vector& x, const Vector& v) {
  Vector out(v.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].is_zero()) axpy(out, x[i], rep[i] * v);
  }
  return out;
}

}  // namespace

CheckReport check_matched_pair(const MatchedPairData& m) {
  const int na = m.a.dim(), nb = m.b.dim();
  CheckReport r{"matched_pair", 0, {}};
  r.merge(validate_lie_algebra(m.a));
  r.merge(validate_lie_algebra(m.b));
  r.merge(check_module(m.a, GModule{nb, m.nabla}));
  r.merge(check_module(m.b, GModule{na, m.delta}));
  Matrix ia = Matrix::identity(na), ib = Matrix::identity(nb);
  for (int x = 0; x < na; ++x) {
    Vector X = ia.column(x);
    for (int p = 0; p < nb; ++p) {
      for (int q = 0; q < nb; ++q) {
        Vector y1 = ib.column(p), y2 = ib.column(q);
        Vector res = m.nabla[x] * m.b.bracket(p, q);
        Vector t1 = m.b.bracket(m.nabla[x] * y1, y2);
        Vector t2 = m.b.bracket(y1, m.nabla[x] * y2);
        Vector t3 = act(m.nabla, m.delta[q] * X, y1);
        Vector t4 = act(m.nabla, m.delta[p] * X, y2);
        for (int t = 0; t < nb; ++t) res[t] += t4[t] - t1[t] - t2[t] - t3[t];
        r.record("nabla_bracket", {x, p, q}, std::move(res));
      }
    }
  }
  for (int y = 0; y < nb; ++y) {
    Vector Y = ib.column(y);
    for (int p = 0; p < na; ++p) {
      for (int q = 0; q < na; ++q) {
        Vector x1 = ia.column(p), x2 = ia.column(q);
        Vector res = m.delta[y] * m.a.bracket(p, q);
        Vector t1 = m.a.bracket(m.delta[y] * x1, x2);
        Vector t2 = m.a.bracket(x1, m.delta[y] * x2);
        Vector t3 = act(m.delta, m.nabla[q] * Y, x1);
        Vector t4 = act(m.delta, m.nabla[p] * Y, x2);
        for (int t = 0; t < na; ++t) res[t] += t4[t] - t1[t] - t2[t] - t3[t];
        r.record("delta_bracket", {y, p, q}, std::move(res));
      }
    }
  }
  return r;
}

LieAlgebra matched_bracket(const MatchedPairData& m) {
  const int na = m.a.dim(), nb = m.b.dim(), n = na + nb;
  LieAlgebra d(n);
  for (int i = 0; i < na; ++i) {
    for (int j = i + 1; j < na; ++j) {
      Vector v(n);
      for (const auto& t : m.a.terms(i, j)) v[t.index] = t.coeff;
      d.set_bracket(i, j, v);
    }
  }
  for (int p = 0; p < nb; ++p) {
    for (int q = p + 1; q < nb; ++q) {
      Vector v(n);
      for (const auto& t : m.b.terms(p, q)) v[na + t.index] = t.coeff;
      d.set_bracket(na + p, na + q, v);
    }
  }
  // [X ⊕ 0, 0 ⊕ Y] = −Δ_Y X ⊕ ∇_X Y
  for (int i = 0; i < na; ++i) {
    for (int p = 0; p < nb; ++p) {
      Vector v(n);
      for (int t = 0; t < na; ++t) v[t] = -m.delta[p](t, i);
      for (int t = 0; t < nb; ++t) v[na + t] = m.nabla[i](t, p);
      d.set_bracket(i, na + p, v);
    }
  }
  return d;
}

LiePair matched_sum(const MatchedPairData& m) {
  CheckReport r = check_matched_pair(m);
  if (!r.ok()) {
    const auto& v = r.violations.front();
    throw MatchedPairAxiomsFail("matched pair axioms fail: " + v.identity);
  }
  return LiePair(matched_bracket(m), m.a.dim());
}

MatchedPairData decompose(const LiePair& p) {
  const int m = p.dim_g(), r = p.dim_b();
  MatchedPairData out{p.g(), LieAlgebra(r), {}, {}};
  for (int a = 0; a < r; ++a) {
    for (int b = 0; b < r; ++b) {
      for (const auto& t : p.d().terms(p.j(a), p.j(b))) {
        if (t.index < m) throw NotASubalgebra("complement is not a subalgebra");
        out.b.set_constant(a, b, t.index - m, t.coeff);
      }
    }
  }
  out.nabla = quotient_module(p).action;
  for (int beta = 0; beta < r; ++beta) {
    Matrix delta(m, m);
    for (int i = 0; i < m; ++i) {
      for (const auto& t : p.d().terms(i, p.j(beta))) {
        if (t.index < m) delta(t.index, i) = -t.coeff;
      }
    }
    out.delta.push_back(std::move(delta));
  }
  return out;
}

}  // namespace liepair
