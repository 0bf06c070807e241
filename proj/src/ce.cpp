#include "liepair/ce.hpp"

#include <stdexcept>

namespace liepair {

namespace {

Mask below(int t) { return (Mask{1} << t) - 1; }

int parity_sign(int n) { return (n & 1) ? -1 : 1; }

std::size_t ipow(std::size_t base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

void add_scaled(GaussScalar* dst, const std::vector<GaussScalar>& src, const GaussScalar& s) {
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (!src[i].is_zero()) dst[i].add_mul(s, src[i]);
  }
}

}  // namespace

Cochain Cochain::zero(int dim_g, int k, int dim_b, int l, int dim_e) {
  Cochain c{dim_g, k, dim_b, l, dim_e, {}};
  c.coeffs.resize(c.exterior_size() * c.block_size());
  return c;
}

std::size_t Cochain::tensor_size() const { return ipow(static_cast<std::size_t>(dim_b), l); }

GaussScalar& Cochain::at(Mask I, std::size_t j, int v) {
  return coeffs[(exterior_index(dim_g).position(I) * tensor_size() + j) * dim_e + v];
}

const GaussScalar& Cochain::at(Mask I, std::size_t j, int v) const {
  return coeffs[(exterior_index(dim_g).position(I) * tensor_size() + j) * dim_e + v];
}

bool Cochain::is_zero() const { return liepair::is_zero(coeffs); }

bool Cochain::same_shape(const Cochain& o) const {
  return dim_g == o.dim_g && k == o.k && dim_b == o.dim_b && l == o.l && dim_e == o.dim_e;
}

Cochain& Cochain::operator+=(const Cochain& o) {
  if (!same_shape(o)) throw std::invalid_argument("cochain shape mismatch");
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (!o.coeffs[i].is_zero()) coeffs[i] += o.coeffs[i];
  }
  return *this;
}

Cochain& Cochain::operator-=(const Cochain& o) {
  if (!same_shape(o)) throw std::invalid_argument("cochain shape mismatch");
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (!o.coeffs[i].is_zero()) coeffs[i] -= o.coeffs[i];
  }
  return *this;
}

Cochain& Cochain::operator*=(const GaussScalar& s) {
  for (auto& x : coeffs) {
    if (!x.is_zero()) x *= s;
  }
  return *this;
}

CEComplex::CEComplex(LieAlgebra g, GModule b, int l, GModule e)
    : g_(std::move(g)), b_(std::move(b)), l_(l), e_(std::move(e)) {
  if (e_.dim_g() != g_.dim()) throw ValidationError("value module does not match the algebra");
  if (l_ > 0 && b_.dim_g() != g_.dim()) throw ValidationError("B module does not match the algebra");
  tensor_size_ = ipow(static_cast<std::size_t>(b_.dim), l_);
  auto entries = [](const GModule& mod) {
    std::vector<std::vector<Entry>> out(mod.action.size());
    for (std::size_t a = 0; a < mod.action.size(); ++a) {
      const Matrix& m = mod.action[a];
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
          if (!m(r, c).is_zero()) out[a].push_back({static_cast<int>(r), static_cast<int>(c), m(r, c)});
    }
    return out;
  };
  if (l_ > 0) b_entries_ = entries(b_);
  e_entries_ = entries(e_);
  bracket_to_.resize(g_.dim());
  for (int p = 0; p < g_.dim(); ++p)
    for (int q = p + 1; q < g_.dim(); ++q)
      for (const auto& t : g_.terms(p, q)) bracket_to_[t.index].push_back({{p, q}, t.coeff});
}

Cochain CEComplex::zero(int k) const { return Cochain::zero(g_.dim(), k, b_.dim, l_, e_.dim); }

std::size_t CEComplex::space_dim(int k) const {
  return exterior_index(g_.dim()).size(k) * tensor_size_ * static_cast<std::size_t>(e_.dim);
}

Cochain CEComplex::basis(int k, std::size_t index) const {
  Cochain c = zero(k);
  c.coeffs.at(index) = 1;
  return c;
}

std::vector<GaussScalar> CEComplex::act(int i, const std::vector<GaussScalar>& block) const {
  const std::size_t de = e_.dim;
  std::vector<GaussScalar> out(block.size());
  TensorIndex tix(b_.dim, l_);
  for (std::size_t j = 0; j < tensor_size_; ++j) {
    for (std::size_t v = 0; v < de; ++v) {
      const GaussScalar& x = block[j * de + v];
      if (x.is_zero()) continue;
      // E part: out(J, row) += ρ_E(row, v) x
      for (const auto& en : e_entries_[i]) {
        if (en.col == static_cast<int>(v)) out[j * de + en.row].add_mul(en.value, x);
      }
      // B* slots: out(J[s←γ], v) −= ρ_B(β, γ) x where β = J_s
      for (int s = 0; s < l_; ++s) {
        const std::size_t stride = tix.stride(s);
        const int beta = static_cast<int>((j / stride) % b_.dim);
        for (const auto& en : b_entries_[i]) {
          if (en.row != beta) continue;
          std::size_t target = j + (static_cast<std::size_t>(en.col) - beta) * stride;
          out[target * de + v].add_mul(-en.value, x);
        }
      }
    }
  }
  return out;
}

Cochain CEComplex::diff(const Cochain& w) const {
  const int m = g_.dim();
  if (w.dim_g != m || w.dim_b != b_.dim || w.l != l_ || w.dim_e != e_.dim) {
    throw std::invalid_argument("cochain does not belong to this complex");
  }
  Cochain out = zero(w.k + 1);
  if (w.k + 1 > m) return out;
  const auto& ext = exterior_index(m);
  const std::size_t bs = w.block_size();
  for (std::size_t pos = 0; pos < ext.size(w.k); ++pos) {
    std::vector<GaussScalar> block(w.coeffs.begin() + pos * bs, w.coeffs.begin() + (pos + 1) * bs);
    if (liepair::is_zero(block)) continue;
    const Mask T = ext.mask(w.k, pos);
    for (int s = 0; s < m; ++s) {
      if (T & (Mask{1} << s)) continue;
      Mask S = T | (Mask{1} << s);
      std::vector<GaussScalar> acted = act(s, block);
      add_scaled(&out.coeffs[ext.position(S) * bs], acted, parity_sign(popcount(S & below(s))));
    }
    for (int t = 0; t < m; ++t) {
      if (!(T & (Mask{1} << t))) continue;
      Mask rest = T & ~(Mask{1} << t);
      int sign_t = parity_sign(popcount(rest & below(t)));
      for (const auto& [pq, c] : bracket_to_[t]) {
        auto [p, q] = pq;
        if (rest & ((Mask{1} << p) | (Mask{1} << q))) continue;
        Mask S = rest | (Mask{1} << p) | (Mask{1} << q);
        int sign = sign_t * parity_sign(popcount(S & below(p)) + popcount(S & below(q)));
        add_scaled(&out.coeffs[ext.position(S) * bs], block, sign > 0 ? c : -c);
      }
    }
  }
  return out;
}

Matrix CEComplex::diff_matrix(int k) const {
  const std::size_t cols = space_dim(k), rows = space_dim(k + 1);
  Matrix d(rows, cols);
  for (std::size_t c = 0; c < cols; ++c) {
    Cochain img = diff(basis(k, c));
    for (std::size_t r = 0; r < rows; ++r) {
      if (!img.coeffs[r].is_zero()) d(r, c) = img.coeffs[r];
    }
  }
  return d;
}

std::optional<Cochain> CEComplex::primitive(const Cochain& w) const {
  if (w.k < 1) throw std::invalid_argument("primitive requires degree at least 1");
  auto x = solve(diff_matrix(w.k - 1), w.coeffs);
  if (!x) return std::nullopt;
  Cochain phi = zero(w.k - 1);
  phi.coeffs = std::move(*x);
  return phi;
}

std::size_t CEComplex::cohomology_dim(int k) const {
  if (k < 0 || k > g_.dim()) return 0;
  std::size_t cycles = space_dim(k) - (k < g_.dim() ? rank(diff_matrix(k)) : 0);
  std::size_t bounds = k > 0 ? rank(diff_matrix(k - 1)) : 0;
  return cycles - bounds;
}

CohomologyResult CEComplex::cohomology(int k) const {
  CohomologyResult res;
  if (k < 0 || k > g_.dim()) return res;
  std::vector<Vector> kernel;
  if (k < g_.dim()) {
    kernel = nullspace_basis(diff_matrix(k));
  } else {
    for (std::size_t i = 0; i < space_dim(k); ++i) kernel.push_back(basis(k, i).coeffs);
  }
  std::vector<Vector> span;
  if (k > 0) {
    Matrix d = diff_matrix(k - 1);
    for (std::size_t c = 0; c < d.cols(); ++c) span.push_back(d.column(c));
  }
  const std::size_t n = space_dim(k);
  std::size_t current = span.empty() ? 0 : rank(Matrix::from_columns(span, n));
  for (auto& z : kernel) {
    span.push_back(z);
    std::size_t r = rank(Matrix::from_columns(span, n));
    if (r > current) {
      current = r;
      Cochain c = zero(k);
      c.coeffs = z;
      res.representatives.push_back(std::move(c));
    } else {
      span.pop_back();
    }
  }
  res.dim = res.representatives.size();
  return res;
}

Cochain ce_diff(const CEComplex& cx, const Cochain& w) { return cx.diff(w); }
bool is_cocycle(const CEComplex& cx, const Cochain& w) { return cx.is_cocycle(w); }
std::optional<Cochain> coboundary_primitive(const CEComplex& cx, const Cochain& w) { return cx.primitive(w); }

std::size_t cohomology_dim(const LieAlgebra& g, const GModule& e, int k) {
  return CEComplex(g, trivial_module(g.dim(), 0), 0, e).cohomology_dim(k);
}

}  // namespace liepair
