#include "liepair/homotopy.hpp"

#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>

namespace liepair {

namespace {

int parity_sign(int n) { return (n & 1) ? -1 : 1; }

std::size_t ipow(std::size_t base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

struct SparseEntry {
  int row;
  int col;
  GaussScalar value;
};

std::vector<SparseEntry> sparse(const Matrix& a) {
  std::vector<SparseEntry> out;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (!a(r, c).is_zero()) out.push_back({static_cast<int>(r), static_cast<int>(c), a(r, c)});
    }
  }
  return out;
}

std::vector<int> digits_of(std::size_t code, int base, int arity) {
  std::vector<int> d(arity);
  for (int p = arity - 1; p >= 0; --p) {
    d[p] = static_cast<int>(code % base);
    code /= base;
  }
  return d;
}

std::size_t code_of(const std::vector<int>& d, int base) {
  std::size_t code = 0;
  for (int x : d) code = code * base + x;
  return code;
}

void require(bool cond, const char* what) {
  if (!cond) throw std::invalid_argument(what);
}

}  // namespace

Cochain SplittingTensors::beta_cochain() const {
  const int r = dim_b;
  Cochain out = Cochain::zero(dim_g, 0, r, 2, r);
  for (int p = 0; p < r * r; ++p) {
    for (int g = 0; g < r; ++g) out.coeffs[p * r + g] = beta[p][g];
  }
  return out;
}

Cochain SplittingTensors::omega_cochain() const {
  const int r = dim_b;
  Cochain out = Cochain::zero(dim_g, 0, r, 2, r * r);
  for (int p = 0; p < r * r; ++p) {
    for (int v = 0; v < r * r; ++v) out.coeffs[p * r * r + v] = omega[p].data()[v];
  }
  return out;
}

SplittingTensors splitting_tensors(const Connection& conn_b) {
  const LiePair& pair = conn_b.pair;
  const LieAlgebra& d = pair.d();
  const int m = pair.dim_g(), r = pair.dim_b();
  require(conn_b.module.dim == r, "splitting_tensors: connection must live on B");
  SplittingTensors t;
  t.dim_g = m;
  t.dim_b = r;
  for (int b = 0; b < r; ++b) {
    Matrix delta(m, m);
    for (int i = 0; i < m; ++i) {
      for (int i2 = 0; i2 < m; ++i2) delta(i2, i) = d.c(pair.j(b), i, i2);
    }
    t.delta.push_back(std::move(delta));
  }
  for (int b1 = 0; b1 < r; ++b1) {
    for (int b2 = 0; b2 < r; ++b2) {
      Vector alpha(m), beta(r);
      for (int i = 0; i < m; ++i) alpha[i] = d.c(pair.j(b1), pair.j(b2), i);
      const Matrix& n1 = conn_b.nabla[pair.j(b1)];
      const Matrix& n2 = conn_b.nabla[pair.j(b2)];
      for (int g = 0; g < r; ++g) beta[g] = n1(g, b2) - n2(g, b1) - d.c(pair.j(b1), pair.j(b2), pair.j(g));
      t.alpha_map.push_back(std::move(alpha));
      t.beta.push_back(std::move(beta));
      t.omega.push_back(curvature(conn_b, pair.j(b1), pair.j(b2)));
    }
  }
  return t;
}

Connection end_connection(const Connection& conn) {
  const std::size_t d = conn.module.dim;
  Connection out{conn.pair, end_module(conn.module), {}};
  Matrix id = Matrix::identity(d);
  for (const auto& n : conn.nabla) out.nabla.push_back(kron(n, id) - kron(id, n.transpose()));
  return out;
}

Cochain partial_nabla(const Connection& conn_b, const Connection& conn_e, const Cochain& w) {
  const LiePair& pair = conn_b.pair;
  const int m = pair.dim_g(), r = pair.dim_b();
  require(w.dim_g == m && w.dim_b == r, "partial_nabla: cochain does not match the pair");
  require(w.dim_e == conn_e.module.dim, "partial_nabla: value connection has the wrong dimension");
  const auto& ext = exterior_index(m);
  const int k = w.k, l = w.l, de = w.dim_e;
  const SplittingTensors split = splitting_tensors(conn_b);

  // delta_by_source[b][i'] lists (i, Δ_b(i', i)): the a_i whose image has an a_{i'} component.
  std::vector<std::vector<std::vector<std::pair<int, GaussScalar>>>> delta_from(r, std::vector<std::vector<std::pair<int, GaussScalar>>>(m));
  for (int b = 0; b < r; ++b) {
    for (const auto& e : sparse(split.delta[b])) delta_from[b][e.row].push_back({e.col, e.value});
  }
  std::vector<std::vector<SparseEntry>> nb(r), ne(r);
  for (int b = 0; b < r; ++b) {
    nb[b] = sparse(conn_b.nabla[pair.j(b)]);
    ne[b] = sparse(conn_e.nabla[pair.j(b)]);
  }

  Cochain out = Cochain::zero(m, k, r, l + 1, de);
  const std::size_t tin = w.tensor_size(), tout = out.tensor_size();
  const GaussScalar sk = parity_sign(k);
  auto slot = [&](Mask I, std::size_t J, int v) -> GaussScalar& {
    return out.coeffs[(ext.position(I) * tout + J) * de + v];
  };

  for (std::size_t pos = 0; pos < w.exterior_size(); ++pos) {
    const Mask I = ext.mask(k, pos);
    const std::vector<int> idx = mask_to_indices(I);
    for (std::size_t J = 0; J < tin; ++J) {
      const std::vector<int> jd = digits_of(J, r, l);
      for (int v = 0; v < de; ++v) {
        const GaussScalar& x = w.coeffs[(pos * tin + J) * de + v];
        if (x.is_zero()) continue;
        for (int b0 = 0; b0 < r; ++b0) {
          const std::size_t J0 = static_cast<std::size_t>(b0) * tin + J;
          // ∇_{j b₀} on the value.
          for (const auto& e : ne[b0]) {
            if (e.col == v) slot(I, J0, e.row).add_mul(sk * e.value, x);
          }
          // −ω(…Δ_{b₀}a…): the input index idx[p] = i′ came from some a_i.
          for (std::size_t p = 0; p < idx.size(); ++p) {
            for (const auto& [i, coeff] : delta_from[b0][idx[p]]) {
              std::vector<int> seq = idx;
              seq[p] = i;
              SortedIndex s = sort_indices(seq);
              if (s.sign == 0) continue;
              slot(s.mask, J0, v).add_mul(-sk * coeff * s.sign, x);
            }
          }
          // −ω(…∇_{j b₀}b_t…)
          for (int t = 0; t < l; ++t) {
            for (const auto& e : nb[b0]) {
              if (e.row != jd[t]) continue;
              std::vector<int> jd2 = jd;
              jd2[t] = e.col;
              std::size_t J2 = static_cast<std::size_t>(b0) * tin + code_of(jd2, r);
              slot(I, J2, v).add_mul(-sk * e.value, x);
            }
          }
        }
      }
    }
  }
  return out;
}

namespace {

Cochain r2_from_connection(const Connection& conn_b) {
  const int r = conn_b.pair.dim_b();
  Cochain alpha = atiyah_cocycle(conn_b);
  return end_to_tensor(alpha, r);
}

}  // namespace

BracketTower build_tower(const Connection& conn_b, int depth) {
  require(depth >= 2, "build_tower: depth must be at least 2");
  require(conn_b.module == quotient_module(conn_b.pair), "build_tower: connection must extend the quotient action");
  BracketTower t;
  t.depth = depth;
  t.conn_b = conn_b;
  t.split = splitting_tensors(conn_b);
  t.r.resize(depth + 1);
  t.r[2] = r2_from_connection(conn_b);
  for (int n = 2; n < depth; ++n) t.r[n + 1] = partial_nabla(conn_b, conn_b, t.r[n]);
  return t;
}

BracketTower build_tower(const Connection& conn_b, const Connection& conn_e, int depth) {
  BracketTower t = build_tower(conn_b, depth);
  t.conn_e = conn_e;
  Connection end_e = end_connection(conn_e);
  t.s.resize(depth + 1);
  t.s[2] = atiyah_cocycle(conn_e);
  for (int n = 2; n < depth; ++n) t.s[n + 1] = partial_nabla(conn_b, end_e, t.s[n]);
  return t;
}

Cochain tensor_to_end(const Cochain& w) {
  require(w.l >= 1, "tensor_to_end: no tensor slot to move");
  const int r = w.dim_b, de = w.dim_e;
  Cochain out = Cochain::zero(w.dim_g, w.k, r, w.l - 1, de * r);
  const std::size_t tout = out.tensor_size();
  for (std::size_t pos = 0; pos < w.exterior_size(); ++pos) {
    for (std::size_t J = 0; J < tout; ++J) {
      for (int x = 0; x < r; ++x) {
        for (int v = 0; v < de; ++v) {
          out.coeffs[(pos * tout + J) * de * r + v * r + x] = w.coeffs[((pos * tout + J) * r + x) * de + v];
        }
      }
    }
  }
  return out;
}

Cochain end_to_tensor(const Cochain& w, int dim_value) {
  const int r = w.dim_b;
  require(w.dim_e == dim_value * r, "end_to_tensor: value is not Hom(B, F)");
  Cochain out = Cochain::zero(w.dim_g, w.k, r, w.l + 1, dim_value);
  const std::size_t tin = w.tensor_size();
  for (std::size_t pos = 0; pos < w.exterior_size(); ++pos) {
    for (std::size_t J = 0; J < tin; ++J) {
      for (int x = 0; x < r; ++x) {
        for (int v = 0; v < dim_value; ++v) {
          out.coeffs[((pos * tin + J) * r + x) * dim_value + v] = w.coeffs[(pos * tin + J) * w.dim_e + v * r + x];
        }
      }
    }
  }
  return out;
}

Cochain permute_slots(const Cochain& w, const std::vector<int>& pi) {
  require(static_cast<int>(pi.size()) == w.l, "permute_slots: permutation has the wrong length");
  const int r = w.dim_b, de = w.dim_e;
  Cochain out = Cochain::zero(w.dim_g, w.k, r, w.l, de);
  const std::size_t ts = w.tensor_size();
  std::vector<int> d(w.l);
  for (std::size_t J = 0; J < ts; ++J) {
    const std::vector<int> e = digits_of(J, r, w.l);
    for (int p = 0; p < w.l; ++p) d[pi[p]] = e[p];
    const std::size_t Jout = code_of(d, r);
    for (std::size_t pos = 0; pos < w.exterior_size(); ++pos) {
      for (int v = 0; v < de; ++v) out.coeffs[(pos * ts + Jout) * de + v] = w.coeffs[(pos * ts + J) * de + v];
    }
  }
  return out;
}

Cochain creep(const Cochain& mu, int pos, const Cochain& nu) {
  require(mu.dim_g == nu.dim_g && mu.dim_b == nu.dim_b, "creep: shape mismatch");
  require(nu.dim_e == nu.dim_b, "creep: inner map must be B-valued");
  require(pos >= 0 && pos < mu.l, "creep: slot out of range");
  const int m = mu.dim_g, r = mu.dim_b;
  const auto& ext = exterior_index(m);
  Cochain out = Cochain::zero(m, mu.k + nu.k, r, mu.l + nu.l - 1, mu.dim_e);
  if (mu.k + nu.k > m) return out;

  struct NuEntry {
    Mask I;
    std::size_t J;
    GaussScalar value;
  };
  std::vector<std::vector<NuEntry>> by_value(r);
  const std::size_t tnu = nu.tensor_size();
  for (std::size_t p = 0; p < nu.exterior_size(); ++p) {
    for (std::size_t J = 0; J < tnu; ++J) {
      for (int g = 0; g < r; ++g) {
        const GaussScalar& y = nu.coeffs[(p * tnu + J) * r + g];
        if (!y.is_zero()) by_value[g].push_back({ext.mask(nu.k, p), J, y});
      }
    }
  }

  const std::size_t tmu = mu.tensor_size(), tout = out.tensor_size();
  const int post_len = mu.l - pos - 1;
  const std::size_t post_size = ipow(r, post_len);
  const std::size_t pre_div = ipow(r, mu.l - pos);
  for (std::size_t p = 0; p < mu.exterior_size(); ++p) {
    const Mask I1 = ext.mask(mu.k, p);
    for (std::size_t J = 0; J < tmu; ++J) {
      const std::size_t pre = J / pre_div;
      const int g = static_cast<int>((J / post_size) % r);
      const std::size_t post = J % post_size;
      if (by_value[g].empty()) continue;
      for (int v = 0; v < mu.dim_e; ++v) {
        const GaussScalar& x = mu.coeffs[(p * tmu + J) * mu.dim_e + v];
        if (x.is_zero()) continue;
        for (const auto& e : by_value[g]) {
          int s = merge_sign(I1, e.I);
          if (s == 0) continue;
          const std::size_t Jout = (pre * tnu + e.J) * post_size + post;
          GaussScalar& dst = out.coeffs[(ext.position(I1 | e.I) * tout + Jout) * out.dim_e + v];
          dst.add_mul(s > 0 ? x : -x, e.value);
        }
      }
    }
  }
  return out;
}

bool GradedElement::is_zero() const {
  for (const auto& [deg, c] : parts) {
    if (!c.is_zero()) return false;
  }
  return true;
}

GradedElement& GradedElement::operator+=(const GradedElement& o) {
  for (const auto& [deg, c] : o.parts) {
    auto it = parts.find(deg);
    if (it == parts.end()) parts.emplace(deg, c);
    else it->second += c;
  }
  return *this;
}

bool operator==(const GradedElement& a, const GradedElement& b) {
  auto covered = [](const GradedElement& x, const GradedElement& y) {
    for (const auto& [deg, c] : x.parts) {
      auto it = y.parts.find(deg);
      if (it == y.parts.end()) {
        if (!c.is_zero()) return false;
      } else if (!(it->second == c)) {
        return false;
      }
    }
    return true;
  };
  return covered(a, b) && covered(b, a);
}

namespace {

// sign · ξ₁∧…∧ξ_k∧T(f₁,…,f_{k−1}; ·)·f_k ⊗ c₁⋯c_k. T carries k−1 B-slots and an
// End-form value y·dim_x + x, where x contracts with the fibre of the last
// argument. Arguments have fibre index f·dim_c + c.
Cochain contract(const std::vector<const Cochain*>& args, const Cochain& T, int dim_x, int dim_y,
                 const GAlgebra* alg, int sign, int dim_b) {
  const int m = T.dim_g;
  const int dc = alg ? alg->dim() : 1;
  const auto& ext = exterior_index(m);
  const int n = static_cast<int>(args.size());
  int total = T.k;
  for (const auto* a : args) total += a->k;
  Cochain out = Cochain::zero(m, total, dim_b, 0, dim_y * dc);
  if (total > m) return out;

  struct Partial {
    Mask mask;
    GaussScalar coeff;
    std::vector<int> fibres;
    Vector cvec;
  };
  std::vector<Partial> partials{{0, GaussScalar(sign), {}, Vector(dc)}};
  partials[0].cvec[0] = 1;
  bool first = true;
  for (int s = 0; s < n; ++s) {
    const Cochain& a = *args[s];
    std::vector<Partial> next;
    for (std::size_t p = 0; p < a.exterior_size(); ++p) {
      const Mask I = ext.mask(a.k, p);
      for (int f = 0; f < a.dim_e; ++f) {
        const GaussScalar& x = a.coeffs[p * a.dim_e + f];
        if (x.is_zero()) continue;
        const int fib = f / dc, c = f % dc;
        for (const auto& part : partials) {
          int ms = merge_sign(part.mask, I);
          if (ms == 0) continue;
          Partial np{part.mask | I, part.coeff * x, part.fibres, Vector(dc)};
          if (ms < 0) np.coeff = -np.coeff;
          np.fibres.push_back(fib);
          if (first) {
            np.cvec[c] = 1;
          } else if (!alg) {
            np.cvec = part.cvec;
          } else {
            for (int c0 = 0; c0 < dc; ++c0) {
              if (part.cvec[c0].is_zero()) continue;
              for (int c1 = 0; c1 < dc; ++c1) np.cvec[c1].add_mul(part.cvec[c0], alg->m(c0, c, c1));
            }
          }
          next.push_back(std::move(np));
        }
      }
    }
    partials = std::move(next);
    first = false;
    if (partials.empty()) return out;
  }

  const std::size_t ts = T.tensor_size();
  const int tv = dim_y * dim_x;
  for (const auto& part : partials) {
    std::vector<int> slots(part.fibres.begin(), part.fibres.end() - 1);
    const int x = part.fibres.back();
    const std::size_t J = code_of(slots, T.dim_b);
    for (std::size_t pt = 0; pt < T.exterior_size(); ++pt) {
      const Mask IT = ext.mask(T.k, pt);
      int ms = merge_sign(part.mask, IT);
      if (ms == 0) continue;
      const std::size_t opos = ext.position(part.mask | IT);
      for (int y = 0; y < dim_y; ++y) {
        const GaussScalar& t = T.coeffs[(pt * ts + J) * tv + y * dim_x + x];
        if (t.is_zero()) continue;
        GaussScalar w = part.coeff * t;
        if (ms < 0) w = -w;
        for (int c = 0; c < dc; ++c) {
          if (!part.cvec[c].is_zero()) out.coeffs[opos * out.dim_e + y * dc + c].add_mul(w, part.cvec[c]);
        }
      }
    }
  }
  return out;
}

GModule fibre_module(const GModule& f, const GAlgebra& c) { return tensor_module(f, c.module); }

}  // namespace

LeibnizStructure::LeibnizStructure(BracketTower tower, GAlgebra algebra)
    : tower_(std::move(tower)),
      algebra_(std::move(algebra)),
      v_complex_(tower_.pair().g(), tower_.conn_b.module, 0, fibre_module(tower_.conn_b.module, algebra_)) {
  if (tower_.conn_e) {
    w_complex_.emplace(tower_.pair().g(), tower_.conn_b.module, 0, fibre_module(tower_.conn_e->module, algebra_));
  }
  r_end_.resize(tower_.depth + 1);
  for (int k = 2; k <= tower_.depth; ++k) r_end_[k] = tensor_to_end(tower_.r[k]);
}

int LeibnizStructure::w_fibre() const {
  if (!tower_.conn_e) return 0;
  return tower_.conn_e->module.dim * algebra_.dim();
}

const CEComplex& LeibnizStructure::w_complex() const {
  if (!w_complex_) throw std::logic_error("no module attached to the tower");
  return *w_complex_;
}

Cochain LeibnizStructure::lambda(const std::vector<const Cochain*>& args) const {
  const int k = static_cast<int>(args.size());
  if (k < 1) throw std::invalid_argument("lambda: no arguments");
  if (k == 1) return v_complex_.diff(*args[0]);
  if (k > tower_.depth) throw ArityBeyondTower("lambda_" + std::to_string(k) + " needs R_" + std::to_string(k));
  int degree = 0;
  for (const auto* a : args) degree += a->k;
  const int r = tower_.pair().dim_b();
  return contract(args, r_end_[k], r, r, &algebra_, parity_sign(degree), r);
}

Cochain LeibnizStructure::mu(const std::vector<const Cochain*>& args) const {
  const int k = static_cast<int>(args.size());
  if (k < 1) throw std::invalid_argument("mu: no arguments");
  if (k == 1) return w_complex().diff(*args[0]);
  if (k > tower_.depth) throw ArityBeyondTower("mu_" + std::to_string(k) + " needs S_" + std::to_string(k));
  if (!tower_.conn_e) throw std::logic_error("no module attached to the tower");
  int degree = 0;
  for (const auto* a : args) degree += a->k;
  const int d = tower_.conn_e->module.dim;
  return contract(args, tower_.s[k], d, d, &algebra_, parity_sign(degree), tower_.pair().dim_b());
}

Cochain LeibnizStructure::v_basis(Mask I, int b, int c) const {
  Cochain out = v_zero(popcount(I));
  out.at(I, 0, b * dim_c() + c) = 1;
  return out;
}

Cochain LeibnizStructure::w_basis(Mask I, int e, int c) const {
  Cochain out = w_zero(popcount(I));
  out.at(I, 0, e * dim_c() + c) = 1;
  return out;
}

LeibnizStructure leibniz_structure(const BracketTower& tower) {
  return LeibnizStructure(tower, unit_algebra(tower.pair().dim_g()));
}

LeibnizStructure extend_with_algebra(const BracketTower& tower, const GAlgebra& c) {
  CheckReport rep = check_g_algebra(tower.pair().g(), c);
  for (const auto& v : rep.violations) {
    if (v.identity == "commutativity") throw NotCommutativeAlgebra("coefficient algebra is not commutative");
  }
  if (!rep.ok()) throw ValidationError("coefficient algebra fails " + rep.violations.front().identity);
  return LeibnizStructure(tower, c);
}

namespace {

template <class F>
GradedElement multilinear(const std::vector<GradedElement>& args, F&& apply) {
  GradedElement out;
  std::vector<const Cochain*> pick(args.size());
  std::function<void(std::size_t)> rec = [&](std::size_t s) {
    if (s == args.size()) {
      Cochain c = apply(pick);
      if (c.coeffs.empty()) return;
      out += GradedElement(std::move(c));
      return;
    }
    for (const auto& [deg, part] : args[s].parts) {
      pick[s] = &part;
      rec(s + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace

GradedElement lambda_k(const LeibnizStructure& ls, const std::vector<GradedElement>& args) {
  return multilinear(args, [&](const std::vector<const Cochain*>& a) { return ls.lambda(a); });
}

GradedElement mu_k(const LeibnizStructure& ls, const std::vector<GradedElement>& args) {
  return multilinear(args, [&](const std::vector<const Cochain*>& a) { return ls.mu(a); });
}

unsigned sweep_threads() {
  if (const char* env = std::getenv("LIEPAIR_THREADS")) {
    try {
      long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    return 1;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

namespace {

// Runs fn over [0, count) in contiguous chunks; merging in chunk order keeps
// the report identical to a sequential run.
template <class F>
CheckReport parallel_sweep(const std::string& name, std::size_t count, F&& fn) {
  unsigned threads = std::min<std::size_t>(sweep_threads(), std::max<std::size_t>(count / 64, 1));
  std::vector<CheckReport> parts(threads, CheckReport{name, 0, {}});
  std::vector<std::exception_ptr> errors(threads);
  auto work = [&](unsigned t) {
    try {
      std::size_t lo = count * t / threads, hi = count * (t + 1) / threads;
      for (std::size_t i = lo; i < hi; ++i) fn(i, parts[t]);
    } catch (...) {
      errors[t] = std::current_exception();
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  CheckReport out{name, 0, {}};
  for (const auto& p : parts) out.merge(p);
  return out;
}

struct BasisElement {
  Cochain value;
  int degree;
  Mask mask;
  int fibre;
};

std::vector<BasisElement> basis_elements(const CEComplex& cx, int degree_cap) {
  std::vector<BasisElement> out;
  const int m = cx.dim_g();
  const auto& ext = exterior_index(m);
  const int fibre = cx.e().dim;
  for (int k = 0; k <= std::min(degree_cap, m); ++k) {
    for (Mask I : ext.masks(k)) {
      for (int f = 0; f < fibre; ++f) {
        Cochain c = cx.zero(k);
        c.at(I, 0, f) = 1;
        out.push_back({std::move(c), k, I, f});
      }
    }
  }
  return out;
}

// Tuples of indices into `elems` with Σ degree ≤ budget.
void enumerate_tuples(const std::vector<int>& degrees, int arity, int budget, std::vector<int>& cur,
                      std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == arity) {
    out.push_back(cur);
    return;
  }
  for (int i = 0; i < static_cast<int>(degrees.size()); ++i) {
    if (degrees[i] > budget) continue;
    cur.push_back(i);
    enumerate_tuples(degrees, arity, budget - degrees[i], cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> tuples_for(const std::vector<const std::vector<BasisElement>*>& slots, int budget) {
  // Mixed slot types: enumerate over the product with the degree budget.
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t s, int left) {
    if (s == slots.size()) {
      out.push_back(cur);
      return;
    }
    const auto& el = *slots[s];
    for (int i = 0; i < static_cast<int>(el.size()); ++i) {
      if (el[i].degree > left) continue;
      cur.push_back(i);
      rec(s + 1, left - el[i].degree);
      cur.pop_back();
    }
  };
  rec(0, budget);
  return out;
}

std::vector<int> witness_indices(const std::vector<const BasisElement*>& els) {
  std::vector<int> idx;
  for (const auto* e : els) {
    idx.push_back(static_cast<int>(e->mask));
    idx.push_back(e->fibre);
  }
  return idx;
}

struct ShuffleTable {
  // table[a][b] = enumerate_shuffles(a, b)
  std::vector<std::vector<std::vector<Permutation>>> table;
  explicit ShuffleTable(int n) : table(n + 1, std::vector<std::vector<Permutation>>(n + 1)) {
    for (int a = 0; a <= n; ++a) {
      for (int b = 0; a + b <= n; ++b) table[a][b] = enumerate_shuffles(a, b);
    }
  }
  const std::vector<Permutation>& operator()(int a, int b) const { return table[a][b]; }
};

int prefix_sign(const Permutation& sigma, const std::vector<int>& degrees, int len) {
  int s = 0;
  for (int p = 0; p < len; ++p) s += degrees[sigma[p]];
  return parity_sign(s);
}

// Σ over (j, k, σ) of the Leibniz∞ left-hand side for the first `count` letters
// of v followed by the tail; `outer` applies the arity-(n−j+1) operation.
void add_leibniz_terms(Cochain& residual, const std::vector<const Cochain*>& v, int kmax,
                       const std::vector<int>& degrees, const ShuffleTable& sh,
                       const std::function<Cochain(const std::vector<const Cochain*>&)>& inner_op,
                       const std::function<Cochain(const std::vector<const Cochain*>&)>& outer_op) {
  const int total = static_cast<int>(v.size());
  for (int k = 1; k <= kmax; ++k) {
    for (int j = 1; j <= k; ++j) {
      for (const auto& sigma : sh(k - j, j - 1)) {
        const int sign = koszul_sign(sigma, std::vector<int>(degrees.begin(), degrees.begin() + (k - 1))) *
                         prefix_sign(sigma, degrees, k - j);
        std::vector<const Cochain*> inner_args;
        for (int p = k - j; p < k - 1; ++p) inner_args.push_back(v[sigma[p]]);
        inner_args.push_back(v[k - 1]);
        Cochain inner = inner_op(inner_args);
        std::vector<const Cochain*> outer_args;
        for (int p = 0; p < k - j; ++p) outer_args.push_back(v[sigma[p]]);
        outer_args.push_back(&inner);
        for (int p = k; p < total; ++p) outer_args.push_back(v[p]);
        Cochain term = outer_op(outer_args);
        if (sign > 0) residual += term;
        else residual -= term;
      }
    }
  }
}

}  // namespace

CheckReport verify_leibniz(const LeibnizStructure& ls, int max_n, int degree_cap) {
  if (max_n > ls.tower().depth) {
    throw ArityBeyondTower("verify_leibniz: max_n " + std::to_string(max_n) + " exceeds tower depth " +
                           std::to_string(ls.tower().depth));
  }
  const int m = ls.dim_g();
  const std::vector<BasisElement> elems = basis_elements(ls.v_complex(), degree_cap);
  std::vector<int> degrees;
  for (const auto& e : elems) degrees.push_back(e.degree);
  const ShuffleTable sh(std::max(max_n, 1));
  auto lam = [&](const std::vector<const Cochain*>& a) { return ls.lambda(a); };

  CheckReport out{"leibniz", 0, {}};
  for (int n = 1; n <= max_n; ++n) {
    if (m - 2 < 0) break;
    std::vector<std::vector<int>> tuples;
    std::vector<int> cur;
    enumerate_tuples(degrees, n, m - 2, cur, tuples);
    const std::string id = "leibniz_n" + std::to_string(n);
    out.merge(parallel_sweep(out.name, tuples.size(), [&](std::size_t t, CheckReport& rep) {
      std::vector<const Cochain*> v;
      std::vector<const BasisElement*> els;
      std::vector<int> degs;
      int total = 0;
      for (int i : tuples[t]) {
        v.push_back(&elems[i].value);
        els.push_back(&elems[i]);
        degs.push_back(elems[i].degree);
        total += elems[i].degree;
      }
      Cochain residual = ls.v_zero(total + 2);
      add_leibniz_terms(residual, v, n, degs, sh, lam, lam);
      rep.record(id, witness_indices(els), residual.coeffs);
    }));
  }
  return out;
}

CheckReport verify_module(const LeibnizStructure& ls, int max_n, int degree_cap) {
  if (!ls.tower().has_module()) throw std::logic_error("verify_module: no module attached to the tower");
  if (max_n > ls.tower().depth) {
    throw ArityBeyondTower("verify_module: max_n " + std::to_string(max_n) + " exceeds tower depth " +
                           std::to_string(ls.tower().depth));
  }
  const int m = ls.dim_g();
  const std::vector<BasisElement> velems = basis_elements(ls.v_complex(), degree_cap);
  const std::vector<BasisElement> welems = basis_elements(ls.w_complex(), degree_cap);
  const ShuffleTable sh(std::max(max_n, 1));
  auto lam = [&](const std::vector<const Cochain*>& a) { return ls.lambda(a); };
  auto mu = [&](const std::vector<const Cochain*>& a) { return ls.mu(a); };

  CheckReport out{"module", 0, {}};
  for (int n = 1; n <= max_n; ++n) {
    if (m - 2 < 0) break;
    std::vector<const std::vector<BasisElement>*> slots(n - 1, &velems);
    slots.push_back(&welems);
    const std::vector<std::vector<int>> tuples = tuples_for(slots, m - 2);
    const std::string id = "module_n" + std::to_string(n);
    out.merge(parallel_sweep(out.name, tuples.size(), [&](std::size_t t, CheckReport& rep) {
      std::vector<const Cochain*> v;
      std::vector<const BasisElement*> els;
      std::vector<int> degs;
      int total = 0;
      for (int s = 0; s < n; ++s) {
        const BasisElement& e = (s + 1 < n) ? velems[tuples[t][s]] : welems[tuples[t][s]];
        v.push_back(&e.value);
        els.push_back(&e);
        degs.push_back(e.degree);
        total += e.degree;
      }
      Cochain residual = ls.w_zero(total + 2);
      // Inner λ_j on the V letters, outer μ with w kept last.
      add_leibniz_terms(residual, v, n - 1, degs, sh, lam, mu);
      // Inner μ_j consuming w.
      for (int j = 1; j <= n; ++j) {
        for (const auto& sigma : sh(n - j, j - 1)) {
          const int sign = koszul_sign(sigma, std::vector<int>(degs.begin(), degs.begin() + (n - 1))) *
                           prefix_sign(sigma, degs, n - j);
          std::vector<const Cochain*> inner_args;
          for (int p = n - j; p < n - 1; ++p) inner_args.push_back(v[sigma[p]]);
          inner_args.push_back(v[n - 1]);
          Cochain inner = ls.mu(inner_args);
          std::vector<const Cochain*> outer_args;
          for (int p = 0; p < n - j; ++p) outer_args.push_back(v[sigma[p]]);
          outer_args.push_back(&inner);
          Cochain term = ls.mu(outer_args);
          if (sign > 0) residual += term;
          else residual -= term;
        }
      }
      rep.record(id, witness_indices(els), residual.coeffs);
    }));
  }
  return out;
}

Cochain binary_bracket(const BracketTower& t, const Cochain& v1, const Cochain& v2) {
  const int r = t.pair().dim_b();
  return contract({&v1, &v2}, tensor_to_end(t.r[2]), r, r, nullptr, parity_sign(v2.k), r);
}

Cochain theta_witness(const BracketTower& t, const Cochain& v1, const Cochain& v2) {
  const int r = t.pair().dim_b();
  return contract({&v1, &v2}, tensor_to_end(t.split.beta_cochain()), r, r, nullptr, parity_sign(v1.k), r);
}

Cochain xi_witness(const BracketTower& t, const Cochain& v0, const Cochain& v1, const Cochain& v2) {
  if (t.depth < 3) throw ArityBeyondTower("xi_witness needs R_3");
  const int r = t.pair().dim_b();
  return contract({&v0, &v1, &v2}, tensor_to_end(t.r[3]), r, r, nullptr, parity_sign(v0.k + v2.k), r);
}

namespace {

// Records one check per (exterior index, tensor index) block of a difference.
void record_blocks(CheckReport& rep, const std::string& id, const Cochain& diff, std::vector<int> prefix = {}) {
  const auto& ext = exterior_index(diff.dim_g);
  const std::size_t ts = diff.tensor_size();
  for (std::size_t p = 0; p < diff.exterior_size(); ++p) {
    for (std::size_t J = 0; J < ts; ++J) {
      std::vector<GaussScalar> block(diff.coeffs.begin() + (p * ts + J) * diff.dim_e,
                                     diff.coeffs.begin() + (p * ts + J + 1) * diff.dim_e);
      std::vector<int> idx = prefix;
      idx.push_back(static_cast<int>(ext.mask(diff.k, p)));
      for (int d : digits_of(J, diff.dim_b, diff.l)) idx.push_back(d);
      rep.record(id, std::move(idx), std::move(block));
    }
  }
}

}  // namespace

CheckReport check_proof_identities(const BracketTower& t, int degree_cap) {
  const LiePair& pair = t.pair();
  const int m = pair.dim_g(), r = pair.dim_b();
  const GModule& b = t.conn_b.module;
  auto cx = [&](int l) { return CEComplex(pair.g(), b, l, b); };
  CheckReport rep{"proof_identities", 0, {}};

  // The tower itself: R₂ from the Atiyah cocycle and R_{n+1} = ∂^∇R_n.
  record_blocks(rep, "r2_definition", t.r[2] - r2_from_connection(t.conn_b));
  for (int n = 2; n < t.depth; ++n) {
    record_blocks(rep, "tower_recursion", t.r[n + 1] - partial_nabla(t.conn_b, t.conn_b, t.r[n]), {n});
  }
  if (t.conn_e) {
    record_blocks(rep, "s2_definition", t.s[2] - atiyah_cocycle(*t.conn_e));
    Connection end_e = end_connection(*t.conn_e);
    for (int n = 2; n < t.depth; ++n) {
      record_blocks(rep, "module_tower_recursion", t.s[n + 1] - partial_nabla(t.conn_b, end_e, t.s[n]), {n});
    }
  }

  // R₂(b₁,b₂) − R₂(b₂,b₁) = (∂^Aβ)(b₁,b₂)
  {
    Cochain lhs = t.r[2] - permute_slots(t.r[2], {1, 0});
    Cochain rhs = cx(2).diff(t.split.beta_cochain());
    record_blocks(rep, "r2_antisymmetrization", lhs - rhs);
  }

  // λ is a chain map, Θ and Ξ are homotopies (on V[−1], |ξ⊗b| = k + 1).
  const CEComplex v0(pair.g(), b, 0, b);
  const std::vector<BasisElement> elems = basis_elements(v0, std::min(degree_cap, m));
  auto d = [&](const Cochain& x) { return v0.diff(x); };
  for (const auto& e1 : elems) {
    for (const auto& e2 : elems) {
      const Cochain &x1 = e1.value, &x2 = e2.value;
      const int s1 = e1.degree + 1, s2 = e2.degree + 1;
      const std::vector<int> idx = witness_indices({&e1, &e2});
      if (e1.degree + e2.degree + 2 <= m) {
        Cochain res = d(binary_bracket(t, x1, x2)) - binary_bracket(t, d(x1), x2);
        Cochain tail = binary_bracket(t, x1, d(x2));
        if (parity_sign(s1) > 0) res -= tail;
        else res += tail;
        rep.record("lambda_chain_map", idx, res.coeffs);
      }
      if (e1.degree + e2.degree + 1 <= m) {
        Cochain lhs = binary_bracket(t, x1, x2);
        Cochain swapped = binary_bracket(t, x2, x1);
        if (parity_sign(s1 * s2) > 0) lhs += swapped;
        else lhs -= swapped;
        Cochain rhs = d(theta_witness(t, x1, x2)) + theta_witness(t, d(x1), x2);
        Cochain tail = theta_witness(t, x1, d(x2));
        if (parity_sign(s1) > 0) rhs += tail;
        else rhs -= tail;
        rep.record("theta_homotopy", idx, (lhs - rhs).coeffs);
      }
    }
  }

  if (t.depth < 3) return rep;

  // R₃(b₀,b₁,b₂) − R₃(b₁,b₀,b₂) = R₂(β(b₀,b₁),b₂) − (∂^AΩ)(b₀,b₁)·b₂
  {
    Cochain lhs = t.r[3] - permute_slots(t.r[3], {1, 0, 2});
    Cochain nested = creep(t.r[2], 0, t.split.beta_cochain());
    CEComplex end_cx(pair.g(), b, 2, end_module(b));
    Cochain domega = end_to_tensor(end_cx.diff(t.split.omega_cochain()), r);
    record_blocks(rep, "r3_symmetry_defect", lhs - (nested - domega));
  }

  // −∂^AR₃ = ⌊R₂(b₀,R₂(b₁,b₂))⌋ + ⌊R₂(R₂(b₀,b₁),b₂)⌋ + ⌊R₂(b₁,R₂(b₀,b₂))⌋
  {
    Cochain lhs = cx(3).diff(t.r[3]);
    lhs *= GaussScalar(-1);
    Cochain right = creep(t.r[2], 1, t.r[2]);
    Cochain rhs = right + creep(t.r[2], 0, t.r[2]) + permute_slots(right, {1, 0, 2});
    record_blocks(rep, "nested_r2", lhs - rhs);
  }

  // −(∂^A∂^∇ + ∂^∇∂^A)R_n = ⌊R₂(b₀,R_n(b₁,…))⌋ + Σ_j ⌊R_n(…,R₂(b₀,b_j),…)⌋
  for (int n = 2; n < t.depth; ++n) {
    Cochain lhs = cx(n + 1).diff(t.r[n + 1]) + partial_nabla(t.conn_b, t.conn_b, cx(n).diff(t.r[n]));
    lhs *= GaussScalar(-1);
    Cochain rhs = creep(t.r[2], 1, t.r[n]);
    for (int j = 1; j <= n; ++j) {
      std::vector<int> pi;
      for (int p = 1; p < j; ++p) pi.push_back(p);
      pi.push_back(0);
      for (int p = j; p <= n; ++p) pi.push_back(p);
      rhs += permute_slots(creep(t.r[n], j - 1, t.r[2]), pi);
    }
    record_blocks(rep, "anticommutator", lhs - rhs, {n});
  }

  // −∂^AR_n = Σ ⌊R_i(b_σ(1),…,R_j(b_σ(k−j+1),…,b_k),…,b_n)⌋
  for (int n = 3; n <= t.depth; ++n) {
    Cochain lhs = cx(n).diff(t.r[n]);
    lhs *= GaussScalar(-1);
    Cochain rhs = Cochain::zero(m, 2, r, n, r);
    for (int j = 2; j <= n - 1; ++j) {
      const int i = n + 1 - j;
      for (int k = j; k <= n; ++k) {
        Cochain c = creep(t.r[i], k - j, t.r[j]);
        for (const auto& sigma : enumerate_shuffles(k - j, j - 1)) {
          std::vector<int> pi(sigma.begin(), sigma.end());
          for (int p = k - 1; p < n; ++p) pi.push_back(p);
          rhs += permute_slots(c, pi);
        }
      }
    }
    record_blocks(rep, "shuffle_identity", lhs - rhs, {n});
  }

  // −λ∘(id⊗λ) + λ∘(λ⊗id) + λ∘(id⊗λ)∘(τ⊗id) = ∂Ξ + Ξ∂
  for (const auto& e0 : elems) {
    for (const auto& e1 : elems) {
      for (const auto& e2 : elems) {
        if (e0.degree + e1.degree + e2.degree + 2 > m) continue;
        const Cochain &x0 = e0.value, &x1 = e1.value, &x2 = e2.value;
        const int s0 = e0.degree + 1, s1 = e1.degree + 1;
        Cochain lhs = binary_bracket(t, binary_bracket(t, x0, x1), x2) - binary_bracket(t, x0, binary_bracket(t, x1, x2));
        Cochain swapped = binary_bracket(t, x1, binary_bracket(t, x0, x2));
        if (parity_sign(s0 * s1) > 0) lhs += swapped;
        else lhs -= swapped;
        Cochain rhs = d(xi_witness(t, x0, x1, x2)) + xi_witness(t, d(x0), x1, x2);
        Cochain mid = xi_witness(t, x0, d(x1), x2);
        if (parity_sign(s0) > 0) rhs += mid;
        else rhs -= mid;
        Cochain last = xi_witness(t, x0, x1, d(x2));
        if (parity_sign(s0 + s1) > 0) rhs += last;
        else rhs -= last;
        rep.record("xi_homotopy", witness_indices({&e0, &e1, &e2}), (lhs - rhs).coeffs);
      }
    }
  }
  return rep;
}

SymmetryReport symmetry_report(const BracketTower& t) {
  SymmetryReport out;
  const int r = t.pair().dim_b();
  const auto& ext = exterior_index(t.pair().dim_g());
  for (int n = 2; n <= t.depth; ++n) {
    const Cochain& rn = t.r[n];
    SymmetryVerdict v{n, true, std::nullopt};
    const std::size_t ts = rn.tensor_size();
    for (std::size_t p = 0; p < rn.exterior_size() && v.fully_symmetric; ++p) {
      for (std::size_t J = 0; J < ts && v.fully_symmetric; ++J) {
        const std::vector<int> dg = digits_of(J, r, n);
        for (int s = 0; s + 1 < n; ++s) {
          std::vector<int> sw = dg;
          std::swap(sw[s], sw[s + 1]);
          const std::size_t J2 = code_of(sw, r);
          std::vector<GaussScalar> diff(r);
          bool zero = true;
          for (int x = 0; x < r; ++x) {
            diff[x] = rn.coeffs[(p * ts + J) * r + x] - rn.coeffs[(p * ts + J2) * r + x];
            if (!diff[x].is_zero()) zero = false;
          }
          if (!zero) {
            std::vector<int> idx{static_cast<int>(ext.mask(1, p)), s};
            idx.insert(idx.end(), dg.begin(), dg.end());
            v.fully_symmetric = false;
            v.witness = Violation{"R" + std::to_string(n) + "_swap", std::move(idx), std::move(diff)};
            break;
          }
        }
      }
    }
    if (!v.fully_symmetric) out.l_infinity = false;
    out.verdicts.push_back(std::move(v));
  }
  return out;
}

CheckReport check_cohomology_bracket(const LeibnizStructure& ls) {
  const CEComplex& cx = ls.v_complex();
  const int m = ls.dim_g();
  CheckReport rep{"cohomology_bracket", 0, {}};
  if (ls.tower().depth < 2) return rep;

  auto as_cochain = [&](int k, const Vector& coords) {
    Cochain c = cx.zero(k);
    c.coeffs = coords;
    return c;
  };
  std::vector<std::vector<Cochain>> cocycles(m + 1), coboundaries(m + 1);
  for (int k = 0; k <= m; ++k) {
    for (const auto& v : nullspace_basis(cx.diff_matrix(k))) cocycles[k].push_back(as_cochain(k, v));
    if (k == 0) continue;
    for (std::size_t i = 0; i < cx.space_dim(k - 1); ++i) {
      Cochain db = cx.diff(cx.basis(k - 1, i));
      if (!db.is_zero()) coboundaries[k].push_back(std::move(db));
    }
  }
  auto lam = [&](const Cochain& a, const Cochain& b) { return ls.lambda({&a, &b}); };
  for (int k1 = 0; k1 <= m; ++k1) {
    for (int k2 = 0; k1 + k2 + 1 <= m; ++k2) {
      for (std::size_t a = 0; a < cocycles[k1].size(); ++a) {
        for (std::size_t b = 0; b < cocycles[k2].size(); ++b) {
          Cochain br = lam(cocycles[k1][a], cocycles[k2][b]);
          rep.record("cocycle_bracket", {k1, k2, static_cast<int>(a), static_cast<int>(b)}, cx.diff(br).coeffs);
        }
        for (std::size_t b = 0; b < coboundaries[k2].size(); ++b) {
          Cochain br = lam(cocycles[k1][a], coboundaries[k2][b]);
          ++rep.checked;
          if (!cx.primitive(br)) rep.add("cocycle_coboundary", {k1, k2, static_cast<int>(a), static_cast<int>(b)}, br.coeffs);
        }
      }
      for (std::size_t a = 0; a < coboundaries[k1].size(); ++a) {
        for (std::size_t b = 0; b < cocycles[k2].size(); ++b) {
          Cochain br = lam(coboundaries[k1][a], cocycles[k2][b]);
          ++rep.checked;
          if (!cx.primitive(br)) rep.add("coboundary_cocycle", {k1, k2, static_cast<int>(a), static_cast<int>(b)}, br.coeffs);
        }
      }
    }
  }
  return rep;
}

}  // namespace liepair
