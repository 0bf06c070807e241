#include "liepair/zoo.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace liepair {

namespace {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  // Uniform integer in [lo, hi].
  long between(long lo, long hi) { return lo + static_cast<long>(gen_() % static_cast<std::uint64_t>(hi - lo + 1)); }
  Matrix matrix(int rows, int cols, long lo, long hi) {
    Matrix m(rows, cols);
    for (auto& x : m.data()) x = between(lo, hi);
    return m;
  }
  Matrix invertible(int n) {
    while (true) {
      Matrix m = matrix(n, n, -2, 2);
      if (rank(m) == static_cast<std::size_t>(n)) return m;
    }
  }

 private:
  std::mt19937_64 gen_;
};

Matrix permutation_matrix(const std::vector<int>& order) {
  const int n = static_cast<int>(order.size());
  Matrix p(n, n);
  for (int i = 0; i < n; ++i) p(order[i], i) = 1;
  return p;
}

// Real coordinates of a complex n×n matrix: real parts then imaginary parts.
Vector realify(const Matrix& x) {
  Vector v;
  for (const auto& e : x.data()) v.push_back(GaussScalar(e.re()));
  for (const auto& e : x.data()) v.push_back(GaussScalar(e.im()));
  return v;
}

Matrix elementary(int n, int k, int l, const GaussScalar& s) {
  Matrix m(n, n);
  m(k, l) = s;
  return m;
}

}  // namespace

LiePair sl2_pair() {
  // basis (h, e, f): [e,f] = h, [h,e] = 2e, [h,f] = -2f
  LieAlgebra d(3);
  d.set_bracket(1, 2, {1, 0, 0});
  d.set_bracket(0, 1, {0, 2, 0});
  d.set_bracket(0, 2, {0, 0, -2});
  return LiePair(d, 2);
}

std::map<std::string, GModule> standard_modules(const LiePair& pair) {
  GModule b = quotient_module(pair);
  return {{"B", b}, {"B*", dual_module(b)}};
}

Fixture sl2_fixture() {
  Fixture f{"sl2", sl2_pair(), {}, {}, {}};
  f.modules = standard_modules(f.pair);
  const GModule& b = f.modules.at("B");
  const GModule& bd = f.modules.at("B*");
  f.modules.emplace("Hom(BxB,B)", tensor_module(tensor_module(bd, bd), b));
  return f;
}

GlUnTn gl_un_tn(int n) {
  if (n < 1 || n > 3) throw std::invalid_argument("gl_un_tn supports n in {1, 2, 3}");
  const GaussScalar I = GaussScalar::i();
  std::vector<Matrix> basis;
  for (int k = 0; k < n; ++k) basis.push_back(elementary(n, k, k, I));
  for (int k = 0; k < n; ++k)
    for (int l = k + 1; l < n; ++l) basis.push_back(elementary(n, k, l, 1) - elementary(n, l, k, 1));
  for (int k = 0; k < n; ++k)
    for (int l = k + 1; l < n; ++l) basis.push_back(elementary(n, k, l, I) + elementary(n, l, k, I));
  const int m = static_cast<int>(basis.size());
  for (int k = 0; k < n; ++k) basis.push_back(elementary(n, k, k, 1));
  for (int k = 0; k < n; ++k)
    for (int l = k + 1; l < n; ++l) basis.push_back(elementary(n, k, l, 1));
  for (int k = 0; k < n; ++k)
    for (int l = k + 1; l < n; ++l) basis.push_back(elementary(n, k, l, I));
  const int dim = static_cast<int>(basis.size());

  std::vector<Vector> cols;
  for (const auto& x : basis) cols.push_back(realify(x));
  Matrix to_basis = *inverse(Matrix::from_columns(cols, dim));
  auto coords = [&](const Matrix& x) { return to_basis * realify(x); };

  LieAlgebra d(dim);
  for (int a = 0; a < dim; ++a)
    for (int b = a + 1; b < dim; ++b) d.set_bracket(a, b, coords(commutator(basis[a], basis[b])));
  LiePair pair(d, m);
  MatchedPairData data = decompose(pair);

  Connection conn = extend_by_zero(pair, quotient_module(pair));
  const int r = dim - m;
  for (int beta = 0; beta < r; ++beta) {
    Matrix nab(r, r);
    for (int gamma = 0; gamma < r; ++gamma) {
      Vector c = coords(basis[m + beta] * basis[m + gamma]);
      for (int t = 0; t < r; ++t) nab(t, gamma) = c[m + t];
    }
    conn.nabla[m + beta] = nab;
  }
  return {std::move(data), std::move(pair), std::move(conn), std::move(basis)};
}

Connection gl_un_tn_torsion_connection(const GlUnTn& g) {
  const int dim = g.pair.dim_d(), m = g.pair.dim_g(), r = g.pair.dim_b();
  std::vector<Vector> cols;
  for (const auto& x : g.basis) cols.push_back(realify(x));
  Matrix to_basis = *inverse(Matrix::from_columns(cols, dim));
  Connection conn = g.connection;
  for (int beta = 0; beta < r; ++beta) {
    Matrix nab(r, r);
    for (int gamma = 0; gamma < r; ++gamma) {
      Vector c = to_basis * realify(g.basis[m + gamma] * g.basis[m + beta]);
      for (int t = 0; t < r; ++t) nab(t, gamma) = c[m + t];
    }
    conn.nabla[m + beta] = nab;
  }
  return conn;
}

MatchedPairData bialgebra_pair(const LieAlgebra& g, const std::vector<Matrix>& cobracket) {
  const int n = g.dim();
  if (static_cast<int>(cobracket.size()) != n) throw NotABialgebra("cobracket needs one matrix per basis vector");
  LieAlgebra dual(n);
  for (int t = 0; t < n; ++t) {
    const Matrix& c = cobracket[t];
    if (c.rows() != static_cast<std::size_t>(n) || c.cols() != static_cast<std::size_t>(n)) {
      throw NotABialgebra("cobracket matrix has the wrong shape");
    }
    for (int p = 0; p < n; ++p) {
      for (int q = 0; q < n; ++q) {
        if (c(p, q) != -c(q, p)) throw NotABialgebra("cobracket is not antisymmetric");
      }
    }
  }
  for (int p = 0; p < n; ++p) {
    for (int q = p + 1; q < n; ++q) {
      Vector v(n);
      for (int t = 0; t < n; ++t) v[t] = cobracket[t](p, q);
      dual.set_bracket(p, q, v);
    }
  }
  MatchedPairData m{g, dual, {}, {}};
  // ∇_X α = ad*_X α and Δ_α X = ad*_α X
  for (int i = 0; i < n; ++i) {
    Matrix a(n, n);
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) a(q, p) = -g.c(i, q, p);
    m.nabla.push_back(std::move(a));
  }
  for (int s = 0; s < n; ++s) {
    Matrix a(n, n);
    for (int i = 0; i < n; ++i)
      for (int q = 0; q < n; ++q) a(q, i) = -dual.c(s, q, i);
    m.delta.push_back(std::move(a));
  }
  if (!check_matched_pair(m).ok()) throw NotABialgebra("cobracket is not compatible with the bracket");
  return m;
}

MatchedPairData aff2_bialgebra() {
  LieAlgebra g(2);
  g.set_bracket(0, 1, {0, 1});
  std::vector<Matrix> cob{Matrix(2, 2), Matrix(2, 2)};
  cob[1](0, 1) = 1;
  cob[1](1, 0) = -1;
  return bialgebra_pair(g, cob);
}

LiePair heisenberg_pair() {
  LieAlgebra d(3);
  d.set_bracket(1, 2, {1, 0, 0});
  return LiePair(d, 1);
}

namespace {

struct Semidirect {
  LieAlgebra k;
  std::vector<Matrix> rep;
  // Sizes s for which the first s vectors of V span a submodule.
  std::vector<int> invariant_prefixes;
};

Semidirect build_semidirect(int type, int v, Rng& rng) {
  Semidirect s;
  std::vector<int> all(v + 1);
  for (int i = 0; i <= v; ++i) all[i] = i;
  s.invariant_prefixes = all;
  if (type == 0 || type == 1) {
    // abelian of dim 1 or 2; commuting polynomials in one nilpotent matrix
    const int a = type + 1;
    s.k = LieAlgebra(a);
    Matrix nil(v, v);
    for (int i = 0; i < v; ++i)
      for (int j = i + 1; j < v; ++j) nil(i, j) = rng.between(-2, 2);
    Matrix nil2 = nil * nil;
    for (int i = 0; i < a; ++i) {
      Matrix r = Matrix::identity(v) * GaussScalar(rng.between(-2, 2));
      r += nil * GaussScalar(rng.between(-2, 2));
      r += nil2 * GaussScalar(rng.between(-1, 1));
      s.rep.push_back(std::move(r));
    }
  } else if (type == 2) {
    // aff2 with basis (y, x), [x, y] = y
    s.k = LieAlgebra(2);
    s.k.set_bracket(1, 0, {1, 0});
    const long c = rng.between(-1, 1);
    Matrix x(v, v), y(v, v);
    for (int i = 0; i < v; ++i) x(i, i) = c + (v - 1 - i);
    for (int i = 0; i + 1 < v; ++i) y(i, i + 1) = rng.between(-2, 2);
    s.rep = {y, x};
  } else if (type == 3) {
    // Heisenberg (z, x, y): a standard 3-dim block, then commuting nilpotents
    s.k = LieAlgebra(3);
    s.k.set_bracket(1, 2, {1, 0, 0});
    Matrix z(v, v), x(v, v), y(v, v);
    int off = 0;
    if (v >= 3) {
      z(0, 2) = 1;
      x(0, 1) = 1;
      y(1, 2) = 1;
      off = 3;
    }
    for (int i = off; i + 1 < v; ++i) {
      GaussScalar w = rng.between(-2, 2);
      x(i, i + 1) = w;
      y(i, i + 1) = w * GaussScalar(rng.between(-1, 1));
    }
    s.rep = {z, x, y};
  } else {
    // sl2 (h, e, f): trivial summands first, then the adjoint if it fits
    s.k = LieAlgebra(3);
    s.k.set_bracket(1, 2, {1, 0, 0});
    s.k.set_bracket(0, 1, {0, 2, 0});
    s.k.set_bracket(0, 2, {0, 0, -2});
    const int triv = v >= 3 ? v - 3 : v;
    s.rep.assign(3, Matrix(v, v));
    if (v >= 3) {
      for (int a = 0; a < 3; ++a)
        for (int j = 0; j < 3; ++j)
          for (int k = 0; k < 3; ++k) s.rep[a](triv + k, triv + j) = s.k.c(a, j, k);
    }
    s.invariant_prefixes.clear();
    for (int i = 0; i <= triv; ++i) s.invariant_prefixes.push_back(i);
    if (v >= 3) s.invariant_prefixes.push_back(v);
  }
  return s;
}

}  // namespace

LiePair random_pair(int dim_d, int dim_g, std::uint64_t seed) {
  if (dim_d < 1 || dim_d > 8 || dim_g < 0 || dim_g > dim_d) throw std::invalid_argument("random_pair dimensions");
  Rng rng(seed);
  const int type_dims[] = {1, 2, 2, 3, 3};
  std::vector<int> candidates;
  for (int t = 0; t < 5; ++t) {
    if (type_dims[t] <= dim_d) candidates.push_back(t);
  }
  while (true) {
    const int type = candidates[rng.between(0, static_cast<long>(candidates.size()) - 1)];
    const int k = type_dims[type], v = dim_d - k;
    Semidirect s = build_semidirect(type, v, rng);
    std::vector<std::pair<int, int>> splits;
    for (int p = 0; p <= k; ++p) {
      for (int sz : s.invariant_prefixes) {
        if (p + sz == dim_g) splits.emplace_back(p, sz);
      }
    }
    if (splits.empty()) continue;
    auto [p, sz] = splits[rng.between(0, static_cast<long>(splits.size()) - 1)];

    LieAlgebra d(dim_d);
    for (int i = 0; i < k; ++i) {
      for (int j = i + 1; j < k; ++j) {
        Vector w(dim_d);
        for (const auto& t : s.k.terms(i, j)) w[t.index] = t.coeff;
        d.set_bracket(i, j, w);
      }
      for (int beta = 0; beta < v; ++beta) {
        Vector w(dim_d);
        for (int gamma = 0; gamma < v; ++gamma) w[k + gamma] = s.rep[i](gamma, beta);
        d.set_bracket(i, k + beta, w);
      }
    }
    std::vector<int> order;
    for (int i = 0; i < p; ++i) order.push_back(i);
    for (int i = 0; i < sz; ++i) order.push_back(k + i);
    for (int i = p; i < k; ++i) order.push_back(i);
    for (int i = sz; i < v; ++i) order.push_back(k + i);
    LieAlgebra adapted = change_basis(d, permutation_matrix(order));

    // flag-preserving change of basis [[A, C], [0, D]]
    const int r = dim_d - dim_g;
    Matrix a = rng.invertible(dim_g), dd = rng.invertible(r), c = rng.matrix(dim_g, r, -1, 1);
    Matrix big(dim_d, dim_d);
    for (int i = 0; i < dim_g; ++i) {
      for (int j = 0; j < dim_g; ++j) big(i, j) = a(i, j);
      for (int j = 0; j < r; ++j) big(i, dim_g + j) = c(i, j);
    }
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) big(dim_g + i, dim_g + j) = dd(i, j);
    LieAlgebra out = change_basis(adapted, big);
    if (!validate_lie_algebra(out).ok()) throw std::logic_error("random_pair produced an invalid algebra");
    return LiePair(out, dim_g);
  }
}

GModule random_module(const LiePair& pair, std::uint64_t seed) {
  Rng rng(seed);
  const LieAlgebra& g = pair.g();
  const int m = g.dim();
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) pairs.emplace_back(i, j);

  // characters: functionals vanishing on [g, g]
  Matrix derived(pairs.size(), m);
  for (std::size_t row = 0; row < pairs.size(); ++row)
    for (const auto& t : g.terms(pairs[row].first, pairs[row].second)) derived(row, t.index) = t.coeff;
  auto chars = nullspace_basis(derived);
  auto combo = [&](const std::vector<Vector>& basis) {
    Vector out(m);
    for (const auto& b : basis) axpy(out, GaussScalar(rng.between(-2, 2)), b);
    return out;
  };
  Vector chi1 = combo(chars), chi2 = combo(chars);

  // c([a_i,a_j]) = χ1(a_i)c(a_j) + c(a_i)χ2(a_j) − χ1(a_j)c(a_i) − c(a_j)χ2(a_i)
  Matrix eqs(pairs.size(), m);
  for (std::size_t row = 0; row < pairs.size(); ++row) {
    auto [i, j] = pairs[row];
    for (const auto& t : g.terms(i, j)) eqs(row, t.index) += t.coeff;
    eqs(row, j) -= chi1[i] - chi2[i];
    eqs(row, i) -= chi2[j] - chi1[j];
  }
  Vector cocycle = combo(nullspace_basis(eqs));

  GModule mod{2, {}};
  for (int a = 0; a < m; ++a) mod.action.push_back(Matrix(2, 2, {chi1[a], cocycle[a], GaussScalar(0), chi2[a]}));
  if (m == 0) return mod;
  return conjugate_module(mod, rng.invertible(2));
}

Connection random_extension(const LiePair& pair, const GModule& module, std::uint64_t seed) {
  Rng rng(seed);
  Connection c = extend_by_zero(pair, module);
  for (int beta = 0; beta < pair.dim_b(); ++beta) c.nabla[pair.j(beta)] = rng.matrix(module.dim, module.dim, -2, 2);
  return c;
}

std::vector<std::string> zoo_names() {
  return {"aff2_bialgebra", "heisenberg", "random", "sl2", "u2t2", "u2t2_torsion", "u3t3"};
}

Fixture zoo_fixture(const std::string& name, std::uint64_t seed) {
  if (name == "sl2") return sl2_fixture();
  if (name == "u2t2" || name == "u2t2_torsion" || name == "u3t3") {
    GlUnTn g = gl_un_tn(name == "u3t3" ? 3 : 2);
    Fixture f{name, g.pair, standard_modules(g.pair), {}, {}};
    f.connections.emplace("B", name == "u2t2_torsion" ? gl_un_tn_torsion_connection(g) : g.connection);
    // the defining representation of 𝔲_n on ℂⁿ and its trace character
    const int m = g.pair.dim_g();
    const int n = static_cast<int>(g.basis[0].rows());
    GModule std_rep{n, {}}, trace_rep{1, {}};
    for (int a = 0; a < m; ++a) {
      std_rep.action.push_back(g.basis[a]);
      trace_rep.action.push_back(Matrix(1, 1, {trace(g.basis[a])}));
    }
    f.modules.emplace("C" + std::to_string(n), std_rep);
    f.modules.emplace("trace", trace_rep);
    return f;
  }
  if (name == "heisenberg") {
    Fixture f{name, heisenberg_pair(), {}, {}, {}};
    f.modules = standard_modules(f.pair);
    return f;
  }
  if (name == "aff2_bialgebra") {
    Fixture f{name, matched_sum(aff2_bialgebra()), {}, {}, {}};
    f.modules = standard_modules(f.pair);
    return f;
  }
  if (name == "random") {
    Rng rng(seed);
    const int n = static_cast<int>(rng.between(3, 6));
    const int m = static_cast<int>(rng.between(1, n - 1));
    Fixture f{name, random_pair(n, m, seed), {}, {}, {}};
    f.modules = standard_modules(f.pair);
    f.modules.emplace("R2", random_module(f.pair, seed + 1));
    f.connections.emplace("B", random_extension(f.pair, f.modules.at("B"), seed + 2));
    return f;
  }
  throw std::out_of_range("unknown zoo fixture: " + name);
}

}  // namespace liepair
