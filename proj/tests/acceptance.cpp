// Acceptance run: one line per criterion, exact checks, wall-clock limits.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "liepair/homotopy.hpp"
#include "liepair/zoo.hpp"

using namespace liepair;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

bool criterion(int id, const char* title, double limit_s, const std::function<Outcome()>& body) {
  auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool in_time = secs < limit_s;
  bool pass = o.pass && in_time;
  std::printf("criterion %d: %s  %s  [%s; %.2f s, limit %.0f s%s]\n", id, pass ? "PASS" : "FAIL", title, o.detail.c_str(),
              secs, limit_s, in_time ? "" : ", too slow");
  std::fflush(stdout);
  return pass;
}

struct ModuleCase {
  std::string name;
  Connection conn;
};

struct Entry {
  std::string name;
  Connection conn_b;
  std::vector<ModuleCase> modules;
};

Entry make_entry(const std::string& name, const Connection& conn_b, std::uint64_t seed) {
  const LiePair& p = conn_b.pair;
  Entry e{name, conn_b, {}};
  e.modules.push_back({"B", conn_b});
  e.modules.push_back({"B*", random_extension(p, dual_module(quotient_module(p)), seed)});
  e.modules.push_back({"random2", random_extension(p, random_module(p, seed + 1), seed + 2)});
  return e;
}

// sl₂, 𝔲₂/𝔱₂, Heisenberg, the aff₂ bialgebra pair and five seeded random pairs.
std::vector<Entry> fixture_set() {
  std::vector<Entry> out;
  LiePair sl2 = sl2_pair();
  out.push_back(make_entry("sl2", extend_by_zero(sl2, quotient_module(sl2)), 11));
  out.push_back(make_entry("u2t2", gl_un_tn(2).connection, 12));
  LiePair heis = heisenberg_pair();
  out.push_back(make_entry("heisenberg", extend_by_zero(heis, quotient_module(heis)), 13));
  LiePair aff = matched_sum(aff2_bialgebra());
  out.push_back(make_entry("aff2_bialgebra", extend_by_zero(aff, quotient_module(aff)), 14));
  const int dims[5][2] = {{4, 2}, {5, 3}, {5, 2}, {6, 3}, {6, 4}};
  for (int s = 0; s < 5; ++s) {
    LiePair p = random_pair(dims[s][0], dims[s][1], 100 + s);
    out.push_back(make_entry("random" + std::to_string(s), random_extension(p, quotient_module(p), 200 + s), 300 + s));
  }
  return out;
}

std::string count_line(std::size_t checked, std::size_t failed, const std::string& what) {
  std::ostringstream os;
  os << checked << " " << what << ", " << failed << " nonzero";
  return os.str();
}

Outcome c1_sl2_golden() {
  Fixture f = sl2_fixture();
  const GModule& hom = f.modules.at("Hom(BxB,B)");
  std::size_t h1 = cohomology_dim(f.pair.g(), hom, 1);
  bool action = hom.dim == 1 && hom.action[0](0, 0) == GaussScalar(2) && hom.action[1](0, 0).is_zero();
  AtiyahClass a = atiyah_class(f.pair, f.modules.at("B"));
  bool nonzero = !a.vanishes && !a.primitive;
  std::ostringstream os;
  os << "dim H1 = " << h1 << ", h.theta = " << hom.action[0](0, 0) << " theta, e.theta = " << hom.action[1](0, 0)
     << ", Atiyah class of B " << (nonzero ? "nonzero" : "zero");
  return {h1 == 1 && action && nonzero, os.str()};
}

Outcome c2_cocycles() {
  std::vector<Fixture> fixtures{sl2_fixture(), zoo_fixture("heisenberg"), zoo_fixture("aff2_bialgebra")};
  for (std::uint64_t seed = 1; fixtures.size() < 20; ++seed) {
    const int n = 3 + static_cast<int>(seed % 4);
    const int m = 1 + static_cast<int>(seed % (n - 1));
    LiePair p = random_pair(n, m, 500 + seed);
    Fixture f{"random", p, standard_modules(p), {}, {}};
    f.modules.emplace("R2", random_module(p, 600 + seed));
    fixtures.push_back(std::move(f));
  }
  std::size_t cases = 0, failures = 0, repaired = 0;
  for (const auto& f : fixtures) {
    if (f.pair.dim_d() > 6) ++failures;
    for (const auto& [name, mod] : f.modules) {
      CEComplex cx = atiyah_complex(f.pair, mod);
      std::vector<Cochain> cocycles;
      for (std::uint64_t s = 1; s <= 2; ++s) {
        Connection c = random_extension(f.pair, mod, 700 + s);
        Cochain a = atiyah_cocycle(c);
        ++cases;
        if (!cx.is_cocycle(a)) ++failures;
        AtiyahClass cls = atiyah_class(c);
        if (cls.repaired) {
          ++repaired;
          if (!check_compatible(*cls.repaired).ok()) ++failures;
        }
        cocycles.push_back(std::move(a));
      }
      if (!cx.primitive(cocycles[0] - cocycles[1])) ++failures;
    }
  }
  std::ostringstream os;
  os << fixtures.size() << " fixtures, " << cases << " connections, " << repaired << " repaired, " << failures << " failures";
  return {failures == 0 && fixtures.size() >= 20, os.str()};
}

Outcome c3_leibniz(const std::vector<Entry>& set) {
  std::size_t checked = 0, failed = 0;
  for (const auto& e : set) {
    for (const auto& mc : e.modules) {
      LeibnizStructure ls = leibniz_structure(build_tower(e.conn_b, mc.conn, 4));
      if (mc.name == "B") {
        CheckReport r = verify_leibniz(ls, 4, ls.dim_g());
        checked += r.checked;
        failed += r.violations.size();
      }
      CheckReport m = verify_module(ls, 4, ls.dim_g());
      checked += m.checked;
      failed += m.violations.size();
    }
  }
  return {failed == 0, count_line(checked, failed, "identity instances (n <= 4)")};
}

Outcome c4_proof_lemmas(const std::vector<Entry>& set) {
  std::size_t checked = 0, failed = 0;
  for (const auto& e : set) {
    CheckReport r = check_proof_identities(build_tower(e.conn_b, 4), 2);
    checked += r.checked;
    failed += r.violations.size();
  }
  return {failed == 0, count_line(checked, failed, "identity blocks")};
}

Outcome c5_l_infinity() {
  GlUnTn g = gl_un_tn(2);
  BracketTower t = build_tower(g.connection, 4);
  bool flat = true;
  for (const auto& b : t.split.beta) flat = flat && is_zero(b);
  for (const auto& o : t.split.omega) flat = flat && o.is_zero();
  SymmetryReport sym = symmetry_report(t);

  BracketTower tt = build_tower(gl_un_tn_torsion_connection(g), 4);
  SymmetryReport bad = symmetry_report(tt);
  bool witness_ok = false;
  if (!bad.l_infinity && bad.verdicts[0].witness) {
    // the n = 2 witness is R₂(b₁,b₂) − R₂(b₂,b₁), which must equal (∂^Aβ)(b₁,b₂)
    const Violation& w = *bad.verdicts[0].witness;
    const GModule& b = tt.conn_b.module;
    Cochain dbeta = CEComplex(tt.pair().g(), b, 2, b).diff(tt.split.beta_cochain());
    const int r = tt.pair().dim_b();
    witness_ok = true;
    for (int v = 0; v < r; ++v) {
      witness_ok = witness_ok && w.residual[v] == dbeta.at(static_cast<Mask>(w.indices[0]), w.indices[2] * r + w.indices[3], v);
    }
  }
  // and the R₃ defect formula holds on the torsion variant
  CheckReport lemmas = check_proof_identities(tt, 1);
  std::ostringstream os;
  os << "beta = Omega = 0: " << (flat ? "yes" : "no") << ", R2..R4 symmetric: " << (sym.l_infinity ? "yes" : "no")
     << "; torsion variant witness at n = 2 matches d(beta): " << (witness_ok ? "yes" : "no")
     << ", defect lemmas: " << (lemmas.ok() ? "zero" : "nonzero");
  return {flat && sym.l_infinity && witness_ok && lemmas.ok(), os.str()};
}

Outcome c6_closed_form() {
  std::size_t entries = 0, failed = 0;
  for (const MatchedPairData& md : {aff2_bialgebra(), gl_un_tn(2).data}) {
    LiePair p = matched_sum(md);
    BracketTower t = build_tower(extend_by_zero(p, quotient_module(p)), 4);
    const int na = md.a.dim(), nb = md.b.dim();
    for (int n = 2; n <= 4; ++n) {
      TensorIndex ti(nb, n);
      for (std::size_t J = 0; J < ti.size(); ++J) {
        auto bs = ti.decode(J);
        for (int i = 0; i < na; ++i) {
          Vector a(na);
          a[i] = 1;
          for (int s = 0; s + 1 < n; ++s) a = md.delta[bs[s]] * a;
          Vector expected(nb);
          for (int u = 0; u < na; ++u) axpy(expected, a[u], md.nabla[u].column(bs[n - 1]));
          for (int v = 0; v < nb; ++v) {
            ++entries;
            if (!(t.r[n].at(Mask{1} << i, J, v) == expected[v])) ++failed;
          }
        }
      }
    }
  }
  return {failed == 0, count_line(entries, failed, "entries compared")};
}

Outcome c7_classes() {
  Fixture f = zoo_fixture("u2t2");
  std::size_t checked = 0, failed = 0;
  for (const std::string name : {"B", "C2", "trace"}) {
    Connection c = random_extension(f.pair, f.modules.at(name), 31);
    for (int k = 1; k <= 4; ++k) {
      ++checked;
      if (!scalar_complex(f.pair, k).is_cocycle(scalar_class(c, k).trace_part)) ++failed;
    }
    ToddClass t = todd_class(c);
    ++checked;
    if (!(t.components[0].coeffs == Vector{1})) ++failed;
    for (std::size_t j = 1; j < t.components.size(); ++j) {
      ++checked;
      if (!scalar_complex(f.pair, static_cast<int>(j)).is_cocycle(t.components[j])) ++failed;
    }
  }
  Connection c1 = random_extension(f.pair, f.modules.at("C2"), 32);
  Connection c2 = random_extension(f.pair, f.modules.at("trace"), 33);
  ++checked;
  if (!(todd_class(direct_sum_connection(c1, c2)).element == todd_class(c1).element * todd_class(c2).element)) ++failed;
  return {failed == 0, count_line(checked, failed, "class checks incl. Todd(2+1) product")};
}

Outcome c8_cohomology(const std::vector<Entry>& set) {
  std::size_t checked = 0, failed = 0;
  for (const auto& e : set) {
    CheckReport r = check_cohomology_bracket(leibniz_structure(build_tower(e.conn_b, 2)));
    checked += r.checked;
    failed += r.violations.size();
  }
  return {failed == 0, count_line(checked, failed, "bracket checks")};
}

// Mutation run: a corrupted fixture must make some check fail.
struct Target {
  std::string name;
  Fixture fixture;
  Connection conn_b;
  // Reference data that the suites compare against.
  std::function<bool(const Fixture&, const BracketTower&)> golden;
};

bool standard_modules_agree(const Fixture& f) {
  GModule b = quotient_module(f.pair);
  auto it = f.modules.find("B");
  if (it != f.modules.end() && !(it->second == b)) return false;
  it = f.modules.find("B*");
  if (it != f.modules.end() && !(it->second == dual_module(b))) return false;
  it = f.modules.find("Hom(BxB,B)");
  if (it != f.modules.end() && !(it->second == tensor_module(tensor_module(dual_module(b), dual_module(b)), b))) return false;
  return true;
}

// Runs the suites on a possibly corrupted fixture/tower; true when one fails.
bool detected(const Target& t, const Fixture& f, const Connection& conn_b, const BracketTower* tower_override) {
  if (!validate_lie_algebra(f.pair.d()).ok()) return true;
  LiePair pair;
  try {
    pair = LiePair(f.pair.d(), f.pair.dim_g());
  } catch (const LiePairError&) {
    return true;
  }
  for (const auto& [name, mod] : f.modules) {
    if (!check_module(pair.g(), mod).ok()) return true;
  }
  if (!standard_modules_agree(f)) return true;
  Connection cb{pair, quotient_module(pair), conn_b.nabla};
  if (!check_extension(cb).ok()) return true;
  try {
    for (const auto& [name, mod] : f.modules) {
      if (!atiyah_complex(pair, mod).is_cocycle(atiyah_cocycle(extend_by_zero(pair, mod)))) return true;
    }
    BracketTower tower = tower_override ? *tower_override : build_tower(cb, 4);
    if (!t.golden(f, tower)) return true;
    if (!check_proof_identities(tower, 1).ok()) return true;
    LeibnizStructure ls(tower, unit_algebra(pair.dim_g()));
    if (!verify_leibniz(ls, 3, 1).ok()) return true;
    if (!check_cohomology_bracket(ls).ok()) return true;
  } catch (const LiePairError&) {
    return true;
  }
  return false;
}

std::vector<Target> mutation_targets() {
  std::vector<Target> out;
  {
    Fixture f = sl2_fixture();
    Connection cb = extend_by_zero(f.pair, quotient_module(f.pair));
    out.push_back({"sl2", f, cb, [](const Fixture& fx, const BracketTower& t) {
                     const GModule& hom = fx.modules.at("Hom(BxB,B)");
                     bool act = hom.action[0](0, 0) == GaussScalar(2) && hom.action[1](0, 0).is_zero();
                     bool h1 = cohomology_dim(fx.pair.g(), hom, 1) == 1;
                     bool r2 = t.r[2].at(0b10, 0, 0) == GaussScalar(2) && t.r[2].at(0b01, 0, 0).is_zero();
                     return act && h1 && r2 && !atiyah_class(fx.pair, fx.modules.at("B")).vanishes;
                   }});
  }
  {
    GlUnTn g = gl_un_tn(2);
    Fixture f = zoo_fixture("u2t2");
    f.modules.erase("C2");
    f.modules.erase("trace");
    out.push_back({"u2t2", f, g.connection, [](const Fixture&, const BracketTower& t) {
                     for (const auto& b : t.split.beta)
                       if (!is_zero(b)) return false;
                     for (const auto& o : t.split.omega)
                       if (!o.is_zero()) return false;
                     return symmetry_report(t).l_infinity;
                   }});
  }
  {
    MatchedPairData md = aff2_bialgebra();
    LiePair p = matched_sum(md);
    Fixture f{"aff2", p, standard_modules(p), {}, {}};
    out.push_back({"aff2", f, extend_by_zero(p, quotient_module(p)), [md](const Fixture&, const BracketTower& t) {
                     const int na = md.a.dim(), nb = md.b.dim();
                     for (int n = 2; n <= 4; ++n) {
                       TensorIndex ti(nb, n);
                       for (std::size_t J = 0; J < ti.size(); ++J) {
                         auto bs = ti.decode(J);
                         for (int i = 0; i < na; ++i) {
                           Vector a(na);
                           a[i] = 1;
                           for (int s = 0; s + 1 < n; ++s) a = md.delta[bs[s]] * a;
                           Vector expected(nb);
                           for (int u = 0; u < na; ++u) axpy(expected, a[u], md.nabla[u].column(bs[n - 1]));
                           for (int v = 0; v < nb; ++v)
                             if (!(t.r[n].at(Mask{1} << i, J, v) == expected[v])) return false;
                         }
                       }
                     }
                     return true;
                   }});
  }
  return out;
}

Outcome c9_mutations() {
  std::vector<Target> targets = mutation_targets();
  std::mt19937_64 rng(2024);
  const GaussScalar deltas[] = {1, -1, 2, GaussScalar::i()};
  const char* kinds[] = {"structure constant", "action entry", "R2 entry"};
  std::size_t total = 0, caught = 0;
  std::size_t by_kind[3] = {0, 0, 0}, caught_kind[3] = {0, 0, 0};
  std::string missed;
  for (int trial = 0; trial < 60; ++trial) {
    const Target& t = targets[trial % targets.size()];
    const int kind = (trial / static_cast<int>(targets.size())) % 3;
    const GaussScalar& delta = deltas[rng() % 4];
    Fixture f = t.fixture;
    Connection cb = t.conn_b;
    bool hit = false;
    const int n = f.pair.dim_d();
    if (kind == 0) {
      // antisymmetric change of one bracket [x_i, x_j]
      int i = static_cast<int>(rng() % n), j = static_cast<int>(rng() % (n - 1));
      if (j >= i) ++j;
      int k = static_cast<int>(rng() % n);
      LieAlgebra d = f.pair.d();
      Vector v = d.bracket(i, j);
      v[k] += delta;
      d.set_bracket(i, j, v);
      Fixture g{f.name, LiePair(), f.modules, {}, {}};
      // build the pair lazily: closure failures count as detection
      try {
        g.pair = LiePair(d, f.pair.dim_g());
      } catch (const LiePairError&) {
        hit = true;
      }
      if (!hit) {
        Connection cb2{g.pair, quotient_module(g.pair), cb.nabla};
        for (int a = 0; a < g.pair.dim_g(); ++a) cb2.nabla[a] = cb2.module.action[a];
        hit = detected(t, g, cb2, nullptr);
      }
    } else if (kind == 1) {
      auto it = f.modules.begin();
      std::advance(it, static_cast<long>(rng() % f.modules.size()));
      GModule& mod = it->second;
      int a = static_cast<int>(rng() % mod.action.size());
      int r = static_cast<int>(rng() % mod.dim), c = static_cast<int>(rng() % mod.dim);
      mod.action[a](r, c) += delta;
      hit = detected(t, f, cb, nullptr);
    } else {
      BracketTower tower = build_tower(cb, 4);
      std::size_t idx = rng() % tower.r[2].coeffs.size();
      tower.r[2].coeffs[idx] += delta;
      hit = detected(t, f, cb, &tower);
    }
    ++total;
    ++by_kind[kind];
    if (hit) {
      ++caught;
      ++caught_kind[kind];
    } else {
      missed += " " + t.name + "/" + kinds[kind];
    }
  }
  std::ostringstream os;
  os << caught << "/" << total << " mutations detected (constants " << caught_kind[0] << "/" << by_kind[0] << ", actions "
     << caught_kind[1] << "/" << by_kind[1] << ", R2 " << caught_kind[2] << "/" << by_kind[2] << ")";
  if (!missed.empty()) os << "; missed:" << missed;
  return {caught == total && total >= 50, os.str()};
}

}  // namespace

int main() {
  const std::vector<Entry> set = fixture_set();
  bool ok = true;
  ok &= criterion(1, "sl2 golden values", 1, c1_sl2_golden);
  ok &= criterion(2, "Atiyah cocycle theorems", 30, c2_cocycles);
  ok &= criterion(3, "Leibniz and module identity sweeps", 120, [&] { return c3_leibniz(set); });
  ok &= criterion(4, "proof lemma identities", 60, [&] { return c4_proof_lemmas(set); });
  ok &= criterion(5, "L-infinity criterion", 30, c5_l_infinity);
  ok &= criterion(6, "matched-pair closed form", 60, c6_closed_form);
  ok &= criterion(7, "characteristic classes", 10, c7_classes);
  ok &= criterion(8, "bracket on cohomology", 30, [&] { return c8_cohomology(set); });
  ok &= criterion(9, "mutation sensitivity", 120, c9_mutations);
  std::printf("acceptance: %s\n", ok ? "PASS" : "FAIL");
  return ok ? 0 : 1;
}
