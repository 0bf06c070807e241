#include "liepair/json_io.hpp"

namespace liepair {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing \"") + key + "\"");
  return *it;
}

int int_from_json(const Json& j, const std::string& where, int lo, int hi) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  long long v = j.get<long long>();
  if (v < lo || v > hi) fail(where, "value " + std::to_string(v) + " out of range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return static_cast<int>(v);
}

const Json& array_of(const Json& j, std::size_t n, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  if (n != static_cast<std::size_t>(-1) && j.size() != n) {
    fail(where, "expected " + std::to_string(n) + " entries, got " + std::to_string(j.size()));
  }
  return j;
}

Vector vector_from_json(const Json& j, std::size_t n, const std::string& where) {
  array_of(j, n, where);
  Vector v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(scalar_from_json(j[i], where + "/" + std::to_string(i)));
  return v;
}

std::vector<Matrix> action_from_json(const Json& j, int count, int dim, const std::string& where) {
  array_of(j, count, where);
  std::vector<Matrix> out;
  for (int a = 0; a < count; ++a) out.push_back(matrix_from_json(j[a], dim, dim, where + "/" + std::to_string(a)));
  return out;
}

Json action_to_json(const std::vector<Matrix>& action) {
  Json out = Json::array();
  for (const auto& m : action) out.push_back(to_json(m));
  return out;
}

// [[i, j, [c…]]…] for the pairs i < j with a nonzero value.
template <class Get>
Json triples_to_json(int n, bool upper_only, Get get) {
  Json out = Json::array();
  for (int i = 0; i < n; ++i) {
    for (int j = upper_only ? i + 1 : 0; j < n; ++j) {
      Vector v = get(i, j);
      if (is_zero(v)) continue;
      Json coeffs = Json::array();
      for (const auto& x : v) coeffs.push_back(to_json(x));
      out.push_back(Json::array({i, j, coeffs}));
    }
  }
  return out;
}

}  // namespace

Json to_json(const GaussScalar& s) { return s.to_string(); }

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const Cochain& c) {
  Json entries = Json::array();
  const auto& ext = exterior_index(c.dim_g);
  const std::size_t ts = c.tensor_size();
  TensorIndex ti(std::max(c.dim_b, 1), c.l);
  for (std::size_t p = 0; p < c.exterior_size(); ++p) {
    for (std::size_t J = 0; J < ts; ++J) {
      for (int v = 0; v < c.dim_e; ++v) {
        const GaussScalar& x = c.coeffs[(p * ts + J) * c.dim_e + v];
        if (x.is_zero()) continue;
        entries.push_back({{"form", mask_to_indices(ext.mask(c.k, p))},
                           {"slots", ti.decode(J)},
                           {"value", v},
                           {"coeff", to_json(x)}});
      }
    }
  }
  return {{"k", c.k}, {"l", c.l}, {"dim_g", c.dim_g}, {"dim_b", c.dim_b}, {"dim_e", c.dim_e}, {"entries", entries}};
}

Json to_json(const Violation& v) {
  Json res = Json::array();
  for (const auto& x : v.residual) res.push_back(to_json(x));
  return {{"identity", v.identity}, {"tuple", v.indices}, {"residual", res}};
}

Json to_json(const CheckReport& r, std::size_t limit) {
  Json vs = Json::array();
  for (std::size_t i = 0; i < r.violations.size() && i < limit; ++i) vs.push_back(to_json(r.violations[i]));
  return {{"name", r.name},
          {"status", r.ok() ? "pass" : "fail"},
          {"checked", r.checked},
          {"violations_total", r.violations.size()},
          {"violations", vs}};
}

GaussScalar scalar_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return GaussScalar(static_cast<long>(j.get<long long>()));
  if (!j.is_string()) fail(where, "expected a scalar string or integer");
  try {
    return GaussScalar::parse(j.get<std::string>());
  } catch (const ScalarParseError& e) {
    fail(where, e.what());
  }
}

Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& where) {
  array_of(j, rows, where);
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string w = where + "/" + std::to_string(r);
    array_of(j[r], cols, w);
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar_from_json(j[r][c], w + "/" + std::to_string(c));
  }
  return m;
}

Json fixture_to_json(const Fixture& f) {
  const LieAlgebra& d = f.pair.d();
  const int n = d.dim();
  Json out;
  out["name"] = f.name;
  out["dim"] = n;
  out["dim_g"] = f.pair.dim_g();
  out["bracket"] = triples_to_json(n, true, [&](int i, int j) { return d.bracket(i, j); });
  Json mods = Json::object();
  for (const auto& [name, m] : f.modules) mods[name] = {{"dim", m.dim}, {"action", action_to_json(m.action)}};
  out["modules"] = mods;
  Json conns = Json::object();
  for (const auto& [name, c] : f.connections) {
    std::string module = name;
    for (const auto& [mname, m] : f.modules) {
      if (m == c.module) {
        module = mname;
        break;
      }
    }
    conns[name] = {{"module", module}, {"nabla", action_to_json(c.nabla)}};
  }
  out["connection"] = conns;
  Json algs = Json::object();
  for (const auto& [name, a] : f.algebras) {
    const int dc = a.dim();
    algs[name] = {{"dim", dc},
                  {"action", action_to_json(a.module.action)},
                  {"mult", triples_to_json(dc, false, [&](int i, int j) {
                     Vector v(dc);
                     for (int k = 0; k < dc; ++k) v[k] = a.m(i, j, k);
                     return v;
                   })}};
  }
  out["algebra"] = algs;
  return out;
}

Fixture fixture_from_json(const Json& j) {
  if (!j.is_object()) fail("", "expected a fixture object");
  const int n = int_from_json(field(j, "dim", ""), "/dim", 1, 32);
  const int m = int_from_json(field(j, "dim_g", ""), "/dim_g", 0, n);
  LieAlgebra d(n);
  if (j.contains("bracket")) {
    const Json& br = array_of(j["bracket"], static_cast<std::size_t>(-1), "/bracket");
    for (std::size_t t = 0; t < br.size(); ++t) {
      const std::string w = "/bracket/" + std::to_string(t);
      array_of(br[t], 3, w);
      int a = int_from_json(br[t][0], w + "/0", 0, n - 1);
      int b = int_from_json(br[t][1], w + "/1", 0, n - 1);
      if (a == b) fail(w, "bracket of a basis vector with itself");
      d.set_bracket(a, b, vector_from_json(br[t][2], n, w + "/2"));
    }
  }
  Fixture f;
  f.name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "input";
  try {
    f.pair = LiePair(d, m);
  } catch (const SubalgebraNotClosed& e) {
    throw ValidationError(std::string("dim_g does not span a subalgebra: ") + e.what());
  }
  if (j.contains("modules")) {
    const Json& mods = j["modules"];
    if (!mods.is_object()) fail("/modules", "expected an object");
    for (const auto& [name, mj] : mods.items()) {
      const std::string w = "/modules/" + name;
      const int dim = int_from_json(field(mj, "dim", w), w + "/dim", 1, 64);
      f.modules[name] = GModule{dim, action_from_json(field(mj, "action", w), m, dim, w + "/action")};
    }
  }
  if (j.contains("connection")) {
    const Json& cs = j["connection"];
    if (!cs.is_object()) fail("/connection", "expected an object");
    for (const auto& [name, cj] : cs.items()) {
      const std::string w = "/connection/" + name;
      std::string module = name;
      const Json* nabla = &cj;
      if (cj.is_object()) {
        const Json& mj = field(cj, "module", w);
        if (!mj.is_string()) fail(w + "/module", "expected a module name");
        module = mj.get<std::string>();
        nabla = &field(cj, "nabla", w);
      }
      auto it = f.modules.find(module);
      if (it == f.modules.end()) fail(w, "unknown module \"" + module + "\"");
      const int dim = it->second.dim;
      f.connections[name] = Connection{f.pair, it->second, action_from_json(*nabla, n, dim, w)};
    }
  }
  if (j.contains("algebra")) {
    const Json& as = j["algebra"];
    if (!as.is_object()) fail("/algebra", "expected an object");
    for (const auto& [name, aj] : as.items()) {
      const std::string w = "/algebra/" + name;
      const int dim = int_from_json(field(aj, "dim", w), w + "/dim", 1, 16);
      GAlgebra a{GModule{dim, action_from_json(field(aj, "action", w), m, dim, w + "/action")},
                 std::vector<GaussScalar>(static_cast<std::size_t>(dim) * dim * dim)};
      const Json& mult = array_of(field(aj, "mult", w), static_cast<std::size_t>(-1), w + "/mult");
      for (std::size_t t = 0; t < mult.size(); ++t) {
        const std::string wt = w + "/mult/" + std::to_string(t);
        array_of(mult[t], 3, wt);
        int a1 = int_from_json(mult[t][0], wt + "/0", 0, dim - 1);
        int a2 = int_from_json(mult[t][1], wt + "/1", 0, dim - 1);
        Vector v = vector_from_json(mult[t][2], dim, wt + "/2");
        for (int k = 0; k < dim; ++k) a.mult[(static_cast<std::size_t>(a1) * dim + a2) * dim + k] = v[k];
      }
      f.algebras[name] = std::move(a);
    }
  }
  return f;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

std::vector<CheckReport> validate_fixture(const Fixture& f) {
  std::vector<CheckReport> out;
  CheckReport lie = validate_lie_algebra(f.pair.d());
  lie.name = "lie_algebra";
  out.push_back(std::move(lie));
  const LieAlgebra& g = f.pair.g();
  for (const auto& [name, mod] : f.modules) {
    CheckReport r = check_module(g, mod);
    r.name = "module " + name;
    out.push_back(std::move(r));
  }
  for (const auto& [name, conn] : f.connections) {
    CheckReport r = check_extension(conn);
    r.name = "connection " + name;
    out.push_back(std::move(r));
  }
  for (const auto& [name, alg] : f.algebras) {
    CheckReport r = check_g_algebra(g, alg);
    r.name = "algebra " + name;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace liepair
