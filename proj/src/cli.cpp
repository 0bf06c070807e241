#include "liepair/cli.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

namespace liepair {

namespace {

// Bad flags or names: reported like malformed input.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  std::string module;
  std::string connection;
  std::string algebra;
  int depth = 0;
  int max_n = 3;
  int degree_cap = -1;
  int k = 1;
  bool json = false;
  std::uint64_t seed = 1;
  std::string zoo_name;
};

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr);
  std::ostringstream os;
  for (unsigned i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return "sha256:" + os.str();
}

Fixture load(const Options& o, RunReport& rep, bool require_valid) {
  if (o.input.empty()) throw UsageError("--input is required");
  std::ifstream in(o.input, std::ios::binary);
  if (!in) throw UsageError("cannot read " + o.input);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  rep.input_digest = sha256_hex(text);
  Fixture f = fixture_from_json(parse_json(text));
  if (require_valid) {
    for (const auto& r : validate_fixture(f)) {
      if (!r.ok()) throw ValidationError(summary(r));
    }
  }
  return f;
}

const GModule& module_named(const Fixture& f, const std::string& name) {
  auto it = f.modules.find(name);
  if (it == f.modules.end()) throw UsageError("unknown module \"" + name + "\"");
  return it->second;
}

Connection connection_for(const Fixture& f, const std::string& module, const std::string& conn_name) {
  const GModule& mod = module_named(f, module);
  if (!conn_name.empty()) {
    auto it = f.connections.find(conn_name);
    if (it == f.connections.end()) throw UsageError("unknown connection \"" + conn_name + "\"");
    if (!(it->second.module == mod)) throw UsageError("connection \"" + conn_name + "\" is not on module " + module);
    return it->second;
  }
  auto it = f.connections.find(module);
  if (it != f.connections.end() && it->second.module == mod) return it->second;
  return extend_by_zero(f.pair, mod);
}

// The connection on B: the fixture's "B" connection when it extends the
// quotient action, otherwise zero on the complement.
Connection b_connection(const Fixture& f) {
  GModule b = quotient_module(f.pair);
  auto it = f.connections.find("B");
  if (it != f.connections.end() && it->second.module == b) return it->second;
  return extend_by_zero(f.pair, b);
}

GAlgebra algebra_named(const Fixture& f, const std::string& name) {
  auto it = f.algebras.find(name);
  if (it != f.algebras.end()) return it->second;
  if (name == "unit") return unit_algebra(f.pair.dim_g());
  if (name == "dual_numbers") return dual_numbers(f.pair.dim_g());
  throw UsageError("unknown algebra \"" + name + "\"");
}

void add_report(RunReport& rep, const CheckReport& r) {
  rep.checks.push_back({r.name, r.ok() ? "pass" : "fail", to_json(r)});
}

void add_simple(RunReport& rep, const std::string& name, bool pass, Json detail = Json::object()) {
  rep.checks.push_back({name, pass ? "pass" : "fail", std::move(detail)});
}

Json nabla_json(const Connection& c) {
  Json out = Json::array();
  for (const auto& m : c.nabla) out.push_back(to_json(m));
  return out;
}

void cmd_validate(const Options& o, RunReport& rep) {
  Fixture f = load(o, rep, false);
  bool ok = true;
  for (const auto& r : validate_fixture(f)) {
    add_report(rep, r);
    ok = ok && r.ok();
  }
  rep.data = {{"name", f.name}, {"dim", f.pair.dim_d()}, {"dim_g", f.pair.dim_g()}};
  if (!ok) throw ValidationError("fixture failed validation");
}

void cmd_atiyah(const Options& o, RunReport& rep) {
  Fixture f = load(o, rep, true);
  if (o.module.empty()) throw UsageError("--module is required");
  Connection c = connection_for(f, o.module, o.connection);
  AtiyahClass a = atiyah_class(c);
  add_simple(rep, "cocycle", atiyah_complex(f.pair, c.module).is_cocycle(a.representative));
  if (a.repaired) add_report(rep, check_compatible(*a.repaired));
  rep.data = {{"module", o.module},
              {"vanishes", a.vanishes},
              {"representative", to_json(a.representative)},
              {"primitive", a.primitive ? to_json(*a.primitive) : Json()},
              {"repaired_connection", a.repaired ? nabla_json(*a.repaired) : Json()}};
}

void cmd_chern(const Options& o, RunReport& rep) {
  Fixture f = load(o, rep, true);
  if (o.module.empty()) throw UsageError("--module is required");
  if (o.k < 1) throw UsageError("--k must be at least 1");
  Connection c = connection_for(f, o.module, o.connection);
  ScalarClass s = scalar_class(c, o.k);
  const int kmax = std::min(f.pair.dim_g(), f.pair.dim_b());
  if (o.k <= kmax) {
    add_simple(rep, "closed", scalar_complex(f.pair, o.k).is_cocycle(s.trace_part));
  } else {
    rep.checks.push_back({"closed", "skipped", {{"reason", "degree exceeds dim g or dim B"}}});
  }
  rep.data = {{"module", o.module}, {"k", o.k}, {"prefactor", s.prefactor}, {"trace_part", to_json(s.trace_part)}};
}

void cmd_todd(const Options& o, RunReport& rep) {
  Fixture f = load(o, rep, true);
  if (o.module.empty()) throw UsageError("--module is required");
  Connection c = connection_for(f, o.module, o.connection);
  ToddClass t = todd_class(c);
  add_simple(rep, "degree0_is_one", t.components[0].coeffs.size() == 1 && t.components[0].coeffs[0].is_one());
  Json comps = Json::array();
  for (std::size_t j = 0; j < t.components.size(); ++j) {
    if (j > 0) {
      add_simple(rep, "closed_" + std::to_string(j), scalar_complex(f.pair, static_cast<int>(j)).is_cocycle(t.components[j]));
    }
    comps.push_back(to_json(t.components[j]));
  }
  rep.data = {{"module", o.module}, {"components", comps}};
}

BracketTower tower_for(const Fixture& f, const Options& o, int depth) {
  Connection cb = b_connection(f);
  if (o.module.empty()) return build_tower(cb, depth);
  return build_tower(cb, connection_for(f, o.module, o.connection), depth);
}

void cmd_tower(const Options& o, RunReport& rep) {
  Fixture f = load(o, rep, true);
  const int depth = o.depth > 0 ? o.depth : 4;
  if (depth < 2) throw UsageError("--depth must be at least 2");
  BracketTower t = tower_for(f, o, depth);
  Json r = Json::object(), s = Json::object();
  for (int n = 2; n <= depth; ++n) {
    r[std::to_string(n)] = to_json(t.r[n]);
    if (t.has_module()) s[std::to_string(n)] = to_json(t.s[n]);
  }
  rep.data = {{"depth", depth}, {"beta", to_json(t.split.beta_cochain())}, {"omega", to_json(t.split.omega_cochain())}, {"R", r}};
  if (t.has_module()) rep.data["S"] = s;
}

void cmd_verify(const Options& o, RunReport& rep) {
  Fixture f = load(o, rep, true);
  if (o.max_n < 1) throw UsageError("--max-n must be at least 1");
  const int depth = o.depth > 0 ? o.depth : std::max(2, o.max_n);
  const int cap = o.degree_cap >= 0 ? o.degree_cap : f.pair.dim_g();
  BracketTower t = tower_for(f, o, depth);
  GAlgebra c = o.algebra.empty() ? unit_algebra(f.pair.dim_g()) : algebra_named(f, o.algebra);
  LeibnizStructure ls = extend_with_algebra(t, c);
  add_report(rep, verify_leibniz(ls, o.max_n, cap));
  if (t.has_module()) add_report(rep, verify_module(ls, o.max_n, cap));
  rep.data = {{"depth", depth}, {"max_n", o.max_n}, {"degree_cap", cap}};
}

void cmd_symmetry(const Options& o, RunReport& rep) {
  Fixture f = load(o, rep, true);
  const int depth = o.depth > 0 ? o.depth : 4;
  SymmetryReport s = symmetry_report(build_tower(b_connection(f), depth));
  for (const auto& v : s.verdicts) {
    Json detail = Json::object();
    if (v.witness) detail["witness"] = to_json(*v.witness);
    add_simple(rep, "R" + std::to_string(v.n) + "_symmetric", v.fully_symmetric, detail);
  }
  rep.data = {{"depth", depth}, {"l_infinity", s.l_infinity}};
}

void print(const RunReport& rep, bool json, std::ostream& out) {
  if (json) {
    Json checks = Json::array();
    for (const auto& c : rep.checks) checks.push_back({{"name", c.name}, {"status", c.status}, {"detail", c.detail}});
    Json j = {{"command", rep.command},
              {"input_digest", rep.input_digest},
              {"status", rep.ok() ? "pass" : "fail"},
              {"checks", checks},
              {"data", rep.data}};
    out << j.dump(2) << "\n";
    return;
  }
  out << "command:";
  for (const auto& a : rep.command) out << " " << a;
  out << "\n";
  if (!rep.input_digest.empty()) out << "input: " << rep.input_digest << "\n";
  for (const auto& c : rep.checks) {
    out << c.name << ": " << c.status;
    if (c.detail.contains("checked")) out << " (" << c.detail["checked"].get<std::size_t>() << " checked)";
    out << "\n";
    if (c.detail.contains("violations")) {
      for (const auto& v : c.detail["violations"]) out << "  " << v.dump() << "\n";
    }
    if (c.detail.contains("witness")) out << "  witness " << c.detail["witness"].dump() << "\n";
  }
  if (!rep.data.empty()) out << rep.data.dump(2) << "\n";
  out << "status: " << (rep.ok() ? "pass" : "fail") << "\n";
}

}  // namespace

bool RunReport::ok() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == "fail"; });
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact computations for Lie algebra pairs", "liepair"};
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "JSON output");
  app.add_option("--seed", o.seed, "seed for random fixtures");

  auto with_input = [&](CLI::App* sub) {
    sub->add_option("--input", o.input, "fixture JSON file")->required();
    sub->add_option("--module", o.module, "module name");
    sub->add_option("--connection", o.connection, "connection name");
    return sub;
  };
  CLI::App* validate = with_input(app.add_subcommand("validate", "run all structural validators"));
  CLI::App* atiyah = with_input(app.add_subcommand("atiyah", "Atiyah class of a module"));
  CLI::App* chern = with_input(app.add_subcommand("chern", "scalar class tr(alpha^k)"));
  chern->add_option("--k", o.k, "degree")->required();
  CLI::App* todd = with_input(app.add_subcommand("todd", "Todd class"));
  CLI::App* tower = with_input(app.add_subcommand("tower", "R_n (and S_n) tower"));
  tower->add_option("--depth", o.depth, "tower depth");
  CLI::App* verify = with_input(app.add_subcommand("verify", "Leibniz identity sweeps"));
  verify->add_option("--depth", o.depth, "tower depth");
  verify->add_option("--max-n", o.max_n, "largest arity");
  verify->add_option("--degree-cap", o.degree_cap, "largest exterior degree");
  verify->add_option("--algebra", o.algebra, "coefficient algebra");
  CLI::App* symmetry = with_input(app.add_subcommand("symmetry", "symmetry of the R_n"));
  symmetry->add_option("--depth", o.depth, "tower depth");
  CLI::App* zoo = app.add_subcommand("zoo", "built-in fixtures");
  zoo->require_subcommand(1);
  CLI::App* zoo_list = zoo->add_subcommand("list", "fixture names");
  CLI::App* zoo_export = zoo->add_subcommand("export", "fixture as JSON");
  zoo_export->add_option("name", o.zoo_name, "fixture name")->required();
  for (CLI::App* sub : {validate, atiyah, chern, todd, tower, verify, symmetry, zoo, zoo_list, zoo_export}) {
    sub->fallthrough();
  }

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }

  RunReport rep;
  rep.command = args;
  auto start = std::chrono::steady_clock::now();
  try {
    if (zoo->parsed()) {
      if (zoo_list->parsed()) {
        if (o.json) {
          out << Json(zoo_names()).dump(2) << "\n";
        } else {
          for (const auto& n : zoo_names()) out << n << "\n";
        }
        return kOk;
      }
      Fixture f;
      try {
        f = zoo_fixture(o.zoo_name, o.seed);
      } catch (const std::out_of_range&) {
        throw UsageError("unknown fixture \"" + o.zoo_name + "\"");
      }
      out << fixture_to_json(f).dump(2) << "\n";
      return kOk;
    }
    if (validate->parsed()) cmd_validate(o, rep);
    else if (atiyah->parsed()) cmd_atiyah(o, rep);
    else if (chern->parsed()) cmd_chern(o, rep);
    else if (todd->parsed()) cmd_todd(o, rep);
    else if (tower->parsed()) cmd_tower(o, rep);
    else if (verify->parsed()) cmd_verify(o, rep);
    else if (symmetry->parsed()) cmd_symmetry(o, rep);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const LiePairError& e) {
    if (!rep.checks.empty()) print(rep, o.json, out);
    err << "validation error: " << e.what() << "\n";
    return kValidationError;
  }
  rep.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  print(rep, o.json, out);
  if (!o.json) err << "time: " << std::fixed << std::setprecision(1) << rep.timing_ms << " ms\n";
  return rep.ok() ? kOk : kCheckFailure;
}

}  // namespace liepair
