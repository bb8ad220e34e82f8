// Command-line front end.
// Exit codes: 0 success, 1 parse or validation error, 2 precondition failure,
// 3 unsupported case.
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "gentle/ar.hpp"
#include "gentle/error.hpp"
#include "gentle/golden.hpp"
#include "gentle/homext.hpp"
#include "gentle/multiplication.hpp"
#include "gentle/oracle.hpp"
#include "gentle/parallel.hpp"
#include "gentle/random.hpp"
#include "gentle/typeb.hpp"
#include "json.hpp"

using namespace gentle;
using json = nlohmann::ordered_json;

namespace {

bool g_json = false;

json poly_json(const YPolynomial& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.ordered_terms()) terms.push_back({{"exponent", e}, {"coefficient", c}});
  return terms;
}

json cc_json(const LaurentCC& p) {
  json terms = json::array();
  for (const auto& [k, c] : p.ordered_terms()) terms.push_back({{"x", k.first}, {"y", k.second}, {"coefficient", c}});
  return terms;
}

json module_json(const Algebra& a, const ModuleSum& m) {
  return {{"expr", module_expr(a, m)}, {"stacked", stacked(a, m)}, {"dim", dim_vector(a, m)}};
}

void emit(const json& j, const std::string& text) {
  if (g_json) std::cout << j.dump(2) << "\n";
  else std::cout << text;
}

std::string line(const std::string& key, const std::string& value) { return key + ": " + value + "\n"; }

std::string mod_text(const Algebra& a, const ModuleSum& m) {
  return m.empty() ? "0" : module_expr(a, m) + "  [" + stacked(a, m) + "]";
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string violation_report(const std::vector<Violation>& vs) {
  std::string out;
  for (const auto& v : vs) out += v.axiom + ": " + v.witness + "\n";
  return out;
}

Algebra load_gentle(const std::string& path) {
  Algebra a = load_algebra(path);
  auto vs = a.validate();
  if (!vs.empty()) throw DomainError("not a gentle algebra\n" + violation_report(vs));
  return a;
}

Module one_module(const Algebra& a, const std::string& expr) {
  ModuleSum m = parse_module_expr(a, expr);
  if (m.summands.size() != 1) throw DomainError("expected one indecomposable module, got '" + expr + "'");
  return m.summands[0];
}

// "a-b" with the order kept (an oriented diameter).
OrientedDiameter parse_oriented(const std::string& text) {
  auto dash = text.find('-');
  if (dash == std::string::npos) throw ParseError("expected 'i-j', got '" + text + "'");
  try {
    return {std::stoi(text.substr(0, dash)), std::stoi(text.substr(dash + 1))};
  } catch (const std::exception&) {
    throw ParseError("expected 'i-j', got '" + text + "'");
  }
}

int cmd_validate(const std::string& path) {
  Algebra a = load_algebra(path);
  auto vs = a.validate();
  json j = {{"gentle", vs.empty()}, {"violations", json::array()}};
  for (const auto& v : vs) j["violations"].push_back({{"axiom", v.axiom}, {"witness", v.witness}});
  emit(j, vs.empty() ? "gentle\n" : "not gentle\n" + violation_report(vs));
  return vs.empty() ? 0 : 1;
}

int cmd_invariant(const std::string& which, const std::string& path, const std::string& expr) {
  Algebra a = load_gentle(path);
  ModuleSum m = parse_module_expr(a, expr);
  auto names = variable_names(a);
  if (which == "fpoly") {
    YPolynomial f = f_polynomial(a, m);
    emit({{"module", module_json(a, m)}, {"f", poly_json(f)}}, f.to_string(names) + "\n");
  } else if (which == "gvec") {
    GVector g = g_vector(a, m);
    emit({{"module", module_json(a, m)}, {"g", g}}, exponent_string(g) + "\n");
  } else {
    LaurentCC cc = cluster_character(a, m);
    emit({{"module", module_json(a, m)}, {"cc", cc_json(cc)}}, cc.to_string(names) + "\n");
  }
  return 0;
}

int cmd_tau(const std::string& path, const std::string& expr, bool inverse) {
  Algebra a = load_gentle(path);
  Module m = one_module(a, expr);
  ModuleSum r = single(a, inverse ? tau_inv(a, m) : tau(a, m));
  emit({{"module", module_json(a, single(a, m))}, {inverse ? "tau_inv" : "tau", module_json(a, r)}},
       mod_text(a, r) + "\n");
  return 0;
}

int cmd_ar_seq(const std::string& path, const std::string& expr, bool starting) {
  Algebra a = load_gentle(path);
  Module m = one_module(a, expr);
  if (starting && is_injective(a, m)) throw PreconditionError("module is injective: no almost split sequence starts at it");
  if (!starting && is_projective(a, m)) throw PreconditionError("module is projective: no almost split sequence ends at it");
  ARSequence s = starting ? ar_sequence(a, m) : ar_sequence_ending(a, m);
  ModuleSum l = single(a, s.left), r = single(a, s.right);
  emit({{"left", module_json(a, l)}, {"middle", module_json(a, s.middle)}, {"right", module_json(a, r)}},
       "0 -> " + mod_text(a, l) + " -> " + mod_text(a, s.middle) + " -> " + mod_text(a, r) + " -> 0\n");
  return 0;
}

int cmd_ext(const std::string& path, const std::string& from, const std::string& to) {
  Algebra a = load_gentle(path);
  Module s = one_module(a, from), x = one_module(a, to);
  auto basis = ext_basis(a, s, x);
  json j = {{"dimension", basis.size()}, {"basis", json::array()}};
  std::string text = line("dim Ext^1", std::to_string(basis.size()));
  for (size_t i = 0; i < basis.size(); ++i) {
    const ExtClass& e = basis[i];
    json c = {{"middle", module_json(a, e.middle)}};
    std::string t = "[" + std::to_string(i + 1) + "] ";
    if (e.kind == ExtClass::Kind::Arrow) {
      c["kind"] = "arrow";
      c["arrow"] = a.arrows[e.arrow].name;
      t += "arrow " + a.arrows[e.arrow].name;
    } else {
      c["kind"] = "overlap";
      c["overlap"] = to_expr(a, e.m);
      t += "overlap " + to_expr(a, e.m);
      auto name = [&](const std::optional<int>& k) { return k ? a.arrows[*k].name : std::string("-"); };
      c["flanks"] = {name(e.a), name(e.b), name(e.c), name(e.d)};
      t += " (flanks a=" + name(e.a) + " b=" + name(e.b) + " c=" + name(e.c) + " d=" + name(e.d) + ")";
    }
    j["basis"].push_back(c);
    text += t + ", middle " + mod_text(a, e.middle) + "\n";
  }
  emit(j, text);
  return 0;
}

int cmd_hom(const std::string& path, const std::string& from, const std::string& to) {
  Algebra a = load_gentle(path);
  ModuleSum x = parse_module_expr(a, from), y = parse_module_expr(a, to);
  int d = hom_dim(a, x, y);
  emit({{"dimension", d}}, std::to_string(d) + "\n");
  return 0;
}

int cmd_multiply(const std::string& path, const std::string& xs, const std::string& ss) {
  Algebra a = load_gentle(path);
  ModuleSum x = parse_module_expr(a, xs), s = parse_module_expr(a, ss);
  auto d = multiply(a, x, s);
  auto f = verify_decomposition(a, d);
  auto cc = cc_relation(a, d);
  auto kind = classify_sequence(a, d);
  auto names = variable_names(a);
  auto hnames = variable_names(d.host);
  std::string xi = d.xi.kind == ExtClass::Kind::Arrow ? "arrow " + a.arrows[d.xi.arrow].name
                                                      : "overlap " + to_expr(a, d.xi.m);
  json j = {{"xi", xi},
            {"y", module_json(a, d.y)},
            {"xbar", module_json(a, d.xbar)},
            {"sunder", module_json(a, single(a, d.sunder))},
            {"s_mod_sunder", module_json(a, d.s_mod_sunder)},
            {"m", module_json(d.host, d.m)},
            {"added_arrows", d.added_arrows},
            {"host_gentle", d.host.is_gentle()},
            {"f_identity", {{"holds", f.ok}, {"lhs", poly_json(f.lhs)}, {"rhs", poly_json(f.rhs)}}},
            {"cc_identity",
             {{"holds", cc.holds}, {"lhs", cc_json(cc.lhs)}, {"rhs", cc_json(cc.middle_term + cc.m_term)}}},
            {"classification", to_string(kind)}};
  std::string t;
  t += line("xi", xi);
  t += line("Y", mod_text(a, d.y));
  t += line("Xbar", mod_text(a, d.xbar));
  t += line("Sunder", mod_text(a, single(a, d.sunder)));
  t += line("S/Sunder", mod_text(a, d.s_mod_sunder));
  t += line("M", mod_text(d.host, d.m));
  std::string added;
  for (const auto& n : d.added_arrows) {
    const Arrow& ar = d.host.arrows[d.host.arrow_index(n)];
    added += (added.empty() ? "" : ", ") + n + ": " + d.host.vertices[ar.source] + " -> " + d.host.vertices[ar.target];
  }
  t += line("added arrows", added.empty() ? "none" : added + (d.host.is_gentle() ? " (host gentle)" : " (host not gentle)"));
  t += line("F_X F_S", f.lhs.to_string(names));
  t += line("F_Y + y^dim(Sunder) F_M", f.rhs.to_string(hnames));
  t += line("F-identity", f.ok ? "holds" : "FAILS");
  t += line("CC(X) CC(S)", cc.lhs.to_string(names));
  t += line("CC right side", (cc.middle_term + cc.m_term).to_string(names));
  t += line("CC-identity", cc.holds ? "holds" : (cc.m_g_available ? "FAILS" : "g_M unavailable over the host"));
  t += line("classification", to_string(kind));
  emit(j, t);
  return 0;
}

int cmd_polygon(int m, const std::string& diagonals) {
  Triangulation t = parse_triangulation(m, diagonals);
  Algebra a = triangulation_algebra(t);
  emit({{"dsl", a.to_dsl()}}, a.to_dsl());
  return 0;
}

int cmd_typeb(int m, const std::string& file, const std::string& orbit_text, const std::string& diameter) {
  Triangulation t = load_triangulation(file);
  if (m > 0 && t.m != m) throw DomainError("--m " + std::to_string(m) + " disagrees with the file's polygon " + std::to_string(t.m));
  std::optional<OrientedDiameter> d;
  if (!diameter.empty()) d = parse_oriented(diameter);
  TypeBSetup s = typeb_setup(t, d);
  Diagonal g = parse_diagonal(orbit_text);
  std::set<Diagonal> orb{normalize(g), normalize(theta(t.m, g))};
  std::vector<Diagonal> orbit(orb.begin(), orb.end());
  for (const auto& o : orbit)
    if (s.t.index_of(o) >= 0) throw DomainError("the orbit of " + to_string(g) + " lies in the triangulation");
  ModuleSum n = orbit_module(s, orbit);
  auto v = typeb_variable(s, n);
  auto names = variable_names(s.abar);
  std::string orbit_str;
  for (const auto& o : orbit) orbit_str += (orbit_str.empty() ? "" : " ") + to_string(o);
  json j = {{"orbit", orbit_str},
            {"n", module_json(s.aprime, n)},
            {"type", to_string(symmetric_type(s, n))},
            {"restricted", module_json(s.abar, v.restricted)},
            {"f", poly_json(v.f)},
            {"g", v.g},
            {"split_case", v.split_case}};
  std::string text = line("orbit", orbit_str) + line("N", mod_text(s.aprime, n)) +
                     line("type", to_string(symmetric_type(s, n))) + line("Res(N)", mod_text(s.abar, v.restricted)) +
                     line("F_N", v.f.to_string(names)) + line("g_N", exponent_string(v.g));
  if (v.witness) {
    const auto& w = *v.witness;
    j["witness"] = {{"x", module_json(s.aprime, w.x)},     {"s", module_json(s.aprime, w.s)},
                    {"y", module_json(s.aprime, w.y)},     {"sunder", module_json(s.aprime, single(s.aprime, w.sunder))},
                    {"m", module_json(w.host, w.m)},       {"shift", v.shift}};
    text += line("case", "(ii), generating extension L -> G1 + G2 -> nabla L");
    text += line("L", mod_text(s.aprime, w.x)) + line("nabla L", mod_text(s.aprime, w.s));
    text += line("G1 + G2", mod_text(s.aprime, w.y)) + line("Sunder", mod_text(s.aprime, single(s.aprime, w.sunder)));
    text += line("M", mod_text(w.host, w.m)) + line("Res dim Sunder", exponent_string(v.shift));
  } else {
    text += line("case", "(i)");
  }
  emit(j, text);
  return 0;
}

int cmd_oracle_enumerate(const std::string& file, int cap) {
  IntMatrix b = parse_matrix(read_file(file));
  auto e = enumerate_variables(b, cap);
  std::vector<std::string> names;
  for (size_t i = 0; i < b.size(); ++i) names.push_back(std::to_string(i + 1));
  json vars = json::array();
  std::string text = line("seeds", std::to_string(e.seeds)) + line("variables", std::to_string(e.variables.size()));
  for (const auto& v : e.variables) {
    vars.push_back({{"g", v.g}, {"f", poly_json(v.f)}});
    text += "g = " + exponent_string(v.g) + "  F = " + v.f.to_string(names) + "\n";
  }
  emit({{"seeds", e.seeds}, {"count", e.variables.size()}, {"variables", vars}}, text);
  return 0;
}

// Compares the string modules of a representation-finite gentle algebra, together with
// the initial variables, against the closure of its exchange matrix.
int cmd_oracle_check(const std::string& path, int cap) {
  Algebra a = load_gentle(path);
  if (!all_bands(a, 2 * a.num_arrows()).empty())
    throw UnsupportedError("the algebra has band modules; the cross-check needs finite type");
  std::set<ClusterVariable> mods;
  for (const auto& w : all_strings(a, a.num_arrows())) {
    ModuleSum m = single(a, string_module(a, w));
    mods.insert({f_polynomial(a, m), g_vector(a, m)});
  }
  for (int i = 0; i < a.num_vertices(); ++i) {
    GVector g(a.num_vertices(), 0);
    g[i] = 1;
    mods.insert({YPolynomial::one(a.num_vertices()), g});
  }
  auto e = enumerate_variables(a.exchange_matrix(), cap);
  int missing = 0, extra = 0;
  for (const auto& v : e.variables) missing += !mods.count(v);
  for (const auto& v : mods) extra += !e.variables.count(v);
  bool ok = missing == 0 && extra == 0;
  emit({{"modules_plus_initial", mods.size()},
        {"oracle_variables", e.variables.size()},
        {"seeds", e.seeds},
        {"only_in_oracle", missing},
        {"only_in_modules", extra},
        {"match", ok}},
       line("string modules + initial", std::to_string(mods.size())) +
           line("mutation closure", std::to_string(e.variables.size()) + " variables, " + std::to_string(e.seeds) + " seeds") +
           line("result", ok ? "match" : "MISMATCH (" + std::to_string(missing) + " only in closure, " +
                                             std::to_string(extra) + " only in modules)"));
  return ok ? 0 : 1;
}

int cmd_selftest(bool fuzz, std::uint64_t seed, int algebras, int only, bool verbose) {
  PropertyOptions opt;
  opt.seed = seed;
  opt.algebras = algebras;
  opt.threads = configured_threads();
  std::vector<CriterionResult> results;
  auto want = [&](int id) { return only == 0 || only == id; };
  if (want(1)) results.push_back(criterion_f_polynomials());
  if (want(2)) results.push_back(criterion_grassmannian_table());
  if (want(3)) results.push_back(criterion_g_vectors());
  if (want(4)) results.push_back(criterion_multiplication_examples());
  if (want(5)) results.push_back(criterion_octagon_exchange());
  if (want(6)) results.push_back(criterion_hereditary_a5());
  if (want(7)) results.push_back(criterion_typeb_final_example());
  if ((fuzz && only == 0) || only == 8) results.push_back(criterion_property_suite(opt));
  if (want(9)) results.push_back(criterion_oracle_crosscheck());
  if (want(10)) results.push_back(criterion_skein_and_columns());
  if (results.empty()) throw DomainError("no criterion with id " + std::to_string(only));
  int failed = 0;
  json j = json::array();
  std::string text;
  char buf[256];
  for (const auto& r : results) {
    failed += !r.pass();
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    j.push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass()}, {"checks", checks}});
    std::snprintf(buf, sizeof buf, "[%s] criterion %2d: %s\n", r.pass() ? "PASS" : "FAIL", r.id, r.title.c_str());
    text += buf;
    for (const auto& c : r.checks)
      if (verbose || !c.pass) text += std::string("    ") + (c.pass ? "ok   " : "FAIL ") + c.name + (c.detail.empty() ? "" : ": " + c.detail) + "\n";
  }
  emit(j, text);
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants and module multiplication for gentle algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::string file, expr, from, to, xs, ss, diagonals, tri, orbit, diameter, matrix;
  int m = 0, cap = 100000, algebras = 500, only = 0;
  std::uint64_t seed = 1;
  bool starting = false, inverse = false, fuzz = false, verbose = false;
  int rc = 0;

  auto* validate = app.add_subcommand("validate", "Check the gentle axioms");
  validate->add_option("file", file, "Algebra file")->required();
  validate->callback([&] { rc = cmd_validate(file); });

  for (const char* name : {"fpoly", "gvec", "cc"}) {
    std::string n = name;
    auto* sub = app.add_subcommand(n, n == "fpoly" ? "F-polynomial" : n == "gvec" ? "g-vector" : "Cluster character");
    sub->add_option("file", file, "Algebra file")->required();
    sub->add_option("--module", expr, "Module expression")->required();
    sub->callback([&, n] { rc = cmd_invariant(n, file, expr); });
  }

  auto* tau_cmd = app.add_subcommand("tau", "Auslander-Reiten translate");
  tau_cmd->add_option("file", file, "Algebra file")->required();
  tau_cmd->add_option("--module", expr, "Module expression")->required();
  tau_cmd->add_flag("--inverse", inverse, "Apply the inverse translate");
  tau_cmd->callback([&] { rc = cmd_tau(file, expr, inverse); });

  auto* ar = app.add_subcommand("ar-seq", "Almost split sequence ending at the module");
  ar->add_option("file", file, "Algebra file")->required();
  ar->add_option("--module", expr, "Module expression")->required();
  ar->add_flag("--starting", starting, "Sequence starting at the module instead");
  ar->callback([&] { rc = cmd_ar_seq(file, expr, starting); });

  auto* ext = app.add_subcommand("ext", "Basis of Ext^1(S, X)");
  ext->add_option("file", file, "Algebra file")->required();
  ext->add_option("--from", from, "S expression")->required();
  ext->add_option("--to", to, "X expression")->required();
  ext->callback([&] { rc = cmd_ext(file, from, to); });

  auto* hom = app.add_subcommand("hom", "dim Hom(X, Y)");
  hom->add_option("file", file, "Algebra file")->required();
  hom->add_option("--from", from, "X expression")->required();
  hom->add_option("--to", to, "Y expression")->required();
  hom->callback([&] { rc = cmd_hom(file, from, to); });

  auto* mul = app.add_subcommand("multiply", "Generating extension of S by X and its decomposition");
  mul->add_option("file", file, "Algebra file")->required();
  mul->add_option("--x", xs, "Submodule X")->required();
  mul->add_option("--s", ss, "Quotient S")->required();
  mul->callback([&] { rc = cmd_multiply(file, xs, ss); });

  auto* poly = app.add_subcommand("polygon", "Algebra of a polygon triangulation");
  poly->add_option("--m", m, "Number of polygon vertices")->required();
  poly->add_option("--diagonals", diagonals, "Diagonals, e.g. \"0-2,0-3\"")->required();
  poly->callback([&] { rc = cmd_polygon(m, diagonals); });

  auto* typeb = app.add_subcommand("typeb", "Type-B cluster variable of a half-turn orbit");
  typeb->add_option("--m", m, "Number of polygon vertices");
  typeb->add_option("--triangulation", tri, "Triangulation file")->required();
  typeb->add_option("--orbit", orbit, "A diagonal of the orbit, e.g. \"1-4\"")->required();
  typeb->add_option("--diameter", diameter, "Oriented diameter \"from-to\"");
  typeb->callback([&] { rc = cmd_typeb(m, tri, orbit, diameter); });

  auto* oracle = app.add_subcommand("oracle", "Seed mutation oracle");
  oracle->require_subcommand(1);
  auto* en = oracle->add_subcommand("enumerate", "All cluster variables of a finite-type matrix");
  en->add_option("--matrix", matrix, "Matrix file")->required();
  en->add_option("--cap", cap, "Seed cap");
  en->callback([&] { rc = cmd_oracle_enumerate(matrix, cap); });
  auto* chk = oracle->add_subcommand("check", "String modules against the mutation closure");
  chk->add_option("file", file, "Algebra file")->required();
  chk->add_option("--cap", cap, "Seed cap");
  chk->callback([&] { rc = cmd_oracle_check(file, cap); });

  auto* self = app.add_subcommand("selftest", "Replay the bundled examples");
  self->add_flag("--fuzz", fuzz, "Include the randomized property suite");
  self->add_option("--seed", seed, "Seed of the property suite");
  self->add_option("--algebras", algebras, "Random algebras in the property suite");
  self->add_option("--only", only, "Run one criterion (1-10)");
  self->add_flag("-v,--verbose", verbose, "Print every check");
  self->callback([&] { rc = cmd_selftest(fuzz, seed, algebras, only, verbose); });

  app.parse_complete_callback([&] { g_json = format == "json"; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::string first = argc > 1 ? argv[1] : "";
    bool known = first.empty() || first[0] == '-';
    for (const auto* sub : app.get_subcommands([](const CLI::App*) { return true; })) known = known || sub->get_name() == first;
    if (known) std::cerr << "error: " << e.what() << "\n\n" << app.help();
    else std::cerr << "error: unknown subcommand '" << first << "'\n\n" << app.help();
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedError& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
