#include "gentle/typeb.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "gentle/error.hpp"

namespace gentle {

namespace {

int mod(int x, int m) { return ((x % m) + m) % m; }

// x strictly inside the counterclockwise arc from a to b.
bool strictly_between(int x, int a, int b, int m) {
  int dx = mod(x - a, m), db = mod(b - a, m);
  return dx > 0 && dx < db;
}

std::string arrow_name(int k) {
  std::string s(1, static_cast<char>('a' + k % 26));
  if (k >= 26) s += std::to_string(k / 26 + 1);
  return s;
}

void check_diameter(int m, const OrientedDiameter& d) {
  if (m % 2 != 0) throw DomainError("type-B constructions need a polygon with an even number of vertices");
  if (d.from < 0 || d.to < 0 || d.from >= m || d.to >= m || mod(d.to - d.from, m) != m / 2)
    throw DomainError("d is not a diameter of the " + std::to_string(m) + "-gon");
}

int find_arrow(const Algebra& alg, int s, int t) {
  for (int a : alg.arrows_from(s))
    if (alg.arrows[a].target == t) return a;
  return -1;
}

// Vertices of the arc (p, q) strictly on the side containing p, for a diagonal (u, v).
int side_size(int m, const Diagonal& g, int p) {
  return strictly_between(p, g.a, g.b, m) ? g.b - g.a - 1 : m - (g.b - g.a) - 1;
}

YPolynomial ypow(const Exponent& e) { return YPolynomial::monomial(e); }

GVector dscale(GVector g) {
  g.back() *= 2;
  return g;
}

}  // namespace

Diagonal normalize(Diagonal d) {
  if (d.a > d.b) std::swap(d.a, d.b);
  return d;
}

std::string to_string(const Diagonal& d) { return std::to_string(d.a) + "-" + std::to_string(d.b); }

Diagonal parse_diagonal(const std::string& text) {
  auto dash = text.find('-');
  if (dash == std::string::npos) throw ParseError("expected a diagonal \"i-j\", got \"" + text + "\"");
  try {
    size_t used = 0;
    int a = std::stoi(text.substr(0, dash), &used);
    if (used != dash) throw ParseError("bad vertex in \"" + text + "\"");
    std::string rest = text.substr(dash + 1);
    int b = std::stoi(rest, &used);
    if (used != rest.size()) throw ParseError("bad vertex in \"" + text + "\"");
    return normalize({a, b});
  } catch (const std::logic_error&) {
    throw ParseError("expected a diagonal \"i-j\", got \"" + text + "\"");
  }
}

bool is_boundary(int m, const Diagonal& d) {
  int k = mod(d.b - d.a, m);
  return k == 1 || k == m - 1;
}

bool crosses(int m, const Diagonal& x, const Diagonal& y) {
  if (x.a == y.a || x.a == y.b || x.b == y.a || x.b == y.b) return false;
  return strictly_between(y.a, x.a, x.b, m) != strictly_between(y.b, x.a, x.b, m);
}

std::vector<Diagonal> all_diagonals(int m) {
  std::vector<Diagonal> out;
  for (int a = 0; a < m; ++a)
    for (int b = a + 2; b < m; ++b)
      if (!is_boundary(m, {a, b})) out.push_back({a, b});
  return out;
}

int Triangulation::index_of(const Diagonal& d) const {
  Diagonal n = normalize(d);
  for (size_t i = 0; i < diagonals.size(); ++i)
    if (diagonals[i] == n) return static_cast<int>(i);
  return -1;
}

namespace {

// Triangulations of the sub-polygon on vertices lo..hi (consecutive labels).
std::vector<std::vector<Diagonal>> triangulate(int lo, int hi, int m) {
  if (hi - lo < 2) return {{}};
  std::vector<std::vector<Diagonal>> out;
  for (int k = lo + 1; k < hi; ++k) {
    auto left = triangulate(lo, k, m), right = triangulate(k, hi, m);
    for (const auto& l : left)
      for (const auto& r : right) {
        std::vector<Diagonal> ds = l;
        ds.insert(ds.end(), r.begin(), r.end());
        for (Diagonal e : {Diagonal{lo, k}, Diagonal{k, hi}})
          if (!is_boundary(m, e)) ds.push_back(e);
        out.push_back(std::move(ds));
      }
  }
  return out;
}

}  // namespace

std::vector<Triangulation> all_triangulations(int m) {
  std::vector<Triangulation> out;
  for (auto& ds : triangulate(0, m - 1, m)) {
    std::sort(ds.begin(), ds.end());
    out.push_back({m, ds});
  }
  return out;
}

void check_triangulation(const Triangulation& t) {
  if (t.m < 4) throw DomainError("a polygon needs at least 4 vertices");
  std::set<Diagonal> seen;
  for (const auto& d : t.diagonals) {
    if (d.a < 0 || d.b >= t.m || d.a >= d.b) throw DomainError("vertex out of range in " + to_string(d));
    if (is_boundary(t.m, d)) throw DomainError(to_string(d) + " is a boundary edge");
    if (!seen.insert(d).second) throw DomainError("repeated diagonal " + to_string(d));
  }
  for (size_t i = 0; i < t.diagonals.size(); ++i)
    for (size_t j = i + 1; j < t.diagonals.size(); ++j)
      if (crosses(t.m, t.diagonals[i], t.diagonals[j]))
        throw DomainError("diagonals " + to_string(t.diagonals[i]) + " and " + to_string(t.diagonals[j]) +
                          " cross");
  if (static_cast<int>(t.diagonals.size()) != t.m - 3)
    throw DomainError("a triangulation of the " + std::to_string(t.m) + "-gon has " + std::to_string(t.m - 3) +
                      " diagonals, got " + std::to_string(t.diagonals.size()));
}

Triangulation parse_triangulation(int m, const std::string& list) {
  Triangulation t;
  t.m = m;
  std::string s = list;
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) t.diagonals.push_back(parse_diagonal(tok));
  check_triangulation(t);
  return t;
}

Triangulation parse_triangulation_file(const std::string& text) {
  std::istringstream is(text);
  std::string line, list;
  int m = 0, lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    if (key == "polygon") {
      if (!(ls >> m)) throw ParseError("expected a vertex count", lineno, 1);
    } else if (key == "diagonals") {
      std::string rest;
      std::getline(ls, rest);
      list += " " + rest;
    } else {
      throw ParseError("unknown keyword \"" + key + "\"", lineno, 1);
    }
  }
  if (m == 0) throw ParseError("missing \"polygon <m>\" line");
  return parse_triangulation(m, list);
}

Triangulation load_triangulation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_triangulation_file(ss.str());
}

Algebra triangulation_algebra(const Triangulation& t) {
  check_triangulation(t);
  const int m = t.m;
  auto edge = [&](int x, int y) { return is_boundary(m, normalize({x, y})) || t.index_of({x, y}) >= 0; };
  // each triangle as its diagonal indices in counterclockwise side order (-1 for boundary sides)
  std::vector<std::vector<int>> triangles;
  for (int p = 0; p < m; ++p)
    for (int q = p + 1; q < m; ++q)
      for (int r = q + 1; r < m; ++r)
        if (edge(p, q) && edge(q, r) && edge(p, r)) {
          std::vector<int> sides;
          for (Diagonal s : {Diagonal{p, q}, Diagonal{q, r}, Diagonal{p, r}})
            sides.push_back(is_boundary(m, s) ? -1 : t.index_of(s));
          triangles.push_back(sides);
        }
  auto min_index = [](const std::vector<int>& s) {
    int best = 1 << 30;
    for (int x : s)
      if (x >= 0) best = std::min(best, x);
    return best;
  };
  std::stable_sort(triangles.begin(), triangles.end(),
                   [&](const auto& x, const auto& y) { return min_index(x) < min_index(y); });

  Algebra alg;
  for (size_t i = 0; i < t.diagonals.size(); ++i) alg.add_vertex(std::to_string(i + 1));
  int count = 0;
  for (const auto& sides : triangles) {
    std::vector<std::pair<int, int>> arrows;
    for (int k = 0; k < 3; ++k)
      if (sides[k] >= 0 && sides[(k + 1) % 3] >= 0) arrows.push_back({sides[k], sides[(k + 1) % 3]});
    if (arrows.empty()) continue;
    auto first = std::min_element(arrows.begin(), arrows.end());
    std::rotate(arrows.begin(), first, arrows.end());
    std::vector<int> ids;
    for (auto [s, e] : arrows) ids.push_back(alg.add_arrow(arrow_name(count++), s, e));
    if (ids.size() == 3)
      for (int k = 0; k < 3; ++k) alg.add_relation(ids[k], ids[(k + 1) % 3]);
  }
  alg.compute_signs();
  return alg;
}

Module arc_module(const Triangulation& t, const Algebra& alg, const Diagonal& g0) {
  Diagonal g = normalize(g0);
  if (is_boundary(t.m, g) || t.index_of(g) >= 0) return Module{};
  std::vector<int> crossed;
  for (size_t i = 0; i < t.diagonals.size(); ++i)
    if (crosses(t.m, g, t.diagonals[i])) crossed.push_back(static_cast<int>(i));
  std::sort(crossed.begin(), crossed.end(), [&](int x, int y) {
    return side_size(t.m, t.diagonals[x], g.a) < side_size(t.m, t.diagonals[y], g.a);
  });
  if (crossed.size() == 1) return string_module(alg, StringWord::trivial(crossed[0], 1));
  Letters letters;
  for (size_t k = 0; k + 1 < crossed.size(); ++k) {
    int s = crossed[k], e = crossed[k + 1];
    if (int a = find_arrow(alg, s, e); a >= 0) {
      letters.push_back({a, true});
    } else if (int b = find_arrow(alg, e, s); b >= 0) {
      letters.push_back({b, false});
    } else {
      throw std::logic_error("consecutive crossings of " + to_string(g) + " share no triangle");
    }
  }
  return string_module(alg, StringWord::path(letters));
}

LaurentCC arc_variable(const Triangulation& t, const Algebra& alg, const Diagonal& g) {
  const int n = alg.num_vertices();
  Exponent zero(n, 0);
  if (is_boundary(t.m, normalize(g))) return LaurentCC::monomial(zero, zero);
  if (int i = t.index_of(g); i >= 0) {
    Exponent x = zero;
    x[i] = 1;
    return LaurentCC::monomial(x, zero);
  }
  return cluster_character(alg, single(alg, arc_module(t, alg, g)));
}

DimVector lamination_dvector(const Triangulation& t, const Diagonal& g1, const Diagonal& g2) {
  const int m2 = 2 * t.m;
  // boundary midpoints and vertices on a circle of 2m positions; a lamination
  // ending on a boundary edge counts as crossing it
  auto separates = [&](const Diagonal& g, int x, int y) {
    return strictly_between(x, 2 * g.a, 2 * g.b, m2) != strictly_between(y, 2 * g.a, 2 * g.b, m2);
  };
  DimVector d(t.diagonals.size(), 0);
  for (size_t i = 0; i < t.diagonals.size(); ++i) {
    int x = mod(2 * t.diagonals[i].a - 1, m2), y = mod(2 * t.diagonals[i].b - 1, m2);
    d[i] = separates(g1, x, y) && separates(g2, x, y) ? 1 : 0;
  }
  return d;
}

SkeinCheck skein_relation(const Triangulation& t, const Algebra& alg, const Diagonal& x, const Diagonal& y) {
  if (!crosses(t.m, x, y)) throw PreconditionError("the skein relation needs crossing diagonals");
  // label the endpoints a, c, b, d in counterclockwise order
  int a = x.a, b = x.b, c = y.a, d = y.b;
  if (!strictly_between(c, a, b, t.m)) std::swap(c, d);
  auto v = [&](int p, int q) { return arc_variable(t, alg, {p, q}); };
  auto coeff = [&](const Diagonal& p, const Diagonal& q) {
    return LaurentCC::monomial(Exponent(alg.num_vertices(), 0), lamination_dvector(t, p, q));
  };
  SkeinCheck r;
  r.lhs = v(a, b) * v(c, d);
  r.rhs = coeff({a, c}, {b, d}) * v(a, d) * v(b, c) + coeff({a, d}, {b, c}) * v(a, c) * v(b, d);
  r.holds = r.lhs == r.rhs;
  return r;
}

Diagonal theta(int m, const Diagonal& g) { return normalize({mod(g.a + m / 2, m), mod(g.b + m / 2, m)}); }

std::vector<std::vector<Diagonal>> theta_orbits(int m) {
  std::vector<std::vector<Diagonal>> out;
  std::set<Diagonal> seen;
  for (const auto& g : all_diagonals(m)) {
    if (seen.count(g)) continue;
    Diagonal h = theta(m, g);
    seen.insert(g);
    seen.insert(h);
    out.push_back(h == g ? std::vector<Diagonal>{g} : std::vector<Diagonal>{g, h});
  }
  return out;
}

Diagonal rho(int m, const OrientedDiameter& d, const Diagonal& g) {
  check_diameter(m, d);
  return normalize({mod(2 * d.from - g.a, m), mod(2 * d.from - g.b, m)});
}

Diagonal fd_transform(int m, const OrientedDiameter& d, const Diagonal& g) {
  check_diameter(m, d);
  auto right = [&](int x) { return strictly_between(x, d.from, d.to, m); };
  auto closed_right = [&](int x) { return right(x) || x == d.from || x == d.to; };
  if (!right(g.a) && !right(g.b)) return normalize(g);
  auto image = [&](int x) { return closed_right(x) ? mod(d.from + d.to - x, m) : x; };
  return normalize({image(g.a), image(g.b)});
}

TypeBSetup typeb_setup(const Triangulation& t0, std::optional<OrientedDiameter> dopt) {
  check_triangulation(t0);
  const int m = t0.m;
  if (m % 2 != 0 || m < 6) throw DomainError("type-B triangulations live on a polygon with 2n+2 >= 6 vertices");
  TypeBSetup s;
  s.n = m / 2 - 1;
  std::set<Diagonal> set(t0.diagonals.begin(), t0.diagonals.end());
  for (const auto& g : t0.diagonals)
    if (!set.count(theta(m, g))) throw DomainError("the triangulation is not invariant under the half-turn");
  std::vector<Diagonal> diameters;
  for (const auto& g : t0.diagonals)
    if (g.b - g.a == m / 2) diameters.push_back(g);
  if (diameters.size() != 1) throw DomainError("expected exactly one diameter in the triangulation");
  if (dopt) {
    check_diameter(m, *dopt);
    if (normalize({dopt->from, dopt->to}) != diameters[0])
      throw DomainError("the chosen diameter is not in the triangulation");
    s.d = *dopt;
  } else {
    s.d = {diameters[0].a, diameters[0].b};
  }
  auto left = [&](int x) { return strictly_between(x, s.d.to, s.d.from, m) || x == s.d.to || x == s.d.from; };
  std::vector<Diagonal> lefts;
  for (const auto& g : t0.diagonals)
    if (g != diameters[0] && left(g.a) && left(g.b)) lefts.push_back(g);
  if (static_cast<int>(lefts.size()) != s.n - 1) throw std::logic_error("unbalanced half-turn invariant triangulation");
  s.t.m = m;
  s.t.diagonals = lefts;
  s.t.diagonals.push_back(diameters[0]);
  for (int i = s.n - 2; i >= 0; --i) s.t.diagonals.push_back(theta(m, lefts[i]));
  s.tprime.m = m;
  for (const auto& g : s.t.diagonals) s.tprime.diagonals.push_back(fd_transform(m, s.d, g));
  s.aprime = triangulation_algebra(s.tprime);

  const int k = s.aprime.num_vertices();
  s.sigma_v.assign(k, -1);
  for (int i = 0; i < k; ++i) {
    s.sigma_v[i] = s.tprime.index_of(rho(m, s.d, s.tprime.diagonals[i]));
    if (s.sigma_v[i] < 0) throw std::logic_error("reflected triangulation is not invariant");
  }
  s.sigma_a.assign(s.aprime.num_arrows(), -1);
  for (int a = 0; a < s.aprime.num_arrows(); ++a) {
    const Arrow& ar = s.aprime.arrows[a];
    s.sigma_a[a] = find_arrow(s.aprime, s.sigma_v[ar.target], s.sigma_v[ar.source]);
    if (s.sigma_a[a] < 0) throw std::logic_error("no arrow matches the reflection of " + ar.name);
  }
  for (const auto& [a, b] : s.aprime.relations)
    if (!s.aprime.has_relation(s.sigma_a[b], s.sigma_a[a]))
      throw std::logic_error("the reflection does not preserve the relations");
  s.abar = triangulation_algebra(restricted_triangulation(s));
  return s;
}

RestrictedPolygon restricted_polygon(const TypeBSetup& s) {
  const int m = s.t.m;
  RestrictedPolygon r;
  r.m = s.n + 3;
  r.image.assign(m, s.n + 2);
  for (int k = 0; k <= s.n + 1; ++k) r.image[mod(s.d.to + k, m)] = k;
  return r;
}

std::vector<Diagonal> restrict_diagonals(const TypeBSetup& s, const std::vector<Diagonal>& ds) {
  RestrictedPolygon r = restricted_polygon(s);
  std::set<Diagonal> out;
  for (const auto& g : ds) {
    Diagonal h = normalize({r.image[g.a], r.image[g.b]});
    if (h.a != h.b && !is_boundary(r.m, h)) out.insert(h);
  }
  return {out.begin(), out.end()};
}

Triangulation restricted_triangulation(const TypeBSetup& s) {
  RestrictedPolygon r = restricted_polygon(s);
  Triangulation t;
  t.m = r.m;
  for (int i = 0; i < s.n; ++i) {
    const Diagonal& g = s.t.diagonals[i];
    t.diagonals.push_back(normalize({r.image[g.a], r.image[g.b]}));
  }
  check_triangulation(t);
  return t;
}

ModuleSum restrict_module(const TypeBSetup& s, const ModuleSum& msum) {
  std::vector<Module> parts;
  auto flush = [&](Letters& run, int vertex) {
    if (vertex < 0) return;
    parts.push_back(run.empty() ? string_module(s.abar, StringWord::trivial(vertex, 1))
                                : string_module(s.abar, StringWord::path(run)));
    run.clear();
  };
  for (const auto& mod_ : msum.summands) {
    if (mod_.is_band()) throw UnsupportedError("restriction of band modules");
    auto nodes = word_nodes(s.aprime, mod_.word);
    Letters run;
    int start = -1;  // first vertex of the current run, -1 when outside
    for (size_t j = 0; j < nodes.size(); ++j) {
      bool inside = nodes[j] < s.n;
      if (!inside) {
        flush(run, start);
        start = -1;
        continue;
      }
      if (start < 0) {
        start = nodes[j];
      } else {
        const Letter& x = mod_.word.letters[j - 1];
        const Arrow& ar = s.aprime.arrows[x.arrow];
        int a = find_arrow(s.abar, ar.source, ar.target);
        if (a < 0) throw std::logic_error("arrow " + ar.name + " has no restriction");
        run.push_back({a, x.direct});
      }
    }
    flush(run, start);
  }
  return make_sum(s.abar, std::move(parts));
}

std::vector<int> restrict_vector(const TypeBSetup& s, const std::vector<int>& v) {
  return std::vector<int>(v.begin(), v.begin() + std::min<size_t>(s.n, v.size()));
}

Module nabla(const TypeBSetup& s, const Module& m) {
  if (m.is_zero()) return m;
  if (m.word.is_trivial()) return string_module(s.aprime, StringWord::trivial(s.sigma_v[m.word.vertex], 1));
  Letters w;
  for (const auto& x : m.word.letters) w.push_back({s.sigma_a[x.arrow], !x.direct});
  return m.is_band() ? band_module(s.aprime, w) : string_module(s.aprime, StringWord::path(w));
}

ModuleSum nabla(const TypeBSetup& s, const ModuleSum& m) {
  std::vector<Module> parts;
  for (const auto& x : m.summands) parts.push_back(nabla(s, x));
  return make_sum(s.aprime, std::move(parts));
}

std::string to_string(SymmetricType t) {
  switch (t) {
    case SymmetricType::I: return "I";
    case SymmetricType::S: return "S";
    case SymmetricType::R: return "R";
  }
  return "?";
}

SymmetricType symmetric_type(const TypeBSetup& s, const ModuleSum& m) {
  const auto& p = m.summands;
  if (p.size() == 1 && nabla(s, p[0]) == p[0]) return SymmetricType::I;
  if (p.size() == 2 && nabla(s, p[0]) == p[1]) return p[0] == p[1] ? SymmetricType::R : SymmetricType::S;
  throw DomainError("module is not orthogonal indecomposable: " + module_expr(s.aprime, m));
}

ModuleSum orbit_module(const TypeBSetup& s, const std::vector<Diagonal>& orbit) {
  std::set<Diagonal> images;
  for (const auto& g : orbit) images.insert(fd_transform(s.t.m, s.d, normalize(g)));
  std::vector<Module> parts;
  for (const auto& g : images) parts.push_back(arc_module(s.tprime, s.aprime, g));
  return make_sum(s.aprime, std::move(parts));
}

TypeBVariable typeb_variable(const TypeBSetup& s, const ModuleSum& nsum) {
  SymmetricType type = symmetric_type(s, nsum);
  TypeBVariable r;
  r.restricted = restrict_module(s, nsum);
  YPolynomial fres = f_polynomial(s.abar, r.restricted);
  GVector gres = r.restricted.empty() ? GVector(s.n, 0) : g_vector(s.abar, r.restricted);
  if (r.restricted.summands.size() <= 1) {
    r.f = fres;
    r.g = dscale(gres);
    if (dim_vector(s.aprime, nsum)[s.n - 1] != 0) r.g[s.n - 1] += 1;
    return r;
  }
  if (type != SymmetricType::S) throw std::logic_error("restriction splits a module that is not L + nabla L");
  r.split_case = true;
  ModuleSum l = single(s.aprime, nsum.summands[0]), nl = single(s.aprime, nsum.summands[1]);
  if (ext_dimension(s.aprime, nl, l) != 1) std::swap(l, nl);
  if (ext_dimension(s.aprime, nl, l) != 1)
    throw PreconditionError("Ext^1 between the two halves is not one-dimensional", ext_dimension(s.aprime, nl, l));
  MultiplicationData d = multiply(s.aprime, l, nl);
  if (!d.host_is_original) throw std::logic_error("type-B extension left the triangulation algebra");
  for (const auto& gpart : d.y.summands)
    if (nabla(s, gpart) != gpart) throw std::logic_error("middle term summand is not nabla-invariant");
  if (nabla(s, d.m) != d.m) throw std::logic_error("the minimal extension is not nabla-invariant");
  r.shift = restrict_vector(s, dim_vector(s.aprime, d.sunder));
  r.f = fres - ypow(r.shift) * f_polynomial(s.abar, restrict_module(s, d.m));
  gres[s.n - 1] += 1;
  r.g = dscale(gres);
  r.witness = std::move(d);
  return r;
}

TypeBVariable typeb_variable_geometric(const TypeBSetup& s, const std::vector<Diagonal>& orbit) {
  Triangulation tb = restricted_triangulation(s);
  RestrictedPolygon rp = restricted_polygon(s);
  auto pieces = restrict_diagonals(s, orbit);
  const Diagonal dbar = tb.diagonals[s.n - 1];
  TypeBVariable r;
  auto arc = [&](const Diagonal& g) { return single(s.abar, arc_module(tb, s.abar, g)); };
  if (pieces.size() == 1) {
    ModuleSum l = arc(pieces[0]);
    r.restricted = l;
    r.f = f_polynomial(s.abar, l);
    r.g = dscale(l.empty() ? GVector(s.n, 0) : g_vector(s.abar, l));
    if (crosses(tb.m, pieces[0], dbar)) r.g[s.n - 1] += 1;
    return r;
  }
  if (pieces.size() != 2) throw std::logic_error("unexpected restriction of a half-turn orbit");
  r.split_case = true;
  // the left endpoints of the two orbit diagonals
  std::vector<int> ends;
  for (const auto& g : orbit)
    for (int x : {g.a, g.b})
      if (rp.image[x] != s.n + 2 && x != s.d.from && x != s.d.to) ends.push_back(rp.image[x]);
  if (ends.size() != 2) throw std::logic_error("orbit diagonals do not cross the diameter");
  Diagonal inner = normalize({ends[0], ends[1]});
  YPolynomial finner = (inner.a == inner.b || is_boundary(tb.m, inner) || tb.index_of(inner) >= 0)
                           ? YPolynomial::one(s.n)
                           : f_polynomial(s.abar, arc(inner));
  r.restricted = direct_sum(s.abar, arc(pieces[0]), arc(pieces[1]));
  r.shift = lamination_dvector(tb, pieces[0], pieces[1]);
  r.f = f_polynomial(s.abar, r.restricted) - ypow(r.shift) * finner;
  GVector g = g_vector(s.abar, r.restricted);
  g[s.n - 1] += 1;
  r.g = dscale(g);
  return r;
}

IntMatrix typeb_exchange_matrix(const TypeBSetup& s) {
  IntMatrix b = s.abar.exchange_matrix();
  for (int j = 0; j < s.n; ++j) b[s.n - 1][j] *= 2;
  return b;
}

}  // namespace gentle
