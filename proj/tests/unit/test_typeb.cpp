#include <set>

#include "doctest.h"
#include "gentle/error.hpp"
#include "gentle/fixtures.hpp"
#include "gentle/oracle.hpp"
#include "gentle/typeb.hpp"

using namespace gentle;

namespace {

// The octagon figure with vertex 0 at the bottom and labels increasing counterclockwise.
Triangulation figure_t() { return parse_triangulation(8, "4-6,0-6,0-4,2-4,0-2"); }
Triangulation figure_tprime() { return parse_triangulation(8, "4-6,0-6,0-4,0-2,2-4"); }

bool is_initial(const TypeBSetup& s, const std::vector<Diagonal>& orbit) {
  for (const auto& g : orbit)
    if (s.t.index_of(g) >= 0) return true;
  return false;
}

std::set<ClusterVariable> typeb_set(const TypeBSetup& s) {
  std::set<ClusterVariable> out;
  for (const auto& orbit : theta_orbits(s.t.m)) {
    if (is_initial(s, orbit)) continue;
    auto v = typeb_variable(s, orbit_module(s, orbit));
    out.insert({v.f, v.g});
  }
  for (int i = 0; i < s.n; ++i) {
    GVector g(s.n, 0);
    g[i] = 1;
    out.insert({YPolynomial::one(s.n), g});
  }
  return out;
}

}  // namespace

TEST_CASE("polygon combinatorics") {
  CHECK(crosses(8, {0, 4}, {2, 6}));
  CHECK_FALSE(crosses(8, {0, 4}, {4, 6}));
  CHECK_FALSE(crosses(8, {0, 2}, {3, 5}));
  CHECK(all_diagonals(8).size() == 20);
  CHECK(all_triangulations(6).size() == 14);
  CHECK(all_triangulations(8).size() == 132);
  CHECK(theta_orbits(8).size() == 12);
  CHECK_THROWS_AS(parse_triangulation(8, "0-4,2-6"), DomainError);
  CHECK_THROWS_AS(parse_triangulation(8, "0-1"), DomainError);
  CHECK_THROWS_AS(parse_diagonal("3/5"), ParseError);
  Triangulation f = parse_triangulation_file("# figure\npolygon 8\ndiagonals 4-6,0-6,0-4\ndiagonals 0-2 2-4\n");
  CHECK(f.diagonals == figure_tprime().diagonals);
}

TEST_CASE("triangulation algebras") {
  Algebra oct = triangulation_algebra(figure_tprime());
  CHECK(same_presentation(oct, bundled_algebra("octagon")));
  Algebra square = triangulation_algebra(parse_triangulation(4, "0-2"));
  CHECK(square.num_vertices() == 1);
  CHECK(square.num_arrows() == 0);
  // zig-zag in the hexagon: 0-2, 2-5, 5-3
  Algebra zz = triangulation_algebra(parse_triangulation(6, "0-2,2-5,3-5"));
  CHECK(zz.to_dsl() == "vertices 1 2 3\narrow a 1 2\narrow b 3 2\n");
  for (const auto& t : all_triangulations(7)) CHECK(triangulation_algebra(t).is_gentle());
}

TEST_CASE("arc modules of the figure") {
  Triangulation t = figure_tprime();
  Algebra a = triangulation_algebra(t);
  CHECK(stacked(a, arc_module(t, a, {1, 5})) == "3/14");
  CHECK(stacked(a, arc_module(t, a, {3, 7})) == "25/3");
  CHECK(stacked(a, arc_module(t, a, {3, 5})) == "5/3/1");
  CHECK(stacked(a, arc_module(t, a, {2, 5})) == "3/1");
  CHECK(stacked(a, arc_module(t, a, {3, 6})) == "5/3");
  CHECK(arc_module(t, a, {0, 4}).is_zero());
  CHECK(arc_module(t, a, {0, 1}).is_zero());
}

TEST_CASE("skein relation and lamination vectors") {
  Triangulation t = figure_tprime();
  Algebra a = triangulation_algebra(t);
  int pairs = 0;
  for (const auto& x : all_diagonals(8))
    for (const auto& y : all_diagonals(8))
      if (x < y && crosses(8, x, y)) {
        CAPTURE(to_string(x));
        CAPTURE(to_string(y));
        CHECK(skein_relation(t, a, x, y).holds);
        ++pairs;
      }
  CHECK(pairs == 70);
  // the exchange pair 3/14, 25/3: the smoothing without the initial diameter carries y3
  CHECK(lamination_dvector(t, {3, 5}, {1, 7}) == DimVector{0, 0, 1, 0, 0});
  CHECK(lamination_dvector(t, {0, 2}, {4, 6}) == DimVector(5, 0));
  for (const auto& tri : all_triangulations(7)) {
    Algebra b = triangulation_algebra(tri);
    for (const auto& x : all_diagonals(7))
      for (const auto& y : all_diagonals(7))
        if (x < y && crosses(7, x, y)) CHECK(skein_relation(tri, b, x, y).holds);
  }
}

TEST_CASE("half-turn, reflection and F_d") {
  OrientedDiameter d{0, 4};
  CHECK(theta(8, {1, 3}) == Diagonal{5, 7});
  CHECK(rho(8, d, {4, 6}) == Diagonal{2, 4});
  for (const auto& g : all_diagonals(8)) {
    CHECK(fd_transform(8, d, fd_transform(8, d, g)) == g);
    if (g.b - g.a == 4) CHECK(rho(8, d, fd_transform(8, d, g)) == fd_transform(8, d, g));
  }
  TypeBSetup s = typeb_setup(figure_t());
  CHECK(s.tprime.diagonals == figure_tprime().diagonals);
  CHECK(s.sigma_v == std::vector<int>{4, 3, 2, 1, 0});
  CHECK(same_presentation(s.aprime, bundled_algebra("octagon")));
  CHECK_THROWS_AS(typeb_setup(figure_t(), OrientedDiameter{2, 6}), DomainError);
  CHECK_THROWS_AS(typeb_setup(parse_triangulation(8, "0-2,0-3,0-4,0-5,0-6")), DomainError);
}

TEST_CASE("restriction") {
  TypeBSetup s = typeb_setup(figure_t());
  ModuleSum n = parse_module_expr(s.aprime, "str c~ d + str b f~");
  CHECK(restrict_module(s, n) == parse_module_expr(s.abar, "str c + str b"));
  CHECK(stacked(s.abar, restrict_module(s, n)) == "2/3 + 3/1");
  CHECK(restrict_vector(s, {0, 0, 1, 0, 0}) == std::vector<int>{0, 0, 1});
  // the orbit {5-7, 1-3} lies off the diameter and restricts to one diagonal
  CHECK(restrict_diagonals(s, {{1, 3}, {5, 7}}).size() == 1);
  CHECK(restrict_diagonals(s, {{1, 5}}).size() == 1);
  CHECK(restrict_diagonals(s, {{1, 6}, {2, 5}}).size() == 2);
  Triangulation tb = restricted_triangulation(s);
  CHECK(tb.m == 6);
  CHECK(same_presentation(triangulation_algebra(tb), s.abar));
}

TEST_CASE("twisted dual and symmetric types") {
  TypeBSetup s = typeb_setup(figure_t());
  const Algebra& a = s.aprime;
  Module x = string_module(a, parse_string_expr(a, "c~ d"));
  CHECK(stacked(a, nabla(s, x)) == "25/3");
  Module g = string_module(a, parse_string_expr(a, "f c"));
  CHECK(nabla(s, g) == g);
  CHECK(symmetric_type(s, single(a, g)) == SymmetricType::I);
  CHECK(symmetric_type(s, parse_module_expr(a, "str c~ d + str b f~")) == SymmetricType::S);
  CHECK_THROWS_AS(symmetric_type(s, single(a, x)), DomainError);
  for (const auto& w : all_diagonals(8)) {
    Module m = arc_module(s.tprime, a, w);
    CHECK(nabla(s, nabla(s, m)) == m);
  }
}

TEST_CASE("type-B variables of the figure") {
  TypeBSetup s = typeb_setup(figure_t());
  auto v = typeb_variable(s, parse_module_expr(s.aprime, "str c~ d + str b f~"));
  CHECK(v.split_case);
  CHECK(v.f.to_string(variable_names(s.abar)) == "1 + y1 + 2*y1*y3 + y1*y3^2 + y1*y2*y3^2");
  CHECK(v.g == GVector{-1, 0, 0});
  REQUIRE(v.witness);
  CHECK(v.witness->y == parse_module_expr(s.aprime, "str f c + str b d"));
  CHECK(v.witness->m == parse_module_expr(s.aprime, "str a + str e"));
  CHECK(v.shift == DimVector{0, 0, 1});

  // 5/3/1 crosses the diameter vertex: case (i) with the e_n correction
  ModuleSum n = parse_module_expr(s.aprime, "str f c");
  auto w = typeb_variable(s, n);
  CHECK_FALSE(w.split_case);
  CHECK(w.f == f_polynomial(s.abar, restrict_module(s, n)));
  GVector expect = g_vector(s.abar, restrict_module(s, n));
  expect[2] = 2 * expect[2] + 1;
  CHECK(w.g == expect);

  // 2 + 4 is supported away from vertex 3: no correction
  ModuleSum off = parse_module_expr(s.aprime, "str e(2,+) + str e(4,+)");
  auto u = typeb_variable(s, off);
  CHECK(u.g == g_vector(s.abar, restrict_module(s, off)));
  CHECK(u.g[2] == 0);
}

TEST_CASE("type-B exchange matrix of the figure") {
  TypeBSetup s = typeb_setup(figure_t());
  CHECK(typeb_exchange_matrix(s) == IntMatrix{{0, -1, 1}, {1, 0, -1}, {-2, 2, 0}});
}

TEST_CASE("type-B variables agree with mutation for every invariant triangulation") {
  for (int m : {8, 10}) {
    int count = 0;
    for (const auto& t : all_triangulations(m)) {
      std::set<Diagonal> ds(t.diagonals.begin(), t.diagonals.end());
      bool invariant = true;
      for (const auto& g : t.diagonals) invariant = invariant && ds.count(theta(m, g));
      if (!invariant) continue;
      ++count;
      TypeBSetup s = typeb_setup(t);
      CAPTURE(m);
      auto oracle = enumerate_variables(typeb_exchange_matrix(s)).variables;
      CHECK(typeb_set(s) == oracle);
      CHECK(oracle.size() == static_cast<size_t>(s.n * (s.n + 1)));
      for (const auto& orbit : theta_orbits(m)) {
        if (is_initial(s, orbit)) continue;
        ModuleSum n = orbit_module(s, orbit);
        auto v = typeb_variable(s, n);
        auto geo = typeb_variable_geometric(s, orbit);
        CHECK(v.f == geo.f);
        CHECK(v.g == geo.g);
        if (!v.witness) continue;
        const auto& d = *v.witness;
        CHECK(ext_dimension(s.aprime, d.s, d.x) == 1);
        CHECK(nabla(s, d.m) == d.m);
        // dim of the image part equals the lamination vector of the two middle arcs
        std::vector<Diagonal> arcs;
        for (const auto& g : orbit) arcs.push_back(fd_transform(m, s.d, g));
        const Diagonal& l = single(s.aprime, arc_module(s.tprime, s.aprime, arcs[0])) == d.x ? arcs[0] : arcs[1];
        const Diagonal& nl = l == arcs[0] ? arcs[1] : arcs[0];
        RestrictedPolygon rp = restricted_polygon(s);
        auto left_end = [&](const Diagonal& g) {
          return rp.image[g.a] != s.n + 2 && g.a != s.d.from && g.a != s.d.to ? g.a : g.b;
        };
        auto reflect = [&](int x) { return ((2 * s.d.from - x) % m + m) % m; };
        int a = left_end(l), bbar = left_end(nl);
        CHECK(lamination_dvector(s.tprime, normalize({a, reflect(a)}), normalize({bbar, reflect(bbar)})) ==
              dim_vector(s.aprime, d.sunder));
      }
    }
    CHECK(count == (m == 8 ? 20 : 70));
  }
}
