#include "doctest.h"
#include "gentle/error.hpp"
#include "gentle/fixtures.hpp"
#include "gentle/oracle.hpp"

using namespace gentle;

TEST_CASE("initial seed") {
  Seed s = initial_seed({{0, 1}, {-1, 0}});
  CHECK(s.c == IntMatrix{{1, 0}, {0, 1}});
  for (int i = 0; i < 2; ++i) {
    CHECK(s.vars[i].f == YPolynomial::one(2));
    CHECK(s.vars[i].g[i] == 1);
  }
  CHECK_THROWS_AS(initial_seed({{0, 1}, {1, 0}}), DomainError);
  CHECK_THROWS_AS(initial_seed({{0, 1, 0}, {-1, 0, 1}}), DomainError);
  CHECK(skew_symmetrizer({{0, -1, 1}, {1, 0, -1}, {-2, 2, 0}}) == std::vector<int>{2, 2, 1});
  CHECK(skew_symmetrizer({{0, 2, 0}, {-1, 0, 1}, {0, -1, 0}}) == std::vector<int>{1, 2, 2});
  CHECK(skew_symmetrizer({{0, 1, -1}, {-2, 0, 1}, {1, -1, 0}}).empty());
}

TEST_CASE("rank two mutation") {
  Seed s = mutate(initial_seed({{0, 1}, {-1, 0}}), 0);
  CHECK(s.vars[0].f.to_string({"1", "2"}) == "1 + y1");
  CHECK(s.vars[0].g == GVector{-1, 1});
  CHECK(s.b == IntMatrix{{0, -1}, {1, 0}});
}

TEST_CASE("mutation is an involution") {
  IntMatrix b = bundled_algebra("octagon").exchange_matrix();
  Seed s = initial_seed(b);
  for (int k : {0, 2, 4, 1, 3, 2}) s = mutate(s, k);
  for (int k = 0; k < 5; ++k) {
    Seed t = mutate(mutate(s, k), k);
    CHECK(t.b == s.b);
    CHECK(t.c == s.c);
    CHECK(t.vars == s.vars);
  }
}

TEST_CASE("finite type closures") {
  CHECK(enumerate_variables({{0}}).variables.size() == 2);
  CHECK(enumerate_variables({{0, 1}, {-1, 0}}).variables.size() == 5);
  CHECK(enumerate_variables(bundled_algebra("octagon").exchange_matrix()).variables.size() == 20);
  CHECK(enumerate_variables({{0, -1, 0}, {1, 0, -1}, {0, 2, 0}}).variables.size() == 12);
  CHECK_THROWS_AS(enumerate_variables({{0, 1}, {-1, 0}}, 3), PreconditionError);
  // Kronecker and an acyclic triangle are of infinite type
  CHECK(is_finite_type({{0, 2}, {-2, 0}}) == false);
  CHECK_THROWS_AS(enumerate_variables({{0, 1, 1}, {-1, 0, 1}, {-1, -1, 0}}), UnsupportedError);
  CHECK(is_finite_type({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}}) == true);
  CHECK(is_finite_type({{0, -1, 1}, {1, 0, -1}, {-2, 2, 0}}) == true);
  CHECK(is_finite_type({{0, 1, 0}, {-2, 0, 2}, {0, -1, 0}}) == false);
  // Laurent phenomenon at desk scale
  for (const auto& v : enumerate_variables({{0, -1, 0}, {1, 0, -1}, {0, 2, 0}}).variables) {
    CHECK(v.f.coeff(Exponent(3, 0)) == 1);
    for (const auto& [e, c] : v.f.terms()) CHECK(c > 0);
  }
}

TEST_CASE("a mutation sequence reaches the variable of c~ d") {
  Algebra a = bundled_algebra("octagon");
  ModuleSum m = parse_module_expr(a, "str c~ d");
  ClusterVariable want{f_polynomial(a, m), g_vector(a, m)};
  CHECK(enumerate_variables(a.exchange_matrix()).variables.count(want) == 1);
}

TEST_CASE("matrix files") {
  CHECK(parse_matrix("# b2\n0 1\n-2 0\n") == IntMatrix{{0, 1}, {-2, 0}});
  CHECK_THROWS_AS(parse_matrix("0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("0 x\n1 0\n"), ParseError);
}
