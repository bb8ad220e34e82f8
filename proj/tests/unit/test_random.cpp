#include <random>

#include "doctest.h"
#include "gentle/ar.hpp"
#include "gentle/homext.hpp"
#include "gentle/invariants.hpp"
#include "gentle/random.hpp"

using namespace gentle;

TEST_CASE("combinatorics agree with linear algebra on random gentle algebras") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 150; ++round) {
    Algebra alg = random_gentle_algebra(rng, 5, 7);
    CAPTURE(alg.to_dsl());
    for (int k = 0; k < 6; ++k) {
      Module x = string_module(alg, random_string(alg, rng, 5));
      Module s = string_module(alg, random_string(alg, rng, 5));
      CAPTURE(module_expr(alg, x));
      CAPTURE(module_expr(alg, s));
      ModuleSum xs = single(alg, x), ss = single(alg, s);
      CHECK(hom_dim(alg, x, s) == hom_dim_oracle(alg, xs, ss));
      CHECK(static_cast<int>(ext_basis(alg, s, x).size()) == ext_dim_oracle(alg, ss, xs));
      CHECK(g_vector(alg, x) == g_vector_homological(alg, xs));
      CHECK(f_polynomial(alg, x) == f_polynomial_naive(alg.num_vertices(), diagram(alg, x)));
      if (!is_projective(alg, x)) {
        CHECK(tau_inv(alg, tau(alg, x)) == x);
        ARSequence seq = ar_sequence_ending(alg, x);
        CHECK(seq.right == x);
        auto l = dim_vector(alg, seq.left), m = dim_vector(alg, seq.middle), r = dim_vector(alg, x);
        for (size_t i = 0; i < l.size(); ++i) CHECK(l[i] + r[i] == m[i]);
      } else {
        CHECK(tau(alg, x).is_zero());
      }
      if (!is_injective(alg, x)) CHECK(tau(alg, tau_inv(alg, x)) == x);
      else CHECK(tau_inv(alg, x).is_zero());
    }
  }
}

TEST_CASE("extension middle terms have the right dimension") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 100; ++round) {
    Algebra alg = random_gentle_algebra(rng, 5, 7);
    for (int k = 0; k < 5; ++k) {
      Module x = string_module(alg, random_string(alg, rng, 5));
      Module s = string_module(alg, random_string(alg, rng, 5));
      auto dx = dim_vector(alg, x), ds = dim_vector(alg, s);
      for (const auto& e : ext_basis(alg, s, x)) {
        auto dm = dim_vector(alg, e.middle);
        for (size_t i = 0; i < dm.size(); ++i) CHECK(dm[i] == dx[i] + ds[i]);
        CHECK(e.middle != make_sum(alg, {x, s}));
      }
    }
  }
}

TEST_CASE("band and string pairs agree with linear algebra") {
  std::mt19937_64 rng(5);
  int checked = 0;
  for (int round = 0; round < 200 && checked < 300; ++round) {
    Algebra alg = random_gentle_algebra(rng, 5, 8);
    auto bands = all_bands(alg, 6);
    if (bands.empty()) continue;
    CAPTURE(alg.to_dsl());
    for (const auto& b : bands) {
      Module band = band_module(alg, b);
      CAPTURE(module_expr(alg, band));
      CHECK(f_polynomial(alg, band) == f_polynomial_naive(alg.num_vertices(), diagram(alg, band)));
      for (int k = 0; k < 4; ++k) {
        Module x = string_module(alg, random_string(alg, rng, 5));
        CAPTURE(module_expr(alg, x));
        ModuleSum bs = single(alg, band), xs = single(alg, x);
        CHECK(hom_dim(alg, x, band) == hom_dim_oracle(alg, xs, bs));
        CHECK(hom_dim(alg, band, x) == hom_dim_oracle(alg, bs, xs));
        CHECK(static_cast<int>(ext_basis(alg, band, x).size()) == ext_dim_oracle(alg, bs, xs));
        CHECK(static_cast<int>(ext_basis(alg, x, band).size()) == ext_dim_oracle(alg, xs, bs));
        ++checked;
      }
    }
  }
  CHECK(checked > 50);
}
