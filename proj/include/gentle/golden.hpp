#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gentle {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;  // observed values, or the first counterexample
};

struct CriterionResult {
  int id = 0;
  std::string title;
  std::vector<Check> checks;
  double seconds = 0;
  bool pass() const;
};

struct PropertyOptions {
  std::uint64_t seed = 1;
  int algebras = 500;
  int pairs_per_algebra = 12;
  int threads = 1;
};

// The acceptance criteria, each recomputed from scratch on the bundled examples.
CriterionResult criterion_f_polynomials();
CriterionResult criterion_grassmannian_table();
CriterionResult criterion_g_vectors();
CriterionResult criterion_multiplication_examples();
CriterionResult criterion_octagon_exchange();
CriterionResult criterion_hereditary_a5();
CriterionResult criterion_typeb_final_example();
CriterionResult criterion_property_suite(const PropertyOptions& opt);
CriterionResult criterion_oracle_crosscheck();
CriterionResult criterion_skein_and_columns();

std::vector<CriterionResult> run_all_criteria(const PropertyOptions& opt);

}  // namespace gentle
