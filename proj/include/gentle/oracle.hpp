#pragma once

#include <optional>
#include <set>
#include <vector>

#include "gentle/algebra.hpp"
#include "gentle/invariants.hpp"

namespace gentle {

// A cluster variable with principal coefficients: its F-polynomial and g-vector.
struct ClusterVariable {
  YPolynomial f;
  GVector g;
  bool operator==(const ClusterVariable& o) const { return f == o.f && g == o.g; }
  bool operator<(const ClusterVariable& o) const { return g != o.g ? g < o.g : f < o.f; }
};

struct Seed {
  IntMatrix b;        // current exchange matrix
  IntMatrix b0;       // initial exchange matrix (enters the g-vector recurrence)
  IntMatrix c;        // c-vectors as columns
  std::vector<ClusterVariable> vars;
  int rank() const { return static_cast<int>(b.size()); }
};

// Positive integer skew-symmetrizer d with d_i b_ij = -d_j b_ji, empty if none.
std::vector<int> skew_symmetrizer(const IntMatrix& b);

// DomainError unless b is square and skew-symmetrizable.
Seed initial_seed(const IntMatrix& b);

IntMatrix mutate_matrix(const IntMatrix& b, int k);
// Mutation in direction k (0-based).
Seed mutate(const Seed& s, int k);

// Finite type test on the matrix mutation class: false as soon as some matrix has
// b_ij b_ji < -3, true once the class is exhausted, nullopt past cap matrices.
std::optional<bool> is_finite_type(const IntMatrix& b, int cap = 100000);

struct Enumeration {
  std::set<ClusterVariable> variables;
  int seeds = 0;
};
// Breadth-first closure of the exchange graph; UnsupportedError for infinite type,
// PreconditionError once more than cap seeds have been visited.
Enumeration enumerate_variables(const IntMatrix& b, int cap = 100000);

// Reads an integer matrix: one row per line, '#' comments.
IntMatrix parse_matrix(const std::string& text);

}  // namespace gentle
