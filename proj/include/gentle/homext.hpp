#pragma once

#include <optional>
#include <vector>

#include "gentle/modules.hpp"

namespace gentle {

// One basis element of Ext^1(M(v), M(w)).
//
// Arrow kind: u = w a^-1 v is a string, middle M(u).
// Overlap kind: v = v_L b m a^-1 v_R and w = w_L d^-1 m c w_R (in the stored
// orientations), middle M(v_L b m c w_R) + M(w_L d^-1 m a^-1 v_R); for a band
// on either side the two pieces join into one string.
struct ExtClass {
  enum class Kind { Arrow, Overlap };
  Kind kind = Kind::Arrow;
  int arrow = -1;  // Arrow kind

  // oriented representatives of the end terms
  StringWord v_word;  // the quotient S
  StringWord w_word;  // the submodule X
  bool v_flipped = false;  // v_word is the inverse of the canonical word of S
  bool w_flipped = false;
  bool v_cyclic = false;
  bool w_cyclic = false;

  // Overlap kind: node intervals of m in v_word and w_word
  Interval v_interval;
  Interval w_interval;
  StringWord m;
  std::optional<int> a, b, c, d;

  ModuleSum middle;
};

// Combinatorial Hom dimension between string modules (admissible pairs).
int hom_dim(const Algebra& alg, const Module& x, const Module& y);
int hom_dim(const Algebra& alg, const ModuleSum& x, const ModuleSum& y);

// Linear algebra route (bands act with lambda = 1).
int hom_dim_oracle(const Algebra& alg, const ModuleSum& x, const ModuleSum& y);
int ext_dim_oracle(const Algebra& alg, const ModuleSum& s, const ModuleSum& x);

// Basis of Ext^1(S, X) for string x string or band x string pairs.
std::vector<ExtClass> ext_basis(const Algebra& alg, const Module& s, const Module& x);
int ext_dim(const Algebra& alg, const ModuleSum& s, const ModuleSum& x);

bool is_rigid(const Algebra& alg, const ModuleSum& m);

// Admissible overlap: a factor interval of x matched with an image interval of y.
struct Overlap {
  Interval x_interval;  // in the canonical word of x (cyclic for bands)
  Interval y_interval;  // in the canonical word of y
  bool reversed = false;  // matched against the inverse reading of y
  int length = 0;
};
std::vector<Overlap> overlaps(const Algebra& alg, const Module& x, const Module& y);

}  // namespace gentle
