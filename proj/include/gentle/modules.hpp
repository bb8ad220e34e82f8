#pragma once

#include <string>
#include <vector>

#include "gentle/algebra.hpp"
#include "gentle/strings.hpp"

namespace gentle {

// An indecomposable string module M(w) or quasi-simple band module M(b,1,lambda).
struct Module {
  enum class Kind { String, Band };
  Kind kind = Kind::String;
  StringWord word;  // canonical; for bands a Path word holding the canonical rotation

  bool is_band() const { return kind == Kind::Band; }
  bool is_zero() const { return kind == Kind::String && word.is_zero(); }
  bool operator==(const Module&) const = default;
};

Module string_module(const Algebra& alg, const StringWord& w);
Module band_module(const Algebra& alg, const Letters& band);

using DimVector = std::vector<int>;

struct ModuleSum {
  std::vector<Module> summands;  // zero modules removed, canonical order
  bool empty() const { return summands.empty(); }
  bool operator==(const ModuleSum&) const = default;
};

ModuleSum make_sum(const Algebra& alg, std::vector<Module> parts);
ModuleSum direct_sum(const Algebra& alg, const ModuleSum& a, const ModuleSum& b);
ModuleSum single(const Algebra& alg, const Module& m);

struct DiagramEdge {
  int from = 0;
  int to = 0;
  int arrow = 0;
};

// Coefficient quiver: one node per basis vector, one edge per nonzero arrow action.
struct ModuleDiagram {
  std::vector<int> labels;  // quiver vertex of each node
  std::vector<DiagramEdge> edges;
  int size() const { return static_cast<int>(labels.size()); }
};

ModuleDiagram diagram(const Algebra& alg, const Module& m);
ModuleDiagram diagram(const Algebra& alg, const ModuleSum& m);

DimVector dim_vector(const Algebra& alg, const Module& m);
DimVector dim_vector(const Algebra& alg, const ModuleSum& m);
DimVector dim_vector(int num_vertices, const ModuleDiagram& d);

// Distinguished string modules, built from maximal direct paths at i.
Letters maximal_path_from(const Algebra& alg, int first_arrow);
Letters maximal_path_into(const Algebra& alg, int last_arrow);
Module projective(const Algebra& alg, int i);
Module injective(const Algebra& alg, int i);
Module simple(const Algebra& alg, int i);
bool is_projective(const Algebra& alg, const Module& m);
bool is_injective(const Algebra& alg, const Module& m);

// "str a b~ + band c d~ e" style expressions; "0" is the zero module.
ModuleSum parse_module_expr(const Algebra& alg, const std::string& text);
std::string module_expr(const Algebra& alg, const Module& m);
std::string module_expr(const Algebra& alg, const ModuleSum& m);

// Stacked layer notation such as "3/14"; summands joined by " + ".
std::string stacked(const Algebra& alg, const Module& m);
std::string stacked(const Algebra& alg, const ModuleSum& m);

}  // namespace gentle
