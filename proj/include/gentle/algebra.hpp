#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace gentle {

struct Arrow {
  std::string name;
  int source = 0;
  int target = 0;
};

struct Violation {
  std::string axiom;    // "G1".."G4"
  std::string witness;  // human readable vertex / arrow data
};

using IntMatrix = std::vector<std::vector<int>>;

// Bound quiver kQ/I. Signs are filled in only when the algebra is gentle.
class Algebra {
 public:
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::set<std::pair<int, int>> relations;      // (a, b): the path "a then b" lies in I
  std::vector<std::vector<int>> long_relations;  // length >= 3, never gentle
  std::vector<int> sigma;
  std::vector<int> epsilon;

  int num_vertices() const { return static_cast<int>(vertices.size()); }
  int num_arrows() const { return static_cast<int>(arrows.size()); }
  int vertex_index(const std::string& id) const;  // -1 if absent
  int arrow_index(const std::string& name) const;
  bool has_relation(int a, int b) const { return relations.count({a, b}) > 0; }
  bool has_signs() const { return !sigma.empty() || arrows.empty(); }

  std::vector<int> arrows_from(int v) const;
  std::vector<int> arrows_into(int v) const;

  void add_vertex(const std::string& id);
  int add_arrow(const std::string& name, int source, int target);
  void add_relation(int a, int b);

  // Report-style check of the gentle axioms (empty iff gentle).
  std::vector<Violation> validate() const;
  bool is_gentle() const { return validate().empty(); }

  // Computes sigma/epsilon; throws DomainError if the constraints are unsatisfiable.
  void compute_signs();

  IntMatrix exchange_matrix() const;
  std::string to_dsl() const;
};

Algebra parse_algebra(const std::string& text);
Algebra load_algebra(const std::string& path);

// Semantic equality: same vertices, arrows (by name and endpoints) and relations.
bool same_presentation(const Algebra& a, const Algebra& b);

}  // namespace gentle
