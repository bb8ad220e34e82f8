#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gentle/algebra.hpp"
#include "gentle/invariants.hpp"
#include "gentle/multiplication.hpp"

namespace gentle {

// Polygon vertices are 0..m-1 in counterclockwise order.
struct Diagonal {
  int a = 0;
  int b = 0;  // a < b after normalize()
  bool operator==(const Diagonal&) const = default;
  auto operator<=>(const Diagonal&) const = default;
};
Diagonal normalize(Diagonal d);
std::string to_string(const Diagonal& d);
Diagonal parse_diagonal(const std::string& text);  // "3-7"

bool is_boundary(int m, const Diagonal& d);
// Strict interior crossing; diagonals sharing an endpoint never cross.
bool crosses(int m, const Diagonal& x, const Diagonal& y);
std::vector<Diagonal> all_diagonals(int m);

// An ordered maximal set of pairwise non-crossing diagonals (tau_1, tau_2, ...).
struct Triangulation {
  int m = 0;
  std::vector<Diagonal> diagonals;
  int index_of(const Diagonal& d) const;  // -1 if absent
};
// Every triangulation of the m-gon, diagonals sorted.
std::vector<Triangulation> all_triangulations(int m);
// Throws DomainError unless the diagonals form a triangulation of the m-gon.
void check_triangulation(const Triangulation& t);
// "0-3,3-7,..." (commas or spaces).
Triangulation parse_triangulation(int m, const std::string& list);
// File with lines "polygon <m>" and "diagonals <list>"; '#' starts a comment.
Triangulation load_triangulation(const std::string& path);
Triangulation parse_triangulation_file(const std::string& text);

// Quiver with an arrow tau_j -> tau_i when both bound a triangle and tau_i follows
// tau_j counterclockwise; every path of two arrows inside a triangle is a relation.
Algebra triangulation_algebra(const Triangulation& t);

// String module with one basis vector per crossing with t; zero for diagonals
// of t and boundary edges.
Module arc_module(const Triangulation& t, const Algebra& alg, const Diagonal& g);
// Cluster variable of the arc: 1 for boundary edges, x_i for tau_i, CC otherwise.
LaurentCC arc_variable(const Triangulation& t, const Algebra& alg, const Diagonal& g);

// i-th entry 1 iff the elementary lamination of tau_i crosses both arcs; its
// endpoints sit on boundary edges, which then count as crossed.
DimVector lamination_dvector(const Triangulation& t, const Diagonal& g1, const Diagonal& g2);

struct SkeinCheck {
  LaurentCC lhs;
  LaurentCC rhs;
  bool holds = false;
};
// x_{ab} x_{cd} = y^{d(ac,bd)} x_{ad} x_{bc} + y^{d(ad,bc)} x_{ac} x_{bd} for crossing arcs.
SkeinCheck skein_relation(const Triangulation& t, const Algebra& alg, const Diagonal& x,
                          const Diagonal& y);

// Half-turn of an even polygon.
Diagonal theta(int m, const Diagonal& g);
std::vector<std::vector<Diagonal>> theta_orbits(int m);

// A diameter with a direction; its right side is the open counterclockwise arc
// from `from` to `to`.
struct OrientedDiameter {
  int from = 0;
  int to = 0;
};
// Reflection of the polygon in the line through the diameter.
Diagonal rho(int m, const OrientedDiameter& d, const Diagonal& g);
// Cut along d, reflect the right part in the perpendicular bisector of d, reglue.
Diagonal fd_transform(int m, const OrientedDiameter& d, const Diagonal& g);

// Everything derived from a theta-invariant triangulation with an oriented diameter.
struct TypeBSetup {
  int n = 0;                  // rank; the diameter is tau_n
  OrientedDiameter d;
  Triangulation t;            // theta-invariant, reordered so that tau_n = d
  Triangulation tprime;       // rho-invariant image under F_d, same indices
  Algebra aprime;             // triangulation algebra of tprime
  std::vector<int> sigma_v;   // vertex involution induced by rho
  std::vector<int> sigma_a;   // arrow involution
  Algebra abar;               // full subquiver on tau_1..tau_n
};
// Validates theta-invariance and orders the diagonals as tau_1..tau_{n-1} (left of
// d, in input order), tau_n = d, tau_{2n-i} = theta(tau_i).
TypeBSetup typeb_setup(const Triangulation& t, std::optional<OrientedDiameter> d = std::nullopt);

// Restriction to the polygon with the right side of d collapsed to one vertex.
struct RestrictedPolygon {
  int m = 0;
  std::vector<int> image;  // polygon vertex -> vertex of the small polygon
};
RestrictedPolygon restricted_polygon(const TypeBSetup& s);
std::vector<Diagonal> restrict_diagonals(const TypeBSetup& s, const std::vector<Diagonal>& ds);
Triangulation restricted_triangulation(const TypeBSetup& s);
ModuleSum restrict_module(const TypeBSetup& s, const ModuleSum& m);
std::vector<int> restrict_vector(const TypeBSetup& s, const std::vector<int>& v);

// Twisted dual: relabel by sigma and reverse every letter.
Module nabla(const TypeBSetup& s, const Module& m);
ModuleSum nabla(const TypeBSetup& s, const ModuleSum& m);

enum class SymmetricType { I, S, R };
std::string to_string(SymmetricType t);
// DomainError unless m is I (nabla-invariant indecomposable) or L + nabla L.
SymmetricType symmetric_type(const TypeBSetup& s, const ModuleSum& m);

// The A'-module of a theta-orbit of t (through F_d).
ModuleSum orbit_module(const TypeBSetup& s, const std::vector<Diagonal>& orbit);

struct TypeBVariable {
  YPolynomial f;
  GVector g;
  bool split_case = false;  // case (ii): N = L + nabla L with Res(N) decomposable
  std::optional<MultiplicationData> witness;  // X = L, S = nabla L in case (ii)
  DimVector shift;                            // Res(dim of the image part of nabla L)
  ModuleSum restricted;                       // Res(N)
};
TypeBVariable typeb_variable(const TypeBSetup& s, const ModuleSum& n);

// The type-B formula read off the restricted polygon directly (cross-check).
TypeBVariable typeb_variable_geometric(const TypeBSetup& s, const std::vector<Diagonal>& orbit);

// Exchange matrix of the type-B seed: D B(Q(Res T)), i.e. row n doubled.
IntMatrix typeb_exchange_matrix(const TypeBSetup& s);

}  // namespace gentle
