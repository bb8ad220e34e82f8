#pragma once

#include <vector>

#include "gentle/modules.hpp"
#include "gentle/poly.hpp"

namespace gentle {

using GVector = std::vector<int>;

// Number of successor-closed node sets of the module diagram with dimension e.
long long chi(const Algebra& alg, const Module& m, const DimVector& e);
long long chi(const Algebra& alg, const ModuleSum& m, const DimVector& e);

// Sum of chi(m, e) y^e, by dynamic programming along the walk.
YPolynomial f_polynomial(const Algebra& alg, const Module& m);
YPolynomial f_polynomial(const Algebra& alg, const ModuleSum& m);

// Brute force over all node subsets of the diagram (reference implementation).
YPolynomial f_polynomial_naive(int num_vertices, const ModuleDiagram& d);

// Combinatorial g-vector of a string module (b + r - a); bands go through
// the homological route.
GVector g_vector(const Algebra& alg, const Module& m);
GVector g_vector(const Algebra& alg, const ModuleSum& m);

// Multiplicities of a minimal injective copresentation 0 -> L -> I0 -> I1:
// g_i = dim Ext^1(S_i, L) - dim Hom(S_i, L).
GVector g_vector_homological(const Algebra& alg, const ModuleSum& m);

// Sum of chi x^{B e + g} y^e with B the exchange matrix of the quiver.
LaurentCC cluster_character(const Algebra& alg, const ModuleSum& m);
LaurentCC cluster_character(const Algebra& alg, const ModuleSum& m, const GVector& g);
// Sum over the terms c y^e of f of c x^{B e + g} y^e.
LaurentCC cluster_character(const IntMatrix& b, const YPolynomial& f, const GVector& g);

// B e for the exchange matrix of alg.
std::vector<int> exchange_times(const Algebra& alg, const DimVector& e);

// Vertex ids, used as variable subscripts when printing.
std::vector<std::string> variable_names(const Algebra& alg);

}  // namespace gentle
