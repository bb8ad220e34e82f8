#pragma once

#include <gmpxx.h>

#include <vector>

#include "gentle/modules.hpp"

namespace gentle {

// Dense exact rational matrix.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols) {}
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  mpq_class& operator()(int r, int c) { return data_[size_t(r) * cols_ + c]; }
  const mpq_class& operator()(int r, int c) const { return data_[size_t(r) * cols_ + c]; }
  QMatrix operator*(const QMatrix& o) const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<mpq_class> data_;
};

int rank(QMatrix m);
// Columns form a basis of the right kernel.
QMatrix nullspace(const QMatrix& m);
// Solves A X = B for A of full column rank; throws if inconsistent.
QMatrix solve(const QMatrix& a, const QMatrix& b);

// A representation of a bound quiver: a space per vertex and a map per arrow
// (maps[a] is dims[target] x dims[source]).
struct Representation {
  std::vector<int> dims;
  std::vector<QMatrix> maps;
  int total_dim() const;
};

Representation representation(const Algebra& alg, const ModuleDiagram& d);
Representation representation(const Algebra& alg, const ModuleSum& m);
// e_i A spanned by the nonzero paths starting at i.
Representation projective_representation(const Algebra& alg, int i);
Representation simple_representation(const Algebra& alg, int i);

int hom_dimension(const Algebra& alg, const Representation& v, const Representation& w);

// A module homomorphism as one matrix per vertex (dims_w[i] x dims_v[i]).
using HomMap = std::vector<QMatrix>;
std::vector<HomMap> hom_basis(const Algebra& alg, const Representation& v, const Representation& w);

struct ProjectiveCover {
  Representation p0;
  HomMap pi;             // P0 -> s
  std::vector<int> top;  // multiplicity of P(i) in P0
};
ProjectiveCover projective_cover(const Algebra& alg, const Representation& s);

// Whether f: v -> w factors through a projective (through an injective) module.
bool factors_through_projective(const Algebra& alg, const Representation& v, const Representation& w,
                                const HomMap& f);
bool factors_through_injective(const Algebra& alg, const Representation& v, const Representation& w,
                               const HomMap& f);

// Kernel of a projective cover P0 -> s; top receives the multiplicities of P0.
Representation syzygy(const Algebra& alg, const Representation& s, std::vector<int>* top);

// dim Ext^1(s, x) from 0 -> syzygy -> P0 -> s -> 0.
int ext1_dimension(const Algebra& alg, const Representation& s, const Representation& x);

}  // namespace gentle
