#include "gentle/linalg.hpp"

#include <map>
#include <stdexcept>

#include "gentle/error.hpp"

namespace gentle {

QMatrix QMatrix::operator*(const QMatrix& o) const {
  QMatrix out(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const mpq_class& x = (*this)(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.cols_; ++j)
        if (o(k, j) != 0) out(i, j) += x * o(k, j);
    }
  return out;
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<int> rref(QMatrix& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = -1;
    for (int i = r; i < m.rows(); ++i)
      if (m(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    mpq_class inv = 1 / m(r, c);
    for (int j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      mpq_class f = m(i, c);
      for (int j = c; j < m.cols(); ++j)
        if (m(r, j) != 0) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int rank(QMatrix m) { return static_cast<int>(rref(m).size()); }

QMatrix nullspace(const QMatrix& m) {
  QMatrix r = m;
  auto pivots = rref(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : pivots) is_pivot[c] = true;
  int free = m.cols() - static_cast<int>(pivots.size());
  QMatrix out(m.cols(), free);
  int k = 0;
  for (int c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    out(c, k) = 1;
    for (size_t i = 0; i < pivots.size(); ++i) out(pivots[i], k) = -r(static_cast<int>(i), c);
    ++k;
  }
  return out;
}

QMatrix solve(const QMatrix& a, const QMatrix& b) {
  QMatrix aug(a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    for (int j = 0; j < b.cols(); ++j) aug(i, a.cols() + j) = b(i, j);
  }
  auto pivots = rref(aug);
  for (size_t i = 0; i < pivots.size(); ++i)
    if (pivots[i] >= a.cols() || pivots[i] != static_cast<int>(i))
      throw std::logic_error("linear system is inconsistent or underdetermined");
  QMatrix x(a.cols(), b.cols());
  for (int i = 0; i < a.cols(); ++i)
    for (int j = 0; j < b.cols(); ++j) x(i, j) = aug(i, a.cols() + j);
  return x;
}

int Representation::total_dim() const {
  int s = 0;
  for (int d : dims) s += d;
  return s;
}

Representation representation(const Algebra& alg, const ModuleDiagram& d) {
  Representation rep;
  rep.dims.assign(alg.num_vertices(), 0);
  std::vector<int> local(d.size());
  for (int j = 0; j < d.size(); ++j) local[j] = rep.dims[d.labels[j]]++;
  for (const auto& a : alg.arrows) rep.maps.emplace_back(rep.dims[a.target], rep.dims[a.source]);
  for (auto e : d.edges) rep.maps[e.arrow](local[e.to], local[e.from]) = 1;
  return rep;
}

Representation representation(const Algebra& alg, const ModuleSum& m) {
  return representation(alg, diagram(alg, m));
}

namespace {

bool path_allowed(const Algebra& alg, const std::vector<int>& p) {
  size_t n = p.size();
  if (n >= 2 && alg.has_relation(p[n - 2], p[n - 1])) return false;
  for (const auto& r : alg.long_relations) {
    if (r.size() > n) continue;
    bool match = true;
    for (size_t i = 0; i < r.size() && match; ++i) match = p[n - r.size() + i] == r[i];
    if (match) return false;
  }
  return true;
}

}  // namespace

Representation projective_representation(const Algebra& alg, int i) {
  std::vector<std::vector<int>> paths{{}};
  std::vector<int> ends{i};
  for (size_t k = 0; k < paths.size(); ++k) {
    if (paths[k].size() > 64) throw DomainError("algebra is infinite dimensional");
    for (int a : alg.arrows_from(ends[k])) {
      auto p = paths[k];
      p.push_back(a);
      if (!path_allowed(alg, p)) continue;
      paths.push_back(p);
      ends.push_back(alg.arrows[a].target);
    }
  }
  Representation rep;
  rep.dims.assign(alg.num_vertices(), 0);
  std::map<std::vector<int>, int> local;
  for (size_t k = 0; k < paths.size(); ++k) local[paths[k]] = rep.dims[ends[k]]++;
  for (const auto& a : alg.arrows) rep.maps.emplace_back(rep.dims[a.target], rep.dims[a.source]);
  for (size_t k = 0; k < paths.size(); ++k) {
    for (int a : alg.arrows_from(ends[k])) {
      auto p = paths[k];
      p.push_back(a);
      auto it = local.find(p);
      if (it != local.end()) rep.maps[a](it->second, local[paths[k]]) = 1;
    }
  }
  return rep;
}

Representation simple_representation(const Algebra& alg, int i) {
  Representation rep;
  rep.dims.assign(alg.num_vertices(), 0);
  rep.dims[i] = 1;
  for (const auto& a : alg.arrows) rep.maps.emplace_back(rep.dims[a.target], rep.dims[a.source]);
  return rep;
}

namespace {

// Linear system whose kernel is Hom(v, w); unknowns are the vertex matrices
// phi_i (row-major) stacked in vertex order.
QMatrix hom_system(const Algebra& alg, const Representation& v, const Representation& w,
                   std::vector<int>& offset) {
  const int n = alg.num_vertices();
  offset.assign(n + 1, 0);
  for (int i = 0; i < n; ++i) offset[i + 1] = offset[i] + w.dims[i] * v.dims[i];
  const int unknowns = offset[n];
  auto var = [&](int vertex, int r, int c) { return offset[vertex] + r * v.dims[vertex] + c; };
  int eqs = 0;
  for (const auto& a : alg.arrows) eqs += w.dims[a.target] * v.dims[a.source];
  QMatrix sys(eqs, unknowns);
  int row = 0;
  for (int ai = 0; ai < alg.num_arrows(); ++ai) {
    int s = alg.arrows[ai].source, t = alg.arrows[ai].target;
    const QMatrix& wa = w.maps[ai];
    const QMatrix& va = v.maps[ai];
    // W_a phi_s - phi_t V_a = 0
    for (int r = 0; r < w.dims[t]; ++r)
      for (int c = 0; c < v.dims[s]; ++c, ++row) {
        for (int k = 0; k < w.dims[s]; ++k)
          if (wa(r, k) != 0) sys(row, var(s, k, c)) += wa(r, k);
        for (int k = 0; k < v.dims[t]; ++k)
          if (va(k, c) != 0) sys(row, var(t, r, k)) -= va(k, c);
      }
  }
  return sys;
}

std::vector<mpq_class> flatten(const HomMap& f) {
  std::vector<mpq_class> out;
  for (const auto& m : f)
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c) out.push_back(m(r, c));
  return out;
}

Algebra opposite(const Algebra& alg) {
  Algebra op;
  op.vertices = alg.vertices;
  for (const auto& a : alg.arrows) op.arrows.push_back({a.name, a.target, a.source});
  for (auto [a, b] : alg.relations) op.relations.insert({b, a});
  for (auto r : alg.long_relations) op.long_relations.emplace_back(r.rbegin(), r.rend());
  return op;
}

Representation dual(const Representation& r) {
  Representation d;
  d.dims = r.dims;
  for (const auto& m : r.maps) {
    QMatrix t(m.cols(), m.rows());
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
    d.maps.push_back(t);
  }
  return d;
}

}  // namespace

int hom_dimension(const Algebra& alg, const Representation& v, const Representation& w) {
  std::vector<int> offset;
  QMatrix sys = hom_system(alg, v, w, offset);
  const int unknowns = offset.back();
  if (unknowns == 0) return 0;
  return unknowns - rank(sys);
}

std::vector<HomMap> hom_basis(const Algebra& alg, const Representation& v, const Representation& w) {
  std::vector<int> offset;
  QMatrix sys = hom_system(alg, v, w, offset);
  const int n = alg.num_vertices();
  std::vector<HomMap> out;
  if (offset.back() == 0) return out;
  QMatrix ker = nullspace(sys);
  for (int k = 0; k < ker.cols(); ++k) {
    HomMap f(n);
    for (int i = 0; i < n; ++i) {
      f[i] = QMatrix(w.dims[i], v.dims[i]);
      for (int r = 0; r < w.dims[i]; ++r)
        for (int c = 0; c < v.dims[i]; ++c) f[i](r, c) = ker(offset[i] + r * v.dims[i] + c, k);
    }
    out.push_back(std::move(f));
  }
  return out;
}

bool factors_through_projective(const Algebra& alg, const Representation& v, const Representation& w,
                                const HomMap& f) {
  ProjectiveCover cover = projective_cover(alg, w);
  std::vector<std::vector<mpq_class>> cols;
  for (const auto& g : hom_basis(alg, v, cover.p0)) {
    HomMap h(g.size());
    for (size_t i = 0; i < g.size(); ++i) h[i] = cover.pi[i] * g[i];
    cols.push_back(flatten(h));
  }
  auto target = flatten(f);
  if (cols.empty()) {
    for (const auto& x : target)
      if (x != 0) return false;
    return true;
  }
  const int rows = static_cast<int>(target.size());
  QMatrix span(rows, static_cast<int>(cols.size()));
  QMatrix with(rows, static_cast<int>(cols.size()) + 1);
  for (size_t c = 0; c < cols.size(); ++c)
    for (int r = 0; r < rows; ++r) span(r, c) = with(r, c) = cols[c][r];
  for (int r = 0; r < rows; ++r) with(r, static_cast<int>(cols.size())) = target[r];
  return rank(span) == rank(with);
}

bool factors_through_injective(const Algebra& alg, const Representation& v, const Representation& w,
                               const HomMap& f) {
  HomMap df;
  for (const auto& m : f) {
    QMatrix t(m.cols(), m.rows());
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
    df.push_back(t);
  }
  return factors_through_projective(opposite(alg), dual(w), dual(v), df);
}

ProjectiveCover projective_cover(const Algebra& alg, const Representation& s) {
  const int n = alg.num_vertices();
  // generators: complement of the radical at each vertex
  struct Gen {
    int vertex;
    int unit;  // index of the basis vector of s_vertex used as generator
  };
  std::vector<Gen> gens;
  std::vector<int> tops(n, 0);
  for (int i = 0; i < n; ++i) {
    int cols = 0;
    for (int a : alg.arrows_into(i)) cols += s.dims[alg.arrows[a].source];
    QMatrix span(s.dims[i], cols + s.dims[i]);
    int c = 0;
    for (int a : alg.arrows_into(i))
      for (int k = 0; k < s.maps[a].cols(); ++k, ++c)
        for (int r = 0; r < s.dims[i]; ++r) span(r, c) = s.maps[a](r, k);
    int base = rank(span);
    int cur = base;
    QMatrix trial = span;
    for (int u = 0; u < s.dims[i]; ++u) {
      QMatrix next = trial;
      next(u, c) = 1;
      int rk = rank(next);
      if (rk > cur) {
        trial = next;
        ++c;
        cur = rk;
        gens.push_back({i, u});
        tops[i]++;
      }
    }
  }

  // P0 = sum of projectives; record for each basis path its summand and path.
  Representation p0;
  p0.dims.assign(n, 0);
  p0.maps.assign(alg.arrows.size(), QMatrix());
  std::vector<Representation> parts;
  for (const auto& g : gens) parts.push_back(projective_representation(alg, g.vertex));
  std::vector<std::vector<int>> part_offset(parts.size(), std::vector<int>(n, 0));
  for (size_t k = 0; k < parts.size(); ++k)
    for (int j = 0; j < n; ++j) {
      part_offset[k][j] = p0.dims[j];
      p0.dims[j] += parts[k].dims[j];
    }
  for (int a = 0; a < alg.num_arrows(); ++a) {
    int sv = alg.arrows[a].source, tv = alg.arrows[a].target;
    QMatrix m(p0.dims[tv], p0.dims[sv]);
    for (size_t k = 0; k < parts.size(); ++k)
      for (int r = 0; r < parts[k].dims[tv]; ++r)
        for (int c = 0; c < parts[k].dims[sv]; ++c)
          m(part_offset[k][tv] + r, part_offset[k][sv] + c) = parts[k].maps[a](r, c);
    p0.maps[a] = m;
  }

  // pi: P0 -> s, determined by sending each top generator to its chosen vector.
  // Images are propagated along the arrows of each projective summand.
  std::vector<QMatrix> pi(n);
  for (int j = 0; j < n; ++j) pi[j] = QMatrix(s.dims[j], p0.dims[j]);
  for (size_t k = 0; k < parts.size(); ++k) {
    int v0 = gens[k].vertex;
    // column 0 at v0 of a projective summand is the trivial path
    std::vector<std::vector<bool>> done(n);
    for (int j = 0; j < n; ++j) done[j].assign(parts[k].dims[j], false);
    pi[v0](gens[k].unit, part_offset[k][v0]) = 1;
    done[v0][0] = true;
    bool changed = true;
    while (changed) {
      changed = false;
      for (int a = 0; a < alg.num_arrows(); ++a) {
        int sv = alg.arrows[a].source, tv = alg.arrows[a].target;
        for (int c = 0; c < parts[k].dims[sv]; ++c) {
          if (!done[sv][c]) continue;
          for (int r = 0; r < parts[k].dims[tv]; ++r) {
            if (parts[k].maps[a](r, c) == 0 || done[tv][r]) continue;
            for (int x = 0; x < s.dims[tv]; ++x) {
              mpq_class val = 0;
              for (int y = 0; y < s.dims[sv]; ++y)
                val += s.maps[a](x, y) * pi[sv](y, part_offset[k][sv] + c);
              pi[tv](x, part_offset[k][tv] + r) = val;
            }
            done[tv][r] = true;
            changed = true;
          }
        }
      }
    }
  }

  ProjectiveCover cover;
  cover.p0 = std::move(p0);
  cover.pi = std::move(pi);
  cover.top = std::move(tops);
  return cover;
}

Representation syzygy(const Algebra& alg, const Representation& s, std::vector<int>* top) {
  const int n = alg.num_vertices();
  ProjectiveCover cover = projective_cover(alg, s);
  if (top) *top = cover.top;
  const Representation& p0 = cover.p0;
  const HomMap& pi = cover.pi;
  Representation omega;
  omega.dims.assign(n, 0);
  std::vector<QMatrix> basis(n);
  for (int j = 0; j < n; ++j) {
    basis[j] = nullspace(pi[j]);
    omega.dims[j] = basis[j].cols();
  }
  for (int a = 0; a < alg.num_arrows(); ++a) {
    int sv = alg.arrows[a].source, tv = alg.arrows[a].target;
    if (omega.dims[sv] == 0 || omega.dims[tv] == 0) {
      omega.maps.emplace_back(omega.dims[tv], omega.dims[sv]);
      continue;
    }
    omega.maps.push_back(solve(basis[tv], p0.maps[a] * basis[sv]));
  }
  return omega;
}

int ext1_dimension(const Algebra& alg, const Representation& s, const Representation& x) {
  std::vector<int> top;
  Representation omega = syzygy(alg, s, &top);
  int hom_p0 = 0;
  for (int i = 0; i < alg.num_vertices(); ++i) hom_p0 += top[i] * x.dims[i];
  return hom_dimension(alg, omega, x) - hom_p0 + hom_dimension(alg, s, x);
}

}  // namespace gentle
