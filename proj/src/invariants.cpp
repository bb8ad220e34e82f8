#include "gentle/invariants.hpp"

#include <stdexcept>

#include "gentle/ar.hpp"
#include "gentle/error.hpp"
#include "gentle/linalg.hpp"

namespace gentle {

namespace {

// A module diagram read as a walk: edge j joins node j and node j+1 (mod n for
// cycles) and points forward when forward[j] is true.
struct Walk {
  std::vector<int> labels;
  std::vector<bool> forward;
  bool cyclic = false;
};

Walk walk_of(const Algebra& alg, const Module& m) {
  Walk w;
  w.cyclic = m.is_band();
  w.labels = w.cyclic ? band_nodes(alg, m.word.letters) : word_nodes(alg, m.word);
  for (const auto& x : m.word.letters) w.forward.push_back(x.direct);
  return w;
}

YPolynomial walk_polynomial(const Walk& w, int nv) {
  const int n = static_cast<int>(w.labels.size());
  auto var = [&](int node) {
    Exponent e(nv, 0);
    e[w.labels[node]] = 1;
    return YPolynomial::monomial(e);
  };
  // edge j violates closure when its tail is chosen and its head is not
  auto allowed = [&](int j, bool in_j, bool in_next) {
    return w.forward[j] ? (!in_j || in_next) : (!in_next || in_j);
  };
  YPolynomial total(nv);
  const int first_states = w.cyclic ? 2 : 1;
  for (int fixed = 0; fixed < first_states; ++fixed) {
    YPolynomial dp[2] = {YPolynomial(nv), YPolynomial(nv)};
    if (w.cyclic) {
      dp[fixed] = fixed ? var(0) : YPolynomial::one(nv);
    } else {
      dp[0] = YPolynomial::one(nv);
      dp[1] = var(0);
    }
    for (int j = 0; j + 1 < n; ++j) {
      YPolynomial next[2] = {YPolynomial(nv), YPolynomial(nv)};
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
          if (!dp[a].is_zero() && allowed(j, a, b)) next[b] = next[b] + (b ? dp[a] * var(j + 1) : dp[a]);
      dp[0] = next[0];
      dp[1] = next[1];
    }
    for (int a = 0; a < 2; ++a)
      if (!w.cyclic || allowed(n - 1, a, fixed)) total = total + dp[a];
  }
  return total;
}

}  // namespace

std::vector<std::string> variable_names(const Algebra& alg) { return alg.vertices; }

YPolynomial f_polynomial(const Algebra& alg, const Module& m) {
  if (m.is_zero()) return YPolynomial::one(alg.num_vertices());
  return walk_polynomial(walk_of(alg, m), alg.num_vertices());
}

YPolynomial f_polynomial(const Algebra& alg, const ModuleSum& m) {
  YPolynomial r = YPolynomial::one(alg.num_vertices());
  for (const auto& s : m.summands) r = r * f_polynomial(alg, s);
  return r;
}

YPolynomial f_polynomial_naive(int nv, const ModuleDiagram& d) {
  const int n = d.size();
  if (n > 24) throw UnsupportedError("naive enumeration is limited to 24 diagram nodes");
  YPolynomial r(nv);
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    bool closed = true;
    for (const auto& e : d.edges)
      if ((mask >> e.from & 1) && !(mask >> e.to & 1)) {
        closed = false;
        break;
      }
    if (!closed) continue;
    Exponent e(nv, 0);
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) e[d.labels[i]]++;
    r.add_term(e, 1);
  }
  return r;
}

long long chi(const Algebra& alg, const Module& m, const DimVector& e) {
  return f_polynomial(alg, m).coeff(e);
}

long long chi(const Algebra& alg, const ModuleSum& m, const DimVector& e) {
  return f_polynomial(alg, m).coeff(e);
}

GVector g_vector(const Algebra& alg, const Module& m) {
  const int nv = alg.num_vertices();
  GVector g(nv, 0);
  if (m.is_zero()) return g;
  if (m.is_band()) return g_vector_homological(alg, single(alg, m));
  if (!alg.has_signs()) throw DomainError("combinatorial g-vectors require a gentle algebra");
  const StringWord& w = m.word;
  auto nodes = word_nodes(alg, w);
  const int len = w.length();
  for (int j = 0; j <= len; ++j) {
    bool out_left = j > 0 && !w.letters[j - 1].direct;
    bool out_right = j < len && w.letters[j].direct;
    bool in_left = j > 0 && w.letters[j - 1].direct;
    bool in_right = j < len && !w.letters[j].direct;
    if (!out_left && !out_right) g[nodes[j]]--;                        // bottom
    if (!in_left && !in_right && j != 0 && j != len) g[nodes[j]]++;    // top
  }
  for (int a = 0; a < alg.num_arrows(); ++a) {
    if (compose(alg, StringWord::path({{a, true}}), w)) {
      g[alg.arrows[a].source]++;
      break;
    }
  }
  for (int b = 0; b < alg.num_arrows(); ++b) {
    if (compose(alg, w, StringWord::path({{b, false}}))) {
      g[alg.arrows[b].source]++;
      break;
    }
  }
  return g;
}

GVector g_vector(const Algebra& alg, const ModuleSum& m) {
  GVector g(alg.num_vertices(), 0);
  for (const auto& s : m.summands) {
    GVector h = g_vector(alg, s);
    for (size_t i = 0; i < g.size(); ++i) g[i] += h[i];
  }
  return g;
}

GVector g_vector_homological(const Algebra& alg, const ModuleSum& m) {
  const int nv = alg.num_vertices();
  GVector g(nv, 0);
  if (m.empty()) return g;
  Representation l = representation(alg, m);
  for (int i = 0; i < nv; ++i) {
    Representation s = simple_representation(alg, i);
    g[i] = ext1_dimension(alg, s, l) - hom_dimension(alg, s, l);
  }
  return g;
}

std::vector<int> exchange_times(const Algebra& alg, const DimVector& e) {
  IntMatrix b = alg.exchange_matrix();
  std::vector<int> r(alg.num_vertices(), 0);
  for (int i = 0; i < alg.num_vertices(); ++i)
    for (int j = 0; j < alg.num_vertices(); ++j) r[i] += b[i][j] * e[j];
  return r;
}

LaurentCC cluster_character(const IntMatrix& b, const YPolynomial& f, const GVector& g) {
  const int n = static_cast<int>(g.size());
  LaurentCC cc(n);
  for (const auto& [e, c] : f.terms()) {
    Exponent x(g);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) x[i] += b[i][j] * e[j];
    cc.add_term(x, e, c);
  }
  return cc;
}

LaurentCC cluster_character(const Algebra& alg, const ModuleSum& m, const GVector& g) {
  return cluster_character(alg.exchange_matrix(), f_polynomial(alg, m), g);
}

LaurentCC cluster_character(const Algebra& alg, const ModuleSum& m) {
  return cluster_character(alg, m, g_vector(alg, m));
}

}  // namespace gentle
