#include "gentle/random.hpp"

#include <algorithm>
#include <set>

namespace gentle {

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

}  // namespace

Algebra random_gentle_algebra(std::mt19937_64& rng, int max_vertices, int max_arrows) {
  for (;;) {
    Algebra alg;
    const int n = uniform(rng, 1, max_vertices);
    for (int i = 1; i <= n; ++i) alg.add_vertex(std::to_string(i));
    std::vector<int> outdeg(n, 0), indeg(n, 0);
    const int target = uniform(rng, 0, max_arrows);
    for (int tries = 0; tries < 50 && alg.num_arrows() < target; ++tries) {
      int s = uniform(rng, 0, n - 1), t = uniform(rng, 0, n - 1);
      if (outdeg[s] >= 2 || indeg[t] >= 2) continue;
      outdeg[s]++;
      indeg[t]++;
      alg.add_arrow(std::string(1, static_cast<char>('a' + alg.num_arrows())), s, t);
    }
    // At each vertex split the (in, out) pairs into two partial matchings:
    // one inside the ideal, one outside.
    for (int v = 0; v < n; ++v) {
      auto in = alg.arrows_into(v), out = alg.arrows_from(v);
      if (in.empty() || out.empty()) continue;
      if (in.size() == 1 && out.size() == 1) {
        if (uniform(rng, 0, 1)) alg.add_relation(in[0], out[0]);
        continue;
      }
      std::shuffle(out.begin(), out.end(), rng);
      std::shuffle(in.begin(), in.end(), rng);
      // in[i] continues to out[i] outside the ideal; the crossed pairs are relations.
      for (size_t i = 0; i < in.size(); ++i)
        for (size_t j = 0; j < out.size(); ++j)
          if (i != j) alg.add_relation(in[i], out[j]);
    }
    if (!alg.is_gentle()) continue;
    alg.compute_signs();
    return alg;
  }
}

StringWord random_string(const Algebra& alg, std::mt19937_64& rng, int max_length) {
  const int v = uniform(rng, 0, alg.num_vertices() - 1);
  StringWord w = StringWord::trivial(v, uniform(rng, 0, 1) ? 1 : -1);
  const int len = uniform(rng, 0, max_length);
  for (int k = 0; k < len; ++k) {
    std::vector<StringWord> next;
    for (int a = 0; a < alg.num_arrows(); ++a)
      for (bool d : {true, false})
        if (auto r = compose(alg, w, StringWord::path({{a, d}}))) next.push_back(*r);
    if (next.empty()) break;
    w = next[uniform(rng, 0, static_cast<int>(next.size()) - 1)];
  }
  return w;
}

std::vector<StringWord> all_strings(const Algebra& alg, int max_length) {
  std::set<std::pair<std::string, StringWord::Kind>> seen;
  std::vector<StringWord> out, layer;
  for (int v = 0; v < alg.num_vertices(); ++v) {
    StringWord t = StringWord::trivial(v, 1);
    out.push_back(t);
    layer.push_back(t);
    layer.push_back(StringWord::trivial(v, -1));
  }
  for (int len = 1; len <= max_length; ++len) {
    std::vector<StringWord> next;
    for (const auto& w : layer)
      for (int a = 0; a < alg.num_arrows(); ++a)
        for (bool d : {true, false}) {
          auto r = compose(alg, w, StringWord::path({{a, d}}));
          if (!r) continue;
          next.push_back(*r);
          StringWord c = canonical_form(alg, *r);
          if (seen.insert({to_expr(alg, c), c.kind}).second) out.push_back(c);
        }
    layer = std::move(next);
  }
  return out;
}

std::vector<Letters> all_bands(const Algebra& alg, int max_length) {
  std::set<std::string> seen;
  std::vector<Letters> out;
  for (const auto& w : all_strings(alg, max_length)) {
    if (!w.is_path()) continue;
    for (const auto& cand : {w.letters, inverse(w.letters)}) {
      if (!is_band(alg, cand)) continue;
      Letters c = band_canonical(alg, cand);
      if (seen.insert(letters_expr(alg, c)).second) out.push_back(c);
    }
  }
  return out;
}

}  // namespace gentle
