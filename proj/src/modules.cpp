#include "gentle/modules.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "gentle/error.hpp"

namespace gentle {

Module string_module(const Algebra& alg, const StringWord& w) {
  return {Module::Kind::String, canonical_form(alg, w)};
}

Module band_module(const Algebra& alg, const Letters& band) {
  if (!is_band(alg, band)) throw DomainError("not a band: " + letters_expr(alg, band));
  return {Module::Kind::Band, StringWord::path(band_canonical(alg, band))};
}

static bool module_less(const Algebra& alg, const Module& a, const Module& b) {
  if (a.kind != b.kind) return a.kind == Module::Kind::String;
  if (a.word.kind != b.word.kind) return a.word.kind < b.word.kind;
  if (a.word.is_trivial()) return a.word.vertex < b.word.vertex;
  return compare_letters(alg, a.word.letters, b.word.letters) < 0;
}

ModuleSum make_sum(const Algebra& alg, std::vector<Module> parts) {
  ModuleSum out;
  for (auto& m : parts)
    if (!m.is_zero()) out.summands.push_back(std::move(m));
  std::sort(out.summands.begin(), out.summands.end(),
            [&](const Module& a, const Module& b) { return module_less(alg, a, b); });
  return out;
}

ModuleSum direct_sum(const Algebra& alg, const ModuleSum& a, const ModuleSum& b) {
  std::vector<Module> parts = a.summands;
  parts.insert(parts.end(), b.summands.begin(), b.summands.end());
  return make_sum(alg, std::move(parts));
}

ModuleSum single(const Algebra& alg, const Module& m) { return make_sum(alg, {m}); }

ModuleDiagram diagram(const Algebra& alg, const Module& m) {
  ModuleDiagram d;
  if (m.is_zero()) return d;
  const Letters& w = m.word.letters;
  if (m.is_band()) {
    d.labels = band_nodes(alg, w);
    int n = static_cast<int>(w.size());
    for (int j = 0; j < n; ++j) {
      int a = j, b = (j + 1) % n;
      if (w[j].direct)
        d.edges.push_back({a, b, w[j].arrow});
      else
        d.edges.push_back({b, a, w[j].arrow});
    }
    return d;
  }
  d.labels = word_nodes(alg, m.word);
  for (int j = 0; j < m.word.length(); ++j) {
    if (w[j].direct)
      d.edges.push_back({j, j + 1, w[j].arrow});
    else
      d.edges.push_back({j + 1, j, w[j].arrow});
  }
  return d;
}

ModuleDiagram diagram(const Algebra& alg, const ModuleSum& m) {
  ModuleDiagram d;
  for (const auto& s : m.summands) {
    ModuleDiagram part = diagram(alg, s);
    int off = d.size();
    d.labels.insert(d.labels.end(), part.labels.begin(), part.labels.end());
    for (auto e : part.edges) d.edges.push_back({e.from + off, e.to + off, e.arrow});
  }
  return d;
}

DimVector dim_vector(int num_vertices, const ModuleDiagram& d) {
  DimVector v(num_vertices, 0);
  for (int l : d.labels) v[l]++;
  return v;
}

DimVector dim_vector(const Algebra& alg, const Module& m) {
  return dim_vector(alg.num_vertices(), diagram(alg, m));
}

DimVector dim_vector(const Algebra& alg, const ModuleSum& m) {
  return dim_vector(alg.num_vertices(), diagram(alg, m));
}

Letters maximal_path_from(const Algebra& alg, int first_arrow) {
  Letters p{{first_arrow, true}};
  for (int guard = 0;; ++guard) {
    if (guard > 4 * alg.num_arrows() + 4) throw DomainError("algebra is infinite dimensional");
    int last = p.back().arrow, next = -1;
    for (int b : alg.arrows_from(alg.arrows[last].target))
      if (!alg.has_relation(last, b)) next = b;
    if (next < 0) return p;
    p.push_back({next, true});
  }
}

Letters maximal_path_into(const Algebra& alg, int last_arrow) {
  Letters p{{last_arrow, true}};
  for (int guard = 0;; ++guard) {
    if (guard > 4 * alg.num_arrows() + 4) throw DomainError("algebra is infinite dimensional");
    int first = p.front().arrow, prev = -1;
    for (int b : alg.arrows_into(alg.arrows[first].source))
      if (!alg.has_relation(b, first)) prev = b;
    if (prev < 0) return p;
    p.insert(p.begin(), Letter{prev, true});
  }
}

Module projective(const Algebra& alg, int i) {
  auto out = alg.arrows_from(i);
  Letters w;
  if (out.size() >= 1) w = maximal_path_from(alg, out[0]);
  if (out.size() == 2) {
    Letters q = maximal_path_from(alg, out[1]);
    w = inverse(w);
    w.insert(w.end(), q.begin(), q.end());
  }
  if (w.empty()) return simple(alg, i);
  return string_module(alg, StringWord::path(w));
}

Module injective(const Algebra& alg, int i) {
  auto in = alg.arrows_into(i);
  Letters w;
  if (in.size() >= 1) w = maximal_path_into(alg, in[0]);
  if (in.size() == 2) {
    Letters q = inverse(maximal_path_into(alg, in[1]));
    w.insert(w.end(), q.begin(), q.end());
  }
  if (w.empty()) return simple(alg, i);
  return string_module(alg, StringWord::path(w));
}

Module simple(const Algebra& alg, int i) { return string_module(alg, StringWord::trivial(i, 1)); }

bool is_projective(const Algebra& alg, const Module& m) {
  if (m.is_band() || m.is_zero()) return false;
  for (int i = 0; i < alg.num_vertices(); ++i)
    if (projective(alg, i) == m) return true;
  return false;
}

bool is_injective(const Algebra& alg, const Module& m) {
  if (m.is_band() || m.is_zero()) return false;
  for (int i = 0; i < alg.num_vertices(); ++i)
    if (injective(alg, i) == m) return true;
  return false;
}

ModuleSum parse_module_expr(const Algebra& alg, const std::string& text) {
  std::istringstream in(text);
  std::vector<std::vector<std::string>> parts(1);
  std::string tok;
  while (in >> tok) {
    if (tok == "+")
      parts.emplace_back();
    else
      parts.back().push_back(tok);
  }
  std::vector<Module> mods;
  for (const auto& p : parts) {
    if (p.empty()) throw ParseError("empty summand in module expression '" + text + "'");
    std::string kw = p[0];
    std::string rest;
    size_t start = 1;
    bool band = false;
    if (kw == "band") {
      band = true;
    } else if (kw.rfind("band:", 0) == 0) {
      band = true;
      rest = kw.substr(5);
    } else if (kw != "str") {
      start = 0;  // bare string expression
    }
    for (size_t i = start; i < p.size(); ++i) rest += (rest.empty() ? "" : " ") + p[i];
    if (rest.empty()) throw ParseError("missing string expression after '" + kw + "'");
    if (band)
      mods.push_back(band_module(alg, parse_band_expr(alg, rest)));
    else
      mods.push_back(string_module(alg, parse_string_expr(alg, rest)));
  }
  return make_sum(alg, std::move(mods));
}

std::string module_expr(const Algebra& alg, const Module& m) {
  if (m.is_zero()) return "0";
  if (m.is_band()) return "band " + letters_expr(alg, m.word.letters);
  return "str " + to_expr(alg, m.word);
}

std::string module_expr(const Algebra& alg, const ModuleSum& m) {
  if (m.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < m.summands.size(); ++i) {
    if (i) out += " + ";
    out += module_expr(alg, m.summands[i]);
  }
  return out;
}

std::string stacked(const Algebra& alg, const Module& m) {
  if (m.is_zero()) return "0";
  ModuleDiagram d = diagram(alg, m);
  int n = d.size();
  // layer = longest path from a node without incoming edges
  std::vector<int> level(n, 0);
  for (int round = 0; round < n; ++round)
    for (auto e : d.edges) level[e.to] = std::max(level[e.to], level[e.from] + 1);
  int depth = *std::max_element(level.begin(), level.end());
  bool short_names = std::all_of(alg.vertices.begin(), alg.vertices.end(),
                                 [](const std::string& s) { return s.size() == 1; });
  std::string out;
  for (int l = 0; l <= depth; ++l) {
    if (l) out += '/';
    bool first = true;
    for (int j = 0; j < n; ++j) {
      if (level[j] != l) continue;
      if (!first && !short_names) out += ',';
      out += alg.vertices[d.labels[j]];
      first = false;
    }
  }
  return m.is_band() ? "band(" + out + ")" : out;
}

std::string stacked(const Algebra& alg, const ModuleSum& m) {
  if (m.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < m.summands.size(); ++i) {
    if (i) out += " + ";
    out += stacked(alg, m.summands[i]);
  }
  return out;
}

}  // namespace gentle
