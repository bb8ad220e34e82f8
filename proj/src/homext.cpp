#include "gentle/homext.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

#include "gentle/error.hpp"
#include "gentle/linalg.hpp"

namespace gentle {

namespace {

std::vector<int> nodes_of(const Algebra& alg, const StringWord& w, bool cyclic) {
  return cyclic ? band_nodes(alg, w.letters) : word_nodes(alg, w);
}

int node_at(const std::vector<int>& nodes, int j, bool cyclic) {
  return cyclic ? nodes[j % nodes.size()] : nodes[j];
}

Interval flip(Interval iv, int len, bool cyclic) { return reverse_interval(iv, len, cyclic); }

Letters slice(const Letters& w, int from, int to) {
  return Letters(w.begin() + from, w.begin() + to);
}

// len letters of a cyclic word starting at index from
Letters cyc(const Letters& w, int from, int len) {
  Letters out;
  int n = static_cast<int>(w.size());
  for (int i = 0; i < len; ++i) out.push_back(w[(from + i) % n]);
  return out;
}

Module module_from(const Algebra& alg, const Letters& l, int vertex) {
  if (l.empty()) return string_module(alg, StringWord::trivial(vertex, 1));
  if (!is_string(alg, l))
    throw std::logic_error("extension middle term is not a string: " + letters_expr(alg, l));
  return string_module(alg, StringWord::path(l));
}

struct Reading {
  StringWord word;
  bool flipped;
};

std::vector<Reading> readings(const StringWord& w) {
  return {{w, false}, {inverse(w), true}};
}

}  // namespace

std::vector<Overlap> overlaps(const Algebra& alg, const Module& x, const Module& y) {
  std::vector<Overlap> out;
  if (x.is_zero() || y.is_zero()) return out;
  const bool xc = x.is_band(), yc = y.is_band();
  const Letters& xw = x.word.letters;
  auto xnodes = nodes_of(alg, x.word, xc);
  for (const Reading& yr : readings(y.word)) {
    if (yr.flipped && y.word.is_trivial()) continue;
    const Letters& yw = yr.word.letters;
    auto ynodes = nodes_of(alg, yr.word, yc);
    const int bound = xc ? yr.word.length() : (yc ? x.word.length() : -1);
    for (Interval f : factor_intervals(xw, xc, bound)) {
      int k = interval_size(xw, f, xc);
      Letters fl = interval_letters(xw, f, xc);
      for (Interval g : image_intervals(yw, yc, bound)) {
        if (interval_size(yw, g, yc) != k) continue;
        if (k == 0) {
          if (yr.flipped) continue;  // trivial overlaps are orientation free
          if (node_at(xnodes, f.p, xc) != node_at(ynodes, g.p, yc)) continue;
        } else if (interval_letters(yw, g, yc) != fl) {
          continue;
        }
        Overlap o;
        o.x_interval = f;
        o.y_interval = yr.flipped ? flip(g, static_cast<int>(yw.size()), yc) : g;
        o.reversed = yr.flipped;
        o.length = k;
        out.push_back(o);
      }
    }
  }
  return out;
}

int hom_dim(const Algebra& alg, const Module& x, const Module& y) {
  if (x.is_band() && y.is_band())
    throw UnsupportedError("combinatorial Hom between two band modules is not implemented");
  return static_cast<int>(overlaps(alg, x, y).size());
}

int hom_dim(const Algebra& alg, const ModuleSum& x, const ModuleSum& y) {
  int total = 0;
  for (const auto& a : x.summands)
    for (const auto& b : y.summands) total += hom_dim(alg, a, b);
  return total;
}

int hom_dim_oracle(const Algebra& alg, const ModuleSum& x, const ModuleSum& y) {
  return hom_dimension(alg, representation(alg, x), representation(alg, y));
}

int ext_dim_oracle(const Algebra& alg, const ModuleSum& s, const ModuleSum& x) {
  return ext1_dimension(alg, representation(alg, s), representation(alg, x));
}

std::vector<ExtClass> ext_basis(const Algebra& alg, const Module& s, const Module& x) {
  if (!alg.has_signs()) throw DomainError("extension bases require a gentle algebra");
  std::vector<ExtClass> out;
  if (s.is_zero() || x.is_zero()) return out;
  if (s.is_band() && x.is_band())
    throw UnsupportedError("extensions between two band modules are not supported");
  const bool vc = s.is_band(), wc = x.is_band();
  const int lv = s.word.length(), lw = x.word.length();

  // Arrow extensions u = w a^-1 v (strings only).
  if (!vc && !wc) {
    std::set<std::tuple<int, int, int>> seen;
    for (const Reading& vr : readings(s.word))
      for (const Reading& wr : readings(x.word)) {
        for (int a = 0; a < alg.num_arrows(); ++a) {
          StringWord ainv = StringWord::path({{a, false}});
          auto left = compose(alg, wr.word, ainv);
          if (!left || !compose(alg, ainv, vr.word)) continue;
          auto u = compose(alg, *left, vr.word);
          if (!u) continue;
          int wnode = wr.flipped ? 0 : lw, vnode = vr.flipped ? lv : 0;
          if (!seen.insert({a, wnode, vnode}).second) continue;
          ExtClass e;
          e.kind = ExtClass::Kind::Arrow;
          e.arrow = a;
          e.v_word = vr.word;
          e.w_word = wr.word;
          e.v_flipped = vr.flipped;
          e.w_flipped = wr.flipped;
          e.middle = single(alg, string_module(alg, *u));
          out.push_back(std::move(e));
        }
      }
  }

  // Overlap extensions.
  std::set<std::tuple<int, int, int, int, int>> seen;
  for (const Reading& vr : readings(s.word))
    for (const Reading& wr : readings(x.word)) {
      const Letters& v = vr.word.letters;
      const Letters& w = wr.word.letters;
      auto vnodes = nodes_of(alg, vr.word, vc);
      auto wnodes = nodes_of(alg, wr.word, wc);
      const int bound = vc ? lw : (wc ? lv : -1);
      for (Interval iv : image_intervals(v, vc, bound))
        for (Interval fw : factor_intervals(w, wc, bound)) {
          int k = interval_size(v, iv, vc);
          if (interval_size(w, fw, wc) != k) continue;
          if (k == 0 ? node_at(vnodes, iv.p, vc) != node_at(wnodes, fw.p, wc)
                     : interval_letters(v, iv, vc) != interval_letters(w, fw, wc))
            continue;
          ExtClass e;
          e.kind = ExtClass::Kind::Overlap;
          auto letter_at = [](const Letters& l, int i, bool cyclic) -> std::optional<Letter> {
            int n = static_cast<int>(l.size());
            if (cyclic) return l[((i % n) + n) % n];
            if (i < 0 || i >= n) return std::nullopt;
            return l[i];
          };
          auto lb = letter_at(v, iv.p - 1, vc), la = letter_at(v, iv.q, vc);
          auto ld = letter_at(w, fw.p - 1, wc), lc = letter_at(w, fw.q, wc);
          if (lb) e.b = lb->arrow;
          if (la) e.a = la->arrow;
          if (ld) e.d = ld->arrow;
          if (lc) e.c = lc->arrow;
          if (!e.a && !e.c) continue;  // (i)
          if (!e.b && !e.d) continue;  // (ii)
          if (k == 0) {                // (iii)
            if (e.a && e.c && !alg.has_relation(*e.a, *e.c)) continue;
            if (e.b && e.d && !alg.has_relation(*e.b, *e.d)) continue;
          }
          // middle term letters; a trivial overlap may still join across a relation
          std::vector<Letters> pieces;
          if (!vc && !wc) {
            Letters u = slice(v, 0, iv.q), up = slice(w, 0, fw.q);
            Letters tail_w = slice(w, fw.q, lw), tail_v = slice(v, iv.q, lv);
            u.insert(u.end(), tail_w.begin(), tail_w.end());
            up.insert(up.end(), tail_v.begin(), tail_v.end());
            pieces = {u, up};
          } else if (wc) {
            Letters u = slice(v, 0, iv.q), around = cyc(w, fw.q, lw), tail = slice(v, iv.q, lv);
            u.insert(u.end(), around.begin(), around.end());
            u.insert(u.end(), tail.begin(), tail.end());
            pieces = {u};
          } else {
            Letters u = slice(w, 0, fw.q), around = cyc(v, iv.q, lv), tail = slice(w, fw.q, lw);
            u.insert(u.end(), around.begin(), around.end());
            u.insert(u.end(), tail.begin(), tail.end());
            pieces = {u};
          }
          bool valid = true;
          for (const auto& p : pieces) valid = valid && (p.empty() || is_string(alg, p));
          if (!valid) continue;

          // deduplicate across the four readings
          Interval vcan = vr.flipped ? flip(iv, lv, vc) : iv;
          Interval wcan = wr.flipped ? flip(fw, lw, wc) : fw;
          int orient = k == 0 ? 0 : (vr.flipped != wr.flipped ? 1 : 2);
          if (!seen.insert({vcan.p, vcan.q, wcan.p, wcan.q, orient}).second) continue;

          int mv = node_at(vnodes, iv.p, vc);
          e.v_word = vr.word;
          e.w_word = wr.word;
          e.v_flipped = vr.flipped;
          e.w_flipped = wr.flipped;
          e.v_cyclic = vc;
          e.w_cyclic = wc;
          e.v_interval = iv;
          e.w_interval = fw;
          e.m = k == 0 ? StringWord::trivial(mv, 1)
                       : StringWord::path(interval_letters(v, iv, vc));
          std::vector<Module> parts;
          for (const auto& p : pieces) parts.push_back(module_from(alg, p, mv));
          e.middle = make_sum(alg, std::move(parts));
          out.push_back(std::move(e));
        }
    }
  return out;
}

int ext_dim(const Algebra& alg, const ModuleSum& s, const ModuleSum& x) {
  int total = 0;
  for (const auto& a : s.summands)
    for (const auto& b : x.summands) total += static_cast<int>(ext_basis(alg, a, b).size());
  return total;
}

bool is_rigid(const Algebra& alg, const ModuleSum& m) {
  for (const auto& s : m.summands)
    if (s.is_band()) return false;
  return ext_dim(alg, m, m) == 0;
}

}  // namespace gentle
