#include "gentle/strings.hpp"

#include <algorithm>
#include <sstream>

#include "gentle/error.hpp"

namespace gentle {

int letter_source(const Algebra& alg, Letter x) {
  const Arrow& a = alg.arrows[x.arrow];
  return x.direct ? a.source : a.target;
}

int letter_target(const Algebra& alg, Letter x) {
  const Arrow& a = alg.arrows[x.arrow];
  return x.direct ? a.target : a.source;
}

static void need_signs(const Algebra& alg) {
  if (!alg.has_signs()) throw DomainError("sign functions are only defined for gentle algebras");
}

int letter_sigma(const Algebra& alg, Letter x) {
  need_signs(alg);
  return x.direct ? alg.sigma[x.arrow] : alg.epsilon[x.arrow];
}

int letter_epsilon(const Algebra& alg, Letter x) {
  need_signs(alg);
  return x.direct ? alg.epsilon[x.arrow] : alg.sigma[x.arrow];
}

int word_source(const Algebra& alg, const StringWord& w) {
  if (w.is_trivial()) return w.vertex;
  if (w.is_path()) return letter_source(alg, w.letters.front());
  throw DomainError("the zero string has no endpoints");
}

int word_target(const Algebra& alg, const StringWord& w) {
  if (w.is_trivial()) return w.vertex;
  if (w.is_path()) return letter_target(alg, w.letters.back());
  throw DomainError("the zero string has no endpoints");
}

int word_sigma(const Algebra& alg, const StringWord& w) {
  if (w.is_trivial()) return -w.sign;
  if (w.is_path()) return letter_sigma(alg, w.letters.front());
  throw DomainError("the zero string has no signs");
}

int word_epsilon(const Algebra& alg, const StringWord& w) {
  if (w.is_trivial()) return w.sign;
  if (w.is_path()) return letter_epsilon(alg, w.letters.back());
  throw DomainError("the zero string has no signs");
}

bool letters_compose(const Algebra& alg, Letter x, Letter y) {
  if (letter_target(alg, x) != letter_source(alg, y)) return false;
  if (x.arrow == y.arrow && x.direct != y.direct) return false;
  if (x.direct && y.direct) return !alg.has_relation(x.arrow, y.arrow);
  if (!x.direct && !y.direct) return !alg.has_relation(y.arrow, x.arrow);
  return true;
}

bool is_string(const Algebra& alg, const Letters& letters) {
  for (size_t i = 0; i + 1 < letters.size(); ++i)
    if (!letters_compose(alg, letters[i], letters[i + 1])) return false;
  return true;
}

std::optional<StringWord> compose(const Algebra& alg, const StringWord& v, const StringWord& w) {
  if (v.is_zero() || w.is_zero()) return StringWord::zero();
  if (v.is_trivial() && w.is_trivial()) {
    if (v == w) return v;
    return std::nullopt;
  }
  if (v.is_trivial()) {
    if (word_source(alg, w) == v.vertex && word_sigma(alg, w) == -v.sign) return w;
    return std::nullopt;
  }
  if (w.is_trivial()) {
    if (word_target(alg, v) == w.vertex && word_epsilon(alg, v) == w.sign) return v;
    return std::nullopt;
  }
  if (!letters_compose(alg, v.letters.back(), w.letters.front())) return std::nullopt;
  Letters out = v.letters;
  out.insert(out.end(), w.letters.begin(), w.letters.end());
  return StringWord::path(std::move(out));
}

Letters inverse(const Letters& w) {
  Letters out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

StringWord inverse(const StringWord& w) {
  if (w.is_trivial()) return StringWord::trivial(w.vertex, -w.sign);
  if (w.is_path()) return StringWord::path(inverse(w.letters));
  return w;
}

int compare_letters(const Algebra& alg, const Letters& a, const Letters& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = 0; i < a.size(); ++i) {
    int c = alg.arrows[a[i].arrow].name.compare(alg.arrows[b[i].arrow].name);
    if (c != 0) return c < 0 ? -1 : 1;
    if (a[i].direct != b[i].direct) return a[i].direct ? 1 : -1;
  }
  return 0;
}

StringWord canonical_form(const Algebra& alg, const StringWord& w) {
  if (w.is_trivial()) return StringWord::trivial(w.vertex, 1);
  if (w.is_zero()) return w;
  Letters inv = inverse(w.letters);
  return compare_letters(alg, inv, w.letters) < 0 ? StringWord::path(inv) : w;
}

bool is_band(const Algebra& alg, const Letters& w) {
  if (w.empty()) return false;
  if (letter_source(alg, w.front()) != letter_target(alg, w.back())) return false;
  if (!is_string(alg, w) || !letters_compose(alg, w.back(), w.front())) return false;
  const size_t n = w.size();
  for (size_t d = 1; d < n; ++d) {
    if (n % d) continue;
    bool periodic = true;
    for (size_t i = d; i < n && periodic; ++i) periodic = w[i] == w[i - d];
    if (periodic) return false;
  }
  return true;
}

Letters band_canonical(const Algebra& alg, const Letters& w) {
  Letters best = w;
  for (const Letters& base : {w, inverse(w)}) {
    for (size_t r = 0; r < base.size(); ++r) {
      Letters rot(base.begin() + r, base.end());
      rot.insert(rot.end(), base.begin(), base.begin() + r);
      if (compare_letters(alg, rot, best) < 0) best = rot;
    }
  }
  return best;
}

std::vector<int> word_nodes(const Algebra& alg, const StringWord& w) {
  if (w.is_zero()) return {};
  if (w.is_trivial()) return {w.vertex};
  std::vector<int> out{letter_source(alg, w.letters.front())};
  for (Letter x : w.letters) out.push_back(letter_target(alg, x));
  return out;
}

std::vector<int> band_nodes(const Algebra& alg, const Letters& band) {
  std::vector<int> out;
  for (Letter x : band) out.push_back(letter_source(alg, x));
  return out;
}

static std::vector<Interval> intervals(const Letters& w, bool cyclic, bool factor, int max_len) {
  std::vector<Interval> out;
  const int n = static_cast<int>(w.size());
  // A factor interval has an inverse letter on its left and a direct one on its
  // right; an image interval the other way round.
  auto left_ok = [&](Letter x) { return factor ? !x.direct : x.direct; };
  auto right_ok = [&](Letter x) { return factor ? x.direct : !x.direct; };
  if (!cyclic) {
    for (int p = 0; p <= n; ++p) {
      if (p > 0 && !left_ok(w[p - 1])) continue;
      for (int q = p; q <= n; ++q)
        if (q == n || right_ok(w[q])) out.push_back({p, q});
    }
    return out;
  }
  if (max_len < 0) max_len = n - 1;
  for (int p = 0; p < n; ++p) {
    if (!left_ok(w[(p - 1 + n) % n])) continue;
    for (int k = 0; k <= max_len; ++k)
      if (right_ok(w[(p + k) % n])) out.push_back({p, p + k});
  }
  return out;
}

std::vector<Interval> factor_intervals(const Letters& w, bool cyclic, int max_len) {
  return intervals(w, cyclic, true, max_len);
}

std::vector<Interval> image_intervals(const Letters& w, bool cyclic, int max_len) {
  return intervals(w, cyclic, false, max_len);
}

int interval_size(const Letters&, Interval iv, bool) { return iv.q - iv.p; }

Interval reverse_interval(Interval iv, int len, bool cyclic) {
  if (!cyclic) return {len - iv.q, len - iv.p};
  int p = ((len - iv.q) % len + len) % len;
  return {p, p + iv.q - iv.p};
}

Letters interval_letters(const Letters& w, Interval iv, bool cyclic) {
  Letters out;
  int k = interval_size(w, iv, cyclic);
  int n = static_cast<int>(w.size());
  for (int i = 0; i < k; ++i) out.push_back(w[cyclic ? (iv.p + i) % n : iv.p + i]);
  return out;
}

StringWord substring(const Algebra& alg, const StringWord& w, int p, int q) {
  if (w.is_trivial()) return w;
  if (p < q) return StringWord::path(Letters(w.letters.begin() + p, w.letters.begin() + q));
  auto nodes = word_nodes(alg, w);
  int sign = 1;
  if (alg.has_signs()) {
    if (p < w.length())
      sign = -letter_sigma(alg, w.letters[p]);
    else if (p > 0)
      sign = letter_epsilon(alg, w.letters[p - 1]);
  }
  return StringWord::trivial(nodes[p], sign);
}

static std::vector<Decomposition> decompositions(const Algebra& alg, const StringWord& w,
                                                 bool factor) {
  std::vector<Decomposition> out;
  if (w.is_zero()) return out;
  if (w.is_trivial()) return {{StringWord::zero(), w, StringWord::zero()}};
  int n = w.length();
  for (Interval iv : intervals(w.letters, false, factor, -1)) {
    Decomposition d;
    d.left = iv.p == 0 ? StringWord::zero() : substring(alg, w, 0, iv.p);
    d.middle = substring(alg, w, iv.p, iv.q);
    d.right = iv.q == n ? StringWord::zero() : substring(alg, w, iv.q, n);
    out.push_back(d);
  }
  return out;
}

std::vector<Decomposition> fac_decompositions(const Algebra& alg, const StringWord& w) {
  return decompositions(alg, w, true);
}

std::vector<Decomposition> sub_decompositions(const Algebra& alg, const StringWord& w) {
  return decompositions(alg, w, false);
}

static std::vector<std::string> split_ws(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

static Letters parse_letters(const Algebra& alg, const std::vector<std::string>& toks) {
  Letters out;
  for (const auto& t : toks) {
    bool inv = !t.empty() && t.back() == '~';
    std::string name = inv ? t.substr(0, t.size() - 1) : t;
    int a = alg.arrow_index(name);
    if (a < 0) throw ParseError("unknown arrow '" + name + "' in string expression");
    out.push_back({a, !inv});
  }
  return out;
}

StringWord parse_string_expr(const Algebra& alg, const std::string& text) {
  auto toks = split_ws(text);
  if (toks.empty()) throw ParseError("empty string expression");
  if (toks.size() == 1 && toks[0] == "0") return StringWord::zero();
  if (toks.size() == 1 && toks[0].rfind("e(", 0) == 0 && toks[0].back() == ')') {
    std::string body = toks[0].substr(2, toks[0].size() - 3);
    auto comma = body.rfind(',');
    if (comma == std::string::npos) throw ParseError("trivial string needs e(<vertex>,+|-)");
    std::string v = body.substr(0, comma), s = body.substr(comma + 1);
    int vi = alg.vertex_index(v);
    if (vi < 0) throw ParseError("unknown vertex '" + v + "' in trivial string");
    if (s != "+" && s != "-") throw ParseError("trivial string sign must be + or -");
    return StringWord::trivial(vi, s == "+" ? 1 : -1);
  }
  Letters l = parse_letters(alg, toks);
  if (!is_string(alg, l)) throw DomainError("'" + text + "' is not a string");
  return StringWord::path(std::move(l));
}

Letters parse_band_expr(const Algebra& alg, const std::string& text) {
  std::string body = text;
  auto first = body.find_first_not_of(" \t");
  if (first != std::string::npos && body.compare(first, 5, "band:") == 0)
    body = body.substr(first + 5);
  Letters l = parse_letters(alg, split_ws(body));
  if (!is_band(alg, l)) throw DomainError("'" + text + "' is not a band");
  return l;
}

std::string letters_expr(const Algebra& alg, const Letters& w) {
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += alg.arrows[w[i].arrow].name;
    if (!w[i].direct) out += '~';
  }
  return out;
}

std::string to_expr(const Algebra& alg, const StringWord& w) {
  if (w.is_zero()) return "0";
  if (w.is_trivial())
    return "e(" + alg.vertices[w.vertex] + "," + (w.sign > 0 ? "+" : "-") + ")";
  return letters_expr(alg, w.letters);
}

}  // namespace gentle
