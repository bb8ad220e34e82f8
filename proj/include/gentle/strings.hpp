#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gentle/algebra.hpp"

namespace gentle {

struct Letter {
  int arrow = 0;
  bool direct = true;
  bool operator==(const Letter&) const = default;
  Letter inverse() const { return {arrow, !direct}; }
};

using Letters = std::vector<Letter>;

struct StringWord {
  enum class Kind { Zero, Trivial, Path };
  Kind kind = Kind::Zero;
  int vertex = -1;  // Trivial only
  int sign = 1;     // Trivial only
  Letters letters;  // Path only

  static StringWord zero() { return {}; }
  static StringWord trivial(int v, int s) { return {Kind::Trivial, v, s, {}}; }
  static StringWord path(Letters l) { return {Kind::Path, -1, 1, std::move(l)}; }

  bool is_zero() const { return kind == Kind::Zero; }
  bool is_trivial() const { return kind == Kind::Trivial; }
  bool is_path() const { return kind == Kind::Path; }
  int length() const { return static_cast<int>(letters.size()); }
  bool operator==(const StringWord&) const = default;
};

// Endpoints and signs of single letters (sigma(a^-1) = epsilon(a) and vice versa).
int letter_source(const Algebra& alg, Letter x);
int letter_target(const Algebra& alg, Letter x);
int letter_sigma(const Algebra& alg, Letter x);
int letter_epsilon(const Algebra& alg, Letter x);

// Endpoints of a nonzero string; for trivial strings both are the vertex.
int word_source(const Algebra& alg, const StringWord& w);
int word_target(const Algebra& alg, const StringWord& w);
int word_sigma(const Algebra& alg, const StringWord& w);
int word_epsilon(const Algebra& alg, const StringWord& w);

// True iff "x then y" is a legal two-letter walk.
bool letters_compose(const Algebra& alg, Letter x, Letter y);
bool is_string(const Algebra& alg, const Letters& letters);

// Concatenation vw with the trivial-string sign rules; nullopt when undefined.
// Zero is absorbing.
std::optional<StringWord> compose(const Algebra& alg, const StringWord& v, const StringWord& w);

Letters inverse(const Letters& w);
StringWord inverse(const StringWord& w);

// Total order: length, then lexicographic on (arrow name, direct flag).
int compare_letters(const Algebra& alg, const Letters& a, const Letters& b);
StringWord canonical_form(const Algebra& alg, const StringWord& w);

// Bands: cyclic strings all of whose powers are strings, not proper powers.
bool is_band(const Algebra& alg, const Letters& w);
Letters band_canonical(const Algebra& alg, const Letters& w);

// Vertex at each node of the walk (length + 1 entries; bands use length entries).
std::vector<int> word_nodes(const Algebra& alg, const StringWord& w);
std::vector<int> band_nodes(const Algebra& alg, const Letters& band);

// Node intervals [p, q] of a walk. "Factor" intervals have arrows only leaving
// them, "image" (sub) intervals only entering them. On cyclic walks p < length and
// q = p + size may run past the end (node indices are then read mod length);
// sizes go up to max_len, by default length - 1.
struct Interval {
  int p = 0;
  int q = 0;
  bool operator==(const Interval&) const = default;
};
std::vector<Interval> factor_intervals(const Letters& w, bool cyclic = false, int max_len = -1);
std::vector<Interval> image_intervals(const Letters& w, bool cyclic = false, int max_len = -1);
// Letters strictly inside the interval (q - p of them, wrapping for cyclic walks).
Letters interval_letters(const Letters& w, Interval iv, bool cyclic = false);
int interval_size(const Letters& w, Interval iv, bool cyclic = false);
// The same nodes seen in the inverse reading of a walk of the given length.
Interval reverse_interval(Interval iv, int len, bool cyclic = false);

struct Decomposition {
  StringWord left, middle, right;
};
std::vector<Decomposition> fac_decompositions(const Algebra& alg, const StringWord& w);
std::vector<Decomposition> sub_decompositions(const Algebra& alg, const StringWord& w);

// Substring on nodes [p, q] of a string as a StringWord (trivial when p == q).
StringWord substring(const Algebra& alg, const StringWord& w, int p, int q);

// String expressions: "a b~ c", "e(3,+)", "0". A leading "band:" is accepted by
// parse_band_expr only.
StringWord parse_string_expr(const Algebra& alg, const std::string& text);
Letters parse_band_expr(const Algebra& alg, const std::string& text);
std::string to_expr(const Algebra& alg, const StringWord& w);
std::string letters_expr(const Algebra& alg, const Letters& w);

}  // namespace gentle
