#include "gentle/ar.hpp"

#include "gentle/error.hpp"

namespace gentle {

Letters hook_path(const Algebra& alg, int a) {
  for (int b : alg.arrows_from(alg.arrows[a].source))
    if (b != a) return maximal_path_from(alg, b);
  return {};
}

Letters cohook_path(const Algebra& alg, int a) {
  for (int b : alg.arrows_into(alg.arrows[a].target))
    if (b != a) return maximal_path_into(alg, b);
  return {};
}

namespace {

Letters cat(Letters a, const Letters& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// First arrow a for which x(a) (a one-letter string) composes with w on the given side.
int extending_arrow(const Algebra& alg, const StringWord& w, bool on_left, bool direct) {
  for (int a = 0; a < alg.num_arrows(); ++a) {
    StringWord x = StringWord::path({{a, direct}});
    auto r = on_left ? compose(alg, x, w) : compose(alg, w, x);
    if (r) return a;
  }
  return -1;
}

StringWord from_letters(Letters l, int vertex, int sign) {
  if (l.empty()) return StringWord::trivial(vertex, sign);
  return StringWord::path(std::move(l));
}

bool all_direct(const Letters& w) {
  for (auto x : w)
    if (!x.direct) return false;
  return true;
}

bool all_inverse(const Letters& w) {
  for (auto x : w)
    if (x.direct) return false;
  return true;
}

}  // namespace

StringWord f_left(const Algebra& alg, const StringWord& w) {
  if (w.is_zero()) return w;
  if (int a = extending_arrow(alg, w, true, true); a >= 0)
    return StringWord::path(cat(cat(inverse(hook_path(alg, a)), {{a, true}}), w.letters));
  if (w.is_trivial() || all_direct(w.letters)) return StringWord::zero();
  // remove the cohook q_a a^-1 on the left
  size_t k = 0;
  while (w.letters[k].direct) ++k;
  int a = w.letters[k].arrow;
  Letters rest(w.letters.begin() + k + 1, w.letters.end());
  return from_letters(rest, alg.arrows[a].source, alg.sigma[a]);
}

StringWord f_right(const Algebra& alg, const StringWord& w) {
  if (w.is_zero()) return w;
  if (int a = extending_arrow(alg, w, false, false); a >= 0)
    return StringWord::path(cat(cat(w.letters, {{a, false}}), hook_path(alg, a)));
  if (w.is_trivial() || all_inverse(w.letters)) return StringWord::zero();
  // remove the cohook a q_a^-1 on the right
  int k = w.length() - 1;
  while (!w.letters[k].direct) --k;
  int a = w.letters[k].arrow;
  Letters rest(w.letters.begin(), w.letters.begin() + k);
  return from_letters(rest, alg.arrows[a].source, -alg.sigma[a]);
}

StringWord g_left(const Algebra& alg, const StringWord& w) {
  if (w.is_zero()) return w;
  if (int a = extending_arrow(alg, w, true, false); a >= 0)
    return StringWord::path(cat(cat(cohook_path(alg, a), {{a, false}}), w.letters));
  if (w.is_trivial() || all_inverse(w.letters)) return StringWord::zero();
  // remove the hook p_a^-1 a on the left
  size_t k = 0;
  while (!w.letters[k].direct) ++k;
  int a = w.letters[k].arrow;
  Letters rest(w.letters.begin() + k + 1, w.letters.end());
  return from_letters(rest, alg.arrows[a].target, alg.epsilon[a]);
}

StringWord g_right(const Algebra& alg, const StringWord& w) {
  if (w.is_zero()) return w;
  if (int a = extending_arrow(alg, w, false, true); a >= 0)
    return StringWord::path(cat(cat(w.letters, {{a, true}}), inverse(cohook_path(alg, a))));
  if (w.is_trivial() || all_direct(w.letters)) return StringWord::zero();
  // remove the hook a^-1 p_a on the right
  int k = w.length() - 1;
  while (w.letters[k].direct) --k;
  int a = w.letters[k].arrow;
  Letters rest(w.letters.begin(), w.letters.begin() + k);
  return from_letters(rest, alg.arrows[a].target, -alg.epsilon[a]);
}

static void need_gentle(const Algebra& alg) {
  if (!alg.has_signs()) throw DomainError("AR translation requires a gentle algebra");
}

Module tau(const Algebra& alg, const Module& m) {
  need_gentle(alg);
  if (m.is_band() || m.is_zero()) return m;
  StringWord l = g_left(alg, m.word);
  StringWord r = l.is_zero() ? g_left(alg, g_right(alg, m.word)) : g_right(alg, l);
  return string_module(alg, r);
}

Module tau_inv(const Algebra& alg, const Module& m) {
  need_gentle(alg);
  if (m.is_band() || m.is_zero()) return m;
  StringWord l = f_left(alg, m.word);
  StringWord r = l.is_zero() ? f_left(alg, f_right(alg, m.word)) : f_right(alg, l);
  return string_module(alg, r);
}

ARSequence ar_sequence(const Algebra& alg, const Module& m) {
  need_gentle(alg);
  if (m.is_zero()) throw DomainError("no almost split sequence starts at the zero module");
  if (m.is_band())
    throw UnsupportedError("almost split sequences of band modules are not implemented");
  StringWord l = f_left(alg, m.word), r = f_right(alg, m.word);
  if (l.is_zero() && r.is_zero())
    throw DomainError("module " + module_expr(alg, m) + " is injective; no sequence starts there");
  StringWord end = l.is_zero() ? f_left(alg, r) : f_right(alg, l);
  return {m, make_sum(alg, {string_module(alg, l), string_module(alg, r)}),
          string_module(alg, end)};
}

ARSequence ar_sequence_ending(const Algebra& alg, const Module& m) {
  need_gentle(alg);
  if (m.is_zero()) throw DomainError("no almost split sequence ends at the zero module");
  if (m.is_band())
    throw UnsupportedError("almost split sequences of band modules are not implemented");
  Module start = tau(alg, m);
  if (start.is_zero())
    throw DomainError("module " + module_expr(alg, m) + " is projective; no sequence ends there");
  return ar_sequence(alg, start);
}

}  // namespace gentle
