#pragma once

#include "gentle/modules.hpp"

namespace gentle {

// p_a: maximal direct string from s(a) not starting with a (empty = trivial).
Letters hook_path(const Algebra& alg, int a);
// q_a: maximal direct string into t(a) not ending with a (empty = trivial).
Letters cohook_path(const Algebra& alg, int a);

// Hook/cohook operations on strings; Zero maps to Zero.
StringWord f_left(const Algebra& alg, const StringWord& w);
StringWord f_right(const Algebra& alg, const StringWord& w);
StringWord g_left(const Algebra& alg, const StringWord& w);
StringWord g_right(const Algebra& alg, const StringWord& w);

// Auslander-Reiten translates; zero module for projective (tau) / injective (tau_inv)
// input, identity on bands.
Module tau(const Algebra& alg, const Module& m);
Module tau_inv(const Algebra& alg, const Module& m);

struct ARSequence {
  Module left;
  ModuleSum middle;
  Module right;
};

// The almost split sequence starting at m (m not injective).
ARSequence ar_sequence(const Algebra& alg, const Module& m);
// The almost split sequence ending at m (m not projective).
ARSequence ar_sequence_ending(const Algebra& alg, const Module& m);

}  // namespace gentle
