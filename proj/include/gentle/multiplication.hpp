#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gentle/homext.hpp"
#include "gentle/invariants.hpp"

namespace gentle {

// Everything attached to a generating extension 0 -> X -> Y -> S -> 0 with
// dim Ext^1(S, X) = 1.
struct MultiplicationData {
  ModuleSum x, s;
  ExtClass xi;              // the generating class (between the witness summands)
  ModuleSum y;              // middle term, untouched summands included
  ModuleSum xbar;           // kernel of X -> tau S
  Module sunder;            // image of tau^-1 X -> S
  ModuleSum s_mod_sunder;   // S / sunder
  ModuleSum x_mod_xbar;     // X / xbar
  bool ext_nonzero = true;  // Ext^1(sunder, X / xbar) != 0
  bool cond_left = false;   // case (1): both left flanks equal the complements
  bool cond_right = false;  // case (2): both right flanks equal the complements
  ModuleSum m;              // Ext-minimal extension of S/sunder by xbar, over host
  Algebra host;             // A, or A with added arrows
  std::vector<std::string> added_arrows;  // names of arrows of host not in A
  bool host_is_original = true;
};

// Number of Ext^1(S, X) basis elements; the precondition is that this equals 1.
int ext_dimension(const Algebra& alg, const ModuleSum& s, const ModuleSum& x);

// The unique basis class of Ext^1(S, X); PreconditionError if dim != 1.
ExtClass generating_extension(const Algebra& alg, const ModuleSum& s, const ModuleSum& x);

MultiplicationData multiply(const Algebra& alg, const ModuleSum& x, const ModuleSum& s);

struct DecompositionReport {
  bool ok = true;
  std::optional<Exponent> first_failure;  // smallest e in printing order
  YPolynomial lhs;                        // F_X F_S
  YPolynomial rhs;                        // F_Y + y^{dim sunder} F_M
};
DecompositionReport verify_decomposition(const Algebra& alg, const MultiplicationData& d);

struct CCRelation {
  LaurentCC lhs;          // CC(X) CC(S)
  LaurentCC middle_term;  // CC(Y) x^{g_X + g_S - g_Y}
  LaurentCC m_term;       // y^{dim sunder} CC(M) x^{B dim sunder + g_X + g_S - g_M}
  GVector middle_shift;   // g_X + g_S - g_Y
  GVector m_shift;        // B dim sunder + g_X + g_S - g_M
  bool holds = false;
  bool m_g_available = true;  // false when g_M could not be computed over the host
};
CCRelation cc_relation(const Algebra& alg, const MultiplicationData& d);

struct ExchangeVerdict {
  bool is_exchange = false;
  std::string diagnosis;
};
// X, S rigid indecomposable with dim Ext^1(S, X) = 1 and the CC identity holding.
ExchangeVerdict is_exchange_relation(const Algebra& alg, const ModuleSum& x, const ModuleSum& s);

enum class SequenceKind { Split, AlmostSplit, GeneralizedAlmostSplit, Generic };
std::string to_string(SequenceKind k);
SequenceKind classify_sequence(const Algebra& alg, const MultiplicationData& d);
// Split when Ext^1(S, X) = 0, otherwise as above.
SequenceKind classify_pair(const Algebra& alg, const ModuleSum& x, const ModuleSum& s);

}  // namespace gentle
