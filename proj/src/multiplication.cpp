#include "gentle/multiplication.hpp"

#include <stdexcept>

#include "gentle/ar.hpp"
#include "gentle/error.hpp"
#include "gentle/linalg.hpp"

namespace gentle {

namespace {

// A walk in an oriented word: its letters and the vertices at its two ends.
struct Piece {
  Letters letters;
  int start = -1;
  int end = -1;
};

Letters cyc(const Letters& w, int from, int len) {
  Letters out;
  const int n = static_cast<int>(w.size());
  for (int i = 0; i < len; ++i) out.push_back(w[(from + i) % n]);
  return out;
}

Letters slice(const Letters& w, int from, int to) { return Letters(w.begin() + from, w.begin() + to); }

Letters cat(std::initializer_list<Letters> parts) {
  Letters out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

std::vector<int> nodes_of(const Algebra& alg, const StringWord& w, bool cyclic) {
  return cyclic ? band_nodes(alg, w.letters) : word_nodes(alg, w);
}

int node_at(const std::vector<int>& nodes, int j, bool cyclic) {
  const int n = static_cast<int>(nodes.size());
  return cyclic ? nodes[((j % n) + n) % n] : nodes[j];
}

// The parts of an oriented walk outside the node interval [p, q]: the left and
// right flanks of a string, or the single remaining arc of a band.
struct Complement {
  std::optional<Piece> left, right;
};

Complement complement(const Algebra& alg, const StringWord& w, bool cyclic, Interval iv) {
  Complement c;
  const int len = w.length();
  auto nodes = nodes_of(alg, w, cyclic);
  if (!cyclic) {
    if (iv.p > 0) c.left = Piece{slice(w.letters, 0, iv.p - 1), nodes[0], nodes[iv.p - 1]};
    if (iv.q < len) c.right = Piece{slice(w.letters, iv.q + 1, len), nodes[iv.q + 1], nodes[len]};
    return c;
  }
  const int k = iv.q - iv.p;
  if (k >= len)
    throw UnsupportedError("the stable morphism winds around the band more than once");
  if (k == len - 1) return c;
  Piece r{cyc(w.letters, iv.q + 1, len - k - 2), node_at(nodes, iv.q + 1, true),
          node_at(nodes, iv.p + len - 1, true)};
  c.left = r;
  c.right = r;
  return c;
}

Module piece_module(const Algebra& alg, const Piece& p) {
  if (p.letters.empty()) return string_module(alg, StringWord::trivial(p.start, 1));
  if (!is_string(alg, p.letters))
    throw std::logic_error("piece is not a string: " + letters_expr(alg, p.letters));
  return string_module(alg, StringWord::path(p.letters));
}

// Matrix form of the graph map attached to an overlap x -> y, in the bases of
// representation(alg, single(m)); band nodes repeated by a long interval add up.
HomMap overlap_map(const Algebra& alg, const Module& x, const Module& y, const Overlap& o) {
  ModuleDiagram dx = diagram(alg, x), dy = diagram(alg, y);
  auto local = [](const ModuleDiagram& d) {
    std::vector<int> out(d.size()), count(64, 0);
    for (int j = 0; j < d.size(); ++j) {
      if (d.labels[j] >= static_cast<int>(count.size())) count.resize(d.labels[j] + 1, 0);
      out[j] = count[d.labels[j]]++;
    }
    return out;
  };
  auto lx = local(dx), ly = local(dy);
  Representation rx = representation(alg, dx), ry = representation(alg, dy);
  HomMap f;
  for (int i = 0; i < alg.num_vertices(); ++i) f.emplace_back(ry.dims[i], rx.dims[i]);
  const int nx = dx.size(), ny = dy.size();
  for (int i = 0; i <= o.length; ++i) {
    int jx = (o.x_interval.p + i) % nx;
    int jy = o.reversed ? o.y_interval.q - i : o.y_interval.p + i;
    jy = ((jy % ny) + ny) % ny;
    f[dx.labels[jx]](ly[jy], lx[jx]) += 1;
  }
  return f;
}

// Interval (in x when side is 0, in y otherwise) of the overlap x -> y whose
// graph map survives modulo maps factoring through injectives (side 0) or
// projectives (side 1).
Interval stable_interval(const Algebra& alg, const Module& x, const Module& y, int side) {
  auto ovs = overlaps(alg, x, y);
  Representation rx = representation(alg, single(alg, x)), ry = representation(alg, single(alg, y));
  std::vector<Overlap> keep;
  for (const auto& o : ovs) {
    HomMap f = overlap_map(alg, x, y, o);
    bool trivial = side == 0 ? factors_through_injective(alg, rx, ry, f)
                             : factors_through_projective(alg, rx, ry, f);
    if (!trivial) keep.push_back(o);
  }
  if (keep.empty()) throw std::logic_error("no graph map survives in the stable category");
  int best = -1;
  for (const auto& o : keep) best = std::max(best, o.length);
  std::optional<Interval> found;
  for (const auto& o : keep) {
    if (o.length != best) continue;
    Interval iv = side == 0 ? o.x_interval : o.y_interval;
    if (found && !(*found == iv)) throw std::logic_error("stable graph map is not unique");
    found = iv;
  }
  return *found;
}

bool same_node(int a, int b, int len, bool cyclic) {
  if (!cyclic) return a == b;
  return ((a - b) % len + len) % len == 0;
}

// First arrow of alg from s to t for which every junction word is a string.
std::optional<int> existing_arrow(const Algebra& alg, int s, int t,
                                  const std::vector<std::pair<Letters, Letters>>& junctions) {
  for (int a = 0; a < alg.num_arrows(); ++a) {
    if (alg.arrows[a].source != s || alg.arrows[a].target != t) continue;
    bool ok = true;
    for (const auto& [before, after] : junctions) {
      Letters w = cat({before, {{a, true}}, after});
      if (!is_string(alg, w)) ok = false;
    }
    if (ok) return a;
  }
  return std::nullopt;
}

std::string fresh_name(const Algebra& alg, const std::string& base) {
  if (alg.arrow_index(base) < 0) return base;
  for (int i = 2;; ++i)
    if (alg.arrow_index(base + std::to_string(i)) < 0) return base + std::to_string(i);
}

struct Witness {
  int h = -1, k = -1;
  ExtClass xi;
};

Witness find_witness(const Algebra& alg, const ModuleSum& x, const ModuleSum& s) {
  Witness wit;
  int total = 0;
  for (size_t k = 0; k < s.summands.size(); ++k)
    for (size_t h = 0; h < x.summands.size(); ++h) {
      auto basis = ext_basis(alg, s.summands[k], x.summands[h]);
      total += static_cast<int>(basis.size());
      if (!basis.empty()) {
        wit.h = static_cast<int>(h);
        wit.k = static_cast<int>(k);
        wit.xi = basis.front();
      }
    }
  if (total != 1)
    throw PreconditionError("dim Ext^1(S, X) = " + std::to_string(total) + ", expected 1", total);
  return wit;
}

ModuleSum others(const Algebra& alg, const ModuleSum& m, int skip) {
  std::vector<Module> rest;
  for (size_t i = 0; i < m.summands.size(); ++i)
    if (static_cast<int>(i) != skip) rest.push_back(m.summands[i]);
  return make_sum(alg, std::move(rest));
}

GVector plus(const GVector& a, const GVector& b) { return add(a, b); }

}  // namespace

int ext_dimension(const Algebra& alg, const ModuleSum& s, const ModuleSum& x) {
  return ext_dim(alg, s, x);
}

ExtClass generating_extension(const Algebra& alg, const ModuleSum& s, const ModuleSum& x) {
  return find_witness(alg, x, s).xi;
}

MultiplicationData multiply(const Algebra& alg, const ModuleSum& x, const ModuleSum& s) {
  if (!alg.has_signs()) throw DomainError("multiplication requires a gentle algebra");
  Witness wit = find_witness(alg, x, s);
  const Module& xm = x.summands[wit.h];
  const Module& sm = s.summands[wit.k];
  const ExtClass& xi = wit.xi;

  MultiplicationData d;
  d.x = x;
  d.s = s;
  d.xi = xi;
  d.host = alg;
  ModuleSum x_rest = others(alg, x, wit.h), s_rest = others(alg, s, wit.k);
  d.y = direct_sum(alg, direct_sum(alg, xi.middle, x_rest), s_rest);

  // Kernel of X -> tau S and image of tau^-1 X -> S, in the orientation of xi.
  const bool xc = xm.is_band(), sc = sm.is_band();
  const int lx = xm.word.length(), ls = sm.word.length();
  Interval ix = stable_interval(alg, xm, tau(alg, sm), 0);
  Interval is = stable_interval(alg, tau_inv(alg, xm), sm, 1);
  if (xi.w_flipped) ix = reverse_interval(ix, lx, xc);
  if (xi.v_flipped) is = reverse_interval(is, ls, sc);
  const StringWord& w = xi.w_word;
  const StringWord& v = xi.v_word;
  Complement cx = complement(alg, w, xc, ix);
  Complement cs = complement(alg, v, sc, is);

  auto vnodes = nodes_of(alg, v, sc), wnodes = nodes_of(alg, w, xc);
  d.sunder = is.q == is.p
                 ? string_module(alg, StringWord::trivial(node_at(vnodes, is.p, sc), 1))
                 : string_module(alg, StringWord::path(interval_letters(v.letters, is, sc)));
  Module xq = ix.q == ix.p
                  ? string_module(alg, StringWord::trivial(node_at(wnodes, ix.p, xc), 1))
                  : string_module(alg, StringWord::path(interval_letters(w.letters, ix, xc)));
  d.x_mod_xbar = single(alg, xq);

  auto pieces_of = [&](const Complement& c, bool cyclic) {
    std::vector<Module> out;
    if (cyclic) {
      if (c.left) out.push_back(piece_module(alg, *c.left));
    } else {
      if (c.left) out.push_back(piece_module(alg, *c.left));
      if (c.right) out.push_back(piece_module(alg, *c.right));
    }
    return out;
  };
  d.xbar = direct_sum(alg, make_sum(alg, pieces_of(cx, xc)), x_rest);
  d.s_mod_sunder = direct_sum(alg, make_sum(alg, pieces_of(cs, sc)), s_rest);

  const ModuleSum m_plain = direct_sum(alg, d.xbar, d.s_mod_sunder);
  if (xi.kind == ExtClass::Kind::Arrow) {
    d.ext_nonzero = true;
    d.m = m_plain;
    return d;
  }
  d.ext_nonzero = ext_dim(alg, single(alg, d.sunder), d.x_mod_xbar) != 0;
  d.cond_left = same_node(ix.p, xi.w_interval.p, lx, xc) && same_node(is.p, xi.v_interval.p, ls, sc);
  d.cond_right = same_node(ix.q, xi.w_interval.q, lx, xc) && same_node(is.q, xi.v_interval.q, ls, sc);
  if (!d.cond_left && !d.cond_right) {
    if (!d.ext_nonzero) throw std::logic_error("neither flank condition holds for an Ext-free quotient pair");
    d.m = m_plain;
    return d;
  }

  // Glue the flanks: on the left through an arrow t(alpha_L) -> t(beta_L), on the
  // right through an arrow s(alpha_R) -> s(beta_R).
  const bool glue_l = d.cond_left && cx.left && cs.left;
  const bool glue_r = d.cond_right && cx.right && cs.right;
  const Piece* al = cx.left ? &*cx.left : nullptr;
  const Piece* ar = cx.right ? &*cx.right : nullptr;
  const Piece* bl = cs.left ? &*cs.left : nullptr;
  const Piece* br = cs.right ? &*cs.right : nullptr;

  Algebra& host = d.host;
  auto choose = [&](int s0, int t0, const std::vector<std::pair<Letters, Letters>>& junctions,
                    const std::string& base) {
    if (auto a = existing_arrow(alg, s0, t0, junctions)) return *a;
    std::string name = fresh_name(host, base);
    d.added_arrows.push_back(name);
    d.host_is_original = false;
    return host.add_arrow(name, s0, t0);
  };
  int a_l = -1, a_r = -1;
  if (glue_l) a_l = choose(al->end, bl->end, {{al->letters, inverse(bl->letters)}}, "@L");
  if (glue_r) a_r = choose(ar->start, br->start, {{inverse(ar->letters), br->letters}}, "@R");
  if (!d.host_is_original && host.is_gentle()) host.compute_signs();

  const Letters la = glue_l ? Letters{{a_l, true}} : Letters{};
  const Letters ra = glue_r ? Letters{{a_r, true}} : Letters{};
  std::vector<Piece> out;
  auto whole = [&](Letters l) {
    Piece p;
    p.letters = std::move(l);
    return p;
  };
  if (!xc && !sc) {
    if (glue_l) out.push_back(whole(cat({al->letters, la, inverse(bl->letters)})));
    else {
      if (al) out.push_back(*al);
      if (bl) out.push_back(*bl);
    }
    if (glue_r) out.push_back(whole(cat({inverse(ar->letters), ra, br->letters})));
    else {
      if (ar) out.push_back(*ar);
      if (br) out.push_back(*br);
    }
  } else if (xc) {
    // al and ar are the same arc r of the band.
    Letters mid = al ? al->letters : Letters{};
    if (glue_l && glue_r)
      out.push_back(whole(cat({inverse(br->letters), inverse(ra), mid, la, inverse(bl->letters)})));
    else if (glue_l) {
      out.push_back(whole(cat({mid, la, inverse(bl->letters)})));
      if (br) out.push_back(*br);
    } else if (glue_r) {
      out.push_back(whole(cat({inverse(br->letters), inverse(ra), mid})));
      if (bl) out.push_back(*bl);
    } else {
      if (al) out.push_back(*al);
      if (bl) out.push_back(*bl);
      if (br) out.push_back(*br);
    }
  } else {
    // bl and br are the same arc q of the band.
    Letters q = bl ? inverse(bl->letters) : Letters{};
    if (glue_l && glue_r)
      out.push_back(whole(cat({al->letters, la, q, inverse(ra), ar->letters})));
    else if (glue_l) {
      out.push_back(whole(cat({al->letters, la, q})));
      if (ar) out.push_back(*ar);
    } else if (glue_r) {
      out.push_back(whole(cat({q, inverse(ra), ar->letters})));
      if (al) out.push_back(*al);
    } else {
      if (al) out.push_back(*al);
      if (ar) out.push_back(*ar);
      if (bl) out.push_back(*bl);
    }
  }
  std::vector<Module> parts;
  for (const auto& p : out) {
    if (!p.letters.empty() || p.start >= 0) parts.push_back(piece_module(host, p));
  }
  for (const auto& r : x_rest.summands) parts.push_back(r);
  for (const auto& r : s_rest.summands) parts.push_back(r);
  d.m = make_sum(host, std::move(parts));
  return d;
}

DecompositionReport verify_decomposition(const Algebra& alg, const MultiplicationData& d) {
  DecompositionReport r;
  r.lhs = f_polynomial(alg, d.x) * f_polynomial(alg, d.s);
  YPolynomial shift = YPolynomial::monomial(dim_vector(alg, d.sunder));
  r.rhs = f_polynomial(alg, d.y) + shift * f_polynomial(d.host, d.m);
  YPolynomial diff = r.lhs - r.rhs;
  r.ok = diff.is_zero();
  if (!r.ok) r.first_failure = diff.ordered_terms().front().first;
  return r;
}

CCRelation cc_relation(const Algebra& alg, const MultiplicationData& d) {
  CCRelation c;
  const IntMatrix b = alg.exchange_matrix();
  const int nv = alg.num_vertices();
  GVector gx = g_vector(alg, d.x), gs = g_vector(alg, d.s), gy = g_vector(alg, d.y);
  GVector gm(nv, 0);
  if (d.host_is_original) {
    gm = g_vector(alg, d.m);
  } else if (d.host.has_signs()) {
    gm = g_vector(d.host, d.m);
  } else if (d.host.long_relations.empty()) {
    bool fd = true;
    for (const auto& v : d.host.validate())
      if (v.axiom == "FD") fd = false;
    if (fd) gm = g_vector_homological(d.host, d.m);
    else c.m_g_available = false;
  } else {
    c.m_g_available = false;
  }
  DimVector du = dim_vector(alg, d.sunder);
  c.lhs = cluster_character(alg, d.x) * cluster_character(alg, d.s);
  c.middle_shift = sub(plus(gx, gs), gy);
  c.middle_term = cluster_character(alg, d.y, gy).shift_x(c.middle_shift);
  c.m_shift = sub(plus(add(exchange_times(alg, du), gx), gs), gm);
  LaurentCC ccm = cluster_character(b, f_polynomial(d.host, d.m), gm);
  c.m_term = (LaurentCC::monomial(Exponent(nv, 0), du) * ccm).shift_x(c.m_shift);
  c.holds = c.m_g_available && c.lhs == c.middle_term + c.m_term;
  return c;
}

ExchangeVerdict is_exchange_relation(const Algebra& alg, const ModuleSum& x, const ModuleSum& s) {
  ExchangeVerdict v;
  if (x.summands.size() != 1 || s.summands.size() != 1) {
    v.diagnosis = "X and S must be indecomposable";
    return v;
  }
  if (!is_rigid(alg, x) || !is_rigid(alg, s)) {
    v.diagnosis = "X and S must be rigid";
    return v;
  }
  int e = ext_dimension(alg, s, x);
  if (e != 1) {
    v.diagnosis = "dim Ext^1(S, X) = " + std::to_string(e) + ", expected 1";
    return v;
  }
  MultiplicationData d = multiply(alg, x, s);
  CCRelation c = cc_relation(alg, d);
  if (!c.m_g_available) {
    v.diagnosis = "the g-vector of M is unavailable over the extended quiver";
    return v;
  }
  if (!c.holds) {
    v.diagnosis = "the cluster character identity fails";
    return v;
  }
  v.is_exchange = true;
  v.diagnosis = "exchange relation";
  return v;
}

std::string to_string(SequenceKind k) {
  switch (k) {
    case SequenceKind::Split: return "split";
    case SequenceKind::AlmostSplit: return "almost split";
    case SequenceKind::GeneralizedAlmostSplit: return "generalized almost split";
    case SequenceKind::Generic: return "generic";
  }
  return "generic";
}

SequenceKind classify_sequence(const Algebra& alg, const MultiplicationData& d) {
  if (!d.xbar.empty() || !d.s_mod_sunder.empty()) return SequenceKind::Generic;
  if (d.x.summands.size() == 1 && d.s.summands.size() == 1 &&
      tau(alg, d.s.summands[0]) == d.x.summands[0])
    return SequenceKind::AlmostSplit;
  return SequenceKind::GeneralizedAlmostSplit;
}

SequenceKind classify_pair(const Algebra& alg, const ModuleSum& x, const ModuleSum& s) {
  if (ext_dimension(alg, s, x) == 0) return SequenceKind::Split;
  return classify_sequence(alg, multiply(alg, x, s));
}

}  // namespace gentle
