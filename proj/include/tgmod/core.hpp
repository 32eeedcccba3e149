/*
 *   Copyright 2026 the tgmod authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef TGMOD_CORE_HPP
#define TGMOD_CORE_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tgmod/config.hpp"
#include "tgmod/parallel.hpp"
#include "tgmod/report.hpp"

namespace tgmod {

// ---------------------------------------------------------------------------
// Carriers
// ---------------------------------------------------------------------------

/// A finite commutative monoid given by a total addition table over dense
/// element indices 0..size-1.
struct FiniteCommutativeMonoid {
  std::size_t size = 0;
  Elem zero = 0;
  std::vector<Elem> add_table;       ///< size*size, row-major over (left, right)
  std::vector<std::string> names;    ///< optional display labels

  Elem add(Elem x, Elem y) const { return add_table[x * size + y]; }

  /// Shape validation. Throws StructuralError; never reports axiom status.
  void validate_shape() const {
    if (size == 0) throw StructuralError("monoid: empty carrier");
    if (zero >= size) throw StructuralError("monoid: zero index out of range");
    if (add_table.size() != size * size)
      throw StructuralError("monoid: add table has " +
                            std::to_string(add_table.size()) + " entries, expected " +
                            std::to_string(size * size));
    for (Elem v : add_table)
      if (v >= size) throw StructuralError("monoid: add table entry out of range");
    if (!names.empty() && names.size() != size)
      throw StructuralError("monoid: name list size mismatch");
  }

  bool operator==(const FiniteCommutativeMonoid& o) const {
    return size == o.size && zero == o.zero && add_table == o.add_table;
  }
};

/// A commutative ternary Gamma-semiring: carrier monoid plus a total 5-ary
/// product table T x Gamma x T x Gamma x T -> T.
struct TernaryGammaSemiring {
  std::string name;
  FiniteCommutativeMonoid carrier;
  std::size_t gamma_size = 1;
  std::vector<Elem> ternary_table;  ///< row-major over (a, alpha, b, beta, c)
  std::vector<std::string> gamma_names;

  std::size_t tsize() const { return carrier.size; }

  Elem ternary(Elem a, GIdx al, Elem b, GIdx be, Elem c) const {
    const std::size_t n = carrier.size, g = gamma_size;
    return ternary_table[(((a * g + al) * n + b) * g + be) * n + c];
  }

  void validate_shape() const {
    carrier.validate_shape();
    if (gamma_size == 0) throw StructuralError("semiring: empty gamma set");
    const std::size_t want =
        carrier.size * gamma_size * carrier.size * gamma_size * carrier.size;
    if (ternary_table.size() != want)
      throw StructuralError("semiring '" + name + "': ternary table has " +
                            std::to_string(ternary_table.size()) +
                            " entries, expected " + std::to_string(want));
    for (Elem v : ternary_table)
      if (v >= carrier.size)
        throw StructuralError("semiring '" + name + "': ternary entry out of range");
    if (!gamma_names.empty() && gamma_names.size() != gamma_size)
      throw StructuralError("semiring: gamma name list size mismatch");
  }

  bool operator==(const TernaryGammaSemiring& o) const {
    return carrier == o.carrier && gamma_size == o.gamma_size &&
           ternary_table == o.ternary_table;
  }
};

using SemiringPtr = std::shared_ptr<const TernaryGammaSemiring>;

/// A ternary Gamma-module: commutative monoid with a total action table
/// T x Gamma x M x Gamma x T -> M housing the symbol (t1)_alpha (m)_beta t2.
struct TernaryGammaModule {
  std::string name;
  SemiringPtr semiring;
  FiniteCommutativeMonoid carrier;
  std::vector<Elem> action_table;  ///< row-major over (t1, alpha, m, beta, t2)

  std::size_t size() const { return carrier.size; }
  Elem zero() const { return carrier.zero; }
  Elem add(Elem x, Elem y) const { return carrier.add(x, y); }

  Elem act(Elem t1, GIdx al, Elem m, GIdx be, Elem t2) const {
    const std::size_t n = carrier.size, g = semiring->gamma_size;
    const std::size_t t = semiring->carrier.size;
    return action_table[(((t1 * g + al) * n + m) * g + be) * t + t2];
  }

  void validate_shape() const {
    if (!semiring) throw StructuralError("module '" + name + "': missing semiring");
    semiring->validate_shape();
    carrier.validate_shape();
    const std::size_t t = semiring->tsize(), g = semiring->gamma_size;
    const std::size_t want = t * g * carrier.size * g * t;
    if (action_table.size() != want)
      throw StructuralError("module '" + name + "': action table has " +
                            std::to_string(action_table.size()) +
                            " entries, expected " + std::to_string(want));
    for (Elem v : action_table)
      if (v >= carrier.size)
        throw StructuralError("module '" + name + "': action entry out of range");
  }

  bool operator==(const TernaryGammaModule& o) const {
    return carrier == o.carrier && action_table == o.action_table &&
           *semiring == *o.semiring;
  }
};

using ModulePtr = std::shared_ptr<const TernaryGammaModule>;

inline bool same_semiring(const TernaryGammaModule& a, const TernaryGammaModule& b) {
  return a.semiring == b.semiring || *a.semiring == *b.semiring;
}

/// All scalar tuples (t1, alpha, beta, t2) of a semiring, in lex order.
/// The action of one tuple on a module element is a unary map; most closure
/// and compatibility loops iterate these.
struct ScalarTuple {
  Elem t1;
  GIdx al, be;
  Elem t2;
};

inline std::vector<ScalarTuple> scalar_tuples(const TernaryGammaSemiring& s) {
  std::vector<ScalarTuple> out;
  out.reserve(s.tsize() * s.gamma_size * s.gamma_size * s.tsize());
  for (Elem t1 = 0; t1 < s.tsize(); ++t1)
    for (GIdx al = 0; al < s.gamma_size; ++al)
      for (GIdx be = 0; be < s.gamma_size; ++be)
        for (Elem t2 = 0; t2 < s.tsize(); ++t2)
          out.push_back(ScalarTuple{t1, al, be, t2});
  return out;
}

// ---------------------------------------------------------------------------
// Morphisms
// ---------------------------------------------------------------------------

/// A Gamma-linear morphism of modules over the same semiring, given by a
/// total element-to-element table.
struct ModuleMorphism {
  ModulePtr source, target;
  std::vector<Elem> table;

  Elem operator()(Elem x) const { return table[x]; }

  void validate_shape() const {
    if (!source || !target) throw StructuralError("morphism: missing endpoint");
    if (!same_semiring(*source, *target))
      throw StructuralError("morphism: source and target over different semirings");
    if (table.size() != source->size())
      throw StructuralError("morphism: map has " + std::to_string(table.size()) +
                            " entries, expected " + std::to_string(source->size()));
    for (Elem v : table)
      if (v >= target->size())
        throw StructuralError("morphism: map entry out of range");
  }
};

inline ModuleMorphism identity_morphism(const ModulePtr& m) {
  ModuleMorphism f;
  f.source = f.target = m;
  f.table.resize(m->size());
  for (Elem x = 0; x < m->size(); ++x) f.table[x] = x;
  return f;
}

inline ModuleMorphism zero_morphism(const ModulePtr& m, const ModulePtr& n) {
  ModuleMorphism f;
  f.source = m;
  f.target = n;
  f.table.assign(m->size(), n->zero());
  return f;
}

/// g after f.
inline ModuleMorphism compose(const ModuleMorphism& g, const ModuleMorphism& f) {
  if (f.target->size() != g.source->size() || !(*f.target == *g.source))
    throw StructuralError("compose: middle modules differ");
  ModuleMorphism h;
  h.source = f.source;
  h.target = g.target;
  h.table.resize(f.table.size());
  for (std::size_t i = 0; i < f.table.size(); ++i) h.table[i] = g.table[f.table[i]];
  return h;
}

inline bool is_surjective(const ModuleMorphism& f) {
  std::vector<bool> hit(f.target->size(), false);
  for (Elem v : f.table) hit[v] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

inline bool is_injective(const ModuleMorphism& f) {
  std::vector<bool> hit(f.target->size(), false);
  for (Elem v : f.table) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

inline std::vector<Elem> image_subset(const ModuleMorphism& f) {
  std::vector<bool> hit(f.target->size(), false);
  for (Elem v : f.table) hit[v] = true;
  std::vector<Elem> out;
  for (Elem x = 0; x < f.target->size(); ++x)
    if (hit[x]) out.push_back(x);
  return out;
}

inline std::vector<Elem> zero_preimage_subset(const ModuleMorphism& f) {
  std::vector<Elem> out;
  for (Elem x = 0; x < f.source->size(); ++x)
    if (f.table[x] == f.target->zero()) out.push_back(x);
  return out;
}

// ---------------------------------------------------------------------------
// Axiom checks
// ---------------------------------------------------------------------------

/// Commutative-monoid laws: identity, commutativity, associativity.
inline AxiomReport check_monoid(const FiniteCommutativeMonoid& m,
                                const std::string& subject = "monoid",
                                unsigned workers = 1) {
  m.validate_shape();
  AxiomReport rep;
  rep.subject = subject;
  const std::size_t n = m.size;

  {
    auto bad = scan_first_violation(
        n, [&](std::size_t i) {
          Elem x = static_cast<Elem>(i);
          return m.add(m.zero, x) == x && m.add(x, m.zero) == x;
        },
        workers);
    if (bad)
      rep.add(fail_check("add-identity", {*bad}));
    else
      rep.add(pass_check("add-identity"));
  }
  {
    auto bad = scan_first_violation(
        n * n, [&](std::size_t i) {
          Elem x = static_cast<Elem>(i / n), y = static_cast<Elem>(i % n);
          return m.add(x, y) == m.add(y, x);
        },
        workers);
    if (bad)
      rep.add(fail_check("add-commutativity", {*bad / n, *bad % n}));
    else
      rep.add(pass_check("add-commutativity"));
  }
  {
    auto bad = scan_first_violation(
        n * n * n, [&](std::size_t i) {
          Elem x = static_cast<Elem>(i / (n * n));
          Elem y = static_cast<Elem>((i / n) % n);
          Elem z = static_cast<Elem>(i % n);
          return m.add(m.add(x, y), z) == m.add(x, m.add(y, z));
        },
        workers);
    if (bad)
      rep.add(fail_check("add-associativity",
                         {*bad / (n * n), (*bad / n) % n, *bad % n}));
    else
      rep.add(pass_check("add-associativity"));
  }
  return rep;
}

namespace detail {

/// Decode a linear index into mixed-radix digits (most significant first).
inline void decode(std::size_t idx, const std::vector<std::size_t>& radii,
                   std::vector<std::size_t>& out) {
  out.resize(radii.size());
  for (std::size_t k = radii.size(); k-- > 0;) {
    out[k] = idx % radii[k];
    idx /= radii[k];
  }
}

inline std::size_t space_size(const std::vector<std::size_t>& radii) {
  std::size_t total = 1;
  for (std::size_t r : radii) total *= r;
  return total;
}

}  // namespace detail

/// The three nestings of the 9-symbol associativity word
/// (a, al, b, be, c, ga, d, de, e). Returns {N1, N2, N3}.
inline std::array<Elem, 3> semiring_assoc_nestings(const TernaryGammaSemiring& s,
                                                   Elem a, GIdx al, Elem b, GIdx be,
                                                   Elem c, GIdx ga, Elem d, GIdx de,
                                                   Elem e) {
  return {s.ternary(s.ternary(a, al, b, be, c), ga, d, de, e),
          s.ternary(a, al, s.ternary(b, be, c, ga, d), de, e),
          s.ternary(a, al, b, be, s.ternary(c, ga, d, de, e))};
}

/// Def-style semiring suite: carrier monoid laws, triadic associativity,
/// distributivity in the three element slots, Gamma-commutativity, and (in
/// strict mode) the zero-absorption normalization axiom, which is reported
/// under its own tier so paper axioms and normalization axioms stay separate.
inline AxiomReport check_semiring(const TernaryGammaSemiring& s, bool strict = true,
                                  unsigned workers = 1) {
  s.validate_shape();
  AxiomReport rep = check_monoid(s.carrier, s.name, workers);
  rep.strict_mode = strict;
  const std::size_t n = s.tsize(), g = s.gamma_size;

  {  // [[a,al,b,be,c],ga,d,de,e] = [a,al,[b,be,c,ga,d],de,e] = [a,al,b,be,[c,ga,d,de,e]]
    const std::vector<std::size_t> radii{n, g, n, g, n, g, n, g, n};
    auto bad = scan_first_violation(
        detail::space_size(radii),
        [&](std::size_t i) {
          std::vector<std::size_t> w;
          detail::decode(i, radii, w);
          auto v = semiring_assoc_nestings(
              s, static_cast<Elem>(w[0]), static_cast<GIdx>(w[1]),
              static_cast<Elem>(w[2]), static_cast<GIdx>(w[3]),
              static_cast<Elem>(w[4]), static_cast<GIdx>(w[5]),
              static_cast<Elem>(w[6]), static_cast<GIdx>(w[7]),
              static_cast<Elem>(w[8]));
          return v[0] == v[1] && v[1] == v[2];
        },
        workers);
    if (bad) {
      std::vector<std::size_t> w;
      detail::decode(*bad, radii, w);
      rep.add(fail_check("ternary-associativity", w));
    } else {
      rep.add(pass_check("ternary-associativity"));
    }
  }

  // Distributivity in each slot; the implemented equations are the evident
  // single-slot ones, e.g. [a+a',al,b,be,c] = [a,al,b,be,c] + [a',al,b,be,c].
  const std::vector<std::size_t> dradii{n, n, g, n, g, n};
  auto dist_scan = [&](int slot) -> std::optional<std::vector<std::size_t>> {
    auto bad = scan_first_violation(
        detail::space_size(dradii),
        [&](std::size_t i) {
          std::vector<std::size_t> w;
          detail::decode(i, dradii, w);
          Elem u = static_cast<Elem>(w[0]), v = static_cast<Elem>(w[1]);
          GIdx al = static_cast<GIdx>(w[2]), be = static_cast<GIdx>(w[4]);
          Elem p = static_cast<Elem>(w[3]), q = static_cast<Elem>(w[5]);
          Elem sum = s.carrier.add(u, v);
          Elem lhs, rhs;
          if (slot == 0) {
            lhs = s.ternary(sum, al, p, be, q);
            rhs = s.carrier.add(s.ternary(u, al, p, be, q), s.ternary(v, al, p, be, q));
          } else if (slot == 1) {
            lhs = s.ternary(p, al, sum, be, q);
            rhs = s.carrier.add(s.ternary(p, al, u, be, q), s.ternary(p, al, v, be, q));
          } else {
            lhs = s.ternary(p, al, q, be, sum);
            rhs = s.carrier.add(s.ternary(p, al, q, be, u), s.ternary(p, al, q, be, v));
          }
          return lhs == rhs;
        },
        workers);
    if (!bad) return std::nullopt;
    std::vector<std::size_t> w;
    detail::decode(*bad, dradii, w);
    return w;
  };
  static const char* kDistNames[3] = {"ternary-distributivity-left",
                                      "ternary-distributivity-middle",
                                      "ternary-distributivity-right"};
  for (int slot = 0; slot < 3; ++slot) {
    if (auto w = dist_scan(slot))
      rep.add(fail_check(kDistNames[slot], *w));
    else
      rep.add(pass_check(kDistNames[slot]));
  }

  {  // [a,al,b,be,c] = [c,be,b,al,a]
    const std::vector<std::size_t> radii{n, g, n, g, n};
    auto bad = scan_first_violation(
        detail::space_size(radii),
        [&](std::size_t i) {
          std::vector<std::size_t> w;
          detail::decode(i, radii, w);
          Elem a = static_cast<Elem>(w[0]), b = static_cast<Elem>(w[2]),
               c = static_cast<Elem>(w[4]);
          GIdx al = static_cast<GIdx>(w[1]), be = static_cast<GIdx>(w[3]);
          return s.ternary(a, al, b, be, c) == s.ternary(c, be, b, al, a);
        },
        workers);
    if (bad) {
      std::vector<std::size_t> w;
      detail::decode(*bad, radii, w);
      rep.add(fail_check("gamma-commutativity", w));
    } else {
      rep.add(pass_check("gamma-commutativity"));
    }
  }

  if (strict) {  // [x,al,y,be,z] = 0 whenever any of x,y,z is zero
    const std::vector<std::size_t> radii{n, g, n, g, n};
    auto bad = scan_first_violation(
        detail::space_size(radii),
        [&](std::size_t i) {
          std::vector<std::size_t> w;
          detail::decode(i, radii, w);
          Elem a = static_cast<Elem>(w[0]), b = static_cast<Elem>(w[2]),
               c = static_cast<Elem>(w[4]);
          const Elem z = s.carrier.zero;
          if (a != z && b != z && c != z) return true;
          return s.ternary(a, static_cast<GIdx>(w[1]), b, static_cast<GIdx>(w[3]),
                           c) == z;
        },
        workers);
    if (bad) {
      std::vector<std::size_t> w;
      detail::decode(*bad, radii, w);
      rep.add(fail_check("zero-absorption", w, CheckTier::Normalization));
    } else {
      rep.add(pass_check("zero-absorption", CheckTier::Normalization));
    }
  }
  return rep;
}

namespace detail {

/// Evaluates every typed parse of a mixed 13-symbol word (7 element slots,
/// 6 gammas, the module element sitting at `mpos`) against the semiring
/// product and the module action. A parse is typed when every inner
/// application is either all-T (product) or T,M,T (action). Returns the set
/// of distinct values the typed parses of the full word produce; agreement
/// means the set has at most one entry.
///
/// Words of length five admit at most one typed parse under the middle-slot
/// action signature, so length seven is the first width where the mixed
/// associativity law says anything.
inline std::vector<Elem> mixed_word_values(const TernaryGammaModule& mod,
                                           const std::array<Elem, 7>& elems,
                                           const std::array<GIdx, 6>& gam,
                                           std::size_t mpos) {
  const TernaryGammaSemiring& s = *mod.semiring;
  // value sets per span [i][j]; spans of even length stay empty
  std::vector<Elem> memo[7][7];
  bool done[7][7] = {};
  std::function<const std::vector<Elem>&(std::size_t, std::size_t)> eval =
      [&](std::size_t i, std::size_t j) -> const std::vector<Elem>& {
    if (done[i][j]) return memo[i][j];
    done[i][j] = true;
    auto& out = memo[i][j];
    if (i == j) {
      out.push_back(elems[i]);
      return out;
    }
    const bool span_m = (i <= mpos && mpos <= j);
    for (std::size_t a = i; a < j; a += 2) {
      for (std::size_t b = a + 1; b < j; b += 2) {
        // sub-spans [i,a], [a+1,b], [b+1,j] joined by gam[a] and gam[b]
        const bool left_m = (i <= mpos && mpos <= a);
        const bool mid_m = (a + 1 <= mpos && mpos <= b);
        const bool right_m = (b + 1 <= mpos && mpos <= j);
        if (span_m && !mid_m) continue;  // action takes M in the middle slot only
        if (left_m || right_m) continue;
        for (Elem x : eval(i, a))
          for (Elem y : eval(a + 1, b))
            for (Elem z : eval(b + 1, j)) {
              Elem v = span_m ? mod.act(x, gam[a], y, gam[b], z)
                              : s.ternary(x, gam[a], y, gam[b], z);
              if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
            }
      }
    }
    return out;
  };
  return eval(0, 6);
}

}  // namespace detail

/// Def-style module suite over a pre-validated semiring: carrier monoid laws,
/// mixed triadic associativity (agreement of all typed parses of 7-letter
/// words mixing product and action), distributivity of the action in the two
/// T-slots and the M-slot, and strict-mode zero-absorption.
///
/// Witness layout for action-associativity: [mpos, e0..e6, g0..g5].
inline AxiomReport check_module(const TernaryGammaModule& mod, bool strict = true,
                                unsigned workers = 1) {
  mod.validate_shape();
  {
    AxiomReport pre = check_semiring(*mod.semiring, strict, workers);
    if (!pre.passed())
      throw StructuralError("check_module('" + mod.name +
                            "'): semiring '" + mod.semiring->name +
                            "' fails its own axioms; validate it first");
  }
  AxiomReport rep = check_monoid(mod.carrier, mod.name, workers);
  rep.strict_mode = strict;
  const TernaryGammaSemiring& s = *mod.semiring;
  const std::size_t t = s.tsize(), g = s.gamma_size, n = mod.size();

  {  // mixed associativity over 7-letter words
    const std::vector<std::size_t> radii{7, t, t, t, t, t, t, n, g, g, g, g, g, g};
    auto bad = scan_first_violation(
        detail::space_size(radii),
        [&](std::size_t i) {
          std::vector<std::size_t> w;
          detail::decode(i, radii, w);
          const std::size_t mpos = w[0];
          std::array<Elem, 7> elems{};
          std::size_t ti = 1;
          for (std::size_t p = 0; p < 7; ++p)
            elems[p] = (p == mpos) ? static_cast<Elem>(w[7])
                                   : static_cast<Elem>(w[ti++]);
          std::array<GIdx, 6> gam{};
          for (std::size_t k = 0; k < 6; ++k) gam[k] = static_cast<GIdx>(w[8 + k]);
          return detail::mixed_word_values(mod, elems, gam, mpos).size() <= 1;
        },
        workers);
    if (bad) {
      std::vector<std::size_t> w;
      detail::decode(*bad, radii, w);
      const std::size_t mpos = w[0];
      std::vector<std::size_t> witness{mpos};
      std::size_t ti = 1;
      for (std::size_t p = 0; p < 7; ++p)
        witness.push_back(p == mpos ? w[7] : w[ti++]);
      for (std::size_t k = 0; k < 6; ++k) witness.push_back(w[8 + k]);
      rep.add(fail_check("action-associativity", witness));
    } else {
      rep.add(pass_check("action-associativity"));
    }
  }

  {  // (t1)(m+m')(t2) = (t1)(m)(t2) + (t1)(m')(t2)
    const std::vector<std::size_t> radii{t, g, n, n, g, t};
    auto bad = scan_first_violation(
        detail::space_size(radii),
        [&](std::size_t i) {
          std::vector<std::size_t> w;
          detail::decode(i, radii, w);
          Elem t1 = static_cast<Elem>(w[0]), t2 = static_cast<Elem>(w[5]);
          GIdx al = static_cast<GIdx>(w[1]), be = static_cast<GIdx>(w[4]);
          Elem x = static_cast<Elem>(w[2]), y = static_cast<Elem>(w[3]);
          return mod.act(t1, al, mod.add(x, y), be, t2) ==
                 mod.add(mod.act(t1, al, x, be, t2), mod.act(t1, al, y, be, t2));
        },
        workers);
    if (bad) {
      std::vector<std::size_t> w;
      detail::decode(*bad, radii, w);
      rep.add(fail_check("action-distributivity-m", w));
    } else {
      rep.add(pass_check("action-distributivity-m"));
    }
  }

  {  // (t1+t1')(m)(t2) split, and mirrored in the right T-slot
    const std::vector<std::size_t> radii{t, t, g, n, g, t};
    for (int slot = 0; slot < 2; ++slot) {
      auto bad = scan_first_violation(
          detail::space_size(radii),
          [&](std::size_t i) {
            std::vector<std::size_t> w;
            detail::decode(i, radii, w);
            Elem u = static_cast<Elem>(w[0]), v = static_cast<Elem>(w[1]);
            GIdx al = static_cast<GIdx>(w[2]), be = static_cast<GIdx>(w[4]);
            Elem m = static_cast<Elem>(w[3]), c = static_cast<Elem>(w[5]);
            Elem sum = s.carrier.add(u, v);
            if (slot == 0)
              return mod.act(sum, al, m, be, c) ==
                     mod.add(mod.act(u, al, m, be, c), mod.act(v, al, m, be, c));
            return mod.act(c, al, m, be, sum) ==
                   mod.add(mod.act(c, al, m, be, u), mod.act(c, al, m, be, v));
          },
          workers);
      const char* nm = slot == 0 ? "action-distributivity-left"
                                 : "action-distributivity-right";
      if (bad) {
        std::vector<std::size_t> w;
        detail::decode(*bad, radii, w);
        rep.add(fail_check(nm, w));
      } else {
        rep.add(pass_check(nm));
      }
    }
  }

  if (strict) {  // action is zero when any argument is the relevant zero
    const std::vector<std::size_t> radii{t, g, n, g, t};
    auto bad = scan_first_violation(
        detail::space_size(radii),
        [&](std::size_t i) {
          std::vector<std::size_t> w;
          detail::decode(i, radii, w);
          Elem t1 = static_cast<Elem>(w[0]), m = static_cast<Elem>(w[2]),
               t2 = static_cast<Elem>(w[4]);
          if (t1 != s.carrier.zero && t2 != s.carrier.zero && m != mod.zero())
            return true;
          return mod.act(t1, static_cast<GIdx>(w[1]), m, static_cast<GIdx>(w[3]),
                         t2) == mod.zero();
        },
        workers);
    if (bad) {
      std::vector<std::size_t> w;
      detail::decode(*bad, radii, w);
      rep.add(fail_check("action-zero-absorption", w, CheckTier::Normalization));
    } else {
      rep.add(pass_check("action-zero-absorption", CheckTier::Normalization));
    }
  }
  return rep;
}

/// Additivity and Gamma-equivariance of a morphism table.
inline AxiomReport check_morphism(const ModuleMorphism& f, unsigned workers = 1) {
  f.validate_shape();
  AxiomReport rep;
  rep.subject = "morphism";
  const TernaryGammaModule& M = *f.source;
  const TernaryGammaModule& N = *f.target;
  const std::size_t n = M.size();

  if (f.table[M.zero()] == N.zero())
    rep.add(pass_check("morphism-zero"));
  else
    rep.add(fail_check("morphism-zero", {M.zero()}));

  {
    auto bad = scan_first_violation(
        n * n, [&](std::size_t i) {
          Elem x = static_cast<Elem>(i / n), y = static_cast<Elem>(i % n);
          return f.table[M.add(x, y)] == N.add(f.table[x], f.table[y]);
        },
        workers);
    if (bad)
      rep.add(fail_check("morphism-additive", {*bad / n, *bad % n}));
    else
      rep.add(pass_check("morphism-additive"));
  }

  {
    const TernaryGammaSemiring& s = *M.semiring;
    const std::size_t t = s.tsize(), g = s.gamma_size;
    const std::vector<std::size_t> radii{t, g, n, g, t};
    auto bad = scan_first_violation(
        detail::space_size(radii),
        [&](std::size_t i) {
          std::vector<std::size_t> w;
          detail::decode(i, radii, w);
          Elem t1 = static_cast<Elem>(w[0]), m = static_cast<Elem>(w[2]),
               t2 = static_cast<Elem>(w[4]);
          GIdx al = static_cast<GIdx>(w[1]), be = static_cast<GIdx>(w[3]);
          return f.table[M.act(t1, al, m, be, t2)] ==
                 N.act(t1, al, f.table[m], be, t2);
        },
        workers);
    if (bad) {
      std::vector<std::size_t> w;
      detail::decode(*bad, radii, w);
      rep.add(fail_check("morphism-equivariant", w));
    } else {
      rep.add(pass_check("morphism-equivariant"));
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Witness replay
// ---------------------------------------------------------------------------

/// Re-evaluates a reported witness against the tables. Returns true iff the
/// witness still exhibits a violation of the named law. Unknown names throw.
inline bool replay_monoid_witness(const FiniteCommutativeMonoid& m,
                                  const std::string& name,
                                  const std::vector<std::size_t>& w) {
  auto e = [&](std::size_t i) { return static_cast<Elem>(w[i]); };
  if (name == "add-identity")
    return !(m.add(m.zero, e(0)) == e(0) && m.add(e(0), m.zero) == e(0));
  if (name == "add-commutativity") return m.add(e(0), e(1)) != m.add(e(1), e(0));
  if (name == "add-associativity")
    return m.add(m.add(e(0), e(1)), e(2)) != m.add(e(0), m.add(e(1), e(2)));
  throw StructuralError("replay: unknown monoid check '" + name + "'");
}

inline bool replay_semiring_witness(const TernaryGammaSemiring& s,
                                    const std::string& name,
                                    const std::vector<std::size_t>& w) {
  if (name.rfind("add-", 0) == 0) return replay_monoid_witness(s.carrier, name, w);
  auto e = [&](std::size_t i) { return static_cast<Elem>(w[i]); };
  auto gi = [&](std::size_t i) { return static_cast<GIdx>(w[i]); };
  if (name == "ternary-associativity") {
    auto v = semiring_assoc_nestings(s, e(0), gi(1), e(2), gi(3), e(4), gi(5), e(6),
                                     gi(7), e(8));
    return !(v[0] == v[1] && v[1] == v[2]);
  }
  if (name.rfind("ternary-distributivity-", 0) == 0) {
    // witness layout: u, v, al, p, be, q
    Elem u = e(0), v = e(1), p = e(3), q = e(5);
    GIdx al = gi(2), be = gi(4);
    Elem sum = s.carrier.add(u, v);
    if (name == "ternary-distributivity-left")
      return s.ternary(sum, al, p, be, q) !=
             s.carrier.add(s.ternary(u, al, p, be, q), s.ternary(v, al, p, be, q));
    if (name == "ternary-distributivity-middle")
      return s.ternary(p, al, sum, be, q) !=
             s.carrier.add(s.ternary(p, al, u, be, q), s.ternary(p, al, v, be, q));
    return s.ternary(p, al, q, be, sum) !=
           s.carrier.add(s.ternary(p, al, q, be, u), s.ternary(p, al, q, be, v));
  }
  if (name == "gamma-commutativity")
    return s.ternary(e(0), gi(1), e(2), gi(3), e(4)) !=
           s.ternary(e(4), gi(3), e(2), gi(1), e(0));
  if (name == "zero-absorption") {
    Elem a = e(0), b = e(2), c = e(4);
    const Elem z = s.carrier.zero;
    if (a != z && b != z && c != z) return false;
    return s.ternary(a, gi(1), b, gi(3), c) != z;
  }
  throw StructuralError("replay: unknown semiring check '" + name + "'");
}

inline bool replay_module_witness(const TernaryGammaModule& mod,
                                  const std::string& name,
                                  const std::vector<std::size_t>& w) {
  if (name.rfind("add-", 0) == 0) return replay_monoid_witness(mod.carrier, name, w);
  auto e = [&](std::size_t i) { return static_cast<Elem>(w[i]); };
  auto gi = [&](std::size_t i) { return static_cast<GIdx>(w[i]); };
  if (name == "action-associativity") {
    const std::size_t mpos = w[0];
    std::array<Elem, 7> elems{};
    for (std::size_t p = 0; p < 7; ++p) elems[p] = e(1 + p);
    std::array<GIdx, 6> gam{};
    for (std::size_t k = 0; k < 6; ++k) gam[k] = gi(8 + k);
    return detail::mixed_word_values(mod, elems, gam, mpos).size() > 1;
  }
  if (name == "action-distributivity-m") {
    Elem t1 = e(0), x = e(2), y = e(3), t2 = e(5);
    GIdx al = gi(1), be = gi(4);
    return mod.act(t1, al, mod.add(x, y), be, t2) !=
           mod.add(mod.act(t1, al, x, be, t2), mod.act(t1, al, y, be, t2));
  }
  if (name == "action-distributivity-left" || name == "action-distributivity-right") {
    Elem u = e(0), v = e(1), m = e(3), c = e(5);
    GIdx al = gi(2), be = gi(4);
    Elem sum = mod.semiring->carrier.add(u, v);
    if (name == "action-distributivity-left")
      return mod.act(sum, al, m, be, c) !=
             mod.add(mod.act(u, al, m, be, c), mod.act(v, al, m, be, c));
    return mod.act(c, al, m, be, sum) !=
           mod.add(mod.act(c, al, m, be, u), mod.act(c, al, m, be, v));
  }
  if (name == "action-zero-absorption") {
    Elem t1 = e(0), m = e(2), t2 = e(4);
    const Elem tz = mod.semiring->carrier.zero;
    if (t1 != tz && t2 != tz && m != mod.zero()) return false;
    return mod.act(t1, gi(1), m, gi(3), t2) != mod.zero();
  }
  throw StructuralError("replay: unknown module check '" + name + "'");
}

inline bool replay_morphism_witness(const ModuleMorphism& f, const std::string& name,
                                    const std::vector<std::size_t>& w) {
  const TernaryGammaModule& M = *f.source;
  const TernaryGammaModule& N = *f.target;
  auto e = [&](std::size_t i) { return static_cast<Elem>(w[i]); };
  if (name == "morphism-zero") return f.table[M.zero()] != N.zero();
  if (name == "morphism-additive")
    return f.table[M.add(e(0), e(1))] != N.add(f.table[e(0)], f.table[e(1)]);
  if (name == "morphism-equivariant")
    return f.table[M.act(e(0), static_cast<GIdx>(w[1]), e(2),
                         static_cast<GIdx>(w[3]), e(4))] !=
           N.act(e(0), static_cast<GIdx>(w[1]), f.table[e(2)],
                 static_cast<GIdx>(w[3]), e(4));
  throw StructuralError("replay: unknown morphism check '" + name + "'");
}

}  // namespace tgmod

#endif  // TGMOD_CORE_HPP
