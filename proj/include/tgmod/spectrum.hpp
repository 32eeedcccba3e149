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

#ifndef TGMOD_SPECTRUM_HPP
#define TGMOD_SPECTRUM_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tgmod/construct.hpp"
#include "tgmod/core.hpp"
#include "tgmod/exactness.hpp"
#include "tgmod/monoidal.hpp"

namespace tgmod {

// ---------------------------------------------------------------------------
// Gamma-ideals and primes
// ---------------------------------------------------------------------------

/// Additively closed subset containing zero and absorbing in all three
/// ternary slots.
struct GammaIdeal {
  SemiringPtr semiring;
  std::vector<bool> members;

  bool contains(Elem x) const { return members[x]; }
  bool is_improper() const {
    return std::all_of(members.begin(), members.end(), [](bool b) { return b; });
  }
  std::vector<Elem> element_list() const {
    std::vector<Elem> out;
    for (Elem x = 0; x < members.size(); ++x)
      if (members[x]) out.push_back(x);
    return out;
  }
  bool subset_of(const GammaIdeal& other) const {
    for (Elem x = 0; x < members.size(); ++x)
      if (members[x] && !other.members[x]) return false;
    return true;
  }
};

inline bool is_gamma_ideal(const TernaryGammaSemiring& s,
                           const std::vector<bool>& subset) {
  if (!subset[s.carrier.zero]) return false;
  const std::size_t n = s.tsize(), g = s.gamma_size;
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (subset[x] && subset[y] && !subset[s.carrier.add(x, y)]) return false;
  for (Elem a = 0; a < n; ++a)
    for (GIdx al = 0; al < g; ++al)
      for (Elem b = 0; b < n; ++b)
        for (GIdx be = 0; be < g; ++be)
          for (Elem c = 0; c < n; ++c) {
            if (!subset[a] && !subset[b] && !subset[c]) continue;
            if (!subset[s.ternary(a, al, b, be, c)]) return false;
          }
  return true;
}

/// Primality conventions: the paper delegates the definition, so the
/// condition is configurable and every Spec output names the one used.
enum class PrimalityConvention { AnyFactor, OuterSlotsOnly };

inline const char* convention_name(PrimalityConvention c) {
  return c == PrimalityConvention::AnyFactor ? "any-factor" : "outer-slots-only";
}

/// All Gamma-ideals of a semiring, subset enumeration in lex order.
/// Improper ideals are included or excluded per the flag (default include,
/// matching the documented convention: ideals may be improper, primes must
/// be proper).
inline std::vector<GammaIdeal> enumerate_ideals(const SemiringPtr& s,
                                                const WorkbenchConfig& cfg = {},
                                                bool allow_improper = true) {
  const std::size_t n = s->tsize();
  if (detail::pow_size(2, n) > static_cast<double>(cfg.search_budget))
    throw BudgetError("enumerate_ideals: 2^|T| exceeds the configured bound");
  std::vector<GammaIdeal> out;
  std::vector<bool> subset(n, false);
  bool more = true;
  while (more) {
    if (is_gamma_ideal(*s, subset)) {
      GammaIdeal id;
      id.semiring = s;
      id.members = subset;
      if (allow_improper || !id.is_improper()) out.push_back(std::move(id));
    }
    more = false;
    for (std::size_t i = n; i-- > 0;) {
      if (!subset[i]) {
        subset[i] = true;
        more = true;
        break;
      }
      subset[i] = false;
    }
  }
  return out;
}

/// Proper, and a ternary product lands in the ideal only when a factor does.
inline bool is_prime(const GammaIdeal& ideal,
                     PrimalityConvention conv = PrimalityConvention::AnyFactor) {
  const TernaryGammaSemiring& s = *ideal.semiring;
  if (ideal.is_improper()) return false;
  const std::size_t n = s.tsize(), g = s.gamma_size;
  for (Elem a = 0; a < n; ++a)
    for (GIdx al = 0; al < g; ++al)
      for (Elem b = 0; b < n; ++b)
        for (GIdx be = 0; be < g; ++be)
          for (Elem c = 0; c < n; ++c) {
            if (!ideal.contains(s.ternary(a, al, b, be, c))) continue;
            bool escapes = conv == PrimalityConvention::AnyFactor
                               ? (!ideal.contains(a) && !ideal.contains(b) &&
                                  !ideal.contains(c))
                               : (!ideal.contains(a) && !ideal.contains(c));
            if (escapes) return false;
          }
  return true;
}

// ---------------------------------------------------------------------------
// The spectrum
// ---------------------------------------------------------------------------

/// Finite Zariski-type space: points are prime ideals, closed sets the V(I),
/// opens their complements closed up under union and intersection.
struct SpecSpace {
  SemiringPtr semiring;
  std::vector<GammaIdeal> points;
  std::vector<std::vector<bool>> opens;        ///< point subsets, sorted
  std::vector<std::vector<bool>> closed_sets;  ///< V(I) per enumerated ideal
  std::vector<std::size_t> closed_generator;   ///< index into the ideal list
  std::vector<GammaIdeal> ideals;
  std::size_t opens_added_by_closure = 0;
  PrimalityConvention convention = PrimalityConvention::AnyFactor;
  bool improper_ideals_allowed = true;

  std::size_t open_index(const std::vector<bool>& o) const {
    for (std::size_t i = 0; i < opens.size(); ++i)
      if (opens[i] == o) return i;
    throw StructuralError("SpecSpace: not an open set");
  }
};

inline std::vector<bool> set_union(const std::vector<bool>& a,
                                   const std::vector<bool>& b) {
  std::vector<bool> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] || b[i];
  return out;
}

inline std::vector<bool> set_intersection(const std::vector<bool>& a,
                                          const std::vector<bool>& b) {
  std::vector<bool> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] && b[i];
  return out;
}

inline bool set_subset(const std::vector<bool>& a, const std::vector<bool>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && !b[i]) return false;
  return true;
}

inline SpecSpace spec_space(const SemiringPtr& s, const WorkbenchConfig& cfg = {},
                            PrimalityConvention conv = PrimalityConvention::AnyFactor,
                            bool allow_improper = true) {
  SpecSpace out;
  out.semiring = s;
  out.convention = conv;
  out.improper_ideals_allowed = allow_improper;
  out.ideals = enumerate_ideals(s, cfg, allow_improper);
  for (const auto& id : out.ideals)
    if (is_prime(id, conv)) out.points.push_back(id);

  const std::size_t np = out.points.size();
  for (std::size_t ii = 0; ii < out.ideals.size(); ++ii) {
    std::vector<bool> v(np, false);
    for (std::size_t p = 0; p < np; ++p)
      if (out.ideals[ii].subset_of(out.points[p])) v[p] = true;
    out.closed_sets.push_back(v);
    out.closed_generator.push_back(ii);
  }

  auto add_open = [&](const std::vector<bool>& o) {
    for (const auto& e : out.opens)
      if (e == o) return false;
    out.opens.push_back(o);
    return true;
  };
  for (const auto& c : out.closed_sets) {
    std::vector<bool> comp(np);
    for (std::size_t p = 0; p < np; ++p) comp[p] = !c[p];
    add_open(comp);
  }
  std::vector<bool> empty(np, false), full(np, true);
  add_open(empty);
  add_open(full);
  // close up under pairwise union/intersection; record anything added
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < out.opens.size() && !changed; ++i)
      for (std::size_t j = i; j < out.opens.size() && !changed; ++j) {
        if (add_open(set_union(out.opens[i], out.opens[j])) ||
            add_open(set_intersection(out.opens[i], out.opens[j]))) {
          ++out.opens_added_by_closure;
          changed = true;
        }
      }
  }
  std::sort(out.opens.begin(), out.opens.end());
  return out;
}

// ---------------------------------------------------------------------------
// Triadic sheaves
// ---------------------------------------------------------------------------

/// Sections per open, restriction per inclusion pair of opens. Opens are
/// indexed as in the space.
struct TriadicSheaf {
  std::string name;
  SpecSpace space;
  std::vector<ModulePtr> sections;  ///< per open index
  /// restrictions[v][u]: F(V) -> F(U) for U subset of V (u, v open indices)
  std::map<std::pair<std::size_t, std::size_t>, ModuleMorphism> restrictions;

  const ModuleMorphism& restriction(std::size_t from_open, std::size_t to_open) const {
    auto it = restrictions.find({from_open, to_open});
    if (it == restrictions.end())
      throw StructuralError("sheaf: missing restriction");
    return it->second;
  }
};

/// The sheaf of module-valued functions: F(U) = M^{|U|} with coordinate
/// projections as restrictions. A genuine sheaf on any finite space.
inline TriadicSheaf constant_sheaf(const SpecSpace& space, const ModulePtr& m,
                                   const WorkbenchConfig& cfg = {}) {
  TriadicSheaf f;
  f.name = "const(" + m->name + ")";
  f.space = space;
  const std::size_t np = space.points.size();
  std::vector<FiniteProductResult> prods;
  for (const auto& open : space.opens) {
    std::vector<ModulePtr> factors;
    for (std::size_t p = 0; p < np; ++p)
      if (open[p]) factors.push_back(m);
    prods.push_back(finite_product(m->semiring, factors, cfg));
    f.sections.push_back(prods.back().module);
  }
  for (std::size_t v = 0; v < space.opens.size(); ++v)
    for (std::size_t u = 0; u < space.opens.size(); ++u) {
      if (!set_subset(space.opens[u], space.opens[v])) continue;
      // project V-coordinates onto the U-coordinates
      std::vector<std::size_t> vpoints, upoints;
      for (std::size_t p = 0; p < np; ++p) {
        if (space.opens[v][p]) vpoints.push_back(p);
        if (space.opens[u][p]) upoints.push_back(p);
      }
      ModuleMorphism r;
      r.source = f.sections[v];
      r.target = f.sections[u];
      r.table.resize(f.sections[v]->size());
      for (std::size_t val = 0; val < r.table.size(); ++val) {
        // decode V-tuple digits
        std::vector<Elem> digits(vpoints.size());
        std::size_t rest = val;
        for (std::size_t k = vpoints.size(); k-- > 0;) {
          digits[k] = static_cast<Elem>(rest % m->size());
          rest /= m->size();
        }
        std::size_t img = 0;
        for (std::size_t k = 0; k < upoints.size(); ++k) {
          std::size_t pos =
              std::lower_bound(vpoints.begin(), vpoints.end(), upoints[k]) -
              vpoints.begin();
          img = img * m->size() + digits[pos];
        }
        r.table[val] = static_cast<Elem>(img);
      }
      f.restrictions[{v, u}] = std::move(r);
    }
  return f;
}

/// Functoriality plus the sheaf condition on every cover of every open,
/// budget-capped with an explicit coverage statement.
inline AxiomReport check_sheaf(const TriadicSheaf& f, const WorkbenchConfig& cfg = {}) {
  AxiomReport rep;
  rep.subject = f.name;
  const auto& opens = f.space.opens;

  {  // identity and composition of restrictions
    bool ok = true;
    std::vector<std::size_t> wit;
    for (std::size_t u = 0; u < opens.size() && ok; ++u) {
      const ModuleMorphism& r = f.restriction(u, u);
      if (r.table != identity_morphism(f.sections[u]).table) {
        ok = false;
        wit = {u};
      }
    }
    rep.add(ok ? pass_check("restriction-identity")
               : fail_check("restriction-identity", wit));
  }
  {
    bool ok = true;
    std::vector<std::size_t> wit;
    for (std::size_t w = 0; w < opens.size() && ok; ++w)
      for (std::size_t v = 0; v < opens.size() && ok; ++v) {
        if (!set_subset(opens[v], opens[w])) continue;
        for (std::size_t u = 0; u < opens.size() && ok; ++u) {
          if (!set_subset(opens[u], opens[v])) continue;
          ModuleMorphism direct = f.restriction(w, u);
          ModuleMorphism through = compose(f.restriction(v, u), f.restriction(w, v));
          if (direct.table != through.table) {
            ok = false;
            wit = {w, v, u};
          }
        }
      }
    rep.add(ok ? pass_check("restriction-functorial")
               : fail_check("restriction-functorial", wit));
  }

  // sheaf condition: for every open U and every cover by opens, F(U) is the
  // equalizer of the two restriction products
  std::size_t budget_used = 0;
  bool truncated = false;
  bool cond_ok = true;
  std::vector<std::size_t> cond_wit;
  for (std::size_t u = 0; u < opens.size() && cond_ok; ++u) {
    std::vector<std::size_t> subs;
    for (std::size_t v = 0; v < opens.size(); ++v)
      if (v != u && set_subset(opens[v], opens[u])) subs.push_back(v);
    // all sub-families whose union is U
    const std::size_t count = subs.size() > 20 ? 0 : (std::size_t{1} << subs.size());
    for (std::size_t mask = 1; mask < count && cond_ok; ++mask) {
      if (++budget_used > cfg.search_budget) {
        truncated = true;
        break;
      }
      std::vector<std::size_t> cover;
      std::vector<bool> covered(f.space.points.size(), false);
      for (std::size_t k = 0; k < subs.size(); ++k)
        if (mask & (std::size_t{1} << k)) {
          cover.push_back(subs[k]);
          covered = set_union(covered, opens[subs[k]]);
        }
      if (covered != opens[u]) continue;
      // equalizer of the two products
      std::vector<ModulePtr> factors;
      for (std::size_t c : cover) factors.push_back(f.sections[c]);
      FiniteProductResult prod = finite_product(f.sections[u]->semiring, factors, cfg);
      std::vector<Elem> canonical(f.sections[u]->size());
      for (Elem sct = 0; sct < f.sections[u]->size(); ++sct) {
        std::size_t enc = 0;
        for (std::size_t k = 0; k < cover.size(); ++k)
          enc = enc * f.sections[cover[k]]->size() +
                f.restriction(u, cover[k]).table[sct];
        canonical[sct] = static_cast<Elem>(enc);
      }
      // membership of a tuple in the equalizer
      auto agrees = [&](std::size_t tuple) {
        for (std::size_t a = 0; a < cover.size(); ++a)
          for (std::size_t b = a + 1; b < cover.size(); ++b) {
            std::size_t inter = f.space.open_index(
                set_intersection(opens[cover[a]], opens[cover[b]]));
            Elem sa = prod.projections[a].table[tuple];
            Elem sb = prod.projections[b].table[tuple];
            if (f.restriction(cover[a], inter).table[sa] !=
                f.restriction(cover[b], inter).table[sb])
              return false;
          }
        return true;
      };
      std::vector<bool> hit(prod.module->size(), false);
      bool inj = true;
      for (Elem sct = 0; sct < f.sections[u]->size(); ++sct) {
        Elem img = canonical[sct];
        if (hit[img]) inj = false;
        hit[img] = true;
        if (!agrees(img)) inj = false;  // canonical image must agree on overlaps
      }
      bool surj = true;
      for (std::size_t tuple = 0; tuple < prod.module->size(); ++tuple)
        if (agrees(tuple) && !hit[tuple]) surj = false;
      if (!inj || !surj) {
        cond_ok = false;
        cond_wit = {u, mask};
      }
    }
  }
  rep.add(cond_ok
              ? pass_check("sheaf-condition", CheckTier::Paper,
                           truncated ? "partial coverage: budget exhausted" : "")
              : fail_check("sheaf-condition", cond_wit));
  return rep;
}

// ---------------------------------------------------------------------------
// Cech machinery
// ---------------------------------------------------------------------------

/// The cosimplicial module of a cover: degree p is the product of sections
/// over (p+1)-fold intersections, cofaces induced by restrictions. The
/// cochain direction is the one compatible with the product-of-sections
/// formula; the report notes the reading.
struct CechComplex {
  std::vector<ModulePtr> terms;                       ///< degrees 0..len-1
  std::vector<std::vector<std::vector<std::size_t>>> tuples;  ///< per degree
  std::vector<std::vector<ModuleMorphism>> cofaces;   ///< cofaces[p][j]: p-1 -> p
  std::vector<FiniteProductResult> products;
  std::string reading = "cosimplicial";
};

inline CechComplex cech_complex(const TriadicSheaf& f,
                                const std::vector<std::size_t>& cover,
                                const WorkbenchConfig& cfg = {}) {
  // the cover must cover the space
  std::vector<bool> covered(f.space.points.size(), false);
  for (std::size_t c : cover) covered = set_union(covered, f.space.opens[c]);
  std::vector<bool> full(f.space.points.size(), true);
  bool covers_all = covered == full;
  if (!covers_all) throw StructuralError("cech_complex: cover does not cover the space");

  CechComplex out;
  auto intersection_open = [&](const std::vector<std::size_t>& tuple) {
    std::vector<bool> inter(f.space.points.size(), true);
    for (std::size_t c : tuple) inter = set_intersection(inter, f.space.opens[c]);
    return f.space.open_index(inter);
  };
  for (std::size_t p = 0; p < cover.size(); ++p) {
    // ordered index tuples i_0 < ... < i_p
    std::vector<std::vector<std::size_t>> tuples;
    std::vector<std::size_t> cur;
    std::function<void(std::size_t)> gen = [&](std::size_t start) {
      if (cur.size() == p + 1) {
        tuples.push_back(cur);
        return;
      }
      for (std::size_t i = start; i < cover.size(); ++i) {
        cur.push_back(i);
        gen(i + 1);
        cur.pop_back();
      }
    };
    gen(0);
    std::vector<ModulePtr> factors;
    for (const auto& t : tuples) {
      std::vector<std::size_t> opens_of_t;
      for (std::size_t k : t) opens_of_t.push_back(cover[k]);
      factors.push_back(f.sections[intersection_open(opens_of_t)]);
    }
    out.products.push_back(finite_product(f.sections[0]->semiring, factors, cfg));
    out.terms.push_back(out.products.back().module);
    out.tuples.push_back(std::move(tuples));
  }
  // cofaces d^j: C^{p-1} -> C^p, (d^j s)_{i_0..i_p} = res(s_{i_0..^i_j..i_p})
  out.cofaces.resize(cover.size());
  for (std::size_t p = 1; p < cover.size(); ++p)
    for (std::size_t j = 0; j <= p; ++j) {
      ModuleMorphism d;
      d.source = out.terms[p - 1];
      d.target = out.terms[p];
      d.table.resize(out.terms[p - 1]->size());
      for (std::size_t val = 0; val < d.table.size(); ++val) {
        std::size_t enc = 0;
        for (std::size_t ti = 0; ti < out.tuples[p].size(); ++ti) {
          const auto& t = out.tuples[p][ti];
          std::vector<std::size_t> face;
          for (std::size_t k = 0; k <= p; ++k)
            if (k != j) face.push_back(t[k]);
          std::size_t fi = 0;
          for (; fi < out.tuples[p - 1].size(); ++fi)
            if (out.tuples[p - 1][fi] == face) break;
          Elem sv = out.products[p - 1].projections[fi].table[val];
          std::vector<std::size_t> face_opens, t_opens;
          for (std::size_t k : face) face_opens.push_back(cover[k]);
          for (std::size_t k : t) t_opens.push_back(cover[k]);
          Elem restricted =
              f.restriction(intersection_open(face_opens), intersection_open(t_opens))
                  .table[sv];
          enc = enc * out.products[p].radix[ti] + restricted;
        }
        d.table[val] = static_cast<Elem>(enc);
      }
      out.cofaces[p].push_back(std::move(d));
    }
  return out;
}

/// Replay of the cosimplicial identities d^j d^i = d^i d^{j-1} for i < j.
inline bool cech_identities_hold(const CechComplex& c) {
  for (std::size_t p = 2; p < c.terms.size(); ++p)
    for (std::size_t j = 0; j + 1 <= p; ++j)
      for (std::size_t i = 0; i < j; ++i) {
        // both composites: C^{p-2} -> C^p
        const auto& dj = c.cofaces[p][j];
        const auto& di_low = c.cofaces[p - 1][i];
        const auto& di = c.cofaces[p][i];
        const auto& djm1_low = c.cofaces[p - 1][j - 1];
        for (Elem v = 0; v < c.terms[p - 2]->size(); ++v)
          if (dj.table[di_low.table[v]] != di.table[djm1_low.table[v]]) return false;
      }
  return true;
}

struct CechCohomologyResult {
  std::size_t degree = 0;
  bool available = false;
  std::string reason;
  ModulePtr result;
};

/// Degree 0 is the equalizer of the two cofaces; degrees >= 1 use
/// alternating-sum cochain homology and need every term group-complete.
/// Unavailable is a value, never a crash.
inline CechCohomologyResult cech_cohomology(const TriadicSheaf& f,
                                            const std::vector<std::size_t>& cover,
                                            std::size_t p,
                                            const WorkbenchConfig& cfg = {}) {
  CechComplex c = cech_complex(f, cover, cfg);
  CechCohomologyResult out;
  out.degree = p;
  if (p == 0) {
    std::vector<Elem> subset;
    if (c.terms.size() == 1) {
      for (Elem v = 0; v < c.terms[0]->size(); ++v) subset.push_back(v);
    } else {
      for (Elem v = 0; v < c.terms[0]->size(); ++v)
        if (c.cofaces[1][0].table[v] == c.cofaces[1][1].table[v]) subset.push_back(v);
    }
    SubmoduleResult eq = submodule_from_subset(c.terms[0], subset, "H0(cech)");
    out.available = true;
    out.result = eq.module;
    return out;
  }
  if (p >= c.terms.size()) {
    // products over more intersections than the cover has members are empty
    out.available = true;
    out.result = zero_module(f.sections[0]->semiring, "H" + std::to_string(p));
    return out;
  }
  for (std::size_t k = p - 1; k <= std::min(p + 1, c.terms.size() - 1); ++k)
    if (!group_complete(c.terms[k]->carrier)) {
      out.available = false;
      out.reason = "Cech term " + std::to_string(k) + " is not group-complete";
      return out;
    }
  auto differential = [&](std::size_t deg, Elem v) -> Elem {
    // delta^deg = sum_j (-1)^j d^j : C^deg -> C^{deg+1}
    const auto& tgt = *c.terms[deg + 1];
    std::vector<Elem> neg = negation_table(tgt.carrier);
    Elem acc = tgt.zero();
    for (std::size_t j = 0; j <= deg + 1; ++j) {
      Elem term = c.cofaces[deg + 1][j].table[v];
      if (j % 2 == 1) term = neg[term];
      acc = tgt.add(acc, term);
    }
    return acc;
  };
  std::vector<Elem> kernel;
  if (p + 1 < c.terms.size()) {
    for (Elem v = 0; v < c.terms[p]->size(); ++v)
      if (differential(p, v) == c.terms[p + 1]->zero()) kernel.push_back(v);
  } else {
    for (Elem v = 0; v < c.terms[p]->size(); ++v) kernel.push_back(v);
  }
  SubmoduleResult z = submodule_from_subset(c.terms[p], kernel, "cycles");
  std::vector<std::pair<Elem, Elem>> pairs;
  for (Elem v = 0; v < c.terms[p - 1]->size(); ++v) {
    Elem b = differential(p - 1, v);
    auto it = std::lower_bound(z.elements.begin(), z.elements.end(), b);
    if (it == z.elements.end() || *it != b)
      throw StructuralError("cech_cohomology: boundary is not a cycle");
    pairs.emplace_back(static_cast<Elem>(it - z.elements.begin()), z.module->zero());
  }
  Congruence cong = congruence_closure(z.module, pairs);
  QuotientResult q = quotient(z.module, cong, "H" + std::to_string(p) + "(cech)");
  out.available = true;
  out.result = q.module;
  return out;
}

}  // namespace tgmod

#endif  // TGMOD_SPECTRUM_HPP
