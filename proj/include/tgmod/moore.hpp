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

#ifndef TGMOD_MOORE_HPP
#define TGMOD_MOORE_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "tgmod/exactness.hpp"
#include "tgmod/simplicial.hpp"

namespace tgmod {

// ---------------------------------------------------------------------------
// Moore complex
// ---------------------------------------------------------------------------

/// Normalized complex: N_n = intersection over i = 1..n of the zero-preimages
/// of d_i (a submodule thanks to strict zero-absorption), with boundary the
/// restriction of d_0.
struct MooreComplex {
  SModulePtr object;
  std::vector<SubmoduleResult> terms;    ///< N_0..N_trunc
  std::vector<ModuleMorphism> boundary;  ///< boundary[n]: N_n -> N_{n-1}, n >= 1
};

inline MooreComplex moore_complex(const SModulePtr& x, const WorkbenchConfig& cfg = {}) {
  if (!cfg.strict_zero)
    throw StructuralError(
        "moore_complex: requires strict zero-absorption (zero-preimages are not "
        "submodules otherwise)");
  MooreComplex out;
  out.object = x;
  for (std::size_t n = 0; n <= x->trunc; ++n) {
    std::vector<Elem> subset;
    for (Elem v = 0; v < x->levels[n]->size(); ++v) {
      bool in = true;
      for (std::size_t i = 1; i <= n && in; ++i)
        if (x->d(n, i).table[v] != x->levels[n - 1]->zero()) in = false;
      if (in) subset.push_back(v);
    }
    out.terms.push_back(submodule_from_subset(x->levels[n], subset,
                                              "N" + std::to_string(n) + "(" +
                                                  x->name + ")"));
  }
  out.boundary.resize(x->trunc + 1);
  for (std::size_t n = 1; n <= x->trunc; ++n)
    out.boundary[n] = restrict_morphism(x->d(n, 0), out.terms[n], out.terms[n - 1]);
  return out;
}

// ---------------------------------------------------------------------------
// Homology
// ---------------------------------------------------------------------------

/// H_n as a congruence quotient of the cycle submodule Z_n. Without additive
/// inverses, killing boundaries as a set is too coarse a relation to recover
/// the classical groups, so two cycles are identified when a normalized
/// (n+1)-simplex connects them: e with d_i e = 0 for i >= 2 and both d_0 e,
/// d_1 e cycles contributes the pair (d_0 e, d_1 e). For group-complete
/// instances this congruence coincides with the classical quotient by
/// boundaries (normalize e against s_0 d_1 e), and it always contains every
/// pair (b, 0) with b a Moore boundary.
struct HomologyModule {
  std::size_t degree = 0;
  bool reliable = true;          ///< false at the truncation edge
  SubmoduleResult cycles;        ///< Z_n as a submodule of X_n
  Congruence congruence;         ///< on cycles.module
  ModulePtr result;
  ModuleMorphism projection;     ///< cycles.module -> result

  /// Homology class of a parent-level element (must be a cycle).
  Elem class_of_parent(Elem parent) const {
    auto it = std::lower_bound(cycles.elements.begin(), cycles.elements.end(), parent);
    if (it == cycles.elements.end() || *it != parent)
      throw StructuralError("homology: element is not a cycle");
    return congruence.block_of[static_cast<Elem>(it - cycles.elements.begin())];
  }

  bool is_cycle_parent(Elem parent) const {
    return std::binary_search(cycles.elements.begin(), cycles.elements.end(), parent);
  }
};

inline HomologyModule homology(const SModulePtr& x, std::size_t n,
                               const WorkbenchConfig& cfg = {}) {
  if (n > x->trunc)
    throw StructuralError("homology: degree beyond truncation");
  MooreComplex mc = moore_complex(x, cfg);
  HomologyModule out;
  out.degree = n;
  out.reliable = n + 1 <= x->trunc;

  std::vector<Elem> zsubset;
  if (n == 0) {
    for (Elem v = 0; v < x->levels[0]->size(); ++v) zsubset.push_back(v);
  } else {
    for (std::size_t zi = 0; zi < mc.terms[n].elements.size(); ++zi) {
      Elem parent = mc.terms[n].elements[zi];
      if (x->d(n, 0).table[parent] == x->levels[n - 1]->zero())
        zsubset.push_back(parent);
    }
  }
  out.cycles = submodule_from_subset(x->levels[n], zsubset,
                                     "Z" + std::to_string(n) + "(" + x->name + ")");

  std::vector<std::pair<Elem, Elem>> pairs;
  if (out.reliable) {
    const auto& Xn1 = *x->levels[n + 1];
    for (Elem e = 0; e < Xn1.size(); ++e) {
      bool normalized = true;
      for (std::size_t i = 2; i <= n + 1 && normalized; ++i)
        if (x->d(n + 1, i).table[e] != x->levels[n]->zero()) normalized = false;
      if (!normalized) continue;
      Elem a = x->d(n + 1, 0).table[e];
      Elem b = x->d(n + 1, 1).table[e];
      auto pos = [&](Elem parent) -> std::ptrdiff_t {
        auto it = std::lower_bound(out.cycles.elements.begin(),
                                   out.cycles.elements.end(), parent);
        if (it == out.cycles.elements.end() || *it != parent) return -1;
        return it - out.cycles.elements.begin();
      };
      auto pa = pos(a), pb = pos(b);
      if (pa < 0 || pb < 0) continue;  // endpoints must both be cycles
      pairs.emplace_back(static_cast<Elem>(pa), static_cast<Elem>(pb));
    }
  }
  out.congruence = congruence_closure(out.cycles.module, pairs);
  QuotientResult q = quotient(out.cycles.module, out.congruence,
                              "H" + std::to_string(n) + "(" + x->name + ")");
  out.result = q.module;
  out.projection = q.projection;
  return out;
}

/// The map H_n(f) on homology classes, with an explicit well-definedness
/// replay across every member of every class.
struct InducedHomologyMap {
  ModuleMorphism map;
  bool well_defined = true;
  bool cycles_preserved = true;
};

inline InducedHomologyMap induced_homology_map(const SimplicialMorphism& f,
                                               const HomologyModule& hx,
                                               const HomologyModule& hy) {
  InducedHomologyMap out;
  const std::size_t n = hx.degree;
  const ModuleMorphism& fn = f.levels[n];
  out.map.source = hx.result;
  out.map.target = hy.result;
  out.map.table.assign(hx.result->size(), 0);
  std::vector<bool> seen(hx.result->size(), false);
  for (std::size_t zi = 0; zi < hx.cycles.elements.size(); ++zi) {
    Elem parent = hx.cycles.elements[zi];
    Elem img = fn.table[parent];
    if (!hy.is_cycle_parent(img)) {
      out.cycles_preserved = false;
      continue;
    }
    Elem cls = hx.congruence.block_of[zi];
    Elem icls = hy.class_of_parent(img);
    if (!seen[cls]) {
      seen[cls] = true;
      out.map.table[cls] = icls;
    } else if (out.map.table[cls] != icls) {
      out.well_defined = false;
    }
  }
  return out;
}

/// True iff every induced homology map in the reliable degrees is a
/// bijection (both directions checked representative-wise).
struct WeakEquivalenceReport {
  bool is_weak_equivalence = true;
  std::vector<Check> degrees;
};

inline WeakEquivalenceReport is_weak_equivalence(const SimplicialMorphism& f,
                                                 const WorkbenchConfig& cfg = {}) {
  {
    AxiomReport pre = check_simplicial_morphism(f);
    if (!pre.passed())
      throw StructuralError("is_weak_equivalence: not a simplicial morphism (" +
                            pre.first_failure()->name + ")");
  }
  WeakEquivalenceReport out;
  const std::size_t reliable = f.source->trunc;  // degrees 0..trunc-1
  for (std::size_t n = 0; n < reliable; ++n) {
    HomologyModule hx = homology(f.source, n, cfg);
    HomologyModule hy = homology(f.target, n, cfg);
    InducedHomologyMap ind = induced_homology_map(f, hx, hy);
    bool ok = ind.well_defined && ind.cycles_preserved &&
              hx.result->size() == hy.result->size() && is_injective(ind.map) &&
              is_surjective(ind.map);
    out.degrees.push_back(
        ok ? pass_check("homology-iso-degree-" + std::to_string(n))
           : fail_check("homology-iso-degree-" + std::to_string(n),
                        {n, hx.result->size(), hy.result->size()}));
    if (!ok) out.is_weak_equivalence = false;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Kan conditions
// ---------------------------------------------------------------------------

/// Horn-lifting certification for U(f) on underlying simplicial sets: every
/// horn problem within the truncation must have a filler. Vacuous (flagged)
/// when the truncation can state no horn condition.
struct FibrationReport {
  bool is_fibration = true;
  bool vacuous = false;
  std::size_t problems = 0;
  std::vector<Check> checks;
};

inline FibrationReport is_fibration(const SimplicialMorphism& f,
                                    const WorkbenchConfig& cfg = {}) {
  {
    AxiomReport pre = check_simplicial_morphism(f);
    if (!pre.passed())
      throw StructuralError("is_fibration: not a simplicial morphism (" +
                            pre.first_failure()->name + ")");
  }
  FibrationReport out;
  const SimplicialModule& X = *f.source;
  const SimplicialModule& Y = *f.target;
  if (X.trunc < 1) {
    out.vacuous = true;
    out.checks.push_back(pass_check("kan-vacuous", CheckTier::Info,
                                    "truncation too small to state a horn"));
    return out;
  }
  for (std::size_t n = 1; n <= X.trunc; ++n) {
    const std::size_t sz_low = X.levels[n - 1]->size();
    const std::size_t sz_top = X.levels[n]->size();
    double space = detail::pow_size(sz_low, n) * static_cast<double>(Y.levels[n]->size());
    if (space > static_cast<double>(cfg.search_budget))
      throw BudgetError("is_fibration: horn space exceeds search budget at level " +
                        std::to_string(n));
    for (std::size_t k = 0; k <= n; ++k) {
      // faces of the horn, indices i != k, as an odometer over X_{n-1}^n
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i <= n; ++i)
        if (i != k) idx.push_back(i);
      std::vector<Elem> xs(n, 0);
      bool more = true;
      while (more) {
        bool compatible = true;
        // d_i x_j = d_{j-1} x_i for i < j, both != k (faces live at level n-1)
        if (n >= 2) {
          for (std::size_t a = 0; a < idx.size() && compatible; ++a)
            for (std::size_t b = a + 1; b < idx.size() && compatible; ++b) {
              std::size_t i = idx[a], j = idx[b];
              if (X.d(n - 1, i).table[xs[b]] != X.d(n - 1, j - 1).table[xs[a]])
                compatible = false;
            }
        }
        if (compatible) {
          for (Elem y = 0; y < Y.levels[n]->size(); ++y) {
            bool matches = true;
            for (std::size_t a = 0; a < idx.size() && matches; ++a)
              if (Y.d(n, idx[a]).table[y] != f.levels[n - 1].table[xs[a]])
                matches = false;
            if (!matches) continue;
            ++out.problems;
            bool filled = false;
            for (Elem cand = 0; cand < sz_top && !filled; ++cand) {
              if (f.levels[n].table[cand] != y) continue;
              bool fits = true;
              for (std::size_t a = 0; a < idx.size() && fits; ++a)
                if (X.d(n, idx[a]).table[cand] != xs[a]) fits = false;
              if (fits) filled = true;
            }
            if (!filled) {
              std::vector<std::size_t> wit{n, k};
              for (Elem v : xs) wit.push_back(v);
              wit.push_back(y);
              out.checks.push_back(fail_check("kan-horn", wit, CheckTier::Paper,
                                              "unfillable horn"));
              out.is_fibration = false;
            }
          }
        }
        more = false;
        for (std::size_t i = xs.size(); i-- > 0;) {
          if (++xs[i] < sz_low) {
            more = true;
            break;
          }
          xs[i] = 0;
        }
        if (xs.empty()) break;
      }
      if (!out.is_fibration) return out;  // first witness is enough
    }
  }
  out.checks.push_back(pass_check("kan-horns", CheckTier::Paper,
                                  std::to_string(out.problems) + " horn problems filled"));
  return out;
}

/// Fibrancy: the unique map to the point object is a fibration.
inline bool is_fibrant(const SModulePtr& x, const WorkbenchConfig& cfg = {}) {
  SimplicialMorphism to_point = zero_smorphism(x, point_object(x->levels[0]->semiring,
                                                               x->trunc));
  return is_fibration(to_point, cfg).is_fibration;
}

}  // namespace tgmod

#endif  // TGMOD_MOORE_HPP
