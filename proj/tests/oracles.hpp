// Test-only oracles: independent brute-force recomputations used to freeze
// expected values. These never call the implementation paths they check.

#ifndef TGMOD_TESTS_ORACLES_HPP
#define TGMOD_TESTS_ORACLES_HPP

#include <algorithm>
#include <utility>
#include <vector>

#include "tgmod/core.hpp"

namespace tgmod::oracle {

/// Odometer over every table |N|^|M|, checking each against the morphism
/// laws directly. Exponential; small inputs only.
inline std::vector<std::vector<Elem>> all_morphism_tables(const TernaryGammaModule& m,
                                                          const TernaryGammaModule& n) {
  std::vector<std::vector<Elem>> out;
  const std::size_t sz = m.size();
  std::vector<Elem> f(sz, 0);
  const auto scalars = scalar_tuples(*m.semiring);
  bool more = true;
  while (more) {
    bool ok = f[m.zero()] == n.zero();
    for (Elem x = 0; x < sz && ok; ++x)
      for (Elem y = 0; y < sz && ok; ++y)
        if (f[m.add(x, y)] != n.add(f[x], f[y])) ok = false;
    for (const auto& sc : scalars) {
      if (!ok) break;
      for (Elem x = 0; x < sz && ok; ++x)
        if (f[m.act(sc.t1, sc.al, x, sc.be, sc.t2)] !=
            n.act(sc.t1, sc.al, f[x], sc.be, sc.t2))
          ok = false;
    }
    if (ok) out.push_back(f);
    more = false;
    for (std::size_t i = sz; i-- > 0;) {
      if (++f[i] < n.size()) {
        more = true;
        break;
      }
      f[i] = 0;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Naive congruence closure: repeated full passes until stable.
inline std::vector<Elem> naive_congruence_blocks(
    const TernaryGammaModule& m, std::vector<std::pair<Elem, Elem>> pairs) {
  const std::size_t n = m.size();
  std::vector<Elem> cls(n);
  for (Elem i = 0; i < n; ++i) cls[i] = i;
  auto merge = [&](Elem a, Elem b) {
    Elem ca = cls[a], cb = cls[b];
    if (ca == cb) return false;
    for (Elem i = 0; i < n; ++i)
      if (cls[i] == cb) cls[i] = ca;
    return true;
  };
  for (auto [a, b] : pairs) merge(a, b);
  const auto scalars = scalar_tuples(*m.semiring);
  bool changed = true;
  while (changed) {
    changed = false;
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y) {
        if (cls[x] != cls[y]) continue;
        for (Elem z = 0; z < n; ++z)
          if (merge(m.add(x, z), m.add(y, z))) changed = true;
        for (const auto& sc : scalars)
          if (merge(m.act(sc.t1, sc.al, x, sc.be, sc.t2),
                    m.act(sc.t1, sc.al, y, sc.be, sc.t2)))
            changed = true;
      }
  }
  // canonicalize: block id = index of least member
  std::vector<Elem> canon(n);
  for (Elem i = 0; i < n; ++i) {
    Elem least = i;
    for (Elem j = 0; j < n; ++j)
      if (cls[j] == cls[i] && j < least) least = j;
    canon[i] = least;
  }
  return canon;
}

/// Fixpoint closure of a subset under add and the action (independent of
/// submodule_closure).
inline std::vector<Elem> naive_closure(const TernaryGammaModule& m,
                                       std::vector<Elem> seed) {
  std::vector<bool> in(m.size(), false);
  in[m.zero()] = true;
  for (Elem x : seed) in[x] = true;
  const auto scalars = scalar_tuples(*m.semiring);
  bool changed = true;
  while (changed) {
    changed = false;
    for (Elem x = 0; x < m.size(); ++x) {
      if (!in[x]) continue;
      for (Elem y = 0; y < m.size(); ++y) {
        if (!in[y]) continue;
        if (!in[m.add(x, y)]) {
          in[m.add(x, y)] = true;
          changed = true;
        }
      }
      for (const auto& sc : scalars) {
        Elem z = m.act(sc.t1, sc.al, x, sc.be, sc.t2);
        if (!in[z]) {
          in[z] = true;
          changed = true;
        }
      }
    }
  }
  std::vector<Elem> out;
  for (Elem x = 0; x < m.size(); ++x)
    if (in[x]) out.push_back(x);
  return out;
}

/// Odometer over every table |P|^(|M|*|N|), checking the multilinear laws
/// directly. Exponential; small inputs only.
inline std::vector<std::vector<Elem>> all_multilinear_tables(
    const TernaryGammaModule& m, const TernaryGammaModule& n,
    const TernaryGammaModule& p) {
  std::vector<std::vector<Elem>> out;
  const std::size_t nm = m.size(), nn = n.size();
  std::vector<Elem> f(nm * nn, 0);
  const auto scalars = scalar_tuples(*m.semiring);
  auto at = [&](Elem x, Elem y) { return f[x * nn + y]; };
  bool more = true;
  while (more) {
    bool ok = true;
    for (Elem y = 0; y < nn && ok; ++y)
      if (at(m.zero(), y) != p.zero()) ok = false;
    for (Elem x = 0; x < nm && ok; ++x)
      if (at(x, n.zero()) != p.zero()) ok = false;
    for (Elem x = 0; x < nm && ok; ++x)
      for (Elem x2 = 0; x2 < nm && ok; ++x2)
        for (Elem y = 0; y < nn && ok; ++y)
          if (at(m.add(x, x2), y) != p.add(at(x, y), at(x2, y))) ok = false;
    for (Elem x = 0; x < nm && ok; ++x)
      for (Elem y = 0; y < nn && ok; ++y)
        for (Elem y2 = 0; y2 < nn && ok; ++y2)
          if (at(x, n.add(y, y2)) != p.add(at(x, y), at(x, y2))) ok = false;
    for (const auto& sc : scalars) {
      if (!ok) break;
      for (Elem x = 0; x < nm && ok; ++x)
        for (Elem y = 0; y < nn && ok; ++y) {
          Elem lhs = at(m.act(sc.t1, sc.al, x, sc.be, sc.t2), y);
          Elem mid = p.act(sc.t1, sc.al, at(x, y), sc.be, sc.t2);
          Elem rhs = at(x, n.act(sc.t1, sc.al, y, sc.be, sc.t2));
          if (lhs != mid || mid != rhs) ok = false;
        }
    }
    if (ok) out.push_back(f);
    more = false;
    for (std::size_t i = f.size(); i-- > 0;) {
      if (++f[i] < p.size()) {
        more = true;
        break;
      }
      f[i] = 0;
    }
    if (f.empty()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace tgmod::oracle

#endif  // TGMOD_TESTS_ORACLES_HPP

