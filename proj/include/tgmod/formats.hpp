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

#ifndef TGMOD_FORMATS_HPP
#define TGMOD_FORMATS_HPP

#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "tgmod/core.hpp"
#include "tgmod/simplicial.hpp"
#include "tgmod/spectrum.hpp"

namespace tgmod {

/// Parse error with position information.
class ParseError : public StructuralError {
 public:
  ParseError(const std::string& where, std::size_t line, std::size_t col,
             const std::string& msg)
      : StructuralError(where + ":" + std::to_string(line) + ":" +
                        std::to_string(col) + ": " + msg) {}
};

namespace detail {

struct Token {
  std::string text;
  std::size_t line = 0, col = 0;
};

/// Line-oriented tokenizer: '#' starts a comment, tokens are
/// whitespace-separated; ':' and '->' are split off as their own tokens.
inline std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1;
  std::string cur;
  std::size_t cur_line = 0, cur_col = 0;
  auto flush = [&]() {
    if (!cur.empty()) {
      out.push_back({cur, cur_line, cur_col});
      cur.clear();
    }
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '#') {
      flush();
      while (i < text.size() && text[i] != '\n') ++i;
      ++line;
      col = 1;
      continue;
    }
    if (c == '\n') {
      flush();
      ++line;
      col = 1;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      flush();
      ++col;
      continue;
    }
    if (c == ':') {
      flush();
      out.push_back({":", line, col});
      ++col;
      continue;
    }
    if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      flush();
      out.push_back({"->", line, col});
      ++i;
      col += 2;
      continue;
    }
    if (cur.empty()) {
      cur_line = line;
      cur_col = col;
    }
    cur.push_back(c);
    ++col;
  }
  flush();
  return out;
}

struct TokenStream {
  std::string where;
  std::vector<Token> toks;
  std::size_t pos = 0;

  bool done() const { return pos >= toks.size(); }
  const Token& peek() const {
    if (done()) throw ParseError(where, 0, 0, "unexpected end of input");
    return toks[pos];
  }
  Token next() {
    Token t = peek();
    ++pos;
    return t;
  }
  Token expect(const std::string& what) {
    Token t = next();
    if (t.text != what)
      throw ParseError(where, t.line, t.col,
                       "expected '" + what + "', found '" + t.text + "'");
    return t;
  }
  std::vector<std::string> take(std::size_t count, const std::string& what) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < count; ++i) {
      if (done()) {
        const Token& last = toks.empty() ? Token{} : toks.back();
        throw ParseError(where, last.line, last.col,
                         what + ": expected " + std::to_string(count) +
                             " entries, found " + std::to_string(i));
      }
      out.push_back(next().text);
    }
    return out;
  }
};

inline Elem name_index(const TokenStream& ts, const Token& tok,
                       const std::vector<std::string>& names) {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == tok.text) return static_cast<Elem>(i);
  throw ParseError(ts.where, tok.line, tok.col, "unknown element '" + tok.text + "'");
}

inline Elem lookup_name(const TokenStream& ts, std::size_t line, std::size_t col,
                        const std::string& name,
                        const std::vector<std::string>& names) {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<Elem>(i);
  throw ParseError(ts.where, line, col, "unknown element '" + name + "'");
}

}  // namespace detail

/// Everything a file (or group of files) can define. Lookups consult local
/// definitions first, then the supplied fallbacks.
struct ParsedBundle {
  std::map<std::string, SemiringPtr> semirings;
  std::map<std::string, ModulePtr> modules;
  std::map<std::string, ModuleMorphism> morphisms;
  std::map<std::string, SModulePtr> simplicials;
  std::vector<std::string> order;  ///< definition order, "kind name"

  SemiringPtr find_semiring(const std::string& name) const {
    auto it = semirings.find(name);
    return it == semirings.end() ? nullptr : it->second;
  }
  ModulePtr find_module(const std::string& name) const {
    auto it = modules.find(name);
    return it == modules.end() ? nullptr : it->second;
  }
};

/// Parses `.tga` (semirings/modules) and `.tgm` (morphisms) and `.tgs`
/// (simplicial) blocks from one text. Structures may reference earlier
/// blocks in the same text or entries of `fallback`.
inline ParsedBundle parse_text(const std::string& text, const std::string& where,
                               const ParsedBundle* fallback = nullptr) {
  ParsedBundle out;
  detail::TokenStream ts{where, detail::tokenize(text), 0};

  auto resolve_semiring = [&](const detail::Token& tok) -> SemiringPtr {
    if (auto s = out.find_semiring(tok.text)) return s;
    if (fallback)
      if (auto s = fallback->find_semiring(tok.text)) return s;
    throw ParseError(where, tok.line, tok.col, "unknown semiring '" + tok.text + "'");
  };
  auto resolve_module = [&](const detail::Token& tok) -> ModulePtr {
    if (auto m = out.find_module(tok.text)) return m;
    if (fallback)
      if (auto m = fallback->find_module(tok.text)) return m;
    throw ParseError(where, tok.line, tok.col, "unknown module '" + tok.text + "'");
  };

  while (!ts.done()) {
    detail::Token head = ts.next();
    if (head.text == "semiring") {
      auto s = std::make_shared<TernaryGammaSemiring>();
      s->name = ts.next().text;
      ts.expect("elements");
      ts.expect(":");
      std::vector<std::string> names;
      while (!ts.done() && ts.peek().text != "zero") names.push_back(ts.next().text);
      s->carrier.size = names.size();
      s->carrier.names = names;
      ts.expect("zero");
      ts.expect(":");
      {
        detail::Token z = ts.next();
        s->carrier.zero = detail::name_index(ts, z, names);
      }
      ts.expect("gamma");
      ts.expect(":");
      std::vector<std::string> gnames;
      while (!ts.done() && ts.peek().text != "add") gnames.push_back(ts.next().text);
      s->gamma_size = gnames.size();
      s->gamma_names = gnames;
      ts.expect("add");
      ts.expect(":");
      const std::size_t n = names.size();
      {
        detail::Token at = ts.peek();
        auto entries = ts.take(n * n, "add table");
        s->carrier.add_table.reserve(n * n);
        for (const auto& e : entries)
          s->carrier.add_table.push_back(
              detail::lookup_name(ts, at.line, at.col, e, names));
      }
      ts.expect("ternary");
      ts.expect(":");
      {
        const std::size_t want = n * gnames.size() * n * gnames.size() * n;
        detail::Token at = ts.peek();
        auto entries = ts.take(want, "ternary table");
        for (const auto& e : entries)
          s->ternary_table.push_back(detail::lookup_name(ts, at.line, at.col, e, names));
      }
      s->validate_shape();
      out.semirings[s->name] = s;
      out.order.push_back("semiring " + s->name);
    } else if (head.text == "module") {
      auto m = std::make_shared<TernaryGammaModule>();
      m->name = ts.next().text;
      ts.expect("over");
      m->semiring = resolve_semiring(ts.next());
      ts.expect("elements");
      ts.expect(":");
      std::vector<std::string> names;
      while (!ts.done() && ts.peek().text != "zero") names.push_back(ts.next().text);
      m->carrier.size = names.size();
      m->carrier.names = names;
      ts.expect("zero");
      ts.expect(":");
      m->carrier.zero = detail::name_index(ts, ts.next(), names);
      ts.expect("add");
      ts.expect(":");
      const std::size_t n = names.size();
      {
        detail::Token at = ts.peek();
        auto entries = ts.take(n * n, "add table");
        for (const auto& e : entries)
          m->carrier.add_table.push_back(
              detail::lookup_name(ts, at.line, at.col, e, names));
      }
      ts.expect("action");
      ts.expect(":");
      {
        const std::size_t t = m->semiring->tsize(), g = m->semiring->gamma_size;
        const std::size_t want = t * g * n * g * t;
        detail::Token at = ts.peek();
        auto entries = ts.take(want, "action table");
        for (const auto& e : entries)
          m->action_table.push_back(detail::lookup_name(ts, at.line, at.col, e, names));
      }
      m->validate_shape();
      out.modules[m->name] = m;
      out.order.push_back("module " + m->name);
    } else if (head.text == "morphism") {
      std::string name = ts.next().text;
      ts.expect(":");
      ModulePtr src = resolve_module(ts.next());
      ts.expect("->");
      ModulePtr dst = resolve_module(ts.next());
      ts.expect("map");
      ts.expect(":");
      ModuleMorphism f;
      f.source = src;
      f.target = dst;
      detail::Token at = ts.peek();
      auto entries = ts.take(src->size(), "morphism map");
      const auto& dnames = dst->carrier.names;
      for (const auto& e : entries) {
        if (dnames.empty()) {
          f.table.push_back(static_cast<Elem>(std::stoul(e)));
        } else {
          f.table.push_back(detail::lookup_name(ts, at.line, at.col, e, dnames));
        }
      }
      f.validate_shape();
      out.morphisms[name] = f;
      out.order.push_back("morphism " + name);
    } else if (head.text == "simplicial") {
      auto x = std::make_shared<SimplicialModule>();
      x->name = ts.next().text;
      ts.expect("truncation");
      ts.expect(":");
      x->trunc = std::stoul(ts.next().text);
      x->levels.resize(x->trunc + 1);
      x->faces.resize(x->trunc + 1);
      x->degens.resize(x->trunc + 1);
      for (std::size_t lvl = 0; lvl <= x->trunc; ++lvl) {
        ts.expect("level");
        detail::Token lt = ts.next();
        if (std::stoul(lt.text) != lvl)
          throw ParseError(where, lt.line, lt.col, "levels must be listed in order");
        ts.expect(":");
        x->levels[lvl] = resolve_module(ts.next());
      }
      for (std::size_t n = 1; n <= x->trunc; ++n)
        for (std::size_t i = 0; i <= n; ++i) {
          ts.expect("face");
          std::size_t fn = std::stoul(ts.next().text);
          std::size_t fi = std::stoul(ts.next().text);
          if (fn != n || fi != i)
            throw ParseError(where, head.line, head.col,
                             "faces must be listed in (level, index) order");
          ts.expect(":");
          ModuleMorphism d;
          d.source = x->levels[n];
          d.target = x->levels[n - 1];
          detail::Token at = ts.peek();
          auto entries = ts.take(x->levels[n]->size(), "face table");
          const auto& dnames = x->levels[n - 1]->carrier.names;
          for (const auto& e : entries)
            d.table.push_back(dnames.empty()
                                  ? static_cast<Elem>(std::stoul(e))
                                  : detail::lookup_name(ts, at.line, at.col, e, dnames));
          x->faces[n].push_back(std::move(d));
        }
      for (std::size_t n = 0; n < x->trunc; ++n)
        for (std::size_t i = 0; i <= n; ++i) {
          ts.expect("degeneracy");
          std::size_t sn = std::stoul(ts.next().text);
          std::size_t si = std::stoul(ts.next().text);
          if (sn != n || si != i)
            throw ParseError(where, head.line, head.col,
                             "degeneracies must be listed in (level, index) order");
          ts.expect(":");
          ModuleMorphism s;
          s.source = x->levels[n];
          s.target = x->levels[n + 1];
          detail::Token at = ts.peek();
          auto entries = ts.take(x->levels[n]->size(), "degeneracy table");
          const auto& dnames = x->levels[n + 1]->carrier.names;
          for (const auto& e : entries)
            s.table.push_back(dnames.empty()
                                  ? static_cast<Elem>(std::stoul(e))
                                  : detail::lookup_name(ts, at.line, at.col, e, dnames));
          x->degens[n].push_back(std::move(s));
        }
      x->validate_shape();
      out.simplicials[x->name] = x;
      out.order.push_back("simplicial " + x->name);
    } else {
      throw ParseError(where, head.line, head.col,
                       "unknown block '" + head.text + "'");
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Canonical serialization: blocks sorted by kind then name, single spaces.
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<std::string> element_names(const FiniteCommutativeMonoid& m) {
  if (!m.names.empty()) return m.names;
  std::vector<std::string> out;
  for (std::size_t i = 0; i < m.size; ++i) out.push_back("e" + std::to_string(i));
  return out;
}

inline std::vector<std::string> gamma_names_of(const TernaryGammaSemiring& s) {
  if (!s.gamma_names.empty()) return s.gamma_names;
  std::vector<std::string> out;
  for (std::size_t i = 0; i < s.gamma_size; ++i) out.push_back("g" + std::to_string(i));
  return out;
}

inline void join_names(std::ostringstream& os, const std::vector<Elem>& table,
                       const std::vector<std::string>& names) {
  for (std::size_t i = 0; i < table.size(); ++i)
    os << (i ? " " : "") << names[table[i]];
}

}  // namespace detail

inline std::string serialize_semiring(const TernaryGammaSemiring& s) {
  std::ostringstream os;
  auto en = detail::element_names(s.carrier);
  auto gn = detail::gamma_names_of(s);
  os << "semiring " << s.name << "\n";
  os << "elements:";
  for (const auto& e : en) os << " " << e;
  os << "\nzero: " << en[s.carrier.zero] << "\ngamma:";
  for (const auto& g : gn) os << " " << g;
  os << "\nadd: ";
  detail::join_names(os, s.carrier.add_table, en);
  os << "\nternary: ";
  detail::join_names(os, s.ternary_table, en);
  os << "\n";
  return os.str();
}

inline std::string serialize_module(const TernaryGammaModule& m) {
  std::ostringstream os;
  auto en = detail::element_names(m.carrier);
  os << "module " << m.name << " over " << m.semiring->name << "\n";
  os << "elements:";
  for (const auto& e : en) os << " " << e;
  os << "\nzero: " << en[m.carrier.zero] << "\nadd: ";
  detail::join_names(os, m.carrier.add_table, en);
  os << "\naction: ";
  detail::join_names(os, m.action_table, en);
  os << "\n";
  return os.str();
}

inline std::string serialize_morphism(const std::string& name,
                                      const ModuleMorphism& f) {
  std::ostringstream os;
  os << "morphism " << name << " : " << f.source->name << " -> " << f.target->name
     << "\nmap: ";
  detail::join_names(os, f.table, detail::element_names(f.target->carrier));
  os << "\n";
  return os.str();
}

inline std::string serialize_simplicial(const SimplicialModule& x) {
  std::ostringstream os;
  os << "simplicial " << x.name << "\ntruncation: " << x.trunc << "\n";
  for (std::size_t n = 0; n <= x.trunc; ++n)
    os << "level " << n << ": " << x.levels[n]->name << "\n";
  for (std::size_t n = 1; n <= x.trunc; ++n)
    for (std::size_t i = 0; i <= n; ++i) {
      os << "face " << n << " " << i << ": ";
      detail::join_names(os, x.faces[n][i].table,
                         detail::element_names(x.levels[n - 1]->carrier));
      os << "\n";
    }
  for (std::size_t n = 0; n < x.trunc; ++n)
    for (std::size_t i = 0; i <= n; ++i) {
      os << "degeneracy " << n << " " << i << ": ";
      detail::join_names(os, x.degens[n][i].table,
                         detail::element_names(x.levels[n + 1]->carrier));
      os << "\n";
    }
  return os.str();
}

/// Canonical bundle serialization: semirings, then modules, then morphisms,
/// then simplicial objects, each alphabetical.
inline std::string serialize_bundle(const ParsedBundle& b) {
  std::ostringstream os;
  for (const auto& [name, s] : b.semirings) os << serialize_semiring(*s);
  for (const auto& [name, m] : b.modules) os << serialize_module(*m);
  for (const auto& [name, f] : b.morphisms) os << serialize_morphism(name, f);
  for (const auto& [name, x] : b.simplicials) os << serialize_simplicial(*x);
  return os.str();
}

// ---------------------------------------------------------------------------
// Sheaf descriptions (.tgf)
// ---------------------------------------------------------------------------

/// Sheaf file: abstract points, opens as point lists, a module reference per
/// open, a restriction table per proper inclusion (identities implied).
/// Points of a parsed space are abstract labels carried by placeholder
/// ideals.
inline TriadicSheaf parse_sheaf(const std::string& text, const std::string& where,
                                const ParsedBundle& bundle) {
  detail::TokenStream ts{where, detail::tokenize(text), 0};
  ts.expect("sheaf");
  TriadicSheaf f;
  f.name = ts.next().text;
  ts.expect("over");
  detail::Token stok = ts.next();
  SemiringPtr sr = bundle.find_semiring(stok.text);
  if (!sr) throw ParseError(where, stok.line, stok.col,
                            "unknown semiring '" + stok.text + "'");
  f.space.semiring = sr;
  ts.expect("points");
  ts.expect(":");
  std::vector<std::string> pnames;
  while (!ts.done() && ts.peek().text != "open") pnames.push_back(ts.next().text);
  for (std::size_t p = 0; p < pnames.size(); ++p) {
    GammaIdeal placeholder;
    placeholder.semiring = sr;
    placeholder.members.assign(sr->tsize(), false);
    placeholder.members[sr->carrier.zero] = true;
    f.space.points.push_back(placeholder);
  }
  auto point_index = [&](const detail::Token& t) {
    for (std::size_t i = 0; i < pnames.size(); ++i)
      if (pnames[i] == t.text) return i;
    throw ParseError(where, t.line, t.col, "unknown point '" + t.text + "'");
  };
  std::map<std::string, std::vector<bool>> open_by_name;
  std::vector<std::string> open_order;
  while (!ts.done() && ts.peek().text == "open") {
    ts.next();
    std::string oname = ts.next().text;
    ts.expect(":");
    std::vector<bool> o(pnames.size(), false);
    while (!ts.done() && ts.peek().text != "open" && ts.peek().text != "section")
      o[point_index(ts.next())] = true;
    open_by_name[oname] = o;
    open_order.push_back(oname);
  }
  for (const auto& [name, o] : open_by_name) f.space.opens.push_back(o);
  std::sort(f.space.opens.begin(), f.space.opens.end());
  f.space.opens.erase(std::unique(f.space.opens.begin(), f.space.opens.end()),
                      f.space.opens.end());
  f.sections.assign(f.space.opens.size(), nullptr);

  while (!ts.done() && ts.peek().text == "section") {
    ts.next();
    detail::Token ot = ts.next();
    auto oit = open_by_name.find(ot.text);
    if (oit == open_by_name.end())
      throw ParseError(where, ot.line, ot.col, "unknown open '" + ot.text + "'");
    ts.expect(":");
    detail::Token mt = ts.next();
    ModulePtr m = bundle.find_module(mt.text);
    if (!m) throw ParseError(where, mt.line, mt.col,
                             "unknown module '" + mt.text + "'");
    f.sections[f.space.open_index(oit->second)] = m;
  }
  for (std::size_t i = 0; i < f.sections.size(); ++i)
    if (!f.sections[i])
      throw ParseError(where, 0, 0, "missing section for an open set");

  for (std::size_t i = 0; i < f.space.opens.size(); ++i)
    f.restrictions[{i, i}] = identity_morphism(f.sections[i]);
  while (!ts.done()) {
    ts.expect("restriction");
    detail::Token vt = ts.next();
    ts.expect("->");
    detail::Token ut = ts.next();
    ts.expect(":");
    auto vit = open_by_name.find(vt.text);
    auto uit = open_by_name.find(ut.text);
    if (vit == open_by_name.end())
      throw ParseError(where, vt.line, vt.col, "unknown open '" + vt.text + "'");
    if (uit == open_by_name.end())
      throw ParseError(where, ut.line, ut.col, "unknown open '" + ut.text + "'");
    std::size_t v = f.space.open_index(vit->second);
    std::size_t u = f.space.open_index(uit->second);
    ModuleMorphism r;
    r.source = f.sections[v];
    r.target = f.sections[u];
    detail::Token at = ts.peek();
    auto entries = ts.take(f.sections[v]->size(), "restriction table");
    const auto& dnames = f.sections[u]->carrier.names;
    for (const auto& e : entries)
      r.table.push_back(dnames.empty()
                            ? static_cast<Elem>(std::stoul(e))
                            : detail::lookup_name(ts, at.line, at.col, e, dnames));
    r.validate_shape();
    f.restrictions[{v, u}] = std::move(r);
  }
  // every inclusion pair must have a restriction
  for (std::size_t v = 0; v < f.space.opens.size(); ++v)
    for (std::size_t u = 0; u < f.space.opens.size(); ++u) {
      if (!set_subset(f.space.opens[u], f.space.opens[v])) continue;
      if (f.restrictions.find({v, u}) == f.restrictions.end())
        throw ParseError(where, 0, 0, "missing restriction between nested opens");
    }
  return f;
}

/// Canonical sheaf text: opens renamed O0..Ok in sorted order.
inline std::string serialize_sheaf(const TriadicSheaf& f) {
  std::ostringstream os;
  os << "sheaf " << f.name << " over " << f.space.semiring->name << "\npoints:";
  for (std::size_t p = 0; p < f.space.points.size(); ++p) os << " p" << p;
  os << "\n";
  for (std::size_t i = 0; i < f.space.opens.size(); ++i) {
    os << "open O" << i << ":";
    for (std::size_t p = 0; p < f.space.points.size(); ++p)
      if (f.space.opens[i][p]) os << " p" << p;
    os << "\n";
  }
  for (std::size_t i = 0; i < f.space.opens.size(); ++i)
    os << "section O" << i << ": " << f.sections[i]->name << "\n";
  for (std::size_t v = 0; v < f.space.opens.size(); ++v)
    for (std::size_t u = 0; u < f.space.opens.size(); ++u) {
      if (u == v || !set_subset(f.space.opens[u], f.space.opens[v])) continue;
      os << "restriction O" << v << " -> O" << u << ": ";
      detail::join_names(os, f.restriction(v, u).table,
                         detail::element_names(f.sections[u]->carrier));
      os << "\n";
    }
  return os.str();
}

}  // namespace tgmod

#endif  // TGMOD_FORMATS_HPP
