// Text grammar for trees and terms, JSON codecs for every exchanged object,
// and DOT export for pasting schemes and collections.

#pragma once

#include <cctype>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "globop/coend.hpp"
#include "globop/collections.hpp"
#include "globop/contraction.hpp"
#include "globop/core.hpp"
#include "globop/pasting.hpp"
#include "globop/presentation.hpp"
#include "globop/term.hpp"
#include "globop/tree.hpp"

namespace globop {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// Trees: `1(n)`, `d[k,n](T)`, `T *[n,p] T`, `tree{n; top=[..]; bot=[..]}`.
// ---------------------------------------------------------------------------

class Cursor {
public:
  explicit Cursor(const std::string& s) : s_(s) {}
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eof() {
    skip();
    return i_ >= s_.size();
  }
  char peek() {
    skip();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  bool try_eat(const std::string& tok) {
    skip();
    if (s_.compare(i_, tok.size(), tok) == 0) {
      i_ += tok.size();
      return true;
    }
    return false;
  }
  void expect(const std::string& tok) {
    if (!try_eat(tok))
      throw ParseError(cat("expected '", tok, "' at offset ", i_, " in: ", s_));
  }
  int integer() {
    skip();
    std::size_t start = i_;
    if (i_ < s_.size() && s_[i_] == '-') ++i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) throw ParseError(cat("expected integer at offset ", start));
    return std::stoi(s_.substr(start, i_ - start));
  }
  std::string ident() {
    skip();
    std::size_t start = i_;
    while (i_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '@'))
      ++i_;
    if (start == i_) throw ParseError(cat("expected identifier at offset ", start));
    return s_.substr(start, i_ - start);
  }

private:
  const std::string& s_;
  std::size_t i_ = 0;
};

inline Tree parse_tree_expr(Cursor& c);

inline Tree parse_tree_atom(Cursor& c) {
  if (c.try_eat("tree{")) {
    TreeMatrix m;
    m.ambient = c.integer();
    c.expect(";");
    c.expect("top=[");
    if (!c.try_eat("]")) {
      do m.top.push_back(c.integer());
      while (c.try_eat(","));
      c.expect("]");
    }
    c.expect(";");
    c.expect("bot=[");
    if (!c.try_eat("]")) {
      do m.bot.push_back(c.integer());
      while (c.try_eat(","));
      c.expect("]");
    }
    c.expect("}");
    return decode_tree(m);
  }
  if (c.try_eat("d[")) {
    int k = c.integer();
    c.expect(",");
    int n = c.integer();
    c.expect("]");
    c.expect("(");
    Tree t = parse_tree_expr(c);
    c.expect(")");
    if (t.ambient != k) throw ParseError("degeneracy source dim mismatch");
    return degenerate_tree(t, n);
  }
  if (c.try_eat("1(")) {
    int n = c.integer();
    c.expect(")");
    return linear_tree(n);
  }
  if (c.try_eat("(")) {
    Tree t = parse_tree_expr(c);
    c.expect(")");
    return t;
  }
  throw ParseError("expected a tree");
}

inline Tree parse_tree_expr(Cursor& c) {
  std::vector<Tree> factors{parse_tree_atom(c)};
  std::vector<int> junctions;
  int ambient = factors[0].ambient;
  while (c.try_eat("*[")) {
    int n = c.integer();
    c.expect(",");
    int p = c.integer();
    c.expect("]");
    factors.push_back(parse_tree_atom(c));
    junctions.push_back(p);
    ambient = std::max({ambient, n, factors.back().ambient});
  }
  if (factors.size() == 1) return factors[0];
  for (auto& f : factors) f = embed_tree(f, ambient);
  return assemble_star_word(factors, junctions, 0, factors.size());
}

inline Tree parse_tree(const std::string& s) {
  Cursor c(s);
  Tree t = parse_tree_expr(c);
  if (!c.eof()) throw ParseError(cat("trailing input in tree: ", s));
  return t;
}

inline json tree_to_json(const Tree& t) {
  TreeMatrix m = encode_tree(t);
  return json{{"n", m.ambient}, {"top", m.top}, {"bot", m.bot}};
}

inline Tree tree_from_json(const json& j) {
  TreeMatrix m;
  m.ambient = j.at("n").get<int>();
  m.top = j.at("top").get<std::vector<int>>();
  m.bot = j.at("bot").get<std::vector<int>>();
  return decode_tree(m);
}

// ---------------------------------------------------------------------------
// Globular sets and collections.
// ---------------------------------------------------------------------------

inline json globular_to_json(const GlobularSet& X) {
  json cells = json::array();
  for (const auto& c : X.cells) {
    json jc{{"id", c.id}, {"dim", c.dim}};
    if (c.dim >= 1) {
      jc["src"] = c.src;
      jc["tgt"] = c.tgt;
    }
    cells.push_back(jc);
  }
  return json{{"max_dim", X.max_dim}, {"cells", cells}};
}

inline GlobularSet globular_from_json(const json& j) {
  std::vector<GCell> cells;
  for (const auto& jc : j.at("cells")) {
    GCell c;
    c.id = jc.at("id").get<std::string>();
    c.dim = jc.at("dim").get<int>();
    if (jc.contains("src")) c.src = jc.at("src").get<std::string>();
    if (jc.contains("tgt")) c.tgt = jc.at("tgt").get<std::string>();
    cells.push_back(c);
  }
  return validate_globular_set(cells, j.at("max_dim").get<int>());
}

inline json collection_to_json(const PointedCollection& C) {
  json cells = json::array();
  json units = json::array();
  for (const auto& c : C.cells) {
    json jc{{"name", c.name},
            {"dim", c.dim},
            {"arity", {{"tree", tree_to_json(c.arity.tree)},
                       {"colour", c.arity.colour}}},
            {"colour", c.colour}};
    if (c.dim >= 1) {
      jc["src"] = c.src;
      jc["tgt"] = c.tgt;
    }
    cells.push_back(jc);
    if (C.is_unit(c.name))
      units.push_back(json{{"colour", c.colour}, {"dim", c.dim}, {"name", c.name}});
  }
  return json{{"colours", C.n_colours}, {"max_dim", C.max_dim},
              {"cells", cells}, {"units", units}};
}

inline PointedCollection collection_from_json(const json& j) {
  PointedCollection C;
  C.n_colours = j.at("colours").get<int>();
  C.max_dim = j.at("max_dim").get<int>();
  for (const auto& jc : j.at("cells")) {
    CollectionCell c;
    c.name = jc.at("name").get<std::string>();
    c.dim = jc.at("dim").get<int>();
    if (jc.contains("src")) c.src = jc.at("src").get<std::string>();
    if (jc.contains("tgt")) c.tgt = jc.at("tgt").get<std::string>();
    c.arity.tree = tree_from_json(jc.at("arity").at("tree"));
    c.arity.colour = jc.at("arity").at("colour").get<int>();
    c.colour = jc.at("colour").get<int>();
    C.cells.push_back(c);
  }
  for (const auto& ju : j.at("units"))
    C.set_unit(ju.at("colour").get<int>(), ju.at("dim").get<int>(),
               ju.at("name").get<std::string>());
  C.finalize();
  return C;
}

// ---------------------------------------------------------------------------
// Terms. Grammar: `u@g(m)`, generator names (`mu(2,1)`, `F1#2`, `tau`,
// `alpha(1)`, `alpha0(2)`, `xi3`), `gamma(T; P)`, `[T | T]`, `r[p,n](T)`;
// pastings are `T`, `P *[n,p] P`, `d[k,n](P)`.
// ---------------------------------------------------------------------------

inline TermId parse_term_expr(OperadPresentation& P, Cursor& c);
inline TermPasting parse_pasting(OperadPresentation& P, Cursor& c);

inline TermPasting parse_pasting_factor(OperadPresentation& P, Cursor& c) {
  if (c.try_eat("d[")) {
    int k = c.integer();
    c.expect(",");
    int n = c.integer();
    c.expect("]");
    c.expect("(");
    TermPasting inner = parse_pasting(P, c);
    c.expect(")");
    if (inner.shape.ambient != k)
      throw ParseError("pasting degeneracy source dim mismatch");
    return degenerate_diagram(inner, n);
  }
  TermId t = parse_term_expr(P, c);
  return P.arena.eta_pasting(t);
}

inline TermPasting parse_pasting(OperadPresentation& P, Cursor& c) {
  std::vector<TermPasting> factors{parse_pasting_factor(P, c)};
  std::vector<int> junctions;
  int ambient = factors[0].shape.ambient;
  while (c.try_eat("*[")) {
    int n = c.integer();
    c.expect(",");
    int p = c.integer();
    c.expect("]");
    factors.push_back(parse_pasting_factor(P, c));
    junctions.push_back(p);
    ambient = std::max({ambient, n, factors.back().shape.ambient});
  }
  if (factors.size() == 1) return factors[0];
  for (auto& f : factors) f = degenerate_diagram(f, ambient);
  TermOps ops = P.arena.ops();
  return assemble_diagrams(ops, factors, junctions, 0, factors.size());
}

inline TermId parse_term_expr(OperadPresentation& P, Cursor& c) {
  if (c.try_eat("gamma(")) {
    TermId outer = parse_term_expr(P, c);
    c.expect(";");
    TermPasting inner = parse_pasting(P, c);
    c.expect(")");
    int want = P.arena.arity(outer).tree.ambient;
    if (inner.shape.ambient < want) inner = degenerate_diagram(inner, want);
    return P.arena.gamma(outer, inner);
  }
  if (c.try_eat("[")) {
    TermId x = parse_term_expr(P, c);
    c.expect("|");
    TermId y = parse_term_expr(P, c);
    c.expect("]");
    return P.arena.contraction(x, y);
  }
  if (c.try_eat("r[")) {
    int p = c.integer();
    c.expect(",");
    int n = c.integer();
    c.expect("]");
    c.expect("(");
    TermId base = parse_term_expr(P, c);
    c.expect(")");
    return P.arena.reflex(p, n, base);
  }
  // unit or generator name
  std::string id = c.ident();
  if (id.rfind("u@", 0) == 0) {
    int colour = std::stoi(id.substr(2));
    c.expect("(");
    int dim = c.integer();
    c.expect(")");
    if (colour < 1 || colour > P.base.n_colours)
      throw ParseError(cat("colour ", colour, " out of range"));
    std::string name = unit_name(colour, dim);
    if (c.peek() == '#') {
      while (c.try_eat("#")) name += cat("#", c.integer());
      return P.arena.term_of_cell(name);
    }
    return P.arena.unit(colour, dim);
  }
  std::string name = id;
  if (c.try_eat("(")) {
    name += "(";
    name += std::to_string(c.integer());
    while (c.try_eat(",")) name += cat(",", c.integer());
    c.expect(")");
    name += ")";
  }
  while (c.try_eat("#")) name += cat("#", c.integer());
  if (!P.base.find(name)) throw MissingReference(cat("generator ", name));
  return P.arena.term_of_cell(name);
}

inline TermId parse_term(OperadPresentation& P, const std::string& s) {
  Cursor c(s);
  TermId t = parse_term_expr(P, c);
  if (!c.eof()) throw ParseError(cat("trailing input in term: ", s));
  return t;
}

inline json term_to_json(const TermArena& A, TermId t) {
  const TermData& d = A.data(t);
  if (d.kind == TermKind::Unit)
    return json{{"unit", {{"colour", d.colour}, {"dim", d.dim}}}};
  json head;
  switch (d.hk) {
    case HeadKind::Gen: head = json{{"gen", d.gen}}; break;
    case HeadKind::Contr:
      head = json{{"contr", {{"x", term_to_json(A, d.cx)},
                             {"y", term_to_json(A, d.cy)}}}};
      break;
    case HeadKind::Refl:
      head = json{{"reflex", {{"p", d.refl_p}, {"n", d.dim},
                              {"colour", d.colour}}}};
      break;
  }
  if (A.is_bare(t)) return json{{"head", head}};
  json tops = json::object();
  for (const auto& a : top_cells(d.inner.shape))
    tops[addr_id(a)] = term_to_json(A, d.inner.labels.at(a));
  return json{{"head", head},
              {"inner", {{"shape", tree_to_json(d.inner.shape)}, {"tops", tops}}}};
}

inline TermId term_from_json(OperadPresentation& P, const json& j) {
  TermArena& A = P.arena;
  if (j.contains("unit"))
    return A.unit(j.at("unit").at("colour").get<int>(),
                  j.at("unit").at("dim").get<int>());
  const json& head = j.at("head");
  TermId h;
  if (head.contains("gen")) {
    h = A.term_of_cell(head.at("gen").get<std::string>());
  } else if (head.contains("contr")) {
    h = A.contraction(term_from_json(P, head.at("contr").at("x")),
                      term_from_json(P, head.at("contr").at("y")));
  } else {
    const json& r = head.at("reflex");
    h = A.reflex_unit(r.at("p").get<int>(), r.at("n").get<int>(),
                      r.at("colour").get<int>());
  }
  if (!j.contains("inner")) return h;
  Tree shape = tree_from_json(j.at("inner").at("shape"));
  std::map<CellAddr, TermId> tops;
  for (const auto& [k, v] : j.at("inner").at("tops").items()) {
    auto a = parse_addr(k);
    if (!a) throw ParseError(cat("bad scheme address ", k));
    tops[*a] = term_from_json(P, v);
  }
  TermOps ops = A.ops();
  TermPasting inner = diagram_from_tops(ops, shape, tops);
  return A.gamma(h, inner);
}

// ---------------------------------------------------------------------------
// Morphisms and coend cells.
// ---------------------------------------------------------------------------

inline json morphism_to_json(const OperadMorphism& m) {
  json imgs = json::object();
  for (const auto& [name, img] : m.gen_images)
    imgs[name] = term_to_json(m.target->arena, img);
  return json{{"colours", m.colour_map},
              {"gen_max_dim", m.gen_max_dim},
              {"images", imgs}};
}

inline json coend_cell_to_json(const CoendCell& c) {
  json lowers = json::array();
  for (std::size_t i = 0; i < c.lower.size(); ++i)
    lowers.push_back(json{{"level", c.level - 1 - static_cast<int>(i)},
                          {"minus", morphism_to_json(c.lower[i].minus)},
                          {"plus", morphism_to_json(c.lower[i].plus)}});
  return json{{"n", c.level},
              {"tree", tree_to_json(c.tree)},
              {"top", morphism_to_json(c.top)},
              {"maps", lowers}};
}

inline json pasting_to_json(const PastingDiagram& Pd) {
  json labels = json::object();
  for (const auto& [a, l] : Pd.labels) labels[addr_id(a)] = l;
  return json{{"shape", tree_to_json(Pd.shape)}, {"labels", labels}};
}

inline PastingDiagram pasting_from_json(const GlobularSet& X, const json& j) {
  PastingDiagram Pd;
  Pd.shape = tree_from_json(j.at("shape"));
  for (const auto& [k, v] : j.at("labels").items()) {
    auto a = parse_addr(k);
    if (!a) throw ParseError(cat("bad scheme address ", k));
    Pd.labels[*a] = v.get<std::string>();
  }
  validate_pasting(X, Pd);
  return Pd;
}

// ---------------------------------------------------------------------------
// DOT export.
// ---------------------------------------------------------------------------

inline std::string scheme_to_dot(const Tree& t) {
  GlobularSet X = pasting_scheme(t);
  std::string s = "digraph scheme {\n  rankdir=BT;\n";
  for (const auto& c : X.cells)
    s += cat("  \"", c.id, "\" [label=\"", c.id, " (", c.dim, ")\"];\n");
  for (const auto& c : X.cells)
    if (c.dim >= 1) {
      s += cat("  \"", c.src, "\" -> \"", c.id, "\" [label=s];\n");
      s += cat("  \"", c.tgt, "\" -> \"", c.id, "\" [label=t];\n");
    }
  return s + "}\n";
}

inline std::string collection_to_dot(const PointedCollection& C) {
  std::string s = "digraph collection {\n  rankdir=BT;\n";
  for (const auto& c : C.cells)
    s += cat("  \"", c.name, "\" [label=\"", c.name, "\\nd=",
             tree_str(c.arity.tree), "@", c.arity.colour, " c=", c.colour,
             "\"];\n");
  for (const auto& c : C.cells)
    if (c.dim >= 1) {
      s += cat("  \"", c.src, "\" -> \"", c.name, "\" [label=s];\n");
      s += cat("  \"", c.tgt, "\" -> \"", c.name, "\" [label=t];\n");
    }
  return s + "}\n";
}

}  // namespace globop
