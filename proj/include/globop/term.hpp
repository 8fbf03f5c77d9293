// Normal-form composition terms of a presented colored omega-operad:
// units, gamma-composites of generators, contraction tokens, reflexive
// units. Terms are hash-consed in an arena over a base collection; gamma
// normalizes by the right-unit, left-unit and outer-flattening rewrites,
// and boundaries/arities are cached per interned node.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "globop/collections.hpp"
#include "globop/core.hpp"
#include "globop/pasting.hpp"
#include "globop/tree.hpp"

namespace globop {

using TermId = std::uint32_t;
inline constexpr TermId kNoTerm = 0xffffffffu;

using TermPasting = Diagram<TermId>;

enum class TermKind : std::uint8_t { Unit, Comp };
enum class HeadKind : std::uint8_t { Gen, Contr, Refl };

struct TermData {
  TermKind kind = TermKind::Unit;
  int dim = 0;
  // Unit payload / Refl colour
  int colour = 1;
  // Comp payload
  HeadKind hk = HeadKind::Gen;
  std::string gen;
  TermId cx = kNoTerm, cy = kNoTerm;  // Contr endpoints
  int refl_p = 0;                     // Refl source dimension
  TermPasting inner;

  // caches
  Tree arity_tree;
  int arity_colour = 1;
  int out_colour = 1;
  TermId src = kNoTerm, tgt = kNoTerm;
  int size = 1;
};

class TermArena;

struct TermOps {
  const TermArena* A = nullptr;
  int dim(TermId t) const;
  TermId src(TermId t) const;
  TermId tgt(TermId t) const;
  bool eq(TermId a, TermId b) const { return a == b; }
};

class TermArena {
public:
  explicit TermArena(const PointedCollection* base) : base_(base) {}

  const PointedCollection& base() const { return *base_; }
  const TermData& data(TermId t) const { return nodes_[t]; }
  std::size_t node_count() const { return nodes_.size(); }
  TermOps ops() const { return TermOps{this}; }

  int dim(TermId t) const { return nodes_[t].dim; }
  int out_colour(TermId t) const { return nodes_[t].out_colour; }
  Arity arity(TermId t) const {
    return {nodes_[t].arity_tree, nodes_[t].arity_colour};
  }
  int width(TermId t) const { return leaf_count(nodes_[t].arity_tree); }
  int size(TermId t) const { return nodes_[t].size; }
  TermId src(TermId t) const {
    if (nodes_[t].dim == 0) throw DimensionMismatch("source of a 0-cell term");
    return nodes_[t].src;
  }
  TermId tgt(TermId t) const {
    if (nodes_[t].dim == 0) throw DimensionMismatch("target of a 0-cell term");
    return nodes_[t].tgt;
  }
  TermId boundary(TermId t, int k, Side side) const {
    if (k > dim(t)) throw DimensionMismatch("iterated boundary above dim");
    TermId cur = t;
    while (dim(cur) > k) cur = side == Side::source ? src(cur) : tgt(cur);
    return cur;
  }
  bool parallel(TermId a, TermId b) const {
    if (dim(a) != dim(b) || dim(a) == 0)
      throw DimensionMismatch("parallelism needs equal dims >= 1");
    return src(a) == src(b) && tgt(a) == tgt(b);
  }

  bool is_unit(TermId t) const { return nodes_[t].kind == TermKind::Unit; }
  bool is_bare(TermId t) const {
    const TermData& d = nodes_[t];
    if (d.kind != TermKind::Comp) return false;
    for (const auto& [a, l] : d.inner.labels)
      if (!is_unit(l)) return false;
    return true;
  }
  bool is_generator(TermId t) const {
    return nodes_[t].kind == TermKind::Comp && nodes_[t].hk == HeadKind::Gen &&
           is_bare(t);
  }

  TermId unit(int colour, int dim) {
    if (dim < 0) throw DimensionMismatch("unit at negative dim");
    TermData d;
    d.kind = TermKind::Unit;
    d.colour = colour;
    d.dim = dim;
    return intern(std::move(d));
  }

  // The all-units pasting over a tree, the canonical inner of a bare cell.
  TermPasting unit_pasting(const Tree& t, int colour) {
    TermPasting P;
    P.shape = t;
    for (const auto& a : scheme_cells(t))
      P.labels.insert({a, unit(colour, a.dim())});
    return P;
  }

  TermId generator(const std::string& name) {
    const CollectionCell& c = base_->at(name);
    if (base_->is_unit(name)) return unit(c.colour, c.dim);
    return make_comp_raw(HeadKind::Gen, name, kNoTerm, kNoTerm, 0, 0,
                         unit_pasting(c.arity.tree, c.arity.colour));
  }

  TermId term_of_cell(const std::string& name) { return generator(name); }

  // The contraction token [x,y]: a (k+1)-cell with source x, target y and
  // degenerate arity. Requires the pair to be well-formed for a contraction:
  // parallel, same arity, same output colour, and for root pairs the
  // four-way loop equation.
  TermId contraction(TermId x, TermId y) {
    int k = dim(x);
    if (dim(y) != k) throw DimensionMismatch("contraction of unequal dims");
    if (k == 0 && x != y) throw NotEligible("distinct 0-cells");
    if (k >= 1) {
      if (!parallel(x, y)) throw NotEligible("pair not parallel");
      if (!(arity(x) == arity(y))) throw NotEligible("pair arities differ");
    }
    if (out_colour(x) != out_colour(y)) throw NotEligible("pair colours differ");
    if (is_root_term(x) && is_root_term(y) && !loop_property(x, y))
      throw NotEligible("root pair fails the loop property");
    TermData d;
    d.kind = TermKind::Comp;
    d.hk = HeadKind::Contr;
    d.cx = x;
    d.cy = y;
    Tree at = embed_tree(nodes_[x].arity_tree, k + 1);
    d.inner = unit_pasting(at, nodes_[x].arity_colour);
    return intern_comp(std::move(d));
  }

  // The reflexive unit 1^p_n on a unit colour, a generator-like atom of the
  // contractible-units structure.
  TermId reflex_unit(int p, int n, int colour) {
    if (n <= p || p < 0) throw BadLevel(cat("reflex ", p, " -> ", n));
    TermData d;
    d.kind = TermKind::Comp;
    d.hk = HeadKind::Refl;
    d.refl_p = p;
    d.colour = colour;
    d.dim = n;
    d.inner = unit_pasting(embed_tree(linear_tree(p), n), colour);
    return intern_comp(std::move(d));
  }

  // 1^p_n(x) for a general p-cell x: the unit reflex whiskered by the
  // degenerate pasting of x.
  TermId reflex(int p, int n, TermId x) {
    if (dim(x) != p) throw DimensionMismatch("reflex base dim");
    if (is_unit(x)) return reflex_unit(p, n, nodes_[x].colour);
    TermOps o = ops();
    TermPasting P = degenerate_diagram(eta_diagram(o, x), n);
    return gamma(reflex_unit(p, n, out_colour(x)), P);
  }

  bool is_root_term(TermId t) const {
    const TermData& d = nodes_[t];
    return d.dim >= 1 && d.arity_tree.root.kids.empty();
  }

  // s^n_0(x) = s^n_0(y) = t^n_0(x) = t^n_0(y)
  bool loop_property(TermId x, TermId y) const {
    TermId a = boundary(x, 0, Side::source);
    TermId b = boundary(y, 0, Side::source);
    TermId c = boundary(x, 0, Side::target);
    TermId d = boundary(y, 0, Side::target);
    return a == b && b == c && c == d;
  }

  // Two-way reading of the root-pair clause (experimental): s^k_0(x) = t^k_0(y).
  bool loop_property_two_way(TermId x, TermId y) const {
    return boundary(x, 0, Side::source) == boundary(y, 0, Side::target);
  }

  // Operadic composition: substitute the pasting of terms `inner` into
  // `outer`. Normalizes: right unit (unit outer), left unit (all-unit
  // inner), and flattening of a composite outer via arity grafting.
  TermId gamma(TermId outer, const TermPasting& inner) {
    const TermData& od = nodes_[outer];
    if (!(inner.shape == od.arity_tree))
      throw ArityMismatch(cat("inner shape ", tree_str(inner.shape),
                              " != outer arity ", tree_str(od.arity_tree)));
    TermOps o = ops();
    validate_diagram(o, inner);
    for (const auto& [a, l] : inner.labels)
      if (out_colour(l) != od.arity_colour)
        throw ArityMismatch(cat("colour tree mismatch at ", addr_id(a)));
    if (od.kind == TermKind::Unit)
      return inner.labels.at(top_cells(inner.shape)[0]);
    bool all_units = true;
    for (const auto& [a, l] : inner.labels)
      if (!is_unit(l)) all_units = false;
    if (all_units) return outer;
    // Copies: recursive interning below may reallocate the node store.
    TermData proto = od;
    if (is_bare(outer)) {
      proto.inner = inner;
      return intern_comp(std::move(proto));
    }
    // Flatten: substitute `inner` through the outer's own inner pasting.
    TermPasting Q = proto.inner;
    std::map<CellAddr, Tree> arities;
    for (const auto& a : top_cells(Q.shape))
      arities[a] = nodes_[Q.labels.at(a)].arity_tree;
    TreeGraft g = graft_trees(Q.shape, arities);
    if (!(g.composite == inner.shape))
      throw ArityMismatch("graft does not reproduce the composite arity");
    std::map<CellAddr, TermId> new_tops;
    for (const auto& a : top_cells(Q.shape)) {
      TermId q = Q.labels.at(a);
      TermPasting slice;
      slice.shape = nodes_[q].arity_tree;
      for (const auto& [from, to] : g.top_embeddings.at(a))
        slice.labels.insert({from, inner.labels.at(to)});
      new_tops[a] = gamma(q, slice);
    }
    proto.inner = diagram_from_tops(o, Q.shape, new_tops);
    return intern_comp(std::move(proto));
  }

  // gamma with a single inner cell (inner pasting = eta of that cell).
  TermId gamma1(TermId outer, TermId single) {
    TermOps o = ops();
    TermPasting P = eta_diagram(o, single);
    P = degenerate_diagram(P, nodes_[outer].arity_tree.ambient);
    return gamma(outer, P);
  }

  TermPasting eta_pasting(TermId t) {
    TermOps o = ops();
    return eta_diagram(o, t);
  }

  TermPasting star_pastings(const TermPasting& a, const TermPasting& b, int p) {
    TermOps o = ops();
    return star_diagrams(o, a, b, p);
  }

private:
  const PointedCollection* base_;
  std::vector<TermData> nodes_;
  std::map<std::vector<std::uint32_t>, TermId> by_key_;
  std::map<std::string, std::uint32_t> gen_ids_;

  std::uint32_t gen_id(const std::string& name) {
    auto it = gen_ids_.find(name);
    if (it != gen_ids_.end()) return it->second;
    std::uint32_t id = static_cast<std::uint32_t>(gen_ids_.size());
    gen_ids_[name] = id;
    return id;
  }

  // Structural key: tag, head fields, shape rows, labels in scheme order.
  std::vector<std::uint32_t> key_of(const TermData& d) {
    std::vector<std::uint32_t> k;
    if (d.kind == TermKind::Unit) {
      k = {0u, static_cast<std::uint32_t>(d.colour),
           static_cast<std::uint32_t>(d.dim)};
      return k;
    }
    switch (d.hk) {
      case HeadKind::Gen:
        k = {1u, gen_id(d.gen)};
        break;
      case HeadKind::Contr:
        k = {2u, d.cx, d.cy};
        break;
      case HeadKind::Refl:
        k = {3u, static_cast<std::uint32_t>(d.refl_p),
             static_cast<std::uint32_t>(d.dim),
             static_cast<std::uint32_t>(d.colour)};
        break;
    }
    TreeMatrix m = encode_tree(d.inner.shape);
    k.push_back(static_cast<std::uint32_t>(m.ambient));
    k.push_back(0xffffffffu);
    for (int v : m.top) k.push_back(static_cast<std::uint32_t>(v));
    k.push_back(0xffffffffu);
    for (int v : m.bot) k.push_back(static_cast<std::uint32_t>(v));
    k.push_back(0xffffffffu);
    for (const auto& [a, l] : d.inner.labels) k.push_back(l);
    return k;
  }

  TermId intern(TermData d) {
    if (d.kind == TermKind::Unit) {
      d.arity_tree = linear_tree(d.dim);
      d.arity_colour = d.colour;
      d.out_colour = d.colour;
      d.size = 1;
    }
    std::vector<std::uint32_t> key = key_of(d);
    auto it = by_key_.find(key);
    if (it != by_key_.end()) return it->second;
    TermId id = static_cast<TermId>(nodes_.size());
    nodes_.push_back(std::move(d));
    by_key_[key] = id;
    TermData& nd = nodes_[id];
    if (nd.kind == TermKind::Unit && nd.dim >= 1) {
      TermId b = unit(nd.colour, nd.dim - 1);
      nodes_[id].src = b;
      nodes_[id].tgt = b;
    }
    return id;
  }

  TermId make_comp_raw(HeadKind hk, std::string gen, TermId cx, TermId cy,
                       int refl_p, int refl_colour, TermPasting inner) {
    TermData d;
    d.kind = TermKind::Comp;
    d.hk = hk;
    d.gen = std::move(gen);
    d.cx = cx;
    d.cy = cy;
    d.refl_p = refl_p;
    d.colour = refl_colour;
    d.inner = std::move(inner);
    return intern_comp(std::move(d));
  }

  int head_dim(const TermData& d) const {
    switch (d.hk) {
      case HeadKind::Gen: return base_->at(d.gen).dim;
      case HeadKind::Contr: return nodes_[d.cx].dim + 1;
      case HeadKind::Refl: return d.dim;
    }
    return 0;
  }

  int head_out_colour(const TermData& d) const {
    switch (d.hk) {
      case HeadKind::Gen: return base_->at(d.gen).colour;
      case HeadKind::Contr: return nodes_[d.cx].out_colour;
      case HeadKind::Refl: return d.colour;
    }
    return 1;
  }

  // The boundary of the bare head, as a term.
  TermId head_boundary(const TermData& d, Side side) {
    switch (d.hk) {
      case HeadKind::Gen: {
        const CollectionCell& c = base_->at(d.gen);
        return term_of_cell(side == Side::source ? c.src : c.tgt);
      }
      case HeadKind::Contr:
        return side == Side::source ? d.cx : d.cy;
      case HeadKind::Refl:
        if (d.dim - 1 == d.refl_p) return unit(d.colour, d.refl_p);
        return reflex_unit(d.refl_p, d.dim - 1, d.colour);
    }
    throw Unsupported("head kind");
  }

  TermId intern_comp(TermData d) {
    d.dim = head_dim(d);
    std::vector<std::uint32_t> key = key_of(d);
    auto it = by_key_.find(key);
    if (it != by_key_.end()) return it->second;

    // Arity: graft the inner labels' arity trees through the inner shape.
    std::map<CellAddr, Tree> arities;
    int acolour = -1;
    for (const auto& a : top_cells(d.inner.shape)) {
      const TermData& l = nodes_[d.inner.labels.at(a)];
      arities[a] = l.arity_tree;
      if (acolour == -1) acolour = l.arity_colour;
      if (l.arity_colour != acolour)
        throw ArityMismatch("mixed arity colours in inner pasting");
    }
    TreeGraft g = graft_trees(d.inner.shape, arities);
    d.arity_tree = g.composite;
    d.arity_colour = acolour;
    d.out_colour = head_out_colour(d);
    d.size = 1;
    if (d.hk == HeadKind::Contr) d.size += nodes_[d.cx].size + nodes_[d.cy].size;
    for (const auto& a : top_cells(d.inner.shape))
      d.size += nodes_[d.inner.labels.at(a)].size;

    TermId id = static_cast<TermId>(nodes_.size());
    TermData saved = d;  // boundary computation below may reallocate nodes_
    nodes_.push_back(std::move(d));
    by_key_[key] = id;
    if (saved.dim >= 1) {
      TermId s = gamma_boundary(saved, Side::source);
      TermId t = gamma_boundary(saved, Side::target);
      nodes_[id].src = s;
      nodes_[id].tgt = t;
    }
    return id;
  }

  TermId gamma_boundary(const TermData& d, Side side) {
    TermId hb = head_boundary(d, side);
    TermPasting shell = boundary_diagram(d.inner, d.dim - 1, side);
    return gamma(hb, shell);
  }
};

inline int TermOps::dim(TermId t) const { return A->dim(t); }
inline TermId TermOps::src(TermId t) const { return A->src(t); }
inline TermId TermOps::tgt(TermId t) const { return A->tgt(t); }

// ---------------------------------------------------------------------------
// Canonical printing. Pastings print as their top labels in planar order,
// wrapped in d[k,n](..) at degenerate leaves, joined by *[n,p].
// ---------------------------------------------------------------------------

inline std::string term_str(const TermArena& A, TermId t);

inline std::string pasting_str(const TermArena& A, const TermPasting& P) {
  const int n = P.shape.ambient;
  auto tops = top_cells(P.shape);
  std::vector<int> junctions;
  if (!P.shape.root.kids.empty()) {
    auto leaves = tree_leaves(P.shape);
    for (std::size_t j = 0; j + 1 < leaves.size(); ++j)
      junctions.push_back(common_prefix_len(leaves[j], leaves[j + 1]));
  }
  std::string s;
  for (std::size_t j = 0; j < tops.size(); ++j) {
    if (j) s += cat(" *[", n, ",", junctions[j - 1], "] ");
    int k = tops[j].dim();
    std::string inner = term_str(A, P.labels.at(tops[j]));
    s += k < n ? cat("d[", k, ",", n, "](", inner, ")") : inner;
  }
  return s;
}

inline std::string term_str(const TermArena& A, TermId t) {
  const TermData& d = A.data(t);
  if (d.kind == TermKind::Unit) return cat("u@", d.colour, "(", d.dim, ")");
  std::string head;
  switch (d.hk) {
    case HeadKind::Gen: head = d.gen; break;
    case HeadKind::Contr:
      head = cat("[", term_str(A, d.cx), " | ", term_str(A, d.cy), "]");
      break;
    case HeadKind::Refl:
      head = cat("r[", d.refl_p, ",", d.dim, "](u@", d.colour, "(", d.refl_p, "))");
      break;
  }
  if (A.is_bare(t)) return head;
  return cat("gamma(", head, "; ", pasting_str(A, d.inner), ")");
}

}  // namespace globop
