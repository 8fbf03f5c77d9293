// Labeled pasting diagrams over a tree shape, generic in the label type:
// validation, eta, boundaries, the star gluing, degeneracies, and grafting
// (the multiplication of the free strict-omega-category monad).
//
// An Ops object supplies dim/src/tgt/equality for labels, so the same
// machinery serves cell-labeled diagrams (the monad T on globular sets),
// term-labeled diagrams (operadic composition), and diagram-labeled
// diagrams (monad substitution).

#pragma once

#include <map>
#include <string>
#include <vector>

#include "globop/core.hpp"
#include "globop/globular.hpp"
#include "globop/tree.hpp"

namespace globop {

template <class L>
struct Diagram {
  Tree shape;
  std::map<CellAddr, L> labels;

  bool operator==(const Diagram& o) const {
    return shape == o.shape && labels == o.labels;
  }
  bool operator<(const Diagram& o) const {
    if (!(shape == o.shape)) return shape < o.shape;
    return labels < o.labels;
  }
  int dim() const { return shape.ambient; }
};

// Top cells: one per leaf node (gap 0), in planar order; for a childless
// root, the root cell itself.
inline std::vector<CellAddr> top_cells(const Tree& t) {
  std::vector<CellAddr> out;
  if (t.root.kids.empty()) {
    out.push_back({{}, 0});
    return out;
  }
  for (const auto& p : tree_leaves(t)) out.push_back({p, 0});
  return out;
}

template <class L, class Ops>
void validate_diagram(const Ops& ops, const Diagram<L>& D) {
  for (const auto& a : scheme_cells(D.shape)) {
    auto it = D.labels.find(a);
    if (it == D.labels.end())
      throw MissingReference(cat("unlabeled scheme cell ", addr_id(a)));
    if (ops.dim(it->second) != a.dim())
      throw DimensionMismatch(cat("label at ", addr_id(a), " has dim ",
                                  ops.dim(it->second), ", cell has ", a.dim()));
    if (a.dim() >= 1) {
      if (!ops.eq(D.labels.at(addr_src(a)), ops.src(it->second)) ||
          !ops.eq(D.labels.at(addr_tgt(a)), ops.tgt(it->second)))
        throw BoundaryMismatch(cat("labels do not commute with boundaries at ",
                                   addr_id(a)));
    }
  }
  if (static_cast<int>(D.labels.size()) !=
      static_cast<int>(scheme_cells(D.shape).size()))
    throw MissingReference("stray labels outside the scheme");
}

// Fills shell labels from top labels by iterated boundaries; checks
// consistency where two tops meet.
template <class L, class Ops>
Diagram<L> diagram_from_tops(const Ops& ops, const Tree& shape,
                             const std::map<CellAddr, L>& tops) {
  Diagram<L> D;
  D.shape = shape;
  for (const auto& [a, l] : tops) {
    if (ops.dim(l) != a.dim())
      throw DimensionMismatch(cat("top label dim at ", addr_id(a)));
    D.labels.insert({a, l});
  }
  auto cells = scheme_cells(shape);
  for (auto it = cells.rbegin(); it != cells.rend(); ++it) {
    const CellAddr& a = *it;
    auto found = D.labels.find(a);
    if (found == D.labels.end()) continue;
    if (a.dim() == 0) continue;
    L s = ops.src(found->second), t = ops.tgt(found->second);
    for (auto [ba, bl] : {std::pair<CellAddr, L>{addr_src(a), s},
                          std::pair<CellAddr, L>{addr_tgt(a), t}}) {
      auto prev = D.labels.find(ba);
      if (prev == D.labels.end())
        D.labels.insert({ba, bl});
      else if (!ops.eq(prev->second, bl))
        throw BoundaryMismatch(cat("incompatible tops around ", addr_id(ba)));
    }
  }
  validate_diagram(ops, D);
  return D;
}

// eta: the diagram over the linear tree 1(dim x) with the unique labeling by
// x and its iterated boundaries.
template <class L, class Ops>
Diagram<L> eta_diagram(const Ops& ops, const L& x) {
  int m = ops.dim(x);
  Tree shape = linear_tree(m);
  NodePath p;
  std::map<CellAddr, L> tops;
  for (int i = 0; i < m; ++i) p.push_back(1);
  tops.insert({CellAddr{p, 0}, x});
  return diagram_from_tops(ops, shape, tops);
}

template <class L>
Diagram<L> degenerate_diagram(const Diagram<L>& D, int to_n) {
  Diagram<L> out = D;
  out.shape = embed_tree(D.shape, to_n);
  return out;
}

// k-boundary: truncate the shape and keep the side shell.
template <class L>
Diagram<L> boundary_diagram(const Diagram<L>& D, int k, Side side) {
  const int n = D.shape.ambient;
  if (k < 0 || k > n) throw BadLevel(cat("boundary level ", k));
  Diagram<L> out;
  out.shape = truncate_tree(D.shape, n - k);
  for (const auto& a : scheme_cells(out.shape)) {
    if (a.dim() < k) {
      out.labels.insert({a, D.labels.at(a)});
    } else {
      const TreeNode* nd = node_at(D.shape, a.path);
      CellAddr da{a.path,
                  side == Side::source ? 0 : static_cast<int>(nd->kids.size())};
      out.labels.insert({a, D.labels.at(da)});
    }
  }
  return out;
}

// Address translation of the right operand under star^n_p.
inline CellAddr star_translate_right(const Tree& left, int p, const CellAddr& a) {
  CellAddr out = a;
  if (a.dim() > p) {
    NodePath prefix(a.path.begin(), a.path.begin() + p);
    out.path[p] += static_cast<int>(node_at(left, prefix)->kids.size());
  } else if (a.dim() == p) {
    out.gap += static_cast<int>(node_at(left, a.path)->kids.size());
  }
  return out;
}

template <class L, class Ops>
Diagram<L> star_diagrams(const Ops& ops, const Diagram<L>& A,
                         const Diagram<L>& B, int p) {
  const int n = A.shape.ambient;
  Diagram<L> tb = boundary_diagram(A, p, Side::target);
  Diagram<L> sb = boundary_diagram(B, p, Side::source);
  if (!(tb.shape == sb.shape))
    throw TruncationMismatch("star of diagrams over incompatible shells");
  for (const auto& [a, l] : tb.labels)
    if (!ops.eq(l, sb.labels.at(a)))
      throw BoundaryMismatch(cat("shell labels disagree at ", addr_id(a)));
  Diagram<L> out;
  out.shape = star(A.shape, B.shape, p);
  out.labels = A.labels;
  for (const auto& [a, l] : B.labels) {
    CellAddr ta = star_translate_right(A.shape, p, a);
    auto prev = out.labels.find(ta);
    if (prev == out.labels.end())
      out.labels.insert({ta, l});
    else if (!ops.eq(prev->second, l))
      throw BoundaryMismatch(cat("glued labels disagree at ", addr_id(ta)));
  }
  validate_diagram(ops, out);
  return out;
}

using AddrMap = std::map<CellAddr, CellAddr>;

// Evaluates a star word of trees with higher junctions binding tighter,
// translating the per-factor address maps as the word is glued.
inline Tree assemble_trees(const std::vector<Tree>& fs,
                           const std::vector<int>& js, std::size_t lo,
                           std::size_t hi, std::vector<AddrMap>& maps) {
  if (hi - lo == 1) return fs[lo];
  int jmin = js[lo];
  for (std::size_t k = lo; k + 1 < hi; ++k) jmin = std::min(jmin, js[k]);
  Tree acc;
  bool first = true;
  std::size_t seg = lo;
  for (std::size_t k = lo; k < hi; ++k) {
    if (k + 1 == hi || js[k] == jmin) {
      Tree part = assemble_trees(fs, js, seg, k + 1, maps);
      if (first) {
        acc = part;
        first = false;
      } else {
        for (std::size_t i = seg; i < k + 1; ++i)
          for (auto& [from, to] : maps[i])
            to = star_translate_right(acc, jmin, to);
        acc = star(acc, part, jmin);
      }
      seg = k + 1;
    }
  }
  return acc;
}

template <class L, class Ops>
Diagram<L> assemble_diagrams(const Ops& ops, const std::vector<Diagram<L>>& fs,
                             const std::vector<int>& js, std::size_t lo,
                             std::size_t hi) {
  if (hi - lo == 1) return fs[lo];
  int jmin = js[lo];
  for (std::size_t k = lo; k + 1 < hi; ++k) jmin = std::min(jmin, js[k]);
  Diagram<L> acc;
  bool first = true;
  std::size_t seg = lo;
  for (std::size_t k = lo; k < hi; ++k) {
    if (k + 1 == hi || js[k] == jmin) {
      Diagram<L> part = assemble_diagrams(ops, fs, js, seg, k + 1);
      acc = first ? part : star_diagrams(ops, acc, part, jmin);
      first = false;
      seg = k + 1;
    }
  }
  return acc;
}

// Junction levels between consecutive leaves (= top cells) of a tree.
inline std::vector<int> leaf_junctions(const Tree& t) {
  std::vector<int> junctions;
  if (!t.root.kids.empty()) {
    auto leaves = tree_leaves(t);
    for (std::size_t j = 0; j + 1 < leaves.size(); ++j)
      junctions.push_back(common_prefix_len(leaves[j], leaves[j + 1]));
  }
  return junctions;
}

// Grafting of trees: substitute an inner tree (given per top cell of sigma,
// with ambient = the cell's dimension) into sigma, tracking where each inner
// scheme lands in the composite scheme. Junction compatibility is enforced
// by star; the caller guarantees inner trees agree on shared shells.
struct TreeGraft {
  Tree composite;
  std::map<CellAddr, AddrMap> top_embeddings;  // per top cell of sigma
};

inline TreeGraft graft_trees(const Tree& sigma,
                             const std::map<CellAddr, Tree>& inner_tops) {
  TreeGraft out;
  auto tops = top_cells(sigma);
  std::vector<Tree> embedded;
  for (const auto& a : tops) {
    auto it = inner_tops.find(a);
    if (it == inner_tops.end())
      throw MissingReference(cat("no inner tree at ", addr_id(a)));
    if (it->second.ambient != a.dim())
      throw DimensionMismatch(cat("inner tree ambient at ", addr_id(a)));
    embedded.push_back(embed_tree(it->second, sigma.ambient));
  }
  std::vector<int> junctions = leaf_junctions(sigma);
  std::vector<AddrMap> maps(tops.size());
  for (std::size_t j = 0; j < tops.size(); ++j)
    for (const auto& a : scheme_cells(inner_tops.at(tops[j])))
      maps[j][a] = a;  // identity into the embedded copy
  out.composite = assemble_trees(embedded, junctions, 0, embedded.size(), maps);
  for (std::size_t j = 0; j < tops.size(); ++j)
    out.top_embeddings[tops[j]] = std::move(maps[j]);
  return out;
}

// Monad multiplication: a diagram whose labels are diagrams grafts to a
// single diagram. The outer diagram must itself be valid (shells carry the
// boundaries of their neighbours).
template <class L, class Ops>
struct DiagramOps {
  Ops inner;
  int dim(const Diagram<L>& d) const { return d.shape.ambient; }
  Diagram<L> src(const Diagram<L>& d) const {
    return boundary_diagram(d, d.shape.ambient - 1, Side::source);
  }
  Diagram<L> tgt(const Diagram<L>& d) const {
    return boundary_diagram(d, d.shape.ambient - 1, Side::target);
  }
  bool eq(const Diagram<L>& a, const Diagram<L>& b) const { return a == b; }
};

template <class L, class Ops>
Diagram<L> substitute(const Ops& ops, const Diagram<Diagram<L>>& Q) {
  DiagramOps<L, Ops> dops{ops};
  validate_diagram(dops, Q);
  std::vector<Diagram<L>> embedded;
  for (const auto& a : top_cells(Q.shape))
    embedded.push_back(degenerate_diagram(Q.labels.at(a), Q.shape.ambient));
  return assemble_diagrams(ops, embedded, leaf_junctions(Q.shape), 0,
                           embedded.size());
}

template <class L, class Ops, class F>
Diagram<L> map_labels(const Ops& ops, const Diagram<L>& D, F&& f) {
  Diagram<L> out;
  out.shape = D.shape;
  for (const auto& [a, l] : D.labels) out.labels.insert({a, f(l)});
  validate_diagram(ops, out);
  return out;
}

// ---------------------------------------------------------------------------
// The concrete instantiation over a globular set: cells of T(X).
// ---------------------------------------------------------------------------

struct CellOps {
  const GlobularSet* X = nullptr;
  int dim(const std::string& id) const { return X->at(id).dim; }
  std::string src(const std::string& id) const { return X->at(id).src; }
  std::string tgt(const std::string& id) const { return X->at(id).tgt; }
  bool eq(const std::string& a, const std::string& b) const { return a == b; }
};

using PastingDiagram = Diagram<std::string>;

inline PastingDiagram eta(const GlobularSet& X, const std::string& cell_id) {
  CellOps ops{&X};
  return eta_diagram(ops, cell_id);
}

inline PastingDiagram pd_boundary(const PastingDiagram& P, int k, Side side) {
  return boundary_diagram(P, k, side);
}

inline PastingDiagram substitute(const GlobularSet& X,
                                 const Diagram<PastingDiagram>& Q) {
  CellOps ops{&X};
  return substitute(ops, Q);
}

inline PastingDiagram map_labels(const GlobularSet& X, const GlobularSet& Y,
                                 const GlobularMap& f, const PastingDiagram& P) {
  check_globular_map(X, Y, f);
  CellOps ops{&Y};
  return map_labels(ops, P, [&](const std::string& id) { return f.at(id); });
}

inline void validate_pasting(const GlobularSet& X, const PastingDiagram& P) {
  CellOps ops{&X};
  validate_diagram(ops, P);
}

}  // namespace globop
