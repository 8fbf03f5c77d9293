// Colored collections (T-graphs over constant colour sets), pointings, the
// coglobular complex C^0..C^n of higher-transformation generators with its
// coface tables, the unit collection, tensor, and pushouts.

#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "globop/core.hpp"
#include "globop/pasting.hpp"
#include "globop/tree.hpp"

namespace globop {

struct Arity {
  Tree tree;
  int colour = 1;

  bool operator==(const Arity& o) const {
    return tree == o.tree && colour == o.colour;
  }
  bool operator!=(const Arity& o) const { return !(*this == o); }
};

struct CollectionCell {
  std::string name;
  int dim = 0;
  std::string src;  // empty iff dim == 0
  std::string tgt;
  Arity arity;      // a cell of T(G): tree at ambient = dim, single colour
  int colour = 1;   // output colour
};

class PointedCollection {
public:
  int n_colours = 1;
  int max_dim = 0;
  std::vector<CollectionCell> cells;

  const CollectionCell* find(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? nullptr : &cells[it->second];
  }
  const CollectionCell& at(const std::string& name) const {
    const CollectionCell* c = find(name);
    if (!c) throw MissingReference(name);
    return *c;
  }
  const std::string& unit(int colour, int dim) const {
    auto it = units_.find({colour, dim});
    if (it == units_.end())
      throw MissingReference(cat("unit of colour ", colour, " at dim ", dim));
    return it->second;
  }
  bool is_unit(const std::string& name) const {
    const CollectionCell* c = find(name);
    if (!c) return false;
    auto it = units_.find({c->colour, c->dim});
    return it != units_.end() && it->second == name;
  }
  void set_unit(int colour, int dim, const std::string& name) {
    units_[{colour, dim}] = name;
  }
  void finalize() {
    index_.clear();
    for (std::size_t i = 0; i < cells.size(); ++i) index_[cells[i].name] = i;
    validate();
  }

private:
  std::map<std::string, std::size_t> index_;
  std::map<std::pair<int, int>, std::string> units_;

  void validate() const {
    for (const auto& c : cells) {
      if (c.dim < 0 || c.dim > max_dim)
        throw DimensionMismatch(cat(c.name, " outside dim bounds"));
      if (c.arity.tree.ambient != c.dim)
        throw ArityMismatch(cat(c.name, ": arity ambient != dim"));
      if (c.colour < 1 || c.colour > n_colours ||
          c.arity.colour < 1 || c.arity.colour > n_colours)
        throw MissingReference(cat(c.name, ": colour out of range"));
      if (c.dim >= 1) {
        const CollectionCell& s = at(c.src);
        const CollectionCell& t = at(c.tgt);
        if (s.dim != c.dim - 1 || t.dim != c.dim - 1)
          throw DimensionMismatch(cat(c.name, ": boundary dims"));
        // d is globular: the arity of a boundary is the truncated tree.
        Tree want = truncate_tree(c.arity.tree, 1);
        if (!(s.arity.tree == want) || s.arity.colour != c.arity.colour ||
            !(t.arity.tree == want) || t.arity.colour != c.arity.colour)
          throw ArityMismatch(cat(c.name, ": d not globular"));
        if (c.dim >= 2 && (s.src != t.src || s.tgt != t.tgt))
          throw GlobularIdentityViolation(c.name);
      }
    }
    for (const auto& [key, name] : units_) {
      const CollectionCell& u = at(name);
      if (u.dim != key.second || u.colour != key.first ||
          u.arity.colour != key.first ||
          !(u.arity.tree == linear_tree(u.dim)))
        throw ArityMismatch(cat("bad unit ", name));
      if (u.dim >= 1 && (!is_unit(u.src) || !is_unit(u.tgt)))
        throw GlobularIdentityViolation(cat("unit chain broken at ", name));
    }
  }
};

struct CollectionMorphism {
  std::vector<int> colour_map;              // 1-based: image of colour c is colour_map[c-1]
  std::map<std::string, std::string> cell_map;

  int colour(int c) const {
    if (c < 1 || c > static_cast<int>(colour_map.size()))
      throw MissingReference(cat("colour ", c));
    return colour_map[c - 1];
  }
  const std::string& at(const std::string& name) const {
    auto it = cell_map.find(name);
    if (it == cell_map.end()) throw MissingImage(name);
    return it->second;
  }
};

inline void check_collection_morphism(const PointedCollection& A,
                                      const PointedCollection& B,
                                      const CollectionMorphism& f) {
  for (const auto& c : A.cells) {
    const CollectionCell& img = B.at(f.at(c.name));
    if (img.dim != c.dim) throw DimensionMismatch(c.name);
    if (!(img.arity.tree == c.arity.tree) ||
        img.arity.colour != f.colour(c.arity.colour) ||
        img.colour != f.colour(c.colour))
      throw ArityMismatch(cat("morphism bends arity at ", c.name));
    if (c.dim >= 1 && (img.src != f.at(c.src) || img.tgt != f.at(c.tgt)))
      throw BoundaryMismatch(cat("morphism not globular at ", c.name));
    if (A.is_unit(c.name) && !B.is_unit(img.name))
      throw BoundaryMismatch(cat("pointing not preserved at ", c.name));
  }
}

inline CollectionMorphism identity_morphism(const PointedCollection& A) {
  CollectionMorphism m;
  for (int c = 1; c <= A.n_colours; ++c) m.colour_map.push_back(c);
  for (const auto& c : A.cells) m.cell_map[c.name] = c.name;
  return m;
}

inline CollectionMorphism compose_morphisms(const CollectionMorphism& g,
                                            const CollectionMorphism& f) {
  // g after f
  CollectionMorphism m;
  for (int c : f.colour_map) m.colour_map.push_back(g.colour(c));
  for (const auto& [a, b] : f.cell_map) m.cell_map[a] = g.at(b);
  return m;
}

// ---------------------------------------------------------------------------
// Generator names
// ---------------------------------------------------------------------------

inline std::string unit_name(int colour, int dim) {
  return cat("u@", colour, "(", dim, ")");
}
inline std::string mu_name(int m, int p) { return cat("mu(", m, ",", p, ")"); }
inline std::string nu_name(int m, int p) { return cat("nu(", m, ",", p, ")"); }
inline std::string F_name(int m) { return cat("F", m); }
inline std::string H_name(int m) { return cat("H", m); }
inline std::string alpha0_name(int m) { return cat("alpha0(", m, ")"); }
inline std::string beta0_name(int m) { return cat("beta0(", m, ")"); }
inline std::string alpha_name(int p) { return cat("alpha(", p, ")"); }
inline std::string beta_name(int p) { return cat("beta(", p, ")"); }
inline std::string xi_name(int n) { return cat("xi", n); }

inline Tree root_arity_tree(int dim) {
  // 1^0_dim(1(0)): the fully degenerate shape (for dim 0 this is 1(0) itself)
  return Tree{dim, {}};
}

// ---------------------------------------------------------------------------
// The coglobular complex C^0..C^n, truncated at max_dim.
// ---------------------------------------------------------------------------

inline PointedCollection build_complex(int n, int max_dim) {
  if (n < 0 || max_dim < 0) throw BadLevel("build_complex bounds");
  PointedCollection C;
  C.n_colours = n == 0 ? 1 : 2;
  C.max_dim = max_dim;

  auto add = [&C](const std::string& name, int dim, const std::string& src,
                  const std::string& tgt, Tree atree, int acolour, int colour) {
    C.cells.push_back({name, dim, src, tgt, {std::move(atree), acolour}, colour});
  };
  auto add_units = [&](int g) {
    for (int m = 0; m <= max_dim; ++m) {
      add(unit_name(g, m), m, m ? unit_name(g, m - 1) : "",
          m ? unit_name(g, m - 1) : "", linear_tree(m), g, g);
      C.set_unit(g, m, unit_name(g, m));
    }
  };
  auto add_mus = [&](int g, auto name_of) {
    for (int m = 2; m <= max_dim; ++m)
      for (int p = 0; p < m; ++p) {
        std::string bd = p == m - 1 ? unit_name(g, m - 1) : name_of(m - 1, p);
        add(name_of(m, p), m, bd, bd,
            star(linear_tree(m), linear_tree(m), p), g, g);
      }
    if (max_dim >= 1)
      add(name_of(1, 0), 1, unit_name(g, 0), unit_name(g, 0),
          star(linear_tree(1), linear_tree(1), 0), g, g);
  };
  auto add_functor_family = [&](auto name_of, int in_colour, int out_colour) {
    for (int m = 0; m <= max_dim; ++m)
      add(name_of(m), m, m ? name_of(m - 1) : "", m ? name_of(m - 1) : "",
          linear_tree(m), in_colour, out_colour);
  };

  add_units(1);
  add_mus(1, mu_name);
  if (n >= 1) {
    add_units(2);
    add_mus(2, nu_name);
  }
  if (n == 1) {
    add_functor_family(F_name, 1, 2);
  } else if (n == 2) {
    add_functor_family(F_name, 1, 2);
    add_functor_family(H_name, 1, 2);
    if (max_dim >= 1)
      add("tau", 1, F_name(0), H_name(0), root_arity_tree(1), 1, 2);
  } else if (n >= 3) {
    add_functor_family(alpha0_name, 1, 2);
    add_functor_family(beta0_name, 1, 2);
    for (int p = 1; p <= std::min(n - 2, max_dim); ++p) {
      std::string s = p == 1 ? alpha0_name(0) : alpha_name(p - 1);
      std::string t = p == 1 ? beta0_name(0) : beta_name(p - 1);
      add(alpha_name(p), p, s, t, root_arity_tree(p), 1, 2);
      add(beta_name(p), p, s, t, root_arity_tree(p), 1, 2);
    }
    if (n - 1 <= max_dim) {
      std::string s = n == 3 ? alpha_name(1) : alpha_name(n - 2);
      std::string t = n == 3 ? beta_name(1) : beta_name(n - 2);
      add(xi_name(n), n - 1, s, t, root_arity_tree(n - 1), 1, 2);
    }
  }
  C.finalize();
  return C;
}

// The distinguished cell that the cofaces move: F0 for C^1, tau for C^2,
// xi_n for C^n (n >= 3). C^0 has none.
inline std::string principal_cell(int n) {
  if (n == 1) return F_name(0);
  if (n == 2) return "tau";
  if (n >= 3) return xi_name(n);
  throw MissingReference("C^0 has no principal cell");
}

// Cofaces delta/kappa : C^n -> C^{n+1}, per the paper's explicit tables.
inline CollectionMorphism coface(int n, Side side, int max_dim) {
  PointedCollection Cn = build_complex(n, max_dim);
  CollectionMorphism m;
  bool kappa = side == Side::target;
  if (n == 0) {
    m.colour_map = {kappa ? 2 : 1};
    for (const auto& c : Cn.cells) {
      std::string img = c.name;
      if (kappa) {
        if (c.name.rfind("u@1", 0) == 0) img = unit_name(2, c.dim);
        if (c.name.rfind("mu(", 0) == 0)
          img = "nu" + c.name.substr(2);
      }
      m.cell_map[c.name] = img;
    }
    return m;
  }
  m.colour_map = {1, 2};
  for (const auto& c : Cn.cells) m.cell_map[c.name] = c.name;
  if (n == 1) {
    if (kappa)
      for (int i = 0; i <= max_dim; ++i) m.cell_map[F_name(i)] = H_name(i);
  } else if (n == 2) {
    for (int i = 0; i <= max_dim; ++i) {
      m.cell_map[F_name(i)] = alpha0_name(i);
      m.cell_map[H_name(i)] = beta0_name(i);
    }
    if (max_dim >= 1)
      m.cell_map["tau"] = kappa ? beta_name(1) : alpha_name(1);
  } else {
    for (int i = 0; i <= max_dim; ++i) {
      m.cell_map[alpha0_name(i)] = alpha0_name(i);
      m.cell_map[beta0_name(i)] = beta0_name(i);
    }
    if (n - 1 <= max_dim)
      m.cell_map[xi_name(n)] = kappa ? beta_name(n - 1) : alpha_name(n - 1);
  }
  return m;
}

// delta^p_n (or kappa^p_n): the composite of cofaces C^p -> C^n.
inline CollectionMorphism coface_composite(int p, int n, Side side, int max_dim) {
  if (p > n) throw BadLevel("coface composite downward");
  PointedCollection Cp = build_complex(p, max_dim);
  CollectionMorphism acc = identity_morphism(Cp);
  for (int k = p; k < n; ++k) acc = compose_morphisms(coface(k, side, max_dim), acc);
  return acc;
}

inline PointedCollection unit_collection(int n_colours, int max_dim) {
  PointedCollection C;
  C.n_colours = n_colours;
  C.max_dim = max_dim;
  for (int g = 1; g <= n_colours; ++g)
    for (int m = 0; m <= max_dim; ++m) {
      C.cells.push_back({unit_name(g, m), m, m ? unit_name(g, m - 1) : "",
                         m ? unit_name(g, m - 1) : "",
                         {linear_tree(m), g}, g});
      C.set_unit(g, m, unit_name(g, m));
    }
  C.finalize();
  return C;
}

// ---------------------------------------------------------------------------
// Tensor of collections over the same colour set: cells at dim m are pairs
// (P, b) with P a pasting of C-cells whose colour tree equals the arity of
// b in C'. Finite because the tree of P is pinned to arity(b).
// ---------------------------------------------------------------------------

struct CollectionLabelOps {
  const PointedCollection* C = nullptr;
  int dim(const std::string& n) const { return C->at(n).dim; }
  std::string src(const std::string& n) const { return C->at(n).src; }
  std::string tgt(const std::string& n) const { return C->at(n).tgt; }
  bool eq(const std::string& a, const std::string& b) const { return a == b; }
};

using CollectionPasting = Diagram<std::string>;

inline std::string pasting_name(const CollectionPasting& P) {
  std::string s = matrix_str(encode_tree(P.shape)) + "{";
  bool first = true;
  for (const auto& [a, l] : P.labels) {
    if (!first) s += ",";
    first = false;
    s += addr_id(a) + "=" + l;
  }
  return s + "}";
}

inline void enumerate_pastings_rec(
    const PointedCollection& C, const Tree& shape,
    const std::vector<CellAddr>& cells, std::size_t i, int out_colour,
    std::map<CellAddr, std::string>& acc,
    std::vector<CollectionPasting>& out) {
  if (i == cells.size()) {
    out.push_back({shape, acc});
    return;
  }
  const CellAddr& a = cells[i];
  for (const auto& c : C.cells) {
    if (c.dim != a.dim() || c.colour != out_colour) continue;
    if (a.dim() >= 1 &&
        (acc.at(addr_src(a)) != c.src || acc.at(addr_tgt(a)) != c.tgt))
      continue;
    acc[a] = c.name;
    enumerate_pastings_rec(C, shape, cells, i + 1, out_colour, acc, out);
    acc.erase(a);
  }
}

// Every labeling of the scheme of `shape` by C-cells of the given output
// colour, boundary-compatible, in deterministic order.
inline std::vector<CollectionPasting> enumerate_pastings(
    const PointedCollection& C, const Tree& shape, int out_colour) {
  std::vector<CollectionPasting> out;
  std::map<CellAddr, std::string> acc;
  enumerate_pastings_rec(C, shape, scheme_cells(shape), 0, out_colour, acc, out);
  return out;
}

inline Arity substituted_arity(const PointedCollection& C,
                               const CollectionPasting& P) {
  std::map<CellAddr, Tree> tops;
  for (const auto& a : top_cells(P.shape))
    tops[a] = C.at(P.labels.at(a)).arity.tree;
  TreeGraft g = graft_trees(P.shape, tops);
  int colour = C.at(P.labels.at(top_cells(P.shape)[0])).arity.colour;
  for (const auto& a : top_cells(P.shape))
    if (C.at(P.labels.at(a)).arity.colour != colour)
      throw ArityMismatch("mixed arity colours in a pasting");
  return {g.composite, colour};
}

inline PointedCollection tensor_collections(const PointedCollection& C,
                                            const PointedCollection& Cp) {
  if (C.n_colours != Cp.n_colours)
    throw MissingReference("tensor over different colour sets");
  PointedCollection T;
  T.n_colours = C.n_colours;
  T.max_dim = std::min(C.max_dim, Cp.max_dim);
  CollectionLabelOps ops{&C};
  auto pair_name = [](const CollectionPasting& P, const std::string& b) {
    return "(" + pasting_name(P) + ";" + b + ")";
  };
  for (const auto& b : Cp.cells) {
    if (b.dim > T.max_dim) continue;
    for (const auto& P : enumerate_pastings(C, b.arity.tree, b.arity.colour)) {
      CollectionCell cell;
      cell.name = pair_name(P, b.name);
      cell.dim = b.dim;
      cell.arity = substituted_arity(C, P);
      cell.colour = b.colour;
      if (b.dim >= 1) {
        cell.src = pair_name(boundary_diagram(P, b.dim - 1, Side::source), b.src);
        cell.tgt = pair_name(boundary_diagram(P, b.dim - 1, Side::target), b.tgt);
      }
      T.cells.push_back(cell);
      if (Cp.is_unit(b.name)) {
        bool all_units = true;
        for (const auto& [a, l] : P.labels)
          if (!C.is_unit(l)) all_units = false;
        if (all_units) T.set_unit(b.colour, b.dim, cell.name);
      }
    }
  }
  T.finalize();
  return T;
}

// ---------------------------------------------------------------------------
// Pushout of collections along pointed morphisms f : A -> B, g : A -> B'.
// ---------------------------------------------------------------------------

struct CollectionPushout {
  PointedCollection result;
  CollectionMorphism in1, in2;
};

inline CollectionPushout pushout_collections(const PointedCollection& A,
                                             const PointedCollection& B,
                                             const PointedCollection& Bp,
                                             const CollectionMorphism& f,
                                             const CollectionMorphism& g,
                                             const std::string& suf1 = "#1",
                                             const std::string& suf2 = "#2") {
  check_collection_morphism(A, B, f);
  check_collection_morphism(A, Bp, g);
  // Colours: B's then B''s, glued along the two colour maps.
  UnionFind cuf;
  cuf.ensure(B.n_colours + Bp.n_colours);
  auto c1 = [&](int c) { return static_cast<std::size_t>(c - 1); };
  auto c2 = [&](int c) { return static_cast<std::size_t>(B.n_colours + c - 1); };
  for (int c = 1; c <= A.n_colours; ++c) cuf.merge(c1(f.colour(c)), c2(g.colour(c)));
  std::map<std::size_t, int> colour_id;
  int next_colour = 0;
  for (std::size_t i = 0; i < cuf.size(); ++i) {
    std::size_t r = cuf.find(i);
    if (!colour_id.count(r)) colour_id[r] = ++next_colour;
  }
  // Cells: B's then B''s, glued along the two cell maps.
  UnionFind uf;
  std::map<std::string, std::size_t> idx;
  std::vector<std::pair<int, std::string>> origin;  // (copy, original name)
  auto intern = [&](int copy, const std::string& name) {
    std::string key = cat(copy, ":", name);
    auto it = idx.find(key);
    if (it != idx.end()) return it->second;
    std::size_t id = origin.size();
    idx[key] = id;
    origin.push_back({copy, name});
    uf.ensure(id + 1);
    return id;
  };
  for (const auto& c : B.cells) intern(1, c.name);
  for (const auto& c : Bp.cells) intern(2, c.name);
  for (const auto& a : A.cells)
    uf.merge(intern(1, f.at(a.name)), intern(2, g.at(a.name)));

  auto mangled = [&](std::size_t id) {
    std::size_t r = uf.find(id);
    const auto& [copy, name] = origin[r];
    return name + (copy == 1 ? suf1 : suf2);
  };
  auto new_colour = [&](int copy, int c) {
    return colour_id.at(cuf.find(copy == 1 ? c1(c) : c2(c)));
  };

  CollectionPushout out;
  out.result.n_colours = next_colour;
  out.result.max_dim = std::min(B.max_dim, Bp.max_dim);
  std::set<std::size_t> done;
  auto emit = [&](int copy, const PointedCollection& src) {
    for (const auto& c : src.cells) {
      std::size_t r = uf.find(intern(copy, c.name));
      if (done.count(r)) continue;
      done.insert(r);
      CollectionCell cell;
      cell.name = mangled(r);
      cell.dim = c.dim;
      cell.arity = {c.arity.tree, new_colour(copy, c.arity.colour)};
      cell.colour = new_colour(copy, c.colour);
      if (c.dim >= 1) {
        cell.src = mangled(intern(copy, c.src));
        cell.tgt = mangled(intern(copy, c.tgt));
      }
      out.result.cells.push_back(cell);
      if (src.is_unit(c.name))
        out.result.set_unit(cell.colour, cell.dim, cell.name);
    }
  };
  emit(1, B);
  emit(2, Bp);
  out.result.finalize();

  for (int c = 1; c <= B.n_colours; ++c) out.in1.colour_map.push_back(new_colour(1, c));
  for (int c = 1; c <= Bp.n_colours; ++c) out.in2.colour_map.push_back(new_colour(2, c));
  for (const auto& c : B.cells) out.in1.cell_map[c.name] = mangled(intern(1, c.name));
  for (const auto& c : Bp.cells) out.in2.cell_map[c.name] = mangled(intern(2, c.name));
  check_collection_morphism(B, out.result, out.in1);
  check_collection_morphism(Bp, out.result, out.in2);
  return out;
}

}  // namespace globop
