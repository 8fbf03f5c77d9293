// Presented colored omega-operads: a base collection, a property regime
// (Id, Id_u, C, S, S_u), finite bounds, an interning term arena, the
// bounded cell enumeration (gamma closure, contraction saturation,
// strictness congruence), equality, morphisms, and pushouts.

#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "globop/collections.hpp"
#include "globop/core.hpp"
#include "globop/term.hpp"

namespace globop {

enum class Property { Id, IdU, C, S, Su };

inline std::string property_name(Property p) {
  switch (p) {
    case Property::Id: return "id";
    case Property::IdU: return "idu";
    case Property::C: return "c";
    case Property::S: return "s";
    case Property::Su: return "su";
  }
  return "?";
}

inline Property parse_property(const std::string& s) {
  if (s == "id") return Property::Id;
  if (s == "idu") return Property::IdU;
  if (s == "c") return Property::C;
  if (s == "s") return Property::S;
  if (s == "su") return Property::Su;
  throw ParseError(cat("unknown property '", s, "'"));
}

inline bool has_unit_reflexes(Property p) {
  return p == Property::IdU || p == Property::C || p == Property::Su;
}
inline bool has_congruence(Property p) {
  return p == Property::S || p == Property::Su;
}

struct Bounds {
  int max_dim = 2;
  int max_width = 3;
  int max_size = 9;              // term node budget; keeps the universe finite
  std::size_t max_cells = 50000; // hard cap, BudgetExceeded beyond

  bool operator==(const Bounds& o) const {
    return max_dim == o.max_dim && max_width == o.max_width &&
           max_size == o.max_size && max_cells == o.max_cells;
  }
};

class OperadPresentation {
public:
  PointedCollection base;
  Property property = Property::Id;
  Bounds bounds;
  TermArena arena;
  bool two_way_loop = false;  // experimental reading of the root-pair clause

  // Enumerated cells by dimension, in insertion (deterministic) order.
  std::vector<std::vector<TermId>> cells;
  bool enumerated = false;

  OperadPresentation(PointedCollection b, Property p, Bounds bd)
      : base(std::move(b)), property(p), bounds(bd), arena(&base) {
    cells.resize(bounds.max_dim + 1);
  }
  OperadPresentation(const OperadPresentation&) = delete;
  OperadPresentation& operator=(const OperadPresentation&) = delete;

  bool in_bounds(TermId t) const {
    return arena.dim(t) <= bounds.max_dim &&
           arena.width(t) <= bounds.max_width &&
           arena.size(t) <= bounds.max_size;
  }
  // Contraction tokens are stored for every eligible pair regardless of the
  // node-size budget; everything else must fit.
  bool storable(TermId t) const {
    const TermData& d = arena.data(t);
    if (arena.dim(t) > bounds.max_dim || arena.width(t) > bounds.max_width)
      return false;
    if (d.kind == TermKind::Comp && d.hk == HeadKind::Contr && arena.is_bare(t))
      return true;
    return arena.size(t) <= bounds.max_size;
  }

  bool stored(TermId t) const { return stored_.count(t) != 0; }
  void store(TermId t) {
    if (stored_.count(t)) return;
    if (arena.node_count() > bounds.max_cells || stored_.size() > bounds.max_cells)
      throw BudgetExceeded(cat("cell budget hit at dim ", arena.dim(t)));
    stored_.insert(t);
    cells[arena.dim(t)].push_back(t);
  }

  // union-find over term ids; nontrivial only for S and S_u
  std::size_t cls(TermId t) const {
    cong_.ensure(arena.node_count());
    return cong_.find(t);
  }
  bool merge(TermId a, TermId b) {
    cong_.ensure(arena.node_count());
    return cong_.merge(a, b);
  }

  bool equal_terms(TermId a, TermId b) const {
    if (!in_bounds(a) || !in_bounds(b))
      throw OutOfBounds("equality outside the presentation bounds");
    if (has_congruence(property)) return cls(a) == cls(b);
    return a == b;
  }

  // Boundary comparison modulo the congruence.
  bool parallel_mod(TermId a, TermId b) const {
    if (arena.dim(a) != arena.dim(b) || arena.dim(a) == 0) return false;
    if (!has_congruence(property)) return arena.parallel(a, b);
    return cls(arena.src(a)) == cls(arena.src(b)) &&
           cls(arena.tgt(a)) == cls(arena.tgt(b));
  }

private:
  std::set<TermId> stored_;
  mutable UnionFind cong_;
};

using PresentationPtr = std::unique_ptr<OperadPresentation>;

// ---------------------------------------------------------------------------
// Bounded enumeration: gamma closure over the generators (plus unit
// reflexes), then property-specific saturation/congruence in free_operad
// (contraction.hpp).
// ---------------------------------------------------------------------------

namespace detail {

// Precomputed backtracking plan for labeling the scheme of a shape: shells
// are forced by the top labels, so only top cells branch.
struct ShapePlan {
  std::vector<CellAddr> cells;  // scheme order
  std::vector<int> dims;
  std::vector<int> src_idx, tgt_idx;  // positions of the boundary cells
  std::vector<int> tops;              // positions of top cells, planar order
};

inline const ShapePlan& shape_plan(std::map<Tree, ShapePlan>& cache,
                                   const Tree& shape) {
  auto it = cache.find(shape);
  if (it != cache.end()) return it->second;
  ShapePlan plan;
  plan.cells = scheme_cells(shape);
  std::map<CellAddr, int> pos;
  for (std::size_t i = 0; i < plan.cells.size(); ++i)
    pos[plan.cells[i]] = static_cast<int>(i);
  for (const auto& a : plan.cells) {
    plan.dims.push_back(a.dim());
    plan.src_idx.push_back(a.dim() ? pos.at(addr_src(a)) : -1);
    plan.tgt_idx.push_back(a.dim() ? pos.at(addr_tgt(a)) : -1);
  }
  for (const auto& a : top_cells(shape)) plan.tops.push_back(pos.at(a));
  return cache.emplace(shape, std::move(plan)).first->second;
}

}  // namespace detail

// Seeds generators (and unit reflexes where the property has them), then
// closes under gamma within bounds. Deterministic insertion order.
inline void gamma_closure(OperadPresentation& P) {
  for (const auto& c : P.base.cells) {
    if (c.dim > P.bounds.max_dim) continue;
    TermId t = P.arena.term_of_cell(c.name);
    if (P.storable(t)) P.store(t);
  }
  if (has_unit_reflexes(P.property)) {
    for (int g = 1; g <= P.base.n_colours; ++g)
      for (int n = 1; n <= P.bounds.max_dim; ++n)
        for (int p = 0; p < n; ++p) {
          TermId t = P.arena.reflex_unit(p, n, g);
          if (P.storable(t)) P.store(t);
        }
  }
  std::map<Tree, detail::ShapePlan> plans;
  std::set<std::vector<TermId>> tried;
  std::vector<TermId> acc, combo;
  bool changed = true;
  while (changed) {
    changed = false;
    // freshly stored cells only participate from the next round on
    const std::vector<std::vector<TermId>> snap = P.cells;
    for (int m = 0; m <= P.bounds.max_dim; ++m) {
      const std::vector<TermId>& outers = snap[m];
      for (TermId outer : outers) {
        Arity ar = P.arena.arity(outer);
        const detail::ShapePlan& plan = detail::shape_plan(plans, ar.tree);
        const int base_size = P.arena.size(outer);
        acc.assign(plan.cells.size(), kNoTerm);
        // Assign a label at position i and force its boundary chain; undo
        // list records the freshly set positions.
        auto propagate = [&](int i, TermId l, std::vector<int>& undo) {
          if (acc[i] != kNoTerm) return acc[i] == l;
          acc[i] = l;
          undo.push_back(i);
          int si = i;
          TermId sl = l;
          while (plan.dims[si] >= 1) {
            int nxt = plan.src_idx[si];
            TermId b = P.arena.src(sl);
            if (acc[nxt] == kNoTerm) {
              acc[nxt] = b;
              undo.push_back(nxt);
            } else if (acc[nxt] != b) {
              return false;
            }
            si = nxt;
            sl = b;
          }
          int ti = i;
          TermId tl = l;
          while (plan.dims[ti] >= 1) {
            int nxt = plan.tgt_idx[ti];
            TermId b = P.arena.tgt(tl);
            if (acc[nxt] == kNoTerm) {
              acc[nxt] = b;
              undo.push_back(nxt);
            } else if (acc[nxt] != b) {
              return false;
            }
            ti = nxt;
            tl = b;
          }
          return true;
        };
        std::function<void(std::size_t, int, int, bool)> rec =
            [&](std::size_t k, int wsum, int ssum, bool units) {
              if (k == plan.tops.size()) {
                if (units) return;
                combo.clear();
                combo.push_back(outer);
                for (int tp : plan.tops) combo.push_back(acc[tp]);
                if (!tried.insert(combo).second) return;
                TermPasting Q;
                Q.shape = ar.tree;
                for (std::size_t j = 0; j < plan.cells.size(); ++j)
                  Q.labels.insert({plan.cells[j], acc[j]});
                TermId t = P.arena.gamma(outer, Q);
                if (P.storable(t) && !P.stored(t)) {
                  P.store(t);
                  changed = true;
                }
                return;
              }
              int i = plan.tops[k];
              int d = plan.dims[i];
              if (d > P.bounds.max_dim) return;
              for (TermId l : snap[d]) {
                if (P.arena.out_colour(l) != ar.colour) continue;
                int w = wsum + P.arena.width(l);
                int s = ssum + P.arena.size(l);
                if (w > P.bounds.max_width || s > P.bounds.max_size) continue;
                std::vector<int> undo;
                if (propagate(i, l, undo))
                  rec(k + 1, w, s, units && P.arena.is_unit(l));
                for (int j : undo) acc[j] = kNoTerm;
              }
            };
        rec(0, 0, base_size, true);
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Morphisms: colour map plus generator images, applied by structural
// recursion and normalization.
// ---------------------------------------------------------------------------

struct ContractionResult {
  enum class Status { Found, CongruentNoWitness, Absent };
  Status status = Status::Absent;
  TermId cell = kNoTerm;
  bool found() const { return status == Status::Found; }
};

ContractionResult find_contraction(OperadPresentation& P, TermId x, TermId y);

struct OperadMorphism {
  OperadPresentation* source = nullptr;
  OperadPresentation* target = nullptr;
  std::vector<int> colour_map;
  std::map<std::string, TermId> gen_images;  // non-unit generators
  int gen_max_dim = -1;  // images provided for generators of dim <= this

  int colour(int c) const {
    if (c < 1 || c > static_cast<int>(colour_map.size()))
      throw MissingReference(cat("colour ", c));
    return colour_map[c - 1];
  }
  TermId image(const std::string& gen) const {
    auto it = gen_images.find(gen);
    if (it == gen_images.end()) throw MissingImage(gen);
    return it->second;
  }
};

inline TermId apply_morphism(const OperadMorphism& m, TermId t,
                             std::map<TermId, TermId>* memo = nullptr) {
  std::map<TermId, TermId> local;
  std::map<TermId, TermId>& mm = memo ? *memo : local;
  auto it = mm.find(t);
  if (it != mm.end()) return it->second;
  const TermArena& A = m.source->arena;
  TermArena& B = m.target->arena;
  const TermData& d = A.data(t);
  TermId out;
  if (d.kind == TermKind::Unit) {
    out = B.unit(m.colour(d.colour), d.dim);
  } else {
    TermPasting P;
    P.shape = d.inner.shape;
    for (const auto& [a, l] : d.inner.labels)
      P.labels.insert({a, apply_morphism(m, l, &mm)});
    TermId head;
    switch (d.hk) {
      case HeadKind::Gen:
        head = m.image(d.gen);
        break;
      case HeadKind::Contr: {
        ContractionResult r = find_contraction(
            *m.target, apply_morphism(m, d.cx, &mm), apply_morphism(m, d.cy, &mm));
        if (!r.found())
          throw ContractionUnavailable(
              cat("no image for a contraction cell under the morphism"));
        head = r.cell;
        break;
      }
      case HeadKind::Refl:
        head = B.reflex_unit(d.refl_p, d.dim, m.colour(d.colour));
        break;
    }
    bool all_units = true;
    for (const auto& [a, l] : P.labels)
      if (!B.is_unit(l)) all_units = false;
    out = all_units ? head : B.gamma(head, P);
  }
  mm[t] = out;
  return out;
}

struct MorphismReport {
  std::vector<std::string> violations;
  bool clean() const { return violations.empty(); }
};

// Generator-by-generator verification: dimension, arity, boundaries, units.
inline MorphismReport check_morphism(const OperadMorphism& m) {
  MorphismReport rep;
  const PointedCollection& S = m.source->base;
  for (const auto& c : S.cells) {
    if (c.dim > m.gen_max_dim) continue;
    if (S.is_unit(c.name)) continue;
    TermId img;
    try {
      img = m.image(c.name);
    } catch (const MissingImage&) {
      rep.violations.push_back(cat("MissingImage: ", c.name));
      continue;
    }
    TermArena& B = m.target->arena;
    if (B.dim(img) != c.dim)
      rep.violations.push_back(cat("DimensionMismatch: ", c.name));
    Arity got = B.arity(img);
    if (!(got.tree == c.arity.tree) || got.colour != m.colour(c.arity.colour))
      rep.violations.push_back(cat("ArityMismatch: ", c.name));
    if (B.out_colour(img) != m.colour(c.colour))
      rep.violations.push_back(cat("ColourMismatch: ", c.name));
    if (c.dim >= 1) {
      TermId gen = m.source->arena.term_of_cell(c.name);
      TermId s = apply_morphism(m, m.source->arena.src(gen));
      TermId tt = apply_morphism(m, m.source->arena.tgt(gen));
      if (B.src(img) != s || B.tgt(img) != tt)
        rep.violations.push_back(cat("BoundaryMismatch: ", c.name));
    }
  }
  return rep;
}

inline OperadMorphism identity_operad_morphism(OperadPresentation& P) {
  OperadMorphism m;
  m.source = &P;
  m.target = &P;
  for (int c = 1; c <= P.base.n_colours; ++c) m.colour_map.push_back(c);
  for (const auto& cell : P.base.cells)
    if (!P.base.is_unit(cell.name))
      m.gen_images[cell.name] = P.arena.term_of_cell(cell.name);
  m.gen_max_dim = P.base.max_dim;
  return m;
}

// A morphism induced by a collection morphism between the bases.
inline OperadMorphism induced_morphism(const CollectionMorphism& f,
                                       OperadPresentation& S,
                                       OperadPresentation& T,
                                       int gen_max_dim = -1) {
  OperadMorphism m;
  m.source = &S;
  m.target = &T;
  m.colour_map = f.colour_map;
  m.gen_max_dim = gen_max_dim < 0 ? S.base.max_dim : gen_max_dim;
  for (const auto& c : S.base.cells) {
    if (S.base.is_unit(c.name) || c.dim > m.gen_max_dim) continue;
    m.gen_images[c.name] = T.arena.term_of_cell(f.at(c.name));
  }
  return m;
}

}  // namespace globop
