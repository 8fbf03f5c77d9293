// Finite dimension-truncated globular sets with validated source/target
// structure (ss = st, tt = ts) and parallelism tests.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "globop/core.hpp"

namespace globop {

struct GCell {
  std::string id;
  int dim = 0;
  std::string src;  // empty iff dim == 0
  std::string tgt;

  bool operator==(const GCell& o) const {
    return id == o.id && dim == o.dim && src == o.src && tgt == o.tgt;
  }
};

class GlobularSet {
public:
  int max_dim = 0;
  std::vector<GCell> cells;  // validated, stable order

  const GCell* find(const std::string& id) const {
    auto it = index_.find(id);
    return it == index_.end() ? nullptr : &cells[it->second];
  }
  const GCell& at(const std::string& id) const {
    const GCell* c = find(id);
    if (!c) throw MissingReference(id);
    return *c;
  }
  std::vector<const GCell*> at_dim(int d) const {
    std::vector<const GCell*> out;
    for (const auto& c : cells)
      if (c.dim == d) out.push_back(&c);
    return out;
  }
  void rebuild_index() {
    index_.clear();
    for (std::size_t i = 0; i < cells.size(); ++i) index_[cells[i].id] = i;
  }

private:
  std::map<std::string, std::size_t> index_;
};

enum class Side { source, target };

// Checks reference integrity, dimension bookkeeping and the globular
// identities; names the first offending cell on failure.
inline GlobularSet validate_globular_set(std::vector<GCell> raw, int max_dim) {
  GlobularSet X;
  X.max_dim = max_dim;
  X.cells = std::move(raw);
  X.rebuild_index();
  for (const auto& c : X.cells) {
    if (c.dim < 0 || c.dim > max_dim)
      throw DimensionMismatch(cat(c.id, " has dim ", c.dim, " outside 0..", max_dim));
    if (c.dim == 0) {
      if (!c.src.empty() || !c.tgt.empty())
        throw DimensionMismatch(cat(c.id, ": 0-cells have no boundaries"));
      continue;
    }
    if (c.src.empty() || c.tgt.empty())
      throw MissingReference(cat(c.id, ": missing src/tgt"));
    const GCell* s = X.find(c.src);
    const GCell* t = X.find(c.tgt);
    if (!s) throw MissingReference(cat(c.id, " -> ", c.src));
    if (!t) throw MissingReference(cat(c.id, " -> ", c.tgt));
    if (s->dim != c.dim - 1 || t->dim != c.dim - 1)
      throw DimensionMismatch(cat(c.id, ": boundary not at dim ", c.dim - 1));
  }
  for (const auto& c : X.cells) {
    if (c.dim < 2) continue;
    const GCell& s = X.at(c.src);
    const GCell& t = X.at(c.tgt);
    if (s.src != t.src || s.tgt != t.tgt)
      throw GlobularIdentityViolation(
          cat(c.id, ": src/tgt of its boundaries disagree (", s.src, ",", s.tgt,
              ") vs (", t.src, ",", t.tgt, ")"));
  }
  return X;
}

// Composite cosource/cotarget s^dim_k, t^dim_k; identity when k = dim(x).
inline const GCell& iterated_boundary(const GlobularSet& X, const GCell& x,
                                      int k, Side side) {
  if (k > x.dim) throw DimensionMismatch(cat("boundary at ", k, " of a ", x.dim, "-cell"));
  const GCell* cur = &x;
  while (cur->dim > k)
    cur = &X.at(side == Side::source ? cur->src : cur->tgt);
  return *cur;
}

inline bool is_parallel(const GlobularSet& X, const GCell& x, const GCell& y) {
  if (x.dim != y.dim || x.dim == 0)
    throw DimensionMismatch("parallelism needs equal dims >= 1");
  (void)X;
  return x.src == y.src && x.tgt == y.tgt;
}

// A morphism of globular sets as an id-to-id table.
struct GlobularMap {
  std::map<std::string, std::string> table;

  const std::string& at(const std::string& id) const {
    auto it = table.find(id);
    if (it == table.end()) throw MissingImage(id);
    return it->second;
  }
};

inline void check_globular_map(const GlobularSet& X, const GlobularSet& Y,
                               const GlobularMap& f) {
  for (const auto& c : X.cells) {
    const GCell& img = Y.at(f.at(c.id));
    if (img.dim != c.dim) throw DimensionMismatch(cat("map bends dim at ", c.id));
    if (c.dim >= 1 &&
        (img.src != f.at(c.src) || img.tgt != f.at(c.tgt)))
      throw BoundaryMismatch(cat("map not globular at ", c.id));
  }
}

}  // namespace globop
