// Shared generators for the randomized law tests: small random globular
// sets, random labeled diagrams over them, and pools of nested diagrams.

#pragma once

#include <map>
#include <optional>
#include <random>
#include <vector>

#include "globop/globular.hpp"
#include "globop/pasting.hpp"
#include "globop/tree.hpp"

namespace globop::testing {

using Rng = std::mt19937;

inline int pick(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// A small globular set with guaranteed parallel 1-cells (so 2-cells and
// labelings exist): cells over <= 6 total.
inline GlobularSet random_globular_set(Rng& rng, int max_dim = 2,
                                       int max_cells = 6) {
  std::vector<GCell> cells;
  int n0 = pick(rng, 1, 2);
  for (int i = 0; i < n0; ++i) cells.push_back({cat("a", i), 0, "", ""});
  int budget = max_cells - n0;
  int n1 = max_dim >= 1 ? pick(rng, 1, std::max(1, budget - 1)) : 0;
  for (int i = 0; i < n1; ++i) {
    int s = pick(rng, 0, n0 - 1);
    // half the time make an endo-loop or reuse endpoints so parallels appear
    int t = pick(rng, 0, 1) ? s : pick(rng, 0, n0 - 1);
    cells.push_back({cat("f", i), 1, cat("a", s), cat("a", t)});
  }
  budget -= n1;
  if (max_dim >= 2 && n1 >= 1) {
    int n2 = pick(rng, 0, std::max(0, budget));
    int made = 0;
    for (int tries = 0; tries < 30 && made < n2; ++tries) {
      int i = pick(rng, 0, n1 - 1), j = pick(rng, 0, n1 - 1);
      if (cells[n0 + i].src == cells[n0 + j].src &&
          cells[n0 + i].tgt == cells[n0 + j].tgt) {
        cells.push_back({cat("e", made), 2, cat("f", i), cat("f", j)});
        ++made;
      }
    }
  }
  return validate_globular_set(cells, max_dim);
}

// All labelings of the scheme of `shape` by cells of X (backtracking).
inline void labelings_rec(const GlobularSet& X, const Tree& shape,
                          const std::vector<CellAddr>& cs, std::size_t i,
                          std::map<CellAddr, std::string>& acc,
                          std::vector<PastingDiagram>& out,
                          std::size_t cap) {
  if (out.size() >= cap) return;
  if (i == cs.size()) {
    out.push_back({shape, acc});
    return;
  }
  const CellAddr& a = cs[i];
  for (const auto& c : X.cells) {
    if (c.dim != a.dim()) continue;
    if (a.dim() >= 1 && (acc.at(addr_src(a)) != c.src || acc.at(addr_tgt(a)) != c.tgt))
      continue;
    acc[a] = c.id;
    labelings_rec(X, shape, cs, i + 1, acc, out, cap);
    acc.erase(a);
  }
}

inline std::vector<PastingDiagram> all_labelings(const GlobularSet& X,
                                                 const Tree& shape,
                                                 std::size_t cap = 100000) {
  std::vector<PastingDiagram> out;
  std::map<CellAddr, std::string> acc;
  labelings_rec(X, shape, scheme_cells(shape), 0, acc, out, cap);
  return out;
}

// A random diagram over X with at most `max_scheme_cells` scheme cells.
inline std::optional<PastingDiagram> random_diagram(Rng& rng,
                                                    const GlobularSet& X,
                                                    int max_scheme_cells = 8) {
  std::vector<Tree> shapes;
  for (int d = 0; d <= X.max_dim; ++d)
    for (const Tree& t : enumerate_trees(d, 3))
      if (static_cast<int>(scheme_cells(t).size()) <= max_scheme_cells)
        shapes.push_back(t);
  for (int tries = 0; tries < 20; ++tries) {
    const Tree& shape = shapes[pick(rng, 0, static_cast<int>(shapes.size()) - 1)];
    auto ls = all_labelings(X, shape, 64);
    if (ls.empty()) continue;
    return ls[pick(rng, 0, static_cast<int>(ls.size()) - 1)];
  }
  return std::nullopt;
}

// A random valid diagram labeled from a pool, generic over the label ops.
template <class L, class Ops>
std::optional<Diagram<L>> random_diagram_from_pool(Rng& rng, const Ops& ops,
                                                   const std::vector<L>& pool,
                                                   const std::vector<Tree>& shapes,
                                                   int tries = 40) {
  for (int attempt = 0; attempt < tries; ++attempt) {
    const Tree& shape = shapes[pick(rng, 0, static_cast<int>(shapes.size()) - 1)];
    auto cs = scheme_cells(shape);
    std::map<CellAddr, L> acc;
    bool ok = true;
    for (const auto& a : cs) {
      std::vector<const L*> cands;
      for (const auto& l : pool) {
        if (ops.dim(l) != a.dim()) continue;
        if (a.dim() >= 1 && (!ops.eq(acc.at(addr_src(a)), ops.src(l)) ||
                             !ops.eq(acc.at(addr_tgt(a)), ops.tgt(l))))
          continue;
        cands.push_back(&l);
      }
      if (cands.empty()) {
        ok = false;
        break;
      }
      acc.insert({a, *cands[pick(rng, 0, static_cast<int>(cands.size()) - 1)]});
    }
    if (ok) return Diagram<L>{shape, acc};
  }
  return std::nullopt;
}

}  // namespace globop::testing
