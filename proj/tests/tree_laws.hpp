// Exhaustive bounded checks of the star laws, shared by the unit tests and
// the acceptance suite. Operands are grouped by truncation fiber and
// bucketed by leaf count so that only width-admissible tuples are visited.

#pragma once

#include <map>
#include <vector>

#include "globop/tree.hpp"

namespace globop::testing {

struct TreeUniverse {
  std::vector<Tree> trees;
  std::vector<int> width;

  explicit TreeUniverse(int dim, int max_leaves) {
    trees = enumerate_trees(dim, max_leaves);
    for (const Tree& t : trees) width.push_back(leaf_count(t));
  }
};

// (t * u) * v == t * (u * v) for all p-compatible triples with total leaf
// count within the bound.
inline bool check_star_associativity(int max_dim, int max_leaves, long& count) {
  for (int dim = 1; dim <= max_dim; ++dim) {
    TreeUniverse U(dim, max_leaves);
    for (int p = 0; p < dim; ++p) {
      std::map<TreeMatrix, std::map<int, std::vector<std::size_t>>> fibers;
      for (std::size_t i = 0; i < U.trees.size(); ++i)
        fibers[encode_tree(truncate_tree(U.trees[i], dim - p))][U.width[i]]
            .push_back(i);
      for (auto& [key, buckets] : fibers)
        for (auto& [wa, as] : buckets)
          for (auto& [wb, bs] : buckets) {
            if (wa + wb > max_leaves) continue;
            for (auto& [wc, cs] : buckets) {
              if (wa + wb + wc > max_leaves) continue;
              for (std::size_t a : as)
                for (std::size_t b : bs) {
                  Tree ab = star(U.trees[a], U.trees[b], p);
                  for (std::size_t c : cs) {
                    if (!(star(ab, U.trees[c], p) ==
                          star(U.trees[a], star(U.trees[b], U.trees[c], p), p)))
                      return false;
                    ++count;
                  }
                }
            }
          }
    }
  }
  return true;
}

// (t *q u) *p (v *q w) == (t *p v) *q (u *p w) on all compatible quadruples
// with total leaf count within the bound (p < q).
inline bool check_middle_interchange(int max_dim, int max_leaves, long& count) {
  for (int dim = 2; dim <= max_dim; ++dim) {
    TreeUniverse U(dim, max_leaves);
    for (int p = 0; p < dim; ++p)
      for (int q = p + 1; q < dim; ++q) {
        // group q-compatible pairs by their p-truncation pair
        struct Pair {
          std::size_t a, b;
          Tree glued;
        };
        std::map<std::pair<TreeMatrix, TreeMatrix>, std::vector<Pair>> groups;
        std::map<TreeMatrix, std::vector<std::size_t>> qfibers;
        for (std::size_t i = 0; i < U.trees.size(); ++i)
          qfibers[encode_tree(truncate_tree(U.trees[i], dim - q))].push_back(i);
        for (auto& [key, fib] : qfibers)
          for (std::size_t a : fib)
            for (std::size_t b : fib) {
              if (U.width[a] + U.width[b] > max_leaves) continue;
              groups[{encode_tree(truncate_tree(U.trees[a], dim - p)),
                      encode_tree(truncate_tree(U.trees[b], dim - p))}]
                  .push_back({a, b, star(U.trees[a], U.trees[b], q)});
            }
        for (auto& [key, pairs] : groups)
          for (const Pair& tu : pairs)
            for (const Pair& vw : pairs) {
              if (U.width[tu.a] + U.width[tu.b] + U.width[vw.a] +
                      U.width[vw.b] >
                  max_leaves)
                continue;
              if (!(star(tu.glued, vw.glued, p) ==
                    star(star(U.trees[tu.a], U.trees[vw.a], p),
                         star(U.trees[tu.b], U.trees[vw.b], p), q)))
                return false;
              ++count;
            }
      }
  }
  return true;
}

}  // namespace globop::testing
