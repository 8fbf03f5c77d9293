// Batanin n-trees: planar rooted shapes at an ambient dimension, the
// Grothendieck two-row matrix codec, the tensors star^n_p, truncation,
// degeneracies, the unique leaf decomposition, pasting schemes, and a
// bounded enumerator.

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "globop/core.hpp"
#include "globop/globular.hpp"

namespace globop {

struct TreeNode {
  std::vector<TreeNode> kids;

  bool operator==(const TreeNode& o) const { return kids == o.kids; }
  bool operator<(const TreeNode& o) const { return kids < o.kids; }
};

inline int node_height(const TreeNode& n) {
  int h = 0;
  for (const auto& k : n.kids) h = std::max(h, 1 + node_height(k));
  return h;
}

// An n-tree: shape of height <= ambient. Two trees are equal iff ambient and
// shape coincide node by node.
struct Tree {
  int ambient = 0;
  TreeNode root;

  bool operator==(const Tree& o) const {
    return ambient == o.ambient && root == o.root;
  }
  bool operator!=(const Tree& o) const { return !(*this == o); }
  bool operator<(const Tree& o) const {
    if (ambient != o.ambient) return ambient < o.ambient;
    return root < o.root;
  }
  int height() const { return node_height(root); }
};

// The two-row Grothendieck matrix. `top` holds the leaf heights in planar
// order, `bot` the heights of the meets of consecutive leaves. The fully
// degenerate tree 1^0_n(1(0)) (n >= 1) is the distinguished empty form.
struct TreeMatrix {
  int ambient = 0;
  std::vector<int> top;
  std::vector<int> bot;

  bool empty_form() const { return top.empty(); }
  bool operator==(const TreeMatrix& o) const {
    return ambient == o.ambient && top == o.top && bot == o.bot;
  }
  bool operator<(const TreeMatrix& o) const {
    if (ambient != o.ambient) return ambient < o.ambient;
    if (top != o.top) return top < o.top;
    return bot < o.bot;
  }
};

inline Tree linear_tree(int n) {
  Tree t;
  t.ambient = n;
  TreeNode* cur = &t.root;
  for (int i = 0; i < n; ++i) {
    cur->kids.emplace_back();
    cur = &cur->kids.front();
  }
  return t;
}

// Path of 1-based child indices from the root; the root is the empty path.
using NodePath = std::vector<int>;

inline const TreeNode* node_at(const Tree& t, const NodePath& p) {
  const TreeNode* cur = &t.root;
  for (int i : p) {
    if (i < 1 || i > static_cast<int>(cur->kids.size())) return nullptr;
    cur = &cur->kids[i - 1];
  }
  return cur;
}

inline void collect_leaves(const TreeNode& n, NodePath& prefix,
                           std::vector<NodePath>& out) {
  if (n.kids.empty()) {
    out.push_back(prefix);
    return;
  }
  for (std::size_t i = 0; i < n.kids.size(); ++i) {
    prefix.push_back(static_cast<int>(i) + 1);
    collect_leaves(n.kids[i], prefix, out);
    prefix.pop_back();
  }
}

// Leaves in planar (depth-first) order. For a childless root this is the
// root path itself; the codec treats that case specially.
inline std::vector<NodePath> tree_leaves(const Tree& t) {
  std::vector<NodePath> out;
  NodePath prefix;
  collect_leaves(t.root, prefix, out);
  return out;
}

inline int leaf_count(const Tree& t) {
  if (t.root.kids.empty()) return t.ambient == 0 ? 1 : 0;
  return static_cast<int>(tree_leaves(t).size());
}

inline int common_prefix_len(const NodePath& a, const NodePath& b) {
  int n = 0;
  while (n < static_cast<int>(a.size()) && n < static_cast<int>(b.size()) &&
         a[n] == b[n])
    ++n;
  return n;
}

inline TreeMatrix encode_tree(const Tree& t) {
  TreeMatrix m;
  m.ambient = t.ambient;
  if (t.root.kids.empty()) {
    if (t.ambient == 0) m.top = {0};
    return m;  // empty form for ambient >= 1
  }
  auto leaves = tree_leaves(t);
  for (const auto& p : leaves) m.top.push_back(static_cast<int>(p.size()));
  for (std::size_t j = 0; j + 1 < leaves.size(); ++j)
    m.bot.push_back(common_prefix_len(leaves[j], leaves[j + 1]));
  return m;
}

inline void validate_matrix(const TreeMatrix& m) {
  if (m.ambient < 0) throw MalformedMatrix("negative ambient dimension");
  if (m.empty_form()) {
    if (!m.bot.empty()) throw MalformedMatrix("empty top with nonempty bottom");
    if (m.ambient == 0)
      throw MalformedMatrix("the 0-tree 1(0) is written ([0],[]), not empty");
    return;
  }
  if (m.bot.size() + 1 != m.top.size())
    throw MalformedMatrix(cat("expected ", m.top.size() - 1,
                              " junction entries, got ", m.bot.size()));
  for (int i : m.top) {
    if (i < 0 || i > m.ambient)
      throw MalformedMatrix(cat("leaf height ", i, " outside 0..", m.ambient));
  }
  if (m.top.size() == 1 && m.top[0] == 0) {
    if (m.ambient != 0)
      throw MalformedMatrix("height-0 leaf only allowed at ambient 0");
    return;
  }
  for (int i : m.top)
    if (i == 0) throw MalformedMatrix("height-0 leaf in a multi-leaf matrix");
  for (std::size_t j = 0; j < m.bot.size(); ++j) {
    if (m.bot[j] < 0 || m.bot[j] >= std::min(m.top[j], m.top[j + 1]))
      throw MalformedMatrix(
          cat("junction ", m.bot[j], " not below min(", m.top[j], ",",
              m.top[j + 1], ")"));
  }
}

inline Tree decode_tree(const TreeMatrix& m) {
  validate_matrix(m);
  Tree t;
  t.ambient = m.ambient;
  if (m.empty_form() || (m.top.size() == 1 && m.top[0] == 0)) return t;
  // Staircase reconstruction: keep the rightmost spine as a node pointer
  // stack, rewind to the junction level, grow a fresh branch per leaf.
  std::vector<TreeNode*> spine{&t.root};
  auto grow_to = [&spine](int h) {
    while (static_cast<int>(spine.size()) - 1 < h) {
      spine.back()->kids.emplace_back();
      spine.push_back(&spine.back()->kids.back());
    }
  };
  grow_to(m.top[0]);
  for (std::size_t j = 0; j + 1 < m.top.size(); ++j) {
    spine.resize(m.bot[j] + 1);
    grow_to(m.top[j + 1]);
  }
  return t;
}

inline std::string matrix_str(const TreeMatrix& m) {
  std::string s = cat("tree{", m.ambient, "; top=[");
  for (std::size_t i = 0; i < m.top.size(); ++i)
    s += (i ? "," : "") + std::to_string(m.top[i]);
  s += "]; bot=[";
  for (std::size_t i = 0; i < m.bot.size(); ++i)
    s += (i ? "," : "") + std::to_string(m.bot[i]);
  return s + "]}";
}

inline std::string tree_str(const Tree& t) { return matrix_str(encode_tree(t)); }

// Truncation: drop the top k levels, ambient falls by k.
inline TreeNode prune_above(const TreeNode& n, int level) {
  TreeNode out;
  if (level == 0) return out;
  for (const auto& k : n.kids) out.kids.push_back(prune_above(k, level - 1));
  return out;
}

inline Tree truncate_tree(const Tree& t, int k) {
  if (k < 0 || k > t.ambient)
    throw BadLevel(cat("truncate by ", k, " on ambient ", t.ambient));
  Tree out;
  out.ambient = t.ambient - k;
  out.root = prune_above(t.root, out.ambient);
  return out;
}

// Degeneracy 1^k_n: same shape, higher ambient dimension.
inline Tree degenerate_tree(const Tree& t, int to_n) {
  if (to_n <= t.ambient)
    throw BadLevel(cat("degenerate to ", to_n, " from ambient ", t.ambient));
  Tree out = t;
  out.ambient = to_n;
  return out;
}

inline Tree embed_tree(const Tree& t, int to_n) {
  if (to_n == t.ambient) return t;
  return degenerate_tree(t, to_n);
}

inline void merge_nodes(TreeNode& a, const TreeNode& b, int level, int p) {
  if (level == p) {
    for (const auto& k : b.kids) a.kids.push_back(k);
    return;
  }
  if (a.kids.size() != b.kids.size())
    throw TruncationMismatch("operand truncations differ below the glue level");
  for (std::size_t i = 0; i < a.kids.size(); ++i)
    merge_nodes(a.kids[i], b.kids[i], level + 1, p);
}

// The tensor star^n_p: glue u to the right of t along their common
// p-truncation. At every level-p node the children of u are appended after
// those of t; below p the trees must agree.
inline Tree star(const Tree& t, const Tree& u, int p) {
  const int n = t.ambient;
  if (u.ambient != n) throw DimensionMismatch("star operands of unequal ambient");
  if (p < 0 || p >= n) throw BadLevel(cat("star level ", p, " with ambient ", n));
  if (truncate_tree(t, n - p) != truncate_tree(u, n - p))
    throw TruncationMismatch(cat("p-truncations differ: ",
                                 tree_str(truncate_tree(t, n - p)), " vs ",
                                 tree_str(truncate_tree(u, n - p))));
  Tree out = t;
  merge_nodes(out.root, u.root, 0, p);
  return out;
}

// Unique decomposition: one degenerate linear factor per leaf, glued along
// the meet heights. Recomposition is the left fold of star over junctions.
struct TreeFactor {
  Tree factor;    // degenerate(1(h), h, ambient), or 1(0)/empty for no leaves
  int junction;   // glue level with the previous factor; -1 for the first
};

inline std::vector<TreeFactor> decompose(const Tree& t) {
  std::vector<TreeFactor> out;
  TreeMatrix m = encode_tree(t);
  if (m.empty_form() || (m.top.size() == 1 && m.top[0] == 0)) {
    out.push_back({Tree{t.ambient, {}}, -1});
    return out;
  }
  for (std::size_t j = 0; j < m.top.size(); ++j)
    out.push_back({embed_tree(linear_tree(m.top[j]), t.ambient),
                   j == 0 ? -1 : m.bot[j - 1]});
  return out;
}

// Evaluates a star word F_0 *_{j_0} F_1 *_{j_1} ... with the convention
// that higher junctions bind tighter (the staircase grouping); a flat left
// fold would glue later factors across unrelated branches.
inline Tree assemble_star_word(const std::vector<Tree>& fs,
                               const std::vector<int>& js, std::size_t lo,
                               std::size_t hi) {
  if (hi - lo == 1) return fs[lo];
  int jmin = js[lo];
  for (std::size_t k = lo; k + 1 < hi; ++k) jmin = std::min(jmin, js[k]);
  Tree acc;
  bool first = true;
  std::size_t seg = lo;
  for (std::size_t k = lo; k < hi; ++k) {
    if (k + 1 == hi || js[k] == jmin) {
      Tree part = assemble_star_word(fs, js, seg, k + 1);
      acc = first ? part : star(acc, part, jmin);
      first = false;
      seg = k + 1;
    }
  }
  return acc;
}

inline Tree recompose(const std::vector<TreeFactor>& fs) {
  if (fs.empty()) throw MalformedMatrix("no factors");
  std::vector<Tree> factors;
  std::vector<int> junctions;
  for (std::size_t j = 0; j < fs.size(); ++j) {
    factors.push_back(fs[j].factor);
    if (j) junctions.push_back(fs[j].junction);
  }
  return assemble_star_word(factors, junctions, 0, factors.size());
}

// ---------------------------------------------------------------------------
// Pasting schemes. A cell of the scheme t̂ is addressed by the path to a
// node plus a gap index in 0..#children: dim = node height, and
//   s(path·i, g) = (path, i-1),  t(path·i, g) = (path, i).
// ---------------------------------------------------------------------------

struct CellAddr {
  NodePath path;
  int gap = 0;

  bool operator==(const CellAddr& o) const {
    return path == o.path && gap == o.gap;
  }
  bool operator<(const CellAddr& o) const {
    if (path.size() != o.path.size()) return path.size() < o.path.size();
    if (path != o.path) return path < o.path;
    return gap < o.gap;
  }
  int dim() const { return static_cast<int>(path.size()); }
};

inline std::string addr_id(const CellAddr& a) {
  std::string s;
  for (std::size_t i = 0; i < a.path.size(); ++i)
    s += (i ? "." : "") + std::to_string(a.path[i]);
  return s + "/" + std::to_string(a.gap);
}

inline std::optional<CellAddr> parse_addr(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return std::nullopt;
  CellAddr a;
  std::string head = s.substr(0, slash);
  std::size_t pos = 0;
  while (pos < head.size()) {
    auto dot = head.find('.', pos);
    std::string part = head.substr(pos, dot == std::string::npos ? std::string::npos
                                                                 : dot - pos);
    if (part.empty()) return std::nullopt;
    a.path.push_back(std::stoi(part));
    if (dot == std::string::npos) break;
    pos = dot + 1;
  }
  a.gap = std::stoi(s.substr(slash + 1));
  return a;
}

inline void collect_cells(const TreeNode& n, NodePath& prefix,
                          std::vector<CellAddr>& out) {
  for (int g = 0; g <= static_cast<int>(n.kids.size()); ++g)
    out.push_back({prefix, g});
  for (std::size_t i = 0; i < n.kids.size(); ++i) {
    prefix.push_back(static_cast<int>(i) + 1);
    collect_cells(n.kids[i], prefix, out);
    prefix.pop_back();
  }
}

// All scheme cells in canonical order (by dimension, then path, then gap).
inline std::vector<CellAddr> scheme_cells(const Tree& t) {
  std::vector<CellAddr> out;
  NodePath prefix;
  collect_cells(t.root, prefix, out);
  std::sort(out.begin(), out.end());
  return out;
}

inline CellAddr addr_src(const CellAddr& a) {
  CellAddr r;
  r.path.assign(a.path.begin(), a.path.end() - 1);
  r.gap = a.path.back() - 1;
  return r;
}

inline CellAddr addr_tgt(const CellAddr& a) {
  CellAddr r;
  r.path.assign(a.path.begin(), a.path.end() - 1);
  r.gap = a.path.back();
  return r;
}

// Realizes t as a finite globular set (the shape of a composable diagram).
inline GlobularSet pasting_scheme(const Tree& t) {
  std::vector<GCell> cells;
  for (const auto& a : scheme_cells(t)) {
    GCell c;
    c.id = addr_id(a);
    c.dim = a.dim();
    if (c.dim >= 1) {
      c.src = addr_id(addr_src(a));
      c.tgt = addr_id(addr_tgt(a));
    }
    cells.push_back(c);
  }
  return validate_globular_set(cells, t.ambient);
}

// ---------------------------------------------------------------------------
// Enumeration: all shapes of height <= dim with at most max_leaves leaves,
// ordered lexicographically by encoded matrix.
// ---------------------------------------------------------------------------

inline std::vector<TreeNode> enumerate_shapes(int height, int max_leaves) {
  // Shapes with at most `max_leaves` leaves counting a childless root as one.
  std::vector<TreeNode> out;
  out.emplace_back();  // childless node
  if (height == 0 || max_leaves <= 0) return out;
  auto subs = enumerate_shapes(height - 1, max_leaves);
  // Children sequences with total leaf budget max_leaves.
  std::vector<std::pair<std::vector<TreeNode>, int>> frontier;
  for (const auto& s : subs) {
    int l = 0;
    std::vector<const TreeNode*> stack{&s};
    while (!stack.empty()) {
      const TreeNode* n = stack.back();
      stack.pop_back();
      if (n->kids.empty()) ++l;
      for (const auto& k : n->kids) stack.push_back(&k);
    }
    frontier.push_back({{s}, l});
  }
  std::vector<std::pair<std::vector<TreeNode>, int>> seqs;
  for (auto& f : frontier)
    if (f.second <= max_leaves) seqs.push_back(f);
  std::size_t grown = 0;
  while (grown < seqs.size()) {
    auto cur = seqs[grown++];
    for (const auto& f : frontier) {
      if (cur.second + f.second <= max_leaves) {
        auto next = cur;
        next.first.push_back(f.first[0]);
        next.second += f.second;
        seqs.push_back(next);
      }
    }
  }
  for (const auto& s : seqs) {
    TreeNode n;
    n.kids = s.first;
    out.push_back(n);
  }
  return out;
}

inline std::vector<Tree> enumerate_trees(int dim, int max_leaves) {
  if (dim < 0 || max_leaves < 0) throw BadLevel("negative enumeration bound");
  std::vector<Tree> out;
  if (dim == 0) {
    out.push_back(linear_tree(0));
    return out;
  }
  for (auto& shape : enumerate_shapes(dim, max_leaves)) {
    Tree t{dim, shape};
    // childless root = fully degenerate, zero leaves: always within budget
    if (!t.root.kids.empty() && leaf_count(t) > max_leaves) continue;
    out.push_back(t);
  }
  std::sort(out.begin(), out.end(), [](const Tree& a, const Tree& b) {
    return encode_tree(a) < encode_tree(b);
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::uint64_t tree_hash(const Tree& t) {
  std::uint64_t h = 1469598103934665603ull;
  hash_mix(h, static_cast<std::uint64_t>(t.ambient));
  TreeMatrix m = encode_tree(t);
  for (int v : m.top) hash_mix(h, static_cast<std::uint64_t>(v) + 17);
  hash_mix(h, 0xabcd);
  for (int v : m.bot) hash_mix(h, static_cast<std::uint64_t>(v) + 17);
  return h;
}

}  // namespace globop
