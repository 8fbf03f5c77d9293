// Tree-indexed pushout operads B^t, coendomorphism cells as serially
// commuting tuples of finitely presented morphisms, their boundaries and
// composition, the composition-system cells mu^n_p with both p=0 variants,
// the c_w generator images, and the contraction-lifting step.

#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "globop/collections.hpp"
#include "globop/contraction.hpp"
#include "globop/core.hpp"
#include "globop/presentation.hpp"
#include "globop/term.hpp"

namespace globop {

enum class MuVariant { Left, Right };

// ---------------------------------------------------------------------------
// B^t: the wide pushout of B^{i_j} copies glued along B^{i'_j} following the
// Grothendieck rows of t. Degenerate trees share the presentation of their
// base (the colimit only sees the leaf/junction rows).
// ---------------------------------------------------------------------------

struct TreeOperad {
  TreeMatrix rows;  // (top, bot); ambient ignored for identification
  PresentationPtr pres;
  std::vector<int> leaf_heights;
  std::vector<int> junctions;
  std::vector<CollectionMorphism> factor_inj;  // C^{i_j} -> base of pres
  // pushout cell name -> (factor index 0-based, original C^{i_j} name)
  std::map<std::string, std::pair<int, std::string>> origin;
  // pushout colour -> (factor, local colour): first factor that hits it
  std::map<int, std::pair<int, int>> colour_origin;
};

using TreeOperadPtr = std::unique_ptr<TreeOperad>;

inline std::string rows_key(const Tree& t) {
  TreeMatrix m = encode_tree(t);
  std::string k;
  for (int v : m.top) k += cat(v, ",");
  k += "|";
  for (int v : m.bot) k += cat(v, ",");
  return k;
}

class CoendCtx {
public:
  Property property;
  Bounds bounds;
  MuVariant variant = MuVariant::Left;

  CoendCtx(Property p, Bounds b) : property(p), bounds(b) {}
  CoendCtx(const CoendCtx&) = delete;

  // B^k as a morphism source, with generators up to `gen_dim`.
  OperadPresentation& source(int k, int gen_dim) {
    auto key = std::make_pair(k, gen_dim);
    auto it = sources_.find(key);
    if (it != sources_.end()) return *it->second;
    Bounds b = bounds;
    b.max_dim = gen_dim;
    auto P = make_presentation(build_complex(k, gen_dim), property, b);
    auto* raw = P.get();
    sources_.emplace(key, std::move(P));
    return *raw;
  }

  TreeOperad& tree_operad(const Tree& t) {
    std::string key = rows_key(t);
    auto it = targets_.find(key);
    if (it != targets_.end()) return *it->second;
    auto top = build(t);
    auto* raw = top.get();
    targets_.emplace(key, std::move(top));
    return *raw;
  }

private:
  std::map<std::pair<int, int>, PresentationPtr> sources_;
  std::map<std::string, TreeOperadPtr> targets_;

  TreeOperadPtr build(const Tree& t) {
    auto out = std::make_unique<TreeOperad>();
    out->rows = encode_tree(t);
    const int md = bounds.max_dim;
    std::vector<int> hs;
    if (!out->rows.empty_form() && !(out->rows.top.size() == 1 && out->rows.top[0] == 0))
      hs = out->rows.top;
    out->leaf_heights = hs;
    out->junctions = out->rows.bot;

    if (hs.empty()) {
      // W^{1^0_n(1(0))} = W^{1(0)} = B^0
      PointedCollection base = build_complex(0, md);
      out->pres = make_presentation(base, property, bounds);
      CollectionMorphism inj = identity_morphism(out->pres->base);
      out->factor_inj.push_back(inj);
      for (const auto& c : out->pres->base.cells)
        out->origin[c.name] = {0, c.name};
      out->colour_origin[1] = {0, 1};
      return out;
    }
    if (hs.size() == 1) {
      PointedCollection base = build_complex(hs[0], md);
      out->pres = make_presentation(base, property, bounds);
      out->factor_inj.push_back(identity_morphism(out->pres->base));
      for (const auto& c : out->pres->base.cells)
        out->origin[c.name] = {0, c.name};
      for (int c = 1; c <= out->pres->base.n_colours; ++c)
        out->colour_origin[c] = {0, c};
      return out;
    }
    // Iterated (right-to-left nesting is immaterial; fold left for stable
    // colour numbering) pushout along the junction complexes.
    auto rename = [](const PointedCollection& C, const std::string& suf) {
      PointedCollection R = C;
      PointedCollection out2;
      out2.n_colours = C.n_colours;
      out2.max_dim = C.max_dim;
      for (auto c : C.cells) {
        c.name += suf;
        if (!c.src.empty()) c.src += suf;
        if (!c.tgt.empty()) c.tgt += suf;
        out2.cells.push_back(c);
      }
      for (int g = 1; g <= C.n_colours; ++g)
        for (int m = 0; m <= C.max_dim; ++m)
          out2.set_unit(g, m, C.unit(g, m) + suf);
      out2.finalize();
      return out2;
    };
    PointedCollection acc = rename(build_complex(hs[0], md), "#1");
    std::vector<CollectionMorphism> inj(hs.size());
    {
      CollectionMorphism m0;
      PointedCollection c0 = build_complex(hs[0], md);
      for (int c = 1; c <= c0.n_colours; ++c) m0.colour_map.push_back(c);
      for (const auto& c : c0.cells) m0.cell_map[c.name] = c.name + "#1";
      inj[0] = m0;
    }
    for (std::size_t j = 1; j < hs.size(); ++j) {
      int jp = out->junctions[j - 1];
      PointedCollection A = build_complex(jp, md);
      PointedCollection Bj = build_complex(hs[j], md);
      // kappa-composite into the accumulated left part (its last factor),
      // delta-composite into the fresh right factor.
      CollectionMorphism kap = compose_morphisms(
          inj[j - 1], coface_composite(jp, hs[j - 1], Side::target, md));
      CollectionMorphism del = coface_composite(jp, hs[j], Side::source, md);
      CollectionPushout po = pushout_collections(A, acc, Bj, kap, del, "",
                                                 cat("#", j + 1));
      for (std::size_t r = 0; r < j; ++r)
        inj[r] = compose_morphisms(po.in1, inj[r]);
      inj[j] = po.in2;
      acc = po.result;
    }
    out->pres = make_presentation(acc, property, bounds);
    out->factor_inj = inj;
    for (std::size_t j = 0; j < hs.size(); ++j) {
      PointedCollection Cj = build_complex(hs[j], md);
      for (const auto& c : Cj.cells) {
        const std::string& nm = inj[j].at(c.name);
        if (!out->origin.count(nm)) out->origin[nm] = {static_cast<int>(j), c.name};
      }
      for (int lc = 1; lc <= Cj.n_colours; ++lc) {
        int nc = inj[j].colour(lc);
        if (!out->colour_origin.count(nc))
          out->colour_origin[nc] = {static_cast<int>(j), lc};
      }
    }
    return out;
  }
};

// ---------------------------------------------------------------------------
// Tree cofaces delta^t, kappa^t : B^{truncate t} -> B^t, by leaf blocks.
// ---------------------------------------------------------------------------

struct TreeCofaces {
  OperadMorphism delta, kappa;
};

inline OperadMorphism operad_morphism_from_collection(
    const CollectionMorphism& f, OperadPresentation& S, OperadPresentation& T) {
  return induced_morphism(f, S, T);
}

inline TreeCofaces tree_cofaces(CoendCtx& ctx, const Tree& t) {
  const int n = t.ambient;
  if (n < 1) throw BadLevel("cofaces of a 0-tree");
  Tree pt = truncate_tree(t, 1);
  TreeOperad& Tt = ctx.tree_operad(t);
  TreeOperad& Tp = ctx.tree_operad(pt);
  const int md = ctx.bounds.max_dim;

  // Blocks: project each t-leaf to its truncation; height-n leaves project
  // to their parent and group with siblings.
  std::vector<std::pair<int, int>> blocks;  // [first,last] t-leaf index
  {
    auto leaves = tree_leaves(t);
    std::vector<NodePath> proj;
    if (!t.root.kids.empty()) {
      for (const auto& p : leaves) {
        NodePath q = p;
        if (static_cast<int>(q.size()) == n) q.pop_back();
        proj.push_back(q);
      }
      for (std::size_t i = 0; i < proj.size(); ++i) {
        if (!blocks.empty() && proj[i] == proj[i - 1])
          blocks.back().second = static_cast<int>(i);
        else
          blocks.push_back({static_cast<int>(i), static_cast<int>(i)});
      }
    } else {
      blocks.push_back({0, 0});  // degenerate: B^{pt} = B^{t}
    }
  }
  if (Tp.factor_inj.size() != blocks.size() && !Tp.leaf_heights.empty())
    throw GluingMismatch("truncated factor count does not match leaf blocks");

  auto build_side = [&](Side side) {
    OperadMorphism m;
    m.source = Tp.pres.get();
    m.target = Tt.pres.get();
    m.gen_max_dim = md;
    m.colour_map.assign(Tp.pres->base.n_colours, 0);
    std::vector<int> src_heights =
        Tp.leaf_heights.empty() ? std::vector<int>{0} : Tp.leaf_heights;
    std::vector<int> tgt_heights =
        Tt.leaf_heights.empty() ? std::vector<int>{0} : Tt.leaf_heights;
    for (std::size_t k = 0; k < blocks.size(); ++k) {
      int leaf = side == Side::source ? blocks[k].first : blocks[k].second;
      int hk = src_heights[k];
      int hl = tgt_heights[leaf];
      CollectionMorphism route = compose_morphisms(
          Tt.factor_inj[leaf], coface_composite(hk, hl, side, md));
      PointedCollection Ck = build_complex(hk, md);
      for (const auto& c : Ck.cells) {
        std::string from = Tp.factor_inj[k].at(c.name);
        TermId img = Tt.pres->arena.term_of_cell(route.at(c.name));
        m.gen_images[from] = img;  // merged cells receive consistent images
      }
      for (int lc = 1; lc <= Ck.n_colours; ++lc)
        m.colour_map[Tp.factor_inj[k].colour(lc) - 1] = route.colour(lc);
    }
    // Units are mapped through the colour map; drop them from gen images.
    std::map<std::string, TermId> gi;
    for (const auto& [name, img] : m.gen_images)
      if (!Tp.pres->base.is_unit(name)) gi[name] = img;
    m.gen_images = std::move(gi);
    return m;
  };
  return {build_side(Side::source), build_side(Side::target)};
}

// ---------------------------------------------------------------------------
// Coend cells.
// ---------------------------------------------------------------------------

struct CoendLevel {
  OperadMorphism minus, plus;
};

struct CoendCell {
  int level = 0;
  Tree tree;                      // ambient = level
  OperadMorphism top;             // B^level -> B^tree
  std::vector<CoendLevel> lower;  // [0] = level-1, ..., back() = level 0
};

inline bool morphisms_equal(const OperadMorphism& a, const OperadMorphism& b) {
  if (a.target != b.target) return false;
  if (a.colour_map != b.colour_map) return false;
  if (a.gen_max_dim != b.gen_max_dim) return false;
  return a.gen_images == b.gen_images;
}

inline bool cells_equal(const CoendCell& a, const CoendCell& b) {
  if (a.level != b.level || rows_key(a.tree) != rows_key(b.tree)) return false;
  if (!morphisms_equal(a.top, b.top)) return false;
  if (a.lower.size() != b.lower.size()) return false;
  for (std::size_t i = 0; i < a.lower.size(); ++i)
    if (!morphisms_equal(a.lower[i].minus, b.lower[i].minus) ||
        !morphisms_equal(a.lower[i].plus, b.lower[i].plus))
      return false;
  return true;
}

// Drops the top map; the chosen side becomes the new top.
inline CoendCell coend_boundary(const CoendCell& c, Side side) {
  if (c.level < 1) throw DimensionMismatch("boundary of a level-0 cell");
  CoendCell out;
  out.level = c.level - 1;
  out.tree = truncate_tree(c.tree, 1);
  out.top = side == Side::source ? c.lower[0].minus : c.lower[0].plus;
  out.lower.assign(c.lower.begin() + 1, c.lower.end());
  return out;
}

struct SerialReport {
  std::vector<std::string> violations;
  int equations_checked = 0;
  bool clean() const { return violations.empty(); }
};

// One serial equation: upper o collection-coface == tree-coface o lower,
// checked generator by generator on the common domain.
inline void check_serial_equation(CoendCtx& ctx, const OperadMorphism& upper,
                                  const OperadMorphism& lower,
                                  int src_level, Side side,
                                  const OperadMorphism& tree_cf,
                                  SerialReport& rep, const std::string& where) {
  int dmax = std::min(upper.gen_max_dim, lower.gen_max_dim);
  CollectionMorphism cf = coface(src_level, side, upper.source->base.max_dim);
  PointedCollection Ck = build_complex(src_level, dmax);
  for (const auto& g : Ck.cells) {
    TermId lhs, rhs;
    try {
      TermId up_src = upper.source->arena.term_of_cell(cf.at(g.name));
      lhs = apply_morphism(upper, up_src);
      TermId low = apply_morphism(lower, lower.source->arena.term_of_cell(g.name));
      rhs = apply_morphism(tree_cf, low);
    } catch (const Error& e) {
      rep.violations.push_back(cat(where, " ", g.name, ": ", e.what()));
      continue;
    }
    ++rep.equations_checked;
    if (lhs != rhs)
      rep.violations.push_back(
          cat(where, " fails at ", g.name, ": ",
              term_str(upper.target->arena, lhs), " != ",
              term_str(upper.target->arena, rhs)));
  }
}

inline SerialReport check_serial(CoendCtx& ctx, const CoendCell& c) {
  SerialReport rep;
  Tree cur = c.tree;
  const OperadMorphism* minus_up = &c.top;
  const OperadMorphism* plus_up = &c.top;
  for (int k = c.level - 1; k >= 0; --k) {
    TreeCofaces tc = tree_cofaces(ctx, cur);
    const CoendLevel& lv = c.lower[c.level - 1 - k];
    check_serial_equation(ctx, *minus_up, lv.minus, k, Side::source, tc.delta,
                          rep, cat("level ", k + 1, " minus/delta"));
    check_serial_equation(ctx, *plus_up, lv.plus, k, Side::target, tc.kappa,
                          rep, cat("level ", k + 1, " plus/kappa"));
    if (minus_up != plus_up) {
      // Crossed equations: both upper signs restrict to the same lower map.
      check_serial_equation(ctx, *plus_up, lv.minus, k, Side::source, tc.delta,
                            rep, cat("level ", k + 1, " plus/delta"));
      check_serial_equation(ctx, *minus_up, lv.plus, k, Side::target, tc.kappa,
                            rep, cat("level ", k + 1, " minus/kappa"));
    }
    cur = truncate_tree(cur, 1);
    minus_up = &lv.minus;
    plus_up = &lv.plus;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Identity cells and the composition system.
// ---------------------------------------------------------------------------

inline OperadMorphism identity_into(CoendCtx& ctx, int k) {
  Tree lk = linear_tree(k);
  TreeOperad& T = ctx.tree_operad(lk);
  OperadPresentation& S = ctx.source(k, ctx.bounds.max_dim);
  CollectionMorphism idm;
  for (int c = 1; c <= S.base.n_colours; ++c) idm.colour_map.push_back(c);
  for (const auto& cell : S.base.cells) idm.cell_map[cell.name] = cell.name;
  return induced_morphism(idm, S, *T.pres);
}

inline CoendCell identity_cell(CoendCtx& ctx, int m) {
  CoendCell c;
  c.level = m;
  c.tree = linear_tree(m);
  c.top = identity_into(ctx, m);
  for (int k = m - 1; k >= 0; --k) {
    OperadMorphism f = identity_into(ctx, k);
    c.lower.push_back({f, f});
  }
  return c;
}

// gamma(a; b) with the argument order resolved by typing.
inline TermId typed_compose(TermArena& A, TermId a, TermId b) {
  try {
    return A.gamma1(a, b);
  } catch (const Error&) {
  }
  try {
    return A.gamma1(b, a);
  } catch (const Error&) {
  }
  throw TypingUnresolvable(cat("no order of gamma(", term_str(A, a), "; ",
                               term_str(A, b), ") typechecks"));
}

// a *[n,p] b as a pasting, in whichever order is boundary-composable.
inline TermPasting typed_star_pair(TermArena& A, TermId a, TermId b, int p) {
  TermPasting ea = A.eta_pasting(a);
  TermPasting eb = A.eta_pasting(b);
  int n = std::max(A.dim(a), A.dim(b));
  ea = degenerate_diagram(ea, n);
  eb = degenerate_diagram(eb, n);
  try {
    return A.star_pastings(ea, eb, p);
  } catch (const Error&) {
  }
  return A.star_pastings(eb, ea, p);
}

// The composition-system cell mu^n_p : B^n -> B^n u_{B^p} B^n (0 <= p < n <= 2).
inline CoendCell make_mu(CoendCtx& ctx, int n, int p,
                         MuVariant variant = MuVariant::Left) {
  if (n < 1 || p < 0 || p >= n)
    throw BadLevel(cat("mu(", n, ",", p, ")"));
  if (n > 2)
    throw Unsupported("mu^n_p implemented for n <= 2 (images of the lower "
                      "transformation symbols are not pinned down beyond)");
  Tree t = star(linear_tree(n), linear_tree(n), p);
  TreeOperad& T = ctx.tree_operad(t);
  OperadPresentation& S = ctx.source(n, ctx.bounds.max_dim);
  TermArena& A = T.pres->arena;

  OperadMorphism top;
  top.source = &S;
  top.target = T.pres.get();
  top.gen_max_dim = ctx.bounds.max_dim;
  auto g1 = [&](const std::string& nm) { return A.term_of_cell(T.factor_inj[0].at(nm)); };
  auto g2 = [&](const std::string& nm) { return A.term_of_cell(T.factor_inj[1].at(nm)); };
  if (p >= 1) {
    top.colour_map = {1, 2};
  } else {
    top.colour_map = {T.factor_inj[0].colour(1), T.factor_inj[1].colour(2)};
  }
  const int md = ctx.bounds.max_dim;
  for (const auto& c : S.base.cells) {
    if (S.base.is_unit(c.name)) continue;
    TermId img = kNoTerm;
    if (c.name.rfind("mu(", 0) == 0) {
      img = g1(c.name);
    } else if (c.name.rfind("nu(", 0) == 0) {
      img = p >= 1 ? g1(c.name) : g2(c.name);
    } else if (c.name[0] == 'F') {
      img = p >= 1 ? g1(c.name) : typed_compose(A, g2(c.name), g1(c.name));
    } else if (c.name[0] == 'H') {
      img = p >= 1 ? g2(c.name) : typed_compose(A, g2(c.name), g1(c.name));
    } else if (c.name == "tau") {
      if (p >= 1) {
        // gamma(mu of the target colour; tau_1 *[1,0] tau_2)
        TermPasting pp = typed_star_pair(A, g1("tau"), g2("tau"), p - 1);
        img = A.gamma(g1(nu_name(n - 1, p - 1)), pp);
      } else {
        TermId tau1 = g1("tau"), tau2 = g2("tau");
        TermId whisk_a, whisk_b;
        if (variant == MuVariant::Left) {
          // sigma(G^0) and H^{n-1}(tau)
          whisk_a = typed_compose(A, tau2, g1(H_name(0)));
          whisk_b = typed_compose(A, g2(F_name(n - 1)), tau1);
        } else {
          // K^{n-1}(tau) and sigma(F^0)
          whisk_a = typed_compose(A, g2(H_name(n - 1)), tau1);
          whisk_b = typed_compose(A, tau2, g1(F_name(0)));
        }
        TermPasting pp = typed_star_pair(A, whisk_a, whisk_b, 0);
        img = A.gamma(g2(nu_name(n - 1, 0)), pp);
      }
    } else {
      throw Unsupported(cat("no mu^n_p image rule for generator ", c.name));
    }
    top.gen_images[c.name] = img;
    (void)md;
  }

  CoendCell cell;
  cell.level = n;
  cell.tree = t;
  cell.top = top;
  if (n == 2) {
    if (p == 1) {
      OperadMorphism idm = identity_into(ctx, 1);
      cell.lower.push_back({idm, idm});
    } else {
      CoendCell sub = make_mu(ctx, 1, 0, variant);
      cell.lower.push_back({sub.top, sub.top});
    }
  }
  OperadMorphism id0 = identity_into(ctx, 0);
  cell.lower.push_back({id0, id0});
  return cell;
}

// c_w on the generators of C^0: units to identity cells, compositions to
// the mu cells.
inline CoendCell cw_image(CoendCtx& ctx, const std::string& gen) {
  if (gen.rfind("u@1(", 0) == 0) {
    int m = std::stoi(gen.substr(4, gen.size() - 5));
    return identity_cell(ctx, m);
  }
  if (gen.rfind("mu(", 0) == 0) {
    auto comma = gen.find(',');
    int m = std::stoi(gen.substr(3, comma - 3));
    int p = std::stoi(gen.substr(comma + 1, gen.size() - comma - 2));
    return make_mu(ctx, m, p, ctx.variant);
  }
  throw MissingReference(cat("c_w is defined on C^0 generators, got ", gen));
}

// ---------------------------------------------------------------------------
// Contraction lifting (the constructive step of the coend-contractibility
// proposition), for n <= 2. Returns the lifted cell plus the witness: the
// connecting cell found for the images of the top-dimensional new-family
// generator of C^{n-1} (u_0 for C^0, F1 for C^1).
// ---------------------------------------------------------------------------

struct LiftResult {
  CoendCell cell;
  TermId witness = kNoTerm;  // in the target arena
};

inline LiftResult lift_contraction(CoendCtx& ctx, const OperadMorphism& fminus,
                                   const OperadMorphism& fplus, const Tree& t) {
  if (fminus.target != fplus.target)
    throw GluingMismatch("lift inputs into different operads");
  OperadPresentation& T = *fminus.target;
  TermArena& A = T.arena;
  if (!has_unit_reflexes(T.property) && T.property != Property::S)
    throw ContractionUnavailable(
        "target property has no contractions or reflexivities");
  const int n = fminus.source->base.n_colours == 1 ? 1 : 2;

  if (n == 1) {
    // Diagonal pair of maps out of B^0.
    if (!morphisms_equal(fminus, fplus))
      throw NotEligible("level-0 pairs are eligible only on the diagonal");
    if (encode_tree(t).top != std::vector<int>{1})
      throw Unsupported("n=1 lift implemented over t = 1(1)");
    TreeOperad& TT = ctx.tree_operad(t);
    if (TT.pres.get() != &T) throw GluingMismatch("inputs not into B^t");
    OperadPresentation& S1 = ctx.source(1, 1);
    OperadMorphism top;
    top.source = &S1;
    top.target = &T;
    top.gen_max_dim = 1;
    top.colour_map = {1, 2};
    for (const auto& c : S1.base.cells) {
      if (S1.base.is_unit(c.name)) continue;
      top.gen_images[c.name] = A.term_of_cell(c.name);
    }
    TermId u0 = apply_morphism(fminus, fminus.source->arena.unit(1, 0));
    ContractionResult w = find_contraction(T, u0, u0);
    if (!w.found()) throw ContractionUnavailable("diagonal has no witness");
    LiftResult out;
    out.cell.level = 1;
    out.cell.tree = t;
    out.cell.top = top;
    OperadMorphism f0 = fminus;
    // level-0 maps: the factorization of the inputs through the 0-end
    OperadMorphism id0;
    {
      OperadPresentation& S0 = ctx.source(0, 0);
      Tree l0 = linear_tree(0);
      TreeOperad& T0 = ctx.tree_operad(l0);
      CollectionMorphism idm;
      idm.colour_map = {1};
      for (const auto& cell : S0.base.cells) idm.cell_map[cell.name] = cell.name;
      id0 = induced_morphism(idm, S0, *T0.pres);
    }
    out.cell.lower.push_back({id0, id0});
    out.witness = w.cell;
    return out;
  }

  // n = 2: inputs B^1 -> B^t classifying a parallel pair.
  if (fminus.source != fplus.source)
    throw GluingMismatch("lift inputs with different sources");
  if (fminus.colour_map != fplus.colour_map)
    throw GluingMismatch("lift inputs with different colour maps");
  OperadPresentation& S1 = *fminus.source;
  // Parallelism hypothesis: agreement after both cofaces from level 0.
  for (Side side : {Side::source, Side::target}) {
    CollectionMorphism cf = coface(0, side, S1.base.max_dim);
    PointedCollection C0 = build_complex(0, S1.base.max_dim);
    for (const auto& g : C0.cells) {
      TermId a = apply_morphism(fminus, S1.arena.term_of_cell(cf.at(g.name)));
      TermId b = apply_morphism(fplus, S1.arena.term_of_cell(cf.at(g.name)));
      if (a != b)
        throw NotEligible(cat("inputs disagree after a coface at ", g.name));
    }
  }
  OperadPresentation& S2 = ctx.source(2, 1);
  OperadMorphism top;
  top.source = &S2;
  top.target = &T;
  top.gen_max_dim = 1;
  top.colour_map = fminus.colour_map;
  std::map<TermId, TermId> memo_m, memo_p;
  auto fm = [&](const std::string& name) {
    return apply_morphism(fminus, S1.arena.term_of_cell(name), &memo_m);
  };
  auto fp = [&](const std::string& name) {
    return apply_morphism(fplus, S1.arena.term_of_cell(name), &memo_p);
  };
  for (const auto& c : S2.base.cells) {
    if (S2.base.is_unit(c.name) || c.dim > 1) continue;
    if (c.name == "tau") continue;
    if (c.name[0] == 'H')
      top.gen_images[c.name] = fp(F_name(c.dim));
    else
      top.gen_images[c.name] = fm(c.name);
  }
  ContractionResult principal = find_contraction(T, fm(F_name(0)), fp(F_name(0)));
  if (!principal.found())
    throw ContractionUnavailable("no connecting cell for the principal images");
  top.gen_images["tau"] = principal.cell;

  LiftResult out;
  out.cell.level = 2;
  out.cell.tree = embed_tree(t, 2);
  out.cell.top = top;
  out.cell.lower.push_back({fminus, fplus});
  {
    OperadPresentation& S0 = ctx.source(0, 0);
    Tree pt = truncate_tree(t, 1);
    TreeOperad& T0 = ctx.tree_operad(pt);
    CollectionMorphism idm;
    idm.colour_map = {1};
    for (const auto& cell : S0.base.cells) idm.cell_map[cell.name] = cell.name;
    OperadMorphism f0 = induced_morphism(idm, S0, *T0.pres);
    out.cell.lower.push_back({f0, f0});
  }
  ContractionResult w = find_contraction(T, fm(F_name(1)), fp(F_name(1)));
  if (w.found()) out.witness = w.cell;
  return out;
}

// ---------------------------------------------------------------------------
// Operadic composition of coend cells (full generic glue at level 1,
// identity laws at every level).
// ---------------------------------------------------------------------------

inline bool is_identity_cell(CoendCtx& ctx, const CoendCell& c) {
  return cells_equal(c, identity_cell(ctx, c.level));
}

inline CoendCell coend_compose(CoendCtx& ctx, const CoendCell& outer,
                               const std::vector<CoendCell>& inners) {
  TreeOperad& Tt = ctx.tree_operad(outer.tree);
  std::size_t nfac = std::max<std::size_t>(Tt.leaf_heights.size(), 1);
  if (inners.size() != nfac)
    throw GluingMismatch(cat("expected ", nfac, " inner cells, got ",
                             inners.size()));
  bool all_id = true;
  for (const auto& c : inners)
    if (!is_identity_cell(ctx, c)) all_id = false;
  if (all_id) return outer;
  if (is_identity_cell(ctx, outer) && inners.size() == 1) return inners[0];
  if (outer.level != 1)
    throw Unsupported("generic coend composition implemented at level 1");

  // Composite tree: substitute the inner trees into the leaves of t.
  std::map<CellAddr, Tree> tops;
  auto tcs = top_cells(outer.tree);
  for (std::size_t j = 0; j < tcs.size(); ++j) tops[tcs[j]] = inners[j].tree;
  TreeGraft g = graft_trees(outer.tree, tops);
  TreeOperad& Tc = ctx.tree_operad(g.composite);

  // Glue morphism B^t -> B^{composite}: factor j routes through inner_j's
  // top and the block inclusion of inner_j's factors.
  OperadMorphism glue;
  glue.source = Tt.pres.get();
  glue.target = Tc.pres.get();
  glue.gen_max_dim = ctx.bounds.max_dim;
  glue.colour_map.assign(Tt.pres->base.n_colours, 0);
  std::size_t offset = 0;
  for (std::size_t j = 0; j < nfac; ++j) {
    const CoendCell& in = inners[j];
    TreeOperad& Tj = ctx.tree_operad(in.tree);
    std::size_t jfac = std::max<std::size_t>(Tj.leaf_heights.size(), 1);
    // Block inclusion B^{t_j} -> B^{composite} on generators.
    OperadMorphism incl;
    incl.source = Tj.pres.get();
    incl.target = Tc.pres.get();
    incl.gen_max_dim = ctx.bounds.max_dim;
    incl.colour_map.assign(Tj.pres->base.n_colours, 0);
    for (std::size_t r = 0; r < jfac; ++r) {
      PointedCollection Cr = build_complex(
          Tj.leaf_heights.empty() ? 0 : Tj.leaf_heights[r], ctx.bounds.max_dim);
      for (const auto& cell : Cr.cells) {
        std::string from = Tj.factor_inj[r].at(cell.name);
        std::string to = Tc.factor_inj[offset + r].at(cell.name);
        if (!Tj.pres->base.is_unit(from))
          incl.gen_images[from] = Tc.pres->arena.term_of_cell(to);
      }
      for (int lc = 1; lc <= Cr.n_colours; ++lc)
        incl.colour_map[Tj.factor_inj[r].colour(lc) - 1] =
            Tc.factor_inj[offset + r].colour(lc);
    }
    // Route factor j of B^t through the inner top, then include.
    PointedCollection Cj = build_complex(
        Tt.leaf_heights.empty() ? 0 : Tt.leaf_heights[j], ctx.bounds.max_dim);
    std::map<TermId, TermId> memo;
    for (const auto& cell : Cj.cells) {
      std::string from = Tt.factor_inj[j].at(cell.name);
      if (Tt.pres->base.is_unit(from)) continue;
      TermId through = apply_morphism(
          in.top, in.top.source->arena.term_of_cell(cell.name), &memo);
      glue.gen_images[from] = apply_morphism(incl, through);
    }
    for (int lc = 1; lc <= Cj.n_colours; ++lc) {
      int via = in.top.colour(lc);
      glue.colour_map[Tt.factor_inj[j].colour(lc) - 1] = incl.colour(via);
    }
    offset += jfac;
  }

  CoendCell out;
  out.level = outer.level;
  out.tree = g.composite;
  // top = glue o outer.top
  out.top.source = outer.top.source;
  out.top.target = Tc.pres.get();
  out.top.gen_max_dim = outer.top.gen_max_dim;
  for (int c : outer.top.colour_map) out.top.colour_map.push_back(glue.colour(c));
  std::map<TermId, TermId> memo;
  for (const auto& [name, img] : outer.top.gen_images)
    out.top.gen_images[name] = apply_morphism(glue, img, &memo);
  // level 0: identities into B^0 on both sides
  {
    OperadPresentation& S0 = ctx.source(0, 0);
    TreeOperad& T0 = ctx.tree_operad(truncate_tree(g.composite, 1));
    CollectionMorphism idm;
    idm.colour_map = {1};
    for (const auto& cell : S0.base.cells) idm.cell_map[cell.name] = cell.name;
    OperadMorphism f0 = induced_morphism(idm, S0, *T0.pres);
    out.lower.push_back({f0, f0});
  }
  return out;
}

}  // namespace globop
