// Root cells, the loop property, eligible-pair enumeration, contraction
// search, and the property-P free constructions: gamma closure for Id,
// reflexive units for Id_u, dimensionwise contraction saturation for C,
// strictness congruence for S and S_u.

#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "globop/core.hpp"
#include "globop/presentation.hpp"
#include "globop/term.hpp"

namespace globop {

inline bool is_root(const TermArena& A, TermId t) {
  if (A.dim(t) < 1) throw DimensionMismatch("root cells have dim >= 1");
  return A.is_root_term(t);
}

inline bool has_loop(const TermArena& A, TermId x, TermId y) {
  if (A.dim(x) != A.dim(y) || A.dim(x) < 1)
    throw DimensionMismatch("loop property needs equal dims >= 1");
  return A.loop_property(x, y);
}

struct PairClass {
  TermId x = kNoTerm, y = kNoTerm;
  int dim = 0;
  bool is_root_pair = false;
  bool has_loop = false;
  bool eligible = false;
};

inline PairClass classify_pair(const OperadPresentation& P, TermId x, TermId y) {
  const TermArena& A = P.arena;
  PairClass pc;
  pc.x = x;
  pc.y = y;
  pc.dim = A.dim(x);
  if (A.dim(y) != pc.dim) throw DimensionMismatch("pair of unequal dims");
  if (pc.dim == 0) {
    pc.eligible = has_congruence(P.property) ? P.cls(x) == P.cls(y) : x == y;
    return pc;
  }
  pc.is_root_pair = A.is_root_term(x) && A.is_root_term(y);
  pc.has_loop = P.two_way_loop ? A.loop_property_two_way(x, y)
                               : A.loop_property(x, y);
  bool par = P.parallel_mod(x, y);
  bool same_arity = A.arity(x) == A.arity(y);
  bool same_colour = A.out_colour(x) == A.out_colour(y);
  pc.eligible = par && same_arity && same_colour &&
                (!pc.is_root_pair || pc.has_loop);
  return pc;
}

// The set C~(k) over the stored cells, with classification flags, in
// deterministic order. k = 0 yields only the diagonal.
inline std::vector<PairClass> eligible_pairs(const OperadPresentation& P, int k,
                                             bool include_rejected = false) {
  if (k >= P.bounds.max_dim)
    throw BadLevel(cat("pair dimension ", k, " at max_dim ", P.bounds.max_dim));
  if (!P.enumerated) throw OutOfBounds("presentation not enumerated");
  std::vector<PairClass> out;
  const auto& cs = P.cells[k];
  if (k == 0) {
    for (TermId x : cs) {
      PairClass pc = classify_pair(P, x, x);
      if (pc.eligible || include_rejected) out.push_back(pc);
    }
    return out;
  }
  for (TermId x : cs)
    for (TermId y : cs) {
      PairClass pc = classify_pair(P, x, y);
      if (pc.eligible || include_rejected) out.push_back(pc);
    }
  return out;
}

// Whisker strip: factor t = gamma(body; pulled) where `pulled` is the
// pasting of the subterms feeding the arity leaves (maximal descent; a
// subterm that strips to itself is pulled whole and replaced by the unit on
// its output colour). Two terms with a common pulled pasting contract by
// contracting their bodies.
struct StripResult {
  TermId body = kNoTerm;
  TermPasting pulled;  // over arity(body).tree
};

inline StripResult strip_whiskers(TermArena& A, TermId t) {
  const TermData dt = A.data(t);
  StripResult out;
  if (dt.kind == TermKind::Unit) {
    out.body = t;
    out.pulled = A.eta_pasting(t);
    return out;
  }
  std::map<CellAddr, TermId> new_tops;
  std::map<CellAddr, TermPasting> pulled;
  for (const auto& a : top_cells(dt.inner.shape)) {
    TermId M = dt.inner.labels.at(a);
    if (A.is_unit(M)) {
      new_tops[a] = M;
      pulled[a] = A.eta_pasting(M);
      continue;
    }
    StripResult sub = strip_whiskers(A, M);
    if (sub.body != M) {
      new_tops[a] = sub.body;
      pulled[a] = sub.pulled;
    } else {
      new_tops[a] = A.unit(A.out_colour(M), A.dim(M));
      pulled[a] = A.eta_pasting(M);
    }
  }
  TermOps ops = A.ops();
  TermPasting newP = diagram_from_tops(ops, dt.inner.shape, new_tops);
  TermId head_bare;
  switch (dt.hk) {
    case HeadKind::Gen: head_bare = A.generator(dt.gen); break;
    case HeadKind::Contr: head_bare = A.contraction(dt.cx, dt.cy); break;
    case HeadKind::Refl:
      head_bare = A.reflex_unit(dt.refl_p, dt.dim, dt.colour);
      break;
  }
  out.body = A.gamma(head_bare, newP);
  // Assemble the pulled blocks along the body's arity graft.
  DiagramOps<TermId, TermOps> dops{ops};
  Diagram<TermPasting> QQ = diagram_from_tops(dops, newP.shape, pulled);
  out.pulled = substitute(ops, QQ);
  return out;
}

// The connecting cell for an eligible pair.
//  - C: reflex whisker for the diagonal; when the whisker strips of the two
//    terms pull the same pasting, the contraction of the stripped bodies
//    composed back with the (degenerate) pulled pasting — this is how the
//    coherence cells of the worked pushout example arise from the factor's
//    contractibility plus the operadic multiplication; otherwise the
//    interned contraction token.
//  - Id_u: reflex whisker on the diagonal, absent otherwise.
//  - S_u: reflexivity cell on the congruence class representative.
//  - S: congruent pairs have no witness cell (no reflexivities); reported.
//  - Id: always absent.
inline ContractionResult find_contraction(OperadPresentation& P, TermId x,
                                          TermId y) {
  TermArena& A = P.arena;
  PairClass pc = classify_pair(P, x, y);
  if (!pc.eligible)
    throw NotEligible(cat(term_str(A, x), " / ", term_str(A, y)));
  const int k = A.dim(x);
  ContractionResult r;
  switch (P.property) {
    case Property::Id:
      r.status = ContractionResult::Status::Absent;
      return r;
    case Property::IdU:
      if (x == y) {
        r.status = ContractionResult::Status::Found;
        r.cell = A.reflex(k, k + 1, x);
      }
      return r;
    case Property::S:
      r.status = P.equal_terms(x, y)
                     ? ContractionResult::Status::CongruentNoWitness
                     : ContractionResult::Status::Absent;
      return r;
    case Property::Su:
      if (P.equal_terms(x, y)) {
        TermId rep = static_cast<TermId>(std::min(P.cls(x), P.cls(y)));
        r.status = ContractionResult::Status::Found;
        r.cell = A.reflex(k, k + 1, rep);
      }
      return r;
    case Property::C:
      break;
  }
  r.status = ContractionResult::Status::Found;
  if (x == y) {
    r.cell = A.reflex(k, k + 1, x);
    return r;
  }
  StripResult sx = strip_whiskers(A, x);
  StripResult sy = strip_whiskers(A, y);
  if ((sx.body != x || sy.body != y) && sx.pulled == sy.pulled &&
      sx.body != sy.body && A.dim(sx.body) == k) {
    PairClass body_pc = classify_pair(P, sx.body, sy.body);
    if (body_pc.eligible) {
      ContractionResult w = find_contraction(P, sx.body, sy.body);
      if (w.found()) {
        r.cell = A.gamma(w.cell, degenerate_diagram(sx.pulled, k + 1));
        return r;
      }
    }
  }
  r.cell = A.contraction(x, y);
  return r;
}

// ---------------------------------------------------------------------------
// The free functors, dimension-truncated.
// ---------------------------------------------------------------------------

namespace detail {

inline void saturate_contractions(OperadPresentation& P) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int k = 0; k + 1 <= P.bounds.max_dim; ++k) {
      std::vector<TermId> snapshot = P.cells[k];
      for (TermId x : snapshot)
        for (TermId y : snapshot) {
          if (x == y) continue;  // diagonal is connected by the reflex whisker
          PairClass pc = classify_pair(P, x, y);
          if (!pc.eligible) continue;
          TermId tok = P.arena.contraction(x, y);
          if (P.storable(tok) && !P.stored(tok)) {
            P.store(tok);
            changed = true;
          }
        }
    }
    if (changed) gamma_closure(P);
  }
}

inline std::vector<std::uint32_t> class_signature(OperadPresentation& P,
                                                  TermId t) {
  const TermData& d = P.arena.data(t);
  std::vector<std::uint32_t> k;
  if (d.kind == TermKind::Unit) {
    k = {0u, static_cast<std::uint32_t>(d.colour),
         static_cast<std::uint32_t>(d.dim)};
    return k;
  }
  switch (d.hk) {
    case HeadKind::Gen:
      k = {1u, P.arena.generator(d.gen)};
      break;
    case HeadKind::Contr:
      k = {2u, static_cast<std::uint32_t>(P.cls(d.cx)),
           static_cast<std::uint32_t>(P.cls(d.cy))};
      break;
    case HeadKind::Refl:
      k = {3u, static_cast<std::uint32_t>(d.refl_p),
           static_cast<std::uint32_t>(d.dim),
           static_cast<std::uint32_t>(d.colour)};
      break;
  }
  TreeMatrix m = encode_tree(d.inner.shape);
  k.push_back(static_cast<std::uint32_t>(m.ambient));
  for (int v : m.top) k.push_back(static_cast<std::uint32_t>(v));
  k.push_back(0xffffffffu);
  for (int v : m.bot) k.push_back(static_cast<std::uint32_t>(v));
  k.push_back(0xffffffffu);
  for (const auto& [a, l] : d.inner.labels)
    k.push_back(static_cast<std::uint32_t>(P.cls(l)));
  return k;
}

inline void congruence_fixpoint(OperadPresentation& P) {
  bool changed = true;
  while (changed) {
    changed = false;
    // (a) merge every eligible pair
    for (int k = 0; k <= P.bounds.max_dim; ++k)
      for (TermId x : P.cells[k])
        for (TermId y : P.cells[k]) {
          if (x >= y) continue;
          PairClass pc = classify_pair(P, x, y);
          if (pc.eligible && P.merge(x, y)) changed = true;
        }
    // (b) congruence closure: terms built identically from congruent parts
    bool merged = true;
    while (merged) {
      merged = false;
      std::map<std::vector<std::uint32_t>, TermId> sig;
      for (int k = 0; k <= P.bounds.max_dim; ++k)
        for (TermId t : P.cells[k]) {
          auto s = class_signature(P, t);
          auto it = sig.find(s);
          if (it == sig.end())
            sig[s] = t;
          else if (P.merge(it->second, t))
            merged = changed = true;
        }
    }
  }
}

}  // namespace detail

// Id: gamma closure of the generators. Id_u: additionally closed under the
// unit reflexes. C: Id_u closure then contraction saturation to fixpoint.
// S: Id closure then the strictness congruence. S_u: Id_u closure then the
// strictness congruence.
inline PresentationPtr free_operad(const PointedCollection& base,
                                   Property property, Bounds bounds,
                                   bool two_way_loop = false) {
  auto P = std::make_unique<OperadPresentation>(base, property, bounds);
  P->two_way_loop = two_way_loop;
  gamma_closure(*P);
  P->enumerated = true;
  if (property == Property::C) detail::saturate_contractions(*P);
  if (has_congruence(property)) detail::congruence_fixpoint(*P);
  return P;
}

// A presentation without cell enumeration, for term-level work (parsing,
// normalization, coend constructions) over larger bounds.
inline PresentationPtr make_presentation(const PointedCollection& base,
                                         Property property, Bounds bounds) {
  auto P = std::make_unique<OperadPresentation>(base, property, bounds);
  return P;
}

// ---------------------------------------------------------------------------
// Property audits.
// ---------------------------------------------------------------------------

struct PropertyReport {
  std::vector<std::string> violations;
  int eligible_pairs_checked = 0;
  int contraction_tokens = 0;
  bool clean() const { return violations.empty(); }
};

// A connecting cell: one dimension up, degenerate arity over the pair's
// arity, boundaries the pair (modulo the congruence where there is one).
inline bool connects(const OperadPresentation& P, TermId c, TermId x, TermId y) {
  const TermArena& A = P.arena;
  if (A.dim(c) != A.dim(x) + 1) return false;
  Tree want = embed_tree(A.arity(x).tree, A.dim(c));
  if (!(A.arity(c).tree == want)) return false;
  if (has_congruence(P.property))
    return P.cls(A.src(c)) == P.cls(x) && P.cls(A.tgt(c)) == P.cls(y);
  return A.src(c) == x && A.tgt(c) == y;
}

inline PropertyReport verify_property(OperadPresentation& P) {
  PropertyReport rep;
  TermArena& A = P.arena;
  if (!P.enumerated) {
    rep.violations.push_back("presentation not enumerated");
    return rep;
  }
  // Structural audits common to all properties.
  for (int k = 0; k <= P.bounds.max_dim; ++k)
    for (TermId t : P.cells[k]) {
      const TermData& d = A.data(t);
      if (d.kind != TermKind::Comp) continue;
      if (d.hk == HeadKind::Contr && A.is_bare(t)) {
        ++rep.contraction_tokens;
        if (P.property != Property::C)
          rep.violations.push_back(
              cat("contraction token outside property C: ", term_str(A, t)));
        else {
          PairClass pc = classify_pair(P, d.cx, d.cy);
          if (!pc.eligible)
            rep.violations.push_back(
                cat("stored contraction over ineligible pair: ", term_str(A, t)));
          if (pc.is_root_pair && !pc.has_loop)
            rep.violations.push_back(
                cat("root pair without loop property contracted: ",
                    term_str(A, t)));
        }
      }
      if (d.hk == HeadKind::Refl && !has_unit_reflexes(P.property))
        rep.violations.push_back(
            cat("reflexive cell outside Id_u/C/S_u: ", term_str(A, t)));
    }
  // Unit reflexivity structure.
  if (has_unit_reflexes(P.property)) {
    for (int g = 1; g <= P.base.n_colours; ++g)
      for (int n = 1; n <= P.bounds.max_dim; ++n)
        for (int p = 0; p < n; ++p) {
          TermId r = A.reflex_unit(p, n, g);
          if (!P.stored(r))
            rep.violations.push_back(cat("missing unit reflex 1^", p, "_", n,
                                         " at colour ", g));
          else {
            if (!(A.arity(r).tree == embed_tree(linear_tree(p), n)))
              rep.violations.push_back("unit reflex with wrong arity");
            TermId expect = n - 1 == p ? A.unit(g, p) : A.reflex_unit(p, n - 1, g);
            if (A.src(r) != expect || A.tgt(r) != expect)
              rep.violations.push_back("unit reflex chain broken");
          }
        }
  }
  // Contractibility / strictness over every eligible pair.
  if (P.property == Property::C || has_congruence(P.property)) {
    for (int k = 0; k + 1 <= P.bounds.max_dim; ++k) {
      for (TermId x : P.cells[k])
        for (TermId y : P.cells[k]) {
          PairClass pc = classify_pair(P, x, y);
          if (!pc.eligible) continue;
          ++rep.eligible_pairs_checked;
          if (has_congruence(P.property)) {
            if (P.cls(x) != P.cls(y))
              rep.violations.push_back(cat("eligible pair not identified: ",
                                           term_str(A, x), " / ",
                                           term_str(A, y)));
            continue;
          }
          bool found = false;
          for (TermId c : P.cells[k + 1])
            if (connects(P, c, x, y)) {
              found = true;
              break;
            }
          if (!found)
            rep.violations.push_back(cat("missing contraction for ",
                                         term_str(A, x), " / ",
                                         term_str(A, y)));
        }
    }
  }
  // Congruence respects structure.
  if (has_congruence(P.property)) {
    for (int k = 0; k <= P.bounds.max_dim; ++k)
      for (TermId x : P.cells[k])
        for (TermId y : P.cells[k]) {
          if (x >= y || P.cls(x) != P.cls(y)) continue;
          if (!(A.arity(x) == A.arity(y)) ||
              A.out_colour(x) != A.out_colour(y) ||
              (k >= 1 && !P.parallel_mod(x, y)))
            rep.violations.push_back(cat("congruence breaks structure: ",
                                         term_str(A, x), " ~ ",
                                         term_str(A, y)));
        }
  }
  return rep;
}

}  // namespace globop
