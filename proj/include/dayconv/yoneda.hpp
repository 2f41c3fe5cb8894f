#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "dayconv/coherence.hpp"
#include "dayconv/day.hpp"
#include "dayconv/grothendieck.hpp"

// Presheaves with the convolution tensor, the fiberwise mapping-set functor,
// and the embedding of a monoidal base into its presheaf fibration. The
// headline checks: representable convolution collapses onto representables
// (the comparison chi . (f (x) g) is a bijection), the embedding is a strong
// map of fibrations, and the fiber-slice inclusion behind local
// cocartesianness is final.

namespace dayconv::yoneda {

using cocomplete::CocompleteTarget;
using cocomplete::TFunctor;
using cocomplete::TMor;
using cocomplete::TNat;
using cocomplete::TObj;
using monoidal::SymMonoidalStructure;

// ---------------------------------------------------------------------------
// Duality

// same tensor, reversed arrows; structure isos swap with their inverses
inline SymMonoidalStructure op_structure(const SymMonoidalStructure& M) {
  SymMonoidalStructure op;
  op.cat = fincat::opposite_category(*M.cat);
  op.unit = M.unit;
  op.tensor_ob = M.tensor_ob;
  op.tensor_mo = M.tensor_mo;
  op.assoc = M.assoc_inv;
  op.assoc_inv = M.assoc;
  op.lunit = M.lunit_inv;
  op.lunit_inv = M.lunit;
  op.runit = M.runit_inv;
  op.runit_inv = M.runit;
  op.symm = M.symm_inv;
  op.symm_inv = M.symm;
  op.strict = M.strict;
  return op;
}

// ---------------------------------------------------------------------------
// Representables

inline int hom_position(const fincat::FinCategory& D, ObjId a, ObjId b, MorId m) {
  const auto& hs = D.hom(a, b);
  for (std::size_t i = 0; i < hs.size(); ++i)
    if (hs[i] == m) return static_cast<int>(i);
  throw DomainError("hom_position: morphism not in the hom set");
}

// hom(c, -) with elements encoded as hom-list positions; needs an element
// target whose objects are plain cardinalities
inline TFunctor representable(fincat::CatRef cat, CocompleteTarget& T, ObjId c) {
  if (T.is_thin()) throw DomainError("representable: target does not expose elements");
  const fincat::FinCategory& D = *cat;
  TFunctor F{cat, &T, {}, {}};
  for (ObjId x = 0; x < D.object_count(); ++x)
    F.ob.push_back(static_cast<TObj>(D.hom(c, x).size()));
  for (MorId u = 0; u < D.morphism_count(); ++u) {
    ObjId x = D.source(u), y = D.target(u);
    std::vector<int> table;
    for (MorId f : D.hom(c, x)) table.push_back(hom_position(D, c, y, D.compose(u, f)));
    F.mo.push_back(T.t_make_mor(F.ob[x], F.ob[y], table));
  }
  return F;
}

// ---------------------------------------------------------------------------
// The presheaf category: functors on the opposite base, generated by
// representables and closed under the convolution tensor

struct PresheafCategory {
  SymMonoidalStructure base;
  SymMonoidalStructure op;  // the shape the functors live on
  day::FunctorCategory fc;
  std::vector<day::RepIso> rep;  // per base object c: hom(c,-) -> its fc object
};

inline PresheafCategory presheaf_category(const SymMonoidalStructure& M, CocompleteTarget& T,
                                          day::FunctorCategoryOptions opt = {}) {
  PresheafCategory P;
  P.base = M;
  P.op = op_structure(M);
  const int n = M.cat->object_count();
  std::vector<TFunctor> seeds;
  for (ObjId c = 0; c < n; ++c) seeds.push_back(representable(P.op.cat, T, c));
  P.fc = day::build_functor_category(P.op, T, seeds, opt);
  for (ObjId c = 0; c < n; ++c) {
    bool found = false;
    for (int i = 0; i < static_cast<int>(P.fc.objects.size()) && !found; ++i)
      if (auto iso = cocomplete::find_tnat_iso(seeds[c], P.fc.objects[i])) {
        auto inv = day::invert_tnat(seeds[c], P.fc.objects[i], *iso);
        if (!inv) throw DomainError("presheaf_category: iso without inverse");
        P.rep.push_back(day::RepIso{i, *iso, *inv});
        found = true;
      }
    if (!found) throw ClosureError("presheaf_category: representable escaped the closure");
  }
  return P;
}

// ---------------------------------------------------------------------------
// Canonical comparisons onto representables

// day(hom(a,-), hom(b,-)) -> hom(a(x)b, -): the leg element (chi, f, g) goes
// to chi . (f (x) g)
inline TNat representable_comparison(const SymMonoidalStructure& op, const day::DayTensorResult& P,
                                     ObjId a, ObjId b, const TFunctor& ya, const TFunctor& yb,
                                     const TFunctor& yab) {
  CocompleteTarget& T = *ya.target;
  const fincat::FinCategory& D = *op.cat;
  ObjId ab = op.ten(a, b);
  TNat out;
  for (ObjId x = 0; x < D.object_count(); ++x) {
    std::vector<int> table(T.t_card(P.conv.ob[x]));
    for (int i = 0; i < static_cast<int>(table.size()); ++i) {
      auto el = day::decode_conv(P, ya, yb, x, i);
      MorId f = D.hom(a, el.a)[el.left];
      MorId g = D.hom(b, el.b)[el.right];
      table[i] = hom_position(D, ab, x, D.compose(el.chi, op.ten_m(f, g)));
    }
    out.comp.push_back(T.t_make_mor(P.conv.ob[x], yab.ob[x], table));
  }
  return out;
}

// day unit -> hom(I, -): the class of (point, chi) goes to chi
inline TNat unit_comparison(const SymMonoidalStructure& op, const day::DayUnitResult& J,
                            const TFunctor& yI) {
  CocompleteTarget& T = *yI.target;
  const fincat::FinCategory& D = *op.cat;
  TNat out;
  for (ObjId x = 0; x < D.object_count(); ++x) {
    std::vector<int> table(T.t_card(J.unit.ob[x]));
    for (int e = 0; e < static_cast<int>(table.size()); ++e) {
      int node = J.pres.at[x].colim.reps[e].first;
      table[e] = hom_position(D, op.unit, x, J.pres.at[x].comma.arm[node]);
    }
    out.comp.push_back(T.t_make_mor(J.unit.ob[x], yI.ob[x], table));
  }
  return out;
}

// iterated binary comparison over a tuple of base objects; every stage must
// be a componentwise bijection
inline ValidationReport check_representable_convolution(const SymMonoidalStructure& M,
                                                        CocompleteTarget& T,
                                                        const std::vector<ObjId>& tuple) {
  ValidationReport r;
  SymMonoidalStructure op = op_structure(M);
  const fincat::FinCategory& D = *op.cat;
  auto bijective = [&](const TFunctor& F, const TFunctor& G, const TNat& cmp,
                       const std::string& where) {
    r.merge(cocomplete::validate_tnat(F, G, cmp), where);
    for (ObjId x = 0; x < D.object_count(); ++x)
      if (!T.t_inverse(F.ob[x], G.ob[x], cmp.comp[x]))
        r.add_axiom("comparison-not-bijective", where + " at object " + std::to_string(x));
  };
  if (tuple.empty()) {
    auto J = day::day_unit(op, T);
    TFunctor yI = representable(op.cat, T, M.unit);
    bijective(J.unit, yI, unit_comparison(op, J, yI), "unit");
    return r;
  }
  ObjId acc = tuple[0];
  TFunctor accF = representable(op.cat, T, acc);
  for (std::size_t k = 1; k < tuple.size(); ++k) {
    TFunctor yb = representable(op.cat, T, tuple[k]);
    auto P = day::day_tensor(op, T, accF, yb);
    ObjId next = op.ten(acc, tuple[k]);
    TFunctor ynext = representable(op.cat, T, next);
    bijective(P.conv, ynext,
              representable_comparison(op, P, acc, tuple[k], accF, yb, ynext),
              "stage " + std::to_string(k));
    acc = next;
    accF = std::move(ynext);
  }
  return r;
}

// ---------------------------------------------------------------------------
// The slice inclusion behind local cocartesianness: for composable base
// arrows f, g and an object Z over the target of g, the fiber slice over the
// middle vertex includes finally into the f-edge slice

struct SliceInclusion {
  fincat::CatRef slice;  // objects: (vertex of the f-edge, X over it, q: X -> Z)
  std::vector<std::pair<ObjId, MorId>> over;  // per slice object: (X, q)
  fincat::FullSubcategory fiber_part;         // the target-vertex restriction
};

inline SliceInclusion slice_inclusion(const grothendieck::GrothFibration& pi, MorId f, MorId g,
                                      ObjId Z) {
  const fincat::FinCategory& B = *pi.base;
  const fincat::FinCategory& Tot = *pi.total;
  if (B.source(g) != B.target(f)) throw DomainError("slice_inclusion: arrows do not compose");
  if (pi.projection.ob[Z] != B.target(g))
    throw DomainError("slice_inclusion: apex does not sit over the composite's target");
  const ObjId S = B.source(f), Tm = B.target(f);
  const MorId gf = B.compose(g, f);

  SliceInclusion out;
  fincat::FinCategory::Data d;
  std::vector<int> role;  // 0: source vertex, 1: target vertex
  std::vector<ObjId> tgt_objects;
  for (int vertex = 0; vertex <= 1; ++vertex) {
    ObjId under = vertex ? Tm : S;
    MorId leg = vertex ? g : gf;
    for (ObjId x = 0; x < Tot.object_count(); ++x) {
      if (pi.projection.ob[x] != under) continue;
      for (MorId q : Tot.hom(x, Z)) {
        if (pi.projection.mo[q] != leg) continue;
        if (vertex) tgt_objects.push_back(d.object_count);
        out.over.push_back({x, q});
        role.push_back(vertex);
        ++d.object_count;
      }
    }
  }
  d.identity.assign(d.object_count, kNoMor);
  std::vector<MorId> carrier;  // underlying total morphism per slice morphism
  std::map<std::tuple<ObjId, ObjId, MorId>, MorId> index;  // (i, j, h) -> slice morphism
  for (ObjId i = 0; i < d.object_count; ++i)
    for (ObjId j = 0; j < d.object_count; ++j) {
      if (role[i] > role[j]) continue;
      MorId base_leg = role[i] == role[j] ? B.identity(role[i] ? Tm : S) : f;
      auto [x, q] = out.over[i];
      auto [x2, q2] = out.over[j];
      for (MorId h : Tot.hom(x, x2)) {
        if (pi.projection.mo[h] != base_leg) continue;
        if (Tot.compose(q2, h) != q) continue;
        MorId m = static_cast<MorId>(d.mor_source.size());
        d.mor_source.push_back(i);
        d.mor_target.push_back(j);
        carrier.push_back(h);
        index[{i, j, h}] = m;
        if (i == j && h == Tot.identity(x)) d.identity[i] = m;
      }
    }
  for (MorId m1 = 0; m1 < static_cast<MorId>(d.mor_source.size()); ++m1)
    for (MorId m2 = 0; m2 < static_cast<MorId>(d.mor_source.size()); ++m2) {
      if (d.mor_target[m1] != d.mor_source[m2]) continue;
      MorId h = Tot.compose(carrier[m2], carrier[m1]);
      auto it = index.find({d.mor_source[m1], d.mor_target[m2], h});
      d.compositions.push_back({m2, m1, it == index.end() ? kNoMor : it->second});
    }
  out.slice = fincat::make_cat(std::move(d));
  out.fiber_part = fincat::full_subcategory(out.slice, tgt_objects);
  return out;
}

inline bool slice_inclusion_final(const grothendieck::GrothFibration& pi, MorId f, MorId g,
                                  ObjId Z) {
  return cocomplete::is_final_functor(slice_inclusion(pi, f, g, Z).fiber_part.inclusion);
}

// ---------------------------------------------------------------------------
// Fiberwise mapping sets with pushforward transport

struct FiberwiseHom {
  const grothendieck::GrothFibration* pi = nullptr;

  // morphisms over the identity; both objects must share a fiber
  std::vector<MorId> hom(ObjId x, ObjId y) const {
    ObjId bx = pi->projection.ob[x], by = pi->projection.ob[y];
    if (bx != by)
      throw DomainError("fiberwise hom: objects sit over different base objects");
    std::vector<MorId> out;
    for (MorId e : pi->total->hom(x, y))
      if (pi->projection.mo[e] == pi->base->identity(bx)) out.push_back(e);
    return out;
  }

  struct Pushed {
    ObjId src = kNoObj, tgt = kNoObj;
    std::vector<int> table;  // hom(x,y) position -> hom(src,tgt) position
  };

  // transport along a base arrow through the chosen lifts; the filler is the
  // cocartesian one, so it is required to be unique
  Pushed push(MorId f, ObjId x, ObjId y) const {
    const fincat::FinCategory& Tot = *pi->total;
    MorId ex = pi->chosen_lift(x, f), ey = pi->chosen_lift(y, f);
    if (ex == kNoMor || ey == kNoMor)
      throw DomainError("fiberwise hom: missing chosen lift along arrow " + std::to_string(f));
    Pushed out;
    out.src = Tot.target(ex);
    out.tgt = Tot.target(ey);
    auto source_hom = hom(x, y);
    auto target_hom = hom(out.src, out.tgt);
    for (MorId h : source_hom) {
      MorId want = Tot.compose(ey, h);
      int found = -1;
      for (std::size_t k = 0; k < target_hom.size(); ++k)
        if (Tot.compose(target_hom[k], ex) == want) {
          if (found >= 0)
            throw DomainError("fiberwise hom: filler not unique over arrow " + std::to_string(f));
          found = static_cast<int>(k);
        }
      if (found < 0)
        throw DomainError("fiberwise hom: no filler over arrow " + std::to_string(f));
      out.table.push_back(found);
    }
    return out;
  }
};

inline FiberwiseHom fiberwise_hom(const grothendieck::GrothFibration& pi) { return {&pi}; }

// ---------------------------------------------------------------------------
// The inert part of the arrow category of the pointed skeleton

struct InertArrowCategory {
  grothendieck::ArrowCategory arrows;
  fincat::FullSubcategory sub;  // objects: the inert skeleton arrows
};

inline InertArrowCategory inert_arrow_category(const monoidal::PointedSkeleton& ps) {
  InertArrowCategory out;
  out.arrows = grothendieck::arrow_category(ps.cat);
  std::vector<ObjId> inert;
  for (MorId m = 0; m < ps.cat->morphism_count(); ++m)
    if (monoidal::classify_morphism(ps, m).inert) inert.push_back(m);
  out.sub = fincat::full_subcategory(out.arrows.cat, inert);
  return out;
}

// ---------------------------------------------------------------------------
// The embedding of the base tensor fibration into the presheaf convolution
// fibration, certified edge by edge

struct YonedaEmbedding {
  grothendieck::TensorFibration source;  // tensor fibration of the base
  PresheafCategory psh;
  grothendieck::TensorFibration target;  // convolution fibration of presheaves
  fincat::Functor total_map;
  ValidationReport certificate;  // functor, strict triangle, cocartesian edges, full fidelity
};

namespace detail_yo {

// hom(a,-) -> hom(b,-) induced by u: a -> b of the base, conjugated into the
// chosen functor-category representatives
inline TNat rep_action(const PresheafCategory& P, MorId u) {
  CocompleteTarget& T = *P.fc.T;
  const fincat::FinCategory& D = *P.op.cat;
  ObjId a = P.base.cat->source(u), b = P.base.cat->target(u);
  const TFunctor& Fa = P.fc.objects[P.rep[a].rep];
  const TFunctor& Fb = P.fc.objects[P.rep[b].rep];
  TNat out;
  for (ObjId x = 0; x < D.object_count(); ++x) {
    std::vector<int> table(T.t_card(Fa.ob[x]));
    for (int i = 0; i < static_cast<int>(table.size()); ++i) {
      MorId fD = D.hom(a, x)[T.t_apply(P.rep[a].inv.comp[x], i)];
      int pos = hom_position(D, b, x, D.compose(fD, u));
      table[i] = T.t_apply(P.rep[b].fwd.comp[x], pos);
    }
    out.comp.push_back(T.t_make_mor(Fa.ob[x], Fb.ob[x], table));
  }
  return out;
}

// binary comparison out of a pair presentation whose factors are the chosen
// representatives rather than raw representables
inline TNat rep_comparison(const PresheafCategory& P, const day::DayTensorResult& pairday, ObjId a,
                           ObjId b) {
  CocompleteTarget& T = *P.fc.T;
  const fincat::FinCategory& D = *P.op.cat;
  ObjId ab = P.base.ten(a, b);
  TNat out;
  for (ObjId x = 0; x < D.object_count(); ++x) {
    std::vector<int> table(T.t_card(pairday.conv.ob[x]));
    for (int i = 0; i < static_cast<int>(table.size()); ++i) {
      auto el = day::decode_conv(pairday, P.fc.objects[P.rep[a].rep], P.fc.objects[P.rep[b].rep],
                                 x, i);
      MorId f = D.hom(a, el.a)[T.t_apply(P.rep[a].inv.comp[el.a], el.left)];
      MorId g = D.hom(b, el.b)[T.t_apply(P.rep[b].inv.comp[el.b], el.right)];
      int pos = hom_position(D, ab, x, D.compose(el.chi, P.op.ten_m(f, g)));
      table[i] = T.t_apply(P.rep[ab].fwd.comp[x], pos);
    }
    out.comp.push_back(
        T.t_make_mor(pairday.conv.ob[x], P.fc.objects[P.rep[ab].rep].ob[x], table));
  }
  return out;
}

}  // namespace detail_yo

inline YonedaEmbedding yoneda_embedding(const SymMonoidalStructure& M, CocompleteTarget& T,
                                        int max_n, day::FunctorCategoryOptions opt = {}) {
  YonedaEmbedding E;
  E.psh = presheaf_category(M, T, opt);
  auto ps = monoidal::build_F_skeleton(max_n);
  E.source = grothendieck::build_tensor_fibration(M, ps);
  E.target = grothendieck::build_tensor_fibration(E.psh.fc.structure, ps);
  const fincat::FinCategory& Tot = *E.source.fib.total;
  day::FunctorCategory& fc = E.psh.fc;

  E.total_map = fincat::Functor{E.source.fib.total, E.target.fib.total, {}, {}};
  for (ObjId x = 0; x < Tot.object_count(); ++x) {
    std::vector<ObjId> mapped;
    for (ObjId c : E.source.obj_tuple[x]) mapped.push_back(E.psh.rep[c].rep);
    E.total_map.ob.push_back(E.target.find_object(mapped));
  }

  // canonical comparison fold(reps of the tuple) -> rep of the folded object
  std::map<std::vector<ObjId>, TNat> memo;
  std::function<const TNat&(const std::vector<ObjId>&)> comp_for =
      [&](const std::vector<ObjId>& list) -> const TNat& {
    auto it = memo.find(list);
    if (it != memo.end()) return it->second;
    TNat out;
    if (list.empty()) {
      TFunctor yI = representable(E.psh.op.cat, T, M.unit);
      TNat ucmp = unit_comparison(E.psh.op, fc.unit, yI);
      out = day::compose_tnat(
          T, E.psh.rep[M.unit].fwd, day::compose_tnat(T, ucmp, fc.unit_iso.inv));
    } else if (list.size() == 1) {
      out = day::identity_tnat(fc.objects[E.psh.rep[list[0]].rep]);
    } else {
      std::vector<ObjId> head(list.begin(), list.end() - 1);
      ObjId b = list.back();
      const TNat& kh = comp_for(head);
      ObjId a = coherence::fold_obj(M, head);
      std::vector<ObjId> mapped_head;
      for (ObjId c : head) mapped_head.push_back(E.psh.rep[c].rep);
      ObjId fold_head = coherence::fold_obj(fc.structure, mapped_head);
      if (fold_head != E.psh.rep[a].rep)
        throw DomainError("yoneda_embedding: closure representative mismatch");
      const day::PairEntry& en = fc.pair(fold_head, E.psh.rep[b].rep);
      TNat moved = day::day_map(en.day, en.day, kh,
                                day::identity_tnat(fc.objects[E.psh.rep[b].rep]));
      TNat cmp = detail_yo::rep_comparison(E.psh, en.day, a, b);
      out = day::compose_tnat(T, cmp, day::compose_tnat(T, moved, en.iso.inv));
    }
    return memo.emplace(list, std::move(out)).first->second;
  };

  ValidationReport& cert = E.certificate;
  const monoidal::PointedSkeleton& sk = E.source.skeleton;
  for (MorId e = 0; e < Tot.morphism_count(); ++e) {
    MorId fb = E.source.fib.projection.mo[e];
    ObjId src = Tot.source(e);
    const int nslots = sk.cat->target(fb);
    std::vector<MorId> vcomps(nslots);
    bool broken = false;
    for (int t = 1; t <= nslots && !broken; ++t) {
      std::vector<ObjId> list =
          grothendieck::TensorFibration::tuple_select(E.source.obj_tuple[src], sk.preimage(fb, t));
      MorId u = E.source.mor_comps[e][t - 1];
      TNat v = day::compose_tnat(T, detail_yo::rep_action(E.psh, u), comp_for(list));
      std::vector<ObjId> mapped;
      for (ObjId c : list) mapped.push_back(E.psh.rep[c].rep);
      int from = coherence::fold_obj(fc.structure, mapped);
      MorId nat = fc.find_nat(from, E.psh.rep[M.cat->target(u)].rep, v);
      if (nat == kNoMor) {
        cert.add_structural("image-component-missing",
                            "edge " + std::to_string(e) + " slot " + std::to_string(t));
        broken = true;
      }
      vcomps[t - 1] = nat;
    }
    MorId img = broken ? kNoMor
                       : E.target.find_morphism(fb, E.total_map.ob[src],
                                                E.total_map.ob[Tot.target(e)], vcomps);
    if (img == kNoMor && !broken)
      cert.add_structural("image-morphism-missing", "edge " + std::to_string(e));
    E.total_map.mo.push_back(img);
  }
  if (!cert.ok()) return E;

  cert.merge(fincat::validate_functor(E.total_map), "embedding");
  for (ObjId x = 0; x < Tot.object_count(); ++x)
    if (E.target.fib.projection.ob[E.total_map.ob[x]] != E.source.fib.projection.ob[x])
      cert.add_structural("projection-triangle", "object " + std::to_string(x));
  for (MorId e = 0; e < Tot.morphism_count(); ++e)
    if (E.target.fib.projection.mo[E.total_map.mo[e]] != E.source.fib.projection.mo[e])
      cert.add_structural("projection-triangle", "morphism " + std::to_string(e));
  if (!cert.ok()) return E;

  for (MorId e = 0; e < Tot.morphism_count(); ++e)
    if (grothendieck::is_cocartesian_edge(E.source.fib, e) &&
        !grothendieck::is_cocartesian_edge(E.target.fib, E.total_map.mo[e]))
      cert.add_axiom("cocartesian-not-preserved", "edge " + std::to_string(e));

  for (ObjId x = 0; x < Tot.object_count(); ++x)
    for (ObjId y = 0; y < Tot.object_count(); ++y) {
      const auto& hs = Tot.hom(x, y);
      std::set<MorId> image;
      for (MorId m : hs) image.insert(E.total_map.mo[m]);
      if (image.size() != hs.size() ||
          image.size() !=
              E.target.fib.total->hom(E.total_map.ob[x], E.total_map.ob[y]).size())
        cert.add_axiom("not-fully-faithful",
                       "(" + std::to_string(x) + "," + std::to_string(y) + ")");
    }
  return E;
}

}  // namespace dayconv::yoneda
