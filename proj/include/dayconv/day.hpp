#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dayconv/cocomplete.hpp"
#include "dayconv/grothendieck.hpp"
#include "dayconv/monoidal.hpp"

// Day convolution on Fun(C,T): the tensor is the left Kan extension of the
// pointwise target tensor along the source tensor, computed through comma
// colimits. A finite generating set of functors is closed under the tensor up
// to isomorphism, yielding a finite functor category carrying a certified
// symmetric monoidal structure; its tensor fibration is the convolution
// fibration. Structure maps are produced by chasing colimit representatives,
// never by unconstrained search, so coherence holds by construction and the
// validator's pass is a certificate rather than luck.

namespace dayconv::day {

using cocomplete::CocompleteTarget;
using cocomplete::LanResult;
using cocomplete::TFunctor;
using cocomplete::TMor;
using cocomplete::TNat;
using cocomplete::TObj;
using monoidal::SymMonoidalStructure;

// ---------------------------------------------------------------------------
// Natural-transformation algebra

inline TNat identity_tnat(const TFunctor& F) {
  TNat n;
  for (TObj o : F.ob) n.comp.push_back(F.target->t_identity(o));
  return n;
}

inline TNat compose_tnat(CocompleteTarget& T, const TNat& second, const TNat& first) {
  TNat out;
  out.comp.reserve(first.comp.size());
  for (std::size_t i = 0; i < first.comp.size(); ++i)
    out.comp.push_back(T.t_compose(second.comp[i], first.comp[i]));
  return out;
}

// componentwise two-sided inverse; empty when some component is not invertible
inline std::optional<TNat> invert_tnat(const TFunctor& F, const TFunctor& G, const TNat& n) {
  CocompleteTarget& T = *F.target;
  TNat out;
  for (std::size_t x = 0; x < n.comp.size(); ++x) {
    auto found = T.t_inverse(F.ob[x], G.ob[x], n.comp[x]);
    if (!found) return std::nullopt;
    out.comp.push_back(*found);
  }
  return out;
}

// ---------------------------------------------------------------------------
// The Day tensor and unit, with their colimit presentations

struct DayTensorResult {
  TFunctor conv;
  fincat::ProductCat square;
  TFunctor outer;  // pointwise target tensor of the pair, on the square
  LanResult pres;  // per object x: colimit over the comma (⊗ ↓ x)
};

inline DayTensorResult day_tensor(const SymMonoidalStructure& M, CocompleteTarget& T,
                                  const TFunctor& F, const TFunctor& G) {
  DayTensorResult res;
  res.square = fincat::product_category(M.cat, M.cat);
  res.outer = TFunctor{res.square.cat, &T, {}, {}};
  for (ObjId p = 0; p < res.square.cat->object_count(); ++p) {
    auto [a, b] = res.square.obj_parts(p);
    res.outer.ob.push_back(T.m_ten(F.ob[a], G.ob[b]));
  }
  for (MorId m = 0; m < res.square.cat->morphism_count(); ++m) {
    auto [u, v] = res.square.mor_parts(m);
    res.outer.mo.push_back(T.m_ten_mor(F.mo[u], G.mo[v]));
  }
  res.pres = cocomplete::left_kan_extension(res.outer, M.as_functor(res.square));
  res.conv = res.pres.lan;
  return res;
}

struct DayUnitResult {
  TFunctor unit;
  LanResult pres;  // along the inclusion of the monoidal unit
};

inline DayUnitResult day_unit(const SymMonoidalStructure& M, CocompleteTarget& T) {
  fincat::FinCategory::Data d;
  d.object_count = 1;
  d.mor_source = {0};
  d.mor_target = {0};
  d.identity = {0};
  d.compositions = {{0, 0, 0}};
  fincat::CatRef point = fincat::make_cat(std::move(d));
  fincat::Functor incl{point, M.cat, {M.unit}, {M.cat->identity(M.unit)}};
  TFunctor pt{point, &T, {T.m_unit()}, {T.t_identity(T.m_unit())}};
  DayUnitResult res;
  res.pres = cocomplete::left_kan_extension(pt, incl);
  res.unit = res.pres.lan;
  return res;
}

// functorial action on pairs: the mediator of the target presentation's legs
// precomposed with the componentwise tensor
inline TNat day_map(const DayTensorResult& src, const DayTensorResult& dst, const TNat& phi,
                    const TNat& psi) {
  CocompleteTarget& T = *src.conv.target;
  TNat out;
  for (ObjId x = 0; x < static_cast<ObjId>(src.conv.ob.size()); ++x) {
    const auto& sp = src.pres.at[x];
    const auto& dp = dst.pres.at[x];
    std::vector<TMor> cocone;
    for (ObjId i = 0; i < sp.comma.cat->object_count(); ++i) {
      auto [a, b] = src.square.obj_parts(sp.comma.at[i]);
      auto j = dp.comma.find(sp.comma.at[i], sp.comma.arm[i]);
      if (!j) throw DomainError("day_map: comma mismatch between presentations");
      cocone.push_back(T.t_compose(dp.colim.legs[*j], T.m_ten_mor(phi.comp[a], psi.comp[b])));
    }
    auto med = T.mediate(sp.colim, sp.diagram, dst.conv.ob[x], cocone);
    if (!med) throw DomainError("day_map: mediator inconsistent");
    out.comp.push_back(*med);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Pointwise colimits in the functor category

struct FunctorDiagram {
  fincat::CatRef shape;
  std::vector<TFunctor> functors;  // per shape object
  std::vector<TNat> nats;          // per shape morphism
};

struct FunctorColimit {
  TFunctor apex;
  std::vector<TNat> legs;  // per shape object
};

inline FunctorColimit functor_category_colimit(CocompleteTarget& T, fincat::CatRef source,
                                               const FunctorDiagram& d) {
  const fincat::FinCategory& C = *source;
  const fincat::FinCategory& J = *d.shape;
  FunctorColimit res;
  res.apex = TFunctor{source, &T, {}, {}};
  res.legs.assign(J.object_count(), TNat{});
  std::vector<CocompleteTarget::ColimitResult> at;
  std::vector<cocomplete::Diagram> dx;
  for (ObjId x = 0; x < C.object_count(); ++x) {
    cocomplete::Diagram dd{d.shape, &T, {}, {}};
    for (ObjId k = 0; k < J.object_count(); ++k) dd.ob.push_back(d.functors[k].ob[x]);
    for (MorId u = 0; u < J.morphism_count(); ++u) dd.mo.push_back(d.nats[u].comp[x]);
    auto col = T.colimit(dd);
    res.apex.ob.push_back(col.apex);
    for (ObjId k = 0; k < J.object_count(); ++k) res.legs[k].comp.push_back(col.legs[k]);
    at.push_back(std::move(col));
    dx.push_back(std::move(dd));
  }
  for (MorId m = 0; m < C.morphism_count(); ++m) {
    ObjId x = C.source(m), y = C.target(m);
    std::vector<TMor> cocone;
    for (ObjId k = 0; k < J.object_count(); ++k)
      cocone.push_back(T.t_compose(at[y].legs[k], d.functors[k].mo[m]));
    auto med = T.mediate(at[x], dx[x], at[y].apex, cocone);
    if (!med) throw DomainError("functor_category_colimit: mediator inconsistent");
    res.apex.mo.push_back(*med);
  }
  return res;
}

// ---------------------------------------------------------------------------
// Structure-map chases through colimit representatives

// decode an element of a Day convolution value into a witnessing
// (comma object (a,b), structure map chi, pair of component elements)
struct ConvElement {
  ObjId a, b;
  MorId chi;
  int left, right;
};

inline ConvElement decode_conv(const DayTensorResult& P, const TFunctor& F, const TFunctor& G,
                               ObjId x, int elem) {
  const auto& pres = P.pres.at[x];
  auto [node, w] = pres.colim.reps[elem];
  auto [a, b] = P.square.obj_parts(pres.comma.at[node]);
  auto [l, r] = P.conv.target->m_unpair(F.ob[a], G.ob[b], w);
  return {a, b, pres.comma.arm[node], l, r};
}

// image of a component pair under the presentation leg at ((a,b), chi)
inline int encode_conv(const DayTensorResult& P, const TFunctor& F, const TFunctor& G, ObjId x,
                       ObjId a, ObjId b, MorId chi, int l, int r) {
  const auto& pres = P.pres.at[x];
  auto node = pres.comma.find(P.square.obj(a, b), chi);
  if (!node) throw DomainError("day structure chase: comma object missing");
  return P.conv.target->t_apply(pres.colim.legs[*node],
                                P.conv.target->m_pair(F.ob[a], G.ob[b], l, r));
}

// canonical associator: day(day(F,G), H) -> day(F, day(G,H)), chased through
// representatives of both presentation layers
inline TNat day_assoc(const SymMonoidalStructure& M, const DayTensorResult& PFG,
                      const DayTensorResult& PGH, const DayTensorResult& L,
                      const DayTensorResult& R, const TFunctor& F, const TFunctor& G,
                      const TFunctor& H) {
  CocompleteTarget& T = *F.target;
  const fincat::FinCategory& C = *M.cat;
  TNat out;
  for (ObjId x = 0; x < static_cast<ObjId>(L.conv.ob.size()); ++x) {
    std::vector<int> table(T.t_card(L.conv.ob[x]), 0);
    if (T.is_thin()) {
      // parallel morphisms coincide; existence is the whole content
      out.comp.push_back(T.t_make_mor(L.conv.ob[x], R.conv.ob[x], table));
      continue;
    }
    for (int e = 0; e < static_cast<int>(table.size()); ++e) {
      auto o = decode_conv(L, PFG.conv, H, x, e);     // ((c1,c2), chi, p, h)
      auto i = decode_conv(PFG, F, G, o.a, o.left);   // ((a,b), xi, f, g)
      ObjId d = M.ten(i.b, o.b);
      MorId psi = C.compose(
          o.chi, C.compose(M.ten_m(i.chi, C.identity(o.b)), M.a_inv_of(i.a, i.b, o.b)));
      int q = encode_conv(PGH, G, H, d, i.b, o.b, C.identity(d),
                                 i.right, o.right);
      table[e] = encode_conv(R, F, PGH.conv, x, i.a, d, psi, i.left, q);
    }
    out.comp.push_back(T.t_make_mor(L.conv.ob[x], R.conv.ob[x], table));
  }
  return out;
}

// canonical left unitor: day(J, F) -> F where J is the Day unit
inline TNat day_lunit(const SymMonoidalStructure& M, const DayUnitResult& J,
                      const DayTensorResult& P, const TFunctor& F) {
  CocompleteTarget& T = *F.target;
  const fincat::FinCategory& C = *M.cat;
  TNat out;
  for (ObjId x = 0; x < static_cast<ObjId>(P.conv.ob.size()); ++x) {
    std::vector<int> table(T.t_card(P.conv.ob[x]), 0);
    if (T.is_thin()) {
      out.comp.push_back(T.t_make_mor(P.conv.ob[x], F.ob[x], table));
      continue;
    }
    for (int e = 0; e < static_cast<int>(table.size()); ++e) {
      auto o = decode_conv(P, J.unit, F, x, e);  // ((a,b), chi, j, f)
      auto [node, ignored] = J.pres.at[o.a].colim.reps[o.left];
      (void)ignored;
      MorId u = J.pres.at[o.a].comma.arm[node];  // I -> a
      MorId mor = C.compose(
          o.chi, C.compose(M.ten_m(u, C.identity(o.b)), M.lunit_inv[o.b]));
      table[e] = T.t_apply(F.mo[mor], o.right);
    }
    out.comp.push_back(T.t_make_mor(P.conv.ob[x], F.ob[x], table));
  }
  return out;
}

// canonical right unitor: day(F, J) -> F
inline TNat day_runit(const SymMonoidalStructure& M, const DayUnitResult& J,
                      const DayTensorResult& P, const TFunctor& F) {
  CocompleteTarget& T = *F.target;
  const fincat::FinCategory& C = *M.cat;
  TNat out;
  for (ObjId x = 0; x < static_cast<ObjId>(P.conv.ob.size()); ++x) {
    std::vector<int> table(T.t_card(P.conv.ob[x]), 0);
    if (T.is_thin()) {
      out.comp.push_back(T.t_make_mor(P.conv.ob[x], F.ob[x], table));
      continue;
    }
    for (int e = 0; e < static_cast<int>(table.size()); ++e) {
      auto o = decode_conv(P, F, J.unit, x, e);  // ((a,b), chi, f, j)
      auto [node, ignored] = J.pres.at[o.b].colim.reps[o.right];
      (void)ignored;
      MorId u = J.pres.at[o.b].comma.arm[node];  // I -> b
      MorId mor = C.compose(
          o.chi, C.compose(M.ten_m(C.identity(o.a), u), M.runit_inv[o.a]));
      table[e] = T.t_apply(F.mo[mor], o.left);
    }
    out.comp.push_back(T.t_make_mor(P.conv.ob[x], F.ob[x], table));
  }
  return out;
}

// canonical symmetry: day(F, G) -> day(G, F)
inline TNat day_symm(const SymMonoidalStructure& M, const DayTensorResult& P,
                     const DayTensorResult& Q, const TFunctor& F, const TFunctor& G) {
  CocompleteTarget& T = *F.target;
  const fincat::FinCategory& C = *M.cat;
  TNat out;
  for (ObjId x = 0; x < static_cast<ObjId>(P.conv.ob.size()); ++x) {
    std::vector<int> table(T.t_card(P.conv.ob[x]), 0);
    if (T.is_thin()) {
      out.comp.push_back(T.t_make_mor(P.conv.ob[x], Q.conv.ob[x], table));
      continue;
    }
    for (int e = 0; e < static_cast<int>(table.size()); ++e) {
      auto o = decode_conv(P, F, G, x, e);
      table[e] = encode_conv(Q, G, F, x, o.b, o.a,
                                    C.compose(o.chi, M.s_of(o.b, o.a)), o.right, o.left);
    }
    out.comp.push_back(T.t_make_mor(P.conv.ob[x], Q.conv.ob[x], table));
  }
  return out;
}

// ---------------------------------------------------------------------------
// The generated functor category with its certified Day structure

struct RepIso {
  int rep = -1;
  TNat fwd, inv;  // raw convolution -> chosen representative
};

struct PairEntry {
  DayTensorResult day;
  RepIso iso;
};

struct FunctorCategory {
  fincat::CatRef cat;  // objects: generated functors; morphisms: all nats
  CocompleteTarget* T = nullptr;
  fincat::CatRef source;
  std::vector<TFunctor> objects;
  std::vector<TNat> nats;  // per category morphism
  int unit_index = -1;
  DayUnitResult unit;
  RepIso unit_iso;         // raw Day unit -> objects[unit_index]
  SymMonoidalStructure structure;
  ValidationReport certificate;

  MorId find_nat(int i, int j, const TNat& n) const {
    for (MorId m : cat->hom(i, j))
      if (nats[m].comp == n.comp) return m;
    return kNoMor;
  }
  const PairEntry& pair(int i, int j) const { return pairs_.at(pair_key(i, j)); }
  std::unordered_map<std::uint64_t, PairEntry> pairs_;
};

struct FunctorCategoryOptions {
  int max_objects = 16;
  std::size_t nat_limit = 1u << 20;
};

inline FunctorCategory build_functor_category(const SymMonoidalStructure& M,
                                              CocompleteTarget& T, std::vector<TFunctor> seeds,
                                              FunctorCategoryOptions opt = {}) {
  FunctorCategory fc;
  fc.T = &T;
  fc.source = M.cat;

  auto find_rep = [&](const TFunctor& F) -> std::optional<RepIso> {
    for (int r = 0; r < static_cast<int>(fc.objects.size()); ++r)
      if (auto iso = cocomplete::find_tnat_iso(F, fc.objects[r])) {
        auto inv = invert_tnat(F, fc.objects[r], *iso);
        if (!inv) throw DomainError("build_functor_category: iso without inverse");
        return RepIso{r, *iso, *inv};
      }
    return std::nullopt;
  };
  auto profile = [&](const TFunctor& F) {
    std::string s = "(";
    for (std::size_t i = 0; i < F.ob.size(); ++i)
      s += (i ? "," : "") + std::to_string(T.t_card(F.ob[i]));
    return s + ")";
  };

  for (auto& s : seeds)
    if (!find_rep(s)) fc.objects.push_back(s);

  fc.unit = day_unit(M, T);
  if (auto r = find_rep(fc.unit.unit)) {
    fc.unit_index = r->rep;
    fc.unit_iso = *r;
  } else {
    fc.unit_index = static_cast<int>(fc.objects.size());
    fc.objects.push_back(fc.unit.unit);
    fc.unit_iso = RepIso{fc.unit_index, identity_tnat(fc.unit.unit), identity_tnat(fc.unit.unit)};
  }

  // close under the tensor, recording each pair's presentation and iso
  bool grew = true;
  while (grew) {
    grew = false;
    int n = static_cast<int>(fc.objects.size());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (fc.pairs_.count(pair_key(i, j))) continue;
        PairEntry entry;
        entry.day = day_tensor(M, T, fc.objects[i], fc.objects[j]);
        if (auto r = find_rep(entry.day.conv)) {
          entry.iso = *r;
        } else {
          if (static_cast<int>(fc.objects.size()) >= opt.max_objects)
            throw ClosureError("day closure: tensor of objects " + std::to_string(i) + " and " +
                               std::to_string(j) + " with value profile " +
                               profile(entry.day.conv) + " is not generated (cap " +
                               std::to_string(opt.max_objects) + ")");
          int idx = static_cast<int>(fc.objects.size());
          fc.objects.push_back(entry.day.conv);
          entry.iso =
              RepIso{idx, identity_tnat(entry.day.conv), identity_tnat(entry.day.conv)};
          grew = true;
        }
        fc.pairs_.emplace(pair_key(i, j), std::move(entry));
      }
  }

  // the nat category
  const int n = static_cast<int>(fc.objects.size());
  fincat::FinCategory::Data d;
  d.object_count = n;
  d.identity.assign(n, kNoMor);
  std::vector<std::pair<int, int>> ends;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto group = cocomplete::enumerate_tnats(fc.objects[i], fc.objects[j], opt.nat_limit);
      TNat idn = identity_tnat(fc.objects[i]);
      for (auto& nt : group) {
        MorId m = static_cast<MorId>(d.mor_source.size());
        d.mor_source.push_back(i);
        d.mor_target.push_back(j);
        if (i == j && nt.comp == idn.comp) d.identity[i] = m;
        fc.nats.push_back(std::move(nt));
        ends.push_back({i, j});
      }
    }
  for (MorId m1 = 0; m1 < static_cast<MorId>(d.mor_source.size()); ++m1)
    for (MorId m2 = 0; m2 < static_cast<MorId>(d.mor_source.size()); ++m2) {
      if (d.mor_target[m1] != d.mor_source[m2]) continue;
      TNat c = compose_tnat(T, fc.nats[m2], fc.nats[m1]);
      MorId found = kNoMor;
      for (MorId m = 0; m < static_cast<MorId>(fc.nats.size()); ++m)
        if (ends[m].first == d.mor_source[m1] && ends[m].second == d.mor_target[m2] &&
            fc.nats[m].comp == c.comp) {
          found = m;
          break;
        }
      d.compositions.push_back({m2, m1, found});
    }
  fc.cat = fincat::make_cat(std::move(d));

  // assemble the monoidal structure over the nat category
  SymMonoidalStructure S;
  S.cat = fc.cat;
  S.unit = fc.unit_index;
  S.tensor_ob.assign(n * n, kNoObj);
  S.tensor_mo.assign(fc.nats.size() * fc.nats.size(), kNoMor);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) S.tensor_ob[i * n + j] = fc.pair(i, j).iso.rep;

  auto place = [&](int i, int j, const TNat& nt, const char* what) {
    MorId m = fc.find_nat(i, j, nt);
    if (m == kNoMor)
      throw DomainError(std::string("build_functor_category: ") + what +
                        " escaped the enumerated nats");
    return m;
  };

  const MorId mor_n = fc.cat->morphism_count();
  for (MorId f = 0; f < mor_n; ++f)
    for (MorId g = 0; g < mor_n; ++g) {
      int i = fc.cat->source(f), i2 = fc.cat->target(f);
      int j = fc.cat->source(g), j2 = fc.cat->target(g);
      const PairEntry& src = fc.pair(i, j);
      const PairEntry& dst = fc.pair(i2, j2);
      TNat mid = day_map(src.day, dst.day, fc.nats[f], fc.nats[g]);
      TNat full = compose_tnat(T, dst.iso.fwd, compose_tnat(T, mid, src.iso.inv));
      S.tensor_mo[f * mor_n + g] =
          place(src.iso.rep, dst.iso.rep, full, "tensor of morphisms");
    }

  S.assoc.assign(n * n * n, kNoMor);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const PairEntry& pij = fc.pair(i, j);
        const PairEntry& pjk = fc.pair(j, k);
        const PairEntry& pl = fc.pair(pij.iso.rep, k);
        const PairEntry& pr = fc.pair(i, pjk.iso.rep);
        DayTensorResult dl = day_tensor(M, T, pij.day.conv, fc.objects[k]);
        DayTensorResult dr = day_tensor(M, T, fc.objects[i], pjk.day.conv);
        TNat alpha = day_assoc(M, pij.day, pjk.day, dl, dr, fc.objects[i], fc.objects[j],
                               fc.objects[k]);
        TNat left = day_map(pl.day, dl, pij.iso.inv, identity_tnat(fc.objects[k]));
        TNat right = day_map(dr, pr.day, identity_tnat(fc.objects[i]), pjk.iso.fwd);
        TNat full = compose_tnat(
            T, pr.iso.fwd,
            compose_tnat(T, right,
                         compose_tnat(T, alpha, compose_tnat(T, left, pl.iso.inv))));
        S.assoc[(i * n + j) * n + k] =
            place(pl.iso.rep, pr.iso.rep, full, "associator");
      }

  S.lunit.assign(n, kNoMor);
  S.runit.assign(n, kNoMor);
  for (int i = 0; i < n; ++i) {
    const PairEntry& pu = fc.pair(fc.unit_index, i);
    DayTensorResult raw = day_tensor(M, T, fc.unit.unit, fc.objects[i]);
    TNat lam = day_lunit(M, fc.unit, raw, fc.objects[i]);
    TNat to_raw = day_map(pu.day, raw, fc.unit_iso.inv, identity_tnat(fc.objects[i]));
    S.lunit[i] = place(pu.iso.rep, i,
                       compose_tnat(T, lam, compose_tnat(T, to_raw, pu.iso.inv)), "left unitor");

    const PairEntry& pv = fc.pair(i, fc.unit_index);
    DayTensorResult raw2 = day_tensor(M, T, fc.objects[i], fc.unit.unit);
    TNat rho = day_runit(M, fc.unit, raw2, fc.objects[i]);
    TNat to_raw2 = day_map(pv.day, raw2, identity_tnat(fc.objects[i]), fc.unit_iso.inv);
    S.runit[i] =
        place(pv.iso.rep, i, compose_tnat(T, rho, compose_tnat(T, to_raw2, pv.iso.inv)),
              "right unitor");
  }

  S.symm.assign(n * n, kNoMor);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const PairEntry& pij = fc.pair(i, j);
      const PairEntry& pji = fc.pair(j, i);
      TNat sym = day_symm(M, pij.day, pji.day, fc.objects[i], fc.objects[j]);
      TNat full =
          compose_tnat(T, pji.iso.fwd, compose_tnat(T, sym, pij.iso.inv));
      S.symm[i * n + j] = place(pij.iso.rep, pji.iso.rep, full, "symmetry");
    }

  S.fill_inverses();
  fc.structure = std::move(S);
  fc.certificate = fincat::validate_category(*fc.cat);
  if (fc.certificate.ok()) fc.certificate = monoidal::validate_monoidal(fc.structure);
  return fc;
}

// ---------------------------------------------------------------------------
// The convolution fibration and its theorem-shadow checks

struct DayFibration {
  FunctorCategory fc;
  grothendieck::TensorFibration tf;
};

inline DayFibration build_day_fibration(const SymMonoidalStructure& M, CocompleteTarget& T,
                                        std::vector<TFunctor> seeds, int max_n,
                                        FunctorCategoryOptions opt = {}) {
  DayFibration df;
  df.fc = build_functor_category(M, T, std::move(seeds), opt);
  if (!df.fc.certificate.ok())
    throw DomainError("build_day_fibration: derived structure failed validation:\n" +
                      df.fc.certificate.to_string());
  df.tf = grothendieck::build_tensor_fibration(df.fc.structure, monoidal::build_F_skeleton(max_n));
  return df;
}

// every marked pushforward's target agrees with the iterated convolution, and
// the marked edges really are cocartesian
inline ValidationReport check_pushforward_is_kan(const SymMonoidalStructure& M,
                                                 const DayFibration& df) {
  ValidationReport r;
  CocompleteTarget& T = *df.fc.T;
  for (const auto& [key, e] : df.tf.fib.chosen) {
    (void)key;
    ObjId src = df.tf.fib.total->source(e);
    ObjId tgt = df.tf.fib.total->target(e);
    MorId f = df.tf.fib.projection.mo[e];
    if (!grothendieck::is_cocartesian_edge(df.tf.fib, e))
      r.add_axiom("marked-edge-not-cocartesian", "edge " + std::to_string(e));
    int arity = df.tf.skeleton.cat->target(f);
    for (int t = 1; t <= arity; ++t) {
      std::vector<int> block = df.tf.skeleton.preimage(f, t);
      // iterated convolution on the raw functors, fully left-associated
      TFunctor expect;
      if (block.empty()) {
        expect = df.fc.unit.unit;
      } else {
        expect = df.fc.objects[df.tf.obj_tuple[src][block[0] - 1]];
        for (std::size_t s = 1; s < block.size(); ++s)
          expect = day_tensor(M, T, expect,
                              df.fc.objects[df.tf.obj_tuple[src][block[s] - 1]])
                       .conv;
      }
      const TFunctor& got = df.fc.objects[df.tf.obj_tuple[tgt][t - 1]];
      if (!cocomplete::find_tnat_iso(expect, got))
        r.add_axiom("pushforward-not-kan",
                    "edge " + std::to_string(e) + " slot " + std::to_string(t));
    }
  }
  return r;
}

// Day convolution preserves colimits in each variable separately
inline ValidationReport check_bilinearity(const SymMonoidalStructure& M, CocompleteTarget& T,
                                          const FunctorDiagram& d, const TFunctor& G) {
  ValidationReport r;
  FunctorColimit col = functor_category_colimit(T, M.cat, d);

  auto one_side = [&](bool left) {
    const char* side = left ? "left" : "right";
    TFunctor lhs = left ? day_tensor(M, T, col.apex, G).conv : day_tensor(M, T, G, col.apex).conv;
    FunctorDiagram tensored;
    tensored.shape = d.shape;
    std::vector<DayTensorResult> days;
    for (const auto& Fk : d.functors) {
      days.push_back(left ? day_tensor(M, T, Fk, G) : day_tensor(M, T, G, Fk));
      tensored.functors.push_back(days.back().conv);
    }
    for (MorId u = 0; u < d.shape->morphism_count(); ++u) {
      ObjId k = d.shape->source(u), k2 = d.shape->target(u);
      tensored.nats.push_back(left ? day_map(days[k], days[k2], d.nats[u], identity_tnat(G))
                                   : day_map(days[k], days[k2], identity_tnat(G), d.nats[u]));
    }
    FunctorColimit rhs = functor_category_colimit(T, M.cat, tensored);
    if (!cocomplete::find_tnat_iso(lhs, rhs.apex))
      r.add_axiom("bilinearity", std::string(side) + " tensor does not commute with the colimit");
  };
  one_side(true);
  one_side(false);
  return r;
}

}  // namespace dayconv::day
