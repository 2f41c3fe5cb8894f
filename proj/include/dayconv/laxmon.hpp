#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dayconv/day.hpp"

// Lax symmetric monoidal functors and commutative monoid objects for the Day
// tensor. The two notions carry the same combinatorial data and the
// correspondence here is constructive in both directions: mu components are
// read off the convolution's colimit legs at identity structure maps, and a
// monoid multiplication is the mediator of the cocone the mu components span.
// Both sides come with exhaustive, independently validated enumerations so
// the equivalence can be certified instance by instance.

namespace dayconv::laxmon {

using cocomplete::CocompleteTarget;
using cocomplete::TFunctor;
using cocomplete::TMor;
using cocomplete::TNat;
using cocomplete::TObj;
using day::DayTensorResult;
using day::DayUnitResult;
using monoidal::SymMonoidalStructure;

// ---------------------------------------------------------------------------
// Lax symmetric monoidal functors into a cocomplete target

struct LaxMonoidalFunctor {
  TFunctor underlying;
  std::vector<TMor> mult;     // (a * n + b) -> mu_{a,b}: F(a) (x) F(b) -> F(a (x) b)
  TMor unit_component = -1;   // unit of the target -> F(unit of the base)
};

inline ValidationReport validate_lax(const SymMonoidalStructure& M, const LaxMonoidalFunctor& L) {
  const fincat::FinCategory& C = *M.cat;
  CocompleteTarget& T = *L.underlying.target;
  const int n = C.object_count();
  ValidationReport r;
  r.merge(cocomplete::validate_tfunctor(L.underlying), "underlying");
  if (static_cast<int>(L.mult.size()) != n * n)
    r.add_structural("mult-size", std::to_string(L.mult.size()) + " components for " +
                                      std::to_string(n) + " objects");
  auto F = [&](ObjId a) { return L.underlying.ob[a]; };
  if (r.structural.empty())
    for (ObjId a = 0; a < n; ++a)
      for (ObjId b = 0; b < n; ++b) {
        TMor mu = L.mult[a * n + b];
        if (mu < 0) {
          r.add_structural("missing-component", "(" + std::to_string(a) + "," +
                                                    std::to_string(b) + ")");
          continue;
        }
        if (T.t_source(mu) != T.m_ten(F(a), F(b)) || T.t_target(mu) != F(M.ten(a, b)))
          r.add_structural("mult-endpoints",
                           "(" + std::to_string(a) + "," + std::to_string(b) + ")");
      }
  if (L.unit_component < 0)
    r.add_structural("missing-component", "unit");
  else if (T.t_source(L.unit_component) != T.m_unit() ||
           T.t_target(L.unit_component) != F(M.unit))
    r.add_structural("unit-endpoints", "");
  if (!r.ok()) return r;

  auto mu = [&](ObjId a, ObjId b) { return L.mult[a * n + b]; };
  auto id_of = [&](ObjId a) { return T.t_identity(F(a)); };

  // naturality of mu in both slots
  for (MorId u = 0; u < C.morphism_count(); ++u)
    for (MorId v = 0; v < C.morphism_count(); ++v) {
      ObjId a = C.source(u), a2 = C.target(u);
      ObjId b = C.source(v), b2 = C.target(v);
      TMor lhs = T.t_compose(mu(a2, b2), T.m_ten_mor(L.underlying.mo[u], L.underlying.mo[v]));
      TMor rhs = T.t_compose(L.underlying.mo[M.ten_m(u, v)], mu(a, b));
      if (lhs != rhs)
        r.add_axiom("lax-naturality", "(" + std::to_string(u) + "," + std::to_string(v) + ")");
    }

  for (ObjId a = 0; a < n; ++a)
    for (ObjId b = 0; b < n; ++b) {
      for (ObjId c = 0; c < n; ++c) {
        TMor lhs = T.t_compose(
            L.underlying.mo[M.a_of(a, b, c)],
            T.t_compose(mu(M.ten(a, b), c), T.m_ten_mor(mu(a, b), id_of(c))));
        TMor rhs = T.t_compose(
            mu(a, M.ten(b, c)),
            T.t_compose(T.m_ten_mor(id_of(a), mu(b, c)), T.m_assoc(F(a), F(b), F(c))));
        if (lhs != rhs)
          r.add_axiom("lax-assoc", "(" + std::to_string(a) + "," + std::to_string(b) + "," +
                                       std::to_string(c) + ")");
      }
      TMor lhs = T.t_compose(L.underlying.mo[M.s_of(a, b)], mu(a, b));
      TMor rhs = T.t_compose(mu(b, a), T.m_symm(F(a), F(b)));
      if (lhs != rhs)
        r.add_axiom("lax-symmetry", "(" + std::to_string(a) + "," + std::to_string(b) + ")");
    }

  for (ObjId a = 0; a < n; ++a) {
    TMor lhs = T.t_compose(
        L.underlying.mo[M.lunit[a]],
        T.t_compose(mu(M.unit, a), T.m_ten_mor(L.unit_component, id_of(a))));
    if (lhs != T.m_lunit(F(a))) r.add_axiom("lax-left-unit", std::to_string(a));
    TMor rhs = T.t_compose(
        L.underlying.mo[M.runit[a]],
        T.t_compose(mu(a, M.unit), T.m_ten_mor(id_of(a), L.unit_component)));
    if (rhs != T.m_runit(F(a))) r.add_axiom("lax-right-unit", std::to_string(a));
  }
  return r;
}

// ---------------------------------------------------------------------------
// Lax symmetric monoidal maps between monoidal bases

struct LaxMonoidalMap {
  fincat::Functor underlying;
  std::vector<MorId> mult;       // kNoMor marks a required component with no candidate
  MorId unit_component = kNoMor;
};

// components forced by unique homs; suited to thin or discrete codomains
inline LaxMonoidalMap lax_from_object_map(const SymMonoidalStructure& src,
                                          const SymMonoidalStructure& dst,
                                          std::vector<ObjId> h) {
  const fincat::FinCategory& C = *src.cat;
  const fincat::FinCategory& D = *dst.cat;
  const int n = C.object_count();
  LaxMonoidalMap L;
  L.underlying = fincat::Functor{src.cat, dst.cat, h, {}};
  auto unique_hom = [&](ObjId a, ObjId b, const char* what) -> MorId {
    const auto& hs = D.hom(a, b);
    if (hs.size() > 1)
      throw DomainError(std::string("lax_from_object_map: ") + what +
                        " component is not forced; construct it explicitly");
    return hs.empty() ? kNoMor : hs[0];
  };
  for (MorId u = 0; u < C.morphism_count(); ++u) {
    MorId m = unique_hom(h[C.source(u)], h[C.target(u)], "functor");
    if (m == kNoMor)
      throw DomainError("lax_from_object_map: object map is not functorial at morphism " +
                        std::to_string(u));
    L.underlying.mo.push_back(m);
  }
  for (ObjId a = 0; a < n; ++a)
    for (ObjId b = 0; b < n; ++b)
      L.mult.push_back(unique_hom(dst.ten(h[a], h[b]), h[src.ten(a, b)], "mult"));
  L.unit_component = unique_hom(dst.unit, h[src.unit], "unit");
  return L;
}

inline ValidationReport validate_lax(const SymMonoidalStructure& src,
                                     const SymMonoidalStructure& dst, const LaxMonoidalMap& L) {
  const fincat::FinCategory& C = *src.cat;
  const fincat::FinCategory& D = *dst.cat;
  const int n = C.object_count();
  ValidationReport r;
  r.merge(fincat::validate_functor(L.underlying), "underlying");
  if (static_cast<int>(L.mult.size()) != n * n)
    r.add_structural("mult-size", std::to_string(L.mult.size()) + " components for " +
                                      std::to_string(n) + " objects");
  const auto& h = L.underlying.ob;
  if (r.structural.empty())
    for (ObjId a = 0; a < n; ++a)
      for (ObjId b = 0; b < n; ++b) {
        MorId mu = L.mult[a * n + b];
        if (mu == kNoMor) {
          r.add_structural("missing-component",
                           "(" + std::to_string(a) + "," + std::to_string(b) + ")");
          continue;
        }
        if (D.source(mu) != dst.ten(h[a], h[b]) || D.target(mu) != h[src.ten(a, b)])
          r.add_structural("mult-endpoints",
                           "(" + std::to_string(a) + "," + std::to_string(b) + ")");
      }
  if (L.unit_component == kNoMor)
    r.add_structural("missing-component", "unit");
  else if (D.source(L.unit_component) != dst.unit || D.target(L.unit_component) != h[src.unit])
    r.add_structural("unit-endpoints", "");
  if (!r.ok()) return r;

  auto mu = [&](ObjId a, ObjId b) { return L.mult[a * n + b]; };
  for (MorId u = 0; u < C.morphism_count(); ++u)
    for (MorId v = 0; v < C.morphism_count(); ++v) {
      ObjId a = C.source(u), a2 = C.target(u);
      ObjId b = C.source(v), b2 = C.target(v);
      if (D.compose(mu(a2, b2), dst.ten_m(L.underlying.mo[u], L.underlying.mo[v])) !=
          D.compose(L.underlying.mo[src.ten_m(u, v)], mu(a, b)))
        r.add_axiom("lax-naturality", "(" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
  for (ObjId a = 0; a < n; ++a)
    for (ObjId b = 0; b < n; ++b) {
      for (ObjId c = 0; c < n; ++c) {
        MorId lhs = D.compose(
            L.underlying.mo[src.a_of(a, b, c)],
            D.compose(mu(src.ten(a, b), c), dst.ten_m(mu(a, b), D.identity(h[c]))));
        MorId rhs = D.compose(
            mu(a, src.ten(b, c)),
            D.compose(dst.ten_m(D.identity(h[a]), mu(b, c)), dst.a_of(h[a], h[b], h[c])));
        if (lhs != rhs)
          r.add_axiom("lax-assoc", "(" + std::to_string(a) + "," + std::to_string(b) + "," +
                                       std::to_string(c) + ")");
      }
      if (D.compose(L.underlying.mo[src.s_of(a, b)], mu(a, b)) !=
          D.compose(mu(b, a), dst.s_of(h[a], h[b])))
        r.add_axiom("lax-symmetry", "(" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
  for (ObjId a = 0; a < n; ++a) {
    if (D.compose(L.underlying.mo[src.lunit[a]],
                  D.compose(mu(src.unit, a), dst.ten_m(L.unit_component, D.identity(h[a])))) !=
        dst.lunit[h[a]])
      r.add_axiom("lax-left-unit", std::to_string(a));
    if (D.compose(L.underlying.mo[src.runit[a]],
                  D.compose(mu(a, src.unit), dst.ten_m(D.identity(h[a]), L.unit_component))) !=
        dst.runit[h[a]])
      r.add_axiom("lax-right-unit", std::to_string(a));
  }
  return r;
}

// ---------------------------------------------------------------------------
// Commutative monoid objects for the Day tensor

struct CommutativeMonoidObject {
  TFunctor carrier;
  TNat mult;  // day(F,F) -> F, against the shape's presentation
  TNat unit;  // day unit -> F
};

// presentations over a fixed carrier, shared by validation, translation,
// and every enumeration candidate
struct MonoidShape {
  const SymMonoidalStructure* M = nullptr;
  CocompleteTarget* T = nullptr;
  TFunctor F;
  DayUnitResult J;
  DayTensorResult P;        // F (*) F
  DayTensorResult PL, PR;   // (F(*)F)(*)F and F(*)(F(*)F)
  DayTensorResult JF, FJ;
  TNat alpha, lambda, rho, sigma;  // canonical structure chases
};

inline MonoidShape monoid_shape(const SymMonoidalStructure& M, CocompleteTarget& T,
                                TFunctor F) {
  MonoidShape sh;
  sh.M = &M;
  sh.T = &T;
  sh.F = std::move(F);
  sh.J = day::day_unit(M, T);
  sh.P = day::day_tensor(M, T, sh.F, sh.F);
  sh.PL = day::day_tensor(M, T, sh.P.conv, sh.F);
  sh.PR = day::day_tensor(M, T, sh.F, sh.P.conv);
  sh.JF = day::day_tensor(M, T, sh.J.unit, sh.F);
  sh.FJ = day::day_tensor(M, T, sh.F, sh.J.unit);
  sh.alpha = day::day_assoc(M, sh.P, sh.P, sh.PL, sh.PR, sh.F, sh.F, sh.F);
  sh.lambda = day::day_lunit(M, sh.J, sh.JF, sh.F);
  sh.rho = day::day_runit(M, sh.J, sh.FJ, sh.F);
  sh.sigma = day::day_symm(M, sh.P, sh.P, sh.F, sh.F);
  return sh;
}

inline ValidationReport validate_monoid(const MonoidShape& sh,
                                        const CommutativeMonoidObject& mo) {
  CocompleteTarget& T = *sh.T;
  ValidationReport r;
  if (mo.carrier.ob != sh.F.ob || mo.carrier.mo != sh.F.mo)
    r.add_structural("carrier-mismatch", "monoid carrier differs from the shape's");
  r.merge(cocomplete::validate_tnat(sh.P.conv, sh.F, mo.mult), "multiplication");
  r.merge(cocomplete::validate_tnat(sh.J.unit, sh.F, mo.unit), "unit");
  if (!r.ok()) return r;

  TNat idF = day::identity_tnat(sh.F);
  TNat mul_left = day::day_map(sh.PL, sh.P, mo.mult, idF);    // m (*) id
  TNat mul_right = day::day_map(sh.PR, sh.P, idF, mo.mult);   // id (*) m
  TNat lhs = day::compose_tnat(T, mo.mult, mul_left);
  TNat rhs = day::compose_tnat(T, mo.mult, day::compose_tnat(T, mul_right, sh.alpha));
  if (lhs.comp != rhs.comp) r.add_axiom("monoid-assoc", "");

  TNat unit_left = day::day_map(sh.JF, sh.P, mo.unit, idF);
  if (day::compose_tnat(T, mo.mult, unit_left).comp != sh.lambda.comp)
    r.add_axiom("monoid-left-unit", "");
  TNat unit_right = day::day_map(sh.FJ, sh.P, idF, mo.unit);
  if (day::compose_tnat(T, mo.mult, unit_right).comp != sh.rho.comp)
    r.add_axiom("monoid-right-unit", "");

  if (day::compose_tnat(T, mo.mult, sh.sigma).comp != mo.mult.comp)
    r.add_axiom("monoid-commutativity", "");
  return r;
}

// monoid-object morphisms and monoidal transformations, for the naturality of
// the correspondence
inline bool is_monoid_morphism(const MonoidShape& from, const MonoidShape& to,
                               const CommutativeMonoidObject& a,
                               const CommutativeMonoidObject& b, const TNat& psi) {
  CocompleteTarget& T = *from.T;
  TNat psi2 = day::day_map(from.P, to.P, psi, psi);
  if (day::compose_tnat(T, b.mult, psi2).comp !=
      day::compose_tnat(T, psi, a.mult).comp)
    return false;
  return day::compose_tnat(T, psi, a.unit).comp == b.unit.comp;
}

inline bool is_monoidal_nat(const SymMonoidalStructure& M, const LaxMonoidalFunctor& a,
                            const LaxMonoidalFunctor& b, const TNat& psi) {
  CocompleteTarget& T = *a.underlying.target;
  const int n = M.cat->object_count();
  for (ObjId x = 0; x < n; ++x)
    for (ObjId y = 0; y < n; ++y)
      if (T.t_compose(psi.comp[M.ten(x, y)], a.mult[x * n + y]) !=
          T.t_compose(b.mult[x * n + y], T.m_ten_mor(psi.comp[x], psi.comp[y])))
        return false;
  return T.t_compose(psi.comp[M.unit], a.unit_component) == b.unit_component;
}

// ---------------------------------------------------------------------------
// The correspondence, constructive in both directions

// mu_{a,b} is the multiplication component after the colimit leg at the comma
// object ((a,b), id); epsilon likewise through the Day unit's presentation
inline LaxMonoidalFunctor monoid_to_lax(const MonoidShape& sh,
                                        const CommutativeMonoidObject& mo) {
  const SymMonoidalStructure& M = *sh.M;
  CocompleteTarget& T = *sh.T;
  const fincat::FinCategory& C = *M.cat;
  const int n = C.object_count();
  LaxMonoidalFunctor L;
  L.underlying = sh.F;
  L.mult.assign(n * n, -1);
  for (ObjId a = 0; a < n; ++a)
    for (ObjId b = 0; b < n; ++b) {
      ObjId x = M.ten(a, b);
      const auto& pres = sh.P.pres.at[x];
      auto node = pres.comma.find(sh.P.square.obj(a, b), C.identity(x));
      if (!node) throw DomainError("monoid_to_lax: comma object missing");
      L.mult[a * n + b] = T.t_compose(mo.mult.comp[x], pres.colim.legs[*node]);
    }
  const auto& upres = sh.J.pres.at[M.unit];
  auto node = upres.comma.find(0, C.identity(M.unit));
  if (!node) throw DomainError("monoid_to_lax: unit comma object missing");
  L.unit_component = T.t_compose(mo.unit.comp[M.unit], upres.colim.legs[*node]);
  return L;
}

// the multiplication is the mediator of the cocone F(chi) . mu_{a,b} over the
// convolution's comma presentation
inline CommutativeMonoidObject lax_to_monoid(const MonoidShape& sh,
                                             const LaxMonoidalFunctor& L) {
  const SymMonoidalStructure& M = *sh.M;
  CocompleteTarget& T = *sh.T;
  const int n = M.cat->object_count();
  CommutativeMonoidObject mo;
  mo.carrier = sh.F;
  for (ObjId x = 0; x < static_cast<ObjId>(sh.F.ob.size()); ++x) {
    const auto& pres = sh.P.pres.at[x];
    std::vector<TMor> cocone;
    for (ObjId i = 0; i < pres.comma.cat->object_count(); ++i) {
      auto [a, b] = sh.P.square.obj_parts(pres.comma.at[i]);
      cocone.push_back(T.t_compose(sh.F.mo[pres.comma.arm[i]], L.mult[a * n + b]));
    }
    auto med = T.mediate(pres.colim, pres.diagram, sh.F.ob[x], cocone);
    if (!med) throw DomainError("lax_to_monoid: mu components do not form a cocone");
    mo.mult.comp.push_back(*med);

    const auto& upres = sh.J.pres.at[x];
    std::vector<TMor> ucocone;
    for (ObjId i = 0; i < upres.comma.cat->object_count(); ++i)
      ucocone.push_back(T.t_compose(sh.F.mo[upres.comma.arm[i]], L.unit_component));
    auto umed = T.mediate(upres.colim, upres.diagram, sh.F.ob[x], ucocone);
    if (!umed) throw DomainError("lax_to_monoid: unit components do not form a cocone");
    mo.unit.comp.push_back(*umed);
  }
  return mo;
}

// validation-gated translation; the raw constructions above skip the check
inline LaxMonoidalFunctor monoid_lax_correspondence(const MonoidShape& sh,
                                                    const CommutativeMonoidObject& mo) {
  auto rep = validate_monoid(sh, mo);
  if (!rep.ok())
    throw DomainError("monoid_lax_correspondence: input fails validation\n" + rep.to_string());
  return monoid_to_lax(sh, mo);
}

inline CommutativeMonoidObject monoid_lax_correspondence(const MonoidShape& sh,
                                                         const LaxMonoidalFunctor& L) {
  auto rep = validate_lax(*sh.M, L);
  if (!rep.ok())
    throw DomainError("monoid_lax_correspondence: input fails validation\n" + rep.to_string());
  return lax_to_monoid(sh, L);
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration over bounded carriers (discrete bases)

// the grading-respecting table both structures share once presentation and
// pairing encodings are stripped away; the canonical key quotients by
// grade-wise relabeling
struct AbstractStructure {
  std::vector<int> profile;
  int unit_elem = -1;
  std::vector<std::vector<int>> table;  // [a * n + b][l * profile_b + r]
};

namespace detail_census {

inline std::vector<std::vector<std::vector<int>>> perms_per_grade(
    const std::vector<int>& profile) {
  std::vector<std::vector<std::vector<int>>> out;
  long long combos = 1;
  for (int s : profile) {
    std::vector<int> p(s);
    for (int i = 0; i < s; ++i) p[i] = i;
    std::vector<std::vector<int>> ps;
    do ps.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    combos *= static_cast<long long>(ps.size());
    if (combos > (1 << 20))
      throw ResourceCeilingError("isomorphism reduction: too many grade permutations");
    out.push_back(std::move(ps));
  }
  return out;
}

}  // namespace detail_census

inline std::vector<int> canonical_key(const SymMonoidalStructure& M,
                                      const AbstractStructure& s) {
  const int n = static_cast<int>(s.profile.size());
  auto grade_perms = detail_census::perms_per_grade(s.profile);
  std::vector<int> choice(n, 0), best;
  while (true) {
    std::vector<std::vector<int>> inv(n);
    for (int g = 0; g < n; ++g) {
      const auto& p = grade_perms[g][choice[g]];
      inv[g].assign(p.size(), 0);
      for (int i = 0; i < static_cast<int>(p.size()); ++i) inv[g][p[i]] = i;
    }
    std::vector<int> key;
    key.push_back(grade_perms[M.unit][choice[M.unit]][s.unit_elem]);
    for (ObjId a = 0; a < n; ++a)
      for (ObjId b = 0; b < n; ++b) {
        ObjId c = M.ten(a, b);
        const auto& pc = grade_perms[c][choice[c]];
        for (int l = 0; l < s.profile[a]; ++l)
          for (int r = 0; r < s.profile[b]; ++r)
            key.push_back(pc[s.table[a * n + b][inv[a][l] * s.profile[b] + inv[b][r]]]);
      }
    if (best.empty() || key < best) best = std::move(key);
    int g = n - 1;
    while (g >= 0 && ++choice[g] == static_cast<int>(grade_perms[g].size())) choice[g--] = 0;
    if (g < 0) break;
  }
  return best;
}

inline AbstractStructure abstract_of_lax(const SymMonoidalStructure& M,
                                         const LaxMonoidalFunctor& L) {
  CocompleteTarget& T = *L.underlying.target;
  const int n = M.cat->object_count();
  AbstractStructure s;
  for (TObj o : L.underlying.ob) s.profile.push_back(T.t_card(o));
  s.unit_elem = T.t_apply(L.unit_component, 0);
  s.table.assign(n * n, {});
  for (ObjId a = 0; a < n; ++a)
    for (ObjId b = 0; b < n; ++b) {
      auto& tab = s.table[a * n + b];
      for (int l = 0; l < s.profile[a]; ++l)
        for (int r = 0; r < s.profile[b]; ++r)
          tab.push_back(T.t_apply(L.mult[a * n + b],
                                  T.m_pair(L.underlying.ob[a], L.underlying.ob[b], l, r)));
    }
  return s;
}

inline AbstractStructure abstract_of_monoid(const MonoidShape& sh,
                                            const CommutativeMonoidObject& mo) {
  const SymMonoidalStructure& M = *sh.M;
  CocompleteTarget& T = *sh.T;
  const fincat::FinCategory& C = *M.cat;
  const int n = C.object_count();
  AbstractStructure s;
  for (TObj o : sh.F.ob) s.profile.push_back(T.t_card(o));
  s.unit_elem = T.t_apply(mo.unit.comp[M.unit], 0);
  s.table.assign(n * n, {});
  for (ObjId a = 0; a < n; ++a)
    for (ObjId b = 0; b < n; ++b) {
      ObjId x = M.ten(a, b);
      auto& tab = s.table[a * n + b];
      for (int l = 0; l < s.profile[a]; ++l)
        for (int r = 0; r < s.profile[b]; ++r)
          tab.push_back(T.t_apply(
              mo.mult.comp[x],
              day::encode_conv(sh.P, sh.F, sh.F, x, a, b, C.identity(x), l, r)));
    }
  return s;
}

struct StructureCensus {
  std::vector<std::vector<int>> profiles;
  std::vector<MonoidShape> shapes;  // aligned with profiles
  std::vector<std::vector<CommutativeMonoidObject>> monoids;
  std::vector<std::vector<LaxMonoidalFunctor>> laxes;

  long long monoid_total() const {
    long long t = 0;
    for (const auto& v : monoids) t += static_cast<long long>(v.size());
    return t;
  }
  long long lax_total() const {
    long long t = 0;
    for (const auto& v : laxes) t += static_cast<long long>(v.size());
    return t;
  }
};

namespace detail_census {

// backtracking over free slots with mirror forcing and raw associativity
// pruning; every completion goes through the side's full validator
template <typename ForcedFn, typename AssocFn, typename EmitFn>
inline void search_tables(std::vector<std::vector<int>>& tabs,
                          const std::vector<std::pair<int, int>>& slots,
                          const std::vector<int>& slot_range, std::size_t k,
                          ForcedFn&& forced, AssocFn&& assoc_ok, EmitFn&& emit) {
  if (k == slots.size()) {
    emit();
    return;
  }
  auto [t, i] = slots[k];
  if (tabs[t][i] >= 0) {  // prefilled
    search_tables(tabs, slots, slot_range, k + 1, forced, assoc_ok, emit);
    return;
  }
  int f = forced(t, i);
  for (int v = 0; v < slot_range[k]; ++v) {
    if (f >= 0 && v != f) continue;
    tabs[t][i] = v;
    if (assoc_ok()) search_tables(tabs, slots, slot_range, k + 1, forced, assoc_ok, emit);
    tabs[t][i] = -1;
  }
}

}  // namespace detail_census

inline StructureCensus enumerate_structures(const SymMonoidalStructure& M, CocompleteTarget& T,
                                            int carrier_bound) {
  const fincat::FinCategory& C = *M.cat;
  const int n = C.object_count();
  if (C.morphism_count() != n)
    throw DomainError("enumerate_structures: base must be discrete");
  if (T.is_thin())
    throw DomainError("enumerate_structures: target must expose elements");
  double total_profiles = 1;
  for (int i = 0; i < n; ++i) total_profiles *= carrier_bound + 1;
  if (total_profiles > 4096)
    throw ResourceCeilingError("enumerate_structures: profile space too large");

  StructureCensus census;
  std::vector<int> profile(n, 0);
  while (true) {
    census.profiles.push_back(profile);

    TFunctor F{M.cat, &T, {}, {}};
    for (int s : profile) F.ob.push_back(s);
    for (MorId m = 0; m < C.morphism_count(); ++m)
      F.mo.push_back(T.t_identity(F.ob[C.source(m)]));
    census.shapes.push_back(monoid_shape(M, T, F));
    const MonoidShape& sh = census.shapes.back();

    // pairing-to-apex and symmetry tables, shared across unit choices
    std::vector<std::vector<int>> enc(n * n), sig(n);
    for (ObjId a = 0; a < n; ++a)
      for (ObjId b = 0; b < n; ++b) {
        ObjId x = M.ten(a, b);
        for (int l = 0; l < profile[a]; ++l)
          for (int r = 0; r < profile[b]; ++r)
            enc[a * n + b].push_back(
                day::encode_conv(sh.P, sh.F, sh.F, x, a, b, C.identity(x), l, r));
      }
    for (ObjId x = 0; x < n; ++x)
      for (int i = 0; i < T.t_card(sh.P.conv.ob[x]); ++i)
        sig[x].push_back(T.t_apply(sh.sigma.comp[x], i));

    std::vector<CommutativeMonoidObject> found_monoids;
    std::vector<LaxMonoidalFunctor> found_laxes;
    std::map<std::vector<int>, bool> seen_m, seen_l;

    for (int e = 0; e < profile[M.unit]; ++e) {
      // ------------------------------------------------ lax side: mu tables
      {
        std::vector<std::vector<int>> tabs(n * n);
        std::vector<std::pair<int, int>> slots;
        std::vector<int> slot_range;
        bool consistent = true;
        for (ObjId a = 0; a < n && consistent; ++a)
          for (ObjId b = 0; b < n && consistent; ++b) {
            int cells = profile[a] * profile[b];
            tabs[a * n + b].assign(cells, -1);
            for (int i = 0; i < cells; ++i) {
              slots.push_back({a * n + b, i});
              slot_range.push_back(profile[M.ten(a, b)]);
            }
            if (a == M.unit)
              for (int r = 0; r < profile[b]; ++r)
                tabs[a * n + b][T.m_pair(profile[a], profile[b], e, r)] = r;
            if (b == M.unit)
              for (int l = 0; l < profile[a]; ++l) {
                int cell = T.m_pair(profile[a], profile[b], l, e);
                if (tabs[a * n + b][cell] >= 0 && tabs[a * n + b][cell] != l) consistent = false;
                tabs[a * n + b][cell] = l;
              }
          }
        auto forced = [&](int t, int i) -> int {  // symmetry mirror
          ObjId a = t / n, b = t % n;
          auto [l, r] = T.m_unpair(profile[a], profile[b], i);
          int mt = b * n + a;
          int mi = T.m_pair(profile[b], profile[a], r, l);
          return tabs[mt][mi];
        };
        auto assoc_ok = [&]() {
          for (ObjId a = 0; a < n; ++a)
            for (ObjId b = 0; b < n; ++b)
              for (ObjId c = 0; c < n; ++c) {
                ObjId ab = M.ten(a, b), bc = M.ten(b, c), abc = M.ten(ab, c);
                for (int x = 0; x < profile[a]; ++x)
                  for (int y = 0; y < profile[b]; ++y) {
                    int v1 = tabs[a * n + b][T.m_pair(profile[a], profile[b], x, y)];
                    if (v1 < 0) continue;
                    for (int z = 0; z < profile[c]; ++z) {
                      int v2 = tabs[ab * n + c][T.m_pair(profile[ab], profile[c], v1, z)];
                      if (v2 < 0) continue;
                      int w1 = tabs[b * n + c][T.m_pair(profile[b], profile[c], y, z)];
                      if (w1 < 0) continue;
                      int w2 = tabs[a * n + bc][T.m_pair(profile[a], profile[bc], x, w1)];
                      if (w2 >= 0 && v2 != w2) return false;
                    }
                  }
              }
          return true;
        };
        auto emit = [&]() {
          LaxMonoidalFunctor L;
          L.underlying = sh.F;
          for (ObjId a = 0; a < n; ++a)
            for (ObjId b = 0; b < n; ++b)
              L.mult.push_back(
                  T.t_make_mor(T.m_ten(F.ob[a], F.ob[b]), F.ob[M.ten(a, b)], tabs[a * n + b]));
          L.unit_component = T.t_make_mor(T.m_unit(), F.ob[M.unit], {e});
          if (!validate_lax(M, L).ok()) return;
          auto key = canonical_key(M, abstract_of_lax(M, L));
          if (!seen_l.emplace(std::move(key), true).second) return;
          found_laxes.push_back(std::move(L));
        };
        if (consistent)
          detail_census::search_tables(tabs, slots, slot_range, 0, forced, assoc_ok, emit);
      }

      // ------------------------------------------- monoid side: apex tables
      {
        std::vector<std::vector<int>> tabs(n);
        std::vector<std::vector<day::ConvElement>> dec(n);
        std::vector<std::pair<int, int>> slots;
        std::vector<int> slot_range;
        bool consistent = true;
        for (ObjId x = 0; x < n; ++x) {
          int cells = T.t_card(sh.P.conv.ob[x]);
          tabs[x].assign(cells, -1);
          for (int i = 0; i < cells; ++i) {
            dec[x].push_back(day::decode_conv(sh.P, sh.F, sh.F, x, i));
            slots.push_back({x, i});
            slot_range.push_back(profile[x]);
            const auto& d = dec[x].back();
            int want = -1;
            if (d.a == M.unit && d.left == e) want = d.right;
            if (d.b == M.unit && d.right == e) {
              if (want >= 0 && want != d.left) consistent = false;
              want = d.left;
            }
            if (want >= 0) tabs[x][i] = want;
          }
        }
        auto forced = [&](int x, int i) -> int {  // commutativity mirror
          return tabs[x][sig[x][i]];
        };
        auto assoc_ok = [&]() {
          for (ObjId a = 0; a < n; ++a)
            for (ObjId b = 0; b < n; ++b)
              for (ObjId c = 0; c < n; ++c) {
                ObjId ab = M.ten(a, b), bc = M.ten(b, c), abc = M.ten(ab, c);
                for (int x = 0; x < profile[a]; ++x)
                  for (int y = 0; y < profile[b]; ++y) {
                    int v1 = tabs[ab][enc[a * n + b][x * profile[b] + y]];
                    if (v1 < 0) continue;
                    for (int z = 0; z < profile[c]; ++z) {
                      int v2 = tabs[abc][enc[ab * n + c][v1 * profile[c] + z]];
                      if (v2 < 0) continue;
                      int w1 = tabs[bc][enc[b * n + c][y * profile[c] + z]];
                      if (w1 < 0) continue;
                      int w2 = tabs[abc][enc[a * n + bc][x * profile[bc] + w1]];
                      if (w2 >= 0 && v2 != w2) return false;
                    }
                  }
              }
          return true;
        };
        auto emit = [&]() {
          CommutativeMonoidObject mo;
          mo.carrier = sh.F;
          for (ObjId x = 0; x < n; ++x)
            mo.mult.comp.push_back(T.t_make_mor(sh.P.conv.ob[x], sh.F.ob[x], tabs[x]));
          for (ObjId x = 0; x < n; ++x) {
            std::vector<int> utab(T.t_card(sh.J.unit.ob[x]), e);
            mo.unit.comp.push_back(T.t_make_mor(sh.J.unit.ob[x], sh.F.ob[x], utab));
          }
          if (!validate_monoid(sh, mo).ok()) return;
          auto key = canonical_key(M, abstract_of_monoid(sh, mo));
          if (!seen_m.emplace(std::move(key), true).second) return;
          found_monoids.push_back(std::move(mo));
        };
        if (consistent)
          detail_census::search_tables(tabs, slots, slot_range, 0, forced, assoc_ok, emit);
      }
    }

    census.monoids.push_back(std::move(found_monoids));
    census.laxes.push_back(std::move(found_laxes));

    int g = n - 1;
    while (g >= 0 && ++profile[g] > carrier_bound) profile[g--] = 0;
    if (g < 0) break;
  }
  return census;
}

// counts agree per profile; translation is a key-preserving bijection whose
// images pass the other side's validator; round-trips are exact
inline ValidationReport check_correspondence(const SymMonoidalStructure& M,
                                             const StructureCensus& census) {
  ValidationReport r;
  for (std::size_t s = 0; s < census.profiles.size(); ++s) {
    std::string pstr = "(";
    for (std::size_t i = 0; i < census.profiles[s].size(); ++i)
      pstr += (i ? "," : "") + std::to_string(census.profiles[s][i]);
    pstr += ")";
    const auto& sh = census.shapes[s];
    const auto& ms = census.monoids[s];
    const auto& ls = census.laxes[s];
    if (ms.size() != ls.size()) {
      r.add_axiom("census-count", "profile " + pstr + ": " + std::to_string(ms.size()) +
                                      " monoids vs " + std::to_string(ls.size()) + " lax");
      continue;
    }
    std::vector<std::vector<int>> lax_keys, translated_keys;
    for (const auto& L : ls) lax_keys.push_back(canonical_key(M, abstract_of_lax(M, L)));
    for (const auto& mo : ms) {
      LaxMonoidalFunctor L = monoid_to_lax(sh, mo);
      if (!validate_lax(M, L).ok())
        r.add_axiom("translation-invalid", "monoid->lax at profile " + pstr);
      translated_keys.push_back(canonical_key(M, abstract_of_lax(M, L)));
      CommutativeMonoidObject back = lax_to_monoid(sh, L);
      if (back.mult.comp != mo.mult.comp || back.unit.comp != mo.unit.comp)
        r.add_axiom("roundtrip-monoid", "profile " + pstr);
    }
    for (const auto& L : ls) {
      CommutativeMonoidObject mo = lax_to_monoid(sh, L);
      if (!validate_monoid(sh, mo).ok())
        r.add_axiom("translation-invalid", "lax->monoid at profile " + pstr);
      LaxMonoidalFunctor back = monoid_to_lax(sh, mo);
      if (back.mult != L.mult || back.unit_component != L.unit_component)
        r.add_axiom("roundtrip-lax", "profile " + pstr);
    }
    std::sort(lax_keys.begin(), lax_keys.end());
    std::sort(translated_keys.begin(), translated_keys.end());
    if (lax_keys != translated_keys)
      r.add_axiom("correspondence-mismatch", "profile " + pstr);
  }
  return r;
}

}  // namespace dayconv::laxmon
