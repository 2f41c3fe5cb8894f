#include <catch2/catch_amalgamated.hpp>

#include "dayconv/cocomplete.hpp"
#include "dayconv/corpus.hpp"

using namespace dayconv;
using namespace dayconv::cocomplete;
using fincat::CatRef;

namespace {

CatRef terminal_cat() { return corpus::discrete_category(1); }

// span a <- c -> b with injective legs, for pushouts
struct Span {
  CatRef shape;
  MorId f, g;  // c->a, c->b
};

Span span_shape() {
  fincat::FinCategoryBuilder b;
  ObjId c = b.add_object(), a = b.add_object(), bb = b.add_object();
  b.add_identity(c);
  b.add_identity(a);
  b.add_identity(bb);
  MorId f = b.add_morphism(c, a);
  MorId g = b.add_morphism(c, bb);
  return {b.build_with_identities(), f, g};
}

}  // namespace

TEST_CASE("empty diagram has an empty colimit in finite sets") {
  FinSetTarget T;
  Diagram d{corpus::discrete_category(0), &T, {}, {}};
  auto c = T.colimit(d);
  CHECK(c.apex == 0);
  CHECK(c.legs.empty());
  CHECK(c.reps.empty());
}

TEST_CASE("coproduct of sizes 2 and 3 has size 5") {
  FinSetTarget T;
  auto shape = corpus::discrete_category(2);
  Diagram d{shape, &T, {2, 3}, {T.t_identity(2), T.t_identity(3)}};
  auto c = T.colimit(d);
  CHECK(c.apex == 5);
}

TEST_CASE("pushout of injections 3 and 2 along 1 has size 4") {
  FinSetTarget T;
  auto sp = span_shape();
  Diagram d{sp.shape, &T, {1, 3, 2}, {}};
  d.mo.resize(sp.shape->morphism_count());
  d.mo[sp.shape->identity(0)] = T.t_identity(1);
  d.mo[sp.shape->identity(1)] = T.t_identity(3);
  d.mo[sp.shape->identity(2)] = T.t_identity(2);
  d.mo[sp.f] = T.t_make_mor(1, 3, {0});
  d.mo[sp.g] = T.t_make_mor(1, 2, {0});
  REQUIRE(validate_tfunctor(d).ok());
  auto c = T.colimit(d);
  REQUIRE(c.apex == 4);
  // canonical representatives: glued point first, then the unglued ones
  CHECK(c.reps == std::vector<std::pair<int, int>>{{0, 0}, {1, 1}, {1, 2}, {2, 1}});
  CHECK(T.values_of(c.legs[1]) == std::vector<int>{0, 1, 2});
  CHECK(T.values_of(c.legs[2]) == std::vector<int>{0, 3});
}

TEST_CASE("coequalizer collapses chained identifications") {
  FinSetTarget T;
  fincat::FinCategoryBuilder b;
  ObjId x = b.add_object(), y = b.add_object();
  b.add_identity(x);
  b.add_identity(y);
  MorId p = b.add_morphism(x, y), q = b.add_morphism(x, y);
  auto shape = b.build_with_identities();
  Diagram d{shape, &T, {2, 3}, {}};
  d.mo.resize(shape->morphism_count());
  d.mo[shape->identity(x)] = T.t_identity(2);
  d.mo[shape->identity(y)] = T.t_identity(3);
  d.mo[p] = T.t_make_mor(2, 3, {0, 1});
  d.mo[q] = T.t_make_mor(2, 3, {1, 2});
  auto c = T.colimit(d);
  CHECK(c.apex == 1);
}

TEST_CASE("mediator is forced by the cocone and detects inconsistency") {
  FinSetTarget T;
  auto sp = span_shape();
  Diagram d{sp.shape, &T, {1, 3, 2}, {}};
  d.mo.resize(sp.shape->morphism_count());
  d.mo[sp.shape->identity(0)] = T.t_identity(1);
  d.mo[sp.shape->identity(1)] = T.t_identity(3);
  d.mo[sp.shape->identity(2)] = T.t_identity(2);
  d.mo[sp.f] = T.t_make_mor(1, 3, {0});
  d.mo[sp.g] = T.t_make_mor(1, 2, {0});
  auto c = T.colimit(d);

  std::vector<TMor> cocone = {T.t_make_mor(1, 2, {0}), T.t_make_mor(3, 2, {0, 1, 1}),
                              T.t_make_mor(2, 2, {0, 1})};
  auto med = T.mediate(c, d, 2, cocone);
  REQUIRE(med.has_value());
  CHECK(T.values_of(*med) == std::vector<int>{0, 1, 1, 1});

  cocone[0] = T.t_make_mor(1, 2, {1});  // now disagrees through the span
  CHECK_FALSE(T.mediate(c, d, 2, cocone).has_value());
}

TEST_CASE("semilattice colimits are joins") {
  SemilatticeTarget T(corpus::div12(), "div12");
  auto shape = corpus::discrete_category(2);
  Diagram d{shape, &T, {1, 2}, {T.t_identity(1), T.t_identity(2)}};  // divisors 2 and 3
  auto c = T.colimit(d);
  CHECK(c.apex == 4);  // lcm(2,3) = 6, object index 4
  CHECK(T.t_source(c.legs[0]) == 1);
  CHECK(T.t_target(c.legs[0]) == 4);
  // empty diagram gives the bottom element
  Diagram e{corpus::discrete_category(0), &T, {}, {}};
  CHECK(T.colimit(e).apex == 0);
  // mediation is order search
  CHECK(T.mediate(c, d, 5, {}).has_value());   // 6 <= 12
  CHECK_FALSE(T.mediate(c, d, 3, {}).has_value());  // 6 is not below 4
}

TEST_CASE("semilattice target rejects non-thin or bottomless structures") {
  CHECK_THROWS_AS(SemilatticeTarget(corpus::z2(), "z2"), DomainError);
}

TEST_CASE("cardinality ceiling aborts oversized computations") {
  FinSetTarget T(10);
  CHECK_THROWS_AS(T.m_ten(4, 5), ResourceCeilingError);
  CHECK_THROWS_AS(T.t_hom(5, 5), ResourceCeilingError);
  auto shape = corpus::discrete_category(2);
  Diagram d{shape, &T, {8, 8}, {T.t_identity(8), T.t_identity(8)}};
  CHECK_THROWS_AS(T.colimit(d), ResourceCeilingError);
}

TEST_CASE("finset symmetry is the pair swap and associator is identity") {
  FinSetTarget T;
  CHECK(T.m_assoc(2, 3, 4) == T.t_identity(24));
  CHECK(T.m_lunit(5) == T.t_identity(5));
  TMor s = T.m_symm(2, 3);
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 3; ++y) CHECK(T.t_apply(s, T.m_pair(2, 3, x, y)) == T.m_pair(3, 2, y, x));
  CHECK(T.is_bijective(T.t_compose(T.m_symm(3, 2), s)));
  CHECK(T.t_compose(T.m_symm(3, 2), s) == T.t_identity(6));
}

TEST_CASE("kan extension along the identity has bijective unit") {
  FinSetTarget T;
  auto arrow = corpus::walking_arrow();
  TFunctor F{arrow, &T, {2, 3}, {}};
  F.mo = {T.t_identity(2), T.t_identity(3), T.t_make_mor(2, 3, {0, 2})};
  REQUIRE(validate_tfunctor(F).ok());
  auto lan = left_kan_extension(F, fincat::identity_functor(arrow));
  REQUIRE(validate_tfunctor(lan.lan).ok());
  CHECK(lan.lan.ob == F.ob);
  for (ObjId a = 0; a < 2; ++a) CHECK(T.is_bijective(lan.unit[a]));
}

TEST_CASE("kan extension to the terminal category computes the colimit") {
  FinSetTarget T;
  auto z2cat = corpus::discrete_category(2);
  TFunctor F{z2cat, &T, {2, 3}, {T.t_identity(2), T.t_identity(3)}};
  fincat::Functor K{z2cat, terminal_cat(), {0, 0}, {0, 0}};
  REQUIRE(fincat::validate_functor(K).ok());
  auto lan = left_kan_extension(F, K);
  CHECK(lan.lan.ob[0] == 5);
}

TEST_CASE("kan extension along a non-full inclusion leaves a gap") {
  FinSetTarget T;
  auto arrow = corpus::walking_arrow();
  // include the terminal object t; nothing maps to s
  fincat::Functor K{terminal_cat(), arrow, {1}, {arrow->identity(1)}};
  REQUIRE(fincat::validate_functor(K).ok());
  TFunctor F{terminal_cat(), &T, {3}, {T.t_identity(3)}};
  auto lan = left_kan_extension(F, K);
  CHECK(lan.lan.ob[0] == 0);  // no comma objects over s
  CHECK(lan.lan.ob[1] == 3);
  CHECK(T.is_bijective(lan.unit[0]));  // fully faithful K: unit is iso
}

TEST_CASE("final functor detection") {
  auto arrow = corpus::walking_arrow();
  CHECK(is_final_functor(fincat::identity_functor(arrow)));
  fincat::Functor incl_t{terminal_cat(), arrow, {1}, {arrow->identity(1)}};
  CHECK(is_final_functor(incl_t));
  fincat::Functor incl_s{terminal_cat(), arrow, {0}, {arrow->identity(0)}};
  CHECK_FALSE(is_final_functor(incl_s));
  // two points into the arrow: comma under t is disconnected? no — it is
  // nonempty but has two components over t only if both land there; check a
  // genuinely disconnected case instead: discrete(2) into discrete(2)
  auto d2 = corpus::discrete_category(2);
  CHECK(is_final_functor(fincat::identity_functor(d2)));
  fincat::Functor diag{terminal_cat(), d2, {0}, {d2->identity(0)}};
  CHECK_FALSE(is_final_functor(diag));  // comma under object 1 is empty
}

TEST_CASE("colimits are invariant under restriction along a final functor") {
  FinSetTarget T;
  auto arrow = corpus::walking_arrow();
  TFunctor d{arrow, &T, {2, 3}, {}};
  d.mo = {T.t_identity(2), T.t_identity(3), T.t_make_mor(2, 3, {2, 0})};
  fincat::Functor incl_t{terminal_cat(), arrow, {1}, {arrow->identity(1)}};
  REQUIRE(is_final_functor(incl_t));
  auto full = T.colimit(d);
  Diagram restricted{terminal_cat(), &T, {d.ob[1]}, {d.mo[arrow->identity(1)]}};
  auto rest = T.colimit(restricted);
  CHECK(full.apex == rest.apex);
}

TEST_CASE("functor and nat-trans enumeration counts are exact on small shapes") {
  FinSetTarget T;
  auto fs = enumerate_tfunctors(terminal_cat(), T, 3);
  CHECK(fs.size() == 4);  // cardinalities 0..3

  auto arrow = corpus::walking_arrow();
  auto fa = enumerate_tfunctors(arrow, T, 1);
  CHECK(fa.size() == 3);  // (0,0), (0,1), (1,1)

  TFunctor F{corpus::discrete_category(1), &T, {2}, {T.t_identity(2)}};
  auto ns = enumerate_tnats(F, F);
  CHECK(ns.size() == 4);  // all functions 2 -> 2
}

TEST_CASE("natural isomorphism search respects naturality") {
  FinSetTarget T;
  auto arrow = corpus::walking_arrow();
  TFunctor F{arrow, &T, {2, 2}, {}};
  F.mo = {T.t_identity(2), T.t_identity(2), T.t_identity(2)};
  TFunctor G{arrow, &T, {2, 2}, {}};
  G.mo = {T.t_identity(2), T.t_identity(2), T.t_make_mor(2, 2, {1, 0})};
  auto iso = find_tnat_iso(F, G);
  REQUIRE(iso.has_value());
  REQUIRE(validate_tnat(F, G, *iso).ok());

  TFunctor H{arrow, &T, {2, 2}, {}};
  H.mo = {T.t_identity(2), T.t_identity(2), T.t_make_mor(2, 2, {0, 0})};
  CHECK_FALSE(find_tnat_iso(F, H).has_value());  // would force a non-bijection

  TFunctor small{arrow, &T, {1, 2}, {T.t_identity(1), T.t_identity(2), T.t_make_mor(1, 2, {0})}};
  CHECK_FALSE(find_tnat_iso(F, small).has_value());
}

TEST_CASE("brute-force oracle certifies computed kan extensions") {
  FinSetTarget T;
  // coproduct instance: discrete pair into the terminal category
  auto z2cat = corpus::discrete_category(2);
  TFunctor F{z2cat, &T, {2, 3}, {T.t_identity(2), T.t_identity(3)}};
  fincat::Functor K{z2cat, terminal_cat(), {0, 0}, {0, 0}};
  auto lan = left_kan_extension(F, K);
  auto r = brute_force_lan_check(F, K, lan, {3, 2, 200000});
  INFO(r.to_string());
  CHECK(r.ok());

  // identity instance on the walking arrow
  auto arrow = corpus::walking_arrow();
  TFunctor F2{arrow, &T, {2, 2}, {}};
  F2.mo = {T.t_identity(2), T.t_identity(2), T.t_make_mor(2, 2, {1, 0})};
  auto lan2 = left_kan_extension(F2, fincat::identity_functor(arrow));
  auto r2 = brute_force_lan_check(F2, K = fincat::identity_functor(arrow), lan2, {2, 2, 200000});
  INFO(r2.to_string());
  CHECK(r2.ok());
}

TEST_CASE("oracle rejects a corrupted kan extension") {
  FinSetTarget T;
  auto z2cat = corpus::discrete_category(2);
  TFunctor F{z2cat, &T, {2, 3}, {T.t_identity(2), T.t_identity(3)}};
  fincat::Functor K{z2cat, terminal_cat(), {0, 0}, {0, 0}};
  auto lan = left_kan_extension(F, K);
  // break it: collapse the apex to a point
  lan.lan.ob[0] = 1;
  lan.lan.mo[0] = T.t_identity(1);
  lan.at[0].colim.apex = 1;
  for (auto& leg : lan.at[0].colim.legs) {
    std::vector<int> v(T.t_card(T.t_source(leg)), 0);
    leg = T.t_make_mor(static_cast<TObj>(v.size()), 1, v);
  }
  lan.at[0].colim.reps = {{0, 0}};
  for (auto& u : lan.unit) {
    std::vector<int> v(T.t_card(T.t_source(u)), 0);
    u = T.t_make_mor(static_cast<TObj>(v.size()), 1, v);
  }
  auto r = brute_force_lan_check(F, K, lan, {3, 1, 200000});
  CHECK_FALSE(r.ok());
}
