#include <catch2/catch_amalgamated.hpp>

#include "dayconv/coherence.hpp"
#include "dayconv/corpus.hpp"
#include "dayconv/monoidal.hpp"

using namespace dayconv;
using namespace dayconv::monoidal;
using Catch::Matchers::ContainsSubstring;

TEST_CASE("bundled structures validate as categories and monoidal structures") {
  for (const auto& [name, m] : corpus::bundled_corpus()) {
    INFO(name);
    auto cr = fincat::validate_category(*m.cat);
    INFO(cr.to_string());
    CHECK(cr.ok());
    auto mr = validate_monoidal(m);
    INFO(mr.to_string());
    CHECK(mr.ok());
    CHECK(m.strict);
  }
}

TEST_CASE("twisted unitor structure is valid but not strict") {
  auto m = corpus::z2_twisted();
  REQUIRE(fincat::validate_category(*m.cat).ok());
  auto r = validate_monoidal(m);
  INFO(r.to_string());
  CHECK(r.ok());
  CHECK_FALSE(m.strict);
  CHECK(m.lunit[0] == 1);
  CHECK(m.lunit_inv[0] == 1);  // g is its own inverse
}

TEST_CASE("misassigned symmetry component on a discrete base is structural") {
  auto m = corpus::z2();
  // only identities exist; pointing sigma_{1,1} at id_1 breaks endpoints (1⊗1 = 0)
  m.symm[1 * 2 + 1] = m.cat->identity(1);
  m.fill_inverses();
  auto r = validate_monoidal(m);
  REQUIRE_FALSE(r.ok());
  REQUIRE_FALSE(r.structural.empty());
  CHECK(r.structural[0].code == "symm-endpoints");
  CHECK_THAT(r.structural[0].detail, ContainsSubstring("(1,1)"));
}

TEST_CASE("non-invertible component is reported as not-iso") {
  // one object, endomorphism monoid {id, e} with e idempotent
  fincat::FinCategory::Data d;
  d.object_count = 1;
  d.mor_source = {0, 0};
  d.mor_target = {0, 0};
  d.identity = {0};
  d.compositions = {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 1}};
  SymMonoidalStructure m;
  m.cat = fincat::make_cat(std::move(d));
  REQUIRE(fincat::validate_category(*m.cat).ok());
  m.unit = 0;
  m.tensor_ob = {0};
  m.tensor_mo = {0, 1, 1, 1};  // e⊗x = e, bifunctorial since the monoid is commutative
  m.assoc = {1};               // e is not invertible
  m.lunit = {0};
  m.runit = {0};
  m.symm = {0};
  m.fill_inverses();
  auto r = validate_monoidal(m);
  REQUIRE_FALSE(r.ok());
  bool saw = false;
  for (const auto& v : r.structural) saw = saw || v.code == "assoc-not-iso";
  CHECK(saw);
}

TEST_CASE("pointed skeleton hom sizes are (n+1)^m") {
  auto ps1 = build_F_skeleton(1);
  CHECK(ps1.cat->hom(1, 1).size() == 2);
  CHECK(ps1.cat->hom(0, 0).size() == 1);
  CHECK(ps1.cat->hom(0, 1).size() == 1);

  auto ps2 = build_F_skeleton(2);
  CHECK(ps2.cat->hom(2, 1).size() == 4);
  CHECK(ps2.cat->hom(2, 2).size() == 9);
  for (int n = 0; n <= 2; ++n) CHECK(ps2.cat->hom(0, n).size() == 1);

  auto ps3 = build_F_skeleton(3);
  REQUIRE(ps3.cat->morphism_count() == 144);
  auto r = fincat::validate_category(*ps3.cat);
  INFO(r.to_string());
  CHECK(r.ok());
  // identity of <2> fixes 1 and 2
  MorId id2 = ps3.cat->identity(2);
  CHECK(ps3.values[id2] == std::vector<ObjId>{1, 2});
}

TEST_CASE("morphism classification matches the definitions") {
  auto ps = build_F_skeleton(2);
  MorId id2 = ps.cat->identity(2);
  auto c = classify_morphism(ps, id2);
  CHECK(c.inert);
  CHECK(c.active);
  CHECK(class_name(c) == "inert+active");

  MorId mu = ps.find(2, 1, {1, 1});  // both non-basepoints to 1
  c = classify_morphism(ps, mu);
  CHECK(c.active);
  CHECK_FALSE(c.inert);

  MorId rho = ps.find(2, 1, {1, 0});  // 1 to 1, 2 dropped
  c = classify_morphism(ps, rho);
  CHECK(c.inert);
  CHECK_FALSE(c.active);

  MorId zero = ps.find(2, 1, {0, 0});  // everything dropped
  c = classify_morphism(ps, zero);
  CHECK(class_name(c) == "generic");
}

TEST_CASE("inert-active factorization exists and is unique up to relabeling") {
  auto ps = build_F_skeleton(2);
  const FinCategory& F = *ps.cat;
  for (MorId f = 0; f < F.morphism_count(); ++f) {
    auto [i, a] = inert_active_factorization(ps, f);
    REQUIRE(F.compose(a, i) == f);
    CHECK(classify_morphism(ps, i).inert);
    CHECK(classify_morphism(ps, a).active);
    int p = F.target(i);
    // every other inert/active factorization passes through the same middle
    // object and differs by a unique pointed bijection
    for (int p2 = 0; p2 <= ps.max_n; ++p2) {
      for (MorId i2 : F.hom(F.source(f), p2)) {
        if (!classify_morphism(ps, i2).inert) continue;
        for (MorId a2 : F.hom(p2, F.target(f))) {
          if (!classify_morphism(ps, a2).active) continue;
          if (F.compose(a2, i2) != f) continue;
          REQUIRE(p2 == p);
          int matches = 0;
          for (MorId u : F.hom(p, p)) {
            auto cu = classify_morphism(ps, u);
            if (!(cu.inert && cu.active)) continue;  // pointed bijections
            if (F.compose(u, i) == i2 && F.compose(a2, u) == a) ++matches;
          }
          CHECK(matches == 1);
        }
      }
    }
  }
}

TEST_CASE("inerts and actives are closed under composition") {
  auto ps = build_F_skeleton(3);
  const FinCategory& F = *ps.cat;
  for (MorId f = 0; f < F.morphism_count(); ++f) {
    auto cf = classify_morphism(ps, f);
    for (MorId g : F.morphisms_from(F.target(f))) {
      auto cg = classify_morphism(ps, g);
      auto cc = classify_morphism(ps, F.compose(g, f));
      if (cf.inert && cg.inert) CHECK(cc.inert);
      if (cf.active && cg.active) CHECK(cc.active);
    }
  }
}

TEST_CASE("preimage enumeration is sorted and complete") {
  auto ps = build_F_skeleton(3);
  MorId f = ps.find(3, 2, {2, 0, 2});
  CHECK(ps.preimage(f, 2) == std::vector<int>{1, 3});
  CHECK(ps.preimage(f, 1).empty());
  CHECK(ps.preimage(f, 0) == std::vector<int>{2});
  CHECK(ps.apply_to(f, 0) == 0);
  CHECK(ps.apply_to(f, 1) == 2);
}

TEST_CASE("coherence words produce mutually inverse isomorphisms") {
  auto tw = corpus::z2_twisted();
  const auto& C = *tw.cat;

  // appending an empty word costs a unitor, which is g here
  auto rho = coherence::concat_iso(tw, {0}, {});
  CHECK(rho.fwd == 1);
  CHECK(C.compose(rho.fwd, rho.inv) == C.identity(0));

  auto lam = coherence::flatten_iso(tw, {{}, {}});
  CHECK(lam.fwd == 1);  // lambda at the unit

  // longer words still compose to isomorphisms
  auto flat = coherence::flatten_iso(tw, {{0, 0}, {}, {0}});
  CHECK(C.compose(flat.fwd, flat.inv) == C.identity(0));
  CHECK(C.compose(flat.inv, flat.fwd) == C.identity(0));

  auto re = coherence::reorder_iso(tw, {0, 0, 0}, {2, 0, 1});
  CHECK(C.compose(re.fwd, re.inv) == C.identity(0));
}

TEST_CASE("coherence words collapse to identities on strict structures") {
  auto d = corpus::div12();
  // objects: index 1 = divisor 2, 2 = divisor 3, 3 = divisor 4
  std::vector<ObjId> xs = {1, 2, 3};
  CHECK(coherence::fold_obj(d, xs) == 5);  // lcm(2,3,4) = 12
  auto re = coherence::reorder_iso(d, xs, {2, 0, 1});
  CHECK(re.fwd == d.cat->identity(5));
  auto flat = coherence::flatten_iso(d, {{1, 2}, {3}});
  CHECK(flat.fwd == d.cat->identity(5));
  auto cc = coherence::concat_iso(d, {1}, {2, 3});
  CHECK(cc.fwd == d.cat->identity(5));
}

TEST_CASE("fold of morphisms is left-associated tensor application") {
  auto tw = corpus::z2_twisted();
  CHECK(coherence::fold_mor(tw, {1, 1}) == 0);     // g⊗g = id
  CHECK(coherence::fold_mor(tw, {1, 1, 1}) == 1);  // g⊗g⊗g = g
  CHECK(coherence::fold_mor(tw, {}) == tw.cat->identity(tw.unit));
}
