#include <catch2/catch_amalgamated.hpp>

#include "dayconv/fincat.hpp"

using namespace dayconv;
using namespace dayconv::fincat;

namespace {

// Two objects s=0, t=1; morphisms id_s=0, id_t=1, f: s -> t = 2.
CatRef walking_arrow() {
  FinCategoryBuilder b;
  ObjId s = b.add_object(), t = b.add_object();
  b.add_identity(s);
  b.add_identity(t);
  b.add_morphism(s, t);
  return b.build_with_identities();
}

CatRef discrete(int n) {
  FinCategoryBuilder b;
  for (int i = 0; i < n; ++i) b.add_identity(b.add_object());
  return b.build_with_identities();
}

// One object, three endomorphisms composing as addition mod 3.
CatRef z3_cat() {
  FinCategory::Data d;
  d.object_count = 1;
  d.mor_source = {0, 0, 0};
  d.mor_target = {0, 0, 0};
  d.identity = {0};
  for (MorId g = 0; g < 3; ++g)
    for (MorId f = 0; f < 3; ++f) d.compositions.push_back({g, f, (g + f) % 3});
  return make_cat(std::move(d));
}

// Unique morphism between every ordered pair of objects.
CatRef codiscrete(int n) {
  FinCategory::Data d;
  d.object_count = n;
  auto mor = [n](ObjId a, ObjId b) { return a * n + b; };
  for (ObjId a = 0; a < n; ++a)
    for (ObjId b = 0; b < n; ++b) {
      d.mor_source.push_back(a);
      d.mor_target.push_back(b);
    }
  for (ObjId a = 0; a < n; ++a) d.identity.push_back(mor(a, a));
  for (ObjId a = 0; a < n; ++a)
    for (ObjId b = 0; b < n; ++b)
      for (ObjId c = 0; c < n; ++c) d.compositions.push_back({mor(b, c), mor(a, b), mor(a, c)});
  return make_cat(std::move(d));
}

}  // namespace

TEST_CASE("walking arrow is a valid category") {
  auto c = walking_arrow();
  REQUIRE(c->object_count() == 2);
  REQUIRE(c->morphism_count() == 3);
  auto r = validate_category(*c);
  INFO(r.to_string());
  REQUIRE(r.ok());
  CHECK(c->compose(1, 2) == 2);  // id_t ∘ f = f
  CHECK(c->compose(2, 0) == 2);  // f ∘ id_s = f
  CHECK(c->hom(0, 1).size() == 1);
  CHECK(c->hom(1, 0).empty());
}

TEST_CASE("product of walking arrows counts objects and morphisms by pairs") {
  auto a = walking_arrow();
  auto p = product_category(a, a);
  CHECK(p.cat->object_count() == 4);
  CHECK(p.cat->morphism_count() == 9);
  auto r = validate_category(*p.cat);
  INFO(r.to_string());
  REQUIRE(r.ok());
  CHECK(validate_functor(p.proj_left).ok());
  CHECK(validate_functor(p.proj_right).ok());
  // round trip on packed indices
  for (ObjId x = 0; x < 4; ++x) {
    auto [l, rr] = p.obj_parts(x);
    CHECK(p.obj(l, rr) == x);
  }
}

TEST_CASE("slice of the walking arrow over its target is a walking arrow") {
  auto c = walking_arrow();
  auto id = identity_functor(c);
  auto over_t = comma_over(id, 1);
  REQUIRE(validate_category(*over_t.cat).ok());
  CHECK(over_t.cat->object_count() == 2);
  CHECK(over_t.cat->morphism_count() == 3);
  auto iso = find_category_iso(over_t.cat, c);
  REQUIRE(iso.has_value());
  CHECK(validate_functor(*iso).ok());
  CHECK(validate_functor(over_t.projection).ok());
}

TEST_CASE("slice of the walking arrow over its source is terminal") {
  auto c = walking_arrow();
  auto id = identity_functor(c);
  auto over_s = comma_over(id, 0);
  REQUIRE(validate_category(*over_s.cat).ok());
  CHECK(over_s.cat->object_count() == 1);
  CHECK(over_s.cat->morphism_count() == 1);
  CHECK(find_terminal(*over_s.cat).has_value());
}

TEST_CASE("coslice of the walking arrow under its source is a walking arrow") {
  auto c = walking_arrow();
  auto id = identity_functor(c);
  auto under_s = comma_under(0, id);
  REQUIRE(validate_category(*under_s.cat).ok());
  CHECK(under_s.cat->object_count() == 2);
  REQUIRE(find_category_iso(under_s.cat, c).has_value());
  auto under_t = comma_under(1, id);
  CHECK(under_t.cat->object_count() == 1);
  CHECK(find_initial(*under_t.cat).has_value());
}

TEST_CASE("opposite is an involution on the nose") {
  for (auto c : {walking_arrow(), z3_cat(), product_category(walking_arrow(), z3_cat()).cat}) {
    auto oo = opposite_category(*opposite_category(*c));
    CHECK(oo->equals(*c));
    CHECK(validate_category(*opposite_category(*c)).ok());
  }
}

TEST_CASE("dangling morphism target is a structural error, not an axiom error") {
  FinCategory::Data d;
  d.object_count = 1;
  d.mor_source = {0, 0};
  d.mor_target = {0, 7};  // object 7 does not exist
  d.identity = {0};
  d.compositions = {{0, 0, 0}};
  auto c = make_cat(std::move(d));
  auto r = validate_category(*c);
  REQUIRE_FALSE(r.ok());
  REQUIRE_FALSE(r.structural.empty());
  CHECK(r.axiom.empty());
  CHECK(r.structural[0].code == "dangling-target");
}

TEST_CASE("missing composite of a composable pair is structural") {
  FinCategory::Data d;
  d.object_count = 1;
  d.mor_source = {0, 0};
  d.mor_target = {0, 0};
  d.identity = {0};
  // morphism 1 composable with itself but unassigned
  d.compositions = {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}};
  auto r = validate_category(*make_cat(std::move(d)));
  REQUIRE_FALSE(r.ok());
  bool found = false;
  for (const auto& v : r.structural) found = found || v.code == "compose-missing";
  CHECK(found);
}

TEST_CASE("broken associativity is reported with the witnessing triple") {
  FinCategory::Data d;
  d.object_count = 1;
  d.mor_source = {0, 0, 0};
  d.mor_target = {0, 0, 0};
  d.identity = {0};
  // addition mod 3, except 2+2 mis-assigned to 2 instead of 1
  for (MorId g = 0; g < 3; ++g)
    for (MorId f = 0; f < 3; ++f)
      d.compositions.push_back({g, f, (g == 2 && f == 2) ? 2 : (g + f) % 3});
  auto r = validate_category(*make_cat(std::move(d)));
  REQUIRE(r.structural.empty());
  REQUIRE_FALSE(r.axiom.empty());
  CHECK(r.axiom[0].code == "assoc");
  CHECK(r.axiom[0].detail.find("(2,1,1)") != std::string::npos);
}

TEST_CASE("sparse composition storage behaves like the dense table") {
  auto c = codiscrete(50);  // 2500 morphisms forces the sparse tier
  REQUIRE(c->morphism_count() == 2500);
  auto r = validate_category(*c);
  INFO(r.to_string());
  REQUIRE(r.ok());
  CHECK(c->compose(c->identity(3), 3 * 50 + 0) == kNoMor);  // not composable
  CHECK(c->compose(7 * 50 + 11, 3 * 50 + 7) == 3 * 50 + 11);
  CHECK(find_terminal(*c).has_value());
  CHECK(is_connected(*c));
}

TEST_CASE("connectivity distinguishes the arrow from two points") {
  CHECK(is_connected(*walking_arrow()));
  CHECK_FALSE(is_connected(*discrete(2)));
  CHECK_FALSE(is_connected(*discrete(0)));
  CHECK(is_connected(*discrete(1)));
}

TEST_CASE("category isomorphism search finds isos and rejects non-isos") {
  auto a = walking_arrow();
  auto iso = find_category_iso(a, a);
  REQUIRE(iso.has_value());
  CHECK(validate_functor(*iso).ok());
  CHECK_FALSE(find_category_iso(a, discrete(2)).has_value());
  CHECK_FALSE(find_category_iso(z3_cat(), a).has_value());

  // relabeled copy of z3 (identity listed last) is found isomorphic
  FinCategory::Data d;
  d.object_count = 1;
  d.mor_source = {0, 0, 0};
  d.mor_target = {0, 0, 0};
  d.identity = {2};
  auto tbl = [](MorId x, MorId y) {  // x,y in {0,1,2} with 2 the unit, 0+0=1, 0+1=2, 1+1=0
    auto val = [](MorId m) { return m == 2 ? 0 : m + 1; };
    int sum = (val(x) + val(y)) % 3;
    return sum == 0 ? 2 : sum - 1;
  };
  for (MorId g = 0; g < 3; ++g)
    for (MorId f = 0; f < 3; ++f) d.compositions.push_back({g, f, tbl(g, f)});
  auto z3p = make_cat(std::move(d));
  REQUIRE(validate_category(*z3p).ok());
  auto iso2 = find_category_iso(z3_cat(), z3p);
  REQUIRE(iso2.has_value());
  CHECK(validate_functor(*iso2).ok());
  CHECK(iso2->mo[0] == 2);  // unit goes to unit
}

TEST_CASE("triple products associate up to the canonical relabeling") {
  auto a = walking_arrow();
  auto ab = product_category(a, a);
  auto ab_c = product_category(ab.cat, a);
  auto bc = product_category(a, a);
  auto a_bc = product_category(a, bc.cat);
  REQUIRE(ab_c.cat->object_count() == 8);
  REQUIRE(ab_c.cat->morphism_count() == 27);
  ProductCat ab_c_full = ab_c;
  auto relabel = product_assoc_relabel(ab, ab_c_full, bc, a_bc);
  auto r = validate_functor(relabel);
  INFO(r.to_string());
  REQUIRE(r.ok());
  // bijective on objects and morphisms
  auto obs = relabel.ob;
  std::sort(obs.begin(), obs.end());
  obs.erase(std::unique(obs.begin(), obs.end()), obs.end());
  CHECK(obs.size() == static_cast<std::size_t>(a_bc.cat->object_count()));
  auto mos = relabel.mo;
  std::sort(mos.begin(), mos.end());
  mos.erase(std::unique(mos.begin(), mos.end()), mos.end());
  CHECK(mos.size() == static_cast<std::size_t>(a_bc.cat->morphism_count()));
}

TEST_CASE("functor validation catches non-functorial maps") {
  auto c = walking_arrow();
  Functor bad{c, c, {0, 1}, {0, 1, 0}};  // sends f to id_s, wrong endpoints
  auto r = validate_functor(bad);
  REQUIRE_FALSE(r.ok());
  CHECK(r.axiom[0].code == "functor-endpoints");

  Functor collapse{c, c, {1, 1}, {1, 1, 1}};  // everything to t, valid
  CHECK(validate_functor(collapse).ok());
  auto comp = compose_functors(collapse, identity_functor(c));
  CHECK(validate_functor(comp).ok());
  CHECK(comp.ob == collapse.ob);
}

TEST_CASE("natural transformation validation checks endpoints then naturality") {
  // objects x=0, y=1; morphisms id_x=0, id_y=1, p=2: x->y, q=3: x->y
  FinCategoryBuilder b;
  ObjId x = b.add_object(), y = b.add_object();
  b.add_identity(x);
  b.add_identity(y);
  b.add_morphism(x, y);
  b.add_morphism(x, y);
  auto c = b.build_with_identities();
  REQUIRE(validate_category(*c).ok());

  Functor collapse{c, c, {0, 1}, {0, 1, 2, 2}};  // q collapsed onto p
  REQUIRE(validate_functor(collapse).ok());
  Functor id = identity_functor(c);

  NatTrans good{id, id, {0, 1}};
  CHECK(validate_nat_trans(good).ok());

  NatTrans skew{collapse, id, {0, 1}};  // fails the naturality square at q
  auto r = validate_nat_trans(skew);
  REQUIRE_FALSE(r.ok());
  REQUIRE_FALSE(r.axiom.empty());
  CHECK(r.axiom[0].code == "naturality");
  CHECK(r.axiom[0].detail.find("3") != std::string::npos);

  NatTrans bad_endpoints{id, collapse, {0, 0}};
  CHECK_FALSE(validate_nat_trans(bad_endpoints).structural.empty());
}

TEST_CASE("identity laws are axiom violations when the table lies") {
  FinCategory::Data d;
  d.object_count = 1;
  d.mor_source = {0, 0};
  d.mor_target = {0, 0};
  d.identity = {0};
  // 1∘id = 0 breaks the right identity law (every pair assigned, endpoints fine)
  d.compositions = {{0, 0, 0}, {1, 0, 0}, {0, 1, 1}, {1, 1, 0}};
  auto r = validate_category(*make_cat(std::move(d)));
  REQUIRE(r.structural.empty());
  bool saw_identity_law = false;
  for (const auto& v : r.axiom)
    saw_identity_law = saw_identity_law || v.code == "right-identity" || v.code == "left-identity";
  CHECK(saw_identity_law);
}
