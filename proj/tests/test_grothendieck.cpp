#include <catch2/catch_amalgamated.hpp>

#include "dayconv/corpus.hpp"
#include "dayconv/grothendieck.hpp"

using namespace dayconv;
using grothendieck::build_tensor_fibration;
using grothendieck::TensorFibration;

namespace {

TensorFibration z2_fib(int max_n) {
  return build_tensor_fibration(corpus::z2(), monoidal::build_F_skeleton(max_n));
}

}  // namespace

TEST_CASE("tensor fibration over z2 has the expected shape at arity 2") {
  TensorFibration tf = z2_fib(2);
  CHECK(tf.fib.total->object_count() == 7);  // 1 + 2 + 4 tuples
  // one edge per (base arrow, source tuple): targets are forced in a discrete fiber
  CHECK(tf.fib.total->morphism_count() == 71);
  CHECK(fincat::validate_category(*tf.fib.total).ok());
  CHECK(fincat::validate_functor(tf.fib.projection).ok());

  grothendieck::Fiber f0 = grothendieck::fiber_of(tf.fib, 0);
  CHECK(f0.cat->object_count() == 1);
  CHECK(f0.cat->morphism_count() == 1);
  grothendieck::Fiber f2 = grothendieck::fiber_of(tf.fib, 2);
  CHECK(f2.cat->object_count() == 4);
  CHECK(f2.cat->morphism_count() == 4);
}

TEST_CASE("tensor fibration morphism count matches the closed form at arity 3") {
  TensorFibration tf = z2_fib(3);
  CHECK(tf.fib.total->object_count() == 15);  // 1 + 2 + 4 + 8
  // sum over f: <m> -> <n> of 2^m
  CHECK(tf.fib.total->morphism_count() == 944);
}

TEST_CASE("chosen lifts are cocartesian and land on left-associated folds") {
  TensorFibration tf = z2_fib(2);
  const monoidal::PointedSkeleton& ps = tf.skeleton;
  MorId mu = ps.find(2, 1, {1, 1});
  REQUIRE(mu != kNoMor);

  ObjId src = tf.find_object({1, 1});
  MorId lift = tf.fib.chosen_lift(src, mu);
  REQUIRE(lift != kNoMor);
  CHECK(tf.obj_tuple[tf.fib.total->target(lift)] == std::vector<ObjId>{0});  // 1+1=0

  for (const auto& [key, e] : tf.fib.chosen) {
    (void)key;
    CHECK(grothendieck::is_cocartesian_edge(tf.fib, e));
  }
}

TEST_CASE("an edge strictly above the fold over an active map is not cocartesian") {
  TensorFibration tf =
      build_tensor_fibration(corpus::chain2(), monoidal::build_F_skeleton(2));
  MorId mu = tf.skeleton.find(2, 1, {1, 1});
  ObjId src = tf.find_object({0, 0});
  ObjId up = tf.find_object({1});
  MorId step = tf.M.cat->hom(0, 1).at(0);
  MorId bad = tf.find_morphism(mu, src, up, {step});
  REQUIRE(bad != kNoMor);
  CHECK_FALSE(grothendieck::is_cocartesian_edge(tf.fib, bad));
  CHECK(grothendieck::is_cocartesian_edge(tf.fib, tf.fib.chosen_lift(src, mu)));
}

TEST_CASE("total category of a non-strict structure composes coherently") {
  TensorFibration tf =
      build_tensor_fibration(corpus::z2_twisted(), monoidal::build_F_skeleton(2));
  REQUIRE_FALSE(tf.M.strict);
  CHECK(tf.fib.total->morphism_count() == 69);
  CHECK(fincat::validate_category(*tf.fib.total).ok());
  CHECK(fincat::validate_functor(tf.fib.projection).ok());
  auto report = grothendieck::validate_cocartesian_fibration(tf.fib, &tf.skeleton);
  INFO(report.to_string());
  CHECK(report.ok());

  // fiber over <2> is the square of the fiber over <1>
  grothendieck::Fiber f1 = grothendieck::fiber_of(tf.fib, 1);
  grothendieck::Fiber f2 = grothendieck::fiber_of(tf.fib, 2);
  CHECK(f1.cat->morphism_count() == 2);
  CHECK(f2.cat->morphism_count() == 4);
}

TEST_CASE("cocartesianness is stable under vertical isomorphisms") {
  TensorFibration tf =
      build_tensor_fibration(corpus::z2_twisted(), monoidal::build_F_skeleton(2));
  const fincat::FinCategory& T = *tf.fib.total;
  for (const auto& [key, e] : tf.fib.chosen) {
    (void)key;
    ObjId y = T.target(e);
    MorId idy = tf.fib.base->identity(tf.fib.projection.ob[y]);
    for (MorId k : tf.fib.edges_over(y, idy)) {
      if (T.inverse_of(k) == kNoMor) continue;
      CHECK(grothendieck::is_cocartesian_edge(tf.fib, T.compose(k, e)));
    }
  }
}

TEST_CASE("fibration validation passes on strict corpus instances") {
  SECTION("z2 at arity 3") {
    TensorFibration tf = z2_fib(3);
    auto report = grothendieck::validate_cocartesian_fibration(tf.fib, &tf.skeleton);
    INFO(report.to_string());
    CHECK(report.ok());
  }
  SECTION("divisors of 12 at arity 2") {
    TensorFibration tf =
        build_tensor_fibration(corpus::div12(), monoidal::build_F_skeleton(2));
    CHECK(tf.fib.total->object_count() == 43);  // 1 + 6 + 36
    auto report = grothendieck::validate_cocartesian_fibration(tf.fib, &tf.skeleton);
    INFO(report.to_string());
    CHECK(report.ok());
  }
  SECTION("chain2 at arity 2") {
    TensorFibration tf =
        build_tensor_fibration(corpus::chain2(), monoidal::build_F_skeleton(2));
    CHECK(fincat::validate_category(*tf.fib.total).ok());
    auto report = grothendieck::validate_cocartesian_fibration(tf.fib, &tf.skeleton);
    INFO(report.to_string());
    CHECK(report.ok());
  }
}

TEST_CASE("a projection without lifts reports the offending source and arrow") {
  grothendieck::GrothFibration pi;
  pi.total = corpus::discrete_category(2);
  pi.base = corpus::walking_arrow();
  pi.projection = fincat::Functor{pi.total, pi.base, {0, 1}, {0, 1}};
  auto report = grothendieck::validate_cocartesian_fibration(pi);
  REQUIRE_FALSE(report.ok());
  REQUIRE(report.axiom.size() == 1);
  CHECK(report.axiom[0].code == "no-cocartesian-lift");
  CHECK(report.axiom[0].detail.find("(0,2)") != std::string::npos);
}

TEST_CASE("a corrupted chosen lift is reported as not cocartesian") {
  TensorFibration tf =
      build_tensor_fibration(corpus::chain2(), monoidal::build_F_skeleton(2));
  MorId mu = tf.skeleton.find(2, 1, {1, 1});
  ObjId src = tf.find_object({0, 0});
  MorId step = tf.M.cat->hom(0, 1).at(0);
  MorId bad = tf.find_morphism(mu, src, tf.find_object({1}), {step});
  grothendieck::GrothFibration doctored = tf.fib;
  doctored.chosen[pair_key(src, mu)] = bad;
  auto report = grothendieck::validate_cocartesian_fibration(doctored, &tf.skeleton);
  REQUIRE_FALSE(report.ok());
  CHECK(report.axiom[0].code == "chosen-lift-not-cocartesian");
  CHECK(report.axiom[0].detail.find("(" + std::to_string(src) + "," + std::to_string(mu) +
                                    ")") != std::string::npos);
}

TEST_CASE("pushforward functor is split and sends identities home") {
  TensorFibration tf = z2_fib(2);
  auto pf = grothendieck::pushforward_functor(tf.fib);
  CHECK(fincat::validate_functor(pf.functor).ok());
  CHECK(fincat::validate_functor(pf.dom.to_total).ok());
  CHECK(fincat::validate_functor(pf.dom.to_arrow).ok());

  // strict triangle: p((-)_* x) equals the target of the arrow component
  for (ObjId i = 0; i < pf.dom.cat->object_count(); ++i)
    CHECK(tf.fib.projection.ob[pf.functor.ob[i]] ==
          pf.arr.tgt_proj.ob[pf.dom.to_arrow.ob[i]]);
  for (MorId m = 0; m < pf.dom.cat->morphism_count(); ++m)
    CHECK(tf.fib.projection.mo[pf.functor.mo[m]] ==
          pf.arr.tgt_proj.mo[pf.dom.to_arrow.mo[m]]);

  // (x, id) goes back to x: split lifts make this exact
  for (ObjId x = 0; x < tf.fib.total->object_count(); ++x) {
    MorId idb = tf.fib.base->identity(tf.fib.projection.ob[x]);
    ObjId i = pf.dom.obj_index.at(pair_key(x, idb));
    CHECK(pf.functor.ob[i] == x);
  }

  // (1,1) pushed along the multiplication lands on 0
  MorId mu = tf.skeleton.find(2, 1, {1, 1});
  ObjId i = pf.dom.obj_index.at(pair_key(tf.find_object({1, 1}), mu));
  CHECK(pf.functor.ob[i] == tf.find_object({0}));
}

TEST_CASE("arrow category of the walking arrow") {
  auto ac = grothendieck::arrow_category(corpus::walking_arrow());
  CHECK(ac.cat->object_count() == 3);
  // squares: commuting (u,v) pairs
  CHECK(fincat::validate_category(*ac.cat).ok());
  CHECK(fincat::validate_functor(ac.src_proj).ok());
  CHECK(fincat::validate_functor(ac.tgt_proj).ok());
}

TEST_CASE("pullback along an object inclusion is the fiber") {
  TensorFibration tf = z2_fib(2);
  fincat::Functor point{corpus::discrete_category(1), tf.fib.base, {2}, {tf.fib.base->identity(2)}};
  auto pb = grothendieck::pullback_along(tf.fib, point);
  grothendieck::Fiber f2 = grothendieck::fiber_of(tf.fib, 2);
  CHECK(pb.fib.total->object_count() == f2.cat->object_count());
  CHECK(pb.fib.total->morphism_count() == f2.cat->morphism_count());
  CHECK(fincat::validate_functor(pb.fib.projection).ok());
  CHECK(fincat::validate_functor(pb.to_total).ok());
}

TEST_CASE("pullback along the identity reproduces the fibration") {
  TensorFibration tf = z2_fib(2);
  fincat::Functor id = fincat::identity_functor(tf.fib.base);
  auto pb = grothendieck::pullback_along(tf.fib, id);
  CHECK(pb.fib.total->object_count() == tf.fib.total->object_count());
  CHECK(pb.fib.total->morphism_count() == tf.fib.total->morphism_count());
  CHECK(fincat::validate_category(*pb.fib.total).ok());
  // chosen lifts transport and stay cocartesian
  CHECK(pb.fib.chosen.size() == tf.fib.chosen.size());
  for (const auto& [key, e] : pb.fib.chosen) {
    (void)key;
    CHECK(grothendieck::is_cocartesian_edge(pb.fib, e));
  }
}
