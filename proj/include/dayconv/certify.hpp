#pragma once

// End-to-end certifications of the library's main theorems on the bundled
// structures. Each one runs a full pipeline (coherence validation, Day
// fibrations, the monoid correspondence, representable embeddings, Kan
// extensions) against an independent formulation of the same fact, under a
// pinned wall-clock budget. The expected convolution table and the frozen
// enumeration censuses are part of the certification, not derived from the
// code under test.

#include <chrono>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "dayconv/cocomplete.hpp"
#include "dayconv/corpus.hpp"
#include "dayconv/day.hpp"
#include "dayconv/grothendieck.hpp"
#include "dayconv/laxmon.hpp"
#include "dayconv/monoidal.hpp"
#include "dayconv/yoneda.hpp"

namespace dayconv::certify {

using cocomplete::FinSetTarget;
using cocomplete::TFunctor;
using cocomplete::TNat;
using monoidal::SymMonoidalStructure;

struct CriterionResult {
  std::string name;
  bool ok = false;              // every check inside held
  double seconds = 0.0;         // measured wall clock
  double budget_seconds = 0.0;  // pinned budget
  std::string detail;           // first failures, or empty
  std::vector<std::pair<std::string, std::string>> data;  // stable facts

  bool within_budget() const { return seconds < budget_seconds; }
  bool passed() const { return ok && within_budget(); }
};

struct CertifyOptions {
  std::string golden_dir =
#ifdef DAYCONV_GOLDEN_DIR
      DAYCONV_GOLDEN_DIR
#else
      "tests/golden"
#endif
      ;
};

namespace detail_cert {

template <typename Fn>
inline CriterionResult run_timed(const char* name, double budget, Fn&& body) {
  CriterionResult r;
  r.name = name;
  r.budget_seconds = budget;
  std::vector<std::string> fails;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(fails, r.data);
  } catch (const std::exception& e) {
    fails.push_back(std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.ok = fails.empty();
  for (std::size_t i = 0; i < fails.size() && i < 4; ++i) {
    if (i) r.detail += "; ";
    r.detail += fails[i];
  }
  if (fails.size() > 4) r.detail += "; and " + std::to_string(fails.size() - 4) + " more";
  return r;
}

inline TFunctor graded(const SymMonoidalStructure& M, cocomplete::CocompleteTarget& T,
                       std::vector<cocomplete::TObj> sizes) {
  TFunctor F{M.cat, &T, std::move(sizes), {}};
  for (ObjId a = 0; a < M.cat->object_count(); ++a) F.mo.push_back(T.t_identity(F.ob[a]));
  return F;
}

// indicator presheaf of a single object of a discrete base
inline TFunctor point(const SymMonoidalStructure& M, cocomplete::CocompleteTarget& T, ObjId c) {
  std::vector<cocomplete::TObj> sizes(M.cat->object_count(), 0);
  sizes[c] = 1;
  return graded(M, T, sizes);
}

struct GoldenCensus {
  std::map<std::vector<int>, long long> counts;
  long long total = -1;
};

inline GoldenCensus load_census(const std::string& path, std::vector<std::string>& fails) {
  GoldenCensus g;
  std::ifstream in(path);
  if (!in) {
    fails.push_back("golden census missing: " + path);
    return g;
  }
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("total=", 0) == 0) {
      g.total = std::stoll(line.substr(6));
      continue;
    }
    auto open = line.find('('), close = line.find(')');
    auto eq = line.find("count=");
    if (open == std::string::npos || close == std::string::npos || eq == std::string::npos) {
      fails.push_back("unreadable census line: " + line);
      return g;
    }
    std::vector<int> profile;
    std::stringstream ss(line.substr(open + 1, close - open - 1));
    std::string part;
    while (std::getline(ss, part, ',')) profile.push_back(std::stoi(part));
    g.counts[profile] = std::stoll(line.substr(eq + 6));
  }
  if (g.total < 0) fails.push_back("census has no total line: " + path);
  return g;
}

}  // namespace detail_cert

// 1. Every bundled base passes category and monoidal coherence validation.
inline CriterionResult certify_corpus_coherence() {
  return detail_cert::run_timed(
      "corpus-coherence", 1.0, [](std::vector<std::string>& fails, auto& data) {
        auto entries = corpus::bundled_corpus();
        for (const auto& e : entries) {
          if (!fincat::validate_category(*e.m.cat).ok())
            fails.push_back(e.name + ": category axioms fail");
          if (!monoidal::validate_monoidal(e.m).ok())
            fails.push_back(e.name + ": monoidal coherence fails");
        }
        data.emplace_back("bases", std::to_string(entries.size()));
      });
}

// 2. Cocartesian pushforwards over the mod-2 and mod-3 bases agree with the
// pointwise Kan-extension formula, and the graded worked example lands on
// the exact table (2,3) * (1,4) = (14,11).
inline CriterionResult certify_convolution_formula() {
  return detail_cert::run_timed(
      "convolution-formula", 10.0, [](std::vector<std::string>& fails, auto& data) {
        FinSetTarget T;
        auto z2 = corpus::z2();
        TFunctor F = detail_cert::graded(z2, T, {2, 3});
        TFunctor G = detail_cert::graded(z2, T, {1, 4});
        auto conv = day::day_tensor(z2, T, F, G);
        if (conv.conv.ob != std::vector<cocomplete::TObj>{14, 11})
          fails.push_back("graded convolution table is not (14,11)");
        for (std::size_t i = 0; i < conv.conv.ob.size(); ++i)
          data.emplace_back("table-at-" + std::to_string(i),
                            std::to_string(T.t_card(conv.conv.ob[i])));

        auto df2 = day::build_day_fibration(
            z2, T, {detail_cert::point(z2, T, 0), detail_cert::point(z2, T, 1)}, 2);
        if (!day::check_pushforward_is_kan(z2, df2).ok())
          fails.push_back("mod-2 pushforwards disagree with the Kan formula");

        auto z3 = corpus::z3();
        auto df3 = day::build_day_fibration(z3, T,
                                            {detail_cert::point(z3, T, 0),
                                             detail_cert::point(z3, T, 1),
                                             detail_cert::point(z3, T, 2)},
                                            2);
        if (!day::check_pushforward_is_kan(z3, df3).ok())
          fails.push_back("mod-3 pushforwards disagree with the Kan formula");
      });
}

// 3. Tensor and Day fibrations over the corpus are cocartesian fibrations:
// unique lifts, lift composability, and the Segal gluing condition.
inline CriterionResult certify_fibration_lifts() {
  return detail_cert::run_timed(
      "fibration-lifts", 60.0, [](std::vector<std::string>& fails, auto& data) {
        const std::vector<std::pair<std::string, int>> tensor_cases = {
            {"z2", 3}, {"z3", 3}, {"z2xz2", 3}, {"arrow-max", 3}, {"chain2", 3}, {"div12", 2}};
        auto entries = corpus::bundled_corpus();
        int instances = 0;
        for (const auto& [name, n] : tensor_cases) {
          const SymMonoidalStructure* m = nullptr;
          for (const auto& e : entries)
            if (e.name == name) m = &e.m;
          auto tf = grothendieck::build_tensor_fibration(*m, monoidal::build_F_skeleton(n));
          if (!grothendieck::validate_cocartesian_fibration(tf.fib, &tf.skeleton).ok())
            fails.push_back(name + "<" + std::to_string(n) + ">: tensor fibration fails");
          ++instances;
        }
        FinSetTarget T;
        auto z2 = corpus::z2();
        auto df2 = day::build_day_fibration(
            z2, T, {detail_cert::point(z2, T, 0), detail_cert::point(z2, T, 1)}, 3);
        if (!grothendieck::validate_cocartesian_fibration(df2.tf.fib, &df2.tf.skeleton).ok())
          fails.push_back("z2 convolution fibration fails");
        ++instances;
        auto z3 = corpus::z3();
        auto df3 = day::build_day_fibration(z3, T,
                                            {detail_cert::point(z3, T, 0),
                                             detail_cert::point(z3, T, 1),
                                             detail_cert::point(z3, T, 2)},
                                            2);
        if (!grothendieck::validate_cocartesian_fibration(df3.tf.fib, &df3.tf.skeleton).ok())
          fails.push_back("z3 convolution fibration fails");
        ++instances;
        data.emplace_back("instances", std::to_string(instances));
      });
}

// 4. Commutative monoids for the convolution tensor and lax symmetric
// monoidal functors come out in equal numbers over the mod-2 and mod-3
// bases with carriers bounded by 2, matching the frozen census files, and
// the translation between the two sides is a validated bijection.
inline CriterionResult certify_monoid_correspondence(const CertifyOptions& opt) {
  return detail_cert::run_timed(
      "monoid-correspondence", 120.0, [&opt](std::vector<std::string>& fails, auto& data) {
        const std::vector<std::pair<std::string, SymMonoidalStructure>> bases = {
            {"z2", corpus::z2()}, {"z3", corpus::z3()}};
        for (const auto& [name, M] : bases) {
          FinSetTarget T;
          auto census = laxmon::enumerate_structures(M, T, 2);
          auto golden = detail_cert::load_census(
              opt.golden_dir + "/graded_monoid_census_" + name + "_bound2.txt", fails);
          if (golden.total < 0) continue;
          if (census.profiles.size() != golden.counts.size())
            fails.push_back(name + ": profile space differs from the census file");
          for (std::size_t s = 0; s < census.profiles.size(); ++s) {
            auto it = golden.counts.find(census.profiles[s]);
            if (it == golden.counts.end()) {
              fails.push_back(name + ": unexpected profile in enumeration");
              continue;
            }
            if (static_cast<long long>(census.monoids[s].size()) != it->second ||
                static_cast<long long>(census.laxes[s].size()) != it->second)
              fails.push_back(name + ": count mismatch at a profile");
          }
          if (census.monoid_total() != golden.total || census.lax_total() != golden.total)
            fails.push_back(name + ": totals differ from the frozen census");
          if (!laxmon::check_correspondence(M, census).ok())
            fails.push_back(name + ": correspondence fails to certify");
          data.emplace_back(name + "-total", std::to_string(census.monoid_total()));
        }
      });
}

// 5. Convolution distributes over colimits in each variable: empty,
// coproduct, and pushout diagrams of mod-2 graded functors stay colimits
// after convolving with each of three fixed probes.
inline CriterionResult certify_colimit_distribution() {
  return detail_cert::run_timed(
      "colimit-distribution", 10.0, [](std::vector<std::string>& fails, auto& data) {
        auto M = corpus::z2();
        FinSetTarget T;

        std::vector<day::FunctorDiagram> diagrams;
        {
          day::FunctorDiagram empty;
          empty.shape = corpus::discrete_category(0);
          diagrams.push_back(std::move(empty));

          day::FunctorDiagram coproduct;
          coproduct.shape = corpus::discrete_category(2);
          coproduct.functors = {detail_cert::graded(M, T, {2, 3}),
                                detail_cert::graded(M, T, {1, 4})};
          coproduct.nats = {day::identity_tnat(coproduct.functors[0]),
                            day::identity_tnat(coproduct.functors[1])};
          diagrams.push_back(std::move(coproduct));

          day::FunctorDiagram pushout;
          pushout.shape = corpus::poset_category(
              3, [](int a, int b) { return a == b || (a == 0 && b > 0); });
          pushout.functors = {detail_cert::graded(M, T, {1, 1}),
                              detail_cert::graded(M, T, {2, 1}),
                              detail_cert::graded(M, T, {1, 2})};
          pushout.nats.resize(pushout.shape->morphism_count());
          for (MorId m = 0; m < pushout.shape->morphism_count(); ++m) {
            ObjId s = pushout.shape->source(m), t = pushout.shape->target(m);
            if (s == t)
              pushout.nats[m] = day::identity_tnat(pushout.functors[s]);
            else if (t == 1)
              pushout.nats[m] = TNat{{T.t_make_mor(1, 2, {0}), T.t_make_mor(1, 1, {0})}};
            else
              pushout.nats[m] = TNat{{T.t_make_mor(1, 1, {0}), T.t_make_mor(1, 2, {1})}};
          }
          diagrams.push_back(std::move(pushout));
        }

        const std::vector<std::vector<cocomplete::TObj>> probes = {{1, 2}, {2, 1}, {2, 2}};
        int checked = 0;
        for (std::size_t d = 0; d < diagrams.size(); ++d)
          for (const auto& sizes : probes) {
            TFunctor G = detail_cert::graded(M, T, sizes);
            if (!day::check_bilinearity(M, T, diagrams[d], G).ok())
              fails.push_back("diagram " + std::to_string(d) + " breaks against probe (" +
                              std::to_string(sizes[0]) + "," + std::to_string(sizes[1]) + ")");
            ++checked;
          }
        data.emplace_back("pairs", std::to_string(checked));
      });
}

// 6. Convolving representables realizes the tensor of representing objects,
// for words of length 0 through 3 over the mod-3 and divisor bases, and the
// fiber slice inclusions the comparison rests on are final functors.
inline CriterionResult certify_representable_embedding() {
  return detail_cert::run_timed(
      "representable-embedding", 30.0, [](std::vector<std::string>& fails, auto& data) {
        FinSetTarget T;
        int words = 0;
        auto run_base = [&](const char* name, const SymMonoidalStructure& M,
                            const std::vector<std::vector<ObjId>>& triples) {
          const int n = M.cat->object_count();
          std::vector<std::vector<ObjId>> tuples{{}};
          for (ObjId a = 0; a < n; ++a) tuples.push_back({a});
          for (ObjId a = 0; a < n; ++a)
            for (ObjId b = 0; b < n; ++b) tuples.push_back({a, b});
          for (const auto& t : triples) tuples.push_back(t);
          for (const auto& t : tuples) {
            if (!yoneda::check_representable_convolution(M, T, t).ok()) {
              std::string w = name;
              w += ": word";
              for (ObjId x : t) w += " " + std::to_string(x);
              fails.push_back(w + " fails");
            }
            ++words;
          }
        };
        auto z3 = corpus::z3();
        std::vector<std::vector<ObjId>> all3;
        for (ObjId a = 0; a < 3; ++a)
          for (ObjId b = 0; b < 3; ++b)
            for (ObjId c = 0; c < 3; ++c) all3.push_back({a, b, c});
        run_base("z3", z3, all3);
        auto d12 = corpus::div12();
        run_base("div12", d12,
                 {{0, 1, 2}, {1, 2, 3}, {2, 4, 5}, {0, 3, 5}, {1, 1, 4}, {5, 5, 5}});
        data.emplace_back("words", std::to_string(words));

        // slice inclusions over every composable pair of base arrows
        int slices = 0;
        auto z2 = corpus::z2();
        auto chain = corpus::chain2();
        for (const SymMonoidalStructure* M : {&z2, &z3, &chain}) {
          auto tf = grothendieck::build_tensor_fibration(*M, monoidal::build_F_skeleton(2));
          const fincat::FinCategory& B = *tf.fib.base;
          for (MorId f = 0; f < B.morphism_count(); ++f)
            for (MorId g : B.morphisms_from(B.target(f)))
              for (ObjId Z : grothendieck::fiber_of(tf.fib, B.target(g)).obj_in_total) {
                if (!yoneda::slice_inclusion_final(tf.fib, f, g, Z))
                  fails.push_back("slice over (" + std::to_string(f) + "," + std::to_string(g) +
                                  ") apex " + std::to_string(Z) + " is not final");
                ++slices;
              }
        }
        data.emplace_back("slices", std::to_string(slices));
      });
}

// 7. The pushforward construction is a genuine functor out of the pullback
// of the total category against the base's arrow category, and projecting
// its output to the base recovers the target of the pushed arrow.
inline CriterionResult certify_pushforward_functor() {
  return detail_cert::run_timed(
      "pushforward-functor", 10.0, [](std::vector<std::string>& fails, auto& data) {
        const std::vector<std::pair<std::string, int>> cases = {
            {"z2", 2}, {"z3", 2}, {"arrow-max", 2}, {"chain2", 2}, {"z2xz2", 1}, {"div12", 1}};
        auto entries = corpus::bundled_corpus();
        for (const auto& [name, n] : cases) {
          const SymMonoidalStructure* m = nullptr;
          for (const auto& e : entries)
            if (e.name == name) m = &e.m;
          auto tf = grothendieck::build_tensor_fibration(*m, monoidal::build_F_skeleton(n));
          auto pf = grothendieck::pushforward_functor(tf.fib);
          std::string tag = name + "<" + std::to_string(n) + ">";
          if (!fincat::validate_functor(pf.functor).ok())
            fails.push_back(tag + ": pushforward is not a functor");
          if (!fincat::validate_functor(pf.dom.to_total).ok() ||
              !fincat::validate_functor(pf.dom.to_arrow).ok())
            fails.push_back(tag + ": pullback projections are not functors");
          for (ObjId i = 0; i < pf.dom.cat->object_count(); ++i)
            if (tf.fib.projection.ob[pf.functor.ob[i]] !=
                pf.arr.tgt_proj.ob[pf.dom.to_arrow.ob[i]]) {
              fails.push_back(tag + ": projection triangle breaks on an object");
              break;
            }
          for (MorId m2 = 0; m2 < pf.dom.cat->morphism_count(); ++m2)
            if (tf.fib.projection.mo[pf.functor.mo[m2]] !=
                pf.arr.tgt_proj.mo[pf.dom.to_arrow.mo[m2]]) {
              fails.push_back(tag + ": projection triangle breaks on a morphism");
              break;
            }
        }
        data.emplace_back("instances", std::to_string(cases.size()));
      });
}

namespace detail_cert {

struct KanInstance {
  std::string name;
  fincat::Functor K;
  TFunctor F;
};

inline std::vector<KanInstance> kan_instances(FinSetTarget& T) {
  std::vector<KanInstance> out;
  auto d1 = corpus::discrete_category(1);
  auto d2 = corpus::discrete_category(2);
  auto d3 = corpus::discrete_category(3);
  auto wa = corpus::walking_arrow();
  auto c3 = corpus::poset_category(3, [](int a, int b) { return a <= b; });

  auto add = [&out](std::string name, fincat::Functor K, TFunctor F) {
    out.push_back({std::move(name), std::move(K), std::move(F)});
  };
  auto plain = [&T](fincat::CatRef A, std::vector<cocomplete::TObj> sizes,
                    std::vector<cocomplete::TMor> maps) {
    TFunctor F{std::move(A), &T, std::move(sizes), std::move(maps)};
    return F;
  };
  auto identities = [&T](fincat::CatRef A, std::vector<cocomplete::TObj> sizes) {
    TFunctor F{A, &T, std::move(sizes), {}};
    for (MorId u = 0; u < A->morphism_count(); ++u)
      F.mo.push_back(T.t_identity(F.ob[A->source(u)]));
    return F;
  };

  // walking arrow morphism order: identities 0 and 1 first, the arrow is 2
  add("point-into-pair", fincat::Functor{d1, d2, {0}, {0}}, identities(d1, {2}));
  add("pair-into-arrow", fincat::Functor{d2, wa, {0, 1}, {0, 1}}, identities(d2, {2, 1}));
  add("arrow-collapse", fincat::Functor{wa, d1, {0, 0}, {0, 0, 0}},
      plain(wa, {2, 1}, {T.t_identity(2), T.t_identity(1), T.t_make_mor(2, 1, {0, 0})}));
  add("pair-into-chain-ends", fincat::Functor{d2, c3, {0, 2}, {c3->identity(0), c3->identity(2)}},
      identities(d2, {1, 2}));
  add("arrow-identity", fincat::identity_functor(wa),
      plain(wa, {2, 2}, {T.t_identity(2), T.t_identity(2), T.t_make_mor(2, 2, {1, 0})}));
  add("pair-constant", fincat::Functor{d2, wa, {1, 1}, {1, 1}}, identities(d2, {1, 2}));
  add("triple-into-chain",
      fincat::Functor{d3, c3, {0, 1, 2}, {c3->identity(0), c3->identity(1), c3->identity(2)}},
      identities(d3, {1, 1, 2}));
  return out;
}

inline TFunctor restrict_along(const fincat::Functor& K, const TFunctor& G) {
  TFunctor GK{K.source, G.target, {}, {}};
  for (ObjId a = 0; a < K.source->object_count(); ++a) GK.ob.push_back(G.ob[K.ob[a]]);
  for (MorId u = 0; u < K.source->morphism_count(); ++u) GK.mo.push_back(G.mo[K.mo[u]]);
  return GK;
}

// mediators lan => G whose restriction along K extends beta through the unit
inline int count_mediators(FinSetTarget& T, const fincat::Functor& K,
                           const std::vector<cocomplete::TMor>& unit, const TNat& beta,
                           const std::vector<TNat>& candidates) {
  int found = 0;
  for (const auto& gamma : candidates) {
    bool fits = true;
    for (ObjId a = 0; a < K.source->object_count() && fits; ++a)
      if (T.t_compose(gamma.comp[K.ob[a]], unit[a]) != beta.comp[a]) fits = false;
    if (fits) ++found;
  }
  return found;
}

}  // namespace detail_cert

// 8. The colimit-formula Kan extension is the universal extension: against
// every functor with values of size at most 3, factorizations through the
// unit exist and are unique, and on the smallest instances an exhaustive
// search over candidate extensions finds exactly the computed one up to
// isomorphism.
inline CriterionResult certify_kan_oracle() {
  return detail_cert::run_timed(
      "kan-oracle", 60.0, [](std::vector<std::string>& fails, auto& data) {
        FinSetTarget T;
        auto instances = detail_cert::kan_instances(T);
        const int bound = 3;
        for (const auto& inst : instances) {
          auto lan = cocomplete::left_kan_extension(inst.F, inst.K);
          if (!cocomplete::validate_tfunctor(lan.lan).ok()) {
            fails.push_back(inst.name + ": extension is not a functor");
            continue;
          }
          auto targets = cocomplete::enumerate_tfunctors(inst.K.target, T, bound);
          long long pairs = 0;
          bool broken = false;
          for (const auto& G : targets) {
            auto GK = detail_cert::restrict_along(inst.K, G);
            auto betas = cocomplete::enumerate_tnats(inst.F, GK);
            if (betas.empty()) continue;
            auto gammas = cocomplete::enumerate_tnats(lan.lan, G);
            for (const auto& beta : betas) {
              int found = detail_cert::count_mediators(T, inst.K, lan.unit, beta, gammas);
              ++pairs;
              if (found != 1) {
                fails.push_back(inst.name + ": a cocone factors " + std::to_string(found) +
                                " times instead of once");
                broken = true;
                break;
              }
            }
            if (broken) break;
          }
          data.emplace_back(inst.name, std::to_string(pairs));
        }

        // exhaustive search on the two smallest instances: the universal
        // candidates found by brute force are exactly the computed extension
        for (const auto& inst : instances) {
          if (inst.name != "point-into-pair" && inst.name != "arrow-collapse") continue;
          auto lan = cocomplete::left_kan_extension(inst.F, inst.K);
          auto targets = cocomplete::enumerate_tfunctors(inst.K.target, T, bound);
          int universal = 0;
          for (const auto& L : targets) {
            auto LK = detail_cert::restrict_along(inst.K, L);
            auto units = cocomplete::enumerate_tnats(inst.F, LK);
            for (const auto& eta : units) {
              bool is_universal = true;
              for (const auto& G : targets) {
                auto GK = detail_cert::restrict_along(inst.K, G);
                auto gammas = cocomplete::enumerate_tnats(L, G);
                for (const auto& beta : cocomplete::enumerate_tnats(inst.F, GK)) {
                  int found = 0;
                  for (const auto& gamma : gammas) {
                    bool fits = true;
                    for (ObjId a = 0; a < inst.K.source->object_count() && fits; ++a)
                      if (T.t_compose(gamma.comp[inst.K.ob[a]], eta.comp[a]) != beta.comp[a])
                        fits = false;
                    if (fits) ++found;
                  }
                  if (found != 1) {
                    is_universal = false;
                    break;
                  }
                }
                if (!is_universal) break;
              }
              if (is_universal) {
                ++universal;
                if (!cocomplete::find_tnat_iso(L, lan.lan))
                  fails.push_back(inst.name + ": a universal candidate is not the extension");
              }
            }
          }
          if (universal == 0)
            fails.push_back(inst.name + ": brute-force search finds no universal candidate");
          data.emplace_back(inst.name + "-universal", std::to_string(universal));
        }
      });
}

inline std::vector<CriterionResult> run_certifications(const CertifyOptions& opt = {}) {
  std::vector<CriterionResult> out;
  out.push_back(certify_corpus_coherence());
  out.push_back(certify_convolution_formula());
  out.push_back(certify_fibration_lifts());
  out.push_back(certify_monoid_correspondence(opt));
  out.push_back(certify_colimit_distribution());
  out.push_back(certify_representable_embedding());
  out.push_back(certify_pushforward_functor());
  out.push_back(certify_kan_oracle());
  return out;
}

}  // namespace dayconv::certify
