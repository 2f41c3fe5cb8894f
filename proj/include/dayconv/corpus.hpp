#pragma once

#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "dayconv/monoidal.hpp"

// Bundled example structures: discrete commutative monoids, join-semilattices,
// and the walking arrow with max. All are strict; z2_twisted below is a
// deliberately non-strict extra used to exercise the coherence machinery.

namespace dayconv::corpus {

using fincat::CatRef;
using monoidal::SymMonoidalStructure;

inline CatRef discrete_category(int n) {
  fincat::FinCategoryBuilder b;
  for (int i = 0; i < n; ++i) b.add_identity(b.add_object());
  return b.build_with_identities();
}

inline CatRef walking_arrow() {
  fincat::FinCategoryBuilder b;
  ObjId s = b.add_object(), t = b.add_object();
  b.add_identity(s);
  b.add_identity(t);
  b.add_morphism(s, t);
  return b.build_with_identities();
}

// Morphisms are the pairs a <= b in lexicographic order.
inline CatRef poset_category(int n, const std::function<bool(int, int)>& leq) {
  fincat::FinCategory::Data d;
  d.object_count = n;
  std::vector<std::vector<MorId>> at(n, std::vector<MorId>(n, kNoMor));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (leq(a, b)) {
        at[a][b] = static_cast<MorId>(d.mor_source.size());
        d.mor_source.push_back(a);
        d.mor_target.push_back(b);
      }
  for (int a = 0; a < n; ++a) d.identity.push_back(at[a][a]);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (at[a][b] != kNoMor && at[b][c] != kNoMor)
          d.compositions.push_back({at[b][c], at[a][b], at[a][c]});
  return fincat::make_cat(std::move(d));
}

inline SymMonoidalStructure discrete_monoid(int n, const std::function<int(int, int)>& mul,
                                            int unit) {
  std::vector<ObjId> t(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a * n + b] = mul(a, b);
  return monoidal::make_strict(discrete_category(n), unit, std::move(t));
}

inline SymMonoidalStructure z2() {
  return discrete_monoid(2, [](int a, int b) { return a ^ b; }, 0);
}

inline SymMonoidalStructure z3() {
  return discrete_monoid(3, [](int a, int b) { return (a + b) % 3; }, 0);
}

inline SymMonoidalStructure z2xz2() {
  return discrete_monoid(4, [](int a, int b) { return a ^ b; }, 0);
}

// {0 < 1} with join
inline SymMonoidalStructure chain2() {
  auto cat = poset_category(2, [](int a, int b) { return a <= b; });
  return monoidal::make_strict(cat, 0, {0, 1, 1, 1});
}

// divisors of 12 ordered by divisibility, tensor = lcm
inline SymMonoidalStructure div12() {
  static const int divs[6] = {1, 2, 3, 4, 6, 12};
  auto idx = [](int v) {
    for (int i = 0; i < 6; ++i)
      if (divs[i] == v) return i;
    return -1;
  };
  auto cat = poset_category(6, [&](int a, int b) { return divs[b] % divs[a] == 0; });
  std::vector<ObjId> t(36);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) t[a * 6 + b] = idx(std::lcm(divs[a], divs[b]));
  return monoidal::make_strict(cat, 0, std::move(t));
}

// walking arrow s -> t with tensor = max(s=0, t=1); same poset as chain2 but
// assembled from the raw category builder rather than the poset helper
inline SymMonoidalStructure arrow_max() {
  return monoidal::make_strict(walking_arrow(), 0, {0, 1, 1, 1});
}

// One object, endomorphisms Z/2 = {id, g}, tensor = addition of endos.
// Associator and symmetry are identities but both unitors are g, which is a
// valid non-strict structure: it satisfies every coherence axiom yet forces
// any word-calculus client through genuinely non-identity components.
inline SymMonoidalStructure z2_twisted() {
  fincat::FinCategory::Data d;
  d.object_count = 1;
  d.mor_source = {0, 0};
  d.mor_target = {0, 0};
  d.identity = {0};
  for (MorId g = 0; g < 2; ++g)
    for (MorId f = 0; f < 2; ++f) d.compositions.push_back({g, f, (g + f) % 2});
  SymMonoidalStructure m;
  m.cat = fincat::make_cat(std::move(d));
  m.unit = 0;
  m.tensor_ob = {0};
  m.tensor_mo = {0, 1, 1, 0};
  m.assoc = {0};
  m.lunit = {1};
  m.runit = {1};
  m.symm = {0};
  m.fill_inverses();
  return m;
}

struct NamedMonoidal {
  std::string name;
  SymMonoidalStructure m;
};

inline std::vector<NamedMonoidal> bundled_corpus() {
  return {{"z2", z2()},       {"z3", z3()},       {"z2xz2", z2xz2()},
          {"chain2", chain2()}, {"div12", div12()}, {"arrow-max", arrow_max()}};
}

}  // namespace dayconv::corpus
