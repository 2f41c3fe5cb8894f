#pragma once

#include <string>
#include <vector>

#include "dayconv/fincat.hpp"

// Symmetric monoidal structures on finite categories, with all coherence data
// explicit so non-strict examples are representable, and the skeleton of
// finite pointed sets with inert/active classification.

namespace dayconv::monoidal {

using fincat::CatRef;
using fincat::FinCategory;

// Component tables are indexed positionally: assoc by (a*n+b)*n+c, symm by
// a*n+b, unitors by object. Inverse tables are derived once by fill_inverses;
// a kNoMor inverse marks a non-invertible component for the validator.
struct SymMonoidalStructure {
  CatRef cat;
  ObjId unit = kNoObj;
  std::vector<ObjId> tensor_ob;  // n*n
  std::vector<MorId> tensor_mo;  // m*m
  std::vector<MorId> assoc, assoc_inv;  // (a⊗b)⊗c -> a⊗(b⊗c)
  std::vector<MorId> lunit, lunit_inv;  // I⊗a -> a
  std::vector<MorId> runit, runit_inv;  // a⊗I -> a
  std::vector<MorId> symm, symm_inv;    // a⊗b -> b⊗a
  bool strict = false;  // every structure component is an identity

  ObjId ten(ObjId a, ObjId b) const { return tensor_ob[a * cat->object_count() + b]; }
  MorId ten_m(MorId f, MorId g) const { return tensor_mo[f * cat->morphism_count() + g]; }
  MorId a_of(ObjId a, ObjId b, ObjId c) const {
    int n = cat->object_count();
    return assoc[(a * n + b) * n + c];
  }
  MorId a_inv_of(ObjId a, ObjId b, ObjId c) const {
    int n = cat->object_count();
    return assoc_inv[(a * n + b) * n + c];
  }
  MorId s_of(ObjId a, ObjId b) const { return symm[a * cat->object_count() + b]; }
  MorId s_inv_of(ObjId a, ObjId b) const { return symm_inv[a * cat->object_count() + b]; }

  void fill_inverses() {
    auto fill = [&](const std::vector<MorId>& fwd, std::vector<MorId>& inv) {
      inv.assign(fwd.size(), kNoMor);
      for (std::size_t i = 0; i < fwd.size(); ++i)
        if (fwd[i] >= 0 && fwd[i] < cat->morphism_count()) inv[i] = cat->inverse_of(fwd[i]);
    };
    fill(assoc, assoc_inv);
    fill(lunit, lunit_inv);
    fill(runit, runit_inv);
    fill(symm, symm_inv);
    strict = true;
    for (const auto* t : {&assoc, &lunit, &runit, &symm})
      for (MorId f : *t)
        if (f < 0 || f >= cat->morphism_count() || !cat->is_identity(f)) strict = false;
  }

  // The tensor as an honest functor out of the packed product category.
  fincat::Functor as_functor(const fincat::ProductCat& square) const {
    fincat::Functor f{square.cat, cat, {}, {}};
    for (ObjId x = 0; x < square.cat->object_count(); ++x) {
      auto [a, b] = square.obj_parts(x);
      f.ob.push_back(ten(a, b));
    }
    for (MorId u = 0; u < square.cat->morphism_count(); ++u) {
      auto [g, h] = square.mor_parts(u);
      f.mo.push_back(ten_m(g, h));
    }
    return f;
  }
};

// Strict structure over a discrete or thin category: morphism tensor is the
// unique hom element, all coherence components are identities.
inline SymMonoidalStructure make_strict(CatRef cat, ObjId unit, std::vector<ObjId> tensor_ob) {
  SymMonoidalStructure m;
  m.cat = cat;
  m.unit = unit;
  m.tensor_ob = std::move(tensor_ob);
  const int n = cat->object_count(), mm = cat->morphism_count();
  m.tensor_mo.assign(static_cast<std::size_t>(mm) * mm, kNoMor);
  for (MorId f = 0; f < mm; ++f)
    for (MorId g = 0; g < mm; ++g) {
      ObjId s = m.ten(cat->source(f), cat->source(g)), t = m.ten(cat->target(f), cat->target(g));
      const auto& h = cat->hom(s, t);
      if (h.size() != 1)
        throw DomainError("make_strict: tensor of morphisms not forced (hom size " +
                          std::to_string(h.size()) + ")");
      m.tensor_mo[static_cast<std::size_t>(f) * mm + g] = h[0];
    }
  m.assoc.resize(static_cast<std::size_t>(n) * n * n);
  for (ObjId a = 0; a < n; ++a)
    for (ObjId b = 0; b < n; ++b)
      for (ObjId c = 0; c < n; ++c)
        m.assoc[(static_cast<std::size_t>(a) * n + b) * n + c] =
            cat->identity(m.ten(m.ten(a, b), c));
  m.lunit.resize(n);
  m.runit.resize(n);
  for (ObjId a = 0; a < n; ++a) {
    m.lunit[a] = cat->identity(a);
    m.runit[a] = cat->identity(a);
  }
  m.symm.resize(static_cast<std::size_t>(n) * n);
  for (ObjId a = 0; a < n; ++a)
    for (ObjId b = 0; b < n; ++b) m.symm[a * n + b] = cat->identity(m.ten(a, b));
  m.fill_inverses();
  return m;
}

inline ValidationReport validate_monoidal(const SymMonoidalStructure& M) {
  ValidationReport r;
  const FinCategory& C = *M.cat;
  const int n = C.object_count(), m = C.morphism_count();

  if (M.unit < 0 || M.unit >= n) r.add_structural("unit-range", std::to_string(M.unit));
  if (static_cast<int>(M.tensor_ob.size()) != n * n)
    r.add_structural("tensor-ob-size", std::to_string(M.tensor_ob.size()));
  if (static_cast<std::size_t>(m) * m != M.tensor_mo.size())
    r.add_structural("tensor-mo-size", std::to_string(M.tensor_mo.size()));
  if (static_cast<std::size_t>(n) * n * n != M.assoc.size() || M.assoc.size() != M.assoc_inv.size())
    r.add_structural("assoc-size", std::to_string(M.assoc.size()));
  if (static_cast<int>(M.lunit.size()) != n || static_cast<int>(M.runit.size()) != n)
    r.add_structural("unitor-size", "");
  if (static_cast<std::size_t>(n) * n != M.symm.size())
    r.add_structural("symm-size", std::to_string(M.symm.size()));
  if (!r.structural.empty()) return r;
  for (ObjId x : M.tensor_ob)
    if (x < 0 || x >= n) {
      r.add_structural("tensor-ob-range", std::to_string(x));
      return r;
    }
  for (MorId f : M.tensor_mo)
    if (f < 0 || f >= m) {
      r.add_structural("tensor-mo-range", std::to_string(f));
      return r;
    }

  auto pr = [](std::initializer_list<int> xs) {
    std::string s = "(";
    bool first = true;
    for (int x : xs) {
      if (!first) s += ",";
      s += std::to_string(x);
      first = false;
    }
    return s + ")";
  };

  // bifunctoriality of the tensor
  for (ObjId a = 0; a < n; ++a)
    for (ObjId b = 0; b < n; ++b)
      if (M.ten_m(C.identity(a), C.identity(b)) != C.identity(M.ten(a, b)))
        r.add_structural("tensor-identity", pr({a, b}));
  for (MorId f = 0; f < m; ++f)
    for (MorId g = 0; g < m; ++g) {
      MorId t = M.ten_m(f, g);
      if (C.source(t) != M.ten(C.source(f), C.source(g)) ||
          C.target(t) != M.ten(C.target(f), C.target(g)))
        r.add_structural("tensor-endpoints", pr({f, g}));
    }
  if (!r.structural.empty()) return r;
  for (MorId f = 0; f < m; ++f)
    for (MorId f2 : C.morphisms_from(C.target(f)))
      for (MorId g = 0; g < m; ++g)
        for (MorId g2 : C.morphisms_from(C.target(g)))
          if (M.ten_m(C.compose(f2, f), C.compose(g2, g)) !=
              C.compose(M.ten_m(f2, g2), M.ten_m(f, g)))
            r.add_structural("tensor-compose", pr({f2, f, g2, g}));

  // components: endpoints and invertibility
  auto check_iso = [&](const char* what, MorId fwd, MorId inv, ObjId s, ObjId t,
                       const std::string& at) {
    if (fwd < 0 || fwd >= m || C.source(fwd) != s || C.target(fwd) != t) {
      r.add_structural(std::string(what) + "-endpoints", at);
      return;
    }
    if (inv == kNoMor) r.add_structural(std::string(what) + "-not-iso", at);
  };
  for (ObjId a = 0; a < n; ++a)
    for (ObjId b = 0; b < n; ++b)
      for (ObjId c = 0; c < n; ++c)
        check_iso("assoc", M.a_of(a, b, c), M.a_inv_of(a, b, c), M.ten(M.ten(a, b), c),
                  M.ten(a, M.ten(b, c)), pr({a, b, c}));
  for (ObjId a = 0; a < n; ++a) {
    check_iso("lunit", M.lunit[a], M.lunit_inv[a], M.ten(M.unit, a), a, pr({a}));
    check_iso("runit", M.runit[a], M.runit_inv[a], M.ten(a, M.unit), a, pr({a}));
  }
  for (ObjId a = 0; a < n; ++a)
    for (ObjId b = 0; b < n; ++b)
      check_iso("symm", M.s_of(a, b), M.s_inv_of(a, b), M.ten(a, b), M.ten(b, a), pr({a, b}));
  if (!r.structural.empty()) return r;

  // naturality in every variable
  for (MorId f = 0; f < m; ++f)
    for (MorId g = 0; g < m; ++g) {
      ObjId a = C.source(f), a2 = C.target(f), b = C.source(g), b2 = C.target(g);
      if (C.compose(M.s_of(a2, b2), M.ten_m(f, g)) != C.compose(M.ten_m(g, f), M.s_of(a, b)))
        r.add_axiom("symm-naturality", pr({f, g}));
      for (MorId h = 0; h < m; ++h) {
        ObjId c = C.source(h), c2 = C.target(h);
        MorId lhs = C.compose(M.a_of(a2, b2, c2), M.ten_m(M.ten_m(f, g), h));
        MorId rhs = C.compose(M.ten_m(f, M.ten_m(g, h)), M.a_of(a, b, c));
        if (lhs != rhs) r.add_axiom("assoc-naturality", pr({f, g, h}));
      }
    }
  for (MorId f = 0; f < m; ++f) {
    ObjId a = C.source(f), b = C.target(f);
    if (C.compose(M.lunit[b], M.ten_m(C.identity(M.unit), f)) != C.compose(f, M.lunit[a]))
      r.add_axiom("lunit-naturality", pr({f}));
    if (C.compose(M.runit[b], M.ten_m(f, C.identity(M.unit))) != C.compose(f, M.runit[a]))
      r.add_axiom("runit-naturality", pr({f}));
  }

  // pentagon
  for (ObjId a = 0; a < n; ++a)
    for (ObjId b = 0; b < n; ++b)
      for (ObjId c = 0; c < n; ++c)
        for (ObjId d = 0; d < n; ++d) {
          MorId lhs = C.compose(M.a_of(a, b, M.ten(c, d)), M.a_of(M.ten(a, b), c, d));
          MorId rhs = C.compose(
              M.ten_m(C.identity(a), M.a_of(b, c, d)),
              C.compose(M.a_of(a, M.ten(b, c), d), M.ten_m(M.a_of(a, b, c), C.identity(d))));
          if (lhs != rhs) r.add_axiom("pentagon", pr({a, b, c, d}));
        }

  // triangle
  for (ObjId a = 0; a < n; ++a)
    for (ObjId b = 0; b < n; ++b) {
      MorId lhs = C.compose(M.ten_m(C.identity(a), M.lunit[b]), M.a_of(a, M.unit, b));
      if (lhs != M.ten_m(M.runit[a], C.identity(b))) r.add_axiom("triangle", pr({a, b}));
    }

  // hexagons and involutivity
  for (ObjId a = 0; a < n; ++a)
    for (ObjId b = 0; b < n; ++b) {
      if (C.compose(M.s_of(b, a), M.s_of(a, b)) != C.identity(M.ten(a, b)))
        r.add_axiom("symm-involution", pr({a, b}));
      for (ObjId c = 0; c < n; ++c) {
        MorId lhs = C.compose(M.a_of(b, c, a), C.compose(M.s_of(a, M.ten(b, c)), M.a_of(a, b, c)));
        MorId rhs = C.compose(M.ten_m(C.identity(b), M.s_of(a, c)),
                              C.compose(M.a_of(b, a, c), M.ten_m(M.s_of(a, b), C.identity(c))));
        if (lhs != rhs) r.add_axiom("hexagon-1", pr({a, b, c}));
        MorId lhs2 = C.compose(M.a_inv_of(c, a, b),
                               C.compose(M.s_of(M.ten(a, b), c), M.a_inv_of(a, b, c)));
        MorId rhs2 = C.compose(M.ten_m(M.s_of(a, c), C.identity(b)),
                               C.compose(M.a_inv_of(a, c, b), M.ten_m(C.identity(a), M.s_of(b, c))));
        if (lhs2 != rhs2) r.add_axiom("hexagon-2", pr({a, b, c}));
      }
    }
  return r;
}

// ---------------------------------------------------------------------------
// Finite pointed sets

// Objects 0..max_n stand for the pointed sets {0,...,n} with basepoint 0.
// Morphisms are all basepoint-preserving maps, enumerated per (m,n) block in
// lexicographic order of their value tuples on 1..m, so a morphism id can be
// recovered arithmetically from its values.
struct PointedSkeleton {
  int max_n = 0;
  CatRef cat;
  std::vector<std::vector<ObjId>> values;     // per morphism, images of 1..m
  std::vector<std::vector<MorId>> offset;     // offset[m][n] = id of first map m -> n

  int arity(MorId f) const { return cat->source(f); }

  MorId find(int m, int n, const std::vector<ObjId>& vals) const {
    MorId idx = 0;
    for (int i = 0; i < m; ++i) idx = idx * (n + 1) + vals[i];
    return offset[m][n] + idx;
  }

  MorId apply_to(MorId f, ObjId elem) const { return elem == 0 ? 0 : values[f][elem - 1]; }

  // sorted list of s in 1..m with f(s) = t
  std::vector<int> preimage(MorId f, int t) const {
    std::vector<int> out;
    for (int s = 1; s <= arity(f); ++s)
      if (values[f][s - 1] == t) out.push_back(s);
    return out;
  }
};

inline PointedSkeleton build_F_skeleton(int max_n) {
  if (max_n < 0) throw DomainError("build_F_skeleton: negative bound");
  PointedSkeleton ps;
  ps.max_n = max_n;
  FinCategory::Data d;
  d.object_count = max_n + 1;
  ps.offset.assign(max_n + 1, std::vector<MorId>(max_n + 1, kNoMor));
  for (int mm = 0; mm <= max_n; ++mm) {
    for (int nn = 0; nn <= max_n; ++nn) {
      ps.offset[mm][nn] = static_cast<MorId>(d.mor_source.size());
      std::vector<ObjId> vals(mm, 0);
      // lexicographic enumeration of value tuples
      while (true) {
        d.mor_source.push_back(mm);
        d.mor_target.push_back(nn);
        ps.values.push_back(vals);
        int i = mm - 1;
        while (i >= 0 && vals[i] == nn) vals[i--] = 0;
        if (i < 0) break;
        ++vals[i];
      }
    }
  }
  d.identity.resize(max_n + 1);
  for (int nn = 0; nn <= max_n; ++nn) {
    std::vector<ObjId> idv(nn);
    for (int i = 0; i < nn; ++i) idv[i] = i + 1;
    MorId idx = 0;
    for (int i = 0; i < nn; ++i) idx = idx * (nn + 1) + idv[i];
    d.identity[nn] = ps.offset[nn][nn] + idx;
  }
  const MorId total = static_cast<MorId>(d.mor_source.size());
  for (MorId f = 0; f < total; ++f) {
    int mm = d.mor_source[f], nn = d.mor_target[f];
    for (int kk = 0; kk <= max_n; ++kk) {
      for (MorId g = ps.offset[nn][kk]; g < ps.offset[nn][kk] + ipow(kk + 1, nn); ++g) {
        std::vector<ObjId> comp(mm);
        for (int i = 0; i < mm; ++i) {
          ObjId mid = ps.values[f][i];
          comp[i] = mid == 0 ? 0 : ps.values[g][mid - 1];
        }
        MorId idx = 0;
        for (int i = 0; i < mm; ++i) idx = idx * (kk + 1) + comp[i];
        d.compositions.push_back({g, f, ps.offset[mm][kk] + idx});
      }
    }
  }
  ps.cat = fincat::make_cat(std::move(d));
  return ps;
}

struct MorphismClass {
  bool inert = false;
  bool active = false;
};

inline std::string class_name(MorphismClass c) {
  if (c.inert && c.active) return "inert+active";
  if (c.inert) return "inert";
  if (c.active) return "active";
  return "generic";
}

inline MorphismClass classify_morphism(const PointedSkeleton& ps, MorId f) {
  const int m = ps.cat->source(f), n = ps.cat->target(f);
  MorphismClass c;
  c.active = true;
  std::vector<int> hits(n + 1, 0);
  for (int s = 1; s <= m; ++s) {
    ObjId v = ps.values[f][s - 1];
    ++hits[v];
    if (v == 0) c.active = false;
  }
  c.inert = true;
  for (int t = 1; t <= n; ++t)
    if (hits[t] != 1) c.inert = false;
  return c;
}

// f = active ∘ inert, the canonical choice: the inert part keeps the
// non-basepoint-bound elements in ascending order.
inline std::pair<MorId, MorId> inert_active_factorization(const PointedSkeleton& ps, MorId f) {
  const int m = ps.cat->source(f), n = ps.cat->target(f);
  std::vector<ObjId> kept;  // elements of 1..m not sent to the basepoint
  for (int s = 1; s <= m; ++s)
    if (ps.values[f][s - 1] != 0) kept.push_back(s);
  const int p = static_cast<int>(kept.size());
  if (p > ps.max_n)
    throw DomainError("inert_active_factorization: middle object exceeds skeleton bound");
  std::vector<ObjId> iv(m, 0);
  for (int j = 0; j < p; ++j) iv[kept[j] - 1] = j + 1;
  std::vector<ObjId> av(p);
  for (int j = 0; j < p; ++j) av[j] = ps.values[f][kept[j] - 1];
  return {ps.find(m, p, iv), ps.find(p, n, av)};
}

}  // namespace dayconv::monoidal
