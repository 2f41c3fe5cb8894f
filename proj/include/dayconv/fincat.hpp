#pragma once

#include <algorithm>
#include <array>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "dayconv/core.hpp"

// Finite categories with dense integer ids and fully explicit tables.
// Composition is stored either as a dense matrix or as a hash of exactly the
// composable pairs; both are enumerable, nothing is recomputed lazily.

namespace dayconv::fincat {

class FinCategory;
using CatRef = std::shared_ptr<const FinCategory>;

class FinCategory {
 public:
  struct Data {
    int object_count = 0;
    std::vector<ObjId> mor_source;
    std::vector<ObjId> mor_target;
    std::vector<MorId> identity;  // one per object
    // (g, f, g∘f) triples; f first in application order g∘f
    std::vector<std::array<MorId, 3>> compositions;
  };

  FinCategory() = default;
  explicit FinCategory(Data d) : d_(std::move(d)) { index(); }

  int object_count() const { return d_.object_count; }
  int morphism_count() const { return static_cast<int>(d_.mor_source.size()); }

  ObjId source(MorId f) const { return d_.mor_source[f]; }
  ObjId target(MorId f) const { return d_.mor_target[f]; }
  MorId identity(ObjId a) const { return d_.identity[a]; }
  bool is_identity(MorId f) const {
    ObjId s = source(f);
    return s == target(f) && d_.identity[s] == f;
  }

  // g∘f, or kNoMor when target(f) != source(g) / the pair is unassigned.
  MorId compose(MorId g, MorId f) const {
    if (dense_) {
      return dense_table_[static_cast<std::size_t>(g) * d_.mor_source.size() + f];
    }
    auto it = sparse_.find(pair_key(g, f));
    return it == sparse_.end() ? kNoMor : it->second;
  }

  const std::vector<MorId>& morphisms_from(ObjId a) const { return from_[a]; }
  const std::vector<MorId>& morphisms_to(ObjId a) const { return to_[a]; }

  const std::vector<MorId>& hom(ObjId a, ObjId b) const {
    auto it = hom_.find(pair_key(a, b));
    return it == hom_.end() ? empty_ : it->second;
  }

  const Data& data() const { return d_; }
  bool well_formed() const { return well_formed_; }

  // Exact structural equality (same ids, same tables).
  bool equals(const FinCategory& o) const {
    return d_.object_count == o.d_.object_count && d_.mor_source == o.d_.mor_source &&
           d_.mor_target == o.d_.mor_target && d_.identity == o.d_.identity &&
           normalized_compositions() == o.normalized_compositions();
  }

  // Two-sided inverse, or kNoMor.
  MorId inverse_of(MorId f) const {
    ObjId a = source(f), b = target(f);
    for (MorId g : hom(b, a))
      if (compose(g, f) == d_.identity[a] && compose(f, g) == d_.identity[b]) return g;
    return kNoMor;
  }

 private:
  std::vector<std::array<MorId, 3>> normalized_compositions() const {
    auto c = d_.compositions;
    std::sort(c.begin(), c.end());
    return c;
  }

  void index() {
    const std::size_t m = d_.mor_source.size();
    well_formed_ = static_cast<int>(d_.identity.size()) == d_.object_count;
    from_.assign(d_.object_count, {});
    to_.assign(d_.object_count, {});
    for (MorId f = 0; f < static_cast<MorId>(m); ++f) {
      ObjId s = d_.mor_source[f], t = d_.mor_target[f];
      if (s < 0 || s >= d_.object_count || t < 0 || t >= d_.object_count) {
        well_formed_ = false;
        continue;
      }
      from_[s].push_back(f);
      to_[t].push_back(f);
      hom_[pair_key(s, t)].push_back(f);
    }
    for (ObjId a = 0; a < d_.object_count && well_formed_; ++a) {
      MorId e = d_.identity[a];
      if (e < 0 || e >= static_cast<MorId>(m) || d_.mor_source[e] != a || d_.mor_target[e] != a)
        well_formed_ = false;
    }
    dense_ = m * m <= kDenseLimit;
    if (dense_) {
      dense_table_.assign(m * m, kNoMor);
      for (const auto& [g, f, gf] : d_.compositions) {
        if (g < 0 || f < 0 || gf < 0 || g >= static_cast<MorId>(m) || f >= static_cast<MorId>(m) ||
            gf >= static_cast<MorId>(m)) {
          well_formed_ = false;
          continue;
        }
        dense_table_[static_cast<std::size_t>(g) * m + f] = gf;
      }
    } else {
      sparse_.reserve(d_.compositions.size() * 2);
      for (const auto& [g, f, gf] : d_.compositions) {
        if (g < 0 || f < 0 || gf < 0 || g >= static_cast<MorId>(m) || f >= static_cast<MorId>(m) ||
            gf >= static_cast<MorId>(m)) {
          well_formed_ = false;
          continue;
        }
        sparse_[pair_key(g, f)] = gf;
      }
    }
  }

  static constexpr std::size_t kDenseLimit = 1u << 22;

  Data d_;
  bool dense_ = true;
  bool well_formed_ = false;
  std::vector<MorId> dense_table_;
  std::unordered_map<std::uint64_t, MorId> sparse_;
  std::vector<std::vector<MorId>> from_, to_;
  std::unordered_map<std::uint64_t, std::vector<MorId>> hom_;
  std::vector<MorId> empty_;
};

inline CatRef make_cat(FinCategory::Data d) {
  return std::make_shared<const FinCategory>(std::move(d));
}

// Incremental construction helper for hand-assembled categories.
class FinCategoryBuilder {
 public:
  ObjId add_object() {
    d_.identity.push_back(kNoMor);
    return d_.object_count++;
  }
  MorId add_morphism(ObjId src, ObjId tgt) {
    d_.mor_source.push_back(src);
    d_.mor_target.push_back(tgt);
    return static_cast<MorId>(d_.mor_source.size() - 1);
  }
  MorId add_identity(ObjId a) {
    MorId e = add_morphism(a, a);
    d_.identity[a] = e;
    return e;
  }
  void set_compose(MorId g, MorId f, MorId gf) { d_.compositions.push_back({g, f, gf}); }

  // Fill every missing composite involving an identity. Explicit entries win.
  CatRef build_with_identities() {
    FinCategory probe(d_);
    auto present = [&](MorId g, MorId f) { return probe.compose(g, f) != kNoMor; };
    const MorId m = probe.morphism_count();
    for (MorId f = 0; f < m; ++f) {
      MorId es = d_.identity[probe.source(f)], et = d_.identity[probe.target(f)];
      if (es != kNoMor && !present(f, es)) d_.compositions.push_back({f, es, f});
      // for an identity f both pairs coincide; endomorphisms still need both
      if (et != kNoMor && !(f == es && et == f) && !present(et, f))
        d_.compositions.push_back({et, f, f});
    }
    return make_cat(std::move(d_));
  }

  CatRef build() { return make_cat(std::move(d_)); }
  FinCategory::Data& data() { return d_; }

 private:
  FinCategory::Data d_;
};

// ---------------------------------------------------------------------------
// Validation

inline ValidationReport validate_category(const FinCategory& c) {
  ValidationReport r;
  const int m = c.morphism_count();
  const auto& d = c.data();

  if (static_cast<int>(d.identity.size()) != d.object_count)
    r.add_structural("identity-table-size",
                     "expected " + std::to_string(d.object_count) + " identities, have " +
                         std::to_string(d.identity.size()));
  for (MorId f = 0; f < m; ++f) {
    if (d.mor_source[f] < 0 || d.mor_source[f] >= d.object_count)
      r.add_structural("dangling-source", "morphism " + std::to_string(f));
    if (d.mor_target[f] < 0 || d.mor_target[f] >= d.object_count)
      r.add_structural("dangling-target", "morphism " + std::to_string(f));
  }
  for (ObjId a = 0; a < static_cast<ObjId>(d.identity.size()) && a < d.object_count; ++a) {
    MorId e = d.identity[a];
    if (e < 0 || e >= m) {
      r.add_structural("dangling-identity", "object " + std::to_string(a));
    } else if (d.mor_source[e] != a || d.mor_target[e] != a) {
      r.add_structural("identity-endpoints", "object " + std::to_string(a) + " identity " +
                                                 std::to_string(e) + " is not an endomorphism");
    }
  }
  for (const auto& [g, f, gf] : d.compositions) {
    if (g < 0 || g >= m || f < 0 || f >= m || gf < 0 || gf >= m) {
      r.add_structural("dangling-composition", "entry (" + std::to_string(g) + "," +
                                                   std::to_string(f) + ")=" + std::to_string(gf));
      continue;
    }
    if (c.target(f) != c.source(g))
      r.add_structural("compose-not-composable",
                       "entry (" + std::to_string(g) + "," + std::to_string(f) + ")");
  }
  if (!r.structural.empty()) return r;

  // Every composable pair must be assigned, with matching endpoints.
  for (ObjId b = 0; b < d.object_count; ++b) {
    for (MorId f : c.morphisms_to(b)) {
      for (MorId g : c.morphisms_from(b)) {
        MorId gf = c.compose(g, f);
        if (gf == kNoMor) {
          r.add_structural("compose-missing",
                           "(" + std::to_string(g) + "," + std::to_string(f) + ")");
        } else if (c.source(gf) != c.source(f) || c.target(gf) != c.target(g)) {
          r.add_structural("compose-endpoints",
                           "(" + std::to_string(g) + "," + std::to_string(f) + ")=" +
                               std::to_string(gf));
        }
      }
    }
  }
  if (!r.structural.empty()) return r;

  for (MorId f = 0; f < m; ++f) {
    if (c.compose(f, c.identity(c.source(f))) != f)
      r.add_axiom("right-identity", "morphism " + std::to_string(f));
    if (c.compose(c.identity(c.target(f)), f) != f)
      r.add_axiom("left-identity", "morphism " + std::to_string(f));
  }
  for (MorId f = 0; f < m; ++f) {
    for (MorId g : c.morphisms_from(c.target(f))) {
      MorId gf = c.compose(g, f);
      for (MorId h : c.morphisms_from(c.target(g))) {
        if (c.compose(h, gf) != c.compose(c.compose(h, g), f))
          r.add_axiom("assoc", "triple (h,g,f)=(" + std::to_string(h) + "," + std::to_string(g) +
                                   "," + std::to_string(f) + ")");
      }
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Functors and natural transformations

struct Functor {
  CatRef source;
  CatRef target;
  std::vector<ObjId> ob;  // per source object
  std::vector<MorId> mo;  // per source morphism
};

inline Functor identity_functor(CatRef c) {
  Functor f{c, c, {}, {}};
  f.ob.resize(c->object_count());
  f.mo.resize(c->morphism_count());
  for (ObjId a = 0; a < c->object_count(); ++a) f.ob[a] = a;
  for (MorId u = 0; u < c->morphism_count(); ++u) f.mo[u] = u;
  return f;
}

inline ValidationReport validate_functor(const Functor& F) {
  ValidationReport r;
  const FinCategory& A = *F.source;
  const FinCategory& B = *F.target;
  if (static_cast<int>(F.ob.size()) != A.object_count())
    r.add_structural("functor-ob-size", "object map has wrong length");
  if (static_cast<int>(F.mo.size()) != A.morphism_count())
    r.add_structural("functor-mo-size", "morphism map has wrong length");
  if (!r.structural.empty()) return r;
  for (ObjId a = 0; a < A.object_count(); ++a)
    if (F.ob[a] < 0 || F.ob[a] >= B.object_count())
      r.add_structural("functor-ob-range", "object " + std::to_string(a));
  for (MorId u = 0; u < A.morphism_count(); ++u)
    if (F.mo[u] < 0 || F.mo[u] >= B.morphism_count())
      r.add_structural("functor-mo-range", "morphism " + std::to_string(u));
  if (!r.structural.empty()) return r;

  for (MorId u = 0; u < A.morphism_count(); ++u) {
    if (B.source(F.mo[u]) != F.ob[A.source(u)] || B.target(F.mo[u]) != F.ob[A.target(u)])
      r.add_axiom("functor-endpoints", "morphism " + std::to_string(u));
  }
  for (ObjId a = 0; a < A.object_count(); ++a)
    if (F.mo[A.identity(a)] != B.identity(F.ob[a]))
      r.add_axiom("functor-identity", "object " + std::to_string(a));
  // walk the stored triples: rederiving pairs via compose() costs a hash
  // lookup each on sparse categories, and large pullbacks have millions
  for (const auto& [g, f, gf] : A.data().compositions) {
    if (gf == kNoMor || A.target(f) != A.source(g)) continue;
    if (F.mo[gf] != B.compose(F.mo[g], F.mo[f]))
      r.add_axiom("functor-compose",
                  "pair (g,f)=(" + std::to_string(g) + "," + std::to_string(f) + ")");
  }
  return r;
}

inline Functor compose_functors(const Functor& G, const Functor& F) {
  Functor h{F.source, G.target, {}, {}};
  h.ob.resize(F.ob.size());
  h.mo.resize(F.mo.size());
  for (std::size_t a = 0; a < F.ob.size(); ++a) h.ob[a] = G.ob[F.ob[a]];
  for (std::size_t u = 0; u < F.mo.size(); ++u) h.mo[u] = G.mo[F.mo[u]];
  return h;
}

struct NatTrans {
  Functor source;  // F
  Functor target;  // G, same source/target categories
  std::vector<MorId> comp;  // per object of F.source, morphism F(a) -> G(a)
};

inline ValidationReport validate_nat_trans(const NatTrans& n) {
  ValidationReport r;
  const FinCategory& A = *n.source.source;
  const FinCategory& B = *n.source.target;
  if (static_cast<int>(n.comp.size()) != A.object_count()) {
    r.add_structural("nat-size", "component count mismatch");
    return r;
  }
  for (ObjId a = 0; a < A.object_count(); ++a) {
    MorId c = n.comp[a];
    if (c < 0 || c >= B.morphism_count() || B.source(c) != n.source.ob[a] ||
        B.target(c) != n.target.ob[a]) {
      r.add_structural("nat-endpoints", "object " + std::to_string(a));
      return r;
    }
  }
  for (MorId u = 0; u < A.morphism_count(); ++u) {
    ObjId a = A.source(u), b = A.target(u);
    if (B.compose(n.comp[b], n.source.mo[u]) != B.compose(n.target.mo[u], n.comp[a]))
      r.add_axiom("naturality", "morphism " + std::to_string(u));
  }
  return r;
}

// ---------------------------------------------------------------------------
// Products

struct ProductCat {
  CatRef cat;
  CatRef left, right;
  Functor proj_left, proj_right;

  ObjId obj(ObjId a, ObjId b) const { return a * right->object_count() + b; }
  std::pair<ObjId, ObjId> obj_parts(ObjId p) const {
    int n = right->object_count();
    return {p / n, p % n};
  }
  MorId mor(MorId f, MorId g) const { return f * right->morphism_count() + g; }
  std::pair<MorId, MorId> mor_parts(MorId p) const {
    int n = right->morphism_count();
    return {p / n, p % n};
  }
};

inline ProductCat product_category(CatRef A, CatRef B) {
  FinCategory::Data d;
  const int oa = A->object_count(), ob = B->object_count();
  const int ma = A->morphism_count(), mb = B->morphism_count();
  d.object_count = oa * ob;
  d.mor_source.resize(static_cast<std::size_t>(ma) * mb);
  d.mor_target.resize(static_cast<std::size_t>(ma) * mb);
  d.identity.resize(d.object_count);
  for (MorId f = 0; f < ma; ++f)
    for (MorId g = 0; g < mb; ++g) {
      MorId p = f * mb + g;
      d.mor_source[p] = A->source(f) * ob + B->source(g);
      d.mor_target[p] = A->target(f) * ob + B->target(g);
    }
  for (ObjId a = 0; a < oa; ++a)
    for (ObjId b = 0; b < ob; ++b) d.identity[a * ob + b] = A->identity(a) * mb + B->identity(b);
  for (MorId f = 0; f < ma; ++f)
    for (MorId f2 : A->morphisms_from(A->target(f))) {
      MorId ff = A->compose(f2, f);
      for (MorId g = 0; g < mb; ++g)
        for (MorId g2 : B->morphisms_from(B->target(g)))
          d.compositions.push_back({f2 * mb + g2, f * mb + g, ff * mb + B->compose(g2, g)});
    }
  ProductCat p;
  p.cat = make_cat(std::move(d));
  p.left = A;
  p.right = B;
  p.proj_left = Functor{p.cat, A, {}, {}};
  p.proj_right = Functor{p.cat, B, {}, {}};
  for (ObjId x = 0; x < p.cat->object_count(); ++x) {
    auto [a, b] = p.obj_parts(x);
    p.proj_left.ob.push_back(a);
    p.proj_right.ob.push_back(b);
  }
  for (MorId u = 0; u < p.cat->morphism_count(); ++u) {
    auto [f, g] = p.mor_parts(u);
    p.proj_left.mo.push_back(f);
    p.proj_right.mo.push_back(g);
  }
  return p;
}

// F × G : A×B -> A'×B' with the standard index packing on both sides.
inline Functor product_functor(const ProductCat& src, const ProductCat& dst, const Functor& F,
                               const Functor& G) {
  Functor h{src.cat, dst.cat, {}, {}};
  for (ObjId x = 0; x < src.cat->object_count(); ++x) {
    auto [a, b] = src.obj_parts(x);
    h.ob.push_back(dst.obj(F.ob[a], G.ob[b]));
  }
  for (MorId u = 0; u < src.cat->morphism_count(); ++u) {
    auto [f, g] = src.mor_parts(u);
    h.mo.push_back(dst.mor(F.mo[f], G.mo[g]));
  }
  return h;
}

// ---------------------------------------------------------------------------
// Opposite

inline CatRef opposite_category(const FinCategory& c) {
  FinCategory::Data d = c.data();
  std::swap(d.mor_source, d.mor_target);
  for (auto& [g, f, gf] : d.compositions) std::swap(g, f);
  return make_cat(std::move(d));
}

// ---------------------------------------------------------------------------
// Full subcategories

struct FullSubcategory {
  CatRef cat;
  Functor inclusion;
  std::vector<ObjId> object_map;  // ambient object -> sub object, kNoObj outside
};

inline FullSubcategory full_subcategory(CatRef ambient, const std::vector<ObjId>& objects) {
  const FinCategory& A = *ambient;
  FullSubcategory out;
  FinCategory::Data d;
  out.object_map.assign(A.object_count(), kNoObj);
  for (ObjId o : objects) {
    if (o < 0 || o >= A.object_count())
      throw DomainError("full_subcategory: object " + std::to_string(o) + " out of range");
    if (out.object_map[o] != kNoObj)
      throw DomainError("full_subcategory: object " + std::to_string(o) + " listed twice");
    out.object_map[o] = d.object_count++;
  }
  std::vector<MorId> keep;
  std::vector<MorId> back(A.morphism_count(), kNoMor);
  for (MorId m = 0; m < A.morphism_count(); ++m) {
    ObjId s = out.object_map[A.source(m)], t = out.object_map[A.target(m)];
    if (s == kNoObj || t == kNoObj) continue;
    back[m] = static_cast<MorId>(keep.size());
    keep.push_back(m);
    d.mor_source.push_back(s);
    d.mor_target.push_back(t);
  }
  d.identity.assign(d.object_count, kNoMor);
  for (ObjId o : objects) d.identity[out.object_map[o]] = back[A.identity(o)];
  for (MorId i = 0; i < static_cast<MorId>(keep.size()); ++i)
    for (MorId j = 0; j < static_cast<MorId>(keep.size()); ++j)
      if (d.mor_target[i] == d.mor_source[j])
        d.compositions.push_back({j, i, back[A.compose(keep[j], keep[i])]});
  out.cat = make_cat(std::move(d));
  out.inclusion = Functor{out.cat, std::move(ambient), objects, std::move(keep)};
  return out;
}

// ---------------------------------------------------------------------------
// Comma categories

// Objects of F ↓ X: pairs (a, phi: F(a) -> X). Projection forgets phi.
struct CommaCat {
  CatRef cat;
  Functor projection;      // to the source of F
  std::vector<ObjId> at;   // per comma object: a
  std::vector<MorId> arm;  // per comma object: phi
  std::vector<MorId> leg;  // per comma morphism: the underlying u in source(F)

  std::optional<ObjId> find(ObjId a, MorId phi) const {
    auto it = index_.find(pair_key(a, phi));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  std::unordered_map<std::uint64_t, ObjId> index_;
};

namespace detail_comma {

// under=false: objects (a, phi: F a -> X), morphisms u with arm(tgt) ∘ F(u) = arm(src).
// under=true:  objects (a, phi: X -> F a), morphisms u with F(u) ∘ arm(src) = arm(tgt).
// Either way a comma morphism is pinned down by its comma target and its leg:
// the source arm is forced as arm(tgt)∘F(u) resp. recoverable by uniqueness of
// the stored (source, leg) pair, so (tgt, leg) indexes morphisms injectively in
// the over case and (src, leg) does in the under case.
inline CommaCat build(const Functor& F, ObjId X, bool under) {
  const FinCategory& A = *F.source;
  const FinCategory& C = *F.target;
  CommaCat cc;
  FinCategory::Data d;
  for (ObjId a = 0; a < A.object_count(); ++a) {
    const auto& arms = under ? C.hom(X, F.ob[a]) : C.hom(F.ob[a], X);
    for (MorId phi : arms) {
      cc.index_[pair_key(a, phi)] = d.object_count;
      cc.at.push_back(a);
      cc.arm.push_back(phi);
      d.object_count++;
    }
  }
  d.identity.assign(d.object_count, kNoMor);
  std::unordered_map<std::uint64_t, MorId> mor_index;
  for (ObjId i = 0; i < d.object_count; ++i) {
    ObjId a = cc.at[i];
    MorId phi = cc.arm[i];
    for (MorId u : A.morphisms_from(a)) {
      ObjId b = A.target(u);
      if (under) {
        auto j = cc.find(b, C.compose(F.mo[u], phi));
        if (!j) continue;  // only on malformed input
        MorId m = static_cast<MorId>(d.mor_source.size());
        d.mor_source.push_back(i);
        d.mor_target.push_back(*j);
        cc.leg.push_back(u);
        mor_index[pair_key(i, u)] = m;
        if (u == A.identity(a)) d.identity[i] = m;
      } else {
        for (MorId cand : C.hom(F.ob[b], X)) {
          if (C.compose(cand, F.mo[u]) != phi) continue;
          auto j = cc.find(b, cand);
          MorId m = static_cast<MorId>(d.mor_source.size());
          d.mor_source.push_back(i);
          d.mor_target.push_back(*j);
          cc.leg.push_back(u);
          mor_index[pair_key(*j, u)] = m;
          if (u == A.identity(a) && cand == phi) d.identity[i] = m;
        }
      }
    }
  }
  for (MorId m1 = 0; m1 < static_cast<MorId>(d.mor_source.size()); ++m1) {
    for (MorId m2 = 0; m2 < static_cast<MorId>(d.mor_source.size()); ++m2) {
      if (d.mor_target[m1] != d.mor_source[m2]) continue;
      MorId u = A.compose(cc.leg[m2], cc.leg[m1]);
      std::uint64_t key = under ? pair_key(d.mor_source[m1], u) : pair_key(d.mor_target[m2], u);
      auto it = mor_index.find(key);
      d.compositions.push_back({m2, m1, it == mor_index.end() ? kNoMor : it->second});
    }
  }
  cc.cat = make_cat(std::move(d));
  cc.projection = Functor{cc.cat, F.source, cc.at, cc.leg};
  return cc;
}

}  // namespace detail_comma

inline CommaCat comma_over(const Functor& F, ObjId X) { return detail_comma::build(F, X, false); }
inline CommaCat comma_under(ObjId X, const Functor& F) { return detail_comma::build(F, X, true); }

// ---------------------------------------------------------------------------
// Searches

inline std::optional<ObjId> find_terminal(const FinCategory& c) {
  for (ObjId t = 0; t < c.object_count(); ++t) {
    bool ok = true;
    for (ObjId a = 0; a < c.object_count() && ok; ++a) ok = c.hom(a, t).size() == 1;
    if (ok) return t;
  }
  return std::nullopt;
}

inline std::optional<ObjId> find_initial(const FinCategory& c) {
  for (ObjId t = 0; t < c.object_count(); ++t) {
    bool ok = true;
    for (ObjId a = 0; a < c.object_count() && ok; ++a) ok = c.hom(t, a).size() == 1;
    if (ok) return t;
  }
  return std::nullopt;
}

// Zigzag connectivity of the underlying graph; empty category is not connected.
inline bool is_connected(const FinCategory& c) {
  if (c.object_count() == 0) return false;
  std::vector<int> comp(c.object_count());
  for (int i = 0; i < c.object_count(); ++i) comp[i] = i;
  auto find = [&](int x) {
    while (comp[x] != x) x = comp[x] = comp[comp[x]];
    return x;
  };
  for (MorId f = 0; f < c.morphism_count(); ++f) comp[find(c.source(f))] = find(c.target(f));
  int root = find(0);
  for (int i = 1; i < c.object_count(); ++i)
    if (find(i) != root) return false;
  return true;
}

namespace detail_iso {

inline bool extend_morphisms(const FinCategory& A, const FinCategory& B,
                             const std::vector<ObjId>& sigma, std::vector<MorId>& mu, MorId next,
                             std::vector<char>& used) {
  if (next == A.morphism_count()) return true;
  ObjId s = sigma[A.source(next)], t = sigma[A.target(next)];
  for (MorId cand : B.hom(s, t)) {
    if (used[cand]) continue;
    if (A.is_identity(next) != B.is_identity(cand)) continue;
    mu[next] = cand;
    used[cand] = 1;
    bool ok = true;
    // composition closure against already-assigned morphisms (mu[0..next] set)
    for (MorId f = 0; f <= next && ok; ++f) {
      if (A.target(f) == A.source(next)) {
        MorId gf = A.compose(next, f);
        if (gf >= 0 && gf <= next && B.compose(cand, mu[f]) != mu[gf]) ok = false;
      }
      if (ok && A.target(next) == A.source(f)) {
        MorId fg = A.compose(f, next);
        if (fg >= 0 && fg <= next && B.compose(mu[f], cand) != mu[fg]) ok = false;
      }
    }
    if (ok && extend_morphisms(A, B, sigma, mu, next + 1, used)) return true;
    used[cand] = 0;
    mu[next] = kNoMor;
  }
  return false;
}

inline bool extend_objects(const FinCategory& A, const FinCategory& B, std::vector<ObjId>& sigma,
                           std::vector<char>& used, ObjId next, Functor& out) {
  if (next == A.object_count()) {
    std::vector<MorId> mu(A.morphism_count(), kNoMor);
    std::vector<char> mused(B.morphism_count(), 0);
    if (!extend_morphisms(A, B, sigma, mu, 0, mused)) return false;
    out.ob = sigma;
    out.mo = mu;
    return true;
  }
  for (ObjId cand = 0; cand < B.object_count(); ++cand) {
    if (used[cand]) continue;
    bool ok = true;
    for (ObjId a = 0; a < next && ok; ++a) {
      if (A.hom(a, next).size() != B.hom(sigma[a], cand).size()) ok = false;
      if (A.hom(next, a).size() != B.hom(cand, sigma[a]).size()) ok = false;
    }
    if (A.hom(next, next).size() != B.hom(cand, cand).size()) ok = false;
    if (!ok) continue;
    sigma[next] = cand;
    used[cand] = 1;
    if (extend_objects(A, B, sigma, used, next + 1, out)) return true;
    used[cand] = 0;
  }
  return false;
}

}  // namespace detail_iso

// Isomorphism of categories (strict, on-the-nose), by backtracking search.
inline std::optional<Functor> find_category_iso(CatRef A, CatRef B) {
  if (A->object_count() != B->object_count() || A->morphism_count() != B->morphism_count())
    return std::nullopt;
  Functor out{A, B, {}, {}};
  std::vector<ObjId> sigma(A->object_count(), kNoObj);
  std::vector<char> used(B->object_count(), 0);
  if (detail_iso::extend_objects(*A, *B, sigma, used, 0, out)) return out;
  return std::nullopt;
}

// Canonical relabeling (A×B)×C -> A×(B×C); returns the iso functor.
inline Functor product_assoc_relabel(const ProductCat& AB, const ProductCat& AB_C,
                                     const ProductCat& BC, const ProductCat& A_BC) {
  Functor h{AB_C.cat, A_BC.cat, {}, {}};
  for (ObjId x = 0; x < AB_C.cat->object_count(); ++x) {
    auto [ab, c] = AB_C.obj_parts(x);
    auto [a, b] = AB.obj_parts(ab);
    h.ob.push_back(A_BC.obj(a, BC.obj(b, c)));
  }
  for (MorId u = 0; u < AB_C.cat->morphism_count(); ++u) {
    auto [fg, h2] = AB_C.mor_parts(u);
    auto [f, g] = AB.mor_parts(fg);
    h.mo.push_back(A_BC.mor(f, BC.mor(g, h2)));
  }
  return h;
}

}  // namespace dayconv::fincat
