#pragma once

#include <array>
#include <string>
#include <unordered_map>
#include <vector>

#include "dayconv/coherence.hpp"
#include "dayconv/fincat.hpp"
#include "dayconv/monoidal.hpp"

// The tensor fibration over finite pointed sets: fibers over <n> are n-fold
// powers of the base monoidal category, morphisms over f: <m> -> <n> are
// tuples of maps out of tensors over the fibers of f, and composition
// reassociates through the stored coherence data. Cocartesianness of edges is
// decided by exhaustive filler search; the chosen lifts use the fully
// left-associated normal form, which makes the pushforward split.

namespace dayconv::grothendieck {

using fincat::CatRef;
using fincat::FinCategory;
using monoidal::PointedSkeleton;
using monoidal::SymMonoidalStructure;

struct GrothFibration {
  CatRef total;
  CatRef base;
  fincat::Functor projection;
  // chosen cocartesian lift per (source object, base arrow); may be empty for
  // fibrations assembled by hand
  std::unordered_map<std::uint64_t, MorId> chosen;
  // memo of is_cocartesian_edge verdicts; writes are idempotent
  mutable std::unordered_map<MorId, signed char> cocart_memo;

  MorId chosen_lift(ObjId src, MorId base_arrow) const {
    auto it = chosen.find(pair_key(src, base_arrow));
    return it == chosen.end() ? kNoMor : it->second;
  }

  // edges out of x lying over f, indexed lazily in one pass
  const std::vector<MorId>& edges_over(ObjId x, MorId f) const {
    if (!edges_indexed_) {
      for (MorId e = 0; e < total->morphism_count(); ++e)
        edges_index_[pair_key(total->source(e), projection.mo[e])].push_back(e);
      edges_indexed_ = true;
    }
    auto it = edges_index_.find(pair_key(x, f));
    return it == edges_index_.end() ? kNoEdges : it->second;
  }

 private:
  mutable std::unordered_map<std::uint64_t, std::vector<MorId>> edges_index_;
  mutable bool edges_indexed_ = false;
  inline static const std::vector<MorId> kNoEdges{};
};

// e is cocartesian iff every edge from its source whose base factors through
// p(e) factors uniquely through e over the factorization.
inline bool is_cocartesian_edge(const GrothFibration& pi, MorId e) {
  if (auto it = pi.cocart_memo.find(e); it != pi.cocart_memo.end()) return it->second != 0;
  const FinCategory& T = *pi.total;
  const FinCategory& B = *pi.base;
  ObjId x = T.source(e), y = T.target(e);
  MorId f = pi.projection.mo[e];
  bool ok = true;
  for (MorId h : B.morphisms_from(B.target(f))) {
    MorId hf = B.compose(h, f);
    for (MorId e2 : pi.edges_over(x, hf)) {
      int fillers = 0;
      for (MorId k : pi.edges_over(y, h))
        if (T.compose(k, e) == e2) ++fillers;
      if (fillers != 1) {
        ok = false;
        break;
      }
    }
    if (!ok) break;
  }
  pi.cocart_memo[e] = ok ? 1 : 0;
  return ok;
}

// full subcategory over one base object, with decode maps back to the total
struct Fiber {
  CatRef cat;
  std::vector<ObjId> obj_in_total;
  std::vector<MorId> mor_in_total;
  std::unordered_map<ObjId, ObjId> obj_index;  // total object -> fiber object
  std::unordered_map<MorId, MorId> mor_index;
};

inline Fiber fiber_of(const GrothFibration& pi, ObjId b) {
  const FinCategory& T = *pi.total;
  Fiber fb;
  FinCategory::Data d;
  for (ObjId x = 0; x < T.object_count(); ++x)
    if (pi.projection.ob[x] == b) {
      fb.obj_index[x] = d.object_count++;
      fb.obj_in_total.push_back(x);
    }
  MorId idb = pi.base->identity(b);
  for (MorId e = 0; e < T.morphism_count(); ++e)
    if (pi.projection.mo[e] == idb) {
      fb.mor_index[e] = static_cast<MorId>(fb.mor_in_total.size());
      fb.mor_in_total.push_back(e);
      d.mor_source.push_back(fb.obj_index.at(T.source(e)));
      d.mor_target.push_back(fb.obj_index.at(T.target(e)));
    }
  d.identity.resize(d.object_count);
  for (ObjId i = 0; i < d.object_count; ++i)
    d.identity[i] = fb.mor_index.at(T.identity(fb.obj_in_total[i]));
  for (MorId i = 0; i < static_cast<MorId>(fb.mor_in_total.size()); ++i)
    for (MorId j = 0; j < static_cast<MorId>(fb.mor_in_total.size()); ++j) {
      if (d.mor_target[i] != d.mor_source[j]) continue;
      MorId c = T.compose(fb.mor_in_total[j], fb.mor_in_total[i]);
      auto it = fb.mor_index.find(c);
      d.compositions.push_back({j, i, it == fb.mor_index.end() ? kNoMor : it->second});
    }
  fb.cat = fincat::make_cat(std::move(d));
  return fb;
}

// ---------------------------------------------------------------------------
// Tensor fibration construction

struct TensorFibration {
  GrothFibration fib;
  SymMonoidalStructure M;
  PointedSkeleton skeleton;
  std::vector<std::vector<ObjId>> obj_tuple;   // per total object
  std::vector<std::vector<MorId>> mor_comps;   // per total morphism
  std::vector<ObjId> obj_offset;               // first object id per arity

  ObjId find_object(const std::vector<ObjId>& tuple) const {
    const int nc = M.cat->object_count();
    ObjId idx = 0;
    for (ObjId x : tuple) idx = idx * nc + x;
    return obj_offset[tuple.size()] + idx;
  }

  MorId find_morphism(MorId base_arrow, ObjId src, ObjId tgt,
                      const std::vector<MorId>& comps) const {
    auto it = group_.find(group_key(base_arrow, src, tgt));
    if (it == group_.end()) return kNoMor;
    MorId off = it->second;
    // mixed-radix position of the component tuple within its group
    MorId idx = 0;
    const int n = skeleton.cat->target(base_arrow);
    for (int t = 1; t <= n; ++t) {
      const auto& H = hom_list(src, tgt, base_arrow, t);
      int pos = -1;
      for (int i = 0; i < static_cast<int>(H.size()); ++i)
        if (H[i] == comps[t - 1]) {
          pos = i;
          break;
        }
      if (pos < 0) return kNoMor;
      idx = idx * static_cast<MorId>(H.size()) + pos;
    }
    return off + idx;
  }

  // exposed for construction; key packs (arrow, src, tgt)
  static std::uint64_t group_key(MorId f, ObjId s, ObjId t) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(f)) << 48) |
           (static_cast<std::uint64_t>(static_cast<std::uint32_t>(s) & 0xffffff) << 24) |
           (static_cast<std::uint32_t>(t) & 0xffffff);
  }
  std::unordered_map<std::uint64_t, MorId> group_;

  const std::vector<MorId>& hom_list(ObjId src, ObjId tgt, MorId f, int t) const {
    ObjId folded = coherence::fold_obj(
        M, tuple_select(obj_tuple[src], skeleton.preimage(f, t)));
    return M.cat->hom(folded, obj_tuple[tgt][t - 1]);
  }

  static std::vector<ObjId> tuple_select(const std::vector<ObjId>& tuple,
                                         const std::vector<int>& idx) {
    std::vector<ObjId> out;
    out.reserve(idx.size());
    for (int s : idx) out.push_back(tuple[s - 1]);
    return out;
  }
};

namespace detail_fib {

// composite component at u for e2∘e1 (e1 over f, e2 over g): reorder the
// ascending source word into f's block order, collapse blocks to their folds,
// apply e1's components, then e2's component.
inline MorId composite_component(const TensorFibration& tf, const std::vector<ObjId>& X,
                                 MorId f, const std::vector<MorId>& phi, MorId g,
                                 const std::vector<MorId>& psi, int u) {
  const SymMonoidalStructure& M = tf.M;
  const PointedSkeleton& ps = tf.skeleton;
  std::vector<int> gu = ps.preimage(g, u);
  std::vector<MorId> mid;
  mid.reserve(gu.size());
  for (int t : gu) mid.push_back(phi[t - 1]);
  MorId applied = coherence::fold_mor(M, mid);
  MorId out = M.cat->compose(psi[u - 1], applied);
  if (M.strict) return out;

  std::vector<int> concat_elems;
  std::vector<std::vector<ObjId>> blocks;
  for (int t : gu) {
    std::vector<int> bt = ps.preimage(f, t);
    blocks.push_back(TensorFibration::tuple_select(X, bt));
    concat_elems.insert(concat_elems.end(), bt.begin(), bt.end());
  }
  std::vector<int> ascending = concat_elems;
  std::sort(ascending.begin(), ascending.end());
  std::vector<ObjId> xs = TensorFibration::tuple_select(X, ascending);
  std::vector<int> perm(concat_elems.size());
  for (std::size_t j = 0; j < concat_elems.size(); ++j) {
    auto it = std::lower_bound(ascending.begin(), ascending.end(), concat_elems[j]);
    perm[j] = static_cast<int>(it - ascending.begin());
  }
  coherence::IsoPair re = coherence::reorder_iso(M, xs, perm);
  coherence::IsoPair fl = coherence::flatten_iso(M, blocks);
  // L(asc) --re--> L(concat) --fl.inv--> L(folds) --applied--> psi source
  return M.cat->compose(out, M.cat->compose(fl.inv, re.fwd));
}

}  // namespace detail_fib

inline TensorFibration build_tensor_fibration(SymMonoidalStructure M, PointedSkeleton ps) {
  TensorFibration tf;
  tf.M = std::move(M);
  tf.skeleton = std::move(ps);
  const SymMonoidalStructure& S = tf.M;
  const FinCategory& C = *S.cat;
  const FinCategory& B = *tf.skeleton.cat;
  const int nc = C.object_count();
  const int N = tf.skeleton.max_n;

  FinCategory::Data d;
  tf.obj_offset.assign(N + 2, 0);
  for (int n = 0; n <= N; ++n) {
    tf.obj_offset[n] = d.object_count;
    std::vector<ObjId> tup(n, 0);
    while (true) {
      tf.obj_tuple.push_back(tup);
      ++d.object_count;
      int i = n - 1;
      while (i >= 0 && tup[i] == nc - 1) tup[i--] = 0;
      if (i < 0) break;
      ++tup[i];
    }
  }
  tf.obj_offset[N + 1] = d.object_count;

  // enumerate morphisms grouped by (base arrow, source, target)
  for (MorId f = 0; f < B.morphism_count(); ++f) {
    int m = B.source(f), n = B.target(f);
    std::vector<std::vector<int>> pre(n + 1);
    for (int t = 1; t <= n; ++t) pre[t] = tf.skeleton.preimage(f, t);
    for (ObjId src = tf.obj_offset[m]; src < tf.obj_offset[m + 1]; ++src) {
      std::vector<ObjId> folds(n);
      for (int t = 1; t <= n; ++t)
        folds[t - 1] = coherence::fold_obj(S, TensorFibration::tuple_select(tf.obj_tuple[src], pre[t]));
      for (ObjId tgt = tf.obj_offset[n]; tgt < tf.obj_offset[n + 1]; ++tgt) {
        std::vector<const std::vector<MorId>*> homs(n);
        bool empty = false;
        for (int t = 1; t <= n && !empty; ++t) {
          homs[t - 1] = &C.hom(folds[t - 1], tf.obj_tuple[tgt][t - 1]);
          empty = homs[t - 1]->empty();
        }
        if (empty) continue;
        tf.group_[TensorFibration::group_key(f, src, tgt)] =
            static_cast<MorId>(d.mor_source.size());
        std::vector<int> pick(n, 0);
        while (true) {
          std::vector<MorId> comps(n);
          for (int t = 0; t < n; ++t) comps[t] = (*homs[t])[pick[t]];
          d.mor_source.push_back(src);
          d.mor_target.push_back(tgt);
          tf.mor_comps.push_back(std::move(comps));
          tf.fib.projection.mo.push_back(f);
          int i = n - 1;
          while (i >= 0 && pick[i] + 1 == static_cast<int>(homs[i]->size())) pick[i--] = 0;
          if (i < 0) break;
          ++pick[i];
        }
      }
    }
  }

  // identities
  d.identity.resize(d.object_count);
  for (ObjId x = 0; x < d.object_count; ++x) {
    int n = 0;
    while (tf.obj_offset[n + 1] <= x) ++n;
    std::vector<MorId> comps;
    for (ObjId c : tf.obj_tuple[x]) comps.push_back(C.identity(c));
    d.identity[x] = tf.find_morphism(B.identity(n), x, x, comps);
  }

  // composition via the coherence calculus
  std::vector<std::vector<MorId>> from(d.object_count);
  for (MorId e = 0; e < static_cast<MorId>(d.mor_source.size()); ++e)
    from[d.mor_source[e]].push_back(e);
  for (MorId e1 = 0; e1 < static_cast<MorId>(d.mor_source.size()); ++e1) {
    MorId f = tf.fib.projection.mo[e1];
    const std::vector<ObjId>& X = tf.obj_tuple[d.mor_source[e1]];
    for (MorId e2 : from[d.mor_target[e1]]) {
      MorId g = tf.fib.projection.mo[e2];
      MorId gf = B.compose(g, f);
      int k = B.target(g);
      std::vector<MorId> comps(k);
      for (int u = 1; u <= k; ++u)
        comps[u - 1] =
            detail_fib::composite_component(tf, X, f, tf.mor_comps[e1], g, tf.mor_comps[e2], u);
      MorId ce = tf.find_morphism(gf, d.mor_source[e1], d.mor_target[e2], comps);
      if (ce == kNoMor) throw DomainError("build_tensor_fibration: composite escaped its group");
      d.compositions.push_back({e2, e1, ce});
    }
  }

  // chosen lifts: identity components onto the left-associated folds
  for (ObjId x = 0; x < d.object_count; ++x) {
    int m = 0;
    while (tf.obj_offset[m + 1] <= x) ++m;
    for (MorId f : B.morphisms_from(m)) {
      int n = B.target(f);
      std::vector<ObjId> folds(n);
      std::vector<MorId> comps(n);
      for (int t = 1; t <= n; ++t) {
        folds[t - 1] = coherence::fold_obj(
            S, TensorFibration::tuple_select(tf.obj_tuple[x], tf.skeleton.preimage(f, t)));
        comps[t - 1] = C.identity(folds[t - 1]);
      }
      ObjId tgt = tf.find_object(folds);
      tf.fib.chosen[pair_key(x, f)] = tf.find_morphism(f, x, tgt, comps);
    }
  }

  tf.fib.total = fincat::make_cat(std::move(d));
  tf.fib.base = tf.skeleton.cat;
  tf.fib.projection.source = tf.fib.total;
  tf.fib.projection.target = tf.fib.base;
  for (ObjId x = 0; x < tf.fib.total->object_count(); ++x) {
    int n = 0;
    while (tf.obj_offset[n + 1] <= x) ++n;
    tf.fib.projection.ob.push_back(n);
  }
  return tf;
}

// ---------------------------------------------------------------------------
// Fibration validation

struct CocartValidateOptions {
  bool check_segal = true;       // only meaningful when built over the skeleton
  bool check_composability = true;
};

inline ValidationReport validate_cocartesian_fibration(const GrothFibration& pi,
                                                       const PointedSkeleton* skeleton = nullptr,
                                                       CocartValidateOptions opt = {}) {
  ValidationReport r;
  const FinCategory& T = *pi.total;
  const FinCategory& B = *pi.base;
  {
    auto fr = fincat::validate_functor(pi.projection);
    r.merge(fr, "projection");
    if (!r.ok()) return r;
  }

  // (a) every (source, base arrow) pair has a cocartesian lift; prefer the
  // chosen one, else search
  std::vector<std::vector<MorId>> lift(T.object_count());
  for (ObjId x = 0; x < T.object_count(); ++x) {
    lift[x].assign(B.morphism_count(), kNoMor);
    for (MorId f : B.morphisms_from(pi.projection.ob[x])) {
      MorId e = pi.chosen_lift(x, f);
      if (e != kNoMor) {
        if (!is_cocartesian_edge(pi, e)) {
          r.add_axiom("chosen-lift-not-cocartesian",
                      "(source,arrow)=(" + std::to_string(x) + "," + std::to_string(f) + ")");
          continue;
        }
        lift[x][f] = e;
        continue;
      }
      for (MorId cand : pi.edges_over(x, f))
        if (is_cocartesian_edge(pi, cand)) {
          e = cand;
          break;
        }
      if (e == kNoMor)
        r.add_axiom("no-cocartesian-lift",
                    "(source,arrow)=(" + std::to_string(x) + "," + std::to_string(f) + ")");
      else
        lift[x][f] = e;
    }
  }
  if (!r.ok()) return r;

  // (b) lifts compose up to isomorphism: the comparison filler from the
  // composite lift to the composed lifts must be invertible
  if (opt.check_composability) {
    for (ObjId x = 0; x < T.object_count(); ++x) {
      for (MorId f : B.morphisms_from(pi.projection.ob[x])) {
        MorId ef = lift[x][f];
        ObjId y = T.target(ef);
        for (MorId g : B.morphisms_from(B.target(f))) {
          MorId eg = lift[y][g];
          MorId egf = lift[x][B.compose(g, f)];
          MorId composed = T.compose(eg, ef);
          // unique filler k over id with k ∘ egf = composed
          MorId idc = B.identity(B.target(g));
          MorId found = kNoMor;
          int count = 0;
          for (MorId k : pi.edges_over(T.target(egf), idc))
            if (T.compose(k, egf) == composed) {
              ++count;
              found = k;
            }
          if (count != 1) {
            r.add_axiom("lift-composability-filler",
                        "(x,f,g)=(" + std::to_string(x) + "," + std::to_string(f) + "," +
                            std::to_string(g) + ") fillers=" + std::to_string(count));
            continue;
          }
          if (T.inverse_of(found) == kNoMor)
            r.add_axiom("lift-composability-not-iso",
                        "(x,f,g)=(" + std::to_string(x) + "," + std::to_string(f) + "," +
                            std::to_string(g) + ")");
        }
      }
    }
  }

  // (c) Segal: the inert pushforwards to the slots exhibit the fiber over <n>
  // as the n-th power of the fiber over <1>
  if (skeleton && opt.check_segal && skeleton->max_n >= 1) {
    Fiber f1 = fiber_of(pi, 1);
    const int base_objs = f1.cat->object_count();
    for (int n = 0; n <= skeleton->max_n; ++n) {
      Fiber fn = fiber_of(pi, n);
      // object bijection onto tuples
      long long power = 1;
      for (int j = 0; j < n; ++j) power *= base_objs;
      if (fn.cat->object_count() != power) {
        r.add_axiom("segal-object-count", "fiber<" + std::to_string(n) + "> has " +
                                              std::to_string(fn.cat->object_count()) +
                                              " objects, expected " + std::to_string(power));
        continue;
      }
      std::vector<MorId> rho(n + 1, kNoMor);
      for (int j = 1; j <= n; ++j) {
        std::vector<ObjId> v(n, 0);
        v[j - 1] = 1;
        rho[j] = skeleton->find(n, 1, v);
      }
      std::unordered_map<std::uint64_t, int> seen;
      for (ObjId xi = 0; xi < fn.cat->object_count(); ++xi) {
        ObjId x = fn.obj_in_total[xi];
        std::vector<ObjId> slots(n);
        for (int j = 1; j <= n; ++j) slots[j - 1] = T.target(lift[x][rho[j]]);
        std::uint64_t h = detail::hash_range(slots.begin(), slots.end());
        if (++seen[h] > 1)
          r.add_axiom("segal-object-collision", "fiber<" + std::to_string(n) + "> object " +
                                                    std::to_string(x));
      }
      // hom comparison: k -> (induced fillers along the inert lifts)
      for (ObjId xi = 0; xi < fn.cat->object_count(); ++xi) {
        for (ObjId yi = 0; yi < fn.cat->object_count(); ++yi) {
          ObjId x = fn.obj_in_total[xi], y = fn.obj_in_total[yi];
          std::size_t expected = 1;
          for (int j = 1; j <= n && expected; ++j) {
            ObjId xj = T.target(lift[x][rho[j]]);
            ObjId yj = T.target(lift[y][rho[j]]);
            std::size_t cnt = 0;
            for (MorId h : pi.edges_over(xj, B.identity(1)))
              if (T.target(h) == yj) ++cnt;
            expected *= cnt;
          }
          std::vector<std::vector<MorId>> images;
          for (MorId k : pi.edges_over(x, B.identity(n))) {
            if (T.target(k) != y) continue;
            std::vector<MorId> tuple(n);
            bool ok = true;
            for (int j = 1; j <= n && ok; ++j) {
              // unique filler over id<1> through the inert lift of x
              MorId through = T.compose(lift[y][rho[j]], k);
              MorId found = kNoMor;
              int cnt = 0;
              for (MorId h : pi.edges_over(T.target(lift[x][rho[j]]), B.identity(1)))
                if (T.compose(h, lift[x][rho[j]]) == through) {
                  ++cnt;
                  found = h;
                }
              if (cnt != 1) ok = false;
              tuple[j - 1] = found;
            }
            if (!ok) {
              r.add_axiom("segal-filler", "edge " + std::to_string(k));
              continue;
            }
            images.push_back(std::move(tuple));
          }
          std::sort(images.begin(), images.end());
          if (std::adjacent_find(images.begin(), images.end()) != images.end())
            r.add_axiom("segal-hom-not-injective",
                        "(" + std::to_string(x) + "," + std::to_string(y) + ")");
          if (images.size() != expected)
            r.add_axiom("segal-hom-count",
                        "(" + std::to_string(x) + "," + std::to_string(y) + ") has " +
                            std::to_string(images.size()) + " fiber maps, product gives " +
                            std::to_string(expected));
        }
      }
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Arrow category and the pushforward functor

struct ArrowCategory {
  CatRef base;
  CatRef cat;  // objects are the base morphisms
  fincat::Functor src_proj, tgt_proj;
  std::vector<std::pair<MorId, MorId>> square;  // per morphism: (u, v)

  MorId find_square(ObjId from_arrow, ObjId to_arrow, MorId u, MorId v) const {
    auto it = index_.find(key(from_arrow, to_arrow, u, v));
    return it == index_.end() ? kNoMor : it->second;
  }
  // exact packing; arrow_category guards the 16-bit field width
  static std::uint64_t key(ObjId a, ObjId b, MorId u, MorId v) {
    return (static_cast<std::uint64_t>(static_cast<std::uint16_t>(a)) << 48) |
           (static_cast<std::uint64_t>(static_cast<std::uint16_t>(b)) << 32) |
           (static_cast<std::uint64_t>(static_cast<std::uint16_t>(u)) << 16) |
           static_cast<std::uint16_t>(v);
  }
  std::unordered_map<std::uint64_t, MorId> index_;
};

inline ArrowCategory arrow_category(CatRef base) {
  const FinCategory& B = *base;
  if (B.morphism_count() >= 65536)
    throw ResourceCeilingError("arrow_category: base has too many morphisms for exact keys");
  ArrowCategory ac;
  ac.base = base;
  FinCategory::Data d;
  d.object_count = B.morphism_count();
  for (ObjId f = 0; f < B.morphism_count(); ++f) {
    ac.src_proj.ob.push_back(B.source(f));
    ac.tgt_proj.ob.push_back(B.target(f));
  }
  d.identity.assign(d.object_count, kNoMor);
  for (ObjId f = 0; f < d.object_count; ++f)
    for (ObjId g = 0; g < d.object_count; ++g)
      for (MorId u : B.hom(B.source(f), B.source(g)))
        for (MorId v : B.hom(B.target(f), B.target(g))) {
          if (B.compose(g, u) != B.compose(v, f)) continue;
          MorId m = static_cast<MorId>(d.mor_source.size());
          d.mor_source.push_back(f);
          d.mor_target.push_back(g);
          ac.square.push_back({u, v});
          ac.src_proj.mo.push_back(u);
          ac.tgt_proj.mo.push_back(v);
          ac.index_[ArrowCategory::key(f, g, u, v)] = m;
          if (f == g && u == B.identity(B.source(f)) && v == B.identity(B.target(f)))
            d.identity[f] = m;
        }
  std::vector<std::vector<MorId>> from(d.object_count);
  for (MorId m = 0; m < static_cast<MorId>(d.mor_source.size()); ++m)
    from[d.mor_source[m]].push_back(m);
  for (MorId m1 = 0; m1 < static_cast<MorId>(d.mor_source.size()); ++m1)
    for (MorId m2 : from[d.mor_target[m1]]) {
      MorId u = B.compose(ac.square[m2].first, ac.square[m1].first);
      MorId v = B.compose(ac.square[m2].second, ac.square[m1].second);
      d.compositions.push_back(
          {m2, m1, ac.find_square(d.mor_source[m1], d.mor_target[m2], u, v)});
    }
  ac.cat = fincat::make_cat(std::move(d));
  ac.src_proj.source = ac.cat;
  ac.src_proj.target = base;
  ac.tgt_proj.source = ac.cat;
  ac.tgt_proj.target = base;
  return ac;
}

// total ×_base Arr(base) along the source projection, with decode tables
struct PushforwardDomain {
  CatRef cat;
  fincat::Functor to_total;   // forgets the arrow
  fincat::Functor to_arrow;   // forgets the total part
  std::vector<std::pair<ObjId, ObjId>> obj_pair;  // (total object, arrow object)
  std::vector<std::pair<MorId, MorId>> mor_pair;
  std::unordered_map<std::uint64_t, ObjId> obj_index;
  std::unordered_map<std::uint64_t, MorId> mor_index;
};

struct PushforwardResult {
  ArrowCategory arr;
  PushforwardDomain dom;
  fincat::Functor functor;  // dom.cat -> total
};

inline PushforwardResult pushforward_functor(const GrothFibration& pi) {
  const FinCategory& T = *pi.total;
  const FinCategory& B = *pi.base;
  PushforwardResult res;
  res.arr = arrow_category(pi.base);
  PushforwardDomain& P = res.dom;
  FinCategory::Data d;
  for (ObjId x = 0; x < T.object_count(); ++x)
    for (ObjId f = 0; f < res.arr.cat->object_count(); ++f) {
      if (pi.projection.ob[x] != B.source(f)) continue;
      P.obj_index[pair_key(x, f)] = d.object_count;
      P.obj_pair.push_back({x, f});
      ++d.object_count;
    }
  d.identity.assign(d.object_count, kNoMor);
  for (ObjId i = 0; i < d.object_count; ++i) {
    auto [x, f] = P.obj_pair[i];
    for (MorId e : T.morphisms_from(x))
      for (MorId s : res.arr.cat->morphisms_from(f)) {
        if (pi.projection.mo[e] != res.arr.square[s].first) continue;
        auto jt = P.obj_index.find(pair_key(T.target(e), res.arr.cat->data().mor_target[s]));
        if (jt == P.obj_index.end()) continue;
        MorId m = static_cast<MorId>(d.mor_source.size());
        d.mor_source.push_back(i);
        d.mor_target.push_back(jt->second);
        P.mor_pair.push_back({e, s});
        P.mor_index[pair_key(e, s)] = m;
        if (e == T.identity(x) && s == res.arr.cat->identity(f)) d.identity[i] = m;
      }
  }
  std::vector<std::vector<MorId>> from(d.object_count);
  for (MorId m = 0; m < static_cast<MorId>(d.mor_source.size()); ++m)
    from[d.mor_source[m]].push_back(m);
  // flat lookup tables: the loop below visits millions of pairs, and both the
  // arrow category's sparse compose and mor_index would cost a hash find each
  const std::size_t am = res.arr.cat->morphism_count();
  std::vector<MorId> arr_comp(am * am, kNoMor);
  for (const auto& [s2, s1, s21] : res.arr.cat->data().compositions)
    arr_comp[static_cast<std::size_t>(s2) * am + s1] = s21;
  std::vector<MorId> pair_at(static_cast<std::size_t>(T.morphism_count()) * am, kNoMor);
  for (MorId m = 0; m < static_cast<MorId>(P.mor_pair.size()); ++m)
    pair_at[static_cast<std::size_t>(P.mor_pair[m].first) * am + P.mor_pair[m].second] = m;
  for (MorId m1 = 0; m1 < static_cast<MorId>(d.mor_source.size()); ++m1)
    for (MorId m2 : from[d.mor_target[m1]]) {
      MorId e = T.compose(P.mor_pair[m2].first, P.mor_pair[m1].first);
      MorId s = arr_comp[static_cast<std::size_t>(P.mor_pair[m2].second) * am +
                         P.mor_pair[m1].second];
      d.compositions.push_back({m2, m1,
                                e == kNoMor || s == kNoMor
                                    ? kNoMor
                                    : pair_at[static_cast<std::size_t>(e) * am + s]});
    }
  P.cat = fincat::make_cat(std::move(d));
  P.to_total = fincat::Functor{P.cat, pi.total, {}, {}};
  P.to_arrow = fincat::Functor{P.cat, res.arr.cat, {}, {}};
  for (auto& [x, f] : P.obj_pair) {
    P.to_total.ob.push_back(x);
    P.to_arrow.ob.push_back(f);
  }
  for (auto& [e, s] : P.mor_pair) {
    P.to_total.mo.push_back(e);
    P.to_arrow.mo.push_back(s);
  }

  // object map: chosen lift targets; morphism map: unique fillers
  res.functor = fincat::Functor{P.cat, pi.total, {}, {}};
  for (ObjId i = 0; i < P.cat->object_count(); ++i) {
    auto [x, f] = P.obj_pair[i];
    MorId lift = pi.chosen_lift(x, f);
    if (lift == kNoMor) throw DomainError("pushforward_functor: missing chosen lift");
    res.functor.ob.push_back(T.target(lift));
  }
  for (MorId m = 0; m < P.cat->morphism_count(); ++m) {
    auto [e, s] = P.mor_pair[m];
    auto [x, f] = P.obj_pair[P.cat->source(m)];
    auto [x2, f2] = P.obj_pair[P.cat->target(m)];
    MorId lf = pi.chosen_lift(x, f);
    MorId lf2 = pi.chosen_lift(x2, f2);
    MorId v = res.arr.square[s].second;
    MorId want = T.compose(lf2, e);  // x -> f2_* x2 over f2 ∘ u = v ∘ f
    MorId found = kNoMor;
    int count = 0;
    for (MorId k : pi.edges_over(T.target(lf), v))
      if (T.compose(k, lf) == want) {
        ++count;
        found = k;
      }
    if (count != 1)
      throw DomainError("pushforward_functor: filler not unique for morphism " +
                        std::to_string(m) + " (count " + std::to_string(count) + ")");
    res.functor.mo.push_back(found);
  }
  return res;
}

// ---------------------------------------------------------------------------
// Pullback of a fibration along a functor into its base

struct PullbackResult {
  GrothFibration fib;  // over k's source
  std::vector<std::pair<ObjId, ObjId>> obj_pair;  // (object of A, total object)
  std::vector<std::pair<MorId, MorId>> mor_pair;
  fincat::Functor to_total;
};

inline PullbackResult pullback_along(const GrothFibration& pi, const fincat::Functor& k) {
  const FinCategory& A = *k.source;
  const FinCategory& T = *pi.total;
  PullbackResult res;
  FinCategory::Data d;
  std::unordered_map<std::uint64_t, ObjId> oidx;
  std::unordered_map<std::uint64_t, MorId> midx;
  for (ObjId a = 0; a < A.object_count(); ++a)
    for (ObjId x = 0; x < T.object_count(); ++x) {
      if (pi.projection.ob[x] != k.ob[a]) continue;
      oidx[pair_key(a, x)] = d.object_count++;
      res.obj_pair.push_back({a, x});
    }
  d.identity.assign(d.object_count, kNoMor);
  for (ObjId i = 0; i < d.object_count; ++i) {
    auto [a, x] = res.obj_pair[i];
    for (MorId u : A.morphisms_from(a))
      for (MorId e : T.morphisms_from(x)) {
        if (pi.projection.mo[e] != k.mo[u]) continue;
        auto jt = oidx.find(pair_key(A.target(u), T.target(e)));
        if (jt == oidx.end()) continue;
        MorId m = static_cast<MorId>(d.mor_source.size());
        d.mor_source.push_back(i);
        d.mor_target.push_back(jt->second);
        res.mor_pair.push_back({u, e});
        midx[pair_key(u, e)] = m;
        if (u == A.identity(a) && e == T.identity(x)) d.identity[i] = m;
      }
  }
  for (MorId m1 = 0; m1 < static_cast<MorId>(d.mor_source.size()); ++m1)
    for (MorId m2 = 0; m2 < static_cast<MorId>(d.mor_source.size()); ++m2) {
      if (d.mor_target[m1] != d.mor_source[m2]) continue;
      MorId u = A.compose(res.mor_pair[m2].first, res.mor_pair[m1].first);
      MorId e = T.compose(res.mor_pair[m2].second, res.mor_pair[m1].second);
      auto it = midx.find(pair_key(u, e));
      d.compositions.push_back({m2, m1, it == midx.end() ? kNoMor : it->second});
    }
  res.fib.total = fincat::make_cat(std::move(d));
  res.fib.base = k.source;
  res.fib.projection = fincat::Functor{res.fib.total, k.source, {}, {}};
  res.to_total = fincat::Functor{res.fib.total, pi.total, {}, {}};
  for (auto& [a, x] : res.obj_pair) {
    res.fib.projection.ob.push_back(a);
    res.to_total.ob.push_back(x);
  }
  for (auto& [u, e] : res.mor_pair) {
    res.fib.projection.mo.push_back(u);
    res.to_total.mo.push_back(e);
  }
  // transport chosen lifts when the downstairs lift stays in the image
  for (ObjId i = 0; i < res.fib.total->object_count(); ++i) {
    auto [a, x] = res.obj_pair[i];
    for (MorId u : A.morphisms_from(a)) {
      MorId e = pi.chosen_lift(x, k.mo[u]);
      if (e == kNoMor) continue;
      auto jt = oidx.find(pair_key(A.target(u), T.target(e)));
      if (jt == oidx.end()) continue;
      auto mt = midx.find(pair_key(u, e));
      if (mt != midx.end()) res.fib.chosen[pair_key(i, u)] = mt->second;
    }
  }
  return res;
}

}  // namespace dayconv::grothendieck
