#pragma once

#include <vector>

#include "dayconv/monoidal.hpp"

// Canonical isomorphisms between iterated tensors, assembled from the stored
// coherence components. Words are left-associated folds: L(x1..xk) means
// ((x1⊗x2)⊗x3)..., and L() is the unit. Every operation returns the
// isomorphism together with its inverse so callers can compose freely.

namespace dayconv::coherence {

using monoidal::SymMonoidalStructure;

struct IsoPair {
  MorId fwd = kNoMor;
  MorId inv = kNoMor;
};

inline ObjId fold_obj(const SymMonoidalStructure& M, const std::vector<ObjId>& xs) {
  if (xs.empty()) return M.unit;
  ObjId acc = xs[0];
  for (std::size_t i = 1; i < xs.size(); ++i) acc = M.ten(acc, xs[i]);
  return acc;
}

inline MorId fold_mor(const SymMonoidalStructure& M, const std::vector<MorId>& fs) {
  if (fs.empty()) return M.cat->identity(M.unit);
  MorId acc = fs[0];
  for (std::size_t i = 1; i < fs.size(); ++i) acc = M.ten_m(acc, fs[i]);
  return acc;
}

inline IsoPair identity_iso(const SymMonoidalStructure& M, ObjId a) {
  return {M.cat->identity(a), M.cat->identity(a)};
}

inline IsoPair compose(const SymMonoidalStructure& M, const IsoPair& second,
                       const IsoPair& first) {
  return {M.cat->compose(second.fwd, first.fwd), M.cat->compose(first.inv, second.inv)};
}

inline IsoPair tensor(const SymMonoidalStructure& M, const IsoPair& p, const IsoPair& q) {
  return {M.ten_m(p.fwd, q.fwd), M.ten_m(p.inv, q.inv)};
}

inline IsoPair assoc_iso(const SymMonoidalStructure& M, ObjId a, ObjId b, ObjId c) {
  return {M.a_of(a, b, c), M.a_inv_of(a, b, c)};
}

inline IsoPair symm_iso(const SymMonoidalStructure& M, ObjId a, ObjId b) {
  return {M.s_of(a, b), M.s_inv_of(a, b)};
}

// L(A) ⊗ L(B) -> L(A ++ B)
inline IsoPair concat_iso(const SymMonoidalStructure& M, const std::vector<ObjId>& A,
                          const std::vector<ObjId>& B) {
  if (A.empty()) {
    ObjId b = fold_obj(M, B);
    return {M.lunit[b], M.lunit_inv[b]};
  }
  if (B.empty()) {
    ObjId a = fold_obj(M, A);
    return {M.runit[a], M.runit_inv[a]};
  }
  if (B.size() == 1) {
    // L(A) ⊗ b is literally L(A ++ [b])
    return identity_iso(M, M.ten(fold_obj(M, A), B[0]));
  }
  std::vector<ObjId> Bp(B.begin(), B.end() - 1);
  ObjId last = B.back();
  IsoPair alpha_inv = {assoc_iso(M, fold_obj(M, A), fold_obj(M, Bp), last).inv,
                       assoc_iso(M, fold_obj(M, A), fold_obj(M, Bp), last).fwd};
  IsoPair rec = tensor(M, concat_iso(M, A, Bp), identity_iso(M, last));
  return compose(M, rec, alpha_inv);
}

namespace detail {

// swap the last two entries of xs: L(xs) -> L(xs with tail swapped)
inline IsoPair tail_swap(const SymMonoidalStructure& M, const std::vector<ObjId>& xs) {
  const std::size_t k = xs.size();
  ObjId a = xs[k - 2], b = xs[k - 1];
  if (k == 2) return symm_iso(M, a, b);
  std::vector<ObjId> P(xs.begin(), xs.end() - 2);
  ObjId p = fold_obj(M, P);
  IsoPair step = assoc_iso(M, p, a, b);
  step = compose(M, tensor(M, identity_iso(M, p), symm_iso(M, a, b)), step);
  IsoPair alpha2 = assoc_iso(M, p, b, a);
  return compose(M, IsoPair{alpha2.inv, alpha2.fwd}, step);
}

}  // namespace detail

// swap positions i and i+1: L(xs) -> L(xs with xs[i], xs[i+1] exchanged)
inline IsoPair adjacent_swap_iso(const SymMonoidalStructure& M, const std::vector<ObjId>& xs,
                                 std::size_t i) {
  std::vector<ObjId> prefix(xs.begin(), xs.begin() + i + 2);
  IsoPair iso = detail::tail_swap(M, prefix);
  for (std::size_t j = i + 2; j < xs.size(); ++j)
    iso = tensor(M, iso, identity_iso(M, xs[j]));
  return iso;
}

// L(xs) -> L(ys) where ys[j] = xs[perm[j]]; perm is a permutation of 0..k-1.
inline IsoPair reorder_iso(const SymMonoidalStructure& M, const std::vector<ObjId>& xs,
                           const std::vector<int>& perm) {
  std::vector<ObjId> cur = xs;
  std::vector<int> at(xs.size());  // original index sitting at each position
  for (std::size_t i = 0; i < xs.size(); ++i) at[i] = static_cast<int>(i);
  IsoPair iso = identity_iso(M, fold_obj(M, xs));
  for (std::size_t j = 0; j < xs.size(); ++j) {
    std::size_t q = j;
    while (at[q] != perm[j]) ++q;
    for (std::size_t t = q; t > j; --t) {
      iso = compose(M, adjacent_swap_iso(M, cur, t - 1), iso);
      std::swap(cur[t - 1], cur[t]);
      std::swap(at[t - 1], at[t]);
    }
  }
  return iso;
}

// L([fold(B_1), ..., fold(B_r)]) -> L(B_1 ++ ... ++ B_r)
inline IsoPair flatten_iso(const SymMonoidalStructure& M,
                           const std::vector<std::vector<ObjId>>& blocks) {
  if (blocks.empty()) return identity_iso(M, M.unit);
  std::vector<ObjId> folds;
  for (const auto& b : blocks) folds.push_back(fold_obj(M, b));
  if (blocks.size() == 1) return identity_iso(M, folds[0]);
  std::vector<std::vector<ObjId>> init(blocks.begin(), blocks.end() - 1);
  std::vector<ObjId> C;
  for (const auto& b : init) C.insert(C.end(), b.begin(), b.end());
  IsoPair rec = tensor(M, flatten_iso(M, init), identity_iso(M, folds.back()));
  return compose(M, concat_iso(M, C, blocks.back()), rec);
}

}  // namespace dayconv::coherence
