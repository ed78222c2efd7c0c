// (Multi)simplicial vector spaces and normalized chains.
//
// Face and degeneracy matrices are produced by callbacks and cached, so a
// large level is only materialized when actually consumed. normalize()
// quotients by degenerate simplices (or returns the unnormalized Moore
// complex when no degeneracies are given).
#pragma once

#include <functional>
#include <optional>

#include "fqblocks/chain.hpp"

namespace fqb {

class SimplicialVS {
 public:
  using FaceFn = std::function<Mat(int n, int i)>;        // level n -> n-1
  using DegenFn = std::function<Mat(int n, int i)>;       // level n -> n+1

  /// levels holds dims for 0..N+1. faces(n,i) defined for 1<=n<=N+1,
  /// 0<=i<=n. degeneracies(n,i) for 0<=n<=N, 0<=i<=n (optional:
  /// semisimplicial objects are allowed).
  SimplicialVS(FieldSpec field, std::vector<std::uint64_t> levels, FaceFn faces,
               std::optional<DegenFn> degeneracies, int N);

  const FieldSpec& field() const { return field_; }
  int truncation() const { return N_; }
  std::uint64_t level_dim(int n) const;
  bool has_degeneracies() const { return (bool)degen_; }

  const Mat& face(int n, int i) const;
  const Mat& degeneracy(int n, int i) const;

  /// Checks d_i d_j = d_{j-1} d_i (i<j) and the degeneracy identities on all
  /// stored levels; throws ChainError with the failing triple on violation.
  void verify_identities() const;

  /// Alternating-sum differential on the levels themselves (Moore complex).
  ChainComplex unnormalized_complex() const;

  /// Quotient by degenerate simplices; unnormalized when no degeneracies.
  ChainComplex normalize() const;

 private:
  FieldSpec field_;
  int N_;
  std::vector<std::uint64_t> levels_;
  FaceFn faces_;
  std::optional<DegenFn> degen_;
  mutable std::map<std::pair<int, int>, Mat> face_cache_;
  mutable std::map<std::pair<int, int>, Mat> degen_cache_;
};

/// Total complex of a g-fold multicomplex given by per-variable level dims
/// and per-variable differentials with Koszul signs. Used by iterated bar
/// constructions; the component complexes are produced lazily per
/// multidegree.
struct MultiDegree {
  std::vector<int> deg;
  int total() const;
};

}  // namespace fqb
