// Chain complexes over F_q, truncated at a declared degree.
//
// A complex carries dims and differentials through degree N+1 so that
// homology is valid through degree N. d[n] maps degree n to degree n-1.
#pragma once

#include <map>
#include <memory>
#include <string>

#include "fqblocks/mat.hpp"

namespace fqb {

struct ChainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// degree -> homology dimension, with provenance metadata.
struct BettiTable {
  std::vector<std::int64_t> degrees;  // entries 0..truncation
  int truncation = -1;
  std::map<std::string, std::string> provenance;

  bool same_values(const BettiTable& o) const {
    return degrees == o.degrees && truncation == o.truncation;
  }
  std::string str() const;
};

class ChainComplex {
 public:
  /// dims has N+2 entries (degrees 0..N+1); d has N+2 entries with d[0]
  /// unused and d[n] of shape dims[n-1] x dims[n]. Checks d[n]*d[n+1] = 0.
  ChainComplex(FieldSpec field, std::vector<std::uint64_t> dims,
               std::vector<Mat> d, int N);

  const FieldSpec& field() const { return field_; }
  int truncation() const { return N_; }
  std::uint64_t dim(int n) const;
  const Mat& diff(int n) const;  // n in 1..N+1

  /// Betti numbers in degrees 0..N.
  BettiTable homology_dims() const;

  /// Degreewise direct sum identification helpers.
  static ChainComplex zero(const FieldSpec& field, int N);

 private:
  FieldSpec field_;
  int N_;
  std::vector<std::uint64_t> dims_;
  std::vector<Mat> d_;
};

/// Chain map between complexes truncated at the same N; components in
/// degrees 0..N+1 commute with the differentials.
class ChainMap {
 public:
  ChainMap(std::shared_ptr<const ChainComplex> source,
           std::shared_ptr<const ChainComplex> target,
           std::vector<Mat> components);

  const ChainComplex& source() const { return *src_; }
  const ChainComplex& target() const { return *tgt_; }
  const Mat& component(int n) const;
  int truncation() const;

 private:
  std::shared_ptr<const ChainComplex> src_, tgt_;
  std::vector<Mat> comp_;
};

struct QuasiIsoDegree {
  std::int64_t source_h = 0;
  std::int64_t target_h = 0;
  std::int64_t induced_rank = 0;
  bool injective = false;
  bool surjective = false;
  bool iso() const { return injective && surjective; }
};

struct QuasiIsoReport {
  std::vector<QuasiIsoDegree> degrees;  // 0..N
  bool quasi_iso_through(int n) const;
  bool quasi_iso() const { return quasi_iso_through((int)degrees.size() - 1); }
};

/// Induced maps on homology in degrees 0..N with verdicts, computed from
/// the Betti tables of source, target and mapping cone (long exact sequence).
QuasiIsoReport is_quasi_iso(const ChainMap& f, int N);

/// The mapping cone of f, truncated at N (valid for homology through N).
ChainComplex mapping_cone(const ChainMap& f, int N);

}  // namespace fqb
