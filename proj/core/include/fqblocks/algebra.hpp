// Finite-dimensional associative unital algebras via structure constants.
#pragma once

#include <memory>
#include <string>

#include "fqblocks/mat.hpp"

namespace fqb {

struct AlgebraError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Algebra {
 public:
  /// mult[i][j] is the product of basis elements i and j as a sparse vector.
  /// Associativity and unit laws are checked exhaustively on basis tuples.
  Algebra(FieldSpec field, std::vector<std::string> basis_labels,
          std::vector<std::vector<SparseVec>> mult, SparseVec unit,
          bool check = true);

  const FieldSpec& field() const { return field_; }
  std::uint32_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const SparseVec& mul_basis(std::uint32_t i, std::uint32_t j) const {
    return mult_[i][j];
  }
  const SparseVec& unit() const { return unit_; }

  SparseVec mul(const SparseVec& x, const SparseVec& y) const;
  /// Matrix of left multiplication by x.
  Mat left_mult(const SparseVec& x) const;
  Mat right_mult(const SparseVec& x) const;

  /// Small set of basis indices generating the algebra (with unit); greedy.
  const std::vector<std::uint32_t>& generating_set() const;

  /// Throws AlgebraError with the failing tuple on violation.
  void check_axioms() const;

 private:
  FieldSpec field_;
  std::uint32_t dim_;
  std::vector<std::string> labels_;
  std::vector<std::vector<SparseVec>> mult_;
  SparseVec unit_;
  mutable std::vector<std::uint32_t> gens_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

}  // namespace fqb
