// Exact sparse/dense matrices over F_q with row-reduction services.
//
// Storage is compressed sparse column; only nonzero entries are stored.
// rank() splits the column set into connected components (columns sharing a
// row index) and eliminates each component independently, which keeps fill
// local; bar-complex differentials decompose into many small components.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "fqblocks/field.hpp"

namespace fqb {

struct MatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Sparse vector: strictly increasing indices, nonzero values.
struct SparseVec {
  std::vector<std::uint32_t> idx;
  std::vector<fq_t> val;

  std::size_t nnz() const { return idx.size(); }
  bool empty() const { return idx.empty(); }
  void push(std::uint32_t i, fq_t v) {
    idx.push_back(i);
    val.push_back(v);
  }
  bool operator==(const SparseVec& o) const = default;
};

/// out = a + c*b (indices merged); c nonzero.
SparseVec axpy(const Field& F, const SparseVec& a, fq_t c, const SparseVec& b);

class Mat {
 public:
  Mat() = default;
  Mat(FieldSpec field, std::uint32_t rows, std::uint32_t cols);

  static Mat identity(const FieldSpec& field, std::uint32_t n);
  static Mat zero(const FieldSpec& field, std::uint32_t rows, std::uint32_t cols);
  /// entries as (row, col, value); duplicate coordinates are summed.
  static Mat from_triplets(
      const FieldSpec& field, std::uint32_t rows, std::uint32_t cols,
      std::vector<std::tuple<std::uint32_t, std::uint32_t, fq_t>> entries);
  static Mat from_dense(const FieldSpec& field, std::uint32_t rows,
                        std::uint32_t cols, const std::vector<fq_t>& rowmajor);

  const FieldSpec& field() const { return field_; }
  std::uint32_t rows() const { return rows_; }
  std::uint32_t cols() const { return cols_; }
  std::uint64_t nnz() const { return rowidx_.size(); }
  double density() const;

  fq_t at(std::uint32_t r, std::uint32_t c) const;
  SparseVec col(std::uint32_t c) const;
  std::vector<fq_t> dense_rowmajor() const;

  Mat transpose() const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat scaled(fq_t c) const;
  bool operator==(const Mat& o) const;
  bool is_zero() const { return rowidx_.empty(); }

  /// y = M x for sparse x.
  SparseVec apply(const SparseVec& x) const;
  std::vector<fq_t> apply(const std::vector<fq_t>& x) const;

  /// Column-by-column construction; columns must be appended in order.
  class Builder {
   public:
    Builder(FieldSpec field, std::uint32_t rows, std::uint32_t cols);
    /// entries of one column, strictly increasing row indices, nonzero values.
    void append_col(const SparseVec& column);
    void append_col_unsorted(std::vector<std::pair<std::uint32_t, fq_t>> entries);
    Mat take();

   private:
    Mat m_;
    std::uint32_t next_col_ = 0;
    const Field* F_;
  };

 private:
  FieldSpec field_{};
  std::uint32_t rows_ = 0, cols_ = 0;
  std::vector<std::uint64_t> colptr_{0};  // size cols_+1
  std::vector<std::uint32_t> rowidx_;
  std::vector<fq_t> vals_;
  friend Mat compose(const Mat&, const Mat&);
  friend Mat kron(const Mat&, const Mat&);
  friend class MatColRange;
};

/// Matrix product a*b; requires a.cols == b.rows and equal field specs.
Mat compose(const Mat& a, const Mat& b);
/// Kronecker product; dimensions multiply.
Mat kron(const Mat& a, const Mat& b);
/// Stack vertically / horizontally.
Mat vstack(const Mat& a, const Mat& b);
Mat hstack(const Mat& a, const Mat& b);

struct RrefResult {
  Mat reduced;
  std::uint32_t rank = 0;
  std::vector<std::uint32_t> pivots;  // pivot column indices, increasing
};

/// Reduced row echelon form (canonical), deterministic pivoting: for each
/// column in order, the first remaining row with a nonzero entry pivots.
RrefResult rref(const Mat& m);

/// Rank only; component-split incremental elimination, transposing first
/// when that makes the pivot side smaller.
std::uint64_t rank(const Mat& m);

/// Basis of the right kernel, returned as the columns of a matrix.
Mat kernel_basis(const Mat& m);

/// Solve B x = v for x given a fixed matrix B with independent columns.
/// Construction row-reduces B once; coords() then costs one reduction.
class CoordSolver {
 public:
  explicit CoordSolver(const Mat& basis);
  /// Throws MatError if v is not in the column span.
  SparseVec coords(const SparseVec& v) const;
  std::vector<fq_t> coords_dense(const SparseVec& v) const;
  /// Express every column of m in the basis: returns x with basis*x = m.
  Mat coords_mat(const Mat& m) const;

 private:
  const Field* F_;
  std::uint32_t dim_;   // ambient rows
  std::uint32_t nb_;    // basis columns
  // reduced pivot columns keyed by lead row, with tracked combinations
  struct PivotEntry {
    SparseVec column;  // reduced, lead coefficient 1
    SparseVec combo;   // expression in original basis columns
  };
  std::vector<std::optional<std::uint32_t>> lead_of_row_;
  std::vector<PivotEntry> pivots_;
};

/// Quotient of F_q^dim by the column span of a matrix W. Quotient
/// coordinates are the ambient rows that carry no pivot of the echelonized
/// span, in increasing order.
class Quotient {
 public:
  Quotient(const FieldSpec& field, std::uint32_t ambient_dim, const Mat& span);

  std::uint32_t ambient_dim() const { return dim_; }
  std::uint32_t dim() const { return (std::uint32_t)free_rows_.size(); }
  /// Class of an ambient vector in quotient coordinates.
  SparseVec project(const SparseVec& v) const;
  /// Projection as a dim() x ambient_dim() matrix.
  Mat projection_mat() const;
  /// Representative of a quotient basis vector (an ambient unit vector).
  std::uint32_t representative_row(std::uint32_t qcoord) const {
    return free_rows_[qcoord];
  }
  /// Section as an ambient_dim() x dim() matrix (unit representatives).
  Mat section_mat() const;

 private:
  const Field* F_;
  FieldSpec field_;
  std::uint32_t dim_;
  std::vector<std::optional<std::uint32_t>> lead_of_row_;
  std::vector<SparseVec> pivots_;
  std::vector<std::uint32_t> free_rows_;
  std::vector<std::uint32_t> qcoord_of_row_;
};

/// Density threshold below which elimination switches to a dense kernel.
inline constexpr double kDenseFallbackDensity = 0.25;
inline constexpr std::uint64_t kDenseFallbackMaxCells = 1u << 22;

}  // namespace fqb
