#include "fqblocks/mat.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

namespace fqb {

SparseVec axpy(const Field& F, const SparseVec& a, fq_t c, const SparseVec& b) {
  SparseVec out;
  out.idx.reserve(a.nnz() + b.nnz());
  out.val.reserve(a.nnz() + b.nnz());
  std::size_t i = 0, j = 0;
  while (i < a.nnz() || j < b.nnz()) {
    if (j == b.nnz() || (i < a.nnz() && a.idx[i] < b.idx[j])) {
      out.push(a.idx[i], a.val[i]);
      ++i;
    } else if (i == a.nnz() || b.idx[j] < a.idx[i]) {
      fq_t v = F.mul(c, b.val[j]);
      if (v) out.push(b.idx[j], v);
      ++j;
    } else {
      fq_t v = F.add(a.val[i], F.mul(c, b.val[j]));
      if (v) out.push(a.idx[i], v);
      ++i;
      ++j;
    }
  }
  return out;
}

Mat::Mat(FieldSpec field, std::uint32_t rows, std::uint32_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols) {
  colptr_.assign(cols_ + 1, 0);
}

Mat Mat::identity(const FieldSpec& field, std::uint32_t n) {
  Mat m(field, n, n);
  m.colptr_.resize(n + 1);
  m.rowidx_.resize(n);
  m.vals_.resize(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    m.colptr_[i] = i;
    m.rowidx_[i] = i;
    m.vals_[i] = 1;
  }
  m.colptr_[n] = n;
  return m;
}

Mat Mat::zero(const FieldSpec& field, std::uint32_t rows, std::uint32_t cols) {
  return Mat(field, rows, cols);
}

Mat Mat::from_triplets(
    const FieldSpec& field, std::uint32_t rows, std::uint32_t cols,
    std::vector<std::tuple<std::uint32_t, std::uint32_t, fq_t>> entries) {
  const Field& F = field_of(field);
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    return std::tie(std::get<1>(a), std::get<0>(a)) <
           std::tie(std::get<1>(b), std::get<0>(b));
  });
  Mat m(field, rows, cols);
  m.colptr_.assign(cols + 1, 0);
  std::size_t i = 0;
  for (std::uint32_t c = 0; c < cols; ++c) {
    while (i < entries.size() && std::get<1>(entries[i]) == c) {
      std::uint32_t r = std::get<0>(entries[i]);
      fq_t acc = 0;
      while (i < entries.size() && std::get<1>(entries[i]) == c &&
             std::get<0>(entries[i]) == r) {
        acc = F.add(acc, std::get<2>(entries[i]));
        ++i;
      }
      if (r >= rows) throw MatError("row index out of range");
      if (acc) {
        m.rowidx_.push_back(r);
        m.vals_.push_back(acc);
      }
    }
    m.colptr_[c + 1] = m.rowidx_.size();
  }
  if (i != entries.size()) throw MatError("column index out of range");
  return m;
}

Mat Mat::from_dense(const FieldSpec& field, std::uint32_t rows,
                    std::uint32_t cols, const std::vector<fq_t>& rowmajor) {
  if (rowmajor.size() != (std::size_t)rows * cols)
    throw MatError("dense data has wrong size");
  std::vector<std::tuple<std::uint32_t, std::uint32_t, fq_t>> trip;
  for (std::uint32_t r = 0; r < rows; ++r)
    for (std::uint32_t c = 0; c < cols; ++c)
      if (rowmajor[(std::size_t)r * cols + c])
        trip.emplace_back(r, c, rowmajor[(std::size_t)r * cols + c]);
  return from_triplets(field, rows, cols, std::move(trip));
}

double Mat::density() const {
  std::uint64_t cells = (std::uint64_t)rows_ * cols_;
  return cells ? (double)nnz() / (double)cells : 0.0;
}

fq_t Mat::at(std::uint32_t r, std::uint32_t c) const {
  for (std::uint64_t i = colptr_[c]; i < colptr_[c + 1]; ++i)
    if (rowidx_[i] == r) return vals_[i];
  return 0;
}

SparseVec Mat::col(std::uint32_t c) const {
  SparseVec v;
  for (std::uint64_t i = colptr_[c]; i < colptr_[c + 1]; ++i)
    v.push(rowidx_[i], vals_[i]);
  return v;
}

std::vector<fq_t> Mat::dense_rowmajor() const {
  std::vector<fq_t> out((std::size_t)rows_ * cols_, 0);
  for (std::uint32_t c = 0; c < cols_; ++c)
    for (std::uint64_t i = colptr_[c]; i < colptr_[c + 1]; ++i)
      out[(std::size_t)rowidx_[i] * cols_ + c] = vals_[i];
  return out;
}

Mat Mat::transpose() const {
  Mat t(field_, cols_, rows_);
  std::vector<std::uint64_t> count(rows_ + 1, 0);
  for (auto r : rowidx_) ++count[r + 1];
  for (std::uint32_t r = 0; r < rows_; ++r) count[r + 1] += count[r];
  t.colptr_ = count;
  t.rowidx_.resize(nnz());
  t.vals_.resize(nnz());
  std::vector<std::uint64_t> next = count;
  for (std::uint32_t c = 0; c < cols_; ++c)
    for (std::uint64_t i = colptr_[c]; i < colptr_[c + 1]; ++i) {
      std::uint64_t pos = next[rowidx_[i]]++;
      t.rowidx_[pos] = c;
      t.vals_[pos] = vals_[i];
    }
  return t;
}

Mat Mat::operator+(const Mat& o) const {
  if (field_ != o.field_) throw MatError("field mismatch");
  if (rows_ != o.rows_ || cols_ != o.cols_) throw MatError("shape mismatch");
  const Field& F = field_of(field_);
  Builder b(field_, rows_, cols_);
  for (std::uint32_t c = 0; c < cols_; ++c)
    b.append_col(axpy(F, col(c), 1, o.col(c)));
  return b.take();
}

Mat Mat::operator-(const Mat& o) const {
  const Field& F = field_of(field_);
  return *this + o.scaled(F.neg(1));
}

Mat Mat::scaled(fq_t c) const {
  const Field& F = field_of(field_);
  Mat m = *this;
  if (c == 0) return zero(field_, rows_, cols_);
  for (auto& v : m.vals_) v = F.mul(v, c);
  return m;
}

bool Mat::operator==(const Mat& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ &&
         colptr_ == o.colptr_ && rowidx_ == o.rowidx_ && vals_ == o.vals_;
}

SparseVec Mat::apply(const SparseVec& x) const {
  const Field& F = field_of(field_);
  std::map<std::uint32_t, fq_t> acc;
  for (std::size_t t = 0; t < x.nnz(); ++t) {
    std::uint32_t c = x.idx[t];
    if (c >= cols_) throw MatError("vector index out of range");
    for (std::uint64_t i = colptr_[c]; i < colptr_[c + 1]; ++i) {
      fq_t& slot = acc[rowidx_[i]];
      slot = F.add(slot, F.mul(vals_[i], x.val[t]));
    }
  }
  SparseVec out;
  for (auto& [r, v] : acc)
    if (v) out.push(r, v);
  return out;
}

std::vector<fq_t> Mat::apply(const std::vector<fq_t>& x) const {
  if (x.size() != cols_) throw MatError("vector length mismatch");
  const Field& F = field_of(field_);
  std::vector<fq_t> out(rows_, 0);
  for (std::uint32_t c = 0; c < cols_; ++c) {
    if (!x[c]) continue;
    for (std::uint64_t i = colptr_[c]; i < colptr_[c + 1]; ++i)
      out[rowidx_[i]] = F.add(out[rowidx_[i]], F.mul(vals_[i], x[c]));
  }
  return out;
}

Mat::Builder::Builder(FieldSpec field, std::uint32_t rows, std::uint32_t cols)
    : m_(field, rows, cols), F_(&field_of(m_.field())) {
  m_.colptr_.assign(1, 0);
  m_.colptr_.reserve(cols + 1);
}

void Mat::Builder::append_col(const SparseVec& column) {
  if (next_col_ >= m_.cols_) throw MatError("too many columns");
  std::uint32_t last = 0;
  bool first = true;
  for (std::size_t i = 0; i < column.nnz(); ++i) {
    if (!first && column.idx[i] <= last) throw MatError("column not sorted");
    if (column.idx[i] >= m_.rows_) throw MatError("row index out of range");
    if (!column.val[i]) throw MatError("explicit zero entry");
    last = column.idx[i];
    first = false;
    m_.rowidx_.push_back(column.idx[i]);
    m_.vals_.push_back(column.val[i]);
  }
  m_.colptr_.push_back(m_.rowidx_.size());
  ++next_col_;
}

void Mat::Builder::append_col_unsorted(
    std::vector<std::pair<std::uint32_t, fq_t>> entries) {
  std::sort(entries.begin(), entries.end());
  SparseVec v;
  std::size_t i = 0;
  while (i < entries.size()) {
    std::uint32_t r = entries[i].first;
    fq_t acc = 0;
    while (i < entries.size() && entries[i].first == r) {
      acc = F_->add(acc, entries[i].second);
      ++i;
    }
    if (acc) v.push(r, acc);
  }
  append_col(v);
}

Mat Mat::Builder::take() {
  if (next_col_ != m_.cols_) throw MatError("builder incomplete");
  return std::move(m_);
}

Mat compose(const Mat& a, const Mat& b) {
  if (a.field_ != b.field_) throw MatError("field mismatch");
  if (a.cols_ != b.rows_) throw MatError("dimension mismatch in compose");
  const Field& F = field_of(a.field_);
  Mat::Builder out(a.field_, a.rows_, b.cols_);
  std::vector<fq_t> acc(a.rows_, 0);
  std::vector<std::uint32_t> touched;
  for (std::uint32_t c = 0; c < b.cols_; ++c) {
    touched.clear();
    for (std::uint64_t i = b.colptr_[c]; i < b.colptr_[c + 1]; ++i) {
      std::uint32_t k = b.rowidx_[i];
      fq_t bv = b.vals_[i];
      for (std::uint64_t j = a.colptr_[k]; j < a.colptr_[k + 1]; ++j) {
        std::uint32_t r = a.rowidx_[j];
        if (!acc[r]) touched.push_back(r);
        acc[r] = F.add(acc[r], F.mul(a.vals_[j], bv));
      }
    }
    std::sort(touched.begin(), touched.end());
    SparseVec v;
    for (auto r : touched) {
      if (acc[r]) v.push(r, acc[r]);
      acc[r] = 0;
    }
    out.append_col(v);
  }
  return out.take();
}

Mat kron(const Mat& a, const Mat& b) {
  if (a.field_ != b.field_) throw MatError("field mismatch");
  const Field& F = field_of(a.field_);
  std::uint64_t rows = (std::uint64_t)a.rows_ * b.rows_;
  std::uint64_t cols = (std::uint64_t)a.cols_ * b.cols_;
  if (rows > UINT32_MAX || cols > UINT32_MAX) throw MatError("kron too large");
  Mat::Builder out(a.field_, (std::uint32_t)rows, (std::uint32_t)cols);
  SparseVec v;
  for (std::uint32_t ca = 0; ca < a.cols_; ++ca)
    for (std::uint32_t cb = 0; cb < b.cols_; ++cb) {
      v.idx.clear();
      v.val.clear();
      for (std::uint64_t i = a.colptr_[ca]; i < a.colptr_[ca + 1]; ++i)
        for (std::uint64_t j = b.colptr_[cb]; j < b.colptr_[cb + 1]; ++j) {
          v.push(a.rowidx_[i] * b.rows_ + b.rowidx_[j],
                 F.mul(a.vals_[i], b.vals_[j]));
        }
      out.append_col(v);
    }
  return out.take();
}

Mat vstack(const Mat& a, const Mat& b) {
  if (a.field() != b.field()) throw MatError("field mismatch");
  if (a.cols() != b.cols()) throw MatError("column mismatch in vstack");
  Mat::Builder out(a.field(), a.rows() + b.rows(), a.cols());
  for (std::uint32_t c = 0; c < a.cols(); ++c) {
    SparseVec v = a.col(c);
    SparseVec w = b.col(c);
    for (std::size_t i = 0; i < w.nnz(); ++i) v.push(w.idx[i] + a.rows(), w.val[i]);
    out.append_col(v);
  }
  return out.take();
}

Mat hstack(const Mat& a, const Mat& b) {
  if (a.field() != b.field()) throw MatError("field mismatch");
  if (a.rows() != b.rows()) throw MatError("row mismatch in hstack");
  Mat::Builder out(a.field(), a.rows(), a.cols() + b.cols());
  for (std::uint32_t c = 0; c < a.cols(); ++c) out.append_col(a.col(c));
  for (std::uint32_t c = 0; c < b.cols(); ++c) out.append_col(b.col(c));
  return out.take();
}

namespace {

// dense row-echelon over F, returns rank; if kern != nullptr also emits
// kernel basis columns; if red != nullptr emits canonical rref rows+pivots.
std::uint32_t dense_eliminate(const Field& F, std::vector<fq_t>& m,
                              std::uint32_t rows, std::uint32_t cols,
                              std::vector<std::uint32_t>* pivots_out) {
  std::uint32_t r = 0;
  std::vector<std::uint32_t> pivots;
  for (std::uint32_t c = 0; c < cols && r < rows; ++c) {
    std::uint32_t piv = UINT32_MAX;
    for (std::uint32_t i = r; i < rows; ++i)
      if (m[(std::size_t)i * cols + c]) {
        piv = i;
        break;
      }
    if (piv == UINT32_MAX) continue;
    if (piv != r)
      for (std::uint32_t c2 = 0; c2 < cols; ++c2)
        std::swap(m[(std::size_t)piv * cols + c2], m[(std::size_t)r * cols + c2]);
    fq_t iv = F.inv(m[(std::size_t)r * cols + c]);
    for (std::uint32_t c2 = c; c2 < cols; ++c2)
      m[(std::size_t)r * cols + c2] = F.mul(m[(std::size_t)r * cols + c2], iv);
    for (std::uint32_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      fq_t f = m[(std::size_t)i * cols + c];
      if (!f) continue;
      fq_t nf = F.neg(f);
      for (std::uint32_t c2 = c; c2 < cols; ++c2)
        m[(std::size_t)i * cols + c2] =
            F.add(m[(std::size_t)i * cols + c2],
                  F.mul(nf, m[(std::size_t)r * cols + c2]));
    }
    pivots.push_back(c);
    ++r;
  }
  if (pivots_out) *pivots_out = std::move(pivots);
  return r;
}

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::uint32_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[b] = a;
  }
};

// incremental elimination of a stream of sparse columns; counts pivots.
class IncrementalRank {
 public:
  explicit IncrementalRank(const Field& F) : F_(F) {}
  void add(SparseVec v) {
    while (!v.empty()) {
      std::uint32_t lead = v.idx[0];
      auto it = lead_.find(lead);
      if (it == lead_.end()) {
        fq_t iv = F_.inv(v.val[0]);
        if (iv != 1)
          for (auto& x : v.val) x = F_.mul(x, iv);
        lead_.emplace(lead, pivots_.size());
        pivots_.push_back(std::move(v));
        return;
      }
      v = axpy(F_, v, F_.neg(v.val[0]), pivots_[it->second]);
    }
  }
  std::uint64_t rank() const { return pivots_.size(); }

 private:
  const Field& F_;
  std::map<std::uint32_t, std::size_t> lead_;
  std::vector<SparseVec> pivots_;
};

}  // namespace

RrefResult rref(const Mat& m) {
  const Field& F = field_of(m.field());
  // dense fallback for small, dense matrices
  std::uint64_t cells = (std::uint64_t)m.rows() * m.cols();
  if (cells && cells <= kDenseFallbackMaxCells &&
      m.density() >= kDenseFallbackDensity) {
    std::vector<fq_t> d = m.dense_rowmajor();
    RrefResult res;
    res.rank = dense_eliminate(F, d, m.rows(), m.cols(), &res.pivots);
    res.reduced = Mat::from_dense(m.field(), m.rows(), m.cols(), d);
    return res;
  }
  // sparse row-based reduced echelon: keep the working set fully reduced
  Mat t = m.transpose();  // rows of m = columns of t
  std::map<std::uint32_t, SparseVec> rowsByLead;
  for (std::uint32_t r = 0; r < m.rows(); ++r) {
    SparseVec row = t.col(r);
    while (!row.empty()) {
      auto it = rowsByLead.find(row.idx[0]);
      if (it == rowsByLead.end()) break;
      row = axpy(F, row, F.neg(row.val[0]), it->second);
    }
    if (row.empty()) continue;
    fq_t iv = F.inv(row.val[0]);
    if (iv != 1)
      for (auto& x : row.val) x = F.mul(x, iv);
    // fully reduce the tail against existing pivot rows
    for (std::size_t i = 1; i < row.nnz();) {
      auto it = rowsByLead.find(row.idx[i]);
      if (it == rowsByLead.end()) {
        ++i;
        continue;
      }
      row = axpy(F, row, F.neg(row.val[i]), it->second);
    }
    // back-reduce existing rows by the new one
    std::uint32_t lead = row.idx[0];
    for (auto& [l, other] : rowsByLead) {
      fq_t c = 0;
      // find coefficient of `lead` in other
      auto pos = std::lower_bound(other.idx.begin(), other.idx.end(), lead);
      if (pos != other.idx.end() && *pos == lead)
        c = other.val[pos - other.idx.begin()];
      if (c) other = axpy(F, other, F.neg(c), row);
    }
    rowsByLead.emplace(lead, std::move(row));
  }
  RrefResult res;
  res.rank = (std::uint32_t)rowsByLead.size();
  std::vector<std::tuple<std::uint32_t, std::uint32_t, fq_t>> trip;
  std::uint32_t r = 0;
  for (auto& [lead, row] : rowsByLead) {
    res.pivots.push_back(lead);
    for (std::size_t i = 0; i < row.nnz(); ++i)
      trip.emplace_back(r, row.idx[i], row.val[i]);
    ++r;
  }
  res.reduced = Mat::from_triplets(m.field(), m.rows(), m.cols(), std::move(trip));
  return res;
}

std::uint64_t rank(const Mat& m) {
  if (m.nnz() == 0) return 0;
  const Field& F = field_of(m.field());
  std::uint64_t cells = (std::uint64_t)m.rows() * m.cols();
  if (cells && cells <= kDenseFallbackMaxCells &&
      m.density() >= kDenseFallbackDensity) {
    std::vector<fq_t> d = m.dense_rowmajor();
    return dense_eliminate(F, d, m.rows(), m.cols(), nullptr);
  }
  // orient so that the pivot index space is the smaller side
  const Mat* work = &m;
  Mat tmp;
  if (m.rows() > m.cols()) {
    tmp = m.transpose();
    work = &tmp;
  }
  // union rows sharing a column, then eliminate per component
  UnionFind uf(work->rows());
  for (std::uint32_t c = 0; c < work->cols(); ++c) {
    SparseVec v = work->col(c);
    for (std::size_t i = 1; i < v.nnz(); ++i) uf.unite(v.idx[0], v.idx[i]);
  }
  // bucket columns by component root of their first row
  std::map<std::uint32_t, std::vector<std::uint32_t>> buckets;
  for (std::uint32_t c = 0; c < work->cols(); ++c) {
    SparseVec v = work->col(c);
    if (v.empty()) continue;
    buckets[uf.find(v.idx[0])].push_back(c);
  }
  std::uint64_t total = 0;
  for (auto& [root, colset] : buckets) {
    (void)root;
    IncrementalRank inc(F);
    for (auto c : colset) inc.add(work->col(c));
    total += inc.rank();
  }
  return total;
}

Mat kernel_basis(const Mat& m) {
  const Field& F = field_of(m.field());
  // column elimination with recorded combinations
  struct Piv {
    SparseVec col;
    SparseVec combo;
  };
  std::map<std::uint32_t, Piv> pivots;
  std::vector<SparseVec> kernel;
  for (std::uint32_t c = 0; c < m.cols(); ++c) {
    SparseVec v = m.col(c);
    SparseVec combo;
    combo.push(c, 1);
    while (!v.empty()) {
      auto it = pivots.find(v.idx[0]);
      if (it == pivots.end()) break;
      fq_t f = F.neg(v.val[0]);
      v = axpy(F, v, f, it->second.col);
      combo = axpy(F, combo, f, it->second.combo);
    }
    if (v.empty()) {
      kernel.push_back(std::move(combo));
    } else {
      fq_t iv = F.inv(v.val[0]);
      if (iv != 1) {
        for (auto& x : v.val) x = F.mul(x, iv);
        for (auto& x : combo.val) x = F.mul(x, iv);
      }
      pivots.emplace(v.idx[0], Piv{std::move(v), std::move(combo)});
    }
  }
  Mat::Builder out(m.field(), m.cols(), (std::uint32_t)kernel.size());
  for (auto& k : kernel) out.append_col(k);
  return out.take();
}

CoordSolver::CoordSolver(const Mat& basis)
    : F_(&field_of(basis.field())), dim_(basis.rows()), nb_(basis.cols()) {
  lead_of_row_.assign(dim_, std::nullopt);
  for (std::uint32_t c = 0; c < nb_; ++c) {
    SparseVec v = basis.col(c);
    SparseVec combo;
    combo.push(c, 1);
    while (!v.empty()) {
      auto& slot = lead_of_row_[v.idx[0]];
      if (!slot) break;
      fq_t f = F_->neg(v.val[0]);
      v = axpy(*F_, v, f, pivots_[*slot].column);
      combo = axpy(*F_, combo, f, pivots_[*slot].combo);
    }
    if (v.empty()) throw MatError("basis columns are dependent");
    fq_t iv = F_->inv(v.val[0]);
    if (iv != 1) {
      for (auto& x : v.val) x = F_->mul(x, iv);
      for (auto& x : combo.val) x = F_->mul(x, iv);
    }
    lead_of_row_[v.idx[0]] = (std::uint32_t)pivots_.size();
    pivots_.push_back(PivotEntry{std::move(v), std::move(combo)});
  }
}

SparseVec CoordSolver::coords(const SparseVec& v) const {
  SparseVec w = v;
  SparseVec combo;
  while (!w.empty()) {
    if (w.idx[0] >= dim_) throw MatError("vector index out of range");
    auto& slot = lead_of_row_[w.idx[0]];
    if (!slot) throw MatError("vector not in basis span");
    fq_t c = w.val[0];
    w = axpy(*F_, w, F_->neg(c), pivots_[*slot].column);
    combo = axpy(*F_, combo, c, pivots_[*slot].combo);
  }
  return combo;
}

std::vector<fq_t> CoordSolver::coords_dense(const SparseVec& v) const {
  SparseVec c = coords(v);
  std::vector<fq_t> out(nb_, 0);
  for (std::size_t i = 0; i < c.nnz(); ++i) out[c.idx[i]] = c.val[i];
  return out;
}

Mat CoordSolver::coords_mat(const Mat& m) const {
  if (m.rows() != dim_) throw MatError("row mismatch");
  Mat::Builder out(m.field(), nb_, m.cols());
  for (std::uint32_t c = 0; c < m.cols(); ++c) out.append_col(coords(m.col(c)));
  return out.take();
}

Quotient::Quotient(const FieldSpec& field, std::uint32_t ambient_dim,
                   const Mat& span)
    : F_(&field_of(field)), field_(field), dim_(ambient_dim) {
  if (span.cols() && span.rows() != ambient_dim)
    throw MatError("span ambient dimension mismatch");
  lead_of_row_.assign(dim_, std::nullopt);
  for (std::uint32_t c = 0; c < span.cols(); ++c) {
    SparseVec v = span.col(c);
    while (!v.empty()) {
      auto& slot = lead_of_row_[v.idx[0]];
      if (!slot) break;
      v = axpy(*F_, v, F_->neg(v.val[0]), pivots_[*slot]);
    }
    if (v.empty()) continue;
    fq_t iv = F_->inv(v.val[0]);
    if (iv != 1)
      for (auto& x : v.val) x = F_->mul(x, iv);
    lead_of_row_[v.idx[0]] = (std::uint32_t)pivots_.size();
    pivots_.push_back(std::move(v));
  }
  qcoord_of_row_.assign(dim_, UINT32_MAX);
  for (std::uint32_t r = 0; r < dim_; ++r)
    if (!lead_of_row_[r]) {
      qcoord_of_row_[r] = (std::uint32_t)free_rows_.size();
      free_rows_.push_back(r);
    }
}

SparseVec Quotient::project(const SparseVec& v) const {
  SparseVec w = v;
  while (!w.empty()) {
    if (w.idx[0] >= dim_) throw MatError("vector index out of range");
    auto& slot = lead_of_row_[w.idx[0]];
    if (!slot) break;
    w = axpy(*F_, w, F_->neg(w.val[0]), pivots_[*slot]);
  }
  // after killing the first lead repeatedly the remaining support may still
  // touch pivot rows further down; reduce those too
  for (std::size_t i = 0; i < w.nnz();) {
    auto& slot = lead_of_row_[w.idx[i]];
    if (!slot) {
      ++i;
      continue;
    }
    w = axpy(*F_, w, F_->neg(w.val[i]), pivots_[*slot]);
  }
  SparseVec out;
  for (std::size_t i = 0; i < w.nnz(); ++i)
    out.push(qcoord_of_row_[w.idx[i]], w.val[i]);
  return out;
}

Mat Quotient::projection_mat() const {
  Mat::Builder b(field_, dim(), dim_);
  for (std::uint32_t r = 0; r < dim_; ++r) {
    SparseVec e;
    e.push(r, 1);
    b.append_col(project(e));
  }
  return b.take();
}

Mat Quotient::section_mat() const {
  Mat::Builder b(field_, dim_, dim());
  for (std::uint32_t qc = 0; qc < dim(); ++qc) {
    SparseVec e;
    e.push(free_rows_[qc], 1);
    b.append_col(e);
  }
  return b.take();
}

}  // namespace fqb
