#include "fqblocks/chain.hpp"

#include <sstream>

namespace fqb {

std::string BettiTable::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (i) os << ",";
    os << degrees[i];
  }
  os << ")";
  return os.str();
}

ChainComplex::ChainComplex(FieldSpec field, std::vector<std::uint64_t> dims,
                           std::vector<Mat> d, int N)
    : field_(std::move(field)), N_(N), dims_(std::move(dims)), d_(std::move(d)) {
  if (N_ < 0) throw ChainError("truncation must be nonnegative");
  if (dims_.size() != (std::size_t)N_ + 2)
    throw ChainError("dims must cover degrees 0..N+1");
  if (d_.size() != (std::size_t)N_ + 2)
    throw ChainError("differentials must cover degrees 1..N+1");
  for (int n = 1; n <= N_ + 1; ++n) {
    const Mat& dn = d_[n];
    if (dn.field() != field_) throw ChainError("field mismatch in differential");
    if (dn.rows() != dims_[n - 1] || dn.cols() != dims_[n])
      throw ChainError("differential shape mismatch at degree " +
                       std::to_string(n));
  }
  // d*d = 0, checked streaming column by column
  for (int n = 1; n <= N_; ++n) {
    const Mat& hi = d_[n + 1];
    const Mat& lo = d_[n];
    for (std::uint32_t c = 0; c < hi.cols(); ++c) {
      if (!lo.apply(hi.col(c)).empty())
        throw ChainError("d o d != 0 at degree " + std::to_string(n + 1));
    }
  }
}

std::uint64_t ChainComplex::dim(int n) const {
  if (n < 0 || n > N_ + 1) return 0;
  return dims_[n];
}

const Mat& ChainComplex::diff(int n) const {
  if (n < 1 || n > N_ + 1) throw ChainError("differential degree out of range");
  return d_[n];
}

BettiTable ChainComplex::homology_dims() const {
  BettiTable out;
  out.truncation = N_;
  std::vector<std::uint64_t> ranks(N_ + 2, 0);
  for (int n = 1; n <= N_ + 1; ++n) ranks[n] = rank(d_[n]);
  for (int n = 0; n <= N_; ++n) {
    std::int64_t kern = (std::int64_t)dims_[n] - (std::int64_t)ranks[n];
    std::int64_t h = kern - (std::int64_t)ranks[n + 1];
    if (h < 0) throw ChainError("negative Betti number (invalid complex)");
    out.degrees.push_back(h);
  }
  return out;
}

ChainComplex ChainComplex::zero(const FieldSpec& field, int N) {
  std::vector<std::uint64_t> dims(N + 2, 0);
  std::vector<Mat> d(N + 2, Mat::zero(field, 0, 0));
  return ChainComplex(field, std::move(dims), std::move(d), N);
}

ChainMap::ChainMap(std::shared_ptr<const ChainComplex> source,
                   std::shared_ptr<const ChainComplex> target,
                   std::vector<Mat> components)
    : src_(std::move(source)), tgt_(std::move(target)), comp_(std::move(components)) {
  if (src_->truncation() != tgt_->truncation())
    throw ChainError("chain map endpoints have different truncations");
  int N = src_->truncation();
  if (comp_.size() != (std::size_t)N + 2)
    throw ChainError("chain map must have components in degrees 0..N+1");
  for (int n = 0; n <= N + 1; ++n) {
    if (comp_[n].rows() != tgt_->dim(n) || comp_[n].cols() != src_->dim(n))
      throw ChainError("chain map component shape mismatch at degree " +
                       std::to_string(n));
  }
  for (int n = 1; n <= N + 1; ++n) {
    // f_{n-1} d_n = d'_n f_n
    Mat lhs = compose(comp_[n - 1], src_->diff(n));
    Mat rhs = compose(tgt_->diff(n), comp_[n]);
    if (!(lhs == rhs))
      throw ChainError("chain map does not commute with differentials at " +
                       std::to_string(n));
  }
}

const Mat& ChainMap::component(int n) const {
  if (n < 0 || n > truncation() + 1) throw ChainError("component out of range");
  return comp_[n];
}

int ChainMap::truncation() const { return src_->truncation(); }

ChainComplex mapping_cone(const ChainMap& f, int N) {
  if (N > f.truncation()) throw ChainError("cone truncation too deep");
  const ChainComplex& C = f.source();
  const ChainComplex& D = f.target();
  const FieldSpec& field = C.field();
  const Field& F = field_of(field);
  std::vector<std::uint64_t> dims(N + 2);
  std::vector<Mat> d(N + 2, Mat::zero(field, 0, 0));
  for (int n = 0; n <= N + 1; ++n) dims[n] = D.dim(n) + C.dim(n - 1);
  for (int n = 1; n <= N + 1; ++n) {
    // block matrix [[d_D, f], [0, -d_C]] : D_n + C_{n-1} -> D_{n-1} + C_{n-2}
    Mat::Builder b(field, (std::uint32_t)dims[n - 1], (std::uint32_t)dims[n]);
    const Mat& dD = D.diff(n);
    for (std::uint32_t c = 0; c < D.dim(n); ++c) b.append_col(dD.col(c));
    std::uint32_t off_r = (std::uint32_t)D.dim(n - 1);
    const Mat& fn = f.component(n - 1);
    for (std::uint32_t c = 0; c < C.dim(n - 1); ++c) {
      SparseVec v = fn.col(c);
      if (n - 1 >= 1) {
        const Mat& dC = C.diff(n - 1);
        SparseVec w = dC.col(c);
        for (std::size_t i = 0; i < w.nnz(); ++i)
          v.push(off_r + w.idx[i], F.neg(w.val[i]));
      }
      b.append_col(v);
    }
    d[n] = b.take();
  }
  return ChainComplex(field, std::move(dims), std::move(d), N);
}

bool QuasiIsoReport::quasi_iso_through(int n) const {
  for (int i = 0; i <= n && i < (int)degrees.size(); ++i)
    if (!degrees[i].iso()) return false;
  return n < (int)degrees.size();
}

QuasiIsoReport is_quasi_iso(const ChainMap& f, int N) {
  if (N > f.truncation())
    throw ChainError("quasi-iso verdict at degree N needs data through N+1");
  BettiTable a = f.source().homology_dims();
  BettiTable b = f.target().homology_dims();
  BettiTable c = mapping_cone(f, N).homology_dims();
  // long exact sequence: c_n = (b_n - r_n) + (a_{n-1} - r_{n-1})
  QuasiIsoReport rep;
  std::int64_t r_prev = 0, a_prev = 0;
  for (int n = 0; n <= N; ++n) {
    QuasiIsoDegree deg;
    deg.source_h = a.degrees[n];
    deg.target_h = b.degrees[n];
    deg.induced_rank = b.degrees[n] + a_prev - r_prev - c.degrees[n];
    if (deg.induced_rank < 0 || deg.induced_rank > std::min(deg.source_h, deg.target_h))
      throw ChainError("inconsistent cone homology (internal error)");
    deg.injective = deg.induced_rank == deg.source_h;
    deg.surjective = deg.induced_rank == deg.target_h;
    rep.degrees.push_back(deg);
    r_prev = deg.induced_rank;
    a_prev = deg.source_h;
  }
  return rep;
}

}  // namespace fqb
