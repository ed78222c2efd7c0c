#include "fqblocks/simplicial.hpp"

#include <numeric>

namespace fqb {

int MultiDegree::total() const {
  return std::accumulate(deg.begin(), deg.end(), 0);
}

SimplicialVS::SimplicialVS(FieldSpec field, std::vector<std::uint64_t> levels,
                           FaceFn faces, std::optional<DegenFn> degeneracies,
                           int N)
    : field_(std::move(field)),
      N_(N),
      levels_(std::move(levels)),
      faces_(std::move(faces)),
      degen_(std::move(degeneracies)) {
  if (levels_.size() != (std::size_t)N_ + 2)
    throw ChainError("levels must cover 0..N+1");
}

std::uint64_t SimplicialVS::level_dim(int n) const {
  if (n < 0 || n > N_ + 1) return 0;
  return levels_[n];
}

const Mat& SimplicialVS::face(int n, int i) const {
  if (n < 1 || n > N_ + 1 || i < 0 || i > n)
    throw ChainError("face index out of range");
  auto key = std::make_pair(n, i);
  auto it = face_cache_.find(key);
  if (it == face_cache_.end()) {
    Mat m = faces_(n, i);
    if (m.rows() != levels_[n - 1] || m.cols() != levels_[n])
      throw ChainError("face matrix has wrong shape");
    it = face_cache_.emplace(key, std::move(m)).first;
  }
  return it->second;
}

const Mat& SimplicialVS::degeneracy(int n, int i) const {
  if (!degen_) throw ChainError("semisimplicial object has no degeneracies");
  if (n < 0 || n > N_ || i < 0 || i > n)
    throw ChainError("degeneracy index out of range");
  auto key = std::make_pair(n, i);
  auto it = degen_cache_.find(key);
  if (it == degen_cache_.end()) {
    Mat m = (*degen_)(n, i);
    if (m.rows() != levels_[n + 1] || m.cols() != levels_[n])
      throw ChainError("degeneracy matrix has wrong shape");
    it = degen_cache_.emplace(key, std::move(m)).first;
  }
  return it->second;
}

void SimplicialVS::verify_identities() const {
  for (int n = 2; n <= N_ + 1; ++n)
    for (int j = 1; j <= n; ++j)
      for (int i = 0; i < j; ++i) {
        // d_i d_j = d_{j-1} d_i on level n
        Mat lhs = compose(face(n - 1, i), face(n, j));
        Mat rhs = compose(face(n - 1, j - 1), face(n, i));
        if (!(lhs == rhs))
          throw ChainError("simplicial identity d_i d_j failed at (n=" +
                           std::to_string(n) + ",i=" + std::to_string(i) +
                           ",j=" + std::to_string(j) + ")");
      }
  if (!degen_) return;
  for (int n = 0; n < N_; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= j; ++i) {
        Mat lhs = compose(degeneracy(n + 1, i), degeneracy(n, j));
        Mat rhs = compose(degeneracy(n + 1, j + 1), degeneracy(n, i));
        if (!(lhs == rhs))
          throw ChainError("degeneracy identity s_i s_j failed");
      }
  for (int n = 1; n <= N_; ++n)
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n - 1; ++j) {
        // d_i s_j relations
        Mat lhs = compose(face(n + 1, i), degeneracy(n, j));
        Mat want = Mat::zero(field_, 0, 0);
        if (i < j)
          want = compose(degeneracy(n - 1, j - 1), face(n, i));
        else if (i == j || i == j + 1)
          want = Mat::identity(field_, (std::uint32_t)levels_[n]);
        else
          want = compose(degeneracy(n - 1, j), face(n, i - 1));
        if (!(lhs == want)) throw ChainError("mixed identity d_i s_j failed");
      }
}

namespace {

Mat alternating_sum(const SimplicialVS& s, int n) {
  const Field& F = field_of(s.field());
  Mat acc = s.face(n, 0);
  for (int i = 1; i <= n; ++i) {
    fq_t sign = (i % 2 == 0) ? F.one() : F.neg(F.one());
    acc = acc + s.face(n, i).scaled(sign);
  }
  return acc;
}

}  // namespace

ChainComplex SimplicialVS::unnormalized_complex() const {
  std::vector<std::uint64_t> dims(levels_);
  std::vector<Mat> d(N_ + 2, Mat::zero(field_, 0, 0));
  for (int n = 1; n <= N_ + 1; ++n) d[n] = alternating_sum(*this, n);
  return ChainComplex(field_, std::move(dims), std::move(d), N_);
}

ChainComplex SimplicialVS::normalize() const {
  if (!degen_) return unnormalized_complex();
  // degenerate subspace per level, then induced differential on quotients
  std::vector<Quotient> quot;
  quot.reserve(N_ + 2);
  for (int n = 0; n <= N_ + 1; ++n) {
    if (n == 0 || levels_[n] == 0) {
      quot.emplace_back(field_, (std::uint32_t)levels_[n],
                        Mat::zero(field_, (std::uint32_t)levels_[n], 0));
      continue;
    }
    Mat span = degeneracy(n - 1, 0);
    for (int i = 1; i <= n - 1; ++i) span = hstack(span, degeneracy(n - 1, i));
    quot.emplace_back(field_, (std::uint32_t)levels_[n], span);
  }
  std::vector<std::uint64_t> dims(N_ + 2);
  for (int n = 0; n <= N_ + 1; ++n) dims[n] = quot[n].dim();
  std::vector<Mat> d(N_ + 2, Mat::zero(field_, 0, 0));
  for (int n = 1; n <= N_ + 1; ++n) {
    Mat full = alternating_sum(*this, n);
    Mat sec = quot[n].section_mat();
    Mat proj = quot[n - 1].projection_mat();
    d[n] = compose(proj, compose(full, sec));
  }
  return ChainComplex(field_, std::move(dims), std::move(d), N_);
}

}  // namespace fqb
