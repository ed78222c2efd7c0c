#include "fqblocks/algebra.hpp"

#include <map>

namespace fqb {

Algebra::Algebra(FieldSpec field, std::vector<std::string> basis_labels,
                 std::vector<std::vector<SparseVec>> mult, SparseVec unit,
                 bool check)
    : field_(std::move(field)),
      dim_((std::uint32_t)basis_labels.size()),
      labels_(std::move(basis_labels)),
      mult_(std::move(mult)),
      unit_(std::move(unit)) {
  if (mult_.size() != dim_) throw AlgebraError("mult table has wrong size");
  for (auto& row : mult_)
    if (row.size() != dim_) throw AlgebraError("mult table has wrong size");
  if (check) check_axioms();
}

SparseVec Algebra::mul(const SparseVec& x, const SparseVec& y) const {
  const Field& F = field_of(field_);
  std::map<std::uint32_t, fq_t> acc;
  for (std::size_t i = 0; i < x.nnz(); ++i)
    for (std::size_t j = 0; j < y.nnz(); ++j) {
      fq_t c = F.mul(x.val[i], y.val[j]);
      const SparseVec& prod = mult_[x.idx[i]][y.idx[j]];
      for (std::size_t t = 0; t < prod.nnz(); ++t) {
        fq_t& slot = acc[prod.idx[t]];
        slot = F.add(slot, F.mul(c, prod.val[t]));
      }
    }
  SparseVec out;
  for (auto& [k, v] : acc)
    if (v) out.push(k, v);
  return out;
}

Mat Algebra::left_mult(const SparseVec& x) const {
  const Field& F = field_of(field_);
  Mat::Builder b(field_, dim_, dim_);
  for (std::uint32_t j = 0; j < dim_; ++j) {
    std::vector<std::pair<std::uint32_t, fq_t>> col;
    for (std::size_t i = 0; i < x.nnz(); ++i) {
      const SparseVec& prod = mult_[x.idx[i]][j];
      for (std::size_t t = 0; t < prod.nnz(); ++t)
        col.emplace_back(prod.idx[t], F.mul(x.val[i], prod.val[t]));
    }
    b.append_col_unsorted(std::move(col));
  }
  return b.take();
}

Mat Algebra::right_mult(const SparseVec& x) const {
  const Field& F = field_of(field_);
  Mat::Builder b(field_, dim_, dim_);
  for (std::uint32_t j = 0; j < dim_; ++j) {
    std::vector<std::pair<std::uint32_t, fq_t>> col;
    for (std::size_t i = 0; i < x.nnz(); ++i) {
      const SparseVec& prod = mult_[j][x.idx[i]];
      for (std::size_t t = 0; t < prod.nnz(); ++t)
        col.emplace_back(prod.idx[t], F.mul(x.val[i], prod.val[t]));
    }
    b.append_col_unsorted(std::move(col));
  }
  return b.take();
}

void Algebra::check_axioms() const {
  const Field& F = field_of(field_);
  // unit
  for (std::uint32_t i = 0; i < dim_; ++i) {
    SparseVec e;
    e.push(i, 1);
    if (!(mul(unit_, e) == e) || !(mul(e, unit_) == e))
      throw AlgebraError("unit law fails at basis " + std::to_string(i));
  }
  // associativity on basis triples
  for (std::uint32_t i = 0; i < dim_; ++i)
    for (std::uint32_t j = 0; j < dim_; ++j) {
      const SparseVec& ij = mult_[i][j];
      for (std::uint32_t k = 0; k < dim_; ++k) {
        SparseVec ek;
        ek.push(k, 1);
        SparseVec lhs = mul(ij, ek);
        SparseVec ei;
        ei.push(i, 1);
        SparseVec rhs = mul(ei, mult_[j][k]);
        if (!(lhs == rhs))
          throw AlgebraError("associativity fails at (" + std::to_string(i) +
                             "," + std::to_string(j) + "," + std::to_string(k) +
                             ")");
      }
    }
  (void)F;
}

namespace {

// echelonized span with membership test and closure under products
class SpanTracker {
 public:
  SpanTracker(const FieldSpec& field, std::uint32_t dim)
      : F_(&field_of(field)), lead_(dim) {}
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }
  // returns true if v was new
  bool insert(SparseVec v) {
    v = reduce(v);
    if (v.empty()) return false;
    fq_t iv = F_->inv(v.val[0]);
    if (iv != 1)
      for (auto& x : v.val) x = F_->mul(x, iv);
    lead_[v.idx[0]] = (std::uint32_t)vecs_.size();
    vecs_.push_back(std::move(v));
    return true;
  }
  const std::vector<SparseVec>& vectors() const { return vecs_; }
  std::size_t dim() const { return vecs_.size(); }

 private:
  SparseVec reduce(SparseVec v) const {
    while (!v.empty()) {
      auto slot = lead_[v.idx[0]];
      if (!slot) break;
      v = axpy(*F_, v, F_->neg(v.val[0]), vecs_[*slot]);
    }
    return v;
  }
  const Field* F_;
  std::vector<std::optional<std::uint32_t>> lead_;
  std::vector<SparseVec> vecs_;
};

}  // namespace

const std::vector<std::uint32_t>& Algebra::generating_set() const {
  if (!gens_.empty() || dim_ == 0) return gens_;
  std::vector<std::uint32_t> gens;
  SpanTracker span(field_, dim_);
  span.insert(unit_);
  auto close_under = [&](const std::vector<std::uint32_t>& gs) {
    bool grew = true;
    while (grew && span.dim() < dim_) {
      grew = false;
      std::vector<SparseVec> snapshot = span.vectors();
      for (const auto& v : snapshot)
        for (auto g : gs) {
          SparseVec eg;
          eg.push(g, 1);
          if (span.insert(mul(v, eg))) grew = true;
          if (span.insert(mul(eg, v))) grew = true;
        }
    }
  };
  for (std::uint32_t i = 0; i < dim_ && span.dim() < dim_; ++i) {
    SparseVec ei;
    ei.push(i, 1);
    if (span.contains(ei)) continue;
    gens.push_back(i);
    span.insert(ei);
    close_under(gens);
  }
  if (span.dim() != dim_)
    throw AlgebraError("failed to find a generating set");
  gens_ = std::move(gens);
  return gens_;
}

}  // namespace fqb
