// Exact arithmetic in F_q, q = p^k with k <= 4.
//
// Elements are stored as integer codes in [0, q): the code of a polynomial
// c_0 + c_1 x + ... + c_{k-1} x^{k-1} is sum c_i p^i. A Field object owns
// the arithmetic for one FieldSpec; multiplication tables are precomputed
// for small q.
#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace fqb {

using fq_t = std::uint32_t;

struct FieldError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Description of F_{p^k}: prime p, extension degree k, defining modulus.
/// modulus holds k+1 coefficients of a monic degree-k polynomial over F_p
/// (ascending powers). k = 1 forces modulus = x, i.e. {0, 1}.
struct FieldSpec {
  std::uint32_t p = 2;
  std::uint32_t k = 1;
  std::vector<std::uint32_t> modulus{0, 1};

  static FieldSpec prime(std::uint32_t p);
  /// Extension field with the built-in modulus table (k <= 4).
  static FieldSpec extension(std::uint32_t p, std::uint32_t k);

  std::uint64_t q() const;
  bool operator==(const FieldSpec& o) const {
    return p == o.p && k == o.k && modulus == o.modulus;
  }
  bool operator!=(const FieldSpec& o) const { return !(*this == o); }
  std::string str() const;

  /// Throws FieldError unless p is prime and modulus is monic of degree k
  /// and irreducible over F_p (trial root/factor search, valid for k <= 4).
  void validate() const;
};

class Field {
 public:
  explicit Field(FieldSpec spec);

  const FieldSpec& spec() const { return spec_; }
  std::uint64_t q() const { return q_; }
  fq_t zero() const { return 0; }
  fq_t one() const { return 1; }

  fq_t add(fq_t a, fq_t b) const;
  fq_t sub(fq_t a, fq_t b) const;
  fq_t neg(fq_t a) const;
  fq_t mul(fq_t a, fq_t b) const;
  fq_t inv(fq_t a) const;
  fq_t pow(fq_t a, std::uint64_t e) const;

  /// Embed an integer (class of n mod p) into the field.
  fq_t from_int(std::int64_t n) const;
  /// Coefficient vector (length k) of an element code.
  std::vector<std::uint32_t> coeffs(fq_t a) const;
  fq_t from_coeffs(const std::vector<std::uint32_t>& c) const;

 private:
  FieldSpec spec_;
  std::uint64_t q_;
  bool tabulated_;
  std::vector<fq_t> mul_table_;  // q*q when tabulated
  std::vector<fq_t> inv_table_;  // q when tabulated
  fq_t mul_slow(fq_t a, fq_t b) const;
};

/// Shared, cached Field instances keyed by spec.
const Field& field_of(const FieldSpec& spec);

}  // namespace fqb
