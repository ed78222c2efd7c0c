#include "fqblocks/field.hpp"

#include <map>
#include <mutex>

namespace fqb {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// polynomial helpers over F_p, coefficient vectors ascending, not necessarily monic
std::vector<std::uint32_t> poly_mod(std::vector<std::uint32_t> a,
                                    const std::vector<std::uint32_t>& m,
                                    std::uint32_t p) {
  // m monic of degree k
  const std::size_t k = m.size() - 1;
  while (a.size() > k) {
    std::uint32_t lead = a.back() % p;
    std::size_t shift = a.size() - 1 - k;
    if (lead) {
      for (std::size_t i = 0; i <= k; ++i) {
        std::uint64_t sub = (std::uint64_t)lead * m[i] % p;
        a[shift + i] = (a[shift + i] + p - (std::uint32_t)sub) % p;
      }
    }
    a.pop_back();
  }
  a.resize(k, 0);
  return a;
}

std::vector<std::uint32_t> poly_mulmod(const std::vector<std::uint32_t>& a,
                                       const std::vector<std::uint32_t>& b,
                                       const std::vector<std::uint32_t>& m,
                                       std::uint32_t p) {
  std::vector<std::uint32_t> prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      prod[i + j] = (std::uint32_t)((prod[i + j] + (std::uint64_t)a[i] * b[j]) % p);
  }
  return poly_mod(std::move(prod), m, p);
}

std::uint32_t poly_eval(const std::vector<std::uint32_t>& f, std::uint32_t x,
                        std::uint32_t p) {
  std::uint64_t acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = (acc * x + f[i]) % p;
  return (std::uint32_t)acc;
}

bool divides(const std::vector<std::uint32_t>& g,
             const std::vector<std::uint32_t>& f, std::uint32_t p) {
  // g monic; true iff g | f
  std::vector<std::uint32_t> r = f;
  const std::size_t dg = g.size() - 1;
  while (r.size() > dg) {
    std::uint32_t lead = r.back() % p;
    std::size_t shift = r.size() - 1 - dg;
    if (lead) {
      for (std::size_t i = 0; i <= dg; ++i) {
        std::uint64_t sub = (std::uint64_t)lead * g[i] % p;
        r[shift + i] = (r[shift + i] + p - (std::uint32_t)sub) % p;
      }
    }
    r.pop_back();
  }
  for (auto c : r)
    if (c % p) return false;
  return true;
}

bool is_irreducible(const std::vector<std::uint32_t>& m, std::uint32_t p) {
  const std::size_t k = m.size() - 1;
  if (k == 1) return true;
  for (std::uint32_t x = 0; x < p; ++x)
    if (poly_eval(m, x, p) == 0) return false;
  if (k <= 3) return true;
  // degree 4: also exclude irreducible quadratic factors
  for (std::uint32_t c1 = 0; c1 < p; ++c1)
    for (std::uint32_t c0 = 0; c0 < p; ++c0) {
      std::vector<std::uint32_t> g{c0, c1, 1};
      bool has_root = false;
      for (std::uint32_t x = 0; x < p && !has_root; ++x)
        if (poly_eval(g, x, p) == 0) has_root = true;
      if (!has_root && divides(g, m, p)) return false;
    }
  return true;
}

// Conway-style defining moduli, ascending coefficients, monic.
const std::map<std::pair<std::uint32_t, std::uint32_t>,
               std::vector<std::uint32_t>>&
modulus_table() {
  static const std::map<std::pair<std::uint32_t, std::uint32_t>,
                        std::vector<std::uint32_t>>
      tbl = {
          {{2, 2}, {1, 1, 1}},          // x^2+x+1
          {{2, 3}, {1, 1, 0, 1}},       // x^3+x+1
          {{2, 4}, {1, 1, 0, 0, 1}},    // x^4+x+1
          {{3, 2}, {2, 2, 1}},          // x^2+2x+2
          {{3, 3}, {1, 2, 0, 1}},       // x^3+2x+1
          {{3, 4}, {2, 0, 0, 2, 1}},    // x^4+2x^3+2
          {{5, 2}, {2, 4, 1}},          // x^2+4x+2
          {{5, 3}, {3, 3, 0, 1}},       // x^3+3x+3
          {{5, 4}, {2, 4, 4, 0, 1}},    // x^4+4x^2+4x+2
          {{7, 2}, {3, 6, 1}},          // x^2+6x+3
          {{7, 3}, {4, 0, 6, 1}},       // x^3+6x^2+4
          {{7, 4}, {3, 4, 5, 0, 1}},    // x^4+5x^2+4x+3
      };
  return tbl;
}

}  // namespace

FieldSpec FieldSpec::prime(std::uint32_t p) {
  FieldSpec s;
  s.p = p;
  s.k = 1;
  s.modulus = {0, 1};
  s.validate();
  return s;
}

FieldSpec FieldSpec::extension(std::uint32_t p, std::uint32_t k) {
  if (k == 1) return prime(p);
  FieldSpec s;
  s.p = p;
  s.k = k;
  auto it = modulus_table().find({p, k});
  if (it != modulus_table().end()) {
    s.modulus = it->second;
  } else {
    // smallest irreducible monic polynomial in lexicographic coefficient order
    if (k > 4) throw FieldError("extension degree limited to k <= 4");
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < k; ++i) count *= p;
    bool found = false;
    for (std::uint64_t code = 0; code < count && !found; ++code) {
      std::vector<std::uint32_t> m(k + 1, 0);
      std::uint64_t c = code;
      for (std::uint32_t i = 0; i < k; ++i) {
        m[i] = c % p;
        c /= p;
      }
      m[k] = 1;
      if (is_irreducible(m, p)) {
        s.modulus = m;
        found = true;
      }
    }
    if (!found) throw FieldError("no irreducible modulus found");
  }
  s.validate();
  return s;
}

std::uint64_t FieldSpec::q() const {
  std::uint64_t v = 1;
  for (std::uint32_t i = 0; i < k; ++i) v *= p;
  return v;
}

std::string FieldSpec::str() const {
  if (k == 1) return "F_" + std::to_string(p);
  return "F_" + std::to_string(p) + "^" + std::to_string(k);
}

void FieldSpec::validate() const {
  if (!is_prime(p)) throw FieldError("p = " + std::to_string(p) + " is not prime");
  if (k < 1 || k > 4) throw FieldError("extension degree must satisfy 1 <= k <= 4");
  if (modulus.size() != k + 1 || modulus[k] % p != 1)
    throw FieldError("modulus must be monic of degree k");
  if (k == 1) {
    if (modulus != std::vector<std::uint32_t>{0, 1})
      throw FieldError("k = 1 requires modulus = x");
    return;
  }
  for (auto c : modulus)
    if (c >= p) throw FieldError("modulus coefficients must be reduced mod p");
  if (!is_irreducible(modulus, p))
    throw FieldError("modulus is reducible over F_" + std::to_string(p));
}

Field::Field(FieldSpec spec) : spec_(std::move(spec)) {
  spec_.validate();
  q_ = spec_.q();
  tabulated_ = q_ <= 1024 && spec_.k > 1;
  if (tabulated_) {
    mul_table_.assign(q_ * q_, 0);
    for (fq_t a = 0; a < q_; ++a)
      for (fq_t b = a; b < q_; ++b) {
        fq_t v = mul_slow(a, b);
        mul_table_[a * q_ + b] = v;
        mul_table_[b * q_ + a] = v;
      }
    inv_table_.assign(q_, 0);
    for (fq_t a = 1; a < q_; ++a) {
      for (fq_t b = 1; b < q_; ++b)
        if (mul_table_[a * q_ + b] == 1) {
          inv_table_[a] = b;
          break;
        }
      if (!inv_table_[a]) throw FieldError("non-invertible nonzero element");
    }
  }
}

fq_t Field::add(fq_t a, fq_t b) const {
  if (spec_.k == 1) return (a + b) % spec_.p;
  fq_t out = 0, mul = 1;
  for (std::uint32_t i = 0; i < spec_.k; ++i) {
    fq_t da = a % spec_.p, db = b % spec_.p;
    a /= spec_.p;
    b /= spec_.p;
    out += ((da + db) % spec_.p) * mul;
    mul *= spec_.p;
  }
  return out;
}

fq_t Field::neg(fq_t a) const {
  if (spec_.k == 1) return a ? spec_.p - a : 0;
  fq_t out = 0, mul = 1;
  for (std::uint32_t i = 0; i < spec_.k; ++i) {
    fq_t da = a % spec_.p;
    a /= spec_.p;
    out += (da ? spec_.p - da : 0) * mul;
    mul *= spec_.p;
  }
  return out;
}

fq_t Field::sub(fq_t a, fq_t b) const { return add(a, neg(b)); }

fq_t Field::mul_slow(fq_t a, fq_t b) const {
  if (spec_.k == 1) return (fq_t)((std::uint64_t)a * b % spec_.p);
  std::vector<std::uint32_t> pa = coeffs(a), pb = coeffs(b);
  auto pr = poly_mulmod(pa, pb, spec_.modulus, spec_.p);
  fq_t out = 0, mul = 1;
  for (std::uint32_t i = 0; i < spec_.k; ++i) {
    out += pr[i] * mul;
    mul *= spec_.p;
  }
  return out;
}

fq_t Field::mul(fq_t a, fq_t b) const {
  if (spec_.k == 1) return (fq_t)((std::uint64_t)a * b % spec_.p);
  if (tabulated_) return mul_table_[(std::uint64_t)a * q_ + b];
  return mul_slow(a, b);
}

fq_t Field::pow(fq_t a, std::uint64_t e) const {
  fq_t acc = 1;
  while (e) {
    if (e & 1) acc = mul(acc, a);
    a = mul(a, a);
    e >>= 1;
  }
  return acc;
}

fq_t Field::inv(fq_t a) const {
  if (a == 0) throw FieldError("division by zero");
  if (spec_.k == 1) {
    // Fermat
    return pow(a, spec_.p - 2);
  }
  if (tabulated_) return inv_table_[a];
  return pow(a, q_ - 2);
}

fq_t Field::from_int(std::int64_t n) const {
  std::int64_t r = n % (std::int64_t)spec_.p;
  if (r < 0) r += spec_.p;
  return (fq_t)r;
}

std::vector<std::uint32_t> Field::coeffs(fq_t a) const {
  std::vector<std::uint32_t> c(spec_.k);
  for (std::uint32_t i = 0; i < spec_.k; ++i) {
    c[i] = a % spec_.p;
    a /= spec_.p;
  }
  return c;
}

fq_t Field::from_coeffs(const std::vector<std::uint32_t>& c) const {
  if (c.size() != spec_.k) throw FieldError("coefficient vector has wrong length");
  fq_t out = 0, mul = 1;
  for (std::uint32_t i = 0; i < spec_.k; ++i) {
    if (c[i] >= spec_.p) throw FieldError("coefficient not reduced mod p");
    out += c[i] * mul;
    mul *= spec_.p;
  }
  return out;
}

const Field& field_of(const FieldSpec& spec) {
  static std::map<std::pair<std::uint32_t, std::uint32_t>,
                  std::map<std::vector<std::uint32_t>, std::unique_ptr<Field>>>
      cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto& slot = cache[{spec.p, spec.k}][spec.modulus];
  if (!slot) slot = std::make_unique<Field>(spec);
  return *slot;
}

}  // namespace fqb
