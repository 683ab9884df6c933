#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "partrec/count.hpp"
#include "partrec/family.hpp"
#include "partrec/figurate.hpp"

namespace partrec::qseries {

// Formal power series truncated at a fixed order, exact integer
// coefficients. The primary oracle representation of every generating
// function. Binary operations require equal orders.
class DenseSeries {
 public:
  explicit DenseSeries(std::size_t order) : coeffs_(order + 1, Count(0)) {}

  static DenseSeries unit(std::size_t order) {
    DenseSeries s(order);
    s.coeffs_[0] = 1;
    return s;
  }

  std::size_t order() const { return coeffs_.size() - 1; }
  Count& operator[](std::size_t n) { return coeffs_[n]; }
  const Count& operator[](std::size_t n) const { return coeffs_[n]; }
  std::span<const Count> coeffs() const { return coeffs_; }

  friend bool operator==(const DenseSeries&, const DenseSeries&) = default;

 private:
  std::vector<Count> coeffs_;
};

// One q-Pochhammer style factor prod_{k>=0} (1 + sign*q^(r+mk))^e in
// canonical form r <= m.
struct ProductFactor {
  std::int32_t sign;      // +1 -> (1+q^.), -1 -> (1-q^.)
  std::int64_t residue;   // r >= 1
  std::int64_t modulus;   // m >= 1
  std::int32_t exponent;  // e, negative factors applied via inversion
};

DenseSeries dense_from_sparse(const figurate::SparseSignedSeries& sparse,
                              std::size_t order);

// Cauchy product truncated at the common order.
DenseSeries mul_trunc(const DenseSeries& a, const DenseSeries& b);

// Multiplicative inverse; requires constant coefficient +-1.
DenseSeries inv_trunc(const DenseSeries& a);

DenseSeries add(const DenseSeries& a, const DenseSeries& b);
DenseSeries sub(const DenseSeries& a, const DenseSeries& b);

// Least n with differing coefficients, or nullopt.
std::optional<std::size_t> first_mismatch(const DenseSeries& a,
                                          const DenseSeries& b);

// Expands the given product to the requested order. Factors with
// negative exponent are expanded positively, then inverted.
DenseSeries pochhammer(std::span<const ProductFactor> factors,
                       std::size_t order);

// The family's generating function; coefficient at n is the family count.
DenseSeries family_series(const FamilySpec& spec, std::size_t order);

// The family's product specification (exposed for the series self-tests).
std::vector<ProductFactor> family_factors(const FamilySpec& spec);

}  // namespace partrec::qseries
