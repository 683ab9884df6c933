#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

namespace partrec::figurate {

enum class FigurateKind { Triangular, GenPentagonal, GenHeptagonal, Square };

enum class Parity { Even, Odd };

// Closed-form figurate values:
//   Triangular(k)    = k(k+1)/2,  k >= 0
//   GenPentagonal(j) = j(3j-1)/2, j in Z
//   GenHeptagonal(j) = j(5j-3)/2, j in Z
//   Square(k)        = k^2,       k >= 0
// Fits 64 bits for |index| <= 2^30. Negative index for Triangular/Square
// throws DomainError.
std::uint64_t figurate_value(FigurateKind kind, std::int64_t index);

// Exact inverse: the unique index with figurate_value(kind, index) == n,
// or nullopt. Total function (no overflow for any uint64 n); n = 0 maps
// to index 0 for every kind.
std::optional<std::int64_t> figurate_index(FigurateKind kind,
                                           std::uint64_t n);

// Parity of the value k(k+1)/2: even iff k = 0 or 3 (mod 4).
Parity triangular_parity(std::uint64_t k);

// Ordered sparse series sum c_i * q^(e_i) with strictly increasing
// exponents and small nonzero coefficients. Built from a fixed set of
// branches, each enumerating terms in increasing exponent order;
// enumeration up to any bound is lazy and terminates. Immutable after
// construction.
class SparseSignedSeries {
 public:
  struct Term {
    std::int64_t exponent;
    std::int32_t coefficient;
    friend bool operator==(const Term&, const Term&) = default;
  };

  // Maps i = 0,1,2,... to the branch's i-th term (strictly increasing
  // exponents); nullopt once exhausted.
  using Branch = std::function<std::optional<Term>(std::int64_t)>;

  // Optional closed-form coefficient lookup (exact inversion via
  // figurate_index); enumeration fallback when absent.
  using Lookup = std::function<std::int32_t(std::int64_t)>;

  explicit SparseSignedSeries(std::vector<Branch> branches,
                              Lookup lookup = {});

  // Merged terms with exponent <= bound, increasing exponent order.
  // Branches are merged in declaration order (nonnegative index branch
  // first); an exponent collision across branches raises IntegrityError.
  std::vector<Term> terms_up_to(std::int64_t bound) const;

  // Coefficient at the given exponent, 0 if absent.
  std::int32_t coefficient_at(std::int64_t exponent) const;

  std::int32_t constant_term() const { return coefficient_at(0); }

 private:
  std::vector<Branch> branches_;
  Lookup lookup_;
};

// Named theta-type series used as recurrence multipliers and indicator
// right-hand sides.
namespace theta {
struct Euler {            // sum (-1)^j q^(s*j(3j-1)/2), j in Z
  std::int64_t scale = 1;
};
struct Triangular {       // sum q^(s*k(k+1)/2), k >= 0
  std::int64_t scale = 1;
};
struct EvenValuedTriangular {};  // triangular exponents of even value
struct OddValuedTriangular {};   // triangular exponents of odd value
struct PhiNeg {           // 1 + 2 sum (-1)^k q^(s*k^2), k >= 1
  std::int64_t scale = 1;
};
struct FTheta {           // sum sa^(n(n+1)/2) sb^(n(n-1)/2)
  std::int64_t u = 1;     //     * q^(u*n(n+1)/2 + v*n(n-1)/2), n in Z
  std::int64_t v = 1;
  std::int32_t sign_a = 1;
  std::int32_t sign_b = 1;
};
struct SignedHeptagonal {};      // sum (-1)^j q^(j(5j-3)/2), j in Z
struct Delta0 {};                // the single term q^0
}  // namespace theta

using ThetaSpec =
    std::variant<theta::Euler, theta::Triangular, theta::EvenValuedTriangular,
                 theta::OddValuedTriangular, theta::PhiNeg, theta::FTheta,
                 theta::SignedHeptagonal, theta::Delta0>;

SparseSignedSeries theta_series(const ThetaSpec& spec);

// Product multiplier of the p^c_m recurrence family:
// prod (1-q^(mk-c))(1-q^(mk-(m-c)))(1-q^(mk)) expanded as the theta series
// with exponents (mj^2 + (m-2c)j)/2 and coefficients (-1)^j. Requires
// m >= 3, 1 <= c <= m-1, 2c != m.
SparseSignedSeries thm38_multiplier(std::int64_t m, std::int64_t c);

}  // namespace partrec::figurate
