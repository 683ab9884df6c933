#include "partrec/figurate.hpp"

#include <algorithm>
#include <utility>

#include "partrec/errors.hpp"

namespace partrec::figurate {
namespace {

using u128 = unsigned __int128;

// Exact bitwise integer square root; discriminants 8n+1 / 24n+1 / 40n+9
// can exceed 64 bits for large n.
u128 isqrt(u128 x) {
  u128 root = 0;
  u128 bit = u128{1} << 126;
  while (bit > x) bit >>= 2;
  while (bit != 0) {
    if (x >= root + bit) {
      x -= root + bit;
      root = (root >> 1) + bit;
    } else {
      root >>= 1;
    }
    bit >>= 2;
  }
  return root;
}

std::optional<u128> exact_sqrt(u128 x) {
  const u128 r = isqrt(x);
  if (r * r == x) return r;
  return std::nullopt;
}

std::int32_t sign_pow(std::int32_t sign, std::uint64_t exponent_parity) {
  return (sign < 0 && (exponent_parity & 1)) ? -1 : 1;
}

std::int32_t neg_one_pow(std::int64_t j) { return (j & 1) ? -1 : 1; }

}  // namespace

std::uint64_t figurate_value(FigurateKind kind, std::int64_t index) {
  switch (kind) {
    case FigurateKind::Triangular:
      if (index < 0) throw DomainError("triangular index must be >= 0");
      return static_cast<std::uint64_t>(index) * (index + 1) / 2;
    case FigurateKind::GenPentagonal:
      return static_cast<std::uint64_t>(index * (3 * index - 1) / 2);
    case FigurateKind::GenHeptagonal:
      return static_cast<std::uint64_t>(index * (5 * index - 3) / 2);
    case FigurateKind::Square:
      if (index < 0) throw DomainError("square index must be >= 0");
      return static_cast<std::uint64_t>(index) * index;
  }
  throw DomainError("unknown figurate kind");
}

std::optional<std::int64_t> figurate_index(FigurateKind kind,
                                           std::uint64_t n) {
  switch (kind) {
    case FigurateKind::Triangular: {
      // k(k+1)/2 = n  <=>  8n+1 = (2k+1)^2
      const auto s = exact_sqrt(u128{8} * n + 1);
      if (!s) return std::nullopt;
      return static_cast<std::int64_t>((*s - 1) / 2);
    }
    case FigurateKind::GenPentagonal: {
      // j(3j-1)/2 = n  <=>  24n+1 = (6j-1)^2
      const auto s = exact_sqrt(u128{24} * n + 1);
      if (!s) return std::nullopt;
      const auto r = static_cast<std::uint64_t>(*s);
      if (r % 6 == 5) return static_cast<std::int64_t>((r + 1) / 6);
      return -static_cast<std::int64_t>((r - 1) / 6);
    }
    case FigurateKind::GenHeptagonal: {
      // j(5j-3)/2 = n  <=>  40n+9 = (10j-3)^2
      const auto s = exact_sqrt(u128{40} * n + 9);
      if (!s) return std::nullopt;
      const auto r = static_cast<std::uint64_t>(*s);
      if (r % 10 == 7) return static_cast<std::int64_t>((r + 3) / 10);
      if (r % 10 == 3) return -static_cast<std::int64_t>((r - 3) / 10);
      return std::nullopt;
    }
    case FigurateKind::Square: {
      const auto s = exact_sqrt(u128{n});
      if (!s) return std::nullopt;
      return static_cast<std::int64_t>(*s);
    }
  }
  return std::nullopt;
}

Parity triangular_parity(std::uint64_t k) {
  // k(k+1)/2 is even exactly for k = 4i and k = 4i-1 (values 8i^2 +- 2i).
  const auto r = k % 4;
  return (r == 0 || r == 3) ? Parity::Even : Parity::Odd;
}

SparseSignedSeries::SparseSignedSeries(std::vector<Branch> branches,
                                       Lookup lookup)
    : branches_(std::move(branches)), lookup_(std::move(lookup)) {}

std::vector<SparseSignedSeries::Term> SparseSignedSeries::terms_up_to(
    std::int64_t bound) const {
  std::vector<Term> merged;
  for (const auto& branch : branches_) {
    for (std::int64_t i = 0;; ++i) {
      const auto term = branch(i);
      if (!term || term->exponent > bound) break;
      merged.push_back(*term);
    }
  }
  std::stable_sort(merged.begin(), merged.end(),
                   [](const Term& a, const Term& b) {
                     return a.exponent < b.exponent;
                   });
  for (std::size_t i = 1; i < merged.size(); ++i) {
    if (merged[i].exponent == merged[i - 1].exponent)
      throw IntegrityError("sparse series exponent collision at q^" +
                           std::to_string(merged[i].exponent));
  }
  return merged;
}

std::int32_t SparseSignedSeries::coefficient_at(std::int64_t exponent) const {
  if (exponent < 0) return 0;
  if (lookup_) return lookup_(exponent);
  for (const auto& term : terms_up_to(exponent))
    if (term.exponent == exponent) return term.coefficient;
  return 0;
}

namespace {

// j-indexed two-sided branch pair: j = 0,1,2,... first, then j = -1,-2,...
std::vector<SparseSignedSeries::Branch> two_sided(
    std::function<SparseSignedSeries::Term(std::int64_t j)> at) {
  return {
      [at](std::int64_t i) { return std::optional(at(i)); },
      [at](std::int64_t i) { return std::optional(at(-i - 1)); },
  };
}

SparseSignedSeries make_euler(std::int64_t scale) {
  if (scale < 1) throw DomainError("euler scale must be >= 1");
  auto at = [scale](std::int64_t j) {
    const auto g = figurate_value(FigurateKind::GenPentagonal, j);
    return SparseSignedSeries::Term{scale * static_cast<std::int64_t>(g),
                                    neg_one_pow(j)};
  };
  auto lookup = [scale](std::int64_t e) -> std::int32_t {
    if (e % scale != 0) return 0;
    const auto j = figurate_index(FigurateKind::GenPentagonal,
                                  static_cast<std::uint64_t>(e / scale));
    return j ? neg_one_pow(*j) : 0;
  };
  return SparseSignedSeries(two_sided(at), lookup);
}

SparseSignedSeries make_triangular(std::int64_t scale) {
  if (scale < 1) throw DomainError("triangular scale must be >= 1");
  auto branch = [scale](std::int64_t k) {
    const auto t = figurate_value(FigurateKind::Triangular, k);
    return std::optional(SparseSignedSeries::Term{
        scale * static_cast<std::int64_t>(t), 1});
  };
  auto lookup = [scale](std::int64_t e) -> std::int32_t {
    if (e % scale != 0) return 0;
    return figurate_index(FigurateKind::Triangular,
                          static_cast<std::uint64_t>(e / scale))
               ? 1
               : 0;
  };
  return SparseSignedSeries({branch}, lookup);
}

SparseSignedSeries make_triangular_by_parity(Parity parity) {
  // Indices with even value are k = 0,3,4,7,8,...; odd value 1,2,5,6,9,...
  auto kth_index = [parity](std::int64_t i) {
    return parity == Parity::Even ? 2 * i + (i & 1) : 2 * i + 1 - (i & 1);
  };
  auto branch = [kth_index](std::int64_t i) {
    const auto t = figurate_value(FigurateKind::Triangular, kth_index(i));
    return std::optional(
        SparseSignedSeries::Term{static_cast<std::int64_t>(t), 1});
  };
  auto lookup = [parity](std::int64_t e) -> std::int32_t {
    const auto k =
        figurate_index(FigurateKind::Triangular, static_cast<std::uint64_t>(e));
    return (k && triangular_parity(static_cast<std::uint64_t>(*k)) == parity)
               ? 1
               : 0;
  };
  return SparseSignedSeries({branch}, lookup);
}

SparseSignedSeries make_phi_neg(std::int64_t scale) {
  if (scale < 1) throw DomainError("phi scale must be >= 1");
  SparseSignedSeries::Branch constant = [](std::int64_t i)
      -> std::optional<SparseSignedSeries::Term> {
    if (i > 0) return std::nullopt;
    return SparseSignedSeries::Term{0, 1};
  };
  SparseSignedSeries::Branch squares = [scale](std::int64_t i) {
    const std::int64_t k = i + 1;
    return std::optional(
        SparseSignedSeries::Term{scale * k * k, 2 * neg_one_pow(k)});
  };
  auto lookup = [scale](std::int64_t e) -> std::int32_t {
    if (e == 0) return 1;
    if (e % scale != 0) return 0;
    const auto k = figurate_index(FigurateKind::Square,
                                  static_cast<std::uint64_t>(e / scale));
    return k ? 2 * neg_one_pow(*k) : 0;
  };
  return SparseSignedSeries({constant, squares}, lookup);
}

SparseSignedSeries make_ftheta(const theta::FTheta& f) {
  if (f.u < 1 || f.v < 1) throw DomainError("ftheta needs u, v >= 1");
  if (f.sign_a * f.sign_a != 1 || f.sign_b * f.sign_b != 1)
    throw DomainError("ftheta signs must be +1 or -1");
  auto at = [f](std::int64_t n) {
    const std::int64_t ta = n * (n + 1) / 2;  // always >= 0
    const std::int64_t tb = n * (n - 1) / 2;
    return SparseSignedSeries::Term{
        f.u * ta + f.v * tb,
        sign_pow(f.sign_a, ta) * sign_pow(f.sign_b, tb)};
  };
  return SparseSignedSeries(two_sided(at));
}

SparseSignedSeries make_signed_heptagonal() {
  auto at = [](std::int64_t j) {
    const auto h = figurate_value(FigurateKind::GenHeptagonal, j);
    return SparseSignedSeries::Term{static_cast<std::int64_t>(h),
                                    neg_one_pow(j)};
  };
  auto lookup = [](std::int64_t e) -> std::int32_t {
    const auto j = figurate_index(FigurateKind::GenHeptagonal,
                                  static_cast<std::uint64_t>(e));
    return j ? neg_one_pow(*j) : 0;
  };
  return SparseSignedSeries(two_sided(at), lookup);
}

SparseSignedSeries make_delta0() {
  SparseSignedSeries::Branch branch = [](std::int64_t i)
      -> std::optional<SparseSignedSeries::Term> {
    if (i > 0) return std::nullopt;
    return SparseSignedSeries::Term{0, 1};
  };
  auto lookup = [](std::int64_t e) -> std::int32_t { return e == 0 ? 1 : 0; };
  return SparseSignedSeries({branch}, lookup);
}

}  // namespace

SparseSignedSeries theta_series(const ThetaSpec& spec) {
  return std::visit(
      [](const auto& v) -> SparseSignedSeries {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, theta::Euler>)
          return make_euler(v.scale);
        else if constexpr (std::is_same_v<T, theta::Triangular>)
          return make_triangular(v.scale);
        else if constexpr (std::is_same_v<T, theta::EvenValuedTriangular>)
          return make_triangular_by_parity(Parity::Even);
        else if constexpr (std::is_same_v<T, theta::OddValuedTriangular>)
          return make_triangular_by_parity(Parity::Odd);
        else if constexpr (std::is_same_v<T, theta::PhiNeg>)
          return make_phi_neg(v.scale);
        else if constexpr (std::is_same_v<T, theta::FTheta>)
          return make_ftheta(v);
        else if constexpr (std::is_same_v<T, theta::SignedHeptagonal>)
          return make_signed_heptagonal();
        else
          return make_delta0();
      },
      spec);
}

SparseSignedSeries thm38_multiplier(std::int64_t m, std::int64_t c) {
  if (m < 3) throw DomainError("thm38 multiplier requires m >= 3");
  if (c < 1 || c > m - 1)
    throw DomainError("thm38 multiplier requires 1 <= c <= m-1");
  if (2 * c == m) throw DomainError("thm38 multiplier: 2c = m degenerate");
  return theta_series(theta::FTheta{m - c, c, -1, -1});
}

}  // namespace partrec::figurate
