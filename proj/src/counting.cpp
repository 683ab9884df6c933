#include "partrec/counting.hpp"

#include <functional>

#include "partrec/errors.hpp"

namespace partrec::counting {
namespace {

bool part_allowed(const FamilySpec& spec, std::int64_t v) {
  switch (spec.family()) {
    case Family::P:
    case Family::Pd:
    case Family::OverP:
    case Family::OverPd:
      return true;
    case Family::Po:
    case Family::QQ:
      return v % 2 == 1;
    case Family::Bl:
      return v % spec.ell() != 0;
    case Family::Pcm: {
      const auto r = v % spec.modulus();
      return r == spec.residue() || r == spec.modulus() - spec.residue();
    }
  }
  return false;
}

// Max times one value may occur (0 = unbounded).
std::int64_t multiplicity_cap(const FamilySpec& spec) {
  switch (spec.family()) {
    case Family::Pd:
    case Family::QQ:
      return 1;
    case Family::OverPd:
      return 2;
    default:
      return 0;
  }
}

std::int64_t value_weight(const FamilySpec& spec, std::int64_t mult) {
  if (spec.family() == Family::OverP) return 2;
  if (spec.family() == Family::OverPd) return mult == 1 ? 2 : 1;
  return 1;
}

}  // namespace

Count enum_count(const FamilySpec& spec, std::int64_t n) {
  if (n < 0) throw DomainError("enum_count requires n >= 0");
  if (n > kEnumGuard)
    throw GuardError("enum_count limited to n <= " +
                     std::to_string(kEnumGuard));
  const auto cap = multiplicity_cap(spec);
  // recurse over distinct part values, largest first
  std::function<Count(std::int64_t, std::int64_t)> walk =
      [&](std::int64_t rest, std::int64_t max_value) -> Count {
    if (rest == 0) return 1;
    Count total = 0;
    for (std::int64_t v = std::min(rest, max_value); v >= 1; --v) {
      if (!part_allowed(spec, v)) continue;
      for (std::int64_t mult = 1;
           mult * v <= rest && (cap == 0 || mult <= cap); ++mult)
        total += value_weight(spec, mult) * walk(rest - mult * v, v - 1);
    }
    return total;
  };
  return walk(n, n);
}

std::vector<Count> dp_table(const FamilySpec& spec, std::size_t n_max) {
  std::vector<Count> table(n_max + 1, Count(0));
  table[0] = 1;
  const auto n = static_cast<std::int64_t>(n_max);
  auto use_unbounded = [&](std::int64_t k) {
    for (std::int64_t i = k; i <= n; ++i) table[i] += table[i - k];
  };
  auto use_at_most_once = [&](std::int64_t k) {
    for (std::int64_t i = n; i >= k; --i) table[i] += table[i - k];
  };
  for (std::int64_t k = 1; k <= n; ++k) {
    if (!part_allowed(spec, k)) continue;
    switch (spec.family()) {
      case Family::P:
      case Family::Po:
      case Family::Bl:
      case Family::Pcm:
        use_unbounded(k);
        break;
      case Family::Pd:
      case Family::QQ:
        use_at_most_once(k);
        break;
      case Family::OverP:
        use_at_most_once(k);
        use_unbounded(k);
        break;
      case Family::OverPd:
        use_at_most_once(k);
        use_at_most_once(k);
        break;
    }
  }
  return table;
}

}  // namespace partrec::counting
