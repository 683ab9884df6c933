#pragma once

#include <cstdint>
#include <vector>

#include "partrec/count.hpp"
#include "partrec/family.hpp"

namespace partrec::counting {

// Exhaustive enumeration of part multisets, weighted for the
// overpartition families (2 per distinct value for OverP; 2 per value
// used exactly once, at most twice each, for OverPd). Guarded to n <= 40.
Count enum_count(const FamilySpec& spec, std::int64_t n);

inline constexpr std::int64_t kEnumGuard = 40;

// Direct dynamic-programming table: one in-place pass per allowed part
// (unbounded use for 1/(1-q^k) factors, at-most-once for (1+q^k), both for
// overpartition factors). Kept free of any series code so it fails
// independently of the qseries oracle.
std::vector<Count> dp_table(const FamilySpec& spec, std::size_t n_max);

}  // namespace partrec::counting
