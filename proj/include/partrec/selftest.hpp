#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace partrec::selftest {

struct CheckResult {
  std::string name;
  bool ok = false;
  std::optional<std::size_t> first_mismatch;
};

struct Options {
  std::size_t order = 2000;
  // Fault-injection hook: corrupts the pentagonal series before the
  // product comparison, so the suite must report a failure.
  bool corrupt_pentagonal = false;
};

// Classical series identities checked coefficient-wise to the given
// order: the pentagonal number theorem, triple-product expansions of the
// theta multipliers, the psi eta-quotient, the mod-m multiplier products
// and the even/odd triangular split of psi.
std::vector<CheckResult> run(const Options& options);

bool all_ok(const std::vector<CheckResult>& results);

}  // namespace partrec::selftest
