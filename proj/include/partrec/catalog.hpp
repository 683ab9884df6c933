#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "partrec/recurrence.hpp"

namespace partrec::catalog {

using Params = std::map<std::string, std::int64_t>;

struct CatalogEntry {
  std::string id;
  std::string citation;    // classical source or content description
  std::string params_doc;  // "" for non-parametric entries
};

// The listed catalog in deterministic order. Parametric entries carry
// documented defaults (thm7-ell-regular: ell=2; thm8-pm: m=5, c=1).
const std::vector<CatalogEntry>& entries();

std::vector<std::string> all_ids();

// Build the identity for a catalog id, merging the given parameters over
// the entry's defaults. Unknown ids and unexpected parameters raise
// UsageError; out-of-range values raise DomainError. The alias
// "cor1-R2-direct" (the direct m=5, c=2 instance) is buildable although
// not separately listed.
recurrence::Identity build(const std::string& id, const Params& params = {});

Params default_params(const std::string& id);

}  // namespace partrec::catalog
