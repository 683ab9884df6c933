#include "partrec/recurrence.hpp"

#include "partrec/counting.hpp"
#include "partrec/errors.hpp"
#include "partrec/qseries.hpp"

namespace partrec::recurrence {
namespace {

using figurate::SparseSignedSeries;

Count table_value(std::span<const Count> table, std::int64_t index,
                  const char* what) {
  if (index < 0 || static_cast<std::size_t>(index) >= table.size())
    throw UsageError(std::string(what) + " table too short for index " +
                     std::to_string(index));
  return table[static_cast<std::size_t>(index)];
}

Count lhs_from_terms(const std::vector<SparseSignedSeries::Term>& terms,
                     std::span<const Count> family_table, std::int64_t scale,
                     std::int64_t n) {
  Count total = 0;
  for (const auto& term : terms) {
    if (term.exponent > n) break;
    const auto offset = n - term.exponent;
    if (offset % scale != 0) continue;
    total += term.coefficient *
             table_value(family_table, offset / scale, "family");
  }
  return total;
}

std::vector<Count> oracle_table(const FamilySpec& spec, std::size_t n_max,
                                Oracle oracle) {
  switch (oracle) {
    case Oracle::Series: {
      const auto series = qseries::family_series(spec, n_max);
      return {series.coeffs().begin(), series.coeffs().end()};
    }
    case Oracle::Dp:
      return counting::dp_table(spec, n_max);
    case Oracle::Enum: {
      std::vector<Count> table;
      table.reserve(n_max + 1);
      for (std::size_t n = 0; n <= n_max; ++n)
        table.push_back(counting::enum_count(spec, n));
      return table;
    }
  }
  throw UsageError("unknown oracle");
}

}  // namespace

std::string oracle_name(Oracle oracle) {
  switch (oracle) {
    case Oracle::Series: return "series";
    case Oracle::Dp: return "dp";
    case Oracle::Enum: return "enum";
  }
  return "?";
}

bool in_domain(Domain domain, std::int64_t n) {
  switch (domain) {
    case Domain::All: return true;
    case Domain::Even: return n % 2 == 0;
    case Domain::Odd: return n % 2 == 1;
  }
  return false;
}

Count lhs_apply(const Identity& ident, std::span<const Count> family_table,
                std::int64_t n) {
  if (n < 0) throw UsageError("lhs_apply requires n >= 0");
  table_value(family_table, n / ident.scale, "family");  // coverage check
  return lhs_from_terms(ident.multiplier.terms_up_to(n), family_table,
                        ident.scale, n);
}

Count rhs_apply(const Identity& ident, std::span<const Count> aux_table,
                std::int64_t n) {
  if (n < 0) throw UsageError("rhs_apply requires n >= 0");
  if (const auto* sparse = std::get_if<SparseRhs>(&ident.rhs))
    return Count(sparse->series.coefficient_at(n));
  const auto& ref = std::get<FamilyRefRhs>(ident.rhs);
  if (aux_table.empty())
    throw UsageError("rhs_apply: missing aux table for " + ref.family.name());
  if (n % ref.arg_divisor != 0) return 0;
  if (ref.parity_mask) {
    const auto parity =
        (n % 2 == 0) ? figurate::Parity::Even : figurate::Parity::Odd;
    if (parity != *ref.parity_mask) return 0;
  }
  Count value = table_value(aux_table, n / ref.arg_divisor, "rhs");
  if (ref.alternating && (n % 2 == 1)) value = -value;
  return value;
}

bool solvable(const Identity& ident) {
  if (ident.scale != 1) return false;
  const auto head = ident.multiplier.terms_up_to(0);
  if (head.size() != 1 || head[0].exponent != 0 ||
      (head[0].coefficient != 1 && head[0].coefficient != -1))
    return false;
  if (const auto* ref = std::get_if<FamilyRefRhs>(&ident.rhs))
    return !(ref->family == ident.family);
  return true;
}

std::vector<Count> solve(const Identity& ident, std::size_t n_max) {
  if (!solvable(ident))
    throw UsageError("identity '" + ident.id + "' is not solvable");
  const auto n_limit = static_cast<std::int64_t>(n_max);
  const auto terms = ident.multiplier.terms_up_to(n_limit);
  const std::int32_t lead = terms.empty() ? 0 : terms[0].coefficient;

  std::vector<Count> aux;
  if (const auto* ref = std::get_if<FamilyRefRhs>(&ident.rhs))
    aux = counting::dp_table(ref->family,
                             n_max / static_cast<std::size_t>(
                                         std::max<std::int64_t>(
                                             ref->arg_divisor, 1)));

  std::vector<Count> table;
  table.reserve(n_max + 1);
  Count acc;
  for (std::int64_t n = 0; n <= n_limit; ++n) {
    acc = rhs_apply(ident, aux, n);
    for (const auto& term : terms) {
      if (term.exponent > n) break;
      if (term.exponent == 0) continue;
      const Count& prev = table[static_cast<std::size_t>(n - term.exponent)];
      if (term.coefficient == 1)
        acc -= prev;
      else if (term.coefficient == -1)
        acc += prev;
      else
        acc -= term.coefficient * prev;
    }
    if (lead == -1) acc = -acc;
    if (acc < 0)
      throw IntegrityError("solve('" + ident.id + "'): negative value at n=" +
                           std::to_string(n));
    table.push_back(acc);
  }
  return table;
}

VerifyReport verify(const Identity& ident, std::size_t n_max, Oracle oracle) {
  if (oracle == Oracle::Enum &&
      n_max > static_cast<std::size_t>(counting::kEnumGuard))
    throw GuardError("enum oracle limited to n <= " +
                     std::to_string(counting::kEnumGuard));
  const auto n_limit = static_cast<std::int64_t>(n_max);
  const auto family_table = oracle_table(
      ident.family, n_max / static_cast<std::size_t>(ident.scale), oracle);
  std::vector<Count> aux;
  if (const auto* ref = std::get_if<FamilyRefRhs>(&ident.rhs))
    aux = oracle_table(ref->family,
                       n_max / static_cast<std::size_t>(ref->arg_divisor),
                       oracle);

  VerifyReport report{ident.id, n_limit, oracle, {}};
  const auto terms = ident.multiplier.terms_up_to(n_limit);
  for (std::int64_t n = 0; n <= n_limit; ++n) {
    if (!in_domain(ident.domain, n)) continue;
    Count lhs = lhs_from_terms(terms, family_table, ident.scale, n);
    Count rhs = rhs_apply(ident, aux, n);
    if (lhs != rhs) report.violations.push_back({n, lhs, rhs});
  }
  return report;
}

std::optional<std::size_t> series_verify(const Identity& ident,
                                         std::size_t n_max) {
  const auto scale = static_cast<std::size_t>(ident.scale);
  // M(q) * F(q^s)
  const auto family = qseries::family_series(ident.family, n_max / scale);
  qseries::DenseSeries family_scaled(n_max);
  for (std::size_t k = 0; k * scale <= n_max; ++k)
    family_scaled[k * scale] = family[k];
  const auto lhs = qseries::mul_trunc(
      qseries::dense_from_sparse(ident.multiplier, n_max), family_scaled);

  qseries::DenseSeries rhs(n_max);
  if (const auto* sparse = std::get_if<SparseRhs>(&ident.rhs)) {
    rhs = qseries::dense_from_sparse(sparse->series, n_max);
  } else {
    const auto& ref = std::get<FamilyRefRhs>(ident.rhs);
    const auto divisor = static_cast<std::size_t>(ref.arg_divisor);
    const auto aux = qseries::family_series(ref.family, n_max / divisor);
    for (std::size_t n = 0; n <= n_max; ++n) {
      if (n % divisor != 0) continue;
      if (ref.parity_mask) {
        const auto parity =
            (n % 2 == 0) ? figurate::Parity::Even : figurate::Parity::Odd;
        if (parity != *ref.parity_mask) continue;
      }
      rhs[n] = aux[n / divisor];
      if (ref.alternating && (n % 2 == 1)) rhs[n] = -rhs[n];
    }
  }

  for (std::size_t n = 0; n <= n_max; ++n) {
    if (!in_domain(ident.domain, static_cast<std::int64_t>(n))) continue;
    if (lhs[n] != rhs[n]) return n;
  }
  return std::nullopt;
}

}  // namespace partrec::recurrence
