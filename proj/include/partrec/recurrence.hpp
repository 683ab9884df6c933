#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "partrec/count.hpp"
#include "partrec/family.hpp"
#include "partrec/figurate.hpp"

namespace partrec::recurrence {

// Right-hand side of a scaled convolution identity: either a sparse
// signed indicator series, or a reference to another family's table.
struct SparseRhs {
  figurate::SparseSignedSeries series;
};

// R(n) = (-1)^(n*[alternating]) * G(n/t) when t | n and the parity mask
// (if any) matches; 0 otherwise.
struct FamilyRefRhs {
  FamilySpec family;
  std::int64_t arg_divisor = 1;
  std::optional<figurate::Parity> parity_mask;
  bool alternating = false;
};

using RhsSpec = std::variant<SparseRhs, FamilyRefRhs>;

enum class Domain { All, Even, Odd };

// A scaled convolution identity: for every n >= 0 in the domain,
//   sum over multiplier terms (e, c) with e <= n and s | (n-e) of
//   c * F((n-e)/s)  equals  rhs(n).
// Terms whose offset is negative or not divisible by s contribute zero.
struct Identity {
  std::string id;
  figurate::SparseSignedSeries multiplier;
  FamilySpec family;
  std::int64_t scale = 1;
  RhsSpec rhs;
  Domain domain = Domain::All;
};

enum class Oracle { Series, Dp, Enum };

std::string oracle_name(Oracle oracle);

struct Violation {
  std::int64_t n;
  Count lhs;
  Count rhs;
};

struct VerifyReport {
  std::string identity_id;
  std::int64_t max_n = 0;
  Oracle oracle = Oracle::Series;
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

bool in_domain(Domain domain, std::int64_t n);

// Sum c * F((n-e)/s) over multiplier terms; the table must cover
// indices up to floor(n/s).
Count lhs_apply(const Identity& ident, std::span<const Count> family_table,
                std::int64_t n);

// Evaluate the right-hand side at n. FamilyRef sides read aux_table
// (the referenced family's counts, covering floor(n/t)); sparse sides
// ignore it.
Count rhs_apply(const Identity& ident, std::span<const Count> aux_table,
                std::int64_t n);

// An identity is solvable when s = 1, the multiplier leads with (0, +-1)
// and the right-hand side does not reference the identity's own family.
bool solvable(const Identity& ident);

// Iteratively computes F(0..n_max) from the recurrence. FamilyRef
// right-hand sides are tabulated with the dp oracle. Every output must be
// nonnegative; a negative value raises IntegrityError (wrong identity).
std::vector<Count> solve(const Identity& ident, std::size_t n_max);

// Tabulates F and the aux family with the chosen oracle and checks
// lhs = rhs pointwise on the identity's domain.
VerifyReport verify(const Identity& ident, std::size_t n_max, Oracle oracle);

// Whole-series check: expands M(q) * F(q^s) and the dense right-hand
// side, returns the first in-domain coefficient mismatch, or nullopt.
std::optional<std::size_t> series_verify(const Identity& ident,
                                         std::size_t n_max);

}  // namespace partrec::recurrence
