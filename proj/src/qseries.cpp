#include "partrec/qseries.hpp"

#include <sstream>

#include "partrec/errors.hpp"

namespace partrec {

FamilySpec FamilySpec::simple(Family family) {
  if (family == Family::Bl || family == Family::Pcm)
    throw UsageError("parametric family needs bl()/pcm() constructor");
  return FamilySpec(family, 0, 0, 0);
}

FamilySpec FamilySpec::bl(std::int64_t ell) {
  if (ell < 1) throw DomainError("Bl requires ell >= 1");
  return FamilySpec(Family::Bl, ell, 0, 0);
}

FamilySpec FamilySpec::pcm(std::int64_t m, std::int64_t c) {
  if (m < 3) throw DomainError("Pcm requires m >= 3");
  if (c < 1 || c > m - 1) throw DomainError("Pcm requires 1 <= c <= m-1");
  if (2 * c == m) throw DomainError("Pcm: 2c = m degenerate");
  return FamilySpec(Family::Pcm, 0, m, std::min(c, m - c));
}

std::string FamilySpec::name() const {
  switch (family_) {
    case Family::P: return "P";
    case Family::Pd: return "Pd";
    case Family::Po: return "Po";
    case Family::QQ: return "QQ";
    case Family::OverP: return "OverP";
    case Family::OverPd: return "OverPd";
    case Family::Bl: return "Bl(ell=" + std::to_string(ell_) + ")";
    case Family::Pcm:
      return "Pcm(m=" + std::to_string(m_) + ",c=" + std::to_string(c_) + ")";
  }
  return "?";
}

FamilySpec parse_family(std::string_view name,
                        const std::map<std::string, std::int64_t>& params) {
  auto take = [&params](const std::string& key) -> std::int64_t {
    auto it = params.find(key);
    if (it == params.end())
      throw UsageError("missing family parameter '" + key + "'");
    return it->second;
  };
  auto expect_keys = [&params, &name](std::initializer_list<const char*> keys) {
    for (const auto& [key, value] : params) {
      (void)value;
      bool known = false;
      for (const char* k : keys) known = known || key == k;
      if (!known)
        throw UsageError("family " + std::string(name) +
                         " does not take parameter '" + key + "'");
    }
  };
  if (name == "Bl") {
    expect_keys({"ell"});
    return FamilySpec::bl(take("ell"));
  }
  if (name == "Pcm") {
    expect_keys({"m", "c"});
    return FamilySpec::pcm(take("m"), take("c"));
  }
  expect_keys({});
  if (name == "P") return FamilySpec::simple(Family::P);
  if (name == "Pd") return FamilySpec::simple(Family::Pd);
  if (name == "Po") return FamilySpec::simple(Family::Po);
  if (name == "QQ") return FamilySpec::simple(Family::QQ);
  if (name == "OverP") return FamilySpec::simple(Family::OverP);
  if (name == "OverPd") return FamilySpec::simple(Family::OverPd);
  throw UsageError("unknown family '" + std::string(name) + "'");
}

}  // namespace partrec

namespace partrec::qseries {
namespace {

void require_same_order(const DenseSeries& a, const DenseSeries& b) {
  if (a.order() != b.order())
    throw UsageError("series order mismatch: " + std::to_string(a.order()) +
                     " vs " + std::to_string(b.order()));
}

// In-place multiply by the binomial (1 + coeff*q^step).
void mul_binomial(DenseSeries& a, std::int64_t step, std::int32_t coeff) {
  const auto n_max = a.order();
  if (step <= 0 || static_cast<std::size_t>(step) > n_max) return;
  for (std::size_t n = n_max; n >= static_cast<std::size_t>(step); --n) {
    const Count& src = a[n - step];
    if (src != 0) {
      if (coeff == 1)
        a[n] += src;
      else if (coeff == -1)
        a[n] -= src;
      else
        a[n] += coeff * src;
    }
    if (n == static_cast<std::size_t>(step)) break;
  }
}

// prod_{k>=0} (1 + sign*q^(r+mk)) to the series order.
DenseSeries expand_base(const ProductFactor& f, std::size_t order) {
  DenseSeries base = DenseSeries::unit(order);
  for (std::int64_t d = f.residue; d <= static_cast<std::int64_t>(order);
       d += f.modulus)
    mul_binomial(base, d, f.sign);
  return base;
}

}  // namespace

DenseSeries dense_from_sparse(const figurate::SparseSignedSeries& sparse,
                              std::size_t order) {
  DenseSeries out(order);
  for (const auto& term : sparse.terms_up_to(static_cast<std::int64_t>(order)))
    if (term.exponent >= 0) out[term.exponent] = term.coefficient;
  return out;
}

DenseSeries mul_trunc(const DenseSeries& a, const DenseSeries& b) {
  require_same_order(a, b);
  const auto n_max = a.order();
  DenseSeries out(n_max);
  // Iterate the sparser operand on the outside; zero terms cost nothing.
  auto nonzeros = [n_max](const DenseSeries& s) {
    std::size_t c = 0;
    for (std::size_t i = 0; i <= n_max; ++i) c += (s[i] != 0);
    return c;
  };
  const bool a_outer = nonzeros(a) <= nonzeros(b);
  const DenseSeries& outer = a_outer ? a : b;
  const DenseSeries& inner = a_outer ? b : a;
  for (std::size_t i = 0; i <= n_max; ++i) {
    if (outer[i] == 0) continue;
    for (std::size_t j = 0; i + j <= n_max; ++j) {
      if (inner[j] == 0) continue;
      mpz_addmul(out[i + j].get_mpz_t(), outer[i].get_mpz_t(),
                 inner[j].get_mpz_t());
    }
  }
  return out;
}

DenseSeries inv_trunc(const DenseSeries& a) {
  if (a[0] != 1 && a[0] != -1)
    throw DomainError("inversion requires constant coefficient +-1");
  const auto n_max = a.order();
  // b[n] = a0 * (delta(n) - sum_{k>=1} a[k] b[n-k]), with a0 = 1/a0.
  std::vector<std::size_t> support;  // nonzero a[k], k >= 1
  for (std::size_t k = 1; k <= n_max; ++k)
    if (a[k] != 0) support.push_back(k);
  DenseSeries b(n_max);
  b[0] = a[0];
  Count acc;
  for (std::size_t n = 1; n <= n_max; ++n) {
    acc = 0;
    for (const auto k : support) {
      if (k > n) break;
      mpz_addmul(acc.get_mpz_t(), a[k].get_mpz_t(), b[n - k].get_mpz_t());
    }
    b[n] = (a[0] == 1) ? -acc : acc;
  }
  return b;
}

DenseSeries add(const DenseSeries& a, const DenseSeries& b) {
  require_same_order(a, b);
  DenseSeries out(a.order());
  for (std::size_t n = 0; n <= a.order(); ++n) out[n] = a[n] + b[n];
  return out;
}

DenseSeries sub(const DenseSeries& a, const DenseSeries& b) {
  require_same_order(a, b);
  DenseSeries out(a.order());
  for (std::size_t n = 0; n <= a.order(); ++n) out[n] = a[n] - b[n];
  return out;
}

std::optional<std::size_t> first_mismatch(const DenseSeries& a,
                                          const DenseSeries& b) {
  require_same_order(a, b);
  for (std::size_t n = 0; n <= a.order(); ++n)
    if (a[n] != b[n]) return n;
  return std::nullopt;
}

DenseSeries pochhammer(std::span<const ProductFactor> factors,
                       std::size_t order) {
  DenseSeries acc = DenseSeries::unit(order);
  bool acc_is_unit = true;
  for (const auto& f : factors) {
    if (f.sign != 1 && f.sign != -1)
      throw DomainError("product factor sign must be +1 or -1");
    if (f.residue < 1 || f.modulus < 1 || f.residue > f.modulus)
      throw DomainError("product factor requires 1 <= r <= m");
    if (f.exponent == 0) continue;
    DenseSeries base = expand_base(f, order);
    if (f.exponent < 0) base = inv_trunc(base);
    const auto reps = f.exponent < 0 ? -f.exponent : f.exponent;
    for (std::int32_t i = 0; i < reps; ++i) {
      if (acc_is_unit) {
        acc = base;
        acc_is_unit = false;
      } else {
        acc = mul_trunc(acc, base);
      }
    }
  }
  return acc;
}

std::vector<ProductFactor> family_factors(const FamilySpec& spec) {
  switch (spec.family()) {
    case Family::P:
      return {{-1, 1, 1, -1}};
    case Family::Pd:
      return {{+1, 1, 1, +1}};
    case Family::Po:
      return {{-1, 1, 2, -1}};
    case Family::QQ:
      return {{+1, 1, 2, +1}};
    case Family::OverP:
      return {{+1, 1, 1, +1}, {-1, 1, 1, -1}};
    case Family::OverPd:
      return {{+1, 1, 1, +2}};
    case Family::Bl:
      return {{-1, spec.ell(), spec.ell(), +1}, {-1, 1, 1, -1}};
    case Family::Pcm:
      return {{-1, spec.residue(), spec.modulus(), -1},
              {-1, spec.modulus() - spec.residue(), spec.modulus(), -1}};
  }
  throw DomainError("unknown family");
}

DenseSeries family_series(const FamilySpec& spec, std::size_t order) {
  return pochhammer(family_factors(spec), order);
}

}  // namespace partrec::qseries
