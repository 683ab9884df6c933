#include "partrec/catalog.hpp"

#include <set>

#include "doctest.h"
#include "partrec/errors.hpp"
#include "partrec/qseries.hpp"

using namespace partrec;
using namespace partrec::catalog;

namespace {

std::vector<std::int64_t> multiplier_exponents(const recurrence::Identity& i,
                                               std::int64_t bound) {
  std::vector<std::int64_t> out;
  for (const auto& t : i.multiplier.terms_up_to(bound))
    out.push_back(t.exponent);
  return out;
}

bool same_identity(const recurrence::Identity& a,
                   const recurrence::Identity& b) {
  if (!(a.family == b.family) || a.scale != b.scale || a.domain != b.domain)
    return false;
  if (a.multiplier.terms_up_to(2000) != b.multiplier.terms_up_to(2000))
    return false;
  const auto* sa = std::get_if<recurrence::SparseRhs>(&a.rhs);
  const auto* sb = std::get_if<recurrence::SparseRhs>(&b.rhs);
  if ((sa == nullptr) != (sb == nullptr)) return false;
  if (sa) return sa->series.terms_up_to(2000) == sb->series.terms_up_to(2000);
  const auto& ra = std::get<recurrence::FamilyRefRhs>(a.rhs);
  const auto& rb = std::get<recurrence::FamilyRefRhs>(b.rhs);
  return ra.family == rb.family && ra.arg_divisor == rb.arg_divisor &&
         ra.parity_mask == rb.parity_mask && ra.alternating == rb.alternating;
}

}  // namespace

TEST_CASE("catalog listing") {
  const auto ids = all_ids();
  CHECK(ids.size() == 18);
  CHECK(std::set<std::string>(ids.begin(), ids.end()).size() == ids.size());
  CHECK(std::find(ids.begin(), ids.end(), "euler-pentagonal") != ids.end());
  CHECK(std::find(ids.begin(), ids.end(), "cor2-s2") != ids.end());
  // stable order: the plain pentagonal recurrence leads
  CHECK(ids.front() == "euler-pentagonal");
}

TEST_CASE("multiplier offsets as published") {
  CHECK(multiplier_exponents(build("euler-pentagonal"), 15) ==
        std::vector<std::int64_t>{0, 1, 2, 5, 7, 12, 15});
  CHECK(multiplier_exponents(build("ewell-triangular"), 21) ==
        std::vector<std::int64_t>{0, 1, 3, 6, 10, 15, 21});
  CHECK(multiplier_exponents(build("cks-squares"), 18) ==
        std::vector<std::int64_t>{0, 1, 2, 4, 8, 9, 16, 18});
  CHECK(multiplier_exponents(build("cks-alt-squares"), 16) ==
        std::vector<std::int64_t>{0, 1, 4, 9, 16});
  CHECK(multiplier_exponents(build("thm1-even"), 78) ==
        std::vector<std::int64_t>{0, 6, 10, 28, 36, 66, 78});
  CHECK(multiplier_exponents(build("thm1-odd"), 55) ==
        std::vector<std::int64_t>{1, 3, 15, 21, 45, 55});
  CHECK(multiplier_exponents(build("thm4-overpartition-distinct"), 14) ==
        std::vector<std::int64_t>{0, 2, 4, 10, 14});
  CHECK(multiplier_exponents(build("thm5-qq"), 60) ==
        std::vector<std::int64_t>{0, 4, 8, 20, 28, 48, 60});
  CHECK(multiplier_exponents(build("thm6-po"), 16) ==
        std::vector<std::int64_t>{0, 1, 5, 8, 16});
  CHECK(multiplier_exponents(build("thm8-pm", {{"m", 5}, {"c", 1}}), 13) ==
        std::vector<std::int64_t>{0, 1, 4, 7, 13});
  CHECK(multiplier_exponents(build("cor2-s1"), 16) ==
        std::vector<std::int64_t>{0, 1, 5, 8, 16});
  CHECK(multiplier_exponents(build("cor2-s2"), 14) ==
        std::vector<std::int64_t>{0, 2, 4, 10, 14});
}

TEST_CASE("build validation") {
  CHECK_THROWS_AS(build("bogus-id"), UsageError);
  CHECK_THROWS_AS(build("thm8-pm", {{"m", 6}, {"c", 3}}), DomainError);
  CHECK_THROWS_AS(build("thm7-ell-regular", {{"ell", 0}}), DomainError);
  CHECK_THROWS_AS(build("euler-pentagonal", {{"ell", 2}}), UsageError);
  CHECK_THROWS_AS(build("thm8-pm", {{"ell", 2}}), UsageError);
  CHECK(default_params("thm7-ell-regular").at("ell") == 2);
  CHECK(default_params("thm8-pm").at("m") == 5);
}

TEST_CASE("aliases build identical identities") {
  CHECK(same_identity(build("cor1-R1"), build("thm8-pm", {{"m", 5},
                                                          {"c", 1}})));
  CHECK(same_identity(build("cor1-R2-direct"),
                      build("thm8-pm", {{"m", 5}, {"c", 2}})));
  CHECK(same_identity(build("cor2-s1"), build("thm8-pm", {{"m", 6},
                                                          {"c", 1}})));
  CHECK(same_identity(build("cor2-s2"), build("thm8-pm", {{"m", 6},
                                                          {"c", 2}})));
  // the direct instance is buildable but intentionally not listed
  const auto ids = all_ids();
  CHECK(std::find(ids.begin(), ids.end(), "cor1-R2-direct") == ids.end());
}

TEST_CASE("every listed identity holds on small ranges") {
  for (const auto& id : all_ids()) {
    CAPTURE(id);
    const auto ident = build(id);
    CHECK(recurrence::verify(ident, 30, recurrence::Oracle::Enum).ok());
    CHECK(!recurrence::series_verify(ident, 300));
  }
}

TEST_CASE("thm8 multiplier equals its triple product to order 500") {
  for (const auto& [m, c] : std::vector<std::pair<std::int64_t, std::int64_t>>{
           {5, 1}, {5, 2}, {6, 1}, {6, 2}, {7, 1}, {7, 2}, {7, 3}}) {
    const auto ident = build("thm8-pm", {{"m", m}, {"c", c}});
    const std::array<qseries::ProductFactor, 3> factors{
        {{-1, m - c, m, +1}, {-1, c, m, +1}, {-1, m, m, +1}}};
    CHECK(!qseries::first_mismatch(
        qseries::dense_from_sparse(ident.multiplier, 500),
        qseries::pochhammer(factors, 500)));
  }
}
