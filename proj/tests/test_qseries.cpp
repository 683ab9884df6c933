#include "partrec/qseries.hpp"

#include <functional>
#include <random>

#include "doctest.h"
#include "oracle_tables.hpp"
#include "partrec/errors.hpp"

using namespace partrec;
using namespace partrec::qseries;
namespace theta = figurate::theta;

namespace {

DenseSeries from_ints(std::vector<long> values) {
  DenseSeries s(values.size() - 1);
  for (std::size_t i = 0; i < values.size(); ++i) s[i] = values[i];
  return s;
}

std::vector<long> to_ints(const DenseSeries& s) {
  std::vector<long> out;
  for (std::size_t i = 0; i <= s.order(); ++i) out.push_back(s[i].get_si());
  return out;
}

// Test-local brute force: partitions of n into distinct odd parts,
// enumerated as strictly decreasing sequences. Independent of the
// library's counting module.
long count_distinct_odd(long n, long max_part) {
  if (n == 0) return 1;
  long total = 0;
  for (long v = std::min(n, max_part); v >= 1; --v)
    if (v % 2 == 1) total += count_distinct_odd(n - v, v - 1);
  return total;
}

// Test-local brute force over an explicit allowed-part list, unbounded
// multiplicity.
long count_with_parts(long n, const std::vector<long>& parts,
                      std::size_t from = 0) {
  if (n == 0) return 1;
  long total = 0;
  for (std::size_t i = from; i < parts.size(); ++i)
    if (parts[i] <= n) total += count_with_parts(n - parts[i], parts, i);
  return total;
}

}  // namespace

TEST_CASE("dense_from_sparse") {
  const auto euler = dense_from_sparse(
      figurate::theta_series(theta::Euler{1}), 7);
  CHECK(to_ints(euler) == std::vector<long>{1, -1, -1, 0, 0, 1, 0, 1});

  const auto delta = dense_from_sparse(
      figurate::theta_series(theta::Delta0{}), 3);
  CHECK(to_ints(delta) == std::vector<long>{1, 0, 0, 0});

  const auto tri3 = dense_from_sparse(
      figurate::theta_series(theta::Triangular{3}), 9);
  CHECK(to_ints(tri3) == std::vector<long>{1, 0, 0, 1, 0, 0, 0, 0, 0, 1});
}

TEST_CASE("mul_trunc basics") {
  const auto geom = from_ints({1, 1, 1});
  CHECK(to_ints(mul_trunc(geom, geom)) == std::vector<long>{1, 2, 3});
  CHECK_THROWS_AS(mul_trunc(geom, from_ints({1, 1})), UsageError);
}

TEST_CASE("series times its eta factor collapses to one") {
  const std::size_t order = 300;
  const auto p = family_series(FamilySpec::simple(Family::P), order);
  const auto euler = dense_from_sparse(
      figurate::theta_series(theta::Euler{1}), order);
  CHECK(mul_trunc(p, euler) == DenseSeries::unit(order));

  const auto overp = family_series(FamilySpec::simple(Family::OverP), order);
  const auto phi = dense_from_sparse(
      figurate::theta_series(theta::PhiNeg{1}), order);
  CHECK(mul_trunc(overp, phi) == DenseSeries::unit(order));
}

TEST_CASE("inv_trunc") {
  CHECK(to_ints(inv_trunc(from_ints({1, -1, 0, 0, 0}))) ==
        std::vector<long>{1, 1, 1, 1, 1});

  const std::array<ProductFactor, 1> eta{{{-1, 1, 1, +1}}};
  const auto inv = inv_trunc(pochhammer(eta, 4));
  CHECK(to_ints(inv) == std::vector<long>{1, 1, 2, 3, 5});

  CHECK_THROWS_AS(inv_trunc(from_ints({2, 1})), DomainError);
  CHECK_THROWS_AS(inv_trunc(from_ints({0, 1})), DomainError);
}

TEST_CASE("inv_trunc is an involution on random unit series") {
  std::mt19937 rng(20240517);
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (int trial = 0; trial < 25; ++trial) {
    DenseSeries a(30);
    a[0] = (trial % 2 == 0) ? 1 : -1;
    for (std::size_t i = 1; i <= 30; ++i) a[i] = coeff(rng);
    CHECK(inv_trunc(inv_trunc(a)) == a);
    CHECK(mul_trunc(a, inv_trunc(a)) == DenseSeries::unit(30));
  }
}

TEST_CASE("mul_trunc commutative and associative") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coeff(-4, 4);
  auto random_series = [&] {
    DenseSeries s(25);
    for (std::size_t i = 0; i <= 25; ++i) s[i] = coeff(rng);
    return s;
  };
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_series();
    const auto b = random_series();
    const auto c = random_series();
    CHECK(mul_trunc(a, b) == mul_trunc(b, a));
    CHECK(mul_trunc(mul_trunc(a, b), c) == mul_trunc(a, mul_trunc(b, c)));
  }
}

TEST_CASE("pochhammer") {
  const std::array<ProductFactor, 1> inv_eta{{{-1, 1, 1, -1}}};
  CHECK(to_ints(pochhammer(inv_eta, 4)) == std::vector<long>{1, 1, 2, 3, 5});

  const std::array<ProductFactor, 1> eta{{{-1, 1, 1, +1}}};
  CHECK(to_ints(pochhammer(eta, 7)) ==
        std::vector<long>{1, -1, -1, 0, 0, 1, 0, 1});

  const std::array<ProductFactor, 1> distinct_odd{{{+1, 1, 2, +1}}};
  const auto qq = pochhammer(distinct_odd, 10);
  CHECK(qq[10] == 2);
  for (long n = 0; n <= 10; ++n)
    CHECK(qq[static_cast<std::size_t>(n)] == count_distinct_odd(n, n));

  CHECK_THROWS_AS(pochhammer(std::array<ProductFactor, 1>{{{-1, 3, 2, 1}}}, 5),
                  DomainError);
}

TEST_CASE("family series examples") {
  const auto overp = family_series(FamilySpec::simple(Family::OverP), 3);
  CHECK(to_ints(overp) == std::vector<long>{1, 2, 4, 8});

  const auto r2 = family_series(FamilySpec::pcm(5, 2), 8);
  CHECK(r2[8] == 3);
  CHECK(r2[8] == count_with_parts(8, {2, 3, 7, 8}));

  const auto b1 = family_series(FamilySpec::bl(1), 6);
  CHECK(to_ints(b1) == std::vector<long>{1, 0, 0, 0, 0, 0, 0});
}

TEST_CASE("family series matches frozen oracle prefixes") {
  for (const auto& [key, expected] : oracle::family_prefixes()) {
    FamilySpec spec = [&key = key] {
      if (key.starts_with("Bl"))
        return FamilySpec::bl(std::stoll(key.substr(2)));
      if (key.starts_with("Pcm")) {
        const auto sep = key.find('_');
        return FamilySpec::pcm(std::stoll(key.substr(3, sep - 3)),
                               std::stoll(key.substr(sep + 1)));
      }
      return parse_family(key, {});
    }();
    const auto series = family_series(spec, expected.size() - 1);
    for (std::size_t n = 0; n < expected.size(); ++n) {
      REQUIRE(series[n] == expected[n]);
    }
  }
}

TEST_CASE("first_mismatch") {
  const auto a = from_ints({1, 1});
  CHECK(!first_mismatch(a, a));
  CHECK(first_mismatch(a, from_ints({1, 2})) == 1);
  CHECK_THROWS_AS(first_mismatch(a, from_ints({1})), UsageError);

  // Euler's identity: distinct parts vs odd parts
  const std::size_t order = 200;
  const auto pd = family_series(FamilySpec::simple(Family::Pd), order);
  const auto po = family_series(FamilySpec::simple(Family::Po), order);
  CHECK(!first_mismatch(pd, po));
}

TEST_CASE("family spec validation and names") {
  CHECK_THROWS_AS(FamilySpec::bl(0), DomainError);
  CHECK_THROWS_AS(FamilySpec::pcm(2, 1), DomainError);
  CHECK_THROWS_AS(FamilySpec::pcm(6, 3), DomainError);
  CHECK_THROWS_AS(FamilySpec::pcm(5, 5), DomainError);
  CHECK(FamilySpec::pcm(5, 3) == FamilySpec::pcm(5, 2));  // canonical c
  CHECK(FamilySpec::pcm(5, 1).name() == "Pcm(m=5,c=1)");
  CHECK(FamilySpec::bl(2).name() == "Bl(ell=2)");

  CHECK(parse_family("P", {}) == FamilySpec::simple(Family::P));
  CHECK(parse_family("Bl", {{"ell", 3}}) == FamilySpec::bl(3));
  CHECK(parse_family("Pcm", {{"m", 5}, {"c", 1}}) == FamilySpec::pcm(5, 1));
  CHECK_THROWS_AS(parse_family("nope", {}), UsageError);
  CHECK_THROWS_AS(parse_family("P", {{"ell", 3}}), UsageError);
  CHECK_THROWS_AS(parse_family("Bl", {}), UsageError);
}

TEST_CASE("p(1000) from the series oracle") {
  const auto p = family_series(FamilySpec::simple(Family::P), 1000);
  CHECK(p[1000] == Count(oracle::kP1000));
}
