#include "partrec/selftest.hpp"

#include <array>

#include "partrec/qseries.hpp"

namespace partrec::selftest {
namespace {

namespace theta = figurate::theta;
using qseries::DenseSeries;
using qseries::ProductFactor;

// Triple-product expansion of f(a,b) with a = sa*q^u, b = sb*q^v and
// sa*sb = +1:  (-a;ab)oo (-b;ab)oo (ab;ab)oo.
std::vector<ProductFactor> triple_product_factors(std::int64_t u,
                                                  std::int64_t v,
                                                  std::int32_t sa,
                                                  std::int32_t sb) {
  const std::int64_t w = u + v;
  return {{sa, u, w, +1}, {sb, v, w, +1}, {-1, w, w, +1}};
}

DenseSeries alternate_signs(const DenseSeries& s) {
  DenseSeries out(s.order());
  for (std::size_t n = 0; n <= s.order(); ++n)
    out[n] = (n % 2 == 0) ? s[n] : -s[n];
  return out;
}

CheckResult compare(std::string name, const DenseSeries& a,
                    const DenseSeries& b) {
  const auto mismatch = qseries::first_mismatch(a, b);
  return {std::move(name), !mismatch.has_value(), mismatch};
}

}  // namespace

std::vector<CheckResult> run(const Options& options) {
  const auto order = options.order;
  std::vector<CheckResult> results;

  // Euler: (q;q)oo equals the signed pentagonal series.
  {
    auto pentagonal =
        qseries::dense_from_sparse(figurate::theta_series(theta::Euler{1}),
                                   order);
    if (options.corrupt_pentagonal && order >= 5) pentagonal[5] = 0;
    const std::array<ProductFactor, 1> eta{{{-1, 1, 1, +1}}};
    results.push_back(compare("pentagonal-number-theorem",
                              qseries::pochhammer(eta, order), pentagonal));
  }

  // Jacobi triple product at the univariate instantiations in use.
  struct JtpCase {
    std::int64_t u, v;
    std::int32_t sa, sb;
  };
  for (const auto& c : {JtpCase{1, 3, +1, +1}, JtpCase{1, 5, -1, -1},
                        JtpCase{4, 1, -1, -1}, JtpCase{3, 2, -1, -1},
                        JtpCase{5, 1, -1, -1}, JtpCase{4, 2, -1, -1}}) {
    const auto name = "triple-product-u" + std::to_string(c.u) + "-v" +
                      std::to_string(c.v) + (c.sa > 0 ? "-pp" : "-mm");
    const auto factors = triple_product_factors(c.u, c.v, c.sa, c.sb);
    results.push_back(compare(
        name, qseries::pochhammer(factors, order),
        qseries::dense_from_sparse(
            figurate::theta_series(theta::FTheta{c.u, c.v, c.sa, c.sb}),
            order)));
  }

  // psi(q) = (q^2;q^2)oo / (q;q^2)oo.
  {
    const std::array<ProductFactor, 2> factors{
        {{-1, 2, 2, +1}, {-1, 1, 2, -1}}};
    results.push_back(compare(
        "psi-eta-quotient", qseries::pochhammer(factors, order),
        qseries::dense_from_sparse(
            figurate::theta_series(theta::FTheta{1, 3, +1, +1}), order)));
  }

  // prod (1-q^(mk-c))(1-q^(mk-(m-c)))(1-q^(mk)) equals the signed
  // (mj^2+(m-2c)j)/2 series, per modulus/residue pair in use.
  for (const auto& [m, c] :
       std::array<std::array<std::int64_t, 2>, 7>{{{5, 1},
                                                   {5, 2},
                                                   {6, 1},
                                                   {6, 2},
                                                   {7, 1},
                                                   {7, 2},
                                                   {7, 3}}}) {
    const auto name =
        "pm-multiplier-product-m" + std::to_string(m) + "c" +
        std::to_string(c);
    const std::array<ProductFactor, 3> factors{{{-1, m - c, m, +1},
                                                {-1, c, m, +1},
                                                {-1, m, m, +1}}};
    results.push_back(compare(
        name, qseries::pochhammer(factors, order),
        qseries::dense_from_sparse(figurate::thm38_multiplier(m, c), order)));
  }

  // Even/odd-valued triangular split of psi.
  {
    const auto psi = qseries::dense_from_sparse(
        figurate::theta_series(theta::FTheta{1, 3, +1, +1}), order);
    const auto even = qseries::dense_from_sparse(
        figurate::theta_series(theta::EvenValuedTriangular{}), order);
    const auto odd = qseries::dense_from_sparse(
        figurate::theta_series(theta::OddValuedTriangular{}), order);
    results.push_back(
        compare("triangular-split-sum", psi, qseries::add(even, odd)));
    results.push_back(compare("triangular-split-difference",
                              alternate_signs(psi),
                              qseries::sub(even, odd)));
  }

  return results;
}

bool all_ok(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.ok) return false;
  return true;
}

}  // namespace partrec::selftest
