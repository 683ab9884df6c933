#include "partrec/catalog.hpp"

#include <functional>

#include "partrec/errors.hpp"

namespace partrec::catalog {
namespace {

using figurate::SparseSignedSeries;
using figurate::ThetaSpec;
using figurate::theta_series;
using recurrence::Domain;
using recurrence::FamilyRefRhs;
using recurrence::Identity;
using recurrence::RhsSpec;
using recurrence::SparseRhs;

namespace theta = figurate::theta;

// Merged constant + squares + doubled squares multiplier
// 1 + sum_j (-1)^j q^(j^2) + sum_j (-1)^j q^(2j^2); no exponent ever
// collides (sqrt 2 irrational).
SparseSignedSeries squares_multiplier() {
  SparseSignedSeries::Branch constant = [](std::int64_t i)
      -> std::optional<SparseSignedSeries::Term> {
    if (i > 0) return std::nullopt;
    return SparseSignedSeries::Term{0, 1};
  };
  auto signed_squares = [](std::int64_t stretch) {
    return SparseSignedSeries::Branch([stretch](std::int64_t i) {
      const std::int64_t j = i + 1;
      return std::optional(SparseSignedSeries::Term{
          stretch * j * j, (j & 1) ? -1 : 1});
    });
  };
  auto lookup = [](std::int64_t e) -> std::int32_t {
    if (e == 0) return 1;
    std::int32_t coeff = 0;
    for (std::int64_t stretch : {std::int64_t{1}, std::int64_t{2}}) {
      if (e % stretch != 0) continue;
      const auto j = figurate::figurate_index(
          figurate::FigurateKind::Square,
          static_cast<std::uint64_t>(e / stretch));
      if (j && *j >= 1) coeff += (*j & 1) ? -1 : 1;
    }
    return coeff;
  };
  return SparseSignedSeries({constant, signed_squares(1), signed_squares(2)},
                            lookup);
}

struct BuilderEntry {
  CatalogEntry info;
  Params defaults;
  std::function<Identity(const Params&)> make;
  bool listed = true;
};

std::int64_t param(const Params& params, const std::string& key) {
  return params.at(key);
}

const std::vector<BuilderEntry>& builders() {
  static const std::vector<BuilderEntry> table = [] {
    std::vector<BuilderEntry> v;
    auto add = [&v](CatalogEntry info, Params defaults,
                    std::function<Identity(const Params&)> make,
                    bool listed = true) {
      v.push_back({std::move(info), std::move(defaults), std::move(make),
                   listed});
    };

    add({"euler-pentagonal",
         "Euler's pentagonal number theorem recurrence for p(n)", ""},
        {}, [](const Params&) {
          return Identity{"euler-pentagonal",
                          theta_series(theta::Euler{1}),
                          FamilySpec::simple(Family::P),
                          1,
                          SparseRhs{theta_series(theta::Delta0{})},
                          Domain::All};
        });

    add({"ewell-triangular",
         "Ewell's triangular-number recurrence: p over q^(j(2j-1)) vs "
         "distinct parts at n/2",
         ""},
        {}, [](const Params&) {
          return Identity{
              "ewell-triangular",
              theta_series(theta::FTheta{1, 3, -1, -1}),
              FamilySpec::simple(Family::P),
              1,
              FamilyRefRhs{FamilySpec::simple(Family::Pd), 2, {}, false},
              Domain::All};
        });

    add({"cks-squares",
         "Choliy-Kolitsch-Sills recurrence over j^2 and 2j^2 offsets; "
         "distinct-odd count at even n",
         ""},
        {}, [](const Params&) {
          return Identity{"cks-squares",
                          squares_multiplier(),
                          FamilySpec::simple(Family::P),
                          1,
                          FamilyRefRhs{FamilySpec::simple(Family::QQ), 1,
                                       figurate::Parity::Even, false},
                          Domain::All};
        });

    add({"cks-alt-squares",
         "Choliy-Kolitsch-Sills alternating-sign square recurrence; "
         "(-1)^n times the distinct-odd count",
         ""},
        {}, [](const Params&) {
          return Identity{
              "cks-alt-squares",
              theta_series(theta::PhiNeg{1}),
              FamilySpec::simple(Family::P),
              1,
              FamilyRefRhs{FamilySpec::simple(Family::QQ), 1, {}, true},
              Domain::All};
        });

    add({"thm1-even",
         "p at half-argument over even-valued triangular offsets counts "
         "distinct parts (even n)",
         ""},
        {}, [](const Params&) {
          return Identity{
              "thm1-even",
              theta_series(theta::EvenValuedTriangular{}),
              FamilySpec::simple(Family::P),
              2,
              FamilyRefRhs{FamilySpec::simple(Family::Pd), 1, {}, false},
              Domain::Even};
        });

    add({"thm1-odd",
         "p at half-argument over odd-valued triangular offsets counts "
         "odd parts (odd n)",
         ""},
        {}, [](const Params&) {
          return Identity{
              "thm1-odd",
              theta_series(theta::OddValuedTriangular{}),
              FamilySpec::simple(Family::P),
              2,
              FamilyRefRhs{FamilySpec::simple(Family::Po), 1, {}, false},
              Domain::Odd};
        });

    add({"thm2-overpartition",
         "overpartition recurrence over square offsets with doubled signs",
         ""},
        {}, [](const Params&) {
          return Identity{"thm2-overpartition",
                          theta_series(theta::PhiNeg{1}),
                          FamilySpec::simple(Family::OverP),
                          1,
                          SparseRhs{theta_series(theta::Delta0{})},
                          Domain::All};
        });

    add({"thm3-overpartition-pd",
         "pentagonal recurrence for overpartitions; distinct-part count",
         ""},
        {}, [](const Params&) {
          return Identity{
              "thm3-overpartition-pd",
              theta_series(theta::Euler{1}),
              FamilySpec::simple(Family::OverP),
              1,
              FamilyRefRhs{FamilySpec::simple(Family::Pd), 1, {}, false},
              Domain::All};
        });

    add({"thm4-overpartition-distinct",
         "doubled-pentagonal recurrence for overpartitions; distinct "
         "overpartition count",
         ""},
        {}, [](const Params&) {
          return Identity{
              "thm4-overpartition-distinct",
              theta_series(theta::Euler{2}),
              FamilySpec::simple(Family::OverP),
              1,
              FamilyRefRhs{FamilySpec::simple(Family::OverPd), 1, {}, false},
              Domain::All};
        });

    add({"thm5-qq",
         "distinct-odd recurrence over quadrupled pentagonal offsets; "
         "triangular indicator",
         ""},
        {}, [](const Params&) {
          return Identity{"thm5-qq",
                          theta_series(theta::Euler{4}),
                          FamilySpec::simple(Family::QQ),
                          1,
                          SparseRhs{theta_series(theta::Triangular{1})},
                          Domain::All};
        });

    add({"ono-thm1",
         "Ono-Robbins-Wilson: distinct-part recurrence over doubled "
         "pentagonal offsets; triangular indicator",
         ""},
        {}, [](const Params&) {
          return Identity{"ono-thm1",
                          theta_series(theta::Euler{2}),
                          FamilySpec::simple(Family::Pd),
                          1,
                          SparseRhs{theta_series(theta::Triangular{1})},
                          Domain::All};
        });

    add({"thm6-po",
         "odd-part recurrence over j(3j+-2) offsets; indicator of 3 times "
         "a triangular number",
         ""},
        {}, [](const Params&) {
          return Identity{"thm6-po",
                          theta_series(theta::FTheta{1, 5, -1, -1}),
                          FamilySpec::simple(Family::Po),
                          1,
                          SparseRhs{theta_series(theta::Triangular{3})},
                          Domain::All};
        });

    add({"thm7-ell-regular",
         "p over ell-scaled pentagonal offsets counts ell-regular "
         "partitions",
         "ell >= 1 (default 2)"},
        {{"ell", 2}}, [](const Params& p) {
          const auto ell = param(p, "ell");
          if (ell < 1)
            throw DomainError("thm7-ell-regular requires ell >= 1");
          return Identity{
              "thm7-ell-regular",
              theta_series(theta::Euler{ell}),
              FamilySpec::simple(Family::P),
              1,
              FamilyRefRhs{FamilySpec::bl(ell), 1, {}, false},
              Domain::All};
        });

    add({"thm8-pm",
         "recurrence for partitions into parts = +-c (mod m); signed "
         "m-scaled pentagonal indicator",
         "m >= 3, 1 <= c <= m-1, 2c != m (default m=5, c=1)"},
        {{"m", 5}, {"c", 1}}, [](const Params& p) {
          const auto m = param(p, "m");
          const auto c = param(p, "c");
          return Identity{"thm8-pm",
                          figurate::thm38_multiplier(m, c),
                          FamilySpec::pcm(m, c),
                          1,
                          SparseRhs{theta_series(theta::Euler{m})},
                          Domain::All};
        });

    auto add_thm8_alias = [&add](const std::string& id, std::string citation,
                                 std::int64_t m, std::int64_t c, bool listed) {
      add({id, std::move(citation), ""}, {},
          [id, m, c](const Params&) {
            return Identity{id,
                            figurate::thm38_multiplier(m, c),
                            FamilySpec::pcm(m, c),
                            1,
                            SparseRhs{theta_series(theta::Euler{m})},
                            Domain::All};
          },
          listed);
    };

    add_thm8_alias(
        "cor1-R1",
        "Rogers-Ramanujan parts = +-1 (mod 5); j(5j+-3)/2 offsets", 5, 1,
        true);
    add_thm8_alias("cor1-R2-direct",
                   "Rogers-Ramanujan parts = +-2 (mod 5), direct instance", 5,
                   2, false);

    add({"cor1-R2-pentagonal",
         "Rogers-Ramanujan parts = +-2 (mod 5) over pentagonal offsets; "
         "signed heptagonal indicator",
         ""},
        {}, [](const Params&) {
          return Identity{"cor1-R2-pentagonal",
                          theta_series(theta::Euler{1}),
                          FamilySpec::pcm(5, 2),
                          1,
                          SparseRhs{theta_series(theta::SignedHeptagonal{})},
                          Domain::All};
        });

    add_thm8_alias("cor2-s1", "parts = +-1 (mod 6); j(3j+-2) offsets", 6, 1,
                   true);
    add_thm8_alias("cor2-s2", "parts = +-2 (mod 6); j(3j+-1) offsets", 6, 2,
                   true);

    return v;
  }();
  return table;
}

const BuilderEntry& find(const std::string& id) {
  for (const auto& entry : builders())
    if (entry.info.id == id) return entry;
  throw UsageError("unknown catalog id '" + id + "'");
}

}  // namespace

const std::vector<CatalogEntry>& entries() {
  static const std::vector<CatalogEntry> listed = [] {
    std::vector<CatalogEntry> v;
    for (const auto& entry : builders())
      if (entry.listed) v.push_back(entry.info);
    return v;
  }();
  return listed;
}

std::vector<std::string> all_ids() {
  std::vector<std::string> ids;
  ids.reserve(entries().size());
  for (const auto& entry : entries()) ids.push_back(entry.id);
  return ids;
}

recurrence::Identity build(const std::string& id, const Params& params) {
  const auto& entry = find(id);
  Params merged = entry.defaults;
  for (const auto& [key, value] : params) {
    if (entry.defaults.find(key) == entry.defaults.end())
      throw UsageError("catalog id '" + id + "' does not take parameter '" +
                       key + "'");
    merged[key] = value;
  }
  return entry.make(merged);
}

Params default_params(const std::string& id) { return find(id).defaults; }

}  // namespace partrec::catalog
