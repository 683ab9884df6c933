#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace partrec {

// Partition families with a product generating function:
//   P       all partitions                    1/(q;q)oo
//   Pd      distinct parts                    prod (1+q^k)
//   Po      odd parts                         1/(q;q^2)oo
//   QQ      distinct odd parts                prod (1+q^(2k-1))
//   OverP   overpartitions                    prod (1+q^k)/(1-q^k)
//   OverPd  overpartitions into distinct      prod (1+q^k)^2
//   Bl      no part divisible by ell          (q^l;q^l)oo/(q;q)oo
//   Pcm     parts = +-c (mod m)               1/((q^c;q^m)oo (q^(m-c);q^m)oo)
enum class Family { P, Pd, Po, QQ, OverP, OverPd, Bl, Pcm };

class FamilySpec {
 public:
  static FamilySpec simple(Family family);
  static FamilySpec bl(std::int64_t ell);           // ell >= 1
  // m >= 3, 1 <= c <= m-1, 2c != m; stored with canonical c = min(c, m-c).
  static FamilySpec pcm(std::int64_t m, std::int64_t c);

  Family family() const { return family_; }
  std::int64_t ell() const { return ell_; }
  std::int64_t modulus() const { return m_; }
  std::int64_t residue() const { return c_; }

  std::string name() const;  // "P", "Bl(ell=2)", "Pcm(m=5,c=1)"

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;

 private:
  FamilySpec(Family family, std::int64_t ell, std::int64_t m, std::int64_t c)
      : family_(family), ell_(ell), m_(m), c_(c) {}

  Family family_;
  std::int64_t ell_ = 0;
  std::int64_t m_ = 0;
  std::int64_t c_ = 0;
};

// Family from its CLI name ("P", "Pd", ..., "Bl", "Pcm") plus parameters
// ("ell" for Bl; "m" and "c" for Pcm). Unknown names or leftover
// parameters raise UsageError; out-of-range values raise DomainError.
FamilySpec parse_family(std::string_view name,
                        const std::map<std::string, std::int64_t>& params);

}  // namespace partrec
