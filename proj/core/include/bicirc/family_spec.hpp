#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace bicirc {

struct FamilySpec;

namespace fam {

/// K_{m[n]}: m parts of size n. K_n is (n, 1); K_{n,n} is (2, n).
struct CompleteMultipartite {
  std::uint32_t m = 0, n = 0;
  friend bool operator==(const CompleteMultipartite&, const CompleteMultipartite&) = default;
};
struct KnnMinusMatching {
  std::uint32_t n = 0;
  friend bool operator==(const KnnMinusMatching&, const KnnMinusMatching&) = default;
};
struct Hamming {
  std::uint32_t d = 0, r = 0;
  friend bool operator==(const Hamming&, const Hamming&) = default;
};
struct FoldedCube {
  std::uint32_t d = 0;
  friend bool operator==(const FoldedCube&, const FoldedCube&) = default;
};
/// The 5-regular Clebsch graph (isomorphic to the folded 5-cube).
struct Clebsch {
  friend bool operator==(const Clebsch&, const Clebsch&) = default;
};
struct Petersen {
  friend bool operator==(const Petersen&, const Petersen&) = default;
};
struct CayCyclic {
  std::uint32_t n = 0;
  std::vector<std::uint32_t> s;
  friend bool operator==(const CayCyclic&, const CayCyclic&) = default;
};
/// Circulant on Z_p whose connection set is the subgroup of order e of Z_p^*.
struct CayPE {
  std::uint32_t p = 0, e = 0;
  friend bool operator==(const CayPE&, const CayPE&) = default;
};
struct G2p {
  std::uint32_t p = 0, r = 0;
  friend bool operator==(const G2p&, const G2p&) = default;
};
struct G2pr {
  std::uint32_t p = 0, r = 0;
  friend bool operator==(const G2pr&, const G2pr&) = default;
};
/// Point-hyperplane incidence graph of GF(q)^d (non-incidence when primed).
struct BPG {
  std::uint32_t d = 0, q = 0;
  bool primed = false;
  friend bool operator==(const BPG&, const BPG&) = default;
};
struct BH11prime {
  friend bool operator==(const BH11prime&, const BH11prime&) = default;
};
struct GenPetersen {
  std::uint32_t n = 0, r = 0;
  friend bool operator==(const GenPetersen&, const GenPetersen&) = default;
};
struct BC {
  std::uint32_t n = 0;
  std::vector<std::uint32_t> l, m, r;
  friend bool operator==(const BC&, const BC&) = default;
};
/// Cayley graph of D_2n with connection set {a^s : s in rot} and {b a^t : t in ref}.
struct CayDihedral {
  std::uint32_t n = 0;
  std::vector<std::uint32_t> rot, ref;
  friend bool operator==(const CayDihedral&, const CayDihedral&) = default;
};
struct GammaNK {
  std::uint32_t n = 0, k = 0, r = 0;
  friend bool operator==(const GammaNK&, const GammaNK&) = default;
};
struct Complement {
  std::shared_ptr<const FamilySpec> inner;
};
struct DoubleCover {
  std::shared_ptr<const FamilySpec> inner;
};

}  // namespace fam

struct FamilySpec {
  using Variant =
      std::variant<fam::CompleteMultipartite, fam::KnnMinusMatching, fam::Hamming, fam::FoldedCube,
                   fam::Clebsch, fam::Petersen, fam::CayCyclic, fam::CayPE, fam::G2p, fam::G2pr,
                   fam::BPG, fam::BH11prime, fam::GenPetersen, fam::BC, fam::CayDihedral,
                   fam::GammaNK, fam::Complement, fam::DoubleCover>;
  Variant value;

  FamilySpec() = default;
  template <typename T>
  FamilySpec(T v) : value(std::move(v)) {}

  /// Parseable text such as "GP(24,5)" or "BC(6;[1,5];[0,1,5];[2,4])".
  std::string to_string() const;
  /// Short human name ("K_{3,3}", "Petersen", "G(22,5)").
  std::string display_name() const;

  /// Throws ParseError.
  static FamilySpec parse(std::string_view text);
};

bool operator==(const FamilySpec& a, const FamilySpec& b);

FamilySpec complement_of(FamilySpec inner);
FamilySpec double_cover_of(FamilySpec inner);

}  // namespace bicirc
