#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "bicirc/field.hpp"

namespace bicirc {

/// 1-spaces and hyperplanes of GF(q)^d. Both are stored as normalized
/// vectors (first non-zero coordinate 1) in lexicographic order; a
/// hyperplane is represented by its normal vector.
class ProjectiveIncidence {
 public:
  std::size_t dimension() const { return d_; }
  const FieldTable& field() const { return field_; }
  std::size_t point_count() const { return points_.size(); }
  const std::vector<std::uint32_t>& point(std::size_t i) const { return points_[i]; }
  const std::vector<std::uint32_t>& hyperplane(std::size_t i) const { return points_[i]; }
  /// Point i lies on hyperplane j iff their dot product is zero.
  bool incident(std::size_t point, std::size_t hyperplane) const;

  friend ProjectiveIncidence projective_incidence(std::size_t d, std::uint32_t q);

 private:
  std::size_t d_ = 0;
  FieldTable field_;
  std::vector<std::vector<std::uint32_t>> points_;
  std::vector<bool> incidence_;
};

/// d >= 3, q a prime power, (q^d-1)/(q-1) <= 10^4.
ProjectiveIncidence projective_incidence(std::size_t d, std::uint32_t q);

}  // namespace bicirc
