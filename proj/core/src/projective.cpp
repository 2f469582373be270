#include "bicirc/projective.hpp"

#include <stdexcept>

namespace bicirc {

bool ProjectiveIncidence::incident(std::size_t point, std::size_t hyperplane) const {
  return incidence_[point * points_.size() + hyperplane];
}

ProjectiveIncidence projective_incidence(std::size_t d, std::uint32_t q) {
  if (d < 3) throw std::invalid_argument("projective incidence needs d >= 3");
  ProjectiveIncidence pi;
  pi.d_ = d;
  pi.field_ = make_field(q);
  std::uint64_t count = 0, power = 1;
  for (std::size_t i = 0; i < d; ++i) {
    count += power;
    power *= q;
    if (count > 10'000) throw std::invalid_argument("projective space too large");
  }
  // Normalized vectors: zeros, then a 1, then free coordinates. Ordered by the
  // position of the leading 1, then lexicographically in the free part.
  for (std::size_t lead = d; lead-- > 0;) {
    const std::size_t free = lead;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < free; ++i) total *= q;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::vector<std::uint32_t> v(d, 0);
      v[d - 1 - lead] = 1;
      std::uint64_t r = idx;
      for (std::size_t i = d; i-- > d - free;) {
        v[i] = static_cast<std::uint32_t>(r % q);
        r /= q;
      }
      pi.points_.push_back(std::move(v));
    }
  }
  const auto n = pi.points_.size();
  pi.incidence_.assign(n * n, false);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::uint32_t dot = 0;
      for (std::size_t c = 0; c < d; ++c)
        dot = pi.field_.add(dot, pi.field_.mul(pi.points_[i][c], pi.points_[j][c]));
      pi.incidence_[i * n + j] = dot == 0;
    }
  return pi;
}

}  // namespace bicirc
