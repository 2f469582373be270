#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "bicirc/permutation.hpp"

namespace bicirc {

/// Base and strong generating set built by deterministic Schreier-Sims.
///
/// Level i holds base point b_i, the strong generators of the pointwise
/// stabilizer of b_0..b_{i-1}, and explicit coset representatives for the
/// orbit of b_i under that stabilizer.
class StabilizerChain {
 public:
  /// `base_prefix` is used as the start of the base; further points are
  /// chosen greedily (first point moved by some generator).
  StabilizerChain(std::size_t degree, std::span<const Permutation> generators,
                  std::span<const std::uint32_t> base_prefix = {});

  /// Extends the group by one more generator.
  void add_generator(const Permutation& g);

  std::size_t degree() const { return degree_; }
  std::size_t depth() const { return levels_.size(); }
  std::vector<std::uint32_t> base() const;
  std::uint32_t base_point(std::size_t level) const { return levels_[level].base_point; }

  /// Generators of the stabilizer of the first `level` base points.
  /// `level == depth()` gives the trivial group (empty list).
  std::span<const Permutation> level_generators(std::size_t level) const;
  const std::vector<std::uint32_t>& basic_orbit(std::size_t level) const {
    return levels_[level].orbit;
  }
  /// Coset representative mapping the base point of `level` to `point`.
  const Permutation& transversal(std::size_t level, std::uint32_t point) const;
  bool in_basic_orbit(std::size_t level, std::uint32_t point) const {
    return levels_[level].rep_index[point] >= 0;
  }

  BigInt order() const;
  bool contains(const Permutation& g) const;
  /// Residue after sifting from `start_level`, and the level it dropped out at
  /// (depth() if it passed every level).
  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t start_level = 0) const;

  /// All strong generators without duplicates.
  std::vector<Permutation> strong_generators() const;

  /// Calls `fn` on every group element, stopping early if it returns false.
  void for_each_element(const std::function<bool(const Permutation&)>& fn) const;

 private:
  struct Level {
    std::uint32_t base_point = 0;
    std::vector<Permutation> generators;
    std::vector<std::uint32_t> orbit;
    std::vector<std::int32_t> rep_index;  // point -> index into reps, -1 if absent
    std::vector<Permutation> reps;
  };

  void rebuild_orbit(Level& level) const;
  void append_level(std::uint32_t base_point);
  std::uint32_t first_moved_point(const Permutation& g) const;
  void schreier_sims(std::size_t start_level);

  std::size_t degree_ = 0;
  std::vector<Level> levels_;
};

}  // namespace bicirc
