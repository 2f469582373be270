#include "bicirc/stabilizer_chain.hpp"

#include <algorithm>
#include <stdexcept>

namespace bicirc {

StabilizerChain::StabilizerChain(std::size_t degree, std::span<const Permutation> generators,
                                 std::span<const std::uint32_t> base_prefix)
    : degree_(degree) {
  std::vector<Permutation> gens;
  for (const auto& g : generators) {
    if (g.degree() != degree) throw std::invalid_argument("generator degree mismatch");
    if (!g.is_identity()) gens.push_back(g);
  }
  for (auto b : base_prefix) {
    if (b >= degree) throw std::invalid_argument("base point out of range");
    append_level(b);
  }
  for (const auto& g : gens) {
    const bool fixes_base = std::all_of(levels_.begin(), levels_.end(),
                                        [&](const Level& l) { return g[l.base_point] == l.base_point; });
    if (fixes_base) append_level(first_moved_point(g));
  }
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    for (const auto& g : gens) {
      bool fixes_prefix = true;
      for (std::size_t j = 0; j < i && fixes_prefix; ++j)
        fixes_prefix = g[levels_[j].base_point] == levels_[j].base_point;
      if (fixes_prefix) levels_[i].generators.push_back(g);
    }
    rebuild_orbit(levels_[i]);
  }
  if (!levels_.empty()) schreier_sims(levels_.size() - 1);
}

void StabilizerChain::add_generator(const Permutation& g) {
  if (g.degree() != degree_) throw std::invalid_argument("generator degree mismatch");
  if (contains(g)) return;
  std::size_t last = 0;
  // g is non-trivial and not a member, so sifting cannot pass every level as identity.
  bool fixes_all = true;
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    if (g[levels_[i].base_point] != levels_[i].base_point) {
      fixes_all = false;
      last = i;
      break;
    }
  }
  if (fixes_all) {
    append_level(first_moved_point(g));
    last = levels_.size() - 1;
  }
  for (std::size_t i = 0; i <= last; ++i) {
    levels_[i].generators.push_back(g);
    rebuild_orbit(levels_[i]);
  }
  schreier_sims(last);
}

std::vector<std::uint32_t> StabilizerChain::base() const {
  std::vector<std::uint32_t> b;
  for (const auto& l : levels_) b.push_back(l.base_point);
  return b;
}

std::span<const Permutation> StabilizerChain::level_generators(std::size_t level) const {
  if (level >= levels_.size()) return {};
  return levels_[level].generators;
}

const Permutation& StabilizerChain::transversal(std::size_t level, std::uint32_t point) const {
  const auto idx = levels_[level].rep_index[point];
  if (idx < 0) throw std::out_of_range("point not in basic orbit");
  return levels_[level].reps[static_cast<std::size_t>(idx)];
}

BigInt StabilizerChain::order() const {
  BigInt result = 1;
  for (const auto& l : levels_) result *= l.orbit.size();
  return result;
}

bool StabilizerChain::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  return sift(g).first.is_identity();
}

std::pair<Permutation, std::size_t> StabilizerChain::sift(Permutation g, std::size_t start_level) const {
  for (std::size_t l = start_level; l < levels_.size(); ++l) {
    const auto& level = levels_[l];
    const auto beta = g[level.base_point];
    const auto idx = level.rep_index[beta];
    if (idx < 0) return {std::move(g), l};
    g = g * level.reps[static_cast<std::size_t>(idx)].inverse();
  }
  return {std::move(g), levels_.size()};
}

std::vector<Permutation> StabilizerChain::strong_generators() const {
  std::vector<Permutation> out;
  for (const auto& l : levels_)
    for (const auto& g : l.generators)
      if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
  return out;
}

void StabilizerChain::for_each_element(const std::function<bool(const Permutation&)>& fn) const {
  // Every element factors uniquely as h_{k-1} * ... * h_0 with h_l a coset representative of level l.
  bool stop = false;
  std::function<void(std::ptrdiff_t, const Permutation&)> rec = [&](std::ptrdiff_t level,
                                                                     const Permutation& acc) {
    if (stop) return;
    if (level < 0) {
      if (!fn(acc)) stop = true;
      return;
    }
    for (const auto& rep : levels_[static_cast<std::size_t>(level)].reps) {
      rec(level - 1, acc * rep);
      if (stop) return;
    }
  };
  rec(static_cast<std::ptrdiff_t>(levels_.size()) - 1, Permutation(degree_));
}

void StabilizerChain::rebuild_orbit(Level& level) const {
  level.orbit.assign(1, level.base_point);
  level.rep_index.assign(degree_, -1);
  level.reps.assign(1, Permutation(degree_));
  level.rep_index[level.base_point] = 0;
  for (std::size_t i = 0; i < level.orbit.size(); ++i) {
    const auto x = level.orbit[i];
    for (const auto& s : level.generators) {
      const auto y = s[x];
      if (level.rep_index[y] >= 0) continue;
      level.rep_index[y] = static_cast<std::int32_t>(level.reps.size());
      level.reps.push_back(level.reps[static_cast<std::size_t>(level.rep_index[x])] * s);
      level.orbit.push_back(y);
    }
  }
}

void StabilizerChain::append_level(std::uint32_t base_point) {
  Level l;
  l.base_point = base_point;
  rebuild_orbit(l);
  levels_.push_back(std::move(l));
}

std::uint32_t StabilizerChain::first_moved_point(const Permutation& g) const {
  for (std::uint32_t x = 0; x < degree_; ++x)
    if (g[x] != x) return x;
  throw std::logic_error("identity has no moved point");
}

void StabilizerChain::schreier_sims(std::size_t start_level) {
  // Invariant: levels deeper than i form a BSGS of the group their generators span.
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(start_level);
  while (i >= 0) {
    bool restarted = false;
    const auto li = static_cast<std::size_t>(i);
    for (std::size_t oi = 0; oi < levels_[li].orbit.size() && !restarted; ++oi) {
      const auto beta = levels_[li].orbit[oi];
      for (std::size_t si = 0; si < levels_[li].generators.size(); ++si) {
        const auto& level = levels_[li];
        const auto& s = level.generators[si];
        const auto gamma = s[beta];
        Permutation h = level.reps[static_cast<std::size_t>(level.rep_index[beta])] * s *
                        level.reps[static_cast<std::size_t>(level.rep_index[gamma])].inverse();
        if (h.is_identity()) continue;
        auto [residue, drop] = sift(std::move(h), li + 1);
        if (residue.is_identity()) continue;
        if (drop == levels_.size()) append_level(first_moved_point(residue));
        for (std::size_t l = li + 1; l <= drop; ++l) {
          levels_[l].generators.push_back(residue);
          rebuild_orbit(levels_[l]);
        }
        i = static_cast<std::ptrdiff_t>(drop);
        restarted = true;
        break;
      }
    }
    if (!restarted) --i;
  }
}

}  // namespace bicirc
