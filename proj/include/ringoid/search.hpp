#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "ringoid/group.hpp"

namespace ringoid {

/// Constraints for enumerate_additive_maps. Both callbacks are optional.
struct AdditiveConstraints {
  /// May element `source` map to `target`?
  std::function<bool(Elem source, Elem target)> allowed;
  /// Called after the map grows; `fresh` lists the elements assigned in the
  /// last step. Returning false prunes the branch.
  std::function<bool(const std::vector<Elem>& partial, std::span<const Elem> fresh)> consistent;
};

/// Greedy generating set: scan in index order, keep every element outside
/// the subgroup generated so far.
std::vector<Elem> greedy_generators(const AbelianGroup& g);

/// Enumerates every additive map dom -> cod satisfying the constraints, in
/// lexicographic order of the generator images. The search assigns images
/// to greedy generators one at a time and closes the partial map under
/// adding the new generator, rejecting inconsistent branches early. `visit`
/// returns false to stop.
void enumerate_additive_maps(const AbelianGroup& dom, const AbelianGroup& cod,
                             const AdditiveConstraints& constraints, SearchCounter& counter,
                             const std::function<bool(const std::vector<Elem>&)>& visit);

/// An additive bijection a -> b, if one exists.
std::optional<std::vector<Elem>> find_group_isomorphism(const AbelianGroup& a, const AbelianGroup& b,
                                                        const Budget& budget = {});

}  // namespace ringoid
