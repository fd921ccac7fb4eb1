#pragma once

#include <optional>
#include <vector>

namespace fracpow {

/// Finite family of subsets of [0, universe_size). Sets are kept sorted and
/// deduplicated; empty sets are allowed (exclusions can empty a small list).
struct SetFamily {
  std::vector<std::vector<int>> sets;
  int universe_size = 0;
};

/// Validates and normalises (sorts, deduplicates) a family.
SetFamily make_set_family(std::vector<std::vector<int>> sets, int universe_size);

/// System of distinct representatives: assignment[i] is the element chosen
/// for sets[i]; chosen elements are pairwise distinct.
struct Transversal {
  std::vector<int> assignment;
};

/// Finds a transversal via augmenting paths, or nullopt if none exists.
/// Deterministic: sets in index order, elements in ascending order.
std::optional<Transversal> find_transversal(const SetFamily& f);

/// Finds per-set disjoint subsets of size `demand` (all chosen elements
/// globally distinct), realised as a unit-capacity flow. demand = 1 succeeds
/// exactly when find_transversal does.
std::optional<std::vector<std::vector<int>>> find_b_transversal(const SetFamily& f, int demand);

/// Witness for the failure of the generalised Hall condition: a set J of
/// indices with |union of sets[J]| < demand * |J|, extracted from the final
/// flow cut. Returns nullopt iff a demand-transversal exists.
std::optional<std::vector<int>> hall_violator(const SetFamily& f, int demand);

}  // namespace fracpow
