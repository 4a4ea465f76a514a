#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bnet/netcore.hpp"

namespace bnet {

/// Length of a shortest transition path, or nullopt when unreachable.
using Distance = std::optional<std::uint32_t>;

/// Finite prefix of an update strategy: component indices in [1, n].
using Schedule = std::vector<unsigned>;

/// Materialized transition relation of the asynchronous graph over {0,1}^n.
///
/// State x has a transition to flip(x, i) exactly when f_i(x) != x_i, so the
/// adjacency is stored as one change mask per state (bit i-1 set iff component
/// i can move). Immutable after construction.
class AsyncGraph {
 public:
  explicit AsyncGraph(const BooleanNetwork& f, bool force = false);

  unsigned n() const { return network_.n(); }
  const BooleanNetwork& network() const { return network_; }

  std::uint32_t change_mask(std::uint32_t state) const {
    return change_masks_[state];
  }
  std::vector<Config> out_neighbors(const Config& x) const;
  bool is_fixed_point(std::uint32_t state) const {
    return change_masks_[state] == 0;
  }

  /// All transitions as (state encoding, flipped component), sorted by
  /// (state, component).
  std::vector<std::pair<std::uint32_t, unsigned>> transitions() const;
  std::uint64_t transition_count() const;

  /// Default materialization cap (2^n change masks).
  static constexpr unsigned kSizeCap = 20;

 private:
  BooleanNetwork network_;
  std::vector<std::uint32_t> change_masks_;
};

AsyncGraph async_graph(const BooleanNetwork& f, bool force = false);

/// States reached from x by updating exactly one component.
std::vector<Config> successors(const BooleanNetwork& f, const Config& x);

/// BFS shortest-path length from x to y over the implicit transition relation.
Distance distance(const BooleanNetwork& f, const Config& x, const Config& y);

/// Distance from the source to every state, indexed by encoding.
std::vector<Distance> distances_from(const BooleanNetwork& f,
                                     const Config& source);

/// Distance from every state to the target, indexed by encoding.
std::vector<Distance> distances_to(const BooleanNetwork& f,
                                   const Config& target);

/// Maximum finite distance over all ordered state pairs; 0 when no state
/// reaches another. All-pairs BFS, capped at n <= 14 unless forced.
std::uint32_t diameter(const BooleanNetwork& f, bool force = false);
inline constexpr unsigned kDiameterCap = 14;

/// All x with f(x) = x, in increasing encoding order.
std::vector<Config> fixed_points(const BooleanNetwork& f);

/// True iff y is reachable from x in exactly hamming(x, y) transitions.
bool has_geodesic(const BooleanNetwork& f, const Config& x, const Config& y);

/// Some fixed point reachable from x along a geodesic, smallest encoding
/// first; nullopt when no fixed point qualifies.
std::optional<Config> geodesic_fixed_point(const BooleanNetwork& f,
                                           const Config& x);

/// Trajectory x^0 ... x^T where step t updates only component s[t].
std::vector<Config> simulate(const BooleanNetwork& f, const Config& x0,
                             const Schedule& s);

/// True iff some pair of states at Hamming distance 1 has transitions both ways.
bool has_two_cycle(const BooleanNetwork& f);

/// True iff the asynchronous graph has no directed cycle.
bool gamma_is_acyclic(const BooleanNetwork& f);

/// A state lying on some directed cycle of the asynchronous graph, if any.
std::optional<Config> find_gamma_cycle_state(const BooleanNetwork& f);

}  // namespace bnet
