#include "bnet/asyncdyn.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace bnet {

namespace {

constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

void require_same_n(const BooleanNetwork& f, const Config& x) {
  if (x.n() != f.n())
    throw DimensionError("configuration has " + std::to_string(x.n()) +
                         " components, network has " + std::to_string(f.n()));
}

// Forward BFS filling dist[] for every state, kUnreached where unreachable.
std::vector<std::uint32_t> bfs_from(const BooleanNetwork& f,
                                    std::uint32_t source) {
  const std::uint32_t size = std::uint32_t{1} << f.n();
  std::vector<std::uint32_t> dist(size, kUnreached);
  std::vector<std::uint32_t> frontier{source}, next;
  dist[source] = 0;
  std::uint32_t level = 0;
  while (!frontier.empty()) {
    ++level;
    next.clear();
    for (const std::uint32_t s : frontier) {
      std::uint32_t diff = f.evaluate_bits(s) ^ s;
      while (diff) {
        const std::uint32_t t = s ^ (diff & -diff);
        diff &= diff - 1;
        if (dist[t] == kUnreached) {
          dist[t] = level;
          next.push_back(t);
        }
      }
    }
    frontier.swap(next);
  }
  return dist;
}

// Reverse BFS: dist[x] = length of a shortest path from x to target.
// w -> s is a transition iff s = flip(w, i) and f_i(w) = s_i.
std::vector<std::uint32_t> bfs_to(const BooleanNetwork& f,
                                  std::uint32_t target) {
  const std::uint32_t size = std::uint32_t{1} << f.n();
  std::vector<std::uint32_t> dist(size, kUnreached);
  std::vector<std::uint32_t> frontier{target}, next;
  dist[target] = 0;
  std::uint32_t level = 0;
  while (!frontier.empty()) {
    ++level;
    next.clear();
    for (const std::uint32_t s : frontier) {
      for (unsigned i = 1; i <= f.n(); ++i) {
        const std::uint32_t ibit = std::uint32_t{1} << (i - 1);
        const std::uint32_t w = s ^ ibit;
        if (dist[w] != kUnreached) continue;
        if (f.component(i, w) == static_cast<bool>(s & ibit)) {
          dist[w] = level;
          next.push_back(w);
        }
      }
    }
    frontier.swap(next);
  }
  return dist;
}

std::vector<Distance> wrap_distances(std::vector<std::uint32_t> raw) {
  std::vector<Distance> out(raw.size());
  for (std::size_t s = 0; s < raw.size(); ++s)
    if (raw[s] != kUnreached) out[s] = raw[s];
  return out;
}

}  // namespace

AsyncGraph::AsyncGraph(const BooleanNetwork& f, bool force) : network_(f) {
  if (!force && f.n() > kSizeCap)
    throw SizeError("asynchronous graph materialization is capped at n <= " +
                    std::to_string(kSizeCap) + " (use force to override)");
  const std::uint32_t size = std::uint32_t{1} << f.n();
  change_masks_.resize(size);
  for (std::uint32_t s = 0; s < size; ++s)
    change_masks_[s] = f.evaluate_bits(s) ^ s;
}

std::vector<Config> AsyncGraph::out_neighbors(const Config& x) const {
  require_same_n(network_, x);
  std::vector<Config> out;
  std::uint32_t diff = change_masks_[x.bits()];
  while (diff) {
    out.emplace_back(n(), x.bits() ^ (diff & -diff));
    diff &= diff - 1;
  }
  return out;
}

std::vector<std::pair<std::uint32_t, unsigned>> AsyncGraph::transitions()
    const {
  std::vector<std::pair<std::uint32_t, unsigned>> out;
  for (std::uint32_t s = 0; s < change_masks_.size(); ++s) {
    std::uint32_t diff = change_masks_[s];
    while (diff) {
      out.emplace_back(s, static_cast<unsigned>(std::countr_zero(diff)) + 1);
      diff &= diff - 1;
    }
  }
  return out;
}

std::uint64_t AsyncGraph::transition_count() const {
  std::uint64_t count = 0;
  for (const std::uint32_t mask : change_masks_) count += std::popcount(mask);
  return count;
}

AsyncGraph async_graph(const BooleanNetwork& f, bool force) {
  return AsyncGraph(f, force);
}

std::vector<Config> successors(const BooleanNetwork& f, const Config& x) {
  require_same_n(f, x);
  std::vector<Config> out;
  std::uint32_t diff = f.evaluate_bits(x.bits()) ^ x.bits();
  while (diff) {
    out.emplace_back(f.n(), x.bits() ^ (diff & -diff));
    diff &= diff - 1;
  }
  return out;
}

Distance distance(const BooleanNetwork& f, const Config& x, const Config& y) {
  require_same_n(f, x);
  require_same_n(f, y);
  if (x == y) return 0;
  // Level-synchronous BFS over the implicit graph; only a visited bitset and
  // the two frontiers are kept, so embedded hosts stay cheap.
  const std::uint32_t target = y.bits();
  std::vector<std::uint64_t> visited((std::size_t{1} << f.n()) / 64 + 1, 0);
  auto mark = [&](std::uint32_t s) {
    visited[s >> 6] |= std::uint64_t{1} << (s & 63u);
  };
  auto seen = [&](std::uint32_t s) {
    return (visited[s >> 6] >> (s & 63u)) & 1u;
  };
  std::vector<std::uint32_t> frontier{x.bits()}, next;
  mark(x.bits());
  std::uint32_t level = 0;
  while (!frontier.empty()) {
    ++level;
    next.clear();
    for (const std::uint32_t s : frontier) {
      std::uint32_t diff = f.evaluate_bits(s) ^ s;
      while (diff) {
        const std::uint32_t t = s ^ (diff & -diff);
        diff &= diff - 1;
        if (t == target) return level;
        if (!seen(t)) {
          mark(t);
          next.push_back(t);
        }
      }
    }
    frontier.swap(next);
  }
  return std::nullopt;
}

std::vector<Distance> distances_from(const BooleanNetwork& f,
                                     const Config& source) {
  require_same_n(f, source);
  return wrap_distances(bfs_from(f, source.bits()));
}

std::vector<Distance> distances_to(const BooleanNetwork& f,
                                   const Config& target) {
  require_same_n(f, target);
  return wrap_distances(bfs_to(f, target.bits()));
}

std::uint32_t diameter(const BooleanNetwork& f, bool force) {
  if (!force && f.n() > kDiameterCap)
    throw SizeError("diameter is capped at n <= " +
                    std::to_string(kDiameterCap) + " (use force to override)");
  const std::uint32_t size = std::uint32_t{1} << f.n();
  std::vector<std::uint32_t> change(size);
  for (std::uint32_t s = 0; s < size; ++s)
    change[s] = f.evaluate_bits(s) ^ s;

  std::vector<std::uint32_t> stamp(size, 0), dist(size, 0);
  std::vector<std::uint32_t> frontier, next;
  std::uint32_t best = 0;
  for (std::uint32_t source = 0; source < size; ++source) {
    const std::uint32_t epoch = source + 1;
    frontier.assign(1, source);
    stamp[source] = epoch;
    dist[source] = 0;
    while (!frontier.empty()) {
      next.clear();
      for (const std::uint32_t s : frontier) {
        std::uint32_t diff = change[s];
        while (diff) {
          const std::uint32_t t = s ^ (diff & -diff);
          diff &= diff - 1;
          if (stamp[t] != epoch) {
            stamp[t] = epoch;
            dist[t] = dist[s] + 1;
            best = std::max(best, dist[t]);
            next.push_back(t);
          }
        }
      }
      frontier.swap(next);
    }
  }
  return best;
}

std::vector<Config> fixed_points(const BooleanNetwork& f) {
  std::vector<Config> out;
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << f.n()); ++s)
    if (f.evaluate_bits(s) == s) out.emplace_back(f.n(), s);
  return out;
}

bool has_geodesic(const BooleanNetwork& f, const Config& x, const Config& y) {
  const Distance d = distance(f, x, y);
  return d.has_value() && *d == hamming(x, y);
}

std::optional<Config> geodesic_fixed_point(const BooleanNetwork& f,
                                           const Config& x) {
  require_same_n(f, x);
  const auto dist = bfs_from(f, x.bits());
  for (std::uint32_t s = 0; s < dist.size(); ++s) {
    if (f.evaluate_bits(s) != s || dist[s] == kUnreached) continue;
    if (dist[s] == static_cast<std::uint32_t>(std::popcount(s ^ x.bits())))
      return Config(f.n(), s);
  }
  return std::nullopt;
}

std::vector<Config> simulate(const BooleanNetwork& f, const Config& x0,
                             const Schedule& s) {
  require_same_n(f, x0);
  std::vector<Config> trajectory{x0};
  std::uint32_t cur = x0.bits();
  for (const unsigned i : s) {
    if (i < 1 || i > f.n())
      throw DimensionError("schedule index " + std::to_string(i) +
                           " outside [1, " + std::to_string(f.n()) + "]");
    const std::uint32_t ibit = std::uint32_t{1} << (i - 1);
    cur = (cur & ~ibit) | (f.component(i, cur) ? ibit : 0u);
    trajectory.emplace_back(f.n(), cur);
  }
  return trajectory;
}

bool has_two_cycle(const BooleanNetwork& f) {
  for (std::uint32_t x = 0; x < (std::uint32_t{1} << f.n()); ++x)
    for (unsigned i = 1; i <= f.n(); ++i) {
      const std::uint32_t ibit = std::uint32_t{1} << (i - 1);
      const bool xi = x & ibit;
      if (f.component(i, x) != xi && f.component(i, x ^ ibit) == xi)
        return true;
    }
  return false;
}

std::optional<Config> find_gamma_cycle_state(const BooleanNetwork& f) {
  // Iterative three-color DFS over the implicit transition relation.
  const std::uint32_t size = std::uint32_t{1} << f.n();
  std::vector<std::uint8_t> color(size, 0);  // 0 white, 1 gray, 2 black
  struct Frame {
    std::uint32_t state;
    std::uint32_t pending;  // change-mask bits not yet explored
  };
  std::vector<Frame> stack;
  for (std::uint32_t start = 0; start < size; ++start) {
    if (color[start] != 0) continue;
    color[start] = 1;
    stack.push_back({start, f.evaluate_bits(start) ^ start});
    while (!stack.empty()) {
      Frame& top = stack.back();
      if (top.pending == 0) {
        color[top.state] = 2;
        stack.pop_back();
        continue;
      }
      const std::uint32_t t = top.state ^ (top.pending & -top.pending);
      top.pending &= top.pending - 1;
      if (color[t] == 1) return Config(f.n(), t);  // back edge
      if (color[t] == 0) {
        color[t] = 1;
        stack.push_back({t, f.evaluate_bits(t) ^ t});
      }
    }
  }
  return std::nullopt;
}

bool gamma_is_acyclic(const BooleanNetwork& f) {
  return !find_gamma_cycle_state(f).has_value();
}

}  // namespace bnet
