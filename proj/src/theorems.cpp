#include "bnet/theorems.hpp"

#include <chrono>
#include <limits>
#include <utility>

#include "bnet/asyncdyn.hpp"
#include "bnet/constructions.hpp"
#include "bnet/embedmono.hpp"

namespace bnet {

namespace {

constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

class CheckTimer {
 public:
  CheckTimer() : start_(std::chrono::steady_clock::now()) {}
  std::uint64_t micros() const {
    return static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::microseconds>(
            std::chrono::steady_clock::now() - start_)
            .count());
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

// Runs one check body and appends its record; the body returns nullopt on
// pass or a counterexample description on failure.
template <typename Body>
void run_check(VerificationReport& report, std::string id, Body&& body) {
  CheckTimer timer;
  CheckRecord record;
  record.id = std::move(id);
  record.counterexample = body();
  record.pass = !record.counterexample.has_value();
  record.micros = timer.micros();
  report.millis += record.micros / 1000;
  report.checks.push_back(std::move(record));
}

VerificationReport make_report(Suite suite, const BooleanNetwork& f,
                               std::string instance) {
  VerificationReport report;
  report.suite = suite_name(suite);
  report.instance = instance.empty() ? "n=" + std::to_string(f.n())
                                     : std::move(instance);
  return report;
}

VerificationReport skip(VerificationReport report, std::string reason) {
  report.skipped = true;
  report.skip_reason = std::move(reason);
  return report;
}

// Raw BFS distances over the implicit asynchronous graph, for the hot loops.
std::vector<std::uint32_t> raw_distances_from(const BooleanNetwork& f,
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

std::vector<std::uint32_t> raw_distances_to(const BooleanNetwork& f,
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

std::string config_literal(unsigned n, std::uint32_t bits) {
  return Config(n, bits).literal();
}

}  // namespace

Suite parse_suite(const std::string& name) {
  if (name == "robert") return Suite::robert;
  if (name == "monotone-reach") return Suite::monotone_reach;
  if (name == "embedding") return Suite::embedding;
  if (name == "fixed-point-counts") return Suite::fixed_point_counts;
  if (name == "all") return Suite::all;
  throw FormatError("unknown suite '" + name +
                    "' (expected robert, monotone-reach, embedding, "
                    "fixed-point-counts, or all)");
}

std::string suite_name(Suite suite) {
  switch (suite) {
    case Suite::robert:
      return "robert";
    case Suite::monotone_reach:
      return "monotone-reach";
    case Suite::embedding:
      return "embedding";
    case Suite::fixed_point_counts:
      return "fixed-point-counts";
    case Suite::all:
      return "all";
  }
  return "";
}

VerificationReport check_robert(const BooleanNetwork& f, std::string instance) {
  VerificationReport report = make_report(Suite::robert, f, std::move(instance));
  if (f.n() > 12)
    return skip(std::move(report), "suite is capped at n <= 12");
  if (!is_acyclic(interaction_graph(f)))
    return skip(std::move(report), "interaction graph has a cycle");

  const std::vector<Config> fps = fixed_points(f);

  run_check(report, "unique-fixed-point", [&]() -> std::optional<std::string> {
    if (fps.size() == 1) return std::nullopt;
    std::string cex = "found " + std::to_string(fps.size()) + " fixed points";
    for (std::size_t k = 0; k < fps.size() && k < 4; ++k)
      cex += (k == 0 ? ": " : ", ") + fps[k].literal();
    return cex;
  });

  run_check(report, "async-graph-acyclic", [&]() -> std::optional<std::string> {
    const auto witness = find_gamma_cycle_state(f);
    if (!witness) return std::nullopt;
    return "state " + witness->literal() + " lies on a directed cycle";
  });

  run_check(report, "geodesic-from-every-state",
            [&]() -> std::optional<std::string> {
              if (fps.empty()) return "no fixed point to reach";
              const std::uint32_t y = fps.front().bits();
              const auto dist = raw_distances_to(f, y);
              for (std::uint32_t x = 0; x < dist.size(); ++x) {
                const auto h =
                    static_cast<std::uint32_t>(std::popcount(x ^ y));
                if (dist[x] == h) continue;
                std::string cex = "from " + config_literal(f.n(), x) + " to " +
                                  config_literal(f.n(), y) + ": distance ";
                cex += dist[x] == kUnreached ? "unreachable"
                                             : std::to_string(dist[x]);
                cex += ", hamming " + std::to_string(h);
                return cex;
              }
              return std::nullopt;
            });

  return report;
}

VerificationReport check_monotone_reach(const BooleanNetwork& f,
                                        std::string instance) {
  VerificationReport report =
      make_report(Suite::monotone_reach, f, std::move(instance));
  if (f.n() > 12)
    return skip(std::move(report), "suite is capped at n <= 12");
  if (!is_monotone(f))
    return skip(std::move(report), "network is not monotone");

  run_check(report, "geodesic-to-some-fixed-point",
            [&]() -> std::optional<std::string> {
              const std::uint32_t size = std::uint32_t{1} << f.n();
              std::vector<bool> satisfied(size, false);
              std::uint32_t remaining = size;
              // One reverse BFS per fixed point marks every state that has a
              // geodesic to it; stop as soon as all states are covered.
              for (std::uint32_t y = 0; y < size && remaining > 0; ++y) {
                if (f.evaluate_bits(y) != y) continue;
                const auto dist = raw_distances_to(f, y);
                for (std::uint32_t x = 0; x < size; ++x) {
                  if (satisfied[x]) continue;
                  if (dist[x] ==
                      static_cast<std::uint32_t>(std::popcount(x ^ y))) {
                    satisfied[x] = true;
                    --remaining;
                  }
                }
              }
              if (remaining == 0) return std::nullopt;
              for (std::uint32_t x = 0; x < size; ++x)
                if (!satisfied[x])
                  return "state " + config_literal(f.n(), x) +
                         " has no geodesic to any fixed point";
              return std::nullopt;
            });

  return report;
}

VerificationReport check_embedding_suite(const BooleanNetwork& f,
                                         std::string instance) {
  VerificationReport report =
      make_report(Suite::embedding, f, std::move(instance));
  if (f.n() > 5)
    return skip(std::move(report), "suite is capped at n <= 5");
  if (has_negative_loop(f))
    return skip(std::move(report), "network has a negative loop");

  const unsigned n = f.n();
  const std::uint32_t size = std::uint32_t{1} << n;
  const std::uint32_t mask = size - 1;
  const BooleanNetwork host = embed(f);
  const unsigned hn = host.n();
  const std::uint32_t host_size = std::uint32_t{1} << hn;

  const auto omega_of = [&](std::uint32_t x) {
    return x | ((~x & mask) << n);
  };
  const auto is_omega = [&](std::uint32_t z) {
    return (z >> n) == (~z & mask);
  };

  std::vector<std::uint32_t> change(size), host_change(host_size);
  for (std::uint32_t s = 0; s < size; ++s)
    change[s] = f.evaluate_bits(s) ^ s;
  for (std::uint32_t s = 0; s < host_size; ++s)
    host_change[s] = host.evaluate_bits(s) ^ s;

  run_check(report, "host-monotone", [&]() -> std::optional<std::string> {
    for (std::uint32_t z = 0; z < host_size; ++z) {
      const std::uint32_t fz = host.evaluate_bits(z);
      for (unsigned i = 0; i < hn; ++i) {
        const std::uint32_t ibit = std::uint32_t{1} << i;
        if (z & ibit) continue;
        if (fz & ~host.evaluate_bits(z | ibit))
          return "host image decreases from " + config_literal(hn, z) +
                 " to " + config_literal(hn, z | ibit);
      }
    }
    return std::nullopt;
  });

  run_check(report, "mirror-fixed-point-correspondence",
            [&]() -> std::optional<std::string> {
              for (std::uint32_t x = 0; x < size; ++x) {
                const bool fixed = change[x] == 0;
                const bool host_fixed = host_change[omega_of(x)] == 0;
                if (fixed != host_fixed)
                  return "state " + config_literal(n, x) +
                         (fixed ? " is fixed but its mirror pair is not"
                                : " is not fixed but its mirror pair is");
              }
              return std::nullopt;
            });
  {
    // The host may have extra fixed points off the mirror set; nothing is
    // asserted about them, but their count is worth surfacing.
    std::uint32_t off_mirror = 0;
    for (std::uint32_t z = 0; z < host_size; ++z)
      if (host_change[z] == 0 && !is_omega(z)) ++off_mirror;
    if (off_mirror > 0)
      report.checks.back().note =
          std::to_string(off_mirror) + " host fixed points off the mirror set";
  }

  run_check(report, "absorbing-outside-middle-band",
            [&]() -> std::optional<std::string> {
              const std::uint32_t host_mask = host_size - 1;
              const int half = static_cast<int>(n);
              for (std::uint32_t z = 0; z < host_size; ++z) {
                const int w = std::popcount(z);
                if (w <= half - 2 && host.evaluate_bits(z) != 0)
                  return "image of " + config_literal(hn, z) +
                         " is not all-zeros";
                if (w >= half + 2 && host.evaluate_bits(z) != host_mask)
                  return "image of " + config_literal(hn, z) +
                         " is not all-ones";
              }
              return std::nullopt;
            });

  run_check(report, "transition-two-step-correspondence",
            [&]() -> std::optional<std::string> {
              const auto host_transition = [&](std::uint32_t a,
                                               std::uint32_t b) {
                return (host_change[a] & (a ^ b)) == (a ^ b);
              };
              for (std::uint32_t x = 0; x < size; ++x) {
                const std::uint32_t ox = omega_of(x);

                // Reachability without expanding intermediate mirror states.
                std::vector<bool> reached(host_size, false);
                std::vector<std::uint32_t> frontier{ox}, next;
                reached[ox] = true;
                while (!frontier.empty()) {
                  next.clear();
                  for (const std::uint32_t s : frontier) {
                    if (s != ox && is_omega(s)) continue;
                    std::uint32_t diff = host_change[s];
                    while (diff) {
                      const std::uint32_t t = s ^ (diff & -diff);
                      diff &= diff - 1;
                      if (!reached[t]) {
                        reached[t] = true;
                        next.push_back(t);
                      }
                    }
                  }
                  frontier.swap(next);
                }

                for (std::uint32_t y = 0; y < size; ++y) {
                  if (y == x) continue;
                  const bool transition =
                      std::popcount(x ^ y) == 1 && (change[x] & (x ^ y));
                  const std::uint32_t oy = omega_of(y);
                  if (reached[oy] != transition)
                    return std::string(transition
                                           ? "no mirror-free host path for "
                                           : "unexpected mirror-free host "
                                             "path for ") +
                           config_literal(n, x) + " -> " +
                           config_literal(n, y);
                  if (std::popcount(x ^ y) != 1) continue;

                  // Exactly the two canonical middles, present iff the
                  // transition exists.
                  const std::uint32_t m_right = y | ((~x & mask) << n);
                  const std::uint32_t m_left = x | ((~y & mask) << n);
                  for (std::uint32_t m = 0; m < host_size; ++m) {
                    if (is_omega(m)) continue;
                    const bool is_middle = std::popcount(ox ^ m) == 1 &&
                                           std::popcount(m ^ oy) == 1 &&
                                           host_transition(ox, m) &&
                                           host_transition(m, oy);
                    const bool expected =
                        transition && (m == m_right || m == m_left);
                    if (is_middle != expected)
                      return "two-step paths for " + config_literal(n, x) +
                             " -> " + config_literal(n, y) +
                             " differ at middle state " +
                             config_literal(hn, m);
                  }
                }
              }
              return std::nullopt;
            });

  run_check(report, "distance-doubling", [&]() -> std::optional<std::string> {
    for (std::uint32_t x = 0; x < size; ++x) {
      const auto base = raw_distances_from(f, x);
      const auto lifted = raw_distances_from(host, omega_of(x));
      for (std::uint32_t y = 0; y < size; ++y) {
        const std::uint32_t d = base[y];
        const std::uint32_t hd = lifted[omega_of(y)];
        const bool ok = d == kUnreached
                            ? hd == kUnreached
                            : hd != kUnreached && hd == 2 * d;
        if (!ok) {
          std::string cex = "pair " + config_literal(n, x) + " -> " +
                            config_literal(n, y) + ": base distance ";
          cex += d == kUnreached ? "unreachable" : std::to_string(d);
          cex += ", host distance ";
          cex += hd == kUnreached ? "unreachable" : std::to_string(hd);
          return cex;
        }
      }
    }
    return std::nullopt;
  });

  run_check(report, "mirror-identity", [&]() -> std::optional<std::string> {
    if (mirror_identity_check(host)) return std::nullopt;
    return "half-swap mirror identity violated";
  });

  return report;
}

VerificationReport check_fixed_point_counts(const BooleanNetwork& f,
                                            std::string instance) {
  VerificationReport report =
      make_report(Suite::fixed_point_counts, f, std::move(instance));
  if (f.n() > 8)
    return skip(std::move(report), "suite is capped at n <= 8");

  const SignedDigraph g = interaction_graph(f);
  const bool has_positive = has_cycle_of_sign(g, Sign::positive, f.n());
  const bool has_negative = has_cycle_of_sign(g, Sign::negative, f.n());
  if (has_positive && has_negative)
    return skip(std::move(report), "both cycle signs present");

  const std::size_t count = fixed_points(f).size();
  if (!has_positive)
    run_check(report, "no-positive-cycle-at-most-one",
              [&]() -> std::optional<std::string> {
                if (count <= 1) return std::nullopt;
                return "found " + std::to_string(count) + " fixed points";
              });
  if (!has_negative)
    run_check(report, "no-negative-cycle-at-least-one",
              [&]() -> std::optional<std::string> {
                if (count >= 1) return std::nullopt;
                return "found no fixed point";
              });
  return report;
}

std::vector<VerificationReport> run_corpus(Suite suite, std::uint32_t count,
                                           unsigned n,
                                           std::uint64_t base_seed) {
  std::vector<VerificationReport> reports;
  const auto describe = [n](const char* generator, std::uint64_t seed) {
    return std::string(generator) + "(n=" + std::to_string(n) +
           ", seed=" + std::to_string(seed) + ")";
  };
  for (std::uint32_t k = 0; k < count; ++k) {
    const std::uint64_t seed = base_seed + k;
    if (suite == Suite::robert || suite == Suite::all)
      reports.push_back(check_robert(random_acyclic(n, seed),
                                     describe("random_acyclic", seed)));
    if (suite == Suite::monotone_reach || suite == Suite::all)
      reports.push_back(check_monotone_reach(
          random_monotone(n, seed), describe("random_monotone", seed)));
    if (suite == Suite::embedding || suite == Suite::all)
      reports.push_back(
          check_embedding_suite(random_no_negative_loop(n, seed),
                                describe("random_no_negative_loop", seed)));
    if (suite == Suite::fixed_point_counts || suite == Suite::all)
      reports.push_back(check_fixed_point_counts(
          random_network(n, seed), describe("random_network", seed)));
  }
  return reports;
}

}  // namespace bnet
