#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bnet/netcore.hpp"

namespace bnet {

struct CheckRecord {
  std::string id;
  bool pass = false;
  std::optional<std::string> counterexample;
  std::optional<std::string> note;  // informational, never affects pass
  std::uint64_t micros = 0;         // wall time spent on this check
};

/// Outcome of one verification suite run on one network instance.
///
/// A suite passes iff every check passes; a skipped report (precondition not
/// met) carries no checks and counts as passing for exit-code purposes.
struct VerificationReport {
  std::string suite;
  std::string instance;
  bool skipped = false;
  std::string skip_reason;
  std::vector<CheckRecord> checks;
  std::uint64_t millis = 0;

  bool passed() const {
    for (const CheckRecord& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

enum class Suite { robert, monotone_reach, embedding, fixed_point_counts, all };

/// Parses a suite name as used by the CLI; throws FormatError when unknown.
Suite parse_suite(const std::string& name);
std::string suite_name(Suite suite);

/// Acyclic interaction graph => unique fixed point, acyclic asynchronous
/// graph, and a geodesic from every state to the fixed point.
/// Skipped when the interaction graph has a cycle or n > 12.
VerificationReport check_robert(const BooleanNetwork& f,
                                std::string instance = "");

/// Monotone network => every state has a geodesic to some fixed point.
/// Skipped when f is not monotone or n > 12.
VerificationReport check_monotone_reach(const BooleanNetwork& f,
                                        std::string instance = "");

/// Exhaustive checks of the monotone host construction: host monotonicity,
/// mirror fixed-point correspondence, absorption outside the middle weight
/// band, two-step transition correspondence, distance doubling over all
/// ordered state pairs, and the mirror identity.
/// Skipped when f has a negative loop or n > 5.
VerificationReport check_embedding_suite(const BooleanNetwork& f,
                                         std::string instance = "");

/// No positive cycle => at most one fixed point; no negative cycle => at
/// least one. Skipped when both cycle signs occur or n > 8.
VerificationReport check_fixed_point_counts(const BooleanNetwork& f,
                                            std::string instance = "");

/// Runs `count` seeded instances of the suite, seeds base_seed .. base_seed +
/// count - 1, each drawn from the generator matching the suite (acyclic
/// networks for robert, monotone for monotone-reach, negative-loop-free for
/// embedding, unrestricted for fixed-point-counts). Suite::all runs all four
/// per seed.
std::vector<VerificationReport> run_corpus(Suite suite, std::uint32_t count,
                                           unsigned n, std::uint64_t base_seed);

}  // namespace bnet
