#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bnet/asyncdyn.hpp"
#include "bnet/netcore.hpp"
#include "bnet/theorems.hpp"

namespace bnet {

/// Builds a network from one '0'/'1' string per component; character k of
/// table i is f_i applied to the input with encoding k.
BooleanNetwork network_from_tables(unsigned n,
                                   const std::vector<std::string>& tables);

/// Network file schema: {"n": <int>, "tables": [<2^n-char string>, ...]}.
nlohmann::ordered_json network_to_json(const BooleanNetwork& f);
BooleanNetwork network_from_json(const nlohmann::json& doc);

std::string serialize_network(const BooleanNetwork& f);
BooleanNetwork parse_network(std::string_view text);
BooleanNetwork read_network_file(const std::filesystem::path& path);
void write_network_file(const std::filesystem::path& path,
                        const BooleanNetwork& f);

/// Writes via a temporary file in the same directory, then renames.
void write_text_file_atomic(const std::filesystem::path& path,
                            std::string_view content);

/// DOT text for the signed interaction graph: one edge per arc, labeled
/// "+"/"-", sorted by (source, target, sign).
std::string dot_interaction_graph(const SignedDigraph& g);

/// DOT text for the asynchronous graph: nodes named by configuration
/// literals in encoding order, transitions sorted by (state, component).
std::string dot_async_graph(const AsyncGraph& g);

Config parse_literal(std::string_view literal, unsigned expected_n);

/// Comma-separated 1-based component indices, e.g. "1,2,1".
Schedule parse_schedule(std::string_view text, unsigned n);

/// Report schema: {"suite", "instance", "skipped", ["skip_reason",]
/// "checks": [{"id", "pass"[, "counterexample"]}], "millis"}. with_millis
/// false zeroes the timing field so outputs can be compared byte for byte.
nlohmann::ordered_json report_to_json(const VerificationReport& report,
                                      bool with_millis = true);
nlohmann::ordered_json reports_to_json(
    std::span<const VerificationReport> reports, bool with_millis = true);

std::string serialize_reports(std::span<const VerificationReport> reports,
                              bool with_millis = true);

}  // namespace bnet
