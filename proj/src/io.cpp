#include "bnet/io.hpp"

#include <fstream>
#include <sstream>
#include <utility>

#ifdef _WIN32
#include <process.h>
#else
#include <unistd.h>
#endif

namespace bnet {

namespace {

unsigned checked_n(const nlohmann::json& value) {
  if (!value.is_number_integer())
    throw FormatError("field 'n' must be an integer");
  const auto n = value.get<std::int64_t>();
  if (n < 1 || n > static_cast<std::int64_t>(kMaxComponents))
    throw FormatError("field 'n' must be in [1, " +
                      std::to_string(kMaxComponents) + "]");
  return static_cast<unsigned>(n);
}

}  // namespace

BooleanNetwork network_from_tables(unsigned n,
                                   const std::vector<std::string>& tables) {
  if (n < 1 || n > kMaxComponents)
    throw FormatError("component count must be in [1, " +
                      std::to_string(kMaxComponents) + "]");
  if (tables.size() != n)
    throw FormatError("expected " + std::to_string(n) + " tables, got " +
                      std::to_string(tables.size()));
  const std::size_t entries = std::size_t{1} << n;
  std::vector<TruthTable> built;
  built.reserve(n);
  for (unsigned i = 0; i < n; ++i) {
    const std::string& text = tables[i];
    if (text.size() != entries)
      throw FormatError("table " + std::to_string(i + 1) + " must have " +
                        std::to_string(entries) + " characters, got " +
                        std::to_string(text.size()));
    TruthTable t(n);
    for (std::size_t k = 0; k < entries; ++k) {
      if (text[k] == '1')
        t.set(static_cast<std::uint32_t>(k), true);
      else if (text[k] != '0')
        throw FormatError("table " + std::to_string(i + 1) +
                          " may contain only '0' and '1'");
    }
    built.push_back(std::move(t));
  }
  return BooleanNetwork(n, std::move(built));
}

nlohmann::ordered_json network_to_json(const BooleanNetwork& f) {
  nlohmann::ordered_json doc;
  doc["n"] = f.n();
  auto& tables = doc["tables"] = nlohmann::ordered_json::array();
  for (unsigned i = 1; i <= f.n(); ++i) {
    const TruthTable& t = f.table(i);
    std::string text(t.entries(), '0');
    for (std::uint32_t k = 0; k < t.entries(); ++k)
      if (t.get(k)) text[k] = '1';
    tables.push_back(std::move(text));
  }
  return doc;
}

BooleanNetwork network_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw FormatError("network file must be a JSON object");
  if (!doc.contains("n") || !doc.contains("tables"))
    throw FormatError("network file needs fields 'n' and 'tables'");
  const unsigned n = checked_n(doc["n"]);
  const nlohmann::json& tables = doc["tables"];
  if (!tables.is_array())
    throw FormatError("field 'tables' must be an array of strings");
  std::vector<std::string> texts;
  texts.reserve(tables.size());
  for (const auto& entry : tables) {
    if (!entry.is_string())
      throw FormatError("field 'tables' must be an array of strings");
    texts.push_back(entry.get<std::string>());
  }
  return network_from_tables(n, texts);
}

std::string serialize_network(const BooleanNetwork& f) {
  return network_to_json(f).dump(2) + "\n";
}

BooleanNetwork parse_network(std::string_view text) {
  nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw FormatError("network file is not valid JSON");
  return network_from_json(doc);
}

BooleanNetwork read_network_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_network(buffer.str());
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void write_network_file(const std::filesystem::path& path,
                        const BooleanNetwork& f) {
  write_text_file_atomic(path, serialize_network(f));
}

void write_text_file_atomic(const std::filesystem::path& path,
                            std::string_view content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp" + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write '" + tmp.string() + "'");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) {
      out.close();
      std::filesystem::remove(tmp);
      throw Error("failed writing '" + tmp.string() + "'");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw Error("cannot move '" + tmp.string() + "' to '" + path.string() +
                "': " + ec.message());
  }
}

std::string dot_interaction_graph(const SignedDigraph& g) {
  std::ostringstream out;
  out << "digraph interaction_graph {\n";
  for (unsigned v = 1; v <= g.n(); ++v) out << "  " << v << ";\n";
  for (const Arc& arc : g.arcs())
    out << "  " << arc.from << " -> " << arc.to << " [label=\""
        << sign_char(arc.sign) << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string dot_async_graph(const AsyncGraph& g) {
  std::ostringstream out;
  out << "digraph async_graph {\n";
  const std::uint32_t size = std::uint32_t{1} << g.n();
  for (std::uint32_t s = 0; s < size; ++s)
    out << "  \"" << Config(g.n(), s).literal() << "\";\n";
  for (const auto& [state, component] : g.transitions()) {
    const Config from(g.n(), state);
    out << "  \"" << from.literal() << "\" -> \""
        << from.flipped(component).literal() << "\";\n";
  }
  out << "}\n";
  return out.str();
}

Config parse_literal(std::string_view literal, unsigned expected_n) {
  const Config c = Config::from_literal(literal);
  if (c.n() != expected_n)
    throw FormatError("literal '" + std::string(literal) + "' has " +
                      std::to_string(c.n()) + " components, expected " +
                      std::to_string(expected_n));
  return c;
}

Schedule parse_schedule(std::string_view text, unsigned n) {
  Schedule schedule;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view item = text.substr(pos, comma - pos);
    if (item.empty()) throw FormatError("schedule has an empty entry");
    unsigned value = 0;
    for (const char c : item) {
      if (c < '0' || c > '9')
        throw FormatError("schedule entry '" + std::string(item) +
                          "' is not a number");
      value = value * 10 + static_cast<unsigned>(c - '0');
      if (value > kMaxComponents) break;
    }
    if (value < 1 || value > n)
      throw FormatError("schedule entry '" + std::string(item) +
                        "' outside [1, " + std::to_string(n) + "]");
    schedule.push_back(value);
    if (comma == text.size()) break;
    pos = comma + 1;
  }
  return schedule;
}

nlohmann::ordered_json report_to_json(const VerificationReport& report,
                                      bool with_millis) {
  nlohmann::ordered_json doc;
  doc["suite"] = report.suite;
  doc["instance"] = report.instance;
  doc["skipped"] = report.skipped;
  if (report.skipped) doc["skip_reason"] = report.skip_reason;
  auto& checks = doc["checks"] = nlohmann::ordered_json::array();
  for (const CheckRecord& check : report.checks) {
    nlohmann::ordered_json entry;
    entry["id"] = check.id;
    entry["pass"] = check.pass;
    if (check.counterexample) entry["counterexample"] = *check.counterexample;
    if (check.note) entry["note"] = *check.note;
    checks.push_back(std::move(entry));
  }
  doc["millis"] = with_millis ? report.millis : 0;
  return doc;
}

nlohmann::ordered_json reports_to_json(
    std::span<const VerificationReport> reports, bool with_millis) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const VerificationReport& report : reports)
    doc.push_back(report_to_json(report, with_millis));
  return doc;
}

std::string serialize_reports(std::span<const VerificationReport> reports,
                              bool with_millis) {
  return reports_to_json(reports, with_millis).dump(2) + "\n";
}

}  // namespace bnet
