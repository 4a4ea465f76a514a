#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include "bnet/io.hpp"

using namespace bnet;

namespace {

struct RunResult {
  int exit_code;
  std::string output;  // stdout only
};

RunResult run_cli(const std::string& args) {
  const std::string command =
      std::string(BNET_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  std::array<char, 4096> buffer;
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    output.append(buffer.data(), got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

std::filesystem::path work_dir() {
  static const std::filesystem::path dir = [] {
    auto d = std::filesystem::temp_directory_path() /
             ("bnet_cli_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(d);
    return d;
  }();
  return dir;
}

std::string path_of(const char* name) { return (work_dir() / name).string(); }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

void write_identity2(const std::string& path) {
  write_network_file(path, BooleanNetwork::identity(2));
}

}  // namespace

TEST_CASE("cli eval prints the image or the trajectory") {
  const std::string id = path_of("identity2.json");
  write_identity2(id);

  const RunResult image = run_cli("eval " + id + " 01");
  CHECK(image.exit_code == 0);
  CHECK(image.output == "01\n");

  const std::string zero = path_of("zero2.json");
  write_network_file(zero, BooleanNetwork::constant(Config::zeros(2)));
  const RunResult run = run_cli("eval " + zero + " 11 --schedule 1,2");
  CHECK(run.exit_code == 0);
  CHECK(run.output == "11\n01\n00\n");
}

TEST_CASE("cli gray-code pipeline hits the exponential distances") {
  const std::string g3 = path_of("gray3.json");
  CHECK(run_cli("graycode --n 3 " + g3).exit_code == 0);

  const RunResult d = run_cli("distance " + g3 + " 000 001");
  CHECK(d.exit_code == 0);
  CHECK(d.output == "7\n");

  const std::string h3 = path_of("host3.json");
  CHECK(run_cli("embed " + g3 + " " + h3).exit_code == 0);
  const RunResult hd = run_cli("distance " + h3 + " 000111 001110");
  CHECK(hd.exit_code == 0);
  CHECK(hd.output == "14\n");

  const RunResult fps = run_cli("fixedpoints " + g3);
  CHECK(fps.exit_code == 0);
  CHECK(fps.output == "001\n");
}

TEST_CASE("cli distance prints the unreachable token") {
  const std::string id = path_of("identity2.json");
  write_identity2(id);
  const RunResult r = run_cli("distance " + id + " 00 01");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "unreachable\n");
}

TEST_CASE("cli diameter and fixed points of the identity") {
  const std::string id = path_of("identity2.json");
  write_identity2(id);
  CHECK(run_cli("diameter " + id).output == "0\n");
  CHECK(run_cli("fixedpoints " + id).output == "00\n10\n01\n11\n");
}

TEST_CASE("cli embed enforces the hypothesis unless forced") {
  const std::string neg = path_of("negation.json");
  write_network_file(neg, network_from_tables(1, {"10"}));
  const std::string out = path_of("negation_host.json");
  CHECK(run_cli("embed " + neg + " " + out).exit_code == 2);
  CHECK(run_cli("embed " + neg + " " + out + " --force").exit_code == 0);
  CHECK(read_network_file(out).n() == 2);
}

TEST_CASE("cli dot exports are byte-identical across runs") {
  const std::string g2 = path_of("gray2.json");
  CHECK(run_cli("graycode --n 2 " + g2).exit_code == 0);

  const std::string dot_a = path_of("a.dot"), dot_b = path_of("b.dot");
  CHECK(run_cli("igraph " + g2 + " " + dot_a).exit_code == 0);
  CHECK(run_cli("igraph " + g2 + " " + dot_b).exit_code == 0);
  CHECK(slurp(dot_a) == slurp(dot_b));
  CHECK(slurp(dot_a).find("digraph interaction_graph") != std::string::npos);

  CHECK(run_cli("asyncgraph " + g2 + " " + dot_a).exit_code == 0);
  CHECK(run_cli("asyncgraph " + g2 + " " + dot_b).exit_code == 0);
  CHECK(slurp(dot_a) == slurp(dot_b));
  CHECK(slurp(dot_a).find("\"00\" -> \"10\"") != std::string::npos);
}

TEST_CASE("cli verify exits by outcome") {
  const std::string id = path_of("identity2.json");
  write_identity2(id);

  SUBCASE("skipped preconditions still exit zero") {
    const RunResult r = run_cli("verify --suite robert --network " + id);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("[skip]") != std::string::npos);
    CHECK(r.output.find("interaction graph has a cycle") != std::string::npos);
  }
  SUBCASE("a negative loop gates the embedding suite") {
    const std::string neg = path_of("negation_gate.json");
    write_network_file(neg, network_from_tables(1, {"10"}));
    const RunResult r = run_cli("verify --suite embedding --network " + neg);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("[skip]") != std::string::npos);
    CHECK(r.output.find("negative loop") != std::string::npos);
  }
  SUBCASE("constructions pass") {
    const RunResult r =
        run_cli("verify --suite embedding --construction graycode --n 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("[pass]") != std::string::npos);
  }
  SUBCASE("corpus reports are byte-identical with --stable") {
    const std::string rep_a = path_of("rep_a.json"),
                      rep_b = path_of("rep_b.json");
    const std::string args =
        "verify --suite all --count 3 --n 3 --seed 5 --stable --report ";
    CHECK(run_cli(args + rep_a).exit_code == 0);
    CHECK(run_cli(args + rep_b).exit_code == 0);
    CHECK(slurp(rep_a) == slurp(rep_b));
    CHECK(slurp(rep_a).find("\"suite\": \"robert\"") != std::string::npos);
  }
  SUBCASE("unknown suites are usage errors") {
    CHECK(run_cli("verify --suite nonsense --network " + id).exit_code == 2);
  }
  SUBCASE("exactly one input source is required") {
    CHECK(run_cli("verify --suite robert").exit_code == 2);
    CHECK(run_cli("verify --suite robert --network " + id +
                  " --construction graycode --n 2")
              .exit_code == 2);
  }
}

TEST_CASE("cli rejects malformed inputs with exit code 2") {
  const std::string bad = path_of("bad.json");
  {
    std::ofstream out(bad);
    out << "{\"n\": 2, \"tables\": [\"01\"]}";
  }
  CHECK(run_cli("eval " + bad + " 01").exit_code == 2);
  CHECK(run_cli("eval " + path_of("missing.json") + " 01").exit_code == 2);

  const std::string id = path_of("identity2.json");
  write_identity2(id);
  CHECK(run_cli("eval " + id + " 0101").exit_code == 2);           // wrong n
  CHECK(run_cli("eval " + id + " 01 --schedule 9").exit_code == 2);
  CHECK(run_cli("distance " + id + " 00 0x").exit_code == 2);
  CHECK(run_cli("graycode " + path_of("g.json")).exit_code == 2);  // no --n
  CHECK(run_cli("nosuchcommand").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);
}

TEST_CASE("cli help exits zero") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("verify --help").exit_code == 0);
}
