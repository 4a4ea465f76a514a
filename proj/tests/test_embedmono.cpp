#include <doctest.h>

#include <optional>
#include <vector>

#include "bnet/asyncdyn.hpp"
#include "bnet/constructions.hpp"
#include "bnet/embedmono.hpp"
#include "bnet/io.hpp"

using namespace bnet;

namespace {

BooleanNetwork make_net(const std::vector<std::string>& tables) {
  return network_from_tables(static_cast<unsigned>(tables.size()), tables);
}

// Outputs implied by every applicable rule of the first-half definition,
// evaluated directly from the side conditions rather than first-match order.
std::vector<bool> applicable_case_outputs(const BooleanNetwork& f, unsigned i,
                                          std::uint32_t x, std::uint32_t y) {
  const unsigned n = f.n();
  const std::uint32_t mask = (std::uint32_t{1} << n) - 1;
  const std::uint32_t ibit = std::uint32_t{1} << (i - 1);
  const std::uint32_t xc = ~x & mask;
  const int w = std::popcount(x) + std::popcount(y);
  const int half = static_cast<int>(n);
  std::vector<bool> outputs;
  if (y == xc || (y ^ ibit) == xc) outputs.push_back(f.component(i, x));
  if (w == half && y != xc) outputs.push_back(!(x & ibit));
  if (w == half + 1 && (y ^ ibit) != xc) outputs.push_back(true);
  if (w == half - 1 && (y ^ ibit) != xc) outputs.push_back(false);
  if (w >= half + 2) outputs.push_back(true);
  if (w <= half - 2) outputs.push_back(false);
  return outputs;
}

}  // namespace

TEST_CASE("pair weights and the mirror set") {
  CHECK(pair_weight(Config::from_literal("01"), Config::from_literal("11")) ==
        3);
  CHECK(pair_weight(Config::zeros(2), Config::zeros(2)) == 0);
  for (unsigned n = 1; n <= 5; ++n)
    for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << n); ++bits) {
      const Config x(n, bits);
      CHECK(pair_weight(x, x.complemented()) == n);
      CHECK(PairConfig(x, x.complemented()).in_omega());
    }
  CHECK(PairConfig(Config::from_literal("01"), Config::from_literal("10"))
            .in_omega());
  CHECK_FALSE(PairConfig(Config::from_literal("01"), Config::from_literal("11"))
                  .in_omega());
  CHECK_THROWS_AS(pair_weight(Config(2, 0), Config(3, 0)), DimensionError);
}

TEST_CASE("pair configurations split and concatenate") {
  for (std::uint32_t host = 0; host < 64; ++host) {
    const Config h(6, host);
    const PairConfig z = PairConfig::from_host(h);
    CHECK(z.host() == h);
    CHECK(PairConfig(z.x(), z.y()).host() == h);
    CHECK(z.pair_weight() == h.weight());
  }
  CHECK_THROWS_AS(PairConfig::from_host(Config(3, 0)), DimensionError);
}

TEST_CASE("layer classification by pair weight") {
  const auto layer_of = [](const char* xs, const char* ys) {
    return PairConfig(Config::from_literal(xs), Config::from_literal(ys))
        .layer();
  };
  CHECK(layer_of("11", "11") == Layer::above);   // weight 4 = n + 2
  CHECK(layer_of("00", "01") == Layer::a);       // weight 1 = n - 1
  CHECK(layer_of("00", "00") == Layer::below);   // weight 0 = n - 2
  CHECK(layer_of("01", "11") == Layer::c);       // weight 3 = n + 1
  for (unsigned n = 1; n <= 5; ++n)
    for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << n); ++bits) {
      const Config x(n, bits);
      CHECK(PairConfig(x, x.complemented()).layer() == Layer::b);
    }
}

TEST_CASE("every host input matches exactly one consistent output") {
  std::vector<BooleanNetwork> inputs;
  inputs.push_back(BooleanNetwork::identity(1));
  inputs.push_back(BooleanNetwork::identity(3));
  inputs.push_back(gray_code_network(3).network);
  for (unsigned n = 1; n <= 4; ++n)
    for (std::uint64_t seed = 0; seed < 6; ++seed)
      inputs.push_back(random_no_negative_loop(n, 29 * n + seed));

  for (const BooleanNetwork& f : inputs) {
    const unsigned n = f.n();
    const std::uint32_t mask = (std::uint32_t{1} << n) - 1;
    const BooleanNetwork host = embed(f);
    for (std::uint32_t z = 0; z < (std::uint32_t{1} << (2 * n)); ++z) {
      const std::uint32_t x = z & mask;
      const std::uint32_t y = z >> n;
      for (unsigned i = 1; i <= n; ++i) {
        const auto outputs = applicable_case_outputs(f, i, x, y);
        REQUIRE(!outputs.empty());
        for (const bool out : outputs) {
          // No two applicable rules disagree, so first-match order is moot.
          CHECK(out == outputs.front());
        }
        CHECK(host.component(i, z) == outputs.front());
      }
    }
  }
}

TEST_CASE("embedding the one-component identity") {
  const BooleanNetwork host = embed(BooleanNetwork::identity(1));
  // Mirror pairs of the two fixed points stay fixed.
  const std::uint32_t pair01 = 0 | (1u << 1);  // (0, 1)
  const std::uint32_t pair10 = 1 | (0u << 1);  // (1, 0)
  CHECK(host.evaluate_bits(pair01) == pair01);
  CHECK(host.evaluate_bits(pair10) == pair10);
  CHECK(host.evaluate_bits(0) == 0);  // first rule: flip(y,1) = complement(x)
  // Off-mirror fixed points may exist; here all four states are fixed.
  CHECK(fixed_points(host).size() == 4);
}

TEST_CASE("saturated inputs map to the all-ones state") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const BooleanNetwork f = random_no_negative_loop(2, seed);
    const BooleanNetwork host = embed(f);
    CHECK(host.evaluate_bits(0b1111) == 0b1111);
    CHECK(host.evaluate_bits(0) == 0);
  }
}

TEST_CASE("hosts of negative-loop-free networks are monotone") {
  for (unsigned n = 1; n <= 5; ++n) {
    CHECK(is_monotone(embed(gray_code_network(n).network)));
    for (std::uint64_t seed = 0; seed < 8; ++seed)
      CHECK(is_monotone(embed(random_no_negative_loop(n, 5 * n + seed))));
  }
}

TEST_CASE("fixed points correspond through the mirror pairing") {
  for (unsigned n = 1; n <= 4; ++n)
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
      const BooleanNetwork f = random_no_negative_loop(n, 11 * n + seed);
      const BooleanNetwork host = embed(f);
      const std::uint32_t mask = (std::uint32_t{1} << n) - 1;
      for (std::uint32_t x = 0; x <= mask; ++x) {
        const std::uint32_t o = x | ((~x & mask) << n);
        CHECK((f.evaluate_bits(x) == x) == (host.evaluate_bits(o) == o));
      }
    }
}

TEST_CASE("host outputs saturate outside the middle weight band") {
  for (unsigned n = 1; n <= 4; ++n)
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
      const BooleanNetwork f = random_no_negative_loop(n, 43 * n + seed);
      const BooleanNetwork host = embed(f);
      const std::uint32_t host_mask = (std::uint32_t{1} << (2 * n)) - 1;
      for (std::uint32_t z = 0; z <= host_mask; ++z) {
        const int w = std::popcount(z);
        if (w <= static_cast<int>(n) - 2) CHECK(host.evaluate_bits(z) == 0);
        if (w >= static_cast<int>(n) + 2)
          CHECK(host.evaluate_bits(z) == host_mask);
      }
    }
}

TEST_CASE("mirror identity holds on every host") {
  CHECK(mirror_identity_check(embed(BooleanNetwork::identity(1))));
  CHECK(mirror_identity_check(embed(gray_code_network(2).network)));
  for (unsigned n = 1; n <= 4; ++n)
    for (std::uint64_t seed = 0; seed < 6; ++seed)
      CHECK(mirror_identity_check(embed(random_no_negative_loop(n, seed))));
}

TEST_CASE("a corrupted first-half table breaks the mirror identity") {
  const BooleanNetwork host = embed(gray_code_network(2).network);
  std::vector<TruthTable> tables;
  for (unsigned i = 1; i <= host.n(); ++i) tables.push_back(host.table(i));
  tables[0].set(5, !tables[0].get(5));  // flip one output bit of component 1
  const BooleanNetwork corrupted(host.n(), std::move(tables));
  CHECK_FALSE(mirror_identity_check(corrupted));
}

TEST_CASE("embedding requires the negative-loop-free hypothesis") {
  const BooleanNetwork negation = make_net({"10"});
  CHECK_THROWS_AS(embed(negation), HypothesisError);
  // Forced construction is well defined but no longer monotone here.
  const BooleanNetwork host = embed(negation, true);
  CHECK(host.n() == 2);
  CHECK_FALSE(is_monotone(host));
}

TEST_CASE("embedding size cap") {
  CHECK_THROWS_AS(embed(BooleanNetwork::identity(13)), SizeError);
}

TEST_CASE("mirror input is an involution pairing the two halves") {
  for (std::uint32_t z = 0; z < 16; ++z) {
    const Config host(4, z);
    CHECK(mirror_input(mirror_input(host)) == host);
  }
  CHECK(mirror_input(Config::from_literal("0110")) ==
        Config::from_literal("0110"));
}
