#include <doctest.h>

#include "bnet/asyncdyn.hpp"
#include "bnet/constructions.hpp"
#include "bnet/embedmono.hpp"

using namespace bnet;

TEST_CASE("gray words step through all states one flip at a time") {
  for (unsigned n = 1; n <= 12; ++n) {
    const std::uint32_t count = std::uint32_t{1} << n;
    std::vector<bool> seen(count, false);
    for (std::uint32_t k = 0; k < count; ++k) {
      const std::uint32_t word = gray_encoding(k);
      CHECK_FALSE(seen[word]);
      seen[word] = true;
      if (k + 1 < count)
        CHECK(std::popcount(word ^ gray_encoding(k + 1)) == 1);
    }
  }
}

TEST_CASE("gray-code network follows the word order") {
  const GrayWitness w = gray_code_network(2);
  // Word encodings 0, 1, 3, 2; the last word is fixed.
  CHECK(w.start == Config(2, 0));
  CHECK(w.end == Config(2, 2));
  CHECK(w.network.evaluate_bits(0) == 1);
  CHECK(w.network.evaluate_bits(1) == 3);
  CHECK(w.network.evaluate_bits(3) == 2);
  CHECK(w.network.evaluate_bits(2) == 2);

  for (unsigned n = 1; n <= 8; ++n) {
    const GrayWitness g = gray_code_network(n);
    const std::uint32_t count = std::uint32_t{1} << n;
    for (std::uint32_t k = 0; k + 1 < count; ++k)
      CHECK(g.network.evaluate_bits(gray_encoding(k)) == gray_encoding(k + 1));
    CHECK(g.network.evaluate_bits(g.end.bits()) == g.end.bits());
  }
}

TEST_CASE("gray-code network structural properties") {
  for (unsigned n = 1; n <= 8; ++n) {
    const GrayWitness w = gray_code_network(n);
    CHECK_FALSE(has_negative_loop(w.network));
    CHECK(fixed_points(w.network) == std::vector<Config>{w.end});
    CHECK(distance(w.network, w.start, w.end) ==
          Distance{(std::uint32_t{1} << n) - 1});
  }
  // Unique fixed point plus non-constant dynamics force an interaction cycle.
  CHECK_FALSE(is_acyclic(interaction_graph(gray_code_network(2).network)));
  CHECK_THROWS_AS(gray_code_network(0), SizeError);
  CHECK_THROWS_AS(gray_code_network(21), SizeError);
}

TEST_CASE("exponential-diameter witness") {
  for (unsigned n = 1; n <= 4; ++n) {
    const DiameterWitness w = exp_diameter_monotone(n);
    CHECK(w.network.n() == 2 * n);
    CHECK(w.claimed_distance == (std::uint32_t{1} << (n + 1)) - 2);
    CHECK(is_monotone(w.network));
    CHECK(w.network.evaluate(w.end) == w.end);
    CHECK(distance(w.network, w.start, w.end) == Distance{w.claimed_distance});
    // For m = 2n host components the distance clears 2^(m/2).
    if (n >= 2) CHECK(w.claimed_distance >= (std::uint32_t{1} << n));
  }
  SUBCASE("degenerate one-component case") {
    const DiameterWitness w = exp_diameter_monotone(1);
    CHECK(w.start == Config::from_literal("01"));
    CHECK(w.end == Config::from_literal("10"));
    CHECK(w.claimed_distance == 2);
  }
  SUBCASE("four-component case reaches distance 6") {
    CHECK(exp_diameter_monotone(2).claimed_distance == 6);
  }
  CHECK_THROWS_AS(exp_diameter_monotone(11), SizeError);
}

TEST_CASE("random networks are seed-deterministic") {
  for (unsigned n = 1; n <= 4; ++n)
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      CHECK(random_network(n, seed) == random_network(n, seed));
      CHECK(random_no_negative_loop(n, seed) ==
            random_no_negative_loop(n, seed));
      CHECK(random_monotone(n, seed) == random_monotone(n, seed));
      CHECK(random_acyclic(n, seed) == random_acyclic(n, seed));
    }
  // Different seeds almost surely differ; just pin one sample pair.
  CHECK(random_network(3, 0) != random_network(3, 1));
  CHECK_THROWS_AS(random_network(13, 0), SizeError);
}

TEST_CASE("one-component random networks cover the whole codomain") {
  bool seen[2][2] = {};
  for (std::uint64_t seed = 0; seed < 64; ++seed) {
    const BooleanNetwork f = random_network(1, seed);
    seen[f.component(1, 0)][f.component(1, 1)] = true;
  }
  for (const auto& row : seen)
    for (const bool hit : row) CHECK(hit);
}

TEST_CASE("repaired networks have no negative loop and no two-cycle") {
  for (unsigned n = 1; n <= 6; ++n)
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const BooleanNetwork f = random_no_negative_loop(n, 97 * n + seed);
      CHECK_FALSE(has_negative_loop(f));
      CHECK_FALSE(has_two_cycle(f));
    }
}

TEST_CASE("monotone generator output is an upward closure") {
  for (unsigned n = 1; n <= 3; ++n)
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const BooleanNetwork f = random_monotone(n, 3 * n + seed);
      CHECK(is_monotone(f));
      // The closure dominates the raw draw pointwise: f_i(x) is the or of
      // g_i over the sub-cube below x, checked by direct subset enumeration.
      const BooleanNetwork g = random_network(n, 3 * n + seed);
      for (unsigned i = 1; i <= n; ++i)
        for (std::uint32_t x = 0; x < (std::uint32_t{1} << n); ++x) {
          bool any = false;
          for (std::uint32_t y = 0; y <= x; ++y)
            if ((y & ~x) == 0) any = any || g.component(i, y);
          CHECK(f.component(i, x) == any);
        }
    }
}

TEST_CASE("closure of a constant-zero draw stays constant-zero") {
  // Seeds where the raw draw happens to be all-zeros are impractical to find,
  // so check the invariant directly on the identity-like small case instead:
  // a network with empty tables closes to itself.
  const BooleanNetwork zero = BooleanNetwork::constant(Config::zeros(3));
  CHECK(is_monotone(zero));
  CHECK(fixed_points(zero) == std::vector<Config>{Config::zeros(3)});
}

TEST_CASE("acyclic generator yields acyclic interaction graphs") {
  for (unsigned n = 1; n <= 6; ++n)
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const BooleanNetwork f = random_acyclic(n, 7 * n + seed);
      CHECK(is_acyclic(interaction_graph(f)));
    }
}
