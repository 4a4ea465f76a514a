#include "bnet/constructions.hpp"

#include <numeric>
#include <random>
#include <string>
#include <utility>

#include "bnet/embedmono.hpp"

namespace bnet {

namespace {

constexpr unsigned kGrayCap = 20;
constexpr unsigned kRandomCap = 12;

// Seed-deterministic bit source. mt19937_64 output is fully specified by the
// standard; bits are consumed least significant first.
class BitStream {
 public:
  explicit BitStream(std::uint64_t seed) : gen_(seed) {}

  bool bit() {
    if (left_ == 0) {
      buffer_ = gen_();
      left_ = 64;
    }
    const bool b = buffer_ & 1u;
    buffer_ >>= 1;
    --left_;
    return b;
  }

  std::uint32_t below(std::uint32_t bound) {
    return static_cast<std::uint32_t>(gen_() % bound);
  }

 private:
  std::mt19937_64 gen_;
  std::uint64_t buffer_ = 0;
  int left_ = 0;
};

void require_random_cap(unsigned n) {
  if (n < 1 || n > kRandomCap)
    throw SizeError("random generators are capped at n <= " +
                    std::to_string(kRandomCap));
}

std::vector<TruthTable> random_tables(unsigned n, BitStream& stream) {
  std::vector<TruthTable> tables(n, TruthTable(n));
  for (unsigned i = 0; i < n; ++i)
    for (std::uint32_t x = 0; x < (std::uint32_t{1} << n); ++x)
      if (stream.bit()) tables[i].set(x, true);
  return tables;
}

}  // namespace

GrayWitness gray_code_network(unsigned n) {
  if (n < 1 || n > kGrayCap)
    throw SizeError("gray_code_network is capped at n <= " +
                    std::to_string(kGrayCap));
  const std::uint32_t count = std::uint32_t{1} << n;
  std::vector<TruthTable> tables(n, TruthTable(n));
  for (std::uint32_t k = 0; k < count; ++k) {
    const std::uint32_t word = gray_encoding(k);
    const std::uint32_t next = k + 1 < count ? gray_encoding(k + 1) : word;
    for (unsigned i = 0; i < n; ++i)
      if (next & (std::uint32_t{1} << i)) tables[i].set(word, true);
  }
  return {BooleanNetwork(n, std::move(tables)), Config(n, 0),
          Config(n, gray_encoding(count - 1))};
}

DiameterWitness exp_diameter_monotone(unsigned n) {
  if (n < 1 || n > kGrayCap / 2)
    throw SizeError("exp_diameter_monotone is capped at n <= " +
                    std::to_string(kGrayCap / 2));
  GrayWitness gray = gray_code_network(n);
  BooleanNetwork host = embed(gray.network);
  const Config start = PairConfig(gray.start, gray.start.complemented()).host();
  const Config end = PairConfig(gray.end, gray.end.complemented()).host();
  return {std::move(host), start, end, (std::uint32_t{1} << (n + 1)) - 2};
}

BooleanNetwork random_network(unsigned n, std::uint64_t seed) {
  require_random_cap(n);
  BitStream stream(seed);
  return BooleanNetwork(n, random_tables(n, stream));
}

BooleanNetwork random_no_negative_loop(unsigned n, std::uint64_t seed) {
  require_random_cap(n);
  BitStream stream(seed);
  std::vector<TruthTable> tables = random_tables(n, stream);
  for (std::uint32_t x = 0; x < (std::uint32_t{1} << n); ++x)
    for (unsigned i = 1; i <= n; ++i) {
      const std::uint32_t ibit = std::uint32_t{1} << (i - 1);
      const bool xi = x & ibit;
      const std::uint32_t flip = x ^ ibit;
      if (tables[i - 1].get(x) != xi && tables[i - 1].get(flip) == xi)
        tables[i - 1].set(flip, !xi);  // the component's value at flip(x, i)
    }
  return BooleanNetwork(n, std::move(tables));
}

BooleanNetwork random_monotone(unsigned n, std::uint64_t seed) {
  require_random_cap(n);
  BitStream stream(seed);
  std::vector<TruthTable> tables = random_tables(n, stream);
  // Upward closure by the subset-OR transform, one direction at a time.
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      const std::uint32_t jbit = std::uint32_t{1} << j;
      for (std::uint32_t x = 0; x < (std::uint32_t{1} << n); ++x)
        if ((x & jbit) && tables[i].get(x ^ jbit)) tables[i].set(x, true);
    }
  return BooleanNetwork(n, std::move(tables));
}

BooleanNetwork random_acyclic(unsigned n, std::uint64_t seed) {
  require_random_cap(n);
  BitStream stream(seed);
  std::vector<unsigned> order(n);
  std::iota(order.begin(), order.end(), 1u);
  for (unsigned k = n - 1; k > 0; --k)
    std::swap(order[k], order[stream.below(k + 1)]);

  std::vector<TruthTable> raw = random_tables(n, stream);
  std::vector<std::uint32_t> input_mask(n, 0);
  std::uint32_t earlier = 0;
  for (const unsigned component : order) {
    input_mask[component - 1] = earlier;
    earlier |= std::uint32_t{1} << (component - 1);
  }

  std::vector<TruthTable> tables(n, TruthTable(n));
  for (unsigned i = 0; i < n; ++i)
    for (std::uint32_t x = 0; x < (std::uint32_t{1} << n); ++x)
      if (raw[i].get(x & input_mask[i])) tables[i].set(x, true);
  return BooleanNetwork(n, std::move(tables));
}

}  // namespace bnet
