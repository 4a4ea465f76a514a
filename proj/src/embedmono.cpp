#include "bnet/embedmono.hpp"

#include <string>
#include <utility>

namespace bnet {

PairConfig::PairConfig(const Config& x, const Config& y)
    : half_n_(x.n()), x_bits_(x.bits()), y_bits_(y.bits()) {
  if (x.n() != y.n())
    throw DimensionError("pair halves must have equal component counts");
  if (2 * half_n_ > kMaxComponents)
    throw SizeError("pair configuration exceeds " +
                    std::to_string(kMaxComponents) + " host components");
}

PairConfig PairConfig::from_host(const Config& host) {
  if (host.n() % 2 != 0)
    throw DimensionError("host configuration needs an even component count");
  const unsigned half = host.n() / 2;
  const std::uint32_t half_mask = (std::uint32_t{1} << half) - 1;
  return PairConfig(Config(half, host.bits() & half_mask),
                    Config(half, host.bits() >> half));
}

bool PairConfig::in_omega() const {
  const std::uint32_t half_mask = (std::uint32_t{1} << half_n_) - 1;
  return y_bits_ == (~x_bits_ & half_mask);
}

Layer PairConfig::layer() const {
  const int w = static_cast<int>(pair_weight());
  const int n = static_cast<int>(half_n_);
  if (w <= n - 2) return Layer::below;
  if (w == n - 1) return Layer::a;
  if (w == n) return Layer::b;
  if (w == n + 1) return Layer::c;
  return Layer::above;
}

unsigned pair_weight(const Config& x, const Config& y) {
  if (x.n() != y.n())
    throw DimensionError("pair weight needs equal component counts");
  return x.weight() + y.weight();
}

bool in_omega(const PairConfig& z) { return z.in_omega(); }

Layer layer(const PairConfig& z) { return z.layer(); }

Config mirror_input(const Config& host) {
  const PairConfig z = PairConfig::from_host(host);
  return PairConfig(z.y().complemented(), z.x().complemented()).host();
}

BooleanNetwork embed(const BooleanNetwork& f, bool force) {
  const unsigned n = f.n();
  if (2 * n > kMaxComponents)
    throw SizeError("embedding needs 2n <= " + std::to_string(kMaxComponents) +
                    " host components, got 2n = " + std::to_string(2 * n));
  if (!force && has_negative_loop(f))
    throw HypothesisError(
        "the network has a negative loop; the host is only guaranteed "
        "monotone without one (use force to build it anyway)");

  const std::uint32_t half_mask = (std::uint32_t{1} << n) - 1;
  const std::uint32_t host_size = std::uint32_t{1} << (2 * n);
  const int half = static_cast<int>(n);
  std::vector<TruthTable> tables(2 * n, TruthTable(2 * n));

  for (unsigned i = 1; i <= n; ++i) {
    const std::uint32_t ibit = std::uint32_t{1} << (i - 1);
    TruthTable& table = tables[i - 1];
    for (std::uint32_t z = 0; z < host_size; ++z) {
      const std::uint32_t x = z & half_mask;
      const std::uint32_t y = z >> n;
      const std::uint32_t xc = ~x & half_mask;
      const int w = std::popcount(z);
      bool out;
      if (y == xc || (y ^ ibit) == xc)
        out = f.component(i, x);
      else if (w == half)
        out = !(x & ibit);
      else if (w == half + 1)
        out = true;
      else if (w == half - 1)
        out = false;
      else
        out = w >= half + 2;
      if (out) table.set(z, true);
    }
  }

  // Second half by the mirror rule, reading the first-half tables.
  for (unsigned i = 1; i <= n; ++i) {
    const TruthTable& first = tables[i - 1];
    TruthTable& table = tables[n + i - 1];
    for (std::uint32_t z = 0; z < host_size; ++z) {
      const std::uint32_t x = z & half_mask;
      const std::uint32_t y = z >> n;
      const std::uint32_t mirrored = (~y & half_mask) | ((~x & half_mask) << n);
      if (!first.get(mirrored)) table.set(z, true);
    }
  }

  return BooleanNetwork(2 * n, std::move(tables));
}

bool mirror_identity_check(const BooleanNetwork& fprime) {
  if (fprime.n() % 2 != 0)
    throw DimensionError("mirror identity needs an even component count");
  const unsigned n = fprime.n() / 2;
  const std::uint32_t half_mask = (std::uint32_t{1} << n) - 1;
  const std::uint32_t host_size = std::uint32_t{1} << (2 * n);
  for (std::uint32_t z = 0; z < host_size; ++z) {
    const std::uint32_t x = z & half_mask;
    const std::uint32_t y = z >> n;
    const std::uint32_t mirrored = (~y & half_mask) | ((~x & half_mask) << n);
    for (unsigned i = 1; i <= n; ++i)
      if (fprime.component(i, z) == fprime.component(n + i, mirrored))
        return false;
  }
  return true;
}

}  // namespace bnet
