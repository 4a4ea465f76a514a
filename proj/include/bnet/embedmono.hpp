#pragma once

#include <cstdint>

#include "bnet/netcore.hpp"

namespace bnet {

/// Weight band of a pair configuration (x, y) in {0,1}^{2n}, split on
/// pair weight w(x) + w(y): Below (<= n-2), A (n-1), B (n), C (n+1),
/// Above (>= n+2). The mirror set Omega = {(x, complement(x))} lies in B.
enum class Layer { below, a, b, c, above };

/// A configuration of {0,1}^{2n} viewed as the concatenation (x, y):
/// components 1..n hold x, components n+1..2n hold y.
class PairConfig {
 public:
  PairConfig(const Config& x, const Config& y);

  /// Splits a host configuration with an even component count.
  static PairConfig from_host(const Config& host);

  unsigned half_n() const { return half_n_; }
  Config x() const { return Config(half_n_, x_bits_); }
  Config y() const { return Config(half_n_, y_bits_); }
  Config host() const {
    return Config(2 * half_n_, x_bits_ | (y_bits_ << half_n_));
  }

  unsigned pair_weight() const {
    return static_cast<unsigned>(std::popcount(x_bits_) +
                                 std::popcount(y_bits_));
  }
  bool in_omega() const;
  Layer layer() const;

  friend auto operator<=>(const PairConfig&, const PairConfig&) = default;

 private:
  unsigned half_n_;
  std::uint32_t x_bits_;
  std::uint32_t y_bits_;
};

unsigned pair_weight(const Config& x, const Config& y);
bool in_omega(const PairConfig& z);
Layer layer(const PairConfig& z);

/// The host input (complement(y), complement(x)) paired with (x, y) by the
/// half-swap mirror identity.
Config mirror_input(const Config& host);

/// Builds the monotone 2n-component host network that simulates f.
///
/// For i in [1, n] the first-half component is, first matching rule wins:
///   f_i(x)            when y = complement(x) or flip(y, i) = complement(x)
///   not x_i           when w(x, y) = n
///   1                 when w(x, y) = n + 1
///   0                 when w(x, y) = n - 1
///   1                 when w(x, y) >= n + 2
///   0                 when w(x, y) <= n - 2
/// and the second half mirrors it: f'_{n+i}(x, y) = not f'_i(~y, ~x).
///
/// Requires f without negative loops (else the host need not be monotone);
/// pass force to build it anyway. Throws SizeError when 2n exceeds the
/// representable component count.
BooleanNetwork embed(const BooleanNetwork& f, bool force = false);

/// True iff f'_i(x, y) = not f'_{n+i}(~y, ~x) for every i in [1, n] and every
/// host input.
bool mirror_identity_check(const BooleanNetwork& fprime);

}  // namespace bnet
