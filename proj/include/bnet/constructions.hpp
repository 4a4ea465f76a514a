#pragma once

#include <cstdint>

#include "bnet/netcore.hpp"

namespace bnet {

/// Encoding of the reflected-binary Gray word of the given rank (0-based).
constexpr std::uint32_t gray_encoding(std::uint32_t rank) {
  return rank ^ (rank >> 1);
}

/// A network whose asynchronous graph is one directed Hamming path through
/// all 2^n states, ending in the unique fixed point.
struct GrayWitness {
  BooleanNetwork network;
  Config start;  // first Gray word (encoding 0)
  Config end;    // last Gray word, the unique fixed point
};

/// A monotone 2n-component network with a fixed point at exponential
/// asynchronous distance from the start state.
struct DiameterWitness {
  BooleanNetwork network;
  Config start;  // (x, complement(x)) over the host components
  Config end;    // (y, complement(y)), a fixed point of the host
  std::uint32_t claimed_distance;  // 2^(n+1) - 2
};

/// Network mapping Gray word k to word k+1 and fixing the last word; words
/// are ordered by gray_encoding. 1 <= n <= 20.
GrayWitness gray_code_network(unsigned n);

/// embed() applied to the Gray-code network, with the mirrored start and end
/// states. 1 <= n <= 10 (the host has 2n components).
DiameterWitness exp_diameter_monotone(unsigned n);

/// Every table bit drawn independently from a seed-deterministic stream
/// (mt19937_64 words, least significant bit first; component-major order).
/// n <= 12.
BooleanNetwork random_network(unsigned n, std::uint64_t seed);

/// random_network followed by a single repair pass: scanning states in
/// integer order and components ascending, whenever f_i(x) = not x_i and
/// f_i(flip(x, i)) = x_i, the entry at flip(x, i) is reset to component i of
/// flip(x, i). The result never has a negative loop. n <= 12.
BooleanNetwork random_no_negative_loop(unsigned n, std::uint64_t seed);

/// Upward closure of random_network: f_i(x) = 1 iff g_i(y) = 1 for some
/// y <= x. The result is always monotone. n <= 12.
BooleanNetwork random_monotone(unsigned n, std::uint64_t seed);

/// Random network whose interaction graph is acyclic by construction: a
/// random permutation fixes a topological order and each component reads only
/// components earlier in it (table inputs are masked accordingly). n <= 12.
BooleanNetwork random_acyclic(unsigned n, std::uint64_t seed);

}  // namespace bnet
