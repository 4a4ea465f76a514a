#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bnet/errors.hpp"

namespace bnet {

/// Hard cap on component count; encodings and truth-table indices are 32-bit.
inline constexpr unsigned kMaxComponents = 24;

/// One state of an n-component network.
///
/// Component i (1-based) is stored at bit i-1, so bits() is the little-endian
/// integer encoding used to index truth tables everywhere. The literal form is
/// component-1-leftmost: "011" means x1=0, x2=1, x3=1 and has encoding 6.
class Config {
 public:
  Config(unsigned n, std::uint32_t bits);

  static Config zeros(unsigned n) { return Config(n, 0); }
  static Config ones(unsigned n);
  static Config from_literal(std::string_view literal);

  unsigned n() const { return n_; }
  std::uint32_t bits() const { return bits_; }
  std::uint32_t mask() const { return (std::uint32_t{1} << n_) - 1; }

  bool get(unsigned i) const;
  Config flipped(unsigned i) const;
  Config complemented() const { return Config(n_, ~bits_ & mask()); }
  unsigned weight() const { return static_cast<unsigned>(std::popcount(bits_)); }

  std::string literal() const;

  friend auto operator<=>(const Config&, const Config&) = default;

 private:
  unsigned n_;
  std::uint32_t bits_;
};

unsigned hamming(const Config& a, const Config& b);

/// x <= y in the componentwise partial order.
bool componentwise_leq(const Config& x, const Config& y);

/// All 2^n output bits of one component, packed 64 per word.
class TruthTable {
 public:
  explicit TruthTable(unsigned n);

  unsigned n() const { return n_; }
  std::uint32_t entries() const { return std::uint32_t{1} << n_; }

  bool get(std::uint32_t index) const {
    return (words_[index >> 6] >> (index & 63u)) & 1u;
  }
  void set(std::uint32_t index, bool value) {
    const std::uint64_t bit = std::uint64_t{1} << (index & 63u);
    if (value)
      words_[index >> 6] |= bit;
    else
      words_[index >> 6] &= ~bit;
  }
  void fill(bool value);

  bool operator==(const TruthTable&) const = default;

 private:
  unsigned n_;
  std::vector<std::uint64_t> words_;
};

/// A map f: {0,1}^n -> {0,1}^n given by one explicit truth table per component.
class BooleanNetwork {
 public:
  BooleanNetwork(unsigned n, std::vector<TruthTable> tables);

  unsigned n() const { return n_; }

  /// f_i at the encoded input, i in [1, n].
  bool component(unsigned i, std::uint32_t input) const {
    return tables_[i - 1].get(input);
  }
  std::uint32_t evaluate_bits(std::uint32_t input) const;
  Config evaluate(const Config& x) const;

  const TruthTable& table(unsigned i) const { return tables_[i - 1]; }

  static BooleanNetwork identity(unsigned n);
  static BooleanNetwork constant(const Config& value);

  bool operator==(const BooleanNetwork&) const = default;

 private:
  unsigned n_;
  std::vector<TruthTable> tables_;
};

enum class Sign : int { negative = -1, positive = 1 };

inline char sign_char(Sign s) { return s == Sign::positive ? '+' : '-'; }

struct Arc {
  unsigned from;
  unsigned to;
  Sign sign;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Signed digraph on vertices [1, n]; both signs may coexist on a vertex pair.
class SignedDigraph {
 public:
  explicit SignedDigraph(unsigned n);

  unsigned n() const { return n_; }

  void add_arc(unsigned from, unsigned to, Sign sign);
  bool has_arc(unsigned from, unsigned to, Sign sign) const;

  /// Bitmask of targets of `from` (bit to-1), per sign or for both signs.
  std::uint32_t targets(unsigned from, Sign sign) const;
  std::uint32_t targets(unsigned from) const;

  /// All arcs sorted by (from, to, sign); negative before positive.
  std::vector<Arc> arcs() const;
  std::size_t arc_count() const;

 private:
  unsigned n_;
  std::vector<std::uint32_t> pos_;
  std::vector<std::uint32_t> neg_;
};

/// Signed interaction graph: arc j -> i with sign s when some input witnesses
/// a discrete partial derivative of f_i in direction j with that sign.
SignedDigraph interaction_graph(const BooleanNetwork& f);

/// True iff some component i has a negative arc i -> i in the interaction graph.
bool has_negative_loop(const BooleanNetwork& f);

/// True iff f preserves the componentwise partial order. Checked over covering
/// pairs only: f(x) <= f(flip(x, i)) for every x and every i with x_i = 0.
bool is_monotone(const BooleanNetwork& f);

/// One directed simple cycle together with one choice of signed arc per step.
struct SignedCycle {
  std::vector<unsigned> vertices;  // rooted at the minimum vertex
  Sign sign;                       // product of the chosen arc signs

  friend bool operator==(const SignedCycle&, const SignedCycle&) = default;
};

/// Enumerates every directed simple cycle of length <= max_len, expanded to one
/// entry per choice of signed arc along the cycle. Cycles are emitted in
/// lexicographic order of the vertex sequence rooted at its minimum vertex;
/// sign choices vary positive-first with the first arc most significant.
std::vector<SignedCycle> signed_cycles(const SignedDigraph& g, unsigned max_len);

/// True iff some simple cycle of length <= max_len realizes the given sign.
bool has_cycle_of_sign(const SignedDigraph& g, Sign sign, unsigned max_len);

/// True iff the underlying unsigned digraph has no directed cycle (a loop
/// counts as a cycle).
bool is_acyclic(const SignedDigraph& g);

}  // namespace bnet
