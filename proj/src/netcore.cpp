#include "bnet/netcore.hpp"

#include <algorithm>
#include <utility>

namespace bnet {

Config::Config(unsigned n, std::uint32_t bits) : n_(n), bits_(bits) {
  if (n < 1 || n > kMaxComponents)
    throw SizeError("component count must be in [1, " +
                    std::to_string(kMaxComponents) + "], got " +
                    std::to_string(n));
  if (bits & ~mask())
    throw DimensionError("encoding " + std::to_string(bits) +
                         " has bits above component " + std::to_string(n));
}

Config Config::ones(unsigned n) {
  Config c(n, 0);
  c.bits_ = c.mask();
  return c;
}

Config Config::from_literal(std::string_view literal) {
  const auto n = static_cast<unsigned>(literal.size());
  if (n < 1 || n > kMaxComponents)
    throw FormatError("configuration literal must have 1 to " +
                      std::to_string(kMaxComponents) + " characters");
  std::uint32_t bits = 0;
  for (unsigned i = 0; i < n; ++i) {
    const char c = literal[i];
    if (c == '1')
      bits |= std::uint32_t{1} << i;
    else if (c != '0')
      throw FormatError("configuration literal may contain only '0' and '1'");
  }
  return Config(n, bits);
}

bool Config::get(unsigned i) const {
  if (i < 1 || i > n_)
    throw DimensionError("component index " + std::to_string(i) +
                         " outside [1, " + std::to_string(n_) + "]");
  return (bits_ >> (i - 1)) & 1u;
}

Config Config::flipped(unsigned i) const {
  if (i < 1 || i > n_)
    throw DimensionError("component index " + std::to_string(i) +
                         " outside [1, " + std::to_string(n_) + "]");
  return Config(n_, bits_ ^ (std::uint32_t{1} << (i - 1)));
}

std::string Config::literal() const {
  std::string s(n_, '0');
  for (unsigned i = 0; i < n_; ++i)
    if ((bits_ >> i) & 1u) s[i] = '1';
  return s;
}

unsigned hamming(const Config& a, const Config& b) {
  if (a.n() != b.n())
    throw DimensionError("hamming distance needs equal component counts");
  return static_cast<unsigned>(std::popcount(a.bits() ^ b.bits()));
}

bool componentwise_leq(const Config& x, const Config& y) {
  if (x.n() != y.n())
    throw DimensionError("componentwise order needs equal component counts");
  return (x.bits() & ~y.bits()) == 0;
}

TruthTable::TruthTable(unsigned n) : n_(n) {
  if (n < 1 || n > kMaxComponents)
    throw SizeError("truth table arity must be in [1, " +
                    std::to_string(kMaxComponents) + "]");
  words_.resize(entries() >= 64 ? entries() / 64 : 1, 0);
}

void TruthTable::fill(bool value) {
  std::fill(words_.begin(), words_.end(),
            value ? ~std::uint64_t{0} : std::uint64_t{0});
  if (value && entries() < 64) words_[0] = (std::uint64_t{1} << entries()) - 1;
}

BooleanNetwork::BooleanNetwork(unsigned n, std::vector<TruthTable> tables)
    : n_(n), tables_(std::move(tables)) {
  if (n < 1 || n > kMaxComponents)
    throw SizeError("network must have 1 to " +
                    std::to_string(kMaxComponents) + " components");
  if (tables_.size() != n)
    throw DimensionError("expected " + std::to_string(n) + " truth tables, got " +
                         std::to_string(tables_.size()));
  for (const TruthTable& t : tables_)
    if (t.n() != n)
      throw DimensionError("each truth table must have 2^n entries");
}

std::uint32_t BooleanNetwork::evaluate_bits(std::uint32_t input) const {
  std::uint32_t out = 0;
  for (unsigned i = 0; i < n_; ++i)
    out |= std::uint32_t{tables_[i].get(input)} << i;
  return out;
}

Config BooleanNetwork::evaluate(const Config& x) const {
  if (x.n() != n_)
    throw DimensionError("configuration has " + std::to_string(x.n()) +
                         " components, network has " + std::to_string(n_));
  return Config(n_, evaluate_bits(x.bits()));
}

BooleanNetwork BooleanNetwork::identity(unsigned n) {
  std::vector<TruthTable> tables(n, TruthTable(n));
  for (unsigned i = 0; i < n; ++i) {
    const std::uint32_t bit = std::uint32_t{1} << i;
    for (std::uint32_t x = 0; x < (std::uint32_t{1} << n); ++x)
      if (x & bit) tables[i].set(x, true);
  }
  return BooleanNetwork(n, std::move(tables));
}

BooleanNetwork BooleanNetwork::constant(const Config& value) {
  std::vector<TruthTable> tables(value.n(), TruthTable(value.n()));
  for (unsigned i = 0; i < value.n(); ++i)
    if ((value.bits() >> i) & 1u) tables[i].fill(true);
  return BooleanNetwork(value.n(), std::move(tables));
}

SignedDigraph::SignedDigraph(unsigned n) : n_(n), pos_(n, 0), neg_(n, 0) {
  if (n < 1 || n > kMaxComponents)
    throw SizeError("signed digraph must have 1 to " +
                    std::to_string(kMaxComponents) + " vertices");
}

void SignedDigraph::add_arc(unsigned from, unsigned to, Sign sign) {
  if (from < 1 || from > n_ || to < 1 || to > n_)
    throw DimensionError("arc endpoint outside [1, " + std::to_string(n_) + "]");
  auto& row = sign == Sign::positive ? pos_ : neg_;
  row[from - 1] |= std::uint32_t{1} << (to - 1);
}

bool SignedDigraph::has_arc(unsigned from, unsigned to, Sign sign) const {
  if (from < 1 || from > n_ || to < 1 || to > n_) return false;
  const auto& row = sign == Sign::positive ? pos_ : neg_;
  return (row[from - 1] >> (to - 1)) & 1u;
}

std::uint32_t SignedDigraph::targets(unsigned from, Sign sign) const {
  return sign == Sign::positive ? pos_[from - 1] : neg_[from - 1];
}

std::uint32_t SignedDigraph::targets(unsigned from) const {
  return pos_[from - 1] | neg_[from - 1];
}

std::vector<Arc> SignedDigraph::arcs() const {
  std::vector<Arc> out;
  for (unsigned from = 1; from <= n_; ++from)
    for (unsigned to = 1; to <= n_; ++to) {
      if (has_arc(from, to, Sign::negative))
        out.push_back({from, to, Sign::negative});
      if (has_arc(from, to, Sign::positive))
        out.push_back({from, to, Sign::positive});
    }
  return out;
}

std::size_t SignedDigraph::arc_count() const {
  std::size_t count = 0;
  for (unsigned v = 0; v < n_; ++v)
    count += std::popcount(pos_[v]) + std::popcount(neg_[v]);
  return count;
}

SignedDigraph interaction_graph(const BooleanNetwork& f) {
  const unsigned n = f.n();
  SignedDigraph g(n);
  for (unsigned j = 1; j <= n; ++j) {
    const std::uint32_t jbit = std::uint32_t{1} << (j - 1);
    for (unsigned i = 1; i <= n; ++i) {
      bool pos = false, neg = false;
      for (std::uint32_t x = 0; x < (std::uint32_t{1} << n); ++x) {
        if (x & jbit) continue;
        const bool lo = f.component(i, x);
        const bool hi = f.component(i, x | jbit);
        pos |= hi && !lo;
        neg |= lo && !hi;
        if (pos && neg) break;
      }
      if (pos) g.add_arc(j, i, Sign::positive);
      if (neg) g.add_arc(j, i, Sign::negative);
    }
  }
  return g;
}

bool has_negative_loop(const BooleanNetwork& f) {
  for (unsigned i = 1; i <= f.n(); ++i) {
    const std::uint32_t ibit = std::uint32_t{1} << (i - 1);
    for (std::uint32_t x = 0; x < (std::uint32_t{1} << f.n()); ++x) {
      if (x & ibit) continue;
      if (f.component(i, x) && !f.component(i, x | ibit)) return true;
    }
  }
  return false;
}

bool is_monotone(const BooleanNetwork& f) {
  const std::uint32_t size = std::uint32_t{1} << f.n();
  for (std::uint32_t x = 0; x < size; ++x) {
    const std::uint32_t fx = f.evaluate_bits(x);
    for (unsigned i = 0; i < f.n(); ++i) {
      const std::uint32_t ibit = std::uint32_t{1} << i;
      if (x & ibit) continue;
      if (fx & ~f.evaluate_bits(x | ibit)) return false;
    }
  }
  return true;
}

namespace {

// Visits every directed simple cycle of length <= max_len, rooted at its
// minimum vertex, in lexicographic order of the vertex sequence. The callback
// returns false to stop the enumeration early.
template <typename Callback>
bool for_each_simple_cycle(const SignedDigraph& g, unsigned max_len,
                           Callback&& visit) {
  const unsigned n = g.n();
  std::vector<unsigned> path;
  std::uint32_t on_path = 0;

  // Iterative DFS would obscure the emit-before-extend order; depth <= n <= 24.
  auto dfs = [&](auto&& self, unsigned root, unsigned at) -> bool {
    if (g.targets(at) & (std::uint32_t{1} << (root - 1)))
      if (!visit(path)) return false;
    if (path.size() == max_len) return true;
    const std::uint32_t out = g.targets(at);
    for (unsigned v = root + 1; v <= n; ++v) {
      const std::uint32_t vbit = std::uint32_t{1} << (v - 1);
      if (!(out & vbit) || (on_path & vbit)) continue;
      path.push_back(v);
      on_path |= vbit;
      const bool keep_going = self(self, root, v);
      on_path &= ~vbit;
      path.pop_back();
      if (!keep_going) return false;
    }
    return true;
  };

  for (unsigned root = 1; root <= n; ++root) {
    path.assign(1, root);
    on_path = std::uint32_t{1} << (root - 1);
    if (!dfs(dfs, root, root)) return false;
  }
  return true;
}

// Sign sets available along the closed walk v0 -> v1 -> ... -> v0.
std::vector<std::pair<bool, bool>> arc_signs_along(
    const SignedDigraph& g, const std::vector<unsigned>& cycle) {
  std::vector<std::pair<bool, bool>> signs(cycle.size());
  for (std::size_t k = 0; k < cycle.size(); ++k) {
    const unsigned from = cycle[k];
    const unsigned to = cycle[(k + 1) % cycle.size()];
    signs[k] = {g.has_arc(from, to, Sign::positive),
                g.has_arc(from, to, Sign::negative)};
  }
  return signs;
}

}  // namespace

std::vector<SignedCycle> signed_cycles(const SignedDigraph& g,
                                       unsigned max_len) {
  if (max_len > g.n())
    throw SizeError("cycle length bound exceeds the vertex count");
  std::vector<SignedCycle> out;
  for_each_simple_cycle(g, max_len, [&](const std::vector<unsigned>& cycle) {
    const auto signs = arc_signs_along(g, cycle);
    // One entry per choice of signed arc, positive tried first per position.
    auto expand = [&](auto&& self, std::size_t k, bool negatives_odd) -> void {
      if (k == cycle.size()) {
        out.push_back({cycle, negatives_odd ? Sign::negative : Sign::positive});
        return;
      }
      if (signs[k].first) self(self, k + 1, negatives_odd);
      if (signs[k].second) self(self, k + 1, !negatives_odd);
    };
    expand(expand, 0, false);
    return true;
  });
  return out;
}

bool has_cycle_of_sign(const SignedDigraph& g, Sign sign, unsigned max_len) {
  if (max_len > g.n())
    throw SizeError("cycle length bound exceeds the vertex count");
  bool found = false;
  for_each_simple_cycle(g, max_len, [&](const std::vector<unsigned>& cycle) {
    bool negatives_odd = false;
    for (const auto& [pos, neg] : arc_signs_along(g, cycle)) {
      if (pos && neg) {  // either parity achievable
        found = true;
        return false;
      }
      negatives_odd ^= neg;
    }
    if ((sign == Sign::negative) == negatives_odd) {
      found = true;
      return false;
    }
    return true;
  });
  return found;
}

bool is_acyclic(const SignedDigraph& g) {
  const unsigned n = g.n();
  std::vector<unsigned> indegree(n, 0);
  for (unsigned v = 1; v <= n; ++v) {
    std::uint32_t out = g.targets(v);
    while (out) {
      indegree[std::countr_zero(out)] += 1;
      out &= out - 1;
    }
  }
  std::vector<unsigned> ready;
  for (unsigned v = 0; v < n; ++v)
    if (indegree[v] == 0) ready.push_back(v);
  unsigned removed = 0;
  while (!ready.empty()) {
    const unsigned v = ready.back();
    ready.pop_back();
    ++removed;
    std::uint32_t out = g.targets(v + 1);
    while (out) {
      const unsigned w = std::countr_zero(out);
      out &= out - 1;
      if (--indegree[w] == 0) ready.push_back(w);
    }
  }
  return removed == n;
}

}  // namespace bnet
