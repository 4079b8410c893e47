#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "burst/dense.hpp"
#include "burst/oracle.hpp"

namespace burst {

// Even blocks [(2i-2)P+1, 2iP] and odd blocks [1, P], [(2i-3)P+1, (2i-1)P],
// [N-P+1, N] over the word zero-padded to N, the next multiple of 2P.
struct BlockLayout {
  std::size_t n = 0;
  std::size_t P = 1;

  std::size_t padded() const { return (n + 2 * P - 1) / (2 * P) * (2 * P); }
  std::size_t even_count() const { return padded() / (2 * P); }
  std::size_t odd_count() const { return even_count() + 1; }
  Interval even_block(std::size_t i) const { return {(2 * i - 2) * P + 1, 2 * i * P}; }
  Interval odd_block(std::size_t i) const {
    if (i == 1) return {1, P};
    if (i == odd_count()) return {padded() - P + 1, padded()};
    return {(2 * i - 3) * P + 1, (2 * i - 1) * P};
  }
};

// Oracles for full blocks (length 2P) and the two half blocks at the ends
// of the odd cover (length P).
struct BlockOracles {
  SyndromeOracle full;
  SyndromeOracle half;

  const SyndromeOracle& for_length(std::size_t len) const { return len == full.k ? full : half; }
  // Modulus of the block sums: labels split into two digits below it.
  std::uint32_t modulus() const {
    const std::uint32_t most = std::max(full.label_count, half.label_count);
    std::uint32_t a = 1;
    while (a * a < most) ++a;
    return a;
  }
};

inline std::shared_ptr<const BlockOracles> build_block_oracles(std::size_t P, std::size_t span, ErrorModel model) {
  return std::make_shared<const BlockOracles>(
      BlockOracles{oracle_build_brute(2 * P, span, model), oracle_build_brute(P, span, model)});
}

// The four residues: even-block label digits, then odd-block label digits.
struct BlockSums {
  long long d1 = 0;
  long long e1 = 0;
  long long d2 = 0;
  long long e2 = 0;
  friend bool operator==(const BlockSums&, const BlockSums&) = default;
  friend auto operator<=>(const BlockSums&, const BlockSums&) = default;
};

namespace detail {

inline Word padded_copy(const Word& x, std::size_t length) {
  Word out = x;
  out.resize(length, 0);
  return out;
}

// Positions past the end of x read as zero padding.
inline std::uint32_t block_label(const Word& x, Interval block, const BlockOracles& oracles) {
  std::uint32_t packed = 0;
  for (std::size_t i = block.lo - 1; i < block.hi; ++i) {
    const Symbol b = i < x.size() ? x[i] : Symbol{0};
    require(b <= 1, "block symbols must be bits");
    packed = (packed << 1) | b;
  }
  return oracles.for_length(block.length()).label(packed);
}

}  // namespace detail

inline BlockSums block_syndromes(const Word& x, const BlockLayout& layout, const BlockOracles& oracles) {
  require_binary(x);
  require(x.size() == layout.n, "block syndromes need a word of length n");
  require(oracles.full.k == 2 * layout.P && oracles.half.k == layout.P, "oracles do not match the block length");
  const long long a = oracles.modulus();
  BlockSums sums;
  for (std::size_t i = 1; i <= layout.even_count(); ++i) {
    const std::uint32_t label = detail::block_label(x, layout.even_block(i), oracles);
    sums.d1 += label / a;
    sums.e1 += label % a;
  }
  for (std::size_t i = 1; i <= layout.odd_count(); ++i) {
    const std::uint32_t label = detail::block_label(x, layout.odd_block(i), oracles);
    sums.d2 += label / a;
    sums.e2 += label % a;
  }
  return {sums.d1 % a, sums.e1 % a, sums.d2 % a, sums.e2 % a};
}

struct BlockChoice {
  Interval block;
  bool even = true;
};

// The block a window is repaired in: the first even block holding it, else
// the first odd one.
inline std::optional<BlockChoice> cpb_block(const Interval& window, const BlockLayout& layout) {
  for (std::size_t i = 1; i <= layout.even_count(); ++i)
    if (layout.even_block(i).contains(window)) return BlockChoice{layout.even_block(i), true};
  for (std::size_t i = 1; i <= layout.odd_count(); ++i)
    if (layout.odd_block(i).contains(window)) return BlockChoice{layout.odd_block(i), false};
  return std::nullopt;
}

// Restores a word hit by one error of the oracles' model whose affected
// positions all lie in `window`, which must fit inside one block. A burst
// shortens the word; a substring edit may change its length either way.
inline Word cpb_decode(const Word& received, const Interval& window, const BlockSums& sums, const BlockLayout& layout,
                       const BlockOracles& oracles) {
  require_binary(received);
  const ErrorModel model = oracles.full.model;
  const std::size_t span = oracles.full.span;
  const long long diff = static_cast<long long>(received.size()) - static_cast<long long>(layout.n);
  if (model == ErrorModel::Burst) {
    require(diff <= 0, "received word longer than n");
    if (diff == 0) {
      if (block_syndromes(received, layout, oracles) != sums) throw NotDecodable("received word fails the block sums");
      return received;
    }
  }
  require(static_cast<std::size_t>(diff < 0 ? -diff : diff) <= span, "length change larger than the oracles cover");
  require(window.lo >= 1 && window.hi <= layout.n && window.lo <= window.hi, "window outside the word");
  const long long a = oracles.modulus();
  const std::size_t N = layout.padded();
  const auto shifted = [diff](std::size_t pos) { return static_cast<std::size_t>(static_cast<long long>(pos) + diff); };
  const Word y = detail::padded_copy(received, shifted(N));

  const auto choice = cpb_block(window, layout);
  if (!choice) throw NotDecodable("window does not fit inside one block");
  const BlockChoice pick = *choice;
  // Labels of the intact blocks of the same parity; blocks after the error
  // sit diff positions away in the received word.
  long long high = pick.even ? sums.d1 : sums.d2;
  long long low = pick.even ? sums.e1 : sums.e2;
  const std::size_t count = pick.even ? layout.even_count() : layout.odd_count();
  for (std::size_t i = 1; i <= count; ++i) {
    Interval block = pick.even ? layout.even_block(i) : layout.odd_block(i);
    if (block == pick.block) continue;
    if (block.lo > pick.block.hi) block = {shifted(block.lo), shifted(block.hi)};
    const std::uint32_t label = detail::block_label(y, block, oracles);
    high -= label / a;
    low -= label % a;
  }
  const long long label = mod(high, a) * a + mod(low, a);
  const SyndromeOracle& oracle = oracles.for_length(pick.block.length());
  if (label >= oracle.label_count) throw NotDecodable("block sums point to an unused label");

  const Word damaged(y.begin() + static_cast<std::ptrdiff_t>(pick.block.lo - 1),
                     y.begin() + static_cast<std::ptrdiff_t>(shifted(pick.block.hi)));
  std::optional<std::uint32_t> found;
  for (std::uint32_t parent : oracle_parents(damaged, oracle.k, oracle.span, model)) {
    if (oracle.label(parent) != label) continue;
    if (found) throw NotDecodable("two block repairs share a label");
    found = parent;
  }
  if (!found) throw NotDecodable("no block repair carries the recovered label");
  const Word block = unpack_bits(*found, oracle.k);
  Word x(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(pick.block.lo - 1));
  x.insert(x.end(), block.begin(), block.end());
  x.insert(x.end(), y.begin() + static_cast<std::ptrdiff_t>(shifted(pick.block.hi)), y.end());
  for (std::size_t i = layout.n; i < N; ++i)
    if (x[i] != 0) throw NotDecodable("repair writes into the padding");
  x.resize(layout.n);
  if (block_syndromes(x, layout, oracles) != sums) throw NotDecodable("repair fails the block sums");
  return x;
}

// Row 0 of A(u) lies in the localizing code; every row satisfies its block
// sums.
struct CtbParams {
  std::size_t n = 0;
  unsigned q = 4;
  std::size_t t = 2;
  std::size_t delta = 0;
  std::size_t P = 1;
  long long c0 = 0;
  long long c1 = 0;
  std::vector<BlockSums> rows;  // one per row of A(u)
  std::shared_ptr<const BlockOracles> oracles;

  LocParams loc() const { return {DensityParams{n, t, delta}, c0, c1}; }
  BlockLayout layout() const { return {n, P}; }
};

inline void validate(const CtbParams& p) {
  require(p.q >= 2 && p.q % 2 == 0, "C_tB needs an even alphabet");
  require(p.t >= 1 && p.n > p.t, "C_tB needs n > t >= 1");
  require(p.P >= p.t, "C_tB needs P >= t");
  require(p.oracles != nullptr, "C_tB needs block oracles");
  require(p.oracles->full.k == 2 * p.P && p.oracles->half.k == p.P, "oracles do not match P");
  require(p.oracles->full.model == ErrorModel::Burst && p.oracles->full.span >= p.t, "oracles must cover bursts of t");
  require(p.rows.size() == bits_for(p.q), "C_tB needs one set of block sums per row");
  validate(p.loc());
  const long long a = p.oracles->modulus();
  for (const BlockSums& s : p.rows)
    require(s.d1 >= 0 && s.d1 < a && s.e1 >= 0 && s.e1 < a && s.d2 >= 0 && s.d2 < a && s.e2 >= 0 && s.e2 < a,
            "block sums out of range");
}

inline bool ctb_row_member(const CtbParams& p, std::size_t row, const Word& x) {
  if (x.size() != p.n) return false;
  if (row == 0 && !cloc_member(p.loc(), x)) return false;
  return block_syndromes(x, p.layout(), *p.oracles) == p.rows[row];
}

inline bool ctb_member(const CtbParams& p, const Word& u) {
  validate(p);
  if (u.size() != p.n) return false;
  require_alphabet(u, p.q);
  const BinaryMatrix m = to_matrix(u, p.q);
  for (std::size_t r = 0; r < m.rows.size(); ++r)
    if (!ctb_row_member(p, r, m.rows[r])) return false;
  return true;
}

// Window of possibly deleted positions from the first row; nothing when the
// word has full length.
inline std::optional<Interval> ctb_window(const Word& first_row, const CtbParams& p) {
  const auto window = locate_burst(first_row, p.loc());
  if (window && window->length() > p.P) throw NotDecodable("first row does not localize the burst to P positions");
  return window;
}

inline Word ctb_decode(const Word& received, const CtbParams& params) {
  validate(params);
  require_alphabet(received, params.q);
  require(received.size() <= params.n && received.size() + params.t >= params.n,
          "C_tB decoding needs length in [n - t, n]");
  if (received.size() == params.n) {
    if (!ctb_member(params, received)) throw NotDecodable("received word is not a codeword");
    return received;
  }
  BinaryMatrix rows = to_matrix(received, params.q);
  const Interval window = *ctb_window(rows.rows[0], params);
  for (std::size_t r = 0; r < rows.rows.size(); ++r)
    rows.rows[r] = cpb_decode(rows.rows[r], window, params.rows[r], params.layout(), *params.oracles);
  Word u = from_matrix(rows, 1u << rows.rows.size());
  for (Symbol s : u)
    if (s >= params.q) throw NotDecodable("repaired column lies outside the alphabet");
  if (!cloc_member(params.loc(), rows.rows[0])) throw NotDecodable("first row is not a localizing codeword");
  return u;
}

}  // namespace burst
