#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "burst/tburst.hpp"

namespace burst {

// An arrangement of {1, ..., n}.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(Word entries) : entries_(std::move(entries)) {
    std::vector<bool> seen(entries_.size() + 1, false);
    for (Symbol v : entries_) {
      require(v >= 1 && v <= entries_.size(), "permutation entry out of range");
      require(!seen[v], "permutation entry repeated");
      seen[v] = true;
    }
  }

  static Permutation identity(std::size_t n) {
    Word w(n);
    std::iota(w.begin(), w.end(), Symbol{1});
    return Permutation(std::move(w));
  }

  const Word& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  Symbol operator[](std::size_t i) const { return entries_[i]; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  Word entries_;
};

// Comma-separated 1-based entries.
inline Word parse_entries(std::string_view text) {
  Word out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string piece(text.substr(pos, comma - pos));
    require(!piece.empty() && piece.find_first_not_of("0123456789 ") == std::string::npos,
            "malformed permutation entry '" + piece + "'");
    const unsigned long v = std::stoul(piece);
    require(v >= 1 && v < kMaxAlphabet, "permutation entry out of range");
    out.push_back(static_cast<Symbol>(v));
    pos = comma + 1;
  }
  return out;
}

inline Permutation parse_permutation(std::string_view text) { return Permutation(parse_entries(text)); }

inline std::string format_entries(const Word& entries) {
  std::string out;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(entries[i]);
  }
  return out;
}

// Bit i is 1 iff entry i exceeds n/2; works on permutations with symbols
// removed as long as n is the original length.
inline Word bp_bits(const Word& entries, std::size_t n) {
  Word b(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) b[i] = static_cast<Symbol>(2 * entries[i] > n);
  return b;
}

inline Word bp_map(const Permutation& pi) { return bp_bits(pi.entries(), pi.size()); }

// n/2 ones for even n, one more one than zeros for odd n.
inline bool is_balanced(const Word& b) { return weight(b) == (b.size() + 1) / 2; }

inline std::optional<Interval> perm_locate(const Word& received, const LocParams& p) {
  return detail::locate_burst_if(received, p, is_balanced);
}

// Relative order of distinct values: entry i becomes its rank in the window.
inline Permutation prj(const Word& u) {
  Word out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    std::size_t below = 0;
    for (std::size_t j = 0; j < u.size(); ++j) {
      require(j == i || u[j] != u[i], "projection needs distinct entries");
      below += u[j] < u[i];
    }
    out[i] = static_cast<Symbol>(below + 1);
  }
  return Permutation(std::move(out));
}

inline constexpr std::size_t kMaxRankLength = 20;

inline std::uint64_t factorial(std::size_t k) {
  require(k <= kMaxRankLength, "factorial argument too large");
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= k; ++i) f *= i;
  return f;
}

// 1-based lexicographic index, through the Lehmer code.
inline std::uint64_t lex_rank(const Permutation& pi) {
  const std::size_t k = pi.size();
  require(k >= 1 && k <= kMaxRankLength, "lex_rank supports 1 <= k <= 20");
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < k; ++i) {
    std::uint64_t smaller_after = 0;
    for (std::size_t j = i + 1; j < k; ++j) smaller_after += pi[j] < pi[i];
    rank += smaller_after * factorial(k - 1 - i);
  }
  return rank + 1;
}

inline Permutation lex_unrank(std::uint64_t rank, std::size_t k) {
  require(k >= 1 && k <= kMaxRankLength, "lex_unrank supports 1 <= k <= 20");
  require(rank >= 1 && rank <= factorial(k), "rank out of range");
  Word pool(k);
  std::iota(pool.begin(), pool.end(), Symbol{1});
  Word out;
  std::uint64_t r = rank - 1;
  for (std::size_t i = k; i >= 1; --i) {
    const std::uint64_t f = factorial(i - 1);
    const auto pos = static_cast<std::ptrdiff_t>(r / f);
    r %= f;
    out.push_back(pool[static_cast<std::size_t>(pos)]);
    pool.erase(pool.begin() + pos);
  }
  return Permutation(std::move(out));
}

struct RankingSequence {
  Word ranks;  // each in [1, (t+1)!]
  std::size_t t = 1;
  friend bool operator==(const RankingSequence&, const RankingSequence&) = default;
};

// Ranks of the relative orders of all consecutive (t+1)-windows. Accepts
// any word of distinct entries, so it applies after a burst as well.
inline RankingSequence overlap_ranks(const Word& entries, std::size_t t) {
  require(t >= 1 && t + 1 <= kMaxRankLength, "ranking window must have 2..20 symbols");
  require(entries.size() > t, "overlapping ranks need more than t entries");
  RankingSequence out{Word(entries.size() - t), t};
  for (std::size_t i = 0; i + t < entries.size(); ++i) {
    const Word window(entries.begin() + static_cast<std::ptrdiff_t>(i),
                      entries.begin() + static_cast<std::ptrdiff_t>(i + t + 1));
    out.ranks[i] = static_cast<Symbol>(lex_rank(prj(window)));
  }
  return out;
}

inline RankingSequence overlap_ranks(const Permutation& pi, std::size_t t) { return overlap_ranks(pi.entries(), t); }

// The unique way of putting the missing symbols back as one run that gives
// ranking sequence p. Positions ascending, then orderings lexicographic.
inline Permutation reconstruct(const Word& partial, Word missing, const RankingSequence& p) {
  if (missing.empty()) return Permutation(partial);
  std::sort(missing.begin(), missing.end());
  std::optional<Word> found;
  for (std::size_t at = 0; at <= partial.size(); ++at) {
    Word order = missing;
    do {
      Word candidate(partial.begin(), partial.begin() + static_cast<std::ptrdiff_t>(at));
      candidate.insert(candidate.end(), order.begin(), order.end());
      candidate.insert(candidate.end(), partial.begin() + static_cast<std::ptrdiff_t>(at), partial.end());
      if (overlap_ranks(candidate, p.t) != p) continue;
      if (found && *found != candidate) throw NotDecodable("two reinsertions share the ranking sequence");
      found = std::move(candidate);
    } while (std::next_permutation(order.begin(), order.end()));
  }
  if (!found) throw NotDecodable("no reinsertion matches the ranking sequence");
  return Permutation(std::move(*found));
}

// Ranks shifted to symbols 0..(t+1)!-1 and split into binary rows.
inline std::vector<BlockSums> ranking_syndromes(const RankingSequence& p, const BlockLayout& layout,
                                                const BlockOracles& oracles) {
  const auto q = static_cast<unsigned>(factorial(p.t + 1));
  Word symbols = p.ranks;
  for (Symbol& s : symbols) s = static_cast<Symbol>(s - 1);
  std::vector<BlockSums> out;
  for (const Word& row : to_matrix(symbols, q).rows) out.push_back(block_syndromes(row, layout, oracles));
  return out;
}

// Repairs one substring edit confined to `window` in every binary row.
inline RankingSequence c2t_decode(const RankingSequence& received, const Interval& window,
                                  const std::vector<BlockSums>& sums, const BlockLayout& layout,
                                  const BlockOracles& oracles) {
  require(oracles.full.model == ErrorModel::SubstringEdit, "c2t_decode needs substring-edit oracles");
  const auto q = static_cast<unsigned>(factorial(received.t + 1));
  Word symbols = received.ranks;
  for (Symbol& s : symbols) {
    require(s >= 1 && s <= q, "rank out of range");
    s = static_cast<Symbol>(s - 1);
  }
  BinaryMatrix rows = to_matrix(symbols, q);
  require(sums.size() == rows.rows.size(), "one set of block sums per row is needed");
  for (std::size_t r = 0; r < rows.rows.size(); ++r)
    rows.rows[r] = cpb_decode(rows.rows[r], window, sums[r], layout, oracles);
  RankingSequence out{from_matrix(rows, 1u << rows.rows.size()), received.t};
  for (Symbol& s : out.ranks) {
    if (s >= q) throw NotDecodable("repaired rank outside [1, (t+1)!]");
    s = static_cast<Symbol>(s + 1);
  }
  return out;
}

// The localizing condition on b_P(pi) and block sums on the ranking rows.
struct PermCodeParams {
  std::size_t n = 0;
  std::size_t t = 1;
  std::size_t delta = 0;
  std::size_t P = 1;
  long long c0 = 0;
  long long c1 = 0;
  std::vector<BlockSums> rows;  // one per binary row of the ranking sequence
  std::shared_ptr<const BlockOracles> oracles;

  LocParams loc() const { return {DensityParams{n, t, delta}, c0, c1}; }
  BlockLayout layout() const { return {n - t, P}; }
  unsigned rank_alphabet() const { return static_cast<unsigned>(factorial(t + 1)); }
};

inline void validate(const PermCodeParams& p) {
  require(p.t >= 1 && p.t <= 4, "permutation codes support 1 <= t <= 4");
  require(p.n > 2 * p.t, "permutation codes need n > 2t");
  require(p.oracles != nullptr, "permutation code needs block oracles");
  require(p.oracles->full.model == ErrorModel::SubstringEdit && p.oracles->full.span >= 2 * p.t,
          "oracles must cover substring edits of length 2t");
  require(p.oracles->full.k == 2 * p.P && p.oracles->half.k == p.P, "oracles do not match P");
  require(p.rows.size() == bits_for(p.rank_alphabet()), "one set of block sums per ranking row is needed");
  validate(p.loc());
  const long long a = p.oracles->modulus();
  for (const BlockSums& s : p.rows)
    require(s.d1 >= 0 && s.d1 < a && s.e1 >= 0 && s.e1 < a && s.d2 >= 0 && s.d2 < a && s.e2 >= 0 && s.e2 < a,
            "block sums out of range");
}

inline bool pleqt_member(const PermCodeParams& p, const Permutation& pi) {
  validate(p);
  if (pi.size() != p.n) return false;
  if (!cloc_member(p.loc(), bp_map(pi))) return false;
  return ranking_syndromes(overlap_ranks(pi, p.t), p.layout(), *p.oracles) == p.rows;
}

// Window of ranking positions an error at the permutation positions in
// `lost` can touch.
inline Interval ranking_window(const Interval& lost, std::size_t n, std::size_t t) {
  return {lost.lo > t ? lost.lo - t : 1, std::min(lost.hi, n - t)};
}

inline Permutation pleqt_decode(const Word& received, const PermCodeParams& params) {
  validate(params);
  const std::size_t n = params.n;
  require(received.size() <= n && received.size() + params.t >= n, "permutation decoding needs length in [n - t, n]");
  std::vector<bool> seen(n + 1, false);
  for (Symbol v : received) {
    require(v >= 1 && v <= n && !seen[v], "received entries must be distinct values in [1, n]");
    seen[v] = true;
  }
  if (received.size() == n) {
    Permutation pi(received);
    if (!pleqt_member(params, pi)) throw NotDecodable("received permutation is not a codeword");
    return pi;
  }
  Word missing;
  for (std::size_t v = 1; v <= n; ++v)
    if (!seen[v]) missing.push_back(static_cast<Symbol>(v));
  const Interval lost = *perm_locate(bp_bits(received, n), params.loc());
  const RankingSequence p = c2t_decode(overlap_ranks(received, params.t), ranking_window(lost, n, params.t),
                                       params.rows, params.layout(), *params.oracles);
  Permutation pi = reconstruct(received, missing, p);
  if (!cloc_member(params.loc(), bp_map(pi))) throw NotDecodable("repair is not a localizing codeword");
  return pi;
}

}  // namespace burst
