#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "burst/codebook.hpp"
#include "burst/dense.hpp"

namespace burst {

struct SieveOptions {
  std::uint64_t budget = std::uint64_t{1} << 24;  // cap on enumerated elements
  std::size_t delta = 0;                          // C_tB / permutation density bound; 0 picks a desk default
  std::size_t P = 0;                              // block length; 0 picks a desk default
};

namespace detail {

inline void require_budget(const BigInt& needed, std::uint64_t budget, const std::string& what) {
  if (needed > budget)
    throw BudgetExceeded(what + " needs " + needed.str() + " elements, budget is " + std::to_string(budget));
}

// Largest group; ties go to the smallest key.
template <class Key, class Value>
typename std::map<Key, std::vector<Value>>::const_iterator largest_class(const std::map<Key, std::vector<Value>>& m) {
  auto best = m.begin();
  for (auto it = m.begin(); it != m.end(); ++it)
    if (it->second.size() > best->second.size()) best = it;
  return best;
}

inline std::vector<Word> every_word(std::size_t n, unsigned q) {
  std::vector<Word> out;
  Word w(n, 0);
  while (true) {
    out.push_back(w);
    std::size_t i = n;
    while (i > 0 && w[i - 1] == q - 1) w[--i] = 0;
    if (i == 0) break;
    ++w[i - 1];
  }
  return out;
}

struct DenseSearch {
  const DensityParams& dp;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  std::vector<Word> out;

  void run(Word& x, std::size_t last) {
    if (++nodes > budget) throw BudgetExceeded("dense enumeration exceeded the budget of " + std::to_string(budget));
    const std::size_t k = 2 * dp.t;
    if (x.size() >= k) {
      const std::size_t i = x.size() - k;
      bool hit = true;
      for (std::size_t j = 0; j < k && hit; ++j) hit = x[i + j] == (j < dp.t ? 0 : 1);
      if (hit) last = i + 2;
      if (i + 2 - last > dp.delta) return;
    }
    if (x.size() == dp.n) {
      if (is_dense(x, dp)) out.push_back(x);
      return;
    }
    for (Symbol b : {Symbol{0}, Symbol{1}}) {
      x.push_back(b);
      run(x, last);
      x.pop_back();
    }
  }
};

}  // namespace detail

// Every (w, delta)-dense binary word of length n in lexicographic order,
// by depth-first search that cuts a prefix once its last pattern is too far
// back.
inline std::vector<Word> dense_words(const DensityParams& dp, std::uint64_t budget) {
  validate(dp);
  detail::DenseSearch search{dp, budget, 0, {}};
  Word x;
  search.run(x, 1);
  return std::move(search.out);
}

// Every binary word of length n whose block sums are `sums`, in
// lexicographic order. The padded word is cut into chunks of P bits; a full
// block is two neighbouring chunks. Left halves (chunks 1..h) are indexed by
// their partial sums and last chunk, right halves are joined against that
// index through the block straddling chunks h and h+1.
inline std::vector<Word> block_class_words(const BlockLayout& layout, const BlockOracles& oracles,
                                           const BlockSums& sums, std::uint64_t budget) {
  const std::size_t P = layout.P;
  const std::size_t chunks = layout.padded() / P;
  require(layout.padded() <= 64, "block class enumeration needs a padded length of at most 64");
  require(oracles.full.k == 2 * P && oracles.half.k == P, "oracles do not match the block length");
  const std::uint64_t a = oracles.modulus();

  std::vector<unsigned> valid(chunks + 1, 0);  // 1-based
  for (std::size_t j = 1; j <= chunks; ++j) {
    const std::size_t first = (j - 1) * P;
    valid[j] = static_cast<unsigned>(layout.n > first ? std::min(P, layout.n - first) : 0);
  }
  struct Block {
    std::size_t first, last;
    bool even;
  };
  std::vector<Block> blocks;
  for (std::size_t i = 1; i <= chunks / 2; ++i) blocks.push_back({2 * i - 1, 2 * i, true});
  blocks.push_back({1, 1, false});
  for (std::size_t i = 2; i <= chunks / 2; ++i) blocks.push_back({2 * i - 2, 2 * i - 1, false});
  blocks.push_back({chunks, chunks, false});

  std::size_t h = 1;
  BigInt cost = -1;
  for (std::size_t s = 1; s < chunks; ++s) {
    unsigned left = 0, right = 0;
    for (std::size_t j = 1; j <= chunks; ++j) (j <= s ? left : right) += valid[j];
    const BigInt c = (BigInt(1) << left) + (BigInt(1) << (right + valid[s]));
    if (cost < 0 || c < cost) {
      cost = c;
      h = s;
    }
  }
  detail::require_budget(cost, budget, "block class enumeration");

  using Residues = std::array<std::uint64_t, 4>;
  const auto add_block = [&](Residues& r, const Block& b, const std::vector<std::uint32_t>& chunk) {
    const std::uint32_t label = b.first == b.last ? oracles.half.label(chunk[b.first])
                                                  : oracles.full.label((chunk[b.first] << P) | chunk[b.last]);
    const std::size_t at = b.even ? 0 : 2;
    r[at] = (r[at] + label / a) % a;
    r[at + 1] = (r[at + 1] + label % a) % a;
  };
  const auto pack = [&](const Residues& r, std::uint32_t boundary) {
    std::uint64_t key = 0;
    for (std::uint64_t v : r) key = key * a + v;
    return (key << P) | boundary;
  };
  // Splits a packed half into chunk values; chunk j keeps valid[j] high bits.
  const auto unpack = [&](std::uint64_t v, std::size_t from, std::size_t to, std::vector<std::uint32_t>& chunk) {
    for (std::size_t j = to; j >= from; --j) {
      chunk[j] = static_cast<std::uint32_t>(v & ((std::uint64_t{1} << valid[j]) - 1)) << (P - valid[j]);
      v >>= valid[j];
    }
  };

  unsigned left_bits = 0, right_bits = 0;
  for (std::size_t j = 1; j <= chunks; ++j) (j <= h ? left_bits : right_bits) += valid[j];
  std::vector<std::uint32_t> chunk(chunks + 1, 0);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> index;
  index.reserve(std::size_t{1} << left_bits);
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << left_bits); ++v) {
    unpack(v, 1, h, chunk);
    Residues r{};
    for (const Block& b : blocks)
      if (b.last <= h) add_block(r, b, chunk);
    index.emplace_back(pack(r, chunk[h]), v);
  }
  std::sort(index.begin(), index.end());

  const Block straddle{h, h + 1, h % 2 == 1};
  const Residues target{static_cast<std::uint64_t>(sums.d1), static_cast<std::uint64_t>(sums.e1),
                        static_cast<std::uint64_t>(sums.d2), static_cast<std::uint64_t>(sums.e2)};
  std::vector<std::uint64_t> found;
  for (std::uint64_t w = 0; w < (std::uint64_t{1} << right_bits); ++w) {
    unpack(w, h + 1, chunks, chunk);
    Residues right{};
    for (const Block& b : blocks)
      if (b.first > h) add_block(right, b, chunk);
    for (std::uint32_t c = 0; c < (1u << valid[h]); ++c) {
      chunk[h] = c << (P - valid[h]);
      Residues need = right;
      add_block(need, straddle, chunk);
      for (std::size_t i = 0; i < 4; ++i) need[i] = (target[i] + a - need[i]) % a;
      const std::uint64_t key = pack(need, chunk[h]);
      auto it = std::lower_bound(index.begin(), index.end(), std::make_pair(key, std::uint64_t{0}));
      for (; it != index.end() && it->first == key; ++it) found.push_back((it->second << right_bits) | w);
    }
  }
  std::sort(found.begin(), found.end());
  std::vector<Word> out;
  out.reserve(found.size());
  for (std::uint64_t v : found) {
    Word x(layout.n);
    for (std::size_t i = 0; i < layout.n; ++i) x[i] = static_cast<Symbol>((v >> (layout.n - 1 - i)) & 1);
    out.push_back(std::move(x));
  }
  return out;
}

namespace detail {

inline bool power_of_two(unsigned q) { return q >= 2 && (q & (q - 1)) == 0; }

inline Codebook sieve_classic(Family family, std::size_t n, unsigned q, std::size_t t, const SieveOptions& opt) {
  const ClassicFamily cf = *classic_family(family);
  const std::size_t want = family == Family::Levenshtein || family == Family::Induced ? 2 : 1;
  require(t == want, to_string(family) + " codes correct bursts of " + std::to_string(want));
  require(n >= 1, "code length must be positive");
  if (cf == ClassicFamily::VT || cf == ClassicFamily::Levenshtein) require(q == 2, to_string(family) + " needs q = 2");
  require(q >= 2, "alphabet size must be at least 2");
  if (cf == ClassicFamily::Induced) require(n >= 3, "the induced code needs n >= 3");
  require_budget(big_pow(q, n), opt.budget, to_string(family) + " sieve");

  const auto nn = static_cast<long long>(n);
  std::map<std::array<long long, 3>, std::vector<Word>> classes;
  for (Word& u : every_word(n, q)) {
    std::array<long long, 3> key{};
    switch (cf) {
      case ClassicFamily::VT:
        key = {mod(vt_syndrome(u), nn + 1), 0, 0};
        break;
      case ClassicFamily::Tenengolts:
        key = {mod(tenengolts_syndrome(u), nn), mod(symbol_sum(u), q), 0};
        break;
      case ClassicFamily::Levenshtein:
        key = {mod(vt_syndrome(psi(u)), 2 * nn), 0, 0};
        break;
      case ClassicFamily::Induced:
        key = {mod(vt_syndrome(psi(induced_image(u))), 2 * nn), mod(symbol_sum(odd_part(u)), q),
               mod(symbol_sum(even_part(u)), q)};
        break;
    }
    classes[key].push_back(std::move(u));
  }
  const auto best = largest_class(classes);
  Codebook book{family, n, q, t, ClassicParams{cf, n, q, best->first[0], best->first[1], best->first[2]}, best->second,
                {}};
  return book;
}

inline Codebook sieve_c2b(std::size_t n, unsigned q, std::size_t t, const SieveOptions& opt) {
  require(t == 2, "C_2B codes correct bursts of 2");
  require(power_of_two(q), "the C_2B sieve needs q to be a power of two");
  require(n >= kPllMinLength, "C_2B needs n >= " + std::to_string(kPllMinLength));
  require_budget(BigInt(2) * big_pow(2, n), opt.budget, "C_2B sieve");
  const std::size_t P = pll_cap(n);
  const auto nn = static_cast<long long>(n);
  std::map<long long, std::vector<Word>> first;
  std::map<std::pair<long long, long long>, std::vector<Word>> other;
  for (Word& x : every_word(n, 2)) {
    const Word y = psi(x);
    const long long vt = vt_syndrome(y);
    if (longest_period2(x) <= P) first[mod(vt, 2 * nn)].push_back(x);
    other[{mod(vt, 2 * static_cast<long long>(P)), static_cast<long long>(weight(y) % 3)}].push_back(std::move(x));
  }
  const auto a = largest_class(first);
  const auto cd = largest_class(other);
  const std::size_t rows = bits_for(q);
  C2BParams p{n, q, a->first, std::vector<long long>(rows - 1, cd->first.first),
              std::vector<long long>(rows - 1, cd->first.second)};
  Codebook book{Family::C2B, n, q, t, p, {}, {a->second}};
  for (std::size_t r = 1; r < rows; ++r) book.rows.push_back(cd->second);
  return book;
}

// Localizing class first (largest (c0, c1)), then the largest block-sum
// class inside it for row 0. Rows 1.. reuse the row-0 sums, which row 0
// shows to be nonempty, and are enumerated without the density filter.
inline Codebook sieve_ctb(std::size_t n, unsigned q, std::size_t t, const SieveOptions& opt) {
  require(power_of_two(q), "the C_tB sieve needs q to be a power of two");
  const std::size_t delta = opt.delta ? opt.delta : 8;
  const std::size_t P = opt.P ? opt.P : delta + t - 1;
  const DensityParams dp{n, t, delta};
  validate(dp);
  require(n > t && P >= t, "C_tB needs n > t and P >= t");
  require(2 * P <= kMaxOracleLength, "block oracles are limited to 2P <= " + std::to_string(kMaxOracleLength));
  require_budget(BigInt(1) << (2 * P), opt.budget, "block oracle");
  const auto oracles = shared_block_oracles(P, t, ErrorModel::Burst);
  const BlockLayout layout{n, P};

  std::map<std::pair<long long, long long>, std::vector<Word>> loc;
  for (Word& x : dense_words(dp, opt.budget)) {
    const LocSyndrome s = loc_syndrome(x, dp);
    loc[{s.c0, s.c1}].push_back(std::move(x));
  }
  const auto cls = largest_class(loc);
  std::map<BlockSums, std::vector<Word>> by_sums;
  for (const Word& x : cls->second) by_sums[block_syndromes(x, layout, *oracles)].push_back(x);
  const auto best = largest_class(by_sums);

  const std::size_t rows = bits_for(q);
  CtbParams p{n, q, t, delta, P, cls->first.first, cls->first.second, std::vector<BlockSums>(rows, best->first),
              oracles};
  Codebook book{Family::Ctb, n, q, t, p, {}, {best->second}};
  if (rows > 1) {
    const std::vector<Word> rest = block_class_words(layout, *oracles, best->first, opt.budget);
    for (std::size_t r = 1; r < rows; ++r) book.rows.push_back(rest);
  }
  return book;
}

inline Codebook sieve_perm(std::size_t n, std::size_t t, const SieveOptions& opt) {
  require(n >= 1 && n <= kMaxRankLength, "permutation sieve needs 1 <= n <= " + std::to_string(kMaxRankLength));
  const std::size_t delta = opt.delta ? opt.delta : n;
  const std::size_t P = opt.P ? opt.P : std::max<std::size_t>(4, 2 * t);
  require(n > 2 * t, "permutation codes need n > 2t");
  require(2 * P <= kMaxEditOracleLength,
          "substring-edit oracles are limited to 2P <= " + std::to_string(kMaxEditOracleLength));
  require_budget(big_factorial(n), opt.budget, "permutation sieve");
  const DensityParams dp{n, t, delta};
  validate(dp);
  const auto oracles = shared_block_oracles(P, 2 * t, ErrorModel::SubstringEdit);

  std::map<std::pair<long long, long long>, std::vector<Word>> loc;
  Word entries(n);
  for (std::size_t i = 0; i < n; ++i) entries[i] = static_cast<Symbol>(i + 1);
  do {
    const Word b = bp_bits(entries, n);
    if (!is_dense(b, dp)) continue;
    const LocSyndrome s = loc_syndrome(b, dp);
    loc[{s.c0, s.c1}].push_back(entries);
  } while (std::next_permutation(entries.begin(), entries.end()));
  require(!loc.empty(), "no dense permutation exists for these parameters");
  const auto cls = largest_class(loc);
  const BlockLayout layout{n - t, P};
  std::map<std::vector<BlockSums>, std::vector<Word>> by_sums;
  for (const Word& pi : cls->second) by_sums[ranking_syndromes(overlap_ranks(pi, t), layout, *oracles)].push_back(pi);
  const auto best = largest_class(by_sums);
  PermCodeParams p{n, t, delta, P, cls->first.first, cls->first.second, best->first, oracles};
  return Codebook{Family::Perm, n, static_cast<unsigned>(n), t, p, best->second, {}};
}

}  // namespace detail

// Enumerates the ambient space, groups it by the family's syndromes and
// keeps the largest class; ties go to the smallest parameter tuple.
inline Codebook sieve(Family family, std::size_t n, unsigned q, std::size_t t, const SieveOptions& opt = {}) {
  switch (family) {
    case Family::C2B:
      return detail::sieve_c2b(n, q, t, opt);
    case Family::Ctb:
      return detail::sieve_ctb(n, q, t, opt);
    case Family::Perm:
      return detail::sieve_perm(n, t, opt);
    default:
      return detail::sieve_classic(family, n, q, t, opt);
  }
}

}  // namespace burst
