#include "burst/tburst.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <map>
#include <random>
#include <set>

#include "test_support.hpp"

namespace burst {
namespace {

using testing_support::all_words;
using testing_support::bits;

Word repeat(std::string_view s, std::size_t times) {
  Word out;
  for (std::size_t i = 0; i < times; ++i) {
    const Word piece = bits(s);
    out.insert(out.end(), piece.begin(), piece.end());
  }
  return out;
}

Word concat(std::initializer_list<Word> parts) {
  Word out;
  for (const Word& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

// Starts of 0^t 1^t found by direct comparison.
std::vector<std::size_t> pattern_starts(const Word& x, std::size_t t) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i + 2 * t <= x.size(); ++i) {
    bool hit = true;
    for (std::size_t j = 0; j < 2 * t; ++j) hit = hit && x[i + j] == (j < t ? 0 : 1);
    if (hit) out.push_back(i + 1);
  }
  return out;
}

// Dense words by depth-first search, cutting a branch once the latest
// possible pattern slot lies more than delta past the previous one.
void dense_dfs(Word& x, const DensityParams& dp, std::size_t last, std::vector<Word>& out) {
  const std::size_t k = 2 * dp.t;
  if (x.size() >= k) {
    const std::size_t i = x.size() - k;
    bool hit = true;
    for (std::size_t j = 0; j < k; ++j) hit = hit && x[i + j] == (j < dp.t ? 0 : 1);
    if (hit) last = i + 2;
    if (i + 2 - last > dp.delta) return;
  }
  if (x.size() == dp.n) {
    if (is_dense(x, dp)) out.push_back(x);
    return;
  }
  for (Symbol b : {Symbol{0}, Symbol{1}}) {
    x.push_back(b);
    dense_dfs(x, dp, last, out);
    x.pop_back();
  }
}

std::vector<Word> dense_words(const DensityParams& dp) {
  std::vector<Word> out;
  Word x;
  dense_dfs(x, dp, 1, out);
  return out;
}

TEST(IndicatorAlpha, Example) {
  const auto profile = indicator_alpha(bits("00110011"), DensityParams{8, 1, 4});
  EXPECT_EQ(profile.indicator, bits("0100010"));
  EXPECT_EQ(profile.alpha, (std::vector<std::size_t>{2, 4, 2}));
  EXPECT_EQ(profile.occurrences(), 2u);
}

TEST(IndicatorAlpha, GapsSumAndSeparation) {
  const DensityParams dp{12, 2, 4};
  for (const Word& x : all_words(12, 2)) {
    const auto profile = indicator_alpha(x, dp);
    const auto starts = pattern_starts(x, 2);
    ASSERT_EQ(profile.occurrences(), starts.size());
    std::size_t sum = 0;
    for (std::size_t g : profile.alpha) sum += g;
    ASSERT_EQ(sum, 12u - 4 + 2);
    // Occurrences of 0011 cannot overlap.
    for (std::size_t i = 1; i + 1 < profile.alpha.size(); ++i) ASSERT_GE(profile.alpha[i], 4u);
  }
}

TEST(IndicatorAlpha, DensityIsTheLargestGap) {
  const DensityParams dp{10, 1, 3};
  for (const Word& x : all_words(10, 2)) {
    const auto profile = indicator_alpha(x, dp);
    const std::size_t widest = *std::max_element(profile.alpha.begin(), profile.alpha.end());
    ASSERT_EQ(is_dense(x, dp), widest <= 3);
  }
}

TEST(PatternFreeRank, Example) {
  EXPECT_EQ(pattern_free_rank(bits("001011"), 1), 5);
  EXPECT_EQ(pattern_free_unrank(5, 6, 1), bits("001011"));
  EXPECT_THROW(pattern_free_rank(bits("0110"), 1), InvalidArgument);
  EXPECT_THROW(pattern_free_unrank(9, 4, 1), InvalidArgument);
}

TEST(PatternFreeRank, BijectiveOnChunkedWords) {
  // Words of length 8 with no chunk equal to 0011 map onto [0, 15^2).
  std::set<long long> seen;
  for (const Word& s : all_words(8, 2)) {
    const bool clean = !(s[0] == 0 && s[1] == 0 && s[2] == 1 && s[3] == 1) &&
                       !(s[4] == 0 && s[5] == 0 && s[6] == 1 && s[7] == 1);
    if (!clean) continue;
    const long long r = static_cast<long long>(pattern_free_rank(s, 2));
    ASSERT_LT(r, 225);
    ASSERT_TRUE(seen.insert(r).second);
    ASSERT_EQ(pattern_free_unrank(r, 8, 2), s);
  }
  EXPECT_EQ(seen.size(), 225u);
}

TEST(Compression, Admissibility) {
  EXPECT_FALSE(compression_fits(DensityParams::standard(512, 1)));
  EXPECT_TRUE(compression_fits(DensityParams::standard(513, 1)));
  EXPECT_EQ(DensityParams::standard(513, 1).delta, 80u);
  EXPECT_EQ(DensityParams::standard(513, 1).compressed_bits(), 64u);
  EXPECT_FALSE(compression_fits(DensityParams::standard(256, 2)));
  EXPECT_FALSE(compression_fits(DensityParams::standard(1u << 20, 2)));
  const DensityParams big = DensityParams::standard((1u << 20) + 1, 2);
  EXPECT_EQ(big.delta, 1344u);
  EXPECT_EQ(big.compressed_bits(), 1313u);
  EXPECT_TRUE(compression_fits(big));
  EXPECT_THROW(compress_g(Word(512, 0), DensityParams::standard(256, 2)), InvalidArgument);
}

TEST(Compression, ZeroWindowCompressesToZeros) {
  const DensityParams dp = DensityParams::standard(513, 1);
  EXPECT_EQ(compress_g(Word(80, 0), dp), Word(64, 0));
  EXPECT_EQ(decompress_g(Word(64, 0), dp), Word(80, 0));
  EXPECT_THROW(compress_g(concat({Word(78, 0), bits("01")}), dp), InvalidArgument);
  EXPECT_THROW(decompress_g(Word(64, 1), dp), InvalidArgument);
}

TEST(Compression, RandomPatternFreeRoundTrips) {
  const DensityParams dp = DensityParams::standard((1u << 20) + 1, 2);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10000; ++trial) {
    // Bits drawn one at a time, never completing 0011; every third window
    // favours long runs.
    Word s;
    for (std::size_t i = 0; i < dp.delta; ++i) {
      Symbol b = static_cast<Symbol>(rng() & 1u);
      if (trial % 3 == 0 && i > 0 && rng() % 8) b = s.back();
      if (i >= 3 && s[i - 3] == 0 && s[i - 2] == 0 && s[i - 1] == 1) b = 0;
      s.push_back(b);
    }
    const Word packed = compress_g(s, dp);
    ASSERT_EQ(packed.size(), 1313u);
    ASSERT_EQ(decompress_g(packed, dp), s);
  }
}

TEST(DenseEncode, DenseInputOnlyGainsTrailer) {
  const DensityParams dp = DensityParams::standard(513, 1);
  const Word x = concat({repeat("0110", 128), bits("1")});
  ASSERT_TRUE(is_dense(x, dp));
  EXPECT_EQ(dense_encode(x, dp), concat({x, bits("0101")}));
  EXPECT_EQ(dense_decode(concat({x, bits("0101")}), dp), x);
}

TEST(DenseEncode, AllZerosTrace) {
  const DensityParams dp = DensityParams::standard(513, 1);
  const Word record = concat({bits("0000000001"), Word(64, 0), bits("1"), bits("01"), bits("01"), bits("0")});
  Word expected = concat({Word(33, 0), bits("0101")});
  for (int i = 0; i < 6; ++i) expected = concat({expected, record});
  const Word e = dense_encode(Word(513, 0), dp);
  EXPECT_EQ(e, expected);
  EXPECT_EQ(dense_decode(e, dp), Word(513, 0));
}

TEST(DenseEncode, ShortFinalWindowRecordsItsPadding) {
  const DensityParams dp = DensityParams::standard(513, 1);
  // The only sparse window starts at 435 and overhangs the content by one.
  const Word x = concat({bits("1"), repeat("01", 217), Word(78, 1)});
  ASSERT_EQ(x.size(), 513u);
  const Word e = dense_encode(x, dp);
  ASSERT_EQ(e.size(), 517u);
  EXPECT_EQ(Word(e.end() - 5, e.end()), bits("10100"));
  EXPECT_TRUE(is_dense(e, DensityParams{517, 1, 80}));
  EXPECT_EQ(dense_decode(e, dp), x);
}

TEST(DenseEncode, RandomRoundTrips) {
  const DensityParams dp = DensityParams::standard(513, 1);
  const DensityParams out_dp{517, 1, 80};
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 1000; ++trial) {
    Word x(513);
    for (auto& b : x) b = static_cast<Symbol>(rng() & 1u);
    // Long constant or 10-periodic stretches force sparse windows.
    const int stretches = static_cast<int>(rng() % 4);
    for (int k = 0; k < stretches; ++k) {
      const std::size_t from = rng() % 513;
      const std::size_t len = std::min<std::size_t>(513 - from, 60 + rng() % 200);
      const int kind = static_cast<int>(rng() % 3);
      for (std::size_t i = from; i < from + len; ++i)
        x[i] = static_cast<Symbol>(kind == 2 ? (i - from) % 2 == 0 : kind);
    }
    const Word e = dense_encode(x, dp);
    ASSERT_EQ(e.size(), 517u);
    ASSERT_TRUE(is_dense(e, out_dp));
    ASSERT_EQ(dense_decode(e, dp), x);
  }
}

TEST(DenseDecode, RejectsMalformedInput) {
  const DensityParams dp = DensityParams::standard(513, 1);
  EXPECT_THROW(dense_decode(Word(516, 0), dp), InvalidArgument);
  EXPECT_THROW(dense_decode(Word(517, 1), dp), InvalidArgument);
  Word broken = dense_encode(Word(513, 0), dp);
  broken[34] = 0;  // inside the trailer
  EXPECT_THROW(dense_decode(broken, dp), InvalidArgument);
}

// Largest residue class of dense words of length n.
struct LocClass {
  LocParams params;
  std::vector<Word> words;
};

LocClass best_loc_class(const DensityParams& dp) {
  std::map<std::pair<long long, long long>, std::vector<Word>> classes;
  for (const Word& x : dense_words(dp)) {
    const LocSyndrome s = loc_syndrome(x, dp);
    classes[{s.c0, s.c1}].push_back(x);
  }
  auto best = classes.begin();
  for (auto it = classes.begin(); it != classes.end(); ++it)
    if (it->second.size() > best->second.size()) best = it;
  return {LocParams{dp, best->first.first, best->first.second}, best->second};
}

TEST(DenseWords, EnumerationMatchesFilter) {
  const DensityParams dp{14, 2, 6};
  std::size_t expected = 0;
  for (const Word& x : all_words(14, 2)) expected += is_dense(x, dp);
  EXPECT_EQ(dense_words(dp).size(), expected);
}

TEST(LocateBurst, BestClassLocalizesEveryBurst) {
  const LocClass cls = best_loc_class(DensityParams{16, 2, 8});
  ASSERT_GT(cls.words.size(), 1000u);
  for (const Word& x : cls.words) {
    ASSERT_TRUE(cloc_member(cls.params, x));
    EXPECT_FALSE(locate_burst(x, cls.params).has_value());
    for (std::size_t len = 1; len <= 2; ++len)
      for (std::size_t s = 1; s + len - 1 <= 16; ++s) {
        const Word received = apply_burst(x, {s, len});
        Interval starts;
        ASSERT_TRUE(burst_starts(x, received, starts));
        const auto window = locate_burst(received, cls.params);
        ASSERT_TRUE(window.has_value());
        ASSERT_TRUE(window->contains(Interval{starts.lo, starts.hi + len - 1}));
        ASSERT_LE(window->length(), 8u + 2 - 1);
      }
  }
}

TEST(LocateBurst, RejectsUnexplainedWords) {
  const LocParams p{DensityParams{16, 2, 8}, 0, 0};
  EXPECT_THROW(locate_burst(Word(14, 0), p), NotDecodable);
  EXPECT_THROW(locate_burst(Word(12, 0), p), InvalidArgument);
}

// Independent confusability: two words clash when their error balls meet.
std::set<Word> burst_ball(const Word& x, std::size_t span) {
  std::set<Word> out;
  for (std::size_t len = 1; len <= std::min(span, x.size()); ++len)
    for (std::size_t s = 1; s + len - 1 <= x.size(); ++s) out.insert(apply_burst(x, {s, len}));
  return out;
}

std::set<Word> edit_ball(const Word& x, std::size_t span) {
  std::set<Word> out;
  for (std::size_t drop = 0; drop <= span; ++drop)
    for (std::size_t at = 0; at + drop <= x.size(); ++at)
      for (std::size_t add = 0; add <= span; ++add)
        for (const Word& y : add ? all_words(add, 2) : std::vector<Word>{Word{}}) {
          Word z(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(at));
          z.insert(z.end(), y.begin(), y.end());
          z.insert(z.end(), x.begin() + static_cast<std::ptrdiff_t>(at + drop), x.end());
          out.insert(z);
        }
  return out;
}

bool meet(const std::set<Word>& a, const std::set<Word>& b) {
  for (const Word& w : a)
    if (b.count(w)) return true;
  return false;
}

void expect_proper(const SyndromeOracle& oracle, bool edits) {
  std::vector<std::set<Word>> balls;
  for (const Word& x : all_words(oracle.k, 2))
    balls.push_back(edits ? edit_ball(x, oracle.span) : burst_ball(x, oracle.span));
  for (std::uint32_t a = 0; a < balls.size(); ++a)
    for (std::uint32_t b = a + 1; b < balls.size(); ++b)
      if (meet(balls[a], balls[b])) {
        ASSERT_NE(oracle.label(a), oracle.label(b)) << a << " " << b;
      }
}

TEST(Oracle, ShortBlocksGetDistinctLabels) {
  for (std::size_t k = 1; k <= 3; ++k) {
    const SyndromeOracle o = oracle_build_brute(k, 3, ErrorModel::Burst);
    EXPECT_EQ(o.label_count, 1u << k);
    for (std::uint32_t v = 0; v < (1u << k); ++v) EXPECT_EQ(o.label(v), v);
  }
}

TEST(Oracle, BurstLabelsSeparateConfusablePairs) {
  const SyndromeOracle o = oracle_build_brute(6, 1, ErrorModel::Burst);
  expect_proper(o, false);
  EXPECT_FALSE(oracle_check(o).has_value());
  expect_proper(oracle_build_brute(7, 3, ErrorModel::Burst), false);
}

TEST(Oracle, EditLabelsSeparateConfusablePairs) {
  const SyndromeOracle o = oracle_build_brute(8, 4, ErrorModel::SubstringEdit);
  expect_proper(o, true);
  EXPECT_FALSE(oracle_check(o).has_value());
}

TEST(Oracle, CheckFindsCollisions) {
  SyndromeOracle o = oracle_build_brute(6, 2, ErrorModel::Burst);
  std::fill(o.labels.begin(), o.labels.end(), 0);
  const auto witness = oracle_check(o);
  ASSERT_TRUE(witness.has_value());
  EXPECT_TRUE(meet(burst_ball(witness->first, 2), burst_ball(witness->second, 2)));
}

TEST(Oracle, ParentsOfAWordCarryDistinctLabels) {
  for (auto [k, span, model] : {std::tuple{10u, 2u, ErrorModel::Burst}, std::tuple{8u, 2u, ErrorModel::SubstringEdit}}) {
    const SyndromeOracle o = oracle_build_brute(k, span, model);
    std::size_t widest = 0;
    for (std::size_t m = k - span; m < k; ++m)
      for (const Word& z : all_words(m, 2)) {
        const auto parents = oracle_parents(z, k, span, model);
        std::set<std::uint32_t> labels;
        for (std::uint32_t p : parents) labels.insert(o.label(p));
        ASSERT_EQ(labels.size(), parents.size());
        widest = std::max(widest, parents.size());
      }
    EXPECT_GE(o.label_count, widest);
  }
}

TEST(Oracle, ParentsMatchBalls) {
  const Word z = bits("01101");
  const auto parents = oracle_parents(z, 7, 2, ErrorModel::Burst);
  std::vector<std::uint32_t> expected;
  for (const Word& x : all_words(7, 2))
    if (burst_ball(x, 2).count(z)) expected.push_back(pack_bits(x));
  EXPECT_EQ(parents, expected);
}

TEST(Oracle, FileRoundTrip) {
  const SyndromeOracle o = oracle_build_brute(8, 2, ErrorModel::Burst);
  const auto path = (std::filesystem::temp_directory_path() / "burst_oracle_test.bin").string();
  save_oracle(o, path);
  const SyndromeOracle back = load_oracle(path);
  EXPECT_EQ(back.k, o.k);
  EXPECT_EQ(back.span, o.span);
  EXPECT_EQ(back.model, o.model);
  EXPECT_EQ(back.label_count, o.label_count);
  EXPECT_EQ(back.labels, o.labels);
  {
    std::FILE* f = std::fopen(path.c_str(), "r+b");
    ASSERT_NE(f, nullptr);
    std::fputc('X', f);
    std::fclose(f);
  }
  EXPECT_THROW(load_oracle(path), InvalidArgument);
  std::filesystem::remove(path);
  EXPECT_THROW(load_oracle(path), Error);
}

TEST(BlockLayout, CoversThePaddedWord) {
  const BlockLayout layout{13, 3};
  EXPECT_EQ(layout.padded(), 18u);
  EXPECT_EQ(layout.even_count(), 3u);
  EXPECT_EQ(layout.even_block(3), (Interval{13, 18}));
  EXPECT_EQ(layout.odd_block(1), (Interval{1, 3}));
  EXPECT_EQ(layout.odd_block(2), (Interval{4, 9}));
  EXPECT_EQ(layout.odd_block(4), (Interval{16, 18}));
  // Every window of length P fits in some block.
  for (std::size_t lo = 1; lo + 2 <= 18; ++lo) {
    bool fits = false;
    for (std::size_t i = 1; i <= layout.even_count(); ++i) fits = fits || layout.even_block(i).contains(Interval{lo, lo + 2});
    for (std::size_t i = 1; i <= layout.odd_count(); ++i) fits = fits || layout.odd_block(i).contains(Interval{lo, lo + 2});
    EXPECT_TRUE(fits) << lo;
  }
}

TEST(CpbDecode, Exhaustive16P4) {
  const auto oracles = build_block_oracles(4, 2, ErrorModel::Burst);
  const BlockLayout layout{16, 4};
  for (const Word& x : all_words(16, 2)) {
    const BlockSums sums = block_syndromes(x, layout, *oracles);
    ASSERT_EQ(cpb_decode(x, {1, 1}, sums, layout, *oracles), x);
    for (std::size_t len = 1; len <= 2; ++len)
      for (std::size_t s = 1; s + len - 1 <= 16; ++s) {
        const Word received = apply_burst(x, {s, len});
        ASSERT_EQ(cpb_decode(received, {s, s + len - 1}, sums, layout, *oracles), x) << format_word(x, 2) << " " << s;
        Interval starts;
        burst_starts(x, received, starts);
        const Interval lost{starts.lo, starts.hi + len - 1};
        if (lost.length() <= 4) {
          ASSERT_EQ(cpb_decode(received, lost, sums, layout, *oracles), x);
        }
      }
  }
}

TEST(CpbDecode, SampledWindows32P8) {
  const auto oracles = build_block_oracles(8, 3, ErrorModel::Burst);
  const BlockLayout layout{30, 8};
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 3000; ++trial) {
    Word x(30);
    for (auto& b : x) b = static_cast<Symbol>(rng() & 1u);
    const BlockSums sums = block_syndromes(x, layout, *oracles);
    const std::size_t len = 1 + rng() % 3;
    const std::size_t s = 1 + rng() % (30 - len + 1);
    // Any window of length 8 around the burst.
    const std::size_t slack = 8 - len;
    const std::size_t shift = rng() % (slack + 1);
    const std::size_t lo = s > shift ? s - shift : 1;
    const Interval window{lo, std::min<std::size_t>(30, lo + 7)};
    ASSERT_EQ(cpb_decode(apply_burst(x, {s, len}), window, sums, layout, *oracles), x);
  }
}

TEST(CpbDecode, WindowAcrossBlocksIsRejected) {
  const auto oracles = build_block_oracles(4, 2, ErrorModel::Burst);
  const BlockLayout layout{16, 4};
  const Word x = bits("0110100110010110");
  const BlockSums sums = block_syndromes(x, layout, *oracles);
  const Word received = apply_burst(x, {6, 2});
  EXPECT_EQ(cpb_decode(received, {4, 8}, sums, layout, *oracles), x);
  EXPECT_THROW(cpb_decode(received, {4, 10}, sums, layout, *oracles), NotDecodable);
  BlockSums wrong = sums;
  wrong.d1 = (wrong.d1 + 1) % oracles->modulus();
  EXPECT_THROW(cpb_decode(x, {1, 1}, wrong, layout, *oracles), NotDecodable);
}

// Product code: the largest block-sum class inside a localizing class for
// row 0 and the matching class of all words for row 1.
struct SievedCtb {
  CtbParams params;
  std::vector<Word> first;
  std::vector<Word> second;
};

SievedCtb sieve_ctb(std::size_t n, std::size_t t, std::size_t delta, std::size_t P) {
  const auto oracles = build_block_oracles(P, t, ErrorModel::Burst);
  const BlockLayout layout{n, P};
  const LocClass cls = best_loc_class(DensityParams{n, t, delta});
  std::map<BlockSums, std::vector<Word>> by_sums;
  for (const Word& x : cls.words) by_sums[block_syndromes(x, layout, *oracles)].push_back(x);
  auto best = by_sums.begin();
  for (auto it = by_sums.begin(); it != by_sums.end(); ++it)
    if (it->second.size() > best->second.size()) best = it;
  SievedCtb out;
  out.params = {n, 4, t, delta, P, cls.params.c0, cls.params.c1, {best->first, best->first}, oracles};
  out.first = best->second;
  for (const Word& x : all_words(n, 2))
    if (block_syndromes(x, layout, *oracles) == best->first) out.second.push_back(x);
  return out;
}

TEST(Ctb, SievedRoundTripAndDisjointBalls) {
  const SievedCtb code = sieve_ctb(16, 2, 8, 8);
  ASSERT_GE(code.first.size(), 2u);
  ASSERT_GE(code.second.size(), 2u);
  std::map<Word, Word> owner;
  for (const Word& r0 : code.first)
    for (const Word& r1 : code.second) {
      const Word u = from_matrix(BinaryMatrix{{r0, r1}}, 4);
      ASSERT_TRUE(ctb_member(code.params, u));
      ASSERT_EQ(ctb_decode(u, code.params), u);
      for (std::size_t len = 1; len <= 2; ++len)
        for (std::size_t s = 1; s + len - 1 <= 16; ++s) {
          const Word received = apply_burst(u, {s, len});
          ASSERT_EQ(ctb_decode(received, code.params), u) << format_word(u, 4) << " s=" << s << " len=" << len;
          auto [it, fresh] = owner.emplace(received, u);
          ASSERT_TRUE(fresh || it->second == u);
        }
    }
}

TEST(Ctb, ValidatesParameters) {
  CtbParams p;
  p.n = 16;
  EXPECT_THROW(validate(p), InvalidArgument);
  p.oracles = build_block_oracles(4, 2, ErrorModel::Burst);
  p.P = 8;
  p.delta = 8;
  p.rows.resize(2);
  EXPECT_THROW(validate(p), InvalidArgument);
  p.P = 4;
  EXPECT_NO_THROW(validate(p));
  p.q = 6;
  EXPECT_THROW(validate(p), InvalidArgument);
}

}  // namespace
}  // namespace burst
