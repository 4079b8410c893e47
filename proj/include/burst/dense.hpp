#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <vector>

#include "burst/seqcore.hpp"

namespace burst {

// Pattern w = 0^t 1^t and the density bound delta for strings of length n.
struct DensityParams {
  std::size_t n = 0;
  std::size_t t = 1;
  std::size_t delta = 0;

  unsigned index_bits() const { return ceil_log2(n); }
  Word pattern() const {
    Word w(2 * t, 0);
    std::fill(w.begin() + static_cast<std::ptrdiff_t>(t), w.end(), Symbol{1});
    return w;
  }
  // Length of a compressed delta-window, delta - ceil(log n) - 4t - 2.
  std::size_t compressed_bits() const {
    const std::size_t overhead = index_bits() + 4 * t + 2;
    return delta > overhead ? delta - overhead : 0;
  }

  // delta = t 2^(2t+1) ceil(log n).
  static DensityParams standard(std::size_t n, std::size_t t) {
    return {n, t, t * (std::size_t{1} << (2 * t + 1)) * ceil_log2(n)};
  }
  // The permutation construction doubles delta.
  static DensityParams permutation(std::size_t n, std::size_t t) {
    return {n, t, t * (std::size_t{1} << (2 * t + 2)) * ceil_log2(n)};
  }
};

inline void validate(const DensityParams& dp) {
  require(dp.t >= 1 && dp.t <= 8, "density pattern needs 1 <= t <= 8");
  require(dp.n >= 1, "density parameters need n >= 1");
  require(dp.delta >= 2 * dp.t, "delta must be at least 2t");
}

struct PatternProfile {
  Word indicator;                  // 1 where an occurrence of w starts
  std::vector<std::size_t> alpha;  // gaps between the ones of (1, indicator, 1)

  std::size_t occurrences() const { return alpha.size() - 1; }
};

inline PatternProfile indicator_alpha(const Word& x, const DensityParams& dp) {
  validate(dp);
  require_binary(x);
  const std::size_t k = 2 * dp.t;
  require(x.size() >= k, "pattern profile needs |x| >= 2t");
  PatternProfile out;
  out.indicator.assign(x.size() - k + 1, 0);
  std::size_t last = 1;  // position of the previous one in (1, indicator, 1)
  for (std::size_t i = 0; i < out.indicator.size(); ++i) {
    bool hit = true;
    for (std::size_t j = 0; j < k && hit; ++j) hit = x[i + j] == (j < dp.t ? 0 : 1);
    if (!hit) continue;
    out.indicator[i] = 1;
    out.alpha.push_back(i + 2 - last);
    last = i + 2;
  }
  out.alpha.push_back(out.indicator.size() + 2 - last);
  return out;
}

inline bool is_dense(const Word& x, const DensityParams& dp) {
  if (x.size() < 2 * dp.t) return false;
  const auto profile = indicator_alpha(x, dp);
  return std::all_of(profile.alpha.begin(), profile.alpha.end(), [&](std::size_t g) { return g <= dp.delta; });
}

namespace detail {

using boost::multiprecision::cpp_int;

inline bool contains_pattern(const Word& s, std::size_t t) {
  for (std::size_t i = 0; i + 2 * t <= s.size(); ++i) {
    bool hit = true;
    for (std::size_t j = 0; j < 2 * t && hit; ++j) hit = s[i + j] == (j < t ? 0 : 1);
    if (hit) return true;
  }
  return false;
}

inline cpp_int digit_capacity(const DensityParams& dp) {
  const cpp_int base = (cpp_int(1) << (2 * dp.t)) - 1;
  return boost::multiprecision::pow(base, static_cast<unsigned>(dp.delta / (2 * dp.t)));
}

}  // namespace detail

// True when every pattern-free delta-window fits in compressed_bits() bits.
inline bool compression_fits(const DensityParams& dp) {
  validate(dp);
  if (dp.delta % (2 * dp.t) != 0 || dp.compressed_bits() == 0) return false;
  return detail::digit_capacity(dp) <= (detail::cpp_int(1) << dp.compressed_bits());
}

inline void require_compression(const DensityParams& dp) {
  require(dp.delta % (2 * dp.t) == 0, "delta must be a multiple of 2t");
  require(compression_fits(dp), "pattern-free windows of length delta do not fit in delta - ceil(log n) - 4t - 2 bits");
}

// Reads s in chunks of 2t bits; each chunk is a digit in base 2^(2t) - 1
// because it cannot equal w. Requires |s| to be a multiple of 2t.
inline detail::cpp_int pattern_free_rank(const Word& s, std::size_t t) {
  require_binary(s);
  const std::size_t chunk = 2 * t;
  require(t >= 1 && s.size() % chunk == 0, "rank needs a length that is a multiple of 2t");
  const unsigned forbidden = (1u << t) - 1;  // value of 0^t 1^t
  const unsigned base = (1u << chunk) - 1;
  detail::cpp_int value = 0;
  for (std::size_t i = 0; i < s.size(); i += chunk) {
    unsigned v = 0;
    for (std::size_t j = 0; j < chunk; ++j) v = (v << 1) | s[i + j];
    require(v != forbidden, "rank input has a chunk equal to the pattern");
    value = value * base + (v < forbidden ? v : v - 1);
  }
  return value;
}

inline Word pattern_free_unrank(detail::cpp_int value, std::size_t length, std::size_t t) {
  const std::size_t chunk = 2 * t;
  require(t >= 1 && length % chunk == 0, "unrank needs a length that is a multiple of 2t");
  const unsigned forbidden = (1u << t) - 1;
  const unsigned base = (1u << chunk) - 1;
  Word s(length, 0);
  for (std::size_t i = length; i > 0; i -= chunk) {
    const auto digit = static_cast<unsigned>(value % base);
    value /= base;
    const unsigned v = digit < forbidden ? digit : digit + 1;
    for (std::size_t j = 0; j < chunk; ++j) s[i - 1 - j] = static_cast<Symbol>((v >> j) & 1u);
  }
  if (value != 0) throw InvalidArgument("rank exceeds the digit range");
  return s;
}

// The rank of s written MSB first in compressed_bits() bits.
inline Word compress_g(const Word& s, const DensityParams& dp) {
  require_compression(dp);
  require_binary(s);
  require(s.size() == dp.delta, "compress_g needs a string of length delta");
  require(!detail::contains_pattern(s, dp.t), "compress_g input contains the pattern");
  detail::cpp_int value = pattern_free_rank(s, dp.t);
  Word out(dp.compressed_bits(), 0);
  for (std::size_t b = out.size(); b-- > 0;) {
    out[b] = static_cast<Symbol>(static_cast<unsigned>(value & 1));
    value >>= 1;
  }
  return out;
}

inline Word decompress_g(const Word& bits, const DensityParams& dp) {
  require_compression(dp);
  require_binary(bits);
  require(bits.size() == dp.compressed_bits(), "decompress_g needs exactly compressed_bits() bits");
  detail::cpp_int value = 0;
  for (Symbol b : bits) value = (value << 1) | b;
  return pattern_free_unrank(value, dp.delta, dp.t);
}

namespace detail {

// Smallest i in [1, limit] whose delta-window holds no pattern, if any.
inline std::optional<std::size_t> first_sparse_window(const Word& e, std::size_t limit, const DensityParams& dp) {
  const std::size_t k = 2 * dp.t;
  // hits[j] = number of pattern starts among 1-based positions < j + 1.
  std::vector<std::size_t> hits(e.size() + 2, 0);
  for (std::size_t j = 1; j <= e.size(); ++j) {
    bool hit = j + k - 1 <= e.size();
    for (std::size_t m = 0; m < k && hit; ++m) hit = e[j - 1 + m] == (m < dp.t ? 0 : 1);
    hits[j + 1] = hits[j] + (hit ? 1 : 0);
  }
  for (std::size_t i = 1; i <= limit; ++i) {
    const std::size_t last = i + dp.delta - k;
    if (i + dp.delta - 1 > e.size()) break;
    if (hits[last + 1] == hits[i]) return i;
  }
  return std::nullopt;
}

}  // namespace detail

// Moves every pattern-free delta-window to a record at the tail. Records are
// index, g(window), 1, 0^t 1^t, 0^a 1^b, 0 with a + b = 2t minus the zero
// padding of a short final window; an odd remainder puts the extra symbol in
// the run of zeros.
inline Word dense_encode(const Word& x, const DensityParams& dp) {
  require_binary(x);
  require(x.size() == dp.n, "dense_encode input must have length n");
  require_compression(dp);
  const std::size_t t = dp.t;
  const unsigned width = dp.index_bits();
  Word e = x;
  for (int r = 0; r < 2; ++r) {
    e.insert(e.end(), t, 0);
    e.insert(e.end(), t, 1);
  }
  std::size_t content = dp.n;
  while (const auto found = detail::first_sparse_window(e, content, dp)) {
    const std::size_t i = *found;
    const bool full = i + dp.delta <= content + 1;
    const std::size_t removed = full ? dp.delta : content - i + 1;
    Word window(e.begin() + static_cast<std::ptrdiff_t>(i - 1),
                e.begin() + static_cast<std::ptrdiff_t>(i - 1 + removed));
    window.resize(dp.delta, 0);
    const std::size_t pad = dp.delta - removed;
    const std::size_t zeros = (2 * t - pad + 1) / 2;
    const std::size_t ones = 2 * t - pad - zeros;
    e.erase(e.begin() + static_cast<std::ptrdiff_t>(i - 1), e.begin() + static_cast<std::ptrdiff_t>(i - 1 + removed));
    for (unsigned b = width; b-- > 0;) e.push_back(static_cast<Symbol>((i >> b) & 1u));
    const Word packed = compress_g(window, dp);
    e.insert(e.end(), packed.begin(), packed.end());
    e.push_back(1);
    e.insert(e.end(), t, 0);
    e.insert(e.end(), t, 1);
    e.insert(e.end(), zeros, 0);
    e.insert(e.end(), ones, 1);
    e.push_back(0);
    content = full ? content - dp.delta : i - 1;
  }
  return e;
}

inline Word dense_decode(const Word& encoded, const DensityParams& dp) {
  require_binary(encoded);
  require_compression(dp);
  const std::size_t t = dp.t;
  require(encoded.size() == dp.n + 4 * t, "dense_decode input must have length n + 4t");
  const std::size_t width = dp.index_bits();
  const std::size_t packed_bits = dp.compressed_bits();
  Word e = encoded;
  while (!e.empty() && e.back() == 0) {
    // Walk left over 1^b 0^a 1^t 0^t 1.
    std::size_t pos = e.size() - 1;
    auto run = [&](Symbol value) {
      std::size_t len = 0;
      while (pos > 0 && e[pos - 1] == value) --pos, ++len;
      return len;
    };
    const std::size_t ones = run(1);
    const std::size_t zeros = run(0);
    const bool shape_ok = zeros >= 1 && (zeros == ones || zeros == ones + 1) && zeros + ones <= 2 * t;
    if (!shape_ok || pos < t + t + 1) throw InvalidArgument("malformed dense record tail");
    for (std::size_t m = 0; m < t; ++m)
      if (e[pos - 1 - m] != 1 || e[pos - 1 - t - m] != 0) throw InvalidArgument("malformed dense record marker");
    pos -= 2 * t;
    if (e[pos - 1] != 1) throw InvalidArgument("malformed dense record marker");
    --pos;
    if (pos < width + packed_bits) throw InvalidArgument("dense record overruns the word");
    const std::size_t start = pos - packed_bits - width;
    std::uint64_t i = 0;
    for (std::size_t b = 0; b < width; ++b) i = (i << 1) | e[start + b];
    const Word window = decompress_g(Word(e.begin() + static_cast<std::ptrdiff_t>(pos - packed_bits),
                                          e.begin() + static_cast<std::ptrdiff_t>(pos)),
                                     dp);
    const std::size_t removed = dp.delta - (2 * t - zeros - ones);
    for (std::size_t m = removed; m < dp.delta; ++m)
      if (window[m] != 0) throw InvalidArgument("dense record padding is not zero");
    e.resize(start);
    if (i < 1 || i > e.size() + 1) throw InvalidArgument("dense record index points outside the word");
    e.insert(e.begin() + static_cast<std::ptrdiff_t>(i - 1), window.begin(),
             window.begin() + static_cast<std::ptrdiff_t>(removed));
  }
  if (e.size() != dp.n + 4 * t) throw InvalidArgument("dense records do not restore the length");
  for (std::size_t m = 0; m < 4 * t; ++m)
    if (e[dp.n + m] != ((m / t) % 2 ? 1 : 0)) throw InvalidArgument("malformed dense trailer");
  e.resize(dp.n);
  return e;
}

// Localizing code: dense strings with n_w = c0 (mod 4) and VT(alpha) = c1
// (mod 2n).
struct LocParams {
  DensityParams density;
  long long c0 = 0;
  long long c1 = 0;
};

inline void validate(const LocParams& p) {
  validate(p.density);
  require(p.c0 >= 0 && p.c0 < 4, "c0 must lie in [0, 4)");
  require(p.c1 >= 0 && p.c1 < 2 * static_cast<long long>(p.density.n), "c1 must lie in [0, 2n)");
}

struct LocSyndrome {
  long long c0 = 0;
  long long c1 = 0;
  friend bool operator==(const LocSyndrome&, const LocSyndrome&) = default;
};

inline LocSyndrome loc_syndrome(const Word& x, const DensityParams& dp) {
  const auto profile = indicator_alpha(x, dp);
  long long vt = 0;
  for (std::size_t i = 0; i < profile.alpha.size(); ++i) vt += static_cast<long long>((i + 1) * profile.alpha[i]);
  const auto modulus = 2 * static_cast<long long>(x.size());
  return {static_cast<long long>(profile.occurrences() % 4), vt % modulus};
}

inline bool cloc_member(const LocParams& p, const Word& x) {
  if (x.size() != p.density.n || !is_dense(x, p.density)) return false;
  return loc_syndrome(x, p.density) == LocSyndrome{p.c0, p.c1};
}

namespace detail {

// Union of the positions lost by every localizing codeword accepted by
// `accept` that explains the received word.
template <class Accept>
std::optional<Interval> locate_burst_if(const Word& received, const LocParams& p, Accept&& accept) {
  validate(p);
  require_binary(received);
  const std::size_t n = p.density.n;
  require(received.size() <= n && received.size() + p.density.t >= n, "received length must lie in [n - t, n]");
  if (received.size() == n) return std::nullopt;
  const std::size_t len = n - received.size();
  std::optional<Interval> span;
  for (std::size_t at = 0; at <= received.size(); ++at)
    for (std::uint32_t bits = 0; bits < (1u << len); ++bits) {
      Word x(received.begin(), received.begin() + static_cast<std::ptrdiff_t>(at));
      for (std::size_t b = len; b-- > 0;) x.push_back(static_cast<Symbol>((bits >> b) & 1u));
      x.insert(x.end(), received.begin() + static_cast<std::ptrdiff_t>(at), received.end());
      if (!accept(x) || !cloc_member(p, x)) continue;
      Interval starts;
      burst_starts(x, received, starts);
      const Interval lost{starts.lo, starts.hi + len - 1};
      span = span ? Interval{std::min(span->lo, lost.lo), std::max(span->hi, lost.hi)} : lost;
    }
  if (!span) throw NotDecodable("no localizing codeword explains the received word");
  return span;
}

}  // namespace detail

// Positions that some localizing codeword could have lost to produce the
// received word. Empty when nothing was deleted.
inline std::optional<Interval> locate_burst(const Word& received, const LocParams& p) {
  return detail::locate_burst_if(received, p, [](const Word&) { return true; });
}

}  // namespace burst
