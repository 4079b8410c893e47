#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "burst/error.hpp"

namespace burst {

using Symbol = std::uint16_t;
// A word over {0, ..., q-1}. The alphabet size travels separately.
using Word = std::vector<Symbol>;

inline constexpr unsigned kMaxAlphabet = 1u << 16;
inline constexpr std::size_t kMaxBallLength = 32;

// Deletion of `length` consecutive symbols starting at 1-based `start`.
struct Burst {
  std::size_t start = 1;
  std::size_t length = 1;
  friend bool operator==(const Burst&, const Burst&) = default;
};

// 1-based inclusive range of positions.
struct Interval {
  std::size_t lo = 1;
  std::size_t hi = 1;

  std::size_t length() const { return hi - lo + 1; }
  bool contains(std::size_t p) const { return lo <= p && p <= hi; }
  bool contains(const Interval& other) const { return lo <= other.lo && other.hi <= hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

// Least nonnegative residue.
inline long long mod(long long v, long long m) {
  const long long r = v % m;
  return r < 0 ? r + m : r;
}

// ceil(log2(v)) for v >= 1.
inline unsigned ceil_log2(std::uint64_t v) {
  unsigned bits = 0;
  while ((std::uint64_t{1} << bits) < v) ++bits;
  return bits;
}

// Number of binary rows needed to store a symbol of a q-ary alphabet.
inline unsigned bits_for(unsigned q) { return std::max(1u, ceil_log2(q)); }

inline void require_alphabet(const Word& u, unsigned q) {
  require(q >= 2 && q <= kMaxAlphabet, "alphabet size must lie in [2, 65536]");
  for (Symbol s : u) require(s < q, "symbol " + std::to_string(s) + " outside alphabet of size " + std::to_string(q));
}

inline void require_binary(const Word& x) { require_alphabet(x, 2); }

inline std::size_t weight(const Word& x) {
  return static_cast<std::size_t>(std::count_if(x.begin(), x.end(), [](Symbol s) { return s != 0; }));
}

inline Word apply_burst(const Word& u, Burst b) {
  if (b.length == 0 || b.start == 0 || b.start + b.length - 1 > u.size()) throw InvalidArgument("burst exceeds sequence");
  Word out;
  out.reserve(u.size() - b.length);
  out.insert(out.end(), u.begin(), u.begin() + static_cast<std::ptrdiff_t>(b.start - 1));
  out.insert(out.end(), u.begin() + static_cast<std::ptrdiff_t>(b.start - 1 + b.length), u.end());
  return out;
}

// Starts s such that deleting |x|-|y| symbols of x at s yields y. The set is
// always a contiguous range; returns it as an Interval, or nothing if y is not
// a burst descendant of x.
inline bool burst_starts(const Word& x, const Word& y, Interval& starts) {
  if (y.size() >= x.size()) return false;
  const std::size_t n = x.size();
  const std::size_t len = n - y.size();
  std::size_t prefix = 0;
  while (prefix < y.size() && x[prefix] == y[prefix]) ++prefix;
  std::size_t suffix = 0;
  while (suffix < y.size() && x[n - 1 - suffix] == y[y.size() - 1 - suffix]) ++suffix;
  // Start s works iff s-1 <= prefix and n-(s-1+len) <= suffix.
  const std::size_t lo = n - len - suffix + 1 > 1 ? n - len - suffix + 1 : 1;
  const std::size_t hi = prefix + 1;
  if (lo > hi || hi > n - len + 1) return false;
  starts = {lo, hi};
  return true;
}

inline bool is_burst_descendant(const Word& x, const Word& y) {
  Interval ignored;
  return burst_starts(x, y, ignored);
}

// D_t(u), or D_{<=t}(u) when upto is set, sorted and deduplicated.
inline std::vector<Word> deletion_ball(const Word& u, std::size_t t, bool upto) {
  require(t >= 1 && t <= u.size(), "burst length must lie in [1, |u|]");
  require(u.size() <= kMaxBallLength, "deletion_ball refuses sequences longer than 32");
  std::vector<Word> ball;
  for (std::size_t len = upto ? 1 : t; len <= t; ++len)
    for (std::size_t s = 1; s + len - 1 <= u.size(); ++s) ball.push_back(apply_burst(u, {s, len}));
  std::sort(ball.begin(), ball.end());
  ball.erase(std::unique(ball.begin(), ball.end()), ball.end());
  return ball;
}

inline std::size_t run_count(const Word& u) {
  if (u.empty()) return 0;
  std::size_t runs = 1;
  for (std::size_t i = 1; i < u.size(); ++i) runs += u[i] != u[i - 1];
  return runs;
}

// Closed-form |D_t(u)|: write u column by column into a t x (n/t) array and
// sum the run counts of its rows.
inline std::size_t burst_ball_size(const Word& u, std::size_t t) {
  require(t >= 1 && !u.empty() && u.size() % t == 0, "burst_ball_size needs t to divide |u|");
  std::size_t total = 0;
  for (std::size_t row = 0; row < t; ++row) {
    Word r;
    for (std::size_t i = row; i < u.size(); i += t) r.push_back(u[i]);
    total += run_count(r);
  }
  return total - t + 1;
}

inline long long vt_syndrome(const Word& w) {
  long long sum = 0;
  for (std::size_t i = 0; i < w.size(); ++i) sum += static_cast<long long>(i + 1) * w[i];
  return sum;
}

struct RunSyndrome {
  Word runs;       // 0-based run index of each position
  long long sum;   // sum of the run indices
};

inline RunSyndrome run_syndrome(const Word& x) {
  require_binary(x);
  RunSyndrome out{Word(x.size(), 0), 0};
  for (std::size_t i = 1; i < x.size(); ++i) {
    out.runs[i] = static_cast<Symbol>(out.runs[i - 1] + (x[i] != x[i - 1]));
    out.sum += out.runs[i];
  }
  return out;
}

// Binary derivative: y_i = x_i xor x_{i+1}, last bit copied.
inline Word psi(const Word& x) {
  require_binary(x);
  Word y(x.size());
  for (std::size_t i = 0; i + 1 < x.size(); ++i) y[i] = x[i] ^ x[i + 1];
  if (!x.empty()) y.back() = x.back();
  return y;
}

inline Word psi_inv(const Word& y) {
  require_binary(y);
  Word x(y.size());
  if (y.empty()) return x;
  x.back() = y.back();
  for (std::size_t i = y.size() - 1; i-- > 0;) x[i] = y[i] ^ x[i + 1];
  return x;
}

// Ascent indicator: first bit 1, then 1 wherever the sequence strictly rises.
inline Word phi(const Word& u) {
  require(!u.empty(), "phi needs a nonempty sequence");
  Word out(u.size());
  out[0] = 1;
  for (std::size_t i = 1; i < u.size(); ++i) out[i] = u[i] > u[i - 1];
  return out;
}

// Length of the longest substring with period 2. Strings of length <= 2 count
// as period-2 themselves.
inline std::size_t longest_period2(const Word& x) {
  if (x.size() <= 2) return x.size();
  std::size_t best = 2;
  std::size_t chain = 0;
  for (std::size_t i = 0; i + 2 < x.size(); ++i) {
    chain = x[i] == x[i + 2] ? chain + 1 : 0;
    best = std::max(best, chain + 2);
  }
  return best;
}

// Rows of the binary representation matrix; row 0 holds the least
// significant bit of every symbol.
struct BinaryMatrix {
  std::vector<Word> rows;
  friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;
};

inline BinaryMatrix to_matrix(const Word& u, unsigned q) {
  require_alphabet(u, q);
  BinaryMatrix a{std::vector<Word>(bits_for(q), Word(u.size()))};
  for (std::size_t j = 0; j < u.size(); ++j)
    for (std::size_t r = 0; r < a.rows.size(); ++r) a.rows[r][j] = (u[j] >> r) & 1u;
  return a;
}

inline Word from_matrix(const BinaryMatrix& a, unsigned q) {
  require(a.rows.size() == bits_for(q), "matrix has the wrong number of rows for the alphabet");
  const std::size_t n = a.rows.front().size();
  Word u(n, 0);
  for (std::size_t r = 0; r < a.rows.size(); ++r) {
    require(a.rows[r].size() == n, "matrix rows differ in length");
    for (std::size_t j = 0; j < n; ++j) {
      require(a.rows[r][j] <= 1, "matrix entries must be bits");
      u[j] = static_cast<Symbol>(u[j] | (a.rows[r][j] << r));
    }
  }
  for (Symbol s : u) require(s < q, "matrix column decodes to a value outside the alphabet");
  return u;
}

// Comma-separated decimals; with q = 2 a bare 0/1 string is also accepted.
inline Word parse_word(std::string_view text, unsigned q) {
  Word u;
  if (text.empty()) return u;
  if (q == 2 && text.find(',') == std::string_view::npos) {
    for (char c : text) {
      require(c == '0' || c == '1', "binary word may contain only 0 and 1");
      u.push_back(static_cast<Symbol>(c - '0'));
    }
    return u;
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string token(text.substr(pos, comma - pos));
    require(!token.empty() && token.find_first_not_of("0123456789") == std::string::npos,
            "malformed symbol '" + token + "'");
    const unsigned long value = std::stoul(token);
    require(value < q, "symbol " + token + " outside alphabet");
    u.push_back(static_cast<Symbol>(value));
    pos = comma + 1;
  }
  return u;
}

inline std::string format_word(const Word& u, unsigned q) {
  std::string out;
  if (q == 2) {
    for (Symbol s : u) out.push_back(static_cast<char>('0' + s));
    return out;
  }
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(u[i]);
  }
  return out;
}

}  // namespace burst
