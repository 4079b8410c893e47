#pragma once

#include <optional>
#include <vector>

#include "burst/classic.hpp"

namespace burst {

// Longest period-2 run allowed by the PLL encoder for payload length n.
inline std::size_t pll_cap(std::size_t n) { return ceil_log2(n) + 5; }

// Smallest payload length for which a deleted period-2 window is shorter than
// the payload itself.
inline constexpr std::size_t kPllMinLength = 10;

namespace detail {

inline void append_bits(Word& y, std::uint64_t value, unsigned width) {
  for (unsigned b = width; b-- > 0;) y.push_back(static_cast<Symbol>((value >> b) & 1u));
}

inline std::uint64_t read_bits(const Word& y, std::size_t from, unsigned width) {
  std::uint64_t v = 0;
  for (unsigned b = 0; b < width; ++b) v = (v << 1) | y[from + b];
  return v;
}

inline bool has_period2(const Word& y, std::size_t from, std::size_t len) {
  for (std::size_t k = from; k + 2 < from + len; ++k)
    if (y[k] != y[k + 2]) return false;
  return true;
}

}  // namespace detail

// Removes long period-2 windows and records each removal at the tail as
// 0, a, b, position (ceil(log n) bits, MSB first), 1, 1.
inline Word pll_encode(const Word& x) {
  require_binary(x);
  const std::size_t n = x.size();
  require(n >= kPllMinLength, "PLL encoding needs n >= 10 so that ceil(log n) + 5 < n");
  const unsigned width = ceil_log2(n);
  const std::size_t cap = pll_cap(n);
  Word y = x;
  y.push_back(1);
  y.push_back(0);
  std::size_t content = n;
  std::size_t i = 1;
  while (i + width + 3 <= content) {
    if (!detail::has_period2(y, i - 1, cap + 1)) {
      ++i;
      continue;
    }
    const Symbol a = y[i - 1];
    const Symbol b = y[i];
    y.erase(y.begin() + static_cast<std::ptrdiff_t>(i - 1), y.begin() + static_cast<std::ptrdiff_t>(i - 1 + cap));
    y.push_back(0);
    y.push_back(a);
    y.push_back(b);
    detail::append_bits(y, i, width);
    y.push_back(1);
    y.push_back(1);
    content -= cap;
    i = 1;
  }
  return y;
}

inline Word pll_decode(const Word& encoded) {
  require_binary(encoded);
  require(encoded.size() >= kPllMinLength + 2, "PLL codeword too short");
  const std::size_t n = encoded.size() - 2;
  const unsigned width = ceil_log2(n);
  const std::size_t cap = pll_cap(n);
  Word y = encoded;
  for (std::size_t records = 0; y.size() >= 2 && y[y.size() - 2] == 1 && y.back() == 1; ++records) {
    if (records > n / cap) throw InvalidArgument("PLL trailer holds more records than the payload allows");
    const std::size_t start = y.size() - cap;
    if (y[start] != 0) throw InvalidArgument("malformed PLL record");
    const Symbol a = y[start + 1];
    const Symbol b = y[start + 2];
    const std::uint64_t position = detail::read_bits(y, start + 3, width);
    y.resize(start);
    if (position < 1 || position > y.size() + 1) throw InvalidArgument("PLL record points outside the word");
    Word pattern(cap);
    for (std::size_t k = 0; k < cap; ++k) pattern[k] = k % 2 ? b : a;
    y.insert(y.begin() + static_cast<std::ptrdiff_t>(position - 1), pattern.begin(), pattern.end());
  }
  if (y.size() != n + 2 || y[n] != 1 || y[n + 1] != 0) throw InvalidArgument("malformed PLL trailer");
  y.resize(n);
  return y;
}

// All burst starts that turn the decoded row into the received row.
inline Interval locate_from_row1(const Word& decoded, const Word& received) {
  Interval starts;
  if (!burst_starts(decoded, received, starts)) throw InvalidArgument("received row is not a burst descendant");
  return starts;
}

struct PBoundedParams {
  std::size_t n = 0;
  std::size_t P = 1;
  long long c = 0;
  long long d = 0;
};

inline void validate(const PBoundedParams& p) {
  require(p.n >= 1 && p.P >= 1, "P-bounded code needs n >= 1 and P >= 1");
  require(p.c >= 0 && p.c < 2 * static_cast<long long>(p.P) && p.d >= 0 && p.d < 3, "P-bounded residues out of range");
}

inline bool pbounded_member(const PBoundedParams& p, const Word& x) {
  require_binary(x);
  if (x.size() != p.n) return false;
  const Word y = psi(x);
  return mod(vt_syndrome(y), 2 * static_cast<long long>(p.P)) == p.c &&
         static_cast<long long>(weight(y) % 3) == p.d;
}

namespace detail {

// ones_from[k] = number of ones in y[k..], 0-based, with ones_from[|y|] = 0.
inline std::vector<long long> suffix_ones(const Word& y) {
  std::vector<long long> out(y.size() + 1, 0);
  for (std::size_t k = y.size(); k-- > 0;) out[k] = out[k + 1] + y[k];
  return out;
}

}  // namespace detail

namespace detail {

// Members of the code that reach `received` through a burst of one or two
// deletions with at least one admissible start in [lo, hi].
inline std::vector<Word> pbounded_candidates(const Word& received, const PBoundedParams& params, std::size_t lo,
                                             std::size_t hi) {
  const std::size_t n = params.n;
  const auto P = static_cast<long long>(params.P);
  const Word yr = psi(received);
  const std::vector<long long> ones = suffix_ones(yr);
  const long long delta = mod(params.c - vt_syndrome(yr), 2 * P);
  const long long delta_w = mod(params.d - static_cast<long long>(weight(yr)), 3);
  const bool one_deletion = received.size() + 1 == n;

  std::vector<Word> repairs;
  auto consider = [&](long long predicted, Word y) {
    if (mod(predicted, 2 * P) == delta) repairs.push_back(std::move(y));
  };
  auto spliced = [&](std::size_t p, std::size_t drop, std::initializer_list<Symbol> insert) {
    Word y(yr.begin(), yr.begin() + static_cast<std::ptrdiff_t>(p - 1));
    y.insert(y.end(), insert);
    y.insert(y.end(), yr.begin() + static_cast<std::ptrdiff_t>(p - 1 + drop), yr.end());
    return y;
  };

  const auto w = static_cast<long long>(weight(yr));
  if (delta_w == 1) {
    // A leading 1, 10 or 01 of y was lost, or a trailing one when the burst
    // ends at the last symbol.
    if (one_deletion) {
      consider(w + 1, insert_at(yr, 0, {1}));
      consider(static_cast<long long>(n), insert_at(yr, yr.size(), {1}));
    } else {
      consider(delta % 2 ? 2 * w + 1 : 2 * w + 2, insert_at(yr, 0, {Symbol(delta % 2), Symbol(1 - delta % 2)}));
      consider(static_cast<long long>(n), insert_at(yr, yr.size(), {0, 1}));
      consider(static_cast<long long>(n - 1), insert_at(yr, yr.size(), {1, 0}));
    }
  } else {
    const std::size_t p_lo = lo > 1 ? lo - 1 : 1;
    const std::size_t p_hi = std::min(yr.size() + 1, hi + 1);
    for (std::size_t p = p_lo; p <= p_hi; ++p) {
      const auto pp = static_cast<long long>(p);
      const bool inside = p <= yr.size();
      if (one_deletion && delta_w == 0) {
        // A 0 was deleted.
        consider(ones[p - 1], spliced(p, 0, {0}));
      } else if (one_deletion) {
        // 11 became 0.
        if (inside && yr[p - 1] == 0) consider(2 * pp + 1 + ones[p], spliced(p, 1, {1, 1}));
      } else if (delta_w == 0 && delta % 2) {
        // 010 became 1.
        if (inside && yr[p - 1] == 1) consider(2 * ones[p] + 1, spliced(p, 1, {0, 1, 0}));
      } else if (delta_w == 0) {
        // 00 deleted.
        consider(2 * ones[p - 1], spliced(p, 0, {0, 0}));
      } else if (delta % 2) {
        // 11 deleted.
        consider(2 * pp + 1 + 2 * ones[p - 1], spliced(p, 0, {1, 1}));
      } else {
        // 101 became 0.
        if (inside && yr[p - 1] == 0) consider(2 * pp + 2 + 2 * ones[p], spliced(p, 1, {1, 0, 1}));
      }
    }
  }

  std::vector<Word> out;
  for (const Word& y : repairs) {
    Word x = psi_inv(y);
    Interval starts;
    if (pbounded_member(params, x) && burst_starts(x, received, starts) && starts.hi >= lo && starts.lo <= hi)
      out.push_back(std::move(x));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace detail

// Corrects a burst of one or two deletions when every start that explains the
// received word lies in [m, m + P - 1].
inline Word pbounded_decode(const Word& received, const PBoundedParams& params, std::size_t m) {
  validate(params);
  require_binary(received);
  const std::size_t n = params.n;
  require(received.size() <= n && received.size() + 2 >= n, "P-bounded decoding needs length n, n-1 or n-2");
  require(m >= 1, "window start must be positive");
  if (received.size() == n) {
    if (!pbounded_member(params, received)) throw NotDecodable("received word is not a codeword");
    return received;
  }
  const std::size_t last = m + params.P - 1;
  std::vector<Word> found = detail::pbounded_candidates(received, params, m, last);
  if (found.size() > 1) {
    std::erase_if(found, [&](const Word& x) {
      Interval starts;
      burst_starts(x, received, starts);
      return starts.lo < m || starts.hi > last;
    });
  }
  if (found.size() != 1) throw NotDecodable("P-bounded syndromes do not single out one repair");
  return found.front();
}

// Row 0 of A(u) is a period-limited Levenshtein codeword; rows 1.. are
// P-bounded codewords with P = ceil(log n) + 5.
struct C2BParams {
  std::size_t n = 0;
  unsigned q = 4;
  long long a = 0;
  std::vector<long long> c;  // one entry per row after the first
  std::vector<long long> d;

  std::size_t P() const { return pll_cap(n); }
  std::size_t rows() const { return bits_for(q); }
};

inline void validate(const C2BParams& p) {
  require(p.q >= 2 && p.q % 2 == 0, "C_2B needs an even alphabet");
  require(p.n >= 2, "C_2B needs n >= 2");
  require(p.a >= 0 && p.a < 2 * static_cast<long long>(p.n), "C_2B residue a out of range");
  require(p.c.size() + 1 == p.rows() && p.d.size() + 1 == p.rows(), "C_2B needs one (c, d) pair per extra row");
  for (std::size_t r = 0; r + 1 < p.rows(); ++r) validate(PBoundedParams{p.n, p.P(), p.c[r], p.d[r]});
}

inline PBoundedParams row_params(const C2BParams& p, std::size_t row) {
  return {p.n, p.P(), p.c[row - 1], p.d[row - 1]};
}

inline bool pll_levenshtein_member(const Word& x, long long a, std::size_t cap) {
  return longest_period2(x) <= cap && mod(vt_syndrome(psi(x)), 2 * static_cast<long long>(x.size())) == a;
}

inline bool c2b_member(const C2BParams& p, const Word& u) {
  if (u.size() != p.n) return false;
  const BinaryMatrix m = to_matrix(u, p.q);
  if (!pll_levenshtein_member(m.rows[0], p.a, p.P())) return false;
  for (std::size_t r = 1; r < m.rows.size(); ++r)
    if (!pbounded_member(row_params(p, r), m.rows[r])) return false;
  return true;
}

inline Word c2b_decode(const Word& received, const C2BParams& params) {
  validate(params);
  require_alphabet(received, params.q);
  require(received.size() <= params.n && received.size() + 2 >= params.n, "C_2B decoding needs length n, n-1 or n-2");
  if (received.size() == params.n) {
    if (!c2b_member(params, received)) throw NotDecodable("received word is not a codeword");
    return received;
  }
  const BinaryMatrix rows = to_matrix(received, params.q);
  const Word first = levenshtein_decode(rows.rows[0], params.a, params.n);
  if (longest_period2(first) > params.P()) throw NotDecodable("first row is not period-limited");
  const Interval window = locate_from_row1(first, rows.rows[0]);
  if (window.length() > params.P()) throw NotDecodable("first row does not localize the burst");

  // Each row may admit a few repairs near the window; keep the combinations
  // that one burst of the whole word explains.
  std::vector<std::vector<Word>> options{{first}};
  for (std::size_t r = 1; r < rows.rows.size(); ++r) {
    options.push_back(detail::pbounded_candidates(rows.rows[r], row_params(params, r), window.lo, window.hi));
    if (options.back().empty()) throw NotDecodable("a row has no repair inside the window");
  }
  std::vector<Word> found;
  std::vector<std::size_t> pick(options.size(), 0);
  while (true) {
    BinaryMatrix m;
    for (std::size_t r = 0; r < options.size(); ++r) m.rows.push_back(options[r][pick[r]]);
    Word u = from_matrix(m, 1u << m.rows.size());
    if (std::all_of(u.begin(), u.end(), [&](Symbol s) { return s < params.q; }) && is_burst_descendant(u, received))
      found.push_back(std::move(u));
    std::size_t r = 0;
    while (r < pick.size() && ++pick[r] == options[r].size()) pick[r++] = 0;
    if (r == pick.size()) break;
  }
  if (found.size() != 1) throw NotDecodable("row repairs do not agree on one burst");
  return found.front();
}

}  // namespace burst
