#pragma once

#include <optional>
#include <string>

#include "burst/seqcore.hpp"

namespace burst {

enum class ClassicFamily { VT, Tenengolts, Levenshtein, Induced };

// Residues of a VT, Tenengol'ts, Levenshtein or induced-deletion code.
// Unused residues stay zero.
struct ClassicParams {
  ClassicFamily family = ClassicFamily::VT;
  std::size_t n = 0;
  unsigned q = 2;
  long long a = 0;
  long long b = 0;
  long long c = 0;
};

inline Word odd_part(const Word& u) {
  Word out;
  for (std::size_t i = 0; i < u.size(); i += 2) out.push_back(u[i]);
  return out;
}

inline Word even_part(const Word& u) {
  Word out;
  for (std::size_t i = 1; i < u.size(); i += 2) out.push_back(u[i]);
  return out;
}

inline Word interleave(const Word& odd, const Word& even) {
  Word out;
  out.reserve(odd.size() + even.size());
  for (std::size_t i = 0; i < odd.size() || i < even.size(); ++i) {
    if (i < odd.size()) out.push_back(odd[i]);
    if (i < even.size()) out.push_back(even[i]);
  }
  return out;
}

inline long long symbol_sum(const Word& u) {
  long long s = 0;
  for (Symbol v : u) s += v;
  return s;
}

// Sum of (i-1) * phi(u)_i. The zero-based weight is what makes the q-ary code
// single-deletion-correcting; weighting by i admits collisions such as
// (1,6,6,3) and (1,6,3,6).
inline long long tenengolts_syndrome(const Word& u) {
  const Word f = phi(u);
  return vt_syndrome(f) - static_cast<long long>(weight(f));
}

// phi of the odd subsequence interleaved with phi of the even subsequence.
inline Word induced_image(const Word& u) {
  if (u.empty()) return {};
  if (u.size() == 1) return phi(u);
  return interleave(phi(odd_part(u)), phi(even_part(u)));
}

inline void validate(const ClassicParams& p) {
  const auto n = static_cast<long long>(p.n);
  require(p.n >= 1, "code length must be positive");
  switch (p.family) {
    case ClassicFamily::VT:
      require(p.q == 2 && p.a >= 0 && p.a <= n, "VT needs q = 2 and a in [0, n]");
      break;
    case ClassicFamily::Tenengolts:
      require(p.a >= 0 && p.a < n && p.b >= 0 && p.b < p.q, "Tenengol'ts needs a in [0, n) and b in [0, q)");
      break;
    case ClassicFamily::Levenshtein:
      require(p.q == 2 && p.a >= 0 && p.a < 2 * n, "Levenshtein needs q = 2 and a in [0, 2n)");
      break;
    case ClassicFamily::Induced:
      require(p.a >= 0 && p.a < 2 * n && p.b >= 0 && p.b < p.q && p.c >= 0 && p.c < p.q,
              "induced code needs a in [0, 2n) and b, c in [0, q)");
      break;
  }
}

inline bool member(const ClassicParams& p, const Word& u) {
  require_alphabet(u, p.q);
  require(u.size() == p.n, "word length differs from code length");
  const auto n = static_cast<long long>(p.n);
  switch (p.family) {
    case ClassicFamily::VT:
      return mod(vt_syndrome(u), n + 1) == p.a;
    case ClassicFamily::Tenengolts:
      return mod(tenengolts_syndrome(u), n) == p.a && mod(symbol_sum(u), p.q) == p.b;
    case ClassicFamily::Levenshtein:
      return mod(vt_syndrome(psi(u)), 2 * n) == p.a;
    case ClassicFamily::Induced:
      return mod(vt_syndrome(psi(induced_image(u))), 2 * n) == p.a && mod(symbol_sum(odd_part(u)), p.q) == p.b &&
             mod(symbol_sum(even_part(u)), p.q) == p.c;
  }
  return false;
}

namespace detail {

inline Word insert_at(const Word& w, std::size_t pos, std::initializer_list<Symbol> bits) {
  Word out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
  out.insert(out.end(), bits);
  out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(pos), w.end());
  return out;
}

// 0-based index of the k-th one counted from the right (k >= 1).
inline std::optional<std::size_t> kth_one_from_right(const Word& y, std::size_t k) {
  for (std::size_t i = y.size(); i-- > 0;)
    if (y[i] && --k == 0) return i;
  return std::nullopt;
}

// 0-based index of the k-th zero from the left (k >= 1).
inline std::optional<std::size_t> kth_zero_from_left(const Word& y, std::size_t k) {
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!y[i] && --k == 0) return i;
  return std::nullopt;
}

// Undo a single deletion in the derivative y given the VT deficiency delta.
inline std::optional<Word> repair_derivative_one(const Word& yr, long long delta) {
  const auto w = static_cast<long long>(weight(yr));
  if (delta <= w) {
    // A 0 was lost with delta ones to its right.
    if (delta == 0) return insert_at(yr, yr.size(), {0});
    auto one = kth_one_from_right(yr, static_cast<std::size_t>(delta));
    if (!one) return std::nullopt;
    return insert_at(yr, *one, {0});
  }
  if (delta == w + 1) return insert_at(yr, 0, {1});
  // 11 collapsed to a 0 at position p: delta = 2p + 1 + (ones right of p).
  long long ones_right = w;
  for (std::size_t i = 0; i < yr.size(); ++i) {
    if (yr[i]) {
      --ones_right;
      continue;
    }
    const long long p = static_cast<long long>(i) + 1;
    if (2 * p + 1 + ones_right == delta) {
      Word out = yr;
      out[i] = 1;
      out.insert(out.begin() + static_cast<std::ptrdiff_t>(i), 1);
      return out;
    }
  }
  return std::nullopt;
}

// Undo a burst of two deletions in the derivative y.
inline std::optional<Word> repair_derivative_two(const Word& yr, long long delta) {
  const auto w = static_cast<long long>(weight(yr));
  if (delta % 2 == 1) {
    if (delta < 2 * w) {
      // 010 -> 1 with R1 ones to the right of the surviving 1.
      const long long r1 = (delta - 1) / 2;
      auto one = kth_one_from_right(yr, static_cast<std::size_t>(r1 + 1));
      if (!one) return std::nullopt;
      Word out = insert_at(yr, *one + 1, {0});
      return insert_at(out, *one, {0});
    }
    if (delta == 2 * w + 1) return insert_at(yr, 0, {1, 0});
    // 11 deleted right after the L0-th zero.
    const long long l0 = (delta - 2 * w - 3) / 2;
    if (l0 == 0) return insert_at(yr, 0, {1, 1});
    auto zero = kth_zero_from_left(yr, static_cast<std::size_t>(l0));
    if (!zero) return std::nullopt;
    return insert_at(yr, *zero + 1, {1, 1});
  }
  if (delta <= 2 * w) {
    // 00 deleted with R1 ones to its right.
    const long long r1 = delta / 2;
    if (r1 == 0) return insert_at(yr, yr.size(), {0, 0});
    auto one = kth_one_from_right(yr, static_cast<std::size_t>(r1));
    if (!one) return std::nullopt;
    return insert_at(yr, *one, {0, 0});
  }
  if (delta == 2 * w + 2) return insert_at(yr, 0, {0, 1});
  // 101 -> 0 at the (L0+1)-th zero.
  const long long l0 = delta / 2 - w - 2;
  auto zero = kth_zero_from_left(yr, static_cast<std::size_t>(l0 + 1));
  if (!zero) return std::nullopt;
  Word out = yr;
  out[*zero] = 1;
  out.insert(out.begin() + static_cast<std::ptrdiff_t>(*zero) + 1, {0, 1});
  return out;
}

// Every distinct word obtained by inserting `value` into u' whose ascent
// indicator equals `target`.
inline std::vector<Word> reinsert_matching_phi(const Word& shortened, Symbol value, const Word& target) {
  std::vector<Word> found;
  for (std::size_t j = 0; j <= shortened.size(); ++j) {
    Word candidate = shortened;
    candidate.insert(candidate.begin() + static_cast<std::ptrdiff_t>(j), value);
    if (phi(candidate) == target && (found.empty() || found.back() != candidate)) found.push_back(candidate);
  }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

}  // namespace detail

inline Word vt_decode(const Word& received, long long a, std::size_t n) {
  require_binary(received);
  require(n >= 1 && received.size() + 1 == n, "VT decoding needs a word of length n-1");
  const auto modulus = static_cast<long long>(n) + 1;
  const long long deficiency = mod(a - vt_syndrome(received), modulus);
  const auto w = static_cast<long long>(weight(received));
  // Leftmost insertion point: a 0 with `deficiency` ones to its right, or a 1
  // with deficiency - w - 1 zeros to its left.
  const bool insert_zero = deficiency <= w;
  long long ones_right = w;
  long long zeros_left = 0;
  std::size_t pos = 0;
  while (pos < received.size()) {
    if (insert_zero ? ones_right == deficiency : zeros_left == deficiency - w - 1) break;
    ones_right -= received[pos];
    zeros_left += received[pos] == 0;
    ++pos;
  }
  const Word x = detail::insert_at(received, pos, {static_cast<Symbol>(insert_zero ? 0 : 1)});
  if (mod(vt_syndrome(x), modulus) != a || !is_burst_descendant(x, received))
    throw NotDecodable("no VT codeword is consistent with the received word");
  return x;
}

inline Word tenengolts_decode(const Word& received, long long a, long long b, std::size_t n, unsigned q) {
  require_alphabet(received, q);
  require(n >= 1 && received.size() + 1 == n, "Tenengol'ts decoding needs a word of length n-1");
  const auto value = static_cast<Symbol>(mod(b - symbol_sum(received), q));
  std::optional<Word> match;
  for (std::size_t j = 0; j <= received.size(); ++j) {
    Word candidate = received;
    candidate.insert(candidate.begin() + static_cast<std::ptrdiff_t>(j), value);
    if (mod(tenengolts_syndrome(candidate), static_cast<long long>(n)) != a) continue;
    if (match && *match != candidate) throw NotDecodable("Tenengol'ts syndromes admit two codewords");
    match = std::move(candidate);
  }
  if (!match) throw NotDecodable("no Tenengol'ts codeword is consistent with the received word");
  return *match;
}

inline Word levenshtein_decode(const Word& received, long long a, std::size_t n) {
  require_binary(received);
  require(received.size() <= n && received.size() + 2 >= n, "Levenshtein decoding needs length n, n-1 or n-2");
  const auto modulus = 2 * static_cast<long long>(n);
  if (received.size() == n) {
    if (mod(vt_syndrome(psi(received)), modulus) != a) throw NotDecodable("received word is not a codeword");
    return received;
  }
  const Word yr = psi(received);
  const long long delta = mod(a - vt_syndrome(yr), modulus);
  const auto y = received.size() + 1 == n ? detail::repair_derivative_one(yr, delta)
                                          : detail::repair_derivative_two(yr, delta);
  if (!y || y->size() != n) throw NotDecodable("Levenshtein syndrome matches no deletion pattern");
  Word x = psi_inv(*y);
  if (mod(vt_syndrome(*y), modulus) != a || !is_burst_descendant(x, received))
    throw NotDecodable("Levenshtein repair is inconsistent with the received word");
  return x;
}

// Recovers u from u' where a substring aba of u was replaced by a.
inline Word induced_decode(const Word& received, long long a, long long b, long long c, std::size_t n, unsigned q) {
  require_alphabet(received, q);
  require(n >= 3 && received.size() + 2 == n, "induced decoding needs a word of length n-2");
  const auto modulus = 2 * static_cast<long long>(n);
  const Word yr = psi(induced_image(received));
  const long long delta = mod(a - vt_syndrome(yr), modulus);
  // The image changes by one of: 11 deleted, 00 deleted, 010 -> 1, 101 -> 0.
  // Boundary deletions produce the same four patterns, so one dispatch covers
  // every position.
  const auto y = detail::repair_derivative_two(yr, delta);
  if (!y || y->size() != n) throw NotDecodable("induced syndrome matches no deletion pattern");
  const Word x = psi_inv(*y);

  const Word odd_received = odd_part(received);
  const Word even_received = even_part(received);
  const auto odd_value = static_cast<Symbol>(mod(b - symbol_sum(odd_received), q));
  const auto even_value = static_cast<Symbol>(mod(c - symbol_sum(even_received), q));
  const auto odd = detail::reinsert_matching_phi(odd_received, odd_value, odd_part(x));
  const auto even = detail::reinsert_matching_phi(even_received, even_value, even_part(x));

  std::optional<Word> match;
  for (const Word& o : odd)
    for (const Word& e : even) {
      Word u = interleave(o, e);
      if (!is_burst_descendant(u, received)) continue;
      if (match && *match != u) throw NotDecodable("induced syndromes admit two codewords");
      match = std::move(u);
    }
  if (!match || mod(vt_syndrome(*y), modulus) != a) throw NotDecodable("no induced-code word is consistent");
  return *match;
}

inline Word decode(const ClassicParams& p, const Word& received) {
  switch (p.family) {
    case ClassicFamily::VT:
      return vt_decode(received, p.a, p.n);
    case ClassicFamily::Tenengolts:
      return tenengolts_decode(received, p.a, p.b, p.n, p.q);
    case ClassicFamily::Levenshtein:
      return levenshtein_decode(received, p.a, p.n);
    case ClassicFamily::Induced:
      return induced_decode(received, p.a, p.b, p.c, p.n, p.q);
  }
  throw InvalidArgument("unknown classic family");
}

}  // namespace burst
