#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <variant>
#include <vector>

#include "burst/bounds.hpp"
#include "burst/classic.hpp"
#include "burst/perm.hpp"
#include "burst/pll2burst.hpp"
#include "burst/tburst.hpp"

namespace burst {

enum class Family { VT, Tenengolts, Levenshtein, Induced, C2B, Ctb, Perm };

inline constexpr std::array<std::pair<Family, std::string_view>, 7> kFamilyNames{{
    {Family::VT, "vt"},
    {Family::Tenengolts, "tenengolts"},
    {Family::Levenshtein, "levenshtein"},
    {Family::Induced, "induced"},
    {Family::C2B, "c2b"},
    {Family::Ctb, "ctb"},
    {Family::Perm, "perm"},
}};

inline std::string to_string(Family f) {
  for (const auto& [family, name] : kFamilyNames)
    if (family == f) return std::string(name);
  return "unknown";
}

inline Family parse_family(std::string_view name) {
  for (const auto& [family, text] : kFamilyNames)
    if (text == name) return family;
  throw InvalidArgument("unknown code family '" + std::string(name) + "'");
}

inline std::optional<ClassicFamily> classic_family(Family f) {
  switch (f) {
    case Family::VT:
      return ClassicFamily::VT;
    case Family::Tenengolts:
      return ClassicFamily::Tenengolts;
    case Family::Levenshtein:
      return ClassicFamily::Levenshtein;
    case Family::Induced:
      return ClassicFamily::Induced;
    default:
      return std::nullopt;
  }
}

using CodeSpec = std::variant<ClassicParams, C2BParams, CtbParams, PermCodeParams>;

// Oracles are deterministic in (P, span, model); building the larger ones
// takes seconds, so they are shared process-wide.
inline std::shared_ptr<const BlockOracles> shared_block_oracles(std::size_t P, std::size_t span, ErrorModel model) {
  static std::mutex guard;
  static std::map<std::tuple<std::size_t, std::size_t, ErrorModel>, std::shared_ptr<const BlockOracles>> cache;
  std::lock_guard lock(guard);
  auto& slot = cache[{P, span, model}];
  if (!slot) slot = build_block_oracles(P, span, model);
  return slot;
}

// A code given either as an explicit word list or, for the array
// constructions, as one set of binary rows per bit of the alphabet; every
// combination of rows is then a codeword. Permutation codes store their
// entries (values 1..n) and use q = n.
struct Codebook {
  Family family = Family::VT;
  std::size_t n = 0;
  unsigned q = 2;
  std::size_t t = 1;
  std::optional<CodeSpec> spec;
  std::vector<Word> words;
  std::vector<std::vector<Word>> rows;

  bool product() const { return !rows.empty(); }

  BigInt size() const {
    if (!product()) return words.size();
    BigInt out = 1;
    for (const auto& r : rows) out *= r.size();
    return out;
  }

  // log2 of the ambient space size minus log2 of the code size; infinite
  // for an empty code.
  double redundancy_bits() const {
    const BigInt m = size();
    if (m == 0) return std::numeric_limits<double>::infinity();
    const double ambient = family == Family::Perm ? log2_of(big_factorial(n)) : static_cast<double>(n) * std::log2(q);
    return ambient - log2_of(m);
  }

  std::vector<Word> expand(std::uint64_t budget) const {
    if (!product()) return words;
    if (size() > budget)
      throw BudgetExceeded("expanding the product code needs " + size().str() + " words, budget " +
                           std::to_string(budget));
    std::vector<Word> out;
    std::vector<std::size_t> pick(rows.size(), 0);
    if (size() == 0) return out;
    while (true) {
      BinaryMatrix m;
      for (std::size_t r = 0; r < rows.size(); ++r) m.rows.push_back(rows[r][pick[r]]);
      out.push_back(from_matrix(m, 1u << rows.size()));
      std::size_t r = rows.size();
      while (r > 0 && ++pick[r - 1] == rows[r - 1].size()) pick[--r] = 0;
      if (r == 0) break;
    }
    return out;
  }
};

inline std::string format_codeword(const Codebook& book, const Word& u) {
  return book.family == Family::Perm ? format_entries(u) : format_word(u, book.q);
}

inline Word parse_codeword(const Codebook& book, std::string_view text) {
  return book.family == Family::Perm ? parse_entries(text) : parse_word(text, book.q);
}

inline bool spec_member(const CodeSpec& spec, const Word& u) {
  return std::visit(
      [&](const auto& p) -> bool {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, ClassicParams>)
          return member(p, u);
        else if constexpr (std::is_same_v<T, C2BParams>)
          return c2b_member(p, u);
        else if constexpr (std::is_same_v<T, CtbParams>)
          return ctb_member(p, u);
        else
          return u.size() == p.n && pleqt_member(p, Permutation(u));
      },
      spec);
}

// Decodes with the spec's decoder. A window, when given, replaces the
// localization step of the C_tB decoder.
inline Word decode_word(const CodeSpec& spec, const Word& received, std::optional<Interval> window = std::nullopt) {
  if (window) {
    const auto* p = std::get_if<CtbParams>(&spec);
    require(p != nullptr, "an explicit window applies to C_tB codes only");
    validate(*p);
    require(received.size() < p->n && received.size() + p->t >= p->n, "C_tB decoding needs length in [n - t, n)");
    BinaryMatrix rows = to_matrix(received, p->q);
    for (std::size_t r = 0; r < rows.rows.size(); ++r)
      rows.rows[r] = cpb_decode(rows.rows[r], *window, p->rows[r], p->layout(), *p->oracles);
    Word u = from_matrix(rows, 1u << rows.rows.size());
    if (!ctb_member(*p, u)) throw NotDecodable("repair is not a codeword");
    return u;
  }
  return std::visit(
      [&](const auto& p) -> Word {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, ClassicParams>)
          return decode(p, received);
        else if constexpr (std::is_same_v<T, C2BParams>)
          return c2b_decode(received, p);
        else if constexpr (std::is_same_v<T, CtbParams>)
          return ctb_decode(received, p);
        else
          return pleqt_decode(received, p).entries();
      },
      spec);
}

// Errors the family's decoder is built for: an induced deletion (aba -> a)
// for the induced code, otherwise every burst of 1..t deletions.
inline std::vector<Burst> admissible_bursts(Family family, const Word& u, std::size_t t) {
  std::vector<Burst> out;
  if (family == Family::Induced) {
    for (std::size_t s = 2; s + 1 <= u.size(); ++s)
      if (u[s - 2] == u[s] && u[s - 1] != u[s]) out.push_back({s, 2});
    return out;
  }
  for (std::size_t len = 1; len <= t && len <= u.size(); ++len)
    for (std::size_t s = 1; s + len - 1 <= u.size(); ++s) out.push_back({s, len});
  return out;
}

}  // namespace burst
