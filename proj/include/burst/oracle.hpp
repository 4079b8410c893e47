#pragma once

#include <cstdint>
#include <cstring>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "burst/seqcore.hpp"

namespace burst {

enum class ErrorModel : std::uint32_t {
  Burst = 0,          // one burst of at most `span` deletions
  SubstringEdit = 1,  // one substring of at most `span` symbols replaced by at most `span` symbols
};

inline std::string to_string(ErrorModel m) { return m == ErrorModel::Burst ? "burst" : "substring-edit"; }

inline constexpr std::size_t kMaxOracleLength = 20;
inline constexpr std::size_t kMaxEditOracleLength = 12;

// Labels for all binary words of length k, distinct on every pair of words
// that one error of the model can map to a common word. Words are indexed
// MSB first, so numeric order is lexicographic order.
struct SyndromeOracle {
  std::size_t k = 0;
  std::size_t span = 0;
  ErrorModel model = ErrorModel::Burst;
  std::uint32_t label_count = 0;
  std::vector<std::uint32_t> labels;

  std::uint32_t label(std::uint32_t packed) const { return labels[packed]; }
  std::uint32_t label(const Word& block) const;
};

inline std::uint32_t pack_bits(const Word& w) {
  std::uint32_t v = 0;
  for (Symbol b : w) v = (v << 1) | b;
  return v;
}

inline Word unpack_bits(std::uint32_t v, std::size_t k) {
  Word w(k);
  for (std::size_t i = 0; i < k; ++i) w[i] = static_cast<Symbol>((v >> (k - 1 - i)) & 1u);
  return w;
}

inline std::uint32_t SyndromeOracle::label(const Word& block) const {
  require(block.size() == k, "oracle block has the wrong length");
  require_binary(block);
  return labels[pack_bits(block)];
}

namespace detail {

// A word of length len <= 31 keyed together with its length.
inline std::uint64_t keyed(std::uint32_t v, std::size_t len) { return (std::uint64_t{1} << len) | v; }

inline std::uint32_t low_bits(std::uint32_t v, std::size_t count) {
  return count >= 32 ? v : v & ((std::uint32_t{1} << count) - 1);
}

// Replaces symbols [at, at + drop) of the length-len word v by the `add`-bit
// word y.
inline std::uint32_t splice_bits(std::uint32_t v, std::size_t len, std::size_t at, std::size_t drop, std::uint32_t y,
                                 std::size_t add) {
  const std::size_t tail = len - at - drop;
  const std::uint32_t head = v >> (len - at);
  return (((head << add) | y) << tail) | low_bits(v, tail);
}

// Every word reachable from v by one error of the model.
template <class Visit>
void for_each_descendant(std::uint32_t v, std::size_t k, std::size_t span, ErrorModel model, Visit&& visit) {
  if (model == ErrorModel::Burst) {
    for (std::size_t len = 1; len <= std::min(span, k); ++len)
      for (std::size_t at = 0; at + len <= k; ++at) visit(keyed(splice_bits(v, k, at, len, 0, 0), k - len));
    return;
  }
  for (std::size_t drop = 0; drop <= span; ++drop)
    for (std::size_t add = 0; add <= span; ++add)
      for (std::size_t at = 0; at + drop <= k; ++at)
        for (std::uint32_t y = 0; y < (1u << add); ++y) visit(keyed(splice_bits(v, k, at, drop, y, add), k - drop + add));
}

}  // namespace detail

// Greedy coloring of the confusability graph in lexicographic vertex order.
inline SyndromeOracle oracle_build_brute(std::size_t k, std::size_t span, ErrorModel model) {
  require(k >= 1 && span >= 1, "oracle needs k >= 1 and span >= 1");
  require(k <= (model == ErrorModel::Burst ? kMaxOracleLength : kMaxEditOracleLength),
          "oracle block length too large for exhaustive construction");
  const std::uint32_t count = std::uint32_t{1} << k;
  const std::size_t longest = model == ErrorModel::Burst ? k : k + span;
  const std::size_t keys = std::size_t{2} << longest;

  // Buckets of words sharing a descendant, in compressed sparse row form.
  std::vector<std::uint32_t> offset(keys + 1, 0);
  for (std::uint32_t v = 0; v < count; ++v)
    detail::for_each_descendant(v, k, span, model, [&](std::uint64_t z) { ++offset[z + 1]; });
  for (std::size_t z = 0; z < keys; ++z) offset[z + 1] += offset[z];
  std::vector<std::uint32_t> members(offset.back());
  {
    std::vector<std::uint32_t> fill(offset.begin(), offset.end() - 1);
    for (std::uint32_t v = 0; v < count; ++v)
      detail::for_each_descendant(v, k, span, model, [&](std::uint64_t z) { members[fill[z]++] = v; });
  }

  SyndromeOracle out{k, span, model, 0, std::vector<std::uint32_t>(count, 0)};
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  std::fill(out.labels.begin(), out.labels.end(), kUnset);
  std::vector<std::uint32_t> stamp;
  for (std::uint32_t v = 0; v < count; ++v) {
    detail::for_each_descendant(v, k, span, model, [&](std::uint64_t z) {
      for (std::uint32_t i = offset[z]; i < offset[z + 1]; ++i) {
        const std::uint32_t c = out.labels[members[i]];
        if (c != kUnset) stamp[c] = v + 1;
      }
    });
    std::uint32_t c = 0;
    while (c < stamp.size() && stamp[c] == v + 1) ++c;
    if (c == stamp.size()) stamp.push_back(0);
    out.labels[v] = c;
  }
  out.label_count = static_cast<std::uint32_t>(stamp.size());
  return out;
}

// A pair of distinct words with a shared descendant and equal labels.
struct OracleWitness {
  Word first;
  Word second;
};

inline std::optional<OracleWitness> oracle_check(const SyndromeOracle& oracle) {
  std::vector<std::pair<std::uint64_t, std::uint32_t>> edges;
  for (std::uint32_t v = 0; v < (1u << oracle.k); ++v)
    detail::for_each_descendant(v, oracle.k, oracle.span, oracle.model,
                                [&](std::uint64_t z) { edges.emplace_back(z, v); });
  std::sort(edges.begin(), edges.end());
  for (std::size_t i = 0; i < edges.size();) {
    std::size_t j = i;
    while (j < edges.size() && edges[j].first == edges[i].first) ++j;
    for (std::size_t a = i; a < j; ++a)
      for (std::size_t b = a + 1; b < j; ++b)
        if (edges[a].second != edges[b].second && oracle.labels[edges[a].second] == oracle.labels[edges[b].second])
          return OracleWitness{unpack_bits(edges[a].second, oracle.k), unpack_bits(edges[b].second, oracle.k)};
    i = j;
  }
  return std::nullopt;
}

// Every word of length k that one error of the model turns into `received`.
inline std::vector<std::uint32_t> oracle_parents(const Word& received, std::size_t k, std::size_t span,
                                                 ErrorModel model) {
  require_binary(received);
  const std::size_t m = received.size();
  const std::uint32_t z = pack_bits(received);
  std::vector<std::uint32_t> out;
  if (model == ErrorModel::Burst) {
    require(m < k && k - m <= span, "received block length is not reachable by one burst");
    const std::size_t len = k - m;
    for (std::size_t at = 0; at <= m; ++at)
      for (std::uint32_t y = 0; y < (1u << len); ++y) out.push_back(detail::splice_bits(z, m, at, 0, y, len));
  } else {
    for (std::size_t taken = 0; taken <= span && taken <= m; ++taken) {
      if (k + taken < m) continue;
      const std::size_t put = k + taken - m;
      if (put > span) continue;
      for (std::size_t at = 0; at + taken <= m; ++at)
        for (std::uint32_t y = 0; y < (1u << put); ++y) out.push_back(detail::splice_bits(z, m, at, taken, y, put));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace detail {

inline constexpr char kOracleMagic[8] = {'B', 'R', 'S', 'T', 'O', 'R', 'C', 'L'};
inline constexpr std::uint32_t kOracleVersion = 1;

inline void put_u32(std::ostream& out, std::uint32_t v) {
  unsigned char b[4] = {static_cast<unsigned char>(v), static_cast<unsigned char>(v >> 8),
                        static_cast<unsigned char>(v >> 16), static_cast<unsigned char>(v >> 24)};
  out.write(reinterpret_cast<const char*>(b), 4);
}

inline std::uint32_t get_u32(std::istream& in) {
  unsigned char b[4];
  if (!in.read(reinterpret_cast<char*>(b), 4)) throw InvalidArgument("oracle file truncated");
  return b[0] | (b[1] << 8) | (b[2] << 16) | (std::uint32_t{b[3]} << 24);
}

}  // namespace detail

// Header: magic, version, k, span, model, label width in bytes, label count;
// then 2^k little-endian labels.
inline void save_oracle(const SyndromeOracle& oracle, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path + " for writing");
  out.write(detail::kOracleMagic, sizeof detail::kOracleMagic);
  for (std::uint32_t v : {detail::kOracleVersion, static_cast<std::uint32_t>(oracle.k),
                          static_cast<std::uint32_t>(oracle.span), static_cast<std::uint32_t>(oracle.model), 4u,
                          oracle.label_count})
    detail::put_u32(out, v);
  for (std::uint32_t label : oracle.labels) detail::put_u32(out, label);
  if (!out) throw Error("failed writing " + path);
}

inline SyndromeOracle load_oracle(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  char magic[8];
  if (!in.read(magic, 8) || std::memcmp(magic, detail::kOracleMagic, 8) != 0)
    throw InvalidArgument(path + " is not an oracle file");
  if (detail::get_u32(in) != detail::kOracleVersion) throw InvalidArgument("unsupported oracle file version");
  SyndromeOracle oracle;
  oracle.k = detail::get_u32(in);
  oracle.span = detail::get_u32(in);
  const std::uint32_t model = detail::get_u32(in);
  require(model <= 1, "unknown error model in oracle file");
  oracle.model = static_cast<ErrorModel>(model);
  require(detail::get_u32(in) == 4, "unsupported oracle label width");
  oracle.label_count = detail::get_u32(in);
  require(oracle.k >= 1 && oracle.k <= kMaxOracleLength, "oracle block length out of range");
  oracle.labels.resize(std::size_t{1} << oracle.k);
  for (auto& label : oracle.labels) {
    label = detail::get_u32(in);
    require(label < oracle.label_count, "oracle label out of range");
  }
  return oracle;
}

}  // namespace burst
