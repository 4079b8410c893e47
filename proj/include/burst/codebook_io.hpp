#pragma once

#include <cmath>
#include <fstream>
#include <string>

#include "burst/codebook.hpp"
#include "json.hpp"

namespace burst {

inline constexpr int kCodebookSchema = 1;

namespace detail {

using nlohmann::json;

inline json sums_json(const std::vector<BlockSums>& rows) {
  json out = json::array();
  for (const BlockSums& s : rows) out.push_back({s.d1, s.e1, s.d2, s.e2});
  return out;
}

inline std::vector<BlockSums> sums_from(const json& j) {
  std::vector<BlockSums> out;
  for (const json& s : j) {
    require(s.is_array() && s.size() == 4, "block sums must be arrays of four residues");
    out.push_back({s[0].get<long long>(), s[1].get<long long>(), s[2].get<long long>(), s[3].get<long long>()});
  }
  return out;
}

inline json params_json(const CodeSpec& spec) {
  return std::visit(
      [](const auto& p) -> json {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, ClassicParams>)
          return {{"a", p.a}, {"b", p.b}, {"c", p.c}};
        else if constexpr (std::is_same_v<T, C2BParams>)
          return {{"a", p.a}, {"c", p.c}, {"d", p.d}};
        else
          return {{"delta", p.delta}, {"P", p.P}, {"c0", p.c0}, {"c1", p.c1}, {"sums", sums_json(p.rows)}};
      },
      spec);
}

inline CodeSpec spec_from(Family family, std::size_t n, unsigned q, std::size_t t, const json& p) {
  if (const auto cf = classic_family(family)) {
    ClassicParams out{*cf, n, q, p.value("a", 0LL), p.value("b", 0LL), p.value("c", 0LL)};
    validate(out);
    return out;
  }
  switch (family) {
    case Family::C2B: {
      C2BParams out{n, q, p.at("a").get<long long>(), p.at("c").get<std::vector<long long>>(),
                    p.at("d").get<std::vector<long long>>()};
      validate(out);
      return out;
    }
    case Family::Ctb: {
      const auto P = p.at("P").get<std::size_t>();
      CtbParams out{n,
                    q,
                    t,
                    p.at("delta").get<std::size_t>(),
                    P,
                    p.at("c0").get<long long>(),
                    p.at("c1").get<long long>(),
                    sums_from(p.at("sums")),
                    nullptr};
      require(2 * P <= kMaxOracleLength, "block length too large for the oracle");
      out.oracles = shared_block_oracles(P, t, ErrorModel::Burst);
      validate(out);
      return out;
    }
    default: {
      const auto P = p.at("P").get<std::size_t>();
      PermCodeParams out{n,
                         t,
                         p.at("delta").get<std::size_t>(),
                         P,
                         p.at("c0").get<long long>(),
                         p.at("c1").get<long long>(),
                         sums_from(p.at("sums")),
                         nullptr};
      require(2 * P <= kMaxEditOracleLength, "block length too large for the oracle");
      out.oracles = shared_block_oracles(P, 2 * t, ErrorModel::SubstringEdit);
      validate(out);
      return out;
    }
  }
}

}  // namespace detail

// { schema_version, spec: {family, n, q, t, params}, words | rows, size,
//   redundancy_bits }. Product codes list their row sets under "rows".
inline nlohmann::json codebook_json(const Codebook& book) {
  using nlohmann::json;
  json spec = {{"family", to_string(book.family)}, {"n", book.n}, {"q", book.q}, {"t", book.t}};
  if (book.spec) spec["params"] = detail::params_json(*book.spec);
  json out = {{"schema_version", kCodebookSchema}, {"spec", spec}};
  if (book.product()) {
    json rows = json::array();
    for (const auto& row : book.rows) {
      json list = json::array();
      for (const Word& x : row) list.push_back(format_word(x, 2));
      rows.push_back(std::move(list));
    }
    out["rows"] = std::move(rows);
  } else {
    json words = json::array();
    for (const Word& u : book.words) words.push_back(format_codeword(book, u));
    out["words"] = std::move(words);
  }
  out["size"] = book.size().str();
  const double r = book.redundancy_bits();
  out["redundancy_bits"] = std::isfinite(r) ? json(r) : json(nullptr);
  return out;
}

inline Codebook codebook_from_json(const nlohmann::json& j) {
  try {
    const int version = j.value("schema_version", kCodebookSchema);
    require(version == kCodebookSchema, "unsupported codebook schema version " + std::to_string(version));
    const auto& spec = j.at("spec");
    Codebook book;
    book.family = parse_family(spec.at("family").get<std::string>());
    book.n = spec.at("n").get<std::size_t>();
    book.q = spec.value("q", book.family == Family::Perm ? static_cast<unsigned>(book.n) : 2u);
    book.t = spec.value("t", std::size_t{1});
    if (spec.contains("params")) book.spec = detail::spec_from(book.family, book.n, book.q, book.t, spec["params"]);
    if (j.contains("rows")) {
      for (const auto& row : j["rows"]) {
        std::vector<Word> words;
        for (const auto& w : row) words.push_back(parse_word(w.get<std::string>(), 2));
        book.rows.push_back(std::move(words));
      }
      require(!book.rows.empty() && (1u << book.rows.size()) == book.q, "row sets do not match the alphabet");
    } else if (j.contains("words")) {
      for (const auto& w : j["words"]) {
        Word u = parse_codeword(book, w.get<std::string>());
        require(u.size() == book.n, "codeword length differs from n");
        book.words.push_back(std::move(u));
      }
    }
    return book;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed codebook: ") + e.what());
  }
}

inline void save_codebook(const Codebook& book, const std::string& path) {
  std::ofstream out(path);
  require(static_cast<bool>(out), "cannot write " + path);
  out << codebook_json(book).dump(1) << '\n';
}

inline Codebook load_codebook(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), "cannot read " + path);
  try {
    return codebook_from_json(nlohmann::json::parse(in));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed codebook: ") + e.what());
  }
}

}  // namespace burst
