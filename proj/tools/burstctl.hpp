#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "burst/codebook_io.hpp"
#include "burst/dense.hpp"
#include "burst/pll2burst.hpp"
#include "burst/sieve.hpp"
#include "burst/verify.hpp"
#include "json.hpp"

namespace burstctl {

using burst::Word;

inline constexpr int kOk = 0;
inline constexpr int kFailed = 1;
inline constexpr int kUsage = 2;

struct BallArgs {
  unsigned q = 2;
  std::size_t t = 1;
  std::string seq;
  bool upto = false;
};

struct EncodeArgs {
  std::string scheme;
  std::size_t t = 2;
  std::string in, out;
  std::size_t delta = 0;
};

struct DecodeArgs {
  std::string book, received, window;
};

struct SieveArgs {
  std::string family, out;
  std::size_t n = 0, t = 1;
  unsigned q = 2;
  burst::SieveOptions opt;
  unsigned jobs = 0;
};

struct VerifyArgs {
  std::string book;
  std::size_t t = 1;
  bool sweep = false;
  unsigned jobs = 0;
  std::uint64_t budget = burst::kDefaultBudget;
};

struct BoundsArgs {
  std::size_t n = 0, t = 1;
  unsigned q = 2;
  bool perm = false;
};

struct TableArgs {
  std::string out;
  std::vector<std::size_t> lengths{8, 12, 16};
  unsigned q = 4;
  std::size_t t = 2;
  std::uint64_t budget = std::uint64_t{1} << 20;
};

inline std::string format_set(const std::vector<Word>& words, unsigned q) {
  std::string out = "{";
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i) out += ' ';
    out += burst::format_word(words[i], q);
  }
  return out + "}";
}

inline std::string format_burst(const burst::Burst& b) {
  return std::to_string(b.start) + ":" + std::to_string(b.length);
}

inline burst::Interval parse_window(const std::string& text) {
  const auto colon = text.find(':');
  burst::require(colon != std::string::npos, "window must be LO:HI");
  try {
    return {std::stoul(text.substr(0, colon)), std::stoul(text.substr(colon + 1))};
  } catch (const std::logic_error&) {
    throw burst::InvalidArgument("window must be LO:HI with decimal bounds");
  }
}

inline std::vector<Word> read_words(const std::string& path) {
  std::ifstream in(path);
  burst::require(static_cast<bool>(in), "cannot read " + path);
  std::vector<Word> out;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (!line.empty()) out.push_back(burst::parse_word(line, 2));
  }
  return out;
}

inline void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  burst::require(static_cast<bool>(out), "cannot write " + path);
  out << text;
}

inline int ball(const BallArgs& a, std::ostream& out) {
  const auto words = burst::deletion_ball(burst::parse_word(a.seq, a.q), a.t, a.upto);
  out << format_set(words, a.q) << "\nsize " << words.size() << '\n';
  return kOk;
}

inline int encode(const EncodeArgs& a, std::ostream& out) {
  burst::require(a.scheme == "pll" || a.scheme == "dense", "scheme must be pll or dense");
  burst::require(a.scheme != "pll" || a.t == 2, "the pll scheme is defined for t = 2");
  nlohmann::json doc = {{"schema_version", 1}, {"scheme", a.scheme}, {"t", a.t}};
  nlohmann::json items = nlohmann::json::array();
  for (const Word& x : read_words(a.in)) {
    nlohmann::json item = {{"input", burst::format_word(x, 2)}};
    if (a.scheme == "pll") {
      item["output"] = burst::format_word(burst::pll_encode(x), 2);
    } else {
      burst::DensityParams dp = burst::DensityParams::standard(x.size(), a.t);
      if (a.delta) dp.delta = a.delta;
      item["delta"] = dp.delta;
      item["output"] = burst::format_word(burst::dense_encode(x, dp), 2);
    }
    items.push_back(std::move(item));
  }
  doc["words"] = std::move(items);
  write_text(a.out, doc.dump(1) + "\n");
  out << "encoded " << doc["words"].size() << " words\n";
  return kOk;
}

inline int decode(const DecodeArgs& a, std::ostream& out) {
  const burst::Codebook book = burst::load_codebook(a.book);
  burst::require(book.spec.has_value(), "codebook has no parameters to decode with");
  std::optional<burst::Interval> window;
  if (!a.window.empty()) {
    burst::require(book.family == burst::Family::Ctb, "--window applies to ctb codebooks only");
    window = parse_window(a.window);
  }
  const Word received = burst::parse_codeword(book, a.received);
  out << burst::format_codeword(book, burst::decode_word(*book.spec, received, window)) << '\n';
  return kOk;
}

inline int sieve(const SieveArgs& a, std::ostream& out) {
  const burst::Family family = burst::parse_family(a.family);
  const unsigned q = family == burst::Family::Perm ? static_cast<unsigned>(a.n) : a.q;
  const burst::Codebook book = burst::sieve(family, a.n, q, a.t, a.opt);
  burst::save_codebook(book, a.out);
  out << burst::to_string(family) << " n=" << book.n << " q=" << book.q << " t=" << book.t << " size=" << book.size()
      << " redundancy_bits=" << burst::format_bits(book.redundancy_bits()) << '\n';
  return kOk;
}

inline int verify(const VerifyArgs& a, std::ostream& out) {
  const burst::Codebook book = burst::load_codebook(a.book);
  bool ok = true;
  if (const auto w = burst::confusability_check(book, a.t, a.jobs, a.budget)) {
    out << "confusability: witness " << burst::format_codeword(book, w->u) << " | "
        << burst::format_codeword(book, w->v) << " -> " << burst::format_codeword(book, w->descendant) << '\n';
    ok = false;
  } else {
    out << "confusability: pass (" << book.size() << " codewords, t=" << a.t << ")\n";
  }
  if (a.sweep) {
    const burst::SweepReport r = burst::roundtrip_sweep(book, a.jobs, a.budget);
    if (r.passed()) {
      out << "sweep: pass (" << r.codewords << " codewords, " << r.trials << " trials)\n";
    } else {
      const burst::SweepWitness& w = *r.witness;
      out << "sweep: fail codeword " << burst::format_codeword(book, w.codeword) << " burst " << format_burst(w.burst)
          << " received " << burst::format_codeword(book, w.received) << ": " << w.outcome << '\n';
      ok = false;
    }
  }
  out << (ok ? "pass" : "fail") << '\n';
  return ok ? kOk : kFailed;
}

inline int bounds(const BoundsArgs& a, std::ostream& out) {
  const burst::BoundReport r = a.perm ? burst::perm_bound(a.n, a.t) : burst::lp_bound(a.n, a.t, a.q);
  out << r.floor << "\nvalue " << r.value << "\nformula " << r.formula << '\n';
  return kOk;
}

// Sieved redundancy for the rows that have a construction, where the
// enumeration fits the budget.
inline std::optional<double> measured(const std::string& family, std::size_t n, unsigned q, std::size_t t,
                                      std::uint64_t budget) {
  burst::SieveOptions opt;
  opt.budget = budget;
  try {
    if (family == "levenshtein") return burst::sieve(burst::Family::Levenshtein, n, 2, 2, opt).redundancy_bits();
    if (family == "c2b") return burst::sieve(burst::Family::C2B, n, q, 2, opt).redundancy_bits();
    if (family == "ctb") return burst::sieve(burst::Family::Ctb, n, q, t, opt).redundancy_bits();
    if (family == "perm") return burst::sieve(burst::Family::Perm, n, static_cast<unsigned>(n), t, opt).redundancy_bits();
  } catch (const burst::Error&) {
  }
  return std::nullopt;
}

inline int table(const TableArgs& a, std::ostream& out) {
  auto rows = burst::redundancy_table(a.lengths, a.q, a.t);
  for (burst::TableRow& row : rows)
    for (std::size_t i = 0; i < a.lengths.size(); ++i)
      row.measured_bits[i] = measured(row.family, a.lengths[i], a.q, a.t, a.budget);
  write_text(a.out, burst::table_csv(rows, a.lengths, a.q, a.t));
  out << "wrote " << rows.size() * a.lengths.size() << " rows to " << a.out << '\n';
  return kOk;
}

// Exit status: 0 on success, 1 when a word is not decodable or a check
// finds a witness, 2 on bad flags or arguments.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Burst-deletion-correcting codes: balls, encoders, decoders, sieving and verification", "burstctl"};
  app.require_subcommand(1);

  BallArgs ball_args;
  auto* ball_cmd = app.add_subcommand("ball", "Print the deletion ball of a sequence");
  ball_cmd->add_option("--q", ball_args.q, "Alphabet size")->required()->check(CLI::Range(2u, 65535u));
  ball_cmd->add_option("--t", ball_args.t, "Burst length")->required()->check(CLI::PositiveNumber);
  ball_cmd->add_option("--seq", ball_args.seq, "Sequence (comma-separated, or a 0/1 string when q = 2)")->required();
  ball_cmd->add_flag("--upto", ball_args.upto, "Bursts of length 1..t instead of exactly t");

  EncodeArgs enc_args;
  auto* enc_cmd = app.add_subcommand("encode", "Encode binary words, one per line of the input file");
  enc_cmd->add_option("--scheme", enc_args.scheme, "pll or dense")->required()->check(CLI::IsMember({"pll", "dense"}));
  enc_cmd->add_option("--t", enc_args.t, "Burst length")->required()->check(CLI::PositiveNumber);
  enc_cmd->add_option("--in", enc_args.in, "Input file")->required()->check(CLI::ExistingFile);
  enc_cmd->add_option("--out", enc_args.out, "Output JSON")->required();
  enc_cmd->add_option("--delta", enc_args.delta, "Density window for the dense scheme");

  DecodeArgs dec_args;
  auto* dec_cmd = app.add_subcommand("decode", "Decode a received word with a codebook's decoder");
  dec_cmd->add_option("--book", dec_args.book, "Codebook JSON")->required()->check(CLI::ExistingFile);
  dec_cmd->add_option("--received", dec_args.received, "Received sequence")->required();
  dec_cmd->add_option("--window", dec_args.window, "Known burst window LO:HI (ctb only)");

  SieveArgs sieve_args;
  auto* sieve_cmd = app.add_subcommand("sieve", "Pick the largest syndrome class and write it as a codebook");
  sieve_cmd->add_option("--family", sieve_args.family, "vt|tenengolts|levenshtein|induced|c2b|ctb|perm")
      ->required()
      ->check(CLI::IsMember({"vt", "tenengolts", "levenshtein", "induced", "c2b", "ctb", "perm"}));
  sieve_cmd->add_option("--n", sieve_args.n, "Length")->required()->check(CLI::PositiveNumber);
  sieve_cmd->add_option("--q", sieve_args.q, "Alphabet size (ignored for perm)")->check(CLI::Range(2u, 65535u));
  sieve_cmd->add_option("--t", sieve_args.t, "Burst length")->required()->check(CLI::PositiveNumber);
  sieve_cmd->add_option("--out", sieve_args.out, "Output codebook JSON")->required();
  sieve_cmd->add_option("--delta", sieve_args.opt.delta, "Density window (ctb, perm)");
  sieve_cmd->add_option("--P", sieve_args.opt.P, "Block length (ctb, perm)");
  sieve_cmd->add_option("--budget", sieve_args.opt.budget, "Cap on enumerated elements");
  sieve_cmd->add_option("--jobs", sieve_args.jobs, "Worker threads");

  VerifyArgs ver_args;
  auto* ver_cmd = app.add_subcommand("verify", "Check a codebook for confusable pairs");
  ver_cmd->add_option("--book", ver_args.book, "Codebook JSON")->required()->check(CLI::ExistingFile);
  ver_cmd->add_option("--t", ver_args.t, "Burst length")->required()->check(CLI::PositiveNumber);
  ver_cmd->add_flag("--sweep", ver_args.sweep, "Also decode every codeword under every admissible burst");
  ver_cmd->add_option("--jobs", ver_args.jobs, "Worker threads (default: all cores)");
  ver_cmd->add_option("--budget", ver_args.budget, "Cap on expanded codewords");

  BoundsArgs bnd_args;
  auto* bnd_cmd = app.add_subcommand("bounds", "Upper bound on code size; the first line is its floor");
  bnd_cmd->add_option("--n", bnd_args.n, "Length")->required()->check(CLI::PositiveNumber);
  bnd_cmd->add_option("--q", bnd_args.q, "Alphabet size")->check(CLI::Range(2u, 65535u));
  bnd_cmd->add_option("--t", bnd_args.t, "Burst length")->required()->check(CLI::PositiveNumber);
  bnd_cmd->add_flag("--perm", bnd_args.perm, "Bound for permutation codes");

  TableArgs tab_args;
  auto* tab_cmd = app.add_subcommand("table", "Write the redundancy comparison table as CSV");
  tab_cmd->add_option("--out", tab_args.out, "Output CSV")->required();
  tab_cmd->add_option("--lengths", tab_args.lengths, "Code lengths")->delimiter(',');
  tab_cmd->add_option("--q", tab_args.q, "Alphabet size")->check(CLI::Range(2u, 65535u));
  tab_cmd->add_option("--t", tab_args.t, "Burst length")->check(CLI::PositiveNumber);
  tab_cmd->add_option("--budget", tab_args.budget, "Cap on enumerated elements for the measured columns");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "burstctl: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*ball_cmd) return ball(ball_args, out);
    if (*enc_cmd) return encode(enc_args, out);
    if (*dec_cmd) return decode(dec_args, out);
    if (*sieve_cmd) return sieve(sieve_args, out);
    if (*ver_cmd) return verify(ver_args, out);
    if (*bnd_cmd) return bounds(bnd_args, out);
    return table(tab_args, out);
  } catch (const burst::NotDecodable& e) {
    err << "burstctl: not decodable: " << e.what() << '\n';
    return kFailed;
  } catch (const burst::Error& e) {
    err << "burstctl: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace burstctl
