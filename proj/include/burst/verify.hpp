#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "burst/codebook.hpp"
#include "burst/parallel.hpp"
#include "burst/sieve.hpp"

namespace burst {

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 24;

// Two codewords and a word both reach by one burst of at most t deletions.
struct Witness {
  Word u;
  Word v;
  Word descendant;
};

namespace detail {

inline std::uint64_t pack_row(const Word& x) {
  std::uint64_t v = 0;
  for (Symbol b : x) v = (v << 1) | b;
  return v;
}

// Row words must be binary and short enough to pack.
inline void require_packable(const Codebook& book) {
  require(book.n <= 64, "product codes are limited to n <= 64");
  for (const auto& row : book.rows)
    for (const Word& x : row) require(x.size() == book.n, "row word has the wrong length");
}

inline std::optional<Witness> explicit_confusability(const std::vector<Word>& words, std::size_t t, unsigned jobs) {
  std::vector<std::vector<Word>> balls(words.size());
  parallel_for(words.size(), jobs, [&](std::size_t i) {
    if (!words[i].empty()) balls[i] = deletion_ball(words[i], std::min(t, words[i].size()), true);
  });
  std::vector<std::pair<const Word*, std::size_t>> all;
  for (std::size_t i = 0; i < words.size(); ++i)
    for (const Word& d : balls[i]) all.emplace_back(&d, i);
  std::sort(all.begin(), all.end(), [](const auto& x, const auto& y) {
    return std::tie(*x.first, x.second) < std::tie(*y.first, y.second);
  });
  for (std::size_t k = 1; k < all.size(); ++k)
    if (*all[k].first == *all[k - 1].first && all[k].second != all[k - 1].second)
      return Witness{words[all[k - 1].second], words[all[k].second], *all[k].first};
  return std::nullopt;
}

// A product code has two codewords u != v with u \ b1 = v \ b2 exactly when
// every row offers either one word x with x \ b1 = x \ b2 or two distinct
// words x \ b1 = y \ b2, and at least one row offers the latter.
inline std::optional<Witness> product_confusability(const Codebook& book, std::size_t t) {
  require_packable(book);
  const std::size_t n = book.n;
  const std::size_t R = book.rows.size();
  for (const auto& row : book.rows)
    if (row.empty()) return std::nullopt;
  for (std::size_t len = 1; len <= std::min(t, n); ++len) {
    const std::size_t S = n - len + 1;
    std::vector<std::vector<long long>> same(R, std::vector<long long>(S * S, -1));
    std::vector<std::vector<std::pair<long long, long long>>> apart(
        R, std::vector<std::pair<long long, long long>>(S * S, {-1, -1}));
    for (std::size_t r = 0; r < R; ++r) {
      const auto& row = book.rows[r];
      struct Entry {
        std::uint64_t key;
        std::uint32_t word;
        std::uint32_t start;
        bool operator<(const Entry& o) const { return std::tie(key, word, start) < std::tie(o.key, o.word, o.start); }
      };
      std::vector<Entry> entries;
      entries.reserve(row.size() * S);
      for (std::size_t i = 0; i < row.size(); ++i) {
        const std::uint64_t x = pack_row(row[i]);
        for (std::size_t s = 1; s <= S; ++s) {
          const std::size_t tail = n - (s - 1) - len;  // bits after the burst
          const std::uint64_t low = tail ? x & ((std::uint64_t{1} << tail) - 1) : 0;
          const std::uint64_t high = s > 1 ? x >> (n - (s - 1)) : 0;
          entries.push_back({(high << tail) | low, static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(s - 1)});
        }
      }
      std::sort(entries.begin(), entries.end());
      for (std::size_t lo = 0, hi = 0; lo < entries.size(); lo = hi) {
        while (hi < entries.size() && entries[hi].key == entries[lo].key) ++hi;
        for (std::size_t i = lo; i < hi; ++i)
          for (std::size_t j = lo; j < hi; ++j) {
            const Entry& e = entries[i];
            const Entry& f = entries[j];
            const std::size_t cell = e.start * S + f.start;
            if (e.word == f.word) {
              if (same[r][cell] < 0) same[r][cell] = e.word;
            } else if (apart[r][cell].first < 0) {
              apart[r][cell] = {e.word, f.word};
            }
          }
      }
    }
    for (std::size_t cell = 0; cell < S * S; ++cell) {
      bool covered = true;
      bool distinct = false;
      for (std::size_t r = 0; r < R && covered; ++r) {
        covered = same[r][cell] >= 0 || apart[r][cell].first >= 0;
        distinct = distinct || apart[r][cell].first >= 0;
      }
      if (!covered || !distinct) continue;
      BinaryMatrix mu, mv;
      for (std::size_t r = 0; r < R; ++r) {
        const auto [x, y] = apart[r][cell].first >= 0 ? apart[r][cell] : std::pair{same[r][cell], same[r][cell]};
        mu.rows.push_back(book.rows[r][static_cast<std::size_t>(x)]);
        mv.rows.push_back(book.rows[r][static_cast<std::size_t>(y)]);
      }
      const unsigned q = 1u << R;
      Witness w{from_matrix(mu, q), from_matrix(mv, q), {}};
      w.descendant = apply_burst(w.u, {cell / S + 1, len});
      return w;
    }
  }
  return std::nullopt;
}

inline bool factored(const Codebook& book) { return book.product() && (book.q & (book.q - 1)) == 0; }

}  // namespace detail

// Nothing when the D_{<=t} balls of all codewords are pairwise disjoint;
// otherwise a concrete clashing pair. Listing a word twice is a clash.
inline std::optional<Witness> confusability_check(const Codebook& book, std::size_t t, unsigned jobs = 0,
                                                  std::uint64_t budget = kDefaultBudget) {
  require(t >= 1, "burst length must be at least 1");
  if (detail::factored(book)) return detail::product_confusability(book, t);
  return detail::explicit_confusability(book.expand(budget), t, jobs);
}

struct SweepWitness {
  Word codeword;
  Burst burst;
  Word received;
  std::string outcome;
};

struct SweepReport {
  std::uint64_t codewords = 0;
  std::uint64_t trials = 0;
  std::optional<SweepWitness> witness;

  bool passed() const { return !witness; }
};

using Decoder = std::function<Word(const Word&)>;
using BurstModel = std::function<std::vector<Burst>(const Word&)>;

namespace detail {

inline std::string describe_failure(const Decoder& decoder, const Word& received, const Word& expected,
                                    const std::function<std::string(const Word&)>& show) {
  try {
    const Word got = decoder(received);
    if (got == expected) return "decoded correctly";
    return "decoded to " + show(got);
  } catch (const NotDecodable& e) {
    return std::string("not decodable: ") + e.what();
  } catch (const Error& e) {
    return std::string("rejected: ") + e.what();
  }
}

}  // namespace detail

// Applies every burst of the model to every word and decodes.
inline SweepReport roundtrip_sweep(const std::vector<Word>& words, const Decoder& decoder, const BurstModel& model,
                                   unsigned jobs = 0, const std::function<std::string(const Word&)>& show = {}) {
  const auto render = show ? show : [](const Word& w) { return format_word(w, 1u << 16); };
  std::vector<std::uint64_t> trials(words.size(), 0);
  std::vector<std::optional<SweepWitness>> failures(words.size());
  parallel_for(words.size(), jobs, [&](std::size_t i) {
    for (const Burst& b : model(words[i])) {
      ++trials[i];
      const Word received = apply_burst(words[i], b);
      bool ok = false;
      try {
        ok = decoder(received) == words[i];
      } catch (const Error&) {
      }
      if (!ok && !failures[i])
        failures[i] = SweepWitness{words[i], b, received, detail::describe_failure(decoder, received, words[i], render)};
    }
  });
  SweepReport report;
  report.codewords = words.size();
  for (std::size_t i = 0; i < words.size(); ++i) {
    report.trials += trials[i];
    if (!report.witness && failures[i]) report.witness = failures[i];
  }
  return report;
}

namespace detail {

// Contexts with the same burst and key give the same row decoding, so only
// one of them is checked.
struct RowContext {
  Burst burst;
  Interval window;
  Interval key;
  std::size_t origin;  // row-0 word that produced it
  bool operator<(const RowContext& o) const {
    return std::tie(burst.length, burst.start, key.lo, key.hi) <
           std::tie(o.burst.length, o.burst.start, o.key.lo, o.key.hi);
  }
  bool same(const RowContext& o) const { return !(*this < o) && !(o < *this); }
};

inline Word product_word(const Codebook& book, std::size_t row, std::size_t index, std::size_t origin) {
  BinaryMatrix m;
  for (std::size_t r = 0; r < book.rows.size(); ++r)
    m.rows.push_back(book.rows[r][r == row ? index : r == 0 ? origin : 0]);
  return from_matrix(m, 1u << book.rows.size());
}

inline std::uint64_t bursts_per_word(std::size_t n, std::size_t t) {
  std::uint64_t count = 0;
  for (std::size_t len = 1; len <= std::min(t, n); ++len) count += n - len + 1;
  return count;
}

// Row 0 alone fixes the decoder's window; each remaining row then only has to
// be repaired inside every window row 0 can produce for the same burst.
// `first` checks a row-0 word and returns its window, `key` maps a window to
// what the row decoder actually depends on, and `other` checks one row word
// under one context.
template <class First, class Key, class Other>
SweepReport factored_sweep(const Codebook& book, unsigned jobs, First first, Key key, Other other) {
  const std::size_t n = book.n;
  const Decoder decoder = [&](const Word& r) { return decode_word(*book.spec, r); };
  const auto show = [&](const Word& w) { return format_word(w, book.q); };
  SweepReport report;
  report.codewords = static_cast<std::uint64_t>(book.size());
  report.trials = report.codewords * bursts_per_word(n, book.t);
  for (const auto& row : book.rows)
    if (row.empty()) return report;
  const auto fail = [&](const Word& u, Burst b) {
    const Word received = apply_burst(u, b);
    return SweepWitness{u, b, received, describe_failure(decoder, received, u, show)};
  };

  const auto& zero = book.rows[0];
  std::vector<std::vector<RowContext>> found(zero.size());
  std::vector<std::optional<Burst>> broken(zero.size());
  parallel_for(zero.size(), jobs, [&](std::size_t i) {
    for (std::size_t len = 1; len <= std::min(book.t, n); ++len)
      for (std::size_t s = 1; s + len - 1 <= n; ++s) {
        const Burst b{s, len};
        const std::optional<Interval> window = first(zero[i], b);
        if (!window) {
          broken[i] = b;
          return;
        }
        found[i].push_back({b, *window, key(*window), i});
      }
  });
  std::vector<RowContext> contexts;
  for (std::size_t i = 0; i < zero.size(); ++i) {
    if (broken[i]) {
      report.witness = fail(product_word(book, 0, i, i), *broken[i]);
      return report;
    }
    contexts.insert(contexts.end(), found[i].begin(), found[i].end());
  }
  std::stable_sort(contexts.begin(), contexts.end());
  contexts.erase(std::unique(contexts.begin(), contexts.end(), [](const auto& x, const auto& y) { return x.same(y); }),
                 contexts.end());

  for (std::size_t r = 1; r < book.rows.size(); ++r) {
    const auto& row = book.rows[r];
    std::vector<std::optional<RowContext>> bad(row.size());
    parallel_for(row.size(), jobs, [&](std::size_t j) {
      for (const RowContext& c : contexts)
        if (!other(r, row[j], c)) {
          bad[j] = c;
          return;
        }
    });
    for (std::size_t j = 0; j < row.size(); ++j)
      if (bad[j]) {
        report.witness = fail(product_word(book, r, j, bad[j]->origin), bad[j]->burst);
        return report;
      }
  }
  return report;
}

inline SweepReport ctb_sweep(const Codebook& book, unsigned jobs) {
  const CtbParams& p = std::get<CtbParams>(*book.spec);
  validate(p);
  const BlockLayout layout = p.layout();
  const auto first = [&](const Word& x, Burst b) -> std::optional<Interval> {
    try {
      const Word received = apply_burst(x, b);
      const auto window = ctb_window(received, p);
      if (!window) return std::nullopt;
      if (cpb_decode(received, *window, p.rows[0], layout, *p.oracles) != x) return std::nullopt;
      if (!cloc_member(p.loc(), x)) return std::nullopt;
      return window;
    } catch (const Error&) {
      return std::nullopt;
    }
  };
  // cpb_decode sees the window only through the block it picks.
  const auto key = [&](const Interval& window) {
    const auto choice = cpb_block(window, layout);
    return choice ? choice->block : window;
  };
  const auto other = [&](std::size_t r, const Word& y, const RowContext& c) {
    try {
      return cpb_decode(apply_burst(y, c.burst), c.window, p.rows[r], layout, *p.oracles) == y;
    } catch (const Error&) {
      return false;
    }
  };
  return factored_sweep(book, jobs, first, key, other);
}

// Two rows only: a row-1 candidate survives when one start explains both
// rows, i.e. its start range meets the row-0 range.
inline SweepReport c2b_sweep(const Codebook& book, unsigned jobs) {
  const C2BParams& p = std::get<C2BParams>(*book.spec);
  validate(p);
  const auto first = [&](const Word& x, Burst b) -> std::optional<Interval> {
    try {
      const Word received = apply_burst(x, b);
      if (levenshtein_decode(received, p.a, p.n) != x || longest_period2(x) > p.P()) return std::nullopt;
      const Interval window = locate_from_row1(x, received);
      if (window.length() > p.P()) return std::nullopt;
      return window;
    } catch (const Error&) {
      return std::nullopt;
    }
  };
  const auto other = [&](std::size_t r, const Word& y, const RowContext& c) {
    try {
      const Word received = apply_burst(y, c.burst);
      std::size_t hits = 0;
      bool exact = false;
      for (const Word& cand : detail::pbounded_candidates(received, row_params(p, r), c.window.lo, c.window.hi)) {
        Interval starts;
        if (!burst_starts(cand, received, starts)) continue;
        if (starts.hi < c.window.lo || c.window.hi < starts.lo) continue;
        ++hits;
        exact = exact || cand == y;
      }
      return hits == 1 && exact;
    } catch (const Error&) {
      return false;
    }
  };
  return factored_sweep(book, jobs, first, [](const Interval& window) { return window; }, other);
}

}  // namespace detail

// Every admissible burst of every codeword, decoded with the book's spec.
// Product codes are checked row by row where the decoder factors that way.
inline SweepReport roundtrip_sweep(const Codebook& book, unsigned jobs = 0, std::uint64_t budget = kDefaultBudget) {
  if (book.size() == 0) return {};
  require(book.spec.has_value(), "a round-trip sweep needs the code parameters");
  if (detail::factored(book)) {
    if (book.family == Family::Ctb) return detail::ctb_sweep(book, jobs);
    if (book.family == Family::C2B && book.rows.size() <= 2) return detail::c2b_sweep(book, jobs);
  }
  const CodeSpec& spec = *book.spec;
  const Decoder decoder = [&spec](const Word& r) { return decode_word(spec, r); };
  const BurstModel model = [&book](const Word& u) { return admissible_bursts(book.family, u, book.t); };
  return roundtrip_sweep(book.expand(budget), decoder, model, jobs,
                         [&book](const Word& w) { return format_codeword(book, w); });
}

struct MaxCodeOptions {
  bool upto = false;  // confusable under bursts of at most t instead of exactly t
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t node_limit = 0;  // 0 means unlimited
};

struct MaxCodeResult {
  std::size_t size = 0;
  std::vector<Word> code;
  std::uint64_t nodes = 0;
};

namespace detail {

class Bits {
 public:
  explicit Bits(std::size_t n = 0) : w_((n + 63) / 64, 0) {}
  void set(std::size_t i) { w_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { w_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool test(std::size_t i) const { return (w_[i / 64] >> (i % 64)) & 1; }
  bool any() const {
    return std::any_of(w_.begin(), w_.end(), [](std::uint64_t v) { return v != 0; });
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (std::uint64_t v : w_) c += static_cast<std::size_t>(__builtin_popcountll(v));
    return c;
  }
  bool meets(const Bits& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }
  std::size_t count_and(const Bits& o) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < w_.size(); ++i) c += static_cast<std::size_t>(__builtin_popcountll(w_[i] & o.w_[i]));
    return c;
  }
  void unite(const Bits& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
  }
  void subtract(const Bits& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
  }
  template <class F>
  void each_and(const Bits& o, F f) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      for (std::uint64_t v = w_[i] & o.w_[i]; v; v &= v - 1) f(i * 64 + static_cast<std::size_t>(__builtin_ctzll(v)));
  }

 private:
  std::vector<std::uint64_t> w_;
};

// Maximum independent set of the confusability graph. Every pair sharing a
// descendant is an edge, so the parents of one descendant form a clique and
// these cliques cover the graph. Branching picks the live descendant with
// the fewest live parents: take one of them, or none. The bound packs the
// smallest balls into the descendants still reachable from live vertices.
class CodeSearch {
 public:
  CodeSearch(std::vector<Word> vertices, const std::function<std::vector<Word>(const Word&)>& ball,
             std::uint64_t node_limit)
      : vertices_(std::move(vertices)), limit_(node_limit) {
    std::vector<std::pair<Word, std::size_t>> pairs;
    for (std::size_t v = 0; v < vertices_.size(); ++v)
      for (Word& d : ball(vertices_[v])) pairs.emplace_back(std::move(d), v);
    std::sort(pairs.begin(), pairs.end());
    const std::size_t V = vertices_.size();
    ball_size_.assign(V, 0);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (k == 0 || pairs[k].first != pairs[k - 1].first) parents_.emplace_back(V);
      parents_.back().set(pairs[k].second);
      ++ball_size_[pairs[k].second];
    }
    closed_.assign(V, Bits(V));
    for (const Bits& clique : parents_)
      clique.each_and(clique, [&](std::size_t v) { closed_[v].unite(clique); });
    max_ball_ = ball_size_.empty() ? 0 : *std::max_element(ball_size_.begin(), ball_size_.end());
  }

  // With `fix_first`, vertex 0 is put in the code up front, which loses
  // nothing when the graph is vertex-transitive. A nonzero `target` stops
  // at the first code of that size and prunes everything that cannot reach
  // it.
  MaxCodeResult run(bool fix_first, std::size_t target = 0) {
    target_ = target;
    Bits live(vertices_.size());
    for (std::size_t v = 0; v < vertices_.size(); ++v) live.set(v);
    std::vector<std::size_t> chosen;
    if (fix_first && !vertices_.empty()) {
      chosen.push_back(0);
      live.subtract(closed_[0]);
    }
    try {
      search(live, chosen);
    } catch (const BudgetExceeded& e) {
      throw BudgetExceeded(std::string(e.what()) + "; best code found has " + std::to_string(best_.size()) + " words");
    }
    MaxCodeResult out;
    out.size = best_.size();
    for (std::size_t v : best_) out.code.push_back(vertices_[v]);
    std::sort(out.code.begin(), out.code.end());
    out.nodes = nodes_;
    return out;
  }

 private:
  std::size_t bound(const Bits& live) const {
    std::size_t reachable = 0;
    for (const Bits& clique : parents_) reachable += clique.meets(live);
    std::vector<std::size_t> histogram(max_ball_ + 1, 0);
    live.each_and(live, [&](std::size_t v) { ++histogram[ball_size_[v]]; });
    std::size_t k = 0;
    for (std::size_t s = 0; s <= max_ball_; ++s) {
      if (s == 0) {
        k += histogram[0];
        continue;
      }
      const std::size_t take = std::min(histogram[s], reachable / s);
      k += take;
      reachable -= take * s;
      if (take < histogram[s]) break;
    }
    return k;
  }

  void search(Bits live, std::vector<std::size_t>& chosen) {
    if (limit_ && nodes_ >= limit_)
      throw BudgetExceeded("exact search exceeded " + std::to_string(limit_) + " nodes");
    ++nodes_;
    if (chosen.size() > best_.size()) best_ = chosen;
    if (done() || !live.any()) return;
    const std::size_t floor = target_ ? std::max(best_.size(), target_ - 1) : best_.size();
    if (chosen.size() + bound(live) <= floor) return;
    std::size_t pick = parents_.size();
    std::size_t fewest = 0;
    for (std::size_t d = 0; d < parents_.size(); ++d) {
      const std::size_t c = parents_[d].count_and(live);
      if (c > 0 && (pick == parents_.size() || c < fewest)) {
        pick = d;
        fewest = c;
      }
    }
    if (pick == parents_.size()) {
      // Live vertices without descendants are never confusable.
      const std::size_t extra = live.count();
      if (chosen.size() + extra > best_.size()) {
        best_ = chosen;
        live.each_and(live, [&](std::size_t v) { best_.push_back(v); });
      }
      return;
    }
    std::vector<std::size_t> options;
    parents_[pick].each_and(live, [&](std::size_t v) { options.push_back(v); });
    for (std::size_t v : options) {
      if (done()) return;
      Bits next = live;
      next.subtract(closed_[v]);
      chosen.push_back(v);
      search(next, chosen);
      chosen.pop_back();
      live.reset(v);
    }
    if (!done()) search(live, chosen);
  }

  bool done() const { return target_ && best_.size() >= target_; }

  std::vector<Word> vertices_;
  std::vector<Bits> parents_;  // one clique per descendant
  std::vector<Bits> closed_;   // closed neighbourhoods
  std::vector<std::size_t> ball_size_;
  std::size_t max_ball_ = 0;
  std::uint64_t limit_ = 0;
  std::uint64_t nodes_ = 0;
  std::size_t target_ = 0;
  std::vector<std::size_t> best_;
};

inline std::vector<Word> ball_for(const Word& u, std::size_t t, bool upto) {
  if (t > u.size()) return {};
  return deletion_ball(u, t, upto);
}

}  // namespace detail

namespace detail {

inline CodeSearch sequence_search(std::size_t n, unsigned q, std::size_t t, const MaxCodeOptions& opt) {
  require(q >= 2 && t >= 1 && n >= 1, "exact code search needs q >= 2 and n, t >= 1");
  require_budget(big_pow(q, n), opt.budget, "exact code search");
  return CodeSearch(every_word(n, q), [&](const Word& u) { return ball_for(u, t, opt.upto); }, opt.node_limit);
}

// Relabelling values maps codes to codes and acts transitively on S_n, so
// the identity can be fixed as the first codeword.
inline CodeSearch perm_search(std::size_t n, std::size_t t, const MaxCodeOptions& opt) {
  require(n >= 1 && t >= 1 && n <= kMaxRankLength, "exact permutation code search needs 1 <= n <= 20 and t >= 1");
  require_budget(big_factorial(n), opt.budget, "exact permutation code search");
  std::vector<Word> perms;
  Word entries(n);
  for (std::size_t i = 0; i < n; ++i) entries[i] = static_cast<Symbol>(i + 1);
  do perms.push_back(entries);
  while (std::next_permutation(entries.begin(), entries.end()));
  return CodeSearch(std::move(perms), [&](const Word& u) { return ball_for(u, t, opt.upto); }, opt.node_limit);
}

inline std::optional<std::vector<Word>> found(const MaxCodeResult& r, std::size_t size) {
  if (r.size < size) return std::nullopt;
  return r.code;
}

}  // namespace detail

// Largest q-ary code of length n correcting one burst of exactly t
// deletions (or of at most t with opt.upto).
inline MaxCodeResult max_code_exact(std::size_t n, unsigned q, std::size_t t, const MaxCodeOptions& opt = {}) {
  return detail::sequence_search(n, q, t, opt).run(false);
}

// The same over the permutations of 1..n.
inline MaxCodeResult max_perm_code_exact(std::size_t n, std::size_t t, const MaxCodeOptions& opt = {}) {
  return detail::perm_search(n, t, opt).run(true);
}

// A code with `size` words if one exists; nothing after an exhaustive search
// otherwise.
inline std::optional<std::vector<Word>> code_of_size(std::size_t n, unsigned q, std::size_t t, std::size_t size,
                                                     const MaxCodeOptions& opt = {}) {
  if (size == 0) return std::vector<Word>{};
  return detail::found(detail::sequence_search(n, q, t, opt).run(false, size), size);
}

inline std::optional<std::vector<Word>> perm_code_of_size(std::size_t n, std::size_t t, std::size_t size,
                                                          const MaxCodeOptions& opt = {}) {
  if (size == 0) return std::vector<Word>{};
  return detail::found(detail::perm_search(n, t, opt).run(true, size), size);
}

}  // namespace burst
