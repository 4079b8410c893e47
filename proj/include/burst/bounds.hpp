#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "burst/seqcore.hpp"

namespace burst {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt big_pow(unsigned base, std::size_t exp) { return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exp)); }

inline BigInt binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  BigInt out = 1;
  for (std::size_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

inline BigInt big_factorial(std::size_t n) {
  BigInt out = 1;
  for (std::size_t i = 2; i <= n; ++i) out *= i;
  return out;
}

inline BigInt floor_of(const Rational& r) {
  return boost::multiprecision::numerator(r) / boost::multiprecision::denominator(r);
}

struct BoundReport {
  std::size_t n = 0;
  unsigned q = 2;
  std::size_t t = 1;
  Rational value;
  BigInt floor;
  std::string formula;
};

// Number of u in Sigma_q^n with |D_t(u)| = i.
inline BigInt ball_count(std::size_t n, std::size_t t, std::size_t i, unsigned q) {
  require(q >= 2, "alphabet size must be at least 2");
  require(t >= 1 && n >= t && n % t == 0, "ball_count needs t | n");
  require(i >= 1 && i <= n - t + 1, "ball size must lie in [1, n - t + 1]");
  return big_pow(q, t) * big_pow(q - 1, i - 1) * binomial(n - t, i - 1);
}

// (q^(n-t+1) - q^t) / ((q-1)(n-2t+1)).
inline BoundReport lp_bound(std::size_t n, std::size_t t, unsigned q) {
  require(q >= 2, "alphabet size must be at least 2");
  require(t >= 1 && n > t && n % t == 0, "lp_bound needs n > t and t | n");
  const Rational value(big_pow(q, n - t + 1) - big_pow(q, t), BigInt(q - 1) * (n - 2 * t + 1));
  return {n, q, t, value, floor_of(value), "(q^(n-t+1)-q^t)/((q-1)(n-2t+1))"};
}

// The same bound as the sum over ball sizes of N(n-t, t, i) / i.
inline Rational lp_bound_direct(std::size_t n, std::size_t t, unsigned q) {
  require(t >= 1 && n > t && n % t == 0, "lp_bound needs n > t and t | n");
  Rational sum = 0;
  for (std::size_t i = 1; i <= n - 2 * t + 1; ++i) sum += Rational(ball_count(n - t, t, i, q), BigInt(i));
  return sum;
}

// n! / (t! (n-t+1)).
inline BoundReport perm_bound(std::size_t n, std::size_t t) {
  require(t >= 1 && n > t, "perm_bound needs n > t >= 1");
  const Rational value(big_factorial(n), big_factorial(t) * (n - t + 1));
  return {n, 0, t, value, floor_of(value), "n!/(t!(n-t+1))"};
}

inline double log2_of(const BigInt& v) {
  require(v > 0, "logarithm of a nonpositive count");
  const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(v));
  if (bits < 60) return std::log2(v.convert_to<double>());
  const BigInt top = v >> (bits - 52);
  return std::log2(top.convert_to<double>()) + (bits - 52);
}

// One row of the redundancy tables: a code family, its burst model and its
// redundancy formula; formula_bits keeps only the explicit terms.
struct TableRow {
  std::string family;
  std::string alphabet;  // "binary", "q-ary" or "permutation"
  std::string burst;     // "<=2", "=t" or "<=t"
  std::string formula;
  std::function<double(double n, double q, double t)> explicit_terms;
  std::vector<std::optional<double>> formula_bits;
  std::vector<std::optional<double>> measured_bits;
};

inline std::vector<TableRow> redundancy_table(const std::vector<std::size_t>& lengths, unsigned q, std::size_t t) {
  std::vector<TableRow> rows = {
      {"levenshtein", "binary", "<=2", "log n + 1", [](double n, double, double) { return std::log2(n) + 1; }, {}, {}},
      {"prior-binary-eq-t", "binary", "=t", "log n + O(log log n)", [](double n, double, double) { return std::log2(n); }, {}, {}},
      {"prior-binary-le-t-a", "binary", "<=t", "(t-1) log n + O(log log n)",
       [](double n, double, double tt) { return (tt - 1) * std::log2(n); }, {}, {}},
      {"prior-binary-le-t-b", "binary", "<=t", "log n + O(log log n)", [](double n, double, double) { return std::log2(n); }, {}, {}},
      {"prior-binary-le-t-c", "binary", "<=t", "4 log n + o(log n)", [](double n, double, double) { return 4 * std::log2(n); }, {}, {}},
      {"prior-qary-eq-t", "q-ary", "=t", "log n + O(log log n + log q)", [](double n, double, double) { return std::log2(n); },
       {}, {}},
      {"prior-perm-eq-t", "permutation", "=t", "2 log n", [](double n, double, double) { return 2 * std::log2(n); }, {}, {}},
      {"prior-perm-le-t", "permutation", "<=t", "2t log n", [](double n, double, double tt) { return 2 * tt * std::log2(n); }, {}, {}},
      {"c2b", "q-ary", "<=2", "log n + O(log q log log n)", [](double n, double, double) { return std::log2(n); }, {}, {}},
      {"ctb", "q-ary", "<=t", "log n + O(log q log log n)", [](double n, double, double) { return std::log2(n); }, {}, {}},
      {"perm", "permutation", "<=t", "log n + O(log log n)", [](double n, double, double) { return std::log2(n); }, {}, {}},
  };
  for (TableRow& row : rows)
    for (std::size_t n : lengths) {
      row.formula_bits.push_back(row.explicit_terms(static_cast<double>(n), q, static_cast<double>(t)));
      row.measured_bits.push_back(std::nullopt);
    }
  // Lower limit on redundancy from the counting bound, where it applies.
  TableRow lp{"lp-bound", "q-ary", "=t", "n log q - log M_t(n)", nullptr, {}, {}};
  for (std::size_t n : lengths) {
    if (n > t && n % t == 0)
      lp.formula_bits.push_back(static_cast<double>(n) * std::log2(q) - log2_of(lp_bound(n, t, q).floor));
    else
      lp.formula_bits.push_back(std::nullopt);
    lp.measured_bits.push_back(std::nullopt);
  }
  rows.push_back(std::move(lp));
  return rows;
}

inline std::string format_bits(const std::optional<double>& v) {
  if (!v) return "";
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(3);
  out << *v;
  return out.str();
}

inline std::string table_csv(const std::vector<TableRow>& rows, const std::vector<std::size_t>& lengths, unsigned q,
                             std::size_t t) {
  std::ostringstream out;
  out << "# schema_version=1 q=" << q << " t=" << t << "\n";
  out << "family,alphabet,burst,formula,n,formula_bits,measured_bits\n";
  for (const TableRow& row : rows)
    for (std::size_t i = 0; i < lengths.size(); ++i)
      out << row.family << ',' << row.alphabet << ',' << row.burst << ",\"" << row.formula << "\"," << lengths[i] << ','
          << format_bits(row.formula_bits[i]) << ',' << format_bits(row.measured_bits[i]) << '\n';
  return out.str();
}

}  // namespace burst
