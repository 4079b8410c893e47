#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "burst/seqcore.hpp"

namespace burst::testing_support {

inline Word bits(std::string_view s) {
  Word w;
  for (char c : s) w.push_back(static_cast<Symbol>(c - '0'));
  return w;
}

// Every word of length n over {0, ..., q-1}, in lexicographic order.
inline std::vector<Word> all_words(std::size_t n, unsigned q) {
  std::vector<Word> out;
  Word w(n, 0);
  while (true) {
    out.push_back(w);
    std::size_t i = n;
    while (i > 0 && w[i - 1] == q - 1) w[--i] = 0;
    if (i == 0) break;
    ++w[i - 1];
  }
  return out;
}

}  // namespace burst::testing_support
