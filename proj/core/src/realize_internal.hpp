#pragma once

// Word arithmetic shared by the three deciders. The certificate verifier
// deliberately re-implements what it needs instead of including this.

#include <algorithm>
#include <map>
#include <type_traits>

#include "glg/realize.hpp"

namespace glg::detail {

inline AbWord unit_word(int n, int g) {
  AbWord w(static_cast<std::size_t>(n), 0);
  w[g] = 1;
  return w;
}

inline bool word_leq(const AbWord& a, const AbWord& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

inline AbWord word_apply(const AbWord& w, const AbWord& from, const AbWord& to) {
  AbWord r = w;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += to[i] - from[i];
  return r;
}

inline AbWord word_max(const AbWord& a, const AbWord& b) {
  AbWord r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::max(r[i], b[i]);
  return r;
}

// Removes loops: whenever a word repeats, the segment between the two
// occurrences is cut. Certificates stay valid, just shorter.
template <typename Chain>
inline void shorten_chain(Chain& c) {
  bool again = true;
  while (again) {
    again = false;
    std::map<std::decay_t<decltype(c.words[0])>, int> first;
    for (int i = 0; i < static_cast<int>(c.words.size()); ++i) {
      auto [it, inserted] = first.try_emplace(c.words[i], i);
      if (!inserted) {
        int s = it->second;
        c.words.erase(c.words.begin() + s + 1, c.words.begin() + i + 1);
        c.justs.erase(c.justs.begin() + s, c.justs.begin() + i);
        again = true;
        break;
      }
    }
  }
}

}  // namespace glg::detail
