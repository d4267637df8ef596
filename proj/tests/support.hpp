#pragma once

// Test-only oracles over plain vectors, plus the lemma checks.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "altperm/bijections.hpp"
#include "altperm/permutation.hpp"
#include "altperm/tableau.hpp"
#include "altperm/word.hpp"

namespace altperm::testing {

inline std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

inline bool naive_alternating(const std::vector<int>& v, bool up_down) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    const bool ascent = (i % 2 == 1) == up_down;
    if (ascent != (v[i - 1] < v[i])) return false;
  }
  return true;
}

// Checks every k-subset of positions through a bitmask.
inline bool naive_contains(const std::vector<int>& v, const std::vector<int>& pat) {
  const std::size_t n = v.size(), k = pat.size();
  if (k > n) return false;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
    std::vector<int> sub;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) sub.push_back(v[i]);
    }
    bool iso = true;
    for (std::size_t a = 0; a < k && iso; ++a) {
      for (std::size_t b = 0; b < k && iso; ++b) iso = (sub[a] < sub[b]) == (pat[a] < pat[b]);
    }
    if (iso) return true;
  }
  return false;
}

inline std::vector<std::vector<int>> naive_class(int n, bool up_down, const std::vector<int>& pat) {
  std::vector<std::vector<int>> out;
  for (auto& v : all_permutations(n)) {
    if (naive_alternating(v, up_down) && !naive_contains(v, pat)) out.push_back(v);
  }
  return out;
}

// Fillings of a (possibly shifted) shape given as row lengths, counted by
// trying every arrangement of the row-index multiset and checking the
// increasing conditions cell by cell.
inline long naive_tableau_count(const std::vector<int>& parts, bool shifted) {
  std::vector<int> letters;
  for (std::size_t r = 0; r < parts.size(); ++r) letters.insert(letters.end(), static_cast<std::size_t>(parts[r]), static_cast<int>(r));
  std::sort(letters.begin(), letters.end());
  long count = 0;
  do {
    std::vector<std::vector<int>> rows(parts.size());
    for (std::size_t i = 0; i < letters.size(); ++i) rows[static_cast<std::size_t>(letters[i])].push_back(static_cast<int>(i) + 1);
    bool ok = true;
    for (std::size_t r = 1; r < rows.size() && ok; ++r) {
      for (std::size_t c = 0; c < rows[r].size() && ok; ++c) {
        // absolute column of (r, c) is c + r when shifted
        const std::size_t above = shifted ? c + 1 : c;
        ok = rows[r - 1][above] < rows[r][c];
      }
    }
    if (ok) ++count;
  } while (std::next_permutation(letters.begin(), letters.end()));
  return count;
}

inline std::vector<Word> all_words(int length) {
  std::vector<Word> out;
  std::vector<int> w(static_cast<std::size_t>(length), 1);
  while (true) {
    out.emplace_back(w);
    int i = length - 1;
    while (i >= 0 && w[static_cast<std::size_t>(i)] == 3) w[static_cast<std::size_t>(i--)] = 1;
    if (i < 0) break;
    ++w[static_cast<std::size_t>(i)];
  }
  return out;
}

inline std::vector<int> sorted_stat(const StatSet& s) { return {s.begin(), s.end()}; }

// Positions r, s with a_j < r < s <= a_{j+1} must have r to the right of s.
inline long observation_failures(int max_len) {
  long failures = 0;
  for (int n = 1; n <= max_len; ++n) {
    for (auto& v : all_permutations(n)) {
      const Permutation p(v);
      auto a = sorted_stat(stat_A(p));
      a.push_back(p.first());
      for (std::size_t j = 0; j + 1 < a.size(); ++j) {
        for (int r = a[j] + 1; r <= a[j + 1]; ++r) {
          for (int s = r + 1; s <= a[j + 1]; ++s) {
            if (!(p.position_of(r) > p.position_of(s))) ++failures;
          }
        }
      }
    }
  }
  return failures;
}

// The index j with a_j + 1 <= b <= a_{j+1}, or -1.
inline int bracket_of(const std::vector<int>& a_ext, int b) {
  for (std::size_t j = 0; j + 1 < a_ext.size(); ++j) {
    if (a_ext[j] + 1 <= b && b <= a_ext[j + 1]) return static_cast<int>(j);
  }
  return -1;
}

inline bool bracketed(const std::vector<int>& a_ext, int a, int b) {
  for (std::size_t j = 0; j + 1 < a_ext.size(); ++j) {
    if (a_ext[j + 1] + 2 >= a && a > b && b >= a_ext[j] + 1) return true;
  }
  return false;
}

// Every (a,b) extending a DU(4123) permutation inside the class is bracketed.
inline long lemma_extension_necessary_failures(int max_len) {
  const Permutation& pat = pattern_4123();
  long failures = 0;
  for (int n = 1; n <= max_len; ++n) {
    for (const auto& p : enumerate_avoiders(n, Alternation::DownUp, pat)) {
      auto a_ext = sorted_stat(stat_A(p));
      a_ext.push_back(p.first());
      for (int a = 2; a <= n + 2; ++a) {
        for (int b = 1; b < a; ++b) {
          const Permutation u = prepend_pair(p, a, b);
          if (!is_member(u, Alternation::DownUp, pat)) continue;
          if (!(b <= p.first() && bracketed(a_ext, a, b))) ++failures;
        }
      }
    }
  }
  return failures;
}

// Every bracketed (a,b) with b <= first entry stays in DU(4123) and the new
// stat_A follows cases (i)/(ii).
inline long lemma_extension_sufficient_failures(int max_len) {
  const Permutation& pat = pattern_4123();
  long failures = 0;
  for (int n = 1; n <= max_len; ++n) {
    for (const auto& p : enumerate_avoiders(n, Alternation::DownUp, pat)) {
      auto a_ext = sorted_stat(stat_A(p));
      a_ext.push_back(p.first());
      for (int a = 2; a <= n + 2; ++a) {
        for (int b = 1; b < a && b <= p.first(); ++b) {
          if (!bracketed(a_ext, a, b)) continue;
          const Permutation u = prepend_pair(p, a, b);
          if (!is_member(u, Alternation::DownUp, pat)) {
            ++failures;
            continue;
          }
          const int j = bracket_of(a_ext, b);
          const bool drop_aj = b == a_ext[static_cast<std::size_t>(j)] + 1 && j >= 1;
          StatSet expected(a_ext.begin(), a_ext.begin() + (drop_aj ? j : j + 1));
          if (a > b + 1) expected.insert(b);
          if (stat_A(u) != expected) ++failures;
        }
      }
    }
  }
  return failures;
}

inline long lemma_up_down_prefix_failures(int max_len) {
  const Permutation& pat = pattern_4123();
  long failures = 0;
  for (int n = 1; n <= max_len; ++n) {
    for (const auto& p : enumerate_avoiders(n, Alternation::DownUp, pat)) {
      for (int a = 1; a <= p.first(); ++a) {
        if (!is_member(prepend_one(p, a), Alternation::UpDown, pat)) ++failures;
      }
    }
  }
  return failures;
}

}  // namespace altperm::testing
