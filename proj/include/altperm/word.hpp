#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "altperm/permutation.hpp"

namespace altperm {

/// A word over the alphabet {1,2,3}; letters are addressed 1-based.
class Word {
 public:
  Word() = default;

  /// Throws DomainError on any letter outside {1,2,3}.
  explicit Word(std::vector<int> letters);

  int size() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }
  int at(int i) const { return letters_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<int>& letters() const { return letters_; }

  auto operator<=>(const Word&) const = default;
  bool operator==(const Word&) const = default;

 private:
  std::vector<int> letters_;
};

struct WordType {
  int c1 = 0;
  int c2 = 0;
  int c3 = 0;

  bool operator==(const WordType&) const = default;
};

WordType type_of(const Word& w);

/// Length of the prefix before the leftmost 3 (|w| if there is none).
int alpha(const Word& w);

/// Length of the suffix after the rightmost 1 (|w| if there is none).
int beta(const Word& w);

/// {0} together with every k <= alpha(w) - 2 with w_k w_{k+1} = 12.
StatSet stat_B(const Word& w);

/// Ballot condition: every prefix has #1 >= #2 >= #3.
bool is_yamanouchi(const Word& w);

/// Type (n-1, n, n+1), n >= 1, with b_n < c_n and a_j < b_j < c_j for j < n,
/// where a, b, c list the positions of the 1s, 2s and 3s.
bool is_skew_yamanouchi(const Word& w);

/// Type (n+1, n, n-1), n >= 1, with a_2 < b_1 and a_{j+2} < b_{j+1} < c_j for j < n.
bool is_shifted_yamanouchi(const Word& w);

/// Letter i becomes 4 - w_{n+1-i}.
Word reversed_complement(const Word& w);

Word parse_word(std::string_view text);
std::string to_string(const Word& w);

}  // namespace altperm
