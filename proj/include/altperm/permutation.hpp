#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace altperm {

/// A permutation of {1, ..., n}. Positions and values are 1-based in the
/// public interface; storage is a plain vector.
class Permutation {
 public:
  Permutation() = default;

  /// Throws DomainError unless `values` is a rearrangement of 1..n.
  explicit Permutation(std::vector<int> values);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(values_.size()); }
  bool empty() const { return values_.empty(); }

  /// Value at 1-based position `i`.
  int at(int i) const { return values_.at(static_cast<std::size_t>(i - 1)); }
  int first() const { return at(1); }

  /// 1-based position of value `v`.
  int position_of(int v) const;

  const std::vector<int>& values() const { return values_; }

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> values_;
};

enum class Alternation { UpDown, DownUp };

using StatSet = std::set<int>;

bool is_alternating(const Permutation& p, Alternation cls);

Permutation complement(const Permutation& p);

/// True iff some subsequence of `p` is order-isomorphic to `pattern`.
bool contains_pattern(const Permutation& p, const Permutation& pattern);

/// True iff `seq` (distinct values, not necessarily 1..n) has an occurrence
/// of `pattern` that uses its last element.
bool has_occurrence_ending_last(std::span<const int> seq, std::span<const int> pattern);

/// Alternating and pattern-avoiding.
bool is_member(const Permutation& p, Alternation cls, const Permutation& pattern);

/// {0} together with every k <= p.first() - 2 such that k+1 lies to the right of k.
StatSet stat_A(const Permutation& p);

/// (a,b) -> p: length n+2, starts with a,b, tail order-isomorphic to p.
Permutation prepend_pair(const Permutation& p, int a, int b);

/// a -> p: length n+1, starts with a, tail order-isomorphic to p.
Permutation prepend_one(const Permutation& p, int a);

struct StripOne {
  int first;
  Permutation rest;
};

struct StripTwo {
  int first;
  int second;
  Permutation rest;
};

StripOne strip_first(const Permutation& p);
StripTwo strip_first_two(const Permutation& p);

/// Reduce distinct integers to the order-isomorphic permutation of 1..n.
Permutation standardize(std::span<const int> seq);

inline constexpr int kDefaultPermutationLimit = 12;

/// Visits every length-n member of `cls` avoiding `pattern`, lexicographically.
/// Throws ResourceError when n exceeds `limit`.
void for_each_avoider(int n, Alternation cls, const Permutation& pattern,
                      const std::function<void(const Permutation&)>& visit,
                      int limit = kDefaultPermutationLimit);

std::vector<Permutation> enumerate_avoiders(int n, Alternation cls, const Permutation& pattern,
                                            int limit = kDefaultPermutationLimit);

/// Accepts "6,3,7,5", the compact "6375" and parenthesised multi-digit
/// values such as "658397(10)142".
Permutation parse_permutation(std::string_view text);

/// Compact digit string when every value is a single digit, comma form otherwise.
std::string to_string(const Permutation& p);

Alternation parse_alternation(std::string_view text);
std::string_view to_string(Alternation cls);

}  // namespace altperm
