#pragma once

#include <optional>
#include <string>
#include <vector>

#include "altperm/permutation.hpp"
#include "altperm/tableau.hpp"

namespace altperm {

/// 2(3n)! / (n!(n+1)!(n+2)!): |UD_{2n}(1234)| and the (n,n,n) tableau count.
BigInt formula_even_1234(int n);

/// 16(3n)! / ((n-1)!(n+1)!(n+3)!): |UD_{2n+1}(1234)|. Requires n >= 1.
BigInt formula_odd_1234(int n);

BigInt brute_count(int n, Alternation cls, const Permutation& pattern, int limit = kDefaultPermutationLimit);

/// One enumeration identity at one n. `agree` holds iff every present value
/// equals `formula`.
struct CountReport {
  std::string label;
  int n = 0;
  BigInt formula;
  std::optional<BigInt> brute;
  std::optional<BigInt> tableau;
  bool agree = false;
};

CountReport make_report(std::string label, int n, BigInt formula, std::optional<BigInt> brute,
                        std::optional<BigInt> tableau);

/// Count identities for n = 1..max_n, sorted by (label, n). Lengths beyond
/// `limit` raise ResourceError.
std::vector<CountReport> verify_theorems(int max_n, int limit = kDefaultPermutationLimit);

/// Round-trip, statistic and codomain checks of all six maps for n = 1..max_n.
/// In each report `formula` is the target tableau count, `brute` the number of
/// domain elements passing every check, `tableau` the number of distinct images
/// that are also produced by exhaustive tableau enumeration.
std::vector<CountReport> verify_bijections(int max_n, int limit = kDefaultPermutationLimit);

/// {"label":..,"n":..,"formula":"..","brute":"..","tableau":"..","agree":..};
/// absent values are null.
std::string to_json_line(const CountReport& r);

}  // namespace altperm
