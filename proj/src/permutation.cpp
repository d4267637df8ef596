#include "altperm/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "altperm/errors.hpp"

namespace altperm {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  const int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : values_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
      throw DomainError("not a permutation of 1.." + std::to_string(n));
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

int Permutation::position_of(int v) const {
  auto it = std::find(values_.begin(), values_.end(), v);
  if (it == values_.end()) throw DomainError("value " + std::to_string(v) + " not present");
  return static_cast<int>(it - values_.begin()) + 1;
}

namespace {

bool step_ok(Alternation cls, std::size_t i, int prev, int cur) {
  // i is the 0-based index of `cur`; i >= 1.
  const bool ascent_expected = (cls == Alternation::UpDown) == (i % 2 == 1);
  return ascent_expected ? prev < cur : prev > cur;
}

bool match_from(std::span<const int> seq, std::span<const int> pattern, std::vector<std::size_t>& idx,
                std::size_t t, std::size_t start) {
  const std::size_t k = pattern.size();
  const std::size_t last = seq.size() - 1;
  if (t == k - 1) return true;
  const int last_val = seq[last];
  const bool below_last = pattern[t] < pattern[k - 1];
  // Need k-1-t more slots before `last`, including this one.
  for (std::size_t pos = start; pos + (k - 1 - t) <= last; ++pos) {
    const int v = seq[pos];
    if ((v < last_val) != below_last) continue;
    bool ok = true;
    for (std::size_t s = 0; s < t && ok; ++s) {
      ok = (seq[idx[s]] < v) == (pattern[s] < pattern[t]);
    }
    if (!ok) continue;
    idx[t] = pos;
    if (match_from(seq, pattern, idx, t + 1, pos + 1)) return true;
  }
  return false;
}

}  // namespace

bool is_alternating(const Permutation& p, Alternation cls) {
  const auto& v = p.values();
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (!step_ok(cls, i, v[i - 1], v[i])) return false;
  }
  return true;
}

Permutation complement(const Permutation& p) {
  std::vector<int> out;
  out.reserve(p.values().size());
  for (int v : p.values()) out.push_back(p.size() + 1 - v);
  return Permutation(std::move(out));
}

bool has_occurrence_ending_last(std::span<const int> seq, std::span<const int> pattern) {
  if (pattern.empty()) return true;
  if (seq.size() < pattern.size()) return false;
  std::vector<std::size_t> idx(pattern.size());
  idx.back() = seq.size() - 1;
  return match_from(seq, pattern, idx, 0, 0);
}

bool contains_pattern(const Permutation& p, const Permutation& pattern) {
  const auto& v = p.values();
  const auto& pat = pattern.values();
  if (pat.empty()) return true;
  if (pat.size() > v.size()) return false;
  std::span<const int> all(v);
  for (std::size_t end = pat.size(); end <= v.size(); ++end) {
    if (has_occurrence_ending_last(all.first(end), pat)) return true;
  }
  return false;
}

bool is_member(const Permutation& p, Alternation cls, const Permutation& pattern) {
  return is_alternating(p, cls) && !contains_pattern(p, pattern);
}

StatSet stat_A(const Permutation& p) {
  if (p.empty()) throw DomainError("stat_A: empty permutation");
  StatSet out{0};
  for (int k = 1; k <= p.first() - 2; ++k) {
    if (p.position_of(k) < p.position_of(k + 1)) out.insert(k);
  }
  return out;
}

Permutation prepend_pair(const Permutation& p, int a, int b) {
  const int n = p.size();
  if (!(1 <= b && b < a && a <= n + 2)) {
    throw DomainError("prepend_pair: need 1 <= b < a <= n+2, got a=" + std::to_string(a) +
                      " b=" + std::to_string(b) + " n=" + std::to_string(n));
  }
  std::vector<int> u{a, b};
  u.reserve(static_cast<std::size_t>(n) + 2);
  for (int v : p.values()) {
    if (v < b) {
      u.push_back(v);
    } else if (v < a - 1) {
      u.push_back(v + 1);
    } else {
      u.push_back(v + 2);
    }
  }
  return Permutation(std::move(u));
}

Permutation prepend_one(const Permutation& p, int a) {
  const int n = p.size();
  if (a < 1 || a > n + 1) {
    throw DomainError("prepend_one: need 1 <= a <= n+1, got a=" + std::to_string(a) +
                      " n=" + std::to_string(n));
  }
  std::vector<int> u{a};
  u.reserve(static_cast<std::size_t>(n) + 1);
  for (int v : p.values()) u.push_back(v >= a ? v + 1 : v);
  return Permutation(std::move(u));
}

Permutation standardize(std::span<const int> seq) {
  std::vector<int> order(seq.begin(), seq.end());
  std::sort(order.begin(), order.end());
  std::vector<int> out;
  out.reserve(seq.size());
  for (int v : seq) {
    out.push_back(static_cast<int>(std::lower_bound(order.begin(), order.end(), v) - order.begin()) + 1);
  }
  return Permutation(std::move(out));
}

StripOne strip_first(const Permutation& p) {
  if (p.empty()) throw DomainError("strip_first: empty permutation");
  const auto& v = p.values();
  return {v.front(), standardize(std::span<const int>(v).subspan(1))};
}

StripTwo strip_first_two(const Permutation& p) {
  if (p.size() < 2) throw DomainError("strip_first_two: permutation shorter than 2");
  const auto& v = p.values();
  return {v[0], v[1], standardize(std::span<const int>(v).subspan(2))};
}

void for_each_avoider(int n, Alternation cls, const Permutation& pattern,
                      const std::function<void(const Permutation&)>& visit, int limit) {
  if (n < 0) throw DomainError("enumerate_avoiders: negative length");
  if (n > limit) {
    throw ResourceError("enumerate_avoiders: length " + std::to_string(n) + " exceeds limit " +
                        std::to_string(limit));
  }
  const auto& pat = pattern.values();
  std::vector<int> prefix;
  prefix.reserve(static_cast<std::size_t>(n));
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);

  std::function<void()> extend = [&]() {
    const std::size_t i = prefix.size();
    if (i == static_cast<std::size_t>(n)) {
      visit(Permutation(prefix));
      return;
    }
    for (int v = 1; v <= n; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      if (i > 0 && !step_ok(cls, i, prefix.back(), v)) continue;
      prefix.push_back(v);
      if (!has_occurrence_ending_last(prefix, pat)) {
        used[static_cast<std::size_t>(v)] = true;
        extend();
        used[static_cast<std::size_t>(v)] = false;
      }
      prefix.pop_back();
    }
  };
  if (n == 0) {
    if (!pat.empty()) visit(Permutation());
    return;
  }
  extend();
}

std::vector<Permutation> enumerate_avoiders(int n, Alternation cls, const Permutation& pattern, int limit) {
  std::vector<Permutation> out;
  for_each_avoider(n, cls, pattern, [&](const Permutation& p) { out.push_back(p); }, limit);
  return out;
}

Permutation parse_permutation(std::string_view text) {
  auto parse_int = [&](std::string_view tok) {
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw ParseError("bad permutation entry '" + std::string(tok) + "'");
    }
    return v;
  };

  std::vector<int> values;
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = text.find(',', start);
      values.push_back(parse_int(text.substr(start, comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  } else {
    for (std::size_t i = 0; i < text.size(); ++i) {
      const char c = text[i];
      if (c == '(') {
        const std::size_t close = text.find(')', i);
        if (close == std::string_view::npos) throw ParseError("unbalanced '(' in permutation");
        values.push_back(parse_int(text.substr(i + 1, close - i - 1)));
        i = close;
      } else if (c >= '0' && c <= '9') {
        values.push_back(c - '0');
      } else {
        throw ParseError(std::string("unexpected character '") + c + "' in permutation");
      }
    }
  }
  try {
    return Permutation(std::move(values));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

std::string to_string(const Permutation& p) {
  const bool compact = p.size() <= 9;
  std::ostringstream os;
  bool first = true;
  for (int v : p.values()) {
    if (!compact && !first) os << ',';
    os << v;
    first = false;
  }
  return os.str();
}

Alternation parse_alternation(std::string_view text) {
  if (text == "ud" || text == "UpDown" || text == "up-down") return Alternation::UpDown;
  if (text == "du" || text == "DownUp" || text == "down-up") return Alternation::DownUp;
  throw ParseError("unknown alternation class '" + std::string(text) + "' (expected ud or du)");
}

std::string_view to_string(Alternation cls) { return cls == Alternation::UpDown ? "ud" : "du"; }

}  // namespace altperm
