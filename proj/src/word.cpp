#include "altperm/word.hpp"

#include <algorithm>
#include <array>

#include "altperm/errors.hpp"

namespace altperm {

namespace {

// Ascending 1-based positions of each letter.
std::array<std::vector<int>, 3> positions(const Word& w) {
  std::array<std::vector<int>, 3> out;
  for (int i = 1; i <= w.size(); ++i) out[static_cast<std::size_t>(w.at(i) - 1)].push_back(i);
  return out;
}

}  // namespace

Word::Word(std::vector<int> letters) : letters_(std::move(letters)) {
  for (int x : letters_) {
    if (x < 1 || x > 3) throw DomainError("word letter " + std::to_string(x) + " outside {1,2,3}");
  }
}

WordType type_of(const Word& w) {
  WordType t;
  for (int x : w.letters()) {
    if (x == 1) ++t.c1;
    else if (x == 2) ++t.c2;
    else ++t.c3;
  }
  return t;
}

int alpha(const Word& w) {
  const auto& l = w.letters();
  return static_cast<int>(std::find(l.begin(), l.end(), 3) - l.begin());
}

int beta(const Word& w) {
  const auto& l = w.letters();
  return static_cast<int>(std::find(l.rbegin(), l.rend(), 1) - l.rbegin());
}

StatSet stat_B(const Word& w) {
  StatSet out{0};
  const int bound = std::min(alpha(w) - 2, w.size() - 1);
  for (int k = 1; k <= bound; ++k) {
    if (w.at(k) == 1 && w.at(k + 1) == 2) out.insert(k);
  }
  return out;
}

bool is_yamanouchi(const Word& w) {
  std::array<int, 3> c{0, 0, 0};
  for (int x : w.letters()) {
    ++c[static_cast<std::size_t>(x - 1)];
    if (c[0] < c[1] || c[1] < c[2]) return false;
  }
  return true;
}

bool is_skew_yamanouchi(const Word& w) {
  const WordType t = type_of(w);
  const int n = t.c2;
  if (n < 1 || t.c1 != n - 1 || t.c3 != n + 1) return false;
  const auto pos = positions(w);
  const auto& a = pos[0];
  const auto& b = pos[1];
  const auto& c = pos[2];
  auto idx = [](int j) { return static_cast<std::size_t>(j - 1); };
  if (!(b[idx(n)] < c[idx(n)])) return false;
  for (int j = 1; j <= n - 1; ++j) {
    if (!(a[idx(j)] < b[idx(j)] && b[idx(j)] < c[idx(j)])) return false;
  }
  return true;
}

bool is_shifted_yamanouchi(const Word& w) {
  const WordType t = type_of(w);
  const int n = t.c2;
  if (n < 1 || t.c1 != n + 1 || t.c3 != n - 1) return false;
  const auto pos = positions(w);
  const auto& a = pos[0];
  const auto& b = pos[1];
  const auto& c = pos[2];
  auto idx = [](int j) { return static_cast<std::size_t>(j - 1); };
  if (!(a[idx(2)] < b[idx(1)])) return false;
  for (int j = 1; j <= n - 1; ++j) {
    if (!(a[idx(j + 2)] < b[idx(j + 1)] && b[idx(j + 1)] < c[idx(j)])) return false;
  }
  return true;
}

Word reversed_complement(const Word& w) {
  std::vector<int> out(w.letters().rbegin(), w.letters().rend());
  for (int& x : out) x = 4 - x;
  return Word(std::move(out));
}

Word parse_word(std::string_view text) {
  std::vector<int> letters;
  letters.reserve(text.size());
  for (char ch : text) {
    if (ch < '1' || ch > '3') {
      throw ParseError(std::string("word character '") + ch + "' outside {1,2,3}");
    }
    letters.push_back(ch - '0');
  }
  return Word(std::move(letters));
}

std::string to_string(const Word& w) {
  std::string s;
  s.reserve(w.letters().size());
  for (int x : w.letters()) s.push_back(static_cast<char>('0' + x));
  return s;
}

}  // namespace altperm
