#include "altperm/bijections.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "altperm/errors.hpp"

namespace altperm {

namespace {

void require(bool ok, const char* map, const std::string& what) {
  if (!ok) throw DomainError(std::string(map) + ": " + what);
}

void require_domain(const Permutation& p, Alternation cls, bool even, int min_len, const char* map) {
  require(p.size() >= min_len, map, "permutation shorter than " + std::to_string(min_len));
  require((p.size() % 2 == 0) == even, map, even ? "length is not even" : "length is not odd");
  require(is_alternating(p, cls), map,
          cls == Alternation::DownUp ? "permutation is not down-up alternating"
                                     : "permutation is not up-down alternating");
  require(!contains_pattern(p, pattern_4123()), map, "permutation contains the pattern 4123");
}

struct Frame {
  int a;
  int b;
};

// w = v_1..v_{b-1} 12 v_b..v_{a-2} 3 v_{a-1}..; with a = b+1 this inserts the
// block 123 before v_b.
std::vector<int> grow(const std::vector<int>& v, int a, int b) {
  std::vector<int> w;
  w.reserve(v.size() + 3);
  const auto bi = static_cast<std::ptrdiff_t>(b - 1);
  const auto ai = static_cast<std::ptrdiff_t>(a - 1);
  w.insert(w.end(), v.begin(), v.begin() + bi);
  w.push_back(1);
  w.push_back(2);
  w.insert(w.end(), v.begin() + bi, v.begin() + ai - 1);
  w.push_back(3);
  w.insert(w.end(), v.begin() + ai - 1, v.end());
  return w;
}

// Strips leading pairs down to the base permutation, then rebuilds the word
// from `base_word` outward.
Word build_word(const Permutation& p, const std::vector<int>& base_word) {
  std::vector<Frame> frames;
  Permutation cur = p;
  while (cur.size() > 2) {
    auto [a, b, rest] = strip_first_two(cur);
    frames.push_back({a, b});
    cur = std::move(rest);
  }
  std::vector<int> w = base_word;
  for (auto it = frames.rbegin(); it != frames.rend(); ++it) w = grow(w, it->a, it->b);
  return Word(std::move(w));
}

struct Unwound {
  Frame frame;
  Word rest;
};

Unwound unwind(const Word& w) {
  const int a = alpha(w);
  int b = 0;
  if (a + 2 <= w.size() && w.at(a + 2) == 3) {
    b = *stat_B(w).rbegin();
  } else {
    for (int q = std::min(a - 1, w.size() - 1); q >= 1; --q) {
      if (w.at(q) == 1 && w.at(q + 1) == 2) {
        b = q;
        break;
      }
    }
  }
  if (b <= 0) throw std::logic_error("unwind: no removable 12 factor in " + to_string(w));
  std::vector<int> v;
  v.reserve(w.letters().size() - 3);
  for (int i = 1; i <= w.size(); ++i) {
    if (i != b && i != b + 1 && i != a + 1) v.push_back(w.at(i));
  }
  return {{a, b}, Word(std::move(v))};
}

Permutation unwind_word(const Word& w, const Word& base_word, const Permutation& base_perm) {
  std::vector<Frame> frames;
  Word cur = w;
  while (cur.size() > base_word.size()) {
    auto [frame, rest] = unwind(cur);
    frames.push_back(frame);
    cur = std::move(rest);
  }
  if (cur != base_word) throw std::logic_error("unwind reached " + to_string(cur) + " instead of the base word");
  Permutation p = base_perm;
  for (auto it = frames.rbegin(); it != frames.rend(); ++it) p = prepend_pair(p, it->a, it->b);
  return p;
}

const Word& phi_base() {
  static const Word w({1, 2, 3});
  return w;
}

const Word& psi_base() {
  static const Word w({2, 3, 3});
  return w;
}

std::vector<std::vector<int>> rows_of(const Tableau& t) {
  auto rows = t.rows();
  rows.resize(3);
  return rows;
}

// Removes `removed`, shifts entries >= `inserted` up by one, appends
// `inserted` to row 1. Used by the forward maps on a 3-row tableau.
std::vector<std::vector<int>> swap_corner_forward(std::vector<std::vector<int>> rows, int removed, int inserted,
                                                  const char* map) {
  if (rows[2].empty() || rows[2].back() != removed) {
    throw std::logic_error(std::string(map) + ": row 3 does not end with " + std::to_string(removed));
  }
  rows[2].pop_back();
  for (auto& row : rows) {
    for (int& v : row) {
      if (v >= inserted) ++v;
    }
  }
  rows[0].push_back(inserted);
  return rows;
}

// Removes the last entry `e` of row 1, shifts entries > e down by one,
// appends `appended` to row 3.
std::vector<std::vector<int>> swap_corner_backward(std::vector<std::vector<int>> rows, int appended) {
  const int e = rows[0].back();
  rows[0].pop_back();
  for (auto& row : rows) {
    for (int& v : row) {
      if (v > e) --v;
    }
  }
  rows[2].push_back(appended);
  return rows;
}

int third_of_cells(const Tableau& t, const char* map) {
  require(t.cells() % 3 == 0 && t.cells() > 0, map, "cell count is not a positive multiple of 3");
  return t.cells() / 3;
}

}  // namespace

const Permutation& pattern_4123() {
  static const Permutation p({4, 1, 2, 3});
  return p;
}

Word phi(const Permutation& p) {
  require_domain(p, Alternation::DownUp, true, 2, "phi");
  return build_word(p, phi_base().letters());
}

Permutation phi_inverse(const Word& w) {
  const WordType t = type_of(w);
  require(t.c1 >= 1 && t.c1 == t.c2 && t.c2 == t.c3, "phi_inverse", "word type is not (n,n,n) with n >= 1");
  require(is_yamanouchi(w), "phi_inverse", "word is not Yamanouchi");
  return unwind_word(w, phi_base(), Permutation({2, 1}));
}

Word psi(const Permutation& p) {
  require_domain(p, Alternation::DownUp, false, 1, "psi");
  return build_word(p, psi_base().letters());
}

Permutation psi_inverse(const Word& w) {
  require(is_skew_yamanouchi(w), "psi_inverse", "word is not a skew Yamanouchi word of type (n-1,n,n+1)");
  return unwind_word(w, psi_base(), Permutation({1}));
}

Tableau phi_bar(const Permutation& p) { return chi_inverse(reversed_complement(phi(p)), ShapeKind::Ordinary); }

Permutation phi_bar_inverse(const Tableau& t) {
  require(!t.shape().shifted(), "phi_bar_inverse", "tableau is shifted");
  const int n = third_of_cells(t, "phi_bar_inverse");
  require(t.shape() == Shape({n, n, n}, ShapeKind::Ordinary), "phi_bar_inverse", "shape is not (n,n,n)");
  require(is_standard(t), "phi_bar_inverse", "tableau is not standard");
  return phi_inverse(reversed_complement(chi(t)));
}

Tableau psi_bar(const Permutation& p) { return chi_inverse(reversed_complement(psi(p)), ShapeKind::Shifted); }

Permutation psi_bar_inverse(const Tableau& t) {
  require(t.shape().shifted(), "psi_bar_inverse", "tableau is not shifted");
  const int n = third_of_cells(t, "psi_bar_inverse");
  require(t.shape() == Shape({n + 1, n, n - 1}, ShapeKind::Shifted), "psi_bar_inverse",
          "shape is not (n+1,n,n-1)");
  require(is_standard(t), "psi_bar_inverse", "tableau is not shifted standard");
  return psi_inverse(reversed_complement(chi(t)));
}

Tableau gamma(const Permutation& p) {
  require_domain(p, Alternation::UpDown, false, 3, "gamma");
  const int n = (p.size() - 1) / 2;
  auto [a, rest] = strip_first(p);
  auto rows = swap_corner_forward(rows_of(phi_bar(rest)), 3 * n, 3 * n + 1 - a, "gamma");
  return Tableau(ShapeKind::Ordinary, std::move(rows));
}

Permutation gamma_inverse(const Tableau& t) {
  require(!t.shape().shifted(), "gamma_inverse", "tableau is shifted");
  const int n = third_of_cells(t, "gamma_inverse");
  require(t.shape() == Shape({n + 1, n, n - 1}, ShapeKind::Ordinary), "gamma_inverse",
          "shape is not (n+1,n,n-1)");
  require(is_standard(t), "gamma_inverse", "tableau is not standard");
  const int a = 3 * n + 1 - t.rows()[0].back();
  const Tableau reduced(ShapeKind::Ordinary, swap_corner_backward(rows_of(t), 3 * n));
  return prepend_one(phi_bar_inverse(reduced), a);
}

Tableau delta(const Permutation& p) {
  require_domain(p, Alternation::UpDown, true, 4, "delta");
  const int n = p.size() / 2;
  auto [a, rest] = strip_first(p);
  auto rows = swap_corner_forward(rows_of(psi_bar(rest)), 3 * n, 3 * n + 1 - a, "delta");
  return Tableau(ShapeKind::Shifted, std::move(rows));
}

Permutation delta_inverse(const Tableau& t) {
  require(t.shape().shifted(), "delta_inverse", "tableau is not shifted");
  const int n = third_of_cells(t, "delta_inverse");
  require(n >= 2, "delta_inverse", "need n >= 2 (at least 6 cells)");
  require(t.shape() == Shape({n + 2, n, n - 2}, ShapeKind::Shifted), "delta_inverse",
          "shape is not (n+2,n,n-2)");
  require(is_standard(t), "delta_inverse", "tableau is not shifted standard");
  const int a = 3 * n + 1 - t.rows()[0].back();
  const Tableau reduced(ShapeKind::Shifted, swap_corner_backward(rows_of(t), 3 * n));
  return prepend_one(psi_bar_inverse(reduced), a);
}

}  // namespace altperm
