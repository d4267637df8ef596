#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "altperm/word.hpp"

namespace altperm {

using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(int n);

enum class ShapeKind { Ordinary, Shifted };

/// An integer partition. Ordinary shapes are weakly decreasing, shifted
/// shapes strictly decreasing. Zero parts are dropped on construction.
class Shape {
 public:
  Shape() = default;

  /// Throws ShapeError on negative parts or the wrong monotonicity.
  Shape(std::vector<int> parts, ShapeKind kind);

  const std::vector<int>& parts() const { return parts_; }
  ShapeKind kind() const { return kind_; }
  bool shifted() const { return kind_ == ShapeKind::Shifted; }
  int rows() const { return static_cast<int>(parts_.size()); }
  int cells() const;

  bool operator==(const Shape&) const = default;

 private:
  std::vector<int> parts_;
  ShapeKind kind_ = ShapeKind::Ordinary;
};

/// A filling of a shape, stored row by row. Cells are addressed as
/// (row, index within row), both 1-based; in a shifted tableau row r starts
/// at absolute column r.
class Tableau {
 public:
  Tableau() = default;

  /// The shape is read off the row lengths.
  Tableau(ShapeKind kind, std::vector<std::vector<int>> rows);

  const Shape& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int cells() const { return shape_.cells(); }
  int entry(int row, int index) const;

  auto operator<=>(const Tableau& other) const {
    if (auto c = shape_.shifted() <=> other.shape_.shifted(); c != 0) return c;
    return rows_ <=> other.rows_;
  }
  bool operator==(const Tableau& other) const {
    return shape_.shifted() == other.shape_.shifted() && rows_ == other.rows_;
  }

 private:
  Shape shape_;
  std::vector<std::vector<int>> rows_;
};

/// Letter j is the row holding entry j. At most three rows.
Word chi(const Tableau& t);

/// Row i receives the positions of letter i. The type vector must be a valid
/// shape of the requested kind; standardness is not checked.
Tableau chi_inverse(const Word& w, ShapeKind kind);

bool is_standard(const Tableau& t);

/// Hook length formula for ordinary shapes.
BigInt count_syt(const Shape& s);

/// N!/(prod l_i!) * prod_{i<j} (l_i - l_j)/(l_i + l_j) for strict shapes.
BigInt count_shifted_syt(const Shape& s);

inline constexpr int kDefaultTableauCellLimit = 15;

/// Visits every standard tableau of `s` in lexicographic order of chi words.
void for_each_tableau(const Shape& s, const std::function<void(const Tableau&)>& visit,
                      int cell_limit = kDefaultTableauCellLimit);

std::vector<Tableau> enumerate_tableaux(const Shape& s, int cell_limit = kDefaultTableauCellLimit);

nlohmann::ordered_json to_json(const Tableau& t);
Tableau tableau_from_json(const nlohmann::json& j);
Tableau parse_tableau(std::string_view json_text);

/// One row per line; shifted rows are indented by one cell per row.
std::string render_text(const Tableau& t);

/// Parses "5,5,5".
std::vector<int> parse_parts(std::string_view text);

}  // namespace altperm
