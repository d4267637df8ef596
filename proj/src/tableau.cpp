#include "altperm/tableau.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "altperm/errors.hpp"

namespace altperm {

BigInt factorial(int n) {
  if (n < 0) throw DomainError("factorial of negative number " + std::to_string(n));
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

Shape::Shape(std::vector<int> parts, ShapeKind kind) : parts_(std::move(parts)), kind_(kind) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw ShapeError("shape parts must be positive (zeros only at the end)");
    if (i == 0) continue;
    const bool ok = kind_ == ShapeKind::Shifted ? parts_[i] < parts_[i - 1] : parts_[i] <= parts_[i - 1];
    if (!ok) {
      throw ShapeError(kind_ == ShapeKind::Shifted ? "shifted shape parts must be strictly decreasing"
                                                   : "shape parts must be weakly decreasing");
    }
  }
}

int Shape::cells() const {
  int n = 0;
  for (int p : parts_) n += p;
  return n;
}

Tableau::Tableau(ShapeKind kind, std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
  std::vector<int> parts;
  parts.reserve(rows_.size());
  for (const auto& r : rows_) parts.push_back(static_cast<int>(r.size()));
  shape_ = Shape(std::move(parts), kind);
}

int Tableau::entry(int row, int index) const {
  return rows_.at(static_cast<std::size_t>(row - 1)).at(static_cast<std::size_t>(index - 1));
}

Word chi(const Tableau& t) {
  if (t.shape().rows() > 3) throw DomainError("chi: tableau has more than 3 rows");
  std::vector<int> letters(static_cast<std::size_t>(t.cells()), 0);
  for (std::size_t r = 0; r < t.rows().size(); ++r) {
    for (int v : t.rows()[r]) {
      if (v < 1 || v > t.cells() || letters[static_cast<std::size_t>(v - 1)] != 0) {
        throw DomainError("chi: entries are not exactly 1..N");
      }
      letters[static_cast<std::size_t>(v - 1)] = static_cast<int>(r) + 1;
    }
  }
  return Word(std::move(letters));
}

Tableau chi_inverse(const Word& w, ShapeKind kind) {
  std::vector<std::vector<int>> rows(3);
  for (int i = 1; i <= w.size(); ++i) rows[static_cast<std::size_t>(w.at(i) - 1)].push_back(i);
  // A missing letter followed by a present one is caught by Shape as a zero part.
  if ((rows[0].empty() && !(rows[1].empty() && rows[2].empty())) || (rows[1].empty() && !rows[2].empty())) {
    throw ShapeError("chi_inverse: word type is not a partition");
  }
  return Tableau(kind, std::move(rows));
}

bool is_standard(const Tableau& t) {
  const auto& rows = t.rows();
  const int n = t.cells();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (const auto& row : rows) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      const int v = row[j];
      if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) return false;
      seen[static_cast<std::size_t>(v)] = true;
      if (j > 0 && row[j - 1] >= v) return false;
    }
  }
  const std::size_t offset = t.shape().shifted() ? 1 : 0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (rows[i - 1][j + offset] >= rows[i][j]) return false;
    }
  }
  return true;
}

BigInt count_syt(const Shape& s) {
  if (s.shifted()) throw DomainError("count_syt: shifted shape (use count_shifted_syt)");
  const auto& parts = s.parts();
  BigInt hooks = 1;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (int j = 0; j < parts[i]; ++j) {
      const int arm = parts[i] - j - 1;
      int leg = 0;
      for (std::size_t k = i + 1; k < parts.size() && parts[k] > j; ++k) ++leg;
      hooks *= arm + leg + 1;
    }
  }
  return factorial(s.cells()) / hooks;
}

BigInt count_shifted_syt(const Shape& s) {
  if (!s.shifted()) throw DomainError("count_shifted_syt: ordinary shape (use count_syt)");
  const auto& parts = s.parts();
  BigInt num = factorial(s.cells());
  BigInt den = 1;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    den *= factorial(parts[i]);
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      num *= parts[i] - parts[j];
      den *= parts[i] + parts[j];
    }
  }
  if (num % den != 0) throw std::logic_error("count_shifted_syt: non-integral product");
  return num / den;
}

void for_each_tableau(const Shape& s, const std::function<void(const Tableau&)>& visit, int cell_limit) {
  const int n = s.cells();
  if (n > cell_limit) {
    throw ResourceError("enumerate_tableaux: " + std::to_string(n) + " cells exceeds limit " +
                        std::to_string(cell_limit));
  }
  const auto& parts = s.parts();
  const std::size_t m = parts.size();
  const std::size_t gap = s.shifted() ? 2 : 1;
  std::vector<std::vector<int>> rows(m);

  std::function<void(int)> place = [&](int value) {
    if (value > n) {
      visit(Tableau(s.kind(), rows));
      return;
    }
    for (std::size_t r = 0; r < m; ++r) {
      const std::size_t len = rows[r].size();
      if (len >= static_cast<std::size_t>(parts[r])) continue;
      if (r > 0 && rows[r - 1].size() < len + gap) continue;
      rows[r].push_back(value);
      place(value + 1);
      rows[r].pop_back();
    }
  };
  place(1);
}

std::vector<Tableau> enumerate_tableaux(const Shape& s, int cell_limit) {
  std::vector<Tableau> out;
  for_each_tableau(s, [&](const Tableau& t) { out.push_back(t); }, cell_limit);
  return out;
}

nlohmann::ordered_json to_json(const Tableau& t) {
  return nlohmann::ordered_json{{"shape", t.shape().parts()}, {"shifted", t.shape().shifted()}, {"rows", t.rows()}};
}

Tableau tableau_from_json(const nlohmann::json& j) {
  try {
    const bool shifted = j.value("shifted", false);
    auto rows = j.at("rows").get<std::vector<std::vector<int>>>();
    Tableau t(shifted ? ShapeKind::Shifted : ShapeKind::Ordinary, std::move(rows));
    if (j.contains("shape")) {
      const Shape declared(j.at("shape").get<std::vector<int>>(), t.shape().kind());
      if (!(declared == t.shape())) throw ParseError("tableau JSON: rows do not match declared shape");
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("tableau JSON: ") + e.what());
  }
}

Tableau parse_tableau(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("tableau JSON: ") + e.what());
  }
  return tableau_from_json(j);
}

std::string render_text(const Tableau& t) {
  const int width = static_cast<int>(std::to_string(std::max(1, t.cells())).size());
  std::ostringstream os;
  for (std::size_t r = 0; r < t.rows().size(); ++r) {
    if (t.shape().shifted()) os << std::string(r * static_cast<std::size_t>(width + 1), ' ');
    bool first = true;
    for (int v : t.rows()[r]) {
      if (!first) os << ' ';
      const std::string cell = std::to_string(v);
      os << std::string(static_cast<std::size_t>(width) - cell.size(), ' ') << cell;
      first = false;
    }
    os << '\n';
  }
  return os.str();
}

std::vector<int> parse_parts(std::string_view text) {
  std::vector<int> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view tok = text.substr(start, comma - start);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw ParseError("bad shape part '" + std::string(tok) + "'");
    }
    parts.push_back(v);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return parts;
}

}  // namespace altperm
