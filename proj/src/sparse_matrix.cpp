#include "plethysm/sparse_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "plethysm/errors.hpp"

namespace plethysm {

SparseRationalMatrix::SparseRationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), columns_(cols) {
  if (rows < 0 || cols < 0) throw UsageError("matrix dimensions must be nonnegative");
}

SparseRationalMatrix SparseRationalMatrix::from_triplets(int rows, int cols,
                                                         std::vector<std::tuple<int, int, Rational>> entries) {
  SparseRationalMatrix m(rows, cols);
  std::vector<Column> cols_data(cols);
  for (auto& [r, c, v] : entries) {
    if (c < 0 || c >= cols) throw UsageError("column index out of range");
    cols_data[c].emplace_back(r, std::move(v));
  }
  for (int c = 0; c < cols; ++c) m.set_column(c, std::move(cols_data[c]));
  return m;
}

SparseRationalMatrix SparseRationalMatrix::identity(int n) {
  SparseRationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.columns_[i].emplace_back(i, Rational(1));
  return m;
}

std::size_t SparseRationalMatrix::nnz() const {
  std::size_t total = 0;
  for (const Column& c : columns_) total += c.size();
  return total;
}

void SparseRationalMatrix::set_column(int c, Column entries) {
  if (c < 0 || c >= cols_) throw UsageError("column index out of range");
  std::stable_sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  Column merged;
  for (auto& [r, v] : entries) {
    if (r < 0 || r >= rows_) throw UsageError("row index out of range");
    if (!merged.empty() && merged.back().first == r)
      merged.back().second += v;
    else
      merged.emplace_back(r, std::move(v));
  }
  std::erase_if(merged, [](const auto& e) { return e.second == 0; });
  columns_[c] = std::move(merged);
}

Rational SparseRationalMatrix::at(int row, int col) const {
  const Column& c = columns_.at(col);
  auto it = std::lower_bound(c.begin(), c.end(), row, [](const auto& e, int r) { return e.first < r; });
  return (it != c.end() && it->first == row) ? it->second : Rational(0);
}

SparseRationalMatrix SparseRationalMatrix::transpose() const {
  SparseRationalMatrix t(cols_, rows_);
  for (int c = 0; c < cols_; ++c)
    for (const auto& [r, v] : columns_[c]) t.columns_[r].emplace_back(c, v);
  return t;
}

std::string SparseRationalMatrix::to_coordinate_list() const {
  std::ostringstream os;
  os << "# " << rows_ << ' ' << cols_ << ' ' << nnz() << '\n';
  for (int c = 0; c < cols_; ++c)
    for (const auto& [r, v] : columns_[c]) os << r << ' ' << c << ' ' << v.get_num() << '/' << v.get_den() << '\n';
  return os.str();
}

SparseRationalMatrix SparseRationalMatrix::from_coordinate_list(const std::string& text) {
  std::istringstream is(text);
  std::string hash;
  int rows = 0, cols = 0;
  std::size_t nnz = 0;
  if (!(is >> hash >> rows >> cols >> nnz) || hash != "#") throw UsageError("missing coordinate-list header");
  std::vector<std::tuple<int, int, Rational>> entries;
  for (std::size_t k = 0; k < nnz; ++k) {
    int r = 0, c = 0;
    std::string value;
    if (!(is >> r >> c >> value)) throw UsageError("truncated coordinate list");
    Rational q(value);
    q.canonicalize();
    entries.emplace_back(r, c, std::move(q));
  }
  return from_triplets(rows, cols, std::move(entries));
}

namespace {

using IntColumn = std::vector<std::pair<int, Integer>>;

IntColumn primitive_integer_column(const SparseRationalMatrix::Column& col) {
  Integer lcm = 1;
  for (const auto& [r, v] : col) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
  IntColumn out;
  out.reserve(col.size());
  Integer content = 0;
  for (const auto& [r, v] : col) {
    Integer x = v.get_num() * (lcm / v.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
    out.emplace_back(r, std::move(x));
  }
  if (content > 1)
    for (auto& e : out) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), content.get_mpz_t());
  return out;
}

void make_primitive(IntColumn& v) {
  Integer content = 0;
  for (const auto& e : v) {
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), e.second.get_mpz_t());
    if (content == 1) return;
  }
  if (content > 1)
    for (auto& e : v) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), content.get_mpz_t());
}

// a*v - b*p, merged by row; the pivot entry cancels exactly.
IntColumn combine(const IntColumn& v, const Integer& a, const IntColumn& p, const Integer& b) {
  IntColumn out;
  out.reserve(v.size() + p.size());
  std::size_t i = 0, j = 0;
  while (i < v.size() || j < p.size()) {
    if (j == p.size() || (i < v.size() && v[i].first < p[j].first)) {
      out.emplace_back(v[i].first, a * v[i].second);
      ++i;
    } else if (i == v.size() || p[j].first < v[i].first) {
      out.emplace_back(p[j].first, -b * p[j].second);
      ++j;
    } else {
      Integer x = a * v[i].second - b * p[j].second;
      if (x != 0) out.emplace_back(v[i].first, std::move(x));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

std::size_t rank(const SparseRationalMatrix& m, PivotOrder order) {
  std::vector<int> col_order(m.cols());
  std::iota(col_order.begin(), col_order.end(), 0);
  // Sparsest columns first keeps fill-in down; any order gives the same rank.
  std::stable_sort(col_order.begin(), col_order.end(),
                   [&](int a, int b) { return m.column(a).size() < m.column(b).size(); });

  auto lead = [order](const IntColumn& v) -> const std::pair<int, Integer>& {
    return order == PivotOrder::FirstRow ? v.front() : v.back();
  };
  std::unordered_map<int, IntColumn> pivots;
  std::size_t r = 0;
  for (int c : col_order) {
    IntColumn v = primitive_integer_column(m.column(c));
    while (!v.empty()) {
      auto it = pivots.find(lead(v).first);
      if (it == pivots.end()) {
        int row = lead(v).first;
        pivots.emplace(row, std::move(v));
        ++r;
        break;
      }
      const IntColumn& p = it->second;
      Integer g;
      mpz_gcd(g.get_mpz_t(), lead(v).second.get_mpz_t(), lead(p).second.get_mpz_t());
      Integer a = lead(p).second / g;
      Integer b = lead(v).second / g;
      v = combine(v, a, p, b);
      make_primitive(v);
    }
  }
  return r;
}

bool is_injective(const SparseRationalMatrix& m) { return rank(m) == static_cast<std::size_t>(m.cols()); }

}  // namespace plethysm
