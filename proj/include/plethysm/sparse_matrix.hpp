#pragma once

#include <cstddef>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "plethysm/numeric.hpp"

namespace plethysm {

// Exact sparse matrix stored by columns; each column is a row-sorted list of
// nonzero rationals.
class SparseRationalMatrix {
 public:
  using Column = std::vector<std::pair<int, Rational>>;

  SparseRationalMatrix(int rows, int cols);

  // Duplicate (row, col) entries are summed.
  static SparseRationalMatrix from_triplets(int rows, int cols, std::vector<std::tuple<int, int, Rational>> entries);
  static SparseRationalMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t nnz() const;

  const Column& column(int c) const { return columns_.at(c); }
  // Sorts by row, merges duplicates, drops zeros, validates indices.
  void set_column(int c, Column entries);
  Rational at(int row, int col) const;

  SparseRationalMatrix transpose() const;

  // "# rows cols nnz" header, then "row col num/den" sorted by (col, row).
  std::string to_coordinate_list() const;
  static SparseRationalMatrix from_coordinate_list(const std::string& text);

  friend bool operator==(const SparseRationalMatrix& a, const SparseRationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.columns_ == b.columns_;
  }

 private:
  int rows_;
  int cols_;
  std::vector<Column> columns_;
};

// Which end of a reduced column is used as its pivot. Both give the same rank;
// the second order exists so rank can be cross-checked.
enum class PivotOrder { FirstRow, LastRow };

// Exact rank by fraction-free elimination on primitive integer columns.
std::size_t rank(const SparseRationalMatrix& m, PivotOrder order = PivotOrder::FirstRow);
bool is_injective(const SparseRationalMatrix& m);

}  // namespace plethysm
