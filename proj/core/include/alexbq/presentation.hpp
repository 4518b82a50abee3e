#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "alexbq/diagram.hpp"
#include "alexbq/laurent.hpp"

namespace alexbq {

/// Dense row-major matrix over Z[t^±1, s^±1] with one name per column.
class PresentationMatrix {
 public:
  PresentationMatrix() = default;
  PresentationMatrix(std::size_t rows, std::size_t cols, std::vector<std::string> generator_names = {});
  /// Square or rectangular matrix from nested rows (all rows equally long).
  explicit PresentationMatrix(const std::vector<std::vector<LaurentPoly>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const LaurentPoly& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  LaurentPoly& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  const std::vector<std::string>& generator_names() const { return names_; }

  friend bool operator==(const PresentationMatrix&, const PresentationMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<LaurentPoly> entries_;
  std::vector<std::string> names_;
};

// Alexander biquandle relations, one pair of rows per crossing, written as
// (output side) - (input side) = 0:
//   positive (a,b,c,d):  c - t*b - (1-st)*a,   d - s*a
//   negative (a,b,c,d):  a - t*d - (1-st)*c,   b - s*c
//   virtual  (a,b,c,d):  c - b,                d - a
// Columns follow semiarc order. On a based diagram the base semiarc is split:
// the part entering a crossing and the part leaving one become the last two
// columns, in that order.
PresentationMatrix build_matrix(const Diagram& d);

/// One line per row, entries separated by " | ".
std::string to_text(const PresentationMatrix& m);

}  // namespace alexbq
