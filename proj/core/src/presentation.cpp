#include "alexbq/presentation.hpp"

#include <sstream>

#include "alexbq/errors.hpp"

namespace alexbq {

PresentationMatrix::PresentationMatrix(std::size_t rows, std::size_t cols, std::vector<std::string> generator_names)
    : rows_(rows), cols_(cols), entries_(rows * cols), names_(std::move(generator_names)) {
  if (names_.empty()) {
    for (std::size_t c = 0; c < cols_; ++c) names_.push_back("x" + std::to_string(c));
  } else if (names_.size() != cols_) {
    throw ValidationError("matrix: generator name count does not match column count");
  }
}

PresentationMatrix::PresentationMatrix(const std::vector<std::vector<LaurentPoly>>& rows)
    : PresentationMatrix(rows.size(), rows.empty() ? 0 : rows.front().size()) {
  for (std::size_t r = 0; r < rows_; ++r) {
    if (rows[r].size() != cols_) throw ValidationError("matrix: ragged rows");
    for (std::size_t c = 0; c < cols_; ++c) at(r, c) = rows[r][c];
  }
}

PresentationMatrix build_matrix(const Diagram& d) {
  const std::size_t n = d.semiarc_count();
  const auto base = d.base_point();
  const bool split = base && d.source(*base).has_value();

  // Column of a semiarc seen from an input slot and from an output slot.
  std::vector<std::size_t> in_col(n), out_col(n);
  std::vector<std::string> names;
  std::size_t next = 0;
  for (SemiArc a = 0; a < n; ++a) {
    if (split && a == *base) continue;
    in_col[a] = out_col[a] = next++;
    names.push_back(d.label(a));
  }
  if (split) {
    in_col[*base] = next++;
    out_col[*base] = next++;
    names.push_back(d.label(*base) + "@start");
    names.push_back(d.label(*base) + "@end");
  }

  const LaurentPoly one = laurent::constant(1);
  const LaurentPoly t = laurent::t();
  const LaurentPoly s = laurent::s();
  const LaurentPoly one_minus_st = one - s * t;

  PresentationMatrix m(2 * d.crossings().size(), next, std::move(names));
  std::size_t row = 0;
  for (const auto& c : d.crossings()) {
    const std::size_t a = in_col[c.in_a()], b = in_col[c.in_b()];
    const std::size_t cc = out_col[c.out_c()], dd = out_col[c.out_d()];
    switch (c.kind) {
      case CrossingKind::positive:
        m.at(row, cc) += one;
        m.at(row, b) -= t;
        m.at(row, a) -= one_minus_st;
        m.at(row + 1, dd) += one;
        m.at(row + 1, a) -= s;
        break;
      case CrossingKind::negative:
        m.at(row, a) += one;
        m.at(row, dd) -= t;
        m.at(row, cc) -= one_minus_st;
        m.at(row + 1, b) += one;
        m.at(row + 1, cc) -= s;
        break;
      case CrossingKind::virtual_crossing:
        m.at(row, cc) += one;
        m.at(row, b) -= one;
        m.at(row + 1, dd) += one;
        m.at(row + 1, a) -= one;
        break;
    }
    row += 2;
  }
  return m;
}

std::string to_text(const PresentationMatrix& m) {
  std::ostringstream out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out << " | ";
      out << to_string(m.at(r, c));
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace alexbq
