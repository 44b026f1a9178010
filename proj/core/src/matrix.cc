#include "lbdiv/matrix.h"

#include <string>

#include "lbdiv/error.h"

namespace lbdiv {

SquareMatrix SquareMatrix::FromRows(
    const std::vector<std::vector<double>>& rows) {
  SquareMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      throw Error(ErrorCode::kSizeMismatch,
                  "matrix row " + std::to_string(i + 1) + " has length " +
                      std::to_string(rows[i].size()) + ", expected " +
                      std::to_string(rows.size()));
    }
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<std::vector<double>> SquareMatrix::ToRows() const {
  std::vector<std::vector<double>> rows(n_, std::vector<double>(n_));
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) rows[i][j] = (*this)(i, j);
  }
  return rows;
}

bool SquareMatrix::IsSymmetric() const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

}  // namespace lbdiv
