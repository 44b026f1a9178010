#ifndef LBDIV_MATRIX_H_
#define LBDIV_MATRIX_H_

#include <cstddef>
#include <vector>

namespace lbdiv {

// Dense row-major n x n matrix of reals. Used for pair weights and cut
// weights; entry (i, j) is addressed with 0-based item indices.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n, double fill = 0.0)
      : n_(n), data_(n * n, fill) {}

  // Rows must all have length rows.size().
  static SquareMatrix FromRows(const std::vector<std::vector<double>>& rows);

  std::size_t size() const { return n_; }

  double operator()(std::size_t i, std::size_t j) const {
    return data_[i * n_ + j];
  }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }

  std::vector<std::vector<double>> ToRows() const;

  bool IsSymmetric() const;

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

}  // namespace lbdiv

#endif  // LBDIV_MATRIX_H_
