#ifndef CUBICONES_LINALG_HPP
#define CUBICONES_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "cubicones/rational.hpp"

namespace cubicones {

using QVector = std::vector<Rational>;

/// Dense matrix of exact rationals. Row/column operations never round.
class QMatrix {
 public:
  QMatrix() : rows_(0), cols_(0) {}
  QMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  explicit QMatrix(const std::vector<QVector>& rows);

  static QMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  QVector row(std::size_t r) const;
  QMatrix transpose() const;

  QVector operator*(const QVector& x) const;
  QMatrix operator*(const QMatrix& other) const;

  friend bool operator==(const QMatrix&, const QMatrix&) = default;

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> data_;
};

/// First solution of A x = b under left-to-right pivoting, free variables set
/// to zero; empty when the system is inconsistent. Throws on a row/size
/// mismatch.
std::optional<QVector> solve_linear(const QMatrix& a, const QVector& b);

/// Basis of the right null space, one vector per free column, each vector in
/// primitive integer form with positive leading nonzero entry.
std::vector<QVector> kernel_basis(const QMatrix& a);

std::size_t rank(const QMatrix& a);

Rational dot(const QVector& a, const QVector& b);
QVector add(const QVector& a, const QVector& b);
QVector sub(const QVector& a, const QVector& b);
QVector scale(const QVector& a, const Rational& c);
bool is_zero_vector(const QVector& a);

/// Scale to coprime integer entries, preserving direction (sign kept).
QVector primitive(const QVector& v);

/// Primitive form with the leading nonzero entry positive. Only meaningful
/// for sign-free data such as kernel vectors and relation coefficients.
QVector primitive_signed(const QVector& v);

/// True when a = c*b for some positive rational c (or both are zero).
bool positively_proportional(const QVector& a, const QVector& b);

}  // namespace cubicones

#endif
