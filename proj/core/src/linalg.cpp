#include "cubicones/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace cubicones {

QMatrix::QMatrix(const std::vector<QVector>& rows) {
  rows_ = rows.size();
  cols_ = rows.empty() ? 0 : rows.front().size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("QMatrix: ragged rows");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QVector QMatrix::row(std::size_t r) const {
  QVector out(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out[c] = at(r, c);
  return out;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

QVector QMatrix::operator*(const QVector& x) const {
  if (x.size() != cols_) throw std::invalid_argument("QMatrix: dimension mismatch");
  QVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r] += at(r, c) * x[c];
  return out;
}

QMatrix QMatrix::operator*(const QMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("QMatrix: dimension mismatch");
  QMatrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (at(r, k).is_zero()) continue;
      for (std::size_t c = 0; c < other.cols_; ++c)
        out.at(r, c) += at(r, k) * other.at(k, c);
    }
  return out;
}

namespace {

struct Echelon {
  QMatrix m;
  std::vector<std::size_t> pivot_cols;  // one entry per pivot row
};

// Reduced row echelon form with left-to-right pivot choice (first row with a
// nonzero entry in the current column).
Echelon rref(QMatrix m) {
  std::vector<std::size_t> pivots;
  std::size_t pr = 0;
  for (std::size_t c = 0; c < m.cols() && pr < m.rows(); ++c) {
    std::size_t sel = pr;
    while (sel < m.rows() && m.at(sel, c).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != pr)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m.at(sel, k), m.at(pr, k));
    const Rational inv = Rational(1) / m.at(pr, c);
    for (std::size_t k = c; k < m.cols(); ++k) m.at(pr, k) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == pr || m.at(r, c).is_zero()) continue;
      const Rational f = m.at(r, c);
      for (std::size_t k = c; k < m.cols(); ++k) m.at(r, k) -= f * m.at(pr, k);
    }
    pivots.push_back(c);
    ++pr;
  }
  return {std::move(m), std::move(pivots)};
}

}  // namespace

std::optional<QVector> solve_linear(const QMatrix& a, const QVector& b) {
  if (a.rows() != b.size())
    throw std::invalid_argument("solve_linear: rows(A) != size(b)");
  QMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, a.cols()) = b[r];
  }
  Echelon e = rref(std::move(aug));
  // Inconsistent iff some pivot lands in the augmented column.
  if (!e.pivot_cols.empty() && e.pivot_cols.back() == a.cols()) return std::nullopt;
  QVector x(a.cols());
  for (std::size_t i = 0; i < e.pivot_cols.size(); ++i)
    x[e.pivot_cols[i]] = e.m.at(i, a.cols());
  return x;
}

std::vector<QVector> kernel_basis(const QMatrix& a) {
  Echelon e = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<QVector> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    QVector v(a.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i)
      v[e.pivot_cols[i]] = -e.m.at(i, free);
    basis.push_back(primitive_signed(v));
  }
  return basis;
}

std::size_t rank(const QMatrix& a) { return rref(a).pivot_cols.size(); }

Rational dot(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

QVector add(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("add: dimension mismatch");
  QVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

QVector sub(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("sub: dimension mismatch");
  QVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

QVector scale(const QVector& a, const Rational& c) {
  QVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * c;
  return out;
}

bool is_zero_vector(const QVector& a) {
  for (const auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

QVector primitive(const QVector& v) {
  using boost::multiprecision::cpp_int;
  cpp_int num_gcd = 0, den_lcm = 1;
  for (const auto& x : v) {
    if (x.is_zero()) continue;
    num_gcd = boost::multiprecision::gcd(num_gcd, x.numerator());
    den_lcm = boost::multiprecision::lcm(den_lcm, x.denominator());
  }
  if (num_gcd == 0) return v;  // zero vector
  const Rational factor{den_lcm, num_gcd < 0 ? -num_gcd : num_gcd};
  return scale(v, factor);
}

QVector primitive_signed(const QVector& v) {
  QVector p = primitive(v);
  for (const auto& x : p) {
    if (x.is_zero()) continue;
    if (x.sign() < 0) return scale(p, Rational(-1));
    break;
  }
  return p;
}

bool positively_proportional(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) return false;
  Rational ratio;  // b = ratio * a
  bool have_ratio = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero() != b[i].is_zero()) return false;
    if (a[i].is_zero()) continue;
    const Rational r = b[i] / a[i];
    if (!have_ratio) {
      if (r.sign() <= 0) return false;
      ratio = r;
      have_ratio = true;
    } else if (r != ratio) {
      return false;
    }
  }
  return true;  // both zero, or consistent positive ratio
}

}  // namespace cubicones
