#include "omp/rational.hpp"

#include <sstream>

namespace omp {

Rational parseRational(const std::string& token) {
  if (token.empty()) throw PreconditionError("empty rational token");
  for (char c : token)
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
      throw PreconditionError("non-rational token '" + token + "'");
  try {
    return Rational(token);
  } catch (const std::exception&) {
    throw PreconditionError("malformed rational '" + token + "'");
  }
}

std::string rationalToString(const Rational& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

RationalMatrix::RationalMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

RationalMatrix RationalMatrix::fromRows(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) throw PreconditionError("matrix needs at least one row");
  RationalMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int r = 0; r < m.rows_; ++r) {
    if (static_cast<int>(rows[r].size()) != m.cols_)
      throw PreconditionError("ragged matrix rows");
    for (int c = 0; c < m.cols_; ++c) m.at(r, c) = std::move(rows[r][c]);
  }
  return m;
}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

namespace {
// Gaussian elimination; returns rank.  Operates on a copy.
int eliminationRank(RationalMatrix m) {
  int rank = 0;
  int rows = m.rows(), cols = m.cols();
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m.at(r, c) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int k = c; k < cols; ++k) std::swap(m.at(pivot, k), m.at(rank, k));
    for (int r = rank + 1; r < rows; ++r) {
      if (m.at(r, c) == 0) continue;
      Rational f = m.at(r, c) / m.at(rank, c);
      for (int k = c; k < cols; ++k) m.at(r, k) -= f * m.at(rank, k);
    }
    ++rank;
  }
  return rank;
}
}  // namespace

int RationalMatrix::rank() const { return eliminationRank(*this); }

Rational RationalMatrix::det() const {
  if (rows_ != cols_) throw PreconditionError("determinant of non-square matrix");
  RationalMatrix m = *this;
  Rational d = 1;
  for (int c = 0; c < cols_; ++c) {
    int pivot = -1;
    for (int r = c; r < rows_; ++r)
      if (m.at(r, c) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != c) {
      for (int k = c; k < cols_; ++k) std::swap(m.at(pivot, k), m.at(c, k));
      d = -d;
    }
    d *= m.at(c, c);
    for (int r = c + 1; r < rows_; ++r) {
      if (m.at(r, c) == 0) continue;
      Rational f = m.at(r, c) / m.at(c, c);
      for (int k = c; k < cols_; ++k) m.at(r, k) -= f * m.at(c, k);
    }
  }
  return d;
}

Rational RationalMatrix::detColumns(const std::vector<int>& columns) const {
  return selectColumns(columns).det();
}

int RationalMatrix::rankOfColumns(const std::vector<int>& columns) const {
  if (columns.empty()) return 0;
  return selectColumns(columns).rank();
}

RationalMatrix RationalMatrix::transposed() const {
  RationalMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

RationalMatrix RationalMatrix::selectColumns(const std::vector<int>& columns) const {
  RationalMatrix s(rows_, static_cast<int>(columns.size()));
  for (int r = 0; r < rows_; ++r)
    for (size_t j = 0; j < columns.size(); ++j) s.at(r, static_cast<int>(j)) = at(r, columns[j]);
  return s;
}

}  // namespace omp
