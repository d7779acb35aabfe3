#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "omp/sign.hpp"

namespace omp {

// Exact rational scalar.  All realization arithmetic is exact; no floating
// point anywhere in the library.
using Rational = boost::multiprecision::cpp_rational;

inline Sign signOf(const Rational& x) {
  int s = x.sign();
  return s > 0 ? Sign::Plus : (s < 0 ? Sign::Minus : Sign::Zero);
}

Rational parseRational(const std::string& token);
std::string rationalToString(const Rational& x);

// Dense exact rational matrix, row major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols);
  static RationalMatrix fromRows(std::vector<std::vector<Rational>> rows);
  static RationalMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int r, int c) { return data_.at(r * cols_ + c); }
  const Rational& at(int r, int c) const { return data_.at(r * cols_ + c); }

  int rank() const;
  // Determinant of a square matrix.
  Rational det() const;
  // Determinant of the square submatrix picking all rows and the given
  // columns (must have size == rows()).
  Rational detColumns(const std::vector<int>& columns) const;
  // Rank of the submatrix on the given columns.
  int rankOfColumns(const std::vector<int>& columns) const;

  RationalMatrix transposed() const;
  // Columns selected, same rows.
  RationalMatrix selectColumns(const std::vector<int>& columns) const;

  bool operator==(const RationalMatrix& other) const = default;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

}  // namespace omp
