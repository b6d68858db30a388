#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace simplexvol {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p/q", an integer, or a plain decimal such as "0.25" or "-1.5e-3" into an exact rational.
Rational parse_rational(std::string_view text);

/// Exact rational value of a finite double.
Rational rational_from_double(double value);

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

/// Dense row-major matrix of 64-bit integers; every arithmetic step is overflow-checked.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols, std::int64_t fill = 0);

  static IntMatrix identity(std::size_t order);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  /// this + scale * I
  IntMatrix shifted(std::int64_t scale) const;

  IntMatrix operator+(const IntMatrix& other) const;
  IntMatrix operator*(const IntMatrix& other) const;
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  bool is_zero() const;
  bool is_symmetric() const;
  std::int64_t trace() const;
  std::vector<std::int64_t> row_sums() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

using IntegerMatrix = std::vector<std::vector<Integer>>;
using RationalMatrix = std::vector<std::vector<Rational>>;

/// Fraction-free (Bareiss) determinant with row pivoting on zero pivots.
Integer bareiss_determinant(IntegerMatrix rows);
Integer bareiss_determinant(const IntMatrix& matrix);

/// Clears denominators row by row, then runs Bareiss over the integers.
Rational exact_determinant(const RationalMatrix& rows);

/// Solves A x = b exactly. Throws DomainError if A is singular.
std::vector<Rational> solve_exact(RationalMatrix a, std::vector<Rational> b);

}  // namespace simplexvol
