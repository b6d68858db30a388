#include "simplexvol/exact.hpp"

#include "simplexvol/errors.hpp"

#include <cctype>
#include <cmath>
#include <string>
#include <utility>

namespace simplexvol {
namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw CertificationError("integer overflow in exact matrix arithmetic");
  }
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw CertificationError("integer overflow in exact matrix arithmetic");
  }
  return out;
}

Integer parse_integer(std::string_view text) {
  Integer value;
  std::string s(text);
  if (!s.empty() && s.front() == '+') {
    s.erase(0, 1);
  }
  if (s.empty() || value.set_str(s, 10) != 0) {
    throw DomainError("malformed integer '" + std::string(text) + "'");
  }
  return value;
}

// [sign] digits [. digits] [(e|E) [sign] digits]
Rational parse_decimal(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  std::string digits;
  long exponent = 0;
  bool any_digit = false;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    digits.push_back(text[pos++]);
    any_digit = true;
  }
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      digits.push_back(text[pos++]);
      --exponent;
      any_digit = true;
    }
  }
  if (!any_digit) {
    throw DomainError("malformed number '" + std::string(text) + "'");
  }
  if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
    ++pos;
    const std::string_view rest = text.substr(pos);
    if (rest.empty()) {
      throw DomainError("malformed exponent in '" + std::string(text) + "'");
    }
    exponent += parse_integer(rest).get_si();
    pos = text.size();
  }
  if (pos != text.size()) {
    throw DomainError("trailing characters in '" + std::string(text) + "'");
  }
  Integer mantissa(digits, 10);
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
  Rational value = exponent >= 0 ? Rational(mantissa * scale) : Rational(mantissa, scale);
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const Integer num = parse_integer(text.substr(0, slash));
    const Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) {
      throw DomainError("zero denominator in '" + std::string(text) + "'");
    }
    Rational value(num, den);
    value.canonicalize();
    return value;
  }
  return parse_decimal(text);
}

Rational rational_from_double(double value) {
  if (!std::isfinite(value)) {
    throw DomainError("non-finite value has no rational form");
  }
  return Rational(value);  // mpq_set_d is exact
}

std::string to_string(const Integer& value) { return value.get_str(10); }
std::string to_string(const Rational& value) { return value.get_str(10); }

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::int64_t fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

IntMatrix IntMatrix::identity(std::size_t order) {
  IntMatrix out(order, order);
  for (std::size_t i = 0; i < order; ++i) {
    out(i, i) = 1;
  }
  return out;
}

IntMatrix IntMatrix::shifted(std::int64_t scale) const {
  if (rows_ != cols_) {
    throw ShapeError("shift of a non-square matrix");
  }
  IntMatrix out = *this;
  for (std::size_t i = 0; i < rows_; ++i) {
    out(i, i) = checked_add(out(i, i), scale);
  }
  return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw ShapeError("matrix sum of mismatched shapes");
  }
  IntMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) {
    out.data_[i] = checked_add(data_[i], other.data_[i]);
  }
  return out;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_) {
    throw ShapeError("matrix product of mismatched shapes");
  }
  IntMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::int64_t* out_row = &out.data_[i * other.cols_];
    for (std::size_t l = 0; l < cols_; ++l) {
      const std::int64_t a = (*this)(i, l);
      if (a == 0) {
        continue;
      }
      const std::int64_t* b_row = &other.data_[l * other.cols_];
      for (std::size_t j = 0; j < other.cols_; ++j) {
        if (b_row[j] != 0) {
          out_row[j] = checked_add(out_row[j], checked_mul(a, b_row[j]));
        }
      }
    }
  }
  return out;
}

bool IntMatrix::is_zero() const {
  for (std::int64_t v : data_) {
    if (v != 0) {
      return false;
    }
  }
  return true;
}

bool IntMatrix::is_symmetric() const {
  if (rows_ != cols_) {
    return false;
  }
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) {
        return false;
      }
    }
  }
  return true;
}

std::int64_t IntMatrix::trace() const {
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) {
    sum = checked_add(sum, (*this)(i, i));
  }
  return sum;
}

std::vector<std::int64_t> IntMatrix::row_sums() const {
  std::vector<std::int64_t> sums(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      sums[i] = checked_add(sums[i], (*this)(i, j));
    }
  }
  return sums;
}

Integer bareiss_determinant(IntegerMatrix a) {
  const std::size_t n = a.size();
  for (const auto& row : a) {
    if (row.size() != n) {
      throw ShapeError("determinant of a non-square matrix");
    }
  }
  if (n == 0) {
    return 1;
  }
  int sign = 1;
  Integer previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && a[pivot][k] == 0) {
        ++pivot;
      }
      if (pivot == n) {
        return 0;
      }
      std::swap(a[k], a[pivot]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer value = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), previous.get_mpz_t());
        a[i][j] = std::move(value);
      }
      a[i][k] = 0;
    }
    previous = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

Integer bareiss_determinant(const IntMatrix& matrix) {
  if (matrix.rows() != matrix.cols()) {
    throw ShapeError("determinant of a non-square matrix");
  }
  IntegerMatrix rows(matrix.rows(), std::vector<Integer>(matrix.cols()));
  for (std::size_t i = 0; i < matrix.rows(); ++i) {
    for (std::size_t j = 0; j < matrix.cols(); ++j) {
      rows[i][j] = static_cast<long>(matrix(i, j));
    }
  }
  return bareiss_determinant(std::move(rows));
}

Rational exact_determinant(const RationalMatrix& rows) {
  IntegerMatrix scaled(rows.size());
  Integer total_scale = 1;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Integer lcm = 1;
    for (const Rational& v : rows[i]) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
    }
    total_scale *= lcm;
    scaled[i].reserve(rows[i].size());
    for (const Rational& v : rows[i]) {
      Integer entry = v.get_num() * (lcm / v.get_den());
      scaled[i].push_back(std::move(entry));
    }
  }
  Rational det(bareiss_determinant(std::move(scaled)), total_scale);
  det.canonicalize();
  return det;
}

std::vector<Rational> solve_exact(RationalMatrix a, std::vector<Rational> b) {
  const std::size_t n = a.size();
  if (b.size() != n) {
    throw ShapeError("right-hand side length mismatch");
  }
  for (const auto& row : a) {
    if (row.size() != n) {
      throw ShapeError("exact solve needs a square system");
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a[pivot][k] == 0) {
      ++pivot;
    }
    if (pivot == n) {
      throw DomainError("singular system in exact solve");
    }
    std::swap(a[k], a[pivot]);
    std::swap(b[k], b[pivot]);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) {
        continue;
      }
      const Rational factor = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) {
        a[i][j] -= factor * a[k][j];
      }
      b[i] -= factor * b[k];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational acc = b[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      acc -= a[i][j] * x[j];
    }
    x[i] = acc / a[i][i];
  }
  return x;
}

}  // namespace simplexvol
