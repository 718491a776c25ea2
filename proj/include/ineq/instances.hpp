#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "ineq/geometry.hpp"
#include "ineq/rational.hpp"
#include "ineq/verdict.hpp"

namespace ineq {

/// Dense grid of nonnegative rationals a[i][k]; row index i runs over the
/// sequence positions, column index k over the factors of the statement.
class NonNegMatrix {
 public:
  NonNegMatrix(std::size_t rows, std::size_t cols);  // zero-filled
  static NonNegMatrix from_rows(std::vector<std::vector<Rational>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Rational& at(std::size_t i, std::size_t k) const { return e_[i * cols_ + k]; }
  void set(std::size_t i, std::size_t k, Rational v);  // rejects negatives

  Rational row_product(std::size_t i) const;
  Rational col_sum(std::size_t k) const;
  Rational col_pow_sum(std::size_t k, long e) const;  // sum of e-th powers
  std::vector<Rational> column(std::size_t k) const;
  std::vector<Rational> row_sums() const;

  NonNegMatrix without_row(std::size_t i) const;
  NonNegMatrix without_col(std::size_t k) const;

  friend bool operator==(const NonNegMatrix& a, const NonNegMatrix& b) = default;

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> e_;
};

/// True iff the matrix has rank <= 1, i.e. all columns (equivalently rows)
/// are pairwise proportional; zero columns are proportional to everything.
bool columns_pairwise_proportional(const NonNegMatrix& m);

/// Exponents p_1..p_m, each > 1, with the conjugacy defect |sum 1/p_k - 1|
/// cached. A valid instance of the product-sum inequality needs defect 0.
class ExponentVector {
 public:
  static ExponentVector from(std::vector<Rational> p);

  std::size_t size() const { return p_.size(); }
  const Rational& at(std::size_t k) const { return p_[k]; }
  const std::vector<Rational>& values() const { return p_; }
  const Rational& defect() const { return defect_; }
  bool is_conjugate() const { return defect_.is_zero(); }
  bool all_integer() const;

  friend bool operator==(const ExponentVector& a, const ExponentVector& b) { return a.p_ == b.p_; }

 private:
  ExponentVector(std::vector<Rational> p, Rational defect)
      : p_(std::move(p)), defect_(std::move(defect)) {}
  std::vector<Rational> p_;
  Rational defect_;
};

struct UnsortedError : std::invalid_argument {
  UnsortedError(std::size_t i, std::size_t k)
      : std::invalid_argument("matrix column " + std::to_string(k + 1) +
                              " increases between rows " + std::to_string(i + 1) + " and " +
                              std::to_string(i + 2)),
        row(i),
        col(k) {}
  std::size_t row;
  std::size_t col;
};

/// A NonNegMatrix whose every column is nonincreasing down the rows.
class SortedMatrix {
 public:
  static SortedMatrix validated(NonNegMatrix m);  // throws UnsortedError at the offending (i, k)
  const NonNegMatrix& matrix() const { return m_; }

 private:
  explicit SortedMatrix(NonNegMatrix m) : m_(std::move(m)) {}
  NonNegMatrix m_;
};

struct HolderInstance {
  NonNegMatrix matrix;
  ExponentVector exponents;
};

struct CbsInstance {
  NonNegMatrix matrix;
};

struct MinkowskiInstance {
  NonNegMatrix matrix;
  Rational p;
};

struct ChebyshevInstance {
  NonNegMatrix matrix;  // column-sorted; validated when checked
};

struct ApplicationInstance {
  std::pair<Rational, Rational> a;
  std::pair<Rational, Rational> b;
  std::pair<Rational, Rational> c;
};

struct MenelausInstance {
  Polygon polygon;
  Line line;
  /// Normally empty; negative controls may force fabricated transversal
  /// points (each on its side's supporting line).
  std::optional<std::vector<Point>> forced_points;
};

using Instance = std::variant<HolderInstance, CbsInstance, MinkowskiInstance, ChebyshevInstance,
                              ApplicationInstance, MenelausInstance>;

Statement statement_of(const Instance& inst);

}  // namespace ineq
