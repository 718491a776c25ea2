#include "ineq/instances.hpp"

namespace ineq {

NonNegMatrix::NonNegMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("matrix: dimensions must be positive");
  e_.assign(rows * cols, Rational(0));
}

NonNegMatrix NonNegMatrix::from_rows(std::vector<std::vector<Rational>> rows) {
  if (rows.empty() || rows.front().empty())
    throw std::invalid_argument("matrix: dimensions must be positive");
  NonNegMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw std::invalid_argument("matrix: ragged rows");
    for (std::size_t k = 0; k < m.cols_; ++k) m.set(i, k, std::move(rows[i][k]));
  }
  return m;
}

void NonNegMatrix::set(std::size_t i, std::size_t k, Rational v) {
  if (v.sign() < 0) throw std::domain_error("matrix: negative entry");
  e_[i * cols_ + k] = std::move(v);
}

Rational NonNegMatrix::row_product(std::size_t i) const {
  Rational p(1);
  for (std::size_t k = 0; k < cols_; ++k) p *= at(i, k);
  return p;
}

Rational NonNegMatrix::col_sum(std::size_t k) const {
  Rational s(0);
  for (std::size_t i = 0; i < rows_; ++i) s += at(i, k);
  return s;
}

Rational NonNegMatrix::col_pow_sum(std::size_t k, long e) const {
  Rational s(0);
  for (std::size_t i = 0; i < rows_; ++i) s += pow_int(at(i, k), e);
  return s;
}

std::vector<Rational> NonNegMatrix::column(std::size_t k) const {
  std::vector<Rational> c;
  c.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c.push_back(at(i, k));
  return c;
}

std::vector<Rational> NonNegMatrix::row_sums() const {
  std::vector<Rational> s;
  s.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Rational acc(0);
    for (std::size_t k = 0; k < cols_; ++k) acc += at(i, k);
    s.push_back(std::move(acc));
  }
  return s;
}

NonNegMatrix NonNegMatrix::without_row(std::size_t drop) const {
  NonNegMatrix m(rows_ - 1, cols_);
  for (std::size_t i = 0, j = 0; i < rows_; ++i) {
    if (i == drop) continue;
    for (std::size_t k = 0; k < cols_; ++k) m.set(j, k, at(i, k));
    ++j;
  }
  return m;
}

NonNegMatrix NonNegMatrix::without_col(std::size_t drop) const {
  NonNegMatrix m(rows_, cols_ - 1);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0, j = 0; k < cols_; ++k) {
      if (k == drop) continue;
      m.set(i, j++, at(i, k));
    }
  return m;
}

bool columns_pairwise_proportional(const NonNegMatrix& m) {
  // rank <= 1: every 2x2 minor against the first nonzero pivot vanishes
  std::size_t pi = 0, pk = 0;
  bool found = false;
  for (std::size_t i = 0; i < m.rows() && !found; ++i)
    for (std::size_t k = 0; k < m.cols() && !found; ++k)
      if (!m.at(i, k).is_zero()) {
        pi = i;
        pk = k;
        found = true;
      }
  if (!found) return true;  // zero matrix
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t k = 0; k < m.cols(); ++k)
      if (m.at(i, k) * m.at(pi, pk) != m.at(i, pk) * m.at(pi, k)) return false;
  return true;
}

ExponentVector ExponentVector::from(std::vector<Rational> p) {
  if (p.empty()) throw std::invalid_argument("exponents: empty");
  Rational inv_sum(0);
  for (const auto& pk : p) {
    if (pk <= Rational(1)) throw std::invalid_argument("exponents: every p_k must exceed 1");
    inv_sum += pk.reciprocal();
  }
  return ExponentVector(std::move(p), abs(inv_sum - Rational(1)));
}

bool ExponentVector::all_integer() const {
  for (const auto& pk : p_)
    if (!pk.is_integer()) return false;
  return true;
}

SortedMatrix SortedMatrix::validated(NonNegMatrix m) {
  for (std::size_t k = 0; k < m.cols(); ++k)
    for (std::size_t i = 0; i + 1 < m.rows(); ++i)
      if (m.at(i, k) < m.at(i + 1, k)) throw UnsortedError(i, k);
  return SortedMatrix(std::move(m));
}

Statement statement_of(const Instance& inst) {
  struct Visitor {
    Statement operator()(const HolderInstance&) { return Statement::Holder; }
    Statement operator()(const CbsInstance&) { return Statement::Cbs; }
    Statement operator()(const MinkowskiInstance&) { return Statement::Minkowski; }
    Statement operator()(const ChebyshevInstance&) { return Statement::Chebyshev; }
    Statement operator()(const ApplicationInstance&) { return Statement::Application; }
    Statement operator()(const MenelausInstance&) { return Statement::Menelaus; }
  };
  return std::visit(Visitor{}, inst);
}

}  // namespace ineq
