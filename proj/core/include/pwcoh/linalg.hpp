#pragma once

// Dense exact linear algebra over Rational. Elimination is fraction-free:
// rows are scaled to integers and reduced Bareiss-style with row-content
// normalization, so intermediate entries stay integral and bounded; the
// reduced echelon form is recovered exactly at the end. Pivoting scans in a
// fixed order, which makes every derived basis deterministic.

#include <optional>
#include <vector>

#include "pwcoh/rational.hpp"

namespace pwcoh {

class RationalMatrix {
 public:
  RationalMatrix() : rows_(0), cols_(0) {}
  RationalMatrix(int rows, int cols);
  static RationalMatrix identity(int n);
  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static RationalMatrix from_columns(const std::vector<std::vector<Rational>>& cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Rational& at(int i, int j) const { return data_[index(i, j)]; }
  Rational& at(int i, int j) { return data_[index(i, j)]; }

  std::vector<Rational> row(int i) const;
  std::vector<Rational> column(int j) const;
  std::vector<std::vector<Rational>> columns() const;

  RationalMatrix transposed() const;
  RationalMatrix operator*(const RationalMatrix& o) const;
  RationalMatrix operator+(const RationalMatrix& o) const;
  RationalMatrix operator-(const RationalMatrix& o) const;
  std::vector<Rational> apply(const std::vector<Rational>& x) const;
  bool is_zero() const;
  bool operator==(const RationalMatrix&) const = default;

 private:
  int rows_, cols_;
  std::vector<Rational> data_;
  int index(int i, int j) const;
};

RationalMatrix hstack(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix vstack(const RationalMatrix& a, const RationalMatrix& b);

struct EchelonForm {
  int rank = 0;
  std::vector<int> pivot_cols;
  RationalMatrix rref;  // reduced row echelon form, rational entries
};

EchelonForm row_reduce(const RationalMatrix& m);

int rank(const RationalMatrix& m);

// Canonical nullspace basis read off the RREF: one vector per free column,
// with a 1 in the free slot. Order follows the free columns.
std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m);

// Least structure that solves generators * x = target exactly; nullopt when
// target is outside the column span. Free coordinates are set to zero.
std::optional<std::vector<Rational>> solve_in_span(const std::vector<Rational>& target,
                                                   const RationalMatrix& generators);

// One elimination, many targets. Entry i is nullopt if column i of targets
// is outside the span.
std::vector<std::optional<std::vector<Rational>>> solve_in_span_many(
    const RationalMatrix& targets, const RationalMatrix& generators);

// Incremental independence filter; add() keeps v iff it enlarges the span.
class EchelonAccumulator {
 public:
  explicit EchelonAccumulator(int ambient) : ambient_(ambient) {}
  bool add(std::vector<Rational> v);
  int rank() const { return static_cast<int>(rows_.size()); }
  int ambient() const { return ambient_; }

 private:
  int ambient_;
  std::vector<int> pivots_;
  std::vector<std::vector<Rational>> rows_;
};

struct QuotientBasis {
  int ambient = 0;
  std::vector<std::vector<Rational>> cocycles;       // basis of the cocycle span
  std::vector<std::vector<Rational>> coboundaries;   // basis of the coboundary span
  std::vector<std::vector<Rational>> representatives;  // complete coboundaries to cocycles
};

// Columns of the inputs span cocycles resp. coboundaries; the coboundary
// span must sit inside the cocycle span or the call throws.
QuotientBasis quotient_basis(const RationalMatrix& cocycle_columns,
                             const RationalMatrix& coboundary_columns);

}  // namespace pwcoh
