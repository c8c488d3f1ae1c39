#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "fermat/exact_arith.hpp"

namespace fermat {

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<const Integer> entries() const { return data_; }

  IntMatrix transposed() const;
  bool is_zero() const;

  /// Exact determinant (Bareiss). Square matrices only.
  Integer determinant() const;

  /// Rows separated by ';', entries by ','. Example: "2,-3,0;0,3,-7".
  static IntMatrix parse(const std::string& text);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// U * A * V == D with U, V unimodular and D in Smith normal form.
struct SNFResult {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;

  /// Number of nonzero diagonal entries of D.
  std::size_t rank() const;
  std::vector<Integer> diagonal() const;
};

SNFResult smith_normal_form(const IntMatrix& a);

/// Cokernel structure Z^rows / A Z^cols.
struct InvariantFactors {
  std::vector<Integer> factors;  // entries > 1, each dividing the next
  std::size_t free_rank = 0;
};

InvariantFactors invariant_factors(const IntMatrix& a);

/// Basis of {v in Z^cols : A v = 0}; every vector primitive with first
/// nonzero entry positive.
std::vector<std::vector<Integer>> kernel_basis(const IntMatrix& a);

/// [[a,-b,0],[0,b,-c],[-a,0,c]]
IntMatrix m_matrix(const Integer& a, const Integer& b, const Integer& c);
/// [[a,0,0],[0,b,0],[0,0,c],[1,1,1]]
IntMatrix j_matrix(const Integer& a, const Integer& b, const Integer& c);

}  // namespace fermat
