#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace gainbalance {

using BigInt = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<BigInt>>;

IntMatrix identity_matrix(std::size_t n);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b, std::size_t inner);

/// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... | d_r > 0.
struct SmithForm {
  std::size_t rows = 0;
  std::size_t cols = 0;
  IntMatrix diagonal;  // rows x cols
  IntMatrix left;      // rows x rows
  IntMatrix right;     // cols x cols
  std::vector<BigInt> invariants;  // the nonzero diagonal entries

  std::size_t rank() const { return invariants.size(); }
};

/// `a` must be rectangular; `cols` is given so an empty row list still has a
/// shape.
SmithForm smith_normal_form(const IntMatrix& a, std::size_t cols);

}  // namespace gainbalance
