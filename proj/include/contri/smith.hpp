#pragma once

#include <vector>

#include <Eigen/SparseCore>

#include "contri/integer.hpp"

namespace contri {

/// Nonzero invariant factors d1 | d2 | ... | d_rank, all positive.
struct SmithForm {
  std::vector<Integer> factors;
  std::size_t rank = 0;

  std::vector<Integer> torsion() const;  // factors > 1
};

/// left * m * right == diagonal, with left and right unimodular.
struct SmithDecomposition {
  IntMatrix left;
  IntMatrix diagonal;
  IntMatrix right;
  SmithForm form;
};

SmithDecomposition smith_decomposition(const IntMatrix& m);
SmithForm smith_normal_form(const IntMatrix& m);

/// Unit-pivot sparse elimination, then a dense Smith form on whatever remains.
SmithForm smith_normal_form(const Eigen::SparseMatrix<int>& m);

IntMatrix to_int_matrix(const Eigen::SparseMatrix<int>& m);

}  // namespace contri
