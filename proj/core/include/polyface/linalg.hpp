#pragma once

#include <vector>

#include "polyface/numbers.hpp"

namespace polyface::linalg {

using VecQ = std::vector<Rat>;
using MatQ = std::vector<VecQ>;  // row-major, rectangular

Rat dot(const VecQ& a, const VecQ& b);

/// Row rank by exact Gaussian elimination.
int rank(MatQ m);

/// Basis of the right kernel {x : m x = 0}, one basis vector per row.
MatQ kernel_basis(MatQ m);

/// Dimension of the affine hull of a point set (-1 for the empty set).
int affine_rank(const std::vector<VecQ>& points);

/// rank of the matrix whose rows are rows(a) followed by rows(b).
int stacked_rank(const MatQ& a, const MatQ& b);

}  // namespace polyface::linalg
