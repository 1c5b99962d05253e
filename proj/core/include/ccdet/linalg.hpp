#pragma once

#include "ccdet/rational.hpp"

#include <optional>
#include <vector>

namespace ccdet {

using QVector = std::vector<Rational>;
using QMatrix = std::vector<QVector>; // row major

// Reduced row echelon form in place; returns the pivot columns.
std::vector<int> rref(QMatrix& m);

int rank(QMatrix m);

// One solution of A x = b when the system is consistent.
std::optional<QVector> solve(const QMatrix& a, const QVector& b);

// Basis of the right nullspace of A.
std::vector<QVector> nullspace(const QMatrix& a);

} // namespace ccdet
