#pragma once

#include <vector>

namespace skelcov {

/// Diagonal of the Smith normal form of an integer matrix (rows = relations).
/// Entries are non-negative and each divides the next. Small matrices only.
std::vector<long long> smith_diagonal(std::vector<std::vector<long long>> matrix);

/// |Hom(Z^generators / <rows of relations>, Z/n)| via the Smith form:
/// product of gcd(d_i, n) over the diagonal times n^(generators - rank).
unsigned long long hom_count_to_cyclic(
    const std::vector<std::vector<long long>>& relations, int generators,
    long long n);

}  // namespace skelcov
