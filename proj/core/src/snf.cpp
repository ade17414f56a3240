#include "skelcov/snf.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace skelcov {

namespace {

void check_mul(long long a, long long b, long long* out) {
  if (__builtin_mul_overflow(a, b, out))
    throw std::overflow_error("integer overflow in Smith normal form");
}

}  // namespace

std::vector<long long> smith_diagonal(std::vector<std::vector<long long>> m) {
  std::size_t rows = m.size();
  std::size_t cols = rows ? m[0].size() : 0;
  std::vector<long long> diag;
  std::size_t top = 0;
  while (top < rows && top < cols) {
    // pivot: smallest nonzero absolute value in the remaining block
    std::size_t pr = top, pc = top;
    long long best = 0;
    for (std::size_t i = top; i < rows; ++i)
      for (std::size_t j = top; j < cols; ++j)
        if (m[i][j] != 0 && (best == 0 || std::llabs(m[i][j]) < best)) {
          best = std::llabs(m[i][j]);
          pr = i;
          pc = j;
        }
    if (best == 0) break;
    std::swap(m[top], m[pr]);
    for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][top], m[i][pc]);

    bool clean = true;
    for (std::size_t i = top + 1; i < rows && clean; ++i) {
      long long q = m[i][top] / m[top][top];
      if (q != 0)
        for (std::size_t j = top; j < cols; ++j) {
          long long t;
          check_mul(q, m[top][j], &t);
          m[i][j] -= t;
        }
      if (m[i][top] != 0) clean = false;
    }
    if (clean)
      for (std::size_t j = top + 1; j < cols && clean; ++j) {
        long long q = m[top][j] / m[top][top];
        if (q != 0)
          for (std::size_t i = top; i < rows; ++i) {
            long long t;
            check_mul(q, m[i][top], &t);
            m[i][j] -= t;
          }
        if (m[top][j] != 0) clean = false;
      }
    if (!clean) continue;  // repeat with a smaller pivot in the block

    diag.push_back(std::llabs(m[top][top]));
    ++top;
  }
  // enforce the divisibility chain
  for (std::size_t i = 0; i + 1 < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j)
      if (diag[j] % diag[i] != 0) {
        long long g = std::gcd(diag[i], diag[j]);
        long long l = diag[i] / g * diag[j];
        diag[i] = g;
        diag[j] = l;
      }
  std::sort(diag.begin(), diag.end());
  return diag;
}

unsigned long long hom_count_to_cyclic(
    const std::vector<std::vector<long long>>& relations, int generators,
    long long n) {
  if (n < 1) throw std::invalid_argument("modulus must be positive");
  auto diag = smith_diagonal(relations);
  int rank = 0;
  unsigned long long count = 1;
  for (long long d : diag) {
    if (d == 0) continue;
    ++rank;
    unsigned long long g = std::gcd(d, n);
    if (__builtin_mul_overflow(count, g, &count))
      throw std::overflow_error("hom count exceeds 64-bit range");
  }
  for (int i = 0; i < generators - rank; ++i)
    if (__builtin_mul_overflow(count, static_cast<unsigned long long>(n), &count))
      throw std::overflow_error("hom count exceeds 64-bit range");
  return count;
}

}  // namespace skelcov
