#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "dlspec/spectral.hpp"

namespace dlspec {

namespace {

__extension__ typedef __int128 Int128;

// Fraction-free Gaussian elimination with row pivoting. Every intermediate
// entry is a minor of the input, so the division by the previous pivot is
// exact. Columns without a usable pivot are skipped; the number of pivots
// found is the rank.
//
// The 64-bit variant returns nullopt as soon as an intermediate leaves the
// int64 range; callers then redo the elimination with GMP integers.
std::optional<int> bareiss_rank_int64(std::vector<std::int64_t> a, int rows, int cols) {
  auto at = [&](int i, int j) -> std::int64_t& { return a[static_cast<std::size_t>(i) * cols + j]; };
  std::int64_t prev = 1;
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = rank;
    while (pivot < rows && at(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank)
      for (int j = 0; j < cols; ++j) std::swap(at(pivot, j), at(rank, j));
    const std::int64_t p = at(rank, c);
    for (int i = rank + 1; i < rows; ++i) {
      const std::int64_t f = at(i, c);
      for (int j = c + 1; j < cols; ++j) {
        const Int128 num = static_cast<Int128>(p) * at(i, j) - static_cast<Int128>(f) * at(rank, j);
        const Int128 q = num / prev;
        if (q > std::numeric_limits<std::int64_t>::max() || q < std::numeric_limits<std::int64_t>::min()) {
          return std::nullopt;
        }
        at(i, j) = static_cast<std::int64_t>(q);
      }
      at(i, c) = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

int bareiss_rank_mpz(const std::vector<std::int64_t>& input, int rows, int cols) {
  std::vector<mpz_class> a;
  a.reserve(input.size());
  for (auto x : input) a.emplace_back(static_cast<long>(x));
  auto at = [&](int i, int j) -> mpz_class& { return a[static_cast<std::size_t>(i) * cols + j]; };
  mpz_class prev = 1;
  mpz_class t;
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = rank;
    while (pivot < rows && at(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank)
      for (int j = 0; j < cols; ++j) std::swap(at(pivot, j), at(rank, j));
    for (int i = rank + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        t = at(rank, c) * at(i, j) - at(i, c) * at(rank, j);
        mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      at(i, c) = 0;
    }
    prev = at(rank, c);
    ++rank;
  }
  return rank;
}

}  // namespace

int exact_rank(const SymmetricIntMatrix& m) {
  const int n = m.size();
  std::vector<std::int64_t> a(m.values().begin(), m.values().end());
  if (auto r = bareiss_rank_int64(a, n, n)) return *r;
  return bareiss_rank_mpz(a, n, n);
}

int exact_integer_multiplicity(const SymmetricIntMatrix& m, std::int64_t lambda) {
  SymmetricIntMatrix shifted = m;
  for (int i = 0; i < m.size(); ++i) shifted.set(i, i, m(i, i) - lambda);
  return m.size() - exact_rank(shifted);
}

}  // namespace dlspec
