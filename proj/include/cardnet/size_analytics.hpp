// Closed-form and recursive comparator counts for every network family,
// their consistency relations, and the CSV comparison table.
//
// Two argument conventions coexist, mirroring how the formulas are used:
// the size_* functions take literal widths (n, k both powers of two), while
// sd_*, s_coeff, p_unfold, upper_bound and sd_half take base-2 logarithms
// (so n stands for a network of width 2^n). Each declaration states which
// one it uses. All arithmetic is overflow-checked; ratios alone are floats.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "cardnet/rational.hpp"

namespace cardnet {

// ---- literal-width formulas -------------------------------------------

// Batcher odd-even sort: (log^2 n - log n + 4) * n/4 - 1.
std::int64_t size_oe_sort(std::int64_t n);

// Bitonic selection network:
// n*log^2(k)/4 + n*log(k)/4 + 2n - k*log(k)/2 - k - n/k.
std::int64_t size_bit_sel(std::int64_t n, std::int64_t k);

// Pairwise selection recursions; they differ only in the merger cost
// (k*log k - k + 1 for the original, k*log(k)/2 for the improved one).
std::int64_t size_pw_sel(std::int64_t n, std::int64_t k);
std::int64_t size_pw_hbit_sel(std::int64_t n, std::int64_t k);

// One recursion level of the improved network with both recursive calls
// replaced by bitonic selection; requires 1 < k < n.
std::int64_t size_aux_sel(std::int64_t n, std::int64_t k);

// ---- log-coordinate formulas (N = 2^n, K = 2^k) -------------------------

// Comparator-count difference between the original and improved pairwise
// selection networks, as a recursion and in closed form; 0 <= k <= n.
std::int64_t sd_recursive(int n, int k);
std::int64_t sd_closed(int n, int k);
// S_{n,k} = sum_j C(n-k+j, j) * 2^(k-j), the closed form's coefficient.
std::int64_t s_coeff(int n, int k);
// The difference at K = N/2: N*(log N - 4)/2 + log N + 2; argument is log N.
std::int64_t sd_half(int n);

// Unfolds the improved-network recursion m levels; equal for every legal
// 0 <= m <= min(k, n-k).
std::int64_t p_unfold(int n, int k, int m);
// Closed upper bound on p_unfold at m = min(k, n-k), exact rational.
Rational upper_bound(int n, int k);

// ---- comparison table ----------------------------------------------------

struct SizeRow {
  int log_n = 0;
  int log_k = 0;
  std::int64_t pw_sel = 0;
  std::int64_t pw_hbit_sel = 0;
  std::int64_t bit_sel = 0;
  Rational upper;
  double codish_ratio = 0.0;  // (pw_sel - pw_hbit_sel) / pw_hbit_sel
  double upper_ratio = 0.0;   // (upper - pw_hbit_sel) / pw_hbit_sel
};

struct SizeTable {
  std::vector<SizeRow> rows;  // sorted by (log_n, log_k)
};

// Rows for all 1 <= log k < log n <= max_log_n (max 31; 64-bit exact).
SizeTable build_size_table(int max_log_n);

// CSV schema: log_n,log_k,pw_sel,pw_hbit_sel,bit_sel,upper_bound,
// codish_ratio,upper_ratio with six decimal places for the real columns.
void write_csv(const SizeTable& table, std::ostream& out);

SizeTable emit_size_table(int max_log_n, std::ostream& out);

}  // namespace cardnet
