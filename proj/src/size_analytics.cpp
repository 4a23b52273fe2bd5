#include "cardnet/size_analytics.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cardnet/checked_int.hpp"

namespace cardnet {

namespace {

using std::int64_t;

void require_pow2_pair(int64_t n, int64_t k) {
  if (!is_power_of_two(n) || !is_power_of_two(k))
    throw std::invalid_argument("n and k must be powers of two");
  if (k > n) throw std::invalid_argument("k must not exceed n");
}

int64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = checked_mul(r, n - k + i) / i;
  return r;
}

// Shared pairwise-selection recursion in log coordinates; merger_cost takes
// log K and returns the comparator count of one merging step.
template <typename MergerCost>
int64_t pw_size_log(int log_n, int log_k, MergerCost merger_cost) {
  std::map<std::pair<int, int>, int64_t> memo;
  auto rec = [&](auto&& self, int ln, int lk) -> int64_t {
    if (lk == 0) return checked_sub(checked_pow2(ln), 1);      // max tree
    if (lk == ln) return size_oe_sort(checked_pow2(ln));       // full sort
    const auto key = std::make_pair(ln, lk);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    int64_t total = self(self, ln - 1, lk);
    total = checked_add(total, self(self, ln - 1, lk - 1));
    total = checked_add(total, checked_pow2(ln - 1));  // splitter
    total = checked_add(total, merger_cost(lk));
    memo[key] = total;
    return total;
  };
  return rec(rec, log_n, log_k);
}

int64_t merger_cost_pw(int lk) {
  // k*log k - k + 1
  const int64_t k = checked_pow2(lk);
  return checked_add(checked_sub(checked_mul(k, lk), k), 1);
}

int64_t merger_cost_hbit(int lk) {
  // k*log(k)/2
  return checked_mul(checked_pow2(lk - 1), lk);
}

}  // namespace

int64_t size_oe_sort(int64_t n) {
  if (!is_power_of_two(n)) throw std::invalid_argument("n must be a power of two");
  const int64_t l = ilog2(n);
  const int64_t poly = checked_add(checked_sub(checked_mul(l, l), l), 4);
  return checked_sub(checked_mul(poly, n) / 4, 1);
}

int64_t size_bit_sel(int64_t n, int64_t k) {
  require_pow2_pair(n, k);
  const int64_t lk = ilog2(k);
  // Summed over a common denominator of 4 to stay in integers.
  int64_t num = checked_mul(checked_mul(n, lk), lk);
  num = checked_add(num, checked_mul(n, lk));
  num = checked_add(num, checked_mul(8, n));
  num = checked_sub(num, checked_mul(2, checked_mul(k, lk)));
  num = checked_sub(num, checked_mul(4, k));
  num = checked_sub(num, checked_mul(4, n / k));
  return num / 4;
}

int64_t size_pw_sel(int64_t n, int64_t k) {
  require_pow2_pair(n, k);
  return pw_size_log(ilog2(n), ilog2(k), merger_cost_pw);
}

int64_t size_pw_hbit_sel(int64_t n, int64_t k) {
  require_pow2_pair(n, k);
  return pw_size_log(ilog2(n), ilog2(k), merger_cost_hbit);
}

int64_t size_aux_sel(int64_t n, int64_t k) {
  require_pow2_pair(n, k);
  if (k <= 1 || k >= n) throw std::invalid_argument("aux size needs 1 < k < n");
  int64_t total = size_bit_sel(n / 2, k);
  total = checked_add(total, size_bit_sel(n / 2, k / 2));
  total = checked_add(total, n / 2);
  total = checked_add(total, merger_cost_hbit(ilog2(k)));
  return total;
}

int64_t sd_recursive(int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("sd needs 0 <= k <= n");
  // Bottom-up over the (n, k) grid.
  std::vector<std::vector<int64_t>> sd(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    sd[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(std::min(i, k)) + 1);
    for (int j = 0; j <= std::min(i, k); ++j) {
      int64_t& cell = sd[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (j == 0 || j == i) {
        cell = 0;
        continue;
      }
      // 2^(j-1)*j - 2^j + 1, the per-level merger saving.
      int64_t step = checked_mul(checked_pow2(j - 1), j);
      step = checked_add(checked_sub(step, checked_pow2(j)), 1);
      cell = checked_add(step,
                         checked_add(sd[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)],
                                     sd[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]));
    }
  }
  return sd[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

int64_t s_coeff(int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("s_coeff needs 0 <= k <= n");
  int64_t total = 0;
  for (int j = 0; j <= k; ++j)
    total = checked_add(total, checked_mul(binom(n - k + j, j), checked_pow2(k - j)));
  return total;
}

int64_t sd_closed(int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("sd needs 0 <= k <= n");
  // The two half-integer terms are combined over denominator 2 first.
  int64_t num = checked_mul(binom(n, k), n + 1);
  num = checked_sub(num, checked_mul(s_coeff(n, k), n - 2 * k + 1));
  const int64_t halves = num / 2;
  return checked_sub(checked_sub(halves, checked_mul(checked_pow2(k), k - 1)), 1);
}

int64_t sd_half(int n) {
  if (n < 1) throw std::invalid_argument("sd_half needs log N >= 1");
  const int64_t pow = checked_pow2(n);
  return checked_add(checked_mul(pow, n - 4) / 2, static_cast<int64_t>(n) + 2);
}

int64_t p_unfold(int n, int k, int m) {
  if (k < 0 || k > n) throw std::invalid_argument("p_unfold needs 0 <= k <= n");
  if (m < 0 || m > std::min(k, n - k))
    throw std::invalid_argument("p_unfold needs 0 <= m <= min(k, n-k)");
  int64_t total = 0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= i; ++j) {
      int64_t term = checked_mul(k - j, checked_pow2(k - j - 1));
      term = checked_add(term, checked_pow2(n - i - 1));
      total = checked_add(total, checked_mul(binom(i, j), term));
    }
  for (int i = 0; i <= m; ++i) {
    const int64_t tail = size_pw_hbit_sel(checked_pow2(n - m), checked_pow2(k - i));
    total = checked_add(total, checked_mul(binom(m, i), tail));
  }
  return total;
}

Rational upper_bound(int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("upper_bound needs 0 <= k <= n");
  const int m = std::min(k, n - k);
  const int64_t pow3m = checked_pow(3, m);
  const int64_t quad = 4 * static_cast<int64_t>(k) - 2 * m - 7;
  const Rational term1(
      checked_mul(checked_pow2(n), checked_add(checked_mul(quad, quad), 72 * static_cast<int64_t>(k) + 79)),
      64);
  const Rational term2(checked_mul(checked_mul(checked_pow2(k), pow3m), 3 * static_cast<int64_t>(k) - m),
                       checked_mul(6, checked_pow2(m)));
  const Rational term3(checked_mul(checked_pow2(k), static_cast<int64_t>(k) + 1));
  const Rational term4(checked_mul(checked_pow2(n - k), pow3m), checked_pow2(m));
  return term1 + term2 - term3 - term4;
}

SizeTable build_size_table(int max_log_n) {
  if (max_log_n < 2 || max_log_n > 31)
    throw std::invalid_argument("max_log_n must be in [2, 31]");
  SizeTable table;
  for (int ln = 2; ln <= max_log_n; ++ln)
    for (int lk = 1; lk < ln; ++lk) {
      SizeRow row;
      row.log_n = ln;
      row.log_k = lk;
      const int64_t n = checked_pow2(ln), k = checked_pow2(lk);
      row.pw_sel = size_pw_sel(n, k);
      row.pw_hbit_sel = size_pw_hbit_sel(n, k);
      row.bit_sel = size_bit_sel(n, k);
      row.upper = upper_bound(ln, lk);
      if (row.upper < Rational(row.pw_hbit_sel))
        throw std::logic_error("size table: upper bound fell below the network size");
      const double hbit = static_cast<double>(row.pw_hbit_sel);
      row.codish_ratio = static_cast<double>(row.pw_sel - row.pw_hbit_sel) / hbit;
      row.upper_ratio = (row.upper - Rational(row.pw_hbit_sel)).to_double() / hbit;
      table.rows.push_back(row);
    }
  return table;
}

void write_csv(const SizeTable& table, std::ostream& out) {
  out << "log_n,log_k,pw_sel,pw_hbit_sel,bit_sel,upper_bound,codish_ratio,upper_ratio\n";
  char buf[96];
  for (const SizeRow& row : table.rows) {
    out << row.log_n << ',' << row.log_k << ',' << row.pw_sel << ',' << row.pw_hbit_sel
        << ',' << row.bit_sel << ',';
    std::snprintf(buf, sizeof buf, "%.6f,%.6f,%.6f", row.upper.to_double(),
                  row.codish_ratio, row.upper_ratio);
    out << buf << '\n';
  }
}

SizeTable emit_size_table(int max_log_n, std::ostream& out) {
  SizeTable table = build_size_table(max_log_n);
  write_csv(table, out);
  return table;
}

}  // namespace cardnet
