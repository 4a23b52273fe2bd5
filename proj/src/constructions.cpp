#include "cardnet/constructions.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

#include "cardnet/checked_int.hpp"

namespace cardnet {

namespace {

void require_pow2(int v, const char* what) {
  if (!is_power_of_two(v)) {
    std::ostringstream msg;
    msg << what << " must be a power of two, got " << v;
    throw std::invalid_argument(msg.str());
  }
}

void require_even(int v, const char* what) {
  if (v < 2 || v % 2 != 0) {
    std::ostringstream msg;
    msg << what << " must be even and positive, got " << v;
    throw std::invalid_argument(msg.str());
  }
}

// All emitters below work on 1-based channels shifted by `off`.

void emit_max(std::vector<Comparator>& out, int n, int off) {
  for (int step = 1; step < n; step *= 2)
    for (int i = 1; i + step <= n; i += 2 * step)
      out.push_back({off + i, off + i + step});
}

void emit_split(std::vector<Comparator>& out, int n, int off) {
  for (int i = 1; i <= n / 2; ++i) out.push_back({off + i, off + n / 2 + i});
}

void emit_bit_merge(std::vector<Comparator>& out, int n, int off) {
  if (n <= 1) return;
  emit_split(out, n, off);
  emit_bit_merge(out, n / 2, off);
  emit_bit_merge(out, n / 2, off + n / 2);
}

// Batcher's odd-even merge of two sorted halves of [lo+1, lo+m]; `r` is the
// stride between merged subsequences.
void emit_oe_merge(std::vector<Comparator>& out, int lo, int m, int r) {
  const int step = 2 * r;
  if (step < m) {
    emit_oe_merge(out, lo, m, step);
    emit_oe_merge(out, lo + r, m, step);
    for (int i = lo + r; i + r < lo + m; i += step) out.push_back({i + 1, i + r + 1});
  } else {
    out.push_back({lo + 1, lo + r + 1});
  }
}

void emit_oe_sort(std::vector<Comparator>& out, int lo, int m) {
  if (m <= 1) return;
  emit_oe_sort(out, lo, m / 2);
  emit_oe_sort(out, lo + m / 2, m / 2);
  emit_oe_merge(out, lo, m, 1);
}

// Front stage shared by both mergers: a bitonic splitter across the window
// suffix <l_{k/2+1..k}, r_{1..k/2}>, leaving a v-shaped s-dominating
// sequence on channels 1..k. Window layout: l on 1..k, r on k+1..3k/2.
void emit_merge_front(std::vector<Comparator>& out, int k, int off) {
  for (int v = 1; v <= k / 2; ++v)
    out.push_back({off + k / 2 + v, off + 3 * k / 2 + 1 - v});
}

void emit_half_split(std::vector<Comparator>& out, int k, int off) {
  for (int i = 1; i <= k / 4; ++i) out.push_back({off + k / 4 + i, off + 3 * k / 4 + i});
}

// Sorts a v-shaped s-dominating sequence on channels off+1..off+k using
// half splitters on the left halves; base case k=2 needs no comparator.
void emit_half_bit_merge(std::vector<Comparator>& out, int k, int off) {
  if (k <= 2) return;
  emit_half_split(out, k, off);
  emit_half_bit_merge(out, k / 2, off);
  emit_bit_merge(out, k / 2, off + k / 2);
}

void emit_merger(std::vector<Comparator>& out, int k, int off, MergerKind kind) {
  emit_merge_front(out, k, off);
  if (kind == MergerKind::Bitonic)
    emit_bit_merge(out, k, off);
  else
    emit_half_bit_merge(out, k, off);
}

// Pairwise selection recursion over channels off+1..off+n. The merger acts
// on the window <l_1..l_k, r_1..r_{k/2}> = channels off+1..off+k and
// off+n/2+1..off+n/2+k/2; its window channel c maps to off+c for c <= k and
// to off+n/2+(c-k) above.
void emit_pw_sel(std::vector<Comparator>& out, int n, int k, int off, MergerKind kind) {
  if (k == 1) {
    emit_max(out, n, off);
    return;
  }
  if (k == n) {
    emit_oe_sort(out, off, n);
    return;
  }
  emit_split(out, n, off);
  emit_pw_sel(out, n / 2, k, off, kind);
  emit_pw_sel(out, n / 2, k / 2, off + n / 2, kind);

  std::vector<Comparator> merger;
  emit_merger(merger, k, 0, kind);
  for (const Comparator& c : merger) {
    auto map = [&](int ch) { return ch <= k ? off + ch : off + n / 2 + (ch - k); };
    out.push_back({map(c.hi), map(c.lo)});
  }
}

}  // namespace

ComparatorNetwork make_max(int n) {
  require_pow2(n, "max width");
  ComparatorNetwork net(n);
  std::vector<Comparator> comps;
  emit_max(comps, n, 0);
  for (const Comparator& c : comps) net.add(c);
  return net;
}

ComparatorNetwork make_split(int n) {
  require_even(n, "splitter width");
  ComparatorNetwork net(n);
  for (int i = 1; i <= n / 2; ++i) net.add({i, n / 2 + i});
  return net;
}

ComparatorNetwork make_bit_split(int n) {
  require_even(n, "bitonic splitter width");
  ComparatorNetwork net(n);
  for (int i = 1; i <= n / 2; ++i) net.add({i, n - i + 1});
  return net;
}

ComparatorNetwork make_half_split(int k) {
  require_pow2(k, "half splitter width");
  if (k < 4) throw std::invalid_argument("half splitter needs width >= 4");
  ComparatorNetwork net(k);
  std::vector<Comparator> comps;
  emit_half_split(comps, k, 0);
  for (const Comparator& c : comps) net.add(c);
  return net;
}

ComparatorNetwork make_bit_merge(int n) {
  require_pow2(n, "bitonic merger width");
  ComparatorNetwork net(n);
  std::vector<Comparator> comps;
  emit_bit_merge(comps, n, 0);
  for (const Comparator& c : comps) net.add(c);
  return net;
}

ComparatorNetwork make_oe_sort(int n) {
  require_pow2(n, "sorter width");
  ComparatorNetwork net(n);
  std::vector<Comparator> comps;
  emit_oe_sort(comps, 0, n);
  for (const Comparator& c : comps) net.add(c);
  return net;
}

ComparatorNetwork make_bit_sel(int n, int k) {
  require_pow2(n, "selection width n");
  require_pow2(k, "selection count k");
  if (k > n) throw std::invalid_argument("selection count k must not exceed n");

  ComparatorNetwork net(n);
  std::vector<Comparator> comps;

  // Sort each of the n/k consecutive blocks.
  std::vector<int> block_off;
  for (int off = 0; off < n; off += k) {
    block_off.push_back(off);
    emit_oe_sort(comps, off, k);
  }

  // Each round pairs adjacent surviving blocks, keeps the dominating half
  // of the bitonic split and re-sorts it in place of the left block.
  while (block_off.size() > 1) {
    std::vector<int> next;
    for (std::size_t i = 0; i + 1 < block_off.size(); i += 2) {
      const int a = block_off[i], b = block_off[i + 1];
      for (int j = 1; j <= k; ++j) comps.push_back({a + j, b + k - j + 1});
      emit_bit_merge(comps, k, a);
      next.push_back(a);
    }
    block_off = std::move(next);
  }

  for (const Comparator& c : comps) net.add(c);
  return net;
}

ComparatorNetwork make_pw_merger(int k, MergerKind kind) {
  require_pow2(k, "merger parameter k");
  if (k < 2) throw std::invalid_argument("merger needs k >= 2");
  ComparatorNetwork net(3 * k / 2);
  std::vector<Comparator> comps;
  emit_merger(comps, k, 0, kind);
  for (const Comparator& c : comps) net.add(c);
  return net;
}

ComparatorNetwork make_pw_bit_merge(int k) { return make_pw_merger(k, MergerKind::Bitonic); }

ComparatorNetwork make_pw_hbit_merge(int k) {
  return make_pw_merger(k, MergerKind::HalfBitonic);
}

ComparatorNetwork make_pw_hbit_sel(int n, int k, MergerKind merger) {
  require_pow2(n, "selection width n");
  require_pow2(k, "selection count k");
  if (k > n) throw std::invalid_argument("selection count k must not exceed n");
  ComparatorNetwork net(n);
  std::vector<Comparator> comps;
  emit_pw_sel(comps, n, k, 0, merger);
  for (const Comparator& c : comps) net.add(c);
  return net;
}

}  // namespace cardnet
