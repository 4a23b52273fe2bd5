// Generators for every network family: max trees, splitters, mergers,
// Batcher's odd-even sorter, and the selection networks built from them.
//
// All constructors return flat comparator sequences; recursion is realized
// by concatenation with channel offsets, so sizes and serialization follow
// directly from the comparator list.
#pragma once

#include "cardnet/network.hpp"

namespace cardnet {

// Places the maximum on channel 1. n must be a power of two. Size n-1.
ComparatorNetwork make_max(int n);

// Comparators (i, n/2+i); after it the left half pointwise dominates the
// right half. n must be even. Size n/2.
ComparatorNetwork make_split(int n);

// Comparators (i, n-i+1). Given two sorted halves, both output halves are
// bitonic and the left one dominates elementwise. n must be even. Size n/2.
ComparatorNetwork make_bit_split(int n);

// The splitter with its first k/4 comparators removed: (k/4+i, 3k/4+i) for
// i = 1..k/4. k must be a power of two, k >= 4. Size k/4.
ComparatorNetwork make_half_split(int k);

// Sorts any bitonic input. n must be a power of two. Size n*log(n)/2.
ComparatorNetwork make_bit_merge(int n);

// Batcher's odd-even mergesort. n must be a power of two.
// Size (log^2 n - log n + 4)*n/4 - 1.
ComparatorNetwork make_oe_sort(int n);

// Block-sorting selection network: sorts n/k blocks of width k, then
// repeatedly halves the block count with bit_split + bit_merge rounds.
// n, k powers of two, k <= n.
ComparatorNetwork make_bit_sel(int n, int k);

// Merger variants. Both operate on a 3k/2-channel window: channels 1..k
// hold a sorted left part, channels k+1..3k/2 a sorted right part whose
// elements are dominated pointwise by channels 1..k/2. The first k outputs
// are the k largest window elements in sorted order.
enum class MergerKind {
  Bitonic,      // bit_split front stage + full bitonic merge; size k/2 + k*log(k)/2
  HalfBitonic,  // bit_split front stage + half-splitter merge; size k*log(k)/2
};

ComparatorNetwork make_pw_bit_merge(int k);
ComparatorNetwork make_pw_hbit_merge(int k);
ComparatorNetwork make_pw_merger(int k, MergerKind kind);

// Pairwise selection network with the improved merger (the default), or the
// plain bitonic-merger variant. n, k powers of two, 1 <= k <= n.
ComparatorNetwork make_pw_hbit_sel(int n, int k,
                                   MergerKind merger = MergerKind::HalfBitonic);

}  // namespace cardnet
