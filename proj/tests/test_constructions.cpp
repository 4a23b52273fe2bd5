#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "cardnet/checked_int.hpp"
#include "cardnet/constructions.hpp"
#include "cardnet/network.hpp"
#include "generators.hpp"

using namespace cardnet;

namespace {

ValueSeq binary_input(int n, unsigned word) {
  ValueSeq s(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) s[static_cast<std::size_t>(i)] = (word >> (n - 1 - i)) & 1u;
  return s;
}

ValueSeq sorted_desc(ValueSeq s) {
  std::sort(s.begin(), s.end(), std::greater<>());
  return s;
}

ValueSeq left_half(const ValueSeq& s) {
  return ValueSeq(s.begin(), s.begin() + static_cast<long>(s.size() / 2));
}

ValueSeq right_half(const ValueSeq& s) {
  return ValueSeq(s.begin() + static_cast<long>(s.size() / 2), s.end());
}

}  // namespace

TEST_CASE("max network shape and behavior") {
  CHECK(make_max(1).size() == 0);
  CHECK(make_max(2).comparators() == std::vector<Comparator>{{1, 2}});
  const ComparatorNetwork max4 = make_max(4);
  CHECK(max4.size() == 3);
  CHECK(max4.evaluate({1, 3, 2, 0})[0] == 3);
  CHECK(max4.evaluate({0, 1, 0, 1})[0] == 1);
  for (int n : {2, 4, 8, 16, 32}) CHECK(make_max(n).size() == static_cast<std::size_t>(n) - 1);
  CHECK_THROWS_AS(make_max(6), std::invalid_argument);
  CHECK_THROWS_AS(make_max(0), std::invalid_argument);
}

TEST_CASE("splitter layout") {
  CHECK(make_split(2).comparators() == std::vector<Comparator>{{1, 2}});
  CHECK(make_split(4).comparators() == std::vector<Comparator>{{1, 3}, {2, 4}});
  CHECK(make_split(8).size() == 4);
  CHECK_THROWS_AS(make_split(5), std::invalid_argument);
}

TEST_CASE("splitter output: left half dominates right half") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 2 * (1 + static_cast<int>(rng() % 8));
    const ValueSeq out = make_split(n).evaluate(testgen::random_seq(rng, n, 31));
    CHECK(dominates(left_half(out), right_half(out)));
  }
}

TEST_CASE("bitonic splitter layout and merge of two sorted halves") {
  CHECK(make_bit_split(2).comparators() == std::vector<Comparator>{{1, 2}});
  CHECK(make_bit_split(4).comparators() == std::vector<Comparator>{{1, 4}, {2, 3}});
  CHECK(make_bit_split(8).size() == 4);
  CHECK(make_bit_split(4).evaluate({4, 2, 3, 1}) == ValueSeq{4, 3, 2, 1});
  CHECK_THROWS_AS(make_bit_split(3), std::invalid_argument);
}

TEST_CASE("bitonic splitter on sorted halves yields dominating bitonic halves") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 3000; ++trial) {
    const int half = 1 + static_cast<int>(rng() % 8);
    ValueSeq in = sorted_desc(testgen::random_seq(rng, half, 15));
    const ValueSeq r = sorted_desc(testgen::random_seq(rng, half, 15));
    in.insert(in.end(), r.begin(), r.end());
    const ValueSeq out = make_bit_split(2 * half).evaluate(in);
    const ValueSeq l = left_half(out), rr = right_half(out);
    CHECK(all_geq(l, rr));
    CHECK(is_bitonic(l));
    CHECK(is_bitonic(rr));
  }
}

TEST_CASE("half splitter drops the first quarter of the splitter") {
  CHECK(make_half_split(4).comparators() == std::vector<Comparator>{{2, 4}});
  CHECK(make_half_split(8).comparators() == std::vector<Comparator>{{3, 7}, {4, 8}});
  CHECK(make_half_split(16).size() == 4);
  CHECK_THROWS_AS(make_half_split(2), std::invalid_argument);
  CHECK_THROWS_AS(make_half_split(12), std::invalid_argument);

  CHECK(make_half_split(4).evaluate({5, 3, 1, 4}) == ValueSeq{5, 4, 1, 3});
  CHECK(make_split(4).evaluate({5, 3, 1, 4}) == ValueSeq{5, 4, 1, 3});
}

TEST_CASE("bitonic merger sorts bitonic inputs") {
  CHECK(make_bit_merge(2).size() == 1);
  CHECK(make_bit_merge(4).evaluate({1, 3, 4, 2}) == ValueSeq{4, 3, 2, 1});
  for (int n : {2, 4, 8, 16, 32})
    CHECK(make_bit_merge(n).size() == static_cast<std::size_t>(n) * ilog2(n) / 2);
  CHECK(make_bit_merge(8).size() == 12);
  CHECK_THROWS_AS(make_bit_merge(3), std::invalid_argument);

  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 2 << (rng() % 4);
    const ValueSeq out = make_bit_merge(n).evaluate(testgen::random_bitonic(rng, n, 15));
    CHECK(is_sorted(out));
  }
}

TEST_CASE("split of a bitonic sequence leaves two bitonic halves, left above right") {
  // Exhaustive over 0/1 sequences up to length 12, plus random integers.
  for (int n : {2, 4, 6, 8, 10, 12}) {
    const ComparatorNetwork split = make_split(n);
    for (unsigned word = 0; word < (1u << n); ++word) {
      const ValueSeq in = binary_input(n, word);
      if (!is_bitonic(in)) continue;
      const ValueSeq out = split.evaluate(in);
      CHECK(is_bitonic(left_half(out)));
      CHECK(is_bitonic(right_half(out)));
      CHECK(all_geq(left_half(out), right_half(out)));
    }
  }
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 2 << (rng() % 4);
    const ValueSeq in = testgen::random_bitonic(rng, n, 15);
    const ValueSeq out = make_split(n).evaluate(in);
    CHECK(is_bitonic(left_half(out)));
    CHECK(is_bitonic(right_half(out)));
    CHECK(all_geq(left_half(out), right_half(out)));
  }
}

TEST_CASE("half splitter equals the splitter on v-shape s-dominating inputs") {
  for (int k : {4, 8, 16}) {
    const ComparatorNetwork half = make_half_split(k), full = make_split(k);
    // Exhaustive over valid 0/1 sequences.
    for (unsigned word = 0; word < (1u << k); ++word) {
      const ValueSeq in = binary_input(k, word);
      if (!is_vshaped(in) || !is_sdominating(in)) continue;
      CHECK(half.evaluate(in) == full.evaluate(in));
    }
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 4000; ++trial) {
      const ValueSeq in = testgen::random_vshape_sdom(rng, k, 255);
      CHECK(half.evaluate(in) == full.evaluate(in));
    }
  }
}

TEST_CASE("half splitter output: v-shape s-dominating left, bitonic right, left above") {
  std::mt19937_64 rng(37);
  for (int k : {4, 8, 16}) {
    const ComparatorNetwork half = make_half_split(k);
    for (int trial = 0; trial < 4000; ++trial) {
      const ValueSeq out = half.evaluate(testgen::random_vshape_sdom(rng, k, 255));
      const ValueSeq l = left_half(out), r = right_half(out);
      CHECK(is_vshaped(l));
      CHECK(is_sdominating(l));
      CHECK(is_bitonic(r));
      CHECK(all_geq(l, r));
    }
  }
}

TEST_CASE("odd-even sorter size and behavior") {
  CHECK(make_oe_sort(2).size() == 1);
  CHECK(make_oe_sort(4).size() == 5);
  const ComparatorNetwork sort4 = make_oe_sort(4);
  for (unsigned word = 0; word < 16; ++word)
    CHECK(is_sorted(sort4.evaluate(binary_input(4, word))));
  const ComparatorNetwork sort8 = make_oe_sort(8);
  CHECK(sort8.size() == 19);
  for (unsigned word = 0; word < 256; ++word)
    CHECK(is_sorted(sort8.evaluate(binary_input(8, word))));
  CHECK_THROWS_AS(make_oe_sort(6), std::invalid_argument);
}

TEST_CASE("bitonic selection network") {
  CHECK(make_bit_sel(8, 2).size() == 13);
  CHECK(make_bit_sel(8, 8) == make_oe_sort(8));

  const ComparatorNetwork sel = make_bit_sel(8, 2);
  const ValueSeq out = sel.evaluate({0, 1, 0, 0, 1, 0, 0, 1});
  CHECK(out[0] == 1);
  CHECK(out[1] == 1);

  for (unsigned word = 0; word < 256; ++word)
    CHECK(is_top_k_sorted(sel.evaluate(binary_input(8, word)), 2));

  CHECK_THROWS_AS(make_bit_sel(8, 3), std::invalid_argument);
  CHECK_THROWS_AS(make_bit_sel(4, 8), std::invalid_argument);
}

TEST_CASE("merger networks: shape") {
  // k = 2: the splitter stage plus one comparator (bitonic) or nothing more
  // (half-bitonic base case).
  CHECK(make_pw_bit_merge(2).size() == 2);
  CHECK(make_pw_hbit_merge(2).size() == 1);
  CHECK(make_pw_hbit_merge(2).comparators() == std::vector<Comparator>{{2, 3}});
  CHECK(make_pw_hbit_merge(4).size() == 4);
  for (int k : {2, 4, 8, 16, 32, 64})
    CHECK(make_pw_hbit_merge(k).size() == static_cast<std::size_t>(k) * ilog2(k) / 2);
  CHECK_THROWS_AS(make_pw_hbit_merge(1), std::invalid_argument);
  CHECK_THROWS_AS(make_pw_hbit_merge(6), std::invalid_argument);
}

TEST_CASE("merger networks: frozen example") {
  const ValueSeq window{7, 5, 2, 1, 6, 3};
  const ValueSeq out_h = make_pw_hbit_merge(4).evaluate(window);
  const ValueSeq out_b = make_pw_bit_merge(4).evaluate(window);
  for (int i = 0; i < 4; ++i) {
    CHECK(out_h[static_cast<std::size_t>(i)] == ValueSeq{7, 6, 5, 3}[static_cast<std::size_t>(i)]);
    CHECK(out_b[static_cast<std::size_t>(i)] == out_h[static_cast<std::size_t>(i)]);
  }
}

TEST_CASE("merger precondition detector flags domination violations") {
  // l = <4,3,2,1>, r = <5,0>: r_1 exceeds l_1.
  const MergerInput bad{{4, 3, 2, 1}, {5, 0}};
  CHECK_FALSE(bad.valid());
  const MergerInput good{{7, 5, 2, 1}, {6, 3}};
  CHECK(good.valid());
}

TEST_CASE("merger contracts against brute-force top-k, both variants") {
  std::mt19937_64 rng(41);
  for (int k : {2, 4, 8, 16}) {
    const ComparatorNetwork bit = make_pw_bit_merge(k);
    const ComparatorNetwork hbit = make_pw_hbit_merge(k);
    for (int trial = 0; trial < 2500; ++trial) {
      const MergerInput input = random_merger_input(rng, k, trial % 2 ? 7 : 1023);
      const ValueSeq window = input.window();
      ValueSeq expect = sorted_desc(window);
      expect.resize(static_cast<std::size_t>(k));
      const ValueSeq got_b = bit.evaluate(window);
      const ValueSeq got_h = hbit.evaluate(window);
      for (int i = 0; i < k; ++i) {
        CHECK(got_b[static_cast<std::size_t>(i)] == expect[static_cast<std::size_t>(i)]);
        CHECK(got_h[static_cast<std::size_t>(i)] == expect[static_cast<std::size_t>(i)]);
      }
    }
  }
}

TEST_CASE("merger front stage leaves a v-shaped s-dominating prefix") {
  std::mt19937_64 rng(43);
  for (int k : {2, 4, 8, 16}) {
    const ComparatorNetwork merger = make_pw_hbit_merge(k);
    // The first k/2 comparators are the bitonic-splitter stage.
    ComparatorNetwork front(merger.channels());
    for (int i = 0; i < k / 2; ++i) front.add(merger.comparators()[static_cast<std::size_t>(i)]);
    for (int trial = 0; trial < 2500; ++trial) {
      const MergerInput input = random_merger_input(rng, k, 255);
      ValueSeq stage = front.evaluate(input.window());
      stage.resize(static_cast<std::size_t>(k));
      CHECK(is_vshaped(stage));
      CHECK(is_bitonic(stage));
      CHECK(is_sdominating(stage));
    }
  }
}

TEST_CASE("pairwise selection networks: frozen sizes") {
  CHECK(make_pw_hbit_sel(4, 1) == make_max(4));
  CHECK(make_pw_hbit_sel(4, 1).size() == 3);
  CHECK(make_pw_hbit_sel(8, 4).size() == 18);
  CHECK(make_pw_hbit_sel(8, 2).size() == 13);
  CHECK(make_pw_hbit_sel(8, 8) == make_oe_sort(8));
  CHECK_THROWS_AS(make_pw_hbit_sel(8, 16), std::invalid_argument);
  CHECK_THROWS_AS(make_pw_hbit_sel(12, 4), std::invalid_argument);
}

TEST_CASE("every constructed network permutes its input") {
  std::mt19937_64 rng(53);
  const ComparatorNetwork nets[] = {
      make_max(8),       make_split(8),          make_bit_split(8),
      make_half_split(8), make_bit_merge(8),     make_oe_sort(8),
      make_bit_sel(8, 2), make_pw_bit_merge(4),  make_pw_hbit_merge(8),
      make_pw_hbit_sel(16, 4)};
  for (const ComparatorNetwork& net : nets) {
    for (int trial = 0; trial < 100; ++trial) {
      const ValueSeq in = testgen::random_seq(rng, net.channels(), 99);
      ValueSeq a = in, b = net.evaluate(in);
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      CHECK(a == b);
    }
  }
}

TEST_CASE("selection networks select on binary and integer inputs") {
  std::mt19937_64 rng(47);
  for (int n : {2, 4, 8, 16}) {
    for (int k = 1; k <= n; k *= 2) {
      const ComparatorNetwork nets[] = {make_pw_hbit_sel(n, k),
                                        make_pw_hbit_sel(n, k, MergerKind::Bitonic),
                                        make_bit_sel(n, k)};
      for (const ComparatorNetwork& net : nets) {
        for (unsigned word = 0; word < (1u << n); ++word)
          CHECK(is_top_k_sorted(net.evaluate(binary_input(n, word)), k));
        for (int trial = 0; trial < 50; ++trial)
          CHECK(is_top_k_sorted(net.evaluate(testgen::random_seq(rng, n, 65535)), k));
      }
    }
  }
}
