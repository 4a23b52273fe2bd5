// Comparator networks: representation, evaluation and sequence predicates.
//
// Conventions used throughout the library:
//   - channel indices are 1-based;
//   - a comparator routes the maximum to its smaller index (hi) and the
//     minimum to its larger index (lo);
//   - "sorted" always means nonincreasing.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace cardnet {

using Value = std::uint32_t;
using ValueSeq = std::vector<Value>;

struct Comparator {
  int hi = 0;  // receives max(in[hi], in[lo])
  int lo = 0;  // receives min(in[hi], in[lo])

  friend bool operator==(const Comparator&, const Comparator&) = default;
};

class ComparatorNetwork {
 public:
  ComparatorNetwork() = default;
  explicit ComparatorNetwork(int channels);
  ComparatorNetwork(int channels, std::vector<Comparator> comps);

  int channels() const noexcept { return channels_; }
  std::size_t size() const noexcept { return comps_.size(); }
  const std::vector<Comparator>& comparators() const noexcept { return comps_; }

  // Appends one comparator; throws std::invalid_argument unless
  // 1 <= hi < lo <= channels().
  void add(Comparator c);

  // Appends all comparators of `other` with channel indices shifted by
  // `offset`. The shifted network must fit.
  void append(const ComparatorNetwork& other, int offset);

  ValueSeq evaluate(const ValueSeq& in) const;
  void evaluate_inplace(std::span<Value> io) const;

  friend bool operator==(const ComparatorNetwork&, const ComparatorNetwork&) = default;

 private:
  int channels_ = 0;
  std::vector<Comparator> comps_;
};

// Swaps the two addressed positions so position hi holds the larger value.
ValueSeq apply_comparator(const Comparator& c, ValueSeq s);

bool is_sorted(const ValueSeq& s);  // nonincreasing
bool is_top_k_sorted(const ValueSeq& s, int k);

// Nondecreasing-then-nonincreasing, or any circular shift of such a shape.
bool is_bitonic(const ValueSeq& s);
// Nonincreasing-then-nondecreasing (no shifts).
bool is_vshaped(const ValueSeq& s);
// b_j >= b_{k-j+1} for j = 1..k/2; requires even length.
bool is_sdominating(const ValueSeq& s);
// For a v-shaped s-dominating sequence of even length k: the smallest index
// i > k/2 with b_i < b_{i+1}, or k when the sequence is nonincreasing.
int vshape_point(const ValueSeq& s);

// Pointwise a_i >= b_i; lengths must match.
bool dominates(const ValueSeq& a, const ValueSeq& b);
// Every element of a >= every element of b; any lengths (empty is vacuous).
bool all_geq(std::span<const Value> a, std::span<const Value> b);

// Text form: first line "n <channels>", then one "<hi> <lo>" line per
// comparator in application order.
std::string to_text(const ComparatorNetwork& f);
ComparatorNetwork network_from_text(std::istream& in);
ComparatorNetwork network_from_text(const std::string& text);

}  // namespace cardnet
