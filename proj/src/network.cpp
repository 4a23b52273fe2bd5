#include "cardnet/network.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace cardnet {

namespace {

void check_comparator(const Comparator& c, int channels) {
  if (c.hi < 1 || c.hi >= c.lo || c.lo > channels) {
    std::ostringstream msg;
    msg << "comparator (" << c.hi << "," << c.lo << ") invalid for " << channels
        << " channels";
    throw std::invalid_argument(msg.str());
  }
}

}  // namespace

ComparatorNetwork::ComparatorNetwork(int channels) : channels_(channels) {
  if (channels < 1) throw std::invalid_argument("network needs at least one channel");
}

ComparatorNetwork::ComparatorNetwork(int channels, std::vector<Comparator> comps)
    : ComparatorNetwork(channels) {
  for (const Comparator& c : comps) check_comparator(c, channels_);
  comps_ = std::move(comps);
}

void ComparatorNetwork::add(Comparator c) {
  check_comparator(c, channels_);
  comps_.push_back(c);
}

void ComparatorNetwork::append(const ComparatorNetwork& other, int offset) {
  if (offset < 0 || offset + other.channels() > channels_)
    throw std::invalid_argument("appended network does not fit");
  for (const Comparator& c : other.comps_)
    comps_.push_back({c.hi + offset, c.lo + offset});
}

ValueSeq ComparatorNetwork::evaluate(const ValueSeq& in) const {
  if (static_cast<int>(in.size()) != channels_)
    throw std::invalid_argument("input length does not match channel count");
  ValueSeq out = in;
  evaluate_inplace(out);
  return out;
}

void ComparatorNetwork::evaluate_inplace(std::span<Value> io) const {
  if (static_cast<int>(io.size()) != channels_)
    throw std::invalid_argument("input length does not match channel count");
  for (const Comparator& c : comps_) {
    Value& a = io[static_cast<std::size_t>(c.hi) - 1];
    Value& b = io[static_cast<std::size_t>(c.lo) - 1];
    if (a < b) std::swap(a, b);
  }
}

ValueSeq apply_comparator(const Comparator& c, ValueSeq s) {
  check_comparator(c, static_cast<int>(s.size()));
  Value& a = s[static_cast<std::size_t>(c.hi) - 1];
  Value& b = s[static_cast<std::size_t>(c.lo) - 1];
  if (a < b) std::swap(a, b);
  return s;
}

bool is_sorted(const ValueSeq& s) {
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i - 1] < s[i]) return false;
  return true;
}

bool is_top_k_sorted(const ValueSeq& s, int k) {
  if (k < 1 || static_cast<std::size_t>(k) > s.size())
    throw std::invalid_argument("k out of range");
  for (int i = 1; i < k; ++i)
    if (s[i - 1] < s[i]) return false;
  std::span<const Value> prefix(s.data(), static_cast<std::size_t>(k));
  std::span<const Value> suffix(s.data() + k, s.size() - static_cast<std::size_t>(k));
  return all_geq(prefix, suffix);
}

namespace {

// Nondecreasing up to some peak, nonincreasing after it.
bool rises_then_falls(std::span<const Value> s) {
  std::size_t i = 1;
  while (i < s.size() && s[i - 1] <= s[i]) ++i;
  while (i < s.size() && s[i - 1] >= s[i]) ++i;
  return i >= s.size();
}

}  // namespace

bool is_bitonic(const ValueSeq& s) {
  const std::size_t n = s.size();
  if (n <= 2) return true;
  ValueSeq rotated(n);
  for (std::size_t shift = 0; shift < n; ++shift) {
    for (std::size_t i = 0; i < n; ++i) rotated[i] = s[(i + shift) % n];
    if (rises_then_falls(rotated)) return true;
  }
  return false;
}

bool is_vshaped(const ValueSeq& s) {
  std::size_t i = 1;
  while (i < s.size() && s[i - 1] >= s[i]) ++i;
  while (i < s.size() && s[i - 1] <= s[i]) ++i;
  return i >= s.size();
}

bool is_sdominating(const ValueSeq& s) {
  if (s.size() % 2 != 0) throw std::invalid_argument("s-domination needs even length");
  const std::size_t k = s.size();
  for (std::size_t j = 0; j < k / 2; ++j)
    if (s[j] < s[k - 1 - j]) return false;
  return true;
}

int vshape_point(const ValueSeq& s) {
  if (s.size() % 2 != 0) throw std::invalid_argument("vshape_point needs even length");
  if (!is_vshaped(s) || !is_sdominating(s))
    throw std::invalid_argument("vshape_point needs a v-shaped s-dominating sequence");
  const int k = static_cast<int>(s.size());
  for (int i = k / 2 + 1; i < k; ++i)
    if (s[i - 1] < s[i]) return i;
  return k;
}

bool dominates(const ValueSeq& a, const ValueSeq& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dominates needs equal lengths");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] < b[i]) return false;
  return true;
}

bool all_geq(std::span<const Value> a, std::span<const Value> b) {
  if (a.empty() || b.empty()) return true;
  Value min_a = a[0], max_b = b[0];
  for (Value v : a) min_a = std::min(min_a, v);
  for (Value v : b) max_b = std::max(max_b, v);
  return min_a >= max_b;
}

std::string to_text(const ComparatorNetwork& f) {
  std::ostringstream out;
  out << "n " << f.channels() << "\n";
  for (const Comparator& c : f.comparators()) out << c.hi << " " << c.lo << "\n";
  return out.str();
}

ComparatorNetwork network_from_text(std::istream& in) {
  std::string line;
  int line_no = 0;
  auto fail = [&](const std::string& what) {
    std::ostringstream msg;
    msg << "line " << line_no << ": " << what;
    throw std::runtime_error(msg.str());
  };

  int channels = -1;
  std::vector<Comparator> comps;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    if (channels < 0) {
      std::string tag;
      if (!(ls >> tag >> channels) || tag != "n" || channels < 1)
        fail("expected header \"n <channels>\"");
      continue;
    }
    Comparator c;
    if (!(ls >> c.hi >> c.lo)) fail("expected \"<hi> <lo>\"");
    if (c.hi < 1 || c.hi >= c.lo || c.lo > channels) fail("comparator out of range");
    comps.push_back(c);
  }
  if (channels < 0) throw std::runtime_error("line 0: empty network text");
  return ComparatorNetwork(channels, std::move(comps));
}

ComparatorNetwork network_from_text(const std::string& text) {
  std::istringstream in(text);
  return network_from_text(in);
}

}  // namespace cardnet
