#include "cardnet/verification.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "cardnet/parallel.hpp"

namespace cardnet {

namespace {

constexpr int kExhaustiveBudgetBits = 24;

void set_binary_input(ValueSeq& buf, std::uint64_t word) {
  // x_1 is the most significant bit, so ascending words enumerate inputs in
  // lexicographic sequence order.
  const int n = static_cast<int>(buf.size());
  for (int i = 0; i < n; ++i) buf[i] = static_cast<Value>((word >> (n - 1 - i)) & 1u);
}

std::string default_id(const ComparatorNetwork& f, int k) {
  std::ostringstream id;
  id << "network[n=" << f.channels() << ",k=" << k << "]";
  return id.str();
}

}  // namespace

VerifyReport verify_selection_exhaustive(const ComparatorNetwork& f, int k, int workers,
                                         std::string_view network_id) {
  const int n = f.channels();
  if (k < 1 || k > n) throw std::invalid_argument("k out of range");
  if (n > kExhaustiveBudgetBits)
    throw std::invalid_argument(
        "exhaustive verification is limited to 24 channels; use the random mode");

  VerifyReport report;
  report.network_id = network_id.empty() ? default_id(f, k) : std::string(network_id);
  report.mode = VerifyMode::ExhaustiveBinary;
  report.inputs_tested = std::uint64_t{1} << n;

  if (workers <= 0) workers = worker_count();
  std::vector<std::vector<VerifyFailure>> found(static_cast<std::size_t>(workers));
  parallel_chunks(report.inputs_tested, workers,
                  [&](int chunk, std::uint64_t begin, std::uint64_t end) {
                    ValueSeq in(static_cast<std::size_t>(n)), out(in.size());
                    for (std::uint64_t word = begin; word < end; ++word) {
                      set_binary_input(in, word);
                      out = in;
                      f.evaluate_inplace(out);
                      if (!is_top_k_sorted(out, k))
                        found[static_cast<std::size_t>(chunk)].push_back({in, out});
                    }
                  });
  for (auto& chunk : found)
    report.failures.insert(report.failures.end(), chunk.begin(), chunk.end());
  return report;
}

VerifyReport verify_selection_random(const ComparatorNetwork& f, int k,
                                     std::uint64_t trials, std::uint64_t seed,
                                     std::string_view network_id) {
  const int n = f.channels();
  if (k < 1 || k > n) throw std::invalid_argument("k out of range");
  if (trials < 1) throw std::invalid_argument("at least one trial required");

  VerifyReport report;
  report.network_id = network_id.empty() ? default_id(f, k) : std::string(network_id);
  report.mode = VerifyMode::RandomInteger;
  report.inputs_tested = trials;

  std::mt19937_64 rng(seed);
  ValueSeq in(static_cast<std::size_t>(n)), out(in.size());
  for (std::uint64_t t = 0; t < trials; ++t) {
    for (Value& v : in) v = static_cast<Value>(rng() & 0xffffu);
    out = in;
    f.evaluate_inplace(out);
    if (!is_top_k_sorted(out, k)) report.failures.push_back({in, out});
  }
  return report;
}

ValueSeq MergerInput::window() const {
  ValueSeq w = left;
  w.insert(w.end(), right.begin(), right.end());
  return w;
}

bool MergerInput::valid() const {
  if (left.size() != 2 * right.size() || right.empty()) return false;
  if (!is_sorted(left) || !is_sorted(right)) return false;
  for (std::size_t i = 0; i < right.size(); ++i)
    if (left[i] < right[i]) return false;
  return true;
}

MergerInput random_merger_input(std::mt19937_64& rng, int k, Value max_value) {
  if (k < 2 || k % 2 != 0) throw std::invalid_argument("merger parameter k must be even");
  auto draw_sorted = [&](int len) {
    ValueSeq s(static_cast<std::size_t>(len));
    for (Value& v : s) v = static_cast<Value>(rng() % (static_cast<std::uint64_t>(max_value) + 1));
    std::sort(s.begin(), s.end(), std::greater<>());
    return s;
  };
  for (;;) {
    MergerInput input{draw_sorted(k), draw_sorted(k / 2)};
    if (input.valid()) return input;
  }
}

namespace {

// Sorted k largest elements of the window, by brute force.
ValueSeq top_k_of(const ValueSeq& window, int k) {
  ValueSeq sorted = window;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  sorted.resize(static_cast<std::size_t>(k));
  return sorted;
}

bool merger_output_ok(const ComparatorNetwork& merger, const ValueSeq& window, int k,
                      ValueSeq& out) {
  out = merger.evaluate(window);
  const ValueSeq expect = top_k_of(window, k);
  for (int i = 0; i < k; ++i)
    if (out[static_cast<std::size_t>(i)] != expect[static_cast<std::size_t>(i)]) return false;
  return true;
}

std::string merger_id(MergerKind kind, int k) {
  std::ostringstream id;
  id << (kind == MergerKind::Bitonic ? "pw_bit_merge" : "pw_hbit_merge") << "[k=" << k << "]";
  return id.str();
}

}  // namespace

VerifyReport verify_merger_contract(MergerKind kind, int k, std::uint64_t trials,
                                    std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("at least one trial required");
  const ComparatorNetwork merger = make_pw_merger(k, kind);

  VerifyReport report;
  report.network_id = merger_id(kind, k);
  report.mode = VerifyMode::RandomInteger;
  report.inputs_tested = trials;

  // Cycling the value range mixes wide-integer windows with tie-heavy and
  // 0/1 windows under one seed.
  const Value ranges[] = {65535, 7, 1};
  std::mt19937_64 rng(seed);
  ValueSeq out;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const MergerInput input = random_merger_input(rng, k, ranges[t % 3]);
    const ValueSeq window = input.window();
    if (!merger_output_ok(merger, window, k, out)) report.failures.push_back({window, out});
  }
  return report;
}

VerifyReport verify_merger_exhaustive(MergerKind kind, int k) {
  const ComparatorNetwork merger = make_pw_merger(k, kind);
  const int width = merger.channels();
  if (width > kExhaustiveBudgetBits)
    throw std::invalid_argument(
        "exhaustive merger verification is limited to 24 window bits; use the random mode");

  VerifyReport report;
  report.network_id = merger_id(kind, k);
  report.mode = VerifyMode::ExhaustiveBinary;

  ValueSeq window(static_cast<std::size_t>(width)), out;
  for (std::uint64_t word = 0; word < (std::uint64_t{1} << width); ++word) {
    set_binary_input(window, word);
    MergerInput input{ValueSeq(window.begin(), window.begin() + k),
                      ValueSeq(window.begin() + k, window.end())};
    if (!input.valid()) continue;
    ++report.inputs_tested;
    if (!merger_output_ok(merger, window, k, out)) report.failures.push_back({window, out});
  }
  return report;
}

std::string describe(const VerifyReport& report) {
  std::ostringstream out;
  out << report.network_id << ": tested " << report.inputs_tested << " inputs ("
      << (report.mode == VerifyMode::ExhaustiveBinary ? "exhaustive-binary" : "random-integer")
      << "): " << (report.passed() ? "pass" : "FAIL");
  if (!report.passed()) {
    out << " [" << report.failures.size() << " counterexamples; first: input =";
    for (Value v : report.failures.front().input) out << ' ' << v;
    out << ", output =";
    for (Value v : report.failures.front().output) out << ' ' << v;
    out << "]";
  }
  return out.str();
}

}  // namespace cardnet
