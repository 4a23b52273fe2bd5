// Oracles for the selection property and the merger contracts.
//
// Binary exhaustive sweeps rely on the 0/1 principle for the monotone
// selection property; the random-integer mode is the independent spot check
// on top of it.
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include "cardnet/constructions.hpp"
#include "cardnet/network.hpp"

namespace cardnet {

enum class VerifyMode { ExhaustiveBinary, RandomInteger };

struct VerifyFailure {
  ValueSeq input;
  ValueSeq output;
};

struct VerifyReport {
  std::string network_id;
  VerifyMode mode = VerifyMode::ExhaustiveBinary;
  std::uint64_t inputs_tested = 0;
  std::vector<VerifyFailure> failures;

  bool passed() const { return failures.empty(); }
};

// Runs every 0/1 input through f and checks the output is top-k sorted.
// Witnesses are reported in lexicographic input order regardless of the
// worker count. Throws for f.channels() > 24; use the random mode there.
VerifyReport verify_selection_exhaustive(const ComparatorNetwork& f, int k,
                                         int workers = 0,
                                         std::string_view network_id = "");

// Deterministic given the seed; inputs are uniform integers in [0, 2^16).
VerifyReport verify_selection_random(const ComparatorNetwork& f, int k,
                                     std::uint64_t trials, std::uint64_t seed,
                                     std::string_view network_id = "");

// A merger window: sorted left part of length k, sorted right part of
// length k/2, with <l_1..l_{k/2}> dominating the right part pointwise.
struct MergerInput {
  ValueSeq left;
  ValueSeq right;

  ValueSeq window() const;
  bool valid() const;
};

// Rejection-samples a valid window; values are uniform in [0, max_value].
MergerInput random_merger_input(std::mt19937_64& rng, int k, Value max_value);

// Checks that the merger's first k outputs are the sorted k largest window
// elements, against a plain sort of the multiset.
VerifyReport verify_merger_contract(MergerKind kind, int k, std::uint64_t trials,
                                    std::uint64_t seed);
// Same check over every valid 0/1 window (3k/2 <= 24 bits).
VerifyReport verify_merger_exhaustive(MergerKind kind, int k);

std::string describe(const VerifyReport& report);

}  // namespace cardnet
