// Command-line front end: network generation, CNF encoding, verification,
// size tables and arc-consistency sweeps. Exit codes: 0 success, 1 a
// verification or arc-consistency failure, 2 usage or parameter error.
#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cardnet/cnf.hpp"
#include "cardnet/constructions.hpp"
#include "cardnet/network.hpp"
#include "cardnet/size_analytics.hpp"
#include "cardnet/up.hpp"
#include "cardnet/verification.hpp"

namespace {

using namespace cardnet;

const std::vector<std::string> kGenerateTypes = {
    "max",          "split",         "bit-split", "half-split", "oe-sort",
    "bit-merge",    "pw-bit-merge",  "pw-hbit-merge",
    "bit-sel",      "pw-hbit-sel"};

bool is_merger_type(const std::string& type) {
  return type == "pw-bit-merge" || type == "pw-hbit-merge";
}

bool is_selector_type(const std::string& type) {
  return type == "bit-sel" || type == "pw-hbit-sel";
}

// n is the width for single-parameter families, k the merger parameter.
ComparatorNetwork build_network(const std::string& type, int n, int k) {
  if (type == "max") return make_max(n);
  if (type == "split") return make_split(n);
  if (type == "bit-split") return make_bit_split(n);
  if (type == "half-split") return make_half_split(n);
  if (type == "oe-sort") return make_oe_sort(n);
  if (type == "bit-merge") return make_bit_merge(n);
  if (type == "pw-bit-merge") return make_pw_bit_merge(k);
  if (type == "pw-hbit-merge") return make_pw_hbit_merge(k);
  if (type == "bit-sel") return make_bit_sel(n, k);
  if (type == "pw-hbit-sel") return make_pw_hbit_sel(n, k);
  throw std::invalid_argument("unknown network type: " + type);
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) throw std::invalid_argument("cannot open output file: " + path);
  return file;
}

struct GenerateArgs {
  std::string type;
  int n = 0;
  int k = 0;
  std::string format = "text";
  std::string out;
};

int run_generate(const GenerateArgs& args) {
  if (is_merger_type(args.type)) {
    if (args.k <= 0) throw std::invalid_argument(args.type + " requires --k");
  } else if (is_selector_type(args.type)) {
    if (args.n <= 0 || args.k <= 0)
      throw std::invalid_argument(args.type + " requires --n and --k");
  } else if (args.n <= 0) {
    throw std::invalid_argument(args.type + " requires --n");
  }
  const ComparatorNetwork net = build_network(args.type, args.n, args.k);

  std::ofstream file;
  std::ostream& out = open_output(file, args.out);
  if (args.format == "json") {
    nlohmann::json j;
    j["channels"] = net.channels();
    j["size"] = net.size();
    auto& comps = j["comparators"] = nlohmann::json::array();
    for (const Comparator& c : net.comparators()) comps.push_back({c.hi, c.lo});
    out << j.dump(2) << "\n";
  } else {
    out << to_text(net);
  }
  return 0;
}

struct EncodeArgs {
  int n = 0;
  long long bound = 0;
  std::string rel = "lt";
  std::string encoding = "half";
  std::string out;
};

int run_encode(const EncodeArgs& args) {
  const Relation rel = args.rel == "le" ? Relation::LessEqual : Relation::LessThan;
  const EncodingKind kind = args.encoding == "full" ? EncodingKind::Full : EncodingKind::Half;
  const CnfFormula f = encode_cardinality(args.n, args.bound, rel, kind);
  if (f.trivially_true)
    std::cerr << "warning: constraint is trivially true; emitting an empty formula\n";
  std::ofstream file;
  std::ostream& out = open_output(file, args.out);
  write_dimacs(f, out);
  return 0;
}

struct VerifyArgs {
  std::string type;
  int n = 0;
  int k = 0;
  bool exhaustive = false;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
};

int run_verify(const VerifyArgs& args) {
  VerifyReport report;
  if (is_merger_type(args.type)) {
    if (args.k <= 0) throw std::invalid_argument(args.type + " requires --k");
    const MergerKind kind =
        args.type == "pw-bit-merge" ? MergerKind::Bitonic : MergerKind::HalfBitonic;
    report = args.exhaustive ? verify_merger_exhaustive(kind, args.k)
                             : verify_merger_contract(kind, args.k, args.trials, args.seed);
  } else {
    if (args.n <= 0) throw std::invalid_argument("verify requires --n");
    int k = args.k;
    if (k <= 0) {
      if (args.type == "max") k = 1;
      else if (args.type == "oe-sort") k = args.n;
      else throw std::invalid_argument(args.type + " requires --k");
    }
    const ComparatorNetwork net = build_network(args.type, args.n, k);
    const std::string id = args.type + "(n=" + std::to_string(args.n) +
                           ",k=" + std::to_string(k) + ")";
    report = args.exhaustive
                 ? verify_selection_exhaustive(net, k, 0, id)
                 : verify_selection_random(net, k, args.trials, args.seed, id);
  }
  std::cout << describe(report) << "\n";
  return report.passed() ? 0 : 1;
}

struct SizesArgs {
  int max_log_n = 7;
  std::string out;
};

int run_sizes(const SizesArgs& args) {
  std::ofstream file;
  std::ostream& out = open_output(file, args.out);
  emit_size_table(args.max_log_n, out);
  return 0;
}

struct ArcArgs {
  std::string type = "pw-hbit-sel";
  int n = 0;
  int k = 0;
  bool all_subsets = false;
  std::uint64_t samples = 100;
  std::uint64_t seed = 0;
};

std::vector<int> first_subset(int size) {
  std::vector<int> subset(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) subset[static_cast<std::size_t>(i)] = i + 1;
  return subset;
}

bool next_subset(std::vector<int>& subset, int n) {
  const int size = static_cast<int>(subset.size());
  for (int i = size - 1; i >= 0; --i) {
    if (subset[static_cast<std::size_t>(i)] < n - (size - 1 - i)) {
      ++subset[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < size; ++j)
        subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
      return true;
    }
  }
  return false;
}

std::vector<int> sample_subset(std::mt19937_64& rng, int n, int size) {
  std::vector<int> pool(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i + 1;
  for (int i = 0; i < size; ++i) {
    const auto j = i + static_cast<int>(rng() % static_cast<std::uint64_t>(n - i));
    std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
  }
  std::vector<int> subset(pool.begin(), pool.begin() + size);
  std::sort(subset.begin(), subset.end());
  return subset;
}

int run_arc_check(const ArcArgs& args) {
  if (args.n <= 0 || args.k <= 0) throw std::invalid_argument("arc-check requires --n and --k");
  if (args.type != "pw-hbit-sel" && args.type != "bit-sel")
    throw std::invalid_argument("arc-check supports --type pw-hbit-sel or bit-sel");
  const ComparatorNetwork net = args.type == "bit-sel" ? make_bit_sel(args.n, args.k)
                                                       : make_pw_hbit_sel(args.n, args.k);
  const CnfFormula phi = encode_network(net, EncodingKind::Half);

  std::uint64_t total = 0, passed = 0;
  auto run_one = [&](const std::vector<int>& subset) {
    ++total;
    const UpCheckResult fwd = forward_propagation_check(phi, args.k, subset);
    const UpCheckResult arc =
        fwd.passed ? arc_consistency_check(phi, args.k, subset) : fwd;
    if (fwd.passed && arc.passed) {
      ++passed;
      return;
    }
    const UpCheckResult& bad = fwd.passed ? arc : fwd;
    std::cout << "failure for true inputs {";
    for (std::size_t i = 0; i < subset.size(); ++i)
      std::cout << (i ? "," : "") << "x" << subset[i];
    std::cout << "}: " << bad.reason << "\n" << format_trail(bad.trail);
  };

  if (args.all_subsets) {
    // C(n, k-1) grows fast; keep full enumeration at desk scale.
    double approx = 1;
    for (int i = 0; i < args.k - 1; ++i)
      approx = approx * (args.n - i) / (i + 1);
    if (approx > 2e6)
      throw std::invalid_argument("too many subsets for --all-subsets; use --samples");
    if (args.k == 1) {
      run_one({});
    } else {
      std::vector<int> subset = first_subset(args.k - 1);
      do {
        run_one(subset);
      } while (next_subset(subset, args.n));
    }
  } else {
    std::mt19937_64 rng(args.seed);
    for (std::uint64_t s = 0; s < args.samples; ++s)
      run_one(sample_subset(rng, args.n, args.k - 1));
  }

  std::cout << passed << "/" << total << " passed\n";
  return passed == total ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"selection-network compiler for cardinality constraints"};
  app.require_subcommand(1);

  GenerateArgs gen;
  CLI::App* generate = app.add_subcommand("generate", "emit a comparator network");
  generate->add_option("--type", gen.type, "network family")
      ->required()
      ->check(CLI::IsMember(kGenerateTypes));
  generate->add_option("--n", gen.n, "channel count / width parameter");
  generate->add_option("--k", gen.k, "selection or merger parameter");
  generate->add_option("--format", gen.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  generate->add_option("--out", gen.out, "output file (default stdout)");

  EncodeArgs enc;
  CLI::App* encode = app.add_subcommand("encode", "compile a cardinality constraint to CNF");
  encode->add_option("--n", enc.n, "number of constraint variables")->required();
  encode->add_option("--bound", enc.bound, "cardinality bound")->required();
  encode->add_option("--rel", enc.rel, "lt or le")->check(CLI::IsMember({"lt", "le"}));
  encode->add_option("--encoding", enc.encoding, "half or full")
      ->check(CLI::IsMember({"half", "full"}));
  encode->add_option("--out", enc.out, "output file (default stdout)");

  VerifyArgs ver;
  CLI::App* verify = app.add_subcommand("verify", "check the selection/merger property");
  verify->add_option("--type", ver.type, "network family")
      ->required()
      ->check(CLI::IsMember(kGenerateTypes));
  verify->add_option("--n", ver.n, "channel count");
  verify->add_option("--k", ver.k, "selection or merger parameter");
  verify->add_flag("--exhaustive", ver.exhaustive, "all binary inputs (n <= 24)");
  verify->add_option("--trials", ver.trials, "random trials (default 1000)");
  verify->add_option("--seed", ver.seed, "random seed (default 0)");

  SizesArgs sizes;
  CLI::App* sizes_cmd = app.add_subcommand("sizes", "emit the size comparison CSV");
  sizes_cmd->add_option("--max-log-n", sizes.max_log_n, "largest log2(n) (<= 31)")->required();
  sizes_cmd->add_option("--out", sizes.out, "output file (default stdout)");

  ArcArgs arc;
  CLI::App* arc_cmd = app.add_subcommand("arc-check", "unit-propagation arc-consistency sweep");
  arc_cmd->add_option("--type", arc.type, "pw-hbit-sel or bit-sel");
  arc_cmd->add_option("--n", arc.n, "channel count")->required();
  arc_cmd->add_option("--k", arc.k, "selection parameter")->required();
  arc_cmd->add_flag("--all-subsets", arc.all_subsets, "enumerate every (k-1)-subset");
  arc_cmd->add_option("--samples", arc.samples, "sampled subsets (default 100)");
  arc_cmd->add_option("--seed", arc.seed, "random seed (default 0)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*generate) return run_generate(gen);
    if (*encode) return run_encode(enc);
    if (*verify) return run_verify(ver);
    if (*sizes_cmd) return run_sizes(sizes);
    if (*arc_cmd) return run_arc_check(arc);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
