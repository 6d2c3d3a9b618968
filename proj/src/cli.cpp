#include "detpart/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <limits>
#include <sstream>
#include <type_traits>

#include "detpart/errors.hpp"
#include "detpart/hgr_io.hpp"
#include "detpart/kway.hpp"
#include "detpart/metrics.hpp"

namespace detpart::cli {

Partition default_pipeline(const Hypergraph& g, const Params& params, Executor& ex) {
  return kway_partition(g, params, ex).partition;
}

namespace {

using Clock = std::chrono::steady_clock;

long long elapsed_ms(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

std::string partition_bytes(const Partition& p) {
  std::ostringstream os;
  write_partition(p, os);
  return std::move(os).str();
}

template <typename T>
std::vector<T> split_list(const std::string& text, const char* what) {
  std::vector<T> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if constexpr (std::is_same_v<T, Policy>) {
      const auto p = parse_policy(item);
      if (!p) throw InvalidParams(std::string("unknown ") + what + " '" + item + "'");
      out.push_back(*p);
    } else {
      long long value = -1;
      try {
        std::size_t used = 0;
        value = std::stoll(item, &used);
        if (used != item.size()) value = -1;
      } catch (const std::exception&) {
        value = -1;
      }
      if (value < 0) throw InvalidParams(std::string("bad ") + what + " '" + item + "'");
      out.push_back(static_cast<T>(value));
    }
  }
  if (out.empty()) throw InvalidParams(std::string("empty ") + what + " list");
  return out;
}

/// Flag values as typed on the command line, validated later so every
/// range error maps to the usage exit code.
struct PartitionFlags {
  long long k = 2;
  std::string epsilon = "0.1";
  std::string policy = "LDH";
  long long coarse_to = 25;
  long long refine_iters = 2;

  void add_to(CLI::App& app) {
    app.add_option("--k", k, "Number of parts")->capture_default_str();
    app.add_option("--epsilon", epsilon, "Imbalance parameter as a decimal")->capture_default_str();
    app.add_option("--policy", policy, "Matching policy: LDH, HDH, LWD, HWD or RAND")->capture_default_str();
    app.add_option("--coarse-to", coarse_to, "Maximum coarsening levels")->capture_default_str();
    app.add_option("--refine-iters", refine_iters, "Refinement rounds per level")->capture_default_str();
  }

  Params resolve() const {
    Params p;
    if (k < 1 || k > std::numeric_limits<PartId>::max()) throw InvalidParams("--k must be >= 1");
    if (coarse_to < 1 || coarse_to > std::numeric_limits<unsigned>::max()) {
      throw InvalidParams("--coarse-to must be >= 1");
    }
    if (refine_iters < 0 || refine_iters > std::numeric_limits<unsigned>::max()) {
      throw InvalidParams("--refine-iters must be >= 0");
    }
    const auto eps = Fraction::parse_decimal(epsilon);
    if (!eps) throw InvalidParams("--epsilon must be a non-negative decimal");
    const auto pol = parse_policy(policy);
    if (!pol) throw InvalidParams("unknown policy '" + policy + "'");
    p.k = static_cast<PartId>(k);
    p.epsilon = *eps;
    p.policy = *pol;
    p.coarse_to = static_cast<unsigned>(coarse_to);
    p.refine_iters = static_cast<unsigned>(refine_iters);
    return p;
  }
};

unsigned resolve_threads(long long threads) {
  if (threads < 0 || threads > 4096) throw InvalidParams("--threads must be in [0, 4096]");
  return static_cast<unsigned>(threads);
}

void require_fit(const Hypergraph& g, const Params& params) {
  if (params.k > g.num_nodes()) throw InvalidParams("more parts than nodes");
}

}  // namespace

DeterminismReport check_determinism(const Hypergraph& g, const Params& params,
                                    std::span<const unsigned> thread_counts, unsigned repeats,
                                    std::size_t grain, const PartitionFn& fn) {
  DeterminismReport report;
  std::string reference;
  unsigned reference_threads = 0;
  for (unsigned threads : thread_counts) {
    Executor ex(threads, grain);
    for (unsigned r = 0; r < repeats; ++r) {
      const std::string bytes = partition_bytes(fn(g, params, ex));
      ++report.runs;
      if (report.runs == 1) {
        reference = bytes;
        reference_threads = threads;
        continue;
      }
      if (bytes == reference || !report.identical) continue;
      report.identical = false;
      // Locate the first differing line, i.e. node.
      const std::size_t at = std::mismatch(bytes.begin(), bytes.end(), reference.begin(), reference.end()).first -
                             bytes.begin();
      const std::size_t node = static_cast<std::size_t>(std::count(bytes.begin(), bytes.begin() + at, '\n'));
      auto line_at = [node](const std::string& s) {
        std::size_t pos = 0;
        for (std::size_t i = 0; i < node && pos != std::string::npos; ++i) {
          pos = s.find('\n', pos);
          if (pos != std::string::npos) ++pos;
        }
        if (pos == std::string::npos || pos >= s.size()) return std::string("<missing>");
        return s.substr(pos, s.find('\n', pos) - pos);
      };
      std::ostringstream os;
      os << "threads=" << threads << " repeat=" << r << " differs from threads=" << reference_threads
         << " repeat=0 at node " << node << ": " << line_at(bytes) << " vs " << line_at(reference);
      report.first_diff = os.str();
    }
  }
  return report;
}

std::vector<SweepRow> run_sweep(const Hypergraph& g, std::vector<Policy> policies,
                                std::vector<unsigned> coarse_to, std::vector<unsigned> refine_iters,
                                PartId k, Fraction epsilon, Executor& ex) {
  std::sort(policies.begin(), policies.end(),
            [](Policy a, Policy b) { return to_string(a) < to_string(b); });
  std::sort(coarse_to.begin(), coarse_to.end());
  std::sort(refine_iters.begin(), refine_iters.end());

  std::vector<SweepRow> rows;
  for (Policy policy : policies) {
    for (unsigned levels : coarse_to) {
      for (unsigned iters : refine_iters) {
        Params params;
        params.policy = policy;
        params.coarse_to = levels;
        params.refine_iters = iters;
        params.k = k;
        params.epsilon = epsilon;
        params.check();

        const auto start = Clock::now();
        const KwayResult result = kway_partition(g, params, ex);
        SweepRow row;
        row.time_ms = elapsed_ms(start);
        row.policy = policy;
        row.coarse_to = levels;
        row.refine_iters = iters;
        row.k = k;
        row.cut = cut(g, result.partition, ex);
        const BalanceReport balance = imbalance(result.partition);
        row.max_part_weight = balance.max_part_weight;
        row.balanced = balance.balanced(epsilon);
        rows.push_back(row);
      }
    }
  }
  return rows;
}

void write_sweep_csv(std::span<const SweepRow> rows, std::ostream& out) {
  out << "policy,coarse_to,refine_iters,k,cut,max_part_weight,balanced,time_ms\n";
  for (const SweepRow& r : rows) {
    out << to_string(r.policy) << ',' << r.coarse_to << ',' << r.refine_iters << ',' << r.k << ',' << r.cut
        << ',' << r.max_part_weight << ',' << (r.balanced ? "yes" : "no") << ',' << r.time_ms << '\n';
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const PartitionFn& pipeline) {
  CLI::App app{"Deterministic parallel multilevel hypergraph partitioner"};
  app.require_subcommand(1);

  std::string input;
  long long threads = 0;
  std::size_t grain = Executor::kDefaultGrain;

  // partition
  auto* partition_cmd = app.add_subcommand("partition", "Partition an .hgr hypergraph");
  PartitionFlags partition_flags;
  std::string output;
  partition_cmd->add_option("--input", input, "Input .hgr file")->required();
  partition_flags.add_to(*partition_cmd);
  partition_cmd->add_option("--threads", threads, "Worker threads (0 = all cores)");
  partition_cmd->add_option("--grain", grain, "Loop chunk size")->capture_default_str();
  partition_cmd->add_option("--output", output, "Partition file (default <input>.part.<k>)");

  // evaluate
  auto* evaluate_cmd = app.add_subcommand("evaluate", "Report cut and balance of a partition file");
  std::string partition_path;
  long long eval_k = 2;
  std::string eval_epsilon = "0.1";
  evaluate_cmd->add_option("--input", input, "Input .hgr file")->required();
  evaluate_cmd->add_option("--partition", partition_path, "Partition file")->required();
  evaluate_cmd->add_option("--k", eval_k, "Number of parts")->capture_default_str();
  evaluate_cmd->add_option("--epsilon", eval_epsilon, "Imbalance parameter")->capture_default_str();

  // check-determinism
  auto* check_cmd = app.add_subcommand("check-determinism", "Compare outputs across thread counts");
  PartitionFlags check_flags;
  std::string thread_list = "1,2,4,8";
  long long repeats = 2;
  check_cmd->add_option("--input", input, "Input .hgr file")->required();
  check_flags.add_to(*check_cmd);
  check_cmd->add_option("--thread-list", thread_list, "Comma-separated thread counts")->capture_default_str();
  check_cmd->add_option("--repeats", repeats, "Runs per thread count")->capture_default_str();
  check_cmd->add_option("--grain", grain, "Loop chunk size")->capture_default_str();

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "Run a parameter sweep and write CSV");
  std::string policies = "HDH,HWD,LDH,LWD,RAND";
  std::string coarse_list = "25";
  std::string iters_list = "2";
  std::string csv_path;
  long long sweep_k = 2;
  std::string sweep_epsilon = "0.1";
  sweep_cmd->add_option("--input", input, "Input .hgr file")->required();
  sweep_cmd->add_option("--policies", policies, "Comma-separated policies")->capture_default_str();
  sweep_cmd->add_option("--coarse-to-list", coarse_list, "Comma-separated coarse-to values")->capture_default_str();
  sweep_cmd->add_option("--refine-iters-list", iters_list, "Comma-separated refinement counts")
      ->capture_default_str();
  sweep_cmd->add_option("--k", sweep_k, "Number of parts")->capture_default_str();
  sweep_cmd->add_option("--epsilon", sweep_epsilon, "Imbalance parameter")->capture_default_str();
  sweep_cmd->add_option("--threads", threads, "Worker threads (0 = all cores)");
  sweep_cmd->add_option("--csv", csv_path, "Output CSV (default standard output)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (partition_cmd->parsed()) {
      const Params params = partition_flags.resolve();
      const unsigned nthreads = resolve_threads(threads);
      const Hypergraph g = read_hgr_file(input);
      require_fit(g, params);
      if (output.empty()) output = input + ".part." + std::to_string(params.k);

      Executor ex(nthreads, grain);
      const auto start = Clock::now();
      const KwayResult result = kway_partition(g, params, ex);
      const long long ms = elapsed_ms(start);

      std::ofstream file(output, std::ios::binary);
      if (!file) throw std::runtime_error("cannot write " + output);
      write_partition(result.partition, file);

      const BalanceReport balance = imbalance(result.partition);
      out << "cut=" << cut(g, result.partition, ex) << " maxpart=" << balance.max_part_weight
          << " balanced=" << (balance.balanced(params.epsilon) ? "yes" : "no")
          << " levels=" << result.coarsening_levels << " time_ms=" << ms << '\n';
      return kOk;
    }

    if (evaluate_cmd->parsed()) {
      if (eval_k < 1 || eval_k > std::numeric_limits<PartId>::max()) throw InvalidParams("--k must be >= 1");
      const auto eps = Fraction::parse_decimal(eval_epsilon);
      if (!eps) throw InvalidParams("--epsilon must be a non-negative decimal");
      const Hypergraph g = read_hgr_file(input);
      std::ifstream file(partition_path, std::ios::binary);
      if (!file) throw std::runtime_error("cannot open " + partition_path);
      const Partition p = parse_partition(file, g.node_weights(), static_cast<PartId>(eval_k));

      const BalanceReport balance = imbalance(p);
      out << "cut=" << cut(g, p) << '\n' << "part_weights=";
      for (PartId i = 0; i < p.k(); ++i) out << (i ? "," : "") << p.part_weight(i);
      out << '\n'
          << "max_part_weight=" << balance.max_part_weight << '\n'
          << "bound=" << balance.bound(*eps).to_string() << '\n'
          << "balanced=" << (balance.balanced(*eps) ? "yes" : "no") << '\n';
      return kOk;
    }

    if (check_cmd->parsed()) {
      const Params params = check_flags.resolve();
      const auto counts = split_list<unsigned>(thread_list, "thread count");
      if (std::find(counts.begin(), counts.end(), 0u) != counts.end()) {
        throw InvalidParams("thread counts must be >= 1");
      }
      if (repeats < 1) throw InvalidParams("--repeats must be >= 1");
      const Hypergraph g = read_hgr_file(input);
      require_fit(g, params);

      const DeterminismReport report =
          check_determinism(g, params, counts, static_cast<unsigned>(repeats), grain, pipeline);
      if (!report.identical) {
        out << "MISMATCH " << report.first_diff << '\n';
        return kMismatch;
      }
      out << "identical runs=" << report.runs << " threads=" << thread_list << '\n';
      return kOk;
    }

    if (sweep_cmd->parsed()) {
      const auto pols = split_list<Policy>(policies, "policy");
      const auto levels = split_list<unsigned>(coarse_list, "coarse-to value");
      const auto iters = split_list<unsigned>(iters_list, "refine-iters value");
      if (std::find(levels.begin(), levels.end(), 0u) != levels.end()) {
        throw InvalidParams("coarse-to values must be >= 1");
      }
      if (sweep_k < 1 || sweep_k > std::numeric_limits<PartId>::max()) throw InvalidParams("--k must be >= 1");
      const auto eps = Fraction::parse_decimal(sweep_epsilon);
      if (!eps) throw InvalidParams("--epsilon must be a non-negative decimal");
      const unsigned nthreads = resolve_threads(threads);
      const Hypergraph g = read_hgr_file(input);
      Params fit;
      fit.k = static_cast<PartId>(sweep_k);
      require_fit(g, fit);

      Executor ex(nthreads);
      const auto rows = run_sweep(g, pols, levels, iters, fit.k, *eps, ex);
      if (csv_path.empty()) {
        write_sweep_csv(rows, out);
      } else {
        std::ofstream file(csv_path, std::ios::binary);
        if (!file) throw std::runtime_error("cannot write " + csv_path);
        write_sweep_csv(rows, file);
        if (!file) throw std::runtime_error("write failed: " + csv_path);
      }
      return kOk;
    }
  } catch (const InvalidParams& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kUsageError;
}

}  // namespace detpart::cli
