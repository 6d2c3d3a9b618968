#pragma once

#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "detpart/executor.hpp"
#include "detpart/hypergraph.hpp"
#include "detpart/params.hpp"

namespace detpart::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kUsageError = 2,
  kMismatch = 3,
};

/// The pipeline under test; the default runs kway_partition.
using PartitionFn = std::function<Partition(const Hypergraph&, const Params&, Executor&)>;

Partition default_pipeline(const Hypergraph& g, const Params& params, Executor& ex);

struct DeterminismReport {
  bool identical = true;
  std::size_t runs = 0;
  /// Human-readable location of the first difference, empty when identical.
  std::string first_diff;
};

/// Runs `fn` `repeats` times for each thread count and compares the written
/// partition files byte for byte against the first run.
DeterminismReport check_determinism(const Hypergraph& g, const Params& params,
                                    std::span<const unsigned> thread_counts, unsigned repeats,
                                    std::size_t grain = Executor::kDefaultGrain,
                                    const PartitionFn& fn = default_pipeline);

struct SweepRow {
  Policy policy = Policy::LDH;
  unsigned coarse_to = 0;
  unsigned refine_iters = 0;
  PartId k = 2;
  Weight cut = 0;
  Weight max_part_weight = 0;
  bool balanced = false;
  long long time_ms = 0;
};

/// Full cross product, rows ordered by (policy name, coarse_to, refine_iters).
std::vector<SweepRow> run_sweep(const Hypergraph& g, std::vector<Policy> policies,
                                std::vector<unsigned> coarse_to, std::vector<unsigned> refine_iters,
                                PartId k, Fraction epsilon, Executor& ex);

void write_sweep_csv(std::span<const SweepRow> rows, std::ostream& out);

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name; `pipeline` is what check-determinism exercises.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const PartitionFn& pipeline = default_pipeline);

}  // namespace detpart::cli
