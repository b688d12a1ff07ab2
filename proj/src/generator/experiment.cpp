#include "tetravex/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdio>
#include <thread>

#include "tetravex/error.hpp"
#include "tetravex/rng.hpp"
#include "tetravex/solver.hpp"

namespace tvx {

namespace {

struct TrialResult {
  bool solvable = false;
  bool unique = false;
  std::uint64_t nodes = 0;
  double micros = 0;
};

TrialResult run_trial(GenConfig cfg, std::uint64_t seed) {
  cfg.seed = seed;
  const SolveResult r = solve(generate(cfg), 2);
  return {r.count >= 1, r.count == 1, r.stats.nodes_expanded,
          static_cast<double>(r.stats.elapsed.count()) / 1000.0};
}

// Trials land in their own slots, so the summary below sees them in index
// order whatever the schedule was.
std::vector<TrialResult> run_trials(const GenConfig& cfg, const ExperimentSpec& spec) {
  const auto n = static_cast<std::size_t>(spec.trials);
  std::vector<TrialResult> results(n);
  unsigned threads = spec.threads != 0 ? spec.threads : std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < n; k = next++) {
      results[k] = run_trial(cfg, derive_seed(spec.seed, k));
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return results;
}

}  // namespace

std::vector<ExperimentRow> run_experiment(const ExperimentSpec& spec) {
  if (spec.trials < 1) throw InvalidArgument("trials must be at least 1");
  std::vector<ExperimentRow> rows;
  for (GenMode mode : spec.modes) {
    for (BoardSize size : spec.sizes) {
      for (int alphabet : spec.alphabets) {
        const GenConfig cfg{size.width, size.height, alphabet, spec.seed, mode};
        // Surface config errors here rather than inside a worker thread.
        (void)generate(cfg);
        const auto results = run_trials(cfg, spec);

        ExperimentRow row{mode, size.width, size.height, alphabet, spec.seed, spec.trials};
        std::uint64_t solvable = 0;
        std::uint64_t unique = 0;
        double nodes = 0;
        double micros = 0;
        for (const TrialResult& t : results) {
          solvable += t.solvable ? 1 : 0;
          unique += t.unique ? 1 : 0;
          nodes += static_cast<double>(t.nodes);
          micros += t.micros;
        }
        const double trials = spec.trials;
        row.solvable_frac = static_cast<double>(solvable) / trials;
        row.unique_frac = static_cast<double>(unique) / trials;
        row.mean_nodes = nodes / trials;
        row.mean_micros = micros / trials;
        rows.push_back(row);
      }
    }
  }
  return rows;
}

std::string experiment_csv(const std::vector<ExperimentRow>& rows) {
  std::string out = kExperimentCsvHeader;
  out += '\n';
  char buf[256];
  for (const ExperimentRow& r : rows) {
    std::snprintf(buf, sizeof buf, "%s,%d,%d,%d,%llu,%d,%.6f,%.6f,%.3f,%.3f\n",
                  std::string(to_string(r.mode)).c_str(), r.width, r.height, r.alphabet,
                  static_cast<unsigned long long>(r.seed), r.trials, r.solvable_frac, r.unique_frac,
                  r.mean_nodes, r.mean_micros);
    out += buf;
  }
  return out;
}

BoardSize parse_board_size(std::string_view text) {
  const auto x = text.find('x');
  auto number = [&](std::string_view part) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc{} || ptr != part.data() + part.size() || v < 1) {
      throw InvalidArgument("bad board size '" + std::string(text) + "' (expected WxH)");
    }
    return v;
  };
  if (x == std::string_view::npos) throw InvalidArgument("bad board size '" + std::string(text) + "' (expected WxH)");
  return {number(text.substr(0, x)), number(text.substr(x + 1))};
}

}  // namespace tvx
