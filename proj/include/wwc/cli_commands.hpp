#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "wwc/arma.hpp"

namespace wwc::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitData = 3;
inline constexpr int kExitDegenerate = 4;

/// Parses "p,q" with p, q in {0, 1}.
ArmaOrders parse_orders(const std::string& text);

/// Generates a scenario and writes ground_truth.ndjson, sparse_pairs.ndjson
/// (appearance angles included), and dense_frames.ndjson into out_dir.
void run_simulate(const std::string& config_path, const std::string& out_dir,
                  std::optional<std::uint64_t> seed, std::ostream& log);

/// Runs the two-frame detector over a sparse-pairs file and writes the
/// aligned count series. no_ensemble classifies on motion orientation alone.
void run_detect(const std::string& in_path, const std::string& out_path,
                std::optional<double> t_gap, std::optional<double> div_max, bool no_ensemble,
                std::ostream& log);

/// Fits both count series and writes the ratio report.
void run_estimate(const std::string& in_path, const std::string& out_path,
                  std::optional<std::string> orders_right,
                  std::optional<std::string> orders_wrong, std::ostream& log);

/// Runs sparse pipeline, detection-only ablation, and tracker baseline over
/// seeded scenario variants; writes bench rows and prints the table.
void run_bench(const std::string& config_path, const std::string& out_path,
               std::optional<int> seeds, std::ostream& log);

/// Maps a thrown error onto the command exit code.
int exit_code_for(const std::exception& error);

}  // namespace wwc::cli
