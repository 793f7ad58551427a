#pragma once

#include <string>
#include <vector>

#include "fdrelay/scenario.hpp"

namespace fdrelay {

/// Evaluates the closed-form curves over the configured dB grid and writes
/// <out>_analytic.csv with columns
///   gamma_db,cdf_dt,cdf_sdf,cdf_isdf,pdf_sdf,pdf_isdf
/// Byte output is deterministic for a fixed config. Returns the file path.
std::string cmd_analytic(const ScenarioConfig& cfg);

/// Runs the Monte Carlo engine for every configured protocol and writes
/// <out>_<protocol>_ecdf.csv (columns gamma_db,ecdf over the histogram bin
/// edges) plus <out>_summary.txt, a key=value file echoing the resolved
/// configuration and per-protocol statistics. Returns the written paths
/// (ecdf files in protocol order, then the summary).
std::vector<std::string> cmd_simulate(const ScenarioConfig& cfg);

/// Runs SDF and ISDF across the configured rate sweep and writes
/// <out>_sweep.csv with simulated and closed-form average SNR and
/// cooperation percentages per rate. Returns the file path.
std::string cmd_sweep(const ScenarioConfig& cfg);

}  // namespace fdrelay
