// Copyright 2026 The bestarm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "bestarm/errors.h"
#include "bestarm/harness.h"

namespace bestarm {
namespace {

void write_file(const std::filesystem::path& path,
                const std::function<void(std::ostream&)>& body) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  body(out);
  out.flush();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

}  // namespace

std::vector<HistogramBin> histogram(std::span<const std::uint64_t> taus,
                                    std::size_t bins) {
  if (bins < 1) throw ContractViolation("histogram needs at least one bin");
  std::vector<HistogramBin> out(bins);
  if (taus.empty()) return out;
  const auto [lo_it, hi_it] = std::minmax_element(taus.begin(), taus.end());
  const double lo = static_cast<double>(*lo_it);
  const double hi = static_cast<double>(*hi_it);
  const double width = (hi - lo) / static_cast<double>(bins);
  for (std::size_t b = 0; b < bins; ++b) {
    out[b].lo = lo + width * static_cast<double>(b);
    out[b].hi = b + 1 == bins ? hi : lo + width * static_cast<double>(b + 1);
  }
  for (std::uint64_t tau : taus) {
    std::size_t b = width > 0.0
                        ? static_cast<std::size_t>((static_cast<double>(tau) - lo) / width)
                        : 0;
    ++out[std::min(b, bins - 1)].count;
  }
  return out;
}

void write_trials_csv(std::ostream& out, const ExperimentReport& report) {
  out << "seed,mode,scenario,tau,correct,truncated\n";
  for (const TrialRow& r : report.rows) {
    out << r.seed << ',' << mode_name(r.mode) << ',' << report.scenario << ','
        << r.tau << ',' << (r.correct ? 1 : 0) << ',' << (r.truncated ? 1 : 0)
        << '\n';
  }
}

void write_summary_json(std::ostream& out, const ExperimentReport& report) {
  nlohmann::ordered_json doc;
  doc["scenario"] = report.scenario;
  doc["delta"] = report.delta;
  doc["alpha"] = report.alpha;
  doc["base_seed"] = report.base_seed;
  // NaN has no JSON spelling.
  if (std::isfinite(report.lower_bound)) {
    doc["lower_bound"] = report.lower_bound;
  } else {
    doc["lower_bound"] = nullptr;
  }
  doc["modes"] = nlohmann::ordered_json::array();
  for (const ModeSummary& s : report.summaries) {
    nlohmann::ordered_json m;
    m["mode"] = std::string(mode_name(s.mode));
    m["trials"] = s.trials;
    m["mean_tau"] = s.mean_tau;
    m["std_tau"] = s.std_tau;
    m["median_tau"] = s.median_tau;
    m["min_tau"] = s.min_tau;
    m["max_tau"] = s.max_tau;
    m["errors"] = s.errors;
    m["error_rate"] = s.error_rate;
    m["truncated"] = s.truncated;
    doc["modes"].push_back(std::move(m));
  }
  out << doc.dump(2) << '\n';
}

void emit_report(const ExperimentReport& report, const std::filesystem::path& dir,
                 std::size_t histogram_bins) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    throw IoError("cannot create output directory '" + dir.string() +
                  "': " + ec.message());
  }
  write_file(dir / "trials.csv",
             [&](std::ostream& out) { write_trials_csv(out, report); });
  write_file(dir / "summary.json",
             [&](std::ostream& out) { write_summary_json(out, report); });
  for (const ModeSummary& s : report.summaries) {
    std::vector<std::uint64_t> taus;
    for (const TrialRow& r : report.rows) {
      if (r.mode == s.mode) taus.push_back(r.tau);
    }
    const auto bins = histogram(taus, histogram_bins);
    const auto path = dir / ("histogram_" + std::string(mode_name(s.mode)) + ".csv");
    write_file(path, [&](std::ostream& out) {
      std::ostringstream body;
      body.precision(17);
      body << "bin_lo,bin_hi,count\n";
      for (const HistogramBin& b : bins) {
        body << b.lo << ',' << b.hi << ',' << b.count << '\n';
      }
      out << body.str();
    });
  }
}

}  // namespace bestarm
