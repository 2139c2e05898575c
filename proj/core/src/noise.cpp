// Copyright 2026 The Twine Authors
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

#include "twine/noise.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace twine {

double circuit_fidelity(std::size_t cnot_count, double depth, std::size_t n,
                        const NoiseParams& params) {
  if (params.f_2q <= 0.0 || params.f_2q > 1.0 || params.f_idle <= 0.0 || params.f_idle > 1.0) {
    throw std::invalid_argument("fidelities must lie in (0, 1]");
  }
  const double count = static_cast<double>(cnot_count);
  return std::pow(params.f_2q, count) *
         std::pow(params.f_idle, static_cast<double>(n) * depth - 2.0 * count);
}

double circuit_fidelity(const Metrics& metrics, std::size_t n, const NoiseParams& params,
                        bool use_effective_depth) {
  const double depth =
      use_effective_depth ? metrics.effective_depth : static_cast<double>(metrics.cnot_depth);
  return circuit_fidelity(metrics.cnot_count, depth, n, params);
}

double idle_fidelity(double t1, double t2, double tg) {
  if (t1 <= 0.0 || t2 <= 0.0 || tg < 0.0) {
    throw std::invalid_argument("lifetimes must be positive and gate time non-negative");
  }
  return 0.5 + (2.0 * std::exp(-tg / t2) + std::exp(-tg / t1)) / 6.0;
}

std::vector<DesignCurve> design_curves(std::size_t n) {
  const double nd = static_cast<double>(n);
  return {
      {"lnn", nd * nd, 3.0 * nd + 2.0},
      {"heavy_hex", 5.0 / 6.0 * nd * nd + 17.0 / 6.0 * nd, 10.0 / 3.0 * nd + 51.0 / 3.0},
      {"ladder", 3.0 / 4.0 * nd * nd + nd, 9.0 / 4.0 * nd + 3.0 / 2.0},
      {"grid", 2.0 / 3.0 * nd * nd + 2.0 / 3.0 * nd, 11.0 / 3.0 * nd + 4.0 / 3.0},
  };
}

DesignRanking best_design(std::size_t n, const NoiseParams& params) {
  DesignRanking ranking;
  const auto curves = design_curves(n);
  for (const auto& c : curves) {
    ranking.fidelity.emplace_back(c.name, circuit_fidelity(static_cast<std::size_t>(
                                              std::llround(c.count)),
                                          c.eff_depth, n, params));
  }
  std::sort(ranking.fidelity.begin(), ranking.fidelity.end(),
            [](const auto& a, const auto& b) { return a.second > b.second; });
  // pairwise tie exponents: ds log(f2q) + (n dd - 2 ds) log(fi) = 0 with
  // f2q = fi^x gives x = (2 ds - n dd) / ds
  for (std::size_t i = 0; i < curves.size(); ++i) {
    for (std::size_t j = i + 1; j < curves.size(); ++j) {
      const double ds = curves[i].count - curves[j].count;
      const double dd = curves[i].eff_depth - curves[j].eff_depth;
      if (ds == 0.0) continue;
      const double x = (2.0 * ds - static_cast<double>(n) * dd) / ds;
      ranking.crossovers.emplace_back(curves[i].name, curves[j].name, x);
    }
  }
  return ranking;
}

double ladder_grid_crossover_exponent(std::size_t n) {
  // Solve log(F_grid / F_ladder) = 0 for f_2q = f_idle^x numerically: the
  // log-ratio is linear in x, so bisection converges to machine precision.
  const auto curves = design_curves(n);
  const DesignCurve* ladder = nullptr;
  const DesignCurve* grid = nullptr;
  for (const auto& c : curves) {
    if (c.name == "ladder") ladder = &c;
    if (c.name == "grid") grid = &c;
  }
  const double nd = static_cast<double>(n);
  auto log_ratio = [&](double x) {
    // with log(f_idle) = -1: log F = count * (-x) + (n depth - 2 count) * (-1)
    const double lg = grid->count * (-x) - (nd * grid->eff_depth - 2.0 * grid->count);
    const double ll = ladder->count * (-x) - (nd * ladder->eff_depth - 2.0 * ladder->count);
    return lg - ll;
  };
  double lo = 0.0, hi = 64.0;
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = (lo + hi) / 2.0;
    if (log_ratio(lo) * log_ratio(mid) <= 0.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return (lo + hi) / 2.0;
}

double process_fidelity(const std::vector<double>& probs) {
  const std::size_t m = probs.size();
  if (m < 2) throw std::invalid_argument("process fidelity needs at least two probabilities");
  double sum_sqrt = 0.0, sum = 0.0;
  for (double p : probs) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("probability out of [0, 1]");
    sum_sqrt += std::sqrt(p);
    sum += p;
  }
  const double md = static_cast<double>(m);
  const double mean_sqrt = sum_sqrt / md;
  return md / (md - 1.0) * mean_sqrt * mean_sqrt - sum / (md * (md - 1.0));
}

}  // namespace twine
