// Copyright 2026 The Authors.
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

#include "submodular/properties.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace submodular {
namespace {

bool UseExhaustive(const ValueOracle& f, const CheckOptions& opts,
                   const char* property) {
  const std::size_t n = f.ground_size();
  if (n <= opts.max_exhaustive) return true;
  if (opts.samples == 0) {
    throw SizeGuardError(std::string(property) + ": n = " + std::to_string(n) +
                         " exceeds the exhaustive ceiling of " +
                         std::to_string(opts.max_exhaustive) +
                         "; pass an explicit sample count");
  }
  return false;
}

Subset RandomSubset(std::size_t n, std::mt19937_64& rng) {
  Subset s(n);
  std::bernoulli_distribution coin(0.5);
  for (ElementId p = 0; p < n; ++p) {
    if (coin(rng)) s.Insert(p);
  }
  return s;
}

// A random outside element, or nullopt when s is full.
std::optional<ElementId> RandomOutside(const Subset& s, std::mt19937_64& rng) {
  std::vector<ElementId> outside;
  for (ElementId p = 0; p < s.width(); ++p) {
    if (!s.Contains(p)) outside.push_back(p);
  }
  if (outside.empty()) return std::nullopt;
  std::uniform_int_distribution<std::size_t> pick(0, outside.size() - 1);
  return outside[pick(rng)];
}

void MarkSampled(PropertyReport& report) {
  report.exhaustive = false;
  report.detail = "sampled, not proven";
}

}  // namespace

std::string Witness::ToString() const {
  std::ostringstream out;
  out << "S=" << s.ToString();
  if (r) out << " R=" << r->ToString();
  if (p) out << " p=" << *p;
  return out.str();
}

std::string PropertyReport::ToString() const {
  std::ostringstream out;
  out << property << ": " << (holds ? "holds" : "FAILS") << " ("
      << checks_performed << " checks, "
      << (exhaustive ? "exhaustive" : "sampled") << ")";
  if (witness) out << " witness " << witness->ToString();
  if (!detail.empty()) out << " [" << detail << "]";
  return out.str();
}

PropertyReport CheckNormal(const ValueOracle& f, const CheckOptions& opts) {
  PropertyReport report{.property = "normal"};
  const Subset empty(f.ground_size());
  const double value = f.Evaluate(empty);
  report.checks_performed = 1;
  if (std::abs(value) > opts.tolerance) {
    report.holds = false;
    report.witness = Witness{.s = empty};
    report.detail = "f({}) = " + std::to_string(value);
  }
  return report;
}

PropertyReport CheckMonotone(const ValueOracle& f, const CheckOptions& opts) {
  PropertyReport report{.property = "monotone"};
  const std::size_t n = f.ground_size();
  if (UseExhaustive(f, opts, "monotone")) {
    const std::vector<double> table = Tabulate(f);
    for (std::uint64_t mask = 0; mask < table.size(); ++mask) {
      for (ElementId p = 0; p < n; ++p) {
        const std::uint64_t bit = std::uint64_t{1} << p;
        if (mask & bit) continue;
        ++report.checks_performed;
        if (table[mask | bit] < table[mask] - opts.tolerance) {
          report.holds = false;
          report.witness = Witness{.s = Subset::FromMask(n, mask), .p = p};
          return report;
        }
      }
    }
    return report;
  }
  MarkSampled(report);
  std::mt19937_64 rng(opts.seed);
  for (std::size_t i = 0; i < opts.samples; ++i) {
    const Subset s = RandomSubset(n, rng);
    const auto p = RandomOutside(s, rng);
    if (!p) continue;
    ++report.checks_performed;
    if (f.Evaluate(s.With(*p)) < f.Evaluate(s) - opts.tolerance) {
      report.holds = false;
      report.witness = Witness{.s = s, .p = *p};
      return report;
    }
  }
  return report;
}

PropertyReport CheckSubmodular(const ValueOracle& f, const CheckOptions& opts) {
  PropertyReport report{.property = "submodular"};
  const std::size_t n = f.ground_size();
  if (UseExhaustive(f, opts, "submodular")) {
    const std::vector<double> table = Tabulate(f);
    const std::uint64_t full = table.size() - 1;
    for (std::uint64_t r = 0; r <= full; ++r) {
      const std::uint64_t outside = full & ~r;
      // Every submask s of r, including r itself and the empty set.
      for (std::uint64_t s = r;; s = (s - 1) & r) {
        for (std::uint64_t rest = outside; rest != 0; rest &= rest - 1) {
          const std::uint64_t bit = rest & (~rest + 1);
          ++report.checks_performed;
          const double gain_small = table[s | bit] - table[s];
          const double gain_large = table[r | bit] - table[r];
          if (gain_small < gain_large - opts.tolerance) {
            report.holds = false;
            report.witness =
                Witness{.s = Subset::FromMask(n, s),
                        .r = Subset::FromMask(n, r),
                        .p = static_cast<ElementId>(__builtin_ctzll(bit))};
            return report;
          }
        }
        if (s == 0) break;
      }
    }
    return report;
  }
  MarkSampled(report);
  std::mt19937_64 rng(opts.seed);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t i = 0; i < opts.samples; ++i) {
    const Subset r = RandomSubset(n, rng);
    const auto p = RandomOutside(r, rng);
    if (!p) continue;
    Subset s(n);
    r.ForEach([&](ElementId q) {
      if (coin(rng)) s.Insert(q);
    });
    ++report.checks_performed;
    if (MarginalGain(f, *p, s) < MarginalGain(f, *p, r) - opts.tolerance) {
      report.holds = false;
      report.witness = Witness{.s = s, .r = r, .p = *p};
      return report;
    }
  }
  return report;
}

PropertyReport CheckSubmodularLattice(const ValueOracle& f,
                                      const CheckOptions& opts) {
  PropertyReport report{.property = "submodular (lattice form)"};
  const std::size_t n = f.ground_size();
  if (n > opts.max_exhaustive) {
    throw SizeGuardError("lattice form is exhaustive only");
  }
  const std::vector<double> table = Tabulate(f);
  for (std::uint64_t s = 0; s < table.size(); ++s) {
    for (std::uint64_t r = 0; r < table.size(); ++r) {
      ++report.checks_performed;
      if (table[s] + table[r] < table[s | r] + table[s & r] - opts.tolerance) {
        report.holds = false;
        report.witness =
            Witness{.s = Subset::FromMask(n, s), .r = Subset::FromMask(n, r)};
        return report;
      }
    }
  }
  return report;
}

CurvatureReport TotalCurvature(const ValueOracle& f, const CheckOptions& opts) {
  CurvatureReport report;
  const std::size_t n = f.ground_size();
  const bool exhaustive = n <= opts.max_exhaustive;
  report.exhaustive = exhaustive;

  std::vector<double> table;
  if (exhaustive) table = Tabulate(f);
  const double empty_value = exhaustive ? table[0] : f.Evaluate(Subset(n));

  double min_ratio = 1.0;
  for (ElementId p = 0; p < n; ++p) {
    const double singleton_gain = (exhaustive ? table[std::uint64_t{1} << p]
                                              : f.Evaluate(Subset(n, {p}))) -
                                  empty_value;
    if (singleton_gain <= opts.tolerance) {
      // 0/0: treat the element as worthless, which pins the curvature at 1.
      report.zero_singletons.push_back(p);
      min_ratio = 0.0;
      continue;
    }
    if (exhaustive) {
      const std::uint64_t bit = std::uint64_t{1} << p;
      for (std::uint64_t r = 0; r < table.size(); ++r) {
        if (r & bit) continue;
        ++report.checks_performed;
        min_ratio =
            std::min(min_ratio, (table[r | bit] - table[r]) / singleton_gain);
      }
    } else {
      ++report.checks_performed;
      const Subset rest = Subset::Full(n).Without(p);
      min_ratio =
          std::min(min_ratio, MarginalGain(f, p, rest) / singleton_gain);
    }
  }
  report.curvature = std::clamp(1.0 - min_ratio, 0.0, 1.0);
  return report;
}

}  // namespace submodular
