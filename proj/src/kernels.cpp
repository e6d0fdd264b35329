#include "dycklat/kernels.hpp"

#include <algorithm>
#include <vector>

#include <omp.h>

namespace dycklat::kernels {
namespace {

using Counts = std::vector<std::uint64_t>;

void bump(Counts& counts, int key, std::uint64_t by = 1) {
  const auto k = static_cast<std::size_t>(key);
  if (k >= counts.size()) counts.resize(k + 1, 0);
  counts[k] += by;
}

std::map<int, std::uint64_t> to_map(const Counts& counts) {
  std::map<int, std::uint64_t> out;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    if (counts[k] != 0) out[static_cast<int>(k)] = counts[k];
  }
  return out;
}

void merge_into(Counts& total, const Counts& part) {
  if (part.size() > total.size()) total.resize(part.size(), 0);
  for (std::size_t k = 0; k < part.size(); ++k) total[k] += part[k];
}

void guard_pairs(const Lattice& lattice) {
  const auto n = static_cast<std::uint64_t>(lattice.size());
  if (n * n > kMaxPairComparisons) throw Error(ErrorKind::SizeGuard, "interval pair loop exceeds 10^9 comparisons");
}

template <typename Degree>
DegreeHistogram degree_histogram(const Lattice& lattice, Degree degree) {
  Counts total;
#pragma omp parallel
  {
    Counts local;
#pragma omp for schedule(static) nowait
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(lattice.size()); ++i) {
      bump(local, static_cast<int>(degree(static_cast<std::size_t>(i))));
    }
#pragma omp critical
    merge_into(total, local);
  }
  return to_map(total);
}

std::uint64_t binomial(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace

DegreeHistogram upper_cover_histogram(const Lattice& lattice) {
  return degree_histogram(lattice, [&](std::size_t i) { return lattice.upper(i).size(); });
}

DegreeHistogram lower_cover_histogram(const Lattice& lattice) {
  return degree_histogram(lattice, [&](std::size_t i) { return lattice.lower(i).size(); });
}

IntervalHistogram count_all_intervals(const Lattice& lattice) {
  guard_pairs(lattice);
  const auto size = static_cast<std::int64_t>(lattice.size());
  Counts total;
#pragma omp parallel
  {
    Counts local;
#pragma omp for schedule(dynamic, 64) nowait
    for (std::int64_t a = 0; a < size; ++a) {
      const auto lo = static_cast<std::size_t>(a);
      for (std::size_t hi = 0; hi < lattice.size(); ++hi) {
        if (lattice.leq(lo, hi)) bump(local, lattice.first_ascent(hi) - lattice.first_ascent(lo));
      }
    }
#pragma omp critical
    merge_into(total, local);
  }
  return {IntervalKind::All, IntervalStatistic::AscentDifference, to_map(total)};
}

IntervalHistogram count_boolean_intervals(const Lattice& lattice) {
  const auto size = static_cast<std::int64_t>(lattice.size());
  Counts total;
#pragma omp parallel
  {
    Counts local;
#pragma omp for schedule(static) nowait
    for (std::int64_t a = 0; a < size; ++a) {
      const int c = static_cast<int>(lattice.upper(static_cast<std::size_t>(a)).size());
      for (int k = 0; k <= c; ++k) bump(local, k, binomial(c, k));
    }
#pragma omp critical
    merge_into(total, local);
  }
  return {IntervalKind::Boolean, IntervalStatistic::Height, to_map(total)};
}

IntervalHistogram count_linear_intervals(const Lattice& lattice) {
  const auto size = static_cast<std::int64_t>(lattice.size());
  Counts total;
#pragma omp parallel
  {
    Counts local;
    std::vector<std::pair<std::uint32_t, int>> stack;
#pragma omp for schedule(dynamic, 64) nowait
    for (std::int64_t a = 0; a < size; ++a) {
      const auto bottom = static_cast<std::size_t>(a);
      const auto bottom_profile = lattice.profile(bottom);
      bump(local, 0);
      stack.clear();
      stack.emplace_back(static_cast<std::uint32_t>(bottom), 0);
      while (!stack.empty()) {
        const auto [top, height] = stack.back();
        stack.pop_back();
        for (const std::uint32_t next : lattice.upper(top)) {
          const auto next_profile = lattice.profile(next);
          bool extends = true;
          for (const LowerCover& lc : lattice.lower(next)) {
            if (lc.target == top) continue;
            // lc.target equals `next` except two units lower at lc.position.
            if (bottom_profile[lc.position] <= next_profile[lc.position] - 2) {
              extends = false;
              break;
            }
          }
          if (extends) {
            bump(local, height + 1);
            stack.emplace_back(next, height + 1);
          }
        }
      }
    }
#pragma omp critical
    merge_into(total, local);
  }
  return {IntervalKind::Linear, IntervalStatistic::Height, to_map(total)};
}

MobiusSweep mobius_sweep(const Lattice& lattice) {
  guard_pairs(lattice);
  const auto size = static_cast<std::int64_t>(lattice.size());
  const FamilyParam p = lattice.family();
  MobiusSweep total;
#pragma omp parallel
  {
    MobiusSweep local;
    std::vector<std::uint32_t> upset;
    std::vector<int> recursive;
    std::vector<int> closed;
#pragma omp for schedule(dynamic, 8) nowait
    for (std::int64_t a = 0; a < size; ++a) {
      const auto lo = static_cast<std::uint32_t>(a);
      upset.clear();
      for (std::uint32_t b = 0; b < lattice.size(); ++b) {
        if (lattice.leq(lo, b)) upset.push_back(b);
      }
      std::stable_sort(upset.begin(), upset.end(),
                       [&](std::uint32_t x, std::uint32_t y) { return lattice.area(x) < lattice.area(y); });
      recursive.assign(upset.size(), 0);
      closed.assign(upset.size(), 0);
      for (std::size_t k = 0; k < upset.size(); ++k) {
        const std::uint32_t hi = upset[k];
        int sum = 0;
        int row = 0;
        for (std::size_t r = 0; r < k; ++r) {
          if (lattice.leq(upset[r], hi)) {
            sum += recursive[r];
            row += closed[r];
          }
        }
        recursive[k] = hi == lo ? 1 : -sum;
        closed[k] = mobius(Interval(lattice.element(lo), lattice.element(hi), p));
        row += closed[k];
        ++local.intervals;
        const bool mismatch = recursive[k] != closed[k];
        const bool bad_row = hi != lo && row != 0;
        if (mismatch) ++local.closed_form_mismatches;
        if (bad_row) ++local.nonzero_row_sums;
        if ((mismatch || bad_row) && (!local.first_failure || std::make_pair(lo, hi) < *local.first_failure)) {
          local.first_failure = std::make_pair(lo, hi);
        }
      }
    }
#pragma omp critical
    {
      total.intervals += local.intervals;
      total.closed_form_mismatches += local.closed_form_mismatches;
      total.nonzero_row_sums += local.nonzero_row_sums;
      if (local.first_failure && (!total.first_failure || *local.first_failure < *total.first_failure)) {
        total.first_failure = local.first_failure;
      }
    }
  }
  return total;
}

}  // namespace dycklat::kernels
