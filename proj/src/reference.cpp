#include "dycklat/reference.hpp"

#include <algorithm>

namespace dycklat::reference {
namespace {

void guard_pairs(std::size_t size) {
  const auto n = static_cast<std::uint64_t>(size);
  if (n * n > kMaxPairComparisons) throw Error(ErrorKind::SizeGuard, "interval pair loop exceeds 10^9 comparisons");
}

}  // namespace

DegreeHistogram upper_cover_histogram(int n, FamilyParam p) {
  DegreeHistogram out;
  for (const DyckPath& e : enumerate_family(n, p)) ++out[static_cast<int>(upper_covers(e, p).size())];
  return out;
}

DegreeHistogram lower_cover_histogram(int n, FamilyParam p) {
  DegreeHistogram out;
  for (const DyckPath& e : enumerate_family(n, p)) ++out[static_cast<int>(lower_covers(e, p).size())];
  return out;
}

IntervalHistogram count_intervals(int n, FamilyParam p, IntervalKind kind) {
  const std::vector<DyckPath> elems = enumerate_family(n, p);
  guard_pairs(elems.size());
  IntervalHistogram out{kind, statistic_for(kind), {}};
  for (const DyckPath& lo : elems) {
    for (const DyckPath& hi : elems) {
      if (!leq(lo, hi)) continue;
      const Interval iv(lo, hi, p);
      switch (kind) {
        case IntervalKind::All:
          ++out.counts[first_ascent(hi) - first_ascent(lo)];
          break;
        case IntervalKind::Boolean:
          if (is_boolean(iv)) ++out.counts[interval_height(iv)];
          break;
        case IntervalKind::Linear:
          if (is_linear(iv)) ++out.counts[interval_height(iv)];
          break;
      }
    }
  }
  return out;
}

MobiusSweep mobius_sweep(int n, FamilyParam p) {
  const std::vector<DyckPath> elems = enumerate_family(n, p);
  guard_pairs(elems.size());
  MobiusSweep out;
  for (std::uint32_t a = 0; a < elems.size(); ++a) {
    for (std::uint32_t b = 0; b < elems.size(); ++b) {
      if (!leq(elems[a], elems[b])) continue;
      const Interval iv(elems[a], elems[b], p);
      ++out.intervals;
      bool failed = false;
      if (mobius_bruteforce(iv) != mobius(iv)) {
        ++out.closed_form_mismatches;
        failed = true;
      }
      if (a != b) {
        int row = 0;
        for (const DyckPath& r : interval_elements(iv)) row += mobius(Interval(elems[a], r, p));
        if (row != 0) {
          ++out.nonzero_row_sums;
          failed = true;
        }
      }
      if (failed && !out.first_failure) out.first_failure = std::make_pair(a, b);
    }
  }
  return out;
}

}  // namespace dycklat::reference
