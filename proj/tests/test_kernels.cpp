#include <doctest.h>

#include "dycklat/kernels.hpp"
#include "dycklat/reference.hpp"

using namespace dycklat;

TEST_CASE("parallel kernels match the serial reference") {
  for (FamilyParam p : {FamilyParam::finite(2), FamilyParam::finite(3), FamilyParam::finite(4), FamilyParam::infinity()}) {
    for (int n = 1; n <= 8; ++n) {
      CAPTURE(n);
      CAPTURE(p.to_string());
      const Lattice lat(n, p);
      CHECK(kernels::upper_cover_histogram(lat) == reference::upper_cover_histogram(n, p));
      CHECK(kernels::lower_cover_histogram(lat) == reference::lower_cover_histogram(n, p));
      CHECK(kernels::count_all_intervals(lat) == reference::count_intervals(n, p, IntervalKind::All));
      CHECK(kernels::count_boolean_intervals(lat) == reference::count_intervals(n, p, IntervalKind::Boolean));
      CHECK(kernels::count_linear_intervals(lat) == reference::count_intervals(n, p, IntervalKind::Linear));
      const MobiusSweep fast = kernels::mobius_sweep(lat);
      CHECK(fast.ok());
      if (n <= 6) {
        const MobiusSweep slow = reference::mobius_sweep(n, p);
        CHECK(slow.ok());
        CHECK(slow.intervals == fast.intervals);
      }
    }
  }
}

TEST_CASE("kernels are deterministic across runs") {
  const Lattice lat(10, FamilyParam::infinity());
  const IntervalHistogram first = kernels::count_all_intervals(lat);
  for (int i = 0; i < 3; ++i) CHECK(kernels::count_all_intervals(lat) == first);
  CHECK(first.total() == 92378);  // binom(19, 10)
}
