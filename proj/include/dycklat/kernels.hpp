#pragma once

// OpenMP kernels over a materialized lattice. Each has a serial counterpart
// in reference.hpp built from the per-element / per-pair definitions; the
// test suite checks they agree.

#include <cstdint>
#include <map>
#include <optional>
#include <utility>

#include "dycklat/intervals.hpp"
#include "dycklat/lattice.hpp"

namespace dycklat {

/// Number of elements keyed by cover count.
using DegreeHistogram = std::map<int, std::uint64_t>;

struct MobiusSweep {
  std::uint64_t intervals = 0;
  std::uint64_t closed_form_mismatches = 0;
  std::uint64_t nonzero_row_sums = 0;
  /// Lexicographically smallest (lower, upper) index pair that failed, if any.
  std::optional<std::pair<std::uint32_t, std::uint32_t>> first_failure;

  bool ok() const noexcept { return closed_form_mismatches == 0 && nonzero_row_sums == 0; }
};

namespace kernels {

DegreeHistogram upper_cover_histogram(const Lattice& lattice);
DegreeHistogram lower_cover_histogram(const Lattice& lattice);

/// Exhaustive pair loop, keyed by first-ascent difference.
IntervalHistogram count_all_intervals(const Lattice& lattice);
/// Boolean intervals with bottom P correspond to subsets of P's upper covers.
IntervalHistogram count_boolean_intervals(const Lattice& lattice);
/// Grows every chain upward from each bottom element; a cover Q' of the
/// current top extends the chain iff Q is its only lower cover above the bottom.
IntervalHistogram count_linear_intervals(const Lattice& lattice);

/// Recursive Moebius values from every bottom element, compared with the
/// boolean closed form, plus the row-sum identity.
MobiusSweep mobius_sweep(const Lattice& lattice);

}  // namespace kernels
}  // namespace dycklat
