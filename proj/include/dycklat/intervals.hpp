#pragma once

// Intervals of F_n^p: boolean and linear classification, Moebius values and
// height-indexed counts.

#include <cstdint>
#include <map>
#include <string_view>
#include <vector>

#include "dycklat/dyck_path.hpp"
#include "dycklat/lattice.hpp"

namespace dycklat {

/// [lower, upper] with lower <= upper, both in F_n^p.
class Interval {
 public:
  /// Throws NotInFamily, LengthMismatch or InvalidInterval.
  Interval(DyckPath lower, DyckPath upper, FamilyParam p);

  const DyckPath& lower() const noexcept { return lower_; }
  const DyckPath& upper() const noexcept { return upper_; }
  FamilyParam family() const noexcept { return p_; }
  int semilength() const noexcept { return lower_.semilength(); }

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  DyckPath lower_;
  DyckPath upper_;
  FamilyParam p_;
};

/// Largest interval materialized by interval_elements / mobius_bruteforce.
inline constexpr std::size_t kMaxIntervalElements = std::size_t{1} << 20;

int interval_height(const Interval& interval);
/// Elements of the interval in canonical order. Throws SizeGuard.
std::vector<DyckPath> interval_elements(const Interval& interval);

/// Factorization test: lower and upper agree except on disjoint windows
/// where lower reads DU and upper reads UD, and each single window exchange
/// applied to lower stays in the family (so upper is a join of covers).
bool is_boolean(const Interval& interval);

/// 0 unless boolean, then (-1)^height.
int mobius(const Interval& interval);
/// Direct evaluation of mu(P,Q) = -sum_{P <= R < Q} mu(P,R).
int mobius_bruteforce(const Interval& interval);

/// Walks up from lower; linear iff every step has exactly one cover below upper.
bool is_linear(const Interval& interval);

/// Structural shapes of linear intervals. SameType: lower and upper share
/// their last descent length and strip to a linear interval. A2/B2: type gap
/// of at least two (the (a)/(b) forms). A3/B3/C3: type gap of exactly one.
enum class LinearForm { SameType, A2, B2, A3, B3, C3, NotLinear };
std::string_view to_string(LinearForm form);

/// Matches a non-degenerate interval against the structural forms.
/// Throws InvalidInterval when lower == upper.
LinearForm classify_linear(const Interval& interval);

enum class IntervalKind { All, Boolean, Linear };
/// Height (rank difference) for Boolean/Linear; difference of first ascent
/// lengths for All.
enum class IntervalStatistic { Height, AscentDifference };

std::string_view to_string(IntervalKind kind);
std::string_view to_string(IntervalStatistic stat);

struct IntervalHistogram {
  IntervalKind kind;
  IntervalStatistic statistic;
  std::map<int, std::uint64_t> counts;

  std::uint64_t total() const;
  friend bool operator==(const IntervalHistogram&, const IntervalHistogram&) = default;
};

inline constexpr IntervalStatistic statistic_for(IntervalKind kind) {
  return kind == IntervalKind::All ? IntervalStatistic::AscentDifference : IntervalStatistic::Height;
}

/// Largest number of ordered pairs the exhaustive loops will visit.
inline constexpr std::uint64_t kMaxPairComparisons = 1'000'000'000ULL;

/// Dispatches to the parallel kernels.
IntervalHistogram count_intervals(const Lattice& lattice, IntervalKind kind);
IntervalHistogram count_intervals(int n, FamilyParam p, IntervalKind kind);

}  // namespace dycklat
