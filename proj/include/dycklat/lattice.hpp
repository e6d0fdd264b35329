#pragma once

// The Stanley order restricted to F_n^p.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "dycklat/dyck_path.hpp"

namespace dycklat {

/// P <= Q iff P's height profile lies weakly below Q's.
bool leq(const DyckPath& lower, const DyckPath& upper);
/// Pointwise minimum of the height profiles.
DyckPath meet(const DyckPath& a, const DyckPath& b);
/// Pointwise maximum of the height profiles.
DyckPath join(const DyckPath& a, const DyckPath& b);

/// Family members reached by one DU -> UD exchange, in canonical order.
std::vector<DyckPath> upper_covers(const DyckPath& path, FamilyParam p);
/// Family members reached by one UD -> DU exchange, in canonical order.
std::vector<DyckPath> lower_covers(const DyckPath& path, FamilyParam p);

std::vector<DyckPath> meet_irreducibles(int n, FamilyParam p);
std::vector<DyckPath> join_irreducibles(int n, FamilyParam p);

/// floor(n^2 (p-1) / (2p)).
std::int64_t turan_edges_floor(int n, int p);
/// (n^2 - sum s_i^2) / 2 over the p balanced part sizes of n.
std::int64_t turan_edges_partition(int n, int p);
/// Edge count of the (n,p)-Turan graph; both routes are evaluated and must agree.
std::int64_t turan_edges(int n, int p);

/// Closed-form rank of F_n^p (area of its maximum).
std::int64_t lattice_rank(int n, FamilyParam p);
/// Maximum element of F_n^p, built from the subset {1..n-1} minus {n-p, n-2p, ...}.
DyckPath lattice_top(int n, FamilyParam p);
DyckPath lattice_bottom(int n);

/// Cover pairs (lower, upper) sorted by (lower, upper) in canonical order.
std::vector<std::pair<DyckPath, DyckPath>> hasse_edges(int n, FamilyParam p);

/// Lower cover entry: target index plus the profile position whose height
/// drops by 2 when moving down from the source.
struct LowerCover {
  std::uint32_t target;
  std::uint16_t position;
};

/// F_n^p materialized with precomputed profiles and cover adjacency.
/// Elements are indexed in canonical order.
class Lattice {
 public:
  Lattice(int n, FamilyParam p);

  int semilength() const noexcept { return n_; }
  FamilyParam family() const noexcept { return p_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<DyckPath>& elements() const noexcept { return elements_; }
  const DyckPath& element(std::size_t i) const noexcept { return elements_[i]; }

  /// Throws NotInFamily when the path is absent.
  std::uint32_t index_of(const DyckPath& path) const;

  std::span<const std::int8_t> profile(std::size_t i) const noexcept {
    return {profiles_.data() + i * stride_, stride_};
  }
  int area(std::size_t i) const noexcept { return areas_[i]; }
  int first_ascent(std::size_t i) const noexcept { return ascents_[i]; }

  std::span<const std::uint32_t> upper(std::size_t i) const noexcept {
    return {upper_.data() + upper_offsets_[i], upper_offsets_[i + 1] - upper_offsets_[i]};
  }
  std::span<const LowerCover> lower(std::size_t i) const noexcept {
    return {lower_.data() + lower_offsets_[i], lower_offsets_[i + 1] - lower_offsets_[i]};
  }

  bool leq(std::size_t a, std::size_t b) const noexcept {
    const std::int8_t* pa = profiles_.data() + a * stride_;
    const std::int8_t* pb = profiles_.data() + b * stride_;
    for (std::size_t k = 0; k < stride_; ++k) {
      if (pa[k] > pb[k]) return false;
    }
    return true;
  }

  std::uint32_t bottom() const;
  std::uint32_t top() const;

 private:
  int n_;
  FamilyParam p_;
  std::vector<DyckPath> elements_;
  std::size_t stride_;
  std::vector<std::int8_t> profiles_;
  std::vector<int> areas_;
  std::vector<int> ascents_;
  std::vector<std::size_t> upper_offsets_;
  std::vector<std::uint32_t> upper_;
  std::vector<std::size_t> lower_offsets_;
  std::vector<LowerCover> lower_;
};

}  // namespace dycklat
