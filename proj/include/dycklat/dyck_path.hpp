#pragma once

// Dyck paths packed into a 128-bit step word, the family parameter p, and
// enumeration of the DUU / D^(p+1) avoiding families.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dycklat/error.hpp"

namespace dycklat {

using StepWord = unsigned __int128;

/// Family selector: a finite p >= 2, or infinity (only DUU is forbidden).
class FamilyParam {
 public:
  static FamilyParam finite(int p);
  static FamilyParam infinity() { return FamilyParam(); }
  /// Accepts a decimal integer >= 2 or the literal "inf".
  static FamilyParam parse(std::string_view text);

  bool is_infinite() const noexcept { return !p_.has_value(); }
  /// Finite value; throws InvalidFamily for infinity.
  int value() const;
  /// Largest run of D steps allowed at semilength n. For infinity this is n,
  /// since the family at semilength n coincides with its p = n member.
  int bound_for(int n) const noexcept { return p_ ? *p_ : n; }
  std::string to_string() const;

  friend bool operator==(const FamilyParam&, const FamilyParam&) = default;

 private:
  FamilyParam() = default;
  explicit FamilyParam(int p) : p_(p) {}
  std::optional<int> p_;
};

/// Immutable Dyck path. Step i is bit i of the word, set for U.
class DyckPath {
 public:
  static constexpr int kMaxSemilength = 64;

  DyckPath() = default;

  /// Checked construction from a packed word.
  static DyckPath from_bits(StepWord bits, int semilength);

  int semilength() const noexcept { return semilength_; }
  int length() const noexcept { return 2 * semilength_; }
  bool empty() const noexcept { return semilength_ == 0; }
  StepWord bits() const noexcept { return bits_; }
  bool is_up(int i) const noexcept { return ((bits_ >> i) & 1) != 0; }

  /// Exchanges steps i and i+1. The caller guarantees the result is a Dyck path.
  DyckPath with_swapped(int i) const noexcept {
    DyckPath out = *this;
    out.bits_ ^= (StepWord{3} << i);
    return out;
  }

  std::string to_string() const;

  friend bool operator==(const DyckPath&, const DyckPath&) = default;

 private:
  friend class PathBuilder;
  DyckPath(StepWord bits, int semilength) : bits_(bits), semilength_(semilength) {}

  StepWord bits_ = 0;
  int semilength_ = 0;
};

/// Lexicographic order on step strings with U < D (shorter paths first).
struct CanonicalLess {
  bool operator()(const DyckPath& a, const DyckPath& b) const noexcept;
};

/// Appends runs of steps; `build` validates the Dyck invariants.
class PathBuilder {
 public:
  PathBuilder& up(int count = 1);
  PathBuilder& down(int count = 1);
  PathBuilder& append(const DyckPath& path);
  PathBuilder& append(std::string_view steps);
  int length() const noexcept { return length_; }
  DyckPath build() const;

 private:
  void push(bool up);
  StepWord bits_ = 0;
  int length_ = 0;
};

/// Ordinates after each step, starting with h0 = 0; 2n+1 entries.
class HeightProfile {
 public:
  explicit HeightProfile(const DyckPath& path);
  /// Validates h0 = h_last = 0, unit increments and non-negativity.
  static HeightProfile from_heights(std::vector<int> heights);

  const std::vector<int>& heights() const noexcept { return heights_; }
  int operator[](std::size_t i) const noexcept { return heights_[i]; }
  std::size_t size() const noexcept { return heights_.size(); }
  DyckPath to_path() const;

  friend bool operator==(const HeightProfile&, const HeightProfile&) = default;

 private:
  HeightProfile() = default;
  std::vector<int> heights_;
};

DyckPath parse_path(std::string_view text);

bool contains_duu(const DyckPath& path) noexcept;
/// Length of the longest run of consecutive D steps.
int longest_descent_run(const DyckPath& path) noexcept;
bool in_family(const DyckPath& path, FamilyParam p) noexcept;

/// |F_n^p|: generalized Fibonacci number, or 2^(n-1) for infinity.
std::uint64_t family_size(int n, FamilyParam p);

/// Largest family materialized by enumerate_family.
inline constexpr std::uint64_t kMaxFamilySize = std::uint64_t{1} << 23;

/// All of F_n^p in canonical order.
std::vector<DyckPath> enumerate_family(int n, FamilyParam p);

/// Number of trailing D steps.
int path_type(const DyckPath& path);

/// Number of leading U steps.
int first_ascent(const DyckPath& path) noexcept;

/// Length of the first maximal run of D steps.
int first_descent(const DyckPath& path) noexcept;

struct Decomposition {
  int type;
  DyckPath inner;
};

/// Unique (i, Q) with P = U^(i-1) Q U D^i.
Decomposition decompose(const DyckPath& path, FamilyParam p);
/// Inverse of decompose.
DyckPath reassemble(int type, const DyckPath& inner);

HeightProfile height_profile(const DyckPath& path);

/// Rank in the Stanley order: 0 at (UD)^n, +1 per DU -> UD exchange.
int area(const DyckPath& path) noexcept;

}  // namespace dycklat

template <>
struct std::hash<dycklat::DyckPath> {
  std::size_t operator()(const dycklat::DyckPath& p) const noexcept {
    const auto lo = static_cast<std::uint64_t>(p.bits());
    const auto hi = static_cast<std::uint64_t>(p.bits() >> 64);
    std::uint64_t h = lo * 0x9E3779B97F4A7C15ULL;
    h ^= hi + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
    h ^= static_cast<std::uint64_t>(p.semilength()) * 0xBF58476D1CE4E5B9ULL;
    return static_cast<std::size_t>(h);
  }
};
