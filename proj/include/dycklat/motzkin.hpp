#pragma once

// Bicolored Motzkin words in the quarter plane and the peak-insertion
// bijection with intervals of F_n^p.

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "dycklat/intervals.hpp"

namespace dycklat {

/// Text letters: U, D, F (first flat colour), G (second flat colour).
/// Each letter records where a peak went into the two first ascents: U puts
/// it below the top in the lower path and on top in the upper one, D the
/// reverse, F on top in both, G below the top in both.
enum class MotzkinStep : char { Up = 'U', Down = 'D', Flat1 = 'F', Flat2 = 'G' };

class BicoloredMotzkinPath {
 public:
  BicoloredMotzkinPath() = default;
  /// Throws QuarterPlaneViolation if some prefix has more D than U.
  explicit BicoloredMotzkinPath(std::vector<MotzkinStep> steps);
  /// Throws InvalidWord on letters outside UDFG, then checks the quarter plane.
  static BicoloredMotzkinPath parse(std::string_view text);

  const std::vector<MotzkinStep>& steps() const noexcept { return steps_; }
  std::size_t size() const noexcept { return steps_.size(); }
  int final_height() const noexcept;
  std::string to_string() const;

  friend bool operator==(const BicoloredMotzkinPath&, const BicoloredMotzkinPath&) = default;

 private:
  std::vector<MotzkinStep> steps_;
};

/// Forbidden factors, as words over UDFG.
class PatternSet {
 public:
  PatternSet() = default;
  /// Throws InvalidWord on empty words or foreign letters.
  explicit PatternSet(std::set<std::string> words);

  const std::set<std::string>& words() const noexcept { return words_; }
  std::size_t size() const noexcept { return words_.size(); }
  bool empty() const noexcept { return words_.empty(); }
  std::size_t max_length() const noexcept { return max_length_; }

  /// True if some pattern is a suffix of `text`.
  bool matches_suffix(std::string_view text) const;
  /// True if no pattern occurs as a factor of `text`.
  bool avoided_by(std::string_view text) const;

 private:
  std::set<std::string> words_;
  std::size_t max_length_ = 0;
};

/// Empty for infinity; otherwise {F,U}^p together with {F,D}^p: p insertions
/// in a row on top of the same first ascent would create D^(p+1).
PatternSet forbidden_patterns(FamilyParam p);

/// Longest word length accepted by count_avoiding (counts stay below 2^64).
inline constexpr int kMaxMotzkinLength = 31;

/// Quarter-plane words of the given length avoiding forbidden_patterns(p).
/// Throws SizeGuard past kMaxMotzkinLength.
std::uint64_t count_avoiding(int length, FamilyParam p);
/// Same count split by final height.
std::map<int, std::uint64_t> count_avoiding_by_height(int length, FamilyParam p);

/// All such words, sorted by text. Throws SizeGuard past 2^22 words.
std::vector<BicoloredMotzkinPath> enumerate_avoiding(int length, FamilyParam p);

/// Peels the first peak off both endpoints until [UD, UD] remains; the
/// word lists the reinsertions from the root outward. Throws EmptyInterval
/// for n = 0.
BicoloredMotzkinPath interval_to_motzkin(const Interval& interval);

/// Replays the word from [UD, UD]. Throws PatternViolation,
/// QuarterPlaneViolation or IllegalInsertion.
Interval motzkin_to_interval(const BicoloredMotzkinPath& word, FamilyParam p);

}  // namespace dycklat
