#include "dycklat/motzkin.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace dycklat {
namespace {

bool is_motzkin_letter(char c) { return c == 'U' || c == 'D' || c == 'F' || c == 'G'; }

int first_run(const std::string& s, char c, std::size_t from) {
  int k = 0;
  while (from + static_cast<std::size_t>(k) < s.size() && s[from + static_cast<std::size_t>(k)] == c) ++k;
  return k;
}

int leading_ups(const std::string& s) { return first_run(s, 'U', 0); }

// Length of the first descent run; the path starts with its first ascent.
int first_descent_run(const std::string& s) { return first_run(s, 'D', static_cast<std::size_t>(leading_ups(s))); }

// Inserts a peak into the first ascent, either one level below its top or at the top.
bool insert_peak(std::string& s, bool at_top, FamilyParam p) {
  const int a = leading_ups(s);
  if (at_top && !p.is_infinite() && first_descent_run(s) >= p.value()) return false;
  s.insert(static_cast<std::size_t>(at_top ? a : a - 1), "UD");
  return true;
}

}  // namespace

BicoloredMotzkinPath::BicoloredMotzkinPath(std::vector<MotzkinStep> steps) : steps_(std::move(steps)) {
  int h = 0;
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    if (steps_[i] == MotzkinStep::Up) ++h;
    if (steps_[i] == MotzkinStep::Down) --h;
    if (h < 0) {
      throw Error(ErrorKind::QuarterPlaneViolation, "word drops below zero at letter " + std::to_string(i + 1));
    }
  }
}

BicoloredMotzkinPath BicoloredMotzkinPath::parse(std::string_view text) {
  std::vector<MotzkinStep> steps;
  steps.reserve(text.size());
  for (char c : text) {
    if (!is_motzkin_letter(c)) throw Error(ErrorKind::InvalidWord, std::string("unexpected letter '") + c + "'");
    steps.push_back(static_cast<MotzkinStep>(c));
  }
  return BicoloredMotzkinPath(std::move(steps));
}

int BicoloredMotzkinPath::final_height() const noexcept {
  int h = 0;
  for (MotzkinStep s : steps_) {
    if (s == MotzkinStep::Up) ++h;
    if (s == MotzkinStep::Down) --h;
  }
  return h;
}

std::string BicoloredMotzkinPath::to_string() const {
  std::string out;
  out.reserve(steps_.size());
  for (MotzkinStep s : steps_) out += static_cast<char>(s);
  return out;
}

PatternSet::PatternSet(std::set<std::string> words) : words_(std::move(words)) {
  for (const std::string& w : words_) {
    if (w.empty()) throw Error(ErrorKind::InvalidWord, "empty pattern");
    if (!std::all_of(w.begin(), w.end(), is_motzkin_letter)) throw Error(ErrorKind::InvalidWord, "pattern " + w);
    max_length_ = std::max(max_length_, w.size());
  }
}

bool PatternSet::matches_suffix(std::string_view text) const {
  for (const std::string& w : words_) {
    if (text.size() >= w.size() && text.substr(text.size() - w.size()) == w) return true;
  }
  return false;
}

bool PatternSet::avoided_by(std::string_view text) const {
  for (std::size_t end = 1; end <= text.size(); ++end) {
    if (matches_suffix(text.substr(0, end))) return false;
  }
  return true;
}

PatternSet forbidden_patterns(FamilyParam p) {
  if (p.is_infinite()) return PatternSet{};
  const int len = p.value();
  std::set<std::string> words;
  for (const char other : {'U', 'D'}) {
    for (unsigned mask = 0; mask < (1u << len); ++mask) {
      std::string w;
      for (int k = 0; k < len; ++k) w += ((mask >> k) & 1u) ? other : 'F';
      words.insert(std::move(w));
    }
  }
  return PatternSet(std::move(words));
}

namespace {

// Frontier of the counting DP: (height, last few letters) -> number of words.
using DpState = std::map<std::pair<int, std::string>, std::uint64_t>;

DpState run_dp(int length, FamilyParam p) {
  if (length < 0) throw Error(ErrorKind::InvalidWord, "negative length");
  if (length > kMaxMotzkinLength) throw Error(ErrorKind::SizeGuard, "Motzkin length above " + std::to_string(kMaxMotzkinLength));
  const PatternSet patterns = forbidden_patterns(p);
  const std::size_t keep = patterns.empty() ? 0 : patterns.max_length() - 1;
  DpState cur{{{0, std::string{}}, 1}};
  for (int step = 0; step < length; ++step) {
    DpState next;
    for (const auto& [key, count] : cur) {
      const auto& [height, tail] = key;
      for (const char c : {'U', 'D', 'F', 'G'}) {
        const int h = height + (c == 'U' ? 1 : c == 'D' ? -1 : 0);
        if (h < 0) continue;
        std::string word = tail + c;
        if (patterns.matches_suffix(word)) continue;
        if (word.size() > keep) word.erase(0, word.size() - keep);
        next[{h, std::move(word)}] += count;
      }
    }
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

std::uint64_t count_avoiding(int length, FamilyParam p) {
  std::uint64_t total = 0;
  for (const auto& [key, count] : run_dp(length, p)) total += count;
  return total;
}

std::map<int, std::uint64_t> count_avoiding_by_height(int length, FamilyParam p) {
  std::map<int, std::uint64_t> out;
  for (const auto& [key, count] : run_dp(length, p)) out[key.first] += count;
  return out;
}

std::vector<BicoloredMotzkinPath> enumerate_avoiding(int length, FamilyParam p) {
  constexpr std::uint64_t kMaxWords = std::uint64_t{1} << 22;
  if (count_avoiding(length, p) > kMaxWords) throw Error(ErrorKind::SizeGuard, "too many Motzkin words to list");
  const PatternSet patterns = forbidden_patterns(p);
  std::vector<BicoloredMotzkinPath> out;
  std::string word;
  const std::function<void(int)> grow = [&](int height) {
    if (static_cast<int>(word.size()) == length) {
      out.push_back(BicoloredMotzkinPath::parse(word));
      return;
    }
    for (const char c : {'D', 'F', 'G', 'U'}) {
      const int h = height + (c == 'U' ? 1 : c == 'D' ? -1 : 0);
      if (h < 0) continue;
      word.push_back(c);
      if (!patterns.matches_suffix(word)) grow(h);
      word.pop_back();
    }
  };
  grow(0);
  return out;
}

BicoloredMotzkinPath interval_to_motzkin(const Interval& interval) {
  if (interval.semilength() == 0) throw Error(ErrorKind::EmptyInterval, "no Motzkin word for the empty interval");
  std::string lo = interval.lower().to_string();
  std::string hi = interval.upper().to_string();
  std::vector<MotzkinStep> peeled;
  while (lo.size() > 2) {
    // A first descent of length 1 means the peak sat just below the top of the
    // first ascent; anything longer means it sat on top.
    const bool lo_top = first_descent_run(lo) >= 2;
    const bool hi_top = first_descent_run(hi) >= 2;
    peeled.push_back(lo_top ? (hi_top ? MotzkinStep::Flat1 : MotzkinStep::Down)
                            : (hi_top ? MotzkinStep::Up : MotzkinStep::Flat2));
    lo.erase(static_cast<std::size_t>(leading_ups(lo) - 1), 2);
    hi.erase(static_cast<std::size_t>(leading_ups(hi) - 1), 2);
  }
  std::reverse(peeled.begin(), peeled.end());
  return BicoloredMotzkinPath(std::move(peeled));
}

Interval motzkin_to_interval(const BicoloredMotzkinPath& word, FamilyParam p) {
  const std::string text = word.to_string();
  if (!forbidden_patterns(p).avoided_by(text)) {
    throw Error(ErrorKind::PatternViolation, text + " contains a pattern forbidden for p = " + p.to_string());
  }
  if (static_cast<int>(text.size()) + 1 > DyckPath::kMaxSemilength) {
    throw Error(ErrorKind::SizeGuard, "Motzkin word too long");
  }
  std::string lo = "UD";
  std::string hi = "UD";
  for (std::size_t t = 0; t < text.size(); ++t) {
    const char c = text[t];
    const bool lo_top = c == 'D' || c == 'F';
    const bool hi_top = c == 'U' || c == 'F';
    if (!insert_peak(lo, lo_top, p) || !insert_peak(hi, hi_top, p)) {
      throw Error(ErrorKind::IllegalInsertion, "letter " + std::to_string(t + 1) + " of " + text);
    }
  }
  return Interval(parse_path(lo), parse_path(hi), p);
}

}  // namespace dycklat
