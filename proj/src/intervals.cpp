#include "dycklat/intervals.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "dycklat/kernels.hpp"

namespace dycklat {

Interval::Interval(DyckPath lower, DyckPath upper, FamilyParam p)
    : lower_(std::move(lower)), upper_(std::move(upper)), p_(p) {
  if (lower_.semilength() != upper_.semilength()) {
    throw Error(ErrorKind::LengthMismatch, "interval endpoints have different semilengths");
  }
  if (!in_family(lower_, p_) || !in_family(upper_, p_)) {
    throw Error(ErrorKind::NotInFamily, "interval endpoint outside F^" + p_.to_string());
  }
  if (!leq(lower_, upper_)) {
    throw Error(ErrorKind::InvalidInterval, lower_.to_string() + " is not below " + upper_.to_string());
  }
}

int interval_height(const Interval& interval) { return area(interval.upper()) - area(interval.lower()); }

std::vector<DyckPath> interval_elements(const Interval& interval) {
  std::unordered_set<DyckPath> seen{interval.lower()};
  std::vector<DyckPath> frontier{interval.lower()};
  while (!frontier.empty()) {
    DyckPath cur = frontier.back();
    frontier.pop_back();
    for (DyckPath& c : upper_covers(cur, interval.family())) {
      if (!leq(c, interval.upper())) continue;
      if (seen.insert(c).second) {
        if (seen.size() > kMaxIntervalElements) throw Error(ErrorKind::SizeGuard, "interval has too many elements");
        frontier.push_back(std::move(c));
      }
    }
  }
  std::vector<DyckPath> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

bool is_boolean(const Interval& interval) {
  const DyckPath& lo = interval.lower();
  const DyckPath& hi = interval.upper();
  const int len = lo.length();
  int i = 0;
  while (i < len) {
    if (lo.is_up(i) == hi.is_up(i)) {
      ++i;
      continue;
    }
    if (i + 1 >= len) return false;
    const bool window = !lo.is_up(i) && lo.is_up(i + 1) && hi.is_up(i) && !hi.is_up(i + 1);
    if (!window) return false;
    if (!in_family(lo.with_swapped(i), interval.family())) return false;
    i += 2;
  }
  return true;
}

int mobius(const Interval& interval) {
  if (!is_boolean(interval)) return 0;
  return interval_height(interval) % 2 == 0 ? 1 : -1;
}

int mobius_bruteforce(const Interval& interval) {
  std::vector<DyckPath> elems = interval_elements(interval);
  std::stable_sort(elems.begin(), elems.end(),
                   [](const DyckPath& a, const DyckPath& b) { return area(a) < area(b); });
  std::vector<int> mu(elems.size(), 0);
  for (std::size_t k = 0; k < elems.size(); ++k) {
    if (elems[k] == interval.lower()) {
      mu[k] = 1;
      continue;
    }
    int sum = 0;
    for (std::size_t r = 0; r < k; ++r) {
      if (leq(elems[r], elems[k])) sum += mu[r];
    }
    mu[k] = -sum;
  }
  for (std::size_t k = 0; k < elems.size(); ++k) {
    if (elems[k] == interval.upper()) return mu[k];
  }
  return 0;
}

bool is_linear(const Interval& interval) {
  DyckPath cur = interval.lower();
  while (!(cur == interval.upper())) {
    int found = 0;
    DyckPath next;
    for (const DyckPath& c : upper_covers(cur, interval.family())) {
      if (leq(c, interval.upper())) {
        ++found;
        next = c;
      }
    }
    if (found != 1) return false;
    cur = next;
  }
  return true;
}

std::string_view to_string(LinearForm form) {
  switch (form) {
    case LinearForm::SameType: return "SAME_TYPE";
    case LinearForm::A2: return "A2";
    case LinearForm::B2: return "B2";
    case LinearForm::A3: return "A3";
    case LinearForm::B3: return "B3";
    case LinearForm::C3: return "C3";
    case LinearForm::NotLinear: return "NOT_LINEAR";
  }
  return "?";
}

namespace {

std::string ups(int k) { return std::string(static_cast<std::size_t>(std::max(k, 0)), 'U'); }
std::string downs(int k) { return std::string(static_cast<std::size_t>(std::max(k, 0)), 'D'); }
std::string repeat(std::string_view unit, int k) {
  std::string out;
  for (int i = 0; i < k; ++i) out += unit;
  return out;
}

int trailing_downs(const std::string& s) {
  int t = 0;
  for (auto it = s.rbegin(); it != s.rend() && *it == 'D'; ++it) ++t;
  return t;
}

bool is_dyck(const std::string& s) {
  int h = 0;
  for (char c : s) {
    h += c == 'U' ? 1 : -1;
    if (h < 0) return false;
  }
  return h == 0;
}

// R is empty, or a Dyck path whose last descent length is in [1, max_type].
bool admissible_filler(const std::string& r, int max_type) {
  if (r.empty()) return true;
  if (!is_dyck(r)) return false;
  const int t = trailing_downs(r);
  return t >= 1 && t <= max_type;
}

bool starts_with_ups(const std::string& s, int k) {
  if (static_cast<int>(s.size()) < k) return false;
  for (int i = 0; i < k; ++i) {
    if (s[static_cast<std::size_t>(i)] != 'U') return false;
  }
  return true;
}

// bound: largest admissible descent run (p, or the top-level n for p = infinity).
LinearForm classify(const std::string& lo, const std::string& hi, int bound, bool p_is_two) {
  const int n = static_cast<int>(lo.size()) / 2;
  const int i = trailing_downs(lo);
  const int j = trailing_downs(hi);

  if (i == j) {
    const auto inner_len = static_cast<std::size_t>(2 * n - 2 * i);
    const std::string lo_in = lo.substr(static_cast<std::size_t>(i - 1), inner_len);
    const std::string hi_in = hi.substr(static_cast<std::size_t>(i - 1), inner_len);
    return classify(lo_in, hi_in, bound, p_is_two) == LinearForm::NotLinear ? LinearForm::NotLinear
                                                                            : LinearForm::SameType;
  }

  if (j - i >= 2) {
    if (n >= 3 && n <= bound && lo == ups(n - 3) + "UDUDUD" + downs(n - 3) && hi == ups(n) + downs(n)) {
      return LinearForm::A2;
    }
    if (starts_with_ups(hi, j - 1)) {
      const std::string r = hi.substr(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(2 * n - 2 * j));
      if (admissible_filler(r, bound - (j - i)) && hi == ups(j - 1) + r + "U" + downs(j) &&
          lo == ups(j - 1) + r + downs(j - i) + "U" + downs(i)) {
        return LinearForm::B2;
      }
    }
    return LinearForm::NotLinear;
  }

  // j == i + 1.
  for (int k = 1; 2 * n - 2 * k - i >= i; ++k) {
    const auto prefix_len = static_cast<std::size_t>(2 * n - 2 * k - i);
    if (lo.compare(0, prefix_len, hi, 0, prefix_len) != 0) continue;
    if (!starts_with_ups(lo, i)) break;
    const std::string r = lo.substr(static_cast<std::size_t>(i), prefix_len - static_cast<std::size_t>(i));
    if (!admissible_filler(r, bound - 1)) continue;
    if (lo == ups(i) + r + repeat("DU", k) + downs(i) && hi == ups(i) + r + repeat("UD", k) + downs(i)) {
      return LinearForm::A3;
    }
  }
  for (int k = 1; k * bound + i + 1 <= n; ++k) {
    const int lead = k * (bound - 1) + i;
    if (!starts_with_ups(lo, lead)) break;
    const std::string r =
        lo.substr(static_cast<std::size_t>(lead), static_cast<std::size_t>(2 * (n - k * bound - i - 1)));
    if (!admissible_filler(r, bound - 1)) continue;
    const std::string block = repeat("U" + downs(bound), k);
    if (lo == ups(lead) + r + "D" + block + "U" + downs(i) && hi == ups(lead) + r + block + "U" + downs(i + 1)) {
      return LinearForm::B3;
    }
  }
  if (p_is_two && hi == "UUUDDUDD" && (lo == "UUDDUDUD" || lo == "UDUDUDUD")) return LinearForm::C3;
  return LinearForm::NotLinear;
}

}  // namespace

LinearForm classify_linear(const Interval& interval) {
  if (interval.lower() == interval.upper()) {
    throw Error(ErrorKind::InvalidInterval, "classify_linear needs a non-degenerate interval");
  }
  const FamilyParam p = interval.family();
  const bool p_is_two = !p.is_infinite() && p.value() == 2;
  return classify(interval.lower().to_string(), interval.upper().to_string(), p.bound_for(interval.semilength()),
                  p_is_two);
}

std::string_view to_string(IntervalKind kind) {
  switch (kind) {
    case IntervalKind::All: return "intervals";
    case IntervalKind::Boolean: return "boolean";
    case IntervalKind::Linear: return "linear";
  }
  return "?";
}

std::string_view to_string(IntervalStatistic stat) {
  return stat == IntervalStatistic::Height ? "height" : "ascent-difference";
}

std::uint64_t IntervalHistogram::total() const {
  std::uint64_t t = 0;
  for (const auto& [k, c] : counts) t += c;
  return t;
}

IntervalHistogram count_intervals(const Lattice& lattice, IntervalKind kind) {
  switch (kind) {
    case IntervalKind::All: return kernels::count_all_intervals(lattice);
    case IntervalKind::Boolean: return kernels::count_boolean_intervals(lattice);
    case IntervalKind::Linear: return kernels::count_linear_intervals(lattice);
  }
  return {};
}

IntervalHistogram count_intervals(int n, FamilyParam p, IntervalKind kind) {
  return count_intervals(Lattice(n, p), kind);
}

}  // namespace dycklat
