#include "dycklat/dyck_path.hpp"

#include <algorithm>
#include <bit>
#include <charconv>

namespace dycklat {
namespace {

StepWord low_mask(int len) noexcept {
  if (len >= 128) return ~StepWord{0};
  return (StepWord{1} << len) - 1;
}

StepWord shr(StepWord w, int k) noexcept { return k >= 128 ? StepWord{0} : (w >> k); }

int ctz128(StepWord w) noexcept {
  const auto lo = static_cast<std::uint64_t>(w);
  if (lo != 0) return std::countr_zero(lo);
  return 64 + std::countr_zero(static_cast<std::uint64_t>(w >> 64));
}

// Checks balance and non-negativity of the first `len` steps.
bool is_dyck_word(StepWord bits, int len) noexcept {
  int h = 0;
  for (int i = 0; i < len; ++i) {
    h += ((bits >> i) & 1) ? 1 : -1;
    if (h < 0) return false;
  }
  return h == 0;
}

}  // namespace

FamilyParam FamilyParam::finite(int p) {
  if (p < 2) throw Error(ErrorKind::InvalidFamily, "p must be >= 2, got " + std::to_string(p));
  return FamilyParam(p);
}

FamilyParam FamilyParam::parse(std::string_view text) {
  if (text == "inf" || text == "infinity" || text == "oo") return infinity();
  int p = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), p);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw Error(ErrorKind::InvalidFamily, "cannot parse family parameter '" + std::string(text) + "'");
  }
  return finite(p);
}

int FamilyParam::value() const {
  if (!p_) throw Error(ErrorKind::InvalidFamily, "p is infinite");
  return *p_;
}

std::string FamilyParam::to_string() const { return p_ ? std::to_string(*p_) : "inf"; }

DyckPath DyckPath::from_bits(StepWord bits, int semilength) {
  if (semilength < 0 || semilength > kMaxSemilength) {
    throw Error(ErrorKind::MalformedPath, "semilength out of range: " + std::to_string(semilength));
  }
  const int len = 2 * semilength;
  if ((bits & ~low_mask(len)) != 0 || !is_dyck_word(bits, len)) {
    throw Error(ErrorKind::MalformedPath, "word is not a Dyck path");
  }
  return DyckPath(bits, semilength);
}

std::string DyckPath::to_string() const {
  std::string out(static_cast<std::size_t>(length()), 'D');
  for (int i = 0; i < length(); ++i) {
    if (is_up(i)) out[static_cast<std::size_t>(i)] = 'U';
  }
  return out;
}

bool CanonicalLess::operator()(const DyckPath& a, const DyckPath& b) const noexcept {
  if (a.semilength() != b.semilength()) return a.semilength() < b.semilength();
  const StepWord diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  return a.is_up(ctz128(diff));
}

void PathBuilder::push(bool up) {
  if (length_ >= 2 * DyckPath::kMaxSemilength) {
    throw Error(ErrorKind::MalformedPath, "path longer than the supported maximum");
  }
  if (up) bits_ |= StepWord{1} << length_;
  ++length_;
}

PathBuilder& PathBuilder::up(int count) {
  for (int i = 0; i < count; ++i) push(true);
  return *this;
}

PathBuilder& PathBuilder::down(int count) {
  for (int i = 0; i < count; ++i) push(false);
  return *this;
}

PathBuilder& PathBuilder::append(const DyckPath& path) {
  for (int i = 0; i < path.length(); ++i) push(path.is_up(i));
  return *this;
}

PathBuilder& PathBuilder::append(std::string_view steps) {
  for (char c : steps) {
    if (c == 'U') {
      push(true);
    } else if (c == 'D') {
      push(false);
    } else {
      throw Error(ErrorKind::BadCharacter, std::string("unexpected step character '") + c + "'");
    }
  }
  return *this;
}

DyckPath PathBuilder::build() const {
  if (length_ % 2 != 0) throw Error(ErrorKind::MalformedPath, "odd number of steps");
  if (!is_dyck_word(bits_, length_)) throw Error(ErrorKind::MalformedPath, "unbalanced or dips below the axis");
  return DyckPath::from_bits(bits_, length_ / 2);
}

HeightProfile::HeightProfile(const DyckPath& path) {
  heights_.resize(static_cast<std::size_t>(path.length()) + 1);
  int h = 0;
  heights_[0] = 0;
  for (int i = 0; i < path.length(); ++i) {
    h += path.is_up(i) ? 1 : -1;
    heights_[static_cast<std::size_t>(i) + 1] = h;
  }
}

HeightProfile HeightProfile::from_heights(std::vector<int> heights) {
  if (heights.empty() || heights.front() != 0 || heights.back() != 0 || heights.size() % 2 == 0) {
    throw Error(ErrorKind::MalformedPath, "height profile must start and end at 0 with odd length");
  }
  for (std::size_t i = 1; i < heights.size(); ++i) {
    if (heights[i] < 0 || (heights[i] - heights[i - 1] != 1 && heights[i] - heights[i - 1] != -1)) {
      throw Error(ErrorKind::MalformedPath, "height profile violates unit steps or non-negativity");
    }
  }
  HeightProfile out;
  out.heights_ = std::move(heights);
  return out;
}

DyckPath HeightProfile::to_path() const {
  PathBuilder b;
  for (std::size_t i = 1; i < heights_.size(); ++i) {
    if (heights_[i] > heights_[i - 1]) {
      b.up();
    } else {
      b.down();
    }
  }
  return b.build();
}

DyckPath parse_path(std::string_view text) {
  PathBuilder b;
  b.append(text);
  return b.build();
}

bool contains_duu(const DyckPath& path) noexcept {
  const StepWord up = path.bits();
  const StepWord down = ~up & low_mask(path.length());
  return (down & shr(up, 1) & shr(up, 2)) != 0;
}

int longest_descent_run(const DyckPath& path) noexcept {
  StepWord run = ~path.bits() & low_mask(path.length());
  int longest = 0;
  while (run != 0) {
    ++longest;
    run &= shr(run, 1);
  }
  return longest;
}

bool in_family(const DyckPath& path, FamilyParam p) noexcept {
  if (contains_duu(path)) return false;
  if (p.is_infinite()) return true;
  const int bound = p.bound_for(path.semilength());
  if (bound >= path.semilength()) return true;
  // D^(p+1) present iff the AND of p+1 shifted copies of the D mask is nonzero.
  const StepWord down = ~path.bits() & low_mask(path.length());
  StepWord run = down;
  for (int k = 1; k <= bound && run != 0; ++k) run &= shr(down, k);
  return run == 0;
}

std::uint64_t family_size(int n, FamilyParam p) {
  if (n < 0) throw Error(ErrorKind::MalformedPath, "negative semilength");
  if (n == 0) return 1;
  if (p.is_infinite()) {
    if (n - 1 >= 64) throw Error(ErrorKind::SizeGuard, "family size overflows 64 bits");
    return std::uint64_t{1} << (n - 1);
  }
  const int q = p.value();
  std::vector<unsigned __int128> f(static_cast<std::size_t>(n) + 1, 0);
  f[0] = 1;
  for (int k = 1; k <= n; ++k) {
    for (int i = 1; i <= q && i <= k; ++i) f[static_cast<std::size_t>(k)] += f[static_cast<std::size_t>(k - i)];
  }
  const auto v = f[static_cast<std::size_t>(n)];
  if (v > static_cast<unsigned __int128>(UINT64_MAX)) throw Error(ErrorKind::SizeGuard, "family size overflows 64 bits");
  return static_cast<std::uint64_t>(v);
}

std::vector<DyckPath> enumerate_family(int n, FamilyParam p) {
  if (n < 0 || n > DyckPath::kMaxSemilength) {
    throw Error(ErrorKind::SizeGuard, "semilength out of range: " + std::to_string(n));
  }
  if (family_size(n, p) > kMaxFamilySize) {
    throw Error(ErrorKind::SizeGuard, "family F_" + std::to_string(n) + "^" + p.to_string() + " exceeds 2^23 elements");
  }
  std::vector<std::vector<DyckPath>> levels(static_cast<std::size_t>(n) + 1);
  levels[0].push_back(DyckPath{});
  for (int k = 1; k <= n; ++k) {
    auto& level = levels[static_cast<std::size_t>(k)];
    if (p.is_infinite()) {
      if (k == 1) {
        level.push_back(parse_path("UD"));
        continue;
      }
      // Either P = Q U D or P = U Q D.
      for (const DyckPath& q : levels[static_cast<std::size_t>(k - 1)]) {
        level.push_back(PathBuilder().append(q).up().down().build());
        level.push_back(PathBuilder().up().append(q).down().build());
      }
    } else {
      for (int i = 1; i <= p.value() && i <= k; ++i) {
        for (const DyckPath& q : levels[static_cast<std::size_t>(k - i)]) level.push_back(reassemble(i, q));
      }
    }
  }
  auto out = std::move(levels[static_cast<std::size_t>(n)]);
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

int path_type(const DyckPath& path) {
  if (path.empty()) throw Error(ErrorKind::EmptyPath, "type of the empty path is undefined");
  int t = 0;
  for (int i = path.length() - 1; i >= 0 && !path.is_up(i); --i) ++t;
  return t;
}

int first_ascent(const DyckPath& path) noexcept {
  int a = 0;
  while (a < path.length() && path.is_up(a)) ++a;
  return a;
}

int first_descent(const DyckPath& path) noexcept {
  int i = first_ascent(path);
  int d = 0;
  while (i < path.length() && !path.is_up(i)) {
    ++d;
    ++i;
  }
  return d;
}

Decomposition decompose(const DyckPath& path, FamilyParam p) {
  if (path.empty()) throw Error(ErrorKind::EmptyPath, "cannot decompose the empty path");
  if (!in_family(path, p)) throw Error(ErrorKind::NotInFamily, path.to_string() + " is not in F^" + p.to_string());
  const int i = path_type(path);
  const int len = path.length();
  // Prefix U^(i-1) and the U right before the final D^i.
  for (int k = 0; k < i - 1; ++k) {
    if (!path.is_up(k)) throw Error(ErrorKind::NotInFamily, "prefix is not U^(type-1)");
  }
  if (!path.is_up(len - i - 1)) throw Error(ErrorKind::NotInFamily, "missing U before the last descent");
  const int inner_len = len - (i - 1) - (i + 1);
  const StepWord inner_bits = (path.bits() >> (i - 1)) & low_mask(inner_len);
  return {i, DyckPath::from_bits(inner_bits, inner_len / 2)};
}

DyckPath reassemble(int type, const DyckPath& inner) {
  if (type < 1) throw Error(ErrorKind::MalformedPath, "type must be positive");
  return PathBuilder().up(type - 1).append(inner).up().down(type).build();
}

HeightProfile height_profile(const DyckPath& path) { return HeightProfile(path); }

int area(const DyckPath& path) noexcept {
  int h = 0;
  int sum = 0;
  for (int i = 0; i < path.length(); ++i) {
    h += path.is_up(i) ? 1 : -1;
    sum += h;
  }
  // Sum of ordinates is n at (UD)^n and grows by 2 per valley-to-peak exchange.
  return (sum - path.semilength()) / 2;
}

}  // namespace dycklat
