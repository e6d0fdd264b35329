#include "dycklat/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

namespace dycklat {
namespace {

void require_same_length(const DyckPath& a, const DyckPath& b) {
  if (a.semilength() != b.semilength()) {
    throw Error(ErrorKind::LengthMismatch,
                "semilengths " + std::to_string(a.semilength()) + " and " + std::to_string(b.semilength()));
  }
}

void require_member(const DyckPath& path, FamilyParam p) {
  if (!in_family(path, p)) throw Error(ErrorKind::NotInFamily, path.to_string() + " is not in F^" + p.to_string());
}

template <typename Pick>
DyckPath envelope(const DyckPath& a, const DyckPath& b, Pick pick) {
  require_same_length(a, b);
  const HeightProfile ha(a);
  const HeightProfile hb(b);
  std::vector<int> h(ha.size());
  for (std::size_t i = 0; i < h.size(); ++i) h[i] = pick(ha[i], hb[i]);
  return HeightProfile::from_heights(std::move(h)).to_path();
}

}  // namespace

bool leq(const DyckPath& lower, const DyckPath& upper) {
  require_same_length(lower, upper);
  int hl = 0;
  int hu = 0;
  for (int i = 0; i < lower.length(); ++i) {
    hl += lower.is_up(i) ? 1 : -1;
    hu += upper.is_up(i) ? 1 : -1;
    if (hl > hu) return false;
  }
  return true;
}

DyckPath meet(const DyckPath& a, const DyckPath& b) {
  return envelope(a, b, [](int x, int y) { return std::min(x, y); });
}

DyckPath join(const DyckPath& a, const DyckPath& b) {
  return envelope(a, b, [](int x, int y) { return std::max(x, y); });
}

std::vector<DyckPath> upper_covers(const DyckPath& path, FamilyParam p) {
  require_member(path, p);
  std::vector<DyckPath> out;
  for (int i = 0; i + 1 < path.length(); ++i) {
    if (!path.is_up(i) && path.is_up(i + 1)) {
      DyckPath q = path.with_swapped(i);
      if (in_family(q, p)) out.push_back(q);
    }
  }
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

std::vector<DyckPath> lower_covers(const DyckPath& path, FamilyParam p) {
  require_member(path, p);
  std::vector<DyckPath> out;
  int h = 0;
  for (int i = 0; i + 1 < path.length(); ++i) {
    // Before step i the ordinate is h; UD -> DU needs h >= 1.
    if (path.is_up(i) && !path.is_up(i + 1) && h >= 1) {
      DyckPath q = path.with_swapped(i);
      if (in_family(q, p)) out.push_back(q);
    }
    h += path.is_up(i) ? 1 : -1;
  }
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

std::vector<DyckPath> meet_irreducibles(int n, FamilyParam p) {
  std::vector<DyckPath> out;
  for (const DyckPath& e : enumerate_family(n, p)) {
    if (upper_covers(e, p).size() == 1) out.push_back(e);
  }
  return out;
}

std::vector<DyckPath> join_irreducibles(int n, FamilyParam p) {
  std::vector<DyckPath> out;
  for (const DyckPath& e : enumerate_family(n, p)) {
    if (lower_covers(e, p).size() == 1) out.push_back(e);
  }
  return out;
}

std::int64_t turan_edges_floor(int n, int p) {
  if (n < 0 || p < 2) throw Error(ErrorKind::InvalidFamily, "turan_edges needs n >= 0 and p >= 2");
  const std::int64_t nn = n;
  return nn * nn * (p - 1) / (2 * static_cast<std::int64_t>(p));
}

std::int64_t turan_edges_partition(int n, int p) {
  if (n < 0 || p < 2) throw Error(ErrorKind::InvalidFamily, "turan_edges needs n >= 0 and p >= 2");
  const std::int64_t base = n / p;
  const std::int64_t extra = n % p;
  std::int64_t squares = 0;
  for (std::int64_t part = 0; part < p; ++part) {
    const std::int64_t s = base + (part < extra ? 1 : 0);
    squares += s * s;
  }
  const std::int64_t nn = n;
  return (nn * nn - squares) / 2;
}

std::int64_t turan_edges(int n, int p) {
  const std::int64_t by_floor = turan_edges_floor(n, p);
  [[maybe_unused]] const std::int64_t by_partition = turan_edges_partition(n, p);
  assert(by_floor == by_partition);
  return by_floor;
}

std::int64_t lattice_rank(int n, FamilyParam p) {
  if (n < 1) throw Error(ErrorKind::MalformedPath, "lattice_rank needs n >= 1");
  const std::int64_t nn = n;
  const std::int64_t full = nn * (nn - 1) / 2;
  if (p.is_infinite()) return full;
  const std::int64_t q = p.value();
  const std::int64_t m = (nn - 1) / q;
  // m * (n - q(m+1)/2), kept integral by doubling.
  return full - m * (2 * nn - q * (m + 1)) / 2;
}

DyckPath lattice_top(int n, FamilyParam p) {
  if (n == 0) return DyckPath{};
  std::vector<bool> member(static_cast<std::size_t>(n), true);
  if (!p.is_infinite()) {
    const int q = p.value();
    for (int x = n - q; x >= 1; x -= q) member[static_cast<std::size_t>(x)] = false;
  }
  int size = 0;
  for (int x = 1; x < n; ++x) size += member[static_cast<std::size_t>(x)] ? 1 : 0;
  PathBuilder b;
  b.up(size + 1).down();
  for (int x = 1; x < n; ++x) {
    if (member[static_cast<std::size_t>(x)]) {
      b.down();
    } else {
      b.up().down();
    }
  }
  return b.build();
}

DyckPath lattice_bottom(int n) {
  PathBuilder b;
  for (int i = 0; i < n; ++i) b.up().down();
  return b.build();
}

std::vector<std::pair<DyckPath, DyckPath>> hasse_edges(int n, FamilyParam p) {
  std::vector<std::pair<DyckPath, DyckPath>> out;
  for (const DyckPath& e : enumerate_family(n, p)) {
    for (DyckPath& c : upper_covers(e, p)) out.emplace_back(e, std::move(c));
  }
  // enumerate_family and upper_covers are both canonical, so `out` is sorted.
  return out;
}

Lattice::Lattice(int n, FamilyParam p)
    : n_(n), p_(p), elements_(enumerate_family(n, p)), stride_(static_cast<std::size_t>(2 * n + 1)) {
  const std::size_t count = elements_.size();
  if (count > std::numeric_limits<std::uint32_t>::max()) throw Error(ErrorKind::SizeGuard, "lattice too large");
  profiles_.resize(count * stride_);
  areas_.resize(count);
  ascents_.resize(count);
  std::vector<std::vector<std::uint32_t>> ups(count);
  std::vector<std::vector<LowerCover>> downs(count);

  const auto find = [this](const DyckPath& q) -> std::int64_t {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), q, CanonicalLess{});
    if (it == elements_.end() || !(*it == q)) return -1;
    return it - elements_.begin();
  };

#pragma omp parallel for schedule(dynamic, 256)
  for (std::int64_t s = 0; s < static_cast<std::int64_t>(count); ++s) {
    const auto idx = static_cast<std::size_t>(s);
    const DyckPath& e = elements_[idx];
    std::int8_t* prof = profiles_.data() + idx * stride_;
    int h = 0;
    int sum = 0;
    prof[0] = 0;
    for (int i = 0; i < e.length(); ++i) {
      h += e.is_up(i) ? 1 : -1;
      prof[i + 1] = static_cast<std::int8_t>(h);
      sum += h;
    }
    areas_[idx] = (sum - n_) / 2;
    ascents_[idx] = dycklat::first_ascent(e);
    for (int i = 0; i + 1 < e.length(); ++i) {
      const bool u0 = e.is_up(i);
      const bool u1 = e.is_up(i + 1);
      if (!u0 && u1) {
        const std::int64_t t = find(e.with_swapped(i));
        if (t >= 0) ups[idx].push_back(static_cast<std::uint32_t>(t));
      } else if (u0 && !u1 && prof[i] >= 1) {
        const std::int64_t t = find(e.with_swapped(i));
        if (t >= 0) downs[idx].push_back({static_cast<std::uint32_t>(t), static_cast<std::uint16_t>(i + 1)});
      }
    }
  }

  upper_offsets_.assign(count + 1, 0);
  lower_offsets_.assign(count + 1, 0);
  for (std::size_t i = 0; i < count; ++i) {
    upper_offsets_[i + 1] = upper_offsets_[i] + ups[i].size();
    lower_offsets_[i + 1] = lower_offsets_[i] + downs[i].size();
  }
  upper_.reserve(upper_offsets_[count]);
  lower_.reserve(lower_offsets_[count]);
  for (std::size_t i = 0; i < count; ++i) {
    upper_.insert(upper_.end(), ups[i].begin(), ups[i].end());
    lower_.insert(lower_.end(), downs[i].begin(), downs[i].end());
  }
}

std::uint32_t Lattice::index_of(const DyckPath& path) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), path, CanonicalLess{});
  if (it == elements_.end() || !(*it == path)) {
    throw Error(ErrorKind::NotInFamily, path.to_string() + " is not in F_" + std::to_string(n_) + "^" + p_.to_string());
  }
  return static_cast<std::uint32_t>(it - elements_.begin());
}

std::uint32_t Lattice::bottom() const { return index_of(lattice_bottom(n_)); }

std::uint32_t Lattice::top() const { return index_of(lattice_top(n_, p_)); }

}  // namespace dycklat
