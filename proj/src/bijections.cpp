#include "dycklat/bijections.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace dycklat {
namespace {

void require_unbounded_member(const DyckPath& path) {
  if (!in_family(path, FamilyParam::infinity())) {
    throw Error(ErrorKind::NotInFamily, path.to_string() + " contains DUU");
  }
}

void validate_subset(const SubsetRepr& s, FamilyParam p) {
  if (s.n < 1) throw Error(ErrorKind::InvalidSubset, "ambient semilength must be positive");
  int run = 0;
  for (std::size_t k = 0; k < s.members.size(); ++k) {
    const int x = s.members[k];
    if (x < 1 || x > s.n - 1) throw Error(ErrorKind::InvalidSubset, std::to_string(x) + " outside [1, n-1]");
    if (k > 0 && x <= s.members[k - 1]) throw Error(ErrorKind::InvalidSubset, "members must be strictly increasing");
    run = (k > 0 && x == s.members[k - 1] + 1) ? run + 1 : 1;
    if (!p.is_infinite() && run >= p.value()) {
      throw Error(ErrorKind::InvalidSubset, std::to_string(p.value()) + " consecutive members");
    }
  }
}

}  // namespace

int Composition::total() const noexcept { return std::accumulate(parts.begin(), parts.end(), 0); }

CatalanWord to_catalan_word(const DyckPath& path) {
  require_unbounded_member(path);
  CatalanWord out;
  int ups_right = 0;
  for (int i = path.length() - 1; i >= 0; --i) {
    if (path.is_up(i)) {
      ++ups_right;
    } else {
      out.letters.push_back(ups_right);
    }
  }
  return out;
}

DyckPath from_catalan_word(const CatalanWord& word, FamilyParam p) {
  const std::vector<int>& w = word.letters;
  if (w.empty()) return DyckPath{};
  if (w.front() != 0) throw Error(ErrorKind::InvalidWord, "Catalan word must start with 0");
  int run = 1;
  for (std::size_t k = 1; k < w.size(); ++k) {
    if (w[k] < w[k - 1] || w[k] > w[k - 1] + 1) {
      throw Error(ErrorKind::InvalidWord, "letters must stay equal or grow by one");
    }
    run = w[k] == w[k - 1] ? run + 1 : 1;
    if (!p.is_infinite() && run > p.value()) {
      throw Error(ErrorKind::InvalidWord, "letter repeated more than " + std::to_string(p.value()) + " times");
    }
  }
  const int n = static_cast<int>(w.size());
  const int k = w.back();
  std::vector<int> mult(static_cast<std::size_t>(k + 1), 0);
  for (int x : w) ++mult[static_cast<std::size_t>(x)];
  PathBuilder b;
  b.up(n - k).down(mult[static_cast<std::size_t>(k)]);
  for (int v = k - 1; v >= 0; --v) b.up().down(mult[static_cast<std::size_t>(v)]);
  return b.build();
}

Composition to_composition(const DyckPath& path) {
  require_unbounded_member(path);
  Composition out;
  int run = 0;
  for (int i = path.length() - 1; i >= 0; --i) {
    if (!path.is_up(i)) {
      ++run;
    } else if (run > 0) {
      out.parts.push_back(run);
      run = 0;
    }
  }
  return out;
}

DyckPath from_composition(const Composition& composition, FamilyParam p) {
  const std::vector<int>& parts = composition.parts;
  for (int part : parts) {
    if (part < 1 || (!p.is_infinite() && part > p.value())) {
      throw Error(ErrorKind::InvalidComposition, "part " + std::to_string(part) + " outside [1, " + p.to_string() + "]");
    }
  }
  if (parts.empty()) return DyckPath{};
  const int k = static_cast<int>(parts.size());
  PathBuilder b;
  b.up(composition.total() - k + 1).down(parts.back());
  for (int idx = k - 2; idx >= 0; --idx) b.up().down(parts[static_cast<std::size_t>(idx)]);
  return b.build();
}

bool dominance_leq(const Composition& a, const Composition& b) {
  const int total = a.total();
  if (total != b.total()) {
    throw Error(ErrorKind::TotalMismatch, std::to_string(total) + " vs " + std::to_string(b.total()));
  }
  int sa = 0;
  int sb = 0;
  for (std::size_t k = 0; k < std::max(a.parts.size(), b.parts.size()); ++k) {
    sa = k < a.parts.size() ? sa + a.parts[k] : total;
    sb = k < b.parts.size() ? sb + b.parts[k] : total;
    if (sa > sb) return false;
  }
  return true;
}

SubsetRepr to_subset(const DyckPath& path) {
  require_unbounded_member(path);
  SubsetRepr out;
  out.n = path.semilength();
  if (out.n == 0) return out;
  const int start = first_ascent(path) + 1;  // first step of the tail after U^i D
  int label = 0;
  for (int s = start; s < path.length(); ++s) {
    if (path.is_up(s)) continue;
    ++label;
    if (!path.is_up(s - 1)) out.members.push_back(label);
  }
  return out;
}

DyckPath from_subset(const SubsetRepr& subset, FamilyParam p) {
  validate_subset(subset, p);
  PathBuilder b;
  b.up(static_cast<int>(subset.members.size()) + 1).down();
  auto it = subset.members.begin();
  for (int x = 1; x < subset.n; ++x) {
    if (it != subset.members.end() && *it == x) {
      b.down();
      ++it;
    } else {
      b.up().down();
    }
  }
  return b.build();
}

int subset_rank(const SubsetRepr& subset) {
  return std::accumulate(subset.members.begin(), subset.members.end(), 0);
}

SubsetRepr complement_involution(const SubsetRepr& subset) {
  SubsetRepr out;
  out.n = subset.n;
  auto it = subset.members.begin();
  for (int x = 1; x < subset.n; ++x) {
    if (it != subset.members.end() && *it == x) {
      ++it;
    } else {
      out.members.push_back(x);
    }
  }
  return out;
}

bool subset_interval_check(const SubsetRepr& a, const SubsetRepr& b, FamilyParam p) {
  if (a.n != b.n) throw Error(ErrorKind::AmbientMismatch, std::to_string(a.n) + " vs " + std::to_string(b.n));
  validate_subset(a, p);
  validate_subset(b, p);
  if (a == b) return true;
  if (subset_rank(a) >= subset_rank(b)) return false;
  if (a.members.size() > b.members.size()) return false;
  const auto without_one = [](const SubsetRepr& s) {
    return s.members.size() - (!s.members.empty() && s.members.front() == 1 ? 1 : 0);
  };
  if (without_one(a) > without_one(b)) return false;
  std::vector<int> da(a.members.rbegin(), a.members.rend());
  std::vector<int> db(b.members.rbegin(), b.members.rend());
  db.resize(da.size());
  return !std::lexicographical_compare(db.begin(), db.end(), da.begin(), da.end());
}

bool catalan_interval_check(const CatalanWord& v, const CatalanWord& w) {
  if (v.letters.size() != w.letters.size()) {
    throw Error(ErrorKind::LengthMismatch, "Catalan words of different lengths");
  }
  for (std::size_t i = 0; i < v.letters.size(); ++i) {
    if (w.letters[i] > v.letters[i]) return false;
  }
  return true;
}

}  // namespace dycklat
