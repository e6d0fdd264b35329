#pragma once

// F_n^p as non-decreasing Catalan words, compositions with bounded parts,
// and subsets of [1, n-1] without p consecutive members.

#include <vector>

#include "dycklat/dyck_path.hpp"

namespace dycklat {

/// w_i counts the U steps to the right of the i-th D, D's numbered right to left.
struct CatalanWord {
  std::vector<int> letters;
  friend bool operator==(const CatalanWord&, const CatalanWord&) = default;
};

/// Lengths of the descent runs, read right to left.
struct Composition {
  std::vector<int> parts;
  int total() const noexcept;
  friend bool operator==(const Composition&, const Composition&) = default;
};

/// Sorted members of [1, n-1].
struct SubsetRepr {
  std::vector<int> members;
  int n = 0;
  friend bool operator==(const SubsetRepr&, const SubsetRepr&) = default;
};

/// Throws NotInFamily unless the path lies in F^infinity.
CatalanWord to_catalan_word(const DyckPath& path);
/// Throws InvalidWord unless w starts at 0, never decreases, climbs by at most
/// one and (finite p) repeats no letter more than p times.
DyckPath from_catalan_word(const CatalanWord& word, FamilyParam p);

/// Throws NotInFamily unless the path lies in F^infinity.
Composition to_composition(const DyckPath& path);
/// Throws InvalidComposition for parts outside [1, p].
DyckPath from_composition(const Composition& composition, FamilyParam p);

/// Partial sums of a never exceed those of b; the shorter side is padded with
/// the common total. Throws TotalMismatch.
bool dominance_leq(const Composition& a, const Composition& b);

/// Throws NotInFamily unless the path lies in F^infinity.
SubsetRepr to_subset(const DyckPath& path);
/// Throws InvalidSubset for members outside [1, n-1], unsorted input, or p
/// consecutive members.
DyckPath from_subset(const SubsetRepr& subset, FamilyParam p);

/// Sum of the members; equals the area of the corresponding path.
int subset_rank(const SubsetRepr& subset);
/// [1, n-1] minus the members.
SubsetRepr complement_involution(const SubsetRepr& subset);

/// Comparison criterion on subsets: A = B, or rank(A) < rank(B), |A| <= |B|,
/// |A - {1}| <= |B - {1}| and A's members in decreasing order are
/// lexicographically at most the first |A| members of B in decreasing order.
/// Throws AmbientMismatch, or InvalidSubset when either side is not valid for p.
bool subset_interval_check(const SubsetRepr& a, const SubsetRepr& b, FamilyParam p);

/// v (lower) and w (upper) bound an interval iff w_i <= v_i everywhere: lower
/// elements carry the larger letters. Throws LengthMismatch.
bool catalan_interval_check(const CatalanWord& v, const CatalanWord& w);

}  // namespace dycklat
