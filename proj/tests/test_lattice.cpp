#include <doctest.h>

#include <algorithm>
#include <set>

#include "dycklat/lattice.hpp"
#include "oracles.hpp"

using namespace dycklat;

namespace {

FamilyParam fam(int p) { return p == oracle::kInf ? FamilyParam::infinity() : FamilyParam::finite(p); }

std::set<std::string> texts(const std::vector<DyckPath>& paths) {
  std::set<std::string> out;
  for (const DyckPath& e : paths) out.insert(e.to_string());
  return out;
}

}  // namespace

TEST_CASE("leq, meet and join examples") {
  const DyckPath a = parse_path("UUDDUD");
  const DyckPath b = parse_path("UDUUDD");
  CHECK(leq(parse_path("UDUDUD"), parse_path("UUDUDD")));
  CHECK(leq(a, a));
  CHECK_FALSE(leq(a, b));
  CHECK_FALSE(leq(b, a));
  CHECK(join(a, b).to_string() == "UUDUDD");
  CHECK(meet(a, b).to_string() == "UDUDUD");
  CHECK(meet(a, a) == a);
  CHECK_THROWS_AS(leq(a, parse_path("UD")), Error);
  CHECK_THROWS_AS(meet(a, parse_path("UD")), Error);
}

TEST_CASE("leq matches pointwise heights") {
  const std::vector<std::string> all = oracle::all_dyck(5);
  for (const std::string& x : all) {
    for (const std::string& y : all) CHECK(leq(parse_path(x), parse_path(y)) == oracle::below(x, y));
  }
}

TEST_CASE("lattice axioms and distributivity") {
  for (int p : {2, 3, oracle::kInf}) {
    for (int n = 1; n <= 6; ++n) {
      const std::vector<DyckPath> f = enumerate_family(n, fam(p));
      for (const DyckPath& x : f) {
        for (const DyckPath& y : f) {
          const DyckPath m = meet(x, y);
          const DyckPath j = join(x, y);
          CHECK(in_family(m, fam(p)));
          CHECK(in_family(j, fam(p)));
          CHECK(m == meet(y, x));
          CHECK(j == join(y, x));
          CHECK(meet(x, join(x, y)) == x);
          CHECK(join(x, meet(x, y)) == x);
          CHECK(leq(x, y) == (m == x));
          CHECK(leq(x, y) == (j == y));
          for (const DyckPath& z : f) {
            // greatest lower bound among family members
            if (leq(z, x) && leq(z, y)) CHECK(leq(z, m));
            if (leq(x, z) && leq(y, z)) CHECK(leq(j, z));
            CHECK(meet(x, join(y, z)) == join(meet(x, y), meet(x, z)));
            CHECK(meet(meet(x, y), z) == meet(x, meet(y, z)));
          }
        }
      }
    }
  }
}

TEST_CASE("cover examples") {
  const FamilyParam two = FamilyParam::finite(2);
  CHECK(upper_covers(parse_path("UDUDUDUDUD"), two).size() == 1);
  CHECK(upper_covers(parse_path("UUUUDDDD"), FamilyParam::infinity()).empty());
  std::size_t total = 0;
  for (const DyckPath& e : enumerate_family(4, two)) total += upper_covers(e, two).size();
  CHECK(total == 4);
  CHECK(lower_covers(parse_path("UDUDUD"), FamilyParam::infinity()).empty());
  const std::vector<DyckPath> lc = lower_covers(parse_path("UUDD"), two);
  REQUIRE(lc.size() == 1);
  CHECK(lc[0].to_string() == "UDUD");
  std::map<std::size_t, int> hist;
  for (const DyckPath& e : enumerate_family(6, two)) ++hist[lower_covers(e, two).size()];
  CHECK(hist == std::map<std::size_t, int>{{0, 1}, {1, 9}, {2, 3}});
  CHECK_THROWS_AS(upper_covers(parse_path("UUUDDD"), two), Error);
}

TEST_CASE("covers agree with transitive reduction and are graded") {
  for (int p : {2, 3, oracle::kInf}) {
    for (int n = 1; n <= 6; ++n) {
      CAPTURE(p);
      CAPTURE(n);
      std::set<std::pair<std::string, std::string>> expected;
      for (const auto& e : oracle::covers_by_search(n, p)) expected.insert(e);
      std::set<std::pair<std::string, std::string>> got;
      for (const auto& [lo, hi] : hasse_edges(n, fam(p))) {
        got.emplace(lo.to_string(), hi.to_string());
        CHECK(area(hi) == area(lo) + 1);
      }
      CHECK(got == expected);
      std::size_t up = 0;
      std::size_t down = 0;
      for (const DyckPath& e : enumerate_family(n, fam(p))) {
        for (const DyckPath& q : upper_covers(e, fam(p))) CHECK(expected.count({e.to_string(), q.to_string()}) == 1);
        up += upper_covers(e, fam(p)).size();
        down += lower_covers(e, fam(p)).size();
      }
      CHECK(up == expected.size());
      CHECK(down == expected.size());
    }
  }
}

TEST_CASE("hasse edges are sorted and sized") {
  CHECK(hasse_edges(5, FamilyParam::finite(2)).size() == 8);
  CHECK(hasse_edges(4, FamilyParam::infinity()).size() == 8);
  CHECK(hasse_edges(1, FamilyParam::finite(2)).empty());
  const auto edges = hasse_edges(6, FamilyParam::finite(3));
  // canonical order: lexicographic with U < D, lower endpoint first
  const auto key = [](const DyckPath& e) {
    std::string s = e.to_string();
    std::replace(s.begin(), s.end(), 'U', 'A');
    return s;
  };
  CHECK(std::is_sorted(edges.begin(), edges.end(), [&](const auto& a, const auto& b) {
    return std::pair(key(a.first), key(a.second)) < std::pair(key(b.first), key(b.second));
  }));
}

TEST_CASE("rank, top and maximal chains") {
  CHECK(lattice_rank(4, FamilyParam::infinity()) == 6);
  CHECK(lattice_rank(5, FamilyParam::finite(2)) == 6);
  CHECK(lattice_rank(1, FamilyParam::finite(3)) == 0);
  for (int p : {2, 3, 4, oracle::kInf}) {
    for (int n = 1; n <= 9; ++n) {
      const std::vector<DyckPath> f = enumerate_family(n, fam(p));
      int best = 0;
      for (const DyckPath& e : f) best = std::max(best, area(e));
      CHECK(lattice_rank(n, fam(p)) == best);
      CHECK(area(lattice_top(n, fam(p))) == best);
      CHECK(lattice_bottom(n).to_string() == oracle::family(n, p).back());
      for (const DyckPath& e : f) CHECK(leq(e, lattice_top(n, fam(p))));
      // every maximal chain has length = rank: walk greedily up from the bottom
      DyckPath cur = lattice_bottom(n);
      int steps = 0;
      while (true) {
        const std::vector<DyckPath> up = upper_covers(cur, fam(p));
        if (up.empty()) break;
        cur = up.back();
        ++steps;
      }
      CHECK(steps == best);
    }
  }
}

TEST_CASE("meet-irreducibles and Turan graphs") {
  CHECK(meet_irreducibles(5, FamilyParam::finite(2)).size() == 6);
  for (int n = 0; n <= 12; ++n) {
    CHECK(static_cast<int>(meet_irreducibles(n, FamilyParam::finite(2)).size()) == n * n / 4);
    CHECK(static_cast<int>(meet_irreducibles(n, FamilyParam::infinity()).size()) == n * (n - 1) / 2);
    if (n <= 8) {
      CHECK(static_cast<int>(join_irreducibles(n, FamilyParam::infinity()).size()) == n * (n - 1) / 2);
    }
  }
  CHECK(turan_edges(5, 2) == 6);
  CHECK(turan_edges(0, 4) == 0);
  CHECK(turan_edges(7, 3) == 16);
  for (int n = 0; n <= 20; ++n) {
    for (int p = 2; p <= 6; ++p) {
      CHECK(turan_edges_floor(n, p) == oracle::turan_by_pairs(n, p));
      CHECK(turan_edges_partition(n, p) == oracle::turan_by_pairs(n, p));
    }
  }
  for (int p : {2, 3, 4}) {
    for (int n = 1; n <= 10; ++n) {
      const std::set<std::string> irr = texts(meet_irreducibles(n, FamilyParam::finite(p)));
      std::set<std::string> expected;
      for (const DyckPath& e : enumerate_family(n, FamilyParam::finite(p))) {
        if (upper_covers(e, FamilyParam::finite(p)).size() == 1) expected.insert(e.to_string());
      }
      CHECK(irr == expected);
      CHECK(static_cast<std::int64_t>(irr.size()) == oracle::turan_by_pairs(n, p));
    }
  }
}

TEST_CASE("Lattice index matches the free functions") {
  for (int p : {2, oracle::kInf}) {
    const Lattice lat(7, fam(p));
    REQUIRE(lat.size() == family_size(7, fam(p)));
    for (std::size_t i = 0; i < lat.size(); ++i) {
      const DyckPath& e = lat.element(i);
      CHECK(lat.index_of(e) == i);
      CHECK(lat.area(i) == area(e));
      CHECK(lat.upper(i).size() == upper_covers(e, fam(p)).size());
      CHECK(lat.lower(i).size() == lower_covers(e, fam(p)).size());
      for (std::size_t j = 0; j < lat.size(); ++j) CHECK(lat.leq(i, j) == leq(e, lat.element(j)));
    }
    CHECK(lat.element(lat.bottom()) == lattice_bottom(7));
    CHECK(lat.element(lat.top()) == lattice_top(7, fam(p)));
  }
}
