#include <doctest.h>

#include "dycklat/intervals.hpp"
#include "dycklat/reference.hpp"
#include "oracles.hpp"

using namespace dycklat;

namespace {

FamilyParam fam(int p) { return p == oracle::kInf ? FamilyParam::infinity() : FamilyParam::finite(p); }

Interval iv(const char* lo, const char* hi, FamilyParam p) { return Interval(parse_path(lo), parse_path(hi), p); }

}  // namespace

TEST_CASE("Interval construction validates its endpoints") {
  const FamilyParam inf = FamilyParam::infinity();
  CHECK_THROWS_AS(iv("UUDUDD", "UDUDUD", inf), Error);
  CHECK_THROWS_AS(iv("UDUUDD", "UUUDDD", inf), Error);
  CHECK_THROWS_AS(iv("UD", "UUDD", inf), Error);
  CHECK_NOTHROW(iv("UDUDUD", "UUDUDD", inf));
}

TEST_CASE("height and elements examples") {
  const FamilyParam inf = FamilyParam::infinity();
  const Interval chain = iv("UDUDUD", "UUDUDD", inf);
  CHECK(interval_height(chain) == 2);
  CHECK(interval_height(Interval(lattice_bottom(5), lattice_top(5, FamilyParam::finite(2)), FamilyParam::finite(2))) == 6);
  CHECK(interval_height(iv("UUDD", "UUDD", inf)) == 0);
  std::vector<std::string> elems;
  for (const DyckPath& e : interval_elements(chain)) elems.push_back(e.to_string());
  std::sort(elems.begin(), elems.end());
  CHECK(elems == std::vector<std::string>{"UDUDUD", "UUDDUD", "UUDUDD"});
  CHECK(interval_elements(Interval(lattice_bottom(4), lattice_top(4, inf), inf)).size() == 8);
  CHECK(interval_elements(iv("UUDD", "UUDD", inf)).size() == 1);
}

TEST_CASE("boolean, linear and Moebius examples") {
  const FamilyParam inf = FamilyParam::infinity();
  const Interval point = iv("UUDDUD", "UUDDUD", inf);
  const Interval cover = iv("UDUDUD", "UUDDUD", inf);
  const Interval chain = iv("UDUDUD", "UUDUDD", inf);
  CHECK(is_boolean(point));
  CHECK(is_boolean(cover));
  CHECK_FALSE(is_boolean(chain));
  CHECK(mobius(point) == 1);
  CHECK(mobius(cover) == -1);
  CHECK(mobius(chain) == 0);
  CHECK(mobius_bruteforce(point) == 1);
  CHECK(mobius_bruteforce(chain) == 0);
  const Interval diamond = iv("UUDUDDUD", "UUUDDUDD", inf);
  CHECK(is_boolean(diamond));
  CHECK(mobius_bruteforce(diamond) == 1);

  CHECK(is_linear(point));
  CHECK(is_linear(iv("UDUDUDUD", "UUUDDUDD", FamilyParam::finite(2))));
  CHECK_FALSE(is_linear(Interval(lattice_bottom(4), lattice_top(4, inf), inf)));
}

TEST_CASE("classify_linear examples") {
  CHECK(classify_linear(iv("UDUDUD", "UUUDDD", FamilyParam::finite(3))) == LinearForm::A2);
  CHECK(classify_linear(iv("UDUDUDUD", "UUUDDUDD", FamilyParam::finite(2))) == LinearForm::C3);
  CHECK(classify_linear(iv("UDUDUD", "UUDUDD", FamilyParam::infinity())) == LinearForm::A3);
  CHECK(classify_linear(iv("UUDUDDUD", "UUUDDUDD", FamilyParam::infinity())) == LinearForm::NotLinear);
  CHECK_THROWS_AS(classify_linear(iv("UD", "UD", FamilyParam::finite(2))), Error);
}

TEST_CASE("interval predicates agree with poset oracles") {
  for (int p : {2, 3, oracle::kInf}) {
    for (int n = 1; n <= 6; ++n) {
      CAPTURE(p);
      CAPTURE(n);
      const std::vector<std::string> f = oracle::family(n, p);
      for (const std::string& lo : f) {
        for (const std::string& hi : f) {
          if (!oracle::below(lo, hi)) continue;
          const std::vector<std::string> elems = oracle::between(f, lo, hi);
          const Interval I(parse_path(lo), parse_path(hi), fam(p));
          CAPTURE(lo);
          CAPTURE(hi);
          CHECK(interval_elements(I).size() == elems.size());
          CHECK(interval_height(I) == oracle::diamonds(hi) - oracle::diamonds(lo));
          const bool boolean = oracle::boolean_by_atoms(elems, lo);
          CHECK(is_boolean(I) == boolean);
          if (boolean) CHECK(elems.size() == (std::size_t{1} << interval_height(I)));
          const bool linear = oracle::pairwise_comparable(elems);
          CHECK(is_linear(I) == linear);
          if (linear) CHECK(static_cast<int>(elems.size()) == interval_height(I) + 1);
          if (lo != hi) CHECK((classify_linear(I) != LinearForm::NotLinear) == linear);
          const int mu = oracle::mobius(elems, lo, hi);
          CHECK(mobius(I) == mu);
          CHECK(mobius_bruteforce(I) == mu);
        }
      }
    }
  }
}

TEST_CASE("count_intervals examples") {
  CHECK(count_intervals(4, FamilyParam::infinity(), IntervalKind::All).total() == 35);
  CHECK(count_intervals(3, FamilyParam::finite(2), IntervalKind::All).total() == 6);
  CHECK(count_intervals(4, FamilyParam::infinity(), IntervalKind::Linear).total() == 26);
  const IntervalHistogram l = count_intervals(4, FamilyParam::finite(2), IntervalKind::Linear);
  CHECK(l.statistic == IntervalStatistic::Height);
  CHECK(l.counts == std::map<int, std::uint64_t>{{0, 5}, {1, 4}, {2, 3}, {3, 2}, {4, 1}});
  CHECK(count_intervals(4, FamilyParam::finite(2), IntervalKind::All).statistic == IntervalStatistic::AscentDifference);
  const std::uint64_t tribonacci[] = {1, 1, 3, 5, 9, 17, 31};
  for (int n = 0; n <= 6; ++n) CHECK(count_intervals(n, FamilyParam::finite(2), IntervalKind::Boolean).total() == tribonacci[n]);
  CHECK_THROWS_AS(count_intervals(40, FamilyParam::infinity(), IntervalKind::All), Error);
}

TEST_CASE("interval counts by statistic match the string oracle") {
  for (int p : {2, 3, oracle::kInf}) {
    for (int n = 1; n <= 6; ++n) {
      const std::vector<std::string> f = oracle::family(n, p);
      std::map<int, std::uint64_t> all;
      std::map<int, std::uint64_t> boolean;
      std::map<int, std::uint64_t> linear;
      for (const std::string& lo : f) {
        for (const std::string& hi : f) {
          if (!oracle::below(lo, hi)) continue;
          const std::vector<std::string> elems = oracle::between(f, lo, hi);
          const int h = oracle::diamonds(hi) - oracle::diamonds(lo);
          ++all[oracle::first_ascent(hi) - oracle::first_ascent(lo)];
          if (oracle::boolean_by_atoms(elems, lo)) ++boolean[h];
          if (oracle::pairwise_comparable(elems)) ++linear[h];
        }
      }
      CHECK(count_intervals(n, fam(p), IntervalKind::All).counts == all);
      CHECK(count_intervals(n, fam(p), IntervalKind::Boolean).counts == boolean);
      CHECK(count_intervals(n, fam(p), IntervalKind::Linear).counts == linear);
    }
  }
}
