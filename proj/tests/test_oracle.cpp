#include <doctest.h>

#include "potmono/oracle.hpp"
#include "potmono/reorder.hpp"

using namespace potmono;
using presentation::load;

namespace {

std::strong_ordering three_way(const Integer& a, const Integer& b) {
  return a < b ? std::strong_ordering::less : (b < a ? std::strong_ordering::greater : std::strong_ordering::equal);
}

}  // namespace

TEST_CASE("natural order passes the total-order checks") {
  oracle::Comparator natural = [](const Integer& a, const Integer& b) { return three_way(a, b); };
  auto report = oracle::brute_check_total_order(natural, Window{-50, 50}, 10000);
  CHECK(report.passed());
  CHECK(report.tally("transitivity").performed >= 10000);
}

TEST_CASE("constructed order for translation by 2 passes on [-50, 50]") {
  auto order = reorder::build_order(load("map{tail+=2;tail-=2;patch{}}"));
  oracle::Comparator cmp = [&](const Integer& a, const Integer& b) { return order.compare(a, b); };
  CHECK(oracle::brute_check_total_order(cmp, Window{-50, 50}, 10000).passed());
}

TEST_CASE("fault injection: a cyclic comparator is caught with a 3-cycle") {
  // rock-paper-scissors on residues mod 3, natural order within a residue
  oracle::Comparator cyclic = [](const Integer& a, const Integer& b) {
    Integer ra = floor_mod(a, 3);
    Integer rb = floor_mod(b, 3);
    if (ra == rb) return three_way(a, b);
    return floor_mod(rb - ra, 3) == 1 ? std::strong_ordering::less : std::strong_ordering::greater;
  };
  auto report = oracle::brute_check_total_order(cyclic, Window{-10, 10}, 1000);
  CHECK_FALSE(report.passed());
  CHECK(report.tally("transitivity").violations > 0);
  bool three_cycle = false;
  for (const auto& w : report.witnesses) three_cycle = three_cycle || (w.check == "transitivity" && w.points.size() == 3);
  CHECK(three_cycle);
  // larger windows use sampled triples and still find it
  CHECK_FALSE(oracle::brute_check_total_order(cyclic, Window{-100, 100}, 5000).passed());
}

TEST_CASE("non-antisymmetric comparator is caught") {
  oracle::Comparator by_abs = [](const Integer& a, const Integer& b) { return three_way(abs(a), abs(b)); };
  auto report = oracle::brute_check_total_order(by_abs, Window{-5, 5}, 100);
  CHECK_FALSE(report.passed());
}

TEST_CASE("brute_strongly_discrete examples") {
  auto t2 = load("map{tail+=2;tail-=2;patch{}}");
  CHECK(oracle::brute_strongly_discrete(t2, {0, 1}, 100));
  CHECK_FALSE(oracle::brute_strongly_discrete(t2, {0, 2}, 100));
  CHECK(oracle::brute_strongly_discrete(t2, {}, 100));
  CHECK_FALSE(oracle::brute_strongly_discrete(load("map{tail+=0;tail-=0;patch{}}"), {3}, 1));
}

TEST_CASE("brute_orbits works on evaluation-only presentations") {
  auto f = load("compose(paired_shift, map{tail+=0;tail-=0;patch{}})");
  auto p = oracle::brute_orbits(f, Window{-10, 10});
  std::size_t total = 0;
  for (const auto& c : p.classes) {
    total += c.points.size();
    CHECK(c.kind == WindowPartition::Kind::LineFragment);
  }
  CHECK(total == 21);
  CHECK(p.classes.size() > 3);
}

TEST_CASE("compare_partitions reports a mismatch") {
  WindowPartition a{Window{0, 1}, {{WindowPartition::Kind::LineFragment, {0, 1}}}};
  WindowPartition b{Window{0, 1},
                    {{WindowPartition::Kind::LineFragment, {0}}, {WindowPartition::Kind::LineFragment, {1}}}};
  CHECK(oracle::compare_partitions(a, a).passed());
  CHECK_FALSE(oracle::compare_partitions(a, b).passed());
}
