#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "bseq/recurrence.hpp"

using namespace bseq;

namespace {

// Independent reference: memoized top-down evaluation straight off the
// definition, no incremental state.  Throws on any out-of-range lookup.
struct NaiveOracle {
  std::vector<int> shifts;
  std::vector<std::int64_t> ics;
  bool bar;
  std::map<std::int64_t, BigInt> memo;

  BigInt get(std::int64_t n) {
    if (n <= 0) {
      if (bar) return 0;
      throw std::out_of_range("nonpositive");
    }
    if (n <= static_cast<std::int64_t>(ics.size())) return ics[n - 1];
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    BigInt sum = 0;
    for (int s : shifts) {
      BigInt back = get(n - s);
      BigInt arg = n - back;
      if (arg >= n) throw std::out_of_range("forward");
      if (arg <= 0 && !bar) throw std::out_of_range("nonpositive");
      sum += arg <= 0 ? BigInt(0) : get(static_cast<std::int64_t>(arg));
    }
    memo[n] = sum;
    return sum;
  }
};

std::vector<std::int64_t> iota_ics(std::int64_t n) {
  std::vector<std::int64_t> v;
  for (std::int64_t i = 1; i <= n; ++i) v.push_back(i);
  return v;
}

}  // namespace

TEST_CASE("runs agree with the naive oracle") {
  for (std::int64_t n : {3, 7, 10, 14, 40}) {
    for (bool bar : {false, true}) {
      NaiveOracle oracle{{1, 2, 3}, iota_ics(n), bar, {}};
      Run run(RecurrenceSpec::b(), InitialConditions::linear(n, bar));
      for (std::int64_t i = n + 1; i <= n + 300; ++i) {
        BigInt want;
        bool oracle_undefined = false;
        try {
          want = oracle.get(i);
        } catch (const std::out_of_range&) {
          oracle_undefined = true;
        }
        if (!run.alive()) {
          CHECK(oracle_undefined);
          break;
        }
        StepOutcome out = run.step();
        if (oracle_undefined) {
          CHECK(!out.is_term());
          break;
        }
        REQUIRE(out.is_term());
        CHECK(out.value == want);
      }
    }
  }
}

TEST_CASE("small-N deaths with exact last terms") {
  struct {
    std::int64_t n, len, last;
  } rows[] = {{3, 4, 6}, {4, 5, 6}, {10, 1015, 1036}, {11, 117, 120},
              {12, 45, 47}, {13, 73, 82}};
  for (auto [n, len, last] : rows) {
    Run run = generate(RecurrenceSpec::b(), InitialConditions::linear(n), 10'000);
    CHECK(run.liveness() == Liveness::dead);
    CHECK(run.length() == static_cast<std::uint64_t>(len));
    CHECK(run.undefined_index() == static_cast<std::uint64_t>(len + 1));
    CHECK(run.at(len) == last);
  }
}

TEST_CASE("B_5 and B_6 coincide beyond their initial conditions") {
  Run a = generate(RecurrenceSpec::b(), InitialConditions::linear(5), 20'000);
  Run b = generate(RecurrenceSpec::b(), InitialConditions::linear(6), 20'000);
  REQUIRE(a.alive());
  REQUIRE(b.alive());
  for (std::int64_t i = 7; i <= 20'000; ++i) CHECK(a.at(i) == b.at(i));
}

TEST_CASE("plain dies where bar merely reads a zero") {
  // <1,2,3,...>: identical prefixes until the first nonpositive argument
  Run plain = generate(RecurrenceSpec::b(), InitialConditions::linear(14), 100);
  Run bar = generate(RecurrenceSpec::b(), InitialConditions::linear(14, true), 100);
  CHECK(plain.liveness() == Liveness::dead);
  CHECK(plain.undefined_index() == 39);
  CHECK(plain.undefined_shift() == 1);
  CHECK(bar.length() == 100);  // survives the same step
  for (std::int64_t i = 1; i <= 38; ++i) CHECK(plain.at(i) == bar.at(i));
}

TEST_CASE("bar runs end on a forward reference") {
  Run run = generate(RecurrenceSpec::b(), InitialConditions::linear(118, true), 100'000);
  CHECK(run.liveness() == Liveness::ended);
  CHECK(run.length() == 245);
  CHECK(run.at(245) == 0);  // the zero forces index 246 to reference itself
}

TEST_CASE("values promote past int64 without losing exactness") {
  // doubling template: <0-bar; 2, M, 2> doubles M every other step
  InitialConditions ics;
  ics.zero_extended = true;
  ics.values = {2, 1'000'000'000, 2};
  Run run(RecurrenceSpec::b(), ics);
  while (run.alive() && run.length() < 300) run.step();
  REQUIRE(run.length() >= 300);
  CHECK(run.is_big(298));
  CHECK(run.at(298) == BigInt(1'000'000'000) << 148);  // K=1: B(1+2k) = M*2^(k-1)
  CHECK(run.at(299) == 2);
}

TEST_CASE("at() bounds checking") {
  Run run(RecurrenceSpec::b(), InitialConditions::linear(5));
  CHECK(run.at(1) == 1);
  CHECK(run.at(5) == 5);
  CHECK_THROWS_AS(run.at(0), LookupError);
  CHECK_THROWS_AS(run.at(6), LookupError);
  Run bar(RecurrenceSpec::b(), InitialConditions::linear(5, true));
  CHECK(bar.at(0) == 0);
  CHECK(bar.at(-7) == 0);
}

TEST_CASE("the two-shift Q spec reproduces Hofstadter's sequence") {
  InitialConditions ics;
  ics.values = {1, 1};
  Run run(RecurrenceSpec::q(), ics);
  while (run.alive() && run.length() < 17) run.step();
  const std::int64_t want[] = {1, 1, 2, 3, 3, 4, 5, 5, 6, 6, 6, 8, 8, 8, 10, 9, 10};
  for (std::int64_t i = 1; i <= 17; ++i) CHECK(run.at(i) == want[i - 1]);
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(RecurrenceSpec({}, "empty").validate(), std::invalid_argument);
  CHECK_THROWS_AS(RecurrenceSpec({0, 1}, "zero").validate(), std::invalid_argument);
  CHECK_THROWS_AS(generate(RecurrenceSpec::b(), InitialConditions::linear(2), 10),
                  std::invalid_argument);
}
