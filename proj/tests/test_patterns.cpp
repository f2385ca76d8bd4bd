#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bseq/analysis.hpp"
#include "bseq/patterns.hpp"

using namespace bseq;

namespace {

std::vector<std::int64_t> draw_fillers(const LemmaInstance& inst, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> d(1, 1000);
  std::vector<std::int64_t> f;
  for (std::int64_t i = 0; i < filler_count(inst); ++i) f.push_back(d(rng));
  return f;
}

Run realize(const LemmaInstance& inst, const std::vector<std::int64_t>& fillers,
            const BigInt& upto) {
  Run run(RecurrenceSpec::b(), build_initial_conditions(inst, fillers));
  while (run.alive() && BigInt(run.length()) < upto) run.step();
  return run;
}

}  // namespace

TEST_CASE("hypothesis checking") {
  CHECK(hypotheses_ok(LemmaId::two_cyc, {{"K", 1}, {"M", 6}}));
  CHECK_FALSE(hypotheses_ok(LemmaId::two_cyc, {{"K", 1}, {"M", 5}}));
  CHECK_THROWS_AS(hypotheses_violations(LemmaId::two_cyc, {{"K", 1}}),
                  std::invalid_argument);

  CHECK(hypotheses_ok(LemmaId::seven_cyc, {{"K", 72}, {"c", 1}, {"gamma", 0},
                                           {"lambda", 0}, {"mu", -1}}));
  auto v = hypotheses_violations(LemmaId::seven_cyc, {{"K", 6}, {"c", 1}, {"gamma", 0},
                                                      {"lambda", 5}, {"mu", 5}});
  CHECK(v.size() == 2);  // K < 7 and L = K-7c-gamma < 0

  CHECK(hypotheses_ok(LemmaId::five_cyc, {{"K", 3}, {"mu", 1}}));
  CHECK_FALSE(hypotheses_ok(LemmaId::five_cyc, {{"K", 2}, {"mu", 1}}));

  CHECK(hypotheses_ok(LemmaId::sixteen_cyc1, {{"K", 1}, {"lambda", 33}, {"mu1", 34},
                                              {"mu2", 34}, {"gamma", 34}}));
  CHECK_FALSE(hypotheses_ok(LemmaId::sixteen_cyc1, {{"K", 1}, {"lambda", 32}, {"mu1", 34},
                                                    {"mu2", 34}, {"gamma", 34}}));
}

TEST_CASE("lemma names round-trip") {
  for (LemmaId id : {LemmaId::seven_cyc, LemmaId::two_cyc, LemmaId::five_cyc,
                     LemmaId::sixteen_cyc1, LemmaId::sixteen_cyc2})
    CHECK(lemma_from_name(lemma_name(id)) == id);
  CHECK_FALSE(lemma_from_name("9cyc").has_value());
}

TEST_CASE("entry closed forms at large k stay exact") {
  LemmaInstance two = make_two_cyc(3, 10);
  // B(K+2k) = M * 2^(k-1)
  BigVal v = expected_term(two, BigInt(3) + 2 * 200);
  CHECK(v.exact() == BigInt(10) << 199);
  CHECK(expected_term(two, BigInt(3) + 2 * 200 + 1).exact() == 2);

  LemmaInstance five = make_five_cyc(10, 20);  // extent K + (5*20-15)/2 = 52
  // B(K+5k+3) = K+5k+3; B(K+5k+1) = K+3k+mu
  CHECK(expected_term(five, 10 + 5 * 4 + 3).exact() == 10 + 5 * 4 + 3);
  CHECK(expected_term(five, 10 + 5 * 4 + 1).exact() == 10 + 3 * 4 + 20);
}

TEST_CASE("seven_cyc nu matches the theorem's table") {
  // theorem residues are lemma residues shifted by 65
  for (int r = 0; r < 7; ++r)
    CHECK(theorem2_nu(r) == seven_cyc_nu(((r - 65) % 7 + 7) % 7));
}

TEST_CASE("randomized instances verify against the concrete engine") {
  std::mt19937_64 rng(2024);
  for (LemmaId id : {LemmaId::seven_cyc, LemmaId::two_cyc, LemmaId::five_cyc,
                     LemmaId::sixteen_cyc1, LemmaId::sixteen_cyc2}) {
    for (int trial = 0; trial < 40; ++trial) {
      LemmaInstance inst = random_instance(id, rng);
      std::optional<BigInt> horizon;
      if (!inst.extent) horizon = inst.start + 80;
      Run run = realize(inst, draw_fillers(inst, rng),
                        inst.extent ? *inst.extent : *horizon);
      PatternReport rep = verify_pattern(inst, run, horizon);
      CAPTURE(lemma_name(id));
      CAPTURE(trial);
      CHECK(rep.ok());
      CHECK_FALSE(rep.partial);
    }
  }
}

TEST_CASE("fillers do not influence the pattern segment") {
  std::mt19937_64 rng(7);
  for (LemmaId id : {LemmaId::seven_cyc, LemmaId::two_cyc, LemmaId::five_cyc,
                     LemmaId::sixteen_cyc1, LemmaId::sixteen_cyc2}) {
    LemmaInstance inst = random_instance(id, rng);
    BigInt upto = inst.extent ? *inst.extent : inst.start + 60;
    Run a = realize(inst, draw_fillers(inst, rng), upto);
    Run b = realize(inst, draw_fillers(inst, rng), upto);
    for (BigInt i = inst.start; i <= upto; ++i) {
      if (BigInt(a.length()) < i || BigInt(b.length()) < i) break;
      CHECK(a.at(static_cast<std::int64_t>(i)) == b.at(static_cast<std::int64_t>(i)));
    }
  }
}

TEST_CASE("verify_pattern flags corrupted runs") {
  LemmaInstance inst = make_five_cyc(6, 20);
  std::vector<std::int64_t> fillers = {9, 9, 9};
  Run good = realize(inst, fillers, *inst.extent);
  CHECK(verify_pattern(inst, good).ok());

  // same ICs against an instance claiming a different mu
  LemmaInstance wrong = make_five_cyc(6, 21);
  CHECK_FALSE(verify_pattern(wrong, good).ok());
}

TEST_CASE("match_suffix recovers the template that produced the run") {
  std::mt19937_64 rng(99);
  for (LemmaId id : {LemmaId::two_cyc, LemmaId::five_cyc, LemmaId::sixteen_cyc1,
                     LemmaId::sixteen_cyc2}) {
    LemmaInstance inst = random_instance(id, rng);
    Run run(RecurrenceSpec::b(),
            build_initial_conditions(inst, draw_fillers(inst, rng)));
    auto found = match_suffix(run);
    CAPTURE(lemma_name(id));
    REQUIRE(found.has_value());
    CHECK(found->id == id);
    for (const auto& [name, value] : inst.params) CHECK(found->param(name) == value);
  }
}

TEST_CASE("instances serialize to JSON") {
  std::string j = make_two_cyc(3, 12).to_json();
  CHECK(j.find("\"template\":\"2cyc\"") != std::string::npos);
  CHECK(j.find("\"M\":\"12\"") != std::string::npos);
  CHECK(j.find("unbounded") != std::string::npos);
}
