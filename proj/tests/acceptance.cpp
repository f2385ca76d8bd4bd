// End-to-end acceptance suite: one line of output per criterion.
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>

#include "expansion_tables.hpp"
#include "bseq/analysis.hpp"
#include "bseq/interface.hpp"

using namespace bseq;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& what) {
  std::cout << "criterion " << criterion << ": " << (ok ? "pass" : "FAIL") << " — "
            << what << '\n';
  if (!ok) ++failures;
}

bool check_theorem1_table() {
  struct {
    std::int64_t n, len, last;
  } rows[] = {{3, 4, 6}, {4, 5, 6}, {10, 1015, 1036}, {11, 117, 120},
              {12, 45, 47}, {13, 73, 82}};
  for (auto [n, len, last] : rows) {
    Run run = generate(RecurrenceSpec::b(), InitialConditions::linear(n), 10'000);
    if (run.liveness() != Liveness::dead) return false;
    if (run.length() != static_cast<std::uint64_t>(len)) return false;
    if (run.at(len) != last) return false;
  }
  return true;
}

bool check_theorem1_generic() {
  for (std::int64_t n = 14; n <= 500; ++n) {
    TheoremReport rep = verify_theorem1(n);
    if (!rep.match) return false;
  }
  return true;
}

bool check_longevity() {
  for (std::int64_t n : {7, 8, 9}) {
    Run run = generate(RecurrenceSpec::b(), InitialConditions::linear(n), 1'000'000);
    if (!run.alive()) return false;
  }
  for (std::int64_t n : {4, 7, 8, 9, 10, 11, 12, 13, 14, 15, 18}) {
    Run run = generate(RecurrenceSpec::b(), InitialConditions::linear(n, true),
                       1'000'000);
    if (!run.alive()) return false;
  }
  return true;
}

bool check_expansion_table(Variant variant, std::int64_t count, std::int64_t cumulative) {
  SymbolicRun run = symbolic_expand(variant, count);
  if (static_cast<std::int64_t>(run.terms.size()) != count) return false;
  for (const auto& row : testdata::kExpansionRows) {
    if (row.offset > count) break;
    const SymbolicTerm& t = run.terms[static_cast<std::size_t>(row.offset - 1)];
    if (t.value != LinearForm{row.a, row.b}) return false;
    if (t.local_bound.lower_bound != row.bound) return false;
  }
  if (run.cumulative_bound.lower_bound != cumulative) return false;
  if (variant == Variant::plain) {
    if (symbolic_step(run)) return false;
    if (run.terminal != SymbolicRun::Terminal::death) return false;
    if (run.terminal_offset != 25 || run.terminal_bound.lower_bound != 14) return false;
  }
  return true;
}

bool check_oracle() {
  std::mt19937_64 rng(611);
  std::uniform_int_distribution<std::int64_t> dist(70, 10'000);
  for (Variant variant : {Variant::plain, Variant::bar}) {
    SymbolicRun sym = symbolic_expand(variant, variant == Variant::plain ? 24 : 69);
    std::vector<std::int64_t> samples;
    for (int i = 0; i < 20; ++i) samples.push_back(dist(rng));
    if (!cross_validate(sym, samples).ok()) return false;
  }
  return true;
}

bool check_theorem2_ends() {
  for (std::int64_t n : {196, 2087, 3201, 4315, 200, 32478, 118})
    if (!verify_theorem2(n).match) return false;
  std::mt19937_64 rng(7919);
  std::uniform_int_distribution<std::int64_t> dist(1, 100);
  for (int r = 0; r < 7; ++r)
    for (int i = 0; i < 3; ++i)
      if (!verify_theorem2(theorem2_threshold(r) + 7 * dist(rng)).match) return false;
  return true;
}

bool check_theorem2_pattern() {
  for (std::int64_t n : {72, 100, 118, 200}) {
    TheoremReport rep = verify_theorem2(n);
    // below-threshold N only assert the pattern, which is what we want here
    if (!rep.match) return false;
  }
  for (int r = 0; r < 7; ++r)
    if (theorem2_nu(r) != seven_cyc_nu(((r - 65) % 7 + 7) % 7)) return false;
  return true;
}

bool check_lemma_suites() {
  std::mt19937_64 rng(271828);
  std::uniform_int_distribution<std::int64_t> filler_dist(1, 1000);
  for (LemmaId id : {LemmaId::seven_cyc, LemmaId::two_cyc, LemmaId::five_cyc,
                     LemmaId::sixteen_cyc1, LemmaId::sixteen_cyc2}) {
    for (int trial = 0; trial < 200; ++trial) {
      LemmaInstance inst = random_instance(id, rng);
      auto draw = [&] {
        std::vector<std::int64_t> f;
        for (std::int64_t i = 0; i < filler_count(inst); ++i)
          f.push_back(filler_dist(rng));
        return f;
      };
      std::optional<BigInt> horizon;
      if (!inst.extent) horizon = inst.start + 80;
      BigInt upto = inst.extent ? *inst.extent : *horizon;
      auto realize = [&](const std::vector<std::int64_t>& fillers) {
        Run run(RecurrenceSpec::b(), build_initial_conditions(inst, fillers));
        while (run.alive() && BigInt(run.length()) < upto) run.step();
        return run;
      };
      Run run = realize(draw());
      PatternReport rep = verify_pattern(inst, run, horizon);
      if (!rep.ok() || rep.partial) return false;
      if (trial % 20 == 0) {
        // filler-irrelevance pair: a fresh draw yields the same segment
        Run other = realize(draw());
        for (BigInt i = inst.start; i <= upto; ++i)
          if (other.at(static_cast<std::int64_t>(i)) !=
              run.at(static_cast<std::int64_t>(i)))
            return false;
      }
    }
  }
  return true;
}

bool check_sporadic() {
  for (std::int64_t n : {81, 182, 429, 822, 1892, 2789, 7292, 23511, 25163})
    if (classify_bar(n).kind != BehaviorClass::Kind::immortal_doubling) return false;
  for (std::int64_t n : {193, 3442})
    if (classify_bar(n).kind != BehaviorClass::Kind::quasi_immortal_5cyc) return false;
  BehaviorClass cls = classify_bar(20830);
  return cls.kind == BehaviorClass::Kind::chunked_mortal &&
         cls.value == (BigInt(84975) << 560362) + 31;
}

bool check_oeis_fixtures() {
  const char* env = std::getenv("BSEQ_FIXTURES");
  std::string dir = env ? env : "data/oeis";
  for (const auto& m : oeis_table()) {
    OeisReport rep = oeis_check_path(m.anum, dir + "/b" + m.anum.substr(1) + ".txt");
    if (!rep.ok() || rep.compared == 0) return false;
  }
  return true;
}

bool check_performance(double* seconds) {
  auto t0 = Clock::now();
  Run run = generate(RecurrenceSpec::b(), InitialConditions::linear(7), 10'000'000);
  *seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return run.length() == 10'000'000 && *seconds < 10.0;
}

}  // namespace

int main() {
  report(1, check_theorem1_table(), "small-N death table with exact last terms");
  report(2, check_theorem1_generic(), "every N in [14,500] dies at N+25 with N+24 terms");
  report(3, check_longevity(), "the chaotic survivors reach 10^6 terms");
  report(4, check_expansion_table(Variant::plain, 24, 9),
         "plain expansion reproduces the 24-row table and the death at N+25");
  report(5, check_expansion_table(Variant::bar, 69, 67),
         "bar expansion reproduces rows 25..69 with cumulative bound N>=67");
  report(6, check_oracle(), "symbolic terms equal concrete terms at 20 random N each variant");
  report(7, check_theorem2_ends(), "bar end lengths 2N+l for the class minima and random larger N");
  report(8, check_theorem2_pattern(), "period-7 pattern over [N+67,2N+nu] and nu-table consistency");
  report(9, check_lemma_suites(), "200 randomized instances per lemma template verify exactly");
  report(10, check_sporadic(), "sporadic classes incl. the 84975*2^560362+31 fast-forward");
  report(11, check_oeis_fixtures(), "regenerated prefixes match all 15 committed b-files");
  double secs = 0;
  bool perf = check_performance(&secs);
  std::ostringstream msg;
  msg << "10^7 terms of B_7 in " << secs << "s (< 10s)";
  report(12, perf, msg.str());
  return failures == 0 ? 0 : 1;
}
