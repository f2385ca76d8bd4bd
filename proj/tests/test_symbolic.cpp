#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "expansion_tables.hpp"
#include "bseq/symbolic.hpp"

using namespace bseq;

TEST_CASE("linear form rendering") {
  CHECK(LinearForm{2, 11}.str() == "2N+11");
  CHECK(LinearForm{1, -2}.str() == "N-2");
  CHECK(LinearForm{0, 6}.str() == "6");
  CHECK(LinearForm{1, 0}.str() == "N");
  CHECK(LinearForm{4, 51}.str() == "4N+51");
}

TEST_CASE("index classification cases") {
  // e = N - 4 at step 2: initial-segment lookup, value N-4, needs N >= 5
  auto c = classify_index({1, -4}, 2, Variant::plain);
  CHECK(c.kind == Classification::Kind::initial_segment);
  CHECK(c.value == LinearForm{1, -4});
  CHECK(c.constraint.lower_bound == 5);

  // e = 2 at any step: constant initial-segment index
  c = classify_index({0, 2}, 3, Variant::plain);
  CHECK(c.kind == Classification::Kind::initial_segment);
  CHECK(c.value == LinearForm{0, 2});

  // e = N + 1 at step 5: computed four steps earlier
  c = classify_index({1, 1}, 5, Variant::plain);
  CHECK(c.kind == Classification::Kind::computed);
  CHECK(c.offset == 1);

  // e = N + 7 at step 5: forward reference
  c = classify_index({1, 7}, 5, Variant::plain);
  CHECK(c.kind == Classification::Kind::forward);

  // e = -N + 14 at step 25: eventually nonpositive, for N >= 14
  c = classify_index({-1, 14}, 25, Variant::plain);
  CHECK(c.kind == Classification::Kind::nonpositive);
  CHECK(c.constraint.lower_bound == 14);

  // a >= 2 indices eventually run ahead of the sequence
  c = classify_index({2, -1}, 10, Variant::bar);
  CHECK(c.kind == Classification::Kind::forward);
}

TEST_CASE("plain expansion matches the 24-row table") {
  SymbolicRun run = symbolic_expand(Variant::plain, 24);
  REQUIRE(run.terms.size() == 24);
  for (const auto& row : testdata::kExpansionRows) {
    if (row.offset > 24) break;
    const SymbolicTerm& t = run.terms[static_cast<std::size_t>(row.offset - 1)];
    CAPTURE(row.offset);
    CHECK(t.index_offset == row.offset);
    CHECK(t.value == LinearForm{row.a, row.b});
    CHECK(t.local_bound.lower_bound == row.bound);
  }
  CHECK(run.cumulative_bound.lower_bound == 9);
  CHECK(run.terminal == SymbolicRun::Terminal::none);

  // one more step reveals the death
  CHECK_FALSE(symbolic_step(run));
  CHECK(run.terminal == SymbolicRun::Terminal::death);
  CHECK(run.terminal_offset == 25);
  CHECK(run.terminal_bound.lower_bound == 14);
}

TEST_CASE("bar expansion matches the 69-row table") {
  SymbolicRun run = symbolic_expand(Variant::bar, 69);
  REQUIRE(run.terms.size() == 69);
  for (const auto& row : testdata::kExpansionRows) {
    const SymbolicTerm& t = run.terms[static_cast<std::size_t>(row.offset - 1)];
    CAPTURE(row.offset);
    CHECK(t.value == LinearForm{row.a, row.b});
    CHECK(t.local_bound.lower_bound == row.bound);
  }
  CHECK(run.cumulative_bound.lower_bound == 67);
  CHECK(run.terminal == SymbolicRun::Terminal::none);
}

TEST_CASE("the two variants share the first 24 rows") {
  SymbolicRun plain = symbolic_expand(Variant::plain, 24);
  SymbolicRun bar = symbolic_expand(Variant::bar, 24);
  for (std::size_t i = 0; i < 24; ++i) {
    CHECK(plain.terms[i].value == bar.terms[i].value);
    CHECK(plain.terms[i].local_bound == bar.terms[i].local_bound);
  }
}

TEST_CASE("symbolic terms agree with concrete runs") {
  for (Variant variant : {Variant::plain, Variant::bar}) {
    SymbolicRun sym = symbolic_expand(variant, variant == Variant::plain ? 24 : 69);
    auto report = cross_validate(sym, {70, 113, 200, 999, 4096});
    CHECK(report.ok());
    CHECK(report.checked > 0);
  }
}

TEST_CASE("small N are filtered out by the running bound") {
  // at N=70 every row of the bar table is admissible; at N=20 only a prefix
  SymbolicRun sym = symbolic_expand(Variant::bar, 69);
  auto report = cross_validate(sym, {20, 40, 66});
  CHECK(report.ok());
}
