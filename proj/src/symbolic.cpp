#include "bseq/symbolic.hpp"

#include <stdexcept>

namespace bseq {

std::string LinearForm::str() const {
  std::string s;
  if (a != 0) {
    if (a == -1)
      s = "-N";
    else if (a == 1)
      s = "N";
    else
      s = std::to_string(a) + "N";
    if (b > 0) s += "+" + std::to_string(b);
    if (b < 0) s += std::to_string(b);
    return s;
  }
  return std::to_string(b);
}

Classification classify_index(const LinearForm& e, std::int64_t j, Variant /*variant*/) {
  Classification c;
  c.value = {0, 0};
  if (e.a <= -1) {
    // aN + b <= 0 for all N >= ceil(b / -a)
    std::int64_t na = -e.a;
    std::int64_t bound = e.b <= 0 ? 1 : (e.b + na - 1) / na;
    c.kind = Classification::Kind::nonpositive;
    c.constraint = Constraint::at_least(bound);
    return c;
  }
  if (e.a == 0) {
    if (e.b <= 0) {
      c.kind = Classification::Kind::nonpositive;
      c.constraint = Constraint::none();
    } else {
      c.kind = Classification::Kind::initial_segment;
      c.value = {0, e.b};
      c.constraint = Constraint::at_least(e.b);
    }
    return c;
  }
  if (e.a == 1) {
    std::int64_t gamma = e.b;
    if (gamma <= 0) {
      c.kind = Classification::Kind::initial_segment;
      c.value = {1, gamma};
      c.constraint = Constraint::at_least(1 - gamma);
    } else if (gamma < j) {
      c.kind = Classification::Kind::computed;
      c.offset = gamma;
      c.constraint = Constraint::none();
    } else {
      c.kind = Classification::Kind::forward;
      c.constraint = Constraint::none();
      c.finite_constraint = false;
    }
    return c;
  }
  // a >= 2: the index outruns N + j for all large N
  c.kind = Classification::Kind::forward;
  c.constraint = Constraint::at_least(j - e.b + 1);
  return c;
}

bool symbolic_step(SymbolicRun& run) {
  if (run.terminal != SymbolicRun::Terminal::none) return false;
  const std::int64_t j = static_cast<std::int64_t>(run.terms.size()) + 1;
  const bool bar = run.variant == Variant::bar;

  LinearForm total{0, 0};
  Constraint bound = Constraint::none();

  for (int s : {1, 2, 3}) {
    std::int64_t o = j - s;
    LinearForm v;
    if (o >= 1) {
      v = run.terms[static_cast<std::size_t>(o) - 1].value;
    } else {
      // lookback into the tail of the initial conditions <1..N>
      v = {1, o};
      bound = bound.max(Constraint::at_least(s - j + 1));
    }
    LinearForm e = LinearForm{1, j} - v;
    Classification cls = classify_index(e, j, run.variant);
    bound = bound.max(cls.constraint);
    switch (cls.kind) {
      case Classification::Kind::initial_segment:
        total = total + cls.value;
        break;
      case Classification::Kind::computed:
        total = total + run.terms[static_cast<std::size_t>(cls.offset) - 1].value;
        break;
      case Classification::Kind::nonpositive:
        if (!bar) {
          run.terminal = SymbolicRun::Terminal::death;
          run.terminal_offset = j;
          run.terminal_bound = bound;
          run.cumulative_bound = run.cumulative_bound.max(bound);
          return false;
        }
        break;  // contributes 0
      case Classification::Kind::forward:
        run.terminal = bar ? SymbolicRun::Terminal::end : SymbolicRun::Terminal::death;
        run.terminal_offset = j;
        run.terminal_bound = bound;
        run.cumulative_bound = run.cumulative_bound.max(bound);
        return false;
    }
  }

  run.terms.push_back({j, total, bound});
  run.cumulative_bound = run.cumulative_bound.max(bound);
  return true;
}

SymbolicRun symbolic_expand(Variant variant, std::int64_t count) {
  if (count < 1) throw std::invalid_argument("count must be >= 1");
  SymbolicRun run;
  run.variant = variant;
  while (static_cast<std::int64_t>(run.terms.size()) < count) {
    if (!symbolic_step(run)) break;
  }
  return run;
}

CrossValidationReport cross_validate(const SymbolicRun& sym,
                                     const std::vector<std::int64_t>& n_samples) {
  CrossValidationReport report;
  for (std::int64_t n : n_samples) {
    std::uint64_t budget = static_cast<std::uint64_t>(n) + sym.terms.size() + 8;
    Run run = generate(RecurrenceSpec::b(),
                       InitialConditions::linear(n, sym.variant == Variant::bar), budget);
    std::int64_t running_bound = 1;
    for (const SymbolicTerm& t : sym.terms) {
      running_bound = std::max(running_bound, t.local_bound.lower_bound);
      if (n < running_bound) break;
      BigInt expected = t.value.eval(n);
      BigInt actual = run.at(n + t.index_offset);
      ++report.checked;
      if (expected != actual)
        report.mismatches.push_back({n, t.index_offset, expected, actual});
    }
  }
  return report;
}

}  // namespace bseq
