#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bseq/bigint.hpp"
#include "bseq/recurrence.hpp"

namespace bseq {

enum class Variant { plain, bar };

// a*N + b with exact integer coefficients
struct LinearForm {
  std::int64_t a = 0;
  std::int64_t b = 0;

  BigInt eval(const BigInt& n) const { return BigInt(a) * n + b; }
  LinearForm operator+(const LinearForm& o) const { return {a + o.a, b + o.b}; }
  LinearForm operator-(const LinearForm& o) const { return {a - o.a, b - o.b}; }
  bool operator==(const LinearForm& o) const = default;
  std::string str() const;  // "2N+11", "N-2", "6"
};

// "valid for all N >= lower_bound"; constraints combine by maximum
struct Constraint {
  std::int64_t lower_bound = 1;

  static Constraint none() { return {1}; }
  static Constraint at_least(std::int64_t n) { return {std::max<std::int64_t>(n, 1)}; }
  Constraint max(const Constraint& o) const { return {std::max(lower_bound, o.lower_bound)}; }
  bool operator==(const Constraint& o) const = default;
};

// Case analysis of a lookup index expression e = aN + b at expansion step j.
struct Classification {
  enum class Kind { initial_segment, computed, nonpositive, forward };
  Kind kind;
  LinearForm value;      // initial_segment: the term value at that index
  std::int64_t offset = 0;  // computed: which earlier expansion step
  Constraint constraint;
  bool finite_constraint = true;
};

Classification classify_index(const LinearForm& e, std::int64_t j, Variant variant);

// One expanded term: the value of B(N+index_offset) with the bounds that
// this step's case analysis needed.
struct SymbolicTerm {
  std::int64_t index_offset;
  LinearForm value;
  Constraint local_bound;
};

struct SymbolicRun {
  enum class Terminal { none, death, end };
  Variant variant;
  std::vector<SymbolicTerm> terms;
  Constraint cumulative_bound;
  Terminal terminal = Terminal::none;
  std::int64_t terminal_offset = 0;
  Constraint terminal_bound;
};

// appends one term, or sets the terminal state; returns false once terminal
bool symbolic_step(SymbolicRun& run);

SymbolicRun symbolic_expand(Variant variant, std::int64_t count);

struct CrossValidationReport {
  struct Mismatch {
    BigInt n;
    std::int64_t offset;
    BigInt expected, actual;
  };
  std::vector<Mismatch> mismatches;
  std::uint64_t checked = 0;
  bool ok() const { return mismatches.empty(); }
};

// Checks every symbolic term against the concrete engine at each sample N,
// restricted to offsets whose running bound admits that N.
CrossValidationReport cross_validate(const SymbolicRun& sym,
                                     const std::vector<std::int64_t>& n_samples);

}  // namespace bseq
