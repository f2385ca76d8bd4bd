#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "bseq/bigint.hpp"

namespace bseq {

// Shape of a nested recurrence A(n) = sum_i A(n - A(n - s_i)).
struct RecurrenceSpec {
  std::vector<int> shifts;
  std::string name;

  static RecurrenceSpec b() { return {{1, 2, 3}, "B"}; }
  static RecurrenceSpec q() { return {{1, 2}, "Q"}; }

  int max_shift() const;
  void validate() const;  // throws std::invalid_argument
};

struct InitialConditions {
  std::vector<std::int64_t> values;  // indices 1..values.size()
  bool zero_extended = false;        // the 0-bar convention: A(n) = 0 for n <= 0

  // <1, 2, ..., n>
  static InitialConditions linear(std::int64_t n, bool zero_extended = false);
};

enum class Liveness { alive, dead, ended };

struct StepOutcome {
  enum class Kind { term, died, ended };
  Kind kind;
  BigInt value;          // valid for kind == term
  std::uint64_t at_index = 0;
  int offending_shift = 0;  // first failing shift, in spec order

  bool is_term() const { return kind == Kind::term; }
};

class LookupError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// A materialized sequence.  Term storage is a dense int64 array with
// per-index promotion to arbitrary precision on overflow.
class Run {
 public:
  Run(RecurrenceSpec spec, InitialConditions ics);

  const RecurrenceSpec& spec() const { return spec_; }
  const InitialConditions& ics() const { return ics_; }
  bool zero_extended() const { return ics_.zero_extended; }

  std::uint64_t length() const { return terms_.size(); }
  Liveness liveness() const { return liveness_; }
  bool alive() const { return liveness_ == Liveness::alive; }
  // index at which the sequence became undefined (length + 1); 0 if alive
  std::uint64_t undefined_index() const { return undefined_index_; }
  int undefined_shift() const { return undefined_shift_; }

  // term lookup; index <= 0 yields 0 under zero extension, otherwise throws
  BigInt at(std::int64_t index) const;
  bool is_big(std::uint64_t index) const;
  // fast path; only valid when !is_big(index)
  std::int64_t at_small(std::uint64_t index) const { return terms_[index - 1]; }

  // computes the term at length()+1; contract violation if not alive
  StepOutcome step();

  bool operator==(const Run& o) const;

 private:
  RecurrenceSpec spec_;
  InitialConditions ics_;
  std::vector<std::int64_t> terms_;  // kBigSentinel redirects to big_
  std::unordered_map<std::uint64_t, BigInt> big_;
  Liveness liveness_ = Liveness::alive;
  std::uint64_t undefined_index_ = 0;
  int undefined_shift_ = 0;

  void push(BigInt v);
};

StepOutcome step(Run& run);
Run generate(const RecurrenceSpec& spec, const InitialConditions& ics,
             std::uint64_t max_terms);
BigInt term_at(const Run& run, std::int64_t index);

}  // namespace bseq
