#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bseq/bigint.hpp"
#include "bseq/chunked.hpp"
#include "bseq/patterns.hpp"
#include "bseq/recurrence.hpp"
#include "bseq/symbolic.hpp"

namespace bseq {

struct BehaviorClass {
  enum class Kind {
    died_at,
    ended_at,
    immortal_doubling,
    quasi_immortal_5cyc,
    chunked_mortal,
    survived_budget
  };
  Kind kind;
  BigInt value;  // died/ended: undefined index; chunked: total length; survived: budget
  std::optional<LemmaInstance> instance;   // the doubling instance
  std::vector<BigInt> chunk_ends;          // observed 5cyc chunk ends
  std::string str() const;
};

struct TheoremReport {
  std::int64_t n_param;
  Variant variant;
  std::string expected;
  std::string observed;
  bool match = false;
  std::string details;
};

// end-of-sequence lengths and validity thresholds per residue class mod 7
int theorem2_nu(int residue);          // pattern end 2N+nu
int theorem2_end_offset(int residue);  // total length 2N+offset
std::int64_t theorem2_threshold(int residue);

TheoremReport verify_theorem1(std::int64_t n, std::uint64_t budget = 1'000'000);
TheoremReport verify_theorem2(std::int64_t n);

struct ClassifyOptions {
  std::uint64_t budget = 1'000'000;        // direct-generation term budget
  std::uint64_t resume_budget = 1'000'000; // steps allowed after a chunk
  std::uint64_t probe_stride = 10'000;
};

BehaviorClass classify_bar(std::int64_t n, const ClassifyOptions& opts = {});

struct InterleavingFit {
  int period = 0;
  BigInt block_start_index;  // index of the first fitted block's residue 0
  std::vector<PatternEntry> forms;  // one per residue; k counts blocks from block_start_index
};

// fits the trailing complete blocks of the window (at least three) for each
// candidate period; smallest period wins
std::optional<InterleavingFit> detect_interleaving(const std::vector<BigInt>& window,
                                                   const BigInt& window_start_index,
                                                   int max_period);
std::optional<InterleavingFit> detect_interleaving(const Run& run, int max_period);

}  // namespace bseq
