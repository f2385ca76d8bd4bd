#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bseq/bigint.hpp"
#include "bseq/patterns.hpp"
#include "bseq/recurrence.hpp"

namespace bseq {

// A run represented as a concrete prefix plus closed-form chunks, so terms
// and continuation work at indices far beyond anything enumerable.
class ChunkedRun : public TermSource {
 public:
  explicit ChunkedRun(Run base);  // base must be zero-extended and alive

  struct Chunk {
    LemmaInstance instance;
    BigInt lo, hi;  // the index range this chunk is authoritative for
  };

  // records the instance's closed forms from the current end through its
  // extent; an unbounded extent marks the run immortal
  void append_chunk(LemmaInstance instance);

  struct Outcome {
    enum class Kind { term, ended };
    Kind kind;
    BigVal value;
  };
  // computes the term at covered_length()+1 by the recurrence
  Outcome step();

  BigInt covered_length() const { return end_; }
  Liveness liveness() const { return liveness_; }
  bool immortal() const { return immortal_; }
  const Run& base() const { return base_; }
  const std::vector<Chunk>& chunks() const { return chunks_; }

  // TermSource; index <= 0 is 0 (zero extension)
  BigInt source_length() const override { return end_; }
  BigVal value_at(const BigInt& index) const override;

 private:
  struct TailSeg {
    BigInt lo;
    std::vector<BigVal> values;
  };
  struct Seg {
    BigInt lo, hi;
    std::optional<std::size_t> chunk;  // index into chunks_; else tail
    std::size_t tail = 0;              // index into tails_
  };

  Run base_;
  std::vector<Chunk> chunks_;
  std::vector<TailSeg> tails_;
  std::vector<Seg> segs_;
  BigInt end_;
  Liveness liveness_ = Liveness::alive;
  bool immortal_ = false;
};

struct ResumeResult {
  enum class Kind { ended, matched, budget_exhausted };
  Kind kind;
  std::optional<LemmaInstance> match;
  BigInt length;  // covered length when stopping (final length when ended)
};

// Steps past the last chunk until the sequence ends, a new suffix match
// with forward progress appears, or max_steps terms have been computed.
ResumeResult resume_after_chunk(ChunkedRun& run, std::uint64_t max_steps);

}  // namespace bseq
