#include "bseq/chunked.hpp"

#include <algorithm>
#include <stdexcept>

namespace bseq {

ChunkedRun::ChunkedRun(Run base) : base_(std::move(base)) {
  if (!base_.zero_extended())
    throw std::invalid_argument("chunked runs require zero-extended initial conditions");
  if (!base_.alive()) throw std::invalid_argument("base run is not alive");
  end_ = base_.length();
}

void ChunkedRun::append_chunk(LemmaInstance instance) {
  if (immortal_) throw std::logic_error("append_chunk after an unbounded chunk");
  if (instance.start > end_ + 1)
    throw std::invalid_argument("chunk would leave an uncovered gap");
  Seg seg;
  seg.lo = end_ + 1;
  if (instance.extent) {
    if (*instance.extent <= end_)
      throw std::invalid_argument("chunk makes no forward progress");
    seg.hi = *instance.extent;
    end_ = seg.hi;
  } else {
    immortal_ = true;
    seg.hi = seg.lo;  // unused; no further stepping happens
  }
  seg.chunk = chunks_.size();
  chunks_.push_back({std::move(instance), seg.lo, seg.hi});
  if (!immortal_) segs_.push_back(std::move(seg));
}

BigVal ChunkedRun::value_at(const BigInt& index) const {
  if (index <= 0) return BigVal(0);
  if (index <= BigInt(base_.length()))
    return BigVal(base_.at(static_cast<std::int64_t>(index)));
  if (index > end_) {
    if (immortal_ && index >= chunks_.back().lo)
      return expected_term(chunks_.back().instance, index);
    throw std::logic_error("lookup beyond covered range");
  }
  // few segments; linear scan from the back
  for (auto it = segs_.rbegin(); it != segs_.rend(); ++it) {
    if (index < it->lo) continue;
    if (it->chunk) return expected_term(chunks_[*it->chunk].instance, index);
    const TailSeg& tail = tails_[it->tail];
    return tail.values[static_cast<std::size_t>(index - tail.lo)];
  }
  throw std::logic_error("uncovered gap in chunked run");
}

ChunkedRun::Outcome ChunkedRun::step() {
  if (liveness_ != Liveness::alive) throw std::logic_error("step() on a finished run");
  if (immortal_) throw std::logic_error("step() on an immortal run");
  const BigInt n = end_ + 1;

  BigVal sum(0);
  for (int s : {1, 2, 3}) {
    BigVal v = value_at(n - s);
    if (v >= n) continue;  // argument <= 0: zero extension
    if (v <= BigInt(0)) {  // forward reference: the sequence ends
      liveness_ = Liveness::ended;
      return {Outcome::Kind::ended, BigVal(0)};
    }
    // 0 < v < n, hence materializable
    sum = sum + value_at(n - v.exact());
  }

  if (segs_.empty() || segs_.back().chunk) {
    TailSeg tail;
    tail.lo = n;
    segs_.push_back({n, n, std::nullopt, tails_.size()});
    tails_.push_back(std::move(tail));
  }
  tails_[segs_.back().tail].values.push_back(sum);
  segs_.back().hi = n;
  end_ = n;
  return {Outcome::Kind::term, std::move(sum)};
}

ResumeResult resume_after_chunk(ChunkedRun& run, std::uint64_t max_steps) {
  for (std::uint64_t i = 0; i < max_steps; ++i) {
    auto out = run.step();
    if (out.kind == ChunkedRun::Outcome::Kind::ended)
      return {ResumeResult::Kind::ended, std::nullopt, run.covered_length()};
    if (auto m = match_suffix(run)) {
      // only matches that extend coverage are useful
      if (!m->extent || *m->extent > run.covered_length())
        return {ResumeResult::Kind::matched, std::move(m), run.covered_length()};
    }
  }
  return {ResumeResult::Kind::budget_exhausted, std::nullopt, run.covered_length()};
}

}  // namespace bseq
