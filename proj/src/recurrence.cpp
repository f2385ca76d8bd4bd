#include "bseq/recurrence.hpp"

#include <limits>
#include <stdexcept>

namespace bseq {

namespace {
constexpr std::int64_t kBigSentinel = std::numeric_limits<std::int64_t>::min();
constexpr std::int64_t kInt64Max = std::numeric_limits<std::int64_t>::max();
}  // namespace

int RecurrenceSpec::max_shift() const {
  int m = 0;
  for (int s : shifts) m = std::max(m, s);
  return m;
}

void RecurrenceSpec::validate() const {
  if (shifts.empty()) throw std::invalid_argument("recurrence needs at least one shift");
  for (int s : shifts)
    if (s < 1) throw std::invalid_argument("shifts must be positive");
}

InitialConditions InitialConditions::linear(std::int64_t n, bool zero_extended) {
  InitialConditions ics;
  ics.values.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 1; i <= n; ++i) ics.values.push_back(i);
  ics.zero_extended = zero_extended;
  return ics;
}

Run::Run(RecurrenceSpec spec, InitialConditions ics)
    : spec_(std::move(spec)), ics_(std::move(ics)) {
  spec_.validate();
  if (ics_.values.size() < static_cast<std::size_t>(spec_.max_shift()))
    throw std::invalid_argument("initial conditions shorter than max shift");
  terms_.assign(ics_.values.begin(), ics_.values.end());
}

BigInt Run::at(std::int64_t index) const {
  if (index <= 0) {
    if (ics_.zero_extended) return 0;
    throw LookupError("index <= 0 without zero extension");
  }
  if (static_cast<std::uint64_t>(index) > terms_.size())
    throw LookupError("index beyond sequence length");
  std::int64_t v = terms_[static_cast<std::size_t>(index) - 1];
  if (v == kBigSentinel) return big_.at(static_cast<std::uint64_t>(index));
  return v;
}

bool Run::is_big(std::uint64_t index) const {
  return terms_[index - 1] == kBigSentinel;
}

void Run::push(BigInt v) {
  if (v >= kBigSentinel + 1 && v <= kInt64Max) {
    terms_.push_back(static_cast<std::int64_t>(v));
  } else {
    terms_.push_back(kBigSentinel);
    big_.emplace(terms_.size(), std::move(v));
  }
}

StepOutcome Run::step() {
  if (liveness_ != Liveness::alive)
    throw std::logic_error("step() on a non-alive run");
  const std::int64_t n = static_cast<std::int64_t>(terms_.size()) + 1;
  const bool bar = ics_.zero_extended;

  __int128 sum = 0;
  BigInt big_sum = 0;
  bool any_big = false;

  for (int s : spec_.shifts) {
    const std::int64_t li = n - s;  // >= 1 since |ics| >= max shift
    const std::int64_t v = terms_[li - 1];
    std::int64_t a;  // lookup argument n - v
    if (v == kBigSentinel) {
      const BigInt& bv = big_.at(static_cast<std::uint64_t>(li));
      // only the position of n - bv relative to [1, n-1] matters
      if (bv >= n) {
        a = 0;  // argument <= 0
      } else if (bv <= 0) {
        a = n;  // forward reference
      } else {
        a = n - static_cast<std::int64_t>(bv);
      }
    } else {
      // v fits int64; n - v may not, clamp to the classifying ranges
      a = (v <= n - kInt64Max) ? n : n - v;
    }

    if (a <= 0) {
      if (!bar) {
        liveness_ = Liveness::dead;
        undefined_index_ = static_cast<std::uint64_t>(n);
        undefined_shift_ = s;
        return {StepOutcome::Kind::died, 0, undefined_index_, s};
      }
      continue;  // contributes 0
    }
    if (a >= n) {
      liveness_ = bar ? Liveness::ended : Liveness::dead;
      undefined_index_ = static_cast<std::uint64_t>(n);
      undefined_shift_ = s;
      return {bar ? StepOutcome::Kind::ended : StepOutcome::Kind::died, 0,
              undefined_index_, s};
    }
    const std::int64_t sv = terms_[a - 1];
    if (sv == kBigSentinel) {
      if (!any_big) {
        any_big = true;
        big_sum = static_cast<std::int64_t>(sum);
      }
      big_sum += big_.at(static_cast<std::uint64_t>(a));
    } else if (any_big) {
      big_sum += sv;
    } else {
      sum += sv;
    }
  }

  if (!any_big) {
    if (sum >= kBigSentinel + 1 && sum <= kInt64Max) {
      terms_.push_back(static_cast<std::int64_t>(sum));
      return {StepOutcome::Kind::term, static_cast<std::int64_t>(sum),
              static_cast<std::uint64_t>(n), 0};
    }
    const bool neg = sum < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-sum)
                              : static_cast<unsigned __int128>(sum);
    big_sum = (BigInt(static_cast<std::uint64_t>(u >> 64)) << 64) |
              static_cast<std::uint64_t>(u);
    if (neg) big_sum = -big_sum;
  }

  push(big_sum);
  return {StepOutcome::Kind::term, std::move(big_sum), static_cast<std::uint64_t>(n), 0};
}

bool Run::operator==(const Run& o) const {
  if (terms_.size() != o.terms_.size() || liveness_ != o.liveness_ ||
      undefined_index_ != o.undefined_index_)
    return false;
  return terms_ == o.terms_ && big_ == o.big_;
}

StepOutcome step(Run& run) { return run.step(); }

Run generate(const RecurrenceSpec& spec, const InitialConditions& ics,
             std::uint64_t max_terms) {
  if (max_terms < ics.values.size())
    throw std::invalid_argument("max_terms smaller than initial conditions");
  Run run(spec, ics);
  while (run.alive() && run.length() < max_terms) {
    if (!run.step().is_term()) break;
  }
  return run;
}

BigInt term_at(const Run& run, std::int64_t index) { return run.at(index); }

}  // namespace bseq
