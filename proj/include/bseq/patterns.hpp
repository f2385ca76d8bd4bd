#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <optional>
#include <string>
#include <vector>

#include "bseq/bigint.hpp"
#include "bseq/recurrence.hpp"

namespace bseq {

enum class LemmaId { seven_cyc, two_cyc, five_cyc, sixteen_cyc1, sixteen_cyc2 };

const char* lemma_name(LemmaId id);
std::optional<LemmaId> lemma_from_name(const std::string& name);

// closed form over the block counter k
struct PatternEntry {
  enum class Kind { constant, affine_k, geometric, geometric_half };
  Kind kind;
  BigInt u;  // constant: u | affine: u*k+v | geometric: u*2^k+v | half: u*2^(k-1)+v
  BigInt v;

  BigVal eval(const BigInt& k) const;
};

using LemmaParams = std::map<std::string, BigInt>;

// list of violated hypothesis inequalities, empty when satisfied;
// throws std::invalid_argument on a missing parameter
std::vector<std::string> hypotheses_violations(LemmaId id, const LemmaParams& params);
inline bool hypotheses_ok(LemmaId id, const LemmaParams& params) {
  return hypotheses_violations(id, params).empty();
}

// A pattern template with bound parameters, anchored at a concrete index.
struct LemmaInstance {
  LemmaId id;
  LemmaParams params;
  int period = 0;
  BigInt anchor;                 // index of the k=0 residue-0 slot
  BigInt start;                  // first covered index
  std::optional<BigInt> extent;  // last covered index; nullopt = forever

  const BigInt& param(const std::string& name) const;
  PatternEntry entry(int residue) const;
  bool covers(const BigInt& index) const;
  std::string to_json() const;
};

// constructors; hypotheses are checked and violations throw
LemmaInstance make_seven_cyc(const BigInt& K, const BigInt& c, const BigInt& gamma,
                             const BigInt& lambda, const BigInt& mu);
LemmaInstance make_two_cyc(const BigInt& K, const BigInt& M);
LemmaInstance make_five_cyc(const BigInt& K, const BigInt& mu);
LemmaInstance make_sixteen_cyc1(const BigInt& K, const BigInt& lambda, const BigInt& mu1,
                                const BigInt& mu2, const BigInt& gamma);
LemmaInstance make_sixteen_cyc2(const BigInt& K, const BigInt& lambda, const BigInt& mu1,
                                const BigInt& mu2, const BigInt& gamma1,
                                const BigInt& gamma2, const BigInt& gamma3);

// the nu table from the period-7 lemma, indexed by gamma
int seven_cyc_nu(int gamma);

// closed-form term at an arbitrary-precision index inside the covered range
BigVal expected_term(const LemmaInstance& instance, const BigInt& index);

// the zero-extended initial conditions that instantiate the template;
// fillers are the arbitrary a_i values (count must match the template)
InitialConditions build_initial_conditions(const LemmaInstance& instance,
                                           const std::vector<std::int64_t>& fillers);

struct PatternReport {
  struct Mismatch {
    BigInt index;
    std::string expected;
    BigInt actual;
  };
  std::vector<Mismatch> mismatches;
  BigInt first_checked, last_checked;
  bool partial = false;  // run shorter than the pattern extent
  bool ok() const { return mismatches.empty(); }
};

// checks every covered index against a concrete run; horizon bounds the
// check for templates with unbounded extent
PatternReport verify_pattern(const LemmaInstance& instance, const Run& run,
                             std::optional<BigInt> horizon = std::nullopt);

// anything that can answer term queries at big indices
class TermSource {
 public:
  virtual ~TermSource() = default;
  virtual BigInt source_length() const = 0;
  virtual BigVal value_at(const BigInt& index) const = 0;
};

// binds template parameters against the trailing terms; priority
// 2cyc > 16cyc2 > 16cyc1 > 5cyc > 7cyc
std::optional<LemmaInstance> match_suffix(const TermSource& src);
std::optional<LemmaInstance> match_suffix(const Run& run);

// hypothesis-satisfying instance with small parameters, for property tests
LemmaInstance random_instance(LemmaId id, std::mt19937_64& rng);
// how many arbitrary a_i the template's initial conditions take
std::int64_t filler_count(const LemmaInstance& instance);

}  // namespace bseq
