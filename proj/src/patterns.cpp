#include "bseq/patterns.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace bseq {

namespace {

BigInt floordiv(const BigInt& a, const BigInt& b) {
  BigInt q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

std::int64_t to_i64(const BigInt& v, const char* what) {
  if (v < std::numeric_limits<std::int64_t>::min() ||
      v > std::numeric_limits<std::int64_t>::max())
    throw std::overflow_error(std::string(what) + " does not fit a machine word");
  return static_cast<std::int64_t>(v);
}

const std::array<int, 7> kNuTable = {-2, -2, 2, 1, 0, -1, -2};
// lower bounds on lambda and mu by gamma, as offsets from -2c and -c
const std::array<int, 7> kLambdaOff = {2, 1, 4, 3, 2, 1, 0};
const std::array<int, 7> kMuOff = {0, 0, 3, 2, 1, 0, -1};

const BigInt& need(const LemmaParams& p, const std::string& name) {
  auto it = p.find(name);
  if (it == p.end()) throw std::invalid_argument("missing lemma parameter: " + name);
  return it->second;
}

void check(std::vector<std::string>& out, bool ok, const std::string& what) {
  if (!ok) out.push_back(what);
}

}  // namespace

const char* lemma_name(LemmaId id) {
  switch (id) {
    case LemmaId::seven_cyc: return "7cyc";
    case LemmaId::two_cyc: return "2cyc";
    case LemmaId::five_cyc: return "5cyc";
    case LemmaId::sixteen_cyc1: return "16cyc1";
    case LemmaId::sixteen_cyc2: return "16cyc2";
  }
  return "?";
}

std::optional<LemmaId> lemma_from_name(const std::string& name) {
  if (name == "7cyc") return LemmaId::seven_cyc;
  if (name == "2cyc") return LemmaId::two_cyc;
  if (name == "5cyc") return LemmaId::five_cyc;
  if (name == "16cyc1") return LemmaId::sixteen_cyc1;
  if (name == "16cyc2") return LemmaId::sixteen_cyc2;
  return std::nullopt;
}

int seven_cyc_nu(int gamma) { return kNuTable.at(static_cast<std::size_t>(gamma)); }

BigVal PatternEntry::eval(const BigInt& k) const {
  switch (kind) {
    case Kind::constant: return BigVal(u);
    case Kind::affine_k: return BigVal(u * k + v);
    case Kind::geometric:
      if (k < 0) throw std::logic_error("geometric entry at negative k");
      return BigVal::geometric(u, k, v);
    case Kind::geometric_half:
      if (k < 1) throw std::logic_error("geometric-half entry needs k >= 1");
      return BigVal::geometric(u, k - 1, v);
  }
  throw std::logic_error("bad entry kind");
}

std::vector<std::string> hypotheses_violations(LemmaId id, const LemmaParams& p) {
  std::vector<std::string> v;
  switch (id) {
    case LemmaId::seven_cyc: {
      const BigInt &K = need(p, "K"), &c = need(p, "c"), &g = need(p, "gamma"),
                   &lam = need(p, "lambda"), &mu = need(p, "mu");
      check(v, K >= 7, "K >= 7");
      check(v, c >= 1, "c >= 1");
      check(v, g >= 0 && g <= 6, "0 <= gamma <= 6");
      if (g >= 0 && g <= 6) {
        int gi = static_cast<int>(g);
        check(v, lam >= -2 * c + kLambdaOff[gi],
              "lambda >= -2c+" + std::to_string(kLambdaOff[gi]));
        check(v, mu >= -c + kMuOff[gi], "mu >= -c+" + std::to_string(kMuOff[gi]));
      }
      check(v, K - 7 * c - g >= 0, "L = K-7c-gamma >= 0");
      break;
    }
    case LemmaId::two_cyc: {
      const BigInt &K = need(p, "K"), &M = need(p, "M");
      check(v, K >= 1, "K >= 1");
      check(v, M >= K + 5, "M >= K+5");
      break;
    }
    case LemmaId::five_cyc: {
      const BigInt &K = need(p, "K"), &mu = need(p, "mu");
      check(v, K >= 3, "K >= 3");
      check(v, mu >= 1, "mu >= 1");
      break;
    }
    case LemmaId::sixteen_cyc1:
    case LemmaId::sixteen_cyc2: {
      const BigInt &K = need(p, "K"), &lam = need(p, "lambda"), &mu1 = need(p, "mu1"),
                   &mu2 = need(p, "mu2");
      check(v, K >= 1, "K >= 1");
      check(v, lam > 31 + K, "lambda > 31+K");
      check(v, mu1 > lam, "mu1 > lambda");
      check(v, mu2 > lam, "mu2 > lambda");
      if (id == LemmaId::sixteen_cyc1) {
        check(v, need(p, "gamma") > lam, "gamma > lambda");
      } else {
        check(v, need(p, "gamma1") > lam, "gamma1 > lambda");
        check(v, need(p, "gamma2") > lam, "gamma2 > lambda");
        check(v, need(p, "gamma3") > lam, "gamma3 > lambda");
      }
      break;
    }
  }
  return v;
}

namespace {

LemmaInstance finish(LemmaInstance inst) {
  auto v = hypotheses_violations(inst.id, inst.params);
  if (!v.empty()) {
    std::string msg = "lemma hypotheses violated:";
    for (const auto& s : v) msg += " " + s + ";";
    throw std::invalid_argument(msg);
  }
  return inst;
}

}  // namespace

LemmaInstance make_seven_cyc(const BigInt& K, const BigInt& c, const BigInt& gamma,
                             const BigInt& lambda, const BigInt& mu) {
  LemmaInstance inst;
  inst.id = LemmaId::seven_cyc;
  inst.params = {{"K", K}, {"c", c}, {"gamma", gamma}, {"lambda", lambda}, {"mu", mu}};
  BigInt L = K - 7 * c - gamma;
  BigInt M = K + L + 5;
  inst.params["L"] = L;
  inst.params["M"] = M;
  inst.period = 7;
  inst.anchor = M;
  inst.start = M - 3;
  if (gamma >= 0 && gamma <= 6)
    inst.extent = 2 * K + seven_cyc_nu(static_cast<int>(gamma));
  return finish(std::move(inst));
}

LemmaInstance make_two_cyc(const BigInt& K, const BigInt& M) {
  LemmaInstance inst;
  inst.id = LemmaId::two_cyc;
  inst.params = {{"K", K}, {"M", M}};
  inst.period = 2;
  inst.anchor = K;
  inst.start = K + 1;
  return finish(std::move(inst));
}

LemmaInstance make_five_cyc(const BigInt& K, const BigInt& mu) {
  LemmaInstance inst;
  inst.id = LemmaId::five_cyc;
  inst.params = {{"K", K}, {"mu", mu}};
  inst.period = 5;
  inst.anchor = K;
  inst.start = K + 1;
  inst.extent = K + floordiv(5 * mu - 15, 2);
  return finish(std::move(inst));
}

LemmaInstance make_sixteen_cyc1(const BigInt& K, const BigInt& lambda, const BigInt& mu1,
                                const BigInt& mu2, const BigInt& gamma) {
  LemmaInstance inst;
  inst.id = LemmaId::sixteen_cyc1;
  inst.params = {{"K", K}, {"lambda", lambda}, {"mu1", mu1}, {"mu2", mu2}, {"gamma", gamma}};
  inst.period = 16;
  inst.anchor = K;
  inst.start = K + 1;
  inst.extent = lambda;
  return finish(std::move(inst));
}

LemmaInstance make_sixteen_cyc2(const BigInt& K, const BigInt& lambda, const BigInt& mu1,
                                const BigInt& mu2, const BigInt& gamma1,
                                const BigInt& gamma2, const BigInt& gamma3) {
  LemmaInstance inst;
  inst.id = LemmaId::sixteen_cyc2;
  inst.params = {{"K", K},       {"lambda", lambda}, {"mu1", mu1},     {"mu2", mu2},
                 {"gamma1", gamma1}, {"gamma2", gamma2}, {"gamma3", gamma3}};
  inst.period = 16;
  inst.anchor = K;
  inst.start = K + 1;
  inst.extent = lambda;
  return finish(std::move(inst));
}

const BigInt& LemmaInstance::param(const std::string& name) const {
  return need(params, name);
}

PatternEntry LemmaInstance::entry(int residue) const {
  using K = PatternEntry::Kind;
  auto cst = [](BigInt u) { return PatternEntry{K::constant, std::move(u), 0}; };
  auto aff = [](BigInt u, BigInt v) { return PatternEntry{K::affine_k, std::move(u), std::move(v)}; };
  auto geo = [](BigInt u, BigInt v) { return PatternEntry{K::geometric, std::move(u), std::move(v)}; };
  auto half = [](BigInt u, BigInt v) { return PatternEntry{K::geometric_half, std::move(u), std::move(v)}; };

  switch (id) {
    case LemmaId::seven_cyc: {
      const BigInt &Kp = param("K"), &L = param("L"), &M = param("M"),
                   &lam = param("lambda"), &mu = param("mu");
      switch (residue) {
        case 0: return aff(7, L + 7);
        case 1: return aff(7, M + 2);
        case 2: return aff(7, M + 4);
        case 3: return cst(7);
        case 4: return aff(2, 2 * Kp + lam);
        case 5: return aff(1, 2 * Kp + mu);
        case 6: return cst(Kp - 2);
      }
      break;
    }
    case LemmaId::two_cyc:
      if (residue == 0) return half(param("M"), 0);
      if (residue == 1) return cst(2);
      break;
    case LemmaId::five_cyc: {
      const BigInt &Kp = param("K"), &mu = param("mu");
      switch (residue) {
        case 0: return cst(5);
        case 1: return aff(3, Kp + mu);
        case 2: return cst(3);
        case 3: return aff(5, Kp + 3);
        case 4: return aff(3, Kp + mu + 1);
      }
      break;
    }
    case LemmaId::sixteen_cyc1: {
      const BigInt &lam = param("lambda"), &mu1 = param("mu1"), &mu2 = param("mu2"),
                   &g = param("gamma");
      switch (residue) {
        case 0: return half(mu1, g - mu1);
        case 1: return cst(lam);
        case 2: return cst(7);
        case 3: return geo(mu2, 0);
        case 4: return cst(16);
        case 5: return geo(mu2, 0);
        case 6: return cst(16);
        case 7: return geo(mu1, 0);
        case 8: return cst(lam);
        case 9: return cst(7);
        case 10: return geo(mu2, 0);
        case 11: return cst(16);
        // the block's twelfth slot really carries twice mu2 (it doubles a
        // step ahead of its siblings: the k=0 value is 2*mu2)
        case 12: return geo(2 * mu2, 0);
        case 13: return cst(16);
        case 14: return geo(mu2, 0);
        case 15: return cst(25);
      }
      break;
    }
    case LemmaId::sixteen_cyc2: {
      const BigInt &lam = param("lambda"), &mu1 = param("mu1"), &mu2 = param("mu2"),
                   &g1 = param("gamma1"), &g2 = param("gamma2"), &g3 = param("gamma3");
      switch (residue) {
        case 0: return geo(mu1, g1 - 2 * mu1);
        case 1: return cst(16);
        case 2: return geo(mu2, 0);
        case 3: return cst(7);
        case 4: return aff(7, g2);
        case 5: return cst(lam);
        case 6: return cst(16);
        case 7: return cst(lam);
        case 8: return cst(16);
        case 9: return geo(mu1, 0);
        case 10: return cst(10);
        case 11: return aff(16, g3);
        case 12: return geo(mu2, 0);
        case 13: return cst(7);
        case 14: return cst(lam);
        case 15: return cst(16);
      }
      break;
    }
  }
  throw std::logic_error("bad residue for template");
}

bool LemmaInstance::covers(const BigInt& index) const {
  if (index < start) return false;
  return !extent || index <= *extent;
}

std::string LemmaInstance::to_json() const {
  nlohmann::json j;
  j["template"] = lemma_name(id);
  nlohmann::json p = nlohmann::json::object();
  for (const auto& [name, value] : params) p[name] = value.str();
  j["params"] = p;
  j["period"] = period;
  j["anchor"] = anchor.str();
  j["start"] = start.str();
  j["extent"] = extent ? extent->str() : "unbounded";
  return j.dump();
}

BigVal expected_term(const LemmaInstance& instance, const BigInt& index) {
  if (!instance.covers(index))
    throw std::out_of_range("index outside the pattern's covered range");
  BigInt delta = index - instance.anchor;
  BigInt k = floordiv(delta, instance.period);
  int residue = static_cast<int>(delta - k * instance.period);
  return instance.entry(residue).eval(k);
}

InitialConditions build_initial_conditions(const LemmaInstance& instance,
                                           const std::vector<std::int64_t>& fillers) {
  InitialConditions ics;
  ics.zero_extended = true;
  auto push = [&ics](const BigInt& v) { ics.values.push_back(to_i64(v, "IC value")); };
  auto expect_fillers = [&fillers](const BigInt& count, const char* tmpl) {
    if (BigInt(fillers.size()) != count)
      throw std::invalid_argument(std::string("wrong filler count for ") + tmpl);
  };

  switch (instance.id) {
    case LemmaId::seven_cyc: {
      const BigInt &K = instance.param("K"), &L = instance.param("L"),
                   &lam = instance.param("lambda"), &mu = instance.param("mu");
      expect_fillers(L, "7cyc");
      for (BigInt i = 1; i <= K; ++i) push(i);
      push(6);
      for (auto a : fillers) ics.values.push_back(a);
      push(2 * K + lam - 2);
      push(2 * K + mu - 1);
      push(K - 2);
      break;
    }
    case LemmaId::two_cyc: {
      expect_fillers(instance.param("K"), "2cyc");
      for (auto a : fillers) ics.values.push_back(a);
      push(2);
      push(instance.param("M"));
      push(2);
      break;
    }
    case LemmaId::five_cyc: {
      const BigInt &K = instance.param("K"), &mu = instance.param("mu");
      expect_fillers(K - 3, "5cyc");
      ics.values = {1, 2, 3};
      for (auto a : fillers) ics.values.push_back(a);
      push(K + mu);
      push(3);
      push(K + 3);
      push(K + mu + 1);
      push(5);
      break;
    }
    case LemmaId::sixteen_cyc1: {
      const BigInt &lam = instance.param("lambda"), &mu1 = instance.param("mu1"),
                   &mu2 = instance.param("mu2"), &g = instance.param("gamma");
      expect_fillers(instance.param("K"), "16cyc1");
      for (auto a : fillers) ics.values.push_back(a);
      for (const BigInt& v : {lam, BigInt(7), mu2, BigInt(16), mu2, BigInt(16), mu1, lam,
                              BigInt(7), mu2, BigInt(16), BigInt(2 * mu2), BigInt(16), mu2,
                              BigInt(25), g, lam, BigInt(7)})
        push(v);
      break;
    }
    case LemmaId::sixteen_cyc2: {
      const BigInt &lam = instance.param("lambda"), &mu1 = instance.param("mu1"),
                   &mu2 = instance.param("mu2"), &g1 = instance.param("gamma1"),
                   &g2 = instance.param("gamma2"), &g3 = instance.param("gamma3");
      expect_fillers(instance.param("K"), "16cyc2");
      for (auto a : fillers) ics.values.push_back(a);
      for (const BigInt& v : {BigInt(16), mu2, BigInt(7), g2, lam, BigInt(16), lam,
                              BigInt(16), mu1, BigInt(10), g3, mu2, BigInt(7), lam,
                              BigInt(16), g1})
        push(v);
      break;
    }
  }
  return ics;
}

PatternReport verify_pattern(const LemmaInstance& instance, const Run& run,
                             std::optional<BigInt> horizon) {
  PatternReport report;
  BigInt end;
  if (instance.extent) {
    end = *instance.extent;
    if (BigInt(run.length()) < end) {
      end = run.length();
      report.partial = !horizon || *horizon > BigInt(run.length());
    }
    if (horizon && *horizon < end) end = *horizon;
  } else {
    if (!horizon) throw std::invalid_argument("unbounded template needs a horizon");
    end = *horizon;
    if (BigInt(run.length()) < end) {
      end = run.length();
      report.partial = true;
    }
  }
  report.first_checked = instance.start;
  report.last_checked = end;
  for (BigInt i = instance.start; i <= end; ++i) {
    BigVal expected = expected_term(instance, i);
    BigInt actual = run.at(to_i64(i, "index"));
    if (!expected.is_exact() || expected.exact() != actual)
      report.mismatches.push_back({i, expected.str(), actual});
  }
  return report;
}

namespace {

class RunSource : public TermSource {
 public:
  explicit RunSource(const Run& run) : run_(run) {}
  BigInt source_length() const override { return run_.length(); }
  BigVal value_at(const BigInt& index) const override {
    return BigVal(run_.at(to_i64(index, "index")));
  }

 private:
  const Run& run_;
};

bool eq(const BigVal& v, const BigInt& c) { return v.cmp(c) == 0; }

std::optional<BigInt> exact(const BigVal& v) {
  if (!v.is_exact()) return std::nullopt;
  return v.exact();
}

std::optional<LemmaInstance> try_two_cyc(const TermSource& t, const BigInt& n) {
  if (n < 4) return std::nullopt;
  if (!eq(t.value_at(n), 2) || !eq(t.value_at(n - 2), 2)) return std::nullopt;
  auto M = exact(t.value_at(n - 1));
  if (!M) return std::nullopt;
  BigInt K = n - 3;
  if (!hypotheses_ok(LemmaId::two_cyc, {{"K", K}, {"M", *M}})) return std::nullopt;
  return make_two_cyc(K, *M);
}

std::optional<LemmaInstance> try_sixteen_cyc2(const TermSource& t, const BigInt& n) {
  if (n < 17) return std::nullopt;
  if (!eq(t.value_at(n - 15), 16) || !eq(t.value_at(n - 13), 7) ||
      !eq(t.value_at(n - 10), 16) || !eq(t.value_at(n - 8), 16) ||
      !eq(t.value_at(n - 6), 10) || !eq(t.value_at(n - 3), 7) ||
      !eq(t.value_at(n - 1), 16))
    return std::nullopt;
  auto lam = exact(t.value_at(n - 11));
  if (!lam || t.value_at(n - 9) != BigVal(*lam) || t.value_at(n - 2) != BigVal(*lam))
    return std::nullopt;
  auto mu2 = exact(t.value_at(n - 14));
  if (!mu2 || t.value_at(n - 4) != BigVal(*mu2)) return std::nullopt;
  auto mu1 = exact(t.value_at(n - 7));
  auto g2 = exact(t.value_at(n - 12));
  auto g3 = exact(t.value_at(n - 5));
  auto g1 = exact(t.value_at(n));
  if (!mu1 || !g1 || !g2 || !g3) return std::nullopt;
  BigInt K = n - 16;
  LemmaParams p = {{"K", K},       {"lambda", *lam}, {"mu1", *mu1}, {"mu2", *mu2},
                   {"gamma1", *g1}, {"gamma2", *g2},  {"gamma3", *g3}};
  if (!hypotheses_ok(LemmaId::sixteen_cyc2, p)) return std::nullopt;
  return make_sixteen_cyc2(K, *lam, *mu1, *mu2, *g1, *g2, *g3);
}

std::optional<LemmaInstance> try_sixteen_cyc1(const TermSource& t, const BigInt& n) {
  if (n < 19) return std::nullopt;
  if (!eq(t.value_at(n), 7) || !eq(t.value_at(n - 16), 7) || !eq(t.value_at(n - 9), 7) ||
      !eq(t.value_at(n - 14), 16) || !eq(t.value_at(n - 12), 16) ||
      !eq(t.value_at(n - 7), 16) || !eq(t.value_at(n - 5), 16) ||
      !eq(t.value_at(n - 3), 25))
    return std::nullopt;
  auto lam = exact(t.value_at(n - 17));
  if (!lam || t.value_at(n - 10) != BigVal(*lam) || t.value_at(n - 1) != BigVal(*lam))
    return std::nullopt;
  auto mu2 = exact(t.value_at(n - 15));
  if (!mu2 || t.value_at(n - 13) != BigVal(*mu2) || t.value_at(n - 8) != BigVal(*mu2) ||
      t.value_at(n - 4) != BigVal(*mu2) || t.value_at(n - 6) != BigVal(2 * *mu2))
    return std::nullopt;
  auto mu1 = exact(t.value_at(n - 11));
  auto g = exact(t.value_at(n - 2));
  if (!mu1 || !g) return std::nullopt;
  BigInt K = n - 18;
  LemmaParams p = {{"K", K}, {"lambda", *lam}, {"mu1", *mu1}, {"mu2", *mu2}, {"gamma", *g}};
  if (!hypotheses_ok(LemmaId::sixteen_cyc1, p)) return std::nullopt;
  return make_sixteen_cyc1(K, *lam, *mu1, *mu2, *g);
}

std::optional<LemmaInstance> try_five_cyc(const TermSource& t, const BigInt& n) {
  if (n < 8) return std::nullopt;
  if (!eq(t.value_at(n), 5) || !eq(t.value_at(n - 3), 3)) return std::nullopt;
  BigInt K = n - 5;
  if (!eq(t.value_at(n - 2), K + 3)) return std::nullopt;
  auto v = exact(t.value_at(n - 4));
  if (!v) return std::nullopt;
  BigInt mu = *v - K;
  if (mu < 1) return std::nullopt;
  if (!eq(t.value_at(n - 1), K + mu + 1)) return std::nullopt;
  if (!eq(t.value_at(1), 1) || !eq(t.value_at(2), 2) || !eq(t.value_at(3), 3))
    return std::nullopt;
  return make_five_cyc(K, mu);
}

std::optional<LemmaInstance> try_seven_cyc(const TermSource& t, const BigInt& n) {
  auto last = exact(t.value_at(n));
  if (!last) return std::nullopt;
  BigInt K = *last + 2;
  if (K < 7 || K + 4 > n) return std::nullopt;
  BigInt L = n - K - 4;
  BigInt diff = K - L;  // = 7c + gamma
  if (diff < 7) return std::nullopt;
  BigInt gamma = diff % 7;
  BigInt c = diff / 7;
  auto lam2 = exact(t.value_at(n - 2));
  auto mu2 = exact(t.value_at(n - 1));
  if (!lam2 || !mu2) return std::nullopt;
  BigInt lambda = *lam2 - 2 * K + 2;
  BigInt mu = *mu2 - 2 * K + 1;
  LemmaParams p = {{"K", K}, {"c", c}, {"gamma", gamma}, {"lambda", lambda}, {"mu", mu}};
  if (!hypotheses_ok(LemmaId::seven_cyc, p)) return std::nullopt;
  if (!eq(t.value_at(K + 1), 6)) return std::nullopt;
  for (BigInt i = 1; i <= K; ++i)
    if (!eq(t.value_at(i), i)) return std::nullopt;
  return make_seven_cyc(K, c, gamma, lambda, mu);
}

}  // namespace

std::optional<LemmaInstance> match_suffix(const TermSource& src) {
  BigInt n = src.source_length();
  if (auto m = try_two_cyc(src, n)) return m;
  if (auto m = try_sixteen_cyc2(src, n)) return m;
  if (auto m = try_sixteen_cyc1(src, n)) return m;
  if (auto m = try_five_cyc(src, n)) return m;
  if (auto m = try_seven_cyc(src, n)) return m;
  return std::nullopt;
}

std::optional<LemmaInstance> match_suffix(const Run& run) {
  RunSource src(run);
  return match_suffix(src);
}

LemmaInstance random_instance(LemmaId id, std::mt19937_64& rng) {
  auto ri = [&rng](std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
  };
  switch (id) {
    case LemmaId::seven_cyc:
      for (int tries = 0; tries < 400; ++tries) {
        BigInt c = ri(1, 6), g = ri(0, 6);
        BigInt K = 7 * c + g + ri(0, 40);
        BigInt lam = -2 * c + ri(4, 30), mu = -c + ri(3, 30);
        if (hypotheses_ok(id, {{"K", K},
                               {"c", c},
                               {"gamma", g},
                               {"lambda", lam},
                               {"mu", mu}}))
          return make_seven_cyc(K, c, g, lam, mu);
      }
      throw std::runtime_error("7cyc sampling failed");
    case LemmaId::two_cyc: {
      BigInt K = ri(1, 40);
      return make_two_cyc(K, K + ri(5, 60));
    }
    case LemmaId::five_cyc:
      return make_five_cyc(ri(3, 40), ri(1, 60));
    case LemmaId::sixteen_cyc1: {
      BigInt K = ri(1, 20), lam = 32 + K + ri(0, 200);
      return make_sixteen_cyc1(K, lam, lam + ri(1, 50), lam + ri(1, 50),
                               lam + ri(1, 50));
    }
    case LemmaId::sixteen_cyc2: {
      BigInt K = ri(1, 20), lam = 32 + K + ri(0, 200);
      return make_sixteen_cyc2(K, lam, lam + ri(1, 50), lam + ri(1, 50),
                               lam + ri(1, 50), lam + ri(1, 50), lam + ri(1, 50));
    }
  }
  throw std::logic_error("bad lemma id");
}

std::int64_t filler_count(const LemmaInstance& instance) {
  switch (instance.id) {
    case LemmaId::seven_cyc: return static_cast<std::int64_t>(instance.param("L"));
    case LemmaId::five_cyc: return static_cast<std::int64_t>(instance.param("K")) - 3;
    default: return static_cast<std::int64_t>(instance.param("K"));
  }
}

}  // namespace bseq
