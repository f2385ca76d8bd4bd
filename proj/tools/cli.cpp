// command-line front end: generate, symbolic, verify, classify, oeis, plot-data
#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "bseq/analysis.hpp"
#include "bseq/interface.hpp"

using namespace bseq;

namespace {

// exit codes per the contract
constexpr int kOk = 0, kMismatch = 1, kUsage = 2, kResource = 3;

std::int64_t parse_int(const std::string& raw) {
  std::string s;
  for (char ch : raw)
    if (ch != '_') s += ch;
  std::size_t pos = 0;
  std::int64_t v = std::stoll(s, &pos);
  if (pos != s.size()) throw CLI::ValidationError("not an integer: " + raw);
  return v;
}

// CLI11 option target that tolerates underscores (10_000_000)
void add_int(CLI::App* app, const std::string& flag, std::int64_t& out,
             const std::string& desc, bool required = false) {
  auto* opt = app->add_option_function<std::string>(
      flag, [&out](const std::string& raw) { out = parse_int(raw); }, desc);
  if (required) opt->required();
}

Variant parse_variant(const std::string& s) {
  if (s == "plain") return Variant::plain;
  if (s == "bar") return Variant::bar;
  throw CLI::ValidationError("variant must be plain or bar");
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot open " + path);
  return file;
}

std::string form_str(const SymbolicTerm& t) { return t.value.str(); }

int cmd_symbolic(Variant variant, std::int64_t count, const std::string& format,
                 std::ostream& out) {
  SymbolicRun run = symbolic_expand(variant, count);
  if (format == "json") {
    out << "{\"schema\":1,\"variant\":\"" << (variant == Variant::bar ? "bar" : "plain")
        << "\",\"terms\":[";
    for (std::size_t i = 0; i < run.terms.size(); ++i) {
      const auto& t = run.terms[i];
      out << (i ? "," : "") << "{\"offset\":" << t.index_offset << ",\"form\":\""
          << form_str(t) << "\",\"bound\":" << t.local_bound.lower_bound << "}";
    }
    out << "]}" << '\n';
  } else {
    const char* sep = format == "csv" ? "," : " | ";
    if (format == "csv") out << "offset,form,bound\n";
    for (const auto& t : run.terms)
      out << "N+" << t.index_offset << sep << form_str(t) << sep << "N≥"
          << t.local_bound.lower_bound << '\n';
  }
  if (run.terminal == SymbolicRun::Terminal::death)
    out << "# dies at N+" << run.terminal_offset << " for N≥"
        << run.terminal_bound.lower_bound << '\n';
  else if (run.terminal == SymbolicRun::Terminal::end)
    out << "# ends at N+" << run.terminal_offset << " for N≥"
        << run.terminal_bound.lower_bound << '\n';
  return kOk;
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& raw) {
  auto dots = raw.find("..");
  if (dots == std::string::npos) {
    std::int64_t v = parse_int(raw);
    return {v, v};
  }
  return {parse_int(raw.substr(0, dots)), parse_int(raw.substr(dots + 2))};
}

int report_line(const TheoremReport& rep, const char* label) {
  std::cout << label << " N=" << rep.n_param << ": " << (rep.match ? "pass" : "FAIL")
            << " (expected " << rep.expected << "; observed " << rep.observed << ")";
  if (!rep.details.empty()) std::cout << " [" << rep.details << "]";
  std::cout << '\n';
  return rep.match ? kOk : kMismatch;
}

// draws a hypothesis-satisfying parameter set, builds the template's initial
// conditions with random fillers, and checks the concrete run term by term
bool lemma_trial(LemmaId id, std::mt19937_64& rng) {
  auto ri = [&](std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
  };
  LemmaInstance inst = random_instance(id, rng);
  std::vector<std::int64_t> fillers;
  for (std::int64_t i = 0; i < filler_count(inst); ++i) fillers.push_back(ri(1, 1000));

  Run run(RecurrenceSpec::b(), build_initial_conditions(inst, fillers));
  std::optional<BigInt> horizon;
  if (!inst.extent) horizon = inst.start + 80;  // 2cyc: a few dozen doublings
  BigInt last = inst.extent ? *inst.extent : *horizon;
  while (run.alive() && BigInt(run.length()) < last) run.step();
  PatternReport rep = verify_pattern(inst, run, horizon);
  if (!rep.ok() || rep.partial) {
    std::cout << "  counterexample: " << inst.to_json() << '\n';
    for (std::size_t i = 0; i < rep.mismatches.size() && i < 3; ++i)
      std::cout << "    at " << rep.mismatches[i].index << " expected "
                << rep.mismatches[i].expected << " got " << rep.mismatches[i].actual
                << '\n';
    if (rep.partial)
      std::cout << "    run stopped at " << run.length() << " (undefined at "
                << run.undefined_index() << ")\n";
    return false;
  }
  return true;
}

int cmd_verify_sporadic(std::int64_t n, std::uint64_t budget) {
  ClassifyOptions opts;
  opts.budget = budget;
  BehaviorClass cls = classify_bar(n, opts);
  std::string expected;
  bool ok = false;
  const std::vector<std::int64_t> doubling = {81,   182,  429,   822,  1892,
                                              2789, 7292, 23511, 25163};
  if (std::find(doubling.begin(), doubling.end(), n) != doubling.end()) {
    expected = "immortal (doubling)";
    ok = cls.kind == BehaviorClass::Kind::immortal_doubling;
  } else if (n == 193 || n == 3442) {
    expected = "quasi-immortal (5cyc chunks)";
    ok = cls.kind == BehaviorClass::Kind::quasi_immortal_5cyc;
  } else if (n == 20830) {
    BigInt total = BigInt(84975) << 560362;
    total += 31;
    expected = "ends; total length 84975*2^560362+31";
    ok = cls.kind == BehaviorClass::Kind::chunked_mortal && cls.value == total;
  } else {
    expected = "ends or dies";
    ok = cls.kind == BehaviorClass::Kind::died_at ||
         cls.kind == BehaviorClass::Kind::ended_at;
  }
  std::cout << "sporadic N=" << n << ": " << (ok ? "pass" : "FAIL") << " (expected "
            << expected << "; observed " << cls.str() << ")\n";
  return ok ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nested B-recurrence toolkit"};
  app.require_subcommand(1);

  std::int64_t n = 0, terms = 0, max_terms = -1, budget = 1'000'000;
  std::int64_t trials = 20, seed = 0;
  std::string variant_s = "plain", format = "bfile", sym_format = "table";
  std::string out_path, range_s, anum, bfile_path;
  bool bits = false, fetch = false;

  auto* gen = app.add_subcommand("generate", "generate a run and print it");
  add_int(gen, "--n", n, "initial-condition parameter N", true);
  gen->add_option("--variant", variant_s, "plain|bar");
  add_int(gen, "--max-terms", max_terms, "term budget (default 1_000_000)");
  gen->add_option("--format", format, "bfile|csv|json");
  gen->add_option("--out", out_path, "output path (default stdout)");

  auto* sym = app.add_subcommand("symbolic", "symbolic expansion table");
  sym->add_option("--variant", variant_s, "plain|bar");
  add_int(sym, "--terms", terms, "number of expansion steps", true);
  sym->add_option("--format", sym_format, "table|csv|json");
  sym->add_option("--out", out_path, "output path (default stdout)");

  auto* ver = app.add_subcommand("verify", "check the headline claims about the family");
  ver->require_subcommand(1);
  auto* vt1 = ver->add_subcommand("theorem1", "death of the plain sequences");
  vt1->add_option("--range", range_s, "N range a..b")->default_val("3..200");
  add_int(vt1, "--budget", budget, "term budget for the surviving N");
  auto* vt2 = ver->add_subcommand("theorem2", "end of the bar sequences");
  vt2->add_option("--range", range_s, "N range a..b")->default_val("72..200");
  std::string lemma_id_s;
  auto* vl = ver->add_subcommand("lemma", "randomized template check");
  vl->add_option("id", lemma_id_s, "7cyc|2cyc|5cyc|16cyc1|16cyc2")->required();
  add_int(vl, "--trials", trials, "number of random instances");
  add_int(vl, "--seed", seed, "RNG seed");
  auto* vs = ver->add_subcommand("sporadic", "the individually-studied N");
  add_int(vs, "--n", n, "sporadic N value", true);
  add_int(vs, "--budget", budget, "direct-generation budget");

  auto* cls = app.add_subcommand("classify", "behavior class of a bar run");
  add_int(cls, "--n", n, "initial-condition parameter N", true);
  add_int(cls, "--budget", budget, "direct-generation budget");

  auto* oe = app.add_subcommand("oeis", "cross-check against an OEIS b-file");
  oe->add_option("--anum", anum, "A-number")->required();
  oe->add_option("--file", bfile_path, "b-file path (default fixture dir)");
  oe->add_flag("--fetch", fetch, "allow network fetch (off by default)");

  auto* pd = app.add_subcommand("plot-data", "CSV dump for plotting");
  add_int(pd, "--n", n, "initial-condition parameter N", true);
  pd->add_option("--variant", variant_s, "plain|bar");
  add_int(pd, "--terms", terms, "row count", true);
  pd->add_flag("--bits", bits, "add a bit-length column");
  pd->add_option("--out", out_path, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    std::ofstream file;
    if (gen->parsed()) {
      RunConfig cfg;
      cfg.n = n;
      cfg.variant = parse_variant(variant_s);
      bool explicit_budget = max_terms >= 0;
      cfg.max_terms = explicit_budget ? static_cast<std::uint64_t>(max_terms) : 1'000'000;
      cfg.format = format;
      Liveness lv = emit_run(cfg, open_out(file, out_path));
      // hitting the implicit budget means the answer was cut short
      return (lv == Liveness::alive && !explicit_budget) ? kResource : kOk;
    }
    if (sym->parsed())
      return cmd_symbolic(parse_variant(variant_s), terms, sym_format,
                          open_out(file, out_path));
    if (vt1->parsed() || vt2->parsed()) {
      auto [lo, hi] = parse_range(range_s);
      int rc = kOk;
      for (std::int64_t i = lo; i <= hi; ++i) {
        TheoremReport rep = vt1->parsed()
                                ? verify_theorem1(i, static_cast<std::uint64_t>(budget))
                                : verify_theorem2(i);
        rc |= report_line(rep, vt1->parsed() ? "theorem1" : "theorem2");
      }
      return rc;
    }
    if (vl->parsed()) {
      auto id = lemma_from_name(lemma_id_s);
      if (!id) {
        std::cerr << "unknown lemma id: " << lemma_id_s << '\n';
        return kUsage;
      }
      std::mt19937_64 rng(static_cast<std::uint64_t>(seed));
      std::int64_t failures = 0;
      for (std::int64_t t = 0; t < trials; ++t)
        if (!lemma_trial(*id, rng)) ++failures;
      std::cout << "lemma " << lemma_id_s << ": " << (trials - failures) << "/" << trials
                << " instances verified\n";
      return failures == 0 ? kOk : kMismatch;
    }
    if (vs->parsed()) return cmd_verify_sporadic(n, static_cast<std::uint64_t>(budget));
    if (cls->parsed()) {
      ClassifyOptions opts;
      opts.budget = static_cast<std::uint64_t>(budget);
      BehaviorClass bc = classify_bar(n, opts);
      std::cout << "N=" << n << ": " << bc.str() << '\n';
      if (bc.instance) std::cout << bc.instance->to_json() << '\n';
      return kOk;
    }
    if (oe->parsed()) {
      std::string path = bfile_path;
      if (path.empty()) {
        const char* dir = std::getenv("BSEQ_FIXTURES");
        std::string base = dir ? dir : "data/oeis";
        path = base + "/b" + anum.substr(1) + ".txt";
      }
      if (fetch) {
        std::cout << anum << ": fetch skipped (no network in this build)\n";
        return kOk;  // soft error by contract
      }
      OeisReport rep = oeis_check_path(anum, path);
      if (!rep.message.empty()) {
        std::cout << rep.anum << ": " << rep.message << '\n';
        return rep.message == "nothing to compare" ? kOk : kMismatch;
      }
      std::cout << rep.anum << ": compared " << rep.compared << " terms, "
                << rep.mismatch_count << " mismatches\n";
      return rep.ok() ? kOk : kMismatch;
    }
    if (pd->parsed()) {
      plot_data(n, parse_variant(variant_s), static_cast<std::uint64_t>(terms),
                open_out(file, out_path), bits);
      return kOk;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  } catch (const std::overflow_error& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kResource;
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return kMismatch;
  }
  return kUsage;
}
