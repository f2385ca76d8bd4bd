#include "bseq/interface.hpp"

#include <json.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace bseq {

namespace {

using json = nlohmann::ordered_json;

std::string liveness_name(Liveness l) {
  switch (l) {
    case Liveness::alive: return "alive";
    case Liveness::dead: return "died";
    case Liveness::ended: return "ended";
  }
  return "?";
}

std::uint64_t bit_length(const BigInt& v) {
  if (v == 0) return 0;
  return boost::multiprecision::msb(boost::multiprecision::abs(v)) + 1;
}

}  // namespace

BFile read_bfile(std::istream& in) {
  BFile bf;
  std::string line;
  bool body = false;
  std::int64_t expect = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (!body) bf.comments.push_back(line);
      continue;
    }
    body = true;
    std::istringstream fields(line);
    std::int64_t index;
    std::string value;
    if (!(fields >> index >> value))
      throw std::runtime_error("malformed b-file line: " + line);
    if (bf.values.empty()) {
      bf.first_index = index;
    } else if (index != expect) {
      throw std::runtime_error("b-file indices not consecutive at " + std::to_string(index));
    }
    expect = index + 1;
    bf.values.emplace_back(value);
  }
  return bf;
}

BFile read_bfile_path(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  BFile bf = read_bfile(in);
  return bf;
}

void write_bfile(const BFile& bf, std::ostream& out) {
  for (const auto& c : bf.comments) out << c << '\n';
  std::int64_t index = bf.first_index;
  for (const auto& v : bf.values) out << index++ << ' ' << v.str() << '\n';
}

void write_bfile_path(const BFile& bf, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  write_bfile(bf, out);
}

const std::vector<OeisMapping>& oeis_table() {
  static const std::vector<OeisMapping> table = {
      {"A373227", 7, Variant::plain},   {"A373228", 8, Variant::plain},
      {"A373229", 9, Variant::plain},   {"A373230", 10, Variant::plain},
      {"A373231", 11, Variant::plain},  {"A373232", 12, Variant::plain},
      {"A373233", 13, Variant::plain},  {"A373234", 196, Variant::bar},
      {"A373235", 2087, Variant::bar},  {"A373236", 3201, Variant::bar},
      {"A373237", 4315, Variant::bar},  {"A373238", 200, Variant::bar},
      {"A274058", 32478, Variant::bar}, {"A373239", 118, Variant::bar},
      {"A283887", 20830, Variant::bar},
  };
  return table;
}

std::optional<OeisMapping> oeis_lookup(const std::string& anum) {
  for (const auto& m : oeis_table())
    if (m.anum == anum) return m;
  return std::nullopt;
}

OeisReport oeis_check(const std::string& anum, const BFile& bfile) {
  OeisReport rep;
  rep.anum = anum;
  auto mapping = oeis_lookup(anum);
  if (!mapping) {
    rep.message = "unknown A-number";
    return rep;
  }
  if (bfile.values.empty()) {
    rep.message = "nothing to compare";
    return rep;
  }
  if (bfile.first_index < 1) {
    rep.message = "b-file starts before index 1";
    return rep;
  }
  std::int64_t last = bfile.first_index + static_cast<std::int64_t>(bfile.size()) - 1;
  InitialConditions ics =
      InitialConditions::linear(mapping->n, mapping->variant == Variant::bar);
  Run run = generate(RecurrenceSpec::b(), ics,
                     std::max<std::uint64_t>(last, ics.values.size()));
  if (run.length() < static_cast<std::uint64_t>(last)) {
    rep.message = "sequence " + liveness_name(run.liveness()) + " at " +
                  std::to_string(run.undefined_index()) + ", before b-file end " +
                  std::to_string(last);
    return rep;
  }
  for (std::size_t i = 0; i < bfile.size(); ++i) {
    std::int64_t index = bfile.first_index + static_cast<std::int64_t>(i);
    if (run.at(index) != bfile.values[i]) {
      if (rep.mismatch_count == 0) rep.first_mismatch_index = index;
      ++rep.mismatch_count;
    }
    ++rep.compared;
  }
  return rep;
}

OeisReport oeis_check_path(const std::string& anum, const std::string& path) {
  return oeis_check(anum, read_bfile_path(path));
}

RecurrenceSpec RunConfig::spec() const {
  if (recurrence == "B" || recurrence == "b") return RecurrenceSpec::b();
  if (recurrence == "Q" || recurrence == "q") return RecurrenceSpec::q();
  RecurrenceSpec s{{}, recurrence};
  std::istringstream in(recurrence);
  std::string tok;
  while (std::getline(in, tok, ','))
    s.shifts.push_back(std::stoi(tok));
  s.validate();
  return s;
}

InitialConditions RunConfig::ics() const {
  return InitialConditions::linear(n, variant == Variant::bar);
}

std::string RunConfig::to_json() const {
  json j;
  j["schema"] = 1;
  j["recurrence"] = recurrence;
  j["n"] = n;
  j["variant"] = variant == Variant::bar ? "bar" : "plain";
  j["max_terms"] = max_terms;
  j["format"] = format;
  j["seed"] = seed;
  return j.dump();
}

RunConfig RunConfig::from_json(const std::string& text) {
  json j = json::parse(text);
  RunConfig c;
  c.recurrence = j.value("recurrence", "B");
  c.n = j.at("n").get<std::int64_t>();
  c.variant = j.value("variant", "plain") == "bar" ? Variant::bar : Variant::plain;
  c.max_terms = j.value("max_terms", std::uint64_t{1'000'000});
  c.format = j.value("format", "bfile");
  c.seed = j.value("seed", std::uint64_t{0});
  return c;
}

Liveness emit_run(const RunConfig& config, std::ostream& out) {
  if (config.n < 1) throw std::invalid_argument("N must be positive");
  InitialConditions ics = config.ics();
  // max_terms is a row cap; the engine always materializes the full ICs
  std::uint64_t floor = ics.values.size();
  Run run = generate(config.spec(), ics, std::max(config.max_terms, floor));
  std::uint64_t rows = std::min(run.length(), config.max_terms);

  auto trailer = [&]() -> std::string {
    if (run.alive() || rows < run.length()) return "alive";
    return liveness_name(run.liveness()) + " at " + std::to_string(run.undefined_index());
  };

  if (config.format == "bfile") {
    for (std::uint64_t i = 1; i <= rows; ++i)
      out << i << ' ' << run.at(static_cast<std::int64_t>(i)).str() << '\n';
    out << "# " << trailer() << '\n';
  } else if (config.format == "csv") {
    out << "index,value\n";
    for (std::uint64_t i = 1; i <= rows; ++i)
      out << i << ',' << run.at(static_cast<std::int64_t>(i)).str() << '\n';
    out << "# " << trailer() << '\n';
  } else if (config.format == "json") {
    json j;
    j["schema"] = 1;
    j["config"] = json::parse(config.to_json());
    json terms = json::array();
    for (std::uint64_t i = 1; i <= rows; ++i)
      terms.push_back(run.at(static_cast<std::int64_t>(i)).str());
    j["terms"] = std::move(terms);
    bool cut = rows < run.length();
    j["status"]["liveness"] = cut ? "alive" : liveness_name(run.liveness());
    if (!run.alive() && !cut) j["status"]["index"] = run.undefined_index();
    out << j.dump(2) << '\n';
  } else {
    throw std::invalid_argument("unknown format: " + config.format);
  }
  return run.liveness();
}

void plot_data(std::int64_t n, Variant variant, std::uint64_t terms, std::ostream& out,
               bool bit_length_column) {
  InitialConditions ics = InitialConditions::linear(n, variant == Variant::bar);
  Run run = generate(RecurrenceSpec::b(), ics,
                     std::max<std::uint64_t>(terms, ics.values.size()));
  std::uint64_t rows = std::min(run.length(), terms);
  out << (bit_length_column ? "index,value,bits\n" : "index,value\n");
  for (std::uint64_t i = 1; i <= rows; ++i) {
    BigInt v = run.at(static_cast<std::int64_t>(i));
    out << i << ',' << v.str();
    if (bit_length_column) out << ',' << bit_length(v);
    out << '\n';
  }
  if (!run.alive())
    out << "# " << liveness_name(run.liveness()) << " at " << run.undefined_index() << '\n';
}

}  // namespace bseq
