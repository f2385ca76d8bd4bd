#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bseq/analysis.hpp"
#include "bseq/bigint.hpp"
#include "bseq/recurrence.hpp"

namespace bseq {

// OEIS b-file: optional '#' comment lines, then "index value" per line,
// indices consecutive, values in decimal whatever their size.
struct BFile {
  std::string anum;  // optional label, not stored in the file body
  std::vector<std::string> comments;  // leading comment lines, '#' included
  std::int64_t first_index = 1;
  std::vector<BigInt> values;

  std::size_t size() const { return values.size(); }
};

BFile read_bfile(std::istream& in);
BFile read_bfile_path(const std::string& path);
void write_bfile(const BFile& bf, std::ostream& out);
void write_bfile_path(const BFile& bf, const std::string& path);

// the sequence an A-number denotes: (N, variant), generated from scratch
struct OeisMapping {
  std::string anum;
  std::int64_t n;
  Variant variant;
};
const std::vector<OeisMapping>& oeis_table();
std::optional<OeisMapping> oeis_lookup(const std::string& anum);

struct OeisReport {
  std::string anum;
  std::uint64_t compared = 0;
  std::uint64_t mismatch_count = 0;
  std::optional<std::int64_t> first_mismatch_index;
  std::string message;
  bool ok() const { return mismatch_count == 0 && message.empty(); }
};

OeisReport oeis_check(const std::string& anum, const BFile& bfile);
OeisReport oeis_check_path(const std::string& anum, const std::string& path);

struct RunConfig {
  std::string recurrence = "B";  // name, or comma-separated shift list
  std::int64_t n = 0;
  Variant variant = Variant::plain;
  std::uint64_t max_terms = 1'000'000;
  std::string format = "bfile";  // bfile | csv | json
  std::uint64_t seed = 0;

  RecurrenceSpec spec() const;
  InitialConditions ics() const;
  std::string to_json() const;
  static RunConfig from_json(const std::string& text);
};

// run + status trailer in the configured format; returns the run's liveness
Liveness emit_run(const RunConfig& config, std::ostream& out);

// two-column CSV (index, value), plus a bit-length column when requested;
// early death/end truncates the file and leaves a trailer comment
void plot_data(std::int64_t n, Variant variant, std::uint64_t terms,
               std::ostream& out, bool bit_length_column = false);

}  // namespace bseq
