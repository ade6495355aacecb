#ifndef AKV_INTERPRETER_HPP
#define AKV_INTERPRETER_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "akv/json_io.hpp"
#include "akv/script.hpp"

namespace akv::script {

struct RunOptions {
  std::uint64_t seed = 0;
  bool fail_fast = false;
  std::ostream* out = nullptr;  // destination for print statements; default stdout
};

struct ReportEntry {
  std::string id;  // canonical rendering of the statement, plus sweep bindings
  Json params;
  bool pass = false;
  Json payload;
  double duration_ms = 0.0;
};

struct Report {
  std::vector<ReportEntry> entries;

  bool all_pass() const;
  Json to_json() const;  // {"schema": 1, "pass": ..., "entries": [...]}
  // One line per entry plus a summary, for terminal output.
  std::string summary() const;
};

// Runs the script against fresh engine state. Statements execute in order;
// a sweep body re-executes per parameter value in a child scope. Runtime
// errors become failed entries and execution continues unless fail_fast.
// Deterministic for a fixed (script, options.seed).
Report execute(const Script& s, const RunOptions& options = {});

// Canned suite covering the isometry lemmas (seeds instances each, dims up
// to dims_max, triples capped at 3) and the exact bundle-calculus identities
// for Morita ranks 1..8 and genus 0..3.
Report selftest(int seeds, int dims_max, std::uint64_t seed = 0);

// Pairing identity over n in 1..n_max and every genus in the list, with
// fully generic Chern generators.
Report sweep_pairing(int n_max, const std::vector<Rational>& genus_list);

}  // namespace akv::script

#endif
