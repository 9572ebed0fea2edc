#pragma once

// The coxar command line: parse a JobSpec, run one command, render it.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace coxar::cli {

enum class Format { Json, Tsv, Dot };

struct JobSpec {
  std::string dynkin;                  // "A5", "D4", "E6"
  std::string command;                 // ihat, phi, euler, w0, compatible, ar, verify
  std::optional<std::string> coxeter;  // word "1 2 3" or orientation "1>2 2>3"
  std::optional<std::string> pi;       // witness word in the reference reflections
  std::optional<Format> format;        // json by default, tsv for verify
  std::uint64_t seed = 1;
  std::optional<std::string> out;
  std::optional<int> window;           // ZI radius drawn around the AR quiver
  std::optional<std::string> perturb;  // verify only
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerification = 1;
inline constexpr int kExitUsage = 2;

struct Result {
  int exit_code = kExitOk;
  std::string text;
};

/// Runs a parsed job. Throws std::invalid_argument for bad input and
/// InvariantError when a cross-check fails.
Result execute(const JobSpec& spec);

/// Full command line, argv[0] included. Writes the rendered result to `out`
/// (or to --out) and diagnostics to `err`; returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coxar::cli
