#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "ppc/problem.hpp"
#include "ppc/types.hpp"

namespace ppc {

/// Non-empty register entry (alpha, beta, gamma); `event` is the decoded index, kept for auditing.
struct RegisterRecord {
  std::uint32_t alpha = 0;  // l of the event
  std::uint32_t beta = 0;   // 1-based position in the pivot's bucket for that l
  std::uint64_t gamma = 0;  // 1-based extension label
  std::uint32_t event = 0;

  bool operator==(const RegisterRecord&) const = default;
};

/// One step: the pivot, the tape value it received, and the record if the step hit a violation.
struct RegisterEntry {
  VarId var = 0;
  Color value = kUncolored;
  std::optional<RegisterRecord> record;

  bool operator==(const RegisterEntry&) const = default;
};

struct RunRegister {
  std::uint64_t seed = 0;
  std::vector<RegisterEntry> entries;
  /// Values drawn from each variable's tape, in draw order.
  std::vector<std::vector<Color>> tapes;
  /// Configuration at halt or stop; kUncolored marks the unassigned variables.
  std::vector<Color> final_config;
};

enum class RunStatus { Success, Exhausted };

struct RunResult {
  RunStatus status = RunStatus::Exhausted;
  std::vector<Color> assignment;
  RunRegister reg;
  std::uint64_t steps = 0;
  std::uint64_t violations = 0;
};

struct RunOptions {
  std::uint64_t seed = 0;
  std::uint64_t max_steps = 10'000'000;
  /// Called after every step with the step number (1-based) and the current configuration.
  std::function<void(std::uint64_t, std::span<const Color>)> on_step;
};

/**
 * Entropy-compression resampling.
 *
 * Each step assigns the next tape value to the smallest-index unassigned
 * variable. If that completes one or more violated events, the one with
 * the lowest index is taken: its free set for this pivot is reset and
 * (l, bucket position, extension label) is appended to the register.
 * Success is re-verified by a scan of all events before returning.
 */
RunResult run(const ProblemInstance& instance, const RunOptions& options);

struct DecodedStep {
  VarId var = 0;
  Color color = kUncolored;
  std::optional<std::uint32_t> event;
};

struct History {
  std::vector<DecodedStep> steps;
  std::vector<std::vector<Color>> tapes;
};

/**
 * Rebuilds the run from the (alpha, beta, gamma) records and the final
 * configuration alone; the var / value / event fields of the entries are
 * not read. Throws DecodeError naming the first inconsistent step.
 */
History decode(const ProblemInstance& instance, const RunRegister& reg);

/// Uncolored sets X_1..X_t from the record sequence only; visit(step, uncolored flags).
void replay_uncolored(const ProblemInstance& instance, const RunRegister& reg,
                      const std::function<void(std::uint64_t, const std::vector<bool>&)>& visit);

/// True when the decoded history reproduces the pivots, tape values and events stored in the register.
bool matches(const RunRegister& reg, const History& history);

// Register JSONL: one record per step; ids in "var" are instance labels.
void write_register_jsonl(const ProblemInstance& instance, const RunRegister& reg, std::ostream& out);
/// Parses the step records; final_config is left empty. Throws ParseError.
RunRegister read_register_jsonl(const ProblemInstance& instance, std::istream& in);

}  // namespace ppc
