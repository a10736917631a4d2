#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "beampaco/mission.hpp"

namespace beampaco {

enum class EventKind { leg_optimized, solution_found, generation_end };

std::string to_string(EventKind kind);
EventKind event_kind_from_string(const std::string& name);

/// One entry of a run's event stream, stamped with the number of legs
/// optimized so far.
///
/// leg_optimized: `sequence` is the parent's visit sequence plus the target;
///   `feasible` is false when no leg was found or the extension was pruned,
///   and `objectives` is meaningful only when feasible.
/// solution_found: a final-beam trajectory handed to the archive.
/// generation_end: `sequence` empty; `generation` is the finished one.
struct RunEvent {
  std::uint64_t leg_count = 0;
  EventKind kind = EventKind::leg_optimized;
  int generation = 0;
  std::vector<int> sequence;
  bool feasible = false;
  Objectives objectives;

  friend bool operator==(const RunEvent&, const RunEvent&) = default;
};

struct RunLog {
  std::vector<RunEvent> events;

  friend bool operator==(const RunLog&, const RunLog&) = default;
};

/// Line-delimited JSON, one event per line. Doubles are written with
/// round-trip precision, so read_run_log(write_run_log(x)) == x.
void write_run_log(std::ostream& out, const RunLog& log);
RunLog read_run_log(std::istream& in);
void save_run_log(const std::string& path, const RunLog& log);
RunLog load_run_log(const std::string& path);

}  // namespace beampaco
