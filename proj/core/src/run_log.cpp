#include "beampaco/run_log.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace beampaco {

using nlohmann::json;

std::string to_string(EventKind kind) {
  switch (kind) {
    case EventKind::leg_optimized: return "leg_optimized";
    case EventKind::solution_found: return "solution_found";
    case EventKind::generation_end: return "generation_end";
  }
  return "unknown";
}

EventKind event_kind_from_string(const std::string& name) {
  if (name == "leg_optimized") return EventKind::leg_optimized;
  if (name == "solution_found") return EventKind::solution_found;
  if (name == "generation_end") return EventKind::generation_end;
  throw std::invalid_argument("unknown run-log event kind '" + name + "'");
}

void write_run_log(std::ostream& out, const RunLog& log) {
  for (const auto& e : log.events) {
    json j;
    j["legs"] = e.leg_count;
    j["event"] = to_string(e.kind);
    j["gen"] = e.generation;
    if (e.kind != EventKind::generation_end) {
      j["seq"] = e.sequence;
      j["feasible"] = e.feasible;
      if (e.feasible) {
        j["score"] = e.objectives.score;
        j["mass"] = e.objectives.mass_used;
        j["time"] = e.objectives.time_used;
      }
    }
    out << j.dump() << '\n';
  }
}

RunLog read_run_log(std::istream& in) {
  RunLog log;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      const json j = json::parse(line);
      RunEvent e;
      e.leg_count = j.at("legs").get<std::uint64_t>();
      e.kind = event_kind_from_string(j.at("event").get<std::string>());
      e.generation = j.value("gen", 0);
      if (j.contains("seq")) e.sequence = j.at("seq").get<std::vector<int>>();
      e.feasible = j.value("feasible", false);
      if (e.feasible) {
        e.objectives.score = j.at("score").get<int>();
        e.objectives.mass_used = j.at("mass").get<double>();
        e.objectives.time_used = j.at("time").get<double>();
      }
      log.events.push_back(std::move(e));
    } catch (const std::exception& ex) {
      throw std::runtime_error("run log line " + std::to_string(line_no) + ": " + ex.what());
    }
  }
  return log;
}

void save_run_log(const std::string& path, const RunLog& log) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write run log '" + path + "'");
  write_run_log(out, log);
}

RunLog load_run_log(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read run log '" + path + "'");
  return read_run_log(in);
}

}  // namespace beampaco
