#include "beampaco/dataset.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>
#include <vector>

#include "beampaco/rng.hpp"

namespace beampaco {

namespace {

constexpr const char* kFieldNames[] = {"id", "name", "epoch", "a", "e", "i", "RAAN", "argp", "M"};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  if (line.find(',') != std::string::npos) {
    std::stringstream ss(line);
    std::string f;
    while (std::getline(ss, f, ',')) fields.push_back(trim(f));
    return fields;
  }
  std::istringstream ss(line);
  std::vector<std::string> tokens;
  std::string t;
  while (ss >> t) tokens.push_back(t);
  if (tokens.size() < 9) return tokens;
  fields.push_back(tokens.front());
  std::string name;
  for (std::size_t k = 1; k + 7 < tokens.size(); ++k) {
    if (!name.empty()) name += ' ';
    name += tokens[k];
  }
  fields.push_back(name);
  fields.insert(fields.end(), tokens.end() - 7, tokens.end());
  return fields;
}

bool parse_long(const std::string& s, long& out) {
  const auto* end = s.data() + s.size();
  const auto res = std::from_chars(s.data(), end, out);
  return res.ec == std::errc() && res.ptr == end;
}

double parse_double(const std::string& s, std::size_t line_no, std::size_t field) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size() || !std::isfinite(v)) {
    throw DatasetError("line " + std::to_string(line_no) + ", field '" + kFieldNames[field] +
                       "': not a number: '" + s + "'");
  }
  return v;
}

}  // namespace

AsteroidDataset parse_dataset(std::istream& in, double mu) {
  AsteroidDataset ds;
  ds.mu = mu;
  std::set<long> seen;
  std::string raw;
  std::size_t line_no = 0;
  bool first_data_line = true;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto fields = split_fields(line);
    long id = 0;
    const bool id_ok = !fields.empty() && parse_long(fields[0], id);
    if (first_data_line && !id_ok) {
      first_data_line = false;
      continue;  // header
    }
    first_data_line = false;
    if (fields.size() != 9) {
      throw DatasetError("line " + std::to_string(line_no) + ": expected 9 fields, found " +
                         std::to_string(fields.size()));
    }
    if (!id_ok || id < 0) {
      throw DatasetError("line " + std::to_string(line_no) + ", field 'id': not a non-negative integer: '" +
                         fields[0] + "'");
    }
    if (!seen.insert(id).second) {
      throw DatasetError("line " + std::to_string(line_no) + ", field 'id': duplicate id " + std::to_string(id));
    }

    double v[9] = {};
    for (std::size_t f = 2; f < 9; ++f) v[f] = parse_double(fields[f], line_no, f);
    if (!(v[3] > 0.0)) {
      throw DatasetError("line " + std::to_string(line_no) + ", field 'a': semi-major axis must be positive");
    }
    if (!(v[4] >= 0.0 && v[4] < 1.0)) {
      throw DatasetError("line " + std::to_string(line_no) + ", field 'e': body " + std::to_string(id) +
                         " rejected, only elliptic orbits (0 <= e < 1) are supported");
    }

    OrbitalElements el;
    el.body_id = static_cast<int>(ds.bodies.size());
    el.epoch_ref = v[2];
    el.semi_major_axis = v[3] * kAu;
    el.eccentricity = v[4];
    el.inclination = v[5] * kDegree;
    el.raan = wrap_two_pi(v[6] * kDegree);
    el.arg_periapsis = wrap_two_pi(v[7] * kDegree);
    el.mean_anomaly_ref = wrap_two_pi(v[8] * kDegree);
    ds.bodies.push_back(el);
    ds.names.push_back(fields[1]);
    ds.external_ids.push_back(id);
  }
  return ds;
}

AsteroidDataset load_dataset(const std::string& path, double mu) {
  std::ifstream in(path);
  if (!in) throw DatasetError("cannot open dataset '" + path + "'");
  return parse_dataset(in, mu);
}

void write_dataset(std::ostream& out, const AsteroidDataset& dataset) {
  out << "# id, name, epoch_mjd, a_au, e, i_deg, raan_deg, argp_deg, m_deg\n";
  out << std::setprecision(17);
  for (std::size_t k = 0; k < dataset.size(); ++k) {
    const auto& el = dataset.bodies[k];
    out << dataset.external_ids[k] << ", " << dataset.names[k] << ", " << el.epoch_ref << ", "
        << el.semi_major_axis / kAu << ", " << el.eccentricity << ", " << el.inclination / kDegree << ", "
        << el.raan / kDegree << ", " << el.arg_periapsis / kDegree << ", " << el.mean_anomaly_ref / kDegree
        << '\n';
  }
}

void BeltRanges::validate() const {
  auto check = [](double lo, double hi, const char* what) {
    if (!std::isfinite(lo) || !std::isfinite(hi) || lo > hi) {
      throw std::invalid_argument(std::string("synthetic belt: invalid range for ") + what);
    }
  };
  check(a_min, a_max, "a");
  check(e_min, e_max, "e");
  check(i_min, i_max, "i");
  check(raan_min, raan_max, "RAAN");
  check(argp_min, argp_max, "argp");
  check(m_min, m_max, "M");
  if (!(a_min > 0.0)) throw std::invalid_argument("synthetic belt: a must be positive");
  if (e_min < 0.0 || !(e_max < 1.0)) throw std::invalid_argument("synthetic belt: e must lie in [0, 1)");
  if (a_min == a_max && e_min == e_max && i_min == i_max && raan_min == raan_max && argp_min == argp_max &&
      m_min == m_max) {
    throw std::invalid_argument("synthetic belt: all ranges are degenerate");
  }
}

AsteroidDataset generate_synthetic_belt(std::size_t count, std::uint64_t seed, const BeltRanges& ranges, double mu) {
  if (count < 2) throw std::invalid_argument("synthetic belt needs at least two bodies");
  ranges.validate();
  Rng rng(seed);
  AsteroidDataset ds;
  ds.mu = mu;
  ds.bodies.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    OrbitalElements el;
    el.body_id = static_cast<int>(k);
    el.epoch_ref = ranges.epoch;
    el.semi_major_axis = rng.uniform(ranges.a_min, ranges.a_max) * kAu;
    el.eccentricity = rng.uniform(ranges.e_min, ranges.e_max);
    el.inclination = rng.uniform(ranges.i_min, ranges.i_max) * kDegree;
    el.raan = wrap_two_pi(rng.uniform(ranges.raan_min, ranges.raan_max) * kDegree);
    el.arg_periapsis = wrap_two_pi(rng.uniform(ranges.argp_min, ranges.argp_max) * kDegree);
    el.mean_anomaly_ref = wrap_two_pi(rng.uniform(ranges.m_min, ranges.m_max) * kDegree);
    ds.bodies.push_back(el);
    char name[32];
    std::snprintf(name, sizeof name, "SYN-%04zu", k);
    ds.names.emplace_back(name);
    ds.external_ids.push_back(static_cast<long>(k));
  }
  return ds;
}

}  // namespace beampaco
