#pragma once

#include <cstdint>
#include <istream>
#include <stdexcept>
#include <string>

#include "beampaco/ephemeris.hpp"

namespace beampaco {

/// Malformed dataset input; the message names the line and field.
class DatasetError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Reads an asteroid table, one body per line:
///
///   id, name, epoch [MJD], a [AU], e, i [deg], RAAN [deg], argp [deg], M [deg]
///
/// Fields are comma separated, or whitespace separated with the name taking
/// every token between the id and the last seven numbers (so names may
/// contain spaces). Blank lines and lines starting with '#' are skipped, as
/// is a leading header line whose first field is not an integer.
AsteroidDataset load_dataset(const std::string& path, double mu = kMuSun);
AsteroidDataset parse_dataset(std::istream& in, double mu = kMuSun);

/// Writes a dataset in the comma-separated layout load_dataset reads.
void write_dataset(std::ostream& out, const AsteroidDataset& dataset);

/// Uniform sampling ranges for synthetic bodies. Defaults resemble the main
/// belt. Lengths in AU, angles in degrees, epoch in MJD.
struct BeltRanges {
  double a_min = 2.0, a_max = 3.5;
  double e_min = 0.0, e_max = 0.3;
  double i_min = 0.0, i_max = 10.0;
  double raan_min = 0.0, raan_max = 360.0;
  double argp_min = 0.0, argp_max = 360.0;
  double m_min = 0.0, m_max = 360.0;
  double epoch = 59000.0;

  void validate() const;
};

/// Reproducible belt of `count` elliptic bodies with external ids 0..count-1.
AsteroidDataset generate_synthetic_belt(std::size_t count, std::uint64_t seed, const BeltRanges& ranges = {},
                                        double mu = kMuSun);

}  // namespace beampaco
