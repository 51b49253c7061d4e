#pragma once

// Enantiomer geometry ingestion. XYZ files (Angstrom) are parsed into
// atom sites (positions in cm), paired left/right conformations are
// validated and recentered on the chirality-center atom.

#include <Eigen/Dense>
#include <stdexcept>
#include <string>
#include <vector>

namespace cslosc {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg),
        line_number(line) {}
  std::size_t line_number;
};

class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct AtomSite {
  std::string element;
  double mass = 0.0;          // amu
  Eigen::Vector3d position;   // cm
};

/// Mass of an element symbol in amu (most abundant isotope; isotope
/// labels like "D", "T", "13C" are recognized). Throws GeometryError
/// for unknown symbols.
double element_mass(const std::string& symbol);

/// Parses standard XYZ text: count line, comment line, then
/// "Element x y z" rows in Angstrom. Errors carry the offending line.
std::vector<AtomSite> parse_xyz(const std::string& text);

std::vector<AtomSite> load_xyz_file(const std::string& path);

/// Serializes sites back to XYZ text (positions in Angstrom).
std::string serialize_xyz(const std::vector<AtomSite>& sites,
                          const std::string& comment = "");

struct EnantiomerGeometry {
  std::vector<AtomSite> left;
  std::vector<AtomSite> right;
  std::size_t center_index = 0;
  std::size_t n_superposed = 0;   // atoms with displacement above threshold
  std::size_t nucleon_count = 0;  // sum of round(mass) over all atoms

  Eigen::Vector3d displacement(std::size_t i) const {
    return left[i].position - right[i].position;
  }
  double max_displacement() const;
};

/// Atoms closer than this between the two conformations count as
/// spectators (they cancel identically in the rate sums).
inline constexpr double kSpectatorThresholdCm = 1e-3 * 1e-8;  // 1e-3 Angstrom

/// Atoms further apart than this after centering indicate the two files
/// do not share a frame.
inline constexpr double kMisalignmentLimitCm = 100.0 * 1e-8;  // 100 Angstrom

/// Pairs two conformations atom-by-atom (positional correspondence) and
/// recenters both on the chirality-center atom. No alignment beyond the
/// centering translation is performed.
EnantiomerGeometry build_pair(std::vector<AtomSite> left,
                              std::vector<AtomSite> right,
                              std::size_t center_index);

/// Vector sum of m_i * (x_i^L - x_i^R), in amu*cm.
Eigen::Vector3d mass_weighted_displacement(const EnantiomerGeometry& geom);

struct NucleonSites {
  std::vector<Eigen::Vector3d> left;   // unit-mass sites, cm
  std::vector<Eigen::Vector3d> right;
};

/// Replaces every atom by round(mass) coincident unit-mass sites.
NucleonSites nucleon_expand(const EnantiomerGeometry& geom);

}  // namespace cslosc
