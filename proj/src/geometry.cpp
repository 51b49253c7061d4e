#include "cslosc/geometry.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "cslosc/units.hpp"

namespace cslosc {

double element_mass(const std::string& symbol) {
  // Most abundant isotope masses, amu. Isotope labels resolve directly.
  static const std::unordered_map<std::string, double> table = {
      {"H", 1.00783},  {"D", 2.01410},  {"T", 3.01605},  {"He", 4.00260},
      {"Li", 7.01600}, {"B", 11.00931}, {"C", 12.0},     {"13C", 13.00335},
      {"N", 14.00307}, {"15N", 15.00011}, {"O", 15.99491}, {"18O", 17.99916},
      {"F", 18.99840}, {"Na", 22.98977}, {"Mg", 23.98504}, {"Al", 26.98154},
      {"Si", 27.97693}, {"P", 30.97376}, {"S", 31.97207}, {"34S", 33.96787},
      {"Cl", 34.96885}, {"K", 38.96371}, {"Ca", 39.96259}, {"Fe", 55.93494},
      {"Br", 78.91834}, {"Ru", 101.90434}, {"I", 126.90447},
  };
  auto it = table.find(symbol);
  if (it == table.end()) {
    throw GeometryError("unknown element symbol: " + symbol);
  }
  return it->second;
}

std::vector<AtomSite> parse_xyz(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;

  auto next_line = [&]() -> bool {
    if (!std::getline(in, line)) return false;
    ++lineno;
    return true;
  };

  if (!next_line()) throw ParseError("missing atom-count line", 1);
  std::size_t count = 0;
  {
    std::istringstream s(line);
    long long c = -1;
    if (!(s >> c) || c < 0) throw ParseError("invalid atom count", lineno);
    count = static_cast<std::size_t>(c);
  }
  if (!next_line()) throw ParseError("missing comment line", 2);

  std::vector<AtomSite> sites;
  sites.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (!next_line()) {
      throw ParseError("expected " + std::to_string(count) +
                           " atom lines, file ended early",
                       lineno + 1);
    }
    std::istringstream s(line);
    std::string element;
    double x, y, z;
    if (!(s >> element >> x >> y >> z)) {
      throw ParseError("malformed atom line", lineno);
    }
    double mass;
    try {
      mass = element_mass(element);
    } catch (const GeometryError& e) {
      throw ParseError(e.what(), lineno);
    }
    sites.push_back({element, mass,
                     Eigen::Vector3d(x, y, z) * constants::angstrom_cm});
  }
  return sites;
}

std::vector<AtomSite> load_xyz_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw GeometryError("cannot open XYZ file: " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse_xyz(buf.str());
}

std::string serialize_xyz(const std::vector<AtomSite>& sites,
                          const std::string& comment) {
  std::ostringstream out;
  out.precision(12);
  out << sites.size() << "\n" << comment << "\n";
  for (const auto& s : sites) {
    const Eigen::Vector3d a = s.position / constants::angstrom_cm;
    out << s.element << " " << a.x() << " " << a.y() << " " << a.z() << "\n";
  }
  return out.str();
}

double EnantiomerGeometry::max_displacement() const {
  double d = 0.0;
  for (std::size_t i = 0; i < left.size(); ++i) {
    d = std::max(d, displacement(i).norm());
  }
  return d;
}

EnantiomerGeometry build_pair(std::vector<AtomSite> left,
                              std::vector<AtomSite> right,
                              std::size_t center_index) {
  if (left.size() != right.size()) {
    throw GeometryError("conformations have different atom counts");
  }
  for (std::size_t i = 0; i < left.size(); ++i) {
    if (left[i].element != right[i].element) {
      throw GeometryError("element mismatch at atom " + std::to_string(i) +
                          ": " + left[i].element + " vs " + right[i].element);
    }
  }
  if (center_index >= left.size()) {
    throw GeometryError("center_index out of range");
  }

  const Eigen::Vector3d cl = left[center_index].position;
  const Eigen::Vector3d cr = right[center_index].position;
  for (auto& s : left) s.position -= cl;
  for (auto& s : right) s.position -= cr;

  EnantiomerGeometry geom;
  geom.left = std::move(left);
  geom.right = std::move(right);
  geom.center_index = center_index;
  for (std::size_t i = 0; i < geom.left.size(); ++i) {
    const double d = geom.displacement(i).norm();
    if (d > kMisalignmentLimitCm) {
      throw GeometryError("atom " + std::to_string(i) +
                          " displaced by more than 100 A after centering; "
                          "conformations do not share a frame");
    }
    if (d > kSpectatorThresholdCm) ++geom.n_superposed;
    geom.nucleon_count +=
        static_cast<std::size_t>(std::llround(geom.left[i].mass));
  }
  return geom;
}

Eigen::Vector3d mass_weighted_displacement(const EnantiomerGeometry& geom) {
  Eigen::Vector3d sum = Eigen::Vector3d::Zero();
  for (std::size_t i = 0; i < geom.left.size(); ++i) {
    sum += geom.left[i].mass * geom.displacement(i);
  }
  return sum;
}

NucleonSites nucleon_expand(const EnantiomerGeometry& geom) {
  NucleonSites out;
  out.left.reserve(geom.nucleon_count);
  out.right.reserve(geom.nucleon_count);
  for (std::size_t i = 0; i < geom.left.size(); ++i) {
    const auto copies = std::llround(geom.left[i].mass);
    for (long long k = 0; k < copies; ++k) {
      out.left.push_back(geom.left[i].position);
      out.right.push_back(geom.right[i].position);
    }
  }
  return out;
}

}  // namespace cslosc
