#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "contri/generators.hpp"

namespace contri {

/// Cone from the core point (0, 0, center) over a meridian loop on the boundary torus.
struct MeridianDisk {
  LabelSet loop;
  /// Loop vertices as unwrapped (phi, theta), phi increasing by a total of 2 pi.
  std::vector<std::array<double, 2>> vertices;
  double center = 0;  // in [0, 2 pi)

  /// Theta of the loop over boundary angle phi, lifted near `center`.
  double loop_theta(double phi) const;
  /// Theta of the disk over the polar point (rho, phi) of the unit disk.
  double height(double rho, double phi) const;
};

/// PL surrogate of a solid torus cut into cells by meridional disks.
struct PlSolidTorus {
  std::vector<MeridianDisk> disks;  // sorted by center
  /// cells[k] lies between disks[k] and disks[k+1] (cyclically).
  std::vector<LabelSet> cells;
  std::vector<double> breakpoints;  // all loop vertex angles, mod 2 pi
  std::string note;
};

/// Disks are the interior triangles of `t`, placed with the SolidTorus realization (x, y, theta).
PlSolidTorus pl_solid_torus(const NamedComplex& t);

struct MeridianFit {
  double f = 0;
  int cell = -1;
  /// The slice runs through a cell wall; f is the one-sided value 0.
  bool degenerate = false;
};

/// Largest r (to within tol, from below) with the flat disk of radius r at theta = 2 pi t inside one cell.
MeridianFit meridian_fit(const PlSolidTorus& m, double t, double tol = 1e-9, std::size_t boundary_samples = 256);

struct DeltaEstimate {
  double delta = 0;
  double argmax = 0;
  std::size_t samples = 0;
  std::size_t degenerate = 0;
};

/// Max of meridian_fit over t = i / samples.
DeltaEstimate delta_estimate(const PlSolidTorus& m, std::size_t samples = 1000, double tol = 1e-9);

}  // namespace contri
