#pragma once

#include <iosfwd>
#include <vector>

#include "cfpop/grid.hpp"

namespace cfpop {

// State variable of the scheme: a sum of point masses m_j at the grid sites.
struct GridMeasure {
  GridSpec grid;
  std::vector<double> m;  // size J+1

  static GridMeasure zero(const GridSpec& g) {
    return {g, std::vector<double>(static_cast<size_t>(g.J) + 1, 0.0)};
  }
};

// Free-form atomic measure; used when two measures live on different site
// sets. Weights may be signed (differences of measures).
struct AtomicMeasure {
  std::vector<double> site;    // strictly increasing
  std::vector<double> weight;  // same length
};

double total_variation(const GridMeasure& mu);
double total_variation(const AtomicMeasure& mu);

// p = 0: total count (equals TV for nonnegative masses); p = 1: total mass.
double moment(const GridMeasure& mu, int p);
double moment(const AtomicMeasure& mu, int p);

AtomicMeasure to_atomic(const GridMeasure& mu);

// CSV with header "site,weight", one row per atom, 15 significant digits.
void write_csv(const AtomicMeasure& mu, std::ostream& out);
AtomicMeasure read_atomic_csv(std::istream& in);

}  // namespace cfpop
