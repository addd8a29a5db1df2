#include "cfpop/measure.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace cfpop {

double total_variation(const GridMeasure& mu) {
  double s = 0.0;
  for (double v : mu.m) s += std::abs(v);
  return s;
}

double total_variation(const AtomicMeasure& mu) {
  double s = 0.0;
  for (double v : mu.weight) s += std::abs(v);
  return s;
}

double moment(const GridMeasure& mu, int p) {
  if (p != 0 && p != 1) throw std::invalid_argument("moment: order must be 0 or 1");
  double s = 0.0;
  for (int j = 0; j <= mu.grid.J; ++j)
    s += (p == 0 ? mu.m[j] : mu.grid.site(j) * mu.m[j]);
  return s;
}

double moment(const AtomicMeasure& mu, int p) {
  if (p != 0 && p != 1) throw std::invalid_argument("moment: order must be 0 or 1");
  double s = 0.0;
  for (size_t i = 0; i < mu.site.size(); ++i)
    s += (p == 0 ? mu.weight[i] : mu.site[i] * mu.weight[i]);
  return s;
}

AtomicMeasure to_atomic(const GridMeasure& mu) {
  AtomicMeasure out;
  out.site.reserve(mu.m.size());
  out.weight.reserve(mu.m.size());
  for (int j = 0; j <= mu.grid.J; ++j) {
    out.site.push_back(mu.grid.site(j));
    out.weight.push_back(mu.m[j]);
  }
  return out;
}

void write_csv(const AtomicMeasure& mu, std::ostream& out) {
  out << "site,weight\n";
  char buf[80];
  for (size_t i = 0; i < mu.site.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.15g,%.15g\n", mu.site[i], mu.weight[i]);
    out << buf;
  }
}

AtomicMeasure read_atomic_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line.rfind("site,weight", 0) != 0)
    throw std::runtime_error("atomic csv: missing site,weight header");
  AtomicMeasure mu;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    size_t comma = line.find(',');
    if (comma == std::string::npos) throw std::runtime_error("atomic csv: malformed row");
    mu.site.push_back(std::strtod(line.c_str(), nullptr));
    mu.weight.push_back(std::strtod(line.c_str() + comma + 1, nullptr));
  }
  for (size_t i = 1; i < mu.site.size(); ++i)
    if (!(mu.site[i] > mu.site[i - 1]))
      throw std::runtime_error("atomic csv: sites must be strictly increasing");
  return mu;
}

}  // namespace cfpop
