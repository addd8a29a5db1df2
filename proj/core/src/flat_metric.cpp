#include "cfpop/flat_metric.hpp"

#include <algorithm>
#include <vector>

namespace cfpop {

namespace {

// Breakpoint of a concave piecewise-linear function; the chain is kept
// strictly increasing in x.
struct Pt {
  double x, v;
};

// Value of the chain at x, which must lie within [front.x, back.x].
double chain_at(const std::vector<Pt>& c, double x) {
  if (x <= c.front().x) return c.front().v;
  for (size_t k = 1; k < c.size(); ++k) {
    if (x <= c[k].x) {
      double w = (x - c[k - 1].x) / (c[k].x - c[k - 1].x);
      return c[k - 1].v + w * (c[k].v - c[k - 1].v);
    }
  }
  return c.back().v;
}

// Replace V(phi) by sup{ V(psi) : |psi - phi| <= gap }, then restrict the
// domain back to [-1, 1]. For a concave chain the sup shifts the rising part
// left by gap, the falling part right by gap, and flattens the top.
void window_max(std::vector<Pt>& c, double gap) {
  size_t peak = 0;
  for (size_t k = 1; k < c.size(); ++k)
    if (c[k].v > c[peak].v) peak = k;

  std::vector<Pt> shifted;
  shifted.reserve(c.size() + 1);
  for (size_t k = 0; k <= peak; ++k) shifted.push_back({c[k].x - gap, c[k].v});
  shifted.push_back({c[peak].x + gap, c[peak].v});
  for (size_t k = peak + 1; k < c.size(); ++k) shifted.push_back({c[k].x + gap, c[k].v});

  std::vector<Pt> out;
  out.reserve(shifted.size() + 2);
  out.push_back({-1.0, chain_at(shifted, -1.0)});
  for (const Pt& p : shifted)
    if (p.x > -1.0 && p.x < 1.0) out.push_back(p);
  out.push_back({1.0, chain_at(shifted, 1.0)});
  c = std::move(out);
}

}  // namespace

double flat_distance(const AtomicMeasure& a, const AtomicMeasure& b) {
  // Merge the site lists; equal sites combine into one signed difference.
  std::vector<double> s, d;
  s.reserve(a.site.size() + b.site.size());
  d.reserve(a.site.size() + b.site.size());
  size_t i = 0, j = 0;
  while (i < a.site.size() || j < b.site.size()) {
    double site, diff;
    if (j == b.site.size() || (i < a.site.size() && a.site[i] < b.site[j])) {
      site = a.site[i];
      diff = a.weight[i];
      ++i;
    } else if (i == a.site.size() || b.site[j] < a.site[i]) {
      site = b.site[j];
      diff = -b.weight[j];
      ++j;
    } else {
      site = a.site[i];
      diff = a.weight[i] - b.weight[j];
      ++i;
      ++j;
    }
    if (diff != 0.0) {
      s.push_back(site);
      d.push_back(diff);
    }
  }
  if (s.empty()) return 0.0;

  // Sweep: V_i(phi) is the best value of sum_{k<=i} phi_k d_k over feasible
  // phi_1..phi_{i-1} given phi_i = phi. V stays concave piecewise-linear on
  // [-1, 1]; each site applies a window max over the gap, then adds d_i*phi.
  std::vector<Pt> c{{-1.0, -d[0]}, {1.0, d[0]}};
  for (size_t k = 1; k < s.size(); ++k) {
    window_max(c, s[k] - s[k - 1]);
    for (Pt& p : c) p.v += d[k] * p.x;
  }
  double best = c[0].v;
  for (const Pt& p : c) best = std::max(best, p.v);
  return best;
}

}  // namespace cfpop
