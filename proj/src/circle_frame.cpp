#include "circle_frame.hpp"

#include <algorithm>

namespace lrs::detail {

double ray_circle_angle(Complex foot, Complex dir, double R) {
  double b = (foot * std::conj(dir)).real();
  double disc = b * b - std::norm(foot) + R * R;
  double t = -b + std::sqrt(std::max(disc, 0.0));
  Complex p = foot + t * dir;
  return wrap_angle(std::arg(p));
}

CircleFrame::Table CircleFrame::make(const std::vector<SlitInfo>& slits, double R) {
  Table t;
  for (const auto& s : slits) t.angle.push_back(ray_circle_angle(s.foot, s.dir, R));
  t.order.resize(slits.size());
  for (size_t i = 0; i < slits.size(); ++i) t.order[i] = static_cast<int>(i);
  std::sort(t.order.begin(), t.order.end(), [&](int a, int b) { return t.angle[a] < t.angle[b]; });
  t.rank.resize(slits.size());
  for (size_t i = 0; i < t.order.size(); ++i) t.rank[t.order[i]] = static_cast<int>(i);
  return t;
}

CircleFrame::CircleFrame(const SurfaceIndex& ix, double R) : R_(R) {
  for (const auto& s : ix.sheets) cores_.push_back(make(s.slits, R));
  for (const auto& f : ix.families) fams_.push_back(make(f.slits, R));
}

int CircleFrame::next_ccw(const Loc& l, int slit) const {
  const Table& t = table(l);
  int n = static_cast<int>(t.order.size());
  return t.order[(t.rank[slit] + 1) % n];
}

int CircleFrame::next_cw(const Loc& l, int slit) const {
  const Table& t = table(l);
  int n = static_cast<int>(t.order.size());
  return t.order[(t.rank[slit] + n - 1) % n];
}

int CircleFrame::first_ccw_from(const Loc& l, double phi) const {
  const Table& t = table(l);
  if (t.order.empty()) return -1;
  for (int s : t.order)
    if (t.angle[s] > phi) return s;
  return t.order.front();
}

int CircleFrame::first_cw_from(const Loc& l, double phi) const {
  const Table& t = table(l);
  if (t.order.empty()) return -1;
  for (auto it = t.order.rbegin(); it != t.order.rend(); ++it)
    if (t.angle[*it] < phi) return *it;
  return t.order.back();
}

}  // namespace lrs::detail
