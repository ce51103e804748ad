#include "logriemann/svg.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "surface_index.hpp"

namespace lrs {

namespace {

constexpr double kPanel = 260.0;
constexpr double kGap = 20.0;

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

std::string colour(int k) {
  // golden-ratio hue walk
  double h = std::fmod(k * 137.50776405, 360.0);
  return "hsl(" + num(h) + ",70%,45%)";
}

}  // namespace

std::string to_svg(const SheetComplex& c) {
  require_valid(c);
  detail::SurfaceIndex ix(c);

  std::map<std::tuple<int, int, int>, std::string> side_colour;
  std::map<std::tuple<int, int, int>, bool> side_tail;
  int k = 0;
  for (const auto& [x, y] : c.gluing) {
    int sx = ix.sheet_ix.at(x.sheet), sy = ix.sheet_ix.at(y.sheet);
    auto a = std::make_tuple(sx, detail::find_slit(ix.sheets[sx].slits, x.slit), detail::side_ix(x.side));
    auto b = std::make_tuple(sy, detail::find_slit(ix.sheets[sy].slits, y.slit), detail::side_ix(y.side));
    if (side_colour.count(a)) continue;
    side_colour[a] = side_colour[b] = colour(k++);
  }
  for (const auto& f : ix.families)
    side_tail[{f.attach.sheet, f.attach.slit, detail::side_ix(f.attach.side)}] = true;

  // common window: z0 and every foot, with margin
  double lo_x = c.z0.real(), hi_x = lo_x, lo_y = c.z0.imag(), hi_y = lo_y;
  for (const auto& [id, r] : c.rams) {
    lo_x = std::min(lo_x, r.projection.real());
    hi_x = std::max(hi_x, r.projection.real());
    lo_y = std::min(lo_y, r.projection.imag());
    hi_y = std::max(hi_y, r.projection.imag());
  }
  double span = std::max({hi_x - lo_x, hi_y - lo_y, 1.0});
  double cx = 0.5 * (lo_x + hi_x), cy = 0.5 * (lo_y + hi_y);
  double half = 0.8 * span + 0.5;
  auto X = [&](Complex z) { return (z.real() - (cx - half)) / (2 * half) * kPanel; };
  auto Y = [&](Complex z) { return ((cy + half) - z.imag()) / (2 * half) * kPanel; };

  const int cols = std::max(1, static_cast<int>(std::ceil(std::sqrt(static_cast<double>(ix.sheets.size())))));
  const int rows = static_cast<int>((ix.sheets.size() + cols - 1) / cols);
  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(cols * (kPanel + kGap) + kGap) << "\" height=\""
    << num(rows * (kPanel + kGap + 16) + kGap) << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  o << "<defs><clipPath id=\"panel\"><rect x=\"0\" y=\"0\" width=\"" << kPanel << "\" height=\"" << kPanel
    << "\"/></clipPath></defs>\n";
  for (size_t s = 0; s < ix.sheets.size(); ++s) {
    double ox = kGap + (s % cols) * (kPanel + kGap);
    double oy = kGap + (s / cols) * (kPanel + kGap + 16) + 16;
    o << "<g transform=\"translate(" << num(ox) << "," << num(oy) << ")\">\n";
    o << "<text x=\"0\" y=\"-4\">" << ix.sheets[s].id << "</text>\n";
    o << "<rect x=\"0\" y=\"0\" width=\"" << kPanel << "\" height=\"" << kPanel
      << "\" fill=\"#fafafa\" stroke=\"#999\"/>\n";
    o << "<g clip-path=\"url(#panel)\">\n";
    o << "<circle cx=\"" << num(X(c.z0)) << "\" cy=\"" << num(Y(c.z0)) << "\" r=\"2.5\" fill=\"#333\"/>\n";
    for (size_t j = 0; j < ix.sheets[s].slits.size(); ++j) {
      const auto& sl = ix.sheets[s].slits[j];
      Complex far = sl.foot + 4.0 * half * sl.dir;
      Complex left = Complex(0, 1) * sl.dir;  // screen offset of the Top stroke
      for (Side side : {Side::Top, Side::Bottom}) {
        int si = detail::side_ix(side);
        double off = side == Side::Top ? 1.6 : -1.6;
        double dx = left.real() * off, dy = -left.imag() * off;
        auto key = std::make_tuple(int(s), int(j), si);
        std::string col = side_colour.count(key) ? side_colour[key] : "#bbb";
        o << "<line x1=\"" << num(X(sl.foot) + dx) << "\" y1=\"" << num(Y(sl.foot) + dy) << "\" x2=\""
          << num(X(far) + dx) << "\" y2=\"" << num(Y(far) + dy) << "\" stroke=\"" << col
          << "\" stroke-width=\"2\"/>\n";
        if (side_tail.count(key)) {
          Complex at = sl.foot + 0.35 * half * sl.dir;
          o << "<text x=\"" << num(X(at) + 5 * dx) << "\" y=\"" << num(Y(at) + 5 * dy)
            << "\" text-anchor=\"middle\">×∞</text>\n";
        }
      }
      o << "<circle cx=\"" << num(X(sl.foot)) << "\" cy=\"" << num(Y(sl.foot)) << "\" r=\"3\" fill=\"#fff\" stroke=\"#000\"/>\n";
      o << "<text x=\"" << num(X(sl.foot) + 5) << "\" y=\"" << num(Y(sl.foot) - 5) << "\">" << sl.id << "</text>\n";
    }
    o << "</g>\n</g>\n";
  }
  o << "</svg>\n";
  return o.str();
}

}  // namespace lrs
