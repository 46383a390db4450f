#include "ppc/region.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <algorithm>
#include <cmath>
#include <ostream>

#include "ppc/errors.hpp"

namespace ppc {

std::vector<RegionRow> region_table(std::uint32_t d_min, std::uint32_t d_max, const SearchGrid& grid) {
  if (d_min < 2 || d_max < d_min) throw std::invalid_argument("invalid d range");
  std::vector<RegionRow> rows;
  for (std::uint32_t d = d_min; d <= d_max; ++d) {
    RegionRow row{d, std::nullopt};
    try {
      row.best = min_order(d, grid);
    } catch (const Infeasible&) {
    }
    rows.push_back(row);
  }
  return rows;
}

void write_region_csv(const std::vector<RegionRow>& rows, std::ostream& out) {
  out << "d,a,b,m,log10_n_min\n";
  for (const auto& row : rows) {
    if (row.best)
      fmt::print(out, "{},{},{},{},{:.4f}\n", row.d, row.best->a, row.best->b, row.best->m, row.best->log10_n_min);
    else
      fmt::print(out, "{},,,,\n", row.d);
  }
}

void emit_region_svg(const std::vector<RegionRow>& rows, std::ostream& out) {
  constexpr double kWidth = 720, kHeight = 480, kLeft = 70, kRight = 20, kTop = 40, kBottom = 50;
  std::uint32_t d_lo = rows.empty() ? 2 : rows.front().d;
  std::uint32_t d_hi = rows.empty() ? 3 : rows.back().d + 1;
  double y_max = 10;
  for (const auto& r : rows)
    if (r.best) y_max = std::max(y_max, std::ceil(r.best->log10_n_min / 10.0) * 10.0);
  const double plot_w = kWidth - kLeft - kRight, plot_h = kHeight - kTop - kBottom;
  auto sx = [&](double d) { return kLeft + (d - d_lo) / std::max(1.0, double(d_hi - d_lo)) * plot_w; };
  auto sy = [&](double v) { return kTop + plot_h - v / y_max * plot_h; };

  fmt::print(out,
             "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{:.0f}\" height=\"{:.0f}\" "
             "font-family=\"sans-serif\" font-size=\"11\">\n",
             kWidth, kHeight);
  fmt::print(out,
             "<text x=\"{:.1f}\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">"
             "Smallest plane order with a legitimate coloring, by number of colors</text>\n",
             kWidth / 2);
  fmt::print(out, "<line x1=\"{0:.1f}\" y1=\"{1:.1f}\" x2=\"{2:.1f}\" y2=\"{1:.1f}\" stroke=\"black\"/>\n", kLeft,
             kTop + plot_h, kLeft + plot_w);
  fmt::print(out, "<line x1=\"{0:.1f}\" y1=\"{1:.1f}\" x2=\"{0:.1f}\" y2=\"{2:.1f}\" stroke=\"black\"/>\n", kLeft, kTop,
             kTop + plot_h);
  const double y_step = y_max > 100 ? 50 : (y_max > 40 ? 10 : 5);
  for (double v = 0; v <= y_max + 1e-9; v += y_step)
    fmt::print(out,
               "<line x1=\"{0:.1f}\" y1=\"{1:.1f}\" x2=\"{2:.1f}\" y2=\"{1:.1f}\" stroke=\"#ddd\"/>"
               "<text x=\"{3:.1f}\" y=\"{4:.1f}\" text-anchor=\"end\">10<tspan baseline-shift=\"super\" "
               "font-size=\"8\">{5:.0f}</tspan></text>\n",
               kLeft, sy(v), kLeft + plot_w, kLeft - 6, sy(v) + 4, v);
  const std::uint32_t x_step = d_hi - d_lo > 20 ? 5 : 1;
  for (std::uint32_t d = d_lo; d < d_hi; d += x_step)
    fmt::print(out, "<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"middle\">{}</text>\n", sx(d + 0.5),
               kTop + plot_h + 16, d);
  fmt::print(out, "<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"middle\">colors d</text>\n", kLeft + plot_w / 2,
             kHeight - 10);

  std::string path;
  for (const auto& r : rows) {
    if (!r.best) continue;
    const double y = sy(r.best->log10_n_min);
    path += fmt::format("{}{:.2f},{:.2f} L{:.2f},{:.2f} ", path.empty() ? "M" : "L", sx(r.d), y, sx(r.d + 1.0), y);
  }
  if (!path.empty()) {
    path.pop_back();
    fmt::print(out, "<path d=\"{}\" fill=\"none\" stroke=\"#1f5fa8\" stroke-width=\"2\"/>\n", path);
  }
  for (const auto& r : rows)
    if (r.best)
      fmt::print(out,
                 "<circle cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"2.5\" fill=\"#1f5fa8\"><title>d={} a={} b={} m={} "
                 "log10 n={:.2f}</title></circle>\n",
                 sx(r.d + 0.5), sy(r.best->log10_n_min), r.d, r.best->a, r.best->b, r.best->m, r.best->log10_n_min);
  out << "</svg>\n";
}

}  // namespace ppc
