// Copyright 2026 The pnes-decoherence Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pnes/report.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <vector>

namespace pnes {

std::string_view csv_header() {
  return "b_over_a,n_t,match_kind,r_matched,t_g,energy_at_tg,n_0,n_r,n_g,ratio_r0,ratio_rg,cutoff,"
         "conv_delta";
}

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  std::array<char, 40> buf{};
  std::snprintf(buf.data(), buf.size(), "%.12g", value);
  return buf.data();
}

namespace {

std::string optional_number(const std::optional<double>& value, std::string_view missing) {
  return value ? format_number(*value) : std::string(missing);
}

std::string sanitize(std::string text) {
  std::replace(text.begin(), text.end(), ',', ';');
  std::replace(text.begin(), text.end(), '\n', ' ');
  return text;
}

}  // namespace

std::string csv_row(const SweepRecord& r) {
  std::string row = format_number(r.b_over_a) + "," + format_number(r.n_t) + "," +
                    std::string(to_string(r.match)) + ",";
  if (!r.ok()) return row + "error=" + sanitize(r.error);
  row += format_number(r.r_matched) + "," + format_number(r.t_g) + "," +
         format_number(r.energy_at_tg) + "," + format_number(r.n_0) + "," + format_number(r.n_r) +
         "," + format_number(r.n_g) + "," + optional_number(r.ratio_r0, "undefined") + "," +
         optional_number(r.ratio_rg, "undefined") + "," + std::to_string(r.cutoff) + "," +
         optional_number(r.conv_delta, "unchecked");
  return row;
}

std::string to_csv(std::span<const SweepRecord> records) {
  std::string out(csv_header());
  out += '\n';
  for (const SweepRecord& r : records) {
    out += csv_row(r);
    out += '\n';
  }
  return out;
}

std::string to_panel_csv(std::span<const Fig1SeriesResult> series, std::string_view panel,
                         MatchKind match) {
  std::string out = "series," + std::string(csv_header()) + "\n";
  for (const Fig1SeriesResult& s : series) {
    if (s.series.panel != panel) continue;
    for (const SweepRecord& r : s.records) {
      if (r.match != match) continue;
      out += s.series.label + "," + csv_row(r) + "\n";
    }
  }
  return out;
}

namespace {

constexpr double kPanelWidth = 420.0;
constexpr double kPanelHeight = 300.0;
constexpr double kMarginLeft = 70.0;
constexpr double kMarginTop = 40.0;
constexpr double kGapX = 90.0;
constexpr double kGapY = 80.0;
constexpr double kXMax = 0.55;

constexpr std::array<const char*, 3> kColors = {"#000000", "#d62728", "#1f3fbf"};

struct Frame {
  double left, top;
  double log_lo, log_hi;

  double x(double v) const { return left + v / kXMax * kPanelWidth; }
  double y(double v) const {
    return top + kPanelHeight * (log_hi - std::log10(v)) / (log_hi - log_lo);
  }
};

void marker(std::ostringstream& svg, int shape, double x, double y, const char* color, bool filled) {
  const std::string fill = filled ? color : "white";
  svg << "<g fill=\"" << fill << "\" stroke=\"" << color << "\" stroke-width=\"1.2\">";
  switch (shape % 3) {
    case 0: svg << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"3.5\"/>"; break;
    case 1:
      svg << "<rect x=\"" << x - 3.5 << "\" y=\"" << y - 3.5 << "\" width=\"7\" height=\"7\"/>";
      break;
    default:
      svg << "<polygon points=\"" << x << "," << y - 4.5 << " " << x - 4 << "," << y + 3.5 << " "
          << x + 4 << "," << y + 3.5 << "\"/>";
      break;
  }
  svg << "</g>\n";
}

}  // namespace

std::string render_fig1_svg(std::span<const Fig1SeriesResult> series) {
  std::vector<std::string> panels;
  for (const auto& s : series) {
    if (std::find(panels.begin(), panels.end(), s.series.panel) == panels.end()) {
      panels.push_back(s.series.panel);
    }
  }
  const int columns = std::max<int>(1, int(panels.size()));
  const double width = 2 * kMarginLeft + columns * kPanelWidth + (columns - 1) * kGapX;
  const double height = 2 * kMarginTop + 2 * kPanelHeight + kGapY + 20;
  std::ostringstream svg;
  svg.precision(6);
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  const std::array<const char*, 2> row_titles = {"N_R / N_G", "N_R / N_0"};

  for (int row = 0; row < 2; ++row) {
    for (int col = 0; col < int(panels.size()); ++col) {
      auto value_of = [row](const SweepRecord& r) {
        return row == 0 ? r.ratio_rg : r.ratio_r0;
      };
      double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
      for (const auto& s : series) {
        if (s.series.panel != panels[col]) continue;
        for (const auto& r : s.records) {
          const auto v = value_of(r);
          if (r.ok() && v && *v > 0.0) {
            lo = std::min(lo, *v);
            hi = std::max(hi, *v);
          }
        }
      }
      if (!(hi > 0.0)) {
        lo = 1e-4;
        hi = 1.0;
      }
      Frame f{kMarginLeft + col * (kPanelWidth + kGapX), kMarginTop + row * (kPanelHeight + kGapY),
              std::floor(std::log10(lo)), std::ceil(std::log10(hi))};
      if (f.log_hi <= f.log_lo) f.log_hi = f.log_lo + 1;

      svg << "<rect x=\"" << f.left << "\" y=\"" << f.top << "\" width=\"" << kPanelWidth
          << "\" height=\"" << kPanelHeight << "\" fill=\"none\" stroke=\"black\"/>\n";
      svg << "<text x=\"" << f.left + kPanelWidth / 2 << "\" y=\"" << f.top - 10
          << "\" text-anchor=\"middle\" font-size=\"13\">" << panels[col] << "</text>\n";
      svg << "<text transform=\"translate(" << f.left - 52 << "," << f.top + kPanelHeight / 2
          << ") rotate(-90)\" text-anchor=\"middle\">" << row_titles[row] << "</text>\n";
      for (int e = int(f.log_lo); e <= int(f.log_hi); ++e) {
        const double y = f.y(std::pow(10.0, e));
        svg << "<line x1=\"" << f.left << "\" y1=\"" << y << "\" x2=\"" << f.left + kPanelWidth
            << "\" y2=\"" << y << "\" stroke=\"#dddddd\"/>\n";
        svg << "<text x=\"" << f.left - 6 << "\" y=\"" << y + 4 << "\" text-anchor=\"end\">1e"
            << e << "</text>\n";
      }
      for (int i = 1; i <= 5; ++i) {
        const double x = f.x(0.1 * i);
        svg << "<line x1=\"" << x << "\" y1=\"" << f.top + kPanelHeight << "\" x2=\"" << x
            << "\" y2=\"" << f.top + kPanelHeight + 5 << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << x << "\" y=\"" << f.top + kPanelHeight + 18
            << "\" text-anchor=\"middle\">" << format_number(0.1 * i) << "</text>\n";
      }
      svg << "<text x=\"" << f.left + kPanelWidth / 2 << "\" y=\"" << f.top + kPanelHeight + 34
          << "\" text-anchor=\"middle\">B/A</text>\n";

      int index = 0;
      double legend_y = f.top + 14;
      for (const auto& s : series) {
        if (s.series.panel != panels[col]) continue;
        const char* color = kColors[index % kColors.size()];
        for (MatchKind match : {MatchKind::energy, MatchKind::entanglement}) {
          const bool filled = match == MatchKind::energy;
          std::ostringstream path;
          bool started = false;
          for (const auto& r : s.records) {
            const auto v = value_of(r);
            if (r.match != match || !r.ok() || !v || !(*v > 0.0)) {
              started = false;
              continue;
            }
            path << (started ? " L " : " M ") << f.x(r.b_over_a) << " " << f.y(*v);
            started = true;
            marker(svg, index, f.x(r.b_over_a), f.y(*v), color, filled);
          }
          svg << "<path d=\"" << path.str() << "\" fill=\"none\" stroke=\"" << color
              << "\" stroke-width=\"1\"" << (filled ? "" : " stroke-dasharray=\"4 3\"") << "/>\n";
        }
        marker(svg, index, f.left + 12, legend_y - 4, color, true);
        svg << "<text x=\"" << f.left + 22 << "\" y=\"" << legend_y << "\">" << s.series.label
            << "</text>\n";
        legend_y += 15;
        ++index;
      }
    }
  }
  svg << "<text x=\"" << kMarginLeft << "\" y=\"" << height - 8
      << "\">filled: energy-matched twin beam; open/dashed: entanglement-matched</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace pnes
