// Copyright 2026 The palmfbm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "palmfbm/csv.hpp"
#include "palmfbm/errors.hpp"

namespace palmfbm::cli {
namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 30.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 60.0;
constexpr const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

std::string num(double v) {
  std::ostringstream s;
  s.precision(6);
  s << v;
  return s.str();
}

struct Axes {
  double lx0, lx1, ly0, ly1;
  double px(double x) const { return kLeft + (std::log10(x) - lx0) / (lx1 - lx0) * (kWidth - kLeft - kRight); }
  double py(double y) const {
    return kHeight - kBottom - (std::log10(y) - ly0) / (ly1 - ly0) * (kHeight - kTop - kBottom);
  }
};

}  // namespace

std::string render_loglog_svg(const PlotSpec& chart) {
  double xmin = std::numeric_limits<double>::infinity(), xmax = 0.0;
  double ymin = std::numeric_limits<double>::infinity(), ymax = 0.0;
  for (const auto& s : chart.series) {
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (!(s.x[i] > 0.0) || !(s.y[i] > 0.0)) continue;
      xmin = std::min(xmin, s.x[i]);
      xmax = std::max(xmax, s.x[i]);
      ymin = std::min(ymin, s.y[i]);
      ymax = std::max(ymax, s.y[i]);
    }
  }
  if (!(xmax > 0.0)) throw InvalidParameter("nothing to plot: no positive (x, y) pairs");
  Axes ax{std::floor(std::log10(xmin)), std::ceil(std::log10(xmax)), std::floor(std::log10(ymin)),
          std::ceil(std::log10(ymax))};
  if (ax.lx1 == ax.lx0) ax.lx1 += 1.0;
  if (ax.ly1 == ax.ly0) ax.ly1 += 1.0;

  std::ostringstream o;
  o << R"(<?xml version="1.0" encoding="UTF-8"?>)" << '\n'
    << R"(<svg xmlns="http://www.w3.org/2000/svg" width=")" << kWidth << R"(" height=")" << kHeight
    << R"(" viewBox="0 0 )" << kWidth << ' ' << kHeight << R"(" font-family="sans-serif" font-size="12">)"
    << '\n'
    << R"(<rect width="100%" height="100%" fill="white"/>)" << '\n'
    << R"(<text x=")" << kWidth / 2 << R"(" y="24" text-anchor="middle" font-size="15">)" << escape(chart.title)
    << "</text>\n";

  o << R"(<g class="axes" stroke="black" fill="none">)" << '\n'
    << R"(<rect x=")" << kLeft << R"(" y=")" << kTop << R"(" width=")" << kWidth - kLeft - kRight
    << R"(" height=")" << kHeight - kTop - kBottom << R"("/>)" << '\n';
  for (double d = ax.lx0; d <= ax.lx1; d += 1.0) {
    const double x = ax.px(std::pow(10.0, d));
    o << R"(<line x1=")" << num(x) << R"(" y1=")" << kHeight - kBottom << R"(" x2=")" << num(x)
      << R"(" y2=")" << kHeight - kBottom + 6 << R"("/>)" << '\n';
  }
  for (double d = ax.ly0; d <= ax.ly1; d += 1.0) {
    const double y = ax.py(std::pow(10.0, d));
    o << R"(<line x1=")" << kLeft - 6 << R"(" y1=")" << num(y) << R"(" x2=")" << kLeft << R"(" y2=")"
      << num(y) << R"("/>)" << '\n';
  }
  o << "</g>\n<g class=\"tick-labels\">\n";
  for (double d = ax.lx0; d <= ax.lx1; d += 1.0) {
    o << R"(<text x=")" << num(ax.px(std::pow(10.0, d))) << R"(" y=")" << kHeight - kBottom + 20
      << R"(" text-anchor="middle">1e)" << d << "</text>\n";
  }
  for (double d = ax.ly0; d <= ax.ly1; d += 1.0) {
    o << R"(<text x=")" << kLeft - 10 << R"(" y=")" << num(ax.py(std::pow(10.0, d)) + 4)
      << R"(" text-anchor="end">1e)" << d << "</text>\n";
  }
  o << "</g>\n"
    << R"(<text x=")" << (kLeft + kWidth - kRight) / 2 << R"(" y=")" << kHeight - 15
    << R"(" text-anchor="middle">)" << escape(chart.x_label) << "</text>\n"
    << R"(<text transform="translate(20 )" << (kTop + kHeight - kBottom) / 2
    << R"svg() rotate(-90)" text-anchor="middle">)svg" << escape(chart.y_label) << "</text>\n";

  for (std::size_t k = 0; k < chart.series.size(); ++k) {
    const auto& s = chart.series[k];
    const char* color = kColors[k % std::size(kColors)];
    o << R"(<g class="series" stroke=")" << color << R"(" fill=")" << color << R"(">)" << '\n'
      << R"(<polyline fill="none" stroke-width="1.5" points=")";
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (s.x[i] > 0.0 && s.y[i] > 0.0) o << num(ax.px(s.x[i])) << ',' << num(ax.py(s.y[i])) << ' ';
    }
    o << R"("/>)" << '\n';
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (s.x[i] > 0.0 && s.y[i] > 0.0) {
        o << R"(<circle r="2.5" cx=")" << num(ax.px(s.x[i])) << R"(" cy=")" << num(ax.py(s.y[i])) << R"("/>)"
          << '\n';
      }
    }
    o << R"(<text stroke="none" x=")" << kLeft + 12 << R"(" y=")" << kTop + 18 + 16 * k << R"(">)"
      << escape(s.label) << "</text>\n</g>\n";
  }

  if (chart.fit) {
    const double y0 = std::exp(chart.fit->intercept) * std::pow(xmin, chart.fit->slope);
    const double y1 = std::exp(chart.fit->intercept) * std::pow(xmax, chart.fit->slope);
    o << R"(<line class="fit" stroke="black" stroke-dasharray="6 4" x1=")" << num(ax.px(xmin)) << R"(" y1=")"
      << num(ax.py(y0)) << R"(" x2=")" << num(ax.px(xmax)) << R"(" y2=")" << num(ax.py(y1)) << R"("/>)" << '\n'
      << R"(<text class="fit-slope" x=")" << kWidth - kRight - 12 << R"(" y=")" << kHeight - kBottom - 12
      << R"(" text-anchor="end" data-slope=")" << format_double(chart.fit->slope) << R"(">fitted slope = )"
      << format_double(chart.fit->slope) << "</text>\n";
  }
  o << "</svg>\n";
  return o.str();
}

}  // namespace palmfbm::cli
