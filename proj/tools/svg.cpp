// Copyright 2026 The hypgrp Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "svg.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "hypgrp/error.hpp"

namespace hypgrp::cli {

namespace {

std::vector<std::string> split(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto comma = line.find(',', start);
    out.emplace_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

double numeric(const std::string& cell, const std::string& column) {
  double v = 0.0;
  const char* first = cell.data();
  const char* last = cell.data() + cell.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (cell.empty() || ec != std::errc() || ptr != last || !std::isfinite(v)) {
    throw Error("svg: non-numeric value '" + cell + "' in column " + column);
  }
  return v;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

CsvTable CsvTable::parse(std::string_view text) {
  CsvTable t;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (t.columns.empty()) {
      t.columns = split(line);
    } else {
      auto cells = split(line);
      if (cells.size() != t.columns.size()) throw Error("csv: row has " + std::to_string(cells.size()) + " cells");
      t.rows.push_back(std::move(cells));
    }
  }
  if (t.columns.empty()) throw Error("csv: missing header");
  return t;
}

std::size_t CsvTable::column(const std::string& name) const {
  auto it = std::find(columns.begin(), columns.end(), name);
  if (it == columns.end()) throw Error("csv: no column named " + name);
  return static_cast<std::size_t>(it - columns.begin());
}

std::string emit_svg(const CsvTable& table, const AxesSpec& axes) {
  if (table.rows.size() < 2) throw Error("svg: a chart needs at least two rows");
  const std::size_t xc = table.column(axes.x_column);
  const std::size_t yc = table.column(axes.y_column);
  std::vector<std::pair<double, double>> pts;
  for (const auto& row : table.rows) {
    double x = numeric(row[xc], axes.x_column);
    double y = numeric(row[yc], axes.y_column);
    if (axes.log_y) {
      if (y <= 0) throw Error("svg: log axis needs positive values");
      y = std::log10(y);
    }
    pts.emplace_back(x, y);
  }
  auto [xmin_it, xmax_it] = std::minmax_element(pts.begin(), pts.end());
  double xmin = xmin_it->first, xmax = xmax_it->first;
  double ymin = pts[0].second, ymax = pts[0].second;
  for (const auto& p : pts) {
    ymin = std::min(ymin, p.second);
    ymax = std::max(ymax, p.second);
  }
  if (xmax == xmin) xmax = xmin + 1;
  if (ymax == ymin) ymax = ymin + 1;

  const double w = 640, h = 400, left = 70, right = 20, top = 40, bottom = 50;
  auto sx = [&](double x) { return left + (x - xmin) / (xmax - xmin) * (w - left - right); };
  auto sy = [&](double y) { return h - bottom - (y - ymin) / (ymax - ymin) * (h - top - bottom); };

  std::string ylabel = axes.log_y ? "log10 " + axes.y_column : axes.y_column;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(w) << "\" height=\"" << fmt(h)
      << "\" viewBox=\"0 0 " << fmt(w) << " " << fmt(h) << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << fmt(w / 2) << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">" << escape(axes.title)
      << "</text>\n";
  out << "<line x1=\"" << fmt(left) << "\" y1=\"" << fmt(h - bottom) << "\" x2=\"" << fmt(w - right) << "\" y2=\""
      << fmt(h - bottom) << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << fmt(left) << "\" y1=\"" << fmt(top) << "\" x2=\"" << fmt(left) << "\" y2=\""
      << fmt(h - bottom) << "\" stroke=\"black\"/>\n";
  out << "<text x=\"" << fmt(left) << "\" y=\"" << fmt(h - bottom + 16) << "\" font-size=\"11\">" << label(xmin)
      << "</text>\n";
  out << "<text x=\"" << fmt(w - right) << "\" y=\"" << fmt(h - bottom + 16)
      << "\" text-anchor=\"end\" font-size=\"11\">" << label(xmax) << "</text>\n";
  out << "<text x=\"" << fmt(left - 4) << "\" y=\"" << fmt(h - bottom) << "\" text-anchor=\"end\" font-size=\"11\">"
      << label(ymin) << "</text>\n";
  out << "<text x=\"" << fmt(left - 4) << "\" y=\"" << fmt(top + 4) << "\" text-anchor=\"end\" font-size=\"11\">"
      << label(ymax) << "</text>\n";
  out << "<text x=\"" << fmt((left + w - right) / 2) << "\" y=\"" << fmt(h - 12)
      << "\" text-anchor=\"middle\" font-size=\"13\">" << escape(axes.x_column) << "</text>\n";
  out << "<text x=\"16\" y=\"" << fmt((top + h - bottom) / 2) << "\" text-anchor=\"middle\" font-size=\"13\" "
      << "transform=\"rotate(-90 16 " << fmt((top + h - bottom) / 2) << ")\">" << escape(ylabel) << "</text>\n";
  out << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\" points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out << " ";
    out << fmt(sx(pts[i].first)) << "," << fmt(sy(pts[i].second));
  }
  out << "\"/>\n</svg>\n";
  return out.str();
}

}  // namespace hypgrp::cli
