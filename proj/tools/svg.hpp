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

#ifndef HYPGRP_TOOLS_SVG_HPP
#define HYPGRP_TOOLS_SVG_HPP

#include <string>
#include <string_view>
#include <vector>

namespace hypgrp::cli {

// Header plus rows of cells, as read from our CSV output (no quoting).
struct CsvTable {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  static CsvTable parse(std::string_view text);
  std::size_t column(const std::string& name) const;
};

struct AxesSpec {
  std::string x_column;
  std::string y_column;
  std::string title;
  // Plot log10 of the y values.
  bool log_y = false;
};

// Standalone SVG line chart. Throws hypgrp::Error on fewer than two rows,
// unknown columns or non-numeric cells.
std::string emit_svg(const CsvTable& table, const AxesSpec& axes);

}  // namespace hypgrp::cli

#endif  // HYPGRP_TOOLS_SVG_HPP
