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

#ifndef HYPGRP_TOOLS_CLI_HPP
#define HYPGRP_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace hypgrp::cli {

// args excludes the program name. Returns 0 on success, 1 on domain errors
// and 2 on usage errors; messages for both go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hypgrp::cli

#endif  // HYPGRP_TOOLS_CLI_HPP
