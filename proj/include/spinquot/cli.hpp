/*
 * Copyright 2026 The spinquot Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <ostream>

namespace spinquot::cli {

/// Exit codes of the command-line tool.
inline constexpr int kPass = 0;
inline constexpr int kFail = 1;
inline constexpr int kUsage = 2;

/// Parses argv and runs one command, writing the report to `out` and
/// diagnostics to `err`. When SPINQUOT_REPORT_DIR is set the JSON report is
/// also written there.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace spinquot::cli
