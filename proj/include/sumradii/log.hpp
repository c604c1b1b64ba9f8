// Copyright 2026 The colorful-radii Authors
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

#pragma once

#include <cstdlib>
#include <iostream>
#include <string>
#include <string_view>

namespace sumradii {

enum class LogLevel { kDebug = 0, kInfo = 1, kWarn = 2, kError = 3, kOff = 4 };

// Level comes from COLORFUL_RADII_LOG (debug|info|warn|error|off); default warn.
inline LogLevel log_level() {
  static const LogLevel level = [] {
    const char* env = std::getenv("COLORFUL_RADII_LOG");
    if (env == nullptr) return LogLevel::kWarn;
    const std::string_view v(env);
    if (v == "debug") return LogLevel::kDebug;
    if (v == "info") return LogLevel::kInfo;
    if (v == "warn") return LogLevel::kWarn;
    if (v == "error") return LogLevel::kError;
    if (v == "off") return LogLevel::kOff;
    return LogLevel::kWarn;
  }();
  return level;
}

inline void log(LogLevel level, std::string_view msg) {
  if (level < log_level()) return;
  static constexpr const char* names[] = {"debug", "info", "warn", "error"};
  std::cerr << "[colorful-radii:" << names[static_cast<int>(level)] << "] " << msg << "\n";
}

inline void log_debug(std::string_view msg) { log(LogLevel::kDebug, msg); }
inline void log_info(std::string_view msg) { log(LogLevel::kInfo, msg); }
inline void log_warn(std::string_view msg) { log(LogLevel::kWarn, msg); }
inline void log_error(std::string_view msg) { log(LogLevel::kError, msg); }

}  // namespace sumradii
