// Copyright 2026 The Concise Authors
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

#ifndef CONCISE_TEXTIO_HPP
#define CONCISE_TEXTIO_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace concise {

// Reads a whole file as raw bytes. Throws IoError on failure.
std::string read_file_bytes(const std::filesystem::path& path);

// Writes atomically: temp file in the same directory, then rename.
void write_file_atomic(const std::filesystem::path& path,
                       std::string_view content);

// Replaces bytes that do not form valid UTF-8 sequences with U+FFFD.
// Returns the number of replacements made. ASCII bytes (including all
// line terminators) are never touched.
std::size_t utf8_replace_invalid(std::string_view input, std::string& out);

// Splits on LF / CRLF / CR. A trailing terminator does not produce an
// extra empty line. Returned views point into `text`, terminators excluded.
std::vector<std::string_view> split_lines(std::string_view text);

// Strips trailing spaces, tabs and CR from one line.
std::string_view rstrip(std::string_view line);

// Glob matching over '/'-separated relative paths. Supports `*` and `?`
// within a path segment and `**` for any number of segments.
bool glob_match(std::string_view pattern, std::string_view path);

// True if a NUL byte occurs in the first `limit` bytes (binary sniff).
bool looks_binary(std::string_view head);

// Lowercases ASCII letters.
std::string ascii_lower(std::string_view s);

// Current time as "YYYY-MM-DDTHH:MM:SSZ" (UTC).
std::string utc_timestamp();

}  // namespace concise

#endif  // CONCISE_TEXTIO_HPP
