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

#ifndef CONCISE_CLEANER_HPP
#define CONCISE_CLEANER_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "concise/language.hpp"

namespace concise {

enum class LineClass : char {
  kCode = 'C',
  kCommentOnly = 'M',
  kBlank = 'B',
};

// Lexer state carried across lines: inside a (possibly nested) block
// comment, or inside a string literal.
struct LexState {
  int block_pair = -1;   // index into profile.block_comment_pairs, -1 = none
  int block_depth = 0;
  int string_delim = -1; // index into profile.string_delimiters, -1 = none
  bool in_block() const { return block_pair >= 0; }
  bool in_string() const { return string_delim >= 0; }
};

// Classifies every line of `text`. A line is BLANK iff it contains only
// whitespace; COMMENT_ONLY iff the lexer finds no code characters outside
// comments; CODE otherwise. String literal content is code, and comment
// markers inside string literals are not comments. Block-comment state
// carries across lines. Total: every line gets exactly one class.
std::vector<LineClass> classify_lines(std::string_view text,
                                      const LanguageProfile& profile);

// Variant used by clean_sample: classifies lines, appends retained CODE
// lines (trailing whitespace stripped, LF terminators) to `out`, updates
// `state` across the file boundary, and reports how many lines were kept.
// When `state` is null a fresh state per call is used.
std::size_t classify_and_clean(std::string_view text,
                               const LanguageProfile& profile,
                               std::string& out,
                               std::vector<LineClass>* classes_out,
                               bool* unterminated_block);

struct CleanedSample {
  std::string system_id;
  std::string language_id;
  std::string cleaned_bytes;   // retained lines joined by single LF
  std::uint64_t loc = 0;
  std::uint64_t original_bytes_count = 0;  // == cleaned_bytes.size()
  std::uint32_t files_included = 0;
  std::uint32_t decode_warnings = 0;       // files with invalid UTF-8 bytes
  std::uint32_t unterminated_block_warnings = 0;
};

// Cleans one (system, language) sample: reads every file (UTF-8 with
// invalid bytes replaced), retains exactly the CODE lines, concatenates
// in the given order. No archive container or padding is introduced.
CleanedSample clean_sample(const std::vector<std::filesystem::path>& files,
                           const LanguageProfile& profile,
                           std::string system_id = {});

// Same cleaning over in-memory file contents (bindings and tests).
CleanedSample clean_texts(const std::vector<std::string>& file_texts,
                          const LanguageProfile& profile,
                          std::string system_id = {});

}  // namespace concise

#endif  // CONCISE_CLEANER_HPP
