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

#ifndef CONCISE_LANGUAGE_HPP
#define CONCISE_LANGUAGE_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace concise {

// A string literal form: opening/closing delimiters plus the escape
// character that neutralizes the closer ('\0' = no escape). Multi-line
// forms (triple quotes) are listed as ordinary delimiter pairs.
struct StringDelimiter {
  std::string open;
  std::string close;
  char escape = '\0';  // '\0' means the language form has no escape char
};

// Everything the cleaner and the McCabe estimator need to know about
// one language. Detection is by filename suffix only.
struct LanguageProfile {
  std::string language_id;  // canonical lowercase name
  std::vector<std::string> extensions;  // lowercase, leading dot (".d.ts")
  std::vector<std::string> line_comment_markers;
  std::vector<std::pair<std::string, std::string>> block_comment_pairs;
  std::vector<StringDelimiter> string_delimiters;
  bool nestable_block_comments = false;
};

// Validated, immutable set of profiles with a suffix lookup table.
class ProfileSet {
 public:
  // The built-in set: java, csharp, python, javascript, typescript,
  // shell, c, cpp, go, ruby, php, sql, kotlin, swift, rust.
  static ProfileSet builtin_defaults();

  // Parses a JSON profile configuration and overlays it on the defaults.
  // An entry whose "language" matches an existing profile merges into it:
  // "extensions" extend the existing list, other fields replace when
  // present. Unknown ids define new languages. Throws ConfigError on
  // malformed input or invariant violations (duplicate extension names
  // both claiming profiles).
  static ProfileSet load(std::string_view config_json);

  // As above but from a file; empty path yields the defaults.
  static ProfileSet load_file(const std::filesystem::path& config_path);

  const std::vector<LanguageProfile>& profiles() const { return profiles_; }
  const LanguageProfile* find(std::string_view language_id) const;

  // Longest registered suffix wins; the match is case-insensitive.
  // nullopt = UNKNOWN.
  std::optional<std::string> detect_language(
      const std::filesystem::path& path) const;

 private:
  static ProfileSet from_profiles(std::vector<LanguageProfile> profiles);
  void build_index();

  std::vector<LanguageProfile> profiles_;
  // (suffix, language_id), sorted by suffix length descending
  std::vector<std::pair<std::string, std::string>> suffix_index_;
};

}  // namespace concise

#endif  // CONCISE_LANGUAGE_HPP
