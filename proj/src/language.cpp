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

#include "concise/language.hpp"

#include <algorithm>
#include <map>

#include <json.hpp>

#include "concise/errors.hpp"
#include "concise/textio.hpp"

namespace concise {

namespace {

using json = nlohmann::json;

LanguageProfile make_profile(
    std::string id, std::vector<std::string> exts,
    std::vector<std::string> line_markers,
    std::vector<std::pair<std::string, std::string>> blocks,
    std::vector<StringDelimiter> strings, bool nestable = false) {
  LanguageProfile p;
  p.language_id = std::move(id);
  p.extensions = std::move(exts);
  p.line_comment_markers = std::move(line_markers);
  p.block_comment_pairs = std::move(blocks);
  p.string_delimiters = std::move(strings);
  p.nestable_block_comments = nestable;
  return p;
}

const std::vector<StringDelimiter> kCFamilyStrings = {
    {"\"", "\"", '\\'}, {"'", "'", '\\'}};

std::vector<LanguageProfile> default_profiles() {
  std::vector<LanguageProfile> out;
  out.push_back(make_profile("java", {".java"}, {"//"}, {{"/*", "*/"}},
                             kCFamilyStrings));
  out.push_back(make_profile("csharp", {".cs"}, {"//"}, {{"/*", "*/"}},
                             kCFamilyStrings));
  out.push_back(make_profile(
      "python", {".py", ".pyi"}, {"#"}, {},
      {{"\"\"\"", "\"\"\"", '\\'},
       {"'''", "'''", '\\'},
       {"\"", "\"", '\\'},
       {"'", "'", '\\'}}));
  out.push_back(make_profile(
      "javascript", {".js", ".mjs", ".cjs", ".jsx"}, {"//"}, {{"/*", "*/"}},
      {{"\"", "\"", '\\'}, {"'", "'", '\\'}, {"`", "`", '\\'}}));
  out.push_back(make_profile(
      "typescript", {".ts", ".tsx", ".d.ts", ".mts", ".cts"}, {"//"},
      {{"/*", "*/"}},
      {{"\"", "\"", '\\'}, {"'", "'", '\\'}, {"`", "`", '\\'}}));
  out.push_back(make_profile(
      "shell", {".sh", ".bash", ".zsh", ".ksh"}, {"#"}, {},
      {{"\"", "\"", '\\'}, {"'", "'", '\0'}}));
  out.push_back(make_profile("c", {".c", ".h"}, {"//"}, {{"/*", "*/"}},
                             kCFamilyStrings));
  out.push_back(make_profile(
      "cpp", {".cpp", ".cc", ".cxx", ".hpp", ".hh", ".hxx", ".ipp", ".inl"},
      {"//"}, {{"/*", "*/"}}, kCFamilyStrings));
  out.push_back(make_profile(
      "go", {".go"}, {"//"}, {{"/*", "*/"}},
      {{"\"", "\"", '\\'}, {"'", "'", '\\'}, {"`", "`", '\0'}}));
  out.push_back(make_profile(
      "ruby", {".rb", ".rake"}, {"#"}, {{"=begin", "=end"}},
      {{"\"", "\"", '\\'}, {"'", "'", '\\'}}));
  out.push_back(make_profile(
      "php", {".php", ".php5", ".phtml"}, {"//", "#"}, {{"/*", "*/"}},
      {{"\"", "\"", '\\'}, {"'", "'", '\\'}}));
  out.push_back(make_profile("sql", {".sql"}, {"--"}, {{"/*", "*/"}},
                             {{"'", "'", '\0'}, {"\"", "\"", '\0'}}));
  out.push_back(make_profile(
      "kotlin", {".kt", ".kts"}, {"//"}, {{"/*", "*/"}},
      {{"\"\"\"", "\"\"\"", '\0'}, {"\"", "\"", '\\'}, {"'", "'", '\\'}},
      /*nestable=*/true));
  out.push_back(make_profile("swift", {".swift"}, {"//"}, {{"/*", "*/"}},
                             {{"\"", "\"", '\\'}}, /*nestable=*/true));
  out.push_back(make_profile("rust", {".rs"}, {"//"}, {{"/*", "*/"}},
                             {{"\"", "\"", '\\'}}, /*nestable=*/true));
  return out;
}

void validate_profile(const LanguageProfile& p) {
  if (p.language_id.empty())
    throw ConfigError("language profile with empty language_id");
  for (const auto& [open, close] : p.block_comment_pairs) {
    if (open.empty() || close.empty())
      throw ConfigError("block comment pair with empty open or close in '" +
                        p.language_id + "'");
  }
  for (const auto& e : p.extensions) {
    if (e.empty() || e[0] != '.')
      throw ConfigError("extension '" + e + "' in '" + p.language_id +
                        "' must start with '.'");
  }
}

void merge_from_json(LanguageProfile& p, const json& j) {
  if (j.contains("extensions")) {
    for (const auto& e : j.at("extensions")) {
      std::string ext = ascii_lower(e.get<std::string>());
      if (std::find(p.extensions.begin(), p.extensions.end(), ext) ==
          p.extensions.end())
        p.extensions.push_back(ext);
    }
  }
  if (j.contains("line_comment_markers")) {
    p.line_comment_markers.clear();
    for (const auto& m : j.at("line_comment_markers"))
      p.line_comment_markers.push_back(m.get<std::string>());
  }
  if (j.contains("block_comment_pairs")) {
    p.block_comment_pairs.clear();
    for (const auto& b : j.at("block_comment_pairs")) {
      if (!b.is_array() || b.size() != 2)
        throw ConfigError("block_comment_pairs entries must be [open, close]");
      p.block_comment_pairs.emplace_back(b[0].get<std::string>(),
                                         b[1].get<std::string>());
    }
  }
  if (j.contains("string_delimiters")) {
    p.string_delimiters.clear();
    for (const auto& s : j.at("string_delimiters")) {
      if (!s.is_array() || s.size() < 2)
        throw ConfigError(
            "string_delimiters entries must be [open, close, escape?]");
      StringDelimiter d;
      d.open = s[0].get<std::string>();
      d.close = s[1].get<std::string>();
      if (s.size() > 2 && !s[2].is_null()) {
        std::string esc = s[2].get<std::string>();
        d.escape = esc.empty() ? '\0' : esc[0];
      }
      p.string_delimiters.push_back(std::move(d));
    }
  }
  if (j.contains("nestable_block_comments"))
    p.nestable_block_comments = j.at("nestable_block_comments").get<bool>();
}

}  // namespace

ProfileSet ProfileSet::from_profiles(std::vector<LanguageProfile> profiles) {
  ProfileSet set;
  set.profiles_ = std::move(profiles);
  std::map<std::string, std::string> seen_ext;
  std::map<std::string, int> seen_id;
  for (auto& p : set.profiles_) {
    validate_profile(p);
    if (++seen_id[p.language_id] > 1)
      throw ConfigError("duplicate language_id '" + p.language_id + "'");
    for (auto& e : p.extensions) {
      e = ascii_lower(e);
      auto [it, inserted] = seen_ext.emplace(e, p.language_id);
      if (!inserted)
        throw ConfigError("extension '" + e + "' claimed by both '" +
                          it->second + "' and '" + p.language_id + "'");
    }
  }
  set.build_index();
  return set;
}

void ProfileSet::build_index() {
  suffix_index_.clear();
  for (const auto& p : profiles_)
    for (const auto& e : p.extensions)
      suffix_index_.emplace_back(e, p.language_id);
  std::sort(suffix_index_.begin(), suffix_index_.end(),
            [](const auto& a, const auto& b) {
              if (a.first.size() != b.first.size())
                return a.first.size() > b.first.size();
              return a.first < b.first;
            });
}

ProfileSet ProfileSet::builtin_defaults() {
  return from_profiles(default_profiles());
}

ProfileSet ProfileSet::load(std::string_view config_json) {
  if (config_json.empty()) return builtin_defaults();
  json doc;
  try {
    doc = json::parse(config_json);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("profile config parse error: ") + e.what());
  }
  std::vector<LanguageProfile> profiles = default_profiles();
  if (!doc.is_object())
    throw ConfigError("profile config must be a JSON object");
  if (doc.contains("profiles")) {
    for (const auto& entry : doc.at("profiles")) {
      if (!entry.is_object() || !entry.contains("language"))
        throw ConfigError("each profile entry needs a \"language\" field");
      std::string id = ascii_lower(entry.at("language").get<std::string>());
      auto it = std::find_if(
          profiles.begin(), profiles.end(),
          [&](const LanguageProfile& p) { return p.language_id == id; });
      if (it != profiles.end()) {
        merge_from_json(*it, entry);
      } else {
        LanguageProfile p;
        p.language_id = id;
        merge_from_json(p, entry);
        profiles.push_back(std::move(p));
      }
    }
  }
  return from_profiles(std::move(profiles));
}

ProfileSet ProfileSet::load_file(const std::filesystem::path& config_path) {
  if (config_path.empty()) return builtin_defaults();
  return load(read_file_bytes(config_path));
}

const LanguageProfile* ProfileSet::find(std::string_view language_id) const {
  for (const auto& p : profiles_)
    if (p.language_id == language_id) return &p;
  return nullptr;
}

std::optional<std::string> ProfileSet::detect_language(
    const std::filesystem::path& path) const {
  std::string name = ascii_lower(path.filename().string());
  for (const auto& [suffix, lang] : suffix_index_) {
    if (name.size() > suffix.size() &&
        name.compare(name.size() - suffix.size(), suffix.size(), suffix) == 0)
      return lang;
  }
  return std::nullopt;
}

}  // namespace concise
