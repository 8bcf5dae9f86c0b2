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

#include "concise/cleaner.hpp"

#include "concise/errors.hpp"
#include "concise/textio.hpp"

namespace concise {

namespace {

bool is_ws(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v';
}

bool all_ws(std::string_view s) {
  for (char c : s)
    if (!is_ws(c)) return false;
  return true;
}

bool starts_at(std::string_view line, std::size_t pos, std::string_view tok) {
  return !tok.empty() && line.compare(pos, tok.size(), tok) == 0;
}

// Lexes one line under the carried state. Returns true if any code
// character (non-whitespace outside comments) was seen.
bool lex_line(std::string_view line, const LanguageProfile& profile,
              LexState& state) {
  bool has_code = false;
  std::size_t pos = 0;
  const std::size_t n = line.size();
  while (pos < n) {
    if (state.in_block()) {
      const auto& pair = profile.block_comment_pairs[state.block_pair];
      if (profile.nestable_block_comments && starts_at(line, pos, pair.first)) {
        ++state.block_depth;
        pos += pair.first.size();
      } else if (starts_at(line, pos, pair.second)) {
        if (--state.block_depth == 0) state.block_pair = -1;
        pos += pair.second.size();
      } else {
        ++pos;
      }
      continue;
    }
    if (state.in_string()) {
      const auto& d = profile.string_delimiters[state.string_delim];
      if (d.escape != '\0' && line[pos] == d.escape) {
        has_code = true;
        pos += 2;  // escaped char may fall off the line end; that is fine
      } else if (starts_at(line, pos, d.close)) {
        has_code = true;
        state.string_delim = -1;
        pos += d.close.size();
      } else {
        if (!is_ws(line[pos])) has_code = true;
        ++pos;
      }
      continue;
    }
    char c = line[pos];
    if (is_ws(c)) {
      ++pos;
      continue;
    }
    // Line comment swallows the rest of the line. Longest marker wins
    // so "--" is tried before "-" and the like.
    std::size_t marker_len = 0;
    for (const auto& m : profile.line_comment_markers)
      if (m.size() > marker_len && starts_at(line, pos, m))
        marker_len = m.size();
    if (marker_len > 0) break;

    int block_idx = -1;
    std::size_t block_len = 0;
    for (std::size_t i = 0; i < profile.block_comment_pairs.size(); ++i) {
      const auto& open = profile.block_comment_pairs[i].first;
      if (open.size() > block_len && starts_at(line, pos, open)) {
        block_idx = static_cast<int>(i);
        block_len = open.size();
      }
    }
    if (block_idx >= 0) {
      state.block_pair = block_idx;
      state.block_depth = 1;
      pos += block_len;
      continue;
    }

    int str_idx = -1;
    std::size_t str_len = 0;
    for (std::size_t i = 0; i < profile.string_delimiters.size(); ++i) {
      const auto& open = profile.string_delimiters[i].open;
      if (open.size() > str_len && starts_at(line, pos, open)) {
        str_idx = static_cast<int>(i);
        str_len = open.size();
      }
    }
    if (str_idx >= 0) {
      state.string_delim = str_idx;
      has_code = true;
      pos += str_len;
      continue;
    }

    has_code = true;
    ++pos;
  }
  return has_code;
}

}  // namespace

std::size_t classify_and_clean(std::string_view text,
                               const LanguageProfile& profile,
                               std::string& out,
                               std::vector<LineClass>* classes_out,
                               bool* unterminated_block) {
  LexState state;
  std::size_t kept = 0;
  for (std::string_view raw : split_lines(text)) {
    std::string_view line = rstrip(raw);
    LineClass cls;
    if (all_ws(line)) {
      cls = LineClass::kBlank;  // whitespace only, even mid-comment/string
    } else {
      cls = lex_line(line, profile, state) ? LineClass::kCode
                                           : LineClass::kCommentOnly;
    }
    if (cls == LineClass::kCode) {
      out.append(line);
      out.push_back('\n');
      ++kept;
    }
    if (classes_out) classes_out->push_back(cls);
  }
  if (unterminated_block) *unterminated_block = state.in_block();
  return kept;
}

std::vector<LineClass> classify_lines(std::string_view text,
                                      const LanguageProfile& profile) {
  std::vector<LineClass> classes;
  std::string discard;
  classify_and_clean(text, profile, discard, &classes, nullptr);
  return classes;
}

CleanedSample clean_texts(const std::vector<std::string>& file_texts,
                          const LanguageProfile& profile,
                          std::string system_id) {
  CleanedSample sample;
  sample.system_id = std::move(system_id);
  sample.language_id = profile.language_id;
  std::string decoded;
  for (const auto& raw : file_texts) {
    if (utf8_replace_invalid(raw, decoded) > 0) ++sample.decode_warnings;
    bool unterminated = false;
    sample.loc += classify_and_clean(decoded, profile, sample.cleaned_bytes,
                                     nullptr, &unterminated);
    if (unterminated) ++sample.unterminated_block_warnings;
    ++sample.files_included;
  }
  sample.original_bytes_count = sample.cleaned_bytes.size();
  return sample;
}

CleanedSample clean_sample(const std::vector<std::filesystem::path>& files,
                           const LanguageProfile& profile,
                           std::string system_id) {
  CleanedSample sample;
  sample.system_id = std::move(system_id);
  sample.language_id = profile.language_id;
  std::string decoded;
  for (const auto& path : files) {
    std::string raw = read_file_bytes(path);
    if (utf8_replace_invalid(raw, decoded) > 0) ++sample.decode_warnings;
    bool unterminated = false;
    sample.loc += classify_and_clean(decoded, profile, sample.cleaned_bytes,
                                     nullptr, &unterminated);
    if (unterminated) ++sample.unterminated_block_warnings;
    ++sample.files_included;
  }
  sample.original_bytes_count = sample.cleaned_bytes.size();
  return sample;
}

}  // namespace concise
