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

#ifndef CONCISE_CORPUS_HPP
#define CONCISE_CORPUS_HPP

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "concise/language.hpp"

namespace concise {

struct ScanOptions {
  bool follow_symlinks = false;
  std::vector<std::string> exclude_globs;  // matched against root-relative paths
  // When set, each root is itself one system instead of one system per
  // immediate child directory.
  bool single_system = false;
};

struct SystemEntry {
  std::string system_id;
  std::string base_dir;  // absolute; file paths below are relative to it
  // language_id -> ordered (lexicographic) relative paths, '/' separators
  std::map<std::string, std::vector<std::string>> files_by_language;
};

struct CorpusManifest {
  std::vector<SystemEntry> systems;              // sorted by system_id
  std::vector<std::pair<std::string, std::string>> skipped;  // (path, reason)
};

// Walks the roots and assigns every regular file to exactly one
// (system, language) pair or to `skipped` with a reason ("binary",
// "excluded", "no-language", "unreadable", "outside-system").
// The result is a pure function of tree content and options: entries are
// order-normalized before return. Throws IoError when a root is missing
// or unreadable.
CorpusManifest scan_corpus(const std::vector<std::filesystem::path>& roots,
                           const ProfileSet& profiles,
                           const ScanOptions& options = {});

std::string manifest_to_json(const CorpusManifest& m);
CorpusManifest manifest_from_json(std::string_view text);

}  // namespace concise

#endif  // CONCISE_CORPUS_HPP
