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

#include "concise/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include <json.hpp>

#include "concise/errors.hpp"
#include "concise/textio.hpp"

namespace concise {

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

constexpr std::size_t kBinarySniffBytes = 8 * 1024;

std::string generic_rel(const fs::path& p, const fs::path& base) {
  return p.lexically_relative(base).generic_string();
}

bool is_binary_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw IoError("cannot open");
  char buf[kBinarySniffBytes];
  in.read(buf, sizeof(buf));
  std::streamsize got = in.gcount();
  return looks_binary(std::string_view(buf, static_cast<std::size_t>(got)));
}

struct Walker {
  const ProfileSet& profiles;
  const ScanOptions& options;
  const fs::path& root;
  SystemEntry* system;
  CorpusManifest* manifest;

  void visit_dir(const fs::path& dir) {
    std::error_code ec;
    fs::directory_iterator it(dir, fs::directory_options::none, ec);
    if (ec) {
      manifest->skipped.emplace_back(dir.string(), "unreadable");
      return;
    }
    for (const auto& entry : it) {
      visit_entry(entry);
    }
  }

  void visit_entry(const fs::directory_entry& entry) {
    std::error_code ec;
    const fs::path& p = entry.path();
    bool is_symlink = entry.is_symlink(ec);
    if (ec) {
      manifest->skipped.emplace_back(p.string(), "unreadable");
      return;
    }
    if (is_symlink && !options.follow_symlinks) {
      manifest->skipped.emplace_back(p.string(), "symlink");
      return;
    }
    bool is_dir = entry.is_directory(ec);
    if (!ec && is_dir) {
      visit_dir(p);
      return;
    }
    bool is_reg = entry.is_regular_file(ec);
    if (ec || !is_reg) {
      manifest->skipped.emplace_back(p.string(), "not-a-regular-file");
      return;
    }
    std::string rel = generic_rel(p, root);
    for (const auto& g : options.exclude_globs) {
      if (glob_match(g, rel)) {
        manifest->skipped.emplace_back(p.string(), "excluded");
        return;
      }
    }
    auto lang = profiles.detect_language(p);
    if (!lang) {
      manifest->skipped.emplace_back(p.string(), "no-language");
      return;
    }
    try {
      if (is_binary_file(p)) {
        manifest->skipped.emplace_back(p.string(), "binary");
        return;
      }
    } catch (const IoError&) {
      manifest->skipped.emplace_back(p.string(), "unreadable");
      return;
    }
    system->files_by_language[*lang].push_back(
        generic_rel(p, system->base_dir));
  }
};

void normalize(CorpusManifest& m) {
  std::sort(m.systems.begin(), m.systems.end(),
            [](const SystemEntry& a, const SystemEntry& b) {
              return a.system_id < b.system_id;
            });
  for (auto& sys : m.systems)
    for (auto& [lang, files] : sys.files_by_language)
      std::sort(files.begin(), files.end());
  std::sort(m.skipped.begin(), m.skipped.end());
}

}  // namespace

CorpusManifest scan_corpus(const std::vector<fs::path>& roots,
                           const ProfileSet& profiles,
                           const ScanOptions& options) {
  CorpusManifest manifest;
  std::set<std::string> used_ids;
  auto unique_id = [&](std::string base) {
    std::string id = base;
    int n = 2;
    while (!used_ids.insert(id).second) id = base + "~" + std::to_string(n++);
    return id;
  };

  for (const auto& raw_root : roots) {
    std::error_code ec;
    fs::path root = fs::absolute(raw_root, ec);
    if (ec || !fs::exists(root))
      throw IoError("root does not exist: " + raw_root.string());
    if (!fs::is_directory(root))
      throw IoError("root is not a directory: " + raw_root.string());

    if (options.single_system) {
      SystemEntry sys;
      sys.system_id = unique_id(root.filename().string().empty()
                                    ? root.string()
                                    : root.filename().string());
      sys.base_dir = root.string();
      Walker w{profiles, options, root, &sys, &manifest};
      w.visit_dir(root);
      manifest.systems.push_back(std::move(sys));
      continue;
    }

    fs::directory_iterator it(root, fs::directory_options::none, ec);
    if (ec) throw IoError("root is not readable: " + raw_root.string());
    std::vector<fs::path> children;
    for (const auto& entry : it) {
      std::error_code ec2;
      if (entry.is_directory(ec2) &&
          (!entry.is_symlink(ec2) || options.follow_symlinks)) {
        children.push_back(entry.path());
      } else if (entry.is_regular_file(ec2)) {
        manifest.skipped.emplace_back(entry.path().string(), "outside-system");
      }
    }
    std::sort(children.begin(), children.end());
    for (const auto& child : children) {
      SystemEntry sys;
      sys.system_id = unique_id(child.filename().string());
      sys.base_dir = child.string();
      Walker w{profiles, options, root, &sys, &manifest};
      w.visit_dir(child);
      manifest.systems.push_back(std::move(sys));
    }
  }
  normalize(manifest);
  return manifest;
}

std::string manifest_to_json(const CorpusManifest& m) {
  json doc;
  doc["schema_version"] = 1;
  doc["kind"] = "corpus-manifest";
  json systems = json::array();
  for (const auto& sys : m.systems) {
    json entry;
    entry["system_id"] = sys.system_id;
    entry["base_dir"] = sys.base_dir;
    json langs = json::object();
    for (const auto& [lang, files] : sys.files_by_language)
      langs[lang] = files;
    entry["languages"] = langs;
    systems.push_back(entry);
  }
  doc["systems"] = systems;
  json skipped = json::array();
  for (const auto& [path, reason] : m.skipped)
    skipped.push_back(json::array({path, reason}));
  doc["skipped"] = skipped;
  return doc.dump(2) + "\n";
}

CorpusManifest manifest_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw IoError(std::string("manifest parse error: ") + e.what());
  }
  if (!doc.is_object() || doc.value("kind", "") != "corpus-manifest")
    throw IoError("not a corpus manifest document");
  if (doc.value("schema_version", 0) != 1)
    throw IoError("manifest schema_version " +
                  doc.value("schema_version", json(0)).dump() +
                  " unsupported (expected 1)");
  CorpusManifest m;
  for (const auto& entry : doc.at("systems")) {
    SystemEntry sys;
    sys.system_id = entry.at("system_id").get<std::string>();
    sys.base_dir = entry.at("base_dir").get<std::string>();
    for (const auto& [lang, files] : entry.at("languages").items()) {
      std::vector<std::string> v;
      for (const auto& f : files) v.push_back(f.get<std::string>());
      sys.files_by_language[lang] = std::move(v);
    }
    m.systems.push_back(std::move(sys));
  }
  for (const auto& s : doc.at("skipped"))
    m.skipped.emplace_back(s.at(0).get<std::string>(),
                           s.at(1).get<std::string>());
  return m;
}

}  // namespace concise
