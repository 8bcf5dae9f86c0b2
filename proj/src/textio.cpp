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

#include "concise/textio.hpp"

#include <unistd.h>

#include <cstdio>
#include <ctime>
#include <fstream>
#include <random>
#include <system_error>

#include "concise/errors.hpp"

namespace concise {

namespace fs = std::filesystem;

std::string read_file_bytes(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open file: " + path.string());
  std::string data;
  in.seekg(0, std::ios::end);
  auto end = in.tellg();
  if (end > 0) data.reserve(static_cast<std::size_t>(end));
  in.seekg(0, std::ios::beg);
  data.assign(std::istreambuf_iterator<char>(in),
              std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("read failed: " + path.string());
  return data;
}

void write_file_atomic(const fs::path& path, std::string_view content) {
  fs::path dir = path.parent_path();
  if (dir.empty()) dir = ".";
  std::error_code ec;
  fs::create_directories(dir, ec);
  fs::path tmp = dir / (path.filename().string() + ".tmp." +
                        std::to_string(::getpid()) + "." +
                        std::to_string(std::random_device{}()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot create file: " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      fs::remove(tmp, ec);
      throw IoError("write failed: " + tmp.string());
    }
  }
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("rename failed for: " + path.string());
  }
}

std::size_t utf8_replace_invalid(std::string_view input, std::string& out) {
  static const char kReplacement[] = "\xEF\xBF\xBD";
  out.clear();
  out.reserve(input.size());
  std::size_t replaced = 0;
  std::size_t i = 0;
  const auto* p = reinterpret_cast<const unsigned char*>(input.data());
  const std::size_t n = input.size();
  while (i < n) {
    unsigned char c = p[i];
    if (c < 0x80) {
      out.push_back(static_cast<char>(c));
      ++i;
      continue;
    }
    std::size_t len = 0;
    unsigned cp_min = 0;
    if ((c & 0xE0) == 0xC0) { len = 2; cp_min = 0x80; }
    else if ((c & 0xF0) == 0xE0) { len = 3; cp_min = 0x800; }
    else if ((c & 0xF8) == 0xF0) { len = 4; cp_min = 0x10000; }
    if (len == 0 || i + len > n) {
      out.append(kReplacement, 3);
      ++replaced;
      ++i;
      continue;
    }
    unsigned cp = c & (0x7F >> len);
    bool ok = true;
    for (std::size_t k = 1; k < len; ++k) {
      if ((p[i + k] & 0xC0) != 0x80) { ok = false; break; }
      cp = (cp << 6) | (p[i + k] & 0x3F);
    }
    if (ok && (cp < cp_min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)))
      ok = false;
    if (ok) {
      out.append(input.substr(i, len));
      i += len;
    } else {
      out.append(kReplacement, 3);
      ++replaced;
      ++i;
    }
  }
  return replaced;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  const std::size_t n = text.size();
  for (std::size_t i = 0; i < n; ++i) {
    char c = text[i];
    if (c == '\n') {
      lines.push_back(text.substr(start, i - start));
      start = i + 1;
    } else if (c == '\r') {
      lines.push_back(text.substr(start, i - start));
      if (i + 1 < n && text[i + 1] == '\n') ++i;
      start = i + 1;
    }
  }
  if (start < n) lines.push_back(text.substr(start));
  return lines;
}

std::string_view rstrip(std::string_view line) {
  std::size_t end = line.size();
  while (end > 0) {
    char c = line[end - 1];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v')
      --end;
    else
      break;
  }
  return line.substr(0, end);
}

namespace {

bool segment_match(std::string_view pat, std::string_view seg) {
  std::size_t pi = 0, si = 0;
  std::size_t star = std::string_view::npos, match = 0;
  while (si < seg.size()) {
    if (pi < pat.size() && (pat[pi] == '?' || pat[pi] == seg[si])) {
      ++pi;
      ++si;
    } else if (pi < pat.size() && pat[pi] == '*') {
      star = pi++;
      match = si;
    } else if (star != std::string_view::npos) {
      pi = star + 1;
      si = ++match;
    } else {
      return false;
    }
  }
  while (pi < pat.size() && pat[pi] == '*') ++pi;
  return pi == pat.size();
}

std::vector<std::string_view> split_segments(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == '/') {
      if (i > start) out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

bool match_segments(const std::vector<std::string_view>& pat, std::size_t pi,
                    const std::vector<std::string_view>& segs, std::size_t si) {
  while (pi < pat.size()) {
    if (pat[pi] == "**") {
      for (std::size_t skip = si; skip <= segs.size(); ++skip)
        if (match_segments(pat, pi + 1, segs, skip)) return true;
      return false;
    }
    if (si >= segs.size() || !segment_match(pat[pi], segs[si])) return false;
    ++pi;
    ++si;
  }
  return si == segs.size();
}

}  // namespace

bool glob_match(std::string_view pattern, std::string_view path) {
  return match_segments(split_segments(pattern), 0, split_segments(path), 0);
}

bool looks_binary(std::string_view head) {
  return head.find('\0') != std::string_view::npos;
}

std::string ascii_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out)
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  return out;
}

std::string utc_timestamp() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace concise
