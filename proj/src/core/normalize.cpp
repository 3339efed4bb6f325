// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 cohort-miner developers

#include "core/normalize.hpp"

#include <cctype>
#include <fstream>

#include "core/error.hpp"
#include "core/stemmer.hpp"

namespace cohortminer {
namespace {

bool is_ascii_alnum(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
}

bool is_url(const std::string& tok) {
  return tok.find("://") != std::string::npos || tok.rfind("www.", 0) == 0;
}

bool is_handle(const std::string& tok) {
  return tok.size() > 1 && tok[0] == '@';
}

bool guard_protected(const std::string& tok) {
  if (!tok.empty()) {
    bool all_digits = true;
    for (char c : tok)
      if (c < '0' || c > '9') {
        all_digits = false;
        break;
      }
    if (all_digits) return true;
  }
  static const std::unordered_set<std::string> kGuard = {
      "pregnant", "pregnancy", "week", "weeks", "month", "months"};
  return kGuard.count(tok) > 0;
}

void load_list(const std::string& path, std::unordered_set<std::string>& out,
               const char* what) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::io, std::string("cannot open ") + what + " file: " + path);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    out.insert(line);
  }
}

}  // namespace

TextConfig TextConfig::load(const std::string& stopwords_path,
                            const std::string& emoticons_path) {
  TextConfig cfg;
  load_list(stopwords_path, cfg.stopwords, "stopword");
  load_list(emoticons_path, cfg.emoticons, "emoticon");
  return cfg;
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t start = i;
    while (i < n && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) break;

    std::string tok(text.substr(start, i - start));
    for (char& c : tok)
      if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');

    if (is_url(tok) || is_handle(tok)) {
      out.push_back(std::move(tok));
      continue;
    }

    while (!tok.empty() && tok.front() == '#') tok.erase(tok.begin());

    bool has_alnum = false;
    for (char c : tok)
      if (is_ascii_alnum(c)) {
        has_alnum = true;
        break;
      }
    if (!has_alnum) {
      if (!tok.empty()) out.push_back(std::move(tok));
      continue;
    }

    std::size_t b = 0, e = tok.size();
    while (b < e && !is_ascii_alnum(tok[b]) &&
           static_cast<unsigned char>(tok[b]) < 0x80)
      ++b;
    while (e > b && !is_ascii_alnum(tok[e - 1]) &&
           static_cast<unsigned char>(tok[e - 1]) < 0x80)
      --e;
    if (e > b) out.push_back(tok.substr(b, e - b));
  }
  return out;
}

CleanResult clean(const std::vector<std::string>& tokens, const TextConfig& config) {
  CleanResult result;
  result.tokens.reserve(tokens.size());
  for (const std::string& tok : tokens) {
    if (is_url(tok)) {
      ++result.removed.url;
    } else if (is_handle(tok)) {
      ++result.removed.handle;
    } else if (config.emoticons.count(tok)) {
      ++result.removed.emoticon;
    } else if (config.stopwords.count(tok) && !guard_protected(tok)) {
      ++result.removed.stopword;
    } else {
      result.tokens.push_back(tok);
    }
  }
  return result;
}

TokenizedPost analyze(const std::string& post_id, std::string_view text,
                      const TextConfig& config) {
  TokenizedPost out;
  out.post_id = post_id;
  CleanResult cleaned = clean(tokenize(text), config);
  out.removed = cleaned.removed;
  out.tokens.reserve(cleaned.tokens.size());
  for (std::size_t i = 0; i < cleaned.tokens.size(); ++i) {
    Token t;
    t.surface = std::move(cleaned.tokens[i]);
    t.stem = porter_stem(t.surface);
    t.position = i;
    out.tokens.push_back(std::move(t));
  }
  return out;
}

std::vector<std::string> surfaces(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const Token& t : tokens) out.push_back(t.surface);
  return out;
}

}  // namespace cohortminer
