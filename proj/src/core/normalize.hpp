// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 cohort-miner developers

#ifndef COHORTMINER_CORE_NORMALIZE_HPP_
#define COHORTMINER_CORE_NORMALIZE_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace cohortminer {

struct Token {
  std::string surface;   // lowercased, punctuation-trimmed
  std::string stem;      // Porter stem of surface
  std::size_t position;  // index in the post-removal sequence
};

struct RemovalCounts {
  std::size_t url = 0;
  std::size_t handle = 0;
  std::size_t emoticon = 0;
  std::size_t stopword = 0;

  std::size_t total() const { return url + handle + emoticon + stopword; }
};

struct TokenizedPost {
  std::string post_id;
  std::vector<Token> tokens;
  RemovalCounts removed;
};

// Stopword and emoticon lists. Both files are one entry per line, UTF-8,
// '#' starts a comment.
struct TextConfig {
  std::unordered_set<std::string> stopwords;
  std::unordered_set<std::string> emoticons;

  static TextConfig load(const std::string& stopwords_path,
                         const std::string& emoticons_path);
};

// Whitespace split, lowercase, strip edge punctuation (interior apostrophes
// survive: "i'm" stays one token), drop the '#' of hashtags but keep the
// word. URL-shaped and @handle tokens pass through untouched so clean() can
// count them; tokens with no alphanumerics at all (candidate emoticons) also
// pass through verbatim.
std::vector<std::string> tokenize(std::string_view text);

struct CleanResult {
  std::vector<std::string> tokens;
  RemovalCounts removed;
};

// Removes URLs, @handles, listed emoticons and listed stopwords. Numerals and
// the announcement-critical words {pregnant, pregnancy, week, weeks, month,
// months} are never removed, whatever the stopword list says.
CleanResult clean(const std::vector<std::string>& tokens, const TextConfig& config);

// tokenize + clean + stem in one go.
TokenizedPost analyze(const std::string& post_id, std::string_view text,
                      const TextConfig& config);

// Surfaces of a token sequence, for the matching code paths.
std::vector<std::string> surfaces(const std::vector<Token>& tokens);

}  // namespace cohortminer

#endif  // COHORTMINER_CORE_NORMALIZE_HPP_
