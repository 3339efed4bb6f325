// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 cohort-miner developers

#include "core/detect.hpp"

#include <fstream>
#include <sstream>
#include <unordered_set>

#include "core/error.hpp"
#include "core/numberwords.hpp"

namespace cohortminer {
namespace {

constexpr std::size_t kWildcardCap = 4;

PatternElement parse_element(const std::string& word, const std::string& path,
                             std::uint64_t line_no) {
  PatternElement el;
  if (word.size() >= 4 && word.rfind("<*", 0) == 0 && word.back() == '>') {
    std::string body = word.substr(2, word.size() - 3);
    auto colon = body.find(':');
    if (colon == std::string::npos)
      fail(ErrorKind::format, path + ":" + std::to_string(line_no) +
                                  ": wildcard needs <*min:max> bounds");
    std::size_t lo = 0, hi = 0;
    try {
      lo = std::stoul(body.substr(0, colon));
      hi = std::stoul(body.substr(colon + 1));
    } catch (const std::exception&) {
      fail(ErrorKind::format,
           path + ":" + std::to_string(line_no) + ": bad wildcard bounds: " + word);
    }
    if (lo > hi || hi > kWildcardCap)
      fail(ErrorKind::format, path + ":" + std::to_string(line_no) +
                                  ": wildcard bounds out of range (max " +
                                  std::to_string(kWildcardCap) + "): " + word);
    el.wildcard = true;
    el.min_tokens = lo;
    el.max_tokens = hi;
    return el;
  }
  std::size_t start = 0;
  while (start <= word.size()) {
    auto bar = word.find('|', start);
    std::string alt = word.substr(start, bar == std::string::npos ? bar : bar - start);
    if (alt.empty())
      fail(ErrorKind::format,
           path + ":" + std::to_string(line_no) + ": empty alternative in: " + word);
    el.alternatives.push_back(std::move(alt));
    if (bar == std::string::npos) break;
    start = bar + 1;
  }
  return el;
}

// Tries a rule at one start offset; on success sets the spans.
bool match_at(std::span<const std::string> tokens, const PatternRule& rule,
              std::size_t start, std::size_t& end_out, std::size_t& wc_begin,
              std::size_t& wc_end) {
  // Exactly one wildcard, so trying each gap width in turn is cheap.
  std::size_t wc_index = 0;
  for (std::size_t i = 0; i < rule.elements.size(); ++i)
    if (rule.elements[i].wildcard) wc_index = i;
  const PatternElement& wc = rule.elements[wc_index];

  for (std::size_t gap = wc.min_tokens; gap <= wc.max_tokens; ++gap) {
    std::size_t pos = start;
    bool ok = true;
    std::size_t begin_gap = 0;
    for (std::size_t i = 0; i < rule.elements.size() && ok; ++i) {
      const PatternElement& el = rule.elements[i];
      if (el.wildcard) {
        begin_gap = pos;
        pos += gap;
        if (pos > tokens.size()) ok = false;
      } else {
        if (pos >= tokens.size()) {
          ok = false;
          break;
        }
        bool any = false;
        for (const std::string& alt : el.alternatives)
          if (tokens[pos] == alt) {
            any = true;
            break;
          }
        if (!any)
          ok = false;
        else
          ++pos;
      }
    }
    if (!ok) continue;
    if (!parse_number(tokens, begin_gap, begin_gap + gap)) continue;
    end_out = pos;
    wc_begin = begin_gap;
    wc_end = begin_gap + gap;
    return true;
  }
  return false;
}

}  // namespace

std::vector<PatternRule> load_patterns(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::io, "cannot open pattern file: " + path);

  std::vector<PatternRule> rules;
  std::string line;
  std::uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    PatternRule rule;
    std::string word;
    while (words >> word) rule.elements.push_back(parse_element(word, path, line_no));
    if (rule.elements.empty()) continue;

    std::size_t wildcards = 0, literals = 0;
    for (const PatternElement& el : rule.elements)
      el.wildcard ? ++wildcards : ++literals;
    if (wildcards != 1)
      fail(ErrorKind::format, path + ":" + std::to_string(line_no) +
                                  ": rule needs exactly one wildcard");
    if (literals == 0)
      fail(ErrorKind::format,
           path + ":" + std::to_string(line_no) + ": rule needs at least one literal");
    rule.id = "r" + std::to_string(rules.size() + 1);
    rules.push_back(std::move(rule));
  }
  if (rules.empty())
    fail(ErrorKind::format, path + ": no rules found; a detector without rules "
                                   "is a misconfiguration");
  return rules;
}

std::optional<MatchResult> match_announcement(std::span<const std::string> tokens,
                                              std::span<const PatternRule> rules) {
  for (const PatternRule& rule : rules) {
    const std::size_t min_len = rule.elements.size() - 1;  // literals at least
    if (tokens.size() < min_len) continue;
    for (std::size_t start = 0; start + min_len <= tokens.size(); ++start) {
      std::size_t end = 0, wc_begin = 0, wc_end = 0;
      if (match_at(tokens, rule, start, end, wc_begin, wc_end)) {
        MatchResult m;
        m.rule_id = rule.id;
        m.begin = start;
        m.end = end;
        m.wildcard_tokens.assign(tokens.begin() + static_cast<std::ptrdiff_t>(wc_begin),
                                 tokens.begin() + static_cast<std::ptrdiff_t>(wc_end));
        return m;
      }
    }
  }
  return std::nullopt;
}

std::vector<PostMatch> detect_posts(const std::vector<Post>& posts,
                                    std::span<const PatternRule> rules,
                                    const TextConfig& config, DetectStats* stats) {
  std::vector<PostMatch> matches;
  std::unordered_set<std::string> users;
  for (const Post& post : posts) {
    CleanResult cleaned = clean(tokenize(post.text), config);
    auto m = match_announcement(cleaned.tokens, rules);
    if (m) {
      PostMatch pm;
      pm.post_id = post.post_id;
      pm.user_id = post.user_id;
      pm.rule_id = m->rule_id;
      pm.wildcard_tokens = std::move(m->wildcard_tokens);
      matches.push_back(std::move(pm));
      users.insert(post.user_id);
    }
  }
  if (stats) {
    stats->posts = posts.size();
    stats->matched_posts = matches.size();
    stats->matched_users = users.size();
  }
  return matches;
}

}  // namespace cohortminer
