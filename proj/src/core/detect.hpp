// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 cohort-miner developers

#ifndef COHORTMINER_CORE_DETECT_HPP_
#define COHORTMINER_CORE_DETECT_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "core/corpus.hpp"
#include "core/normalize.hpp"

namespace cohortminer {

// One element of a rule template: either a literal (with alternatives from
// the a|b syntax) or the rule's single bounded wildcard.
struct PatternElement {
  bool wildcard = false;
  std::vector<std::string> alternatives;  // literal only
  std::size_t min_tokens = 0;             // wildcard only
  std::size_t max_tokens = 0;
};

struct PatternRule {
  std::string id;
  std::vector<PatternElement> elements;
};

// Pattern file: one rule per line, space-separated literals, alternation
// "a|b", wildcard "<*min:max>", '#' comments. Each rule needs exactly one
// wildcard (max bound <= 4) and at least one literal. An empty rule set is a
// configuration error. Rule ids are "r1", "r2", ... counting rules only, so
// comments and blank lines do not shift them.
std::vector<PatternRule> load_patterns(const std::string& path);

struct MatchResult {
  std::string post_id;
  std::string rule_id;
  std::size_t begin = 0;  // matched token span [begin, end)
  std::size_t end = 0;
  std::vector<std::string> wildcard_tokens;
};

// First match by (rule order, leftmost start). The wildcard span must contain
// a parseable number or the candidate does not fire. Tokens are expected to
// be lowercased and cleaned with the guard list intact.
std::optional<MatchResult> match_announcement(std::span<const std::string> tokens,
                                              std::span<const PatternRule> rules);

struct DetectStats {
  std::uint64_t posts = 0;
  std::uint64_t matched_posts = 0;
  std::uint64_t matched_users = 0;
};

struct PostMatch {
  std::string post_id;
  std::string user_id;
  std::string rule_id;
  std::vector<std::string> wildcard_tokens;
};

// Runs the detector over a post collection.
std::vector<PostMatch> detect_posts(const std::vector<Post>& posts,
                                    std::span<const PatternRule> rules,
                                    const TextConfig& config,
                                    DetectStats* stats = nullptr);

}  // namespace cohortminer

#endif  // COHORTMINER_CORE_DETECT_HPP_
