// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 cohort-miner developers

#ifndef COHORTMINER_CORE_NUMBERWORDS_HPP_
#define COHORTMINER_CORE_NUMBERWORDS_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>

namespace cohortminer {

struct NumberMatch {
  int value = 0;
  std::size_t begin = 0;  // first token of the match
  std::size_t end = 0;    // one past the last token
};

// Finds the leftmost quantity in tokens[start, end): a numeral "1".."44" or a
// number word one..forty-four, including hyphenated ("twenty-one") and
// two-token ("twenty one") compounds. Compounds are matched greedily, so
// ["twenty","one"] is 21, not 20. Values outside 1..44 never match.
std::optional<NumberMatch> parse_number(std::span<const std::string> tokens,
                                        std::size_t start, std::size_t end);

// Number parse attempt at one fixed position; used by the window scans.
std::optional<NumberMatch> parse_number_at(std::span<const std::string> tokens,
                                           std::size_t pos, std::size_t end);

}  // namespace cohortminer

#endif  // COHORTMINER_CORE_NUMBERWORDS_HPP_
