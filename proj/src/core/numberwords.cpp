// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 cohort-miner developers

#include "core/numberwords.hpp"

#include <unordered_map>

namespace cohortminer {
namespace {

const std::unordered_map<std::string, int>& units_map() {
  static const std::unordered_map<std::string, int> m = {
      {"one", 1},    {"two", 2},    {"three", 3},    {"four", 4},
      {"five", 5},   {"six", 6},    {"seven", 7},    {"eight", 8},
      {"nine", 9},   {"ten", 10},   {"eleven", 11},  {"twelve", 12},
      {"thirteen", 13}, {"fourteen", 14}, {"fifteen", 15}, {"sixteen", 16},
      {"seventeen", 17}, {"eighteen", 18}, {"nineteen", 19},
  };
  return m;
}

const std::unordered_map<std::string, int>& tens_map() {
  static const std::unordered_map<std::string, int> m = {
      {"twenty", 20}, {"thirty", 30}, {"forty", 40},
  };
  return m;
}

constexpr int kMaxValue = 44;

bool in_range(int v) { return v >= 1 && v <= kMaxValue; }

std::optional<int> digits_value(const std::string& tok) {
  if (tok.empty() || tok.size() > 2) return std::nullopt;
  int v = 0;
  for (char c : tok) {
    if (c < '0' || c > '9') return std::nullopt;
    v = v * 10 + (c - '0');
  }
  return v;
}

std::optional<int> single_unit(const std::string& tok) {
  auto it = units_map().find(tok);
  if (it == units_map().end()) return std::nullopt;
  return it->second;
}

// "twenty-one" style.
std::optional<int> hyphen_compound(const std::string& tok) {
  auto dash = tok.find('-');
  if (dash == std::string::npos) return std::nullopt;
  auto tens = tens_map().find(tok.substr(0, dash));
  auto ones = units_map().find(tok.substr(dash + 1));
  if (tens == tens_map().end() || ones == units_map().end() || ones->second > 9)
    return std::nullopt;
  return tens->second + ones->second;
}

}  // namespace

std::optional<NumberMatch> parse_number_at(std::span<const std::string> tokens,
                                           std::size_t pos, std::size_t end) {
  if (pos >= end || end > tokens.size()) return std::nullopt;
  const std::string& tok = tokens[pos];

  if (auto v = digits_value(tok); v && in_range(*v))
    return NumberMatch{*v, pos, pos + 1};
  if (auto v = hyphen_compound(tok); v && in_range(*v))
    return NumberMatch{*v, pos, pos + 1};

  auto tens = tens_map().find(tok);
  if (tens != tens_map().end()) {
    // Greedy: "twenty one" before bare "twenty".
    if (pos + 1 < end) {
      auto ones = single_unit(tokens[pos + 1]);
      if (ones && *ones <= 9 && in_range(tens->second + *ones))
        return NumberMatch{tens->second + *ones, pos, pos + 2};
    }
    return NumberMatch{tens->second, pos, pos + 1};
  }
  if (auto v = single_unit(tok); v && in_range(*v))
    return NumberMatch{*v, pos, pos + 1};
  return std::nullopt;
}

std::optional<NumberMatch> parse_number(std::span<const std::string> tokens,
                                        std::size_t start, std::size_t end) {
  if (end > tokens.size()) end = tokens.size();
  for (std::size_t pos = start; pos < end; ++pos) {
    if (auto m = parse_number_at(tokens, pos, end)) return m;
  }
  return std::nullopt;
}

}  // namespace cohortminer
