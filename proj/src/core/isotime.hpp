// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 cohort-miner developers

#ifndef COHORTMINER_CORE_ISOTIME_HPP_
#define COHORTMINER_CORE_ISOTIME_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace cohortminer {

// Instants are UTC epoch seconds. Second resolution is all the pipeline needs.

inline constexpr std::int64_t kSecondsPerDay = 86400;
inline constexpr std::int64_t kSecondsPerWeek = 7 * kSecondsPerDay;

// Parses "YYYY-MM-DDTHH:MM:SS" followed by a mandatory offset ("Z" or
// "+HH:MM"/"-HH:MM"). Fractional seconds are accepted and truncated.
// Returns nullopt on anything else, including out-of-range calendar fields.
std::optional<std::int64_t> parse_iso8601(std::string_view text);

// Formats as "YYYY-MM-DDTHH:MM:SSZ".
std::string format_iso8601(std::int64_t epoch_seconds);

}  // namespace cohortminer

#endif  // COHORTMINER_CORE_ISOTIME_HPP_
