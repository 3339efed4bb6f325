// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 cohort-miner developers

#ifndef COHORTMINER_CORE_STEMMER_HPP_
#define COHORTMINER_CORE_STEMMER_HPP_

#include <string>
#include <string_view>

namespace cohortminer {

// Porter suffix-stripping stemmer over lowercase ASCII words, following the
// reference implementation (including its documented deviations from the 1980
// paper: words of length <= 2 are untouched, step 2 uses bli->ble and adds
// logi->log). Tokens containing anything outside [a-z] are returned unchanged,
// so numerals and contractions pass through.
std::string porter_stem(std::string_view word);

}  // namespace cohortminer

#endif  // COHORTMINER_CORE_STEMMER_HPP_
