// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 cohort-miner developers

#ifndef COHORTMINER_CORE_CORPUS_HPP_
#define COHORTMINER_CORE_CORPUS_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace cohortminer {

enum class Source { microblog, forum };

const char* to_string(Source s);
std::optional<Source> source_from_string(std::string_view s);

struct Post {
  std::string post_id;
  std::string user_id;
  std::int64_t timestamp = 0;  // UTC epoch seconds
  std::string text;
  Source source = Source::microblog;
  std::string forum;  // forum sources only

  friend bool operator==(const Post&, const Post&) = default;
};

// Posts of one user, ascending by (timestamp, post_id).
struct Timeline {
  std::string user_id;
  std::vector<Post> posts;
};

enum class Label { isPreg, notPreg };

const char* to_string(Label l);
std::optional<Label> label_from_string(std::string_view s);

struct AnnotatedPost {
  Post post;
  Label label = Label::notPreg;
};

struct CorpusStats {
  std::uint64_t n_posts = 0;
  std::uint64_t n_users = 0;
  std::map<std::string, std::uint64_t> n_per_source;
  bool empty = true;
  std::int64_t time_min = 0;
  std::int64_t time_max = 0;
};

// One post per line: {"post_id":..., "user_id":..., "timestamp":"...Z",
// "text":..., "source":"microblog"|"forum", "forum": optional}.
std::string post_to_json_line(const Post& post);
// Returns the parse failure reason, or nullopt on success.
std::optional<std::string> post_from_json_line(const std::string& line, Post& out);

// Annotated variant carries an extra "label" field.
std::string annotated_to_json_line(const AnnotatedPost& ap);
std::optional<std::string> annotated_from_json_line(const std::string& line,
                                                    AnnotatedPost& out);

struct IngestResult {
  std::vector<Post> posts;
  std::uint64_t rejected = 0;
};

// Reads a posts file, keeping well-formed records in file order. Malformed
// lines go to `log` (and `rejects_path` when given) and are counted; more
// than 50% malformed lines or an unreadable file is fatal.
IngestResult ingest_posts(const std::string& path, std::ostream* log = nullptr,
                          const std::string& rejects_path = "");

IngestResult ingest_annotated(const std::string& path,
                              std::vector<AnnotatedPost>& out,
                              std::ostream* log = nullptr);

void write_posts(const std::vector<Post>& posts, const std::string& path);

struct TimelineSet {
  std::map<std::string, Timeline> by_user;
  std::uint64_t duplicates_dropped = 0;
};

// Partitions posts into per-user timelines sorted by (timestamp, post_id).
// A repeated post_id within one user keeps the first occurrence.
TimelineSet build_timelines(const std::vector<Post>& posts);

CorpusStats corpus_stats(const TimelineSet& timelines);

std::string corpus_stats_to_json(const CorpusStats& stats);

}  // namespace cohortminer

#endif  // COHORTMINER_CORE_CORPUS_HPP_
