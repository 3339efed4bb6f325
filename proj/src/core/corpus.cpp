// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 cohort-miner developers

#include "core/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <unordered_set>

#include <json.hpp>

#include "core/error.hpp"
#include "core/isotime.hpp"

namespace cohortminer {

using ordered_json = nlohmann::ordered_json;

const char* to_string(Source s) {
  return s == Source::microblog ? "microblog" : "forum";
}

std::optional<Source> source_from_string(std::string_view s) {
  if (s == "microblog") return Source::microblog;
  if (s == "forum") return Source::forum;
  return std::nullopt;
}

const char* to_string(Label l) { return l == Label::isPreg ? "isPreg" : "notPreg"; }

std::optional<Label> label_from_string(std::string_view s) {
  if (s == "isPreg") return Label::isPreg;
  if (s == "notPreg") return Label::notPreg;
  return std::nullopt;
}

namespace {

ordered_json post_to_json(const Post& post) {
  ordered_json j;
  j["post_id"] = post.post_id;
  j["user_id"] = post.user_id;
  j["timestamp"] = format_iso8601(post.timestamp);
  j["text"] = post.text;
  j["source"] = to_string(post.source);
  if (post.source == Source::forum && !post.forum.empty()) j["forum"] = post.forum;
  return j;
}

std::optional<std::string> post_from_json(const ordered_json& j, Post& out) {
  if (!j.is_object()) return "record is not a JSON object";
  for (const char* field : {"post_id", "user_id", "timestamp", "text", "source"}) {
    if (!j.contains(field)) return std::string("missing field: ") + field;
    if (!j.at(field).is_string()) return std::string("field is not a string: ") + field;
  }
  Post p;
  p.post_id = j.at("post_id").get<std::string>();
  p.user_id = j.at("user_id").get<std::string>();
  p.text = j.at("text").get<std::string>();
  if (p.post_id.empty()) return "empty post_id";
  if (p.user_id.empty()) return "empty user_id";
  if (p.text.empty()) return "empty text";

  auto ts = parse_iso8601(j.at("timestamp").get<std::string>());
  if (!ts) return "bad timestamp (need ISO-8601 with UTC offset)";
  p.timestamp = *ts;

  auto src = source_from_string(j.at("source").get<std::string>());
  if (!src) return "bad source (need microblog|forum)";
  p.source = *src;

  if (j.contains("forum")) {
    if (p.source != Source::forum) return "forum field on a non-forum post";
    if (!j.at("forum").is_string()) return "field is not a string: forum";
    p.forum = j.at("forum").get<std::string>();
  }
  out = std::move(p);
  return std::nullopt;
}

}  // namespace

std::string post_to_json_line(const Post& post) { return post_to_json(post).dump(); }

std::optional<std::string> post_from_json_line(const std::string& line, Post& out) {
  ordered_json j = ordered_json::parse(line, nullptr, false);
  if (j.is_discarded()) return "invalid JSON";
  return post_from_json(j, out);
}

std::string annotated_to_json_line(const AnnotatedPost& ap) {
  ordered_json j = post_to_json(ap.post);
  j["label"] = to_string(ap.label);
  return j.dump();
}

std::optional<std::string> annotated_from_json_line(const std::string& line,
                                                    AnnotatedPost& out) {
  ordered_json j = ordered_json::parse(line, nullptr, false);
  if (j.is_discarded()) return "invalid JSON";
  AnnotatedPost ap;
  if (auto err = post_from_json(j, ap.post)) return err;
  if (!j.contains("label") || !j.at("label").is_string())
    return "missing or non-string label";
  auto label = label_from_string(j.at("label").get<std::string>());
  if (!label) return "bad label (need isPreg|notPreg)";
  ap.label = *label;
  out = std::move(ap);
  return std::nullopt;
}

namespace {

template <typename ParseLine>
IngestResult ingest_lines(const std::string& path, std::ostream* log,
                          const std::string& rejects_path, ParseLine parse) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::io, "cannot open posts file: " + path);

  std::ofstream rejects;
  if (!rejects_path.empty()) {
    rejects.open(rejects_path);
    if (!rejects) fail(ErrorKind::io, "cannot open rejects file: " + rejects_path);
  }

  IngestResult result;
  std::string line;
  std::uint64_t line_no = 0;
  std::uint64_t non_blank = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    ++non_blank;
    std::optional<std::string> err = parse(line, result);
    if (err) {
      ++result.rejected;
      if (log) *log << path << ":" << line_no << ": rejected: " << *err << "\n";
      if (rejects.is_open()) rejects << line << "\n";
    }
  }
  if (non_blank > 0 && result.rejected * 2 > non_blank)
    fail(ErrorKind::format,
         path + ": more than half the lines are malformed; wrong file format?");
  return result;
}

}  // namespace

IngestResult ingest_posts(const std::string& path, std::ostream* log,
                          const std::string& rejects_path) {
  return ingest_lines(path, log, rejects_path,
                      [](const std::string& line, IngestResult& r) {
                        Post p;
                        auto err = post_from_json_line(line, p);
                        if (!err) r.posts.push_back(std::move(p));
                        return err;
                      });
}

IngestResult ingest_annotated(const std::string& path,
                              std::vector<AnnotatedPost>& out, std::ostream* log) {
  return ingest_lines(path, log, "",
                      [&out](const std::string& line, IngestResult& r) {
                        AnnotatedPost ap;
                        auto err = annotated_from_json_line(line, ap);
                        if (!err) {
                          r.posts.push_back(ap.post);
                          out.push_back(std::move(ap));
                        }
                        return err;
                      });
}

void write_posts(const std::vector<Post>& posts, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::io, "cannot write posts file: " + path);
  for (const Post& p : posts) out << post_to_json_line(p) << "\n";
}

TimelineSet build_timelines(const std::vector<Post>& posts) {
  TimelineSet set;
  std::unordered_set<std::string> seen;
  seen.reserve(posts.size());
  for (const Post& p : posts) {
    // post_id is unique per corpus, so user+post keys are just post keys;
    // keeping the compound key makes re-crawled corpora behave.
    std::string key = p.user_id + "\x1f" + p.post_id;
    if (!seen.insert(std::move(key)).second) {
      ++set.duplicates_dropped;
      continue;
    }
    Timeline& tl = set.by_user[p.user_id];
    tl.user_id = p.user_id;
    tl.posts.push_back(p);
  }
  for (auto& [user, tl] : set.by_user) {
    std::sort(tl.posts.begin(), tl.posts.end(), [](const Post& a, const Post& b) {
      if (a.timestamp != b.timestamp) return a.timestamp < b.timestamp;
      return a.post_id < b.post_id;
    });
  }
  return set;
}

CorpusStats corpus_stats(const TimelineSet& timelines) {
  CorpusStats stats;
  stats.n_users = timelines.by_user.size();
  for (const auto& [user, tl] : timelines.by_user) {
    for (const Post& p : tl.posts) {
      ++stats.n_posts;
      ++stats.n_per_source[to_string(p.source)];
      if (stats.empty) {
        stats.empty = false;
        stats.time_min = stats.time_max = p.timestamp;
      } else {
        stats.time_min = std::min(stats.time_min, p.timestamp);
        stats.time_max = std::max(stats.time_max, p.timestamp);
      }
    }
  }
  return stats;
}

std::string corpus_stats_to_json(const CorpusStats& stats) {
  ordered_json j;
  j["n_posts"] = stats.n_posts;
  j["n_users"] = stats.n_users;
  ordered_json per_source = ordered_json::object();
  for (const auto& [src, count] : stats.n_per_source) per_source[src] = count;
  j["n_per_source"] = per_source;
  if (stats.empty) {
    j["time_span"] = nullptr;
  } else {
    j["time_span"] = {format_iso8601(stats.time_min), format_iso8601(stats.time_max)};
  }
  return j.dump();
}

}  // namespace cohortminer
