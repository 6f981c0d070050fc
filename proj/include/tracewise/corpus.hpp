#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tracewise/diagnosis.hpp"

namespace tracewise {

class CorpusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Response {
  std::optional<std::string> student_id;
  std::string answer;

  friend bool operator==(const Response&, const Response&) = default;
};

struct TaskRecord {
  std::string id;
  std::string source;
  std::optional<std::vector<std::string>> reference_transcript;
  std::vector<Response> responses;

  friend bool operator==(const TaskRecord&, const TaskRecord&) = default;
};

struct Corpus {
  std::string version = "1";
  std::vector<TaskRecord> tasks;

  friend bool operator==(const Corpus&, const Corpus&) = default;
};

/// Throws CorpusError on malformed documents and on cached reference
/// transcripts that disagree with the task source.
Corpus parse_corpus(std::string_view text);
std::string print_corpus(const Corpus& corpus);
Corpus load_corpus(const std::filesystem::path& path);
void save_corpus(const Corpus& corpus, const std::filesystem::path& path);

/// Fills in missing reference transcripts for tasks that parse.
void refresh_references(Corpus& corpus);

struct AggregateStats {
  std::map<std::string, double> weights;  // code -> fractional count
  std::size_t tasks = 0;
  std::size_t responses = 0;
  std::size_t correct = 0;
  std::size_t explained = 0;
  std::size_t unexplained = 0;
  std::size_t ambiguous = 0;
  std::vector<std::string> skipped;  // one message per unusable task
};

/// Each explained response spreads a total weight of 1 evenly over its
/// explanations, and each explanation evenly over its codes.
AggregateStats batch_diagnose(const Registry& registry, const Corpus& corpus, const SearchConfig& cfg = {},
                              MatchMode mode = MatchMode::kExact);

std::string stats_json(const AggregateStats& stats);
std::string stats_text(const AggregateStats& stats);

}  // namespace tracewise
