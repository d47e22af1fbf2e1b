#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "c4count/certify.hpp"
#include "c4count/graph.hpp"

namespace c4count {

namespace graphs {

/// Step i (0..4) of the tame sequence: a 4-cycle r,u,l,d followed by the
/// paths r-ru-ruu-uu-u, l-lu-luu-uu, r-rd-rdd-dd-d and l-ld-ldd-dd.
Graph tame_sequence(int step);

/// k five-cycles in a chain, consecutive cycles sharing one edge:
/// 3k + 2 vertices.
Graph c5_chain(int k);

/// c5_chain(2) as a connector; its ends are the two neighbors of one end of
/// the shared edge that lie off that edge.
RootedPattern c5pair_connector();

/// c5pair_connector() with its two ends joined by a 3-edge path.
Graph c5pair_with_path();
/// c5pair_with_path() extended by a further 3-edge path.
Graph c5pair_extended();

/// Two disjoint five-cycles a_0..a_4 and d_0..d_4 joined by the 2-paths
/// a_i-b_i-d_i and a_i-c_i-d_{i+1}.
Graph c5_pair_by_paths();

/// Pairwise non-isomorphic trees with 1..max_vertices vertices.
std::vector<Graph> all_trees(int max_vertices);

}  // namespace graphs

enum class CorpusCheck { kCountable, kTame, kTameNoAxioms };
std::string to_string(CorpusCheck c);
CorpusCheck corpus_check_from_string(const std::string& s);

struct CorpusEntry {
  std::string name;
  Graph graph;
  CorpusCheck check = CorpusCheck::kCountable;
  VerdictStatus expected = VerdictStatus::kUnknown;
  /// Bundled certificate, relative to the corpus directory; empty if none.
  std::string certificate;
  std::string figure;
};

/// The built-in corpus: cycles, small trees, the tame sequence, the
/// five-cycle composites, subdivided cliques, and the 3-regular open cases.
std::vector<CorpusEntry> builtin_corpus();

/// Reads <dir>/corpus.json. Throws InputError when missing or malformed.
std::vector<CorpusEntry> load_corpus(const std::filesystem::path& dir);
/// Writes <dir>/corpus.json; when `certificates` is set, searches every
/// entry expected to be certified and stores its certificate under
/// <dir>/certificates/.
void write_corpus(const std::filesystem::path& dir, std::vector<CorpusEntry> entries,
                  bool certificates, const SearchOptions& options = {});

struct CorpusResult {
  std::string name;
  CorpusCheck check = CorpusCheck::kCountable;
  VerdictStatus expected = VerdictStatus::kUnknown;
  VerdictStatus actual = VerdictStatus::kUnknown;
  /// Bundled certificate verified (true when none is bundled).
  bool certificate_ok = true;
  std::string certificate_detail;
  std::uint64_t nodes = 0;
  double seconds = 0.0;
  bool pass() const { return expected == actual && certificate_ok; }
};

struct CorpusSummary {
  std::vector<CorpusResult> results;
  int failures() const;
  bool ok() const { return failures() == 0; }
  std::string to_json() const;
};

/// Runs the check of every entry and verifies bundled certificates, which
/// are resolved against `dir`.
CorpusSummary run_corpus(const std::vector<CorpusEntry>& entries,
                         const std::filesystem::path& dir = {},
                         const SearchOptions& options = {});

}  // namespace c4count
