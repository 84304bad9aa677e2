#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nodal/classifier.hpp"

namespace nodal {

inline constexpr std::string_view kToolVersion = "0.1.0";

// Proof replays runnable from the CLI. The tokens name the statements whose
// case analysis they reproduce: the maximal classification
// ("theorem-1.3"), the near-maximal classification ("theorem-1.4"), and the
// nodal rational-homology-plane corollary ("cor-1.2").
enum class ReplayId { max_nodal, near_max, nodal_homology_plane };

std::optional<ReplayId> parse_replay_id(std::string_view token);
std::string to_string(ReplayId id);

struct Report {
    std::string title;
    std::string replay;  // token this report was generated from
    Json inputs;         // echo of what the replay fed the classifier
    std::vector<std::string> verdict;
    std::vector<TraceStep> trace;
};

Report replay(ReplayId id);

std::uint64_t fnv1a64(std::string_view data);

// Full serialization, ending in a content hash over everything above it;
// re-running the same replay reproduces the bytes exactly.
Json report_to_json(const Report& r);

// Human rendering of a trace: aligned (step, operation, citation) table with
// the step payloads indented beneath each row.
std::string render_trace_text(const std::vector<TraceStep>& trace);

// Human rendering: header, verdict list, trace table, content hash.
std::string render_report_text(const Report& r);

}  // namespace nodal
