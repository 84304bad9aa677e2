#include "nodal/report.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include "nodal/citations.hpp"
#include "nodal/invariants.hpp"
#include "nodal/json_io.hpp"

namespace nodal {

std::optional<ReplayId> parse_replay_id(std::string_view token) {
    if (token == "theorem-1.3") return ReplayId::max_nodal;
    if (token == "theorem-1.4") return ReplayId::near_max;
    if (token == "cor-1.2") return ReplayId::nodal_homology_plane;
    return std::nullopt;
}

std::string to_string(ReplayId id) {
    switch (id) {
        case ReplayId::max_nodal: return "theorem-1.3";
        case ReplayId::near_max: return "theorem-1.4";
        case ReplayId::nodal_homology_plane: return "cor-1.2";
    }
    throw std::invalid_argument("unreachable replay id");
}

namespace {

void splice_trace(Report& r, std::vector<TraceStep> steps) {
    for (TraceStep& s : steps) r.trace.push_back(std::move(s));
}

std::string label_with_status(const CaseLabel& label) {
    std::string s = to_string(label.tag);
    if (label.ksq) s += " K^2=" + std::to_string(*label.ksq);
    s += ": " + to_string(existence_status(label));
    return s;
}

Report replay_max_nodal() {
    Report r;
    r.title = "Surfaces with the maximal number of disjoint nodal curves";
    r.replay = to_string(ReplayId::max_nodal);
    r.inputs = Json{{"mu", "h11 - 1"}, {"nef_canonical", Json::array({true, false})}};
    for (bool nef : {true, false}) {
        ClassificationVerdict v = classify_max_nodal(nef);
        splice_trace(r, std::move(v.trace));
        for (const CaseLabel& c : v.cases) r.verdict.push_back(to_string(c.tag));
    }
    return r;
}

Report replay_near_max() {
    Report r;
    r.title = "Surfaces with h11 - 2 disjoint nodal curves";
    r.replay = to_string(ReplayId::near_max);
    r.inputs = Json{{"mu", "h11 - 2"}, {"nef_canonical", Json::array({true, false})}};

    const auto sols = bmy_solution_enumerator(Rat(5), 2);
    Json sol_json = Json::array();
    for (const SurfaceInvariants& s : sols)
        sol_json.push_back(Json{{"q", s.q}, {"pg", s.pg}, {"h11", s.h11}});
    r.trace.push_back(TraceStep{"bmy_solution_enumerator",
                                Json{{"slack", "5"}, {"h11_min", 2},
                                     {"constraint", "4q + 4pg + h11/2 <= 5"}},
                                Json{{"solutions", sol_json}}, std::string(cite::kBmyNef)});

    for (const SurfaceInvariants& s : sols) {
        ClassificationVerdict v = classify_near_max(s.q, s.pg, s.h11, true);
        splice_trace(r, std::move(v.trace));
        for (const CaseLabel& c : v.cases) r.verdict.push_back(label_with_status(c));
    }

    ClassificationVerdict nonminimal = classify_near_max(0, 0, 2, false);
    splice_trace(r, std::move(nonminimal.trace));
    for (const CaseLabel& c : nonminimal.cases) r.verdict.push_back(label_with_status(c));
    return r;
}

Report replay_nodal_homology_plane() {
    Report r;
    r.title = "Rational-homology projective planes with nodes";
    r.replay = to_string(ReplayId::nodal_homology_plane);
    r.inputs = Json{{"surface", "rational-homology projective plane, nodes only"}};

    // The resolution X of a nodal rational-homology projective plane with k
    // nodes has q = pg = 0, h11 = 1 + k, and carries the k nodal curves:
    // the maximal possible count, so the maximal classification applies.
    r.trace.push_back(TraceStep{"resolution_bookkeeping",
                                Json{{"nodes", "k"}, {"h11", "1 + k"}},
                                Json{{"mu", "h11 - 1"},
                                     {"conclusion", "resolution attains the maximal nodal count"}},
                                std::string(cite::kHodgeIndex)});

    for (bool nef : {true, false}) {
        ClassificationVerdict v = classify_max_nodal(nef);
        splice_trace(r, std::move(v.trace));
        for (const CaseLabel& c : v.cases) {
            // Map each resolution back to the contracted surface.
            std::string surface = to_string(c.tag);
            int nodes = 0;
            if (c.tag == CaseTag::F2) {
                surface = "cone-over-conic";  // contract the (-2)-section
                nodes = 1;
            }
            r.trace.push_back(TraceStep{"contract_terminal",
                                        Json{{"case", to_string(c.tag)}, {"nodes", nodes}},
                                        Json{{"surface", surface}},
                                        std::string(cite::kContraction)});
            r.verdict.push_back(surface);
        }
    }
    return r;
}

}  // namespace

Report replay(ReplayId id) {
    switch (id) {
        case ReplayId::max_nodal: return replay_max_nodal();
        case ReplayId::near_max: return replay_near_max();
        case ReplayId::nodal_homology_plane: return replay_nodal_homology_plane();
    }
    throw std::invalid_argument("unreachable replay id");
}

std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    return hash;
}

namespace {

Json report_body(const Report& r) {
    Json verdict = Json::array();
    for (const std::string& v : r.verdict) verdict.push_back(v);
    Json trace = Json::array();
    int index = 0;
    for (const TraceStep& s : r.trace) trace.push_back(trace_step_to_json(s, index++));
    return Json{{"title", r.title},
                {"replay", r.replay},
                {"tool_version", std::string(kToolVersion)},
                {"inputs", r.inputs},
                {"verdict", verdict},
                {"trace", trace}};
}

std::string hash_string(const Json& body) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "fnv1a64:%016llx",
                  static_cast<unsigned long long>(fnv1a64(body.dump())));
    return buf;
}

}  // namespace

Json report_to_json(const Report& r) {
    Json body = report_body(r);
    body["content_hash"] = hash_string(body);
    return body;
}

std::string render_trace_text(const std::vector<TraceStep>& trace) {
    std::size_t op_width = 9;  // len("operation")
    for (const TraceStep& s : trace) op_width = std::max(op_width, s.operation.size());
    std::string out;
    out += "step  " + std::string("operation") + std::string(op_width - 9, ' ') + "  citation\n";
    out += "----  " + std::string(op_width, '-') + "  --------\n";
    int index = 0;
    for (const TraceStep& s : trace) {
        char head[16];
        std::snprintf(head, sizeof head, "%4d", index++);
        out += std::string(head) + "  " + s.operation +
               std::string(op_width - s.operation.size(), ' ') + "  " + s.citation + "\n";
        out += "      in:  " + s.inputs.dump() + "\n";
        out += "      out: " + s.outputs.dump() + "\n";
    }
    return out;
}

std::string render_report_text(const Report& r) {
    const Json body = report_body(r);
    std::string out;
    out += r.title + "\n";
    out += "replay: " + r.replay + "    tool: " + std::string(kToolVersion) + "\n";
    out += "inputs: " + r.inputs.dump() + "\n\n";
    out += "verdict:\n";
    for (const std::string& v : r.verdict) out += "  - " + v + "\n";
    out += "\n";
    out += render_trace_text(r.trace);
    out += "\ncontent_hash: " + hash_string(body) + "\n";
    return out;
}

}  // namespace nodal
