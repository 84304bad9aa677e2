#include "nodal/json_io.hpp"

#include <stdexcept>

namespace nodal {

Json gram_to_json(const GramMatrix& g) {
    Json rows = Json::array();
    for (int i = 0; i < g.rank(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < g.rank(); ++j) row.push_back(int_to_string(g.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

GramMatrix gram_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("gram matrix must be an array of arrays");
    std::vector<std::vector<Int>> entries;
    for (const Json& row : j) {
        if (!row.is_array()) throw std::invalid_argument("gram matrix must be an array of arrays");
        std::vector<Int> r;
        for (const Json& cell : row) {
            if (cell.is_string())
                r.push_back(int_from_string(cell.get<std::string>()));
            else if (cell.is_number_integer())
                r.push_back(Int(cell.get<long long>()));
            else
                throw std::invalid_argument("gram entries must be integers or decimal strings");
        }
        entries.push_back(std::move(r));
    }
    return GramMatrix(entries);
}

Json signature_to_json(const Signature& s) {
    return Json{{"positive", s.positive}, {"negative", s.negative}, {"zero", s.zero}};
}

Json smith_to_json(const SmithForm& s) {
    Json divisors = Json::array();
    for (const Int& d : s.divisors) divisors.push_back(int_to_string(d));
    return Json{{"divisors", divisors}};
}

Json subspace_to_json(const F2Subspace& s) {
    Json basis = Json::array();
    for (const F2Vector& v : s.basis) basis.push_back(v.to_string());
    return basis;
}

Json obstruction_to_json(const ObstructionReport& r) {
    Json j{{"mu", r.mu},
           {"ambient_rank", r.ambient_rank},
           {"min_kernel_dim", r.min_kernel_dim},
           {"feasible", r.feasible},
           {"witness", r.witness ? subspace_to_json(*r.witness) : Json(nullptr)}};
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

Json resolution_to_json(const ResolutionString& r) {
    Json selfints = Json::array();
    for (long long b : r.self_intersections) selfints.push_back(b);
    Json discrepancies = Json::array();
    for (const Rat& a : r.discrepancies) discrepancies.push_back(rat_to_string(a));
    Json j{{"self_intersections", selfints},
           {"discrepancies", discrepancies},
           {"dsq", rat_to_string(r.dsq)}};
    j["group_order"] = r.group_order ? Json(int_to_string(*r.group_order)) : Json(nullptr);
    return j;
}

Json invariants_to_json(const SurfaceInvariants& s) {
    return Json{{"q", s.q}, {"pg", s.pg}, {"h11", s.h11}, {"ksq", s.ksq}, {"euler", s.euler}};
}

Json case_label_to_json(const CaseLabel& label) {
    Json j{{"tag", to_string(label.tag)}};
    if (label.ksq) j["ksq"] = *label.ksq;
    if (!label.note.empty()) j["note"] = label.note;
    j["existence"] = to_string(existence_status(label));
    return j;
}

Json trace_step_to_json(const TraceStep& s, int index) {
    return Json{{"step", index},
                {"operation", s.operation},
                {"inputs", s.inputs},
                {"outputs", s.outputs},
                {"citation", s.citation}};
}

Json verdict_to_json(const ClassificationVerdict& v) {
    Json cases = Json::array();
    for (const CaseLabel& c : v.cases) cases.push_back(case_label_to_json(c));
    Json trace = Json::array();
    int index = 0;
    for (const TraceStep& s : v.trace) trace.push_back(trace_step_to_json(s, index++));
    return Json{{"cases", cases}, {"trace", trace}};
}

Json fibre_multisets_to_json(const std::vector<std::vector<KodairaFibre>>& multisets) {
    Json out = Json::array();
    for (const auto& multiset : multisets) {
        Json names = Json::array();
        for (const KodairaFibre& f : multiset) names.push_back(f.name());
        out.push_back(std::move(names));
    }
    return out;
}

}  // namespace nodal
