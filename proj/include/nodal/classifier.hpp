#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "nodal/kodaira.hpp"

namespace nodal {

using Json = nlohmann::ordered_json;

// Terminal labels of the classification. The 1-* cases are surfaces with
// h11 - 2 disjoint nodal curves and nef canonical class; the 2-* cases have
// non-nef canonical class (nonminimal or ruled); P2 / F2 / FPP are the
// terminals of the maximal configuration count h11 - 1.
enum class CaseTag {
    P2,   // projective plane, no nodal curves
    F2,   // Hirzebruch surface with the (-2)-section, one nodal curve
    FPP,  // fake projective plane
    C1a,  // bi-elliptic surface (minimal, kappa = 0, q = 1, pg = 0)
    C1b,  // minimal surface of Kodaira dimension 1 with q = 1, pg = 0
    C1c,  // Enriques surface with 8 disjoint nodal curves
    C1d,  // minimal, kappa = 1, q = pg = 0, two I0* fibres carrying the 8 curves
    C1e,  // ball quotient with q = 0, pg = 1 (BMY equality)
    C1f,  // minimal general type, q = pg = 0, 8 - K^2 nodal curves; K^2 recorded
    C2a,  // blow-up of a fake projective plane (one point, or two infinitely near)
    C2b,  // irrational ruled, fibres blown up to (-2)-(-1)-(-2) strings
    C2c,  // rational ruled surface F_e, e != 2
    C2d,  // F_e with fibres blown up to (-2)-(-1)-(-2) strings
    C2e,  // F_2 blown up to one (-1)-(-2)-(-1) fibre, off the negative section
    C2f,  // F_2 blown up once off the negative section
};

std::string to_string(CaseTag tag);

struct CaseLabel {
    CaseTag tag;
    std::optional<int> ksq;  // set exactly for C1f
    std::string note;        // free-text qualifier ("two I0* fibres", ...)
};

enum class Existence { exists, open, excluded };

std::string to_string(Existence e);

// Whether a surface realizing the given case is known, unknown, or ruled
// out. The 1-f labels depend on K^2; everything else in the vocabulary is
// realized by a known construction.
Existence existence_status(const CaseLabel& label);

// One audited inference. `operation` names the computation, inputs/outputs
// are small JSON records, and `citation` is drawn from nodal::cite.
struct TraceStep {
    std::string operation;
    Json inputs;
    Json outputs;
    std::string citation;
};

struct ClassificationVerdict {
    std::vector<CaseLabel> cases;
    std::vector<TraceStep> trace;
};

// Classifies the surfaces carrying the maximal number h11 - 1 of disjoint
// nodal curves, split on whether the canonical class is nef. Nef leads to
// the fake projective plane; non-nef (anti-nef, after contraction) to P2
// and F2.
ClassificationVerdict classify_max_nodal(bool nef_canonical);

// Classifies the surfaces carrying h11 - 2 disjoint nodal curves with the
// given invariants. With nef canonical class the verdict depends on
// (q, pg, h11); otherwise the nonminimal/ruled decision tree applies and the
// invariants are ignored.
ClassificationVerdict classify_near_max(int q, int pg, int h11, bool nef_canonical);

// After blowing down r exceptional curves, each blow-down can absorb at most
// half a nodal class: mu(X) <= mu_minimal + floor(r / 2).
int mu_bound_after_blowdowns(int mu_minimal, int r);

// All multisets of singular fibres of a relatively minimal elliptic
// fibration with total Euler number exactly total_euler and combined nodal
// capacity at least nodal_demand. Deterministic order: catalog order within
// each multiset and lexicographic across multisets.
std::vector<std::vector<KodairaFibre>> elliptic_fibre_search(int total_euler, int nodal_demand);

// Input branch for the non-nef near-maximal analysis.
enum class NonminimalKind { kappa_nonneg, irrational_ruled, rational };

ClassificationVerdict nonminimal_decision_tree(NonminimalKind kind);

}  // namespace nodal
