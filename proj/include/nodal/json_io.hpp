#pragma once

#include "nodal/classifier.hpp"
#include "nodal/f2.hpp"
#include "nodal/invariants.hpp"
#include "nodal/lattice.hpp"
#include "nodal/singularities.hpp"

namespace nodal {

// Serialization conventions: big integers and rationals travel as decimal
// strings ("-48", "2/5") so values survive any JSON integer width; small
// structural counts stay JSON numbers. `Json` preserves insertion order,
// which keeps every rendering byte-deterministic.

Json gram_to_json(const GramMatrix& g);

// Accepts arrays of arrays whose entries are decimal strings or JSON
// integers.
GramMatrix gram_from_json(const Json& j);

Json signature_to_json(const Signature& s);
Json smith_to_json(const SmithForm& s);
Json subspace_to_json(const F2Subspace& s);
Json obstruction_to_json(const ObstructionReport& r);
Json resolution_to_json(const ResolutionString& r);
Json invariants_to_json(const SurfaceInvariants& s);
Json case_label_to_json(const CaseLabel& label);
Json trace_step_to_json(const TraceStep& s, int index);
Json verdict_to_json(const ClassificationVerdict& v);
Json fibre_multisets_to_json(const std::vector<std::vector<KodairaFibre>>& multisets);

}  // namespace nodal
