#include "nodal/classifier.hpp"

#include <algorithm>
#include <stdexcept>

#include "nodal/citations.hpp"
#include "nodal/f2.hpp"
#include "nodal/invariants.hpp"
#include "nodal/json_io.hpp"
#include "nodal/lattice.hpp"
#include "nodal/singularities.hpp"

namespace nodal {

std::string to_string(CaseTag tag) {
    switch (tag) {
        case CaseTag::P2: return "P2";
        case CaseTag::F2: return "F2";
        case CaseTag::FPP: return "FPP";
        case CaseTag::C1a: return "1-a";
        case CaseTag::C1b: return "1-b";
        case CaseTag::C1c: return "1-c";
        case CaseTag::C1d: return "1-d";
        case CaseTag::C1e: return "1-e";
        case CaseTag::C1f: return "1-f";
        case CaseTag::C2a: return "2-a";
        case CaseTag::C2b: return "2-b";
        case CaseTag::C2c: return "2-c";
        case CaseTag::C2d: return "2-d";
        case CaseTag::C2e: return "2-e";
        case CaseTag::C2f: return "2-f";
    }
    throw std::invalid_argument("unreachable case tag");
}

std::string to_string(Existence e) {
    switch (e) {
        case Existence::exists: return "exists";
        case Existence::open: return "open";
        case Existence::excluded: return "excluded";
    }
    throw std::invalid_argument("unreachable existence status");
}

Existence existence_status(const CaseLabel& label) {
    if (label.tag != CaseTag::C1f) return Existence::exists;
    if (!label.ksq) throw std::invalid_argument("case 1-f carries no K^2 value");
    switch (*label.ksq) {
        case 2:
        case 4:
        case 6:
        case 8:
            return Existence::exists;  // known product-quotient constructions
        case 1:
        case 7:
            return Existence::open;
        case 3:
        case 5:
            return Existence::excluded;  // mod-2 kernel obstruction
        default:
            throw std::invalid_argument("unknown case label: 1-f with K^2 = " + std::to_string(*label.ksq));
    }
}

namespace {

TraceStep step(std::string operation, Json inputs, Json outputs, std::string_view citation) {
    return TraceStep{std::move(operation), std::move(inputs), std::move(outputs), std::string(citation)};
}

void splice(ClassificationVerdict& dst, ClassificationVerdict src) {
    for (TraceStep& s : src.trace) dst.trace.push_back(std::move(s));
    for (CaseLabel& c : src.cases) dst.cases.push_back(std::move(c));
}

Json triple_json(const SurfaceInvariants& s) { return Json{{"q", s.q}, {"pg", s.pg}, {"h11", s.h11}}; }

// Shared bookkeeping for the nef branches: contraction of mu nodal curves
// followed by the orbifold BMY check on the nodal orbifold.
BmyVerdict contract_and_check(ClassificationVerdict& v, const SurfaceInvariants& s, int mu) {
    const ContractionData c = contract(s, mu);
    v.trace.push_back(step("contract", Json{{"mu", c.mu}},
                           Json{{"euler_contracted", c.euler_contracted}, {"ksq", c.ksq_contracted}},
                           cite::kContraction));
    const OrbifoldSurface orb = to_orbifold(c);
    const Rat e_orb = orbifold_euler(orb);
    const BmyVerdict verdict = bmy_check(orb, CanonicalClass::nef);
    v.trace.push_back(step("bmy_check",
                           Json{{"ksq", rat_to_string(orb.ksq)}, {"e_orb", rat_to_string(e_orb)},
                                {"canonical", "nef"}},
                           Json{{"verdict", to_string(verdict)}}, cite::kBmyNef));
    if (verdict == BmyVerdict::violated)
        throw std::logic_error("orbifold BMY violated on an enumerated solution");
    return verdict;
}

}  // namespace

ClassificationVerdict classify_max_nodal(bool nef_canonical) {
    ClassificationVerdict v;
    if (nef_canonical) {
        // mu = h11 - 1 nodal curves with K nef. Contracting them and running
        // the orbifold BMY inequality leaves 4q + 4pg + h11/2 <= 1/2.
        const auto sols = bmy_solution_enumerator(Rat(1, 2), 1);
        Json sol_json = Json::array();
        for (const SurfaceInvariants& s : sols) sol_json.push_back(triple_json(s));
        v.trace.push_back(step("bmy_solution_enumerator",
                               Json{{"slack", "1/2"}, {"h11_min", 1},
                                    {"constraint", "4q + 4pg + h11/2 <= 1/2"}},
                               Json{{"solutions", sol_json}}, cite::kBmyNef));
        if (sols.size() != 1 || !(sols[0] == noether(0, 0, 1)))
            throw std::logic_error("unexpected solution set in the maximal nef case");

        const SurfaceInvariants& s = sols[0];
        v.trace.push_back(step("noether", triple_json(s),
                               Json{{"ksq", s.ksq}, {"euler", s.euler}}, cite::kNoether));
        contract_and_check(v, s, s.h11 - 1);
        // q = pg = 0, K^2 = 9, b2 = 1, K nef and big: the surface has the
        // integral cohomology of the plane and ample canonical class.
        v.trace.push_back(step("surface_lookup",
                               Json{{"q", s.q}, {"pg", s.pg}, {"ksq", s.ksq}, {"canonical", "nef"}},
                               Json{{"case", "FPP"}}, cite::kEnriquesKodaira));
        v.cases.push_back(CaseLabel{CaseTag::FPP, std::nullopt, "ball quotient with b2 = 1"});
        return v;
    }

    // K not nef. The contraction S is a rational-homology projective plane
    // with nodes and anti-nef canonical class; X itself is rational (an
    // irrational X would be ruled over a positive-genus curve, where the
    // nodal curves sit in fibres and cannot reach h11 - 1 of them).
    v.trace.push_back(step("rationality_lookup", Json{{"canonical", "anti-nef"}},
                           Json{{"conclusion", "X is rational, q = pg = 0"}}, cite::kRuledness));
    const long long k_max = max_singular_points_filter(3, 2);
    v.trace.push_back(step("max_singular_points_filter",
                           Json{{"euler_smooth", 3}, {"min_group_order", 2}},
                           Json{{"max_points", k_max}}, cite::kSingularPointFilter));

    for (int k = 0; k <= k_max; ++k) {
        // Pic(X) is odd unimodular of rank 1 + k and contains the
        // finite-index sublattice spanned by -K_X (square 9 - k) and the k
        // disjoint nodal classes, so (9 - k) * 2^k must be a perfect square.
        GramMatrix sublattice = GramMatrix::diagonal({Int(9 - k)});
        for (int i = 0; i < k; ++i) sublattice = direct_sum(sublattice, ade_gram("A1"));
        const Int det_abs = abs(determinant(sublattice));
        const bool square = square_discriminant_test(sublattice);
        v.trace.push_back(step("square_discriminant_test",
                               Json{{"nodes", k},
                                    {"sublattice", "<" + std::to_string(9 - k) + "> + A1^" + std::to_string(k)}},
                               Json{{"det", int_to_string(det_abs)}, {"square", square}},
                               cite::kSquareDet));
        if (!square) continue;

        if (k == 0) {
            v.trace.push_back(step("surface_lookup", Json{{"nodes", 0}, {"ksq", 9}},
                                   Json{{"case", "P2"}}, cite::kEnriquesKodaira));
            v.cases.push_back(CaseLabel{CaseTag::P2, std::nullopt, ""});
        } else if (k == 1) {
            v.trace.push_back(step("surface_lookup", Json{{"nodes", 1}, {"ksq", 8}},
                                   Json{{"case", "F2"}}, cite::kEnriquesKodaira));
            v.cases.push_back(CaseLabel{CaseTag::F2, std::nullopt, "contraction is the quadric cone"});
        } else {
            throw std::logic_error("unexpected surviving node count in the maximal case");
        }
    }
    return v;
}

ClassificationVerdict classify_near_max(int q, int pg, int h11, bool nef_canonical) {
    if (!nef_canonical) {
        // K not nef: either X is nonminimal with kappa >= 0, or it is ruled;
        // the invariants play no further role.
        ClassificationVerdict v;
        v.trace.push_back(step("kodaira_dimension_split", Json{{"canonical", "not nef"}},
                               Json{{"branches", Json::array({"kappa >= 0 (nonminimal)",
                                                              "irrational ruled", "rational"})}},
                               cite::kEnriquesKodaira));
        for (NonminimalKind kind : {NonminimalKind::kappa_nonneg, NonminimalKind::irrational_ruled,
                                    NonminimalKind::rational})
            splice(v, nonminimal_decision_tree(kind));
        return v;
    }

    const SurfaceInvariants s = noether(q, pg, h11);
    ClassificationVerdict v;
    v.trace.push_back(step("noether", triple_json(s), Json{{"ksq", s.ksq}, {"euler", s.euler}},
                           cite::kNoether));
    if (h11 < 2) throw std::domain_error("no near-maximal configuration with h11 < 2");

    // K nef: contract the h11 - 2 nodal curves and run orbifold BMY, which
    // reduces to 4q + 4pg + h11/2 <= 5.
    const auto sols = bmy_solution_enumerator(Rat(5), 2);
    const bool admissible = std::find(sols.begin(), sols.end(), s) != sols.end();
    v.trace.push_back(step("bmy_membership",
                           Json{{"q", q}, {"pg", pg}, {"h11", h11},
                                {"constraint", "4q + 4pg + h11/2 <= 5"}},
                           Json{{"admissible", admissible}}, cite::kBmyNef));
    if (!admissible)
        throw std::domain_error("invariants violate the orbifold Bogomolov-Miyaoka-Yau inequality");

    const int mu = h11 - 2;
    const BmyVerdict bmy = contract_and_check(v, s, mu);

    if (q == 1) {
        // e = 0, K^2 = 0, K nef: minimal with kappa 0 or 1; q = 1 leaves the
        // bi-elliptic surfaces and the properly elliptic surfaces with q = 1.
        v.trace.push_back(step("surface_lookup",
                               Json{{"q", 1}, {"pg", 0}, {"ksq", 0}, {"euler", 0}, {"minimal", true}},
                               Json{{"cases", Json::array({"1-a", "1-b"})}}, cite::kEnriquesKodaira));
        v.cases.push_back(CaseLabel{CaseTag::C1a, std::nullopt, "bi-elliptic"});
        v.cases.push_back(CaseLabel{CaseTag::C1b, std::nullopt, "minimal, Kodaira dimension 1, q = 1"});
        return v;
    }

    if (pg == 1) {
        // K^2 = 18 = 3 e_orb: equality in BMY characterizes ball quotients.
        if (bmy != BmyVerdict::equality)
            throw std::logic_error("expected BMY equality for q = 0, pg = 1");
        v.trace.push_back(step("ball_quotient_characterization",
                               Json{{"ksq", s.ksq}, {"e_orb", rat_to_string(Rat(s.euler - mu))}},
                               Json{{"case", "1-e"}}, cite::kBmyNef));
        v.cases.push_back(CaseLabel{CaseTag::C1e, std::nullopt, "ball quotient attaining BMY equality"});
        return v;
    }

    if (h11 == 10) {
        // K^2 = 0, e = 12, minimal with kappa >= 0: Enriques or properly
        // elliptic with q = pg = 0.
        v.trace.push_back(step("surface_lookup",
                               Json{{"q", 0}, {"pg", 0}, {"ksq", 0}, {"euler", 12}, {"minimal", true}},
                               Json{{"cases", Json::array({"1-c", "1-d"})}}, cite::kEnriquesKodaira));
        // In the kappa = 1 case the fibres are rational multiples of K, so
        // all 8 nodal curves are vertical and the singular fibres' Euler
        // numbers sum to e(X) = 12.
        const auto multisets = elliptic_fibre_search(12, 8);
        v.trace.push_back(step("elliptic_fibre_search",
                               Json{{"total_euler", 12}, {"nodal_demand", 8}},
                               Json{{"multisets", fibre_multisets_to_json(multisets)}},
                               cite::kFibreEuler));
        if (multisets.size() != 1 || multisets[0].size() != 2)
            throw std::logic_error("unexpected fibre configurations for the h11 = 10 case");
        const std::string fibres = multisets[0][0].name() + " + " + multisets[0][1].name();
        v.cases.push_back(CaseLabel{CaseTag::C1c, std::nullopt, "Enriques surface, 8 nodal curves"});
        v.cases.push_back(CaseLabel{CaseTag::C1d, std::nullopt,
                                    "reducible fibres " + fibres + "; end components give the 8 curves"});
        return v;
    }

    // q = pg = 0, 2 <= h11 <= 9: K^2 = 10 - h11 >= 1 and K nef force a
    // minimal surface of general type.
    v.trace.push_back(step("surface_lookup",
                           Json{{"q", 0}, {"pg", 0}, {"ksq", s.ksq}, {"minimal", true}},
                           Json{{"kodaira_dimension", 2}}, cite::kEnriquesKodaira));
    if (h11 == 2)
        // Carrying even one nodal curve would put the K^2 = 8 surface in the
        // maximal class, which contains no general type surface with K^2 = 8.
        v.trace.push_back(step("maximal_case_consistency", Json{{"ksq", 8}},
                               Json{{"conclusion", "no (-2)-curves; mu = 0 is consistent"}},
                               cite::kMaxNodal));

    // H^2(X, Z)/torsion is odd unimodular of rank 2 pg + h11 = h11; the mu
    // nodal classes inject mod 2 only if the kernel bound is met by a
    // doubly-even subspace.
    const int ambient_rank = 2 * pg + h11;
    const int min_dim = min_kernel_dimension(mu, ambient_rank);
    v.trace.push_back(step("min_kernel_dimension",
                           Json{{"mu", mu}, {"ambient_rank", ambient_rank}},
                           Json{{"min_kernel_dim", min_dim}}, cite::kIsotropicBound));
    const ObstructionReport report = nodal_embedding_obstruction(mu, ambient_rank);
    v.trace.push_back(step("doubly_even_subspace_search",
                           Json{{"mu", mu}, {"target_dim", min_dim}},
                           Json{{"feasible", report.feasible},
                                {"witness", report.witness ? subspace_to_json(*report.witness)
                                                           : Json(nullptr)}},
                           cite::kDoublyEvenKernel));
    if (report.feasible) {
        v.cases.push_back(CaseLabel{CaseTag::C1f, static_cast<int>(s.ksq),
                                    std::to_string(mu) + " disjoint nodal curves"});
    } else {
        v.trace.push_back(step("exclude_case",
                               Json{{"candidate", "1-f with K^2 = " + std::to_string(s.ksq)}},
                               Json{{"excluded", true}, {"reason", report.note}},
                               cite::kDoublyEvenKernel));
    }
    return v;
}

int mu_bound_after_blowdowns(int mu_minimal, int r) {
    if (mu_minimal < 0 || r < 0) throw std::invalid_argument("negative blow-down data");
    return mu_minimal + r / 2;
}

std::vector<std::vector<KodairaFibre>> elliptic_fibre_search(int total_euler, int nodal_demand) {
    if (total_euler < 0 || nodal_demand < 0)
        throw std::invalid_argument("fibre search arguments must be nonnegative");
    constexpr int kFibreSearchBudget = 30;
    if (total_euler > kFibreSearchBudget) throw std::domain_error("fibre search budget exceeded");

    const std::vector<KodairaFibre> catalog = singular_fibre_catalog(total_euler);
    std::vector<std::vector<KodairaFibre>> out;
    std::vector<KodairaFibre> current;
    // Nondecreasing catalog index: every multiset appears exactly once, in
    // lexicographic catalog order.
    auto recurse = [&](auto&& self, std::size_t from, int remaining, int capacity) -> void {
        if (remaining == 0) {
            if (capacity >= nodal_demand) out.push_back(current);
            return;
        }
        for (std::size_t i = from; i < catalog.size(); ++i) {
            if (catalog[i].euler() > remaining) continue;
            current.push_back(catalog[i]);
            self(self, i, remaining - catalog[i].euler(), capacity + catalog[i].nodal_capacity());
            current.pop_back();
        }
    };
    recurse(recurse, 0, total_euler, 0);
    return out;
}

ClassificationVerdict nonminimal_decision_tree(NonminimalKind kind) {
    ClassificationVerdict v;
    switch (kind) {
        case NonminimalKind::kappa_nonneg: {
            // phi: X -> Y minimal, r = rho(X) - rho(Y) >= 1 blow-downs:
            // h11(Y) + r - 2 = mu(X) <= mu(Y) + floor(r/2) <= h11(Y) - 1 +
            // floor(r/2) forces r <= 2 and mu(Y) = h11(Y) - 1 in both cases.
            v.trace.push_back(step("blow_down_bound",
                                   Json{{"identity", "h11(Y) + r - 2 = mu(X) <= mu(Y) + floor(r/2)"}},
                                   Json{{"r_max", 2}, {"forces", "mu(Y) = h11(Y) - 1"}},
                                   cite::kBlowDownBound));
            // A minimal surface with kappa >= 0 and the maximal nodal count:
            // of P2, F2, FPP only the fake projective plane qualifies.
            v.trace.push_back(step("maximal_minimal_model",
                                   Json{{"mu", "h11(Y) - 1"}, {"kappa", ">= 0"}},
                                   Json{{"minimal_model", "FPP"}, {"h11", 1}}, cite::kMaxNodal));
            for (int r = 1; r <= 2; ++r) {
                const int bound = mu_bound_after_blowdowns(0, r);
                const int mu_x = (1 + r) - 2;  // h11(X) - 2 with h11(Y) = 1
                v.trace.push_back(step("mu_bound_after_blowdowns",
                                       Json{{"mu_minimal", 0}, {"r", r}},
                                       Json{{"mu_bound", bound}, {"mu_x", mu_x},
                                            {"consistent", mu_x <= bound}},
                                       cite::kBlowDownBound));
                if (mu_x > bound) throw std::logic_error("blow-down bound violated");
            }
            v.cases.push_back(CaseLabel{CaseTag::C2a, std::nullopt,
                                        "one point, or two infinitely near points"});
            return v;
        }
        case NonminimalKind::irrational_ruled: {
            // Rational curves cannot dominate the positive-genus base of the
            // Albanese ruling, so every nodal curve is vertical.
            v.trace.push_back(step("albanese_projection",
                                   Json{{"kappa", "-infinity"}, {"irrational", true}},
                                   Json{{"conclusion", "nodal curves lie in fibres of the ruling"}},
                                   cite::kAlbaneseFibres));
            // mu(X) = h11(X) - 2 equals the number of blow-ups from the
            // relatively minimal model, so every blown-up fibre must carry
            // as many disjoint nodal curves as blow-ups.
            v.trace.push_back(step("fibre_blowup_accounting",
                                   Json{{"identity", "mu(X) = h11(X) - 2 = rho(X) - rho(Y)"}},
                                   Json{{"fibre_string", "(-2)-(-1)-(-2)"},
                                        {"blowups_per_fibre", 2},
                                        {"nodal_per_fibre", 2}},
                                   cite::kAlbaneseFibres));
            v.cases.push_back(CaseLabel{CaseTag::C2b, std::nullopt,
                                        "relatively minimal, or k >= 1 fibres blown up to "
                                        "(-2)-(-1)-(-2) strings"});
            return v;
        }
        case NonminimalKind::rational: {
            v.trace.push_back(step("rational_surface_lookup",
                                   Json{{"kappa", "-infinity"}, {"rational", true}},
                                   Json{{"cases", Json::array({"2-c", "2-d", "2-e", "2-f"})}},
                                   cite::kDlp));
            v.cases.push_back(CaseLabel{CaseTag::C2c, std::nullopt, "F_e with e != 2"});
            v.cases.push_back(CaseLabel{CaseTag::C2d, std::nullopt,
                                        "F_e with k >= 1 fibres blown up to (-2)-(-1)-(-2) strings"});
            v.cases.push_back(CaseLabel{CaseTag::C2e, std::nullopt,
                                        "F_2 with one fibre blown up to (-1)-(-2)-(-1), off the "
                                        "negative section"});
            v.cases.push_back(CaseLabel{CaseTag::C2f, std::nullopt,
                                        "F_2 blown up once off the negative section"});
            return v;
        }
    }
    throw std::invalid_argument("unreachable decision branch");
}

}  // namespace nodal
