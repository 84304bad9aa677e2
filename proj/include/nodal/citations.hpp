#pragma once

#include <array>
#include <string_view>

namespace nodal::cite {

// Closed vocabulary for the `citation` field of trace steps: every step
// names the single mathematical fact that justifies it. Steps marked
// "(external lookup)" import a classification result instead of computing
// it; everything else is recomputed by this library. Tests reject traces
// whose citations stray outside this list.

inline constexpr std::string_view kNoether = "Noether formula";
inline constexpr std::string_view kHodgeIndex = "Hodge index bound on disjoint nodal classes";
inline constexpr std::string_view kContraction = "nodal contraction bookkeeping";
inline constexpr std::string_view kDiscrepancy = "discrepancy linear system D.E_i = 2 + E_i^2";
inline constexpr std::string_view kBmyNef = "orbifold Bogomolov-Miyaoka-Yau inequality (nef canonical class)";
inline constexpr std::string_view kBmyAntiNef = "orbifold Euler number nonnegativity (anti-nef canonical class)";
inline constexpr std::string_view kSingularPointFilter = "orbifold Euler number bound on the number of singular points";
inline constexpr std::string_view kSquareDet =
    "square determinant obstruction for finite-index sublattices of a unimodular lattice";
inline constexpr std::string_view kIsotropicBound = "totally isotropic image bound in L/2L";
inline constexpr std::string_view kDoublyEvenKernel = "doubly-even weight constraint on the mod-2 kernel";
inline constexpr std::string_view kBlowDownBound = "blow-down bound mu(X) <= mu(Y) + r/2";
inline constexpr std::string_view kFibreEuler = "Euler number additivity over singular elliptic fibres";
inline constexpr std::string_view kAlbaneseFibres = "Albanese fibre count on an irrational ruled surface";
inline constexpr std::string_view kMaxNodal = "classification of the maximal nodal configurations (internal result)";
inline constexpr std::string_view kEnriquesKodaira = "Enriques-Kodaira classification (external lookup)";
inline constexpr std::string_view kRuledness = "ruling of non-rational surfaces with nef anti-canonical class (external lookup)";
inline constexpr std::string_view kDlp = "Dolgachev-Mendes Lopes-Pardini list for rational surfaces (external lookup)";
inline constexpr std::string_view kExistenceLedger = "existence ledger for the near-maximal cases (external lookup)";

inline constexpr std::array<std::string_view, 18> all = {
    kNoether,          kHodgeIndex,   kContraction,    kDiscrepancy,       kBmyNef,
    kBmyAntiNef,       kSingularPointFilter, kSquareDet, kIsotropicBound,  kDoublyEvenKernel,
    kBlowDownBound,    kFibreEuler,   kAlbaneseFibres, kMaxNodal,          kEnriquesKodaira,
    kRuledness,        kDlp,          kExistenceLedger,
};

}  // namespace nodal::cite
