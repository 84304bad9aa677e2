#pragma once

#include <vector>

#include "nodal/numeric.hpp"
#include "nodal/singularities.hpp"

namespace nodal {

// Hodge-theoretic bookkeeping for a smooth projective surface: irregularity
// q, geometric genus pg, middle Hodge number h11, with the derived
// topological Euler number e = 2 - 4q + 2 pg + h11 and Noether's formula
// K^2 = 12 chi(O) - e, chi(O) = 1 - q + pg.
struct SurfaceInvariants {
    int q = 0;
    int pg = 0;
    int h11 = 1;
    long long ksq = 0;
    long long euler = 0;

    friend bool operator==(const SurfaceInvariants&, const SurfaceInvariants&) = default;
};

SurfaceInvariants noether(int q, int pg, int h11);

// Contraction of mu pairwise disjoint nodal curves on X to nodes: the Euler
// number drops by mu and K^2 is unchanged (nodes have discrepancy zero).
struct ContractionData {
    SurfaceInvariants x;
    int mu = 0;
    long long euler_contracted = 0;
    long long ksq_contracted = 0;
};

ContractionData contract(const SurfaceInvariants& x, int mu);

OrbifoldSurface to_orbifold(const ContractionData& c);

// All (q, pg, h11) with h11 >= h11_min satisfying 4q + 4 pg + h11 / 2 <=
// slack, in lexicographic order. This linear form is what the orbifold BMY
// inequality reduces to for a surface carrying h11 - c disjoint nodal
// curves; see the classifier for the two instantiations.
std::vector<SurfaceInvariants> bmy_solution_enumerator(const Rat& slack, int h11_min);

}  // namespace nodal
