#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nodal/lattice.hpp"
#include "nodal/numeric.hpp"

namespace nodal {

// Minimal resolution data of a quotient surface singularity. The exceptional
// curves E_j carry self-intersections b_j <= -2; discrepancies a_j solve
// D . E_i = 2 + b_i for D = sum a_j E_j, and dsq = D^2 = sum a_j (2 + b_j)
// is the local correction to K^2 under resolution.
struct ResolutionString {
    std::vector<long long> self_intersections;
    std::vector<Rat> discrepancies;  // each in [0, 1)
    Rat dsq;                         // <= 0
    // Order of the local fundamental group. For a chain (cyclic quotient
    // 1/n(1, q)) this is |det| of the exceptional Gram; for branched ADE
    // trees the determinant rule does not apply and the field stays empty.
    std::optional<Int> group_order;
    GramMatrix gram;
};

// Hirzebruch-Jung continued fraction of n/q for n > q >= 1, gcd(n, q) = 1:
// the self-intersections [-b_1, ..., -b_k] of the exceptional chain of the
// cyclic quotient singularity of type 1/n(1, q).
std::vector<long long> hj_string(long long n, long long q);

// Resolution data for the chain with the given self-intersections (each
// <= -2). Negative definiteness is verified, not assumed.
ResolutionString solve_discrepancies(const std::vector<long long>& chain);

// Resolution data for an arbitrary exceptional Gram: diagonal <= -2,
// off-diagonal 0 or 1, connected tree. Supports chains and ADE
// configurations; anything else (branched non-ADE graphs) is rejected.
ResolutionString solve_discrepancies(const GramMatrix& gram);

// The ordinary node 1/2(1, 1): a single (-2)-curve.
ResolutionString node_singularity();

struct OrbifoldSurface {
    long long euler_smooth = 0;  // topological Euler number of the surface
    std::vector<ResolutionString> singularities;
    Rat ksq;  // self-intersection of the canonical class
};

// Convenience: a surface with `nodes` ordinary nodes.
OrbifoldSurface make_nodal_orbifold(long long euler_smooth, int nodes, const Rat& ksq);

// e_orb = e - sum_p (1 - 1/|G_p|). Requires every singularity to carry a
// group order (>= 2).
Rat orbifold_euler(const OrbifoldSurface& s);

enum class CanonicalClass { nef, anti_nef };
enum class BmyVerdict { satisfied, violated, equality };

std::string to_string(CanonicalClass c);
std::string to_string(BmyVerdict v);

// Orbifold Bogomolov-Miyaoka-Yau test: K^2 <= 3 e_orb when the canonical
// class is nef, 0 <= e_orb when the anti-canonical class is nef. `equality`
// means the bound is attained exactly.
BmyVerdict bmy_check(const OrbifoldSurface& s, CanonicalClass canonical);

// Largest number of singular points with group order >= min_group_order
// compatible with e_orb >= 0 on a surface of Euler number euler_smooth:
// floor(e * m / (m - 1)), and 0 when euler_smooth <= 0.
long long max_singular_points_filter(long long euler_smooth, long long min_group_order);

}  // namespace nodal
