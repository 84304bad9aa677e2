#include "nodal/invariants.hpp"

#include <stdexcept>

namespace nodal {

SurfaceInvariants noether(int q, int pg, int h11) {
    if (q < 0 || pg < 0) throw std::invalid_argument("q and pg must be nonnegative");
    if (h11 < 1) throw std::invalid_argument("h11 must be positive");
    SurfaceInvariants s;
    s.q = q;
    s.pg = pg;
    s.h11 = h11;
    s.euler = 2LL - 4LL * q + 2LL * pg + h11;
    s.ksq = 12LL * (1 - q + pg) - s.euler;
    return s;
}

ContractionData contract(const SurfaceInvariants& x, int mu) {
    if (mu < 0) throw std::invalid_argument("negative nodal count");
    // Disjoint classes of square -2 span a negative-definite sublattice of
    // the Neron-Severi group, which leaves room for at most h11 - 1 of them
    // next to an ample class (Hodge index).
    if (mu > x.h11 - 1) throw std::invalid_argument("nodal count exceeds the Hodge index bound h11 - 1");
    ContractionData c;
    c.x = x;
    c.mu = mu;
    c.euler_contracted = x.euler - mu;
    c.ksq_contracted = x.ksq;
    return c;
}

OrbifoldSurface to_orbifold(const ContractionData& c) {
    return make_nodal_orbifold(c.euler_contracted, c.mu, Rat(c.ksq_contracted));
}

std::vector<SurfaceInvariants> bmy_solution_enumerator(const Rat& slack, int h11_min) {
    if (h11_min < 1) throw std::invalid_argument("h11 must be positive");
    std::vector<SurfaceInvariants> out;
    if (slack < 0) return out;
    // 4q <= slack, 4pg <= slack, h11/2 <= slack: a finite box, swept in
    // lexicographic order so the output is deterministic.
    const long long q_max = rat_floor(slack / 4).convert_to<long long>();
    for (long long q = 0; q <= q_max; ++q) {
        const Rat after_q = slack - 4 * Rat(q);
        const long long pg_max = rat_floor(after_q / 4).convert_to<long long>();
        for (long long pg = 0; pg <= pg_max; ++pg) {
            const Rat after_pg = after_q - 4 * Rat(pg);
            const long long h_max = rat_floor(2 * after_pg).convert_to<long long>();
            for (long long h = h11_min; h <= h_max; ++h)
                out.push_back(noether(static_cast<int>(q), static_cast<int>(pg), static_cast<int>(h)));
        }
    }
    return out;
}

}  // namespace nodal
