#include "nodal/f2.hpp"

#include <bit>
#include <stdexcept>

namespace nodal {

int F2Vector::weight() const { return std::popcount(bits); }

std::string F2Vector::to_string() const {
    std::string s(static_cast<std::size_t>(len), '0');
    for (int i = 0; i < len; ++i)
        if (get(i)) s[static_cast<std::size_t>(i)] = '1';
    return s;
}

int f2_rank(const std::vector<F2Vector>& vectors) {
    std::vector<std::uint32_t> rows;
    for (const F2Vector& v : vectors) {
        std::uint32_t r = v.bits;
        for (std::uint32_t p : rows)
            if (std::uint32_t lead = std::bit_floor(p); r & lead) r ^= p;
        if (r) rows.push_back(r);
    }
    return static_cast<int>(rows.size());
}

int min_kernel_dimension(int mu, int ambient_rank) {
    if (mu < 0) throw std::invalid_argument("mu must be nonnegative");
    if (ambient_rank < 1) throw std::invalid_argument("ambient rank must be positive");
    const int image_cap = ambient_rank / 2;
    return mu > image_cap ? mu - image_cap : 0;
}

namespace {

// Depth-first search over reduced bases in pivot-set-major lexicographic
// order. A subspace is doubly even iff every basis vector has weight
// divisible by 4 and the basis vectors pairwise intersect evenly: weights
// add as w(x ^ y) = w(x) + w(y) - 2 w(x & y), so these conditions propagate
// to the whole span. That makes the partial-basis filter exact and the
// search result independent of enumeration order.
struct SubspaceSearch {
    int mu;
    int dim;
    std::vector<int> pivots;         // chosen pivot coordinates, ascending
    std::uint32_t pivot_mask = 0;    // bits of the chosen pivot coordinates
    std::vector<std::uint32_t> rows;

    std::uint32_t coord_bit(int c) const { return 1u << (mu - 1 - c); }

    bool admissible(std::uint32_t row) const {
        if (std::popcount(row) % 4 != 0) return false;
        for (std::uint32_t r : rows)
            if (std::popcount(row & r) % 2 != 0) return false;
        return true;
    }

    bool choose_pivots(int k, int from) {
        if (k == dim) return fill_rows(0);
        // Need dim - k further pivots among coordinates from..mu-1.
        for (int p = from; p + (dim - k - 1) < mu; ++p) {
            pivots.push_back(p);
            pivot_mask |= coord_bit(p);
            if (choose_pivots(k + 1, p + 1)) return true;
            pivot_mask &= ~coord_bit(p);
            pivots.pop_back();
        }
        return false;
    }

    bool fill_rows(int i) {
        if (i == dim) return true;
        // Reduced form: row i has a 1 at pivots[i], zeros at the other pivot
        // coordinates and at coordinates before its pivot. Free coordinates
        // are the non-pivot ones after pivots[i].
        const int p = pivots[i];
        const std::uint32_t tail = (p + 1 < mu) ? ((1u << (mu - 1 - p)) - 1u) : 0u;
        const std::uint32_t free_mask = tail & ~pivot_mask;
        std::uint32_t sub = 0;
        while (true) {  // submasks of free_mask in ascending order, 0 first
            const std::uint32_t row = coord_bit(p) | sub;
            if (admissible(row)) {
                rows.push_back(row);
                if (fill_rows(i + 1)) return true;
                rows.pop_back();
            }
            sub = (sub - free_mask) & free_mask;
            if (sub == 0) break;
        }
        return false;
    }
};

}  // namespace

std::optional<F2Subspace> doubly_even_subspace_search(int mu, int target_dim) {
    if (mu < 0 || target_dim < 0) throw std::invalid_argument("dimensions must be nonnegative");
    if (mu > kF2SearchBudget) throw std::domain_error("ambient F_2 dimension exceeds search budget");

    F2Subspace space;
    space.len = mu;
    if (target_dim == 0) return space;
    // A doubly-even subspace is totally isotropic for the standard dot
    // product (pairwise intersections are even), so its dimension is at most
    // floor(mu / 2). Everything past that bound is refuted without search.
    if (2 * target_dim > mu) return std::nullopt;

    SubspaceSearch search{mu, target_dim, {}, 0, {}};
    if (!search.choose_pivots(0, 0)) return std::nullopt;
    for (std::uint32_t row : search.rows) space.basis.push_back(F2Vector{mu, row});
    return space;
}

ObstructionReport nodal_embedding_obstruction(int mu, int ambient_rank) {
    ObstructionReport report;
    report.mu = mu;
    report.ambient_rank = ambient_rank;
    report.min_kernel_dim = min_kernel_dimension(mu, ambient_rank);

    // Divisibility classes of sums of disjoint nodal curves: a kernel class
    // sum_{i in J} C_i = 2 D has (sum C_i)^2 = -2|J| = 4 D^2, and D^2 is
    // even because D is integral with D.K = 0 on these surfaces, so |J| is
    // divisible by 4. The kernel is therefore a doubly-even subspace of
    // F_2^mu, and its dimension is forced by min_kernel_dimension.
    report.witness = doubly_even_subspace_search(mu, report.min_kernel_dim);
    report.feasible = report.witness.has_value();
    if (!report.feasible)
        report.note = "no doubly-even subspace of dimension " + std::to_string(report.min_kernel_dim) +
                      " exists in F_2^" + std::to_string(mu);
    return report;
}

}  // namespace nodal
