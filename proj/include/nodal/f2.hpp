#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nodal {

// Ambient dimension cap for the subspace searches below. 16 coordinates is
// comfortably past every case the classifier generates (mu <= 10) while the
// enumeration stays exhaustive.
inline constexpr int kF2SearchBudget = 16;

// Vector in F_2^len with len <= kF2SearchBudget. Coordinate i lives at bit
// (len - 1 - i), so integer order on `bits` is lexicographic order on
// coordinate strings.
struct F2Vector {
    int len = 0;
    std::uint32_t bits = 0;

    bool get(int i) const { return (bits >> (len - 1 - i)) & 1u; }
    int weight() const;
    std::string to_string() const;  // coordinate 0 first, e.g. "1100"

    friend bool operator==(const F2Vector&, const F2Vector&) = default;
};

struct F2Subspace {
    int len = 0;
    std::vector<F2Vector> basis;  // linearly independent

    int dimension() const { return static_cast<int>(basis.size()); }
};

// Rank of the span of `vectors` over F_2.
int f2_rank(const std::vector<F2Vector>& vectors);

// Lower bound for the dimension of ker(Z^mu -> L/2L) where L is unimodular
// of the given rank: the image is totally isotropic for the mod-2
// intersection form, so it has dimension at most floor(rank / 2).
int min_kernel_dimension(int mu, int ambient_rank);

// Exhaustive search for a doubly-even subspace of F_2^mu (every member has
// weight divisible by 4) of exactly the target dimension. Returns the
// lexicographically first reduced basis if one exists. Throws
// std::domain_error when mu exceeds kF2SearchBudget and
// std::invalid_argument on negative arguments.
std::optional<F2Subspace> doubly_even_subspace_search(int mu, int target_dim);

// Verdict of the mod-2 embedding obstruction for mu pairwise disjoint nodal
// curves on a surface whose torsion-free cohomology lattice is unimodular of
// rank ambient_rank.
struct ObstructionReport {
    int mu = 0;
    int ambient_rank = 0;
    int min_kernel_dim = 0;
    bool feasible = false;
    std::optional<F2Subspace> witness;  // present iff feasible (zero subspace when min_kernel_dim == 0)
    std::string note;                   // refutation summary when infeasible
};

ObstructionReport nodal_embedding_obstruction(int mu, int ambient_rank);

}  // namespace nodal
