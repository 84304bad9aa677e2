#pragma once

#include <string>
#include <vector>

#include "nodal/numeric.hpp"

namespace nodal {

// Symmetric integer Gram matrix of a lattice with a chosen basis; entry
// (i, j) is the intersection product of basis vectors i and j. Rank zero is
// the empty lattice (determinant 1, empty signature), which keeps direct
// sums total.
class GramMatrix {
public:
    GramMatrix() = default;

    // Throws std::invalid_argument unless `entries` is square and symmetric.
    explicit GramMatrix(const std::vector<std::vector<Int>>& entries);

    static GramMatrix empty() { return GramMatrix(); }
    static GramMatrix diagonal(const std::vector<Int>& diag);

    // Path graph: the given diagonal, +1 between consecutive basis vectors.
    static GramMatrix chain(const std::vector<Int>& diag);

    int rank() const { return n_; }
    bool is_empty() const { return n_ == 0; }
    const Int& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

    friend bool operator==(const GramMatrix&, const GramMatrix&) = default;

private:
    int n_ = 0;
    std::vector<Int> a_;  // row-major n_ x n_
};

struct Signature {
    int positive = 0;
    int negative = 0;
    int zero = 0;

    friend bool operator==(const Signature&, const Signature&) = default;
};

struct SmithForm {
    // Nonnegative elementary divisors d_1 | d_2 | ... | d_n; trailing zeros
    // record the rank defect.
    std::vector<Int> divisors;

    friend bool operator==(const SmithForm&, const SmithForm&) = default;
};

// Exact determinant (fraction-free elimination; every division is exact).
Int determinant(const GramMatrix& g);

// Sylvester inertia of the real quadratic form, computed by rational
// congruence transformations. positive + negative + zero == rank.
Signature signature(const GramMatrix& g);

bool is_negative_definite(const GramMatrix& g);

SmithForm smith_normal_form(const GramMatrix& g);

GramMatrix direct_sum(const GramMatrix& a, const GramMatrix& b);

// True iff |det| is a perfect square. A finite-index sublattice of a
// unimodular lattice has square determinant, so a non-square determinant
// refutes any such embedding. Throws std::domain_error on det == 0: the test
// is meaningless for degenerate forms.
bool square_discriminant_test(const GramMatrix& g);

// Negative-definite root lattice for "An" (n >= 1), "Dn" (n >= 4), "E6",
// "E7", "E8": diagonal -2, entry +1 on Dynkin diagram adjacencies. Throws
// std::invalid_argument for anything else.
GramMatrix ade_gram(const std::string& label);

}  // namespace nodal
