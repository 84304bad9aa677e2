#include "nodal/lattice.hpp"

#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace nodal {

GramMatrix::GramMatrix(const std::vector<std::vector<Int>>& entries) {
    n_ = static_cast<int>(entries.size());
    a_.resize(static_cast<std::size_t>(n_) * n_);
    for (int i = 0; i < n_; ++i) {
        if (static_cast<int>(entries[i].size()) != n_)
            throw std::invalid_argument("gram matrix must be square");
        for (int j = 0; j < n_; ++j) a_[static_cast<std::size_t>(i) * n_ + j] = entries[i][j];
    }
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (at(i, j) != at(j, i)) throw std::invalid_argument("gram matrix must be symmetric");
}

GramMatrix GramMatrix::diagonal(const std::vector<Int>& diag) {
    const int n = static_cast<int>(diag.size());
    std::vector<std::vector<Int>> m(n, std::vector<Int>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = diag[i];
    return GramMatrix(m);
}

GramMatrix GramMatrix::chain(const std::vector<Int>& diag) {
    const int n = static_cast<int>(diag.size());
    std::vector<std::vector<Int>> m(n, std::vector<Int>(n, 0));
    for (int i = 0; i < n; ++i) {
        m[i][i] = diag[i];
        if (i + 1 < n) m[i][i + 1] = m[i + 1][i] = 1;
    }
    return GramMatrix(m);
}

Int determinant(const GramMatrix& g) {
    const int n = g.rank();
    if (n == 0) return 1;
    std::vector<Int> m(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[static_cast<std::size_t>(i) * n + j] = g.at(i, j);

    auto e = [&](int i, int j) -> Int& { return m[static_cast<std::size_t>(i) * n + j]; };

    // Bareiss elimination: intermediate entries stay integral and every
    // division below is exact.
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (e(k, k) == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (e(i, k) != 0) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) return 0;
            for (int j = k; j < n; ++j) std::swap(e(k, j), e(pivot, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) e(i, j) = (e(i, j) * e(k, k) - e(i, k) * e(k, j)) / prev;
            e(i, k) = 0;
        }
        prev = e(k, k);
    }
    Int result = e(n - 1, n - 1);
    if (sign < 0) result = -result;
    return result;
}

Signature signature(const GramMatrix& g) {
    const int n = g.rank();
    Signature s;
    if (n == 0) return s;

    std::vector<Rat> m(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[static_cast<std::size_t>(i) * n + j] = Rat(g.at(i, j));
    auto e = [&](int i, int j) -> Rat& { return m[static_cast<std::size_t>(i) * n + j]; };

    auto swap_basis = [&](int i, int j) {
        for (int c = 0; c < n; ++c) std::swap(e(i, c), e(j, c));
        for (int r = 0; r < n; ++r) std::swap(e(r, i), e(r, j));
    };
    auto add_basis = [&](int i, int j) {  // e_i <- e_i + e_j
        for (int c = 0; c < n; ++c) e(i, c) += e(j, c);
        for (int r = 0; r < n; ++r) e(r, i) += e(r, j);
    };

    // Diagonalize by congruences A -> E A E^T; inertia is invariant
    // (Sylvester). At step i every entry coupling the already-processed
    // basis vectors to the rest is zero.
    for (int i = 0; i < n; ++i) {
        int pivot = -1;
        for (int j = i; j < n; ++j)
            if (e(j, j) != 0) {
                pivot = j;
                break;
            }
        if (pivot >= 0) {
            if (pivot != i) swap_basis(i, pivot);
        } else {
            // Every remaining diagonal entry vanishes. If row i couples to
            // some later vector, e_i + e_j picks up diagonal 2*A(i, j) != 0;
            // otherwise e_i is in the radical of the remaining block.
            int j = -1;
            for (int c = i + 1; c < n; ++c)
                if (e(i, c) != 0) {
                    j = c;
                    break;
                }
            if (j < 0) {
                ++s.zero;
                continue;
            }
            add_basis(i, j);
        }

        const Rat d = e(i, i);
        if (d > 0)
            ++s.positive;
        else
            ++s.negative;
        for (int r = i + 1; r < n; ++r) {
            if (e(r, i) == 0) continue;
            const Rat f = e(r, i) / d;
            for (int c = 0; c < n; ++c) e(r, c) -= f * e(i, c);
            for (int c = 0; c < n; ++c) e(c, r) -= f * e(c, i);
        }
    }
    return s;
}

bool is_negative_definite(const GramMatrix& g) {
    const Signature s = signature(g);
    return s.positive == 0 && s.zero == 0;
}

SmithForm smith_normal_form(const GramMatrix& g) {
    const int n = g.rank();
    std::vector<Int> m(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[static_cast<std::size_t>(i) * n + j] = g.at(i, j);
    auto e = [&](int i, int j) -> Int& { return m[static_cast<std::size_t>(i) * n + j]; };

    SmithForm out;
    out.divisors.assign(n, 0);

    for (int s = 0; s < n; ++s) {
        // Select a nonzero entry of minimal magnitude in the trailing block.
        int pi = -1, pj = -1;
        Int best = 0;
        for (int i = s; i < n; ++i)
            for (int j = s; j < n; ++j) {
                if (e(i, j) == 0) continue;
                const Int mag = abs(e(i, j));
                if (pi < 0 || mag < best) {
                    best = mag;
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;  // trailing block is zero; divisors stay 0

        for (int j = s; j < n; ++j) std::swap(e(s, j), e(pi, j));
        for (int i = s; i < n; ++i) std::swap(e(i, s), e(i, pj));

        bool settled = false;
        while (!settled) {
            settled = true;
            for (int i = s + 1; i < n; ++i) {
                if (e(i, s) == 0) continue;
                const Int q = e(i, s) / e(s, s);
                for (int j = s; j < n; ++j) e(i, j) -= q * e(s, j);
                if (e(i, s) != 0) {
                    // Remainder has smaller magnitude than the pivot; promote it.
                    for (int j = s; j < n; ++j) std::swap(e(s, j), e(i, j));
                    settled = false;
                }
            }
            if (!settled) continue;
            for (int j = s + 1; j < n; ++j) {
                if (e(s, j) == 0) continue;
                const Int q = e(s, j) / e(s, s);
                for (int i = s; i < n; ++i) e(i, j) -= q * e(i, s);
                if (e(s, j) != 0) {
                    for (int i = s; i < n; ++i) std::swap(e(i, s), e(i, j));
                    settled = false;
                }
            }
            if (!settled) continue;
            // Pivot must divide the trailing block for the divisor chain.
            for (int i = s + 1; i < n && settled; ++i)
                for (int j = s + 1; j < n && settled; ++j)
                    if (e(i, j) % e(s, s) != 0) {
                        for (int c = s; c < n; ++c) e(s, c) += e(i, c);
                        settled = false;
                    }
        }
        out.divisors[s] = abs(e(s, s));
    }
    return out;
}

GramMatrix direct_sum(const GramMatrix& a, const GramMatrix& b) {
    const int na = a.rank(), nb = b.rank();
    std::vector<std::vector<Int>> m(na + nb, std::vector<Int>(na + nb, 0));
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j) m[i][j] = a.at(i, j);
    for (int i = 0; i < nb; ++i)
        for (int j = 0; j < nb; ++j) m[na + i][na + j] = b.at(i, j);
    return GramMatrix(m);
}

bool square_discriminant_test(const GramMatrix& g) {
    const Int det = determinant(g);
    if (det == 0) throw std::domain_error("square discriminant test requires a nondegenerate form");
    return is_perfect_square(abs(det));
}

GramMatrix ade_gram(const std::string& label) {
    if (label.size() < 2) throw std::invalid_argument("invalid ADE label: " + label);
    const char family = label[0];
    int n = 0;
    try {
        std::size_t used = 0;
        n = std::stoi(label.substr(1), &used);
        if (used + 1 != label.size()) throw std::invalid_argument(label);
    } catch (const std::exception&) {
        throw std::invalid_argument("invalid ADE label: " + label);
    }

    // Dynkin edges; vertices 0..n-1.
    std::vector<std::pair<int, int>> edges;
    if (family == 'A' && n >= 1) {
        for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    } else if (family == 'D' && n >= 4) {
        for (int i = 0; i + 1 < n - 2; ++i) edges.emplace_back(i, i + 1);
        edges.emplace_back(n - 3, n - 2);
        edges.emplace_back(n - 3, n - 1);
    } else if (family == 'E' && n >= 6 && n <= 8) {
        for (int i = 0; i + 1 < n - 1; ++i) edges.emplace_back(i, i + 1);
        edges.emplace_back(2, n - 1);
    } else {
        throw std::invalid_argument("invalid ADE label: " + label);
    }

    std::vector<std::vector<Int>> m(n, std::vector<Int>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = -2;
    for (const auto& [u, v] : edges) m[u][v] = m[v][u] = 1;
    return GramMatrix(m);
}

}  // namespace nodal
