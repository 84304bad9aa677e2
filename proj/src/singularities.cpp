#include "nodal/singularities.hpp"

#include <numeric>
#include <stdexcept>

namespace nodal {

std::vector<long long> hj_string(long long n, long long q) {
    if (q < 1 || n <= q) throw std::invalid_argument("hj_string requires n > q >= 1");
    if (std::gcd(n, q) != 1) throw std::invalid_argument("hj_string requires gcd(n, q) = 1");

    // n/q = b_1 - 1/(b_2 - 1/(...)) with b_i = ceil(n/q) >= 2 at every step.
    std::vector<long long> out;
    while (q > 0) {
        const long long b = (n + q - 1) / q;
        out.push_back(-b);
        const long long next_q = b * q - n;
        n = q;
        q = next_q;
    }
    return out;
}

namespace {

// Exact solve of gram * a = rhs by Gaussian elimination with partial
// pivoting over the rationals. The callers only pass nondegenerate forms.
std::vector<Rat> solve_linear(const GramMatrix& gram, const std::vector<Rat>& rhs) {
    const int n = gram.rank();
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i][j] = Rat(gram.at(i, j));
        m[i][n] = rhs[static_cast<std::size_t>(i)];
    }
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw std::domain_error("degenerate intersection form");
        std::swap(m[col], m[pivot]);
        for (int r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            const Rat f = m[r][col] / m[col][col];
            for (int c = col; c <= n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    std::vector<Rat> a(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i)] = m[i][n] / m[i][i];
    return a;
}

struct GraphShape {
    bool connected_tree = false;
    bool is_chain = false;
    bool all_minus_two = false;
};

GraphShape inspect_graph(const GramMatrix& g) {
    const int n = g.rank();
    GraphShape shape;
    shape.all_minus_two = true;
    int edges = 0;
    std::vector<int> degree(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        if (g.at(i, i) != -2) shape.all_minus_two = false;
        for (int j = i + 1; j < n; ++j)
            if (g.at(i, j) != 0) {
                ++edges;
                ++degree[static_cast<std::size_t>(i)];
                ++degree[static_cast<std::size_t>(j)];
            }
    }
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<int> stack{0};
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int j = 0; j < n; ++j)
            if (j != v && g.at(v, j) != 0 && !seen[static_cast<std::size_t>(j)]) {
                seen[static_cast<std::size_t>(j)] = true;
                ++reached;
                stack.push_back(j);
            }
    }
    shape.connected_tree = (reached == n) && (edges == n - 1);
    shape.is_chain = shape.connected_tree;
    for (int d : degree)
        if (d > 2) shape.is_chain = false;
    return shape;
}

ResolutionString solve_on(const GramMatrix& gram) {
    const int n = gram.rank();
    ResolutionString out;
    out.gram = gram;
    out.self_intersections.reserve(static_cast<std::size_t>(n));
    std::vector<Rat> rhs(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const Int& b = gram.at(i, i);
        out.self_intersections.push_back(b.convert_to<long long>());
        rhs[static_cast<std::size_t>(i)] = Rat(2 + b);
    }
    out.discrepancies = solve_linear(gram, rhs);
    out.dsq = 0;
    for (int i = 0; i < n; ++i)
        out.dsq += out.discrepancies[static_cast<std::size_t>(i)] * rhs[static_cast<std::size_t>(i)];
    for (const Rat& a : out.discrepancies)
        if (a < 0 || a >= 1) throw std::domain_error("discrepancy outside [0, 1)");
    if (out.dsq > 0) throw std::domain_error("positive discrepancy square");
    return out;
}

}  // namespace

ResolutionString solve_discrepancies(const std::vector<long long>& chain) {
    if (chain.empty()) throw std::invalid_argument("empty resolution chain");
    std::vector<Int> diag;
    diag.reserve(chain.size());
    for (long long b : chain) {
        if (b > -2) throw std::invalid_argument("chain self-intersections must be <= -2");
        diag.emplace_back(b);
    }
    const GramMatrix gram = GramMatrix::chain(diag);
    if (!is_negative_definite(gram)) throw std::invalid_argument("not a quotient-singularity string");
    ResolutionString out = solve_on(gram);
    out.group_order = abs(determinant(gram));
    return out;
}

ResolutionString solve_discrepancies(const GramMatrix& gram) {
    const int n = gram.rank();
    if (n == 0) throw std::invalid_argument("empty resolution graph");
    for (int i = 0; i < n; ++i) {
        if (gram.at(i, i) > -2) throw std::invalid_argument("exceptional curves must have self-intersection <= -2");
        for (int j = i + 1; j < n; ++j)
            if (gram.at(i, j) != 0 && gram.at(i, j) != 1)
                throw std::invalid_argument("exceptional curves meet transversally at most once");
    }
    const GraphShape shape = inspect_graph(gram);
    if (!shape.connected_tree) throw std::invalid_argument("resolution graph must be a connected tree");
    if (!is_negative_definite(gram)) throw std::invalid_argument("not a quotient-singularity string");
    if (!shape.is_chain && !shape.all_minus_two)
        throw std::invalid_argument("unsupported resolution graph: expected a chain or an ADE configuration");

    ResolutionString out = solve_on(gram);
    if (shape.is_chain) out.group_order = abs(determinant(gram));
    return out;
}

ResolutionString node_singularity() { return solve_discrepancies(std::vector<long long>{-2}); }

OrbifoldSurface make_nodal_orbifold(long long euler_smooth, int nodes, const Rat& ksq) {
    if (nodes < 0) throw std::invalid_argument("negative node count");
    OrbifoldSurface s;
    s.euler_smooth = euler_smooth;
    s.ksq = ksq;
    s.singularities.assign(static_cast<std::size_t>(nodes), node_singularity());
    return s;
}

Rat orbifold_euler(const OrbifoldSurface& s) {
    Rat e(s.euler_smooth);
    for (const ResolutionString& sing : s.singularities) {
        if (!sing.group_order) throw std::invalid_argument("group order unavailable for a singular point");
        if (*sing.group_order < 2) throw std::invalid_argument("group order must be at least 2");
        e -= 1 - Rat(Int(1), *sing.group_order);
    }
    return e;
}

std::string to_string(CanonicalClass c) { return c == CanonicalClass::nef ? "nef" : "anti-nef"; }

std::string to_string(BmyVerdict v) {
    switch (v) {
        case BmyVerdict::satisfied: return "satisfied";
        case BmyVerdict::violated: return "violated";
        case BmyVerdict::equality: return "equality";
    }
    throw std::invalid_argument("unreachable verdict");
}

BmyVerdict bmy_check(const OrbifoldSurface& s, CanonicalClass canonical) {
    const Rat e_orb = orbifold_euler(s);
    if (canonical == CanonicalClass::nef) {
        const Rat bound = 3 * e_orb;
        if (s.ksq == bound) return BmyVerdict::equality;
        return s.ksq < bound ? BmyVerdict::satisfied : BmyVerdict::violated;
    }
    if (e_orb == 0) return BmyVerdict::equality;
    return e_orb > 0 ? BmyVerdict::satisfied : BmyVerdict::violated;
}

long long max_singular_points_filter(long long euler_smooth, long long min_group_order) {
    if (min_group_order < 2) throw std::invalid_argument("group orders are at least 2");
    if (euler_smooth <= 0) return 0;
    // Each point costs at least 1 - 1/m, so k (1 - 1/m) <= e.
    return euler_smooth * min_group_order / (min_group_order - 1);
}

}  // namespace nodal
