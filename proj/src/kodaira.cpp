#include "nodal/kodaira.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <stdexcept>

namespace nodal {

namespace {

int mis_recurse(std::uint32_t allowed, const std::vector<std::uint32_t>& adj) {
    if (allowed == 0) return 0;
    const int v = std::countr_zero(allowed);
    const std::uint32_t without = allowed & ~(1u << v);
    const int skip = mis_recurse(without, adj);
    const int take = 1 + mis_recurse(without & ~adj[static_cast<std::size_t>(v)], adj);
    return std::max(skip, take);
}

void add_edge(FibreGraph& g, int u, int v) {
    g.adj[static_cast<std::size_t>(u)] |= 1u << v;
    g.adj[static_cast<std::size_t>(v)] |= 1u << u;
}

FibreGraph blank_graph(int n, bool minus_two) {
    FibreGraph g;
    g.n = n;
    g.adj.assign(static_cast<std::size_t>(n), 0);
    g.minus_two.assign(static_cast<std::size_t>(n), minus_two);
    return g;
}

}  // namespace

int max_independent_set(const FibreGraph& g) {
    std::uint32_t allowed = 0;
    for (int v = 0; v < g.n; ++v)
        if (g.minus_two[static_cast<std::size_t>(v)]) allowed |= 1u << v;
    return mis_recurse(allowed, g.adj);
}

KodairaFibre::KodairaFibre(FibreKind kind, int index) : kind_(kind), index_(index) {
    switch (kind) {
        case FibreKind::In:
            if (index < 1) throw std::invalid_argument("I_n requires n >= 1");
            euler_ = index;
            break;
        case FibreKind::InStar:
            if (index < 0) throw std::invalid_argument("I_n* requires n >= 0");
            euler_ = index + 6;
            break;
        default:
            if (index != 0) throw std::invalid_argument("only I_n and I_n* carry an index");
            switch (kind) {
                case FibreKind::II: euler_ = 2; break;
                case FibreKind::III: euler_ = 3; break;
                case FibreKind::IV: euler_ = 4; break;
                case FibreKind::IVStar: euler_ = 8; break;
                case FibreKind::IIIStar: euler_ = 9; break;
                case FibreKind::IIStar: euler_ = 10; break;
                default: throw std::invalid_argument("unreachable fibre kind");
            }
    }
    capacity_ = max_independent_set(dual_graph());
}

FibreGraph KodairaFibre::dual_graph() const {
    switch (kind_) {
        case FibreKind::In: {
            if (index_ == 1) return blank_graph(1, false);  // irreducible nodal cubic
            FibreGraph g = blank_graph(index_, true);       // cycle of (-2)-curves
            for (int v = 0; v < index_; ++v) add_edge(g, v, (v + 1) % index_);
            return g;
        }
        case FibreKind::InStar: {
            // Central chain c_0..c_n, two leaves on each end; all (-2).
            const int n = index_;
            FibreGraph g = blank_graph(n + 5, true);
            for (int v = 0; v + 1 <= n; ++v) add_edge(g, v, v + 1);
            add_edge(g, 0, n + 1);
            add_edge(g, 0, n + 2);
            add_edge(g, n, n + 3);
            add_edge(g, n, n + 4);
            return g;
        }
        case FibreKind::II:
            return blank_graph(1, false);  // cuspidal cubic
        case FibreKind::III: {
            FibreGraph g = blank_graph(2, true);  // two (-2)-curves, tangent
            add_edge(g, 0, 1);
            return g;
        }
        case FibreKind::IV: {
            FibreGraph g = blank_graph(3, true);  // three concurrent (-2)-curves
            add_edge(g, 0, 1);
            add_edge(g, 1, 2);
            add_edge(g, 0, 2);
            return g;
        }
        case FibreKind::IVStar: {
            FibreGraph g = blank_graph(7, true);  // center 0, arms (1,2), (3,4), (5,6)
            for (int arm = 0; arm < 3; ++arm) {
                add_edge(g, 0, 1 + 2 * arm);
                add_edge(g, 1 + 2 * arm, 2 + 2 * arm);
            }
            return g;
        }
        case FibreKind::IIIStar: {
            FibreGraph g = blank_graph(8, true);  // chain 0..6, leaf 7 at the middle
            for (int v = 0; v < 6; ++v) add_edge(g, v, v + 1);
            add_edge(g, 3, 7);
            return g;
        }
        case FibreKind::IIStar: {
            FibreGraph g = blank_graph(9, true);  // chain 0..7, leaf 8 at vertex 2
            for (int v = 0; v < 7; ++v) add_edge(g, v, v + 1);
            add_edge(g, 2, 8);
            return g;
        }
    }
    throw std::invalid_argument("unreachable fibre kind");
}

std::string KodairaFibre::name() const {
    switch (kind_) {
        case FibreKind::In: return "I" + std::to_string(index_);
        case FibreKind::InStar: return "I" + std::to_string(index_) + "*";
        case FibreKind::II: return "II";
        case FibreKind::III: return "III";
        case FibreKind::IV: return "IV";
        case FibreKind::IVStar: return "IV*";
        case FibreKind::IIIStar: return "III*";
        case FibreKind::IIStar: return "II*";
    }
    throw std::invalid_argument("unreachable fibre kind");
}

KodairaFibre KodairaFibre::parse(const std::string& name) {
    if (name == "II") return KodairaFibre(FibreKind::II);
    if (name == "III") return KodairaFibre(FibreKind::III);
    if (name == "IV") return KodairaFibre(FibreKind::IV);
    if (name == "II*") return KodairaFibre(FibreKind::IIStar);
    if (name == "III*") return KodairaFibre(FibreKind::IIIStar);
    if (name == "IV*") return KodairaFibre(FibreKind::IVStar);
    if (name.size() >= 2 && name[0] == 'I' && std::isdigit(static_cast<unsigned char>(name[1]))) {
        const bool star = name.back() == '*';
        const std::string digits = name.substr(1, name.size() - 1 - (star ? 1 : 0));
        try {
            std::size_t used = 0;
            const int n = std::stoi(digits, &used);
            if (used == digits.size())
                return KodairaFibre(star ? FibreKind::InStar : FibreKind::In, n);
        } catch (const std::exception&) {
        }
    }
    throw std::invalid_argument("unknown fibre name: " + name);
}

std::vector<KodairaFibre> singular_fibre_catalog(int max_euler) {
    std::vector<KodairaFibre> out;
    for (int n = 1; n <= max_euler; ++n) out.emplace_back(FibreKind::In, n);
    for (int n = 0; n + 6 <= max_euler; ++n) out.emplace_back(FibreKind::InStar, n);
    for (FibreKind k : {FibreKind::II, FibreKind::III, FibreKind::IV, FibreKind::IVStar,
                        FibreKind::IIIStar, FibreKind::IIStar}) {
        KodairaFibre f(k);
        if (f.euler() <= max_euler) out.push_back(f);
    }
    std::sort(out.begin(), out.end(), [](const KodairaFibre& a, const KodairaFibre& b) {
        if (a.euler() != b.euler()) return a.euler() < b.euler();
        return a.name() < b.name();
    });
    return out;
}

}  // namespace nodal
