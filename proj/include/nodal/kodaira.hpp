#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace nodal {

// Dual graph of the components of a singular elliptic fibre. minus_two marks
// the components that are smooth rational with self-intersection -2 (the
// ones that survive as nodal curves when blown down is not an option and
// that can be contracted to nodes).
struct FibreGraph {
    int n = 0;
    std::vector<std::uint32_t> adj;  // adjacency bitmask per vertex
    std::vector<bool> minus_two;
};

// Maximum number of pairwise nonadjacent vertices among those marked
// minus_two.
int max_independent_set(const FibreGraph& g);

enum class FibreKind { In, InStar, II, III, IV, IVStar, IIIStar, IIStar };

// Singular fibre of a relatively minimal elliptic fibration, in Kodaira's
// notation. Euler numbers follow the standard table; the nodal capacity (how
// many disjoint (-2)-curves the fibre contains) is computed from the dual
// graph rather than tabulated.
class KodairaFibre {
public:
    // index is n for I_n (n >= 1) and I_n* (n >= 0); it must be 0 otherwise.
    explicit KodairaFibre(FibreKind kind, int index = 0);

    FibreKind kind() const { return kind_; }
    int index() const { return index_; }
    int euler() const { return euler_; }
    int nodal_capacity() const { return capacity_; }
    std::string name() const;  // "I3", "I0*", "IV*", ...
    FibreGraph dual_graph() const;

    // Parses the names produced by name().
    static KodairaFibre parse(const std::string& name);

    friend bool operator==(const KodairaFibre& a, const KodairaFibre& b) {
        return a.kind_ == b.kind_ && a.index_ == b.index_;
    }

private:
    FibreKind kind_;
    int index_;
    int euler_;
    int capacity_;
};

// Every singular fibre type with Euler number <= max_euler, ordered by
// (euler, name).
std::vector<KodairaFibre> singular_fibre_catalog(int max_euler);

}  // namespace nodal
