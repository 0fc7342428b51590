#pragma once

#include "lefschetz/graded.hpp"
#include "lefschetz/report.hpp"

#include <map>
#include <optional>
#include <vector>

namespace lefschetz {

// Operators μ±[pt], μ±[C] on V = ⊕ H_k(C^[n]) truncated at n ≤ n_max, with the
// Abel-Jacobi pushforwards AJ_{n,*} into H_*(J).
struct HeisenbergModule {
    int genus = 0;
    int n_max = 0;
    SpacePtr V;
    SpacePtr HJ;
    GradedOperator mu_plus_pt;   // (+1, 0)
    GradedOperator mu_minus_pt;  // (-1, -2)
    GradedOperator mu_plus_C;    // (+1, +2)
    GradedOperator mu_minus_C;   // (-1, 0)
    std::map<int, GradedOperator> aj;  // n -> AJ_{n,*}, blocks only out of slice n
    std::optional<GradedOperator> e;        // cap with theta on H_*(J)
    std::optional<GradedOperator> fourier;  // on H_*(J)
};

inline constexpr Bidegree kMuPlusPt{1, 0};
inline constexpr Bidegree kMuMinusPt{-1, -2};
inline constexpr Bidegree kMuPlusC{1, 2};
inline constexpr Bidegree kMuMinusC{-1, 0};

// The six commutation relations, one record each. Components whose
// composites leave the window are counted as untested.
Report verify_heisenberg(const HeisenbergModule& m);

// W = ker μ-[pt] ∩ ker μ-[C], per component.
SubspaceFamily lowest_weight(const HeisenbergModule& m);

struct FreenessRow {
    int n = 0;
    std::size_t dim = 0;        // dim V_n
    std::size_t generated = 0;  // number of vectors μ+[pt]^a μ+[C]^b w
    std::size_t rank = 0;
    bool isomorphism = false;
};

struct FreenessResult {
    std::vector<FreenessRow> rows;
    bool ok() const;
};

// W ⊗ Q[μ+[pt], μ+[C]] -> V, checked component by component.
FreenessResult freeness_check(const HeisenbergModule& m, const SubspaceFamily& w);

struct PhiDecomposition {
    int n = 0;
    bool hypothesis = false;    // n >= 2g
    SubspaceFamily kernel;      // H_n = ker μ-[pt] on slice n
    std::size_t kernel_dim = 0;
    // eigenvalue -> per-component eigenspaces in V coordinates
    std::map<long, SubspaceFamily> eigenspaces;
    std::map<long, std::size_t> eigen_dims;
    bool complete = false;  // dims sum to dim H_n
};

// φ = μ+[pt] μ-[C] on H_n with candidates {n-2g, ..., n}. Throws
// InvarianceError if H_n is not φ-stable, ArgumentError if n is outside 1..n_max.
PhiDecomposition phi_decomposition(const HeisenbergModule& m, int n);

struct DDecomposition {
    std::map<int, Subspace> pieces;  // k -> D_k H_*(J), flattened
    bool direct_sum = false;

    // D_{≤m} for m = 0..2g.
    Filtration filtration(int genus) const;
};

// D_k = AJ_{k,*}(W ∩ V_k). Throws ModelError when AJ maps are missing or the
// pieces do not form a direct sum filling H_*(J).
DDecomposition d_grading(const HeisenbergModule& m, const SubspaceFamily& w);

// Flattened image of a V-vector under AJ_{n,*}.
Vector apply_aj(const HeisenbergModule& m, int n, const GradedVector& v);

// AJ_{n,*}(H^φ_{n-k}) = D_k for every k, checked for each n in [2g, n_max].
CheckRecord phi_d_consistency(const HeisenbergModule& m, const DDecomposition& d);

// Identities μ-[pt] μ+[C]^{l+1} α = (l+1) μ+[C]^l α on ker μ-[pt], the mirrored one
// on ker μ-[C], and the two vanishing intersections with μ+[C]^l μ+[pt]^k W.
Report mumu_property_check(const HeisenbergModule& m, const SubspaceFamily& w);

// Lowest-weight, freeness, φ and D-grading checks as report records.
Report heisenberg_structure_report(const HeisenbergModule& m);

}  // namespace lefschetz
