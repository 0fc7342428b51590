#pragma once

#include "lefschetz/graded.hpp"

#include <string>
#include <vector>

namespace lefschetz {

// Largest d with N^d != 0 (0 for the zero map). Throws NilpotencyError when
// N^dim != 0.
int nilpotency_degree(const Matrix& n);

struct WeightFiltrationResult {
    Filtration filtration;  // indices 0..2*center
    std::vector<std::size_t> graded_dims;
    int center = 0;
    int degree = 0;  // N^(degree+1) = 0, N^degree != 0
    bool lowers_by_two = false;
    bool lefschetz_isomorphisms = false;
};

// Empty when W satisfies N W_k ⊆ W_{k-2} and N^k : Gr_{c+k} -> Gr_{c-k} is an
// isomorphism for 0 <= k <= c; otherwise describes the first failure.
std::string weight_filtration_defect(const Matrix& n, const Filtration& w, int center);

// Deligne's weight filtration centered at `center`, computed by peeling off
// images and kernels of N^d from the top. Requires center >= nilpotency degree.
WeightFiltrationResult weight_filtration(const Matrix& n, int center);

// Completes a nilpotent e to an sl2-triple (e, h, f) via Jordan chains.
Sl2Triple jacobson_morozov(const Matrix& e);

// W_k = sum of h-eigenspaces with eigenvalue >= center - k, for k = 0..2*center.
Filtration weight_filtration_from_h(const Sl2Triple& triple, int center);

struct PairingData {
    std::vector<int> degrees;  // degree of each basis vector, 0..2*half_dim
    Matrix pairing;            // <x_i, x_j>
    int half_dim = 0;
};

// The partner Λ of a Lefschetz operator L of degree +2, built from the
// pairing twisted by the Lefschetz star on primitive decompositions.
// Throws ModelError when some L^m: H^{n-m} -> H^{n+m} is not bijective and
// PairingError when the twisted pairing is degenerate.
Matrix lambda_from_duality(const Matrix& l, const PairingData& pd);

struct OppositeEntry {
    int k = 0;
    int m = 0;
    std::size_t dim_w = 0;
    std::size_t dim_p = 0;
    std::size_t dim_intersection = 0;
};

struct OppositenessReport {
    int total = 0;
    std::vector<OppositeEntry> entries;     // all (k, m) in [0, total]^2
    std::vector<OppositeEntry> violations;  // m + k < total with nonzero intersection
    // For m + k = total - 1: whether W_k ⊕ P_m is the whole space.
    std::vector<std::pair<OppositeEntry, bool>> complementary;
    bool opposite() const { return violations.empty(); }
};

OppositenessReport check_opposite(const Filtration& w, const Filtration& p, int total);

}  // namespace lefschetz
