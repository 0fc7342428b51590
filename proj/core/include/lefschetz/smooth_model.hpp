#pragma once

#include "lefschetz/heisenberg.hpp"
#include "lefschetz/hilbert_bundle.hpp"
#include "lefschetz/jacobian.hpp"

#include <memory>

namespace lefschetz {

struct SmoothModel {
    std::shared_ptr<const JacobianModel> jacobian;
    HeisenbergModule module;
};

// V = Λ(H_1) ⊗ Q[m_pt, m_C] truncated at n <= n_max. The generator w_β for
// β ∈ H_k(J) sits at (n, homological degree) = (k, k); m_pt has bidegree
// (1, 0) and m_C (1, 2). μ+[pt] = m_pt·, μ+[C] = m_C·, μ-[pt] = ∂/∂m_C,
// μ-[C] = ∂/∂m_pt, AJ_{n,*}(m_pt^a m_C^b w_β) = f^b(β).
// Throws ArgumentError unless genus >= 1 and n_max >= 2 * genus.
SmoothModel build_smooth_model(int genus, int n_max);

// f = -F e F^{-1} from the module's e and Fourier operator; checks
// [f,e] = (k-g) on D_k, f e^i - e^i f = i(k-g-i+1) e^{i-1} on D_k, that
// (f, [f,e], e) is an sl2-triple and that its eigenspaces are the D_k.
Report sl2_main_check(const HeisenbergModule& m, const DDecomposition& d);

// Weight filtration of e^∨ against D_{≤•} on H^*(J). When `smooth` is given,
// also builds Λ from Poincaré duality and compares it with f^∨ (reported only).
Report lefschetz_filtration_check(const HeisenbergModule& m, const DDecomposition& d, const JacobianModel* smooth);

// Cohomological D-pieces: D_j H^* = annihilator of the other homological pieces.
std::map<int, Subspace> cohomology_pieces(const DDecomposition& d);

// Chern character of the Picard bundles and the projective-bundle model of
// C^[n]: reduction confluence, Segre pushforward, inverse Abel-Jacobi map,
// the bundle μ-[C] formula and its compatibility with the free model.
Report smooth_curve_report(const SmoothModel& model);

}  // namespace lefschetz
