#include "lefschetz/heisenberg.hpp"

#include "lefschetz/errors.hpp"

#include <sstream>

namespace lefschetz {

namespace {

// Stack every block leaving `from`; the kernel of the result is the kernel of
// the operator on that component.
Matrix out_of(const GradedOperator& op, const Key& from) {
    const std::size_t cols = op.source()->dim(from);
    Matrix m(0, cols);
    for (const auto& [bk, b] : op.blocks())
        if (bk.first == from) m = vstack(m, b);
    return m;
}

Subspace component_kernel(const GradedOperator& op, const Key& from) {
    Matrix m = out_of(op, from);
    if (m.rows() == 0) return Subspace::full(op.source()->dim(from));
    return kernel(m);
}

GradedVector apply_power(const GradedOperator& op, GradedVector v, int times) {
    for (int i = 0; i < times && !v.empty(); ++i) v = op.apply(v);
    return v;
}

GradedVector scaled(const GradedVector& v, const Rational& s) {
    GradedVector r;
    if (sgn(s) == 0) return r;
    for (const auto& [k, x] : v) r[k] = scale(x, s);
    return r;
}

bool equal(const GradedVector& a, const GradedVector& b) {
    auto nonzero = [](const GradedVector& v) {
        GradedVector r;
        for (const auto& [k, x] : v)
            if (!is_zero(x)) r[k] = x;
        return r;
    };
    return nonzero(a) == nonzero(b);
}

struct Relation {
    const char* id;
    const GradedOperator* a;
    const GradedOperator* b;
    bool identity;
    const char* ref;
};

CheckRecord check_relation(const Relation& rel, const SpacePtr& space) {
    CheckRecord rec;
    rec.check_id = rel.id;
    rec.theorem_ref = rel.ref;
    GradedOperator comm = commutator(*rel.a, *rel.b);
    std::size_t tested = 0;
    nlohmann::json untested = nlohmann::json::array();
    for (const auto& [key, comp] : space->components()) {
        if (comm.is_truncated(key)) {
            untested.push_back({key.n, key.k});
            continue;
        }
        ++tested;
        if (rec.status == Status::fail) continue;
        for (std::size_t i = 0; i < comp.dim; ++i) {
            GradedVector got = comm.apply_basis(key, i);
            GradedVector want;
            if (rel.identity) want[key] = unit_vector(comp.dim, i);
            if (!equal(got, want)) {
                rec.status = Status::fail;
                rec.witness = comp.labels[i] + " in " + to_string(key) + " maps to " + format_vector(*space, got) +
                              ", expected " + format_vector(*space, want);
                break;
            }
        }
    }
    if (rec.status != Status::fail && tested == 0 && !untested.empty()) rec.status = Status::untested;
    rec.details["components_tested"] = tested;
    rec.details["components_untested"] = untested;
    return rec;
}

Subspace span_in(const std::vector<Vector>& v, std::size_t dim) { return Subspace::span(v, dim); }

}  // namespace

Report verify_heisenberg(const HeisenbergModule& m) {
    const Relation relations[] = {
        {"heisenberg.comm.mu_minus_pt.mu_plus_C", &m.mu_minus_pt, &m.mu_plus_C, true,
         "Heisenberg relation [mu-(pt), mu+(C)] = id"},
        {"heisenberg.comm.mu_minus_C.mu_plus_pt", &m.mu_minus_C, &m.mu_plus_pt, true,
         "Heisenberg relation [mu-(C), mu+(pt)] = id"},
        {"heisenberg.comm.mu_plus_pt.mu_plus_C", &m.mu_plus_pt, &m.mu_plus_C, false,
         "Heisenberg relation [mu+(pt), mu+(C)] = 0"},
        {"heisenberg.comm.mu_minus_pt.mu_minus_C", &m.mu_minus_pt, &m.mu_minus_C, false,
         "Heisenberg relation [mu-(pt), mu-(C)] = 0"},
        {"heisenberg.comm.mu_plus_pt.mu_minus_pt", &m.mu_plus_pt, &m.mu_minus_pt, false,
         "Heisenberg relation [mu+(pt), mu-(pt)] = 0"},
        {"heisenberg.comm.mu_plus_C.mu_minus_C", &m.mu_plus_C, &m.mu_minus_C, false,
         "Heisenberg relation [mu+(C), mu-(C)] = 0"},
    };
    Report out;
    for (const auto& rel : relations) out.push_back(check_relation(rel, m.V));
    return out;
}

SubspaceFamily lowest_weight(const HeisenbergModule& m) {
    SubspaceFamily w;
    for (const auto& key : m.V->keys()) {
        Matrix stacked = vstack(out_of(m.mu_minus_pt, key), out_of(m.mu_minus_C, key));
        w[key] = stacked.rows() == 0 ? Subspace::full(m.V->dim(key)) : kernel(stacked);
    }
    return w;
}

bool FreenessResult::ok() const {
    for (const auto& r : rows)
        if (!r.isomorphism) return false;
    return true;
}

FreenessResult freeness_check(const HeisenbergModule& m, const SubspaceFamily& w) {
    FreenessResult res;
    for (int n = 0; n <= m.n_max; ++n) {
        FreenessRow row;
        row.n = n;
        row.isomorphism = true;
        for (const auto& key : m.V->keys_with_n(n)) {
            const std::size_t dim = m.V->dim(key);
            std::vector<Vector> cols;
            for (const auto& [wkey, ws] : w) {
                if (wkey.n > n || ws.dim() == 0) continue;
                const int diff = key.k - wkey.k;
                if (diff < 0 || diff % 2) continue;
                const int b = diff / 2, a = n - wkey.n - b;
                if (a < 0) continue;
                for (std::size_t i = 0; i < ws.dim(); ++i) {
                    GradedVector v{{wkey, ws.basis_vector(i)}};
                    v = apply_power(m.mu_plus_pt, apply_power(m.mu_plus_C, v, b), a);
                    auto it = v.find(key);
                    cols.push_back(it == v.end() ? Vector(dim) : it->second);
                }
            }
            row.dim += dim;
            row.generated += cols.size();
            std::size_t r = cols.empty() ? 0 : rank(Matrix::from_columns(cols, dim));
            row.rank += r;
            if (cols.size() != dim || r != dim) row.isomorphism = false;
        }
        res.rows.push_back(row);
    }
    return res;
}

PhiDecomposition phi_decomposition(const HeisenbergModule& m, int n) {
    if (n < 0 || n > m.n_max) throw ArgumentError("phi_decomposition: n = " + std::to_string(n) + " outside the window");
    PhiDecomposition res;
    res.n = n;
    res.hypothesis = n >= 2 * m.genus;
    for (const auto& key : m.V->keys_with_n(n)) {
        res.kernel[key] = component_kernel(m.mu_minus_pt, key);
        res.kernel_dim += res.kernel[key].dim();
    }
    GradedOperator phi = compose(m.mu_plus_pt, m.mu_minus_C).restricted_to_n(n);
    Restriction r = restrict(phi, res.kernel);
    std::vector<long> candidates;
    for (long l = n - 2L * m.genus; l <= n; ++l) candidates.push_back(l);
    std::size_t total = 0;
    for (const auto& [key, sub] : res.kernel) {
        if (sub.dim() == 0) continue;
        const Matrix* b = r.op.block(key, key);
        Matrix local = b ? *b : Matrix(sub.dim(), sub.dim());
        for (auto& [lambda, space] : integer_eigenspaces(local, candidates).spaces) {
            std::vector<Vector> vecs;
            for (std::size_t i = 0; i < space.dim(); ++i) {
                Vector c = space.basis_vector(i);
                Vector v(sub.ambient_dim());
                for (std::size_t j = 0; j < c.size(); ++j)
                    if (sgn(c[j]) != 0) v = add(v, scale(sub.basis_vector(j), c[j]));
                vecs.push_back(std::move(v));
            }
            res.eigenspaces[lambda][key] = span_in(vecs, sub.ambient_dim());
            res.eigen_dims[lambda] += space.dim();
            total += space.dim();
        }
    }
    res.complete = total == res.kernel_dim;
    return res;
}

Filtration DDecomposition::filtration(int genus) const {
    std::size_t dim = pieces.empty() ? 0 : pieces.begin()->second.ambient_dim();
    std::vector<Subspace> steps;
    Subspace acc = Subspace::zero(dim);
    for (int k = 0; k <= 2 * genus; ++k) {
        if (auto it = pieces.find(k); it != pieces.end()) acc = sum(acc, it->second);
        steps.push_back(acc);
    }
    return Filtration(0, std::move(steps));
}

Vector apply_aj(const HeisenbergModule& m, int n, const GradedVector& v) {
    auto it = m.aj.find(n);
    if (it == m.aj.end()) throw ModelError("no Abel-Jacobi map AJ_" + std::to_string(n));
    Vector out(m.HJ->total_dim());
    for (const auto& [key, x] : it->second.apply(v)) {
        const std::size_t off = m.HJ->offset(key);
        for (std::size_t i = 0; i < x.size(); ++i) out[off + i] += x[i];
    }
    return out;
}

namespace {

Subspace aj_image(const HeisenbergModule& m, int n, const SubspaceFamily& family) {
    std::vector<Vector> vecs;
    for (const auto& [key, s] : family)
        for (std::size_t i = 0; i < s.dim(); ++i) vecs.push_back(apply_aj(m, n, {{key, s.basis_vector(i)}}));
    return Subspace::span(vecs, m.HJ->total_dim());
}

}  // namespace

DDecomposition d_grading(const HeisenbergModule& m, const SubspaceFamily& w) {
    if (!m.HJ) throw ModelError("model has no Jacobian homology space");
    DDecomposition d;
    const std::size_t dim = m.HJ->total_dim();
    std::size_t total = 0;
    Subspace acc = Subspace::zero(dim);
    for (int k = 0; k <= 2 * m.genus; ++k) {
        if (k > m.n_max) throw ModelError("window n <= " + std::to_string(m.n_max) + " does not reach n = " + std::to_string(k));
        SubspaceFamily wk;
        for (const auto& [key, s] : w)
            if (key.n == k) wk[key] = s;
        d.pieces[k] = aj_image(m, k, wk);
        total += d.pieces[k].dim();
        acc = sum(acc, d.pieces[k]);
    }
    d.direct_sum = total == dim && acc.is_full();
    if (!d.direct_sum)
        throw ModelError("images AJ_k(W ∩ V_k) have total dimension " + std::to_string(total) + " and span " +
                         std::to_string(acc.dim()) + " of " + std::to_string(dim) + " dimensions");
    return d;
}

CheckRecord phi_d_consistency(const HeisenbergModule& m, const DDecomposition& d) {
    CheckRecord rec;
    rec.check_id = "structure.phi_d_consistency";
    rec.theorem_ref = "AJ_n maps the phi-eigenspace of value n-k onto D_k";
    nlohmann::json rows = nlohmann::json::array();
    for (int n = 2 * m.genus; n <= m.n_max; ++n) {
        PhiDecomposition phi = phi_decomposition(m, n);
        for (int k = 0; k <= 2 * m.genus; ++k) {
            auto it = phi.eigenspaces.find(n - k);
            Subspace img = it == phi.eigenspaces.end() ? Subspace::zero(m.HJ->total_dim()) : aj_image(m, n, it->second);
            const Subspace& piece = d.pieces.at(k);
            bool ok = img == piece;
            rows.push_back({{"n", n}, {"k", k}, {"image_dim", img.dim()}, {"piece_dim", piece.dim()}, {"equal", ok}});
            if (!ok && rec.status != Status::fail) {
                rec.status = Status::fail;
                rec.witness = "n=" + std::to_string(n) + ", k=" + std::to_string(k) + ": image of eigenvalue " +
                              std::to_string(n - k) + " has dim " + std::to_string(img.dim()) + ", D_k has dim " +
                              std::to_string(piece.dim());
            }
        }
    }
    if (rows.empty()) rec.status = Status::untested;
    rec.details["rows"] = rows;
    return rec;
}

Report mumu_property_check(const HeisenbergModule& m, const SubspaceFamily& w) {
    Report out;
    auto identity_check = [&](const char* id, const char* ref, const GradedOperator& lower, const GradedOperator& raise) {
        CheckRecord rec;
        rec.check_id = id;
        rec.theorem_ref = ref;
        std::size_t checked = 0;
        for (const auto& key : m.V->keys()) {
            Subspace ker = component_kernel(lower, key);
            for (std::size_t i = 0; i < ker.dim() && rec.status != Status::fail; ++i) {
                GradedVector alpha{{key, ker.basis_vector(i)}};
                GradedVector pow_l = alpha;
                for (int l = 0; key.n + l + 1 <= m.n_max; ++l) {
                    GradedVector pow_next = raise.apply(pow_l);
                    GradedVector lhs = lower.apply(pow_next);
                    GradedVector rhs = scaled(pow_l, Rational(l + 1));
                    ++checked;
                    if (!equal(lhs, rhs)) {
                        rec.status = Status::fail;
                        rec.witness = "alpha = " + format_vector(*m.V, alpha) + ", l = " + std::to_string(l) +
                                      ": lhs = " + format_vector(*m.V, lhs) + ", rhs = " + format_vector(*m.V, rhs);
                        break;
                    }
                    pow_l = std::move(pow_next);
                }
            }
        }
        if (checked == 0 && rec.status != Status::fail) rec.status = Status::untested;
        rec.details["instances"] = checked;
        out.push_back(rec);
    };
    identity_check("mumu.lower_pt_raise_C", "mu-(pt) mu+(C)^(l+1) a = (l+1) mu+(C)^l a on ker mu-(pt)", m.mu_minus_pt,
                   m.mu_plus_C);
    identity_check("mumu.lower_C_raise_pt", "mu-(C) mu+(pt)^(l+1) a = (l+1) mu+(pt)^l a on ker mu-(C)", m.mu_minus_C,
                   m.mu_plus_pt);

    auto vanishing = [&](const char* id, const char* ref, const GradedOperator& lower, bool c_power_nonzero) {
        CheckRecord rec;
        rec.check_id = id;
        rec.theorem_ref = ref;
        std::size_t checked = 0;
        for (const auto& [wkey, ws] : w) {
            if (ws.dim() == 0) continue;
            for (int l = 0; wkey.n + l <= m.n_max; ++l)
                for (int k = 0; wkey.n + l + k <= m.n_max; ++k) {
                    if (c_power_nonzero ? l == 0 : k == 0) continue;
                    const Key target{wkey.n + l + k, wkey.k + 2 * l};
                    if (!m.V->has(target)) continue;
                    std::vector<Vector> vecs;
                    for (std::size_t i = 0; i < ws.dim(); ++i) {
                        GradedVector v{{wkey, ws.basis_vector(i)}};
                        v = apply_power(m.mu_plus_C, apply_power(m.mu_plus_pt, v, k), l);
                        auto it = v.find(target);
                        if (it != v.end()) vecs.push_back(it->second);
                    }
                    Subspace s = Subspace::span(vecs, m.V->dim(target));
                    Subspace cap = intersect(s, component_kernel(lower, target));
                    ++checked;
                    if (cap.dim() != 0 && rec.status != Status::fail) {
                        rec.status = Status::fail;
                        rec.witness = "l=" + std::to_string(l) + ", k=" + std::to_string(k) + ", W at " + to_string(wkey) +
                                      ": " + format_vector(m.V->components().at(target).labels, cap.basis_vector(0));
                    }
                }
        }
        if (checked == 0 && rec.status != Status::fail) rec.status = Status::untested;
        rec.details["instances"] = checked;
        out.push_back(rec);
    };
    vanishing("mumu.vanishing_ker_minus_pt", "mu+(C)^l mu+(pt)^k W meets ker mu-(pt) only in 0 for l != 0", m.mu_minus_pt, true);
    vanishing("mumu.vanishing_ker_minus_C", "mu+(C)^l mu+(pt)^k W meets ker mu-(C) only in 0 for k != 0", m.mu_minus_C, false);
    return out;
}

Report heisenberg_structure_report(const HeisenbergModule& m) {
    Report out;
    SubspaceFamily w = lowest_weight(m);

    CheckRecord lw;
    lw.check_id = "structure.lowest_weight";
    lw.theorem_ref = "W = ker mu-(pt) ∩ ker mu-(C) is isomorphic to H_*(J)";
    std::size_t wdim = 0;
    nlohmann::json dims = nlohmann::json::array();
    for (const auto& [key, s] : w) {
        wdim += s.dim();
        if (s.dim()) dims.push_back({{"n", key.n}, {"k", key.k}, {"dim", s.dim()}});
    }
    lw.details["components"] = dims;
    lw.details["total"] = wdim;
    if (m.HJ && wdim != m.HJ->total_dim()) {
        lw.status = Status::fail;
        lw.witness = "dim W = " + std::to_string(wdim) + ", dim H_*(J) = " + std::to_string(m.HJ->total_dim());
    }
    out.push_back(lw);

    CheckRecord fr;
    fr.check_id = "structure.freeness";
    fr.theorem_ref = "W ⊗ Q[mu+(pt), mu+(C)] -> V is an isomorphism";
    FreenessResult free = freeness_check(m, w);
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : free.rows) {
        rows.push_back({{"n", r.n}, {"dim", r.dim}, {"generated", r.generated}, {"rank", r.rank}, {"isomorphism", r.isomorphism}});
        if (!r.isomorphism && fr.status != Status::fail) {
            fr.status = Status::fail;
            fr.witness = "n=" + std::to_string(r.n) + ": " + std::to_string(r.generated) + " generated vectors of rank " +
                         std::to_string(r.rank) + " in dimension " + std::to_string(r.dim);
        }
    }
    fr.details["rows"] = rows;
    out.push_back(fr);

    for (int n = 2 * m.genus; n <= m.n_max; ++n) {
        CheckRecord ph;
        ph.check_id = "structure.phi_spectrum.n" + std::to_string(n);
        ph.theorem_ref = "phi = mu+(pt) mu-(C) is diagonalizable on ker mu-(pt) ∩ V_n with spectrum in {n-2g..n}";
        try {
            PhiDecomposition d = phi_decomposition(m, n);
            nlohmann::json eig = nlohmann::json::object();
            for (const auto& [l, dd] : d.eigen_dims) eig[std::to_string(l)] = dd;
            ph.details["kernel_dim"] = d.kernel_dim;
            ph.details["eigen_dims"] = eig;
            if (!d.complete) {
                ph.status = Status::fail;
                ph.witness = "eigenspaces with values in {n-2g..n} span less than ker mu-(pt) at n=" + std::to_string(n);
            } else if (m.HJ && d.kernel_dim != m.HJ->total_dim()) {
                ph.status = Status::fail;
                ph.witness = "dim ker mu-(pt) at n=" + std::to_string(n) + " is " + std::to_string(d.kernel_dim);
            }
            if (ph.status == Status::pass && !m.aj.empty() && m.aj.count(n)) {
                std::vector<Vector> imgs;
                for (const auto& [key, s] : d.kernel)
                    for (std::size_t i = 0; i < s.dim(); ++i) imgs.push_back(apply_aj(m, n, {{key, s.basis_vector(i)}}));
                std::size_t r = imgs.empty() ? 0 : rank(Matrix::from_columns(imgs, m.HJ->total_dim()));
                ph.details["aj_rank"] = r;
                if (r != m.HJ->total_dim() || imgs.size() != r) {
                    ph.status = Status::fail;
                    ph.witness = "AJ_" + std::to_string(n) + " restricted to ker mu-(pt) has rank " + std::to_string(r);
                }
            }
        } catch (const InvarianceError& e) {
            ph.status = Status::fail;
            ph.witness = e.what();
        }
        out.push_back(ph);
    }

    if (!m.aj.empty()) {
        CheckRecord compat;
        compat.check_id = "structure.aj_compatibility";
        compat.theorem_ref = "AJ_{n-1,*} = AJ_{n,*} o mu+(pt)";
        std::size_t checked = 0;
        for (int n = 1; n <= m.n_max; ++n) {
            if (!m.aj.count(n) || !m.aj.count(n - 1)) continue;
            for (const auto& key : m.V->keys_with_n(n - 1))
                for (std::size_t i = 0; i < m.V->dim(key) && compat.status != Status::fail; ++i) {
                    GradedVector v{{key, unit_vector(m.V->dim(key), i)}};
                    ++checked;
                    if (apply_aj(m, n - 1, v) != apply_aj(m, n, m.mu_plus_pt.apply(v))) {
                        compat.status = Status::fail;
                        compat.witness = m.V->label(key, i) + " at n=" + std::to_string(n - 1);
                    }
                }
        }
        compat.details["instances"] = checked;
        if (checked == 0) compat.status = Status::untested;
        out.push_back(compat);

        CheckRecord dg;
        dg.check_id = "structure.d_grading";
        dg.theorem_ref = "D_k = AJ_k(W ∩ V_k) gives a direct sum decomposition of H_*(J)";
        try {
            DDecomposition d = d_grading(m, w);
            nlohmann::json pd = nlohmann::json::object();
            for (const auto& [k, s] : d.pieces) pd[std::to_string(k)] = s.dim();
            dg.details["piece_dims"] = pd;
            out.push_back(dg);
            out.push_back(phi_d_consistency(m, d));
        } catch (const ModelError& e) {
            dg.status = Status::fail;
            dg.witness = e.what();
            out.push_back(dg);
        }
    }
    return out;
}

}  // namespace lefschetz
