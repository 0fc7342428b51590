#include "lefschetz/driver.hpp"

#include "lefschetz/errors.hpp"
#include "lefschetz/filtration.hpp"
#include "lefschetz/model_io.hpp"
#include "lefschetz/smooth_model.hpp"

#include <atomic>
#include <exception>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <thread>

namespace lefschetz {

namespace {

struct Group {
    std::vector<std::string> prefixes;
    std::function<Report()> run;
};

bool group_selected(const Group& g, const std::vector<std::string>& filters) {
    if (filters.empty()) return true;
    for (const auto& f : filters)
        for (const auto& p : g.prefixes)
            if (f.starts_with(p) || p.starts_with(f)) return true;
    return false;
}

Report skipped(const std::vector<std::string>& ids, const std::string& reason) {
    Report r;
    for (const auto& id : ids) {
        CheckRecord c;
        c.check_id = id;
        c.theorem_ref = "prerequisite D-grading";
        c.status = Status::untested;
        c.details["reason"] = reason;
        r.push_back(std::move(c));
    }
    return r;
}

// The smooth exterior model of this genus, when the module's H_*(J) and e are exactly it.
std::shared_ptr<const JacobianModel> matching_jacobian(const HeisenbergModule& m) {
    if (m.genus < 1 || m.genus > 8 || !m.e || !m.HJ) return nullptr;
    auto jac = std::make_shared<const JacobianModel>(m.genus);
    if (!(*jac->homology() == *m.HJ)) return nullptr;
    if (!(jac->e_operator() == *m.e)) return nullptr;
    return jac;
}

void run_parallel(std::vector<std::function<void()>>& tasks, int jobs) {
    const std::size_t workers = std::min<std::size_t>(std::max(jobs, 1), tasks.size());
    std::vector<std::exception_ptr> errors(tasks.size());
    if (workers <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) {
            try {
                tasks[i]();
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < tasks.size(); i = next++) {
                    try {
                        tasks[i]();
                    } catch (...) {
                        errors[i] = std::current_exception();
                    }
                }
            });
        for (auto& t : pool) t.join();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

int classify(const std::exception& ex, std::ostream& err) {
    err << "error: " << ex.what() << "\n";
    if (dynamic_cast<const InternalConsistencyError*>(&ex)) return kExitInternalError;
    if (dynamic_cast<const Error*>(&ex)) return kExitInputError;
    return kExitInternalError;
}

template <class F>
int guarded(std::ostream& err, F&& body) {
    try {
        return body();
    } catch (const ParseError& ex) {
        err << "error: " << ex.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& ex) {
        return classify(ex, err);
    }
}

}  // namespace

bool matches_filter(const std::string& check_id, const std::vector<std::string>& filters) {
    if (filters.empty()) return true;
    for (const auto& f : filters)
        if (check_id.starts_with(f)) return true;
    return false;
}

Report run_checks(const HeisenbergModule& m, const RunOptions& opts) {
    const SubspaceFamily w = lowest_weight(m);
    std::optional<DDecomposition> d;
    std::string d_error;
    try {
        d = d_grading(m, w);
    } catch (const ModelError& ex) {
        d_error = ex.what();
    }
    auto jac = matching_jacobian(m);

    std::vector<Group> groups;
    groups.push_back({{"heisenberg."}, [&] { return verify_heisenberg(m); }});
    groups.push_back({{"structure."}, [&] { return heisenberg_structure_report(m); }});
    groups.push_back({{"mumu."}, [&] { return mumu_property_check(m, w); }});
    groups.push_back({{"sl2."}, [&] {
                          if (!d) return skipped({"sl2.triple"}, d_error);
                          return sl2_main_check(m, *d);
                      }});
    groups.push_back({{"filtration."}, [&] {
                          if (!d) return skipped({"filtration.weight_equals_d", "filtration.opposite"}, d_error);
                          return lefschetz_filtration_check(m, *d, jac.get());
                      }});
    if (m.genus >= 1)
        groups.push_back({{"grr.", "bundle."}, [&] {
                              return smooth_curve_report(build_smooth_model(m.genus, std::max(m.n_max, 2 * m.genus)));
                          }});

    std::vector<Report> results(groups.size());
    std::vector<std::function<void()>> tasks;
    for (std::size_t i = 0; i < groups.size(); ++i) {
        if (!group_selected(groups[i], opts.checks)) continue;
        tasks.push_back([&, i] { results[i] = groups[i].run(); });
    }
    run_parallel(tasks, opts.jobs);

    Report out;
    for (auto& r : results)
        for (auto& c : r)
            if (matches_filter(c.check_id, opts.checks)) out.push_back(std::move(c));
    return out;
}

void scale_operator(HeisenbergModule& m, const std::string& name, const Rational& factor) {
    GradedOperator* op = nullptr;
    if (name == "mu_plus_pt") op = &m.mu_plus_pt;
    else if (name == "mu_minus_pt") op = &m.mu_minus_pt;
    else if (name == "mu_plus_C") op = &m.mu_plus_C;
    else if (name == "mu_minus_C") op = &m.mu_minus_C;
    else if (name == "e" && m.e) op = &*m.e;
    else if (name == "fourier" && m.fourier) op = &*m.fourier;
    if (!op) throw ArgumentError("cannot scale unknown operator " + name);
    GradedOperator scaled = op->scaled(factor);
    *op = std::move(scaled);
}

int cmd_gen(const GenOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const int n_max = opts.n_max < 0 ? 2 * opts.genus + 2 : opts.n_max;
        SmoothModel sm = build_smooth_model(opts.genus, n_max);
        for (const auto& [name, factor] : opts.scale) scale_operator(sm.module, name, factor);
        if (opts.out.empty()) {
            out << dump_model(sm.module);
        } else {
            save_model(sm.module, opts.out);
            out << "wrote genus " << opts.genus << " model (n <= " << n_max << ", dim " << sm.module.V->total_dim() << ") to "
                << opts.out << "\n";
        }
        return static_cast<int>(kExitPass);
    });
}

int cmd_verify(const std::string& path, const RunOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        HeisenbergModule m = load_model(path);
        Report r = run_checks(m, opts);
        out << render_table(r);
        return has_failures(r) ? static_cast<int>(kExitCheckFailure) : static_cast<int>(kExitPass);
    });
}

int cmd_report(const std::string& path, const std::string& report_path, const RunOptions& opts, std::ostream& out,
               std::ostream& err) {
    return guarded(err, [&] {
        HeisenbergModule m = load_model(path);
        Report r = run_checks(m, opts);
        const std::string text = to_json(r).dump(2) + "\n";
        if (report_path.empty()) {
            out << text;
        } else {
            std::ofstream f(report_path, std::ios::binary);
            if (!f) throw ArgumentError("cannot write report file " + report_path);
            f << text;
            out << render_table(r);
        }
        return has_failures(r) ? static_cast<int>(kExitCheckFailure) : static_cast<int>(kExitPass);
    });
}

int cmd_decompose(const std::string& path, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        HeisenbergModule m = load_model(path);
        const int g = m.genus;
        bool ok = true;
        SubspaceFamily w = lowest_weight(m);
        out << "lowest-weight space W = ker mu-[pt] ∩ ker mu-[C]\n";
        out << "  (n,k)    dim W  dim V\n";
        for (const auto& [key, s] : w)
            if (s.dim() > 0)
                out << "  " << std::left << std::setw(8) << to_string(key) << std::right << std::setw(6) << s.dim()
                    << std::setw(7) << m.V->dim(key) << "\n";

        FreenessResult fr = freeness_check(m, w);
        out << "freeness of W ⊗ Q[mu+[pt], mu+[C]] -> V\n";
        out << "  n   dim V_n  generated  rank  iso\n";
        for (const auto& row : fr.rows)
            out << "  " << std::setw(2) << row.n << std::setw(9) << row.dim << std::setw(11) << row.generated
                << std::setw(6) << row.rank << "  " << (row.isomorphism ? "yes" : "no") << "\n";
        ok = ok && fr.ok();

        for (int n = 2 * g; n <= m.n_max; ++n) {
            try {
                PhiDecomposition pd = phi_decomposition(m, n);
                out << "phi on H_" << n << " (dim " << pd.kernel_dim << "):";
                for (const auto& [lambda, dimension] : pd.eigen_dims) out << " " << lambda << "^" << dimension;
                out << (pd.complete ? "" : "  [incomplete]") << "\n";
                ok = ok && pd.complete;
            } catch (const InvarianceError& ex) {
                out << "phi on H_" << n << ": not invariant (" << ex.what() << ")\n";
                ok = false;
            }
        }

        try {
            DDecomposition d = d_grading(m, w);
            out << "D-grading of H_*(J):";
            for (const auto& [k, s] : d.pieces) out << " D_" << k << "=" << s.dim();
            out << (d.direct_sum ? "" : "  [not a direct sum]") << "\n";
            ok = ok && d.direct_sum;
        } catch (const ModelError& ex) {
            out << "D-grading unavailable: " << ex.what() << "\n";
            ok = false;
        }
        return ok ? static_cast<int>(kExitPass) : static_cast<int>(kExitCheckFailure);
    });
}

int cmd_filtrate(const std::string& path, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        HeisenbergModule m = load_model(path);
        const int g = m.genus;
        if (!m.e) throw ArgumentError("model carries no e operator");
        DDecomposition d = d_grading(m, lowest_weight(m));
        const Matrix l = m.e->dense().transpose();
        const std::size_t dim = l.rows();
        WeightFiltrationResult w = weight_filtration(l, g);

        auto pieces = cohomology_pieces(d);
        std::vector<Subspace> steps;
        Subspace acc = Subspace::zero(dim);
        for (int j = 0; j <= 2 * g; ++j) {
            if (auto it = pieces.find(j); it != pieces.end()) acc = sum(acc, it->second);
            steps.push_back(acc);
        }
        Filtration p(0, steps);

        out << "weight filtration of cup with theta on H^*(J), center " << g << "\n  k     ";
        for (int k = 0; k <= 2 * g; ++k) out << std::setw(5) << k;
        out << "\n  dim W ";
        for (int k = 0; k <= 2 * g; ++k) out << std::setw(5) << w.filtration.at(k).dim();
        out << "\n  dim P ";
        for (int k = 0; k <= 2 * g; ++k) out << std::setw(5) << p.at(k).dim();
        out << "\n";

        OppositenessReport rep = check_opposite(w.filtration, p, 2 * g);
        out << "dim(W_k ∩ P_m), rows k, columns m\n      ";
        for (int mm = 0; mm <= 2 * g; ++mm) out << std::setw(4) << mm;
        out << "\n";
        std::map<std::pair<int, int>, std::size_t> table;
        for (const auto& e : rep.entries) table[{e.k, e.m}] = e.dim_intersection;
        for (int k = 0; k <= 2 * g; ++k) {
            out << "  " << std::setw(2) << k << "  ";
            for (int mm = 0; mm <= 2 * g; ++mm) {
                auto it = table.find({k, mm});
                if (it == table.end())
                    out << std::setw(4) << ".";
                else
                    out << std::setw(4) << it->second;
            }
            out << "\n";
        }
        out << (rep.opposite() ? "opposite: yes\n" : "opposite: no\n");
        for (const auto& v : rep.violations)
            out << "  violation at k=" << v.k << ", m=" << v.m << " (dim " << v.dim_intersection << ")\n";
        return rep.opposite() ? static_cast<int>(kExitPass) : static_cast<int>(kExitCheckFailure);
    });
}

}  // namespace lefschetz
