#include "lefschetz/graded.hpp"

#include "lefschetz/errors.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

namespace lefschetz {

std::string to_string(const Key& key) {
    return "(" + std::to_string(key.n) + "," + std::to_string(key.k) + ")";
}

std::string to_string(const Bidegree& b) {
    return "(" + std::to_string(b.dn) + "," + std::to_string(b.dk) + ")";
}

void BigradedSpace::add_component(const Key& key, std::vector<std::string> labels) {
    if (labels.empty()) return;
    auto& c = components_[key];
    c.dim = labels.size();
    c.labels = std::move(labels);
    total_ = 0;
    for (auto& [k, comp] : components_) {
        comp.offset = total_;
        total_ += comp.dim;
    }
}

std::size_t BigradedSpace::dim(const Key& key) const {
    auto it = components_.find(key);
    return it == components_.end() ? 0 : it->second.dim;
}

std::size_t BigradedSpace::offset(const Key& key) const {
    auto it = components_.find(key);
    if (it == components_.end()) throw DimensionMismatch("no component " + to_string(key));
    return it->second.offset;
}

const std::string& BigradedSpace::label(const Key& key, std::size_t i) const {
    auto it = components_.find(key);
    if (it == components_.end() || i >= it->second.dim)
        throw DimensionMismatch("no basis vector " + std::to_string(i) + " in component " + to_string(key));
    return it->second.labels[i];
}

std::vector<Key> BigradedSpace::keys() const {
    std::vector<Key> out;
    for (const auto& [k, c] : components_) out.push_back(k);
    return out;
}

std::vector<Key> BigradedSpace::keys_with_n(int n) const {
    std::vector<Key> out;
    for (const auto& [k, c] : components_)
        if (k.n == n) out.push_back(k);
    return out;
}

std::size_t BigradedSpace::slice_dim(int n) const {
    std::size_t d = 0;
    for (const auto& [k, c] : components_)
        if (k.n == n) d += c.dim;
    return d;
}

int BigradedSpace::max_n() const {
    int m = -1;
    for (const auto& [k, c] : components_) m = std::max(m, k.n);
    return m;
}

bool BigradedSpace::operator==(const BigradedSpace& other) const {
    if (components_.size() != other.components_.size()) return false;
    for (const auto& [k, c] : components_) {
        auto it = other.components_.find(k);
        if (it == other.components_.end() || it->second.labels != c.labels) return false;
    }
    return true;
}

bool same_space(const SpacePtr& a, const SpacePtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

GradedOperator::GradedOperator(SpacePtr source, SpacePtr target, std::optional<Bidegree> bidegree)
    : source_(std::move(source)), target_(std::move(target)), bidegree_(bidegree) {
    if (!source_ || !target_) throw ArgumentError("graded operator needs source and target spaces");
}

GradedOperator GradedOperator::identity(const SpacePtr& space) {
    GradedOperator id(space, space, Bidegree{0, 0});
    for (const auto& [k, c] : space->components()) id.set_block(k, k, Matrix::identity(c.dim));
    return id;
}

void GradedOperator::set_block(const Key& from, const Key& to, Matrix m) {
    const std::string name = to_string(from) + "->" + to_string(to);
    if (bidegree_ && (to.n != from.n + bidegree_->dn || to.k != from.k + bidegree_->dk))
        throw ShapeError("block " + name + " does not have bidegree " + to_string(*bidegree_));
    const std::size_t rows = target_->dim(to), cols = source_->dim(from);
    if (!source_->has(from) || !target_->has(to) || m.rows() != rows || m.cols() != cols) {
        std::ostringstream os;
        os << "block " << name << " has shape " << m.rows() << "x" << m.cols() << ", components need " << rows
           << "x" << cols;
        throw ShapeError(os.str());
    }
    if (m.is_zero()) {
        blocks_.erase({from, to});
        return;
    }
    blocks_[{from, to}] = std::move(m);
}

void GradedOperator::add_to_block(const Key& from, const Key& to, const Matrix& m) {
    auto it = blocks_.find({from, to});
    if (it == blocks_.end()) {
        set_block(from, to, m);
        return;
    }
    Matrix s = it->second + m;
    set_block(from, to, std::move(s));
}

const Matrix* GradedOperator::block(const Key& from, const Key& to) const {
    auto it = blocks_.find({from, to});
    return it == blocks_.end() ? nullptr : &it->second;
}

void GradedOperator::apply_window(int n_max) {
    if (!bidegree_) return;
    for (const auto& [k, c] : source_->components())
        if (k.n + bidegree_->dn > n_max) truncated_.insert(k);
}

GradedVector GradedOperator::apply(const Key& from, const Vector& v) const {
    GradedVector out;
    auto lo = blocks_.lower_bound({from, Key{INT_MIN, INT_MIN}});
    for (auto it = lo; it != blocks_.end() && it->first.first == from; ++it) {
        Vector w = it->second * v;
        if (lefschetz::is_zero(w)) continue;
        auto [pos, fresh] = out.try_emplace(it->first.second, w);
        if (!fresh) pos->second = add(pos->second, w);
    }
    return out;
}

GradedVector GradedOperator::apply(const GradedVector& v) const {
    GradedVector out;
    for (const auto& [key, x] : v)
        for (auto& [t, w] : apply(key, x)) {
            auto [pos, fresh] = out.try_emplace(t, w);
            if (!fresh) pos->second = add(pos->second, w);
        }
    for (auto it = out.begin(); it != out.end();)
        it = lefschetz::is_zero(it->second) ? out.erase(it) : std::next(it);
    return out;
}

GradedVector GradedOperator::apply_basis(const Key& from, std::size_t i) const {
    return apply(from, unit_vector(source_->dim(from), i));
}

GradedOperator GradedOperator::scaled(const Rational& s) const {
    GradedOperator r(source_, target_, bidegree_);
    r.truncated_ = truncated_;
    if (sgn(s) == 0) return r;
    for (const auto& [bk, m] : blocks_) r.blocks_[bk] = m * s;
    return r;
}

GradedOperator GradedOperator::restricted_to_n(int n) const {
    GradedOperator r(source_, target_, bidegree_);
    for (const auto& [bk, m] : blocks_)
        if (bk.first.n == n) r.blocks_[bk] = m;
    for (const auto& k : truncated_)
        if (k.n == n) r.truncated_.insert(k);
    return r;
}

bool GradedOperator::agrees_on(const GradedOperator& other, const Key& from) const {
    auto collect = [&](const GradedOperator& op) {
        std::map<Key, const Matrix*> out;
        auto lo = op.blocks_.lower_bound({from, Key{INT_MIN, INT_MIN}});
        for (auto it = lo; it != op.blocks_.end() && it->first.first == from; ++it) out[it->first.second] = &it->second;
        return out;
    };
    auto a = collect(*this), b = collect(other);
    for (const auto& [t, m] : a) {
        auto it = b.find(t);
        if (it == b.end() ? !m->is_zero() : *m != *it->second) return false;
    }
    for (const auto& [t, m] : b)
        if (!a.count(t) && !m->is_zero()) return false;
    return true;
}

bool GradedOperator::operator==(const GradedOperator& other) const {
    if (!same_space(source_, other.source_) || !same_space(target_, other.target_)) return false;
    for (const auto& k : source_->keys())
        if (!agrees_on(other, k)) return false;
    return true;
}

Matrix GradedOperator::slice(const std::vector<Key>& from, const std::vector<Key>& to) const {
    std::map<Key, std::size_t> col_off, row_off;
    std::size_t cols = 0, rows = 0;
    for (const auto& k : from) {
        col_off[k] = cols;
        cols += source_->dim(k);
    }
    for (const auto& k : to) {
        row_off[k] = rows;
        rows += target_->dim(k);
    }
    Matrix m(rows, cols);
    for (const auto& [bk, b] : blocks_) {
        auto c = col_off.find(bk.first);
        auto r = row_off.find(bk.second);
        if (c == col_off.end() || r == row_off.end()) continue;
        m.set_block(r->second, c->second, b);
    }
    return m;
}

Matrix GradedOperator::dense() const { return slice(source_->keys(), target_->keys()); }

GradedOperator compose(const GradedOperator& a, const GradedOperator& b) {
    if (!same_space(a.source(), b.target()))
        throw CompositionError("compose: source of the left operator is not the target of the right operator");
    std::optional<Bidegree> bd;
    if (a.bidegree() && b.bidegree()) bd = *a.bidegree() + *b.bidegree();
    GradedOperator r(b.source(), a.target(), bd);
    std::multimap<Key, const std::pair<const GradedOperator::BlockKey, Matrix>*> a_by_source;
    for (const auto& entry : a.blocks()) a_by_source.emplace(entry.first.first, &entry);
    for (const auto& k : b.truncated()) r.mark_truncated(k);
    for (const auto& [bk, mb] : b.blocks()) {
        if (a.is_truncated(bk.second)) r.mark_truncated(bk.first);
        auto range = a_by_source.equal_range(bk.second);
        for (auto it = range.first; it != range.second; ++it) {
            const auto& [akey, ma] = *it->second;
            r.add_to_block(bk.first, akey.second, ma * mb);
        }
    }
    return r;
}

namespace {

GradedOperator combine(const GradedOperator& a, const GradedOperator& b, int sign, const char* op) {
    if (!same_space(a.source(), b.source()) || !same_space(a.target(), b.target()))
        throw CompositionError(std::string(op) + ": operators act between different spaces");
    std::optional<Bidegree> bd;
    if (a.bidegree() && b.bidegree() && *a.bidegree() == *b.bidegree()) bd = a.bidegree();
    GradedOperator r(a.source(), a.target(), bd);
    for (const auto& [bk, m] : a.blocks()) r.add_to_block(bk.first, bk.second, m);
    for (const auto& [bk, m] : b.blocks()) r.add_to_block(bk.first, bk.second, sign > 0 ? m : -m);
    for (const auto& k : a.truncated()) r.mark_truncated(k);
    for (const auto& k : b.truncated()) r.mark_truncated(k);
    return r;
}

}  // namespace

GradedOperator add(const GradedOperator& a, const GradedOperator& b) { return combine(a, b, 1, "add"); }
GradedOperator subtract(const GradedOperator& a, const GradedOperator& b) { return combine(a, b, -1, "subtract"); }

GradedOperator commutator(const GradedOperator& a, const GradedOperator& b) {
    return subtract(compose(a, b), compose(b, a));
}

GradedOperator dual(const GradedOperator& a) {
    std::optional<Bidegree> bd;
    if (a.bidegree()) bd = -*a.bidegree();
    GradedOperator r(a.target(), a.source(), bd);
    for (const auto& [bk, m] : a.blocks()) r.set_block(bk.second, bk.first, m.transpose());
    return r;
}

Restriction restrict(const GradedOperator& a, const SubspaceFamily& sub) {
    if (!same_space(a.source(), a.target())) throw CompositionError("restrict: operator is not an endomorphism");
    auto space = std::make_shared<BigradedSpace>();
    for (const auto& [k, s] : sub) {
        if (s.ambient_dim() != a.source()->dim(k))
            throw DimensionMismatch("restrict: subspace at " + to_string(k) + " has wrong ambient dimension");
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < s.dim(); ++i) labels.push_back("b" + std::to_string(i) + to_string(k));
        space->add_component(k, std::move(labels));
    }
    Restriction out{space, GradedOperator(space, space, a.bidegree())};
    for (const auto& [k, s] : sub) {
        for (std::size_t i = 0; i < s.dim(); ++i) {
            if (a.is_truncated(k)) out.op.mark_truncated(k);
            GradedVector img = a.apply(k, s.basis_vector(i));
            for (const auto& [t, w] : img) {
                auto it = sub.find(t);
                std::optional<Vector> coords;
                if (it != sub.end()) coords = it->second.coordinates(w);
                if (!coords) {
                    throw InvarianceError("basis vector " + std::to_string(i) + " of the subspace at " + to_string(k) +
                                          " = " + format_vector(a.source()->components().at(k).labels, s.basis_vector(i)) +
                                          " is mapped outside the subspace at " + to_string(t));
                }
                Matrix col(coords->size(), s.dim());
                col.set_column(i, *coords);
                out.op.add_to_block(k, t, col);
            }
        }
    }
    return out;
}

std::string format_vector(const std::vector<std::string>& labels, const Vector& v) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (sgn(v[i]) == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << to_string(v[i]) << ")*" << (i < labels.size() ? labels[i] : "e" + std::to_string(i));
    }
    return first ? "0" : os.str();
}

std::string format_vector(const BigradedSpace& space, const GradedVector& v) {
    std::string out;
    for (const auto& [k, x] : v) {
        if (lefschetz::is_zero(x)) continue;
        if (!out.empty()) out += " + ";
        out += format_vector(space.components().at(k).labels, x);
    }
    return out.empty() ? "0" : out;
}

Filtration::Filtration(int first_index, std::vector<Subspace> steps) : first_(first_index), steps_(std::move(steps)) {
    if (steps_.empty()) throw ArgumentError("filtration needs at least one step");
    ambient_ = steps_.front().ambient_dim();
    for (std::size_t i = 1; i < steps_.size(); ++i) {
        if (steps_[i].ambient_dim() != ambient_) throw DimensionMismatch("filtration steps in different ambient spaces");
        if (!steps_[i].contains(steps_[i - 1]))
            throw ArgumentError("filtration step " + std::to_string(first_ + static_cast<int>(i) - 1) +
                                " is not contained in the next step");
    }
    if (!steps_.back().is_full()) throw ArgumentError("last filtration step is not the whole space");
}

Subspace Filtration::at(int index) const {
    if (index < first_) return Subspace::zero(ambient_);
    if (index > last_index()) return Subspace::full(ambient_);
    return steps_[static_cast<std::size_t>(index - first_)];
}

std::vector<std::size_t> Filtration::graded_dims() const {
    std::vector<std::size_t> out;
    std::size_t prev = 0;
    for (const auto& s : steps_) {
        out.push_back(s.dim() - prev);
        prev = s.dim();
    }
    return out;
}

bool Filtration::operator==(const Filtration& other) const {
    if (ambient_ != other.ambient_) return false;
    int lo = std::min(first_, other.first_), hi = std::max(last_index(), other.last_index());
    for (int k = lo; k <= hi; ++k)
        if (at(k) != other.at(k)) return false;
    return true;
}

std::string Sl2Triple::first_failure(const Matrix& e, const Matrix& h, const Matrix& f) {
    if (!e.is_square() || e.rows() != h.rows() || h.rows() != f.rows() || !h.is_square() || !f.is_square())
        return "shapes of e, h, f differ";
    if (commutator(h, e) != e * Rational(2)) return "[h,e] = 2e";
    if (commutator(h, f) != f * Rational(-2)) return "[h,f] = -2f";
    if (commutator(e, f) != h) return "[e,f] = h";
    return {};
}

Sl2Triple Sl2Triple::make(Matrix e, Matrix h, Matrix f) {
    auto failure = first_failure(e, h, f);
    if (!failure.empty()) throw Sl2VerificationError("sl2 relation fails: " + failure);
    return Sl2Triple(std::move(e), std::move(h), std::move(f));
}

Eigenspaces Sl2Triple::weight_spaces() const {
    std::vector<long> cand;
    const long d = static_cast<long>(dim());
    for (long l = -d; l <= d; ++l) cand.push_back(l);
    return integer_eigenspaces(h_, cand);
}

}  // namespace lefschetz
