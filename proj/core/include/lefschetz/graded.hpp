#pragma once

#include "lefschetz/subspace.hpp"

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace lefschetz {

// Component index: n = Hilbert index, k = homological degree.
struct Key {
    int n = 0;
    int k = 0;
    auto operator<=>(const Key&) const = default;
};

std::string to_string(const Key& key);

struct Bidegree {
    int dn = 0;
    int dk = 0;
    auto operator<=>(const Bidegree&) const = default;
    Bidegree operator+(const Bidegree& o) const { return {dn + o.dn, dk + o.dk}; }
    Bidegree operator-() const { return {-dn, -dk}; }
};

std::string to_string(const Bidegree& b);

class BigradedSpace {
public:
    struct Component {
        std::size_t dim = 0;
        std::vector<std::string> labels;
        std::size_t offset = 0;
    };

    BigradedSpace() = default;

    // Empty components are dropped.
    void add_component(const Key& key, std::vector<std::string> labels);

    bool has(const Key& key) const { return components_.count(key) != 0; }
    std::size_t dim(const Key& key) const;
    std::size_t total_dim() const { return total_; }
    std::size_t offset(const Key& key) const;
    const std::string& label(const Key& key, std::size_t i) const;
    const std::map<Key, Component>& components() const { return components_; }

    std::vector<Key> keys() const;
    std::vector<Key> keys_with_n(int n) const;
    std::size_t slice_dim(int n) const;
    int max_n() const;

    bool operator==(const BigradedSpace& other) const;

private:
    std::map<Key, Component> components_;
    std::size_t total_ = 0;
};

using SpacePtr = std::shared_ptr<const BigradedSpace>;

// Element of a bigraded space, one coefficient vector per component.
using GradedVector = std::map<Key, Vector>;

// Block operator between bigraded spaces. Blocks are keyed by
// (source component, target component); absent blocks are zero.
// A source component is "truncated" when part of its image lies outside the
// window the spaces were built for; such components cannot be checked.
class GradedOperator {
public:
    using BlockKey = std::pair<Key, Key>;

    GradedOperator() = default;
    GradedOperator(SpacePtr source, SpacePtr target, std::optional<Bidegree> bidegree = std::nullopt);

    static GradedOperator identity(const SpacePtr& space);

    const SpacePtr& source() const { return source_; }
    const SpacePtr& target() const { return target_; }
    const std::optional<Bidegree>& bidegree() const { return bidegree_; }

    // Throws ShapeError on wrong dimensions or a block against the bidegree.
    void set_block(const Key& from, const Key& to, Matrix m);
    void add_to_block(const Key& from, const Key& to, const Matrix& m);
    const Matrix* block(const Key& from, const Key& to) const;
    const std::map<BlockKey, Matrix>& blocks() const { return blocks_; }

    void mark_truncated(const Key& from) { truncated_.insert(from); }
    // Marks every source component whose image would land at n > n_max.
    void apply_window(int n_max);
    bool is_truncated(const Key& from) const { return truncated_.count(from) != 0; }
    const std::set<Key>& truncated() const { return truncated_; }

    GradedVector apply(const Key& from, const Vector& v) const;
    GradedVector apply(const GradedVector& v) const;
    // Image of the i-th basis vector of a source component.
    GradedVector apply_basis(const Key& from, std::size_t i) const;

    GradedOperator scaled(const Rational& s) const;
    GradedOperator restricted_to_n(int n) const;  // drop blocks not starting at slice n

    // Agreement on one source component, absent blocks read as zero.
    bool agrees_on(const GradedOperator& other, const Key& from) const;
    bool operator==(const GradedOperator& other) const;

    // Matrix from the concatenation of `from` components to `to` components.
    Matrix slice(const std::vector<Key>& from, const std::vector<Key>& to) const;
    Matrix dense() const;

private:
    SpacePtr source_;
    SpacePtr target_;
    std::optional<Bidegree> bidegree_;
    std::map<BlockKey, Matrix> blocks_;
    std::set<Key> truncated_;
};

bool same_space(const SpacePtr& a, const SpacePtr& b);

// A after B. Throws CompositionError unless source(A) == target(B).
GradedOperator compose(const GradedOperator& a, const GradedOperator& b);
GradedOperator add(const GradedOperator& a, const GradedOperator& b);
GradedOperator subtract(const GradedOperator& a, const GradedOperator& b);
GradedOperator commutator(const GradedOperator& a, const GradedOperator& b);
// Transpose every block, swap source and target, negate the bidegree.
GradedOperator dual(const GradedOperator& a);

using SubspaceFamily = std::map<Key, Subspace>;

struct Restriction {
    SpacePtr space;  // components = dims of the family members
    GradedOperator op;
};

// Operator induced on an invariant family of subspaces, in the stored bases.
// Throws InvarianceError naming the first basis vector mapped outside.
Restriction restrict(const GradedOperator& a, const SubspaceFamily& sub);

std::string format_vector(const BigradedSpace& space, const GradedVector& v);
std::string format_vector(const std::vector<std::string>& labels, const Vector& v);

// Increasing chain W_first ⊆ ... ⊆ W_last = ambient of subspaces of Q^d.
// Indices below first_index read as zero, above last_index as the full space.
class Filtration {
public:
    Filtration() = default;
    Filtration(int first_index, std::vector<Subspace> steps);

    int first_index() const { return first_; }
    int last_index() const { return first_ + static_cast<int>(steps_.size()) - 1; }
    std::size_t ambient_dim() const { return ambient_; }
    Subspace at(int index) const;
    const std::vector<Subspace>& steps() const { return steps_; }
    // dim W_k - dim W_{k-1} for k = first..last.
    std::vector<std::size_t> graded_dims() const;

    bool operator==(const Filtration& other) const;

private:
    int first_ = 0;
    std::size_t ambient_ = 0;
    std::vector<Subspace> steps_;
};

// Three endomorphisms of one space with [h,e] = 2e, [h,f] = -2f, [e,f] = h.
class Sl2Triple {
public:
    // Throws Sl2VerificationError naming the first failing bracket.
    static Sl2Triple make(Matrix e, Matrix h, Matrix f);
    // Empty string if the triple is valid, otherwise the failing bracket.
    static std::string first_failure(const Matrix& e, const Matrix& h, const Matrix& f);

    const Matrix& e() const { return e_; }
    const Matrix& h() const { return h_; }
    const Matrix& f() const { return f_; }
    std::size_t dim() const { return e_.rows(); }

    // h-eigenspaces over {-dim..dim}; always complete for a valid triple.
    Eigenspaces weight_spaces() const;

private:
    Sl2Triple(Matrix e, Matrix h, Matrix f) : e_(std::move(e)), h_(std::move(h)), f_(std::move(f)) {}
    Matrix e_, h_, f_;
};

}  // namespace lefschetz
