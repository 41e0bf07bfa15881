#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ellmod/errors.hpp"

namespace ellmod {

// Dense matrix over Z with exact entries.
class IntMatrix {
public:
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {}
    static IntMatrix identity(int n);
    static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    mpz_class& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
    const mpz_class& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

    IntMatrix operator*(const IntMatrix& rhs) const;
    // Exact determinant by fraction-free (Bareiss) elimination.
    mpz_class determinant() const;

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

private:
    int rows_;
    int cols_;
    std::vector<mpz_class> e_;
};

// U * M * V = D with U, V unimodular and D diagonal, d_i >= 0, d_i | d_{i+1}.
struct SmithDecomposition {
    IntMatrix u;
    IntMatrix d;
    IntMatrix v;
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

// Finitely generated abelian group in invariant-factor form: Z^r + Z/d_1 +
// ... + Z/d_k with 2 <= d_1 | d_2 | ... | d_k. Equality is isomorphism.
class FinAbGroup {
public:
    static FinAbGroup trivial() { return FinAbGroup(0, {}); }
    static FinAbGroup free_group(int rank) { return FinAbGroup(rank, {}); }
    static FinAbGroup cyclic(const mpz_class& n);  // n >= 1; cyclic(1) is trivial

    int free_rank() const { return free_rank_; }
    const std::vector<mpz_class>& torsion() const { return torsion_; }
    bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }
    bool is_cyclic() const { return free_rank_ + static_cast<int>(torsion_.size()) <= 1; }
    std::optional<mpz_class> order() const;  // nullopt when infinite
    std::string str() const;                 // "0", "Z", "Z/6", "Z + Z/2", "Z^2", ...

    friend bool operator==(const FinAbGroup& a, const FinAbGroup& b) {
        return a.free_rank_ == b.free_rank_ && a.torsion_ == b.torsion_;
    }
    friend bool operator!=(const FinAbGroup& a, const FinAbGroup& b) { return !(a == b); }
    friend bool operator<(const FinAbGroup& a, const FinAbGroup& b) {
        if (a.free_rank_ != b.free_rank_) return a.free_rank_ < b.free_rank_;
        return a.torsion_ < b.torsion_;
    }

private:
    friend FinAbGroup group_from_presentation(const IntMatrix&, int);
    FinAbGroup(int rank, std::vector<mpz_class> torsion)
        : free_rank_(rank), torsion_(std::move(torsion)) {}

    int free_rank_;
    std::vector<mpz_class> torsion_;
};

// Cokernel of the relation matrix (one relation per row) on `generators`
// generators, classified through Smith normal form.
FinAbGroup group_from_presentation(const IntMatrix& relations, int generators);

// Order of the class of `element` (coefficients in the generators) in the
// group presented by `relations`; nullopt when infinite.
std::optional<mpz_class> element_order(const IntMatrix& relations,
                                       const std::vector<mpz_class>& element);

// The patching data 0 -> sub -> B -> quot -> 0 with cyclic ends. The
// exactness flag records that injectivity of the left map is assumed, not
// computed; the solver refuses to run without it.
struct ExtensionProblem {
    FinAbGroup sub;
    FinAbGroup quot;
    bool exactness_assumed = true;
};

// One extension class: the middle group B_e presented as
// <x, y | n x = 0, m y = e x> together with the orders achieved by lifts
// y + k x of the quotient generator.
struct ExtensionRealization {
    mpz_class ext_class;
    FinAbGroup middle;
    std::set<mpz_class> finite_lift_orders;
    bool has_infinite_lift;
};

// All extension classes of the problem, in ext-class order. Ext^1(Z/m, Z/n)
// has gcd(m, n) classes, Ext^1(Z/m, Z) has m, and Ext^1(Z, -) vanishes.
std::vector<ExtensionRealization> extension_realizations(const ExtensionProblem& prob);

// The set of isomorphism types of middle groups.
std::set<FinAbGroup> solve_extension(const ExtensionProblem& prob);

// Constraint on the order of lifts of the quotient generator, used to pick
// the middle group out of an ambiguous extension set.
struct LiftConstraint {
    enum class Kind { HasLiftOfOrder, HasNoLiftOfOrder, HasLiftOfInfiniteOrder };
    Kind kind;
    mpz_class order;  // ignored for HasLiftOfInfiniteOrder

    static LiftConstraint has_lift_of_order(const mpz_class& n) {
        return {Kind::HasLiftOfOrder, n};
    }
    static LiftConstraint has_no_lift_of_order(const mpz_class& n) {
        return {Kind::HasNoLiftOfOrder, n};
    }
    static LiftConstraint has_infinite_lift() { return {Kind::HasLiftOfInfiniteOrder, 0}; }
};

// Returns the unique candidate middle group whose realization satisfies the
// constraint. NoCandidateMatches / AmbiguousConstraint otherwise.
FinAbGroup disambiguate(const ExtensionProblem& prob, const std::set<FinAbGroup>& candidates,
                        const LiftConstraint& constraint);

// Graded ring Z[L]/(c1 L, c2 L^2), or Z[L]/(c1 L) when c2 is absent, where L
// is the degree-1 generator (the Hodge class for the moduli presentations).
struct ChowPresentation {
    std::string name;
    mpz_class c1;
    std::optional<mpz_class> c2;

    std::string str() const;
};

// Degree-k component: Z for k = 0, Z/c1 for k = 1, Z/gcd(c1, c2) beyond.
FinAbGroup chow_component(const ChowPresentation& pres, int k);

// The known presentations for the moduli stacks of n-pointed smooth elliptic
// curves, keyed "M1,1" ... "M1,10".
std::map<std::string, ChowPresentation> chow_presentation_table();

}  // namespace ellmod
