#include "ellmod/abelian.hpp"

#include <algorithm>

namespace ellmod {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c) throw IndexOutOfRange("ragged row list");
        for (int j = 0; j < c; ++j) m.at(i, j) = static_cast<long>(rows[i][j]);
    }
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw IndexOutOfRange("dimension mismatch in matrix product");
    IntMatrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const mpz_class& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j) out.at(i, j) += a * rhs.at(k, j);
        }
    }
    return out;
}

mpz_class IntMatrix::determinant() const {
    if (rows_ != cols_) throw IndexOutOfRange("determinant of a non-square matrix");
    int n = rows_;
    if (n == 0) return 1;
    IntMatrix m = *this;
    mpz_class prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k) == 0) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i) {
                if (m.at(i, k) != 0) {
                    swap_row = i;
                    break;
                }
            }
            if (swap_row < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(swap_row, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                mpz_class num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                mpz_divexact(m.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            m.at(i, k) = 0;
        }
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

namespace {

struct SnfState {
    IntMatrix d;
    IntMatrix u;
    IntMatrix v;

    void swap_rows(int a, int b) {
        for (int j = 0; j < d.cols(); ++j) std::swap(d.at(a, j), d.at(b, j));
        for (int j = 0; j < u.cols(); ++j) std::swap(u.at(a, j), u.at(b, j));
    }
    void swap_cols(int a, int b) {
        for (int i = 0; i < d.rows(); ++i) std::swap(d.at(i, a), d.at(i, b));
        for (int i = 0; i < v.rows(); ++i) std::swap(v.at(i, a), v.at(i, b));
    }
    void add_row(int dst, int src, const mpz_class& k) {
        for (int j = 0; j < d.cols(); ++j) d.at(dst, j) += k * d.at(src, j);
        for (int j = 0; j < u.cols(); ++j) u.at(dst, j) += k * u.at(src, j);
    }
    void add_col(int dst, int src, const mpz_class& k) {
        for (int i = 0; i < d.rows(); ++i) d.at(i, dst) += k * d.at(i, src);
        for (int i = 0; i < v.rows(); ++i) v.at(i, dst) += k * v.at(i, src);
    }
    void negate_row(int r) {
        for (int j = 0; j < d.cols(); ++j) d.at(r, j) = -d.at(r, j);
        for (int j = 0; j < u.cols(); ++j) u.at(r, j) = -u.at(r, j);
    }

    // Least-absolute-value nonzero entry of the trailing submatrix.
    bool find_pivot(int t, int& pi, int& pj) const {
        mpz_class best = 0;
        pi = pj = -1;
        for (int i = t; i < d.rows(); ++i) {
            for (int j = t; j < d.cols(); ++j) {
                if (d.at(i, j) == 0) continue;
                mpz_class a = abs(d.at(i, j));
                if (pi < 0 || a < best) {
                    best = a;
                    pi = i;
                    pj = j;
                }
            }
        }
        return pi >= 0;
    }

    bool row_col_clear(int t) const {
        for (int i = t + 1; i < d.rows(); ++i) {
            if (d.at(i, t) != 0) return false;
        }
        for (int j = t + 1; j < d.cols(); ++j) {
            if (d.at(t, j) != 0) return false;
        }
        return true;
    }
};

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m) {
    SnfState s{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
    int steps = std::min(m.rows(), m.cols());

    for (int t = 0; t < steps; ++t) {
        int pi, pj;
        if (!s.find_pivot(t, pi, pj)) break;  // trailing block is zero
        for (;;) {
            s.find_pivot(t, pi, pj);
            s.swap_rows(t, pi);
            s.swap_cols(t, pj);
            for (int i = t + 1; i < s.d.rows(); ++i) {
                if (s.d.at(i, t) != 0) s.add_row(i, t, -mpz_class(s.d.at(i, t) / s.d.at(t, t)));
            }
            for (int j = t + 1; j < s.d.cols(); ++j) {
                if (s.d.at(t, j) != 0) s.add_col(j, t, -mpz_class(s.d.at(t, j) / s.d.at(t, t)));
            }
            if (!s.row_col_clear(t)) continue;  // residues remain; pivot shrank, repeat

            // Fold in any entry the pivot does not divide yet, then repeat.
            bool divides_all = true;
            for (int i = t + 1; i < s.d.rows() && divides_all; ++i) {
                for (int j = t + 1; j < s.d.cols() && divides_all; ++j) {
                    if (s.d.at(i, j) % s.d.at(t, t) != 0) {
                        s.add_row(t, i, 1);
                        divides_all = false;
                    }
                }
            }
            if (divides_all) break;
        }
        if (s.d.at(t, t) < 0) s.negate_row(t);
    }
    return SmithDecomposition{s.u, s.d, s.v};
}

FinAbGroup FinAbGroup::cyclic(const mpz_class& n) {
    if (n < 1) throw NotCyclic("cyclic groups need a positive order");
    if (n == 1) return trivial();
    return FinAbGroup(0, {n});
}

std::optional<mpz_class> FinAbGroup::order() const {
    if (free_rank_ > 0) return std::nullopt;
    mpz_class o = 1;
    for (const mpz_class& d : torsion_) o *= d;
    return o;
}

std::string FinAbGroup::str() const {
    if (is_trivial()) return "0";
    std::string out;
    if (free_rank_ == 1) {
        out = "Z";
    } else if (free_rank_ > 1) {
        out = "Z^" + std::to_string(free_rank_);
    }
    for (const mpz_class& d : torsion_) {
        if (!out.empty()) out += " + ";
        out += "Z/" + d.get_str();
    }
    return out;
}

FinAbGroup group_from_presentation(const IntMatrix& relations, int generators) {
    if (relations.cols() != generators) {
        throw IndexOutOfRange("relation matrix must have one column per generator");
    }
    SmithDecomposition snf = smith_normal_form(relations);
    std::vector<mpz_class> torsion;
    int nonzero = 0;
    for (int i = 0; i < std::min(snf.d.rows(), snf.d.cols()); ++i) {
        const mpz_class& d = snf.d.at(i, i);
        if (d == 0) continue;
        ++nonzero;
        if (d >= 2) torsion.push_back(d);
    }
    return FinAbGroup(generators - nonzero, std::move(torsion));
}

std::optional<mpz_class> element_order(const IntMatrix& relations,
                                       const std::vector<mpz_class>& element) {
    int g = relations.cols();
    if (static_cast<int>(element.size()) != g) {
        throw IndexOutOfRange("element must have one coefficient per generator");
    }
    SmithDecomposition snf = smith_normal_form(relations);
    // Transport the element into diagonal coordinates: w -> w V.
    std::vector<mpz_class> w(static_cast<size_t>(g));
    for (int j = 0; j < g; ++j) {
        for (int i = 0; i < g; ++i) w[j] += element[static_cast<size_t>(i)] * snf.v.at(i, j);
    }
    mpz_class order = 1;
    for (int j = 0; j < g; ++j) {
        mpz_class d = j < std::min(snf.d.rows(), snf.d.cols()) ? snf.d.at(j, j) : mpz_class(0);
        if (d == 0) {
            if (w[j] != 0) return std::nullopt;
            continue;
        }
        mpz_class g1 = gcd(w[static_cast<size_t>(j)], d);
        order = lcm(order, mpz_class(d / g1));
    }
    return order;
}

namespace {

void require_cyclic(const ExtensionProblem& prob) {
    if (!prob.sub.is_cyclic() || !prob.quot.is_cyclic()) {
        throw NotCyclic("extension solving is limited to cyclic sub and quotient");
    }
    if (!prob.exactness_assumed) {
        throw ExactnessRequired("the solver needs left-exactness to be assumed");
    }
}

}  // namespace

std::vector<ExtensionRealization> extension_realizations(const ExtensionProblem& prob) {
    require_cyclic(prob);
    bool sub_free = prob.sub.free_rank() == 1;
    bool quot_free = prob.quot.free_rank() == 1;
    mpz_class n = sub_free ? 0 : (prob.sub.torsion().empty() ? 1 : prob.sub.torsion()[0]);
    mpz_class m = quot_free ? 0 : (prob.quot.torsion().empty() ? 1 : prob.quot.torsion()[0]);

    mpz_class class_count = 1;  // Ext^1(Z, -) = 0
    if (!quot_free) class_count = sub_free ? m : gcd(m, n);

    std::vector<ExtensionRealization> out;
    for (mpz_class e = 0; e < class_count; ++e) {
        // <x, y | n x = 0, m y = e x>, dropping relations with free groups.
        std::vector<std::vector<mpz_class>> rows;
        if (!sub_free) rows.push_back({n, 0});
        if (!quot_free) rows.push_back({-e, m});
        IntMatrix rel(static_cast<int>(rows.size()), 2);
        for (size_t i = 0; i < rows.size(); ++i) {
            rel.at(static_cast<int>(i), 0) = rows[i][0];
            rel.at(static_cast<int>(i), 1) = rows[i][1];
        }

        ExtensionRealization r{e, group_from_presentation(rel, 2), {}, false};
        if (sub_free) {
            // Lifts are y + k x over all integers k; y + k x is torsion only
            // when (k, 1) is proportional to the relation row (-e, m), that
            // is when k = -e/m, which in the class range means e = 0.
            r.has_infinite_lift = true;
            if (!quot_free && m > 0 && e % m == 0) {
                auto o = element_order(rel, {mpz_class(-e / m), 1});
                if (o) r.finite_lift_orders.insert(*o);
            }
        } else {
            for (mpz_class k = 0; k < n; ++k) {
                auto o = element_order(rel, {k, 1});
                if (o) {
                    r.finite_lift_orders.insert(*o);
                } else {
                    r.has_infinite_lift = true;
                }
            }
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::set<FinAbGroup> solve_extension(const ExtensionProblem& prob) {
    std::set<FinAbGroup> out;
    for (const ExtensionRealization& r : extension_realizations(prob)) out.insert(r.middle);
    return out;
}

FinAbGroup disambiguate(const ExtensionProblem& prob, const std::set<FinAbGroup>& candidates,
                        const LiftConstraint& constraint) {
    std::set<FinAbGroup> survivors;
    for (const ExtensionRealization& r : extension_realizations(prob)) {
        if (!candidates.count(r.middle)) continue;
        bool ok = false;
        switch (constraint.kind) {
            case LiftConstraint::Kind::HasLiftOfOrder:
                ok = r.finite_lift_orders.count(constraint.order) > 0;
                break;
            case LiftConstraint::Kind::HasNoLiftOfOrder:
                ok = r.finite_lift_orders.count(constraint.order) == 0;
                break;
            case LiftConstraint::Kind::HasLiftOfInfiniteOrder:
                ok = r.has_infinite_lift;
                break;
        }
        if (ok) survivors.insert(r.middle);
    }
    if (survivors.empty()) throw NoCandidateMatches("no extension satisfies the lift constraint");
    if (survivors.size() > 1) throw AmbiguousConstraint("several extensions satisfy the lift constraint");
    return *survivors.begin();
}

std::string ChowPresentation::str() const {
    std::string out = "Z[L]/(" + c1.get_str() + "L";
    if (c2) out += ", " + c2->get_str() + "L^2";
    out += ")";
    return out;
}

FinAbGroup chow_component(const ChowPresentation& pres, int k) {
    if (k < 0) throw IndexOutOfRange("degree must be nonnegative");
    if (k == 0) return FinAbGroup::free_group(1);
    if (k == 1) return FinAbGroup::cyclic(pres.c1);
    mpz_class d = pres.c2 ? gcd(pres.c1, *pres.c2) : pres.c1;
    return FinAbGroup::cyclic(d);
}

std::map<std::string, ChowPresentation> chow_presentation_table() {
    std::map<std::string, ChowPresentation> t;
    t["M1,1"] = ChowPresentation{"M1,1", 12, std::nullopt};
    t["M1,2"] = ChowPresentation{"M1,2", 12, std::nullopt};
    t["M1,3"] = ChowPresentation{"M1,3", 12, mpz_class(6)};
    t["M1,4"] = ChowPresentation{"M1,4", 12, mpz_class(2)};
    for (int n = 5; n <= 10; ++n) {
        std::string name = "M1," + std::to_string(n);
        t[name] = ChowPresentation{name, 12, mpz_class(1)};
    }
    return t;
}

}  // namespace ellmod
