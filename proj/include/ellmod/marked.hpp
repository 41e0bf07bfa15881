#pragma once

#include <optional>
#include <vector>

#include "ellmod/curve.hpp"

namespace ellmod {

// Smooth curve with an ordered tuple of distinct marked points, the first of
// which is always the base point at infinity.
class MarkedCurve {
public:
    // Prepends the base point; validates smoothness, incidence and distinctness.
    MarkedCurve(Curve curve, std::vector<CurvePoint> affine_marks);

    const Curve& curve() const { return curve_; }
    const Field& field() const { return curve_.field(); }
    int n() const { return static_cast<int>(points_.size()); }
    // 1-based access, point(1) being the base point.
    const CurvePoint& point(int i) const { return points_.at(static_cast<size_t>(i - 1)); }
    const std::vector<CurvePoint>& points() const { return points_; }

    friend bool operator==(const MarkedCurve& a, const MarkedCurve& b) {
        return a.curve_ == b.curve_ && a.points_ == b.points_;
    }
    friend bool operator!=(const MarkedCurve& a, const MarkedCurve& b) { return !(a == b); }
    friend bool operator<(const MarkedCurve& a, const MarkedCurve& b);

private:
    Curve curve_;
    std::vector<CurvePoint> points_;
};

MarkedCurve make_marked(const FieldElement& a, const FieldElement& b,
                        const std::vector<CurvePoint>& affine_marks);

// The scaling stabilizer of a marked curve: a cyclic group of units of order
// 1, 2, 3, 4 or 6, reported by its order and a generator.
struct CyclicAut {
    int order;
    FieldElement generator;
};

// Exhaustive unit search over F_p; {1, -1} over Q.
CyclicAut automorphisms(const MarkedCurve& m);

// All points of c fixed by the scaling by t (always including the base
// point), ascending. Requires t to fix (a, b) — NotAnAutomorphism otherwise —
// and a finite field for the point enumeration.
std::vector<CurvePoint> fixed_points(const Curve& c, const FieldElement& t);

// A unit t carrying m1 onto m2 (curve and marked points, in order), if one
// exists. Exhaustive over F_p; over Q solved through rational_nth_root.
std::optional<FieldElement> isomorphism_scalar(const MarkedCurve& m1, const MarkedCurve& m2);

// Whether m1 and m2 become isomorphic over the algebraic closure: the scalar
// is allowed to live in an extension field. Decided rationally by checking
// consistency of the system t^k = c it must satisfy.
bool twist_equivalent(const MarkedCurve& m1, const MarkedCurve& m2);

// Stratification predicates. The two divisors are the images of the insertion
// maps below; the primed conditions are exactly what makes insertion
// collision-free.
//
//   avoids_inverse_divisor:  p2 != involution(p3)          (vacuous for n = 2)
//   can_mark_inverse:        p2 != involution(p_i) for all i <= n
//   avoids_chord_divisor:    p2 + p3 != involution(p4)
//   can_mark_chord_point:    p2 + p3 != involution(p_i) for all i <= n
bool avoids_inverse_divisor(const MarkedCurve& m);   // n >= 2
bool can_mark_inverse(const MarkedCurve& m);         // n >= 2
bool avoids_chord_divisor(const MarkedCurve& m);     // n >= 4
bool can_mark_chord_point(const MarkedCurve& m);     // n >= 3

// Inserts involution(p2) at position 3. Requires can_mark_inverse
// (MarkCollision otherwise); the output lands on the inverse divisor.
MarkedCurve mark_inverse(const MarkedCurve& m);

// Inserts involution(p2 + p3) — the third intersection of the chord through
// p2 and p3 — at position 4. Requires can_mark_chord_point; the output has
// p2, p3, p4 collinear.
MarkedCurve mark_chord_point(const MarkedCurve& m);

// Drops the i-th marked point (2 <= i <= n). Left inverse of both insertion
// maps (i = 3 after mark_inverse, i = 4 after mark_chord_point).
MarkedCurve forget_mark(const MarkedCurve& m, int i);

}  // namespace ellmod
