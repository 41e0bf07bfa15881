#pragma once

#include <string>

#include "ellmod/field.hpp"

namespace ellmod {

enum class CurveClass { Smooth, Nodal, Cuspidal };

// Projective point on a Weierstrass curve, stored normalized: either the
// base point [0:1:0] or an affine point [x:y:1].
class CurvePoint {
public:
    static CurvePoint at_infinity(const Field& f) { return CurvePoint(f); }
    static CurvePoint affine(FieldElement x, FieldElement y) {
        if (x.field() != y.field()) throw FieldMismatch("point coordinates in different fields");
        return CurvePoint(std::move(x), std::move(y));
    }

    bool is_infinity() const { return infinity_; }
    const FieldElement& x() const { return x_; }
    const FieldElement& y() const { return y_; }
    const Field& field() const { return x_.field(); }
    std::string str() const;

    friend bool operator==(const CurvePoint& a, const CurvePoint& b) {
        if (a.infinity_ != b.infinity_) return false;
        if (a.infinity_) return a.field() == b.field();
        return a.x_ == b.x_ && a.y_ == b.y_;
    }
    friend bool operator!=(const CurvePoint& a, const CurvePoint& b) { return !(a == b); }
    friend bool operator<(const CurvePoint& a, const CurvePoint& b) {
        if (a.infinity_ != b.infinity_) return a.infinity_;  // base point sorts first
        if (a.x_ != b.x_) return a.x_ < b.x_;
        return a.y_ < b.y_;
    }

private:
    explicit CurvePoint(const Field& f) : infinity_(true), x_(f.zero()), y_(f.zero()) {}
    CurvePoint(FieldElement x, FieldElement y) : infinity_(false), x_(std::move(x)), y_(std::move(y)) {}

    bool infinity_;
    FieldElement x_;
    FieldElement y_;
};

// The curve y^2 z = x^3 + a x z^2 + b z^3 with cached discriminant 4a^3 + 27b^2.
class Curve {
public:
    Curve(FieldElement a, FieldElement b);

    const FieldElement& a() const { return a_; }
    const FieldElement& b() const { return b_; }
    const FieldElement& disc() const { return disc_; }
    const Field& field() const { return a_.field(); }

    CurveClass classification() const;
    bool is_smooth() const { return !disc_.is_zero(); }

    friend bool operator==(const Curve& c, const Curve& d) { return c.a_ == d.a_ && c.b_ == d.b_; }
    friend bool operator!=(const Curve& c, const Curve& d) { return !(c == d); }

private:
    FieldElement a_;
    FieldElement b_;
    FieldElement disc_;
};

// Trichotomy: cuspidal iff (a,b) = (0,0); nodal iff D = 0 otherwise; smooth iff D != 0.
CurveClass classify(const FieldElement& a, const FieldElement& b);

const char* curve_class_name(CurveClass c);

// True iff P is the base point or y^2 = x^3 + a x + b.
bool contains(const Curve& c, const CurvePoint& p);

// (x, y) -> (x, -y); the base point is fixed. Inversion for the group law.
CurvePoint involution(const CurvePoint& p);

// Chord-tangent group law with identity at the base point. Requires a smooth
// curve and points on it (CurveNotSmooth / PointNotOnCurve otherwise).
CurvePoint add(const Curve& c, const CurvePoint& p, const CurvePoint& q);

// Vanishing of the 3x3 determinant of homogeneous coordinates, with the base
// point as [0:1:0]. All three points must lie on the curve.
bool collinear(const Curve& c, const CurvePoint& p, const CurvePoint& q, const CurvePoint& r);

// The unit scaling action t.(a, b) = (t^-4 a, t^-6 b); the discriminant picks
// up t^-12. Throws ZeroScalar for t = 0.
Curve scale_curve(const FieldElement& t, const Curve& c);

// t.(x, y) = (t^-2 x, t^-3 y), base point fixed. Carries points of c onto
// points of scale_curve(t, c).
CurvePoint scale_point(const FieldElement& t, const CurvePoint& p);

}  // namespace ellmod
