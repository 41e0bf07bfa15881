#include "ellmod/curve.hpp"

namespace ellmod {

std::string CurvePoint::str() const {
    if (infinity_) return "[0:1:0]";
    return "[" + x_.str() + ":" + y_.str() + ":1]";
}

Curve::Curve(FieldElement a, FieldElement b) : a_(std::move(a)), b_(std::move(b)), disc_(a_.field().zero()) {
    if (a_.field() != b_.field()) throw FieldMismatch("curve coefficients in different fields");
    const Field& f = a_.field();
    disc_ = f.from_integer(4) * a_.pow(3) + f.from_integer(27) * b_.pow(2);
}

CurveClass Curve::classification() const {
    if (a_.is_zero() && b_.is_zero()) return CurveClass::Cuspidal;
    if (disc_.is_zero()) return CurveClass::Nodal;
    return CurveClass::Smooth;
}

CurveClass classify(const FieldElement& a, const FieldElement& b) {
    return Curve(a, b).classification();
}

const char* curve_class_name(CurveClass c) {
    switch (c) {
        case CurveClass::Smooth: return "smooth";
        case CurveClass::Nodal: return "nodal";
        case CurveClass::Cuspidal: return "cuspidal";
    }
    return "?";
}

bool contains(const Curve& c, const CurvePoint& p) {
    if (p.field() != c.field()) throw FieldMismatch("point and curve in different fields");
    if (p.is_infinity()) return true;
    return p.y().pow(2) == p.x().pow(3) + c.a() * p.x() + c.b();
}

CurvePoint involution(const CurvePoint& p) {
    if (p.is_infinity()) return p;
    return CurvePoint::affine(p.x(), -p.y());
}

CurvePoint add(const Curve& c, const CurvePoint& p, const CurvePoint& q) {
    if (!c.is_smooth()) throw CurveNotSmooth("group law requires a smooth curve");
    if (!contains(c, p) || !contains(c, q)) throw PointNotOnCurve("summand not on curve");
    if (p.is_infinity()) return q;
    if (q.is_infinity()) return p;
    if (q == involution(p)) return CurvePoint::at_infinity(c.field());

    const Field& f = c.field();
    FieldElement slope = f.zero();
    if (p == q) {
        slope = (f.from_integer(3) * p.x().pow(2) + c.a()) / (f.from_integer(2) * p.y());
    } else {
        slope = (q.y() - p.y()) / (q.x() - p.x());
    }
    FieldElement xr = slope.pow(2) - p.x() - q.x();
    FieldElement yr = slope * (p.x() - xr) - p.y();
    return CurvePoint::affine(xr, yr);
}

bool collinear(const Curve& c, const CurvePoint& p, const CurvePoint& q, const CurvePoint& r) {
    for (const CurvePoint* pt : {&p, &q, &r}) {
        if (!contains(c, *pt)) throw PointNotOnCurve("collinearity test requires points on the curve");
    }
    const Field& f = c.field();
    // Homogeneous coordinate rows (x, y, z) with the base point as (0, 1, 0).
    auto row = [&](const CurvePoint& pt) {
        struct Row { FieldElement x, y, z; };
        if (pt.is_infinity()) return Row{f.zero(), f.one(), f.zero()};
        return Row{pt.x(), pt.y(), f.one()};
    };
    auto a = row(p), b = row(q), d = row(r);
    FieldElement det = a.x * (b.y * d.z - b.z * d.y) - a.y * (b.x * d.z - b.z * d.x) +
                       a.z * (b.x * d.y - b.y * d.x);
    return det.is_zero();
}

Curve scale_curve(const FieldElement& t, const Curve& c) {
    if (t.is_zero()) throw ZeroScalar("scaling requires a unit");
    return Curve(t.pow(-4) * c.a(), t.pow(-6) * c.b());
}

CurvePoint scale_point(const FieldElement& t, const CurvePoint& p) {
    if (t.is_zero()) throw ZeroScalar("scaling requires a unit");
    if (p.is_infinity()) return p;
    return CurvePoint::affine(t.pow(-2) * p.x(), t.pow(-3) * p.y());
}

}  // namespace ellmod
