#include "ellmod/marked.hpp"

namespace ellmod {

MarkedCurve::MarkedCurve(Curve curve, std::vector<CurvePoint> affine_marks) : curve_(std::move(curve)) {
    if (!curve_.is_smooth()) throw CurveNotSmooth("marked curves must be smooth");
    points_.reserve(affine_marks.size() + 1);
    points_.push_back(CurvePoint::at_infinity(curve_.field()));
    for (auto& p : affine_marks) points_.push_back(std::move(p));
    for (size_t i = 1; i < points_.size(); ++i) {
        if (points_[i].field() != curve_.field()) throw FieldMismatch("marked point in a different field");
        if (!contains(curve_, points_[i])) {
            throw PointNotOnCurve("marked point " + points_[i].str() + " is not on the curve",
                                  static_cast<int>(i + 1));
        }
    }
    for (size_t i = 0; i < points_.size(); ++i) {
        for (size_t j = i + 1; j < points_.size(); ++j) {
            if (points_[i] == points_[j]) {
                throw DuplicatePoints("marked points coincide", static_cast<int>(i + 1),
                                      static_cast<int>(j + 1));
            }
        }
    }
}

bool operator<(const MarkedCurve& a, const MarkedCurve& b) {
    if (a.curve_.a() != b.curve_.a()) return a.curve_.a() < b.curve_.a();
    if (a.curve_.b() != b.curve_.b()) return a.curve_.b() < b.curve_.b();
    return a.points_ < b.points_;
}

MarkedCurve make_marked(const FieldElement& a, const FieldElement& b,
                        const std::vector<CurvePoint>& affine_marks) {
    return MarkedCurve(Curve(a, b), affine_marks);
}

namespace {

bool fixes(const FieldElement& t, const MarkedCurve& m) {
    if (scale_curve(t, m.curve()) != m.curve()) return false;
    for (const CurvePoint& p : m.points()) {
        if (scale_point(t, p) != p) return false;
    }
    return true;
}

// Multiplicative order of a stabilizer element; these divide 12.
int unit_order(const FieldElement& t) {
    FieldElement acc = t;
    for (int k = 1; k <= 12; ++k) {
        if (acc.is_one()) return k;
        acc = acc * t;
    }
    return 0;
}

}  // namespace

CyclicAut automorphisms(const MarkedCurve& m) {
    const Field& f = m.field();
    std::vector<FieldElement> stab;
    if (f.is_finite()) {
        for (long long v = 1; v < f.characteristic(); ++v) {
            FieldElement t = f.from_integer(v);
            if (fixes(t, m)) stab.push_back(t);
        }
    } else {
        for (long long v : {1, -1}) {
            FieldElement t = f.from_integer(v);
            if (fixes(t, m)) stab.push_back(t);
        }
    }
    int order = static_cast<int>(stab.size());
    // The stabilizer is a finite subgroup of the unit group, hence cyclic;
    // any element of maximal order generates it.
    FieldElement gen = f.one();
    for (const FieldElement& t : stab) {
        if (unit_order(t) == order) {
            gen = t;
            break;
        }
    }
    return CyclicAut{order, gen};
}

std::vector<CurvePoint> fixed_points(const Curve& c, const FieldElement& t) {
    if (t.is_zero()) throw ZeroScalar("scaling requires a unit");
    if (scale_curve(t, c) != c) throw NotAnAutomorphism("scalar does not fix the curve");
    const Field& f = c.field();
    if (!f.is_finite()) throw InfiniteField("fixed-point enumeration requires a finite field");

    std::vector<CurvePoint> out;
    out.push_back(CurvePoint::at_infinity(f));
    for (const FieldElement& x : f.elements()) {
        FieldElement rhs = x.pow(3) + c.a() * x + c.b();
        for (const FieldElement& y : f.elements()) {
            if (y.pow(2) != rhs) continue;
            CurvePoint p = CurvePoint::affine(x, y);
            if (scale_point(t, p) == p) out.push_back(p);
        }
    }
    return out;
}

namespace {

// Verifies that t maps (curve, points) of m1 onto m2 componentwise.
bool carries(const FieldElement& t, const MarkedCurve& m1, const MarkedCurve& m2) {
    if (scale_curve(t, m1.curve()) != m2.curve()) return false;
    for (int i = 1; i <= m1.n(); ++i) {
        if (scale_point(t, m1.point(i)) != m2.point(i)) return false;
    }
    return true;
}

}  // namespace

std::optional<FieldElement> isomorphism_scalar(const MarkedCurve& m1, const MarkedCurve& m2) {
    if (m1.field() != m2.field()) throw FieldMismatch("marked curves over different fields");
    if (m1.n() != m2.n()) return std::nullopt;
    const Field& f = m1.field();

    if (f.is_finite()) {
        for (long long v = 1; v < f.characteristic(); ++v) {
            FieldElement t = f.from_integer(v);
            if (carries(t, m1, m2)) return t;
        }
        return std::nullopt;
    }

    const FieldElement &a1 = m1.curve().a(), &b1 = m1.curve().b();
    const FieldElement &a2 = m2.curve().a(), &b2 = m2.curve().b();
    if (a1.is_zero() != a2.is_zero() || b1.is_zero() != b2.is_zero()) return std::nullopt;

    // Candidate scalars solve t^4 = a1/a2 and t^6 = b1/b2 (whichever
    // constraints are nonvacuous); with both present they combine to a
    // square root. Both signs are tried, positive first.
    std::optional<mpq_class> root;
    if (!a1.is_zero() && !b1.is_zero()) {
        root = rational_nth_root(((a2 * b1) / (a1 * b2)).rational(), 2);
    } else if (!a1.is_zero()) {
        root = rational_nth_root((a1 / a2).rational(), 4);
    } else {
        root = rational_nth_root((b1 / b2).rational(), 6);
    }
    if (!root) return std::nullopt;
    for (const mpq_class& cand : {*root, mpq_class(-*root)}) {
        if (cand == 0) continue;
        FieldElement t = f.from_rational(cand);
        if (carries(t, m1, m2)) return t;
    }
    return std::nullopt;
}

namespace {

struct PowerConstraint {
    long long exponent;
    FieldElement value;  // a unit
};

// Whether the system t^k_j = c_j admits a solution over the algebraic
// closure. Writing g = gcd(k_j) = sum m_j k_j, any solution satisfies
// t^g = prod c_j^{m_j} =: c, and conversely any g-th root of c works
// provided c^{k_j / g} = c_j for every j.
bool consistent(const std::vector<PowerConstraint>& cs) {
    if (cs.empty()) return true;
    long long g = cs[0].exponent;
    FieldElement c = cs[0].value;
    for (size_t j = 1; j < cs.size(); ++j) {
        // extended gcd: x0*g + y0*k_j = gcd(g, k_j)
        long long r0 = g, r1 = cs[j].exponent;
        long long x0 = 1, y0 = 0, x1 = 0, y1 = 1;
        while (r1 != 0) {
            long long q = r0 / r1;
            long long r2 = r0 - q * r1;
            long long x2 = x0 - q * x1, y2 = y0 - q * y1;
            r0 = r1; r1 = r2;
            x0 = x1; x1 = x2;
            y0 = y1; y1 = y2;
        }
        c = c.pow(x0) * cs[j].value.pow(y0);
        g = r0;
    }
    for (const PowerConstraint& pc : cs) {
        if (c.pow(pc.exponent / g) != pc.value) return false;
    }
    return true;
}

}  // namespace

bool twist_equivalent(const MarkedCurve& m1, const MarkedCurve& m2) {
    if (m1.field() != m2.field()) throw FieldMismatch("marked curves over different fields");
    if (m1.n() != m2.n()) return false;

    // Constraints on s = t^-1 where t is the connecting scalar: s^4 = a2/a1,
    // s^6 = b2/b1, and per point s^2 = x2/x1, s^3 = y2/y1. A vanishing
    // coordinate must vanish on both sides.
    std::vector<PowerConstraint> cs;
    auto push = [&](long long k, const FieldElement& from, const FieldElement& to) -> bool {
        if (from.is_zero() != to.is_zero()) return false;
        if (!from.is_zero()) cs.push_back(PowerConstraint{k, to / from});
        return true;
    };
    if (!push(4, m1.curve().a(), m2.curve().a())) return false;
    if (!push(6, m1.curve().b(), m2.curve().b())) return false;
    for (int i = 2; i <= m1.n(); ++i) {
        const CurvePoint &p = m1.point(i), &q = m2.point(i);
        if (!push(2, p.x(), q.x())) return false;
        if (!push(3, p.y(), q.y())) return false;
    }
    return consistent(cs);
}

namespace {

void require_marks(const MarkedCurve& m, int n) {
    if (m.n() < n) {
        throw TooFewPoints("operation needs at least " + std::to_string(n) + " marked points");
    }
}

}  // namespace

bool avoids_inverse_divisor(const MarkedCurve& m) {
    require_marks(m, 2);
    if (m.n() == 2) return true;
    return m.point(2) != involution(m.point(3));
}

bool can_mark_inverse(const MarkedCurve& m) {
    require_marks(m, 2);
    for (int i = 1; i <= m.n(); ++i) {
        if (m.point(2) == involution(m.point(i))) return false;
    }
    return true;
}

bool avoids_chord_divisor(const MarkedCurve& m) {
    require_marks(m, 4);
    return add(m.curve(), m.point(2), m.point(3)) != involution(m.point(4));
}

bool can_mark_chord_point(const MarkedCurve& m) {
    require_marks(m, 3);
    CurvePoint s = add(m.curve(), m.point(2), m.point(3));
    for (int i = 1; i <= m.n(); ++i) {
        if (s == involution(m.point(i))) return false;
    }
    return true;
}

MarkedCurve mark_inverse(const MarkedCurve& m) {
    if (!can_mark_inverse(m)) {
        throw MarkCollision("the inverse of p2 collides with an existing marked point");
    }
    std::vector<CurvePoint> affine(m.points().begin() + 1, m.points().end());
    affine.insert(affine.begin() + 1, involution(m.point(2)));
    return MarkedCurve(m.curve(), std::move(affine));
}

MarkedCurve mark_chord_point(const MarkedCurve& m) {
    if (!can_mark_chord_point(m)) {
        throw MarkCollision("the chord point of p2, p3 collides with an existing marked point");
    }
    std::vector<CurvePoint> affine(m.points().begin() + 1, m.points().end());
    affine.insert(affine.begin() + 2, involution(add(m.curve(), m.point(2), m.point(3))));
    return MarkedCurve(m.curve(), std::move(affine));
}

MarkedCurve forget_mark(const MarkedCurve& m, int i) {
    if (i == 1) throw CannotForgetBasePoint("the base point cannot be forgotten");
    if (i < 1 || i > m.n()) throw IndexOutOfRange("no marked point at index " + std::to_string(i));
    std::vector<CurvePoint> affine(m.points().begin() + 1, m.points().end());
    affine.erase(affine.begin() + (i - 2));
    return MarkedCurve(m.curve(), std::move(affine));
}

}  // namespace ellmod
