#include "ellmod/census.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

namespace ellmod {

namespace {

void require_finite(const Field& f) {
    if (!f.is_finite()) throw InfiniteField("census operations need a finite field");
}

// Square roots in F_p, indexed by residue: sqrt_table[v] = all y with y^2 = v.
std::vector<std::vector<long long>> square_root_table(const Field& f) {
    long long p = f.characteristic();
    std::vector<std::vector<long long>> table(static_cast<size_t>(p));
    for (long long y = 0; y < p; ++y) {
        table[static_cast<size_t>(f.from_integer(y).pow(2).residue())].push_back(y);
    }
    return table;
}

std::vector<CurvePoint> affine_points(const Curve& c, const std::vector<std::vector<long long>>& sqrts) {
    const Field& f = c.field();
    std::vector<CurvePoint> out;
    for (long long xv = 0; xv < f.characteristic(); ++xv) {
        FieldElement x = f.from_integer(xv);
        FieldElement rhs = x.pow(3) + c.a() * x + c.b();
        for (long long yv : sqrts[static_cast<size_t>(rhs.residue())]) {
            out.push_back(CurvePoint::affine(x, f.from_integer(yv)));
        }
    }
    return out;
}

// Nontrivial stabilizer elements of (a, b) under the scaling action.
std::vector<FieldElement> nontrivial_stabilizer(const Curve& c) {
    std::vector<FieldElement> out;
    const Field& f = c.field();
    for (long long v = 2; v < f.characteristic(); ++v) {
        FieldElement t = f.from_integer(v);
        if (scale_curve(t, c) == c) out.push_back(t);
    }
    return out;
}

template <typename Visit>
bool tuple_walk(const std::vector<CurvePoint>& pool, int k, std::vector<CurvePoint>& tuple,
                std::vector<bool>& used, Visit& visit) {
    if (k == 0) return visit(tuple);
    for (size_t i = 0; i < pool.size(); ++i) {
        if (used[i]) continue;
        used[i] = true;
        tuple.push_back(pool[i]);
        bool keep_going = tuple_walk(pool, k - 1, tuple, used, visit);
        tuple.pop_back();
        used[i] = false;
        if (!keep_going) return false;
    }
    return true;
}

// Ordered k-tuples of distinct members of `pool`, visited lexicographically
// by index; `visit` may return false to stop early. Returns false on early stop.
template <typename Visit>
bool for_each_tuple(const std::vector<CurvePoint>& pool, int k, Visit&& visit) {
    std::vector<CurvePoint> tuple;
    tuple.reserve(static_cast<size_t>(k));
    std::vector<bool> used(pool.size(), false);
    return tuple_walk(pool, k, tuple, used, visit);
}

}  // namespace

std::vector<Curve> smooth_curves(const Field& f) {
    require_finite(f);
    std::vector<Curve> out;
    for (const FieldElement& a : f.elements()) {
        for (const FieldElement& b : f.elements()) {
            Curve c(a, b);
            if (c.is_smooth()) out.push_back(c);
        }
    }
    return out;
}

std::vector<Curve> orbit_representatives(const Field& f) {
    require_finite(f);
    std::set<std::pair<long long, long long>> seen;
    std::vector<Curve> reps;
    for (const Curve& c : smooth_curves(f)) {
        if (seen.count({c.a().residue(), c.b().residue()})) continue;
        reps.push_back(c);
        for (long long v = 1; v < f.characteristic(); ++v) {
            Curve image = scale_curve(f.from_integer(v), c);
            seen.insert({image.a().residue(), image.b().residue()});
        }
    }
    return reps;
}

mpq_class mass(const Field& f) {
    mpq_class total = 0;
    for (const Curve& c : orbit_representatives(f)) {
        CyclicAut aut = automorphisms(MarkedCurve(c, {}));
        total += mpq_class(1, aut.order);
    }
    return total;
}

namespace {

struct PartialCensus {
    std::map<int, unsigned long long> strata;
    std::map<int, MarkedCurve> witnesses;
    unsigned long long total_tuples = 0;

    void record(int order, const MarkedCurve& m) {
        ++strata[order];
        witnesses.try_emplace(order, m);
    }
};

void merge_into(PartialCensus& acc, const PartialCensus& part) {
    acc.total_tuples += part.total_tuples;
    for (const auto& [order, count] : part.strata) acc.strata[order] += count;
    for (const auto& [order, witness] : part.witnesses) acc.witnesses.try_emplace(order, witness);
}

unsigned long long falling_factorial(unsigned long long base, int k) {
    unsigned long long out = 1;
    for (int i = 0; i < k; ++i) out *= base >= static_cast<unsigned long long>(i) ? base - i : 0;
    return out;
}

// Tuples with a nontrivial automorphism all lie in the union of fixed loci
// of the nontrivial stabilizer elements; enumerating that union is exact for
// every stratum except the trivial one.
std::vector<CurvePoint> fixed_locus_union(const Curve& c, const std::vector<FieldElement>& stab) {
    std::set<CurvePoint> pts;
    for (const FieldElement& t : stab) {
        for (const CurvePoint& p : fixed_points(c, t)) {
            if (!p.is_infinity()) pts.insert(p);
        }
    }
    return std::vector<CurvePoint>(pts.begin(), pts.end());
}

PartialCensus census_full_chunk(const std::vector<Curve>& curves, size_t begin, size_t end, int n,
                                const std::vector<std::vector<long long>>& sqrts) {
    PartialCensus part;
    for (size_t ci = begin; ci < end; ++ci) {
        const Curve& c = curves[ci];
        std::vector<CurvePoint> pool = affine_points(c, sqrts);
        for_each_tuple(pool, n - 1, [&](const std::vector<CurvePoint>& tuple) {
            MarkedCurve m(c, tuple);
            part.record(automorphisms(m).order, m);
            ++part.total_tuples;
            return true;
        });
    }
    return part;
}

PartialCensus census_restricted_chunk(const std::vector<Curve>& curves, size_t begin, size_t end, int n,
                                      const std::vector<std::vector<long long>>& sqrts) {
    PartialCensus part;
    for (size_t ci = begin; ci < end; ++ci) {
        const Curve& c = curves[ci];
        part.total_tuples += falling_factorial(affine_points(c, sqrts).size(), n - 1);
        std::vector<FieldElement> stab = nontrivial_stabilizer(c);
        if (stab.empty()) continue;
        std::vector<CurvePoint> pool = fixed_locus_union(c, stab);
        for_each_tuple(pool, n - 1, [&](const std::vector<CurvePoint>& tuple) {
            MarkedCurve m(c, tuple);
            int order = automorphisms(m).order;
            if (order > 1) part.record(order, m);
            return true;
        });
    }
    return part;
}

int resolve_threads(int threads, size_t work_items) {
    if (threads <= 0) {
        if (const char* env = std::getenv("ELLMOD_THREADS")) threads = std::atoi(env);
    }
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    threads = std::clamp(threads, 1, 32);
    if (work_items < 64) threads = 1;
    return static_cast<int>(std::min<size_t>(static_cast<size_t>(threads), std::max<size_t>(work_items, 1)));
}

}  // namespace

CensusReport automorphism_census(const Field& f, int n, CensusStrategy strategy, int threads) {
    require_finite(f);
    if (n < 1 || n > 5) throw UnsupportedN("marking counts are limited to 1..5");
    bool full = strategy == CensusStrategy::Full ||
                (strategy == CensusStrategy::Auto && (f.characteristic() <= 7 || n <= 3));

    std::vector<Curve> curves = smooth_curves(f);
    std::vector<std::vector<long long>> sqrts = square_root_table(f);

    int nthreads = resolve_threads(threads, curves.size());
    std::vector<PartialCensus> parts(static_cast<size_t>(nthreads));
    auto run_chunk = [&](int w) {
        size_t begin = curves.size() * static_cast<size_t>(w) / static_cast<size_t>(nthreads);
        size_t end = curves.size() * static_cast<size_t>(w + 1) / static_cast<size_t>(nthreads);
        parts[static_cast<size_t>(w)] = full ? census_full_chunk(curves, begin, end, n, sqrts)
                                             : census_restricted_chunk(curves, begin, end, n, sqrts);
    };
    if (nthreads == 1) {
        run_chunk(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(nthreads));
        for (int w = 0; w < nthreads; ++w) pool.emplace_back(run_chunk, w);
        for (std::thread& t : pool) t.join();
    }
    PartialCensus acc;
    for (const PartialCensus& part : parts) merge_into(acc, part);

    CensusReport report;
    report.p = f.characteristic();
    report.n = n;
    report.exhaustive = full;
    report.total_tuples = acc.total_tuples;
    report.strata = std::move(acc.strata);
    report.witnesses = std::move(acc.witnesses);

    if (!full) {
        unsigned long long nontrivial = 0;
        for (const auto& [order, count] : report.strata) nontrivial += count;
        unsigned long long trivial = report.total_tuples - nontrivial;
        if (trivial > 0) {
            report.strata[1] = trivial;
            // Scan for one witness of the trivial stratum.
            for (const Curve& c : curves) {
                std::vector<CurvePoint> pool = affine_points(c, sqrts);
                bool found = !for_each_tuple(pool, n - 1, [&](const std::vector<CurvePoint>& tuple) {
                    MarkedCurve m(c, tuple);
                    if (automorphisms(m).order != 1) return true;
                    report.witnesses.try_emplace(1, m);
                    return false;
                });
                if (found) break;
            }
        }
    }

    unsigned long long classes = 0;
    for (const auto& [order, count] : report.strata) {
        classes += count * static_cast<unsigned long long>(order) /
                   static_cast<unsigned long long>(f.characteristic() - 1);
    }
    report.iso_classes = classes;
    return report;
}

std::map<int, std::vector<MarkedCurve>> nontrivial_strata(const Field& f, int n) {
    require_finite(f);
    if (n < 1 || n > 5) throw UnsupportedN("marking counts are limited to 1..5");
    std::vector<std::vector<long long>> sqrts = square_root_table(f);
    std::map<int, std::vector<MarkedCurve>> out;
    for (const Curve& c : smooth_curves(f)) {
        std::vector<FieldElement> stab = nontrivial_stabilizer(c);
        if (stab.empty()) continue;
        std::vector<CurvePoint> pool =
            n == 1 ? std::vector<CurvePoint>{} : fixed_locus_union(c, stab);
        for_each_tuple(pool, n - 1, [&](const std::vector<CurvePoint>& tuple) {
            MarkedCurve m(c, tuple);
            int order = automorphisms(m).order;
            if (order > 1) out[order].push_back(m);
            return true;
        });
    }
    return out;
}

namespace {

const std::map<int, std::set<int>>& classification_orders() {
    static const std::map<int, std::set<int>> table = {
        {1, {2, 4, 6}}, {2, {2, 3, 4}}, {3, {2, 3}}, {4, {2}}, {5, {}},
    };
    return table;
}

// Greedy class count under an equivalence predicate; the lists involved are
// tiny (at most p - 1 members).
template <typename Equiv>
unsigned long long class_count(const std::vector<MarkedCurve>& members, Equiv&& equivalent) {
    std::vector<const MarkedCurve*> reps;
    for (const MarkedCurve& m : members) {
        bool fresh = true;
        for (const MarkedCurve* r : reps) {
            if (equivalent(*r, m)) {
                fresh = false;
                break;
            }
        }
        if (fresh) reps.push_back(&m);
    }
    return reps.size();
}

}  // namespace

ClassificationVerdict verify_classification(const Field& f) {
    require_finite(f);
    long long p = f.characteristic();

    ClassificationVerdict v;
    v.p = p;
    v.all_pass = true;

    std::map<int, std::map<int, std::vector<MarkedCurve>>> strata;
    for (int n = 1; n <= 5; ++n) strata[n] = nontrivial_strata(f, n);

    for (int n = 1; n <= 5; ++n) {
        ClassificationVerdict::PerN per;
        for (int order : classification_orders().at(n)) {
            if ((p - 1) % order == 0) per.expected.insert(order);
        }
        for (const auto& [order, members] : strata[n]) per.realized.insert(order);
        per.pass = per.expected == per.realized;
        v.all_pass = v.all_pass && per.pass;
        v.per_n[n] = std::move(per);
    }

    v.collinearity_pass = true;
    if (auto it = strata[4].find(2); it != strata[4].end()) {
        for (const MarkedCurve& m : it->second) {
            bool flat = m.point(2).y().is_zero() && m.point(3).y().is_zero() && m.point(4).y().is_zero();
            bool line = collinear(m.curve(), m.point(2), m.point(3), m.point(4));
            if (!flat || !line) v.collinearity_pass = false;
        }
    }
    v.all_pass = v.all_pass && v.collinearity_pass;

    v.max_n_with_nontrivial = 0;
    for (int n = 1; n <= 5; ++n) {
        if (!strata[n].empty()) v.max_n_with_nontrivial = n;
    }
    v.max_n_pass = p % 12 == 1 ? v.max_n_with_nontrivial == 4 : v.max_n_with_nontrivial <= 4;
    v.all_pass = v.all_pass && v.max_n_pass;

    // The two-pointed order-4 stratum: every member must be the marked curve
    // (C_(a,0), base, (0,0)), and all members are quartic twists of one
    // geometric class.
    std::vector<MarkedCurve> mu4;
    if (auto it = strata[2].find(4); it != strata[2].end()) mu4 = it->second;
    bool normalized = true;
    for (const MarkedCurve& m : mu4) {
        if (!m.curve().b().is_zero() || !m.point(2).x().is_zero() || !m.point(2).y().is_zero()) {
            normalized = false;
        }
    }
    v.mu4_rational_classes = class_count(mu4, [](const MarkedCurve& a, const MarkedCurve& b) {
        return isomorphism_scalar(a, b).has_value();
    });
    v.mu4_twist_classes = class_count(mu4, twist_equivalent);
    if ((p - 1) % 4 == 0) {
        v.mu4_pass = normalized && !mu4.empty() && v.mu4_twist_classes == 1;
    } else {
        v.mu4_pass = mu4.empty();
    }
    v.all_pass = v.all_pass && v.mu4_pass;

    v.order6_pass = true;
    for (int n = 2; n <= 5; ++n) {
        if (strata[n].count(6)) v.order6_pass = false;
    }
    v.all_pass = v.all_pass && v.order6_pass;

    return v;
}

}  // namespace ellmod
