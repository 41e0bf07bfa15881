#pragma once

#include <gmpxx.h>

#include <map>
#include <set>
#include <vector>

#include "ellmod/marked.hpp"

namespace ellmod {

// All smooth curves (a, b) over F_p in ascending (a, b) order; there are
// exactly p^2 - p of them.
std::vector<Curve> smooth_curves(const Field& f);

// One curve per unit-scaling orbit, represented by the least (a, b).
std::vector<Curve> orbit_representatives(const Field& f);

// The weighted count sum(1/|Aut|) over scaling orbits of smooth curves;
// equals p by orbit-stabilizer.
mpq_class mass(const Field& f);

// How automorphism_census enumerates. Full walks every tuple of marked
// points. Restricted enumerates only tuples drawn from fixed loci of
// nontrivial stabilizer elements — every tuple with a nontrivial
// automorphism lives there, so the nontrivial strata are exact and the
// trivial stratum is the combinatorial complement. Auto picks Full for
// p <= 7 or n <= 3 and Restricted beyond.
enum class CensusStrategy { Auto, Full, Restricted };

struct CensusReport {
    long long p = 0;
    int n = 0;
    bool exhaustive = true;            // Full enumeration was used
    unsigned long long total_tuples = 0;
    unsigned long long iso_classes = 0;
    std::map<int, unsigned long long> strata;  // automorphism order -> tuple count
    std::map<int, MarkedCurve> witnesses;      // one example per realized order

    friend bool operator==(const CensusReport& a, const CensusReport& b) {
        return a.p == b.p && a.n == b.n && a.total_tuples == b.total_tuples &&
               a.iso_classes == b.iso_classes && a.strata == b.strata && a.witnesses == b.witnesses;
    }
};

// Buckets all n-pointed curves over F_p by automorphism order. 1 <= n <= 5
// (UnsupportedN beyond; nontrivial automorphisms provably vanish there).
// threads = 0 reads ELLMOD_THREADS, clamped to the machine; the merge is
// deterministic regardless of the thread count.
CensusReport automorphism_census(const Field& f, int n, CensusStrategy strategy = CensusStrategy::Auto,
                                 int threads = 0);

// Every n-pointed curve with a nontrivial automorphism group, keyed by
// order, in enumeration order. Exhaustive: any such tuple consists of fixed
// points of some nontrivial stabilizer element, of which there are at most
// a handful per curve.
std::map<int, std::vector<MarkedCurve>> nontrivial_strata(const Field& f, int n);

// Outcome of checking the automorphism classification of marked curves over
// F_p against enumeration. Expected order lists are filtered by availability
// of the matching roots of unity (order m occurs only when m | p - 1); for
// p = 1 mod 12 the filter is vacuous and the classification must hold
// verbatim.
struct ClassificationVerdict {
    struct PerN {
        std::set<int> expected;
        std::set<int> realized;
        bool pass = false;
    };

    long long p = 0;
    std::map<int, PerN> per_n;  // n = 1..5, nontrivial orders only
    // Every 4-pointed curve with order-2 automorphisms has y2 = y3 = y4 = 0
    // and p2, p3, p4 collinear.
    bool collinearity_pass = false;
    int max_n_with_nontrivial = 0;
    bool max_n_pass = false;
    // The order-4 two-pointed stratum: all members are (C_(a,0), base, (0,0)),
    // one class up to twist; the count of F_p-rational classes is also kept
    // (quartic twists split the geometric class rationally).
    unsigned long long mu4_rational_classes = 0;
    unsigned long long mu4_twist_classes = 0;
    bool mu4_pass = false;
    bool order6_pass = false;  // no order-6 stratum for any n >= 2
    bool all_pass = false;
};

ClassificationVerdict verify_classification(const Field& f);

}  // namespace ellmod
