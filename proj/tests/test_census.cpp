#include "ellmod/census.hpp"

#include <set>

#include "doctest.h"

using namespace ellmod;

namespace {

std::set<int> strata_keys(const CensusReport& r) {
    std::set<int> out;
    for (const auto& [order, count] : r.strata) out.insert(order);
    return out;
}

}  // namespace

TEST_CASE("smooth curve counts") {
    for (long long p : {5, 7, 13}) {
        Field f = Field::prime(p);
        CHECK(smooth_curves(f).size() == static_cast<size_t>(p * p - p));
    }
    CHECK_THROWS_AS(smooth_curves(Field::rationals()), InfiniteField);
}

TEST_CASE("orbit representatives partition the smooth locus") {
    Field f5 = Field::prime(5);
    auto reps = orbit_representatives(f5);

    unsigned long long recount = 0;
    std::set<std::pair<long long, long long>> covered;
    for (const Curve& rep : reps) {
        int aut = automorphisms(MarkedCurve(rep, {})).order;
        recount += static_cast<unsigned long long>(4 / aut);

        std::set<std::pair<long long, long long>> orbit;
        for (long long t = 1; t < 5; ++t) {
            Curve image = scale_curve(f5.from_integer(t), rep);
            orbit.insert({image.a().residue(), image.b().residue()});
        }
        for (const auto& member : orbit) {
            CHECK(covered.insert(member).second);  // orbits are disjoint
        }
        CHECK(orbit.size() * static_cast<size_t>(aut) == 4);
    }
    CHECK(recount == 20);
    CHECK(covered.size() == 20);  // and they cover everything

    Field f7 = Field::prime(7);
    auto reps7 = orbit_representatives(f7);
    for (size_t i = 0; i < reps7.size(); ++i) {
        for (size_t j = i + 1; j < reps7.size(); ++j) {
            CHECK(!isomorphism_scalar(MarkedCurve(reps7[i], {}), MarkedCurve(reps7[j], {})).has_value());
        }
    }
}

TEST_CASE("mass formula") {
    for (long p : {5, 7, 13}) {
        CHECK(mass(Field::prime(p)) == p);
    }
}

TEST_CASE("census strata across fields and markings") {
    Field f13 = Field::prime(13);
    CensusReport two = automorphism_census(f13, 2);
    std::set<int> keys = strata_keys(two);
    CHECK(keys.count(2) == 1);
    CHECK(keys.count(3) == 1);
    CHECK(keys.count(4) == 1);
    CHECK(keys.count(6) == 0);

    CensusReport five = automorphism_census(f13, 5);
    CHECK(strata_keys(five) == std::set<int>{1});
    CHECK(five.strata.at(1) == five.total_tuples);

    Field f5 = Field::prime(5);
    CensusReport f5two = automorphism_census(f5, 2);
    for (int order : strata_keys(f5two)) CHECK((order == 1 || order == 2 || order == 4));

    CHECK_THROWS_AS(automorphism_census(f5, 6), UnsupportedN);
    CHECK_THROWS_AS(automorphism_census(f5, 0), UnsupportedN);
    CHECK_THROWS_AS(automorphism_census(Field::rationals(), 2), InfiniteField);
}

TEST_CASE("census witnesses reproduce their bucket order") {
    Field f13 = Field::prime(13);
    for (int n = 1; n <= 4; ++n) {
        CensusReport report = automorphism_census(f13, n);
        unsigned long long sum = 0;
        for (const auto& [order, count] : report.strata) {
            sum += count;
            REQUIRE(report.witnesses.count(order) == 1);
            CHECK(automorphisms(report.witnesses.at(order)).order == order);
        }
        CHECK(sum == report.total_tuples);
    }
}

TEST_CASE("census n = 1 matches the stabilizer arithmetic over F_13") {
    Field f = Field::prime(13);
    CensusReport r = automorphism_census(f, 1);
    CHECK(r.total_tuples == 156);
    CHECK(r.strata.at(2) == 132);
    CHECK(r.strata.at(4) == 12);   // the curves (a, 0)
    CHECK(r.strata.at(6) == 12);   // the curves (0, b)
    CHECK(r.iso_classes == 32);    // 22 + 4 + 6 scaling orbits
}

TEST_CASE("full and restricted strategies agree") {
    for (auto [p, n] : {std::pair<long long, int>{7, 4}, {7, 5}, {11, 4}}) {
        Field f = Field::prime(p);
        CensusReport full = automorphism_census(f, n, CensusStrategy::Full);
        CensusReport restricted = automorphism_census(f, n, CensusStrategy::Restricted);
        CHECK(full.total_tuples == restricted.total_tuples);
        CHECK(full.strata == restricted.strata);
        CHECK(full.iso_classes == restricted.iso_classes);
        // witnesses are picked in the same enumeration order
        for (const auto& [order, witness] : full.witnesses) {
            REQUIRE(restricted.witnesses.count(order) == 1);
            CHECK(automorphisms(restricted.witnesses.at(order)).order == order);
        }
    }
}

TEST_CASE("census is deterministic across thread counts") {
    Field f = Field::prime(11);
    CensusReport one = automorphism_census(f, 3, CensusStrategy::Auto, 1);
    CensusReport three = automorphism_census(f, 3, CensusStrategy::Auto, 3);
    CHECK(one == three);
}

TEST_CASE("nontrivial strata members are exactly the tuples with extra automorphisms") {
    Field f = Field::prime(7);
    auto strata = nontrivial_strata(f, 3);
    for (const auto& [order, members] : strata) {
        CHECK(order > 1);
        for (const MarkedCurve& m : members) CHECK(automorphisms(m).order == order);
    }
    // cross-check counts against the full census
    CensusReport full = automorphism_census(f, 3, CensusStrategy::Full);
    for (const auto& [order, count] : full.strata) {
        if (order == 1) continue;
        REQUIRE(strata.count(order) == 1);
        CHECK(strata.at(order).size() == count);
    }
}

TEST_CASE("classification verdicts") {
    for (long long p : {5, 7, 13}) {
        ClassificationVerdict v = verify_classification(Field::prime(p));
        CHECK(v.all_pass);
        CHECK(v.collinearity_pass);
        CHECK(v.order6_pass);
        CHECK(v.max_n_with_nontrivial == 4);
        for (const auto& [n, per] : v.per_n) CHECK(per.pass);
    }

    ClassificationVerdict v13 = verify_classification(Field::prime(13));
    CHECK(v13.per_n.at(1).realized == std::set<int>{2, 4, 6});
    CHECK(v13.per_n.at(2).realized == std::set<int>{2, 3, 4});
    CHECK(v13.per_n.at(3).realized == std::set<int>{2, 3});
    CHECK(v13.per_n.at(4).realized == std::set<int>{2});
    CHECK(v13.per_n.at(5).realized.empty());
    CHECK(v13.mu4_twist_classes == 1);
    CHECK(v13.mu4_rational_classes == 4);  // quartic twists split the class rationally

    ClassificationVerdict v5 = verify_classification(Field::prime(5));
    CHECK(v5.per_n.at(1).expected == std::set<int>{2, 4});
    CHECK(v5.per_n.at(2).expected == std::set<int>{2, 4});
    CHECK(v5.per_n.at(3).expected == std::set<int>{2});

    ClassificationVerdict v7 = verify_classification(Field::prime(7));
    CHECK(v7.per_n.at(1).expected == std::set<int>{2, 6});
    CHECK(v7.per_n.at(2).expected == std::set<int>{2, 3});
    CHECK(v7.mu4_twist_classes == 0);

    CHECK_THROWS_AS(verify_classification(Field::rationals()), InfiniteField);
}
