#include <doctest.h>

#include <numeric>
#include <random>

#include "shtukacrit/criteria.hpp"

using namespace shtk;

namespace {

// d=2, bounds ((1,0),(0,-1)), nram places of invariant 1/2, legs unassigned.
Scenario two_tower(int nram) {
    Scenario s;
    s.algebra.d = 2;
    for (int k = 1; k <= nram; ++k) {
        std::string id = "x" + std::to_string(k);
        s.algebra.places[id] = {id, 1};
        s.algebra.invariants[id] = QModZ{Rational(1, 2)};
    }
    s.bounds = BoundTuple({Coweight({1, 0}), Coweight({0, -1})});
    s.idele_degree = 1;
    return s;
}

Scenario random_scenario(std::mt19937& rng, long long max_d) {
    std::uniform_int_distribution<long long> d_pick(2, max_d);
    while (true) {
        Scenario s;
        const long long d = d_pick(rng);
        s.algebra.d = d;
        std::uniform_int_distribution<int> nram_pick(2, 6);
        int nram = nram_pick(rng);
        Rational sum;
        long long lcm_orders = 1;
        for (int k = 1; k <= nram; ++k) {
            std::string id = "x" + std::to_string(k);
            std::uniform_int_distribution<long long> num(1, d - 1);
            Rational inv = k == nram ? bracket_q(-sum) : Rational(num(rng), d);
            s.algebra.places[id] = {id, 1};
            if (!inv.is_zero()) {
                s.algebra.invariants[id] = QModZ{inv};
                lcm_orders = std::lcm(lcm_orders, inv.den());
            }
            sum += inv;
        }
        if (lcm_orders != d)
            continue;
        std::uniform_int_distribution<std::size_t> nlegs_pick(1, 3);
        std::uniform_int_distribution<long long> entry(-2, 2);
        std::vector<Coweight> legs;
        for (std::size_t i = 0, n = nlegs_pick(rng); i < n; ++i) {
            std::vector<long long> entries(static_cast<std::size_t>(d));
            for (auto& e : entries)
                e = entry(rng);
            std::sort(entries.begin(), entries.end(), std::greater<>());
            legs.emplace_back(std::move(entries));
        }
        s.bounds = BoundTuple(std::move(legs));
        return s;
    }
}

} // namespace

TEST_CASE("nonempty") {
    Scenario s = two_tower(2);
    CHECK(check_nonempty(s).holds);
    s.bounds = BoundTuple({Coweight({1, 0})});
    CHECK(!check_nonempty(s).holds);
    s.bounds = BoundTuple({Coweight({0, 0})});
    CHECK(check_nonempty(s).holds);
}

TEST_CASE("component count") {
    Scenario s = two_tower(2);
    CHECK(component_count(s) == 2);
    s.idele_degree = 3;
    CHECK(component_count(s) == 6);
    s.idele_degree.reset();
    CHECK_THROWS_AS(component_count(s), invalid_input);
}

TEST_CASE("lau thresholds") {
    CHECK(check_lau(two_tower(4)).holds);
    CHECK(check_lau(two_tower(6)).holds);
    Verdict fail2 = check_lau(two_tower(2));
    CHECK(!fail2.holds);
    REQUIRE(fail2.witnesses.size() == 1);
    CHECK(fail2.witnesses[0].m == 1);
    CHECK(fail2.witnesses[0].lhs == Rational(1));
    CHECK(fail2.witnesses[0].rhs == Rational(1));

    // d = 3 with three invariants 1/3 and bounds ((1,0,0),(0,0,-1))
    Scenario s;
    s.algebra.d = 3;
    for (int k = 1; k <= 3; ++k) {
        std::string id = "x" + std::to_string(k);
        s.algebra.places[id] = {id, 1};
        s.algebra.invariants[id] = QModZ{Rational(1, 3)};
    }
    s.bounds = BoundTuple({Coweight({1, 0, 0}), Coweight({0, 0, -1})});
    Verdict v = check_lau(s);
    CHECK(!v.holds);
    CHECK(v.witnesses.front().m == 1);
    CHECK(v.witnesses.front().lhs == Rational(1));
    CHECK(v.witnesses.front().rhs == Rational(1));
}

TEST_CASE("main criterion thresholds") {
    CHECK(check_main(two_tower(6), MainVariant::theorem).holds);
    Verdict fail4 = check_main(two_tower(4), MainVariant::theorem);
    CHECK(!fail4.holds);
    REQUIRE(!fail4.witnesses.empty());
    CHECK(fail4.witnesses[0].m == 1);
    CHECK(fail4.witnesses[0].subset.size() == 2);
    CHECK(fail4.witnesses[0].lhs == Rational(1));
    CHECK(fail4.witnesses[0].rhs == Rational(1));
    CHECK(!check_main(two_tower(2), MainVariant::theorem).applicable);

    // central bounds leave the theorem variant with |Y| = |Ram|
    Scenario central = two_tower(2);
    central.bounds = BoundTuple({Coweight({1, 1}), Coweight({-1, -1})});
    Verdict v = check_main(central, MainVariant::theorem);
    CHECK(v.applicable);
    CHECK(v.holds); // 1 > 0
    CHECK(!check_main(central, MainVariant::intro).applicable);
}

TEST_CASE("minimizing subset equals binomial enumeration") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        Scenario s = random_scenario(rng, 4);
        for (MainVariant variant : {MainVariant::intro, MainVariant::theorem}) {
            Verdict fast = check_main(s, variant);
            Verdict slow = check_main(s, variant, /*exhaustive_subsets=*/true);
            CHECK(fast.applicable == slow.applicable);
            CHECK(fast.holds == slow.holds);
            if (!fast.holds && fast.applicable) {
                REQUIRE(!slow.witnesses.empty());
                CHECK(fast.witnesses.front().m == slow.witnesses.front().m);
            }
        }
    }
}

TEST_CASE("quasicompactness") {
    CHECK(check_quasicompact(two_tower(4)).holds);
    CHECK(!check_quasicompact(two_tower(2)).applicable);

    Scenario s;
    s.algebra.d = 4;
    const char* ids[] = {"x1", "x2", "x3", "x4"};
    Rational invs[] = {{1, 2}, {1, 2}, {1, 4}, {3, 4}};
    for (int k = 0; k < 4; ++k) {
        s.algebra.places[ids[k]] = {ids[k], 1};
        s.algebra.invariants[ids[k]] = QModZ{invs[k]};
    }
    s.bounds = BoundTuple({Coweight({1, 0, 0, 0}), Coweight({0, 0, 0, -1})});
    Verdict v = check_quasicompact(s);
    CHECK(!v.holds);
    REQUIRE(!v.witnesses.empty());
    CHECK(v.witnesses[0].subset == std::vector<std::string>{"x1", "x2"});
    CHECK(v.witnesses[0].lhs == Rational(2));
}

TEST_CASE("quasicompactness for a supplied subset") {
    Scenario s = two_tower(2);
    CHECK(check_quasicompact_subset(s, {"x1"}).holds);
    CHECK(!check_quasicompact_subset(s, {}).holds);
}

TEST_CASE("irreducibility divisor") {
    Scenario s = two_tower(2);
    Verdict one = check_irreducibility(s, {"x1"});
    CHECK(one.holds);
    CHECK(one.witnesses[0].lhs == Rational(4));
    Verdict empty = check_irreducibility(s, {});
    CHECK(!empty.holds);
    CHECK(empty.witnesses[0].lhs == Rational(2));

    s.legs.entries[0] = {"x1", 0};
    CHECK_THROWS_WITH_AS(check_irreducibility(s, {"x1"}), "legs meet Y", invalid_input);

    Scenario q;
    q.algebra.d = 4;
    const char* ids[] = {"x1", "x2", "x3", "x4"};
    Rational invs[] = {{1, 2}, {1, 2}, {1, 4}, {3, 4}};
    for (int k = 0; k < 4; ++k) {
        q.algebra.places[ids[k]] = {ids[k], 1};
        q.algebra.invariants[ids[k]] = QModZ{invs[k]};
    }
    q.bounds = BoundTuple({Coweight({0, 0, 0, 0})});
    Verdict two = check_irreducibility(q, {"x1", "x2"});
    CHECK(!two.holds);
    CHECK(two.witnesses[0].lhs == Rational(8));
}

TEST_CASE("coker bound") {
    Scenario s = two_tower(2);
    CHECK(coker_bound(s, 1) == Rational(2));
    CHECK(coker_bound(s, 2) == Rational(0));
    CHECK_THROWS_AS(coker_bound(s, 0), invalid_input);

    Scenario t;
    t.algebra.d = 3;
    for (int k = 1; k <= 3; ++k) {
        std::string id = "x" + std::to_string(k);
        t.algebra.places[id] = {id, 1};
        t.algebra.invariants[id] = QModZ{Rational(1, 3)};
    }
    t.bounds = BoundTuple({Coweight({1, 0, 0}), Coweight({0, 0, -1})});
    CHECK(coker_bound(t, 2) == Rational(3));
}

TEST_CASE("degeneration lower bound") {
    Scenario s = two_tower(2);
    CHECK(degeneration_lower_bound(s, 1, "x1") == Rational(1, 2));
    s.legs.entries[0] = {"x1", 0}; // non-central (1,0) at x1: relaxed bound floors at 0
    CHECK(degeneration_lower_bound(s, 1, "x1") == Rational(0));
    CHECK(degeneration_lower_bound(s, 1, "x2") == Rational(1, 2));
    Scenario split = two_tower(2);
    split.algebra.places["z"] = {"z", 1};
    CHECK(degeneration_lower_bound(split, 1, "z") == Rational(0));
}

TEST_CASE("blocking search mirrors the example thresholds") {
    Scenario six = two_tower(6);
    six.legs.entries[0] = {"x1", 0};
    six.legs.entries[1] = {"x2", 0};
    Verdict cert = find_blocking(six);
    CHECK(cert.holds); // 2 > 1 at m=1: no degeneration consistent

    Scenario four = two_tower(4);
    four.legs.entries[0] = {"x1", 0};
    four.legs.entries[1] = {"x2", 0};
    Verdict blocked = find_blocking(four);
    CHECK(!blocked.holds);
    REQUIRE(!blocked.witnesses.empty());
    CHECK(blocked.witnesses[0].m == 1);
    CHECK(blocked.witnesses[0].subset == std::vector<std::string>{"x3", "x4"});
    CHECK(blocked.witnesses[0].lhs == Rational(1));
    CHECK(blocked.witnesses[0].rhs == Rational(1));
}

TEST_CASE("unassigned legs reproduce the coarse criterion") {
    // exhaustive: d in {2,3}, every multiset of invariants k/d of size <= 6
    for (long long d : {2LL, 3LL}) {
        std::vector<std::vector<long long>> numerator_sets{{}};
        for (int size = 1; size <= 6; ++size) {
            std::vector<std::vector<long long>> next;
            for (const auto& base : numerator_sets)
                for (long long n = base.empty() ? 1 : base.back(); n < d; ++n) {
                    auto withn = base;
                    withn.push_back(n);
                    next.push_back(withn);
                }
            numerator_sets = next;
            for (const auto& nums : numerator_sets) {
                long long total = std::accumulate(nums.begin(), nums.end(), 0LL);
                if (total % d != 0)
                    continue;
                long long lcm_orders = 1;
                for (long long n : nums)
                    lcm_orders = std::lcm(lcm_orders, Rational(n, d).den());
                if (lcm_orders != d)
                    continue;
                Scenario s;
                s.algebra.d = d;
                for (std::size_t k = 0; k < nums.size(); ++k) {
                    std::string id = "x" + std::to_string(k + 1);
                    s.algebra.places[id] = {id, 1};
                    s.algebra.invariants[id] = QModZ{Rational(nums[k], d)};
                }
                std::vector<long long> up(static_cast<std::size_t>(d), 0), down = up;
                up.front() = 1;
                down.back() = -1;
                s.bounds = BoundTuple({Coweight(up), Coweight(down)});
                CHECK(find_blocking(s).holds == check_lau(s).holds);
                Verdict all = find_blocking_all_placements(s);
                // the unassigned placement is part of the search space
                if (!find_blocking(s).holds)
                    CHECK(!all.holds);
            }
        }
    }
}

TEST_CASE("main implies lau; extra ramified pairs preserve main") {
    std::mt19937 rng(99);
    int done = 0;
    while (done < 500) {
        Scenario s = random_scenario(rng, 4);
        Verdict main_v = check_main(s, MainVariant::theorem);
        if (main_v.applicable && main_v.holds)
            CHECK(check_lau(s).holds);

        // grow the ramification locus by a compensating pair
        Scenario grown = s;
        std::string a = "p1", b = "p2";
        grown.algebra.places[a] = {a, 1};
        grown.algebra.places[b] = {b, 1};
        grown.algebra.invariants[a] = QModZ{Rational(1, grown.algebra.d)};
        grown.algebra.invariants[b] = QModZ{Rational(-1, grown.algebra.d)};
        if (main_v.applicable && main_v.holds) {
            Verdict grown_v = check_main(grown, MainVariant::theorem);
            CHECK(grown_v.applicable);
            CHECK(grown_v.holds);
        }
        ++done;
    }
}

TEST_CASE("witnesses re-evaluate to the reported sides") {
    Scenario four = two_tower(4);
    Verdict v = check_main(four, MainVariant::theorem);
    REQUIRE(!v.witnesses.empty());
    const Witness& w = v.witnesses.front();
    Rational lhs;
    for (const auto& y : w.subset)
        lhs += four.algebra.invariant_at(y).times(w.m).rep();
    CHECK(lhs == w.lhs);
    CHECK(coker_bound(four, w.m) / Rational(four.algebra.d) == w.rhs);
}

TEST_CASE("full report composition") {
    FullReport r6 = full_report(two_tower(6));
    CHECK(r6.algebra_validation.ok);
    CHECK(r6.components == 2);
    for (const auto& v : r6.verdicts)
        if (v.criterion == "nonempty" || v.criterion == "lau" || v.criterion == "main_theorem" ||
            v.criterion == "degeneration")
            CHECK(v.holds);

    FullReport r4 = full_report(two_tower(4));
    for (const auto& v : r4.verdicts) {
        if (v.criterion == "lau")
            CHECK(v.holds);
        if (v.criterion == "main_theorem") {
            CHECK(!v.holds);
            CHECK(!v.witnesses.empty());
        }
    }

    Scenario bad = two_tower(2);
    bad.algebra.invariants.erase("x2");
    FullReport rb = full_report(bad);
    CHECK(!rb.algebra_validation.ok);
    CHECK(rb.verdicts.empty());
}

TEST_CASE("scenario validation") {
    Scenario s = two_tower(2);
    s.legs.entries[5] = {"x1", 0};
    CHECK_THROWS_AS(s.validate(), invalid_input);
    s.legs.entries.clear();
    s.legs.entries[0] = {"nowhere", 0};
    CHECK_THROWS_AS(s.validate(), invalid_input);
    s.legs.entries.clear();
    s.idele_degree = 0;
    CHECK_THROWS_AS(s.validate(), invalid_input);
}
