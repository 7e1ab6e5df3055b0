#include <doctest.h>

#include <algorithm>

#include "shtukacrit/newton.hpp"

using namespace shtk;

namespace {

void dominant_coweights(long long d, long long lo, long long hi,
                        std::vector<long long>& prefix, std::vector<Coweight>& out) {
    if (static_cast<long long>(prefix.size()) == d) {
        out.push_back(Coweight(prefix));
        return;
    }
    long long top = prefix.empty() ? hi : prefix.back();
    for (long long e = top; e >= lo; --e) {
        prefix.push_back(e);
        dominant_coweights(d, lo, hi, prefix, out);
        prefix.pop_back();
    }
}

std::vector<Coweight> dominant_coweights(long long d, long long lo, long long hi) {
    std::vector<long long> prefix;
    std::vector<Coweight> out;
    dominant_coweights(d, lo, hi, prefix, out);
    return out;
}

NewtonPoint np(std::vector<Rational> slopes) {
    return NewtonPoint(std::move(slopes));
}

} // namespace

TEST_CASE("newton point validation") {
    CHECK(validate_newton({Rational(1), Rational(0)}));
    CHECK(validate_newton({Rational(1, 2), Rational(1, 2)}));
    CHECK(!validate_newton({Rational(0), Rational(1)}));                  // increasing
    CHECK(!validate_newton({Rational(1, 2), Rational(0)}));               // breakpoint not integral
    CHECK(!validate_newton({Rational(1, 2), Rational(1, 2), Rational(1, 2)})); // total 3/2
    CHECK(validate_newton({Rational(1, 3), Rational(1, 3), Rational(1, 3)}));
    CHECK(!validate_newton({}));
    CHECK_THROWS_AS(NewtonPoint({Rational(1, 2)}), invalid_input);
}

TEST_CASE("b_set goldens") {
    auto b2 = b_set(Coweight({1, 0}));
    CHECK(b2 == std::set<NewtonPoint>{np({Rational(1), Rational(0)}),
                                      np({Rational(1, 2), Rational(1, 2)})});

    auto b3 = b_set(Coweight({1, 0, 0}));
    CHECK(b3.size() == 3);
    CHECK(b3.contains(np({Rational(1), Rational(0), Rational(0)})));
    CHECK(b3.contains(np({Rational(1, 2), Rational(1, 2), Rational(0)})));
    CHECK(b3.contains(np(std::vector<Rational>(3, Rational(1, 3)))));

    // a central bound admits only itself
    CHECK(b_set(Coweight({1, 1})) == std::set<NewtonPoint>{np({Rational(1), Rational(1)})});
}

TEST_CASE("b_set members are valid, dominated, and include the extremes") {
    for (long long d = 1; d <= 4; ++d)
        for (const auto& lambda : dominant_coweights(d, -2, 2)) {
            auto bs = b_set(lambda);
            NewtonPoint basic = basic_point(lambda);
            NewtonPoint top = np(std::vector<Rational>(lambda.entries().begin(),
                                                       lambda.entries().end()));
            CHECK(bs.contains(basic));
            CHECK(bs.contains(top));
            for (const auto& nu : bs) {
                CHECK(validate_newton(nu.slopes()));
                CHECK(dominance_leq(nu, lambda));
                CHECK(dominance_leq(basic, nu)); // basic is the minimum
            }
        }
}

TEST_CASE("b_set monotone in the bound") {
    auto family = dominant_coweights(3, -1, 1);
    for (const auto& a : family)
        for (const auto& b : family) {
            if (!dominance_leq(a, b))
                continue;
            auto ba = b_set(a);
            auto bb = b_set(b);
            for (const auto& nu : ba)
                CHECK(bb.contains(nu));
        }
}

TEST_CASE("basic point") {
    CHECK(basic_point(Coweight({1, 0})) == np({Rational(1, 2), Rational(1, 2)}));
    CHECK(basic_point(Coweight({2, 0, -1})) == np(std::vector<Rational>(3, Rational(1, 3))));
    CHECK(basic_point(Coweight({1, 0})).is_isoclinic());
}

TEST_CASE("mazur inequality over admissible sets") {
    for (long long d = 2; d <= 3; ++d)
        for (const auto& lambda : dominant_coweights(d, -2, 2)) {
            auto adm = admissible_set(lambda);
            std::set<NewtonPoint> straight_points;
            for (const auto& e : adm.elements) {
                NewtonPoint nu = newton_point_of(e);
                CHECK(dominance_leq(nu, lambda));
                if (is_straight({e}))
                    straight_points.insert(nu);
            }
            // straight admissible elements realize exactly the valid Newton points
            CHECK(straight_points == b_set(lambda));
        }
}

TEST_CASE("shapiro product") {
    // tuple product of translations: Newton point of the summed translation
    AffineElement t1 = AffineElement::translation_of({1, 0});
    AffineElement t2 = AffineElement::translation_of({0, -1});
    CHECK(shapiro_product({t1, t2}) == np({Rational(1), Rational(-1)}));
    CHECK(shapiro_product({AffineElement::omega(2)}) ==
          np({Rational(1, 2), Rational(1, 2)}));
    // invariant under cyclic rotation of the tuple
    AffineElement s0 = AffineElement::simple_reflection(2, 0);
    AffineElement om = AffineElement::omega(2);
    std::vector<AffineElement> tuple = {t1, s0, om};
    NewtonPoint base = shapiro_product(tuple);
    for (int r = 0; r < 3; ++r) {
        std::rotate(tuple.begin(), tuple.begin() + 1, tuple.end());
        CHECK(shapiro_product(tuple) == base);
    }
}
