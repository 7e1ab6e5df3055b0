#include "shtukacrit/isospace.hpp"

#include <numeric>

namespace shtk {

Rational IsoSpaceSpec::pi_degree_at(const std::string& l_place_id) const {
    auto it = pi_degrees.find(l_place_id);
    return it == pi_degrees.end() ? Rational() : it->second;
}

void IsoSpaceSpec::validate() const {
    ValidationReport algebra_report = validate_algebra(algebra);
    if (!algebra_report.ok)
        throw invalid_input("invalid algebra: " + algebra_report.violations.front());
    extension.validate();

    for (const auto& [y, deg] : pi_degrees)
        if (!deg.is_zero() && !extension.find(y))
            throw invalid_input("L-place \"" + y + "\" carries a pi degree but is not listed");
    for (const std::string& x : ramification_locus(algebra))
        if (!extension.places_above.contains(x))
            throw invalid_input("ramified place \"" + x + "\" has no listed fibre");

    Rational total;
    for (const auto& [y, deg] : pi_degrees)
        total += deg;
    if (!total.is_zero())
        throw invalid_input("Pi not principal");
}

SimpleSpaceReport classify_simple(const IsoSpaceSpec& spec) {
    spec.validate();
    SimpleSpaceReport report;

    std::vector<Rational> degrees;
    for (const auto& [y, deg] : spec.pi_degrees)
        degrees.push_back(deg);
    if (degrees.empty())
        degrees.emplace_back(0);
    report.d_pi = lcm_denominators(degrees);

    long long lcm_orders = 1;
    for (const auto& [x, fibre] : spec.extension.places_above)
        for (const auto& above : fibre) {
            QModZ delta = invariant_after_base_change(spec.algebra, x, above.local_degree) +
                          (-QModZ(spec.pi_degree_at(above.id)));
            report.delta_invariants.emplace(above.id, delta);
            lcm_orders = std::lcm(lcm_orders, delta.torsion_order());
        }
    report.d_delta = lcm_orders;

    const long long d = spec.algebra.d;
    report.dim_over_Fbar = d * spec.extension.total_degree * report.d_delta;
    report.m = report.dim_over_Fbar / d;
    if ((d * report.d_delta) % report.d_pi != 0)
        throw invalid_input("not realizable as a simple (D,phi)-space: multiplicity " +
                            Rational(d * report.d_delta, report.d_pi).str() +
                            " is not an integer");
    report.multiplicity = d * report.d_delta / report.d_pi;
    return report;
}

std::vector<LocalSlice> localize(const IsoSpaceSpec& spec, const std::string& base_place_id) {
    SimpleSpaceReport report = classify_simple(spec);
    const long long d = spec.algebra.d;
    std::vector<LocalSlice> out;
    auto it = spec.extension.places_above.find(base_place_id);
    if (it == spec.extension.places_above.end()) {
        // Unlisted base place: Pi is a unit there, one isoclinic slice of
        // slope 0 covering the whole fibre.
        out.push_back({base_place_id, Rational(), d * spec.extension.total_degree * report.d_delta});
        return out;
    }
    for (const auto& above : it->second)
        out.push_back({above.id, spec.pi_degree_at(above.id) / Rational(above.local_degree),
                       d * above.local_degree * report.d_delta});
    return out;
}

Rational degree_at(const IsoSpaceSpec& spec, const std::string& base_place_id) {
    SimpleSpaceReport report = classify_simple(spec);
    const Rational scale(spec.algebra.d * report.d_delta);
    Rational total;
    auto it = spec.extension.places_above.find(base_place_id);
    if (it == spec.extension.places_above.end())
        return total;
    for (const auto& above : it->second)
        total += scale * spec.pi_degree_at(above.id);
    return total;
}

bool check_degree_congruence(const IsoSpaceSpec& spec, const std::string& base_place_id) {
    SimpleSpaceReport report = classify_simple(spec);
    Rational lhs = degree_at(spec, base_place_id) / Rational(spec.algebra.d);
    Rational rhs = spec.algebra.invariant_at(base_place_id).times(report.m).rep();
    return (lhs - rhs).is_integer();
}

} // namespace shtk
