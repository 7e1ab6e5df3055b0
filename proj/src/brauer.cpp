#include "shtukacrit/brauer.hpp"

#include <numeric>

namespace shtk {

QModZ AlgebraSpec::invariant_at(const std::string& place_id) const {
    auto it = invariants.find(place_id);
    return it == invariants.end() ? QModZ() : it->second;
}

const Place& AlgebraSpec::place(const std::string& place_id) const {
    auto it = places.find(place_id);
    if (it == places.end())
        throw invalid_input("unknown place id \"" + place_id + "\"");
    return it->second;
}

ValidationReport validate_algebra(const AlgebraSpec& spec) {
    ValidationReport report;
    if (spec.d < 1) {
        report.ok = false;
        report.violations.push_back("index d must be >= 1");
        return report;
    }
    QModZ sum;
    long long lcm_orders = 1;
    for (const auto& [id, inv] : spec.invariants) {
        sum = sum + inv;
        lcm_orders = std::lcm(lcm_orders, inv.torsion_order());
    }
    if (!sum.is_zero()) {
        report.ok = false;
        report.violations.push_back("invariant sum " + sum.rep().str() + " != 0 in Q/Z");
    }
    if (lcm_orders != spec.d) {
        report.ok = false;
        report.violations.push_back("lcm of invariant orders " + std::to_string(lcm_orders) +
                                    " != " + std::to_string(spec.d));
    }
    return report;
}

std::vector<std::string> ramification_locus(const AlgebraSpec& spec) {
    std::vector<std::string> out;
    for (const auto& [id, inv] : spec.invariants)
        if (!inv.is_zero())
            out.push_back(id);
    return out;
}

QModZ invariant_after_base_change(const AlgebraSpec& spec, const std::string& place_id,
                                  long long local_degree) {
    return spec.invariant_at(place_id).times(local_degree);
}

long long torsion_order(const QModZ& inv) {
    return inv.torsion_order();
}

void ExtensionShape::validate() const {
    if (total_degree < 1)
        throw invalid_input("extension degree must be >= 1");
    for (const auto& [base_id, fibre] : places_above) {
        long long sum = 0;
        for (const auto& above : fibre) {
            if (above.local_degree < 1 || above.absolute_degree < 1)
                throw invalid_input("place \"" + above.id + "\": degrees must be >= 1");
            sum += above.local_degree;
        }
        if (sum != total_degree)
            throw invalid_input("fibre over \"" + base_id + "\": local degrees sum to " +
                                std::to_string(sum) + ", expected " +
                                std::to_string(total_degree));
    }
}

const PlaceAbove* ExtensionShape::find(const std::string& l_place_id,
                                       std::string* base_id) const {
    for (const auto& [base, fibre] : places_above)
        for (const auto& above : fibre)
            if (above.id == l_place_id) {
                if (base_id)
                    *base_id = base;
                return &above;
            }
    return nullptr;
}

} // namespace shtk
