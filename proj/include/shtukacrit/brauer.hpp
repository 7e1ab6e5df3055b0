#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "shtukacrit/coweight.hpp"
#include "shtukacrit/rational.hpp"

namespace shtk {

// A central division algebra over the base function field, given purely by
// its index d and the finite map place -> local invariant in Q/Z.
// Unlisted places carry invariant 0.
struct AlgebraSpec {
    long long d = 1;
    std::map<std::string, Place> places;    // by id; covers at least supp(inv)
    std::map<std::string, QModZ> invariants; // finite support, keyed by place id

    QModZ invariant_at(const std::string& place_id) const;
    const Place& place(const std::string& place_id) const;
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;
};

// Checks global reciprocity (invariants sum to 0 in Q/Z) and the division
// algebra condition (lcm of the torsion orders equals d).
ValidationReport validate_algebra(const AlgebraSpec& spec);

// Places with nonzero invariant, in id order.
std::vector<std::string> ramification_locus(const AlgebraSpec& spec);

// inv_y(D (x)_F L) = [L_y : F_x] * inv_x(D) for a place y | x with local
// degree [L_y : F_x].
QModZ invariant_after_base_change(const AlgebraSpec& spec, const std::string& place_id,
                                  long long local_degree);

// Smallest e >= 1 with e * inv = 0 in Q/Z.
long long torsion_order(const QModZ& inv);

// One place of L over a base place: local degree [L_y : F_x] plus the
// absolute residue degree used by the deg_y functional.
struct PlaceAbove {
    std::string id;
    long long local_degree = 1;
    long long absolute_degree = 1;
};

// A finite extension L/F recorded only through its place fibration; L is
// never represented as a field.
struct ExtensionShape {
    long long total_degree = 1; // [L:F]
    std::map<std::string, std::vector<PlaceAbove>> places_above; // F-place id -> fibre

    // Validates sum of local degrees over each listed base place.
    void validate() const;

    // Finds the base place id for an L-place id, if listed.
    const PlaceAbove* find(const std::string& l_place_id, std::string* base_id = nullptr) const;
};

} // namespace shtk
