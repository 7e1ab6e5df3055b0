#pragma once

#include <optional>
#include <string>
#include <vector>

#include "shtukacrit/brauer.hpp"
#include "shtukacrit/coweight.hpp"

namespace shtk {

// One evaluation problem: algebra D, bound tuple over the legs, optional
// assignment of legs to places, optional idele degree deg(a).
struct Scenario {
    AlgebraSpec algebra;
    BoundTuple bounds;
    LegAssignment legs;
    std::optional<long long> idele_degree;

    void validate() const;
};

// One failing (or certifying) instance of a quantified inequality.
struct Witness {
    long long m = 0;
    std::vector<std::string> subset; // the Y involved, by place id
    Rational lhs;
    Rational rhs;
    std::string note;
};

struct Verdict {
    std::string criterion;
    bool applicable = true;
    bool holds = false;
    std::string note; // explanation when inapplicable or certifying
    std::vector<Witness> witnesses;
};

enum class MainVariant { intro, theorem };

// Non-emptiness: total degree of the bounds vanishes.
Verdict check_nonempty(const Scenario& s);

// Number of open-closed degree components, d * deg(a).
long long component_count(const Scenario& s);

// For every m in (0,d): sum over all ramified places of [m*inv_y] strictly
// exceeds sum_i sum_{j<=d-m} lambda_{i,j}.
Verdict check_lau(const Scenario& s);

// Same right side, but the left side is quantified over all subsets Y of
// the ramification locus of size |Ram|-|I| (intro) or |Ram|-|I_noncentral|
// (theorem).  Only the minimizing Y per m (smallest brackets) is tested;
// exhaustive_subsets forces full binomial enumeration (test oracle).
Verdict check_main(const Scenario& s, MainVariant variant, bool exhaustive_subsets = false);

// Every subset Y of Ram(D) of size |Ram|-|I| has lcm of invariant torsion
// orders equal to d.
Verdict check_quasicompact(const Scenario& s);

// Single-subset form of the same condition, for a user-supplied Y.
Verdict check_quasicompact_subset(const Scenario& s, const std::vector<std::string>& Y);

// Forced-divisor test over a user-supplied Y inside Ram(D), disjoint from
// the assigned leg places: holds iff lcm of torsion orders over Y is d
// (so every rank is divisible by d^2).
Verdict check_irreducibility(const Scenario& s, const std::vector<std::string>& Y);

// d * sum_i sum_{j=1}^{d-m} lambda_{i,j}, for 1 <= m <= d.
Rational coker_bound(const Scenario& s, long long m);

// Per-place lower bound for the cokernel dimension over d at x:
// [m*inv_x] when no non-central leg sits at x, else the relaxed bound
// [m*inv_x] - sum_{i at x} sum_{j<=m} (lambda_{i,j} - lambda_{i,d+1-j}),
// floored at 0.
Rational degeneration_lower_bound(const Scenario& s, long long m, const std::string& place_id);

// Tests, for each m in (0,d), whether the places Y' free of non-central
// legs satisfy sum_{x in Y'} [m*inv_x] <= coker_bound(s,m)/d.  holds means
// no m passes the test: no degeneration is consistent with this placement.
Verdict find_blocking(const Scenario& s);

// find_blocking over every assignment of legs to ramified places (legs may
// also stay unassigned); holds iff every placement is certified.  The
// witness records the first blocking placement found in enumeration order.
Verdict find_blocking_all_placements(const Scenario& s);

struct FullReport {
    ValidationReport algebra_validation;
    std::vector<Verdict> verdicts;
    std::optional<long long> components;
};

FullReport full_report(const Scenario& s);

// Thread budget for internal parallelism: SHTUKA_CRIT_THREADS if set,
// otherwise the hardware count; always >= 1.
unsigned thread_budget();

} // namespace shtk
