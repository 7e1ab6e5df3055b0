#include "shtukacrit/criteria.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <set>
#include <thread>

namespace shtk {

void Scenario::validate() const {
    ValidationReport report = validate_algebra(algebra);
    if (!report.ok)
        throw invalid_input("invalid algebra: " + report.violations.front());
    if (bounds.legs().empty())
        throw invalid_input("scenario needs at least one leg bound");
    if (static_cast<long long>(bounds.rank()) != algebra.d)
        throw invalid_input("leg bounds have rank " + std::to_string(bounds.rank()) +
                            ", expected d = " + std::to_string(algebra.d));
    for (const auto& [i, target] : legs.entries) {
        if (i >= bounds.legs().size())
            throw invalid_input("assigned leg index " + std::to_string(i) + " out of range");
        const Place& p = algebra.place(target.place_id);
        if (target.frobenius_index < 0 || target.frobenius_index >= p.degree)
            throw invalid_input("frobenius index for leg " + std::to_string(i) +
                                " outside [0, deg " + target.place_id + ")");
    }
    if (idele_degree && *idele_degree < 1)
        throw invalid_input("idele degree must be >= 1");
}

namespace {

// sum_i sum_{j=1}^{d-m} lambda_{i,j}
long long bounds_tail_sum(const BoundTuple& bounds, long long m) {
    const long long d = static_cast<long long>(bounds.rank());
    long long acc = 0;
    for (const auto& lambda : bounds.legs())
        for (long long j = 0; j < d - m; ++j)
            acc += lambda[static_cast<std::size_t>(j)];
    return acc;
}

Rational bracket_sum(const AlgebraSpec& algebra, const std::vector<std::string>& Y,
                     long long m) {
    Rational acc;
    for (const auto& y : Y)
        acc += algebra.invariant_at(y).times(m).rep();
    return acc;
}

// Non-central legs assigned to a given place?
bool has_noncentral_leg_at(const Scenario& s, const std::string& place_id) {
    for (const auto& [i, target] : s.legs.entries)
        if (target.place_id == place_id && !s.bounds.legs()[i].is_central())
            return true;
    return false;
}

void for_each_subset(const std::vector<std::string>& pool, std::size_t size,
                     const std::function<void(const std::vector<std::string>&)>& fn) {
    std::vector<std::size_t> idx(size);
    std::iota(idx.begin(), idx.end(), 0);
    if (size > pool.size())
        return;
    std::vector<std::string> subset(size);
    while (true) {
        for (std::size_t k = 0; k < size; ++k)
            subset[k] = pool[idx[k]];
        fn(subset);
        // next combination
        std::size_t k = size;
        while (k > 0 && idx[k - 1] == pool.size() - size + (k - 1))
            --k;
        if (k == 0)
            break;
        ++idx[k - 1];
        for (std::size_t j = k; j < size; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

} // namespace

Verdict check_nonempty(const Scenario& s) {
    s.validate();
    Verdict v{.criterion = "nonempty"};
    long long total = s.bounds.total_degree();
    v.holds = total == 0;
    if (!v.holds)
        v.witnesses.push_back({.lhs = Rational(total), .rhs = Rational(0),
                               .note = "total degree of the bounds"});
    return v;
}

long long component_count(const Scenario& s) {
    s.validate();
    if (!s.idele_degree)
        throw invalid_input("component count needs the idele degree deg(a)");
    return s.algebra.d * *s.idele_degree;
}

Verdict check_lau(const Scenario& s) {
    s.validate();
    Verdict v{.criterion = "lau", .holds = true};
    const long long d = s.algebra.d;
    std::vector<std::string> ram = ramification_locus(s.algebra);
    for (long long m = 1; m < d; ++m) {
        Rational lhs = bracket_sum(s.algebra, ram, m);
        Rational rhs(bounds_tail_sum(s.bounds, m));
        if (!(lhs > rhs)) {
            v.holds = false;
            v.witnesses.push_back({.m = m, .subset = ram, .lhs = lhs, .rhs = rhs});
        }
    }
    return v;
}

Verdict check_main(const Scenario& s, MainVariant variant, bool exhaustive_subsets) {
    s.validate();
    Verdict v{.criterion = variant == MainVariant::intro ? "main_intro" : "main_theorem",
              .holds = true};
    const long long d = s.algebra.d;
    std::vector<std::string> ram = ramification_locus(s.algebra);
    std::size_t excluded = variant == MainVariant::intro ? s.bounds.legs().size()
                                                         : s.bounds.noncentral_count();
    if (ram.size() <= excluded) {
        v.applicable = false;
        v.holds = false;
        v.note = "criterion vacuously inapplicable: |Ram| = " + std::to_string(ram.size()) +
                 " does not exceed the excluded leg count " + std::to_string(excluded);
        return v;
    }
    const std::size_t ysize = ram.size() - excluded;
    for (long long m = 1; m < d; ++m) {
        Rational rhs(bounds_tail_sum(s.bounds, m));
        if (exhaustive_subsets) {
            for_each_subset(ram, ysize, [&](const std::vector<std::string>& Y) {
                Rational lhs = bracket_sum(s.algebra, Y, m);
                if (!(lhs > rhs)) {
                    v.holds = false;
                    if (v.witnesses.empty() || v.witnesses.back().m != m)
                        v.witnesses.push_back({.m = m, .subset = Y, .lhs = lhs, .rhs = rhs});
                }
            });
        } else {
            // The sum over Y is minimized by the ysize smallest brackets.
            std::vector<std::pair<Rational, std::string>> brackets;
            for (const auto& y : ram)
                brackets.emplace_back(s.algebra.invariant_at(y).times(m).rep(), y);
            std::sort(brackets.begin(), brackets.end());
            Rational lhs;
            std::vector<std::string> Y;
            for (std::size_t k = 0; k < ysize; ++k) {
                lhs += brackets[k].first;
                Y.push_back(brackets[k].second);
            }
            std::sort(Y.begin(), Y.end());
            if (!(lhs > rhs)) {
                v.holds = false;
                v.witnesses.push_back({.m = m, .subset = Y, .lhs = lhs, .rhs = rhs});
            }
        }
    }
    return v;
}

Verdict check_quasicompact(const Scenario& s) {
    s.validate();
    Verdict v{.criterion = "quasicompact", .holds = true};
    std::vector<std::string> ram = ramification_locus(s.algebra);
    const std::size_t nlegs = s.bounds.legs().size();
    if (ram.size() <= nlegs) {
        v.applicable = false;
        v.holds = false;
        v.note = "inapplicable: |Ram| = " + std::to_string(ram.size()) +
                 " does not exceed the leg count " + std::to_string(nlegs);
        return v;
    }
    const std::size_t c = ram.size() - nlegs;
    const long long d = s.algebra.d;
    for_each_subset(ram, c, [&](const std::vector<std::string>& Y) {
        long long lcm_orders = 1;
        for (const auto& y : Y)
            lcm_orders = std::lcm(lcm_orders, s.algebra.invariant_at(y).torsion_order());
        if (lcm_orders != d && v.witnesses.empty()) {
            v.holds = false;
            v.witnesses.push_back({.subset = Y, .lhs = Rational(lcm_orders),
                                   .rhs = Rational(d), .note = "lcm of torsion orders"});
        }
    });
    return v;
}

Verdict check_quasicompact_subset(const Scenario& s, const std::vector<std::string>& Y) {
    s.validate();
    Verdict v{.criterion = "quasicompact_subset"};
    long long lcm_orders = 1;
    for (const auto& y : Y)
        lcm_orders = std::lcm(lcm_orders, s.algebra.invariant_at(y).torsion_order());
    v.holds = lcm_orders == s.algebra.d;
    v.witnesses.push_back({.subset = Y, .lhs = Rational(lcm_orders),
                           .rhs = Rational(s.algebra.d), .note = "lcm of torsion orders"});
    return v;
}

Verdict check_irreducibility(const Scenario& s, const std::vector<std::string>& Y) {
    s.validate();
    const long long d = s.algebra.d;
    std::set<std::string> ram_set;
    for (const auto& y : ramification_locus(s.algebra))
        ram_set.insert(y);
    std::set<std::string> leg_places;
    for (const auto& [i, target] : s.legs.entries)
        leg_places.insert(target.place_id);
    long long lcm_orders = 1;
    for (const auto& y : Y) {
        if (!ram_set.contains(y))
            throw invalid_input("place \"" + y + "\" is not in the ramification locus");
        if (leg_places.contains(y))
            throw invalid_input("legs meet Y");
        lcm_orders = std::lcm(lcm_orders, s.algebra.invariant_at(y).torsion_order());
    }
    Verdict v{.criterion = "irreducibility"};
    v.holds = lcm_orders == d;
    v.witnesses.push_back({.subset = Y, .lhs = Rational(d * lcm_orders),
                           .rhs = Rational(d * d), .note = "forced rank divisor vs d^2"});
    return v;
}

Rational coker_bound(const Scenario& s, long long m) {
    s.validate();
    const long long d = s.algebra.d;
    if (m < 1 || m > d)
        throw invalid_input("coker bound needs 1 <= m <= d");
    return Rational(d * bounds_tail_sum(s.bounds, m));
}

Rational degeneration_lower_bound(const Scenario& s, long long m, const std::string& place_id) {
    s.validate();
    const long long d = s.algebra.d;
    if (m <= 0 || m >= d)
        throw invalid_input("degeneration bound needs 0 < m < d");
    Rational bound = s.algebra.invariant_at(place_id).times(m).rep();
    if (has_noncentral_leg_at(s, place_id)) {
        // relaxed bound: subtract the symmetric gaps of each leg at x
        for (const auto& [i, target] : s.legs.entries) {
            if (target.place_id != place_id)
                continue;
            const Coweight& lambda = s.bounds.legs()[i];
            for (long long j = 0; j < m; ++j)
                bound -= Rational(lambda[static_cast<std::size_t>(j)] -
                                  lambda[static_cast<std::size_t>(d - 1 - j)]);
        }
    }
    return bound < Rational(0) ? Rational(0) : bound;
}

Verdict find_blocking(const Scenario& s) {
    s.validate();
    Verdict v{.criterion = "degeneration", .holds = true};
    const long long d = s.algebra.d;
    std::vector<std::string> yprime;
    for (const auto& x : ramification_locus(s.algebra))
        if (!has_noncentral_leg_at(s, x))
            yprime.push_back(x);
    for (long long m = 1; m < d; ++m) {
        Rational lhs = bracket_sum(s.algebra, yprime, m);
        Rational rhs = coker_bound(s, m) / Rational(d);
        if (lhs <= rhs) {
            v.holds = false;
            v.witnesses.push_back({.m = m, .subset = yprime, .lhs = lhs, .rhs = rhs,
                                   .note = "degeneration consistent at this m"});
            break; // smallest blocking m only
        }
    }
    if (v.holds)
        v.note = "no degeneration consistent with this leg placement";
    return v;
}

unsigned thread_budget() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0)
        hw = 1;
    if (const char* env = std::getenv("SHTUKA_CRIT_THREADS")) {
        long parsed = std::strtol(env, nullptr, 10);
        if (parsed >= 1)
            hw = static_cast<unsigned>(parsed);
    }
    return hw;
}

Verdict find_blocking_all_placements(const Scenario& s) {
    s.validate();
    Verdict v{.criterion = "degeneration_all_placements", .holds = true};
    std::vector<std::string> ram = ramification_locus(s.algebra);
    const std::size_t nlegs = s.bounds.legs().size();
    const std::size_t options = ram.size() + 1; // index 0 = unassigned

    std::uint64_t total = 1;
    for (std::size_t i = 0; i < nlegs; ++i) {
        total *= options;
        if (total > 2'000'000)
            throw invalid_input("placement search space too large");
    }

    // Each placement index decodes digit-by-digit to a leg assignment.
    auto decode = [&](std::uint64_t code) {
        Scenario placed = s;
        placed.legs.entries.clear();
        for (std::size_t i = 0; i < nlegs; ++i) {
            std::uint64_t digit = code % options;
            code /= options;
            if (digit > 0)
                placed.legs.entries[i] = LegTarget{ram[digit - 1], 0};
        }
        return placed;
    };

    const unsigned nthreads =
        std::min<std::uint64_t>(thread_budget(), std::max<std::uint64_t>(total, 1));
    std::vector<std::uint64_t> first_blocking(nthreads, total);
    std::vector<std::thread> workers;
    for (unsigned t = 0; t < nthreads; ++t)
        workers.emplace_back([&, t] {
            for (std::uint64_t code = t; code < total; code += nthreads) {
                Verdict inner = find_blocking(decode(code));
                if (!inner.holds) {
                    first_blocking[t] = code;
                    return;
                }
            }
        });
    for (auto& w : workers)
        w.join();
    std::uint64_t winner = *std::min_element(first_blocking.begin(), first_blocking.end());
    if (winner < total) {
        Scenario placed = decode(winner);
        Verdict inner = find_blocking(placed);
        v.holds = false;
        for (auto& w : inner.witnesses) {
            std::string placement = "placement:";
            for (const auto& [i, target] : placed.legs.entries)
                placement += " leg" + std::to_string(i) + "->" + target.place_id;
            if (placed.legs.entries.empty())
                placement += " all legs unassigned";
            w.note = placement;
            v.witnesses.push_back(std::move(w));
        }
    } else {
        v.note = "every leg placement is certified";
    }
    return v;
}

FullReport full_report(const Scenario& s) {
    FullReport report;
    report.algebra_validation = validate_algebra(s.algebra);
    if (!report.algebra_validation.ok)
        return report;
    s.validate();
    report.verdicts.push_back(check_nonempty(s));
    report.verdicts.push_back(check_lau(s));
    report.verdicts.push_back(check_main(s, MainVariant::intro));
    report.verdicts.push_back(check_main(s, MainVariant::theorem));
    report.verdicts.push_back(check_quasicompact(s));
    report.verdicts.push_back(find_blocking(s));
    if (s.idele_degree)
        report.components = component_count(s);
    return report;
}

} // namespace shtk
