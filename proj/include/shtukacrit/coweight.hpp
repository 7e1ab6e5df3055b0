#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "shtukacrit/rational.hpp"

namespace shtk {

// Dominant coweight of GL_d: a weakly decreasing integer d-tuple.
class Coweight {
public:
    Coweight() = default;
    explicit Coweight(std::vector<long long> entries);

    // Sorts the entries decreasingly first (dominant representative).
    static Coweight dominant(std::vector<long long> entries);

    const std::vector<long long>& entries() const { return entries_; }
    std::size_t rank() const { return entries_.size(); }
    long long operator[](std::size_t j) const { return entries_[j]; }

    long long degree() const;
    bool is_central() const;

    Coweight operator+(const Coweight& o) const;
    bool operator==(const Coweight& o) const = default;
    auto operator<=>(const Coweight& o) const = default;

    std::string str() const;

private:
    std::vector<long long> entries_;
};

// mu <= lambda in dominance order: all partial sums of mu bounded by those
// of lambda and total sums equal.  Both tuples must be weakly decreasing
// and of the same length.
bool dominance_leq(const std::vector<Rational>& mu, const std::vector<Rational>& lambda);
bool dominance_leq(const Coweight& mu, const Coweight& lambda);

// Transfer to GL_{d^2}: each entry repeated d times.
Coweight to_gl(const Coweight& lambda, std::size_t d);

// The unique central-or-minuscule coweight of the same degree below lambda
// (max entry - min entry <= 1).
Coweight minimal_minuscule(const Coweight& lambda);

// Given delta_i = (1^{e_i}, 0^{d-e_i}) with sum of e_i = d*s, produces 0/1
// tuples eps_i whose dominant representative is delta_i and whose
// componentwise sum is s*(1,...,1).  Throws invalid_input when the e_i do
// not sum to a multiple of d.
std::vector<std::vector<long long>> balance(const std::vector<Coweight>& deltas);

struct Place {
    std::string id;
    long long degree = 1; // residue degree over the constant field
    bool operator==(const Place&) const = default;
    auto operator<=>(const Place&) const = default;
};

// Assignment of legs to geometric points: each assigned leg names a closed
// place and a Frobenius index modulo its degree.  Unassigned legs are
// generic (away from the ramification locus).
struct LegTarget {
    std::string place_id;
    long long frobenius_index = 0;
    bool operator==(const LegTarget&) const = default;
};

struct LegAssignment {
    // leg index -> target; absent keys mean unassigned legs
    std::map<std::size_t, LegTarget> entries;
};

// Tuple of bounds over the leg index set, all of common rank d.
class BoundTuple {
public:
    BoundTuple() = default;
    explicit BoundTuple(std::vector<Coweight> legs);

    const std::vector<Coweight>& legs() const { return legs_; }
    std::size_t rank() const; // common d
    long long total_degree() const;
    std::size_t noncentral_count() const;

private:
    std::vector<Coweight> legs_;
};

// Sum of the bounds of all legs assigned to place y, in dominant form.
// The Frobenius twist acts trivially on GL_d coweights, so the index of
// each leg does not enter the sum.
Coweight aggregate_lambda_y(const BoundTuple& bounds, const LegAssignment& legs,
                            const std::string& place_id);

} // namespace shtk
