#pragma once

#include <map>
#include <string>
#include <vector>

#include "shtukacrit/brauer.hpp"
#include "shtukacrit/rational.hpp"

namespace shtk {

// Presentation (L, Pi) of a simple space with Frobenius: a finite extension
// L/F given by its place fibration, plus the rational degree deg_y(Pi) of a
// slope datum Pi in L^x tensor Q, with finite support.
struct IsoSpaceSpec {
    AlgebraSpec algebra;
    ExtensionShape extension;
    std::map<std::string, Rational> pi_degrees; // by L-place id

    Rational pi_degree_at(const std::string& l_place_id) const;

    // Structural checks: extension shape consistent, every L-place carrying
    // a nonzero pi degree or lying over a ramified place is listed, and the
    // product formula sum deg_y(Pi) = 0 ("Pi not principal" otherwise).
    void validate() const;
};

struct SimpleSpaceReport {
    long long d_pi = 1;    // lowest common denominator of the deg_y(Pi)
    std::map<std::string, QModZ> delta_invariants; // endomorphism algebra, by L-place
    long long d_delta = 1; // index of the endomorphism division algebra
    long long dim_over_Fbar = 1;
    long long m = 1;       // dim / d
    long long multiplicity = 1;
};

// Invariant-level classification of the simple object presented by (L, Pi).
// Rejects presentations whose multiplicity d*d_delta/d_pi is non-integral
// ("not realizable as a simple (D,phi)-space").
SimpleSpaceReport classify_simple(const IsoSpaceSpec& spec);

struct LocalSlice {
    std::string l_place_id;
    Rational slope;        // deg_y(Pi) / [L_y : F_x]
    long long dim = 0;     // d * [L_y : F_x] * d_delta
};

// Slope/dimension data of the localization at a base place x, one entry per
// L-place above x.  A base place outside the listed fibration contributes a
// single slope-0 slice of full dimension.
std::vector<LocalSlice> localize(const IsoSpaceSpec& spec, const std::string& base_place_id);

// deg(V_x, phi_x) = sum_{y|x} d * d_delta * deg_y(Pi).
Rational degree_at(const IsoSpaceSpec& spec, const std::string& base_place_id);

// deg(V_x, phi_x)/d == [m * inv_x(D)] mod Z.
bool check_degree_congruence(const IsoSpaceSpec& spec, const std::string& base_place_id);

} // namespace shtk
