#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "shtukacrit/coweight.hpp"
#include "shtukacrit/rational.hpp"

namespace shtk {

// Element of the extended affine Weyl group Z^d x| S_d of GL_d, written as
// a translation part v and a permutation w acting by position:
// (v1,w1)*(v2,w2) = (v1 + w1(v2), w1 w2) with (w v)_{w(i)} = v_i.
// The Omega-component of (v,w) is deg(v) = sum of v.
class AffineElement {
public:
    AffineElement() = default;
    AffineElement(std::vector<long long> translation, std::vector<int> permutation);

    static AffineElement identity(std::size_t d);
    static AffineElement translation_of(const std::vector<long long>& v);
    // Length-0 generator of Omega: t_{e_1} * (1 2 ... d).
    static AffineElement omega(std::size_t d);
    static AffineElement omega_power(std::size_t d, long long k);
    // Simple reflections: index 0 is the affine one, 1..d-1 the finite ones.
    static AffineElement simple_reflection(std::size_t d, std::size_t k);

    std::size_t rank() const { return v_.size(); }
    const std::vector<long long>& translation() const { return v_; }
    const std::vector<int>& permutation() const { return w_; } // 0-indexed one-line

    long long omega_component() const; // deg(v)

    AffineElement operator*(const AffineElement& o) const;
    AffineElement inverse() const;
    bool operator==(const AffineElement& o) const = default;
    auto operator<=>(const AffineElement& o) const = default;

    bool is_translation() const;
    std::string str() const;

private:
    std::vector<long long> v_;
    std::vector<int> w_;
};

// Iwahori-Matsumoto length.
long long length(const AffineElement& e);

// Bruhat order on the extended group: comparable only within a common
// Omega-coset, decided by the subword property on the W_aff parts.
bool bruhat_leq(const AffineElement& a, const AffineElement& b);

// Demazure (monoid) product: max of {a*b' : b' <= b}.
AffineElement demazure(const AffineElement& a, const AffineElement& b);

// A reduced word for the W_aff part of e (letters in 0..d-1); e must then
// equal word * omega^(omega_component).
std::vector<std::size_t> reduced_word(const AffineElement& e);

struct AdmissibleSet {
    std::size_t d = 0;
    Coweight lambda;
    std::set<AffineElement> elements;
};

// The lambda-admissible set: all elements Bruhat-below some translation
// t_{x lambda}, x in S_d.
AdmissibleSet admissible_set(const Coweight& lambda);

// The unique length-0 element of Adm(lambda): omega^{deg lambda}.
AffineElement basic_element(const Coweight& lambda);

// Newton point: per cycle c of the permutation, slope (sum of v over c)/|c|
// with multiplicity |c|, sorted decreasingly.
std::vector<Rational> newton_point(const AffineElement& e);

// <nu, 2 rho> = sum_{i<j} (nu_i - nu_j).
Rational pairing_two_rho(const std::vector<Rational>& nu);

// Straightness of a tuple under the cyclic-shift twist: the total length
// equals the pairing of the Newton point of the product with 2 rho.
bool is_straight(const std::vector<AffineElement>& tuple);

struct AdditivityReport {
    bool equal = true;
    std::vector<AffineElement> only_in_product;  // in U demazure-downsets, not in Adm(l1+l2)
    std::vector<AffineElement> only_in_adm_sum;  // in Adm(l1+l2), missing from the union
};

// Checks that the union of Bruhat-downsets of demazure(w1,w2) over
// Adm(l1) x Adm(l2) equals Adm(l1+l2).
AdditivityReport check_adm_additivity(const Coweight& lambda1, const Coweight& lambda2);

// Everything Bruhat-below e (within its Omega-coset).  Exposed for reuse by
// the admissible-set and additivity computations.
class BruhatDownCache {
public:
    const std::set<AffineElement>& down_closure(const AffineElement& e);

private:
    std::map<AffineElement, std::set<AffineElement>> memo_;
};

} // namespace shtk
