#pragma once

#include <set>
#include <vector>

#include "shtukacrit/affweyl.hpp"
#include "shtukacrit/coweight.hpp"
#include "shtukacrit/rational.hpp"

namespace shtk {

// A Newton point: weakly decreasing rational d-tuple whose partial sums at
// slope breakpoints (and total) are integers.
class NewtonPoint {
public:
    NewtonPoint() = default;
    explicit NewtonPoint(std::vector<Rational> slopes);

    const std::vector<Rational>& slopes() const { return slopes_; }
    std::size_t rank() const { return slopes_.size(); }
    Rational total() const;
    bool is_isoclinic() const;

    bool operator==(const NewtonPoint& o) const = default;
    auto operator<=>(const NewtonPoint& o) const = default;

    std::string str() const;

private:
    std::vector<Rational> slopes_;
};

// True iff the tuple is weakly decreasing with integral breakpoints and
// integral total.
bool validate_newton(const std::vector<Rational>& slopes);

// B(GL_d, lambda): every valid Newton point dominance-below lambda.
std::set<NewtonPoint> b_set(const Coweight& lambda);

// The isoclinic point (deg(lambda)/d, ..., deg(lambda)/d), the unique
// dominance-minimum of b_set(lambda).
NewtonPoint basic_point(const Coweight& lambda);

// Newton point of the cyclic product of a tuple of affine Weyl elements
// (the Shapiro transfer from the Weil restriction to the base group).
NewtonPoint shapiro_product(const std::vector<AffineElement>& tuple);

NewtonPoint newton_point_of(const AffineElement& e);

// nu <= lambda in dominance order.
bool dominance_leq(const NewtonPoint& nu, const Coweight& lambda);
bool dominance_leq(const NewtonPoint& nu, const NewtonPoint& lambda);

} // namespace shtk
