#include "shtukacrit/newton.hpp"

#include <optional>

namespace shtk {

NewtonPoint::NewtonPoint(std::vector<Rational> slopes) : slopes_(std::move(slopes)) {
    if (!validate_newton(slopes_))
        throw invalid_input("not a Newton point: needs weakly decreasing slopes with integral breakpoints");
}

Rational NewtonPoint::total() const {
    Rational acc;
    for (const auto& s : slopes_)
        acc += s;
    return acc;
}

bool NewtonPoint::is_isoclinic() const {
    for (const auto& s : slopes_)
        if (s != slopes_.front())
            return false;
    return true;
}

std::string NewtonPoint::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < slopes_.size(); ++i) {
        if (i)
            out += ",";
        out += slopes_[i].str();
    }
    return out + ")";
}

bool validate_newton(const std::vector<Rational>& slopes) {
    if (slopes.empty())
        return false;
    Rational partial;
    for (std::size_t i = 0; i < slopes.size(); ++i) {
        if (i && slopes[i] > slopes[i - 1])
            return false;
        partial += slopes[i];
        // Breakpoint (or endpoint): the partial sum must be an integer.
        bool breakpoint = i + 1 == slopes.size() || slopes[i + 1] != slopes[i];
        if (breakpoint && partial.den() != 1)
            return false;
    }
    return true;
}

namespace {

// Enumerates slope vectors segment by segment (strictly decreasing slopes,
// integral segment sums), pruning with the dominance bound against lambda.
void enumerate_segments(const std::vector<long long>& lambda_partials, std::size_t pos,
                        long long consumed, const std::optional<Rational>& prev_slope,
                        std::vector<Rational>& acc, std::set<NewtonPoint>& out) {
    const std::size_t d = lambda_partials.size();
    const long long total = lambda_partials.back();
    if (pos == d) {
        if (consumed == total)
            out.insert(NewtonPoint(acc));
        return;
    }
    const long long r = static_cast<long long>(d - pos);
    const long long remaining = total - consumed;
    for (long long len = 1; len <= r; ++len) {
        // Upper bound on the segment sum S.  Dominance at the first in-segment
        // prefix gives S/len <= Lambda_pos - consumed; a previous segment adds
        // the strict constraint S/len < prev.
        long long s_max = (lambda_partials[pos] - consumed) * len;
        if (prev_slope) {
            Rational bound = *prev_slope * Rational(len);
            long long fl = bound.floor();
            long long cap = (Rational(fl) == bound) ? fl - 1 : fl;
            if (cap < s_max)
                s_max = cap;
        }
        // Remaining in-segment dominance caps: S <= len*(Lambda_{pos+j} - consumed)/j.
        for (long long j = 2; j <= len; ++j) {
            Rational cap = Rational(len * (lambda_partials[pos + static_cast<std::size_t>(j) - 1] - consumed), j);
            long long fl = cap.floor();
            if (fl < s_max)
                s_max = fl;
        }
        // Lower bound from completability: the r-len later entries all have
        // slope < S/len, so remaining - S < (r-len)*S/len, i.e. S > total_rem*len/r;
        // when the segment is final, S must equal the remaining sum exactly.
        long long s_min;
        if (len == r) {
            s_min = remaining;
            if (s_min > s_max)
                continue;
            s_max = remaining;
        } else {
            Rational low(remaining * len, r);
            s_min = low.floor() + 1;
        }
        for (long long s = s_min; s <= s_max; ++s) {
            Rational slope(s, len);
            for (long long j = 0; j < len; ++j)
                acc.push_back(slope);
            enumerate_segments(lambda_partials, pos + static_cast<std::size_t>(len),
                               consumed + s, slope, acc, out);
            acc.resize(acc.size() - static_cast<std::size_t>(len));
        }
    }
}

} // namespace

std::set<NewtonPoint> b_set(const Coweight& lambda) {
    const std::size_t d = lambda.rank();
    if (d == 0)
        throw invalid_input("b_set needs rank >= 1");
    std::vector<long long> partials(d);
    long long acc = 0;
    for (std::size_t i = 0; i < d; ++i) {
        acc += lambda.entries()[i];
        partials[i] = acc;
    }
    std::set<NewtonPoint> out;
    std::vector<Rational> slopes;
    enumerate_segments(partials, 0, 0, std::nullopt, slopes, out);
    return out;
}

NewtonPoint basic_point(const Coweight& lambda) {
    if (lambda.rank() == 0)
        throw invalid_input("basic point needs rank >= 1");
    Rational slope(lambda.degree(), static_cast<long long>(lambda.rank()));
    return NewtonPoint(std::vector<Rational>(lambda.rank(), slope));
}

NewtonPoint newton_point_of(const AffineElement& e) {
    return NewtonPoint(newton_point(e));
}

NewtonPoint shapiro_product(const std::vector<AffineElement>& tuple) {
    if (tuple.empty())
        throw invalid_input("shapiro product needs a non-empty tuple");
    AffineElement prod = tuple.front();
    for (std::size_t a = 1; a < tuple.size(); ++a)
        prod = prod * tuple[a];
    return newton_point_of(prod);
}

bool dominance_leq(const NewtonPoint& nu, const NewtonPoint& mu) {
    if (nu.rank() != mu.rank())
        throw invalid_input("rank mismatch in dominance comparison");
    Rational pn, pm;
    for (std::size_t i = 0; i < nu.rank(); ++i) {
        pn += nu.slopes()[i];
        pm += mu.slopes()[i];
        if (pn > pm)
            return false;
    }
    return pn == pm;
}

bool dominance_leq(const NewtonPoint& nu, const Coweight& lambda) {
    std::vector<Rational> mu;
    mu.reserve(lambda.rank());
    for (long long x : lambda.entries())
        mu.emplace_back(x);
    return dominance_leq(nu, NewtonPoint(mu));
}

} // namespace shtk
