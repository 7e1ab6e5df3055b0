#include "shtukacrit/coweight.hpp"

#include <algorithm>
#include <numeric>

namespace shtk {

Coweight::Coweight(std::vector<long long> entries) : entries_(std::move(entries)) {
    for (std::size_t j = 0; j + 1 < entries_.size(); ++j)
        if (entries_[j] < entries_[j + 1])
            throw invalid_input("coweight entries must be weakly decreasing");
}

Coweight Coweight::dominant(std::vector<long long> entries) {
    std::sort(entries.begin(), entries.end(), std::greater<>());
    return Coweight(std::move(entries));
}

long long Coweight::degree() const {
    return std::accumulate(entries_.begin(), entries_.end(), 0LL);
}

bool Coweight::is_central() const {
    return entries_.empty() || entries_.front() == entries_.back();
}

Coweight Coweight::operator+(const Coweight& o) const {
    if (rank() != o.rank())
        throw invalid_input("coweight rank mismatch");
    std::vector<long long> sum(rank());
    for (std::size_t j = 0; j < rank(); ++j)
        sum[j] = entries_[j] + o.entries_[j];
    // componentwise sum of dominant tuples is dominant; sort anyway
    return Coweight::dominant(std::move(sum));
}

std::string Coweight::str() const {
    std::string out = "(";
    for (std::size_t j = 0; j < entries_.size(); ++j) {
        if (j)
            out += ",";
        out += std::to_string(entries_[j]);
    }
    return out + ")";
}

bool dominance_leq(const std::vector<Rational>& mu, const std::vector<Rational>& lambda) {
    if (mu.size() != lambda.size())
        throw invalid_input("dominance order: length mismatch");
    Rational pm, pl;
    for (std::size_t j = 0; j < mu.size(); ++j) {
        pm += mu[j];
        pl += lambda[j];
        if (pm > pl)
            return false;
    }
    return pm == pl;
}

bool dominance_leq(const Coweight& mu, const Coweight& lambda) {
    std::vector<Rational> m(mu.entries().begin(), mu.entries().end());
    std::vector<Rational> l(lambda.entries().begin(), lambda.entries().end());
    return dominance_leq(m, l);
}

Coweight to_gl(const Coweight& lambda, std::size_t d) {
    if (lambda.rank() != d)
        throw invalid_input("to_gl: coweight rank must equal d");
    std::vector<long long> out;
    out.reserve(d * d);
    for (long long e : lambda.entries())
        out.insert(out.end(), d, e);
    return Coweight(std::move(out));
}

Coweight minimal_minuscule(const Coweight& lambda) {
    const long long d = static_cast<long long>(lambda.rank());
    if (d == 0)
        return lambda;
    long long deg = lambda.degree();
    long long q = deg / d, r = deg % d;
    if (r < 0) {
        --q;
        r += d;
    }
    std::vector<long long> out(lambda.rank(), q);
    for (long long j = 0; j < r; ++j)
        ++out[static_cast<std::size_t>(j)];
    return Coweight(std::move(out));
}

std::vector<std::vector<long long>> balance(const std::vector<Coweight>& deltas) {
    if (deltas.empty())
        return {};
    const std::size_t d = deltas.front().rank();
    std::vector<std::size_t> ones;
    long long total = 0;
    for (const auto& delta : deltas) {
        if (delta.rank() != d)
            throw invalid_input("balance: rank mismatch");
        std::size_t e = 0;
        for (std::size_t j = 0; j < d; ++j) {
            long long v = delta[j];
            if (v != 0 && v != 1)
                throw invalid_input("balance: entries must be 0 or 1");
            if (v == 1 && j != e)
                throw invalid_input("balance: tuple not of shape (1^e, 0^(d-e))");
            if (v == 1)
                ++e;
        }
        if (e == d)
            throw invalid_input("balance: e_i must be < d");
        ones.push_back(e);
        total += static_cast<long long>(e);
    }
    if (total % static_cast<long long>(d) != 0)
        throw invalid_input("unbalanced weights");

    // Lay the ones of each tuple down as consecutive cyclic intervals.
    // The intervals tile Z/d exactly s = total/d times, so every column
    // sum comes out equal, and a cyclic interval of e ones is a 0/1 tuple
    // with dominant representative (1^e, 0^(d-e)).
    std::vector<std::vector<long long>> eps;
    std::size_t cursor = 0;
    for (std::size_t e : ones) {
        std::vector<long long> row(d, 0);
        for (std::size_t k = 0; k < e; ++k)
            row[(cursor + k) % d] = 1;
        cursor = (cursor + e) % d;
        eps.push_back(std::move(row));
    }
    return eps;
}

BoundTuple::BoundTuple(std::vector<Coweight> legs) : legs_(std::move(legs)) {
    if (legs_.empty())
        throw invalid_input("bound tuple needs at least one leg");
    for (const auto& l : legs_)
        if (l.rank() != legs_.front().rank())
            throw invalid_input("bound tuple: legs must share a common rank");
}

std::size_t BoundTuple::rank() const {
    return legs_.front().rank();
}

long long BoundTuple::total_degree() const {
    long long s = 0;
    for (const auto& l : legs_)
        s += l.degree();
    return s;
}

std::size_t BoundTuple::noncentral_count() const {
    std::size_t n = 0;
    for (const auto& l : legs_)
        if (!l.is_central())
            ++n;
    return n;
}

Coweight aggregate_lambda_y(const BoundTuple& bounds, const LegAssignment& legs,
                            const std::string& place_id) {
    std::vector<long long> sum(bounds.rank(), 0);
    for (const auto& [i, target] : legs.entries) {
        if (target.place_id != place_id)
            continue;
        if (i >= bounds.legs().size())
            throw invalid_input("leg index out of range");
        const auto& lambda = bounds.legs()[i];
        for (std::size_t j = 0; j < sum.size(); ++j)
            sum[j] += lambda[j];
    }
    return Coweight::dominant(std::move(sum));
}

} // namespace shtk
