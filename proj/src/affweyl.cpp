#include "shtukacrit/affweyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace shtk {

namespace {

bool is_permutation(const std::vector<int>& w) {
    std::vector<char> seen(w.size(), 0);
    for (int x : w) {
        if (x < 0 || static_cast<std::size_t>(x) >= w.size() || seen[x])
            return false;
        seen[x] = 1;
    }
    return true;
}

} // namespace

AffineElement::AffineElement(std::vector<long long> translation, std::vector<int> permutation)
    : v_(std::move(translation)), w_(std::move(permutation)) {
    if (v_.size() != w_.size() || !is_permutation(w_))
        throw invalid_input("malformed affine Weyl element");
}

AffineElement AffineElement::identity(std::size_t d) {
    std::vector<int> w(d);
    std::iota(w.begin(), w.end(), 0);
    return AffineElement(std::vector<long long>(d, 0), std::move(w));
}

AffineElement AffineElement::translation_of(const std::vector<long long>& v) {
    std::vector<int> w(v.size());
    std::iota(w.begin(), w.end(), 0);
    return AffineElement(v, std::move(w));
}

AffineElement AffineElement::omega(std::size_t d) {
    std::vector<long long> v(d, 0);
    v[0] = 1;
    std::vector<int> w(d);
    for (std::size_t i = 0; i < d; ++i)
        w[i] = static_cast<int>((i + 1) % d);
    return AffineElement(std::move(v), std::move(w));
}

AffineElement AffineElement::omega_power(std::size_t d, long long k) {
    AffineElement base = k >= 0 ? omega(d) : omega(d).inverse();
    AffineElement acc = identity(d);
    for (long long i = 0, n = std::llabs(k); i < n; ++i)
        acc = acc * base;
    return acc;
}

AffineElement AffineElement::simple_reflection(std::size_t d, std::size_t k) {
    if (d < 2 || k >= d)
        throw invalid_input("bad simple reflection index");
    std::vector<long long> v(d, 0);
    std::vector<int> w(d);
    std::iota(w.begin(), w.end(), 0);
    if (k == 0) {
        v[0] = 1;
        v[d - 1] = -1;
        std::swap(w[0], w[d - 1]);
    } else {
        std::swap(w[k - 1], w[k]);
    }
    return AffineElement(std::move(v), std::move(w));
}

long long AffineElement::omega_component() const {
    return std::accumulate(v_.begin(), v_.end(), 0LL);
}

AffineElement AffineElement::operator*(const AffineElement& o) const {
    const std::size_t d = rank();
    if (o.rank() != d)
        throw invalid_input("rank mismatch in group law");
    std::vector<long long> v(d);
    std::vector<int> w(d);
    for (std::size_t i = 0; i < d; ++i) {
        v[static_cast<std::size_t>(w_[i])] = v_[static_cast<std::size_t>(w_[i])] + o.v_[i];
        w[i] = w_[static_cast<std::size_t>(o.w_[i])];
    }
    return AffineElement(std::move(v), std::move(w));
}

AffineElement AffineElement::inverse() const {
    const std::size_t d = rank();
    std::vector<long long> v(d);
    std::vector<int> w(d);
    for (std::size_t i = 0; i < d; ++i)
        w[static_cast<std::size_t>(w_[i])] = static_cast<int>(i);
    // (v,w)^{-1} = (-w^{-1} v, w^{-1}): entry i of w^{-1} v is v_{w(i)}.
    for (std::size_t i = 0; i < d; ++i)
        v[i] = -v_[static_cast<std::size_t>(w_[i])];
    return AffineElement(std::move(v), std::move(w));
}

bool AffineElement::is_translation() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i] != static_cast<int>(i))
            return false;
    return true;
}

std::string AffineElement::str() const {
    std::string out = "t(";
    for (std::size_t i = 0; i < v_.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(v_[i]);
    }
    out += ")[";
    for (std::size_t i = 0; i < w_.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(w_[i] + 1);
    }
    return out + "]";
}

long long length(const AffineElement& e) {
    const auto& v = e.translation();
    const auto& w = e.permutation();
    const std::size_t d = e.rank();
    std::vector<int> winv(d);
    for (std::size_t i = 0; i < d; ++i)
        winv[static_cast<std::size_t>(w[i])] = static_cast<int>(i);
    long long len = 0;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            long long diff = v[i] - v[j];
            len += std::llabs(winv[i] < winv[j] ? diff : diff - 1);
        }
    return len;
}

std::vector<std::size_t> reduced_word(const AffineElement& e) {
    const std::size_t d = e.rank();
    AffineElement u = e * AffineElement::omega_power(d, -e.omega_component());
    std::vector<std::size_t> word;
    long long len = length(u);
    while (len > 0) {
        bool found = false;
        for (std::size_t k = 0; k < d; ++k) {
            AffineElement next = u * AffineElement::simple_reflection(d, k);
            long long nlen = length(next);
            if (nlen < len) {
                word.push_back(k);
                u = std::move(next);
                len = nlen;
                found = true;
                break;
            }
        }
        if (!found)
            throw internal_error("no descent found for a positive-length element");
    }
    std::reverse(word.begin(), word.end());
    return word;
}

namespace {

// Subword test within W_aff, by induction on a right descent of b.
bool waff_leq(const AffineElement& a, const AffineElement& b, long long la, long long lb) {
    if (la > lb)
        return false;
    if (lb == 0)
        return a == b;
    const std::size_t d = b.rank();
    for (std::size_t k = 0; k < d; ++k) {
        AffineElement s = AffineElement::simple_reflection(d, k);
        AffineElement bs = b * s;
        long long lbs = length(bs);
        if (lbs >= lb)
            continue;
        AffineElement as = a * s;
        long long las = length(as);
        if (las < la)
            return waff_leq(as, bs, las, lbs);
        return waff_leq(a, bs, la, lbs);
    }
    throw internal_error("no descent found");
}

} // namespace

bool bruhat_leq(const AffineElement& a, const AffineElement& b) {
    if (a.rank() != b.rank())
        throw invalid_input("rank mismatch in Bruhat comparison");
    if (a.omega_component() != b.omega_component())
        return false;
    const std::size_t d = a.rank();
    AffineElement shift = AffineElement::omega_power(d, -a.omega_component());
    AffineElement ua = a * shift;
    AffineElement ub = b * shift;
    return waff_leq(ua, ub, length(ua), length(ub));
}

AffineElement demazure(const AffineElement& a, const AffineElement& b) {
    if (a.rank() != b.rank())
        throw invalid_input("rank mismatch in Demazure product");
    const std::size_t d = a.rank();
    AffineElement acc = a;
    long long acc_len = length(acc);
    for (std::size_t k : reduced_word(b)) {
        AffineElement next = acc * AffineElement::simple_reflection(d, k);
        long long next_len = length(next);
        if (next_len > acc_len) {
            acc = std::move(next);
            acc_len = next_len;
        }
    }
    return acc * AffineElement::omega_power(d, b.omega_component());
}

const std::set<AffineElement>& BruhatDownCache::down_closure(const AffineElement& e) {
    auto it = memo_.find(e);
    if (it != memo_.end())
        return it->second;
    std::set<AffineElement> down;
    long long len = length(e);
    if (len == 0) {
        down.insert(e);
    } else {
        const std::size_t d = e.rank();
        for (std::size_t k = 0; k < d; ++k) {
            AffineElement s = AffineElement::simple_reflection(d, k);
            AffineElement es = e * s;
            if (length(es) >= len)
                continue;
            // {x <= e} = {x <= es} u {x*s : x <= es}
            const auto& base = down_closure(es);
            down = base;
            for (const auto& x : base)
                down.insert(x * s);
            break;
        }
    }
    return memo_.emplace(e, std::move(down)).first->second;
}

AdmissibleSet admissible_set(const Coweight& lambda) {
    const std::size_t d = lambda.rank();
    if (d == 0)
        throw invalid_input("admissible set needs rank >= 1");
    AdmissibleSet adm;
    adm.d = d;
    adm.lambda = lambda;
    std::vector<long long> perm = lambda.entries();
    std::sort(perm.begin(), perm.end());
    BruhatDownCache cache;
    do {
        const auto& down = cache.down_closure(AffineElement::translation_of(perm));
        adm.elements.insert(down.begin(), down.end());
    } while (std::next_permutation(perm.begin(), perm.end()));
    return adm;
}

AffineElement basic_element(const Coweight& lambda) {
    return AffineElement::omega_power(lambda.rank(), lambda.degree());
}

std::vector<Rational> newton_point(const AffineElement& e) {
    const std::size_t d = e.rank();
    const auto& v = e.translation();
    const auto& w = e.permutation();
    std::vector<char> seen(d, 0);
    std::vector<Rational> slopes;
    for (std::size_t i = 0; i < d; ++i) {
        if (seen[i])
            continue;
        long long sum = 0;
        long long len = 0;
        std::size_t j = i;
        do {
            seen[j] = 1;
            sum += v[j];
            ++len;
            j = static_cast<std::size_t>(w[j]);
        } while (j != i);
        Rational slope(sum, len);
        slopes.insert(slopes.end(), static_cast<std::size_t>(len), slope);
    }
    std::sort(slopes.begin(), slopes.end(), std::greater<>());
    return slopes;
}

Rational pairing_two_rho(const std::vector<Rational>& nu) {
    Rational acc;
    const long long d = static_cast<long long>(nu.size());
    for (long long i = 0; i < d; ++i)
        acc += nu[static_cast<std::size_t>(i)] * Rational(d - 1 - 2 * i);
    return acc;
}

bool is_straight(const std::vector<AffineElement>& tuple) {
    if (tuple.empty())
        throw invalid_input("straightness needs a non-empty tuple");
    AffineElement prod = tuple.front();
    long long total_len = length(tuple.front());
    for (std::size_t a = 1; a < tuple.size(); ++a) {
        prod = prod * tuple[a];
        total_len += length(tuple[a]);
    }
    return Rational(total_len) == pairing_two_rho(newton_point(prod));
}

AdditivityReport check_adm_additivity(const Coweight& lambda1, const Coweight& lambda2) {
    if (lambda1.rank() != lambda2.rank())
        throw invalid_input("rank mismatch in additivity check");
    AdmissibleSet adm1 = admissible_set(lambda1);
    AdmissibleSet adm2 = admissible_set(lambda2);
    AdmissibleSet adm_sum = admissible_set(lambda1 + lambda2);

    std::set<AffineElement> via_products;
    BruhatDownCache cache;
    std::set<AffineElement> demazure_values;
    for (const auto& w1 : adm1.elements)
        for (const auto& w2 : adm2.elements)
            demazure_values.insert(demazure(w1, w2));
    for (const auto& top : demazure_values) {
        const auto& down = cache.down_closure(top);
        via_products.insert(down.begin(), down.end());
    }

    AdditivityReport report;
    std::set_difference(via_products.begin(), via_products.end(), adm_sum.elements.begin(),
                        adm_sum.elements.end(), std::back_inserter(report.only_in_product));
    std::set_difference(adm_sum.elements.begin(), adm_sum.elements.end(), via_products.begin(),
                        via_products.end(), std::back_inserter(report.only_in_adm_sum));
    report.equal = report.only_in_product.empty() && report.only_in_adm_sum.empty();
    return report;
}

} // namespace shtk
