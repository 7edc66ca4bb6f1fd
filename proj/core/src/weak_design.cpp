#include "nmx/weak_design.hpp"
#include "nmx/errors.hpp"

namespace nmx {

std::size_t next_prime_at_least(std::size_t n) {
    if (n < 2) return 2;
    auto is_prime = [](std::size_t v) {
        if (v < 2) return false;
        for (std::size_t d = 2; d * d <= v; ++d)
            if (v % d == 0) return false;
        return true;
    };
    while (!is_prime(n)) ++n;
    return n;
}

std::size_t weak_design_positions(std::size_t m, std::size_t l) {
    if (m == 1) return l;
    return l * next_prime_at_least(l);
}

WeakDesign weak_design(std::size_t m, std::size_t l) {
    if (m < 1 || l < 1) throw PlanError("weak_design: m and l must be positive");

    WeakDesign wd;
    wd.m = m;
    wd.l = l;

    if (m == 1) {
        wd.p = 1;
        wd.d_total = l;
        wd.sets.emplace_back();
        for (std::uint32_t i = 1; i <= l; ++i) wd.sets[0].push_back(i);
        return wd;
    }

    std::size_t p = next_prime_at_least(l);
    // Number of coefficient digits: smallest c with p^c >= m. Distinct
    // polynomials of degree < c agree on at most c-1 of the l points; the
    // degree bound is only meaningful while c <= p.
    std::size_t c = 1, span = p;
    while (span < m) {
        span *= p;
        ++c;
    }
    if (c > p)
        throw PlanError("weak_design: m=" + std::to_string(m) + " too large for set size l=" +
                        std::to_string(l) + " (needs polynomial degree >= field size " +
                        std::to_string(p) + ")");

    wd.p = p;
    wd.d_total = l * p;
    wd.sets.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        // Coefficients are the base-p digits of i, lowest digit = constant term.
        std::vector<std::size_t> coeff(c);
        std::size_t v = i;
        for (std::size_t j = 0; j < c; ++j) {
            coeff[j] = v % p;
            v /= p;
        }
        std::vector<std::uint32_t> set;
        set.reserve(l);
        for (std::size_t a = 0; a < l; ++a) {
            std::size_t fa = 0;
            for (std::size_t j = c; j-- > 0;) fa = (fa * a + coeff[j]) % p;
            set.push_back(static_cast<std::uint32_t>(fa * l + a + 1));
        }
        wd.sets.push_back(std::move(set));
    }
    return wd;
}

} // namespace nmx
