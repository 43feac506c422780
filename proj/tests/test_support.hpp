#ifndef CFA_TEST_SUPPORT_HPP
#define CFA_TEST_SUPPORT_HPP

#include <cstdint>
#include <cstdlib>
#include <string>

#include "cfa/dpoly.hpp"
#include "cfa/grassmann.hpp"
#include "cfa/scalar.hpp"

namespace test_support {

/// splitmix64; deterministic across platforms so frozen expectations hold.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}
    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    /// Small scalar in {-3..3} + i{-1..1}, biased towards real values.
    cfa::Scalar scalar() {
        long re = static_cast<long>(next() % 7) - 3;
        long im = (next() % 4 == 0) ? static_cast<long>(next() % 3) - 1 : 0;
        return cfa::Scalar(cfa::Rational(re), cfa::Rational(im));
    }

private:
    uint64_t state_;
};

/// CFA_SEED pins every randomized suite; the offset decorrelates test cases.
inline uint64_t seed_from_env(uint64_t offset) {
    const char* s = std::getenv("CFA_SEED");
    uint64_t base = 0x5eed5eed5eedull;
    if (s && *s) base = std::strtoull(s, nullptr, 0);
    return base + offset;
}

inline cfa::DPoly random_dpoly(Rng& rng, int max_deg) {
    std::vector<cfa::Scalar> c;
    int deg = static_cast<int>(rng.next() % static_cast<uint64_t>(max_deg + 1));
    for (int k = 0; k <= deg; ++k) c.push_back(rng.scalar());
    return cfa::DPoly(c);
}

inline cfa::GrassmannElement random_grassmann_homogeneous(Rng& rng, int n) {
    int deg = static_cast<int>(rng.next() % static_cast<uint64_t>(n + 1));
    cfa::GrassmannElement e(n);
    for (int tries = 0; tries < 3; ++tries) {
        uint32_t mask = 0;
        int need = deg;
        for (int i = n; i >= 1 && need > 0; --i) {
            if (static_cast<int>(rng.next() % i) < need) {
                mask |= 1u << (i - 1);
                --need;
            }
        }
        e += cfa::GrassmannElement::monomial(n, mask, rng.scalar());
    }
    return e;
}

}  // namespace test_support

#endif
