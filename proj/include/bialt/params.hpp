#ifndef BIALT_PARAMS_HPP
#define BIALT_PARAMS_HPP

// The 5-parameter tuples (m,n,a,b,l) behind the xb family: validity conditions,
// the algebraic existence conditions for the gamma/alpha/beta symmetries, and
// the case analysis deciding when a ring-preserving vertex-transitive group
// exists.

#include <string>
#include <vector>

#include "bialt/graph.hpp"

namespace bialt {

// a, b, l are elements of Z_n and reduce at the boundary; inputs may be any
// integers (e.g. b = -4 means n-4).
struct XbParams {
    int m = 0;
    int n = 0;
    int a = 0;
    int b = 0;
    int l = 0;

    static XbParams reduced(int m, int n, long long a, long long b, long long l) {
        XbParams p;
        p.m = m;
        p.n = n;
        if (n > 0) {
            p.a = mod(a, n);
            p.b = mod(b, n);
            p.l = mod(l, n);
        }
        return p;
    }

    int n0() const { return n / 4; }
    int b0() const { return b / 4; }            // valid when 4 | b
    int a0() const { return (a - 1) / 4; }      // valid when a = 1 (mod 4)
    int l0() const { return (l - l % 4) / 4; }  // (l-2)/4 or (l-3)/4 by parity

    std::string str() const {
        return std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(a) + "," +
               std::to_string(b) + "," + std::to_string(l);
    }
};

// All violated validity conditions; empty means the tuple is admissible.
inline std::vector<std::string> validate_xb(const XbParams& p) {
    std::vector<std::string> v;
    if (p.m < 3) v.push_back("m must be at least 3");
    if (p.n < 8) v.push_back("n must be at least 8");
    if (p.n % 4 != 0) {
        v.push_back("n must be divisible by 4");
        return v;  // the remaining conditions need n0
    }
    const int n0 = p.n0();
    if (p.b % 4 != 0) {
        v.push_back("b must be divisible by 4");
    } else {
        const int b0 = p.b0();
        if (b0 < 1 || b0 >= n0)
            v.push_back("b0 = b/4 must satisfy 1 <= b0 < n0");
        else if (gcd_int(n0, b0) != 1)
            v.push_back("gcd(n0, b0) must be 1");
        else if (mod(static_cast<long long>(p.b) * b0 - 4, p.n) != 0)
            v.push_back("b*b0 = 4 (mod n) must hold");
    }
    if (p.a % 4 != 1) {
        v.push_back("a must be 1 (mod 4)");
    } else if (p.b % 4 == 0 &&
               mod(static_cast<long long>(p.b) * p.a0() + p.a - 1, p.n) != 0) {
        v.push_back("b*a0 + a = 1 (mod n) must hold");
    }
    if (p.l % 4 != 2 && p.l % 4 != 3) v.push_back("l must be 2 or 3 (mod 4)");
    return v;
}

inline bool xb_valid(const XbParams& p) { return validate_xb(p).empty(); }

// ---- existence conditions for the named symmetries ----

// gamma exists iff: l odd, b = -4 and a = 2l-1; or l even, (l+2)(b0-1) = 0.
inline bool gamma_condition(const XbParams& p) {
    if (p.l % 2 == 1)
        return mod(p.b + 4, p.n) == 0 && mod(p.a - (2LL * p.l - 1), p.n) == 0;
    return mod(static_cast<long long>(p.l + 2) * (p.b0() - 1), p.n) == 0;
}

// The three cases in which alpha exists (each presumes gamma's condition).
inline bool alpha_condition_odd_odd(const XbParams& p) {
    return p.m % 2 == 1 && p.l % 2 == 1 && mod(p.b + 4, p.n) == 0 &&
           mod(p.a - (2LL * p.l - 1), p.n) == 0;
}

inline bool alpha_condition_odd_even(const XbParams& p) {
    return p.m % 2 == 1 && p.l % 2 == 0 && p.a == 1 && p.b == 4 && p.n0() % 2 == 1 &&
           mod(p.l - (2LL * p.n0() + 2 * p.m - 2), p.n) == 0;
}

inline bool alpha_condition_even_even(const XbParams& p) {
    return p.m % 2 == 0 && p.l % 2 == 0 &&
           mod(2LL * (p.l + 2) - static_cast<long long>(p.m / 2) * (p.b + 4), p.n) == 0;
}

inline bool alpha_condition(const XbParams& p) {
    return gamma_condition(p) && (alpha_condition_odd_odd(p) || alpha_condition_odd_even(p) ||
                                  alpha_condition_even_even(p));
}

// ---- the main classification ----

enum class TheoremCase {
    N4_MobiusOrPrism,
    N8_Xb1,
    N8_Xb2,
    N8_b4,
    OddOdd,
    OddEven,
    EvenEven,
    Invalid,
};

inline const char* to_string(TheoremCase c) {
    switch (c) {
        case TheoremCase::N4_MobiusOrPrism: return "n4_mobius_or_prism";
        case TheoremCase::N8_Xb1: return "n8_xb1";
        case TheoremCase::N8_Xb2: return "n8_xb2";
        case TheoremCase::N8_b4: return "n8_b4";
        case TheoremCase::OddOdd: return "odd_odd";
        case TheoremCase::OddEven: return "odd_even";
        case TheoremCase::EvenEven: return "even_even";
        default: return "invalid";
    }
}

struct CaseResult {
    TheoremCase kind = TheoremCase::Invalid;
    std::string detail;  // matched sub-case, or the first violated condition
};

// Decides whether (m,n,a,b,l) admits a vertex-transitive symmetry group
// preserving the ring 2-factor, and which branch of the classification it
// falls into. Exhaustive and exclusive over all integer inputs.
inline CaseResult classify_theorem_case(int m, int n, long long a_in, long long b_in,
                                        long long l_in) {
    if (m < 3) return {TheoremCase::Invalid, "m must be at least 3"};
    if (n < 4) return {TheoremCase::Invalid, "n must be at least 4"};
    if (n % 4 != 0) return {TheoremCase::Invalid, "n must be divisible by 4"};
    const XbParams p = XbParams::reduced(m, n, a_in, b_in, l_in);

    if (n == 4) {
        if (p.a != 1) return {TheoremCase::Invalid, "n = 4 forces a = 1"};
        if (p.b != 0) return {TheoremCase::Invalid, "n = 4 forces b = 0"};
        if (p.l != 2 && p.l != 3) return {TheoremCase::Invalid, "l must be 2 or 3 (mod 4)"};
        return {TheoremCase::N4_MobiusOrPrism, p.l == 2 ? "l = 2 wiring" : "l = 3 wiring"};
    }

    // n = 8 with (a,b) in {(4,1),(1,5)}: the two exceptional families, which
    // exist exactly when l = 6 and 3 | m.
    if (n == 8 && ((p.a == 4 && p.b == 1) || (p.a == 1 && p.b == 5))) {
        const TheoremCase kind = (p.a == 4) ? TheoremCase::N8_Xb1 : TheoremCase::N8_Xb2;
        if (p.l != 6) return {TheoremCase::Invalid, "n = 8 with this (a,b) requires l = 6"};
        if (m % 3 != 0) return {TheoremCase::Invalid, "n = 8 with this (a,b) requires 3 | m"};
        return {kind, p.a == 4 ? "(a,b) = (4,1)" : "(a,b) = (1,5)"};
    }

    auto viol = validate_xb(p);
    if (!viol.empty()) return {TheoremCase::Invalid, viol.front()};

    if (alpha_condition_odd_odd(p))
        return {n == 8 ? TheoremCase::N8_b4 : TheoremCase::OddOdd,
                "m, l odd with b = -4, a = 2l-1"};
    if (alpha_condition_odd_even(p) && gamma_condition(p))
        return {n == 8 ? TheoremCase::N8_b4 : TheoremCase::OddEven,
                "m odd, l even with a = 1, b = 4, n0 odd, l = 2*n0 + 2m - 2"};
    if (alpha_condition_even_even(p) && gamma_condition(p))
        return {n == 8 ? TheoremCase::N8_b4 : TheoremCase::EvenEven,
                "m, l even with (l+2)(b0-1) = 0 and 2(l+2) = 2m(b0+1)"};

    if (!gamma_condition(p)) return {TheoremCase::Invalid, "gamma condition fails"};
    return {TheoremCase::Invalid, "alpha condition fails"};
}

inline CaseResult classify_theorem_case(const XbParams& p) {
    return classify_theorem_case(p.m, p.n, p.a, p.b, p.l);
}

}  // namespace bialt

#endif
