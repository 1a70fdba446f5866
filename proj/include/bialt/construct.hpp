#ifndef BIALT_CONSTRUCT_HPP
#define BIALT_CONSTRUCT_HPP

// Builders for every graph family: the n = 4 ladders, the 5-parameter xb
// family, the two exceptional n = 8 families, and honeycomb toroidal graphs
// for cross-checking.

#include <numeric>
#include <sstream>

#include "bialt/cycles.hpp"
#include "bialt/graph.hpp"
#include "bialt/params.hpp"

namespace bialt {

struct BuildError : std::invalid_argument {
    std::vector<std::string> violations;
    explicit BuildError(const std::string& what, std::vector<std::string> v = {})
        : std::invalid_argument(what), violations(std::move(v)) {}
};

// xb(m,n,a,b,l): rings of length n, links
//   v(i, 2i+4j0+d) ~ v(i+1, 2i+b*j0+d*a)       for 0 <= i < m-1,
// and wrap-around jumps
//   v(m-1, 2(m-1)+4j0+d) ~ v(0, l+b*j0+d*a)    when l is even,
//   v(m-1, 2(m-1)+4j0+d) ~ v(0, l-b*j0-d*a)    when l is odd,
// for 0 <= j0 < n/4 and d in {0,1}.
inline FactorGraph build_xb(const XbParams& p_in) {
    const XbParams p = XbParams::reduced(p_in.m, p_in.n, p_in.a, p_in.b, p_in.l);
    auto viol = validate_xb(p);
    if (!viol.empty()) {
        std::ostringstream os;
        os << "build_xb(" << p.str() << "): invalid parameters";
        for (const auto& v : viol) os << "; " << v;
        throw BuildError(os.str(), viol);
    }
    const int m = p.m, n = p.n, n0 = p.n0();
    std::vector<OutsideEdge> out;
    out.reserve(m * n / 2);
    auto fl = [&](long long i, long long j) { return mod(i, m) * n + mod(j, n); };
    for (int i = 0; i + 1 < m; ++i)
        for (int j0 = 0; j0 < n0; ++j0)
            for (int d = 0; d < 2; ++d)
                out.push_back({fl(i, 2 * i + 4 * j0 + d),
                               fl(i + 1, 2 * i + static_cast<long long>(p.b) * j0 + d * p.a),
                               EdgeClass::link});
    for (int j0 = 0; j0 < n0; ++j0)
        for (int d = 0; d < 2; ++d) {
            const int u = fl(m - 1, 2 * (m - 1) + 4 * j0 + d);
            const long long off = static_cast<long long>(p.b) * j0 + d * p.a;
            const int v = (p.l % 2 == 0) ? fl(0, p.l + off) : fl(0, p.l - off);
            out.push_back({u, v, EdgeClass::jump});
        }
    return FactorGraph(m, n, "xb(" + p.str() + ")", out);
}

inline FactorGraph build_xb(int m, int n, long long a, long long b, long long l) {
    return build_xb(XbParams::reduced(m, n, a, b, l));
}

namespace detail {

// The two n = 4 wirings; which one is the prism depends on the parity of m,
// so callers select by bipartiteness.
inline FactorGraph build_ladder(int m, int l, const std::string& label) {
    const int n = 4;
    std::vector<OutsideEdge> out;
    auto fl = [&](long long i, long long j) { return mod(i, m) * n + mod(j, n); };
    for (int i = 0; i + 1 < m; ++i)
        for (int d = 0; d < 2; ++d)
            out.push_back({fl(i, 2 * i + d), fl(i + 1, 2 * i + d), EdgeClass::link});
    for (int d = 0; d < 2; ++d)
        out.push_back({fl(m - 1, 2 * (m - 1) + d), fl(0, l % 2 == 0 ? l + d : l - d),
                       EdgeClass::jump});
    return FactorGraph(m, n, label, out);
}

}  // namespace detail

enum class LadderKind { mobius, prism };

// The order-4m Mobius ladder or prism, presented on m rings of length 4.
// Exactly one of the two wrap wirings is bipartite; that one is the prism.
inline FactorGraph build_mobius_or_prism(int m, LadderKind kind) {
    if (m < 3) throw BuildError("build_mobius_or_prism: m must be at least 3");
    const std::string label =
        (kind == LadderKind::prism ? "prism(" : "mobius(") + std::to_string(m) + ")";
    FactorGraph g2 = detail::build_ladder(m, 2, label);
    const bool g2_bip = is_bipartite(g2);
    if ((kind == LadderKind::prism) == g2_bip) return g2;
    FactorGraph g3 = detail::build_ladder(m, 3, label);
    if (is_bipartite(g3) == g2_bip)
        throw std::logic_error("build_mobius_or_prism: wirings have equal bipartiteness");
    return g3;
}

// xb1(m), 3 | m: the exceptional n = 8 family with (a,b) = (4,1).
inline FactorGraph build_xb1(int m) {
    if (m < 3 || m % 3 != 0) throw BuildError("build_xb1: m must be divisible by 3");
    const int n = 8;
    std::vector<OutsideEdge> out;
    auto fl = [&](long long i, long long j) { return mod(i, m) * n + mod(j, n); };
    for (int i = 0; i + 1 < m; ++i)
        for (int d = 0; d < 2; ++d) {
            out.push_back({fl(i, 2 * i + d), fl(i + 1, 2 * i + 4 * d), EdgeClass::link});
            out.push_back({fl(i, 2 * i + 4 + d), fl(i + 1, 2 * i + 1 + 4 * d), EdgeClass::link});
        }
    for (int d = 0; d < 2; ++d) {
        out.push_back({fl(m - 1, 2 * (m - 1) + d), fl(0, 6 + 4 * d), EdgeClass::jump});
        out.push_back({fl(m - 1, 2 * (m - 1) + 4 + d), fl(0, 7 + 4 * d), EdgeClass::jump});
    }
    return FactorGraph(m, n, "xb1(" + std::to_string(m) + ")", out);
}

// xb2(m), 3 | m: the exceptional n = 8 family with (a,b) = (1,5).
inline FactorGraph build_xb2(int m) {
    if (m < 3 || m % 3 != 0) throw BuildError("build_xb2: m must be divisible by 3");
    const int n = 8;
    std::vector<OutsideEdge> out;
    auto fl = [&](long long i, long long j) { return mod(i, m) * n + mod(j, n); };
    for (int i = 0; i + 1 < m; ++i)
        for (int d = 0; d < 2; ++d) {
            out.push_back({fl(i, 2 * i + d), fl(i + 1, 2 * i + d), EdgeClass::link});
            out.push_back({fl(i, 2 * i + 4 + d), fl(i + 1, 2 * i + 5 - d), EdgeClass::link});
        }
    for (int d = 0; d < 2; ++d) {
        out.push_back({fl(m - 1, 2 * (m - 1) + d), fl(0, 6 + d), EdgeClass::jump});
        out.push_back({fl(m - 1, 2 * (m - 1) + 4 + d), fl(0, 3 - d), EdgeClass::jump});
    }
    return FactorGraph(m, n, "xb2(" + std::to_string(m) + ")", out);
}

// Honeycomb toroidal graph htg(m,n,l) under the convention: m columns, each
// an n-cycle; horizontal edges (i,j)~(i+1,j) exactly when i+j is even; wrap
// edges (m-1,j)~(0,j+l) exactly when m-1+j is even. Requires n even and
// m + l even, otherwise some vertex would miss its horizontal edge.
inline FactorGraph build_htg(int m, int n, long long l_in) {
    if (m < 2) throw BuildError("build_htg: m must be at least 2");
    if (n < 4 || n % 2 != 0) throw BuildError("build_htg: n must be even and at least 4");
    const int l = mod(l_in, n);
    if ((m + l) % 2 != 0)
        throw BuildError("build_htg: m + l must be even");
    std::vector<OutsideEdge> out;
    auto fl = [&](long long i, long long j) { return mod(i, m) * n + mod(j, n); };
    for (int i = 0; i + 1 < m; ++i)
        for (int j = 0; j < n; ++j)
            if ((i + j) % 2 == 0) out.push_back({fl(i, j), fl(i + 1, j), EdgeClass::link});
    for (int j = 0; j < n; ++j)
        if ((m - 1 + j) % 2 == 0) out.push_back({fl(m - 1, j), fl(0, j + l), EdgeClass::jump});
    std::ostringstream label;
    label << "htg(" << m << "," << n << "," << l << ")";
    return FactorGraph(m, n, label.str(), out);
}

// Dispatch used by the command-line front end.
inline FactorGraph build_family(const std::string& family, const std::vector<long long>& params) {
    auto need = [&](size_t k) {
        if (params.size() != k)
            throw BuildError("family '" + family + "' takes " + std::to_string(k) +
                             " parameter(s)");
    };
    if (family == "xb") {
        need(5);
        return build_xb(static_cast<int>(params[0]), static_cast<int>(params[1]), params[2],
                        params[3], params[4]);
    }
    if (family == "xb1") {
        need(1);
        return build_xb1(static_cast<int>(params[0]));
    }
    if (family == "xb2") {
        need(1);
        return build_xb2(static_cast<int>(params[0]));
    }
    if (family == "mobius") {
        need(1);
        return build_mobius_or_prism(static_cast<int>(params[0]), LadderKind::mobius);
    }
    if (family == "prism") {
        need(1);
        return build_mobius_or_prism(static_cast<int>(params[0]), LadderKind::prism);
    }
    if (family == "htg") {
        need(3);
        return build_htg(static_cast<int>(params[0]), static_cast<int>(params[1]), params[2]);
    }
    throw BuildError("unknown family '" + family + "'");
}

}  // namespace bialt

#endif
