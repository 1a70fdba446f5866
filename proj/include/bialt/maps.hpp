#ifndef BIALT_MAPS_HPP
#define BIALT_MAPS_HPP

// The named symmetries of the xb family, built as explicit permutations from
// their closed-form coordinate formulas. Whether each one actually is an
// automorphism of the graph is a separate check (see the *_condition
// predicates in params.hpp); the builders here only transcribe formulas.

#include "bialt/construct.hpp"
#include "bialt/params.hpp"
#include "bialt/perm.hpp"

namespace bialt {

namespace detail {

// Writes every image slot exactly once; an unwritten or doubly-written slot
// means a formula transcription bug, so fail hard.
class ImageFiller {
  public:
    ImageFiller(int m, int n) : m_(m), n_(n), img_(m * n, -1) {}

    void set(long long i, long long j, long long ti, long long tj) {
        int src = mod(i, m_) * n_ + mod(j, n_);
        int dst = mod(ti, m_) * n_ + mod(tj, n_);
        if (img_[src] != -1) throw std::logic_error("image slot written twice");
        img_[src] = dst;
    }

    std::vector<int> take() {
        for (int x : img_)
            if (x == -1) throw std::logic_error("image slot never written");
        return std::move(img_);
    }

  private:
    int m_, n_;
    std::vector<int> img_;
};

}  // namespace detail

// gamma: v(i,j) -> v(i+1, j+2) for i < m-1; the wrap onto ring 0 is
// v(m-1,j) -> v(0, l+j-2(m-2)) for l even and v(0, l-j+2(m-2)) for l odd.
inline Perm gamma_of(const XbParams& p) {
    detail::ImageFiller f(p.m, p.n);
    for (int i = 0; i + 1 < p.m; ++i)
        for (int j = 0; j < p.n; ++j) f.set(i, j, i + 1, j + 2);
    for (int j = 0; j < p.n; ++j) {
        if (p.l % 2 == 0)
            f.set(p.m - 1, j, 0, p.l + j - 2LL * (p.m - 2));
        else
            f.set(p.m - 1, j, 0, p.l - j + 2LL * (p.m - 2));
    }
    return Perm(f.take(), "gamma");
}

// alpha: swaps rings 0 and 1 pointwise; ring m-2i+eps maps onto ring 2i-eps+1
// with position offsets depending on the parity of l. For l odd the map is
// only consistent when m is odd.
inline Perm alpha_of(const XbParams& p) {
    if (p.l % 2 == 1 && p.m % 2 == 0)
        throw std::domain_error("alpha_of: l odd requires m odd");
    detail::ImageFiller f(p.m, p.n);
    for (int j = 0; j < p.n; ++j) {
        f.set(0, j, 1, j);
        f.set(1, j, 0, j);
    }
    for (int t = 1; t <= p.m - 2; ++t) {  // t = 2i - eps
        const int i = (t + 1) / 2;
        const int eps = (t % 2 == 0) ? 0 : 1;
        const int src = p.m - 2 * i + eps;
        const int dst = 2 * i - eps + 1;
        for (int j = 0; j < p.n; ++j) {
            if (p.l % 2 == 0)
                f.set(src, 2LL * src + j, dst, p.l + 2 + 2LL * eps - static_cast<long long>(i) * p.b + j);
            else
                f.set(src, 2LL * src + j, dst, p.l + 4LL * i + 2LL * (eps - 1) - j);
        }
    }
    return Perm(f.take(), "alpha");
}

// beta: for m odd (l even) the reflection v(i,j) -> v(i,1-j); for m even the
// ring-preserving reflection v(2i+eps, j) -> v(2i+eps, eps(a-1)+1+i(4-b)-j).
inline Perm beta_of(const XbParams& p) {
    if (p.m % 2 == 1 && p.l % 2 == 1)
        throw std::domain_error("beta_of: not defined for m, l both odd");
    detail::ImageFiller f(p.m, p.n);
    if (p.m % 2 == 1) {
        for (int i = 0; i < p.m; ++i)
            for (int j = 0; j < p.n; ++j) f.set(i, j, i, 1LL - j);
    } else {
        for (int i = 0; i < p.m / 2; ++i)
            for (int eps = 0; eps < 2; ++eps)
                for (int j = 0; j < p.n; ++j)
                    f.set(2 * i + eps, j, 2 * i + eps,
                          static_cast<long long>(eps) * (p.a - 1) + 1 +
                              static_cast<long long>(i) * (4 - p.b) - j);
    }
    return Perm(f.take(), "beta");
}

// rho = alpha*gamma, the element acting on ring 0 as the 2-step rotation
// j -> j+2. Throws if the product does not restrict to that rotation, which
// would signal a transcribed-formula bug.
inline Perm rho_of(const FactorGraph& g, const Perm& alpha, const Perm& gamma) {
    Perm rho = compose(alpha, gamma, "rho");
    const int n = g.ring_length();
    for (int j = 0; j < n; ++j)
        if (rho(g.flat(0, j)) != g.flat(0, j + 2))
            throw std::logic_error("rho_of: alpha*gamma is not the 2-step rotation on ring 0");
    return rho;
}

enum class N8Kind { xb1, xb2 };

// Generators {gamma, phi0, phi1, alpha} for the two exceptional n = 8
// families, each certified against the graph before being returned.
//
// phi0 rotates every third ring by 4 steps and reflects the others; its
// reflection constant on rings 3k+1, 3k+2 is 1+4k for xb1 and 5+4k for xb2.
// phi1 is the conjugate gamma*phi0*gamma^-1, rotating rings 3k+1 instead.
// alpha swaps rings 0 and 1 pointwise and pairs the remaining rings as
//   v(m-3i+eps, j) -> v(3i+1-eps, 2m0+4i+j)   for eps in {0,1},
//   v(m-3i+eps, j) -> v(3i-1, c-2m0-j)        for eps = 2,
// where m = 3*m0 and c is 1 for xb1, 5 for xb2.
inline std::vector<Perm> n8_exceptional_gens(N8Kind kind, int m) {
    if (m < 3 || m % 3 != 0)
        throw BuildError("n8_exceptional_gens: m must be divisible by 3");
    const int n = 8;
    const int m0 = m / 3;
    const int c = (kind == N8Kind::xb1) ? 1 : 5;
    const FactorGraph g = (kind == N8Kind::xb1) ? build_xb1(m) : build_xb2(m);

    const Perm gamma = gamma_of(XbParams::reduced(m, n, kind == N8Kind::xb1 ? 4 : 1,
                                                  kind == N8Kind::xb1 ? 1 : 5, 6));

    detail::ImageFiller f0(m, n);
    for (int r = 0; r < m; ++r) {
        const int k = r / 3;
        for (int j = 0; j < n; ++j) {
            if (r % 3 == 0)
                f0.set(r, j, r, j + 4);
            else
                f0.set(r, j, r, c + 4LL * k - j);
        }
    }
    const Perm phi0(f0.take(), "phi0");
    Perm phi1 = compose(compose(gamma, phi0), gamma.inverse(), "phi1");

    detail::ImageFiller fa(m, n);
    for (int j = 0; j < n; ++j) {
        fa.set(0, j, 1, j);
        fa.set(1, j, 0, j);
    }
    for (int t = 1; t <= m - 2; ++t) {  // t = 3i - eps
        int i, eps;
        if (t % 3 == 0) {
            i = t / 3;
            eps = 0;
        } else if (t % 3 == 2) {
            i = (t + 1) / 3;
            eps = 1;
        } else {
            i = (t + 2) / 3;
            eps = 2;
        }
        const int src = m - 3 * i + eps;
        for (int j = 0; j < n; ++j) {
            if (eps < 2)
                fa.set(src, j, 3 * i + 1 - eps, 2LL * m0 + 4LL * i + j);
            else
                fa.set(src, j, 3 * i - 1, c - 2LL * m0 - j);
        }
    }
    const Perm alpha(fa.take(), "alpha");

    std::vector<Perm> gens{gamma, phi0, phi1, alpha};
    for (const auto& perm : gens) {
        auto chk = check_automorphism(g, perm);
        if (!chk.ok)
            throw std::logic_error("n8_exceptional_gens: " + perm.label +
                                   " failed certification");
    }
    return gens;
}

}  // namespace bialt

#endif
