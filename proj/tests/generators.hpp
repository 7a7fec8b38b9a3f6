#pragma once

// Model builders shared by the unit and acceptance suites. Everything is
// seeded explicitly so failures reproduce.

#include <hodgekit/local_model.hpp>
#include <hodgekit/mixed_model.hpp>
#include <numeric>
#include <random>

namespace hodgekit::gen {

using Rng = std::mt19937;

inline Rational rand_rational(Rng &rng, long lo = -3, long hi = 3) {
    std::uniform_int_distribution<long> num(lo, hi);
    std::uniform_int_distribution<long> den(1, 3);
    return Rational(num(rng), den(rng));
}

inline Mat rand_real_mat(Rng &rng, std::size_t r, std::size_t c, long lo = -3, long hi = 3) {
    Mat m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = Scalar(rand_rational(rng, lo, hi));
    return m;
}

/// Random invertible real matrix as (unit lower)·(unit upper), so no
/// rejection loop is needed.
inline Mat rand_invertible(Rng &rng, std::size_t n) {
    // Integer entries keep the denominators of everything built on top
    // (inverses, conjugates, graded lifts) from blowing up.
    std::uniform_int_distribution<long> entry(-2, 2);
    Mat l = Mat::identity(n), u = Mat::identity(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i > j) l(i, j) = Scalar(Rational(entry(rng)));
            if (i < j) u(i, j) = Scalar(Rational(entry(rng)));
        }
    return l * u;
}

/// Lower-shift Jordan block: e_i ↦ e_{i−1}, e_0 ↦ 0 (0-based columns).
inline Mat jordan_block(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 1; i < n; ++i) m(i - 1, i) = Scalar(1);
    return m;
}

/// Block-diagonal nilpotent from a partition of its total dimension.
inline Mat nilpotent_from_partition(const std::vector<std::size_t> &parts) {
    std::size_t n = std::accumulate(parts.begin(), parts.end(), std::size_t{0});
    Mat m(n, n);
    std::size_t off = 0;
    for (std::size_t s : parts) {
        for (std::size_t i = 1; i < s; ++i) m(off + i - 1, off + i) = Scalar(1);
        off += s;
    }
    return m;
}

/// All partitions of n, each as a non-increasing list.
inline std::vector<std::vector<std::size_t>> partitions(std::size_t n) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    auto rec = [&](auto &&self, std::size_t rest, std::size_t maxpart) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (std::size_t p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

/// The standard weight-(n−1) model on a single Jordan block:
/// F^p = ⟨e_p..e_{n−1}⟩ and S(e_i, e_j) = (−1)^i when i + j = n − 1.
inline PureLocalModel jordan_model(std::size_t n) {
    PureLocalModel m;
    m.fam.ambient_dim = n;
    m.fam.mats = {jordan_block(n)};
    std::map<int, Subspace> levels;
    for (std::size_t p = 0; p <= n; ++p) {
        std::vector<Vec> span;
        for (std::size_t i = p; i < n; ++i) {
            Vec v(n);
            v[i] = Scalar(1);
            span.push_back(v);
        }
        levels.emplace(static_cast<int>(p), Subspace::span(span, n));
    }
    m.f = Filtration(Direction::decreasing, n, std::move(levels));
    Mat gram(n, n);
    for (std::size_t i = 0; i < n; ++i) gram(i, n - 1 - i) = Scalar((i % 2 == 0) ? 1 : -1);
    m.weight = static_cast<int>(n) - 1;
    m.s = PolarizationForm{std::move(gram), m.weight};
    return m;
}

/// Tensor product model: families act factorwise, F convolves, S is the
/// Kronecker product, weights add.
inline PureLocalModel tensor_model(const PureLocalModel &a, const PureLocalModel &b) {
    std::size_t da = a.dim(), db = b.dim(), n = da * db;
    PureLocalModel m;
    m.fam.ambient_dim = n;
    for (const Mat &na : a.fam.mats) m.fam.mats.push_back(kron(na, Mat::identity(db)));
    for (const Mat &nb : b.fam.mats) m.fam.mats.push_back(kron(Mat::identity(da), nb));

    int lo = a.f.lo() + b.f.lo(), hi = a.f.hi() + b.f.hi();
    std::map<int, Subspace> levels;
    for (int p = lo; p <= hi; ++p) {
        Subspace total = Subspace::zero(n);
        for (int q = a.f.lo(); q <= a.f.hi(); ++q) {
            const Subspace &fa = a.f.level(q);
            const Subspace &fb = b.f.level(p - q);
            std::vector<Vec> span;
            for (std::size_t i = 0; i < fa.dim(); ++i)
                for (std::size_t j = 0; j < fb.dim(); ++j) {
                    Mat prod = kron(Mat::from_cols({fa.basis_vector(i)}, da),
                                    Mat::from_cols({fb.basis_vector(j)}, db));
                    span.push_back(prod.col(0));
                }
            total = join(total, Subspace::span(span, n));
        }
        levels.emplace(p, total);
    }
    m.f = Filtration(Direction::decreasing, n, std::move(levels));
    m.weight = a.weight + b.weight;
    m.s = PolarizationForm{kron(a.s.gram, b.s.gram), m.weight};
    return m;
}

/// Conjugated copy: N ↦ gNg^{-1}, F ↦ gF, S(u,v) ↦ S(g^{-1}u, g^{-1}v).
inline PureLocalModel conjugate_model(const PureLocalModel &m, const Mat &g) {
    Mat gi = *inverse(g);
    PureLocalModel out = m;
    for (Mat &n : out.fam.mats) n = g * n * gi;
    out.f = m.f.apply(g);
    out.s.gram = gi.transpose() * m.s.gram * gi;
    return out;
}

/// The documented family where the cone filtration depends on the
/// coefficients: N_1: e3 ↦ e1, N_2: e4 ↦ e1 on dim 4.
inline NilpotentFamily non_ck_family() {
    NilpotentFamily fam;
    fam.ambient_dim = 4;
    Mat n1(4, 4), n2(4, 4);
    n1(0, 2) = Scalar(1);
    n2(0, 3) = Scalar(1);
    fam.mats = {n1, n2};
    return fam;
}

/// Random (W, M refining W, F) on a dim-n space, built from two random
/// full flags; M interpolates the first flag and W picks a subchain.
struct FlagTriple {
    Refinement r;
    Filtration f;
};

inline Filtration rand_decreasing_filtration(Rng &rng, std::size_t n) {
    Mat g = rand_invertible(rng, n);
    // random jump positions: cuts[p] = dim F^p, weakly decreasing
    std::uniform_int_distribution<int> steps(0, 2);
    std::map<int, Subspace> levels;
    std::size_t d = n;
    int p = 0;
    levels.emplace(p - 1, Subspace::full(n));
    while (d > 0) {
        std::vector<Vec> span;
        for (std::size_t i = 0; i < d; ++i) span.push_back(g.col(n - 1 - i));
        levels.emplace(p, Subspace::span(span, n));
        d -= std::min<std::size_t>(d, 1 + steps(rng));
        ++p;
    }
    levels.emplace(p, Subspace::zero(n));
    return Filtration(Direction::decreasing, n, std::move(levels));
}

inline FlagTriple rand_flag_triple(Rng &rng, std::size_t n) {
    Mat g = rand_invertible(rng, n);
    // full flag M_0 = 0 ⊂ M_1 ⊂ ... ⊂ M_n = V from g's columns
    std::map<int, Subspace> mlevels;
    for (std::size_t k = 0; k <= n; ++k) {
        std::vector<Vec> span;
        for (std::size_t i = 0; i < k; ++i) span.push_back(g.col(i));
        mlevels.emplace(static_cast<int>(k), Subspace::span(span, n));
    }
    Filtration m(Direction::increasing, n, mlevels);

    // W = subchain of M through random cut indices c_0 < ... < c_r = n
    std::vector<int> cuts;
    std::uniform_int_distribution<int> coin(0, 1);
    for (std::size_t k = 0; k < n; ++k)
        if (coin(rng)) cuts.push_back(static_cast<int>(k));
    cuts.push_back(static_cast<int>(n));

    std::map<int, Subspace> wlevels;
    std::map<int, int> phi;
    for (std::size_t i = 0; i < cuts.size(); ++i) {
        wlevels.emplace(static_cast<int>(i), mlevels.at(cuts[i]));
        phi[static_cast<int>(i)] = cuts[i];
    }
    // anchor the bottom at zero so the saturated ends of W and M agree
    if (cuts[0] > 0) {
        wlevels.emplace(-1, Subspace::zero(n));
        phi[-1] = 0;
    }

    FlagTriple t;
    t.r.base = Filtration(Direction::increasing, n, std::move(wlevels));
    t.r.fine = std::move(m);
    t.r.phi = IndexMap(std::move(phi));
    t.f = rand_decreasing_filtration(rng, n);
    return t;
}

/// Random pure model: a conjugated Jordan/tensor model with small data.
inline PureLocalModel rand_pure_model(Rng &rng, std::size_t max_block = 3,
                                      std::size_t factors = 1) {
    std::uniform_int_distribution<std::size_t> bs(1, max_block);
    PureLocalModel m = jordan_model(bs(rng));
    for (std::size_t i = 1; i < factors; ++i) m = tensor_model(m, jordan_model(bs(rng)));
    return conjugate_model(m, rand_invertible(rng, m.dim()));
}

/// Random mixed model: block-diagonal pure pieces placed at distinct W
/// levels, conjugated by a W-preserving unipotent map so the graded data
/// (and its grams) are untouched.
inline MixedLocalModel rand_mixed_model(Rng &rng, std::size_t directions,
                                        std::size_t max_pieces = 3,
                                        std::size_t max_block = 2) {
    std::uniform_int_distribution<std::size_t> np(1, max_pieces);
    std::size_t pieces = np(rng);
    std::vector<PureLocalModel> parts;
    std::uniform_int_distribution<std::size_t> bs(1, max_block);
    std::size_t n = 0;
    for (std::size_t i = 0; i < pieces; ++i) {
        PureLocalModel p = jordan_model(bs(rng));
        for (std::size_t d = 1; d < directions; ++d) p = tensor_model(p, jordan_model(bs(rng)));
        if (!parts.empty() && n + p.dim() > 8) break;  // keep the total dimension small
        n += p.dim();
        parts.push_back(std::move(p));
    }

    NilpotentFamily fam;
    fam.ambient_dim = n;
    for (std::size_t d = 0; d < directions; ++d) fam.mats.push_back(Mat(n, n));
    std::map<int, Subspace> wlevels;
    int flo = 0, fhi = 0;
    for (const auto &p : parts) {
        flo = std::min(flo, p.f.lo());
        fhi = std::max(fhi, p.f.hi());
    }
    std::map<int, Subspace> flevels;
    for (int q = flo; q <= fhi; ++q) flevels.emplace(q, Subspace::zero(n));

    std::map<int, Mat> pairings;
    std::map<int, int> weights;
    std::size_t off = 0;
    std::uniform_int_distribution<int> gap(1, 2);
    int level = 0;
    Subspace accum = Subspace::zero(n);
    wlevels.emplace(level - 1, accum);
    for (std::size_t b = 0; b < parts.size(); ++b) {
        const PureLocalModel &p = parts[b];
        std::size_t d = p.dim();
        for (std::size_t dir = 0; dir < directions; ++dir)
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j)
                    fam.mats[dir](off + i, off + j) = p.fam.mats[dir](i, j);
        for (int q = flo; q <= fhi; ++q) {
            const Subspace &fq = p.f.level(q);
            std::vector<Vec> span;
            for (std::size_t i = 0; i < fq.dim(); ++i) {
                Vec v(n);
                Vec w = fq.basis_vector(i);
                for (std::size_t c = 0; c < d; ++c) v[off + c] = w[c];
                span.push_back(v);
            }
            flevels.at(q) = join(flevels.at(q), Subspace::span(span, n));
        }
        std::vector<Vec> span;
        for (std::size_t c = 0; c < d; ++c) {
            Vec v(n);
            v[off + c] = Scalar(1);
            span.push_back(v);
        }
        accum = join(accum, Subspace::span(span, n));
        wlevels.emplace(level, accum);
        pairings[level] = p.s.gram;
        weights[level] = p.weight;
        off += d;
        if (b + 1 < parts.size()) level += gap(rng);
    }

    Filtration f(Direction::decreasing, n, std::move(flevels));
    Filtration w(Direction::increasing, n, std::move(wlevels));

    // W-preserving unipotent change of basis: block upper triangular with
    // identity diagonal in the level ordering (rows = earlier levels).
    Mat g = Mat::identity(n);
    std::size_t roff = 0;
    for (std::size_t a = 0; a < parts.size(); ++a) {
        std::size_t coff = roff + parts[a].dim();
        for (std::size_t b2 = a + 1; b2 < parts.size(); ++b2) {
            for (std::size_t i = 0; i < parts[a].dim(); ++i)
                for (std::size_t j = 0; j < parts[b2].dim(); ++j)
                    g(roff + i, coff + j) = Scalar(rand_rational(rng, -2, 2));
            coff += parts[b2].dim();
        }
        roff += parts[a].dim();
    }
    fam.ambient_dim = n;
    Mat gi = *inverse(g);
    for (Mat &nm : fam.mats) nm = g * nm * gi;
    f = f.apply(g);
    w = w.apply(g);
    return make_mixed(std::move(fam), std::move(f), std::move(w), pairings, weights);
}

/// A quotient that tautologically satisfies the zero-composite
/// hypothesis: full projection onto the top Hodge index (nothing maps
/// into the top gr_F block, so every composite through it vanishes).
inline QuotientTarget top_block_quotient(const MixedLocalModel &mx) {
    int ptop = mx.f.lo();
    for (int p = mx.f.lo(); p <= mx.f.hi() + 1; ++p)
        if (mx.f.graded(p).dim() > 0) ptop = p;
    QuotientTarget a;
    a.dim = mx.f.graded(ptop).dim();
    a.blocks[ptop] = Mat::identity(a.dim);
    return a;
}

}  // namespace hodgekit::gen
