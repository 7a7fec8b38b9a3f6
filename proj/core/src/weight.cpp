#include "hodgekit/weight.hpp"

#include <algorithm>
#include <stdexcept>

namespace hodgekit {

const Mat &NilpotentFamily::at(std::size_t i) const {
    if (i < 1 || i > mats.size())
        throw std::out_of_range("NilpotentFamily: index " + std::to_string(i) + " out of range");
    return mats[i - 1];
}

Mat NilpotentFamily::cone(const std::vector<std::size_t> &k,
                          const std::vector<Rational> &coeffs) const {
    if (k.size() != coeffs.size())
        throw std::invalid_argument("cone: index set and coefficient list differ in length");
    Mat sum(ambient_dim, ambient_dim);
    for (std::size_t t = 0; t < k.size(); ++t) {
        if (coeffs[t] <= 0) throw std::invalid_argument("cone: coefficients must be positive");
        sum += Scalar(coeffs[t]) * at(k[t]);
    }
    return sum;
}

Report NilpotentFamily::validate() const {
    Report r;
    bool shapes = true;
    for (const auto &m : mats)
        if (m.rows() != ambient_dim || m.cols() != ambient_dim) shapes = false;
    r.add("family_shapes", shapes);
    if (!shapes) return r;
    for (std::size_t i = 0; i < mats.size(); ++i) {
        std::string tag = std::to_string(i + 1);
        r.add("nilpotent_" + tag, is_nilpotent(mats[i]));
        r.add("real_" + tag, mats[i].is_real());
        for (std::size_t j = i + 1; j < mats.size(); ++j)
            r.add("commute_" + tag + "_" + std::to_string(j + 1), commute(mats[i], mats[j]));
    }
    return r;
}

namespace {

void verify_weight_axioms(const Mat &n, int center, const Filtration &w) {
    std::size_t dim = n.rows();
    for (int k = w.lo(); k <= w.hi() + 1; ++k)
        if (!w.level(k - 2).contains(w.level(k).apply(n)))
            throw std::logic_error("weight_filtration: N does not shift the result by -2");
    Mat nk = Mat::identity(dim);
    for (int k = 0; k <= static_cast<int>(dim); ++k) {
        GradedPiece top = w.graded(center + k);
        GradedPiece bot = w.graded(center - k);
        if (top.dim() != bot.dim())
            throw std::logic_error("weight_filtration: graded dimensions are not symmetric");
        if (top.dim() > 0) {
            Mat g = top.induced_map(nk, bot);
            if (rank(g) != top.dim())
                throw std::logic_error("weight_filtration: N^k is not a graded isomorphism");
        }
        nk = n * nk;
    }
}

}  // namespace

Filtration weight_filtration(const Mat &n, int center) {
    if (n.rows() != n.cols()) throw std::invalid_argument("weight_filtration: matrix not square");
    if (!is_nilpotent(n)) throw std::invalid_argument("weight_filtration: matrix not nilpotent");
    int dim = static_cast<int>(n.rows());

    // Powers N^0..N^{dim+1} once; nidx = least q with N^q = 0.
    std::vector<Mat> powers;
    powers.push_back(Mat::identity(n.rows()));
    for (int j = 1; j <= dim + 1; ++j) powers.push_back(n * powers.back());
    int nidx = dim + 1;
    for (int q = 0; q <= dim + 1; ++q)
        if (powers[static_cast<std::size_t>(q)].is_zero()) {
            nidx = q;
            break;
        }

    std::vector<Subspace> kers(static_cast<std::size_t>(nidx) + 1, Subspace::full(n.rows()));
    std::vector<Subspace> ims(static_cast<std::size_t>(nidx) + 1, Subspace::zero(n.rows()));
    for (int q = 0; q < nidx; ++q) {
        kers[static_cast<std::size_t>(q)] = kernel(powers[static_cast<std::size_t>(q)]);
        ims[static_cast<std::size_t>(q)] = image(powers[static_cast<std::size_t>(q)]);
    }

    // ker(N^a) ∩ im(N^b), memoized; a >= nidx means full kernel, b >= nidx
    // means zero image.
    std::map<std::pair<int, int>, Subspace> memo;
    const Subspace zero = Subspace::zero(n.rows());
    auto term = [&](int a, int b) -> const Subspace & {
        if (b >= nidx) return zero;
        if (a >= nidx) return ims[static_cast<std::size_t>(b)];
        if (b == 0) return kers[static_cast<std::size_t>(a)];
        auto it = memo.find({a, b});
        if (it == memo.end())
            it = memo.emplace(std::pair{a, b}, meet(kers[static_cast<std::size_t>(a)],
                                                    ims[static_cast<std::size_t>(b)]))
                     .first;
        return it->second;
    };

    std::map<int, Subspace> levels;
    for (int l = -dim - 1; l <= dim; ++l) {
        Subspace acc = Subspace::zero(n.rows());
        // Beyond j = nidx - 1 the kernel is everything and the image only
        // shrinks, so one extra term covers the whole tail.
        int jlo = std::max(l, 0);
        int jhi = std::min(dim, std::max(nidx - 1, jlo));
        for (int j = jlo; j <= jhi; ++j) {
            const Subspace &t = term(j + 1, std::min(j - l, dim + 1));
            if (t.dim() == 0) continue;
            acc = join(acc, t);
            if (acc.is_full()) break;
        }
        levels.emplace(center + l, acc);
    }
    Filtration w(Direction::increasing, n.rows(), std::move(levels));
    verify_weight_axioms(n, center, w);
    return w;
}

Filtration cone_weight_filtration(const NilpotentFamily &fam, const std::vector<std::size_t> &k,
                                  const std::vector<Rational> &coeffs) {
    if (k.empty()) throw std::invalid_argument("cone_weight_filtration: empty index set");
    return weight_filtration(fam.cone(k, coeffs), 0);
}

std::vector<std::vector<Rational>> default_cone_samples(std::size_t n) {
    static const long primes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29,
                                  31, 37, 41, 43, 47, 53, 59, 61, 67, 71};
    if (n > std::size(primes))
        throw std::invalid_argument("default_cone_samples: index set too large");
    std::vector<std::vector<Rational>> out;
    out.emplace_back(n, Rational(1));
    for (std::size_t rot = 0; rot < 5; ++rot) {
        std::vector<Rational> s(n);
        for (std::size_t t = 0; t < n; ++t) s[t] = Rational(primes[(t + rot) % n]);
        out.push_back(std::move(s));
    }
    return out;
}

std::string ConeIndependence::describe() const {
    if (ok) return "sampled: all cone filtrations agree";
    std::string s = "sampled: filtrations differ at level " + std::to_string(level) +
                    " for coefficients (";
    for (std::size_t t = 0; t < coeffs_a.size(); ++t)
        s += (t ? "," : "") + to_string(coeffs_a[t]);
    s += ") vs (";
    for (std::size_t t = 0; t < coeffs_b.size(); ++t)
        s += (t ? "," : "") + to_string(coeffs_b[t]);
    s += ")";
    return s;
}

ConeIndependence check_ck_independence(const NilpotentFamily &fam,
                                       const std::vector<std::size_t> &k) {
    return check_ck_independence(fam, k, default_cone_samples(k.size()));
}

ConeIndependence check_ck_independence(const NilpotentFamily &fam,
                                       const std::vector<std::size_t> &k,
                                       const std::vector<std::vector<Rational>> &samples) {
    if (samples.empty())
        throw std::invalid_argument("check_ck_independence: empty sample set");
    ConeIndependence res;
    Filtration base = cone_weight_filtration(fam, k, samples.front());
    for (std::size_t s = 1; s < samples.size(); ++s) {
        Filtration other = cone_weight_filtration(fam, k, samples[s]);
        if (other == base) continue;
        res.ok = false;
        res.coeffs_a = samples.front();
        res.coeffs_b = samples[s];
        for (int lvl = base.lo(); lvl <= base.hi(); ++lvl)
            if (base.level(lvl) != other.level(lvl)) {
                res.level = lvl;
                break;
            }
        return res;
    }
    return res;
}

std::string ShiftCheck::describe() const {
    if (ok) return "";
    return "N_" + std::to_string(j) + " does not map level " + std::to_string(level) +
           " into level " + std::to_string(level - 2);
}

ShiftCheck check_lemma1_shift(const NilpotentFamily &fam, const std::vector<std::size_t> &j) {
    std::vector<Rational> ones(j.size(), Rational(1));
    Filtration w = cone_weight_filtration(fam, j, ones);
    ShiftCheck res;
    for (std::size_t idx : j) {
        const Mat &n = fam.at(idx);
        for (int k = w.lo(); k <= w.hi() + 1; ++k) {
            if (!w.level(k - 2).contains(w.level(k).apply(n))) {
                res.ok = false;
                res.j = idx;
                res.level = k;
                return res;
            }
        }
    }
    return res;
}

}  // namespace hodgekit
