#include <doctest.h>
#include <hodgekit/refinement.hpp>

#include "generators.hpp"

using namespace hodgekit;

static Vec unit(std::size_t n, std::size_t i) {
    Vec v(n);
    v[i] = Scalar(1);
    return v;
}

TEST_CASE("m_of inverts phi on its window") {
    IndexMap id = IndexMap::identity_map();
    for (int k = -4; k <= 4; ++k) CHECK(m_of(id, k) == k);

    IndexMap phi(std::map<int, int>{{0, 0}, {1, 2}});
    CHECK(m_of(phi, 1) == 1);
    CHECK(m_of(phi, 2) == 1);
    CHECK(m_of(phi, 0) == 0);

    gen::Rng rng(5);
    for (int t = 0; t < 100; ++t) {
        std::map<int, int> vals;
        int x = -3 + static_cast<int>(rng() % 3);
        for (int m = -2; m <= 2; ++m) {
            vals[m] = x;
            x += 1 + static_cast<int>(rng() % 3);
        }
        IndexMap p(vals);
        for (int k = vals.begin()->second - 2; k <= vals.rbegin()->second + 2; ++k) {
            int m = m_of(p, k);
            CHECK(p(m - 1) < k);
            CHECK(k <= p(m));
        }
    }
}

static Refinement dim2_example() {
    std::map<int, Subspace> w;
    w.emplace(-1, Subspace::zero(2));
    w.emplace(0, Subspace::span({unit(2, 0)}, 2));
    w.emplace(1, Subspace::full(2));
    std::map<int, Subspace> m;
    m.emplace(-1, Subspace::zero(2));
    m.emplace(0, Subspace::span({unit(2, 0)}, 2));
    m.emplace(1, Subspace::span({unit(2, 0)}, 2));
    m.emplace(2, Subspace::full(2));
    Refinement r;
    r.base = Filtration(Direction::increasing, 2, w);
    r.fine = Filtration(Direction::increasing, 2, m);
    r.phi = IndexMap(std::map<int, int>{{-1, -1}, {0, 0}, {1, 2}});
    return r;
}

TEST_CASE("validate_refinement") {
    Refinement r = dim2_example();
    CHECK(validate_refinement(r).all_pass());

    // identity refinement
    Refinement triv;
    triv.base = r.base;
    triv.fine = r.base;
    triv.phi = IndexMap::identity_map();
    CHECK(validate_refinement(triv).all_pass());

    // break the interpolation identity: M_{phi(0)} != W_0
    Refinement bad = r;
    bad.phi = IndexMap(std::map<int, int>{{-1, -1}, {0, 1}, {1, 2}});
    // phi(0)=1 still hits M_1 = <e1> = W_0, so break harder: shift W
    std::map<int, Subspace> w2 = bad.base.stored_levels();
    w2.at(0) = Subspace::full(2);
    w2.at(-1) = Subspace::span({unit(2, 0)}, 2);
    bad.base = Filtration(Direction::increasing, 2, w2);
    CHECK_FALSE(validate_refinement(bad).all_pass());
}

TEST_CASE("refinement isomorphisms on the dim-2 example") {
    Refinement r = dim2_example();
    std::map<int, Subspace> fl;
    fl.emplace(0, Subspace::full(2));
    fl.emplace(1, Subspace::span({unit(2, 1)}, 2));
    fl.emplace(2, Subspace::zero(2));
    Filtration f(Direction::decreasing, 2, fl);

    RefinementIso iso = refinement_iso(r, f, 2, 1);
    CHECK(iso.dim == 1);
    CHECK(iso.pentagon_ok);
    RefinementIso iso0 = refinement_iso(r, f, 0, 0);
    CHECK(iso0.dim == 1);
    CHECK(iso0.pentagon_ok);
}

TEST_CASE("identity refinement gives identity maps") {
    gen::Rng rng(31);
    gen::FlagTriple t = gen::rand_flag_triple(rng, 4);
    Refinement triv;
    triv.base = t.r.fine;
    triv.fine = t.r.fine;
    triv.phi = IndexMap::identity_map();
    for (int k = triv.fine.lo(); k <= triv.fine.hi(); ++k)
        for (int p = t.f.lo(); p <= t.f.hi(); ++p) {
            RefinementIso iso = refinement_iso(triv, t.f, k, p);
            if (iso.dim == 0) continue;
            CHECK(iso.map1 == Mat::identity(iso.dim));
            CHECK(iso.pentagon_ok);
        }
}

TEST_CASE("random pentagons commute") {
    gen::Rng rng(41);
    for (int t = 0; t < 25; ++t) {
        std::size_t n = 2 + t % 5;
        gen::FlagTriple ft = gen::rand_flag_triple(rng, n);
        REQUIRE(validate_refinement(ft.r).all_pass());
        for (int k = ft.r.fine.lo(); k <= ft.r.fine.hi(); ++k)
            for (int p = ft.f.lo(); p <= ft.f.hi(); ++p) {
                RefinementIso iso = refinement_iso(ft.r, ft.f, k, p);
                if (iso.dim == 0) continue;
                CHECK(iso.pentagon_ok);
            }
    }
}
