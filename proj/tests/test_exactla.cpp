#include <doctest.h>
#include <hodgekit/graded.hpp>
#include <hodgekit/subspace.hpp>

#include "generators.hpp"

using namespace hodgekit;

static Vec v2(long a, long b) { return Vec{Scalar(a), Scalar(b)}; }

TEST_CASE("scalar arithmetic and wire grammar") {
    CHECK(parse_scalar("1/2") == Scalar(Rational(1, 2)));
    CHECK(parse_scalar("2/4") == Scalar(Rational(1, 2)));
    CHECK(to_string(parse_scalar("2/4")) == "1/2");
    CHECK(to_string(Scalar(Rational(0), Rational(-1))) == "-i");
    CHECK(parse_scalar("-i") == Scalar(Rational(0), Rational(-1)));
    Scalar z = parse_scalar("1/2+3/4*i");
    CHECK(z.re == Rational(1, 2));
    CHECK(z.im == Rational(3, 4));
    CHECK(to_string(z) == "1/2+3/4*i");
    CHECK(parse_scalar("0").is_zero());
    CHECK_THROWS_AS(parse_scalar("1..2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_scalar("1 + i"), std::invalid_argument);

    CHECK(Scalar::imaginary_unit() * Scalar::imaginary_unit() == Scalar(-1));
    CHECK(imaginary_power(-1) == Scalar(Rational(0), Rational(-1)));
    CHECK(imaginary_power(6) == Scalar(-1));
}

TEST_CASE("matrix basics") {
    Mat n = gen::jordan_block(3);
    CHECK(is_nilpotent(n));
    CHECK(pow(n, 3).is_zero());
    CHECK(rank(n) == 2);
    CHECK(det(Mat::identity(4)) == Scalar(1));
    Mat g(2, 2);
    g(0, 0) = Scalar(1);
    g(0, 1) = Scalar(2);
    g(1, 0) = Scalar(3);
    g(1, 1) = Scalar(4);
    CHECK(det(g) == Scalar(-2));
    CHECK((*inverse(g)) * g == Mat::identity(2));
    CHECK(exp_nilpotent(Mat::zero(2, 2)) == Mat::identity(2));
    // exp(N)·exp(−N) = 1 for the commuting (trivially) pair
    Mat e = exp_nilpotent(n), einv = exp_nilpotent(-n);
    CHECK(e * einv == Mat::identity(3));
}

TEST_CASE("span collapses dependent vectors and is idempotent") {
    CHECK(Subspace::span({}, 3).is_zero());
    Subspace s = Subspace::span({v2(1, 0), v2(2, 0)}, 2);
    CHECK(s.dim() == 1);
    CHECK(Subspace::span({s.basis_vector(0)}, 2) == s);
    Subspace full = Subspace::span({Vec{Scalar(1), Scalar::imaginary_unit()}, v2(0, 1)}, 2);
    CHECK(full.is_full());
}

TEST_CASE("meet and join with dimension formula") {
    Subspace e1 = Subspace::span({v2(1, 0)}, 2);
    Subspace e2 = Subspace::span({v2(0, 1)}, 2);
    CHECK(meet(e1, e2).is_zero());
    CHECK(join(e1, e2).is_full());
    Subspace diag = Subspace::span({v2(1, 1)}, 2);
    CHECK(meet(diag, join(e1, e2)) == diag);

    gen::Rng rng(7);
    for (int t = 0; t < 50; ++t) {
        std::size_t n = 1 + t % 6;
        Subspace s = image(gen::rand_real_mat(rng, n, 1 + rng() % n));
        Subspace u = image(gen::rand_real_mat(rng, n, 1 + rng() % n));
        CHECK(meet(s, u).dim() + join(s, u).dim() == s.dim() + u.dim());
    }
}

TEST_CASE("modular law for nested subspaces") {
    gen::Rng rng(11);
    for (int t = 0; t < 50; ++t) {
        std::size_t n = 2 + t % 5;
        Subspace s = image(gen::rand_real_mat(rng, n, 1 + rng() % n));
        Subspace tt = image(gen::rand_real_mat(rng, n, 1 + rng() % n));
        Subspace u = join(s, image(gen::rand_real_mat(rng, n, 1 + rng() % n)));
        CHECK(join(s, meet(tt, u)) == meet(join(s, tt), u));
    }
}

TEST_CASE("conjugation is involutive") {
    Subspace c = Subspace::span({Vec{Scalar(1), Scalar::imaginary_unit()}}, 2);
    CHECK(c.conj() == Subspace::span({Vec{Scalar(1), -Scalar::imaginary_unit()}}, 2));
    CHECK(Subspace::span({v2(1, 0)}, 2).conj() == Subspace::span({v2(1, 0)}, 2));
    gen::Rng rng(13);
    for (int t = 0; t < 100; ++t) {
        std::size_t n = 1 + t % 6;
        Mat m = gen::rand_real_mat(rng, n, 1 + rng() % n);
        for (std::size_t i = 0; i < m.rows(); ++i)
            m(i, 0) += Scalar(Rational(0), gen::rand_rational(rng));
        Subspace s = image(m);
        CHECK(s.conj().conj() == s);
    }
}

TEST_CASE("quotients and induced maps") {
    GradedPiece all = GradedPiece::quotient(Subspace::full(2), Subspace::zero(2));
    CHECK(all.dim() == 2);
    Subspace e1 = Subspace::span({v2(1, 0)}, 2);
    GradedPiece q = GradedPiece::quotient(Subspace::full(2), e1);
    CHECK(q.dim() == 1);
    CHECK(q.image_coords(Subspace::span({v2(1, 1)}, 2)).dim() == 1);
    Mat n = gen::jordan_block(2);  // e2 ↦ e1
    CHECK(q.induced_endo(n).is_zero());
    // coord·lift = identity on every random presentation
    CHECK(q.coord() * q.lift() == Mat::identity(1));
}
