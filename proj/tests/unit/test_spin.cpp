#include <doctest.h>

#include <cmath>

#include "framelab/rng.hpp"
#include "framelab/spin.hpp"

using namespace framelab;

namespace {

struct ContractionRow {
    double s, minus, plus, k3;
};

// Generated by tests/oracles/spin_oracle.py (exact arithmetic), n <= 3.
const ContractionRow kContraction[] = {
    {200, 0.012216982613999461183, 0.012216982613999461183, 0.019900497512437810945},
    {400, 0.0061160888023586824819, 0.0061160888023586824819, 0.0099750623441396508728},
    {800, 0.0030599509044574756660, 0.0030599509044574756660, 0.0049937578027465667915},
};

}  // namespace

TEST_CASE("spin representations satisfy the su(2) relations") {
    for (double s : {0.5, 1.0, 1.5, 4.0, 12.5}) {
        const SpinRep r = build_rep(s);
        CHECK(r.dim() == static_cast<int>(2 * s + 1));
        const AlgebraDefect d = algebra_defect(r);
        CHECK(d.raising < 1e-12);
        CHECK(d.ladder < 1e-12);
        CHECK(d.casimir < 1e-12 * s * s + 1e-13);
    }
    CHECK(build_rep(1.5).index_of(-1.5) == 3);
    CHECK_THROWS_AS(build_rep(0.7), DomainError);
    CHECK_THROWS_AS(build_rep(1.5).index_of(2.5), DomainError);
}

TEST_CASE("coherent vectors: base point, normalization, <S> = -s n") {
    const SpinRep r = build_rep(2.5);
    const Eigen::VectorXcd v = spin_cs_vector(r, 0.0, 0.3);
    CHECK(std::abs(std::abs(v(r.index_of(-2.5))) - 1.0) < 1e-15);
    for (double th : {0.4, 1.7, 3.0}) {
        const Eigen::VectorXcd h = spin_cs_vector(r, th, 0.9);
        CHECK(h.norm() == doctest::Approx(1.0).epsilon(1e-14));
        const Eigen::Vector3d n = sphere_point(th, 0.9);
        const double s3 = h.dot(r.S3.cast<cplx>() * h).real();
        const double s1 = h.dot(r.S1() * h).real();
        CHECK(s3 == doctest::Approx(-2.5 * n(2)).epsilon(1e-12));
        CHECK(s1 == doctest::Approx(-2.5 * n(0)).epsilon(1e-12));
    }
}

TEST_CASE("overlap law and antipodal orthogonality") {
    Rng rng(3);
    for (double s : {0.5, 2.0, 3.5}) {
        const SpinRep r = build_rep(s);
        for (int i = 0; i < 20; ++i) {
            const double t1 = std::acos(rng.uniform(-1, 1)), p1 = rng.uniform(0, 2 * pi);
            const double t2 = std::acos(rng.uniform(-1, 1)), p2 = rng.uniform(0, 2 * pi);
            const double law = std::pow((1 + sphere_point(t1, p1).dot(sphere_point(t2, p2))) / 2, 2 * s);
            CHECK(std::norm(spin_cs_vector(r, t1, p1).dot(spin_cs_vector(r, t2, p2))) ==
                  doctest::Approx(law).epsilon(1e-12));
        }
        const auto a = spin_cs_vector(r, 0.7, 1.1), b = spin_cs_vector(r, pi - 0.7, 1.1 + pi);
        CHECK(std::abs(a.dot(b)) < 1e-14);
    }
}

TEST_CASE("resolutions of unity converge once the quadrature is exact") {
    for (double s : {0.5, 1.5, 2.5}) {
        const SpinRep r = build_rep(s);
        const ResolutionReport sph = sphere_resolution_check(r, 16);
        CHECK(sph.defect < 1e-13);
        CHECK(sph.measure == doctest::Approx(4 * pi).epsilon(1e-13));
        CHECK(holo_resolution_check(r, 32, 16).defect < 1e-12);
    }
    // Too few nodes: a visible defect.
    CHECK(sphere_resolution_check(build_rep(2.5), 2).defect > 1e-3);
}

TEST_CASE("holomorphic expectations and stereographic label") {
    const SpinRep r = build_rep(1.5);
    for (cplx z : {cplx(0.6, -0.3), cplx(-2.0, 1.0), cplx(0.0, 0.0)}) {
        const SpinExpectations e = spin_expectations(r, z), c = spin_expectations_closed(1.5, z);
        CHECK(std::abs(e.s_plus - c.s_plus) < 1e-12);
        CHECK(e.s3 == doctest::Approx(c.s3).epsilon(1e-12));
        CHECK(e.length_sq == doctest::Approx(2.25).epsilon(1e-12));
    }
}

TEST_CASE("oscillator evolution rotates the label") {
    const SpinRep r = build_rep(1.5);
    const cplx z(0.6, -0.3);
    for (double t : {0.3, pi, 5.0}) {
        const OscillatorResult o = oscillator_evolve(r, z, t);
        CHECK(o.mismatch < 1e-12);
        CHECK(std::abs(o.zeta_t - std::exp(I * t) * z) < 1e-14);
        CHECK(std::abs(o.phase) == doctest::Approx(1.0).epsilon(1e-14));
    }
}

TEST_CASE("contraction defects against exact values") {
    for (const auto& row : kContraction) {
        const ContractionDefect d = contraction_defect(row.s, 3);
        CHECK(d.minus.maxCoeff() == doctest::Approx(row.minus).epsilon(1e-10));
        CHECK(d.plus.maxCoeff() == doctest::Approx(row.plus).epsilon(1e-10));
        CHECK(d.k3.maxCoeff() == doctest::Approx(row.k3).epsilon(1e-10));
    }
    CHECK(nminus_limit(200, 3).cwiseAbs().maxCoeff() < 1e-12);
    CHECK_THROWS_AS(contraction_defect(2, 3), DomainError);
}
