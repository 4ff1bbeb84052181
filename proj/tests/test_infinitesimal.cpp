#include <catch2/catch_amalgamated.hpp>

#include <suq/corep.hpp>
#include <suq/infinitesimal.hpp>

#include <cmath>
#include <complex>
#include <limits>
#include <string>

using namespace suq;

namespace {

double entry_gap(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

} // namespace

TEST_CASE("ladder constants match their defining formulas", "[infinitesimal]") {
    for (double q0 : {0.3, 0.5, 0.9}) {
        REQUIRE(inf_d(1, q0) == 1.0);          // (q^{-2} - 1)/(q^{-2} - 1)
        REQUIRE(inf_d(0, q0) == 0.0);
        for (long n = 0; n <= 8; ++n) {
            REQUIRE(inf_c(-n, n, q0) == 0.0);     // bottom of the string
            REQUIRE(inf_c(n + 2, n, q0) == 0.0);  // above the top
        }
        for (long k = -3; k <= 5; ++k) REQUIRE(inf_c(k, 4, q0) > 0.0);
    }
    // hand value: n = 1, k = 1 gives sqrt((q^{-1}-q)^2)/(q^{-2}-1)
    double q0 = 0.5;
    double expect = (2.0 - 0.5) / (4.0 - 1.0);
    REQUIRE(std::abs(inf_c(1, 1, q0) - expect) < 1e-15);
}

TEST_CASE("trivial string gives three zero matrices", "[infinitesimal]") {
    InfSystem s = inf_build(0, 0.5);
    REQUIRE(s.dim == 1);
    REQUIRE(s.a0.rows() == 1);
    REQUIRE(s.a0(0, 0) == std::complex<double>(0.0, 0.0));
    REQUIRE(s.a1(0, 0) == std::complex<double>(0.0, 0.0));
    REQUIRE(s.a2(0, 0) == std::complex<double>(0.0, 0.0));

    InfVerifyReport rep = inf_verify(s, 1e-9);
    REQUIRE(rep.ok);
    for (double r : rep.residuals) REQUIRE(r == 0.0);
}

TEST_CASE("canonical systems satisfy the five relations", "[infinitesimal]") {
    for (double q0 : {0.3, 0.5, 0.9}) {
        for (long n = 0; n <= 8; ++n) {
            InfSystem s = inf_build(n, q0);
            REQUIRE(s.dim == static_cast<std::size_t>(n) + 1);
            InfVerifyReport rep = inf_verify(s, 1e-9);
            INFO("n=" << n << " q0=" << q0
                      << " max residual=" << rep.max_residual());
            REQUIRE(rep.ok);
        }
    }
}

TEST_CASE("index reading is selected by verification, not trusted",
          "[infinitesimal]") {
    // On non-trivial strings the literal unit-step reading of the printed
    // constants breaks the adjoint pairing (and the first q-commutator), as
    // does the half-index reading; only the step-2 weight-label reading
    // satisfies all five relations.  The build records the survivor.
    REQUIRE(inf_build(0, 0.5).convention == "unit-step literal");
    for (long n = 1; n <= 8; ++n)
        REQUIRE(inf_build(n, 0.5).convention == "step-2 weight label");

    for (long n = 1; n <= 4; ++n) {
        InfSystem lit = detail::build_candidate(
            n, 0.5, detail::LadderReading::unit_step);
        InfVerifyReport lrep = inf_verify(lit, 1e-9);
        REQUIRE(!lrep.ok);
        REQUIRE(lrep.residuals[3] > 1e-3); // -q A0^* = A2 badly violated

        InfSystem half = detail::build_candidate(
            n, 0.5, detail::LadderReading::half_index);
        REQUIRE(!inf_verify(half, 1e-9).ok);
    }
}

TEST_CASE("ladder structure: raising, lowering, endpoint annihilation",
          "[infinitesimal]") {
    for (long n = 1; n <= 6; ++n) {
        InfSystem s = inf_build(n, 0.5);
        auto d = static_cast<Eigen::Index>(s.dim);
        for (Eigen::Index i = 0; i < d; ++i)
            for (Eigen::Index j = 0; j < d; ++j) {
                if (i == j + 1) {
                    REQUIRE(s.a0(i, j).real() < 0.0); // raising coefficients
                    REQUIRE(s.a0(i, j).imag() == 0.0);
                } else {
                    REQUIRE(s.a0(i, j) == std::complex<double>(0.0, 0.0));
                }
                if (i + 1 == j) {
                    REQUIRE(s.a2(i, j).real() > 0.0); // lowering coefficients
                    REQUIRE(s.a2(i, j).imag() == 0.0);
                } else {
                    REQUIRE(s.a2(i, j) == std::complex<double>(0.0, 0.0));
                }
                if (i != j) REQUIRE(s.a1(i, j) == std::complex<double>(0.0, 0.0));
            }
        // top vector annihilated by the raising operator, bottom by lowering
        REQUIRE(s.a0.col(d - 1).cwiseAbs().maxCoeff() == 0.0);
        REQUIRE(s.a2.col(0).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("diagonal entries are pairwise separated", "[infinitesimal]") {
    // d_k is strictly increasing in the weight, so the diagonal is pairwise
    // distinct everywhere.
    for (double q0 : {0.3, 0.5, 0.9}) {
        for (long n = 1; n <= 8; ++n) {
            InfSystem s = inf_build(n, q0);
            auto d = static_cast<Eigen::Index>(s.dim);
            for (Eigen::Index i = 0; i + 1 < d; ++i)
                REQUIRE(s.a1(i, i).real() < s.a1(i + 1, i + 1).real());
        }
    }
    // A quantitative floor of 1e-6 on the gaps holds on most of the grid but
    // not all of it: at the deep negative weights d_k approaches the limit
    // -1/(q^{-2}-1) geometrically, so at q0 = 0.3 the bottom gap is
    // q^{2n-4}(1-q^4)/(q^{-2}-1), which sinks under 1e-6 once n >= 7.
    auto min_gap = [](long n, double q0) {
        InfSystem s = inf_build(n, q0);
        double gap = std::numeric_limits<double>::infinity();
        auto d = static_cast<Eigen::Index>(s.dim);
        for (Eigen::Index i = 0; i + 1 < d; ++i)
            gap = std::min(gap,
                           s.a1(i + 1, i + 1).real() - s.a1(i, i).real());
        return gap;
    };
    for (double q0 : {0.5, 0.9})
        for (long n = 1; n <= 8; ++n) REQUIRE(min_gap(n, q0) > 1e-6);
    for (long n = 1; n <= 6; ++n) REQUIRE(min_gap(n, 0.3) > 1e-6);
    REQUIRE(min_gap(7, 0.3) < 1e-6); // the documented collapse
}

TEST_CASE("perturbing the system trips the residuals", "[infinitesimal]") {
    InfSystem s = inf_build(2, 0.5);
    s.a1(0, 0) += 1e-3;
    InfVerifyReport rep = inf_verify(s, 1e-9);
    REQUIRE(!rep.ok);
    REQUIRE(rep.residuals[1] >= 1e-4); // the diagonal-ladder commutator

    InfSystem t = inf_build(3, 0.5);
    t.a2.setZero();
    InfVerifyReport rep2 = inf_verify(t, 1e-9);
    REQUIRE(!rep2.ok);
    REQUIRE(rep2.residuals[0] > 1e-3);
    REQUIRE(rep2.residuals[3] > 1e-3);
}

TEST_CASE("commutant of a canonical system is one-dimensional",
          "[infinitesimal]") {
    for (long n = 0; n <= 6; ++n)
        REQUIRE(inf_commutant_dim(inf_build(n, 0.5)) == 1);
    for (double q0 : {0.3, 0.9})
        for (long n = 0; n <= 4; ++n)
            REQUIRE(inf_commutant_dim(inf_build(n, q0)) == 1);
}

TEST_CASE("self-equivalence returns a scalar matrix", "[infinitesimal]") {
    for (long n = 0; n <= 4; ++n) {
        InfSystem s = inf_build(n, 0.5);
        auto t = inf_equivalent(s, s, 1e-8);
        REQUIRE(t.has_value());
        std::complex<double> c = (*t)(0, 0);
        REQUIRE(std::abs(c) > 0.1);
        Eigen::MatrixXcd id =
            Eigen::MatrixXcd::Identity(t->rows(), t->cols());
        REQUIRE(entry_gap(*t, c * id) < 1e-8);
    }
}

TEST_CASE("canonical and exact-route systems are equivalent",
          "[infinitesimal]") {
    for (long n = 0; n <= 4; ++n) {
        Corep u = corep_build(n);
        InfSystem imported = inf_import(amatrices(u), 0.5);
        InfSystem canonical = inf_build(n, 0.5);

        // the diagonals agree on the nose: position j carries weight 2j - n
        // on both sides
        REQUIRE(entry_gap(imported.a1, canonical.a1) <
                1e-9 * std::max(1.0, imported.a1.cwiseAbs().maxCoeff()));

        auto t = inf_equivalent(canonical, imported, 1e-7);
        REQUIRE(t.has_value());
        REQUIRE(detail::relation_residual(canonical, imported, *t) <= 1e-7);
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(*t);
        const auto& sv = svd.singularValues();
        REQUIRE(sv(sv.size() - 1) > 1e-6 * sv(0)); // genuinely invertible
    }
}

TEST_CASE("inequivalent systems are rejected", "[infinitesimal]") {
    // dimension mismatch admits no invertible intertwiner
    REQUIRE(!inf_equivalent(inf_build(1, 0.5), inf_build(2, 0.5), 1e-8)
                 .has_value());

    // same dimension, but the lowering operator's sign is flipped: the
    // commutant of {A0, A1} is scalar, and no scalar intertwines A2 with -A2
    InfSystem s = inf_build(2, 0.5);
    InfSystem flipped = s;
    flipped.a2 = -flipped.a2;
    REQUIRE(!inf_equivalent(s, flipped, 1e-8).has_value());

    // differing deformation values violate the precondition
    REQUIRE_THROWS_AS(inf_equivalent(inf_build(1, 0.5), inf_build(1, 0.3), 1e-8),
                      std::invalid_argument);
}

TEST_CASE("argument guards", "[infinitesimal]") {
    REQUIRE_THROWS_AS(inf_build(-1, 0.5), std::invalid_argument);
    REQUIRE_THROWS_AS(inf_build(2, 0.0), std::invalid_argument);
    REQUIRE_THROWS_AS(inf_build(2, 1.0), std::invalid_argument);
    REQUIRE_THROWS_AS(inf_build(2, 1.5), std::invalid_argument);

    std::array<ScalarMatrix, 3> bad{ScalarMatrix(2, 2), ScalarMatrix(2, 2),
                                    ScalarMatrix(2, 3)};
    REQUIRE_THROWS_AS(inf_import(bad, 0.5), std::invalid_argument);
}
