#pragma once

// Corepresentation calculus. A corepresentation is a square matrix U =
// (u_{j,k}) over the algebra satisfying Delta(u_{j,k}) = sum_m u_{j,m} (x)
// u_{m,k}, with (iota (x) S)U a two-sided inverse and (iota (x) eps)U = I.
// The family U_n is built on the span of {gamma*^n, alpha gamma*^(n-1), ...,
// alpha^n} (ascending alpha-power) by grouping the comultiplication of each
// basis vector by its left tensor leg. From U we extract the three scalar
// A-matrices (entrywise chi values), the weight function through the circle
// morphism, and intertwiner spaces by exact rational linear algebra at a
// fixed rational parameter value.

#include "algmatrix.hpp"
#include "dual.hpp"
#include "oracle.hpp"
#include "ratmatrix.hpp"
#include "scalarmatrix.hpp"
#include "weights.hpp"

#include <array>
#include <optional>

namespace suq {

struct Corep {
    std::size_t dim = 0;
    AlgMatrix u;
    // carrier-basis labels; filled by corep_build, empty for derived coreps
    std::vector<BasisIndex> basis_labels;
};

// U_n: group Delta(alpha^k gamma*^(n-k)) by left basis monomial. Every left
// leg must be alpha^j gamma*^(n-j); anything else is an internal error.
inline Corep corep_build(long n) {
    if (n < 0) throw std::invalid_argument("corep_build: negative label");
    Corep U;
    U.dim = static_cast<std::size_t>(n + 1);
    U.u = AlgMatrix(U.dim, U.dim);
    for (long j = 0; j <= n; ++j) U.basis_labels.push_back(BasisIndex{j, n - j, 0});
    for (long k = 0; k <= n; ++k) {
        TensorElement d = detail::delta_basis(BasisIndex{k, n - k, 0});
        for (auto& [key, c] : d.terms()) {
            const BasisIndex& left = key.first;
            if (left.m != 0 || left.k < 0 || left.k > n || left.n != n - left.k)
                throw std::logic_error("corep_build: left tensor leg escapes the carrier space");
            U.u.at(static_cast<std::size_t>(left.k), static_cast<std::size_t>(k)) +=
                AlgebraElement::monomial(key.second, c);
        }
    }
    return U;
}

struct CorepCheckReport {
    bool corep_eq = false;         // Delta(u_{j,k}) = sum_m u_{j,m} (x) u_{m,k}
    bool antipode_inverse = false; // S applied entrywise gives a two-sided inverse
    bool counit_unit = false;      // eps applied entrywise gives the identity
    bool all() const { return corep_eq && antipode_inverse && counit_unit; }
};

inline CorepCheckReport corep_check(const Corep& U) {
    CorepCheckReport rep;
    std::size_t d = U.dim;
    rep.corep_eq = true;
    for (std::size_t j = 0; j < d && rep.corep_eq; ++j)
        for (std::size_t k = 0; k < d && rep.corep_eq; ++k) {
            TensorElement rhs;
            for (std::size_t m = 0; m < d; ++m)
                rhs += TensorElement::simple(U.u.at(j, m), U.u.at(m, k));
            if (delta(U.u.at(j, k)) != rhs) rep.corep_eq = false;
        }
    AlgMatrix s(d, d);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) s.at(j, k) = antipode(U.u.at(j, k));
    AlgMatrix id = AlgMatrix::identity(d);
    rep.antipode_inverse = (s * U.u == id) && (U.u * s == id);
    rep.counit_unit = true;
    for (std::size_t j = 0; j < d && rep.counit_unit; ++j)
        for (std::size_t k = 0; k < d && rep.counit_unit; ++k)
            if (counit(U.u.at(j, k)) != Scalar(j == k ? 1 : 0)) rep.counit_unit = false;
    return rep;
}

inline Corep corep_dsum(const Corep& a, const Corep& b) {
    Corep r;
    r.dim = a.dim + b.dim;
    r.u = AlgMatrix(r.dim, r.dim);
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j) r.u.at(i, j) = a.u.at(i, j);
    for (std::size_t i = 0; i < b.dim; ++i)
        for (std::size_t j = 0; j < b.dim; ++j) r.u.at(a.dim + i, a.dim + j) = b.u.at(i, j);
    return r;
}

// (U (x) V)_{(i,k),(j,l)} = u_{i,j} v_{k,l}, row-major pairing (i,k) -> i*dimV + k
inline Corep corep_tensor(const Corep& a, const Corep& b) {
    Corep r;
    r.dim = a.dim * b.dim;
    r.u = AlgMatrix(r.dim, r.dim);
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t k = 0; k < b.dim; ++k)
            for (std::size_t j = 0; j < a.dim; ++j)
                for (std::size_t l = 0; l < b.dim; ++l)
                    r.u.at(i * b.dim + k, j * b.dim + l) = a.u.at(i, j) * b.u.at(k, l);
    return r;
}

// A_t = (iota (x) chi_t) U, entrywise functional evaluation
inline std::array<ScalarMatrix, 3> amatrices(const Corep& U) {
    std::array<Functional, 3> chi = {Functional::named(Named::chi0),
                                     Functional::named(Named::chi1),
                                     Functional::named(Named::chi2)};
    std::array<ScalarMatrix, 3> out = {ScalarMatrix(U.dim, U.dim), ScalarMatrix(U.dim, U.dim),
                                       ScalarMatrix(U.dim, U.dim)};
    for (std::size_t i = 0; i < U.dim; ++i)
        for (std::size_t j = 0; j < U.dim; ++j)
            for (int t = 0; t < 3; ++t) out[static_cast<std::size_t>(t)].at(i, j) = chi[static_cast<std::size_t>(t)](U.u.at(i, j));
    return out;
}

// closed form of the A_0 subdiagonal for U_n: -q^(n-k-2)(1-q^(-2(n-k)))/(1-q^(-2))
inline ScalarMatrix a0_closed_form(long n) {
    ScalarMatrix m(static_cast<std::size_t>(n + 1), static_cast<std::size_t>(n + 1));
    for (long k = 0; k < n; ++k)
        m.at(static_cast<std::size_t>(k + 1), static_cast<std::size_t>(k)) =
            -Scalar::q_pow(n - k - 2) * (Scalar(1) - Scalar::q_pow(-2 * (n - k))) /
            (Scalar(1) - Scalar::q_pow(-2));
    return m;
}

// closed form of the A_1 diagonal for U_n: q^2(q^(2(n-2k))-1)/(1-q^2)
inline ScalarMatrix a1_closed_form(long n) {
    ScalarMatrix m(static_cast<std::size_t>(n + 1), static_cast<std::size_t>(n + 1));
    for (long k = 0; k <= n; ++k)
        m.at(static_cast<std::size_t>(k), static_cast<std::size_t>(k)) =
            Scalar::q_pow(2) * (Scalar::q_pow(2 * (n - 2 * k)) - Scalar(1)) /
            (Scalar(1) - Scalar::q_pow(2));
    return m;
}

namespace detail {

// constant-integer extraction; nullopt when the scalar is not a constant integer
inline std::optional<long> scalar_to_integer(const Scalar& s) {
    if (s.is_zero()) return 0L;
    if (!(s.den() == UPoly::one()) || s.num().degree() != 0) return std::nullopt;
    Rational c = s.num().coeff(0);
    if (denominator(c) != 1) return std::nullopt;
    return static_cast<long>(numerator(c));
}

} // namespace detail

// Push U to the circle: (iota (x) pi)U = sum_k P_k z^k. The corepresentation
// equation forces {P_k} to be an exact resolution of the identity (pairwise
// orthogonal idempotents summing to I); the weight of k is trace(P_k).
inline WeightFunction corep_weights(const Corep& U) {
    std::map<long, ScalarMatrix> family;
    for (std::size_t i = 0; i < U.dim; ++i)
        for (std::size_t j = 0; j < U.dim; ++j) {
            CirclePoly p = pi_map(U.u.at(i, j));
            for (auto& [e, c] : p.terms()) {
                auto [it, fresh] = family.try_emplace(e, ScalarMatrix(U.dim, U.dim));
                it->second.at(i, j) = c;
            }
        }
    ScalarMatrix sum(U.dim, U.dim), zero(U.dim, U.dim);
    for (auto& [k, pk] : family) {
        for (auto& [l, pl] : family) {
            ScalarMatrix prod = pk * pl;
            if (k == l ? prod != pk : prod != zero)
                throw std::domain_error(
                    "corep_weights: circle image is not a spectral family (input is not a "
                    "corepresentation)");
        }
        sum = sum + pk;
    }
    if (sum != ScalarMatrix::identity(U.dim))
        throw std::domain_error("corep_weights: spectral projections do not sum to the identity");
    WeightFunction w;
    for (auto& [k, pk] : family) {
        Scalar tr;
        for (std::size_t i = 0; i < U.dim; ++i) tr += pk.at(i, i);
        auto m = detail::scalar_to_integer(tr);
        if (!m || *m < 0) throw std::domain_error("corep_weights: non-natural multiplicity");
        if (*m > 0) w.add(k, *m);
    }
    return w;
}

// Basis of {T : A_t^U T = T A_t^V, t = 0,1,2} over the rationals at q = q0.
inline std::vector<RatMatrix> intertwiners(const Corep& U, const Corep& V,
                                           const Rational& q0 = Rational(1, 2)) {
    if (!(q0 > 0 && q0 < 1)) throw std::invalid_argument("intertwiners: need 0 < q0 < 1");
    std::array<ScalarMatrix, 3> au = amatrices(U), av = amatrices(V);
    std::size_t m = U.dim, n = V.dim;
    auto eval_mat = [&](const ScalarMatrix& s) {
        RatMatrix r(s.rows(), s.cols());
        for (std::size_t i = 0; i < s.rows(); ++i)
            for (std::size_t j = 0; j < s.cols(); ++j) r.at(i, j) = s.at(i, j).eval(q0);
        return r;
    };
    RatMatrix sys(3 * m * n, m * n); // unknown T is m x n, flattened (i,j) -> i*n + j
    for (std::size_t t = 0; t < 3; ++t) {
        RatMatrix a = eval_mat(au[t]), b = eval_mat(av[t]);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                std::size_t row = t * m * n + i * n + j;
                for (std::size_t l = 0; l < m; ++l) sys.at(row, l * n + j) += a.at(i, l);
                for (std::size_t l = 0; l < n; ++l) sys.at(row, i * n + l) -= b.at(l, j);
            }
    }
    std::vector<RatMatrix> basis;
    for (auto& v : nullspace(std::move(sys))) {
        RatMatrix T(m, n);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) T.at(i, j) = v[i * n + j];
        basis.push_back(std::move(T));
    }
    return basis;
}

inline bool irreducible(const Corep& U, const Rational& q0 = Rational(1, 2)) {
    return intertwiners(U, U, q0).size() == 1;
}

// The 2x2 corepresentation written in the reversed basis order (alpha, gamma*):
// [[alpha, gamma*], [-q gamma, alpha*]]. Not unitary, but conjugation by
// diag(q^(1/2), -q^(-1/2)) carries it exactly onto the fundamental matrix.
inline AlgMatrix u1_displayed() {
    AlgMatrix m(2, 2);
    m.at(0, 0) = AlgebraElement::generator(Gen::A);
    m.at(0, 1) = AlgebraElement::generator(Gen::CStar);
    m.at(1, 0) = -Scalar::q_pow(1) * AlgebraElement::generator(Gen::C);
    m.at(1, 1) = AlgebraElement::generator(Gen::AStar);
    return m;
}

struct U1UnitarizationReport {
    bool displayed_is_reversed_build = false; // row+column reversal of corep_build(1)
    bool displayed_not_unitary = false;
    bool conjugation_inverts = false;         // the two diagonal factors are mutually inverse
    bool conjugate_is_fundamental = false;    // D U1 D^{-1} equals the fundamental matrix
    bool fundamental_unitary = false;
    bool all() const {
        return displayed_is_reversed_build && displayed_not_unitary && conjugation_inverts &&
               conjugate_is_fundamental && fundamental_unitary;
    }
};

inline U1UnitarizationReport u1_unitarization_check() {
    U1UnitarizationReport rep;
    AlgMatrix disp = u1_displayed();
    Corep u1 = corep_build(1);
    AlgMatrix rev(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) rev.at(i, j) = u1.u.at(1 - i, 1 - j);
    rep.displayed_is_reversed_build = (rev == disp);
    rep.displayed_not_unitary = !check_matrix_unitary(disp);
    AlgMatrix d1(2, 2), d2(2, 2);
    d1.at(0, 0) = Scalar::u_pow(1) * AlgebraElement::unit();   // q^(1/2)
    d1.at(1, 1) = -Scalar::u_pow(-1) * AlgebraElement::unit(); // -q^(-1/2)
    d2.at(0, 0) = Scalar::u_pow(-1) * AlgebraElement::unit();  // q^(-1/2)
    d2.at(1, 1) = -Scalar::u_pow(1) * AlgebraElement::unit();  // -q^(1/2)
    rep.conjugation_inverts =
        (d1 * d2 == AlgMatrix::identity(2)) && (d2 * d1 == AlgMatrix::identity(2));
    rep.conjugate_is_fundamental = (d1 * disp * d2 == fundamental_matrix());
    rep.fundamental_unitary = check_fundamental_unitary();
    return rep;
}

} // namespace suq
