#pragma once

// shared random generators for the property-style tests; fixed seed so
// failures reproduce

#include <suq/algebra.hpp>

#include <random>
#include <vector>

namespace testutil {

using namespace suq;

inline std::mt19937& rng() {
    static std::mt19937 g(20250815u);
    return g;
}

inline long rint(long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    return d(rng());
}

inline Rational random_nonzero_rational() {
    long n = 0;
    while (n == 0) n = rint(-9, 9);
    return Rational(n, rint(1, 9));
}

// nonzero c * q^j, the coefficient shape the rewriting itself produces
inline Scalar random_q_monomial() {
    return Scalar(random_nonzero_rational()) * Scalar::q_pow(rint(-3, 3));
}

inline BasisIndex random_index(long B) {
    return {rint(-B, B), rint(0, B), rint(0, B)};
}

inline AlgebraElement random_element(long B, long max_terms, bool rational_coeffs = false) {
    AlgebraElement x;
    long t = rint(1, max_terms);
    for (long i = 0; i < t; ++i)
        x.add_term(random_index(B),
                   rational_coeffs ? Scalar(random_nonzero_rational()) : random_q_monomial());
    return x;
}

inline std::vector<Gen> random_word(long max_len) {
    static const Gen gens[4] = {Gen::A, Gen::AStar, Gen::C, Gen::CStar};
    std::vector<Gen> w;
    long len = rint(1, max_len);
    for (long i = 0; i < len; ++i) w.push_back(gens[rint(0, 3)]);
    return w;
}

} // namespace testutil
