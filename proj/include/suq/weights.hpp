#pragma once

// Weight functions: finitely supported multiplicity maps Z -> N attached to
// corepresentations through the circle morphism. Direct sums add them
// pointwise, tensor products convolve them over Z, and a decomposable weight
// function splits uniquely into the symmetric strings
//   M_(n) = 1 on {-n, -n+2, ..., n-2, n}, 0 elsewhere.
// Decomposition is computed along two independent routes (greedy peeling from
// the top of each parity class, and the telescoping difference c_n = W(n) -
// W(n+2)) which must agree; disagreement or a negative multiplicity rejects
// the input.

#include "rational.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

namespace suq {

class WeightFunction {
public:
    using Map = std::map<long, long>;

    WeightFunction() = default;

    // the irreducible string: 1 on {-n, -n+2, ..., n}
    static WeightFunction irreducible(long n) {
        if (n < 0) throw std::invalid_argument("WeightFunction: negative label");
        WeightFunction w;
        for (long k = -n; k <= n; k += 2) w.mult_[k] = 1;
        return w;
    }

    const Map& support() const { return mult_; }
    bool is_zero() const { return mult_.empty(); }

    long at(long k) const {
        auto it = mult_.find(k);
        return it == mult_.end() ? 0 : it->second;
    }

    void add(long k, long m) {
        if (m == 0) return;
        auto [it, fresh] = mult_.try_emplace(k, m);
        if (!fresh) {
            it->second += m;
            if (it->second == 0) mult_.erase(it);
        }
    }

    // total multiplicity = dimension of the underlying space
    long total() const {
        long t = 0;
        for (auto& [k, m] : mult_) t += m;
        return t;
    }

    bool operator==(const WeightFunction& o) const { return mult_ == o.mult_; }
    bool operator!=(const WeightFunction& o) const { return !(*this == o); }

private:
    Map mult_;
};

// direct sum: pointwise addition
inline WeightFunction weight_dsum(const WeightFunction& a, const WeightFunction& b) {
    WeightFunction r = a;
    for (auto& [k, m] : b.support()) r.add(k, m);
    return r;
}

// tensor product: convolution over Z
inline WeightFunction weight_tensor(const WeightFunction& a, const WeightFunction& b) {
    WeightFunction r;
    for (auto& [ka, ma] : a.support())
        for (auto& [kb, mb] : b.support()) r.add(ka + kb, ma * mb);
    return r;
}

namespace detail {

// Route 1: within each parity class, repeatedly peel mult(top) copies of the
// string ending at the current top weight. Throws if a peel drives any
// multiplicity negative.
inline std::map<long, long> decompose_greedy(WeightFunction w) {
    std::map<long, long> out;
    while (!w.is_zero()) {
        long top = w.support().rbegin()->first;
        long c = w.at(top);
        if (top < 0 || c < 0)
            throw std::invalid_argument("weight_decompose: not a sum of irreducible strings");
        for (long k = -top; k <= top; k += 2) {
            w.add(k, -c);
            if (w.at(k) < 0)
                throw std::invalid_argument("weight_decompose: not a sum of irreducible strings");
        }
        out[top] += c;
    }
    return out;
}

// Route 2: since M_(d)(n) = 1 exactly when |n| <= d and n == d (mod 2), the
// multiplicity of the string with top weight n is the telescoping difference
// W(n) - W(n+2). Validity is confirmed by rebuilding W from the result.
inline std::map<long, long> decompose_telescope(const WeightFunction& w) {
    std::map<long, long> out;
    if (w.is_zero()) return out;
    long top = std::max(w.support().rbegin()->first, -w.support().begin()->first);
    for (long n = top; n >= 0; --n) {
        long c = w.at(n) - w.at(n + 2);
        if (c < 0) throw std::invalid_argument("weight_decompose: not a sum of irreducible strings");
        if (c > 0) out[n] = c;
    }
    WeightFunction rebuilt;
    for (auto& [n, c] : out)
        for (long k = -n; k <= n; k += 2) rebuilt.add(k, c);
    if (rebuilt != w)
        throw std::invalid_argument("weight_decompose: not a sum of irreducible strings");
    return out;
}

} // namespace detail

// Multiplicity of each irreducible string in w (keys are top weights).
// Both routes are computed and must agree; a weight function that is not a
// nonnegative combination of strings is rejected.
inline std::map<long, long> weight_decompose(const WeightFunction& w) {
    std::map<long, long> greedy = detail::decompose_greedy(w);
    std::map<long, long> tele = detail::decompose_telescope(w);
    if (greedy != tele)
        throw std::logic_error("weight_decompose: the two decomposition routes disagree");
    return greedy;
}

// text form "{k:mult,...}" with ascending keys
inline std::string render_weights(const WeightFunction& w) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (auto& [k, m] : w.support()) {
        if (!first) os << ",";
        os << k << ":" << m;
        first = false;
    }
    os << "}";
    return os.str();
}

// decomposition rendered with descending top weights: "{n:mult,...}"
inline std::string render_decomposition(const std::map<long, long>& d) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (auto it = d.rbegin(); it != d.rend(); ++it) {
        if (!first) os << ",";
        os << it->first << ":" << it->second;
        first = false;
    }
    os << "}";
    return os.str();
}

// parse "{k:mult,...}" (whitespace-insensitive, any key order, empty "{}" ok)
inline WeightFunction parse_weights(const std::string& text) {
    WeightFunction w;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto number = [&]() -> long {
        skip();
        std::size_t start = i;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
            throw std::invalid_argument("parse_weights: expected an integer at position " +
                                        std::to_string(start));
        return std::stol(text.substr(start, i - start));
    };
    skip();
    if (i >= text.size() || text[i] != '{')
        throw std::invalid_argument("parse_weights: expected '{'");
    ++i;
    skip();
    if (i < text.size() && text[i] == '}') return w;
    while (true) {
        long k = number();
        skip();
        if (i >= text.size() || text[i] != ':')
            throw std::invalid_argument("parse_weights: expected ':' at position " +
                                        std::to_string(i));
        ++i;
        long m = number();
        if (m < 0) throw std::invalid_argument("parse_weights: negative multiplicity");
        w.add(k, m);
        skip();
        if (i < text.size() && text[i] == ',') {
            ++i;
            continue;
        }
        break;
    }
    if (i >= text.size() || text[i] != '}')
        throw std::invalid_argument("parse_weights: expected '}' at position " + std::to_string(i));
    ++i;
    skip();
    if (i != text.size()) throw std::invalid_argument("parse_weights: trailing characters");
    return w;
}

} // namespace suq
