#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <string>

#include "hyperclass/gauss_rational.hpp"

namespace hyperclass {

/// Symbol universe shared by all polynomials: two working variables and the
/// five family parameters.
enum class Sym : std::uint8_t { w, v, alpha, beta, mu, theta, lambda };
constexpr int kNumSyms = 7;

const char* sym_name(Sym s);

using Exps = std::array<std::uint8_t, kNumSyms>;
using SymValues = std::array<std::complex<double>, kNumSyms>;

/// Graded lexicographic order on exponent vectors.
struct GrlexLess {
    bool operator()(const Exps& a, const Exps& b) const;
};

class MultiPoly {
public:
    using Terms = std::map<Exps, GaussRational, GrlexLess>;

    MultiPoly() = default;
    MultiPoly(const GaussRational& c);
    MultiPoly(long c) : MultiPoly(GaussRational(c)) {}

    static MultiPoly var(Sym s);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    GaussRational constant_term() const;
    // Coefficient of the grlex-largest monomial.
    GaussRational leading_coeff() const;
    int total_degree() const;
    int degree_in(Sym s) const;
    bool depends_on(Sym s) const { return degree_in(s) > 0; }

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const GaussRational& c);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const GaussRational& c) { return a *= c; }
    friend MultiPoly operator*(const GaussRational& c, MultiPoly a) { return a *= c; }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    MultiPoly pow(unsigned n) const;
    MultiPoly derivative(Sym s) const;
    // Coefficient of s^k, as a polynomial in the remaining symbols.
    MultiPoly coeff_of(Sym s, int k) const;
    // Replaces s by the polynomial q.
    MultiPoly substitute(Sym s, const MultiPoly& q) const;

    std::complex<double> evaluate(const SymValues& vals) const;

    // Adds c to the coefficient of the monomial e (used by mutation tests).
    void add_to_term(const Exps& e, const GaussRational& c);

    std::string str() const;

private:
    Terms terms_;
};

}  // namespace hyperclass
