#pragma once

#include <map>
#include <string>

#include "jtcalc/numeric.hpp"
#include "jtcalc/partition.hpp"
#include "jtcalc/weight.hpp"

namespace jtcalc {

enum class Basis { Monomial, Complete, Schur };

std::string basis_name(Basis b);    // "monomial" / "complete" / "schur"
char basis_letter(Basis b);         // 'm' / 'h' / 's'
Basis parse_basis(const std::string& name);

// Sparse symmetric polynomial in n variables, tagged by basis, partition keys
// mapped to exact integer coefficients. Monomial and schur keys with more than
// n parts denote the zero polynomial and are dropped at insertion; complete
// keys are formal products and may have any number of parts.
class SymPoly {
public:
    SymPoly(Basis basis, int n) : basis_(basis), n_(n) {}

    static SymPoly zero(Basis basis, int n) { return SymPoly(basis, n); }
    static SymPoly unit(Basis basis, int n) {
        SymPoly f(basis, n);
        f.add_term(Partition(), 1);
        return f;
    }
    static SymPoly term(Basis basis, int n, const Partition& key, const Int& c = 1) {
        SymPoly f(basis, n);
        f.add_term(key, c);
        return f;
    }

    Basis basis() const { return basis_; }
    int vars() const { return n_; }
    const std::map<Partition, Int>& terms() const { return coeffs_; }
    Int coeff(const Partition& key) const;
    bool is_zero() const { return coeffs_.empty(); }

    void add_term(const Partition& key, const Int& c);

    SymPoly& operator+=(const SymPoly& o);
    SymPoly operator+(const SymPoly& o) const;
    SymPoly operator-(const SymPoly& o) const;
    SymPoly operator*(const Int& c) const;  // scalar multiple

    bool operator==(const SymPoly&) const = default;

    bool homogeneous() const;  // all keys of equal size (zero counts as homogeneous)
    int degree() const;        // largest key size, 0 for the zero polynomial

    std::string to_string() const;

private:
    Basis basis_;
    int n_;
    std::map<Partition, Int> coeffs_;
};

// Product. Monomial basis: symmetrize to exponent vectors, convolve, collect.
// Complete basis: h_tau * h_sigma = h over the multiset union of parts.
SymPoly operator*(const SymPoly& f, const SymPoly& g);

// h_{tau_1} h_{tau_2} ... as a single complete-basis term, the zero polynomial
// when some entry is negative (h_k = 0 for k < 0; h_0 factors are 1).
SymPoly h_of_vector(const Weight& tau, int n);

// Conversion to the monomial basis: Kostka expansion for schur input,
// iterated products of the h_k spreads for complete input.
SymPoly to_monomial(const SymPoly& f);

// h_tau -> sum over lambda of K_{lambda,tau} s_lambda, term by term.
SymPoly h_to_schur(const SymPoly& f);

// SSYT generating function of the skew shape collected by content: the
// independent combinatorial route to s_{mu/nu}.
SymPoly skew_schur_monomial(const SkewShape& shape, int n);

}  // namespace jtcalc
