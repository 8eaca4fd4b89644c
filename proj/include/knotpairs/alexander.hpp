#ifndef KNOTPAIRS_ALEXANDER_HPP
#define KNOTPAIRS_ALEXANDER_HPP

#include <gmpxx.h>

#include <map>
#include <string>

#include "knotpairs/homology.hpp"
#include "knotpairs/intmat.hpp"

namespace knotpairs {

// Integer Laurent polynomial: finitely supported exponent -> coefficient map
// with no stored zeros.
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly constant(const mpz_class& c);
    static LaurentPoly monomial(const mpz_class& c, long exponent);

    const std::map<long, mpz_class>& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    LaurentPoly operator+(const LaurentPoly& rhs) const;
    LaurentPoly operator-() const;
    LaurentPoly operator-(const LaurentPoly& rhs) const;
    LaurentPoly operator*(const LaurentPoly& rhs) const;
    bool operator==(const LaurentPoly&) const = default;

    mpz_class evaluate_at_one() const;  // sum of coefficients

    void set(long exponent, const mpz_class& c);  // drops zero coefficients
    std::string to_string() const;                // e.g. "t^-1 - 1 + t"

private:
    std::map<long, mpz_class> coeffs_;
};

// Syntax: terms joined by +/-, each "[coeff][t[^exp]]", e.g. "t^-1 - 1 + t".
LaurentPoly parse_laurent(const std::string& text);

struct TypeKResult {
    bool type_k = false;
    mpz_class p_at_one;  // certificate: t-1 is invertible mod p iff |p(1)| = 1
};

// Z[t,t^-1]/(p) has t-1 acting as an automorphism iff |p(1)| = 1.
TypeKResult is_type_K_cyclic(const LaurentPoly& p);

// Homology of the one-cell-per-dimension complex built from p(t):
// universal cover chain complex Lambda ->(p) Lambda ->(0) Lambda ->(t-1) Lambda,
// quotient cellular complex with d1 = 0, d2 = 0, d3 = p(1).
struct PComplexReport {
    // Cyclic Lambda-module descriptions of the cover homology, dims 0..3.
    std::string cover_h0, cover_h1, cover_h2, cover_h3;
    GradedAbelian quotient_homology;  // integer homology of the base, dims 0..3
    bool milnor_consistent = false;
    bool homology_circle = false;     // quotient homology equals that of S^1
    mpz_class p_at_one;
};

PComplexReport p_complex_homology(const LaurentPoly& p);

}  // namespace knotpairs

#endif
