#include "knotpairs/alexander.hpp"

#include <cctype>
#include <stdexcept>

namespace knotpairs {

LaurentPoly LaurentPoly::constant(const mpz_class& c) { return monomial(c, 0); }

LaurentPoly LaurentPoly::monomial(const mpz_class& c, long exponent) {
    LaurentPoly p;
    p.set(exponent, c);
    return p;
}

void LaurentPoly::set(long exponent, const mpz_class& c) {
    if (c == 0) {
        coeffs_.erase(exponent);
    } else {
        coeffs_[exponent] = c;
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& rhs) const {
    LaurentPoly out = *this;
    for (const auto& [e, c] : rhs.coeffs_) {
        auto it = out.coeffs_.find(e);
        mpz_class sum = (it == out.coeffs_.end() ? mpz_class(0) : it->second) + c;
        out.set(e, sum);
    }
    return out;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out;
    for (const auto& [e, c] : coeffs_) out.coeffs_[e] = -c;
    return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& rhs) const { return *this + (-rhs); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& rhs) const {
    LaurentPoly out;
    for (const auto& [e1, c1] : coeffs_) {
        for (const auto& [e2, c2] : rhs.coeffs_) {
            auto it = out.coeffs_.find(e1 + e2);
            mpz_class sum = (it == out.coeffs_.end() ? mpz_class(0) : it->second) + c1 * c2;
            out.set(e1 + e2, sum);
        }
    }
    return out;
}

mpz_class LaurentPoly::evaluate_at_one() const {
    mpz_class sum = 0;
    for (const auto& [e, c] : coeffs_) sum += c;
    return sum;
}

std::string LaurentPoly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : coeffs_) {
        mpz_class mag = abs(c);
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        bool need_coeff = mag != 1 || e == 0;
        if (need_coeff) out += mag.get_str();
        if (e != 0) {
            out += "t";
            if (e != 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

LaurentPoly parse_laurent(const std::string& text) {
    LaurentPoly out;
    std::size_t i = 0;
    auto skip_ws = [&]() {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i >= text.size()) throw std::invalid_argument("empty polynomial");
    bool first = true;
    while (true) {
        skip_ws();
        if (i >= text.size()) break;
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip_ws();
        } else if (!first) {
            throw std::invalid_argument("expected '+' or '-' between terms");
        }
        first = false;
        std::string digits;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            digits += text[i++];
        }
        skip_ws();
        mpz_class coeff = digits.empty() ? mpz_class(1) : mpz_class(digits);
        long exponent = 0;
        if (i < text.size() && (text[i] == 't' || text[i] == 'T')) {
            ++i;
            exponent = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                std::string exp;
                if (i < text.size() && text[i] == '-') exp += text[i++];
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                    exp += text[i++];
                }
                if (exp.empty() || exp == "-") {
                    throw std::invalid_argument("expected integer exponent after '^'");
                }
                exponent = std::stol(exp);
            }
        } else if (digits.empty()) {
            throw std::invalid_argument("expected a coefficient or 't'");
        }
        out = out + LaurentPoly::monomial(sign * coeff, exponent);
    }
    return out;
}

TypeKResult is_type_K_cyclic(const LaurentPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("zero polynomial");
    TypeKResult r;
    r.p_at_one = p.evaluate_at_one();
    r.type_k = r.p_at_one == 1 || r.p_at_one == -1;
    return r;
}

namespace {

bool is_unit(const LaurentPoly& p) {
    const auto& c = p.coefficients();
    return c.size() == 1 && (c.begin()->second == 1 || c.begin()->second == -1);
}

AbelianGroupInvariants z_power(long rank) {
    AbelianGroupInvariants inv;
    inv.free_rank = rank;
    return inv;
}

}  // namespace

PComplexReport p_complex_homology(const LaurentPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("zero polynomial");
    PComplexReport r;
    r.p_at_one = p.evaluate_at_one();

    // Cover chain complex over Lambda:
    //   C3 = Lambda --(p)--> C2 = Lambda --0--> C1 = Lambda --(t-1)--> C0.
    r.cover_h0 = "Z";
    r.cover_h1 = "0";
    r.cover_h2 = is_unit(p) ? "0" : "Lambda/(" + p.to_string() + ")";
    r.cover_h3 = "0";  // multiplication by p is injective on Lambda

    // Quotient cellular complex: one cell per dimension, d1 = d2 = 0, d3 = p(1).
    IntMatrix d1(1, 1), d2(1, 1), d3(1, 1);
    d3.at(0, 0) = r.p_at_one;
    std::size_t rank3 = smith_normal_form(d3).rank;
    r.quotient_homology.groups.resize(4);
    r.quotient_homology.groups[0] = z_power(1);
    r.quotient_homology.groups[1] = z_power(1);
    r.quotient_homology.groups[2].free_rank = 1 - static_cast<long>(rank3);
    if (abs(r.p_at_one) > 1) r.quotient_homology.groups[2].torsion = {mpz_class(abs(r.p_at_one))};
    r.quotient_homology.groups[3] = z_power(1 - static_cast<long>(rank3));

    // Cross-check against the infinite-cyclic-cover exact sequence:
    // H3(P) = ker(t-1 | Lambda/(p)), H2(P) = coker(t-1 | Lambda/(p)) = Z/p(1),
    // H1(P) = Z from H1(cover) = 0 and trivial t-action on H0(cover) = Z.
    AbelianGroupInvariants expect_h3 = r.p_at_one == 0 ? z_power(1) : z_power(0);
    AbelianGroupInvariants expect_h2;
    if (r.p_at_one == 0) {
        expect_h2 = z_power(1);
    } else if (abs(r.p_at_one) > 1) {
        expect_h2.torsion = {mpz_class(abs(r.p_at_one))};
    }
    r.milnor_consistent = r.quotient_homology.groups[3] == expect_h3 &&
                          r.quotient_homology.groups[2] == expect_h2 &&
                          r.quotient_homology.groups[1] == z_power(1) &&
                          r.quotient_homology.groups[0] == z_power(1);

    GradedAbelian circle;
    circle.groups = {z_power(1), z_power(1), {}, {}};
    r.homology_circle = r.quotient_homology == circle;
    return r;
}

}  // namespace knotpairs
