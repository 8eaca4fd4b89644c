#ifndef KNOTPAIRS_INTMAT_HPP
#define KNOTPAIRS_INTMAT_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "knotpairs/presentation.hpp"

namespace knotpairs {

// Dense matrix of unbounded integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    mpz_class& at(std::size_t i, std::size_t j) { return data_.at(i * cols_ + j); }
    const mpz_class& at(std::size_t i, std::size_t j) const { return data_.at(i * cols_ + j); }

    IntMatrix operator*(const IntMatrix& rhs) const;
    bool operator==(const IntMatrix&) const = default;

    // Exact determinant (Bareiss fraction-free elimination); square only.
    mpz_class determinant() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<mpz_class> data_;
};

struct SmithResult {
    IntMatrix u;  // rows x rows, unimodular
    IntMatrix d;  // diagonal, nonnegative, divisibility chain
    IntMatrix v;  // cols x cols, unimodular
    std::size_t rank = 0;
};

// U * A * V = D with U, V unimodular and d_1 | d_2 | ... on the diagonal.
SmithResult smith_normal_form(const IntMatrix& a);

// Invariant-factor description of a finitely generated abelian group:
// Z^free_rank + sum Z/d_i with 2 <= d_1 | d_2 | ...
struct AbelianGroupInvariants {
    long free_rank = 0;
    std::vector<mpz_class> torsion;

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    bool is_infinite_cyclic() const { return free_rank == 1 && torsion.empty(); }
    std::string describe() const;  // e.g. "Z^2 + Z/2 + Z/6", "0"

    bool operator==(const AbelianGroupInvariants&) const = default;
};

AbelianGroupInvariants direct_sum(const AbelianGroupInvariants& a,
                                  const AbelianGroupInvariants& b);

// Invariants of the cokernel Z^cols / rowspace(A).
AbelianGroupInvariants cokernel_invariants(const IntMatrix& a);

// Relator exponent-sum matrix: rows = relators, cols = generators.
IntMatrix relator_matrix(const Presentation& p);

// Exponent-sum vector of w over the generators of p.
std::vector<mpz_class> exponent_vector(const Word& w, const Presentation& p);

AbelianGroupInvariants abelianization(const Presentation& p);

// Exponent-sum matrix of generator images; rows = source generators,
// cols = target generators.
IntMatrix abelianized_map(const GroupMap& f);

// True iff v lies in the integer row space of A (length must equal A.cols()).
bool in_row_space(const IntMatrix& a, const std::vector<mpz_class>& v);

struct MapConsistency {
    bool consistent = true;
    int violated_relator = -1;  // first source relator whose image fails
};

// Necessary condition on a declared homomorphism: every source relator must
// map to a word whose exponent vector vanishes in the target abelianization.
MapConsistency verify_map_abelianized(const GroupMap& f);

}  // namespace knotpairs

#endif
