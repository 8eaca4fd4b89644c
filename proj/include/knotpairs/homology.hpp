#ifndef KNOTPAIRS_HOMOLOGY_HPP
#define KNOTPAIRS_HOMOLOGY_HPP

#include <map>
#include <vector>

#include "knotpairs/intmat.hpp"

namespace knotpairs {

// A finite simplicial complex on integer vertex ids, closed under faces.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    // Builds the closure of the given maximal simplices (faces generated).
    static SimplicialComplex from_maximal(const std::vector<std::vector<int>>& maximal);

    int dimension() const { return static_cast<int>(simplices_.size()) - 1; }
    // k-simplices as sorted vertex-id vectors, in lexicographic order.
    const std::vector<std::vector<int>>& simplices(int k) const;
    std::size_t simplex_count(int k) const { return simplices(k).size(); }
    bool empty() const { return simplices_.empty(); }

    long euler_characteristic() const;

    // Boundary matrix d_k: rows = (k-1)-simplices, cols = k-simplices,
    // signs alternate by position under the ascending-vertex-id orientation.
    IntMatrix boundary_matrix(int k) const;

private:
    std::vector<std::vector<std::vector<int>>> simplices_;  // by dimension
    std::vector<std::map<std::vector<int>, std::size_t>> index_;
};

// Finitely supported graded abelian group, dimensions 0..max.
struct GradedAbelian {
    std::vector<AbelianGroupInvariants> groups;

    AbelianGroupInvariants at(int i) const {
        if (i < 0 || i >= static_cast<int>(groups.size())) return {};
        return groups[i];
    }
    int top_nonzero() const;
    bool operator==(const GradedAbelian&) const = default;
};

// Integral simplicial homology via Smith normal form of boundary matrices.
GradedAbelian simplicial_homology(const SimplicialComplex& k);

// The boundary-knot homology formula: H_0(X) = H_0(Sigma),
// H_i(X) = H_{i-1}(Sigma) + H_i(Sigma) for 1 <= i <= n-3, and 0 above.
// Requires h_sigma to vanish above dimension n-4.
GradedAbelian predict_boundary_homology(const GradedAbelian& h_sigma, int ambient_dimension);

// Staircase triangulation of K x S^1, circle modeled on a 3-edge triangle.
SimplicialComplex circle_product(const SimplicialComplex& k);

}  // namespace knotpairs

#endif
