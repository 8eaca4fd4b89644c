#include "knotpairs/homology.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace knotpairs {

SimplicialComplex SimplicialComplex::from_maximal(const std::vector<std::vector<int>>& maximal) {
    std::vector<std::set<std::vector<int>>> by_dim;
    for (const auto& raw : maximal) {
        std::vector<int> s = raw;
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        if (s.empty()) throw std::invalid_argument("empty simplex");
        // All nonempty subsets are faces.
        std::size_t n = s.size();
        for (std::size_t mask = 1; mask < (1u << n); ++mask) {
            std::vector<int> face;
            for (std::size_t b = 0; b < n; ++b) {
                if (mask & (1u << b)) face.push_back(s[b]);
            }
            std::size_t dim = face.size() - 1;
            if (by_dim.size() <= dim) by_dim.resize(dim + 1);
            by_dim[dim].insert(std::move(face));
        }
    }
    SimplicialComplex out;
    out.simplices_.resize(by_dim.size());
    out.index_.resize(by_dim.size());
    for (std::size_t d = 0; d < by_dim.size(); ++d) {
        for (const auto& s : by_dim[d]) {
            out.index_[d][s] = out.simplices_[d].size();
            out.simplices_[d].push_back(s);
        }
    }
    return out;
}

const std::vector<std::vector<int>>& SimplicialComplex::simplices(int k) const {
    static const std::vector<std::vector<int>> kEmpty;
    if (k < 0 || k >= static_cast<int>(simplices_.size())) return kEmpty;
    return simplices_[k];
}

long SimplicialComplex::euler_characteristic() const {
    long chi = 0;
    for (std::size_t d = 0; d < simplices_.size(); ++d) {
        chi += (d % 2 == 0 ? 1 : -1) * static_cast<long>(simplices_[d].size());
    }
    return chi;
}

IntMatrix SimplicialComplex::boundary_matrix(int k) const {
    const auto& cols = simplices(k);
    const auto& rows = simplices(k - 1);
    IntMatrix m(rows.size(), cols.size());
    if (k <= 0) return m;
    for (std::size_t j = 0; j < cols.size(); ++j) {
        const auto& s = cols[j];
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
            std::vector<int> face;
            for (std::size_t v = 0; v < s.size(); ++v) {
                if (v != drop) face.push_back(s[v]);
            }
            std::size_t i = index_[k - 1].at(face);
            m.at(i, j) += (drop % 2 == 0) ? 1 : -1;
        }
    }
    return m;
}

int GradedAbelian::top_nonzero() const {
    for (int i = static_cast<int>(groups.size()) - 1; i >= 0; --i) {
        if (!groups[i].is_trivial()) return i;
    }
    return -1;
}

GradedAbelian simplicial_homology(const SimplicialComplex& k) {
    GradedAbelian out;
    int dim = k.dimension();
    if (dim < 0) return out;
    out.groups.resize(dim + 1);
    std::vector<std::size_t> rank(dim + 2, 0);
    std::vector<std::vector<mpz_class>> torsion(dim + 2);
    for (int d = 1; d <= dim; ++d) {
        SmithResult snf = smith_normal_form(k.boundary_matrix(d));
        rank[d] = snf.rank;
        std::size_t diag = std::min(snf.d.rows(), snf.d.cols());
        for (std::size_t i = 0; i < diag; ++i) {
            if (snf.d.at(i, i) > 1) torsion[d].push_back(snf.d.at(i, i));
        }
    }
    for (int d = 0; d <= dim; ++d) {
        out.groups[d].free_rank = static_cast<long>(k.simplex_count(d)) -
                                  static_cast<long>(rank[d]) - static_cast<long>(rank[d + 1]);
        out.groups[d].torsion = torsion[d + 1];
    }
    return out;
}

GradedAbelian predict_boundary_homology(const GradedAbelian& h_sigma, int ambient_dimension) {
    const int n = ambient_dimension;
    if (h_sigma.top_nonzero() > n - 4) {
        throw std::invalid_argument(
            "singular-set homology must vanish above dimension n-4");
    }
    GradedAbelian out;
    if (n - 3 < 0) return out;
    out.groups.resize(n - 2);
    out.groups[0] = h_sigma.at(0);
    for (int i = 1; i <= n - 3; ++i) {
        out.groups[i] = direct_sum(h_sigma.at(i - 1), h_sigma.at(i));
    }
    return out;
}

SimplicialComplex circle_product(const SimplicialComplex& k) {
    // Vertex (v, w) of K x S^1 becomes id 3*v + w, w in {0, 1, 2}.
    // Each maximal-dimension simplex is multiplied against each circle edge
    // with the staircase decomposition; lower simplices arise as faces.
    static const int kCircleEdges[3][2] = {{0, 1}, {1, 2}, {0, 2}};
    std::vector<std::vector<int>> maximal;
    int dim = k.dimension();
    for (int d = 0; d <= dim; ++d) {
        for (const auto& s : k.simplices(d)) {
            for (const auto& edge : kCircleEdges) {
                // Monotone staircases through the (d+1) x 2 grid.
                for (std::size_t step = 0; step < s.size(); ++step) {
                    std::vector<int> cell;
                    for (std::size_t i = 0; i <= step; ++i) cell.push_back(3 * s[i] + edge[0]);
                    for (std::size_t i = step; i < s.size(); ++i) cell.push_back(3 * s[i] + edge[1]);
                    maximal.push_back(std::move(cell));
                }
            }
        }
    }
    return SimplicialComplex::from_maximal(maximal);
}

}  // namespace knotpairs
