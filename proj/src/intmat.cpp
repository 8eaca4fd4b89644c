#include "knotpairs/intmat.hpp"

#include <algorithm>
#include <stdexcept>

namespace knotpairs {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix shape mismatch");
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const mpz_class& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                out.at(i, j) += a * rhs.at(k, j);
            }
        }
    }
    return out;
}

mpz_class IntMatrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = rows_;
    if (n == 0) return 1;
    IntMatrix b = *this;
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (b.at(k, k) == 0) {
            std::size_t swap_row = k;
            for (std::size_t i = k + 1; i < n; ++i) {
                if (b.at(i, k) != 0) {
                    swap_row = i;
                    break;
                }
            }
            if (swap_row == k) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(b.at(k, j), b.at(swap_row, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class num = b.at(i, j) * b.at(k, k) - b.at(i, k) * b.at(k, j);
                mpz_divexact(b.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            b.at(i, k) = 0;
        }
        prev = b.at(k, k);
    }
    return sign * b.at(n - 1, n - 1);
}

namespace {

struct SnfWorkspace {
    IntMatrix d, u, v;
    std::size_t m, n;

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < n; ++j) std::swap(d.at(a, j), d.at(b, j));
        for (std::size_t j = 0; j < m; ++j) std::swap(u.at(a, j), u.at(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < m; ++i) std::swap(d.at(i, a), d.at(i, b));
        for (std::size_t i = 0; i < n; ++i) std::swap(v.at(i, a), v.at(i, b));
    }
    // row[a] += c * row[b]
    void add_row(std::size_t a, std::size_t b, const mpz_class& c) {
        for (std::size_t j = 0; j < n; ++j) d.at(a, j) += c * d.at(b, j);
        for (std::size_t j = 0; j < m; ++j) u.at(a, j) += c * u.at(b, j);
    }
    // col[a] += c * col[b]
    void add_col(std::size_t a, std::size_t b, const mpz_class& c) {
        for (std::size_t i = 0; i < m; ++i) d.at(i, a) += c * d.at(i, b);
        for (std::size_t i = 0; i < n; ++i) v.at(i, a) += c * v.at(i, b);
    }
    void negate_row(std::size_t a) {
        for (std::size_t j = 0; j < n; ++j) d.at(a, j) = -d.at(a, j);
        for (std::size_t j = 0; j < m; ++j) u.at(a, j) = -u.at(a, j);
    }
};

}  // namespace

SmithResult smith_normal_form(const IntMatrix& a) {
    SnfWorkspace w;
    w.m = a.rows();
    w.n = a.cols();
    w.d = a;
    w.u = IntMatrix::identity(w.m);
    w.v = IntMatrix::identity(w.n);

    std::size_t t = 0;
    while (t < w.m && t < w.n) {
        // Pivot: minimal nonzero absolute value in the remaining submatrix.
        std::size_t pi = t, pj = t;
        mpz_class best = 0;
        for (std::size_t i = t; i < w.m; ++i) {
            for (std::size_t j = t; j < w.n; ++j) {
                if (w.d.at(i, j) == 0) continue;
                mpz_class mag = abs(w.d.at(i, j));
                if (best == 0 || mag < best) {
                    best = mag;
                    pi = i;
                    pj = j;
                }
            }
        }
        if (best == 0) break;
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);

        bool settled = false;
        while (!settled) {
            settled = true;
            for (std::size_t i = t + 1; i < w.m && settled; ++i) {
                if (w.d.at(i, t) == 0) continue;
                mpz_class q = w.d.at(i, t) / w.d.at(t, t);
                w.add_row(i, t, -q);
                if (w.d.at(i, t) != 0) {
                    // Remainder becomes the new, smaller pivot.
                    w.swap_rows(t, i);
                    settled = false;
                }
            }
            if (!settled) continue;
            for (std::size_t j = t + 1; j < w.n && settled; ++j) {
                if (w.d.at(t, j) == 0) continue;
                mpz_class q = w.d.at(t, j) / w.d.at(t, t);
                w.add_col(j, t, -q);
                if (w.d.at(t, j) != 0) {
                    w.swap_cols(t, j);
                    settled = false;
                }
            }
            if (!settled) continue;
            // Divisibility fix: fold a non-multiple into the pivot row.
            for (std::size_t i = t + 1; i < w.m && settled; ++i) {
                for (std::size_t j = t + 1; j < w.n && settled; ++j) {
                    if (w.d.at(i, j) % w.d.at(t, t) != 0) {
                        w.add_row(t, i, 1);
                        settled = false;
                    }
                }
            }
        }
        if (w.d.at(t, t) < 0) w.negate_row(t);
        ++t;
    }

    SmithResult out;
    out.u = std::move(w.u);
    out.d = std::move(w.d);
    out.v = std::move(w.v);
    std::size_t diag = std::min(out.d.rows(), out.d.cols());
    for (std::size_t i = 0; i < diag; ++i) {
        if (out.d.at(i, i) != 0) ++out.rank;
    }
    return out;
}

std::string AbelianGroupInvariants::describe() const {
    if (is_trivial()) return "0";
    std::string out;
    if (free_rank == 1) {
        out = "Z";
    } else if (free_rank > 1) {
        out = "Z^" + std::to_string(free_rank);
    }
    for (const auto& d : torsion) {
        if (!out.empty()) out += " + ";
        out += "Z/" + d.get_str();
    }
    return out;
}

AbelianGroupInvariants direct_sum(const AbelianGroupInvariants& a,
                                  const AbelianGroupInvariants& b) {
    // Renormalize the combined torsion list to a divisibility chain.
    std::vector<mpz_class> all = a.torsion;
    all.insert(all.end(), b.torsion.begin(), b.torsion.end());
    IntMatrix diag(all.size(), all.size());
    for (std::size_t i = 0; i < all.size(); ++i) diag.at(i, i) = all[i];
    AbelianGroupInvariants out = cokernel_invariants(diag);
    out.free_rank = a.free_rank + b.free_rank;
    return out;
}

AbelianGroupInvariants cokernel_invariants(const IntMatrix& a) {
    SmithResult snf = smith_normal_form(a);
    AbelianGroupInvariants out;
    out.free_rank = static_cast<long>(a.cols()) - static_cast<long>(snf.rank);
    std::size_t diag = std::min(a.rows(), a.cols());
    for (std::size_t i = 0; i < diag; ++i) {
        if (snf.d.at(i, i) > 1) out.torsion.push_back(snf.d.at(i, i));
    }
    return out;
}

IntMatrix relator_matrix(const Presentation& p) {
    IntMatrix m(p.relators().size(), p.generators().size());
    for (std::size_t i = 0; i < p.relators().size(); ++i) {
        for (const Letter& l : p.relators()[i].letters()) {
            m.at(i, p.generator_index(l.gen)) += l.sign;
        }
    }
    return m;
}

std::vector<mpz_class> exponent_vector(const Word& w, const Presentation& p) {
    p.validate_word(w);
    std::vector<mpz_class> v(p.generators().size());
    for (const Letter& l : w.letters()) v[p.generator_index(l.gen)] += l.sign;
    return v;
}

AbelianGroupInvariants abelianization(const Presentation& p) {
    return cokernel_invariants(relator_matrix(p));
}

IntMatrix abelianized_map(const GroupMap& f) {
    IntMatrix m(f.source.generators().size(), f.target.generators().size());
    for (std::size_t i = 0; i < f.source.generators().size(); ++i) {
        const Word& img = f.images.at(f.source.generators()[i]);
        for (const Letter& l : img.letters()) {
            m.at(i, f.target.generator_index(l.gen)) += l.sign;
        }
    }
    return m;
}

bool in_row_space(const IntMatrix& a, const std::vector<mpz_class>& v) {
    if (v.size() != a.cols()) throw std::invalid_argument("vector length mismatch");
    SmithResult snf = smith_normal_form(a);
    // v in rowspace(A)  <=>  v*V in rowspace(D).
    std::size_t diag = std::min(a.rows(), a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        mpz_class wj = 0;
        for (std::size_t i = 0; i < a.cols(); ++i) wj += v[i] * snf.v.at(i, j);
        if (j < diag && snf.d.at(j, j) != 0) {
            if (wj % snf.d.at(j, j) != 0) return false;
        } else if (wj != 0) {
            return false;
        }
    }
    return true;
}

MapConsistency verify_map_abelianized(const GroupMap& f) {
    IntMatrix m = abelianized_map(f);
    IntMatrix target_rels = relator_matrix(f.target);
    for (std::size_t k = 0; k < f.source.relators().size(); ++k) {
        std::vector<mpz_class> src = exponent_vector(f.source.relators()[k], f.source);
        std::vector<mpz_class> img(f.target.generators().size());
        for (std::size_t i = 0; i < src.size(); ++i) {
            if (src[i] == 0) continue;
            for (std::size_t j = 0; j < img.size(); ++j) img[j] += src[i] * m.at(i, j);
        }
        if (!in_row_space(target_rels, img)) {
            return MapConsistency{false, static_cast<int>(k)};
        }
    }
    return MapConsistency{true, -1};
}

}  // namespace knotpairs
