#include "knotpairs/coset.hpp"

#include <deque>
#include <map>

namespace knotpairs {

namespace {

class Enumerator {
public:
    Enumerator(const Presentation& p, const std::vector<Word>& subgroup, long budget)
        : ngens_(p.generators().size()), ncols_(2 * ngens_), budget_(budget) {
        for (const Word& r : p.relators()) relators_.push_back(to_cols(r, p));
        for (const Word& w : subgroup) {
            p.validate_word(w);
            subgroup_.push_back(to_cols(free_reduce(w), p));
        }
        new_coset();  // coset 0 = the subgroup itself
    }

    EnumerationOutcome run() {
        EnumerationOutcome out;
        out.budget = budget_;
        bool exhausted = false;

        for (const auto& w : subgroup_) {
            if (!trace_subgroup_word(w)) {
                exhausted = true;
                break;
            }
        }

        while (!exhausted) {
            saturate();
            long c, col;
            if (!first_gap(c, col)) break;  // table closed
            long d = new_coset();
            if (d < 0) {
                exhausted = true;
                break;
            }
            set_edge(c, col, d);
        }

        out.stats.definitions = static_cast<long>(table_.size());
        out.stats.coincidences = coincidences_;
        out.stats.live_cosets = live_;
        out.cosets_defined = static_cast<long>(table_.size());
        if (!exhausted) {
            out.completed = true;
            out.index = live_;
            out.table = compact();
        }
        return out;
    }

private:
    std::vector<long> to_cols(const Word& w, const Presentation& p) {
        std::vector<long> cols;
        for (const Letter& l : w.letters()) {
            long g = p.generator_index(l.gen);
            cols.push_back(2 * g + (l.sign > 0 ? 0 : 1));
        }
        return cols;
    }

    static long inv(long col) { return col ^ 1; }

    long rep(long c) {
        while (parent_[c] != c) {
            parent_[c] = parent_[parent_[c]];
            c = parent_[c];
        }
        return c;
    }

    long get(long c, long col) {
        c = rep(c);
        long t = table_[c][col];
        if (t < 0) return -1;
        t = rep(t);
        table_[c][col] = t;
        return t;
    }

    // Returns -1 if the budget is exhausted.
    long new_coset() {
        if (static_cast<long>(table_.size()) >= budget_) return -1;
        table_.emplace_back(ncols_, -1);
        parent_.push_back(static_cast<long>(table_.size()) - 1);
        ++live_;
        return static_cast<long>(table_.size()) - 1;
    }

    void set_edge(long c, long col, long d) {
        c = rep(c);
        d = rep(d);
        long existing = get(c, col);
        if (existing >= 0) {
            if (existing != d) coincide(existing, d);
            return;
        }
        table_[c][col] = d;
        long back = get(d, inv(col));
        if (back < 0) {
            table_[rep(d)][inv(col)] = c;
        } else if (back != c) {
            coincide(back, c);
        }
    }

    void coincide(long a, long b) {
        std::deque<std::pair<long, long>> pending{{a, b}};
        while (!pending.empty()) {
            auto [x, y] = pending.front();
            pending.pop_front();
            x = rep(x);
            y = rep(y);
            if (x == y) continue;
            if (x > y) std::swap(x, y);  // smaller id survives
            parent_[y] = x;
            --live_;
            ++coincidences_;
            for (long col = 0; col < static_cast<long>(ncols_); ++col) {
                long d = table_[y][col];
                if (d < 0) continue;
                d = rep(d);
                long e = table_[x][col];
                if (e < 0) {
                    table_[x][col] = d;
                } else if (rep(e) != d) {
                    pending.emplace_back(rep(e), d);
                } else {
                    table_[x][col] = d;
                }
                long e2 = table_[d][inv(col)];
                if (e2 < 0) {
                    table_[d][inv(col)] = x;
                } else if (rep(e2) != x) {
                    pending.emplace_back(rep(e2), x);
                } else {
                    table_[d][inv(col)] = x;
                }
            }
        }
    }

    // Traces a subgroup generator word from coset 0 back to coset 0,
    // defining cosets as needed.
    bool trace_subgroup_word(const std::vector<long>& w) {
        if (w.empty()) return true;
        long f = 0;
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            long n = get(f, w[i]);
            if (n < 0) {
                n = new_coset();
                if (n < 0) return false;
                set_edge(f, w[i], n);
                n = get(f, w[i]);
            }
            f = n;
        }
        set_edge(f, w.back(), rep(0));
        return true;
    }

    // Scans relator w from coset c; fills a gap of one (deduction) or merges
    // a completed mismatch (coincidence). Returns true if anything changed.
    bool scan(long c, const std::vector<long>& w) {
        c = rep(c);
        long f = c;
        std::size_t i = 0;
        while (i < w.size()) {
            long n = get(f, w[i]);
            if (n < 0) break;
            f = n;
            ++i;
        }
        if (i == w.size()) {
            if (f != c) {
                coincide(f, c);
                return true;
            }
            return false;
        }
        long b = c;
        std::size_t j = w.size();
        while (j > i + 1) {
            long n = get(b, inv(w[j - 1]));
            if (n < 0) break;
            b = n;
            --j;
        }
        if (j == i + 1) {
            set_edge(f, w[i], b);
            return true;
        }
        return false;
    }

    // Repeats relator scans over all live cosets until no deduction or
    // coincidence fires.
    void saturate() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (long c = 0; c < static_cast<long>(table_.size()); ++c) {
                if (rep(c) != c) continue;
                for (const auto& w : relators_) {
                    if (scan(c, w)) changed = true;
                    if (rep(c) != c) break;  // c died in a coincidence
                }
            }
        }
    }

    bool first_gap(long& c_out, long& col_out) {
        for (long c = 0; c < static_cast<long>(table_.size()); ++c) {
            if (rep(c) != c) continue;
            for (long col = 0; col < static_cast<long>(ncols_); ++col) {
                if (table_[c][col] < 0) {
                    c_out = c;
                    col_out = col;
                    return true;
                }
            }
        }
        return false;
    }

    CosetTable compact() {
        std::map<long, long> renumber;
        for (long c = 0; c < static_cast<long>(table_.size()); ++c) {
            if (rep(c) == c) renumber[c] = static_cast<long>(renumber.size());
        }
        CosetTable out;
        out.num_generators = ngens_;
        for (const auto& [old_id, new_id] : renumber) {
            (void)new_id;
            std::vector<long> row(ncols_);
            for (long col = 0; col < static_cast<long>(ncols_); ++col) {
                row[col] = renumber.at(get(old_id, col));
            }
            out.rows.push_back(std::move(row));
        }
        return out;
    }

    std::size_t ngens_, ncols_;
    long budget_;
    std::vector<std::vector<long>> relators_;
    std::vector<std::vector<long>> subgroup_;
    std::vector<std::vector<long>> table_;
    std::vector<long> parent_;
    long live_ = 0;
    long coincidences_ = 0;
};

}  // namespace

EnumerationOutcome enumerate_cosets(const Presentation& p, const std::vector<Word>& subgroup,
                                    long budget) {
    if (budget < 1) throw ValidationError("budget must be at least 1");
    return Enumerator(p, subgroup, budget).run();
}

TrivialityVerdict is_trivial_group(const Presentation& p, long budget) {
    EnumerationOutcome outcome = enumerate_cosets(p, {}, budget);
    return TrivialityVerdict{outcome.completed && outcome.index == 1, std::move(outcome)};
}

}  // namespace knotpairs
