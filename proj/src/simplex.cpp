#include "ucat/simplex.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

#include "ucat/errors.hpp"

namespace ucat {

namespace {

// Dense two-phase tableau over the standard form
//   [A | slacks] x' = b,  x' >= 0,  b >= 0,
// with one artificial column per row forming the initial basis where no
// slack can serve. Columns: structurals, slacks, artificials; the rhs sits
// at index width().
class Tableau {
public:
    Tableau(const LinearSystem& sys, long pivot_cap)
        : n_struct_(sys.num_vars), pivot_cap_(pivot_cap) {
        int m = static_cast<int>(sys.rows.size());
        int n_slack = 0;
        for (const auto& row : sys.rows)
            if (!row.eq) n_slack++;
        art0_ = n_struct_ + n_slack;
        width_ = art0_ + m;
        rows_.assign(m, std::vector<Rat>(width_ + 1, Rat(0)));
        basis_.assign(m, -1);
        row_sign_.assign(m, 1);

        int slack = n_struct_;
        for (int i = 0; i < m; i++) {
            const auto& row = sys.rows[i];
            bool negate = row.rhs.is_negative();
            row_sign_[i] = negate ? -1 : 1;
            Rat sign(row_sign_[i]);
            for (int j = 0; j < n_struct_; j++) rows_[i][j] = sign * row.coef[j];
            rows_[i][width_] = sign * row.rhs;
            if (!row.eq) {
                rows_[i][slack] = sign;
                if (!negate) basis_[i] = slack;
                slack++;
            }
            if (basis_[i] == -1) {
                rows_[i][art0_ + i] = Rat(1);
                basis_[i] = art0_ + i;
            }
        }
        cost_.assign(width_ + 1, Rat(0));
        for (int j = art0_; j < width_; j++) cost_[j] = Rat(1);
        for (int i = 0; i < m; i++) {
            if (basis_[i] < art0_) continue;
            for (int j = 0; j <= width_; j++) cost_[j] -= rows_[i][j];
        }
    }

    int row_count() const { return static_cast<int>(rows_.size()); }
    int width() const { return width_; }
    int entering_limit() const { return art0_; }
    long pivots() const { return pivots_; }
    const std::vector<int>& basis() const { return basis_; }
    const Rat& rhs(int i) const { return rows_[i][width_]; }
    const Rat& at(int i, int j) const { return rows_[i][j]; }

    void pivot(int r, int s) {
        if (++pivots_ > pivot_cap_) throw budget_error("lp-pivot-cap", "LP pivot cap exceeded");
        auto& prow = rows_[r];
        Rat inv = Rat(1) / prow[s];
        for (auto& x : prow) x *= inv;
        for (int i = 0; i < row_count(); i++) {
            if (i == r || rows_[i][s].is_zero()) continue;
            Rat factor = rows_[i][s];
            for (int j = 0; j <= width_; j++)
                if (!prow[j].is_zero()) rows_[i][j] -= factor * prow[j];
        }
        if (!cost_[s].is_zero()) {
            Rat factor = cost_[s];
            for (int j = 0; j <= width_; j++)
                if (!prow[j].is_zero()) cost_[j] -= factor * prow[j];
        }
        basis_[r] = s;
    }

    // One Bland step on non-artificial columns; false at optimum.
    bool phase1_step() {
        int s = -1;
        for (int j = 0; j < art0_; j++)
            if (cost_[j].is_negative()) {
                s = j;
                break;
            }
        if (s == -1) return false;
        int r = -1;
        for (int i = 0; i < row_count(); i++) {
            if (!rows_[i][s].is_positive()) continue;
            if (r == -1) {
                r = i;
                continue;
            }
            Rat lhs = rows_[i][width_] * rows_[r][s];
            Rat rhs_v = rows_[r][width_] * rows_[i][s];
            if (lhs < rhs_v || (lhs == rhs_v && basis_[i] < basis_[r])) r = i;
        }
        if (r == -1) throw std::logic_error("phase-1 objective unbounded below");
        pivot(r, s);
        return true;
    }

    Rat phase1_objective() const { return -cost_[width_]; }

    // Pivots basic artificials out (degenerate moves), erases redundant
    // rows, then drops the artificial columns entirely.
    void remove_artificials() {
        for (int i = row_count() - 1; i >= 0; i--) {
            if (basis_[i] < art0_) continue;
            assert(rhs(i).is_zero());
            int s = -1;
            for (int j = 0; j < art0_; j++)
                if (!rows_[i][j].is_zero()) {
                    s = j;
                    break;
                }
            if (s != -1) {
                pivot(i, s);
            } else {
                rows_.erase(rows_.begin() + i);
                basis_.erase(basis_.begin() + i);
            }
        }
        for (auto& row : rows_) {
            row[art0_] = row[width_];
            row.resize(art0_ + 1);
        }
        width_ = art0_;
        cost_.assign(width_ + 1, Rat(0));
    }

    std::vector<Rat> structural_point() const {
        std::vector<Rat> x(n_struct_, Rat(0));
        for (int i = 0; i < row_count(); i++)
            if (basis_[i] < n_struct_) x[basis_[i]] = rhs(i);
        return x;
    }

    // Multipliers per original row, sign-corrected, from the reduced costs
    // of the artificial columns.
    std::vector<Rat> farkas() const {
        std::vector<Rat> y(row_count(), Rat(0));
        for (int i = 0; i < row_count(); i++)
            y[i] = Rat(row_sign_[i]) * (Rat(1) - cost_[art0_ + i]);
        return y;
    }

private:
    int n_struct_, art0_ = 0, width_ = 0;
    long pivot_cap_;
    long pivots_ = 0;
    std::vector<std::vector<Rat>> rows_;
    std::vector<Rat> cost_;
    std::vector<int> basis_;
    std::vector<int> row_sign_;
};

void verify_point(const LinearSystem& sys, const std::vector<Rat>& x) {
    for (const auto& xi : x) assert(!xi.is_negative());
    for (const auto& row : sys.rows) {
        Rat lhs(0);
        for (int j = 0; j < sys.num_vars; j++)
            if (!row.coef[j].is_zero()) lhs += row.coef[j] * x[j];
        if (row.eq)
            assert(lhs == row.rhs);
        else
            assert(lhs <= row.rhs);
        (void)lhs;
    }
}

void verify_farkas(const LinearSystem& sys, const std::vector<Rat>& y) {
    Rat yb(0);
    for (std::size_t i = 0; i < sys.rows.size(); i++) {
        if (!sys.rows[i].eq) assert(!y[i].is_positive());
        yb += y[i] * sys.rows[i].rhs;
    }
    assert(yb.is_positive());
    for (int j = 0; j < sys.num_vars; j++) {
        Rat col(0);
        for (std::size_t i = 0; i < sys.rows.size(); i++) col += y[i] * sys.rows[i].coef[j];
        assert(!col.is_positive());
        (void)col;
    }
    (void)yb;
}

}  // namespace

LpResult lp_feasible(const LinearSystem& system, long pivot_cap) {
    for (const auto& row : system.rows)
        if (static_cast<int>(row.coef.size()) != system.num_vars)
            throw std::invalid_argument("row width does not match variable count");

    Tableau t(system, pivot_cap);
    while (t.phase1_step()) {
    }
    LpResult out;
    out.pivots = t.pivots();
    if (t.phase1_objective().is_positive()) {
        out.feasible = false;
        out.farkas = t.farkas();
        verify_farkas(system, out.farkas);
        return out;
    }
    t.remove_artificials();
    out.feasible = true;
    out.point = t.structural_point();
    verify_point(system, out.point);
    out.pivots = t.pivots();
    return out;
}

VertexEnumStats for_each_basic_feasible_point(
    const LinearSystem& system, long max_bases, long pivot_cap,
    const std::function<bool(const std::vector<Rat>&)>& visit) {
    VertexEnumStats stats;
    Tableau t(system, pivot_cap);
    while (t.phase1_step()) {
    }
    if (t.phase1_objective().is_positive()) {
        stats.complete = true;  // empty polytope
        return stats;
    }
    t.remove_artificials();

    int cols = t.width();
    std::set<std::vector<int>> seen_bases;
    std::set<std::vector<Rat>> seen_points;
    bool hit_cap = false;

    // Depth-first over feasible bases; each move is a ratio-test pivot,
    // undone exactly on backtrack. Ties in the ratio test branch into every
    // minimizing row so degenerate vertices are fully explored.
    std::function<bool()> dfs = [&]() -> bool {
        std::vector<int> key(t.basis());
        std::sort(key.begin(), key.end());
        if (!seen_bases.insert(key).second) return true;
        if (static_cast<long>(seen_bases.size()) > max_bases) {
            hit_cap = true;
            return true;
        }
        stats.bases_visited++;
        auto point = t.structural_point();
        if (seen_points.insert(point).second) {
            stats.points_visited++;
            if (!visit(point)) {
                stats.stopped_early = true;
                return false;
            }
        }
        std::vector<char> in_basis(cols, 0);
        for (int b : t.basis()) in_basis[b] = 1;
        for (int s = 0; s < cols; s++) {
            if (in_basis[s]) continue;
            std::vector<int> leaving;
            Rat best_num(0), best_den(1);
            for (int i = 0; i < t.row_count(); i++) {
                const Rat& a = t.at(i, s);
                if (!a.is_positive()) continue;
                const Rat& b = t.rhs(i);
                if (leaving.empty()) {
                    leaving = {i};
                    best_num = b;
                    best_den = a;
                    continue;
                }
                Rat lhs = b * best_den, rhs_v = best_num * a;
                if (lhs < rhs_v) {
                    leaving = {i};
                    best_num = b;
                    best_den = a;
                } else if (lhs == rhs_v) {
                    leaving.push_back(i);
                }
            }
            for (int r : leaving) {
                int old = t.basis()[r];
                std::vector<int> nb(t.basis());
                nb[r] = s;
                std::sort(nb.begin(), nb.end());
                if (seen_bases.count(nb)) continue;
                try {
                    t.pivot(r, s);
                } catch (const budget_error&) {
                    hit_cap = true;
                    return true;
                }
                bool keep_going = dfs();
                try {
                    t.pivot(r, old);
                } catch (const budget_error&) {
                    hit_cap = true;
                    return false;
                }
                if (!keep_going) return false;
                if (hit_cap) return true;
            }
        }
        return true;
    };
    dfs();
    stats.complete = !hit_cap && !stats.stopped_early;
    return stats;
}

}  // namespace ucat
