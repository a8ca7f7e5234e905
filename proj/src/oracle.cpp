#include "pyjama/oracle.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace pyjama {

namespace {

// Dense exact-rational simplex for min c.x s.t. A x = b, x >= 0.
// Bland's least-index rule everywhere, so termination is guaranteed.
class Simplex {
public:
    Simplex(std::vector<RatVec> a, RatVec b, RatVec cost)
        : a_(std::move(a)), b_(std::move(b)), cost_(std::move(cost)),
          m_(a_.size()), n_(cost_.size()) {}

    bool solve() {
        for (std::size_t i = 0; i < m_; ++i)
            if (b_[i] < 0) {
                for (auto& v : a_[i]) v = -v;
                b_[i] = -b_[i];
            }
        build_tableau();
        if (!phase_one()) return false;
        phase_two();
        return true;
    }

    RatVec solution() const {
        RatVec x(n_, Rat(0));
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (basis_[i] < n_) x[basis_[i]] = rhs_[i];
        return x;
    }

private:
    void build_tableau() {
        // columns: n_ structural, then one artificial per row, then rhs kept
        // separately in rhs_.
        rows_.assign(m_, RatVec(n_ + m_, Rat(0)));
        rhs_ = b_;
        basis_.resize(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) rows_[i][j] = a_[i][j];
            rows_[i][n_ + i] = 1;
            basis_[i] = n_ + i;
        }
    }

    // Reduced-cost row for the given objective over all current columns.
    RatVec reduced_costs(const RatVec& obj, Rat& value) const {
        RatVec red = obj;
        value = 0;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const Rat& cb = obj[basis_[i]];
            if (cb == 0) continue;
            for (std::size_t j = 0; j < red.size(); ++j)
                if (rows_[i][j] != 0) red[j] -= cb * rows_[i][j];
            value += cb * rhs_[i];
        }
        return red;
    }

    void pivot(std::size_t r, std::size_t c) {
        const Rat piv = rows_[r][c];
        for (auto& v : rows_[r]) v /= piv;
        rhs_[r] /= piv;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i == r || rows_[i][c] == 0) continue;
            const Rat f = rows_[i][c];
            for (std::size_t j = 0; j < rows_[i].size(); ++j)
                if (rows_[r][j] != 0) rows_[i][j] -= f * rows_[r][j];
            rhs_[i] -= f * rhs_[r];
        }
        basis_[r] = c;
    }

    // Minimize obj over columns [0, limit). Returns false on unboundedness.
    bool run(const RatVec& obj, std::size_t limit) {
        for (;;) {
            Rat value;
            RatVec red = reduced_costs(obj, value);
            std::size_t enter = limit;
            for (std::size_t j = 0; j < limit; ++j)
                if (red[j] < 0) { enter = j; break; }
            if (enter == limit) return true;
            std::size_t leave = rows_.size();
            for (std::size_t i = 0; i < rows_.size(); ++i) {
                if (rows_[i][enter] <= 0) continue;
                if (leave == rows_.size()) { leave = i; continue; }
                const Rat lhs = rhs_[i] * rows_[leave][enter];
                const Rat rhs = rhs_[leave] * rows_[i][enter];
                if (lhs < rhs || (lhs == rhs && basis_[i] < basis_[leave])) leave = i;
            }
            if (leave == rows_.size()) return false;
            pivot(leave, enter);
        }
    }

    bool phase_one() {
        RatVec obj(n_ + m_, Rat(0));
        for (std::size_t j = n_; j < n_ + m_; ++j) obj[j] = 1;
        run(obj, n_ + m_);
        Rat value;
        reduced_costs(obj, value);
        if (value != 0) return false;
        // Pivot leftover artificials out; rows with no structural support
        // are redundant and dropped.
        for (std::size_t i = 0; i < rows_.size();) {
            if (basis_[i] < n_) { ++i; continue; }
            std::size_t c = n_;
            for (std::size_t j = 0; j < n_; ++j)
                if (rows_[i][j] != 0) { c = j; break; }
            if (c < n_) {
                pivot(i, c);
                ++i;
            } else {
                rows_.erase(rows_.begin() + static_cast<long>(i));
                rhs_.erase(rhs_.begin() + static_cast<long>(i));
                basis_.erase(basis_.begin() + static_cast<long>(i));
            }
        }
        return true;
    }

    void phase_two() {
        RatVec obj(n_ + m_, Rat(0));
        for (std::size_t j = 0; j < n_; ++j) obj[j] = cost_[j];
        if (!run(obj, n_))  // artificials excluded from entering
            throw std::logic_error("simplex: unbounded objective");
    }

    std::vector<RatVec> a_;
    RatVec b_, cost_;
    std::size_t m_, n_;

    std::vector<RatVec> rows_;
    RatVec rhs_;
    std::vector<std::size_t> basis_;
};

Int l1_norm(const IntMat& m, std::size_t row) {
    Int s = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) s += abs(m.at(row, j));
    return s;
}

Rat row_dot_center(const IntMat& m, std::size_t row, const RatVec& c) {
    Rat dot = 0;
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (m.at(row, j) != 0) dot += Rat(m.at(row, j)) * c[j];
    return dot;
}

}  // namespace

LpResult chebyshev_min_linf(const AffineSystem& sys) {
    const std::size_t k = sys.lattice_rows.rows();
    const std::size_t n = sys.lattice_rows.cols();
    if (sys.rhs.size() != k) throw std::invalid_argument("chebyshev_min_linf: rhs size mismatch");
    if (sys.center.size() != n) throw std::invalid_argument("chebyshev_min_linf: center size mismatch");
    for (std::size_t i = 0; i < k; ++i)
        if (l1_norm(sys.lattice_rows, i) == 0)
            throw std::invalid_argument("chebyshev_min_linf: zero row");

    // Variables: w_0..w_{n-1}, t, s_0..s_{n-1}, all >= 0, where
    // x_j = w_j + c_j - t and w_j <= 2t encodes |x_j - c_j| <= t.
    const std::size_t nv = 2 * n + 1;
    const std::size_t t_idx = n;
    std::vector<RatVec> a(k + n, RatVec(nv, Rat(0)));
    RatVec b(k + n, Rat(0));
    RatVec cost(nv, Rat(0));
    cost[t_idx] = 1;

    for (std::size_t i = 0; i < k; ++i) {
        Int row_sum = 0;
        for (std::size_t j = 0; j < n; ++j) {
            a[i][j] = Rat(sys.lattice_rows.at(i, j));
            row_sum += sys.lattice_rows.at(i, j);
        }
        a[i][t_idx] = Rat(-row_sum);
        b[i] = Rat(sys.rhs[i]) - row_dot_center(sys.lattice_rows, i, sys.center);
    }
    for (std::size_t j = 0; j < n; ++j) {
        a[k + j][j] = 1;
        a[k + j][t_idx] = -2;
        a[k + j][n + 1 + j] = 1;
    }

    Simplex s(std::move(a), std::move(b), std::move(cost));
    LpResult out;
    if (!s.solve()) return out;
    RatVec x = s.solution();
    out.feasible = true;
    out.value = x[t_idx];
    out.argmin.resize(n);
    for (std::size_t j = 0; j < n; ++j) out.argmin[j] = x[j] + sys.center[j] - x[t_idx];
    return out;
}

namespace {

struct RowChoices {
    std::vector<Int> values;  // candidate rhs, nearest first
    std::vector<Rat> bound;   // |M - l.c| / ||l||_1 per candidate
};

// Depth-first minimum over rhs combinations, pruning any branch whose
// single-row lower bound already matches the best value found.
void enumerate(const IntMat& rows, const RatVec& c, const std::vector<RowChoices>& choices,
               std::size_t depth, std::vector<Int>& picked, const Rat& path_bound,
               std::optional<Rat>& best) {
    if (best && (*best == 0 || path_bound >= *best)) return;
    if (depth == choices.size()) {
        LpResult lp = chebyshev_min_linf({rows, picked, c});
        if (lp.feasible && (!best || lp.value < *best)) best = lp.value;
        return;
    }
    const RowChoices& rc = choices[depth];
    for (std::size_t i = 0; i < rc.values.size(); ++i) {
        if (best && rc.bound[i] >= *best) break;  // sorted ascending
        picked[depth] = rc.values[i];
        enumerate(rows, c, choices, depth + 1, picked,
                  std::max(path_bound, rc.bound[i]), best);
    }
}

std::optional<Rat> attempt(const LatticeBasis& basis, const RatVec& c, const Rat& upper) {
    std::vector<RowChoices> choices(basis.rank());
    for (std::size_t g = 0; g < basis.rank(); ++g) {
        const Rat dot = row_dot_center(basis.basis, g, c);
        const Rat slack = Rat(l1_norm(basis.basis, g)) * upper;
        const Int lo = rat_ceil(dot - slack);
        const Int hi = rat_floor(dot + slack);
        if (lo > hi) return std::nullopt;  // no candidate rhs at this bound
        const Rat norm(l1_norm(basis.basis, g));
        for (Int m = lo; m <= hi; ++m) {
            choices[g].values.push_back(m);
            choices[g].bound.push_back(rat_abs(Rat(m) - dot) / norm);
        }
        std::vector<std::size_t> order(choices[g].values.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
            if (choices[g].bound[x] != choices[g].bound[y])
                return choices[g].bound[x] < choices[g].bound[y];
            return choices[g].values[x] < choices[g].values[y];
        });
        RowChoices sorted;
        for (std::size_t i : order) {
            sorted.values.push_back(choices[g].values[i]);
            sorted.bound.push_back(choices[g].bound[i]);
        }
        choices[g] = std::move(sorted);
    }
    std::optional<Rat> best;
    std::vector<Int> picked(basis.rank());
    enumerate(basis.basis, c, choices, 0, picked, Rat(0), best);
    return best;
}

}  // namespace

Rat delta_oracle(const LatticeBasis& basis, const RatVec& c, const Rat& upper) {
    if (upper < 0) throw std::invalid_argument("delta_oracle: upper bound must be >= 0");
    if (static_cast<long>(c.size()) != basis.n)
        throw std::invalid_argument("delta_oracle: center dimension mismatch");
    if (basis.rank() == 0) return Rat(0);

    const Rat half = make_rat(1, 2);
    Rat u = std::min(upper, half);  // distance to the nearest integer point is <= 1/2
    for (;;) {
        std::optional<Rat> best = attempt(basis, c, u);
        if (best && *best <= u) return *best;
        if (u == half) {
            // The box at 1/2 provably contains the optimum.
            if (best) return *best;
            throw std::logic_error("delta_oracle: empty search box at upper = 1/2");
        }
        u = std::min(u > 0 ? Rat(2 * u) : make_rat(1, 8), half);
    }
}

}  // namespace pyjama
