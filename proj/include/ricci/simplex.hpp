#pragma once

#include <utility>
#include <vector>

#include "ricci/errors.hpp"
#include "ricci/rational.hpp"

namespace ricci::lp {

/// Equality-standard-form program: minimize c.x subject to A x = b, x >= 0.
struct Program {
    std::vector<std::vector<Rational>> A;
    std::vector<Rational> b;
    std::vector<Rational> c;
};

struct Solution {
    Rational value;
    std::vector<Rational> x;
};

struct InfeasibleError : NumericalError {
    using NumericalError::NumericalError;
};
struct UnboundedError : NumericalError {
    using NumericalError::NumericalError;
};

/// Exact two-phase dense tableau simplex with Bland's anti-cycling rule.
///
/// Phase 1 starts from an artificial basis, so redundant rows and degenerate
/// bases are handled without perturbation: artificials stuck at zero are
/// pivoted out where possible and their rows dropped otherwise. All pivoting
/// is exact rational arithmetic; Bland's smallest-index rule (applied to both
/// the entering column and ratio-test ties) guarantees finite termination.
class Simplex {
public:
    static Solution solve(const Program& p) { return Simplex(p).run(); }

private:
    explicit Simplex(const Program& p)
        : m_(static_cast<int>(p.A.size())),
          n_(static_cast<int>(p.c.size())),
          cost_(p.c) {
        tab_.assign(m_ + 1, std::vector<Rational>(n_ + m_ + 1, Rational(0)));
        basis_.resize(m_);
        for (int i = 0; i < m_; ++i) {
            bool flip = p.b[i] < 0;
            for (int j = 0; j < n_; ++j)
                tab_[i][j] = flip ? -p.A[i][j] : p.A[i][j];
            tab_[i][rhs()] = flip ? -p.b[i] : p.b[i];
            tab_[i][n_ + i] = 1;
            basis_[i] = n_ + i;
        }
    }

    int rhs() const { return static_cast<int>(tab_[0].size()) - 1; }

    void pivot(int row, int col) {
        auto& tr = tab_[row];
        const Rational piv = tr[col];
        for (auto& v : tr) v /= piv;
        for (int i = 0; i <= m_; ++i) {
            if (i == row || tab_[i][col] == 0) continue;
            const Rational f = tab_[i][col];
            auto& ti = tab_[i];
            for (size_t j = 0; j < ti.size(); ++j)
                if (tr[j] != 0) ti[j] -= f * tr[j];
        }
        if (row < m_) basis_[row] = col;
    }

    /// Bland iterations over columns [0, ncols). Cost row is tab_[m_].
    void iterate(int ncols) {
        for (;;) {
            if (++pivots_ > kMaxPivots)
                throw NumericalError("simplex pivot limit exceeded");
            int enter = -1;
            for (int j = 0; j < ncols; ++j)
                if (tab_[m_][j] < 0) {
                    enter = j;
                    break;
                }
            if (enter < 0) return;
            int leave = -1;
            Rational best;
            for (int i = 0; i < m_; ++i) {
                if (tab_[i][enter] <= 0) continue;
                Rational ratio = tab_[i][rhs()] / tab_[i][enter];
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave < 0) throw UnboundedError("objective unbounded below");
            pivot(leave, enter);
        }
    }

    Solution run() {
        // Phase 1: minimize the sum of artificials.
        auto& z = tab_[m_];
        for (int i = 0; i < m_; ++i) {
            for (int j = 0; j < n_; ++j) z[j] -= tab_[i][j];
            z[rhs()] -= tab_[i][rhs()];
        }
        iterate(n_ + m_);
        if (z[rhs()] != 0) throw InfeasibleError("no feasible point");

        // Pivot leftover artificials out; a row whose non-artificial entries
        // all vanished restates an existing constraint and is dropped.
        for (int i = m_ - 1; i >= 0; --i) {
            if (basis_[i] < n_) continue;
            int col = -1;
            for (int j = 0; j < n_; ++j)
                if (tab_[i][j] != 0) {
                    col = j;
                    break;
                }
            if (col >= 0) {
                pivot(i, col);
            } else {
                tab_.erase(tab_.begin() + i);
                basis_.erase(basis_.begin() + i);
                --m_;
            }
        }

        // Phase 2 over the original columns with the real costs.
        const int old_rhs = rhs();
        for (auto& row : tab_) {
            row[n_] = row[old_rhs];
            row.resize(n_ + 1);
        }
        auto& z2 = tab_[m_];
        for (auto& v : z2) v = 0;
        for (int j = 0; j < n_; ++j) z2[j] = cost_[j];
        for (int i = 0; i < m_; ++i) {
            if (cost_[basis_[i]] == 0) continue;
            const Rational f = cost_[basis_[i]];
            for (int j = 0; j <= n_; ++j)
                if (tab_[i][j] != 0) z2[j] -= f * tab_[i][j];
        }
        iterate(n_);

        Solution s;
        s.x.assign(n_, Rational(0));
        for (int i = 0; i < m_; ++i) s.x[basis_[i]] = tab_[i][rhs()];
        s.value = 0;
        for (int j = 0; j < n_; ++j)
            if (s.x[j] != 0) s.value += cost_[j] * s.x[j];
        return s;
    }

    static constexpr long kMaxPivots = 2'000'000;

    int m_, n_;
    std::vector<Rational> cost_;
    std::vector<std::vector<Rational>> tab_;
    std::vector<int> basis_;
    long pivots_ = 0;
};

inline Solution solve(const Program& p) { return Simplex::solve(p); }

}  // namespace ricci::lp
