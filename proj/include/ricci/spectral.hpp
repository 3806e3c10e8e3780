#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "ricci/errors.hpp"
#include "ricci/markov.hpp"
#include "ricci/rational.hpp"

namespace ricci {

/// Eigendecomposition of the symmetrized Laplacian
///   S(x,y) = delta(x,y) - sqrt(m(x)/m(y)) M(x,y),
/// which is similar to L = I - M whenever (M, m) is reversible. Eigenvalues
/// are sorted ascending; column k of `vectors` is the unit eigenvector of S
/// for eigenvalue k. Divide entrywise by sqrt(m) to get an L-eigenvector.
struct Spectrum {
    std::vector<double> values;
    std::vector<std::vector<double>> vectors;  // vectors[k][x]

    int size() const { return static_cast<int>(values.size()); }
};

/// Converts the k-th symmetric eigenvector into an eigenvector of I - M.
inline std::vector<double> laplacian_eigenvector(const Spectrum& s, int k,
                                                 const PerronMeasure& m) {
    std::vector<double> v(s.size());
    for (int x = 0; x < s.size(); ++x)
        v[x] = s.vectors[k][x] / std::sqrt(to_double(m(x)));
    return v;
}

inline Spectrum spectrum(const Kernel& M, const PerronMeasure& m) {
    if (!detailed_balance(M, m))
        throw PreconditionError("kernel is not reversible for this measure");
    const int n = M.size();

    // Assemble S exactly symmetrically: the off-diagonal entry for {x, y}
    // is derived from the single rational t = m(x) M(x,y) = m(y) M(y,x).
    std::vector<std::vector<double>> A(n, std::vector<double>(n, 0.0));
    std::vector<double> sm(n);
    for (int x = 0; x < n; ++x) sm[x] = std::sqrt(to_double(m(x)));
    for (int x = 0; x < n; ++x) {
        A[x][x] = 1.0 - to_double(M(x, x));
        for (int y = x + 1; y < n; ++y) {
            const Rational t = m(x) * M(x, y);
            const double v = -to_double(t) / (sm[x] * sm[y]);
            A[x][y] = v;
            A[y][x] = v;
        }
    }

    std::vector<std::vector<double>> V(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) V[i][i] = 1.0;

    // Cyclic Jacobi rotations on the upper triangle.
    bool converged = false;
    for (int sweep = 0; sweep < 100 && !converged; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q)
                off = std::max(off, std::abs(A[p][q]));
        if (off < 1e-14) {
            converged = true;
            break;
        }
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                if (A[p][q] == 0.0) continue;
                const double theta = (A[q][q] - A[p][p]) / (2.0 * A[p][q]);
                const double t =
                    (theta >= 0 ? 1.0 : -1.0) /
                    (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double app = A[p][p], aqq = A[q][q], apq = A[p][q];
                A[p][p] = app - t * apq;
                A[q][q] = aqq + t * apq;
                A[p][q] = A[q][p] = 0.0;
                for (int r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    const double arp = A[r][p], arq = A[r][q];
                    A[r][p] = A[p][r] = c * arp - s * arq;
                    A[r][q] = A[q][r] = s * arp + c * arq;
                }
                for (int r = 0; r < n; ++r) {
                    const double vrp = V[r][p], vrq = V[r][q];
                    V[r][p] = c * vrp - s * vrq;
                    V[r][q] = s * vrp + c * vrq;
                }
            }
    }
    if (!converged) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q)
                off = std::max(off, std::abs(A[p][q]));
        if (off >= 1e-14)
            throw NumericalError("eigenvalue iteration did not converge");
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return A[i][i] < A[j][j]; });

    Spectrum out;
    out.values.resize(n);
    out.vectors.assign(n, std::vector<double>(n));
    for (int k = 0; k < n; ++k) {
        out.values[k] = A[order[k]][order[k]];
        for (int x = 0; x < n; ++x) out.vectors[k][x] = V[x][order[k]];
    }
    return out;
}

inline Spectrum spectrum(const Analysis& a) { return spectrum(a.M, a.m); }

/// Smallest nonzero eigenvalue (the spectral gap of I - M).
inline double lambda1(const Spectrum& s) { return s.values[1]; }

}  // namespace ricci
