#pragma once

// Brute-force references used to cross-check every transcribed formula.
// Nothing here reads a coefficient formula; everything is linear algebra on
// explicit polynomials.

#include "opoly/structure.hpp"

#include <optional>
#include <vector>

namespace opoly {

template <class F>
struct LinearSolution {
    std::vector<F> values;
    std::vector<bool> determined;  // false for free unknowns (set to zero)
};

// Solves sum_j x_j cols[j] = target exactly by Gaussian elimination on the
// monomial coefficients. Returns nullopt when the system is inconsistent.
template <class F>
std::optional<LinearSolution<F>> solve_linear(const std::vector<Polynomial<F>>& cols, const Polynomial<F>& target) {
    int rows = target.degree() + 1;
    for (const auto& c : cols) rows = std::max(rows, c.degree() + 1);
    const size_t nc = cols.size();
    std::vector<std::vector<F>> m(rows, std::vector<F>(nc + 1, F(0)));
    for (int i = 0; i < rows; ++i) {
        for (size_t j = 0; j < nc; ++j) m[i][j] = basis_convert(cols[j], Basis::Monomial).coeff(i);
        m[i][nc] = basis_convert(target, Basis::Monomial).coeff(i);
    }
    std::vector<int> pivot_col;
    int r = 0;
    for (size_t j = 0; j < nc && r < rows; ++j) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (!m[i][j].is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[piv], m[r]);
        F inv = F(1) / m[r][j];
        for (size_t k = j; k <= nc; ++k) m[r][k] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][j].is_zero()) continue;
            F f = m[i][j];
            for (size_t k = j; k <= nc; ++k) m[i][k] -= f * m[r][k];
        }
        pivot_col.push_back(static_cast<int>(j));
        ++r;
    }
    for (int i = r; i < rows; ++i)
        if (!m[i][nc].is_zero()) return std::nullopt;
    LinearSolution<F> sol{std::vector<F>(nc, F(0)), std::vector<bool>(nc, false)};
    for (int i = 0; i < r; ++i) {
        sol.values[pivot_col[i]] = m[i][nc];
        sol.determined[pivot_col[i]] = true;
    }
    return sol;
}

// Coefficients of target in the triangular basis q_0..q_n (deg q_m = m),
// by back-substitution from the top degree.
template <class F>
std::vector<F> expand_in(const Polynomial<F>& target, const std::vector<Polynomial<F>>& q) {
    Polynomial<F> rest = basis_convert(target, Basis::Monomial);
    int n = rest.degree();
    if (n >= static_cast<int>(q.size())) throw std::invalid_argument("expansion basis too short");
    std::vector<F> c(std::max(n, 0) + 1, F(0));
    for (int m = n; m >= 0; --m) {
        const auto qm = basis_convert(q[m], Basis::Monomial);
        if (qm.degree() != m) throw std::invalid_argument("expansion basis is not triangular");
        c[m] = rest.coeff(m) / qm.leading();
        rest -= qm * c[m];
    }
    if (!rest.is_zero()) throw std::logic_error("triangular expansion left a remainder");
    return c;
}

// The degree-n polynomial solution of the differential/difference equation
// with leading coefficient k_n, found by solving the triangular system of the
// operator applied to x^j. Throws if some lambda_j equals lambda_n for j < n.
template <class F>
Polynomial<F> oracle_polynomial(const FamilySpec<F>& s, long n) {
    std::vector<Polynomial<F>> images;
    for (long j = 0; j <= n; ++j) images.push_back(apply_operator(s, Polynomial<F>::unit(j), n));
    std::vector<F> c(n + 1, F(0));
    c[n] = s.k(n);
    for (long j = n - 1; j >= 0; --j) {
        // coefficient of x^j in L(p) must vanish; L(x^i) has degree <= i.
        F acc(0);
        for (long i = j + 1; i <= n; ++i) acc += images[i].coeff(j) * c[i];
        F diag = images[j].coeff(j);
        if (diag.is_zero()) throw AdmissibilityError("oracle", n, "lambda_n - lambda_j");
        c[j] = -acc / diag;
    }
    return Polynomial<F>(std::move(c));
}

template <class F>
std::vector<Polynomial<F>> oracle_family(const FamilySpec<F>& s, long n_max) {
    std::vector<Polynomial<F>> out;
    for (long n = 0; n <= n_max; ++n) out.push_back(oracle_polynomial(s, n));
    return out;
}

// Triple (lo, mid, hi) solving target = hi Q[n+1] + mid Q[n] + lo Q[n-1]
// (Q[-1] = 0). Entries without a constraint are reported undetermined.
template <class F>
std::optional<LinearSolution<F>> solve_triple(const Polynomial<F>& target, const std::vector<Polynomial<F>>& q,
                                              long n) {
    Polynomial<F> lo = n > 0 ? q[n - 1] : Polynomial<F>();
    return solve_linear<F>({lo, q[n], q[n + 1]}, target);
}

}  // namespace opoly
