#pragma once

#include "interval.hpp"
#include "matrix.hpp"
#include "monodromy.hpp"

namespace chenruan {

// Symmetric period matrix [[p, q], [q, s]] with exact entries in Q(zeta_5).
struct PeriodMatrix {
    Cyclotomic p, q, s;

    std::complex<double> pe() const { return p.embed(); }
    std::complex<double> qe() const { return q.embed(); }
    std::complex<double> se() const { return s.embed(); }

    // Im P positive definite, decided on interval embeddings.
    bool im_positive_definite() const {
        auto im = [](const Cyclotomic& c) {
            ComplexInterval e = embed_interval(c);
            return ComplexInterval{{e.center.imag(), 0.0}, e.radius};
        };
        ComplexInterval ip = im(p), iq = im(q), is = im(s);
        ComplexInterval det = ip * is + ComplexInterval{{-1.0, 0.0}, 0.0} * (iq * iq);
        return ip.sign_re_positive() && det.sign_re_positive();
    }
};

struct PeriodSolution {
    PeriodMatrix matrix;
    std::pair<int, int> eigen_pair; // zeta exponents of the two eigenlines
    bool positive_definite = false;
};

struct PeriodSolveResult {
    std::vector<PeriodSolution> solutions; // all algebraic solutions found
    size_t selected = 0;                   // index of the positive-definite one
    PeriodMatrix period() const { return solutions[selected].matrix; }
};

// Finds every holomorphic-span candidate for the monodromy action: the four
// eigenlines over Q(zeta_5) give six two-dimensional invariant subspaces;
// those with an invertible a-block and symmetric induced matrix are exactly
// the solutions of the quadratic period system. Exactly one has Im P > 0.
inline PeriodSolveResult solve_period_matrix(const Matrix<Rational>& h1_action) {
    if (h1_action.size() != 4) throw std::invalid_argument("period solver expects a 4x4 action");
    if (!is_symplectic(h1_action)) throw std::invalid_argument("monodromy action is not symplectic");
    const int order = 5;
    Cyclotomic zero(order), one(order, Rational(1));
    Matrix<Cyclotomic> m(4, std::vector<Cyclotomic>(4, zero));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m[i][j] = Cyclotomic(order, h1_action[i][j]);

    std::vector<std::pair<int, std::vector<Cyclotomic>>> lines;
    for (int t = 1; t <= 4; ++t) {
        auto kernel = eigenspace(m, Cyclotomic::root_power(order, t));
        if (kernel.size() != 1)
            throw std::domain_error("eigenvalue zeta^" + std::to_string(t) + " is not simple");
        lines.emplace_back(t, std::move(kernel[0]));
    }

    PeriodSolveResult out;
    for (size_t a = 0; a < lines.size(); ++a) {
        for (size_t b = a + 1; b < lines.size(); ++b) {
            const auto& u = lines[a].second;
            const auto& v = lines[b].second;
            // basis vectors as columns; a-rows are 0 and 2, b-rows 1 and 3
            Matrix<Cyclotomic> ablock = {{u[0], v[0]}, {u[2], v[2]}};
            Matrix<Cyclotomic> bblock = {{u[1], v[1]}, {u[3], v[3]}};
            Cyclotomic det = ablock[0][0] * ablock[1][1] - ablock[0][1] * ablock[1][0];
            if (det.is_zero()) continue;
            Matrix<Cyclotomic> p = mat_mul(bblock, mat_inverse(ablock));
            if (p[0][1] != p[1][0]) continue;
            PeriodSolution sol;
            sol.matrix = PeriodMatrix{p[0][0], p[0][1], p[1][1]};
            sol.eigen_pair = {lines[a].first, lines[b].first};
            sol.positive_definite = sol.matrix.im_positive_definite();
            out.solutions.push_back(std::move(sol));
        }
    }
    size_t posdef = 0;
    for (size_t i = 0; i < out.solutions.size(); ++i) {
        if (out.solutions[i].positive_definite) {
            out.selected = i;
            ++posdef;
        }
    }
    if (posdef != 1)
        throw std::domain_error("expected a unique positive-definite period matrix, found " + std::to_string(posdef));
    return out;
}

// Exact invariance certificate: the span of (1, p, 0, q) and (0, q, 1, s) is
// carried to itself by the action.
inline bool span_is_invariant(const Matrix<Rational>& h1_action, const PeriodMatrix& pm) {
    const int order = 5;
    Matrix<Cyclotomic> m(4, std::vector<Cyclotomic>(4, Cyclotomic(order)));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m[i][j] = Cyclotomic(order, h1_action[i][j]);
    Cyclotomic one(order, Rational(1)), zero(order);
    Matrix<Cyclotomic> w = {{one, zero}, {pm.p, pm.q}, {zero, one}, {pm.q, pm.s}}; // columns omega_1, omega_2
    Matrix<Cyclotomic> mw = mat_mul(m, w);
    // solve w * c = mw column by column via the a-rows, then check b-rows
    Matrix<Cyclotomic> arows = {{w[0][0], w[0][1]}, {w[2][0], w[2][1]}};
    Matrix<Cyclotomic> c = mat_mul(mat_inverse(arows), Matrix<Cyclotomic>{{mw[0][0], mw[0][1]}, {mw[2][0], mw[2][1]}});
    Matrix<Cyclotomic> recon = mat_mul(w, c);
    return recon == mw;
}

} // namespace chenruan
