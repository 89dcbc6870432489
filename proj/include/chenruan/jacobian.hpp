#pragma once

#include <functional>

#include "fan.hpp"
#include "groebner.hpp"

namespace chenruan {

// Degree in the class-group grading of the homogeneous coordinate ring:
// free part (total degree against the divisor weights) plus the torsion
// residue of the exponent vector modulo principal divisors.
struct ChowDegree {
    long total = 0;
    IntVec torsion_normal_form; // canonical residue representative

    friend bool operator==(const ChowDegree& a, const ChowDegree& b) {
        return a.total == b.total && a.torsion_normal_form == b.torsion_normal_form;
    }
    friend bool operator!=(const ChowDegree& a, const ChowDegree& b) { return !(a == b); }
};

// Grading of Q[x_1..x_n] by the class group of the toric variety: two
// monomials share a degree iff their exponent difference is a principal
// divisor, i.e. lies in the image of M -> Z^n, m -> (<m, v_i>)_i.
class ChowGrading {
public:
    explicit ChowGrading(const Fan& fan) : nvars_(static_cast<int>(fan.rays().size())) {
        // rows of the principal lattice: for each basis vector of M
        for (int j = 0; j < fan.dim(); ++j) {
            IntVec row;
            for (const auto& ray : fan.rays()) row.push_back(ray[j]);
            principal_.push_back(std::move(row));
        }
    }

    int nvars() const { return nvars_; }

    ChowDegree degree_of(const Mono& e) const {
        ChowDegree d;
        for (int x : e) d.total += x;
        d.torsion_normal_form = torsion_residue(e);
        return d;
    }

    bool same_class(const Mono& a, const Mono& b) const { return degree_of(a) == degree_of(b); }

    // Degree homogeneity check across a polynomial.
    std::optional<ChowDegree> degree_of(const Poly& p) const {
        std::optional<ChowDegree> deg;
        for (const auto& t : p.terms) {
            ChowDegree d = degree_of(t.mono);
            if (!deg) deg = d;
            else if (*deg != d) return std::nullopt;
        }
        return deg;
    }

private:
    // canonical representative of e modulo the principal lattice, by greedy
    // reduction in a fixed echelonized integer basis
    IntVec torsion_residue(const Mono& e) const {
        // Solve over Q and round: residue = e - round-solution * principal.
        // For exactness use successive integer reduction via the kernel-free
        // method: reduce e by integer multiples of echelon rows.
        IntVec r(e.begin(), e.end());
        for (const auto& row : echelon()) {
            int pivot = -1;
            for (size_t i = 0; i < row.size(); ++i)
                if (row[i] != 0) { pivot = static_cast<int>(i); break; }
            if (pivot < 0) continue;
            long q = (r[pivot] >= 0 ? r[pivot] / row[pivot] : -(((-r[pivot]) + row[pivot] - 1) / row[pivot]));
            for (size_t i = 0; i < r.size(); ++i) r[i] -= q * row[i];
        }
        return r;
    }

    const IntMat& echelon() const {
        if (echelon_.empty()) {
            IntMat work = principal_;
            // integer row echelon with positive pivots (Hermite-style)
            size_t rows = work.size(), cols = work[0].size(), rank = 0;
            for (size_t c = 0; c < cols && rank < rows; ++c) {
                while (true) {
                    std::vector<size_t> nz;
                    for (size_t rr = rank; rr < rows; ++rr)
                        if (work[rr][c] != 0) nz.push_back(rr);
                    if (nz.empty()) break;
                    if (nz.size() == 1) {
                        std::swap(work[rank], work[nz[0]]);
                        break;
                    }
                    std::sort(nz.begin(), nz.end(),
                              [&](size_t x, size_t y) { return std::labs(work[x][c]) < std::labs(work[y][c]); });
                    long q = work[nz[1]][c] / work[nz[0]][c];
                    for (size_t i = 0; i < cols; ++i) work[nz[1]][i] -= q * work[nz[0]][i];
                }
                if (rank < rows && work[rank][c] != 0) {
                    if (work[rank][c] < 0)
                        for (auto& x : work[rank]) x = -x;
                    ++rank;
                }
            }
            work.resize(rank);
            echelon_ = std::move(work);
        }
        return echelon_;
    }

    int nvars_;
    IntMat principal_;
    mutable IntMat echelon_;
};

// Defining polynomial of the mirror-quintic family at a rational parameter.
inline Poly quintic_polynomial(const Rational& psi, const MonoOrder& order) {
    std::vector<Term> terms;
    for (int j = 0; j < 5; ++j) {
        Mono m(5, 0);
        m[j] = 5;
        terms.push_back({std::move(m), Rational(1)});
    }
    terms.push_back({Mono(5, 1), psi});
    return poly_from_terms(std::move(terms), order);
}

inline void check_psi_smooth(const Rational& psi) {
    // the family degenerates exactly at psi^5 = -5^5
    if (rat_pow(psi, 5) == Rational(-3125)) throw std::invalid_argument("degenerate parameter: psi^5 = -5^5");
}

struct JacobianData {
    Rational psi;
    std::vector<Poly> euler_derivatives; // F_j = x_j df/dx_j
    std::vector<Poly> f_basis;           // Groebner basis of <F_1..F_n>
    std::vector<Poly> quotient_basis;    // Groebner basis of <F> : (x_1...x_n)
    MonoOrder order = MonoOrder::grevlex();
};

inline JacobianData jacobian_data(const Rational& psi, const MonoOrder& order = MonoOrder::grevlex()) {
    check_psi_smooth(psi);
    JacobianData out;
    out.psi = psi;
    out.order = order;
    Poly f = quintic_polynomial(psi, order);
    for (size_t j = 0; j < 5; ++j) {
        Poly d = poly_derivative(f, j, order);
        Mono xj(5, 0);
        xj[j] = 1;
        out.euler_derivatives.push_back(poly_mul(poly_monomial(xj), d, order));
    }
    out.f_basis = groebner_basis(out.euler_derivatives, order);
    out.quotient_basis = ideal_quotient(out.euler_derivatives, poly_monomial(Mono(5, 1)), order);
    return out;
}

// dim_k (S / J1(f))_(a * beta) for the class-graded piece of u^a.
inline long graded_dimension(const JacobianData& jd, const ChowGrading& grading, int a) {
    const int deg = 5 * a;
    Mono target(5, a);
    ChowDegree cls = grading.degree_of(target);
    long count = 0;
    // enumerate degree-deg monomials in 5 variables
    Mono e(5, 0);
    std::function<void(int, int)> rec = [&](int var, int rem) {
        if (var == 4) {
            e[4] = rem;
            if (grading.degree_of(e) == cls) {
                bool standard = true;
                for (const auto& g : jd.quotient_basis)
                    if (mono_divides(g.lt().mono, e)) { standard = false; break; }
                if (standard) ++count;
            }
            return;
        }
        for (int v = 0; v <= rem; ++v) {
            e[var] = v;
            rec(var + 1, rem - v);
        }
        e[var] = 0;
    };
    rec(0, deg);
    return count;
}

struct ResiduePairingContext {
    std::vector<int> subset;  // I, zero-based ray/variable indices, |I| = d+1
    Rational c_beta;          // determinant of the augmented matrix
    Poly j_polynomial;        // J
    Rational vol;             // Vol(Delta_D)
};

// (c_I^beta): determinant of the (d+1)x(d+1) matrix whose first row holds the
// ample coefficients b_i and whose other rows pair the M basis with the rays.
inline Rational residue_subset_determinant(const Fan& fan, const std::vector<int>& subset,
                                           const std::vector<long>& ample_coeffs) {
    size_t d = fan.dim();
    if (subset.size() != d + 1) throw std::invalid_argument("subset size must be dim + 1");
    Matrix<Rational> m(d + 1, std::vector<Rational>(d + 1));
    for (size_t col = 0; col < d + 1; ++col) {
        int i = subset[col];
        m[0][col] = Rational(ample_coeffs[i]);
        for (size_t row = 0; row < d; ++row) m[row + 1][col] = Rational(fan.rays()[i][row]);
    }
    return mat_det(std::move(m));
}

// Determinant of a small polynomial matrix by Laplace expansion along rows.
inline Poly poly_matrix_det(const std::vector<std::vector<Poly>>& a, const MonoOrder& order) {
    std::function<Poly(std::vector<size_t>, size_t)> det = [&](std::vector<size_t> cols, size_t row) -> Poly {
        if (cols.size() == 1) return a[row][cols[0]];
        Poly acc = poly_zero();
        for (size_t k = 0; k < cols.size(); ++k) {
            if (a[row][cols[k]].is_zero()) continue;
            std::vector<size_t> rest;
            for (size_t t = 0; t < cols.size(); ++t)
                if (t != k) rest.push_back(cols[t]);
            Poly sub = poly_mul(a[row][cols[k]], det(rest, row + 1), order);
            acc = (k % 2 == 0) ? poly_add(acc, sub, order) : poly_sub(acc, sub, order);
        }
        return acc;
    };
    std::vector<size_t> cols(a.size());
    for (size_t i = 0; i < cols.size(); ++i) cols[i] = i;
    return det(cols, 0);
}

// J = det(dF_j/dx_i)_{i,j in I} / ((c_I^beta)^2 * x-hat_I), plus the constant.
inline std::pair<Poly, Rational> compute_J(const JacobianData& jd, const Fan& fan, const std::vector<int>& subset,
                                           const std::vector<long>& ample_coeffs) {
    Rational c = residue_subset_determinant(fan, subset, ample_coeffs);
    if (c == 0) throw std::domain_error("degenerate subset: zero augmented determinant");
    const MonoOrder& order = jd.order;
    size_t n = subset.size();
    std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
    for (size_t r = 0; r < n; ++r)
        for (size_t col = 0; col < n; ++col)
            m[r][col] = poly_derivative(jd.euler_derivatives[subset[col]], subset[r], order);
    Poly det = poly_matrix_det(m, order);
    Mono xhat(5, 0);
    for (int i = 0; i < 5; ++i)
        if (std::find(subset.begin(), subset.end(), i) == subset.end()) xhat[i] = 1;
    Poly j;
    for (const auto& t : det.terms) {
        Mono q = mono_div(t.mono, xhat); // throws if not divisible
        j.terms.push_back({std::move(q), t.coeff / (c * c)});
    }
    return {std::move(j), std::move(c)};
}

// The unique constant c with numerator - c*J in <F_1..F_n>, read off by socle
// proportionality of the two normal forms.
inline Rational residue_constant_of(const Poly& numerator, const JacobianData& jd,
                                    const ResiduePairingContext& ctx) {
    const MonoOrder& order = jd.order;
    Poly nf_num = normal_form(numerator, jd.f_basis, order);
    Poly nf_j = normal_form(ctx.j_polynomial, jd.f_basis, order);
    if (nf_j.is_zero()) throw std::domain_error("J reduces to zero in the socle piece");
    if (nf_num.is_zero()) return Rational(0);
    if (nf_num.terms.size() != nf_j.terms.size()) throw std::domain_error("normal forms are not proportional");
    Rational ratio = nf_num.lt().coeff / nf_j.lt().coeff;
    for (size_t i = 0; i < nf_j.terms.size(); ++i) {
        if (nf_num.terms[i].mono != nf_j.terms[i].mono || nf_num.terms[i].coeff != ratio * nf_j.terms[i].coeff)
            throw std::domain_error("normal forms are not proportional");
    }
    return ratio;
}

// Same constant for the residue classes A and B: numerator A*B*(x_1...x_n).
inline Rational residue_constant(const Poly& a, const Poly& b, const JacobianData& jd,
                                 const ResiduePairingContext& ctx) {
    Poly abu = poly_mul(poly_mul(a, b, jd.order), poly_monomial(Mono(5, 1)), jd.order);
    return residue_constant_of(abu, jd, ctx);
}

// Sign constant of the residue pairing.
inline Rational pairing_sign_constant(int a, int b, int d) {
    long e = static_cast<long>(a) * (a + 1) / 2 + static_cast<long>(b) * (b + 1) / 2 +
             static_cast<long>(a) * a + d - 1;
    Rational num((e % 2 == 0) ? 1 : -1);
    Integer fa = 1, fb = 1;
    for (int i = 2; i <= a; ++i) fa *= i;
    for (int i = 2; i <= b; ++i) fb *= i;
    return num / (Rational(fa) * Rational(fb));
}

// Volume of the simplex polytope of the ample divisor, from its vertices.
inline Rational polytope_volume(const std::vector<std::vector<Rational>>& vertices) {
    size_t d = vertices[0].size();
    if (vertices.size() != d + 1) throw std::invalid_argument("volume implemented for simplex polytopes");
    Matrix<Rational> diff(d, std::vector<Rational>(d));
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) diff[i][j] = vertices[i + 1][j] - vertices[0][j];
    Rational det = mat_det(std::move(diff));
    if (det < 0) det = -det;
    Integer fact = 1;
    for (size_t i = 2; i <= d; ++i) fact *= static_cast<long>(i);
    return det / Rational(fact);
}

// Vertices of the polytope {m : <m, v_i> >= -b_i}: intersect each d-subset of
// the facet hyperplanes and keep the points satisfying the rest.
inline std::vector<std::vector<Rational>> ample_polytope_vertices(const Fan& fan, const std::vector<long>& b) {
    size_t d = fan.dim(), n = fan.rays().size();
    std::vector<std::vector<Rational>> vertices;
    std::vector<int> pick(d);
    std::function<void(size_t, size_t)> rec = [&](size_t pos, size_t start) {
        if (pos == d) {
            Matrix<Rational> m(d, std::vector<Rational>(d));
            for (size_t r = 0; r < d; ++r)
                for (size_t c = 0; c < d; ++c) m[r][c] = Rational(fan.rays()[pick[r]][c]);
            Matrix<Rational> inv;
            try {
                inv = mat_inverse(m);
            } catch (const std::domain_error&) {
                return; // facet normals dependent: no vertex here
            }
            std::vector<Rational> x(d, Rational(0));
            for (size_t r = 0; r < d; ++r)
                for (size_t c = 0; c < d; ++c) x[r] += inv[r][c] * Rational(-b[pick[c]]);
            for (size_t i = 0; i < n; ++i) {
                Rational pair(0);
                for (size_t c = 0; c < d; ++c) pair += x[c] * Rational(fan.rays()[i][c]);
                if (pair < Rational(-b[i])) return;
            }
            if (std::find(vertices.begin(), vertices.end(), x) == vertices.end()) vertices.push_back(std::move(x));
            return;
        }
        for (size_t c = start; c + (d - pos) <= n; ++c) {
            pick[pos] = static_cast<int>(c);
            rec(pos + 1, c + 1);
        }
    };
    rec(0, 0);
    return vertices;
}

struct PairingValue {
    Rational c;            // residue constant
    Rational pi4_coeff;    // value = pi4_coeff * pi^4
};

// Cup-product value of the two residue classes: c * (-2 pi i)^d * c_ab * d! * Vol.
inline PairingValue pairing_value(const Poly& a, const Poly& b, int deg_a, int deg_b, const JacobianData& jd,
                                  const ResiduePairingContext& ctx) {
    const int d = 4;
    if (deg_a + deg_b != d - 1) throw std::invalid_argument("degree mismatch: a + b must be d - 1");
    Rational c = residue_constant(a, b, jd, ctx);
    // (-2 pi i)^4 = 16 pi^4
    Rational coeff = c * Rational(16) * pairing_sign_constant(deg_a, deg_b, d) * Rational(24) * ctx.vol;
    return {std::move(c), std::move(coeff)};
}

} // namespace chenruan
