#pragma once
// Truncated matrices of the discrete-series oscillator representation on
// l^2(Z_+): the four odd ladder pairs F+-, G+-, the even triple H, E+-, Z,
// and the derived observables (position, momentum, shifted Hamiltonian).
// Columns index the source basis vector: entries(m, n) = <m|X|n>.
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "report.hpp"

namespace sl21osc {

struct RepParams {
    double beta;
    double gamma = 1.0;
};

inline void require_beta(const RepParams& p) {
    if (!(p.beta > 0.0)) throw std::domain_error("beta must be positive");
}

namespace rep {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

enum class Gen {
    FPlus, FMinus, GPlus, GMinus,
    H, EPlus, EMinus, Z,
    QHat, PHat, HHat,
    ParaPlus, ParaMinus, OspPlus, OspMinus,
};

inline const char* gen_name(Gen g) {
    switch (g) {
    case Gen::FPlus: return "F+"; case Gen::FMinus: return "F-";
    case Gen::GPlus: return "G+"; case Gen::GMinus: return "G-";
    case Gen::H: return "H"; case Gen::EPlus: return "E+";
    case Gen::EMinus: return "E-"; case Gen::Z: return "Z";
    case Gen::QHat: return "qhat"; case Gen::PHat: return "phat";
    case Gen::HHat: return "Hhat";
    case Gen::ParaPlus: return "b+"; case Gen::ParaMinus: return "b-";
    case Gen::OspPlus: return "B+"; case Gen::OspMinus: return "B-";
    }
    return "?";
}

struct TruncatedOperator {
    Gen label;
    int dim;
    int bandwidth;
    Matrix entries;
};

inline bool even_level(int n) { return n % 2 == 0; }

inline Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }
inline Matrix anticommutator(const Matrix& a, const Matrix& b) { return a * b + b * a; }

// Max |entry| over the leading (dim-margin) x (dim-margin) block. Truncation
// corrupts a product only in its trailing rows/columns, so residuals are
// meaningful on this interior block.
inline double interior_max_abs(const Matrix& m, int margin) {
    int n = int(m.rows()) - margin;
    if (n <= 0) return 0.0;
    return m.topLeftCorner(n, n).cwiseAbs().maxCoeff();
}

inline Matrix build_matrix(Gen g, const RepParams& p, int N) {
    require_beta(p);
    if (N < 1) throw std::domain_error("truncation size must be positive");
    const double beta = p.beta;
    const double gamma = p.gamma;
    Matrix M = Matrix::Zero(N, N);
    auto half = [](int n) { return n / 2; }; // exact for even n
    switch (g) {
    case Gen::FPlus:
        for (int n = 0; n + 1 < N; n += 2)
            M(n + 1, n) = std::sqrt(beta + half(n));
        break;
    case Gen::FMinus:
        for (int n = 2; n < N; n += 2)
            M(n - 1, n) = std::sqrt(double(half(n)));
        break;
    case Gen::GPlus:
        for (int n = 1; n + 1 < N; n += 2)
            M(n + 1, n) = std::sqrt((n + 1) / 2.0);
        break;
    case Gen::GMinus:
        for (int n = 1; n < N; n += 2)
            M(n - 1, n) = -std::sqrt(beta + (n - 1) / 2.0);
        break;
    case Gen::H:
        for (int n = 0; n < N; ++n) M(n, n) = (n + beta) / 2.0;
        break;
    case Gen::Z:
        for (int n = 0; n < N; ++n)
            M(n, n) = even_level(n) ? -beta / 2.0 : -(beta - 1.0) / 2.0;
        break;
    case Gen::EPlus:
        for (int n = 0; n + 2 < N; ++n) {
            double c = even_level(n)
                           ? std::sqrt((beta + half(n)) * (1.0 + half(n)))
                           : std::sqrt((beta + (n + 1) / 2.0) * ((n + 1) / 2.0));
            M(n + 2, n) = c;
        }
        break;
    case Gen::EMinus:
        for (int n = 2; n < N; ++n) {
            double c = even_level(n)
                           ? std::sqrt((beta - 1.0 + half(n)) * half(n))
                           : std::sqrt((beta + (n - 1) / 2.0) * ((n - 1) / 2.0));
            M(n - 2, n) = -c;
        }
        break;
    case Gen::HHat:
        // shifted Hamiltonian 2H + (1/2 - beta): diagonal n + 1/2
        for (int n = 0; n < N; ++n) M(n, n) = n + 0.5;
        break;
    case Gen::QHat:
        M = build_matrix(Gen::FPlus, p, N) + gamma * build_matrix(Gen::GPlus, p, N)
            - build_matrix(Gen::GMinus, p, N) + gamma * build_matrix(Gen::FMinus, p, N);
        break;
    case Gen::PHat:
        M = Complex(0.0, 1.0)
            * (build_matrix(Gen::FPlus, p, N) + gamma * build_matrix(Gen::GPlus, p, N)
               + build_matrix(Gen::GMinus, p, N) - gamma * build_matrix(Gen::FMinus, p, N));
        break;
    case Gen::ParaPlus:
        for (int n = 0; n + 1 < N; ++n)
            M(n + 1, n) = even_level(n) ? std::sqrt(n + 2.0 * beta) : std::sqrt(n + 1.0);
        break;
    case Gen::ParaMinus:
        for (int n = 1; n < N; ++n)
            M(n - 1, n) = even_level(n) ? std::sqrt(double(n)) : std::sqrt(n - 1.0 + 2.0 * beta);
        break;
    case Gen::OspPlus:
        M = 0.5 * (build_matrix(Gen::FPlus, p, N) + build_matrix(Gen::GPlus, p, N));
        break;
    case Gen::OspMinus:
        M = 0.5 * (build_matrix(Gen::FMinus, p, N) - build_matrix(Gen::GMinus, p, N));
        break;
    }
    return M;
}

inline int bandwidth_of(Gen g) {
    switch (g) {
    case Gen::H: case Gen::Z: case Gen::HHat: return 0;
    case Gen::FPlus: case Gen::FMinus: case Gen::GPlus: case Gen::GMinus:
    case Gen::QHat: case Gen::PHat:
    case Gen::ParaPlus: case Gen::ParaMinus:
    case Gen::OspPlus: case Gen::OspMinus: return 1;
    case Gen::EPlus: case Gen::EMinus: return 2;
    }
    return 2;
}

inline TruncatedOperator build_generator(Gen g, const RepParams& p, int N) {
    return TruncatedOperator{g, N, bandwidth_of(g), build_matrix(g, p, N)};
}

// Every supercommutation relation among {F+-, G+-, H, E+-, Z}: odd-odd pairs
// close with anticommutators into the even part, even-even and even-odd pairs
// with commutators. Residuals are max |entry| on the interior block (products
// of two generators are exact there for margin 2).
inline CheckReport verify_brackets(const RepParams& p, int N) {
    if (N < 5) throw std::domain_error("verify_brackets: need N >= 5");
    const Matrix Fp = build_matrix(Gen::FPlus, p, N), Fm = build_matrix(Gen::FMinus, p, N);
    const Matrix Gp = build_matrix(Gen::GPlus, p, N), Gm = build_matrix(Gen::GMinus, p, N);
    const Matrix H = build_matrix(Gen::H, p, N), Z = build_matrix(Gen::Z, p, N);
    const Matrix Ep = build_matrix(Gen::EPlus, p, N), Em = build_matrix(Gen::EMinus, p, N);
    const int margin = 2;
    CheckReport rep;
    auto put = [&](const std::string& name, const Matrix& resid) {
        rep.add(name, interior_max_abs(resid, margin));
    };
    // odd-odd
    put("{F+,G+}-E+", anticommutator(Fp, Gp) - Ep);
    put("{F-,G-}-E-", anticommutator(Fm, Gm) - Em);
    put("{F+,G-}-(Z-H)", anticommutator(Fp, Gm) - (Z - H));
    put("{F-,G+}-(Z+H)", anticommutator(Fm, Gp) - (Z + H));
    put("{F+,F+}", anticommutator(Fp, Fp));
    put("{F-,F-}", anticommutator(Fm, Fm));
    put("{G+,G+}", anticommutator(Gp, Gp));
    put("{G-,G-}", anticommutator(Gm, Gm));
    put("{F+,F-}", anticommutator(Fp, Fm));
    put("{G+,G-}", anticommutator(Gp, Gm));
    // even-even
    put("[H,E+]-E+", commutator(H, Ep) - Ep);
    put("[H,E-]+E-", commutator(H, Em) + Em);
    put("[E+,E-]-2H", commutator(Ep, Em) - 2.0 * H);
    put("[Z,H]", commutator(Z, H));
    put("[Z,E+]", commutator(Z, Ep));
    put("[Z,E-]", commutator(Z, Em));
    // even-odd
    put("[H,F+]-F+/2", commutator(H, Fp) - 0.5 * Fp);
    put("[H,F-]+F-/2", commutator(H, Fm) + 0.5 * Fm);
    put("[Z,F+]-F+/2", commutator(Z, Fp) - 0.5 * Fp);
    put("[Z,F-]-F-/2", commutator(Z, Fm) - 0.5 * Fm);
    put("[E+,F+]", commutator(Ep, Fp));
    put("[E-,F-]", commutator(Em, Fm));
    put("[E-,F+]+F-", commutator(Em, Fp) + Fm);
    put("[E+,F-]+F+", commutator(Ep, Fm) + Fp);
    put("[H,G+]-G+/2", commutator(H, Gp) - 0.5 * Gp);
    put("[H,G-]+G-/2", commutator(H, Gm) + 0.5 * Gm);
    put("[Z,G+]+G+/2", commutator(Z, Gp) + 0.5 * Gp);
    put("[Z,G-]+G-/2", commutator(Z, Gm) + 0.5 * Gm);
    put("[E+,G+]", commutator(Ep, Gp));
    put("[E-,G-]", commutator(Em, Gm));
    put("[E-,G+]-G-", commutator(Em, Gp) - Gm);
    put("[E+,G-]-G+", commutator(Ep, Gm) - Gp);
    return rep;
}

// The star relations that make the representation unitary: Z, H self-adjoint,
// (E+-)* = -E-+, (F+-)* = -+G-+, (G+-)* = +-F-+, plus the two matrix-element
// identities <2n+1|F+|2n> = -<2n|G-|2n+1> and <2n-1|F-|2n> = <2n|G+|2n-1>
// that pin the signs.
inline CheckReport verify_star(const RepParams& p, int N) {
    if (N < 3) throw std::domain_error("verify_star: need N >= 3");
    const Matrix Fp = build_matrix(Gen::FPlus, p, N), Fm = build_matrix(Gen::FMinus, p, N);
    const Matrix Gp = build_matrix(Gen::GPlus, p, N), Gm = build_matrix(Gen::GMinus, p, N);
    const Matrix H = build_matrix(Gen::H, p, N), Z = build_matrix(Gen::Z, p, N);
    const Matrix Ep = build_matrix(Gen::EPlus, p, N), Em = build_matrix(Gen::EMinus, p, N);
    CheckReport rep;
    auto put = [&](const std::string& name, const Matrix& resid) {
        rep.add(name, resid.cwiseAbs().maxCoeff());
    };
    put("Z*-Z", Matrix(Z.adjoint()) - Z);
    put("H*-H", Matrix(H.adjoint()) - H);
    put("(E+)*+E-", Matrix(Ep.adjoint()) + Em);
    put("(E-)*+E+", Matrix(Em.adjoint()) + Ep);
    put("(F+)*+G-", Matrix(Fp.adjoint()) + Gm);
    put("(F-)*-G+", Matrix(Fm.adjoint()) - Gp);
    put("(G+)*-F-", Matrix(Gp.adjoint()) - Fm);
    put("(G-)*+F+", Matrix(Gm.adjoint()) + Fp);
    double elem_even = 0.0, elem_odd = 0.0;
    for (int n = 0; 2 * n + 1 < N; ++n)
        elem_even = std::max(elem_even, std::abs(Fp(2 * n + 1, 2 * n) + Gm(2 * n, 2 * n + 1)));
    for (int n = 1; 2 * n < N; ++n)
        elem_odd = std::max(elem_odd, std::abs(Fm(2 * n - 1, 2 * n) - Gp(2 * n, 2 * n - 1)));
    rep.add("<2n+1|F+|2n>+<2n|G-|2n+1>", elem_even);
    rep.add("<2n-1|F-|2n>-<2n|G+|2n-1>", elem_odd);
    return rep;
}

// Observable-level identities: position real symmetric, momentum Hermitian,
// and the Hamilton-Lie pair [Hhat, qhat] = -i phat, [Hhat, phat] = i qhat.
inline CheckReport verify_observables(const RepParams& p, int N) {
    if (N < 5) throw std::domain_error("verify_observables: need N >= 5");
    const Matrix q = build_matrix(Gen::QHat, p, N);
    const Matrix pm = build_matrix(Gen::PHat, p, N);
    const Matrix Hh = build_matrix(Gen::HHat, p, N);
    const Complex I(0.0, 1.0);
    CheckReport rep;
    rep.add("qhat real", q.imag().cwiseAbs().maxCoeff());
    rep.add("qhat*-qhat", (Matrix(q.adjoint()) - q).cwiseAbs().maxCoeff());
    rep.add("phat*-phat", (Matrix(pm.adjoint()) - pm).cwiseAbs().maxCoeff());
    rep.add("[Hhat,qhat]+i*phat", interior_max_abs(commutator(Hh, q) + I * pm, 2));
    rep.add("[Hhat,phat]-i*qhat", interior_max_abs(commutator(Hh, pm) - I * q, 2));
    return rep;
}

// |beta,0> generates the module: (G+F+)^n raises to sqrt(n! (beta)_n)|beta,2n>,
// one more F+ lands on sqrt(n! (beta)_{n+1})|beta,2n+1>, and the lowering
// products return to |beta,0> with the alternating sign. Residuals are
// relative on the coefficient plus the norm of any off-target component.
inline CheckReport verify_generating_vector(const RepParams& p, int nmax) {
    if (nmax < 1) throw std::domain_error("verify_generating_vector: need nmax >= 1");
    const int N = 2 * nmax + 4;
    const Matrix Fp = build_matrix(Gen::FPlus, p, N), Fm = build_matrix(Gen::FMinus, p, N);
    const Matrix Gp = build_matrix(Gen::GPlus, p, N), Gm = build_matrix(Gen::GMinus, p, N);
    CheckReport rep;
    auto lpoch = [&](int n) { return std::lgamma(p.beta + n) - std::lgamma(p.beta); };
    auto check_vec = [&](const std::string& name, const Eigen::VectorXcd& v, int target,
                         double expect) {
        Complex c = v(target);
        Eigen::VectorXcd rest = v;
        rest(target) = 0.0;
        double resid = std::abs(c - expect) / std::abs(expect) + rest.norm();
        rep.add(name, resid);
    };
    Eigen::VectorXcd up = Eigen::VectorXcd::Zero(N);
    up(0) = 1.0;
    for (int n = 1; n <= nmax; ++n) {
        up = Gp * (Fp * up);
        double even_coef = std::exp(0.5 * (std::lgamma(n + 1.0) + lpoch(n)));
        check_vec("(G+F+)^n|0>, n=" + std::to_string(n), up, 2 * n, even_coef);
        double odd_coef = std::exp(0.5 * (std::lgamma(n + 1.0) + lpoch(n + 1)));
        check_vec("F+(G+F+)^n|0>, n=" + std::to_string(n), Eigen::VectorXcd(Fp * up),
                  2 * n + 1, odd_coef);
    }
    for (int n = 1; n <= nmax; ++n) {
        Eigen::VectorXcd down = Eigen::VectorXcd::Zero(N);
        down(2 * n) = 1.0;
        for (int j = 0; j < n; ++j) down = Gm * (Fm * down);
        double sgn = (n % 2 == 0) ? 1.0 : -1.0;
        check_vec("(G-F-)^n|2n>, n=" + std::to_string(n), down, 0,
                  sgn * std::exp(0.5 * (std::lgamma(n + 1.0) + lpoch(n))));
        down = Eigen::VectorXcd::Zero(N);
        down(2 * n + 1) = 1.0;
        down = Gm * down;
        for (int j = 0; j < n; ++j) down = Gm * (Fm * down);
        check_vec("(G-F-)^nG-|2n+1>, n=" + std::to_string(n), down, 0,
                  -sgn * std::exp(0.5 * (std::lgamma(n + 1.0) + lpoch(n + 1))));
    }
    return rep;
}

// Under the even subalgebra the module splits into two positive discrete
// series ladders: the even levels carry lowest weight beta/2, the odd levels
// (beta+1)/2, with Z constant on each.
inline CheckReport decompose_su11(const RepParams& p, int N) {
    if (N < 6) throw std::domain_error("decompose_su11: need N >= 6");
    const Matrix H = build_matrix(Gen::H, p, N), Z = build_matrix(Gen::Z, p, N);
    const Matrix Ep = build_matrix(Gen::EPlus, p, N), Em = build_matrix(Gen::EMinus, p, N);
    const double beta = p.beta;
    double even_resid = 0.0, odd_resid = 0.0;
    for (int m = 0; 2 * m < N; ++m) {
        int n = 2 * m;
        even_resid = std::max(even_resid, std::abs(H(n, n) - Complex(m + beta / 2.0)));
        even_resid = std::max(even_resid, std::abs(Z(n, n) - Complex(-beta / 2.0)));
        if (n + 2 < N)
            even_resid = std::max(even_resid,
                std::abs(Ep(n + 2, n) - Complex(std::sqrt((beta + m) * (m + 1.0)))));
        if (m >= 1)
            even_resid = std::max(even_resid,
                std::abs(Em(n - 2, n) - Complex(-std::sqrt((beta + m - 1.0) * m))));
    }
    for (int m = 0; 2 * m + 1 < N; ++m) {
        int n = 2 * m + 1;
        odd_resid = std::max(odd_resid, std::abs(H(n, n) - Complex(m + (beta + 1.0) / 2.0)));
        odd_resid = std::max(odd_resid, std::abs(Z(n, n) - Complex(-(beta - 1.0) / 2.0)));
        if (n + 2 < N)
            odd_resid = std::max(odd_resid,
                std::abs(Ep(n + 2, n) - Complex(std::sqrt((beta + 1.0 + m) * (m + 1.0)))));
        if (m >= 1)
            odd_resid = std::max(odd_resid,
                std::abs(Em(n - 2, n) - Complex(-std::sqrt((beta + m) * m))));
    }
    CheckReport rep;
    rep.add("even ladder, lowest weight beta/2", even_resid);
    rep.add("odd ladder, lowest weight (beta+1)/2", odd_resid);
    return rep;
}

} // namespace rep
} // namespace sl21osc
