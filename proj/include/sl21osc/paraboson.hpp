#pragma once
// Paraboson ladder pair b+-, the defining triple relation, the two
// constructions of the osp(1|2) basis (from b+- and from the odd ladder
// combinations), the position/momentum identification at gamma = 1, and the
// diagonal actions of [q,p] and (p^2+q^2)/2 across gamma.
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "rep_algebra.hpp"
#include "report.hpp"

namespace sl21osc::paraboson {

using rep::Complex;
using rep::Matrix;
using rep::TruncatedOperator;

struct ParabosonOps {
    TruncatedOperator bplus;
    TruncatedOperator bminus;
};

inline ParabosonOps build_paraboson(double beta, int N) {
    if (N < 3) throw std::domain_error("build_paraboson: need N >= 3");
    RepParams p{beta, 1.0};
    return {rep::build_generator(rep::Gen::ParaPlus, p, N),
            rep::build_generator(rep::Gen::ParaMinus, p, N)};
}

// [{b-, b+}, b+-] = +-2 b+-, plus the diagonal shape of the anticommutator
// and the alternating commutator
inline CheckReport verify_triple_relation(double beta, int N) {
    if (N < 5) throw std::domain_error("verify_triple_relation: need N >= 5");
    ParabosonOps ops = build_paraboson(beta, N);
    const Matrix& bp = ops.bplus.entries;
    const Matrix& bm = ops.bminus.entries;
    const Matrix anti = rep::anticommutator(bm, bp);
    const int margin = 4;
    CheckReport out;
    out.add("[{b-,b+},b+]-2b+",
            rep::interior_max_abs(rep::commutator(anti, bp) - 2.0 * bp, margin));
    out.add("[{b-,b+},b-]+2b-",
            rep::interior_max_abs(rep::commutator(anti, bm) + 2.0 * bm, margin));
    Matrix anti_expect = Matrix::Zero(N, N);
    for (int n = 0; n < N; ++n) anti_expect(n, n) = 2.0 * (n + beta);
    out.add("{b-,b+}-diag(2(n+beta))", rep::interior_max_abs(anti - anti_expect, margin));
    Matrix comm_expect = Matrix::Zero(N, N);
    for (int n = 0; n < N; ++n)
        comm_expect(n, n) = n % 2 == 0 ? 2.0 * beta : 2.0 - 2.0 * beta;
    out.add("[b-,b+] alternation",
            rep::interior_max_abs(rep::commutator(bm, bp) - comm_expect, margin));
    return out;
}

namespace detail {

struct OspBasis {
    Matrix H, Ep, Em, Bp, Bm;
};

inline OspBasis osp_from_paraboson(const ParabosonOps& ops) {
    const Matrix& bp = ops.bplus.entries;
    const Matrix& bm = ops.bminus.entries;
    const double s = 1.0 / (2.0 * std::sqrt(2.0));
    return {0.25 * rep::anticommutator(bm, bp), 0.25 * rep::anticommutator(bp, bp),
            -0.25 * rep::anticommutator(bm, bm), s * bp, s * bm};
}

inline OspBasis osp_from_ladders(double beta, int N) {
    RepParams p{beta, 1.0};
    return {rep::build_matrix(rep::Gen::H, p, N), rep::build_matrix(rep::Gen::EPlus, p, N),
            rep::build_matrix(rep::Gen::EMinus, p, N),
            rep::build_matrix(rep::Gen::OspPlus, p, N),
            rep::build_matrix(rep::Gen::OspMinus, p, N)};
}

inline void check_osp_relations(const OspBasis& b, const std::string& tag, CheckReport& out) {
    const int margin = 4;
    auto put = [&](const std::string& name, const Matrix& resid) {
        out.add(tag + name, rep::interior_max_abs(resid, margin));
    };
    put("[H,E+]-E+", rep::commutator(b.H, b.Ep) - b.Ep);
    put("[H,E-]+E-", rep::commutator(b.H, b.Em) + b.Em);
    put("[E+,E-]-2H", rep::commutator(b.Ep, b.Em) - 2.0 * b.H);
    put("{B+,B-}-H/2", rep::anticommutator(b.Bp, b.Bm) - 0.5 * b.H);
    put("{B+,B+}-E+/2", rep::anticommutator(b.Bp, b.Bp) - 0.5 * b.Ep);
    put("{B-,B-}+E-/2", rep::anticommutator(b.Bm, b.Bm) + 0.5 * b.Em);
    put("[H,B+]-B+/2", rep::commutator(b.H, b.Bp) - 0.5 * b.Bp);
    put("[H,B-]+B-/2", rep::commutator(b.H, b.Bm) + 0.5 * b.Bm);
    put("[E+,B+]", rep::commutator(b.Ep, b.Bp));
    put("[E-,B-]", rep::commutator(b.Em, b.Bm));
    put("[E+,B-]+B+", rep::commutator(b.Ep, b.Bm) + b.Bp);
    put("[E-,B+]+B-", rep::commutator(b.Em, b.Bp) + b.Bm);
}

} // namespace detail

// (a) osp(1|2) relations for the basis built from b+-; (b) the same for the
// basis built from the odd ladder combinations; (c) entrywise agreement of
// the two constructions
inline CheckReport verify_osp_embedding(double beta, int N) {
    if (N < 5) throw std::domain_error("verify_osp_embedding: need N >= 5");
    CheckReport out;
    detail::OspBasis from_b = detail::osp_from_paraboson(build_paraboson(beta, N));
    detail::OspBasis from_fg = detail::osp_from_ladders(beta, N);
    detail::check_osp_relations(from_b, "b: ", out);
    detail::check_osp_relations(from_fg, "fg: ", out);
    const int margin = 2;
    out.add("agree: H", rep::interior_max_abs(from_b.H - from_fg.H, margin));
    out.add("agree: E+", rep::interior_max_abs(from_b.Ep - from_fg.Ep, margin));
    out.add("agree: E-", rep::interior_max_abs(from_b.Em - from_fg.Em, margin));
    out.add("agree: B+", rep::interior_max_abs(from_b.Bp - from_fg.Bp, margin));
    out.add("agree: B-", rep::interior_max_abs(from_b.Bm - from_fg.Bm, margin));
    return out;
}

// gamma = 1 position and momentum against (b+ + b-)/sqrt(2) and
// i(b+ - b-)/sqrt(2); entries are exact, no interior margin needed
inline CheckReport verify_q_identification(double beta, int N) {
    if (N < 3) throw std::domain_error("verify_q_identification: need N >= 3");
    RepParams p{beta, 1.0};
    ParabosonOps ops = build_paraboson(beta, N);
    const Matrix& bp = ops.bplus.entries;
    const Matrix& bm = ops.bminus.entries;
    const double r = 1.0 / std::sqrt(2.0);
    const Complex I(0.0, 1.0);
    CheckReport out;
    out.add("qhat-(b+ + b-)/sqrt2",
            (rep::build_matrix(rep::Gen::QHat, p, N) - r * (bp + bm)).cwiseAbs().maxCoeff());
    out.add("phat-i(b+ - b-)/sqrt2",
            (rep::build_matrix(rep::Gen::PHat, p, N) - I * r * (bp - bm)).cwiseAbs().maxCoeff());
    return out;
}

struct DiagonalSpectrum {
    std::vector<double> diagonal;
    double offdiagonal_residual;
    double pattern_residual;
};

// [q, p]/(2i) on the interior block: diagonal, with entries
// beta + (1-gamma^2) m at even index 2m and (1-beta) - (1-gamma^2) m at odd
// index 2m-1
inline DiagonalSpectrum commutator_qp_spectrum(const RepParams& p, int N) {
    require_beta(p);
    if (N < 5) throw std::domain_error("commutator_qp_spectrum: need N >= 5");
    const Matrix q = rep::build_matrix(rep::Gen::QHat, p, N);
    const Matrix pm = rep::build_matrix(rep::Gen::PHat, p, N);
    Matrix c = rep::commutator(q, pm) / Complex(0.0, 2.0);
    const int keep = N - 4;
    DiagonalSpectrum out;
    Matrix off = c;
    for (int i = 0; i < N; ++i) off(i, i) = 0.0;
    out.offdiagonal_residual = rep::interior_max_abs(off, 4);
    const double shift = 1.0 - p.gamma * p.gamma;
    double worst = 0.0;
    for (int i = 0; i < keep; ++i) {
        out.diagonal.push_back(c(i, i).real());
        const double want = i % 2 == 0 ? p.beta + shift * (i / 2)
                                       : (1.0 - p.beta) - shift * ((i + 1) / 2);
        worst = std::max(worst, std::abs(c(i, i) - Complex(want)));
    }
    out.pattern_residual = worst;
    return out;
}

// (p^2 + q^2)/2 on the interior block: diagonal with entries
// ((gamma^2+1)/2) n + beta, shifted by (gamma^2-1)/2 on odd levels
inline DiagonalSpectrum wigner_hamiltonian_spectrum(const RepParams& p, int N) {
    require_beta(p);
    if (N < 5) throw std::domain_error("wigner_hamiltonian_spectrum: need N >= 5");
    const Matrix q = rep::build_matrix(rep::Gen::QHat, p, N);
    const Matrix pm = rep::build_matrix(rep::Gen::PHat, p, N);
    Matrix w = 0.5 * (pm * pm + q * q);
    const int keep = N - 4;
    DiagonalSpectrum out;
    Matrix off = w;
    for (int i = 0; i < N; ++i) off(i, i) = 0.0;
    const double scale = std::max(1.0, w.cwiseAbs().maxCoeff());
    out.offdiagonal_residual = rep::interior_max_abs(off, 4) / scale;
    const double g2 = p.gamma * p.gamma;
    double worst = 0.0;
    for (int i = 0; i < keep; ++i) {
        out.diagonal.push_back(w(i, i).real());
        const double want = 0.5 * (g2 + 1.0) * i + p.beta + (i % 2 == 0 ? 0.0 : 0.5 * (g2 - 1.0));
        worst = std::max(worst, std::abs(w(i, i) - Complex(want)));
    }
    out.pattern_residual = worst;
    return out;
}

// Hamilton compatibility at gamma = 1: (p^2+q^2)/2 generates the same
// rotation as the shifted Hamiltonian
inline CheckReport verify_compatibility(double beta, int N) {
    if (N < 7) throw std::domain_error("verify_compatibility: need N >= 7");
    RepParams p{beta, 1.0};
    const Matrix q = rep::build_matrix(rep::Gen::QHat, p, N);
    const Matrix pm = rep::build_matrix(rep::Gen::PHat, p, N);
    const Matrix w = 0.5 * (pm * pm + q * q);
    const Complex I(0.0, 1.0);
    CheckReport out;
    out.add("[W,p]-iq", rep::interior_max_abs(rep::commutator(w, pm) - I * q, 4));
    out.add("[W,q]+ip", rep::interior_max_abs(rep::commutator(w, q) + I * pm, 4));
    return out;
}

} // namespace sl21osc::paraboson
