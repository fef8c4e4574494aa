#include "charvar/surfaces.hpp"

#include <stdexcept>

namespace charvar {

Presentation canonical_presentation(const SurfaceKind& kind) {
    Presentation p;
    if (kind.orientable) {
        const int g = kind.genus_or_crosscaps;
        if (g < 1) throw std::invalid_argument("canonical_presentation: genus must be >= 1");
        FreeWord relator;
        for (int i = 1; i <= g; ++i) {
            p.generator_names.push_back("a" + std::to_string(i));
            p.generator_names.push_back("b" + std::to_string(i));
            const int a = 2 * (i - 1), b = 2 * (i - 1) + 1;
            relator *= FreeWord::generator(a) * FreeWord::generator(b) *
                       FreeWord::generator(a, -1) * FreeWord::generator(b, -1);
        }
        p.relators.push_back(relator);
    } else {
        const int h = kind.genus_or_crosscaps;
        if (h < 2) throw std::invalid_argument("canonical_presentation: need h >= 2 cross-caps");
        FreeWord relator;
        for (int i = 1; i <= h; ++i) {
            p.generator_names.push_back("x" + std::to_string(i));
            relator *= FreeWord::generator(i - 1, 2);
        }
        p.relators.push_back(relator);
    }
    return p;
}

bool is_canonical_orientable(const Presentation& p) {
    const int d = p.generator_count();
    if (d < 2 || d % 2 != 0 || p.relator_count() != 1) return false;
    const int g = d / 2;
    return p.relators[0] ==
           canonical_presentation(SurfaceKind::orientable_genus(g)).relators[0];
}

bool is_canonical_nonorientable(const Presentation& p) {
    const int h = p.generator_count();
    if (h < 2 || p.relator_count() != 1) return false;
    return p.relators[0] == canonical_presentation(SurfaceKind::non_orientable(h)).relators[0];
}

Vector Cocycle::stacked() const {
    Index m = 0;
    for (const Vector& v : values) m += v.size();
    Vector out(m);
    Index at = 0;
    for (const Vector& v : values) {
        out.segment(at, v.size()) = v;
        at += v.size();
    }
    return out;
}

Cocycle Cocycle::from_stacked(const Vector& v, int generator_count) {
    if (generator_count <= 0 || v.size() % generator_count != 0)
        throw std::invalid_argument("from_stacked: size mismatch");
    const Index m = v.size() / generator_count;
    Cocycle c;
    for (int i = 0; i < generator_count; ++i)
        c.values.push_back(v.segment(static_cast<Index>(i) * m, m));
    return c;
}

ClosedFormH02 h0_h2_closed_form(const Representation& rep, const RankPolicy& policy) {
    if (!is_canonical_nonorientable(rep.presentation()))
        throw std::invalid_argument("h0_h2_closed_form: expects the canonical "
                                    "non-orientable presentation");
    const int h = rep.presentation().generator_count();
    const int m = rep.lie_dim();
    Matrix minus(static_cast<Index>(h) * m, m), plus(static_cast<Index>(h) * m, m);
    for (int i = 0; i < h; ++i) {
        const Matrix ad = rep.basis().adjoint(rep.image(i));
        minus.middleRows(static_cast<Index>(i) * m, m) = ad - Matrix::Identity(m, m);
        plus.middleRows(static_cast<Index>(i) * m, m) = ad + Matrix::Identity(m, m);
    }
    ClosedFormH02 out;
    out.h0_basis = kernel_and_cokernel(minus, policy).kernel;
    out.h2_basis = kernel_and_cokernel(plus, policy).kernel;
    return out;
}

CoverReport orientation_double_cover(const Representation& rep, const RankPolicy& policy) {
    if (!is_canonical_nonorientable(rep.presentation()))
        throw std::invalid_argument("orientation_double_cover: expects the canonical "
                                    "non-orientable presentation");
    const ValidationReport v = validate_representation(rep, policy.rel_tol);
    if (!v.ok) throw ValidationError("invalid representation: " + v.message);

    const int h = rep.presentation().generator_count();
    const int m = rep.lie_dim();

    // H0 of the cover needs only a generating set; all h^2 products x_i x_j
    // are used (redundancy is harmless in a kernel intersection).
    Matrix stacked(static_cast<Index>(h) * h * m, m);
    Index row = 0;
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < h; ++j) {
            const Matrix g = rep.image(i) * rep.image(j);
            stacked.middleRows(row, m) = rep.basis().adjoint(g) - Matrix::Identity(m, m);
            row += m;
        }

    CoverReport report;
    report.h0_cover = m - static_cast<int>(numeric_rank(stacked, policy).rank);
    report.h2_cover = report.h0_cover;
    const int cover_genus = h - 1;
    report.h1_cover = 2 * report.h0_cover + (2 * cover_genus - 2) * m;

    const ClosedFormH02 base = h0_h2_closed_form(rep, policy);
    report.h0_base = static_cast<int>(base.h0_basis.cols());
    report.h2_base = static_cast<int>(base.h2_basis.cols());
    report.decomposition_ok = report.h0_cover == report.h0_base + report.h2_base;
    return report;
}

namespace {

struct Cell {
    FreeWord u;
    FreeWord v;
    int coefficient;
};

/// Fundamental 2-cycle of a one-relator presentation with balanced
/// exponents: prefix cells [w_{k-1} | y_k] along the relator letters,
/// minus a correction cell [y^-1 | y] per inverse letter, minus the
/// matching number of [e | e] cells.
std::vector<Cell> fundamental_two_cycle(const FreeWord& relator) {
    std::vector<Cell> cells;
    FreeWord prefix;
    int inverse_letters = 0;
    for (const Syllable& letter : word_letters(relator)) {
        const FreeWord y = FreeWord::generator(letter.generator, letter.exponent);
        cells.push_back({prefix, y, 1});
        if (letter.exponent < 0) {
            cells.push_back({y.inverse(), y, -1});
            ++inverse_letters;
        }
        prefix *= y;
    }
    if (inverse_letters > 0)
        cells.push_back({FreeWord::identity(), FreeWord::identity(), -inverse_letters});
    return cells;
}

} // namespace

PairingEvaluation cup_pairing_detailed(const Representation& rep, const Cocycle& alpha,
                                       const Cocycle& beta, double cocycle_tol) {
    if (!is_canonical_orientable(rep.presentation()))
        throw std::invalid_argument("cup_pairing: expects the canonical orientable "
                                    "one-relator presentation");
    const int d = rep.presentation().generator_count();
    if (static_cast<int>(alpha.values.size()) != d ||
        static_cast<int>(beta.values.size()) != d)
        throw std::invalid_argument("cup_pairing: cocycle size mismatch");

    const Vector a = alpha.stacked();
    const Vector b = beta.stacked();
    for (const Vector* v : {&a, &b}) {
        const double residual = cocycle_relator_residual(rep, *v);
        const double scale = std::max(1.0, v->norm());
        if (residual > cocycle_tol * scale)
            throw std::invalid_argument("cup_pairing: input is not a cocycle (residual " +
                                        std::to_string(residual) + ")");
    }

    const Matrix& form = rep.basis().trace_form();
    PairingEvaluation out;
    for (const Cell& cell : fundamental_two_cycle(rep.presentation().relators[0])) {
        const Vector au = cocycle_evaluate(rep, a, cell.u);
        const Vector bv = cocycle_evaluate(rep, b, cell.v);
        const Matrix ad_u = adjoint_of_word(rep, cell.u);
        const Complex term = static_cast<double>(cell.coefficient) *
                             (au.transpose() * form * (ad_u * bv)).value();
        out.value += term;
        out.magnitude += std::abs(term);
    }
    return out;
}

Complex cup_pairing(const Representation& rep, const Cocycle& alpha, const Cocycle& beta,
                    double cocycle_tol) {
    return cup_pairing_detailed(rep, alpha, beta, cocycle_tol).value;
}

CupGram cup_pairing_gram(const Representation& rep, const RankPolicy& policy) {
    const CohomologyReport report = cohomology_report(rep, policy);
    CupGram out;
    out.h1_basis = h1_representatives(rep, report);
    const int k = static_cast<int>(out.h1_basis.cols());
    const int d = report.generator_count;
    out.gram.resize(k, k);
    std::vector<Cocycle> basis;
    for (int i = 0; i < k; ++i)
        basis.push_back(Cocycle::from_stacked(out.h1_basis.col(i), d));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            out.gram(i, j) = cup_pairing(rep, basis[static_cast<std::size_t>(i)],
                                         basis[static_cast<std::size_t>(j)]);
    out.rank = numeric_rank(out.gram, policy);
    return out;
}

Cocycle restrict_cocycle(const Representation& rep, const Cocycle& gamma,
                         const std::vector<FreeWord>& embedding) {
    const Vector stacked = gamma.stacked();
    Cocycle out;
    out.values.reserve(embedding.size());
    for (const FreeWord& w : embedding)
        out.values.push_back(cocycle_evaluate(rep, stacked, w));
    return out;
}

LagrangianReport lagrangian_check(const Representation& rep,
                                  const std::vector<FreeWord>& embedding,
                                  const RankPolicy& policy) {
    LagrangianReport report;
    const CohomologyReport base = cohomology_report(rep, policy);
    report.b1_base = base.b1;
    report.cover = orientation_double_cover(rep, policy);
    report.h1_cover = report.cover.h1_cover;
    report.half_dimension_ok = 2 * report.b1_base == report.h1_cover;
    if (embedding.empty()) return report;

    const int h = rep.presentation().generator_count();
    const int cover_genus = h - 1;
    if (static_cast<int>(embedding.size()) != 2 * cover_genus)
        throw std::invalid_argument("lagrangian_check: need one embedding word per "
                                    "canonical generator of the genus-" +
                                    std::to_string(cover_genus) + " cover");
    std::vector<int> parity(static_cast<std::size_t>(h), 1);
    SubgroupPresentation parity_checker;
    parity_checker.parity = parity;
    for (const FreeWord& w : embedding)
        if (parity_checker.word_parity(w) != 0)
            throw std::invalid_argument("lagrangian_check: embedding word '" +
                                        w.to_string(rep.presentation().generator_names) +
                                        "' has odd parity");

    const Presentation cover_presentation =
        canonical_presentation(SurfaceKind::orientable_genus(cover_genus));
    std::vector<Matrix> cover_images;
    for (const FreeWord& w : embedding) cover_images.push_back(evaluate_word(rep, w));
    const Representation cover_rep(cover_presentation, rep.spec(), std::move(cover_images));
    const ValidationReport cover_valid = validate_representation(cover_rep, policy.rel_tol);
    if (!cover_valid.ok)
        throw std::invalid_argument("lagrangian_check: embedding words do not satisfy the "
                                    "cover relator: " + cover_valid.message);

    report.embedding_checked = true;

    // Restrict a basis of the base's first cohomology.
    const Matrix base_h1 = h1_representatives(rep, base);
    std::vector<Cocycle> restricted;
    for (Index c = 0; c < base_h1.cols(); ++c) {
        const Cocycle gamma = Cocycle::from_stacked(base_h1.col(c), h);
        Cocycle r = restrict_cocycle(rep, gamma, embedding);
        report.restricted_cocycle_residual =
            std::max(report.restricted_cocycle_residual,
                     cocycle_relator_residual(cover_rep, r.stacked()));
        restricted.push_back(std::move(r));
    }

    // Scale: the pairing on the cover's own cohomology basis.
    const CupGram cover_gram = cup_pairing_gram(cover_rep, policy);
    report.isotropy_scale =
        cover_gram.gram.size() > 0 ? std::max(1e-300, cover_gram.gram.cwiseAbs().maxCoeff())
                                   : 1.0;

    for (std::size_t i = 0; i < restricted.size(); ++i)
        for (std::size_t j = 0; j < restricted.size(); ++j)
            report.isotropy_residual =
                std::max(report.isotropy_residual,
                         std::abs(cup_pairing(cover_rep, restricted[i], restricted[j])));
    return report;
}

} // namespace charvar
