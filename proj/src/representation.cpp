#include "charvar/representation.hpp"

#include <cmath>
#include <stdexcept>

namespace charvar {

Representation::Representation(Presentation presentation, GroupSpec spec,
                               std::vector<Matrix> images)
    : presentation_(std::move(presentation)),
      spec_(spec),
      images_(std::move(images)),
      basis_(std::make_shared<const LieBasis>(spec)) {
    presentation_.validate();
    if (static_cast<int>(images_.size()) != presentation_.generator_count())
        throw std::invalid_argument("representation needs one image per generator");
    for (const Matrix& g : images_)
        if (g.rows() != spec_.n || g.cols() != spec_.n)
            throw std::invalid_argument("image size does not match the group spec");
}

Representation Representation::conjugated(const Matrix& g) const {
    const Matrix ginv = g.inverse();
    std::vector<Matrix> images;
    images.reserve(images_.size());
    for (const Matrix& a : images_) images.push_back(g * a * ginv);
    return Representation(presentation_, spec_, std::move(images));
}

Matrix evaluate_word(const Representation& rep, const FreeWord& w) {
    const int n = rep.spec().n;
    Matrix out = Matrix::Identity(n, n);
    for (const Syllable& s : w.syllables()) {
        const Matrix& g = rep.image(s.generator);
        Matrix power = s.exponent > 0 ? g : Matrix(g.inverse());
        for (std::int64_t k = 0; k < std::llabs(s.exponent); ++k) out *= power;
    }
    return out;
}

Matrix adjoint_of_word(const Representation& rep, const FreeWord& w) {
    return rep.basis().adjoint(evaluate_word(rep, w));
}

Matrix evaluate_group_ring(const Representation& rep, const GroupRingElement& u) {
    const int m = rep.lie_dim();
    Matrix out = Matrix::Zero(m, m);
    for (const auto& [w, c] : u.terms())
        out += static_cast<double>(c) * adjoint_of_word(rep, w);
    return out;
}

namespace {

double center_distance(const Matrix& g, const GroupSpec& spec) {
    const int n = spec.n;
    double best = std::numeric_limits<double>::infinity();
    for (int k = 0; k < n; ++k) {
        const Complex zeta = std::polar(1.0, 2.0 * M_PI * k / n);
        best = std::min(best, (g - zeta * Matrix::Identity(n, n)).norm());
    }
    return best;
}

} // namespace

ValidationReport validate_representation(const Representation& rep, double tol) {
    ValidationReport report;
    const GroupSpec& spec = rep.spec();
    const int n = spec.n;

    for (std::size_t i = 0; i < rep.images().size(); ++i) {
        const Matrix& g = rep.images()[i];
        const Complex det = g.determinant();
        if (spec.kind == GroupKind::GL) {
            if (!(std::abs(det) > 1e-12)) {
                report.message = "image of generator " + std::to_string(i) + " is singular";
                return report;
            }
        } else {
            const double r = std::abs(det - Complex(1.0));
            report.max_det_residual = std::max(report.max_det_residual, r);
            if (r > tol) {
                report.message = "image of generator " + std::to_string(i) +
                                 " has determinant away from 1 (residual " +
                                 std::to_string(r) + ")";
                return report;
            }
        }
    }

    for (int j = 0; j < rep.presentation().relator_count(); ++j) {
        const Matrix g = evaluate_word(rep, rep.presentation().relators[static_cast<std::size_t>(j)]);
        const double r = spec.kind == GroupKind::PSL
                             ? center_distance(g, spec)
                             : (g - Matrix::Identity(n, n)).norm();
        report.residuals.push_back({j, r});
        report.max_residual = std::max(report.max_residual, r);
    }
    if (report.max_residual > tol) {
        int worst = 0;
        for (const RelatorResidual& rr : report.residuals)
            if (rr.residual >= report.residuals[static_cast<std::size_t>(worst)].residual)
                worst = rr.relator;
        report.message = "relator " + std::to_string(worst) + " image residual " +
                         std::to_string(report.max_residual) + " exceeds tolerance";
        return report;
    }
    report.ok = true;
    return report;
}

Representation restrict_representation(const Representation& rep,
                                       const SubgroupPresentation& sub) {
    std::vector<Matrix> images;
    images.reserve(sub.schreier_generators.size());
    for (const FreeWord& w : sub.schreier_generators)
        images.push_back(evaluate_word(rep, w));
    return Representation(sub.as_presentation(), rep.spec(), std::move(images));
}

} // namespace charvar
