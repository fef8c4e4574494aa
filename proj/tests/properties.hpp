#pragma once

// Randomized property suites shared by test_properties and the acceptance
// runner.  Every suite is deterministic (fixed seeds) and reports its case
// count and failures.

#include <random>
#include <sstream>
#include <string>

#include "charvar/cohomology.hpp"
#include "charvar/fox.hpp"
#include "charvar/rep_random.hpp"
#include "charvar/surfaces.hpp"
#include "fixtures.hpp"

namespace charvar::props {

struct SuiteResult {
    std::string name;
    int cases = 0;
    int failures = 0;
    std::string detail;

    bool ok() const { return failures == 0 && cases > 0; }
};

inline FreeWord random_word(std::mt19937_64& rng, int generators, int max_length) {
    std::vector<Syllable> syllables;
    const int len = static_cast<int>(rng() % static_cast<std::uint64_t>(max_length + 1));
    for (int k = 0; k < len; ++k) {
        const int g = static_cast<int>(rng() % static_cast<std::uint64_t>(generators));
        syllables.push_back({g, (rng() % 2 == 0) ? 1 : -1});
    }
    return FreeWord(syllables);
}

inline SuiteResult fox_identity_suite(int cases = 1000) {
    SuiteResult r;
    r.name = "fox fundamental identity (exact, integer group ring)";
    std::mt19937_64 rng(20240001);
    for (int k = 0; k < cases; ++k) {
        const FreeWord w = random_word(rng, 4, 20);
        ++r.cases;
        if (!fox_fundamental_identity_defect(w, 4).is_zero()) ++r.failures;
    }
    return r;
}

/// Random finite-image representations on random small presentations: the
/// images are drawn from the unit quaternions {+-I, +-i sigma_k}, whose
/// fourth powers are trivial, so relators of the form w^4 always hold.
inline Representation random_quaternion_presentation_rep(std::mt19937_64& rng) {
    const int d = 1 + static_cast<int>(rng() % 4);
    const int q = static_cast<int>(rng() % 3);
    Presentation p;
    for (int i = 0; i < d; ++i) p.generator_names.push_back("g" + std::to_string(i));
    for (int j = 0; j < q; ++j) {
        FreeWord w;
        while (w.is_identity()) w = random_word(rng, d, 3);
        FreeWord r4;
        for (int k = 0; k < 4; ++k) r4 *= w;
        p.relators.push_back(r4);
    }
    const Complex i(0, 1);
    const Matrix units[4] = {fixtures::identity2(), i * fixtures::sigma1(),
                             i * fixtures::sigma2(), i * fixtures::sigma3()};
    std::vector<Matrix> images;
    for (int k = 0; k < d; ++k) {
        Matrix g = units[rng() % 4];
        if (rng() % 2) g = -g;
        images.push_back(g);
    }
    return Representation(p, GroupSpec{GroupKind::SL, 2}, std::move(images));
}

inline SuiteResult chain_property_suite(int cases = 200) {
    SuiteResult r;
    r.name = "chain property |d2 d1| <= 1e-9 |d2| |d1|";
    std::mt19937_64 rng(20240002);
    double worst = 0;
    for (int k = 0; k < cases; ++k) {
        Representation rep = [&] {
            switch (k % 4) {
                case 0: return random_quaternion_presentation_rep(rng);
                case 1:
                    return random_surface_representation(
                        GroupSpec{GroupKind::SL, 2},
                        SurfaceKind::non_orientable(2 + static_cast<int>(rng() % 3)),
                        9000 + static_cast<std::uint64_t>(k));
                case 2:
                    return random_surface_representation(
                        GroupSpec{GroupKind::SL, 2},
                        SurfaceKind::orientable_genus(1 + static_cast<int>(rng() % 2)),
                        9000 + static_cast<std::uint64_t>(k));
                default:
                    return random_surface_representation(
                        GroupSpec{GroupKind::GL, 2},
                        SurfaceKind::non_orientable(2 + static_cast<int>(rng() % 2)),
                        9000 + static_cast<std::uint64_t>(k));
            }
        }();
        ++r.cases;
        if (!validate_representation(rep).ok) {
            ++r.failures;
            continue;
        }
        const CochainComplex complex = build_complex(rep);
        if (complex.relator_count == 0) {
            // no relator: d2 is empty and the property is vacuous
            continue;
        }
        // Noise floor: d1 (or d2) can itself be pure roundoff, e.g. at a
        // central representation, where the relative bound alone is
        // meaningless.
        const double scale = complex.d2.norm() * complex.d1.norm();
        const double floor = 1e-12 * (1 + complex.d1.norm() + complex.d2.norm());
        const double defect = (complex.d2 * complex.d1).norm();
        worst = std::max(worst, defect / std::max(scale, floor));
        if (defect > 1e-9 * scale + floor) ++r.failures;
    }
    std::ostringstream detail;
    detail << "worst relative defect " << worst;
    r.detail = detail.str();
    return r;
}

inline SuiteResult closed_form_agreement_suite(int cases = 200) {
    SuiteResult r;
    r.name = "closed-form H0/H2 match the cochain complex";
    for (int k = 0; k < cases; ++k) {
        const int h = 2 + k % 3;
        const Representation rep = random_surface_representation(
            GroupSpec{GroupKind::SL, 2}, SurfaceKind::non_orientable(h),
            7000 + static_cast<std::uint64_t>(k));
        const ClosedFormH02 closed = h0_h2_closed_form(rep);
        const CohomologyReport report = cohomology_report(rep);
        ++r.cases;
        if (static_cast<int>(closed.h0_basis.cols()) != report.b0 ||
            static_cast<int>(closed.h2_basis.cols()) != report.b2)
            ++r.failures;
    }
    return r;
}

inline SuiteResult decomposition_suite(int cases = 200) {
    SuiteResult r;
    r.name = "cover decomposition h0_cover = h0_base + h2_base";
    for (int k = 0; k < cases; ++k) {
        const int h = 2 + k % 3;
        const Representation rep = random_surface_representation(
            GroupSpec{GroupKind::SL, 2}, SurfaceKind::non_orientable(h),
            8000 + static_cast<std::uint64_t>(k));
        ++r.cases;
        if (!orientation_double_cover(rep).decomposition_ok) ++r.failures;
    }
    return r;
}

inline SuiteResult orientable_duality_suite(int cases = 200) {
    SuiteResult r;
    r.name = "orientable duality b2 = b0";
    for (int k = 0; k < cases; ++k) {
        const int g = 1 + k % 3;
        const Representation rep = random_surface_representation(
            GroupSpec{GroupKind::SL, 2}, SurfaceKind::orientable_genus(g),
            6000 + static_cast<std::uint64_t>(k));
        const CohomologyReport report = cohomology_report(rep);
        ++r.cases;
        if (report.b0 != report.b2) ++r.failures;
    }
    return r;
}

inline SuiteResult conjugation_invariance_suite(int cases = 200) {
    SuiteResult r;
    r.name = "conjugation invariance of reported dimensions";
    for (int k = 0; k < cases; ++k) {
        const Representation rep =
            (k % 2 == 0)
                ? random_surface_representation(GroupSpec{GroupKind::SL, 2},
                                                SurfaceKind::non_orientable(2 + k % 3),
                                                5000 + static_cast<std::uint64_t>(k))
                : random_surface_representation(GroupSpec{GroupKind::SL, 2},
                                                SurfaceKind::orientable_genus(1 + k % 2),
                                                5000 + static_cast<std::uint64_t>(k));
        const Matrix g = random_group_element(GroupSpec{GroupKind::SL, 2},
                                              100000 + static_cast<std::uint64_t>(k));
        const CohomologyReport a = cohomology_report(rep);
        const CohomologyReport b = cohomology_report(rep.conjugated(g));
        ++r.cases;
        if (a.b0 != b.b0 || a.b1 != b.b1 || a.b2 != b.b2 || a.z1_dim != b.z1_dim)
            ++r.failures;
    }
    return r;
}

inline SuiteResult cup_pairing_suite(int cases = 200) {
    SuiteResult r;
    r.name = "cup pairing antisymmetry/bilinearity/descent + quaternion Gram";
    std::mt19937_64 rng(20240003);
    const Representation quaternion = fixtures::quaternion_genus2();
    const CohomologyReport quaternion_report = cohomology_report(quaternion);
    double worst = 0;

    auto run_case = [&](const Representation& rep, const CohomologyReport& report) {
        const int d = report.generator_count;
        auto random_combo = [&](const Matrix& basis) {
            Vector v = Vector::Zero(basis.rows());
            for (Index c = 0; c < basis.cols(); ++c)
                v += Complex(static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5,
                             static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5) *
                     basis.col(c);
            const double norm = v.norm();
            if (norm > 0) v /= norm;
            return v;
        };
        const Cocycle alpha = Cocycle::from_stacked(random_combo(report.z1_basis), d);
        const Cocycle beta = Cocycle::from_stacked(random_combo(report.z1_basis), d);
        const PairingEvaluation ab = cup_pairing_detailed(rep, alpha, beta);
        const PairingEvaluation ba = cup_pairing_detailed(rep, beta, alpha);
        const double scale = std::max({1.0, ab.magnitude, ba.magnitude});
        double defect = std::abs(ab.value + ba.value) / scale;
        defect = std::max(defect, std::abs(cup_pairing(rep, alpha, alpha)) / scale);
        // bilinearity
        const Complex lambda(0.37, -1.21);
        Cocycle combo = alpha;
        for (std::size_t j = 0; j < combo.values.size(); ++j)
            combo.values[j] = lambda * alpha.values[j] + beta.values[j];
        const PairingEvaluation bb = cup_pairing_detailed(rep, beta, beta);
        const PairingEvaluation lhs = cup_pairing_detailed(rep, combo, beta);
        const double bl_scale = std::max({1.0, lhs.magnitude, ab.magnitude, bb.magnitude});
        defect = std::max(defect, std::abs(lhs.value - lambda * ab.value - bb.value) /
                                      bl_scale);
        // descent: coboundaries pair to zero against cocycles
        const int m = report.lie_dim;
        Vector xi(m);
        for (Index j = 0; j < m; ++j)
            xi(j) = Complex(static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5,
                            static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5);
        Vector db_stacked = coboundary(rep, xi);
        if (db_stacked.norm() > 0) db_stacked /= db_stacked.norm();
        const Cocycle db = Cocycle::from_stacked(db_stacked, d);
        const PairingEvaluation a_db = cup_pairing_detailed(rep, alpha, db);
        const PairingEvaluation db_b = cup_pairing_detailed(rep, db, beta);
        defect = std::max(defect, std::abs(a_db.value) / std::max(1.0, a_db.magnitude));
        defect = std::max(defect, std::abs(db_b.value) / std::max(1.0, db_b.magnitude));
        worst = std::max(worst, defect);
        return defect <= 1e-8;
    };

    for (int k = 0; k < cases; ++k) {
        ++r.cases;
        if (k % 2 == 0) {
            if (!run_case(quaternion, quaternion_report)) ++r.failures;
        } else {
            const Representation rep = random_surface_representation(
                GroupSpec{GroupKind::SL, 2}, SurfaceKind::orientable_genus(1 + k % 2),
                11000 + static_cast<std::uint64_t>(k));
            if (!run_case(rep, cohomology_report(rep))) ++r.failures;
        }
    }

    ++r.cases; // the nondegeneracy case
    if (cup_pairing_gram(quaternion).rank.rank != 6) ++r.failures;

    std::ostringstream detail;
    detail << "worst relative defect " << worst;
    r.detail = detail.str();
    return r;
}

} // namespace charvar::props
