#include "charvar/group.hpp"

#include <cctype>
#include <stdexcept>

namespace charvar {

namespace {

std::vector<Matrix> traceless_basis(int n) {
    std::vector<Matrix> basis;
    if (n == 2) {
        Matrix s1(2, 2), s2(2, 2), s3(2, 2);
        s1 << 0, 1, 1, 0;
        s2 << 0, Complex(0, -1), Complex(0, 1), 0;
        s3 << 1, 0, 0, -1;
        basis = {s1, s2, s3};
        return basis;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            Matrix e = Matrix::Zero(n, n);
            e(i, j) = 1;
            basis.push_back(e);
        }
    for (int k = 0; k + 1 < n; ++k) {
        Matrix h = Matrix::Zero(n, n);
        h(k, k) = 1;
        h(k + 1, k + 1) = -1;
        basis.push_back(h);
    }
    return basis;
}

Matrix vec(const Matrix& m) {
    Matrix v(m.size(), 1);
    Index k = 0;
    for (Index j = 0; j < m.cols(); ++j)
        for (Index i = 0; i < m.rows(); ++i) v(k++, 0) = m(i, j);
    return v;
}

} // namespace

int GroupSpec::center_order() const {
    switch (kind) {
        case GroupKind::SL: return n;
        case GroupKind::PSL: return 1;
        case GroupKind::GL: return 0;
    }
    return 0;
}

std::string GroupSpec::to_string() const {
    const char* k = kind == GroupKind::GL ? "GL" : kind == GroupKind::SL ? "SL" : "PSL";
    return std::string(k) + "(" + std::to_string(n) + ",C)";
}

GroupSpec GroupSpec::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    GroupSpec spec;
    std::size_t pos = 0;
    if (s.rfind("PSL(", 0) == 0) {
        spec.kind = GroupKind::PSL;
        pos = 4;
    } else if (s.rfind("SL(", 0) == 0) {
        spec.kind = GroupKind::SL;
        pos = 3;
    } else if (s.rfind("GL(", 0) == 0) {
        spec.kind = GroupKind::GL;
        pos = 3;
    } else {
        throw std::invalid_argument("bad group '" + text + "'; expected GL/SL/PSL(n,C)");
    }
    const std::size_t comma = s.find(',', pos);
    if (comma == std::string::npos || s.substr(comma) != ",C)")
        throw std::invalid_argument("bad group '" + text + "'; expected GL/SL/PSL(n,C)");
    int n = 0;
    for (std::size_t i = pos; i < comma; ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw std::invalid_argument("bad matrix size in group '" + text + "'");
        n = n * 10 + (s[i] - '0');
    }
    if (n < 2) throw std::invalid_argument("group size must be at least 2");
    spec.n = n;
    return spec;
}

std::vector<Matrix> lie_basis(const GroupSpec& spec) {
    if (spec.n < 2) throw std::invalid_argument("lie_basis: n must be at least 2");
    std::vector<Matrix> basis;
    if (spec.kind == GroupKind::GL)
        basis.push_back(Matrix::Identity(spec.n, spec.n));
    auto tl = traceless_basis(spec.n);
    basis.insert(basis.end(), tl.begin(), tl.end());
    return basis;
}

LieBasis::LieBasis(GroupSpec spec) : spec_(spec), matrices_(lie_basis(spec)) {
    const int n = spec_.n;
    const int m = dim();
    basis_columns_.resize(static_cast<Index>(n) * n, m);
    for (int j = 0; j < m; ++j)
        basis_columns_.col(j) = vec(matrices_[static_cast<std::size_t>(j)]);
    coordinate_solver_.compute(basis_columns_);
    gram_.resize(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= i; ++j)
            gram_(i, j) = gram_(j, i) =
                (matrices_[static_cast<std::size_t>(i)] * matrices_[static_cast<std::size_t>(j)])
                    .trace();
}

Vector LieBasis::coordinates(const Matrix& X) const {
    return coordinate_solver_.solve(vec(X));
}

Matrix LieBasis::from_coordinates(const Vector& v) const {
    Matrix X = Matrix::Zero(spec_.n, spec_.n);
    for (int j = 0; j < dim(); ++j) X += v(j) * matrices_[static_cast<std::size_t>(j)];
    return X;
}

Matrix LieBasis::adjoint(const Matrix& g) const {
    const double det_mag = std::abs(g.determinant());
    if (!(det_mag > 1e-14))
        throw std::invalid_argument("adjoint: singular matrix");
    const Matrix ginv = g.inverse();
    Matrix ad(dim(), dim());
    for (int j = 0; j < dim(); ++j)
        ad.col(j) = coordinates(g * matrices_[static_cast<std::size_t>(j)] * ginv);
    return ad;
}

Matrix adjoint_operator(const Matrix& g, const GroupSpec& spec) {
    return LieBasis(spec).adjoint(g);
}

} // namespace charvar
