#include "qlgraph/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <vector>

#include "qlgraph/errors.hpp"
#include "qlgraph/ql_bit.hpp"

namespace qlgraph {

namespace {

constexpr double kTieTolerance = 1e-10;

bool lexicographic_less(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        const double dr = a(i).real() - b(i).real();
        if (std::abs(dr) > 1e-12) {
            return dr < 0;
        }
        const double di = a(i).imag() - b(i).imag();
        if (std::abs(di) > 1e-12) {
            return di < 0;
        }
    }
    return false;
}

}  // namespace

double hermitian_asymmetry(const Eigen::MatrixXcd& a) {
    if (a.rows() != a.cols()) {
        throw ValidationError("matrix is not square");
    }
    return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

void fix_phase(Eigen::VectorXcd& v, double tol) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const double m = std::abs(v(i));
        if (m > tol) {
            v *= std::conj(v(i)) / m;
            v(i) = Complex(m, 0.0);
            return;
        }
    }
}

Spectrum eigendecompose(const Eigen::MatrixXcd& a) {
    if (a.rows() != a.cols()) {
        std::ostringstream msg;
        msg << "matrix is not square (" << a.rows() << "x" << a.cols() << ")";
        throw ValidationError(msg.str());
    }
    const auto n = static_cast<std::size_t>(a.rows());
    if (n > kMaxEigenDimension) {
        std::ostringstream msg;
        msg << "dimension " << n << " exceeds the dense eigensolver cap of " << kMaxEigenDimension
            << "; compose product spectra from their factors instead";
        throw ValidationError(msg.str());
    }
    Spectrum out;
    if (n == 0) {
        return out;
    }
    const double asym = hermitian_asymmetry(a);
    if (!(asym <= kHermitianTolerance)) {
        std::ostringstream msg;
        msg << "matrix is not Hermitian: max |A(i,j) - conj(A(j,i))| = " << asym;
        throw ValidationError(msg.str());
    }

    const Eigen::MatrixXcd sym = 0.5 * (a + a.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sym);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("Hermitian eigensolver did not converge");
    }

    const Eigen::VectorXd& values = solver.eigenvalues();
    std::vector<Eigen::VectorXcd> vectors(n);
    for (std::size_t k = 0; k < n; ++k) {
        vectors[k] = solver.eigenvectors().col(static_cast<Eigen::Index>(k));
        fix_phase(vectors[k]);
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        if (std::abs(values(x) - values(y)) > kTieTolerance) {
            return values(x) > values(y);
        }
        return lexicographic_less(vectors[x], vectors[y]);
    });

    out.eigenvalues.resize(static_cast<Eigen::Index>(n));
    out.eigenvectors.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues(static_cast<Eigen::Index>(k)) = values(order[k]);
        out.eigenvectors.col(static_cast<Eigen::Index>(k)) = vectors[order[k]];
    }
    return out;
}

Spectrum eigendecompose(const GainGraph& g) {
    return eigendecompose(adjacency_matrix(g));
}

Eigen::VectorXcd block_projection(const Eigen::VectorXcd& v, const BlockPartition& blocks) {
    if (blocks.block_of_vertex.size() != static_cast<std::size_t>(v.size())) {
        std::ostringstream msg;
        msg << "partition covers " << blocks.block_of_vertex.size() << " vertices but the vector has "
            << v.size() << " entries";
        throw ValidationError(msg.str());
    }
    Eigen::VectorXcd p = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(blocks.block_count()));
    for (std::size_t i = 0; i < blocks.block_of_vertex.size(); ++i) {
        const auto b = blocks.block_of_vertex[i];
        if (b >= blocks.block_count()) {
            throw ValidationError("partition refers to an unknown block");
        }
        p(static_cast<Eigen::Index>(b)) += v(static_cast<Eigen::Index>(i));
    }
    const double norm = p.norm();
    if (norm < 1e-300) {
        throw NumericalError("emergent vector has zero overlap with every block");
    }
    p /= norm;
    fix_phase(p);
    return p;
}

EmergentState emergent_state(const Eigen::MatrixXcd& a, const BlockPartition& blocks) {
    const auto spectrum = eigendecompose(a);
    if (spectrum.size() == 0) {
        throw ValidationError("empty graph has no emergent state");
    }
    EmergentState s;
    s.eigenvalue = spectrum.eigenvalues(0);
    s.vector = spectrum.eigenvectors.col(0);
    s.gap = spectrum.size() > 1 ? spectrum.eigenvalues(0) - spectrum.eigenvalues(1)
                                : std::numeric_limits<double>::infinity();
    if (s.gap < kDegeneracyThreshold) {
        std::ostringstream msg;
        msg << "top eigenvalue " << s.eigenvalue << " is degenerate (gap " << s.gap
            << " < " << kDegeneracyThreshold << "); the emergent state is ambiguous";
        throw NumericalError(msg.str());
    }
    s.projection = block_projection(s.vector, blocks);
    return s;
}

EmergentState emergent_state(const GainGraph& g, const BlockPartition& blocks) {
    return emergent_state(adjacency_matrix(g), blocks);
}

EmergentState emergent_state(const WeightedGraph& g, const BlockPartition& blocks) {
    return emergent_state(adjacency_matrix(g), blocks);
}

EmergentState emergent_state(const QLBit& bit) {
    return emergent_state(bit.graph, bit.blocks());
}

Eigen::Matrix2cd effective_two_level(Complex c) {
    if (std::abs(std::abs(c) - 1.0) >= kUnitTolerance) {
        throw ValidationError("effective two-level bias must be a complex unit");
    }
    Eigen::Matrix2cd m;
    m << Complex(0.0), c, std::conj(c), Complex(0.0);
    return m;
}

Eigen::Vector2cd ideal_projection(Complex c) {
    const auto s = eigendecompose(Eigen::MatrixXcd(effective_two_level(c)));
    Eigen::Vector2cd v = s.eigenvectors.col(0);
    return v;
}

GapReport spectral_gap(const GainGraph& g) {
    if (g.vertex_count() < 2) {
        throw ValidationError("spectral gap needs at least two vertices");
    }
    const auto s = eigendecompose(g);
    GapReport r;
    r.gap = s.eigenvalues(0) - s.eigenvalues(1);
    r.connected = connected_components(g).count == 1;
    return r;
}

}  // namespace qlgraph
