#include "spinrep/minkowski.hpp"

#include <cmath>

#include "spinrep/spincover.hpp"

namespace spinrep {

namespace {
const std::complex<double> kI(0.0, 1.0);
}

Eigen::Matrix4d minkowski_metric() {
    Eigen::Matrix4d j = Eigen::Matrix4d::Identity();
    j(3, 3) = -1.0;
    return j;
}

double minkowski_inner(const Event4& x, const Event4& y) {
    return x(0) * y(0) + x(1) * y(1) + x(2) * y(2) - x(3) * y(3);
}

bool is_proper_lorentz(const Eigen::Matrix4d& g, double tolerance) {
    const Eigen::Matrix4d j = minkowski_metric();
    const double metric_dev = (g.transpose() * j * g - j).cwiseAbs().maxCoeff();
    return metric_dev <= tolerance && std::abs(g.determinant() - 1.0) <= tolerance &&
           g(3, 3) >= 1.0 - tolerance;
}

LorentzMatrix4 boost(int axis, double chi) {
    if (axis < 1 || axis > 3) throw BadIndex("boost: axis must be in 1..3");
    LorentzMatrix4 b = LorentzMatrix4::Identity();
    const int a = axis - 1;
    b(a, a) = std::cosh(chi);
    b(a, 3) = std::sinh(chi);
    b(3, a) = std::sinh(chi);
    b(3, 3) = std::cosh(chi);
    return b;
}

LorentzMatrix4 embed_rotation(const RotationMatrix3& r) {
    LorentzMatrix4 g = LorentzMatrix4::Identity();
    g.topLeftCorner<3, 3>() = r;
    return g;
}

ComplexMatrix4 gamma(int j) {
    if (j < 1 || j > 4) throw BadIndex("gamma: index must be in 1..4");
    ComplexMatrix4 g = ComplexMatrix4::Zero();
    const ComplexMatrix2 s = pauli(j);
    if (j <= 3) {
        g.topRightCorner<2, 2>() = -kI * s;
        g.bottomLeftCorner<2, 2>() = kI * s;
    } else {
        g.topLeftCorner<2, 2>() = -kI * s;
        g.bottomRightCorner<2, 2>() = kI * s;
    }
    return g;
}

GammaSystem GammaSystem::standard() {
    return {{gamma(1), gamma(2), gamma(3), gamma(4)}};
}

CliffordReport clifford_check(const GammaSystem& gs) {
    const Eigen::Matrix4d j = minkowski_metric();
    CliffordReport report;
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            const ComplexMatrix4 anti = gs.g[a] * gs.g[b] + gs.g[b] * gs.g[a];
            const ComplexMatrix4 expect = 2.0 * j(a, b) * ComplexMatrix4::Identity();
            const double dev = (anti - expect).cwiseAbs().maxCoeff();
            if (dev > report.max_deviation) {
                report.max_deviation = dev;
                report.worst_j = a + 1;
                report.worst_k = b + 1;
            }
        }
    }
    report.pass = report.max_deviation == 0.0;
    return report;
}

DiracSymbol DiracSymbol::constant(const ComplexMatrix4& m) {
    return term({0, 0, 0, 0}, m);
}

DiracSymbol DiracSymbol::term(const Exponent& e, const ComplexMatrix4& m) {
    DiracSymbol s;
    s.add_term(e, m);
    return s;
}

void DiracSymbol::add_term(const Exponent& e, const ComplexMatrix4& m) {
    auto [it, inserted] = terms_.try_emplace(e, m);
    if (!inserted) it->second += m;
    prune();
}

void DiracSymbol::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second.cwiseAbs().maxCoeff() == 0.0) {
            it = terms_.erase(it);
        } else {
            ++it;
        }
    }
}

int DiracSymbol::degree() const {
    int d = 0;
    for (const auto& [e, m] : terms_) {
        d = std::max(d, e[0] + e[1] + e[2] + e[3]);
    }
    return d;
}

ComplexMatrix4 DiracSymbol::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? ComplexMatrix4::Zero().eval() : it->second;
}

DiracSymbol DiracSymbol::operator+(const DiracSymbol& o) const {
    DiracSymbol out = *this;
    for (const auto& [e, m] : o.terms_) out.add_term(e, m);
    return out;
}

DiracSymbol DiracSymbol::operator-(const DiracSymbol& o) const {
    DiracSymbol out = *this;
    for (const auto& [e, m] : o.terms_) out.add_term(e, -m);
    return out;
}

DiracSymbol DiracSymbol::operator*(const DiracSymbol& o) const {
    DiracSymbol out;
    for (const auto& [ea, ma] : terms_) {
        for (const auto& [eb, mb] : o.terms_) {
            const Exponent e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]};
            out.add_term(e, ma * mb);
        }
    }
    return out;
}

bool DiracSymbol::operator==(const DiracSymbol& o) const {
    return max_difference(o) == 0.0;
}

double DiracSymbol::max_difference(const DiracSymbol& o) const {
    double dev = 0.0;
    for (const auto& [e, m] : terms_) {
        dev = std::max(dev, (m - o.coefficient(e)).cwiseAbs().maxCoeff());
    }
    for (const auto& [e, m] : o.terms_) {
        dev = std::max(dev, (m - coefficient(e)).cwiseAbs().maxCoeff());
    }
    return dev;
}

DiracSymbol dirac_symbol(double kappa, int sign, const GammaSystem& gs) {
    if (!(kappa > 0.0)) throw NonpositiveMass("dirac_symbol: kappa must be positive");
    DiracSymbol s = DiracSymbol::constant((sign >= 0 ? kappa : -kappa) *
                                          ComplexMatrix4::Identity());
    for (int j = 0; j < 4; ++j) {
        DiracSymbol::Exponent e{0, 0, 0, 0};
        e[j] = 1;
        s.add_term(e, gs.g[j]);
    }
    return s;
}

FactorizationReport kg_factorization_check(double kappa, const GammaSystem& gs) {
    const DiracSymbol product = dirac_symbol(kappa, -1, gs) * dirac_symbol(kappa, +1, gs);

    DiracSymbol wave;  // d1^2 + d2^2 + d3^2 - d4^2 - kappa^2, times E_4
    for (int j = 0; j < 4; ++j) {
        DiracSymbol::Exponent e{0, 0, 0, 0};
        e[j] = 2;
        wave.add_term(e, (j == 3 ? -1.0 : 1.0) * ComplexMatrix4::Identity());
    }
    wave.add_term({0, 0, 0, 0}, (-kappa) * kappa * ComplexMatrix4::Identity());

    FactorizationReport report;
    const DiracSymbol diff = product - wave;
    for (const auto& [e, m] : diff.terms()) {
        const double dev = m.cwiseAbs().maxCoeff();
        if (dev > report.max_deviation) {
            report.max_deviation = dev;
            report.worst_exponent = e;
        }
    }
    report.pass = report.max_deviation == 0.0;
    return report;
}

ComplexMatrix4 plane_wave_matrix(const DiracSymbol& s, const Event4& p) {
    ComplexMatrix4 out = ComplexMatrix4::Zero();
    for (const auto& [e, m] : s.terms()) {
        std::complex<double> factor(1.0, 0.0);
        for (int j = 0; j < 4; ++j) {
            for (int k = 0; k < e[j]; ++k) factor *= kI * p(j);
        }
        out += factor * m;
    }
    return out;
}

}  // namespace spinrep
