#include "cvhnn/core.hpp"

#include <cmath>
#include <stdexcept>

namespace cvhnn {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_same_size(const Network& net, const StateVector& s, const char* what) {
    if (s.size() != net.size())
        throw std::invalid_argument(std::string(what) + ": state length " + std::to_string(s.size()) +
                                    " does not match network size " + std::to_string(net.size()));
}

// Re{ s1* M s2 } with rows accumulated in ascending column order.
double quadratic_form_real(const Network& net, const StateVector& s1, const StateVector& s2) {
    const auto& m = net.weights();
    const std::size_t n = net.size();
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double hr = 0.0, hi = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const Complex w = m(i, j);
            const double x = s2[j].re(), y = s2[j].im();
            hr += w.real() * x - w.imag() * y;
            hi += w.real() * y + w.imag() * x;
        }
        acc += s1[i].re() * hr + s1[i].im() * hi;
    }
    return acc;
}

}  // namespace

QuadState::QuadState(int re, int im) {
    if ((re != 1 && re != -1) || (im != 1 && im != -1))
        throw std::invalid_argument("QuadState: components must be +1 or -1");
    code_ = static_cast<std::uint8_t>((re < 0 ? 1u : 0u) | (im < 0 ? 2u : 0u));
}

StateVector::StateVector(std::size_t n, QuadState fill) : data_(n, fill) {
    if (n == 0) throw std::invalid_argument("StateVector: length must be >= 1");
}

StateVector::StateVector(std::initializer_list<QuadState> init) : data_(init) {
    if (data_.empty()) throw std::invalid_argument("StateVector: length must be >= 1");
}

StateVector::StateVector(std::vector<QuadState> components) : data_(std::move(components)) {
    if (data_.empty()) throw std::invalid_argument("StateVector: length must be >= 1");
}

std::string to_string(QuadState q) {
    std::string out = q.re() > 0 ? "+1" : "-1";
    out += q.im() > 0 ? "+i" : "-i";
    return out;
}

std::string to_string(const StateVector& s) {
    std::string out = "[";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ", ";
        out += to_string(s[i]);
    }
    return out + "]";
}

Network::Network(ComplexMatrix weights, ComplexVector thresholds)
    : weights_(std::move(weights)), thresholds_(std::move(thresholds)) {
    if (weights_.size() == 0) throw std::invalid_argument("Network: size must be >= 1");
    if (thresholds_.size() != weights_.size())
        throw std::invalid_argument("Network: threshold length does not match weight matrix side");
    for (const Complex& w : weights_.data())
        if (!finite(w)) throw std::domain_error("Network: non-finite weight");
    for (const Complex& t : thresholds_)
        if (!finite(t)) throw std::domain_error("Network: non-finite threshold");
}

Network::Network(ComplexMatrix weights)
    : Network(ComplexMatrix(weights), ComplexVector(weights.size(), Complex{})) {}

std::string to_string(StructureTag tag) {
    switch (tag) {
        case StructureTag::Hermitian: return "hermitian";
        case StructureTag::SkewHermitian: return "skew-hermitian";
        case StructureTag::BraidedHermitian: return "braided-hermitian";
        case StructureTag::BraidedSkewHermitian: return "braided-skew-hermitian";
        case StructureTag::SymmetricComplex: return "symmetric";
        case StructureTag::AntisymmetricComplex: return "antisymmetric";
        case StructureTag::Unstructured: return "unstructured";
    }
    return "unknown";
}

int sign_real(double x) {
    if (!std::isfinite(x)) throw std::domain_error("sign_real: non-finite argument");
    return x >= 0.0 ? 1 : -1;
}

QuadState split_sign(Complex z) { return QuadState(sign_real(z.real()), sign_real(z.imag())); }

Complex local_field(const Network& net, const StateVector& s, std::size_t i) {
    require_same_size(net, s, "local_field");
    if (i >= net.size()) throw std::out_of_range("local_field: neuron index out of range");
    double re = 0.0, im = 0.0;
    const auto row = net.weights().row(i);
    for (std::size_t j = 0; j < row.size(); ++j) {
        const double x = s[j].re(), y = s[j].im();
        re += row[j].real() * x - row[j].imag() * y;
        im += row[j].real() * y + row[j].imag() * x;
    }
    const Complex t = net.thresholds()[i];
    return {re - t.real(), im - t.imag()};
}

double energy_serial(const Network& net, const StateVector& s) {
    require_same_size(net, s, "energy_serial");
    const double quad = quadratic_form_real(net, s, s);
    double lin = 0.0;
    for (std::size_t i = 0; i < net.size(); ++i) {
        const Complex t = net.thresholds()[i];
        lin += s[i].re() * t.real() + s[i].im() * t.imag();
    }
    return -(quad - 2.0 * lin);
}

double energy_parallel(const Network& net, const StateVector& s1, const StateVector& s2) {
    require_same_size(net, s1, "energy_parallel");
    require_same_size(net, s2, "energy_parallel");
    const double quad = quadratic_form_real(net, s1, s2);
    double lin = 0.0;
    for (std::size_t i = 0; i < net.size(); ++i) {
        const Complex t = net.thresholds()[i];
        const double xr = s1[i].re() + s2[i].re();
        const double xi = s1[i].im() + s2[i].im();
        lin += xr * t.real() + xi * t.imag();
    }
    return -(quad - lin);
}

}  // namespace cvhnn
