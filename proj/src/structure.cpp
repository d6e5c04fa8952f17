#include "cvhnn/structure.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cvhnn {

namespace {

struct Interval {
    double lo;
    double hi;
};

Interval interval_of(SignKind k) {
    switch (k) {
        case SignKind::Positive: return {0.0, 1.0};
        case SignKind::Negative: return {-1.0, 0.0};
        case SignKind::Arbitrary: return {-1.0, 1.0};
    }
    throw std::invalid_argument("unknown SignKind");
}

void require_n(std::size_t n, const char* what) {
    if (n == 0) throw std::invalid_argument(std::string(what) + ": n must be >= 1");
}

// Shared draw pattern for every structured real matrix. The diagonal gets its
// own interval (ignored for antisymmetric matrices, whose diagonal is 0).
RealMatrix draw_structured(std::size_t n, SymmetryKind sym, Interval off, Interval diag, SeededRng& rng) {
    RealMatrix m(n);
    switch (sym) {
        case SymmetryKind::Symmetric:
            for (std::size_t i = 0; i < n; ++i) {
                m(i, i) = rng.uniform(diag.lo, diag.hi);
                for (std::size_t j = i + 1; j < n; ++j) m(i, j) = m(j, i) = rng.uniform(off.lo, off.hi);
            }
            break;
        case SymmetryKind::Antisymmetric:
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j) {
                    const double v = rng.uniform(off.lo, off.hi);
                    m(i, j) = v;
                    m(j, i) = -v;
                }
            break;
        case SymmetryKind::Arbitrary:
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    const Interval iv = i == j ? diag : off;
                    m(i, j) = rng.uniform(iv.lo, iv.hi);
                }
            break;
    }
    return m;
}

void require_square_nonempty(const RealMatrix& a, const char* what) {
    if (a.size() == 0) throw std::invalid_argument(std::string(what) + ": empty matrix");
}

RealMatrix negated(RealMatrix m) {
    RealMatrix out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) out(i, j) = -m(i, j);
    return out;
}

}  // namespace

std::string_view to_string(SymmetryKind k) {
    switch (k) {
        case SymmetryKind::Symmetric: return "symmetric";
        case SymmetryKind::Antisymmetric: return "antisymmetric";
        case SymmetryKind::Arbitrary: return "arbitrary";
    }
    return "?";
}

std::string_view to_string(SignKind k) {
    switch (k) {
        case SignKind::Positive: return "positive";
        case SignKind::Negative: return "negative";
        case SignKind::Arbitrary: return "arbitrary";
    }
    return "?";
}

std::string_view to_string(ThresholdMode m) { return m == ThresholdMode::Zero ? "zero" : "uniform"; }

SymmetryKind parse_symmetry(std::string_view s) {
    if (s == "symmetric" || s == "sym") return SymmetryKind::Symmetric;
    if (s == "antisymmetric" || s == "antisym") return SymmetryKind::Antisymmetric;
    if (s == "arbitrary" || s == "arb") return SymmetryKind::Arbitrary;
    throw std::invalid_argument("unknown symmetry kind '" + std::string(s) + "'");
}

SignKind parse_sign(std::string_view s) {
    if (s == "positive" || s == "pos") return SignKind::Positive;
    if (s == "negative" || s == "neg") return SignKind::Negative;
    if (s == "arbitrary" || s == "arb") return SignKind::Arbitrary;
    throw std::invalid_argument("unknown sign kind '" + std::string(s) + "'");
}

ThresholdMode parse_threshold(std::string_view s) {
    if (s == "zero") return ThresholdMode::Zero;
    if (s == "uniform" || s == "uniform-scaled") return ThresholdMode::UniformScaled;
    throw std::invalid_argument("unknown threshold mode '" + std::string(s) + "'");
}

RealMatrix gen_real_constrained(const RealMatrixSpec& spec, SeededRng& rng) {
    require_n(spec.n, "gen_real_constrained");
    const Interval iv = interval_of(spec.sign);
    return draw_structured(spec.n, spec.symmetry, iv, iv, rng);
}

ComplexMatrix compose_weights(const RealMatrix& a, const RealMatrix& b) {
    if (a.size() != b.size()) throw std::invalid_argument("compose_weights: A and B differ in shape");
    ComplexMatrix m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) m(i, j) = Complex(a(i, j), b(i, j));
    return m;
}

ComplexMatrix gen_braided_hermitian(const RealMatrix& a) {
    require_square_nonempty(a, "gen_braided_hermitian");
    return compose_weights(a, a.transpose());
}

ComplexMatrix gen_braided_skew_hermitian(const RealMatrix& a) {
    require_square_nonempty(a, "gen_braided_skew_hermitian");
    return compose_weights(a, negated(a.transpose()));
}

ComplexMatrix gen_hermitian(std::size_t n, SignKind sign_re, SignKind sign_im, bool diag_nonneg,
                            SeededRng& rng) {
    require_n(n, "gen_hermitian");
    const Interval diag = diag_nonneg ? Interval{0.0, 1.0} : Interval{-1.0, 1.0};
    const RealMatrix re = draw_structured(n, SymmetryKind::Symmetric, interval_of(sign_re), diag, rng);
    const Interval im_iv = interval_of(sign_im);
    const RealMatrix im = draw_structured(n, SymmetryKind::Antisymmetric, im_iv, im_iv, rng);
    return compose_weights(re, im);
}

ComplexMatrix gen_skew_hermitian(std::size_t n, SeededRng& rng) {
    require_n(n, "gen_skew_hermitian");
    const Interval unit{-1.0, 1.0};
    const RealMatrix re = draw_structured(n, SymmetryKind::Antisymmetric, unit, unit, rng);
    const RealMatrix im = draw_structured(n, SymmetryKind::Symmetric, unit, unit, rng);
    return compose_weights(re, im);
}

ComplexMatrix gen_polar(const PolarSpec& spec, SeededRng& rng) {
    require_n(spec.n, "gen_polar");
    const Interval mag{0.0, 1.0};
    const Interval phase{-std::numbers::pi, std::numbers::pi};
    const RealMatrix g = draw_structured(spec.n, spec.magnitude_symmetry, mag, mag, rng);
    const RealMatrix p = draw_structured(spec.n, spec.phase_symmetry, phase, phase, rng);
    ComplexMatrix m(spec.n);
    for (std::size_t i = 0; i < spec.n; ++i)
        for (std::size_t j = 0; j < spec.n; ++j)
            m(i, j) = Complex(g(i, j) * std::cos(p(i, j)), g(i, j) * std::sin(p(i, j)));
    return m;
}

std::set<StructureTag> classify(const ComplexMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0) throw std::invalid_argument("classify: empty matrix");
    bool herm = true, skew = true, braided = true, braided_skew = true, sym = true, antisym = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Complex a = m(i, j), b = m(j, i);
            // (M*)_ij = conj(M_ji)
            herm = herm && b.real() == a.real() && -b.imag() == a.imag();
            skew = skew && b.real() == -a.real() && -b.imag() == -a.imag();
            braided = braided && a.imag() == b.real();
            braided_skew = braided_skew && a.imag() == -b.real();
            sym = sym && a == b;
            antisym = antisym && a == -b;
        }
    std::set<StructureTag> tags;
    if (herm) tags.insert(StructureTag::Hermitian);
    if (skew) tags.insert(StructureTag::SkewHermitian);
    if (braided) tags.insert(StructureTag::BraidedHermitian);
    if (braided_skew) tags.insert(StructureTag::BraidedSkewHermitian);
    if (sym) tags.insert(StructureTag::SymmetricComplex);
    if (antisym) tags.insert(StructureTag::AntisymmetricComplex);
    if (tags.empty()) tags.insert(StructureTag::Unstructured);
    return tags;
}

RealMatrix realify(const ComplexMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0) throw std::invalid_argument("realify: empty matrix");
    RealMatrix w(2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const double a = m(i, j).real(), b = m(i, j).imag();
            w(i, j) = a;
            w(i, j + n) = -b;
            w(i + n, j) = b;
            w(i + n, j + n) = a;
        }
    return w;
}

ComplexVector gen_threshold(std::size_t n, ThresholdMode mode, SeededRng& rng) {
    require_n(n, "gen_threshold");
    ComplexVector t(n);
    if (mode == ThresholdMode::Zero) return t;
    const double bound = static_cast<double>(n);
    for (auto& c : t) {
        const double re = rng.uniform(-bound, bound);
        const double im = rng.uniform(-bound, bound);
        c = Complex(re, im);
    }
    return t;
}

}  // namespace cvhnn
