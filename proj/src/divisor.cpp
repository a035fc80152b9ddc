#include "kummer/divisor.hpp"

#include <stdexcept>
#include <utility>

namespace kummer {

DivisorClass DivisorClass::zero(const CurveConfiguration& cfg, std::string label) {
    return {CoeffVector::Zero(cfg.size()), std::move(label)};
}

DivisorClass DivisorClass::unit(const CurveConfiguration& cfg, std::string_view curve) {
    const auto idx = cfg.index_of(curve);
    DivisorClass d = zero(cfg, std::string(cfg.name(idx)));
    d.coeffs[idx] = 1;
    return d;
}

DivisorClass DivisorClass::from_terms(const CurveConfiguration& cfg,
                                      const std::vector<std::pair<std::int64_t, std::string>>& terms,
                                      std::string label) {
    DivisorClass d = zero(cfg, std::move(label));
    for (const auto& [coeff, curve] : terms) d.coeffs[cfg.index_of(curve)] += coeff;
    return d;
}

namespace {

void require_same_basis(const DivisorClass& lhs, const DivisorClass& rhs) {
    if (lhs.coeffs.size() != rhs.coeffs.size())
        throw std::invalid_argument("divisor classes live in different configurations");
}

}  // namespace

DivisorClass operator+(const DivisorClass& lhs, const DivisorClass& rhs) {
    require_same_basis(lhs, rhs);
    return {lhs.coeffs + rhs.coeffs, {}};
}

DivisorClass operator-(const DivisorClass& lhs, const DivisorClass& rhs) {
    require_same_basis(lhs, rhs);
    return {lhs.coeffs - rhs.coeffs, {}};
}

DivisorClass operator*(std::int64_t scale, const DivisorClass& divisor) {
    return {scale * divisor.coeffs, {}};
}

std::int64_t pairing(const CurveConfiguration& cfg, const DivisorClass& lhs, const DivisorClass& rhs) {
    require_same_basis(lhs, rhs);
    if (lhs.coeffs.size() != cfg.size())
        throw std::invalid_argument("divisor class does not match the configuration");
    return lhs.coeffs.dot(cfg.gram() * rhs.coeffs);
}

std::int64_t self_intersection(const CurveConfiguration& cfg, const DivisorClass& divisor) {
    return pairing(cfg, divisor, divisor);
}

bool is_effective(const DivisorClass& divisor) { return (divisor.coeffs.array() >= 0).all(); }

bool is_zero(const DivisorClass& divisor) { return (divisor.coeffs.array() == 0).all(); }

NefCheck is_nef_on_configuration(const CurveConfiguration& cfg, const DivisorClass& divisor) {
    if (!is_effective(divisor))
        throw std::invalid_argument("nefness check expects an effective class");
    const CoeffVector against_curves = cfg.gram() * divisor.coeffs;
    for (Eigen::Index r = 0; r < against_curves.size(); ++r)
        if (against_curves[r] < 0) return {false, r, against_curves[r]};
    return {true, -1, 0};
}

Rational adjunction_genus(std::int64_t self_int, std::int64_t k_dot_d) {
    return Rational(1) + Rational(self_int + k_dot_d, 2);
}

std::int64_t self_intersection_for_genus(std::int64_t genus, std::int64_t k_dot_d) {
    return 2 * genus - 2 - k_dot_d;
}

std::int64_t riemann_roch_lower_bound(const CurveConfiguration& cfg, const DivisorClass& divisor) {
    if (is_zero(divisor))
        throw std::invalid_argument("section-count bound expects a nonzero class");
    if (!is_nef_on_configuration(cfg, divisor).nef)
        throw std::invalid_argument("section-count bound expects a nef class");
    return 2 + self_intersection(cfg, divisor) / 2;
}

Eigen::Index lattice_rank(const CurveConfiguration& cfg, std::span<const DivisorClass> classes) {
    if (classes.empty()) throw std::invalid_argument("rank of an empty class list");
    const auto n = cfg.size();
    IntMatrix pairings(static_cast<Eigen::Index>(classes.size()), n);
    for (Eigen::Index r = 0; r < pairings.rows(); ++r) {
        const CoeffVector row = cfg.gram() * classes[static_cast<std::size_t>(r)].coeffs;
        for (Eigen::Index c = 0; c < n; ++c) pairings(r, c) = Int(row[c]);
    }
    return integer_matrix_rank(std::move(pairings));
}

Eigen::Index integer_matrix_rank(IntMatrix m) {
    const Eigen::Index rows = m.rows();
    const Eigen::Index cols = m.cols();
    Eigen::Index rank = 0;
    Int previous_pivot = 1;
    for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
        Eigen::Index pivot_row = -1;
        for (Eigen::Index r = rank; r < rows; ++r) {
            if (m(r, col) != 0) {
                pivot_row = r;
                break;
            }
        }
        if (pivot_row < 0) continue;
        if (pivot_row != rank)
            for (Eigen::Index c = 0; c < cols; ++c) std::swap(m(pivot_row, c), m(rank, c));
        const Int pivot = m(rank, col);
        for (Eigen::Index r = rank + 1; r < rows; ++r) {
            // fraction-free update: the division by the previous pivot is exact
            const Int lead = m(r, col);
            for (Eigen::Index c = col; c < cols; ++c)
                m(r, c) = (m(r, c) * pivot - lead * m(rank, c)) / previous_pivot;
        }
        previous_pivot = pivot;
        ++rank;
    }
    return rank;
}

}  // namespace kummer
