#pragma once

#include "kummer/curve_config.hpp"
#include "kummer/rational.hpp"

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace kummer {

using CoeffVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;
using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;

/// Integer divisor class written in a configuration's curve basis.
struct DivisorClass {
    CoeffVector coeffs;  // one entry per configuration curve
    std::string label;   // optional display name

    static DivisorClass zero(const CurveConfiguration& cfg, std::string label = {});
    static DivisorClass unit(const CurveConfiguration& cfg, std::string_view curve);
    static DivisorClass from_terms(const CurveConfiguration& cfg,
                                   const std::vector<std::pair<std::int64_t, std::string>>& terms,
                                   std::string label = {});
};

DivisorClass operator+(const DivisorClass& lhs, const DivisorClass& rhs);
DivisorClass operator-(const DivisorClass& lhs, const DivisorClass& rhs);
DivisorClass operator*(std::int64_t scale, const DivisorClass& divisor);

/// Intersection number of the two classes under the configuration's Gram
/// matrix; bilinear and symmetric.
std::int64_t pairing(const CurveConfiguration& cfg, const DivisorClass& lhs, const DivisorClass& rhs);

std::int64_t self_intersection(const CurveConfiguration& cfg, const DivisorClass& divisor);

bool is_effective(const DivisorClass& divisor);
bool is_zero(const DivisorClass& divisor);

struct NefCheck {
    bool nef = false;
    Eigen::Index witness = -1;       // violating curve index when !nef
    std::int64_t witness_value = 0;  // its negative pairing
};

/// Nefness relative to the configuration: nonnegative pairing with every
/// configuration curve. Throws std::invalid_argument for non-effective
/// input.
NefCheck is_nef_on_configuration(const CurveConfiguration& cfg, const DivisorClass& divisor);

/// Arithmetic genus from adjunction: g = 1 + (self_int + k_dot_d) / 2,
/// returned exactly; a non-integral result means the input is not a curve
/// class.
Rational adjunction_genus(std::int64_t self_int, std::int64_t k_dot_d);

/// Inverse of the adjunction relation: the self-intersection a curve of the
/// given genus must have.
std::int64_t self_intersection_for_genus(std::int64_t genus, std::int64_t k_dot_d);

/// Section-count lower bound 2 + D^2/2 valid on a K3 for nonzero nef
/// effective classes; rejects anything else with std::invalid_argument.
std::int64_t riemann_roch_lower_bound(const CurveConfiguration& cfg, const DivisorClass& divisor);

/// Rank over Q of the span of the given classes, measured through their
/// pairings against all configuration curves so that isotropic classes are
/// counted correctly. Exact. Throws std::invalid_argument on an empty list.
Eigen::Index lattice_rank(const CurveConfiguration& cfg, std::span<const DivisorClass> classes);

/// Exact rank of an integer matrix by fraction-free (Bareiss) elimination.
Eigen::Index integer_matrix_rank(IntMatrix m);

}  // namespace kummer
