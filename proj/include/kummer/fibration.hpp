#pragma once

#include "kummer/divisor.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kummer {

enum class KodairaType { In, InStar, II, III, IV, IVStar, IIIStar, IIStar };

/// Euler numbers from the type table: e(I_n) = n, e(I*_n) = n + 6,
/// e(II) = 2, e(III) = 3, e(IV) = 4, e(IV*) = 8, e(III*) = 9, e(II*) = 10.
int kodaira_euler_number(KodairaType type, int n = 0);

/// Serialized tags: "I8", "I0*", "I1*", "II", "III", "IV", "IV*", "III*",
/// "II*".
std::string kodaira_type_name(KodairaType type, int n = 0);
std::optional<std::pair<KodairaType, int>> parse_kodaira_type(std::string_view token);

struct KodairaFiber {
    KodairaType type;
    int n = 0;  // index for I_n and I*_n, otherwise 0
    std::vector<std::pair<std::string, std::int64_t>> components;  // (curve, multiplicity)
    int euler = 0;

    std::string type_name() const { return kodaira_type_name(type, n); }
};

struct FiberCandidate {
    DivisorClass divisor;
    std::string section;
};

enum class FiberError {
    NotEffective,
    NonzeroSquare,
    NotNef,
    DisconnectedSupport,
    SectionPairing,
};

std::string_view fiber_error_text(FiberError error);

struct FiberCheck {
    bool ok = false;
    FiberError error{};
    std::string detail;  // witness curve / measured value on failure
    std::optional<FiberCandidate> candidate;
};

/// The elliptic-fiber predicate: effective, nonzero, square zero, nef on the
/// configuration, connected support, and pairing 1 with the section curve.
FiberCheck check_fiber_candidate(const CurveConfiguration& cfg, const DivisorClass& divisor,
                                 std::string_view section);

/// Classifies the weighted dual graph of the support against the affine
/// Dynkin patterns: a multiplicity-1 cycle gives I_n (n >= 3); the star and
/// chain shapes give IV*, III*, II* and I*_n. Throws std::domain_error for
/// any other shape -- irreducible singular fibers and tangency types cannot
/// arise from transversally meeting smooth rational curves.
KodairaFiber classify_kodaira(const CurveConfiguration& cfg, const DivisorClass& divisor);

/// Topological Euler number of a connected transversal configuration of
/// rational curves: 2 * #components - #intersection points. The matrix must
/// be symmetric with 0/1 entries off the diagonal; the diagonal is ignored.
int euler_number_from_graph(const Eigen::MatrixXi& adjacency);

/// Same, on the support subgraph of a divisor class.
int euler_number_from_graph(const CurveConfiguration& cfg, const DivisorClass& divisor);

/// All pairs (a, b) >= 0 with a + 2b = total - sum(known_fibers), ordered by
/// decreasing a. The two unknown fiber kinds contribute Euler numbers 1
/// (nodal) and 2 (cuspidal). Throws std::invalid_argument on a negative
/// residual.
std::vector<std::pair<int, int>> euler_constraint_solutions(const std::vector<int>& known_fibers,
                                                            int total);

/// Genus of a degree-d branched cover via the Riemann-Hurwitz formula. Each
/// profile lists the sheet multiplicities over one branch point and must be
/// a partition of the degree (throws otherwise).
Rational hurwitz_genus(int degree, int base_genus, const std::vector<std::vector<int>>& profiles);

/// Total Euler number of a K3 surface; fiber Euler numbers of an elliptic
/// fibration sum to it.
inline constexpr int k3_euler_number = 24;

}  // namespace kummer
