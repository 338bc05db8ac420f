#pragma once

// Batch problem descriptions. One JSON document describes one computation:
// a graded homology action, a torus map, periodic fixed point data, or a
// signed subshift family, plus the series order, growth horizon, and
// optional unit holonomies for torsion evaluation.

#include "zeta/homology.hpp"
#include "zeta/int_matrix.hpp"
#include "zeta/periodic.hpp"
#include "zeta/subshift.hpp"
#include "zeta/torsion.hpp"
#include "zeta/torus.hpp"

#include <string>
#include <variant>
#include <vector>

namespace zeta {

enum class ProblemKind { homology, torus, periodic, subshift };

std::string to_string(ProblemKind kind);

struct HomologyPayload {
    std::vector<IntMatrix> matrices;
    bool surface = false;

    bool operator==(const HomologyPayload&) const = default;
};

struct TorusPayload {
    IntMatrix matrix;

    bool operator==(const TorusPayload&) const = default;
};

struct PeriodicPayload {
    long period = 1;
    std::map<long, Int> counts;

    bool operator==(const PeriodicPayload&) const = default;
};

struct SubshiftPiecePayload {
    IntMatrix matrix;
    int sign = 1;

    bool operator==(const SubshiftPiecePayload&) const = default;
};

struct SubshiftPayload {
    std::vector<SubshiftPiecePayload> pieces;

    bool operator==(const SubshiftPayload&) const = default;
};

struct Holonomy {
    double re = 1.0;
    double im = 0.0;

    UnitHolonomy unit() const { return UnitHolonomy(re, im); }

    bool operator==(const Holonomy&) const = default;
};

struct ProblemInput {
    static constexpr int kDefaultOrder = 32;
    static constexpr int kDefaultHorizon = 60;
    static constexpr int kMaxOrder = 512;
    static constexpr int kMaxHorizon = 10000;
    static constexpr int kMinHorizon = 4;

    ProblemKind kind = ProblemKind::homology;
    std::variant<HomologyPayload, TorusPayload, PeriodicPayload, SubshiftPayload> payload;
    int order = kDefaultOrder;
    int horizon = kDefaultHorizon;
    std::vector<Holonomy> lambdas;  // homology and torus kinds only

    // Parses and fully validates a JSON document; throws
    // std::invalid_argument with a schema message on any violation.
    static ProblemInput parse(const std::string& json_text);

    // Canonical JSON rendering; parse(to_json_text()) reproduces *this.
    std::string to_json_text() const;

    // Range and payload checks, re-run after any field override.
    void validate() const;

    bool operator==(const ProblemInput&) const = default;
};

}  // namespace zeta
