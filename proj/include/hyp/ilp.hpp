#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyp/graph.hpp"

namespace hyp {

/// Affine expression over the model's variables: coeffs . x + constant.
struct LinExpr {
    std::vector<dist_t> coeffs;
    dist_t constant = 0;

    LinExpr() = default;
    explicit LinExpr(std::size_t nvars, dist_t c = 0) : coeffs(nvars, 0), constant(c) {}

    LinExpr& operator+=(const LinExpr& o);
    LinExpr& operator-=(const LinExpr& o);
    friend LinExpr operator+(LinExpr a, const LinExpr& b) { return a += b; }
    friend LinExpr operator-(LinExpr a, const LinExpr& b) { return a -= b; }
    dist_t eval(const std::vector<dist_t>& x) const;
};

struct IlpVar {
    std::string name;
    dist_t lo = 0;
    dist_t hi = 0;
};

enum class Rel { LE, EQ };  // expr <= 0  /  expr == 0

struct IlpRow {
    LinExpr expr;
    Rel rel = Rel::LE;
    std::string tag;
};

/// Integer program with a handful of box-bounded variables; objective is
/// always maximized.
struct IlpModel {
    std::vector<IlpVar> vars;
    std::vector<IlpRow> rows;
    LinExpr objective;
    std::string label;

    std::string to_json() const;
};

enum class IlpStatus { optimal, infeasible };

struct IlpSolution {
    IlpStatus status = IlpStatus::infeasible;
    dist_t objective = 0;
    std::vector<dist_t> values;
};

struct IlpSolveOptions {
    // direct integer enumeration when the (propagated) box product fits
    std::uint64_t enum_threshold = 1u << 12;
    std::uint64_t enum_hard_cap = 1000000;  // never enumerate above this
    // when set, only solutions with objective > cutoff are of interest;
    // anything at or below it may be reported as infeasible
    std::optional<dist_t> objective_cutoff;
};

/// Exact optimum over the integer points of the model's box, or infeasible.
/// Small boxes are enumerated; otherwise branch-and-bound with an exact
/// rational LP relaxation. No floating point anywhere.
IlpSolution solve_fixed_dim_ilp(const IlpModel& model, const IlpSolveOptions& opts = {});

/// Bound tightening over the rows; returns false when some box empties.
/// Shared by the solver and the model builder's pruning pass.
bool propagate_bounds(const std::vector<IlpRow>& rows, std::vector<dist_t>& lo,
                      std::vector<dist_t>& hi, int max_rounds = 16);

/// Exact rational feasibility of the relaxation over the box; used to prune
/// case selections whose dominance constraints contradict each other.
bool lp_feasible(const std::vector<IlpRow>& rows, const std::vector<dist_t>& lo,
                 const std::vector<dist_t>& hi);

}  // namespace hyp
