#include "hyp/ilp.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "json.hpp"

namespace hyp {

LinExpr& LinExpr::operator+=(const LinExpr& o) {
    if (coeffs.size() < o.coeffs.size()) coeffs.resize(o.coeffs.size(), 0);
    for (std::size_t i = 0; i < o.coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
    constant += o.constant;
    return *this;
}

LinExpr& LinExpr::operator-=(const LinExpr& o) {
    if (coeffs.size() < o.coeffs.size()) coeffs.resize(o.coeffs.size(), 0);
    for (std::size_t i = 0; i < o.coeffs.size(); ++i) coeffs[i] -= o.coeffs[i];
    constant -= o.constant;
    return *this;
}

dist_t LinExpr::eval(const std::vector<dist_t>& x) const {
    dist_t s = constant;
    for (std::size_t i = 0; i < coeffs.size(); ++i) s += coeffs[i] * x[i];
    return s;
}

std::string IlpModel::to_json() const {
    nlohmann::json j;
    j["label"] = label;
    auto& jv = j["vars"];
    for (const auto& v : vars) jv.push_back({{"name", v.name}, {"lo", v.lo}, {"hi", v.hi}});
    auto& jr = j["rows"];
    for (const auto& r : rows)
        jr.push_back({{"coeffs", r.expr.coeffs},
                      {"constant", r.expr.constant},
                      {"rel", r.rel == Rel::EQ ? "==0" : "<=0"},
                      {"tag", r.tag}});
    j["objective"] = {{"coeffs", objective.coeffs}, {"constant", objective.constant}};
    return j.dump();
}

bool propagate_bounds(const std::vector<IlpRow>& rows, std::vector<dist_t>& lo,
                      std::vector<dist_t>& hi, int max_rounds) {
    const std::size_t n = lo.size();
    for (int round = 0; round < max_rounds; ++round) {
        bool changed = false;
        for (const auto& row : rows) {
            // For expr <= 0 (and both directions of ==): bound each variable
            // by the extreme contribution of the others.
            for (int dir = 0; dir < (row.rel == Rel::EQ ? 2 : 1); ++dir) {
                dist_t sign = dir == 0 ? 1 : -1;  // sign * expr <= 0
                dist_t min_rest_total = sign * row.expr.constant;
                for (std::size_t i = 0; i < row.expr.coeffs.size(); ++i) {
                    dist_t a = sign * row.expr.coeffs[i];
                    min_rest_total += a >= 0 ? a * lo[i] : a * hi[i];
                }
                if (min_rest_total > 0) return false;  // row unsatisfiable
                for (std::size_t i = 0; i < row.expr.coeffs.size() && i < n; ++i) {
                    dist_t a = sign * row.expr.coeffs[i];
                    if (a == 0) continue;
                    dist_t min_rest = min_rest_total - (a >= 0 ? a * lo[i] : a * hi[i]);
                    // a*x_i + min_rest <= 0
                    if (a > 0) {
                        dist_t bound = -min_rest;  // a*x <= bound
                        dist_t nb = bound >= 0 ? bound / a : -((-bound + a - 1) / a);
                        if (nb < hi[i]) {
                            hi[i] = nb;
                            changed = true;
                        }
                    } else {
                        dist_t na = -a;  // na*x >= min_rest ... x >= ceil(min_rest/na)
                        dist_t mr = min_rest;
                        dist_t nb = mr >= 0 ? (mr + na - 1) / na : -((-mr) / na);
                        if (nb > lo[i]) {
                            lo[i] = nb;
                            changed = true;
                        }
                    }
                    if (lo[i] > hi[i]) return false;
                }
            }
        }
        if (!changed) break;
    }
    return true;
}

namespace {

struct Overflow : std::runtime_error {
    Overflow() : std::runtime_error("rational overflow") {}
};

// Exact rational on int64 with overflow detection; the LP retries with
// arbitrary precision when arithmetic leaves the 64-bit range.
struct Rat64 {
    std::int64_t num = 0, den = 1;

    Rat64() = default;
    Rat64(std::int64_t v) : num(v) {}
    static Rat64 make(__int128 n, __int128 d) {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        __int128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX) throw Overflow();
        Rat64 r;
        r.num = static_cast<std::int64_t>(n);
        r.den = static_cast<std::int64_t>(d);
        return r;
    }
    static __int128 gcd128(__int128 a, __int128 b) {
        while (b) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a < 0 ? -a : a;
    }
    friend Rat64 operator+(const Rat64& a, const Rat64& b) {
        return make(__int128(a.num) * b.den + __int128(b.num) * a.den, __int128(a.den) * b.den);
    }
    friend Rat64 operator-(const Rat64& a, const Rat64& b) {
        return make(__int128(a.num) * b.den - __int128(b.num) * a.den, __int128(a.den) * b.den);
    }
    friend Rat64 operator*(const Rat64& a, const Rat64& b) {
        return make(__int128(a.num) * b.num, __int128(a.den) * b.den);
    }
    friend Rat64 operator/(const Rat64& a, const Rat64& b) {
        if (b.num == 0) throw std::domain_error("division by zero");
        return make(__int128(a.num) * b.den, __int128(a.den) * b.num);
    }
    friend bool operator==(const Rat64& a, const Rat64& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Rat64& a, const Rat64& b) {
        return __int128(a.num) * b.den < __int128(b.num) * a.den;
    }
    friend bool operator>(const Rat64& a, const Rat64& b) { return b < a; }
    friend bool operator<=(const Rat64& a, const Rat64& b) { return !(b < a); }
    friend bool operator>=(const Rat64& a, const Rat64& b) { return !(a < b); }
    bool is_integer() const { return den == 1; }
    std::int64_t floor() const {
        if (num >= 0) return num / den;
        return -((-num + den - 1) / den);
    }
};

using BigRat = boost::multiprecision::cpp_rational;

template <class R>
R from_int(std::int64_t v) {
    return R(v);
}

template <class R>
std::int64_t rat_floor(const R& r);
template <>
std::int64_t rat_floor<Rat64>(const Rat64& r) {
    return r.floor();
}
template <>
std::int64_t rat_floor<BigRat>(const BigRat& r) {
    using boost::multiprecision::cpp_int;
    cpp_int n = numerator(r), d = denominator(r);
    cpp_int q = n / d;
    if (n % d != 0 && n < 0) --q;
    return static_cast<std::int64_t>(q);
}

template <class R>
bool rat_is_integer(const R& r);
template <>
bool rat_is_integer<Rat64>(const Rat64& r) {
    return r.is_integer();
}
template <>
bool rat_is_integer<BigRat>(const BigRat& r) {
    return denominator(r) == 1;
}

enum class LpStatus { optimal, infeasible };

template <class R>
struct LpResult {
    LpStatus status = LpStatus::infeasible;
    R objective{};
    std::vector<R> x;
};

// Two-phase dense tableau simplex with Bland's rule.
// maximize c.x  s.t.  A x <= b, x >= 0   (b may be negative)
template <class R>
LpResult<R> simplex_max(const std::vector<std::vector<R>>& A, const std::vector<R>& b,
                        const std::vector<R>& c) {
    const std::size_t m = A.size(), n = c.size();
    const R zero = from_int<R>(0), one = from_int<R>(1);

    // columns: n structural + m slacks + artificials for negative-b rows
    std::size_t art = 0;
    for (const auto& bi : b)
        if (bi < zero) ++art;
    const std::size_t cols = n + m + art;
    std::vector<std::vector<R>> T(m, std::vector<R>(cols + 1, zero));
    std::vector<std::size_t> basis(m);
    std::size_t art_at = n + m;
    for (std::size_t i = 0; i < m; ++i) {
        bool neg = b[i] < zero;
        R s = neg ? from_int<R>(-1) : one;
        for (std::size_t j = 0; j < n; ++j) T[i][j] = neg ? zero - A[i][j] : A[i][j];
        T[i][n + i] = s;  // slack (negated row keeps identity handled below)
        T[i][cols] = neg ? zero - b[i] : b[i];
        if (neg) {
            T[i][art_at] = one;
            basis[i] = art_at++;
        } else {
            basis[i] = n + i;
        }
    }

    auto pivot = [&](std::size_t pr, std::size_t pc) {
        R inv = one / T[pr][pc];
        for (auto& v : T[pr]) v = v * inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == pr) continue;
            R f = T[i][pc];
            if (f == zero) continue;
            for (std::size_t j = 0; j <= cols; ++j) T[i][j] = T[i][j] - f * T[pr][j];
        }
        basis[pr] = pc;
    };

    // price columns [0, allowed) against an objective vector; Bland's rule
    auto run = [&](const std::vector<R>& obj, std::size_t allowed) -> bool {  // false = unbounded
        for (;;) {
            std::size_t enter = cols;
            for (std::size_t j = 0; j < allowed && enter == cols; ++j) {
                R rc = j < obj.size() ? obj[j] : zero;
                for (std::size_t i = 0; i < m; ++i) {
                    R cb = basis[i] < obj.size() ? obj[basis[i]] : zero;
                    if (!(cb == zero)) rc = rc - cb * T[i][j];
                }
                if (rc > zero) enter = j;
            }
            if (enter == cols) return true;  // optimal
            std::size_t leave = m;
            R best_ratio = zero;
            for (std::size_t i = 0; i < m; ++i) {
                if (T[i][enter] > zero) {
                    R ratio = T[i][cols] / T[i][enter];
                    if (leave == m || ratio < best_ratio ||
                        (ratio == best_ratio && basis[i] < basis[leave])) {
                        leave = i;
                        best_ratio = ratio;
                    }
                }
            }
            if (leave == m) return false;  // unbounded
            pivot(leave, enter);
        }
    };

    if (art > 0) {
        // phase 1: maximize -(sum of artificials)
        std::vector<R> obj(cols, zero);
        for (std::size_t j = n + m; j < cols; ++j) obj[j] = from_int<R>(-1);
        run(obj, cols);
        R p1 = zero;
        for (std::size_t i = 0; i < m; ++i)
            if (basis[i] >= n + m) p1 = p1 + T[i][cols];
        if (p1 > zero) return {};  // infeasible
        // drive leftover zero-valued artificials out of the basis
        for (std::size_t i = 0; i < m; ++i) {
            if (basis[i] < n + m) continue;
            std::size_t pc = cols;
            for (std::size_t j = 0; j < n + m && pc == cols; ++j)
                if (!(T[i][j] == zero)) pc = j;
            if (pc != cols) pivot(i, pc);
            // else: redundant row, keep the artificial at value 0
        }
    }

    // phase 2 prices only structural and slack columns so zero-valued
    // artificials left in the basis can never regain a positive value
    std::vector<R> obj(cols, zero);
    for (std::size_t j = 0; j < n; ++j) obj[j] = c[j];
    if (!run(obj, n + m)) throw std::logic_error("unbounded model: boxes must bound every variable");

    LpResult<R> res;
    res.status = LpStatus::optimal;
    res.x.assign(n, zero);
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < n) res.x[basis[i]] = T[i][cols];
    res.objective = zero;
    for (std::size_t j = 0; j < n; ++j) res.objective = res.objective + c[j] * res.x[j];
    return res;
}

// LP relaxation of the model over box [lo,hi]: shift to x' = x - lo >= 0,
// add upper-bound rows, equalities as two inequalities.
template <class R>
LpResult<R> lp_relax(const IlpModel& model, const std::vector<dist_t>& lo,
                     const std::vector<dist_t>& hi) {
    const std::size_t n = model.vars.size();
    std::vector<std::vector<R>> A;
    std::vector<R> b;
    auto add_le = [&](const LinExpr& e, dist_t sign) {
        // sign * (coeffs.x + const) <= 0 in shifted coordinates
        std::vector<R> row(n, from_int<R>(0));
        dist_t rhs = -sign * e.constant;
        for (std::size_t j = 0; j < e.coeffs.size(); ++j) {
            dist_t a = sign * e.coeffs[j];
            row[j] = from_int<R>(a);
            rhs -= a * lo[j];
        }
        A.push_back(std::move(row));
        b.push_back(from_int<R>(rhs));
    };
    for (const auto& r : model.rows) {
        add_le(r.expr, 1);
        if (r.rel == Rel::EQ) add_le(r.expr, -1);
    }
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<R> row(n, from_int<R>(0));
        row[j] = from_int<R>(1);
        A.push_back(std::move(row));
        b.push_back(from_int<R>(hi[j] - lo[j]));
    }
    std::vector<R> c(n);
    for (std::size_t j = 0; j < n; ++j)
        c[j] = from_int<R>(j < model.objective.coeffs.size() ? model.objective.coeffs[j] : 0);
    auto res = simplex_max<R>(A, b, c);
    if (res.status == LpStatus::optimal) {
        for (std::size_t j = 0; j < n; ++j) res.x[j] = res.x[j] + from_int<R>(lo[j]);
        res.objective = res.objective + from_int<R>(model.objective.constant);
        for (std::size_t j = 0; j < n; ++j) {
            dist_t a = j < model.objective.coeffs.size() ? model.objective.coeffs[j] : 0;
            res.objective = res.objective + from_int<R>(a * lo[j]);
        }
    }
    return res;
}

bool rows_satisfied(const IlpModel& model, const std::vector<dist_t>& x) {
    for (const auto& r : model.rows) {
        dist_t v = r.expr.eval(x);
        if (r.rel == Rel::LE ? v > 0 : v != 0) return false;
    }
    return true;
}

// Depth-first integer enumeration with running row bounds.
struct Enumerator {
    const IlpModel& model;
    const std::vector<dist_t>&lo, &hi;
    std::vector<dist_t> x;
    IlpSolution best;
    dist_t floor_bound = std::numeric_limits<dist_t>::min();

    Enumerator(const IlpModel& m, const std::vector<dist_t>& l, const std::vector<dist_t>& h)
        : model(m), lo(l), hi(h), x(m.vars.size(), 0) {}

    dist_t bound() const {
        return best.status == IlpStatus::optimal ? std::max(best.objective, floor_bound)
                                                 : floor_bound;
    }

    // residual interval of row value given vars [0,k) fixed
    bool rows_possible(std::size_t k) {
        for (const auto& r : model.rows) {
            dist_t fixed = r.expr.constant, vmin = 0, vmax = 0;
            for (std::size_t j = 0; j < r.expr.coeffs.size(); ++j) {
                dist_t a = r.expr.coeffs[j];
                if (a == 0) continue;
                if (j < k)
                    fixed += a * x[j];
                else {
                    vmin += a > 0 ? a * lo[j] : a * hi[j];
                    vmax += a > 0 ? a * hi[j] : a * lo[j];
                }
            }
            if (fixed + vmin > 0) return false;
            if (r.rel == Rel::EQ && fixed + vmax < 0) return false;
        }
        return true;
    }

    dist_t obj_upper(std::size_t k) {
        dist_t u = model.objective.constant;
        for (std::size_t j = 0; j < model.objective.coeffs.size(); ++j) {
            dist_t a = model.objective.coeffs[j];
            if (j < k)
                u += a * x[j];
            else
                u += a > 0 ? a * hi[j] : a * lo[j];
        }
        return u;
    }

    void rec(std::size_t k) {
        if (obj_upper(k) <= bound()) return;
        if (!rows_possible(k)) return;
        if (k == model.vars.size()) {
            dist_t v = model.objective.eval(x);
            if (v > bound()) {
                best.status = IlpStatus::optimal;
                best.objective = v;
                best.values = x;
            }
            return;
        }
        for (dist_t val = lo[k]; val <= hi[k]; ++val) {
            x[k] = val;
            rec(k + 1);
        }
    }
};

template <class R>
IlpSolution branch_and_bound(const IlpModel& model, std::vector<dist_t> lo, std::vector<dist_t> hi,
                             const IlpSolveOptions& opts) {
    IlpSolution best;
    const dist_t floor_bound =
        opts.objective_cutoff ? *opts.objective_cutoff : std::numeric_limits<dist_t>::min();
    auto bound = [&] {
        return best.status == IlpStatus::optimal ? std::max(best.objective, floor_bound)
                                                 : floor_bound;
    };
    struct Node {
        std::vector<dist_t> lo, hi;
    };
    std::vector<Node> stack{{std::move(lo), std::move(hi)}};
    while (!stack.empty()) {
        Node node = std::move(stack.back());
        stack.pop_back();
        if (!propagate_bounds(model.rows, node.lo, node.hi)) continue;

        std::uint64_t product = 1;
        bool small = true;
        for (std::size_t j = 0; j < node.lo.size() && small; ++j) {
            product *= static_cast<std::uint64_t>(node.hi[j] - node.lo[j] + 1);
            if (product > opts.enum_threshold) small = false;
        }
        if (small) {
            Enumerator en(model, node.lo, node.hi);
            en.best = best;
            en.floor_bound = floor_bound;
            en.rec(0);
            if (en.best.status == IlpStatus::optimal &&
                (best.status != IlpStatus::optimal || en.best.objective > best.objective))
                best = en.best;
            continue;
        }

        auto relax = lp_relax<R>(model, node.lo, node.hi);
        if (relax.status != LpStatus::optimal) continue;
        std::int64_t ub = rat_floor<R>(relax.objective);
        if (ub <= bound()) continue;

        std::size_t frac = node.lo.size();
        for (std::size_t j = 0; j < node.lo.size(); ++j)
            if (!rat_is_integer(relax.x[j])) {
                frac = j;
                break;
            }
        if (frac == node.lo.size()) {
            std::vector<dist_t> x(node.lo.size());
            for (std::size_t j = 0; j < x.size(); ++j) x[j] = rat_floor<R>(relax.x[j]);
            if (!rows_satisfied(model, x))
                throw std::logic_error("integral LP optimum violates a model row");
            dist_t v = model.objective.eval(x);
            if (v > bound()) {
                best.status = IlpStatus::optimal;
                best.objective = v;
                best.values = std::move(x);
            }
            continue;
        }
        std::int64_t f = rat_floor<R>(relax.x[frac]);
        Node left = node, right = node;
        left.hi[frac] = std::min(left.hi[frac], static_cast<dist_t>(f));
        right.lo[frac] = std::max(right.lo[frac], static_cast<dist_t>(f + 1));
        if (left.lo[frac] <= left.hi[frac]) stack.push_back(std::move(left));
        if (right.lo[frac] <= right.hi[frac]) stack.push_back(std::move(right));
    }
    return best;
}

}  // namespace

bool lp_feasible(const std::vector<IlpRow>& rows, const std::vector<dist_t>& lo,
                 const std::vector<dist_t>& hi) {
    IlpModel probe;
    for (std::size_t j = 0; j < lo.size(); ++j)
        probe.vars.push_back({"x" + std::to_string(j), lo[j], hi[j]});
    probe.rows = rows;
    probe.objective = LinExpr(lo.size());
    try {
        return lp_relax<Rat64>(probe, lo, hi).status == LpStatus::optimal;
    } catch (const Overflow&) {
        return lp_relax<BigRat>(probe, lo, hi).status == LpStatus::optimal;
    }
}

IlpSolution solve_fixed_dim_ilp(const IlpModel& model, const IlpSolveOptions& opts) {
    const std::size_t n = model.vars.size();
    std::vector<dist_t> lo(n), hi(n);
    for (std::size_t j = 0; j < n; ++j) {
        if (model.vars[j].lo > model.vars[j].hi)
            throw std::invalid_argument("variable " + model.vars[j].name + " has an empty box");
        lo[j] = model.vars[j].lo;
        hi[j] = model.vars[j].hi;
    }
    if (!propagate_bounds(model.rows, lo, hi)) return {};

    std::uint64_t product = 1;
    bool small = true;
    for (std::size_t j = 0; j < n && small; ++j) {
        product *= static_cast<std::uint64_t>(hi[j] - lo[j] + 1);
        if (product > std::min(opts.enum_threshold, opts.enum_hard_cap)) small = false;
    }
    IlpSolution sol;
    if (small) {
        Enumerator en(model, lo, hi);
        if (opts.objective_cutoff) en.floor_bound = *opts.objective_cutoff;
        en.rec(0);
        sol = std::move(en.best);
    } else {
        try {
            sol = branch_and_bound<Rat64>(model, lo, hi, opts);
        } catch (const Overflow&) {
            sol = branch_and_bound<BigRat>(model, lo, hi, opts);
        }
    }
    if (sol.status == IlpStatus::optimal) {
        for (std::size_t j = 0; j < n; ++j)
            if (sol.values[j] < model.vars[j].lo || sol.values[j] > model.vars[j].hi)
                throw std::logic_error("solver left the box of " + model.vars[j].name);
        if (!rows_satisfied(model, sol.values))
            throw std::logic_error("solver returned an infeasible point");
    }
    return sol;
}

}  // namespace hyp
