#include "floer/betti.hpp"

#include <mutex>
#include <stdexcept>
#include <utility>

#include "floer/linalg.hpp"

namespace floer {

Int binom(long n, long k) {
    if (k < 0 || k > n || n < 0) return Int(0);
    static std::mutex mutex;
    static std::map<std::pair<long, long>, Int> memo;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = memo.find({n, k});
    if (it != memo.end()) return it->second;
    Int value;
    mpz_bin_uiui(value.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    memo.emplace(std::make_pair(n, k), value);
    return value;
}

int epsilon(int g) { return g % 2 != 0 ? 1 : 0; }

Int s_func(int i, int g) {
    Int total(0);
    for (long k = ((i % 4) + 4) % 4; k < g; k += 4) total += binom(2 * g, k);
    return total;
}

std::vector<Int> poincare_Ng(int g) {
    if (g < 1) throw std::invalid_argument("poincare_Ng: genus must be >= 1");
    const long n = 2 * g;
    // Numerator (1+t^3)^{2g} - t^{2g}(1+t)^{2g}, dense in degrees 0..6g.
    std::vector<Int> num(static_cast<std::size_t>(6 * g + 1), Int(0));
    for (long j = 0; j <= n; ++j) num[static_cast<std::size_t>(3 * j)] += binom(n, j);
    for (long j = 0; j <= n; ++j) num[static_cast<std::size_t>(n + j)] -= binom(n, j);
    // Denominator (1-t^2)(1-t^4) = 1 - t^2 - t^4 + t^6; constant term 1, so
    // divide by the forward recurrence and check the remainder vanishes.
    const int ddeg = 6;
    const long dcoef[7] = {1, 0, -1, 0, -1, 0, 1};
    const std::size_t qlen = static_cast<std::size_t>(6 * g - 6 + 1);
    std::vector<Int> q(qlen, Int(0));
    for (std::size_t i = 0; i < num.size(); ++i) {
        Int acc = num[i];
        for (int j = 1; j <= ddeg && static_cast<std::size_t>(j) <= i; ++j)
            if (dcoef[j] != 0 && i - static_cast<std::size_t>(j) < qlen)
                acc -= dcoef[j] * q[i - static_cast<std::size_t>(j)];
        if (i < qlen) {
            q[i] = acc;
        } else if (acc != 0) {
            throw std::runtime_error("poincare_Ng: division left a remainder");
        }
    }
    return q;
}

std::vector<Int> newstead_h(int g) {
    if (g < 1) throw std::invalid_argument("newstead_h: genus must be >= 1");
    const long top = 6 * g - 3;
    std::vector<Int> h(static_cast<std::size_t>(top + 1), Int(0));
    for (long i = 0; i <= top; ++i) {
        if (i >= 3 * g - 1) {
            h[static_cast<std::size_t>(i)] = h[static_cast<std::size_t>(top - i)];
            continue;
        }
        Int sum(0);
        for (long k = i - 2 * g + 2; k <= i / 3; ++k)
            if ((k - i) % 2 == 0) sum += binom(2 * g, k);
        h[static_cast<std::size_t>(i)] = sum;
    }
    return h;
}

std::array<Int, 4> newstead_mod4_collapse(int g) {
    std::array<Int, 4> c{Int(0), Int(0), Int(0), Int(0)};
    const std::vector<Int> h = newstead_h(g);
    for (std::size_t j = 0; j < h.size(); ++j) c[j % 4] += h[j];
    return c;
}

std::array<Int, 4> critical_betti(int g) {
    std::array<Int, 4> n = newstead_mod4_collapse(g);
    for (Int& x : n) x *= 2;
    return n;
}

namespace {

Rational pow2_rat(long e) {
    if (e >= 0) return Rational(Int(1) << static_cast<unsigned long>(e));
    Rational q(Int(1), Int(1) << static_cast<unsigned long>(-e));
    q.canonicalize();
    return q;
}

Int to_int(const Rational& q) {
    if (q.get_den() != 1) throw std::logic_error("expected an integer value");
    return q.get_num();
}

}  // namespace

FramedBetti framed_betti_closed_form(int g) {
    if (g < 1) throw std::invalid_argument("framed_betti_closed_form: genus must be >= 1");
    const int eps = epsilon(g);
    const Rational central(binom(2 * g, g));
    const Rational s(s_func(1 - eps, g));

    // Mapping cone of u+8: all four graded pieces agree.
    const Int plus_each = to_int(rat(g, 4) * central - pow2_rat(2 * g - 3));
    // Mapping cone of u-8: two pairs in the shifted labels.
    const Int minus_low = to_int(rat(g + 2, 4) * central - s - pow2_rat(g - 2));
    const Int minus_high =
        to_int(rat(g + 2, 4) * central + s - pow2_rat(g - 2) * (1 + pow2_rat(g)));

    FramedBetti b;
    for (int i = 0; i < 4; ++i) b.plus[static_cast<std::size_t>(i)] = plus_each;
    b.minus[static_cast<std::size_t>((0 + eps) % 4)] = minus_low;
    b.minus[static_cast<std::size_t>((1 + eps) % 4)] = minus_low;
    b.minus[static_cast<std::size_t>((2 + eps) % 4)] = minus_high;
    b.minus[static_cast<std::size_t>((3 + eps) % 4)] = minus_high;
    for (std::size_t i = 0; i < 4; ++i) b.total[i] = b.plus[i] + b.minus[i];
    return b;
}

namespace {

Int lambda0_dim(int g, int k) { return binom(2 * g, k) - binom(2 * g, k - 2); }

PoincarePoly assemble(Engine& engine, int g, int sign, bool classical) {
    PoincarePoly acc;
    for (int k = 0; k <= g; ++k) {
        const int m = g - k;
        PoincarePoly km;
        if (classical) {
            km = graded_poincare(engine.groebner(IdealKind::Jclassical, m));
        } else {
            if (sign >= 0) km += graded_poincare(engine.groebner(IdealKind::Jminus, m));
            if (sign <= 0) km += graded_poincare(engine.groebner(IdealKind::Jplus, m));
        }
        acc += lambda0_dim(g, k) * km.shifted(3 * k);
    }
    return acc.cone();
}

}  // namespace

PoincarePoly framed_poincare_assembly(Engine& engine, int g, int sign) {
    if (g < 1) throw std::invalid_argument("framed_poincare_assembly: genus must be >= 1");
    return assemble(engine, g, sign, /*classical=*/false);
}

PoincarePoly classical_assembly(Engine& engine, int g) {
    if (g < 1) throw std::invalid_argument("classical_assembly: genus must be >= 1");
    PoincarePoly acc;
    for (int k = 0; k <= g; ++k)
        acc += lambda0_dim(g, k) *
               graded_poincare(engine.groebner(IdealKind::Jclassical, g - k)).shifted(3 * k);
    return acc.cone();
}

PoincarePoly framed_cone_linear_algebra(Engine& engine, int g, int sign) {
    if (g < 1) throw std::invalid_argument("framed_cone_linear_algebra: genus must be >= 1");
    Polynomial element;
    if (sign > 0)
        element = poly_beta() + poly_const(8);
    else if (sign < 0)
        element = poly_beta() - poly_const(8);
    else
        element = poly_beta() * poly_beta() - poly_const(64);

    PoincarePoly acc;
    for (int k = 0; k <= g; ++k) {
        const int m = g - k;
        if (m == 0) continue;  // J_0 is the unit ideal, zero quotient
        MultOperator op = mult_operator(element, engine.groebner(IdealKind::J, m));
        PoincarePoly ker = kernel_graded_dims(op);
        PoincarePoly coker = cokernel_graded_dims(op);
        acc += lambda0_dim(g, k) * (ker.shifted(3 * k) + coker.shifted(3 * k + 3));
    }
    return acc;
}

InvariantDims invariant_framed_dims(Engine& engine, int g) {
    if (g < 1) throw std::invalid_argument("invariant_framed_dims: genus must be >= 1");
    InvariantDims d;
    d.total_closed_form = Int(g) * (g + 1) + ((g + 2) % 4 == 0 ? 2 : 0);
    d.plus = graded_poincare(engine.groebner(IdealKind::Jminus, g)).cone();
    d.minus = graded_poincare(engine.groebner(IdealKind::Jplus, g)).cone();
    return d;
}

GenusReport build_genus_report(Engine& engine, int g, const ReportOptions& options) {
    GenusReport r;
    r.genus = g;
    r.eps = epsilon(g);
    r.nilpotency_closed_form = 2 * ((g + 1) / 2) - 1;
    if (options.with_nilpotency) {
        r.nilpotency_computed = engine.nilpotency_degree(g);
        r.nilpotency_match = r.nilpotency_computed == r.nilpotency_closed_form;
    }

    const FramedBetti fb = framed_betti_closed_form(g);
    r.framed = fb.total;
    r.framed_plus = fb.plus;
    r.framed_minus = fb.minus;
    r.framed_paths = {"closed_form"};
    r.critical = critical_betti(g);
    r.newstead = newstead_h(g);

    r.framed_total = Int(0);
    r.critical_total = Int(0);
    for (int i = 0; i < 4; ++i) {
        r.framed_total += r.framed[static_cast<std::size_t>(i)];
        r.critical_total += r.critical[static_cast<std::size_t>(i)];
    }
    r.invariant_total = invariant_framed_dims(engine, g).total_closed_form;

    auto matches = [&](const PoincarePoly& p) {
        for (int i = 0; i < 4; ++i)
            if (p[i] != r.framed[static_cast<std::size_t>(i)]) return false;
        return true;
    };
    if (options.with_assembly) {
        r.framed_paths.push_back("assembly");
        if (!matches(framed_poincare_assembly(engine, g, 0))) r.paths_agree = false;
    }
    if (options.with_cone) {
        r.framed_paths.push_back("linear_algebra");
        if (!matches(framed_cone_linear_algebra(engine, g, 0))) r.paths_agree = false;
    }
    return r;
}

}  // namespace floer
