#include "mopkit/hyperseries.hpp"

#include <algorithm>

#include "mopkit/errors.hpp"

namespace mopkit {

std::vector<Integer> stirling2_row(int k) {
    std::vector<Integer> row(static_cast<size_t>(k) + 1, Integer(0));
    row[0] = 1;
    for (int n = 1; n <= k; ++n) {
        for (int r = n; r >= 1; --r)
            row[static_cast<size_t>(r)] =
                Integer(r * row[static_cast<size_t>(r)] + row[static_cast<size_t>(r - 1)]);
        row[0] = 0;
    }
    return row;
}

Poly upper_pochhammer(const UpperParam& p, int k, VarRole var) {
    if (std::holds_alternative<ComplexRational>(p))
        return Poly(pochhammer(std::get<ComplexRational>(p), k), var);
    if (std::holds_alternative<Poly>(p)) return pochhammer_poly(std::get<Poly>(p), k);
    const auto& pair = std::get<PairedParam>(p);
    Poly acc(ComplexRational(1), var);
    Poly v = Poly::variable(var);
    for (int i = 0; i < k; ++i) {
        ComplexRational qi = (pair.p + ComplexRational(i)) * (pair.q + ComplexRational(i));
        acc *= Poly(qi, var) - v;
    }
    return acc;
}

int termination_bound(const std::vector<UpperParam>& upper) {
    int best = -1;
    for (const auto& u : upper) {
        if (!std::holds_alternative<ComplexRational>(u)) continue;
        const auto& c = std::get<ComplexRational>(u);
        if (!c.is_real() || !is_nonpositive_integer(c.re())) continue;
        long k = -c.re().get_num().get_si();
        if (best < 0 || k < best) best = static_cast<int>(k);
    }
    return best;
}

namespace {
// Lower Pochhammer with the hypergeometric convention: when the running term's
// numerator is already zero the whole term is zero regardless of the lower
// value; otherwise a vanishing lower Pochhammer is an error.
ComplexRational lower_poch_checked(const ComplexRational& c, int k, bool numerator_zero) {
    ComplexRational v = pochhammer(c, k);
    if (v.is_zero() && !numerator_zero)
        throw VanishingLowerPochhammer("(" + to_string(c) + ")_" + std::to_string(k));
    return v;
}
}  // namespace

Poly eval_pfq_terminating(const std::vector<UpperParam>& upper,
                          const std::vector<ComplexRational>& lower, const Poly& z) {
    int bound = termination_bound(upper);
    if (bound < 0)
        throw MopkitError("eval_pfq_terminating: no non-positive-integer upper parameter");
    VarRole var = z.var();
    Poly total(ComplexRational(0), var);
    for (int k = 0; k <= bound; ++k) {
        Poly num(ComplexRational(1), var);
        for (const auto& u : upper) num *= upper_pochhammer(u, k, var);
        bool num_zero = num.is_zero();
        ComplexRational den = factorial(k);
        for (const auto& l : lower) den *= lower_poch_checked(l, k, num_zero);
        if (num_zero) continue;
        Poly zk(ComplexRational(1), var);
        for (int i = 0; i < k; ++i) zk *= z;
        total += num * zk / den;
    }
    return total;
}

void MSeriesSpec::validate() const {
    const int m = n.m();
    if (static_cast<int>(x.size()) != m) throw MopkitError("MSeriesSpec: |x| != m");
    if (g.size() != psi.size()) throw MopkitError("MSeriesSpec: r mismatch between g and psi");
    for (const auto& v : g)
        if (static_cast<int>(v.size()) != m - 1)
            throw MopkitError("MSeriesSpec: g group length != m-1");
    for (const auto& v : psi)
        if (static_cast<int>(v.size()) != m - 1)
            throw MopkitError("MSeriesSpec: psi group length != m-1");
}

Poly eval_M(const MSeriesSpec& spec) {
    spec.validate();
    const int m = spec.n.m();
    const int total_n = spec.n.total();
    const VarRole var = spec.var;

    // |k|-indexed prefactor tables.
    std::vector<Poly> fpoch(static_cast<size_t>(total_n) + 1);
    std::vector<ComplexRational> phipoch(static_cast<size_t>(total_n) + 1);
    for (int K = 0; K <= total_n; ++K) {
        Poly fp(ComplexRational(1), var);
        for (const auto& u : spec.f) fp *= upper_pochhammer(u, K, var);
        fpoch[static_cast<size_t>(K)] = fp;
        ComplexRational pp(1);
        for (const auto& c : spec.phi) pp *= lower_poch_checked(c, K, fp.is_zero());
        phipoch[static_cast<size_t>(K)] = pp;
    }
    // Per-slot r-group tables over the partial-sum index.
    const size_t r = spec.g.size();
    auto poch_table = [&](const ComplexRational& c) {
        std::vector<ComplexRational> tab(static_cast<size_t>(total_n) + 1);
        for (int K = 0; K <= total_n; ++K) tab[static_cast<size_t>(K)] = pochhammer(c, K);
        return tab;
    };
    std::vector<std::vector<std::vector<ComplexRational>>> gtab(r), ptab(r);
    for (size_t i = 0; i < r; ++i) {
        for (int slot = 0; slot + 1 < m; ++slot) {
            gtab[i].push_back(poch_table(spec.g[i][static_cast<size_t>(slot)]));
            ptab[i].push_back(poch_table(spec.psi[i][static_cast<size_t>(slot)]));
        }
    }
    // Per-component factors (-n_j)_{k_j} x_j^{k_j} / k_j!.
    std::vector<std::vector<Poly>> comp(static_cast<size_t>(m));
    for (int j = 0; j < m; ++j) {
        Poly xpow(ComplexRational(1), var);
        for (int kj = 0; kj <= spec.n[j]; ++kj) {
            ComplexRational cr =
                pochhammer(ComplexRational(Rational(-spec.n[j])), kj) / ComplexRational(factorial(kj));
            comp[static_cast<size_t>(j)].push_back(xpow * cr);
            if (kj < spec.n[j]) xpow *= spec.x[static_cast<size_t>(j)];
        }
    }

    Poly total(ComplexRational(0), var);
    std::vector<int> k(static_cast<size_t>(m), 0);
    while (true) {
        int K = std::accumulate(k.begin(), k.end(), 0);
        Poly term = fpoch[static_cast<size_t>(K)];
        if (!term.is_zero()) {
            ComplexRational scalar(1);
            int idx = K;
            bool zero = false;
            for (int slot = 0; slot + 1 < m; ++slot) {
                idx -= k[static_cast<size_t>(slot)];
                for (size_t i = 0; i < r; ++i) {
                    scalar *= gtab[i][static_cast<size_t>(slot)][static_cast<size_t>(idx)];
                    const auto& den = ptab[i][static_cast<size_t>(slot)][static_cast<size_t>(idx)];
                    if (den.is_zero()) {
                        if (scalar.is_zero()) { zero = true; break; }
                        throw VanishingLowerPochhammer("psi group at index " + std::to_string(idx));
                    }
                    scalar /= den;
                }
                if (zero) break;
            }
            if (!zero) {
                term *= scalar / phipoch[static_cast<size_t>(K)];
                for (int j = 0; j < m; ++j)
                    term *= comp[static_cast<size_t>(j)][static_cast<size_t>(k[static_cast<size_t>(j)])];
                total += term;
            }
        }
        int j = 0;
        for (; j < m; ++j) {
            if (k[static_cast<size_t>(j)] < spec.n[j]) {
                ++k[static_cast<size_t>(j)];
                break;
            }
            k[static_cast<size_t>(j)] = 0;
        }
        if (j == m) break;
    }
    return total;
}

namespace {
// Full inner sum of the Kampé series at outer index k.
Poly kampe_inner(const KampeSpec& spec, int k) {
    const VarRole var = spec.var;
    Poly inner(ComplexRational(0), var);
    std::vector<Poly> xpow(static_cast<size_t>(k) + 1, Poly(ComplexRational(1), var));
    std::vector<Poly> ypow(static_cast<size_t>(k) + 1, Poly(ComplexRational(1), var));
    for (int i = 1; i <= k; ++i) {
        xpow[static_cast<size_t>(i)] = xpow[static_cast<size_t>(i - 1)] * spec.x;
        ypow[static_cast<size_t>(i)] = ypow[static_cast<size_t>(i - 1)] * spec.y;
    }
    for (int j = 0; j <= k; ++j) {
        ComplexRational num(1);
        for (const auto& c : spec.g) num *= pochhammer(c, k - j);
        for (const auto& c : spec.h) num *= pochhammer(c, j);
        bool num_zero = num.is_zero();
        ComplexRational den = ComplexRational(factorial(k - j)) * ComplexRational(factorial(j));
        for (const auto& c : spec.psi) den *= lower_poch_checked(c, k - j, num_zero);
        for (const auto& c : spec.xi) den *= lower_poch_checked(c, j, num_zero);
        if (num_zero) continue;
        inner += xpow[static_cast<size_t>(k - j)] * ypow[static_cast<size_t>(j)] * (num / den);
    }
    return inner;
}
}  // namespace

Poly eval_kampe(const KampeSpec& spec) {
    const VarRole var = spec.var;
    int outer_limit;
    if (spec.policy == KampeSpec::Policy::Terminating) {
        int bl = termination_bound(
            std::vector<UpperParam>(spec.g.begin(), spec.g.end()));
        int br = termination_bound(
            std::vector<UpperParam>(spec.h.begin(), spec.h.end()));
        int bf = termination_bound(spec.f);
        if (bl >= 0 && br >= 0)
            outer_limit = bl + br;
        else if (bf >= 0)
            outer_limit = bf;
        else
            throw MopkitError("eval_kampe: series does not terminate");
        if (bf >= 0) outer_limit = std::min(outer_limit, bf);
    } else {
        if (spec.outer_degree < 0 || spec.k_max < spec.outer_degree)
            throw MopkitError("eval_kampe: cancellation policy needs outer_degree and k_max");
        outer_limit = spec.outer_degree;
        for (int k = spec.outer_degree + 1; k <= spec.k_max; ++k) {
            Poly inner = kampe_inner(spec, k);
            if (!inner.is_zero())
                throw CancellationFailure("inner sum nonzero at outer index " + std::to_string(k));
        }
    }
    Poly total(ComplexRational(0), var);
    for (int k = 0; k <= outer_limit; ++k) {
        Poly pre(ComplexRational(1), var);
        for (const auto& u : spec.f) pre *= upper_pochhammer(u, k, var);
        bool pre_zero = pre.is_zero();
        ComplexRational den(1);
        for (const auto& c : spec.phi) den *= lower_poch_checked(c, k, pre_zero);
        if (pre_zero) continue;
        total += pre * kampe_inner(spec, k) / den;
    }
    return total;
}

Poly truncated_product_coeffs(const ComplexRational& beta,
                              const std::function<ComplexRational(int)>& series_coeff,
                              int degree_bound, VarRole var, int zero_tail_through) {
    int top = std::max(degree_bound, zero_tail_through);
    std::vector<ComplexRational> a(static_cast<size_t>(top) + 1);
    for (int k = 0; k <= top; ++k) a[static_cast<size_t>(k)] = series_coeff(k);
    std::vector<ComplexRational> binom(static_cast<size_t>(top) + 1);
    for (int l = 0; l <= top; ++l)
        binom[static_cast<size_t>(l)] = pochhammer(beta, l) / ComplexRational(factorial(l));
    std::vector<ComplexRational> c(static_cast<size_t>(degree_bound) + 1);
    for (int k = 0; k <= top; ++k) {
        ComplexRational ck(0);
        for (int l = 0; l <= k; ++l) ck += binom[static_cast<size_t>(l)] * a[static_cast<size_t>(k - l)];
        if (k <= degree_bound) {
            c[static_cast<size_t>(k)] = ck;
        } else if (!ck.is_zero()) {
            throw CancellationFailure("product coefficient " + std::to_string(k) +
                                      " expected to vanish");
        }
    }
    return Poly::from_coeffs(std::move(c), var);
}

}  // namespace mopkit
