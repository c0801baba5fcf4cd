#include "mtv/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

#include "mtv/gaussian.hpp"

namespace mtv {

namespace {

constexpr mpfr_prec_t kGuard = 64;

// ---------------------------------------------------------------- complex

struct Cplx {
    BigReal re;
    BigReal im;

    explicit Cplx(mpfr_prec_t W) : re(0, W), im(0, W) {}
    Cplx(BigReal r, BigReal i) : re(std::move(r)), im(std::move(i)) {}

    BigReal mag() const { return re.abs() + im.abs(); }
};

// z * i^t for t in 0..3
Cplx rotated(const Cplx& z, int t) {
    switch (t & 3) {
        case 0: return z;
        case 1: return {-z.im, z.re};
        case 2: return {-z.re, -z.im};
        default: return {z.im, -z.re};
    }
}

// ------------------------------------------------- exact tail expansions
//
// Tails of sum_{j>M} chi^j j^{-s} as polynomials in 1/M with exact
// coefficients, chi = i^p.  Derived from the first-difference equation
// W(M-1) - W(M) = chi^M M^{-s}:
//   chi = 1:  W(M) = sum_t d_t M^{-t},  d_{s-1} = 1/(s-1),
//             d_{v-1} = -(sum_{t<v-1} d_t binom(v-1, v-t)) / (v-1)
//   chi != 1: W(M) = chi^M sum_t c_t M^{-t},  c_s = chi/(1-chi),
//             c_v = -(sum_{t<v} c_t binom(v-1, v-t)) / (1-chi)

using Poly = std::vector<GaussianRational>;  // index = power of 1/M, size R+1

std::vector<Rational> make_smooth_tail(int s, int R) {
    std::vector<Rational> d(static_cast<size_t>(R) + 1);
    if (s - 1 <= R) d[static_cast<size_t>(s - 1)] = Rational(1) / Rational(s - 1);
    for (int v = s + 1; v - 1 <= R; ++v) {
        Rational acc(0);
        for (int t = s - 1; t <= v - 2; ++t)
            acc += d[static_cast<size_t>(t)] * binomial(v - 1, v - t);
        d[static_cast<size_t>(v - 1)] = -acc / Rational(v - 1);
    }
    return d;
}

Poly make_rotating_tail(int p, int s, int R) {
    GaussianRational chi = GaussianRational::i_pow(p);
    GaussianRational one_minus_chi = GaussianRational(Rational(1)) - chi;
    Poly c(static_cast<size_t>(R) + 1);
    if (s <= R) c[static_cast<size_t>(s)] = chi / one_minus_chi;
    for (int v = s + 1; v <= R; ++v) {
        GaussianRational acc;
        for (int t = s; t <= v - 1; ++t)
            acc += c[static_cast<size_t>(t)] * GaussianRational(binomial(v - 1, v - t));
        c[static_cast<size_t>(v)] = -acc / one_minus_chi;
    }
    return c;
}

const std::vector<Rational>& smooth_tail_poly(int s, int R) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::vector<Rational>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(s, R);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, make_smooth_tail(s, R)).first;
    return it->second;
}

const Poly& rotating_tail_poly(int p, int s, int R) {
    static std::mutex mu;
    static std::map<std::tuple<int, int, int>, Poly> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(p, s, R);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, make_rotating_tail(p, s, R)).first;
    return it->second;
}

// U(M) = sum_p i^(pM) comp[p](1/M); empty polynomial components stay empty.
struct TailExpansion {
    int R = 0;
    std::array<Poly, 4> comp;

    static TailExpansion base(int R) {
        TailExpansion u;
        u.R = R;
        u.comp[0].assign(static_cast<size_t>(R) + 1, GaussianRational());
        u.comp[0][0] = GaussianRational(Rational(1));
        return u;
    }
};

enum class DenomForm { OddInteger, Integer };

struct Letter {
    int k;        // exponent, >= 1
    int chi_pow;  // sign character as a power of i
};

// Expansion of denom(j)^{-k} * poly(1/j) as coefficients of j^{-s}, s <= R.
Poly expand_term(const Poly& poly, int k, DenomForm form, int R) {
    Poly c(static_cast<size_t>(R) + 1);
    for (int t = 0; t <= R; ++t) {
        const auto& pt = poly[static_cast<size_t>(t)];
        if (pt.is_zero()) continue;
        if (form == DenomForm::Integer) {
            if (k + t <= R) c[static_cast<size_t>(k + t)] += pt;
        } else {
            // (2j-1)^{-k} = sum_i binom(k-1+i, i) 2^{-k-i} j^{-k-i}
            for (int i = 0; k + i + t <= R; ++i) {
                Rational w = binomial(k - 1 + i, i) / Rational(2).pow(k + i);
                c[static_cast<size_t>(k + i + t)] += pt * GaussianRational(w);
            }
        }
    }
    return c;
}

// One more (inner) letter: U_new(M) = sum_{j>M} chi^j denom(j)^{-k} U_old(j).
TailExpansion tail_prepend(const TailExpansion& inner, const Letter& l, DenomForm form) {
    const int R = inner.R;
    TailExpansion out;
    out.R = R;
    for (int p = 0; p < 4; ++p) {
        if (inner.comp[static_cast<size_t>(p)].empty()) continue;
        Poly c = expand_term(inner.comp[static_cast<size_t>(p)], l.k, form, R);
        int pout = (p + l.chi_pow) & 3;
        auto& dst = out.comp[static_cast<size_t>(pout)];
        if (dst.empty()) dst.assign(static_cast<size_t>(R) + 1, GaussianRational());
        if (pout == 0) {
            if (!c[0].is_zero() || !c[1].is_zero())
                throw std::logic_error("tail_prepend: divergent smooth component");
            for (int s = 2; s <= R; ++s) {
                if (c[static_cast<size_t>(s)].is_zero()) continue;
                const auto& d = smooth_tail_poly(s, R);
                for (int t = s - 1; t <= R; ++t)
                    dst[static_cast<size_t>(t)] +=
                        c[static_cast<size_t>(s)] * GaussianRational(d[static_cast<size_t>(t)]);
            }
        } else {
            if (!c[0].is_zero())
                throw std::logic_error("tail_prepend: divergent rotating component");
            for (int s = 1; s <= R; ++s) {
                if (c[static_cast<size_t>(s)].is_zero()) continue;
                const auto& d = rotating_tail_poly(pout, s, R);
                for (int t = s; t <= R; ++t)
                    dst[static_cast<size_t>(t)] += c[static_cast<size_t>(s)] * d[static_cast<size_t>(t)];
            }
        }
    }
    return out;
}

Cplx tail_eval(const TailExpansion& u, long M, mpfr_prec_t W) {
    Cplx acc(W);
    BigReal invM = BigReal(1, W) / BigReal(M, W);
    for (int p = 0; p < 4; ++p) {
        const auto& poly = u.comp[static_cast<size_t>(p)];
        if (poly.empty()) continue;
        // Horner over 1/M, separately for re and im
        BigReal re(0, W), im(0, W);
        for (int t = u.R; t >= 0; --t) {
            re = re * invM + BigReal(poly[static_cast<size_t>(t)].re, W);
            im = im * invM + BigReal(poly[static_cast<size_t>(t)].im, W);
        }
        int rot = static_cast<int>((static_cast<long>(p) * (M % 4)) & 3);
        acc.re += rotated(Cplx(re, im), rot).re;
        acc.im += rotated(Cplx(re, im), rot).im;
    }
    return acc;
}

// Estimate of the first omitted order: |c_R| (R+4) / M^(R+1).
BigReal tail_error_estimate(const TailExpansion& u, long M) {
    const mpfr_prec_t w = 96;
    BigReal top(0, w);
    for (int p = 0; p < 4; ++p) {
        const auto& poly = u.comp[static_cast<size_t>(p)];
        if (poly.empty()) continue;
        BigReal mag = BigReal(poly[static_cast<size_t>(u.R)].re.abs(), w) +
                      BigReal(poly[static_cast<size_t>(u.R)].im.abs(), w);
        if (mag > top) top = mag;
    }
    return top * BigReal(u.R + 4, w) / BigReal(M, w).pow_si(u.R + 1);
}

BigReal denom_value(long m, int k, DenomForm form, mpfr_prec_t W) {
    long base = form == DenomForm::OddInteger ? 2 * m - 1 : m;
    return BigReal(base, W).pow_si(-k);
}

ComplexResult nested_sum_tail(const std::vector<Letter>& letters, DenomForm form,
                              const SumPlan& plan, mpfr_prec_t P) {
    const mpfr_prec_t W = P + kGuard;
    const size_t d = letters.size();
    const long M = std::max<long>(plan.truncation, 4l * plan.tail_order);
    const int R = plan.tail_order;

    // suffix tails: suffix[j] covers letters j..d (1-based), suffix[d+1] = 1
    std::vector<TailExpansion> suffix(d + 2);
    suffix[d + 1] = TailExpansion::base(R);
    for (size_t j = d; j >= 1; --j)
        suffix[j] = tail_prepend(suffix[j + 1], letters[j - 1], form);

    // prefix partial sums T_j = sum over chains of the first j letters <= M
    std::vector<Cplx> T(d + 1, Cplx(W));
    T[0].re = BigReal(1, W);
    for (long m = 1; m <= M; ++m) {
        long mmod = m & 3;
        for (size_t j = d; j >= 1; --j) {
            const Letter& l = letters[j - 1];
            BigReal a = denom_value(m, l.k, form, W);
            Cplx contrib = rotated(T[j - 1], static_cast<int>((l.chi_pow * mmod) & 3));
            T[j].re += contrib.re * a;
            T[j].im += contrib.im * a;
        }
    }

    Cplx total = T[d];
    BigReal tail_err(0, 96);
    for (size_t j = 0; j < d; ++j) {
        Cplx u = tail_eval(suffix[j + 1], M, W);
        Cplx prod{T[j].re * u.re - T[j].im * u.im, T[j].re * u.im + T[j].im * u.re};
        total.re += prod.re;
        total.im += prod.im;
        tail_err += T[j].mag().round_to(96) * tail_error_estimate(suffix[j + 1], M);
    }
    // rounding slack for ~3dM guarded operations
    BigReal scale = total.mag() + BigReal(1, 96);
    BigReal err = tail_err + BigReal(3 * static_cast<long>(d) * M + 64l * R, 96) *
                                 scale.round_to(96) *
                                 BigReal(1, 96).mul_2exp(-static_cast<long>(W) + 2);

    if (plan.enforce_tolerance && err > BigReal::from_double(plan.tolerance, 96)) {
        std::ostringstream os;
        os << "nested sum: tolerance " << plan.tolerance << " not reached; achieved bound "
           << err.str(3);
        throw ToleranceError(os.str(), err.to_double());
    }
    return {total.re.round_to(P), total.im.round_to(P), err, tail_err, M};
}

std::vector<Letter> word_letters(const TWord& w) {
    std::vector<Letter> letters;
    letters.reserve(w.depth());
    for (const auto& e : w.entries()) letters.push_back({e.k, e.sign > 0 ? 0 : 2});
    return letters;
}

// Plain truncation with an outer tail bound; iterated averaging on the
// outermost partial sums when requested and the outermost sign alternates.
OracleResult t_num_plain(const TWord& w, const SumPlan& plan, mpfr_prec_t P, bool averaging) {
    const mpfr_prec_t W = P + kGuard;
    const auto letters = word_letters(w);
    const size_t d = letters.size();
    const long M = plan.truncation;
    const bool alternating = letters[d - 1].chi_pow == 2;
    const int k_out = letters[d - 1].k;

    long K = averaging && alternating
                 ? std::min<long>({64, M / 4, static_cast<long>(std::log2(1.0 / plan.tolerance)) + 4})
                 : 0;

    std::vector<BigReal> T(d + 1, BigReal(0, W));
    T[0] = BigReal(1, W);
    BigReal max_inner(0, W);
    std::vector<BigReal> window;  // last K+1 outer partial sums
    for (long m = 1; m <= M; ++m) {
        for (size_t j = d; j >= 1; --j) {
            const Letter& l = letters[j - 1];
            BigReal a = denom_value(m, l.k, DenomForm::OddInteger, W);
            if (l.chi_pow == 2 && (m & 1)) a = -a;
            T[j] += a * T[j - 1];
        }
        if (T[d - 1].abs() > max_inner) max_inner = T[d - 1].abs();
        if (K > 0 && m > M - K - 1) window.push_back(T[d]);
    }

    BigReal value = T[d];
    BigReal bound(0, W);
    if (K > 0) {
        BigReal prev_pass = window[0];
        BigReal last_change(0, W);
        for (long pass = 0; pass < K && window.size() > 1; ++pass) {
            for (size_t i = 0; i + 1 < window.size(); ++i)
                window[i] = (window[i] + window[i + 1]) / BigReal(2, W);
            window.pop_back();
            last_change = (window[0] - prev_pass).abs();
            prev_pass = window[0];
        }
        value = window[0];
        bound = BigReal(8, W) * last_change;
        // smooth (non-oscillating) leakage of inner tails; absent at depth 1,
        // measured ~ max|T|/(8M) at depth 2
        if (d >= 2) bound += BigReal(2, W) * max_inner / BigReal(M, W);
    } else if (alternating) {
        bound = max_inner * BigReal(2, W) / BigReal(2 * M - 1, W).pow_si(k_out);
    } else {
        // integral tail, requires k_out >= 2
        bound = max_inner * BigReal(2 * M - 1, W).pow_si(1 - k_out) /
                BigReal(2 * (k_out - 1), W);
        bound += bound;  // slack for slowly growing inner sums
    }

    if (plan.enforce_tolerance && bound > BigReal::from_double(plan.tolerance, W)) {
        std::ostringstream os;
        os << "t_num: tolerance " << plan.tolerance << " not reached; achieved bound "
           << bound.str(3);
        throw ToleranceError(os.str(), bound.to_double());
    }
    return {value.round_to(P), bound.round_to(96), bound.round_to(96), M};
}

}  // namespace

OracleResult t_num(const TWord& w, const SumPlan& plan, mpfr_prec_t P) {
    if (!w.admissible())
        throw std::domain_error("t_num: word " + w.str() + " is inadmissible; regularise first");
    if (w.empty()) return {BigReal(1, P), BigReal(0, 96), BigReal(0, 96), 0};

    if (plan.accel == SumPlan::Accel::TailExpansion) {
        auto r = nested_sum_tail(word_letters(w), DenomForm::OddInteger, plan, P);
        return {r.re, r.error_bound, r.tail_bound, r.terms_used};
    }
    return t_num_plain(w, plan, P, plan.accel == SumPlan::Accel::IteratedMean);
}

ComplexResult mzv4_num(const Mzv4Index& idx, const SumPlan& plan, mpfr_prec_t P) {
    if (idx.ipows.size() != idx.ks.size())
        throw std::invalid_argument("mzv4_num: index size mismatch");
    if (!idx.admissible()) throw std::domain_error("mzv4_num: divergent index " + idx.str());
    if (idx.ks.empty())
        return {BigReal(1, P), BigReal(0, P), BigReal(0, 96), BigReal(0, 96), 0};
    std::vector<Letter> letters;
    letters.reserve(idx.ks.size());
    for (size_t i = 0; i < idx.ks.size(); ++i)
        letters.push_back({idx.ks[i], ((idx.ipows[i] % 4) + 4) % 4});
    return nested_sum_tail(letters, DenomForm::Integer, plan, P);
}

OracleResult ti_num(const std::vector<int>& ks, const std::vector<BigReal>& zs,
                    const SumPlan& plan, mpfr_prec_t P) {
    if (ks.size() != zs.size() || ks.empty())
        throw std::invalid_argument("ti_num: argument size mismatch");
    const size_t d = ks.size();
    const mpfr_prec_t W = P + kGuard;
    const BigReal one(1, W);
    for (const auto& z : zs)
        if (z.abs() > one) throw std::domain_error("ti_num: |z| <= 1 required");

    const BigReal z_out = zs[d - 1].round_to(W);
    const bool out_unit_pos = z_out == one;
    const bool out_unit_neg = z_out == -one;
    if (out_unit_pos && ks[d - 1] == 1)
        throw std::domain_error("ti_num: divergent outermost pair (k=1, z=1)");

    const long M = plan.truncation;
    long K = out_unit_neg
                 ? std::min<long>({64, M / 4, static_cast<long>(std::log2(1.0 / plan.tolerance)) + 4})
                 : 0;

    std::vector<BigReal> T(d + 1, BigReal(0, W));
    T[0] = BigReal(1, W);
    std::vector<BigReal> zpow(d, BigReal(1, W));
    BigReal max_inner(0, W);
    std::vector<BigReal> window;
    long used = M;
    const BigReal tau = BigReal::from_double(plan.tolerance, W);
    BigReal geo_bound(0, W);
    for (long m = 1; m <= M; ++m) {
        for (size_t j = d; j >= 1; --j) {
            zpow[j - 1] *= zs[j - 1].round_to(W);
            BigReal a = zpow[j - 1] / BigReal(2 * m - 1, W).pow_si(ks[j - 1]);
            T[j] += a * T[j - 1];
        }
        if (T[d - 1].abs() > max_inner) max_inner = T[d - 1].abs();
        if (K > 0 && m > M - K - 1) window.push_back(T[d]);
        if (!out_unit_pos && !out_unit_neg && (m & 1023) == 0) {
            // geometric tail: |T_{d-1}| |z|^m+1... / ((1-|z|)(2m+1)^k)
            BigReal q = z_out.abs();
            geo_bound = (max_inner + one) * q.pow_si(m + 1) /
                        ((one - q) * BigReal(2 * m + 1, W).pow_si(ks[d - 1]));
            if (geo_bound < tau / BigReal(4, W)) {
                used = m;
                break;
            }
        }
    }

    BigReal value = T[d];
    BigReal bound(0, W);
    if (K > 0) {
        BigReal prev_pass = window[0];
        BigReal last_change(0, W);
        for (long pass = 0; pass < K && window.size() > 1; ++pass) {
            for (size_t i = 0; i + 1 < window.size(); ++i)
                window[i] = (window[i] + window[i + 1]) / BigReal(2, W);
            window.pop_back();
            last_change = (window[0] - prev_pass).abs();
            prev_pass = window[0];
        }
        value = window[0];
        bound = BigReal(8, W) * last_change;
        if (d >= 2) bound += BigReal(2, W) * max_inner / BigReal(M, W);
    } else if (out_unit_pos) {
        int k = ks[d - 1];
        bound = BigReal(2, W) * max_inner * BigReal(2 * M - 1, W).pow_si(1 - k) /
                BigReal(2 * (k - 1), W);
    } else {
        BigReal q = z_out.abs();
        bound = (max_inner + one) * q.pow_si(used + 1) /
                ((one - q) * BigReal(2 * used + 1, W).pow_si(ks[d - 1]));
    }

    if (plan.enforce_tolerance && bound > tau) {
        std::ostringstream os;
        os << "ti_num: tolerance " << plan.tolerance << " not reached; achieved bound "
           << bound.str(3);
        throw ToleranceError(os.str(), bound.to_double());
    }
    return {value.round_to(P), bound.round_to(96), bound.round_to(96), used};
}

OracleResult g_num(const BigReal& x, const BigReal& y, const BigReal& z,
                   const SumPlan& plan, mpfr_prec_t P, GComponent comp) {
    const mpfr_prec_t W = P + kGuard;
    const BigReal one(1, W);
    if (!(z > BigReal(0, W)) || !(z < one))
        throw std::domain_error("g_num: z in (0,1) required");
    if (x.abs() >= BigReal(3, W) || y.abs() >= BigReal(3, W))
        throw std::domain_error("g_num: |x|, |y| < 3 required");

    const BigReal xx = x.round_to(W), yy = y.round_to(W), zz = z.round_to(W);
    // prefactor cos(pi y/4) + sin(pi y/4)
    BigReal arg = BigReal::pi(W) * yy / BigReal(4, W);
    BigReal pre = arg.cos() + arg.sin();

    BigReal px(1, W);  // prod_{0<k<r} (1 - (-1)^k x/(2k-1)), updated incrementally
    BigReal qy(1, W);  // prod_{0<l<=r} (1 - (-1)^l y/(2l-1))^{-1}
    BigReal zr(1, W);  // z^r
    BigReal acc(0, W);
    BigReal max_px(1, W), max_qy(1, W);
    const BigReal tau = BigReal::from_double(plan.tolerance, W);
    long used = plan.truncation;
    for (long r = 1; r <= plan.truncation; ++r) {
        // qy gains the l = r factor, px gained the k = r-1 factor last round
        BigReal sgn_r = (r & 1) ? BigReal(-1, W) : BigReal(1, W);
        qy /= one - sgn_r * yy / BigReal(2 * r - 1, W);
        zr *= zz;
        if (qy.abs() > max_qy) max_qy = qy.abs();
        bool take = comp == GComponent::All || ((r & 1) == 1) == (comp == GComponent::OddR);
        if (take) acc += px * qy * zr / BigReal(2 * r - 1, W);
        px *= one - sgn_r * xx / BigReal(2 * r - 1, W);
        if (px.abs() > max_px) max_px = px.abs();
        if ((r & 255) == 0) {
            BigReal tail = max_px * max_qy * zr * zz / ((one - zz) * BigReal(2 * r + 1, W));
            if (tail < tau / BigReal(4, W)) {
                used = r;
                break;
            }
        }
    }
    BigReal tail = max_px * max_qy * zr * zz / ((one - zz) * BigReal(2 * used + 1, W));
    BigReal value = pre * acc;
    BigReal bound = tail * pre.abs() + BigReal(4 * used, W) * value.abs().mul_2exp(-static_cast<long>(W) + 2);
    if (plan.enforce_tolerance && bound > tau) {
        std::ostringstream os;
        os << "g_num: tolerance " << plan.tolerance << " not reached; achieved bound "
           << bound.str(3);
        throw ToleranceError(os.str(), bound.to_double());
    }
    return {value.round_to(P), bound.round_to(96), bound.round_to(96), used};
}

}  // namespace mtv
