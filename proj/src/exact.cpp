#include "chords/exact.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace chords {
namespace {

long long triangular(long long j) { return j * (j + 1) / 2; }  // J(j)

long long max_crossings(int n) { return static_cast<long long>(n) * (n - 1) / 2; }

// 2D polynomial in (y, x), coeff[ydeg][xdeg], truncated to the given degrees.
using Poly2 = std::vector<std::vector<mpz_class>>;

Poly2 poly2_zero(int ymax, int xmax) {
    return Poly2(static_cast<size_t>(ymax) + 1,
                 std::vector<mpz_class>(static_cast<size_t>(xmax) + 1, 0));
}

Poly2 poly2_mul(const Poly2& a, const Poly2& b, int ymax, int xmax) {
    Poly2 out = poly2_zero(ymax, xmax);
    for (size_t ya = 0; ya < a.size(); ++ya)
        for (size_t yb = 0; yb < b.size(); ++yb) {
            if (static_cast<int>(ya + yb) > ymax) break;
            auto& row = out[ya + yb];
            for (size_t xa = 0; xa < a[ya].size(); ++xa) {
                if (a[ya][xa] == 0) continue;
                for (size_t xb = 0; xb < b[yb].size(); ++xb) {
                    if (static_cast<int>(xa + xb) > xmax) break;
                    row[xa + xb] += a[ya][xa] * b[yb][xb];
                }
            }
        }
    return out;
}

}  // namespace

mpz_class CrossingRow::sum() const {
    mpz_class s = 0;
    for (const auto& c : counts) s += c;
    return s;
}

int BlockProfile::block_count() const {
    int k = 0;
    for (size_t j = 1; j < s.size(); ++j) k += s[j];
    return k;
}

int BlockProfile::chord_count() const {
    int n = 0;
    for (size_t j = 1; j < s.size(); ++j) n += static_cast<int>(j) * s[j];
    return n;
}

mpz_class catalan(int n) {
    if (n < 0) throw std::domain_error("catalan: n < 0");
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), 2 * static_cast<unsigned long>(n), static_cast<unsigned long>(n));
    return b / (n + 1);
}

mpz_class total_diagrams(int n) {
    if (n < 0) throw std::domain_error("total_diagrams: n < 0");
    mpz_class p = 1;
    for (int k = 1; k <= n; ++k) p *= 2 * k - 1;
    return p;
}

mpz_class touchard_riordan(int n, long long m) {
    if (n < 1) throw std::domain_error("touchard_riordan: n < 1");
    if (m < 0 || m > max_crossings(n)) return 0;

    // binom(n+m-1-J(j), n-1), updated incrementally as J(j) grows
    mpz_class binom_nm;
    mpz_bin_uiui(binom_nm.get_mpz_t(), static_cast<unsigned long>(n + m - 1),
                 static_cast<unsigned long>(n - 1));
    // binom(2n, n-j), updated incrementally in j
    mpz_class binom_2n;
    mpz_bin_uiui(binom_2n.get_mpz_t(), 2 * static_cast<unsigned long>(n),
                 static_cast<unsigned long>(n));

    mpz_class sum = 0;
    long long top = n + m - 1;  // current upper index of binom_nm
    for (long long j = 0; j <= n && triangular(j) <= m; ++j) {
        if (j > 0) {
            // C(a - d, n-1) from C(a, n-1), d = j new units of J
            for (long long d = 0; d < j; ++d) {
                binom_nm *= static_cast<long>(top - (n - 1));
                binom_nm /= static_cast<long>(top);
                --top;
            }
            // C(2n, n-j) from C(2n, n-j+1)
            binom_2n *= static_cast<long>(n - j + 1);
            binom_2n /= static_cast<long>(n + j);
        }
        mpz_class term = binom_nm * binom_2n * static_cast<long>(2 * j + 1);
        mpz_class q;
        mpz_divexact_ui(q.get_mpz_t(), term.get_mpz_t(), static_cast<unsigned long>(n + j + 1));
        if (j % 2 == 0)
            sum += q;
        else
            sum -= q;
    }
    return sum;
}

CrossingRow crossing_row(int n) {
    if (n < 1) throw std::domain_error("crossing_row: n < 1");
    const long long mmax = max_crossings(n);
    CrossingRow row;
    row.n = n;
    row.counts.assign(static_cast<size_t>(mmax) + 1, 0);

    for (long long j = 0; j <= n && triangular(j) <= mmax; ++j) {
        // c_j = (2j+1) binom(2n, n-j) / (n+j+1)
        mpz_class binom_2n;
        mpz_bin_uiui(binom_2n.get_mpz_t(), 2 * static_cast<unsigned long>(n),
                     static_cast<unsigned long>(n - j));
        mpz_class cj = binom_2n * static_cast<long>(2 * j + 1);
        mpz_class coeff;
        mpz_divexact_ui(coeff.get_mpz_t(), cj.get_mpz_t(), static_cast<unsigned long>(n + j + 1));
        if (j % 2 == 1) coeff = -coeff;

        // add c_j * x^{J(j)} / (1-x)^n: binom(n-1+t, n-1) at offset J(j)+t
        mpz_class binom = 1;  // binom(n-1+t, n-1), t = 0
        for (long long t = 0; triangular(j) + t <= mmax; ++t) {
            if (t > 0) {
                binom *= static_cast<long>(n - 1 + t);
                binom /= static_cast<long>(t);
            }
            row.counts[static_cast<size_t>(triangular(j) + t)] += coeff * binom;
        }
    }
    return row;
}

mpz_class power_coefficient(int n, long long m, int l) {
    if (n < 0 || m < 0 || l < 1) throw std::domain_error("power_coefficient: bad arguments");
    if (n == 0) return m == 0 ? 1 : 0;

    // W[t][j] = signed count of l-tuples (j_1..j_l) with sum J(j_i) = t, sum j_i = j
    std::vector<std::vector<mpz_class>> w(
        static_cast<size_t>(m) + 1, std::vector<mpz_class>(static_cast<size_t>(n) + 1, 0));
    w[0][0] = 1;
    for (int step = 0; step < l; ++step) {
        auto next = std::vector<std::vector<mpz_class>>(
            static_cast<size_t>(m) + 1, std::vector<mpz_class>(static_cast<size_t>(n) + 1, 0));
        for (long long t = 0; t <= m; ++t)
            for (int j = 0; j <= n; ++j) {
                if (w[static_cast<size_t>(t)][static_cast<size_t>(j)] == 0) continue;
                for (long long k = 0; triangular(k) + t <= m && j + k <= n; ++k) {
                    auto& slot = next[static_cast<size_t>(t + triangular(k))]
                                     [static_cast<size_t>(j + k)];
                    if (k % 2 == 0)
                        slot += w[static_cast<size_t>(t)][static_cast<size_t>(j)];
                    else
                        slot -= w[static_cast<size_t>(t)][static_cast<size_t>(j)];
                }
            }
        w.swap(next);
    }

    mpq_class sum = 0;
    for (long long t = 0; t <= m; ++t)
        for (int j = 0; j <= n; ++j) {
            const mpz_class& weight = w[static_cast<size_t>(t)][static_cast<size_t>(j)];
            if (weight == 0) continue;
            mpz_class b1, b2;
            mpz_bin_uiui(b1.get_mpz_t(), static_cast<unsigned long>(n + m - 1 - t),
                         static_cast<unsigned long>(n - 1));
            mpz_bin_uiui(b2.get_mpz_t(), static_cast<unsigned long>(2 * n + l),
                         static_cast<unsigned long>(n - j));
            sum += mpq_class(weight * b1 * b2 * (2 * j + l), 2 * n + l);
        }
    sum.canonicalize();
    if (sum.get_den() != 1)
        throw std::logic_error("power_coefficient: non-integer result");
    return sum.get_num();
}

std::vector<mpz_class> inversion_row(int n, long long m_max) {
    if (n < 1) throw std::domain_error("inversion_row: n < 1");
    std::vector<mpz_class> row(static_cast<size_t>(m_max) + 1, 0);
    row[0] = 1;
    for (int j = 2; j <= n; ++j) {
        // multiply by 1 + z + ... + z^{j-1}: sliding-window prefix sums
        std::vector<mpz_class> prefix(row.size() + 1, 0);
        for (size_t t = 0; t < row.size(); ++t) prefix[t + 1] = prefix[t] + row[t];
        for (size_t t = 0; t < row.size(); ++t) {
            size_t lo = t + 1 >= static_cast<size_t>(j) ? t + 1 - static_cast<size_t>(j) : 0;
            row[t] = prefix[t + 1] - prefix[lo];
        }
    }
    return row;
}

mpz_class inversion_count(int n, long long m) {
    if (m < 0 || m > max_crossings(n)) return 0;
    return inversion_row(n, m)[static_cast<size_t>(m)];
}

mpz_class dp_count(int n, long long m) {
    if (n < 1) throw std::domain_error("dp_count: n < 1");
    if (m < 0 || m > max_crossings(n)) throw std::domain_error("dp_count: m outside [0, n(n-1)/2]");

    // f_j(s, c): Catalan prefix S_j = s, crossings used c.  Each layer via two
    // cumulative passes: a window sum over c (choice of x_j) and a prefix sum
    // over s (choice of y_j).
    const size_t width = static_cast<size_t>(m) + 1;
    std::vector<mpz_class> layer(width, 0);  // f_0: only s = 0
    layer[0] = 1;
    std::vector<std::vector<mpz_class>> f = {layer};  // f[s][c]

    for (int j = 1; j <= n; ++j) {
        std::vector<std::vector<mpz_class>> g(static_cast<size_t>(j) + 1,
                                              std::vector<mpz_class>(width, 0));
        for (int s = 0; s < j && s < static_cast<int>(f.size()); ++s) {
            // window of width j - s over c
            std::vector<mpz_class> prefix(width + 1, 0);
            for (size_t c = 0; c < width; ++c) prefix[c + 1] = prefix[c] + f[static_cast<size_t>(s)][c];
            for (size_t c = 0; c < width; ++c) {
                size_t lo = c + 1 >= static_cast<size_t>(j - s) ? c + 1 - static_cast<size_t>(j - s) : 0;
                g[static_cast<size_t>(s)][c] = prefix[c + 1] - prefix[lo];
            }
        }
        // prefix over s
        for (int s = 1; s <= j; ++s)
            for (size_t c = 0; c < width; ++c)
                g[static_cast<size_t>(s)][c] += g[static_cast<size_t>(s - 1)][c];
        f.swap(g);
    }
    return f[static_cast<size_t>(n)][static_cast<size_t>(m)];
}

void for_each_matching(int n, const std::function<void(const ChordDiagram&)>& fn) {
    std::vector<int> partner(static_cast<size_t>(2 * n), -1);
    // depth-first: always pair the smallest unmatched point
    std::function<void()> rec = [&]() {
        int i = 0;
        while (i < 2 * n && partner[static_cast<size_t>(i)] >= 0) ++i;
        if (i == 2 * n) {
            fn(ChordDiagram::from_partner(partner));
            return;
        }
        for (int j = i + 1; j < 2 * n; ++j) {
            if (partner[static_cast<size_t>(j)] >= 0) continue;
            partner[static_cast<size_t>(i)] = j;
            partner[static_cast<size_t>(j)] = i;
            rec();
            partner[static_cast<size_t>(i)] = -1;
            partner[static_cast<size_t>(j)] = -1;
        }
    };
    rec();
}

CrossingRow brute_force_row(int n) {
    if (n < 1 || n > 9) throw std::domain_error("brute_force_row: n must be in [1, 9]");
    CrossingRow row;
    row.n = n;
    row.counts.assign(static_cast<size_t>(max_crossings(n)) + 1, 0);
    for_each_matching(n, [&](const ChordDiagram& d) {
        row.counts[static_cast<size_t>(crossing_count_naive(d))] += 1;
    });
    return row;
}

mpz_class connected_count_exact(int nu, int mu) {
    if (nu >= 1 && mu == nu - 1) {
        // trees: binom(3 nu - 3, nu - 1) / (2 nu - 1)
        mpz_class b;
        mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(3 * nu - 3),
                     static_cast<unsigned long>(nu - 1));
        mpq_class q(b, 2 * nu - 1);
        q.canonicalize();
        if (q.get_den() != 1) throw std::logic_error("tree count not integral");
        return q.get_num();
    }
    if (mu == nu) {
        if (nu == 3) return 1;  // the formula divides by nu - 3
        if (nu < 4)
            throw std::domain_error(
                "connected_count_exact: C(nu,nu) needs nu >= 4 or nu = 3; use brute_force_connected");
        mpq_class total = 2;
        for (int j = 1; j <= std::min(6, nu - 3); ++j) {
            mpz_class b6, b3;
            mpz_bin_uiui(b6.get_mpz_t(), 6, static_cast<unsigned long>(j));
            mpz_bin_uiui(b3.get_mpz_t(), static_cast<unsigned long>(3 * nu - 9),
                         static_cast<unsigned long>(nu - 3 - j));
            total += mpq_class(mpz_class(nu) * b6 * j * b3, mpz_class(3) * (nu - 3));
        }
        for (int k = 4; k <= nu - 1; ++k) {
            for (int j = 1; j <= std::min(nu - k, 2 * k); ++j) {
                mpz_class b2k, b3k;
                mpz_bin_uiui(b2k.get_mpz_t(), static_cast<unsigned long>(2 * k),
                             static_cast<unsigned long>(j));
                mpz_bin_uiui(b3k.get_mpz_t(), static_cast<unsigned long>(3 * (nu - k)),
                             static_cast<unsigned long>(nu - k - j));
                total += mpq_class(mpz_class(2) * nu * j * b2k * b3k, mpz_class(k) * (nu - k));
            }
        }
        total.canonicalize();
        if (total.get_den() != 1) throw std::logic_error("C(nu,nu) not integral");
        return total.get_num();
    }
    throw std::domain_error("connected_count_exact supports mu in {nu-1, nu}; use brute_force_connected");
}

namespace {

bool diagram_connected(const ChordDiagram& d) {
    const int n = d.chords();
    if (n == 0) return true;
    std::vector<int> parent(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) parent[static_cast<size_t>(i)] = i;
    std::function<int(int)> find = [&](int a) {
        while (parent[static_cast<size_t>(a)] != a) {
            parent[static_cast<size_t>(a)] = parent[static_cast<size_t>(parent[static_cast<size_t>(a)])];
            a = parent[static_cast<size_t>(a)];
        }
        return a;
    };
    int comps = n;
    for (const auto& [u, v] : crossing_pairs(d)) {
        int ru = find(u - 1), rv = find(v - 1);
        if (ru != rv) {
            parent[static_cast<size_t>(ru)] = rv;
            --comps;
        }
    }
    return comps == 1;
}

}  // namespace

std::vector<mpz_class> brute_force_connected_row(int nu) {
    if (nu < 1 || nu > 8) throw std::domain_error("brute_force_connected_row: nu must be in [1, 8]");
    std::vector<mpz_class> row(static_cast<size_t>(max_crossings(nu)) + 1, 0);
    for_each_matching(nu, [&](const ChordDiagram& d) {
        if (diagram_connected(d)) row[static_cast<size_t>(crossing_count_naive(d))] += 1;
    });
    return row;
}

mpz_class brute_force_connected(int nu, int mu) {
    auto row = brute_force_connected_row(nu);
    if (mu < 0 || mu > max_crossings(nu)) return 0;
    return row[static_cast<size_t>(mu)];
}

mpz_class kreweras_count(int n, const BlockProfile& profile) {
    if (profile.chord_count() != n)
        throw std::invalid_argument("kreweras_count: profile inconsistent with n");
    const int k = profile.block_count();
    mpz_class num = 1;
    for (int t = 0; t < k - 1; ++t) num *= 2 * n - t;  // falling factorial (2n)_{k-1}
    mpz_class den = 1;
    for (size_t j = 1; j < profile.s.size(); ++j) {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(profile.s[j]));
        den *= f;
    }
    mpq_class q(num, den);
    q.canonicalize();
    if (q.get_den() != 1) throw std::logic_error("kreweras_count: non-integer result");
    return q.get_num();
}

mpz_class compatible_allocation_count(const std::vector<int>& x) {
    const int n = static_cast<int>(x.size());
    if (n < 1 || n > 12) throw std::domain_error("compatible_allocation_count: n must be in [1, 12]");
    for (int j = 1; j <= n; ++j)
        if (x[static_cast<size_t>(j - 1)] < 0 || x[static_cast<size_t>(j - 1)] > j - 1)
            throw std::invalid_argument("not an inversion sequence at index " + std::to_string(j));

    // f_j(s) = #allocation prefixes with S_j = s obeying S_{j-1} <= j-1-x_j
    std::vector<mpz_class> f(static_cast<size_t>(n) + 1, 0);
    f[0] = 1;
    for (int j = 1; j <= n; ++j) {
        std::vector<mpz_class> next(static_cast<size_t>(n) + 1, 0);
        const int cap = j - 1 - x[static_cast<size_t>(j - 1)];  // bound on S_{j-1}
        const int smax = j < n ? j : n;
        mpz_class run = 0;
        for (int s = 0; s <= smax; ++s) {
            if (s <= cap && s <= j - 1) run += f[static_cast<size_t>(s)];
            next[static_cast<size_t>(s)] = run;
        }
        // next[s] currently holds sum over s' <= min(s, cap); done by the run
        f.swap(next);
    }
    return f[static_cast<size_t>(n)];
}

mpq_class cut_factorial_moment(int n, long long m, int k) {
    if (n < 1) throw std::domain_error("cut_factorial_moment: n < 1");
    mpz_class t = touchard_riordan(n, m);
    if (t == 0) throw std::domain_error("cut_factorial_moment: T_{n,m} = 0, distribution undefined");
    mpq_class sum = 0;
    for (int l = 0; l <= k + 1; ++l) {
        mpz_class coeff = l == 0 ? mpz_class(0) : power_coefficient(n, m, l);
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(k + 1),
                     static_cast<unsigned long>(l));
        mpz_class term = binom * coeff;
        if ((k + 1 - l) % 2 == 1) term = -term;
        sum += mpq_class(term, t);
    }
    sum.canonicalize();
    return sum;
}

bool verify_component_identity(int n_max) {
    if (n_max < 1 || n_max > 6) throw std::domain_error("verify_component_identity: n_max must be in [1, 6]");
    const int ymax = n_max;
    const int xmax = static_cast<int>(max_crossings(n_max));

    Poly2 t_poly = poly2_zero(ymax, xmax);
    t_poly[0][0] = 1;
    for (int n = 1; n <= n_max; ++n) {
        auto row = crossing_row(n);
        for (size_t m = 0; m < row.counts.size() && static_cast<int>(m) <= xmax; ++m)
            t_poly[static_cast<size_t>(n)][m] = row.counts[m];
    }

    Poly2 t_sq = poly2_mul(t_poly, t_poly, ymax, xmax);

    // rhs = sum_{nu>=1} y^nu (sum_mu C_{nu,mu} x^mu) * T^{2 nu}, plus 1
    Poly2 rhs = poly2_zero(ymax, xmax);
    rhs[0][0] = 1;
    Poly2 t_pow = poly2_zero(ymax, xmax);  // T^{2 nu}
    t_pow[0][0] = 1;
    for (int nu = 1; nu <= n_max; ++nu) {
        t_pow = poly2_mul(t_pow, t_sq, ymax, xmax);
        auto conn = brute_force_connected_row(nu);
        for (size_t mu = 0; mu < conn.size(); ++mu) {
            if (conn[mu] == 0) continue;
            for (int yd = 0; yd + nu <= ymax; ++yd)
                for (int xd = 0; xd + static_cast<int>(mu) <= xmax; ++xd)
                    rhs[static_cast<size_t>(yd + nu)][static_cast<size_t>(xd + mu)] +=
                        conn[mu] * t_pow[static_cast<size_t>(yd)][static_cast<size_t>(xd)];
        }
    }

    for (int n = 0; n <= n_max; ++n)
        for (long long m = 0; m <= max_crossings(n); ++m)
            if (t_poly[static_cast<size_t>(n)][static_cast<size_t>(m)] !=
                rhs[static_cast<size_t>(n)][static_cast<size_t>(m)])
                return false;
    return true;
}

}  // namespace chords
