#include "perisum/okada.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "perisum/arith.hpp"

namespace perisum::okada {

using arith::euler_phi;
using arith::ipow;
using arith::prime_divisors;
using arith::valuation;

PeriodicFunction::PeriodicFunction(long q, std::vector<Rat> values)
    : q_(q), values_(std::move(values)) {
    if (q_ < 2) throw std::domain_error("periodic function needs modulus > 1");
    if (values_.size() != static_cast<std::size_t>(q_))
        throw std::domain_error("periodic function needs exactly q values");
    Rat sum = std::accumulate(values_.begin(), values_.end(), Rat(0));
    if (sum != 0) throw std::domain_error("periodic function must sum to zero over a period");
}

const Rat& PeriodicFunction::at(const Int& n) const {
    Int r = n % q_;
    if (r <= 0) r += q_;
    return values_[r.get_ui() - 1];
}

const Rat& PeriodicFunction::at_residue(long r) const {
    if (r < 1 || r > q_) throw std::out_of_range("residue out of 1..q");
    return values_[static_cast<std::size_t>(r) - 1];
}

SupportSets support_sets(long q) {
    if (q <= 1) throw std::domain_error("support sets need q > 1");
    SupportSets out;
    for (long r = 1; r <= q; ++r) {
        Int g = gcd(Int(r), Int(q));
        if (g == 1)
            out.J.push_back(r);
        else if (g < q)
            out.L.push_back(r);
    }
    out.Lprime = out.L;
    out.Lprime.push_back(q);
    return out;
}

std::vector<long> saturated_primes(long r, long q) {
    std::vector<long> out;
    for (const Int& p : prime_divisors(q)) {
        if (valuation(p, r) >= valuation(p, q)) out.push_back(to_long(p));
    }
    return out;
}

Rat epsilon(long r, long p, long q) {
    if (q % p != 0) throw std::domain_error("epsilon needs p | q");
    unsigned long vq = valuation(p, q);
    unsigned long vr = valuation(p, r);
    if (vr >= vq) return Rat(vq) + make_rat(1, p - 1);
    return Rat(vr);
}

std::vector<Int> s_set(long r, long q) {
    const unsigned long phi = to_long(euler_phi(q));
    std::vector<Int> out{1};
    for (long p : saturated_primes(r, q)) {
        std::vector<Int> next;
        next.reserve(out.size() * phi);
        Int pk = 1;
        for (unsigned long e = 0; e < phi; ++e) {
            for (const Int& m : out) next.push_back(m * pk);
            pk *= p;
        }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool sigma(long r, long a, const Int& n, long q) {
    Int g = gcd(Int(r), Int(q));
    return (Int(a) * n * g - r) % q == 0;
}

Rat coefficient_A(long r, long a, long q) {
    const Int g = gcd(Int(r), Int(q));
    const unsigned long phi = to_long(euler_phi(q));
    Rat geometric(1);
    for (long p : saturated_primes(r, q)) {
        Int pphi = ipow(p, phi);
        // (1 - p^-phi)^-1 = p^phi / (p^phi - 1)
        geometric *= make_rat(pphi, pphi - 1);
    }
    Rat acc(0);
    for (const Int& n : s_set(r, q)) {
        if (sigma(r, a, n, q)) acc += make_rat(1, n);
    }
    return make_rat(1, g) * geometric * acc;
}

OkadaReport okada_verdict(const PeriodicFunction& f) {
    const long q = f.modulus();
    const SupportSets sets = support_sets(q);
    const Rat phi(euler_phi(q));

    OkadaReport report;
    report.vanishes = true;
    for (long a : sets.J) {
        Rat residual = f.at_residue(a);
        for (long r : sets.L) {
            if (f.at_residue(r) == 0) continue;
            residual += f.at_residue(r) * coefficient_A(r, a, q);
        }
        residual += f.at_residue(q) / phi;
        if (residual != 0) report.vanishes = false;
        report.condition_J.emplace_back(a, residual);
    }
    for (const Int& p : prime_divisors(q)) {
        long pl = to_long(p);
        Rat residual(0);
        for (long r : sets.Lprime) {
            if (f.at_residue(r) == 0) continue;
            residual += f.at_residue(r) * epsilon(r, pl, q);
        }
        if (residual != 0) report.vanishes = false;
        report.condition_P.emplace_back(pl, residual);
    }
    return report;
}

DecompositionSum decomposition_sum(const PeriodicFunction& f, long a, const Int& bound) {
    const long q = f.modulus();
    if (gcd(Int(a), Int(q)) != 1) throw std::domain_error("decomposition_sum needs gcd(a, q) = 1");
    if (bound < 1) throw std::domain_error("decomposition_sum needs bound >= 1");
    const std::vector<Int> primes = prime_divisors(q);

    // Enumerate q-smooth integers <= bound in increasing order; pairing each
    // value with the index of its largest allowed prime avoids duplicates.
    using Entry = std::pair<Int, std::size_t>;
    auto cmp = [](const Entry& x, const Entry& y) { return x.first > y.first; };
    std::priority_queue<Entry, std::vector<Entry>, decltype(cmp)> heap(cmp);
    heap.emplace(1, 0);

    Rat value(0);
    Rat partial(0); // sum of 1/m over enumerated m
    while (!heap.empty()) {
        auto [m, idx] = heap.top();
        heap.pop();
        value += f.at(Int(a) * m) * make_rat(1, m);
        partial += make_rat(1, m);
        for (std::size_t j = idx; j < primes.size(); ++j) {
            Int next = m * primes[j];
            if (next <= bound) heap.emplace(next, j);
        }
    }

    // Full sum of 1/m over all q-smooth m is prod p/(p-1); the difference
    // with the enumerated part bounds the dropped tail.
    Rat full(1);
    for (const Int& p : primes) full *= make_rat(p, p - 1);
    Rat max_abs(0);
    for (const Rat& v : f.values()) max_abs = std::max(max_abs, Rat(abs(v)));

    return {value, max_abs * (full - partial)};
}

PeriodicFunction dilate(const PeriodicFunction& f, long k) {
    const long q = f.modulus();
    if (gcd(Int(k), Int(q)) != 1) throw std::domain_error("dilation needs gcd(k, q) = 1");
    std::vector<Rat> values(static_cast<std::size_t>(q));
    for (long i = 1; i <= q; ++i) values[i - 1] = f.at(Int(k) * i);
    return PeriodicFunction(q, std::move(values));
}

// ---------------------------------------------------------------------------
// Exact nullspace by fraction-free elimination
// ---------------------------------------------------------------------------

namespace {

// Rows are scaled to integers, then reduced Bareiss-style so every
// intermediate entry stays integral.
std::vector<std::vector<Rat>> integer_nullspace(std::vector<std::vector<Int>> m, std::size_t cols) {
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    Int prev_pivot = 1;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t sel = row;
        while (sel < m.size() && m[sel][col] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[row], m[sel]);
        const Int pivot = m[row][col];
        for (std::size_t i = row + 1; i < m.size(); ++i) {
            for (std::size_t j = col + 1; j < cols; ++j)
                m[i][j] = (m[i][j] * pivot - m[i][col] * m[row][j]) / prev_pivot;
            m[i][col] = 0;
        }
        prev_pivot = pivot;
        pivot_col.push_back(col);
        ++row;
    }

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;

    std::vector<std::vector<Rat>> basis;
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[free_col] = 1;
        // Back-substitute through the pivot rows.
        for (std::size_t r = pivot_col.size(); r-- > 0;) {
            std::size_t pc = pivot_col[r];
            Rat acc(0);
            for (std::size_t j = pc + 1; j < cols; ++j) {
                if (v[j] != 0) acc += Rat(m[r][j]) * v[j];
            }
            v[pc] = -acc / Rat(m[r][pc]);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

void normalize_vector(std::vector<Rat>& v) {
    Int den_lcm = 1;
    for (const Rat& x : v) den_lcm = lcm(den_lcm, x.get_den());
    Int content = 0;
    for (Rat& x : v) {
        x *= Rat(den_lcm);
        content = gcd(content, x.get_num());
    }
    if (content == 0) return;
    int sign = 0;
    for (const Rat& x : v) {
        if (x != 0) {
            sign = sgn(x) > 0 ? 1 : -1;
            break;
        }
    }
    Rat scale = make_rat(Int(sign), content);
    for (Rat& x : v) x *= scale;
}

} // namespace

std::vector<std::vector<Rat>> nullspace_search(long q, const std::vector<long>& residues) {
    if (q <= 1) throw std::domain_error("nullspace_search needs q > 1");
    {
        Int g(q);
        for (long s : residues) {
            if (s < 1 || s > q) throw std::domain_error("residues must lie in (0, q]");
            g = gcd(g, Int(s));
        }
        for (std::size_t i = 0; i < residues.size(); ++i)
            for (std::size_t j = i + 1; j < residues.size(); ++j)
                if (residues[i] == residues[j]) throw std::domain_error("residues must be distinct");
        if (g != 1) throw std::domain_error("residues must be jointly coprime to q");
    }

    const SupportSets sets = support_sets(q);
    const Rat phi(euler_phi(q));
    const std::size_t cols = residues.size();

    auto column_of = [&](long r) -> long {
        for (std::size_t i = 0; i < cols; ++i)
            if (residues[i] == r) return static_cast<long>(i);
        return -1;
    };

    std::vector<std::vector<Rat>> rows;
    // zero mean over a period
    rows.emplace_back(cols, Rat(1));
    // prime conditions
    for (const Int& p : prime_divisors(q)) {
        std::vector<Rat> row(cols, Rat(0));
        for (long r : sets.Lprime) {
            long c = column_of(r);
            if (c >= 0) row[c] = epsilon(r, to_long(p), q);
        }
        rows.push_back(std::move(row));
    }
    // coprime-residue conditions
    for (long a : sets.J) {
        std::vector<Rat> row(cols, Rat(0));
        long ca = column_of(a);
        if (ca >= 0) row[ca] += 1;
        for (long r : sets.L) {
            long c = column_of(r);
            if (c >= 0) row[c] += coefficient_A(r, a, q);
        }
        long cq = column_of(q);
        if (cq >= 0) row[cq] += 1 / phi;
        rows.push_back(std::move(row));
    }

    std::vector<std::vector<Int>> scaled;
    scaled.reserve(rows.size());
    for (const auto& row : rows) {
        Int den_lcm = 1;
        for (const Rat& x : row) den_lcm = lcm(den_lcm, x.get_den());
        std::vector<Int> irow;
        irow.reserve(cols);
        for (const Rat& x : row) irow.push_back(Int(x * Rat(den_lcm)));
        scaled.push_back(std::move(irow));
    }

    auto basis = integer_nullspace(std::move(scaled), cols);
    for (auto& v : basis) normalize_vector(v);
    return basis;
}

} // namespace perisum::okada
