#include "curvechi/numtheory.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace curvechi {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::size() const {
    int s = 0;
    for (int p : parts) s += p;
    return s;
}

std::string Partition::to_string() const {
    std::string s = "[";
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts[i]);
    }
    return s + "]";
}

namespace {
std::mutex g_bernoulli_mutex;
std::vector<Rat> g_bernoulli; // g_bernoulli[r] = B_r

// Sum_{j=0}^{r} C(r+1,j) B_j = 0 for r >= 1, so
// B_r = -1/(r+1) * Sum_{j<r} C(r+1,j) B_j.
void extend_bernoulli(unsigned r) {
    if (g_bernoulli.empty()) g_bernoulli.emplace_back(1);
    for (unsigned m = g_bernoulli.size(); m <= r; ++m) {
        Rat acc(0);
        for (unsigned j = 0; j < m; ++j)
            acc += Rat(binomial(m + 1, j)) * g_bernoulli[j];
        acc /= Int(m) + 1;
        g_bernoulli.push_back(-acc);
    }
}
} // namespace

const Rat& bernoulli(unsigned r) {
    std::lock_guard<std::mutex> lock(g_bernoulli_mutex);
    extend_bernoulli(r);
    return g_bernoulli[r];
}

int mobius(unsigned long n) {
    if (n == 0) throw std::invalid_argument("mobius needs n >= 1");
    int factors = 0;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            ++factors;
        }
    }
    if (n > 1) ++factors;
    return (factors % 2 == 0) ? 1 : -1;
}

std::vector<unsigned long> divisors(unsigned long n) {
    std::vector<unsigned long> small, large;
    for (unsigned long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

namespace {
void gen_partitions(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(remaining - p, p, cur, out);
        cur.pop_back();
    }
}
} // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of needs n >= 0");
    std::vector<Partition> out;
    std::vector<int> cur;
    gen_partitions(n, n == 0 ? 1 : n, cur, out);
    return out;
}

Int specht_dim(const Partition& lambda) {
    const auto& l = lambda.parts;
    if (l.empty()) return Int(1);
    int rows = lambda.rows();
    // column lengths
    std::vector<int> col(l[0], 0);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < l[i]; ++j) col[j]++;
    Int hooks(1);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < l[i]; ++j)
            hooks *= (l[i] - j) + (col[j] - i) - 1;
    return factorial(lambda.size()) / hooks;
}

int n_min(int g) {
    if (g < 1) throw std::invalid_argument("n_min needs g >= 1");
    int num = 25 - 3 * g;
    int c = (num <= 0) ? 0 : (num + 1) / 2; // ceil(num/2) for positive num
    return std::max(c, 0);
}

Int z_order(const Partition& mu) {
    Int z(1);
    size_t i = 0;
    while (i < mu.parts.size()) {
        size_t j = i;
        while (j < mu.parts.size() && mu.parts[j] == mu.parts[i]) ++j;
        long m = static_cast<long>(j - i);
        Int pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(mu.parts[i]),
                      static_cast<unsigned long>(m));
        z *= pw * factorial(m);
        i = j;
    }
    return z;
}

} // namespace curvechi
