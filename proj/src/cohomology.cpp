#include "curvechi/cohomology.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace curvechi {

namespace {
// enumerate increasing k-subsets of {1..n} in lexicographic order
void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& f) {
    if (k > n) return;
    std::vector<int> s(k);
    for (int i = 0; i < k; ++i) s[i] = i + 1;
    while (true) {
        f(s);
        int i = k - 1;
        while (i >= 0 && s[i] == n - (k - 1 - i)) --i;
        if (i < 0) break;
        ++s[i];
        for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
    }
}
} // namespace

DimResult dim_h13(int g, int n) {
    if (g < 0 || n < 0) throw std::invalid_argument("dim_h13 needs g, n >= 0");
    if (2 * g + n < 3) return {Int(0), false};
    if (g == 0 || n < 10) return {Int(0), true};
    if (g == 1) return {Int(kCuspFormDim) * Int(basis_genus1(n).size()), true};
    Int count(0);
    for (int m = 10; m <= n; ++m) count += binomial(n, m) * binomial(m, 10);
    return {Int(kCuspFormDim) * count, true};
}

SymFunc char_h13(int g, int n, int p_cap) {
    if (g < 2) throw std::invalid_argument("char_h13 is the g >= 2 formula");
    SymFunc out(p_cap);
    if (n < 10 || n > p_cap) return out;
    SymFunc s110 = e_to_p(10, p_cap);
    for (int m = 10; m <= n; ++m)
        out += s110 * h_to_p(m - 10, p_cap) * h_to_p(n - m, p_cap);
    return out;
}

std::vector<ZIndex> basis_genus1(int n) {
    std::vector<ZIndex> out;
    if (n < 12) return out;
    // A of size m with complement size >= 3, any B in A; plus |A^c| = 2 with
    // min(A^c) < min(B).
    for (int m = 10; m <= n - 2; ++m) {
        bool comp2 = (m == n - 2);
        for_each_subset(n, m, [&](const std::vector<int>& a) {
            int min_ac = 0;
            if (comp2) {
                // smallest element of {1..n} \ a
                int expect = 1;
                for (int x : a) {
                    if (x != expect) break;
                    ++expect;
                }
                min_ac = expect;
            }
            for_each_subset(m, 10, [&](const std::vector<int>& pick) {
                std::vector<int> b(10);
                for (int i = 0; i < 10; ++i) b[i] = a[pick[i] - 1];
                if (comp2 && !(min_ac < b[0])) return;
                out.push_back(ZIndex{b, a});
            });
        });
    }
    return out;
}

int excess(int g, int n, const Partition& lambda) {
    return 3 * g + n + lambda.rows();
}

} // namespace curvechi
