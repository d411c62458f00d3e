#include "curvechi/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace curvechi {

int pmono_weight(const PMono& m) {
    int w = 0;
    for (size_t j = 0; j < m.size(); ++j) w += static_cast<int>(j + 1) * m[j];
    return w;
}

PMono pmono_from_partition(const Partition& mu) {
    PMono m;
    if (!mu.parts.empty()) m.resize(mu.parts[0], 0);
    for (int p : mu.parts) m[p - 1]++;
    return m;
}

Partition pmono_to_partition(const PMono& m) {
    std::vector<int> parts;
    for (int j = static_cast<int>(m.size()); j >= 1; --j)
        for (int c = 0; c < m[j - 1]; ++c) parts.push_back(j);
    return Partition(std::move(parts));
}

bool PMonoLess::operator()(const PMono& a, const PMono& b) const {
    int wa = pmono_weight(a), wb = pmono_weight(b);
    if (wa != wb) return wa < wb;
    return a < b;
}

namespace {
PMono trimmed(PMono m) {
    while (!m.empty() && m.back() == 0) m.pop_back();
    return m;
}

PMono pmono_mul(const PMono& a, const PMono& b) {
    PMono r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}
} // namespace

SymFunc SymFunc::constant(const Rat& c, int p_cap) {
    SymFunc f(p_cap);
    f.add_term({}, c);
    return f;
}

SymFunc SymFunc::p(int j, int p_cap) {
    SymFunc f(p_cap);
    if (j >= 1 && j <= p_cap) {
        PMono m(j, 0);
        m[j - 1] = 1;
        f.add_term(m, Rat(1));
    }
    return f;
}

Rat SymFunc::coeff(const PMono& m) const {
    auto it = terms_.find(trimmed(m));
    return it == terms_.end() ? Rat(0) : it->second;
}

void SymFunc::add_term(const PMono& m, const Rat& c) {
    if (c == 0) return;
    PMono key = trimmed(m);
    if (pmono_weight(key) > p_cap_) return;
    auto [it, inserted] = terms_.emplace(std::move(key), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
    if (p_cap_ != o.p_cap_) throw std::invalid_argument("SymFunc p_cap mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) {
    if (p_cap_ != o.p_cap_) throw std::invalid_argument("SymFunc p_cap mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

SymFunc operator*(const SymFunc& a, const SymFunc& b) {
    if (a.p_cap_ != b.p_cap_) throw std::invalid_argument("SymFunc p_cap mismatch");
    SymFunc r(a.p_cap_);
    if (a.terms_.empty() || b.terms_.empty()) return r;
    for (const auto& [ma, ca] : a.terms_) {
        int wa = pmono_weight(ma);
        for (const auto& [mb, cb] : b.terms_) {
            if (wa + pmono_weight(mb) > a.p_cap_) break; // b is weight-sorted
            r.add_term(pmono_mul(ma, mb), ca * cb);
        }
    }
    return r;
}

SymFunc SymFunc::operator-() const {
    SymFunc r(p_cap_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

SymFunc& SymFunc::scale(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

void SymFunc::axpy(const Rat& c, const SymFunc& x) {
    if (c == 0) return;
    if (p_cap_ != x.p_cap_) throw std::invalid_argument("SymFunc p_cap mismatch");
    for (const auto& [m, v] : x.terms_) add_term(m, c * v);
}

SymFunc SymFunc::sign_substitute() const {
    SymFunc r(p_cap_);
    for (const auto& [m, c] : terms_) {
        int flips = 0;
        for (auto e : m) flips += e;
        r.terms_.emplace(m, (flips % 2 == 0) ? c : -c);
    }
    return r;
}

SymFunc SymFunc::frobenius(int k) const {
    if (k < 1) throw std::invalid_argument("frobenius needs k >= 1");
    SymFunc r(p_cap_);
    for (const auto& [m, c] : terms_) {
        if (pmono_weight(m) * k > p_cap_) continue;
        PMono t(m.size() * k, 0);
        for (size_t j = 0; j < m.size(); ++j)
            if (m[j]) t[(j + 1) * k - 1] = m[j];
        r.add_term(t, c);
    }
    return r;
}

SymFunc SymFunc::graded_part(int n) const {
    SymFunc r(p_cap_);
    for (const auto& [m, c] : terms_)
        if (pmono_weight(m) == n) r.terms_.emplace(m, c);
    return r;
}

SymFunc SymFunc::truncated(int new_cap) const {
    SymFunc r(new_cap);
    for (const auto& [m, c] : terms_) {
        if (pmono_weight(m) > new_cap) break; // weight-sorted
        r.terms_.emplace(m, c);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Murnaghan-Nakayama characters via beta-sets.
//
// For the beta-set b_i = lambda_i + (r - i), removing a border strip of size t
// corresponds to replacing some b_i by b_i - t when b_i - t is not already in
// the set; the strip height is the number of entries strictly between.

namespace {
using CharKey = std::pair<std::vector<int>, std::vector<int>>;
std::mutex g_char_mutex;
std::map<CharKey, Int> g_char_memo;

Int mn_character(const std::vector<int>& lambda, const std::vector<int>& mu_rest);

Int mn_character_memo(const std::vector<int>& lambda, const std::vector<int>& mu) {
    if (lambda.empty()) return Int(1);
    CharKey key{lambda, mu};
    {
        std::lock_guard<std::mutex> lock(g_char_mutex);
        auto it = g_char_memo.find(key);
        if (it != g_char_memo.end()) return it->second;
    }
    Int val = mn_character(lambda, mu);
    std::lock_guard<std::mutex> lock(g_char_mutex);
    g_char_memo.emplace(std::move(key), val);
    return val;
}

Int mn_character(const std::vector<int>& lambda, const std::vector<int>& mu) {
    // invariant: |lambda| = |mu|, both weakly decreasing
    if (lambda.empty()) return Int(1);
    int t = mu[0];
    std::vector<int> mu_rest(mu.begin() + 1, mu.end());
    int r = static_cast<int>(lambda.size());
    std::vector<int> beta(r);
    for (int i = 0; i < r; ++i) beta[i] = lambda[i] + (r - 1 - i); // strictly decreasing
    Int acc(0);
    for (int i = 0; i < r; ++i) {
        int target = beta[i] - t;
        if (target < 0) continue;
        bool occupied = false;
        int height = 0;
        for (int k = 0; k < r; ++k) {
            if (k == i) continue;
            if (beta[k] == target) { occupied = true; break; }
            if (beta[k] < beta[i] && beta[k] > target) ++height;
        }
        if (occupied) continue;
        std::vector<int> nb = beta;
        nb[i] = target;
        std::sort(nb.rbegin(), nb.rend());
        std::vector<int> nl;
        int nr = static_cast<int>(nb.size());
        for (int k = 0; k < nr; ++k) {
            int part = nb[k] - (nr - 1 - k);
            if (part > 0) nl.push_back(part);
        }
        // removing zero rows keeps the remaining beta encoding consistent
        Int sub = mn_character_memo(nl, mu_rest);
        acc += (height % 2 == 0) ? sub : -sub;
    }
    return acc;
}
} // namespace

Int sym_character(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size())
        throw std::invalid_argument("sym_character needs |lambda| = |mu|");
    return mn_character_memo(lambda.parts, mu.parts);
}

SymFunc schur_to_p(const Partition& lambda, int p_cap) {
    SymFunc f(p_cap);
    int n = lambda.size();
    if (n > p_cap) return f;
    if (n == 0) return SymFunc::constant(Rat(1), p_cap);
    for (const Partition& mu : partitions_of(n)) {
        Int chi = sym_character(lambda, mu);
        if (chi == 0) continue;
        f.add_term(pmono_from_partition(mu), Rat(chi) / Rat(z_order(mu)));
    }
    return f;
}

SymFunc h_to_p(int n, int p_cap) {
    SymFunc f(p_cap);
    if (n > p_cap) return f;
    if (n == 0) return SymFunc::constant(Rat(1), p_cap);
    for (const Partition& mu : partitions_of(n))
        f.add_term(pmono_from_partition(mu), Rat(1) / Rat(z_order(mu)));
    return f;
}

SymFunc e_to_p(int n, int p_cap) {
    SymFunc f(p_cap);
    if (n > p_cap) return f;
    if (n == 0) return SymFunc::constant(Rat(1), p_cap);
    for (const Partition& mu : partitions_of(n)) {
        int sgn = ((n - mu.rows()) % 2 == 0) ? 1 : -1;
        f.add_term(pmono_from_partition(mu), Rat(sgn) / Rat(z_order(mu)));
    }
    return f;
}

SchurExpansion p_to_schur(const SymFunc& f) {
    SchurExpansion out;
    // bucket the terms by weighted degree
    std::map<int, std::vector<std::pair<Partition, Rat>>> graded;
    for (const auto& [m, c] : f.terms())
        graded[pmono_weight(m)].emplace_back(pmono_to_partition(m), c);
    for (const auto& [n, terms] : graded) {
        for (const Partition& lambda : partitions_of(n)) {
            Rat coeff(0);
            for (const auto& [mu, c] : terms) coeff += c * Rat(sym_character(lambda, mu));
            if (coeff != 0) out.emplace(lambda.parts, coeff);
        }
    }
    return out;
}

std::string schur_text(const SchurExpansion& e) {
    if (e.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [parts, c] : e) {
        Rat a = c;
        bool neg = a < 0;
        if (neg) a = -a;
        if (first) {
            if (neg) s += "-";
            first = false;
        } else {
            s += neg ? " - " : " + ";
        }
        if (a != 1) s += rat_to_string(a) + "*";
        s += "s[";
        for (size_t i = 0; i < parts.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts[i]);
        }
        s += "]";
    }
    return s;
}

} // namespace curvechi
