#include "ybe/bd.hpp"

#include <algorithm>
#include <stdexcept>

namespace ybe {

int BDTriple::tau_of(int a) const {
    for (const auto& [x, y] : tau)
        if (x == a) return y;
    return 0;
}

bool BDTriple::operator==(const BDTriple& o) const {
    return rank == o.rank && gamma1 == o.gamma1 && gamma2 == o.gamma2 && tau == o.tau;
}

bool bd_admissible(const BDTriple& t) {
    if (t.gamma1.size() != t.gamma2.size() || t.gamma1.size() != t.tau.size()) return false;
    for (int a : t.gamma1)
        if (a < 1 || a > t.rank) return false;
    for (int a : t.gamma2)
        if (a < 1 || a > t.rank) return false;
    // tau total and bijective on gamma1 -> gamma2
    std::vector<int> seen;
    for (const auto& [x, y] : t.tau) {
        if (std::find(t.gamma1.begin(), t.gamma1.end(), x) == t.gamma1.end()) return false;
        if (std::find(t.gamma2.begin(), t.gamma2.end(), y) == t.gamma2.end()) return false;
        if (std::find(seen.begin(), seen.end(), y) != seen.end()) return false;
        seen.push_back(y);
    }
    if (seen.size() != t.gamma1.size()) return false;
    // isometry: adjacency preserved both ways (A-type inner products)
    for (int a : t.gamma1)
        for (int b : t.gamma1) {
            bool adj = std::abs(a - b) == 1;
            bool adj2 = std::abs(t.tau_of(a) - t.tau_of(b)) == 1;
            if (adj != adj2) return false;
        }
    // nilpotency: every tau-orbit leaves gamma1
    for (int a : t.gamma1) {
        int cur = a;
        bool escaped = false;
        for (int step = 0; step <= t.rank; ++step) {
            int next = t.tau_of(cur);
            if (std::find(t.gamma1.begin(), t.gamma1.end(), next) == t.gamma1.end()) {
                escaped = true;
                break;
            }
            cur = next;
        }
        if (!escaped) return false;
    }
    return true;
}

namespace {

void enumerate_rec(int rank, std::vector<int>& g1, std::vector<int>& g2,
                   std::vector<std::pair<int, int>>& tau, std::vector<bool>& used2, int next,
                   std::vector<BDTriple>& out) {
    if (next > rank) {
        BDTriple t{rank, g1, g2, tau};
        std::sort(t.gamma2.begin(), t.gamma2.end());
        if (bd_admissible(t)) out.push_back(t);
        return;
    }
    // next not in gamma1
    enumerate_rec(rank, g1, g2, tau, used2, next + 1, out);
    // next in gamma1 with each possible image
    for (int img = 1; img <= rank; ++img) {
        if (used2[img]) continue;
        g1.push_back(next);
        g2.push_back(img);
        tau.emplace_back(next, img);
        used2[img] = true;
        enumerate_rec(rank, g1, g2, tau, used2, next + 1, out);
        used2[img] = false;
        tau.pop_back();
        g2.pop_back();
        g1.pop_back();
    }
}

} // namespace

std::vector<BDTriple> enumerate_bd(int rank) {
    if (rank < 1 || rank > 8) throw std::invalid_argument("rank out of the enumeration guard");
    std::vector<BDTriple> out;
    std::vector<int> g1, g2;
    std::vector<std::pair<int, int>> tau;
    std::vector<bool> used2(rank + 1, false);
    enumerate_rec(rank, g1, g2, tau, used2, 1, out);
    return out;
}

std::vector<BDTriple> enumerate_bd_bruteforce(int rank) {
    if (rank < 1 || rank > 8) throw std::invalid_argument("rank out of the enumeration guard");
    std::vector<BDTriple> out;
    const int full = 1 << rank;
    for (int m1 = 0; m1 < full; ++m1)
        for (int m2 = 0; m2 < full; ++m2) {
            if (__builtin_popcount(m1) != __builtin_popcount(m2)) continue;
            std::vector<int> g1, g2;
            for (int i = 0; i < rank; ++i) {
                if (m1 & (1 << i)) g1.push_back(i + 1);
                if (m2 & (1 << i)) g2.push_back(i + 1);
            }
            std::vector<int> perm = g2;
            std::sort(perm.begin(), perm.end());
            do {
                BDTriple t;
                t.rank = rank;
                t.gamma1 = g1;
                t.gamma2 = g2;
                for (std::size_t k = 0; k < g1.size(); ++k) t.tau.emplace_back(g1[k], perm[k]);
                // independent re-implementation of the two conditions
                bool iso = true;
                for (std::size_t a = 0; a < g1.size() && iso; ++a)
                    for (std::size_t b = 0; b < g1.size() && iso; ++b)
                        if ((std::abs(g1[a] - g1[b]) == 1) !=
                            (std::abs(perm[a] - perm[b]) == 1))
                            iso = false;
                bool nilp = true;
                auto tau_of = [&](int x) {
                    for (std::size_t k = 0; k < g1.size(); ++k)
                        if (g1[k] == x) return perm[k];
                    return 0;
                };
                for (std::size_t a = 0; a < g1.size() && nilp; ++a) {
                    int cur = g1[a];
                    bool escaped = false;
                    for (int step = 0; step <= rank; ++step) {
                        cur = tau_of(cur);
                        if (std::find(g1.begin(), g1.end(), cur) == g1.end()) {
                            escaped = true;
                            break;
                        }
                    }
                    if (!escaped) nilp = false;
                }
                if (iso && nilp) out.push_back(t);
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    return out;
}

std::vector<int> theta_s(int rank, int deleted) {
    if (deleted < 1 || deleted > rank) throw std::invalid_argument("deleted root out of range");
    // image indexed by root; components of S flip end to end
    std::vector<int> img(rank + 1, 0);
    auto flip = [&](int lo, int hi) {
        for (int a = lo; a <= hi; ++a) img[a] = lo + hi - a;
    };
    if (deleted > 1) flip(1, deleted - 1);
    if (deleted < rank) flip(deleted + 1, rank);
    return img;
}

std::optional<SAdmissible> s_admissible_classify(const BDTriple& t, int alpha,
                                                 std::string* reason) {
    auto fail = [&](const std::string& why) -> std::optional<SAdmissible> {
        if (reason) *reason = why;
        return std::nullopt;
    };
    if (alpha < 1 || alpha > t.rank) return fail("deleted root out of range");
    auto theta = theta_s(t.rank, alpha);
    bool alpha_in_g2 =
        std::find(t.gamma2.begin(), t.gamma2.end(), alpha) != t.gamma2.end();

    if (!alpha_in_g2) {
        // case I: transport gamma2 through theta_S and test the diagram data
        BDTriple moved;
        moved.rank = t.rank;
        moved.gamma1 = t.gamma1;
        for (const auto& [x, y] : t.tau) {
            if (y == alpha || theta[y] == 0) return fail("image outside the subdiagram");
            moved.gamma2.push_back(theta[y]);
            moved.tau.emplace_back(x, theta[y]);
        }
        std::sort(moved.gamma2.begin(), moved.gamma2.end());
        if (!bd_admissible(moved)) return fail("transported triple is not admissible");
        SAdmissible s;
        s.kind = SAdmissible::I;
        s.triple = t;
        s.alpha = alpha;
        return s;
    }
    // case II: some beta maps to alpha; remove the pair and transport
    int beta = 0;
    for (const auto& [x, y] : t.tau)
        if (y == alpha) beta = x;
    if (beta == 0) return fail("alpha in the target set but not attained");
    BDTriple moved;
    moved.rank = t.rank;
    for (const auto& [x, y] : t.tau) {
        if (x == beta) continue;
        if (theta[y] == 0) return fail("image outside the subdiagram");
        moved.gamma1.push_back(x);
        moved.gamma2.push_back(theta[y]);
        moved.tau.emplace_back(x, theta[y]);
    }
    std::sort(moved.gamma1.begin(), moved.gamma1.end());
    std::sort(moved.gamma2.begin(), moved.gamma2.end());
    // rebuild tau sorted by source for canonical form
    std::sort(moved.tau.begin(), moved.tau.end());
    if (!bd_admissible(moved)) return fail("reduced triple is not admissible");
    SAdmissible s;
    s.kind = SAdmissible::II;
    s.triple = t;
    s.alpha = alpha;
    s.beta = beta;
    return s;
}

} // namespace ybe
