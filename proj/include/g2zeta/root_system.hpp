#ifndef G2ZETA_ROOT_SYSTEM_HPP
#define G2ZETA_ROOT_SYSTEM_HPP

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <g2zeta/rational.hpp>

namespace g2zeta
{

// Coordinates: roots in the basis (alpha_1, alpha_2), coroots and the
// parameter y in the basis (alpha_1^vee, alpha_2^vee).  Positive roots are
// indexed 0..5 internally; user-facing text uses 1..6.

struct Root {
    int c1 = 0;
    int c2 = 0;
    friend bool operator==(const Root &a, const Root &b)
    {
        return a.c1 == b.c1 && a.c2 == b.c2;
    }
};

struct Coroot {
    int d1 = 0;
    int d2 = 0;
    friend bool operator==(const Coroot &a, const Coroot &b)
    {
        return a.d1 == b.d1 && a.d2 == b.d2;
    }
};

inline constexpr int kPositiveRootCount = 6;

inline constexpr std::array<Root, kPositiveRootCount> kPositiveRoots{{{1, 0}, {0, 1}, {3, 1}, {3, 2}, {1, 1}, {2, 1}}};
inline constexpr std::array<Coroot, kPositiveRootCount> kPositiveCoroots{{{1, 0}, {0, 1}, {1, 1}, {1, 2}, {1, 3}, {2, 3}}};

inline std::vector<std::pair<Root, Coroot>> positive_roots()
{
    std::vector<std::pair<Root, Coroot>> out;
    for (int j = 0; j < kPositiveRootCount; ++j) {
        out.emplace_back(kPositiveRoots[j], kPositiveCoroots[j]);
    }
    return out;
}

/// <alpha, alpha_i^vee> for alpha = c1 alpha_1 + c2 alpha_2 (Cartan entries
/// <alpha_2, alpha_1^vee> = -3, <alpha_1, alpha_2^vee> = -1).
inline int coroot_pairing(const Root &alpha, int i)
{
    return i == 1 ? 2 * alpha.c1 - 3 * alpha.c2 : -alpha.c1 + 2 * alpha.c2;
}

using IntMatrix2 = std::array<std::array<int, 2>, 2>;

inline IntMatrix2 multiply(const IntMatrix2 &a, const IntMatrix2 &b)
{
    IntMatrix2 c{};
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    return c;
}

inline int determinant(const IntMatrix2 &m)
{
    return m[0][0] * m[1][1] - m[0][1] * m[1][0];
}

struct SignedIndex {
    int index = 0; // 0-based positive root index
    int sign = 1;
};

struct WeylElement {
    std::vector<int> word;   // generators i_1 ... i_n, element = s_{i_1} o ... o s_{i_n}
    IntMatrix2 matrix{};     // action on coroot coordinates (y_1, y_2)
    IntMatrix2 root_matrix{}; // action on root coordinates (c_1, c_2)
    std::array<SignedIndex, kPositiveRootCount> perm{}; // w alpha_j = sign * alpha_{index}

    std::string word_string() const
    {
        if (word.empty()) {
            return "e";
        }
        std::string s;
        for (int g : word) {
            s += (g == 1 ? "s1" : "s2");
        }
        return s;
    }
};

namespace detail
{
inline const IntMatrix2 &root_generator(int i)
{
    static const IntMatrix2 s1{{{-1, 3}, {0, 1}}};
    static const IntMatrix2 s2{{{1, 0}, {1, -1}}};
    return i == 1 ? s1 : s2;
}

inline const IntMatrix2 &coroot_generator(int i)
{
    static const IntMatrix2 s1{{{-1, 1}, {0, 1}}};
    static const IntMatrix2 s2{{{1, 0}, {3, -1}}};
    return i == 1 ? s1 : s2;
}

inline Root apply(const IntMatrix2 &m, const Root &r)
{
    return {m[0][0] * r.c1 + m[0][1] * r.c2, m[1][0] * r.c1 + m[1][1] * r.c2};
}

inline SignedIndex locate_root(const Root &r)
{
    for (int j = 0; j < kPositiveRootCount; ++j) {
        if (kPositiveRoots[j] == r) {
            return {j, 1};
        }
        if (kPositiveRoots[j].c1 == -r.c1 && kPositiveRoots[j].c2 == -r.c2) {
            return {j, -1};
        }
    }
    throw std::logic_error("vector is not a root of G2");
}

inline WeylElement element_from_matrices(std::vector<int> word, const IntMatrix2 &root_m, const IntMatrix2 &coroot_m)
{
    WeylElement w;
    w.word = std::move(word);
    w.root_matrix = root_m;
    w.matrix = coroot_m;
    for (int j = 0; j < kPositiveRootCount; ++j) {
        w.perm[j] = locate_root(apply(root_m, kPositiveRoots[j]));
    }
    return w;
}
} // namespace detail

inline WeylElement identity_element()
{
    return detail::element_from_matrices({}, IntMatrix2{{{1, 0}, {0, 1}}}, IntMatrix2{{{1, 0}, {0, 1}}});
}

/// Simple reflection s_i(alpha) = alpha - <alpha, alpha_i^vee> alpha_i, i in {1, 2}.
inline WeylElement simple_reflection(int i)
{
    if (i != 1 && i != 2) {
        throw std::invalid_argument("simple reflection index must be 1 or 2, got " + std::to_string(i));
    }
    return detail::element_from_matrices({i}, detail::root_generator(i), detail::coroot_generator(i));
}

/// a o b (apply b first).
inline WeylElement compose(const WeylElement &a, const WeylElement &b)
{
    std::vector<int> word = a.word;
    word.insert(word.end(), b.word.begin(), b.word.end());
    return detail::element_from_matrices(std::move(word), multiply(a.root_matrix, b.root_matrix), multiply(a.matrix, b.matrix));
}

inline bool same_element(const WeylElement &a, const WeylElement &b)
{
    return a.root_matrix == b.root_matrix;
}

namespace detail
{
inline std::vector<WeylElement> build_weyl_group()
{
    // Breadth-first over words; generators tried in order s1, s2, so the first
    // word reaching an element is its shortlex-minimal reduced word.
    std::vector<WeylElement> elements{identity_element()};
    std::set<IntMatrix2> seen{elements.front().root_matrix};
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        const WeylElement current = elements[queue.front()];
        queue.pop_front();
        for (int g : {1, 2}) {
            WeylElement next = compose(current, simple_reflection(g));
            if (seen.insert(next.root_matrix).second) {
                elements.push_back(std::move(next));
                queue.push_back(elements.size() - 1);
            }
        }
    }
    return elements;
}
} // namespace detail

/// The twelve elements, ordered by reduced word length then lexicographically.
inline const std::vector<WeylElement> &weyl_group()
{
    static const std::vector<WeylElement> group = detail::build_weyl_group();
    return group;
}

/// Position of w in weyl_group().
inline std::size_t weyl_index(const WeylElement &w)
{
    const auto &group = weyl_group();
    for (std::size_t i = 0; i < group.size(); ++i) {
        if (same_element(group[i], w)) {
            return i;
        }
    }
    throw std::logic_error("matrix is not an element of the Weyl group");
}

inline const WeylElement &inverse(const WeylElement &w)
{
    for (const auto &v : weyl_group()) {
        if (same_element(compose(w, v), identity_element())) {
            return v;
        }
    }
    throw std::logic_error("Weyl element without inverse");
}

inline const WeylElement &longest_element()
{
    const auto &group = weyl_group();
    return *std::max_element(group.begin(), group.end(),
                             [](const WeylElement &a, const WeylElement &b) { return a.word.size() < b.word.size(); });
}

/// t_j = s_{perm_w(j)}, signs ignored (s_alpha = s_{-alpha}).
template <typename T>
std::array<T, kPositiveRootCount> induced_argument_permutation(const WeylElement &w, const std::array<T, kPositiveRootCount> &s)
{
    std::array<T, kPositiveRootCount> t{};
    for (int j = 0; j < kPositiveRootCount; ++j) {
        t[j] = s[w.perm[j].index];
    }
    return t;
}

/// { j : w alpha_j is negative } (0-based indices).
inline std::vector<int> delta_w(const WeylElement &w)
{
    std::vector<int> out;
    for (int j = 0; j < kPositiveRootCount; ++j) {
        if (w.perm[j].sign < 0) {
            out.push_back(j);
        }
    }
    return out;
}

struct LengthClasses {
    std::vector<int> short_roots; // 0-based
    std::vector<int> long_roots;
};

/// Classes by squared length, measured with the invariant form in which
/// alpha_1 is short: |c1 a1 + c2 a2|^2 = c1^2 - 3 c1 c2 + 3 c2^2.
inline LengthClasses length_classes()
{
    LengthClasses out;
    for (int j = 0; j < kPositiveRootCount; ++j) {
        const auto &r = kPositiveRoots[j];
        const int norm = r.c1 * r.c1 - 3 * r.c1 * r.c2 + 3 * r.c2 * r.c2;
        (norm == 1 ? out.short_roots : out.long_roots).push_back(j);
    }
    return out;
}

/// K = prod over positive coroots of <alpha^vee, lambda_1 + lambda_2> = d1 + d2.
inline long k_constant()
{
    long k = 1;
    for (const auto &c : kPositiveCoroots) {
        k *= c.d1 + c.d2;
    }
    return k;
}

using RationalPair = std::array<Rational, 2>;

inline RationalPair weyl_action_on_y(const WeylElement &w, const RationalPair &y)
{
    return {Rational(w.matrix[0][0]) * y[0] + Rational(w.matrix[0][1]) * y[1],
            Rational(w.matrix[1][0]) * y[0] + Rational(w.matrix[1][1]) * y[1]};
}

/// Entries even and positive with k_1 = k_5 = k_6 and k_2 = k_3 = k_4: the
/// shape on which the Weyl-symmetric sum collapses to twelve copies of a
/// single convergent value.
template <typename Int>
bool admissible_orbit_tuple(const std::array<Int, kPositiveRootCount> &k)
{
    for (const auto &v : k) {
        if (v <= 0 || v % 2 != 0) {
            return false;
        }
    }
    return k[0] == k[4] && k[0] == k[5] && k[1] == k[2] && k[1] == k[3];
}

} // namespace g2zeta

#endif
