#include "asepgf/asep_chain.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "asepgf/errors.hpp"

namespace asepgf {

Lambda::Lambda(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.size() < 2)
        throw std::invalid_argument("lambda needs n ≥ 2 parts");
    if (std::ranges::any_of(parts_, [](int p) { return p < 0; }))
        throw std::invalid_argument("lambda parts must be nonnegative");
    if (!std::ranges::is_sorted(parts_, std::greater<>{}))
        throw std::invalid_argument("lambda parts must be weakly decreasing");
}

Lambda Lambda::parse(const std::string& text) {
    std::vector<int> parts;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed lambda: '" + text + "'");
        }
        if (used != item.size())
            throw std::invalid_argument("malformed lambda: '" + text + "'");
        parts.push_back(value);
    }
    return Lambda(std::move(parts));
}

std::size_t TransitionMatrix::index_of(const Word& w) const {
    // states are in descending lexicographic order
    const auto it = std::lower_bound(states.begin(), states.end(), w, std::greater<>{});
    if (it == states.end() || *it != w)
        throw std::out_of_range("word " + to_string(w) + " is not a state");
    return static_cast<std::size_t>(it - states.begin());
}

std::vector<std::vector<Rational>> TransitionMatrix::evaluated(const Rational& t) const {
    std::vector<std::vector<Rational>> out(size(), std::vector<Rational>(size()));
    for (std::size_t i = 0; i < size(); ++i) {
        for (std::size_t j = 0; j < size(); ++j)
            out[i][j] = entries[i][j].at(t);
    }
    return out;
}

std::vector<Word> state_space(const Lambda& lambda) {
    Word w = lambda.parts();
    std::vector<Word> states;
    do {
        states.push_back(w);
    } while (std::prev_permutation(w.begin(), w.end()));
    return states;
}

TransitionMatrix transition_matrix(const Lambda& lambda) {
    TransitionMatrix matrix;
    matrix.states = state_space(lambda);
    const std::size_t count = matrix.size();
    const std::size_t n = lambda.n();
    const Rational rate(1, static_cast<long>(n));
    const LinearInT slow{Rational(), rate};  // t/n
    const LinearInT fast{rate, Rational()};  // 1/n

    matrix.entries.assign(count, std::vector<LinearInT>(count));
    for (std::size_t row = 0; row < count; ++row) {
        const Word& mu = matrix.states[row];
        LinearInT leaving;
        auto add = [&](std::size_t a, std::size_t b, const LinearInT& p) {
            Word nu = mu;
            std::swap(nu[a], nu[b]);
            auto& entry = matrix.entries[row][matrix.index_of(nu)];
            entry.c0 += p.c0;
            entry.c1 += p.c1;
            leaving.c0 += p.c0;
            leaving.c1 += p.c1;
        };
        for (std::size_t k = 0; k + 1 < n; ++k) {
            const int i = mu[k];
            const int j = mu[k + 1];
            if (i != j)
                add(k, k + 1, i > j ? slow : fast);
        }
        const int i = mu.front();
        const int j = mu.back();
        if (i != j)
            add(0, n - 1, j > i ? slow : fast);

        auto& diag = matrix.entries[row][row];
        diag.c0 += Rational(1) - leaving.c0;
        diag.c1 -= leaving.c1;
    }
    return matrix;
}

std::vector<Rational> stationary(const TransitionMatrix& matrix, const Rational& t) {
    const std::size_t n = matrix.size();
    const auto p = matrix.evaluated(t);

    // Rows 0..n-1: (P^T - I) pi = 0; row n: sum(pi) = 1. Augmented column n.
    std::vector<std::vector<Rational>> a(n + 1, std::vector<Rational>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = p[j][i] - (i == j ? Rational(1) : Rational());
    }
    for (std::size_t j = 0; j < n; ++j)
        a[n][j] = 1;
    a[n][n] = 1;

    // Rank of P^T - I alone decides the dimension of the fixed-point space.
    std::size_t rank = 0;
    {
        auto b = a;
        b.pop_back();
        for (std::size_t col = 0; col < n && rank < n; ++col) {
            std::size_t pivot = rank;
            while (pivot < n && b[pivot][col].is_zero())
                ++pivot;
            if (pivot == n)
                continue;
            std::swap(b[rank], b[pivot]);
            for (std::size_t r = rank + 1; r < n; ++r) {
                if (b[r][col].is_zero())
                    continue;
                const Rational f = b[r][col] / b[rank][col];
                for (std::size_t c = col; c < n; ++c)
                    b[r][c] -= f * b[rank][c];
            }
            ++rank;
        }
    }
    if (rank + 1 != n)
        throw SingularChain("fixed-point space of the chain has dimension " +
                            std::to_string(n - rank) + " at t = " + t.to_string());

    // Gauss-Jordan on the full system; consistent with a unique solution.
    std::size_t row = 0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = row;
        while (pivot <= n && a[pivot][col].is_zero())
            ++pivot;
        if (pivot > n)
            throw SingularChain("no pivot in column " + std::to_string(col));
        std::swap(a[row], a[pivot]);
        const Rational inv = Rational(1) / a[row][col];
        for (std::size_t c = col; c <= n; ++c)
            a[row][c] *= inv;
        for (std::size_t r = 0; r <= n; ++r) {
            if (r == row || a[r][col].is_zero())
                continue;
            const Rational f = a[r][col];
            for (std::size_t c = col; c <= n; ++c)
                a[r][c] -= f * a[row][c];
        }
        ++row;
    }
    std::vector<Rational> pi(n);
    for (std::size_t i = 0; i < n; ++i)
        pi[i] = a[i][n];
    return pi;
}

std::vector<Rational> stationary(const Lambda& lambda, const Rational& t) {
    return stationary(transition_matrix(lambda), t);
}

GapCoordinates gap_projection(const Word& word) {
    const auto one = std::ranges::find(word, 1);
    const auto two = std::ranges::find(word, 2);
    const auto holes = std::ranges::count(word, 0);
    if (one == word.end() || two == word.end() ||
        static_cast<std::size_t>(holes) + 2 != word.size() || holes < 1)
        throw std::invalid_argument("gap projection needs a word of (2, 1, 0^m) with m ≥ 1");
    const std::size_t n = word.size();
    std::size_t pos = static_cast<std::size_t>(one - word.begin());
    int u = 0;
    for (pos = (pos + 1) % n; word[pos] != 2; pos = (pos + 1) % n)
        ++u;
    return {u, static_cast<int>(holes) - u};
}

CorrespondenceReport chain_walk_correspondence(int m) {
    if (m < 1)
        throw std::invalid_argument("m must be ≥ 1");
    std::vector<int> parts{2, 1};
    parts.insert(parts.end(), m, 0);
    const TransitionMatrix matrix = transition_matrix(Lambda(parts));

    CorrespondenceReport report;
    report.m = m;
    report.words = matrix.size();
    std::vector<std::size_t> fiber(m + 1);

    for (std::size_t row = 0; row < matrix.size(); ++row) {
        const Word& from = matrix.states[row];
        const GapCoordinates g_from = gap_projection(from);
        ++fiber.at(g_from.u);
        for (std::size_t col = 0; col < matrix.size(); ++col) {
            if (col == row || matrix.entries[row][col].is_zero())
                continue;
            const Word& to = matrix.states[col];
            const GapCoordinates g_to = gap_projection(to);
            const std::string where = to_string(from) + " -> " + to_string(to);

            std::vector<int> moved;
            for (std::size_t k = 0; k < from.size(); ++k) {
                if (from[k] != to[k])
                    moved.push_back(from[k]);
            }
            std::ranges::sort(moved);
            if (moved.size() != 2)
                throw CorrespondenceViolation(where + ": not a single swap");

            if (moved == std::vector<int>{1, 2}) {
                ++report.switch_transitions;
                const bool adjacent_state = g_from.u == 0 || g_from.v == 0;
                const bool reflected = g_to.u == g_from.v && g_to.v == g_from.u;
                if (!adjacent_state || !reflected)
                    throw CorrespondenceViolation(where + ": 2-1 swap away from (0,m)/(m,0)");
            } else {
                ++report.hop_transitions;
                const int du = g_to.u - g_from.u;
                const int dv = g_to.v - g_from.v;
                if (!((du == 1 && dv == -1) || (du == -1 && dv == 1)))
                    throw CorrespondenceViolation(where + ": hop does not move gap by (±1, ∓1)");
                report.hop_edges.emplace(std::min(g_from.u, g_to.u), std::max(g_from.u, g_to.u));
            }
        }
    }

    std::set<std::pair<int, int>> path;
    for (int a = 0; a < m; ++a)
        path.emplace(a, a + 1);
    if (report.hop_edges != path)
        throw CorrespondenceViolation("hop quotient graph is not the path graph on " +
                                      std::to_string(m + 1) + " points");
    for (int u = 0; u <= m; ++u) {
        if (fiber[u] != static_cast<std::size_t>(m + 2))
            throw CorrespondenceViolation("gap fiber u=" + std::to_string(u) + " has " +
                                          std::to_string(fiber[u]) + " words");
    }
    return report;
}

std::string to_string(const Word& word) {
    const bool wide = std::ranges::any_of(word, [](int l) { return l > 9; });
    std::string out;
    for (std::size_t k = 0; k < word.size(); ++k) {
        if (wide && k > 0)
            out += ',';
        out += std::to_string(word[k]);
    }
    return out;
}

} // namespace asepgf
