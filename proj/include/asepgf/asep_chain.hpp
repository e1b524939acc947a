#ifndef ASEPGF_ASEP_CHAIN_HPP
#define ASEPGF_ASEP_CHAIN_HPP

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "asepgf/rational.hpp"

namespace asepgf {

// Species labels on the ring, 0 being a hole.
using Word = std::vector<int>;

// A partition: weakly decreasing species labels, length n >= 2 (ring size).
class Lambda {
public:
    // Sorts nothing; throws std::invalid_argument if parts are not weakly
    // decreasing, contain a negative label, or n < 2.
    explicit Lambda(std::vector<int> parts);

    // "2,1,0" style literal.
    static Lambda parse(const std::string& text);

    const std::vector<int>& parts() const { return parts_; }
    std::size_t n() const { return parts_.size(); }

private:
    std::vector<int> parts_;
};

// c0 + c1 t
struct LinearInT {
    Rational c0;
    Rational c1;

    Rational at(const Rational& t) const { return c0 + c1 * t; }
    bool is_zero() const { return c0.is_zero() && c1.is_zero(); }
    friend bool operator==(const LinearInT&, const LinearInT&) = default;
};

struct TransitionMatrix {
    std::vector<Word> states;
    std::vector<std::vector<LinearInT>> entries; // entries[row][col]

    std::size_t size() const { return states.size(); }
    std::size_t index_of(const Word& w) const;
    std::vector<std::vector<Rational>> evaluated(const Rational& t) const;
};

// All distinct arrangements of lambda, in lexicographically descending order.
std::vector<Word> state_space(const Lambda& lambda);

// Transition probabilities with entries linear in t. Each of the n cyclically
// adjacent position pairs holding different letters i, j contributes:
//   interior pair (k, k+1): t/n if i > j, else 1/n;
//   wrap pair (first letter i, last letter j): t/n if j > i, else 1/n.
// Contributions landing on the same target word add up. The diagonal is the
// row complement.
TransitionMatrix transition_matrix(const Lambda& lambda);

// Exact solution of pi P = pi, sum(pi) = 1 at the given t. Throws
// SingularChain unless the fixed-point space is one-dimensional.
std::vector<Rational> stationary(const TransitionMatrix& matrix, const Rational& t);
std::vector<Rational> stationary(const Lambda& lambda, const Rational& t);

struct GapCoordinates {
    int u = 0;
    int v = 0;
    friend auto operator<=>(const GapCoordinates&, const GapCoordinates&) = default;
};

// For a word of (2, 1, 0^m): u counts the holes met reading clockwise
// (increasing index, cyclically) from the 1 to the 2; v = m - u.
GapCoordinates gap_projection(const Word& word);

struct CorrespondenceReport {
    int m = 0;
    std::size_t words = 0;
    std::size_t hop_transitions = 0;
    std::size_t switch_transitions = 0;
    std::set<std::pair<int, int>> hop_edges; // unordered u-pairs, smaller first
};

// Checks the two-particle chain against the walk model on [0, m]:
// particle-hole swaps move (u, v) by (+-1, -+1), 2-1 swaps happen only at
// u = 0 or v = 0 and exchange (0, m) with (m, 0), and the hop edges form the
// (m+1)-point path graph. Throws CorrespondenceViolation on the first
// offending transition.
CorrespondenceReport chain_walk_correspondence(int m);

std::string to_string(const Word& word);

} // namespace asepgf

#endif // ASEPGF_ASEP_CHAIN_HPP
