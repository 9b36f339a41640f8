#pragma once

#include <map>
#include <string>
#include <vector>

#include "postlie/lift.hpp"

namespace postlie {

/// Partition of {1..n} in canonical form: elements increasing inside each
/// block, blocks ordered by increasing maximum.
struct SetPartition {
    std::vector<std::vector<int>> blocks;

    int n() const;
    bool operator==(const SetPartition& other) const { return blocks == other.blocks; }
    bool operator<(const SetPartition& other) const { return blocks < other.blocks; }
    std::string to_string() const;
};

/// All partitions of {1..n}, each in canonical form, in lexicographic order
/// of the canonical form. Enumerated through restricted-growth strings.
std::vector<SetPartition> enumerate_partitions(int n);

/// Bell numbers via B_{n+1} = sum_i C(n,i) B_i; bell(n) for n >= 0.
Rational bell_number(int n);

/// Word x_1 . ... . x_n in the enveloping algebra of the induced bracket,
/// with concrete Lie-algebra elements as letters.
using BarWord = std::vector<GVector>;

/// Linear combination of bar words.
using BarElement = std::map<BarWord, Rational>;

void bar_accumulate(BarElement& acc, const BarWord& w, const Rational& c);
BarElement bar_add(const BarElement& a, const BarElement& b);
BarElement bar_scale(const Rational& c, const BarElement& a);

/// X_pi: product over blocks (canonical order) of the left-nested triangle
/// chain  x_{k_1} |> (x_{k_2} |> ( ... |> x_{k_l})) of each block.
UEAElement x_pi(const PostLieLift& lift, const SetPartition& pi, const BarWord& letters);

/// phi as the partition sum: phi(x_1...x_n) = sum_{pi in P_n} X_pi.
UEAElement phi(const PostLieLift& lift, const BarWord& word);

/// phi by the word recursion phi(x_1...x_n) = x_1 phi(rest) + x_1 |> phi(rest).
UEAElement phi_recursive(const PostLieLift& lift, const BarWord& word);

/// phi extended linearly to combinations of bar words.
UEAElement phi_on_bar(const PostLieLift& lift, const BarElement& elem);

/// Compositional inverse: phi_inverse(x_1...x_n) = x_1....x_n
///   - sum_{0 < pi, pi != minimal} phi_inverse(X_pi), extended linearly.
/// Nested triangle letters are evaluated eagerly to Lie-algebra elements.
BarElement phi_inverse(const PostLieLift& lift, const UEAElement& a);

/// Non-commutative Bell polynomial m_i = phi(x^{. i}) = x^{* i}.
UEAElement nc_bell(const PostLieLift& lift, const GVector& x, int i);

}  // namespace postlie
