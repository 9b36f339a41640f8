#include "postlie/partitions.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace postlie {

int SetPartition::n() const {
    int count = 0;
    for (const auto& b : blocks) count += static_cast<int>(b.size());
    return count;
}

std::string SetPartition::to_string() const {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < blocks.size(); ++i) {
        if (i) os << ",";
        os << "{";
        for (size_t j = 0; j < blocks[i].size(); ++j) {
            if (j) os << ",";
            os << blocks[i][j];
        }
        os << "}";
    }
    os << "}";
    return os.str();
}

namespace {

SetPartition canonicalize(std::vector<std::vector<int>> blocks) {
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  return a.back() < b.back();
              });
    return SetPartition{std::move(blocks)};
}

}  // namespace

std::vector<SetPartition> enumerate_partitions(int n) {
    if (n < 1 || n > 12) throw std::out_of_range("enumerate_partitions: n must be in 1..12");
    std::vector<SetPartition> result;
    // Restricted-growth strings: a[0] = 0, a[i] <= 1 + max(a[0..i-1]).
    std::vector<int> a(n, 0);
    while (true) {
        int nblocks = *std::max_element(a.begin(), a.end()) + 1;
        std::vector<std::vector<int>> blocks(nblocks);
        for (int i = 0; i < n; ++i) blocks[a[i]].push_back(i + 1);
        result.push_back(canonicalize(std::move(blocks)));
        // next RGS
        int i = n - 1;
        while (i > 0) {
            int maxprefix = *std::max_element(a.begin(), a.begin() + i);
            if (a[i] <= maxprefix) break;
            --i;
        }
        if (i == 0) break;
        ++a[i];
        std::fill(a.begin() + i + 1, a.end(), 0);
    }
    std::sort(result.begin(), result.end());
    return result;
}

Rational bell_number(int n) {
    if (n < 0) throw std::out_of_range("bell_number: n must be >= 0");
    std::vector<Rational> bell(n + 1);
    bell[0] = 1;
    for (int m = 0; m < n; ++m) {
        Rational acc = 0;
        for (int i = 0; i <= m; ++i) acc += binomial(m, i) * bell[i];
        bell[m + 1] = acc;
    }
    return bell[n];
}

void bar_accumulate(BarElement& acc, const BarWord& w, const Rational& c) {
    if (c == 0) return;
    auto it = acc.find(w);
    if (it == acc.end()) {
        acc.emplace(w, c);
    } else {
        it->second += c;
        if (it->second == 0) acc.erase(it);
    }
}

BarElement bar_add(const BarElement& a, const BarElement& b) {
    BarElement r = a;
    for (const auto& [w, c] : b) bar_accumulate(r, w, c);
    return r;
}

BarElement bar_scale(const Rational& c, const BarElement& a) {
    BarElement r;
    if (c == 0) return r;
    for (const auto& [w, v] : a) r.emplace(w, c * v);
    return r;
}

UEAElement x_pi(const PostLieLift& lift, const SetPartition& pi, const BarWord& letters) {
    if (pi.n() != static_cast<int>(letters.size()))
        throw std::invalid_argument("x_pi: partition size does not match word length");
    const Uea& U = lift.uea();
    UEAElement result = U.one();
    for (const auto& block : pi.blocks) {
        // x(block) = x_{k_1} |> (x_{k_2} |> (... |> x_{k_l}))
        GVector v = letters[block.back() - 1];
        for (int idx = static_cast<int>(block.size()) - 2; idx >= 0; --idx)
            v = lift.product().apply(letters[block[idx] - 1], v);
        result = U.mul(result, U.from_gvector(v));
    }
    return result;
}

UEAElement phi(const PostLieLift& lift, const BarWord& word) {
    const Uea& U = lift.uea();
    if (word.empty()) return U.one();
    if (word.size() > 12) throw std::length_error("phi: word too long");
    UEAElement result = U.zero();
    for (const auto& pi : enumerate_partitions(static_cast<int>(word.size())))
        result = uea_add(result, x_pi(lift, pi, word));
    return result;
}

UEAElement phi_recursive(const PostLieLift& lift, const BarWord& word) {
    const Uea& U = lift.uea();
    if (word.empty()) return U.one();
    BarWord rest(word.begin() + 1, word.end());
    UEAElement tail = phi_recursive(lift, rest);
    UEAElement head = U.from_gvector(word.front());
    return uea_add(U.mul(head, tail), lift.triangle(head, tail));
}

UEAElement phi_on_bar(const PostLieLift& lift, const BarElement& elem) {
    UEAElement result = lift.uea().zero();
    for (const auto& [w, c] : elem) result = uea_add(result, uea_scale(c, phi(lift, w)));
    return result;
}

namespace {

BarElement phi_inverse_word(const PostLieLift& lift, const BarWord& word) {
    const int n = static_cast<int>(word.size());
    BarElement result;
    if (n == 0) {
        bar_accumulate(result, {}, 1);
        return result;
    }
    bar_accumulate(result, word, 1);
    if (n == 1) return result;
    for (const auto& pi : enumerate_partitions(n)) {
        if (static_cast<int>(pi.blocks.size()) == n) continue;  // skip the minimal partition
        UEAElement xp = x_pi(lift, pi, word);
        result = bar_add(result, bar_scale(Rational(-1), phi_inverse(lift, xp)));
    }
    return result;
}

}  // namespace

BarElement phi_inverse(const PostLieLift& lift, const UEAElement& a) {
    const int d = lift.uea().algebra().dim();
    if (a.degree() > 12) throw std::length_error("phi_inverse: degree too high");
    BarElement result;
    for (const auto& [m, c] : a.terms) {
        BarWord word;
        for (int i : m) {
            GVector e = gvec_zero(d);
            e[i] = 1;
            word.push_back(std::move(e));
        }
        result = bar_add(result, bar_scale(c, phi_inverse_word(lift, word)));
    }
    return result;
}

UEAElement nc_bell(const PostLieLift& lift, const GVector& x, int i) {
    if (i < 0 || i > 8) throw std::out_of_range("nc_bell: order must be in 0..8");
    return phi(lift, BarWord(i, x));
}

}  // namespace postlie
