#include "postlie/uea.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace postlie {

int UEAElement::degree() const {
    int d = 0;
    for (const auto& [m, c] : terms) d = std::max(d, static_cast<int>(m.size()));
    return d;
}

void uea_accumulate(UEAElement& acc, const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto it = acc.terms.find(m);
    if (it == acc.terms.end()) {
        acc.terms.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) acc.terms.erase(it);
    }
}

UEAElement uea_add(const UEAElement& a, const UEAElement& b) {
    UEAElement r = a;
    for (const auto& [m, c] : b.terms) uea_accumulate(r, m, c);
    return r;
}

UEAElement uea_sub(const UEAElement& a, const UEAElement& b) {
    UEAElement r = a;
    for (const auto& [m, c] : b.terms) uea_accumulate(r, m, -c);
    return r;
}

UEAElement uea_scale(const Rational& c, const UEAElement& a) {
    UEAElement r;
    if (c == 0) return r;
    for (const auto& [m, v] : a.terms) r.terms.emplace(m, c * v);
    return r;
}

Uea::Uea(LieAlgebraSpec L, int trunc) : L_(std::move(L)), trunc_(trunc) {
    if (trunc < 1) throw std::invalid_argument("truncation degree must be >= 1");
}

UEAElement Uea::one() const {
    UEAElement r;
    r.terms.emplace(Monomial{}, Rational(1));
    return r;
}

UEAElement Uea::scalar(const Rational& c) const {
    UEAElement r;
    if (c != 0) r.terms.emplace(Monomial{}, c);
    return r;
}

UEAElement Uea::letter(int i) const {
    if (i < 0 || i >= L_.dim()) throw std::out_of_range("basis index out of range");
    UEAElement r;
    r.terms.emplace(Monomial{i}, Rational(1));
    return r;
}

UEAElement Uea::from_gvector(const GVector& x) const {
    if (static_cast<int>(x.size()) != L_.dim())
        throw std::invalid_argument("from_gvector: dimension mismatch");
    UEAElement r;
    for (int i = 0; i < L_.dim(); ++i)
        if (x[i] != 0) r.terms.emplace(Monomial{i}, x[i]);
    return r;
}

GVector Uea::to_gvector(const UEAElement& a) const {
    GVector x = gvec_zero(L_.dim());
    for (const auto& [m, c] : a.terms) {
        if (m.size() != 1) throw std::invalid_argument("element is not of pure degree 1");
        x[m[0]] = c;
    }
    return x;
}

UEAElement Uea::normalize_word(const std::vector<int>& word) const {
    for (int i : word)
        if (i < 0 || i >= L_.dim()) throw std::out_of_range("basis index out of range");
    if (std::is_sorted(word.begin(), word.end())) {
        if (static_cast<int>(word.size()) > trunc_) return zero();
        UEAElement r;
        r.terms.emplace(word, Rational(1));
        return r;
    }
    auto cached = normalize_cache_.find(word);
    if (cached != normalize_cache_.end()) return cached->second;

    // First descent: swap and add the bracket correction.
    size_t p = 0;
    while (word[p] <= word[p + 1]) ++p;
    std::vector<int> swapped = word;
    std::swap(swapped[p], swapped[p + 1]);
    UEAElement result = normalize_word(swapped);
    for (int k = 0; k < L_.dim(); ++k) {
        const Rational& ck = L_.c(word[p], word[p + 1], k);
        if (ck == 0) continue;
        std::vector<int> shorter;
        shorter.reserve(word.size() - 1);
        shorter.insert(shorter.end(), word.begin(), word.begin() + p);
        shorter.push_back(k);
        shorter.insert(shorter.end(), word.begin() + p + 2, word.end());
        result = uea_add(result, uea_scale(ck, normalize_word(shorter)));
    }
    normalize_cache_.emplace(word, result);
    return result;
}

UEAElement Uea::mul_word(const Monomial& a, const Monomial& b) const {
    std::vector<int> concat = a;
    concat.insert(concat.end(), b.begin(), b.end());
    return normalize_word(concat);
}

UEAElement Uea::mul(const UEAElement& a, const UEAElement& b) const {
    UEAElement r;
    for (const auto& [ma, ca] : a.terms)
        for (const auto& [mb, cb] : b.terms)
            r = uea_add(r, uea_scale(ca * cb, mul_word(ma, mb)));
    return r;
}

TensorElement Uea::coproduct(const UEAElement& a) const {
    TensorElement r;
    for (const auto& [m, c] : a.terms) {
        const size_t n = m.size();
        // Unshuffle over position subsets; letters of a PBW monomial stay
        // sorted in each factor, so no renormalization is needed.
        for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
            Monomial left, right;
            for (size_t i = 0; i < n; ++i) {
                if (mask & (size_t{1} << i))
                    left.push_back(m[i]);
                else
                    right.push_back(m[i]);
            }
            auto key = std::make_pair(std::move(left), std::move(right));
            auto it = r.terms.find(key);
            if (it == r.terms.end()) {
                r.terms.emplace(std::move(key), c);
            } else {
                it->second += c;
                if (it->second == 0) r.terms.erase(it);
            }
        }
    }
    return r;
}

Rational Uea::counit(const UEAElement& a) const {
    auto it = a.terms.find(Monomial{});
    return it == a.terms.end() ? Rational(0) : it->second;
}

UEAElement Uea::antipode(const UEAElement& a) const {
    UEAElement r;
    for (const auto& [m, c] : a.terms) {
        std::vector<int> rev(m.rbegin(), m.rend());
        Rational sign = (m.size() % 2 == 0) ? Rational(1) : Rational(-1);
        r = uea_add(r, uea_scale(c * sign, normalize_word(rev)));
    }
    return r;
}

UEAElement Uea::exp_trunc(const UEAElement& x) const {
    if (counit(x) != 0) throw std::invalid_argument("exp: argument must be in the augmentation ideal");
    UEAElement result = one();
    UEAElement power = one();
    for (int n = 1; n <= trunc_; ++n) {
        power = mul(power, x);
        if (power.is_zero()) break;
        result = uea_add(result, uea_scale(Rational(1) / factorial(n), power));
    }
    return result;
}

UEAElement Uea::log_trunc(const UEAElement& g) const {
    if (counit(g) != 1) throw std::invalid_argument("log: argument must have unit coefficient 1");
    UEAElement z = uea_sub(g, one());
    UEAElement result;
    UEAElement power = one();
    for (int n = 1; n <= trunc_; ++n) {
        power = mul(power, z);
        if (power.is_zero()) break;
        Rational coeff = Rational((n % 2 == 1) ? 1 : -1, n);
        result = uea_add(result, uea_scale(coeff, power));
    }
    return result;
}

TensorElement Uea::tensor_mul(const TensorElement& a, const TensorElement& b) const {
    TensorElement r;
    for (const auto& [pa, ca] : a.terms)
        for (const auto& [pb, cb] : b.terms) {
            UEAElement left = uea_scale(ca * cb, mul_word(pa.first, pb.first));
            UEAElement right = mul_word(pa.second, pb.second);
            for (const auto& [ml, cl] : left.terms)
                for (const auto& [mr, cr] : right.terms) {
                    auto key = std::make_pair(ml, mr);
                    auto it = r.terms.find(key);
                    if (it == r.terms.end()) {
                        r.terms.emplace(key, cl * cr);
                    } else {
                        it->second += cl * cr;
                        if (it->second == 0) r.terms.erase(it);
                    }
                }
        }
    return r;
}

std::string Uea::to_string(const UEAElement& a) const {
    if (a.terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : a.terms) {
        if (!first) os << " + ";
        first = false;
        os << rational_to_string(c);
        if (m.empty()) {
            os << "*1";
        } else {
            for (int i : m) os << "*" << L_.labels()[i];
        }
    }
    return os.str();
}

}  // namespace postlie
