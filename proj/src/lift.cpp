#include "postlie/lift.hpp"

#include <stdexcept>

namespace postlie {

PostLieLift::PostLieLift(const Uea& uea, PostLieProduct product)
    : uea_(uea), product_(std::move(product)) {
    if (product_.dim() != uea.algebra().dim())
        throw std::invalid_argument("post-Lie product dimension does not match algebra");
}

UEAElement PostLieLift::derivation(const GVector& x, const Monomial& w) const {
    UEAElement result;
    for (size_t i = 0; i < w.size(); ++i) {
        GVector image = product_.apply(x, [&] {
            GVector e = gvec_zero(product_.dim());
            e[w[i]] = 1;
            return e;
        }());
        for (int k = 0; k < product_.dim(); ++k) {
            if (image[k] == 0) continue;
            std::vector<int> word = w;
            word[i] = k;
            result = uea_add(result, uea_scale(image[k], uea_.normalize_word(word)));
        }
    }
    return result;
}

UEAElement PostLieLift::triangle_mono(const Monomial& a, const Monomial& b) const {
    if (a.empty()) {
        UEAElement r;
        if (static_cast<int>(b.size()) <= uea_.trunc()) r.terms.emplace(b, Rational(1));
        return r;
    }
    if (b.empty()) return uea_.zero();  // A |> 1 = eps(A) 1, and eps(A) = 0 here
    auto key = std::make_pair(a, b);
    auto it = triangle_cache_.find(key);
    if (it != triangle_cache_.end()) return it->second;

    UEAElement result;
    if (a.size() == 1) {
        GVector x = gvec_zero(product_.dim());
        x[a[0]] = 1;
        result = derivation(x, b);
    } else {
        // a = x . rest:  xA |> B = x |> (A |> B) - (x |> A) |> B
        Monomial head{a[0]};
        Monomial rest(a.begin() + 1, a.end());
        UEAElement inner = triangle_mono(rest, b);
        UEAElement first = triangle(uea_.letter(a[0]), inner);
        UEAElement x_tri_rest = triangle_mono(head, rest);
        UEAElement second = triangle(x_tri_rest, [&] {
            UEAElement be;
            be.terms.emplace(b, Rational(1));
            return be;
        }());
        result = uea_sub(first, second);
    }
    triangle_cache_.emplace(std::move(key), result);
    return result;
}

UEAElement PostLieLift::triangle(const UEAElement& a, const UEAElement& b) const {
    UEAElement result;
    for (const auto& [ma, ca] : a.terms)
        for (const auto& [mb, cb] : b.terms)
            result = uea_add(result, uea_scale(ca * cb, triangle_mono(ma, mb)));
    return result;
}

UEAElement PostLieLift::star(const UEAElement& a, const UEAElement& b) const {
    TensorElement delta = uea_.coproduct(a);
    UEAElement result;
    for (const auto& [pair, c] : delta.terms) {
        // A_(1) (A_(2) |> B)
        UEAElement rb;
        for (const auto& [mb, cb] : b.terms)
            rb = uea_add(rb, uea_scale(cb, triangle_mono(pair.second, mb)));
        UEAElement left;
        left.terms.emplace(pair.first, c);
        result = uea_add(result, uea_.mul(left, rb));
    }
    return result;
}

UEAElement PostLieLift::star_word(const std::vector<GVector>& letters) const {
    UEAElement result = uea_.one();
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
        result = star(uea_.from_gvector(*it), result);
    return result;
}

UEAElement PostLieLift::star_antipode_mono(const Monomial& m) const {
    if (m.empty()) return uea_.one();
    auto it = antipode_cache_.find(m);
    if (it != antipode_cache_.end()) return it->second;

    // From m_* o (id (x) S_*) o Delta = 0 on the augmentation ideal:
    //   S_*(w) = -w - sum over proper cuts  w_(1) * S_*(w_(2)).
    UEAElement w;
    w.terms.emplace(m, Rational(1));
    UEAElement result = uea_scale(Rational(-1), w);
    TensorElement delta = uea_.coproduct(w);
    for (const auto& [pair, c] : delta.terms) {
        if (pair.first.empty() || pair.second.empty()) continue;
        UEAElement left;
        left.terms.emplace(pair.first, c);
        result = uea_sub(result, star(left, star_antipode_mono(pair.second)));
    }
    antipode_cache_.emplace(m, result);
    return result;
}

UEAElement PostLieLift::star_antipode(const UEAElement& a) const {
    UEAElement result;
    for (const auto& [m, c] : a.terms)
        result = uea_add(result, uea_scale(c, star_antipode_mono(m)));
    return result;
}

}  // namespace postlie
