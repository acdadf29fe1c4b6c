#include "suzuki/plane_poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "suzuki/checked.hpp"

namespace suzuki {

namespace {

// Sort and drop pairs occurring an even number of times (GF(2) cancellation).
std::vector<PlaneTerm> collapse(std::vector<PlaneTerm> terms) {
    std::sort(terms.begin(), terms.end());
    std::vector<PlaneTerm> out;
    out.reserve(terms.size());
    for (size_t i = 0; i < terms.size();) {
        size_t j = i;
        while (j < terms.size() && terms[j] == terms[i]) ++j;
        if ((j - i) % 2 != 0) out.push_back(terms[i]);
        i = j;
    }
    return out;
}

void require_canonical(const SuzukiParams& p, const PlanePoly& f, const char* who) {
    if (f.known_canonical() || f.max_z_exp_below(p.q)) return;
    throw std::invalid_argument(std::string(who) + ": input is not curve-reduced");
}

} // namespace

PlanePoly PlanePoly::one() {
    return monomial(0, 0);
}

PlanePoly PlanePoly::monomial(int64_t y_exp, int64_t z_exp) {
    if (y_exp < 0 || z_exp < 0) throw std::invalid_argument("PlanePoly: negative exponent");
    PlanePoly f;
    f.terms_ = {PlaneTerm{y_exp, z_exp}};
    f.canonical_ = (z_exp == 0); // z_exp < q cannot be checked without params
    return f;
}

PlanePoly PlanePoly::from_terms(std::vector<PlaneTerm> terms, bool canonical_hint) {
    for (const auto& t : terms)
        if (t.y_exp < 0 || t.z_exp < 0)
            throw std::invalid_argument("PlanePoly: negative exponent");
    PlanePoly f;
    f.terms_ = collapse(std::move(terms));
    f.canonical_ = canonical_hint || f.terms_.empty();
    return f;
}

bool PlanePoly::max_z_exp_below(int64_t q) const {
    for (const auto& t : terms_)
        if (t.z_exp >= q) return false;
    return true;
}

PlanePoly operator+(const PlanePoly& f, const PlanePoly& g) {
    PlanePoly out;
    out.terms_.reserve(f.terms_.size() + g.terms_.size());
    std::set_symmetric_difference(f.terms_.begin(), f.terms_.end(), g.terms_.begin(),
                                  g.terms_.end(), std::back_inserter(out.terms_));
    out.canonical_ = f.canonical_ && g.canonical_;
    return out;
}

PlanePoly curve_reduce(const SuzukiParams& p, PlanePoly f) {
    // Each pass replaces y^i z^j (j >= q) by y^i z^{j-q+1} + y^{i+q0+q} z^{j-q}
    // + y^{i+q0+1} z^{j-q}; the maximal violating z-degree strictly decreases.
    bool dirty = true;
    while (dirty) {
        dirty = false;
        std::vector<PlaneTerm> next;
        next.reserve(f.terms_.size());
        for (const auto& t : f.terms_) {
            if (t.z_exp < p.q) {
                next.push_back(t);
                continue;
            }
            dirty = true;
            next.push_back({t.y_exp, t.z_exp - p.q + 1});
            next.push_back({checked_add(t.y_exp, p.q0 + p.q), t.z_exp - p.q});
            next.push_back({checked_add(t.y_exp, p.q0 + 1), t.z_exp - p.q});
        }
        f.terms_ = collapse(std::move(next));
    }
    f.canonical_ = true;
    return f;
}

PlanePoly mul(const SuzukiParams& p, const PlanePoly& f, const PlanePoly& g) {
    std::vector<PlaneTerm> prod;
    prod.reserve(f.term_count() * g.term_count());
    for (const auto& a : f.terms()) {
        for (const auto& b : g.terms()) {
            prod.push_back({checked_add(a.y_exp, b.y_exp), checked_add(a.z_exp, b.z_exp)});
        }
    }
    return curve_reduce(p, PlanePoly::from_terms(std::move(prod)));
}

PlanePoly pow(const SuzukiParams& p, const PlanePoly& base, int64_t e) {
    if (e < 0) throw std::invalid_argument("pow: negative exponent");
    PlanePoly result = PlanePoly::one();
    PlanePoly sq = curve_reduce(p, base);
    while (e > 0) {
        if (e & 1) result = mul(p, result, sq);
        e >>= 1;
        if (e > 0) sq = mul(p, sq, sq);
    }
    return result;
}

Embedder::Embedder(const SuzukiParams& p) : p_(p) {
    // h1 = z^{2q0} + y^{2q0+1},  h2 = z^{2q0} y + h1^{2q0}
    const PlanePoly h1 = curve_reduce(
        p_, PlanePoly::from_terms({{0, 2 * p.q0}, {2 * p.q0 + 1, 0}}));
    const PlanePoly h2 =
        mul(p_, PlanePoly::monomial(1, 0), PlanePoly::monomial(0, 2 * p.q0)) +
        pow(p_, h1, 2 * p.q0);
    h1_pows_ = {PlanePoly::one(), h1};
    h2_pows_ = {PlanePoly::one(), h2};
}

const PlanePoly& Embedder::h1_pow(int64_t c) {
    while (static_cast<int64_t>(h1_pows_.size()) <= c)
        h1_pows_.push_back(mul(p_, h1_pows_.back(), h1_pows_[1]));
    return h1_pows_[static_cast<size_t>(c)];
}

const PlanePoly& Embedder::h2_pow(int64_t d) {
    while (static_cast<int64_t>(h2_pows_.size()) <= d)
        h2_pows_.push_back(mul(p_, h2_pows_.back(), h2_pows_[1]));
    return h2_pows_[static_cast<size_t>(d)];
}

PlanePoly Embedder::embed(int64_t a, int64_t b, int64_t c, int64_t d) {
    if (a < 0 || b < 0 || c < 0 || d < 0)
        throw std::invalid_argument("embed: negative exponent");
    return mul(p_, curve_reduce(p_, PlanePoly::monomial(a, b)),
               mul(p_, h1_pow(c), h2_pow(d)));
}

PlanePoly embed_monomial(const SuzukiParams& p, int64_t a, int64_t b, int64_t c, int64_t d) {
    Embedder emb(p);
    return emb.embed(a, b, c, d);
}

PlanePoly cartier_oracle(const SuzukiParams& p, const PlanePoly& f) {
    require_canonical(p, f, "cartier_oracle");
    // Step 1: make every z-exponent even, WITHOUT curve-reducing afterwards.
    // Step 2: keep terms with odd y-exponent (the g^2*y part).
    // Step 3: halve exponents; z-exponents end at most q-1, so the result is
    // canonical as produced.
    std::vector<PlaneTerm> image;
    auto push_half = [&image](int64_t y_exp, int64_t z_exp) {
        if (y_exp % 2 == 1) image.push_back({(y_exp - 1) / 2, z_exp / 2});
    };
    for (const auto& t : f.terms()) {
        if (t.z_exp % 2 == 0) {
            push_half(t.y_exp, t.z_exp);
        } else {
            push_half(t.y_exp, t.z_exp - 1 + p.q);
            push_half(checked_add(t.y_exp, p.q0 + p.q), t.z_exp - 1);
            push_half(checked_add(t.y_exp, p.q0 + 1), t.z_exp - 1);
        }
    }
    return PlanePoly::from_terms(std::move(image), /*canonical_hint=*/true);
}

bool semilinearity_check(const SuzukiParams& p, const PlanePoly& f, const PlanePoly& g) {
    const PlanePoly fr = curve_reduce(p, f);
    const PlanePoly gr = curve_reduce(p, g);
    const PlanePoly twisted = cartier_oracle(p, mul(p, mul(p, fr, fr), gr));
    if (twisted != mul(p, fr, cartier_oracle(p, gr))) return false;
    const PlanePoly additive = cartier_oracle(p, fr + gr);
    return additive == cartier_oracle(p, fr) + cartier_oracle(p, gr);
}

} // namespace suzuki
