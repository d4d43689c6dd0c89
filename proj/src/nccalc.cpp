#include "ncplush/nccalc.hpp"

#include <map>
#include <utility>

namespace ncplush {

namespace {

void check_index(const Polynomial& p, int j) {
    if (j < 1 || j > p.context())
        throw std::invalid_argument("ncplush: variable index " + std::to_string(j) +
                                    " out of range for g=" + std::to_string(p.context()));
}

// Single-replacement derivative of one word: every occurrence of the X-family
// letter (j, transposed) swaps to the matching H letter, one at a time.
void accumulate_partial(TermMap& out, const Word& w, const Rational& c, int j, bool transposed) {
    const auto& ls = w.letters();
    for (std::size_t i = 0; i < ls.size(); ++i) {
        const Letter& l = ls[i];
        if (l.family == Family::X && l.index == j && l.transposed == transposed) {
            std::vector<Letter> repl = ls;
            repl[i] = Letter(Family::H, j, transposed);
            Word img{std::move(repl)};
            auto [it, inserted] = out.emplace(std::move(img), c);
            if (!inserted) {
                it->second += c;
                if (it->second == 0) out.erase(it);
            }
        }
    }
}

Polynomial partial_family(const Polynomial& p, int j, bool transposed) {
    check_index(p, j);
    TermMap out;
    for (const auto& [w, c] : p.terms()) accumulate_partial(out, w, c, j, transposed);
    return Polynomial(std::move(out), p.context());
}

}  // namespace

Polynomial partial_x(const Polynomial& p, int j) { return partial_family(p, j, false); }

Polynomial partial_xt(const Polynomial& p, int j) { return partial_family(p, j, true); }

Polynomial derivative(const Polynomial& p) {
    Polynomial out(p.context());
    for (int j = 1; j <= p.context(); ++j) out = out + partial_x(p, j) + partial_xt(p, j);
    return out;
}

Polynomial lth_derivative(const Polynomial& p, int l) {
    if (l < 1) throw std::invalid_argument("ncplush: derivative order must be >= 1");
    Polynomial out(p.context());
    // t-degree -> partial word products of the expanded perturbation
    using Layer = std::map<Word, Rational, WordOrder>;
    for (const auto& [w, c] : p.terms()) {
        std::vector<Layer> layers(static_cast<std::size_t>(l) + 1);
        layers[0].emplace(Word(), Rational(1));
        for (const Letter& letter : w.letters()) {
            std::vector<Layer> next(layers.size());
            for (std::size_t d = 0; d < layers.size(); ++d) {
                for (const auto& [prefix, k] : layers[d]) {
                    // keep the letter: t-degree unchanged
                    {
                        Word extended = prefix.concat(Word({letter}));
                        auto [it, ins] = next[d].emplace(std::move(extended), k);
                        if (!ins) it->second += k;
                    }
                    // replace x-family by the direction letter: one t
                    if (letter.family == Family::X && d + 1 < layers.size()) {
                        Word extended =
                            prefix.concat(Word({Letter(Family::H, letter.index, letter.transposed)}));
                        auto [it, ins] = next[d + 1].emplace(std::move(extended), k);
                        if (!ins) it->second += k;
                    }
                }
            }
            layers = std::move(next);
        }
        Rational factorial(1);
        for (int i = 2; i <= l; ++i) factorial *= i;
        for (const auto& [word, k] : layers.back())
            out = out + Polynomial::monomial(c * k * factorial, word, p.context());
    }
    return out;
}

Polynomial complex_hessian(const Polynomial& p) {
    Polynomial inner(p.context());
    for (int j = 1; j <= p.context(); ++j) inner = inner + partial_xt(p, j);
    Polynomial out(p.context());
    for (int j = 1; j <= p.context(); ++j) out = out + partial_x(inner, j);
    return out;
}

Polynomial full_hessian(const Polynomial& p) { return lth_derivative(p, 2); }

}  // namespace ncplush
