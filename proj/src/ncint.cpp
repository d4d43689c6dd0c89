#include "ncplush/ncint.hpp"

#include <algorithm>
#include <map>

#include "ncplush/nccalc.hpp"

namespace ncplush {

namespace {

// Positions of the direction letters in a word.
std::vector<std::size_t> h_positions(const Word& w) {
    std::vector<std::size_t> out;
    const auto& ls = w.letters();
    for (std::size_t i = 0; i < ls.size(); ++i)
        if (ls[i].family == Family::H) out.push_back(i);
    return out;
}

Word replace_at(const Word& w, std::size_t pos, const Letter& l) {
    std::vector<Letter> ls = w.letters();
    ls[pos] = l;
    return Word(std::move(ls));
}

// Collapse the unique direction letter back to its base variable. Requires
// exactly one H letter.
std::optional<Word> collapse_one(const Word& w) {
    auto hp = h_positions(w);
    if (hp.size() != 1) return std::nullopt;
    const Letter& l = w.letters()[hp[0]];
    return replace_at(w, hp[0], Letter(Family::X, l.index, l.transposed));
}

// Collapse the plain and the transposed direction letter. Requires exactly
// one of each.
std::optional<Word> collapse_two(const Word& w) {
    auto hp = h_positions(w);
    if (hp.size() != 2) return std::nullopt;
    const Letter& a = w.letters()[hp[0]];
    const Letter& b = w.letters()[hp[1]];
    if (a.transposed == b.transposed) return std::nullopt;
    Word out = replace_at(w, hp[0], Letter(Family::X, a.index, a.transposed));
    return replace_at(out, hp[1], Letter(Family::X, b.index, b.transposed));
}

// Full wed class of a collapse word: one replacement per base-letter
// position. These are exactly the terms of derivative(w).
WordSet one_wed_class_of(const Word& collapse) {
    WordSet out;
    const auto& ls = collapse.letters();
    for (std::size_t i = 0; i < ls.size(); ++i)
        if (ls[i].family == Family::X)
            out.insert(replace_at(collapse, i, Letter(Family::H, ls[i].index, ls[i].transposed)));
    return out;
}

// Class with respect to x_j: only plain x_j positions are interchanged.
WordSet one_wed_class_wrt(const Word& collapse, int j) {
    WordSet out;
    const auto& ls = collapse.letters();
    for (std::size_t i = 0; i < ls.size(); ++i)
        if (ls[i].family == Family::X && ls[i].index == j && !ls[i].transposed)
            out.insert(replace_at(collapse, i, Letter(Family::H, j, false)));
    return out;
}

// Full Levi class of a double-collapse word: one plain and one transposed
// replacement. These are exactly the terms of complex_hessian(w).
WordSet levi_class_of(const Word& collapse) {
    WordSet out;
    const auto& ls = collapse.letters();
    for (std::size_t i = 0; i < ls.size(); ++i) {
        if (ls[i].family != Family::X || ls[i].transposed) continue;
        Word first = replace_at(collapse, i, Letter(Family::H, ls[i].index, false));
        for (std::size_t k = 0; k < ls.size(); ++k) {
            if (ls[k].family != Family::X || !ls[k].transposed) continue;
            out.insert(replace_at(first, k, Letter(Family::H, ls[k].index, true)));
        }
    }
    return out;
}

// Shared grouping-and-completeness scan. `collapse` maps a word to its class
// key (nullopt = inadmissible word), `expected` lists the full class of a key.
template <typename CollapseFn, typename ExpectedFn>
IntegrabilityCheck check_classes(const Polynomial& p, CollapseFn collapse, ExpectedFn expected,
                                 WedKind kind) {
    IntegrabilityCheck res;
    // class key -> (earliest present member, its coefficient)
    std::map<Word, std::pair<Word, Rational>, WordOrder> groups;
    for (const auto& [w, c] : p.terms()) {
        auto key = collapse(w);
        if (!key) {
            res.failure = IntegrabilityCheck::Failure::BadDirectionDegree;
            res.witness = w;
            return res;
        }
        groups.emplace(*key, std::make_pair(w, c));  // first member in word order wins
    }
    for (const auto& [key, seen] : groups) {
        const auto& [first_member, coeff] = seen;
        WedClass cls;
        cls.kind = kind;
        cls.members = expected(key);
        cls.coefficient = coeff;
        cls.representative = *cls.members.begin();
        for (const Word& member : cls.members) {
            auto it = p.terms().find(member);
            if (it == p.terms().end()) {
                res.failure = IntegrabilityCheck::Failure::MissingMate;
                res.witness = first_member;
                res.missing = member;
                return res;
            }
            if (it->second != coeff) {
                res.failure = IntegrabilityCheck::Failure::CoefficientMismatch;
                res.witness = first_member;
                res.missing = member;
                return res;
            }
        }
        res.classes.push_back(std::move(cls));
    }
    res.integrable = true;
    return res;
}

[[noreturn]] void throw_not_integrable(const IntegrabilityCheck& chk, const std::string& label) {
    std::string msg = "ncplush: " + label;
    switch (chk.failure) {
        case IntegrabilityCheck::Failure::BadDirectionDegree:
            msg += ": monomial " + chk.witness->str() + " does not carry exactly one direction letter";
            break;
        case IntegrabilityCheck::Failure::MissingMate:
            msg += ": monomial " + chk.witness->str() + " is missing wed mate " + chk.missing->str();
            break;
        case IntegrabilityCheck::Failure::CoefficientMismatch:
            msg += ": wed mates " + chk.witness->str() + " and " + chk.missing->str() +
                   " have different coefficients";
            break;
        default:
            break;
    }
    throw NotIntegrableError(msg, chk.witness, chk.missing);
}

Polynomial sum_of_collapses(const IntegrabilityCheck& chk, int g) {
    Polynomial out(g);
    for (const WedClass& cls : chk.classes)
        out = out + Polynomial::monomial(cls.coefficient, *collapse_one(cls.representative), g);
    return out;
}

}  // namespace

WordSet subst_set(const Word& m, const Letter& from, const Letter& to) {
    WordSet out;
    const auto& ls = m.letters();
    for (std::size_t i = 0; i < ls.size(); ++i)
        if (ls[i] == from) out.insert(replace_at(m, i, to));
    return out;
}

WedVerdict one_wed(const Word& m, const Word& mt) {
    WedVerdict v{WedVerdict::Kind::NotWed, std::nullopt};
    if (m.size() != mt.size()) return v;
    auto hm = h_positions(m);
    auto ht = h_positions(mt);
    if (hm.size() != 1 || ht.size() != 1) return v;
    auto cm = collapse_one(m);
    auto ct = collapse_one(mt);
    if (*cm != *ct) return v;
    const Letter& lm = m.letters()[hm[0]];
    const Letter& lt = mt.letters()[ht[0]];
    if (lm == lt) {
        v.kind = WedVerdict::Kind::WedWrt;
        v.variable = Letter(Family::X, lm.index, lm.transposed);
    } else {
        v.kind = WedVerdict::Kind::Wed;
    }
    return v;
}

bool levi_wed(const Word& m, const Word& mt) {
    auto cm = collapse_two(m);
    auto ct = collapse_two(mt);
    return cm && ct && *cm == *ct;
}

IntegrabilityCheck is_integrable(const Polynomial& p) {
    return check_classes(p, collapse_one, one_wed_class_of, WedKind::OneWed);
}

IntegrabilityCheck is_integrable_in(const Polynomial& p, int j) {
    if (j < 1 || j > p.context())
        throw std::invalid_argument("ncplush: variable index out of range");
    auto collapse = [j](const Word& w) -> std::optional<Word> {
        auto hp = h_positions(w);
        if (hp.size() != 1) return std::nullopt;
        const Letter& l = w.letters()[hp[0]];
        if (l.index != j || l.transposed) return std::nullopt;
        return replace_at(w, hp[0], Letter(Family::X, j, false));
    };
    auto expected = [j](const Word& key) { return one_wed_class_wrt(key, j); };
    return check_classes(p, collapse, expected, WedKind::OneWed);
}

Polynomial integrate(const Polynomial& p) {
    IntegrabilityCheck chk = is_integrable(p);
    if (!chk) throw_not_integrable(chk, "not integrable");
    return sum_of_collapses(chk, p.context());
}

Polynomial integrate_in(const Polynomial& p, int j) {
    IntegrabilityCheck chk = is_integrable_in(p, j);
    if (!chk) throw_not_integrable(chk, "not integrable in x" + std::to_string(j));
    return sum_of_collapses(chk, p.context());
}

FrobeniusResult frobenius_check(const FrobeniusSystem& sys) {
    const int g = static_cast<int>(sys.components.size());
    if (g == 0) throw std::invalid_argument("ncplush: empty Frobenius system");
    for (int i = 1; i <= g; ++i) {
        const Polynomial& f = sys.components[static_cast<std::size_t>(i - 1)];
        if (f.context() != g)
            throw std::invalid_argument("ncplush: Frobenius component context must equal the "
                                        "number of components");
        for (const auto& [w, c] : f.terms()) {
            int directions = 0;
            for (const Letter& l : w.letters()) {
                if (l.transposed)
                    throw std::invalid_argument("ncplush: Frobenius component f" +
                                                std::to_string(i) +
                                                " contains a transposed letter");
                if (l.family == Family::H) {
                    ++directions;
                    if (l.index != i)
                        throw std::invalid_argument("ncplush: Frobenius component f" +
                                                    std::to_string(i) +
                                                    " contains direction letter h" +
                                                    std::to_string(l.index));
                }
            }
            if (directions != 1)
                throw std::invalid_argument("ncplush: Frobenius component f" + std::to_string(i) +
                                            " is not homogeneous of degree 1 in h" +
                                            std::to_string(i));
        }
    }

    FrobeniusResult res{FrobeniusResult::Status::Integrable, std::nullopt, 0, 0};
    for (int i = 1; i <= g; ++i) {
        if (!is_integrable_in(sys.components[static_cast<std::size_t>(i - 1)], i)) {
            res.status = FrobeniusResult::Status::ComponentNotIntegrable;
            res.i = i;
            return res;
        }
    }
    for (int i = 1; i <= g; ++i) {
        for (int j = i + 1; j <= g; ++j) {
            const Polynomial& fi = sys.components[static_cast<std::size_t>(i - 1)];
            const Polynomial& fj = sys.components[static_cast<std::size_t>(j - 1)];
            if (partial_x(fi, j) != partial_x(fj, i)) {
                res.status = FrobeniusResult::Status::CrossPartialMismatch;
                res.i = i;
                res.j = j;
                return res;
            }
        }
    }

    Polynomial delta(g);
    for (const Polynomial& f : sys.components) delta = delta + f;
    res.potential = integrate(delta);
    return res;
}

HessianCheck is_complex_hessian(const Polynomial& q) {
    HessianCheck res{HessianCheck::Status::Yes, std::nullopt, std::nullopt, std::nullopt};
    IntegrabilityCheck chk = check_classes(q, collapse_two, levi_class_of, WedKind::LeviWed);
    if (!chk) {
        if (chk.failure == IntegrabilityCheck::Failure::BadDirectionDegree) {
            res.status = HessianCheck::Status::P1Violation;
            res.violation = chk.witness;
        } else {
            res.status = HessianCheck::Status::P2Violation;
            res.violation = chk.witness;
            res.missing = chk.missing;
        }
        return res;
    }
    Polynomial f(q.context());
    for (const WedClass& cls : chk.classes)
        f = f + Polynomial::monomial(cls.coefficient, *collapse_two(cls.representative),
                                     q.context());
    res.antiderivative = f;
    return res;
}

}  // namespace ncplush
