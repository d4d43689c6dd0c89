/*
 * ncint.hpp
 * ---------
 * NC integration: substitution sets, the two wed relations on monomials,
 * integrability tests with structured witnesses, antiderivatives, the nc
 * Frobenius test for simultaneous integrability, and recognition of
 * complex hessians.
 *
 * A word is admissible for the one-variable relation when it carries
 * exactly one direction letter (h_j or h_j'); for the Levi relation it
 * carries exactly one plain h_j and one transposed h_k'. Collapsing the
 * direction letters back to base variables keys the equivalence classes.
 */
#pragma once

#include <optional>
#include <set>
#include <vector>

#include "ncplush/freealg.hpp"

namespace ncplush {

using WordSet = std::set<Word, WordOrder>;

// All words obtained from m by replacing exactly one occurrence of `from`
// by `to`; empty when `from` is absent. Double substitutions commute.
WordSet subst_set(const Word& m, const Letter& from, const Letter& to);

struct WedVerdict {
    enum class Kind { NotWed, Wed, WedWrt };
    Kind kind;
    // Base variable x_j (possibly transposed) when the interchange fixes a
    // particular variable.
    std::optional<Letter> variable;

    bool wed() const { return kind != Kind::NotWed; }
};

// Whether interchanging a direction letter with a base letter maps m to mt.
// WedWrt when both words carry the same direction letter; Wed when only the
// collapses agree.
WedVerdict one_wed(const Word& m, const Word& mt);

// Both words carry one plain and one transposed direction letter and their
// double collapses agree.
bool levi_wed(const Word& m, const Word& mt);

enum class WedKind { OneWed, LeviWed };

struct WedClass {
    Word representative;  // earliest member in the fixed word order
    WordSet members;      // the complete class
    WedKind kind;
    Rational coefficient; // shared coefficient in the source polynomial
};

struct IntegrabilityCheck {
    enum class Failure { None, BadDirectionDegree, MissingMate, CoefficientMismatch };

    bool integrable = false;
    std::vector<WedClass> classes;  // on success, in representative order
    Failure failure = Failure::None;
    std::optional<Word> witness;    // offending monomial
    std::optional<Word> missing;    // absent or mismatched mate

    explicit operator bool() const { return integrable; }
};

struct NotIntegrableError : std::domain_error {
    NotIntegrableError(const std::string& what, std::optional<Word> w, std::optional<Word> m)
        : std::domain_error(what), witness(std::move(w)), missing(std::move(m)) {}
    std::optional<Word> witness;
    std::optional<Word> missing;
};

// Integrability against the full derivative: every word carries exactly one
// direction letter and every wed class is complete with one shared
// coefficient.
IntegrabilityCheck is_integrable(const Polynomial& p);

// Integrability against partial_x(., j): every word carries exactly one
// direction letter, which is h_j, and the classes with respect to x_j are
// complete.
IntegrabilityCheck is_integrable_in(const Polynomial& p, int j);

// Antiderivative with zero constant term: derivative(integrate(p)) == p.
// Throws NotIntegrableError when is_integrable(p) fails.
Polynomial integrate(const Polynomial& p);

// Antiderivative in x_j only: partial_x(integrate_in(p, j), j) == p.
Polynomial integrate_in(const Polynomial& p, int j);

// Components (f_1, ..., f_g) of a candidate gradient; f_i is homogeneous of
// degree 1 in h_i and otherwise contains only plain base variables.
struct FrobeniusSystem {
    std::vector<Polynomial> components;
};

struct FrobeniusResult {
    enum class Status { Integrable, ComponentNotIntegrable, CrossPartialMismatch };

    Status status;
    std::optional<Polynomial> potential;  // P with P' = sum of components
    int i = 0;                            // failing component (1-based)
    int j = 0;                            // second index for a cross-partial mismatch

    explicit operator bool() const { return status == Status::Integrable; }
};

// Gradient test: each f_i integrable in x_i and all cross partials agree.
// Equivalent to integrability of the sum; returns the potential on success.
// Throws std::invalid_argument on a malformed system.
FrobeniusResult frobenius_check(const FrobeniusSystem& sys);

struct HessianCheck {
    enum class Status { Yes, P1Violation, P2Violation };

    Status status;
    std::optional<Polynomial> antiderivative;  // complex_hessian of it gives q back
    std::optional<Word> violation;
    std::optional<Word> missing;  // P2: absent or mismatched Levi mate

    explicit operator bool() const { return status == Status::Yes; }
};

// Decides whether q is a complex hessian: each word carries exactly one h
// and one h' (P1) and every Levi class is complete with one shared
// coefficient (P2).
HessianCheck is_complex_hessian(const Polynomial& q);

}  // namespace ncplush
