#pragma once

#include <functional>
#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ffcenter/commpoly.hpp"
#include "ffcenter/exact.hpp"
#include "ffcenter/tensorrep.hpp"

namespace ffc {

// A PBW word is a sequence of generator codes in nondecreasing order.
using Word = std::u16string;
using Code = char16_t;

class UElement {
public:
    using Terms = std::unordered_map<Word, Rational>;

    UElement() = default;
    UElement(const Rational& c) { if (!c.is_zero()) terms_[Word()] = c; }
    static UElement word(const Word& w, const Rational& c = 1);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Rational coeff(const Word& w) const;
    Rational constant_term() const { return coeff(Word()); }
    std::size_t max_length() const;

    void add(const Word& w, const Rational& c);
    UElement& operator+=(const UElement& o);
    UElement& operator-=(const UElement& o);
    UElement& operator*=(const Rational& c);
    UElement operator-() const;
    friend UElement operator+(UElement a, const UElement& b) { return a += b; }
    friend UElement operator-(UElement a, const UElement& b) { return a -= b; }
    friend UElement operator*(UElement a, const Rational& c) { return a *= c; }
    friend UElement operator*(const Rational& c, UElement a) { return a *= c; }
    friend bool operator==(const UElement& a, const UElement& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const UElement& a, const UElement& b) { return !(a == b); }

    // terms sorted by word, for deterministic output
    std::vector<std::pair<Word, Rational>> sorted() const;

private:
    Terms terms_;
};

// polynomial in tau, coefficient k of tau^k, tau written to the right
using TauPoly = std::vector<UElement>;

Rational critical_level(CaseTag tag, int N);

class Algebra {
public:
    static constexpr int kModeOffset = 512;
    static constexpr Code kCentral = 0xFFFF;

    struct Entry {
        int pair = -1;  // -1: the generator vanishes
        Rational coeff;
    };
    struct Bracket {
        std::vector<std::pair<int, Rational>> terms;  // canonical pair, coefficient (mode r+s)
        Rational central;                              // [F_p[r], F_q[s]] gets delta_{r,-s} r central K
    };

    Algebra(const Form& form, const Rational& level);
    static std::shared_ptr<const Algebra> make(CaseTag tag, int N);
    static std::shared_ptr<const Algebra> make(CaseTag tag, int N, const Rational& level);

    const Form& form() const { return form_; }
    CaseTag tag() const { return form_.tag; }
    int N() const { return form_.N; }
    const Rational& level() const { return level_; }
    int num_pairs() const { return static_cast<int>(pairs_.size()); }
    std::pair<int, int> pair(int p) const { return pairs_[static_cast<std::size_t>(p)]; }
    // F_{ij} = coeff F_{pair}, 0-based i, j
    const Entry& entry(int i, int j) const { return entries_[static_cast<std::size_t>(i * N() + j)]; }
    const Bracket& bracket(int p, int q) const { return brackets_[static_cast<std::size_t>(p * num_pairs() + q)]; }
    // central coefficient factor: 1 orthogonal, 2 symplectic
    int central_factor() const { return form_.tag == CaseTag::orthogonal ? 1 : 2; }

    Code code(int pair, int mode) const;
    int code_pair(Code c) const;
    int code_mode(Code c) const;
    std::string code_str(Code c) const;  // "F[i,j;r]", 1-based; "K" for the central element

    // [a, b] for single generators, as an element (central K appears as the letter kCentral)
    UElement commutator_codes(Code a, Code b) const;

    // normal ordering in U(g^ + C tau) minus tau: letters may be any codes including kCentral
    UElement normalize(const Word& w) const;
    UElement mul(const UElement& x, const UElement& y) const;
    UElement commutator(const UElement& x, const UElement& y) const;
    // normal ordering by repeated swaps of the leftmost adjacent inversion, no memo
    UElement normalize_leftmost(const Word& w) const;

    // x applied to v in the vacuum module at this level; v has negative modes only
    UElement vacuum_apply(const UElement& x, const UElement& v) const;
    UElement vacuum_apply_word(const Word& x, const UElement& v) const;

    // derivation [tau, .]
    UElement tau_bracket(const UElement& x) const;

    // (F_{ij}[r]) as an element, 0-based i, j
    UElement generator(int i, int j, int mode) const;

    // top PBW-length part, read as commuting variables; variable id is the code
    static CommPoly symbol(const UElement& x);

    std::string str(const UElement& x) const;
    std::vector<std::string> word_strings(const Word& w) const;

private:
    UElement left_mul(Code g, const Word& w, bool vacuum) const;
    UElement left_mul_element(Code g, const UElement& x, bool vacuum) const;

    Form form_;
    Rational level_;
    std::vector<std::pair<int, int>> pairs_;
    std::vector<Entry> entries_;
    std::vector<Bracket> brackets_;

    mutable std::shared_mutex memo_mu_;
    mutable std::unordered_map<Word, UElement> memo_[2];
};

// Product of factors each either tau or a labelled letter of mode r, written with tau to the right:
// output maps (letters left to right as (label, mode), tau degree) to coefficients. Letter order is kept.
struct TauFactor {
    bool is_tau = false;
    int label = 0;
    int mode = 0;
};
using LetterSeq = std::vector<std::pair<int, int>>;
std::map<std::pair<LetterSeq, int>, Rational> tau_expand(const std::vector<TauFactor>& factors);

// tau_order on generator symbols: factors carry canonical pair labels
TauPoly tau_order(const Algebra& alg, const std::vector<TauFactor>& factors);

}  // namespace ffc
