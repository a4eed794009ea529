#pragma once

#include <string>
#include <vector>

#include "agol3/error.hpp"

namespace agol3 {

/// One syllable sigma_gen^exp of a 3-braid word (gen is 1 or 2, exp != 0).
struct Syllable {
    int gen;
    long long exp;

    bool operator==(const Syllable&) const = default;
};

/// A word in B3 kept in syllable normal form: adjacent equal-generator
/// letters are merged and zero syllables dropped. No further group
/// reduction is applied.
class BraidWord {
public:
    BraidWord() = default;
    explicit BraidWord(std::vector<Syllable> syllables);

    const std::vector<Syllable>& syllables() const { return syllables_; }
    bool empty() const { return syllables_.empty(); }
    std::size_t size() const { return syllables_.size(); }

    std::string str() const;

    bool operator==(const BraidWord&) const = default;

private:
    std::vector<Syllable> syllables_;
};

/// Parses the ASCII grammar: whitespace-separated tokens `s1` or `s2`,
/// each optionally followed by `^` and a signed decimal exponent.
/// Example: "s1^-4 s2^-4 s1^-3 s2^-1".
BraidWord braid_parse(const std::string& text);

BraidWord mirror(const BraidWord& w);   // negate every exponent
BraidWord reverse(const BraidWord& w);  // read the word backwards
BraidWord inverse(const BraidWord& w);  // reverse and negate
BraidWord cyclic_shift(const BraidWord& w, long long k);

/// sigma1^x sigma2^eps sigma1^y sigma2^z. The eps slot is only
/// constrained to +-1 where an operation requires it (Ko-Lee test,
/// flype extraction).
struct FlypeForm {
    long long x;
    long long eps;
    long long y;
    long long z;

    bool operator==(const FlypeForm&) const = default;
};

/// Reads a word as a FlypeForm, accepting the cyclic rotations that bring
/// it to the sigma1-first shape; the second sigma2 exponent may be moved
/// into the eps slot by rotation. Requires |eps| = 1.
FlypeForm extract_flype_form(const BraidWord& w);

/// The flype move: sigma1^x sigma2^eps sigma1^y sigma2^z |->
/// sigma1^x sigma2^z sigma1^y sigma2^eps (the two sigma2 exponents swap).
FlypeForm flype(const FlypeForm& f);

BraidWord flype_form_word(const FlypeForm& f);

/// Ko-Lee non-degeneracy: the flype partners lie in distinct conjugacy
/// classes iff neither x nor y is in {0, eps, 2 eps, z + eps}, x != y,
/// and |z| >= 2.
bool kolee_nondegenerate(const FlypeForm& f);

} // namespace agol3
