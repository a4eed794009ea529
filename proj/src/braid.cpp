#include "agol3/braid.hpp"

#include <cctype>
#include <cstdlib>

namespace agol3 {

namespace {

void push_merged(std::vector<Syllable>& out, int gen, long long exp) {
    if (exp == 0) return;
    if (!out.empty() && out.back().gen == gen) {
        out.back().exp += exp;
        if (out.back().exp == 0) out.pop_back();
        return;
    }
    out.push_back({gen, exp});
}

} // namespace

BraidWord::BraidWord(std::vector<Syllable> syllables) {
    for (const auto& s : syllables) {
        if (s.gen != 1 && s.gen != 2) fail(Errc::parse_error, "generator must be 1 or 2");
        push_merged(syllables_, s.gen, s.exp);
    }
}

std::string BraidWord::str() const {
    std::string out;
    for (const auto& s : syllables_) {
        if (!out.empty()) out += " ";
        out += "s" + std::to_string(s.gen);
        if (s.exp != 1) out += "^" + std::to_string(s.exp);
    }
    return out;
}

BraidWord braid_parse(const std::string& text) {
    std::vector<Syllable> syl;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        std::size_t tok_at = i;
        if (text[i] != 's')
            fail(Errc::parse_error, "expected 's1' or 's2' at position " + std::to_string(tok_at));
        ++i;
        if (i >= n || (text[i] != '1' && text[i] != '2'))
            fail(Errc::parse_error, "expected generator index 1 or 2 at position " + std::to_string(i));
        int gen = text[i] - '0';
        ++i;
        long long exp = 1;
        if (i < n && text[i] == '^') {
            ++i;
            std::size_t exp_at = i;
            bool neg = false;
            if (i < n && (text[i] == '-' || text[i] == '+')) {
                neg = text[i] == '-';
                ++i;
            }
            if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i])))
                fail(Errc::parse_error, "expected exponent digits at position " + std::to_string(exp_at));
            long long v = 0;
            while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
                v = v * 10 + (text[i] - '0');
                // the invariance certificate replays |exp| generator steps
                if (v > 1000000)
                    fail(Errc::invalid_exponent, "exponent too large at position " + std::to_string(exp_at));
                ++i;
            }
            exp = neg ? -v : v;
            if (exp == 0)
                fail(Errc::invalid_exponent, "zero exponent at position " + std::to_string(exp_at));
        }
        if (i < n && !std::isspace(static_cast<unsigned char>(text[i])))
            fail(Errc::parse_error, "unexpected character at position " + std::to_string(i));
        push_merged(syl, gen, exp);
    }
    return BraidWord(std::move(syl));
}

BraidWord mirror(const BraidWord& w) {
    std::vector<Syllable> out;
    for (const auto& s : w.syllables()) out.push_back({s.gen, -s.exp});
    return BraidWord(std::move(out));
}

BraidWord reverse(const BraidWord& w) {
    std::vector<Syllable> out(w.syllables().rbegin(), w.syllables().rend());
    return BraidWord(std::move(out));
}

BraidWord inverse(const BraidWord& w) { return mirror(reverse(w)); }

BraidWord cyclic_shift(const BraidWord& w, long long k) {
    const auto& s = w.syllables();
    if (s.empty()) return w;
    long long n = static_cast<long long>(s.size());
    long long r = ((k % n) + n) % n;
    std::vector<Syllable> out;
    out.reserve(s.size());
    for (long long i = 0; i < n; ++i) out.push_back(s[(i + r) % n]);
    return BraidWord(std::move(out));
}

FlypeForm extract_flype_form(const BraidWord& w) {
    const auto& s = w.syllables();
    if (s.size() != 4)
        fail(Errc::not_flype_form, "need exactly four syllables, got " + std::to_string(s.size()));
    // After merging, a 4-syllable word alternates generators; find the
    // sigma1-first readings (two cyclic rotations).
    std::vector<FlypeForm> readings;
    for (int rot : {0, 1, 2, 3}) {
        const Syllable& a = s[rot % 4];
        const Syllable& b = s[(rot + 1) % 4];
        const Syllable& c = s[(rot + 2) % 4];
        const Syllable& d = s[(rot + 3) % 4];
        if (a.gen == 1 && b.gen == 2 && c.gen == 1 && d.gen == 2)
            readings.push_back({a.exp, b.exp, c.exp, d.exp});
    }
    if (readings.empty()) fail(Errc::not_flype_form, "word does not alternate s1/s2");
    for (const auto& f : readings)
        if (f.eps == 1 || f.eps == -1) return f;
    fail(Errc::not_flype_form, "no rotation puts a +-1 exponent in the eps slot");
}

FlypeForm flype(const FlypeForm& f) { return {f.x, f.z, f.y, f.eps}; }

BraidWord flype_form_word(const FlypeForm& f) {
    return BraidWord({{1, f.x}, {2, f.eps}, {1, f.y}, {2, f.z}});
}

bool kolee_nondegenerate(const FlypeForm& f) {
    if (f.eps != 1 && f.eps != -1) fail(Errc::not_flype_form, "Ko-Lee test needs eps = +-1");
    auto in_exceptional = [&](long long v) {
        return v == 0 || v == f.eps || v == 2 * f.eps || v == f.z + f.eps;
    };
    return !in_exceptional(f.x) && !in_exceptional(f.y) && f.x != f.y &&
           (f.z >= 2 || f.z <= -2);
}

} // namespace agol3
