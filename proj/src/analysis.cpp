#include "agol3/analysis.hpp"

namespace agol3 {

Analysis::Analysis(BraidWord word, PAResult pa)
    : word_(std::move(word)), pa_(std::move(pa)), run_(pa_.alpha, pa_.n, pa_.primed) {}

const CycleReport& Analysis::cycle(long long max_steps) {
    if (!cycle_) cycle_ = run_.detect_cycle(pa_.lambda, max_steps);
    return *cycle_;
}

namespace {

int failure_rank(Errc c) {
    if (c == Errc::validity_failure) return 2;
    if (c == Errc::no_invariant_track) return 1;
    return 0;
}

} // namespace

Analysis analyze(const BraidWord& w) {
    if (w.empty()) fail(Errc::no_invariant_track, "empty word");
    Errc worst = Errc::not_pseudo_anosov;
    auto bump = [&](Errc e) {
        if (failure_rank(e) > failure_rank(worst)) worst = e;
    };

    for (bool mirrored : {false, true}) {
        BraidWord ww = mirrored ? mirror(w) : w;
        for (TrackKind start : {TrackKind::M, TrackKind::W}) {
            TrackKind kind = start;
            Mat2 m = Mat2::identity();
            for (const auto& s : ww.syllables()) {
                SyllableAction act = syllable_matrix(kind, s.gen, s.exp);
                m = act.matrix * m;
                kind = act.kind_out;
            }
            if (kind != start) continue;
            try {
                PAResult res = pa_extract(m, start, mirrored);
                if (!verify_invariant_track(w, res)) {
                    bump(Errc::validity_failure);
                    continue;
                }
                return Analysis(w, std::move(res));
            } catch (const Error& e) {
                if (e.code() == Errc::non_positive_eigenvector)
                    bump(Errc::no_invariant_track);
                else if (e.code() == Errc::validity_failure)
                    bump(Errc::validity_failure);
                else if (e.code() == Errc::not_pseudo_anosov)
                    bump(Errc::not_pseudo_anosov);
                else
                    throw;
            }
        }
    }
    switch (worst) {
        case Errc::validity_failure:
            fail(Errc::validity_failure,
                 "exact replay contradicts the syllable composites (exponents too small)");
        case Errc::no_invariant_track:
            fail(Errc::no_invariant_track,
                 "no orientation yields a positive invariant track");
        default:
            fail(Errc::not_pseudo_anosov, "|trace| <= 2: word is not pseudo-Anosov");
    }
}

} // namespace agol3
