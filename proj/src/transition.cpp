#include "agol3/transition.hpp"

namespace agol3 {

TrackState generator_step(const TrackState& s, Gen g) {
    Ordering c = s.a.compare(s.b);
    auto need_branch = [&]() {
        if (c == Ordering::equal)
            fail(Errc::tie_weights, "equal weights where the move branches");
        return c == Ordering::greater;
    };
    TrackState out = s;
    if (s.kind == TrackKind::M) {
        switch (g) {
            case Gen::sigma1:
                if (need_branch()) { out = {TrackKind::M, s.a - s.b, s.b}; }      // B^-1
                else               { out = {TrackKind::W, s.b - s.a, s.b}; }      // T
                break;
            case Gen::sigma1_inv:  out = {TrackKind::M, s.a + s.b, s.b}; break;   // B
            case Gen::sigma2:      out = {TrackKind::M, s.a, s.a + s.b}; break;   // A
            case Gen::sigma2_inv:
                if (need_branch()) { out = {TrackKind::W, s.a, s.a - s.b}; }      // V
                else               { out = {TrackKind::M, s.a, s.b - s.a}; }      // A^-1
                break;
        }
    } else {
        switch (g) {
            case Gen::sigma1:      out = {TrackKind::W, s.a + s.b, s.b}; break;   // B
            case Gen::sigma1_inv:
                if (need_branch()) { out = {TrackKind::W, s.a - s.b, s.b}; }      // B^-1
                else               { out = {TrackKind::M, s.b - s.a, s.b}; }      // T
                break;
            case Gen::sigma2:
                if (need_branch()) { out = {TrackKind::M, s.a, s.a - s.b}; }      // V
                else               { out = {TrackKind::W, s.a, s.b - s.a}; }      // A^-1
                break;
            case Gen::sigma2_inv:  out = {TrackKind::W, s.a, s.a + s.b}; break;   // A
        }
    }
    if (out.a.sign() <= 0 || out.b.sign() <= 0)
        fail(Errc::non_positive_weight, "generator step produced a non-positive weight");
    return out;
}

SyllableAction syllable_matrix(TrackKind kind_in, int gen, long long exp) {
    if (exp == 0) fail(Errc::invalid_exponent, "zero syllable exponent");
    Int e = exp > 0 ? exp : -exp;
    bool pos = exp > 0;
    if (gen == 1) {
        bool flips = (kind_in == TrackKind::M) == pos;
        if (flips)
            return {mat_B_pow(e - 1) * mat_T(), pos ? TrackKind::W : TrackKind::M, 1};
        return {mat_B_pow(e), pos ? TrackKind::W : TrackKind::M, 1};
    }
    bool flips = (kind_in == TrackKind::W) == pos;
    if (flips)
        return {mat_A_pow(e - 1) * mat_V(), pos ? TrackKind::M : TrackKind::W, 1};
    return {mat_A_pow(e), pos ? TrackKind::M : TrackKind::W, 1};
}

namespace {

std::optional<TransitionCandidate> fixed_kind_candidate(const BraidWord& w, bool mirrored) {
    for (TrackKind start : {TrackKind::M, TrackKind::W}) {
        TrackKind kind = start;
        Mat2 m = Mat2::identity();
        for (const auto& s : w.syllables()) {
            SyllableAction act = syllable_matrix(kind, s.gen, s.exp);
            m = act.matrix * m; // letters act left to right, matrices compose right to left
            kind = act.kind_out;
        }
        if (kind == start) return TransitionCandidate{m, start, mirrored};
    }
    return std::nullopt;
}

struct EigenData {
    QuadNum lambda, alpha;
    AlphaSlot slot;
};

std::optional<EigenData> eigen_extract(const Mat2& m, bool& saw_small_trace) {
    Int t = m.trace();
    if (abs_int(t) <= 2) {
        saw_small_trace = true;
        return std::nullopt;
    }
    auto [s, D] = squarefree_decompose(t * t - 4);
    QuadNum lambda = QuadNum::make(abs_int(t), s, 2, D);
    // Eigenvalue of largest absolute value, |mu| = lambda.
    QuadNum mu = QuadNum::make(t, t > 0 ? s : -s, 2, D);
    QuadNum v1, v2;
    if (m.m12 != 0) {
        v1 = QuadNum::rational(m.m12);
        v2 = mu - QuadNum::rational(m.m11);
    } else {
        v1 = mu - QuadNum::rational(m.m22);
        v2 = QuadNum::rational(m.m21);
    }
    int s1 = v1.sign(), s2 = v2.sign();
    if (s1 == 0 || s1 != s2) return std::nullopt;
    if (s1 < 0) {
        v1 = -v1;
        v2 = -v2;
    }
    Ordering c = v1.compare(v2);
    if (c == Ordering::equal)
        fail(Errc::tie_comparison, "eigenvector entries equal; alpha would be rational");
    if (c == Ordering::less) return EigenData{lambda, v1 / v2, AlphaSlot::first};
    return EigenData{lambda, v2 / v1, AlphaSlot::second};
}

} // namespace

TransitionCandidate transition_matrix(const BraidWord& w) {
    if (w.empty()) fail(Errc::no_invariant_track, "empty word");
    bool saw_small_trace = false;
    bool saw_candidate = false;
    for (bool mirrored : {false, true}) {
        BraidWord ww = mirrored ? mirror(w) : w;
        auto cand = fixed_kind_candidate(ww, mirrored);
        if (!cand) continue;
        saw_candidate = true;
        auto eig = eigen_extract(cand->matrix, saw_small_trace);
        if (eig) return *cand;
    }
    if (saw_small_trace && saw_candidate)
        fail(Errc::not_pseudo_anosov, "|trace| <= 2 for every fixed-kind candidate");
    fail(Errc::no_invariant_track, "no fixed-kind candidate has a positive eigenvector");
}

Mat2 case_matrix(long long x, long long y, long long z, bool flyped) {
    if (x == 0 || y == 0 || z == 0) fail(Errc::invalid_exponent, "case_matrix needs nonzero x, y, z");
    Int X = x > 0 ? x : -x, Y = y > 0 ? y : -y, Z = z > 0 ? z : -z;
    int c = (x > 0 ? 4 : 0) + (y > 0 ? 2 : 0) + (z > 0 ? 1 : 0); // Case index c+1
    if (!flyped) {
        switch (c + 1) {
            case 1: return {1 - Y, -X - Y + X * Y, 1 + Z - Y * Z, 1 - X - X * Z - Y * Z + X * Y * Z};
            case 2: return {-1 + Y, -X - Y + X * Y, 1 - Z + Y * Z, -1 + X - X * Z - Y * Z + X * Y * Z};
            case 3: return {-1 - Y, X - Y + X * Y, -1 - Z - Y * Z, -1 + X + X * Z - Y * Z + X * Y * Z};
            case 4: return {1 + Y, X - Y + X * Y, -1 + Z + Y * Z, 1 - X + X * Z - Y * Z + X * Y * Z};
            case 5: return {-1 + Y, -X + Y + X * Y, -1 - Z + Y * Z, -1 - X - X * Z + Y * Z + X * Y * Z};
            case 6: return {1 - Y, -X + Y + X * Y, -1 + Z - Y * Z, 1 + X - X * Z + Y * Z + X * Y * Z};
            case 7: return {1 + Y, X + Y + X * Y, 1 + Z + Y * Z, 1 + X + X * Z + Y * Z + X * Y * Z};
            case 8: return {-1 - Y, X + Y + X * Y, 1 - Z - Y * Z, -1 - X + X * Z + Y * Z + X * Y * Z};
        }
    } else {
        switch (c + 1) {
            case 1: return {1 - Y * Z, -X - Y + X * Y * Z, 1 + Z - Y * Z, 1 - X - Y - X * Z + X * Y * Z};
            case 2: return {-1 - Y * Z, X + Y + X * Y * Z, -1 + Z - Y * Z, -1 + X + Y - X * Z + X * Y * Z};
            case 3: return {-1 - Y * Z, X - Y + X * Y * Z, -1 - Z - Y * Z, -1 + X - Y + X * Z + X * Y * Z};
            case 4: return {1 - Y * Z, -X + Y + X * Y * Z, 1 - Z - Y * Z, 1 - X + Y + X * Z + X * Y * Z};
            case 5: return {-1 + Y * Z, -X + Y + X * Y * Z, -1 - Z + Y * Z, -1 - X + Y - X * Z + X * Y * Z};
            case 6: return {1 + Y * Z, X - Y + X * Y * Z, 1 - Z + Y * Z, 1 + X - Y - X * Z + X * Y * Z};
            case 7: return {1 + Y * Z, X + Y + X * Y * Z, 1 + Z + Y * Z, 1 + X + Y + X * Z + X * Y * Z};
            case 8: return {-1 + Y * Z, -X - Y + X * Y * Z, -1 + Z + Y * Z, -1 - X - Y + X * Z + X * Y * Z};
        }
    }
    fail(Errc::parse_error, "unreachable case index");
}

Int gamma_trace(long long x, long long y, long long z) {
    if (x == 0 || y == 0 || z == 0) fail(Errc::invalid_exponent, "gamma needs nonzero x, y, z");
    Int X = x, Y = y, Z = z;
    Int body = -2 - X - Y + X * Z + Y * Z + X * Y * Z;
    int s = ((x > 0) == (y > 0)) == (z > 0) ? 1 : -1;
    return s * body;
}

PAResult pa_extract(const Mat2& m, TrackKind start_kind, bool mirrored) {
    if (m.det() != 1) fail(Errc::decomposition_failure, "transition matrix must have det 1");
    bool small = false;
    auto eig = eigen_extract(m, small);
    if (small) fail(Errc::not_pseudo_anosov, "|trace| = " + abs_int(m.trace()).str() + " <= 2");
    if (!eig) fail(Errc::non_positive_eigenvector, "no positive Perron eigenvector");
    // Which of the four tracks carries the eigen-weights:
    //   M(1, a) and W(a, 1) are the plain family, M(a, 1) and W(1, a) the
    //   mirror (primed) family. A mirrored analysis describes the mirror
    //   word, so the original word's family is the opposite one.
    bool primed = (start_kind == TrackKind::M) == (eig->slot == AlphaSlot::first);
    if (mirrored) primed = !primed;
    PAResult res;
    res.matrix = m;
    res.trace = m.trace();
    res.lambda = eig->lambda;
    res.alpha = eig->alpha;
    res.n = eig->alpha.inverse().floor();
    res.primed = primed;
    res.start_kind = start_kind;
    res.alpha_slot = eig->slot;
    res.mirrored_analysis = mirrored;
    return res;
}

bool verify_invariant_track(const BraidWord& w, const PAResult& res) {
    BraidWord word = res.mirrored_analysis ? mirror(w) : w;
    QuadNum one = QuadNum::of_int(1);
    TrackState st{res.start_kind,
                  res.alpha_slot == AlphaSlot::first ? res.alpha : one,
                  res.alpha_slot == AlphaSlot::first ? one : res.alpha};
    const QuadNum a0 = st.a, b0 = st.b;
    try {
        for (const auto& s : word.syllables()) {
            Gen g = s.gen == 1 ? (s.exp > 0 ? Gen::sigma1 : Gen::sigma1_inv)
                               : (s.exp > 0 ? Gen::sigma2 : Gen::sigma2_inv);
            long long reps = s.exp > 0 ? s.exp : -s.exp;
            for (long long i = 0; i < reps; ++i) st = generator_step(st, g);
        }
    } catch (const Error& e) {
        if (e.code() == Errc::tie_weights || e.code() == Errc::non_positive_weight)
            fail(Errc::validity_failure, std::string("exact replay broke down: ") + e.what());
        throw;
    }
    return st.kind == res.start_kind && st.a == res.lambda * a0 && st.b == res.lambda * b0;
}

} // namespace agol3
