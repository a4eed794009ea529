#pragma once

#include <optional>
#include <string>

#include "agol3/braid.hpp"
#include "agol3/mat2.hpp"
#include "agol3/quadnum.hpp"

namespace agol3 {

/// The two measured train-track shapes closed under the generator action.
enum class TrackKind { M, W };

inline const char* to_string(TrackKind k) { return k == TrackKind::M ? "M" : "W"; }

/// A concrete measured track M(a, b) or W(a, b) with exact positive weights.
struct TrackState {
    TrackKind kind;
    QuadNum a, b;
};

enum class Gen { sigma1, sigma1_inv, sigma2, sigma2_inv };

/// Applies one braid generator to a track, branching on the exact weight
/// comparison where the move demands it. Throws tie_weights on an equal
/// comparison (impossible for irrational weight ratios) and
/// non_positive_weight if a resulting weight is <= 0.
TrackState generator_step(const TrackState& s, Gen g);

struct SyllableAction {
    Mat2 matrix;
    TrackKind kind_out;
    int min_exp; // smallest exponent magnitude for which the composite can hold
};

/// Asymptotic composite of sigma_gen^exp on a track of the given kind:
///   s1^e:  M -> W via B^(e-1) T,  W -> W via B^e
///   s1^-e: W -> M via B^(e-1) T,  M -> M via B^e
///   s2^e:  W -> M via A^(e-1) V,  M -> M via A^e
///   s2^-e: M -> W via A^(e-1) V,  W -> W via A^e
/// Whether the composite really is the word's action is certified later by
/// verify_invariant_track.
SyllableAction syllable_matrix(TrackKind kind_in, int gen, long long exp);

enum class AlphaSlot { first, second };

/// The invariant-track data extracted from a transition matrix: dilatation,
/// MP-ratio and which of M(1,a), M(a,1), W(a,1), W(1,a) carries it.
struct PAResult {
    Mat2 matrix;
    Int trace;
    QuadNum lambda;
    QuadNum alpha;
    Int n;             // floor(1/alpha)
    bool primed;       // invariant track lies in the mirror family M'/W'
    TrackKind start_kind;
    AlphaSlot alpha_slot;
    bool mirrored_analysis; // matrix/start_kind describe the mirrored word
};

struct TransitionCandidate {
    Mat2 matrix;
    TrackKind start_kind;
    bool mirrored;
};

/// Composes the per-syllable matrices around the word for each start kind
/// and keeps the candidate whose end kind equals its start kind; if no
/// candidate on the word qualifies (trace, positive eigenvector), the
/// mirrored word is tried. Throws not_pseudo_anosov / no_invariant_track.
TransitionCandidate transition_matrix(const BraidWord& w);

/// Closed-form transition matrix M_i (or M_i' when flyped) for the word
/// sigma1^x sigma2^-sgn sigma1^y sigma2^z, the case selected by the sign
/// pattern of (x, y, z). Used as an oracle against transition_matrix.
Mat2 case_matrix(long long x, long long y, long long z, bool flyped);

/// gamma(x, y, z) = sgn(xyz) (-2 - x - y + xz + yz + xyz).
Int gamma_trace(long long x, long long y, long long z);

/// Eigen-data of a det-1 transition matrix: lambda = (|t| + sqrt(t^2-4))/2,
/// the positive eigenvector normalized so its larger entry is 1, alpha the
/// smaller entry, n = floor(1/alpha). Throws not_pseudo_anosov when
/// |t| <= 2 and non_positive_eigenvector when no positive eigenvector
/// exists.
PAResult pa_extract(const Mat2& m, TrackKind start_kind, bool mirrored);

/// Exact certificate: replays the word generator by generator from the
/// eigen-weights and checks the final track has the same kind with weights
/// exactly lambda times the initial ones. Runs on the mirrored word when
/// the analysis came from the mirror fallback. Branch failures
/// (tie/non-positive weights) surface as validity_failure.
bool verify_invariant_track(const BraidWord& w, const PAResult& res);

} // namespace agol3
