#pragma once

#include <optional>
#include <string>
#include <vector>

#include "agol3/quadnum.hpp"

namespace agol3 {

/// 4-tuple (x, y; z, w): the two smallest weights of a triple-weight track
/// are (x + y a)/2 < (z + w a)/2, a the MP-ratio.
struct FourTuple {
    Int x, y, z, w;

    bool operator==(const FourTuple&) const = default;
};

enum class TrackType { I, II, Ip, IIp };

const char* to_string(TrackType t);
TrackType primed_of(TrackType t); // mirror image: I <-> I', II <-> II'

enum class SplitType { type1 = 1, type2 = 2 };

enum class Lr { L, R };

inline char to_char(Lr v) { return v == Lr::L ? 'L' : 'R'; }

/// One step of the maximal-splitting sequence: the k-th triple-weight
/// track's tuple, homeomorphism type, sign, the split type that produced
/// it, and the Farey letter of the interval J_k.
struct SplitState {
    long long k;
    FourTuple tuple;
    TrackType track_type;
    int sign;            // sgn(tuple.x)
    SplitType split_in;
    Lr letter;           // letter of J_k
};

struct CycleReport {
    long long preperiod; // first index p of the repeating window (k-indexing from 1)
    long long period;
    std::vector<TrackType> periodic_type_word;
    std::vector<Lr> periodic_lr_word;
    QuadNum scale_factor; // (x_q + y_q a) / (x_p + y_p a), equals lambda^-lambda_power
    long long lambda_power;
};

/// Driver for the 4-tuple recurrence. States are grown lazily and indexed
/// from k = 1 (the first triple-weight track); the k = 0 seed
/// (1, -n; 0, 1) is internal.
class SplittingRun {
public:
    /// alpha in (1/(n+1), 1/n) irrational; primed selects the mirror
    /// family naming I'/II'.
    SplittingRun(QuadNum alpha, Int n, bool primed);

    const QuadNum& alpha() const { return alpha_; }
    const Int& n() const { return n_; }
    bool primed() const { return primed_; }

    /// State at index k >= 1, computing forward as needed.
    const SplitState& state(long long k);

    std::vector<TrackType> type_word(long long steps);
    std::vector<Lr> lr_word(long long steps);

    /// Canonical 4-ratio (x + y a)/(z + w a) of state k.
    QuadNum ratio(long long k);

    /// Finds the first repeat of (track type, sign, 4-ratio) and extends
    /// the window to the least multiple whose scale factor is an exact
    /// negative power of lambda.
    CycleReport detect_cycle(const QuadNum& lambda, long long max_steps = 10000);

private:
    QuadNum alpha_;
    Int n_;
    bool primed_;
    std::vector<SplitState> states_; // states_[i] is k = i + 1

    void extend_to(long long k);
};

/// Single-step form of the recurrence: advances one state by the
/// two-case recurrence and the type automaton.
SplitState split_step(const SplitState& s, const QuadNum& alpha);

/// Builds the k = 1 state directly from (alpha, n, primed), validating
/// 1/(n+1) < alpha < 1/n.
SplitState initial_fourtuple(const QuadNum& alpha, const Int& n, bool primed);

} // namespace agol3
