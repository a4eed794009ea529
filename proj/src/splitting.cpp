#include "agol3/splitting.hpp"

#include <unordered_map>

namespace agol3 {

const char* to_string(TrackType t) {
    switch (t) {
        case TrackType::I: return "I";
        case TrackType::II: return "II";
        case TrackType::Ip: return "I'";
        case TrackType::IIp: return "II'";
    }
    return "?";
}

TrackType primed_of(TrackType t) {
    switch (t) {
        case TrackType::I: return TrackType::Ip;
        case TrackType::II: return TrackType::IIp;
        case TrackType::Ip: return TrackType::I;
        case TrackType::IIp: return TrackType::II;
    }
    return t;
}

namespace {

SplitType decide_split(const FourTuple& t, const QuadNum& alpha) {
    // Type 1 iff (2y - w) alpha > z - 2x.
    QuadNum lhs = QuadNum::rational(2 * t.y - t.w) * alpha;
    Ordering c = lhs.compare(QuadNum::rational(t.z - 2 * t.x));
    if (c == Ordering::equal)
        fail(Errc::tie_comparison, "split comparison is exact equality; alpha is not irrational");
    return c == Ordering::greater ? SplitType::type1 : SplitType::type2;
}

FourTuple advance(const FourTuple& t, SplitType st) {
    if (st == SplitType::type1) return {t.z - t.x, t.w - t.y, t.x, t.y};
    return {t.x, t.y, t.z - t.x, t.w - t.y};
}

TrackType automaton(TrackType cur, SplitType st) {
    switch (cur) {
        case TrackType::I: return st == SplitType::type1 ? TrackType::Ip : TrackType::IIp;
        case TrackType::II: return st == SplitType::type1 ? TrackType::I : TrackType::II;
        case TrackType::Ip: return st == SplitType::type1 ? TrackType::I : TrackType::II;
        case TrackType::IIp: return st == SplitType::type1 ? TrackType::Ip : TrackType::IIp;
    }
    return cur;
}

Lr letter_of(int prev_sign, SplitType st) {
    // (+, 1) -> R, (+, 2) -> L, (-, 1) -> L, (-, 2) -> R
    if (prev_sign > 0) return st == SplitType::type1 ? Lr::R : Lr::L;
    return st == SplitType::type1 ? Lr::L : Lr::R;
}

} // namespace

SplitState split_step(const SplitState& s, const QuadNum& alpha) {
    SplitType st = decide_split(s.tuple, alpha);
    FourTuple nt = advance(s.tuple, st);
    SplitState out;
    out.k = s.k + 1;
    out.tuple = nt;
    out.track_type = automaton(s.track_type, st);
    out.sign = sgn(nt.x);
    out.split_in = st;
    out.letter = letter_of(s.sign, st);
    return out;
}

SplitState initial_fourtuple(const QuadNum& alpha, const Int& n, bool primed) {
    if (alpha.is_rational()) fail(Errc::rational_alpha, "alpha must be irrational");
    QuadNum lo = QuadNum::rational(1, n + 1), hi = QuadNum::rational(1, n);
    if (!(alpha > lo && alpha < hi))
        fail(Errc::alpha_out_of_range,
             "alpha not in (1/" + Int(n + 1).str() + ", 1/" + n.str() + ")");
    Ordering c = alpha.compare(QuadNum::rational(2, 2 * n + 1));
    if (c == Ordering::equal) fail(Errc::rational_alpha, "alpha equals 1/(n + 1/2)");
    SplitState s;
    s.k = 1;
    if (c == Ordering::less) {
        s.tuple = {-1, n + 1, 1, -n};
        s.split_in = SplitType::type1;
        s.track_type = primed ? TrackType::Ip : TrackType::I;
    } else {
        s.tuple = {1, -n, -1, n + 1};
        s.split_in = SplitType::type2;
        s.track_type = primed ? TrackType::IIp : TrackType::II;
    }
    s.sign = sgn(s.tuple.x);
    s.letter = letter_of(1, s.split_in); // epsilon_0 = +1 since x_0 = 1
    return s;
}

SplittingRun::SplittingRun(QuadNum alpha, Int n, bool primed)
    : alpha_(std::move(alpha)), n_(std::move(n)), primed_(primed) {}

void SplittingRun::extend_to(long long k) {
    if (states_.empty()) states_.push_back(initial_fourtuple(alpha_, n_, primed_));
    while (static_cast<long long>(states_.size()) < k)
        states_.push_back(split_step(states_.back(), alpha_));
}

const SplitState& SplittingRun::state(long long k) {
    if (k < 1) fail(Errc::budget_exceeded, "state index must be >= 1");
    extend_to(k);
    return states_[static_cast<std::size_t>(k - 1)];
}

std::vector<TrackType> SplittingRun::type_word(long long steps) {
    extend_to(steps);
    std::vector<TrackType> out;
    out.reserve(static_cast<std::size_t>(steps));
    for (long long k = 1; k <= steps; ++k) out.push_back(states_[k - 1].track_type);
    return out;
}

std::vector<Lr> SplittingRun::lr_word(long long steps) {
    extend_to(steps);
    std::vector<Lr> out;
    out.reserve(static_cast<std::size_t>(steps));
    for (long long k = 1; k <= steps; ++k) out.push_back(states_[k - 1].letter);
    return out;
}

QuadNum SplittingRun::ratio(long long k) {
    const SplitState& s = state(k);
    QuadNum num = QuadNum::rational(s.tuple.x) + QuadNum::rational(s.tuple.y) * alpha_;
    QuadNum den = QuadNum::rational(s.tuple.z) + QuadNum::rational(s.tuple.w) * alpha_;
    return num / den;
}

CycleReport SplittingRun::detect_cycle(const QuadNum& lambda, long long max_steps) {
    if (max_steps < 1) fail(Errc::budget_exceeded, "max_steps must be >= 1");
    std::unordered_map<std::string, long long> seen;
    for (long long k = 1; k <= max_steps; ++k) {
        const SplitState& s = state(k);
        QuadNum r = ratio(k);
        std::string key = std::string(to_string(s.track_type)) + "|" +
                          (s.sign > 0 ? "+" : "-") + "|" + r.str();
        auto [it, fresh] = seen.emplace(std::move(key), k);
        if (fresh) continue;

        long long p = it->second, q = k;
        long long base = q - p;
        auto leading = [&](long long idx) {
            const SplitState& st = state(idx);
            return QuadNum::rational(st.tuple.x) + QuadNum::rational(st.tuple.y) * alpha_;
        };
        QuadNum scale1 = leading(q) / leading(p);
        const QuadNum one = QuadNum::of_int(1);
        QuadNum scale_j = one;
        for (long long j = 1; j <= 128; ++j) {
            scale_j = scale_j * scale1;
            QuadNum acc = scale_j;
            for (long long kk = 1; kk <= j * base; ++kk) {
                acc = acc * lambda;
                if (acc == one) {
                    long long period = j * base;
                    extend_to(p + period);
                    CycleReport rep;
                    rep.preperiod = p;
                    rep.period = period;
                    for (long long t = p; t < p + period; ++t)
                        rep.periodic_type_word.push_back(states_[t - 1].track_type);
                    for (long long t = p + 1; t <= p + period; ++t)
                        rep.periodic_lr_word.push_back(states_[t - 1].letter);
                    rep.scale_factor = scale_j;
                    rep.lambda_power = kk;
                    return rep;
                }
            }
        }
        fail(Errc::scale_mismatch, "no lambda power closes the detected repeat");
    }
    fail(Errc::no_cycle_within_budget,
         "no cycle within " + std::to_string(max_steps) + " steps; raise the budget");
}

} // namespace agol3
