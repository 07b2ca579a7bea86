#include "gpw/normalize.hpp"

#include <cassert>
#include <deque>
#include <map>
#include <set>
#include <tuple>

#include "gpw/closure.hpp"

namespace gpw {

namespace {

// The rewritten stream after the prefix stage: finitely many explicit pairs
// followed by the untouched tail of the input.
struct RewrittenStream {
    const DirectiveBiSequence* input;
    std::vector<Step> prefix;
    std::size_t tail_from = 1;  // input index of the first untouched pair

    Step at(std::size_t pos) const {  // 1-based
        if (pos <= prefix.size()) return prefix[pos - 1];
        return input->at(tail_from + pos - prefix.size() - 1);
    }

    void materialize(std::size_t upto) {
        while (prefix.size() < upto) {
            prefix.push_back(input->at(tail_from));
            ++tail_from;
        }
    }

    // Index of `pos` in the input's own numbering, or 0 when pos still lies
    // in the rewritten prefix.
    std::size_t input_position(std::size_t pos) const {
        return pos <= prefix.size() ? 0 : tail_from + pos - prefix.size() - 1;
    }
};

// Scans the maximal leading run of (a, R) with a = delta_1. The scan is
// bounded: past prefix + preperiod + period the run repeats forever.
std::size_t leading_run(const RewrittenStream& s, Letter a) {
    const std::size_t cap = s.prefix.size() + s.input->preperiod().size() +
                            s.input->period().size() + 2;
    std::size_t run = 0;
    while (run < cap) {
        const Step step = s.at(run + 1);
        if (step.letter != a || step.theta != Antimorphism::R) break;
        ++run;
    }
    return run;
}

// One pass over the three prefix rules; returns the applied rule, if any.
std::optional<PrefixRuleApplication> apply_prefix_rule(RewrittenStream& s) {
    const Step s1 = s.at(1);
    const Letter a = s1.letter;

    // (a a', RR) -> (a a' a, RER)
    if (s1.theta == Antimorphism::R) {
        const Step s2 = s.at(2);
        if (s2.theta == Antimorphism::R && s2.letter == complement(a)) {
            s.materialize(2);
            s.prefix[1].theta = Antimorphism::E;
            s.prefix.insert(s.prefix.begin() + 2, Step{a, Antimorphism::R});
            return PrefixRuleApplication{1, 1};
        }
    }

    const std::size_t run = leading_run(s, a);

    // (a^i, R^{i-1} E) -> (a^i a', R^i E): positions 1..i-1 are (a,R).
    if (s.at(run + 1) == Step{a, Antimorphism::E}) {
        const std::size_t i = run + 1;
        s.materialize(i);
        s.prefix[i - 1].theta = Antimorphism::R;
        s.prefix.insert(s.prefix.begin() + static_cast<std::ptrdiff_t>(i),
                        Step{complement(a), Antimorphism::E});
        return PrefixRuleApplication{2, i};
    }

    // (a^i a' a', R^i EE) -> (a^i a' a' a, R^i ERE)
    if (run >= 1 && s.at(run + 1) == Step{complement(a), Antimorphism::E} &&
        s.at(run + 2) == Step{complement(a), Antimorphism::E}) {
        s.materialize(run + 2);
        s.prefix[run + 1].theta = Antimorphism::R;
        s.prefix.insert(s.prefix.begin() + static_cast<std::ptrdiff_t>(run + 2),
                        Step{a, Antimorphism::E});
        return PrefixRuleApplication{3, run};
    }

    return std::nullopt;
}

// Streaming sweep over the rewritten stream. Matches are tested at the
// window head; a match rewrites only positions >= head+2, so pairs leaving
// the window are final.
class SweepTransducer {
public:
    explicit SweepTransducer(RewrittenStream stream) : stream_(std::move(stream)) {}

    Step emit() {
        while (window_.size() < 3) pull();
        if (matches()) {
            const Step& head = window_[0];
            const Step& mid = window_[1];
            window_[2].theta = head.theta;
            window_.insert(window_.begin() + 3, Step{mid.letter, mid.theta});
            ++edit_count_;
        }
        const Step out = window_.front();
        window_.pop_front();
        return out;
    }

    std::size_t edit_count() const { return edit_count_; }

    // Cycle-detection key: phase of the next input pull within the input
    // period (only valid once the tail is being consumed), the pending
    // window, and the last two emitted pairs.
    using StateKey = std::tuple<std::size_t, std::vector<Step>, std::vector<Step>>;

    std::optional<StateKey> state_key(const std::vector<Step>& emitted) const {
        const std::size_t input_pos = stream_.input_position(next_pos_);
        const std::size_t pre = stream_.input->preperiod().size();
        if (input_pos <= pre) return std::nullopt;  // still inside aperiodic territory
        const std::size_t phase = (input_pos - pre - 1) % stream_.input->period().size();
        std::vector<Step> window(window_.begin(), window_.end());
        std::vector<Step> lookback;
        for (std::size_t i = emitted.size() > 2 ? emitted.size() - 2 : 0; i < emitted.size(); ++i) {
            lookback.push_back(emitted[i]);
        }
        return StateKey{phase, std::move(window), std::move(lookback)};
    }

private:
    void pull() {
        window_.push_back(stream_.at(next_pos_));
        ++next_pos_;
    }

    bool matches() const {
        const Step& p0 = window_[0];
        const Step& p1 = window_[1];
        const Step& p2 = window_[2];
        return p2.letter == complement(p1.letter) && p1.theta == opposite(p0.theta) &&
               p2.theta == opposite(p0.theta);
    }

    RewrittenStream stream_;
    std::deque<Step> window_;
    std::size_t next_pos_ = 1;
    std::size_t edit_count_ = 0;
};

struct TransducerRun {
    std::vector<Step> emitted;
    std::vector<PrefixRuleApplication> rules;
    std::size_t edit_count = 0;
    bool cycle_found = false;
    std::size_t cycle_start = 0;  // emitted[cycle_start..cycle_end) repeats forever
    std::size_t cycle_end = 0;
};

TransducerRun run_transducer(const DirectiveBiSequence& bi, std::size_t max_emit) {
    TransducerRun run;

    RewrittenStream stream{&bi, {}, 1};
    for (int guard = 0; guard < 10000; ++guard) {
        auto applied = apply_prefix_rule(stream);
        if (!applied) break;
        run.rules.push_back(*applied);
    }

    SweepTransducer sweep(std::move(stream));
    std::map<SweepTransducer::StateKey, std::size_t> seen;
    while (run.emitted.size() < max_emit) {
        run.emitted.push_back(sweep.emit());
        if (run.cycle_found) continue;
        auto key = sweep.state_key(run.emitted);
        if (!key) continue;
        auto [it, inserted] = seen.emplace(std::move(*key), run.emitted.size());
        if (!inserted) {
            run.cycle_found = true;
            run.cycle_start = it->second;
            run.cycle_end = run.emitted.size();
        }
    }
    run.edit_count = sweep.edit_count();
    return run;
}

DirectiveBiSequence periodic_form(const TransducerRun& run) {
    assert(run.cycle_found && run.cycle_start < run.cycle_end);
    const auto begin = run.emitted.begin();
    std::vector<Step> pre(begin, begin + static_cast<std::ptrdiff_t>(run.cycle_start));
    std::vector<Step> per(begin + static_cast<std::ptrdiff_t>(run.cycle_start),
                          begin + static_cast<std::ptrdiff_t>(run.cycle_end));
    return DirectiveBiSequence(std::move(pre), std::move(per)).canonical();
}

}  // namespace

NormalizationResult normalize_stream(const DirectiveBiSequence& bi, std::size_t min_len) {
    if (min_len < 1) throw std::invalid_argument("normalize_stream needs min_len >= 1");
    const std::size_t budget =
        std::max<std::size_t>(4 * min_len, 16 * (bi.preperiod().size() + bi.period().size()) + 64);
    TransducerRun run = run_transducer(bi, budget);

    NormalizationResult result{
        DirectiveBiSequence({}, {run.emitted.back()}), std::move(run.rules), run.edit_count,
        run.cycle_found,
        std::vector<Step>(run.emitted.begin(),
                          run.emitted.begin() +
                              static_cast<std::ptrdiff_t>(std::max(min_len, std::size_t{1}))),
    };
    if (run.cycle_found) {
        result.normalized = periodic_form(run);
    } else {
        // No periodic form within budget; keep the emitted prefix with a
        // repeated last pair so the field stays well formed. Callers must
        // check periodic_form_found.
        result.normalized = DirectiveBiSequence(
            std::vector<Step>(run.emitted.begin(), run.emitted.end() - 1), {run.emitted.back()});
    }
    return result;
}

NormalizationResult normalize(const DirectiveBiSequence& bi) {
    return normalize_stream(bi, 64);
}

DirectiveBiSequence detect_periodic_normal_form(const DirectiveBiSequence& bi,
                                                std::size_t budget) {
    const std::size_t floor = bi.preperiod().size() + 2 * bi.period().size();
    TransducerRun run = run_transducer(bi, std::max(budget, floor));
    if (!run.cycle_found) {
        throw NoCycleFound("no repeated transducer state within " + std::to_string(budget) +
                           " emitted pairs");
    }
    return periodic_form(run);
}

bool is_normalized_upto(const DirectiveBiSequence& bi, std::size_t len) {
    if (len < 1) throw std::invalid_argument("is_normalized_upto needs len >= 1");
    ChainBuilder builder(bi);
    std::set<std::size_t> chain_lengths{0};
    while (builder.length() < len) {
        builder.advance();
        chain_lengths.insert(builder.length());
    }
    const WordView u = builder.view();
    for (std::size_t m = 1; m <= len; ++m) {
        const WordView prefix = u.first(m);
        const bool pal = is_theta_palindrome(Antimorphism::R, prefix) ||
                         is_theta_palindrome(Antimorphism::E, prefix);
        if (pal && !chain_lengths.contains(m)) return false;
    }
    return true;
}

}  // namespace gpw
