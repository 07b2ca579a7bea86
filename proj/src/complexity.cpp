#include "gpw/complexity.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <string_view>
#include <unordered_map>

#include "gpw/closure.hpp"

namespace gpw {

namespace {
constexpr std::int32_t kNone = -1;
}

SuffixAutomaton::SuffixAutomaton() {
    len_.push_back(0);
    link_.push_back(kNone);
    next_.push_back({kNone, kNone});
}

void SuffixAutomaton::extend(Letter c) {
    auto make_state = [&](std::int32_t len, std::int32_t link, std::array<std::int32_t, 2> next) {
        len_.push_back(len);
        link_.push_back(link);
        next_.push_back(next);
        return static_cast<std::int32_t>(len_.size()) - 1;
    };

    const std::int32_t cur = make_state(len_[last_] + 1, 0, {kNone, kNone});
    std::int32_t p = last_;
    while (p != kNone && next_[p][c] == kNone) {
        next_[p][c] = cur;
        p = link_[p];
    }
    if (p != kNone) {
        const std::int32_t q = next_[p][c];
        if (len_[p] + 1 == len_[q]) {
            link_[cur] = q;
        } else {
            const std::int32_t clone = make_state(len_[p] + 1, link_[q], next_[q]);
            while (p != kNone && next_[p][c] == q) {
                next_[p][c] = clone;
                p = link_[p];
            }
            link_[q] = clone;
            link_[cur] = clone;
        }
    }
    last_ = cur;
    ++length_;
}

void SuffixAutomaton::extend(WordView w) {
    for (Letter c : w) extend(c);
}

std::vector<std::int64_t> SuffixAutomaton::factor_counts(std::size_t n_max) const {
    // Each state v != root contributes one distinct factor per length in
    // [len(link(v)) + 1, len(v)].
    std::vector<std::int64_t> diff(n_max + 2, 0);
    for (std::size_t v = 1; v < len_.size(); ++v) {
        const std::size_t lo = static_cast<std::size_t>(len_[link_[v]]) + 1;
        const std::size_t hi = static_cast<std::size_t>(len_[v]);
        diff[std::min(lo, n_max + 1)] += 1;
        diff[std::min(hi + 1, n_max + 1)] -= 1;
    }
    std::vector<std::int64_t> counts(n_max + 1, 0);
    counts[0] = 1;
    std::int64_t acc = 0;
    for (std::size_t n = 1; n <= n_max; ++n) {
        acc += diff[n];
        counts[n] = acc;
    }
    return counts;
}

ComplexityProfile substring_complexity(WordView p, std::size_t n_max) {
    if (n_max > p.size()) {
        throw std::invalid_argument("substring_complexity: n_max exceeds the prefix length");
    }
    SuffixAutomaton sam;
    sam.extend(p);
    return ComplexityProfile{sam.factor_counts(n_max), 0};
}

std::optional<std::size_t> morse_hedlund_periodicity(WordView p, std::size_t n_max) {
    const ComplexityProfile profile = substring_complexity(p, n_max);
    for (std::size_t n = 1; n <= n_max; ++n) {
        if (profile.value(n) <= static_cast<std::int64_t>(n)) return n;
    }
    return std::nullopt;
}

int BispecialReport::left_count() const { return std::popcount(left_mask); }
int BispecialReport::right_count() const { return std::popcount(right_mask); }
int BispecialReport::bilateral_count() const { return std::popcount(bilateral_mask); }

namespace {

BispecialClass classify(int left, int right, int bilateral, int b) {
    if (left < 2 || right < 2) return BispecialClass::not_bispecial;
    if (b == -1) return BispecialClass::weak;
    if (b == 1 && bilateral == 4) return BispecialClass::strong;
    return BispecialClass::neutral_bispecial;
}

void finish_report(BispecialReport& r) {
    r.b_index = r.bilateral_count() - r.right_count() - r.left_count() + 1;
    r.cls = classify(r.left_count(), r.right_count(), r.bilateral_count(), r.b_index);
}

struct ExtensionMasks {
    std::uint8_t left = 0, right = 0, bilateral = 0;
};

void record_occurrence(ExtensionMasks& m, WordView p, std::size_t pos, std::size_t n) {
    const bool has_left = pos > 0;
    const bool has_right = pos + n < p.size();
    if (has_left) m.left |= static_cast<std::uint8_t>(1u << p[pos - 1]);
    if (has_right) m.right |= static_cast<std::uint8_t>(1u << p[pos + n]);
    if (has_left && has_right) {
        m.bilateral |= static_cast<std::uint8_t>(1u << (2 * p[pos - 1] + p[pos + n]));
    }
}

}  // namespace

BispecialReport extension_sets(WordView p, WordView w) {
    const std::size_t n = w.size();
    ExtensionMasks masks;
    bool found = false;
    if (n <= p.size()) {
        const auto* begin = p.data();
        const auto* end = p.data() + p.size();
        for (const auto* it = std::search(begin, end, w.begin(), w.end()); it != end;
             it = std::search(it + 1, end, w.begin(), w.end())) {
            found = true;
            record_occurrence(masks, p, static_cast<std::size_t>(it - begin), n);
            if (n == 0) break;
        }
    }
    if (!found) throw FactorAbsent("extension_sets: the factor does not occur in the word");

    BispecialReport report{Word(w), masks.left, masks.right, masks.bilateral, 0,
                           BispecialClass::not_bispecial};
    finish_report(report);
    return report;
}

std::vector<BispecialReport> classify_bispecials(WordView p, std::size_t n) {
    if (n + 2 > p.size()) {
        throw std::invalid_argument("classify_bispecials: need n + 2 <= |p|");
    }
    const std::string_view text(reinterpret_cast<const char*>(p.data()), p.size());
    std::unordered_map<std::string_view, ExtensionMasks> by_factor;
    for (std::size_t pos = 0; pos + n <= p.size(); ++pos) {
        record_occurrence(by_factor[text.substr(pos, n)], p, pos, n);
    }

    std::vector<BispecialReport> reports;
    for (const auto& [factor_text, masks] : by_factor) {
        if (std::popcount(masks.left) < 2 || std::popcount(masks.right) < 2) continue;
        BispecialReport r;
        r.factor = Word(WordView(reinterpret_cast<const Letter*>(factor_text.data()),
                                 factor_text.size()));
        r.left_mask = masks.left;
        r.right_mask = masks.right;
        r.bilateral_mask = masks.bilateral;
        finish_report(r);
        reports.push_back(std::move(r));
    }
    std::sort(reports.begin(), reports.end(),
              [](const BispecialReport& a, const BispecialReport& b) {
                  return a.factor < b.factor;
              });
    return reports;
}

ExactnessWindow counterexample_exact_window(std::size_t k) {
    if (k < 5) throw std::invalid_argument("counterexample_exact_window: need k >= 5");
    return ExactnessWindow{counterexample_length(static_cast<std::int64_t>(k) + 2),
                           counterexample_length(static_cast<std::int64_t>(k) - 5),
                           ExactnessMethod::lemma_window};
}

std::size_t counterexample_window_for_length(std::int64_t n) {
    std::size_t k = 5;
    while (counterexample_length(static_cast<std::int64_t>(k) - 5) < n) ++k;
    return k;
}

StableProfile stable_complexity(const DirectiveBiSequence& bi, std::size_t n_max,
                                std::size_t letter_budget) {
    ChainBuilder builder(bi);
    SuffixAutomaton sam;

    // Values count as stable once unchanged over this many consecutive chain
    // steps; spanning two full directive periods guards against quiet
    // stretches of the chain.
    const std::size_t confirm = std::max<std::size_t>(2, 2 * bi.period().size());
    std::deque<std::vector<std::int64_t>> history;

    StableProfile out;
    while (true) {
        builder.advance();
        const WordView text = builder.view();
        if (text.size() > letter_budget) {
            out.hit_budget = true;
            break;
        }
        sam.extend(text.subspan(sam.length()));
        if (text.size() < n_max + 2) continue;

        history.push_back(sam.factor_counts(n_max + 1));
        if (history.size() > confirm + 1) history.pop_front();
        if (history.size() < confirm + 1) continue;

        std::size_t stable = 0;
        for (std::size_t n = 1; n <= n_max; ++n) {
            bool same = true;
            for (std::size_t h = 1; h < history.size() && same; ++h) {
                same = history[h][n] == history[0][n];
            }
            if (!same) break;
            stable = n;
        }
        out.stable_upto = stable;
        if (stable >= n_max) break;
    }

    const std::size_t absorbed = sam.length();
    const std::size_t table_max = std::min(n_max + 2, absorbed);
    out.profile = ComplexityProfile{sam.factor_counts(table_max), 0};
    out.prefix_len = absorbed;
    if (history.size() < confirm + 1) out.stable_upto = 0;
    for (std::size_t n = 1; n <= out.stable_upto; ++n) {
        if (out.profile.value(n) <= static_cast<std::int64_t>(n)) {
            out.periodic_evidence = n;
            break;
        }
    }
    return out;
}

}  // namespace gpw
