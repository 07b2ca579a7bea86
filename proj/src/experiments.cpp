#include "gpw/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>

#include "gpw/closure.hpp"
#include "gpw/normalize.hpp"

namespace gpw {

Rational Rational::of(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    const std::int64_t g = std::gcd(num, den);
    if (g != 0) {
        num /= g;
        den /= g;
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational{num, den};
}

std::string Rational::str() const {
    return std::to_string(num) + "/" + std::to_string(den);
}

bool all_pass(const std::vector<Check>& checks) {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

namespace {

std::size_t weak_bispecial_parameter(std::size_t k, const char* what) {
    const std::size_t j = k / 4;
    if (j < 1 || (k % 4 != 1 && k % 4 != 3)) {
        throw BadIndex(std::string(what) + ": index must be 4j+1 or 4j+3 with j >= 1, got " +
                       std::to_string(k));
    }
    return j;
}

std::vector<std::size_t> occurrences(WordView text, WordView pattern) {
    std::vector<std::size_t> out;
    if (pattern.empty() || pattern.size() > text.size()) return out;
    const auto* begin = text.data();
    const auto* end = text.data() + text.size();
    for (const auto* it = std::search(begin, end, pattern.begin(), pattern.end()); it != end;
         it = std::search(it + 1, end, pattern.begin(), pattern.end())) {
        out.push_back(static_cast<std::size_t>(it - begin));
    }
    return out;
}

bool is_central_factor(WordView whole, WordView factor) {
    if (factor.size() > whole.size() || (whole.size() - factor.size()) % 2 != 0) return false;
    const std::size_t pos = (whole.size() - factor.size()) / 2;
    return std::equal(factor.begin(), factor.end(), whole.begin() + pos);
}

Check make_check(std::string name, std::string expected, std::string actual) {
    const bool pass = expected == actual;
    return Check{std::move(name), std::move(expected), std::move(actual), pass};
}

Check make_flag_check(std::string name, bool pass, std::string detail = {}) {
    return Check{std::move(name), "ok", pass ? "ok" : (detail.empty() ? "failed" : detail), pass};
}

}  // namespace

Word weak_bispecial(std::size_t k) {
    const std::size_t j = weak_bispecial_parameter(k, "weak_bispecial");
    if (k % 4 == 1) {
        const PrefixChain chain = counterexample_chain(4 * j - 1);
        const Word w_back3 = chain.prefix(4 * j - 3);
        const Word w_back4 = chain.prefix(4 * j - 4);
        const Word w_back1 = chain.prefix(4 * j - 1);
        return apply_antimorphism(Antimorphism::R, w_back3) + strip_prefix(w_back4, w_back1) +
               strip_prefix(w_back4, w_back3);
    }
    const PrefixChain chain = counterexample_chain(4 * j + 1);
    const Word w_back1 = chain.prefix(4 * j - 1);
    const Word w_back2 = chain.prefix(4 * j - 2);
    const Word w_fwd1 = chain.prefix(4 * j + 1);
    return apply_antimorphism(Antimorphism::E, w_back1) + strip_prefix(w_back2, w_fwd1) +
           strip_prefix(w_back2, w_back1);
}

std::int64_t weak_bispecial_length(std::size_t k) {
    const std::size_t j = weak_bispecial_parameter(k, "weak_bispecial_length");
    const auto len = [](std::int64_t z) { return counterexample_length(z); };
    const std::int64_t j64 = static_cast<std::int64_t>(j);
    if (k % 4 == 1) return 2 * len(4 * j64 - 3) + len(4 * j64 - 1) - 2 * len(4 * j64 - 4);
    return 2 * len(4 * j64 - 1) + len(4 * j64 + 1) - 2 * len(4 * j64 - 2);
}

Word weak_bispecial_tail(std::size_t k) {
    const std::size_t j = weak_bispecial_parameter(k, "weak_bispecial_tail");
    if (k % 4 == 1) {
        const PrefixChain chain = counterexample_chain(4 * j - 1);
        return chain.prefix(4 * j - 1) +
               strip_prefix(chain.prefix(4 * j - 4), chain.prefix(4 * j - 3));
    }
    const PrefixChain chain = counterexample_chain(4 * j + 1);
    return chain.prefix(4 * j + 1) +
           strip_prefix(chain.prefix(4 * j - 2), chain.prefix(4 * j - 1));
}

std::vector<Check> verify_bispecial_lemmas(std::size_t j_max, std::size_t exhaustive_max_n) {
    if (j_max < 1) throw std::invalid_argument("verify_bispecial_lemmas: j_max >= 1");
    std::vector<Check> checks;

    // Window exact for extension sets at the longest length involved.
    const std::int64_t longest = weak_bispecial_length(4 * j_max + 3) + 2;
    const std::size_t window_k = counterexample_window_for_length(longest);
    const ExactnessWindow window = counterexample_exact_window(window_k);
    if (window.prefix_len_used > 8'000'000) {
        throw WindowTooSmall("verify_bispecial_lemmas: j_max needs a prefix of " +
                             std::to_string(window.prefix_len_used) + " letters");
    }
    const PrefixChain chain = counterexample_chain(window_k + 2);
    const WordView text = chain.word().view();

    for (std::size_t j = 1; j <= j_max; ++j) {
        for (std::size_t idx : {4 * j + 1, 4 * j + 3}) {
            const Word w = chain.prefix(idx);
            const BispecialReport rep = extension_sets(text, w.view());
            checks.push_back(make_flag_check(
                "strong w_" + std::to_string(idx),
                rep.cls == BispecialClass::strong && rep.bilateral_count() == 4,
                "B=" + std::to_string(rep.b_index) +
                    " bilat=" + std::to_string(rep.bilateral_count())));

            const Word s = weak_bispecial(idx);
            const BispecialReport srep = extension_sets(text, s.view());
            const bool pair_ok =
                idx % 4 == 1 ? srep.has_bilateral(1, 0) && srep.has_bilateral(0, 1)
                             : srep.has_bilateral(0, 0) && srep.has_bilateral(1, 1);
            checks.push_back(make_flag_check(
                "weak s_" + std::to_string(idx),
                srep.cls == BispecialClass::weak && srep.bilateral_count() == 2 && pair_ok,
                "B=" + std::to_string(srep.b_index)));

            const Antimorphism mirror = idx % 4 == 1 ? Antimorphism::E : Antimorphism::R;
            const BispecialReport irep =
                extension_sets(text, apply_antimorphism(mirror, s).view());
            checks.push_back(make_flag_check("weak image of s_" + std::to_string(idx),
                                             irep.cls == BispecialClass::weak));

            checks.push_back(make_flag_check(
                "s_" + std::to_string(idx) + " occurs in w_" + std::to_string(idx),
                !occurrences(chain.prefix_view(idx), s.view()).empty()));

            const bool pal_kind = idx % 4 == 1
                                      ? is_theta_palindrome(Antimorphism::R, s)
                                      : is_theta_palindrome(Antimorphism::E, s);
            checks.push_back(
                make_flag_check("s_" + std::to_string(idx) + " palindromic kind", pal_kind));
        }

        // Central-factor claims need the chain four steps further.
        const PrefixChain longer = counterexample_chain(4 * (j + 1) + 3);
        for (std::size_t idx : {4 * j + 1, 4 * j + 3}) {
            const Letter left = idx % 4 == 1 ? 1 : 0;
            const Word framed = Word{left} + longer.prefix(idx) + Word{0};
            checks.push_back(make_flag_check(
                "framed w_" + std::to_string(idx) + " central in w_" + std::to_string(idx + 4),
                is_central_factor(longer.prefix_view(idx + 4), framed.view())));
        }
    }

    // Ordering |s_{2k+1}| < |w_{2k+1}| < |s_{2k+3}| for the covered range.
    {
        bool ok = true;
        std::ostringstream detail;
        for (std::size_t m = 2; m + 1 <= 4 * j_max + 2; ++m) {
            const std::size_t idx = 2 * m + 1;
            const std::int64_t s_len = weak_bispecial_length(idx);
            const std::int64_t w_len = counterexample_length(static_cast<std::int64_t>(idx));
            const std::int64_t s_next = weak_bispecial_length(idx + 2);
            if (!(s_len < w_len && w_len < s_next)) {
                ok = false;
                detail << "fails at index " << idx;
                break;
            }
        }
        checks.push_back(make_flag_check("length ordering s < w < s", ok, detail.str()));
    }

    // Exhaustive weak-bispecial sweep: nothing weak besides the s-factors and
    // their images at any length up to the bound.
    {
        const std::size_t sweep_max =
            std::min<std::size_t>(exhaustive_max_n, static_cast<std::size_t>(window.max_exact_n) - 2);
        std::set<Word> expected_weak;
        for (std::size_t idx = 5; ; idx += 2) {
            if (idx % 4 != 1 && idx % 4 != 3) continue;
            if (weak_bispecial_length(idx) > static_cast<std::int64_t>(sweep_max)) break;
            const Word s = weak_bispecial(idx);
            expected_weak.insert(s);
            expected_weak.insert(apply_antimorphism(
                idx % 4 == 1 ? Antimorphism::E : Antimorphism::R, s));
        }
        bool ok = true;
        std::ostringstream detail;
        for (std::size_t n = 1; n <= sweep_max && ok; ++n) {
            for (const BispecialReport& rep : classify_bispecials(text, n)) {
                if (rep.cls == BispecialClass::weak && !expected_weak.contains(rep.factor)) {
                    ok = false;
                    detail << "unexpected weak bispecial at n=" << n << ": " << rep.factor.str();
                    break;
                }
            }
        }
        checks.push_back(make_flag_check("no other weak bispecials (n <= " +
                                             std::to_string(sweep_max) + ")",
                                         ok, detail.str()));
    }

    return checks;
}

std::vector<Check> length_sequences(std::size_t generated_k_max, std::size_t closed_form_k_max) {
    std::vector<Check> checks;
    const std::size_t top = 4 * generated_k_max + 4;
    const std::vector<std::int64_t> lens = counterexample_lengths(top);
    const PrefixChain chain = counterexample_chain(top);

    bool generated_ok = true;
    for (std::size_t k = 1; k <= top; ++k) {
        if (chain.length(k) != static_cast<std::size_t>(lens[k])) generated_ok = false;
    }
    checks.push_back(make_flag_check(
        "generated lengths match recurrences (k <= " + std::to_string(top) + ")", generated_ok));

    bool rec_ok = true;
    for (std::size_t k = 1; k <= generated_k_max; ++k) {
        const std::int64_t lhs = lens[4 * k + 4];
        const std::int64_t prev = 4 * k >= 4 ? lens[4 * k - 4] : 0;
        if (lhs != 14 * lens[4 * k] - prev + 4) rec_ok = false;
    }
    checks.push_back(
        make_flag_check("|w_{4k+4}| = 14|w_{4k}| - |w_{4k-4}| + 4", rec_ok));

    bool pair_ok = true;
    for (std::size_t i = 1; 4 * i + 5 <= top; ++i) {
        const std::int64_t s45 = weak_bispecial_length(4 * i + 5);
        const std::int64_t s43 = weak_bispecial_length(4 * i + 3);
        if (s45 - lens[4 * i + 3] != 2 * lens[4 * i] + 4) pair_ok = false;
        if (s43 - lens[4 * i + 1] != 2 * lens[4 * i - 2] - 6) pair_ok = false;
        if (s45 != 2 * lens[4 * i] + 2 * lens[4 * i + 2] + 1) pair_ok = false;
    }
    checks.push_back(make_flag_check("weak-bispecial length identities", pair_ok));

    // 6|w_{4k}| + 2 = (1+2sqrt3) tau^k + (1-2sqrt3) tau'^k, exactly:
    // the right side collapses to 2a + 12b for tau^k = a + b sqrt3.
    bool closed_ok = true;
    const std::vector<std::int64_t> long_lens = counterexample_lengths(4 * closed_form_k_max);
    for (std::size_t k = 1; k <= closed_form_k_max; ++k) {
        const QuadraticInt power = QuadraticInt::tau().pow(static_cast<unsigned>(k));
        const QuadraticInt rhs = QuadraticInt{1, 2} * power + QuadraticInt{1, -2} * power.conjugate();
        if (rhs.b != 0 || rhs.a != 6 * long_lens[4 * k] + 2) closed_ok = false;
    }
    checks.push_back(make_flag_check(
        "closed form over Z[sqrt(3)] (k <= " + std::to_string(closed_form_k_max) + ")",
        closed_ok));

    checks.push_back(make_check("tau * tau' = 1, tau + tau' = 14", "1,14", [] {
        const QuadraticInt p = QuadraticInt::tau() * QuadraticInt::tau_conj();
        const QuadraticInt s = QuadraticInt::tau() + QuadraticInt::tau_conj();
        std::ostringstream os;
        if (p == QuadraticInt{1, 0} && s == QuadraticInt{14, 0}) {
            os << p.a << "," << s.a;
        } else {
            os << "(" << p.a << "+" << p.b << "r3),(" << s.a << "+" << s.b << "r3)";
        }
        return os.str();
    }()));

    return checks;
}

double limsup_analytic_constant() {
    const QuadraticInt five{5, 0};
    const double num = ((QuadraticInt::tau_conj() + five) * (2 * QuadraticInt::tau())).to_double();
    const double den =
        ((QuadraticInt::tau() + five) * (QuadraticInt::tau() - QuadraticInt{1, 0})).to_double();
    return 4.0 + num / den;
}

bool limsup_constant_symbolic_check() {
    // constant - 4 = 1/sqrt(3): cross-multiplied, 3*num = den*sqrt(3).
    const QuadraticInt five{5, 0};
    const QuadraticInt num = (QuadraticInt::tau_conj() + five) * (2 * QuadraticInt::tau());
    const QuadraticInt den =
        (QuadraticInt::tau() + five) * (QuadraticInt::tau() - QuadraticInt{1, 0});
    return 3 * num == den * QuadraticInt{0, 1};
}

namespace {

std::int64_t limsup_sample_point(std::size_t k) {  // |s_{4k+5}| + 1
    return weak_bispecial_length(4 * k + 5) + 1;
}

std::size_t limsup_window_steps(std::size_t k) {
    return counterexample_window_for_length(limsup_sample_point(k)) + 2;
}

}  // namespace

std::size_t limsup_max_k_for_budget(std::int64_t letters) {
    std::size_t k = 0;
    while (counterexample_length(static_cast<std::int64_t>(limsup_window_steps(k + 1))) <=
           letters) {
        ++k;
    }
    return k;
}

LimsupReport limsup_series(std::size_t k_max, std::int64_t letter_budget) {
    if (k_max < 1) throw std::invalid_argument("limsup_series: k_max >= 1");
    const std::size_t steps = limsup_window_steps(k_max);
    const std::int64_t prefix_len = counterexample_length(static_cast<std::int64_t>(steps));
    if (prefix_len > letter_budget) {
        throw WindowTooSmall("limsup_series: sample k=" + std::to_string(k_max) + " needs " +
                             std::to_string(prefix_len) + " letters");
    }

    LimsupReport report;
    report.analytic_constant = limsup_analytic_constant();

    const PrefixChain chain = counterexample_chain(steps);
    SuffixAutomaton sam;
    sam.extend(chain.word().view());
    const std::int64_t n_top = limsup_sample_point(k_max);
    const std::vector<std::int64_t> counts = sam.factor_counts(static_cast<std::size_t>(n_top));

    for (std::size_t k = 1; k <= k_max; ++k) {
        const std::int64_t n = limsup_sample_point(k);
        const std::int64_t c = counts[static_cast<std::size_t>(n)];
        report.samples.push_back({k, n, c, Rational::of(c, n)});
    }
    return report;
}

namespace {

ImageKind image_kind_of(const Word& image, const Word& v) {
    if (image == v) return ImageKind::identity;
    if (image == apply_antimorphism(Antimorphism::E, v)) return ImageKind::exchange;
    if (image == apply_antimorphism(Antimorphism::R, v)) return ImageKind::reversal;
    return ImageKind::exchange_reversal;
}

}  // namespace

std::vector<OccurrenceRecord> classify_occurrences(const Word& v, std::size_t k) {
    if (v.empty()) throw std::invalid_argument("classify_occurrences: empty factor");
    const PrefixChain chain = counterexample_chain(k);
    const WordView text = chain.word().view();

    // Distinct images, each under its first-listed kind.
    std::vector<Word> images{v};
    for (Antimorphism t : {Antimorphism::E, Antimorphism::R}) {
        Word img = apply_antimorphism(t, v);
        if (std::find(images.begin(), images.end(), img) == images.end()) {
            images.push_back(std::move(img));
        }
    }
    {
        Word both = complement_word(v);
        if (std::find(images.begin(), images.end(), both) == images.end()) {
            images.push_back(std::move(both));
        }
    }

    std::map<Word, std::vector<std::size_t>> occs;
    std::size_t first_pos = text.size();
    const Word* first_word = nullptr;
    for (const Word& img : images) {
        occs[img] = occurrences(text, img.view());
        if (!occs[img].empty() && occs[img].front() < first_pos) {
            first_pos = occs[img].front();
            first_word = &img;
        }
    }
    if (first_word == nullptr) {
        throw FactorAbsent("classify_occurrences: no image of the factor occurs in w_" +
                           std::to_string(k));
    }

    // Mirror propagation of the generated set along the chain.
    struct Provenance {
        std::size_t step;
        std::optional<std::size_t> from;
    };
    std::map<std::pair<std::size_t, Word>, Provenance> generated;

    std::size_t first_step = 1;
    while (first_pos + v.size() > chain.length(first_step)) ++first_step;
    generated[{first_pos, *first_word}] = Provenance{first_step, std::nullopt};

    for (std::size_t step = first_step; step <= k; ++step) {
        const Antimorphism theta = chain.step(step).theta;
        const std::size_t len = chain.length(step);
        std::vector<std::pair<std::size_t, Word>> snapshot;
        snapshot.reserve(generated.size());
        for (const auto& [key, prov] : generated) snapshot.push_back(key);
        for (const auto& [pos, word] : snapshot) {
            if (pos + v.size() > len) continue;
            const std::size_t mirrored = len - pos - v.size();
            Word mirrored_word = apply_antimorphism(theta, word);
            assert(std::equal(mirrored_word.begin(), mirrored_word.end(),
                              text.begin() + static_cast<std::ptrdiff_t>(mirrored)));
            generated.emplace(std::pair{mirrored, std::move(mirrored_word)},
                              Provenance{step, pos});
        }
    }

    std::vector<OccurrenceRecord> records;
    for (const Word& img : images) {
        const ImageKind kind = image_kind_of(img, v);
        for (std::size_t pos : occs[img]) {
            OccurrenceRecord rec;
            rec.factor = img;
            rec.position = pos;
            rec.image = kind;
            auto it = generated.find({pos, img});
            rec.regular = it != generated.end();
            if (rec.regular) {
                rec.generated_at_step = it->second.step;
                rec.generated_from = it->second.from;
            }
            records.push_back(std::move(rec));
        }
    }
    std::sort(records.begin(), records.end(),
              [](const OccurrenceRecord& a, const OccurrenceRecord& b) {
                  return std::tie(a.position, a.factor) < std::tie(b.position, b.factor);
              });
    return records;
}

ScanRecord scan_single(const DirectiveBiSequence& bi, std::size_t n_max, Rational threshold,
                       std::size_t letter_budget) {
    const StableProfile sp = stable_complexity(bi, n_max, letter_budget);
    const DirectiveBiSequence canon = bi.canonical();

    ScanRecord rec;
    rec.delta = canon.delta_text();
    rec.theta = canon.theta_text();
    rec.n_checked = sp.stable_upto;
    rec.periodic = sp.periodic_evidence.has_value();
    rec.max_ratio = Rational::of(0, 1);
    for (std::size_t n = 1; n <= sp.stable_upto; ++n) {
        const std::int64_t c = sp.profile.value(n);
        const Rational ratio = Rational::of(c, static_cast<std::int64_t>(n));
        if (rec.max_ratio.less(ratio)) rec.max_ratio = ratio;
        if (n + 1 <= sp.stable_upto) {
            rec.max_first_diff = std::max(rec.max_first_diff, sp.profile.first_diff(n));
        }
        if (c * threshold.den >= threshold.num * static_cast<std::int64_t>(n)) {
            rec.violations.push_back(n);
        }
    }
    return rec;
}

std::vector<ScanRecord> scan_conjecture(const ScanOptions& options) {
    // Enumerate canonical representatives, deduplicated up to global letter
    // complement (which maps a word to its letterwise complement and leaves
    // complexity unchanged).
    std::vector<DirectiveBiSequence> todo;
    std::set<std::string> seen;
    auto consider = [&](const DirectiveBiSequence& bi) {
        const DirectiveBiSequence canon = bi.canonical();
        const DirectiveBiSequence comp = bi.complemented().canonical();
        const std::string key = canon.delta_text() + "|" + canon.theta_text();
        const std::string comp_key = comp.delta_text() + "|" + comp.theta_text();
        const std::string rep = std::min(key, comp_key);
        if (!seen.insert(rep).second) return;
        todo.push_back(rep == key ? canon : comp);
    };

    for (std::size_t pre_len = 0; pre_len <= options.preperiod_max; ++pre_len) {
        for (std::size_t per_len = 1; per_len <= options.period_max; ++per_len) {
            const std::size_t total = pre_len + per_len;
            std::vector<Step> steps(total);
            const std::uint64_t combos = std::uint64_t{1} << (2 * total);
            for (std::uint64_t code = 0; code < combos; ++code) {
                std::uint64_t bits = code;
                for (std::size_t i = 0; i < total; ++i, bits >>= 2) {
                    steps[i] = Step{static_cast<Letter>(bits & 1),
                                    (bits & 2) ? Antimorphism::E : Antimorphism::R};
                }
                consider(DirectiveBiSequence(
                    std::vector<Step>(steps.begin(), steps.begin() + static_cast<std::ptrdiff_t>(pre_len)),
                    std::vector<Step>(steps.begin() + static_cast<std::ptrdiff_t>(pre_len), steps.end())));
            }
        }
    }
    for (const DirectiveBiSequence& extra : options.extra) consider(extra);

    std::vector<ScanRecord> records(todo.size());
    const std::size_t jobs = std::max<std::size_t>(1, options.jobs);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < todo.size(); i = next.fetch_add(1)) {
            records[i] =
                scan_single(todo[i], options.n_max, options.threshold, options.letter_budget);
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }

    std::sort(records.begin(), records.end(), [](const ScanRecord& a, const ScanRecord& b) {
        return std::tie(a.delta, a.theta) < std::tie(b.delta, b.theta);
    });
    return records;
}

bool check_closure_minimality(const ClosureFn& fn, std::size_t max_len) {
    // Brute force: a theta-palindrome of length L with prefix w is fully
    // determined by w for |w| <= L <= 2|w|; take the shortest consistent one.
    auto oracle = [](Antimorphism theta, const Word& w) {
        const std::size_t n = w.size();
        for (std::size_t len = n; len <= 2 * n; ++len) {
            Word candidate;
            for (std::size_t i = 0; i < len; ++i) {
                if (i < n) {
                    candidate.push_back(w[i]);
                } else {
                    Letter m = candidate[len - 1 - i];
                    candidate.push_back(theta == Antimorphism::R ? m : complement(m));
                }
            }
            if (is_theta_palindrome(theta, candidate) && is_prefix(w.view(), candidate.view())) {
                return candidate;
            }
        }
        return w;  // unreachable: len = 2n always yields a theta-palindrome for theta = E
    };

    for (Antimorphism theta : {Antimorphism::R, Antimorphism::E}) {
        for (std::size_t n = 0; n <= max_len; ++n) {
            for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
                Word w;
                for (std::size_t i = 0; i < n; ++i) w.push_back((code >> i) & 1);
                if (fn(theta, w) != oracle(theta, w)) return false;
            }
        }
    }
    return true;
}

const std::vector<std::string>& appendix_prefixes() {
    static const std::vector<std::string> prefixes = {
        "10",
        "1010",
        "10101",
        "1010110101",
        "1010110101100101001010",
        "1010110101100101001010110101100101001010",
        "10101101011001010"
        "010101101011001010010101"
        "001010011010"
        "110101001010011010110101",
        "10101101011001010010101101011001010010101001010011010"
        "11010100101001101011010110010100101011010110010100101"
        "01001010011010110101001010011010110101",
        "10101101011001010010101101011001010010101001010011010"
        "11"
        "010100101001101011010110010100101011010110010100101"
        "01001010011010110101001010011010110101100101001010"
        "011"
        "01011010100101001101011010101101011001010010101101011"
        "00101001010011010110101001010011010110101011010110010"
        "1001010110101100101001010",
    };
    return prefixes;
}

std::vector<Check> verify_paper_suite() {
    std::vector<Check> checks;

    {  // published chain prefixes
        const PrefixChain chain = counterexample_chain(9);
        bool ok = true;
        for (std::size_t k = 1; k <= 9; ++k) {
            if (chain.prefix(k).str() != appendix_prefixes()[k - 1]) ok = false;
        }
        checks.push_back(make_flag_check("appendix prefixes w_1..w_9", ok));
    }

    {  // closure worked examples
        const std::vector<std::tuple<Antimorphism, std::string, std::string>> cases = {
            {Antimorphism::R, "0100", "010010"}, {Antimorphism::R, "0001", "0001000"},
            {Antimorphism::R, "010", "010"},     {Antimorphism::E, "0010", "001011"},
            {Antimorphism::E, "000", "000111"},  {Antimorphism::E, "0101", "0101"},
        };
        bool ok = true;
        for (const auto& [theta, in, expected] : cases) {
            if (theta_closure(theta, Word::from_string(in)).str() != expected) ok = false;
        }
        checks.push_back(make_flag_check("closure examples", ok));
    }

    checks.push_back(make_flag_check(
        "closure minimality vs brute force",
        check_closure_minimality(
            [](Antimorphism theta, const Word& w) { return theta_closure(theta, w); }, 9)));

    {  // normalization worked examples
        const NormalizationResult a =
            normalize(DirectiveBiSequence::parse("(011)^w", "(EER)^w"));
        checks.push_back(make_check("normalize (011)^w/(EER)^w", "01(10)^w (RE)^w",
                                    a.periodic_form_found
                                        ? a.normalized.delta_text() + " " + a.normalized.theta_text()
                                        : "no periodic form"));
        const NormalizationResult b = normalize(counterexample_bisequence());
        checks.push_back(make_check("normalize (1)^w/(EERR)^w", "1010(1)^w RERE(RREE)^w",
                                    b.periodic_form_found
                                        ? b.normalized.delta_text() + " " + b.normalized.theta_text()
                                        : "no periodic form"));
    }

    {  // E-standard words are Thue-Morse images of R-standard words
        bool ok = true;
        for (const char* delta : {"(01)^w", "(011)^w", "(0)^w", "10(011)^w"}) {
            const Word base = word_prefix(DirectiveBiSequence::parse(delta, "(R)^w"), 300);
            const Word image = word_prefix(DirectiveBiSequence::parse(delta, "(E)^w"), 600);
            if (Morphism::thue_morse().apply(base) != image) ok = false;
        }
        checks.push_back(make_flag_check("E-standard = Thue-Morse image of R-standard", ok));
    }

    {  // complexity of the counterexample word
        const std::size_t k10 = counterexample_window_for_length(10);
        const PrefixChain window10 = counterexample_chain(k10 + 2);
        const ComplexityProfile profile = substring_complexity(window10.word().view(), 10);
        checks.push_back(make_check("C(10) = 42", "42", std::to_string(profile.value(10))));
        checks.push_back(
            make_check("dC(9) = 6", "6", std::to_string(profile.first_diff(9))));
        checks.push_back(make_check("window for n = 10", "w_11 of length 1077",
                                    "w_" + std::to_string(k10 + 2) + " of length " +
                                        std::to_string(window10.word().size())));

        const PrefixChain window144 = counterexample_chain(13 + 2);
        const ComplexityProfile wide = substring_complexity(window144.word().view(), 144);
        bool above = true;
        for (std::size_t n = 10; n <= 144; ++n) {
            if (wide.value(n) <= 4 * static_cast<std::int64_t>(n)) above = false;
        }
        checks.push_back(make_flag_check("C(n) > 4n for n in [10,144]", above));
    }

    {  // bispecial structure
        const PrefixChain window = counterexample_chain(13 + 2);
        const WordView text = window.word().view();
        const std::vector<BispecialReport> at9 = classify_bispecials(text, 9);
        std::vector<std::string> weak;
        for (const BispecialReport& rep : at9) {
            if (rep.cls == BispecialClass::weak) weak.push_back(rep.factor.str());
        }
        std::sort(weak.begin(), weak.end());
        std::string got;
        for (const std::string& w : weak) got += (got.empty() ? "" : ",") + w;
        checks.push_back(
            make_check("weak bispecials at n = 9", "011010110,100101001", got));

        bool strong_ok = true;
        for (std::size_t idx : {5, 7}) {
            const BispecialReport rep = extension_sets(text, window.prefix_view(idx));
            if (rep.b_index != 1 || rep.bilateral_count() != 4) strong_ok = false;
        }
        bool weak_ok = true;
        for (std::size_t idx : {5, 7}) {
            const BispecialReport rep = extension_sets(text, weak_bispecial(idx).view());
            if (rep.b_index != -1) weak_ok = false;
        }
        checks.push_back(make_flag_check("B(w_5) = B(w_7) = +1", strong_ok));
        checks.push_back(make_flag_check("B(s_5) = B(s_7) = -1", weak_ok));
        checks.push_back(make_check(
            "ordering |s_5| < |w_5| < |s_7|", "9 < 22 < 24",
            std::to_string(weak_bispecial_length(5)) + " < " +
                std::to_string(counterexample_length(5)) + " < " +
                std::to_string(weak_bispecial_length(7))));
    }

    for (Check& c : length_sequences(3, 12)) checks.push_back(std::move(c));

    {  // limsup constant
        const double constant = limsup_analytic_constant();
        const bool close = std::abs(constant - 4.57735) < 1e-5;
        std::ostringstream os;
        os.precision(10);
        os << std::fixed << constant;
        checks.push_back(Check{"limsup constant = 4.57735 (1e-5)", "4.5773502692", os.str(),
                               close && limsup_constant_symbolic_check()});
    }

    {  // occurrence classification example: v = 110
        const Word v = Word::from_string("110");
        const std::vector<OccurrenceRecord> in_w4 = classify_occurrences(v, 4);
        bool first_ok = false, regular_ok = false;
        for (const OccurrenceRecord& rec : in_w4) {
            if (rec.position == 3 && rec.factor.str() == "011" && rec.regular) first_ok = true;
            if (rec.position == 4 && rec.factor.str() == "110" && rec.regular) regular_ok = true;
        }
        const std::vector<OccurrenceRecord> in_w5 = classify_occurrences(v, 5);
        bool irregular_ok = false;
        for (const OccurrenceRecord& rec : in_w5) {
            if (rec.position == 9 && rec.factor.str() == "110" && !rec.regular) irregular_ok = true;
        }
        checks.push_back(
            make_flag_check("occurrences of 110: 3,4 regular; 9 irregular",
                            first_ok && regular_ok && irregular_ok));
    }

    {  // all occurrences of w_4 and E(w_4) in w_8 are regular
        const PrefixChain chain = counterexample_chain(8);
        const Word w4 = chain.prefix(4);
        bool ok = true;
        for (const OccurrenceRecord& rec : classify_occurrences(w4, 8)) {
            if (!rec.regular) ok = false;
        }
        checks.push_back(make_flag_check("w_8: only regular occurrences of w_4, E(w_4)", ok));
    }

    return checks;
}

}  // namespace gpw
