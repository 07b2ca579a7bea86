#include "gpw/bisequence.hpp"

#include <algorithm>
#include <numeric>

namespace gpw {

namespace {

struct ComponentText {
    std::string preperiod;
    std::string period;
};

ComponentText parse_component(std::string_view text, std::string_view alphabet,
                              std::string_view what) {
    const auto open = text.find('(');
    if (open == std::string_view::npos || text.size() < open + 4 ||
        text.substr(text.size() - 3) != ")^w") {
        throw InvalidBiSequence(std::string(what) +
                                " must match  symbols* \"(\" symbols+ \")^w\", got \"" +
                                std::string(text) + "\"");
    }
    ComponentText out;
    out.preperiod = std::string(text.substr(0, open));
    out.period = std::string(text.substr(open + 1, text.size() - 3 - open - 1));
    if (out.period.empty()) {
        throw InvalidBiSequence(std::string(what) + ": period block must be nonempty");
    }
    for (const std::string& part : {out.preperiod, out.period}) {
        for (char c : part) {
            if (alphabet.find(c) == std::string_view::npos) {
                throw InvalidBiSequence(std::string(what) + ": symbol '" + std::string(1, c) +
                                        "' not in {" + std::string(alphabet) + "}");
            }
        }
    }
    return out;
}

char component_at(const ComponentText& ct, std::size_t i) {  // 1-based
    if (i <= ct.preperiod.size()) return ct.preperiod[i - 1];
    return ct.period[(i - ct.preperiod.size() - 1) % ct.period.size()];
}

// Smallest d dividing v.size() such that v is a repetition of its first d
// elements.
template <typename Seq>
std::size_t primitive_root_length(const Seq& v) {
    const std::size_t n = v.size();
    for (std::size_t d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        bool ok = true;
        for (std::size_t i = d; i < n && ok; ++i) ok = v[i] == v[i - d];
        if (ok) return d;
    }
    return n;
}

// Reduces the period to its primitive root and rolls the cycle start as far
// left as possible, absorbing preperiod pairs into the cycle.
void reduce(std::vector<Step>& pre, std::vector<Step>& per) {
    per.resize(primitive_root_length(per));
    while (!pre.empty() && pre.back() == per.back()) {
        std::rotate(per.begin(), per.end() - 1, per.end());
        pre.pop_back();
    }
}

std::string component_text(const std::vector<Step>& pre, const std::vector<Step>& per,
                           char (*render)(const Step&)) {
    std::string p;
    for (const Step& s : pre) p.push_back(render(s));
    std::string q;
    for (const Step& s : per) q.push_back(render(s));
    q.resize(primitive_root_length(q));
    while (p.size() >= q.size() && p.compare(p.size() - q.size(), q.size(), q) == 0) {
        p.resize(p.size() - q.size());
    }
    return p + "(" + q + ")^w";
}

}  // namespace

DirectiveBiSequence::DirectiveBiSequence(std::vector<Step> preperiod, std::vector<Step> period)
    : preperiod_(std::move(preperiod)), period_(std::move(period)) {
    if (period_.empty()) throw InvalidBiSequence("directive bi-sequence needs a nonempty period");
}

DirectiveBiSequence DirectiveBiSequence::parse(std::string_view delta_text,
                                               std::string_view theta_text) {
    const ComponentText delta = parse_component(delta_text, "01", "delta");
    const ComponentText theta = parse_component(theta_text, "RE", "theta");

    const std::size_t pre = std::max(delta.preperiod.size(), theta.preperiod.size());
    const std::size_t per = std::lcm(delta.period.size(), theta.period.size());

    std::vector<Step> preperiod, period;
    preperiod.reserve(pre);
    period.reserve(per);
    for (std::size_t i = 1; i <= pre + per; ++i) {
        Step s{static_cast<Letter>(component_at(delta, i) - '0'),
               antimorphism_from_char(component_at(theta, i))};
        (i <= pre ? preperiod : period).push_back(s);
    }
    return DirectiveBiSequence(std::move(preperiod), std::move(period));
}

Step DirectiveBiSequence::at(std::size_t i) const {
    if (i == 0) throw std::out_of_range("directive bi-sequence indexing is 1-based");
    if (i <= preperiod_.size()) return preperiod_[i - 1];
    return period_[(i - preperiod_.size() - 1) % period_.size()];
}

DirectiveBiSequence DirectiveBiSequence::canonical() const {
    std::vector<Step> pre = preperiod_;
    std::vector<Step> per = period_;
    reduce(pre, per);
    return DirectiveBiSequence(std::move(pre), std::move(per));
}

bool DirectiveBiSequence::same_sequence(const DirectiveBiSequence& other) const {
    return canonical() == other.canonical();
}

DirectiveBiSequence DirectiveBiSequence::complemented() const {
    auto flip = [](std::vector<Step> v) {
        for (Step& s : v) s.letter = complement(s.letter);
        return v;
    };
    return DirectiveBiSequence(flip(preperiod_), flip(period_));
}

std::string DirectiveBiSequence::delta_text() const {
    return component_text(preperiod_, period_,
                          +[](const Step& s) { return static_cast<char>('0' + s.letter); });
}

std::string DirectiveBiSequence::theta_text() const {
    return component_text(preperiod_, period_,
                          +[](const Step& s) { return antimorphism_char(s.theta); });
}

}  // namespace gpw
