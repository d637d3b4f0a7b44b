#include "lorenz/words.hpp"

#include <algorithm>
#include <charconv>

namespace lorenz {

TemplateSpec TemplateSpec::parse(std::string_view text) {
    TemplateSpec spec;
    if (!text.empty() && text.front() == '~') {
        spec.mirrored = true;
        text.remove_prefix(1);
    }
    auto comma = text.find(',');
    if (comma == std::string_view::npos)
        throw InvalidInput("template must look like 'm,n' or '~m,n', got '" +
                           std::string(text) + "'");
    auto parse_int = [&](std::string_view s, int& out) {
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
        if (ec != std::errc{} || p != s.data() + s.size())
            throw InvalidInput("bad twist count '" + std::string(s) + "'");
    };
    parse_int(text.substr(0, comma), spec.m);
    parse_int(text.substr(comma + 1), spec.n);
    return spec;
}

std::string TemplateSpec::str() const {
    return (mirrored ? "~" : "") + std::to_string(m) + "," + std::to_string(n);
}

static std::string least_rotation(std::string_view w) {
    // Booth would be O(n); doubling plus min over rotations is fine at these sizes.
    std::string best(w);
    for (int k = 1; k < static_cast<int>(w.size()); ++k) {
        std::string r = rotate(w, k);
        if (r < best) best = r;
    }
    return best;
}

OrbitWord::OrbitWord(std::string_view letters) {
    if (letters.empty()) throw EmptyWord();
    for (char c : letters) {
        if (c == 'x') ++x_;
        else if (c == 'y') ++y_;
        else throw InvalidInput("orbit words use letters x and y only, got '" +
                                std::string(letters) + "'");
    }
    // Primitive means not a proper power: w is a power of its smallest period
    // iff the period divides |w| and repetition reproduces w.
    int len = static_cast<int>(letters.size());
    for (int p = 1; p < len; ++p) {
        if (len % p != 0) continue;
        bool repeats = true;
        for (int i = p; i < len && repeats; ++i) repeats = letters[i] == letters[i - p];
        if (repeats) throw NonPrimitive(std::string(letters));
    }
    letters_ = least_rotation(letters);
}

OrbitWord OrbitWord::swapped_xy() const {
    std::string s = letters_;
    for (char& c : s) c = (c == 'x') ? 'y' : 'x';
    return OrbitWord(s);
}

std::string rotate(std::string_view w, int k) {
    int len = static_cast<int>(w.size());
    k = ((k % len) + len) % len;
    std::string r(w.substr(k));
    r += w.substr(0, k);
    return r;
}

std::vector<OrbitWord> enumerate_orbits(int max_len) {
    if (max_len < 1) return {};
    // Duval's algorithm: Lyndon words over {x,y} of length <= max_len, in lex
    // order. Lyndon words are exactly the canonical forms of primitive orbits.
    std::vector<OrbitWord> out;
    std::string w = "x";
    while (!w.empty()) {
        if (static_cast<int>(w.size()) <= max_len) out.emplace_back(w);
        // extend periodically to max_len, then increment the last non-'y'
        std::string t;
        for (int i = 0; i < max_len; ++i) t += w[i % w.size()];
        while (!t.empty() && t.back() == 'y') t.pop_back();
        if (!t.empty()) t.back() = 'y';
        w = t;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::strong_ordering twisted_compare(std::string_view s, std::string_view t,
                                     const TemplateSpec& spec) {
    if (s.empty() || t.empty()) throw EmptyWord();
    std::size_t bound = s.size() + t.size();
    int sign = +1;
    for (std::size_t k = 0; k < bound; ++k) {
        char a = s[k % s.size()];
        char b = t[k % t.size()];
        if (a != b) {
            bool a_less = (a == 'x');
            if (sign < 0) a_less = !a_less;
            return a_less ? std::strong_ordering::less : std::strong_ordering::greater;
        }
        sign *= spec.letter_sign(a);
    }
    return std::strong_ordering::equal;
}

}  // namespace lorenz
