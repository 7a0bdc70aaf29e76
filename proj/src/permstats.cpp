#include "altgamma/permstats.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace altgamma {

namespace {

std::optional<EnumCaps>& cap_override() {
    static std::optional<EnumCaps> value;
    return value;
}

void check_cap(unsigned n, unsigned cap, const char* kind) {
    if (n > cap)
        throw std::invalid_argument(std::string("enumeration of ") + kind + " with n=" +
                                    std::to_string(n) + " exceeds the cap " + std::to_string(cap) +
                                    " (raise via ALTGAMMA_ENUM_CAP or --enum-cap)");
}

}  // namespace

EnumCaps enum_caps() {
    if (cap_override()) return *cap_override();
    EnumCaps caps;
    if (const char* env = std::getenv("ALTGAMMA_ENUM_CAP")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || v < 0)
            throw std::invalid_argument("ALTGAMMA_ENUM_CAP must be a nonnegative integer");
        caps.max_unsigned = caps.max_signed = static_cast<unsigned>(v);
    }
    return caps;
}

void override_enum_caps(std::optional<EnumCaps> caps) { cap_override() = caps; }

void for_each_perm(unsigned n, const std::function<void(const Word&)>& visit) {
    check_cap(n, enum_caps().max_unsigned, "S_n");
    Word w(n);
    std::iota(w.begin(), w.end(), 1);
    do {
        visit(w);
    } while (std::next_permutation(w.begin(), w.end()));
}

void for_each_signed_perm(unsigned n, const std::function<void(const Word&)>& visit) {
    check_cap(n, enum_caps().max_signed, "S^B_n");
    Word base(n), w(n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::iota(base.begin(), base.end(), 1);
        do {
            for (unsigned j = 0; j < n; ++j)
                w[j] = (mask >> (n - 1 - j)) & 1 ? -base[j] : base[j];
            visit(w);
        } while (std::next_permutation(base.begin(), base.end()));
    }
}

std::vector<Word> perms(unsigned n) {
    std::vector<Word> out;
    for_each_perm(n, [&](const Word& w) { out.push_back(w); });
    return out;
}

std::vector<Word> signed_perms(unsigned n) {
    std::vector<Word> out;
    for_each_signed_perm(n, [&](const Word& w) { out.push_back(w); });
    return out;
}

unsigned des(const Word& w) {
    unsigned count = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) ++count;
    return count;
}

unsigned des_b(const Word& w) {
    unsigned count = 0;
    int prev = 0;
    for (int v : w) {
        if (prev > v) ++count;
        prev = v;
    }
    return count;
}

unsigned altdes_a(const Word& w) {
    unsigned count = 0;
    // Pair j (1-indexed) compares w[j-1] and w[j].
    for (std::size_t j = 1; j < w.size(); ++j)
        if (j % 2 ? w[j - 1] > w[j] : w[j - 1] < w[j]) ++count;
    return count;
}

unsigned altdes_b(const Word& w) {
    unsigned count = 0;
    int prev = 0;
    // Pair j compares sigma(j) and sigma(j+1); sigma(0) = 0.
    for (std::size_t j = 0; j < w.size(); ++j) {
        if (j % 2 ? prev > w[j] : prev < w[j]) ++count;
        prev = w[j];
    }
    return count;
}

unsigned altasc_b(const Word& w) {
    unsigned count = 0;
    int prev = 0;
    for (std::size_t j = 0; j < w.size(); ++j) {
        if (j % 2 ? prev < w[j] : prev > w[j]) ++count;
        prev = w[j];
    }
    return count;
}

unsigned altdesb_remmel(const Word& w) {
    if (w.empty()) throw std::invalid_argument("altdesb_remmel: empty word");
    return altdes_b(w) - (w[0] > 0 ? 1 : 0);
}

unsigned lpk(const Word& w) {
    unsigned count = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        int left = i ? w[i - 1] : 0;
        if (left < w[i] && w[i] > w[i + 1]) ++count;
    }
    return count;
}

bool is_snake(const Word& w) {
    int prev = 0;
    for (std::size_t j = 0; j < w.size(); ++j) {
        if (j % 2 ? prev < w[j] : prev > w[j]) return false;
        prev = w[j];
    }
    return true;
}

bool is_alternating(const Word& w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (i % 2 ? w[i] > w[i + 1] : w[i] < w[i + 1]) return false;
    return true;
}

Word complement(const Word& w) {
    Word sorted = w;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("complement: duplicate letters");
    Word out;
    out.reserve(w.size());
    for (int v : w) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
        out.push_back(sorted[sorted.size() - 1 - (it - sorted.begin())]);
    }
    return out;
}

Word insert_complemented(const Word& prev, unsigned j, int letter) {
    unsigned n = static_cast<unsigned>(prev.size()) + 1;
    if (j > prev.size())
        throw std::invalid_argument("insert_complemented: position out of range");
    if (letter != static_cast<int>(n) && letter != -static_cast<int>(n))
        throw std::invalid_argument("insert_complemented: letter must be +n or -n");
    Word out(prev.begin(), prev.begin() + j);
    out.push_back(letter);
    Word suffix = complement(Word(prev.begin() + j, prev.end()));
    out.insert(out.end(), suffix.begin(), suffix.end());
    return out;
}

bool insertion_bijection_check(unsigned n) {
    if (n == 0 || n > 12)
        throw std::invalid_argument("insertion_bijection_check: need 1 <= n <= 12");
    // Pack each produced word into one key: 5 bits per letter.
    auto pack = [n](const Word& w) {
        std::uint64_t key = 0;
        for (int v : w)
            key = (key << 5) | (static_cast<std::uint64_t>(std::abs(v)) << 1) | (v < 0);
        return key;
    };
    std::vector<std::uint64_t> seen;
    std::uint64_t expected = std::uint64_t{1} << n;
    for (unsigned k = 1; k <= n; ++k) expected *= k;
    seen.reserve(expected);
    for_each_signed_perm(n - 1, [&](const Word& sigma) {
        for (unsigned j = 0; j <= sigma.size(); ++j) {
            seen.push_back(pack(insert_complemented(sigma, j, static_cast<int>(n))));
            seen.push_back(pack(insert_complemented(sigma, j, -static_cast<int>(n))));
        }
    });
    if (seen.size() != expected) return false;
    std::sort(seen.begin(), seen.end());
    return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

Stat stat_from_name(const std::string& name) {
    if (name == "des") return Stat::des;
    if (name == "desB") return Stat::des_b;
    if (name == "altdes") return Stat::altdes;
    if (name == "altdesB") return Stat::altdes_b;
    if (name == "altascB") return Stat::altasc_b;
    if (name == "altdesbRemmel") return Stat::altdesb_remmel;
    if (name == "lpk") return Stat::lpk;
    if (name == "snake") return Stat::snake;
    if (name == "alternating") return Stat::alternating;
    throw std::invalid_argument("unknown statistic '" + name + "'");
}

const std::vector<std::string>& stat_names() {
    static const std::vector<std::string> names = {
        "des", "desB", "altdes", "altdesB", "altascB",
        "altdesbRemmel", "lpk", "snake", "alternating"};
    return names;
}

bool stat_is_signed(Stat s) {
    switch (s) {
        case Stat::des_b:
        case Stat::altdes_b:
        case Stat::altasc_b:
        case Stat::altdesb_remmel:
        case Stat::snake:
            return true;
        default:
            return false;
    }
}

Poly distribution(Stat s, unsigned n) {
    auto value = [s](const Word& w) -> unsigned {
        switch (s) {
            case Stat::des: return des(w);
            case Stat::des_b: return des_b(w);
            case Stat::altdes: return altdes_a(w);
            case Stat::altdes_b: return altdes_b(w);
            case Stat::altasc_b: return altasc_b(w);
            case Stat::altdesb_remmel: return altdesb_remmel(w);
            case Stat::lpk: return lpk(w);
            case Stat::snake: return is_snake(w) ? 1 : 0;
            case Stat::alternating: return is_alternating(w) ? 1 : 0;
        }
        throw std::logic_error("distribution: unhandled statistic");
    };
    std::vector<std::uint64_t> counts(n + 2, 0);
    auto tally = [&](const Word& w) { ++counts.at(value(w)); };
    if (stat_is_signed(s))
        for_each_signed_perm(n, tally);
    else
        for_each_perm(n, tally);
    Poly p;
    for (unsigned k = 0; k < counts.size(); ++k)
        if (counts[k]) p += Rational(static_cast<long long>(counts[k])) * pow(Poly::variable("x"), k);
    return p;
}

}  // namespace altgamma
