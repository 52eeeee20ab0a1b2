#include "zsearch/board.hpp"

#include <bit>
#include <sstream>

namespace zsearch {

Board::Board(int n) : n_(n) {
    if (n < 3 || n > 63) throw BadDimensions("board side must be in [3, 63], got " + std::to_string(n));
    mask_ = (1ull << n) - 1;
    rows_.assign(static_cast<std::size_t>(n), 0);
}

void Board::set(int i, int j, int v) {
    if (v)
        rows_[i] |= (1ull << j);
    else
        rows_[i] &= ~(1ull << j);
}

int Board::live_count() const {
    int c = 0;
    for (uint64_t r : rows_) c += std::popcount(r);
    return c;
}

uint64_t Board::hash() const {
    uint64_t h = 0x9e3779b97f4a7c15ull ^ static_cast<uint64_t>(n_);
    for (uint64_t r : rows_) {
        h ^= r + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string Rule::bs_notation() const {
    std::string s = "B";
    for (int k = 0; k <= 8; ++k)
        if (births_on(k)) s += static_cast<char>('0' + k);
    s += "/S";
    for (int k = 0; k <= 8; ++k)
        if (survives_on(k)) s += static_cast<char>('0' + k);
    return s;
}

Rule rule_life() { return Rule{1u << 3, (1u << 2) | (1u << 3), "Life"}; }
Rule rule_highlife() { return Rule{(1u << 3) | (1u << 6), (1u << 2) | (1u << 3), "HighLife"}; }
Rule rule_seeds() { return Rule{1u << 2, 0, "Seeds"}; }

const std::vector<Rule>& benchmark_rules() {
    static const std::vector<Rule> rules = {rule_life(), rule_highlife(), rule_seeds()};
    return rules;
}

std::optional<Rule> rule_by_name(const std::string& name) {
    for (const Rule& r : benchmark_rules())
        if (r.name == name) return r;
    return std::nullopt;
}

std::optional<Board> try_parse_seed(const std::string& text, std::string* reason) {
    auto fail = [&](const std::string& why) -> std::optional<Board> {
        if (reason) *reason = why;
        return std::nullopt;
    };
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) lines.push_back(cur);  // missing trailing newline is fine
    if (lines.size() != kSeedSide)
        return fail("expected 16 lines, got " + std::to_string(lines.size()));
    Board b(kSeedSide);
    for (int i = 0; i < kSeedSide; ++i) {
        if (lines[i].size() != kSeedSide)
            return fail("line " + std::to_string(i + 1) + " has length " + std::to_string(lines[i].size()));
        for (int j = 0; j < kSeedSide; ++j) {
            const char c = lines[i][j];
            if (c == '#')
                b.set(i, j, 1);
            else if (c != '.')
                return fail(std::string("bad character '") + c + "' at line " + std::to_string(i + 1));
        }
    }
    return b;
}

Board parse_seed(const std::string& text) {
    std::string reason;
    auto b = try_parse_seed(text, &reason);
    if (!b) throw InvalidSeed(reason);
    return *b;
}

std::string board_to_text(const Board& b) {
    std::string out;
    out.reserve(static_cast<std::size_t>(b.n()) * (b.n() + 1));
    for (int i = 0; i < b.n(); ++i) {
        for (int j = 0; j < b.n(); ++j) out += b.get(i, j) ? '#' : '.';
        out += '\n';
    }
    return out;
}

int horizon(int n) { return std::max(64, 4 * n); }

namespace {

inline uint64_t shl_wrap(uint64_t r, int n, uint64_t mask) {
    return ((r << 1) | (r >> (n - 1))) & mask;
}
inline uint64_t shr_wrap(uint64_t r, int n, uint64_t mask) {
    return ((r >> 1) | (r << (n - 1))) & mask;
}

}  // namespace

Board step(const Board& b, const Rule& r) {
    const int n = b.n();
    const uint64_t mask = b.row_mask();
    Board out(n);
    for (int i = 0; i < n; ++i) {
        const uint64_t up = b.row((i + n - 1) % n);
        const uint64_t mid = b.row(i);
        const uint64_t down = b.row((i + 1) % n);

        // 8 neighbor bitplanes; shl_wrap brings the left-column value to each
        // cell, shr_wrap the right-column value.
        const uint64_t planes[8] = {
            shl_wrap(up, n, mask),   up,   shr_wrap(up, n, mask),
            shl_wrap(mid, n, mask),        shr_wrap(mid, n, mask),
            shl_wrap(down, n, mask), down, shr_wrap(down, n, mask),
        };

        // carry-save accumulation of per-cell neighbor counts (0..8)
        uint64_t ones = 0, twos = 0, fours = 0, eights = 0;
        for (uint64_t p : planes) {
            const uint64_t c1 = ones & p;
            ones ^= p;
            const uint64_t c2 = twos & c1;
            twos ^= c1;
            const uint64_t c3 = fours & c2;
            fours ^= c2;
            eights |= c3;
        }

        uint64_t birth_plane = 0, survive_plane = 0;
        for (int k = 0; k <= 8; ++k) {
            if (!r.births_on(k) && !r.survives_on(k)) continue;
            uint64_t eq = mask;
            eq &= (k & 1) ? ones : ~ones;
            eq &= (k & 2) ? twos : ~twos;
            eq &= (k & 4) ? fours : ~fours;
            eq &= (k & 8) ? eights : ~eights;
            if (r.births_on(k)) birth_plane |= eq;
            if (r.survives_on(k)) survive_plane |= eq;
        }
        out.set_row(i, (~mid & birth_plane) | (mid & survive_plane));
    }
    return out;
}

Trajectory simulate(const Board& b, const Rule& r, int steps) {
    Trajectory t;
    t.rule = r;
    t.states.reserve(static_cast<std::size_t>(steps) + 1);
    t.states.push_back(b);
    for (int s = 0; s < steps; ++s) t.states.push_back(step(t.states.back(), r));
    return t;
}

Board embed_center(const Board& b, int target_n) {
    if (b.n() != kSeedSide) throw BadDimensions("embed_center expects a 16x16 board");
    if (target_n != 24) throw BadDimensions("embed_center target must be 24");
    const int off = (target_n - kSeedSide) / 2;
    Board out(target_n);
    for (int i = 0; i < kSeedSide; ++i)
        for (int j = 0; j < kSeedSide; ++j)
            if (b.get(i, j)) out.set(i + off, j + off, 1);
    return out;
}

int hamming(const Board& a, const Board& b) {
    if (a.n() != b.n()) throw BadDimensions("hamming: boards differ in side length");
    int c = 0;
    for (int i = 0; i < a.n(); ++i) c += std::popcount(a.row(i) ^ b.row(i));
    return c;
}

}  // namespace zsearch
