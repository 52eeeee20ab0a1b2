#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zsearch/util.hpp"

namespace zsearch {

// Square binary grid on a torus. Rows are bit-packed (bit j of row(i) is the
// cell at row i, column j). Side lengths 3..63 are supported; the benchmark
// uses 16 and 24.
class Board {
public:
    Board() = default;
    explicit Board(int n);

    int n() const { return n_; }
    uint64_t row(int i) const { return rows_[i]; }
    int get(int i, int j) const { return static_cast<int>((rows_[i] >> j) & 1u); }
    void set(int i, int j, int v);
    void set_row(int i, uint64_t bits) { rows_[i] = bits & mask_; }
    void flip(int i, int j) { rows_[i] ^= (1ull << j); }
    uint64_t row_mask() const { return mask_; }

    int live_count() const;
    bool operator==(const Board& o) const { return n_ == o.n_ && rows_ == o.rows_; }
    bool operator!=(const Board& o) const { return !(*this == o); }
    uint64_t hash() const;

private:
    int n_ = 0;
    uint64_t mask_ = 0;
    std::vector<uint64_t> rows_;
};

// Totalistic birth/survive rule over Moore neighbor counts 0..8, stored as
// 9-bit membership masks.
struct Rule {
    uint16_t birth = 0;
    uint16_t survive = 0;
    std::string name;

    bool births_on(int count) const { return (birth >> count) & 1; }
    bool survives_on(int count) const { return (survive >> count) & 1; }
    std::string bs_notation() const;
};

Rule rule_life();      // B3/S23
Rule rule_highlife();  // B36/S23
Rule rule_seeds();     // B2/S
const std::vector<Rule>& benchmark_rules();
std::optional<Rule> rule_by_name(const std::string& name);

struct Trajectory {
    Rule rule;
    std::vector<Board> states;  // x_0 .. x_T

    int horizon() const { return static_cast<int>(states.size()) - 1; }
    int n() const { return states.empty() ? 0 : states.front().n(); }
};

inline constexpr int kSeedSide = 16;

// Validity gate for seed text: exactly 16 lines of 16 chars over {'.', '#'}.
// LF line endings, optional trailing newline.
Board parse_seed(const std::string& text);
std::optional<Board> try_parse_seed(const std::string& text, std::string* reason = nullptr);

// n lines x n chars over {'.', '#'}, LF endings, trailing newline included.
std::string board_to_text(const Board& b);

// Fixed horizon T_N = max(64, 4N).
int horizon(int n);

// Synchronous update with periodic boundaries. Neighbor count of a cell is
// the sum over the 8 offset positions with wrapped indices.
Board step(const Board& b, const Rule& r);

Trajectory simulate(const Board& b, const Rule& r, int steps);

// Place a 16x16 board at the center of a target_n x target_n grid
// (zero padding elsewhere). Only 16 -> 24 is accepted.
Board embed_center(const Board& b, int target_n);

// Number of differing cells.
int hamming(const Board& a, const Board& b);

}  // namespace zsearch
