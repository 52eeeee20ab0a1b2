#pragma once

#include <array>
#include <string>

#include "zsearch/board.hpp"

namespace zsearch {

// Per-run subscore weights: act, div, pent, ccont, bal.
inline constexpr double kScoreWeights[5] = {0.30, 0.20, 0.25, 0.20, 0.05};

struct RunScore {
    int n = 0;
    Rule rule;
    double act = 0, div = 0, pent = 0, ccont = 0, bal = 0;
    double score = 0;
};

// Six runs in fixed order: (16,Life),(16,HighLife),(16,Seeds),(24,Life),(24,HighLife),(24,Seeds).
struct CaPlusPlusScore {
    std::array<RunScore, 6> runs;
    double f = 0;  // clip_[0,1](mean of the 6 run scores)
};

using FeatureVector = std::array<double, 30>;  // 6 runs x (act,div,pent,ccont,bal)

// --- subscores from a stored trajectory (straight from the formulas) ---

// mean fraction of cells that flip per step
double activity(const Trajectory& traj);
// mean 4-neighbor component count over x_1..x_T, normalized by n^2/4 and capped at 1
double diversity(const Trajectory& traj);
// normalized entropy of 3x3 wraparound patch codes pooled over all (t,i,j), t in 0..T
double patch_entropy(const Trajectory& traj);
// 2*min(r, 1-r) for r = deflated/raw bytes of the '0'/'1' spacetime string
double compression_contrast(const Trajectory& traj);
// 4*lbar*(1-lbar) with lbar the mean live fraction over x_1..x_T
double balance(const Trajectory& traj);

double weighted_run_score(double act, double div, double pent, double ccont, double bal);

// --- helpers shared by both routes ---

// 4-neighbor connected components of live cells with wraparound adjacency
int component_count(const Board& b);

// row-major '0'/'1' serialization of one state, appended to out
void append_state_bytes(const Board& b, std::string& out);

// raw DEFLATE (RFC 1951) at maximum compression (level 9, 32 KiB window,
// memLevel 8, default strategy); returns the compressed byte count
std::size_t deflate_size(const std::string& data);
// compressed/raw ratio, clamped to <= 1
double compression_ratio(const std::string& data);
// identifies the compressor build pinned into ccont (recorded in run metadata)
std::string deflate_config_id();

// --- benchmark entry points ---

// Simulates with horizon(n) (embedding the 16x16 seed when n == 24) and
// computes all five subscores inline during the simulation.
RunScore score_run(const Board& seed, int n, const Rule& rule);

CaPlusPlusScore capp_score(const Board& seed);
FeatureVector feature_vector(const CaPlusPlusScore& s);
FeatureVector feature_vector(const Board& seed);

}  // namespace zsearch
