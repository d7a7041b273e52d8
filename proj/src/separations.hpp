#pragma once

#include <array>
#include <span>
#include <utility>
#include <vector>

#include "pointconfig.hpp"

namespace crofton::separations {

// Index pair with first < second; identifies the geodesic segment between
// two configuration points.
using Chord = std::pair<int, int>;

inline Chord make_chord(int a, int b) { return a < b ? Chord{a, b} : Chord{b, a}; }

inline constexpr double kDefaultSigmaFloor = 1e-9;

// The two inner bitangent chords of a line-separable bipartition, with the
// touch points kept per side: chord 1 = [left1, right1], chord 2 =
// [left2, right2]. The chords coincide exactly when both sides are
// singletons.
struct BitangentPair {
    int left1, right1;
    int left2, right2;

    Chord chord1() const { return make_chord(left1, right1); }
    Chord chord2() const { return make_chord(left2, right2); }
};

// One equivalence class of separating lines: the bipartition it induces, a
// witness line realizing it, the extremal segments, and the weight sigma.
struct SeparationClass {
    std::vector<int> left;   // canonical side: contains index 0, sorted
    std::vector<int> right;  // complement, sorted
    geom::OrientedLine witness;
    BitangentPair bitangents{};
    std::array<Chord, 2> positive{};  // multiset of exactly two chords
    std::vector<Chord> negative;      // sorted
    double sigma = 0.0;
    geom::Point crossing;  // representative point of chord1 ∩ chord2

    bool separates(int i, int j) const;
};

// All distinct line-separable bipartitions with both sides nonempty, fully
// populated (witness, extremal segments, sigma), deterministically ordered
// by the lexicographic encoding of the canonical side.
// Throws NotGeneralPosition when the configuration has a collinear triple,
// InvariantError when some sigma falls below -sigma_floor.
std::vector<SeparationClass> enumerate_classes(const embedding::PointConfig& cfg,
                                               double sigma_floor = kDefaultSigmaFloor);

// The two inner bitangent chords of the bipartition (left, right), found by
// maximizing the closed-halfplane point counts over anchored chords.
// Throws DomainError when the hulls are not strictly separable.
BitangentPair inner_bitangents(const embedding::PointConfig& cfg, std::span<const int> left,
                               std::span<const int> right);

struct ExtremalSegments {
    BitangentPair bitangents{};
    std::array<Chord, 2> positive{};
    std::vector<Chord> negative;
    geom::Point crossing;
};

// Positive segments (the bitangent chords, multiset of two) and negative
// segments (hull edges whose extending line weakly separates the hulls).
ExtremalSegments extremal_segments(const embedding::PointConfig& cfg, std::span<const int> left,
                                   std::span<const int> right);

// sigma = sum of positive segment lengths - sum of negative segment lengths.
// Throws InvariantError below -sigma_floor.
double sigma(const embedding::PointConfig& cfg, const ExtremalSegments& segs,
             double sigma_floor = kDefaultSigmaFloor);

// One-sided decomposition sigma = sigma' + sigma'' through the crossing
// point; agrees with sigma() up to floating error. `left` is the side the
// bitangents' left touch points belong to.
std::pair<double, double> sigma_split(const embedding::PointConfig& cfg,
                                      const ExtremalSegments& segs, std::span<const int> left);

}  // namespace crofton::separations
