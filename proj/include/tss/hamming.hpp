#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tss/network.hpp"

namespace tss {

/// Cartesian product of complete graphs K_{n_1} x ... x K_{n_t}. Vertices are
/// coordinate tuples; two tuples are adjacent iff they differ in exactly one
/// coordinate. Row-major ids: id = sum x_i * prod_{j>i} n_j.
struct HammingSpec {
    std::vector<int> dims;

    int t() const { return static_cast<int>(dims.size()); }
    long long vertex_count() const;
};

HammingSpec make_hamming_spec(std::vector<int> dims);

/// The set of tuples agreeing with rep on every coordinate in `fixed`
/// (a bitmask over coordinates). Normal form zeroes the free coordinates of
/// rep, so equal subcubes compare equal componentwise.
struct Subcube {
    std::vector<int> rep;
    std::uint32_t fixed = 0;

    bool operator==(const Subcube&) const = default;
};

Subcube make_subcube(const HammingSpec& spec, std::vector<int> rep, std::uint32_t fixed);

/// A family of pairwise-far subcubes (distance >= 3), sorted for determinism.
struct SubcubeUnion {
    std::vector<Subcube> parts;

    long long member_count(const HammingSpec& spec) const;
};

/// Explicit graph with constant threshold 2; throws TooLargeError above the
/// materialization limit.
ThresholdedNetwork hamming_graph(const HammingSpec& spec, long long limit = 100000);

int hamming_distance(const std::vector<int>& u, const std::vector<int>& v);

/// min over member pairs of the Hamming distance; with matching free
/// coordinates this is the number of commonly-fixed coordinates where the
/// representatives differ.
int subcube_distance(const HammingSpec& spec, const Subcube& a, const Subcube& b);

/// Closure of the union of two subcubes under threshold 2: at distance <= 2
/// they collapse into one subcube fixed on their agreeing common coordinates;
/// at distance >= 3 nothing activates (nullopt).
std::optional<Subcube> merge_step(const HammingSpec& spec, const Subcube& a, const Subcube& b);

/// Normal form of the closure of S under threshold 2: start from singleton
/// subcubes and merge the lexicographically first pair at distance <= 2 until
/// all parts are pairwise at distance >= 3.
SubcubeUnion closure_subcubes(const HammingSpec& spec,
                              const std::vector<std::vector<int>>& seeds);

/// The closure lower bound sum |A_i| >= (2+t)k - 2|S|. Rejects a union that
/// is not the closure of the given seeds.
bool star_lower_bound_holds(const HammingSpec& spec, const std::vector<std::vector<int>>& seeds,
                            const SubcubeUnion& closed);

/// A minimum target set under constant threshold 2, of size 1 + ceil(t/2):
/// two or three tuples one step from the origin plus a ladder of two-step
/// tuples covering the remaining coordinate pairs.
std::vector<std::vector<int>> optimal_seed(const HammingSpec& spec);

/// 1 + ceil(t/2).
int min_seed_formula(int t);

long long tuple_to_id(const HammingSpec& spec, const std::vector<int>& tuple);
std::vector<int> id_to_tuple(const HammingSpec& spec, long long id);

/// Member ids of a subcube, sorted (for tests and small instances).
std::vector<long long> subcube_members(const HammingSpec& spec, const Subcube& c);

}  // namespace tss
