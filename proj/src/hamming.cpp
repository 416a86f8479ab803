#include "tss/hamming.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace tss {

namespace {

constexpr int kMaxDims = 30;

void check_tuple(const HammingSpec& spec, const std::vector<int>& tuple) {
    if (static_cast<int>(tuple.size()) != spec.t())
        throw ValidationError("tuple has " + std::to_string(tuple.size()) + " coordinates, expected " +
                              std::to_string(spec.t()));
    for (int i = 0; i < spec.t(); ++i)
        if (tuple[i] < 0 || tuple[i] >= spec.dims[i])
            throw ValidationError("tuple coordinate " + std::to_string(i + 1) + " out of range");
}

bool subcube_less(const Subcube& a, const Subcube& b) {
    if (a.fixed != b.fixed) return a.fixed < b.fixed;
    return a.rep < b.rep;
}

}  // namespace

long long HammingSpec::vertex_count() const {
    // Saturates instead of overflowing; callers treat the max as "too big".
    long long p = 1;
    for (int d : dims) {
        if (p > std::numeric_limits<long long>::max() / d)
            return std::numeric_limits<long long>::max();
        p *= d;
    }
    return p;
}

HammingSpec make_hamming_spec(std::vector<int> dims) {
    if (dims.empty()) throw ValidationError("hamming spec needs at least one dimension");
    if (static_cast<int>(dims.size()) > kMaxDims)
        throw TooLargeError("hamming spec limited to " + std::to_string(kMaxDims) + " dimensions");
    for (int d : dims)
        if (d < 2) throw ValidationError("every hamming dimension must be at least 2");
    return HammingSpec{std::move(dims)};
}

Subcube make_subcube(const HammingSpec& spec, std::vector<int> rep, std::uint32_t fixed) {
    check_tuple(spec, rep);
    if (spec.t() < 32 && (fixed >> spec.t()) != 0)
        throw ValidationError("fixed-coordinate mask exceeds the dimension count");
    for (int i = 0; i < spec.t(); ++i)
        if (!(fixed >> i & 1)) rep[i] = 0;
    return Subcube{std::move(rep), fixed};
}

ThresholdedNetwork hamming_graph(const HammingSpec& spec, long long limit) {
    long long count = spec.vertex_count();
    if (count > limit)
        throw TooLargeError("hamming graph has " + std::to_string(count) +
                            " vertices, above the materialization limit of " +
                            std::to_string(limit));
    int n = static_cast<int>(count);
    ThresholdedNetwork net;
    net.n = n;
    net.theta.assign(n, 2);
    net.adj.assign(n, {});
    // Neighbors of id: vary one coordinate. Strides give the id delta.
    std::vector<long long> stride(spec.t());
    long long acc = 1;
    for (int i = spec.t() - 1; i >= 0; --i) {
        stride[i] = acc;
        acc *= spec.dims[i];
    }
    std::vector<int> tuple(spec.t(), 0);
    for (int id = 0; id < n; ++id) {
        auto& a = net.adj[id];
        for (int i = 0; i < spec.t(); ++i)
            for (int val = 0; val < spec.dims[i]; ++val) {
                if (val == tuple[i]) continue;
                a.push_back(static_cast<int>(id + (val - tuple[i]) * stride[i]));
            }
        std::sort(a.begin(), a.end());
        // Advance the tuple in row-major order.
        for (int i = spec.t() - 1; i >= 0; --i) {
            if (++tuple[i] < spec.dims[i]) break;
            tuple[i] = 0;
        }
    }
    return net;
}

int hamming_distance(const std::vector<int>& u, const std::vector<int>& v) {
    if (u.size() != v.size()) throw ValidationError("hamming_distance: dimension mismatch");
    int d = 0;
    for (std::size_t i = 0; i < u.size(); ++i)
        if (u[i] != v[i]) ++d;
    return d;
}

int subcube_distance(const HammingSpec& spec, const Subcube& a, const Subcube& b) {
    check_tuple(spec, a.rep);
    check_tuple(spec, b.rep);
    std::uint32_t both = a.fixed & b.fixed;
    int d = 0;
    for (int i = 0; i < spec.t(); ++i)
        if ((both >> i & 1) && a.rep[i] != b.rep[i]) ++d;
    return d;
}

std::optional<Subcube> merge_step(const HammingSpec& spec, const Subcube& a, const Subcube& b) {
    int d = subcube_distance(spec, a, b);
    if (d >= 3) return std::nullopt;
    std::uint32_t fixed = a.fixed & b.fixed;
    for (int i = 0; i < spec.t(); ++i)
        if ((fixed >> i & 1) && a.rep[i] != b.rep[i]) fixed &= ~(1u << i);
    return make_subcube(spec, a.rep, fixed);
}

SubcubeUnion closure_subcubes(const HammingSpec& spec,
                              const std::vector<std::vector<int>>& seeds) {
    if (seeds.empty()) throw ValidationError("closure_subcubes: seed set must be nonempty");
    std::uint32_t all = spec.t() >= 32 ? ~0u : ((1u << spec.t()) - 1);
    std::vector<Subcube> parts;
    for (const auto& s : seeds) {
        Subcube c = make_subcube(spec, s, all);
        if (std::find(parts.begin(), parts.end(), c) == parts.end()) parts.push_back(c);
    }
    std::sort(parts.begin(), parts.end(), subcube_less);

    bool merged = true;
    while (merged) {
        merged = false;
        for (std::size_t i = 0; i < parts.size() && !merged; ++i)
            for (std::size_t j = i + 1; j < parts.size() && !merged; ++j) {
                auto m = merge_step(spec, parts[i], parts[j]);
                if (!m) continue;
                parts.erase(parts.begin() + j);
                parts.erase(parts.begin() + i);
                parts.push_back(*m);
                std::sort(parts.begin(), parts.end(), subcube_less);
                merged = true;
            }
    }
    SubcubeUnion u;
    u.parts = std::move(parts);
    return u;
}

long long SubcubeUnion::member_count(const HammingSpec& spec) const {
    long long total = 0;
    for (const auto& c : parts) {
        long long size = 1;
        for (int i = 0; i < spec.t(); ++i)
            if (!(c.fixed >> i & 1)) size *= spec.dims[i];
        total += size;
    }
    return total;
}

bool star_lower_bound_holds(const HammingSpec& spec, const std::vector<std::vector<int>>& seeds,
                            const SubcubeUnion& closed) {
    SubcubeUnion expect = closure_subcubes(spec, seeds);
    if (!(expect.parts == closed.parts))
        throw ValidationError("star_lower_bound_holds: union is not the closure of the seeds");
    long long sum_fixed = 0;
    for (const auto& c : closed.parts) {
        for (int i = 0; i < spec.t(); ++i)
            if (c.fixed >> i & 1) ++sum_fixed;
    }
    // |S| counts distinct seeds.
    std::vector<std::vector<int>> uniq = seeds;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    long long k = static_cast<long long>(closed.parts.size());
    return sum_fixed >= (2 + spec.t()) * k - 2 * static_cast<long long>(uniq.size());
}

std::vector<std::vector<int>> optimal_seed(const HammingSpec& spec) {
    int t = spec.t();
    // Coordinate values 0 and 1 play the roles of the two picked vertices.
    auto p = [&](int j) {  // 1-based: origin except coordinate j set to 1
        std::vector<int> tup(t, 0);
        tup[j - 1] = 1;
        return tup;
    };
    auto q = [&](int j) {  // 1-based: origin except coordinates j, j+1 set to 1
        std::vector<int> tup(t, 0);
        tup[j - 1] = 1;
        tup[j] = 1;
        return tup;
    };
    std::vector<std::vector<int>> seeds;
    if (t == 1) {
        seeds.push_back({0});
        seeds.push_back({1});
        return seeds;
    }
    if (t % 2 == 0) {
        seeds.push_back(p(1));
        seeds.push_back(p(2));
        for (int j = 3; j <= t - 1; j += 2) seeds.push_back(q(j));
    } else {
        seeds.push_back(p(1));
        seeds.push_back(p(2));
        seeds.push_back(p(3));
        for (int j = 4; j <= t - 1; j += 2) seeds.push_back(q(j));
    }
    return seeds;
}

int min_seed_formula(int t) {
    if (t < 1) throw ValidationError("min_seed_formula: t must be at least 1");
    return 1 + (t + 1) / 2;
}

long long tuple_to_id(const HammingSpec& spec, const std::vector<int>& tuple) {
    check_tuple(spec, tuple);
    if (spec.vertex_count() == std::numeric_limits<long long>::max())
        throw TooLargeError("vertex ids for this spec exceed 64 bits");
    long long id = 0;
    for (int i = 0; i < spec.t(); ++i) id = id * spec.dims[i] + tuple[i];
    return id;
}

std::vector<int> id_to_tuple(const HammingSpec& spec, long long id) {
    if (id < 0 || id >= spec.vertex_count()) throw ValidationError("vertex id out of range");
    std::vector<int> tuple(spec.t());
    for (int i = spec.t() - 1; i >= 0; --i) {
        tuple[i] = static_cast<int>(id % spec.dims[i]);
        id /= spec.dims[i];
    }
    return tuple;
}

std::vector<long long> subcube_members(const HammingSpec& spec, const Subcube& c) {
    std::vector<int> free;
    for (int i = 0; i < spec.t(); ++i)
        if (!(c.fixed >> i & 1)) free.push_back(i);
    std::vector<long long> out;
    std::vector<int> tuple = c.rep;
    // Odometer over the free coordinates.
    while (true) {
        out.push_back(tuple_to_id(spec, tuple));
        int k = static_cast<int>(free.size()) - 1;
        while (k >= 0) {
            int i = free[k];
            if (++tuple[i] < spec.dims[i]) break;
            tuple[i] = 0;
            --k;
        }
        if (k < 0) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace tss
