#include "tss/io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace tss {

namespace {

bool parse_int(const std::string& tok, long long& out) {
    if (tok.empty()) return false;
    std::size_t i = (tok[0] == '-') ? 1 : 0;
    if (i == tok.size()) return false;
    for (; i < tok.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(tok[i]))) return false;
    try {
        out = std::stoll(tok);
    } catch (...) {
        return false;
    }
    return true;
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> toks;
    std::string t;
    while (ss >> t) {
        if (t[0] == '#') break;
        toks.push_back(t);
    }
    return toks;
}

}  // namespace

ParsedInstance parse_network_file(const std::string& text, long long hamming_limit) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;

    bool have_header = false;
    long long n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    std::optional<long long> const_theta;
    std::map<int, long long> overrides;
    std::optional<HammingSpec> hamming;

    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokens_of(line);
        if (toks.empty()) continue;
        const std::string& kind = toks[0];
        if (kind == "p") {
            if (have_header) throw ParseError(lineno, "duplicate header");
            if (toks.size() != 4 || toks[1] != "tss") throw ParseError(lineno, "expected 'p tss <n> <m>'");
            if (!parse_int(toks[2], n) || !parse_int(toks[3], m) || n < 0 || m < 0 ||
                n > 1000000000 || m > 2000000000)
                throw ParseError(lineno, "invalid vertex or edge count");
            have_header = true;
        } else if (kind == "e") {
            if (hamming) throw ParseError(lineno, "edge record not allowed after a hamming line");
            long long u, v;
            if (toks.size() != 3 || !parse_int(toks[1], u) || !parse_int(toks[2], v))
                throw ParseError(lineno, "expected 'e <u> <v>'");
            if (!have_header) throw ParseError(lineno, "edge record before header");
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw ParseError(lineno, "edge endpoint out of range");
            if (u == v) throw ParseError(lineno, "self-loop");
            edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        } else if (kind == "t") {
            long long k;
            if (toks.size() != 3 || !parse_int(toks[2], k))
                throw ParseError(lineno, "expected 't * <k>' or 't <u> <k>'");
            if (toks[1] == "*") {
                if (const_theta) throw ParseError(lineno, "duplicate 't *' record");
                if (!overrides.empty())
                    throw ParseError(lineno, "'t *' must precede per-vertex overrides");
                const_theta = k;
            } else {
                long long u;
                if (!parse_int(toks[1], u)) throw ParseError(lineno, "invalid vertex id");
                if (overrides.count(static_cast<int>(u)))
                    throw ParseError(lineno, "duplicate threshold override for vertex " +
                                                 std::to_string(u));
                overrides[static_cast<int>(u)] = k;
            }
        } else if (kind == "hamming") {
            if (hamming) throw ParseError(lineno, "duplicate hamming line");
            if (!edges.empty()) throw ParseError(lineno, "hamming line conflicts with edge records");
            if (toks.size() != 2) throw ParseError(lineno, "expected 'hamming <n1,...,nt>'");
            std::vector<int> dims;
            std::stringstream ds(toks[1]);
            std::string part;
            while (std::getline(ds, part, ',')) {
                long long d;
                if (!parse_int(part, d) || d < 2) throw ParseError(lineno, "invalid dimension list");
                dims.push_back(static_cast<int>(d));
            }
            if (dims.empty()) throw ParseError(lineno, "empty dimension list");
            try {
                hamming = make_hamming_spec(dims);
            } catch (const Error& e) {
                throw ParseError(lineno, e.what());
            }
        } else {
            throw ParseError(lineno, "unknown record '" + kind + "'");
        }
    }

    ParsedInstance inst;
    if (hamming) {
        long long count = hamming->vertex_count();
        if (have_header) {
            if (n != count) throw ParseError(lineno, "header vertex count disagrees with hamming dims");
            long long degree_sum = 0;
            for (int d : hamming->dims) degree_sum += d - 1;
            if (m != count * degree_sum / 2)
                throw ParseError(lineno, "header edge count disagrees with hamming dims");
        }
        inst.net = hamming_graph(*hamming, hamming_limit);
        if (!const_theta) const_theta = 2;
        n = count;
        inst.hamming = std::move(hamming);
        for (int v = 0; v < inst.net.n; ++v) inst.net.theta[v] = static_cast<int>(*const_theta);
        for (auto [u, k] : overrides) {
            if (u < 0 || u >= n) throw ParseError(lineno, "threshold override out of range");
            inst.net.theta[u] = static_cast<int>(k);
        }
        return inst;
    }

    if (!have_header) throw ParseError(lineno, "missing 'p tss' header");
    if (static_cast<long long>(edges.size()) != m)
        throw ParseError(lineno, "header announces " + std::to_string(m) + " edges, found " +
                                     std::to_string(edges.size()));
    std::vector<int> theta(static_cast<std::size_t>(n), 0);
    std::vector<char> covered(static_cast<std::size_t>(n), const_theta ? 1 : 0);
    if (const_theta)
        for (auto& th : theta) th = static_cast<int>(*const_theta);
    for (auto [u, k] : overrides) {
        if (u < 0 || u >= n) throw ParseError(lineno, "threshold override out of range");
        theta[u] = static_cast<int>(k);
        covered[u] = 1;
    }
    for (long long v = 0; v < n; ++v)
        if (!covered[v])
            throw ParseError(lineno, "vertex " + std::to_string(v) + " has no threshold");
    try {
        inst.net = build_network(static_cast<int>(n), edges, std::move(theta));
    } catch (const ValidationError& e) {
        throw ParseError(lineno, e.what());
    }
    return inst;
}

std::string serialize_network(const ThresholdedNetwork& net) {
    std::ostringstream out;
    auto edges = net.edges();
    std::sort(edges.begin(), edges.end());
    out << "p tss " << net.n << " " << edges.size() << "\n";
    for (auto [u, v] : edges) out << "e " << u << " " << v << "\n";

    // Most common threshold becomes the constant record, smallest value wins ties.
    std::map<int, int> freq;
    for (int th : net.theta) ++freq[th];
    int base = 0, best = 0;
    for (auto [th, cnt] : freq)
        if (cnt > best) {
            best = cnt;
            base = th;
        }
    if (net.n > 0) out << "t * " << base << "\n";
    for (int v = 0; v < net.n; ++v)
        if (net.theta[v] != base) out << "t " << v << " " << net.theta[v] << "\n";
    return out.str();
}

}  // namespace tss
