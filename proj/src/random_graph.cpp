#include <algorithm>
#include <set>

#include "edgerank/axioms.hpp"
#include "rng.hpp"

namespace edgerank {

namespace {

using detail::Rng;

struct EndpointSampler {
    int n;
    bool self_loops;
    bool parallel;
    std::set<std::pair<int, int>> used;

    std::optional<std::pair<int, int>> draw(Rng& rng) {
        for (int attempt = 0; attempt < 200; ++attempt) {
            int from = static_cast<int>(rng.below(n));
            int to = static_cast<int>(rng.below(n));
            if (!self_loops && from == to) continue;
            if (!parallel && used.count({from, to})) continue;
            used.insert({from, to});
            return std::make_pair(from, to);
        }
        return std::nullopt;
    }
};

std::string node_label(int i) { return "v" + std::to_string(i + 1); }
std::string edge_label(int i) { return "e" + std::to_string(i + 1); }

Graph sample_unrestricted(const TrialConfig& cfg, Rng& rng) {
    int n = cfg.n_min + static_cast<int>(rng.below(cfg.n_max - cfg.n_min + 1));
    int m = cfg.m_min + static_cast<int>(rng.below(cfg.m_max - cfg.m_min + 1));
    if (n == 1 && !cfg.allow_self_loops) m = 0;

    Graph g;
    for (int i = 0; i < n; ++i) g.nodes[node_label(i)] = rng.real(0.0, cfg.w_max);
    EndpointSampler sampler{n, cfg.allow_self_loops, cfg.allow_parallel, {}};
    for (int j = 0; j < m; ++j) {
        auto pair = sampler.draw(rng);
        if (!pair) throw GraphError("random_graph: endpoint rejection budget exhausted");
        g.edges[edge_label(j)] = Endpoints{node_label(pair->first), node_label(pair->second)};
    }
    return g;
}

Graph sample_strongly_connected(const TrialConfig& cfg, Rng& rng) {
    int n = cfg.n_min + static_cast<int>(rng.below(cfg.n_max - cfg.n_min + 1));
    int m = cfg.m_min + static_cast<int>(rng.below(cfg.m_max - cfg.m_min + 1));
    if (n > 1) m = std::max(m, n);  // the planted cycle needs n edges

    Graph g;
    for (int i = 0; i < n; ++i) g.nodes[node_label(i)] = rng.real(0.0, cfg.w_max);

    EndpointSampler sampler{n, cfg.allow_self_loops, cfg.allow_parallel, {}};
    int next_edge = 0;
    if (n > 1) {
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        for (int i = n - 1; i > 0; --i)
            std::swap(perm[i], perm[rng.below(static_cast<size_t>(i) + 1)]);
        for (int i = 0; i < n; ++i) {
            int from = perm[i], to = perm[(i + 1) % n];
            sampler.used.insert({from, to});
            g.edges[edge_label(next_edge++)] = Endpoints{node_label(from), node_label(to)};
        }
    }
    while (next_edge < m) {
        auto pair = sampler.draw(rng);
        if (!pair) throw GraphError("random_graph: endpoint rejection budget exhausted");
        g.edges[edge_label(next_edge++)] =
            Endpoints{node_label(pair->first), node_label(pair->second)};
    }
    return g;
}

}  // namespace

Graph random_graph(GraphClass cls, const TrialConfig& cfg, uint64_t seed,
                   std::optional<double> katz_decay) {
    if (cfg.n_min < 1 || cfg.n_max < cfg.n_min || cfg.m_min < 0 || cfg.m_max < cfg.m_min)
        throw std::invalid_argument("degenerate graph size ranges");
    Rng rng(seed);
    switch (cls) {
        case GraphClass::All:
            return sample_unrestricted(cfg, rng);
        case GraphClass::StronglyConnectedComponents:
            return sample_strongly_connected(cfg, rng);
        case GraphClass::KatzAdmissible: {
            if (!katz_decay) throw std::invalid_argument("katz class needs a decay factor");
            double a = *katz_decay;
            for (int attempt = 0; attempt < 200; ++attempt) {
                Graph g = sample_unrestricted(cfg, rng);
                if (a == 0.0) return g;
                // keep a safety margin below the 1/a bound so the fixed
                // point stays well conditioned
                if (spectral_radius(g, cfg.solver()) * a <= 0.98) return g;
            }
            throw GraphError("random_graph: katz-admissible rejection budget exhausted");
        }
    }
    throw std::invalid_argument("unknown graph class");
}

}  // namespace edgerank
