#include "kgtrade/graphgen.hpp"

#include <random>

namespace kgtrade {

namespace {

Statement random_statement(const GraphGenConfig& cfg, std::mt19937_64& rng,
                           const std::string& ns) {
    size_t sp = cfg.subject_pool ? cfg.subject_pool : std::max<size_t>(1, cfg.statements / 4);
    size_t pp = cfg.predicate_pool ? cfg.predicate_pool : 16;
    size_t op = cfg.object_pool ? cfg.object_pool : std::max<size_t>(1, cfg.statements / 2);

    Statement s;
    s.subject = Term::make_iri(ns + "s" + std::to_string(rng() % sp));
    s.predicate = Term::make_iri(ns + "p" + std::to_string(rng() % pp));
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    if (unif(rng) < cfg.literal_fraction)
        s.object = Term::make_literal("v" + std::to_string(rng() % op));
    else
        s.object = Term::make_iri(ns + "o" + std::to_string(rng() % op));
    return s;
}

void fill(KnowledgeGraph& g, size_t target, const GraphGenConfig& cfg,
          std::mt19937_64& rng, const std::string& ns) {
    size_t guard = 0;
    while (g.size() < target) {
        g.insert(random_statement(cfg, rng, ns));
        // Pools can be too small to ever reach the target; widen the object
        // pool rather than loop forever.
        if (++guard > target * 50) {
            size_t i = g.size();
            while (g.size() < target) {
                Statement s;
                s.subject = Term::make_iri(ns + "fill-s" + std::to_string(i));
                s.predicate = Term::make_iri(ns + "fill-p");
                s.object = Term::make_iri(ns + "fill-o" + std::to_string(i));
                g.insert(s);
                ++i;
            }
        }
    }
}

}  // namespace

KnowledgeGraph generate_graph(const GraphGenConfig& cfg) {
    std::mt19937_64 rng(cfg.seed);
    KnowledgeGraph g;
    fill(g, cfg.statements, cfg, rng, cfg.prefix);
    return g;
}

GraphPair generate_pair(const GraphGenConfig& cfg, double overlap_fraction) {
    if (overlap_fraction < 0.0 || overlap_fraction > 1.0)
        throw ParamError("overlap fraction must lie in [0, 1]");
    std::mt19937_64 rng(cfg.seed);
    GraphPair pair;
    fill(pair.seller, cfg.statements, cfg, rng, cfg.prefix + "seller/");

    size_t shared = size_t(overlap_fraction * double(cfg.statements) + 0.5);
    size_t taken = 0;
    for (const Statement& s : pair.seller.statements()) {
        if (taken == shared) break;
        pair.buyer.insert(s);
        ++taken;
    }
    fill(pair.buyer, cfg.statements, cfg, rng, cfg.prefix + "buyer/");
    return pair;
}

}  // namespace kgtrade
