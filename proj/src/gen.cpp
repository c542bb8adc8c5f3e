#include "matchcore/gen.hpp"

#include <random>
#include <vector>

#include "matchcore/error.hpp"

namespace matchcore {

namespace {

// Portable draws: the standard distributions are not bit-identical across
// library implementations, so derive values from the raw mt19937 stream.
double uniform01(std::mt19937& rng) { return rng() * (1.0 / 4294967296.0); }

int bounded(std::mt19937& rng, int n) { return static_cast<int>(rng() % static_cast<unsigned>(n)); }

std::mt19937 stream(std::uint32_t seed, std::uint32_t agent, std::uint32_t tag, std::uint32_t a = 0,
                    std::uint32_t b = 0) {
    std::seed_seq seq{seed, agent, tag, a, b};
    return std::mt19937(seq);
}

}  // namespace

Market generate_market(const GenSpec& spec) {
    if (!(spec.density >= 0.0 && spec.density <= 1.0)) throw BadDensity(spec.density);
    if (spec.men < 0 || spec.women < 0) throw DomainError("roster sizes must be nonnegative");
    if (spec.men > kGenSideCap) throw CapExceeded("generated men", spec.men, kGenSideCap);
    if (spec.women > kGenSideCap) throw CapExceeded("generated women", spec.women, kGenSideCap);

    Market m(spec.men, spec.women);
    for (int i = 0; i < m.size(); ++i) {
        const AgentId agent = m.agent(i);
        const std::vector<AgentId> ground = m.ground_for(agent);
        const int n = static_cast<int>(ground.size());

        // A random permutation of the ground set, best first.
        std::vector<int> perm(n);
        for (int k = 0; k < n; ++k) perm[k] = k;
        std::mt19937 order_rng = stream(spec.seed, static_cast<std::uint32_t>(i), 0);
        for (int k = n - 1; k > 0; --k) std::swap(perm[k], perm[bounded(order_rng, k + 1)]);

        // One draw per candidate pair, from a stream independent of density.
        std::vector<std::pair<AgentId, AgentId>> declared;
        for (int a = 0; a < n; ++a) {
            for (int b = a + 1; b < n; ++b) {
                const int x = perm[a];  // candidate: ground[x] > ground[y]
                const int y = perm[b];
                std::mt19937 pair_rng = stream(spec.seed, static_cast<std::uint32_t>(i), 1,
                                               static_cast<std::uint32_t>(x),
                                               static_cast<std::uint32_t>(y));
                if (uniform01(pair_rng) < spec.density) declared.emplace_back(ground[x], ground[y]);
            }
        }
        m.declare_pref(agent, declared);
    }
    return m;
}

}  // namespace matchcore
