#pragma once

#include <cstdint>
#include <vector>

#include "epistoch/analytic.hpp"
#include "epistoch/distributions.hpp"

namespace epistoch {

struct EpidemicParams {
    int n;  // population size
    int k;  // initially infectious individuals, 1 <= k < n
    double r0;
    GammaSpec latent;
    GammaSpec infectious;

    double contact_rate() const { return r0 / infectious.mean(); }
};

enum class EventKind { infection, activation, removal };

const char* to_string(EventKind kind);

struct Event {
    double time;
    EventKind kind;
    int individual;
};

struct TrajectoryPoint {
    double time;
    int s, e, i, r;
};

enum class Classification { minor, major };

struct SimOutcome {
    int final_size;  // individuals infected during the outbreak; excludes the k seeds
    std::vector<Event> events;
    std::vector<TrajectoryPoint> trajectory;
    Classification classification;
};

// Exact event-driven realization of the SEIR epidemic: every infectious
// individual makes contacts at Poisson rate lambda = r0 / mu_I, each contact
// directed at one of the other n-1 individuals uniformly; contacts with
// non-susceptibles have no effect. Seeds skip the latent period and are
// infectious from t = 0. Deterministic for a given seed.
SimOutcome simulate(const EpidemicParams& params, std::uint64_t seed);

// Same dynamics, but records nothing beyond the final size. Used for bulk
// replication where event logs would dominate memory.
int simulate_final_size(const EpidemicParams& params, std::uint64_t seed);

struct BranchingOutcome {
    bool reached_cap;
    int total;  // individuals ever infected, seeds included
};

// Infinite-population limit: each case infects a Poisson(lambda * I) number
// of new cases. Only the progeny total decides extinction versus explosion,
// so the tree is generated without a clock. Runs until extinction or until
// total live + dead cases reach cap.
BranchingOutcome simulate_branching(const GrowthParams& params, int k, std::uint64_t seed,
                                    int cap = 10000);

// major iff final_size >= 0.5 * rho*(r0) * n; everything is minor for r0 <= 1.
Classification classify_major(int final_size, const EpidemicParams& params);

struct ReplicateSummary {
    int reps;
    int major_count;
    double major_fraction;
    double major_fraction_se;
    double major_mean_fraction;     // mean final fraction T/n among major runs
    double major_mean_fraction_se;
};

// Runs reps independent simulations with per-replication seed
// base_seed ^ replication_index and aggregates in replication order, so the
// summary is bit-identical for any thread count.
ReplicateSummary replicate(const EpidemicParams& params, int reps, std::uint64_t base_seed,
                           int threads = 1);

}  // namespace epistoch
