#include "epistoch/simulator.hpp"

#include <cassert>
#include <cmath>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <thread>
#include <vector>

#include "epistoch/rng.hpp"

namespace epistoch {

const char* to_string(EventKind kind) {
    switch (kind) {
        case EventKind::infection: return "infection";
        case EventKind::activation: return "activation";
        case EventKind::removal: return "removal";
    }
    return "?";
}

namespace {

void validate(const EpidemicParams& p) {
    if (p.n < 2) throw std::invalid_argument("simulate: population size must be at least 2");
    if (p.k < 1 || p.k >= p.n)
        throw std::invalid_argument("simulate: initial infectives must satisfy 1 <= k < n");
    if (!(p.r0 > 0.0)) throw std::invalid_argument("simulate: r0 must be positive");
    if (!(p.infectious.mean() > 0.0))
        throw std::invalid_argument("simulate: infectious mean must be positive");
}

enum : std::uint8_t { kSusceptible, kExposed, kInfectious, kRemoved };

struct QueueEntry {
    double time;
    std::uint64_t seq;  // push order; breaks time ties deterministically
    std::uint8_t kind;  // 0 contact, 1 activation, 2 removal
    int id;
};

struct QueueLater {
    bool operator()(const QueueEntry& a, const QueueEntry& b) const {
        if (a.time != b.time) return a.time > b.time;
        return a.seq > b.seq;
    }
};

struct FullRecorder {
    std::vector<Event>* events;
    std::vector<TrajectoryPoint>* trajectory;
    void event(double t, EventKind kind, int id) { events->push_back({t, kind, id}); }
    void state(double t, int s, int e, int i, int r) { trajectory->push_back({t, s, e, i, r}); }
};

struct NullRecorder {
    void event(double, EventKind, int) {}
    void state(double, int, int, int, int) {}
};

// Fixed draw order, part of the determinism contract:
//   seed setup (ids 0..k-1 in order): infectious period, then first contact gap;
//   each contact: target index, then (only if it infects) the target's latent
//   period, then its infectious period, then the contactor's next gap;
//   each activation: the new infective's first contact gap.
template <typename Recorder>
int run_core(const EpidemicParams& p, Rng& rng, Recorder& rec) {
    const double lambda = p.contact_rate();
    std::vector<std::uint8_t> status(p.n, kSusceptible);
    std::vector<double> removal_time(p.n, 0.0);
    std::priority_queue<QueueEntry, std::vector<QueueEntry>, QueueLater> queue;
    std::uint64_t seq = 0;

    int s = p.n - p.k, e = 0, i = p.k, r = 0;
    int infections = 0;
    rec.state(0.0, s, e, i, r);

    const auto push = [&](double time, std::uint8_t kind, int id) {
        queue.push({time, seq++, kind, id});
    };
    const auto schedule_contact = [&](int id, double now) {
        const double next = now + rng.exponential(lambda);
        if (next < removal_time[id]) push(next, 0, id);
    };

    for (int j = 0; j < p.k; ++j) {
        status[j] = kInfectious;
        removal_time[j] = p.infectious.sample(rng);
        push(removal_time[j], 2, j);
        schedule_contact(j, 0.0);
    }

    while (!queue.empty()) {
        const QueueEntry ev = queue.top();
        queue.pop();
        switch (ev.kind) {
            case 0: {  // contact attempt by ev.id, still infectious by construction
                int target = static_cast<int>(rng.below(static_cast<std::uint64_t>(p.n - 1)));
                if (target >= ev.id) ++target;
                if (status[target] == kSusceptible) {
                    const double latent = p.latent.sample(rng);
                    const double infectious = p.infectious.sample(rng);
                    status[target] = kExposed;
                    removal_time[target] = ev.time + latent + infectious;
                    ++infections;
                    --s;
                    ++e;
                    rec.event(ev.time, EventKind::infection, target);
                    rec.state(ev.time, s, e, i, r);
                    push(ev.time + latent, 1, target);
                    push(removal_time[target], 2, target);
                }
                schedule_contact(ev.id, ev.time);
                break;
            }
            case 1: {  // activation: exposed becomes infectious and starts contacting
                status[ev.id] = kInfectious;
                --e;
                ++i;
                rec.event(ev.time, EventKind::activation, ev.id);
                rec.state(ev.time, s, e, i, r);
                schedule_contact(ev.id, ev.time);
                break;
            }
            case 2: {  // removal
                status[ev.id] = kRemoved;
                --i;
                ++r;
                rec.event(ev.time, EventKind::removal, ev.id);
                rec.state(ev.time, s, e, i, r);
                break;
            }
        }
        assert(s + e + i + r == p.n);
    }
    assert(e == 0 && i == 0);
    return infections;
}

}  // namespace

SimOutcome simulate(const EpidemicParams& params, std::uint64_t seed) {
    validate(params);
    Rng rng(seed);
    SimOutcome out;
    FullRecorder rec{&out.events, &out.trajectory};
    out.final_size = run_core(params, rng, rec);
    out.classification = classify_major(out.final_size, params);
    return out;
}

int simulate_final_size(const EpidemicParams& params, std::uint64_t seed) {
    validate(params);
    Rng rng(seed);
    NullRecorder rec;
    return run_core(params, rng, rec);
}

BranchingOutcome simulate_branching(const GrowthParams& params, int k, std::uint64_t seed,
                                    int cap) {
    if (k < 1) throw std::invalid_argument("simulate_branching: k must be at least 1");
    if (cap < 1000) throw std::invalid_argument("simulate_branching: cap must be at least 1000");
    if (!(params.r0 > 0.0)) throw std::invalid_argument("simulate_branching: r0 must be positive");
    if (!(params.infectious.mean() > 0.0))
        throw std::invalid_argument("simulate_branching: infectious mean must be positive");
    const double lambda = params.contact_rate();
    Rng rng(seed);
    // Total progeny of the embedded tree is what decides extinction or
    // reaching the cap, and it does not depend on event timing, so parents
    // are processed one at a time without a clock.
    long long total = k;
    long long alive = k;
    while (alive > 0 && total < cap) {
        --alive;
        const double period = params.infectious.sample(rng);
        const std::uint64_t offspring = rng.poisson(lambda * period);
        total += static_cast<long long>(offspring);
        alive += static_cast<long long>(offspring);
    }
    // The final offspring batch may overshoot the cap; report the true total.
    return {total >= cap, static_cast<int>(total)};
}

Classification classify_major(int final_size, const EpidemicParams& params) {
    if (params.r0 <= 1.0) return Classification::minor;
    const double threshold = 0.5 * final_size_fraction(params.r0) * params.n;
    return final_size >= threshold ? Classification::major : Classification::minor;
}

ReplicateSummary replicate(const EpidemicParams& params, int reps, std::uint64_t base_seed,
                           int threads) {
    validate(params);
    if (reps < 1) throw std::invalid_argument("replicate: reps must be at least 1");
    if (threads < 1) threads = 1;
    if (threads > reps) threads = reps;

    std::vector<int> sizes(reps);
    const auto worker = [&](int begin, int end) {
        for (int idx = begin; idx < end; ++idx)
            sizes[idx] = simulate_final_size(params, base_seed ^ static_cast<std::uint64_t>(idx));
    };
    if (threads == 1) {
        worker(0, reps);
    } else {
        std::vector<std::thread> pool;
        const int chunk = (reps + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            const int begin = t * chunk;
            const int end = begin + chunk < reps ? begin + chunk : reps;
            if (begin < end) pool.emplace_back(worker, begin, end);
        }
        for (auto& th : pool) th.join();
    }

    // Aggregate strictly in replication order so the result is independent of
    // how replications were scheduled.
    ReplicateSummary sum{};
    sum.reps = reps;
    double mean = 0.0, m2 = 0.0;
    for (int idx = 0; idx < reps; ++idx) {
        if (classify_major(sizes[idx], params) != Classification::major) continue;
        ++sum.major_count;
        const double frac = static_cast<double>(sizes[idx]) / params.n;
        const double delta = frac - mean;
        mean += delta / sum.major_count;
        m2 += delta * (frac - mean);
    }
    const double p_hat = static_cast<double>(sum.major_count) / reps;
    sum.major_fraction = p_hat;
    sum.major_fraction_se = std::sqrt(p_hat * (1.0 - p_hat) / reps);
    sum.major_mean_fraction = sum.major_count > 0 ? mean : 0.0;
    sum.major_mean_fraction_se =
        sum.major_count > 1 ? std::sqrt(m2 / (sum.major_count - 1) / sum.major_count) : 0.0;
    return sum;
}

}  // namespace epistoch
