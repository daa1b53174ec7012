#include <atomic>
#include <cmath>
#include <thread>
#include <vector>

#include "ratiolab/errors.hpp"
#include "ratiolab/rmt.hpp"

namespace ratiolab::rmt {

namespace {

constexpr int kShards = 16;  // fixed logical substreams, independent of hardware

uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

struct ShardSums {
    Complex sum{0.0};
    double sum_sq = 0.0;  // sum |x|^2
    int64_t rejected = 0;
};

}  // namespace

McResult mc_average(const GroupSpec& group, const RatioSpec& spec, int64_t samples,
                    uint64_t seed) {
    if (samples < 100) throw Error("mc_average: samples >= 100 required");
    group.validate(spec.shifts);
    std::vector<int64_t> counts(kShards, samples / kShards);
    for (int i = 0; i < samples % kShards; ++i) ++counts[i];
    std::vector<ShardSums> partials(kShards);
    auto run_shard = [&](int shard) {
        std::mt19937_64 rng(splitmix64(seed ^ (0x51BD1E995ULL * (shard + 1))));
        ShardSums acc;
        for (int64_t i = 0; i < counts[shard];) {
            try {
                Complex v = ratio_statistic(haar_sample(group, rng), spec);
                acc.sum += v;
                acc.sum_sq += std::norm(v);
                ++i;
            } catch (const NearSingularSample&) {
                ++acc.rejected;
            } catch (const DegenerateQR&) {
                ++acc.rejected;
            }
            if (acc.rejected > samples) throw Error("mc_average: rejection loop");
        }
        partials[shard] = acc;
    };
    unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                                       static_cast<unsigned>(kShards)));
    std::vector<std::thread> pool;
    std::atomic<int> cursor{0};
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&]() {
            for (int s = cursor.fetch_add(1); s < kShards; s = cursor.fetch_add(1)) run_shard(s);
        });
    for (auto& th : pool) th.join();
    // deterministic reduction in shard order
    Complex total(0.0);
    double total_sq = 0.0;
    int64_t rejected = 0;
    for (const auto& p : partials) {
        total += p.sum;
        total_sq += p.sum_sq;
        rejected += p.rejected;
    }
    if (rejected * 1000 > samples)
        throw NearSingularSample("mc_average: more than 0.1% of draws rejected");
    double n = static_cast<double>(samples);
    Complex mean = total / n;
    double var = std::max(0.0, (total_sq - std::norm(total) / n) / (n - 1.0));
    McResult result;
    result.estimate = mean;
    result.std_error = std::sqrt(var / n);
    result.samples = samples;
    result.rejected = rejected;
    return result;
}

}  // namespace ratiolab::rmt
