#include "noma/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "noma/numerics.hpp"

namespace noma::mc {

namespace {

std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// xoshiro256++ with splitmix-expanded per-stream state. All integer
// arithmetic, so streams are reproducible across platforms.
class Rng {
  public:
    Rng(std::uint64_t seed, std::uint64_t stream) {
        const std::uint64_t base =
            mix64(seed) ^ (0xD2B74407B1CE6E93ULL * (stream + 1));
        for (int k = 0; k < 4; ++k) s_[k] = mix64(base + 0xA24BAED4963EE407ULL * k);
        if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 0x9E3779B97F4A7C15ULL;
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform in the open interval (0,1).
    double uniform01() { return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53; }

    /// Standard normal through the inverse CDF; no rejection, so the
    /// draw count per sample is fixed.
    double normal() { return num::inverse_std_normal_cdf(uniform01()); }

    /// Rayleigh with E[b^2] = omega, through the inverse CDF.
    double rayleigh(double omega) { return std::sqrt(-omega * std::log(uniform01())); }

  private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }
    std::uint64_t s_[4];
};

// Neumaier-compensated accumulator; used inside chunks and for the
// fixed-order merge so the reduction is independent of thread scheduling.
struct Acc {
    double sum = 0.0;
    double comp = 0.0;

    void add(double v) {
        const double t = sum + v;
        if (std::fabs(sum) >= std::fabs(v))
            comp += (sum - t) + v;
        else
            comp += (v - t) + sum;
        sum = t;
    }
    void merge(const Acc& o) {
        add(o.sum);
        comp += o.comp;
    }
    double value() const { return sum + comp; }
};

McEstimate moment_estimate(const Acc& sv, const Acc& svv, std::uint64_t n) {
    McEstimate e;
    e.n = n;
    if (n == 0) return e;
    e.mean = sv.value() / static_cast<double>(n);
    if (n > 1) {
        const double var =
            std::max(0.0, svv.value() / static_cast<double>(n) - e.mean * e.mean);
        e.stderror = std::sqrt(var / static_cast<double>(n));
    }
    return e;
}

McEstimate proportion_estimate(std::uint64_t hits, std::uint64_t n) {
    McEstimate e;
    e.n = n;
    if (n == 0) return e;
    const double p = static_cast<double>(hits) / static_cast<double>(n);
    e.mean = p;
    e.stderror = std::sqrt(p * (1.0 - p) / static_cast<double>(n));
    return e;
}

struct HistAccum {
    std::vector<std::uint64_t> counts;
    std::uint64_t total = 0;
    double lo = 0.0, hi = 1.0, inv_width = 0.0;

    HistAccum() : counts(1, 0) {}
    HistAccum(int bins, double lo_, double hi_)
        : counts(bins, 0), lo(lo_), hi(hi_), inv_width(bins / (hi_ - lo_)) {}

    void add(double v) {
        ++total;
        if (v < lo || v >= hi) return;
        auto k = static_cast<std::size_t>((v - lo) * inv_width);
        if (k >= counts.size()) k = counts.size() - 1;
        ++counts[k];
    }
    void merge(const HistAccum& o) {
        total += o.total;
        for (std::size_t k = 0; k < counts.size(); ++k) counts[k] += o.counts[k];
    }
};

ConditionalHistogram finish_hist(const HistAccum& h, bpsk::Branch branch,
                                 bpsk::Variable variable) {
    ConditionalHistogram out;
    out.branch = branch;
    out.variable = variable;
    out.counts = h.counts;
    out.total = h.total;
    const int bins = static_cast<int>(h.counts.size());
    out.edges.resize(bins + 1);
    for (int k = 0; k <= bins; ++k)
        out.edges[k] = h.lo + (h.hi - h.lo) * k / bins;
    return out;
}

// Runs worker(chunk_index, count) over all chunks, possibly
// concurrently, and returns the partials indexed by chunk.
template <typename Partial, typename Worker>
std::vector<Partial> run_chunks(const McConfig& cfg, Worker worker) {
    cfg.validate();
    const std::uint64_t chunk = std::min(cfg.chunk, cfg.samples);
    const std::uint64_t n_chunks = (cfg.samples + chunk - 1) / chunk;
    std::vector<Partial> partials(n_chunks);
    unsigned threads = cfg.threads > 0 ? static_cast<unsigned>(cfg.threads)
                                       : std::thread::hardware_concurrency();
    threads = std::max(1u, std::min<unsigned>(threads, 16));
    auto count_of = [&](std::uint64_t c) {
        return std::min<std::uint64_t>(chunk, cfg.samples - c * chunk);
    };
    if (threads == 1 || n_chunks == 1) {
        for (std::uint64_t c = 0; c < n_chunks; ++c) partials[c] = worker(c, count_of(c));
        return partials;
    }
    std::atomic<std::uint64_t> next{0};
    auto drain = [&] {
        for (;;) {
            const std::uint64_t c = next.fetch_add(1);
            if (c >= n_chunks) break;
            partials[c] = worker(c, count_of(c));
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(drain);
    drain();
    for (auto& t : pool) t.join();
    return partials;
}

bool bpsk_success(const ConstellationPoint& x, double y) {
    // Boundary Y == 0 resolves to success, matching the closed analytic
    // branch-region convention.
    return (2 * x.i - 1) > 0 ? (y >= 0.0) : (y <= 0.0);
}

}  // namespace

void McConfig::validate() const {
    if (samples < 1000)
        throw std::invalid_argument("samples: must be >= 1000");
    if (chunk == 0) throw std::invalid_argument("chunk: must be >= 1");
    if (bins < 2) throw std::invalid_argument("bins: must be >= 2");
}

double ConditionalHistogram::density(int k) const {
    const double width = edges[k + 1] - edges[k];
    if (total == 0 || width <= 0.0) return 0.0;
    return static_cast<double>(counts[k]) / (static_cast<double>(total) * width);
}

HistogramDistance histogram_distance(const ConditionalHistogram& h,
                                     const bpsk::PdfCurve& curve) {
    if (curve.grid.empty() || h.edges.size() < 2)
        throw std::invalid_argument("histogram_distance: empty inputs");
    if (curve.grid.front() > h.edges.front() + 1e-12 ||
        curve.grid.back() < h.edges.back() - 1e-12)
        throw std::invalid_argument(
            "histogram_distance: curve does not span the histogram support");

    const auto curve_value = [&curve](double v) {
        auto it = std::lower_bound(curve.grid.begin(), curve.grid.end(), v);
        if (it == curve.grid.begin()) return curve.density.front();
        if (it == curve.grid.end()) return curve.density.back();
        const auto i = static_cast<std::size_t>(it - curve.grid.begin());
        const double x0 = curve.grid[i - 1], x1 = curve.grid[i];
        const double t = (v - x0) / (x1 - x0);
        return (1.0 - t) * curve.density[i - 1] + t * curve.density[i];
    };

    HistogramDistance d;
    const int bins = static_cast<int>(h.counts.size());
    for (int k = 0; k < bins; ++k) {
        const double lo = h.edges[k], hi = h.edges[k + 1];
        // Bin average of the analytic curve by trapezoid over the grid
        // points that fall inside the bin.
        double integral = 0.0;
        auto lo_it = std::upper_bound(curve.grid.begin(), curve.grid.end(), lo);
        auto hi_it = std::lower_bound(curve.grid.begin(), curve.grid.end(), hi);
        double prev_x = lo, prev_f = curve_value(lo);
        for (auto it = lo_it; it != hi_it; ++it) {
            integral += 0.5 * (prev_f + curve_value(*it)) * (*it - prev_x);
            prev_x = *it;
            prev_f = curve_value(*it);
        }
        integral += 0.5 * (prev_f + curve_value(hi)) * (hi - prev_x);
        const double analytic = integral / (hi - lo);
        const double diff = std::fabs(h.density(k) - analytic);
        d.sup = std::max(d.sup, diff);
        d.l1 += diff * (hi - lo);
    }
    return d;
}

BpskBranchStats simulate_bpsk_branch_stats(const Scenario& s,
                                           const ConstellationPoint& x,
                                           const McConfig& cfg) {
    const double sigma = s.sigma_n();
    const double omega = s.omega();
    const double beta_hi = 5.0 * std::sqrt(omega);
    const double noise_hi = 6.0 * sigma;

    struct Partial {
        std::uint64_t n_s = 0, n_f = 0;
        Acc w1, w2, w4;  // noise moments, success branch
        Acc z1, z2, z4;  // noise moments, failure branch
        HistAccum hfs, hff, hns, hnf;
    };

    auto partials = run_chunks<Partial>(cfg, [&](std::uint64_t c, std::uint64_t count) {
        Rng rng(cfg.seed, c);
        Partial p;
        p.hfs = HistAccum(cfg.bins, 0.0, beta_hi);
        p.hff = HistAccum(cfg.bins, 0.0, beta_hi);
        p.hns = HistAccum(cfg.bins, -noise_hi, noise_hi);
        p.hnf = HistAccum(cfg.bins, -noise_hi, noise_hi);
        for (std::uint64_t k = 0; k < count; ++k) {
            const double beta = rng.rayleigh(omega);
            const double n = sigma * rng.normal();
            const double y = beta * x.value + n;
            if (bpsk_success(x, y)) {
                ++p.n_s;
                p.w1.add(n);
                p.w2.add(n * n);
                p.w4.add(n * n * n * n);
                p.hfs.add(beta);
                p.hns.add(n);
            } else {
                ++p.n_f;
                p.z1.add(n);
                p.z2.add(n * n);
                p.z4.add(n * n * n * n);
                p.hff.add(beta);
                p.hnf.add(n);
            }
        }
        return p;
    });

    Partial total;
    total.hfs = HistAccum(cfg.bins, 0.0, beta_hi);
    total.hff = HistAccum(cfg.bins, 0.0, beta_hi);
    total.hns = HistAccum(cfg.bins, -noise_hi, noise_hi);
    total.hnf = HistAccum(cfg.bins, -noise_hi, noise_hi);
    for (const auto& p : partials) {
        total.n_s += p.n_s;
        total.n_f += p.n_f;
        total.w1.merge(p.w1);
        total.w2.merge(p.w2);
        total.w4.merge(p.w4);
        total.z1.merge(p.z1);
        total.z2.merge(p.z2);
        total.z4.merge(p.z4);
        total.hfs.merge(p.hfs);
        total.hff.merge(p.hff);
        total.hns.merge(p.hns);
        total.hnf.merge(p.hnf);
    }

    BpskBranchStats out;
    out.p_success = proportion_estimate(total.n_s, total.n_s + total.n_f);
    out.m2_w = moment_estimate(total.w2, total.w4, total.n_s);
    out.m2_z = moment_estimate(total.z2, total.z4, total.n_f);
    out.mean_w = moment_estimate(total.w1, total.w2, total.n_s);
    out.mean_z = moment_estimate(total.z1, total.z2, total.n_f);
    out.fading_success =
        finish_hist(total.hfs, bpsk::Branch::success, bpsk::Variable::fading);
    out.fading_failure =
        finish_hist(total.hff, bpsk::Branch::failure, bpsk::Variable::fading);
    out.noise_success =
        finish_hist(total.hns, bpsk::Branch::success, bpsk::Variable::noise);
    out.noise_failure =
        finish_hist(total.hnf, bpsk::Branch::failure, bpsk::Variable::noise);
    return out;
}

McEstimate simulate_bpsk_outage(const Scenario& s, const McConfig& cfg) {
    const auto pts = bpsk_constellation(s);
    double m2w[4], m2z[4];
    for (int k = 0; k < 4; ++k) {
        m2w[k] = bpsk::second_moment_w(s, pts[k]);
        m2z[k] = bpsk::second_moment_z(s, pts[k]);
    }
    const double sigma = s.sigma_n();
    const double omega = s.omega();
    const double a1 = s.alpha1();
    const double a2 = s.alpha2();
    const double gth = s.gamma_th();

    auto partials = run_chunks<std::uint64_t>(cfg, [&](std::uint64_t c,
                                                       std::uint64_t count) {
        Rng rng(cfg.seed, c);
        std::uint64_t outages = 0;
        for (std::uint64_t k = 0; k < count; ++k) {
            const int sym = static_cast<int>(rng.next() & 3u);
            const double beta = rng.rayleigh(omega);
            const double n = sigma * rng.normal();
            const double y = beta * pts[sym].value + n;
            const double b2 = beta * beta;
            const double gamma = bpsk_success(pts[sym], y)
                                     ? a2 * b2 / m2w[sym]
                                     : a2 * b2 / (4.0 * a1 * b2 + m2z[sym]);
            if (gamma < gth) ++outages;
        }
        return outages;
    });
    std::uint64_t outages = 0;
    for (auto p : partials) outages += p;
    return proportion_estimate(outages, cfg.samples);
}

McEstimate simulate_bpsk_ec(const Scenario& s, const McConfig& cfg) {
    const auto pts = bpsk_constellation(s);
    double m2w[4], m2z[4];
    for (int k = 0; k < 4; ++k) {
        m2w[k] = bpsk::second_moment_w(s, pts[k]);
        m2z[k] = bpsk::second_moment_z(s, pts[k]);
    }
    const double sigma = s.sigma_n();
    const double omega = s.omega();
    const double a1 = s.alpha1();
    const double a2 = s.alpha2();

    struct Partial {
        Acc c1, c2;
    };
    auto partials = run_chunks<Partial>(cfg, [&](std::uint64_t c, std::uint64_t count) {
        Rng rng(cfg.seed, c);
        Partial p;
        for (std::uint64_t k = 0; k < count; ++k) {
            const int sym = static_cast<int>(rng.next() & 3u);
            const double beta = rng.rayleigh(omega);
            const double n = sigma * rng.normal();
            const double y = beta * pts[sym].value + n;
            const double b2 = beta * beta;
            const double gamma = bpsk_success(pts[sym], y)
                                     ? a2 * b2 / m2w[sym]
                                     : a2 * b2 / (4.0 * a1 * b2 + m2z[sym]);
            const double cap = std::log2(1.0 + gamma);
            p.c1.add(cap);
            p.c2.add(cap * cap);
        }
        return p;
    });
    Partial total;
    for (const auto& p : partials) {
        total.c1.merge(p.c1);
        total.c2.merge(p.c2);
    }
    return moment_estimate(total.c1, total.c2, cfg.samples);
}

QpskSuccessStats simulate_qpsk_success_stats(const Scenario& s,
                                             const qpsk::QuadrantLevels& q,
                                             const McConfig& cfg) {
    const double sigma = s.sigma_n();
    const double omega = s.omega();

    struct Partial {
        std::uint64_t n_s = 0, n = 0;
        Acc v1, v2;    // |w|^2 and |w|^4
        Acc re1, re2;  // real component
        Acc im1, im2;  // imaginary component
    };
    auto partials = run_chunks<Partial>(cfg, [&](std::uint64_t c, std::uint64_t count) {
        Rng rng(cfg.seed, c);
        Partial p;
        p.n = count;
        for (std::uint64_t k = 0; k < count; ++k) {
            const double beta = rng.rayleigh(omega);
            const double nr = sigma * rng.normal();
            const double ni = sigma * rng.normal();
            const bool success =
                (beta * q.lambda_i + nr >= 0.0) && (beta * q.lambda_j + ni >= 0.0);
            if (!success) continue;
            ++p.n_s;
            const double v = nr * nr + ni * ni;
            p.v1.add(v);
            p.v2.add(v * v);
            p.re1.add(nr);
            p.re2.add(nr * nr);
            p.im1.add(ni);
            p.im2.add(ni * ni);
        }
        return p;
    });
    Partial total;
    for (const auto& p : partials) {
        total.n_s += p.n_s;
        total.n += p.n;
        total.v1.merge(p.v1);
        total.v2.merge(p.v2);
        total.re1.merge(p.re1);
        total.re2.merge(p.re2);
        total.im1.merge(p.im1);
        total.im2.merge(p.im2);
    }

    QpskSuccessStats out;
    out.p_success = proportion_estimate(total.n_s, total.n);
    out.m2_w = moment_estimate(total.v1, total.v2, total.n_s);
    out.mean_w_re = moment_estimate(total.re1, total.re2, total.n_s);
    out.mean_w_im = moment_estimate(total.im1, total.im2, total.n_s);
    if (total.n_s > 1) {
        const double m_re = out.mean_w_re.mean;
        const double m_im = out.mean_w_im.mean;
        out.var_w.n = total.n_s;
        out.var_w.mean = out.m2_w.mean - (m_re * m_re + m_im * m_im);
        out.var_w.stderror = out.m2_w.stderror;
    }
    return out;
}

}  // namespace noma::mc
