#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tractoria/complexfn.hpp"
#include "tractoria/errors.hpp"
#include "tractoria/geometry.hpp"

namespace tractoria {

struct LevelCurve {
    Polyline vertices;
    bool closed = false;
    double level = 1.0;
    double max_residual = 0;  // max |log|f(v)| - log level| over refined vertices
    bool degenerate = false;  // a vertex could not be refined (critical point nearby)
};

// a grid cell whose corner arguments wind: f has a zero inside, usually with a
// level component far below trace resolution
struct ZeroCell {
    cplx center;
    double size = 0;
};

struct TraceResult {
    std::vector<LevelCurve> curves;
    std::vector<ZeroCell> zero_cells;
};

namespace trc {

struct NodeField {
    Rect window;
    int nx = 0, ny = 0;  // cell counts; nodes are (nx+1) x (ny+1)
    double dx = 0, dy = 0;
    std::vector<double> logmod;
    std::vector<double> argv;

    int node_index(int i, int j) const { return j * (nx + 1) + i; }
    cplx node(int i, int j) const { return {window.x0 + i * dx, window.y0 + j * dy}; }

    static NodeField build(const FunctionSpec& fn, Rect window, double step,
                           bool want_arg = true) {
        if (window.empty()) throw InvalidParam("window is empty");
        if (!(step > 0)) throw InvalidParam("trace step must be positive");
        NodeField g;
        g.window = window;
        g.nx = std::max(8, int(std::ceil(window.width() / step)));
        g.ny = std::max(8, int(std::ceil(window.height() / step)));
        const long nodes = long(g.nx + 1) * long(g.ny + 1);
        if (nodes > 30'000'000) throw InvalidParam("trace grid too large; coarsen step");
        g.dx = window.width() / g.nx;
        g.dy = window.height() / g.ny;
        g.logmod.resize(nodes);
        if (want_arg) g.argv.resize(nodes);
        for (int j = 0; j <= g.ny; ++j) {
            for (int i = 0; i <= g.nx; ++i) {
                const int id = g.node_index(i, j);
                try {
                    const LogValue lv = eval_log(fn, g.node(i, j));
                    g.logmod[id] = lv.logmod;
                    if (want_arg) g.argv[id] = lv.arg;
                } catch (const NearZero&) {
                    g.logmod[id] = -1e308;  // node sits on (or at) a zero of f
                    if (want_arg) g.argv[id] = 0;
                } catch (const Error&) {
                    g.logmod[id] = std::numeric_limits<double>::quiet_NaN();
                    if (want_arg) g.argv[id] = 0;
                }
            }
        }
        return g;
    }

    std::vector<ZeroCell> detect_zero_cells() const {
        std::vector<ZeroCell> cells;
        if (argv.empty()) return cells;
        for (int j = 0; j < ny; ++j) {
            for (int i = 0; i < nx; ++i) {
                const double a0 = argv[node_index(i, j)];
                const double a1 = argv[node_index(i + 1, j)];
                const double a2 = argv[node_index(i + 1, j + 1)];
                const double a3 = argv[node_index(i, j + 1)];
                const double w = wrap_angle(a1 - a0) + wrap_angle(a2 - a1) +
                                 wrap_angle(a3 - a2) + wrap_angle(a0 - a3);
                const bool corner_zero = logmod[node_index(i, j)] < -1e307 ||
                                         logmod[node_index(i + 1, j)] < -1e307 ||
                                         logmod[node_index(i + 1, j + 1)] < -1e307 ||
                                         logmod[node_index(i, j + 1)] < -1e307;
                if (std::abs(w) > M_PI || corner_zero) {
                    cells.push_back({node(i, j) + cplx{0.5 * dx, 0.5 * dy},
                                     std::max(dx, dy)});
                }
            }
        }
        // merge adjacent detections around the same zero
        std::vector<ZeroCell> merged;
        std::vector<char> used(cells.size(), 0);
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (used[i]) continue;
            cplx sum = cells[i].center;
            double sz = cells[i].size;
            int count = 1;
            for (std::size_t j = i + 1; j < cells.size(); ++j) {
                if (!used[j] &&
                    std::abs(cells[j].center - cells[i].center) < 2.5 * std::max(dx, dy)) {
                    used[j] = 1;
                    sum += cells[j].center;
                    ++count;
                    sz = std::max(sz, cells[j].size);
                }
            }
            merged.push_back({sum / double(count), sz});
        }
        return merged;
    }
};

// marching-squares zero curves of the node values minus `iso`
struct RawCurves {
    std::vector<Polyline> curves;
    std::vector<bool> closed;
};

inline RawCurves extract_iso_curves(const NodeField& g, double iso,
                                    const std::vector<double>& values) {
    auto val = [&](int i, int j) {
        const double v = values[g.node_index(i, j)];
        return std::isnan(v) ? -1.0 : v - iso;
    };
    auto edge_point = [&](int i0, int j0, int i1, int j1) {
        const double a = val(i0, j0), b = val(i1, j1);
        double t = (a == b) ? 0.5 : a / (a - b);
        t = std::clamp(t, 0.0, 1.0);
        const cplx p = g.node(i0, j0), q = g.node(i1, j1);
        return p + t * (q - p);
    };
    // edge ids: horizontal edge at (i,j) -> 2*(j*(nx+1)+i), vertical -> +1
    auto h_edge = [&](int i, int j) { return 2 * (j * (g.nx + 1) + i); };
    auto v_edge = [&](int i, int j) { return 2 * (j * (g.nx + 1) + i) + 1; };

    std::vector<std::pair<int, int>> segs;
    std::unordered_map<int, cplx> pts;
    std::unordered_map<int, std::vector<int>> adj;

    auto add_seg = [&](int e1, cplx p1, int e2, cplx p2) {
        pts.emplace(e1, p1);
        pts.emplace(e2, p2);
        adj[e1].push_back(int(segs.size()));
        adj[e2].push_back(int(segs.size()));
        segs.emplace_back(e1, e2);
    };

    for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) {
            const double s00 = val(i, j), s10 = val(i + 1, j);
            const double s11 = val(i + 1, j + 1), s01 = val(i, j + 1);
            int mask = (s00 > 0 ? 1 : 0) | (s10 > 0 ? 2 : 0) | (s11 > 0 ? 4 : 0) |
                       (s01 > 0 ? 8 : 0);
            if (mask == 0 || mask == 15) continue;
            const int eb = h_edge(i, j), et = h_edge(i, j + 1);
            const int el = v_edge(i, j), er = v_edge(i + 1, j);
            const cplx pb = edge_point(i, j, i + 1, j);
            const cplx pt = edge_point(i, j + 1, i + 1, j + 1);
            const cplx pl = edge_point(i, j, i, j + 1);
            const cplx pr = edge_point(i + 1, j, i + 1, j + 1);
            switch (mask) {
                case 1: case 14: add_seg(el, pl, eb, pb); break;
                case 2: case 13: add_seg(eb, pb, er, pr); break;
                case 4: case 11: add_seg(er, pr, et, pt); break;
                case 8: case 7:  add_seg(et, pt, el, pl); break;
                case 3: case 12: add_seg(el, pl, er, pr); break;
                case 6: case 9:  add_seg(eb, pb, et, pt); break;
                case 5: case 10: {
                    const double c = 0.25 * (s00 + s10 + s11 + s01);
                    const bool join_first = ((mask == 5) == (c > 0));
                    if (join_first) {
                        add_seg(el, pl, eb, pb);
                        add_seg(er, pr, et, pt);
                    } else {
                        add_seg(eb, pb, er, pr);
                        add_seg(et, pt, el, pl);
                    }
                    break;
                }
            }
        }
    }

    RawCurves out;
    std::vector<char> used(segs.size(), 0);
    auto walk = [&](int start_seg, int start_edge) {
        std::vector<int> edge_chain{start_edge};
        int seg = start_seg, entry = start_edge;
        bool closed = false;
        while (true) {
            used[seg] = 1;
            const int exit = segs[seg].first == entry ? segs[seg].second : segs[seg].first;
            edge_chain.push_back(exit);
            if (exit == start_edge) {
                closed = true;
                edge_chain.pop_back();
                break;
            }
            int next = -1;
            for (int cand : adj[exit])
                if (!used[cand]) { next = cand; break; }
            if (next < 0) break;
            seg = next;
            entry = exit;
        }
        Polyline poly;
        poly.reserve(edge_chain.size());
        for (int e : edge_chain) poly.push_back(pts[e]);
        out.curves.push_back(std::move(poly));
        out.closed.push_back(closed);
    };

    // open chains first (start at edges of degree 1), then remaining loops
    for (std::size_t s = 0; s < segs.size(); ++s) {
        if (used[s]) continue;
        if (adj[segs[s].first].size() == 1) walk(int(s), segs[s].first);
        else if (adj[segs[s].second].size() == 1) walk(int(s), segs[s].second);
    }
    for (std::size_t s = 0; s < segs.size(); ++s)
        if (!used[s]) walk(int(s), segs[s].first);
    return out;
}

} // namespace trc

// Newton-project z onto { log|f| = target_log } along grad log|f|; returns the
// achieved residual, or nullopt at a near-critical point.
inline std::optional<double> refine_to_level(const FunctionSpec& fn, cplx& z,
                                             double target_log, double tol,
                                             int max_steps) {
    double res = std::numeric_limits<double>::infinity();
    for (int it = 0; it < max_steps; ++it) {
        LogValue lv;
        try {
            lv = eval_log(fn, z);
        } catch (const NearZero&) {
            return std::nullopt;
        }
        res = lv.logmod - target_log;
        if (std::abs(res) <= tol) return std::abs(res);
        cplx L;
        try {
            L = log_derivative(fn, z);
        } catch (const NearZero&) {
            return std::nullopt;
        }
        const double n2 = std::norm(L);
        if (n2 < 1e-18) return std::nullopt;
        z -= res * std::conj(L) / n2;
    }
    return std::abs(res) <= 10 * tol ? std::optional<double>(std::abs(res)) : std::nullopt;
}

struct TraceOptions {
    double tol_level = 1e-10;
    int newton_cap = 50;
    bool detect_zeros = true;
    bool enforce_spacing = true;
};

inline TraceResult trace_level_set(const FunctionSpec& fn, double level, Rect window,
                                   double step, TraceOptions opts = {}) {
    if (!(level > 0)) throw InvalidParam("level must be positive");
    const double iso = std::log(level);
    trc::NodeField g = trc::NodeField::build(fn, window, step, opts.detect_zeros);
    trc::RawCurves raw = trc::extract_iso_curves(g, iso, g.logmod);

    TraceResult out;
    if (opts.detect_zeros) out.zero_cells = g.detect_zero_cells();

    const double tol = opts.tol_level * std::max(1.0, std::abs(iso));
    for (std::size_t c = 0; c < raw.curves.size(); ++c) {
        LevelCurve lc;
        lc.level = level;
        lc.closed = raw.closed[c];
        lc.vertices = std::move(raw.curves[c]);
        for (cplx& v : lc.vertices) {
            auto r = refine_to_level(fn, v, iso, tol, opts.newton_cap);
            if (!r) lc.degenerate = true;
            else lc.max_residual = std::max(lc.max_residual, *r);
        }
        if (opts.enforce_spacing) {
            // subdivide until consecutive vertices are closer than the step
            for (int pass = 0; pass < 8; ++pass) {
                bool split = false;
                Polyline dense;
                dense.reserve(lc.vertices.size() * 2);
                const std::size_t n = lc.vertices.size();
                for (std::size_t i = 0; i < n; ++i) {
                    dense.push_back(lc.vertices[i]);
                    const bool last = (i + 1 == n);
                    if (last && !lc.closed) break;
                    const cplx next = lc.vertices[(i + 1) % n];
                    if (std::abs(next - lc.vertices[i]) >= step) {
                        cplx mid = 0.5 * (lc.vertices[i] + next);
                        auto r = refine_to_level(fn, mid, iso, tol, opts.newton_cap);
                        if (r) lc.max_residual = std::max(lc.max_residual, *r);
                        dense.push_back(mid);
                        split = true;
                    }
                }
                lc.vertices = std::move(dense);
                if (!split) break;
            }
        }
        out.curves.push_back(std::move(lc));
    }
    return out;
}

// ---------------------------------------------------------------------------
// TractRegion: traced component of {|f| > R} with a grid containment oracle
// ---------------------------------------------------------------------------

struct TractRegion {
    FunctionSpec fn;
    double level = 1.0;
    cplx seed;
    Rect window;
    double step = 0;
    std::string label;
    bool truncated = false;  // component touches the window edge
    std::vector<LevelCurve> boundary;
    std::vector<ZeroCell> zero_cells;

    // containment grid (node labels; -1 where |f| <= R)
    int nx = 0, ny = 0;
    double dx = 0, dy = 0;
    std::vector<std::int32_t> node_label;
    std::int32_t component = -1;

    bool node_in_component(int i, int j) const {
        if (i < 0 || j < 0 || i > nx || j > ny) return false;
        return node_label[std::size_t(j) * (nx + 1) + i] == component;
    }

    // grid-resolution containment: nearest node must belong to the component
    // and |f(z)| must exceed the level
    bool contains(cplx z) const {
        if (!window.contains(z)) return false;
        const int i = int(std::lround((z.real() - window.x0) / dx));
        const int j = int(std::lround((z.imag() - window.y0) / dy));
        if (!node_in_component(i, j)) return false;
        try {
            return eval_log(fn, z).logmod > std::log(level);
        } catch (const NearZero&) {
            return false;
        } catch (const Error&) {
            return false;
        }
    }

    // closure membership with tolerance in log scale
    bool contains_closure(cplx z, double log_tol = 1e-9) const {
        if (!window.contains(z)) return false;
        const int i = int(std::lround((z.real() - window.x0) / dx));
        const int j = int(std::lround((z.imag() - window.y0) / dy));
        bool near_component = false;
        for (int dj = -1; dj <= 1 && !near_component; ++dj)
            for (int di = -1; di <= 1 && !near_component; ++di)
                if (node_in_component(i + di, j + dj)) near_component = true;
        if (!near_component) return false;
        try {
            return eval_log(fn, z).logmod >= std::log(level) - log_tol;
        } catch (const NearZero&) {
            return false;
        } catch (const Error&) {
            return false;
        }
    }
};

inline TractRegion locate_tract(const FunctionSpec& fn, cplx seed, double level,
                                Rect window, double step, TraceOptions opts = {}) {
    if (!(level > 0)) throw InvalidParam("level must be positive");
    const double iso = std::log(level);
    double seed_log;
    try {
        seed_log = eval_log(fn, seed).logmod;
    } catch (const NearZero&) {
        throw SeedNotInTract("|f(seed)| is zero");
    }
    if (std::abs(seed_log - iso) <= 1e-9 * std::max(1.0, std::abs(iso)))
        throw SeedOnBoundary("|f(seed)| = level within tolerance");
    if (seed_log < iso) throw SeedNotInTract("|f(seed)| <= level");

    trc::NodeField g = trc::NodeField::build(fn, window, step, opts.detect_zeros);

    TractRegion region;
    region.fn = fn;
    region.level = level;
    region.seed = seed;
    region.window = g.window;
    region.step = step;
    region.nx = g.nx;
    region.ny = g.ny;
    region.dx = g.dx;
    region.dy = g.dy;
    region.node_label.assign(std::size_t(g.nx + 1) * (g.ny + 1), -1);

    // BFS components over nodes with log|f| > iso, labeled in scan order
    std::int32_t next_label = 0;
    for (int j = 0; j <= g.ny; ++j) {
        for (int i = 0; i <= g.nx; ++i) {
            const std::size_t id = g.node_index(i, j);
            if (region.node_label[id] != -1) continue;
            if (!(g.logmod[id] > iso)) continue;
            const std::int32_t lab = next_label++;
            std::deque<std::pair<int, int>> queue{{i, j}};
            region.node_label[id] = lab;
            while (!queue.empty()) {
                auto [ci, cj] = queue.front();
                queue.pop_front();
                const int di[4] = {1, -1, 0, 0}, dj[4] = {0, 0, 1, -1};
                for (int d = 0; d < 4; ++d) {
                    const int ni = ci + di[d], nj = cj + dj[d];
                    if (ni < 0 || nj < 0 || ni > g.nx || nj > g.ny) continue;
                    const std::size_t nid = g.node_index(ni, nj);
                    if (region.node_label[nid] == -1 && g.logmod[nid] > iso) {
                        region.node_label[nid] = lab;
                        queue.emplace_back(ni, nj);
                    }
                }
            }
        }
    }

    // the seed's component; search a small neighborhood if the nearest node
    // missed the region (thin slivers)
    const int si = int(std::lround((seed.real() - g.window.x0) / g.dx));
    const int sj = int(std::lround((seed.imag() - g.window.y0) / g.dy));
    std::int32_t comp = -1;
    for (int rad = 0; rad <= 3 && comp == -1; ++rad) {
        for (int dj2 = -rad; dj2 <= rad && comp == -1; ++dj2) {
            for (int di2 = -rad; di2 <= rad && comp == -1; ++di2) {
                const int ni = si + di2, nj = sj + dj2;
                if (ni < 0 || nj < 0 || ni > g.nx || nj > g.ny) continue;
                const std::int32_t lab = region.node_label[g.node_index(ni, nj)];
                if (lab != -1) comp = lab;
            }
        }
    }
    if (comp == -1) throw SeedNotInTract("no tract node near seed at this resolution");
    region.component = comp;
    region.label = "T" + std::to_string(comp);

    for (int j = 0; j <= g.ny; ++j)
        for (int i = 0; i <= g.nx; ++i)
            if ((i == 0 || j == 0 || i == g.nx || j == g.ny) &&
                region.node_label[g.node_index(i, j)] == comp)
                region.truncated = true;

    // extract the level curves and keep those bordering this component
    TraceResult traced = trace_level_set(fn, level, window, step, opts);
    region.zero_cells = std::move(traced.zero_cells);
    for (LevelCurve& lc : traced.curves) {
        if (lc.vertices.empty()) continue;
        bool attributed = false;
        for (std::size_t probe = 0; probe < lc.vertices.size() && !attributed;
             probe += std::max<std::size_t>(1, lc.vertices.size() / 7)) {
            const cplx v = lc.vertices[probe];
            cplx dir{1, 0};
            try {
                const cplx L = log_derivative(fn, v);
                if (std::abs(L) > 1e-12) dir = std::conj(L) / std::abs(L);
            } catch (const Error&) {}
            const cplx p = v + 0.9 * std::max(g.dx, g.dy) * dir;
            const int pi_ = int(std::lround((p.real() - g.window.x0) / g.dx));
            const int pj = int(std::lround((p.imag() - g.window.y0) / g.dy));
            if (pi_ < 0 || pj < 0 || pi_ > g.nx || pj > g.ny) continue;
            if (region.node_label[g.node_index(pi_, pj)] == comp) attributed = true;
        }
        if (attributed) region.boundary.push_back(std::move(lc));
    }
    return region;
}

// ---------------------------------------------------------------------------
// tract maximum modulus M_D
// ---------------------------------------------------------------------------

struct MaxModulus {
    double log_max = -std::numeric_limits<double>::infinity();
    double theta = 0;
    double uncertainty = 0;  // max adjacent-sample log gap across the arcs
    int arcs = 0;
    int samples_in_tract = 0;
};

inline MaxModulus max_modulus_on_tract(const FunctionSpec& fn, const TractRegion& tract,
                                       double r, int init_samples = 4096) {
    if (!(r > 0)) throw InvalidParam("radius must be positive");
    const int m = init_samples;
    std::vector<char> in(m, 0);
    std::vector<double> lm(m, 0);
    int kept = 0;
    for (int k = 0; k < m; ++k) {
        const double th = 2 * M_PI * k / m;
        const cplx z = std::polar(r, th);
        if (tract.contains(z)) {
            in[k] = 1;
            lm[k] = eval_log(fn, z).logmod;
            ++kept;
        }
    }
    if (kept == 0)
        throw CircleMissesTract("circle |z| = " + std::to_string(r) +
                                " does not meet the tract within the window");

    MaxModulus out;
    out.samples_in_tract = kept;
    // count arcs (contiguous runs, circular)
    for (int k = 0; k < m; ++k)
        if (in[k] && !in[(k + m - 1) % m]) ++out.arcs;
    if (out.arcs == 0) out.arcs = 1;  // full circle inside

    auto objective = [&](double th) { return eval_log(fn, std::polar(r, th)).logmod; };

    for (int k = 0; k < m; ++k) {
        if (!in[k]) continue;
        const int prev = (k + m - 1) % m, next = (k + 1) % m;
        if (in[prev] && lm[prev] > lm[k]) continue;
        if (in[next] && lm[next] >= lm[k]) continue;
        // local max at k; golden-section refine inside the bracket
        double a = 2 * M_PI * (k - 1) / m, b = 2 * M_PI * (k + 1) / m;
        if (!in[prev]) a = 2 * M_PI * k / m;
        if (!in[next]) b = 2 * M_PI * k / m;
        double best_th = 2 * M_PI * k / m, best = lm[k];
        if (b > a) {
            const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
            double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
            double f1 = objective(x1), f2 = objective(x2);
            for (int it = 0; it < 60 && (b - a) > 1e-12; ++it) {
                if (f1 < f2) {
                    a = x1; x1 = x2; f1 = f2;
                    x2 = a + gr * (b - a); f2 = objective(x2);
                } else {
                    b = x2; x2 = x1; f2 = f1;
                    x1 = b - gr * (b - a); f1 = objective(x1);
                }
            }
            const double mid = 0.5 * (a + b), fm = objective(mid);
            if (fm > best) { best = fm; best_th = mid; }
        }
        if (best > out.log_max) {
            out.log_max = best;
            out.theta = best_th;
        }
    }
    for (int k = 0; k < m; ++k) {
        const int next = (k + 1) % m;
        if (in[k] && in[next])
            out.uncertainty = std::max(out.uncertainty, std::abs(lm[next] - lm[k]));
    }
    return out;
}

struct MDIterates {
    std::vector<double> log_values;   // log M_D^k(rho), k = 1..n
    std::vector<bool> extrapolated;   // true once the window cannot certify
};

inline MDIterates iterate_MD(const FunctionSpec& fn, const TractRegion& tract,
                             double rho, int n) {
    if (n < 1) throw InvalidParam("need at least one iterate");
    // largest radius whose full circle stays inside the window
    const Rect& w = tract.window;
    const double r_cert = std::min(std::min(w.x1, -w.x0), std::min(w.y1, -w.y0));
    MDIterates out;
    double r = rho;
    for (int k = 0; k < n; ++k) {
        double log_next;
        bool extrap;
        if (std::isfinite(r) && r <= r_cert && r > 0) {
            log_next = max_modulus_on_tract(fn, tract, r).log_max;
            extrap = false;
        } else {
            if (!has_md_asymptote(fn.id))
                throw InvalidParam("radius beyond window and no declared asymptote for " +
                                   fn.name());
            log_next = std::isfinite(r) ? md_asymptote_log(fn.id, r)
                                        : std::numeric_limits<double>::infinity();
            extrap = true;
        }
        if (k == 0 && !(log_next > std::log(rho)))
            throw NotExpanding("M_D(rho) <= rho at rho = " + std::to_string(rho));
        out.log_values.push_back(log_next);
        out.extrapolated.push_back(extrap);
        r = log_next > fnd::kLogDblMax ? std::numeric_limits<double>::infinity()
                                       : std::exp(log_next);
    }
    return out;
}

struct ConvexityReport {
    double r = 0, c = 0;
    double log_md_r = 0, log_md_rc = 0;
    double margin = 0;       // log M_D(r^c) - c log M_D(r)
    double uncertainty = 0;
    bool pass = false;
};

inline ConvexityReport check_MD_convexity(const FunctionSpec& fn, const TractRegion& tract,
                                          double r, double c, double tol = 1e-9) {
    if (!(c > 1)) throw InvalidParam("c must exceed 1");
    ConvexityReport rep;
    rep.r = r;
    rep.c = c;
    const MaxModulus m1 = max_modulus_on_tract(fn, tract, r);
    const MaxModulus m2 = max_modulus_on_tract(fn, tract, std::pow(r, c));
    rep.log_md_r = m1.log_max;
    rep.log_md_rc = m2.log_max;
    rep.margin = m2.log_max - c * m1.log_max;
    rep.uncertainty = m2.uncertainty + c * m1.uncertainty;
    rep.pass = rep.margin >= -(tol + rep.uncertainty);
    return rep;
}

// ---------------------------------------------------------------------------
// Eremenko-Lyubich expansion estimate sweep
// ---------------------------------------------------------------------------

struct ExpansionSample {
    cplx z;
    double lhs = 0;     // |z f'(z)/f(z)|
    double rhs = 0;     // log|f(z)| / (4 pi)
    double margin = 0;  // lhs - rhs
    bool pass = false;
};

struct ExpansionReport {
    std::vector<ExpansionSample> samples;
    int violations = 0;
};

inline ExpansionReport check_expansion_estimate(const FunctionSpec& fn,
                                                const TractRegion& tract,
                                                const std::vector<cplx>& samples) {
    ExpansionReport rep;
    for (cplx z : samples) {
        if (!tract.contains(z))
            throw SampleOutsideTract("sample not in the tract at grid resolution");
        ExpansionSample s;
        s.z = z;
        s.lhs = std::abs(z) * std::abs(log_derivative(fn, z));
        s.rhs = eval_log(fn, z).logmod / (4 * M_PI);
        s.margin = s.lhs - s.rhs;
        s.pass = s.margin >= 0;
        if (!s.pass) ++rep.violations;
        rep.samples.push_back(s);
    }
    return rep;
}

} // namespace tractoria
