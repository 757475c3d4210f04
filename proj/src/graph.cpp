#include "fsp/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "fsp/errors.hpp"

namespace fsp {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
    std::vector<Edge> oriented;
    oriented.reserve(edges.size());
    for (auto [a, b] : edges) {
        if (a >= n || b >= n) {
            throw ParameterError("edge (" + std::to_string(a) + "," + std::to_string(b) +
                                 ") references a vertex outside [0," + std::to_string(n) + ")");
        }
        if (a == b) throw ParameterError("self-loop at vertex " + std::to_string(a));
        oriented.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(oriented.begin(), oriented.end());
    oriented.erase(std::unique(oriented.begin(), oriented.end()), oriented.end());

    Graph g;
    g.offsets_.assign(n + 1, 0);
    for (auto [a, b] : oriented) {
        ++g.offsets_[a + 1];
        ++g.offsets_[b + 1];
    }
    for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
    g.neighbors_.resize(2 * oriented.size());
    std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    for (auto [a, b] : oriented) {
        g.neighbors_[fill[a]++] = b;
        g.neighbors_[fill[b]++] = a;
    }
    for (std::size_t v = 0; v < n; ++v) {
        std::sort(g.neighbors_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
                  g.neighbors_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]));
    }
    return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (u >= vertex_count() || v >= vertex_count()) return false;
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (Vertex u = 0; u < vertex_count(); ++u) {
        for (Vertex v : neighbors(u)) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

std::string Graph::validate() const {
    const std::size_t n = vertex_count();
    std::size_t degree_sum = 0;
    for (Vertex v = 0; v < n; ++v) {
        auto nb = neighbors(v);
        degree_sum += nb.size();
        for (std::size_t i = 0; i < nb.size(); ++i) {
            if (nb[i] >= n) return "neighbor index out of range at vertex " + std::to_string(v);
            if (nb[i] == v) return "self-loop at vertex " + std::to_string(v);
            if (i > 0 && nb[i - 1] >= nb[i]) return "unsorted or duplicate neighbor at vertex " + std::to_string(v);
            if (!has_edge(nb[i], v)) return "asymmetric adjacency between " + std::to_string(v) + " and " + std::to_string(nb[i]);
        }
    }
    if (degree_sum != 2 * edge_count()) return "degree sum does not match edge count";
    return {};
}

double torus_distance(TorusPoint a, TorusPoint b) noexcept {
    double dx = std::abs(a.x - b.x);
    double dy = std::abs(a.y - b.y);
    dx = std::min(dx, 1.0 - dx);
    dy = std::min(dy, 1.0 - dy);
    return std::sqrt(dx * dx + dy * dy);
}

double radius_for_degree(std::size_t n, double avg_degree) {
    if (n < 2) throw ParameterError("radius_for_degree: need n >= 2");
    if (!(avg_degree > 0.0)) throw ParameterError("radius_for_degree: average degree must be positive");
    const double r = std::sqrt(avg_degree / (static_cast<double>(n - 1) * std::numbers::pi));
    if (r > 0.5) {
        throw ParameterError("radius_for_degree: radius " + std::to_string(r) +
                             " exceeds 1/2; the disk would wrap onto itself");
    }
    return r;
}

double er_probability_for_degree(std::size_t n, double avg_degree) {
    if (n < 2) throw ParameterError("er_probability_for_degree: need n >= 2");
    if (!(avg_degree > 0.0)) throw ParameterError("er_probability_for_degree: average degree must be positive");
    const double p = avg_degree / static_cast<double>(n - 1);
    if (p > 1.0) throw ParameterError("er_probability_for_degree: edge probability " + std::to_string(p) + " exceeds 1");
    return p;
}

std::vector<TorusPoint> sample_torus_points(std::size_t n, RngStream& stream) {
    std::vector<TorusPoint> points(n);
    for (auto& p : points) {
        p.x = stream.next_unit_uniform();
        p.y = stream.next_unit_uniform();
    }
    return points;
}

Graph rgg_from_points(std::span<const TorusPoint> points, double radius) {
    const std::size_t n = points.size();
    if (!(radius > 0.0) || radius > 0.5) throw ParameterError("rgg_from_points: radius must lie in (0, 1/2]");

    // Cell side 1/k >= radius, so every neighbor lies in the 3x3 block around a cell.
    const auto k = static_cast<std::size_t>(std::max(1.0, std::floor(1.0 / radius)));
    auto cell_of = [k](double coord) {
        return std::min(k - 1, static_cast<std::size_t>(coord * static_cast<double>(k)));
    };

    std::vector<std::size_t> cell_start(k * k + 1, 0);
    std::vector<std::size_t> cell_index(n);
    for (std::size_t i = 0; i < n; ++i) {
        cell_index[i] = cell_of(points[i].y) * k + cell_of(points[i].x);
        ++cell_start[cell_index[i] + 1];
    }
    for (std::size_t c = 0; c < k * k; ++c) cell_start[c + 1] += cell_start[c];
    std::vector<Vertex> bucket(n);
    {
        std::vector<std::size_t> fill(cell_start.begin(), cell_start.end() - 1);
        for (std::size_t i = 0; i < n; ++i) bucket[fill[cell_index[i]]++] = static_cast<Vertex>(i);
    }

    // With k < 3 the offsets -1,0,+1 alias the same cell; visit each distinct cell once.
    std::vector<std::size_t> offsets;
    for (std::size_t d : {k - 1, std::size_t{0}, std::size_t{1}}) {
        const std::size_t m = d % k;
        if (std::find(offsets.begin(), offsets.end(), m) == offsets.end()) offsets.push_back(m);
    }

    std::vector<Edge> edges;
    for (std::size_t cy = 0; cy < k; ++cy) {
        for (std::size_t cx = 0; cx < k; ++cx) {
            const std::size_t here = cy * k + cx;
            for (std::size_t oy : offsets) {
                for (std::size_t ox : offsets) {
                    const std::size_t there = ((cy + oy) % k) * k + (cx + ox) % k;
                    for (std::size_t a = cell_start[here]; a < cell_start[here + 1]; ++a) {
                        const Vertex u = bucket[a];
                        for (std::size_t b = cell_start[there]; b < cell_start[there + 1]; ++b) {
                            const Vertex v = bucket[b];
                            if (u < v && torus_distance(points[u], points[v]) <= radius) edges.emplace_back(u, v);
                        }
                    }
                }
            }
        }
    }
    return Graph::from_edges(n, edges);
}

Graph rgg_from_points_naive(std::span<const TorusPoint> points, double radius) {
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < points.size(); ++u) {
        for (std::size_t v = u + 1; v < points.size(); ++v) {
            if (torus_distance(points[u], points[v]) <= radius) {
                edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
            }
        }
    }
    return Graph::from_edges(points.size(), edges);
}

GeometricGraph generate_rgg(std::size_t n, double avg_degree, RngStream& stream) {
    GeometricGraph out;
    out.radius = radius_for_degree(n, avg_degree);
    out.points = sample_torus_points(n, stream);
    out.graph = rgg_from_points(out.points, out.radius);
    return out;
}

Graph generate_er(std::size_t n, double avg_degree, RngStream& stream) {
    return generate_er_with_probability(n, er_probability_for_degree(n, avg_degree), stream);
}

Graph generate_er_with_probability(std::size_t n, double p, RngStream& stream) {
    if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("generate_er: probability outside [0,1]");
    std::vector<Edge> edges;
    if (p == 0.0 || n < 2) return Graph::from_edges(n, edges);
    if (p == 1.0) {
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
        return Graph::from_edges(n, edges);
    }

    // Batagelj–Brandes skipping over pairs (v, w), w < v, in row-major order.
    const double log_q = std::log1p(-p);
    std::int64_t v = 1;
    std::int64_t w = -1;
    const auto nn = static_cast<std::int64_t>(n);
    while (v < nn) {
        const double skip = std::floor(std::log1p(-stream.next_unit_uniform()) / log_q);
        if (skip >= static_cast<double>(nn) * static_cast<double>(nn)) break;
        w += 1 + static_cast<std::int64_t>(skip);
        while (w >= v && v < nn) {
            w -= v;
            ++v;
        }
        if (v < nn) edges.emplace_back(static_cast<Vertex>(w), static_cast<Vertex>(v));
    }
    return Graph::from_edges(n, edges);
}

NeighborhoodPartition neighborhood_partition(const Graph& g, Vertex u, Vertex v) {
    const std::size_t n = g.vertex_count();
    if (u >= n || v >= n) throw ParameterError("neighborhood_partition: vertex index out of range");
    if (u == v) throw ParameterError("neighborhood_partition: endpoints must differ");

    NeighborhoodPartition part;
    auto a = g.neighbors(u);
    auto b = g.neighbors(v);
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i] < b[j])) {
            if (a[i] != v) part.u_exclusive.push_back(a[i]);
            ++i;
        } else if (i == a.size() || b[j] < a[i]) {
            if (b[j] != u) part.v_exclusive.push_back(b[j]);
            ++j;
        } else {
            part.common.push_back(a[i]);
            ++i;
            ++j;
        }
    }
    part.outside_count = n - 2 - part.common.size() - part.u_exclusive.size() - part.v_exclusive.size();
    return part;
}

void write_edge_list(const Graph& g, std::ostream& out) {
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_edge_list(const Graph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    write_edge_list(g, out);
    if (!out) throw IoError("write failed for '" + path + "'");
}

} // namespace fsp
