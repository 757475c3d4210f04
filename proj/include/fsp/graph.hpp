// graph.hpp: CSR graphs, torus RGG and Erdős–Rényi generators
#pragma once
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fsp/rng.hpp"

namespace fsp {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

struct TorusPoint {
    double x = 0.0;
    double y = 0.0;
};

/// Undirected simple graph in compressed adjacency form. Neighbor lists are
/// sorted, symmetric, and free of self-loops and duplicates.
class Graph {
public:
    Graph() = default;

    /// Builds from an arbitrary edge list. Self-loops are rejected; duplicates
    /// (in either orientation) are merged.
    static Graph from_edges(std::size_t n, std::span<const Edge> edges);

    std::size_t vertex_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t edge_count() const noexcept { return neighbors_.size() / 2; }
    std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
    std::span<const Vertex> neighbors(Vertex v) const {
        return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
    }
    bool has_edge(Vertex u, Vertex v) const;

    /// Every edge once as (u, v) with u < v, lexicographically sorted.
    std::vector<Edge> edges() const;

    /// Re-checks the structural invariants; returns an empty string when they hold.
    std::string validate() const;

private:
    std::vector<std::size_t> offsets_;
    std::vector<Vertex> neighbors_;
};

struct GeometricGraph {
    Graph graph;
    std::vector<TorusPoint> points;
    double radius = 0.0;
};

struct NeighborhoodPartition {
    std::vector<Vertex> common;
    std::vector<Vertex> u_exclusive;
    std::vector<Vertex> v_exclusive;
    /// Vertices adjacent to neither endpoint, u and v excluded.
    std::size_t outside_count = 0;
};

double torus_distance(TorusPoint a, TorusPoint b) noexcept;

/// r = sqrt(avg_degree / ((n-1) pi)); rejects r > 1/2.
double radius_for_degree(std::size_t n, double avg_degree);
/// p = avg_degree / (n-1); rejects p > 1.
double er_probability_for_degree(std::size_t n, double avg_degree);

/// Draws 2n uniforms (x then y per vertex, in vertex order).
std::vector<TorusPoint> sample_torus_points(std::size_t n, RngStream& stream);

/// Cell-grid construction: edge iff torus distance <= radius.
Graph rgg_from_points(std::span<const TorusPoint> points, double radius);
/// All-pairs reference construction for the same rule.
Graph rgg_from_points_naive(std::span<const TorusPoint> points, double radius);

GeometricGraph generate_rgg(std::size_t n, double avg_degree, RngStream& stream);
Graph generate_er(std::size_t n, double avg_degree, RngStream& stream);
/// G(n, p) by geometric skipping over the lexicographic pair sequence.
Graph generate_er_with_probability(std::size_t n, double p, RngStream& stream);

NeighborhoodPartition neighborhood_partition(const Graph& g, Vertex u, Vertex v);

/// One "u v" line per edge, 0-indexed, lexicographically sorted.
void write_edge_list(const Graph& g, std::ostream& out);
void write_edge_list(const Graph& g, const std::string& path);

} // namespace fsp
