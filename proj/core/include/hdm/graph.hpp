#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hdm {

enum class Color { Black, White };
enum class Surface { Disk, Plane, Torus };

struct Vertex {
    int id = 0;
    Color color = Color::Black;
    int n = 1;
    // Incident edge ids: counterclockwise at black, clockwise at white.
    std::vector<int> rotation;
    // The mark sits in the wedge just before rotation[*cilium].
    std::optional<int> cilium;
    std::optional<std::pair<double, double>> pos;
};

struct Edge {
    int id = 0;
    int black = 0;
    int white = 0;
    std::pair<int, int> homology{0, 0};
};

struct BoundaryEntry {
    int v = 0;
    int d = 1;
};

struct EmbeddingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PlanarGraph {
    Surface surface = Surface::Disk;
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    std::vector<BoundaryEntry> boundary;

    int add_vertex(Color c, int n, std::optional<std::pair<double, double>> pos = std::nullopt);
    // Appends the edge to both rotations; callers reorder rotations afterwards if needed.
    int add_edge(int b, int w, std::pair<int, int> homology = {0, 0});

    int other_end(int e, int v) const { return edges[e].black == v ? edges[e].white : edges[e].black; }
    int degree(int v) const { return static_cast<int>(vertices[v].rotation.size()); }
    bool is_black(int v) const { return vertices[v].color == Color::Black; }
    // Boundary multiplicity d_v, or 0 for interior vertices.
    int boundary_d(int v) const;
    bool is_boundary(int v) const { return boundary_d(v) > 0; }
    // n_v at interior vertices, d_v at boundary vertices.
    int demand(int v) const;
    bool has_positions() const;
};

struct Dart {
    int edge;
    int from;
    int to;
};

struct Face {
    std::vector<Dart> walk;
    // Wedge (vertex, wedge index) entered after each dart; wedge i sits before rotation[i].
    std::vector<std::pair<int, int>> wedges;
    int length = 0;
    int cilia = 0;
};

// Counterclockwise list of edges at v. `mirrored` reads every rotation in the opposite sense.
std::vector<int> ccw_rotation(const PlanarGraph& g, int v, bool mirrored = false);
// Index of the wedge at v between edge e and the next edge counterclockwise.
int wedge_after(const PlanarGraph& g, int v, int e, bool mirrored = false);

// Inner faces come out clockwise. Throws EmbeddingError if the Euler relation fails.
std::vector<Face> trace_faces(const PlanarGraph& g, bool mirrored = false);
// Same walk, no Euler check.
std::vector<Face> trace_faces_unchecked(const PlanarGraph& g, bool mirrored = false);
// Outer face: most boundary vertices, else largest signed area, else longest walk.
int outer_face(const PlanarGraph& g, const std::vector<Face>& faces);
bool is_connected(const PlanarGraph& g);

enum class ViolationKind {
    NotBipartite,
    BadEndpoint,
    RotationMismatch,
    MissingCilium,
    UnexpectedCilium,
    BadCilium,
    BadMultiplicity,
    BoundaryExceedsMultiplicity,
    BadBoundaryVertex,
    Disconnected,
    EulerMismatch,
    BadId,
};

struct Violation {
    ViolationKind kind;
    int id;  // vertex or edge id, -1 for global
    std::string message;
};

std::string to_string(ViolationKind k);
std::vector<Violation> validate(const PlanarGraph& g);

int euler_characteristic(const PlanarGraph& g);

// Sorts every rotation by the angle of the edge direction (needs positions; straight edges).
void rotations_from_positions(PlanarGraph& g);
// Wedge index at v containing the direction `angle` (radians), from positions.
int wedge_toward(const PlanarGraph& g, int v, double angle);  // 2 for Disk/Plane, 0 for Torus

}  // namespace hdm
