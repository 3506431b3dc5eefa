#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "berger/geometry.hpp"
#include "berger/graph.hpp"

namespace berger {

enum class ViolationKind {
    NonFiniteCoordinate,
    DuplicateCoordinates,
    SelfLoop,
    DuplicateEdge,
    EdgeCrossing,
    NodeOnEdge,
    SourceEqualsTarget,
    SourceTargetAdjacent,
    Disconnected,
    NodeOnSegment,
    EdgeOverlapsSegment,
    CollinearNeighbors,
    TooFewNodes,
    ReducedDisconnected,
    ReducedSeparatingPair,
};

const char* toString(ViolationKind kind);

struct Violation
{
    ViolationKind kind;
    std::string message;
    std::vector<NodeId> witness;
};

struct ValidationReport
{
    std::vector<Violation> violations;

    bool admissible() const { return violations.empty(); }
    bool contains(ViolationKind kind) const;
    const Violation* first(ViolationKind kind) const;
};

// Checks the embedding, general position and 3-connectivity of G - st.
// Every violated property gets a report entry with a witness.
ValidationReport validateInstance(const Instance& inst);

// G without every edge that intersects segment s-t.
EmbeddedGraph reducedGraph(const Instance& inst);

// A vertex pair whose removal disconnects g, an empty vector if g is already
// disconnected, or nullopt if neither exists (3-connected when |V| >= 4).
std::optional<std::vector<NodeId>> separatingSet(const EmbeddedGraph& g);

struct Face
{
    // Boundary walk: darts nodes[i] -> nodes[i + 1], closing back to nodes[0].
    std::vector<NodeId> nodes;
    bool external = false;
};

/// Faces of a connected plane graph from its rotation system.
///
/// The successor of dart (u, v) is (v, w) with w the next neighbor of v
/// clockwise after u, so internal faces are walked counter-clockwise.
class FaceSet
{
public:
    FaceSet() = default;
    explicit FaceSet(const EmbeddedGraph& g);

    const std::vector<Face>& faces() const { return faces_; }
    std::size_t size() const { return faces_.size(); }
    const Face& operator[](std::size_t i) const { return faces_[i]; }
    std::size_t faceOfDart(std::size_t dart) const { return dartFace_[dart]; }
    std::size_t externalFace() const { return external_; }

private:
    std::vector<Face> faces_;
    std::vector<std::size_t> dartFace_;
    std::size_t external_ = 0;
};

// Throws std::invalid_argument on a disconnected graph.
FaceSet enumerateFaces(const EmbeddedGraph& g);

class TopologyError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct GreenFace
{
    EmbeddedGraph reduced;
    FaceSet faces;
    std::size_t face = 0;
    std::vector<NodeId> nodes;  // sorted
    NodeId source = 0;
    NodeId target = 0;

    bool isGreen(NodeId n) const;
};

GreenFace greenFace(const Instance& inst);

struct BlueFace
{
    std::vector<std::size_t> faces;
    std::vector<NodeId> nodes;  // sorted
};

// Union of the non-green faces of G - st adjacent to green node k.
BlueFace blueFace(const Instance& inst, NodeId k);
BlueFace blueFace(const GreenFace& green, NodeId k);

enum class FaceClass { Green, Blue, Other };

struct FaceClassification
{
    FaceClass kind = FaceClass::Other;
    std::vector<NodeId> blueFor;  // green nodes k this face is k-blue for
};

std::vector<FaceClassification> classifyFaces(const GreenFace& green);

// Left or right hand traversal of the green face from s until t, by repeated
// nextNode. Throws TopologyError if t is not reached within |V| hops.
std::vector<NodeId> corePathOracle(const Instance& inst, Direction c);

struct ThreadPath
{
    std::vector<NodeId> nodes;
    bool reachedTarget = false;
};

// Thread skipping k sent from `origin`, which received it from `reference`
// (t when origin is the source). Follows nextNode with skip k until t or a
// return to origin.
ThreadPath threadPathOracle(const Instance& inst, NodeId origin, NodeId reference, NodeId k, Direction c);

// As above, with the reference derived from the c core path: t for the
// source, otherwise origin's predecessor on that path.
ThreadPath threadPathOracle(const Instance& inst, NodeId origin, NodeId k, Direction c);

}  // namespace berger
