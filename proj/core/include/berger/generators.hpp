#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "berger/graph.hpp"

namespace berger {

// double-ring: inner and outer ring joined by a zigzag band, s on the inner
// ring and t on the far side of the outer ring, so st crosses the band.
// triangulated-ladder: two aligned rings joined by rungs and diagonals, s and t
// opposite on the inner ring; nothing crosses st.
// gabriel-unit-disk: jittered triangular lattice, Gabriel edges no longer than
// the radio range, s and t picked among far-apart interior pairs.
enum class Family { DoubleRing, TriangulatedLadder, GabrielUnitDisk };

const char* toString(Family family);
std::optional<Family> parseFamily(std::string_view name);

struct GeneratedInstance
{
    Instance instance;
    std::uint64_t seedUsed = 0;
    int attempts = 0;
};

class GenerationError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultGenerationAttempts = 64;

// One unvalidated candidate for exactly this seed.
Instance generateCandidate(Family family, std::size_t size, std::uint64_t seed);

// Candidates for seed, then perturbed seeds, until one validates. Throws
// std::invalid_argument for size < 6 and GenerationError once maxAttempts
// candidates have been rejected.
GeneratedInstance generateFamily(Family family, std::size_t size, std::uint64_t seed,
                                 int maxAttempts = kDefaultGenerationAttempts);

}  // namespace berger
