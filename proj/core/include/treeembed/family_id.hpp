#ifndef TREEEMBED_FAMILY_ID_HPP
#define TREEEMBED_FAMILY_ID_HPP

#include <string>
#include <string_view>

namespace treeembed {

/// Host-tree families.
enum class Family {
  plane_binary,     // B_n, ordered, out-degrees {0, 2}
  nonplane_binary,  // V_n, unordered, out-degrees {0, 2}
  planted_plane,    // T_n, ordered, unrestricted out-degrees
};

/// How embeddings are compared against the pattern.
enum class EmbedMode { plane, nonplane };

/// What one embedding is. Plane trees have no non-trivial automorphisms, so
/// the distinction only matters in non-plane mode: `orbits` identifies node
/// subsets that are mapped onto each other by an automorphism of the host.
enum class Counting { subsets, orbits };

constexpr EmbedMode mode_for(Family fam) noexcept {
  return fam == Family::nonplane_binary ? EmbedMode::nonplane : EmbedMode::plane;
}

constexpr bool is_binary(Family fam) noexcept { return fam != Family::planted_plane; }

/// "plane-binary", "nonplane-binary", "planted-plane" (underscores accepted).
Family parse_family(std::string_view name);
std::string family_name(Family fam);

}  // namespace treeembed

#endif  // TREEEMBED_FAMILY_ID_HPP
