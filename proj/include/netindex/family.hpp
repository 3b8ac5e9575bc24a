#pragma once

#include <array>
#include <string_view>

namespace netindex {

/// The five parametric network families the toolkit builds.
enum class Family { SL, CS, HX, OX, HC };

inline constexpr std::array<Family, 5> kAllFamilies = {
    Family::SL, Family::CS, Family::HX, Family::OX, Family::HC};

std::string_view family_name(Family family);

/// Case-insensitive; throws std::invalid_argument for unknown names.
Family parse_family(std::string_view name);

/// Degree-based indices the toolkit evaluates.
///   Pi1c    first multiplicative Zagreb index, prod_v d(v)^c
///   Pi2     second multiplicative Zagreb index, prod_{uv} d(u) d(v)
///   Chi     general sum-connectivity index, sum_{uv} (d(u) + d(v))^alpha
///   Pi1Star modified first multiplicative Zagreb index, prod_{uv} (d(u) + d(v))
///   M1, M2  first / second Zagreb index
///   NK      Narumi-Katayama index, prod_v d(v)
enum class IndexKind { Pi1c, Pi2, Chi, Pi1Star, M1, M2, NK };

inline constexpr std::array<IndexKind, 7> kAllIndexKinds = {
    IndexKind::Pi1c, IndexKind::Pi2,  IndexKind::Chi, IndexKind::Pi1Star,
    IndexKind::M1,   IndexKind::M2,   IndexKind::NK};

std::string_view index_name(IndexKind kind);

/// Accepts the canonical names plus the "pi1" alias for pi1c.
IndexKind parse_index(std::string_view name);

}  // namespace netindex
