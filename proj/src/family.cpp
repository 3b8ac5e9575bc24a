#include "netindex/family.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>

namespace netindex {

namespace {

std::string lowered(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

}  // namespace

std::string_view family_name(Family family) {
    switch (family) {
        case Family::SL: return "SL";
        case Family::CS: return "CS";
        case Family::HX: return "HX";
        case Family::OX: return "OX";
        case Family::HC: return "HC";
    }
    throw std::logic_error("unhandled Family value");
}

Family parse_family(std::string_view name) {
    const std::string key = lowered(name);
    for (Family f : kAllFamilies)
        if (key == lowered(family_name(f))) return f;
    throw std::invalid_argument("unknown family '" + std::string(name) +
                                "' (expected one of SL, CS, HX, OX, HC)");
}

std::string_view index_name(IndexKind kind) {
    switch (kind) {
        case IndexKind::Pi1c:    return "pi1c";
        case IndexKind::Pi2:     return "pi2";
        case IndexKind::Chi:     return "chi";
        case IndexKind::Pi1Star: return "pi1star";
        case IndexKind::M1:      return "m1";
        case IndexKind::M2:      return "m2";
        case IndexKind::NK:      return "nk";
    }
    throw std::logic_error("unhandled IndexKind value");
}

IndexKind parse_index(std::string_view name) {
    const std::string key = lowered(name);
    if (key == "pi1") return IndexKind::Pi1c;
    for (IndexKind k : kAllIndexKinds)
        if (key == index_name(k)) return k;
    throw std::invalid_argument(
        "unknown index '" + std::string(name) +
        "' (expected one of pi1c, pi2, chi, pi1star, m1, m2, nk)");
}

}  // namespace netindex
