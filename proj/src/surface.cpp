#include "minorlab/surface.hpp"

#include <algorithm>
#include <stdexcept>

namespace minorlab {

int Surface::euler_genus() const {
    if (empty) throw std::logic_error("Euler genus of the empty surface is undefined");
    return 2 * h + c;
}

std::string Surface::to_string() const {
    if (empty) return "S0";
    return "S(" + std::to_string(h) + "," + std::to_string(c) + ")";
}

Surface normalize(int h, int c) {
    if (h < 0 || c < 0) throw std::invalid_argument("negative surface parameters");
    while (c >= 3) {
        h += 1;
        c -= 2;
    }
    return Surface{false, h, c};
}

bool surface_leq(const Surface& s1, const Surface& s2) {
    if (s1.empty) return true;
    if (s2.empty) return false;
    bool o1 = s1.orientable(), o2 = s2.orientable();
    if (o1 && o2) return s1.h <= s2.h;
    if (o1 && !o2) return s2.euler_genus() >= s1.euler_genus() + 1;
    if (!o1 && !o2) return s1.euler_genus() <= s2.euler_genus();
    return false;  // non-orientable never reaches an orientable surface
}

std::vector<Surface> surfaces_up_to(int eg_max) {
    std::vector<Surface> out;
    for (int eg = 0; eg <= eg_max; ++eg) {
        if (eg % 2 == 0) out.push_back(Surface{false, eg / 2, 0});
        if (eg >= 1) out.push_back(Surface{false, (eg - 1) / 2, 1 + (eg + 1) % 2});
    }
    return out;
}

namespace {

std::vector<Surface> minimal_antichain(std::vector<Surface> xs) {
    std::vector<Surface> out;
    for (const auto& s : xs) {
        bool dominated = false;
        for (const auto& t : xs)
            if (!(t == s) && surface_leq(t, s)) dominated = true;
        if (!dominated && std::find(out.begin(), out.end(), s) == out.end())
            out.push_back(s);
    }
    // Deterministic order: empty first, then by (eg, c).
    std::sort(out.begin(), out.end(), [](const Surface& a, const Surface& b) {
        if (a.empty != b.empty) return a.empty;
        if (a.empty) return false;
        if (a.euler_genus() != b.euler_genus()) return a.euler_genus() < b.euler_genus();
        return a.c < b.c;
    });
    return out;
}

}  // namespace

ClosedSurfaceSet ClosedSurfaceSet::from_members(const std::vector<Surface>& members) {
    auto member = [&](const Surface& s) {
        return std::find(members.begin(), members.end(), s) != members.end();
    };
    int eg_cap = 0;
    for (const auto& s : members)
        if (!s.empty) eg_cap = std::max(eg_cap, s.euler_genus());
    for (const auto& s : members) {
        if (!s.empty && !member(Surface::make_empty()))
            throw std::invalid_argument("surface set is not downward-closed");
        for (const auto& t : surfaces_up_to(eg_cap))
            if (surface_leq(t, s) && !member(t))
                throw std::invalid_argument("surface set is not downward-closed");
    }
    // Non-members of minimal genus: probing up to eg_cap + 2 suffices, since
    // above the largest member every surface is a non-member and both the
    // orientable and non-orientable chains are entered within two genus steps.
    std::vector<Surface> non_members;
    if (!member(Surface::make_empty())) non_members.push_back(Surface::make_empty());
    for (const auto& s : surfaces_up_to(eg_cap + 2))
        if (!member(s)) non_members.push_back(s);
    if (non_members.empty()) throw std::invalid_argument("surface set is not proper");
    return from_obstructions(minimal_antichain(std::move(non_members)));
}

ClosedSurfaceSet ClosedSurfaceSet::from_obstructions(std::vector<Surface> obstructions) {
    auto anti = minimal_antichain(std::move(obstructions));
    if (anti.empty() || anti.size() > 2)
        throw std::invalid_argument("obstruction antichain must have 1 or 2 surfaces");
    ClosedSurfaceSet s;
    s.obstructions_ = std::move(anti);
    return s;
}

bool ClosedSurfaceSet::contains(const Surface& s) const {
    for (const auto& o : obstructions_)
        if (surface_leq(o, s)) return false;
    return true;
}

}  // namespace minorlab
