#ifndef MINORLAB_SURFACE_HPP
#define MINORLAB_SURFACE_HPP

#include <optional>
#include <string>
#include <vector>

namespace minorlab {

/// A surface in Dyck-normalized form: the empty surface, or the sphere with h
/// handles and c crosscaps where c <= 2.
struct Surface {
    bool empty = false;
    int h = 0;
    int c = 0;

    static Surface make_empty() { return Surface{true, 0, 0}; }
    static Surface sphere() { return Surface{false, 0, 0}; }

    bool orientable() const { return c == 0; }
    int euler_genus() const;  // throws for the empty surface

    bool operator==(const Surface& o) const {
        return empty == o.empty && (empty || (h == o.h && c == o.c));
    }
    std::string to_string() const;  // "S0", "S(h,c)"
};

/// Dyck normalization: while c >= 3, trade two crosscaps for a handle.
Surface normalize(int h, int c);

/// The containment order: Sigma <= Sigma' iff Sigma' is obtained from Sigma by
/// adding handles or crosscaps.
bool surface_leq(const Surface& s1, const Surface& s2);

/// All surfaces with Euler genus <= eg_max (the empty surface excluded),
/// ordered by (eg, c).
std::vector<Surface> surfaces_up_to(int eg_max);

/// A closed, proper set of surfaces, represented by its obstruction
/// antichain: the <=-minimal surfaces outside the set. Always 1 or 2.
class ClosedSurfaceSet {
  public:
    /// Builds from an explicit member list (must be downward-closed; checked).
    static ClosedSurfaceSet from_members(const std::vector<Surface>& members);

    /// Builds directly from an obstruction antichain (validated).
    static ClosedSurfaceSet from_obstructions(std::vector<Surface> obstructions);

    bool contains(const Surface& s) const;

    /// The stored obstruction antichain, deterministically ordered.
    const std::vector<Surface>& sobs() const { return obstructions_; }

  private:
    std::vector<Surface> obstructions_;
};

}  // namespace minorlab

#endif
