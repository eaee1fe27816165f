#ifndef PN_VMD_HPP
#define PN_VMD_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pn/rational.hpp"

namespace pn {

// The minimal-degree classes: linear spaces, quadrics, rational normal
// scrolls and their cones, the Veronese surface and its cones. Scroll
// shapes are kept sorted ascending; zeros among the a_i are cone
// directions, and the vertex has dimension (#zeros - 1).
struct ProjectiveSpace { int dim = 0; };
struct Quadric { int dim = 0; int ambient = 0; std::string note = "possibly singular"; };
struct SmoothScroll { std::vector<int> a; };                     // all a_i >= 1
struct ConeOverScroll { std::vector<int> a; int vertex_dim = 0; };
struct Veronese {};                                              // the surface in P^5
struct ConeOverVeronese { int vertex_dim = 0; };

using MinimalDegreeClass =
    std::variant<ProjectiveSpace, Quadric, SmoothScroll, ConeOverScroll, Veronese, ConeOverVeronese>;

// A class together with where it sits: dimension, ambient P^r, and degree
// (always 1 + codimension).
struct EmbeddedVMD {
    MinimalDegreeClass cls;
    int dim = 0;
    int ambient_r = 0;
    Integer degree;

    int codim() const { return ambient_r - dim; }
};

// 1 + codim, the degree floor attained by these varieties.
Integer minimal_degree(int dim, int ambient_r);

// Sum of the scroll degrees; rejects an all-zero shape.
Integer scroll_degree(const std::vector<int>& a);

// Every minimal-degree class of the given dimension in P^r: the linear
// space (codim 0), the quadric (codim 1), every scroll shape of the right
// degree split into smooth scrolls and cones, the Veronese surface for
// (2,5), and Veronese cones when codim = 3. Deterministic order.
std::vector<EmbeddedVMD> classify(int dim, int ambient_r);

// dim - vertex_dim for cone classes, nothing otherwise.
std::optional<int> vertex_codim(const MinimalDegreeClass& c, int dim);

// Filter for images of a smooth source: scroll cones survive only when the
// vertex has codimension 2 (cones over a rational normal curve). Veronese
// cones always carry a 2-dimensional smooth directrix (vertex codim 3 by
// construction) and are kept; so are quadrics of any rank.
bool admissible_for_smooth_source(const EmbeddedVMD& v);

// For a cone over a rational normal curve the hyperplane class is
// degree-many ruling classes; returns that degree. Rejects anything else.
Integer hyperplane_ruling_multiplier(const EmbeddedVMD& v);

// Stable token, e.g. "scroll(1,1,1,2)@P8", "cone-veronese(v=1)@P7",
// "quadric@P5".
std::string token(const EmbeddedVMD& v);

}  // namespace pn

#endif
