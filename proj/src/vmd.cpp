#include "pn/vmd.hpp"

#include <algorithm>
#include <sstream>

namespace pn {

Integer minimal_degree(int dim, int ambient_r) {
    if (dim < 1 || ambient_r < dim)
        throw DomainError("minimal_degree: need 1 <= dim <= ambient_r");
    return Integer(1 + ambient_r - dim);
}

Integer scroll_degree(const std::vector<int>& a) {
    if (a.empty())
        throw DomainError("scroll_degree: empty shape");
    Integer s(0);
    bool positive = false;
    for (int x : a) {
        if (x < 0)
            throw DomainError("scroll_degree: negative entry");
        if (x > 0)
            positive = true;
        s += x;
    }
    if (!positive)
        throw DomainError("scroll_degree: all-zero shape");
    return s;
}

namespace {

// Nondecreasing shapes a_1 <= ... <= a_parts with the given sum, in
// lexicographic order.
void scroll_shapes(int sum, int parts, int min_part, std::vector<int>& cur,
                   std::vector<std::vector<int>>& out) {
    if (parts == 0) {
        if (sum == 0)
            out.push_back(cur);
        return;
    }
    for (int v = min_part; v * parts <= sum; ++v) {
        cur.push_back(v);
        scroll_shapes(sum - v, parts - 1, v, cur, out);
        cur.pop_back();
    }
}

EmbeddedVMD embed(MinimalDegreeClass c, int dim, int r) {
    return EmbeddedVMD{std::move(c), dim, r, Integer(1 + r - dim)};
}

}  // namespace

std::vector<EmbeddedVMD> classify(int dim, int ambient_r) {
    const Integer deg = minimal_degree(dim, ambient_r);
    const int codim = ambient_r - dim;
    std::vector<EmbeddedVMD> out;

    if (codim == 0) {
        out.push_back(embed(ProjectiveSpace{dim}, dim, ambient_r));
        return out;  // degree 1: the linear space is the only class
    }
    if (codim == 1)
        out.push_back(embed(Quadric{dim, ambient_r}, dim, ambient_r));

    std::vector<std::vector<int>> shapes;
    std::vector<int> cur;
    scroll_shapes(static_cast<int>(deg.get_si()), dim, 0, cur, shapes);
    for (auto& a : shapes) {
        const int zeros = static_cast<int>(std::count(a.begin(), a.end(), 0));
        if (zeros == 0)
            out.push_back(embed(SmoothScroll{a}, dim, ambient_r));
        else
            out.push_back(embed(ConeOverScroll{a, zeros - 1}, dim, ambient_r));
    }

    if (dim == 2 && ambient_r == 5)
        out.push_back(embed(Veronese{}, dim, ambient_r));
    if (codim == 3 && dim >= 3)
        out.push_back(embed(ConeOverVeronese{dim - 3}, dim, ambient_r));
    return out;
}

std::optional<int> vertex_codim(const MinimalDegreeClass& c, int dim) {
    if (const auto* s = std::get_if<ConeOverScroll>(&c))
        return dim - s->vertex_dim;
    if (const auto* v = std::get_if<ConeOverVeronese>(&c))
        return dim - v->vertex_dim;
    return std::nullopt;
}

bool admissible_for_smooth_source(const EmbeddedVMD& v) {
    return std::visit(
        [&](const auto& c) -> bool {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, ConeOverScroll>)
                return v.dim - c.vertex_dim == 2;
            else if constexpr (std::is_same_v<T, ConeOverVeronese>)
                return v.dim - c.vertex_dim == 3;  // directrix is the surface itself
            else
                return true;
        },
        v.cls);
}

Integer hyperplane_ruling_multiplier(const EmbeddedVMD& v) {
    const auto* c = std::get_if<ConeOverScroll>(&v.cls);
    if (!c || v.dim - c->vertex_dim != 2)
        throw DomainError("hyperplane_ruling_multiplier: not a cone over a rational normal curve");
    return v.degree;
}

namespace {

std::string shape_str(const std::vector<int>& a) {
    std::ostringstream os;
    for (size_t i = 0; i < a.size(); ++i)
        os << (i ? "," : "") << a[i];
    return os.str();
}

}  // namespace

std::string token(const EmbeddedVMD& v) {
    std::ostringstream os;
    std::visit(
        [&](const auto& c) {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, ProjectiveSpace>)
                os << "pspace";
            else if constexpr (std::is_same_v<T, Quadric>)
                os << "quadric";
            else if constexpr (std::is_same_v<T, SmoothScroll>)
                os << "scroll(" << shape_str(c.a) << ")";
            else if constexpr (std::is_same_v<T, ConeOverScroll>)
                os << "cone-scroll(" << shape_str(c.a) << ")";
            else if constexpr (std::is_same_v<T, Veronese>)
                os << "veronese";
            else
                os << "cone-veronese(v=" << c.vertex_dim << ")";
        },
        v.cls);
    os << "@P" << v.ambient_r;
    return os.str();
}

}  // namespace pn
