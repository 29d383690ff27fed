#include "stair/error.hpp"
#include "stair/numtheory.hpp"

#include <algorithm>

namespace stair {

namespace {

bool convex_lattice_polygon(const std::vector<LPoint>& polygon) {
    if (polygon.size() < 3) return false;
    auto ccw = make_ccw(polygon);
    return is_strictly_convex_ccw(simplify(to_rpoly(ccw)));
}

bool same_expansion(const NegativeWeightExpansion& x, const NegativeWeightExpansion& y) {
    auto sorted = [](std::vector<Rational> p) {
        std::sort(p.begin(), p.end(), [](const Rational& a, const Rational& b) { return a > b; });
        return p;
    };
    return x.b() == y.b() && sorted(x.parts()) == sorted(y.parts());
}

CatalogDomain domain(std::string name, std::vector<LPoint> poly, bool reflexive) {
    poly = make_ccw(std::move(poly));
    NegativeWeightExpansion X = negative_weight_expansion(poly);
    return {name.empty() ? X.to_string() : std::move(name), std::move(poly), X, reflexive};
}

}  // namespace

bool reflexive_check(const std::vector<LPoint>& polygon) {
    if (!convex_lattice_polygon(polygon)) throw UnsupportedShape("reflexive_check needs a convex lattice polygon");
    return interior_points(make_ccw(polygon)) == 1;
}

bool scaled_reflexive_test(const NegativeWeightExpansion& X, const std::vector<LPoint>& polygon) {
    if (!convex_lattice_polygon(polygon)) throw UnsupportedShape("scaled test needs a convex lattice polygon");
    auto ccw = make_ccw(polygon);
    const Rational per(static_cast<long>(boundary_points(ccw))), vol(static_cast<long>(area2(ccw)));
    if (per != X.per() || vol != X.vol())
        throw DomainError("polygon has per = " + to_string(per) + ", vol = " + to_string(vol) + " but " +
                          X.to_string() + " has per = " + to_string(X.per()) + ", vol = " + to_string(X.vol()));
    const Rational beta = per / vol;
    if (beta.get_den() != 1) return false;
    const std::int64_t s = beta.get_num().get_si();
    std::vector<LPoint> scaled;
    for (const auto& p : ccw) scaled.push_back({p.x * s, p.y * s});
    return reflexive_check(scaled);
}

bool scaled_reflexive_test(const NegativeWeightExpansion& X) {
    for (const auto& d : domain_catalog())
        if (same_expansion(d.expansion, X)) return scaled_reflexive_test(X, d.polygon);
    throw UnsupportedShape("no catalogued polygon with expansion " + X.to_string());
}

const std::vector<CatalogDomain>& reflexive_catalog() {
    static const std::vector<CatalogDomain> catalog = [] {
        const std::vector<std::vector<LPoint>> polys = {
            {{-1, 0}, {2, -3}, {-1, 3}},
            {{-2, 1}, {2, -3}, {0, 1}},
            {{-2, 3}, {1, -3}, {1, -1}, {0, 1}},
            {{-2, 3}, {0, -1}, {2, -3}, {0, 1}},
            {{-1, -1}, {1, -1}, {0, 1}, {-1, 2}},
            {{-1, 0}, {1, -2}, {1, -1}, {0, 1}, {-1, 2}},
            {{-3, 1}, {1, -1}, {0, 1}},
            {{-2, 3}, {0, -1}, {1, -1}, {0, 1}},
            {{-1, 0}, {0, -1}, {1, -1}, {0, 1}, {-1, 2}},
            {{-1, 1}, {0, -1}, {1, -2}, {1, -1}, {0, 1}, {-1, 2}},
            {{-1, 0}, {1, -1}, {0, 1}, {-1, 2}},
            {{-1, 1}, {0, -1}, {1, -1}, {0, 1}, {-1, 2}},
            {{-1, -1}, {1, -1}, {0, 1}},
            {{-1, 1}, {0, -1}, {1, -1}, {0, 1}},
            {{-1, 0}, {1, -1}, {0, 1}, {-1, 1}},
            {{-1, 0}, {1, -1}, {0, 1}},
        };
        std::vector<CatalogDomain> out;
        for (std::size_t i = 0; i < polys.size(); ++i) {
            CatalogDomain d = domain("", polys[i], true);
            d.name = "reflexive " + std::to_string(i + 1) + " " + d.expansion.to_string();
            out.push_back(std::move(d));
        }
        return out;
    }();
    return catalog;
}

const std::vector<CatalogDomain>& domain_catalog() {
    static const std::vector<CatalogDomain> catalog = [] {
        std::vector<CatalogDomain> out = reflexive_catalog();
        out.push_back(domain("ball (1)", {{0, 0}, {1, 0}, {0, 1}}, false));
        out.push_back(domain("ball (2)", {{0, 0}, {2, 0}, {0, 2}}, false));
        out.push_back(domain("square [0,1]^2", {{0, 0}, {1, 0}, {1, 1}, {0, 1}}, false));
        out.push_back(domain("rectangle [0,2]x[0,1]", {{0, 0}, {2, 0}, {2, 1}, {0, 1}}, false));
        out.push_back(domain("rectangle [0,3]x[0,1]", {{0, 0}, {3, 0}, {3, 1}, {0, 1}}, false));
        out.push_back(domain("(4;2,1)", {{0, 0}, {2, 0}, {2, 2}, {1, 3}, {0, 3}}, false));
        return out;
    }();
    return catalog;
}

}  // namespace stair
