#include "stair/error.hpp"
#include "stair/latticepaths.hpp"

#include <sstream>

namespace stair {

std::vector<LPoint> family_polygon(const RecurrenceFamily& fam) {
    switch (fam.id) {
        case CaseId::ball: return {{0, 0}, {3, 0}, {0, 3}};
        case CaseId::p422: return {{0, 0}, {2, 0}, {2, 2}, {0, 2}};
        case CaseId::b111: return {{0, 0}, {2, 0}, {2, 1}, {1, 2}, {0, 1}};
        case CaseId::b1111: return {{0, 0}, {1, 0}, {2, 1}, {1, 2}, {0, 1}};
        case CaseId::b1: return {{0, 0}, {2, 0}, {2, 1}, {0, 3}};
        case CaseId::b11: return {{0, 0}, {2, 0}, {2, 1}, {1, 2}, {0, 2}};
    }
    throw DomainError("unknown family");
}

ConvexRegion family_region(const RecurrenceFamily& fam) { return ConvexRegion::from_lattice(family_polygon(fam)); }

namespace {

Integer exact_div(const Integer& num, const Rational& den, const char* what) {
    Rational q = Rational(num) / den;
    if (q.get_den() != 1) throw DomainError(std::string(what) + " is not an integer");
    return q.get_num();
}

std::int64_t narrow(const Integer& v) {
    if (!v.fits_slong_p()) throw DomainError("lattice path coordinate out of range");
    return v.get_si();
}

// Closed forms for the count and length of each template, in terms of s, t.
std::pair<Integer, Integer> closed_forms(const RecurrenceFamily& fam, long n, const Integer& s, const Integer& t) {
    auto corner = [](const Integer& c) -> Integer { return c * (c + 1); };
    Integer tri2 = (s + 1) * (s + 2);
    switch (fam.id) {
        case CaseId::ball: return {tri2 / 2, 3 * s};
        case CaseId::p422:
            if (n % 2 == 0) return {(tri2 - corner(t) - corner(t - 1)) / 2, 2 * (s - t + 1) + 2 * (s - t)};
            return {(tri2 - 2 * corner(t)) / 2, 4 * (s - t)};
        case CaseId::b1: return {(tri2 - corner(t)) / 2, 2 * t + 3 * (s - t)};
        case CaseId::b11:
            if (n % 3 != 0) return {(tri2 - 2 * corner(t)) / 2, 2 * t + 3 * (s - 2 * t) + 2 * t};
            return {(tri2 - corner(t) - corner(t - 1)) / 2, 2 * t + 3 * (s - 2 * t + 1) + 2 * (t - 1)};
        case CaseId::b111:
            switch (n % 4) {
                case 0: return {(tri2 - 2 * corner(t) - corner(t + 1)) / 2, t + 3 * (s - 2 * t - 1) + 2 * (t + 1)};
                case 2: return {(tri2 - 2 * corner(t) - corner(t - 1)) / 2, t + 3 * (s - 2 * t + 1) + 2 * (t - 1)};
                default: return {(tri2 - 3 * corner(t)) / 2, t + 3 * (s - 2 * t) + 2 * t};
            }
        case CaseId::b1111: return {(tri2 - 4 * corner(t)) / 2, t + 3 * (s - 2 * t) + t};
    }
    throw DomainError("unknown family");
}

}  // namespace

LambdaData lambda_family(const RecurrenceFamily& fam, long n) {
    if (n < 0) throw DomainError("lambda_n needs n >= 0");
    Integer G = fam.g(n) + fam.g(n + fam.J);
    Rational vol = fam.vol();
    Integer s = exact_div(fam.B * G + fam.c_n.at(n), vol, "s_n");
    Integer t = fam.b == 0 ? Integer(0) : exact_div(fam.b * G + fam.d_n.at(n), vol, "t_n");
    if (s < 0 || t < 0) throw DomainError("negative s_n or t_n");
    const std::int64_t S = narrow(s), T = narrow(t);

    std::vector<LPoint> v;
    switch (fam.id) {
        case CaseId::ball: v = {{0, S}, {S, 0}}; break;
        case CaseId::p422: {
            std::int64_t t1 = T, t2 = (n % 2 == 0) ? T - 1 : T;
            v = {{0, S - t1}, {t1, S - t1}, {S - t2, t2}, {S - t2, 0}};
            break;
        }
        case CaseId::b1: v = {{0, S}, {S - T, T}, {S - T, 0}}; break;
        case CaseId::b11: {
            std::int64_t c = (n % 3 == 0) ? T - 1 : T;
            v = {{0, S - T}, {T, S - T}, {S - c, c}, {S - c, 0}};
            break;
        }
        case CaseId::b111: {
            std::int64_t c = T;
            if (n % 4 == 0) c = T + 1;
            if (n % 4 == 2) c = T - 1;
            v = {{0, S - 2 * T}, {T, S - T}, {S - c, c}, {S - c, 0}};
            break;
        }
        case CaseId::b1111: v = {{0, S - 2 * T}, {T, S - T}, {S - T, T}, {S - 2 * T, 0}}; break;
    }
    // zero-length edges appear when a corner has size 0
    LatticePath path;
    for (const auto& p : v)
        if (path.vertices.empty() || path.vertices.back() != p) path.vertices.push_back(p);
    path.validate();
    return {s, t, path};
}

LambdaCheck verify_lambda(const RecurrenceFamily& fam, long n) {
    LambdaCheck r;
    Integer gn = fam.g(n), gnJ = fam.g(n + fam.J);
    r.L_target = (gn + 1) * (gnJ + 1) / 2;
    r.ell_target = gn + gnJ;
    try {
        LambdaData d = lambda_family(fam, n);
        ConvexRegion omega = family_region(fam);
        r.L_direct = lattice_point_count(d.path);
        r.L_pick = lattice_point_count_pick(d.path);
        Rational ell = omega_length(d.path, omega);
        if (ell.get_den() != 1) throw DomainError("non-integral path length");
        r.ell_direct = ell.get_num();
        std::tie(r.L_closed, r.ell_closed) = closed_forms(fam, n, d.s, d.t);
        r.ell_blowup = fam.B * d.s - fam.k_parts * fam.b * d.t + fam.e_n.at(n);
    } catch (const DomainError& e) {
        r.ok = false;
        r.diagnostic = e.what();
        return r;
    }
    r.ok = r.L_direct == r.L_target && r.L_pick == r.L_target && r.L_closed == r.L_target &&
           r.ell_direct == r.ell_target && r.ell_closed == r.ell_target && r.ell_blowup == r.ell_target;
    if (!r.ok) {
        std::ostringstream os;
        os << fam.name << " n=" << n << ": L " << r.L_direct << "/" << r.L_pick << "/" << r.L_closed << " want "
           << r.L_target << ", length " << r.ell_direct << "/" << r.ell_closed << "/" << r.ell_blowup << " want "
           << r.ell_target;
        r.diagnostic = os.str();
    }
    return r;
}

}  // namespace stair
