#include "stair/atf.hpp"
#include "stair/error.hpp"

namespace stair {

namespace {

RPoint P(long x, long y) { return {Rational(x), Rational(y)}; }
RPoint P(const Rational& x, const Rational& y) { return {x, y}; }

BaseDiagram polygon(std::vector<RPoint> vertices) {
    BaseDiagram d;
    d.polygon = std::move(vertices);
    d.validate();
    return d;
}

BaseDiagram seed(std::vector<RPoint> vertices, std::vector<std::tuple<RPoint, long, long, long>> rays) {
    BaseDiagram d = polygon(std::move(vertices));
    for (const auto& [at, x, y, nodes] : rays) d.rays.push_back({*d.vertex_index(at), IVec{x, y}, nodes});
    std::sort(d.rays.begin(), d.rays.end(), [](const NodalRay& a, const NodalRay& b) { return a.anchor < b.anchor; });
    d.validate();
    return d;
}

PregameMove trade(RPoint at) { return {PregameMove::Kind::trade, at, MutationSide::ccw, Rational(0)}; }
PregameMove mut(RPoint at, MutationSide side) { return {PregameMove::Kind::mutate, at, side, Rational(0)}; }
PregameMove blowup(RPoint at, long size) { return {PregameMove::Kind::blowup, at, MutationSide::ccw, Rational(size)}; }

}  // namespace

std::string PregameMove::describe() const {
    std::string at_s = "(" + to_string(at.x) + "," + to_string(at.y) + ")";
    switch (kind) {
        case Kind::trade: return "nodal trade at " + at_s;
        case Kind::mutate:
            return std::string("mutation of the ray at ") + at_s + (side == MutationSide::ccw ? " (ccw piece)" : " (cw piece)");
        case Kind::blowup: return "toric blowup of size " + to_string(size) + " at " + at_s;
    }
    return {};
}

PregameScript pregame_script(CaseId id) {
    using S = MutationSide;
    PregameScript s{id, {}, {}, {}};
    switch (id) {
        case CaseId::ball:
            s.start = polygon({P(0, 0), P(3, 0), P(0, 3)});
            s.moves = {trade(P(3, 0)), trade(P(0, 3))};
            s.expected = seed({P(0, 0), P(3, 0), P(0, 3)}, {{P(3, 0), -2, 1, 1}, {P(0, 3), 1, -2, 1}});
            break;
        case CaseId::b1:
            s.start = polygon({P(0, 0), P(2, 0), P(2, 1), P(0, 3)});
            s.moves = {trade(P(2, 0)), trade(P(2, 1)), trade(P(0, 3))};
            s.expected = seed({P(0, 0), P(2, 0), P(2, 1), P(0, 3)},
                              {{P(2, 0), -1, 1, 1}, {P(2, 1), -1, 0, 1}, {P(0, 3), 1, -2, 1}});
            break;
        case CaseId::b11:
            s.start = polygon({P(0, 0), P(2, 0), P(2, 1), P(1, 2), P(0, 2)});
            s.moves = {trade(P(2, 0)), trade(P(2, 1)), trade(P(1, 2)), trade(P(0, 2)), mut(P(0, 2), S::cw)};
            s.expected = seed({P(0, 0), P(2, 0), P(1, 2), P(0, 3)},
                              {{P(2, 0), -1, 1, 2}, {P(1, 2), 0, -1, 1}, {P(0, 3), 1, -2, 1}});
            break;
        case CaseId::b111:
            s.start = polygon({P(0, 0), P(1, 0), P(2, 1), P(2, 2), P(1, 2), P(0, 1)});
            s.moves = {trade(P(1, 0)),          trade(P(2, 1)),          trade(P(2, 2)),
                       trade(P(1, 2)),          trade(P(0, 1)),          mut(P(1, 0), S::ccw),
                       mut(P(0, 1), S::cw),     mut(P(0, 2), S::cw)};
            s.expected = seed({P(0, 0), P(2, 0), P(0, 3)}, {{P(2, 0), -1, 1, 3}, {P(0, 3), 1, -2, 2}});
            break;
        case CaseId::b1111:
            s.start = pregame(CaseId::b111);
            s.moves = {blowup(P(0, 0), 1), trade(P(1, 0)), mut(P(1, 0), S::cw), mut(P(0, 2), S::cw)};
            s.expected = seed({P(0, 0), P(2, 0), P(Rational(0), make_rational(5, 2))},
                              {{P(2, 0), -1, 1, 5}, {P(Rational(0), make_rational(5, 2)), 2, -3, 1}});
            break;
        case CaseId::p422:
            s.start = polygon({P(0, 0), P(2, 0), P(2, 2), P(0, 2)});
            s.moves = {trade(P(2, 0)), trade(P(2, 2)), trade(P(0, 2)), mut(P(0, 2), S::cw)};
            s.expected = seed({P(0, 0), P(2, 0), P(0, 4)}, {{P(2, 0), -1, 1, 2}, {P(0, 4), 1, -3, 1}});
            break;
    }
    return s;
}

std::vector<BaseDiagram> replay(const PregameScript& script) {
    std::vector<BaseDiagram> out{script.start};
    for (std::size_t m = 0; m < script.moves.size(); ++m) {
        const PregameMove& mv = script.moves[m];
        const BaseDiagram& d = out.back();
        const int item = static_cast<int>(m + 1);
        auto vertex = d.vertex_index(mv.at);
        if (!vertex) throw CheckFailure("move " + std::to_string(m + 1) + " (" + mv.describe() + "): no such vertex", item);
        try {
            switch (mv.kind) {
                case PregameMove::Kind::trade: out.push_back(nodal_trade(d, *vertex)); break;
                case PregameMove::Kind::blowup: out.push_back(toric_blowup(d, *vertex, mv.size)); break;
                case PregameMove::Kind::mutate: {
                    auto ray = d.ray_at_vertex(*vertex);
                    if (!ray) throw DomainError("no ray anchored there");
                    out.push_back(mutate(d, *ray, mv.side).result);
                    break;
                }
            }
        } catch (const DomainError& e) {
            throw CheckFailure("move " + std::to_string(m + 1) + " (" + mv.describe() + "): " + e.what(), item);
        }
    }
    return out;
}

BaseDiagram pregame(CaseId id) {
    PregameScript s = pregame_script(id);
    BaseDiagram d = replay(s).back();
    if (d.polygon != s.expected.polygon || d.rays.size() != s.expected.rays.size())
        throw CheckFailure("pregame for " + family(id).name + " ended at " + d.to_string() + ", expected " +
                               s.expected.to_string(),
                           static_cast<int>(s.moves.size()));
    for (std::size_t i = 0; i < d.rays.size(); ++i) {
        const auto &x = d.rays[i], &y = s.expected.rays[i];
        if (x.anchor != y.anchor || x.direction != y.direction || x.nodes != y.nodes)
            throw CheckFailure("pregame for " + family(id).name + " ended at " + d.to_string() + ", expected " +
                                   s.expected.to_string(),
                               static_cast<int>(s.moves.size()));
    }
    return d;
}

}  // namespace stair
