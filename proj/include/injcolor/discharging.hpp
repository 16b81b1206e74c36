#ifndef INJCOLOR_DISCHARGING_HPP
#define INJCOLOR_DISCHARGING_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "injcolor/configurations.hpp"
#include "injcolor/graph.hpp"
#include "injcolor/rational.hpp"

namespace inj {

inline std::vector<std::pair<VertexId, Rational>> charges_initial(const CoreGraph& h)
{
    std::vector<std::pair<VertexId, Rational>> out;
    for (VertexId v : h.graph.vertices())
        out.push_back({v, Rational(h.graph.degree(v))});
    return out;
}

struct VertexCharges {
    Rational initial;
    Rational sent;
    Rational received;
    Rational final_charge() const { return initial - sent + received; }
};

struct ChargeReport {
    std::vector<std::pair<VertexId, VertexCharges>> charges;  ///< ascending ids
    Rational total_initial;
    Rational total_final;
    std::vector<VertexId> deficient;  ///< final charge < 8/3
    bool conserved = false;           ///< totals equal 2|E(H)| exactly

    const VertexCharges* at(VertexId v) const
    {
        for (const auto& [id, c] : charges)
            if (id == v)
                return &c;
        return nullptr;
    }
};

/// Moves charge along every adjacent pair according to the two rules:
/// a 3+-vertex gives 2/3 to each 2_1-neighbor and 1/3 to each
/// 2_0-neighbor; a non-poor 3-vertex or 4-vertex gives 1/3 to each
/// 3_2-neighbor and 1/6 to each 3_1+-neighbor. All transfers are
/// determined by the static vertex classes, so application order does
/// not matter.
inline ChargeReport apply_discharging(const CoreGraph& h)
{
    const Graph& g = h.graph;
    detail::ClassTable cls(g);
    std::vector<VertexCharges> acc(g.vertex_capacity());
    for (VertexId v : g.vertices())
        acc[v].initial = Rational(g.degree(v));

    const Rational two_thirds(2, 3), one_third(1, 3), one_sixth(1, 6);
    for (VertexId u : g.vertices()) {
        const auto& cu = cls[u];
        bool r1_sender = cu.degree >= 3;
        bool r2_sender = (cu.degree == 3 && !cu.poor) || cu.degree == 4;
        if (!r1_sender && !r2_sender)
            continue;
        for (VertexId w : g.neighbors(u)) {
            const auto& cw = cls[w];
            Rational amount(0);
            if (r1_sender && cw.is_two_one())
                amount = two_thirds;
            else if (r1_sender && cw.is_two_zero())
                amount = one_third;
            else if (r2_sender && cw.is_three_two())
                amount = one_third;
            else if (r2_sender && cw.three_one_plus)
                amount = one_sixth;
            if (amount != Rational(0)) {
                acc[u].sent += amount;
                acc[w].received += amount;
            }
        }
    }

    ChargeReport rep;
    rep.total_initial = Rational(0);
    rep.total_final = Rational(0);
    for (VertexId v : g.vertices()) {
        rep.charges.push_back({v, acc[v]});
        rep.total_initial += acc[v].initial;
        rep.total_final += acc[v].final_charge();
        if (acc[v].final_charge() < kEightThirds)
            rep.deficient.push_back(v);
    }
    rep.conserved = rep.total_initial == rep.total_final
        && rep.total_final == Rational(2 * g.num_edges());
    return rep;
}

struct AuditEntry {
    VertexId v;
    Rational final_charge;
    std::optional<Configuration> explanation;
};

struct AuditReport {
    ChargeReport charges;
    std::vector<AuditEntry> deficiencies;
    std::vector<VertexId> unexplained;

    /// False means a vertex is short of 8/3 with no reducible pattern
    /// within radius 2 -- a detector coverage bug.
    bool ok() const { return unexplained.empty(); }
};

/// For each vertex whose final charge falls below 8/3, finds the
/// reducible configuration nearby that accounts for it. A deficiency
/// with no configuration within radius 2 is flagged.
inline AuditReport audit_charges(const CoreGraph& h)
{
    if (h.graph.max_degree() > 4)
        throw std::invalid_argument("audit_charges: maximum degree exceeds 4");
    AuditReport rep;
    rep.charges = apply_discharging(h);
    for (VertexId v : rep.charges.deficient) {
        AuditEntry entry;
        entry.v = v;
        entry.final_charge = rep.charges.at(v)->final_charge();
        entry.explanation = find_reducible_near(h.graph, v, 2);
        if (!entry.explanation)
            rep.unexplained.push_back(v);
        rep.deficiencies.push_back(std::move(entry));
    }
    return rep;
}

}  // namespace inj

#endif
