#pragma once

#include <string>

#include "nccdim/curve.hpp"
#include "nccdim/json_io.hpp"
#include "nccdim/quiver.hpp"

namespace nccdim {

// One row of the classification table. Cells are strings because two of
// them are genuinely symbolic: the ADE row carries "1-2/h" and the
// rational-curve row "1 or 2".
struct TableRow {
    std::string category;
    std::string hdim, rdim, ddim, sdim, gldim;
};

// The five-row summary of the dimension invariants across noncommutative
// curves. Rows are computed from the classifiers on representatives; only
// the h-dependent cells and the sign-dependent ddim cell stay symbolic.
inline std::vector<TableRow> classification_table() {
    std::vector<TableRow> rows;

    const Quiver a1{1, {}};
    const DimensionReport mod_k = quiver_dimension_report(a1);
    rows.push_back({"mod(k)", std::to_string(mod_k.hdim), std::to_string(mod_k.rdim),
                    std::to_string(mod_k.ddim), mod_k.sdim.to_string(), mod_k.gldim.to_string()});

    const Quiver a2{2, {{0, 1}}};
    const DimensionReport ade = quiver_dimension_report(a2);
    rows.push_back({"rep(Q_ADE)", std::to_string(ade.hdim), std::to_string(ade.rdim),
                    std::to_string(ade.ddim), "1-2/h", "1-2/h"});

    const Quiver kronecker{2, {{0, 1}, {0, 1}}};
    const DimensionReport wild = quiver_dimension_report(kronecker);
    rows.push_back({"rep(Q_non-ADE)", std::to_string(wild.hdim), std::to_string(wild.rdim),
                    std::to_string(wild.ddim), wild.sdim.to_string(), wild.gldim.to_string()});

    const DimensionReport rat_neg = dimension_report(CurveSignature::make(0, {2, 3, 5}));
    const DimensionReport rat_pos = dimension_report(CurveSignature::make(0, {2, 3, 7}));
    if (rat_neg.ddim == rat_pos.ddim)
        throw InternalError("classification_table: rational ddim did not split");
    rows.push_back({"rational orbifold curve", std::to_string(rat_neg.hdim),
                    std::to_string(rat_neg.rdim), "1 or 2", rat_neg.sdim.to_string(),
                    rat_neg.gldim.to_string()});

    const DimensionReport irr = dimension_report(CurveSignature::make(1, {}));
    rows.push_back({"irrational orbifold curve", std::to_string(irr.hdim), std::to_string(irr.rdim),
                    std::to_string(irr.ddim), irr.sdim.to_string(), irr.gldim.to_string()});
    return rows;
}

inline std::string classification_table_markdown() {
    std::string out;
    out += "| A | hdim | rdim | ddim | Sdim | gldim |\n";
    out += "|---|---|---|---|---|---|\n";
    for (const TableRow& r : classification_table())
        out += "| " + r.category + " | " + r.hdim + " | " + r.rdim + " | " + r.ddim + " | " +
               r.sdim + " | " + r.gldim + " |\n";
    return out;
}

inline io::json classification_table_json() {
    io::json rows = io::json::array();
    for (const TableRow& r : classification_table()) {
        io::json row;
        row["category"] = r.category;
        row["hdim"] = r.hdim;
        row["rdim"] = r.rdim;
        row["ddim"] = r.ddim;
        row["sdim"] = r.sdim;
        row["gldim"] = r.gldim;
        rows.push_back(row);
    }
    io::json j;
    j["rows"] = rows;
    return j;
}

} // namespace nccdim
