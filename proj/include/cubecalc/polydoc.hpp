#pragma once

#include "cubecalc/prodmulti.hpp"
#include "cubecalc/prodsum.hpp"

#include <string>
#include <string_view>
#include <variant>

namespace cubecalc {

// On-disk polynomial instance. The text format opens with the header line
// "cubecalc-poly v1"; rationals render as "num" or "num/den"; factors keep
// their sequence order and terms their lexicographic order.
struct PolyDocument {
    unsigned num_vars = 0;
    std::variant<ProdSumUni, ProdMulti> poly{ProdMulti({}, 1)};

    bool is_prodsum() const { return std::holds_alternative<ProdSumUni>(poly); }
    const ProdSumUni& prodsum() const { return std::get<ProdSumUni>(poly); }
    const ProdMulti& prodmulti() const { return std::get<ProdMulti>(poly); }

    bool operator==(const PolyDocument& o) const {
        return num_vars == o.num_vars && poly == o.poly;
    }
};

PolyDocument make_document(ProdSumUni p, unsigned num_vars);
PolyDocument make_document(ProdMulti p, unsigned num_vars);

std::string serialize_poly(const PolyDocument& doc);

// Inverse of serialize_poly. Schema violations raise ParseError with the
// offending line number.
PolyDocument parse_poly(std::string_view text);

} // namespace cubecalc
