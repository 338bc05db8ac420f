#include "zeta/problem.hpp"

#include "json_io.hpp"

#include <algorithm>
#include <set>

namespace zeta {

namespace detail {

namespace {

using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& message) {
    throw std::invalid_argument(message);
}

long get_int_field(const ordered_json& j, const std::string& key, long lo, long hi) {
    const auto& v = j.at(key);
    if (!v.is_number_integer())
        fail("field '" + key + "' must be an integer");
    const long value = v.get<long>();
    if (value < lo || value > hi)
        fail("field '" + key + "' must be in [" + std::to_string(lo) + ", " +
             std::to_string(hi) + "]");
    return value;
}

IntMatrix parse_matrix(const ordered_json& j, const std::string& where) {
    if (!j.is_array() || j.empty())
        fail(where + ": matrix must be a nonempty array of rows");
    std::vector<std::vector<Int>> rows;
    rows.reserve(j.size());
    for (const auto& row : j) {
        if (!row.is_array())
            fail(where + ": matrix rows must be arrays");
        std::vector<Int> out;
        out.reserve(row.size());
        for (const auto& entry : row) {
            if (!entry.is_number_integer())
                fail(where + ": matrix entries must be integers");
            out.emplace_back(entry.get<long>());
        }
        rows.push_back(std::move(out));
    }
    try {
        return IntMatrix(rows);
    } catch (const std::invalid_argument& e) {
        fail(where + ": " + e.what());
    }
}

void check_keys(const ordered_json& j, const std::set<std::string>& allowed) {
    for (const auto& [key, value] : j.items())
        if (!allowed.contains(key))
            fail("unknown field '" + key + "'");
}

long entry_to_long(const Int& v, const std::string& what) {
    if (!v.fits_slong_p())
        fail(what + " exceeds the JSON integer range");
    return v.get_si();
}

}  // namespace

ordered_json matrix_to_json(const IntMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < m.dim(); ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < m.dim(); ++j)
            row.push_back(entry_to_long(m.at(i, j), "matrix entry"));
        rows.push_back(std::move(row));
    }
    return rows;
}

ordered_json input_to_json(const ProblemInput& input) {
    ordered_json doc;
    doc["kind"] = to_string(input.kind);
    switch (input.kind) {
        case ProblemKind::homology: {
            const auto& p = std::get<HomologyPayload>(input.payload);
            ordered_json ms = ordered_json::array();
            for (const auto& m : p.matrices)
                ms.push_back(matrix_to_json(m));
            doc["matrices"] = std::move(ms);
            doc["surface"] = p.surface;
            break;
        }
        case ProblemKind::torus:
            doc["matrix"] = matrix_to_json(std::get<TorusPayload>(input.payload).matrix);
            break;
        case ProblemKind::periodic: {
            const auto& p = std::get<PeriodicPayload>(input.payload);
            doc["period"] = p.period;
            ordered_json counts;
            for (const auto& [d, n] : p.counts)
                counts[std::to_string(d)] = entry_to_long(n, "count");
            doc["counts"] = std::move(counts);
            break;
        }
        case ProblemKind::subshift: {
            const auto& p = std::get<SubshiftPayload>(input.payload);
            ordered_json pieces = ordered_json::array();
            for (const auto& piece : p.pieces) {
                ordered_json pj;
                pj["matrix"] = matrix_to_json(piece.matrix);
                pj["sign"] = piece.sign;
                pieces.push_back(std::move(pj));
            }
            doc["pieces"] = std::move(pieces);
            break;
        }
    }
    doc["order"] = input.order;
    doc["horizon"] = input.horizon;
    if (!input.lambdas.empty()) {
        ordered_json ls = ordered_json::array();
        for (const auto& l : input.lambdas) {
            ordered_json lj;
            lj["re"] = l.re;
            lj["im"] = l.im;
            ls.push_back(std::move(lj));
        }
        doc["lambda"] = std::move(ls);
    }
    return doc;
}

ProblemInput input_from_json(const ordered_json& doc) {
    if (!doc.is_object())
        fail("problem input must be a JSON object");
    if (!doc.contains("kind") || !doc.at("kind").is_string())
        fail("field 'kind' must be one of \"homology\", \"torus\", \"periodic\", \"subshift\"");
    const std::string kind = doc.at("kind").get<std::string>();

    ProblemInput input;
    std::set<std::string> allowed = {"kind", "order", "horizon"};
    if (kind == "homology") {
        input.kind = ProblemKind::homology;
        allowed.insert({"matrices", "surface", "lambda"});
        check_keys(doc, allowed);
        if (!doc.contains("matrices") || !doc.at("matrices").is_array() ||
            doc.at("matrices").empty())
            fail("homology input needs a nonempty 'matrices' array");
        HomologyPayload p;
        int degree = 0;
        for (const auto& m : doc.at("matrices"))
            p.matrices.push_back(parse_matrix(m, "degree " + std::to_string(degree++)));
        if (doc.contains("surface")) {
            if (!doc.at("surface").is_boolean())
                fail("field 'surface' must be a boolean");
            p.surface = doc.at("surface").get<bool>();
        }
        input.payload = std::move(p);
    } else if (kind == "torus") {
        input.kind = ProblemKind::torus;
        allowed.insert({"matrix", "lambda"});
        check_keys(doc, allowed);
        if (!doc.contains("matrix"))
            fail("torus input needs a 'matrix' field");
        input.payload = TorusPayload{parse_matrix(doc.at("matrix"), "torus matrix")};
    } else if (kind == "periodic") {
        input.kind = ProblemKind::periodic;
        allowed.insert({"period", "counts"});
        check_keys(doc, allowed);
        if (!doc.contains("period"))
            fail("periodic input needs a 'period' field");
        PeriodicPayload p;
        p.period = get_int_field(doc, "period", 1, 1000000);
        if (!doc.contains("counts") || !doc.at("counts").is_object())
            fail("periodic input needs a 'counts' object keyed by divisors");
        for (const auto& [key, value] : doc.at("counts").items()) {
            long divisor = 0;
            try {
                size_t consumed = 0;
                divisor = std::stol(key, &consumed);
                if (consumed != key.size())
                    throw std::invalid_argument(key);
            } catch (const std::exception&) {
                fail("count key '" + key + "' is not a positive integer");
            }
            if (divisor < 1)
                fail("count key '" + key + "' is not a positive integer");
            if (!value.is_number_integer() || value.get<long long>() < 0)
                fail("count for divisor " + key + " must be a nonnegative integer");
            p.counts[divisor] = Int(value.get<long>());
        }
        input.payload = std::move(p);
    } else if (kind == "subshift") {
        input.kind = ProblemKind::subshift;
        allowed.insert({"pieces"});
        check_keys(doc, allowed);
        if (!doc.contains("pieces") || !doc.at("pieces").is_array() || doc.at("pieces").empty())
            fail("subshift input needs a nonempty 'pieces' array");
        SubshiftPayload p;
        int index = 0;
        for (const auto& piece : doc.at("pieces")) {
            const std::string where = "piece " + std::to_string(index++);
            if (!piece.is_object() || !piece.contains("matrix") || !piece.contains("sign"))
                fail(where + " needs 'matrix' and 'sign'");
            check_keys(piece, {"matrix", "sign"});
            const auto& sign = piece.at("sign");
            if (!sign.is_number_integer() ||
                (sign.get<long>() != 1 && sign.get<long>() != -1))
                fail(where + ": sign must be 1 or -1");
            p.pieces.push_back(SubshiftPiecePayload{
                parse_matrix(piece.at("matrix"), where),
                static_cast<int>(sign.get<long>())});
        }
        input.payload = std::move(p);
    } else {
        fail("unknown kind '" + kind + "'");
    }

    if (doc.contains("order"))
        input.order = static_cast<int>(
            get_int_field(doc, "order", 1, ProblemInput::kMaxOrder));
    if (doc.contains("horizon"))
        input.horizon = static_cast<int>(get_int_field(
            doc, "horizon", ProblemInput::kMinHorizon, ProblemInput::kMaxHorizon));
    if (doc.contains("lambda")) {
        if (!doc.at("lambda").is_array())
            fail("field 'lambda' must be an array of {re, im} objects");
        for (const auto& l : doc.at("lambda")) {
            if (!l.is_object() || !l.contains("re") || !l.contains("im") ||
                !l.at("re").is_number() || !l.at("im").is_number())
                fail("holonomies must be objects with numeric 're' and 'im'");
            check_keys(l, {"re", "im"});
            Holonomy h{l.at("re").get<double>(), l.at("im").get<double>()};
            h.unit();  // validates unit modulus
            input.lambdas.push_back(h);
        }
    }

    input.validate();
    return input;
}

}  // namespace detail

std::string to_string(ProblemKind kind) {
    switch (kind) {
        case ProblemKind::homology: return "homology";
        case ProblemKind::torus: return "torus";
        case ProblemKind::periodic: return "periodic";
        case ProblemKind::subshift: return "subshift";
    }
    throw std::logic_error("unreachable problem kind");
}

ProblemInput ProblemInput::parse(const std::string& json_text) {
    detail::ordered_json doc;
    try {
        doc = detail::ordered_json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("input is not valid JSON: ") + e.what());
    }
    return detail::input_from_json(doc);
}

std::string ProblemInput::to_json_text() const {
    return detail::input_to_json(*this).dump(2) + "\n";
}

void ProblemInput::validate() const {
    if (order < 1 || order > kMaxOrder)
        throw std::invalid_argument("order must be in [1, " + std::to_string(kMaxOrder) + "]");
    if (horizon < kMinHorizon || horizon > kMaxHorizon)
        throw std::invalid_argument("horizon must be in [" + std::to_string(kMinHorizon) +
                                    ", " + std::to_string(kMaxHorizon) + "]");
    switch (kind) {
        case ProblemKind::homology: {
            const auto& p = std::get<HomologyPayload>(payload);
            GradedAction(p.matrices, p.surface);
            break;
        }
        case ProblemKind::torus:
            TorusMap(std::get<TorusPayload>(payload).matrix);
            break;
        case ProblemKind::periodic: {
            const auto& p = std::get<PeriodicPayload>(payload);
            NielsenData(p.period, p.counts);
            break;
        }
        case ProblemKind::subshift: {
            const auto& p = std::get<SubshiftPayload>(payload);
            std::vector<SignedPiece> pieces;
            for (const auto& piece : p.pieces)
                pieces.push_back(SignedPiece{Subshift(piece.matrix), piece.sign});
            SignedSubshiftFamily(std::move(pieces));
            break;
        }
    }
    if (!lambdas.empty() &&
        (kind == ProblemKind::periodic || kind == ProblemKind::subshift))
        throw std::invalid_argument("'lambda' applies to homology and torus inputs only");
    for (const auto& l : lambdas)
        l.unit();
}

}  // namespace zeta
