#include "quivinv/report.hpp"

#include "quivinv/errors.hpp"
#include "quivinv/filtrep.hpp"
#include "quivinv/invariants.hpp"
#include "quivinv/polyring.hpp"
#include "quivinv/quiver.hpp"
#include "quivinv/tableaux.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <sstream>
#include <stdexcept>

namespace quivinv {

using ordered_json = nlohmann::ordered_json;

namespace {

const char* outcome_str(PathwayReport::Outcome o) {
    return o == PathwayReport::Outcome::AtMostTwo ? "AtMostTwo" : "MoreThanTwo";
}

const char* span_verdict_str(SpanVerdict v) {
    switch (v) {
    case SpanVerdict::Equal: return "equal";
    case SpanVerdict::AInsideB: return "A<B";
    case SpanVerdict::BInsideA: return "B<A";
    default: return "incomparable";
    }
}

ordered_json pathway_pairs_json(const PathwayReport& rep, const Quiver& q) {
    ordered_json pairs = ordered_json::array();
    for (int i = 1; i <= q.vertex_count(); ++i)
        for (int j = 1; j <= q.vertex_count(); ++j) {
            const auto& list = rep.pair(i, j);
            if (list.empty()) continue;
            ordered_json entry;
            entry["from"] = q.vertex_name(i);
            entry["to"] = q.vertex_name(j);
            ordered_json words = ordered_json::array();
            for (const PathWord& w : list) words.push_back(w.str(q));
            entry["pathways"] = words;
            pairs.push_back(std::move(entry));
        }
    return pairs;
}

ordered_json witnesses_json(const PathwayReport& rep, const Quiver& q) {
    ordered_json w;
    w["from"] = q.vertex_name(rep.witness_from);
    w["to"] = q.vertex_name(rep.witness_to);
    ordered_json words = ordered_json::array();
    for (const PathWord& word : rep.witnesses) words.push_back(word.str(q));
    w["pathways"] = words;
    return w;
}

ordered_json kernel_json(const KernelReport& k, bool include_basis) {
    ordered_json out;
    out["degree_bound"] = k.degree_bound;
    out["dim_by_degree"] = k.dim_by_degree;
    out["total_dim"] = k.total_dim();
    if (include_basis) {
        ordered_json basis = ordered_json::array();
        for (const Polynomial& p : k.basis) basis.push_back(p.str());
        out["basis"] = basis;
    }
    return out;
}

std::string render_text(const ordered_json& report) {
    std::ostringstream os;
    for (auto it = report.begin(); it != report.end(); ++it) {
        if (it.key() == "data") continue;
        os << it.key() << ": "
           << (it.value().is_string() ? it.value().get<std::string>() : it.value().dump()) << '\n';
    }
    if (report.contains("data")) os << "data:\n" << report["data"].dump(2) << '\n';
    return os.str();
}

Quiver doc_full_quiver(const QuiverDoc& doc) {
    return doc.framed() ? doc.to_framed().full() : doc.to_quiver();
}

GeneralRep doc_rep(const QuiverDoc& doc, const RunOptions& opts) {
    if (doc.framed()) return build_general_rep(doc.to_framed(), RepConfig{opts.n, opts.m});
    return build_general_rep(doc.to_quiver(), RepConfig{opts.n, 0});
}

// the worked fixture: framed path 1' -> 1 -> 2 at n = m = 2, block
// standard rows (2|1)(2|2) on A0 and (1 2|1 2)(2|1) on A1*A0
CommandOutcome run_example_46(ordered_json report) {
    Quiver base = make_equioriented_a(1);
    FramedQuiver fq = FramedQuiver::frame(base, 1);
    GeneralRep rep = build_general_rep(fq, RepConfig{2, 2});

    Bitableau bt;
    bt.j_rows = {{2}, {2}, {1, 2}, {2}};
    bt.i_rows = {{1}, {2}, {1, 2}, {1}};
    bt.labels = {{0}, {0}, {1, 0}, {1, 0}};

    auto x = [&](int r, int c) { return Polynomial::variable(VarId::coord(0, r, c)); };
    auto a = [&](int r, int c) { return Polynomial::variable(VarId::coord(1, r, c)); };
    Polynomial expected = x(2, 1).pow(2) * x(2, 2) * a(1, 1) * a(2, 2).pow(2) *
                          (x(1, 1) * x(2, 2) - x(1, 2) * x(2, 1));

    Polynomial value = eval_bideterminant(bt, rep);
    const bool pass = value == expected && is_block_standard(bt) && is_invariant(rep, value);

    report["quiver"] = "framed-eqA1";
    report["n"] = 2;
    report["m"] = 2;
    report["verdict"] = pass ? "PASS" : "FAIL";
    ordered_json data;
    data["bitableau"] = bt.str();
    data["polynomial"] = value.str();
    data["expected"] = expected.str();
    data["block_standard"] = is_block_standard(bt);
    report["data"] = std::move(data);

    CommandOutcome out;
    out.exit_code = pass ? 0 : 1;
    out.json = report.dump(2);
    out.text = render_text(report);
    return out;
}

} // namespace

CommandOutcome run_command(const std::string& command, const std::optional<QuiverDoc>& doc,
                           const RunOptions& opts) {
    const auto start = std::chrono::steady_clock::now();
    ordered_json report;
    report["schema"] = kSchemaVersion;
    report["command"] = command;

    CommandOutcome out;
    InvariantOptions iopts;
    iopts.monomial_guard = opts.monomial_guard;

    if (command == "verify-example") {
        if (opts.example_id != "4.6")
            throw std::invalid_argument("unknown example '" + opts.example_id +
                                        "' (available: 4.6)");
        out = run_example_46(std::move(report));
    } else {
        if (!doc) throw std::invalid_argument("command requires a quiver file");
        report["quiver"] = doc->name;

        if (command == "classify" || command == "pathways") {
            Quiver q = doc_full_quiver(*doc);
            PathwayReport rep = enumerate_pathways(q, opts.length_cap);
            report["verdict"] = outcome_str(rep.outcome);
            ordered_json data;
            data["outcome"] = outcome_str(rep.outcome);
            data["connected"] = rep.connected;
            if (rep.outcome == PathwayReport::Outcome::MoreThanTwo)
                data["witnesses"] = witnesses_json(rep, q);
            if (command == "pathways" && rep.outcome == PathwayReport::Outcome::AtMostTwo)
                data["pairs"] = pathway_pairs_json(rep, q);
            report["data"] = std::move(data);
            out.exit_code = 0;
        } else if (command == "invariants") {
            report["n"] = opts.n;
            if (doc->framed()) report["m"] = opts.m;
            report["d"] = opts.d;
            GeneralRep rep = doc_rep(*doc, opts);
            KernelReport kernel = invariant_basis(rep, opts.d, iopts);
            report["verdict"] = "dim=" + std::to_string(kernel.total_dim());
            report["data"] = kernel_json(kernel, true);
            out.exit_code = 0;
        } else if (command == "generators") {
            if (!doc->framed())
                throw std::invalid_argument("generators requires a framed quiver file");
            report["n"] = opts.n;
            report["m"] = opts.m;
            report["d"] = opts.d;
            FramedQuiver fq = doc->to_framed();
            GeneralRep rep = build_general_rep(fq, RepConfig{opts.n, opts.m});
            ordered_json rows = ordered_json::array();
            for (const Bitableau& bt : enumerate_row_generators(fq, rep, opts.n, opts.m)) {
                ordered_json row;
                row["bitableau"] = bt.str();
                row["polynomial"] = eval_bideterminant(bt, rep).str();
                rows.push_back(std::move(row));
            }
            auto products = enumerate_block_standard_detailed(fq, rep, opts.d);
            ordered_json data;
            data["rows"] = std::move(rows);
            data["product_count"] = products.size();
            ordered_json prods = ordered_json::array();
            for (const auto& p : products) {
                ordered_json e;
                e["bitableau"] = p.bitableau.str();
                e["diagonal"] = p.diagonal.str();
                e["value"] = p.value.str();
                prods.push_back(std::move(e));
            }
            data["products"] = std::move(prods);
            report["verdict"] = "rows=" + std::to_string(data["rows"].size());
            report["data"] = std::move(data);
            out.exit_code = 0;
        } else if (command == "verify-thm1") {
            if (doc->framed())
                throw std::invalid_argument("verify-thm1 expects a nonframed quiver file");
            report["n"] = opts.n;
            report["d"] = opts.d;
            Theorem1Report rep = verify_theorem1(doc->to_quiver(), opts.n, opts.d, iopts);
            report["verdict"] = rep.consistent ? "CONSISTENT" : "INCONSISTENT";
            ordered_json data;
            data["outcome"] = outcome_str(rep.pathways.outcome);
            data["kernel"] = kernel_json(rep.kernel, false);
            data["expected_diag_dim"] = rep.expected_diag_dim;
            data["span"] = span_verdict_str(rep.comparison.verdict);
            if (rep.extra_invariant) data["extra_invariant"] = rep.extra_invariant->str();
            report["data"] = std::move(data);
            out.exit_code = rep.consistent ? 0 : 1;
        } else if (command == "verify-thm2") {
            if (!doc->framed())
                throw std::invalid_argument("verify-thm2 requires a framed quiver file");
            report["n"] = opts.n;
            report["m"] = opts.m;
            report["d"] = opts.d;
            Theorem2Report rep = verify_theorem2(doc->to_framed(), opts.n, opts.m, opts.d, iopts);
            report["verdict"] = rep.pass ? "PASS" : "FAIL";
            ordered_json data;
            data["kernel"] = kernel_json(rep.kernel, false);
            data["generator_count"] = rep.generator_count;
            data["span"] = span_verdict_str(rep.comparison.verdict);
            if (rep.witness) data["witness"] = rep.witness->str();
            report["data"] = std::move(data);
            out.exit_code = rep.pass ? 0 : 1;
        } else {
            throw std::invalid_argument("unknown command '" + command + "'");
        }
        report["version"] = kToolVersion;
        const auto elapsed = std::chrono::steady_clock::now() - start;
        report["millis"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
        out.json = report.dump(2);
        out.text = render_text(report);
        return out;
    }

    // verify-example assembled its own report body; add the tail fields
    ordered_json parsed = ordered_json::parse(out.json);
    parsed["version"] = kToolVersion;
    const auto elapsed = std::chrono::steady_clock::now() - start;
    parsed["millis"] = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    out.json = parsed.dump(2);
    out.text = render_text(parsed);
    return out;
}

} // namespace quivinv
