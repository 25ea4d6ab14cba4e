#include "cyclefactor/json_io.hpp"

#include "cyclefactor/errors.hpp"

namespace cyclefactor {

void put_rational(Json& obj, const std::string& key, const BigRational& x) {
    obj[key] = to_fraction_string(x);
    obj[key + "_decimal"] = to_double(x);
}

namespace {

Json histogram_json(const std::map<int, BigInt>& histogram) {
    Json h = Json::object();
    for (const auto& [k, v] : histogram) h[std::to_string(k)] = v.str();
    return h;
}

}  // namespace

Json expect_json(const DiGraph& g, const FactorStats& stats, bool histogram, bool edge_usage) {
    Json j;
    j["n"] = g.order();
    j["d"] = regular_degree(g);
    j["N"] = stats.count.str();
    j["T"] = stats.cycle_sum.str();
    put_rational(j, "expectation", stats.expectation());
    if (histogram) j["histogram"] = histogram_json(stats.histogram);
    if (edge_usage && stats.edge_usage) {
        Json arcs = Json::array();
        for (const auto& [arc, used] : *stats.edge_usage) {
            Json a;
            a["arc"] = {arc.tail, arc.head};
            a["count"] = used.str();
            a["probability"] = to_fraction_string(BigRational(used, stats.count));
            arcs.push_back(std::move(a));
        }
        j["edge_usage"] = std::move(arcs);
    }
    return j;
}

Json two_factor_json(const UGraph& g, const FactorStats& stats, bool allow_edge_as_2cycle, bool histogram) {
    Json j;
    j["n"] = g.order();
    int d = g.order() > 0 ? g.degree(0) : -1;
    j["d"] = is_d_regular(g, d) ? d : -1;
    j["convention"] = allow_edge_as_2cycle ? "permissive" : "strict";
    j["N"] = stats.count.str();
    j["T"] = stats.cycle_sum.str();
    put_rational(j, "expectation", stats.expectation());
    if (histogram) j["histogram"] = histogram_json(stats.histogram);
    return j;
}

Json certificate_json(const Certificate& cert) {
    Json j;
    j["graph"] = cert.graph_text;
    j["n"] = cert.n;
    j["d"] = cert.d;
    j["N"] = cert.count.str();
    j["T"] = cert.cycle_sum.str();
    put_rational(j, "expectation", cert.expectation);
    put_rational(j, "benchmark", cert.benchmark);
    put_rational(j, "excess", cert.excess);
    j["verdict"] = verdict_name(cert.verdict);
    j["provenance"] = cert.provenance;
    return j;
}

Certificate certificate_from_json(const Json& j) {
    Certificate cert;
    cert.graph_text = j.at("graph").get<std::string>();
    cert.n = j.at("n").get<int>();
    cert.d = j.at("d").get<int>();
    cert.count = BigInt(j.at("N").get<std::string>());
    cert.cycle_sum = BigInt(j.at("T").get<std::string>());
    cert.expectation = parse_fraction(j.at("expectation").get<std::string>());
    cert.benchmark = parse_fraction(j.at("benchmark").get<std::string>());
    cert.excess = parse_fraction(j.at("excess").get<std::string>());
    const std::string verdict = j.at("verdict").get<std::string>();
    if (verdict == "beats_benchmark") {
        cert.verdict = Verdict::BeatsBenchmark;
    } else if (verdict == "ties") {
        cert.verdict = Verdict::Ties;
    } else if (verdict == "below") {
        cert.verdict = Verdict::Below;
    } else {
        throw PreconditionError("unknown verdict '" + verdict + "'");
    }
    cert.provenance = j.value("provenance", "");
    return cert;
}

Json search_record_json(const SearchRecord& record) {
    Json j;
    j["certificate"] = certificate_json(record.certificate);
    j["iteration"] = record.iteration;
    j["fingerprint"] = fingerprint_hex(record.fingerprint);
    j["lineage"] = record.lineage;
    return j;
}

Json table1_json(int d, const std::vector<PatternRowStats>& rows) {
    Json j;
    j["d"] = d;
    Json out = Json::array();
    for (const auto& row : rows) {
        Json r;
        r["pattern"] = pattern_row_label(row.row);
        r["count"] = row.count.str();
        put_rational(r, "mean", row.mean);
        out.push_back(std::move(r));
    }
    j["rows"] = std::move(out);
    return j;
}

Json formula_json(const XdClosedForm& form) {
    Json j;
    j["d"] = form.d;
    j["N"] = form.count.str();
    j["T"] = form.cycle_sum.str();
    put_rational(j, "expectation", form.expectation());
    put_rational(j, "benchmark", 2 * harmonic(form.d));
    put_rational(j, "excess", form.excess);
    put_rational(j, "d2_excess", asymptotic_excess_probe(form.d));
    j["f"] = excess_cubic(form.d).str();
    j["f_prime"] = excess_cubic_derivative(form.d).str();
    j["rows"] = table1_json(form.d, form.rows)["rows"];
    return j;
}

Json d2_suite_json(const D2SuiteReport& report) {
    Json j;
    j["suite"] = "d2";
    j["pass"] = report.passed();
    Json entries = Json::array();
    for (const auto& o : report.orders) {
        Json e;
        e["n"] = o.n;
        e["graphs"] = o.graphs;
        e["fingerprint_classes"] = o.fingerprint_classes;
        if (o.graphs > 0) put_rational(e, "max_expectation", o.max_expectation);
        e["maximizers"] = o.maximizers;
        e["maximizers_all_k2_unions"] = o.maximizers_all_k2_unions;
        entries.push_back(std::move(e));
    }
    j["entries"] = std::move(entries);
    Json violators = Json::array();
    for (const auto& v : report.violators) violators.push_back({{"graph", v.graph_text}, {"reason", v.reason}});
    j["violators"] = std::move(violators);
    return j;
}

Json xd_cross_json(const XdCrossReport& report) {
    Json j;
    j["suite"] = "xd-cross";
    j["pass"] = report.passed();
    Json entries = Json::array();
    for (const auto& e : report.entries) {
        Json x;
        x["d"] = e.d;
        x["N_enumerated"] = e.enumerated_count.str();
        x["N_closed_form"] = e.closed_count.str();
        x["T_enumerated"] = e.enumerated_sum.str();
        x["T_closed_form"] = e.closed_sum.str();
        put_rational(x, "expectation", e.enumerated_expectation);
        x["matches"] = e.matches;
        if (!e.matches) x["first_mismatch"] = e.first_mismatch;
        entries.push_back(std::move(x));
    }
    j["entries"] = std::move(entries);
    j["violators"] = Json::array();
    for (const auto& e : report.entries)
        if (!e.matches) j["violators"].push_back({{"d", e.d}, {"reason", e.first_mismatch}});
    return j;
}

Json gn_class_json(const GnClassReport& report) {
    Json j;
    j["suite"] = "gn-class";
    j["pass"] = report.passed();
    Json entries = Json::array();
    for (const auto& e : report.entries) {
        Json x;
        x["n"] = e.n;
        x["factors"] = e.factor_count.str();
        Json sizes = Json::array();
        for (const auto& c : e.matchings_by_size) sizes.push_back(c.str());
        x["matchings_by_size"] = std::move(sizes);
        x["matches"] = e.matches;
        entries.push_back(std::move(x));
    }
    j["entries"] = std::move(entries);
    j["violators"] = Json::array();
    for (const auto& e : report.entries)
        if (!e.matches) j["violators"].push_back({{"n", e.n}, {"reason", "classification mismatch"}});
    return j;
}

Json regular_max_json(const RegularMaxReport& report) {
    Json j;
    j["suite"] = "regular-max";
    j["pass"] = true;
    Json e;
    e["n"] = report.n;
    e["d"] = report.d;
    e["graphs"] = report.graphs;
    put_rational(e, "max_expectation", report.max_expectation);
    put_rational(e, "benchmark", report.benchmark);
    put_rational(e, "max_excess", report.max_expectation - report.benchmark);
    e["argmax"] = report.argmax_text;
    j["entries"] = Json::array({e});
    j["violators"] = Json::array();
    return j;
}

}  // namespace cyclefactor
