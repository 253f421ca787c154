#include "modmat/json_io.hpp"

#include <cstdio>
#include <fstream>

namespace modmat {

Json rat_json(const Rat& q) { return q.get_str(); }

Json cyclotomic_json(const Cyclotomic& z) {
    Json arr = Json::array();
    for (const Rat& c : z.coeffs()) arr.push_back(c.get_str());
    return arr;
}

Json config_json(const Configuration<Rat>& c) {
    Json j;
    j["field"] = "rational";
    Json pts = Json::array();
    for (const auto& p : c.points) pts.push_back(Json::array({rat_json(p[0]), rat_json(p[1]), rat_json(p[2])}));
    j["points"] = pts;
    return j;
}

Json config_json(const Configuration<Cyclotomic>& c) {
    long order = 1;
    for (const auto& p : c.points)
        for (const auto& x : p) order = std::max(order, x.order());
    Json j;
    j["field"] = "cyclotomic:" + std::to_string(order);
    Json pts = Json::array();
    for (const auto& p : c.points) {
        Json pt = Json::array();
        for (const auto& x : p) pt.push_back(cyclotomic_json(x.in_order(order)));
        pts.push_back(pt);
    }
    j["points"] = pts;
    return j;
}

namespace {
Json triples_json(const std::vector<Triple>& ts) {
    Json arr = Json::array();
    for (const Triple& t : ts) arr.push_back(Json::array({t[0], t[1], t[2]}));
    return arr;
}
} // namespace

Json realization_report_json(const RealizationReport& rep) {
    Json j;
    j["is_realization"] = rep.is_realization;
    j["failed_nonbases"] = triples_json(rep.failed_nonbases);
    j["degenerate_bases"] = triples_json(rep.degenerate_bases);
    return j;
}

Json report_json(const Report& rep) {
    Json j;
    j["check"] = rep.check;
    j["level"] = rep.n;
    j["qprec"] = rep.qprec;
    j["status"] = rep.passed() ? "pass" : "fail";
    Json items = Json::array();
    for (const auto& it : rep.items) {
        Json e;
        e["name"] = it.name;
        e["passed"] = it.passed;
        if (!it.detail.empty()) e["detail"] = it.detail;
        items.push_back(e);
    }
    j["items"] = items;
    return j;
}

Json qseries_json(const QSeries& s) {
    Json arr = Json::array();
    for (int k = 0; k < s.prec(); ++k) arr.push_back(cyclotomic_json(s[k]));
    return arr;
}

Json matroid_json(const Matroid3& m) {
    Json j;
    j["ground_size"] = m.ground_size();
    j["nonbases"] = triples_json(m.nonbases());
    return j;
}

Json chain_window_json(const ChainWindow<Rat>& w) {
    Json j;
    j["s"] = rat_json(w.params.s);
    j["t"] = rat_json(w.params.t);
    j["range"] = Json::array({w.kmin, w.kmax});
    Json pts = Json::object();
    for (int k = w.kmin; k <= w.kmax; ++k) {
        const auto& p = w.at(k);
        pts[std::to_string(k)] = Json::array({rat_json(p[0]), rat_json(p[1]), rat_json(p[2])});
    }
    j["points"] = pts;
    return j;
}

Json identity_report_json(const IdentityReport& rep) {
    Json j;
    j["identity"] = identity_kind_name(rep.kind);
    j["level"] = rep.n;
    j["indices"] = rep.indices;
    j["qprec"] = rep.qprec;
    if (rep.zorder_checked >= 0) j["zorder_checked"] = rep.zorder_checked;
    j["status"] = rep.passed ? "pass" : "fail";
    return j;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

void write_file_atomic(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) fail("IoError", "cannot open " + tmp + " for writing");
        out << content;
        if (!out.good()) fail("IoError", "short write to " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        fail("IoError", "cannot rename " + tmp + " to " + path);
}

} // namespace modmat
