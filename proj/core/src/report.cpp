#include "coverhfk/report.hpp"

#include <sstream>

#include "coverhfk/cfk_base.hpp"

namespace coverhfk::report {

namespace {

json laurent_json(const LaurentPoly& f) {
    json o = json::object();
    for (const auto& [d, c] : f.coeffs()) o[std::to_string(d)] = c.get_str();
    return o;
}

json residue_json(const Residue& r) {
    json a = json::array();
    for (auto x : r) a.push_back(x);
    return a;
}

json knot_header(const TwoBridgeKnot& k, const std::string& command, const char* kind) {
    json doc;
    doc["command"] = command;
    doc["version"] = kVersion;
    doc["kind"] = kind;
    doc["p"] = k.p;
    doc["q"] = k.q;
    doc["q_star"] = k.q_star;
    return doc;
}

json classes_json(const std::vector<SpincClassSummary>& classes) {
    json arr = json::array();
    for (const SpincClassSummary& s : classes) {
        json c;
        c["label"] = residue_json(s.label);
        c["size"] = s.size;
        c["centered"] = s.centered;
        json levels = json::object();
        for (const auto& [lv, n] : s.level_counts) levels[std::to_string(lv)] = n;
        c["levels"] = levels;
        json signed_ = json::object();
        for (const auto& [lv, n] : s.signed_counts) signed_[std::to_string(lv)] = n.get_str();
        c["signed"] = signed_;
        c["p_s"] = laurent_json(s.p_s);
        c["central"] = s.is_central;
        c["conjugate"] = residue_json(s.conjugate_label);
        arr.push_back(std::move(c));
    }
    return arr;
}

}  // namespace

json info_report(const TwoBridgeKnot& k, const std::string& command) {
    json doc = knot_header(k, command, "info");
    json eps = json::array();
    for (int e : k.epsilon) eps.push_back(e);
    doc["epsilon"] = eps;
    json cf = json::array();
    if (k.p > 1)
        for (auto c : continued_fraction(k.p, k.q_star % k.p)) cf.push_back(c);
    doc["continued_fraction"] = cf;
    doc["signature"] = signature(k);
    doc["alexander"] = laurent_json(alexander_polynomial(k));
    doc["determinant"] = determinant_check(k);
    doc["annotations"] = json::array();
    return doc;
}

json base_report(const TwoBridgeKnot& k, const std::string& command) {
    json doc = knot_header(k, command, "base");
    doc["signature"] = signature(k);
    doc["alexander"] = laurent_json(alexander_polynomial(k));
    json gens = json::array();
    std::map<std::int64_t, std::int64_t> levels;
    for (const BaseGenerator& g : base_generators(k)) {
        json o;
        o["position"] = g.position;
        o["alexander"] = g.alexander;
        o["sign"] = g.sign;
        o["maslov"] = g.maslov;
        gens.push_back(std::move(o));
        levels[g.alexander] += 1;
    }
    doc["generators"] = gens;
    json lv = json::object();
    for (const auto& [a, n] : levels) lv[std::to_string(a)] = n;
    doc["levels"] = lv;
    json hfk = json::array();
    for (const auto& [key, r] : hfk_hat_base(k).ranks) {
        json o;
        o["alexander"] = key.first;
        o["maslov"] = key.second;
        o["rank"] = r;
        hfk.push_back(std::move(o));
    }
    doc["hfk"] = hfk;
    doc["annotations"] = json::array();
    return doc;
}

json cover_report(const TwoBridgeKnot& k, int m, const std::string& command) {
    json doc = knot_header(k, command, "cover");
    doc["m"] = m;
    CoverData c = compute_cover(k, m);
    json h1;
    h1["order"] = c.maps.h1_order.get_str();
    json factors = json::array();
    for (auto d : c.maps.h1_torsion.factors) factors.push_back(d);
    h1["factors"] = factors;
    doc["h1"] = h1;
    doc["generator_count"] = c.generators.size();
    std::vector<SpincClassSummary> classes = spinc_classes(c);
    doc["classes"] = classes_json(classes);
    doc["fingerprint"] = fingerprint(c).digest;
    json ann = json::array();
    ann.push_back(
        "spin-c labels are Smith-basis residues; matching a published table may "
        "require relabeling by a unit and conjugation");
    for (const SpincClassSummary& s : classes)
        if (!s.centered)
            ann.push_back("class " + residue_str(s.label) +
                          " levels are relative to its least generator word");
    doc["annotations"] = ann;
    return doc;
}

json torsion_report(const TwoBridgeKnot& k, int m,
                    const std::optional<std::vector<std::int64_t>>& chars,
                    const std::string& command) {
    json doc = knot_header(k, command, "torsion");
    doc["m"] = m;
    TorsionElement t = turaev_torsion(k, m);
    json h1;
    h1["order"] = t.h1_order.get_str();
    json factors = json::array();
    for (auto d : t.group.factors) factors.push_back(d);
    h1["factors"] = factors;
    doc["h1"] = h1;
    doc["denominator"] = "T - 1";
    json num = json::array();
    for (const auto& [key, c] : t.numerator.coeffs()) {
        json o;
        o["label"] = residue_json(key.first);
        o["degree"] = key.second;
        o["coeff"] = c.get_str();
        num.push_back(std::move(o));
    }
    doc["numerator"] = num;
    json ps = json::array();
    for (const Residue& r : t.group.elements()) {
        json o;
        o["label"] = residue_json(r);
        o["p_s"] = laurent_json(t.p_s(r));
        ps.push_back(std::move(o));
    }
    doc["p_s_by_class"] = ps;
    doc["acyclic"] = acyclicity_check(k, m);
    if (chars) {
        json tw;
        json ch = json::array();
        for (auto c : *chars) ch.push_back(c);
        tw["chars"] = ch;
        CycloPoly w = twisted_alexander_wada(k, m, *chars);
        tw["conductor"] = w.ring().conductor();
        json terms = json::array();
        for (const auto& [d, rep] : w.coeffs()) {
            json o;
            o["degree"] = d;
            json r = json::array();
            for (const Int& x : rep) r.push_back(x.get_str());
            o["zeta_coeffs"] = r;
            terms.push_back(std::move(o));
        }
        tw["terms"] = terms;
        doc["twisted"] = tw;
    }
    doc["annotations"] = json::array();
    return doc;
}

json compare_report(const TwoBridgeKnot& k1, const TwoBridgeKnot& k2,
                    const std::string& command) {
    json doc;
    doc["command"] = command;
    doc["version"] = kVersion;
    doc["kind"] = "compare";
    doc["first"] = {{"p", k1.p}, {"q", k1.q}};
    doc["second"] = {{"p", k2.p}, {"q", k2.q}};
    bool alex_eq = alexander_polynomial(k1) == alexander_polynomial(k2);
    bool sig_eq = signature(k1) == signature(k2);
    bool hfk_eq = hfk_hat_base(k1).ranks == hfk_hat_base(k2).ranks;
    Fingerprint f1 = fingerprint(k1), f2 = fingerprint(k2);
    doc["alexander_equal"] = alex_eq;
    doc["signature_equal"] = sig_eq;
    doc["hfk_equal"] = hfk_eq;
    doc["base_equal"] = alex_eq && sig_eq && hfk_eq;
    doc["fingerprint_equal"] = f1 == f2;
    doc["fingerprints"] = {{"first", f1.digest}, {"second", f2.digest}};
    doc["annotations"] = json::array();
    return doc;
}

namespace {

std::string poly_from_json(const json& o) {
    LaurentPoly f;
    for (auto it = o.begin(); it != o.end(); ++it)
        f.add_term(std::stoll(it.key()), Int(it.value().get<std::string>(), 10));
    return f.str();
}

void render_info(const json& d, std::ostream& os) {
    os << "K(" << d["p"] << "," << d["q"] << ")  q* = " << d["q_star"] << "\n";
    os << "epsilon:";
    for (const auto& e : d["epsilon"]) os << " " << (e.get<int>() > 0 ? "+" : "-");
    os << "\n";
    os << "continued fraction:";
    for (const auto& c : d["continued_fraction"]) os << " " << c;
    os << "\n";
    os << "signature: " << d["signature"] << "\n";
    os << "alexander: " << poly_from_json(d["alexander"]) << "\n";
    os << "determinant: " << d["determinant"] << "\n";
}

void render_base(const json& d, std::ostream& os) {
    os << "K(" << d["p"] << "," << d["q"] << ")  hat-HFK of the base knot\n";
    os << "alexander: " << poly_from_json(d["alexander"])
       << "   signature: " << d["signature"] << "\n";
    os << "levels:";
    for (auto it = d["levels"].begin(); it != d["levels"].end(); ++it)
        os << "  A=" << it.key() << ": " << it.value().get<std::int64_t>();
    os << "\n";
    os << "ranks (A, M, rank):";
    for (const auto& r : d["hfk"])
        os << "  (" << r["alexander"] << ", " << r["maslov"] << ", " << r["rank"] << ")";
    os << "\n";
}

std::string label_str(const json& l) {
    std::string s = "(";
    for (std::size_t i = 0; i < l.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(l[i].get<std::int64_t>());
    }
    return s + ")";
}

void render_cover(const json& d, std::ostream& os) {
    os << "K(" << d["p"] << "," << d["q"] << ")  m = " << d["m"]
       << "  H1 = " << d["h1"]["order"].get<std::string>() << " with factors [";
    const json& f = d["h1"]["factors"];
    for (std::size_t i = 0; i < f.size(); ++i) os << (i ? " " : "") << f[i];
    os << "]  generators: " << d["generator_count"] << "\n";
    for (const auto& c : d["classes"]) {
        os << "class " << label_str(c["label"]) << (c["central"].get<bool>() ? " *" : "  ")
           << " size " << c["size"] << "  levels";
        for (auto it = c["levels"].begin(); it != c["levels"].end(); ++it)
            os << " " << it.key() << ":" << it.value().get<std::int64_t>();
        os << "  p_s = " << poly_from_json(c["p_s"]);
        if (!c["centered"].get<bool>()) os << "  (relative)";
        os << "\n";
    }
    os << "fingerprint: " << d["fingerprint"].get<std::string>() << "\n";
    for (const auto& a : d["annotations"]) os << "note: " << a.get<std::string>() << "\n";
}

void render_torsion(const json& d, std::ostream& os) {
    os << "K(" << d["p"] << "," << d["q"] << ")  m = " << d["m"]
       << "  torsion numerator over (T - 1), H1 = " << d["h1"]["order"].get<std::string>()
       << "\n";
    for (const auto& c : d["p_s_by_class"])
        os << "p_s" << label_str(c["label"]) << " = " << poly_from_json(c["p_s"]) << "\n";
    os << "acyclic: " << (d["acyclic"].get<bool>() ? "yes" : "no") << "\n";
    if (d.contains("twisted")) {
        os << "twisted (chars";
        for (const auto& c : d["twisted"]["chars"]) os << " " << c;
        os << ", conductor " << d["twisted"]["conductor"] << "):\n";
        for (const auto& t : d["twisted"]["terms"]) {
            os << "  T^" << t["degree"] << ": [";
            const json& r = t["zeta_coeffs"];
            for (std::size_t i = 0; i < r.size(); ++i)
                os << (i ? " " : "") << r[i].get<std::string>();
            os << "]\n";
        }
    }
}

void render_compare(const json& d, std::ostream& os) {
    os << "base HFK: " << (d["base_equal"].get<bool>() ? "EQUAL" : "DIFFERENT")
       << "; branched-cover fingerprint: "
       << (d["fingerprint_equal"].get<bool>() ? "EQUAL" : "DIFFERENT") << "\n";
    os << "  alexander " << (d["alexander_equal"].get<bool>() ? "equal" : "different")
       << ", signature " << (d["signature_equal"].get<bool>() ? "equal" : "different")
       << ", ranks " << (d["hfk_equal"].get<bool>() ? "equal" : "different") << "\n";
    os << "  fingerprints: " << d["fingerprints"]["first"].get<std::string>() << "  "
       << d["fingerprints"]["second"].get<std::string>() << "\n";
}

}  // namespace

std::string render_table(const json& doc) {
    std::ostringstream os;
    const std::string kind = doc["kind"].get<std::string>();
    if (kind == "info")
        render_info(doc, os);
    else if (kind == "base")
        render_base(doc, os);
    else if (kind == "cover")
        render_cover(doc, os);
    else if (kind == "torsion")
        render_torsion(doc, os);
    else if (kind == "compare")
        render_compare(doc, os);
    else
        os << doc.dump(2) << "\n";
    return os.str();
}

}  // namespace coverhfk::report
