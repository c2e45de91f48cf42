#include "qtri/io.hpp"

#include "qtri/errors.hpp"

#include <json.hpp>

#include <cctype>

namespace qtri::io {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

namespace {

ordered laurent_json(const LaurentPoly& p) {
    ordered j = ordered::object();
    for (const auto& [d, c] : p.coeffs()) j[std::to_string(d)] = c.get_str();
    return j;
}

ordered torus_json(const TorusElem& t) {
    ordered arr = ordered::array();
    for (const auto& [e, c] : t.terms()) {
        ordered term;
        term["exp"] = e;
        term["coeff"] = laurent_json(c);
        arr.push_back(std::move(term));
    }
    return arr;
}

LaurentPoly laurent_of(const json& j) {
    if (!j.is_object()) throw DomainError("Laurent polynomial must be a JSON object");
    LaurentPoly::CoeffMap m;
    for (const auto& [k, v] : j.items()) {
        std::size_t used = 0;
        const int d = std::stoi(k, &used);
        if (used != k.size()) throw DomainError("bad degree key: " + k);
        Integer c;
        if (v.is_string()) {
            if (c.set_str(v.get<std::string>(), 10) != 0) throw DomainError("bad coefficient: " + v.dump());
        } else if (v.is_number_integer()) {
            c = v.get<long>();
        } else {
            throw DomainError("bad coefficient: " + v.dump());
        }
        m[d] += c;
    }
    return LaurentPoly(std::move(m));
}

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw DomainError(std::string("malformed JSON: ") + e.what());
    }
}

}  // namespace

std::string to_json(const LaurentPoly& p) { return laurent_json(p).dump(); }

LaurentPoly laurent_from_json(const std::string& text) { return laurent_of(parse(text)); }

std::string to_json(const TorusElem& t) { return torus_json(t).dump(); }

TorusElem torus_from_json(const std::string& text, const LambdaHandle& lambda) {
    const json j = parse(text);
    if (!j.is_array()) throw DomainError("torus element must be a JSON array");
    TorusElem t(lambda);
    for (const auto& term : j) {
        if (!term.contains("exp") || !term.contains("coeff")) throw DomainError("torus term needs exp and coeff");
        t.add_term(term.at("exp").get<ExpVec>(), laurent_of(term.at("coeff")));
    }
    return t;
}

std::string to_json(const TriBasisElem& c) {
    ordered j;
    j["a"] = c.a;
    j["terms"] = torus_json(c.torus_form);
    j["support"] = c.support();
    return j.dump();
}

std::string to_json(const Seed& s) {
    ordered j;
    j["B"] = s.exchange_matrix().to_rows();
    j["btilde"] = s.btilde.to_rows();
    j["lambda"] = s.lambda->to_rows();
    return j.dump();
}

std::string to_json(const WVector& w) {
    ordered j;
    j["w"] = w.w;
    j["w_prime"] = w.wp;
    return j.dump();
}

std::string to_json(const Theorem1Report& r) {
    ordered j;
    j["a"] = r.elem.a;
    j["passed"] = r.passed();
    j["bar_invariant"] = r.bar_invariant;
    j["leading_term_one"] = r.leading_term_one;
    ordered entries = ordered::array();
    for (const auto& e : r.entries) {
        ordered x;
        x["v"] = e.v;
        x["e_v"] = laurent_json(e.e);
        x["deg"] = e.degree;
        x["f"] = e.f;
        x["margin"] = e.margin();
        x["symmetric"] = e.symmetric;
        x["unimodal"] = e.unimodal;
        x["deg_le_f"] = e.degree_ok;
        x["in_region"] = e.in_region;
        x["f_identity"] = e.f_identity;
        entries.push_back(std::move(x));
    }
    j["entries"] = std::move(entries);
    if (!r.elem.equal_r_flags.empty()) j["equal_r_corrections"] = r.elem.equal_r_flags;
    return j.dump();
}

IntMatrix matrix_from_json(const std::string& text) {
    json j = parse(text);
    if (j.is_object()) {
        if (!j.contains("B")) throw DomainError("seed object must have a \"B\" field");
        j = j.at("B");
    }
    if (!j.is_array()) throw DomainError("matrix must be a JSON array of rows");
    std::vector<std::vector<int>> rows;
    for (const auto& row : j) {
        if (!row.is_array()) throw DomainError("matrix rows must be arrays");
        std::vector<int> r;
        for (const auto& x : row) {
            if (!x.is_number_integer()) throw DomainError("matrix entries must be integers");
            r.push_back(x.get<int>());
        }
        rows.push_back(std::move(r));
    }
    return IntMatrix::from_rows(rows);
}

std::vector<int> parse_int_list(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (!s.empty() && (s.front() == '[' || s.front() == '(')) {
        const char close = s.front() == '[' ? ']' : ')';
        if (s.back() != close) throw DomainError("unbalanced brackets in list: " + text);
        s = s.substr(1, s.size() - 2);
    }
    std::vector<int> out;
    if (s.empty()) return out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = s.find(',', start);
        const std::string tok = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        std::size_t used = 0;
        int x = 0;
        try {
            x = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw DomainError("not an integer: '" + tok + "'");
        }
        if (used != tok.size()) throw DomainError("not an integer: '" + tok + "'");
        out.push_back(x);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string pretty(const std::string& json_text) { return ordered::parse(json_text).dump(2); }

}  // namespace qtri::io
