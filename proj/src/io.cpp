#include "nhtopo/io.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

namespace nhtopo {

namespace {

std::vector<std::string> tokenize(std::string_view line) {
    std::vector<std::string> tokens;
    std::string cur;
    for (char ch : line) {
        if (ch == ' ' || ch == '\t' || ch == '\r') {
            if (!cur.empty()) tokens.push_back(std::move(cur)), cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) tokens.push_back(std::move(cur));
    return tokens;
}

} // namespace

SimplicialComplex parse_complex(std::string_view text) {
    const auto first_char = text.find_first_not_of(" \t\r\n");
    if (first_char != std::string_view::npos && text[first_char] == '{') {
        nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
        if (j.is_discarded()) throw ParseError("invalid JSON document");
        return complex_from_json(j);
    }

    bool have_ground = false;
    bool is_void = false;
    std::vector<Vertex> ground;
    std::vector<Simplex> facets;
    bool any_facet = false;

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        const std::size_t hash = line.find('#');
        if (hash != std::string_view::npos) line = line.substr(0, hash);
        std::vector<std::string> tokens = tokenize(line);
        if (tokens.empty()) continue;

        if (tokens[0] == "ground:") {
            if (have_ground) throw ParseError("duplicate ground declaration", line_no);
            if (any_facet) throw ParseError("ground declared after facets", line_no);
            have_ground = true;
            ground.assign(tokens.begin() + 1, tokens.end());
        } else if (tokens[0] == "facet:") {
            if (is_void) throw ParseError("facet after void declaration", line_no);
            Simplex f(tokens.begin() + 1, tokens.end());
            std::sort(f.begin(), f.end());
            if (std::adjacent_find(f.begin(), f.end()) != f.end())
                throw ParseError("duplicate vertex in facet", line_no);
            facets.push_back(std::move(f));
            any_facet = true;
        } else if (tokens[0] == "void" && tokens.size() == 1) {
            if (any_facet) throw ParseError("void declaration after facets", line_no);
            is_void = true;
        } else {
            throw ParseError("unrecognized line '" + tokens[0] + "'", line_no);
        }
    }

    if (is_void || !any_facet) return SimplicialComplex::make_void(ground);
    if (!have_ground) {
        for (const Simplex& f : facets) ground.insert(ground.end(), f.begin(), f.end());
    }
    return SimplicialComplex::make(ground, facets); // GroundViolation when a facet escapes
}

std::string serialize_complex(const SimplicialComplex& k) {
    std::ostringstream out;
    if (!k.ground().empty()) {
        out << "ground:";
        for (const Vertex& v : k.ground()) out << ' ' << v;
        out << '\n';
    }
    if (k.is_void()) {
        out << "void\n";
        return out.str();
    }
    for (const Simplex& f : k.facets()) {
        out << "facet:";
        for (const Vertex& v : f) out << ' ' << v;
        out << '\n';
    }
    return out.str();
}

nlohmann::json complex_to_json(const SimplicialComplex& k) {
    nlohmann::json j;
    j["ground"] = k.ground();
    j["facets"] = nlohmann::json::array();
    if (!k.is_void())
        for (const Simplex& f : k.facets()) j["facets"].push_back(f);
    j["void"] = k.is_void();
    return j;
}

SimplicialComplex complex_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ParseError("JSON document must be an object");
    std::vector<Vertex> ground;
    if (j.contains("ground")) {
        if (!j["ground"].is_array()) throw ParseError("'ground' must be an array");
        for (const auto& v : j["ground"]) {
            if (!v.is_string()) throw ParseError("ground vertices must be strings");
            ground.push_back(v.get<std::string>());
        }
    }
    if (j.value("void", false)) {
        if (j.contains("facets") && !j["facets"].empty())
            throw ParseError("void complex cannot list facets");
        return SimplicialComplex::make_void(ground);
    }
    if (!j.contains("facets") || !j["facets"].is_array())
        throw ParseError("'facets' must be an array");
    std::vector<Simplex> facets;
    for (const auto& f : j["facets"]) {
        if (!f.is_array()) throw ParseError("each facet must be an array");
        Simplex s;
        for (const auto& v : f) {
            if (!v.is_string()) throw ParseError("facet vertices must be strings");
            s.push_back(v.get<std::string>());
        }
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw ParseError("duplicate vertex in facet");
        facets.push_back(std::move(s));
    }
    if (facets.empty()) return SimplicialComplex::make_void(ground);
    if (!j.contains("ground")) {
        for (const Simplex& f : facets) ground.insert(ground.end(), f.begin(), f.end());
    }
    return SimplicialComplex::make(ground, facets);
}

} // namespace nhtopo
