#include "rootpoly/io.hpp"

#include <fstream>
#include <sstream>

namespace rootpoly {

namespace {

std::vector<std::vector<std::string>> tokenize(const std::string& text) {
    std::vector<std::vector<std::string>> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        if (!toks.empty()) lines.push_back(std::move(toks));
    }
    return lines;
}

int to_int(const std::string& s) {
    try {
        size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw parse_error("trailing characters in number '" + s + "'");
        return v;
    } catch (const std::logic_error&) {
        throw parse_error("expected an integer, got '" + s + "'");
    }
}

}  // namespace

GraphFile parse_graph_file(const std::string& text) {
    auto lines = tokenize(text);
    int n = -1;
    std::vector<Arc> arcs;
    std::vector<std::vector<int>> rot;
    bool any_rot = false;
    std::optional<Basis> basis;
    for (const auto& toks : lines) {
        const std::string& key = toks[0];
        if (key == "vertices") {
            if (toks.size() != 2) throw parse_error("vertices line needs one count");
            n = to_int(toks[1]);
            rot.assign(n, {});
        } else if (key == "arc") {
            if (toks.size() != 4) throw parse_error("arc line needs id, tail, head");
            arcs.push_back({to_int(toks[1]), to_int(toks[2]), to_int(toks[3])});
        } else if (key == "rot") {
            if (n < 0) throw parse_error("rot before vertices line");
            if (toks.size() < 2) throw parse_error("rot line needs a vertex");
            int v = to_int(toks[1]);
            if (v < 0 || v >= n) throw parse_error("rot vertex out of range");
            any_rot = true;
            for (size_t i = 2; i < toks.size(); ++i) rot[v].push_back(to_int(toks[i]));
        } else if (key == "basis") {
            if (toks.size() != 3) throw parse_error("basis line needs vertex and arc");
            basis = Basis{to_int(toks[1]), to_int(toks[2])};
        } else {
            throw parse_error("unknown directive '" + key + "'");
        }
    }
    if (n < 0) throw parse_error("missing vertices line");
    std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) { return a.id < b.id; });
    GraphFile gf{[&] {
                     try {
                         return DirectedGraph(n, std::move(arcs));
                     } catch (const domain_error& e) {
                         throw parse_error(e.what());
                     }
                 }(),
                 std::nullopt, basis};
    if (any_rot) {
        RibbonStructure r{std::move(rot)};
        try {
            validate_ribbon(gf.graph, r);
        } catch (const domain_error& e) {
            throw parse_error(e.what());
        }
        gf.ribbon = std::move(r);
    }
    if (basis) {
        try {
            validate_basis(gf.graph, *basis);
        } catch (const domain_error& e) {
            throw parse_error(e.what());
        }
    }
    return gf;
}

std::string format_graph_file(const DirectedGraph& g, const RibbonStructure* ribbon,
                              const Basis* basis) {
    std::ostringstream os;
    os << "vertices " << g.vertex_count() << "\n";
    for (const Arc& a : g.arcs()) os << "arc " << a.id << " " << a.tail << " " << a.head << "\n";
    if (ribbon) {
        for (int v = 0; v < g.vertex_count(); ++v) {
            os << "rot " << v;
            for (int aid : ribbon->rotation[v]) os << " " << aid;
            os << "\n";
        }
    }
    if (basis) os << "basis " << basis->node << " " << basis->arc << "\n";
    return os.str();
}

RationalVector parse_point_file(const std::string& text, int vertex_count) {
    RationalVector p(vertex_count, 0);
    for (const auto& toks : tokenize(text)) {
        if (toks[0] != "coord") throw parse_error("unknown directive '" + toks[0] + "'");
        if (toks.size() != 3) throw parse_error("coord line needs vertex and value");
        int v = to_int(toks[1]);
        if (v < 0 || v >= vertex_count) throw parse_error("coord vertex out of range");
        p[v] = parse_rational(toks[2]);
    }
    return p;
}

std::string format_point_file(const RationalVector& p) {
    std::ostringstream os;
    for (size_t v = 0; v < p.size(); ++v)
        if (p[v] != 0) os << "coord " << v << " " << format_rational(p[v]) << "\n";
    return os.str();
}

Hypertree parse_hypertree_file(const std::string& text, int vertex_count, Side side) {
    Hypertree h;
    h.side = side;
    h.values.assign(vertex_count, 0);
    for (const auto& toks : tokenize(text)) {
        if (toks[0] != "ht") throw parse_error("unknown directive '" + toks[0] + "'");
        if (toks.size() != 3) throw parse_error("ht line needs vertex and value");
        int v = to_int(toks[1]);
        if (v < 0 || v >= vertex_count) throw parse_error("ht vertex out of range");
        h.values[v] = to_int(toks[2]);
    }
    return h;
}

std::string format_hypertree_file(const Hypertree& h) {
    std::ostringstream os;
    for (size_t v = 0; v < h.values.size(); ++v)
        if (h.values[v] != 0) os << "ht " << v << " " << h.values[v] << "\n";
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace rootpoly
