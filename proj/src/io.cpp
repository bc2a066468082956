#include "wd/io.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

namespace wd {

namespace {

// Reads the next content line, skipping blanks and '#' comments.
bool next_line(std::istream& in, std::string& line, int& line_no) {
    while (std::getline(in, line)) {
        ++line_no;
        size_t i = line.find_first_not_of(" \t\r");
        if (i == std::string::npos) continue;
        if (line[i] == '#') continue;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        return true;
    }
    return false;
}

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> out;
    std::string t;
    while (is >> t) out.push_back(t);
    return out;
}

int parse_int(const std::string& s, int line_no) {
    try {
        size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError(line_no, "expected an integer, got '" + s + "'");
    }
}

} // namespace

SimpleGraph read_sg(std::istream& in) {
    std::string line;
    int ln = 0;
    if (!next_line(in, line, ln)) throw ParseError(ln, "missing 'n m' header");
    auto tk = tokens(line);
    if (tk.size() != 2) throw ParseError(ln, "header must be 'n m'");
    int n = parse_int(tk[0], ln), m = parse_int(tk[1], ln);
    if (n < 0 || m < 0) throw ParseError(ln, "negative counts");
    SimpleGraph g(n);
    for (int i = 0; i < m; ++i) {
        if (!next_line(in, line, ln))
            throw ParseError(ln, "expected " + std::to_string(m) + " edges, got " + std::to_string(i));
        tk = tokens(line);
        if (tk.size() != 2) throw ParseError(ln, "edge line must be 'u v'");
        int u = parse_int(tk[0], ln), v = parse_int(tk[1], ln);
        if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError(ln, "vertex id out of range");
        if (u >= v) throw ParseError(ln, "edges must satisfy u < v");
        try {
            g.add_edge(u, v);
        } catch (const Error& e) {
            throw ParseError(ln, e.what());
        }
    }
    if (next_line(in, line, ln)) throw ParseError(ln, "trailing content after edge list");
    return g;
}

void write_sg(std::ostream& out, const SimpleGraph& g, const std::string& header) {
    if (!header.empty()) out << header << "\n";
    out << g.vertex_count() << " " << g.edge_count() << "\n";
    for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
}

PlaneGraph read_pg(std::istream& in) {
    std::string line;
    int ln = 0;
    if (!next_line(in, line, ln)) throw ParseError(ln, "missing vertex count");
    auto tk = tokens(line);
    if (tk.size() != 1) throw ParseError(ln, "first line must be 'n'");
    int n = parse_int(tk[0], ln);
    if (n < 0) throw ParseError(ln, "negative vertex count");

    PlaneGraph g;
    g.rotation.assign(static_cast<size_t>(n), {});
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        if (!next_line(in, line, ln)) throw ParseError(ln, "expected a rotation line per vertex");
        tk = tokens(line);
        if (tk.empty() || tk[0].back() != ':')
            throw ParseError(ln, "rotation line must start with 'v:'");
        int v = parse_int(tk[0].substr(0, tk[0].size() - 1), ln);
        if (v < 0 || v >= n) throw ParseError(ln, "vertex id out of range");
        if (seen[static_cast<size_t>(v)]) throw ParseError(ln, "duplicate rotation line");
        seen[static_cast<size_t>(v)] = 1;
        for (size_t j = 1; j < tk.size(); ++j) {
            int w = parse_int(tk[j], ln);
            if (w < 0 || w >= n) throw ParseError(ln, "neighbor id out of range");
            if (w == v) throw ParseError(ln, "self-loop in rotation");
            g.rotation[static_cast<size_t>(v)].push_back(w);
        }
    }
    bool got_outer = false;
    while (next_line(in, line, ln)) {
        tk = tokens(line);
        if (tk.empty() || tk[0] != "outer:")
            throw ParseError(ln, "expected 'outer: v0 v1 ...'");
        std::vector<VertexId> walk;
        for (size_t j = 1; j < tk.size(); ++j) {
            int v = parse_int(tk[j], ln);
            if (v < 0 || v >= n) throw ParseError(ln, "outer walk id out of range");
            walk.push_back(v);
        }
        if (walk.empty()) throw ParseError(ln, "empty outer walk");
        g.outer.push_back(std::move(walk));
        got_outer = true;
    }
    if (n > 0 && !got_outer) throw ParseError(ln, "missing outer walk");

    // build adjacency from rotations; reject asymmetry and duplicates
    g.graph = SimpleGraph(n);
    for (int v = 0; v < n; ++v) {
        for (VertexId w : g.rotation[static_cast<size_t>(v)]) {
            if (v < w) {
                bool sym = std::find(g.rotation[static_cast<size_t>(w)].begin(),
                                     g.rotation[static_cast<size_t>(w)].end(),
                                     v) != g.rotation[static_cast<size_t>(w)].end();
                if (!sym)
                    throw ParseError(ln, "rotation is not symmetric on edge " + std::to_string(v) +
                                             " " + std::to_string(w));
                try {
                    g.graph.add_edge(v, w);
                } catch (const Error& e) {
                    throw ParseError(ln, e.what());
                }
            }
        }
        // duplicate neighbor within one rotation line
        auto r = g.rotation[static_cast<size_t>(v)];
        std::sort(r.begin(), r.end());
        if (std::adjacent_find(r.begin(), r.end()) != r.end())
            throw ParseError(ln, "repeated neighbor in rotation of " + std::to_string(v));
    }
    try {
        validate(g);
    } catch (const Error& e) {
        throw ParseError(ln, e.what());
    }
    return g;
}

void write_pg(std::ostream& out, const PlaneGraph& g, const std::string& header) {
    if (!header.empty()) out << header << "\n";
    out << g.graph.vertex_count() << "\n";
    for (int v = 0; v < g.graph.vertex_count(); ++v) {
        out << v << ":";
        for (VertexId w : g.rotation[static_cast<size_t>(v)]) out << " " << w;
        out << "\n";
    }
    for (const auto& walk : g.outer) {
        out << "outer:";
        for (VertexId v : walk) out << " " << v;
        out << "\n";
    }
}

Witness read_wit(std::istream& in) {
    Witness w;
    std::string line;
    int ln = 0;
    while (next_line(in, line, ln)) {
        auto tk = tokens(line);
        if (tk.empty()) continue;
        if (tk[0] == "del" && tk.size() == 2) {
            w.push_back({parse_int(tk[1], ln), kBlank});
        } else if (tk[0] == "save" && tk.size() == 3) {
            w.push_back({parse_int(tk[1], ln), parse_int(tk[2], ln)});
        } else {
            throw ParseError(ln, "expected 'del u' or 'save u w'");
        }
    }
    return w;
}

void write_wit(std::ostream& out, const Witness& w, const std::string& header) {
    if (!header.empty()) out << header << "\n";
    for (const Move& m : w) {
        if (m.save_target == kBlank)
            out << "del " << m.vertex << "\n";
        else
            out << "save " << m.vertex << " " << m.save_target << "\n";
    }
}

ListAssignment read_lst(std::istream& in, int n) {
    ListAssignment la;
    la.lists.assign(static_cast<size_t>(n), {});
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::string line;
    int ln = 0;
    while (next_line(in, line, ln)) {
        auto tk = tokens(line);
        if (tk.empty() || tk[0].back() != ':')
            throw ParseError(ln, "list line must start with 'v:'");
        int v = parse_int(tk[0].substr(0, tk[0].size() - 1), ln);
        if (v < 0 || v >= n) throw ParseError(ln, "vertex id out of range");
        if (seen[static_cast<size_t>(v)]) throw ParseError(ln, "duplicate list line");
        seen[static_cast<size_t>(v)] = 1;
        for (size_t j = 1; j < tk.size(); ++j)
            la.lists[static_cast<size_t>(v)].push_back(parse_int(tk[j], ln));
        std::sort(la.lists[static_cast<size_t>(v)].begin(), la.lists[static_cast<size_t>(v)].end());
    }
    for (int v = 0; v < n; ++v)
        if (!seen[static_cast<size_t>(v)])
            throw ParseError(ln, "missing list for vertex " + std::to_string(v));
    return la;
}

void write_lst(std::ostream& out, const ListAssignment& la) {
    for (size_t v = 0; v < la.lists.size(); ++v) {
        out << v << ":";
        for (int c : la.lists[v]) out << " " << c;
        out << "\n";
    }
}

void write_trace(std::ostream& out, const Trace& t) {
    for (size_t i = 0; i < t.size(); ++i) {
        out << i << "\t" << t[i].move.vertex << "\t" << t[i].charge_before;
        if (t[i].move.save_target != kBlank) out << "\t" << t[i].move.save_target;
        out << "\n";
    }
}

void write_dot(std::ostream& out, const SimpleGraph& g, const std::vector<VertexId>& s,
               const std::vector<VertexId>& i_set, const Witness* order) {
    std::vector<int> del_step(static_cast<size_t>(g.vertex_count()), -1);
    if (order)
        for (size_t i = 0; i < order->size(); ++i)
            del_step[static_cast<size_t>((*order)[i].vertex)] = static_cast<int>(i);
    out << "graph G {\n  node [shape=circle];\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v << " [";
        bool in_s = std::find(s.begin(), s.end(), v) != s.end();
        bool in_i = std::find(i_set.begin(), i_set.end(), v) != i_set.end();
        if (in_s) out << "shape=box, ";
        if (in_i) out << "style=filled, fillcolor=black, fontcolor=white, ";
        out << "label=\"" << v;
        if (del_step[static_cast<size_t>(v)] >= 0) out << "\\n#" << del_step[static_cast<size_t>(v)];
        out << "\"];\n";
    }
    for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path + " for writing");
    out << content;
}

} // namespace wd
