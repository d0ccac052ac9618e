#include "usv/io.hpp"

#include <fstream>
#include <sstream>

namespace usv {

namespace {

struct LineReader {
    std::istream& in;
    std::string name;
    int lineno = 0;

    // Next content line, with comments and blanks skipped.
    bool next(std::string& out) {
        std::string raw;
        while (std::getline(in, raw)) {
            ++lineno;
            auto hash = raw.find('#');
            if (hash != std::string::npos) raw = raw.substr(0, hash);
            std::size_t a = raw.find_first_not_of(" \t\r");
            if (a == std::string::npos) continue;
            std::size_t b = raw.find_last_not_of(" \t\r");
            out = raw.substr(a, b - a + 1);
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(name + ":" + std::to_string(lineno) + ": " + msg);
    }
};

Rat parse_rat(const std::string& tok, LineReader& r) {
    try {
        auto slash = tok.find('/');
        if (slash == std::string::npos) return Rat(std::stoll(tok));
        return Rat(std::stoll(tok.substr(0, slash)), std::stoll(tok.substr(slash + 1)));
    } catch (const std::exception&) {
        r.fail("bad rational '" + tok + "'");
    }
}

} // namespace

Layout parse_layout(std::istream& in, const std::string& name) {
    LineReader r{in, name};
    std::string line;
    if (!r.next(line)) r.fail("missing header");
    std::istringstream hs(line);
    std::string kw, kind;
    std::size_t n = 0;
    if (!(hs >> kw >> kind >> n) || kw != "layout" || (kind != "grid" && kind != "free"))
        r.fail("expected 'layout grid|free <n>'");
    Layout l;
    l.kind = kind == "grid" ? LayoutKind::Grid : LayoutKind::Free;
    for (std::size_t i = 0; i < n; ++i) {
        if (!r.next(line)) r.fail("expected " + std::to_string(n) + " squares");
        std::istringstream ls(line);
        std::string tag, xs, ys;
        int id;
        if (!(ls >> tag >> id >> xs >> ys) || tag != "s")
            r.fail("expected 's <id> <x> <y>'");
        l.squares.push_back({id, parse_rat(xs, r), parse_rat(ys, r)});
    }
    if (r.next(line)) r.fail("trailing content");
    return l;
}

std::string emit_layout(const Layout& l) {
    Layout s = l;
    std::sort(s.squares.begin(), s.squares.end(),
              [](const Square& a, const Square& b) { return a.id < b.id; });
    std::ostringstream out;
    out << "layout " << (s.kind == LayoutKind::Grid ? "grid" : "free") << " "
        << s.squares.size() << "\n";
    for (const auto& sq : s.squares)
        out << "s " << sq.id << " " << sq.x.str() << " " << sq.y.str() << "\n";
    return out.str();
}

Graph parse_graph(std::istream& in, const std::string& name) {
    LineReader r{in, name};
    std::string line;
    if (!r.next(line)) r.fail("missing header");
    std::istringstream hs(line);
    std::string p, fmt;
    std::size_t n = 0, m = 0;
    if (!(hs >> p >> fmt >> n >> m) || p != "p" || fmt != "usv")
        r.fail("expected 'p usv <n> <m>'");
    Graph g;
    for (std::size_t i = 0; i < n; ++i) g.add_vertex((int)i);
    std::size_t edges = 0;
    while (r.next(line)) {
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "e") {
            std::size_t u, v;
            if (!(ls >> u >> v) || u < 1 || v < 1 || u > n || v > n)
                r.fail("bad edge line");
            g.add_edge((int)u - 1, (int)v - 1);
            ++edges;
        } else if (tag == "l") {
            std::size_t u;
            std::string lab;
            if (!(ls >> u >> lab) || u < 1 || u > n) r.fail("bad label line");
            g.labels[(int)u - 1] = lab;
        } else {
            r.fail("expected 'e' or 'l' line");
        }
    }
    if (edges != m) r.fail("edge count differs from header");
    return g;
}

std::string emit_graph(const Graph& g) {
    std::map<int, int> idx;
    int k = 0;
    for (int v : g.verts) idx[v] = ++k;
    std::ostringstream out;
    out << "p usv " << g.n() << " " << g.m() << "\n";
    for (const auto& e : g.edges)
        out << "e " << idx[e.first] << " " << idx[e.second] << "\n";
    for (const auto& [v, lab] : g.labels)
        if (idx.count(v)) out << "l " << idx[v] << " " << lab << "\n";
    return out.str();
}

Restriction parse_restriction(std::istream& in, const std::string& name) {
    LineReader r{in, name};
    std::string line;
    if (!r.next(line)) r.fail("missing header");
    Restriction res;
    if (line == "lrdu") res.mode = Restriction::Mode::Lrdu;
    else if (line == "hv") res.mode = Restriction::Mode::Hv;
    else r.fail("expected 'lrdu' or 'hv'");
    while (r.next(line)) {
        std::istringstream ls(line);
        int u, v;
        std::string lab;
        if (!(ls >> u >> v >> lab) || u < 1 || v < 1 || lab.size() != 1)
            r.fail("expected '<u> <v> <label>'");
        if (res.mode == Restriction::Mode::Lrdu) {
            LrduLabel x;
            switch (lab[0]) {
                case 'L': x = LrduLabel::L; break;
                case 'R': x = LrduLabel::R; break;
                case 'D': x = LrduLabel::D; break;
                case 'U': x = LrduLabel::U; break;
                default: r.fail("bad LRDU label");
            }
            res.lrdu[{u - 1, v - 1}] = x;
        } else {
            HvLabel x;
            if (lab[0] == 'H') x = HvLabel::H;
            else if (lab[0] == 'V') x = HvLabel::V;
            else r.fail("bad HV label");
            int a = u - 1, b = v - 1;
            if (a > b) std::swap(a, b);
            res.hv[{a, b}] = x;
        }
    }
    return res;
}

std::string emit_restriction(const Restriction& r) {
    std::ostringstream out;
    if (r.mode == Restriction::Mode::Lrdu) {
        out << "lrdu\n";
        for (const auto& [e, lab] : r.lrdu)
            out << e.first + 1 << " " << e.second + 1 << " " << lrdu_char(lab) << "\n";
    } else {
        out << "hv\n";
        for (const auto& [e, lab] : r.hv)
            out << e.first + 1 << " " << e.second + 1 << " " << hv_char(lab) << "\n";
    }
    return out.str();
}

RectilinearDrawing parse_drawing(std::istream& in, const std::string& name) {
    LineReader r{in, name};
    std::string line;
    if (!r.next(line)) r.fail("missing header");
    std::istringstream hs(line);
    std::string kw;
    std::size_t n = 0, m = 0;
    if (!(hs >> kw >> n >> m) || kw != "drawing") r.fail("expected 'drawing <n> <m>'");
    RectilinearDrawing d;
    for (std::size_t i = 0; i < n; ++i) {
        if (!r.next(line)) r.fail("expected vertex line");
        std::istringstream ls(line);
        std::string tag;
        int id, x, y;
        if (!(ls >> tag >> id >> x >> y) || tag != "v") r.fail("expected 'v <id> <x> <y>'");
        d.graph.add_vertex(id);
        d.pos[id] = {x, y};
    }
    for (std::size_t i = 0; i < m; ++i) {
        if (!r.next(line)) r.fail("expected edge line");
        std::istringstream ls(line);
        std::string tag;
        int u, v;
        if (!(ls >> tag >> u >> v) || tag != "e") r.fail("expected 'e <u> <v>'");
        if (!d.pos.count(u) || !d.pos.count(v)) r.fail("edge references unknown vertex");
        d.graph.add_edge(u, v);
    }
    if (r.next(line)) r.fail("trailing content");
    return d;
}

std::string emit_drawing(const RectilinearDrawing& d) {
    std::ostringstream out;
    out << "drawing " << d.graph.n() << " " << d.graph.m() << "\n";
    for (int v : d.graph.verts) {
        auto [x, y] = d.pos.at(v);
        out << "v " << v << " " << x << " " << y << "\n";
    }
    for (const auto& e : d.graph.edges) out << "e " << e.first << " " << e.second << "\n";
    return out.str();
}

ThreePartitionInstance parse_3partition(std::istream& in, const std::string& name) {
    LineReader r{in, name};
    std::string line;
    if (!r.next(line)) r.fail("missing B line");
    ThreePartitionInstance inst;
    try {
        inst.B = std::stoll(line);
    } catch (const std::exception&) {
        r.fail("bad B value");
    }
    if (!r.next(line)) r.fail("missing item line");
    std::istringstream ls(line);
    std::int64_t a;
    while (ls >> a) inst.items.push_back(a);
    if (r.next(line)) r.fail("trailing content");
    return inst;
}

std::string emit_3partition(const ThreePartitionInstance& inst) {
    std::ostringstream out;
    out << inst.B << "\n";
    for (std::size_t i = 0; i < inst.items.size(); ++i)
        out << (i ? " " : "") << inst.items[i];
    out << "\n";
    return out.str();
}

std::pair<std::vector<Clause>, int> parse_cnf(std::istream& in, const std::string& name) {
    LineReader r{in, name};
    std::string line;
    int nvars = 0;
    std::size_t nclauses = 0;
    bool header = false;
    std::vector<Clause> clauses;
    std::vector<Lit> pending;
    while (r.next(line)) {
        if (line[0] == 'c') continue;
        std::istringstream ls(line);
        if (line[0] == 'p') {
            std::string p, cnf;
            if (!(ls >> p >> cnf >> nvars >> nclauses) || cnf != "cnf")
                r.fail("expected 'p cnf <n> <m>'");
            header = true;
            continue;
        }
        if (!header) r.fail("clause before 'p cnf' header");
        Lit l;
        while (ls >> l) {
            if (l == 0) {
                if (pending.size() != 3) r.fail("clauses must have exactly 3 literals");
                clauses.push_back({{pending[0], pending[1], pending[2]}});
                pending.clear();
            } else {
                pending.push_back(l);
            }
        }
    }
    if (!header) r.fail("missing 'p cnf' header");
    if (!pending.empty()) r.fail("unterminated clause");
    if (clauses.size() != nclauses) r.fail("clause count differs from header");
    return {clauses, nvars};
}

std::string emit_cnf(const std::vector<Clause>& clauses, int nvars) {
    std::ostringstream out;
    out << "p cnf " << nvars << " " << clauses.size() << "\n";
    for (const auto& c : clauses)
        out << c.lits[0] << " " << c.lits[1] << " " << c.lits[2] << " 0\n";
    return out.str();
}

Layout load_layout_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open");
    return parse_layout(in, path);
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open");
    return parse_graph(in, path);
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError(path + ": cannot open for writing");
    out << content;
}

} // namespace usv
