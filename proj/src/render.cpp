#include "usv/render.hpp"

#include <sstream>
#include <stdexcept>

namespace usv {

namespace {

// Exact fixed-point pixel formatting (two decimals) keeps the output
// byte-identical across runs and platforms.
std::string px(const Rat& units, int scale) {
    std::int64_t num = units.num * scale * 100;
    std::int64_t q = num / units.den;
    if (num % units.den != 0 && num < 0) --q; // floor
    std::int64_t whole = q / 100, frac = q % 100;
    if (frac < 0) { frac += 100; --whole; }
    std::ostringstream out;
    out << whole << "." << (frac < 10 ? "0" : "") << frac;
    return out.str();
}

} // namespace

std::string render_svg(const Layout& l, const RenderOptions& opt) {
    auto rep = validate_layout(l);
    if (!rep.ok()) throw std::invalid_argument("render_svg: invalid layout");
    Rat minx(0), miny(0), maxx(1), maxy(1);
    bool first = true;
    for (const auto& s : l.squares) {
        if (first) {
            minx = s.x; miny = s.y; maxx = s.x + Rat(1); maxy = s.y + Rat(1);
            first = false;
        }
        minx = rat_min(minx, s.x);
        miny = rat_min(miny, s.y);
        maxx = rat_max(maxx, s.x + Rat(1));
        maxy = rat_max(maxy, s.y + Rat(1));
    }
    const Rat pad(1);
    minx = minx - pad; miny = miny - pad; maxx = maxx + pad; maxy = maxy + pad;
    auto X = [&](const Rat& x) { return px(x - minx, opt.scale); };
    auto Y = [&](const Rat& y) { return px(maxy - y, opt.scale); }; // flip y

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << px(maxx - minx, opt.scale)
        << "\" height=\"" << px(maxy - miny, opt.scale) << "\">\n";
    svg << "<rect x=\"0\" y=\"0\" width=\"" << px(maxx - minx, opt.scale) << "\" height=\""
        << px(maxy - miny, opt.scale) << "\" fill=\"white\"/>\n";

    std::vector<VisibilityFact> facts;
    if (opt.show_visibilities || opt.show_crossings) facts = visibility_relation(l);

    if (opt.show_visibilities) {
        for (const auto& f : facts) {
            const Square *a = l.find(f.from), *b = l.find(f.to);
            Rat x1, y1, x2, y2;
            if (f.axis == Axis::Horizontal) {
                Rat lo = rat_max(a->y, b->y), hi = rat_min(a->y, b->y) + Rat(1);
                Rat mid = (lo + hi) * Rat(1, 2);
                x1 = a->x + Rat(1); y1 = mid; x2 = b->x; y2 = mid;
            } else {
                Rat lo = rat_max(a->x, b->x), hi = rat_min(a->x, b->x) + Rat(1);
                Rat mid = (lo + hi) * Rat(1, 2);
                x1 = mid; y1 = a->y; x2 = mid; y2 = b->y + Rat(1);
            }
            svg << "<line x1=\"" << X(x1) << "\" y1=\"" << Y(y1) << "\" x2=\"" << X(x2)
                << "\" y2=\"" << Y(y2)
                << "\" stroke=\"gray\" stroke-dasharray=\"4 3\" stroke-width=\"1\"/>\n";
        }
    }
    for (const auto& s : l.squares) {
        svg << "<rect x=\"" << X(s.x) << "\" y=\"" << Y(s.y + Rat(1)) << "\" width=\""
            << px(Rat(1), opt.scale) << "\" height=\"" << px(Rat(1), opt.scale)
            << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
        svg << "<text x=\"" << X(s.x + Rat(1, 2)) << "\" y=\"" << Y(s.y + Rat(1, 2))
            << "\" font-size=\"" << opt.scale / 3
            << "\" text-anchor=\"middle\" dominant-baseline=\"middle\">" << s.id
            << "</text>\n";
    }
    if (opt.show_crossings && l.kind == LayoutKind::Grid) {
        for (const auto& c : layout_crossings(l)) {
            const Square* h = l.find(c.horizontal.from);
            const Square* v = l.find(c.vertical.from);
            Rat cx = v->x + Rat(1, 2), cy = h->y + Rat(1, 2);
            svg << "<circle cx=\"" << X(cx) << "\" cy=\"" << Y(cy) << "\" r=\""
                << opt.scale / 8 << "\" fill=\"red\"/>\n";
        }
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace usv
