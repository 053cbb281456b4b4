#include "hexflip/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hexflip {

using nlohmann::json;

namespace {

json points_json(const std::array<cplx, 6>& pts) {
    json arr = json::array();
    for (const auto& p : pts) arr.push_back({p.real(), p.imag()});
    return arr;
}

std::array<cplx, 6> points_from(const json& j) {
    if (!j.is_array() || j.size() != 6)
        throw domain_error("json: expected six points");
    std::array<cplx, 6> pts;
    for (int i = 0; i < 6; ++i) {
        if (!j[i].is_array() || j[i].size() != 2)
            throw domain_error("json: point must be [re, im]");
        pts[i] = cplx(j[i][0].get<double>(), j[i][1].get<double>());
    }
    return pts;
}

}  // namespace

std::string sextuple_to_json(const Sextuple& z) {
    std::array<cplx, 6> pts;
    for (int i = 0; i < 6; ++i) pts[i] = z.x[i].z;
    // nlohmann serializes doubles shortest-round-trip, which is lossless
    json j{{"model", "poincare_disc"}, {"points", points_json(pts)}};
    return j.dump();
}

Sextuple sextuple_from_json(const std::string& text) {
    json j = json::parse(text);
    if (j.value("model", "") != "poincare_disc")
        throw domain_error("json: model must be \"poincare_disc\"");
    Sextuple z;
    auto pts = points_from(j.at("points"));
    for (int i = 0; i < 6; ++i) {
        z.x[i] = Point(pts[i]);
        require_in_disc(z.x[i], "sextuple_from_json");
    }
    return z;
}

std::string euc_to_json(const EucConfig& v) {
    json j{{"model", "euclidean"}, {"points", points_json(v.p)}};
    return j.dump();
}

EucConfig euc_from_json(const std::string& text) {
    json j = json::parse(text);
    if (j.value("model", "") != "euclidean")
        throw domain_error("json: model must be \"euclidean\"");
    EucConfig v;
    v.p = points_from(j.at("points"));
    return v;
}

std::string verdict_to_json(const Verdict& v) {
    json j{{"verdict", verdict_name(v.tag)}, {"eps", v.eps}};
    if (!v.reason.empty()) j["reason"] = v.reason;
    if (v.tag == Verdict::Tag::Pinched) {
        auto mat = [](const Moebius& m) {
            return json{{m.a.real(), m.a.imag()}, {m.b.real(), m.b.imag()}};
        };
        j["generators"] = {mat(v.gen1), mat(v.gen2)};
    }
    return j.dump();
}

std::string trace_to_csv(const ReductionTrace& trace) {
    std::ostringstream os;
    os.precision(17);
    os << "step,op,word_length,A,B,F,class\n";
    for (std::size_t k = 0; k < trace.size(); ++k) {
        const auto& s = trace[k];
        os << k << ',' << s.op << ',' << s.word.size() << ',' << s.A << ',' << s.B << ','
           << s.F << ',' << config_tag_name(s.cls.tag) << '\n';
    }
    return os.str();
}

std::string disc_svg(const Sextuple& z, bool with_aux) {
    constexpr double S = 250.0, C = 260.0;
    auto px = [&](cplx w) { return C + S * w.real(); };
    auto py = [&](cplx w) { return C - S * w.imag(); };
    std::ostringstream os;
    os << "<svg xmlns='http://www.w3.org/2000/svg' width='520' height='520' "
          "viewBox='0 0 520 520'>\n";
    os << "<circle cx='" << C << "' cy='" << C << "' r='" << S
       << "' fill='white' stroke='black'/>\n";

    auto draw_geodesic = [&](const Geodesic& g, const char* color) {
        if (g.is_diameter()) {
            os << "<line x1='" << px(g.u) << "' y1='" << py(g.u) << "' x2='" << px(g.v)
               << "' y2='" << py(g.v) << "' stroke='" << color << "' fill='none'/>\n";
            return;
        }
        cplx s = g.u + g.v;
        cplx c = 2.0 * s / std::norm(s);
        double r = std::sqrt(std::max(std::norm(c) - 1.0, 0.0));
        // arc from u to v on the circle centered c, the side inside the disc
        double cross = std::imag(std::conj(g.u - c) * (g.v - c));
        int sweep = cross > 0 ? 0 : 1;  // svg y-axis is flipped
        os << "<path d='M " << px(g.u) << ' ' << py(g.u) << " A " << S * r << ' ' << S * r
           << " 0 0 " << sweep << ' ' << px(g.v) << ' ' << py(g.v) << "' stroke='" << color
           << "' fill='none'/>\n";
    };

    const char* cols[3] = {"#c22", "#262", "#22c"};
    for (int k = 0; k < 3; ++k) {
        int i = 2 * k + 1;
        if (pair_length(z, i) > 1e-12)
            draw_geodesic(geodesic_through(z.at(i), z.at(i + 1)), cols[k]);
    }
    if (with_aux) {
        try {
            AuxPoints aux = aux_points(z);
            for (int i = 1; i <= 6; ++i)
                os << "<circle cx='" << px(aux.yat(i).z) << "' cy='" << py(aux.yat(i).z)
                   << "' r='2.5' fill='none' stroke='#888'/>\n";
        } catch (const std::exception&) {
        }
    }
    for (int i = 1; i <= 6; ++i) {
        os << "<circle cx='" << px(z.at(i).z) << "' cy='" << py(z.at(i).z)
           << "' r='3.5' fill='black'/>\n";
        os << "<text x='" << px(z.at(i).z) + 5 << "' y='" << py(z.at(i).z) - 5
           << "' font-size='12'>x" << i << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t x = master ^ (index * 0x9E3779B97F4A7C15ull);
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw domain_error("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) throw domain_error("cannot write file: " + tmp);
        out << content;
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace hexflip
