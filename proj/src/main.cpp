#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "arctic/curve.hpp"
#include "arctic/model_core.hpp"
#include "arctic/shuffling.hpp"
#include "arctic/verify.hpp"

using nlohmann::json;

namespace {

struct RunConfig {
    double alpha = 0.5;
    double R = -1, Q = 0;
    int N = 0, r = 0, s = 0;
    uint64_t seed = 1;
    int samples = 400;
    std::string format = "csv";
    double eps_const = 1.0;
    std::string out;
    int cap_N = 1024;
};

std::ostream& open_out(const RunConfig& cfg, std::ofstream& file) {
    if (cfg.out.empty()) return std::cout;
    file.open(cfg.out);
    if (!file) throw CLI::ValidationError("--out", "cannot open " + cfg.out);
    return file;
}

json meta(const RunConfig& cfg, const std::string& cmd) {
    json m;
    m["version"] = "1.0";
    m["command"] = cmd;
    m["alpha"] = cfg.alpha;
    if (cfg.N > 0) {
        m["N"] = cfg.N;
        m["r"] = cfg.r;
        m["s"] = cfg.s;
    } else {
        m["R"] = cfg.R;
        m["Q"] = cfg.Q;
    }
    return m;
}

// figures use the scaling-limit orientation: x rightward, y downward on screen
std::string svg_header(double w, double h) {
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
       << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
    return os.str();
}

void resolve_geometry(RunConfig& cfg, bool need_lattice) {
    bool lattice = cfg.N > 0;
    bool scaled = cfg.R > 0;
    if (lattice == scaled)
        throw CLI::ValidationError("geometry", "give exactly one of (--N,--r,--s) or (--R,--Q)");
    if (need_lattice && !lattice)
        throw CLI::ValidationError("geometry", "this command needs lattice geometry (--N,--r,--s)");
    if (lattice) {
        arctic::LGeometry g{cfg.N, cfg.r, cfg.s};
        if (!g.valid()) throw CLI::ValidationError("geometry", "invalid (N,r,s)");
        if (cfg.s >= 1) {
            cfg.R = static_cast<double>(cfg.r) / cfg.s;
            cfg.Q = static_cast<double>(cfg.N - cfg.r - cfg.s) / cfg.s;
        }
    }
}

int cmd_curve(RunConfig cfg) {
    resolve_geometry(cfg, false);
    auto branches = arctic::curve::curve_branches(cfg.R, cfg.Q, cfg.alpha, cfg.samples);
    std::ofstream file;
    std::ostream& os = open_out(cfg, file);
    if (cfg.format == "csv") {
        os << "branch,w,x,y\n";
        for (const auto& br : branches)
            for (const auto& pt : br.pts)
                os << br.label << "," << pt.w << "," << pt.x << "," << pt.y << "\n";
    } else if (cfg.format == "json") {
        json j;
        j["metadata"] = meta(cfg, "curve");
        j["metadata"]["regime"] =
            arctic::curve::classify_regime(cfg.R, cfg.Q, cfg.alpha) == arctic::curve::Regime::I
                ? "I"
                : "II";
        for (const auto& br : branches) {
            json b;
            b["label"] = br.label;
            for (const auto& pt : br.pts) b["points"].push_back({pt.w, pt.x, pt.y});
            for (const auto& sp : br.special)
                b["special"].push_back({{"name", sp.name}, {"x", sp.x}, {"y", sp.y}});
            j["branches"].push_back(b);
        }
        os << j.dump(2) << "\n";
    } else {  // svg
        double size = 640, m = 40;
        os << svg_header(size + 2 * m, size + 2 * m);
        double xi_x = cfg.R / (cfg.R + cfg.Q + 1), xi_y = 1 / (cfg.R + cfg.Q + 1);
        auto X = [&](double x) { return m + x * size; };
        auto Y = [&](double y) { return m + y * size; };
        os << "<rect x=\"" << X(0) << "\" y=\"" << Y(0) << "\" width=\"" << size
           << "\" height=\"" << size << "\" fill=\"none\" stroke=\"black\"/>\n";
        os << "<rect x=\"" << X(xi_x) << "\" y=\"" << Y(0) << "\" width=\"" << size * (1 - xi_x)
           << "\" height=\"" << size * xi_y
           << "\" fill=\"none\" stroke=\"gray\" stroke-dasharray=\"4 2\"/>\n";
        const char* colors[] = {"crimson", "steelblue", "black"};
        int ci = 0;
        for (const auto& br : branches) {
            const char* col = colors[ci++ % 3];
            for (const auto& pt : br.pts) {
                if (pt.x < -0.02 || pt.x > 1.02 || pt.y < -0.02 || pt.y > 1.02) continue;
                os << "<circle cx=\"" << X(pt.x) << "\" cy=\"" << Y(pt.y)
                   << "\" r=\"1.2\" fill=\"" << col << "\"/>\n";
            }
        }
        os << "<text x=\"" << X(xi_x) << "\" y=\"" << Y(xi_y) + 14
           << "\" font-size=\"11\">(xi_x, xi_y)</text>\n";
        os << "</svg>\n";
    }
    return 0;
}

int cmd_probs(RunConfig cfg, bool with_sample) {
    resolve_geometry(cfg, true);
    if (cfg.N > cfg.cap_N) throw CLI::ValidationError("--N", "above resource cap");
    arctic::shuffling::ShufflingEngine eng(
        arctic::shuffling::build_weights(cfg.N, cfg.r, cfg.s, cfg.alpha));
    auto pp = eng.edge_probabilities();
    auto field = arctic::shuffling::order_parameters(pp, cfg.N, cfg.eps_const);
    arctic::shuffling::TilingSample ts;
    if (with_sample) ts = eng.sample_tiling(cfg.seed);
    std::ofstream file;
    std::ostream& os = open_out(cfg, file);
    int N = cfg.N;
    if (cfg.format == "csv") {
        os << (with_sample ? "j,k,p,q,r,s,x,mask,class\n" : "j,k,p,q,r,s,x,mask\n");
        for (int j = 1; j <= N; ++j)
            for (int k = 1; k <= N; ++k) {
                int i = (j - 1) * N + (k - 1);
                os << j << "," << k << "," << pp.p[i] << "," << pp.q[i] << "," << pp.r[i] << ","
                   << pp.s[i] << "," << field.x[i] << "," << int(field.mask[i]);
                if (with_sample) os << "," << int(ts.cls[i]);
                os << "\n";
            }
    } else if (cfg.format == "json") {
        json j;
        j["metadata"] = meta(cfg, with_sample ? "sample" : "probs");
        j["metadata"]["eps"] = field.eps;
        if (with_sample) {
            j["metadata"]["seed"] = ts.seed;
            j["metadata"]["generator"] = ts.generator;
            j["sample_class"] = ts.cls;
        }
        j["p"] = pp.p;
        j["q"] = pp.q;
        j["r"] = pp.r;
        j["s"] = pp.s;
        j["x"] = field.x;
        j["mask"] = field.mask;
        os << j.dump() << "\n";
    } else {  // svg heat field of x with the analytic curve overlaid
        double cell = std::max(1.0, 640.0 / N), m = 20;
        double size = cell * N;
        os << svg_header(size + 2 * m, size + 2 * m);
        for (int j = 1; j <= N; ++j)
            for (int k = 1; k <= N; ++k) {
                int i = (j - 1) * N + (k - 1);
                int v = static_cast<int>(255 * field.x[i]);
                os << "<rect x=\"" << m + (j - 1) * cell << "\" y=\"" << m + (k - 1) * cell
                   << "\" width=\"" << cell << "\" height=\"" << cell << "\" fill=\"rgb(" << v
                   << "," << 255 - v << ",128)\"/>\n";
            }
        if (cfg.s >= 1) {
            auto branches = arctic::curve::curve_branches(cfg.R, cfg.Q, cfg.alpha, 4000);
            for (const auto& br : branches)
                for (const auto& pt : br.pts) {
                    if (pt.x < 0 || pt.x > 1 || pt.y < 0 || pt.y > 1) continue;
                    os << "<circle cx=\"" << m + pt.x * size << "\" cy=\"" << m + pt.y * size
                       << "\" r=\"1\" fill=\"black\"/>\n";
                }
        }
        os << "</svg>\n";
    }
    return 0;
}

int cmd_verify(const std::string& suite, RunConfig cfg) {
    int figure_N = cfg.N > 0 ? cfg.N : 300;
    std::vector<arctic::verify::CheckResult> results =
        suite == "all" ? arctic::verify::run_all(figure_N, cfg.samples)
                       : arctic::verify::run_suite(suite, figure_N, cfg.samples);
    bool all_pass = true;
    json report = json::array();
    for (const auto& r : results) {
        all_pass = all_pass && r.pass;
        std::cout << "criterion " << r.id << " [" << (r.pass ? "PASS" : "FAIL") << "] " << r.name
                  << ": " << r.detail << " (" << r.seconds << " s)\n";
        report.push_back({{"id", r.id},
                          {"name", r.name},
                          {"pass", r.pass},
                          {"detail", r.detail},
                          {"seconds", r.seconds}});
    }
    if (!cfg.out.empty()) {
        std::ofstream f(cfg.out);
        f << report.dump(2) << "\n";
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"arctic curve toolkit for the free-fermion six-vertex model on L-shaped domains"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--alpha", cfg.alpha, "free-fermion weight parameter in (0,1)");
        sub->add_option("--R", cfg.R, "scaled geometry R = r/s");
        sub->add_option("--Q", cfg.Q, "scaled geometry Q = (N-r-s)/s");
        sub->add_option("--N", cfg.N, "lattice size");
        sub->add_option("--r", cfg.r, "kept columns in the top band");
        sub->add_option("--s", cfg.s, "cut depth in rows");
        sub->add_option("--seed", cfg.seed, "RNG seed");
        sub->add_option("--samples", cfg.samples, "sample count / curve resolution");
        sub->add_option("--format", cfg.format, "csv, json or svg")
            ->check(CLI::IsMember({"csv", "json", "svg"}));
        sub->add_option("--eps-const", cfg.eps_const, "constant multiplying N^(-2/3)");
        sub->add_option("--out", cfg.out, "output path (default stdout)");
    };

    auto* c_curve = app.add_subcommand("curve", "sample the arctic curve branches");
    add_common(c_curve);
    auto* c_probs = app.add_subcommand("probs", "exact edge-inclusion probabilities");
    add_common(c_probs);
    auto* c_sample = app.add_subcommand("sample", "exact tiling sample with probability grids");
    add_common(c_sample);
    auto* c_verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite = "all";
    c_verify->add_option("suite", suite,
                         "oracle, curve-identities, appendixC, shuffling, figures or all");
    add_common(c_verify);

    try {
        app.parse(argc, argv);
        if (c_curve->parsed()) return cmd_curve(cfg);
        if (c_probs->parsed()) return cmd_probs(cfg, false);
        if (c_sample->parsed()) return cmd_probs(cfg, true);
        if (c_verify->parsed()) return cmd_verify(suite, cfg);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
