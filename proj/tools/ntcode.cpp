#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ntc/analyze.hpp"
#include "ntc/codes.hpp"
#include "ntc/fixtures.hpp"
#include "ntc/hamming.hpp"
#include "ntc/io.hpp"

namespace {

using namespace ntc;

unsigned long long env_bound(const char* name, unsigned long long fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    return std::strtoull(v, nullptr, 10);
}

struct Bounds {
    unsigned long long elem = env_bound("NTCODE_ELEM_BOUND", 1000000);
    unsigned long long orbit = env_bound("NTCODE_ORBIT_BOUND", 10000000);
    unsigned long long visit = env_bound("NTCODE_VISIT_BOUND", 100000000);
};

void add_bound_flags(CLI::App* app, Bounds& b) {
    app->add_option("--elem-bound", b.elem, "element enumeration bound");
    app->add_option("--orbit-bound", b.orbit, "orbit size bound");
    app->add_option("--visit-bound", b.visit, "partition visit bound");
}

std::vector<int> parse_coords(const std::string& text) {
    std::vector<int> out;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoi(item));
    }
    if (out.empty()) throw error(errc::invalid_argument, "empty coordinate list");
    return out;
}

void emit_code(const Code& c, const std::string& out_path) {
    if (out_path.empty()) {
        write_code(std::cout, c);
        std::cerr << "size " << c.size() << " m " << c.length() << " q " << c.alphabet()
                  << "\n";
    } else {
        write_code_file(out_path, c);
        std::cout << "size " << c.size() << " m " << c.length() << " q " << c.alphabet()
                  << "\n";
    }
}

void emit_report(const Report& r, const std::string& format, const std::string& out_path) {
    std::string text;
    if (format == "json") {
        text = r.to_json().dump(2) + "\n";
    } else {
        std::ostringstream os;
        os << "property: " << r.property << "\n";
        os << "verdict: " << (r.verdict ? "true" : "false") << "\n";
        for (auto it = r.witnesses.begin(); it != r.witnesses.end(); ++it)
            os << it.key() << ": " << it.value().dump() << "\n";
        if (!r.counterexample.is_null()) os << "counterexample: " << r.counterexample.dump() << "\n";
        text = os.str();
    }
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw error(errc::invalid_argument, "cannot write " + out_path);
        out << text;
    }
}

std::vector<std::vector<int>> read_cayley_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error(errc::parse_error, "cannot open " + path);
    int q;
    if (!(in >> q) || q < 2) throw error(errc::parse_error, "cayley table: bad order");
    std::vector<std::vector<int>> table(q, std::vector<int>(q));
    for (auto& row : table)
        for (int& v : row)
            if (!(in >> v)) throw error(errc::parse_error, "cayley table: truncated");
    return table;
}

const char* shape_name(Shape s) {
    switch (s) {
        case Shape::ProdRep: return "ProdRep";
        case Shape::ProdRepPerm: return "ProdRepPerm";
        case Shape::ProdRepTwisted: return "ProdRepTwisted";
    }
    return "?";
}

Report decomposition_report(const Decomposition& d) {
    Report r;
    r.property = "decompose";
    r.verdict = true;
    r.witnesses["shape"] = shape_name(d.shape);
    r.witnesses["form"] = d.form == Form::Form1 ? 1 : 2;
    r.witnesses["supports"] = d.supports;
    r.witnesses["delta_size"] = d.delta_orbit.size();
    r.witnesses["translate_count"] = d.translates.size();
    r.witnesses["kernel_order"] = d.k.order();
    r.witnesses["socle_order"] = d.sock.order();
    if (d.t_group) r.witnesses["t_order"] = d.t_group->order();
    if (d.p > 0) r.witnesses["repetition"] = d.p;
    nlohmann::json translates = nlohmann::json::array();
    for (const auto& t : d.translates) translates.push_back(wreath_element_json(t));
    r.witnesses["translates"] = translates;
    r.stats["conjugators_applied"] = d.conjugators_applied.size();
    return r;
}

int run(int argc, char** argv) {
    CLI::App app{"neighbour-transitive code toolkit"};
    app.require_subcommand(1);

    Bounds bounds;
    std::string format = "json";
    std::string out_path;
    int threads = static_cast<int>(std::thread::hardware_concurrency());

    // construct ---------------------------------------------------------
    auto* construct = app.add_subcommand("construct", "build a code and write a code file");
    construct->require_subcommand(1);
    int m = 0, q = 0, p = 0, ell = 2;
    std::string code_path, group_path, paired_path, table_path, coords, ordering;

    auto* c_rep = construct->add_subcommand("rep", "repetition code Rep(m,q)");
    c_rep->add_option("--m", m)->required();
    c_rep->add_option("--q", q)->required();

    auto* c_all = construct->add_subcommand("all", "frequency permutation array All(p,q)");
    c_all->add_option("--p", p)->required();
    c_all->add_option("--q", q)->required();

    auto* c_inj = construct->add_subcommand("injective", "injective words Inj(m,q)");
    c_inj->add_option("--m", m)->required();
    c_inj->add_option("--q", q)->required();

    auto* c_wt = construct->add_subcommand("weight", "binary middle-weight code W(m)");
    c_wt->add_option("--m", m)->required();

    auto* c_perm = construct->add_subcommand("perm", "permutation code C(T)");
    c_perm->add_option("--group", group_path, "group file")->required();

    auto* c_tw = construct->add_subcommand("twisted", "twisted permutation code C(T,T^tau)");
    c_tw->add_option("--paired", paired_path, "paired action file")->required();

    auto* c_cay = construct->add_subcommand("cayley", "Cayley code from a multiplication table");
    c_cay->add_option("--table", table_path, "table file: q then q*q entries")->required();
    c_cay->add_option("--ordering", ordering, "comma-separated element ordering");

    auto* c_prod = construct->add_subcommand("prod", "product code Prod_l(C)");
    c_prod->add_option("--code", code_path)->required();
    c_prod->add_option("--ell", ell)->required();

    auto* c_repl = construct->add_subcommand("repl", "repeated code Rep_l(C)");
    c_repl->add_option("--code", code_path)->required();
    c_repl->add_option("--ell", ell)->required();

    auto* c_proj = construct->add_subcommand("project", "projection onto coordinates");
    c_proj->add_option("--code", code_path)->required();
    c_proj->add_option("--coords", coords, "comma-separated coordinates")->required();

    for (auto* sc : construct->get_subcommands({})) {
        sc->add_option("-o,--out", out_path, "output code file (default stdout)");
        add_bound_flags(sc, bounds);
    }

    // analyze -----------------------------------------------------------
    auto* analyze = app.add_subcommand("analyze", "certify a property; write a report");
    analyze->require_subcommand(1);
    int s_param = 1;
    std::string blocks_arg;
    auto* a_mindist = analyze->add_subcommand("mindist", "minimum distance");
    auto* a_covrad = analyze->add_subcommand("covrad", "covering radius");
    auto* a_part = analyze->add_subcommand("partition", "distance partition cell sizes");
    auto* a_nt = analyze->add_subcommand("nt", "neighbour transitivity");
    auto* a_ct = analyze->add_subcommand("ct", "complete transitivity");
    auto* a_sreg = analyze->add_subcommand("sregular", "s-regularity");
    a_sreg->add_option("--s", s_param)->required();
    auto* a_rep = analyze->add_subcommand("repwitness", "equivalence witness onto Rep(m,q)");
    auto* a_dec = analyze->add_subcommand("decompose", "kernel/socle decomposition");
    auto* a_proj = analyze->add_subcommand("projstruct", "projection structure over blocks");
    a_proj->add_option("--blocks", blocks_arg, "semicolon-separated comma lists")->required();
    analyze->add_subcommand("prop27", "stabilizer transitivity triple");

    for (auto* sc : analyze->get_subcommands({})) {
        sc->add_option("--code", code_path, "code file")->required();
        sc->add_option("--group", group_path, "wreath group file");
        sc->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
        sc->add_option("-o,--out", out_path, "report file (default stdout)");
        sc->add_option("--threads", threads, "worker threads");
        add_bound_flags(sc, bounds);
    }

    // fixture -----------------------------------------------------------
    auto* fixture = app.add_subcommand("fixture", "emit a validated paired-action file");
    std::string fixture_name;
    fixture->add_option("name", fixture_name,
                        "one of a6_pair, s6_pair, psl2_11_pair, a7_15_pair, m12_pair")
        ->required();
    fixture->add_option("-o,--out", out_path, "output file (default <name>.pair)");
    add_bound_flags(fixture, bounds);

    CLI11_PARSE(app, argc, argv);

    if (construct->parsed()) {
        Code result = [&] {
            if (c_rep->parsed()) return rep_code(m, q);
            if (c_all->parsed()) return all_code(p, q, bounds.elem);
            if (c_inj->parsed()) return injective_code(m, q);
            if (c_wt->parsed()) return weight_code(m);
            if (c_perm->parsed()) return perm_code(read_group_file(group_path), bounds.elem);
            if (c_tw->parsed()) return twisted_code(read_paired_action_file(paired_path), bounds.elem);
            if (c_cay->parsed()) {
                auto table = read_cayley_table(table_path);
                std::vector<int> ord;
                if (ordering.empty())
                    for (int i = 0; i < static_cast<int>(table.size()); ++i) ord.push_back(i);
                else
                    ord = parse_coords(ordering);
                return cayley_code(table, ord);
            }
            if (c_prod->parsed()) return prod_code(read_code_file(code_path), ell, bounds.elem);
            if (c_repl->parsed()) return rep_l_code(read_code_file(code_path), ell);
            return project(read_code_file(code_path), parse_coords(coords));
        }();
        emit_code(result, out_path);
        return 0;
    }

    if (analyze->parsed()) {
        Code c = read_code_file(code_path);
        auto need_group = [&]() -> WreathGroup {
            if (group_path.empty())
                throw error(errc::invalid_argument, "this property needs --group");
            return read_wreath_group_file(group_path);
        };
        Report r;
        if (a_mindist->parsed()) {
            r.property = "mindist";
            r.verdict = true;
            r.witnesses["value"] = min_distance(c, threads);
        } else if (a_covrad->parsed()) {
            r.property = "covrad";
            r.verdict = true;
            r.witnesses["value"] = covering_radius(c, bounds.visit);
        } else if (a_part->parsed()) {
            r.property = "partition";
            r.verdict = true;
            auto dp = distance_partition(c, bounds.visit);
            std::vector<std::size_t> sizes;
            for (const auto& cell : dp.cells) sizes.push_back(cell.size());
            r.witnesses["rho"] = dp.rho();
            r.witnesses["cell_sizes"] = sizes;
        } else if (a_nt->parsed()) {
            r = check_neighbour_transitive(c, need_group(), bounds.orbit);
        } else if (a_ct->parsed()) {
            r = check_completely_transitive(c, need_group(), bounds.visit, bounds.orbit);
        } else if (a_sreg->parsed()) {
            r = check_s_regular(c, s_param, bounds.visit);
        } else if (a_rep->parsed()) {
            r.property = "repwitness";
            auto w = rep_equivalence_witness(c);
            r.verdict = w.has_value();
            if (w) r.witnesses["witness"] = wreath_element_json(*w);
        } else if (a_dec->parsed()) {
            r = decomposition_report(decompose(c, need_group(), bounds.orbit, bounds.elem));
        } else if (a_proj->parsed()) {
            std::vector<std::vector<int>> blocks;
            std::string part;
            std::istringstream is(blocks_arg);
            while (std::getline(is, part, ';'))
                if (!part.empty()) blocks.push_back(parse_coords(part));
            r = check_projection_structure(c, need_group(), blocks);
        } else {
            r = check_prop27(c, need_group(), bounds.orbit);
        }
        emit_report(r, format, out_path);
        return r.verdict ? 0 : 1;
    }

    // fixture
    PairedAction pa = paired_action_by_name(fixture_name);
    validate_paired_action_strict(pa, bounds.elem);
    if (out_path.empty()) out_path = fixture_name + ".pair";
    write_paired_action_file(out_path, pa);
    std::cout << "wrote " << out_path << " (order " << pa.group1.order() << ")\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ntc::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.kind()) {
            case ntc::errc::bound_exceeded: return 3;
            case ntc::errc::parse_error: return 4;
            case ntc::errc::verification_failed: return 1;
            case ntc::errc::invalid_argument: return 2;
        }
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
