// Command-line front end: parses JSON inputs, dispatches to the library,
// and emits deterministic JSON or markdown reports.
//
// Exit codes: 0 success, 2 input/validation error (with a structured error
// object on stdout), 3 broken internal invariant.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nccdim/json_io.hpp"
#include "nccdim/nccdim.hpp"
#include "nccdim/table.hpp"

namespace {

using nccdim::io::json;

// Inline JSON text, or @path to read it from a file.
std::string resolve_input(const std::string& arg) {
    if (arg.empty() || arg[0] != '@') return arg;
    std::ifstream in(arg.substr(1), std::ios::binary);
    if (!in)
        throw nccdim::ValidationError("input", "readable @file path",
                                      "cannot read file \"" + arg.substr(1) + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

json parse_json(const std::string& arg) {
    try {
        return json::parse(resolve_input(arg));
    } catch (const nlohmann::json::parse_error& e) {
        throw nccdim::ValidationError("parse", "well-formed JSON", e.what());
    }
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// Markdown rendering of a rational uses the fraction slash.
std::string md_rational(const nccdim::Rational& r) {
    if (r.is_integer()) return r.to_string();
    return std::to_string(r.num()) + "⁄" + std::to_string(r.den());
}

std::string md_dimension_row(const nccdim::DimensionReport& r) {
    std::string out;
    out += "| hdim | rdim | ddim | Sdim | gldim |\n";
    out += "|---|---|---|---|---|\n";
    out += "| " + std::to_string(r.hdim) + " | " + std::to_string(r.rdim) + " | " +
           std::to_string(r.ddim) + " | " + md_rational(r.sdim) + " | " + md_rational(r.gldim) +
           " |\n";
    return out;
}

void print_warnings(const std::vector<std::string>& warnings) {
    for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
}

struct Options {
    std::string format = "json";
    std::uint64_t seed = 0;
};

void run_curve_report(const Options& opt, const std::string& sig_arg) {
    std::vector<std::string> warnings;
    const auto sig = nccdim::io::signature_from_json(parse_json(sig_arg), &warnings);
    print_warnings(warnings);
    const auto report = nccdim::dimension_report(sig);
    const auto family = nccdim::negative_family(sig);
    if (opt.format == "markdown") {
        std::string orders = "[";
        for (std::size_t i = 0; i < sig.orders().size(); ++i)
            orders += (i ? ", " : "") + std::to_string(sig.orders()[i]);
        orders += "]";
        std::cout << "# Curve report\n\n";
        std::cout << "- signature: genus " << sig.genus() << ", orders " << orders << "\n";
        std::cout << "- deg(omega): " << md_rational(nccdim::omega_degree(sig)) << "\n";
        std::cout << "- Chen-Ruan rank: " << nccdim::cr_rank(sig) << "\n";
        std::cout << "- stability space dimension: " << nccdim::stab_space_dim(sig) << "\n";
        if (family) {
            std::cout << "- negative family: " << family->name() << " as (" << family->triple[0]
                      << "," << family->triple[1] << "," << family->triple[2] << ")\n";
        } else {
            std::cout << "- negative family: none\n";
        }
        std::cout << "\n" << md_dimension_row(report);
        return;
    }
    json j;
    j["signature"] = nccdim::io::to_json(sig);
    j["omega_degree"] = nccdim::io::to_json(nccdim::omega_degree(sig));
    j["cr_rank"] = nccdim::cr_rank(sig);
    j["stab_space_dim"] = nccdim::stab_space_dim(sig);
    j["support_lower_bound"] = nccdim::io::to_json(nccdim::support_lower_bound(sig));
    j["negative_family"] = family ? nccdim::io::to_json(*family) : json(nullptr);
    j["dimension_report"] = nccdim::io::to_json(report);
    emit(j);
}

void run_quiver_report(const Options& opt, const std::string& quiver_arg) {
    const auto q = nccdim::io::quiver_from_json(parse_json(quiver_arg));
    const auto cls = nccdim::classify(q);
    const auto report = nccdim::quiver_dimension_report(q);
    if (opt.format == "markdown") {
        std::cout << "# Quiver report\n\n";
        std::cout << "- vertices: " << q.vertex_count << ", arrows: " << q.arrows.size() << "\n";
        switch (cls.kind) {
            case nccdim::QuiverKind::Dynkin:
                std::cout << "- class: Dynkin " << cls.type->name() << " (Coxeter number "
                          << *cls.coxeter << ")\n";
                break;
            case nccdim::QuiverKind::Extended:
                std::cout << "- class: extended Dynkin\n";
                break;
            case nccdim::QuiverKind::Wild:
                std::cout << "- class: wild\n";
                break;
        }
        std::cout << "\n" << md_dimension_row(report);
        return;
    }
    json j;
    j["quiver"] = nccdim::io::to_json(q);
    j["classification"] = nccdim::io::to_json(cls);
    j["dimension_report"] = nccdim::io::to_json(report);
    emit(j);
}

void run_table(const Options& opt) {
    if (opt.format == "markdown") {
        std::cout << nccdim::classification_table_markdown();
        return;
    }
    emit(nccdim::classification_table_json());
}

void run_k_op(const Options& opt, const std::string& op, const std::vector<std::string>& args,
              const std::string& sig_arg) {
    auto need = [&](std::size_t n) {
        if (args.size() != n)
            throw nccdim::ValidationError("k-op " + op,
                                          std::to_string(n) + " operand(s)",
                                          "got " + std::to_string(args.size()));
    };
    json out;
    if (op == "add" || op == "tensor") {
        need(2);
        const auto a = nccdim::io::kclass_from_json(parse_json(args[0]));
        const auto b = nccdim::io::kclass_from_json(parse_json(args[1]));
        out = nccdim::io::to_json(op == "add" ? nccdim::add(a, b) : nccdim::tensor(a, b));
    } else if (op == "dual") {
        need(1);
        out = nccdim::io::to_json(nccdim::dual(nccdim::io::kclass_from_json(parse_json(args[0]))));
    } else if (op == "chorb") {
        need(1);
        const auto a = nccdim::io::kclass_from_json(parse_json(args[0]));
        nccdim::CurveSignature sig = [&] {
            if (!sig_arg.empty()) return nccdim::io::signature_from_json(parse_json(sig_arg));
            std::vector<int> orders;
            for (const auto& row : a.locals) orders.push_back(static_cast<int>(row.size()) + 1);
            return nccdim::CurveSignature::make(0, std::move(orders));
        }();
        out = nccdim::io::to_json(nccdim::ch_orb(a, sig));
    } else if (op == "slope") {
        need(1);
        const auto s = nccdim::slope(nccdim::io::kclass_from_json(parse_json(args[0])));
        out["slope"] = s.to_string();
    } else {
        throw nccdim::ValidationError("k-op", "op in {add, tensor, dual, chorb, slope}",
                                      "unknown op \"" + op + "\"");
    }
    if (opt.format == "markdown") {
        std::cout << "```json\n" << out.dump(2) << "\n```\n";
        return;
    }
    emit(out);
}

void run_stab_check(const Options& opt, const std::string& sig_arg, int bound) {
    const auto sig = nccdim::io::signature_from_json(parse_json(sig_arg));
    const auto rep = nccdim::check_support(sig, bound);
    if (opt.format == "markdown") {
        std::cout << "- checked: " << rep.checked << "\n";
        std::cout << "- min |Z|^2/||ch||^2: " << md_rational(rep.min_ratio) << "\n";
        std::cout << "- support bound " << md_rational(nccdim::support_lower_bound(sig))
                  << (rep.ok ? " holds\n" : " FAILS\n");
        return;
    }
    emit(nccdim::io::to_json(rep));
}

void run_gldim_h(const Options& opt, const std::string& sig_arg, const std::string& eps_text) {
    const auto sig = nccdim::io::signature_from_json(parse_json(sig_arg));
    const auto eps = nccdim::Rational::parse(eps_text);
    const double h = nccdim::min_h_for_epsilon(sig, eps);
    const auto d = nccdim::omega_degree(sig);
    const double sup =
        nccdim::sampled_sup_phase_gap(d, h > 0.0 ? h * (1.0 + 1e-6) : 1.0, opt.seed);
    if (opt.format == "markdown") {
        std::cout << "H = " << nccdim::io::real12(h) << "\n";
        return;
    }
    json j;
    j["signature"] = nccdim::io::to_json(sig);
    j["eps"] = nccdim::io::to_json(eps);
    j["omega_degree"] = nccdim::io::to_json(d);
    j["min_h"] = nccdim::io::real12(h);
    j["sampled_sup_above"] = nccdim::io::real12(sup);
    emit(j);
}

void run_hn_normalize(const Options& opt, const std::string& arg) {
    const auto in = nccdim::io::filtered_from_json(parse_json(arg));
    const auto out = nccdim::hn_normalize(in.pieces);
    if (opt.format == "markdown") {
        std::cout << "| slope | rank | degree |\n|---|---|---|\n";
        for (const auto& piece : out.pieces)
            std::cout << "| " << nccdim::slope(piece).to_string() << " | " << piece.rank << " | "
                      << md_rational(piece.degree) << " |\n";
        return;
    }
    emit(nccdim::io::to_json(out));
}

void run_triple_scan(const Options& opt, int bound) {
    const auto triples = nccdim::enumerate_negative_triples(bound);
    if (opt.format == "markdown") {
        std::cout << "| triple | family |\n|---|---|\n";
        for (const auto& t : triples) {
            const auto fam = nccdim::classify_triple(t);
            std::cout << "| (" << t[0] << "," << t[1] << "," << t[2] << ") | " << fam->name()
                      << " |\n";
        }
        return;
    }
    json list = json::array();
    for (const auto& t : triples) {
        const auto fam = nccdim::classify_triple(t);
        json item;
        item["triple"] = t;
        item["family"] = fam->name();
        list.push_back(item);
    }
    json j;
    j["bound"] = bound;
    j["count"] = triples.size();
    j["triples"] = list;
    emit(j);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"homological invariants of noncommutative curves"};
    app.require_subcommand(1);
    // Global flags may follow the subcommand name.
    app.fallthrough();

    Options opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "markdown"}))
        ->capture_default_str();
    app.add_option("--seed", opt.seed, "seed for sampled checks");

    std::string sig_arg, quiver_arg, kop_name, filtered_arg, eps_text = "1/2";
    std::vector<std::string> kop_args;
    int bound = 4;

    auto* curve_report = app.add_subcommand("curve-report", "invariants of a curve signature");
    curve_report->add_option("signature", sig_arg, "signature JSON or @file")->required();

    auto* quiver_report = app.add_subcommand("quiver-report", "classification of an acyclic quiver");
    quiver_report->add_option("quiver", quiver_arg, "quiver JSON or @file")->required();

    auto* table = app.add_subcommand("table", "the five-row classification table");

    auto* k_op = app.add_subcommand("k-op", "K-class arithmetic");
    k_op->add_option("op", kop_name, "add | tensor | dual | chorb | slope")->required();
    k_op->add_option("operands", kop_args, "K-class JSON or @file");
    k_op->add_option("--sig", sig_arg, "signature JSON or @file (chorb validation)");

    auto* stab_check = app.add_subcommand("stab-check", "exact support-property check");
    stab_check->add_option("signature", sig_arg, "signature JSON or @file")->required();
    stab_check->add_option("--bound", bound, "coordinate box bound")->capture_default_str();

    auto* gldim_h = app.add_subcommand("gldim-h", "least H flattening the Serre twist below eps");
    gldim_h->add_option("signature", sig_arg, "signature JSON or @file")->required();
    gldim_h->add_option("--eps", eps_text, "phase tolerance in (0,1)")->capture_default_str();

    auto* hn_normalize = app.add_subcommand("hn-normalize", "normal form of HN pieces");
    hn_normalize->add_option("object", filtered_arg, "filtered object JSON or @file")->required();

    auto* triple_scan = app.add_subcommand("triple-scan", "negative weight triples up to a bound");
    triple_scan->add_option("--bound", bound, "max weight")->capture_default_str();

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        json err;
        err["error"] = {{"kind", "validation"},
                        {"op", "argv"},
                        {"precondition", "well-formed command line"},
                        {"detail", std::string(e.what())}};
        emit(err);
        return 2;
    }

    try {
        if (curve_report->parsed()) run_curve_report(opt, sig_arg);
        if (quiver_report->parsed()) run_quiver_report(opt, quiver_arg);
        if (table->parsed()) run_table(opt);
        if (k_op->parsed()) run_k_op(opt, kop_name, kop_args, sig_arg);
        if (stab_check->parsed()) run_stab_check(opt, sig_arg, bound);
        if (gldim_h->parsed()) run_gldim_h(opt, sig_arg, eps_text);
        if (hn_normalize->parsed()) run_hn_normalize(opt, filtered_arg);
        if (triple_scan->parsed()) run_triple_scan(opt, bound);
        return 0;
    } catch (const nccdim::ValidationError& e) {
        json err;
        err["error"] = {{"kind", "validation"},
                        {"op", e.op()},
                        {"precondition", e.precondition()},
                        {"detail", e.detail()}};
        emit(err);
        return 2;
    } catch (const nccdim::OverflowError& e) {
        json err;
        err["error"] = {{"kind", "overflow"}, {"detail", e.what()}};
        emit(err);
        return 2;
    } catch (const nccdim::InternalError& e) {
        json err;
        err["error"] = {{"kind", "internal"}, {"detail", e.what()}};
        emit(err);
        return 3;
    } catch (const std::exception& e) {
        json err;
        err["error"] = {{"kind", "internal"}, {"detail", e.what()}};
        emit(err);
        return 3;
    }
}
