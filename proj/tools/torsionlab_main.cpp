// torsionlab: exact torsion computations on job documents.
//
// Exit codes: 0 success, 1 parse/validation failure, 2 mathematical
// precondition failure (non-acyclicity, poles, degenerate minors),
// 3 broken internal invariant.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "torsionlab/document.hpp"
#include "torsionlab/report.hpp"
#include "torsionlab/tau.hpp"

using namespace torsionlab;
using nlohmann::json;

namespace {

struct Options {
    std::string file;
    bool json_out = false;
    bool use_hbases = false;
    bool flip_orientation = false;
    std::vector<std::string> shift_euler_args; // CELL WORD pairs
    std::string at_point;
    std::string modulus = "pi";
};

JobDocument load(const Options& opt) {
    std::ifstream in(opt.file);
    if (!in) throw parse_error("cannot read '" + opt.file + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_document(buf.str());
}

void require_payload(const JobDocument& doc, PayloadKind kind, const std::string& what) {
    if (doc.payload != kind)
        throw validation_error("the '" + what + "' command needs a different payload block");
}

const Representation& require_representation(const JobDocument& doc) {
    if (!doc.representation)
        throw validation_error("this command needs a [representation] section");
    return *doc.representation;
}

/* The orientation actually used: the document's if present, with empty bases
 * filled in from the echelon default; the default otherwise. */
CohomologyOrientation effective_orientation(const JobDocument& doc,
                                            const EquivariantCellComplex& x) {
    CohomologyOrientation o = default_orientation(x);
    if (doc.orientation) {
        o.sign = doc.orientation->sign;
        if (!doc.orientation->bases.reps.empty()) o.bases = doc.orientation->bases;
    }
    return o;
}

std::string double_str(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

// numerator/denominator of a field element as standalone literals
std::string num_str(const FieldElement& v) {
    return FieldElement(v.descriptor(), v.num()).str();
}
std::string den_str(const FieldElement& v) {
    return FieldElement(v.descriptor(), v.den()).str();
}

std::string unit_str(const MapTorusReport& r, const std::string& var) {
    std::string s = r.unit_sign < 0 ? "-" : "+";
    if (r.unit_power == 0) return s + "1";
    return s + var + "^" + std::to_string(r.unit_power);
}

void print_payload(const Options& opt, const json& j, const std::string& text) {
    if (opt.json_out)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

/* ---- commands ----------------------------------------------------------- */

void cmd_torsion(const Options& opt) {
    JobDocument doc = load(opt);
    require_payload(doc, PayloadKind::complex_block, "torsion");
    doc.complex.validate();
    FieldElement value;
    if (opt.use_hbases) {
        if (!doc.hbases) throw validation_error("--h-bases needs an [hbases] section");
        value = torsion(doc.complex, *doc.hbases);
    } else {
        value = torsion_acyclic(doc.complex);
    }
    print_payload(opt, json{{"torsion", value.str()}}, value.str() + "\n");
}

void cmd_taulist(const Options& opt) {
    JobDocument doc = load(opt);
    require_payload(doc, PayloadKind::complex_block, "taulist");
    doc.complex.validate();
    ShapeVector shape{doc.complex.dims};
    if (!shape.is_admissible())
        throw domain_error("shape " + shape.str() + " is not admissible");

    json rows = json::array();
    std::string text = "shape " + shape.str() + "\n";
    for (const TauChain& chain : enumerate_tau_chains(shape)) {
        std::optional<FieldElement> unsigned_value = unsigned_F_alpha(doc.complex, chain);
        json row{{"alpha", chain.str()}};
        text += chain.str();
        if (!unsigned_value) {
            row["degenerate"] = true;
            text += " degenerate\n";
        } else {
            int eps = epsilon_alpha(shape, chain);
            FieldElement f = *unsigned_value;
            if (eps < 0) f = -f;
            row["degenerate"] = false;
            row["unsigned"] = unsigned_value->str();
            row["eps"] = eps;
            row["F"] = f.str();
            text += " unsigned = " + unsigned_value->str() + " eps = " +
                    (eps < 0 ? std::string("-1") : std::string("+1")) + " F = " + f.str() + "\n";
        }
        rows.push_back(std::move(row));
    }
    print_payload(opt, json{{"shape", shape.str()}, {"rows", rows}}, text);
}

EquivariantCellComplex cell_payload(const JobDocument& doc, const Options& opt) {
    EquivariantCellComplex x = doc.cellcomplex;
    for (std::size_t i = 0; i + 1 < opt.shift_euler_args.size(); i += 2) {
        auto [degree, index] = x.find_cell(opt.shift_euler_args[i]);
        Word w;
        try {
            w = parse_word(opt.shift_euler_args[i + 1], x.group);
        } catch (const std::runtime_error& e) {
            throw validation_error(e.what());
        }
        x = shift_euler(x, degree, index, w);
    }
    return x;
}

void cmd_mt(const Options& opt) {
    JobDocument doc = load(opt);
    require_payload(doc, PayloadKind::cellcomplex_block, "mt");
    const Representation& rho = require_representation(doc);
    EquivariantCellComplex x = cell_payload(doc, opt);
    CohomologyOrientation o = effective_orientation(doc, x);
    if (opt.flip_orientation) o.sign = -o.sign;

    FieldElement value = milnor_turaev_torsion(x, rho, o);
    print_payload(opt,
                  json{{"torsion", value.str()},
                       {"numerator", num_str(value)},
                       {"denominator", den_str(value)}},
                  "torsion = " + value.str() + "\nnumerator = " + num_str(value) +
                      "\ndenominator = " + den_str(value) + "\n");
}

void cmd_scan(const Options& opt) {
    JobDocument doc = load(opt);
    require_payload(doc, PayloadKind::cellcomplex_block, "scan");
    const Representation& rho = require_representation(doc);
    EquivariantCellComplex x = cell_payload(doc, opt);
    ScanReport s = scan_torsion(x, rho, effective_orientation(doc, x));

    const FieldDescriptor& d = s.torsion.descriptor();
    json roots = json::array();
    std::string text = "torsion = " + s.torsion.str() + "\nnumerator = " + num_str(s.torsion) +
                       "\ndenominator = " + den_str(s.torsion) +
                       "\nzero residual = " + FieldElement(d, s.zero_residual).str() +
                       "\npole residual = " + FieldElement(d, s.pole_residual).str() + "\n";
    for (const ScanRoot& r : s.roots) {
        json row{{"at", rational_str(r.at)},
                 {"zero_mult", r.zero_mult},
                 {"pole_mult", r.pole_mult},
                 {"nonacyclic", r.specialized_nonacyclic}};
        roots.push_back(std::move(row));
        text += "root " + rational_str(r.at) + ":";
        if (r.zero_mult) text += " zero^" + std::to_string(r.zero_mult);
        if (r.pole_mult) text += " pole^" + std::to_string(r.pole_mult);
        text += r.specialized_nonacyclic ? " nonacyclic" : " STILL-ACYCLIC";
        text += "\n";
    }
    print_payload(opt,
                  json{{"torsion", s.torsion.str()},
                       {"numerator", num_str(s.torsion)},
                       {"denominator", den_str(s.torsion)},
                       {"zero_residual", FieldElement(d, s.zero_residual).str()},
                       {"pole_residual", FieldElement(d, s.pole_residual).str()},
                       {"roots", roots}},
                  text);
}

void cmd_maptorus(const Options& opt) {
    JobDocument doc = load(opt);
    require_payload(doc, PayloadKind::mappingtorus_block, "maptorus");
    const CohomologyOrientation* o = doc.orientation ? &*doc.orientation : nullptr;
    MapTorusReport r = verify_maptor(doc.mappingtorus.map, doc.mappingtorus.monodromy, o);

    std::string var = doc.field.has_variable() ? doc.field.variable : "w";
    std::string unit = r.unit_is_monomial ? unit_str(r, var) : "";
    std::string text = "torsion side = " + r.torsion_side.str() + "\nzeta = " + r.zeta.str() +
                       "\nz = " + std::to_string(r.z) + "\nzeta side = " + r.zeta_side.str() +
                       "\nratio = " + r.ratio.str() +
                       "\nsamples = " + std::to_string(r.samples_checked) + "\n" +
                       (r.pass ? "PASS unit=" + unit : "FAIL") + "\n";
    print_payload(opt,
                  json{{"torsion_side", r.torsion_side.str()},
                       {"zeta", r.zeta.str()},
                       {"z", r.z},
                       {"zeta_side", r.zeta_side.str()},
                       {"ratio", r.ratio.str()},
                       {"h_dims", r.h_dims},
                       {"samples", r.samples_checked},
                       {"pass", r.pass},
                       {"unit", unit}},
                  text);
}

void cmd_fusion(const Options& opt) {
    JobDocument doc = load(opt);
    require_payload(doc, PayloadKind::sequence_block, "fusion");
    const ShortExactSequenceOfComplexes& s = doc.sequence.ses;
    s.validate();
    GradedBases h0 = doc.sequence.h0 ? *doc.sequence.h0 : cohomology(s.c0).bases;
    GradedBases h2 = doc.sequence.h2 ? *doc.sequence.h2 : cohomology(s.c2).bases;
    FusionReport f = fusion_check(s, h0, h2);

    // the verdict quotes the parity: only y mod 2 enters the sign
    const unsigned long parity = f.y % 2;
    std::string text = "y = " + std::to_string(f.y) + "\nparity = " + std::to_string(parity) +
                       "\npsi = " + f.psi.str() +
                       "\nt0 = " + f.t0.str() + "\nt1 = " + f.t1.str() + "\nt2 = " + f.t2.str() +
                       "\nt_les = " + f.t_les.str() + "\nlhs = " + f.lhs.str() +
                       "\nrhs = " + f.rhs.str() + "\n" +
                       (f.pass ? "COMMUTES y=" + std::to_string(parity) : "MISMATCH") + "\n";
    print_payload(opt,
                  json{{"y", f.y},
                       {"parity", parity},
                       {"psi", f.psi.str()},
                       {"t0", f.t0.str()},
                       {"t1", f.t1.str()},
                       {"t2", f.t2.str()},
                       {"t_les", f.t_les.str()},
                       {"lhs", f.lhs.str()},
                       {"rhs", f.rhs.str()},
                       {"pass", f.pass}},
                  text);
}

void cmd_arg(const Options& opt) {
    JobDocument doc = load(opt);
    FieldElement value;
    if (doc.payload == PayloadKind::complex_block) {
        doc.complex.validate();
        value = torsion_acyclic(doc.complex);
    } else if (doc.payload == PayloadKind::cellcomplex_block) {
        value = milnor_turaev_torsion(doc.cellcomplex, require_representation(doc),
                                      effective_orientation(doc, doc.cellcomplex));
    } else {
        throw validation_error("the 'arg' command needs a [complex] or [cellcomplex] payload");
    }
    if (!opt.at_point.empty()) {
        if (!doc.field.has_variable())
            throw validation_error("--at needs a field with a variable");
        Gaussian point = parse_gaussian(opt.at_point);
        if (!point.is_real() && !value.descriptor().allows_imaginary())
            value = value.promoted({BaseField::gaussian_rationals, doc.field.variable});
        value = value.evaluate_at(point);
    }
    ArgModulus mod = opt.modulus == "2pi" ? ArgModulus::two_pi : ArgModulus::pi;
    double a = argument_invariant(value, mod);
    print_payload(opt, json{{"arg", a}}, double_str(a) + "\n");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Milnor-Turaev torsion computations on job documents"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("file", opt.file, "job document")->required();
        cmd->add_flag("--json", opt.json_out, "emit one JSON object instead of text");
        return cmd;
    };
    CLI::App* c_torsion =
        add_common(app.add_subcommand("torsion", "sign-refined torsion of a cochain complex"));
    c_torsion->add_flag("--h-bases", opt.use_hbases,
                        "use the [hbases] block instead of requiring acyclicity");
    add_common(app.add_subcommand("taulist", "all tau-chain functionals of a complex"));
    CLI::App* c_mt = add_common(
        app.add_subcommand("mt", "Milnor-Turaev torsion of an equivariant cell complex"));
    c_mt->add_option("--shift-euler", opt.shift_euler_args,
                     "CELL WORD: multiply one lift by a word before computing")
        ->expected(-2);
    c_mt->add_flag("--flip-orientation", opt.flip_orientation, "negate the orientation");
    CLI::App* c_scan = add_common(
        app.add_subcommand("scan", "torsion as a rational function with its zeros and poles"));
    c_scan->add_option("--shift-euler", opt.shift_euler_args, "CELL WORD: as in mt")
        ->expected(-2);
    add_common(app.add_subcommand("maptorus", "mapping-torus torsion against the zeta side"));
    add_common(app.add_subcommand("fusion", "fusion identity on a short exact sequence"));
    CLI::App* c_arg =
        add_common(app.add_subcommand("arg", "argument invariant of the torsion (double)"));
    c_arg->add_option("--at", opt.at_point, "specialize the variable at this scalar first");
    c_arg->add_option("--mod", opt.modulus, "reduce modulo pi (default) or 2pi")
        ->check(CLI::IsMember({"pi", "2pi"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (app.got_subcommand("torsion")) cmd_torsion(opt);
        else if (app.got_subcommand("taulist")) cmd_taulist(opt);
        else if (app.got_subcommand("mt")) cmd_mt(opt);
        else if (app.got_subcommand("scan")) cmd_scan(opt);
        else if (app.got_subcommand("maptorus")) cmd_maptorus(opt);
        else if (app.got_subcommand("fusion")) cmd_fusion(opt);
        else if (app.got_subcommand("arg")) cmd_arg(opt);
        return 0;
    } catch (const not_acyclic_error& e) {
        if (opt.json_out)
            std::cout << json{{"error", "not acyclic"}, {"h_dims", e.h_dims}}.dump(2) << "\n";
        else
            std::cout << "H dims: " << json(e.h_dims).dump() << "\n";
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const precondition_error& e) {
        if (opt.json_out) std::cout << json{{"error", e.what()}}.dump(2) << "\n";
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const internal_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::runtime_error& e) { // parse, validation, shape
        if (opt.json_out) std::cout << json{{"error", e.what()}}.dump(2) << "\n";
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
