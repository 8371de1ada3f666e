#include "hpa/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>

#include "CLI11.hpp"

#include "hpa/duality.hpp"
#include "hpa/errors.hpp"
#include "hpa/frobenius.hpp"
#include "hpa/galois.hpp"

namespace hpa::cli {

using io::json;

namespace {

struct Options {
    std::string file;
    std::string example;
    std::string field = "q";
    std::string alpha = "1/2";
    std::size_t dim = 2;
    std::string hopf;
    std::string output;
    bool as_json = false;
};

Field parse_field(const std::string& s) {
    if (s == "q" || s == "Q") return Field::rationals();
    if (s.rfind("fp:", 0) == 0) {
        try {
            return Field::prime(std::stoull(s.substr(3)));
        } catch (const std::logic_error&) {
        }
    }
    throw InputError("--field must be q or fp:<p>, got '" + s + "'");
}

std::string yes(bool b) { return b ? "yes" : "no"; }

struct Input {
    json doc;
    std::filesystem::path base;
    std::string label;
};

Input load(const Options& o) {
    if (!o.example.empty() && !o.file.empty()) throw InputError("give either a file or --example, not both");
    if (!o.example.empty()) {
        ExampleOptions eo{parse_field(o.field), o.alpha, o.dim};
        return Input{example_document(o.example, eo), {}, o.example};
    }
    if (o.file.empty()) throw InputError("no input: give a file or --example");
    std::filesystem::path p = o.file;
    return Input{io::read_file(p), p.parent_path(), o.file};
}

io::AnyMap load_map(const Input& in) {
    if (!io::is_map_document(in.doc)) throw InputError(in.label + " is not a coaction, action or partial group action");
    return io::map_from_json(in.doc, in.base);
}

CoactionMap as_coaction(const io::AnyMap& m) {
    if (auto c = std::get_if<CoactionMap>(&m)) return *c;
    if (auto a = std::get_if<ActionMap>(&m)) return action_to_coaction(*a);
    return action_to_coaction(group_to_kG(std::get<PartialGroupAction>(m)));
}

ActionMap as_action(const io::AnyMap& m) {
    if (auto c = std::get_if<CoactionMap>(&m)) return coaction_to_action(*c);
    if (auto a = std::get_if<ActionMap>(&m)) return *a;
    return group_to_kG(std::get<PartialGroupAction>(m));
}

void print_report(std::ostream& out, const AxiomReport& r, const std::string& indent = "  ") {
    for (const auto& c : r.checks()) {
        out << indent << c.id << ": " << (c.passed ? "pass" : "FAIL");
        if (!c.passed && !c.witness.empty()) out << " " << witness_string(c.witness);
        if (!c.note.empty()) out << " (" << c.note << ")";
        out << "\n";
    }
}

struct Result {
    json report;
    int code = ok;
};

// The four flags under the names used for coactions or actions.
std::string flag_line(const ClassificationVerdict& v, const char* global_name) {
    return "partial: " + yes(v.is_partial) + ", weak: " + yes(v.is_weak) + ", lax: " + yes(v.is_lax) + ", " +
           global_name + ": " + yes(v.is_global);
}

Result cmd_check(const Options& o, std::ostream& out) {
    Input in = load(o);
    AxiomReport rep;
    if (io::is_map_document(in.doc)) {
        io::AnyMap m = io::map_from_json(in.doc, in.base);
        if (auto p = std::get_if<PartialGroupAction>(&m)) {
            rep.append(verify(p->algebra), "algebra/");
            rep.append(verify_partial_group_action(*p), "partial-group-action/");
        } else if (auto c = std::get_if<CoactionMap>(&m)) {
            rep.append(verify(c->algebra), "algebra/");
            rep.append(verify(c->hopf), "hopf/");
        } else {
            const ActionMap& a = std::get<ActionMap>(m);
            rep.append(verify(a.algebra), "algebra/");
            rep.append(verify(a.hopf), "hopf/");
        }
    } else {
        io::AnyPresentation p = io::presentation_from_json(in.doc);
        rep = std::visit([](const auto& x) { return verify(x); }, p);
    }
    bool good = rep.all_passed();
    if (!o.as_json) {
        out << in.label << ": " << (good ? "all axioms hold" : "axiom failures") << "\n";
        print_report(out, rep);
    }
    return Result{json{{"checks", io::to_json(rep)}, {"ok", good}}, good ? ok : math_failure};
}

Result cmd_classify(const Options& o, std::ostream& out) {
    Input in = load(o);
    io::AnyMap m = load_map(in);
    ClassificationVerdict v;
    const char* global = "module";
    std::string kind;
    if (auto c = std::get_if<CoactionMap>(&m)) {
        v = classify_coaction(*c);
        global = "comodule";
        kind = "coaction";
    } else {
        v = classify_action(as_action(m));
        kind = "action";
    }
    if (!o.as_json) {
        out << flag_line(v, global) << "\n";
        for (const auto& [id, passed] : v.equations) {
            out << "  " << id << ": " << (passed ? "holds" : "fails");
            auto w = v.witnesses.find(id);
            if (!passed && w != v.witnesses.end()) out << " " << witness_string(w->second);
            out << "\n";
        }
    }
    json r = io::to_json(v);
    r["map_kind"] = kind;
    r["ok"] = true;
    return Result{r, ok};
}

void write_output(const Options& o, const json& doc) {
    if (o.output.empty()) return;
    std::ofstream f(o.output);
    if (!f) throw InputError("cannot write " + o.output);
    f << io::dump(doc);
}

Result cmd_dualize(const Options& o, std::ostream& out) {
    Input in = load(o);
    io::AnyMap m = load_map(in);
    json target, source_flags, target_flags;
    if (auto c = std::get_if<CoactionMap>(&m)) {
        ActionMap a = coaction_to_action(*c);
        target = io::to_json(a);
        source_flags = io::to_json(classify_coaction(*c));
        target_flags = io::to_json(classify_action(a));
    } else {
        ActionMap a = as_action(m);
        CoactionMap back = action_to_coaction(a);
        target = io::to_json(back);
        source_flags = io::to_json(classify_action(a));
        target_flags = io::to_json(classify_coaction(back));
    }
    bool same = true;
    for (const char* k : {"global", "weak", "lax", "partial"}) same = same && source_flags[k] == target_flags[k];
    write_output(o, target);
    if (!o.as_json) {
        out << "dual map: " << target["kind"].get<std::string>() << "\n";
        for (const char* k : {"partial", "weak", "lax", "global"})
            out << "  " << k << ": " << yes(source_flags[k].get<bool>()) << " -> " << yes(target_flags[k].get<bool>())
                << "\n";
        if (o.output.empty()) out << io::dump(target);
    }
    return Result{json{{"map", target}, {"source", source_flags}, {"target", target_flags}, {"flags_agree", same}, {"ok", true}},
                  ok};
}

Result cmd_smash(const Options& o, std::ostream& out) {
    Input in = load(o);
    ActionMap a = as_action(load_map(in));
    ClassificationVerdict v = classify_action(a);
    SmashData s = build_smash(a);
    json modes = json::object();
    bool good = true;
    std::vector<std::pair<const char*, RingMode>> wanted;
    if (v.is_lax) wanted.push_back({"lax", RingMode::lax});
    if (v.is_weak) wanted.push_back({"weak", RingMode::weak});
    if (v.is_global) wanted.push_back({"full", RingMode::full});
    if (!o.as_json) out << "smash dim " << s.product.dim() << ", underline dim " << s.underline.dim() << "\n";
    for (const auto& [name, mode] : wanted) {
        AxiomReport r = verify_smash_ring(s, mode);
        good = good && r.all_passed();
        modes[name] = io::to_json(r);
        if (!o.as_json) {
            out << name << " ring:\n";
            print_report(out, r);
        }
    }
    if (!o.as_json && wanted.empty()) out << "the action is neither lax nor weak; no ring axioms apply\n";
    return Result{json{{"dim", s.product.dim()}, {"underline_dim", s.underline.dim()}, {"rings", modes}, {"ok", good}},
                  good ? ok : math_failure};
}

Result cmd_koppinen(const Options& o, std::ostream& out) {
    Input in = load(o);
    CoactionMap c = as_coaction(load_map(in));
    ClassificationVerdict v = classify_coaction(c);
    if (!v.is_lax && !v.is_weak) throw PreconditionError("lax", "the coaction is neither lax nor weak");
    KoppinenSmash k = build_koppinen(c);
    DualRing d = dual_ring_of_coring(build_coring(c));
    AxiomReport dual = verify_dual_ring(d, v.is_lax ? RingMode::lax : RingMode::weak);
    json r{{"dim", k.product.dim()}, {"underline_dim", k.underline.dim()}, {"checks", io::to_json(k.checks)},
           {"dual_ring", {{"dim", d.space.dim()}, {"unital_dim", d.unital.dim()}, {"checks", io::to_json(dual)}}}};
    bool good = k.checks.all_passed() && dual.all_passed();
    if (v.is_lax) {
        AxiomReport u = verify_unital_iso(d);
        DualSmashIso iso = prop410_iso(c);
        r["unital_iso"] = io::to_json(u);
        r["smash_iso"] = io::to_json(iso.checks);
        good = good && u.all_passed() && iso.checks.all_passed();
        if (!o.as_json) {
            out << "dual/unital iso:\n";
            print_report(out, u);
            out << "smash iso:\n";
            print_report(out, iso.checks);
        }
    }
    if (!o.as_json) {
        out << "Koppinen smash dim " << k.product.dim() << ", underline dim " << k.underline.dim() << "\n";
        print_report(out, k.checks);
        out << "dual ring dim " << d.space.dim() << ", unital part dim " << d.unital.dim() << "\n";
        print_report(out, dual);
    }
    r["ok"] = good;
    return Result{r, good ? ok : math_failure};
}

HopfPresentation hopf_for(const Options& o, const io::AnyMap& m, const ActionMap& a) {
    if (!o.hopf.empty()) {
        io::AnyPresentation p = io::presentation_from_json(io::read_file(o.hopf));
        auto h = std::get_if<HopfPresentation>(&p);
        if (!h) throw InputError(o.hopf + " is not a hopf presentation");
        if (!(h->bialgebra == a.hopf)) throw InputError(o.hopf + " does not match the bialgebra of the action");
        return *h;
    }
    if (auto p = std::get_if<PartialGroupAction>(&m)) return group_algebra(p->group, p->algebra.field());
    return make_hopf(a.hopf);
}

Result cmd_frobenius(const Options& o, std::ostream& out) {
    Input in = load(o);
    io::AnyMap m = load_map(in);
    ActionMap a = as_action(m);
    HopfPresentation h = hopf_for(o, m, a);
    FrobeniusData fd = frobenius_pair(h);
    FrobeniusSystem s = build_frobenius_system(a, fd);
    bool good = fd.checks.all_passed() && s.identities.all_passed();
    if (!o.as_json) {
        out << "t = " << to_string(fd.t) << ", phi = " << to_string(fd.phi) << ", <phi, t> = " << fd.pairing.to_string()
            << "\n";
        print_report(out, fd.checks);
        out << "Frobenius system on the underline smash (dim " << s.smash.underline.dim() << "):\n";
        print_report(out, s.identities);
    }
    json r{{"integrals", {{"t", io::to_json(fd.t)}, {"phi", io::to_json(fd.phi)}}},
           {"pairing", io::to_json(fd.pairing)},
           {"checks", io::to_json(fd.checks)},
           {"identities", io::to_json(s.identities)},
           {"underline_dim", s.smash.underline.dim()},
           {"ok", good}};
    return Result{r, good ? ok : math_failure};
}

Result cmd_galois(const Options& o, std::ostream& out) {
    Input in = load(o);
    GaloisReport g = galois_verdict(as_coaction(load_map(in)));
    if (!o.as_json) {
        out << "can: " << (g.can.bijective() ? "bijective" : "not bijective")
            << ", theta: " << (g.theta_bijective ? "bijective" : "not bijective")
            << ", morita: " << (g.strict ? "strict" : "not strict") << ", GALOIS: " << yes(g.galois) << "\n";
        out << "  dim T = " << g.t_dim << ", can rank " << g.can.rank << " (" << g.can.domain.dim() << " -> "
            << g.can.underline.dim() << "), theta rank " << g.theta_rank << ", dim Q = " << g.q_dim << "\n";
        out << "  A is a left T-progenerator: " << yes(g.progenerator.progenerator()) << "\n";
    }
    json r{{"t_dim", g.t_dim},
           {"can",
            {{"domain_dim", g.can.domain.dim()},
             {"underline_dim", g.can.underline.dim()},
             {"rank", g.can.rank},
             {"injective", g.can.injective},
             {"surjective", g.can.surjective},
             {"bijective", g.can.bijective()}}},
           {"progenerator",
            {{"hom_dim", g.progenerator.hom_dim},
             {"generator", g.progenerator.generator},
             {"projective", g.progenerator.projective}}},
           {"theta", {{"rank", g.theta_rank}, {"bijective", g.theta_bijective}}},
           {"morita",
            {{"q_dim", g.q_dim}, {"tau_surjective", g.tau_surjective}, {"mu_surjective", g.mu_surjective}, {"strict", g.strict}}},
           {"verdicts", {{"can", g.via_can}, {"theta", g.via_theta}, {"morita", g.via_morita}}},
           {"galois", g.galois},
           {"ok", true}};
    return Result{r, ok};
}

Result cmd_morita(const Options& o, std::ostream& out) {
    Input in = load(o);
    MoritaContext mc = morita_context(as_coaction(load_map(in)));
    bool good = mc.checks.all_passed();
    if (!o.as_json) {
        out << "dim T = " << mc.t.basis.dim() << ", dim Q = " << mc.q.dim() << ", tau surjective: " << yes(mc.tau_surjective)
            << ", mu surjective: " << yes(mc.mu_surjective) << ", strict: " << yes(mc.strict()) << "\n";
        print_report(out, mc.checks);
    }
    json r{{"t_dim", mc.t.basis.dim()},
           {"ring_dim", mc.ring.underline.dim()},
           {"q_dim", mc.q.dim()},
           {"q_smash_dim", mc.q_smash.dim()},
           {"tau_surjective", mc.tau_surjective},
           {"tau_criterion", mc.tau_criterion},
           {"mu_surjective", mc.mu_surjective},
           {"strict", mc.strict()},
           {"checks", io::to_json(mc.checks)},
           {"ok", good}};
    return Result{r, good ? ok : math_failure};
}

Result cmd_examples_list(const Options& o, std::ostream& out) {
    json list = json::array();
    for (const auto& e : examples()) {
        list.push_back(json{{"name", e.name}, {"kind", e.kind}, {"description", e.description}});
        if (!o.as_json) out << e.name << "  [" << e.kind << "]  " << e.description << "\n";
    }
    return Result{json{{"examples", list}, {"ok", true}}, ok};
}

Result cmd_examples_export(const Options& o, std::ostream& out) {
    ExampleOptions eo{parse_field(o.field), o.alpha, o.dim};
    json doc = example_document(o.example, eo);
    if (o.output.empty())
        out << io::dump(doc);
    else
        write_output(o, doc);
    return Result{json{{"ok", true}}, ok};
}

}  // namespace

const std::vector<ExampleInfo>& examples() {
    static const std::vector<ExampleInfo> list{
        {"sweedler4", "hopf", "Sweedler's four-dimensional Hopf algebra on 1, c, x, cx"},
        {"z2-group-algebra", "hopf", "the group algebra of Z/2"},
        {"z3-group-algebra", "hopf", "the group algebra of Z/3"},
        {"sweedler-on-k", "coaction", "rho(1) = 1 (x) e_alpha with e_alpha = 1/2 + c/2 + alpha cx (use --alpha)"},
        {"sweedler-on-b", "coaction", "partial coaction of Sweedler's algebra on k[x]/(x^2)"},
        {"trivial", "coaction", "rho(a) = a (x) 1 of kZ/2 on k^n (use --dim)"},
        {"weak-zero", "coaction", "the zero map k^2 -> k^2 (x) kZ/2"},
        {"regular-z2", "coaction", "A = H = kZ/2 with rho = Delta"},
        {"regular-z3", "coaction", "A = H = kZ/3 with rho = Delta"},
        {"partial-z2-on-k2", "partial-group-action", "Z/2 on k^2 with e_g = (1, 0)"},
        {"global-z2-on-k2", "partial-group-action", "Z/2 swapping the factors of k^2"},
        {"partial-z3-on-k2", "partial-group-action", "regular action of Z/3 restricted to two points"},
        {"partial-s3-on-k2", "partial-group-action", "S3 on three points restricted to two"},
        {"noncentral-triangular", "action", "partial kZ/2 action on upper triangular 2x2 matrices with h.1 not central"},
    };
    return list;
}

json example_document(const std::string& name, const ExampleOptions& o) {
    Field f = o.field;
    BialgebraPresentation z2 = group_algebra(cyclic_group(2), f).bialgebra;
    if (name == "sweedler4") return io::to_json(build_sweedler4(f));
    if (name == "z2-group-algebra") return io::to_json(group_algebra(cyclic_group(2), f));
    if (name == "z3-group-algebra") return io::to_json(group_algebra(cyclic_group(3), f));
    if (name == "sweedler-on-k") return io::to_json(sweedler_on_k(f, Scalar::parse(f, o.alpha)));
    if (name == "sweedler-on-b") return io::to_json(sweedler_on_b(f));
    if (name == "trivial") {
        if (o.dim == 0) throw InputError("--dim must be positive");
        return io::to_json(trivial_coaction(diagonal_algebra(f, o.dim), z2));
    }
    if (name == "weak-zero") return io::to_json(zero_coaction(diagonal_algebra(f, 2), z2));
    if (name == "regular-z2") return io::to_json(regular_coaction(z2));
    if (name == "regular-z3") return io::to_json(regular_coaction(group_algebra(cyclic_group(3), f).bialgebra));
    if (name == "partial-z2-on-k2") return io::to_json(partial_z2_on_k2(f));
    if (name == "global-z2-on-k2") return io::to_json(global_z2_on_k2(f));
    if (name == "partial-z3-on-k2") return io::to_json(partial_z3_on_k2(f));
    if (name == "partial-s3-on-k2") return io::to_json(partial_s3_on_k2(f));
    if (name == "noncentral-triangular") return io::to_json(noncentral_triangular_action(f));
    throw InputError("unknown example '" + name + "' (see `hpa examples list`)");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations with partial, lax and weak (co)actions of Hopf algebras", "hpa"};
    app.require_subcommand(1);
    Options o;
    std::function<Result(const Options&, std::ostream&)> action;

    auto common = [&](CLI::App* sub, bool with_file) {
        if (with_file) sub->add_option("file", o.file, "JSON presentation or map file");
        sub->add_option("--example", o.example, "built-in example name");
        sub->add_option("--field", o.field, "field for built-in examples: q or fp:<p>");
        sub->add_option("--alpha", o.alpha, "parameter of sweedler-on-k");
        sub->add_option("--dim", o.dim, "dimension for the trivial example");
        sub->add_flag("--json", o.as_json, "print a JSON report");
    };
    auto command = [&](const char* name, const char* help, Result (*fn)(const Options&, std::ostream&)) {
        CLI::App* sub = app.add_subcommand(name, help);
        common(sub, true);
        sub->callback([&action, fn] { action = fn; });
        return sub;
    };
    command("check", "verify the axioms of a presentation, or of the presentations behind a map", cmd_check);
    command("classify", "classify a (co)action as global, weak, lax and partial", cmd_classify);
    command("dualize", "transfer a coaction to the dual action or back", cmd_dualize)
        ->add_option("-o,--output", o.output, "write the dual map here");
    command("smash", "build the smash product of an action and check its ring axioms", cmd_smash);
    command("koppinen", "build the Koppinen smash and the dual ring of a coaction", cmd_koppinen);
    command("frobenius", "Frobenius pair and Frobenius system of a partial action", cmd_frobenius)
        ->add_option("--hopf", o.hopf, "hopf presentation file with the antipode");
    command("galois", "Galois verdicts through can, theta and the Morita context", cmd_galois);
    command("morita", "the Morita context of a partial coaction", cmd_morita);

    CLI::App* ex = app.add_subcommand("examples", "built-in examples");
    ex->require_subcommand(1);
    CLI::App* list = ex->add_subcommand("list", "list the built-in examples");
    list->add_flag("--json", o.as_json, "print JSON");
    list->callback([&] { action = cmd_examples_list; });
    CLI::App* exp = ex->add_subcommand("export", "write a built-in example as a file");
    exp->add_option("name", o.example, "example name")->required();
    exp->add_option("-o,--output", o.output, "output path (stdout when omitted)");
    exp->add_option("--field", o.field, "q or fp:<p>");
    exp->add_option("--alpha", o.alpha, "parameter of sweedler-on-k");
    exp->add_option("--dim", o.dim, "dimension for the trivial example");
    exp->callback([&] { action = cmd_examples_export; });

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "hpa: " << e.what() << "\n";
        return input_error;
    }

    auto fail = [&](int code, const std::string& kind, const std::string& msg, const std::string& hypothesis) {
        if (o.as_json) {
            json r{{"kind", "error"}, {"error", kind}, {"message", msg}, {"ok", false}};
            if (!hypothesis.empty()) r["hypothesis"] = hypothesis;
            out << io::dump(r);
        } else {
            err << "hpa: " << kind << ": " << msg;
            if (!hypothesis.empty()) err << " [" << hypothesis << "]";
            err << "\n";
        }
        return code;
    };
    std::string name = app.get_subcommands().front()->get_name();
    try {
        Result r = action(o, out);
        r.report["kind"] = name;
        if (o.as_json) out << io::dump(r.report);
        return r.code;
    } catch (const PreconditionError& e) {
        return fail(math_failure, "precondition", e.what(), e.hypothesis());
    } catch (const InternalConsistencyError& e) {
        return fail(math_failure, "internal", e.what(), "");
    } catch (const InputError& e) {
        return fail(input_error, "input", e.what(), "");
    } catch (const DimensionError& e) {
        return fail(input_error, "dimension", e.what(), "");
    } catch (const FieldMismatch& e) {
        return fail(input_error, "field", e.what(), "");
    } catch (const std::invalid_argument& e) {
        return fail(input_error, "input", e.what(), "");
    } catch (const std::domain_error& e) {
        return fail(input_error, "input", e.what(), "");
    }
}

}  // namespace hpa::cli
