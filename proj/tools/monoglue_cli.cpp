#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "monoglue/monoglue.hpp"

namespace mg = monoglue;
using mg::json;

namespace {

std::string read_input(const std::string& path) {
    std::ostringstream ss;
    if (path.empty() || path == "-") {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw mg::error(mg::errc::malformed, "cannot open input file '" + path + "'");
        ss << in.rdbuf();
    }
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw mg::error(mg::errc::malformed, "cannot open output file '" + path + "'");
    out << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

mg::Document parse_single(const std::string& in_path) {
    return mg::parse_document(read_input(in_path));
}

mg::GlueObject expect_glue_object(const mg::Document& doc, const std::string& command) {
    if (const auto* x = std::get_if<mg::GlueObject>(&doc)) return *x;
    throw mg::error(mg::errc::malformed, command + " expects a glue_object document");
}

mg::LocalSystem expect_local_system(const mg::Document& doc, const std::string& command) {
    if (const auto* l = std::get_if<mg::LocalSystem>(&doc)) return *l;
    throw mg::error(mg::errc::malformed, command + " expects a local_system document");
}

mg::HodgeGlueObject expect_hodge_object(const mg::Document& doc, const std::string& command) {
    if (const auto* h = std::get_if<mg::HodgeGlueObject>(&doc)) return *h;
    throw mg::error(mg::errc::malformed, command + " expects a hodge_glue_object document");
}

std::pair<mg::GlueObject, mg::GlueObject> read_object_pair(const std::string& in_path,
                                                           const std::string& command) {
    json j = json::parse(read_input(in_path), nullptr, false);
    if (j.is_discarded()) throw mg::error(mg::errc::malformed, "input is not valid JSON");
    if (!j.is_array() || j.size() != 2)
        throw mg::error(mg::errc::malformed, command + " expects a JSON array of two documents");
    return {expect_glue_object(mg::parse_document_json(j[0]), command),
            expect_glue_object(mg::parse_document_json(j[1]), command)};
}

json graded_pair_to_json(const mg::GradedPair& p) {
    json j;
    j["h_minus1"] = p.h_minus1;
    j["h_0"] = p.h_0;
    return j;
}

json kclass_to_json(const mg::KClass& k) {
    json j;
    j["delta_mult"] = k.delta_mult;
    json factors = json::array();
    for (const auto& [poly, mult] : k.local_factors)
        factors.push_back(json::array({poly.str(), mult}));
    j["local_factors"] = std::move(factors);
    return j;
}

json morphism_maps_to_json(const mg::GlueMorphism& m) {
    json j;
    j["f"] = mg::jsonio::matrix_to_json(m.f);
    j["g"] = mg::jsonio::matrix_to_json(m.g);
    return j;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact calculator for monodromic gluing data"};
    app.require_subcommand(1);

    std::string in_path, out_path, kind_name;
    long twist_n = 0;
    std::uint64_t seed = 0;
    unsigned dims = 4;

    auto add_io = [&](CLI::App* cmd) {
        cmd->add_option("--in", in_path, "input file (default: stdin)");
        cmd->add_option("--out", out_path, "output file (default: stdout)");
        return cmd;
    };

    add_io(app.add_subcommand("validate", "parse a document and echo its canonical form"));
    add_io(app.add_subcommand("fourier", "fourier transform of a glue_object"));
    add_io(app.add_subcommand("dual", "verdier dual of a glue_object"));
    add_io(app.add_subcommand("monodromy", "monodromy pair of a glue_object"));
    add_io(app.add_subcommand("jh", "jordan-holder k-class of a glue_object"));
    add_io(app.add_subcommand("simple", "simplicity test for a glue_object"));
    add_io(app.add_subcommand("stalk", "stalk cohomology at the origin"));
    add_io(app.add_subcommand("costalk", "costalk cohomology at the origin"));
    add_io(app.add_subcommand("cohomology", "global cohomology of a glue_object"));
    auto* extend_cmd = add_io(app.add_subcommand("extend", "extension of a local_system"));
    extend_cmd->add_option("--kind", kind_name, "shriek, star, or intermediate")->required();
    add_io(app.add_subcommand("forget-supports", "the morphism from shriek to star extension"));
    add_io(app.add_subcommand("hom", "hom space basis for a pair of glue_objects"));
    add_io(app.add_subcommand("iso", "isomorphism test for a pair of glue_objects"));
    add_io(app.add_subcommand("hodge-validate", "parse a hodge_glue_object and echo it"));
    add_io(app.add_subcommand("hodge-fourier", "hodge fourier transform"));
    add_io(app.add_subcommand("hodge-dual", "hodge dual"));
    auto* twist_cmd = add_io(app.add_subcommand("twist", "tate twist of an mhs or hodge_glue_object"));
    twist_cmd->add_option("--twist", twist_n, "twist amount n")->required();
    add_io(app.add_subcommand("rat", "underlying glue_object of a hodge_glue_object"));
    auto* selftest_cmd = add_io(app.add_subcommand("selftest", "run the full acceptance suite"));
    selftest_cmd->add_option("--seed", seed, "random seed (default 0)");
    selftest_cmd->add_option("--dims", dims, "dimension cap for random objects (default 4)");

    CLI11_PARSE(app, argc, argv);
    const std::string command = app.get_subcommands().front()->get_name();

    try {
        if (command == "validate") {
            write_output(out_path, dump(mg::serialize_document(parse_single(in_path))));
        } else if (command == "fourier") {
            mg::GlueObject x = expect_glue_object(parse_single(in_path), command);
            write_output(out_path, dump(mg::jsonio::glue_object_to_json(mg::fourier(x))));
        } else if (command == "dual") {
            mg::GlueObject x = expect_glue_object(parse_single(in_path), command);
            write_output(out_path, dump(mg::jsonio::glue_object_to_json(mg::verdier_dual(x))));
        } else if (command == "monodromy") {
            mg::GlueObject x = expect_glue_object(parse_single(in_path), command);
            mg::Monodromy t = mg::monodromy(x);
            json j;
            j["T_psi"] = mg::jsonio::matrix_to_json(t.t_psi);
            j["T_phi"] = mg::jsonio::matrix_to_json(t.t_phi);
            write_output(out_path, dump(j));
        } else if (command == "jh") {
            mg::GlueObject x = expect_glue_object(parse_single(in_path), command);
            write_output(out_path, dump(kclass_to_json(mg::jordan_holder_class(x))));
        } else if (command == "simple") {
            mg::GlueObject x = expect_glue_object(parse_single(in_path), command);
            json j;
            j["simple"] = mg::is_simple(x);
            write_output(out_path, dump(j));
        } else if (command == "stalk" || command == "costalk" || command == "cohomology") {
            mg::GlueObject x = expect_glue_object(parse_single(in_path), command);
            mg::GradedPair p = command == "stalk"     ? mg::stalk_at_zero(x)
                               : command == "costalk" ? mg::costalk_at_zero(x)
                                                      : mg::global_cohomology(x);
            write_output(out_path, dump(graded_pair_to_json(p)));
        } else if (command == "extend") {
            mg::LocalSystem l = expect_local_system(parse_single(in_path), command);
            mg::GlueObject x = mg::extend(l, mg::extend_kind_from_name(kind_name));
            write_output(out_path, dump(mg::jsonio::glue_object_to_json(x)));
        } else if (command == "forget-supports") {
            mg::LocalSystem l = expect_local_system(parse_single(in_path), command);
            write_output(out_path,
                         dump(mg::jsonio::glue_morphism_to_json(mg::forget_supports(l))));
        } else if (command == "hom") {
            auto [x, y] = read_object_pair(in_path, command);
            std::vector<mg::GlueMorphism> basis = mg::hom_space(x, y);
            json j;
            j["dimension"] = basis.size();
            json list = json::array();
            for (const auto& m : basis) list.push_back(morphism_maps_to_json(m));
            j["basis"] = std::move(list);
            write_output(out_path, dump(j));
        } else if (command == "iso") {
            auto [x, y] = read_object_pair(in_path, command);
            mg::IsoResult r = mg::is_isomorphic(x, y);
            json j;
            j["isomorphic"] = r.isomorphic;
            if (r.witness) j["witness"] = morphism_maps_to_json(*r.witness);
            write_output(out_path, dump(j));
        } else if (command == "hodge-validate") {
            mg::HodgeGlueObject h = expect_hodge_object(parse_single(in_path), command);
            write_output(out_path, dump(mg::jsonio::hodge_glue_object_to_json(h)));
        } else if (command == "hodge-fourier") {
            mg::HodgeGlueObject h = expect_hodge_object(parse_single(in_path), command);
            write_output(out_path,
                         dump(mg::jsonio::hodge_glue_object_to_json(mg::hodge_fourier(h))));
        } else if (command == "hodge-dual") {
            mg::HodgeGlueObject h = expect_hodge_object(parse_single(in_path), command);
            write_output(out_path,
                         dump(mg::jsonio::hodge_glue_object_to_json(mg::hodge_dual(h))));
        } else if (command == "twist") {
            mg::Document doc = parse_single(in_path);
            if (const auto* m = std::get_if<mg::MixedHodgeStructure>(&doc)) {
                write_output(out_path, dump(mg::jsonio::mhs_to_json(mg::tate_twist(*m, twist_n))));
            } else if (const auto* h = std::get_if<mg::HodgeGlueObject>(&doc)) {
                write_output(out_path, dump(mg::jsonio::hodge_glue_object_to_json(
                                           mg::hodge_tate_twist(*h, twist_n))));
            } else {
                throw mg::error(mg::errc::malformed,
                                "twist expects an mhs or hodge_glue_object document");
            }
        } else if (command == "rat") {
            mg::HodgeGlueObject h = expect_hodge_object(parse_single(in_path), command);
            write_output(out_path, dump(mg::jsonio::glue_object_to_json(mg::rat_forget(h))));
        } else if (command == "selftest") {
            std::vector<mg::CriterionResult> results = mg::run_selftest(seed, dims);
            write_output(out_path, mg::format_selftest_report(results));
            for (const auto& r : results)
                if (!r.passed()) return 1;
        }
    } catch (const mg::error& e) {
        json j;
        j["error"] = mg::errc_name(e.code());
        j["detail"] = e.what();
        std::cerr << j.dump(2) << "\n";
        return e.exit_code();
    }
    return 0;
}
