#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "zest/io.hpp"

using namespace zest;
using nlohmann::json;

namespace {

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& ex) {
        throw ParseError("cannot parse " + path + ": " + ex.what());
    }
    return j;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out)
        throw Error("cannot write " + path);
    out << content;
}

void emit_report(const VerificationReport& rep, const std::string& format,
                 const std::string& out_path) {
    std::string text =
        format == "json" ? report_to_json(rep).dump(2) + "\n" : report_to_text(rep);
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text);
}

std::string datum_summary(const AssociativeZestingDatum& d) {
    std::string phi = "Phi[";
    bool first = true;
    for (const auto& c : d.phi.generator_images()) {
        if (!first)
            phi += ",";
        first = false;
        phi += "(";
        for (std::size_t i = 0; i < c.exponents().size(); ++i)
            phi += (i ? "," : "") + std::to_string(c.exponents()[i]);
        phi += ")";
    }
    phi += "]";
    const FiniteGroup& g = d.grading_group();
    GroupElement nu = d.yd.gamma.identity();
    TorsionScalar q = TorsionScalar::one();
    if (g.order() > 1) {
        GroupElement top{{g.order() - 1}};
        GroupElement one{{1}};
        nu = d.lambda.at(top, one);       // (n-1)+1 >= n, so this entry is nu
        q = d.omega.at(top, one, one);    // likewise q^1
    }
    return phi + " nu=" + d.yd.gamma.str(nu) + " q=" + scalar_to_string(q);
}

int run_enumeration(const YetterDrinfeldDatum& yd, const Subgroup& gamma0,
                    const std::optional<std::vector<GroupElement>>& nu_reps,
                    const std::string& format, const std::string& out_dir,
                    const std::string& stem) {
    auto data = enumerate_cyclic_zestings(yd, gamma0, nu_reps);
    int n = universal_grading(yd).group().order();
    std::size_t families = n > 0 ? data.size() / static_cast<std::size_t>(n) : 0;
    if (format == "json") {
        json out;
        out["count"] = data.size();
        out["families"] = families;
        out["roots_per_family"] = n;
        json list = json::array();
        for (const auto& d : data)
            list.push_back(datum_to_json(d));
        out["data"] = list;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << data.size() << " zestings (" << families << " famil"
                  << (families == 1 ? "y" : "ies") << " x " << n << " root" << (n == 1 ? "" : "s")
                  << ")\n";
        for (const auto& d : data)
            std::cout << "  " << datum_summary(d) << "\n";
    }
    if (!out_dir.empty()) {
        for (std::size_t i = 0; i < data.size(); ++i)
            write_file(out_dir + "/" + stem + "_" + std::to_string(i) + ".json",
                       datum_to_json(data[i]).dump(2) + "\n");
    }
    bool all_ok = true;
    for (const auto& d : data)
        if (!verify_assoc_datum(d).all_pass())
            all_ok = false;
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"construct, enumerate and verify zestings of pointed group data"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

    // examples
    auto* cmd_examples = app.add_subcommand("examples", "write built-in example datum files");
    std::string ex_out = ".";
    cmd_examples->add_option("--out", ex_out, "output directory");

    // enumerate
    auto* cmd_enum = app.add_subcommand("enumerate", "enumerate cyclic zestings of a built-in family");
    std::string family;
    int opt_n = 2, opt_ell = 9, opt_k = 1;
    std::string enum_out;
    cmd_enum->add_option("family", family, "a12 or fk3")->required()->check(CLI::IsMember({"a12", "fk3"}));
    cmd_enum->add_option("--n", opt_n, "a12 parameter n");
    cmd_enum->add_option("--ell", opt_ell, "fk3 parameter ell");
    cmd_enum->add_option("--k", opt_k, "fk3 parameter k");
    cmd_enum->add_option("--out", enum_out, "directory for datum files");

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "verify a datum file");
    std::string verify_path, verify_out;
    bool braided = false;
    cmd_verify->add_option("file", verify_path, "datum file")->required();
    cmd_verify->add_flag("--braided", braided, "treat the file as a braided datum");
    cmd_verify->add_option("--out", verify_out, "write the report to this file");

    // export
    auto* cmd_export = app.add_subcommand("export", "export structure-constant tables");
    std::string export_path, export_out;
    bool export_braided = false, force = false;
    cmd_export->add_option("file", export_path, "datum file")->required();
    cmd_export->add_option("--out", export_out, "output file")->required();
    cmd_export->add_flag("--braided", export_braided, "treat the file as a braided datum");
    cmd_export->add_flag("--force", force, "export even when verification fails");

    // cohomology
    auto* cmd_coh = app.add_subcommand("cohomology", "brute-force H^n(C_N, C_M)");
    int coh_arity = 2, coh_n = 2, coh_m = 2;
    std::uint64_t budget = 20'000'000;
    cmd_coh->add_option("--arity", coh_arity, "cochain arity")->check(CLI::Range(2, 3));
    cmd_coh->add_option("--group-n", coh_n, "order of the cyclic group")->required();
    cmd_coh->add_option("--coeff-m", coh_m, "order of the cyclic coefficient group")->required();
    cmd_coh->add_option("--budget", budget, "enumeration budget");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_examples) {
            YetterDrinfeldDatum a12 = builtin_a12(2);
            auto a12_data = enumerate_cyclic_zestings(
                a12, default_gamma0_a12(a12), std::vector<GroupElement>{a12.degrees[0]});
            write_file(ex_out + "/a12_n2.json", datum_to_json(a12_data.front()).dump(2) + "\n");

            YetterDrinfeldDatum fk3 = builtin_fk3(9, 1);
            auto fk3_data = enumerate_cyclic_zestings(fk3, default_gamma0_fk3(fk3));
            write_file(ex_out + "/fk3_ell9_k1.json", datum_to_json(fk3_data.front()).dump(2) + "\n");

            BraidedZestingDatum z4 = builtin_z4(TorsionScalar::minus_one(), TorsionScalar::root(1, 4));
            write_file(ex_out + "/z4.json", braided_to_json(z4).dump(2) + "\n");

            BraidedZestingDatum z4_bad = builtin_z4(TorsionScalar::root(1, 4), TorsionScalar::root(1, 8));
            write_file(ex_out + "/z4_zeta_i.json", braided_to_json(z4_bad).dump(2) + "\n");

            std::cout << "a12_n2.json fk3_ell9_k1.json z4.json z4_zeta_i.json\n";
            return 0;
        }
        if (*cmd_enum) {
            if (family == "a12") {
                YetterDrinfeldDatum yd = builtin_a12(opt_n);
                return run_enumeration(yd, default_gamma0_a12(yd),
                                       std::vector<GroupElement>{yd.degrees[0]}, format, enum_out,
                                       "a12_n" + std::to_string(opt_n));
            }
            YetterDrinfeldDatum yd = builtin_fk3(opt_ell, opt_k);
            return run_enumeration(yd, default_gamma0_fk3(yd), std::nullopt, format, enum_out,
                                   "fk3_ell" + std::to_string(opt_ell) + "_k" + std::to_string(opt_k));
        }
        if (*cmd_verify) {
            json j = load_json(verify_path);
            VerificationReport rep;
            if (braided) {
                BraidedZestingDatum bd = braided_from_json(j);
                rep = verify_braided_datum(bd);
                if (rep.all_pass()) {
                    ZestedGroupAlgebra z = build_braided_zested(bd, true);
                    auto alg = verify_coquasi_bialgebra(z);
                    auto tri = verify_coquasitriangular(z);
                    rep.rows.insert(rep.rows.end(), alg.rows.begin(), alg.rows.end());
                    rep.rows.insert(rep.rows.end(), tri.rows.begin(), tri.rows.end());
                }
            } else {
                AssociativeZestingDatum d = datum_from_json(j);
                rep = verify_assoc_datum(d);
                if (rep.all_pass()) {
                    auto alg = verify_coquasi_bialgebra(build_zested(d, true));
                    rep.rows.insert(rep.rows.end(), alg.rows.begin(), alg.rows.end());
                }
            }
            emit_report(rep, format, verify_out);
            return rep.all_pass() ? 0 : 1;
        }
        if (*cmd_export) {
            json j = load_json(export_path);
            json out;
            if (export_braided) {
                BraidedZestingDatum bd = braided_from_json(j);
                out = algebra_to_json(build_braided_zested(bd, force), braided_to_json(bd));
            } else {
                AssociativeZestingDatum d = datum_from_json(j);
                out = algebra_to_json(build_zested(d, force), datum_to_json(d));
            }
            write_file(export_out, out.dump(2) + "\n");
            return 0;
        }
        if (*cmd_coh) {
            auto classes = enumerate_cohomology(coh_arity, FiniteGroup::cyclic(coh_n),
                                                UnityCoeff{coh_m}, budget);
            if (format == "json") {
                json out = {{"arity", coh_arity},
                            {"group_n", coh_n},
                            {"coeff_m", coh_m},
                            {"class_count", classes.class_count}};
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << "H^" << coh_arity << "(C_" << coh_n << ", C_" << coh_m
                          << ") has " << classes.class_count << " classes\n";
            }
            return 0;
        }
    } catch (const InvalidDatum& ex) {
        std::cerr << "error: " << ex.what() << "\n" << report_to_text(ex.report);
        return 1;
    } catch (const Error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 1;
}
