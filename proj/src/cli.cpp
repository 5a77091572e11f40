#include "pcvp/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pcvp/io.hpp"
#include "pcvp/solvers.hpp"
#include "pcvp/treedepth.hpp"

namespace pcvp {

namespace {

constexpr int kExitNo = 1;
constexpr int kExitDecodeFailure = 2;
constexpr int kExitUsage = 64;
constexpr int kExitParse = 65;
constexpr int kExitInternal = 70;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::invalid_argument("cannot open '" + path + "' for writing");
    out << bytes;
}

std::string format_permutation(const Permutation& rho) {
    std::string out;
    for (int p = 1; p <= rho.k(); ++p) {
        if (p > 1)
            out += ' ';
        out += std::to_string(rho(p));
    }
    return out;
}

int cmd_reduce(const std::string& in_path, const std::string& out_path) {
    VPInstance vp = reduce(decode_pc(read_file(in_path)));
    write_file(out_path, encode_instance(vp));
    return 0;
}

int cmd_solve_pc(const std::string& in_path) {
    auto rho = solve_pc_bruteforce(decode_pc(read_file(in_path)));
    if (!rho) {
        std::cout << "NONE\n";
        return kExitNo;
    }
    std::cout << format_permutation(*rho) << "\n";
    return 0;
}

int cmd_solve_vp(const std::string& in_path, const std::string& mode,
                 const std::string& out_path) {
    VPInstance vp = decode_instance(read_file(in_path));
    std::optional<DeletionSet> witness;
    if (mode == "structured") {
        witness = structured_vp_decide(vp);
    } else if (mode == "oracle") {
        witness = small_vp_oracle(vp.graph, static_cast<int>(vp.budget),
                                  helper_vertices(vp.graph));
    } else {
        throw std::invalid_argument("unknown mode '" + mode + "'");
    }
    if (!witness) {
        std::cout << "NO\n";
        return kExitNo;
    }
    std::string text = encode_witness(*witness);
    std::cout << text;
    if (!out_path.empty())
        write_file(out_path, text);
    return 0;
}

int cmd_verify(const std::string& in_path, const std::string& witness_path) {
    VPInstance vp = decode_instance(read_file(in_path));
    DeletionSet x = decode_witness(read_file(witness_path));
    try {
        if (verify_deletion_witness(vp, x)) {
            std::cout << "VALID\n";
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        // witness talks about vertices the instance does not have
        throw ParseError(0, e.what());
    }
    std::cout << "INVALID\n";
    return kExitNo;
}

int cmd_decode_witness(const std::string& in_path,
                       const std::string& witness_path) {
    VPInstance vp = decode_instance(read_file(in_path));
    DeletionSet x = decode_witness(read_file(witness_path));
    try {
        std::cout << format_permutation(decode_permutation(vp, x)) << "\n";
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitDecodeFailure;
    }
    return 0;
}

int cmd_treedepth_cert(const std::string& in_path, const std::string& out_path,
                       const std::string& check_path) {
    VPInstance vp = decode_instance(read_file(in_path));
    if (!check_path.empty()) {
        EliminationForest ef = decode_forest(read_file(check_path));
        bool ok;
        try {
            ok = validate_elimination_forest(vp.graph, ef);
        } catch (const std::invalid_argument& e) {
            throw ParseError(0, e.what());
        }
        std::cout << (ok ? "VALID" : "INVALID") << "\n";
        return ok ? 0 : kExitNo;
    }
    EliminationForest ef = build_elimination_forest(vp);
    write_file(out_path, encode_forest(ef));
    std::cout << "depth " << ef.depth << "\n";
    return 0;
}

int cmd_gadget(int s, const std::string& out_path) {
    write_file(out_path, encode_instance(gadget_instance(s)));
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"workbench for grid permutation cliques and vertex planarization"};
    app.require_subcommand(1);

    std::string in_path, out_path, witness_path, check_path;
    std::string mode = "structured";
    int choice_s = 0;

    auto* reduce_cmd = app.add_subcommand(
        "reduce", "translate a grid instance into a deletion instance");
    reduce_cmd->add_option("--in", in_path)->required();
    reduce_cmd->add_option("--out", out_path)->required();

    auto* solve_pc_cmd =
        app.add_subcommand("solve-pc", "exhaustive permutation-clique search");
    solve_pc_cmd->add_option("--in", in_path)->required();

    auto* solve_vp_cmd =
        app.add_subcommand("solve-vp", "decide a deletion instance");
    solve_vp_cmd->add_option("--in", in_path)->required();
    solve_vp_cmd->add_option("--mode", mode)
        ->check(CLI::IsMember({"structured", "oracle"}));
    solve_vp_cmd->add_option("--out", out_path);

    auto* verify_cmd =
        app.add_subcommand("verify", "check a deletion witness");
    verify_cmd->add_option("--in", in_path)->required();
    verify_cmd->add_option("--witness", witness_path)->required();

    auto* decode_cmd = app.add_subcommand(
        "decode-witness", "read the permutation off a tight witness");
    decode_cmd->add_option("--in", in_path)->required();
    decode_cmd->add_option("--witness", witness_path)->required();

    auto* cert_cmd = app.add_subcommand(
        "treedepth-cert", "build or validate an elimination forest");
    cert_cmd->add_option("--in", in_path)->required();
    cert_cmd->add_option("--out", out_path);
    cert_cmd->add_option("--check", check_path);

    auto* gadget_cmd =
        app.add_subcommand("gadget", "emit a standalone choice gadget");
    gadget_cmd->add_option("--choice", choice_s)->required();
    gadget_cmd->add_option("--out", out_path)->required();

    std::vector<std::string> argv(args);
    try {
        app.parse(std::vector<std::string>(argv.rbegin(), argv.rend()));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (reduce_cmd->parsed())
            return cmd_reduce(in_path, out_path);
        if (solve_pc_cmd->parsed())
            return cmd_solve_pc(in_path);
        if (solve_vp_cmd->parsed())
            return cmd_solve_vp(in_path, mode, out_path);
        if (verify_cmd->parsed())
            return cmd_verify(in_path, witness_path);
        if (decode_cmd->parsed())
            return cmd_decode_witness(in_path, witness_path);
        if (cert_cmd->parsed()) {
            if (out_path.empty() == check_path.empty()) {
                std::cerr << "treedepth-cert needs exactly one of --out/--check\n";
                return kExitUsage;
            }
            return cmd_treedepth_cert(in_path, out_path, check_path);
        }
        if (gadget_cmd->parsed())
            return cmd_gadget(choice_s, out_path);
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

}  // namespace pcvp
