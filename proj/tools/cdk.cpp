#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "cdk/bench.hpp"
#include "cdk/exprlang.hpp"
#include "cdk/json_io.hpp"
#include "cdk/sampling.hpp"
#include "cdk/suites.hpp"
#include "cdk/table.hpp"
#include "cdk/witnesses.hpp"

namespace {

using namespace cdk;

std::ostream* open_output(const std::string& path, std::ofstream& file) {
    if (path.empty()) return &std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    return &file;
}

Element eval_element(const std::string& text, int level) {
    EvalContext ctx;
    ctx.level = level;
    Value v = eval(parse(text), ctx);
    if (std::holds_alternative<Rat>(v)) {
        Element e(level);
        e.coeffs[0] = std::get<Rat>(v);
        return e;
    }
    return std::get<Element>(v);
}

std::vector<long> parse_coeff_list(const std::string& s) {
    std::vector<long> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stol(item));
    }
    return out;
}

int cmd_eval(int level, const std::string& expr_text) {
    EvalContext ctx;
    ctx.level = level;
    std::cout << format(eval(parse(expr_text), ctx)) << "\n";
    return 0;
}

int cmd_repl(int level) {
    EvalContext ctx;
    ctx.level = level;
    std::string line;
    while (std::getline(std::cin, line)) {
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        try {
            if (line[first] == ':') {
                std::istringstream is(line.substr(first + 1));
                std::string cmd;
                is >> cmd;
                if (cmd == "quit") break;
                if (cmd == "level") {
                    int n;
                    if (!(is >> n) || n < 0 || n > kMaxTableLevel)
                        throw std::runtime_error("usage: :level n  (0 <= n <= 10)");
                    ctx.level = n;
                    ctx.bindings.clear();
                    std::cout << "level " << n << "\n";
                    continue;
                }
                throw std::runtime_error("unknown command :" + cmd);
            }
            std::istringstream is(line);
            std::string head;
            is >> head;
            if (head == "let") {
                std::string name, eq;
                is >> name >> eq;
                if (eq != "=") throw std::runtime_error("usage: let name = expr");
                std::string rest;
                std::getline(is, rest);
                Element val = eval_element(rest, ctx.level);
                ctx.bindings[name] = val;
                std::cout << name << " = " << format(val) << "\n";
                continue;
            }
            std::cout << format(eval(parse(line), ctx)) << "\n";
        } catch (const LangError& e) {
            std::cout << "error: " << e.what() << " (offset " << e.offset << ")\n";
        } catch (const std::exception& e) {
            std::cout << "error: " << e.what() << "\n";
        }
    }
    return 0;
}

int cmd_table(int level, const std::string& fmt, const std::string& out_path) {
    std::ofstream file;
    std::ostream& os = *open_output(out_path, file);
    const StructureTable& t = structure_table(level);
    if (fmt == "csv")
        os << table_to_csv(t);
    else if (fmt == "json") {
        Json rows = Json::array();
        for (std::size_t i = 0; i < t.dim(); ++i) {
            Json row = Json::array();
            for (std::size_t j = 0; j < t.dim(); ++j)
                row.push_back(Json{{"sign", int(t.sign_at(i, j))}, {"index", t.index_at(i, j)}});
            rows.push_back(row);
        }
        os << Json{{"level", level}, {"table", rows}}.dump() << "\n";
    } else
        os << table_to_grid(t);
    return 0;
}

int cmd_check(const std::string& suite, int level, int samples, unsigned long long seed) {
    const SuiteReport rep = run_suite(suite, level, samples, seed);
    for (const std::string& l : rep.lines) std::cout << l << "\n";
    return rep.pass ? 0 : 1;
}

int cmd_zdiv_search(int level, int support, const std::string& coeffs, bool right,
                    const std::string& fmt, const std::string& out_path) {
    SearchParams params;
    params.level = level;
    params.support = support;
    params.coeffs = parse_coeff_list(coeffs);
    params.right = right;
    const auto pairs = search_pairs(params);

    // Per-candidate annihilator dimension: pairs sharing x are consecutive.
    std::vector<std::size_t> ann_dim(pairs.size());
    for (std::size_t i = 0; i < pairs.size();) {
        std::size_t j = i;
        while (j < pairs.size() && pairs[j].x == pairs[i].x) ++j;
        for (std::size_t k = i; k < j; ++k) ann_dim[k] = j - i;
        i = j;
    }

    std::ofstream file;
    std::ostream& os = *open_output(out_path, file);
    if (fmt == "csv") {
        os << "x_support,x_coeffs,ann_dim\n";
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            std::string idx, cf;
            for (std::size_t k = 0; k < pairs[i].x.dim(); ++k) {
                if (pairs[i].x.coeffs[k] == 0) continue;
                if (!idx.empty()) {
                    idx += ";";
                    cf += ";";
                }
                idx += std::to_string(k);
                cf += rat_to_string(pairs[i].x.coeffs[k]);
            }
            os << idx << "," << cf << "," << ann_dim[i] << "\n";
        }
    } else {
        for (std::size_t i = 0; i < pairs.size(); ++i)
            os << pair_to_json(pairs[i], ann_dim[i]).dump() << "\n";
    }
    std::cerr << "pairs: " << pairs.size() << "\n";
    return 0;
}

Monomorphism load_mono(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    Json j;
    in >> j;
    return monomorphism_from_json(j);
}

int cmd_mono_verify(const std::string& path) {
    const VerifyReport rep = verify_monomorphism(load_mono(path));
    std::cout << (rep.ok ? "verified" : "violation: " + rep.message) << "\n";
    return rep.ok ? 0 : 1;
}

int cmd_mono_classify(const std::string& path) {
    const Monomorphism map = load_mono(path);
    const VerifyReport rep = verify_monomorphism(map);
    if (!rep.ok) {
        std::cout << "violation: " << rep.message << "\n";
        return 1;
    }
    std::cout << classification_to_json(classify_type(map)).dump() << "\n";
    return 0;
}

int cmd_sub_H(int level, const std::string& a_text, const std::string& out_path) {
    const Element a = eval_element(a_text, level);
    const Subalgebra sub = quaternion_H(a);
    Json j = subalgebra_to_json(sub);
    j["iso_to_level_2"] = check_iso_to_level(sub, 2);
    std::ofstream file;
    *open_output(out_path, file) << j.dump() << "\n";
    return 0;
}

int cmd_sub_O(int level, const std::string& a_text, const std::string& b_text,
              const std::string& c_text, const std::string& out_path) {
    const Element a = eval_element(a_text, level);
    const Element b = eval_element(b_text, level);
    const Element c = eval_element(c_text, level);
    const Subalgebra sub = octonion_O(a, b, c);
    Json j = subalgebra_to_json(sub);
    j["iso_to_level_3"] = check_iso_to_level(sub, 3);
    std::ofstream file;
    *open_output(out_path, file) << j.dump() << "\n";
    return 0;
}

int cmd_bench(int level, int iters, unsigned long long seed) {
    const BenchResult r = bench_mul(level, iters, seed);
    std::cout << "level " << r.level << ", " << r.iters << " basis products\n";
    std::cout << "recursive: " << r.recursive_seconds << " s\n";
    std::cout << "table:     " << r.table_seconds << " s (including table build)\n";
    std::cout << "speedup:   " << r.speedup << "x\n";
    if (!r.results_equal) {
        std::cout << "MISMATCH between recursive and table results\n";
        return 1;
    }
    std::cout << "results identical\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cdk: exact Cayley-Dickson algebra toolkit"};
    app.require_subcommand(1);

    int level = 3;
    int samples = 200;
    unsigned long long seed = 1;
    int support = 2;
    int iters = 1000;
    std::string expr_text, fmt = "text", out_path, file_path, suite_name;
    std::string coeffs = "-1,1", a_text, b_text, c_text;
    bool right = false;

    auto* eval_cmd = app.add_subcommand("eval", "evaluate one expression");
    eval_cmd->add_option("-n,--level", level, "algebra level");
    eval_cmd->add_option("expr", expr_text, "expression")->required();

    auto* repl_cmd = app.add_subcommand("repl", "interactive evaluator");
    repl_cmd->add_option("-n,--level", level, "algebra level");

    auto* table_cmd = app.add_subcommand("table", "emit the structure table");
    table_cmd->add_option("-n,--level", level, "algebra level");
    table_cmd->add_option("--format", fmt, "text | csv | json");
    table_cmd->add_option("-o,--output", out_path, "output file");

    auto* check_cmd = app.add_subcommand("check", "run a property suite");
    check_cmd->add_option("suite", suite_name, "doubly_pure | ladder | norm_mult | flexible | level_bridge")
        ->required();
    check_cmd->add_option("-n,--level", level, "algebra level");
    check_cmd->add_option("--samples", samples, "sample count");
    check_cmd->add_option("--seed", seed, "PRNG seed");

    auto* zdiv_cmd = app.add_subcommand("zdiv", "zero-divisor tooling");
    auto* search_cmd = zdiv_cmd->add_subcommand("search", "sparse-support search");
    search_cmd->add_option("-n,--level", level, "algebra level");
    search_cmd->add_option("--support", support, "max nonzero coefficients");
    search_cmd->add_option("--coeffs", coeffs, "comma-separated coefficient set");
    search_cmd->add_flag("--right", right, "search yx = 0 instead of xy = 0");
    search_cmd->add_option("--format", fmt, "json lines (default) | csv");
    search_cmd->add_option("-o,--output", out_path, "output file");

    auto* mono_cmd = app.add_subcommand("mono", "monomorphism tooling");
    auto* verify_cmd = mono_cmd->add_subcommand("verify", "verify a candidate matrix");
    verify_cmd->add_option("--file", file_path, "monomorphism JSON")->required();
    auto* classify_cmd = mono_cmd->add_subcommand("classify", "verify and classify");
    classify_cmd->add_option("--file", file_path, "monomorphism JSON")->required();

    auto* sub_cmd = app.add_subcommand("sub", "subalgebra constructors");
    auto* subH_cmd = sub_cmd->add_subcommand("H", "quaternion copy H_a");
    subH_cmd->add_option("-n,--level", level, "algebra level");
    subH_cmd->add_option("--a", a_text, "doubly pure generator expression")->required();
    subH_cmd->add_option("-o,--output", out_path, "output file");
    auto* subO_cmd = sub_cmd->add_subcommand("O", "octonion copy O(a;b;c)");
    subO_cmd->add_option("-n,--level", level, "algebra level");
    subO_cmd->add_option("--a", a_text, "special triple member a")->required();
    subO_cmd->add_option("--b", b_text, "special triple member b")->required();
    subO_cmd->add_option("--c", c_text, "special triple member c")->required();
    subO_cmd->add_option("-o,--output", out_path, "output file");

    auto* bench_cmd = app.add_subcommand("bench", "performance comparisons");
    auto* bench_mul_cmd = bench_cmd->add_subcommand("mul", "table vs recursive basis products");
    bench_mul_cmd->add_option("-n,--level", level, "algebra level");
    bench_mul_cmd->add_option("--iters", iters, "workload size");
    bench_mul_cmd->add_option("--seed", seed, "PRNG seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*eval_cmd) return cmd_eval(level, expr_text);
        if (*repl_cmd) return cmd_repl(level);
        if (*table_cmd) return cmd_table(level, fmt, out_path);
        if (*check_cmd) return cmd_check(suite_name, level, samples, seed);
        if (*search_cmd) return cmd_zdiv_search(level, support, coeffs, right, fmt, out_path);
        if (*verify_cmd) return cmd_mono_verify(file_path);
        if (*classify_cmd) return cmd_mono_classify(file_path);
        if (*subH_cmd) return cmd_sub_H(level, a_text, out_path);
        if (*subO_cmd) return cmd_sub_O(level, a_text, b_text, c_text, out_path);
        if (*bench_mul_cmd) return cmd_bench(level, iters, seed);
        std::cerr << "error: missing subcommand\n";
        return 2;
    } catch (const LangError& e) {
        std::cerr << "error: " << e.what() << " (offset " << e.offset << ")\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
