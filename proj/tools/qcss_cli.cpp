#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qcss/analysis.hpp"
#include "qcss/correlation.hpp"
#include "qcss/core.hpp"
#include "qcss/field.hpp"
#include "qcss/generators.hpp"
#include "qcss/golden.hpp"
#include "qcss/interleave.hpp"
#include "qcss/io.hpp"

namespace {

using namespace qcss;

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

Permutation load_rho(const std::string& spec, int N) {
    if (spec == "identity") return Permutation::identity(N);
    if (spec == "reversal") return Permutation::reversal(N);
    std::ifstream file(spec);
    if (!file) throw std::runtime_error("cannot open rho file '" + spec + "'");
    Permutation rho;
    rho.name = spec;
    int v;
    while (file >> v) rho.mapping.push_back(v);
    if (rho.size() != N)
        throw std::runtime_error("rho file must list exactly " + std::to_string(N) + " values");
    rho.validate();
    return rho;
}

Engine parse_engine(const std::string& s) {
    if (s == "naive") return Engine::naive;
    if (s == "fft") return Engine::fft;
    throw CLI::ValidationError("--engine", "must be 'naive' or 'fft'");
}

std::string report_text(const CorrelationReport& report) {
    std::ostringstream out;
    out << "measured_max " << fmt(report.measured_max) << "\n";
    out << "peak " << fmt(report.peak) << "\n";
    out << "pair_count " << report.pair_count << "\n";
    out << "argmax_count " << report.argmax.size() << "\n";
    for (const auto& [i, j, tau] : report.argmax)
        out << "argmax " << i << " " << j << " " << tau << "\n";
    for (const auto& [key, cnt] : report.histogram)
        out << "histogram " << fmt(static_cast<double>(key) / 1e6) << " " << cnt << "\n";
    return out.str();
}

int run_field_info(int p, int n) {
    auto ctx = FieldContext::build(p, n);
    std::cout << "p " << ctx.p() << "\n"
              << "n " << ctx.n() << "\n"
              << "q " << ctx.q() << "\n";
    std::cout << "modulus";
    for (int c : ctx.modulus()) std::cout << " " << c;
    std::cout << "\nalpha " << ctx.alpha() << "\n";
    std::vector<long long> dist(p, 0);
    for (long long x = 0; x < ctx.q(); ++x) ++dist[ctx.trace(x)];
    std::cout << "trace_distribution";
    for (long long c : dist) std::cout << " " << c;
    std::cout << "\n";
    return 0;
}

int run_analyze(const std::string& input, Engine engine, const std::string& report_path) {
    auto fam = load_family(input);
    CorrelationReport report = std::visit(
        [&](const auto& f) { return measure_theta_max(f, engine); }, fam);
    long long M, K, N;
    if (std::holds_alternative<QcssFamily>(fam)) {
        const auto& q = std::get<QcssFamily>(fam);
        M = q.size(); K = q.flock(); N = q.length();
    } else {
        const auto& s = std::get<SequenceFamily>(fam);
        M = s.size(); K = 1; N = s.period();
    }
    std::cout << "measured_theta_max " << fmt(report.measured_max) << "\n";
    std::cout << "peak " << fmt(report.peak) << "\n";
    if (M > K) {
        const double bound = qcss_lower_bound(M, K, N);
        std::cout << "bound " << fmt(bound) << "\n";
        if (bound > 0) std::cout << "ratio " << fmt(report.measured_max / bound) << "\n";
    }
    if (!report_path.empty()) {
        std::ofstream out(report_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write '" + report_path + "'");
        out << report_text(report);
    }
    return 0;
}

int run_verify(const std::string& input, Engine engine) {
    auto fam = load_family(input);
    Verdict v = std::visit([&](const auto& f) { return verify_declared(f, engine); }, fam);
    std::cout << "kind " << (v.kind.empty() ? "unknown" : v.kind) << "\n"
              << "measured " << fmt(v.measured) << "\n"
              << "declared " << fmt(v.declared) << "\n"
              << "bound " << fmt(v.bound) << "\n"
              << "within_declared " << (v.within_declared ? "yes" : "no") << "\n"
              << "meets_bound " << (v.meets_bound ? "yes" : "no") << "\n";
    if (v.case_structure_ok)
        std::cout << "case_structure " << (*v.case_structure_ok ? "pass" : "fail") << "\n";
    std::cout << "verdict " << (v.pass() ? "pass" : "fail") << "\n";
    return v.pass() ? 0 : 1;
}

int run_trend(const std::string& kind_name, const std::vector<long long>& points) {
    FamilyKind kind;
    if (kind_name == "prop1") kind = FamilyKind::prop1_interleaved;
    else if (kind_name == "thm41") kind = FamilyKind::thm41;
    else if (kind_name == "thm42") kind = FamilyKind::thm42;
    else throw CLI::ValidationError("--kind", "must be prop1, thm41 or thm42");

    auto table = ratio_trend(kind, points);
    if (kind == FamilyKind::prop1_interleaved)
        std::cout << "note K per point is the smallest nontrivial divisor of q-1\n";
    std::cout << "size M K N measured bound ratio\n";
    for (const auto& row : table.rows)
        std::cout << row.size_param << " " << row.M << " " << row.K << " " << row.N << " "
                  << fmt(row.measured) << " " << fmt(row.bound) << " " << fmt(row.ratio) << "\n";
    for (const auto& notice : table.notices) std::cout << "notice " << notice << "\n";
    std::cout << "trend " << table.direction << "\n";
    return 0;
}

int run_export_golden(const std::string& dir) {
    std::filesystem::create_directories(dir);
    for (const auto& entry : golden::corpus()) {
        std::string path = dir + "/" + std::string(entry.filename);
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write '" + path + "'");
        out << entry.document;
        std::cout << "wrote " << path << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Periodic quasi-complementary sequence set toolkit"};
    app.require_subcommand(1);

    int p = 0, n = 1, len = 0, flock = 0, row = 0;
    std::string input, output, report_path, rho_spec = "identity", engine_name = "naive";
    std::string kind_name, dir = ".";
    std::vector<long long> points;

    auto* field_info = app.add_subcommand("field-info", "Describe the canonical GF(p^n)");
    field_info->add_option("--p", p, "characteristic (prime)")->required();
    field_info->add_option("--n", n, "extension degree");

    auto* gen = app.add_subcommand("gen", "Generate a sequence/QCSS family");
    gen->require_subcommand(1);
    auto* gen_prop1 = gen->add_subcommand("prop1", "Character-product sequence family over GF(p^n)");
    gen_prop1->add_option("--p", p)->required();
    gen_prop1->add_option("--n", n);
    gen_prop1->add_option("--output", output)->required();
    auto* gen_t41 = gen->add_subcommand("thm41", "Root-of-unity N x N QCSS family");
    gen_t41->add_option("--len", len)->required();
    gen_t41->add_option("--rho", rho_spec, "identity | reversal | file");
    gen_t41->add_option("--output", output)->required();
    auto* gen_t42 = gen->add_subcommand("thm42", "Row-reduced (N-1) x N QCSS family");
    gen_t42->add_option("--len", len)->required();
    gen_t42->add_option("--rho", rho_spec);
    gen_t42->add_option("--output", output)->required();
    auto* gen_del = gen->add_subcommand("thm41-del", "Full family with one row deleted");
    gen_del->add_option("--len", len)->required();
    gen_del->add_option("--row", row, "1-based row to delete")->required();
    gen_del->add_option("--rho", rho_spec);
    gen_del->add_option("--output", output)->required();

    auto* il = app.add_subcommand("interleave", "Interleave a sequence family into matrices");
    il->add_option("--input", input)->required();
    il->add_option("--flock", flock)->required();
    il->add_option("--output", output)->required();

    auto* analyze = app.add_subcommand("analyze", "Measure the correlation spectrum of a family");
    analyze->add_option("--input", input)->required();
    analyze->add_option("--engine", engine_name, "naive | fft");
    analyze->add_option("--report", report_path, "write the full report here");

    auto* verify = app.add_subcommand("verify", "Check declared parameters against measurement");
    verify->add_option("--input", input)->required();
    verify->add_option("--engine", engine_name);

    auto* trend = app.add_subcommand("trend", "Optimality-ratio sweep");
    trend->add_option("--kind", kind_name, "prop1 | thm41 | thm42")->required();
    trend->add_option("--points", points, "sweep points (q or N)")->required()->delimiter(',');

    auto* golden_cmd = app.add_subcommand("export-golden", "Write the worked-example corpus");
    golden_cmd->add_option("--dir", dir, "target directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*field_info) return run_field_info(p, n);
        if (*gen_prop1) {
            auto ctx = FieldContext::build(p, n);
            save_family(gen_prop1_family(ctx), output);
            return 0;
        }
        if (*gen_t41) {
            save_family(gen_thm41_family(len, load_rho(rho_spec, len)), output);
            return 0;
        }
        if (*gen_t42) {
            save_family(gen_thm42_family(len, load_rho(rho_spec, len)), output);
            return 0;
        }
        if (*gen_del) {
            save_family(gen_thm41_row_deleted(len, load_rho(rho_spec, len), row), output);
            return 0;
        }
        if (*il) {
            auto fam = load_family(input);
            if (!std::holds_alternative<SequenceFamily>(fam))
                throw std::runtime_error("interleave expects a QSEQ1 input");
            const auto& seqs = std::get<SequenceFamily>(fam);
            auto mats = interleave_family(seqs, flock);
            if (!mats.qualifies_as_qcss())
                std::cerr << "warning: M <= K, output is not a QCSS (M = " << mats.size()
                          << ", K = " << mats.flock() << ")\n";
            save_family(mats, output);
            return 0;
        }
        if (*analyze) return run_analyze(input, parse_engine(engine_name), report_path);
        if (*verify) return run_verify(input, parse_engine(engine_name));
        if (*trend) return run_trend(kind_name, points);
        if (*golden_cmd) return run_export_golden(dir);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
