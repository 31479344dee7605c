// Command-line front end: construction, enumeration, concatenated analysis,
// CRC search, bounds and visited-node reporting. Payload goes to stdout,
// diagnostics to stderr; identical invocations emit identical bytes apart
// from the elapsed_ms field.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pmwd/analysis.hpp"
#include "pmwd/construct.hpp"
#include "pmwd/enumerate.hpp"
#include "pmwd/io.hpp"
#include "pmwd/oracle.hpp"

namespace {

using pmwd::Json;

class Timer {
public:
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Rates come as fractions ("1/2") or decimals; K = round(N * R) half up.
uint32_t rate_to_k(const std::string& rate, uint32_t big_n) {
    double value = 0.0;
    const auto slash = rate.find('/');
    if (slash != std::string::npos) {
        const double num = std::stod(rate.substr(0, slash));
        const double den = std::stod(rate.substr(slash + 1));
        if (den <= 0.0)
            throw CLI::ValidationError("--rate", "denominator must be positive");
        value = num / den;
    } else {
        value = std::stod(rate);
    }
    if (value <= 0.0 || value > 1.0)
        throw CLI::ValidationError("--rate", "rate must be in (0, 1]");
    const uint32_t k = static_cast<uint32_t>(std::floor(double(big_n) * value + 0.5));
    return std::max<uint32_t>(1, std::min(big_n, k));
}

// Inline construction flags shared by the analysis subcommands.
struct SpecArgs {
    std::string spec_path;
    int n = 0;
    uint32_t k = 0;
    std::string rate;
    std::string construct = "pw";
    double design_snr_db = 0.0;
    bool has_snr = false;
    std::vector<uint32_t> info_set;

    void attach(CLI::App* cmd, bool spec_file_allowed = true) {
        if (spec_file_allowed)
            cmd->add_option("--spec", spec_path, "CodeSpec document (JSON file)");
        cmd->add_option("--n", n, "log2 of the code length");
        cmd->add_option("--k", k, "information length K");
        cmd->add_option("--rate", rate, "code rate, fraction (1/2) or decimal");
        cmd->add_option("--construct", construct, "construction: pw | ga | explicit")
            ->check(CLI::IsMember({"pw", "ga", "explicit"}));
        cmd->add_option("--design-snr-db", design_snr_db, "GA design Eb/N0 in dB")
            ->each([this](const std::string&) { has_snr = true; });
        cmd->add_option("--info-set", info_set,
                        "explicit info set A, 1-based ascending (comma separated)")
            ->delimiter(',');
    }

    pmwd::CodeSpecDoc resolve() const {
        if (!spec_path.empty()) {
            std::ifstream in(spec_path);
            if (!in)
                throw CLI::ValidationError("--spec", "cannot open " + spec_path);
            Json doc = Json::parse(in);
            return pmwd::CodeSpecDoc::from_json(doc);
        }
        if (n < 1)
            throw CLI::ValidationError("--n", "give --spec or --n with --k/--rate");
        pmwd::CodeSpecDoc doc;
        doc.n = n;
        doc.construction = construct;
        const uint32_t big_n = uint32_t(1) << n;
        if (k > 0 && !rate.empty())
            throw CLI::ValidationError("--k", "give either --k or --rate, not both");
        if (k > 0)
            doc.k = k;
        else if (!rate.empty())
            doc.k = rate_to_k(rate, big_n);
        else if (construct == "explicit")
            doc.k = static_cast<uint32_t>(info_set.size());
        else
            throw CLI::ValidationError("--k", "give either --k or --rate");
        if (construct == "ga") {
            if (!has_snr)
                throw CLI::ValidationError("--design-snr-db", "ga construction needs a design SNR");
            doc.design_snr_db = design_snr_db;
        }
        if (construct == "explicit") {
            if (info_set.empty())
                throw CLI::ValidationError("--info-set", "explicit construction needs --info-set");
            doc.info_set_a = info_set;
        }
        return doc;
    }

    Json manifest_params() const {
        Json params;
        if (!spec_path.empty())
            params["spec"] = spec_path;
        else
            params["spec"] = nullptr;
        return params;
    }
};

void emit_record(const std::string& command, Json params, Json result) {
    Json payload;
    payload["manifest"] = pmwd::run_manifest(command, std::move(params));
    payload["result"] = std::move(result);
    std::cout << payload.dump() << "\n";
}

void dump_codewords(const std::string& path, const std::vector<pmwd::BitVec>& codewords) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open " + path);
    for (const pmwd::BitVec& cw : codewords)
        out << cw.to_hex() << "\n";
}

Json doc_params(const pmwd::CodeSpecDoc& doc) { return doc.to_json(); }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact minimum-weight-distribution analysis of polar and CRC-polar codes"};
    app.require_subcommand(1);

    // ---- construct ----------------------------------------------------
    auto* construct = app.add_subcommand("construct", "Build and print a code specification");
    SpecArgs construct_args;
    construct_args.attach(construct, /*spec_file_allowed=*/false);
    bool list_info_set = false;
    std::string construct_out;
    construct->add_flag("--list-info-set", list_info_set, "print the info set A, ascending");
    construct->add_option("--out", construct_out, "also write the bare CodeSpec document here");
    construct->callback([&] {
        // `construct --method` is the construction method per the examples
        const pmwd::CodeSpecDoc doc = construct_args.resolve();
        const pmwd::CodeSpec spec = doc.realize();
        if (!construct_out.empty()) {
            std::ofstream out(construct_out);
            if (!out)
                throw std::runtime_error("cannot open " + construct_out);
            out << doc.to_json().dump(2) << "\n";
        }
        if (list_info_set) {
            for (size_t i = 0; i < spec.info_set_A.size(); ++i)
                std::cout << (i ? " " : "") << spec.info_set_A[i];
            std::cout << "\n";
            return;
        }
        emit_record("construct", doc_params(doc), doc.to_json());
    });
    construct->add_option("--method", construct_args.construct,
                          "construction method: pw | ga | explicit")
        ->check(CLI::IsMember({"pw", "ga", "explicit"}));

    // ---- mwd -----------------------------------------------------------
    auto* mwd = app.add_subcommand("mwd", "Minimum weight distribution of a polar code");
    SpecArgs mwd_args;
    mwd_args.attach(mwd);
    std::string mwd_method = "auto";
    std::string mwd_mode = "count";
    uint64_t mwd_radius = 0;
    std::string mwd_dump;
    unsigned mwd_threads = 1;
    uint64_t mwd_cap = 10'000'000;
    mwd->add_option("--method", mwd_method, "scem | screm | auto")
        ->check(CLI::IsMember({"scem", "screm", "auto"}));
    mwd->add_option("--mode", mwd_mode, "count | collect")
        ->check(CLI::IsMember({"count", "collect"}));
    mwd->add_option("--radius", mwd_radius, "scem sphere radius (default: row-weight bound)");
    mwd->add_option("--dump-codewords", mwd_dump, "write the shell as hex rows, MSB = c_1");
    mwd->add_option("--threads", mwd_threads, "reserved for the parallel mode; search is sequential")
        ->envname("PMWD_THREADS");
    mwd->add_option("--collect-cap", mwd_cap, "screm component-shell cap (codewords)");
    mwd->callback([&] {
        const pmwd::CodeSpecDoc doc = mwd_args.resolve();
        const pmwd::CodeSpec spec = doc.realize();
        const auto mode = mwd_mode == "collect" ? pmwd::EnumMode::collect : pmwd::EnumMode::count;
        const uint64_t bound = pmwd::min_weight_lower_bound(spec);
        Timer timer;
        pmwd::MwdResult result;
        std::string method = mwd_method == "auto" ? "screm" : mwd_method;
        if (method == "scem") {
            result = pmwd::scem(spec, mwd_radius ? mwd_radius : bound, mode);
        } else {
            pmwd::ScremOptions opts;
            opts.collect_cap = mwd_cap;
            result = pmwd::screm(spec, bound, mode, opts);
        }
        if (!mwd_dump.empty())
            dump_codewords(mwd_dump, result.codewords);
        Json params = doc_params(doc);
        params["method"] = mwd_method;
        params["mode"] = mwd_mode;
        emit_record("mwd", std::move(params),
                    pmwd::mwd_record(doc, result, method, mwd_mode, timer.elapsed_ms()));
    });

    // ---- concat ----------------------------------------------------------
    auto* concat_cmd = app.add_subcommand("concat", "MWD of a CRC-polar concatenated code");
    SpecArgs concat_args;
    concat_args.attach(concat_cmd, /*spec_file_allowed=*/false);
    uint32_t concat_ki = 0;
    std::string concat_crc;
    std::string concat_mode = "count";
    std::string concat_dump;
    std::vector<uint32_t> concat_mapping;
    concat_cmd->add_option("--ki", concat_ki, "message length K_I")->required();
    concat_cmd->add_option("--crc-hex", concat_crc, "CRC polynomial, full hex incl. leading term")
        ->required();
    concat_cmd->add_option("--mode", concat_mode, "count | collect")
        ->check(CLI::IsMember({"count", "collect"}));
    concat_cmd->add_option("--dump-codewords", concat_dump, "write the shell as hex rows");
    concat_cmd->add_option("--mapping", concat_mapping,
                           "explicit s->u mapping (comma separated; default ascending)")
        ->delimiter(',');
    concat_cmd->callback([&] {
        const pmwd::CrcPolynomial poly = pmwd::CrcPolynomial::parse_hex(concat_crc);
        SpecArgs inner_args = concat_args;
        if (inner_args.k == 0 && inner_args.rate.empty())
            inner_args.k = concat_ki + uint32_t(poly.degree);
        const pmwd::CodeSpecDoc doc = inner_args.resolve();
        const pmwd::ConcatSpec concat =
            pmwd::make_concat(doc.realize(), poly, concat_mapping);
        if (!poly.constant_term())
            std::cerr << "warning: CRC constant term is 0 (degenerate factor of x)\n";
        if (concat.k_i != concat_ki)
            throw CLI::ValidationError("--ki", "K_I + K_P must equal the inner K");
        const auto mode =
            concat_mode == "collect" ? pmwd::EnumMode::collect : pmwd::EnumMode::count;
        Timer timer;
        const pmwd::MwdResult result = pmwd::pc_scem(concat, mode);
        if (!concat_dump.empty())
            dump_codewords(concat_dump, result.codewords);
        pmwd::ConcatSpecDoc concat_doc;
        concat_doc.inner = doc;
        concat_doc.crc_hex = poly.render_hex();
        concat_doc.k_p = poly.degree;
        if (!concat_mapping.empty())
            concat_doc.mapping = concat_mapping;
        Json record = pmwd::mwd_record(doc, result, "pc-scem", concat_mode, timer.elapsed_ms());
        record["ki"] = concat.k_i;
        record["kp"] = poly.degree;
        record["crc_hex"] = poly.render_hex();
        emit_record("concat", concat_doc.to_json(), std::move(record));
    });

    // ---- crc-search ------------------------------------------------------
    auto* search = app.add_subcommand("crc-search", "Exhaustive CRC polynomial optimization");
    SpecArgs search_args;
    search_args.attach(search, /*spec_file_allowed=*/false);
    uint32_t search_ki = 0;
    int search_kp = 0;
    unsigned search_threads = 1;
    search->add_option("--ki", search_ki, "message length K_I")->required();
    search->add_option("--kp", search_kp, "CRC length K_P")->required();
    search->add_option("--threads", search_threads, "parallel candidate evaluation")
        ->envname("PMWD_THREADS");
    search->callback([&] {
        SpecArgs inner_args = search_args;
        if (inner_args.k == 0 && inner_args.rate.empty())
            inner_args.k = search_ki + uint32_t(search_kp);
        const pmwd::CodeSpecDoc doc = inner_args.resolve();
        Timer timer;
        const pmwd::CrcSearchReport report =
            pmwd::crc_optimize(doc.realize(), search_ki, search_kp, {}, search_threads);
        Json table = Json::array();
        for (const auto& candidate : report.ranked) {
            Json row;
            row["g"] = candidate.poly.render_hex();
            row["d_min"] = candidate.d_min;
            row["a_dmin"] = candidate.a_dmin;
            table.push_back(std::move(row));
        }
        Json failed = Json::array();
        for (const auto& candidate : report.failed) {
            Json row;
            row["g"] = candidate.poly.render_hex();
            row["error"] = candidate.error;
            failed.push_back(std::move(row));
        }
        Json params = doc_params(doc);
        params["ki"] = search_ki;
        params["kp"] = search_kp;
        Json result;
        result["winner"] = table.empty() ? Json(nullptr) : table.front();
        result["table"] = std::move(table);
        result["failed"] = std::move(failed);
        result["elapsed_ms"] = timer.elapsed_ms();
        emit_record("crc-search", std::move(params), std::move(result));
    });

    // ---- bound -----------------------------------------------------------
    auto* bound = app.add_subcommand("bound", "Union-bound curves as CSV");
    uint64_t bound_dmin = 0, bound_admin = 0;
    double bound_rate = 0.0;
    double bound_db = 0.0, bound_from = 0.0, bound_to = 0.0, bound_step = 0.5;
    bool has_db = false, has_from = false, has_to = false;
    std::string bound_spectrum;
    bound->add_option("--dmin", bound_dmin, "minimum Hamming weight");
    bound->add_option("--admin", bound_admin, "codewords at d_min");
    bound->add_option("--rate", bound_rate, "code rate R");
    bound->add_option("--db", bound_db, "single Eb/N0 point (dB)")
        ->each([&](const std::string&) { has_db = true; });
    bound->add_option("--from-db", bound_from, "grid start (dB)")
        ->each([&](const std::string&) { has_from = true; });
    bound->add_option("--to-db", bound_to, "grid end (dB)")
        ->each([&](const std::string&) { has_to = true; });
    bound->add_option("--step-db", bound_step, "grid step (dB)");
    bound->add_option("--spectrum", bound_spectrum,
                      "CSV file of weight,count rows for the full union bound");
    bound->callback([&] {
        std::vector<std::pair<uint64_t, uint64_t>> spectrum;
        if (!bound_spectrum.empty()) {
            std::ifstream in(bound_spectrum);
            if (!in)
                throw std::runtime_error("cannot open " + bound_spectrum);
            std::string line;
            while (std::getline(in, line)) {
                if (line.empty() || line[0] == '#' || !std::isdigit(line[0]))
                    continue;
                uint64_t d, a;
                if (std::sscanf(line.c_str(), "%llu,%llu", (unsigned long long*)&d,
                                (unsigned long long*)&a) == 2)
                    spectrum.emplace_back(d, a);
            }
        } else {
            if (bound_dmin < 1 || bound_admin < 1)
                throw CLI::ValidationError("--dmin", "give --dmin/--admin or --spectrum");
            spectrum.emplace_back(bound_dmin, bound_admin);
        }
        if (!(has_db || (has_from && has_to)))
            throw CLI::ValidationError("--db", "give --db or --from-db/--to-db");
        Json params;
        params["rate"] = bound_rate;
        params["spectrum"] = Json::array();
        for (auto& [d, a] : spectrum)
            params["spectrum"].push_back({{"d", d}, {"A", a}});
        std::cout << "# manifest: " << pmwd::run_manifest("bound", params).dump() << "\n";
        auto emit_point = [&](double db) {
            const pmwd::BoundPoint point = pmwd::union_bound(spectrum, bound_rate, db);
            std::printf("%.6g,%.12g\n", point.eb_n0_db, point.value);
        };
        if (has_db)
            emit_point(bound_db);
        else
            for (double db = bound_from; db <= bound_to + 1e-9; db += bound_step)
                emit_point(db);
    });

    // ---- avn -------------------------------------------------------------
    auto* avn = app.add_subcommand("avn", "Closed-form SCL visited-node formulas");
    uint32_t avn_k = 0;
    int avn_nlog2 = 0;
    uint64_t avn_list = 0, avn_levels = 1;
    avn->add_option("--k", avn_k, "information length K")->required();
    avn->add_option("--n-log2", avn_nlog2, "log2 of the code length")->required();
    avn->add_option("--list", avn_list, "list size L")->required();
    avn->add_option("--levels", avn_levels, "level count M (1 = plain SCL)");
    avn->callback([&] {
        const uint64_t big_n = uint64_t(1) << avn_nlog2;
        const uint64_t value = pmwd::scl_avn(avn_k, big_n, avn_list, avn_levels);
        Json params;
        params["K"] = avn_k;
        params["N"] = big_n;
        params["L"] = avn_list;
        params["M"] = avn_levels;
        Json result;
        result["avn"] = value;
        emit_record("avn", std::move(params), std::move(result));
    });

    // ---- oracle ------------------------------------------------------------
    auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force weight spectrum as CSV");
    SpecArgs oracle_args;
    oracle_args.attach(oracle_cmd);
    uint32_t oracle_ki = 0;
    std::string oracle_crc;
    oracle_cmd->add_option("--ki", oracle_ki, "message length K_I (concatenated oracle)");
    oracle_cmd->add_option("--crc-hex", oracle_crc, "CRC polynomial (concatenated oracle)");
    oracle_cmd->callback([&] {
        pmwd::oracle::FullSpectrum spectrum;
        Json params;
        if (!oracle_crc.empty()) {
            const pmwd::CrcPolynomial poly = pmwd::CrcPolynomial::parse_hex(oracle_crc);
            SpecArgs inner_args = oracle_args;
            if (inner_args.k == 0 && inner_args.rate.empty() && inner_args.spec_path.empty())
                inner_args.k = oracle_ki + uint32_t(poly.degree);
            const pmwd::CodeSpecDoc doc = inner_args.resolve();
            spectrum = pmwd::oracle::brute_force_concat(
                pmwd::make_concat(doc.realize(), poly));
            params = doc_params(doc);
            params["crc_hex"] = poly.render_hex();
        } else {
            const pmwd::CodeSpecDoc doc = oracle_args.resolve();
            spectrum = pmwd::oracle::brute_force_spectrum(doc.realize());
            params = doc_params(doc);
        }
        std::cout << "# manifest: " << pmwd::run_manifest("oracle", params).dump() << "\n";
        for (const auto& [weight, count] : spectrum)
            std::cout << weight << "," << count << "\n";
    });

    try {
        CLI11_PARSE(app, argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
