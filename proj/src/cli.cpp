#include "cohsys/cli.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "cohsys/classify.hpp"
#include "cohsys/serialize.hpp"
#include "cohsys/walls.hpp"
#include "cohsys/witness.hpp"

namespace cohsys::cli {

namespace {

struct Block {
    int g;
    bool hyp;
    std::int64_t n;
};

std::vector<Block> scan_blocks(const ScanSpec& spec)
{
    std::vector<Block> blocks;
    for (int g = spec.g_min; g <= spec.g_max; ++g) {
        for (bool hyp : {false, true}) {
            if (hyp && spec.curves == CurveFilter::NonHyperelliptic)
                continue;
            if (!hyp && (spec.curves == CurveFilter::Hyperelliptic || g == 2))
                continue;
            for (std::int64_t n = spec.n_min; n <= spec.n_max; ++n)
                blocks.push_back({g, hyp, n});
        }
    }
    return blocks;
}

std::vector<Verdict> scan_block(const ScanSpec& spec, const Block& b)
{
    CurveClass curve(b.g, b.hyp);
    const std::int64_t d_lo = std::max<std::int64_t>(1, spec.d_min);
    const std::int64_t d_hi = std::min(2 * b.n, spec.d_max.value_or(2 * b.n));
    const std::int64_t k_hi = spec.k_max.value_or(2 * b.n + 2);
    std::vector<Verdict> rows;
    for (std::int64_t d = d_lo; d <= d_hi; ++d)
        for (std::int64_t k = 1; k <= k_hi; ++k)
            rows.push_back(classify(curve, CSType{b.n, d, k}));
    return rows;
}

// Writes to the named file, or to `out` for "-". Returns false when the
// file cannot be written.
bool emit(const std::string& path, const std::string& text, std::ostream& out)
{
    if (path == "-") {
        out << text;
        return true;
    }
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f)
        return false;
    f << text;
    f.flush();
    return static_cast<bool>(f);
}

std::string dump(const Json& j)
{
    return j.dump(2) + "\n";
}

CurveFilter parse_curve_filter(const std::string& s)
{
    if (s == "true")
        return CurveFilter::Hyperelliptic;
    if (s == "false")
        return CurveFilter::NonHyperelliptic;
    return CurveFilter::Both;
}

int cmd_classify(int genus, bool hyperelliptic, const std::string& type_text, bool allow_out_of_range,
                 std::ostream& out)
{
    CSType t = parse_cstype(type_text);
    if (t.d <= 0)
        throw DomainError("type " + t.to_string() + " has d <= 0; moduli spaces are empty and unclassified");
    // Every genus-2 curve is hyperelliptic.
    CurveClass curve(genus, hyperelliptic || genus == 2);
    if (t.d > 2 * t.n) {
        if (!allow_out_of_range)
            throw DomainError("type " + t.to_string() +
                              " has d > 2n, outside the classified range 0 < d <= 2n "
                              "(use --allow-out-of-range for the large-alpha window report)");
        Json j;
        j["genus"] = curve.genus();
        j["hyperelliptic"] = curve.hyperelliptic();
        j["type"] = to_json(t);
        j["classified"] = false;
        auto w = nonss_window(curve.genus(), t.n, t.d);
        if (w) {
            Json wj;
            wj["lower"] = w->lower.to_string();
            wj["upper"] = w->upper.to_string();
            j["nonss_window"] = std::move(wj);
        } else {
            j["nonss_window"] = nullptr;
        }
        j["k_in_window"] = w.has_value() && w->contains(Rat(t.k));
        out << dump(j);
        return kOk;
    }
    out << dump(verdict_to_json(classify(curve, t)));
    return kOk;
}

int cmd_walls(const std::string& type_text, const std::string& alpha_text, std::ostream& out)
{
    CSType t = parse_cstype(type_text);
    WallSet ws = candidate_walls(t);
    Json j = wallset_to_json(ws);
    if (!alpha_text.empty()) {
        Rat a = Rat::parse(alpha_text);
        j["alpha"] = a.to_string();
        j["chamber"] = chamber_index(ws, a);
    }
    out << dump(j);
    return kOk;
}

int cmd_scan(const ScanSpec& spec, std::ostream& out, std::ostream& err)
{
    spec.validate();
    std::string text = render_scan(run_scan(spec), spec.format);
    if (!emit(spec.output, text, out)) {
        err << "error: cannot write " << spec.output << "\n";
        return kUnwritable;
    }
    return kOk;
}

int cmd_witness(const std::string& name_text, int genus, std::int64_t n, std::int64_t r,
                const std::string& output, std::ostream& out, std::ostream& err)
{
    Certificate cert;
    switch (parse_certificate_name(name_text)) {
    case CertificateName::Hyp1: cert = certificate_hyp1(genus, n); break;
    case CertificateName::Hyp2: cert = certificate_hyp2(genus, n, r); break;
    case CertificateName::Hyp3: cert = certificate_hyp3(genus, r); break;
    case CertificateName::Hyp4: cert = certificate_hyp4(genus, r); break;
    case CertificateName::Ex7: cert = example_d_gt_2n(genus, r); break;
    }
    if (!emit(output, dump(certificate_to_json(cert)), out)) {
        err << "error: cannot write " << output << "\n";
        return kUnwritable;
    }
    if (!cert.hypotheses_hold()) {
        err << "error: hypotheses of " << name_text << " do not hold for the given parameters\n";
        return kDomain;
    }
    return cert.passed ? kOk : kCheckFailed;
}

}  // namespace

void ScanSpec::validate() const
{
    if (g_min < 2 || g_max < g_min)
        throw DomainError("genus range must satisfy 2 <= g_min <= g_max");
    if (n_min < 1 || n_max < n_min)
        throw DomainError("rank range must satisfy 1 <= n_min <= n_max");
    if (d_max && *d_max < std::max<std::int64_t>(1, d_min))
        throw DomainError("degree range is empty");
    if (k_max && *k_max < 1)
        throw DomainError("section range is empty");
    if (curves == CurveFilter::NonHyperelliptic && g_max == 2)
        throw DomainError("no non-hyperelliptic curves of genus 2");
}

std::vector<Verdict> run_scan(const ScanSpec& spec)
{
    spec.validate();
    const auto blocks = scan_blocks(spec);
    std::vector<std::vector<Verdict>> results(blocks.size());

    unsigned workers = spec.jobs ? spec.jobs : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(1, blocks.size())));

    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < blocks.size(); i = next++)
            results[i] = scan_block(spec, blocks[i]);
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w)
        pool.emplace_back(work);
    work();
    for (auto& t : pool)
        t.join();

    std::vector<Verdict> rows;
    for (auto& r : results)
        std::move(r.begin(), r.end(), std::back_inserter(rows));
    return rows;
}

std::string render_scan(const std::vector<Verdict>& rows, OutputFormat format)
{
    if (format == OutputFormat::Json) {
        Json arr = Json::array();
        for (const auto& v : rows)
            arr.push_back(verdict_to_scan_record(v));
        return dump(arr);
    }
    std::string text;
    const auto& cols = scan_csv_columns();
    for (std::size_t i = 0; i < cols.size(); ++i) {
        if (i)
            text += ',';
        text += cols[i];
    }
    text += '\n';
    for (const auto& v : rows) {
        text += verdict_to_csv_row(v);
        text += '\n';
    }
    return text;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact classification of moduli of coherent systems on curves (0 < d <= 2n)", "csys"};
    app.require_subcommand(1);

    int genus = 0;
    bool hyperelliptic = false;
    std::string type_text;
    bool allow_out_of_range = false;
    auto* classify_cmd = app.add_subcommand("classify", "classify one type on one curve class");
    classify_cmd->add_option("--genus", genus, "genus g >= 2")->required();
    classify_cmd->add_flag("--hyperelliptic", hyperelliptic, "the curve is hyperelliptic");
    classify_cmd->add_option("--type", type_text, "type as n,d,k")->required();
    classify_cmd->add_flag("--allow-out-of-range", allow_out_of_range,
                           "for d > 2n, report the large-alpha window instead of failing");

    std::string walls_type, alpha_text;
    auto* walls_cmd = app.add_subcommand("walls", "candidate critical values of alpha");
    walls_cmd->add_option("--type", walls_type, "type as n,d,k")->required();
    walls_cmd->add_option("--alpha", alpha_text, "also report the chamber of this alpha (p/q)");

    ScanSpec spec;
    std::string curves = "both", format = "csv";
    auto* scan_cmd = app.add_subcommand("scan", "classify a grid of types");
    scan_cmd->add_option("--g-min", spec.g_min)->capture_default_str();
    scan_cmd->add_option("--g-max", spec.g_max)->capture_default_str();
    scan_cmd->add_option("--hyperelliptic", curves, "true, false or both")
        ->check(CLI::IsMember({"true", "false", "both"}))
        ->capture_default_str();
    scan_cmd->add_option("--n-min", spec.n_min)->capture_default_str();
    scan_cmd->add_option("--n-max", spec.n_max)->capture_default_str();
    scan_cmd->add_option("--d-min", spec.d_min)->capture_default_str();
    scan_cmd->add_option("--d-max", spec.d_max, "upper degree bound, clipped to 2n per cell");
    scan_cmd->add_option("--k-max", spec.k_max, "upper section bound (default 2n+2 per cell)");
    scan_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    scan_cmd->add_option("--output,-o", spec.output, "output path, - for stdout")->capture_default_str();
    scan_cmd->add_option("--jobs,-j", spec.jobs, "worker threads (0 = hardware concurrency)");

    std::string cert_name, cert_output = "-";
    int cert_genus = 0;
    std::int64_t cert_n = 0, cert_r = 0;
    auto* witness_cmd = app.add_subcommand("witness", "arithmetic certificate for a construction");
    witness_cmd->add_option("--name", cert_name)
        ->required()
        ->check(CLI::IsMember({"hyp1", "hyp2", "hyp3", "hyp4", "ex7"}));
    witness_cmd->add_option("--genus", cert_genus)->required();
    witness_cmd->add_option("--n", cert_n, "rank (hyp1, hyp2)");
    witness_cmd->add_option("--r", cert_r, "k - n (hyp2, hyp3, hyp4) or copies of D(K) (ex7)");
    witness_cmd->add_option("--output,-o", cert_output, "output path, - for stdout");

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    const bool needs_n = cert_name == "hyp1" || cert_name == "hyp2";
    const bool needs_r = cert_name != "hyp1";
    if (witness_cmd->parsed() && ((needs_n && witness_cmd->count("--n") == 0) ||
                                  (needs_r && witness_cmd->count("--r") == 0))) {
        err << "error: witness " << cert_name << " needs" << (needs_n ? " --n" : "")
            << (needs_r ? " --r" : "") << "\n"
            << witness_cmd->help();
        return kUsage;
    }

    try {
        if (classify_cmd->parsed())
            return cmd_classify(genus, hyperelliptic, type_text, allow_out_of_range, out);
        if (walls_cmd->parsed())
            return cmd_walls(walls_type, alpha_text, out);
        if (scan_cmd->parsed()) {
            spec.curves = parse_curve_filter(curves);
            spec.format = format == "json" ? OutputFormat::Json : OutputFormat::Csv;
            return cmd_scan(spec, out, err);
        }
        return cmd_witness(cert_name, cert_genus, cert_n, cert_r, cert_output, out, err);
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kDomain;
    }
}

}  // namespace cohsys::cli
