// Operator entry points: seller, buyer, and a loopback benchmark harness.

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "kgtrade/graphgen.hpp"
#include "kgtrade/session.hpp"

using namespace kgtrade;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitAborted = 3;
constexpr int kExitVerifyFailed = 4;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

KnowledgeGraph load_graph(const std::string& path) {
    ParseResult pr = parse_ntriples(read_file(path));
    if (pr.blank_node_lines)
        std::cerr << "warning: dropped " << pr.blank_node_lines
                  << " blank-node lines from " << path << "\n";
    return pr.graph;
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::vector<EntropyMetricId> parse_metrics(const std::string& csv) {
    std::vector<EntropyMetricId> out;
    for (const std::string& name : split_csv(csv)) {
        auto id = metric_from_name(name);
        if (!id) throw UsageError("unknown metric: " + name);
        out.push_back(*id);
    }
    return out;
}

/// Flat key=value configuration; '#' starts a comment line.
std::map<std::string, std::string> parse_config_file(const std::string& path) {
    std::map<std::string, std::string> kv;
    std::istringstream in(read_file(path));
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos || line[a] == '#') continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw UsageError(path + ":" + std::to_string(lineno) + ": expected key=value");
        auto trim = [](std::string s) {
            size_t b = s.find_first_not_of(" \t\r");
            size_t e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return kv;
}

FilterSeed parse_seed(const std::string& hex) {
    Bytes b = from_hex(hex);
    if (b.size() != 16) throw UsageError("filter seed must be 32 hex digits");
    FilterSeed s;
    std::copy(b.begin(), b.end(), s.begin());
    return s;
}

struct CliSettings {
    SessionConfig config;
    std::array<bool, 4> continue_after = {true, true, true, true};
    std::string verify_mode = "exact";  // exact | fast | none
};

void apply_config_entry(CliSettings& s, const std::string& key, const std::string& val) {
    SessionConfig& c = s.config;
    if (key == "psi_fpr") c.psi_fpr = std::stod(val);
    else if (key == "cbf_fpr") c.cbf_fpr = std::stod(val);
    else if (key == "metrics") c.metrics = parse_metrics(val);
    else if (key == "parts_n") c.parts_n = std::stoul(val);
    else if (key == "buy_k") c.buy_k = std::stoul(val);
    else if (key == "signature_budget") c.signature_budget = std::stoull(val);
    else if (key == "exclusion_predicates") c.exclusion_predicates = split_csv(val);
    else if (key == "decoy_count") c.decoy_count = std::stoul(val);
    else if (key == "rsa_bits") c.rsa_bits = std::stoi(val);
    else if (key == "psi_filter_seed") c.psi_filter_seed = parse_seed(val);
    else if (key == "cbf_filter_seed") c.cbf_filter_seed = parse_seed(val);
    else if (key == "psi_noise_fraction") c.psi_noise_fraction = std::stod(val);
    else if (key == "partition_strategy") {
        if (val == "random") c.partition_strategy = PartitionStrategy::random;
        else if (val == "balanced_clustered")
            c.partition_strategy = PartitionStrategy::balanced_clustered;
        else throw UsageError("unknown partition strategy: " + val);
    } else if (key == "continue_after_step1") s.continue_after[0] = val == "true";
    else if (key == "continue_after_step2") s.continue_after[1] = val == "true";
    else if (key == "continue_after_step3") s.continue_after[2] = val == "true";
    else if (key == "continue_after_step4") s.continue_after[3] = val == "true";
    else if (key == "verify_mode") {
        if (val != "exact" && val != "fast" && val != "none")
            throw UsageError("verify_mode must be exact, fast, or none");
        s.verify_mode = val;
    } else throw UsageError("unknown config key: " + key);
}

uint64_t peak_memory_kb() {
    std::ifstream in("/proc/self/status");
    std::string line;
    while (std::getline(in, line))
        if (line.rfind("VmPeak:", 0) == 0) {
            uint64_t kb = 0;
            std::sscanf(line.c_str(), "VmPeak: %llu", (unsigned long long*)&kb);
            return kb;
        }
    return 0;
}

nlohmann::ordered_json traffic_json(const TrafficMeter& meter) {
    nlohmann::ordered_json j;
    j["sent_bytes"] = meter.total(true);
    j["received_bytes"] = meter.total(false);
    nlohmann::ordered_json steps;
    for (auto& [key, bytes] : meter.cells())
        steps[key.first][key.second ? "sent" : "received"] = bytes;
    j["per_step"] = steps;
    return j;
}

nlohmann::ordered_json step_times_json(
    const std::vector<std::pair<std::string, double>>& times) {
    nlohmann::ordered_json j;
    for (auto& [step, secs] : times) j[step] = secs;
    return j;
}

void emit_report(const nlohmann::ordered_json& report, const std::string& path) {
    std::string text = report.dump(2) + "\n";
    if (path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(path, std::ios::binary);
        out << text;
    }
}

std::pair<std::string, uint16_t> parse_endpoint(const std::string& ep) {
    size_t colon = ep.rfind(':');
    if (colon == std::string::npos) throw UsageError("endpoint must be host:port");
    int port = std::stoi(ep.substr(colon + 1));
    if (port < 0 || port > 65535) throw UsageError("bad port");
    return {ep.substr(0, colon), uint16_t(port)};
}

// ---------------------------------------------------------------------------
// seller

int cmd_seller(const std::string& graph_path, const std::string& config_path,
               const std::string& listen_ep, unsigned workers, uint64_t max_budget,
               const std::string& report_path, const TlsConfig& tls) {
    KnowledgeGraph graph = load_graph(graph_path);
    CliSettings settings;
    if (!config_path.empty())
        for (auto& [k, v] : parse_config_file(config_path))
            apply_config_entry(settings, k, v);

    auto [host, port] = parse_endpoint(listen_ep);
    TcpListener listener(host, port, tls);
    std::cerr << "listening on " << host << ":" << listener.port() << "\n";
    std::unique_ptr<Channel> ch = listener.accept_one();

    SellerOptions options;
    options.sign_workers = workers;
    options.max_signature_budget = max_budget;
    auto t0 = std::chrono::steady_clock::now();
    SellerOutcome outcome = run_seller(*ch, graph, options);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    nlohmann::ordered_json report;
    report["role"] = "seller";
    report["outcome"] = state_name(outcome.state);
    if (outcome.state == SessionState::Aborted) {
        report["abort_step"] = outcome.abort_step;
        report["abort_reason"] = outcome.abort_reason;
    }
    report["wall_time_seconds"] = secs;
    report["peak_memory_kb"] = peak_memory_kb();
    report["traffic"] = traffic_json(ch->meter());
    report["leak_ledger"] = outcome.ledger.report();
    emit_report(report, report_path);
    return outcome.state == SessionState::Closed ? kExitOk : kExitAborted;
}

// ---------------------------------------------------------------------------
// buyer

bool prompt_yes_no(const std::string& question) {
    std::cout << question << " [y/n] " << std::flush;
    std::string answer;
    if (!std::getline(std::cin, answer)) return false;
    return !answer.empty() && (answer[0] == 'y' || answer[0] == 'Y');
}

int cmd_buyer(const std::string& graph_path, const std::string& config_path,
              const std::string& connect_ep, bool interactive,
              const std::string& report_path, const TlsConfig& tls,
              const std::function<void(CliSettings&)>& flag_overrides) {
    KnowledgeGraph graph = load_graph(graph_path);
    CliSettings settings;
    if (!config_path.empty())
        for (auto& [k, v] : parse_config_file(config_path))
            apply_config_entry(settings, k, v);
    flag_overrides(settings);

    if (interactive) {
        std::cout << "metrics for the entropy step (comma separated, empty keeps [";
        for (size_t i = 0; i < settings.config.metrics.size(); ++i)
            std::cout << (i ? "," : "") << metric_name(settings.config.metrics[i]);
        std::cout << "]): " << std::flush;
        std::string line;
        if (std::getline(std::cin, line) && !line.empty())
            settings.config.metrics = parse_metrics(line);
    }

    BuyerOptions options;
    if (interactive) {
        options.decide = [](const std::string& step) {
            return prompt_yes_no("continue after " + step + "?");
        };
    } else {
        auto continue_after = settings.continue_after;
        options.decide = [continue_after](const std::string& step) {
            if (step.size() == 5 && step.rfind("step", 0) == 0) {
                int idx = step[4] - '1';
                if (idx >= 0 && idx < 4) return continue_after[idx];
            }
            return true;
        };
    }

    auto [host, port] = parse_endpoint(connect_ep);
    std::unique_ptr<Channel> ch = tcp_connect(host, port, tls);

    auto t0 = std::chrono::steady_clock::now();
    BuyerOutcome outcome = run_buyer(*ch, graph, settings.config, options);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    bool verify_failed = false;
    nlohmann::ordered_json verification;
    if (outcome.state == SessionState::Closed && outcome.disclosure &&
        settings.verify_mode != "none") {
        VerifyMode mode =
            settings.verify_mode == "fast" ? VerifyMode::fast : VerifyMode::exact;
        VerificationReport vr =
            verify_disclosure(*outcome.disclosure, outcome, graph, mode);
        verification = vr.to_json();
        verify_failed = !vr.all_pass();
    }

    nlohmann::ordered_json report;
    report["role"] = "buyer";
    report["outcome"] = state_name(outcome.state);
    if (outcome.state == SessionState::Aborted) {
        report["abort_step"] = outcome.abort_step;
        report["abort_reason"] = outcome.abort_reason;
    }
    report["wall_time_seconds"] = secs;
    report["peak_memory_kb"] = peak_memory_kb();
    report["traffic"] = traffic_json(ch->meter());
    if (outcome.seller_stats) {
        nlohmann::ordered_json sj;
        report["seller_statistics"] = outcome.seller_stats->to_json();
    }
    if (outcome.intersection) {
        report["intersection_size"] = outcome.intersection->statements.size();
        report["filter_cardinality_estimate"] =
            outcome.intersection->filter_cardinality_estimate;
    }
    nlohmann::ordered_json entropies = nlohmann::ordered_json::array();
    for (const EntropyResult& er : outcome.entropies) {
        nlohmann::ordered_json ej;
        ej["metric"] = metric_name(er.metric);
        ej["h_buyer"] = er.h_buyer;
        ej["h_merged_estimate"] = er.h_merged_estimate;
        ej["gain"] = er.gain;
        entropies.push_back(ej);
    }
    report["entropy"] = entropies;
    report["recovered_statements"] = outcome.recovered_graph.size();
    report["ot_integrity_ok"] = outcome.ot_integrity_ok;
    report["leak_ledger"] = outcome.ledger.report();
    if (!verification.is_null()) report["verification"] = verification;
    emit_report(report, report_path);

    if (outcome.state != SessionState::Closed) return kExitAborted;
    return verify_failed ? kExitVerifyFailed : kExitOk;
}

// ---------------------------------------------------------------------------
// bench

struct Fit {
    double slope = 0.0;
    double intercept = 0.0;
    double r2 = 0.0;
};

Fit linear_fit(const std::vector<double>& x, const std::vector<double>& y) {
    size_t n = x.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < n; ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    Fit f;
    double denom = double(n) * sxx - sx * sx;
    if (denom == 0) return f;
    f.slope = (double(n) * sxy - sx * sy) / denom;
    f.intercept = (sy - f.slope * sx) / double(n);
    double ss_res = 0, ss_tot = 0, mean = sy / double(n);
    for (size_t i = 0; i < n; ++i) {
        double pred = f.slope * x[i] + f.intercept;
        ss_res += (y[i] - pred) * (y[i] - pred);
        ss_tot += (y[i] - mean) * (y[i] - mean);
    }
    f.r2 = ss_tot == 0 ? 1.0 : 1.0 - ss_res / ss_tot;
    return f;
}

struct BenchRow {
    size_t statements = 0;
    double seconds = 0.0;
    uint64_t s2b_bytes = 0;
    uint64_t b2s_bytes = 0;
};

BenchRow run_loopback_session(const GraphPair& pair, const SessionConfig& config,
                              unsigned workers) {
    auto [seller_ch, buyer_ch] = make_loopback_pair();
    SellerOptions soptions;
    soptions.sign_workers = workers;
    SellerOutcome soutcome;
    std::thread seller([&] { soutcome = run_seller(*seller_ch, pair.seller, soptions); });
    auto t0 = std::chrono::steady_clock::now();
    BuyerOutcome boutcome = run_buyer(*buyer_ch, pair.buyer, config, {});
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    seller.join();
    if (boutcome.state != SessionState::Closed)
        throw Error("benchmark session did not close: " + boutcome.abort_reason);

    BenchRow row;
    row.statements = pair.seller.size();
    row.seconds = secs;
    row.s2b_bytes = buyer_ch->meter().total(false);
    row.b2s_bytes = buyer_ch->meter().total(true);
    return row;
}

/// The same payloads with no cryptographic protection: plaintext statement
/// lists, multisets, and parts. Used to estimate the privacy overhead ratio.
std::pair<uint64_t, uint64_t> plain_baseline_traffic(const GraphPair& pair,
                                                     const SessionConfig& config) {
    uint64_t b2s = 0, s2b = 0;
    s2b += to_bytes(compute_statistics(pair.seller).to_json().dump()).size();
    b2s += serialize_ntriples(pair.buyer).size();
    s2b += serialize_ntriples(graph_intersection(pair.buyer, pair.seller)).size();
    for (EntropyMetricId metric : config.metrics) {
        std::ostringstream ss;
        for (auto& [element, count] : derive_multiset(pair.seller, metric).counts())
            ss << element << "\t" << count << "\n";
        s2b += ss.str().size();
    }
    Partition parts = make_partition(pair.seller, config.parts_n, 7,
                                     config.partition_strategy);
    size_t smallest = 0;
    for (size_t i = 1; i < parts.parts.size(); ++i)
        if (parts.parts[i].size() < parts.parts[smallest].size()) smallest = i;
    for (size_t j = 0; j < config.buy_k && j < parts.parts.size(); ++j)
        s2b += serialize_ntriples(KnowledgeGraph(parts.parts[smallest])).size();
    b2s += 8 * config.buy_k;  // part selection indices
    return {s2b, b2s};
}

int cmd_bench(const std::string& sizes_csv, unsigned trials, double overlap,
              int rsa_bits, unsigned workers, bool plain_baseline,
              const std::string& report_path) {
    std::vector<size_t> sizes;
    for (const std::string& s : split_csv(sizes_csv)) sizes.push_back(std::stoul(s));
    if (sizes.empty()) throw UsageError("no sizes given");

    SessionConfig config;
    config.rsa_bits = rsa_bits;
    config.parts_n = 4;
    config.buy_k = 1;
    config.metrics = {EntropyMetricId::PRED_OBJ_DESC};

    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    std::vector<double> xs, times, s2b, b2s;
    double overhead_sum = 0.0;
    size_t overhead_count = 0;
    for (size_t size : sizes) {
        BenchRow best{};
        GraphPair pair;
        for (unsigned trial = 0; trial < trials; ++trial) {
            GraphGenConfig gc;
            gc.statements = size;
            gc.seed = 1000 + trial;
            pair = generate_pair(gc, overlap);
            BenchRow row = run_loopback_session(pair, config, workers);
            if (trial == 0 || row.seconds < best.seconds) best = row;
        }
        xs.push_back(double(size));
        times.push_back(best.seconds);
        s2b.push_back(double(best.s2b_bytes));
        b2s.push_back(double(best.b2s_bytes));

        nlohmann::ordered_json row;
        row["statements"] = size;
        row["seconds"] = best.seconds;
        row["seller_to_buyer_bytes"] = best.s2b_bytes;
        row["buyer_to_seller_bytes"] = best.b2s_bytes;
        row["seller_to_buyer_kb_per_statement"] =
            double(best.s2b_bytes) / 1024.0 / double(size);
        row["buyer_to_seller_kb_per_statement"] =
            double(best.b2s_bytes) / 1024.0 / double(size);
        if (plain_baseline) {
            auto [ps2b, pb2s] = plain_baseline_traffic(pair, config);
            double ratio = double(best.s2b_bytes + best.b2s_bytes) / double(ps2b + pb2s);
            row["plain_bytes"] = ps2b + pb2s;
            row["overhead_ratio"] = ratio;
            overhead_sum += ratio;
            ++overhead_count;
        }
        rows.push_back(row);
        std::cerr << "size " << size << ": " << best.seconds << " s, "
                  << best.s2b_bytes + best.b2s_bytes << " bytes\n";
    }

    Fit time_fit = linear_fit(xs, times);
    Fit s2b_fit = linear_fit(xs, s2b);
    Fit b2s_fit = linear_fit(xs, b2s);

    nlohmann::ordered_json report;
    report["rows"] = rows;
    report["time_fit"] = {{"slope_seconds_per_statement", time_fit.slope},
                          {"intercept", time_fit.intercept},
                          {"r2", time_fit.r2}};
    report["seller_to_buyer_fit"] = {
        {"slope_kb_per_statement", s2b_fit.slope / 1024.0},
        {"intercept", s2b_fit.intercept},
        {"r2", s2b_fit.r2}};
    report["buyer_to_seller_fit"] = {
        {"slope_kb_per_statement", b2s_fit.slope / 1024.0},
        {"intercept", b2s_fit.intercept},
        {"r2", b2s_fit.r2}};
    if (overhead_count)
        report["mean_overhead_ratio"] = overhead_sum / double(overhead_count);
    emit_report(report, report_path);
    return kExitOk;
}

// ---------------------------------------------------------------------------
// gen

int cmd_gen(size_t statements, uint64_t seed, double overlap,
            const std::string& out_path, const std::string& out2_path) {
    GraphGenConfig gc;
    gc.statements = statements;
    gc.seed = seed;
    if (out2_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        out << serialize_ntriples(generate_graph(gc));
    } else {
        GraphPair pair = generate_pair(gc, overlap);
        std::ofstream a(out_path, std::ios::binary);
        a << serialize_ntriples(pair.seller);
        std::ofstream b(out2_path, std::ios::binary);
        b << serialize_ntriples(pair.buyer);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Private knowledge-graph purchase evaluation"};
    app.require_subcommand(1);

    std::string graph_path, config_path, endpoint, report_path;
    std::string tls_cert, tls_key, tls_ca;
    bool interactive = false, use_tls = false;
    unsigned workers = std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    uint64_t budget = 10'000'000;

    // Buyer flag overrides on top of the config file.
    std::string metrics_csv;
    int parts = -1, buy = -1;
    double fpr = -1.0;

    auto add_tls = [&](CLI::App* cmd) {
        cmd->add_flag("--tls", use_tls, "Wrap the connection in TLS");
        cmd->add_option("--tls-cert", tls_cert, "PEM certificate chain");
        cmd->add_option("--tls-key", tls_key, "PEM private key");
        cmd->add_option("--tls-ca", tls_ca, "CA file for peer verification");
    };

    CLI::App* seller = app.add_subcommand("seller", "Serve one session");
    seller->add_option("--graph", graph_path, "N-Triples graph file")->required();
    seller->add_option("--config", config_path, "key=value config file");
    seller->add_option("--listen", endpoint, "host:port to listen on")->required();
    seller->add_option("--workers", workers, "Signing worker threads");
    seller->add_option("--budget", budget, "Largest acceptable signature budget");
    seller->add_option("--report", report_path, "Write the JSON report here");
    add_tls(seller);

    CLI::App* buyer = app.add_subcommand("buyer", "Run one purchase evaluation");
    buyer->add_option("--graph", graph_path, "N-Triples graph file")->required();
    buyer->add_option("--config", config_path, "key=value config file");
    buyer->add_option("--connect", endpoint, "host:port of the seller")->required();
    buyer->add_flag("--interactive", interactive, "Ask before each step");
    buyer->add_option("--metrics", metrics_csv, "Entropy metrics (comma separated)");
    buyer->add_option("--parts", parts, "Number of parts n");
    buyer->add_option("--buy", buy, "Parts to buy k");
    buyer->add_option("--fpr", fpr, "PSI filter false-positive rate");
    buyer->add_option("--budget", budget, "Signature budget to request");
    buyer->add_option("--report", report_path, "Write the JSON report here");
    add_tls(buyer);

    std::string sizes_csv = "1000,2000,4000,8000";
    unsigned trials = 1;
    double overlap = 0.5;
    int rsa_bits = 2048;
    bool plain_baseline = false;
    CLI::App* bench = app.add_subcommand("bench", "Loopback scaling benchmark");
    bench->add_option("--sizes", sizes_csv, "Statement counts (comma separated)");
    bench->add_option("--trials", trials, "Trials per size (best kept)");
    bench->add_option("--overlap", overlap, "Shared fraction between the parties");
    bench->add_option("--rsa-bits", rsa_bits, "Modulus size");
    bench->add_option("--workers", workers, "Signing worker threads");
    bench->add_flag("--plain-baseline", plain_baseline,
                    "Also measure the unprotected exchange");
    bench->add_option("--report", report_path, "Write the JSON report here");

    size_t gen_statements = 1000;
    uint64_t gen_seed = 1;
    std::string gen_out, gen_out2;
    CLI::App* gen = app.add_subcommand("gen", "Generate a synthetic graph");
    gen->add_option("--statements", gen_statements, "Statement count");
    gen->add_option("--seed", gen_seed, "Generator seed");
    gen->add_option("--overlap", overlap, "Shared fraction (with --out2)");
    gen->add_option("--out", gen_out, "Output N-Triples file")->required();
    gen->add_option("--out2", gen_out2, "Second party's graph file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    TlsConfig tls{use_tls, tls_cert, tls_key, tls_ca};
    try {
        if (*seller)
            return cmd_seller(graph_path, config_path, endpoint, workers, budget,
                              report_path, tls);
        if (*buyer) {
            auto overrides = [&](CliSettings& s) {
                if (!metrics_csv.empty()) s.config.metrics = parse_metrics(metrics_csv);
                if (parts >= 0) s.config.parts_n = size_t(parts);
                if (buy >= 0) s.config.buy_k = size_t(buy);
                if (fpr > 0) s.config.psi_fpr = fpr;
                s.config.signature_budget = budget;
            };
            return cmd_buyer(graph_path, config_path, endpoint, interactive,
                             report_path, tls, overrides);
        }
        if (*bench)
            return cmd_bench(sizes_csv, trials, overlap, rsa_bits, workers,
                             plain_baseline, report_path);
        if (*gen) return cmd_gen(gen_statements, gen_seed, overlap, gen_out, gen_out2);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitAborted;
    }
    return kExitUsage;
}
