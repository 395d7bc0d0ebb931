#include "arshon/cli.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "arshon/cache.hpp"
#include "arshon/phi_structure.hpp"
#include "arshon/report.hpp"

namespace arshon {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Where a report goes: the caller's stream for "-", a file otherwise.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback, bool binary) : path_(path), os_(&fallback) {
        if (path == "-") return;
        file_ = std::make_unique<std::ofstream>(path, binary ? std::ios::binary | std::ios::trunc : std::ios::trunc);
        if (!*file_) throw IoError("cannot open " + path + " for writing");
        os_ = file_.get();
    }

    std::ostream& stream() { return *os_; }

    void close() {
        os_->flush();
        if (!*os_) throw IoError("write failed for " + path_);
    }

private:
    std::string path_;
    std::unique_ptr<std::ofstream> file_;
    std::ostream* os_;
};

std::optional<std::filesystem::path> cache_dir_from_env() {
    if (const char* dir = std::getenv("ARSHON_CACHE_DIR"); dir && *dir) return std::filesystem::path(dir);
    return std::nullopt;
}

Alphabet checked_alphabet(unsigned n) {
    if (n < Alphabet::min_order || n > Alphabet::max_order)
        throw UsageError("--n must lie in [2, 255], got " + std::to_string(n));
    return Alphabet(n);
}

RunEngine parse_engine(const std::string& name) {
    return name == "reference" ? RunEngine::reference : RunEngine::sampled;
}

json exponent_json(const ExponentFraction& e) { return {{"p", e.p}, {"q", e.q}}; }

json witness_json(const std::optional<MaxExponent>& m) {
    if (!m) return nullptr;
    return {{"start", m->witness.start}, {"end", m->witness.end}, {"period", m->witness.period}};
}

json report_json(const VerificationReport& r, bool timing) {
    json audits = json::object();
    for (const auto& a : r.audits) {
        json entry;
        switch (a.status) {
        case AuditStatus::ok: entry["status"] = "ok"; break;
        case AuditStatus::violation: entry["status"] = "violation"; break;
        case AuditStatus::skipped: entry["status"] = "skipped"; break;
        }
        if (a.status != AuditStatus::skipped) {
            entry["checked"] = a.checked;
            entry["window"] = a.window;
        }
        if (a.violation) {
            entry["position"] = a.violation->position;
            entry["detail"] = a.violation->detail;
        }
        audits[audit_name(a.kind)] = std::move(entry);
    }
    json j = {{"n", r.n},
              {"length", r.prefix_length},
              {"max_exponent", r.max_exponent ? exponent_json(r.max_exponent->exponent) : json(nullptr)},
              {"witness", witness_json(r.max_exponent)},
              {"expected", exponent_json(r.expected)},
              {"strictly_free_above_expected", r.strictly_free_above_expected},
              {"theorem_holds", r.theorem_holds},
              {"audits", std::move(audits)}};
    if (timing) j["wall_time_ms"] = r.wall_time.count() * 1000.0;
    return j;
}

// ---- generate -------------------------------------------------------------

struct GenerateArgs {
    unsigned n = 0;
    std::size_t length = 0;
    std::string format = "text";
    std::string out = "-";
};

int cmd_generate(const GenerateArgs& a, std::ostream& out, std::ostream& err) {
    const Alphabet alphabet = checked_alphabet(a.n);
    const FiniteWord word = obtain_prefix(alphabet, a.length, cache_dir_from_env(), err);
    Sink sink(a.out, out, a.format == "binary");
    auto& os = sink.stream();
    if (a.format == "binary") {
        write_prefix_cache(os, word);
    } else if (a.format == "json") {
        json j = {{"n", a.n}, {"length", word.size()}, {"letters", json::array()}};
        for (Letter c : word.letters()) j["letters"].push_back(static_cast<unsigned>(c));
        os << j.dump() << '\n';
    } else {
        os << word.to_string() << '\n';
    }
    sink.close();
    return exit_ok;
}

// ---- exponent -------------------------------------------------------------

struct ExponentArgs {
    unsigned n = 0;
    std::optional<std::size_t> length;
    std::string format = "json";
    std::string engine = "sampled";
    std::string out = "-";
};

int cmd_exponent(const ExponentArgs& a, std::ostream& out, std::ostream& err) {
    const Alphabet alphabet = checked_alphabet(a.n);
    const std::size_t length = a.length.value_or(default_prefix_length(a.n));
    const FiniteWord word = obtain_prefix(alphabet, length, cache_dir_from_env(), err);
    const auto found = max_exponent(word, parse_engine(a.engine));
    const bool match = exponent_matches(a.n, found);
    const auto expected = expected_exponent(a.n);

    Sink sink(a.out, out, false);
    auto& os = sink.stream();
    if (a.format == "text") {
        os << "n=" << a.n << " length=" << length;
        if (found)
            os << " max=" << found->exponent.p << "/" << found->exponent.q << " start=" << found->witness.start
               << " end=" << found->witness.end << " period=" << found->witness.period;
        else
            os << " max=none";
        os << " expected=" << expected.p << "/" << expected.q << " match=" << (match ? "true" : "false") << '\n';
    } else {
        json j = {{"n", a.n},
                  {"length", length},
                  {"max_exponent", found ? exponent_json(found->exponent) : json(nullptr)},
                  {"witness", witness_json(found)},
                  {"expected", exponent_json(expected)},
                  {"match", match}};
        os << j.dump() << '\n';
    }
    sink.close();
    return match ? exit_ok : exit_violation;
}

// ---- verify ---------------------------------------------------------------

struct VerifyArgs {
    std::optional<unsigned> n;
    std::string n_range;
    std::optional<std::size_t> length;
    unsigned jobs = 1;
    std::string audits = "all";
    std::string format = "csv";
    std::string engine = "sampled";
    std::string out = "-";
    bool timing = false;
};

std::vector<unsigned> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) throw UsageError("--n-range must look like A..B, got '" + text + "'");
    auto number = [&](const std::string& s) {
        std::size_t used = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != s.size()) throw UsageError("bad bound '" + s + "' in --n-range");
        return v;
    };
    const unsigned long lo = number(text.substr(0, dots)), hi = number(text.substr(dots + 2));
    std::vector<unsigned> out;
    for (unsigned long n = lo; n <= hi; ++n) {
        checked_alphabet(static_cast<unsigned>(std::min<unsigned long>(n, 256)));
        out.push_back(static_cast<unsigned>(n));
    }
    return out;
}

std::vector<AuditKind> parse_audits(const std::string& text) {
    if (text == "all") return all_audits();
    std::vector<AuditKind> out;
    if (text == "none" || text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto kind = parse_audit_name(item);
        if (!kind) throw UsageError("unknown audit '" + item + "'");
        if (std::find(out.begin(), out.end(), *kind) == out.end()) out.push_back(*kind);
    }
    return out;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
    std::vector<unsigned> orders;
    if (a.n && !a.n_range.empty()) throw UsageError("give either --n or --n-range, not both");
    if (a.n)
        orders.push_back(checked_alphabet(*a.n).order());
    else if (!a.n_range.empty())
        orders = parse_range(a.n_range);
    else
        throw UsageError("verify needs --n or --n-range");
    if (a.jobs == 0) throw UsageError("--jobs must be at least 1");
    const auto audits = parse_audits(a.audits);
    const auto engine = parse_engine(a.engine);
    const auto cache_dir = cache_dir_from_env();

    Sink sink(a.out, out, false);

    std::vector<std::optional<VerificationReport>> reports(orders.size());
    std::vector<std::string> diagnostics(orders.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < orders.size(); k = next++) {
            const unsigned n = orders[k];
            std::ostringstream diag;
            const FiniteWord prefix =
                obtain_prefix(Alphabet(n), a.length.value_or(default_prefix_length(n)), cache_dir, diag);
            reports[k] = verify_prefix(prefix, audits, engine);
            diagnostics[k] = diag.str();
        }
    };
    {
        std::vector<std::jthread> pool;
        const unsigned threads = std::min<unsigned>(a.jobs, static_cast<unsigned>(std::max<std::size_t>(1, orders.size())));
        for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
        worker();
    }

    bool all_passed = true;
    auto& os = sink.stream();
    if (a.format == "json") {
        json arr = json::array();
        for (const auto& r : reports) arr.push_back(report_json(*r, a.timing));
        os << arr.dump(2) << '\n';
    } else {
        os << csv_header() << '\n';
        for (const auto& r : reports) os << to_csv_row(*r) << '\n';
    }
    for (std::size_t k = 0; k < reports.size(); ++k) {
        err << diagnostics[k];
        const auto& r = *reports[k];
        all_passed = all_passed && r.passed();
        if (!r.theorem_holds) err << "n=" << r.n << ": exponent check failed\n";
        for (const auto& entry : r.audits)
            if (entry.violation)
                err << "n=" << r.n << " audit=" << audit_name(entry.kind) << " position=" << entry.violation->position
                    << ": " << entry.violation->detail << '\n';
    }
    sink.close();
    return all_passed ? exit_ok : exit_violation;
}

// ---- interpret ------------------------------------------------------------

struct InterpretArgs {
    unsigned n = 0;
    std::string subword;
    std::optional<std::size_t> horizon;
    std::string format = "text";
    std::string out = "-";
};

int cmd_interpret(const InterpretArgs& a, std::ostream& out, std::ostream&) {
    const Alphabet alphabet = checked_alphabet(a.n);
    if (a.n < 3) throw UsageError("interpretations need n >= 3");
    FiniteWord z(alphabet);
    try {
        z = FiniteWord::parse(alphabet, a.subword);
    } catch (const Error& e) {
        throw UsageError(std::string("malformed subword: ") + e.what());
    }
    if (z.empty()) throw UsageError("malformed subword: empty");
    const std::size_t minimum = z.size() * a.n;
    const std::size_t horizon = a.horizon.value_or(std::max<std::size_t>(minimum, 10000));
    if (horizon < minimum) throw UsageError("--horizon must be at least |z| * n = " + std::to_string(minimum));

    const auto interpretations = enumerate_interpretations(z, horizon);
    const auto sync = has_synchronization_point(z);

    Sink sink(a.out, out, false);
    auto& os = sink.stream();
    if (a.format == "json") {
        json list = json::array();
        for (const auto& in : interpretations)
            list.push_back({{"offset", in.offset},
                            {"parity", parity_name(in.start_parity)},
                            {"ancestor", in.ancestor.to_string()},
                            {"borderlines", in.borderlines},
                            {"confirmation", confirmation_name(in.confirmed)}});
        json j = {{"n", a.n},
                  {"subword", z.to_string()},
                  {"horizon", horizon},
                  {"interpretations", std::move(list)},
                  {"synchronization_points", sync.points}};
        os << j.dump() << '\n';
    } else {
        os << "interpretations: " << interpretations.size() << '\n';
        for (const auto& in : interpretations) {
            os << "offset=" << in.offset << " parity=" << parity_name(in.start_parity)
               << " ancestor=" << in.ancestor.to_string() << " borderlines=";
            for (std::size_t k = 0; k < in.borderlines.size(); ++k) os << (k ? "," : "") << in.borderlines[k];
            os << " " << confirmation_name(in.confirmed) << '\n';
        }
        os << "synchronization: ";
        if (sync.points.empty()) os << "none";
        for (std::size_t k = 0; k < sync.points.size(); ++k) os << (k ? "," : "") << sync.points[k];
        os << '\n';
    }
    sink.close();
    return exit_ok;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Arshon words: generation, critical exponents and structural audits", "arshon"};
    app.require_subcommand(1);

    GenerateArgs gen;
    auto* generate = app.add_subcommand("generate", "Write a prefix of a_n");
    generate->add_option("--n", gen.n, "Alphabet size")->required();
    generate->add_option("--length", gen.length, "Number of letters")->required();
    generate->add_option("--format", gen.format)->check(CLI::IsMember({"text", "binary", "json"}));
    generate->add_option("--out", gen.out, "Output file, - for stdout");

    ExponentArgs exp;
    auto* exponent = app.add_subcommand("exponent", "Largest exponent over a prefix versus (3n-2)/(2n-2)");
    exponent->add_option("--n", exp.n, "Alphabet size")->required();
    exponent->add_option("--length", exp.length, "Prefix length (default max(20000, 10 n^2))");
    exponent->add_option("--format", exp.format)->check(CLI::IsMember({"json", "text"}));
    exponent->add_option("--engine", exp.engine)->check(CLI::IsMember({"sampled", "reference"}));
    exponent->add_option("--out", exp.out);

    VerifyArgs ver;
    auto* verify = app.add_subcommand("verify", "Exponent check plus structural audits for one or more orders");
    verify->add_option("--n", ver.n, "Single alphabet size");
    verify->add_option("--n-range", ver.n_range, "Inclusive range A..B");
    verify->add_option("--length", ver.length, "Prefix length (default max(20000, 10 n^2))");
    verify->add_option("--jobs", ver.jobs, "Worker threads across orders");
    verify->add_option("--audits", ver.audits,
                       "Comma list of mordents,distances,lifting,sync,parity,squarefree; all or none");
    verify->add_option("--format", ver.format)->check(CLI::IsMember({"csv", "json"}));
    verify->add_option("--engine", ver.engine)->check(CLI::IsMember({"sampled", "reference"}));
    verify->add_option("--out", ver.out);
    verify->add_flag("--timing", ver.timing, "Include wall time in JSON reports");

    InterpretArgs interp;
    auto* interpret = app.add_subcommand("interpret", "Parse a word against the phi_n block grammar");
    interpret->add_option("--n", interp.n, "Alphabet size")->required();
    interpret->add_option("subword", interp.subword, "Letters, e.g. 01234321040123 or 0,11,10")->required();
    interpret->add_option("--horizon", interp.horizon, "Ancestor search horizon (default max(|z| n, 10000))");
    interpret->add_option("--format", interp.format)->check(CLI::IsMember({"text", "json"}));
    interpret->add_option("--out", interp.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*generate) return cmd_generate(gen, out, err);
        if (*exponent) return cmd_exponent(exp, out, err);
        if (*verify) return cmd_verify(ver, out, err);
        if (*interpret) return cmd_interpret(interp, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return exit_io;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_violation;
    }
    return exit_usage;
}

} // namespace arshon
