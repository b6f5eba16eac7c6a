// qrep: counting polynomials of quiver representations over finite fields.
//
// Subcommands:
//   counts     closed-form r/m/e/n polynomials at given dimension vectors
//   verify     symbolic check of both torus factorization identities
//   enumerate  brute-force classification over prime fields
//   kac        conservative counts c and the extracted s/a polynomials
//
// Output is JSON on stdout (or --out FILE); --table prints a readable
// summary instead, with JSON still written to --out when given. Exit code
// 0 iff every requested verification passed.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

#include "qrep/json_io.hpp"

using nlohmann::json;
using namespace qrep;

namespace {

struct CommonOpts {
    std::string quiver_path;
    std::vector<std::string> dims;
    int max_degree = -1;
    std::string primes_csv;
    uint64_t budget = kDefaultEnumerationBudget;
    bool lemmas = false;
    bool table = false;
    std::string out_path;

    std::vector<uint32_t> primes() const {
        std::vector<uint32_t> out;
        std::string cur;
        std::istringstream in(primes_csv);
        while (std::getline(in, cur, ',')) {
            try {
                out.push_back(static_cast<uint32_t>(std::stoul(cur)));
            } catch (const std::exception&) {
                throw parse_error("bad prime '" + cur + "'");
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }
};

Quiver load_quiver(const std::string& path) {
    Quiver q = Quiver::parse_file(path);
    if (!q.connected())
        std::cerr << "warning: quiver in " << path << " is not connected\n";
    return q;
}

DimVector parse_dim(const std::string& csv, int expected_len) {
    DimVector v;
    std::string cur;
    std::istringstream in(csv);
    while (std::getline(in, cur, ',')) {
        try {
            v.push_back(std::stoi(cur));
        } catch (const std::exception&) {
            throw parse_error("bad dimension entry '" + cur + "'");
        }
    }
    if (expected_len >= 0 && static_cast<int>(v.size()) != expected_len)
        throw dimension_mismatch("dimension vector " + csv + " has " +
                                 std::to_string(v.size()) + " entries, quiver needs " +
                                 std::to_string(expected_len));
    return v;
}

void emit(const CommonOpts& opts, const json& j, const std::string& table_text) {
    if (!opts.out_path.empty()) {
        std::ofstream f(opts.out_path);
        if (!f) throw error("cannot write " + opts.out_path);
        f << j.dump(2) << "\n";
    }
    if (opts.table)
        std::cout << table_text;
    else if (opts.out_path.empty())
        std::cout << j.dump(2) << "\n";
}

int cmd_counts(const CommonOpts& opts) {
    Quiver q = load_quiver(opts.quiver_path);
    json results = json::array();
    std::ostringstream table;
    for (const std::string& text : opts.dims) {
        DimVector v = parse_dim(text, q.vertex_count());
        LaurentPoly r = r_poly(q, v), m = m_poly(q, v), e = e_poly(q, v), n = n_poly(q, v);
        results.push_back(json{{"dim", v},
                               {"r", poly_json(r)},
                               {"m", poly_json(m)},
                               {"e", poly_json(e)},
                               {"n", poly_json(n)}});
        table << "v = " << dim_str(v) << "\n"
              << "  r = " << r.str() << "\n"
              << "  m = " << m.str() << "\n"
              << "  e = " << e.str() << "\n"
              << "  n = " << n.str() << "\n";
    }
    json out{{"command", "counts"}, {"quiver", quiver_json(q)}, {"results", results}};
    emit(opts, out, table.str());
    return 0;
}

int cmd_verify(const CommonOpts& opts) {
    Quiver q = load_quiver(opts.quiver_path);
    FactorizationReport report = verify_factorizations(q, opts.max_degree);
    json out = factorization_report_json(report);
    out["command"] = "verify";
    std::ostringstream table;
    table << "factorization identities up to total degree " << opts.max_degree << ": "
          << (report.pass() ? "pass" : "FAIL") << "\n";
    for (const FactorizationEntry& e : report.entries)
        if (!e.residual_mono_nil.is_zero() || !e.residual_nil_epi.is_zero())
            table << "  residual at " << dim_str(e.v) << ": "
                  << e.residual_mono_nil.str() << " / " << e.residual_nil_epi.str() << "\n";
    emit(opts, out, table.str());
    return report.pass() ? 0 : 1;
}

int cmd_enumerate(const CommonOpts& opts) {
    Quiver q = load_quiver(opts.quiver_path);
    std::vector<uint32_t> primes = opts.primes();
    if (primes.empty()) primes.push_back(2);
    json results = json::array();
    std::ostringstream table;
    bool lemmas_pass = true;
    std::vector<DimVector> dims;
    for (const std::string& text : opts.dims) dims.push_back(parse_dim(text, q.vertex_count()));
    std::sort(dims.begin(), dims.end());
    for (const DimVector& v : dims) {
        for (uint32_t p : primes) {
            ClassifyCounts counts = enumerate_and_classify(q, v, p, opts.budget);
            json row = classify_json(counts, v, p);
            table << "v = " << dim_str(v) << ", q = " << p << ": total " << counts.total
                  << ", nilpotent " << counts.nilpotent << ", monomorphic "
                  << counts.monomorphic << ", epimorphic " << counts.epimorphic
                  << ", conservative " << counts.conservative << "\n";
            if (opts.lemmas) {
                uint64_t reps = 0, pass = 0;
                for_each_representation(q, v, p, opts.budget, [&](const FFRep& rep) {
                    ++reps;
                    if (verify_unique_factorization(rep).pass()) ++pass;
                });
                row["lemma_checks"] = json{{"reps", reps}, {"unique_factorization_pass", pass}};
                if (pass != reps) lemmas_pass = false;
                table << "  unique factorization: " << pass << "/" << reps << "\n";
            }
            results.push_back(std::move(row));
        }
    }
    json out{{"command", "enumerate"}, {"quiver", quiver_json(q)}, {"results", results},
             {"pass", lemmas_pass}};
    emit(opts, out, table.str());
    return lemmas_pass ? 0 : 1;
}

int cmd_kac(const CommonOpts& opts) {
    Quiver q = load_quiver(opts.quiver_path);
    Quiver qe = q.sink_source_free() ? q : q.extend();
    std::vector<uint32_t> primes = opts.primes();
    CountTable tbl = primes.empty()
                         ? CountTable::build(qe, opts.max_degree, opts.budget)
                         : CountTable::build_with_primes(qe, opts.max_degree, primes, opts.budget);
    KacResult s = solve_s(qe, tbl, opts.max_degree);
    KacResult a = solve_a(qe, tbl, opts.max_degree);
    json out = kac_json(s, a, tbl);
    out["command"] = "kac";
    out["quiver"] = quiver_json(qe);
    std::ostringstream table;
    for (size_t i = 0; i < s.entries.size(); ++i) {
        table << "v = " << dim_str(s.entries[i].v)
              << ": c = " << tbl.poly(s.entries[i].v).str("q") << " ["
              << fit_status_name(tbl.fit(s.entries[i].v).status) << "]"
              << ", s = " << s.entries[i].value.str("q")
              << ", a = " << a.entries[i].value.str("q") << "\n";
    }
    bool pass = s.roundtrip_residual_zero && a.roundtrip_residual_zero;
    table << "round trips: " << (pass ? "pass" : "FAIL") << "\n";
    emit(opts, out, table.str());
    return pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"counting polynomials of quiver representations over finite fields"};
    app.require_subcommand(1);

    CommonOpts opts;
    auto add_common = [&](CLI::App* cmd, bool needs_dim, bool needs_deg) {
        cmd->add_option("--quiver", opts.quiver_path, "quiver file")->required();
        if (needs_dim)
            cmd->add_option("--dim", opts.dims, "dimension vector, comma separated (repeatable)")
                ->required();
        if (needs_deg)
            cmd->add_option("--maxdeg", opts.max_degree, "truncation total degree")->required();
        cmd->add_option("--budget", opts.budget, "enumeration budget per call");
        cmd->add_option("--out", opts.out_path, "write JSON to this file");
        cmd->add_flag("--table", opts.table, "print a readable table instead of JSON");
    };

    CLI::App* counts = app.add_subcommand("counts", "closed-form counting polynomials");
    add_common(counts, true, false);

    CLI::App* verify = app.add_subcommand("verify", "check the factorization identities");
    add_common(verify, false, true);

    CLI::App* enumerate = app.add_subcommand("enumerate", "brute-force classification");
    add_common(enumerate, true, false);
    enumerate->add_option("--primes", opts.primes_csv, "primes to enumerate over, comma separated");
    enumerate->add_flag("--lemmas", opts.lemmas,
                        "also verify unique factorization per representation");

    CLI::App* kac = app.add_subcommand("kac", "conservative c/s/a polynomials");
    add_common(kac, false, true);
    kac->add_option("--primes", opts.primes_csv, "override the interpolation prime list (csv)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(counts)) return cmd_counts(opts);
        if (app.got_subcommand(verify)) return cmd_verify(opts);
        if (app.got_subcommand(enumerate)) return cmd_enumerate(opts);
        if (app.got_subcommand(kac)) return cmd_kac(opts);
    } catch (const qrep::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
