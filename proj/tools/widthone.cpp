#include "widthone/eulerian.hpp"
#include "widthone/oracle.hpp"
#include "widthone/serialize.hpp"
#include "widthone/shelling.hpp"
#include "widthone/sigma.hpp"
#include "widthone/verify.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace widthone;

constexpr int kOk = 0;
constexpr int kUsage = 2;
constexpr int kGuard = 3;
constexpr int kVerification = 4;
constexpr int kDisagreement = 5;

struct Output {
    std::string format = "json"; // json, csv, plain
    std::string path;            // empty = stdout
};

int write_text(const Output& out, const std::string& text) {
    if (out.path.empty()) {
        std::cout << text;
        return kOk;
    }
    std::ofstream f(out.path, std::ios::binary);
    if (!f) {
        std::cerr << "cannot open output file: " << out.path << "\n";
        return kUsage;
    }
    f << text;
    return kOk;
}

std::string json_text(const OrderedJson& doc) { return doc.dump(2) + "\n"; }

// Errors are always a JSON object on stdout, whatever --format says: the
// nonzero exit paths are the machine-readable part of the contract.
int emit_error(int code, OrderedJson fields) {
    OrderedJson doc;
    doc["error"] = std::move(fields);
    std::cout << json_text(doc);
    return code;
}

int emit_guard_error(const GuardError& e) {
    OrderedJson f;
    f["type"] = "guard";
    f["guard"] = e.guard();
    f["requested"] = e.requested();
    f["limit"] = e.limit();
    return emit_error(kGuard, std::move(f));
}

int emit_usage_error(const std::string& message) {
    OrderedJson f;
    f["type"] = "usage";
    f["message"] = message;
    return emit_error(kUsage, std::move(f));
}

std::string tuple_str(const std::vector<int>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(v[i]);
    }
    return out + ")";
}

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        out += c;
    }
    return out + "\"";
}

long long timed_ns(const std::function<void()>& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
}

// ---------------------------------------------------------------- sum

int cmd_sum(const std::vector<int>& dims, long long s, const std::string& method,
            const Guards& guards, const Output& out) {
    const Shape n(dims);
    struct Run {
        std::string name;
        DenseTensor tensor;
        long long ns;
    };
    std::vector<Run> runs;
    const auto add = [&](const std::string& name,
                         const std::function<DenseTensor()>& f) {
        Run r{name, DenseTensor(), 0};
        r.ns = timed_ns([&] { r.tensor = f(); });
        runs.push_back(std::move(r));
    };

    if (method == "tableaux" || method == "all")
        add("tableaux", [&] { return sigma_tableaux(n, s, guards); });
    if (method == "hpoly" || method == "all")
        add("hpoly", [&] { return sigma_hpoly(n, s, guards); });
    if (method == "oracle") {
        add("oracle", [&] { return sigma_oracle(n, s, guards); });
    } else if (method == "all" && count_members(n, s) <= BigInt(guards.max_enum)) {
        add("oracle", [&] { return sigma_oracle(n, s, guards); });
    }

    for (const Run& r : runs) std::cerr << "# " << r.name << " " << r.ns << " ns\n";

    for (std::size_t i = 1; i < runs.size(); ++i) {
        if (runs[i].tensor == runs[0].tensor) continue;
        for (std::size_t off = 0; off < runs[0].tensor.size(); ++off) {
            if (runs[i].tensor[off] == runs[0].tensor[off]) continue;
            OrderedJson f;
            f["type"] = "disagreement";
            f["context"] = "sum";
            f["n"] = dims;
            f["s"] = s;
            f["index"] = multi_index(n, off).coords();
            OrderedJson values;
            for (const Run& r : runs) values[r.name] = to_decimal(r.tensor[off]);
            f["values"] = std::move(values);
            return emit_error(kDisagreement, std::move(f));
        }
    }

    const DenseTensor& t = runs.front().tensor;
    if (out.format == "json") return write_text(out, json_text(tensor_report(t, s, method, true)));
    if (out.format == "csv") return write_text(out, tensor_csv(t));
    std::string text = "n=" + tuple_str(dims) + " s=" + std::to_string(s) + " method=" + method +
                       " agreement=true\n" + tensor_plain(t);
    return write_text(out, text);
}

// ----------------------------------------------------------- eulerian

int cmd_eulerian(const std::vector<int>& p, const std::string& method, const Guards& guards,
                 const Output& out) {
    IntPoly closed_poly, brute_poly;
    if (method == "closed" || method == "all") closed_poly = eulerian_poly_closed(p);
    if (method == "brute" || method == "all") brute_poly = eulerian_poly_brute(p, guards.max_word_len);

    if (method == "all" && !(closed_poly == brute_poly)) {
        OrderedJson f;
        f["type"] = "disagreement";
        f["context"] = "eulerian";
        f["p"] = p;
        f["closed"] = decimal_list(closed_poly.coeffs());
        f["brute"] = decimal_list(brute_poly.coeffs());
        return emit_error(kDisagreement, std::move(f));
    }

    const IntPoly& a = (method == "brute") ? brute_poly : closed_poly;
    if (out.format == "json") {
        OrderedJson doc;
        doc["p"] = p;
        doc["method"] = method;
        doc["coeffs"] = decimal_list(a.coeffs());
        doc["agreement"] = true;
        return write_text(out, json_text(doc));
    }
    if (out.format == "csv") {
        std::string text = "k,coeff\n";
        for (int k = 0; k <= a.degree(); ++k)
            text += std::to_string(k) + "," + to_decimal(a.coeff(k)) + "\n";
        return write_text(out, text);
    }
    std::string text = "p=" + tuple_str(p) + " method=" + method + "\n";
    for (int k = 0; k <= a.degree(); ++k)
        text += "t^" + std::to_string(k) + " " + to_decimal(a.coeff(k)) + "\n";
    return write_text(out, text);
}

// ------------------------------------------------------------ hvector

int cmd_hvector(const std::vector<int>& coords, const Guards& guards, const Output& out) {
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (coords[i] < 1)
            return emit_usage_error("coordinate " + std::to_string(i + 1) + " must be >= 1");
    const MultiIndex x(coords);

    const std::vector<BigInt> f = f_vector(x, guards);
    const IntPoly h_shell = h_poly_shelling(x, guards);
    const IntPoly h_closed = eulerian_poly_closed(coords_below(x));
    const IntPoly h_f = h_from_f(f);
    const bool lemma_ok = (h_shell == h_closed) && (h_closed == h_f);
    const BigInt facets = facet_count(x);

    int rc = kOk;
    if (out.format == "json") {
        OrderedJson doc;
        doc["x"] = coords;
        doc["f"] = decimal_list(f);
        doc["h"] = decimal_list(h_shell.coeffs());
        doc["facet_count"] = to_decimal(facets);
        doc["lemma_ok"] = lemma_ok;
        rc = write_text(out, json_text(doc));
    } else if (out.format == "csv") {
        std::string text = "vector,k,value\n";
        for (std::size_t k = 0; k < f.size(); ++k)
            text += "f," + std::to_string(k) + "," + to_decimal(f[k]) + "\n";
        for (int k = 0; k <= h_shell.degree(); ++k)
            text += "h," + std::to_string(k) + "," + to_decimal(h_shell.coeff(k)) + "\n";
        rc = write_text(out, text);
    } else {
        std::string text = "x=" + tuple_str(coords) + "\nf:";
        for (const BigInt& v : f) text += " " + to_decimal(v);
        text += "\nh:";
        for (int k = 0; k <= h_shell.degree(); ++k) text += " " + to_decimal(h_shell.coeff(k));
        text += "\nfacet_count: " + to_decimal(facets);
        text += std::string("\nlemma_ok: ") + (lemma_ok ? "true" : "false") + "\n";
        rc = write_text(out, text);
    }
    if (rc != kOk) return rc;
    return lemma_ok ? kOk : kVerification;
}

// ---------------------------------------------------------- enumerate

int cmd_enumerate(const std::vector<int>& dims, long long s, const Guards& guards,
                  const Output& out) {
    const Shape n(dims);
    WidthOneStream stream(n, s, guards);

    if (out.format == "json") {
        OrderedJson doc;
        doc["n"] = dims;
        doc["s"] = s;
        doc["count"] = to_decimal(stream.count());
        OrderedJson members = OrderedJson::array();
        DenseTensor t;
        while (stream.next(t)) members.push_back(support_entries(t));
        doc["members"] = std::move(members);
        return write_text(out, json_text(doc));
    }
    if (out.format == "csv") {
        std::string text = "member";
        for (int i = 0; i < n.rank(); ++i) text += ",x_" + std::to_string(i + 1);
        text += ",value\n";
        DenseTensor t;
        long long member = 0;
        while (stream.next(t)) {
            ++member;
            for (const MultiIndex& x : t.support()) {
                text += std::to_string(member);
                for (int i = 0; i < x.rank(); ++i) text += "," + std::to_string(x[i]);
                text += "," + to_decimal(t.at(x)) + "\n";
            }
        }
        return write_text(out, text);
    }
    std::string text = "n=" + tuple_str(dims) + " s=" + std::to_string(s) + " count=" +
                       to_decimal(stream.count()) + "\n";
    DenseTensor t;
    long long member = 0;
    while (stream.next(t)) {
        ++member;
        text += std::to_string(member) + ":";
        for (const MultiIndex& x : t.support())
            text += " " + tuple_str(x.coords()) + "=" + to_decimal(t.at(x));
        text += "\n";
    }
    return write_text(out, text);
}

// ------------------------------------------------------------- verify

int cmd_verify(const VerifyScope& scope, const Output& out) {
    const std::vector<CheckResult> results = run_verification(scope);
    const bool ok = all_passed(results);

    int rc = kOk;
    if (out.format == "json") {
        OrderedJson doc;
        doc["scope"]["max_d"] = scope.max_d;
        doc["scope"]["max_n"] = scope.max_n;
        doc["scope"]["max_s"] = scope.max_s;
        doc["scope"]["L"] = scope.series_len;
        OrderedJson checks = OrderedJson::array();
        for (const CheckResult& r : results) {
            OrderedJson c;
            c["name"] = r.name;
            c["pass"] = r.pass;
            c["detail"] = r.detail;
            checks.push_back(std::move(c));
        }
        doc["checks"] = std::move(checks);
        doc["all_passed"] = ok;
        rc = write_text(out, json_text(doc));
    } else if (out.format == "csv") {
        std::string text = "name,pass,detail\n";
        for (const CheckResult& r : results)
            text += r.name + "," + (r.pass ? "true" : "false") + "," + csv_quote(r.detail) + "\n";
        rc = write_text(out, text);
    } else {
        std::string text;
        int failed = 0;
        for (const CheckResult& r : results) {
            if (r.pass) {
                text += "PASS " + r.name + "\n";
            } else {
                ++failed;
                text += "FAIL " + r.name + ": " + r.detail + "\n";
            }
        }
        text += failed == 0 ? "all checks passed\n"
                            : std::to_string(failed) + " check(s) failed\n";
        rc = write_text(out, text);
    }
    if (rc != kOk) return rc;
    return ok ? kOk : kVerification;
}

// -------------------------------------------------------------- bench

struct BenchCell {
    std::vector<int> dims;
    long long s = 0;
};

std::string bench_shape_str(const std::vector<int>& dims) {
    std::string out;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (i) out += "x";
        out += std::to_string(dims[i]);
    }
    return out;
}

int cmd_bench(const std::vector<BenchCell>& cells, int reps, int warmup, bool compare_serial,
              bool no_oracle, const Guards& guards, const Output& out) {
    struct Row {
        std::string n;
        long long s;
        std::string method;
        long long median_ns;
        std::string digest;
    };
    std::vector<Row> rows;

    for (const BenchCell& cell : cells) {
        const Shape n(cell.dims);
        const long long s = cell.s;

        std::vector<std::pair<std::string, std::function<DenseTensor()>>> methods;
        methods.emplace_back("tableaux", [&, s] { return sigma_tableaux(n, s, guards); });
        methods.emplace_back("hpoly", [&, s] { return sigma_hpoly(n, s, guards); });
        if (compare_serial) {
            methods.emplace_back("serial_tableaux",
                                 [&, s] { return serial::sigma_tableaux(n, s, guards); });
            methods.emplace_back("serial_hpoly",
                                 [&, s] { return serial::sigma_hpoly(n, s, guards); });
        }
        if (!no_oracle && count_members(n, s) <= BigInt(guards.max_enum))
            methods.emplace_back("oracle", [&, s] { return sigma_oracle(n, s, guards); });

        std::string first_digest;
        std::string first_method;
        for (const auto& [name, f] : methods) {
            DenseTensor result;
            for (int w = 0; w < warmup; ++w) result = f();
            std::vector<long long> times;
            times.reserve(static_cast<std::size_t>(reps));
            for (int rep = 0; rep < reps; ++rep)
                times.push_back(timed_ns([&] { result = f(); }));
            std::sort(times.begin(), times.end());
            const long long median = times[times.size() / 2];
            const std::string digest = tensor_digest(result, s);
            if (first_digest.empty()) {
                first_digest = digest;
                first_method = name;
            } else if (digest != first_digest) {
                OrderedJson fields;
                fields["type"] = "disagreement";
                fields["context"] = "bench";
                fields["n"] = bench_shape_str(cell.dims);
                fields["s"] = s;
                OrderedJson digests;
                digests[first_method] = first_digest;
                digests[name] = digest;
                fields["digests"] = std::move(digests);
                return emit_error(kDisagreement, std::move(fields));
            }
            rows.push_back(Row{bench_shape_str(cell.dims), s, name, median, digest});
        }
    }

    if (out.format == "json") {
        OrderedJson doc;
        OrderedJson jrows = OrderedJson::array();
        for (const Row& r : rows) {
            OrderedJson j;
            j["n"] = r.n;
            j["s"] = r.s;
            j["method"] = r.method;
            j["median_ns"] = r.median_ns;
            j["result_digest"] = r.digest;
            jrows.push_back(std::move(j));
        }
        doc["rows"] = std::move(jrows);
        return write_text(out, json_text(doc));
    }
    // csv and plain share the table; plain pads nothing extra
    std::string text = "n,s,method,median_ns,result_digest\n";
    for (const Row& r : rows)
        text += r.n + "," + std::to_string(r.s) + "," + r.method + "," +
                std::to_string(r.median_ns) + "," + r.digest + "\n";
    return write_text(out, text);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"width-one tensor sums and the combinatorics backing them"};
    app.require_subcommand(1);

    Output out;
    auto* fmt_opt = app.add_option("--format", out.format, "output format")
                        ->check(CLI::IsMember({"json", "csv", "plain"}));
    app.add_option("--out", out.path, "write output to this file instead of stdout");

    unsigned long long max_entries = kDefaultMaxTensorEntries;
    unsigned long long max_enum = kDefaultMaxEnumCount;
    app.add_option("--max-entries", max_entries, "dense tensor cell limit")
        ->envname("WIDTHONE_MAX_ENTRIES");
    app.add_option("--max-enum", max_enum, "enumeration count limit")
        ->envname("WIDTHONE_MAX_ENUM");

    std::vector<int> sum_n;
    long long sum_s = 0;
    std::string sum_method = "all";
    CLI::App* sum = app.add_subcommand("sum", "componentwise sum over all width-one tensors")->fallthrough();
    sum->add_option("--n", sum_n, "shape, comma-separated")->required()->delimiter(',');
    sum->add_option("--s", sum_s, "entry sum")->required()->check(CLI::NonNegativeNumber);
    sum->add_option("--method", sum_method)
        ->check(CLI::IsMember({"tableaux", "hpoly", "oracle", "all"}));

    std::vector<int> eul_p;
    std::string eul_method = "closed";
    CLI::App* eulerian = app.add_subcommand("eulerian", "descent polynomial of a multiset")->fallthrough();
    eulerian->add_option("--p", eul_p, "letter multiplicities, comma-separated")
        ->required()
        ->delimiter(',');
    eulerian->add_option("--method", eul_method)->check(CLI::IsMember({"closed", "brute", "all"}));

    std::vector<int> hv_x;
    CLI::App* hvector = app.add_subcommand("hvector", "f-vector and h-polynomial of the complex below x")->fallthrough();
    hvector->add_option("--x", hv_x, "lattice point, comma-separated")->required()->delimiter(',');

    std::vector<int> enum_n;
    long long enum_s = 0;
    CLI::App* enumerate = app.add_subcommand("enumerate", "list the width-one tensors")->fallthrough();
    enumerate->add_option("--n", enum_n, "shape, comma-separated")->required()->delimiter(',');
    enumerate->add_option("--s", enum_s, "entry sum")->required()->check(CLI::NonNegativeNumber);

    VerifyScope scope;
    CLI::App* verify = app.add_subcommand("verify", "run the identity suite over bounded grids")->fallthrough();
    verify->add_option("--max-d", scope.max_d)->check(CLI::PositiveNumber);
    verify->add_option("--max-n", scope.max_n)->check(CLI::PositiveNumber);
    verify->add_option("--max-s", scope.max_s)->check(CLI::NonNegativeNumber);
    verify->add_option("--L", scope.series_len)->check(CLI::PositiveNumber);
    verify->add_flag("--inject-fault", scope.inject_fault,
                     "corrupt one expected value; the suite must fail (self-test)");

    std::vector<std::string> bench_cells;
    int bench_reps = 5;
    int bench_warmup = 1;
    bool bench_serial = false;
    bool bench_no_oracle = false;
    bool bench_no_default = false;
    CLI::App* bench = app.add_subcommand("bench", "time the two formulas cell by cell")->fallthrough();
    bench->add_option("--cell", bench_cells, "grid cell SHAPE:S, e.g. 2,2:10; repeatable");
    bench->add_option("--reps", bench_reps)->check(CLI::PositiveNumber);
    bench->add_option("--warmup", bench_warmup)->check(CLI::NonNegativeNumber);
    bench->add_flag("--compare-serial", bench_serial, "also time the serial reference kernels");
    bench->add_flag("--no-oracle", bench_no_oracle, "skip the enumeration oracle rows");
    bench->add_flag("--no-default", bench_no_default,
                    "without --cell, run an empty grid instead of the built-in one");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    const Guards guards{static_cast<std::size_t>(max_entries),
                        static_cast<std::size_t>(max_enum), kDefaultMaxWordLen};
    scope.guards = guards;

    try {
        if (app.got_subcommand(sum)) return cmd_sum(sum_n, sum_s, sum_method, guards, out);
        if (app.got_subcommand(eulerian)) return cmd_eulerian(eul_p, eul_method, guards, out);
        if (app.got_subcommand(hvector)) return cmd_hvector(hv_x, guards, out);
        if (app.got_subcommand(enumerate)) return cmd_enumerate(enum_n, enum_s, guards, out);
        if (app.got_subcommand(verify)) return cmd_verify(scope, out);
        if (app.got_subcommand(bench)) {
            std::vector<BenchCell> cells;
            for (const std::string& arg : bench_cells) {
                const std::size_t colon = arg.find(':');
                if (colon == std::string::npos)
                    return emit_usage_error("--cell wants SHAPE:S, got: " + arg);
                BenchCell cell;
                std::string dims = arg.substr(0, colon);
                std::size_t pos = 0;
                while (pos < dims.size()) {
                    std::size_t comma = dims.find(',', pos);
                    if (comma == std::string::npos) comma = dims.size();
                    cell.dims.push_back(std::stoi(dims.substr(pos, comma - pos)));
                    pos = comma + 1;
                }
                cell.s = std::stoll(arg.substr(colon + 1));
                if (cell.s < 0) return emit_usage_error("--cell entry sum must be >= 0");
                cells.push_back(std::move(cell));
            }
            if (cells.empty() && !bench_no_default) {
                for (long long s : {10LL, 100LL, 1000LL}) cells.push_back({{2, 2}, s});
                for (int k : {2, 4, 8}) cells.push_back({{k, k, k, k}, 2});
            }
            if (fmt_opt->count() == 0) out.format = "csv";
            return cmd_bench(cells, bench_reps, bench_warmup, bench_serial, bench_no_oracle,
                             guards, out);
        }
        return emit_usage_error("no subcommand");
    } catch (const GuardError& e) {
        return emit_guard_error(e);
    } catch (const std::invalid_argument& e) {
        return emit_usage_error(e.what());
    } catch (const std::out_of_range& e) {
        return emit_usage_error(e.what());
    } catch (const std::domain_error& e) {
        return emit_usage_error(e.what());
    } catch (const std::overflow_error& e) {
        OrderedJson f;
        f["type"] = "guard";
        f["guard"] = "max_tensor_entries";
        f["requested"] = e.what();
        f["limit"] = std::to_string(guards.max_tensor_entries);
        return emit_error(kGuard, std::move(f));
    }
}
