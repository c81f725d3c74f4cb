#pragma once

#include <fstream>
#include <map>

#include "skewcell/adjust.hpp"
#include "skewcell/instances.hpp"
#include "skewcell/skeleton_export.hpp"

namespace skewcell {

// In-memory CLI runner: artifacts come back as path -> bytes so both the
// binary and the tests can use the same entry point. Exit codes: 0 all checks
// pass, 1 a verification failed, 2 usage or parse error.
struct CliResult {
    int exit_code = 0;
    std::string output; // human summary
    std::map<std::string, std::string> artifacts;
};

namespace cli_detail {

struct Options {
    std::string subcommand;
    std::string gen, file, field, format = "csv", out = ".";
    long char_c = 0;
    long e = 0, p = 0, n = -1;
    std::vector<long> rho;
    bool strict = true;
};

inline std::vector<long> parse_longs(const std::string& s) {
    std::vector<long> out;
    std::string cur;
    for (char ch : s + ",") {
        if (ch == ',') {
            require(!cur.empty(), "UsageError", "empty integer in list '" + s + "'");
            out.push_back(std::stol(cur));
            cur.clear();
        } else
            cur += ch;
    }
    return out;
}

inline Options parse_args(const std::vector<std::string>& args) {
    Options o;
    require(!args.empty(), "UsageError", "missing subcommand");
    o.subcommand = args[0];
    for (size_t i = 1; i < args.size(); ++i) {
        auto need = [&](const std::string& flag) {
            require(i + 1 < args.size(), "UsageError", flag + " needs a value");
            return args[++i];
        };
        const std::string& a = args[i];
        if (a == "--gen") o.gen = need(a);
        else if (a == "--file") o.file = need(a);
        else if (a == "--field") o.field = need(a);
        else if (a == "--format") o.format = need(a);
        else if (a == "--out") o.out = need(a);
        else if (a == "--char") o.char_c = std::stol(need(a));
        else if (a == "--e") o.e = std::stol(need(a));
        else if (a == "--p") o.p = std::stol(need(a));
        else if (a == "--n") o.n = std::stol(need(a));
        else if (a == "--rho") o.rho = parse_longs(need(a));
        else if (a == "--no-strict") o.strict = false;
        else fail("UsageError", "unknown flag '" + a + "'");
    }
    require(o.format == "csv" || o.format == "json", "UsageError",
            "--format must be csv or json");
    return o;
}

inline Instance make_instance(const Options& o, std::string* comment = nullptr) {
    if (!o.file.empty()) {
        std::ifstream in(o.file, std::ios::binary);
        require(in.good(), "UsageError", "cannot read '" + o.file + "'");
        std::string text(std::istreambuf_iterator<char>(in), {});
        AlgebraFile f = load_algebra(text);
        if (comment && f.comment) *comment = *f.comment;
        require(f.datum.has_value(), "UsageError", "file carries no cell datum");
        Instance inst{std::move(f.algebra), std::move(*f.datum),
                      f.shift ? std::move(*f.shift) : ShiftAutomorphism{}};
        if (!o.field.empty()) {
            FieldPtr target = Field::make(parse_descriptor(o.field));
            inst.algebra = base_change(inst.algebra, target);
        }
        return inst;
    }
    require(!o.gen.empty(), "UsageError", "need --gen or --file");
    require(!o.field.empty() || o.gen.rfind("klr:", 0) == 0, "UsageError",
            "--field is required for generators");
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : o.gen + ":") {
        if (ch == ':') {
            parts.push_back(cur);
            cur.clear();
        } else
            cur += ch;
    }
    if (parts[0] == "toy") {
        require(parts.size() == 2, "UsageError", "toy:<m>");
        return gen_toy(std::stol(parts[1]), Field::make(parse_descriptor(o.field)));
    }
    if (parts[0] == "matrix") {
        require(parts.size() == 4, "UsageError", "matrix:<n>:<d1,..,dn>:<w1,..,wn>");
        return gen_matrix(std::stol(parts[1]), parse_longs(parts[2]), parse_longs(parts[3]),
                          Field::make(parse_descriptor(o.field)));
    }
    if (parts[0] == "klr") {
        require(parts.size() == 2, "UsageError", "klr:<id>");
        Instance inst = klr_instance(parts[1]);
        if (!o.field.empty()) {
            FieldPtr target = Field::make(parse_descriptor(o.field));
            inst.algebra = base_change(inst.algebra, target);
        }
        return inst;
    }
    fail("UsageError", "unknown generator '" + parts[0] + "'");
}

inline HeckeParams make_params(const Options& o) {
    require(o.e >= 2 && o.p >= 2 && o.n >= 0 && !o.rho.empty(), "UsageError",
            "need --e, --p, --n and --rho");
    return derive_params(o.e, o.p, o.n, o.rho, o.strict);
}

inline nlohmann::ordered_json report_json(const Report& rep) {
    nlohmann::ordered_json items = nlohmann::ordered_json::array();
    for (auto& it : rep.items) {
        nlohmann::ordered_json j;
        j["check"] = it.name;
        j["pass"] = it.pass;
        if (!it.pass) j["witness"] = it.witness;
        items.push_back(j);
    }
    nlohmann::ordered_json out;
    out["ok"] = rep.ok();
    out["items"] = items;
    return out;
}

inline std::string dump(const nlohmann::ordered_json& j) { return j.dump(1) + "\n"; }

inline nlohmann::ordered_json decomp_json(const DecompMatrix& dm) {
    nlohmann::ordered_json out;
    out["rows"] = dm.row_labels;
    out["cols"] = dm.col_labels;
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (auto& row : dm.d) {
        std::vector<std::string> r;
        for (auto& e : row) r.push_back(e.str());
        entries.push_back(r);
    }
    out["entries"] = entries;
    return out;
}

inline void emit_decomp(CliResult& res, const Options& o, const std::string& stem,
                        const DecompMatrix& dm) {
    if (o.format == "csv")
        res.artifacts[stem + ".csv"] = dm.csv();
    else
        res.artifacts[stem + ".json"] = dump(decomp_json(dm));
}

inline Scalar instance_eps(const Instance& inst) {
    ShiftOrders ord;
    Report rep = verify_shift(inst.algebra, inst.datum, inst.shift, &ord);
    require(rep.ok(), "DatumNotVerified", "shift fails verification:\n" + rep.summary());
    return root_of_order(inst.algebra.field, (long)ord.sp);
}

} // namespace cli_detail

inline CliResult run_cli(const std::vector<std::string>& args) {
    using namespace cli_detail;
    CliResult res;
    try {
        Options o = parse_args(args);
        if (o.subcommand == "verify") {
            Instance inst = make_instance(o);
            inst.algebra.check_structure();
            Report rep = verify_skew_datum(inst.algebra, inst.datum);
            if (!inst.shift.sigmaA.empty()) {
                Report srep = verify_shift(inst.algebra, inst.datum, inst.shift);
                for (auto& it : srep.items) rep.items.push_back(it);
            }
            res.artifacts["verify.json"] = dump(report_json(rep));
            res.output = rep.summary();
            res.exit_code = rep.ok() ? 0 : 1;
        } else if (o.subcommand == "decomp") {
            Instance inst = make_instance(o);
            CellEngine eng(inst.algebra, inst.datum);
            auto dm = graded_decomp(inst.algebra, eng);
            emit_decomp(res, o, "decomp", dm);
            res.output = "decomposition matrix: " + std::to_string(dm.rows.size()) +
                         " rows, " + std::to_string(dm.cols.size()) + " columns\n";
        } else if (o.subcommand == "fixedpoint") {
            Instance inst = make_instance(o);
            Scalar eps = instance_eps(inst);
            auto R = fixed_point_datum(inst.algebra, inst.datum, inst.shift, eps);
            AlgebraFile file;
            file.algebra = R.sub;
            file.datum = R.datum;
            std::vector<std::vector<std::string>> emb;
            for (size_t j = 0; j < R.sub.dim; ++j) {
                std::vector<std::string> col;
                for (size_t i = 0; i < R.embedding.rows(); ++i)
                    col.push_back(R.embedding.at(i, j).str());
                emb.push_back(std::move(col));
            }
            file.embedding = emb;
            file.comment = std::string("fixed-point subalgebra; flagged ") +
                           (R.cellular ? "cellular" : "skew cellular");
            res.artifacts["fixedpoint.json"] = save_algebra(file);
            res.output = "dim A^sigma = " + std::to_string(R.sub.dim) +
                         (R.cellular ? " (cellular)" : " (skew cellular)") + "\n";
        } else if (o.subcommand == "clifford") {
            Instance inst = make_instance(o);
            Scalar eps = instance_eps(inst);
            auto R = fixed_point_datum(inst.algebra, inst.datum, inst.shift, eps);
            Report rep = clifford_suite(inst.algebra, inst.datum, inst.shift, eps, R);
            res.artifacts["clifford.json"] = dump(report_json(rep));
            res.output = rep.summary();
            res.exit_code = rep.ok() ? 0 : 1;
        } else if (o.subcommand == "adjust") {
            require(o.char_c > 0, "UsageError", "adjust needs --char");
            Instance inst = make_instance(o);
            auto adj = adjustment(inst.algebra, inst.datum, inst.shift, o.char_c);
            emit_decomp(res, o, "adjust_dq", adj.dq);
            emit_decomp(res, o, "adjust_df", adj.df);
            if (o.format == "csv") {
                std::string s = "cell";
                for (auto& l : adj.labels) s += "," + l;
                s += "\n";
                for (size_t i = 0; i < adj.labels.size(); ++i) {
                    s += adj.labels[i];
                    for (size_t j = 0; j < adj.labels.size(); ++j)
                        s += "," + adj.af[i][j].str();
                    s += "\n";
                }
                res.artifacts["adjust_af.csv"] = s;
            } else {
                nlohmann::ordered_json j;
                j["labels"] = adj.labels;
                nlohmann::ordered_json entries = nlohmann::ordered_json::array();
                for (auto& row : adj.af) {
                    std::vector<std::string> r;
                    for (auto& e : row) r.push_back(e.str());
                    entries.push_back(r);
                }
                j["entries"] = entries;
                res.artifacts["adjust_af.json"] = dump(j);
            }
            res.artifacts["adjust_report.json"] = dump(report_json(adj.checks));
            res.output = adj.checks.summary();
            res.exit_code = adj.checks.ok() ? 0 : 1;
        } else if (o.subcommand == "uglov") {
            HeckeParams P = make_params(o);
            nlohmann::ordered_json j;
            j["params"] = params_json(P);
            nlohmann::ordered_json list = nlohmann::ordered_json::array();
            for (auto& lam : uglov(o.n, P)) list.push_back(multipartition_json(lam));
            j["uglov"] = list;
            res.artifacts["uglov.json"] = dump(j);
            res.output = std::to_string(list.size()) + " Uglov multipartitions\n";
        } else if (o.subcommand == "dominance") {
            HeckeParams P = make_params(o);
            auto parts = enumerate_partitions(o.n, P);
            nlohmann::ordered_json j;
            j["params"] = params_json(P);
            std::vector<std::string> ids;
            for (auto& lam : parts) ids.push_back(lam.str());
            j["shapes"] = ids;
            nlohmann::ordered_json rel = nlohmann::ordered_json::array();
            for (size_t i = 0; i < parts.size(); ++i)
                for (size_t k = 0; k < parts.size(); ++k)
                    if (i != k && dominates(parts[i], parts[k], P)) rel.push_back({i, k});
            j["strictly_dominates"] = rel;
            res.artifacts["dominance.json"] = dump(j);
            res.output = std::to_string(parts.size()) + " shapes\n";
        } else if (o.subcommand == "tableaux") {
            HeckeParams P = make_params(o);
            nlohmann::ordered_json j;
            j["params"] = params_json(P);
            nlohmann::ordered_json shapes = nlohmann::ordered_json::array();
            for (auto& lam : enumerate_partitions(o.n, P)) {
                nlohmann::ordered_json s;
                s["shape"] = multipartition_json(lam);
                s["id"] = lam.str();
                nlohmann::ordered_json loads = nlohmann::ordered_json::array();
                for (auto& g : lam.nodes())
                    loads.push_back({{"node", {g.r, g.c, g.l}},
                                     {"residue", {residue(g, P).a, residue(g, P).b}},
                                     {"loading", rat_str(loading(g, P))}});
                s["nodes"] = loads;
                nlohmann::ordered_json tabs = nlohmann::ordered_json::array();
                for (auto& t : enumerate_std(lam)) {
                    nlohmann::ordered_json tj = tableau_json(t);
                    tj["degree"] = tableau_degree(t, P);
                    nlohmann::ordered_json rs = nlohmann::ordered_json::array();
                    for (auto& r : residue_sequence(t, P)) rs.push_back({r.a, r.b});
                    tj["residues"] = rs;
                    tabs.push_back(tj);
                }
                s["std"] = tabs;
                shapes.push_back(s);
            }
            j["shapes"] = shapes;
            res.artifacts["tableaux.json"] = dump(j);
            res.output = "tableaux listed\n";
        } else if (o.subcommand == "skeleton") {
            HeckeParams P = make_params(o);
            auto sk = psig_skeleton(o.n, P);
            res.artifacts["skeleton.json"] = dump(skeleton_json(sk));
            res.output = std::to_string(sk.elements.size()) + " P_sigma elements\n";
        } else {
            fail("UsageError", "unknown subcommand '" + o.subcommand + "'");
        }
    } catch (const error& e) {
        res.output = std::string(e.what()) + "\n";
        res.exit_code = std::string(e.code()) == "UsageError" || e.code() == "ParseError" ? 2 : 1;
    } catch (const std::exception& e) {
        res.output = std::string(e.what()) + "\n";
        res.exit_code = 2;
    }
    return res;
}

} // namespace skewcell
