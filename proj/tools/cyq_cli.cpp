// cyq: batch front end for the engine. Every command prints one JSON (or CSV)
// document on stdout; exit 0 pass, 1 verification failure, 2 input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cyq/cyclic.hpp>
#include <cyq/koszul.hpp>
#include <cyq/lqt.hpp>
#include <cyq/necklace.hpp>
#include <cyq/presentations.hpp>
#include <cyq/quantization.hpp>
#include <cyq/report.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace cyq;

namespace {

constexpr int kSchemaVersion = 1;

struct Session {
    std::string file;
    std::string format = "json";
    unsigned seed = 1;
    int cy_dimension = 2;
    bool verify = false;
    int max_weight = 4;
    int max_degree = 4;
    int max_length = 4;
    int max_letters = 3;
    int rank = 4;
    int chain_length = 3;
    int samples = 200;
    int random_words = 1000;
    std::string side = "alg";
    bool copoisson = false;
};

struct Input {
    LoadedPresentation loaded;
    std::optional<QuadraticPresentation> algebra;
    std::optional<Coalgebra> coalgebra;  // given directly or the preprojective dual
};

Input read_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedInput("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    Input inp;
    inp.loaded = load_presentation(ss.str());
    inp.algebra = inp.loaded.algebra;
    inp.coalgebra = inp.loaded.coalgebra;
    if (inp.loaded.quiver) {
        auto pd = preprojective_from_quiver(*inp.loaded.quiver);
        inp.algebra = pd.algebra;
        inp.coalgebra = pd.coalgebra;
    }
    return inp;
}

const QuadraticPresentation& need_algebra(const Input& in) {
    if (!in.algebra) throw UnsupportedInput("this command needs a quadratic algebra or a quiver");
    return *in.algebra;
}

Coalgebra need_coalgebra(const Input& in, int max_weight) {
    if (in.coalgebra) return *in.coalgebra;
    return koszul_dual(need_algebra(in), std::max(2, max_weight)).coalg;
}

std::string lincomb(const std::vector<std::pair<std::string, Rational>>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    for (auto& [body, c] : terms) {
        Rational a = abs(c);
        if (out.empty()) out += c < 0 ? "-" : "";
        else out += c < 0 ? " - " : " + ";
        if (a != 1) out += a.get_str() + "*";
        out += body;
    }
    return out;
}

json dump_algebra(const QuadraticPresentation& p) {
    json j;
    j["name"] = p.name;
    j["vertices"] = p.vertices;
    json gens = json::array();
    for (auto& g : p.generators)
        gens.push_back({{"id", g.id}, {"degree", g.degree}, {"weight", g.weight},
                        {"src", p.vertices[g.src]}, {"tgt", p.vertices[g.tgt]}});
    j["generators"] = gens;
    json rels = json::array();
    for (auto& r : p.relations) {
        std::vector<std::pair<std::string, Rational>> t;
        for (auto& [pr, c] : r) t.push_back({p.generators[pr.first].id + "." + p.generators[pr.second].id, c});
        rels.push_back(lincomb(t));
    }
    j["relations"] = rels;
    return j;
}

json dump_coalgebra(const Coalgebra& C) {
    json j;
    j["name"] = C.name;
    j["vertices"] = C.vertices;
    json basis = json::array();
    for (auto& b : C.basis)
        basis.push_back({{"id", b.id}, {"degree", b.degree}, {"weight", b.weight},
                         {"src", C.vertices[b.src]}, {"tgt", C.vertices[b.tgt]}});
    j["basis"] = basis;
    json cop = json::object();
    for (int i = 0; i < C.size(); ++i) {
        std::vector<std::pair<std::string, Rational>> t;
        for (auto& term : C.delta[i]) t.push_back({C.basis[term.l].id + "|" + C.basis[term.r].id, term.c});
        cop[C.basis[i].id] = lincomb(t);
    }
    j["coproduct"] = cop;
    json cu = json::object();
    for (int i = 0; i < C.size(); ++i)
        if (C.counit[i] != 0) cu[C.basis[i].id] = C.counit[i].get_str();
    j["counit"] = cu;
    if (C.has_pairing) {
        json pr;
        pr["degree"] = C.pairing_degree;
        for (auto& [xy, v] : C.pairing) pr[C.basis[xy.first].id + "," + C.basis[xy.second].id] = v.get_str();
        j["pairing"] = pr;
    }
    return j;
}

json dump_table(const std::map<std::pair<int, int>, int>& t) {
    json a = json::array();
    for (auto& [wd, dim] : t) a.push_back({{"weight", wd.first}, {"degree", wd.second}, {"dim", dim}});
    return a;
}

json dump_report(const Report& r) {
    json j;
    j["ok"] = r.ok();
    json ids = json::array();
    for (auto& [id, n] : r.checked) {
        json e{{"identity", id}, {"checked", n}, {"pass", r.passed(id)}};
        for (auto& f : r.failures)
            if (f.identity == id) e["witness"] = f.witness;
        ids.push_back(e);
    }
    for (auto& f : r.failures)  // failures raised before any instance was counted
        if (!r.checked.count(f.identity))
            ids.push_back({{"identity", f.identity}, {"checked", 0}, {"pass", false}, {"witness", f.witness}});
    j["identities"] = ids;
    j["notes"] = r.notes;
    return j;
}

class Output {
public:
    Output(const std::string& command, const Session& s) {
        doc_["schema"] = kSchemaVersion;
        doc_["command"] = command;
        doc_["file"] = s.file;
        doc_["seed"] = s.seed;
        doc_["cy_dimension"] = s.cy_dimension;
    }
    json& operator[](const char* k) { return doc_[k]; }
    void report(const std::string& name, const Report& r) {
        doc_["reports"][name] = dump_report(r);
        ok_ = ok_ && r.ok();
    }
    bool ok() const { return ok_; }

    int emit(const std::string& format) {
        doc_["status"] = ok_ ? "pass" : "fail";
        if (format == "csv") emit_csv();
        else std::cout << doc_.dump(2) << "\n";
        return ok_ ? 0 : 1;
    }

private:
    // CSV carries the report rows and the dimension tables; structured dumps stay JSON-only.
    void emit_csv() {
        std::cout << "# command=" << doc_["command"].get<std::string>() << " seed=" << doc_["seed"].get<unsigned>()
                  << " status=" << doc_["status"].get<std::string>() << "\n";
        auto quote = [](std::string s) {
            std::string o = "\"";
            for (char c : s) o += c == '"' ? std::string("\"\"") : std::string(1, c);
            return o + "\"";
        };
        std::cout << "section,key,value,extra\n";
        if (doc_.contains("tables"))
            for (auto& [name, rows] : doc_["tables"].items())
                for (auto& row : rows)
                    std::cout << name << "," << row["weight"].get<int>() << ":" << row["degree"].get<int>() << ","
                              << row["dim"].get<int>() << ",\n";
        if (doc_.contains("reports"))
            for (auto& [name, rep] : doc_["reports"].items())
                for (auto& e : rep["identities"])
                    std::cout << name << "," << quote(e["identity"].get<std::string>()) << ","
                              << (e["pass"].get<bool>() ? "pass" : "fail") << ","
                              << quote(e.contains("witness") ? e["witness"].get<std::string>() : "") << "\n";
    }

    json doc_;
    bool ok_ = true;
};

Report acyclicity_report(const AcyclicityReport& a) {
    Report r;
    r.count("d^2 = 0");
    if (!a.d_squared_zero) r.fail("d^2 = 0", "Koszul complex differential does not square to zero");
    for (auto& [wi, h] : a.homology) {
        r.count("Koszul complex acyclic");
        if (h != 0)
            r.fail("Koszul complex acyclic", "weight " + std::to_string(wi.first) + ", K_" +
                                                 std::to_string(wi.second) + " has homology of dimension " +
                                                 std::to_string(h));
    }
    return r;
}

void run_koszul(Output& out, const Input& in, const Session& s) {
    auto& p = need_algebra(in);
    auto kd = koszul_dual(p, std::max(2, s.max_weight));
    json k;
    k["coalgebra"] = dump_coalgebra(kd.coalg);
    k["dimensions"] = dump_table(dimension_table(kd.coalg));
    out["koszul_dual"] = k;
    out.report("koszul", acyclicity_report(koszul_acyclicity_check(p, s.max_weight)));
}

void run_homology(Output& out, const Input& in, const Session& s) {
    if (s.side == "alg" || s.side == "both")
        out["tables"]["alg"] = dump_table(cyclic_homology_algebra(need_algebra(in), s.max_weight, s.max_degree));
    std::optional<HCTable> co;
    if (s.side == "coalg" || s.side == "both") {
        co = cyclic_homology_coalgebra(need_coalgebra(in, s.max_weight + 1), s.max_weight, s.max_degree);
        out["tables"]["coalg"] = dump_table(*co);
    }
    if (s.side == "both") {
        auto al = cyclic_homology_algebra(need_algebra(in), s.max_weight, s.max_degree);
        Report r;
        for (auto& [wd, d] : al) {
            r.count("HC(A) = HC(A^!)");
            int e = co->count(wd) ? co->at(wd) : 0;
            if (d != e)
                r.fail("HC(A) = HC(A^!)", "weight " + std::to_string(wd.first) + ", degree " +
                                              std::to_string(wd.second) + ": " + std::to_string(d) + " vs " +
                                              std::to_string(e));
        }
        out.report("homology", r);
    }
}

void run_necklace(Output& out, const Input& in, const Session& s) {
    auto C = need_coalgebra(in, std::max(s.max_length + 1, 4));
    NecklaceBialgebra L(C);
    auto B = L.basis(s.max_length);
    json basis = json::array(), br = json::object(), cob = json::object();
    for (auto& x : B) {
        basis.push_back(L.to_string(x));
        auto& d = L.cobracket(x);
        if (!d.empty()) cob[L.to_string(x)] = L.to_string(d);
    }
    for (auto& x : B)
        for (auto& y : B) {
            auto& v = L.bracket(x, y);
            if (!v.empty()) br[L.to_string(x) + " , " + L.to_string(y)] = L.to_string(v);
        }
    out["necklaces"] = basis;
    out["bracket"] = br;
    out["cobracket"] = cob;
    if (s.verify) out.report("lie_bialgebra", verify_lie_bialgebra(C, s.max_length));
    if (s.copoisson) out.report("copoisson", vhh_verify_copoisson(C, std::min(s.max_length, 3), s.samples, s.seed));
}

void run_lqt(Output& out, const Input& in, const Session& s) {
    auto C = need_coalgebra(in, std::max(s.max_degree + 1, 4));
    std::optional<GradedAlgebra> A;
    if (in.algebra) A.emplace(*in.algebra, std::max(4, 4 * s.chain_length));
    LqtOptions o;
    o.rank = s.rank;
    o.degree_bound = s.max_degree;
    o.chain_length = s.chain_length;
    o.samples = s.samples;
    o.seed = s.seed;
    auto res = verify_lqt(C, A ? &*A : nullptr, o);
    out["tables"]["invariant_ce"] = dump_table(res.ce);
    out["tables"]["lambda_hc"] = dump_table(res.lambda);
    out["tables"]["necklace_hc"] = dump_table(res.hc);
    out.report("lqt", res.report);
}

void run_quantize(Output& out, const Input& in, const Session& s) {
    auto C = need_coalgebra(in, 4);
    HopfQuantization Q(C);
    json forms = json::object();
    for (auto& w : Q.basis(s.max_letters)) {
        json e;
        e["degree"] = Q.degree(w);
        e["coproduct"] = Q.to_string(Q.coproduct(w));
        e["antipode"] = Q.to_string(Q.antipode(w));
        e["differential"] = Q.to_string(Q.differential(w));
        forms[Q.to_string(w)] = e;
    }
    out["basis"] = forms;
    if (s.verify) {
        QuantizationVerifyOptions o;
        o.max_letters = s.max_letters;
        o.necklace_length = s.max_length;
        o.random_words = s.random_words;
        o.seed = s.seed;
        out.report("quantization", verify_quantization(C, o));
    }
}

int input_error(const std::string& command, const Session& s, const std::string& what) {
    std::cerr << "cyq: error: " << what << "\n";
    json j;
    j["schema"] = kSchemaVersion;
    j["command"] = command;
    j["file"] = s.file;
    j["seed"] = s.seed;
    j["status"] = "input-error";
    j["error"] = what;
    std::cout << j.dump(2) << "\n";
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cyq: Koszul duality, cyclic homology, necklace Lie bialgebras and their quantization"};
    app.require_subcommand(1);
    Session s;
    bool q_koszul = false, q_homology = false, q_necklace = false, q_lqt = false, q_quantize = false;

    auto common = [&](CLI::App* sub) {
        sub->add_option("file", s.file, "presentation file (TOML)")->required();
        sub->add_option("--seed", s.seed, "seed for randomized sweeps");
        sub->add_option("--format", s.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--cy-dimension", s.cy_dimension, "Calabi-Yau dimension n");
    };
    auto positive = CLI::PositiveNumber;
    auto nonneg = CLI::NonNegativeNumber;

    auto* kd = app.add_subcommand("koszul-dual", "dual coalgebra and Koszul acyclicity");
    common(kd);
    kd->add_option("--max-weight", s.max_weight)->check(positive);

    auto* hc = app.add_subcommand("homology", "cyclic homology tables");
    common(hc);
    hc->add_option("--side", s.side)->check(CLI::IsMember({"alg", "coalg", "both"}));
    hc->add_option("--max-weight", s.max_weight)->check(nonneg);
    hc->add_option("--max-degree", s.max_degree)->check(nonneg);

    auto* nk = app.add_subcommand("necklace", "necklace bracket, cobracket and Lie bialgebra checks");
    common(nk);
    nk->add_flag("--verify", s.verify);
    nk->add_flag("--copoisson", s.copoisson, "also check the co-Poisson identity in V_{h,hbar}");
    nk->add_option("--max-length", s.max_length)->check(nonneg);
    nk->add_option("--samples", s.samples)->check(nonneg);

    auto* lq = app.add_subcommand("lqt", "trace maps and the invariant CE comparison");
    common(lq);
    lq->add_option("--rank", s.rank)->check(positive);
    lq->add_option("--max-degree", s.max_degree)->check(positive);
    lq->add_option("--chain-length", s.chain_length)->check(positive);
    lq->add_option("--samples", s.samples)->check(nonneg);

    auto* qz = app.add_subcommand("quantize", "Hopf algebra quantization");
    common(qz);
    qz->add_flag("--verify", s.verify);
    qz->add_option("--max-letters", s.max_letters)->check(nonneg);
    qz->add_option("--max-length", s.max_length, "necklace length for the classical limits")->check(nonneg);
    qz->add_option("--random-words", s.random_words)->check(nonneg);

    auto* qv = app.add_subcommand("quiver", "preprojective algebra of a quiver, then any of the other commands");
    common(qv);
    qv->add_flag("--koszul-dual", q_koszul);
    qv->add_flag("--homology", q_homology);
    qv->add_flag("--necklace", q_necklace);
    qv->add_flag("--lqt", q_lqt);
    qv->add_flag("--quantize", q_quantize);
    qv->add_flag("--verify", s.verify);
    qv->add_flag("--copoisson", s.copoisson);
    qv->add_option("--side", s.side)->check(CLI::IsMember({"alg", "coalg", "both"}));
    qv->add_option("--max-weight", s.max_weight)->check(nonneg);
    qv->add_option("--max-degree", s.max_degree)->check(nonneg);
    qv->add_option("--max-length", s.max_length)->check(nonneg);
    qv->add_option("--max-letters", s.max_letters)->check(nonneg);
    qv->add_option("--rank", s.rank)->check(positive);
    qv->add_option("--chain-length", s.chain_length)->check(positive);
    qv->add_option("--samples", s.samples)->check(nonneg);
    qv->add_option("--random-words", s.random_words)->check(nonneg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    auto* sub = app.get_subcommands().front();
    std::string command = sub->get_name();
    Input in;
    try {
        in = read_input(s.file);
    } catch (const std::runtime_error& e) {  // parse, unsupported or invalid presentation
        return input_error(command, s, e.what());
    }
    Output out(command, s);
    try {
        if (command == "koszul-dual") run_koszul(out, in, s);
        else if (command == "homology") run_homology(out, in, s);
        else if (command == "necklace") run_necklace(out, in, s);
        else if (command == "lqt") run_lqt(out, in, s);
        else if (command == "quantize") run_quantize(out, in, s);
        else {
            if (!in.loaded.quiver) throw UnsupportedInput("'quiver' needs a file with a [quiver] section");
            out["algebra"] = dump_algebra(*in.algebra);
            out["coalgebra"] = dump_coalgebra(*in.coalgebra);
            if (q_koszul) run_koszul(out, in, s);
            if (q_homology) run_homology(out, in, s);
            if (q_necklace) run_necklace(out, in, s);
            if (q_lqt) run_lqt(out, in, s);
            if (q_quantize) run_quantize(out, in, s);
        }
        return out.emit(s.format);
    } catch (const MalformedInput& e) {
        return input_error(command, s, e.what());
    } catch (const UnsupportedInput& e) {
        return input_error(command, s, e.what());
    } catch (const InvariantViolation& e) {
        // an engine invariant broke on valid input: that is a verification failure
        Report r;
        r.fail("engine invariant", e.what());
        out.report("engine", r);
        return out.emit(s.format);
    }
}
