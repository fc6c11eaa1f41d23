#include "tsys/cli.hpp"

#include "tsys/congruences.hpp"
#include "tsys/hyperfields.hpp"
#include "tsys/linalg.hpp"
#include "tsys/module_systems.hpp"
#include "tsys/polynomials.hpp"
#include "tsys/symmetrization.hpp"
#include "tsys/tropicalization.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

namespace tsys::cli {

namespace {

using json = nlohmann::json;

struct Ctx {
    std::string format = "json";
    std::uint64_t seed = 1;
    std::size_t bound = 64;
    std::string system;
    std::vector<std::string> args;
};

// Precondition failure carrying a structured payload.
class Rejected : public Error {
public:
    Rejected(std::string code, const std::string& what, json detail)
        : Error(std::move(code), what), detail_(std::move(detail)) {}
    const json& detail() const { return detail_; }

private:
    json detail_;
};

// ---------------------------------------------------------------------------
// Input.

json parse_text(const std::string& text, const std::string& origin) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidInput("malformed JSON in " + origin + ": " + e.what());
    }
}

// Inline JSON, a path to a JSON file, or a bare token kept as a string.
json load(const std::string& arg) {
    const auto first = arg.find_first_not_of(" \t\n");
    if (first != std::string::npos && std::string("{[\"").find(arg[first]) != std::string::npos)
        return parse_text(arg, "argument");
    if (std::filesystem::is_regular_file(arg)) {
        std::ifstream in(arg);
        std::stringstream buf;
        buf << in.rdbuf();
        return parse_text(buf.str(), arg);
    }
    return json(arg);
}

const std::string& arg(const Ctx& c, std::size_t i, const char* what) {
    if (i >= c.args.size()) throw InvalidInput(std::string("missing argument: ") + what);
    return c.args[i];
}

void expect_args(const Ctx& c, std::size_t lo, std::size_t hi) {
    if (c.args.size() < lo || c.args.size() > hi)
        throw InvalidInput("expected " + std::to_string(lo) + (lo == hi ? "" : ".." + std::to_string(hi)) +
                           " arguments, got " + std::to_string(c.args.size()));
}

Rational rational_of(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) throw InvalidInput("rational expected as a string: " + j.dump());
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        throw InvalidInput("not a rational: " + j.dump());
    }
}

std::string str_of(const json& j, const char* what) {
    if (!j.is_string()) throw InvalidInput(std::string(what) + " must be a string: " + j.dump());
    return j.get<std::string>();
}

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

// ---------------------------------------------------------------------------
// Systems.

int index_of(const std::vector<std::string>& names, const json& j) {
    const std::string n = str_of(j, "element name");
    auto it = std::find(names.begin(), names.end(), n);
    if (it == names.end()) throw InvalidElement("unknown element \"" + n + "\"");
    return static_cast<int>(it - names.begin());
}

FinSpec finspec_of(const json& j) {
    FinSpec s;
    for (const auto& n : field(j, "names")) s.names.push_back(str_of(n, "name"));
    auto table = [&](const json& t, bool partial) {
        std::vector<std::vector<int>> out;
        if (!t.is_array()) throw InvalidInput("table must be an array of rows");
        for (const auto& row : t) {
            std::vector<int> r;
            if (!row.is_array()) throw InvalidInput("table row must be an array");
            for (const auto& v : row) r.push_back(partial && v.is_null() ? -1 : index_of(s.names, v));
            out.push_back(r);
        }
        return out;
    };
    if (j.value("kind", std::string("semiring")) == "module") s.kind = Kind::module;
    s.add = table(field(j, "add"), false);
    if (j.contains("mul")) s.mul = table(j.at("mul"), s.kind == Kind::module);
    if (j.contains("zero")) s.zero = index_of(s.names, j.at("zero"));
    if (j.contains("one") && !j.at("one").is_null()) s.one = index_of(s.names, j.at("one"));
    for (const auto& t : j.value("tangibles", json::array())) s.tangibles.push_back(index_of(s.names, t));
    const json& neg = field(j, "neg");
    s.neg.assign(s.names.size(), -1);
    if (neg.is_object()) {
        for (auto it = neg.begin(); it != neg.end(); ++it) s.neg[index_of(s.names, it.key())] = index_of(s.names, it.value());
    } else if (neg.is_array() && neg.size() == s.names.size()) {
        for (std::size_t i = 0; i < neg.size(); ++i) s.neg[i] = index_of(s.names, neg[i]);
    } else {
        throw InvalidInput("neg must map every element");
    }
    for (int v : s.neg)
        if (v < 0) throw InvalidInput("neg must map every element");
    const json surpass = j.value("surpass", json("circ"));
    if (surpass.is_array()) {
        std::vector<std::pair<int, int>> pairs;
        for (const auto& p : surpass) {
            if (!p.is_array() || p.size() != 2) throw InvalidInput("surpass pairs are [a,b]");
            pairs.push_back({index_of(s.names, p[0]), index_of(s.names, p[1])});
        }
        s.surpass = pairs;
    } else if (surpass != json("circ")) {
        throw InvalidInput("surpass must be \"circ\" or a pair list");
    }
    return s;
}

json finsys_json(const FinSys& f) {
    const FinSpec& s = f.spec();
    json j;
    j["names"] = s.names;
    auto table = [&](const std::vector<std::vector<int>>& t) {
        json out = json::array();
        for (const auto& row : t) {
            json r = json::array();
            for (int v : row) r.push_back(v < 0 ? json(nullptr) : json(s.names[v]));
            out.push_back(r);
        }
        return out;
    };
    j["add"] = table(s.add);
    bool any_mul = false;
    for (const auto& row : s.mul)
        for (int v : row) any_mul |= v >= 0;
    if (any_mul) j["mul"] = table(s.mul);
    if (s.zero) j["zero"] = s.names[*s.zero];
    if (s.one) j["one"] = s.names[*s.one];
    json tang = json::array();
    for (int t : f.tangible_indices()) tang.push_back(s.names[t]);
    j["tangibles"] = tang;
    json neg = json::object();
    for (int i = 0; i < f.size(); ++i) neg[s.names[i]] = s.names[s.neg[i]];
    j["neg"] = neg;
    if (s.surpass) {
        json pairs = json::array();
        for (auto [a, b] : *s.surpass) pairs.push_back({s.names[a], s.names[b]});
        j["surpass"] = pairs;
    } else {
        j["surpass"] = "circ";
    }
    if (s.kind == Kind::module) j["kind"] = "module";
    return j;
}

Hyperfield hyperfield_of(const json& j) {
    if (j.is_string()) {
        const std::string n = j.get<std::string>();
        if (n == "krasner") return make_krasner();
        if (n == "signs") return make_signs();
        throw InvalidInput("unknown hyperfield \"" + n + "\"");
    }
    Hyperfield h;
    h.name = j.value("name", std::string("hyperfield"));
    for (const auto& n : field(j, "elements")) h.names.push_back(str_of(n, "element"));
    const int n = h.size();
    if (n < 2 || n > 63) throw InvalidInput("hyperfield needs 2..63 elements");
    h.zero = index_of(h.names, j.value("zero", json("0")));
    h.one = index_of(h.names, j.value("one", json("1")));
    h.hyperadd.assign(n, std::vector<ElemSet>(n, 0));
    h.mul.assign(n, std::vector<int>(n, -1));
    h.neg.assign(n, -1);
    auto key_pair = [&](const std::string& key) {
        auto comma = key.find(',');
        if (comma == std::string::npos) throw InvalidInput("table keys are \"a,b\"");
        return std::pair<int, int>{index_of(h.names, key.substr(0, comma)), index_of(h.names, key.substr(comma + 1))};
    };
    const json& add = field(j, "hyperadd");
    for (auto it = add.begin(); it != add.end(); ++it) {
        auto [a, b] = key_pair(it.key());
        ElemSet s = 0;
        for (const auto& v : it.value()) s |= ElemSet{1} << index_of(h.names, v);
        h.hyperadd[a][b] = s;
    }
    const json& mul = field(j, "mul");
    for (auto it = mul.begin(); it != mul.end(); ++it) {
        auto [a, b] = key_pair(it.key());
        h.mul[a][b] = index_of(h.names, it.value());
    }
    const json& neg = field(j, "neg");
    for (auto it = neg.begin(); it != neg.end(); ++it) h.neg[index_of(h.names, it.key())] = index_of(h.names, it.value());
    for (int a = 0; a < n; ++a) {
        if (h.neg[a] < 0) throw InvalidInput("neg must map every element");
        for (int b = 0; b < n; ++b)
            if (h.mul[a][b] < 0 || h.hyperadd[a][b] == 0) throw InvalidInput("hyperfield tables must be total");
    }
    return h;
}

SysPtr builtin_system(const std::string& name) {
    if (name == "boolean") return make_boolean();
    if (name == "chain3") return make_supertropical_chain();
    if (name == "supertropical") return make_supertropical();
    if (name == "maxplus") return make_maxplus();
    if (name == "minplus") return make_minplus();
    if (name == "nat") return make_nat();
    if (name == "S(krasner)") return build_S_of_H(make_krasner()).sys;
    if (name == "S(signs)") return build_S_of_H(make_signs()).sys;
    if (name == "S(tropical)") return make_S_of_tropical();
    if (name.rfind("sym(", 0) == 0 && name.back() == ')') return symmetrize(builtin_system(name.substr(4, name.size() - 5)));
    throw InvalidInput("unknown system \"" + name + "\"");
}

SysPtr system_of(const json& j) {
    if (j.is_string()) return builtin_system(j.get<std::string>());
    return std::make_shared<FinSys>(finspec_of(j), j.value("name", std::string("finite")));
}

FinPtr finite_of(const SysPtr& s) {
    if (auto f = std::dynamic_pointer_cast<const FinSys>(s)) return f;
    if (s->finite()) return materialize(*s);
    throw InvalidInput("a finite carrier is required, got " + s->name());
}

SysPtr ctx_system(const Ctx& c) {
    if (c.system.empty()) throw InvalidInput("--system is required");
    return system_of(load(c.system));
}

// ---------------------------------------------------------------------------
// Elements.

json elem_json(const System& sys, const Elem& e) {
    if (sys.finite()) return sys.show(e);
    switch (e.tag()) {
        case Tag::zero: return {{"kind", "zero"}};
        case Tag::tangible: return {{"kind", "tangible"}, {"value", e.value().str()}};
        case Tag::ghost: return {{"kind", "ghost"}, {"value", e.value().str()}};
        case Tag::interval: return {{"kind", "interval"}, {"value", e.value().str()}};
        case Tag::pair: {
            const auto* s = dynamic_cast<const Symmetrized*>(&sys);
            const System& base = s ? *s->base() : sys;
            return {{"kind", "pair"}, {"pos", elem_json(base, e.pos())}, {"neg", elem_json(base, e.neg())}};
        }
        case Tag::symbol: return sys.show(e);
    }
    return nullptr;
}

json elems_json(const System& sys, const std::vector<Elem>& es) {
    json out = json::array();
    for (const auto& e : es) out.push_back(elem_json(sys, e));
    return out;
}

Elem elem_of(const System& sys, const json& j) {
    Elem e;
    if (j.is_string() || j.is_number()) {
        const std::string s = j.is_string() ? j.get<std::string>() : j.dump();
        if (sys.finite()) {
            for (const auto& x : *sys.elements())
                if (sys.show(x) == s) return x;
            throw InvalidElement("unknown element \"" + s + "\" of " + sys.name());
        }
        e = s == "-inf" ? Elem::zero() : Elem::tangible(rational_of(json(s)));
    } else if (j.is_object()) {
        const std::string kind = str_of(field(j, "kind"), "kind");
        if (kind == "zero" || kind == "neginf") e = Elem::zero();
        else if (kind == "tangible" || kind == "val") e = Elem::tangible(rational_of(field(j, "value")));
        else if (kind == "ghost") e = Elem::ghost(rational_of(field(j, "value")));
        else if (kind == "interval") e = Elem::interval(rational_of(field(j, "value")));
        else if (kind == "symbol" || kind == "set") return elem_of(sys, field(j, "value"));
        else if (kind == "pair") {
            const auto* s = dynamic_cast<const Symmetrized*>(&sys);
            if (!s) throw InvalidElement("pair literal on a carrier without pairs");
            e = Elem::pair(elem_of(*s->base(), field(j, "pos")), elem_of(*s->base(), field(j, "neg")));
            if (sys.finite()) {
                for (const auto& x : *sys.elements())
                    if (x == e) return x;
            }
        } else {
            throw InvalidElement("unknown element kind \"" + kind + "\"");
        }
    } else {
        throw InvalidElement("element literal expected: " + j.dump());
    }
    if (!sys.contains(e)) throw InvalidElement(j.dump() + " is not an element of " + sys.name());
    return e;
}

std::vector<Elem> elem_list(const System& sys, const json& j) {
    if (!j.is_array()) throw InvalidInput("element list expected");
    std::vector<Elem> out;
    for (const auto& x : j) out.push_back(elem_of(sys, x));
    return out;
}

json witness_json(const System& sys, const std::vector<Elem>& w) { return elems_json(sys, w); }

json report_json(const System& sys, const Report& r) {
    json v = json::array();
    for (const auto& x : r.violations) v.push_back({{"axiom", x.axiom}, {"witness", witness_json(sys, x.witness)}});
    return {{"ok", r.ok()}, {"checked", r.checked}, {"violations", v}};
}

json verdict_json(const System& sys, const Verdict& v) {
    return {{"holds", v.holds}, {"witness", witness_json(sys, v.witness)}};
}

// ---------------------------------------------------------------------------
// Matrices and polynomials.

Matrix matrix_of(const System& sys, const json& j) {
    const auto n = field(j, "n").get<std::size_t>();
    std::vector<std::vector<Elem>> rows;
    for (const auto& r : field(j, "rows")) rows.push_back(elem_list(sys, r));
    if (rows.size() != n) throw InvalidInput("matrix must have n rows");
    for (const auto& r : rows)
        if (r.size() != n) throw InvalidInput("matrix must be square");
    return Matrix(rows);
}

json matrix_json(const System& sys, const Matrix& m) {
    json rows = json::array();
    for (const auto& r : m.rows) rows.push_back(elems_json(sys, r));
    return {{"n", m.n()}, {"rows", rows}};
}

Exponent exponent_of(const json& j) {
    if (!j.is_array()) throw InvalidInput("exponent must be an integer array");
    Exponent e;
    for (const auto& k : j) {
        if (!k.is_number_integer()) throw InvalidInput("exponent must be an integer array");
        e.push_back(k.get<int>());
    }
    return e;
}

Polynomial polynomial_of(const System& sys, const json& j) {
    const int nvars = field(j, "nvars").get<int>();
    const bool laurent = j.value("laurent", false);
    std::vector<std::pair<Exponent, Elem>> terms;
    for (const auto& t : field(j, "terms")) {
        Exponent e = exponent_of(field(t, "exp"));
        if (static_cast<int>(e.size()) != nvars) throw InvalidInput("exponent arity differs from nvars");
        terms.push_back({e, elem_of(sys, field(t, "coef"))});
    }
    return make_polynomial(sys, nvars, laurent, terms);
}

json polynomial_json(const System& sys, const Polynomial& f) {
    json terms = json::array();
    for (const auto& [e, c] : f.terms) terms.push_back({{"exp", e}, {"coef", elem_json(sys, c)}});
    return {{"nvars", f.nvars}, {"laurent", f.laurent}, {"terms", terms}};
}

PuiseuxSeries puiseux_of(const json& j) {
    std::vector<std::pair<Rational, Rational>> terms;
    for (const auto& t : field(j, "terms")) terms.push_back({rational_of(field(t, "exp")), rational_of(field(t, "coef"))});
    return PuiseuxSeries::from_terms(terms);
}

PuiseuxPolynomial puiseux_polynomial_of(const json& j) {
    const int nvars = field(j, "nvars").get<int>();
    std::vector<std::pair<Exponent, PuiseuxSeries>> terms;
    for (const auto& t : field(j, "terms")) terms.push_back({exponent_of(field(t, "exp")), puiseux_of(field(t, "coef"))});
    return make_puiseux_polynomial(nvars, j.value("laurent", false), terms);
}

json val_json(const std::optional<Rational>& v) { return v ? json(v->str()) : json(nullptr); }

// ---------------------------------------------------------------------------
// Congruences.

struct CongInput {
    FinPtr sys;
    Congruence cong;
};

CongInput congruence_of(const Ctx& c, const json& j) {
    FinPtr sys = j.contains("system") ? finite_of(system_of(j.at("system"))) : finite_of(ctx_system(c));
    std::vector<IndexPair> pairs;
    for (const auto& p : j.value("pairs", json::array())) {
        if (!p.is_array() || p.size() != 2) throw InvalidInput("congruence pairs are [a,b]");
        pairs.push_back({index_of(sys->spec().names, p[0]), index_of(sys->spec().names, p[1])});
    }
    return {sys, generate_congruence(sys, pairs)};
}

json classes_json(const std::vector<std::string>& names, const std::vector<int>& cls) {
    int k = 0;
    for (int v : cls) k = std::max(k, v + 1);
    std::vector<json> out(k, json::array());
    for (std::size_t i = 0; i < cls.size(); ++i) out[cls[i]].push_back(names[i]);
    return json(out);
}

json pairs_json(const std::vector<std::string>& names, const std::vector<int>& cls) {
    json out = json::array();
    for (std::size_t a = 0; a < cls.size(); ++a)
        for (std::size_t b = a + 1; b < cls.size(); ++b)
            if (cls[a] == cls[b]) out.push_back({names[a], names[b]});
    return out;
}

json cong_json(const Congruence& c) {
    const auto& names = c.sys->spec().names;
    return {{"system", c.sys->name()}, {"pairs", pairs_json(names, c.cls)}, {"classes", classes_json(names, c.cls)}};
}

std::vector<int> index_list(const FinSys& sys, const json& j) {
    if (!j.is_array()) throw InvalidInput("element list expected");
    std::vector<int> out;
    for (const auto& x : j) out.push_back(index_of(sys.spec().names, x));
    return out;
}

json names_json(const FinSys& sys, const std::vector<int>& idx) {
    json out = json::array();
    for (int i : idx) out.push_back(sys.name_of(i));
    return out;
}

// ---------------------------------------------------------------------------
// Modules.

std::vector<std::string> module_names(const ModSys& m) {
    std::vector<std::string> out;
    for (int i = 0; i < m.size(); ++i) out.push_back(m.name_of(i));
    return out;
}

ModPtr module_of(const FinPtr& ground, const json& j) {
    if (j.is_string()) {
        const std::string t = j.get<std::string>();
        if (t == "ground") return ground_module(ground);
        if (t.rfind("free:", 0) == 0) {
            int n = 0;
            try {
                n = std::stoi(t.substr(5));
            } catch (const std::exception&) {
                throw InvalidInput("free:N needs an integer N");
            }
            if (n < 1 || n > 8) throw InvalidInput("free:N needs 1 <= N <= 8");
            return free_module(ground, n);
        }
        throw InvalidInput("unknown module \"" + t + "\"");
    }
    FinSpec s = finspec_of(j);
    s.kind = Kind::module;
    std::vector<std::vector<int>> act;
    const json& rows = field(j, "action");
    if (!rows.is_array() || static_cast<int>(rows.size()) != ground->size())
        throw InvalidInput("action needs one row per ground element");
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() != s.names.size()) throw InvalidInput("action rows cover every module element");
        std::vector<int> r;
        for (const auto& v : row) r.push_back(index_of(s.names, v));
        act.push_back(r);
    }
    if (!s.zero) throw InvalidInput("a module needs a zero");
    return std::make_shared<ModSys>(ground, s, act, j.value("name", std::string("module")));
}

json modsys_json(const ModSys& m) {
    json j = finsys_json(m.additive());
    j.erase("kind");
    j.erase("mul");
    json act = json::array();
    for (const auto& row : m.action()) {
        json r = json::array();
        for (int v : row) r.push_back(m.name_of(v));
        act.push_back(r);
    }
    j["action"] = act;
    j["name"] = m.name();
    j["ground"] = m.ground()->name();
    return j;
}

MorphismTable morphism_of(const FinPtr& ground, const json& j) {
    MorphismTable f{module_of(ground, field(j, "source")), module_of(ground, field(j, "target")), {}};
    const auto src = module_names(*f.source), tgt = module_names(*f.target);
    const json& map = field(j, "map");
    f.map.assign(src.size(), -1);
    if (map.is_array() && map.size() == src.size()) {
        for (std::size_t i = 0; i < src.size(); ++i) f.map[i] = index_of(tgt, map[i]);
    } else if (map.is_object()) {
        for (auto it = map.begin(); it != map.end(); ++it) f.map[index_of(src, it.key())] = index_of(tgt, it.value());
    }
    for (int v : f.map)
        if (v < 0) throw InvalidInput("map must send every source element");
    return f;
}

json map_json(const MorphismTable& f) {
    json out = json::object();
    for (std::size_t i = 0; i < f.map.size(); ++i) out[f.source->name_of(static_cast<int>(i))] = f.target->name_of(f.map[i]);
    return out;
}

json modcong_json(const ModCongruence& c) {
    const auto names = module_names(*c.sys);
    return {{"pairs", pairs_json(names, c.cls)}, {"classes", classes_json(names, c.cls)}};
}

json module_names_json(const ModSys& m, const std::vector<int>& idx) {
    json out = json::array();
    for (int i : idx) out.push_back(m.name_of(i));
    return out;
}

FinPtr ctx_ground(const Ctx& c) { return finite_of(ctx_system(c)); }

std::size_t int_arg(const std::string& s, const char* what) {
    try {
        std::size_t pos = 0;
        long v = std::stol(s, &pos);
        if (pos != s.size() || v < 0) throw std::invalid_argument(s);
        return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
        throw InvalidInput(std::string(what) + " must be a nonnegative integer");
    }
}

// ---------------------------------------------------------------------------
// Commands.

json cmd_sys_check(const Ctx& c) {
    expect_args(c, 0, 0);
    SysPtr sys = ctx_system(c);
    Rng rng(c.seed);
    json j;
    j["system"] = sys->name();
    j["finite"] = sys->finite();
    j["triple"] = sys->is_triple();
    Report structure;
    std::vector<Elem> domain;
    if (sys->finite()) {
        auto fin = finite_of(sys);
        structure = check_structure(*fin);
        domain = *sys->elements();
    } else {
        structure = check_structure_sampled(*sys, rng, 10000);
        domain = sys->sample(rng, 24);
        domain.push_back(sys->zero());
        std::sort(domain.begin(), domain.end());
        domain.erase(std::unique(domain.begin(), domain.end()), domain.end());
    }
    Report surpass = check_surpassing_axioms(*sys, domain);
    // Surpassing axioms are reported; only structural failures reject the input.
    if (!structure.ok()) {
        json failing = json::array();
        for (const auto& v : structure.violations)
            if (std::find(failing.begin(), failing.end(), v.axiom) == failing.end()) failing.push_back(v.axiom);
        const auto& first = structure.violations.front();
        throw Rejected("AxiomViolation", "system violates " + first.axiom,
                       {{"axioms", failing}, {"witness", witness_json(*sys, first.witness)}});
    }
    j["structure"] = report_json(*sys, structure);
    j["surpassing"] = report_json(*sys, surpass);
    j["unique_negation"] = verdict_json(*sys, check_unique_negation(*sys, domain));
    j["meta_tangible"] = verdict_json(*sys, check_meta_tangible(*sys, domain));
    j["bipotent"] = verdict_json(*sys, check_bipotent(*sys, domain));
    if (sys->finite()) {
        auto null = compute_null_set(*sys);
        j["null_set"] = elems_json(*sys, null.members);
        j["null_cross_check"] = null.cross_check;
        json heights = json::object(), qz = json::array();
        for (const auto& e : domain) {
            auto h = height(*sys, e, static_cast<int>(c.bound));
            heights[sys->show(e)] = h ? json(*h) : json(nullptr);
            if (sys->is_quasi_zero(e)) qz.push_back(elem_json(*sys, e));
        }
        j["heights"] = heights;
        j["quasi_zeros"] = qz;
    } else {
        j["sampled"] = domain.size();
    }
    return j;
}

json cmd_classify_char(const Ctx& c) {
    expect_args(c, 0, 0);
    SysPtr sys = ctx_system(c);
    auto r = characteristic_subtriple(*sys, c.bound);
    return {{"tag", r.tag}, {"members", elems_json(*sys, r.members)}, {"system", finsys_json(*r.sub)}};
}

json cmd_epsilon(const Ctx& c) {
    expect_args(c, 1, 1);
    SysPtr sys = ctx_system(c);
    SysPtr out = negation_from_epsilon(sys, elem_of(*sys, load(c.args[0])));
    json j{{"system", out->name()}};
    if (out->finite()) {
        json neg = json::object();
        for (const auto& e : *out->elements()) neg[out->show(e)] = elem_json(*out, out->negate(e));
        j["neg"] = neg;
    }
    return j;
}

json cmd_det(const Ctx& c) {
    expect_args(c, 1, 1);
    SysPtr sys = ctx_system(c);
    return elem_json(*sys, neg_det(*sys, matrix_of(*sys, load(c.args[0]))));
}

json cmd_adj(const Ctx& c) {
    expect_args(c, 1, 1);
    SysPtr sys = ctx_system(c);
    Matrix a = matrix_of(*sys, load(c.args[0]));
    json laplace = json::array();
    for (std::size_t i = 0; i < a.n(); ++i) laplace.push_back(laplace_expansion_check(*sys, a, i));
    return {{"adjoint", matrix_json(*sys, neg_adjoint(*sys, a))},
            {"minors", matrix_json(*sys, raw_minors(*sys, a))},
            {"laplace", laplace}};
}

json cmd_vandermonde(const Ctx& c) {
    expect_args(c, 1, 1);
    SysPtr sys = ctx_system(c);
    auto a = elem_list(*sys, load(c.args[0]));
    Matrix v = vandermonde(*sys, a);
    return {{"matrix", matrix_json(*sys, v)},
            {"determinant", elem_json(*sys, neg_det(*sys, v))},
            {"product", elem_json(*sys, vandermonde_product(*sys, a))},
            {"identity", vandermonde_identity_check(*sys, a)}};
}

json cmd_eval(const Ctx& c) {
    expect_args(c, 2, 2);
    SysPtr sys = ctx_system(c);
    return elem_json(*sys, eval(*sys, polynomial_of(*sys, load(c.args[0])), elem_list(*sys, load(c.args[1]))));
}

json cmd_roots(const Ctx& c) {
    expect_args(c, 2, 2);
    SysPtr sys = ctx_system(c);
    auto f = polynomial_of(*sys, load(c.args[0]));
    return elems_json(*sys, circ_roots(*sys, f, elem_list(*sys, load(c.args[1]))));
}

json cmd_root_bound(const Ctx& c) {
    expect_args(c, 3, 3);
    SysPtr sys = ctx_system(c);
    const int degree = static_cast<int>(int_arg(c.args[0], "degree"));
    auto r = check_root_bound(*sys, degree, elem_list(*sys, load(c.args[1])), elem_list(*sys, load(c.args[2])));
    json j{{"holds", r.holds}, {"polynomials", r.polynomials}};
    j["counterexample"] = r.counterexample ? polynomial_json(*sys, *r.counterexample) : json(nullptr);
    j["roots"] = elems_json(*sys, r.roots);
    return j;
}

std::vector<std::vector<Elem>> points_of(const System& sys, const json& j) {
    if (!j.is_array()) throw InvalidInput("point list expected");
    std::vector<std::vector<Elem>> out;
    for (const auto& p : j) out.push_back(elem_list(sys, p));
    return out;
}

json cmd_tangibility(const Ctx& c) {
    expect_args(c, 2, 2);
    SysPtr sys = ctx_system(c);
    auto r = is_functionally_tangible(*sys, polynomial_of(*sys, load(c.args[0])), points_of(*sys, load(c.args[1])));
    json ex = json::array();
    for (const auto& p : r.exceptions) ex.push_back(elems_json(*sys, p));
    return {{"holds", r.holds}, {"exceptions", ex}};
}

json cmd_bend_equiv(const Ctx& c) {
    expect_args(c, 2, 2);
    SysPtr sys = ctx_system(c);
    auto r = bend_equiv(*sys, polynomial_of(*sys, load(c.args[0])), polynomial_of(*sys, load(c.args[1])), c.bound);
    return {{"equiv", r.equivalent}, {"steps", r.steps}};
}

json cmd_circ_equiv(const Ctx& c) {
    expect_args(c, 3, 3);
    SysPtr sys = ctx_system(c);
    auto f = polynomial_of(*sys, load(c.args[0])), g = polynomial_of(*sys, load(c.args[1]));
    return {{"equiv", circ_equiv(*sys, f, g, points_of(*sys, load(c.args[2])))}};
}

json cmd_sym_root(const Ctx& c) {
    expect_args(c, 3, 3);
    SysPtr base = ctx_system(c);
    auto sym = symmetrize(base);
    auto f = polynomial_of(*base, load(c.args[0])), g = polynomial_of(*base, load(c.args[1]));
    Elem b = elem_of(*sym, load(c.args[2]));
    return {{"value", elem_json(*sym, sym_eval(*base, f, g, b))},
            {"twist_value", elem_json(*sym, sym_eval_twist(*sym, f, g, b))},
            {"root", is_symmetrized_root(*base, f, g, b)}};
}

json cmd_cong_closure(const Ctx& c) {
    expect_args(c, 1, 1);
    auto in = congruence_of(c, load(c.args[0]));
    json j = cong_json(in.cong);
    j["t_congruence"] = is_T_congruence(in.cong);
    j["invariants"] = check_congruence_invariants(in.cong).ok();
    return j;
}

json cmd_cong_quotient(const Ctx& c) {
    expect_args(c, 1, 1);
    auto in = congruence_of(c, load(c.args[0]));
    auto q = quotient(in.cong);
    json proj = json::object();
    for (int i = 0; i < in.sys->size(); ++i) proj[in.sys->name_of(i)] = q.sys->name_of(q.proj[i]);
    return {{"system", finsys_json(*q.sys)}, {"projection", proj}};
}

json cmd_cong_prime(const Ctx& c) {
    expect_args(c, 1, 1);
    auto in = congruence_of(c, load(c.args[0]));
    auto lat = enumerate_lattice(in.sys);
    return {{"prime", is_prime(lat, in.cong)},
            {"t_prime", is_T_prime(lat, in.cong)},
            {"semiprime", is_semiprime(lat, in.cong)},
            {"maximal", is_maximal(lat, in.cong)},
            {"t_irreducible", is_T_irreducible(lat, in.cong)},
            {"prime_by_tangible_pairs", prime_by_tangible_pairs(in.cong)},
            {"radical_by_tangible_pairs", radical_by_tangible_pairs(in.cong)}};
}

json cmd_cong_radical(const Ctx& c) {
    expect_args(c, 1, 1);
    auto in = congruence_of(c, load(c.args[0]));
    auto lat = enumerate_lattice(in.sys);
    return {{"radical", cong_json(radical(in.cong))},
            {"prime_intersection", cong_json(prime_intersection_above(lat, in.cong))},
            {"decomposition", check_radical_decomposition(lat, in.cong)}};
}

json cmd_cong_spectrum(const Ctx& c) {
    expect_args(c, 0, 1);
    FinPtr sys = c.args.empty() ? finite_of(ctx_system(c)) : congruence_of(c, load(c.args[0])).sys;
    auto lat = enumerate_lattice(sys);
    json primes = json::array(), maximal = json::array();
    const auto& flags = lat.t_prime_flags();
    for (std::size_t i = 0; i < lat.all.size(); ++i) {
        if (flags[i]) primes.push_back(cong_json(lat.all[i])["classes"]);
        if (is_maximal(lat, lat.all[i])) maximal.push_back(cong_json(lat.all[i])["classes"]);
    }
    return {{"system", sys->name()},
            {"congruences", lat.all.size()},
            {"t_congruences", lat.t_index.size()},
            {"t_primes", primes},
            {"maximal", maximal}};
}

json cmd_cong_height(const Ctx& c) {
    expect_args(c, 0, 1);
    FinPtr sys = c.args.empty() ? finite_of(ctx_system(c)) : congruence_of(c, load(c.args[0])).sys;
    return {{"system", sys->name()}, {"height", chain_height(enumerate_lattice(sys))}};
}

json cmd_cong_localize(const Ctx& c) {
    expect_args(c, 2, 2);
    auto in = congruence_of(c, load(c.args[0]));
    auto s = index_list(*in.sys, load(c.args[1]));
    auto loc = localize(in.sys, s);
    return {{"localized", cong_json(localize_congruence(in.cong, loc))}, {"c_regular", is_C_regular(in.cong, s)}};
}

json cmd_cong_twist(const Ctx& c) {
    expect_args(c, 2, 2);
    auto a = congruence_of(c, load(c.args[0]));
    auto b = congruence_of(c, load(c.args[1]));
    if (a.sys->spec().names != b.sys->spec().names) throw InvalidInput("congruences live on different systems");
    b.cong.sys = a.sys;
    auto members = twist_product(a.cong, b.cong), gens = twist_product_of_generators(a.cong, b.cong);
    return {{"product", cong_json(members)}, {"generator_product", cong_json(gens)}, {"agree", members == gens}};
}

json cmd_cong_submodule(const Ctx& c) {
    expect_args(c, 1, 1);
    FinPtr sys = finite_of(ctx_system(c));
    auto members = index_list(*sys, load(c.args[0]));
    auto rel = cong_of_submodule(*sys, members);
    json pairs = json::array();
    for (auto [a, b] : rel)
        if (a < b) pairs.push_back({sys->name_of(a), sys->name_of(b)});
    return {{"reversible", is_T_reversible(*sys)},
            {"t_submodule", is_T_submodule(*sys, members)},
            {"congruence", pairs},
            {"back", names_json(*sys, submodule_of_cong(*sys, rel))}};
}

json cmd_localize(const Ctx& c) {
    expect_args(c, 1, 1);
    FinPtr sys = finite_of(ctx_system(c));
    auto s = index_list(*sys, load(c.args[0]));
    auto loc = localize(sys, s);
    json canon = json::object();
    for (int i = 0; i < sys->size(); ++i) canon[sys->name_of(i)] = loc.sys->name_of(loc.canonical[i]);
    auto kernel = localization_kernel(sys, s);
    return {{"system", finsys_json(*loc.sys)},
            {"canonical", canon},
            {"kernel", cong_json(kernel)},
            {"kernel_matches", canonical_kernel(loc, sys) == kernel},
            {"regular", is_regular(*sys, s)}};
}

json cmd_mod_check(const Ctx& c) {
    expect_args(c, 1, 1);
    auto m = module_of(ctx_ground(c), load(c.args[0]));
    json axioms = report_json(m->additive(), check_module_axioms(*m));
    return {{"module", modsys_json(*m)},
            {"axioms", axioms},
            {"null_set", module_names_json(*m, null_set(*m))},
            {"simple", is_simple(*m)},
            {"twisted_action", check_twisted_action(*m).ok()}};
}

json cmd_mod_sum(const Ctx& c) {
    if (c.args.empty()) throw InvalidInput("mod sum needs at least one module");
    FinPtr g = ctx_ground(c);
    std::vector<ModPtr> mods;
    for (const auto& a : c.args) mods.push_back(module_of(g, load(a)));
    return modsys_json(*direct_sum(mods));
}

json cmd_mod_morphism(const Ctx& c) {
    expect_args(c, 1, 1);
    auto f = morphism_of(ctx_ground(c), load(c.args[0]));
    auto k = classify_morphism(f, static_cast<int>(std::min<std::size_t>(c.bound, 4)));
    json j{{"kind", kind_name(k.kind)}, {"admissible", k.admissible}, {"violations", k.violations}, {"strict", k.strict}};
    j["derived_laws"] = k.kind == MorphismKind::none ? json(nullptr) : json(derived_morphism_laws(f).ok());
    return j;
}

json cmd_mod_semiring_morphism(const Ctx& c) {
    expect_args(c, 2, 2);
    FinPtr src = finite_of(ctx_system(c));
    json spec = load(c.args[0]);
    FinPtr tgt = finite_of(system_of(spec));
    json map = load(c.args[1]);
    std::vector<int> f;
    for (int i = 0; i < src->size(); ++i) f.push_back(index_of(tgt->spec().names, field(map, src->name_of(i).c_str())));
    auto k = classify_semiring_morphism(*src, *tgt, f);
    return {{"kind", kind_name(k.kind)}, {"admissible", k.admissible}, {"violations", k.violations}, {"strict", k.strict}};
}

json cmd_mod_hom(const Ctx& c) {
    expect_args(c, 2, 2);
    FinPtr g = ctx_ground(c);
    auto h = hom_triple(module_of(g, load(c.args[0])), module_of(g, load(c.args[1])));
    json maps = json::array();
    for (const auto& t : h.maps) maps.push_back(map_json(MorphismTable{h.source, h.target, t}));
    return {{"system", modsys_json(*h.sys)}, {"maps", maps}};
}

json cmd_mod_dual(const Ctx& c) {
    expect_args(c, 1, 1);
    auto d = dual_system(ctx_ground(c), static_cast<int>(int_arg(c.args[0], "n")));
    json star = json::object();
    for (int i = 0; i < d.space->size(); ++i)
        star[d.space->name_of(i)] = d.star[i] < 0 ? json(nullptr) : json(d.dual.sys->name_of(d.star[i]));
    return {{"dual", modsys_json(*d.dual.sys)}, {"star", star}, {"injective", d.injective}, {"onto", d.onto}};
}

json cmd_mod_span(const Ctx& c) {
    expect_args(c, 2, 2);
    auto m = module_of(ctx_ground(c), load(c.args[0]));
    const json vs_json = load(c.args[1]);
    if (!vs_json.is_array()) throw InvalidInput("vector list expected");
    std::vector<int> vs;
    const auto names = module_names(*m);
    for (const auto& v : vs_json) vs.push_back(index_of(names, v));
    return {{"spans", span_check(*m, vs)},
            {"independent", independence_check(*m, vs)},
            {"base", is_base(*m, vs)},
            {"symmetric_base", is_symmetric_base(*m, vs)}};
}

json tensor_json(const Tensor& t) {
    json simple = json::array();
    for (const auto& row : t.simple) {
        json r = json::array();
        for (int v : row) r.push_back(t.sys->name_of(v));
        simple.push_back(r);
    }
    return {{"system", modsys_json(*t.sys)}, {"simple", simple}, {"negated", t.negated}, {"size", t.sys->size()}};
}

json cmd_mod_tensor(const Ctx& c) {
    expect_args(c, 2, 3);
    bool negated = true;
    if (c.args.size() == 3) {
        if (c.args[2] != "plain" && c.args[2] != "negated") throw InvalidInput("third argument is plain or negated");
        negated = c.args[2] == "negated";
    }
    FinPtr g = ctx_ground(c);
    return tensor_json(tensor(module_of(g, load(c.args[0])), module_of(g, load(c.args[1])), negated));
}

json cmd_mod_bilinear(const Ctx& c) {
    expect_args(c, 4, 4);
    FinPtr g = ctx_ground(c);
    auto m1 = module_of(g, load(c.args[0])), m2 = module_of(g, load(c.args[1])), n = module_of(g, load(c.args[2]));
    const json table = load(c.args[3]);
    const auto nn = module_names(*n);
    std::vector<std::vector<int>> psi;
    if (!table.is_array() || static_cast<int>(table.size()) != m1->size()) throw InvalidInput("psi needs a row per left element");
    for (const auto& row : table) {
        if (!row.is_array() || static_cast<int>(row.size()) != m2->size()) throw InvalidInput("psi rows cover the right module");
        std::vector<int> r;
        for (const auto& v : row) r.push_back(index_of(nn, v));
        psi.push_back(r);
    }
    auto t = tensor(m1, m2);
    auto induced = induced_map(t, *n, psi);
    json j{{"bilinear", is_bilinear(t, *n, psi)}};
    j["induced"] = induced ? map_json(MorphismTable{t.sys, n, *induced}) : json(nullptr);
    return j;
}

json cmd_mod_tensor_map(const Ctx& c) {
    expect_args(c, 2, 2);
    FinPtr g = ctx_ground(c);
    auto f1 = morphism_of(g, load(c.args[0])), f2 = morphism_of(g, load(c.args[1]));
    auto src = tensor(f1.source, f2.source), tgt = tensor(f1.target, f2.target);
    return {{"map", map_json(tensor_of_homomorphisms(src, tgt, f1, f2))}};
}

json cmd_mod_witness(const Ctx& c) {
    expect_args(c, 0, 0);
    auto w = nonfunctoriality_witness(ctx_ground(c));
    auto terms = [&](const std::vector<IndexPair>& ts) {
        json out = json::array();
        for (auto [x, y] : ts) out.push_back({w.tensor.left->name_of(x), w.tensor.right->name_of(y)});
        return out;
    };
    return {{"element", w.tensor.sys->name_of(w.element)},
            {"first", terms(w.first)},
            {"second", terms(w.second)},
            {"value_first", w.tensor.sys->name_of(w.value_first)},
            {"value_second", w.tensor.sys->name_of(w.value_second)},
            {"f", map_json(w.f)}};
}

json cmd_mod_power(const Ctx& c) {
    expect_args(c, 2, 2);
    auto p = tensor_power(module_of(ctx_ground(c), load(c.args[0])), static_cast<int>(int_arg(c.args[1], "k")));
    json sizes = json::array();
    for (const auto& m : p.powers) sizes.push_back(m->size());
    return {{"sizes", sizes}, {"truncated", p.truncated->size()}};
}

json cmd_mod_adjoint(const Ctx& c) {
    expect_args(c, 3, 3);
    FinPtr g = ctx_ground(c);
    auto r = adjoint_check(module_of(g, load(c.args[0])), module_of(g, load(c.args[1])), module_of(g, load(c.args[2])));
    return {{"lhs", r.lhs}, {"rhs", r.rhs}, {"bijection", r.bijection}};
}

json cmd_mod_exact(const Ctx& c) {
    expect_args(c, 2, 2);
    FinPtr g = ctx_ground(c);
    auto gm = morphism_of(g, load(c.args[0])), f = morphism_of(g, load(c.args[1]));
    auto e = exactness(gm, f);
    return {{"chain", e.chain},
            {"exact", e.exact},
            {"image", module_names_json(*gm.target, e.image)},
            {"preimage", module_names_json(*f.source, e.preimage)}};
}

json cmd_mod_kernel(const Ctx& c) {
    expect_args(c, 1, 1);
    auto f = morphism_of(ctx_ground(c), load(c.args[0]));
    auto nm = null_monic(f);
    json j{{"t_kernel", module_names_json(*f.source, t_kernel(f))},
           {"null", is_null_morphism(f)},
           {"t_image", module_names_json(*f.target, t_image(f))},
           {"null_monic", {{"holds", nm.holds}, {"witness", module_names_json(*f.source, nm.witness)}}},
           {"null_onto", null_onto(f)},
           {"kernel", modcong_json(congruence_kernel(f))},
           {"tangible_kernel", modcong_json(tangible_kernel(f))},
           {"cokernel_null", cokernel_is_null(f)}};
    try {
        auto fac = factor_through(f);
        j["factorization"] = {{"recomposes", fac.recomposes}, {"monic", map_json(fac.monic)}};
    } catch (const IllDefined&) {
        j["factorization"] = nullptr;
    }
    return j;
}

json cmd_mod_quotient(const Ctx& c) {
    expect_args(c, 2, 2);
    auto m = module_of(ctx_ground(c), load(c.args[0]));
    const auto names = module_names(*m);
    std::vector<IndexPair> gens;
    for (const auto& p : load(c.args[1])) {
        if (!p.is_array() || p.size() != 2) throw InvalidInput("pairs are [a,b]");
        gens.push_back({index_of(names, p[0]), index_of(names, p[1])});
    }
    auto cong = generate_module_congruence(m, gens);
    return {{"congruence", modcong_json(cong)}, {"quotient", modsys_json(*module_quotient(cong))}};
}

json cmd_mod_image(const Ctx& c) {
    expect_args(c, 2, 2);
    auto f = morphism_of(ctx_ground(c), load(c.args[0]));
    const auto names = module_names(*f.source);
    std::vector<IndexPair> gens;
    for (const auto& p : load(c.args[1])) {
        if (!p.is_array() || p.size() != 2) throw InvalidInput("pairs are [a,b]");
        gens.push_back({index_of(names, p[0]), index_of(names, p[1])});
    }
    return {{"image", modcong_json(congruence_image(f, generate_module_congruence(f.source, gens)))}};
}

json cmd_mod_annihilator(const Ctx& c) {
    expect_args(c, 2, 2);
    FinPtr g = ctx_ground(c);
    auto m = module_of(g, load(c.args[0]));
    const auto names = module_names(*m);
    std::vector<int> subset;
    for (const auto& v : load(c.args[1])) subset.push_back(index_of(names, v));
    auto ann = annihilator(g, ActionTable{m->size(), m->action()}, subset);
    return {{"annihilator", cong_json(ann)}, {"maximal", is_maximal(enumerate_lattice(g), ann)}, {"simple", is_simple(*m)}};
}

json cmd_hyper_check(const Ctx& c) {
    expect_args(c, 1, 1);
    Hyperfield h = hyperfield_of(load(c.args[0]));
    auto r = check_hyperfield(h);
    json v = json::array();
    for (const auto& x : r.violations) {
        json w = json::array();
        for (const auto& e : x.witness) w.push_back(h.names[e.index()]);
        v.push_back({{"axiom", x.axiom}, {"witness", w}});
    }
    return {{"ok", r.ok()}, {"violations", v}};
}

json sofh_json(const Hyperfield& h, const SofH& s) {
    json sets = json::object();
    for (std::size_t i = 0; i < s.sets.size(); ++i) {
        json members = json::array();
        for (int a = 0; a < h.size(); ++a)
            if (s.sets[i] >> a & 1) members.push_back(h.names[a]);
        sets[s.sys->name_of(static_cast<int>(i))] = members;
    }
    return {{"system", finsys_json(*s.sys)}, {"sets", sets}};
}

json cmd_hyper_sofh(const Ctx& c) {
    expect_args(c, 1, 1);
    Hyperfield h = hyperfield_of(load(c.args[0]));
    return sofh_json(h, build_S_of_H(h, c.bound));
}

json cmd_hyper_functor(const Ctx& c) {
    expect_args(c, 1, 2);
    const std::string which = c.args[0];
    if (which == "a" || which == "c") {
        Hyperfield h = hyperfield_of(load(arg(c, 1, "hyperfield")));
        return sofh_json(h, which == "a" ? functor_a(h) : functor_c(h));
    }
    if (which == "e" || which == "t") {
        expect_args(c, 1, 1);
        auto p = functor_t(*finite_of(ctx_system(c)));
        json monoid = json::array();
        for (int i : p.monoid) monoid.push_back(p.semiring->name_of(i));
        if (which == "t") return {{"semiring", finsys_json(*p.semiring)}, {"monoid", monoid}};
        return {{"system", finsys_json(*functor_e(p))}};
    }
    throw InvalidInput("functor must be a, c, e or t");
}

json cmd_hyper_morphism(const Ctx& c) {
    expect_args(c, 3, 3);
    Hyperfield h1 = hyperfield_of(load(c.args[0])), h2 = hyperfield_of(load(c.args[1]));
    const json map = load(c.args[2]);
    std::vector<int> f;
    for (const auto& n : h1.names) f.push_back(index_of(h2.names, field(map, n.c_str())));
    auto s1 = functor_a(h1), s2 = functor_a(h2);
    json j{{"homomorphism", is_hyperfield_homomorphism(h1, h2, f)}};
    auto to_names = [&](const std::vector<int>& m) {
        json out = json::object();
        for (std::size_t i = 0; i < m.size(); ++i) out[s1.sys->name_of(static_cast<int>(i))] = s2.sys->name_of(m[i]);
        return out;
    };
    try {
        j["a_map"] = to_names(functor_a_map(h1, s1, h2, s2, f));
    } catch (const IllDefined& e) {
        j["a_map"] = {{"error", e.what()}};
    }
    auto img = image_set_map(h1, s1, s2, f);
    j["image_map"] = img ? to_names(*img) : json(nullptr);
    return j;
}

json trop_val_json(const Elem& e) {
    switch (e.tag()) {
        case Tag::zero: return {{"kind", "neginf"}};
        case Tag::interval: return {{"kind", "interval"}, {"value", e.value().str()}};
        default: return {{"kind", "val"}, {"value", e.value().str()}};
    }
}

TropVal trop_val_of(const json& j) {
    const std::string kind = str_of(field(j, "kind"), "kind");
    if (kind == "neginf") return std::nullopt;
    if (kind == "val") return rational_of(field(j, "value"));
    throw InvalidElement("tropical hyperfield elements are val or neginf");
}

json cmd_hyper_tropical(const Ctx& c) {
    expect_args(c, 2, 2);
    TropVal a = trop_val_of(load(c.args[0])), b = trop_val_of(load(c.args[1]));
    TropicalHyperfield th;
    TropVal prod = th.mul(a, b);
    Elem sum = th.hyperadd(a, b);
    return {{"sum", trop_val_json(sum)},
            {"product", prod ? json{{"kind", "val"}, {"value", prod->str()}} : json{{"kind", "neginf"}}},
            {"supertropical", elem_json(*make_supertropical(), S_to_supertropical(sum))}};
}

json cmd_trop(const Ctx& c) {
    expect_args(c, 1, 1);
    json in = load(c.args[0]);
    if (!in.is_array()) in = json::array({in});
    auto mp = make_minplus();
    std::vector<Polynomial> gens;
    json tropical = json::array();
    for (const auto& p : in) {
        gens.push_back(trop(puiseux_polynomial_of(p)));
        tropical.push_back(polynomial_json(*mp, gens.back()));
    }
    json bend = json::array();
    for (const auto& [f, g] : trop_ideal_to_bend(gens)) bend.push_back({polynomial_json(*mp, f), polynomial_json(*mp, g)});
    return {{"tropical", tropical}, {"bend", bend}};
}

json cmd_matroid_check(const Ctx& c) {
    expect_args(c, 1, 1);
    const json j = load(c.args[0]);
    const int n = field(j, "n").get<int>(), m = field(j, "rank").get<int>();
    auto cand = j.value("uniform", false) ? uniform_matroid(n, m)
                                          : make_matroid_candidate(n, m, [](const std::vector<int>&) { return TropVal{}; });
    const bool symmetric = j.value("symmetric", true);
    for (const auto& entry : j.value("values", json::array())) {
        std::vector<int> t;
        for (const auto& e : field(entry, "tuple")) t.push_back(e.get<int>());
        const json& v = field(entry, "value");
        TropVal val = v.is_null() || v == json("-inf") ? TropVal{} : TropVal{rational_of(v)};
        if (!symmetric) {
            cand.at(t) = val;
            continue;
        }
        std::sort(t.begin(), t.end());
        do cand.at(t) = val;
        while (std::next_permutation(t.begin(), t.end()));
    }
    auto r = valuated_matroid_check(cand);
    return {{"valid", r.valid}, {"axiom", r.valid ? json(nullptr) : json(r.axiom)}, {"witness", r.witness}};
}

json cmd_ideal_pair_check(const Ctx& c) {
    expect_args(c, 2, 3);
    auto mp = make_minplus();
    auto f = polynomial_of(*mp, load(c.args[0])), g = polynomial_of(*mp, load(c.args[1]));
    std::vector<Polynomial> cands;
    if (c.args.size() == 3)
        for (const auto& h : load(c.args[2])) cands.push_back(polynomial_of(*mp, h));
    auto r = tropical_ideal_pair_check(f, g, cands);
    json entries = json::array();
    for (const auto& e : r.entries)
        entries.push_back({{"monomial", e.monomial},
                           {"shift_f", e.shift_f.str()},
                           {"shift_g", e.shift_g.str()},
                           {"h", e.h ? polynomial_json(*mp, *e.h) : json(nullptr)},
                           {"from_candidates", e.from_candidates}});
    return {{"holds", r.holds}, {"entries", entries}};
}

json cmd_valuation_check(const Ctx& c) {
    expect_args(c, 1, 1);
    const json in = load(c.args[0]);
    if (!in.is_array()) throw InvalidInput("a list of Puiseux series is expected");
    std::vector<PuiseuxSeries> dom;
    for (const auto& p : in) dom.push_back(puiseux_of(p));
    auto rep = check_puiseux_valuation(dom);
    json values = json::array();
    for (const auto& p : dom) values.push_back(val_json(val(p)));
    std::size_t arith_fail = 0;
    for (const auto& p : dom)
        for (const auto& q : dom) arith_fail += !val_arith_check(p, q).ok();
    return {{"ok", rep.ok && arith_fail == 0},
            {"violations", rep.violations},
            {"values", values},
            {"pairs", dom.size() * dom.size()},
            {"arith_failures", arith_fail}};
}

// ---------------------------------------------------------------------------
// Registry.

struct Command {
    std::string name;
    std::function<json(const Ctx&)> fn;
    std::vector<std::string> ops;
    std::string help;
};

const std::vector<Command>& registry() {
    static const std::vector<Command> cmds = {
        {"sys-check", cmd_sys_check,
         {"check_structure", "check_structure_sampled", "check_surpassing_axioms", "check_unique_negation",
          "check_meta_tangible", "check_bipotent", "compute_null_set", "height", "quasi_zero"},
         "axioms and structural predicates of --system"},
        {"classify-char", cmd_classify_char, {"characteristic_subtriple"}, "characteristic sub-triple of --system"},
        {"epsilon", cmd_epsilon, {"negation_from_epsilon"}, "install (-)a = eps a: EPS"},
        {"det", cmd_det, {"neg_det"}, "(-)-determinant: MATRIX"},
        {"adj", cmd_adj, {"neg_adjoint", "raw_minors", "laplace_expansion_check"}, "(-)-adjoint: MATRIX"},
        {"vandermonde", cmd_vandermonde, {"vandermonde", "vandermonde_product", "vandermonde_identity_check"},
         "Vandermonde identity: ELEMS"},
        {"eval", cmd_eval, {"eval"}, "evaluate: POLY POINT"},
        {"roots", cmd_roots, {"circ_roots"}, "circ-roots: POLY DOMAIN"},
        {"root-bound", cmd_root_bound, {"check_root_bound"}, "root bound: DEGREE POOL DOMAIN"},
        {"tangibility", cmd_tangibility, {"is_functionally_tangible"}, "functional tangibility: POLY POINTS"},
        {"bend-equiv", cmd_bend_equiv, {"bend_equiv"}, "bend equivalence: POLY POLY"},
        {"circ-equiv", cmd_circ_equiv, {"circ_equiv"}, "circ-equivalence: POLY POLY POINTS"},
        {"sym-root", cmd_sym_root, {"sym_eval", "sym_eval_twist", "is_symmetrized_root"},
         "symmetrized root: POLY POLY PAIR"},
        {"cong closure", cmd_cong_closure, {"generate_congruence", "is_T_congruence", "check_congruence_invariants"},
         "least congruence: CONG"},
        {"cong quotient", cmd_cong_quotient, {"quotient"}, "quotient system: CONG"},
        {"cong prime", cmd_cong_prime,
         {"is_prime", "is_T_prime", "is_semiprime", "is_maximal", "is_T_irreducible", "prime_by_tangible_pairs",
          "radical_by_tangible_pairs"},
         "primality predicates: CONG"},
        {"cong radical", cmd_cong_radical, {"radical", "prime_intersection_above", "check_radical_decomposition"},
         "radical: CONG"},
        {"cong spectrum", cmd_cong_spectrum, {"enumerate_lattice"}, "T-prime and maximal congruences: [CONG]"},
        {"cong height", cmd_cong_height, {"chain_height"}, "prime chain height: [CONG]"},
        {"cong localize", cmd_cong_localize, {"localize_congruence", "is_C_regular"}, "localized congruence: CONG S"},
        {"cong twist", cmd_cong_twist, {"twist_product", "twist_product_of_generators"}, "twist product: CONG CONG"},
        {"cong submodule", cmd_cong_submodule,
         {"is_T_reversible", "is_T_submodule", "cong_of_submodule", "submodule_of_cong"},
         "submodule to congruence and back: MEMBERS"},
        {"localize", cmd_localize, {"localize", "localization_kernel", "canonical_kernel", "is_regular"},
         "localization of --system: S"},
        {"mod check", cmd_mod_check, {"check_module_axioms", "null_set", "is_simple", "check_twisted_action"},
         "module axioms: MOD"},
        {"mod sum", cmd_mod_sum, {"direct_sum", "free_module", "ground_module"}, "direct sum: MOD..."},
        {"mod morphism", cmd_mod_morphism, {"classify_morphism", "derived_morphism_laws"}, "classify: MORPHISM"},
        {"mod semiring-morphism", cmd_mod_semiring_morphism, {"classify_semiring_morphism"},
         "classify a map --system -> SYSTEM: SYSTEM MAP"},
        {"mod hom", cmd_mod_hom, {"hom_triple"}, "Hom triple: MOD MOD"},
        {"mod dual", cmd_mod_dual, {"dual_system"}, "dual of the free module: N"},
        {"mod span", cmd_mod_span, {"span_check", "independence_check", "is_base", "is_symmetric_base"},
         "span, independence, base: MOD VECTORS"},
        {"mod tensor", cmd_mod_tensor, {"tensor"}, "tensor product: MOD MOD [plain|negated]"},
        {"mod bilinear", cmd_mod_bilinear, {"is_bilinear", "induced_map"}, "bilinear map: MOD MOD MOD PSI"},
        {"mod tensor-map", cmd_mod_tensor_map, {"tensor_of_homomorphisms"}, "f1 (x) f2: MORPHISM MORPHISM"},
        {"mod witness", cmd_mod_witness, {"nonfunctoriality_witness"}, "regrouping witness over --system"},
        {"mod power", cmd_mod_power, {"tensor_power"}, "tensor powers: MOD K"},
        {"mod adjoint", cmd_mod_adjoint, {"adjoint_check"}, "Hom-tensor cardinalities: MOD MOD MOD"},
        {"mod exact", cmd_mod_exact, {"exactness"}, "exactness at the middle: MORPHISM MORPHISM"},
        {"mod kernel", cmd_mod_kernel,
         {"t_kernel", "is_null_morphism", "t_image", "null_monic", "null_onto", "congruence_kernel", "tangible_kernel",
          "factor_through", "cokernel_is_null"},
         "kernels and images: MORPHISM"},
        {"mod quotient", cmd_mod_quotient, {"generate_module_congruence", "module_quotient"},
         "module quotient: MOD PAIRS"},
        {"mod image", cmd_mod_image, {"congruence_image"}, "image congruence: MORPHISM PAIRS"},
        {"mod annihilator", cmd_mod_annihilator, {"annihilator"}, "annihilator in --system: MOD SUBSET"},
        {"hyper check", cmd_hyper_check, {"check_hyperfield"}, "hyperfield axioms: HYPERFIELD"},
        {"hyper sofh", cmd_hyper_sofh, {"build_S_of_H"}, "S(H): HYPERFIELD"},
        {"hyper functor", cmd_hyper_functor, {"functor_a", "functor_c", "functor_e", "functor_t"},
         "functors: a|c HYPERFIELD, or e|t over --system"},
        {"hyper morphism", cmd_hyper_morphism, {"is_hyperfield_homomorphism", "functor_a_map", "image_set_map"},
         "hyperfield map: HYPERFIELD HYPERFIELD MAP"},
        {"hyper tropical", cmd_hyper_tropical, {"hyperadd", "mul", "S_to_supertropical"},
         "tropical hyperfield: VAL VAL"},
        {"trop", cmd_trop, {"trop", "trop_ideal_to_bend"}, "tropicalize: PUISEUX-POLY or list"},
        {"matroid-check", cmd_matroid_check, {"valuated_matroid_check", "uniform_matroid", "make_matroid_candidate"},
         "valuated matroid axioms: CANDIDATE"},
        {"ideal-pair-check", cmd_ideal_pair_check, {"tropical_ideal_pair_check"}, "pair condition: POLY POLY [CANDIDATES]"},
        {"valuation-check", cmd_valuation_check, {"check_puiseux_valuation", "val_arith_check", "val"},
         "Puiseux valuation laws: SERIES-LIST"},
    };
    return cmds;
}

void print(const Ctx& c, std::ostream& out, const json& j) {
    if (c.format == "json") {
        out << j.dump(2) << "\n";
        return;
    }
    if (!j.is_object()) {
        out << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
        return;
    }
    for (auto it = j.begin(); it != j.end(); ++it)
        out << it.key() << ": " << (it.value().is_string() ? it.value().get<std::string>() : it.value().dump()) << "\n";
}

json error_json(const std::string& code, const std::string& message, const json& detail = json::object()) {
    json e = detail;
    e["code"] = code;
    e["message"] = message;
    return {{"error", e}};
}

}  // namespace

std::vector<std::string> subcommands() {
    std::vector<std::string> out;
    for (const auto& c : registry()) out.push_back(c.name);
    return out;
}

const std::map<std::string, std::vector<std::string>>& coverage() {
    static const auto m = [] {
        std::map<std::string, std::vector<std::string>> out;
        for (const auto& c : registry()) out[c.name] = c.ops;
        return out;
    }();
    return m;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Ctx ctx;
    CLI::App app{"Finite and parametric systems, congruences, modules and tropicalization", "tsys"};
    app.add_option("--format", ctx.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--seed", ctx.seed, "seed for sampled checks");
    app.add_option("--bound", ctx.bound, "search and step bound");
    app.add_option("--system", ctx.system, "builtin name, FinSys JSON or path");
    app.require_subcommand(1);

    std::map<const CLI::App*, const Command*> leaf;
    std::map<std::string, CLI::App*> groups;
    for (const auto& cmd : registry()) {
        auto space = cmd.name.find(' ');
        CLI::App* parent = &app;
        std::string name = cmd.name;
        if (space != std::string::npos) {
            const std::string group = cmd.name.substr(0, space);
            if (!groups.count(group)) {
                groups[group] = app.add_subcommand(group, group + " operations");
                groups[group]->require_subcommand(1);
                groups[group]->fallthrough();
            }
            parent = groups[group];
            name = cmd.name.substr(space + 1);
        }
        CLI::App* sub = parent->add_subcommand(name, cmd.help);
        sub->fallthrough();
        sub->add_option("args", ctx.args, "inputs: inline JSON, JSON file paths or tokens");
        leaf[sub] = &cmd;
    }

    for (std::size_t i = 0; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a.rfind("-", 0) == 0) {
            if (a.find('=') == std::string::npos && a != "-h" && a != "--help") ++i;
            continue;
        }
        if (!app.get_subcommand_no_throw(a)) {
            print(ctx, out, error_json("UsageError", "unknown subcommand \"" + a + "\""));
            return 2;
        }
        break;
    }

    // CLI11 splits "[a,b]" into a vector, so bracketed inputs travel as placeholders.
    std::vector<std::string> held;
    std::vector<std::string> reversed;
    for (auto it = args.rbegin(); it != args.rend(); ++it) {
        if (!it->empty() && it->front() == '[') {
            reversed.push_back("\x01" + std::to_string(held.size()));
            held.push_back(*it);
        } else {
            reversed.push_back(*it);
        }
    }
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        print(ctx, out, error_json("UsageError", e.what()));
        return 2;
    }

    const Command* cmd = nullptr;
    for (const auto& [sub, c] : leaf)
        if (sub->parsed()) cmd = c;
    if (!cmd) {
        print(ctx, out, error_json("UsageError", "no subcommand given"));
        return 2;
    }
    for (auto& a : ctx.args)
        if (!a.empty() && a.front() == '\x01') a = held[std::stoul(a.substr(1))];
    try {
        print(ctx, out, cmd->fn(ctx));
        return 0;
    } catch (const Rejected& e) {
        print(ctx, out, error_json(e.code(), e.what(), e.detail()));
        return 2;
    } catch (const Error& e) {
        print(ctx, out, error_json(e.code(), e.what()));
        return 2;
    } catch (const json::exception& e) {
        print(ctx, out, error_json("InvalidInput", e.what()));
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace tsys::cli
