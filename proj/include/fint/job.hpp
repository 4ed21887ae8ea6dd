#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "fint/invariants.hpp"
#include "fint/normalform.hpp"

namespace fint {

using nlohmann::json;

struct Options {
    Strategy strategy = Strategy::laurent_inverse_vars;
    std::string coeff_field = "q";  // "q" or "gfp"; the pipelines are coefficient-free,
    long prime = 31991;             // the prime only matters for generic Groebner runs
    long gb_budget = kDefaultGbBudget;
    int oracle_box = 6;
    long oracle_ceiling = 100000000;
    int degree_bound = 8;
};

struct JobSpec {
    json raw;  // original document, echoed into machine output
    FieldPtr field;
    std::optional<EigenvalueSpec> eigen;
    std::optional<SystemSpec> system;
    std::optional<StanleyDecomposition> stanley;
    Options options;
};

namespace detail {

// Recursive-descent parser for eigenvalue expressions in the field
// generator: rationals, + - * ^ and parentheses, e.g. "-1-z" or "z^2".
class ExprParser {
public:
    ExprParser(std::string src, FieldPtr field)
        : src_(std::move(src)), field_(std::move(field)) {}

    NumberFieldElement parse() {
        auto v = expr();
        skip_ws();
        if (pos_ != src_.size()) throw input_error("trailing input in expression: " + src_);
        return v;
    }

private:
    NumberFieldElement expr() {
        skip_ws();
        bool neg = false;
        if (peek() == '-') {
            ++pos_;
            neg = true;
        } else if (peek() == '+') {
            ++pos_;
        }
        auto v = term();
        if (neg) v = -v;
        while (true) {
            skip_ws();
            char c = peek();
            if (c == '+' || c == '-') {
                ++pos_;
                auto t = term();
                v = c == '+' ? v + t : v - t;
            } else {
                break;
            }
        }
        return v;
    }

    NumberFieldElement term() {
        auto v = factor();
        while (true) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                v = v * factor();
            } else {
                break;
            }
        }
        return v;
    }

    NumberFieldElement factor() {
        auto v = atom();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            std::string num;
            while (std::isdigit(peek())) num += src_[pos_++];
            if (num.empty()) throw input_error("exponent expected in expression: " + src_);
            v = v.pow(static_cast<unsigned>(std::stoul(num)));
        }
        return v;
    }

    NumberFieldElement atom() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            auto v = expr();
            skip_ws();
            if (peek() != ')') throw input_error("missing ')' in expression: " + src_);
            ++pos_;
            return v;
        }
        if (c == '-') {
            ++pos_;
            return -factor();
        }
        if (std::isdigit(c)) {
            std::string lit;
            while (std::isdigit(peek())) lit += src_[pos_++];
            skip_ws();
            if (peek() == '/') {
                size_t save = pos_;
                ++pos_;
                skip_ws();
                std::string den;
                while (std::isdigit(peek())) den += src_[pos_++];
                if (den.empty()) {
                    pos_ = save;
                } else {
                    lit += "/" + den;
                }
            }
            return NumberFieldElement::from_rational(field_, parse_rational(lit));
        }
        if (std::isalpha(c) || c == '_') {
            std::string name;
            while (std::isalnum(peek()) || peek() == '_') name += src_[pos_++];
            if (name != field_->generator())
                throw input_error("unknown symbol '" + name + "' in expression: " + src_);
            return NumberFieldElement::generator(field_);
        }
        throw input_error("cannot parse expression: " + src_);
    }

    char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    std::string src_;
    FieldPtr field_;
    size_t pos_ = 0;
};

inline Rational json_rational(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw input_error("rationals must be integers or \"p/q\" strings (no floats)");
}

inline NumberFieldElement json_eigenvalue(const json& j, const FieldPtr& field) {
    if (j.is_number_integer())
        return NumberFieldElement::from_rational(field, Rational(j.get<long>()));
    if (j.is_array()) {
        std::vector<Rational> coords;
        for (const auto& c : j) coords.push_back(json_rational(c));
        return NumberFieldElement(field, std::move(coords));
    }
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        // Plain rationals parse without the expression machinery.
        bool plain = !s.empty();
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c)) && c != '/' && c != '-') plain = false;
        if (plain) return NumberFieldElement::from_rational(field, parse_rational(s));
        return ExprParser(s, field).parse();
    }
    throw input_error("eigenvalue must be a rational, a coordinate vector, or an expression");
}

}  // namespace detail

inline Strategy parse_strategy(const std::string& s) {
    if (s == "laurent") return Strategy::laurent_inverse_vars;
    if (s == "sign-split" || s == "sign_split") return Strategy::sign_split;
    throw input_error("unknown strategy: " + s);
}

inline JobSpec parse_job(const json& doc) {
    if (!doc.is_object()) throw input_error("job document must be a JSON object");
    JobSpec job;
    job.raw = doc;

    if (doc.contains("field")) {
        const auto& f = doc.at("field");
        std::vector<Rational> mp;
        for (const auto& c : f.at("min_poly")) mp.push_back(detail::json_rational(c));
        job.field = std::make_shared<NumberField>(f.at("generator").get<std::string>(),
                                                  std::move(mp));
    } else {
        job.field = NumberField::rationals();
    }

    if (doc.contains("lambda")) {
        std::vector<NumberFieldElement> lam;
        for (const auto& l : doc.at("lambda")) lam.push_back(detail::json_eigenvalue(l, job.field));
        job.eigen.emplace(job.field, std::move(lam));
    }

    if (doc.contains("system")) {
        if (!job.eigen) throw input_error("system requires lambda");
        const auto& s = doc.at("system");
        std::vector<ExponentVector> omega;
        for (const auto& q : s.at("omega")) omega.push_back(q.get<ExponentVector>());
        std::vector<std::vector<std::string>> labels;
        if (s.contains("labels")) labels = s.at("labels").get<std::vector<std::vector<std::string>>>();
        std::set<std::pair<int, int>> zeroed;
        if (s.contains("zeroed"))
            for (const auto& z : s.at("zeroed")) {
                if (!z.is_array() || z.size() != 2)
                    throw input_error("zeroed entries must be [omega_index, component] pairs");
                zeroed.insert({z[0].get<int>(), z[1].get<int>()});
            }
        job.system.emplace(*job.eigen, std::move(omega), std::move(labels), std::move(zeroed));
    }

    if (doc.contains("stanley")) {
        StanleyDecomposition dec;
        for (const auto& s : doc.at("stanley").at("summands")) {
            StanleySummand sm;
            sm.k = s.at("k").get<int>();
            sm.gamma = s.at("gamma").get<ExponentVector>();
            for (int m : s.at("allowed").get<std::vector<int>>()) sm.allowed.push_back(m - 1);
            dec.summands.push_back(std::move(sm));
        }
        job.stanley = std::move(dec);
    }

    if (doc.contains("options")) {
        const auto& o = doc.at("options");
        if (o.contains("strategy")) job.options.strategy = parse_strategy(o.at("strategy"));
        if (o.contains("coeff_field")) job.options.coeff_field = o.at("coeff_field");
        if (o.contains("prime")) job.options.prime = o.at("prime").get<long>();
        if (o.contains("gb_budget")) job.options.gb_budget = o.at("gb_budget").get<long>();
        if (o.contains("oracle_box")) job.options.oracle_box = o.at("oracle_box").get<int>();
        if (o.contains("oracle_ceiling"))
            job.options.oracle_ceiling = o.at("oracle_ceiling").get<long>();
        if (o.contains("degree_bound")) job.options.degree_bound = o.at("degree_bound").get<int>();
    }
    return job;
}

inline JobSpec parse_job_text(const std::string& text) {
    try {
        return parse_job(json::parse(text));
    } catch (const json::exception& e) {
        throw input_error(std::string("cannot parse job document: ") + e.what());
    }
}

struct CommandResult {
    json machine;
    std::string text;
};

namespace detail {

inline json machine_envelope(const JobSpec& job, const std::string& command) {
    return json{{"schema", 1}, {"command", command}, {"job", job.raw}};
}

}  // namespace detail

inline CommandResult cmd_integrals(const JobSpec& job) {
    if (!job.eigen) throw input_error("job has no lambda");
    const auto& spec = *job.eigen;
    auto A = eigenvalue_matrix(spec);
    auto H = hilbert_basis(A, job.options.strategy, job.options.gb_budget);
    std::vector<std::vector<Integer>> hv;
    for (const auto& v : H.vectors) hv.push_back(std::vector<Integer>(v.begin(), v.end()));
    auto mg = module_generators(hv, spec.n());
    auto rc = rank_condition(A, hv);

    json result;
    result["strategy"] = strategy_name(H.strategy);
    result["hilbert_basis"] = H.vectors;
    json integrals = json::array();
    for (const auto& v : H.vectors) integrals.push_back(monomial_string(v));
    result["integrals"] = integrals;
    json gens = json::array();
    for (const auto& g : mg.generators) {
        ExponentVector e;
        for (const auto& x : g) e.push_back(static_cast<int>(x.get_si()));
        gens.push_back(e);
    }
    result["module_generators"] = gens;
    result["module_rank"] = mg.rank;
    result["rank_kernel"] = rc.rank_kernel;
    result["rank_condition"] = rc.equal;

    std::string text;
    if (H.vectors.empty()) {
        text += "no nontrivial monomial first integrals\n";
    } else {
        text += "Hilbert basis (" + std::to_string(H.vectors.size()) + " vectors):\n";
        for (size_t i = 0; i < H.vectors.size(); ++i) {
            text += "  (";
            for (size_t j = 0; j < H.vectors[i].size(); ++j)
                text += (j ? "," : "") + std::to_string(H.vectors[i][j]);
            text += ")\n";
        }
        text += "generators of the integral algebra:\n";
        for (size_t i = 0; i < H.vectors.size(); ++i)
            text += "  I_" + std::to_string(i + 1) + " = " + monomial_string(H.vectors[i]) + "\n";
        text += "Z-module generators (rank " + std::to_string(mg.rank) + "):\n";
        for (const auto& g : gens) {
            text += "  (";
            for (size_t j = 0; j < g.size(); ++j)
                text += (j ? "," : "") + g[j].dump();
            text += ")\n";
        }
    }
    text += "rank kernel = " + std::to_string(rc.rank_kernel) +
            ", rank R = " + std::to_string(rc.rank_R) + ", condition " +
            (rc.equal ? "holds" : "fails") + "\n";

    CommandResult out;
    out.machine = detail::machine_envelope(job, "integrals");
    out.machine["result"] = result;
    out.text = text;
    return out;
}

inline CommandResult cmd_invariants(const JobSpec& job) {
    if (!job.system) throw input_error("job has no system");
    const auto& sys = *job.system;
    auto w = weight_vector(sys);
    auto gens = invariant_generators(sys, job.options.strategy, job.options.gb_budget);

    json result;
    json weights = json::array();
    for (const auto& e : w) weights.push_back(e.str());
    result["weight_vector"] = weights;
    result["count"] = gens.size();
    json vecs = json::array(), monos = json::array();
    for (const auto& [nu, mono] : gens) {
        vecs.push_back(nu);
        monos.push_back(mono);
    }
    result["generators"] = vecs;
    result["monomials"] = monos;

    std::string text = "weight vector: (";
    for (size_t i = 0; i < w.size(); ++i) text += (i ? "," : "") + w[i].str();
    text += ")\n";
    text += std::to_string(gens.size()) + " invariant generators:\n";
    for (const auto& [nu, mono] : gens) text += "  " + mono + "\n";

    CommandResult out;
    out.machine = detail::machine_envelope(job, "invariants");
    out.machine["result"] = result;
    out.text = text;
    return out;
}

inline std::string render_syzygy(const Syzygy& s, const std::vector<Equivariant>& equivs) {
    auto side = [&](const std::vector<int>& mu, int j) {
        std::string out;
        for (size_t m = 0; m < mu.size(); ++m) {
            if (mu[m] == 0) continue;
            if (!out.empty()) out += "*";
            out += "I_" + std::to_string(m + 1);
            if (mu[m] > 1) out += "^" + std::to_string(mu[m]);
        }
        if (!out.empty()) out += "*";
        out += equivs[j].label;
        return out;
    };
    return side(s.left_mu, s.left_j) + " = " + side(s.right_mu, s.right_j);
}

inline CommandResult cmd_equivariants(const JobSpec& job) {
    if (!job.eigen) throw input_error("job has no lambda");
    const auto& spec = *job.eigen;
    auto eq = equivariant_generators(spec, job.options.strategy, job.options.gb_budget);
    std::vector<ExponentVector> integrals = eq.hilbert.vectors;
    auto syz = syzygy_scan(integrals, eq.equivariants, job.options.degree_bound);

    json result;
    json per_k = json::array();
    for (const auto& S : eq.per_k)
        per_k.push_back(json{{"k", S.k}, {"coset_reps", S.coset_reps}});
    result["resonance_sets"] = per_k;
    json eqs = json::array();
    for (const auto& e : eq.equivariants)
        eqs.push_back(json{{"label", e.label},
                           {"k", e.k},
                           {"gamma", e.gamma},
                           {"monomial", monomial_string(e.gamma) + "*e_" + std::to_string(e.k)}});
    result["equivariants"] = eqs;
    json syzygies = json::array();
    for (const auto& s : syz)
        syzygies.push_back(json{{"left_mu", s.left_mu},
                                {"left", eq.equivariants[s.left_j].label},
                                {"right_mu", s.right_mu},
                                {"right", eq.equivariants[s.right_j].label},
                                {"rendered", render_syzygy(s, eq.equivariants)}});
    result["syzygies"] = syzygies;

    std::string text;
    for (const auto& S : eq.per_k) {
        text += "S_" + std::to_string(S.k) + " = {";
        for (size_t i = 0; i < S.coset_reps.size(); ++i) {
            text += i ? ", (" : "(";
            for (size_t j = 0; j < S.coset_reps[i].size(); ++j)
                text += (j ? "," : "") + std::to_string(S.coset_reps[i][j]);
            text += ")";
        }
        text += "}\n";
    }
    text += "equivariants:\n";
    for (const auto& e : eq.equivariants)
        text += "  " + e.label + " = " + monomial_string(e.gamma) + "*e_" + std::to_string(e.k) +
                "\n";
    text += "syzygies (degree bound " + std::to_string(job.options.degree_bound) + "):\n";
    for (const auto& s : syz) text += "  " + render_syzygy(s, eq.equivariants) + "\n";

    if (job.stanley) {
        auto rep = stanley_verify(*job.stanley, spec, job.options.degree_bound,
                                  job.options.strategy, job.options.gb_budget);
        json sr;
        sr["ok"] = rep.ok;
        json miss = json::array(), dup = json::array();
        for (const auto& [k, a] : rep.missing) miss.push_back(json{{"k", k}, {"alpha", a}});
        for (const auto& [k, a] : rep.duplicated) dup.push_back(json{{"k", k}, {"alpha", a}});
        sr["missing"] = miss;
        sr["duplicated"] = dup;
        result["stanley"] = sr;
        text += std::string("stanley decomposition: ") + (rep.ok ? "verified" : "REJECTED") +
                " (missing " + std::to_string(rep.missing.size()) + ", duplicated " +
                std::to_string(rep.duplicated.size()) + ")\n";
    }

    CommandResult out;
    out.machine = detail::machine_envelope(job, "equivariants");
    out.machine["result"] = result;
    out.text = text;
    return out;
}

inline CommandResult cmd_oracle_check(const JobSpec& job, int box) {
    if (!job.eigen) throw input_error("job has no lambda");
    const auto& spec = *job.eigen;
    auto A = eigenvalue_matrix(spec);
    auto oracle = oracle_enumerate(A, box, job.options.oracle_ceiling);
    auto H = hilbert_basis(A, job.options.strategy, job.options.gb_budget);

    // Boxed agreement: every oracle-minimal vector is a basis element and
    // every basis element inside the box is oracle-minimal.
    bool agree = true;
    for (const auto& v : oracle.minimal)
        if (std::find(H.vectors.begin(), H.vectors.end(), v) == H.vectors.end()) agree = false;
    for (const auto& v : H.vectors) {
        bool inside = true;
        for (int e : v)
            if (e > box) inside = false;
        if (!inside) continue;
        if (std::find(oracle.minimal.begin(), oracle.minimal.end(), v) == oracle.minimal.end())
            agree = false;
    }
    bool generated = true;
    for (const auto& s : oracle.solutions)
        if (!is_nonneg_combination(s, H.vectors)) generated = false;

    json result;
    result["box"] = box;
    result["solutions"] = oracle.solutions;
    result["minimal"] = oracle.minimal;
    result["hilbert_basis"] = H.vectors;
    result["boxed_agreement"] = agree;
    result["generation_property"] = generated;

    std::string text = "oracle box " + std::to_string(box) + ": " +
                       std::to_string(oracle.solutions.size()) + " solutions, " +
                       std::to_string(oracle.minimal.size()) + " minimal\n";
    text += std::string("boxed agreement with Groebner basis: ") + (agree ? "yes" : "NO") + "\n";
    text += std::string("generation property: ") + (generated ? "yes" : "NO") + "\n";

    CommandResult out;
    out.machine = detail::machine_envelope(job, "oracle-check");
    out.machine["result"] = result;
    out.text = text;
    return out;
}

}  // namespace fint
