#pragma once

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "fint/job.hpp"

namespace fint {

// Reproduces the five bundled reference sessions (fixtures/expected/) and
// diffs the freshly computed results against them.
struct ReplayOutcome {
    bool ok = false;
    std::string text;
};

namespace detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::vector<std::string> read_lines(const std::string& path) {
    std::istringstream in(read_file(path));
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (!line.empty()) out.push_back(line);
    }
    return out;
}

inline bool diff_string_sets(std::vector<std::string> computed, std::vector<std::string> expected,
                             std::string& text) {
    std::sort(computed.begin(), computed.end());
    std::sort(expected.begin(), expected.end());
    std::vector<std::string> missing, unexpected;
    std::set_difference(expected.begin(), expected.end(), computed.begin(), computed.end(),
                        std::back_inserter(missing));
    std::set_difference(computed.begin(), computed.end(), expected.begin(), expected.end(),
                        std::back_inserter(unexpected));
    for (const auto& s : missing) text += "  missing:    " + s + "\n";
    for (const auto& s : unexpected) text += "  unexpected: " + s + "\n";
    return missing.empty() && unexpected.empty();
}

}  // namespace detail

inline std::string render_binomial(const Binomial& b, const std::vector<std::string>& names) {
    return render_monomial(b.lead, names) + "-" + render_monomial(b.tail, names);
}

inline JobSpec load_job_file(const std::string& path) {
    return parse_job_text(detail::read_file(path));
}

namespace detail {

inline std::vector<std::string> session_names(std::vector<std::string> elim, int n, int lo,
                                              const std::string& xb, const std::string& zb) {
    std::vector<std::string> names = std::move(elim);
    for (int i = 0; i < n; ++i) names.push_back(xb + "_" + std::to_string(lo + i));
    for (int i = 0; i < n; ++i) names.push_back(zb + "_" + std::to_string(lo + i));
    return names;
}

// Session A: the first reference run, full reduced basis over the sign-split
// encoding with variables n, t, x_1..x_5, y_1..y_5.
inline ReplayOutcome replay_a(const std::string& dir) {
    auto job = load_job_file(dir + "/example1.job.json");
    auto A = eigenvalue_matrix(*job.eigen);
    auto ideal = toric_ideal(A, Strategy::sign_split);
    auto gb = binomial_groebner(std::move(ideal.generators), job.options.gb_budget);
    auto names = session_names({"n", "t"}, A.cols(), 1, "x", "y");
    std::vector<std::string> computed;
    for (const auto& b : gb) computed.push_back(render_binomial(b, names));
    auto expected = read_lines(dir + "/expected/appendix_a.txt");
    ReplayOutcome out;
    out.text = "appendix A: " + std::to_string(computed.size()) + " basis binomials, expected " +
               std::to_string(expected.size()) + "\n";
    out.ok = diff_string_sets(computed, expected, out.text);
    out.text += out.ok ? "appendix A: match\n" : "appendix A: MISMATCH\n";
    return out;
}

// Session B: integer echelon of the Hilbert-basis matrix.
inline ReplayOutcome replay_b(const std::string& dir) {
    auto job = load_job_file(dir + "/example1.job.json");
    auto H = hilbert_basis(eigenvalue_matrix(*job.eigen), job.options.strategy,
                           job.options.gb_budget);
    std::vector<std::vector<Integer>> hv;
    for (const auto& v : H.vectors) hv.push_back(std::vector<Integer>(v.begin(), v.end()));
    auto N = IntMatrix::from_columns(hv, H.n);
    auto ech = z_echelon(N);
    std::vector<std::string> computed;
    for (int i = 0; i < ech.rank; ++i) {
        std::string row;
        for (int j = 0; j < N.cols(); ++j) row += (j ? " " : "") + ech.R.at(i, j).get_str();
        computed.push_back(row);
    }
    auto expected = read_lines(dir + "/expected/appendix_b.txt");
    ReplayOutcome out;
    out.text = "appendix B: echelon rank " + std::to_string(ech.rank) + "\n";
    bool rows_ok = computed == expected;
    if (!rows_ok) diff_string_sets(computed, expected, out.text);
    auto mg = module_generators(hv, H.n);
    out.text += "module generators:\n";
    for (const auto& g : mg.generators) {
        out.text += "  (";
        for (size_t j = 0; j < g.size(); ++j) out.text += (j ? "," : "") + g[j].get_str();
        out.text += ")\n";
    }
    out.ok = rows_ok && mg.rank == static_cast<int>(expected.size());
    out.text += out.ok ? "appendix B: match\n" : "appendix B: MISMATCH\n";
    return out;
}

// Session C: the 64 restricted invariants, compared as x_1..x_15 monomials.
inline ReplayOutcome replay_c(const std::string& dir) {
    auto job = load_job_file(dir + "/example2_restricted.job.json");
    auto gens = invariant_generators(*job.system, job.options.strategy, job.options.gb_budget);
    std::vector<std::string> computed;
    for (const auto& [nu, mono] : gens) computed.push_back(monomial_string(nu));
    auto expected = read_lines(dir + "/expected/appendix_c.txt");
    ReplayOutcome out;
    out.text = "appendix C: " + std::to_string(computed.size()) + " generators, expected " +
               std::to_string(expected.size()) + "\n";
    out.ok = diff_string_sets(computed, expected, out.text);
    out.text += out.ok ? "appendix C: match\n" : "appendix C: MISMATCH\n";
    return out;
}

// Session D: the raw weight-vector run behind session C -- 211 basis
// binomials, of which the 64 pure ones are the session C list.
inline ReplayOutcome replay_d(const std::string& dir) {
    auto job = load_job_file(dir + "/example2_restricted.job.json");
    auto w = weight_vector(*job.system);
    EigenvalueSpec wspec(job.field, w);
    auto A = eigenvalue_matrix(wspec);
    auto ideal = toric_ideal(A, Strategy::sign_split);
    auto gb = binomial_groebner(std::move(ideal.generators), job.options.gb_budget);
    auto pure = extract_binomials(gb, ideal.ring.block("x"), ideal.ring.block("z"));
    std::vector<std::string> computed;
    for (const auto& v : pure) computed.push_back(monomial_string(v));
    auto expected = read_lines(dir + "/expected/appendix_c.txt");
    ReplayOutcome out;
    out.text = "appendix D: " + std::to_string(gb.size()) + " basis binomials (expected 211), " +
               std::to_string(pure.size()) + " pure\n";
    out.ok = diff_string_sets(computed, expected, out.text) && gb.size() == 211;
    out.text += out.ok ? "appendix D: match\n" : "appendix D: MISMATCH\n";
    return out;
}

// Session E: the slack-augmented run for k = 1, variables s, t, x_0..x_5,
// z_0..z_5, plus the resulting coset representatives.
inline ReplayOutcome replay_e(const std::string& dir) {
    auto job = load_job_file(dir + "/example1.job.json");
    const auto& spec = *job.eigen;
    auto C = coordinate_matrix(spec);
    int d = spec.field->degree(), n = spec.n();
    std::vector<std::vector<Rational>> Ck(d, std::vector<Rational>(n + 1));
    for (int j = 0; j < d; ++j) {
        Ck[j][0] = -C[j][0];
        for (int i = 0; i < n; ++i) Ck[j][i + 1] = C[j][i];
    }
    auto Ak = integerize(Ck).first;
    auto ideal = toric_ideal(Ak, Strategy::sign_split);
    auto gb = binomial_groebner(std::move(ideal.generators), job.options.gb_budget);
    auto names = session_names({"s", "t"}, n + 1, 0, "x", "z");
    std::vector<std::string> computed;
    for (const auto& b : gb) computed.push_back(render_binomial(b, names));
    auto expected = read_lines(dir + "/expected/appendix_e.txt");
    ReplayOutcome out;
    out.text = "appendix E: " + std::to_string(computed.size()) + " basis binomials, expected " +
               std::to_string(expected.size()) + "\n";
    out.ok = diff_string_sets(computed, expected, out.text);
    auto [H, S] = resonance_generators(spec, 1, Strategy::sign_split, job.options.gb_budget);
    out.text += "S_1 =";
    for (const auto& v : S.coset_reps) {
        out.text += " (";
        for (size_t j = 0; j < v.size(); ++j) out.text += (j ? "," : "") + std::to_string(v[j]);
        out.text += ")";
    }
    out.text += "\n";
    out.text += (out.ok ? "appendix E: match\n" : "appendix E: MISMATCH\n");
    return out;
}

}  // namespace detail

inline ReplayOutcome replay_appendix(char which, const std::string& fixture_dir) {
    switch (which) {
        case 'A': return detail::replay_a(fixture_dir);
        case 'B': return detail::replay_b(fixture_dir);
        case 'C': return detail::replay_c(fixture_dir);
        case 'D': return detail::replay_d(fixture_dir);
        case 'E': return detail::replay_e(fixture_dir);
        default: throw input_error("unknown appendix (use A..E)");
    }
}

}  // namespace fint
