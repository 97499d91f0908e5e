/*
Copyright 2026 The dflag Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "dflag/branching.hpp"
#include "dflag/classifier.hpp"
#include "dflag/fforacle.hpp"
#include "dflag/liecomb.hpp"

namespace dflag::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { kOk = 0, kParseError = 1, kBudgetExceeded = 2, kDisagreement = 3 };

struct Options {
    std::string pair;
    std::string family = "A";
    int n = 0;
    std::string p;
    std::string q;
    std::string q2;
    std::string triple;
    std::string qlist;
    std::string lambda;
    std::string mu;
    std::string nu;
    std::string mode = "restrict";
    std::string sigma = "identity";
    int kmax = 4;
    int lmax = 4;
    std::uint64_t budget = fforacle::kDefaultBudget;
    std::string format = "text";
};

/// A result contradicting a proven verdict or an exact identity.
class Disagreement : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline ParseError wrap(const std::string& token, const std::exception& e)
{
    return ParseError(std::string(e.what()) + " (token '" + token + "')");
}

inline liecomb::GroupDatum parse_group(const Options& o)
{
    if (o.n < 1) {
        throw ParseError("--n must be a positive integer");
    }
    if (o.family == "A") {
        return liecomb::GroupDatum::gl(o.n);
    }
    if (o.family == "C") {
        return liecomb::GroupDatum::sp(o.n);
    }
    throw ParseError("--family must be A or C, got '" + o.family + "'");
}

inline liecomb::SymmetricPairSpec parse_pair(const Options& o)
{
    if (o.pair.empty()) {
        throw ParseError("--pair is required");
    }
    return liecomb::SymmetricPairSpec::parse(o.pair, o.n);
}

inline liecomb::ParabolicSpec parse_parabolic(const liecomb::GroupDatum& g, const std::string& text,
                                              const std::string& flag)
{
    if (text.empty()) {
        throw ParseError(flag + " is required");
    }
    try {
        return liecomb::ParabolicSpec::make(g, liecomb::detail::parse_int_list(text, 1));
    } catch (const ParseError&) {
        throw;
    } catch (const InvalidInput& e) {
        throw wrap(text, e);
    }
}

inline liecomb::KParabolicSpec parse_k_parabolic(const liecomb::SymmetricPairSpec& pair, const std::string& text)
{
    if (text.empty()) {
        throw ParseError("--q is required");
    }
    try {
        auto Q = liecomb::KParabolicSpec::parse(text);
        Q.validate(pair);
        return Q;
    } catch (const ParseError&) {
        throw;
    } catch (const InvalidInput& e) {
        throw wrap(text, e);
    }
}

inline std::vector<int> parse_qlist(const std::string& text, std::vector<int> fallback)
{
    if (text.empty()) {
        return fallback;
    }
    return liecomb::detail::parse_int_list(text, 2);
}

inline std::vector<std::string> split_flags(const std::string& text)
{
    std::vector<std::string> out;
    for (auto t : liecomb::detail::split(text, ';')) {
        out.emplace_back(liecomb::detail::trim(t));
    }
    return out;
}

inline Json to_json(const liecomb::WeylElement& w, int length)
{
    return Json {{"element", w.to_string()}, {"length", length}};
}

inline Json to_json(const classifier::TripleFlagVerdict& v)
{
    Json rows = Json::array();
    Json families = Json::array();
    for (const auto& r : v.matched_rows) {
        rows.push_back(r.label());
        families.push_back(r.family_label());
    }
    Json triple = Json::array();
    for (const auto& c : v.normalized_triple) {
        triple.push_back(liecomb::detail::join_ints(c));
    }
    Json out {{"finite", v.finite}, {"matched_rows", rows}, {"row_families", families}, {"normalized_triple", triple}};
    if (!v.notes.empty()) {
        out["notes"] = v.notes;
    }
    return out;
}

inline Json to_json(const classifier::DoubleFlagVerdict& v)
{
    Json out {{"status", classifier::to_string(v.status)}};
    if (v.witness) {
        const auto& w = *v.witness;
        Json j {{"criterion", w.criterion}};
        if (w.p_prime) {
            j["p_prime"] = w.p_prime->to_string();
        }
        if (w.theta_p) {
            j["theta_p"] = w.theta_p->to_string();
        }
        if (w.p2) {
            j["p2"] = w.p2->to_string();
        }
        if (w.p3) {
            j["p3"] = w.p3->to_string();
        }
        j["table_rows"] = w.table_rows;
        j["citation"] = w.citation;
        out["witness"] = j;
    }
    if (v.truncated) {
        out["truncated"] = true;
    }
    if (!v.notes.empty()) {
        out["notes"] = v.notes;
    }
    return out;
}

inline Json to_json(const fforacle::OrbitCountReport& r)
{
    Json rows = Json::array();
    for (const auto& c : r.counts) {
        rows.push_back(Json {{"q", c.q}, {"points", c.points}, {"orbits", c.orbits}});
    }
    return Json {{"rows", rows}, {"hint", fforacle::to_string(r.hint)}, {"hint_is_proof", false}};
}

inline Json to_json(const branching::RestrictionProbe& r)
{
    Json out {{"multiplicity_free", r.multiplicity_free}, {"k_max", r.k_max}};
    if (r.failing_k) {
        out["failing_k"] = *r.failing_k;
        out["witness"] = Json {{"mu", r.witness->first.first.to_string()},
                               {"nu", r.witness->first.second.to_string()},
                               {"multiplicity", r.witness->second}};
    }
    return out;
}

inline Json to_json(const branching::TensorProbe& t)
{
    Json out {{"multiplicity_free", t.multiplicity_free},
              {"k_max", t.k_max},
              {"l_max", t.l_max},
              {"lambda", t.lambda.to_string()},
              {"lambda_theta", t.lambda_theta.to_string()}};
    if (t.failing) {
        out["failing_k"] = t.failing->first;
        out["failing_l"] = t.failing->second;
        out["witness"] = Json {{"nu", t.witness->first.to_string()}, {"multiplicity", t.witness->second}};
    }
    return out;
}

inline std::string scalar_text(const Json& v)
{
    return v.is_string() ? v.get<std::string>() : v.dump();
}

inline void render_text(const Json& v, std::ostream& os, int indent)
{
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    for (auto it = v.begin(); it != v.end(); ++it) {
        const auto& val = it.value();
        if (val.is_object()) {
            os << pad << it.key() << ":\n";
            render_text(val, os, indent + 2);
        } else if (val.is_array() && !val.empty() && val.front().is_object()) {
            os << pad << it.key() << ":\n";
            for (const auto& item : val) {
                std::string line;
                for (auto jt = item.begin(); jt != item.end(); ++jt) {
                    line += (line.empty() ? "" : "  ") + jt.key() + "=" + scalar_text(jt.value());
                }
                os << pad << "  - " << line << "\n";
            }
        } else if (val.is_array()) {
            std::string line;
            for (const auto& item : val) {
                line += (line.empty() ? "" : ", ") + scalar_text(item);
            }
            os << pad << it.key() << ": " << line << "\n";
        } else {
            os << pad << it.key() << ": " << scalar_text(val) << "\n";
        }
    }
}

inline void flatten(const Json& v, const std::string& prefix, std::ostream& os)
{
    if (v.is_object()) {
        for (auto it = v.begin(); it != v.end(); ++it) {
            flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), os);
        }
    } else if (v.is_array() && !v.empty() && (v.front().is_object() || v.front().is_array())) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            flatten(v[i], prefix + "." + std::to_string(i), os);
        }
    } else if (v.is_array()) {
        std::string line;
        for (const auto& item : v) {
            line += (line.empty() ? "" : ",") + scalar_text(item);
        }
        os << prefix << "\t" << line << "\n";
    } else {
        os << prefix << "\t" << scalar_text(v) << "\n";
    }
}

/// TSV: a `rows` table is emitted with a header line; anything else as path<TAB>value lines.
inline void render_tsv(const Json& v, std::ostream& os)
{
    if (v.contains("rows") && v["rows"].is_array() && !v["rows"].empty() && v["rows"].front().is_object()) {
        std::string header;
        for (auto it = v["rows"].front().begin(); it != v["rows"].front().end(); ++it) {
            header += (header.empty() ? "" : "\t") + it.key();
        }
        os << header << "\n";
        for (const auto& row : v["rows"]) {
            std::string line;
            for (auto it = row.begin(); it != row.end(); ++it) {
                line += (line.empty() ? "" : "\t") + scalar_text(it.value());
            }
            os << line << "\n";
        }
        return;
    }
    flatten(v, "", os);
}

inline void render(const Json& doc, const std::string& format, std::ostream& os)
{
    if (format == "json") {
        os << doc.dump(2) << "\n";
    } else if (format == "tsv") {
        render_tsv(doc, os);
    } else {
        render_text(doc, os, 0);
    }
}

inline Json cmd_mwz(const Options& o)
{
    const auto parts = split_flags(o.triple);
    if (parts.size() != 3) {
        throw ParseError("--triple needs three compositions separated by ';', got '" + o.triple + "'");
    }
    classifier::TripleFlagVerdict v;
    try {
        if (o.family == "A") {
            const auto a = liecomb::Composition::parse(parts[0]);
            const auto b = liecomb::Composition::parse(parts[1]);
            const auto c = liecomb::Composition::parse(parts[2]);
            if (o.n > 0 && a.size() != o.n) {
                throw ParseError("composition '" + parts[0] + "' does not have size --n " + std::to_string(o.n));
            }
            v = classifier::mwz_classify_A(a, b, c);
        } else if (o.family == "C") {
            const auto a = liecomb::SymplecticComposition::parse(parts[0]);
            const auto b = liecomb::SymplecticComposition::parse(parts[1]);
            const auto c = liecomb::SymplecticComposition::parse(parts[2]);
            if (o.n > 0 && a.rank() != o.n) {
                throw ParseError("shape '" + parts[0] + "' does not have size 2n for --n " + std::to_string(o.n));
            }
            v = classifier::mwz_classify_C(a, b, c);
        } else {
            throw ParseError("--family must be A or C, got '" + o.family + "'");
        }
    } catch (const ParseError&) {
        throw;
    } catch (const InvalidInput& e) {
        throw wrap(o.triple, e);
    }
    return to_json(v);
}

inline Json cmd_classify(const Options& o)
{
    const auto pair = parse_pair(o);
    const auto P = parse_parabolic(pair.group, o.p, "--p");
    const auto Q = parse_k_parabolic(pair, o.q);
    const auto c = classifier::classify(pair, P, Q);
    Json out {{"pair", pair.to_string()}, {"P", P.to_string()}, {"Q", Q.to_string()}};
    out["verdict"] = to_json(c.verdict);
    out["criteria"] = Json {{"triple", classifier::to_string(c.via_triple.status)},
                            {"intersection", classifier::to_string(c.via_intersection.status)}};
    Json rows = Json::array();
    for (const auto& r : c.summary) {
        rows.push_back(Json {{"citation", r.citation()}, {"description", r.description}});
    }
    out["summary_rows"] = rows;
    if (c.conflict) {
        out["conflict"] = true;
    }
    return out;
}

inline Json cmd_aiii_borel(const Options& o)
{
    const auto pair = parse_pair(o);
    if (pair.kind != liecomb::PairKind::AIII) {
        throw ParseError("aiii-borel needs an AIII pair, got '" + o.pair + "'");
    }
    const auto Q = parse_k_parabolic(pair, o.q);
    const auto r = classifier::classify_AIII_borel(pair.p, pair.q, liecomb::Composition(Q.factors[0]),
                                                   liecomb::Composition(Q.factors[1]));
    Json all = Json::array();
    for (auto c : r.all) {
        all.push_back(classifier::to_string(c));
    }
    return Json {{"pair", pair.to_string()}, {"Q", Q.to_string()}, {"case", classifier::to_string(r.primary)},
                 {"all_cases", all}};
}

inline Json cmd_probe_orbits(const Options& o)
{
    const auto pair = parse_pair(o);
    const auto P = parse_parabolic(pair.group, o.p, "--p");
    const auto Q = parse_k_parabolic(pair, o.q);
    const auto qs = parse_qlist(o.qlist, fforacle::default_qlist(pair));
    Json out {{"pair", pair.to_string()}, {"P", P.to_string()}, {"Q", Q.to_string()}};
    out.update(to_json(fforacle::growth_probe(pair, P, Q, qs, o.budget)));
    return out;
}

inline Json cmd_triple_orbits(const Options& o)
{
    const auto g = parse_group(o);
    const auto parts = split_flags(o.triple);
    if (parts.size() != 2 && parts.size() != 3) {
        throw ParseError("--triple needs two or three shapes separated by ';', got '" + o.triple + "'");
    }
    std::vector<liecomb::ParabolicSpec> ps;
    for (const auto& t : parts) {
        ps.push_back(parse_parabolic(g, t, "--triple"));
    }
    const auto qs = parse_qlist(o.qlist, {2, 3});
    const auto report = fforacle::triple_growth_probe(g, ps, qs, o.budget);
    Json out {{"group", g.to_string()}};
    out.update(to_json(report));
    if (ps.size() == 2) {
        const auto b = liecomb::bruhat_double_cosets(ps[0], ps[1]).count;
        out["bruhat"] = b;
        for (const auto& c : report.counts) {
            if (c.orbits != b) {
                throw Disagreement("orbit count " + std::to_string(c.orbits) + " at q=" + std::to_string(c.q)
                                   + " differs from the Weyl double-coset count " + std::to_string(b));
            }
        }
    } else if (std::all_of(ps.begin(), ps.end(), [](const auto& P) { return !P.is_whole(); })) {
        out["table_finite"] = classifier::mwz_classify(ps[0], ps[1], ps[2]).finite;
    }
    return out;
}

inline Json cmd_bruhat(const Options& o)
{
    const auto g = parse_group(o);
    const auto P = parse_parabolic(g, o.p, "--p");
    const auto P2 = parse_parabolic(g, o.q2.empty() ? o.p : o.q2, "--q2");
    const auto d = liecomb::bruhat_double_cosets(P, P2);
    Json reps = Json::array();
    for (std::size_t i = 0; i < d.representatives.size(); ++i) {
        reps.push_back(to_json(d.representatives[i], d.lengths[i]));
    }
    return Json {{"P", P.to_string()}, {"P2", P2.to_string()}, {"count", d.count}, {"representatives", reps}};
}

inline Json cmd_clans(const Options& o)
{
    const auto pair = parse_pair(o);
    if (pair.kind != liecomb::PairKind::AIII) {
        throw ParseError("clans needs an AIII pair, got '" + o.pair + "'");
    }
    const auto clans = liecomb::enumerate_clans(pair.p, pair.q);
    Json list = Json::array();
    for (const auto& c : clans) {
        list.push_back(c.to_string());
    }
    return Json {{"pair", pair.to_string()}, {"count", clans.size()}, {"clans", list}};
}

inline Json cmd_twisted(const Options& o)
{
    const auto g = parse_group(o);
    std::vector<int> sigma;
    if (o.sigma == "identity") {
        sigma = liecomb::identity_diagram_action(g);
    } else if (o.sigma == "flip") {
        sigma = liecomb::flip_diagram_action(g);
    } else {
        try {
            sigma = liecomb::detail::parse_int_list(o.sigma, 1);
        } catch (const InvalidInput& e) {
            throw wrap(o.sigma, e);
        }
    }
    const auto inv = liecomb::twisted_involutions(g, sigma);
    Json list = Json::array();
    for (const auto& v : inv) {
        list.push_back(to_json(v, liecomb::length(g, v)));
    }
    return Json {{"group", g.to_string()}, {"sigma", liecomb::detail::join_ints(sigma)}, {"count", inv.size()},
                 {"rows", list}};
}

inline branching::Partition parse_partition(const std::string& text, const std::string& flag)
{
    if (text.empty()) {
        throw ParseError(flag + " is required");
    }
    return branching::Partition::parse(text);
}

inline Json cmd_branch(const Options& o)
{
    const auto lambda = parse_partition(o.lambda, "--lambda");
    if (o.mode == "restrict") {
        const auto pair = parse_pair(o);
        if (pair.kind != liecomb::PairKind::AIII) {
            throw ParseError("branch --mode restrict needs an AIII pair for the Levi GL_p x GL_q");
        }
        const auto d = branching::restrict_to_levi(lambda, pair.p, pair.q);
        Json rows = Json::array();
        std::uint64_t total = 0;
        for (const auto& [k, m] : d.terms) {
            rows.push_back(Json {{"mu", k.first.to_string()}, {"nu", k.second.to_string()}, {"multiplicity", m}});
            total += m * branching::weyl_dim_gl(k.first, pair.p) * branching::weyl_dim_gl(k.second, pair.q);
        }
        const auto dim = branching::weyl_dim_gl(lambda, pair.p + pair.q);
        if (total != dim) {
            throw Disagreement("restriction dimension audit failed: " + std::to_string(total) + " != " + std::to_string(dim));
        }
        return Json {{"lambda", lambda.to_string()}, {"levi", pair.to_string()}, {"rows", rows},
                     {"multiplicity_free", d.multiplicity_free()}, {"dimension", dim}};
    }
    if (o.mode == "tensor") {
        const auto mu = parse_partition(o.mu, "--mu");
        if (o.n < 1) {
            throw ParseError("branch --mode tensor needs --n");
        }
        const auto d = branching::tensor_decompose(lambda, mu, o.n);
        Json rows = Json::array();
        std::uint64_t total = 0;
        for (const auto& [k, m] : d.terms) {
            rows.push_back(Json {{"nu", k.to_string()}, {"multiplicity", m}});
            total += m * branching::weyl_dim_gl(k, o.n);
        }
        const auto dim = branching::weyl_dim_gl(lambda, o.n) * branching::weyl_dim_gl(mu, o.n);
        if (total != dim) {
            throw Disagreement("tensor dimension audit failed: " + std::to_string(total) + " != " + std::to_string(dim));
        }
        return Json {{"lambda", lambda.to_string()}, {"mu", mu.to_string()}, {"n", o.n}, {"rows", rows},
                     {"multiplicity_free", d.multiplicity_free()}, {"dimension", dim}};
    }
    if (o.mode == "lr") {
        const auto mu = parse_partition(o.mu, "--mu");
        const auto nu = parse_partition(o.nu, "--nu");
        Json out {{"outer", lambda.to_string()}, {"inner1", mu.to_string()}, {"inner2", nu.to_string()},
                  {"coefficient", branching::lr_coefficient(lambda, mu, nu)}};
        if (!branching::lr_sizes_match(lambda, mu, nu)) {
            out["note"] = "sizes do not add up; coefficient is 0 by convention";
        }
        return out;
    }
    throw ParseError("--mode must be restrict, tensor or lr, got '" + o.mode + "'");
}

inline Json cmd_spherical_probe(const Options& o)
{
    const auto pair = parse_pair(o);
    const auto P = parse_parabolic(pair.group, o.p, "--p");
    const auto t = branching::spherical_probe_tensor(P, pair, o.kmax, o.lmax);
    Json out {{"pair", pair.to_string()}, {"P", P.to_string()}, {"tensor", to_json(t)}};
    if (pair.kind == liecomb::PairKind::AIII) {
        const auto r = branching::spherical_probe_restriction(P, pair.p, pair.q, o.kmax);
        out["restriction"] = to_json(r);
        if (t.multiplicity_free && !r.multiplicity_free) {
            throw Disagreement("tensor sweep is multiplicity-free but the restriction sweep is not");
        }
    }
    return out;
}

inline Json cmd_report(const Options& o, std::ostream& err, int& code)
{
    auto out = cmd_classify(o);
    if (out.contains("conflict")) {
        code = kDisagreement;
    }
    const auto pair = parse_pair(o);
    const auto P = parse_parabolic(pair.group, o.p, "--p");
    const auto Q = parse_k_parabolic(pair, o.q);
    const auto status = out["verdict"]["status"].get<std::string>();
    try {
        const auto qs = parse_qlist(o.qlist, fforacle::default_qlist(pair));
        const auto probe = fforacle::growth_probe(pair, P, Q, qs, o.budget);
        out["oracle"] = to_json(probe);
        bool agree = true;
        if (status == "FiniteProven") {
            agree = probe.hint == fforacle::GrowthHint::Bounded;
        } else if (status == "InfiniteProven") {
            agree = probe.hint == fforacle::GrowthHint::Growing;
        }
        out["agreement"] = Json {{"oracle", agree}};
        if (!agree) {
            err << "DISAGREEMENT: verdict " << status << " but the orbit counts are "
                << fforacle::to_string(probe.hint) << "\n";
            code = kDisagreement;
        }
    } catch (const BudgetExceeded& e) {
        out["oracle"] = Json {{"skipped", e.what()}};
        if (code == kOk) {
            code = kBudgetExceeded;
        }
    }
    if (P.group.is_type_a() && P.orientation == liecomb::Orientation::Standard) {
        const auto t = branching::spherical_probe_tensor(P, pair, o.kmax, o.lmax);
        Json b {{"tensor", to_json(t)}};
        if (pair.kind == liecomb::PairKind::AIII) {
            const auto r = branching::spherical_probe_restriction(P, pair.p, pair.q, o.kmax);
            b["restriction"] = to_json(r);
            const bool ok = !t.multiplicity_free || r.multiplicity_free;
            out["agreement"]["branching"] = ok;
            if (!ok) {
                err << "DISAGREEMENT: tensor sweep multiplicity-free but restriction sweep is not\n";
                code = kDisagreement;
            }
        }
        out["branching"] = b;
    }
    return out;
}

} // namespace detail

inline constexpr const char* kTsvHelp =
    "TSV output: commands with a table (probe-orbits, triple-orbits: q, points, orbits; branch: mu, nu,\n"
    "multiplicity or nu, multiplicity; twisted-involutions: element, length) print a header line and one\n"
    "row per entry. Other commands print path<TAB>value lines.\n"
    "Environment: DFLAG_BUDGET sets the default point budget (10000000).\n"
    "Exit codes: 0 ok, 1 parse error, 2 budget exceeded, 3 cross-check disagreement.";

/// Runs one command line (without the program name). Returns the exit status.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app {"Finiteness of K-orbits on double flag varieties, with finite-field and branching oracles", "dflag"};
    app.footer(kTsvHelp);
    app.require_subcommand(1);
    Options o;
    o.budget = fforacle::default_budget();

    auto add_common = [&](CLI::App* sc) {
        sc->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "tsv", "text"}));
    };
    auto add_pair = [&](CLI::App* sc) {
        sc->add_option("--pair", o.pair, "Symmetric pair: AI, AII, AIII:p,q, CI, CII:p,q");
        sc->add_option("--n", o.n, "Rank n (GL_n or Sp_2n) for pairs without p,q");
    };
    auto add_group = [&](CLI::App* sc) {
        sc->add_option("--family", o.family, "Group family A (GL_n) or C (Sp_2n)");
        sc->add_option("--n", o.n, "Rank n");
    };
    auto add_budget = [&](CLI::App* sc) {
        sc->add_option("--budget", o.budget, "Point budget for enumerations");
        sc->add_option("--qlist", o.qlist, "Field sizes, e.g. 2,3");
    };

    std::map<std::string, std::function<Json()>> handlers;
    int code = kOk;

    auto* mwz = app.add_subcommand("mwz", "Classify a triple flag variety");
    add_group(mwz);
    mwz->add_option("--triple", o.triple, "Three compositions 'a;b;c' (type C: full palindromes)")->required();
    handlers["mwz"] = [&] { return detail::cmd_mwz(o); };

    auto* classify = app.add_subcommand("classify", "Double flag verdict from both criteria and the summary tables");
    add_pair(classify);
    classify->add_option("--p", o.p, "Parabolic P of G as block sizes")->required();
    classify->add_option("--q", o.q, "Parabolic Q of K, factors separated by ';'")->required();
    handlers["classify"] = [&] {
        auto j = detail::cmd_classify(o);
        if (j.contains("conflict")) {
            err << "DISAGREEMENT: the two criteria return opposite proven verdicts\n";
            code = kDisagreement;
        }
        return j;
    };

    auto* aiii = app.add_subcommand("aiii-borel", "AIII with P a Borel subgroup: the five-case table");
    add_pair(aiii);
    aiii->add_option("--q", o.q, "Q1;Q2")->required();
    handlers["aiii-borel"] = [&] { return detail::cmd_aiii_borel(o); };

    auto* probe = app.add_subcommand("probe-orbits", "Count K(F_q)-orbits on G/P x K/Q for several q");
    add_pair(probe);
    add_budget(probe);
    probe->add_option("--p", o.p, "Parabolic P of G")->required();
    probe->add_option("--q", o.q, "Parabolic Q of K")->required();
    handlers["probe-orbits"] = [&] { return detail::cmd_probe_orbits(o); };

    auto* triple = app.add_subcommand("triple-orbits", "Count diagonal G(F_q)-orbits on two or three flag varieties");
    add_group(triple);
    add_budget(triple);
    triple->add_option("--triple", o.triple, "Two or three shapes 'a;b[;c]'")->required();
    handlers["triple-orbits"] = [&] { return detail::cmd_triple_orbits(o); };

    auto* bruhat = app.add_subcommand("bruhat", "Weyl group double cosets W_P \\ W / W_P2");
    add_group(bruhat);
    bruhat->add_option("--p", o.p, "First parabolic")->required();
    bruhat->add_option("--q2", o.q2, "Second parabolic (default: same as --p)");
    handlers["bruhat"] = [&] { return detail::cmd_bruhat(o); };

    auto* clans = app.add_subcommand("clans", "Clans of signature (p,q)");
    add_pair(clans);
    handlers["clans"] = [&] { return detail::cmd_clans(o); };

    auto* twisted = app.add_subcommand("twisted-involutions", "Twisted involutions of the Weyl group");
    add_group(twisted);
    twisted->add_option("--sigma", o.sigma, "Diagram action: identity, flip, or images of the simple roots");
    handlers["twisted-involutions"] = [&] { return detail::cmd_twisted(o); };

    auto* branch = app.add_subcommand("branch", "Restriction to GL_p x GL_q, tensor products, LR coefficients");
    add_pair(branch);
    branch->add_option("--mode", o.mode, "restrict, tensor or lr")->check(CLI::IsMember({"restrict", "tensor", "lr"}));
    branch->add_option("--lambda", o.lambda, "Highest weight (outer shape for lr)")->required();
    branch->add_option("--mu", o.mu, "Second weight (tensor, lr)");
    branch->add_option("--nu", o.nu, "Third weight (lr)");
    handlers["branch"] = [&] { return detail::cmd_branch(o); };

    auto* sph = app.add_subcommand("spherical-probe", "Multiplicity-freeness sweeps for a GL_n parabolic");
    add_pair(sph);
    sph->add_option("--p", o.p, "Standard parabolic P of GL_n")->required();
    sph->add_option("--kmax", o.kmax, "Sweep bound for k");
    sph->add_option("--lmax", o.lmax, "Sweep bound for l");
    handlers["spherical-probe"] = [&] { return detail::cmd_spherical_probe(o); };

    auto* report = app.add_subcommand("report", "Verdict, orbit counts and branching probes for one (pair, P, Q)");
    add_pair(report);
    add_budget(report);
    report->add_option("--p", o.p, "Parabolic P of G")->required();
    report->add_option("--q", o.q, "Parabolic Q of K")->required();
    report->add_option("--kmax", o.kmax, "Sweep bound for k");
    report->add_option("--lmax", o.lmax, "Sweep bound for l");
    handlers["report"] = [&] { return detail::cmd_report(o, err, code); };

    for (auto* sc : app.get_subcommands({})) {
        add_common(sc);
    }

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kParseError;
    }

    const auto* chosen = app.get_subcommands().front();
    const std::string name = chosen->get_name();
    try {
        Json doc {{"schema", 1}, {"command", name}};
        doc.update(handlers.at(name)());
        detail::render(doc, o.format, out);
        return code;
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return kBudgetExceeded;
    } catch (const Disagreement& e) {
        err << "DISAGREEMENT: " << e.what() << "\n";
        return kDisagreement;
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n";
        return kParseError;
    }
}

} // namespace dflag::cli
