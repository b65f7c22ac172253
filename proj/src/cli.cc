// Copyright 2026 The stabmub Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "stabmub/cli.h"

#include <chrono>
#include <filesystem>
#include <map>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "stabmub/artifacts.h"
#include "stabmub/error.h"
#include "stabmub/parallel.h"
#include "stabmub/quadrature.h"

namespace stabmub {

namespace {

unsigned parse_degree(const std::string &text) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
        v = std::stoul(text, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used == 0 || used != text.size() || v < 1 || v > kMaxDegree) {
        throw Error(ErrorKind::InvalidConfig, "degree must be an integer in [1, 16], got '" + text + "'");
    }
    return static_cast<unsigned>(v);
}

std::vector<std::string> split_commas(const std::string &text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        parts.push_back(item);
    }
    if (parts.empty()) {
        throw Error(ErrorKind::InvalidConfig, "empty list");
    }
    return parts;
}

void require_max_degree(const std::vector<unsigned> &ns, unsigned max, const std::string &what) {
    for (unsigned n : ns) {
        if (n > max) {
            throw Error(ErrorKind::DegreeTooLarge,
                        what + " supports n <= " + std::to_string(max) + ", got n = " + std::to_string(n));
        }
    }
}

std::string scope(unsigned n, TorusKind kind, const SignSequence &s) {
    return "[n=" + std::to_string(n) + "," + std::string(kind_name(kind)) + "," + s.str() + "]";
}

void add_scoped(Report &report, const std::string &prefix, Report part, const char *sep = ".") {
    for (auto &c : part.checks) {
        c.name = prefix + sep + c.name;
        report.add(std::move(c));
    }
}

json field_info_json(unsigned n) {
    const Field &f = Field::get(n);
    const ExtField &ext = ExtField::of(f);
    const SelfDualBasis sdb = SelfDualBasis::find(f);
    json basis = json::array();
    for (Elem w : sdb.omegas()) {
        basis.push_back(w);
    }
    ExtElement xi = ext.norm_one_generator();
    return {{"n", n},
            {"modulus_bits", f.modulus()},
            {"size", f.size()},
            {"multiplicative_generator", f.multiplicative_generator()},
            {"self_dual_basis", basis},
            {"extension", {{"t", ext.t()}, {"u", ext.u()}}},
            {"norm_one_generator", json::array({xi.a(), xi.b()})}};
}

json single_or_array(std::vector<json> items) {
    if (items.size() == 1) {
        return std::move(items.front());
    }
    json out = json::array();
    for (auto &j : items) {
        out.push_back(std::move(j));
    }
    return out;
}

std::string sign_slug(const SignSequence &s) {
    std::string out;
    for (int x : s.r) {
        out.push_back(x > 0 ? 'p' : 'm');
    }
    return out;
}

MultiplierTable parse_multiplier_table(const json &j, const MultiplierSpec &spec) {
    const json &g = j.at("g");
    const Field &f = spec.field();
    const std::size_t expected = std::size_t{f.size()} * f.size() * f.size() * f.size();
    if (!g.is_array() || g.size() != expected) {
        throw Error(ErrorKind::ParseError, "'g' must be an array of |V|^2 = " + std::to_string(expected) + " values");
    }
    MultiplierTable t{&f, spec.frame(), {}};
    t.g.reserve(expected);
    for (const auto &x : g) {
        if (!x.is_number_unsigned() || x.get<unsigned>() > 3) {
            throw Error(ErrorKind::ParseError, "'g' entries must be integers in [0, 3]");
        }
        t.g.push_back(Z4(static_cast<int>(x.get<unsigned>())));
    }
    return t;
}

// Multiplier files: the standard header fields, then agreement with a fresh construction and
// the Weyl and invariance checks on the stored table.
Report verify_multiplier_file(const json &j, unsigned jobs) {
    for (const char *key : {"n", "kind", "signs", "g"}) {
        if (!j.contains(key)) {
            throw Error(ErrorKind::ParseError, std::string("missing key '") + key + "'");
        }
    }
    if (!j.at("n").is_number_unsigned() || j.at("n").get<unsigned>() < 1 ||
        j.at("n").get<unsigned>() > kTableMaxDegree) {
        throw Error(ErrorKind::ParseError, "'n' must be an integer in [1, " + std::to_string(kTableMaxDegree) + "]");
    }
    const unsigned n = j.at("n").get<unsigned>();
    if (!j.at("kind").is_string() || !j.at("signs").is_array()) {
        throw Error(ErrorKind::ParseError, "'kind' must be a string and 'signs' an array");
    }
    TorusKind kind;
    SignSequence signs;
    try {
        kind = parse_kind(j.at("kind").get<std::string>());
        for (const auto &s : j.at("signs")) {
            signs.r.push_back(s.get<int>());
        }
    } catch (const std::exception &e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
    if (signs.r.size() != n) {
        throw Error(ErrorKind::ParseError, "'signs' must have n entries");
    }
    for (int s : signs.r) {
        if (s != 1 && s != -1) {
            throw Error(ErrorKind::ParseError, "'signs' entries must be 1 or -1");
        }
    }
    MultiplierSpec spec = MultiplierSpec::make(n, kind, signs);
    MultiplierTable stored = parse_multiplier_table(j, spec);
    MultiplierTable fresh = spec.table();
    Report report;
    CheckResult match{"file.matches_construction"};
    match.checked = stored.g.size();
    for (std::size_t k = 0; k < stored.g.size(); k++) {
        if (!(stored.g[k] == fresh.g[k])) {
            const Field &f = spec.field();
            match.fail({{"u", vec_json(vec_from_index(f, static_cast<std::uint32_t>(k / stored.points())))},
                        {"v", vec_json(vec_from_index(f, static_cast<std::uint32_t>(k % stored.points())))},
                        {"stored", stored.g[k].value()},
                        {"expected", fresh.g[k].value()}});
            break;
        }
    }
    report.add(match);
    WeylCheckOptions opts;
    opts.jobs = jobs;
    report.merge(check_weyl_multiplier(stored, opts));
    report.add(check_invariance(stored, spec.torus().elements(spec.field()), spec.frame(), jobs));
    return report;
}

Report verify_field_file(const json &j) {
    if (!j.contains("n") || !j.at("n").is_number_unsigned() || !j.contains("modulus_bits") ||
        !j.at("modulus_bits").is_number_unsigned()) {
        throw Error(ErrorKind::ParseError, "field files need integer 'n' and 'modulus_bits'");
    }
    const unsigned n = j.at("n").get<unsigned>();
    const auto modulus = j.at("modulus_bits").get<std::uint64_t>();
    CheckResult c{"file.field_descriptor"};
    c.checked = 1;
    if (n < 1 || n > kMaxDegree) {
        c.fail({{"reason", "n out of range"}});
    } else if (modulus != Field::default_modulus(n)) {
        c.fail({{"reason", "modulus differs from the fixed choice"}, {"expected", Field::default_modulus(n)}});
    } else if (j.contains("self_dual_basis")) {
        json expected = field_info_json(n);
        for (const char *key : {"self_dual_basis", "extension", "norm_one_generator", "multiplicative_generator"}) {
            if (j.contains(key) && j.at(key) != expected.at(key)) {
                c.fail({{"reason", "field data differs from a fresh computation"}, {"key", key}});
            }
        }
    }
    Report r;
    r.add(c);
    return r;
}

Report verify_file(const std::string &path, std::uint64_t seed, unsigned jobs) {
    json j = read_json_file(path);
    if (!j.is_object()) {
        throw Error(ErrorKind::ParseError, "'" + path + "': top level must be an object");
    }
    std::string type = j.contains("type") && j.at("type").is_string() ? j.at("type").get<std::string>() : "";
    if (type.empty() && j.contains("bases")) {
        type = "mub";
    }
    try {
        if (type == "mub") {
            FileVerifyOptions opts;
            opts.seed = seed;
            opts.jobs = jobs;
            return verify_mub_document(parse_mub(j), opts);
        }
        if (type == "multiplier") {
            return verify_multiplier_file(j, jobs);
        }
        if (type == "field") {
            return verify_field_file(j);
        }
    } catch (const Error &e) {
        if (e.kind() == ErrorKind::ParseError) {
            throw Error(ErrorKind::ParseError, "'" + path + "': " + e.what());
        }
        throw;
    }
    throw Error(ErrorKind::ParseError, "'" + path + "': unknown document type '" + type + "'");
}

// The split counterpart of the appendix identities: g(a1 e1, a2 e2) against its closed form.
Report split_form_check(const MultiplierSpec &spec) {
    const Field &f = spec.field();
    CheckResult c{"mult_split"};
    for (Elem a1 = 0; a1 < f.size(); a1++) {
        for (Elem a2 = 0; a2 < f.size(); a2++) {
            Z4 lhs = spec.g({a1, 0}, {0, a2});
            Z4 rhs = split_closed_form(spec, a1, a2);
            c.checked++;
            if (lhs != rhs) {
                c.fail({{"alpha1", a1}, {"alpha2", a2}, {"definitional", lhs.value()}, {"closed", rhs.value()}});
            }
        }
    }
    Report r;
    r.add(c);
    return r;
}

const std::vector<std::string> kAllSuites = {"multiplier", "quadrature", "covariance", "appendix",
                                             "distinctness", "nogo", "conjugacy"};

struct VerifyConfig {
    std::vector<unsigned> ns;
    std::vector<TorusKind> kinds;
    std::string signs;
    std::set<std::string> suites;
    bool suites_explicit = false;
    std::uint64_t seed = 0;
    unsigned jobs = 1;
    std::string element;
};

// An element outside the torus cannot be represented by U(A). The report records that failure
// together with the invariance check of m under the element, which exhibits a violating pair.
Report verify_element(const QuadratureSystem &q, const std::string &text, unsigned jobs) {
    const Field &f = q.field();
    const SympMap A = parse_symp(text, f);
    if (det(f, A) != 1) {
        throw Error(ErrorKind::InvalidConfig, "element " + to_string(A) + " is not in SL(2, F)");
    }
    const SympMap P = q.spec.change_of_basis();
    const SympMap local = compose(f, inverse(f, P), compose(f, A, P));
    Report report;
    CheckResult c{"covariance.element"};
    c.details["element"] = symp_json(A);
    c.details["element_in_spec_frame"] = symp_json(local);
    c.checked = 1;
    if (!q.spec.torus().contains(f, local)) {
        c.fail({{"reason", "not in torus"}, {"element", symp_json(A)}});
        report.add(c);
        MultiplierTable standard = to_standard(q.spec.table(), P);
        CheckResult inv = check_invariance(standard, {A}, Frame::Standard, jobs);
        inv.name = "covariance.element_invariance";
        report.add(inv);
        return report;
    }
    report.add(c);
    std::vector<AffineMap> group;
    for (std::uint32_t i = 0; i < f.size() * f.size(); i++) {
        group.push_back({local, vec_from_index(f, i)});
    }
    CheckResult cov = verify_covariance(q, group, jobs);
    cov.name = "covariance.element_translates";
    report.add(cov);
    return report;
}

Report run_verify_config(const VerifyConfig &cfg) {
    require_max_degree(cfg.ns, kVerifyMaxDegree, "verify");
    auto wants = [&](const char *s) { return cfg.suites.count(s) != 0; };
    if (cfg.suites_explicit) {
        if (wants("covariance") || !cfg.element.empty()) {
            require_max_degree(cfg.ns, kCovarianceMaxDegree, "covariance");
        }
        if (wants("nogo")) {
            require_max_degree(cfg.ns, kNogoMaxDegree, "nogo");
        }
        if (wants("conjugacy")) {
            require_max_degree(cfg.ns, kConjugacyMaxDegree, "conjugacy");
        }
    }
    if (!cfg.element.empty() && cfg.ns.size() != 1) {
        throw Error(ErrorKind::InvalidConfig, "--element needs exactly one degree");
    }
    Report report;
    for (unsigned n : cfg.ns) {
        const auto signs = parse_sign_list(cfg.signs, n);
        for (TorusKind kind : cfg.kinds) {
            for (const auto &s : signs) {
                const std::string sc = scope(n, kind, s);
                MultiplierSpec spec = MultiplierSpec::make(n, kind, s);
                const bool need_system = wants("quadrature") || !cfg.element.empty() ||
                                         (wants("covariance") && n <= kCovarianceMaxDegree);
                if (wants("multiplier")) {
                    MultiplierTable t = spec.table();
                    WeylCheckOptions opts;
                    opts.seed = cfg.seed;
                    opts.jobs = cfg.jobs;
                    Report part = check_weyl_multiplier(t, opts);
                    part.add(check_invariance(t, spec.torus().elements(spec.field()), spec.frame(), cfg.jobs));
                    add_scoped(report, "multiplier" + sc, std::move(part));
                }
                if (wants("appendix")) {
                    add_scoped(report, "appendix" + sc,
                               kind == TorusKind::Nonsplit ? appendix_identity_check(spec) : split_form_check(spec));
                }
                if (!need_system) {
                    continue;
                }
                QuadratureSystem q = build_quadrature(spec, cfg.jobs);
                if (wants("quadrature")) {
                    add_scoped(report, "quadrature" + sc, verify_definition(q, cfg.jobs));
                }
                if (wants("covariance") && n <= kCovarianceMaxDegree) {
                    Report part;
                    part.add(verify_covariance(q, semidirect_elements(spec.torus(), spec.field()), cfg.jobs));
                    add_scoped(report, "covariance" + sc, std::move(part));
                }
                if (!cfg.element.empty()) {
                    add_scoped(report, "element" + sc, verify_element(q, cfg.element, cfg.jobs));
                }
            }
            if (wants("distinctness")) {
                Report part;
                part.add(distinctness_check(n, kind, signs));
                add_scoped(report, "distinctness[n=" + std::to_string(n) + "," + std::string(kind_name(kind)) + "]",
                           std::move(part));
            }
        }
        if (wants("nogo") && n <= kNogoMaxDegree) {
            add_scoped(report, "nogo[n=" + std::to_string(n) + "]", nogo_report(n, cfg.jobs));
        }
        if (wants("conjugacy") && n <= kConjugacyMaxDegree) {
            add_scoped(report, "conjugacy[n=" + std::to_string(n) + "]", conjugacy_report(n));
        }
    }
    return report;
}

struct GenerateConfig {
    std::vector<unsigned> ns;
    std::vector<TorusKind> kinds;
    std::string signs;
    std::string out;
    bool normalize = false;
    unsigned jobs = 1;
};

int run_generate(const GenerateConfig &cfg, std::ostream &out, std::ostream &err) {
    require_max_degree(cfg.ns, kGenerateMaxDegree, "generate");
    struct Item {
        unsigned n;
        TorusKind kind;
        SignSequence signs;
    };
    std::vector<Item> items;
    for (unsigned n : cfg.ns) {
        for (TorusKind kind : cfg.kinds) {
            if (n == 1 && kind == TorusKind::Split) {
                err << "warning: the split torus is trivial at n = 1; MUBs are emitted with T = {I}\n";
            }
            for (auto &s : parse_sign_list(cfg.signs, n)) {
                items.push_back({n, kind, std::move(s)});
            }
        }
    }
    const bool single_file = cfg.out.size() > 5 && cfg.out.ends_with(".json");
    if (single_file && items.size() != 1) {
        throw Error(ErrorKind::InvalidConfig,
                    "--out FILE.json takes exactly one (n, kind, signs) combination; use a directory for " +
                        std::to_string(items.size()));
    }
    if (cfg.out.empty()) {
        std::vector<json> docs;
        for (const auto &it : items) {
            MultiplierSpec spec = MultiplierSpec::make(it.n, it.kind, it.signs);
            docs.push_back(mub_json(build_mub_document(spec, cfg.normalize, cfg.jobs)));
        }
        out << single_or_array(std::move(docs)).dump(2) << "\n";
        return kExitPass;
    }
    if (single_file) {
        MultiplierSpec spec = MultiplierSpec::make(items[0].n, items[0].kind, items[0].signs);
        write_json_file(cfg.out, mub_json(build_mub_document(spec, cfg.normalize, cfg.jobs)));
        err << "wrote " << cfg.out << "\n";
        return kExitPass;
    }
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(cfg.out, ec);
    if (ec) {
        throw Error(ErrorKind::IoError, "cannot create directory '" + cfg.out + "': " + ec.message());
    }
    std::size_t written = 0;
    for (unsigned n : cfg.ns) {
        json fj = field_info_json(n);
        fj["type"] = "field";
        write_json_file((fs::path(cfg.out) / ("field_n" + std::to_string(n) + ".json")).string(), fj);
        written++;
    }
    for (const auto &it : items) {
        MultiplierSpec spec = MultiplierSpec::make(it.n, it.kind, it.signs);
        const std::string stem =
            "n" + std::to_string(it.n) + "_" + std::string(kind_name(it.kind)) + "_" + sign_slug(it.signs) + ".json";
        write_json_file((fs::path(cfg.out) / ("mub_" + stem)).string(),
                        mub_json(build_mub_document(spec, cfg.normalize, cfg.jobs)));
        written++;
        if (it.n <= kTableMaxDegree) {
            write_json_file((fs::path(cfg.out) / ("multiplier_" + stem)).string(), multiplier_json(spec));
            written++;
        }
    }
    err << "wrote " << written << " files to " << cfg.out << "\n";
    return kExitPass;
}

int emit_report(const Report &report, std::chrono::steady_clock::time_point start, bool timing,
                std::ostream &out, std::ostream &err) {
    json j = report.to_json();
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (timing) {
        j["wall_time_s"] = seconds;
    }
    out << j.dump(2) << "\n";
    err << (report.passed() ? "pass" : "FAIL") << ": " << report.checks.size() << " checks in " << seconds << " s\n";
    return report.passed() ? kExitPass : kExitCheckFailed;
}

}  // namespace

std::vector<unsigned> parse_degree_list(const std::string &text) {
    std::set<unsigned> out;
    for (const auto &part : split_commas(text)) {
        auto dash = part.find('-');
        if (dash == std::string::npos) {
            out.insert(parse_degree(part));
            continue;
        }
        unsigned lo = parse_degree(part.substr(0, dash));
        unsigned hi = parse_degree(part.substr(dash + 1));
        if (lo > hi) {
            throw Error(ErrorKind::InvalidConfig, "empty degree range '" + part + "'");
        }
        for (unsigned n = lo; n <= hi; n++) {
            out.insert(n);
        }
    }
    return {out.begin(), out.end()};
}

std::vector<TorusKind> parse_kind_list(const std::string &text) {
    if (text == "both") {
        return {TorusKind::Split, TorusKind::Nonsplit};
    }
    return {parse_kind(text)};
}

std::vector<SignSequence> parse_sign_list(const std::string &text, unsigned n) {
    if (text == "all") {
        return SignSequence::all(n);
    }
    std::vector<SignSequence> out;
    for (const auto &part : split_commas(text)) {
        SignSequence s = SignSequence::parse(part, n);
        if (std::find(out.begin(), out.end(), s) == out.end()) {
            out.push_back(std::move(s));
        }
    }
    return out;
}

Report nogo_report(unsigned n, unsigned jobs) {
    require_max_degree({n}, kNogoMaxDegree, "nogo");
    const Field &f = Field::get(n);
    struct Base {
        std::string name;
        MultiplierTable table;
    };
    std::vector<Base> bases;
    for (TorusKind kind : {TorusKind::Split, TorusKind::Nonsplit}) {
        MultiplierSpec spec = MultiplierSpec::make(n, kind, SignSequence::plus(n));
        bases.push_back({std::string(kind_name(kind)), to_standard(spec.table(), spec.change_of_basis())});
    }
    Report report;
    std::map<std::size_t, std::size_t> orders;
    for (const auto &sub : cyclic_subgroups(f)) {
        const std::size_t order = sub.elements.size();
        orders[order]++;
        for (const auto &base : bases) {
            CheckResult c{"order" + std::to_string(order) + "." + to_string(sub.generator) + "." + base.name};
            c.details["order"] = order;
            c.details["generator"] = symp_json(sub.generator);
            c.details["base_multiplier"] = base.name;
            c.checked = 1;
            MultiplierTable avg = average_multiplier(base.table, sub.elements);
            WeylCheckOptions opts;
            opts.jobs = jobs;
            Report weyl = check_weyl_multiplier(avg, opts);
            const CheckResult *m2 = nullptr;
            for (const auto &w : weyl.checks) {
                if (w.name == "M.2") {
                    m2 = &w;
                }
            }
            if (order % 2 == 1) {
                c.details["expectation"] = "invariant Weyl multiplier";
                CheckResult inv = check_invariance(avg, sub.elements, Frame::Standard, jobs);
                if (!weyl.passed()) {
                    for (const auto &w : weyl.checks) {
                        if (!w.passed) {
                            c.fail({{"reason", "averaged table is not a Weyl multiplier"}, {"check", w.to_json()}});
                            break;
                        }
                    }
                } else if (!inv.passed) {
                    c.fail({{"reason", "averaged table is not invariant"}, {"check", inv.to_json()}});
                }
                if (order == 1 && !(avg == base.table)) {
                    c.fail({{"reason", "trivial subgroup changed the table"}});
                }
            } else {
                c.details["expectation"] = "(M.2) violation";
                if (m2 == nullptr || m2->passed) {
                    c.fail({{"reason", "averaged table satisfies (M.2)"}});
                } else {
                    c.details["witness"] = m2->counterexample;
                }
            }
            report.add(c);
        }
    }
    CheckResult summary{"subgroup_orders"};
    summary.checked = 1;
    for (auto [order, count] : orders) {
        summary.details["orders"][std::to_string(order)] = count;
    }
    report.add(summary);
    return report;
}

Report conjugacy_report(unsigned n) {
    require_max_degree({n}, kConjugacyMaxDegree, "conjugacy");
    const Field &f = Field::get(n);
    CheckResult c{"conjugator"};
    std::map<Elem, std::map<std::string, std::uint64_t>> classes;
    for (const auto &A : enumerate_sl2(f)) {
        if (A.is_identity()) {
            continue;
        }
        c.checked++;
        const ElementClass cls = classify_element(f, A);
        classes[matrix_trace(A)][std::string(tag_name(cls.tag))]++;
        const SympMap U = conjugator(f, A);
        const SympMap C = companion(f, matrix_trace(A));
        if (det(f, U) != 1) {
            c.fail({{"element", symp_json(A)}, {"conjugator", symp_json(U)}, {"reason", "det != 1"}});
        } else if (!(compose(f, compose(f, U, C), inverse(f, U)) == A)) {
            c.fail({{"element", symp_json(A)}, {"conjugator", symp_json(U)}, {"reason", "U C U^-1 != A"}});
        }
    }
    c.details["elements"] = c.checked;
    for (const auto &[t, counts] : classes) {
        c.details["class_sizes"][std::to_string(t)] = counts;
    }
    const std::uint64_t q = f.size();
    if (c.checked != q * (q * q - 1) - 1) {
        c.fail({{"reason", "wrong number of non-identity elements"}, {"count", c.checked}});
    }
    Report r;
    r.add(c);
    return r;
}

CheckResult distinctness_check(unsigned n, TorusKind kind, const std::vector<SignSequence> &signs) {
    CheckResult c{"distinct_tables_and_keys"};
    std::vector<MultiplierTable> tables;
    std::vector<std::string> keys;
    for (const auto &s : signs) {
        MultiplierSpec spec = MultiplierSpec::make(n, kind, s);
        tables.push_back(spec.table());
        keys.push_back(equivalence_key(spec));
    }
    for (std::size_t i = 0; i < signs.size(); i++) {
        for (std::size_t j = i + 1; j < signs.size(); j++) {
            c.checked++;
            if (tables[i] == tables[j] || keys[i] == keys[j]) {
                c.fail({{"signs1", signs[i].str()}, {"signs2", signs[j].str()}});
            }
        }
    }
    c.details["sequences"] = signs.size();
    c.details["distinct_keys"] = std::set<std::string>(keys.begin(), keys.end()).size();
    return c;
}

CheckResult torus_action_check(unsigned n, TorusKind kind) {
    const Field &f = Field::get(n);
    const TorusSpec t = torus(kind, f);
    // Directions are acted on in standard coordinates.
    SympMap gen = t.generator;
    if (kind == TorusKind::Nonsplit) {
        gen = nonsplit_frame(f).companion_generator;
    }
    const auto perm = direction_permutation(f, gen);
    const auto cycles = cycle_type(perm);
    CheckResult c{"direction_action"};
    c.checked = 1;
    c.details["cycle_type"] = cycles;
    std::size_t fixed = 0;
    for (std::uint32_t k = 0; k < perm.size(); k++) {
        fixed += perm[k] == k;
    }
    c.details["fixed_directions"] = fixed;
    bool ok = true;
    if (kind == TorusKind::Nonsplit) {
        ok = cycles == std::vector<std::size_t>{f.size() + 1u};
    } else if (n >= 2) {
        ok = fixed == 2 && cycles.front() == f.size() - 1u && cycles.size() == 3;
    } else {
        ok = fixed == perm.size();
    }
    if (!ok) {
        c.fail({{"cycle_type", cycles}, {"fixed_directions", fixed}});
    }
    return c;
}

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Exact construction and verification of covariant stabilizer MUBs in dimension 2^n", "stabmub"};
    app.require_subcommand(1);

    std::string n_text = "1";
    std::string kind_text = "both";
    std::string signs_text = "all";
    std::string out_path;
    std::string suite_text;
    std::string element;
    std::vector<std::string> inputs;
    std::uint64_t seed = 0;
    unsigned jobs = default_jobs();
    bool normalize = false;
    bool timing = false;

    auto add_common = [&](CLI::App *cmd, bool with_signs) {
        cmd->add_option("--n", n_text, "degrees, e.g. 1,2 or 1-4");
        cmd->add_option("--kind", kind_text, "split, nonsplit or both");
        if (with_signs) {
            cmd->add_option("--signs", signs_text, "'all' or a comma-separated list such as +-,-+");
        }
        cmd->add_option("--jobs", jobs, "worker threads");
        cmd->add_flag("--timing", timing, "include wall time in the JSON output");
    };

    CLI::App *field = app.add_subcommand("field", "finite field data");
    field->require_subcommand(1);
    CLI::App *field_info = field->add_subcommand("info", "modulus, generators, self-dual basis");
    field_info->add_option("--n", n_text, "degrees");

    CLI::App *torus_cmd = app.add_subcommand("torus", "maximal tori");
    torus_cmd->require_subcommand(1);
    CLI::App *torus_show = torus_cmd->add_subcommand("show", "generator, order and direction action");
    torus_show->add_option("--n", n_text, "degrees");
    torus_show->add_option("--kind", kind_text, "split, nonsplit or both");

    CLI::App *mult = app.add_subcommand("multiplier", "Weyl multipliers");
    mult->require_subcommand(1);
    CLI::App *mult_table = mult->add_subcommand("table", "full table of g = log_i m");
    add_common(mult_table, true);

    CLI::App *generate = app.add_subcommand("generate", "write MUB, multiplier and field JSON");
    add_common(generate, true);
    generate->add_option("--out", out_path, "FILE.json for one MUB, or a directory");
    generate->add_flag("--normalize-phase", normalize, "make the first nonzero entry of every vector positive");

    CLI::App *verify = app.add_subcommand("verify", "verify files (--in) or a configuration");
    add_common(verify, true);
    verify->add_option("--in", inputs, "JSON files written by generate");
    verify->add_option("--suite", suite_text, "comma-separated subset of multiplier,quadrature,covariance,"
                                              "appendix,distinctness,nogo,conjugacy");
    verify->add_option("--seed", seed, "seed for sampled sweeps");
    verify->add_option("--element", element, "covariance against one SL(2, F) element a,b,c,d");

    CLI::App *nogo = app.add_subcommand("nogo", "averaging over every cyclic subgroup, n <= 2");
    nogo->add_option("--n", n_text, "degrees");
    nogo->add_option("--jobs", jobs, "worker threads");
    nogo->add_flag("--timing", timing, "include wall time in the JSON output");

    CLI::App *conj = app.add_subcommand("conjugacy", "conjugator sweep over SL(2, F), n <= 3");
    conj->add_option("--n", n_text, "degrees");
    conj->add_flag("--timing", timing, "include wall time in the JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e, out, err) == 0 ? kExitPass : kExitUsage;
    }

    const auto start = std::chrono::steady_clock::now();
    try {
        jobs = std::max(1u, jobs);
        const auto ns = parse_degree_list(n_text);
        if (*field_info) {
            std::vector<json> items;
            for (unsigned n : ns) {
                items.push_back(field_info_json(n));
            }
            out << single_or_array(std::move(items)).dump(2) << "\n";
            return kExitPass;
        }
        const auto kinds = parse_kind_list(kind_text);
        if (*torus_show) {
            std::vector<json> items;
            for (unsigned n : ns) {
                const Field &f = Field::get(n);
                for (TorusKind kind : kinds) {
                    json j = torus_json(torus(kind, f), f);
                    j["n"] = n;
                    if (kind == TorusKind::Nonsplit) {
                        const NonsplitFrame fr = nonsplit_frame(f);
                        j["standard_generator"] = symp_json(fr.companion_generator);
                        j["change_of_basis"] = symp_json(fr.change_of_basis);
                        j["direction_cycle_type"] = cycle_type(direction_permutation(f, fr.companion_generator));
                    }
                    items.push_back(std::move(j));
                }
            }
            out << single_or_array(std::move(items)).dump(2) << "\n";
            return kExitPass;
        }
        if (*mult_table) {
            require_max_degree(ns, kTableMaxDegree, "multiplier table");
            std::vector<json> items;
            for (unsigned n : ns) {
                for (TorusKind kind : kinds) {
                    for (const auto &s : parse_sign_list(signs_text, n)) {
                        items.push_back(multiplier_json(MultiplierSpec::make(n, kind, s)));
                    }
                }
            }
            out << single_or_array(std::move(items)).dump() << "\n";
            return kExitPass;
        }
        if (*generate) {
            return run_generate({ns, kinds, signs_text, out_path, normalize, jobs}, out, err);
        }
        if (*verify) {
            if (!inputs.empty()) {
                Report report;
                for (const auto &path : inputs) {
                    add_scoped(report, path, verify_file(path, seed, jobs), ":");
                }
                return emit_report(report, start, timing, out, err);
            }
            VerifyConfig cfg{ns, kinds, signs_text, {}, !suite_text.empty(), seed, jobs, element};
            if (suite_text.empty()) {
                cfg.suites.insert(kAllSuites.begin(), kAllSuites.end());
            } else {
                for (const auto &s : split_commas(suite_text)) {
                    if (std::find(kAllSuites.begin(), kAllSuites.end(), s) == kAllSuites.end()) {
                        throw Error(ErrorKind::InvalidConfig, "unknown suite '" + s + "'");
                    }
                    cfg.suites.insert(s);
                }
            }
            if (!element.empty() && suite_text.empty()) {
                cfg.suites.clear();
            }
            return emit_report(run_verify_config(cfg), start, timing, out, err);
        }
        if (*nogo) {
            Report report;
            for (unsigned n : ns) {
                add_scoped(report, "nogo[n=" + std::to_string(n) + "]", nogo_report(n, jobs));
            }
            return emit_report(report, start, timing, out, err);
        }
        if (*conj) {
            Report report;
            for (unsigned n : ns) {
                add_scoped(report, "conjugacy[n=" + std::to_string(n) + "]", conjugacy_report(n));
            }
            return emit_report(report, start, timing, out, err);
        }
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        if (e.kind() == ErrorKind::IoError || e.kind() == ErrorKind::ParseError) {
            return kExitIo;
        }
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace stabmub
