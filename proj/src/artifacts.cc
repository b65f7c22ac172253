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

#include "stabmub/artifacts.h"

#include <fstream>
#include <random>
#include <sstream>

#include "stabmub/error.h"
#include "stabmub/parallel.h"

namespace stabmub {

namespace {

json exact_int_json(const ExactInt &x) {
    if (auto v = x.to_int64()) {
        return *v;
    }
    return x.str();
}

ExactInt parse_exact_int(const json &j) {
    if (j.is_number_integer()) {
        return ExactInt(j.get<std::int64_t>());
    }
    if (j.is_string()) {
        return ExactInt::parse(j.get<std::string>());
    }
    throw Error(ErrorKind::ParseError, "numerator must be an integer or a decimal string");
}

Elem parse_elem(const json &j, const Field &f, const char *what) {
    if (!j.is_number_unsigned() || j.get<std::uint64_t>() >= f.size()) {
        throw Error(ErrorKind::ParseError, std::string(what) + " must be a field element of GF(2^" +
                                               std::to_string(f.degree()) + ")");
    }
    return static_cast<Elem>(j.get<std::uint64_t>());
}

const json &require(const json &j, const char *key) {
    if (!j.is_object() || !j.contains(key)) {
        throw Error(ErrorKind::ParseError, std::string("missing key '") + key + "'");
    }
    return j.at(key);
}

}  // namespace

json field_json(const Field &f) {
    return {{"n", f.degree()}, {"modulus_bits", f.modulus()}};
}

json symp_json(const SympMap &m) {
    return {{"a", m.a}, {"b", m.b}, {"c", m.c}, {"d", m.d}};
}

json vec_json(PhaseVec v) {
    return json::array({v.a, v.b});
}

json line_json(const Line &l) {
    return {{"dir", vec_json(l.dir.rep)}, {"off", vec_json(l.off)}};
}

json torus_json(const TorusSpec &t, const Field &f) {
    json out = {{"kind", kind_name(t.kind)},
                {"frame", t.frame == Frame::Standard ? "standard" : "nonsplit_eigen"},
                {"generator", symp_json(t.generator)},
                {"order", t.order},
                {"xi", json::array({t.xi.a(), t.xi.b()})}};
    json cycles = json::array();
    for (auto c : cycle_type(direction_permutation(f, t.generator))) {
        cycles.push_back(c);
    }
    out["direction_cycle_type"] = cycles;
    return out;
}

json gaussian_json(const GaussianDyadic &z) {
    return json::array({exact_int_json(z.re_num()), exact_int_json(z.im_num()), z.log2_den()});
}

GaussianDyadic parse_gaussian(const json &j) {
    if (!j.is_array() || j.size() != 3 || !j[2].is_number_unsigned()) {
        throw Error(ErrorKind::ParseError, "entry must be [re_num, im_num, log2_den]");
    }
    GaussianDyadic z(GaussianInt{parse_exact_int(j[0]), parse_exact_int(j[1])}, j[2].get<unsigned>());
    return z;
}

SympMap parse_symp(const json &j, const Field &f) {
    return {parse_elem(require(j, "a"), f, "a"), parse_elem(require(j, "b"), f, "b"),
            parse_elem(require(j, "c"), f, "c"), parse_elem(require(j, "d"), f, "d")};
}

SympMap parse_symp(const std::string &text, const Field &f) {
    std::vector<std::uint64_t> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            parts.push_back(std::stoull(item, &used));
            if (used != item.size()) {
                throw std::invalid_argument(item);
            }
        } catch (const std::exception &) {
            throw Error(ErrorKind::InvalidConfig, "element must be 'a,b,c,d', got '" + text + "'");
        }
    }
    if (parts.size() != 4) {
        throw Error(ErrorKind::InvalidConfig, "element must be 'a,b,c,d', got '" + text + "'");
    }
    for (auto p : parts) {
        if (p >= f.size()) {
            throw Error(ErrorKind::InvalidConfig, "matrix entry " + std::to_string(p) + " outside the field");
        }
    }
    return {static_cast<Elem>(parts[0]), static_cast<Elem>(parts[1]), static_cast<Elem>(parts[2]),
            static_cast<Elem>(parts[3])};
}

json multiplier_json(const MultiplierSpec &spec) {
    const Field &f = spec.field();
    MultiplierTable t = spec.table();
    json g = json::array();
    for (Z4 z : t.g) {
        g.push_back(z.value());
    }
    json basis = json::array();
    for (Elem w : spec.basis().omegas()) {
        basis.push_back(w);
    }
    return {{"type", "multiplier"},
            {"n", f.degree()},
            {"modulus_bits", f.modulus()},
            {"kind", kind_name(spec.kind())},
            {"signs", spec.signs().r},
            {"frame", spec.frame() == Frame::Standard ? "standard" : "nonsplit_eigen"},
            {"change_of_basis", symp_json(spec.change_of_basis())},
            {"basis", basis},
            {"g", g}};
}

MubDocument build_mub_document(const MultiplierSpec &spec, bool normalize_phase, unsigned jobs) {
    const Field &f = spec.field();
    WeylSystem w(spec);
    MubDocument doc{f.degree(), spec.kind(), spec.signs(), normalize_phase, {}};
    const auto lines = enumerate_lines(f);
    std::vector<ExactVector> vectors(lines.size());
    parallel_for(lines.size(), jobs, [&](std::uint64_t k) {
        ExactVector v = mub_vector(w, lines[k]);
        vectors[k] = normalize_phase ? stabmub::normalize_phase(v) : std::move(v);
    });
    doc.bases.resize(f.size() + 1);
    for (std::size_t k = 0; k < lines.size(); k++) {
        doc.bases[k / f.size()].push_back(std::move(vectors[k]));
    }
    return doc;
}

json mub_json(const MubDocument &doc) {
    json bases = json::array();
    for (const auto &basis : doc.bases) {
        json b = json::array();
        for (const auto &v : basis) {
            json vec = json::array();
            for (const auto &z : v) {
                vec.push_back(gaussian_json(z));
            }
            b.push_back(std::move(vec));
        }
        bases.push_back(std::move(b));
    }
    const Field &f = Field::get(doc.n);
    return {{"type", "mub"},
            {"n", doc.n},
            {"modulus_bits", f.modulus()},
            {"kind", kind_name(doc.kind)},
            {"signs", doc.signs.r},
            {"normalize_phase", doc.normalize_phase},
            {"bases", std::move(bases)}};
}

MubDocument parse_mub(const json &j) {
    MubDocument doc;
    const json &n = require(j, "n");
    if (!n.is_number_unsigned() || n.get<std::uint64_t>() < 1 || n.get<std::uint64_t>() > kMaxDegree) {
        throw Error(ErrorKind::ParseError, "'n' must be an integer in [1, 16]");
    }
    doc.n = n.get<unsigned>();
    if (j.contains("modulus_bits") && j.at("modulus_bits") != Field::get(doc.n).modulus()) {
        throw Error(ErrorKind::ParseError, "'modulus_bits' differs from the fixed modulus for n = " +
                                               std::to_string(doc.n));
    }
    const json &kind = require(j, "kind");
    if (!kind.is_string()) {
        throw Error(ErrorKind::ParseError, "'kind' must be a string");
    }
    try {
        doc.kind = parse_kind(kind.get<std::string>());
    } catch (const Error &e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
    const json &signs = require(j, "signs");
    if (!signs.is_array()) {
        throw Error(ErrorKind::ParseError, "'signs' must be an array");
    }
    for (const auto &s : signs) {
        if (!s.is_number_integer() || (s.get<int>() != 1 && s.get<int>() != -1)) {
            throw Error(ErrorKind::ParseError, "'signs' entries must be 1 or -1");
        }
        doc.signs.r.push_back(s.get<int>());
    }
    if (j.contains("normalize_phase")) {
        if (!j.at("normalize_phase").is_boolean()) {
            throw Error(ErrorKind::ParseError, "'normalize_phase' must be a boolean");
        }
        doc.normalize_phase = j.at("normalize_phase").get<bool>();
    }
    const json &bases = require(j, "bases");
    if (!bases.is_array()) {
        throw Error(ErrorKind::ParseError, "'bases' must be an array");
    }
    for (const auto &b : bases) {
        if (!b.is_array()) {
            throw Error(ErrorKind::ParseError, "each basis must be an array of vectors");
        }
        std::vector<ExactVector> basis;
        for (const auto &v : b) {
            if (!v.is_array()) {
                throw Error(ErrorKind::ParseError, "each vector must be an array of entries");
            }
            ExactVector vec;
            for (const auto &z : v) {
                vec.push_back(parse_gaussian(z));
            }
            basis.push_back(std::move(vec));
        }
        doc.bases.push_back(std::move(basis));
    }
    return doc;
}

Report verify_mub_document(const MubDocument &doc, const FileVerifyOptions &opts) {
    Report report;
    CheckResult shape{"file.shape"};
    shape.checked = 1;
    if (doc.n < 1 || doc.n > 8) {
        shape.fail({{"reason", "n must be in [1, 8]"}, {"n", doc.n}});
        report.add(shape);
        return report;
    }
    const Field &f = Field::get(doc.n);
    const std::size_t q = f.size();
    if (doc.signs.r.size() != doc.n) {
        shape.fail({{"reason", "sign sequence length differs from n"}});
    } else if (doc.bases.size() != q + 1) {
        shape.fail({{"reason", "expected |F| + 1 bases"}, {"bases", doc.bases.size()}});
    } else {
        for (std::size_t b = 0; b < doc.bases.size() && shape.passed; b++) {
            if (doc.bases[b].size() != q) {
                shape.fail({{"reason", "expected |F| vectors per basis"}, {"basis", b}});
            }
            for (std::size_t k = 0; k < doc.bases[b].size() && shape.passed; k++) {
                if (doc.bases[b][k].size() != q) {
                    shape.fail({{"reason", "vector has the wrong dimension"}, {"basis", b}, {"vector", k}});
                }
            }
        }
    }
    report.add(shape);
    if (!shape.passed) {
        return report;
    }

    const auto lines = enumerate_lines(f);
    std::vector<const ExactVector *> stored(lines.size());
    for (std::size_t k = 0; k < lines.size(); k++) {
        stored[k] = &doc.bases[k / q][k % q];
    }

    MultiplierSpec spec = MultiplierSpec::make(doc.n, doc.kind, doc.signs);
    WeylSystem w(spec);
    CheckResult matches{"file.matches_construction"};
    for (std::size_t k = 0; k < lines.size(); k++) {
        ExactVector expected = mub_vector(w, lines[k]);
        if (doc.normalize_phase) {
            expected = normalize_phase(expected);
        }
        matches.checked++;
        if (!(expected == *stored[k])) {
            std::size_t entry = 0;
            while (entry < q && expected[entry] == (*stored[k])[entry]) {
                entry++;
            }
            matches.fail({{"line", line_json(lines[k])},
                          {"line_index", k},
                          {"entry", entry},
                          {"stored", gaussian_json((*stored[k])[entry])},
                          {"expected", gaussian_json(expected[entry])}});
        }
    }
    report.add(matches);

    // Exact unbiasedness: <v, w> = 0 within a basis, and |<v, w>|^2 |F| = <v, v> <w, w> across bases.
    std::vector<GaussianDyadic> norms(lines.size());
    for (std::size_t k = 0; k < lines.size(); k++) {
        norms[k] = inner(*stored[k], *stored[k]);
    }
    const GaussianDyadic dim(static_cast<std::int64_t>(q));
    auto pair_fails = [&](std::size_t i, std::size_t j) {
        GaussianDyadic ip = inner(*stored[i], *stored[j]);
        if (i / q == j / q) {
            return !ip.is_zero();
        }
        return !(ip.norm() * dim == norms[i] * norms[j]);
    };
    CheckResult overlaps{"file.overlaps"};
    const std::uint64_t L = lines.size();
    for (std::size_t k = 0; k < lines.size(); k++) {
        if (norms[k].is_zero()) {
            overlaps.fail({{"line", line_json(lines[k])}, {"reason", "zero vector"}});
        }
    }
    auto pair_witness = [&](std::size_t i, std::size_t j) {
        return json{{"line1", line_json(lines[i])},
                    {"line2", line_json(lines[j])},
                    {"inner", gaussian_json(inner(*stored[i], *stored[j]))}};
    };
    if (doc.n <= kDenseVerifyMaxDegree) {
        overlaps.details["mode"] = "exhaustive";
        auto first = find_first_failure(L * L, opts.jobs, [&](std::uint64_t t) {
            return t / L != t % L && pair_fails(t / L, t % L);
        });
        overlaps.checked = L * (L - 1);
        if (first) {
            overlaps.fail(pair_witness(*first / L, *first % L));
        }
    } else {
        overlaps.details["mode"] = "sampled";
        overlaps.details["seed"] = opts.seed;
        std::mt19937_64 rng(opts.seed);
        for (std::uint64_t s = 0; s < opts.overlap_samples && overlaps.passed; s++) {
            std::size_t i = rng() % L;
            std::size_t j = rng() % L;
            if (i == j) {
                continue;
            }
            overlaps.checked++;
            if (pair_fails(i, j)) {
                overlaps.fail(pair_witness(i, j));
            }
        }
    }
    report.add(overlaps);

    if (doc.n <= kDenseVerifyMaxDegree) {
        QuadratureSystem reference = build_quadrature(spec, opts.jobs);
        QuadratureSystem rebuilt{spec, w, {}};
        CheckResult proj{"file.projections_match"};
        for (std::size_t k = 0; k < lines.size(); k++) {
            auto P = projector(*stored[k]);
            proj.checked++;
            if (!P) {
                proj.fail({{"line", line_json(lines[k])}, {"reason", "norm is not a power of two"}});
                rebuilt.projections.push_back(OperatorMatrix(q));
                continue;
            }
            if (!(*P == reference.projections[k])) {
                proj.fail({{"line", line_json(lines[k])}, {"line_index", k}});
            }
            rebuilt.projections.push_back(std::move(*P));
        }
        report.add(proj);
        Report def = verify_definition(rebuilt, opts.jobs);
        for (auto &c : def.checks) {
            c.name = "file." + c.name;
            report.add(c);
        }
    }
    return report;
}

json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::IoError, "cannot open '" + path + "' for reading");
    }
    try {
        return json::parse(in);
    } catch (const json::exception &e) {
        throw Error(ErrorKind::ParseError, "'" + path + "': " + e.what());
    }
}

void write_json_file(const std::string &path, const json &j) {
    std::ofstream out(path);
    if (!out) {
        throw Error(ErrorKind::IoError, "cannot open '" + path + "' for writing");
    }
    out << j.dump(2) << "\n";
    if (!out) {
        throw Error(ErrorKind::IoError, "write to '" + path + "' failed");
    }
}

}  // namespace stabmub
