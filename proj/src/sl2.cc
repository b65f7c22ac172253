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

#include "stabmub/sl2.h"

#include <algorithm>

#include "stabmub/error.h"

namespace stabmub {

std::string_view tag_name(ElementTag tag) {
    switch (tag) {
        case ElementTag::Identity:
            return "identity";
        case ElementTag::Split:
            return "split";
        case ElementTag::Nonsplit:
            return "nonsplit";
        case ElementTag::Unipotent:
            return "unipotent";
    }
    return "?";
}

ElementClass classify_element(const Field &f, const SympMap &A) {
    if (det(f, A) != 1) {
        throw Error(ErrorKind::InvalidConfig, "matrix " + to_string(A) + " does not have determinant 1");
    }
    if (A.is_identity()) {
        return {ElementTag::Identity, std::nullopt};
    }
    const ExtField &ext = ExtField::of(f);
    const Elem t = matrix_trace(A);
    if (t == 0) {
        return {ElementTag::Unipotent, std::make_pair(ext.embed(1), ext.embed(1))};
    }
    for (Elem x = 1; x < f.size(); x++) {
        if ((f.square(x) ^ f.mul(t, x) ^ 1) == 0) {
            return {ElementTag::Split, std::make_pair(ext.embed(x), ext.embed(f.inv(x)))};
        }
    }
    const ExtElement te = ext.embed(t);
    const ExtElement one = ext.embed(1);
    for (std::uint64_t idx = 0; idx < ext.size(); idx++) {
        ExtElement x = ext.from_index(idx);
        if (x * x + te * x + one == ext.embed(0)) {
            return {ElementTag::Nonsplit, std::make_pair(x, x.conj())};
        }
    }
    throw Error(ErrorKind::NotFound, "characteristic polynomial of " + to_string(A) + " has no root");
}

SympMap companion(const Field &f, Elem trace) {
    if (!f.contains(trace)) {
        throw Error(ErrorKind::InvalidConfig, "trace outside the field");
    }
    return {trace, 1, 1, 0};
}

SympMap conjugator(const Field &f, const SympMap &A) {
    if (A.is_identity()) {
        throw Error(ErrorKind::IdentityInput, "the identity is conjugate only to itself");
    }
    if (A.b != 0) {
        Elem s = f.sqrt(A.b);
        Elem si = f.inv(s);
        return {0, s, si, f.mul(A.a, si)};
    }
    if (A.c != 0) {
        Elem s = f.sqrt(A.c);
        Elem si = f.inv(s);
        return {si, f.mul(A.d, si), 0, s};
    }
    Elem k = f.inv(1 ^ A.a);
    return {f.mul(k, A.a), k, k, f.mul(k, A.a)};
}

std::string_view kind_name(TorusKind kind) {
    return kind == TorusKind::Split ? "split" : "nonsplit";
}

TorusKind parse_kind(std::string_view text) {
    if (text == "split") {
        return TorusKind::Split;
    }
    if (text == "nonsplit") {
        return TorusKind::Nonsplit;
    }
    throw Error(ErrorKind::InvalidConfig, "torus kind must be 'split' or 'nonsplit', got '" + std::string(text) + "'");
}

NonsplitFrame nonsplit_frame(const Field &f) {
    const ExtField &ext = ExtField::of(f);
    const ExtElement one = ext.embed(1);
    const ExtElement xi = ext.norm_one_generator();
    const Elem t = (xi + xi.conj()).base_value().bits();
    const ExtElement scale = ext.embed(f.inv(f.sqrt(t)));
    const std::array<ExtElement, 2> e{xi * scale, scale};
    const std::array<ExtElement, 2> e_bar{e[0].conj(), e[1].conj()};
    const ExtElement eps = (xi + one).inv().sqrt();
    const ExtElement eps_bar = eps.conj();

    auto real_part = [&](const ExtElement &x, const ExtElement &y, int k) {
        ExtElement v = x * e[k] + y * e_bar[k];
        if (!v.in_base()) {
            throw Error(ErrorKind::DegenerateFrame, "frame vector has a coordinate outside the base field");
        }
        return v.a();
    };
    PhaseVec e1{real_part(eps_bar, eps, 0), real_part(eps_bar, eps, 1)};
    PhaseVec e2{real_part(eps, eps_bar, 0), real_part(eps, eps_bar, 1)};
    SympMap P{e1.a, e2.a, e1.b, e2.b};
    if (det(f, P) != 1 || symplectic_form(f, e1, e2) != 1) {
        throw Error(ErrorKind::DegenerateFrame, "frame basis is not symplectic");
    }
    const SympMap Pi = inverse(f, P);
    const SympMap Ac = companion(f, t);

    NonsplitFrame out{
        xi,
        eps,
        eps * eps,
        (eps * eps_bar).base_value().bits(),
        e,
        {ext.embed(Pi.a) * e[0] + ext.embed(Pi.b) * e[1], ext.embed(Pi.c) * e[0] + ext.embed(Pi.d) * e[1]},
        e1,
        e2,
        P,
        Ac,
        compose(f, Pi, compose(f, Ac, P)),
    };
    if (out.e_in_frame[0] != eps_bar || out.e_in_frame[1] != eps) {
        throw Error(ErrorKind::DegenerateFrame, "eigenvector does not have frame coordinates (conj(eps), eps)");
    }
    if (out.eps_sq + out.eps_sq.conj() != one) {
        throw Error(ErrorKind::DegenerateFrame, "eps^2 + conj(eps)^2 != 1");
    }
    return out;
}

std::vector<SympMap> TorusSpec::elements(const Field &f) const {
    std::vector<SympMap> out;
    out.reserve(order);
    SympMap x = SympMap::identity();
    for (std::uint64_t k = 0; k < order; k++) {
        out.push_back(x);
        x = compose(f, x, generator);
    }
    return out;
}

bool TorusSpec::contains(const Field &f, const SympMap &A) const {
    auto els = elements(f);
    return std::find(els.begin(), els.end(), A) != els.end();
}

TorusSpec torus(TorusKind kind, const Field &f) {
    const ExtField &ext = ExtField::of(f);
    if (kind == TorusKind::Split) {
        Elem xi = f.multiplicative_generator();
        return {kind, Frame::Standard, {xi, 0, 0, f.inv(xi)}, ext.embed(xi), f.size() - 1u};
    }
    NonsplitFrame frame = nonsplit_frame(f);
    return {kind, Frame::NonsplitEigen, frame.generator, frame.xi, f.size() + 1u};
}

}  // namespace stabmub
