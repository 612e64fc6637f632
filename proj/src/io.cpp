// Copyright 2026 The bargmann-phase Authors
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

#include "bargmann/io.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace bargmann {

using nlohmann::json;

namespace {

json complex_to_json(complex z) {
    return json::array({z.real(), z.imag()});
}

complex complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) {
        throw std::invalid_argument("expected [re, im]");
    }
    return {j.at(0).get<double>(), j.at(1).get<double>()};
}

json point_to_json(const TwoModePoint& pt) {
    return json::array({pt[0].q, pt[0].p, pt[1].q, pt[1].p});
}

TwoModePoint point_from_json(const json& j) {
    if (!j.is_array() || j.size() != 4) {
        throw std::invalid_argument("expected [q1, p1, q2, p2]");
    }
    return {PhaseSpacePoint{j.at(0).get<double>(), j.at(1).get<double>()},
            PhaseSpacePoint{j.at(2).get<double>(), j.at(3).get<double>()}};
}

void check_schema(const json& doc, const char* kind) {
    if (!doc.is_object() || doc.value("schema", "") != kSchemaVersion) {
        throw std::invalid_argument(std::string("document is not a ") + kSchemaVersion + " document");
    }
    if (doc.value("kind", "") != kind) {
        throw std::invalid_argument(std::string("expected a \"") + kind + "\" document");
    }
}

json optional_number(const std::optional<double>& v) {
    return v ? json(*v) : json(nullptr);
}

}  // namespace

std::string format_number(double value) {
    if (std::isnan(value)) {
        return "nan";
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.11e", value);
    return buf;
}

std::string format_number(const std::optional<double>& value) {
    return value ? format_number(*value) : std::string("nan");
}

json pfunc_to_json(const QuasiProbability& p, const std::optional<PFunctionSource>& source) {
    json doc;
    doc["schema"] = kSchemaVersion;
    doc["kind"] = "pfunc";
    if (source) {
        doc["state"] = {{"n1", source->occupation.n1},
                        {"n2", source->occupation.n2},
                        {"shift", point_to_json(source->shift)}};
    }
    doc["norm_constant"] = p.norm_constant();
    doc["envelope"] = {{"enabled", p.envelope()}, {"center", point_to_json(p.envelope_center())}};
    json terms = json::array();
    for (const auto& t : p.terms()) {
        terms.push_back({{"coeff", complex_to_json(t.coeff)},
                         {"center", point_to_json({t.center1, t.center2})},
                         {"orders", t.orders}});
    }
    doc["terms"] = std::move(terms);
    return doc;
}

QuasiProbability pfunc_from_json(const json& doc) {
    check_schema(doc, "pfunc");
    try {
        std::vector<DeltaDerivativeTerm> terms;
        for (const auto& t : doc.at("terms")) {
            const TwoModePoint c = point_from_json(t.at("center"));
            const auto orders = t.at("orders").get<std::array<int, 4>>();
            terms.push_back(DeltaDerivativeTerm{complex_from_json(t.at("coeff")), c[0], c[1], orders});
        }
        const auto& env = doc.at("envelope");
        return QuasiProbability(std::move(terms), env.at("enabled").get<bool>(), point_from_json(env.at("center")),
                                doc.at("norm_constant").get<double>());
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed pfunc document: ") + e.what());
    }
}

std::optional<PFunctionSource> pfunc_source_from_json(const json& doc) {
    check_schema(doc, "pfunc");
    if (!doc.contains("state")) {
        return std::nullopt;
    }
    try {
        const auto& s = doc.at("state");
        return PFunctionSource{Occupation{s.at("n1").get<int>(), s.at("n2").get<int>()},
                               point_from_json(s.at("shift"))};
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed pfunc state: ") + e.what());
    }
}

json operator_to_json(const TruncatedOperator& op) {
    json doc;
    doc["schema"] = kSchemaVersion;
    doc["kind"] = "operator";
    doc["n_max"] = op.dim().n_max();
    doc["layout"] = "row-major over (n1, n2): index = n1 * (n_max + 1) + n2";
    json rows = json::array();
    const auto& m = op.matrix();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            row.push_back(complex_to_json(m(r, c)));
        }
        rows.push_back(std::move(row));
    }
    doc["entries"] = std::move(rows);
    return doc;
}

TruncatedOperator operator_from_json(const json& doc) {
    check_schema(doc, "operator");
    try {
        const TruncationDim dim(doc.at("n_max").get<int>());
        const auto& rows = doc.at("entries");
        if (Eigen::Index(rows.size()) != dim.size()) {
            throw std::invalid_argument("operator row count does not match n_max");
        }
        FockMatrix m(dim.size(), dim.size());
        for (Eigen::Index r = 0; r < dim.size(); ++r) {
            const auto& row = rows.at(std::size_t(r));
            if (Eigen::Index(row.size()) != dim.size()) {
                throw std::invalid_argument("operator column count does not match n_max");
            }
            for (Eigen::Index c = 0; c < dim.size(); ++c) {
                m(r, c) = complex_from_json(row.at(std::size_t(c)));
            }
        }
        return TruncatedOperator(dim, std::move(m));
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed operator document: ") + e.what());
    }
}

json phase_result_to_json(const PhaseResult& r) {
    return {{"method", std::string(method_name(r.method))},
            {"invariant", complex_to_json(r.invariant)},
            {"phase", optional_number(r.phase)}};
}

json report_to_json(const ReconciliationReport& report) {
    json doc;
    doc["schema"] = kSchemaVersion;
    doc["kind"] = "phase";
    json results = json::array();
    for (const auto& r : report.results) {
        results.push_back(phase_result_to_json(r));
    }
    doc["results"] = std::move(results);
    json deltas = json::array();
    for (const auto& d : report.deltas) {
        deltas.push_back({{"a", std::string(method_name(d.a))},
                          {"b", std::string(method_name(d.b))},
                          {"abs_delta", optional_number(d.phase_delta)},
                          {"gated", d.gated}});
    }
    doc["deltas"] = std::move(deltas);
    json gated = json::array();
    for (Method m : report.gated) {
        gated.push_back(std::string(method_name(m)));
    }
    doc["gated"] = std::move(gated);
    doc["abs_delta_max"] = report.abs_delta_max;
    doc["invariant_rel_delta"] = report.invariant_rel_delta;
    doc["flag"] = report.flag;
    doc["passed"] = report.passed;
    if (report.triangle) {
        const auto& t = *report.triangle;
        doc["triangle"] = {{"vertex_a", point_to_json(t.vertex_a)},
                           {"vertex_b", point_to_json(t.vertex_b)},
                           {"vertex_c", point_to_json(t.vertex_c)},
                           {"occupation", {t.occupation.n1, t.occupation.n2}}};
    }
    if (report.printed_terms) {
        const auto& p = *report.printed_terms;
        doc["printed_terms"] = {{"X1", p.X1}, {"Y1", p.Y1}, {"X2", p.X2}, {"Y2", p.Y2},
                                {"symplectic_sum", p.symplectic_sum}};
    }
    if (report.vertex_model) {
        doc["diagnostics"]["vertex_model"] = phase_result_to_json(*report.vertex_model);
    }
    if (report.vertex_model_origin_envelope) {
        doc["diagnostics"]["vertex_model_origin_envelope"] = phase_result_to_json(*report.vertex_model_origin_envelope);
    }
    return doc;
}

std::string sweep_csv_row(double theta1, double theta2, const ReconciliationReport& report) {
    auto phase_of = [&](Method m) -> std::optional<double> {
        const PhaseResult* r = report.find(m);
        return r ? r->phase : std::nullopt;
    };
    std::string row = format_number(theta1);
    row += "," + format_number(theta2);
    row += "," + format_number(phase_of(Method::fock_oracle));
    row += "," + format_number(phase_of(Method::phase_space_pairing));
    row += "," + format_number(phase_of(Method::printed_closed_form));
    row += "," + format_number(report.abs_delta_max);
    row += "," + report.flag;
    return row;
}

}  // namespace bargmann
