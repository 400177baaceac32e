// Copyright 2026 The seqmeas Authors
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

#include "seqmeas/report_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace seqmeas::io {

namespace {

using json = nlohmann::ordered_json;

std::string cell(const std::optional<double>& v) { return v ? format_real(*v) : std::string(); }

json jcell(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::optional<double> jread(const json& j) {
    if (j.is_null()) return std::nullopt;
    return j.get<double>();
}

std::string join(const std::vector<std::string>& cells) {
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) line += ',';
        line += cells[i];
    }
    line += '\n';
    return line;
}

std::vector<std::string> sweep_cells(const SweepRow& r) {
    std::vector<std::string> c{format_real(r.theta_deg), format_real(r.p_error)};
    for (double p : r.probs.probs) c.push_back(format_real(p));
    for (const auto& a : r.a_opt_m1) c.push_back(cell(a));
    for (const auto& a : r.a_opt_m1m2) c.push_back(cell(a));
    c.push_back(cell(r.eps_sq_eigen));
    c.push_back(cell(r.eps_sq_opt_m1));
    c.push_back(cell(r.eps_sq_opt_m1m2));
    return c;
}

const std::vector<std::string>& lgi_columns() {
    static const std::vector<std::string> cols{"theta_deg",   "q_plus_pp",  "q_plus_pm",  "q_plus_mp",
                                               "q_plus_mm",   "q_minus_pp", "q_minus_pm", "q_minus_mp",
                                               "q_minus_mm",  "min_entry",  "negative"};
    return cols;
}

const std::vector<std::string>& reconstruction_columns() {
    static const std::vector<std::string> cols{"outcome", "p_psi", "p_plus", "p_minus",
                                               "corr_reconstructed", "corr_direct", "aopt"};
    return cols;
}

}  // namespace

const std::vector<std::string>& sweep_columns() {
    static const std::vector<std::string> cols{
        "theta_deg", "p_error", "p_pp",     "p_pm",     "p_mp",     "p_mm",      "aopt_m1_plus", "aopt_m1_minus",
        "aopt_pp",   "aopt_pm", "aopt_mp",  "aopt_mm",  "eps_eigen", "eps_opt_m1", "eps_opt_m1m2"};
    return cols;
}

std::string format_real(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::string out = join(sweep_columns());
    for (const auto& r : rows) out += join(sweep_cells(r));
    return out;
}

std::string sweep_json(const std::vector<SweepRow>& rows) {
    json arr = json::array();
    const auto& cols = sweep_columns();
    for (const auto& r : rows) {
        json o = json::object();
        o[cols[0]] = r.theta_deg;
        o[cols[1]] = r.p_error;
        for (std::size_t i = 0; i < 4; ++i) o[cols[2 + i]] = r.probs.probs[i];
        for (std::size_t i = 0; i < 2; ++i) o[cols[6 + i]] = jcell(r.a_opt_m1[i]);
        for (std::size_t i = 0; i < 4; ++i) o[cols[8 + i]] = jcell(r.a_opt_m1m2[i]);
        o[cols[12]] = jcell(r.eps_sq_eigen);
        o[cols[13]] = jcell(r.eps_sq_opt_m1);
        o[cols[14]] = jcell(r.eps_sq_opt_m1m2);
        arr.push_back(std::move(o));
    }
    return arr.dump(2) + "\n";
}

std::vector<SweepRow> parse_sweep_json(const std::string& text) {
    const json arr = json::parse(text);
    if (!arr.is_array()) throw std::runtime_error("sweep JSON: top level must be an array");
    const auto& cols = sweep_columns();
    std::vector<SweepRow> rows;
    for (const auto& o : arr) {
        for (const auto& [key, _] : o.items()) {
            if (std::find(cols.begin(), cols.end(), key) == cols.end()) {
                throw std::runtime_error("sweep JSON: unknown key '" + key + "'");
            }
        }
        SweepRow r;
        r.theta_deg = o.at(cols[0]).get<double>();
        r.p_error = o.at(cols[1]).get<double>();
        for (std::size_t i = 0; i < 4; ++i) r.probs.probs[i] = o.at(cols[2 + i]).get<double>();
        for (std::size_t i = 0; i < 2; ++i) r.a_opt_m1[i] = jread(o.at(cols[6 + i]));
        for (std::size_t i = 0; i < 4; ++i) r.a_opt_m1m2[i] = jread(o.at(cols[8 + i]));
        r.eps_sq_eigen = jread(o.at(cols[12]));
        r.eps_sq_opt_m1 = jread(o.at(cols[13]));
        r.eps_sq_opt_m1m2 = jread(o.at(cols[14]));
        rows.push_back(r);
    }
    return rows;
}

std::string crossings_csv(const std::vector<Crossing>& crossings) {
    std::string out = join({"kind", "description", "theta_deg"});
    for (const auto& c : crossings) {
        out += join({crossing_name(c.kind), "\"" + c.description + "\"", cell(c.theta_deg)});
    }
    return out;
}

std::string crossings_json(const std::vector<Crossing>& crossings) {
    json arr = json::array();
    for (const auto& c : crossings) {
        arr.push_back({{"kind", crossing_name(c.kind)}, {"description", c.description}, {"theta_deg", jcell(c.theta_deg)}});
    }
    return arr.dump(2) + "\n";
}

std::string lgi_csv(const std::vector<LgiRow>& rows) {
    std::string out = join(lgi_columns());
    for (const auto& r : rows) {
        std::vector<std::string> c{format_real(r.theta_deg)};
        for (int a : {1, -1}) {
            for (std::size_t m = 0; m < r.table.entries.size(); ++m) c.push_back(format_real(r.table.at(a, m)));
        }
        c.push_back(format_real(r.table.min_entry));
        c.push_back(r.table.negativity_present ? "1" : "0");
        out += join(c);
    }
    return out;
}

std::string lgi_json(const std::vector<LgiRow>& rows) {
    const auto& cols = lgi_columns();
    json arr = json::array();
    for (const auto& r : rows) {
        json o = json::object();
        o[cols[0]] = r.theta_deg;
        std::size_t k = 1;
        for (int a : {1, -1}) {
            for (std::size_t m = 0; m < r.table.entries.size(); ++m) o[cols[k++]] = r.table.at(a, m);
        }
        o["min_entry"] = r.table.min_entry;
        o["negative"] = r.table.negativity_present;
        arr.push_back(std::move(o));
    }
    return arr.dump(2) + "\n";
}

std::string reconstruction_csv(const std::vector<ReconstructionRow>& rows) {
    std::string out = join(reconstruction_columns());
    for (const auto& r : rows) {
        out += join({r.outcome, format_real(r.p_psi), format_real(r.p_plus), format_real(r.p_minus),
                     format_real(r.correlation_reconstructed), format_real(r.correlation_direct), cell(r.a_opt)});
    }
    return out;
}

std::string reconstruction_json(const std::vector<ReconstructionRow>& rows) {
    const auto& cols = reconstruction_columns();
    json arr = json::array();
    for (const auto& r : rows) {
        arr.push_back({{cols[0], r.outcome},
                       {cols[1], r.p_psi},
                       {cols[2], r.p_plus},
                       {cols[3], r.p_minus},
                       {cols[4], r.correlation_reconstructed},
                       {cols[5], r.correlation_direct},
                       {cols[6], jcell(r.a_opt)}});
    }
    return arr.dump(2) + "\n";
}

std::string render(const std::vector<SweepRow>& rows, Format format) {
    return format == Format::Csv ? sweep_csv(rows) : sweep_json(rows);
}

void write_output(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text << std::flush;
        return;
    }
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
    f << text;
    f.close();
    if (!f) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace seqmeas::io
