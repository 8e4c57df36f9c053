#pragma once

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "glin/determinant.hpp"
#include "glin/document.hpp"
#include "glin/exterior.hpp"
#include "glin/matrix.hpp"

namespace glin {
namespace cli {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::pair<std::string, std::string> split_ref(const std::string& ref) {
    auto pos = ref.rfind('#');
    if (pos == std::string::npos || pos == 0 || pos + 1 == ref.size())
        throw UsageError("expected FILE#name, got '" + ref + "'");
    return {ref.substr(0, pos), ref.substr(pos + 1)};
}

inline const ParityGroupoid& find_groupoid(const DocumentModel& model, const std::string& name) {
    auto it = model.groupoids.find(name);
    if (it == model.groupoids.end()) throw DocumentError("no groupoid named '" + name + "'");
    return it->second;
}

inline const SpanEntry& find_span(const DocumentModel& model, const std::string& name) {
    auto it = model.spans.find(name);
    if (it == model.spans.end()) throw DocumentError("no span named '" + name + "'");
    return it->second;
}

inline uint64_t budget_from_env() {
    if (const char* v = std::getenv("GLIN_BUDGET")) {
        char* end = nullptr;
        unsigned long long b = std::strtoull(v, &end, 10);
        if (end && *end == '\0' && b > 0) return b;
    }
    return kDefaultBudget;
}

inline void print_components(const ParityGroupoid& pg, std::ostream& out) {
    for (const auto& c : pi0(pg)) {
        out << pg.g.object_id(c.representative) << "\taut=" << c.aut_order << "\t"
            << (c.orientable ? "orientable" : "non-orientable") << "\tmembers=";
        for (size_t i = 0; i < c.members.size(); ++i) {
            if (i) out << ",";
            out << pg.g.object_id(c.members[i]);
        }
        out << "\n";
    }
}

/// Dispatches one CLI invocation. Exit codes: 0 success, 1 validation
/// failure, 2 usage, 3 budget exceeded.
inline int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        if (args.empty()) throw UsageError("no command given");
        const std::string& cmd = args[0];

        // collect -k K and positionals
        int k = -1;
        std::vector<std::string> pos;
        for (size_t i = 1; i < args.size(); ++i) {
            if (args[i] == "-k" || args[i] == "--degree") {
                if (i + 1 >= args.size()) throw UsageError("missing value after " + args[i]);
                try {
                    k = std::stoi(args[++i]);
                } catch (const std::exception&) {
                    throw UsageError("invalid degree '" + args[i] + "'");
                }
                if (k < 0) throw UsageError("degree must be nonnegative");
            } else if (!args[i].empty() && args[i][0] == '-') {
                throw UsageError("unknown option '" + args[i] + "'");
            } else {
                pos.push_back(args[i]);
            }
        }
        uint64_t budget = budget_from_env();

        auto need = [&pos, &cmd](size_t n) {
            if (pos.size() != n)
                throw UsageError("'" + cmd + "' expects " + std::to_string(n) + " argument(s)");
        };

        if (cmd == "validate") {
            need(1);
            DocumentModel model = parse_document(pos[0]);
            out << "ok: " << model.groupoids.size() << " groupoid(s), " << model.spans.size() << " span(s), "
                << model.actions.size() << " action(s)\n";
            return 0;
        }
        if (cmd == "card") {
            need(1);
            auto [file, name] = split_ref(pos[0]);
            DocumentModel model = parse_document(file);
            out << to_string(homotopy_cardinality(find_groupoid(model, name))) << "\n";
            return 0;
        }
        if (cmd == "pi0") {
            need(1);
            auto [file, name] = split_ref(pos[0]);
            DocumentModel model = parse_document(file);
            print_components(find_groupoid(model, name), out);
            return 0;
        }
        if (cmd == "orientations") {
            need(1);
            auto [file, name] = split_ref(pos[0]);
            DocumentModel model = parse_document(file);
            const ParityGroupoid& pg = find_groupoid(model, name);
            OrientationInfo info = enumerate_orientations(pg);
            if (!info.orientable) {
                out << "none\n";
            } else {
                out << "count " << info.count.str() << "\n";
                for (int o = 0; o < pg.g.num_objects(); ++o)
                    out << pg.g.object_id(o) << "\t" << info.witness[o].str() << "\n";
            }
            return 0;
        }
        if (cmd == "matrix") {
            need(1);
            auto [file, name] = split_ref(pos[0]);
            DocumentModel model = parse_document(file);
            RationalMatrix m = matrix_of_span(find_span(model, name).span);
            out << matrix_to_bracket_string(m) << "\n" << matrix_to_text(m);
            return 0;
        }
        if (cmd == "compose") {
            need(2);
            auto [file_a, name_a] = split_ref(pos[0]);
            auto [file_b, name_b] = split_ref(pos[1]);
            DocumentModel ma = parse_document(file_a);
            DocumentModel mb = file_b == file_a ? ma : parse_document(file_b);
            PSpan c = compose(find_span(ma, name_a).span, find_span(mb, name_b).span);
            out << serialize_span_as_document(c).dump(2) << "\n";
            return 0;
        }
        if (cmd == "extpow") {
            need(1);
            if (k < 0) throw UsageError("'extpow' requires -k K");
            auto [file, name] = split_ref(pos[0]);
            DocumentModel model = parse_document(file);
            PSpan p = exterior_power_span(find_span(model, name).span, k, budget);
            out << serialize_span_as_document(p).dump(2) << "\n";
            return 0;
        }
        if (cmd == "det") {
            need(1);
            auto [file, name] = split_ref(pos[0]);
            DocumentModel model = parse_document(file);
            out << to_string(det_cardinality(find_span(model, name).span, budget)) << "\n";
            return 0;
        }
        if (cmd == "leibniz") {
            need(1);
            auto [file, name] = split_ref(pos[0]);
            DocumentModel model = parse_document(file);
            SignedGroupoid sc = leibniz_scalar(find_span(model, name).span);
            out << to_string(scalar_cardinality(sc)) << "\n";
            out << "fingerprint: " << fingerprint_string(fingerprint(sc)) << "\n";
            return 0;
        }
        if (cmd == "report") {
            need(1);
            if (k < 0) throw UsageError("'report' requires -k K");
            auto [file, name] = split_ref(pos[0]);
            DocumentModel model = parse_document(file);
            FiberTableReport rep = fiber_table(find_span(model, name).span, k, budget);
            out << fiber_table_grid(rep) << fiber_table_listing(rep);
            return 0;
        }
        throw UsageError("unknown command '" + cmd + "'");
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        err << "commands: validate card pi0 matrix compose extpow det leibniz report orientations\n";
        return 2;
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const DocumentError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace cli
}  // namespace glin
