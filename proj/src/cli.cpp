#include "psl2/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "psl2/census.hpp"
#include "psl2/counting.hpp"
#include "psl2/cycleindex.hpp"
#include "psl2/errors.hpp"
#include "psl2/reference_values.hpp"

namespace psl2::cli {

using Json = nlohmann::ordered_json;

namespace {

const char* kind_name(CountKind kind) { return kind == CountKind::pointed ? "pointed" : "classes"; }

const char* relation_name(Relation r) {
    switch (r) {
    case Relation::included: return "included";
    case Relation::conjugate: return "conjugate";
    case Relation::isomorphic: return "isomorphic";
    case Relation::normal: return "normal";
    }
    return "?";
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

bool is_decimal(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

} // namespace

// ---------------------------------------------------------------------------

CoefficientCache::CoefficientCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::optional<CoefficientCache> CoefficientCache::from_env() {
    const char* dir = std::getenv(kCacheEnvVar);
    if (dir == nullptr || *dir == '\0') {
        return std::nullopt;
    }
    return CoefficientCache(dir);
}

std::filesystem::path CoefficientCache::file_for(CountKind kind, bool general) const {
    return dir_ / (std::string("count-") + kind_name(kind) + (general ? "-general" : "") + ".json");
}

std::optional<std::vector<std::string>> CoefficientCache::load(CountKind kind, bool general, std::size_t max,
                                                               std::ostream& diag) const {
    const auto path = file_for(kind, general);
    std::ifstream in(path);
    if (!in) {
        return std::nullopt;
    }
    auto corrupt = [&](const std::string& why) -> std::optional<std::vector<std::string>> {
        diag << "warning: ignoring corrupt cache file " << path.string() << " (" << why << "); recomputing\n";
        return std::nullopt;
    };
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::exception& e) {
        return corrupt("unparseable JSON");
    }
    if (!j.is_object() || !j.contains("format_version") || j["format_version"] != kCacheFormatVersion) {
        return corrupt("bad format_version");
    }
    if (!j.contains("kind") || j["kind"] != kind_name(kind) || !j.contains("general") || j["general"] != general) {
        return corrupt("kind mismatch");
    }
    if (!j.contains("max") || !j["max"].is_number_unsigned() || !j.contains("coefficients") ||
        !j["coefficients"].is_array()) {
        return corrupt("missing fields");
    }
    const auto cached_max = j["max"].get<std::size_t>();
    const auto& cs = j["coefficients"];
    if (cs.size() != cached_max) {
        return corrupt("coefficient count does not match max");
    }
    std::vector<std::string> out;
    for (const auto& c : cs) {
        if (!c.is_string() || !is_decimal(c.get<std::string>())) {
            return corrupt("non-decimal coefficient");
        }
        out.push_back(c.get<std::string>());
    }
    // Index one is the whole group in either family.
    if (!out.empty() && out.front() != "1") {
        return corrupt("first coefficient is not 1");
    }
    if (cached_max < max) {
        return std::nullopt;
    }
    out.resize(max);
    return out;
}

void CoefficientCache::store(CountKind kind, bool general, const std::vector<std::string>& coefficients,
                             std::ostream& diag) const {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    const auto path = file_for(kind, general);
    const auto tmp = path.string() + ".tmp";
    Json j;
    j["format_version"] = kCacheFormatVersion;
    j["kind"] = kind_name(kind);
    j["general"] = general;
    j["max"] = coefficients.size();
    j["coefficients"] = coefficients;
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) {
            diag << "warning: cannot write cache file " << path.string() << "\n";
            return;
        }
        out << j.dump() << "\n";
    }
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        diag << "warning: cannot write cache file " << path.string() << ": " << ec.message() << "\n";
    }
}

// ---------------------------------------------------------------------------

std::vector<std::string> count_coefficients(CountKind kind, std::size_t max, bool general) {
    if (max == 0) {
        throw UsageError("--max must be at least 1");
    }
    TruncSeries s(0);
    if (general) {
        s = general_series(max, kind == CountKind::pointed);
    } else {
        s = kind == CountKind::pointed ? pointed_series(max) : unpointed_series_fast(max);
    }
    std::vector<std::string> out;
    for (const auto& c : ordinary_coefficients(s)) {
        if (sgn(c) < 0) {
            throw InvariantError("negative count coefficient");
        }
        out.push_back(c.get_str());
    }
    return out;
}

std::string cmd_count(CountKind kind, std::size_t max, bool general, const CoefficientCache* cache, std::ostream& diag) {
    std::optional<std::vector<std::string>> coeffs;
    if (cache != nullptr) {
        coeffs = cache->load(kind, general, max, diag);
    }
    if (!coeffs) {
        coeffs = count_coefficients(kind, max, general);
        if (cache != nullptr) {
            cache->store(kind, general, *coeffs, diag);
        }
    }
    Json j;
    j["kind"] = kind_name(kind);
    j["group"] = general ? "Z*Z/2Z" : "PSL2(Z)";
    j["max"] = max;
    j["coefficients"] = *coeffs;
    return dump(j);
}

std::string cmd_census(std::size_t size, bool list, bool normal_only, bool general) {
    const Flavor flavor = general ? Flavor::general : Flavor::trivalent;
    const CensusReport r = enumerate_size(size, flavor);
    Json j;
    j["size"] = size;
    j["group"] = general ? "Z*Z/2Z" : "PSL2(Z)";
    // Census sizes are capped well below native integer range.
    j["pointed"] = r.pointed_classes.get_ui();
    j["unpointed"] = r.unpointed_classes.get_ui();
    j["normal"] = r.normal_classes;
    if (list) {
        Json reps = Json::array();
        for (const auto& d : r.class_representatives) {
            if (normal_only && automorphism_order(d) != d.size()) {
                continue;
            }
            reps.push_back(format_diagram(d));
        }
        j["representatives"] = std::move(reps);
    }
    return dump(j);
}

namespace {

Json critical_pair_json(const CriticalPair& c) {
    Json j;
    j["src_arc"] = c.src_arc;
    j["image"] = c.image;
    j["conflicting_image"] = c.conflicting_image;
    j["word"] = c.word;
    return j;
}

PointedDiagram require_pointed(const ParsedDiagram& p, const char* what) {
    if (!p.base) {
        throw UsageError(std::string(what) + " needs a base arc (\"; base=<int>\")");
    }
    if (!is_connected(p.diagram)) {
        throw DomainError(std::string(what) + " is not connected");
    }
    return PointedDiagram(p.diagram, *p.base);
}

PointedDiagram at_origin(const ParsedDiagram& p, const char* what) {
    if (!is_connected(p.diagram)) {
        throw DomainError(std::string(what) + " is not connected");
    }
    return PointedDiagram(p.diagram, 0);
}

} // namespace

std::string cmd_decide(Relation relation, const std::vector<ParsedDiagram>& inputs) {
    const std::size_t needed = relation == Relation::normal ? 1 : 2;
    if (inputs.size() != needed) {
        throw UsageError(std::string(relation_name(relation)) + " takes " + std::to_string(needed) + " diagram file(s)");
    }
    Json j;
    j["relation"] = relation_name(relation);
    Json witness;
    bool result = false;
    switch (relation) {
    case Relation::included: {
        const auto p1 = require_pointed(inputs[0], "first diagram");
        const auto p2 = require_pointed(inputs[1], "second diagram");
        auto m = find_pointed_morphism(p1, p2);
        result = static_cast<bool>(m);
        if (result) {
            witness["map"] = *m.map;
        } else {
            witness["critical_pair"] = critical_pair_json(*m.obstruction);
        }
        break;
    }
    case Relation::isomorphic: {
        const auto p1 = require_pointed(inputs[0], "first diagram");
        const auto p2 = require_pointed(inputs[1], "second diagram");
        if (p1.diagram().size() != p2.diagram().size()) {
            witness["sizes"] = {p1.diagram().size(), p2.diagram().size()};
            break;
        }
        auto m = find_pointed_morphism(p1, p2);
        result = static_cast<bool>(m);
        if (result) {
            witness["map"] = *m.map;
        } else {
            witness["critical_pair"] = critical_pair_json(*m.obstruction);
        }
        break;
    }
    case Relation::conjugate: {
        const auto p1 = at_origin(inputs[0], "first diagram");
        const auto p2 = at_origin(inputs[1], "second diagram");
        const auto& d2 = p2.diagram();
        if (p1.diagram().size() != d2.size()) {
            witness["sizes"] = {p1.diagram().size(), d2.size()};
            break;
        }
        result = conjugate_subgroups(p1, p2);
        Json obstructions = Json::array();
        for (Arc b = 0; b < d2.size(); ++b) {
            auto m = find_pointed_morphism(p1, PointedDiagram(d2, b));
            if (m) {
                if (!result) {
                    throw InvariantError("canonical codes differ but an isomorphism exists");
                }
                witness["target_base"] = b;
                witness["map"] = *m.map;
                break;
            }
            Json o;
            o["target_base"] = b;
            o["critical_pair"] = critical_pair_json(*m.obstruction);
            obstructions.push_back(std::move(o));
        }
        if (!result) {
            witness["obstructions"] = std::move(obstructions);
        } else if (!witness.contains("map")) {
            throw InvariantError("canonical codes agree but no isomorphism was found");
        }
        break;
    }
    case Relation::normal: {
        const auto p = at_origin(inputs[0], "diagram");
        const auto& d = p.diagram();
        result = true;
        Json autos = Json::array();
        for (Arc a = 0; a < d.size(); ++a) {
            auto m = find_pointed_morphism(p, PointedDiagram(d, a));
            if (!m) {
                result = false;
                witness = Json::object();
                witness["target_base"] = a;
                witness["critical_pair"] = critical_pair_json(*m.obstruction);
                break;
            }
            autos.push_back(*m.map);
        }
        if (result) {
            witness["automorphisms"] = std::move(autos);
        }
        break;
    }
    }
    j["result"] = result;
    j["witness"] = std::move(witness);
    return dump(j);
}

std::string cmd_export_dot(const Diagram& d) { return barycentric_export(d).to_dot(); }

ParsedDiagram read_diagram_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open " + path.string(), 0, 0);
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_diagram(ss.str());
}

// ---------------------------------------------------------------------------

namespace {

struct Check {
    std::string name;
    std::function<std::string()> run;  // empty string on success
};

std::string compare_table(const std::vector<std::string>& got, std::size_t upto, bool pointed) {
    const auto& ref = pointed ? reference::kPointed : reference::kUnpointed;
    for (std::size_t n = 1; n <= upto; ++n) {
        if (got.at(n - 1) != ref.at(n - 1)) {
            return "t^" + std::to_string(n) + ": got " + got[n - 1] + ", expected " + std::string(ref[n - 1]);
        }
    }
    return {};
}

// Commuting tau with tau^p = id, counted over all of S_n.
ExactInt brute_force_commuting(std::uint32_t p, const PartitionType& type) {
    const std::uint32_t n = type.weight();
    std::vector<std::uint32_t> sigma(n);
    std::uint32_t pos = 0;
    for (const auto& [len, cnt] : type.parts()) {
        for (std::uint32_t c = 0; c < cnt; ++c) {
            for (std::uint32_t i = 0; i < len; ++i) {
                sigma[pos + i] = pos + (i + 1) % len;
            }
            pos += len;
        }
    }
    std::vector<std::uint32_t> tau(n);
    std::iota(tau.begin(), tau.end(), 0);
    ExactInt count = 0;
    do {
        bool ok = true;
        for (std::uint32_t a = 0; a < n && ok; ++a) {
            std::uint32_t b = a;
            for (std::uint32_t k = 0; k < p; ++k) {
                b = tau[b];
            }
            ok = b == a && tau[sigma[a]] == sigma[tau[a]];
        }
        if (ok) {
            ++count;
        }
    } while (std::next_permutation(tau.begin(), tau.end()));
    return count;
}

std::string census_vs_series(std::size_t max_size) {
    const auto pointed = pointed_series(max_size);
    const auto unpointed = unpointed_series_fast(max_size);
    for (std::size_t n = 1; n <= max_size; ++n) {
        const auto r = enumerate_size(n);
        if (ExactRat(r.pointed_classes) != pointed[n] || ExactRat(r.unpointed_classes) != unpointed[n]) {
            return "size " + std::to_string(n) + ": census " + r.pointed_classes.get_str() + "/" +
                   r.unpointed_classes.get_str() + " vs series " + pointed[n].get_str() + "/" + unpointed[n].get_str();
        }
    }
    return {};
}

} // namespace

int cmd_selftest(Depth depth, std::ostream& out, std::ostream& diag) {
    const bool full = depth == Depth::full;
    const std::size_t order = full ? 50 : 20;
    const std::size_t census_max = full ? 9 : 8;
    const auto cache = CoefficientCache::from_env();
    const CoefficientCache* cache_ptr = cache ? &*cache : nullptr;

    std::vector<Check> checks;
    checks.push_back({"pointed counts to order " + std::to_string(order), [&] {
                          auto j = Json::parse(cmd_count(CountKind::pointed, order, false, cache_ptr, diag));
                          return compare_table(j["coefficients"].get<std::vector<std::string>>(), order, true);
                      }});
    checks.push_back({"conjugacy class counts to order " + std::to_string(order), [&] {
                          auto j = Json::parse(cmd_count(CountKind::classes, order, false, cache_ptr, diag));
                          return compare_table(j["coefficients"].get<std::vector<std::string>>(), order, false);
                      }});
    checks.push_back({"dense and separable methods agree to order 20", [] {
                          return unpointed_series_dense(20) == unpointed_series_fast(20) ? std::string{}
                                                                                         : std::string("mismatch");
                      }});
    const std::size_t rec_order = full ? 500 : 60;
    checks.push_back({"recurrence equals closed form to n=" + std::to_string(rec_order), [rec_order] {
                          return d3star_recurrence(rec_order) == d3star_closed_form(rec_order) ? std::string{}
                                                                                               : std::string("mismatch");
                      }});
    checks.push_back({"census agrees with series for sizes 1.." + std::to_string(census_max),
                      [census_max] { return census_vs_series(census_max); }});
    checks.push_back({"fixed-point counts match brute force (weight <= 6)", [] {
                          for (std::uint32_t p : {2u, 3u}) {
                              for (std::uint32_t w = 1; w <= 6; ++w) {
                                  for (const auto& t : partitions_of(w)) {
                                      if (fixed_order_p_commuting(p, t) != brute_force_commuting(p, t)) {
                                          return "p=" + std::to_string(p) + " type " + t.monomial();
                                      }
                                  }
                              }
                          }
                          return std::string{};
                      }});
    if (full) {
        checks.push_back({"weight-500 terms", [&] {
                              const auto start = std::chrono::steady_clock::now();
                              const auto p = pointed_series(500)[500].get_str();
                              const auto u = unpointed_series_fast(500)[500].get_str();
                              const double secs =
                                  std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
                              out << "  [t^500] pointed   = " << p << "\n";
                              out << "  [t^500] unpointed = " << u << "\n";
                              out << "  computed in " << secs << " s\n";
                              if (p != reference::kPointed500) {
                                  return std::string("pointed term differs");
                              }
                              if (u != reference::kUnpointed500) {
                                  return std::string("unpointed term differs");
                              }
                              return std::string{};
                          }});
    }

    int failures = 0;
    for (const auto& c : checks) {
        std::string err;
        try {
            err = c.run();
        } catch (const std::exception& e) {
            err = std::string("exception: ") + e.what();
        }
        if (err.empty()) {
            out << "PASS " << c.name << "\n";
        } else {
            out << "FAIL " << c.name << ": " << err << "\n";
            if (failures == 0) {
                diag << "first failing check: " << c.name << "\n";
            }
            ++failures;
        }
    }
    out << (failures == 0 ? "selftest passed" : "selftest failed") << "\n";
    return failures == 0 ? exit_code::ok : exit_code::invariant;
}

// ---------------------------------------------------------------------------

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite-index subgroups of PSL2(Z) and Z*Z/2Z via trivalent diagrams", "psl2sub"};
    app.require_subcommand(1, 1);

    auto* count = app.add_subcommand("count", "Generating-series coefficients by index");
    std::string count_kind;
    std::size_t count_max = 0;
    bool count_general = false;
    count->add_option("kind", count_kind, "pointed (subgroups) or classes (conjugacy classes)")
        ->required()
        ->check(CLI::IsMember({"pointed", "classes"}));
    count->add_option("--max", count_max, "Highest index")->required()->check(CLI::PositiveNumber);
    count->add_flag("--general", count_general, "Count in Z*Z/2Z instead of PSL2(Z)");

    auto* census = app.add_subcommand("census", "Exhaustive enumeration of diagrams of one size");
    std::size_t census_size = 0;
    bool census_list = false;
    bool census_normal = false;
    bool census_general = false;
    census->add_option("--size", census_size, "Number of arcs (index)")->required()->check(CLI::PositiveNumber);
    census->add_flag("--list", census_list, "Print class representatives");
    census->add_flag("--normal-only", census_normal, "List only normal classes");
    census->add_flag("--general", census_general, "Enumerate general (non-trivalent) diagrams");

    auto* decide = app.add_subcommand("decide", "Decide a relation between subgroups given as diagram files");
    std::string relation;
    std::vector<std::string> files;
    decide->add_option("relation", relation, "included | conjugate | isomorphic | normal")
        ->required()
        ->check(CLI::IsMember({"included", "conjugate", "isomorphic", "normal"}));
    decide->add_option("files", files, "Diagram file(s)")->required()->expected(1, 2);

    auto* exporter = app.add_subcommand("export", "Export a diagram");
    std::string export_format;
    std::string export_file;
    exporter->add_option("format", export_format, "Output format")->required()->check(CLI::IsMember({"dot"}));
    exporter->add_option("file", export_file, "Diagram file")->required();

    auto* selftest = app.add_subcommand("selftest", "Run the self-verification suite");
    std::string depth = "quick";
    selftest->add_option("depth", depth, "quick or full")->check(CLI::IsMember({"quick", "full"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_code::ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_code::ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::usage;
    }

    try {
        if (count->parsed()) {
            const auto cache = CoefficientCache::from_env();
            out << cmd_count(count_kind == "pointed" ? CountKind::pointed : CountKind::classes, count_max,
                             count_general, cache ? &*cache : nullptr, err);
        } else if (census->parsed()) {
            out << cmd_census(census_size, census_list, census_normal, census_general);
        } else if (decide->parsed()) {
            const Relation r = relation == "included"     ? Relation::included
                               : relation == "conjugate"  ? Relation::conjugate
                               : relation == "isomorphic" ? Relation::isomorphic
                                                          : Relation::normal;
            std::vector<ParsedDiagram> inputs;
            for (const auto& f : files) {
                try {
                    inputs.push_back(read_diagram_file(f));
                } catch (const ParseError& e) {
                    err << "error: " << f << ": " << e.what() << "\n";
                    return exit_code::input;
                }
            }
            out << cmd_decide(r, inputs);
        } else if (exporter->parsed()) {
            out << cmd_export_dot(read_diagram_file(export_file).diagram);
        } else if (selftest->parsed()) {
            return cmd_selftest(depth == "full" ? Depth::full : Depth::quick, out, err);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::usage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::input;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::input;
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::input;
    } catch (const InvariantError& e) {
        err << "internal error: " << e.what() << "\n";
        return exit_code::invariant;
    }
    return exit_code::ok;
}

} // namespace psl2::cli
