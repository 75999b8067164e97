#include "sperncube/experiment.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "sperncube/antichain_geometry.hpp"
#include "sperncube/errors.hpp"
#include "sperncube/grid_poset.hpp"
#include "sperncube/intersecting_families.hpp"
#include "sperncube/lp_surface.hpp"

namespace sperncube {

namespace {

using Json = nlohmann::ordered_json;

struct SubcommandInfo {
    Subcommand id;
    const char* name;
    std::vector<std::string> parameters;
    std::vector<std::string> columns;
    const char* description;
};

const std::vector<SubcommandInfo>& registry() {
    static const std::vector<SubcommandInfo> info{
        {Subcommand::chains, "chains", {"n", "m"},
         {"index", "representative", "size", "chain_count", "bound", "elements"},
         "diagonal chain partition of {0..m-1}^n; chain_count = m^n-(m-1)^n <= bound = n*m^(n-1)"},
        {Subcommand::sperner, "sperner", {"n", "m"},
         {"kind", "n", "m", "width", "expected", "bound", "method"},
         "exact largest antichain: strict dominance on {0..m-1}^n, or the subset lattice of [n] when --m is omitted"},
        {Subcommand::staircase, "staircase", {"k"},
         {"k", "length", "closed_form", "projection_bound", "gap_to_2"},
         "length of the level-k devil's staircase polyline"},
        {Subcommand::boxdim, "boxdim", {"k", "m", "in"},
         {"m", "box_count", "bound", "points", "slope"},
         "grid box counts of a planar antichain (staircase level --k, or --in point file) at resolutions --m"},
        {Subcommand::lp_area, "lp-area", {"n", "p", "tol"},
         {"n", "p", "area", "proj_bound", "global_bound", "err_est"},
         "surface area of the positive l_p sphere patch; several --p values run a sweep"},
        {Subcommand::slab, "slab", {"n", "c", "samples"},
         {"n", "c", "volume", "mc_value", "mc_std_error", "samples"},
         "volume of the central slab of width c in [0,1]^n, with a seeded Monte Carlo check"},
        {Subcommand::ekr, "ekr", {"n", "k", "t", "m"},
         {"n", "k", "t", "m", "f1_size", "f2_size", "ratio", "brute_force", "complete", "nodes"},
         "sizes of the non-trivial families F1, F2 and, on small instances, the exact maximum"},
    };
    return info;
}

const SubcommandInfo& info_of(Subcommand s) {
    for (const auto& i : registry())
        if (i.id == s) return i;
    throw InvalidInput("unknown subcommand");
}

class PartialOutput : public std::runtime_error {
public:
    explicit PartialOutput(const std::string& what) : std::runtime_error(what) {}
};

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Json>> rows;

    void add(std::vector<Json> row) {
        if (row.size() != columns.size()) throw InvariantViolation("row width does not match the header");
        rows.push_back(std::move(row));
    }
};

class Params {
public:
    Params(const ExperimentConfig& config) : values_(config.parameters) {
        const auto& allowed = info_of(config.subcommand).parameters;
        for (const auto& [name, value] : values_)
            if (std::find(allowed.begin(), allowed.end(), name) == allowed.end())
                throw InvalidInput("unknown parameter '" + name + "' for " + to_string(config.subcommand));
    }

    bool has(const std::string& name) const { return values_.count(name) > 0; }

    const std::string& raw(const std::string& name) const {
        auto it = values_.find(name);
        if (it == values_.end()) throw InvalidInput("missing parameter --" + name);
        return it->second;
    }

    long long integer(const std::string& name) const { return parse_int(name, raw(name)); }
    long long integer(const std::string& name, long long fallback) const {
        return has(name) ? integer(name) : fallback;
    }
    double real(const std::string& name, double fallback) const {
        return has(name) ? parse_real(name, raw(name)) : fallback;
    }

    std::vector<long long> integers(const std::string& name) const {
        std::vector<long long> out;
        for (const auto& item : split(name)) out.push_back(parse_int(name, item));
        return out;
    }
    std::vector<double> reals(const std::string& name) const {
        std::vector<double> out;
        for (const auto& item : split(name)) out.push_back(parse_real(name, item));
        return out;
    }

private:
    std::vector<std::string> split(const std::string& name) const {
        std::vector<std::string> out;
        std::stringstream ss(raw(name));
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) out.push_back(item);
        if (out.empty()) throw InvalidInput("empty list for --" + name);
        return out;
    }

    static long long parse_int(const std::string& name, const std::string& s) {
        errno = 0;
        char* end = nullptr;
        const long long v = std::strtoll(s.c_str(), &end, 10);
        if (s.empty() || *end != '\0' || errno != 0) throw InvalidInput("--" + name + " expects an integer, got '" + s + "'");
        return v;
    }
    static double parse_real(const std::string& name, const std::string& s) {
        errno = 0;
        char* end = nullptr;
        const double v = std::strtod(s.c_str(), &end);
        if (s.empty() || *end != '\0' || errno != 0 || !std::isfinite(v))
            throw InvalidInput("--" + name + " expects a number, got '" + s + "'");
        return v;
    }

    std::map<std::string, std::string> values_;
};

int as_int(long long v, const char* name) {
    if (v < -1'000'000'000LL || v > 1'000'000'000LL) throw InvalidInput(std::string("--") + name + " out of range");
    return static_cast<int>(v);
}

std::string join_chain(const Chain& c) {
    std::string s;
    for (const auto& e : c.elements) {
        if (!s.empty()) s += ' ';
        s += e.to_string();
    }
    return s;
}

void run_chains(const Params& p, const ExperimentConfig& cfg, Table& table) {
    const int n = as_int(p.integer("n"), "n");
    const int m = as_int(p.integer("m"), "m");
    const auto budget = cfg.budget.value_or(kDefaultEnumerationBudget);
    const auto chains = chain_partition(n, m, budget);
    const auto count = chain_count(n, m);
    const auto bound = chain_count_bound(n, m);

    std::set<GridVector> seen;
    for (const auto& c : chains) {
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (!seen.insert(c.elements[i]).second)
                throw InvariantViolation("element " + c.elements[i].to_string() + " lies on two chains");
            if (i && !strict_dominates(c.elements[i - 1], c.elements[i]))
                throw InvariantViolation("chain " + join_chain(c) + " is not strictly increasing");
        }
    }
    if (seen.size() != checked_grid_size(n, m, budget))
        throw InvariantViolation("chains do not cover the grid");
    if (chains.size() != count || count > bound)
        throw InvariantViolation("chain count " + std::to_string(chains.size()) + " violates m^n-(m-1)^n <= n*m^(n-1)");

    for (std::size_t i = 0; i < chains.size(); ++i)
        table.add({i, chains[i].representative().to_string(), chains[i].size(), count, bound, join_chain(chains[i])});
}

void run_sperner(const Params& p, const ExperimentConfig& cfg, Table& table) {
    const int n = as_int(p.integer("n"), "n");
    const auto budget = cfg.budget.value_or(kDefaultMatchingBudget);
    if (p.has("m")) {
        const int m = as_int(p.integer("m"), "m");
        const auto cert = max_strict_antichain_size(n, m, budget);
        const auto expected = chain_count(n, m);
        const auto bound = chain_count_bound(n, m);
        if (!is_strict_antichain(cert.witness) || cert.witness.size() != cert.size)
            throw InvariantViolation("antichain witness is not a strict antichain");
        if (cert.size != expected || expected > bound)
            throw InvariantViolation("width " + std::to_string(cert.size) + " differs from m^n-(m-1)^n = " +
                                     std::to_string(expected));
        table.add({"grid", n, m, cert.size, expected, bound, to_string(cert.method)});
    } else {
        if (n < 0 || n > 62) throw InvalidInput("--n out of range");
        const auto cert = boolean_max_antichain_size(n, budget);
        std::uint64_t expected = 1;
        for (int i = 1; i <= n / 2; ++i) expected = expected * static_cast<std::uint64_t>(n - n / 2 + i) / static_cast<std::uint64_t>(i);
        if (!is_weak_antichain(cert.witness) || cert.size != expected)
            throw InvariantViolation("subset-lattice width " + std::to_string(cert.size) +
                                     " differs from the middle binomial " + std::to_string(expected));
        table.add({"boolean", n, 2, cert.size, expected, expected, to_string(cert.method)});
    }
}

void run_staircase(const Params& p, const ExperimentConfig&, Table& table) {
    const int k = as_int(p.integer("k"), "k");
    const auto stair = staircase_points(k);
    const double length = polyline_length(stair.breakpoints);
    const double closed = staircase_length_closed_form(k);
    const auto bound = projection_length_bound(stair);
    if (std::abs(length - closed) > 1e-10)
        throw InvariantViolation("staircase length departs from its closed form");
    if (length > bound.bound * (1.0 + 1e-15) || bound.bound > 2.0 * (1.0 + 1e-15))
        throw InvariantViolation("staircase length exceeds its projection bound");
    table.add({k, length, closed, bound.bound, 2.0 - length});
}

std::string pair_witness(const PointSet& ps, std::pair<std::size_t, std::size_t> pr) {
    auto show = [](const Point& x) {
        std::ostringstream s;
        s.precision(17);
        s << '(';
        for (std::size_t i = 0; i < x.size(); ++i) s << (i ? "," : "") << x[i];
        s << ')';
        return s.str();
    };
    return show(ps[pr.first]) + " <= " + show(ps[pr.second]);
}

void run_boxdim(const Params& p, const ExperimentConfig&, Table& table, std::ostream& err) {
    std::vector<int> ms{3, 9, 27, 81, 243, 729};
    if (p.has("m")) {
        ms.clear();
        for (auto v : p.integers("m")) ms.push_back(as_int(v, "m"));
    }
    if (p.has("in") == p.has("k")) throw InvalidInput("boxdim takes exactly one of --k and --in");
    PointSet points(2);
    if (p.has("in")) {
        std::ifstream in(p.raw("in"));
        if (!in) throw InvalidInput("cannot open point file '" + p.raw("in") + "'");
        auto ingest = read_point_set(in);
        if (ingest.clamped_values) err << "note: clamped " << ingest.clamped_values << " coordinates into [0,1]\n";
        points = std::move(ingest.points);
    } else {
        points = staircase_points(as_int(p.integer("k"), "k")).antichain_vertices();
    }
    if (auto pr = find_comparable_pair(points))
        throw InvariantViolation("input is not an antichain: " + pair_witness(points, *pr));
    const auto fit = box_dimension_estimate(points, ms);
    for (const auto& cover : fit.covers) {
        if (cover.box_count > cover.theoretical_bound)
            throw InvariantViolation("box count " + std::to_string(cover.box_count) + " exceeds n*m^(n-1) = " +
                                     std::to_string(cover.theoretical_bound) + " at m = " +
                                     std::to_string(cover.resolution));
        table.add({cover.resolution, cover.box_count, cover.theoretical_bound, points.size(), fit.slope});
    }
}

void add_surface_row(Table& table, const SurfaceResult& r) {
    if (!r.satisfies_bound_chain())
        throw InvariantViolation("area " + std::to_string(r.area) + " breaks the projection bound chain");
    table.add({r.n, r.p, r.area, r.projection_sum_bound, r.global_bound, r.quadrature_error_estimate});
}

void run_lp_area(const Params& p, const ExperimentConfig&, Table& table) {
    const int n = as_int(p.integer("n", 2), "n");
    const double tol = p.real("tol", 1e-8);
    const auto ps = p.reals("p");
    if (ps.size() == 1) {
        try {
            add_surface_row(table, lp_surface_area(n, ps.front(), tol));
        } catch (const QuadratureFailure& e) {
            throw PartialOutput(e.what());
        }
        return;
    }
    const auto sweep = sharpness_sweep(n, ps, tol);
    std::string failure;
    for (const auto& row : sweep.rows) {
        if (row.failed) {
            table.add({n, row.result.p, nullptr, nullptr, nullptr, nullptr});
            if (failure.empty()) failure = row.failure;
        } else {
            add_surface_row(table, row.result);
        }
    }
    if (!failure.empty()) throw PartialOutput(failure);
}

void run_slab(const Params& p, const ExperimentConfig& cfg, Table& table) {
    const int n = as_int(p.integer("n", 2), "n");
    const long long samples = p.integer("samples", 100000);
    if (samples <= 0) throw InvalidInput("--samples must be positive");
    const auto budget = cfg.budget.value_or(kDefaultEnumerationBudget * 16);
    const auto cs = p.reals("c");
    std::uint64_t stream = 0;
    for (double c : cs) {
        const auto requested = static_cast<std::uint64_t>(samples) * static_cast<std::uint64_t>(std::max(n, 1));
        if (requested > budget) throw BudgetExceeded("slab Monte Carlo coordinates", requested, budget);
        const double vol = slab_volume(n, c);
        const auto mc = monte_carlo_slab_volume(n, c, static_cast<std::uint64_t>(samples), cfg.seed + stream++);
        if (!(vol >= 0.0 && vol <= 1.0)) throw InvariantViolation("slab volume outside [0,1]");
        if (std::abs(vol - mc.value) > 6.0 * mc.standard_error + 1.0 / static_cast<double>(samples))
            throw InvariantViolation("slab volume " + std::to_string(vol) + " disagrees with Monte Carlo " +
                                     std::to_string(mc.value));
        table.add({n, c, vol, mc.value, mc.standard_error, mc.samples});
    }
}

void run_ekr(const Params& p, const ExperimentConfig& cfg, Table& table) {
    const int n = as_int(p.integer("n"), "n");
    const int k = as_int(p.integer("k"), "k");
    const int t = as_int(p.integer("t"), "t");
    const auto budget = cfg.budget.value_or(kDefaultEnumerationBudget);
    for (auto mv : p.integers("m")) {
        const FamilyParams fp{n, k, t, as_int(mv, "m")};
        require_admissible(fp);
        const auto f1 = build_F1(fp, budget);
        const auto f2 = build_F2(fp, budget);
        if (n > k) {
            for (const Family* f : {&f1, &f2}) {
                if (!is_k_uniform_t_intersecting(*f) || is_trivial(*f)) {
                    std::ostringstream w;
                    write_family(w, *f);
                    throw InvariantViolation("construction is not a non-trivial t-intersecting family:\n" + w.str());
                }
            }
        }
        const std::size_t best = std::max(f1.size(), f2.size());
        const double ratio = static_cast<double>(best) / std::pow(static_cast<double>(fp.m), k - t - 1);
        Json brute = nullptr, complete = nullptr, nodes = nullptr;
        if (h_size(n, k, fp.m) <= kDefaultCliqueVertexBudget) {
            const auto r = brute_force_max_nontrivial(fp);
            if (r.complete && n > k && r.size < best)
                throw InvariantViolation("exact maximum below the construction size: " + to_json(r));
            brute = r.size;
            complete = r.complete;
            nodes = r.nodes;
        }
        table.add({n, k, t, fp.m, f1.size(), f2.size(), ratio, brute, complete, nodes});
    }
}

std::string csv_cell(const Json& v) {
    if (v.is_null()) return "";
    if (v.is_string()) {
        const auto& s = v.get_ref<const std::string&>();
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string q = "\"";
        for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
        return q + "\"";
    }
    return v.dump();
}

void write_table(std::ostream& os, const ExperimentConfig& cfg, const Table& table, const std::string& partial) {
    if (cfg.format == OutputFormat::csv) {
        for (std::size_t i = 0; i < table.columns.size(); ++i) os << (i ? "," : "") << table.columns[i];
        os << '\n';
        for (const auto& row : table.rows) {
            for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
            os << '\n';
        }
        if (!partial.empty()) os << "# PARTIAL: " << partial << '\n';
        return;
    }
    Json j;
    j["subcommand"] = to_string(cfg.subcommand);
    j["parameters"] = cfg.parameters;
    j["seed"] = cfg.seed;
    j["columns"] = table.columns;
    auto& rows = j["rows"] = Json::array();
    for (const auto& row : table.rows) {
        Json obj = Json::object();
        for (std::size_t i = 0; i < row.size(); ++i) obj[table.columns[i]] = row[i];
        rows.push_back(std::move(obj));
    }
    j["partial"] = !partial.empty();
    if (!partial.empty()) j["partial_reason"] = partial;
    os << j.dump(2) << '\n';
}

}  // namespace

std::string to_string(Subcommand s) { return info_of(s).name; }

std::optional<Subcommand> parse_subcommand(const std::string& name) {
    for (const auto& i : registry())
        if (name == i.name) return i.id;
    return std::nullopt;
}

const std::vector<Subcommand>& all_subcommands() {
    static const std::vector<Subcommand> all = [] {
        std::vector<Subcommand> v;
        for (const auto& i : registry()) v.push_back(i.id);
        return v;
    }();
    return all;
}

const std::vector<std::string>& allowed_parameters(Subcommand s) { return info_of(s).parameters; }
const std::vector<std::string>& output_columns(Subcommand s) { return info_of(s).columns; }
std::string describe(Subcommand s) { return info_of(s).description; }

int run(const ExperimentConfig& config, std::ostream& out, std::ostream& err) {
    Table table{info_of(config.subcommand).columns, {}};
    std::string partial;
    int code = kExitOk;
    try {
        const Params params(config);
        switch (config.subcommand) {
            case Subcommand::chains: run_chains(params, config, table); break;
            case Subcommand::sperner: run_sperner(params, config, table); break;
            case Subcommand::staircase: run_staircase(params, config, table); break;
            case Subcommand::boxdim: run_boxdim(params, config, table, err); break;
            case Subcommand::lp_area: run_lp_area(params, config, table); break;
            case Subcommand::slab: run_slab(params, config, table); break;
            case Subcommand::ekr: run_ekr(params, config, table); break;
        }
    } catch (const PartialOutput& e) {
        partial = e.what();
        code = kExitBudgetExceeded;
    } catch (const BudgetExceeded& e) {
        partial = e.what();
        code = kExitBudgetExceeded;
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const InvariantViolation& e) {
        err << "invariant violation: " << e.what() << '\n';
        return kExitInvariantViolation;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUnexpected;
    }
    if (!partial.empty()) err << "budget exceeded: " << partial << '\n';

    if (config.output_path.empty()) {
        write_table(out, config, table, partial);
        return code;
    }
    std::ofstream file(config.output_path, std::ios::binary);
    if (!file) {
        err << "error: cannot open output file '" << config.output_path << "'\n";
        return kExitBadInput;
    }
    write_table(file, config, table, partial);
    return code;
}

}  // namespace sperncube
