#include "suzuki/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "suzuki/eo.hpp"
#include "suzuki/gf2n.hpp"
#include "suzuki/matrix_cache.hpp"
#include "suzuki/params.hpp"
#include "suzuki/structured.hpp"

namespace suzuki::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct verification_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr int64_t kMatrixMBound = 4;

bool is_matrix_command(Command c) {
    switch (c) {
        case Command::matrix:
        case Command::rank_profile:
        case Command::eo_constraints:
        case Command::eo_enumerate:
        case Command::verify:
        case Command::all:
            return true;
        default:
            return false;
    }
}

std::string monomial_str(const StructuredMonomial& mon) {
    std::ostringstream os;
    os << "y^" << mon.a << " z^" << mon.b << " h1^" << mon.c << " h2^" << mon.d;
    return os.str();
}

ordered_json base_json(const SuzukiParams& p) {
    ordered_json j;
    j["m"] = p.m;
    j["q0"] = p.q0;
    j["q"] = p.q;
    j["g"] = p.g;
    return j;
}

std::optional<std::filesystem::path> resolve_cache_dir(const RunConfig& cfg) {
    if (cfg.cache_dir) return std::filesystem::path(*cfg.cache_dir);
    if (auto env = cache_dir_from_env()) return std::filesystem::path(*env);
    return std::nullopt;
}

BitMatrix obtain_matrix(const SuzukiParams& p, const Basis& basis, const RunConfig& cfg,
                        std::ostream& err) {
    const auto dir = resolve_cache_dir(cfg);
    if (dir) {
        const auto path = cache_file_path(*dir, p.m);
        if (std::filesystem::exists(path)) {
            try {
                CachedMatrix cached = load_matrix_cache(path);
                if (cached.m == p.m) return std::move(cached.matrix);
                err << "warning: cache file " << path.string() << " is for m=" << cached.m
                    << ", rebuilding\n";
            } catch (const CacheError& e) {
                err << "warning: ignoring cache file " << path.string() << ": " << e.what()
                    << "\n";
            }
        }
    }
    BitMatrix m = build_cartier_matrix(p, basis, CartierPath::structured, cfg.jobs);
    if (dir) {
        try {
            std::filesystem::create_directories(*dir);
            save_matrix_cache(cache_file_path(*dir, p.m), p.m, m);
        } catch (const std::exception& e) {
            err << "warning: could not write cache: " << e.what() << "\n";
        }
    }
    return m;
}

// First differing column between the two Cartier-matrix routes, as a report.
std::string matrix_diff_report(const Basis& basis, const BitMatrix& structured,
                               const BitMatrix& oracle) {
    for (size_t j = 0; j < structured.cols(); ++j) {
        if (structured.column(j) == oracle.column(j)) continue;
        std::ostringstream os;
        os << "first differing column " << j << " (" << monomial_str(basis.elements[j])
           << "): structured rows {";
        const BitVector a = structured.column(j), b = oracle.column(j);
        for (size_t r = 0; r < a.size(); ++r)
            if (a.get(r)) os << ' ' << r;
        os << " }, oracle rows {";
        for (size_t r = 0; r < b.size(); ++r)
            if (b.get(r)) os << ' ' << r;
        os << " }";
        return os.str();
    }
    return "matrices are equal";
}

struct VerifyCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

std::vector<VerifyCheck> run_verify_checks(const SuzukiParams& p, const Basis& basis,
                                           const BitMatrix& matrix, const RunConfig& cfg,
                                           std::ostream& err) {
    std::vector<VerifyCheck> checks;
    auto add = [&checks](std::string name, bool ok, std::string detail) {
        checks.push_back({std::move(name), ok, std::move(detail)});
    };

    add("basis-count", static_cast<int64_t>(basis.size()) == p.g,
        std::to_string(basis.size()) + " monomials, g = " + std::to_string(p.g));

    const int64_t sg = semigroup_count(p.m);
    add("semigroup-count", sg == p.g,
        std::to_string(sg) + " semigroup elements in [0, 2g-2], g = " + std::to_string(p.g));

    if (p.m <= 2 || cfg.verify_oracle) {
        const BitMatrix oracle = build_cartier_matrix(p, basis, CartierPath::oracle, cfg.jobs);
        const bool same = (matrix == oracle);
        add("matrix-paths", same,
            same ? "structured and oracle matrices agree bit-for-bit"
                 : matrix_diff_report(basis, matrix, oracle));
    } else {
        err << "warning: oracle cross-check disabled for m > 2 (pass --verify-oracle to force)\n";
    }

    const int64_t corank = a_number_from_matrix(matrix);
    const int64_t formula = a_number_formula(p.m);
    add("a-number", corank == formula,
        "matrix corank " + std::to_string(corank) + ", closed formula " + std::to_string(formula));

    if (p.m == 1) {
        bool ok = true;
        std::string detail;
        for (int k : {1, 2, 4}) {
            const int64_t naive = point_count_naive(p.m, k);
            const int64_t zeta = point_count_zeta(p.m, k);
            if (!detail.empty()) detail += ", ";
            detail += "k=" + std::to_string(k) + ": " + std::to_string(naive) + "/" +
                      std::to_string(zeta);
            ok = ok && (naive == zeta);
        }
        add("point-counts", ok, "naive/zeta " + detail);
    }
    return checks;
}

void print_final_type(std::ostream& out, const std::vector<int64_t>& nu) {
    out << '[';
    for (size_t i = 0; i < nu.size(); ++i) out << (i ? "," : "") << nu[i];
    out << ']';
}

int run_impl(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const SuzukiParams p = make_params(cfg.m);
    if (cfg.jobs < 1) throw usage_error("--jobs must be >= 1");

    if (is_matrix_command(cfg.command) && p.m > kMatrixMBound && !cfg.allow_large) {
        throw usage_error("m=" + std::to_string(p.m) +
                          " exceeds the default bound m <= 4 for matrix commands; pass "
                          "--allow-large to override");
    }

    const bool csv_ok = cfg.command == Command::basis || cfg.command == Command::rank_profile ||
                        cfg.command == Command::points;
    if (cfg.format == Format::csv && !csv_ok)
        throw usage_error("--format csv is only available for basis, rank-profile and points");

    switch (cfg.command) {
        case Command::params: {
            if (cfg.format == Format::json) {
                ordered_json j = base_json(p);
                j["pole_orders"] = {{"y", p.vy}, {"z", p.vz}, {"h1", p.vh1}, {"h2", p.vh2}};
                j["sg_generators"] = p.sg_generators;
                out << j.dump() << "\n";
            } else {
                out << "Suzuki curve S_" << p.m << ": q0=" << p.q0 << " q=" << p.q
                    << " g=" << p.g << "\n";
                out << "pole orders at P_inf: y=" << p.vy << " z=" << p.vz << " h1=" << p.vh1
                    << " h2=" << p.vh2 << "\n";
                out << "semigroup generators: <" << p.vy << "," << p.vz << "," << p.vh1 << ","
                    << p.vh2 << ">\n";
            }
            return 0;
        }

        case Command::a_number: {
            const int64_t formula = a_number_formula(p.m);
            std::optional<int64_t> corank;
            if (p.m <= kMatrixMBound) {
                const Basis basis = enumerate_basis(p);
                corank = a_number_from_matrix(obtain_matrix(p, basis, cfg, err));
                if (*corank != formula) {
                    throw verification_failure("a-number mismatch: matrix corank " +
                                               std::to_string(*corank) + " != formula " +
                                               std::to_string(formula));
                }
            }
            if (cfg.format == Format::json) {
                ordered_json j = base_json(p);
                j["a_number"] = formula;
                out << j.dump() << "\n";
            } else {
                out << "a-number (m=" << p.m << "): " << formula << "\n";
                if (corank) out << "matrix corank agrees: g=" << p.g << ", rank=" << p.g - *corank << "\n";
                else out << "closed formula only (matrix route needs m <= 4)\n";
            }
            return 0;
        }

        case Command::basis: {
            const Basis basis = enumerate_basis(p);
            if (cfg.format == Format::json) {
                ordered_json j = base_json(p);
                ordered_json arr = ordered_json::array();
                for (size_t i = 0; i < basis.size(); ++i) {
                    const auto& mon = basis.elements[i];
                    arr.push_back({{"a", mon.a},
                                   {"b", mon.b},
                                   {"c", mon.c},
                                   {"d", mon.d},
                                   {"pole", basis.poles[i]}});
                }
                j["basis"] = std::move(arr);
                out << j.dump() << "\n";
            } else if (cfg.format == Format::csv) {
                out << "index,a,b,c,d,pole\n";
                for (size_t i = 0; i < basis.size(); ++i) {
                    const auto& mon = basis.elements[i];
                    out << i << ',' << mon.a << ',' << mon.b << ',' << mon.c << ',' << mon.d
                        << ',' << basis.poles[i] << "\n";
                }
            } else {
                out << "basis of regular 1-forms (m=" << p.m << "), " << basis.size()
                    << " elements:\n";
                for (size_t i = 0; i < basis.size(); ++i) {
                    out << "  [" << i << "] " << monomial_str(basis.elements[i])
                        << " dy   (pole " << basis.poles[i] << ")\n";
                }
            }
            return 0;
        }

        case Command::matrix: {
            const Basis basis = enumerate_basis(p);
            const BitMatrix m = obtain_matrix(p, basis, cfg, err);
            const int64_t r = static_cast<int64_t>(rank(m));
            if (cfg.matrix_out) {
                save_matrix_cache(*cfg.matrix_out, p.m, m);
            }
            if (cfg.format == Format::json) {
                ordered_json j = base_json(p);
                j["rank"] = r;
                j["a_number"] = p.g - r;
                out << j.dump() << "\n";
            } else {
                out << "Cartier matrix (m=" << p.m << "): " << p.g << " x " << p.g
                    << ", rank " << r << ", a-number " << p.g - r << "\n";
                if (cfg.matrix_out) out << "written to " << *cfg.matrix_out << "\n";
            }
            return 0;
        }

        case Command::rank_profile: {
            const Basis basis = enumerate_basis(p);
            const RankProfile rp = RankProfile::from_matrix(obtain_matrix(p, basis, cfg, err));
            if (cfg.format == Format::json) {
                ordered_json j = base_json(p);
                j["rank_profile"] = rp.ranks;
                out << j.dump() << "\n";
            } else if (cfg.format == Format::csv) {
                out << "k,rank\n";
                for (size_t i = 0; i < rp.ranks.size(); ++i)
                    out << i + 1 << ',' << rp.ranks[i] << "\n";
            } else {
                out << "rank profile (m=" << p.m << "):";
                for (int64_t r : rp.ranks) out << ' ' << r;
                out << "\nnilpotency index: " << rp.nilpotency() << "\n";
                out << "a-number: " << rp.a_number() << "\n";
            }
            return 0;
        }

        case Command::eo_constraints: {
            const Basis basis = enumerate_basis(p);
            const RankProfile rp = RankProfile::from_matrix(obtain_matrix(p, basis, cfg, err));
            const FinalTypeConstraints fc = derive_constraints(rp);
            if (cfg.format == Format::json) {
                ordered_json j = base_json(p);
                ordered_json fixed = ordered_json::object();
                for (const auto& [i, v] : fc.fixed) fixed[std::to_string(i)] = v;
                j["nu_fixed"] = std::move(fixed);
                out << j.dump() << "\n";
            } else {
                out << "fixed final-type values (m=" << p.m << "), " << fc.fixed.size() << " of "
                    << p.g << ":\n ";
                for (const auto& [i, v] : fc.fixed) out << " nu_" << i << "=" << v;
                out << "\nfree indices: " << p.g - static_cast<int64_t>(fc.fixed.size()) << "\n";
                if (p.m > 1) {
                    out << "note: values besides nu_1 and nu_g assume a final filtration "
                           "containing every iterated Cartier image\n";
                }
            }
            return 0;
        }

        case Command::eo_enumerate: {
            const Basis basis = enumerate_basis(p);
            const RankProfile rp = RankProfile::from_matrix(obtain_matrix(p, basis, cfg, err));
            const FinalTypeConstraints fc = derive_constraints(rp);
            std::vector<std::vector<int64_t>> types;
            try {
                types = enumerate_compatible_final_types(fc, cfg.cap);
            } catch (const enumeration_cap_error& e) {
                err << "error: " << e.what() << "\n";
                return 1;
            }
            if (cfg.format == Format::json) {
                ordered_json j = base_json(p);
                j["final_types"] = types;
                out << j.dump() << "\n";
            } else {
                out << "compatible final types (m=" << p.m << "): " << types.size() << "\n";
                for (const auto& nu : types) {
                    out << "  ";
                    print_final_type(out, nu);
                    out << "\n";
                }
            }
            return 0;
        }

        case Command::points: {
            std::vector<int> ks = cfg.k_values;
            std::sort(ks.begin(), ks.end());
            ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
            if (ks.empty()) throw usage_error("points: at least one --k is required");
            std::vector<std::pair<int, int64_t>> counts;
            for (int k : ks) {
                if (k < 1) throw usage_error("points: k must be >= 1");
                counts.emplace_back(k, point_count_zeta(p.m, k));
            }
            if (cfg.naive_check) {
                for (auto& [k, zeta] : counts) {
                    if ((k != 1 && k != 2 && k != 4) || (2 * p.m + 1) * k > 24) {
                        throw usage_error("points --naive: k=" + std::to_string(k) +
                                          " is outside the brute-force bound (k in {1,2,4}, "
                                          "q^k <= 2^24)");
                    }
                    const int64_t naive = point_count_naive(p.m, k);
                    if (naive != zeta) {
                        throw verification_failure(
                            "point-count mismatch at k=" + std::to_string(k) + ": naive " +
                            std::to_string(naive) + " != zeta " + std::to_string(zeta));
                    }
                }
            }
            if (cfg.format == Format::json) {
                ordered_json j = base_json(p);
                ordered_json pts = ordered_json::object();
                for (auto& [k, n] : counts) pts[std::to_string(k)] = n;
                j["points"] = std::move(pts);
                out << j.dump() << "\n";
            } else if (cfg.format == Format::csv) {
                out << "k,count\n";
                for (auto& [k, n] : counts) out << k << ',' << n << "\n";
            } else {
                for (auto& [k, n] : counts) {
                    out << "#S_" << p.m << "(F_{q^" << k << "}) = " << n
                        << (is_maximal_over(p.m, k) ? "  (maximal)" : "") << "\n";
                }
            }
            return 0;
        }

        case Command::verify: {
            const Basis basis = enumerate_basis(p);
            const BitMatrix m = obtain_matrix(p, basis, cfg, err);
            const auto checks = run_verify_checks(p, basis, m, cfg, err);
            bool all_ok = true;
            for (const auto& c : checks) all_ok = all_ok && c.passed;
            if (cfg.format == Format::json) {
                ordered_json j = base_json(p);
                j["verified"] = all_ok;
                out << j.dump() << "\n";
            } else {
                for (const auto& c : checks) {
                    out << (c.passed ? "ok   " : "FAIL ") << c.name << ": " << c.detail << "\n";
                }
                out << (all_ok ? "verified" : "verification FAILED") << "\n";
            }
            return all_ok ? 0 : 1;
        }

        case Command::all: {
            const Basis basis = enumerate_basis(p);
            const BitMatrix m = obtain_matrix(p, basis, cfg, err);
            const RankProfile rp = RankProfile::from_matrix(m);
            const FinalTypeConstraints fc = derive_constraints(rp);
            const int64_t points1 = point_count_zeta(p.m, 1);
            const auto checks = run_verify_checks(p, basis, m, cfg, err);
            bool all_ok = true;
            for (const auto& c : checks) all_ok = all_ok && c.passed;

            if (cfg.format == Format::json) {
                ordered_json j = base_json(p);
                j["a_number"] = rp.a_number();
                j["rank_profile"] = rp.ranks;
                ordered_json fixed = ordered_json::object();
                for (const auto& [i, v] : fc.fixed) fixed[std::to_string(i)] = v;
                j["nu_fixed"] = std::move(fixed);
                j["points"] = ordered_json::object({{"1", points1}});
                j["verified"] = all_ok;
                out << j.dump() << "\n";
            } else {
                out << "Suzuki curve S_" << p.m << ": q0=" << p.q0 << " q=" << p.q
                    << " g=" << p.g << "\n";
                out << "a-number: " << rp.a_number() << "\n";
                out << "rank profile:";
                for (int64_t r : rp.ranks) out << ' ' << r;
                out << "\n#S_" << p.m << "(F_q) = " << points1 << "\n";
                out << "fixed final-type values: " << fc.fixed.size() << " of " << p.g << "\n";
                for (const auto& c : checks) {
                    out << (c.passed ? "ok   " : "FAIL ") << c.name << ": " << c.detail << "\n";
                }
                out << (all_ok ? "verified" : "verification FAILED") << "\n";
            }
            return all_ok ? 0 : 1;
        }
    }
    throw usage_error("unknown command");
}

} // namespace

std::filesystem::path cache_file_path(const std::filesystem::path& dir, int m) {
    return dir / ("suzuki-cartier-m" + std::to_string(m) + ".szcm");
}

std::optional<std::string> cache_dir_from_env() {
    if (const char* env = std::getenv("SUZUKI_CARTIER_CACHE_DIR"); env && *env)
        return std::string(env);
    return std::nullopt;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        return run_impl(cfg, out, err);
    } catch (const usage_error& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const verification_failure& e) {
        err << "verification failure: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace suzuki::cli
