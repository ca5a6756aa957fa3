#include "cupn/cli.hpp"

#include "cupn/counting.hpp"
#include "cupn/cup.hpp"
#include "cupn/io.hpp"
#include "cupn/steenrod.hpp"
#include "cupn/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <optional>
#include <ostream>

namespace cupn::cli {

namespace {

struct RingOverride {
    std::string name;
    std::int64_t modulus = 0;

    std::optional<Ring> resolve() const {
        if (name.empty()) return std::nullopt;
        if (name == "Z") return Ring::integers();
        if (name == "Z2") return Ring::z2();
        if (modulus == 0) throw ValidationError("--ring Zp needs --modulus");
        return Ring::integers_mod(modulus);
    }
};

// Reference values for the benchmark rows, in table1() order.
struct ReferenceRow {
    const char* full;
    const char* bounded;
};
constexpr ReferenceRow kReference[] = {
    {"20", "6"},
    {"28", "12"},
    {"11628", "1260"},
    {"18009460", "621621"},
    {"4925156775", "68222616"},
    {"162699437009655", "970224"},
    {"225368761961739396", "33701394635724816"},
    {"163331343055757216550", "97902024"},
};

SimplicialComplex load_complex(const std::string& path, std::ostream& err) {
    SimplicialComplex K = io::complex_from_json(io::read_json_file(path));
    if (K.dropped_entries() > 0) {
        err << "warning: " << path << ": dropped " << K.dropped_entries()
            << " duplicate or non-maximal simplices\n";
    }
    return K;
}

Cochain load_cochain(const std::string& path, const RingOverride& ring) {
    Cochain c = io::cochain_from_json(io::read_json_file(path));
    if (const auto r = ring.resolve()) {
        Cochain converted(c.degree(), *r);
        for (const auto& [x, value] : c.support()) converted.set(x, r->from_integer(value.value()));
        return converted;
    }
    return c;
}

void add_ring_options(CLI::App* cmd, RingOverride& ring) {
    cmd->add_option("--ring", ring.name, "Reinterpret cochain coefficients in this ring")
        ->check(CLI::IsMember({"Z", "Z2", "Zp"}));
    cmd->add_option("--modulus", ring.modulus, "Modulus for --ring Zp")
        ->check(CLI::Range(std::int64_t{2}, std::numeric_limits<std::int64_t>::max()));
}

const char* yes_no(bool v) { return v ? "yes" : "no"; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Chain-level cup-n products and Steenrod squares on simplicial complexes"};
    app.name("cupn");
    app.require_subcommand(1);

    bool json = false;
    unsigned threads = 1;
    RingOverride ring;
    std::string complex_path, c_path, cprime_path;
    int degree_arg = 0;

    auto* cup = app.add_subcommand("cup", "c cup_n c' as a formal sum of simplices");
    cup->add_option("complex", complex_path, "Complex file")->required();
    cup->add_option("c", c_path, "First cochain file")->required();
    cup->add_option("cprime", cprime_path, "Second cochain file")->required();
    cup->add_option("n", degree_arg, "Index n of the cup-n product")
        ->required()
        ->check(CLI::NonNegativeNumber);
    cup->add_flag("--json", json, "Machine-readable output");
    cup->add_option("--threads", threads, "Worker count")->check(CLI::Range(1U, 1024U));
    add_ring_options(cup, ring);

    bool check_class = false;
    auto* sqcmd = app.add_subcommand("sq", "Chain-level Steenrod square Sq^i over Z2");
    sqcmd->add_option("complex", complex_path, "Complex file")->required();
    sqcmd->add_option("c", c_path, "Cocycle file")->required();
    sqcmd->add_option("i", degree_arg, "Square index i")->required()->check(CLI::NonNegativeNumber);
    sqcmd->add_flag("--check-class", check_class, "Report whether the result is a coboundary");
    sqcmd->add_flag("--json", json, "Machine-readable output");
    sqcmd->add_option("--threads", threads, "Worker count")->check(CLI::Range(1U, 1024U));
    add_ring_options(sqcmd, ring);

    long long p = 0, q = 0, n = 0;
    auto* count = app.add_subcommand("count", "Summand counts of c_p cup_n c_q");
    count->add_option("p", p)->required()->check(CLI::NonNegativeNumber);
    count->add_option("q", q)->required()->check(CLI::NonNegativeNumber);
    count->add_option("n", n)->required()->check(CLI::NonNegativeNumber);
    count->add_flag("--json", json, "Machine-readable output");

    auto* bench = app.add_subcommand("bench", "Recompute the summand-count benchmark table");
    bench->add_flag("--json", json, "Machine-readable output");

    bool class_check = false;
    auto* verify = app.add_subcommand("verify", "Cocycle and coboundary checks");
    verify->add_option("complex", complex_path, "Complex file")->required();
    verify->add_option("c", c_path, "Cochain file")->required();
    verify->add_flag("--class", class_check, "Also decide coboundary membership (Z2 only)");
    verify->add_flag("--json", json, "Machine-readable output");
    add_ring_options(verify, ring);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kInvalidInput;
    }

    try {
        if (cup->parsed()) {
            const SimplicialComplex K = load_complex(complex_path, err);
            const Cochain c = load_cochain(c_path, ring);
            const Cochain cprime = load_cochain(cprime_path, ring);
            const FormalSum result = cup_product(c, cprime, degree_arg, K, CupOptions{threads});
            if (json) {
                io::Json doc = io::formal_sum_to_json(result);
                doc["degree"] = c.degree() + cprime.degree() - degree_arg;
                out << doc.dump(2) << '\n';
            } else {
                out << io::format_terms(result);
            }
            return kOk;
        }
        if (sqcmd->parsed()) {
            const SimplicialComplex K = load_complex(complex_path, err);
            const Cochain c = load_cochain(c_path, ring);
            const FormalSum result = sq(degree_arg, c, K, SqOptions{CocycleCheck::Direct, threads});
            std::optional<bool> coboundary;
            if (check_class) {
                coboundary = is_coboundary_mod2(
                    Cochain::from_formal_sum(c.degree() + degree_arg, result), K);
            }
            if (json) {
                io::Json doc = io::formal_sum_to_json(result);
                doc["degree"] = c.degree() + degree_arg;
                if (coboundary) doc["coboundary"] = *coboundary;
                out << doc.dump(2) << '\n';
            } else {
                for (const auto& [z, coeff] : result.terms()) out << z << '\n';
                if (coboundary) out << "coboundary: " << (*coboundary ? "true" : "false") << '\n';
            }
            return kOk;
        }
        if (count->parsed()) {
            const Integer full = count_oracle(p, q, n);
            const Integer bounded = count_bounded(p, q, n);
            if (json) {
                out << io::Json{{"p", p},
                                {"q", q},
                                {"n", n},
                                {"unrestricted", io::integer_to_json(full)},
                                {"bounded", io::integer_to_json(bounded)}}
                           .dump(2)
                    << '\n';
            } else {
                out << "thm2: " << full << "  thm3: " << bounded << '\n';
            }
            return kOk;
        }
        if (bench->parsed()) {
            const auto rows = table1();
            bool all_match = true;
            io::Json doc = io::Json::array();
            for (std::size_t k = 0; k < rows.size(); ++k) {
                const auto& row = rows[k];
                const bool match = row.full.str() == kReference[k].full &&
                                   row.bounded.str() == kReference[k].bounded;
                all_match = all_match && match;
                if (json) {
                    doc.push_back({{"label", row.label},
                                   {"unrestricted", io::integer_to_json(row.full)},
                                   {"bounded", io::integer_to_json(row.bounded)},
                                   {"match", match}});
                } else {
                    out << std::left << std::setw(18) << row.label << std::right << std::setw(24)
                        << row.full.str() << std::setw(20) << row.bounded.str() << "  "
                        << (match ? "ok" : "MISMATCH") << '\n';
                }
                if (!match) {
                    err << "error: " << row.label << " computed " << row.full << " / "
                        << row.bounded << ", expected " << kReference[k].full << " / "
                        << kReference[k].bounded << '\n';
                }
            }
            if (json) out << doc.dump(2) << '\n';
            return all_match ? kOk : kTableMismatch;
        }
        if (verify->parsed()) {
            const SimplicialComplex K = load_complex(complex_path, err);
            const Cochain c = load_cochain(c_path, ring);
            const bool cocycle = is_cocycle(c, K);
            std::optional<bool> coboundary;
            if (class_check) {
                if (!c.ring().is_z2()) {
                    throw RingMismatch("--class needs a Z2 cochain, got " + c.ring().name());
                }
                coboundary = cocycle && is_coboundary_mod2(c, K);
            }
            if (json) {
                io::Json doc{{"cocycle", cocycle}};
                if (coboundary) doc["coboundary"] = *coboundary;
                out << doc.dump(2) << '\n';
            } else {
                out << "cocycle: " << yes_no(cocycle);
                if (coboundary) out << ", coboundary: " << yes_no(*coboundary);
                out << '\n';
            }
            return kOk;
        }
    } catch (const NotACocycle& e) {
        err << "error: " << e.what() << '\n';
        return kNotACocycle;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const SemanticError& e) {
        err << "error: " << e.what() << '\n';
        return kSemanticError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    }
    return kInvalidInput;
}

}  // namespace cupn::cli
