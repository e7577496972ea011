#include "cli.hpp"

#include <CLI11.hpp>

#include <functional>
#include <iomanip>
#include <sstream>

#include "schurcalc/acceptance.hpp"
#include "schurcalc/serialization.hpp"

namespace schurcalc::cli {

namespace {

struct Options {
    std::string format = "text";

    // schur
    int rank = 0;
    std::string w1, w2;
    Int by = 0;
    int power = 0;

    // geometry
    int d = 0;
    int k = 0;
    std::string q_weight, k_weight;
    std::string alpha, beta;
    int q = -1;
    bool middle = false;
    bool split = false;
    bool sos = false;
    bool verify = false;
    int d_max = 12;
};

std::string exponent_string(const std::vector<Int>& e) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
    return s;
}

bool json_mode(const Options& o) { return o.format == "json"; }

Weight weight_arg(const std::string& text, int rank = 0) {
    Weight w = parse_weight(text);
    if (rank > 0 && w.rank() != rank) w = pad_to_rank(w, rank);
    return w;
}

void print_rep(std::ostream& out, const Options& o, const RepElement& a) {
    if (json_mode(o)) {
        Json j = to_json(a);
        j["dim"] = big_to_json(dimension(a));
        out << j.dump() << "\n";
    } else {
        out << to_string(a) << "\n" << "dim " << dimension(a) << "\n";
    }
}

std::string describe_condition(const Condition& c) {
    std::ostringstream os;
    os << "  q=" << c.q << "  ";
    if (c.k_weight) os << "K" << *c.k_weight << " x ";
    os << "Q^vee" << c.weight << ": " << to_string(c.outcome);
    if (c.must_vanish && !c.outcome.is_zero()) os << "  <-- required to vanish";
    return os.str();
}

int print_report(std::ostream& out, const Options& o, const VerificationReport& r) {
    if (json_mode(o)) {
        out << to_json(r).dump() << "\n";
    } else {
        out << r.check << " d=" << r.d;
        if (r.k) out << " k=" << *r.k;
        if (r.alpha) out << " alpha=" << *r.alpha;
        if (r.beta) out << " beta=" << *r.beta;
        out << ": " << (r.verdict ? "PASS" : "FAIL") << "\n";
        out << "  hom dimension " << r.hom_dimension << "\n";
        for (const Condition& c : r.conditions) out << describe_condition(c) << "\n";
        if (r.total) out << "  total (q=0): " << to_string(*r.total) << "\n";
        if (!r.note.empty()) out << "  note: " << r.note << "\n";
    }
    return r.verdict ? kOk : kFailed;
}

int print_reports(std::ostream& out, const Options& o, const std::vector<VerificationReport>& reports) {
    bool all = true;
    if (json_mode(o)) {
        Json arr = Json::array();
        for (const auto& r : reports) {
            arr.push_back(to_json(r));
            all = all && r.verdict;
        }
        out << Json{{"verdict", all ? "pass" : "fail"}, {"reports", arr}}.dump() << "\n";
    } else {
        for (const auto& r : reports) {
            print_report(out, o, r);
            all = all && r.verdict;
        }
    }
    return all ? kOk : kFailed;
}

int cmd_bwb(std::ostream& out, const Options& o) {
    const Weight delta = weight_arg(o.q_weight);
    if (delta.rank() != o.k) throw std::invalid_argument("--q-weight must have k entries");
    const Weight gamma = o.k_weight.empty() ? Weight::trivial(o.d - o.k) : weight_arg(o.k_weight);
    const BwbOutcome res = bwb_single(o.d, o.k, gamma, delta);
    if (json_mode(o)) {
        out << Json{{"d", o.d}, {"k", o.k}, {"gamma", to_json(gamma)}, {"delta", to_json(delta)}, {"outcome", to_json(res)}}.dump()
            << "\n";
    } else {
        out << to_string(res) << "\n";
    }
    return kOk;
}

int cmd_wedge(std::ostream& out, const Options& o) {
    if (o.middle) {
        print_rep(out, o, wedge2_middle());
    } else if (o.split) {
        const MiddleSplit s = middle_split();
        if (json_mode(o))
            out << Json{{"nprime", to_json(s.nprime)}, {"q_dual", to_json(s.q_dual)}}.dump() << "\n";
        else
            out << "Q (x) S^2 Q^vee = " << to_string(s.nprime) << " + " << to_string(s.q_dual) << "\n";
    } else {
        if (o.q < 0 || o.q > 4) throw std::invalid_argument("wedge needs --q in 0..4, --middle or --split");
        print_rep(out, o, wedge_nprime(o.q));
    }
    return kOk;
}

int cmd_enumerate(std::ostream& out, const Options& o) {
    const auto labels = o.sos ? enumerate_sos(o.d) : enumerate_ff(o.d);
    if (json_mode(o)) {
        Json arr = Json::array();
        for (const auto& l : labels) arr.push_back(to_json(l.alpha()));
        out << Json{{"d", o.d}, {"kind", o.sos ? "sos" : "ff"}, {"count", labels.size()}, {"labels", arr}}.dump() << "\n";
    } else {
        out << (o.sos ? "semi-orthogonal sequence" : "fully faithful labels") << " for d=" << o.d << ": "
            << labels.size() << "\n";
        for (const auto& l : labels) out << "  " << l.alpha() << "  lambda=" << l.lambda() << "\n";
    }
    return kOk;
}

int cmd_kummer(std::ostream& out, const Options& o) {
    const BigInt count = kummer_count(o.d);
    if (json_mode(o))
        out << Json{{"d", o.d}, {"count", big_to_json(count)}}.dump() << "\n";
    else
        out << count << "\n";
    return kOk;
}

int cmd_verify(std::ostream& out, const Options& o) {
    if (o.d_max < 3) throw std::invalid_argument("--d-max must be at least 3");
    const auto results = run_acceptance(o.d_max);
    bool all = true;
    for (const auto& r : results) all = all && r.passed;
    if (json_mode(o)) {
        Json arr = Json::array();
        for (const auto& r : results)
            arr.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"checks", r.checks}, {"detail", r.detail}});
        out << Json{{"d_max", o.d_max}, {"verdict", all ? "pass" : "fail"}, {"criteria", arr}}.dump() << "\n";
    } else {
        for (const auto& r : results)
            out << std::setw(2) << r.id << "  " << (r.passed ? "PASS" : "FAIL") << "  " << std::left << std::setw(52)
                << r.name << std::right << "  " << r.detail << "\n";
        out << (all ? "all criteria pass" : "some criteria FAILED") << "\n";
    }
    return all ? kOk : kFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Schur functor calculus and Borel-Weil-Bott verification on Grassmannians", "schurcalc"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));

    std::function<int()> action;

    auto* schur = app.add_subcommand("schur", "Representation ring operations");
    schur->require_subcommand(1);
    auto* s_tensor = schur->add_subcommand("tensor", "Littlewood-Richardson product of two weights");
    s_tensor->add_option("--rank", o.rank, "Rank (defaults to the weight length)");
    s_tensor->add_option("a", o.w1)->required();
    s_tensor->add_option("b", o.w2)->required();
    s_tensor->callback([&] {
        action = [&] {
            print_rep(out, o, tensor(RepElement(weight_arg(o.w1, o.rank)), RepElement(weight_arg(o.w2, o.rank))));
            return int{kOk};
        };
    });
    auto unary = [&](const char* name, const char* help, std::function<RepElement(const RepElement&)> f) {
        auto* sub = schur->add_subcommand(name, help);
        sub->add_option("--rank", o.rank, "Rank (defaults to the weight length)");
        sub->add_option("w", o.w1)->required();
        return std::pair{sub, f};
    };
    for (auto [sub, f] : {unary("dual", "Dual representation", [](const RepElement& a) { return dual(a); }),
                          unary("twist", "Determinant twist by --by", [&](const RepElement& a) { return det_twist(a, o.by); }),
                          unary("sym", "Symmetric power --power", [&](const RepElement& a) { return sym_power(a, o.power); }),
                          unary("wedge", "Exterior power --power", [&](const RepElement& a) { return ext_power(a, o.power); })}) {
        if (sub->get_name() == "twist") sub->add_option("--by", o.by)->required();
        if (sub->get_name() == "sym" || sub->get_name() == "wedge") sub->add_option("--power", o.power)->required();
        sub->callback([&, f] {
            action = [&, f] {
                print_rep(out, o, f(RepElement(weight_arg(o.w1, o.rank))));
                return int{kOk};
            };
        });
    }
    auto* s_dim = schur->add_subcommand("dim", "Weyl dimension of a weight");
    s_dim->add_option("--rank", o.rank);
    s_dim->add_option("w", o.w1)->required();
    s_dim->callback([&] {
        action = [&] {
            const BigInt n = weyl_dim(weight_arg(o.w1, o.rank));
            if (json_mode(o))
                out << Json{{"dim", big_to_json(n)}}.dump() << "\n";
            else
                out << n << "\n";
            return int{kOk};
        };
    });
    auto* s_char = schur->add_subcommand("char", "Character polynomial of a weight");
    s_char->add_option("--rank", o.rank);
    s_char->add_option("w", o.w1)->required();
    s_char->callback([&] {
        action = [&] {
            const CharPoly c = char_of(weight_arg(o.w1, o.rank));
            Json terms = Json::array();
            for (const auto& [e, coeff] : c.terms()) terms.push_back({{"exponent", e}, {"coeff", coeff}});
            if (json_mode(o)) {
                out << Json{{"rank", c.rank()}, {"terms", terms}}.dump() << "\n";
            } else {
                for (auto it = c.terms().rbegin(); it != c.terms().rend(); ++it)
                    out << it->second << " * x^(" << exponent_string(it->first) << ")\n";
            }
            return int{kOk};
        };
    });

    auto* bwb = app.add_subcommand("bwb", "Borel-Weil-Bott for Sigma^gamma K (x) Sigma^delta Q^vee on G(k,d)");
    bwb->add_option("--d", o.d)->required();
    bwb->add_option("--k", o.k)->required();
    bwb->add_option("--q-weight", o.q_weight, "delta, weight of Q^vee (k entries)")->required();
    bwb->add_option("--k-weight", o.k_weight, "gamma, weight of K (d-k entries; default trivial)");
    bwb->callback([&] { action = [&] { return cmd_bwb(out, o); }; });

    auto* wedge = app.add_subcommand("wedge", "Exterior powers of the restricted normal bundle N'");
    wedge->add_option("--q", o.q, "Lambda^q N', 0 <= q <= 4");
    wedge->add_flag("--middle", o.middle, "Lambda^2 (S^2 Q^vee (x) Q)");
    wedge->add_flag("--split", o.split, "Splitting of Q (x) S^2 Q^vee");
    wedge->callback([&] { action = [&] { return cmd_wedge(out, o); }; });

    auto* exc = app.add_subcommand("check-exc", "Exceptionality of Sigma^alpha Q^vee on G(2,d)");
    exc->add_option("--d", o.d)->required();
    exc->add_option("--alpha", o.alpha)->required();
    exc->callback([&] { action = [&] { return print_report(out, o, check_exceptional(weight_arg(o.alpha, 2), o.d)); }; });

    auto* ff = app.add_subcommand("check-ff", "Fully-faithfulness conditions for the kernel Sigma^alpha Q^vee");
    ff->add_option("--d", o.d)->required();
    ff->add_option("--alpha", o.alpha)->required();
    ff->callback([&] { action = [&] { return print_report(out, o, check_fully_faithful(weight_arg(o.alpha, 2), o.d)); }; });

    auto* so = app.add_subcommand("check-so", "Semi-orthogonality conditions for alpha before beta");
    so->add_option("--d", o.d)->required();
    so->add_option("--alpha", o.alpha)->required();
    so->add_option("--beta", o.beta)->required();
    so->callback([&] {
        action = [&] {
            return print_report(out, o, check_semiorthogonal(weight_arg(o.alpha, 2), weight_arg(o.beta, 2), o.d));
        };
    });

    auto* cot = app.add_subcommand("check-cotangent", "Ext^*(Omega_G, Omega_G) on G(k,d)");
    cot->add_option("--d", o.d)->required();
    cot->add_option("--k", o.k)->required();
    cot->callback([&] { action = [&] { return print_report(out, o, check_cotangent_simple(o.k, o.d)); }; });

    auto* en = app.add_subcommand("enumerate", "Fully faithful labels, or the semi-orthogonal sequence with --sos");
    en->add_option("--d", o.d)->required();
    en->add_flag("--sos", o.sos);
    en->add_flag("--verify", o.verify, "With --sos: run check-so on every ordered pair");
    en->callback([&] {
        action = [&] {
            if (o.sos && o.verify) {
                int rc = cmd_enumerate(out, o);
                int checks = print_reports(out, o, verify_sos(o.d));
                return std::max(rc, checks);
            }
            return cmd_enumerate(out, o);
        };
    });

    auto* km = app.add_subcommand("kummer", "Length of the exceptional sequence on the generalized Kummer K_3(A)");
    km->add_option("--d", o.d)->required();
    km->callback([&] { action = [&] { return cmd_kummer(out, o); }; });

    auto* vp = app.add_subcommand("verify-paper", "Run every acceptance criterion and print a table");
    vp->add_option("--d-max", o.d_max, "Upper bound on d for the ranged criteria");
    vp->callback([&] { action = [&] { return cmd_verify(out, o); }; });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kUsage;
    }

    try {
        return action ? action() : int{kUsage};
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kFailed;
    }
}

}  // namespace schurcalc::cli
