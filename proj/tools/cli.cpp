/*
   Copyright 2026 The Cyclonomy Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <sstream>

#include <cyclonomy.hpp>

namespace cyclonomy::cli {

using nlohmann::json;

json CommandResult::to_json() const
{
    json out = {{"command", command}, {"ok", ok}};
    if (ok)
        out["data"] = data;
    else if (error)
        out["error"] = {{"code", error->code}, {"message", error->message}};
    return out;
}

std::string CommandResult::render() const
{
    if (help)
        return *help;
    return pretty ? to_json().dump(2) : to_json().dump();
}

namespace {

struct UsageError {
    std::string code;
    std::string message;
};

json element_json(const CycInt& a) { return coefficient_strings(a); }
json element_json(const CycRat& a) { return coefficient_strings(a); }

json report_json(const RegularityReport& r)
{
    json pairs = json::array();
    for (const auto& [p, n] : r.irregular_pairs)
        pairs.push_back({p, n});
    return {{"p", r.p}, {"regular", r.regular}, {"irregular_pairs", pairs}};
}

/// Decimal rendering of q with `digits` fractional digits, rounded toward
/// -infinity (down) or +infinity (up).
std::string decimal(const Rational& q, unsigned digits, bool up)
{
    const Integer scale = pow(Integer(10), digits);
    const Rational scaled = q * Rational(scale);
    Integer n;
    if (up)
        mpz_cdiv_q(n.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    else
        mpz_fdiv_q(n.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    const bool negative = n < 0;
    std::string s = Integer(abs(n)).get_str();
    if (s.size() <= digits)
        s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
    return negative ? "-" + s : s;
}

// Bernoulli cache: JSON array of [n, numerator, denominator].
std::vector<BernoulliValue> load_cache(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        return {};
    std::vector<BernoulliValue> out;
    try {
        const json doc = json::parse(in);
        for (const auto& entry : doc) {
            out.push_back({entry.at(0).get<std::uint64_t>(), Integer(entry.at(1).get<std::string>()),
                           Integer(entry.at(2).get<std::string>())});
        }
    } catch (const std::exception&) {
        // Unreadable caches are ignored; values are recomputed.
        return {};
    }
    return out;
}

void save_cache(const std::string& path, const BernoulliTable& table)
{
    json doc = json::array();
    for (const auto& v : table.snapshot())
        doc.push_back({v.n, to_string(v.numerator), to_string(v.denominator)});
    std::ofstream out(path);
    out << doc.dump() << '\n';
}

FieldContext context_for(std::uint64_t p) { return FieldContext::create(p); }

std::vector<UnitElem> default_generators(const FieldContext& ctx)
{
    std::vector<UnitElem> gens{as_unit(CycInt::zeta_power(ctx, 1))};
    for (std::uint64_t k = 2; k <= (ctx.p() - 1) / 2; ++k)
        gens.push_back(cyclotomic_unit(ctx, k));
    return gens;
}

} // namespace

CommandResult run(const std::vector<std::string>& args, const std::optional<std::string>& default_cache)
{
    CommandResult result;

    CLI::App app{"Exact arithmetic in the p-th cyclotomic field", "cyclonomy"};
    app.require_subcommand(1);
    app.fallthrough();
    bool pretty = false;
    std::string cache_path = default_cache.value_or("");
    app.add_flag("--json", "Compact JSON output (default)");
    app.add_flag("--pretty", pretty, "Indented JSON output");
    app.add_option("--cache", cache_path, "Bernoulli cache file");

    std::uint64_t p = 0, q = 0, n_arg = 0, lo = 0, hi = 0, bound = 0;
    bool fail_on_irregular = false;
    std::string elem_x, elem_y, elem_eta, elem_unit, elem_pos;
    std::vector<std::string> gens_text, triple_text;
    std::function<json()> action;
    std::string command;

    BernoulliTable table;
    bool uses_table = false;

    auto on = [&](CLI::App* sub, std::function<json()> fn) {
        sub->callback([&, sub, fn = std::move(fn)] {
            command = sub->get_name();
            action = fn;
        });
    };

    auto* regular = app.add_subcommand("regular", "Regularity of an odd prime via Bernoulli numerators");
    regular->add_option("p", p, "Odd prime")->required();
    regular->add_flag("--fail-on-irregular", fail_on_irregular, "Exit 1 when the prime is irregular");
    on(regular, [&] {
        uses_table = true;
        auto report = is_regular(p, table);
        if (fail_on_irregular && !report.regular)
            throw UsageError{"FoundIrregular", std::to_string(p) + " is irregular"};
        return report_json(report);
    });

    auto* range = app.add_subcommand("regular-range", "Regularity reports for every odd prime in [a, b]");
    range->add_option("a", lo, "Lower end")->required();
    range->add_option("b", hi, "Upper end")->required();
    range->add_flag("--fail-on-irregular", fail_on_irregular, "Exit 1 when any prime is irregular");
    on(range, [&] {
        uses_table = true;
        json out = json::array();
        bool any_irregular = false;
        for (const auto& r : regularity_range(lo, hi, table)) {
            any_irregular = any_irregular || !r.regular;
            out.push_back(report_json(r));
        }
        if (fail_on_irregular && any_irregular)
            throw UsageError{"FoundIrregular", "irregular primes in range"};
        return out;
    });

    auto* bern = app.add_subcommand("bernoulli", "Exact Bernoulli number B_n");
    bern->add_option("n", n_arg, "Index")->required();
    on(bern, [&] {
        uses_table = true;
        auto b = table.get(n_arg);
        return json{{"n", b.n}, {"numerator", to_string(b.numerator)}, {"denominator", to_string(b.denominator)}};
    });

    auto* classno = app.add_subcommand("class-number", "Certify class number 1 (p in {3, 5, 7})");
    classno->add_option("-p", p, "Odd prime")->required();
    on(classno, [&] {
        auto cert = class_number_small(context_for(p));
        json checked = json::array();
        for (const auto& c : cert.primes_checked)
            checked.push_back({{"q", c.q}, {"f", c.f}, {"g", c.g}, {"principal_witness", element_json(c.witness)}});
        return json{{"p", cert.p},
                    {"minkowski_lo", decimal(cert.minkowski.lo, 15, false)},
                    {"minkowski_hi", decimal(cert.minkowski.hi, 15, true)},
                    {"primes_checked", checked},
                    {"class_number", cert.class_number}};
    });

    auto* split = app.add_subcommand("split", "Factorization shape of a rational prime");
    split->add_option("-p", p, "Odd prime")->required();
    split->add_option("-q", q, "Rational prime")->required();
    on(split, [&] {
        auto s = prime_split(context_for(p), q);
        json norms = json::array();
        json factors = json::array();
        for (std::size_t i = 0; i < s.primes.size(); ++i) {
            norms.push_back(to_string(s.primes[i].norm()));
            factors.push_back(s.factors[i]);
        }
        return json{{"p", p}, {"q", s.q}, {"e", s.e}, {"f", s.f}, {"g", s.g}, {"norms", norms}, {"factors", factors}};
    });

    auto* flt = app.add_subcommand("flt-search", "Search a^n + b^n = c^n with c <= bound");
    flt->add_option("-p", p, "Exponent (>= 2)")->required();
    flt->add_option("--bound", bound, "Search bound")->required();
    on(flt, [&] {
        if (p < 2 || bound < 1)
            throw UsageError{"OutOfRange", "need exponent >= 2 and bound >= 1"};
        json sols = json::array();
        for (const auto& t : flt_search(p, bound))
            sols.push_back({t.a.get_str(), t.b.get_str(), t.c.get_str()});
        return json{{"p", p}, {"bound", bound}, {"solutions", sols}};
    });

    auto* classify = app.add_subcommand("classify", "Case I / Case II / degenerate split of a triple");
    classify->add_option("-p", p, "Odd prime")->required();
    classify->add_option("triple", triple_text, "a b c")->expected(3)->required();
    on(classify, [&] {
        context_for(p);
        FermatTriple t{Integer(), Integer(), Integer(), p};
        Integer* slots[] = {&t.a, &t.b, &t.c};
        for (std::size_t i = 0; i < 3; ++i)
            if (slots[i]->set_str(triple_text[i], 10) != 0)
                throw UsageError{"ParseError", "not an integer: '" + triple_text[i] + "'"};
        return json{{"p", p},
                    {"a", to_string(t.a)},
                    {"b", to_string(t.b)},
                    {"c", to_string(t.c)},
                    {"case", std::string(to_string(classify_case(t, p)))}};
    });

    auto* qtab = app.add_subcommand("qtable", "q(eta) = (x + eta y) / lambda and residues mod lambda");
    qtab->add_option("-p", p, "Odd prime")->required();
    qtab->add_option("--x", elem_x, "Element x")->required();
    qtab->add_option("--y", elem_y, "Element y")->required();
    on(qtab, [&] {
        auto ctx = context_for(p);
        auto x = parse_integral_element(ctx, elem_x);
        auto y = parse_integral_element(ctx, elem_y);
        json rows = json::array();
        for (const auto& r : q_table(x, y))
            rows.push_back({{"m", r.m}, {"q", element_json(r.q)}, {"residue", r.residue}});
        json zero = nullptr;
        if (reduce_mod_lambda(y) != 0)
            zero = eta_zero(x, y);
        return json{{"p", p}, {"rows", rows}, {"eta_zero", zero}};
    });

    auto* h90 = app.add_subcommand("hilbert90", "Witness eps with eta sigma(eps) = eps for a norm-one eta");
    h90->add_option("-p", p, "Odd prime")->required();
    h90->add_option("--eta", elem_eta, "Norm-one element (rational coefficients allowed)")->required();
    on(h90, [&] {
        auto ctx = context_for(p);
        auto eta = parse_element(ctx, elem_eta);
        auto eps = hilbert90_witness(eta);
        GaloisGroup group(ctx);
        const bool verified = eta * group.apply(1, eps) == eps;
        json integral = nullptr;
        if (is_integral(eta))
            integral = element_json(hilbert90_integral(eta));
        return json{{"p", p},
                    {"generator", group.generator()},
                    {"epsilon", element_json(eps)},
                    {"epsilon_integral", integral},
                    {"verified", verified}};
    });

    auto* kummer = app.add_subcommand("kummer-check", "Bounded search for a p-th root of a unit");
    kummer->add_option("-p", p, "Odd prime")->required();
    kummer->add_option("--unit", elem_unit, "Unit")->required();
    kummer->add_option("--gen", gens_text, "Generator unit (repeatable; defaults to zeta and cyclotomic units)");
    kummer->add_option("--bound", bound, "Exponent bound per generator")->default_val(2);
    on(kummer, [&] {
        auto ctx = context_for(p);
        auto u = as_unit(parse_integral_element(ctx, elem_unit));
        std::vector<UnitElem> gens;
        for (const auto& g : gens_text)
            gens.push_back(as_unit(parse_integral_element(ctx, g)));
        if (gens.empty())
            gens = default_generators(ctx);
        json gens_json = json::array();
        for (const auto& g : gens)
            gens_json.push_back(element_json(g.value()));
        auto cong = congruent_integer_mod_p(u);
        auto root = kummer_search(u, gens, bound);
        return json{{"p", p},
                    {"unit", element_json(u.value())},
                    {"congruent_integer", cong ? json(*cong) : json(nullptr)},
                    {"generators", gens_json},
                    {"bound", bound},
                    {"found", root.has_value()},
                    {"root", root ? element_json(root->value()) : json(nullptr)}};
    });

    auto* decomp = app.add_subcommand("unit-decompose", "Write a unit as zeta^n times a real unit");
    decomp->add_option("-p", p, "Odd prime")->required();
    decomp->add_option("--unit", elem_unit, "Unit")->required();
    on(decomp, [&] {
        auto ctx = context_for(p);
        auto d = decompose_real(as_unit(parse_integral_element(ctx, elem_unit)));
        return json{{"p", p}, {"n", d.n}, {"x", element_json(d.x)}};
    });

    for (const char* name : {"norm", "trace"}) {
        const bool is_norm = std::string(name) == "norm";
        auto* sub = app.add_subcommand(name, is_norm ? "Norm down to Q" : "Trace down to Q");
        sub->add_option("-p", p, "Odd prime")->required();
        sub->add_option("element", elem_pos, "Element (use -- before negative coefficients)")->required();
        on(sub, [&, is_norm] {
            auto ctx = context_for(p);
            auto a = parse_element(ctx, elem_pos);
            const Rational v = is_norm ? norm(a) : trace(a);
            return json{{"p", p}, {"value", to_string(v)}};
        });
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        result.ok = true;
        result.help = app.help();
        result.command = "help";
        return result;
    } catch (const CLI::ParseError& e) {
        result.command = command.empty() ? "cyclonomy" : command;
        result.error = ErrorInfo{"UsageError", e.what()};
        result.exit_code = kExitUsage;
        result.pretty = pretty;
        return result;
    }

    result.command = command;
    result.pretty = pretty;
    if (!cache_path.empty() && (command == "bernoulli" || command.rfind("regular", 0) == 0))
        table.seed(load_cache(cache_path));

    try {
        result.data = action();
        result.ok = true;
        result.exit_code = kExitOk;
    } catch (const UsageError& e) {
        result.error = ErrorInfo{e.code, e.message};
        result.exit_code = e.code == "FoundIrregular" ? kExitDomain : kExitUsage;
    } catch (const Error& e) {
        result.error = ErrorInfo{std::string(to_string(e.code())), e.what()};
        const bool malformed = e.code() == Errc::ParseError || e.code() == Errc::BadLength;
        result.exit_code = malformed ? kExitUsage : kExitDomain;
    }
    if (uses_table && !cache_path.empty())
        save_cache(cache_path, table);
    return result;
}

} // namespace cyclonomy::cli
