#include "orbit_duality/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "orbit_duality/duality.hpp"
#include "orbit_duality/errors.hpp"
#include "orbit_duality/exceptional.hpp"
#include "orbit_duality/oracles.hpp"
#include "orbit_duality/rs_insertion.hpp"
#include "orbit_duality/weights.hpp"

namespace orbit_duality::verify {

namespace {

constexpr TypeLetter kAll[] = {TypeLetter::A, TypeLetter::B, TypeLetter::C, TypeLetter::D};
constexpr TypeLetter kBCD[] = {TypeLetter::B, TypeLetter::C, TypeLetter::D};

std::string letter(TypeLetter x) { return std::string(1, to_char(x)); }

// Records one check; exceptions count as failures with their message.
template <class Fn>
void check(SuiteReport& r, const std::string& input, Fn&& fn) {
    ++r.checks;
    try {
        std::string detail;
        if (!fn(detail)) r.failures.push_back(input + (detail.empty() ? "" : ": " + detail));
    } catch (const std::exception& e) {
        r.failures.push_back(input + ": threw " + e.what());
    }
}

std::string mismatch(const Partition& lhs, const Partition& rhs) {
    return to_string(lhs) + " != " + to_string(rhs);
}

// Partitions of every size in [1, max_size] of the given type.
std::vector<Partition> partitions_up_to(int max_size, TypeLetter x, int min_size = 1) {
    std::vector<Partition> out;
    for (int s = min_size; s <= max_size; ++s)
        for (auto& p : partitions_of(s))
            if (is_type(p, x)) out.push_back(std::move(p));
    return out;
}

Partition plus_minus(const Partition& p) { return minus_one(plus_one(p)); }

std::string params(std::initializer_list<std::pair<const char*, long>> kv) {
    std::string out;
    for (auto [k, v] : kv) {
        if (!out.empty()) out += ' ';
        out += std::string(k) + "=" + std::to_string(v);
    }
    return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"comparison", "achar", "order", "induction", "collapse-oracle",
                                                "rs", "specialize", "tables", "speh"};
    return names;
}

bool is_suite(std::string_view name) {
    const auto& names = suite_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

SuiteReport run_suite(std::string_view name, const SweepConfig& cfg) {
    if (name == "comparison") return comparison(cfg);
    if (name == "achar") return achar(cfg);
    if (name == "order") return order(cfg);
    if (name == "induction") return induction(cfg);
    if (name == "collapse-oracle") return collapse_oracle(cfg);
    if (name == "rs") return rs(cfg);
    if (name == "specialize") return specialize(cfg);
    if (name == "tables") return tables(cfg);
    if (name == "speh") return speh(cfg);
    throw DomainError("unknown suite '" + std::string(name) + "'");
}

SuiteReport comparison(const SweepConfig& cfg) {
    const int max_size = cfg.max_size.value_or(14);
    const int n_max = cfg.n_max.value_or(8);
    SuiteReport r{"comparison", params({{"max-size", max_size}, {"n-max", n_max}})};
    for (TypeLetter x : kAll)
        for (int n = 1; n <= n_max; ++n) {
            const ClassicalContext ctx{x, n};
            for (const auto& p : partitions_up_to(max_size, ctx.input_type()))
                check(r, to_string(ctx) + " p=" + to_string(p), [&](std::string& why) {
                    auto lhs = d_com(p, ctx);
                    auto rhs = d_via_ap(p, ctx);
                    why = "d_com " + mismatch(lhs, rhs) + " (annihilator route)";
                    return lhs == rhs;
                });
        }
    return r;
}

SuiteReport achar(const SweepConfig& cfg) {
    const int max_size = cfg.max_size.value_or(16);
    const int n_max = cfg.n_max.value_or(7);
    SuiteReport r{"achar", params({{"max-size", max_size}, {"n-max", n_max}})};
    const auto B = TypeLetter::B, C = TypeLetter::C, D = TypeLetter::D;
    const auto type_b = partitions_up_to(max_size, B);
    const auto type_c = partitions_up_to(max_size, C);
    const auto type_d = partitions_up_to(max_size, D);

    auto run = [&](const char* id, const std::vector<Partition>& inputs, int n, auto&& applies, auto&& lhs,
                   auto&& rhs) {
        for (const auto& p : inputs) {
            if (!applies(p)) continue;
            check(r, std::string("(") + id + ") n=" + std::to_string(n) + " p=" + to_string(p),
                  [&](std::string& why) {
                      auto a = lhs(p);
                      auto b = rhs(p);
                      why = mismatch(a, b);
                      return a == b;
                  });
        }
    };
    auto always = [](const Partition&) { return true; };

    for (int n = 1; n <= n_max; ++n) {
        auto dA = [n](const Partition& p) { return d_com_A(p, n); };
        run("i", type_b, n, always,
            [&](const Partition& p) { return collapse(dA(collapse(minus_one(p), C)), C); },
            [&](const Partition& p) { return collapse(minus_one(dA(p)), C); });
        run("ii", type_c, n, always,
            [&](const Partition& p) { return collapse(dA(collapse(p, D)), C); },
            [&](const Partition& p) { return collapse(plus_minus(dA(p)), C); });
        if (n % 2 == 0) continue;
        run("iii", type_c, n, [](const Partition& p) { return p.length() % 2 == 1; },
            [&](const Partition& p) { return collapse(plus_one(dA(collapse(minus_one(p), B))), C); },
            [&](const Partition& p) { return collapse(plus_minus(dA(p)), C); });
        run("iv", type_c, n, always,
            [&](const Partition& p) { return collapse(dA(collapse(plus_one(p), B)), B); },
            [&](const Partition& p) { return collapse(plus_one(dA(p)), B); });
        run("v", type_c, n, [](const Partition& p) { return p.length() % 2 == 0; },
            [&](const Partition& p) { return collapse(plus_one(dA(collapse(plus_minus(p), D))), B); },
            [&](const Partition& p) { return collapse(plus_one(dA(p)), B); });
        run("vi", type_d, n, always,
            [&](const Partition& p) { return collapse(dA(collapse(plus_minus(p), C)), D); },
            [&](const Partition& p) { return collapse(dA(p), D); });
    }
    return r;
}

SuiteReport order(const SweepConfig& cfg) {
    const int max_size = cfg.max_size.value_or(12);
    const int n_max = cfg.n_max.value_or(6);
    SuiteReport r{"order", params({{"max-size", max_size}, {"n-max", n_max}})};
    for (TypeLetter x : kAll)
        for (int n = 1; n <= n_max; ++n) {
            const ClassicalContext ctx{x, n};
            for (int s = 1; s <= max_size; ++s) {
                std::vector<Partition> inputs;
                for (auto& p : partitions_of(s))
                    if (ctx.accepts(p)) inputs.push_back(std::move(p));
                std::vector<Partition> images;
                for (const auto& p : inputs) images.push_back(d_com(p, ctx));
                for (std::size_t i = 0; i < inputs.size(); ++i)
                    for (std::size_t j = 0; j < inputs.size(); ++j) {
                        if (i == j || !dominance_le(inputs[i], inputs[j])) continue;
                        check(r, to_string(ctx) + " " + to_string(inputs[i]) + " <= " + to_string(inputs[j]),
                              [&](std::string& why) {
                                  why = "images " + to_string(images[i]) + ", " + to_string(images[j]) +
                                        " not reversed";
                                  return dominance_le(images[j], images[i]);
                              });
                    }
            }
        }
    return r;
}

SuiteReport transitivity_of_induction(int bound) {
    SuiteReport r{"transitivity", params({{"part-size", bound}})};
    std::vector<Partition> small;
    for (int s = 0; s <= bound; ++s)
        for (auto& p : partitions_of(s)) small.push_back(std::move(p));
    for (const auto& q0 : small)
        for (TypeLetter x : kBCD) {
            if ((x == TypeLetter::B) != (q0.size() % 2 == 1)) continue;
            for (const auto& q1 : small)
                for (const auto& q2 : small)
                    check(r, letter(x) + " q0=" + to_string(q0) + " q1=" + to_string(q1) + " q2=" + to_string(q2),
                          [&](std::string& why) {
                              auto lhs = induce(induce(q0, q1, x), q2, x);
                              auto rhs = induce(q0, part_sum(q1, q2), x);
                              why = mismatch(lhs, rhs);
                              return lhs == rhs;
                          });
        }
    return r;
}

SuiteReport induction(const SweepConfig& cfg) {
    const int budget = cfg.max_size.value_or(24);
    const int n_max = cfg.n_max.value_or(8);
    const int samples = cfg.samples.value_or(1000);
    SuiteReport r{"induction", params({{"max-size", budget}, {"n-max", n_max}, {"samples", samples}})};

    std::vector<std::vector<Partition>> all(static_cast<std::size_t>(budget + 1));
    for (int s = 0; s <= budget; ++s) all[static_cast<std::size_t>(s)] = partitions_of(s);

    std::mt19937_64 rng(cfg.seed);
    auto uniform = [&rng](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    for (int done = 0; done < samples;) {
        const TypeLetter x = kBCD[uniform(0, 2)];
        const ClassicalContext ctx{x, uniform(1, n_max)};
        const int q_size = uniform(0, (budget - 1) / 2);
        const int p_size = uniform(1, budget - 2 * q_size);
        std::vector<const Partition*> valid;
        for (const auto& p : all[static_cast<std::size_t>(p_size)])
            if (ctx.accepts(p)) valid.push_back(&p);
        if (valid.empty()) continue;
        const Partition& p = *valid[static_cast<std::size_t>(uniform(0, static_cast<int>(valid.size()) - 1))];
        const auto& qs = all[static_cast<std::size_t>(q_size)];
        const Partition& q = qs[static_cast<std::size_t>(uniform(0, static_cast<int>(qs.size()) - 1))];
        ++done;
        check(r, to_string(ctx) + " p=" + to_string(p) + " q=" + to_string(q), [&](std::string& why) {
            auto lhs = d_com(saturate(p, q), ctx);
            auto rhs = induce(d_com(p, ctx), d_com_A(q, reduced_degree(ctx.n)), x);
            why = mismatch(lhs, rhs);
            return lhs == rhs;
        });
    }

    auto trans = transitivity_of_induction(6);
    r.checks += trans.checks;
    for (auto& f : trans.failures) r.failures.push_back("transitivity " + f);
    return r;
}

SuiteReport d_collapse_case_split(int max_size, int max_b) {
    SuiteReport r{"d-collapse", params({{"max-size", max_size}, {"max-b", max_b}})};
    for (int s = 0; s <= max_size; s += 2)
        for (const auto& p : partitions_of(s))
            for (int b = 1; b <= max_b; ++b)
                check(r, "p=" + to_string(p) + " b=" + std::to_string(b), [&](std::string& why) {
                    Partition above;
                    bool has_b = false;
                    for (int v : p.parts()) {
                        if (v > b) above = disjoint_union(above, Partition{v});
                        if (v == b) has_b = true;
                    }
                    const bool exceptional =
                        b % 2 == 0 && (static_cast<int>(above.length()) + above.size()) % 2 == 1 && !has_b;
                    auto lhs = collapse(disjoint_union(p, Partition{b, b}), TypeLetter::D);
                    auto base = collapse(p, TypeLetter::D);
                    auto rhs = exceptional ? disjoint_union(base, Partition{b + 1, b - 1})
                                           : disjoint_union(base, Partition{b, b});
                    why = mismatch(lhs, rhs);
                    return lhs == rhs;
                });
    return r;
}

SuiteReport collapse_oracle(const SweepConfig& cfg) {
    const int max_size = cfg.max_size.value_or(12);
    SuiteReport r{"collapse-oracle", params({{"max-size", max_size}})};
    for (int s = 0; s <= max_size; ++s) {
        const auto parts = partitions_of(s);
        for (TypeLetter x : kBCD) {
            if ((x == TypeLetter::B) != (s % 2 == 1)) continue;
            std::vector<Partition> collapsed;
            for (const auto& p : parts) {
                collapsed.push_back(collapse(p, x));
                const Partition& c = collapsed.back();
                check(r, letter(x) + "-collapse p=" + to_string(p), [&](std::string& why) {
                    auto expected = oracle::maximal_dominated(p, x);
                    if (!expected) {
                        why = "oracle found no unique maximum";
                        return false;
                    }
                    why = "greedy " + mismatch(c, *expected) + " (oracle)";
                    return c == *expected && collapse(c, x) == c &&
                           (!oracle::has_type(p, x) || c == p);
                });
            }
            for (std::size_t i = 0; i < parts.size(); ++i)
                for (std::size_t j = 0; j < parts.size(); ++j) {
                    if (i == j || !dominance_le(parts[i], parts[j])) continue;
                    check(r, letter(x) + "-collapse monotone " + to_string(parts[i]) + " <= " + to_string(parts[j]),
                          [&](std::string&) { return dominance_le(collapsed[i], collapsed[j]); });
                }
        }
    }
    auto split = d_collapse_case_split(max_size, 6);
    r.checks += split.checks;
    for (auto& f : split.failures) r.failures.push_back("d-collapse " + f);
    return r;
}

SuiteReport lambda_round_trip(int max_size, int n_max) {
    SuiteReport r{"lambda-round-trip", params({{"max-size", max_size}, {"n-max", n_max}})};
    for (int s = 0; s <= max_size; ++s)
        for (const auto& p : partitions_of(s))
            for (int n = 1; n <= n_max; ++n)
                check(r, "p=" + to_string(p) + " n=" + std::to_string(n), [&](std::string& why) {
                    auto back = recognize_lambda_A(lambda_A(p, n), n);
                    why = back ? mismatch(*back, p) : "not recognized";
                    return back && *back == p;
                });
    return r;
}

SuiteReport rs(const SweepConfig& cfg) {
    const int samples = cfg.samples.value_or(10000);
    const int max_size = cfg.max_size.value_or(12);
    const int n_max = cfg.n_max.value_or(6);
    SuiteReport r{"rs", params({{"samples", samples}, {"max-length", 12}, {"max-size", max_size}, {"n-max", n_max}})};

    std::mt19937_64 rng(cfg.seed);
    auto uniform = [&rng](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    for (int i = 0; i < samples; ++i) {
        std::vector<Rational> seq(static_cast<std::size_t>(uniform(0, 12)));
        for (auto& v : seq) v = Rational(uniform(-6, 6), uniform(1, 6));
        std::sort(seq.begin(), seq.end(), std::greater<>());
        std::string input = "(";
        for (std::size_t k = 0; k < seq.size(); ++k) input += (k ? "," : "") + to_string(seq[k]);
        input += ")";
        check(r, "seq=" + input, [&](std::string& why) {
            const WeightMultiset lam(seq);
            auto [closed_shape, closed_tableau] = rs_shape_closed_form(lam.values());
            const Tableau inserted = rs_insert(seq);
            std::vector<Rational> cells;
            for (const auto& row : inserted.rows) cells.insert(cells.end(), row.begin(), row.end());
            const bool same_cells = WeightMultiset(cells) == lam;
            why = "closed form " + mismatch(closed_shape, shape(inserted)) + " or tableau differs";
            return closed_shape == shape(inserted) && closed_tableau == inserted && same_cells &&
                   static_cast<std::size_t>(closed_shape.size()) == seq.size();
        });
    }

    auto trip = lambda_round_trip(max_size, n_max);
    r.checks += trip.checks;
    for (auto& f : trip.failures) r.failures.push_back("round-trip " + f);
    return r;
}

SuiteReport additivity(int max_size, int n_max) {
    SuiteReport r{"additivity", params({{"max-size", max_size}, {"n-max", n_max}})};
    std::vector<Partition> small;
    for (int s = 0; s <= max_size; ++s)
        for (auto& p : partitions_of(s)) small.push_back(std::move(p));
    for (int n = 1; n <= n_max; ++n)
        for (const auto& p : small)
            for (const auto& q : small) {
                if (p.size() + q.size() > max_size) continue;
                check(r, "n=" + std::to_string(n) + " p=" + to_string(p) + " q=" + to_string(q),
                      [&](std::string& why) {
                          auto lhs = d_com_A(disjoint_union(p, q), n);
                          auto rhs = part_sum(d_com_A(p, n), d_com_A(q, n));
                          auto via_ap = ap(lambda_A(disjoint_union(p, q), n), TypeLetter::A, TypeLetter::A);
                          auto ap_sum = part_sum(ap(lambda_A(p, n), TypeLetter::A, TypeLetter::A),
                                                 ap(lambda_A(q, n), TypeLetter::A, TypeLetter::A));
                          why = mismatch(lhs, rhs) + " / " + mismatch(via_ap, ap_sum);
                          return lhs == rhs && via_ap == ap_sum;
                      });
            }
    return r;
}

SuiteReport zero_orbit_rule(int max_rank, int n_max) {
    SuiteReport r{"zero-orbit", params({{"max-rank", max_rank}, {"n-max", n_max}})};
    for (TypeLetter x : kAll)
        for (int rank = 1; rank <= max_rank; ++rank)
            for (int n = 1; n <= n_max; ++n) {
                const ClassicalContext ctx{x, n};
                // Size of the dual group's partitions and of the group's own.
                int dual_size = 0, own_size = 0;
                switch (x) {
                    case TypeLetter::A: dual_size = own_size = rank + 1; break;
                    case TypeLetter::B:
                        own_size = 2 * rank + 1;
                        dual_size = ctx.input_type() == TypeLetter::B ? 2 * rank + 1 : 2 * rank;
                        break;
                    case TypeLetter::C:
                        own_size = 2 * rank;
                        dual_size = ctx.input_type() == TypeLetter::B ? 2 * rank + 1 : 2 * rank;
                        break;
                    case TypeLetter::D: dual_size = own_size = 2 * rank; break;
                }
                const Partition zero(std::vector<int>(static_cast<std::size_t>(dual_size), 1));
                check(r, to_string(ctx) + " rank=" + std::to_string(rank), [&](std::string& why) {
                    auto got = d_com(zero, ctx);
                    auto want = regular_partition(own_size, x);
                    why = mismatch(got, want);
                    return got == want;
                });
            }
    return r;
}

SuiteReport very_even_labels() {
    SuiteReport r{"very-even-labels", ""};
    struct Case {
        Partition p;
        int n;
    };
    const std::vector<Case> cases{{{2, 2, 2, 2}, 1}, {{2, 2, 2, 2, 2, 2}, 1}, {{4, 4}, 1}, {{4, 4, 2, 2}, 1},
                                  {{2, 2, 2, 2}, 3}, {{6, 6}, 1},          {{4, 4, 4, 4}, 1}};
    for (const auto& c : cases)
        for (auto label : {VeryEvenLabel::I, VeryEvenLabel::II}) {
            const LabeledOrbit in(c.p, label);
            check(r, to_string(in) + " n=" + std::to_string(c.n), [&](std::string& why) {
                auto out = d_com_D(in, c.n);
                const int r_half = c.p.size() / 2;
                std::optional<VeryEvenLabel> want;
                if (is_very_even(out.partition())) want = (r_half / 2) % 2 == 0 ? label : swapped(label);
                why = "got " + to_string(out);
                return out.label() == want;
            });
        }
    return r;
}

SuiteReport specialize(const SweepConfig& cfg) {
    const int max_size = cfg.max_size.value_or(16);
    SuiteReport r{"specialize", params({{"max-size", max_size}})};
    const auto A = TypeLetter::A, B = TypeLetter::B, C = TypeLetter::C, D = TypeLetter::D;

    auto expect = [&](const std::string& input, auto&& lhs, auto&& rhs) {
        check(r, input, [&](std::string& why) {
            Partition a = lhs();
            Partition b = rhs();
            why = mismatch(a, b);
            return a == b;
        });
    };

    for (const auto& p : partitions_up_to(max_size, A)) {
        const auto s = to_string(p);
        expect("A n=1 " + s, [&] { return d_com_A(p, 1); }, [&] { return transpose(p); });
        if (is_type(p, C)) {
            expect("B n=1 " + s, [&] { return d_com_B(p, 1); }, [&] { return collapse(plus_one(transpose(p)), B); });
            expect("metaplectic " + s, [&] { return metaplectic_d_C(p); }, [&] { return d_com_C(p, 2); });
            expect("metaplectic *D* " + s, [&] { return metaplectic_d_C(p); },
                   [&] { return transpose(collapse(p, D)); });
            expect("AP_B(lambda_C^1) " + s, [&] { return ap(lambda_X(p, 1, C), B, C); },
                   [&] { return collapse(plus_one(transpose(p)), B); });
            expect("AP_C(lambda_C^2) " + s, [&] { return ap(lambda_X(p, 2, C), C, C); },
                   [&] { return metaplectic_d_C(p); });
            if (std::all_of(p.parts().begin(), p.parts().end(), [](int v) { return v % 2 == 0; }))
                expect("AP_D(lambda_C^2) " + s, [&] { return ap(lambda_X(p, 2, C), D, C); },
                       [&] { return collapse(transpose(collapse(p, D)), D); });
        }
        if (is_type(p, B)) {
            expect("C n=1 " + s, [&] { return d_com_C(p, 1); },
                   [&] { return transpose(collapse(minus_one(p), C)); });
            expect("AP_C(lambda_B^1) " + s, [&] { return ap(lambda_X(p, 1, B), C, B); },
                   [&] { return transpose(collapse(minus_one(p), C)); });
            if (std::all_of(p.parts().begin(), p.parts().end(), [](int v) { return v % 2 == 1; }))
                expect("AP_B(lambda_B^2) " + s, [&] { return ap(lambda_X(p, 2, B), B, B); },
                       [&] { return transpose(p); });
        }
        if (is_type(p, D)) {
            expect("D n=1 " + s, [&] { return d_com_D(LabeledOrbit(p), 1).partition(); },
                   [&] { return collapse(transpose(p), D); });
            expect("AP_D(lambda_D^1) " + s, [&] { return ap(lambda_X(p, 1, D), D, D); },
                   [&] { return collapse(transpose(p), D); });
        }
    }

    for (auto* sub : {+[]() { return zero_orbit_rule(8, 12); }, +[]() { return very_even_labels(); }}) {
        auto extra = sub();
        r.checks += extra.checks;
        for (auto& f : extra.failures) r.failures.push_back(extra.name + " " + f);
    }
    return r;
}

SuiteReport tables(const SweepConfig&) {
    SuiteReport r{"tables", "spot checks, zero rule n<=40, row counts, coverage"};
    using G = ExceptionalGroup;
    const ExceptionalTables* t = nullptr;
    check(r, "load", [&](std::string&) {
        t = &ExceptionalTables::embedded();
        return true;
    });
    if (!t) return r;

    struct Spot {
        G g;
        const char* orbit;
        int n;
        const char* want;
    };
    const Spot spots[] = {
        {G::G2, "G2", 3, "A1"},          {G::G2, "G2", 2, "A~1"},          {G::G2, "G2", 4, "G2(a1)"},
        {G::G2, "G2", 9, "G2(a1)"},      {G::G2, "A~1", 3, "G2(a1)"},      {G::F4, "F4", 3, "A~2+A1"},
        {G::F4, "F4", 2, "A1"},          {G::F4, "C3", 8, "F4(a1)"},       {G::F4, "B3", 1, "A2"},
        {G::E6, "E6", 8, "D5"},          {G::E6, "E6", 2, "3A1"},          {G::E6, "D4", 1, "2A2"},
        {G::E7, "E7", 2, "4A1"},         {G::E7, "E7", 7, "A6"},           {G::E7, "E7", 15, "E7(a1)"},
        {G::E8, "E8", 7, "A6+A1"},       {G::E8, "E8", 9, "E8(b6)"},       {G::E8, "E8", 14, "E8(b4)"},
        {G::E8, "E8", 29, "E8(a1)"},     {G::E8, "E8", 30, "E8"},
    };
    for (const auto& s : spots)
        check(r, to_string(s.g) + " " + s.orbit + " n=" + std::to_string(s.n), [&](std::string& why) {
            auto got = t->lookup(s.g, s.orbit, s.n);
            why = "got " + got + ", want " + s.want;
            return got == s.want;
        });

    struct Threshold {
        G g;
        const char* orbit;
        int want;
    };
    for (const auto& s : {Threshold{G::E8, "E8", 30}, Threshold{G::G2, "A1", 2}, Threshold{G::E7, "E7", 18},
                          Threshold{G::G2, "G2", 10}, Threshold{G::F4, "F4", 17}})
        check(r, std::string("threshold ") + to_string(s.g) + " " + s.orbit, [&](std::string& why) {
            int got = t->stabilization_threshold(s.g, s.orbit);
            why = "got " + std::to_string(got);
            return got == s.want;
        });

    for (G g : {G::G2, G::F4, G::E6, G::E7, G::E8}) {
        check(r, "row count " + to_string(g), [&](std::string& why) {
            auto n = static_cast<int>(t->rows_of(g).size());
            why = "got " + std::to_string(n);
            return n == expected_orbit_count(g);
        });
        for (int n = 1; n <= 40; ++n)
            check(r, "zero orbit " + to_string(g) + " n=" + std::to_string(n),
                  [&](std::string&) { return t->lookup(g, "0", n) == regular_label(g); });
    }

    for (const auto& row : t->rows()) {
        check(r, "coverage " + to_string(row.group) + " " + row.orbit, [&](std::string& why) {
            const auto& tail = std::get<NTail>(row.clauses.back().condition);
            for (int n = 1; n <= tail.from + 50; ++n) {
                int hits = 0;
                for (const auto& cl : row.clauses) hits += matches(cl.condition, n) ? 1 : 0;
                if (hits != 1) {
                    why = "n=" + std::to_string(n) + " matched " + std::to_string(hits) + " times";
                    return false;
                }
            }
            why = "tail value " + row.clauses.back().label;
            return row.clauses.back().label == regular_label(row.group);
        });
    }

    check(r, "serialize round trip", [&](std::string&) {
        return ExceptionalTables::parse(t->serialize()).serialize() == t->serialize();
    });
    return r;
}

SuiteReport speh(const SweepConfig& cfg) {
    const int span = cfg.n_max.value_or(8);
    SuiteReport r{"speh", params({{"max-m-n0", span}})};
    check(r, "r0=1 m=2 k=5 n=6", [&](std::string& why) {
        auto got = speh_wavefront({1, 2, 5, 6});
        why = "got " + to_string(got);
        return got == Partition{6, 4};
    });
    for (int r0 = 1; r0 <= 4; ++r0)
        for (int m = 1; m <= 4; ++m)
            for (int n0 = 1; m * n0 <= span; ++n0)
                for (int c = 0; c <= 4; ++c)
                    for (int d = 0; d <= std::min(4, n0 - 1); ++d) {
                        const int k = c * n0 + d;
                        if (k == 0) continue;
                        const SpehDatum s{r0, m, k, m * n0};
                        check(r,
                              "r0=" + std::to_string(r0) + " m=" + std::to_string(m) + " k=" + std::to_string(k) +
                                  " n=" + std::to_string(s.n),
                              [&](std::string& why) {
                                  auto got = speh_wavefront(s);
                                  auto want = d_com_A(Partition(std::vector<int>(static_cast<std::size_t>(r0), m * k)), s.n);
                                  why = mismatch(got, want);
                                  return got == want;
                              });
                    }
    return r;
}

std::string render(const std::vector<SuiteReport>& reports, const SweepConfig& cfg) {
    constexpr std::size_t kMaxListed = 25;
    std::ostringstream out;
    out << "orbit-duality verify (seed " << cfg.seed << ")\n";
    bool all_passed = true;
    for (const auto& r : reports) {
        all_passed = all_passed && r.passed();
        out << (r.passed() ? "PASS " : "FAIL ") << r.name;
        if (!r.parameters.empty()) out << " [" << r.parameters << "]";
        out << ": " << r.checks << " checks";
        if (!r.passed()) out << ", " << r.failures.size() << " counterexamples";
        out << '\n';
        for (std::size_t i = 0; i < r.failures.size() && i < kMaxListed; ++i)
            out << "  counterexample: " << r.failures[i] << '\n';
        if (r.failures.size() > kMaxListed) out << "  ... " << r.failures.size() - kMaxListed << " more\n";
    }
    out << (all_passed ? "ALL PASS" : "FAILURES FOUND") << '\n';
    return out.str();
}

}  // namespace orbit_duality::verify
