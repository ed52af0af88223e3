// Acceptance gate: every criterion below runs exactly, prints one line, and
// the binary exits nonzero if any fails or exceeds its time budget.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "weylsym/discops.hpp"
#include "weylsym/report.hpp"
#include "weylsym/w2bridge.hpp"

using namespace weylsym;

namespace {

int g_failures = 0;

struct Criterion {
    std::string label;
    double budget_s;  // 0 = no budget
    bool (*body)(std::string& detail);
};

bool no_fail(const std::vector<ItemResult>& items, std::string& detail) {
    for (const auto& i : items)
        if (i.status == Status::Fail) {
            detail = "item " + i.item_id + " failed (lhs=" + i.lhs +
                     ", rhs=" + i.rhs + ", witness=" + i.witness + ")";
            return false;
        }
    return true;
}

bool crit_pairing(std::string& detail) {
    const long expected[] = {2, 12, 288, 34560};
    for (int k = 2; k <= 5; ++k) {
        Rational got = dual_pairing(k);
        if (got != Rational(expected[k - 2])) {
            detail = "k=" + std::to_string(k) + ": got " + got.get_str();
            return false;
        }
    }
    return true;
}

bool crit_fourway(std::string& detail) {
    for (int k = 2; k <= 4; ++k) {
        OperatorCatalog cat(k);
        for (int p = 0; p <= 6; ++p)
            for (int q = 0; q <= 4; ++q) {
                try {
                    (void)u_pq_all(cat, p, q);
                } catch (const IdentityViolationError& e) {
                    detail = "k=" + std::to_string(k) + ": " + e.what();
                    return false;
                }
            }
    }
    return true;
}

bool crit_annul1(std::string& detail) {
    for (int k = 2; k <= 4; ++k) {
        OperatorCatalog cat(k);
        const SymContext& ctx = cat.ctx();
        for (int p = 0; p <= 6; ++p)
            for (int q = 0; q <= 6; ++q) {
                if (p - q >= 0 && q <= k) continue;
                if (!u_pq(cat, p, q, UMethod::Direct).is_zero()) {
                    detail = "u nonzero at k=" + std::to_string(k) + ", p=" +
                             std::to_string(p) + ", q=" + std::to_string(q);
                    return false;
                }
            }
        for (int p = 0; p <= 8; ++p)
            if (!(u_pq(cat, p, 0, UMethod::Direct) ==
                  newton_in_sigma(ctx, p))) {
                detail = "u_p0 != N_p at p=" + std::to_string(p);
                return false;
            }
        for (int p = 0; p <= 6; ++p) {
            SigmaPoly lhs = u_pq(cat, p + 1, 1, UMethod::Direct) * Rational(2);
            SigmaPoly rhs(k);
            for (int h = 0; h <= p; ++h)
                rhs += newton_in_sigma(ctx, h) * newton_in_sigma(ctx, p - h);
            rhs -= newton_in_sigma(ctx, p) * Rational(p + 1);
            if (!(lhs == rhs)) {
                detail = "convolution identity fails at p=" + std::to_string(p);
                return false;
            }
        }
    }
    return true;
}

bool crit_annihilator(std::string& detail) {
    for (int k = 2; k <= 4; ++k) {
        OperatorCatalog cat(k);
        auto gens = annihilator_generators(cat);
        if (int(gens.size()) != (k + 1) * k) {
            detail = "generator count " + std::to_string(gens.size());
            return false;
        }
        for (const auto& g : gens)
            if (!g.apply(cat.ctx().delta).num.is_zero()) {
                detail = "a generator does not kill delta at k=" +
                         std::to_string(k);
                return false;
            }
        if (!no_fail(items_annihilator_remarks(cat), detail)) return false;
    }
    return true;
}

bool crit_import(std::string& detail) {
    for (int k = 2; k <= 4; ++k) {
        OperatorCatalog cat(k);
        for (int d = 0; d <= 5; ++d) {
            int dim = sigma_kernel_dimension(cat, d);
            int want = d == 0 ? 1 : 0;
            if (dim != want) {
                detail = "k=" + std::to_string(k) + ", d=" + std::to_string(d) +
                         ": dim " + std::to_string(dim);
                return false;
            }
        }
    }
    return true;
}

bool crit_factorization(std::string& detail) {
    for (int k = 2; k <= 3; ++k) {
        OperatorCatalog cat(k);
        auto items = items_factorization(cat, 42);
        if (!no_fail(items, detail)) return false;
        bool saw_grid = false;
        for (const auto& i : items)
            if (i.item_id == "fact.monomial_grid") saw_grid = true;
        if (!saw_grid) {
            detail = "monomial grid item missing";
            return false;
        }
    }
    return true;
}

bool crit_lemma148(std::string& detail) {
    for (int k = 2; k <= 3; ++k) {
        OperatorCatalog cat(k);
        std::vector<Exponents> gammas, betas;
        for (int d = 0; d <= 2; ++d) {
            Poly basis = complete_homogeneous(k, d);
            for (const auto& [e, c] : basis.terms()) gammas.push_back(e);
        }
        for (int d = 1; d <= 2; ++d) {
            Poly basis = complete_homogeneous(k, d);
            for (const auto& [e, c] : basis.terms()) betas.push_back(e);
        }
        for (const Exponents& g : gammas)
            for (const Exponents& b : betas) {
                std::string why;
                if (!lemma_14_8_check(cat, W2Element::monomial(k, g, b, 1),
                                      &why)) {
                    detail = "k=" + std::to_string(k) + ": " + why;
                    return false;
                }
            }
    }
    return true;
}

bool crit_bernstein(std::string& detail) {
    for (int k = 2; k <= 3; ++k) {
        OperatorCatalog cat(k);
        try {
            W2Element p = bernstein_witness(cat);
            TwistedElement got = twisted_apply(
                cat, p, TwistedElement{SigmaPoly::constant(k, 1), 0});
            if (!(got == TwistedElement{SigmaPoly::constant(k, 1), 1})) {
                detail = "k=" + std::to_string(k) + ": got " + got.to_string();
                return false;
            }
        } catch (const Error& e) {
            detail = e.what();
            return false;
        }
    }
    return true;
}

bool crit_suites(std::string& detail) {
    for (int k = 2; k <= 4; ++k) {
        OperatorCatalog cat(k);
        if (!no_fail(identity_suite(cat, 42), detail)) {
            detail = "identity suite k=" + std::to_string(k) + ": " + detail;
            return false;
        }
    }
    // the five transport/twisted invariant families, at their stated ranges
    for (int k = 2; k <= 3; ++k) {
        OperatorCatalog cat(k);
        if (!no_fail(items_transport_invariants(cat, 42), detail)) return false;
    }
    for (int k = 2; k <= 4; ++k) {
        OperatorCatalog cat(k);
        if (!no_fail(items_twisted(cat, 42), detail)) return false;
    }
    // byte-identical golden reports across two consecutive runs
    for (int k = 2; k <= 3; ++k) {
        std::string a = report_to_json(run_suite(k, "all", 42));
        std::string b = report_to_json(run_suite(k, "all", 42));
        if (a != b) {
            detail = "reports differ across runs at k=" + std::to_string(k);
            return false;
        }
    }
    return true;
}

bool crit_symfun(std::string& detail) {
    for (int k = 2; k <= 4; ++k) {
        SymContext ctx(k);
        for (int h = 1; h <= k; ++h)
            for (int p = 1; p <= 8; ++p) {
                if (p - h < -k + 1) continue;
                if (!(newton_in_sigma(ctx, p).partial(h) ==
                      m_poly(ctx, p - h) * Rational(h % 2 == 1 ? p : -p))) {
                    detail = "partial identity fails at k=" +
                             std::to_string(k) + ", h=" + std::to_string(h) +
                             ", p=" + std::to_string(p);
                    return false;
                }
            }
        for (int d = 1; d <= 8; ++d)
            if (!(sigma1_on(ctx, m_poly(ctx, d)) ==
                  m_poly(ctx, d - 1) * Rational(d + k - 1))) {
                detail = "sigma1 lowering fails at d=" + std::to_string(d);
                return false;
            }
        for (int d = 0; d <= 8; ++d)
            if (!(m_poly(ctx, d) == to_sigma(ctx, complete_homogeneous(k, d)))) {
                detail = "M_d != h_d at d=" + std::to_string(d);
                return false;
            }
    }
    return true;
}

void run(const Criterion& c) {
    std::string detail;
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = c.body(detail);
    } catch (const std::exception& e) {
        detail = e.what();
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    bool in_budget = c.budget_s == 0 || secs <= c.budget_s;
    if (ok && !in_budget)
        detail = "exceeded time budget of " + std::to_string(c.budget_s) + " s";
    bool pass = ok && in_budget;
    std::printf("[%s] %s (%.2fs)%s%s\n", pass ? "PASS" : "FAIL",
                c.label.c_str(), secs, detail.empty() ? "" : " -- ",
                detail.c_str());
    if (!pass) ++g_failures;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"1. pairing constants c_k = 2, 12, 288, 34560 (k = 2..5)", 60,
         crit_pairing},
        {"2. u_pq four-way agreement, p <= 6, q <= 4, k = 2..4", 120,
         crit_fourway},
        {"3. u_pq vanishing / Newton rows / convolution identity, k <= 4", 0,
         crit_annul1},
        {"4. annihilator generators kill delta; remark recurrences, k <= 4", 0,
         crit_annihilator},
        {"5. import kernel dimensions, d = 0..5, k = 2..4", 120, crit_import},
        {"6. delta-factorization grid and k=2 displays", 0,
         crit_factorization},
        {"7. delta^(2q-1)-clearing lemma on the monomial grid, k = 2..3", 0,
         crit_lemma148},
        {"8. twisted witness P(delta) = Delta^-1 delta, k = 2..3", 0,
         crit_bernstein},
        {"9. identity suites and invariant families; byte-identical reports",
         0, crit_suites},
        {"10. symmetric-function layer identities, p, d <= 8, k <= 4", 0,
         crit_symfun},
    };
    for (const auto& c : criteria) run(c);
    if (g_failures) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all %zu criteria passed\n", criteria.size());
    return 0;
}
