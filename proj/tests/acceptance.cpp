// Acceptance suite: re-runs every headline identity end to end and prints one
// PASS/FAIL line per criterion, with its runtime against the stated limit.
// Exit code is the number of failed criteria.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <vector>

#include "test_util.hpp"

using namespace toriglue;

namespace {

struct Harness {
    int failures = 0;

    void run(int number, const std::string& name, double limit_seconds,
             const std::function<bool(std::ostream&)>& body) {
        std::ostringstream detail;
        bool ok = false;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            ok = body(detail);
        } catch (const std::exception& e) {
            detail << " unexpected exception: " << e.what();
            ok = false;
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (elapsed >= limit_seconds) {
            detail << " [over time limit]";
            ok = false;
        }
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << name << " ("
                  << elapsed << "s < " << limit_seconds << "s)" << detail.str() << "\n";
        if (!ok) ++failures;
    }
};

const IntMatrix kA{{2, 0, 6, 4, 0}, {3, 4, 1, 0, 2}, {2, 3, 0, 3, 5}};
const IntMatrix kB{{3, 2, 2, 5, 0}, {3, 2, 4, 0, 1}, {0, 2, 0, 1, 5}};
const Budget kRoomy{1'000'000, 500};
const Budget kNumerical{50'000'000, 200'000};

bool check(std::ostream& out, bool cond, const std::string& what) {
    if (!cond) out << " [" << what << " failed]";
    return cond;
}

Graph make_square(const std::string& l1, const std::string& l2, const std::string& l3,
                  const std::string& l4) {
    Graph g;
    g.n = 4;
    g.add_edge(2, 3, l1);
    g.add_edge(0, 2, l2);
    g.add_edge(0, 1, l3);
    g.add_edge(1, 3, l4);
    return g;
}

Graph make_bowtie(const std::string& pre, const std::string& shared) {
    Graph g;
    g.n = 5;
    g.add_edge(0, 4, pre + "1");
    g.add_edge(0, 3, pre + "2");
    g.add_edge(1, 3, pre + "3");
    g.add_edge(0, 1, pre + "4");
    g.add_edge(0, 2, pre + "5");
    g.add_edge(2, 4, shared);
    return g;
}

// ---- criterion bodies ------------------------------------------------------

bool criterion1(std::ostream& out) {
    bool ok = true;
    auto ia = toric_ideal(kA, kRoomy);
    BinomialIdeal printed_a(ia.ring);
    printed_a.add(binomial_from_vector({1, 0, -1, 1, -1}));
    printed_a.add(binomial_from_vector({-2, 2, 0, 1, -1}));
    printed_a.add(binomial_from_vector({3, -2, -1, 0, 0}));
    ok &= check(out, ideal_equals(ia, printed_a, kRoomy), "I_A printed generators");

    auto ib = toric_ideal(kB, standard_ring(5, "y"), kRoomy);
    BinomialIdeal printed_b(ib.ring);
    printed_b.add(binomial_from_vector({1, 3, -2, -1, -1}));
    printed_b.add(binomial_from_vector({-5, 2, 3, 1, -1}));
    printed_b.add(binomial_from_vector({-4, 5, 1, 0, -2}));
    printed_b.add(binomial_from_vector({6, 1, -5, -2, 0}));
    printed_b.add(binomial_from_vector({-3, 8, -1, -1, -3}));
    ok &= check(out, ideal_equals(ib, printed_b, kRoomy), "I_B printed generators");

    auto g = glue_homogeneous(kA, kB);
    IntMatrix expected{{2, 0, 6, 4, 0, 0, 0, 0, 0, 0},
                       {3, 4, 1, 0, 2, 2, 2, 2, 2, 2},
                       {2, 3, 0, 3, 5, 5, 4, 4, 7, 2},
                       {3, 3, 3, 3, 3, 3, 2, 4, 0, 1},
                       {0, 0, 0, 0, 0, 0, 2, 0, 1, 5}};
    ok &= check(out, g.c_tilde == expected, "C~ entrywise");
    auto rep = verify_gluing(kA, kB, g, kRoomy, 2);
    ok &= check(out, rep.status == SplitStatus::ok, "verify_gluing ok");
    return ok;
}

bool criterion2(std::ostream& out) {
    auto res = split_sum(kA, kB, {}, kRoomy, 2);
    bool ok = check(out, res.report.status == SplitStatus::ok, "split ok");
    ok &= check(out, res.report.ideal_ok, "I_C = I_A' + I_B'");
    ok &= check(out, res.report.height_c == 4 && res.report.height_a == 2 &&
                         res.report.height_b == 2,
                "height 4 = 2 + 2");
    ok &= check(out, res.report.rank_c == 5, "rank C = 5");
    return ok;
}

bool criterion3(std::ostream& out) {
    BettiTable a, b;
    a.set(0, 0, 1);
    a.set(1, 2, 1);
    a.set(1, 3, 2);
    a.set(2, 4, 2);
    b.set(0, 0, 1);
    b.set(1, 4, 1);
    b.set(1, 6, 2);
    b.set(2, 7, 1);
    b.set(1, 7, 1);
    b.set(2, 8, 1);
    b.set(1, 8, 1);
    b.set(2, 9, 4);
    b.set(3, 10, 2);
    BettiTable t = tensor(a, b);
    const std::string expected =
        "           0     1     2     3     4     5\n"
        "------------------------------------------\n"
        "    0:     1     -     -     -     -     -\n"
        "    1:     -     1     -     -     -     -\n"
        "    2:     -     2     2     -     -     -\n"
        "    3:     -     1     -     -     -     -\n"
        "    4:     -     -     1     -     -     -\n"
        "    5:     -     2     3     2     -     -\n"
        "    6:     -     1     3     1     -     -\n"
        "    7:     -     1     9     9     2     -\n"
        "    8:     -     -     3     8     4     -\n"
        "    9:     -     -     2    10    12     4\n"
        "------------------------------------------\n"
        "total:     1     8    23    30    18     4\n";
    bool ok = check(out, render(t) == expected, "byte-identical diagram");
    ok &= check(out, totals(t) == std::vector<Int>{1, 8, 23, 30, 18, 4}, "totals");
    return ok;
}

bool criterion4(std::ostream& out) {
    bool ok = true;
    IntMatrix a{{1, 1, 0, 3, 2}, {2, 1, 1, 0, 2}};
    IntMatrix b{{5, 12, 13}};
    auto sift_a = homogeneous_sift(a, kRoomy);
    BinomialIdeal printed(sift_a.ring);
    printed.add(binomial_from_vector({1, 1, -1, 0, -1}));
    printed.add(binomial_from_vector({2, -3, 1, 1, -1}));
    printed.add(binomial_from_vector({3, -2, 0, 1, -2}));
    printed.add(binomial_from_vector({-1, 4, -2, -1, 0}));
    ok &= check(out, ideal_equals(sift_a, printed, kRoomy), "sift of A");

    auto sift_b = homogeneous_sift(b, standard_ring(3, "y"), kRoomy);
    ok &= check(out,
                sift_b.generators.size() == 1 &&
                    sift_b.generators[0] == binomial_from_vector({-1, 8, -7}),
                "sift of B");

    IntMatrix c = glue_sifts(a, b);
    IntMatrix expected_c{{1, 1, 0, 3, 2, 2, 2}, {2, 1, 1, 0, 2, 2, 2},
                         {1, 1, 1, 1, 1, 1, 1}, {5, 5, 5, 5, 5, 12, 13}};
    ok &= check(out, c == expected_c, "glue_sifts matrix");

    RingContext r7;
    r7.vars = {"x1", "x2", "x3", "x4", "z", "y2", "y3"};
    BinomialIdeal printed_c(r7);
    printed_c.add(binomial_from_vector({1, 1, -1, 0, -1, 0, 0}));
    printed_c.add(binomial_from_vector({2, -3, 1, 1, -1, 0, 0}));
    printed_c.add(binomial_from_vector({3, -2, 0, 1, -2, 0, 0}));
    printed_c.add(binomial_from_vector({-1, 4, -2, -1, 0, 0, 0}));
    printed_c.add(binomial_from_vector({0, 0, 0, 0, -1, 8, -7}));
    ok &= check(out, ideal_equals(toric_ideal(c, r7, kRoomy), printed_c, kRoomy),
                "I_C five generators");
    ok &= check(out, verify_sift_glue(a, b, kRoomy, 2).status == SplitStatus::ok,
                "sift splitting identity");

    ok &= check(out, minimal_generators(toric_ideal(a, kRoomy), a, kRoomy).size() == 3,
                "I_A minimal count 3");
    ok &= check(out,
                minimal_generators(toric_ideal(b, standard_ring(3, "y"), kRoomy), b, kRoomy)
                        .size() == 3,
                "I_B minimal count 3");
    IntMatrix d = delete_row(c, 2);
    ok &= check(out, minimal_generators(toric_ideal(d, kRoomy), d, kRoomy).size() == 10,
                "I_D minimal count 10");
    return ok;
}

bool criterion5(std::ostream& out) {
    bool ok = true;
    Graph s1 = make_square("x1", "x2", "x3", "z"), s2 = make_square("y4", "z", "y2", "y3");
    auto sq = check_graph_splitting(s1, s2, {3, 1, false}, kRoomy, 2);
    ok &= check(out, sq.kind == GraphSplitKind::split && sq.graph_report.status == SplitStatus::ok,
                "squares split");
    ok &= check(out,
                sq.graph_report.lhs->elements.size() == 2 &&
                    sq.graph_report.rhs->elements.size() == 2,
                "squares 1 + 1 generators");

    Graph b1 = make_bowtie("x", "z"), b2 = make_bowtie("y", "w");
    auto bt = check_graph_splitting(b1, b2, {5, 5, false}, kRoomy, 2);
    ok &= check(out, bt.kind == GraphSplitKind::no_split && bt.matches_theorem,
                "bow ties do not split");
    BinomialIdeal ig(graph_ring(bt.glued.graph), bt.graph_report.lhs->elements);
    ok &= check(out,
                minimal_generators(ig, incidence_matrix(bt.glued.graph), kRoomy).size() == 5,
                "I_G minimal count 5");
    ok &= check(out, bt.graph_report.rhs->elements.size() == 2, "sum has 2 generators");
    ok &= check(out,
                bt.hypergraph_report && bt.hypergraph_report->status == SplitStatus::ok,
                "bow-tie hypergraph split");

    auto mix = check_graph_splitting(s1, b2, {3, 5, false}, kRoomy, 2);
    ok &= check(out, mix.kind == GraphSplitKind::split && mix.matches_theorem,
                "square + bow tie splits");
    return ok;
}

bool criterion6(std::ostream& out) {
    bool ok = true;
    IntMatrix a{{5, 12, 13, 16}};

    auto first = self_glue_numerical(a, 17, 18);
    ok &= check(out, first.c == IntMatrix{{85, 204, 221, 272, 90, 216, 234, 288}},
                "C entries for (17, 18)");
    auto iter1 = iterate_glue({a, a}, {{17, 18}});
    RingContext ring1 = numerical_glue_ring(iter1);
    ok &= check(out,
                iter1.glue_binomials.size() == 1 &&
                    to_string(iter1.glue_binomials[0], ring1) == "x1*x3 - y1*y2",
                "glue binomial x1x3 - y1y2");
    auto rep1 = verify_numerical_glue({a, a}, iter1, kNumerical, 2);
    ok &= check(out, rep1.status == SplitStatus::ok, "I_C = I_A + I_B + <glue>");
    ok &= check(out,
                rep1.lhs && ideal_contains(BinomialIdeal(ring1, rep1.lhs->elements),
                                           iter1.glue_binomials[0], kNumerical),
                "glue binomial lies in I_C");

    auto second = self_glue_numerical(a, 5, 16);
    ok &= check(out, second.c == IntMatrix{{25, 60, 65, 80, 192, 208, 256}},
                "D entries for (5, 16)");
    ok &= check(out, second.merged, "duplicate column merged");
    auto iter2 = iterate_glue({a, a}, {{5, 16}});
    auto rep2 = verify_numerical_glue({a, a}, iter2, kNumerical, 2);
    ok &= check(out, rep2.status == SplitStatus::ok, "I_D = two embedded copies of I_A");
    return ok;
}

bool criterion7(std::ostream& out) {
    bool ok = true;
    IntMatrix a1{{5, 8, 11}}, a2{{7, 10, 12}}, a3{{6, 11, 14}};

    auto d = iterate_glue({a1, a2, a3}, {{17, 13}, {17, 176}});
    ok &= check(out,
                d.matrix == IntMatrix{{1445, 2312, 3179, 1547, 2210, 2652, 1056, 1936, 2464}},
                "D entrywise");
    auto repd = verify_numerical_glue({a1, a2, a3}, d, kNumerical, 2);
    ok &= check(out, repd.status == SplitStatus::ok, "D splitting identity");

    auto e = iterate_glue({a1, a2, a3}, {{7, 11}, {6, 77}});
    ok &= check(out, e.matrix == IntMatrix{{210, 336, 462, 660, 792, 847, 1078}}, "E entrywise");
    auto repe = verify_numerical_glue({a1, a2, a3}, e, kNumerical, 2);
    if (repe.status == SplitStatus::unverified_budget) {
        out << " [E verification hit the budget guard; matrix reproduction still holds]";
    } else {
        ok &= check(out, repe.status == SplitStatus::ok, "E splitting identity");
    }
    return ok;
}

bool criterion8(std::ostream& out) {
    std::mt19937 gen(20260808);
    const int pairs = 200;
    int skipped = 0, failures = 0, delta_neg = 0, delta_zero = 0;
    const Budget budget{200'000, 80};
    auto note = [&](bool cond, const char* what) {
        if (!cond) {
            ++failures;
            out << " [" << what << "]";
        }
    };

    for (int trial = 0; trial < pairs; ++trial) {
        IntMatrix a = tgtest::random_homogeneous(gen);
        IntMatrix b = tgtest::random_homogeneous(gen);

        // kernel / homogeneity invariants for both matrices
        for (const IntMatrix* m : {&a, &b}) {
            auto cert = homogeneity_certificate(*m);
            note(cert.has_value() && cert->holds_for(*m), "certificate");
            auto basis = kernel_lattice_basis(*m);
            note(basis.size() == m->cols() - rank(*m), "kernel count");
            for (const auto& v : basis) {
                Int sum = 0;
                for (std::size_t i = 0; i < m->rows(); ++i) {
                    Int s = 0;
                    for (std::size_t j = 0; j < m->cols(); ++j) s += (*m)(i, j) * v[j];
                    note(s == 0, "kernel exactness");
                }
                for (const auto& x : v) sum += x;
                note(sum == 0, "kernel coordinate sum");
            }
        }

        // construction identities (no Groebner work)
        auto g = glue_homogeneous(a, b);
        (g.delta == -1 ? delta_neg : delta_zero) += 1;
        const std::size_t p = a.cols();
        for (std::size_t i = 0; i < g.c_tilde.rows(); ++i)
            note(g.c_tilde(i, p - 1) == g.c_tilde(i, p), "duplicate column");
        note(g.a_prime(a.rows() - 1, p - 1) == g.b_prime(a.rows() - 1, 0), "overlap");
        note(rank(g.c_tilde) == rank(a) + rank(b) - 1, "rank identity");
        note((a.cols() + b.cols() - 1) - rank(g.c) ==
                 (a.cols() - rank(a)) + (b.cols() - rank(b)),
             "height identity");

        // Groebner-backed checks, budget-guarded
        try {
            auto res = split_sum(a, b, {}, budget);
            note(res.report.status == SplitStatus::ok, "splitting identity");

            // Lemma 1.3 invariance: a random legal operation on a
            auto cert = homogeneity_certificate(a);
            IntMatrix changed;
            switch (trial % 4) {
                case 0:
                    changed = apply(RowOperation::scale(0, 2), a);
                    break;
                case 1: {
                    Int s = 1 + trial % 3;
                    if (cert->degree + cert->lambda[a.rows() - 1] * s == 0) s += 1;
                    changed = apply(RowOperation::shift(a.rows() - 1, s), a, cert);
                    break;
                }
                case 2:
                    changed = apply(RowOperation::append_constant_row(1 + trial % 2), a);
                    break;
                default:
                    changed = a.rows() > 1 ? apply(RowOperation::add_multiple(0, a.rows() - 1, 1), a)
                                           : apply(RowOperation::scale(0, 3), a);
                    break;
            }
            RingContext ring = standard_ring(a.cols());
            note(ideal_equals(toric_ideal(a, ring, budget), toric_ideal(changed, ring, budget),
                              budget),
                 "row-operation invariance");

            // brute-force fiber oracle, degree bound 8
            auto ideal = toric_ideal(a, budget);
            auto gb = groebner_basis(ideal, budget);
            for (const auto& gen_b : gb.elements)
                note(tgtest::image_of(a, gen_b.plus) == tgtest::image_of(a, gen_b.minus),
                     "basis relations");
            std::map<IntVector, std::vector<Monomial>> fibers;
            tgtest::enumerate_monomials(a.cols(), 8, [&](const Monomial& u) {
                fibers[tgtest::image_of(a, u)].push_back(u);
            });
            for (const auto& [image, monos] : fibers)
                for (std::size_t i = 0; i < monos.size(); ++i)
                    for (std::size_t j = i + 1; j < monos.size(); ++j)
                        note(normal_form(Binomial(monos[i], monos[j]), gb).is_zero(),
                             "fiber oracle");
        } catch (const BudgetExceeded&) {
            ++skipped;
        }
    }
    out << " [" << pairs << " pairs, " << skipped << " skipped by budget]";
    bool ok = failures == 0;
    ok &= check(out, skipped * 20 < pairs, "skip rate below 5%");
    ok &= check(out, delta_neg > 0 && delta_zero > 0, "both delta branches exercised");
    return ok;
}

bool criterion9(std::ostream& out) {
    std::mt19937 gen(20260809);
    int failures = 0;
    auto note = [&](bool cond, const char* what) {
        if (!cond) {
            ++failures;
            out << " [" << what << "]";
        }
    };

    for (int trial = 0; trial < 100; ++trial) {
        Graph g = tgtest::random_connected_graph(gen, 8);
        std::size_t expected = g.n - (is_bipartite(g) ? 1 : 0);
        note(rank(incidence_matrix(g)) == expected, "dimension formula");
    }

    int done = 0, attempts = 0;
    const Budget budget{200'000, 80};
    while (done < 50 && attempts < 200) {
        ++attempts;
        Graph g1 = tgtest::random_connected_graph(gen, 7);
        Graph g2 = tgtest::random_connected_graph(gen, 7);
        try {
            auto chk = check_graph_splitting(g1, g2, {0, 0, attempts % 2 == 1}, budget);
            if (chk.graph_report.status == SplitStatus::unverified_budget) continue;
            ++done;
            note(chk.matches_theorem, "theorem 3.4(1) equivalence");
            note(chk.rank_matches_bipartite, "rank additivity matches bipartiteness");
        } catch (const BudgetExceeded&) {
            continue;
        }
    }
    out << " [" << done << " glued pairs verified]";
    bool ok = failures == 0;
    ok &= check(out, done >= 50, "at least 50 glued pairs");
    return ok;
}

}  // namespace

int main() {
    Harness h;
    h.run(1, "gluing3x5 reproduction", 30, criterion1);
    h.run(2, "splitting3x5 identity", 60, criterion2);
    h.run(3, "Betti tensor diagram", 1, criterion3);
    h.run(4, "homogeneous sift and sift gluing", 60, criterion4);
    h.run(5, "graph theorem suite", 120, criterion5);
    h.run(6, "numerical selfgluing", 120, criterion6);
    h.run(7, "iterated gluing D and E", 300, criterion7);
    h.run(8, "randomized property suite", 600, criterion8);
    h.run(9, "graph dimension formula and theorem equivalence", 300, criterion9);
    if (h.failures == 0)
        std::cout << "all criteria passed\n";
    else
        std::cout << h.failures << " criteria FAILED\n";
    return h.failures;
}
