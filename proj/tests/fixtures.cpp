#include "fixtures.hpp"

namespace fixtures {

using namespace mahler;

Poly P(std::initializer_list<std::pair<int64_t, long>> terms) {
    std::vector<Poly::Term> t;
    for (const auto& [e, c] : terms) t.emplace_back(e, Rational(c));
    return Poly::from_terms(std::move(t));
}

Poly prod(std::initializer_list<Poly> factors) {
    Poly out(1);
    for (const auto& f : factors) out *= f;
    return out;
}

MahlerOperator running_example() {
    Poly l2 = prod({P({{3, 1}}), P({{0, 1}, {3, -1}, {6, 1}}), P({{0, 1}, {7, -1}, {10, -1}})});
    Poly l1 = -P({{0, 1}, {28, -1}, {31, -1}, {37, -1}, {40, -1}});
    Poly l0 = prod({P({{6, 1}}), P({{0, 1}, {1, 1}}), P({{0, 1}, {21, -1}, {30, -1}})});
    return {3, {l0, l1, l2}};
}

MahlerOperator running_transformed() {
    Poly l2 = prod({P({{0, 1}, {6, -1}, {12, 1}}), P({{0, 1}, {14, -1}, {20, -1}})});
    Poly l1 = -P({{0, 1}, {56, -1}, {62, -1}, {74, -1}, {80, -1}});
    Poly l0 = prod({P({{14, 1}}), P({{0, 1}, {2, 1}}), P({{0, 1}, {42, -1}, {60, -1}})});
    return {3, {l0, l1, l2}};
}

MahlerOperator order11_example() {
    return {3,
            {P({{568, 1}}), -P({{1218, 1}, {1705, 1}}), P({{3655, 1}}), -P({{162, 1}, {10962, -1}}),
             P({{0, 1}, {487, 1}, {4104, -1}, {4536, -1}, {32887, -1}}),
             -P({{1, 1}, {11826, -1}, {12313, -1}, {13122, -1}, {13609, -1}}),
             -P({{0, 1}, {35479, 1}, {39367, 1}}), P({{1, 1}, {95634, 1}, {106434, -1}, {118098, -1}}),
             -P({{286416, 1}, {286903, 1}, {319303, -1}, {354295, -1}}), P({{859249, 1}}), P({{2577744, 1}}),
             -P({{7733233, 1}})}};
}

MahlerOperator order11_transformed() {
    return {3,
            {P({{6317233, 1}}), -P({{6353737, 1}, {6385392, 1}}), P({{6494904, 1}}),
             -P({{6216145, 1}, {6918145, -1}}),
             P({{6050473, 1}, {6082128, 1}, {6317233, -1}, {6345313, -1}, {8188128, -1}}),
             -P({{5585112, 1}, {6353737, -1}, {6385392, -1}, {6437977, -1}, {6469632, -1}}),
             // printed as -(t^4188769 - t^6494904 - t^6747624); phi keeps coefficients, so the
             // image of l_6 = -(1 + x^35479 + x^39367) has all signs equal
             -P({{4188769, 1}, {6494904, 1}, {6747624, 1}}),
             P({{0, 1}, {6216145, 1}, {6918145, -1}, {7676305, -1}}),
             -P({{6050473, 1}, {6082128, 1}, {8188128, -1}, {10462608, -1}}), P({{5585112, 1}}),
             P({{4188769, 1}}), -P({{0, 1}})}};
}

MahlerOperator rational_example() {
    Poly l2 = prod({P({{4, 2}, {3, -1}, {1, -1}, {0, 3}}), P({{9, 2}, {0, -1}}), P({{18, 1}, {9, -1}, {0, -1}})});
    Poly l1 = -prod({P({{2, 1}, {0, 1}}), P({{3, 2}, {0, -1}}), P({{4, 1}, {0, 1}}), P({{6, 1}, {3, -1}, {0, -1}}),
                     P({{10, 2}, {9, -1}, {1, -1}, {0, 3}})});
    Poly l0 = prod({P({{2, 1}}), P({{1, 2}, {0, -1}}), P({{2, 1}, {1, 1}, {0, 1}}), P({{2, 1}, {1, -1}, {0, 1}}),
                    P({{2, 1}, {1, -1}, {0, -1}}), P({{12, 2}, {9, -1}, {3, -1}, {0, 3}})});
    return {3, {l0, l1, l2}};
}

MahlerOperator rational_example_cleared() {
    Poly l2 = prod({P({{1, 2}, {0, -1}}), P({{1, 8}, {0, -1}}), P({{2, 1}, {1, -1}, {0, -1}}),
                    P({{2, 1}, {1, -4}, {0, -1}}), P({{2, 4}, {1, 2}, {0, 1}}), P({{4, 2}, {3, -1}, {1, -1}, {0, 3}}),
                    P({{4, 1}, {3, 1}, {2, 2}, {1, -1}, {0, 1}})});
    Poly l1 = -prod({P({{1, 8}, {0, -1}}), P({{2, 1}, {0, 1}}), P({{2, 1}, {1, -4}, {0, -1}}), P({{3, 2}, {0, -1}}),
                     P({{4, 1}, {0, 1}}), P({{6, 1}, {3, -1}, {0, -1}}), P({{6, 4}, {3, 2}, {0, 1}}),
                     P({{10, 2}, {9, -1}, {1, -1}, {0, 3}}), P({{12, 1}, {9, 1}, {6, 2}, {3, -1}, {0, 1}})});
    Poly l0 = prod({P({{2, 1}}), P({{1, 2}, {0, -1}}), P({{2, 1}, {1, 1}, {0, 1}}), P({{2, 1}, {1, -1}, {0, 1}}),
                    P({{2, 1}, {1, -1}, {0, -1}}), P({{2, 4}, {1, 2}, {0, 1}}), P({{3, 2}, {0, -1}}),
                    P({{4, 1}, {3, 1}, {2, 2}, {1, -1}, {0, 1}}), P({{6, 1}, {3, -1}, {0, -1}}),
                    P({{6, 4}, {3, 2}, {0, 1}}), P({{12, 1}, {9, 1}, {6, 2}, {3, -1}, {0, 1}}),
                    P({{12, 2}, {9, -1}, {3, -1}, {0, 3}})});
    return {3, {l0, l1, l2}};
}

MahlerOperator reduction_example() {
    Poly l1 = prod({P({{9, 1}}), P({{0, 1}, {15, -1}, {51, 1}, {54, 1}, {87, -1}, {108, 1}}),
                    P({{0, 1}, {12, -1}, {24, 1}})});
    Poly l2 = -prod({P({{3, 1}}),
                     P({{0, 1},   {6, 1},   {20, -1},  {21, -1},  {30, 1},  {32, 1},   {33, 1},   {36, 1},
                        {44, -1}, {45, -1}, {54, 1},   {56, 1},   {57, 1},  {60, 1},   {68, -1},  {69, -1},
                        {80, 1},  {81, 1},  {84, 1},   {90, 1},   {92, -1}, {93, -1},  {104, 1},  {105, 1},
                        {108, 1}, {114, 1}, {116, -1}, {117, -1}, {138, 1}, {144, 1}})});
    Poly l3 = P({{0, 1},   {3, 1},   {5, -1},   {17, 1},  {18, 1},  {21, 1},   {23, -1},  {29, -1},
                 {35, 1},  {36, 1},  {39, 1},   {47, -1}, {54, 1},  {57, 1},   {72, 1},   {75, 1},
                 {90, 1},  {93, 1},  {95, -1},  {107, 1}, {108, 1}, {111, 1},  {113, -1}, {119, -1},
                 {125, 1}, {126, 1}, {129, 1},  {137, -1}, {144, 1}, {147, 1}});
    Poly l4 = -prod({P({{0, 1}, {27, 1}, {54, 1}}), P({{0, 1}, {27, -1}, {54, 1}}),
                     P({{0, 1}, {5, -1}, {17, 1}, {18, 1}, {29, -1}, {36, 1}})});
    return {3, {Poly(), l1, l2, l3, l4}};
}

MahlerOperator reduction_result() {
    Poly c = prod({P({{3, 1}}), P({{0, 1}, {1, 1}, {2, 1}}), P({{0, 1}, {1, -1}, {2, 1}})});
    Poly l0 = prod({c, P({{2, 1}}), P({{0, 1}, {4, -1}, {8, 1}})});
    Poly l1 = -prod({c, P({{0, 1}, {2, -1}, {4, 1}, {6, -1}, {8, 1}}), P({{0, 1}, {2, 2}, {4, 1}})});
    Poly l2 = prod({c, P({{0, 1}, {3, 1}, {6, 1}}), P({{0, 1}, {3, -1}, {6, 1}})});
    return {3, {l0, l1, l2}};
}

MahlerOperator reduction_result_primitive() {
    Poly l0 = prod({P({{2, 1}}), P({{0, 1}, {4, -1}, {8, 1}})});
    Poly l1 = -prod({P({{0, 1}, {2, -1}, {4, 1}, {6, -1}, {8, 1}}), P({{0, 1}, {2, 2}, {4, 1}})});
    Poly l2 = prod({P({{0, 1}, {3, 1}, {6, 1}}), P({{0, 1}, {3, -1}, {6, 1}})});
    return {3, {l0, l1, l2}};
}

Rational Gen::small_rational(int64_t mag) {
    int64_t num = 0;
    while (num == 0) num = range(-mag, mag);
    int64_t den = coin(0.8) ? 1 : range(1, 3);
    return make_rational(num, den);
}

Poly Gen::poly(int64_t deg, double density, bool nonzero) {
    for (;;) {
        std::vector<Poly::Term> t;
        for (int64_t e = 0; e <= deg; ++e)
            if (coin(density)) t.emplace_back(e, small_rational());
        Poly p = Poly::from_terms(std::move(t));
        if (!nonzero || !p.is_zero()) return p;
    }
}

MahlerOperator Gen::op(int64_t radix, int order, int64_t deg, bool trailing_nonzero, double density) {
    std::vector<Poly> c;
    for (int k = 0; k <= order; ++k) {
        bool need = (k == order) || (k == 0 && trailing_nonzero);
        c.push_back(need ? poly(range(0, deg), density, true) : (coin(0.75) ? poly(range(0, deg), density, false) : Poly()));
    }
    if (!trailing_nonzero) c[0] = Poly();
    return {radix, std::move(c)};
}

MahlerOperator Gen::planted(int64_t radix, int max_order, int64_t deg) {
    MahlerOperator K;
    switch (range(0, 2)) {
    case 0:
    case 1: {
        Poly p = poly(range(0, 2)), q = range(0, 1) == 0 ? Poly(1) : poly(range(1, 2));
        if (q.coeff(0) == 0) q += Poly(1);
        if (p.coeff(0) == 0) p += Poly(1);
        K = {radix, {-(mahler_substitute(p, radix, 1) * q), p * mahler_substitute(q, radix, 1)}};
        break;
    }
    default: {
        Poly l1 = poly(range(0, deg)), l0 = poly(range(0, deg));
        if (l1.coeff(0) == 0) l1 += Poly(1);
        l0 += Poly(-l1.coeff(0) - l0.coeff(0));
        if (l0.is_zero()) l0 = Poly(-l1.coeff(0));
        K = {radix, {l0, l1}};
    }
    }
    auto A = op(radix, static_cast<int>(range(0, max_order - 1)), deg);
    return primitive_part(multiply(A, K)).primitive;
}

}  // namespace fixtures
