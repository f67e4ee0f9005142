#include "uqg/catalog.hpp"

#include <functional>
#include <sstream>

#include "json.hpp"
#include "uqg/arith.hpp"
#include "uqg/search.hpp"

namespace uqg {

using Z = boost::multiprecision::cpp_int;
using ojson = nlohmann::ordered_json;

namespace {

const std::vector<std::pair<FormulaId, std::string>> kNames = {
    {FormulaId::P4_1, "P4_1"},   {FormulaId::P4_2, "P4_2"},   {FormulaId::P4_3, "P4_3"},
    {FormulaId::P4_4, "P4_4"},   {FormulaId::P4_5, "P4_5"},   {FormulaId::P4_6, "P4_6"},
    {FormulaId::P4_7, "P4_7"},   {FormulaId::P4_8, "P4_8"},   {FormulaId::P4_10, "P4_10"},
    {FormulaId::P4_12, "P4_12"}, {FormulaId::P4_14, "P4_14"}, {FormulaId::P5_1, "P5_1"},
    {FormulaId::P5_2, "P5_2"},   {FormulaId::P5_3, "P5_3"},   {FormulaId::P5_4, "P5_4"},
    {FormulaId::R5_6, "R5_6"},
};

// Parameters plus the characteristic data derived from q.
struct Ctx {
    const Params& params;
    int64_t p = 0, h = 0;

    bool has(const std::string& k) const { return params.count(k) != 0; }
    int64_t operator()(const std::string& k) const {
        auto it = params.find(k);
        if (it == params.end()) fail("MissingParameter", "parameter '" + k + "' is required");
        return it->second;
    }
    int64_t flag(const std::string& k, int64_t fallback) const { return has(k) ? params.at(k) : fallback; }
};

struct Cond {
    std::string name;
    std::function<bool(const Ctx&)> test;
};

struct Branch {
    std::string label;
    std::string printed;
    std::vector<Cond> when;
    std::function<Rational(const Ctx&)> value;
};

struct Formula {
    FormulaId id;
    std::vector<std::string> required;
    std::vector<Cond> hypotheses;
    std::vector<Branch> branches;
};

Rational frac(const Z& num, const Z& den) { return Rational(num, den); }

bool divides(int64_t a, int64_t b) { return a != 0 && b % a == 0; }

// log_base(x) when x is a power of base, -1 otherwise.
int64_t exact_log(int64_t base, int64_t x) {
    if (base < 2 || x < 1) return -1;
    int64_t k = 0;
    while (x > 1) {
        if (x % base) return -1;
        x /= base;
        ++k;
    }
    return k;
}

// Sum of phi(d') over divisors d' of n; phi(1) counts as phi_one.
int64_t phi_sum(int64_t n, int64_t phi_one) {
    int64_t s = 0;
    for (uint64_t d : divisors(static_cast<uint64_t>(n))) s += d == 1 ? phi_one : static_cast<int64_t>(euler_phi(d));
    return s;
}

int64_t gcd64(int64_t a, int64_t b) { return static_cast<int64_t>(gcd(static_cast<uint64_t>(a), static_cast<uint64_t>(b))); }

Cond cond(std::string name, std::function<bool(const Ctx&)> t) { return {std::move(name), std::move(t)}; }

Cond m_divides_q1() { return cond("m | q+1", [](const Ctx& c) { return divides(c("m"), c("q") + 1); }); }
Cond m_odd() { return cond("m odd", [](const Ctx& c) { return c("m") % 2 == 1; }); }
Cond central(bool yes) {
    return cond(yes ? "alpha central" : "alpha not central",
                [yes](const Ctx& c) { return (c.flag("central", 1) != 0) == yes; });
}
Cond commuting(bool yes) {
    return cond(yes ? "alpha beta = beta alpha" : "alpha beta != beta alpha",
                [yes](const Ctx& c) { return (c("commuting") != 0) == yes; });
}
Cond q_mod(int64_t mod, std::vector<int64_t> res) {
    std::string name = "q mod " + std::to_string(mod) + " in {";
    for (size_t i = 0; i < res.size(); ++i) name += (i ? "," : "") + std::to_string(res[i]);
    name += "}";
    return cond(name, [mod, res](const Ctx& c) {
        for (int64_t r : res)
            if (c("q") % mod == r) return true;
        return false;
    });
}
Cond m_is(int64_t v) { return cond("m = " + std::to_string(v), [v](const Ctx& c) { return c("m") == v; }); }
Cond sg_is(int64_t order, int64_t id) {
    return cond("G = SmallGroup(" + std::to_string(order) + "," + std::to_string(id) + ")",
                [id](const Ctx& c) { return c("sg") == id; });
}

std::vector<Formula> build_catalog() {
    std::vector<Formula> out;

    out.push_back({FormulaId::P4_1,
                   {"q", "pk", "d"},
                   {cond("p^k is a power of p dividing the degree of q",
                         [](const Ctx& c) {
                             const int64_t k = exact_log(c.p, c("pk"));
                             return k >= 1 && c.h % k == 0;
                         }),
                    cond("d | q-1", [](const Ctx& c) { return divides(c("d"), c("q") - 1); })},
                   {{"", "(q-p^k)(q+1-gcd(d,2))/(2dp^k)", {},
                     [](const Ctx& c) {
                         const Z q = c("q"), pk = c("pk"), d = c("d");
                         return frac((q - pk) * (q + 1 - gcd64(c("d"), 2)), 2 * d * pk);
                     }}}});

    out.push_back({FormulaId::P4_2,
                   {"q"},
                   {cond("p = 3", [](const Ctx& c) { return c.p == 3; }),
                    cond("5 | q^2-1", [](const Ctx& c) { return (c("q") * c("q") - 1) % 5 == 0; })},
                   {{"", "(q^2-22q+117-48[(h+2) mod 4])/240", {},
                     [](const Ctx& c) {
                         const Z q = c("q");
                         return frac(q * q - 22 * q + 117 - 48 * ((c.h + 2) % 4), 240);
                     }}}});

    auto qbar_power = cond("q is a power of qbar", [](const Ctx& c) {
        return exact_log(c.p, c("qbar")) >= 1 && exact_log(c("qbar"), c("q")) >= 1;
    });
    auto odd_p = cond("p odd", [](const Ctx& c) { return c.p % 2 == 1; });
    out.push_back({FormulaId::P4_3,
                   {"q", "qbar"},
                   {qbar_power, odd_p},
                   {{"odd power", "(q-qbar)(q-qbar^2+qbar-1)/(2qbar(qbar^2-1))",
                     {cond("q = qbar^(2r+1)", [](const Ctx& c) { return exact_log(c("qbar"), c("q")) % 2 == 1; })},
                     [](const Ctx& c) {
                         const Z q = c("q"), b = c("qbar");
                         return frac((q - b) * (q - b * b + b - 1), 2 * b * (b * b - 1));
                     }},
                    {"even power", "(q-1)(q-qbar^2)/(2qbar(qbar^2-1))",
                     {cond("q = qbar^(2r), r >= 1", [](const Ctx& c) { return exact_log(c("qbar"), c("q")) % 2 == 0; })},
                     [](const Ctx& c) {
                         const Z q = c("q"), b = c("qbar");
                         return frac((q - 1) * (q - b * b), 2 * b * (b * b - 1));
                     }}}});

    out.push_back({FormulaId::P4_4,
                   {"q", "qbar"},
                   {qbar_power, odd_p,
                    cond("q = qbar^(2r), r >= 1", [](const Ctx& c) { return exact_log(c("qbar"), c("q")) % 2 == 0; })},
                   {{"", "(q-qbar^2)(q-1)/(4qbar(qbar^2-1))", {},
                     [](const Ctx& c) {
                         const Z q = c("q"), b = c("qbar");
                         return frac((q - b * b) * (q - 1), 4 * b * (b * b - 1));
                     }}}});

    auto d_odd = cond("d odd", [](const Ctx& c) { return c("d") % 2 == 1; });
    auto d_even = cond("d even", [](const Ctx& c) { return c("d") % 2 == 0; });
    auto m_gt2 = cond("m > 2", [](const Ctx& c) { return c("m") > 2; });
    out.push_back(
        {FormulaId::P4_5,
         {"q", "d", "m", "commuting"},
         {cond("d | q-1", [](const Ctx& c) { return divides(c("d"), c("q") - 1); }), m_divides_q1()},
         {{"B1", "(q-1)^2/(4d)", {d_odd, m_is(2), commuting(true)},
           [](const Ctx& c) {
               const Z q = c("q"), d = c("d");
               return frac((q - 1) * (q - 1), 4 * d);
           }},
          {"B2", "(q-1)(q-d)/(4d)", {d_odd, m_is(2), commuting(false)},
           [](const Ctx& c) {
               const Z q = c("q"), d = c("d");
               return frac((q - 1) * (q - d), 4 * d);
           }},
          {"B3", "(q-1)(q-d-1)/(4d)", {d_even, m_is(2)},
           [](const Ctx& c) {
               const Z q = c("q"), d = c("d");
               return frac((q - 1) * (q - d - 1), 4 * d);
           }},
          {"B4", "(q-1)(q-m+1)/(2md)", {d_odd, m_gt2, commuting(true)},
           [](const Ctx& c) {
               const Z q = c("q"), d = c("d"), m = c("m");
               return frac((q - 1) * (q - m + 1), 2 * m * d);
           }},
          {"B5", "(2(q^2-1)-m(q-1-2d))/(4md)",
           {d_odd, m_gt2, cond("m = 0 mod 4", [](const Ctx& c) { return c("m") % 4 == 0; }), commuting(false)},
           [](const Ctx& c) {
               const Z q = c("q"), d = c("d"), m = c("m");
               return frac(2 * (q * q - 1) - m * (q - 1 - 2 * d), 4 * m * d);
           }},
          {"B6", "(2(q^2-1-d(q+1))-m(q-1+2d))/(4md)",
           {d_odd, m_gt2, cond("m = 2 mod 4", [](const Ctx& c) { return c("m") % 4 == 2; }), commuting(false)},
           [](const Ctx& c) {
               const Z q = c("q"), d = c("d"), m = c("m");
               return frac(2 * (q * q - 1 - d * (q + 1)) - m * (q - 1 + 2 * d), 4 * m * d);
           }},
          {"B7", "(q-1)(q+1-2m)/(2md)",
           {d_even, m_gt2, cond("m odd", [](const Ctx& c) { return c("m") % 2 == 1; }), commuting(true)},
           [](const Ctx& c) {
               const Z q = c("q"), d = c("d"), m = c("m");
               return frac((q - 1) * (q + 1 - 2 * m), 2 * m * d);
           }},
          {"B8", "(q-1-d)(q+1-m)/(2md)",
           {d_even, cond("m = 2 mod 4", [](const Ctx& c) { return c("m") % 4 == 2; }), commuting(false)},
           [](const Ctx& c) {
               const Z q = c("q"), d = c("d"), m = c("m");
               return frac((q - 1 - d) * (q + 1 - m), 2 * m * d);
           }}}});

    // e sums phi over the divisors of gcd(m,d) with phi(1) = 0, as in the proof.
    auto e_of = [](const Ctx& c) { return Z(phi_sum(gcd64(c("m"), c("d")), 0)); };
    out.push_back(
        {FormulaId::P4_6,
         {"q", "d", "m", "commuting"},
         {cond("d | q+1", [](const Ctx& c) { return divides(c("d"), c("q") + 1); }),
          cond("d != 2", [](const Ctx& c) { return c("d") != 2; }), m_divides_q1()},
         {{"B1", "(q^2-2q-3+4d)/(4d)", {d_odd, m_is(2), commuting(true)},
           [](const Ctx& c) {
               const Z q = c("q"), d = c("d");
               return frac(q * q - 2 * q - 3 + 4 * d, 4 * d);
           }},
          {"B2", "((q+1)(q-2-d)+4d)/(4d)", {d_odd, m_is(2), commuting(false)},
           [](const Ctx& c) {
               const Z q = c("q"), d = c("d");
               return frac((q + 1) * (q - 2 - d) + 4 * d, 4 * d);
           }},
          {"B3", "((q+1)(q-1-m-2e)+2md)/(2md)", {d_odd, m_gt2, commuting(true)},
           [e_of](const Ctx& c) {
               const Z q = c("q"), d = c("d"), m = c("m");
               return frac((q + 1) * (q - 1 - m - 2 * e_of(c)) + 2 * m * d, 2 * m * d);
           }},
          {"B4", "((q+1)(q-5)+4d)/(4d)", {d_even, m_is(2), commuting(true)},
           [](const Ctx& c) {
               const Z q = c("q"), d = c("d");
               return frac((q + 1) * (q - 5) + 4 * d, 4 * d);
           }},
          {"B5", "((q+1)(q-3-d)+4d)/(4d)", {d_even, m_is(2), commuting(false)},
           [](const Ctx& c) {
               const Z q = c("q"), d = c("d");
               return frac((q + 1) * (q - 3 - d) + 4 * d, 4 * d);
           }},
          {"B6", "((q+1)(q-2-m-2e)+2md)/(2md)", {d_even, m_gt2, commuting(true)},
           [e_of](const Ctx& c) {
               const Z q = c("q"), d = c("d"), m = c("m");
               return frac((q + 1) * (q - 2 - m - 2 * e_of(c)) + 2 * m * d, 2 * m * d);
           }}}});

    auto D3 = [](const Ctx& c) { return Z(gcd64(c("m"), 3)); };
    out.push_back(
        {FormulaId::P4_7,
         {"q", "m"},
         {cond("p >= 7", [](const Ctx& c) { return c.p >= 7; }),
          cond("q = 1 mod 5", [](const Ctx& c) { return c("q") % 5 == 1; }), m_divides_q1(), central(true), m_odd()},
         {{"q=1 (12)", "((q+1)(q-1-2m)+4m)/(240m)", {q_mod(12, {1})},
           [](const Ctx& c) {
               const Z q = c("q"), m = c("m");
               return frac((q + 1) * (q - 1 - 2 * m) + 4 * m, 240 * m);
           }},
          {"q=7 (12)", "((q+1)(q-1-2m)+64m)/(240m)", {q_mod(12, {7})},
           [](const Ctx& c) {
               const Z q = c("q"), m = c("m");
               return frac((q + 1) * (q - 1 - 2 * m) + 64 * m, 240 * m);
           }},
          {"q=5 (12)", "((q+1)(q-2m-20D+19)+84m)/(240m)", {q_mod(12, {5})},
           [D3](const Ctx& c) {
               const Z q = c("q"), m = c("m");
               return frac((q + 1) * (q - 2 * m - 20 * D3(c) + 19) + 84 * m, 240 * m);
           }},
          {"q=11 (12)", "((q+1)(q-2m-20D+19)+144m)/(240m)", {q_mod(12, {11})},
           [D3](const Ctx& c) {
               const Z q = c("q"), m = c("m");
               return frac((q + 1) * (q - 2 * m - 20 * D3(c) + 19) + 144 * m, 240 * m);
           }}}});

    auto S8 = [](const Ctx& c) { return Z((c("q") + 1) % 8 == 0 ? 0 : 2); };
    auto plus_one = [](Z num, int64_t den) { return frac(num, den) + 1; };
    out.push_back(
        {FormulaId::P4_8,
         {"q", "m"},
         {cond("p >= 5", [](const Ctx& c) { return c.p >= 5; }), m_divides_q1()},
         {{"central, q=1 (12)", "((q+1)(q-1-2m)+4m)/(48m)", {central(true), m_odd(), q_mod(12, {1})},
           [](const Ctx& c) {
               const Z q = c("q"), m = c("m");
               return frac((q + 1) * (q - 1 - 2 * m) + 4 * m, 48 * m);
           }},
          {"central, q=7 (12)", "((q+1)(q-1-2m)+16m)/(48m)", {central(true), m_odd(), q_mod(12, {7})},
           [](const Ctx& c) {
               const Z q = c("q"), m = c("m");
               return frac((q + 1) * (q - 1 - 2 * m) + 16 * m, 48 * m);
           }},
          {"central, q=5 (12)", "((q+1)(q-2m-8D+7)+36m)/(48m)", {central(true), m_odd(), q_mod(12, {5})},
           [D3](const Ctx& c) {
               const Z q = c("q"), m = c("m");
               return frac((q + 1) * (q - 2 * m - 8 * D3(c) + 7) + 36 * m, 48 * m);
           }},
          {"central, q=11 (12)", "((q+1)(q-2m-8D+7)+48m)/(48m)", {central(true), m_odd(), q_mod(12, {11})},
           [D3](const Ctx& c) {
               const Z q = c("q"), m = c("m");
               return frac((q + 1) * (q - 2 * m - 8 * D3(c) + 7) + 48 * m, 48 * m);
           }},
          {"non-central, m=2, q=1 (12)", "(q^2-q-2-13(q+1)-68)/96+1", {central(false), m_is(2), q_mod(12, {1})},
           [plus_one](const Ctx& c) {
               const Z q = c("q");
               return plus_one(q * q - q - 2 - 13 * (q + 1) - 68, 96);
           }},
          {"non-central, m=2, q=5 (12)", "(q^2-q-2-13(q+1)-36)/96+1", {central(false), m_is(2), q_mod(12, {5})},
           [plus_one](const Ctx& c) {
               const Z q = c("q");
               return plus_one(q * q - q - 2 - 13 * (q + 1) - 36, 96);
           }},
          {"non-central, m=2, q=7 (24), SG(48,29)", "(q^2-q-2-13(q+1)-32)/96+1",
           {central(false), m_is(2), q_mod(24, {7}), sg_is(48, 29)},
           [plus_one](const Ctx& c) {
               const Z q = c("q");
               return plus_one(q * q - q - 2 - 13 * (q + 1) - 32, 96);
           }},
          {"non-central, m=2, q=23 (24), SG(48,29)", "(q^2-q-2-13(q+1))/96+1",
           {central(false), m_is(2), q_mod(24, {23}), sg_is(48, 29)},
           [plus_one](const Ctx& c) {
               const Z q = c("q");
               return plus_one(q * q - q - 2 - 13 * (q + 1), 96);
           }},
          {"non-central, m=2, q=7 (12), SG(48,33)", "(q^2-q-2-10(q+1)-64)/96+1",
           {central(false), m_is(2), q_mod(12, {7}), sg_is(48, 33)},
           [plus_one](const Ctx& c) {
               const Z q = c("q");
               return plus_one(q * q - q - 2 - 10 * (q + 1) - 64, 96);
           }},
          {"non-central, m=2, q=11 (12), SG(48,33)", "(q^2-q-2-10(q+1))/96+1",
           {central(false), m_is(2), q_mod(12, {11}), sg_is(48, 33)},
           [plus_one](const Ctx& c) {
               const Z q = c("q");
               return plus_one(q * q - q - 2 - 10 * (q + 1), 96);
           }},
          {"non-central, m=4, q=7 (12), SG(96,74)", "(q^2-q-2-13(q+1)-128)/192+1",
           {central(false), m_is(4), q_mod(12, {7}), sg_is(96, 74)},
           [plus_one](const Ctx& c) {
               const Z q = c("q");
               return plus_one(q * q - q - 2 - 13 * (q + 1) - 128, 192);
           }},
          {"non-central, m=4, q=11 (12), SG(96,74)", "(q^2-q-2-13(q+1))/192+1",
           {central(false), m_is(4), q_mod(12, {11}), sg_is(96, 74)},
           [plus_one](const Ctx& c) {
               const Z q = c("q");
               return plus_one(q * q - q - 2 - 13 * (q + 1), 192);
           }},
          {"non-central, m=4, q=7 (12), SG(96,67)", "(q^2-q-2-21(q+1)-32-24S)/192+1",
           {central(false), m_is(4), q_mod(12, {7}), sg_is(96, 67)},
           [plus_one, S8](const Ctx& c) {
               const Z q = c("q");
               return plus_one(q * q - q - 2 - 21 * (q + 1) - 32 - 24 * S8(c), 192);
           }},
          {"non-central, m=4, q=11 (12), SG(96,67)", "(q^2-q-2-21(q+1)-24S)/192+1",
           {central(false), m_is(4), q_mod(12, {11}), sg_is(96, 67)},
           [plus_one, S8](const Ctx& c) {
               const Z q = c("q");
               return plus_one(q * q - q - 2 - 21 * (q + 1) - 24 * S8(c), 192);
           }}}});

    out.push_back(
        {FormulaId::P4_10,
         {"q", "m"},
         {cond("p >= 5", [](const Ctx& c) { return c.p >= 5; }),
          cond("q^2 = 1 mod 16", [](const Ctx& c) { return (c("q") * c("q")) % 16 == 1; }), m_divides_q1(),
          central(true), m_odd()},
         {{"q=1,13 (24)", "((q+1)(q-1-2m)+4m)/(96m)", {q_mod(24, {1, 13})},
           [](const Ctx& c) {
               const Z q = c("q"), m = c("m");
               return frac((q + 1) * (q - 1 - 2 * m) + 4 * m, 96 * m);
           }},
          {"q=5,17 (24)", "((q+1)(q+7-2m-8D)+36m)/(96m)", {q_mod(24, {5, 17})},
           [D3](const Ctx& c) {
               const Z q = c("q"), m = c("m");
               return frac((q + 1) * (q + 7 - 2 * m - 8 * D3(c)) + 36 * m, 96 * m);
           }},
          {"q=7,19 (24)", "((q+1)(q-1-2m)+64m)/(96m)", {q_mod(24, {7, 19})},
           [](const Ctx& c) {
               const Z q = c("q"), m = c("m");
               return frac((q + 1) * (q - 1 - 2 * m) + 64 * m, 96 * m);
           }},
          {"q=11,23 (24)", "((q+1)(q+7-2m-8D)+96m)/(96m)", {q_mod(24, {11, 23})},
           [D3](const Ctx& c) {
               const Z q = c("q"), m = c("m");
               return frac((q + 1) * (q + 7 - 2 * m - 8 * D3(c)) + 96 * m, 96 * m);
           }}}});

    out.push_back(
        {FormulaId::P4_12,
         {"q", "m"},
         {odd_p, m_divides_q1()},
         {{"central, q=1 (4)", "((q+1)(q-1-2m)+4m)/(16m)", {central(true), m_odd(), q_mod(4, {1})},
           [](const Ctx& c) {
               const Z q = c("q"), m = c("m");
               return frac((q + 1) * (q - 1 - 2 * m) + 4 * m, 16 * m);
           }},
          {"central, q=3 (4)", "((q+1)(q-1-2m)+16m)/(16m)", {central(true), m_odd(), q_mod(4, {3})},
           [](const Ctx& c) {
               const Z q = c("q"), m = c("m");
               return frac((q + 1) * (q - 1 - 2 * m) + 16 * m, 16 * m);
           }},
          {"non-central, m=2, q=1 (4), SG(16,8)", "(q-1)(q-5)/32", {central(false), m_is(2), q_mod(4, {1}), sg_is(16, 8)},
           [](const Ctx& c) {
               const Z q = c("q");
               return frac((q - 1) * (q - 5), 32);
           }},
          {"non-central, m=2, q=7 (8), SG(16,8)", "(q^2-6q+25)/32", {central(false), m_is(2), q_mod(8, {7}), sg_is(16, 8)},
           [](const Ctx& c) {
               const Z q = c("q");
               return frac(q * q - 6 * q + 25, 32);
           }},
          {"non-central, m=2, q=1 (8), SG(16,13)", "(q-1)(q-7)/32",
           {central(false), m_is(2), q_mod(8, {1}), sg_is(16, 13)},
           [](const Ctx& c) {
               const Z q = c("q");
               return frac((q - 1) * (q - 7), 32);
           }},
          {"non-central, m=2, q=3 (4), SG(16,13)", "(q-7)(q-3)/32",
           {central(false), m_is(2), q_mod(4, {3}), sg_is(16, 13)},
           [](const Ctx& c) {
               const Z q = c("q");
               return frac((q - 7) * (q - 3), 32);
           }},
          {"non-central, m=3, q=1 (4), SG(24,3)", "(q-5)^2/48", {central(false), m_is(3), q_mod(4, {1}), sg_is(24, 3)},
           [](const Ctx& c) {
               const Z q = c("q");
               return frac((q - 5) * (q - 5), 48);
           }},
          {"non-central, m=3, q=3 (4), SG(24,3)", "(q^2-10q+37)/48",
           {central(false), m_is(3), q_mod(4, {3}), sg_is(24, 3)},
           [](const Ctx& c) {
               const Z q = c("q");
               return frac(q * q - 10 * q + 37, 48);
           }}}});

    // phi(1) = 0 here as well; the engine confirms the convention.
    auto Dmn = [](const Ctx& c) { return Z(phi_sum(gcd64(c("m"), c("n")), 0)); };
    auto n_minus = cond("n | (q-1)/2", [](const Ctx& c) { return (c("q") - 1) % 2 == 0 && divides(c("n"), (c("q") - 1) / 2); });
    auto n_plus = cond("n | (q+1)/2", [](const Ctx& c) { return (c("q") + 1) % 2 == 0 && divides(c("n"), (c("q") + 1) / 2); });
    out.push_back(
        {FormulaId::P4_14,
         {"q", "n", "m"},
         {odd_p, cond("n > 2", [](const Ctx& c) { return c("n") > 2; }), m_divides_q1()},
         {{"q=1 (4), n | (q-1)/2, central", "((q+1)(q-1-2m)+4m)/(8mn)", {q_mod(4, {1}), n_minus, m_odd(), central(true)},
           [](const Ctx& c) {
               const Z q = c("q"), m = c("m"), n = c("n");
               return frac((q + 1) * (q - 1 - 2 * m) + 4 * m, 8 * m * n);
           }},
          {"q=1 (4), n | (q+1)/2, central", "((q+1)(q-1-2m-2D)+4mn)/(8mn)", {q_mod(4, {1}), n_plus, m_odd(), central(true)},
           [Dmn](const Ctx& c) {
               const Z q = c("q"), m = c("m"), n = c("n");
               return frac((q + 1) * (q - 1 - 2 * m - 2 * Dmn(c)) + 4 * m * n, 8 * m * n);
           }},
          // Printed with an empty leading factor "()"; evaluated without it.
          {"q=1 (4), n | (q-1)/2, non-central, m=2", "((q+1)(q-3-2n)+4n)/(16n)",
           {q_mod(4, {1}), n_minus, central(false), m_is(2)},
           [](const Ctx& c) {
               const Z q = c("q"), n = c("n");
               return frac((q + 1) * (q - 3 - 2 * n) + 4 * n, 16 * n);
           }},
          {"q=1 (4), n | (q+1)/2, non-central, m=2", "((q+1)(q-5-2n)+12n)/(16n)",
           {q_mod(4, {1}), n_plus, central(false), m_is(2)},
           [](const Ctx& c) {
               const Z q = c("q"), n = c("n");
               return frac((q + 1) * (q - 5 - 2 * n) + 12 * n, 16 * n);
           }},
          {"q=3 (4), n | (q-1)/2, central", "((q+1)(q-1-2m)+4m(n+1))/(8mn)",
           {q_mod(4, {3}), n_minus, m_odd(), cond("n odd", [](const Ctx& c) { return c("n") % 2 == 1; }), central(true)},
           [](const Ctx& c) {
               const Z q = c("q"), m = c("m"), n = c("n");
               return frac((q + 1) * (q - 1 - 2 * m) + 4 * m * (n + 1), 8 * m * n);
           }},
          {"q=3 (4), n | (q+1)/2, central", "((q+1)(q-1-2m-2D)+8mn)/(8mn)", {q_mod(4, {3}), n_plus, m_odd(), central(true)},
           [Dmn](const Ctx& c) {
               const Z q = c("q"), m = c("m"), n = c("n");
               return frac((q + 1) * (q - 1 - 2 * m - 2 * Dmn(c)) + 8 * m * n, 8 * m * n);
           }}}});

    out.push_back(
        {FormulaId::P5_1,
         {"q", "qbar"},
         {qbar_power, cond("h/k odd", [](const Ctx& c) { return exact_log(c("qbar"), c("q")) % 2 == 1; }),
          cond("delta determined",
               [](const Ctx& c) {
                   if (c.has("delta")) return c("delta") == 0 || c("delta") == 3;
                   const int64_t b = c("qbar"), q = c("q"), s = b * b - b + 1;
                   return divides(s, q * q - q + 1) || (divides(s, q + 1) && b != 2);
               })},
         {{"", "1+(q^2-q-2-Delta)/(2qbar^3(qbar^3+1)(qbar^2-1))", {},
           [](const Ctx& c) {
               const Z q = c("q"), b = c("qbar");
               int64_t delta = 0;
               if (c.has("delta")) {
                   delta = c("delta");
               } else {
                   const int64_t bb = c("qbar"), qq = c("q"), s = bb * bb - bb + 1;
                   delta = divides(s, qq * qq - qq + 1) ? 3 : 0;
               }
               const Z b2 = b * b, b3 = b2 * b, b4 = b3 * b, b5 = b4 * b, b6 = b5 * b;
               const Z Delta = (b - 1) * (b3 + 1) * (q + 2) + (b3 - b) * (b3 + 1) * 2 +
                               b * (b4 - b3 + b2) * (q + 1) + (b2 - b - 2) * ((b3 + 1) * b3 / 2) * 2 +
                               (b - 1) * b * (b3 + 1) * b2 * 1 + (b2 - b) * ((b6 + b5 - b4 - b3) / 3) * delta;
               return frac(q * q - q - 2 - Delta, 2 * b3 * (b3 + 1) * (b2 - 1)) + 1;
           }}}});

    out.push_back({FormulaId::P5_2,
                   {"q", "n"},
                   {cond("n != 2", [](const Ctx& c) { return c("n") != 2; }),
                    cond("n | q+1", [](const Ctx& c) { return divides(c("n"), c("q") + 1); }),
                    cond("n prime", [](const Ctx& c) { return is_prime(static_cast<uint64_t>(c("n"))); }),
                    cond("3 | q-1", [](const Ctx& c) { return (c("q") - 1) % 3 == 0; }),
                    cond("3 | n-1", [](const Ctx& c) { return (c("n") - 1) % 3 == 0; })},
                   {{"", "((q+1)(q-2)+2n)/(6n)", {},
                     [](const Ctx& c) {
                         const Z q = c("q"), n = c("n");
                         return frac((q + 1) * (q - 2) + 2 * n, 6 * n);
                     }}}});

    out.push_back({FormulaId::P5_3,
                   {"q"},
                   {cond("p > 3", [](const Ctx& c) { return c.p > 3; })},
                   {{"3 | q+1", "1+(q+1)(q-2)/24", {cond("3 | q+1", [](const Ctx& c) { return (c("q") + 1) % 3 == 0; })},
                     [](const Ctx& c) {
                         const Z q = c("q");
                         return frac((q + 1) * (q - 2), 24) + 1;
                     }},
                    {"3 | q-1", "((q+1)(q-2)+8)/24", {cond("3 | q-1", [](const Ctx& c) { return (c("q") - 1) % 3 == 0; })},
                     [](const Ctx& c) {
                         const Z q = c("q");
                         return frac((q + 1) * (q - 2) + 8, 24);
                     }}}});

    out.push_back({FormulaId::P5_4,
                   {"q"},
                   {cond("p = 3", [](const Ctx& c) { return c.p == 3; })},
                   {{"3 | q+1", "((q+1)(q-5)+6)/12", {cond("3 | q+1", [](const Ctx& c) { return (c("q") + 1) % 3 == 0; })},
                     [](const Ctx& c) {
                         const Z q = c("q");
                         return frac((q + 1) * (q - 5) + 6, 12);
                     }},
                    {"3 | q-1", "((q+1)(q-5)+2)/12", {cond("3 | q-1", [](const Ctx& c) { return (c("q") - 1) % 3 == 0; })},
                     [](const Ctx& c) {
                         const Z q = c("q");
                         return frac((q + 1) * (q - 5) + 2, 12);
                     }}}});

    auto case_is = [](int64_t k) {
        return cond("case " + std::to_string(k), [k](const Ctx& c) { return c("case") == k; });
    };
    out.push_back(
        {FormulaId::R5_6,
         {"q", "case"},
         {},
         {{"1", "p^(h-1)(q-p)/2", {case_is(1)},
           [](const Ctx& c) {
               const Z q = c("q"), ph = ipow(c.p, c.h - 1);
               return frac(ph * (q - c.p), 2);
           }},
          {"2", "p^(h-1)(q-1)/2", {case_is(2), cond("p >= 3", [](const Ctx& c) { return c.p >= 3; })},
           [](const Ctx& c) {
               const Z q = c("q"), ph = ipow(c.p, c.h - 1);
               return frac(ph * (q - 1), 2);
           }},
          {"3", "((q+1)/d-1)(p^(h-1)-1)/2",
           {case_is(3), cond("1 < d | q+1", [](const Ctx& c) { return c("d") > 1 && divides(c("d"), c("q") + 1); })},
           [](const Ctx& c) {
               const Z ph = ipow(c.p, c.h - 1);
               return frac(Z((c("q") + 1) / c("d") - 1) * (ph - 1), 2);
           }},
          {"4", "((q^2-q+1)/d-1)/2",
           {case_is(4), cond("d | q^2-q+1", [](const Ctx& c) { return divides(c("d"), c("q") * c("q") - c("q") + 1); })},
           [](const Ctx& c) { return frac(Z((c("q") * c("q") - c("q") + 1) / c("d") - 1), 2); }},
          {"5", "(q+1-gcd(d,q+1))(q-1)/(2d)",
           {case_is(5), cond("d | q^2-1", [](const Ctx& c) { return divides(c("d"), c("q") * c("q") - 1); })},
           [](const Ctx& c) {
               const Z q = c("q"), d = c("d");
               return frac((q + 1 - gcd64(c("d"), c("q") + 1)) * (q - 1), 2 * d);
           }},
          {"6", "1+(q+1)(q+1-r1-r2-r3)/(2d)",
           {case_is(6), cond("d | q+1", [](const Ctx& c) { return divides(c("d"), c("q") + 1); }),
            cond("r1, r2, r3 | q+1",
                 [](const Ctx& c) {
                     return divides(c("r1"), c("q") + 1) && divides(c("r2"), c("q") + 1) &&
                            divides(c("r3"), c("q") + 1);
                 })},
           [](const Ctx& c) {
               const Z q = c("q"), d = c("d");
               return frac((q + 1) * (q + 1 - c("r1") - c("r2") - c("r3")), 2 * d) + 1;
           }},
          {"7", "(q^2-2q)/8", {case_is(7), cond("p = 2", [](const Ctx& c) { return c.p == 2; })},
           [](const Ctx& c) {
               const Z q = c("q");
               return frac(q * q - 2 * q, 8);
           }}}});

    return out;
}

const std::vector<Formula>& catalog() {
    static const std::vector<Formula> cat = build_catalog();
    return cat;
}

const Formula& lookup(FormulaId id) {
    for (const Formula& f : catalog())
        if (f.id == id) return f;
    fail("UnknownFormula", "formula not in the catalog");
}

std::string trace_text(const std::vector<HypothesisCheck>& trace) {
    std::string s;
    for (const auto& t : trace) s += (s.empty() ? "" : "; ") + t.name + (t.ok ? " ok" : " FAILED");
    return s;
}

}  // namespace

std::string formula_name(FormulaId id) {
    for (const auto& [k, v] : kNames)
        if (k == id) return v;
    return "?";
}

FormulaId parse_formula(const std::string& name) {
    for (const auto& [k, v] : kNames)
        if (v == name) return k;
    fail("UnknownFormula", "unknown formula '" + name + "'");
}

std::vector<FormulaId> all_formulas() {
    std::vector<FormulaId> out;
    for (const auto& kv : kNames) out.push_back(kv.first);
    return out;
}

HypothesisViolated::HypothesisViolated(const std::string& what, std::vector<HypothesisCheck> trace)
    : Error("HypothesisViolated", what + " [" + trace_text(trace) + "]"), trace_(std::move(trace)) {}

std::string Evaluation::value_string() const {
    std::ostringstream os;
    os << numerator(value);
    if (denominator(value) != 1) os << "/" << denominator(value);
    return os.str();
}

std::string Evaluation::to_json() const {
    ojson j;
    j["formula"] = formula_name(id);
    if (!branch.empty()) j["branch"] = branch;
    j["printed"] = printed;
    j["value"] = value_string();
    j["integral"] = integral();
    ojson t = ojson::array();
    for (const auto& h : trace) t.push_back({{"check", h.name}, {"ok", h.ok}});
    j["trace"] = t;
    return j.dump();
}

Evaluation eval_formula(FormulaId id, const Params& params) {
    const Formula& f = lookup(id);
    std::vector<HypothesisCheck> trace;
    for (const std::string& k : f.required)
        if (!params.count(k)) {
            trace.push_back({"parameter " + k + " given", false});
            throw HypothesisViolated("missing parameter " + k, trace);
        }
    Ctx ctx{params};
    auto pp = prime_power(static_cast<uint64_t>(std::max<int64_t>(params.at("q"), 0)));
    trace.push_back({"q is a prime power", pp.has_value()});
    if (!pp) throw HypothesisViolated("q is a prime power", trace);
    ctx.p = pp->first;
    ctx.h = pp->second;

    auto run = [&](const Cond& c) {
        bool ok = false;
        try {
            ok = c.test(ctx);
        } catch (const Error& e) {
            if (e.kind() != "MissingParameter") throw;
        }
        trace.push_back({c.name, ok});
        return ok;
    };
    for (const Cond& c : f.hypotheses)
        if (!run(c)) throw HypothesisViolated(c.name, trace);

    for (const Branch& b : f.branches) {
        const size_t mark = trace.size();
        bool all = true;
        for (const Cond& c : b.when)
            if (!run(c)) {
                all = false;
                break;
            }
        if (!all) {
            trace.resize(mark);
            continue;
        }
        return {id, b.label, b.printed, b.value(ctx), trace};
    }
    throw HypothesisViolated("no branch of " + formula_name(id) + " applies", trace);
}

std::vector<std::pair<std::string, std::string>> formula_branches(FormulaId id) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const Branch& b : lookup(id).branches) out.emplace_back(b.label, b.printed);
    return out;
}

namespace {

const Census kSl25{{1, 1}, {2, 1}, {3, 20}, {4, 30}, {5, 24}, {6, 20}, {10, 24}};
const Census kSl23{{1, 1}, {2, 1}, {3, 8}, {4, 6}, {6, 8}};
const Census kBinaryOctahedral{{1, 1}, {2, 1}, {3, 8}, {4, 18}, {6, 8}, {8, 12}};
const Census kQuaternion{{1, 1}, {2, 1}, {4, 6}};

// Subgroup of SL(2,q) in the m3 model with the given census.
GeneratorSet sl2_subgroup(uint32_t q, uint64_t order, const Census& census) {
    SearchTarget target;
    target.order = order;
    target.census = census;
    return seeded_search(q, target, 1, 4000, {"sl2"}).set;
}

// Adds the central homology diag(a, a, 1) of order m on the m3 model.
GeneratorSet with_center(GeneratorSet g, uint64_t m) {
    if (m > 1) {
        const Field& F = *g.model->field;
        const Elem a = element_of_order(F, m);
        g.gens.push_back(normalize(F, mat_diag(a, a, 1)));
        if (!is_unitary(*g.model, g.gens.back())) fail("HypothesisViolated", "central homology is not unitary");
    }
    g.recipe += "xC" + std::to_string(m);
    return g;
}

}  // namespace

std::optional<GeneratorSet> formula_recipe(FormulaId id, const Params& params) {
    auto get = [&](const std::string& k) -> int64_t {
        auto it = params.find(k);
        if (it == params.end()) fail("MissingParameter", "parameter '" + k + "' is required");
        return it->second;
    };
    auto flag = [&](const std::string& k, int64_t fallback) {
        auto it = params.find(k);
        return it == params.end() ? fallback : it->second;
    };
    const auto q = static_cast<uint32_t>(get("q"));
    switch (id) {
        case FormulaId::P4_1:
            return unipotent_semidirect(q, static_cast<uint32_t>(get("pk")), get("d"));
        case FormulaId::P4_2: {
            GeneratorSet g = sl2_subgroup(q, 120, kSl25);
            g.recipe = "SL(2,5)";
            return g;
        }
        case FormulaId::P4_3:
            return sl2_generators(q, static_cast<uint32_t>(get("qbar")));
        case FormulaId::P4_4: {
            const auto qbar = static_cast<uint32_t>(get("qbar"));
            GeneratorSet g = sl2_generators(q, qbar);
            const Field& F = *g.model->field;
            const Elem xi = element_of_order(F, uint64_t{qbar} * qbar - 1);
            const Elem w = F.pow(xi, (qbar + 1) / 2);
            g.gens.push_back(normalize(F, mat_diag(w, F.inv(w), 1)));
            if (!is_unitary(*g.model, g.gens.back())) fail("HypothesisViolated", "d_pi is not unitary");
            g.recipe = "TL(2," + std::to_string(qbar) + ")";
            return g;
        }
        case FormulaId::P4_5:
            return cyclic_by_cyclic_split(q, get("d"), get("m"), get("commuting") != 0);
        case FormulaId::P4_6:
            return cyclic_by_cyclic_nonsplit(q, get("d"), get("m"), get("commuting") != 0);
        case FormulaId::P4_7:
            if (!flag("central", 1)) return std::nullopt;
            return with_center(sl2_subgroup(q, 120, kSl25), get("m"));
        case FormulaId::P4_8:
            if (!flag("central", 1)) return std::nullopt;
            return with_center(sl2_subgroup(q, 24, kSl23), get("m"));
        case FormulaId::P4_10:
            if (!flag("central", 1)) return std::nullopt;
            return with_center(sl2_subgroup(q, 48, kBinaryOctahedral), get("m"));
        case FormulaId::P4_12:
            if (!flag("central", 1)) return std::nullopt;
            return with_center(sl2_subgroup(q, 8, kQuaternion), get("m"));
        case FormulaId::P4_14: {
            if (!flag("central", 1)) return std::nullopt;
            GeneratorSet g = dicyclic(q, get("n"));
            const uint64_t m = get("m");
            if (m > 1) {
                const Field& F = *g.model->field;
                const Elem a = element_of_order(F, m);
                g.gens.push_back(normalize(F, g.model->tag == ModelTag::m3 ? mat_diag(a, a, 1) : mat_diag(1, 1, a)));
                if (!is_unitary(*g.model, g.gens.back())) fail("HypothesisViolated", "central homology is not unitary");
            }
            g.recipe += "xC" + std::to_string(m);
            return g;
        }
        case FormulaId::P5_1:
            return subfield_pgu(static_cast<uint32_t>(get("qbar")), q);
        case FormulaId::P5_2:
            return cyclic_by_c3(q, get("n"));
        case FormulaId::P5_3:
            return alternating4(q);
        case FormulaId::P5_4:
            return symmetric3(q);
        case FormulaId::R5_6: {
            const int64_t which = get("case");
            auto single = [](GeneratorSet g, const Mat3& m, const std::string& name) {
                g.gens = {m};
                g.recipe = name;
                return g;
            };
            switch (which) {
                case 1:
                    return elation(q);
                case 2:
                case 7: {
                    GeneratorSet s = host("sylow", q);
                    return single(s, s.gens.front(), which == 2 ? "type-D" : "type-D(4)");
                }
                case 3:
                    return e_element(q, get("d"));
                case 4: {
                    GeneratorSet s = singer(q);
                    const uint64_t d = get("d");
                    const uint64_t n = uint64_t{q} * q - q + 1;
                    return single(s, mat_pow(*s.model->field, s.gens[0], n / d), "singer^" + std::to_string(n / d));
                }
                case 5:
                    return b2_element(q, get("d"));
                default:
                    return std::nullopt;
            }
        }
    }
    return std::nullopt;
}

std::string Crosscheck::to_json() const {
    ojson j;
    j["formula"] = ojson::parse(formula.to_json());
    j["engine"] = ojson::parse(engine.to_json());
    j["match"] = match;
    return j.dump();
}

Crosscheck crosscheck(FormulaId id, const Params& params, const GeneratorSet& gens) {
    Evaluation ev = eval_formula(id, params);
    GenusReport rep = quotient_genus(closure(gens.model, gens.gens));
    const bool match = ev.integral() && Rational(rep.genus) == ev.value;
    return {std::move(ev), std::move(rep), match};
}

}  // namespace uqg
