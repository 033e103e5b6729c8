// Certifies a few polynomials and cross-checks one against the oracle.

#include <absirr.hpp>

#include <iostream>

int main() {
    using namespace absirr;

    const FieldSpec gf2 = parse_field_spec("GF(2)");
    for (const char* text : {"x^2 + xy + y^2 + x", "x^10 + x^9y + y^10 + x^7 + y^5 + x + y", "x^3 + y^3",
                             "x^2 + y^2 + x"}) {
        const Polynomial f = parse_polynomial(text, gf2);
        std::cout << "== " << format_polynomial(f) << '\n' << certificate_text(f, analyze(f));
    }

    const FieldSpec gf3 = parse_field_spec("GF(3)");
    const Polynomial g = parse_polynomial("x^2 + y^2", gf3);
    const auto report = oracle::count_absolute_factors(g);
    std::cout << "== oracle: " << format_polynomial(g) << " splits into " << report.max_factor_count
              << " factors over " << to_string(*report.sample_field) << ":";
    for (const auto& p : *report.sample_factorization) std::cout << " (" << format_polynomial(p) << ")";
    std::cout << '\n';
}
