#include "lcd4/catalog.hpp"

#include <initializer_list>
#include <stdexcept>
#include <utility>

#include "lcd4/code_io.hpp"
#include "lcd4/gf4.hpp"

namespace lcd4::catalog {
namespace {

#include "catalog_data.inc"

WeightEnumerator make_enumerator(int n, std::initializer_list<std::pair<int, long long>> pairs) {
    WeightEnumerator w;
    w.counts.assign(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& [i, a] : pairs) {
        w.counts.at(static_cast<std::size_t>(i)) = a;
    }
    return w;
}

Certificate explicit_entry(std::string name, const char* block_text, int n, int k, int d,
                           std::optional<WeightEnumerator> enumerator = std::nullopt) {
    Certificate cert;
    cert.name = std::move(name);
    cert.how = Construction::explicit_matrix;
    cert.block = parse_matrix(block_text);
    cert.n = n;
    cert.k = k;
    cert.d = d;
    cert.enumerator = std::move(enumerator);
    return cert;
}

Certificate derived_entry(std::string name, Construction how, std::string base, int coordinate,
                          int n, int k, int d,
                          std::optional<WeightEnumerator> enumerator = std::nullopt) {
    Certificate cert;
    cert.name = std::move(name);
    cert.how = how;
    cert.base = std::move(base);
    cert.coordinate = coordinate;
    cert.n = n;
    cert.k = k;
    cert.d = d;
    cert.enumerator = std::move(enumerator);
    return cert;
}

std::vector<Certificate> make_certificates() {
    std::vector<Certificate> all;

    all.push_back(explicit_entry(
        "C15", kM15, 15, 7, 7,
        make_enumerator(15, {{0, 1},
                             {7, 336},
                             {8, 756},
                             {9, 1323},
                             {10, 2415},
                             {11, 4095},
                             {12, 3759},
                             {13, 2289},
                             {14, 1197},
                             {15, 213}})));
    all.push_back(derived_entry(
        "C14", Construction::shorten_of, "C15", 4, 14, 6, 7,
        make_enumerator(14, {{0, 1},
                             {7, 210},
                             {8, 252},
                             {9, 588},
                             {10, 945},
                             {11, 882},
                             {12, 819},
                             {13, 336},
                             {14, 63}})));
    all.push_back(explicit_entry(
        "C17_1", kM17_1, 17, 6, 9,
        make_enumerator(17, {{0, 1},
                             {9, 201},
                             {10, 279},
                             {11, 492},
                             {12, 777},
                             {13, 840},
                             {14, 849},
                             {15, 456},
                             {16, 174},
                             {17, 27}})));
    all.push_back(explicit_entry(
        "C17_2", kM17_2, 17, 7, 8,
        make_enumerator(17, {{0, 1},
                             {8, 204},
                             {9, 549},
                             {10, 1053},
                             {11, 1977},
                             {12, 3117},
                             {13, 3711},
                             {14, 3111},
                             {15, 1875},
                             {16, 642},
                             {17, 144}})));
    all.push_back(explicit_entry(
        "C20", kM20, 20, 7, 10,
        make_enumerator(20, {{0, 1},
                             {10, 297},
                             {11, 441},
                             {12, 978},
                             {13, 1767},
                             {14, 2685},
                             {15, 3381},
                             {16, 3078},
                             {17, 2349},
                             {18, 1038},
                             {19, 318},
                             {20, 51}})));
    all.push_back(derived_entry(
        "C19", Construction::puncture_of, "C20", 1, 19, 7, 9,
        make_enumerator(19, {{0, 1},
                             {9, 111},
                             {10, 423},
                             {11, 801},
                             {12, 1509},
                             {13, 2595},
                             {14, 3291},
                             {15, 3315},
                             {16, 2502},
                             {17, 1362},
                             {18, 402},
                             {19, 72}})));
    all.push_back(explicit_entry(
        "D12", kN12, 12, 6, 5,
        make_enumerator(12, {{0, 1},
                             {5, 72},
                             {6, 177},
                             {7, 378},
                             {8, 792},
                             {9, 1044},
                             {10, 999},
                             {11, 522},
                             {12, 111}})));
    all.push_back(explicit_entry(
        "D20", kN20, 20, 8, 9,
        make_enumerator(20, {{0, 1},
                             {9, 288},
                             {10, 714},
                             {11, 1725},
                             {12, 3888},
                             {13, 7272},
                             {14, 11208},
                             {15, 13338},
                             {16, 12423},
                             {17, 8640},
                             {18, 4446},
                             {19, 1377},
                             {20, 216}})));

    // E18's block is stored as its transpose (3 rows of 15), so flip it here.
    {
        Certificate cert;
        cert.name = "E18";
        cert.how = Construction::explicit_matrix;
        cert.block = transpose(parse_matrix(kL18T));
        cert.n = 18;
        cert.k = 15;
        cert.d = 3;
        all.push_back(std::move(cert));
    }

    // Chain of shortenings, each one step down in length while keeping
    // dimension n-3 and minimum weight 3.
    struct ChainStep {
        const char* name;
        const char* base;
        int coordinate;
        int n;
    };
    const ChainStep chain[] = {
        {"E17", "E18", 1, 17}, {"E16", "E17", 2, 16}, {"E15", "E16", 1, 15},
        {"E14", "E15", 4, 14}, {"E13", "E14", 1, 13}, {"E12", "E13", 2, 12},
        {"E11", "E12", 1, 11}, {"E10", "E11", 2, 10}, {"E9", "E10", 2, 9},
    };
    for (const auto& step : chain) {
        all.push_back(derived_entry(step.name, Construction::shorten_of, step.base,
                                    step.coordinate, step.n, step.n - 3, 3));
    }

    return all;
}

}  // namespace

const std::vector<Certificate>& certificates() {
    static const std::vector<Certificate> all = make_certificates();
    return all;
}

const Certificate& certificate(const std::string& name) {
    for (const auto& cert : certificates()) {
        if (cert.name == name) {
            return cert;
        }
    }
    throw std::invalid_argument("catalog: unknown code name '" + name + "'");
}

LinearCode build(const std::string& name) {
    const Certificate& cert = certificate(name);
    switch (cert.how) {
        case Construction::explicit_matrix: {
            GF4Matrix gen = hstack(GF4Matrix::identity(static_cast<std::size_t>(cert.k)), cert.block);
            return LinearCode::from_generator(gen);
        }
        case Construction::shorten_of:
            return shorten(build(cert.base), cert.coordinate);
        case Construction::puncture_of:
            return puncture(build(cert.base), cert.coordinate);
    }
    throw std::logic_error("catalog: unhandled construction");
}

VerificationReport verify_code_against(const Certificate& cert, const LinearCode& code) {
    VerificationReport report;
    report.name = cert.name;
    report.n = code.n();
    report.k = code.k();
    report.lcd = is_hermitian_lcd(code);

    if (cert.enumerator.has_value()) {
        WeightEnumerator measured = weight_enumerator(code);
        report.d = static_cast<int>(measured.min_positive());
        report.enumerator_ok = (measured.counts == cert.enumerator->counts);
    } else {
        report.d = static_cast<int>(minimum_weight(code));
    }

    report.pass = report.n == cert.n && report.k == cert.k && report.d == cert.d &&
                  report.lcd == cert.lcd &&
                  (!report.enumerator_ok.has_value() || *report.enumerator_ok);
    return report;
}

VerificationReport verify(const std::string& name) {
    const Certificate& cert = certificate(name);
    return verify_code_against(cert, build(name));
}

std::vector<VerificationReport> verify_all() {
    std::vector<VerificationReport> reports;
    for (const auto& cert : certificates()) {
        reports.push_back(verify_code_against(cert, build(cert.name)));
    }
    return reports;
}

}  // namespace lcd4::catalog
